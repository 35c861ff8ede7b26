import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BASIS, CLASSICAL, laurent
from qshear.qtorus import (Basis, adjoint, cmul, commutator, eval_numeric, hermitian_shift,
                           is_hermitian, parse, poisson, qmul)

elems = laurent()
classical = laurent(CLASSICAL, with_q=False, with_omega=False)


def test_generators_q_commute():
    y1, y2 = BASIS.gen("Y1"), BASIS.gen("Y2")
    # e^Y1 e^Y2 = q^(eps) e^(Y1+Y2) with eps = 1, so the two orders differ by q^2
    assert y1 * y2 == BASIS.q(4) * BASIS.mono({"Y1": 1, "Y2": 1})
    assert y2 * y1 == BASIS.q(-4) * BASIS.mono({"Y1": 1, "Y2": 1})
    assert y1 * y2 == BASIS.q(8) * (y2 * y1)


def test_half_exponents_give_quarter_powers():
    a, b = BASIS.gen("Y1", 0.5), BASIS.gen("Y2", 0.5)
    assert a * b == BASIS.q(1) * BASIS.mono({"Y1": 0.5, "Y2": 0.5})
    assert a * b == BASIS.q(2) * (b * a)


def test_commuting_case_adds_exponents():
    a = BASIS.mono({"Y1": 1, "Y2": 1, "Z": 1}, coeff=3)
    b = BASIS.mono({"Y1": 1}, coeff=2)
    # (1,1,1) eps (1,0,0) = -1 + 1 = 0
    assert a * b == BASIS.mono({"Y1": 2, "Y2": 1, "Z": 1}, coeff=6)


def test_basis_rejects_bad_eps():
    with pytest.raises(ValueError):
        Basis(("a", "b"), ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Basis(("a", "a"), ((0, 0), (0, 0)))


def test_basis_mismatch_rejected():
    with pytest.raises(ValueError):
        qmul(BASIS.gen("Y1"), CLASSICAL.gen("A"))


def test_inverse_of_monomial():
    m = BASIS.mono({"Y1": 1, "Z": -0.5}, coeff=2, qpow=3)
    assert m * m.inverse() == BASIS.one()
    assert m.inverse() * m == BASIS.one()
    with pytest.raises(ValueError):
        (m + BASIS.one()).inverse()


@settings(max_examples=60, deadline=None)
@given(elems, elems, elems)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(elems, elems, elems)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=60, deadline=None)
@given(elems, elems)
def test_adjoint_reverses_products(a, b):
    assert adjoint(a * b) == adjoint(b) * adjoint(a)
    assert adjoint(adjoint(a)) == a


@settings(max_examples=60, deadline=None)
@given(elems, elems)
def test_classical_specialisation_is_a_homomorphism(a, b):
    assert (a * b).classical() == cmul(a.classical(), b.classical())
    assert (a * b).classical() == (b * a).classical()


@settings(max_examples=60, deadline=None)
@given(elems)
def test_text_round_trip(a):
    assert parse(a.to_text(), BASIS) == a


@settings(max_examples=40, deadline=None)
@given(classical, classical, classical)
def test_poisson_jacobi_and_leibniz(f, g, h):
    jac = poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g))
    assert jac == CLASSICAL.zero()
    assert poisson(f, g) == -poisson(g, f)
    assert poisson(f, cmul(g, h)) == cmul(poisson(f, g), h) + cmul(g, poisson(f, h))


@settings(max_examples=40, deadline=None)
@given(classical, classical)
def test_commutator_is_first_order_poisson(f, g):
    # for monomials: q^(x/4) - q^(-x/4) ~ (x/2) log q, and {.,.} carries x/4
    q = 1.0 + 1e-6
    vals = {"A": 0.3, "B": -0.2}
    com = eval_numeric(commutator(f, g), vals, q=q)
    pb = eval_numeric(poisson(f, g), vals)
    assert abs(com / (2 * (q - 1)) - pb) <= 1e-4 * (1 + abs(pb))


@settings(max_examples=60, deadline=None)
@given(elems)
def test_hermitian_shift_makes_hermitian(a):
    s = hermitian_shift(a)
    if s is not None:
        assert is_hermitian(a * BASIS.q(s))


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_weyl_monomials_are_hermitian(i, j):
    assert is_hermitian(BASIS.mono({"Y1": i, "Y2": j}))


def test_parse_errors_carry_column():
    with pytest.raises(ValueError, match="column"):
        parse("[1] exp((1*Y1)/2) - nonsense", BASIS)
