import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qshear.builtins import load_surface
from qshear.holonomy import (Mat2, compile_word, parse_word, shear_from_lambda, trace, trace_numeric,
                             turn_matrix)
from qshear.qtorus import eval_numeric, is_hermitian, substitute
from qshear.suites import QUAD_LAMBDAS, QUAD_WORDS, closed_curves
from qshear.surface import dual_lamination

QUAD = load_surface("quad014")


def test_parse_word_round_trip():
    w = parse_word("K X(pi1) R X(Z) L F(W1,2) Finv(W2,1) X(pi3)")
    assert parse_word(str(w)) == w


@pytest.mark.parametrize("text", ["", "K X(pi1) Q", "F(W,0)", "X(pi1"])
def test_parse_word_errors(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_turn_matrices():
    b = QUAD.basis
    r, l = turn_matrix(b, "R"), turn_matrix(b, "L")
    one, zero = b.one(), b.zero()
    minus = Mat2(-one, zero, zero, -one)
    assert r * l == minus
    assert r * r * r == minus
    assert r.det() == one and l.det() == one


@pytest.mark.parametrize("key", sorted(QUAD_WORDS))
def test_quadrangle_lambdas(key):
    val = trace(QUAD_WORDS[key], QUAD.basis, "quantum")
    want = QUAD.basis.zero()
    for part in QUAD_LAMBDAS[key]:
        want = want + QUAD.basis.mono(part)
    assert val == want
    assert is_hermitian(val)


def test_cli_example_word():
    val = trace("K X(pi2) R X(pi1)", QUAD.basis, "quantum")
    assert val == QUAD.basis.mono({"pi1": 0.5, "pi2": 0.5})


@pytest.mark.parametrize("name", ["s111", "pants1", "torus11"])
def test_exact_and_numeric_traces_agree(name):
    g = load_surface(name)
    rng = np.random.default_rng(3)
    for darts, w in closed_curves(g, 6, 8):
        vals = {y: float(x) for y, x in zip(g.generators, rng.uniform(-1, 1, len(g.generators)))}
        om = {o: 1.3 for o in g.omegas}
        exact = eval_numeric(trace(w, g.basis), vals, om)
        assert abs(exact.real - trace_numeric(w, vals, om)) < 1e-9 * max(1, abs(exact))


@pytest.mark.parametrize("name", ["s111", "pants1", "torus11"])
def test_closed_quantum_traces_are_positive_and_specialise(name):
    g = load_surface(name)
    for _, w in closed_curves(g, 8, 20):
        qt = trace(w, g.basis, "quantum")
        assert qt.is_positive()
        assert qt.classical() == trace(w, g.basis)


@pytest.mark.parametrize("name", ["quad014", "s111", "tri023", "pants1"])
def test_arc_traces_are_positive_hermitian_monomials(name):
    g = load_surface(name)
    lam = dual_lamination(g)
    for a in lam.arcs:
        t = trace(lam.words[a], g.basis, "quantum")
        assert t == lam.lambdas[a] and t.is_positive() and is_hermitian(t)


def test_shear_from_lambda_inverts():
    g = load_surface("s111")
    lam = dual_lamination(g)
    names = list(lam.arcs)
    images = shear_from_lambda(names, [lam.lambdas[a] for a in names])
    back = {a: substitute(lam.lambdas[a], images) for a in names}
    for a in names:
        assert back[a] == back[a].basis.gen(a)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(["L", "R"]), min_size=1, max_size=6))
def test_holonomy_has_unit_determinant(turns):
    b = QUAD.basis
    word = " ".join(f"X(Z) {t}" for t in turns)
    assert compile_word(word, b).det() == b.one()
