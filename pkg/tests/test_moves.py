import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qshear.brackets import check_homogeneous, incidence_from_eps, incidence_index, seed_from_graph
from qshear.builtins import load_surface
from qshear.holonomy import trace, trace_numeric
from qshear.moves import (FlipError, Transcript, exchange_numeric, flip, mutate_lambda, random_point,
                          replay, tropical_inner, tropical_mutate)
from qshear.qtorus import eval_numeric, is_hermitian
from qshear.suites import QUAD_WORDS, closed_curves


@pytest.mark.parametrize("name, edge", [("s111", "Z1"), ("s111", "Z3"), ("pants1", "Y1"),
                                        ("pants1", "Y2"), ("torus11", "Z1"), ("s111", "Z4")])
def test_flip_preserves_closed_geodesics(name, edge):
    g = load_surface(name)
    ev = flip(g, edge)
    rng = np.random.default_rng(7)
    curves = closed_curves(g, 8, 10)
    assert curves
    for _ in range(5):
        vals, om = random_point(g, rng)
        new = ev.apply(vals, om)
        for darts, w in curves:
            nw = ev.transport_word(darts, True)[1]
            a, b = trace_numeric(w, vals, om), trace_numeric(nw, new, om)
            assert abs(a - b) <= 1e-9 * max(1.0, abs(a))


@pytest.mark.parametrize("name, edge", [("s111", "Z2"), ("pants1", "Y1"), ("quad014", "Z")])
def test_flip_twice_is_identity(name, edge):
    g = load_surface(name)
    ev = flip(g, edge)
    ev2 = flip(ev.after, edge)
    vals, om = random_point(g, np.random.default_rng(1))
    again = ev2.apply(ev.apply(vals, om), om)
    assert all(abs(vals[k] - again[k]) < 1e-9 for k in vals)


def test_flip_rejects_open_and_unknown_edges():
    g = load_surface("quad014")
    with pytest.raises(FlipError):
        flip(g, "pi1")
    with pytest.raises(FlipError):
        flip(g, "nope")


def test_quadrangle_mutation_is_the_other_diagonal():
    g = load_surface("quad014")
    seed = seed_from_graph(g)
    _, name, val = mutate_lambda(seed, "l_Z")
    assert val == trace(QUAD_WORDS["f"], g.basis, "quantum")
    assert is_hermitian(val) and val.is_positive()
    # Ptolemy: l_e l_f = l_a l_c + l_b l_d classically
    lam = {k: trace(w, g.basis) for k, w in QUAD_WORDS.items()}
    rng = np.random.default_rng(0)
    vals = {y: float(x) for y, x in zip(g.generators, rng.uniform(-1, 1, 5))}
    ev = {k: eval_numeric(v, vals).real for k, v in lam.items()}
    assert abs(ev["e"] * ev["f"] - ev["a"] * ev["c"] - ev["b"] * ev["d"]) < 1e-9
    assert abs(exchange_numeric("inner", ev["a"], ev["b"], ev["c"], ev["d"], ev["e"]) - ev["f"]) < 1e-9


def test_frozen_arcs_do_not_mutate():
    seed = seed_from_graph(load_surface("quad014"))
    with pytest.raises(FlipError):
        mutate_lambda(seed, "l_pi1")


@pytest.mark.parametrize("name", ["quad014", "s111", "tri023", "pants1"])
def test_mutated_seed_stays_homogeneous_up_to_ordering(name):
    seed = seed_from_graph(load_surface(name))
    for arc in seed.mutable():
        nxt, new, val = mutate_lambda(seed, arc)
        assert val.is_positive()
        pairs = check_homogeneous(nxt)
        assert all(p.reversed_ok for p in pairs)
        assert all(incidence_index(nxt.ends[p.i], nxt.ends[p.j]) == incidence_from_eps(nxt, p.i, p.j)
                   for p in pairs)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=5, max_size=5))
def test_tropical_is_the_log_limit_of_ptolemy(ls):
    la, lb, lc, ld, le = ls
    t = 20.0
    f = np.log(exchange_numeric("inner", *(np.exp(t * x) for x in (la, lb, lc, ld, le)))) / t
    assert abs(f - tropical_inner(la, lb, lc, ld, le)) < 0.05


def test_tropical_mutate_validates_lengths():
    seed = seed_from_graph(load_surface("quad014"))
    lengths = {a: 1 for a in seed.names}
    out = tropical_mutate(seed, lengths, "l_Z")
    assert out["l_Z'"] == 1
    with pytest.raises(ValueError):
        tropical_mutate(seed, dict(lengths, l_Z=-1), "l_Z")


def test_transcript_round_trip_and_replay():
    t = Transcript("s111", [("Z1", "inner"), ("Z2", "inner"), ("Z1", "inner")])
    assert Transcript.from_text(t.to_text()) == t
    events = replay(load_surface("s111"), t)
    assert len(events) == 3
    with pytest.raises(ValueError):
        Transcript.from_text("flip Z1 inner\n")
    with pytest.raises(FlipError):
        replay(load_surface("pants1"), Transcript("pants1", [("Y1", "inner")]))
