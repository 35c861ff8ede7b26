import pytest

from qshear.builtins import BUILTINS, builtin_surfaces, builtin_text, load_surface
from qshear.brackets import verify_casimir
from qshear.qtorus import poisson
from qshear.surface import SurfaceError, casimirs, dual_lamination, parse_surface, validate

QUAD = builtin_text("quad014")


def test_registry():
    graphs = builtin_surfaces()
    assert set(graphs) == set(BUILTINS)
    assert set(graphs["quad014"].generators) == {"pi1", "pi2", "pi3", "pi4", "Z"}
    assert set(graphs["s111"].generators) == {"pi", "Z1", "Z2", "Z3", "Z4"}
    with pytest.raises(KeyError):
        builtin_text("nope")
    with pytest.raises(SurfaceError):
        load_surface("nope")


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtins_validate(name):
    rep = validate(load_surface(name))
    assert rep.ok, rep.problems


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_eps_antisymmetric_and_mirror_negates(name):
    g = load_surface(name)
    eps = g.basis.eps
    n = len(eps)
    assert all(eps[i][j] == -eps[j][i] for i in range(n) for j in range(n))
    m = g.mirrored().basis.eps
    assert all(m[i][j] == -eps[i][j] for i in range(n) for j in range(n))


def test_quadrangle_brackets():
    b = load_surface("quad014").basis
    one = {("pi1", "pi2"), ("pi2", "Z"), ("Z", "pi1"), ("pi3", "pi4"), ("pi4", "Z"), ("Z", "pi3")}
    for x in b.names:
        for y in b.names:
            want = 1 if (x, y) in one else -1 if (y, x) in one else 0
            assert b.eps[b.index(x)][b.index(y)] == want, (x, y)


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_casimirs_are_central(name):
    g = load_surface(name)
    for c in casimirs(g):
        assert verify_casimir(c)
        for y in g.generators:
            assert poisson(c, g.basis.gen(y)) == g.basis.zero()


@pytest.mark.parametrize("name", ["quad014", "s111", "tri023", "pants1"])
def test_dual_lamination_size_and_monomials(name):
    g = load_surface(name)
    lam = dual_lamination(g)
    assert len(lam.arcs) + len(g.omegas) == 6 * g.g - 6 + 3 * g.s + 2 * g.n
    assert all(v.is_monomial() for v in lam.lambdas.values())


def test_round_trip_text():
    g = load_surface("s111")
    again = parse_surface(g.to_text(), name="s111")
    assert again.basis == g.basis


@pytest.mark.parametrize("bad, where", [
    (QUAD.replace("edge pi1 open", "edge pi1 opne"), "unknown edge kind"),
    (QUAD + "vertex v1 trivalent\n", "duplicate vertex"),
    (QUAD.replace("surface g=0", "surfac g=0"), "unknown keyword"),
    ("vertex v trivalent\n", "missing surface header"),
])
def test_parser_errors(bad, where):
    with pytest.raises(SurfaceError, match=where):
        parse_surface(bad)


def test_parser_reports_line_and_column():
    text = QUAD.rstrip("\n") + "\nedge Q inner v9.0 v1.0\n"
    with pytest.raises(SurfaceError, match=r"line \d+, column \d+"):
        parse_surface(text)


def test_open_edge_to_trivalent_vertex_rejected():
    text = "\n".join(l.replace(" c1", " v2") if l.startswith("edge pi1") else l for l in QUAD.splitlines())
    with pytest.raises(SurfaceError):
        parse_surface(text)


def test_wrong_counts_fail_validation():
    text = QUAD.replace("n=4", "n=3")
    g = parse_surface(text, strict=False)
    assert not validate(g).ok
    with pytest.raises(SurfaceError, match="cusp count"):
        parse_surface(text)
