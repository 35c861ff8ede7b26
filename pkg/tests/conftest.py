from fractions import Fraction

from hypothesis import strategies as st

from qshear.qtorus import Basis, QLaurent

# three generators with a nondegenerate-ish commutator pattern
BASIS = Basis(("Y1", "Y2", "Z"), ((0, 1, -1), (-1, 0, 2), (1, -2, 0)))
CLASSICAL = Basis(("A", "B"), ((0, 1), (-1, 0)))


def _terms(basis, with_q=True, with_omega=True):
    n = len(basis)
    key = st.tuples(
        st.tuples(*[st.integers(-3, 3)] * n),
        st.integers(-4, 4) if with_q else st.just(0),
        st.sampled_from([(), (("w", 1),), (("w", 2),)]) if with_omega else st.just(()),
    )
    coeff = st.integers(-3, 3).filter(bool).map(Fraction)
    return st.dictionaries(key, coeff, max_size=4)


def laurent(basis=BASIS, **kw):
    return _terms(basis, **kw).map(lambda d: QLaurent(basis, d))


ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES, key=int):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
