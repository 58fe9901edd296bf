from fractions import Fraction

from hypothesis import strategies as st

from hilbsign.intpoly import Polynomial, binomial_poly

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small_fracs, max_size=6).map(Polynomial)


@st.composite
def integer_valued_polys(draw, max_degree=8, bound=30):
    """Integer combinations of C(x+i, i); every integer-valued poly is one."""
    d = draw(st.integers(0, max_degree))
    cs = draw(st.lists(st.integers(-bound, bound), min_size=d + 1, max_size=d + 1))
    p = Polynomial([cs[0]])
    for i in range(1, d + 1):
        p = p + binomial_poly(i, i) * cs[i]
    return p


def frac(s) -> Fraction:
    return Fraction(s)


@st.composite
def certified_hilbert_polys(draw):
    """Hilbert polynomials from known families: realizer output, threshold
    polynomials, and t*x^d monomials accepted by the monomial case split."""
    from hilbsign.macaulay import classify_monomial
    from hilbsign.realizer import LowerCoefficients, leading_bound, realize_signs

    kind = draw(st.sampled_from(["signs", "threshold", "monomial"]))
    if kind == "signs":
        s = draw(st.lists(st.sampled_from([-1, 0, 1]), min_size=1, max_size=4))
        return realize_signs(s)
    if kind == "threshold":
        a = draw(st.lists(st.integers(-9, 9), min_size=1, max_size=3))
        extra = draw(st.integers(0, 5))
        return LowerCoefficients(tuple(a)).with_leading(leading_bound(a) + extra)
    d = draw(st.integers(0, 4))
    t = draw(st.integers(1, 12).filter(lambda t: classify_monomial(t, d)))
    return Polynomial.monomial(t, d)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
