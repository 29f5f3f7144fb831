"""Forms: construction, parsing, substitution and the differentiation action."""

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bilor import (
    BivariateForm,
    CoordChange,
    DegreeError,
    FormatError,
    LinearForm,
    PreconditionError,
    ShapeError,
    derive,
    format_form,
    from_monomial_coeffs,
    monomial,
    parse_form,
    substitute,
    symmetric_mix,
)

from support import random_form

fractions_st = st.fractions(min_value=-50, max_value=50, max_denominator=8)
small_forms = st.integers(min_value=1, max_value=6).flatmap(
    lambda d: st.lists(fractions_st, min_size=d + 1, max_size=d + 1).map(
        lambda cs: BivariateForm(d, cs)
    )
)


def test_normalized_vs_monomial_coefficients():
    f = from_monomial_coeffs([0, 1, 1, 1, 0])
    assert f.degree == 4
    assert f.coeffs == (0, Fraction(1, 4), Fraction(1, 6), Fraction(1, 4), 0)
    assert list(f.monomial_coeffs()) == [0, 1, 1, 1, 0]


def test_coefficient_count_must_match_degree():
    with pytest.raises(ShapeError):
        BivariateForm(3, [1, 2, 3])
    with pytest.raises(DegreeError):
        BivariateForm(-1, [])


def test_monomial_and_evaluate():
    f = monomial(5, 2)  # X^2 Y^3
    assert f.evaluate(2, 3) == 4 * 27
    assert f.coeffs[2] == Fraction(1, 10)
    assert monomial(3, 0).evaluate(7, 2) == 8


def test_evaluate_matches_expansion():
    f = from_monomial_coeffs([1, 0, 0, 1])  # X^3 + Y^3
    assert f.evaluate(2, 3) == 8 + 27
    assert f.evaluate(Fraction(1, 2), 1) == Fraction(9, 8)


def test_arithmetic_on_forms():
    f = from_monomial_coeffs([1, 2, 1])
    g = from_monomial_coeffs([0, 1, 3])
    assert (f + g).monomial_coeffs() == (1, 3, 4)
    assert (f - g).monomial_coeffs() == (1, 1, -2)
    assert (3 * f).monomial_coeffs() == (3, 6, 3)
    assert (-f).monomial_coeffs() == (-1, -2, -1)
    with pytest.raises(DegreeError):
        f + from_monomial_coeffs([1, 1])


def test_parse_form_conventions():
    f, conv = parse_form("monomial: 0, 1, 1, 1, 0")
    assert conv == "monomial"
    assert f == from_monomial_coeffs([0, 1, 1, 1, 0])
    g, conv = parse_form("4: 1, 4, 5, 2, 0")
    assert conv == "normalized"
    assert g.coeffs == (1, 4, 5, 2, 0)
    h, conv = parse_form("c: 1, 4, 5, 2, 0")
    assert conv == "normalized"
    assert h == g
    k, conv = parse_form("1/2, -3, 7")
    assert conv == "normalized"
    assert k.coeffs == (Fraction(1, 2), -3, 7)


def test_parse_form_rejects_garbage():
    for bad in ("", "4: 1,2", "monomial:", "3: a,b,c,d", "x: 1,2"):
        with pytest.raises(FormatError):
            parse_form(bad)


@given(small_forms)
def test_format_parse_round_trip(f):
    g, conv = parse_form(format_form(f))
    assert conv == "normalized"
    assert g == f
    h, conv = parse_form(format_form(f, monomial_style=True))
    assert conv == "monomial"
    assert h == f


def test_linear_form_and_point():
    ell = LinearForm(2, Fraction(1, 3))
    assert ell.point() == (2, Fraction(1, 3))
    assert not ell.is_zero
    assert LinearForm(0, 0).is_zero


def test_substitute_identity_and_composition():
    rng = Random(7)
    ident = CoordChange.identity()
    for d in (1, 2, 4, 5):
        f = random_form(rng, d)
        assert substitute(f, ident) == f
        a = CoordChange(1, 2, 0, 1)
        b = CoordChange(3, -1, 1, 1)
        lhs = substitute(substitute(f, a), b)
        rhs = substitute(f, a.compose(b))
        assert lhs == rhs


@given(small_forms, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_substitution_is_evaluation(f, p, q, r, s):
    """(sigma . F)(x, y) must equal F(p x + r y, q x + s y) pointwise."""
    sigma = CoordChange(p, q, r, s)
    g = substitute(f, sigma)
    for x, y in ((1, 1), (2, -1), (Fraction(1, 2), 3)):
        assert g.evaluate(x, y) == f.evaluate(p * x + r * y, q * x + s * y)


def test_from_generators_sends_coordinate_points_to_the_generators():
    ell1 = LinearForm(-1, -1)
    ell2 = LinearForm(2, 3)
    sigma = CoordChange.from_generators(ell1, ell2)
    assert (sigma.p, sigma.q) == ell1.point()
    assert (sigma.r, sigma.s) == ell2.point()
    f = from_monomial_coeffs([1, 0, 2, 1])
    g = substitute(f, sigma)
    assert g.evaluate(1, 0) == f.evaluate(*ell1.point())
    assert g.evaluate(0, 1) == f.evaluate(*ell2.point())
    assert sigma.det() == -1 * 3 - (-1) * 2
    with pytest.raises(PreconditionError):
        CoordChange.from_generators(LinearForm(1, 2), LinearForm(2, 4))


def test_symmetric_mix_is_the_expected_substitution():
    f = from_monomial_coeffs([1, 0, 0, 1])
    t = Fraction(1, 2)
    assert symmetric_mix(f, t) == substitute(f, CoordChange(1, t, t, 1))


def test_derive_basic_partials():
    f = from_monomial_coeffs([1, 0, 0, 1])  # X^3 + Y^3
    fx = derive(f, [(1, 0, 1)])
    fy = derive(f, [(0, 1, 1)])
    assert fx.monomial_coeffs() == (0, 0, 3)  # 3 X^2
    assert fy.monomial_coeffs() == (3, 0, 0)  # 3 Y^2
    top = derive(f, [(3, 0, 1)])
    assert top.degree == 0 and top.coeffs == (6,)


def test_derive_on_normalized_coordinates():
    """d/dX shifts normalized coefficients: c'_k = d * c_{k+1}."""
    rng = Random(11)
    for d in (2, 3, 5):
        f = random_form(rng, d)
        fx = derive(f, [(1, 0, 1)])
        assert fx.coeffs == tuple(d * c for c in f.coeffs[1:])
        fy = derive(f, [(0, 1, 1)])
        assert fy.coeffs == tuple(d * c for c in f.coeffs[:-1])


def test_derive_rejects_bad_term_data():
    f = from_monomial_coeffs([1, 2, 1])
    with pytest.raises(PreconditionError):
        derive(f, [])
    with pytest.raises(DegreeError):
        derive(f, [(2, 1, 1)])
    with pytest.raises(DegreeError):
        derive(f, [(1, 0, 1), (0, 2, 1)])  # mixed degrees


@given(small_forms, st.integers(0, 2), st.integers(0, 2))
def test_derive_commutes(f, a, b):
    if a + b > f.degree or a + b == 0:
        return
    one_shot = derive(f, [(a, b, 1)])
    stepwise = f
    for _ in range(a):
        stepwise = derive(stepwise, [(1, 0, 1)])
    for _ in range(b):
        stepwise = derive(stepwise, [(0, 1, 1)])
    assert one_shot == stepwise


def test_str_mentions_degree_and_coefficients():
    f = BivariateForm(2, [1, Fraction(1, 2), 0])
    text = str(f)
    assert "2" in text and "1/2" in text
