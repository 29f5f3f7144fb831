"""Shared generators for the randomized suites.

Everything takes an explicit `random.Random` so each test controls its own
seed and repeated runs exercise identical trials.
"""

from fractions import Fraction

from bilor import BivariateForm, from_monomial_coeffs


def rand_fraction(rng, lo=-9, hi=9, den=6) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_positive_fraction(rng, hi=9, den=6) -> Fraction:
    return Fraction(rng.randint(1, hi), rng.randint(1, den))


def rand_nonneg_fraction(rng, hi=9, den=6) -> Fraction:
    return Fraction(rng.randint(0, hi), rng.randint(1, den))


def random_form(rng, degree: int) -> BivariateForm:
    return BivariateForm(degree, [rand_fraction(rng) for _ in range(degree + 1)])


def random_matrix(rng, rows: int, cols: int, lo=-9, hi=9, den=6):
    return [[rand_fraction(rng, lo, hi, den) for _ in range(cols)] for _ in range(rows)]


def random_symmetric(rng, n: int):
    m = [[Fraction(0)] * n for _ in range(n)]
    for p in range(n):
        for q in range(p, n):
            m[p][q] = m[q][p] = rand_fraction(rng)
    return m


def cauchy_matrix(rng, rows: int, cols: int):
    """A totally positive matrix: entries 1/(x_p + y_q) with increasing
    positive nodes.  Standard source of exactly-TP test instances."""
    xs, ys = [], []
    acc = Fraction(0)
    for _ in range(rows):
        acc += rand_positive_fraction(rng, 4, 3)
        xs.append(acc)
    acc = Fraction(0)
    for _ in range(cols):
        acc += rand_positive_fraction(rng, 4, 3)
        ys.append(acc)
    return [[1 / (x + y) for y in ys] for x in xs]


def elementary_coeffs(roots):
    """Ascending coefficients of prod (t + r) over the given roots."""
    coeffs = [Fraction(1)]
    for r in roots:
        coeffs = [Fraction(0)] + coeffs
        for k in range(len(coeffs) - 1):
            coeffs[k] += Fraction(r) * coeffs[k + 1]
    return coeffs


def rooted_normalized_form(rng, degree: int, allow_zero=True) -> BivariateForm:
    """Form whose normalized coefficients are the ascending coefficients of
    prod (t + r_k) with random r_k >= 0 — a normally stable construction."""
    lo = 0 if allow_zero else 1
    roots = [rand_nonneg_fraction(rng, 5, 4) if lo == 0 else rand_positive_fraction(rng, 5, 4) for _ in range(degree)]
    if allow_zero and rng.random() < 0.4:
        roots[rng.randrange(degree)] = Fraction(0)
    if rng.random() < 0.4:
        roots[rng.randrange(degree)] = roots[0]
    return BivariateForm(degree, elementary_coeffs(roots))


def rooted_monomial_form(rng, degree: int) -> BivariateForm:
    """Form whose monomial coefficients come from prod (t + r_k) — a stable
    construction (the dehomogenization is real-rooted with roots <= 0)."""
    roots = [rand_nonneg_fraction(rng, 5, 4) for _ in range(degree)]
    return from_monomial_coeffs(elementary_coeffs(roots))


def random_tn_form(rng, degree: int) -> BivariateForm:
    """A form that is i-Lorentzian for every i: normally stable construction,
    occasionally with the variables swapped (which transposes every window)."""
    form = rooted_normalized_form(rng, degree)
    c = list(form.coeffs)
    if rng.random() < 0.3:
        c = list(reversed(c))
    return BivariateForm(degree, c)
