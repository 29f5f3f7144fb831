"""Banded Toeplitz windows of a form and their positivity properties.

``from_form(F, i)`` lays the normalized coefficients of a degree-d form into
the (i+1) x (d-i+1) Toeplitz matrix whose (p, q) entry is ``c_{i+q-p}``.  The
positivity checks come in two flavours: the consecutive-minor test (a classical
reduction for *strict* total positivity) and full minor enumeration, which is
the only correct test for total nonnegativity — nonnegative consecutive minors
do not certify it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import DegreeError, FormatError, MinorCapError, ShapeError
from .forms import BivariateForm
from .verdict import MinorWitness, Verdict, fmt_rat, parse_rational

DEFAULT_MINOR_CAP = 8


@dataclass(frozen=True)
class ToeplitzMatrix:
    rows: int
    cols: int
    diag: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeError("empty Toeplitz matrix")
        diag = tuple(Fraction(x) for x in self.diag)
        if len(diag) != self.rows + self.cols - 1:
            raise ShapeError(
                f"{self.rows}x{self.cols} Toeplitz matrix needs "
                f"{self.rows + self.cols - 1} diagonal values, got {len(diag)}"
            )
        object.__setattr__(self, "diag", diag)

    def entry(self, p: int, q: int) -> Fraction:
        if not (0 <= p < self.rows and 0 <= q < self.cols):
            raise ShapeError("Toeplitz index out of range")
        return self.diag[q - p + self.rows - 1]

    def to_dense(self) -> list[list[Fraction]]:
        return [
            [self.diag[q - p + self.rows - 1] for q in range(self.cols)]
            for p in range(self.rows)
        ]


def from_dense(rows) -> ToeplitzMatrix:
    m, n = linalg.dims(rows)
    if m < 1 or n < 1:
        raise ShapeError("empty matrix")
    for p in range(m):
        for q in range(n):
            if p and q and rows[p][q] != rows[p - 1][q - 1]:
                raise ShapeError(f"entry ({p},{q}) breaks the Toeplitz diagonals")
    diag = [rows[p][0] for p in range(m - 1, 0, -1)] + [rows[0][q] for q in range(n)]
    return ToeplitzMatrix(m, n, tuple(Fraction(x) for x in diag))


def from_form(form: BivariateForm, order: int) -> ToeplitzMatrix:
    """The order-th coefficient window: (order+1) x (d-order+1), diagonals c_k."""
    d = form.degree
    if not 0 <= order <= d // 2:
        raise DegreeError(f"order {order} out of range for degree {d}")
    return ToeplitzMatrix(order + 1, d - order + 1, form.coeffs)


def to_form(matrix: ToeplitzMatrix) -> BivariateForm:
    """Inverse of from_form; the matrix must be at least as wide as tall."""
    d = matrix.rows + matrix.cols - 2
    if matrix.rows - 1 > d // 2:
        raise ShapeError("matrix is taller than any coefficient window")
    return BivariateForm(d, matrix.diag)


def _dense(matrix) -> list[list[Fraction]]:
    if isinstance(matrix, ToeplitzMatrix):
        return matrix.to_dense()
    return linalg.copy_rows(matrix)


def _scaled(dense):
    irows, scales = linalg.integer_rows(dense)

    def value(ridx, cidx) -> Fraction:
        sub = [[irows[i][j] for j in cidx] for i in ridx]
        den = 1
        for i in ridx:
            den *= scales[i]
        return Fraction(linalg.int_det(sub), den)

    return value


def is_totally_positive(matrix) -> Verdict:
    """Consecutive-minor criterion: every contiguous square window has
    positive determinant.  Equivalent to all minors being positive."""
    dense = _dense(matrix)
    m, n = linalg.dims(dense)
    value = _scaled(dense)
    for k in range(1, min(m, n) + 1):
        for r in range(m - k + 1):
            for s in range(n - k + 1):
                ridx = tuple(range(r, r + k))
                cidx = tuple(range(s, s + k))
                v = value(ridx, cidx)
                if v <= 0:
                    return Verdict(
                        "totally-positive", False, MinorWitness(ridx, cidx, v)
                    )
    return Verdict("totally-positive", True)


def _all_minors(dense, cap):
    m, n = linalg.dims(dense)
    limit = DEFAULT_MINOR_CAP if cap is None else cap
    if min(m, n) > limit:
        raise MinorCapError(
            f"minor enumeration over a {m}x{n} matrix exceeds the cap {limit}"
        )
    value = _scaled(dense)
    for k in range(1, min(m, n) + 1):
        for ridx in combinations(range(m), k):
            for cidx in combinations(range(n), k):
                yield ridx, cidx, value(ridx, cidx)


def is_totally_positive_full(matrix, cap: int | None = None) -> Verdict:
    """Total positivity by brute-force enumeration of every minor.

    Exponential in the smaller dimension; kept as the independent cross-check
    for the consecutive-minor test.
    """
    for ridx, cidx, v in _all_minors(_dense(matrix), cap):
        if v <= 0:
            return Verdict("totally-positive", False, MinorWitness(ridx, cidx, v))
    return Verdict("totally-positive", True)


def is_totally_nonnegative(matrix, cap: int | None = None) -> Verdict:
    """Total nonnegativity: every minor of every size is >= 0.

    All minors are enumerated (sizes ascending, index sets in lexicographic
    order) and the first negative one is returned as the witness.
    """
    for ridx, cidx, v in _all_minors(_dense(matrix), cap):
        if v < 0:
            return Verdict("totally-nonnegative", False, MinorWitness(ridx, cidx, v))
    return Verdict("totally-nonnegative", True)


def rank(matrix) -> int:
    return linalg.rank(_dense(matrix))


def parse_matrix(text: str) -> list[list[Fraction]]:
    rows = [r for r in text.split(";") if r.strip()]
    if not rows:
        raise FormatError("empty matrix text")
    out = [[parse_rational(x) for x in row.split(",")] for row in rows]
    n = len(out[0])
    if any(len(row) != n for row in out):
        raise FormatError("ragged matrix text")
    return out


def format_matrix(rows) -> str:
    dense = _dense(rows)
    return "; ".join(", ".join(fmt_rat(x) for x in row) for row in dense)
