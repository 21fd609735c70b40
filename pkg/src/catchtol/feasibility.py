"""Exact rational linear feasibility for homogeneous strict/weak systems.

The searches in this package reduce every geometric question to a system of
linear constraints over nonnegative rational variables where each row reads
``coeffs . x >= 0`` or ``coeffs . x > 0`` and the whole system is positively
homogeneous (any solution can be scaled by a positive rational).  Under that
homogeneity a strict row is equivalent to ``coeffs . x >= 1``, which turns
strict feasibility into ordinary phase-1 simplex over Fractions.

Infeasible systems come back with a Farkas certificate: multipliers y >= 0
with  sum_i y_i * coeffs_i <= 0  componentwise and  sum_i y_i * rhs_i > 0,
which any reader can re-check by direct arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FeasibilityResult:
    point: Optional[tuple]  # tuple of Fractions, or None when infeasible
    farkas: Optional[tuple]  # tuple of Fractions (one per row) when infeasible

    @property
    def feasible(self) -> bool:
        return self.point is not None


def feasible_point(num_vars: int, rows: Sequence[Tuple[Sequence[Fraction], bool]]) -> FeasibilityResult:
    """Find x >= 0 with coeffs.x >= 0 on weak rows and > 0 on strict rows.

    ``rows`` holds (coeffs, strict) pairs.  The caller must arrange the model
    so that nonnegative variables lose no generality (the systems in this
    package pin one translation variable to zero, which makes the remaining
    variables naturally nonnegative).
    """
    rows = [(tuple(coeffs), bool(strict)) for coeffs, strict in rows]
    for coeffs, _ in rows:
        if len(coeffs) != num_vars:
            raise ValueError(f"row has {len(coeffs)} coefficients, expected {num_vars}")
    tableau = _Tableau(num_vars, rows)
    value = tableau.solve()
    if value == ZERO:
        solution = tableau.extract_point()
        _check_point(num_vars, rows, solution)
        return FeasibilityResult(tuple(solution), None)
    farkas = tableau.extract_farkas()
    _check_farkas(num_vars, rows, farkas)
    return FeasibilityResult(None, tuple(farkas))


def _rhs(strict: bool) -> Fraction:
    return ONE if strict else ZERO


class _Tableau:
    """Dense phase-1 simplex tableau over Fractions with Bland's rule."""

    def __init__(self, num_vars: int, rows):
        m = len(rows)
        artificial_rows = [i for i, (_, strict) in enumerate(rows) if strict]
        k = len(artificial_rows)
        cols = num_vars + m + k
        self.num_vars = num_vars
        self.m = m
        self.cols = cols
        self.rows = []
        self.basis = []
        art_index = {}
        for pos, i in enumerate(artificial_rows):
            art_index[i] = num_vars + m + pos
        for i, (coeffs, strict) in enumerate(rows):
            row = [ZERO] * (cols + 1)
            if strict:
                # coeffs.x - s_i + a_i = 1, basic a_i.
                for j, c in enumerate(coeffs):
                    row[j] = Fraction(c)
                row[num_vars + i] = -ONE
                row[art_index[i]] = ONE
                row[cols] = ONE
                self.basis.append(art_index[i])
            else:
                # -(coeffs.x) + s_i = 0, basic s_i (row negated so the
                # basic column carries +1).
                for j, c in enumerate(coeffs):
                    row[j] = -Fraction(c)
                row[num_vars + i] = ONE
                row[cols] = ZERO
                self.basis.append(num_vars + i)
            self.rows.append(row)
        # Reduced-cost row for minimizing the sum of artificials.
        obj = [ZERO] * (cols + 1)
        for i in artificial_rows:
            obj[art_index[i]] = ONE
        for i in artificial_rows:
            row = self.rows[i]
            for j in range(cols + 1):
                obj[j] -= row[j]
        self.obj = obj

    def pivot(self, pivot_row: int, pivot_col: int) -> None:
        row = self.rows[pivot_row]
        factor = row[pivot_col]
        if factor != ONE:
            inv = ONE / factor
            self.rows[pivot_row] = row = [x * inv for x in row]
        for target in self.rows + [self.obj]:
            if target is row:
                continue
            coef = target[pivot_col]
            if coef != ZERO:
                for j in range(self.cols + 1):
                    target[j] -= coef * row[j]
        self.basis[pivot_row] = pivot_col

    def solve(self) -> Fraction:
        """Run simplex to optimality and return the phase-1 objective value."""
        while True:
            entering = None
            for j in range(self.cols):
                if self.obj[j] < ZERO:
                    entering = j
                    break
            if entering is None:
                return -self.obj[self.cols]
            leaving = None
            best_ratio = None
            for i in range(self.m):
                coef = self.rows[i][entering]
                if coef > ZERO:
                    ratio = self.rows[i][self.cols] / coef
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[leaving])
                    ):
                        best_ratio = ratio
                        leaving = i
            if leaving is None:
                raise RuntimeError("phase-1 objective unbounded; this cannot happen")
            self.pivot(leaving, entering)

    def extract_point(self):
        x = [ZERO] * self.num_vars
        for i, var in enumerate(self.basis):
            if var < self.num_vars:
                x[var] = self.rows[i][self.cols]
        return x

    def extract_farkas(self):
        # Final reduced cost of slack column i equals the Farkas multiplier
        # of original row i (sign bookkeeping folded into the row setup).
        return [self.obj[self.num_vars + i] for i in range(self.m)]


def _check_point(num_vars: int, rows, point) -> None:
    for x in point:
        if x < ZERO:
            raise RuntimeError("solver returned a negative coordinate")
    for coeffs, strict in rows:
        value = sum(c * x for c, x in zip(coeffs, point))
        if value < _rhs(strict):
            raise RuntimeError("solver returned a point violating a constraint")


def _check_farkas(num_vars: int, rows, farkas) -> None:
    if len(farkas) != len(rows):
        raise RuntimeError("farkas certificate has wrong length")
    for y in farkas:
        if y < ZERO:
            raise RuntimeError("farkas multiplier is negative")
    for j in range(num_vars):
        combined = sum(y * coeffs[j] for y, (coeffs, _) in zip(farkas, rows))
        if combined > ZERO:
            raise RuntimeError("farkas combination is not nonpositive")
    payoff = sum(y * _rhs(strict) for y, (_, strict) in zip(farkas, rows))
    if not payoff > ZERO:
        raise RuntimeError("farkas combination does not witness infeasibility")
