"""
Discriminant of the pencil Q^3 + lambda*F through the Macaulay resultant of
the three partial derivatives, evaluated at integer lambda and interpolated.

Slow (a 105x105 integer determinant per sample); only run on request.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .invariants import Poly3, act_on_poly, monomials
from .linalg import MatrixF, det
from .winger import WingerPencil

# Degree of the discriminant of plane sextics in the coefficients: 3 * 5^2.
DISCRIMINANT_DEGREE = 75
EXPECTED_ROOTS = (Fraction(0), Fraction(-1), Fraction(27, 5))


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss elimination on an integer matrix; every division is exact."""
    a = [list(r) for r in rows]
    size = len(a)
    if size == 0:
        return 1
    sign, previous = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot
    return sign * a[-1][-1]


def _integer_terms(f: Poly3) -> Dict[Tuple[int, int, int], int]:
    values = {e: c.to_rational() for e, c in f.terms.items()}
    if any(v.denominator != 1 for v in values.values()):
        raise ValueError("pencil gradients must have integer coefficients at integer lambda")
    return {e: int(v) for e, v in values.items()}


class MacaulayLayout:
    """Row/column structure of the Macaulay matrix for three forms of one degree."""

    def __init__(self, degree: int):
        self.form_degree = degree
        self.total = 3 * (degree - 1) + 1
        self.columns = monomials(self.total)
        self.position = {m: i for i, m in enumerate(self.columns)}
        self.rows: List[Tuple[int, Tuple[int, int, int]]] = []
        for m in self.columns:
            i = next(k for k in range(3) if m[k] >= degree)
            shift = list(m)
            shift[i] -= degree
            self.rows.append((i, tuple(shift)))
        self.non_reduced = [idx for idx, m in enumerate(self.columns)
                            if sum(1 for k in range(3) if m[k] >= degree) >= 2]

    @property
    def size(self) -> int:
        return len(self.columns)

    def matrix(self, forms: Sequence[Dict[Tuple[int, int, int], int]]) -> List[List[int]]:
        out = []
        for i, shift in self.rows:
            row = [0] * self.size
            for e, c in forms[i].items():
                row[self.position[(e[0] + shift[0], e[1] + shift[1], e[2] + shift[2])]] = c
            out.append(row)
        return out

    def extraneous(self, full: List[List[int]]) -> List[List[int]]:
        return [[full[i][j] for j in self.non_reduced] for i in self.non_reduced]


@dataclass
class DiscriminantReport:
    degree: int
    factors: List[Tuple[str, int]]
    roots: List[str]
    infinity: bool
    samples: int
    coordinate_change: bool
    passed: bool = field(default=False)


class PencilDiscriminant:
    def __init__(self, pencil: WingerPencil, rng: random.Random = None):
        self.pencil = pencil
        self.rng = rng or random.Random(0)
        self.layout = MacaulayLayout(pencil.f.degree - 1)
        self.q3, self.f = pencil.q_cubed, pencil.f
        self.coordinate_change = False

    def change_coordinates(self):
        """Replace Q^3 and F by their pullbacks under a random integer matrix of nonzero determinant."""
        while True:
            entries = [self.rng.randint(-3, 3) for _ in range(9)]
            m = MatrixF(3, 3, entries)
            if not det(m).is_zero():
                break
        self.q3 = act_on_poly(m, self.pencil.q_cubed)
        self.f = act_on_poly(m, self.pencil.f)
        self.coordinate_change = True

    def _gradient_forms(self, lam: int):
        member = self.q3 + self.f.scale(lam)
        return [_integer_terms(d) for d in member.gradient()]

    def evaluate(self, lam: int) -> Optional[Fraction]:
        """Resultant at lambda, or None when the extraneous factor vanishes there."""
        full = self.layout.matrix(self._gradient_forms(lam))
        extraneous = integer_det(self.layout.extraneous(full))
        if extraneous == 0:
            return None
        return Fraction(integer_det(full), extraneous)

    def samples(self, start: int = 1, count: int = DISCRIMINANT_DEGREE + 1) -> List[Tuple[int, Fraction]]:
        points = []
        lam = start
        misses = 0
        while len(points) < count:
            value = self.evaluate(lam)
            if value is None:
                misses += 1
                if misses > 5 and not points and not self.coordinate_change:
                    self.change_coordinates()
                    lam = start
                    continue
            else:
                points.append((lam, value))
            lam += 1
        return points


def deep_discriminant_check(pencil: WingerPencil = None, start: int = 1,
                            rng: random.Random = None) -> DiscriminantReport:
    pencil = pencil or WingerPencil()
    engine = PencilDiscriminant(pencil, rng)
    points = engine.samples(start)
    x = sympy.Symbol("lam")
    poly = sympy.Poly(sympy.interpolate([(sympy.Integer(a), sympy.Rational(b.numerator, b.denominator))
                                         for a, b in points], x), x)
    _, factor_pairs = sympy.factor_list(poly.as_expr(), x)
    factors = [(str(f), int(m)) for f, m in factor_pairs]
    roots = set()
    only_linear = True
    for f, _ in factor_pairs:
        fp = sympy.Poly(f, x)
        if fp.degree() != 1:
            only_linear = False
            continue
        a, b = fp.all_coeffs()
        root = sympy.Rational(-b, a)
        roots.add(Fraction(int(root.p), int(root.q)))
    degree = poly.degree()
    infinity = degree < DISCRIMINANT_DEGREE
    passed = only_linear and roots == set(EXPECTED_ROOTS) and infinity
    return DiscriminantReport(degree, factors, sorted(str(r) for r in roots), infinity, len(points),
                              engine.coordinate_change, passed)
