"""
Ternary polynomials, Molien series and Reynolds projections for a finite
group of 3x3 matrices.

The group acts on polynomials by precomposition, (f.M)(z) = f(Mz).
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Sequence, Tuple

from .exactfield import DEFAULT_CONDUCTOR, CycloNum, as_cyclo, format_cyclo
from .linalg import MatrixF, charpoly, row_space_basis

Exponent = Tuple[int, int, int]

VARIABLES = ("z0", "z1", "z2")


def monomials(degree: int) -> List[Exponent]:
    """All exponent triples of the given total degree, lexicographically descending."""
    out = []
    for a in range(degree, -1, -1):
        for b in range(degree - a, -1, -1):
            out.append((a, b, degree - a - b))
    return out


def monomial_count(degree: int) -> int:
    return comb(degree + 2, 2)


class Poly3:
    """Polynomial in z0, z1, z2 with CycloNum coefficients; zero terms are never stored."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Dict[Exponent, object] = None, n: int = DEFAULT_CONDUCTOR):
        clean = {}
        for exponent, coeff in (terms or {}).items():
            coeff = as_cyclo(coeff, n)
            if coeff:
                if len(exponent) != 3 or min(exponent) < 0:
                    raise ValueError(f"bad exponent {exponent}")
                clean[tuple(exponent)] = coeff
        self.terms = clean
        self.n = n

    @classmethod
    def constant(cls, value, n: int = DEFAULT_CONDUCTOR) -> "Poly3":
        return cls({(0, 0, 0): value}, n)

    @classmethod
    def variable(cls, i: int, n: int = DEFAULT_CONDUCTOR) -> "Poly3":
        exponent = [0, 0, 0]
        exponent[i] = 1
        return cls({tuple(exponent): 1}, n)

    @classmethod
    def linear(cls, coeffs: Sequence, n: int = DEFAULT_CONDUCTOR) -> "Poly3":
        return cls({(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]}, n)

    @classmethod
    def from_vector(cls, vector: Sequence, degree: int, n: int = DEFAULT_CONDUCTOR) -> "Poly3":
        """Inverse of coefficient_vector."""
        return cls(dict(zip(monomials(degree), vector)), n)

    # --- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def coefficient(self, exponent: Exponent) -> CycloNum:
        return self.terms.get(tuple(exponent), CycloNum.zero(self.n))

    def coefficient_vector(self, degree: int = None) -> Tuple[CycloNum, ...]:
        degree = self.degree if degree is None else degree
        return tuple(self.coefficient(e) for e in monomials(degree))

    def leading_coefficient(self) -> CycloNum:
        """Coefficient of the lexicographically largest monomial."""
        if not self.terms:
            return CycloNum.zero(self.n)
        return self.terms[max(self.terms)]

    def normalized(self) -> "Poly3":
        """Scale so the lexicographically largest monomial has coefficient 1."""
        if not self.terms:
            return self
        return self.scale(self.leading_coefficient().inverse())

    def proportional_to(self, other: "Poly3") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.normalized() == other.normalized()

    # --- arithmetic ----------------------------------------------------

    def __add__(self, other: "Poly3") -> "Poly3":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return Poly3(terms, self.n)

    def __neg__(self):
        return Poly3({e: -c for e, c in self.terms.items()}, self.n)

    def __sub__(self, other: "Poly3") -> "Poly3":
        return self + (-other)

    def scale(self, c) -> "Poly3":
        c = as_cyclo(c, self.n)
        if not c:
            return Poly3({}, self.n)
        return Poly3({e: c * v for e, v in self.terms.items()}, self.n)

    def __mul__(self, other):
        if not isinstance(other, Poly3):
            return self.scale(other)
        terms: Dict[Exponent, CycloNum] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                product = c1 * c2
                terms[e] = terms[e] + product if e in terms else product
        return Poly3(terms, self.n)

    __rmul__ = scale

    def __pow__(self, exponent: int) -> "Poly3":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not supported")
        result = Poly3.constant(1, self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self, i: int) -> "Poly3":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                lowered = list(e)
                lowered[i] -= 1
                terms[tuple(lowered)] = c * e[i]
        return Poly3(terms, self.n)

    def gradient(self) -> Tuple["Poly3", "Poly3", "Poly3"]:
        return tuple(self.derivative(i) for i in range(3))

    def __call__(self, point: Sequence) -> CycloNum:
        point = [as_cyclo(x, self.n) for x in point]
        powers = [[CycloNum.one(self.n)] for _ in range(3)]
        total = CycloNum.zero(self.n)
        for e, c in self.terms.items():
            value = c
            for i in range(3):
                while len(powers[i]) <= e[i]:
                    powers[i].append(powers[i][-1] * point[i])
                value = value * powers[i][e[i]]
            total = total + value
        return total

    def galois(self, k: int) -> "Poly3":
        return Poly3({e: c.galois(k) for e, c in self.terms.items()}, self.n)

    def __eq__(self, other):
        if not isinstance(other, Poly3):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Poly3({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


def format_poly(f: Poly3) -> str:
    """Human-readable form, monomials in lexicographic exponent order."""
    if f.is_zero():
        return "0"
    pieces = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        factors = [VARIABLES[i] if e[i] == 1 else f"{VARIABLES[i]}^{e[i]}" for i in range(3) if e[i]]
        if c.is_rational():
            r = c.to_rational()
            sign = "-" if r < 0 else "+"
            mag = abs(r)
            body = "*".join(factors) if mag == 1 and factors else "*".join([str(mag)] + factors)
        else:
            sign = "+"
            body = "*".join([f"({format_cyclo(c, 'eta')})"] + factors)
        pieces.append((sign, body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


class _LinearSubstitution:
    """Caches powers of the forms (Mz)_i for repeated precomposition by one matrix."""

    def __init__(self, m: MatrixF):
        self.n = m.n
        self.forms = [Poly3.linear(m.row(i), m.n) for i in range(3)]
        self.powers = [[Poly3.constant(1, m.n)] for _ in range(3)]

    def power(self, i: int, k: int) -> Poly3:
        cache = self.powers[i]
        while len(cache) <= k:
            cache.append(cache[-1] * self.forms[i])
        return cache[k]

    def monomial(self, e: Exponent) -> Poly3:
        return self.power(0, e[0]) * self.power(1, e[1]) * self.power(2, e[2])

    def apply(self, f: Poly3) -> Poly3:
        out = Poly3({}, self.n)
        for e, c in f.terms.items():
            out = out + self.monomial(e).scale(c)
        return out


def act_on_poly(m: MatrixF, f: Poly3) -> Poly3:
    """Precomposition f(Mz)."""
    if (m.rows, m.cols) != (3, 3):
        raise ValueError("act_on_poly needs a 3x3 matrix")
    return _LinearSubstitution(m).apply(f)


def reynolds(group: Sequence[MatrixF], f: Poly3) -> Poly3:
    """Group average of f, summing over every element."""
    total = Poly3({}, f.n)
    for m in group:
        total = total + act_on_poly(m, f)
    return total.scale(Fraction(1, len(group)))


def diagonal_subgroup(group: Sequence[MatrixF]) -> List[MatrixF]:
    return [m for m in group if all(m[i, j].is_zero() for i in range(3) for j in range(3) if i != j)]


def right_coset_representatives(group: Sequence[MatrixF], subgroup: Sequence[MatrixF]) -> List[MatrixF]:
    """One t per right coset D*t."""
    seen = set()
    reps = []
    for g in group:
        if g in seen:
            continue
        reps.append(g)
        seen.update(d * g for d in subgroup)
    if len(reps) * len(subgroup) != len(group):
        raise ValueError("subgroup does not tile the group by right cosets")
    return reps


def _diagonal_average(diagonal: Sequence[MatrixF], e: Exponent) -> CycloNum:
    """Average over D of the scalar by which d rescales the monomial z^e."""
    n = diagonal[0].n
    total = CycloNum.zero(n)
    for d in diagonal:
        total = total + d[0, 0] ** e[0] * d[1, 1] ** e[1] * d[2, 2] ** e[2]
    return total / len(diagonal)


def reynolds_images(group: Sequence[MatrixF], degree: int) -> List[Poly3]:
    """Reynolds images of all degree-d monomials that survive the diagonal average.

    Uses G = union of D*t: the average over G is the average over the coset
    representatives t of (average over D) followed by t.
    """
    diagonal = diagonal_subgroup(group)
    reps = right_coset_representatives(group, diagonal)
    substitutions = [_LinearSubstitution(t) for t in reps]
    images = []
    for e in monomials(degree):
        weight = _diagonal_average(diagonal, e)
        if weight.is_zero():
            continue
        image = Poly3({}, group[0].n)
        for sub in substitutions:
            image = image + sub.monomial(e)
        images.append(image.scale(weight / len(reps)))
    return images


def reynolds_basis(group: Sequence[MatrixF], degree: int) -> List[Poly3]:
    """Echelon basis of the degree-d invariants."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    n = group[0].n
    vectors = [img.coefficient_vector(degree) for img in reynolds_images(group, degree) if img]
    basis = row_space_basis(vectors, monomial_count(degree), n)
    return [Poly3.from_vector(v, degree, n) for v in basis]


def in_span(f: Poly3, basis: Sequence[Poly3], degree: int) -> bool:
    if not basis:
        return f.is_zero()
    width = monomial_count(degree)
    before = row_space_basis([b.coefficient_vector(degree) for b in basis], width, f.n)
    after = row_space_basis([b.coefficient_vector(degree) for b in basis] + [f.coefficient_vector(degree)],
                            width, f.n)
    return len(before) == len(after)


class PowSeries:
    """Truncated power series c_0 + c_1 T + ... + c_N T^N with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a power series needs at least the constant term")

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_polynomial(cls, coeffs: Sequence, precision: int) -> "PowSeries":
        padded = list(coeffs[: precision + 1]) + [0] * max(0, precision + 1 - len(coeffs))
        return cls(padded)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __mul__(self, other: "PowSeries") -> "PowSeries":
        size = min(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * size
        for i, a in enumerate(self.coeffs[:size]):
            if a:
                for j in range(size - i):
                    out[i + j] += a * other.coeffs[j]
        return PowSeries(out)

    def reciprocal(self) -> "PowSeries":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        return PowSeries(series_reciprocal(self.coeffs, self.precision, Fraction(1)))

    def __truediv__(self, other: "PowSeries") -> "PowSeries":
        return self * other.reciprocal()

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> List[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, PowSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "PowSeries(" + ", ".join(str(c) for c in self.coeffs) + ")"


def series_reciprocal(coeffs: Sequence, precision: int, one):
    """Coefficients of 1/p(T) to T^precision; works for Fraction or CycloNum entries."""
    c0_inv = one / coeffs[0]
    out = [c0_inv]
    for k in range(1, precision + 1):
        acc = one * 0
        for j in range(1, min(k, len(coeffs) - 1) + 1):
            if coeffs[j]:
                acc = acc + coeffs[j] * out[k - j]
        out.append(-acc * c0_inv)
    return out


def molien_series(group: Sequence[MatrixF], precision: int) -> PowSeries:
    """(1/|G|) sum over g of 1/det(I - T g), to T^precision.

    Elements sharing a characteristic polynomial share a summand, so each
    distinct one is expanded once.
    """
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    n = group[0].n
    multiplicity: Dict[Tuple, int] = {}
    for g in group:
        denominator = charpoly(g).reversed_coefficients(g.rows)
        multiplicity[denominator] = multiplicity.get(denominator, 0) + 1
    total = [CycloNum.zero(n)] * (precision + 1)
    for denominator, count in multiplicity.items():
        expansion = series_reciprocal(denominator, precision, CycloNum.one(n))
        total = [t + e * count for t, e in zip(total, expansion)]
    coeffs = []
    for k, t in enumerate(total):
        value = t / len(group)
        if not value.is_integer():
            raise ValueError(f"Molien coefficient at T^{k} is {value}, not an integer")
        coeffs.append(value.to_rational())
    return PowSeries(coeffs)


def closed_form_series(precision: int, numerator_degrees: Sequence[int] = (0, 15),
                       denominator_degrees: Sequence[int] = (2, 6, 10)) -> PowSeries:
    """Expansion of (sum T^s) / prod (1 - T^p)."""
    numerator = [0] * (max(numerator_degrees) + 1)
    for s in numerator_degrees:
        numerator[s] += 1
    series = PowSeries.from_polynomial(numerator, precision)
    for p in denominator_degrees:
        factor = [1] + [0] * (p - 1) + [-1]
        series = series / PowSeries.from_polynomial(factor, precision)
    return series


def is_invariant(group: Sequence[MatrixF], f: Poly3) -> bool:
    return all(act_on_poly(m, f) == f for m in group)
