"""
Exact rational and cyclotomic field arithmetic.

Every geometric and character-theoretic check in the toolkit runs on top of
this module. Elements of Q(zeta_n) are stored in the power basis modulo the
n-th cyclotomic polynomial, with integer numerators over one positive common
denominator so that equality and hashing are structural.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

import mpmath

Rational = Fraction

Scalar = Union[int, Fraction, "CycloNum"]

# Conductor used for all of the plane geometry.
DEFAULT_CONDUCTOR = 5


class ConstructionError(RuntimeError):
    """An internal consistency check failed while building a derived object."""


def _trim(coeffs):
    """Drop trailing zeros of a dense coefficient list (lowest degree first)."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _int_poly_divmod(num, den):
    """Exact division of integer polynomials with a monic divisor."""
    num = list(num)
    quotient = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c == 0:
            continue
        quotient[shift] = c
        for j, d in enumerate(den):
            num[shift + j] -= c * d
    return quotient, _trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients of Phi_n (lowest degree first), by dividing x^n - 1 by Phi_d for d | n, d < n."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, remainder = _int_poly_divmod(poly, cyclotomic_polynomial(d))
            if remainder:
                raise ArithmeticError(f"Phi_{d} does not divide x^{n}-1")
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_mod_phi(coeffs, n):
    """Reduce an integer coefficient list modulo the monic polynomial Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        base = k - deg
        for j in range(deg + 1):
            coeffs[base + j] -= c * phi[j]
    coeffs = coeffs[:deg]
    coeffs.extend([0] * (deg - len(coeffs)))
    return coeffs


class CycloNum:
    """An element of Q(zeta_n) in canonical form.

    Stored as integer numerators `nums` over a positive denominator `den`
    with gcd(nums..., den) = 1; length of `nums` is phi(n).
    """

    __slots__ = ("n", "nums", "den", "_hash")

    def __init__(self, n: int, nums: Sequence[int], den: int = 1):
        # Callers outside this module go through cyclo_make / from_rational.
        self.n = n
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    # --- construction -------------------------------------------------

    @classmethod
    def _normalized(cls, n, nums, den):
        if den < 0:
            nums = [-c for c in nums]
            den = -den
        g = den
        for c in nums:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
        return cls(n, nums, den)

    @classmethod
    def from_rational(cls, n: int, value) -> "CycloNum":
        value = Fraction(value)
        deg = euler_phi(n)
        nums = [0] * deg
        nums[0] = value.numerator
        return cls._normalized(n, nums, value.denominator)

    @classmethod
    def zero(cls, n: int = DEFAULT_CONDUCTOR) -> "CycloNum":
        return cls(n, [0] * euler_phi(n), 1)

    @classmethod
    def one(cls, n: int = DEFAULT_CONDUCTOR) -> "CycloNum":
        return cls.from_rational(n, 1)

    @classmethod
    def zeta(cls, n: int = DEFAULT_CONDUCTOR, k: int = 1) -> "CycloNum":
        """The root of unity zeta_n^k."""
        raw = [0] * (k % n) + [1]
        return cyclo_make(n, raw)

    # --- coercion -----------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.n != self.n:
                raise ValueError(f"conductor mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(self.n, other)
        return NotImplemented

    # --- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            nums = [a + b for a, b in zip(self.nums, other.nums)]
            return CycloNum._normalized(self.n, nums, self.den)
        nums = [a * other.den + b * self.den for a, b in zip(self.nums, other.nums)]
        return CycloNum._normalized(self.n, nums, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.n, [-c for c in self.nums], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloNum._normalized(self.n, [c * other for c in self.nums], self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.nums, other.nums
        product = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    product[i + j] += x * y
        nums = _reduce_mod_phi(product, self.n)
        return CycloNum._normalized(self.n, nums, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        return cyclo_inv(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyclo_inv(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * cyclo_inv(self)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return cyclo_inv(self) ** (-exponent)
        result = CycloNum.one(self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # --- Galois action ------------------------------------------------

    def galois(self, k: int) -> "CycloNum":
        """Apply the automorphism zeta -> zeta^k (k coprime to n)."""
        if gcd(k, self.n) != 1:
            raise ValueError(f"{k} is not a unit modulo {self.n}")
        raw = [Fraction(0)] * self.n
        for i, c in enumerate(self.nums):
            if c:
                raw[(i * k) % self.n] += Fraction(c, self.den)
        return cyclo_make(self.n, raw)

    def conjugate(self) -> "CycloNum":
        """Complex conjugation, zeta -> zeta^-1."""
        return self.galois(self.n - 1)

    # --- predicates and views -----------------------------------------

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(self.n, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.n == other.n and self.den == other.den and self.nums == other.nums

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                # agree with hash(Fraction) so mixed dict keys behave
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.n, self.nums, self.den))
        return self._hash

    def sort_key(self) -> tuple:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def embed(self, digits: int = 15) -> complex:
        return cyclo_embed(self, digits)

    def __repr__(self):
        return f"CycloNum({self.n}, {self})"

    def __str__(self):
        return format_cyclo(self)


def cyclo_make(n: int, raw: Iterable) -> CycloNum:
    """Canonical element of Q(zeta_n) from a raw polynomial in zeta of any length."""
    raw = [Fraction(c) for c in raw]
    den = 1
    for c in raw:
        den = den * c.denominator // gcd(den, c.denominator)
    nums = [c.numerator * (den // c.denominator) for c in raw]
    if len(nums) > n:
        # zeta^n = 1 folds everything into degrees < n before reducing
        folded = [0] * n
        for i, c in enumerate(nums):
            folded[i % n] += c
        nums = folded
    return CycloNum._normalized(n, _reduce_mod_phi(nums, n), den)


def cyclo_add(a: CycloNum, b: CycloNum) -> CycloNum:
    return a + b


def cyclo_neg(a: CycloNum) -> CycloNum:
    return -a


def cyclo_mul(a: CycloNum, b: CycloNum) -> CycloNum:
    return a * b


def _frac_poly_divmod(num, den):
    num = [Fraction(c) for c in num]
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[-1]
    quotient = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] / lead
        quotient[shift] = c
        if c:
            for j, d in enumerate(den):
                num[shift + j] -= c * d
    return _trim(quotient), _trim(num[: len(den) - 1])


def _frac_poly_sub_mul(a, q, b):
    """a - q*b for dense Fraction polynomials."""
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _trim(out)


def cyclo_inv(a: CycloNum) -> CycloNum:
    """Inverse via the extended Euclidean algorithm on a(x) and Phi_n(x)."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in a cyclotomic field")
    if a.is_rational():
        return CycloNum.from_rational(a.n, 1 / Fraction(a.nums[0], a.den))
    old_r, r = [Fraction(c) for c in cyclotomic_polynomial(a.n)], _trim(a.coeffs)
    old_s, s = [], [Fraction(1)]
    # invariant: s * a == r (mod Phi_n)
    while len(r) > 1:
        q, rem = _frac_poly_divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _frac_poly_sub_mul(old_s, q, s)
    if not r:
        raise ArithmeticError(f"{a} shares a factor with Phi_{a.n}")
    return cyclo_make(a.n, [c / r[0] for c in s])


def cyclo_embed(a: CycloNum, digits: int = 15) -> complex:
    """Numerical value under zeta -> exp(2 pi i / n); diagnostics only."""
    if digits < 1:
        raise ValueError("digits must be at least 1")
    with mpmath.workdps(digits + 5):
        z = mpmath.exp(2j * mpmath.pi / a.n)
        total = mpmath.mpc(0)
        for k, c in enumerate(a.coeffs):
            if c:
                total += mpmath.mpf(c.numerator) / c.denominator * z ** k
        return complex(total)


def cyclo_embed_str(a: CycloNum, digits: int) -> str:
    """Decimal rendering of the embedding with `digits` significant digits."""
    with mpmath.workdps(digits + 5):
        z = mpmath.exp(2j * mpmath.pi / a.n)
        total = mpmath.mpc(0)
        for k, c in enumerate(a.coeffs):
            if c:
                total += mpmath.mpf(c.numerator) / c.denominator * z ** k
        return mpmath.nstr(total, digits)


def format_cyclo(a: CycloNum, var: str = "z") -> str:
    """Exact string such as '1/2*z^3-1' (highest power first)."""
    terms = []
    for k in range(len(a.nums) - 1, -1, -1):
        c = Fraction(a.nums[k], a.den)
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        text += sign + body
    return text


def parse_cyclo(text: str, n: int = DEFAULT_CONDUCTOR, var: str = "z") -> CycloNum:
    """Inverse of format_cyclo."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty cyclotomic literal")
    raw = {}
    for token in text.replace("-", "+-").split("+"):
        if not token:
            continue
        sign = -1 if token.startswith("-") else 1
        token = token.lstrip("-")
        if var in token:
            coeff_part, _, power_part = token.partition(var)
            coeff = Fraction(coeff_part.rstrip("*")) if coeff_part else Fraction(1)
            power = int(power_part[1:]) if power_part else 1
        else:
            coeff, power = Fraction(token), 0
        raw[power] = raw.get(power, Fraction(0)) + sign * coeff
    dense = [Fraction(0)] * (max(raw) + 1)
    for power, coeff in raw.items():
        dense[power] = coeff
    return cyclo_make(n, dense)


# --- named constants of Q(zeta_5) ---------------------------------------

def eta(k: int = 1) -> CycloNum:
    """Primitive fifth root of unity eta^k."""
    return CycloNum.zeta(5, k)


def sqrt5() -> CycloNum:
    """The square root of 5 realised as zeta - zeta^2 - zeta^3 + zeta^4."""
    return cyclo_make(5, [0, 1, -1, -1, 1])


def golden_ratio() -> CycloNum:
    """(1 + sqrt 5)/2 = -(zeta^2 + zeta^3)."""
    return cyclo_make(5, [0, 0, -1, -1])


def rational(value, n: int = DEFAULT_CONDUCTOR) -> CycloNum:
    return CycloNum.from_rational(n, value)


def as_cyclo(value, n: int = DEFAULT_CONDUCTOR) -> CycloNum:
    if isinstance(value, CycloNum):
        return value
    return CycloNum.from_rational(n, value)
