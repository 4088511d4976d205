"""
Length and rank generating functions of the admissible set and of ``Q_J``.

``F(q)`` sums ``q^l(z)`` over the admissible set; ``A(q)`` sums
``q^{l(x) - l(y)}`` over ``Q_J``.  For cominuscule ``lambda`` the two are
related by ``F(q) = q^{<lambda, 2 rho>} A(1/q)``.

Closed forms for the classical families are evaluated exactly:

>>> typeA_F(1, 3)
QPoly(1, 3, 3)
>>> typeC_count(2)
13
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import comb, factorial

from .coxeter import weyl_group
from .richardson_poset import admissible_set, build_QJ
from .root_data import RootSystem

__all__ = [
    "QPoly", "SeriesX", "q_int", "F_brute", "A_brute", "check_duality",
    "typeA_F", "typeA_F_at_one", "typeB_F_series", "typeD_F_series",
    "typeB_F", "typeD_F", "typeB_A", "typeD_A",
    "typeC_count", "typeC_recurrence", "typeC_sqrt_e_floor", "typeC_check",
]


class QPoly:
    """Integer polynomial in ``q``, stored without trailing zeros."""
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _as_qpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_qpoly(other))

    def __rsub__(self, other):
        return _as_qpoly(other) - self

    def __mul__(self, other):
        other = _as_qpoly(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, q):
        return sum(c * q ** i for i, c in enumerate(self.coeffs))

    def reversed(self, shift: int) -> "QPoly":
        """``q^shift * P(1/q)``; requires ``shift >= deg P``."""
        if self.degree > shift:
            raise ValueError(f"degree {self.degree} exceeds reversal shift {shift}")
        out = [0] * (shift + 1)
        for i, c in enumerate(self.coeffs):
            out[shift - i] = c
        return QPoly(out)

    def csv(self) -> str:
        return ",".join(map(str, self.coeffs or (0,)))

    def __repr__(self) -> str:
        return "QPoly(" + ", ".join(map(str, self.coeffs)) + ")"


def _as_qpoly(v) -> QPoly:
    if isinstance(v, QPoly):
        return v
    if isinstance(v, int):
        return QPoly([v])
    raise TypeError(f"cannot use {type(v).__name__} as a polynomial in q")


def q_int(i: int) -> QPoly:
    """``[i] = 1 + q + ... + q^{i-1}``; ``[0] = 0``."""
    return QPoly([1] * i)


Q = QPoly.monomial(1)


# -- brute force ------------------------------------------------------------------
def F_brute(rs: RootSystem, lam: Sequence[int]) -> QPoly:
    A = weyl_group(rs).affine
    out = [0] * 1
    for z in admissible_set(rs, lam).elements:
        ln = A.length(z)
        if ln >= len(out):
            out.extend([0] * (ln + 1 - len(out)))
        out[ln] += 1
    return QPoly(out)


def A_brute(rs: RootSystem, lam: Sequence[int]) -> QPoly:
    out: dict[int, int] = {}
    for x, y in build_QJ(rs, lam):
        d = x.length - y.length
        out[d] = out.get(d, 0) + 1
    return QPoly([out.get(i, 0) for i in range(max(out) + 1)])


def check_duality(F: QPoly, A: QPoly, shift: int) -> bool:
    """``F(q) == q^shift A(1/q)`` coefficientwise."""
    if A.degree > shift:
        return False
    return F == A.reversed(shift)


# -- type A ---------------------------------------------------------------------------
def typeA_F(k: int, n: int) -> QPoly:
    """Length generating function of the admissible set for ``Gr(k, n)``."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    total = QPoly()
    for i in range(k):
        t1 = QPoly.monomial(i * (n - k + 1)) * q_int(k - i) ** i * q_int(k - i + 1) ** (n - i)
        t2 = QPoly.monomial(n + n * i - k * i) * q_int(k - i - 1) ** i * q_int(k - i) ** (n - i)
        total = total + (-1) ** i * comb(n, i) * (t1 - t2)
    return total


def typeA_F_at_one(k: int, n: int) -> int:
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    return sum(
        (-1) ** i * comb(n, i)
        * ((k - i) ** i * (k - i + 1) ** (n - i) - (k - i - 1) ** i * (k - i) ** (n - i))
        for i in range(k)
    )


# -- rational series in x ---------------------------------------------------------------
class SeriesX:
    """``numerator(x) / denominator(x)`` with :class:`QPoly` coefficients.

    The denominator must have constant term 1, so coefficients follow from
    exact long division.
    """

    def __init__(self, numerator: Sequence[QPoly], denominator: Sequence[QPoly]):
        self.num = [_as_qpoly(c) for c in numerator]
        self.den = [_as_qpoly(c) for c in denominator]
        if not self.den or self.den[0] != QPoly([1]):
            raise ValueError("denominator must have constant term 1")
        self._cache: list[QPoly] = []

    def coefficient(self, n: int) -> QPoly:
        while len(self._cache) <= n:
            m = len(self._cache)
            c = self.num[m] if m < len(self.num) else QPoly()
            for k in range(1, min(m, len(self.den) - 1) + 1):
                c = c - self.den[k] * self._cache[m - k]
            self._cache.append(c)
        return self._cache[n]

    def coefficients(self, upto: int) -> list[QPoly]:
        return [self.coefficient(i) for i in range(upto + 1)]


def _poly_x_mul(a: list[QPoly], b: list[QPoly]) -> list[QPoly]:
    out = [QPoly() for _ in range(len(a) + len(b) - 1)]
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] = out[i + j] + u * v
    return out


def _bd_denominator() -> list[QPoly]:
    two = q_int(2)
    f1 = [QPoly([1]), -Q ** 2]
    f2 = [QPoly([1]), -(Q + Q ** 2)]
    f3 = [QPoly([1]), -(two ** 2), Q ** 3 * two]
    return _poly_x_mul(_poly_x_mul(f1, f2), f3)


def typeB_F_series() -> SeriesX:
    """Generating series ``sum_n F_{B_n}(q) x^n``."""
    num = [
        QPoly([1]),
        QPoly([0, -1, -3]),
        QPoly([0, -1, 0, 5, 4]),
        Q ** 4 * QPoly([-2, -5, -3]),
        Q ** 6 * q_int(2) ** 2,
    ]
    return SeriesX(num, _bd_denominator())


def typeD_F_series() -> SeriesX:
    """Generating series ``sum_n F_{D_n}(q) x^n``."""
    num = [
        QPoly([1]),
        -QPoly([0, 1, 3]),
        -QPoly([0, 0, 1, -1, -4]),
        -QPoly([0, 2, 3, -2, -8, -2, 3]),
        QPoly([0, 0, 0, 2, 3, -3, -9, -4, 1]),
        -QPoly([0, 0, 0, 0, 0, 0, 1, 0, -3, -2]),
    ]
    return SeriesX(num, _bd_denominator())


def typeB_F(n: int) -> QPoly:
    return typeB_F_series().coefficient(n)


def typeD_F(n: int) -> QPoly:
    return typeD_F_series().coefficient(n)


def typeB_A(n: int) -> QPoly:
    """Rank generating function of ``Q_J`` for ``B_n``, ``omega_1``; degree ``2n - 1``."""
    return typeB_F(n).reversed(2 * n - 1)


def typeD_A(n: int) -> QPoly:
    """Rank generating function of ``Q_J`` for ``D_n``, ``omega_1``; degree ``2n - 2``."""
    return typeD_F(n).reversed(2 * n - 2)


# -- type C ---------------------------------------------------------------------------------
def typeC_count(n: int) -> int:
    """``sum_{i=0}^n 2^{n-i} n!/i!``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(2 ** (n - i) * factorial(n) // factorial(i) for i in range(n + 1))


def typeC_recurrence(n: int) -> int:
    """``F_0 = 1``, ``F_{m+1} = 2(m+1) F_m + 1``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = 1
    for m in range(n):
        f = 2 * (m + 1) * f + 1
    return f


def typeC_sqrt_e_floor(n: int) -> int:
    """Greatest integer below ``2^n n! sqrt(e)``, certified by rational bounds."""
    scale = 2 ** n * factorial(n)
    terms = n + 10
    while True:
        lo = sum(Fraction(1, 2 ** k * factorial(k)) for k in range(terms))
        # geometric bound on the tail of sum_k (1/2)^k / k!
        hi = lo + Fraction(2, 2 ** terms * factorial(terms))
        a, b = lo * scale, hi * scale
        if int(a) == int(b) and a.denominator != 1:
            return int(a)
        terms += 5


def typeC_check(n: int) -> bool:
    c = typeC_count(n)
    return c == typeC_recurrence(n) == typeC_sqrt_e_floor(n)
