"""
Exact sparse polynomials over the integers.

:class:`PolyH` lives in ``Z[alpha_1, ..., alpha_r]`` (equivariant cohomology
of a point); a Weyl element acts by substituting ``alpha_i -> w(alpha_i)``.

:class:`LaurentK` lives in the group ring ``Z[Q]`` of the root lattice
(equivariant K-theory of a point); ``e^beta`` is the monomial with exponent
vector ``beta`` and a Weyl element acts linearly on exponents.

>>> a1, a2 = PolyH.linear((1, 0)), PolyH.linear((0, 1))
>>> (a1 + a2) * (a1 - a2) == a1 * a1 - a2 * a2
True
>>> one_minus = LaurentK.one_minus_exp((1, 0))
>>> (one_minus * one_minus).exact_div(one_minus) == one_minus
True
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

__all__ = ["PolyH", "LaurentK", "InexactDivision"]

Exp = tuple[int, ...]


class InexactDivision(ArithmeticError):
    """A division that was required to be exact left a remainder."""


class _Sparse:
    """Dict-of-monomials integer polynomial; subclasses fix the Weyl action."""
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, int] | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int):
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def const(cls, nvars: int, c: int):
        return cls(nvars, {(0,) * nvars: c})

    def _new(self, terms):
        out = self.__class__.__new__(self.__class__)
        out.nvars = self.nvars
        out.terms = terms
        out._hash = None
        return out

    # -- ring ops -------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = self.const(self.nvars, other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if not isinstance(other, int) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self._new({})
            return self._new({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, _Sparse):
            return NotImplemented
        t: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return self._new({e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.const(self.nvars, other)
        if not isinstance(other, _Sparse):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- division ---------------------------------------------------------------
    def exact_div(self, other):
        """Quotient ``self / other``; raises :class:`InexactDivision` otherwise."""
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return self._new({})
        sa, a = _normalize(self.terms, self.nvars, self._allow_shift)
        sb, b = _normalize(other.terms, self.nvars, self._allow_shift)
        q = _lex_exact_div(a, b)
        shift = tuple(x - y for x, y in zip(sa, sb))
        if not self._allow_shift and any(s < 0 for s in shift):
            raise InexactDivision("negative exponent in polynomial quotient")
        return self._new({tuple(e + s for e, s in zip(m, shift)): c for m, c in q.items()})

    _allow_shift = False

    # -- misc -------------------------------------------------------------------
    def serialize(self) -> list:
        return [[list(e), c] for e, c in sorted(self.terms.items())]

    @classmethod
    def deserialize(cls, nvars: int, data: Iterable):
        return cls(nvars, {tuple(e): c for e, c in data})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = self._mono_str(e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _normalize(terms, nvars, allow_shift):
    if not allow_shift:
        return (0,) * nvars, terms
    mins = tuple(min(e[i] for e in terms) for i in range(nvars))
    return mins, {tuple(a - m for a, m in zip(e, mins)): c for e, c in terms.items()}


def _lex_exact_div(a: dict, b: dict) -> dict:
    lead_b = max(b)
    cb = b[lead_b]
    rem = dict(a)
    q: dict[Exp, int] = {}
    while rem:
        m = max(rem)
        c = rem[m]
        d = tuple(x - y for x, y in zip(m, lead_b))
        if any(x < 0 for x in d) or c % cb:
            raise InexactDivision("nonzero remainder")
        k = c // cb
        q[d] = q.get(d, 0) + k
        for e, cc in b.items():
            t = tuple(x + y for x, y in zip(e, d))
            v = rem.get(t, 0) - k * cc
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return q


class PolyH(_Sparse):
    """Polynomial in the simple roots; ``w`` acts by linear substitution."""
    __slots__ = ()

    @classmethod
    def linear(cls, beta: Sequence[int]) -> "PolyH":
        """The linear form of the root ``beta`` (simple-root coordinates)."""
        n = len(beta)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(beta) if c})

    @classmethod
    def product_of_roots(cls, betas: Iterable[Sequence[int]], nvars: int) -> "PolyH":
        out = cls.one(nvars)
        for b in betas:
            out = out * cls.linear(b)
        return out

    def act(self, matrix) -> "PolyH":
        """Apply the Weyl element with root-action ``matrix``."""
        n = self.nvars
        images = [PolyH.linear(tuple(matrix[r][i] for r in range(n))) for i in range(n)]
        powers: list[list[PolyH]] = [[PolyH.one(n)] for _ in range(n)]
        out = PolyH.zero(n)
        for e, c in self.terms.items():
            m = PolyH.const(n, c)
            for i, k in enumerate(e):
                while len(powers[i]) <= k:
                    powers[i].append(powers[i][-1] * images[i])
                if k:
                    m = m * powers[i][k]
            out = out + m
        return out

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (degree is None or degree in ds)

    def _mono_str(self, e) -> str:
        return "*".join(f"a{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)


class LaurentK(_Sparse):
    """Laurent polynomial in ``e^{alpha_i}``; ``w`` acts on exponent vectors."""
    __slots__ = ()
    _allow_shift = True

    @classmethod
    def monomial(cls, beta: Sequence[int], coeff: int = 1) -> "LaurentK":
        return cls(len(beta), {tuple(beta): coeff})

    @classmethod
    def one_minus_exp(cls, beta: Sequence[int]) -> "LaurentK":
        """``1 - e^beta``."""
        n = len(beta)
        return cls(n, {(0,) * n: 1}) - cls.monomial(beta)

    def act(self, matrix) -> "LaurentK":
        n = self.nvars
        t: dict[Exp, int] = {}
        for e, c in self.terms.items():
            img = tuple(sum(matrix[r][j] * e[j] for j in range(n)) for r in range(n))
            t[img] = t.get(img, 0) + c
        return self._new({k: v for k, v in t.items() if v})

    def _mono_str(self, e) -> str:
        if not any(e):
            return ""
        return "e^(" + ",".join(map(str, e)) + ")"
