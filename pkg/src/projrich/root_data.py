"""
Root systems of classical type with Bourbaki node numbering.

Roots are integer vectors in simple-root coordinates, coweights are integer
vectors in fundamental-coweight coordinates, so that the pairing
``<chi, alpha>`` is a plain dot product.

====  =========================================================
type  simple roots (Euclidean), nodes 1..n
====  =========================================================
A_n   a_i = e_i - e_{i+1}                            (1 <= i <= n)
B_n   a_i = e_i - e_{i+1} (i < n),  a_n = e_n
C_n   a_i = e_i - e_{i+1} (i < n),  a_n = 2 e_n
D_n   a_i = e_i - e_{i+1} (i < n),  a_n = e_{n-1} + e_n
====  =========================================================

The affine node is labelled 0; its classical simple root is ``-theta``.

>>> rs = build_root_system("A", 2)
>>> len(rs.roots), len(rs.positive_roots), rs.highest_root
(6, 3, (1, 1))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

__all__ = [
    "Root", "Coweight", "RootSystem", "AffineRoot",
    "build_root_system", "pairing", "MIN_RANK",
]

Root = tuple[int, ...]
Coweight = tuple[int, ...]

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def _euclidean_simple_roots(letter: str, n: int) -> list[list[int]]:
    dim = n + 1 if letter == "A" else n
    roots = []
    for i in range(n - 1 if letter != "A" else n):
        v = [0] * dim
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    if letter == "A":
        return roots
    v = [0] * dim
    if letter == "B":
        v[n - 1] = 1
    elif letter == "C":
        v[n - 1] = 2
    else:
        v[n - 2] = v[n - 1] = 1
    roots.append(v)
    return roots


def pairing(chi: Coweight, alpha: Root) -> int:
    """``<chi, alpha>`` for a coweight and a root in their native coordinates."""
    return sum(c * a for c, a in zip(chi, alpha))


@dataclass(frozen=True)
class AffineRoot:
    """The affine root ``alpha + level * delta``."""
    classical: Root
    level: int

    def is_positive(self) -> bool:
        return self.level > 0 or (self.level == 0 and any(c > 0 for c in self.classical))


class RootSystem:
    """Exact Cartan data for a classical root system.

    Instances are cached per ``(letter, rank)`` by :func:`build_root_system`
    and must be treated as immutable.
    """

    def __init__(self, letter: str, rank: int):
        self.letter = letter
        self.rank = rank
        eu = _euclidean_simple_roots(letter, rank)
        # Gram matrix of the simple roots
        self.gram = tuple(
            tuple(sum(a * b for a, b in zip(u, v)) for v in eu) for u in eu
        )
        # cartan[i][j] = <alpha_i^vee, alpha_j>
        self.cartan = tuple(
            tuple(2 * self.gram[i][j] // self.gram[i][i] for j in range(rank))
            for i in range(rank)
        )
        self.roots = self._reflection_closure()
        self.positive_roots = tuple(
            r for r in self.roots if all(c >= 0 for c in r)
        )
        self.root_index = {r: k for k, r in enumerate(self.roots)}

    # -- construction ---------------------------------------------------
    def _reflection_closure(self) -> tuple[Root, ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(n):
                    gamma = self.reflect(i + 1, beta)
                    if gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        return tuple(sorted(seen, key=lambda r: (-sum(r), tuple(-c for c in r))))

    # -- basic data -----------------------------------------------------
    def simple_root(self, i: int) -> Root:
        """Classical simple root of node ``i``; node 0 gives ``-theta``."""
        if i == 0:
            return tuple(-c for c in self.highest_root)
        return tuple(int(i - 1 == j) for j in range(self.rank))

    def reflect(self, i: int, beta: Root) -> Root:
        """``s_i(beta)`` for a finite node ``i`` in 1..rank."""
        row = self.cartan[i - 1]
        k = sum(a * b for a, b in zip(row, beta))
        out = list(beta)
        out[i - 1] -= k
        return tuple(out)

    def inner(self, a: Root, b: Root) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def coroot(self, beta: Root) -> Coweight:
        """``beta^vee`` in fundamental-coweight coordinates."""
        bb = self.inner(beta, beta)
        out = []
        for j in range(self.rank):
            num = 2 * sum(beta[k] * self.gram[k][j] for k in range(self.rank))
            if num % bb:
                raise ArithmeticError("non-integral coroot")
            out.append(num // bb)
        return tuple(out)

    @cached_property
    def highest_root(self) -> Root:
        top = [r for r in self.positive_roots
               if not any(self._add_simple(r, i) in self.root_index for i in range(self.rank))]
        if len(top) != 1:
            raise ArithmeticError("root poset has no unique maximum")
        return top[0]

    def _add_simple(self, r: Root, i: int) -> Root:
        out = list(r)
        out[i] += 1
        return tuple(out)

    @cached_property
    def theta_coroot(self) -> Coweight:
        return self.coroot(self.highest_root)

    def is_root(self, beta: Root) -> bool:
        return tuple(beta) in self.root_index

    def is_positive(self, beta: Root) -> bool:
        return all(c >= 0 for c in beta)

    def pairing(self, chi: Coweight, alpha: Root) -> int:
        return pairing(chi, alpha)

    def two_rho_pairing(self, chi: Coweight) -> int:
        """``sum over positive roots of <chi, alpha>``."""
        return sum(pairing(chi, a) for a in self.positive_roots)

    def fundamental_coweight(self, i: int) -> Coweight:
        return tuple(int(i - 1 == j) for j in range(self.rank))

    def is_dominant(self, chi: Coweight) -> bool:
        return all(c >= 0 for c in chi)

    def is_cominuscule(self, chi: Coweight) -> bool:
        """Dominant and pairing to 0 or 1 with every positive root."""
        return self.is_dominant(chi) and pairing(chi, self.highest_root) <= 1

    def in_coroot_lattice(self, chi: Coweight) -> bool:
        # chi = A^T n for integer n
        n = _solve_rational([list(col) for col in zip(*self.cartan)], list(chi))
        return all(x.denominator == 1 for x in n)

    @cached_property
    def fundamental_group_order(self) -> int:
        """``|P/Q|``, the determinant of the Cartan matrix."""
        return _det([list(r) for r in self.cartan])

    # -- affine roots ---------------------------------------------------
    def affine_simple_root(self, i: int) -> AffineRoot:
        return AffineRoot(self.simple_root(i), 1 if i == 0 else 0)

    # -- Omega ------------------------------------------------------------
    def omega_group(self) -> list:
        """Length-zero elements of the extended affine Weyl group."""
        from .coxeter import weyl_group
        return weyl_group(self).affine.omega_group()

    def omega_act(self, tau, a: AffineRoot) -> AffineRoot:
        from .coxeter import weyl_group
        return weyl_group(self).affine.act_on_affine_root(tau.element if hasattr(tau, "element") else tau, a)

    # -- misc -------------------------------------------------------------
    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    def summary(self) -> dict:
        return {
            "type": self.letter,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "n_roots": len(self.roots),
            "highest_root_coords": list(self.highest_root),
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.letter!r}, {self.rank})"


def _det(m: list[list[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return int(det)


def _solve_rational(m: list[list[int]], b: list[int]) -> list[Fraction]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c] / a[c][c]
                for k in range(c, n + 1):
                    a[r][k] -= f * a[c][k]
    return [a[i][n] / a[i][i] for i in range(n)]


@lru_cache(maxsize=None)
def build_root_system(letter: str, rank: int) -> RootSystem:
    """Root system of type ``letter`` in {A, B, C, D} and the given rank.

    >>> build_root_system("B", 2).cartan
    ((2, -1), (-2, 2))
    """
    letter = letter.upper()
    if letter not in MIN_RANK:
        raise ValueError(f"unsupported type {letter!r}")
    if not isinstance(rank, int) or rank < MIN_RANK[letter]:
        raise ValueError(f"type {letter} needs rank >= {MIN_RANK[letter]}, got {rank}")
    return RootSystem(letter, rank)
