"""
Finite and extended affine Weyl group arithmetic.

A finite element is a :class:`WeylElt`, interned per group and identified
by its action matrix on the simple roots.  An extended affine element
``t^chi w`` is an :class:`AffineElt` holding the coweight ``chi`` (in
fundamental-coweight coordinates) and the finite part ``w``.

Both groups share the Demazure-product machinery in :class:`_CoxeterOps`,
which only needs multiplication, length and a deterministic reduced word.

>>> from projrich.root_data import build_root_system
>>> W = weyl_group(build_root_system("A", 2))
>>> s1, s2 = W.s(1), W.s(2)
>>> W.demazure_star(s1, s2 * s1) is W.longest
True
"""

from __future__ import annotations

from array import array
from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import lru_cache

from .root_data import AffineRoot, Coweight, Root, RootSystem, pairing
from . import _kernels

__all__ = [
    "WeylElt", "AffineElt", "OmegaElt", "WeylGroup", "AffineWeylGroup",
    "weyl_group",
]

Matrix = tuple[tuple[int, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


class WeylElt:
    """Element of a finite Weyl group; interned, so ``is`` and ``==`` agree."""
    __slots__ = ("group", "index", "matrix", "length", "__weakref__")

    def __init__(self, group: "WeylGroup", index: int, matrix: Matrix, length: int):
        self.group = group
        self.index = index
        self.matrix = matrix
        self.length = length

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        if isinstance(other, WeylElt):
            g = self.group
            return g.elements[g.mul_table[self.index][other.index]]
        if isinstance(other, AffineElt):
            return AffineElt.from_finite(self) * other
        return NotImplemented

    def inverse(self) -> "WeylElt":
        g = self.group
        return g.elements[g.inverse_table[self.index]]

    def word(self) -> tuple[int, ...]:
        return self.group.reduced_word(self)[1]

    def __hash__(self) -> int:
        return self.index

    def __repr__(self) -> str:
        w = self.word()
        return "e" if not w else "s" + "s".join(map(str, w))


class AffineElt:
    """``t^chi w`` in the extended affine Weyl group."""
    __slots__ = ("chi", "w", "_hash")

    def __init__(self, chi: Coweight, w: WeylElt):
        self.chi = chi
        self.w = w
        self._hash = hash((chi, w.index))

    @classmethod
    def from_finite(cls, w: WeylElt) -> "AffineElt":
        return cls((0,) * w.group.rank, w)

    @property
    def is_finite(self) -> bool:
        return not any(self.chi)

    def __mul__(self, other):
        if isinstance(other, WeylElt):
            other = AffineElt.from_finite(other)
        elif not isinstance(other, AffineElt):
            return NotImplemented
        g = self.w.group
        chi2 = g.act_coweight(self.w, other.chi)
        return AffineElt(tuple(a + b for a, b in zip(self.chi, chi2)), self.w * other.w)

    def __rmul__(self, other):
        if isinstance(other, WeylElt):
            return AffineElt.from_finite(other) * self
        return NotImplemented

    def inverse(self) -> "AffineElt":
        wi = self.w.inverse()
        chi = self.w.group.act_coweight(wi, self.chi)
        return AffineElt(tuple(-c for c in chi), wi)

    def __eq__(self, other) -> bool:
        return (other.__class__ is AffineElt and self.w is other.w
                and self.chi == other.chi)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        tau, word = self.w.group.affine.reduced_word(self)
        label = self.w.group.affine.omega_label(tau)
        body = "s" + "s".join(map(str, word)) if word else "e"
        return body if label == 0 else f"tau{label}*{body}"


class OmegaElt:
    """Length-zero element with its permutation of the affine nodes."""
    __slots__ = ("element", "perm", "label")

    def __init__(self, element: AffineElt, perm: tuple[int, ...], label: int):
        self.element = element
        self.perm = perm
        self.label = label

    def __repr__(self) -> str:
        return f"OmegaElt(label={self.label}, perm={self.perm})"


class _CoxeterOps:
    """Demazure products and Bruhat-interval helpers shared by both groups.

    Subclasses provide ``nodes``, ``s``, ``length``, ``reduced_word``,
    ``from_word``, ``identity`` and ``bruhat_leq``.
    """

    def _is_right_descent(self, x, i: int) -> bool:
        return self.length(x * self.s(i)) < self.length(x)

    def _is_left_descent(self, x, i: int) -> bool:
        return self.length(self.s(i) * x) < self.length(x)

    def right_descents(self, x) -> list[int]:
        return [i for i in self.nodes if self._is_right_descent(x, i)]

    def left_descents(self, x) -> list[int]:
        return [i for i in self.nodes if self._is_left_descent(x, i)]

    def demazure_star(self, x, y):
        """``x * y``: the maximum of ``{uv : u <= x, v <= y}``."""
        tau, word = self.reduced_word(y)
        r = x * tau
        lr = self.length(r)
        for i in word:
            t = r * self.s(i)
            lt = self.length(t)
            if lt > lr:
                r, lr = t, lt
        return r

    def demazure_trir(self, x, y):
        """``x |> y``: the minimum of ``{uy : u <= x}``."""
        tau, word = self.reduced_word(x)
        r = y
        lr = self.length(r)
        for i in reversed(word):
            t = self.s(i) * r
            lt = self.length(t)
            if lt < lr:
                r, lr = t, lt
        return tau * r

    def demazure_tril(self, x, y):
        """``x <| y``: the minimum of ``{xv : v <= y}``."""
        tau, word = self.reduced_word(y)
        r = x * tau
        lr = self.length(r)
        for i in word:
            t = r * self.s(i)
            lt = self.length(t)
            if lt < lr:
                r, lr = t, lt
        return r

    def demazure_word(self, word: Iterable[int], start=None):
        """Demazure product of simple reflections ``s_i1 * ... * s_ik``."""
        r = self.identity if start is None else start
        lr = self.length(r)
        for i in word:
            t = r * self.s(i)
            lt = self.length(t)
            if lt > lr:
                r, lr = t, lt
        return r

    def lower_cone(self, x) -> set:
        """All ``z <= x``, as products of subwords of a reduced word of ``x``."""
        tau, word = self.reduced_word(x)
        cone = {tau}
        for i in word:
            s = self.s(i)
            cone |= {z * s for z in cone}
        return cone

    def all_reduced_words(self, x) -> list[tuple[int, ...]]:
        """Every reduced word of ``x`` (the length-zero part is dropped)."""
        return list(self._all_reduced_words(x))

    def _all_reduced_words(self, x):
        if self.length(x) == 0:
            return [()]
        out = []
        for i in self.right_descents(x):
            for w in self._all_reduced_words(x * self.s(i)):
                out.append(w + (i,))
        return out

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.length(self.from_word(self.identity, word)) == len(word)


class WeylGroup(_CoxeterOps):
    """Finite Weyl group of a root system, fully enumerated with tables."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = n = rs.rank
        self.nodes = tuple(range(1, n + 1))
        gens = [self._reflection_matrix(i) for i in self.nodes]
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        mats = [ident]
        index = {ident: 0}
        # parent[k] = (j, g): element k is element j times generator g
        parent: list[tuple[int, int]] = [(-1, -1)]
        right: list[list[int]] = []
        k = 0
        while k < len(mats):
            row = []
            for gi, g in enumerate(gens):
                p = _matmul(mats[k], g)
                j = index.get(p)
                if j is None:
                    j = index[p] = len(mats)
                    mats.append(p)
                    parent.append((k, gi))
                row.append(j)
            right.append(row)
            k += 1
        self._matrix_index = index
        pos = rs.positive_roots
        self.elements: list[WeylElt] = []
        for k, m in enumerate(mats):
            ln = sum(1 for a in pos if not rs.is_positive(_apply(m, a)))
            self.elements.append(WeylElt(self, k, m, ln))
        size = len(mats)
        self.order = size
        self.mul_table = _kernels.mul_table(right, parent)
        self.inverse_table = [row.index(0) for row in self.mul_table]
        self.identity = self.elements[0]
        self._gens = [self.elements[index[g]] for g in gens]
        self.longest = max(self.elements, key=lambda w: w.length)
        self._words: dict[int, tuple[int, ...]] = {}
        self._parent = parent
        self._right = right
        self._cones = _kernels.bruhat_cones(right, parent)
        self.affine = AffineWeylGroup(self)

    def _reflection_matrix(self, i: int) -> Matrix:
        a = self.rs.cartan
        n = self.rank
        return tuple(
            tuple(int(r == c) - (a[i - 1][c] if r == i - 1 else 0) for c in range(n))
            for r in range(n)
        )

    # -- basic ops --------------------------------------------------------
    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def s(self, i: int) -> WeylElt:
        return self._gens[i - 1]

    def length(self, w: WeylElt) -> int:
        return w.length

    def from_matrix(self, m: Matrix) -> WeylElt:
        return self.elements[self._matrix_index[m]]

    def from_word(self, tau, word: Iterable[int]) -> WeylElt:
        r = self.identity if tau is None else tau
        for i in word:
            r = r * self.s(i)
        return r

    def reduced_word(self, w: WeylElt) -> tuple[WeylElt, tuple[int, ...]]:
        """Deterministic reduced word, peeling the smallest right descent first."""
        word = self._words.get(w.index)
        if word is None:
            peeled = []
            x = w
            while x.length:
                i = next(i for i in self.nodes if (x * self.s(i)).length < x.length)
                peeled.append(i)
                x = x * self.s(i)
            word = tuple(reversed(peeled))
            self._words[w.index] = word
        return self.identity, word

    def act_root(self, w: WeylElt, beta: Root) -> Root:
        return _apply(w.matrix, beta)

    @lru_cache(maxsize=None)
    def _coweight_matrix(self, w: WeylElt) -> Matrix:
        # <w chi, alpha_j> = <chi, w^{-1} alpha_j>
        return tuple(zip(*w.inverse().matrix))

    def act_coweight(self, w: WeylElt, chi: Coweight) -> Coweight:
        if not any(chi):
            return chi
        return _apply(self._coweight_matrix(w), chi)

    def reflection(self, beta: Root) -> WeylElt:
        """The reflection ``r_beta``."""
        chk = self.rs.coroot(beta)
        n = self.rank
        # column j: alpha_j - <beta^vee, alpha_j> beta
        m = tuple(
            tuple(int(r == c) - chk[c] * beta[r] for c in range(n))
            for r in range(n)
        )
        return self.from_matrix(m)

    # -- Bruhat order -------------------------------------------------------
    def bruhat_leq(self, z: WeylElt, x: WeylElt) -> bool:
        # cones[x][z] is 1 iff z is a subword product of a reduced word of x
        return self._cones[x.index][z.index] == 1

    # -- parabolic data -----------------------------------------------------
    @lru_cache(maxsize=None)
    def parabolic(self, J: frozenset[int]) -> tuple[WeylElt, ...]:
        """Elements of ``W_J``, length-sorted."""
        J = frozenset(J)
        out = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for j in J:
                    v = w * self.s(j)
                    if v not in out:
                        out.add(v)
                        nxt.append(v)
            frontier = nxt
        return tuple(sorted(out, key=lambda w: (w.length, w.index)))

    def longest_in(self, J: Iterable[int]) -> WeylElt:
        return self.parabolic(frozenset(J))[-1]

    @lru_cache(maxsize=None)
    def coset_reps(self, J: frozenset[int]) -> tuple[tuple[WeylElt, ...], tuple[WeylElt, ...], tuple[WeylElt, ...]]:
        """``(W^J, ^J W, W^J_max)``: min left-coset reps, min right-coset reps,
        and max reps of ``W / W_J``."""
        J = frozenset(J)
        mins = tuple(w for w in self.elements
                     if all((w * self.s(j)).length > w.length for j in J))
        lmins = tuple(w for w in self.elements
                      if all((self.s(j) * w).length > w.length for j in J))
        wJ = self.longest_in(J)
        maxs = tuple(w * wJ for w in mins)
        return mins, lmins, maxs

    def min_in_coset(self, x, J: Iterable[int], side: str = "right"):
        """``min(x W_J)`` for ``side='right'``, ``min(W_J x)`` for ``'left'``."""
        wJ = self.longest_in(J)
        ops = self if isinstance(x, WeylElt) else self.affine
        if side == "right":
            return ops.demazure_tril(x, wJ)
        return ops.demazure_trir(wJ, x)

    def max_in_coset(self, x, J: Iterable[int], side: str = "right"):
        wJ = self.longest_in(J)
        ops = self if isinstance(x, WeylElt) else self.affine
        if side == "right":
            return ops.demazure_star(x, wJ)
        return ops.demazure_star(wJ, x)

    # -- w -> w_S w w_S -------------------------------------------------------
    def st_conjugate(self, w: WeylElt) -> WeylElt:
        if not isinstance(w, WeylElt):
            if isinstance(w, AffineElt) and w.is_finite:
                w = w.w
            else:
                raise TypeError("conjugation by w_S is defined on finite elements only")
        return self.longest * w * self.longest

    def st_node(self, i: int) -> int:
        c = self.st_conjugate(self.s(i))
        return next(j for j in self.nodes if self.s(j) is c)

    def st_subset(self, J: Iterable[int]) -> frozenset[int]:
        return frozenset(self.st_node(j) for j in J)

    def __repr__(self) -> str:
        return f"WeylGroup({self.rs.name})"


def _apply(m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


class AffineWeylGroup(_CoxeterOps):
    """Extended affine Weyl group ``P x| W`` with ``s_0 = t^{-theta^vee} s_theta``."""

    def __init__(self, W: WeylGroup):
        self.W = W
        rs = W.rs
        self.rs = rs
        self.rank = rs.rank
        self.nodes = tuple(range(0, rs.rank + 1))
        zero = (0,) * rs.rank
        self.identity = AffineElt(zero, W.identity)
        s_theta = W.reflection(rs.highest_root)
        theta_v = rs.theta_coroot
        self._gens = [AffineElt(tuple(-c for c in theta_v), s_theta)]
        self._gens += [AffineElt(zero, W.s(i)) for i in W.nodes]
        pos = rs.positive_roots
        self._pos = pos
        # for each w: 1 where w^{-1} alpha < 0, per positive root
        self._inv_mask = [
            bytes(0 if rs.is_positive(W.act_root(w.inverse(), a)) else 1 for a in pos)
            for w in W.elements
        ]
        self._pos_flat = array("l", [c for a in pos for c in a])
        self._lengths: dict[AffineElt, int] = {}
        self._words: dict[AffineElt, tuple[AffineElt, tuple[int, ...]]] = {}
        self._bruhat: dict[tuple[AffineElt, AffineElt], bool] = {}
        inv_t = _inverse_transpose(rs.cartan)
        self._p_mod_q = inv_t
        self._omega_cache: list[OmegaElt] | None = None

    # -- basics ---------------------------------------------------------------
    def s(self, i: int) -> AffineElt:
        return self._gens[i]

    def translation(self, chi: Coweight) -> AffineElt:
        return AffineElt(tuple(chi), self.W.identity)

    def element(self, chi: Coweight, w: WeylElt) -> AffineElt:
        return AffineElt(tuple(chi), w)

    def lift(self, w) -> AffineElt:
        return w if isinstance(w, AffineElt) else AffineElt.from_finite(w)

    def length(self, x: AffineElt) -> int:
        """Iwahori-Matsumoto length."""
        if isinstance(x, WeylElt):
            return x.length
        ln = self._lengths.get(x)
        if ln is None:
            if x.is_finite:
                ln = x.w.length
            else:
                ln = _kernels.im_length(x.chi, self._inv_mask[x.w.index], self._pos_flat, self.rank)
            self._lengths[x] = ln
        return ln

    def from_word(self, tau, word: Iterable[int]) -> AffineElt:
        r = self.identity if tau is None else tau
        for i in word:
            r = r * self.s(i)
        return r

    def reduced_word(self, x: AffineElt) -> tuple[AffineElt, tuple[int, ...]]:
        """``(tau, word)`` with ``x = tau * s_word``, ``tau`` of length zero.

        Peels the smallest-index right descent first.
        """
        if isinstance(x, WeylElt):
            x = AffineElt.from_finite(x)
        hit = self._words.get(x)
        if hit is not None:
            return hit
        peeled = []
        y = x
        ly = self.length(y)
        while ly:
            for i in self.nodes:
                t = y * self._gens[i]
                lt = self.length(t)
                if lt < ly:
                    peeled.append(i)
                    y, ly = t, lt
                    break
        out = (y, tuple(reversed(peeled)))
        self._words[x] = out
        return out

    def omega_part(self, x: AffineElt) -> AffineElt:
        return self.reduced_word(x)[0]

    def coset_class(self, chi: Coweight) -> tuple[Fraction, ...]:
        """Class of ``chi`` in ``P/Q`` as fractional coordinates."""
        return tuple((sum(r * c for r, c in zip(row, chi))) % 1 for row in self._p_mod_q)

    def same_component(self, x: AffineElt, y: AffineElt) -> bool:
        diff = tuple(a - b for a, b in zip(x.chi, y.chi))
        return all(v == 0 for v in self.coset_class(diff))

    # -- action on affine roots -------------------------------------------------
    def act_on_affine_root(self, x: AffineElt, a: AffineRoot) -> AffineRoot:
        """``(t^chi w)(alpha + n delta) = w alpha + (n + <chi, w alpha>) delta``."""
        if isinstance(x, OmegaElt):
            x = x.element
        beta = self.W.act_root(x.w, a.classical)
        return AffineRoot(beta, a.level + pairing(x.chi, beta))

    def classical_action(self, x) -> WeylElt:
        """Finite part through which ``x`` acts on classical projections."""
        if isinstance(x, OmegaElt):
            x = x.element
        return x.w if isinstance(x, AffineElt) else x

    # -- Bruhat order -------------------------------------------------------
    def bruhat_leq(self, z: AffineElt, x: AffineElt) -> bool:
        """Bruhat order; elements in different ``Omega`` components are incomparable."""
        if isinstance(z, WeylElt):
            z = AffineElt.from_finite(z)
        if isinstance(x, WeylElt):
            x = AffineElt.from_finite(x)
        if z == x:
            return True
        lz, lx = self.length(z), self.length(x)
        if lz >= lx:
            return False
        if z.is_finite and x.is_finite:
            return self.W.bruhat_leq(z.w, x.w)
        if not self.same_component(z, x):
            return False
        return self._bruhat_rec(z, x, lz, lx)

    def _bruhat_rec(self, z: AffineElt, x: AffineElt, lz: int, lx: int) -> bool:
        if z == x:
            return True
        if lz >= lx:
            return False
        if lz == 0:
            # z is a length-zero element of x's component
            return True
        key = (z, x)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        # x has a left descent; pick the smallest
        for i in self.nodes:
            s = self._gens[i]
            sx = s * x
            if self.length(sx) < lx:
                break
        sz = s * z
        lsz = self.length(sz)
        if lsz < lz:
            res = self._bruhat_rec(sz, sx, lsz, lx - 1)
        else:
            res = self._bruhat_rec(z, sx, lz, lx - 1)
        self._bruhat[key] = res
        return res

    # -- Omega ------------------------------------------------------------------
    def omega_group(self) -> list[OmegaElt]:
        """All length-zero elements, identity first, sorted by node permutation."""
        if self._omega_cache is None:
            rs = self.rs
            found = {self.identity}
            frontier = [self.identity]
            gens = [self.omega_part(self.translation(rs.fundamental_coweight(i)))
                    for i in range(1, rs.rank + 1)]
            while frontier:
                nxt = []
                for t in frontier:
                    for g in gens:
                        p = t * g
                        if p not in found:
                            found.add(p)
                            nxt.append(p)
                frontier = nxt
            elts = [(self._node_perm(t), t) for t in found]
            elts.sort(key=lambda pt: pt[0])
            self._omega_cache = [OmegaElt(t, p, k) for k, (p, t) in enumerate(elts)]
        return self._omega_cache

    def _node_perm(self, tau: AffineElt) -> tuple[int, ...]:
        ti = tau.inverse()
        perm = []
        for i in self.nodes:
            c = tau * self._gens[i] * ti
            perm.append(next(j for j in self.nodes if self._gens[j] == c))
        return tuple(perm)

    def omega_label(self, tau: AffineElt) -> int:
        for o in self.omega_group():
            if o.element == tau:
                return o.label
        raise ValueError("not a length-zero element")

    def omega_by_label(self, label: int) -> AffineElt:
        return self.omega_group()[label].element

    # -- enumeration ------------------------------------------------------------
    def elements_up_to(self, max_len: int, omegas: bool = True) -> list[AffineElt]:
        """Elements of length ``<= max_len`` (every ``Omega`` component if asked)."""
        starts = [o.element for o in self.omega_group()] if omegas else [self.identity]
        seen = set(starts)
        frontier = list(starts)
        out = list(starts)
        for ln in range(1, max_len + 1):
            nxt = []
            for x in frontier:
                for i in self.nodes:
                    y = x * self._gens[i]
                    if y not in seen and self.length(y) == ln:
                        seen.add(y)
                        nxt.append(y)
            out.extend(nxt)
            frontier = nxt
        return out

    def double_coset(self, x: AffineElt) -> set[AffineElt]:
        """``W x W``."""
        W = self.W
        return {AffineElt.from_finite(u) * x * v for u in W for v in W}

    def __repr__(self) -> str:
        return f"AffineWeylGroup({self.rs.name})"


def _inverse_transpose(cartan: Matrix) -> list[list[Fraction]]:
    n = len(cartan)
    at = [[Fraction(cartan[j][i]) for j in range(n)] for i in range(n)]
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(at)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [v / piv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [v - f * u for v, u in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    """The (cached) finite Weyl group of ``rs``; its affine group is ``.affine``."""
    return WeylGroup(rs)


def element_to_json(x) -> dict:
    """``{"omega": label, "word": [...]}`` for finite or affine elements."""
    if isinstance(x, WeylElt):
        return {"omega": 0, "word": list(x.group.reduced_word(x)[1])}
    A = x.w.group.affine
    tau, word = A.reduced_word(x)
    return {"omega": A.omega_label(tau), "word": list(word)}


def element_from_json(group, data: dict):
    """Inverse of :func:`element_to_json`; ``group`` picks finite vs affine."""
    if not isinstance(data, dict) or "word" not in data:
        raise ValueError("element must be an object with a 'word' list")
    word = [int(i) for i in data["word"]]
    label = int(data.get("omega", 0))
    if any(i not in group.nodes for i in word):
        raise ValueError(f"word {word} uses a node outside {group.nodes}")
    if isinstance(group, WeylGroup):
        if label != 0:
            raise ValueError("finite elements have trivial omega part")
        return group.from_word(None, word)
    omegas = group.omega_group()
    if not 0 <= label < len(omegas):
        raise ValueError(f"omega label {label} out of range")
    return group.from_word(omegas[label].element, word)
