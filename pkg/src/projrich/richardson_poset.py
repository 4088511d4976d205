"""
The projected Richardson poset ``Q_J``, the admissible set, and the map
``theta(x, y) = y t^{-lambda} x^{-1}`` between them.

``Q_J`` consists of pairs ``(x, y)`` with ``x`` a minimal left-coset
representative for ``W_J`` and ``y <= x``; it is ordered by

    (x', y') <= (x, y)  iff  x' u <= x and y' u >= y for some u in W_J.

>>> from projrich.root_data import build_root_system
>>> rs = build_root_system("A", 2)
>>> len(build_QJ(rs, (1, 0))), len(admissible_set(rs, (1, 0)).elements)
(7, 7)
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

from .coxeter import AffineElt, WeylElt, WeylGroup, weyl_group
from .reports import Report
from .root_data import Coweight, RootSystem

__all__ = [
    "QJPair", "PosetGraph", "AdmissibleSet",
    "J_of", "build_QJ", "build_QJ_for", "preceq", "theta", "admissible_set",
    "verify_prop_equiv", "verify_theorem_combin",
    "appendix_f", "appendix_g", "appendix_h", "verify_appendix",
    "qj_poset", "poset_diagnostics", "NotGradedError",
]


class QJPair(NamedTuple):
    x: WeylElt
    y: WeylElt


def _check_dominant(rs: RootSystem, lam: Sequence[int]) -> Coweight:
    lam = tuple(int(c) for c in lam)
    if len(lam) != rs.rank:
        raise ValueError(f"coweight {lam} has length {len(lam)}, expected {rs.rank}")
    if not rs.is_dominant(lam):
        raise ValueError(f"coweight {lam} is not dominant")
    return lam


def J_of(rs: RootSystem, lam: Sequence[int]) -> frozenset[int]:
    """Nodes ``i`` with ``<lambda, alpha_i> = 0``."""
    lam = _check_dominant(rs, lam)
    return frozenset(i + 1 for i, c in enumerate(lam) if c == 0)


def build_QJ_for(W: WeylGroup, J: Iterable[int]) -> list[QJPair]:
    mins = W.coset_reps(frozenset(J))[0]
    return [QJPair(x, y) for x in mins for y in W if W.bruhat_leq(y, x)]


def build_QJ(rs: RootSystem, lam: Sequence[int]) -> list[QJPair]:
    """All ``(x, y)`` with ``x in W^J`` and ``y <= x``."""
    return build_QJ_for(weyl_group(rs), J_of(rs, lam))


def preceq(W: WeylGroup, lo: tuple, hi: tuple, J: Iterable[int]) -> bool:
    """``lo <= hi`` in ``(W^J x W, preceq)``."""
    (x1, y1), (x, y) = lo, hi
    leq = W.bruhat_leq
    return any(leq(x1 * u, x) and leq(y, y1 * u) for u in W.parabolic(frozenset(J)))


def theta(rs: RootSystem, pair: tuple, lam: Sequence[int]) -> AffineElt:
    """``y t^{-lambda} x^{-1}``."""
    x, y = pair
    W = weyl_group(rs)
    neg = tuple(-c for c in lam)
    return AffineElt(W.act_coweight(y, neg), y * x.inverse())


@dataclass
class AdmissibleSet:
    """``{z : z <= t^{-w lambda} for some w in W}``, the admissible set of ``-w_S lambda``."""
    lam: Coweight
    maxima: tuple[AffineElt, ...]
    elements: frozenset[AffineElt]

    def __contains__(self, z) -> bool:
        return z in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def admissible_set(rs: RootSystem, lam: Sequence[int]) -> AdmissibleSet:
    """Union of the lower cones of the translations ``t^{-w lambda}``."""
    lam = _check_dominant(rs, lam)
    W = weyl_group(rs)
    A = W.affine
    J = J_of(rs, lam)
    neg = tuple(-c for c in lam)
    tops = tuple(A.translation(W.act_coweight(w, neg)) for w in W.coset_reps(J)[0])
    elems: set[AffineElt] = set()
    for t in tops:
        elems |= A.lower_cone(t)
    return AdmissibleSet(lam, tops, frozenset(elems))


def _instance(rs: RootSystem, lam) -> str:
    return f"{rs.name} lambda={','.join(map(str, lam))}"


def verify_prop_equiv(rs: RootSystem, lam: Sequence[int]) -> Report:
    """Exhaustive agreement of the three equivalent Bruhat conditions on
    ``y' t^{-lambda} x'^{-1}`` versus ``y t^{-lambda} x^{-1}``."""
    lam = _check_dominant(rs, lam)
    W = weyl_group(rs)
    A = W.affine
    J = J_of(rs, lam)
    WJ = W.parabolic(J)
    mins = W.coset_reps(J)[0]
    leq = W.bruhat_leq
    rep = Report("prop_equiv", _instance(rs, lam))
    th = {(x, y): theta(rs, (x, y), lam) for x in mins for y in W}
    for x, x1, y, y1 in product(mins, mins, W, W):
        c1 = A.bruhat_leq(th[x1, y1], th[x, y])
        c2 = any(leq(y1 * u, y) and leq(x * u.inverse(), x1) for u in WJ)
        c3 = any(leq(y1, y * v) and leq(x * v, x1) for v in WJ)
        rep.check(c1 == c2 == c3, x=x, x_prime=x1, y=y, y_prime=y1,
                  conditions=[c1, c2, c3])
    return rep


def verify_theorem_combin(rs: RootSystem, lam: Sequence[int]) -> Report:
    """Bijection, order reversal, grading and image of ``theta``."""
    lam = _check_dominant(rs, lam)
    W = weyl_group(rs)
    A = W.affine
    J = J_of(rs, lam)
    mins = W.coset_reps(J)[0]
    rep = Report("theorem_combin", _instance(rs, lam))
    t_lam = A.translation(tuple(-c for c in lam))
    l_t = A.length(t_lam)

    domain = [(x, y) for x in mins for y in W]
    img = {p: theta(rs, p, lam) for p in domain}
    dc = A.double_coset(t_lam)
    rep.check(len(set(img.values())) == len(domain), check="injective")
    rep.check(set(img.values()) == dc, check="onto double coset",
              sizes=[len(set(img.values())), len(dc)])

    # extremes of the double coset
    wJ, wS = W.longest_in(J), W.longest
    lo = t_lam * wJ * wS
    hi = wS * t_lam
    rep.check(all(A.bruhat_leq(lo, z) and A.bruhat_leq(z, hi) for z in dc),
              check="double coset extremes", lo=lo, hi=hi)

    for (x, y), z in img.items():
        rep.check(A.length(z) == l_t + y.length - x.length, check="grading", x=x, y=y)

    for p1, p in product(domain, domain):
        a = preceq(W, p1, p, J)
        b = A.bruhat_leq(img[p], img[p1])
        rep.check(a == b, check="order", lo=list(p1), hi=list(p), preceq=a, bruhat=b)

    qj = [p for p in domain if W.bruhat_leq(p[1], p[0])]
    adm = admissible_set(rs, lam)
    qj_img = {img[p] for p in qj}
    rep.check(qj_img == (dc & adm.elements), check="Q_J image is double coset meet Adm",
              sizes=[len(qj_img), len(dc & adm.elements)])
    if rs.is_cominuscule(lam):
        rep.check(qj_img == adm.elements, check="cominuscule: image is all of Adm",
                  sizes=[len(qj_img), len(adm)])
    rep.notes.update(n_QJ=len(qj), n_adm=len(adm), n_double_coset=len(dc))
    return rep


# -- appendix posets -------------------------------------------------------------
def _domains(W: WeylGroup, J: frozenset[int]):
    mins, _, maxs = W.coset_reps(J)
    WJ = W.parabolic(J)
    leq = W.bruhat_leq
    q_prime = [(a, b, c) for a in maxs for b in WJ for c in mins if leq(a, c * b)]
    omega = [(a, b) for a in maxs for b in W if leq(a, b)]
    qj = build_QJ_for(W, J)
    return q_prime, omega, [tuple(p) for p in qj]


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise ValueError(f"element outside the domain of {what}")


def appendix_f(W: WeylGroup, J: Iterable[int], abc: tuple) -> tuple:
    """``(a, b, c) -> (a, cb)``."""
    J = frozenset(J)
    a, b, c = abc
    mins, _, maxs = W.coset_reps(J)
    _require(a in maxs and b in W.parabolic(J) and c in mins and W.bruhat_leq(a, c * b), "f")
    return (a, c * b)


def appendix_g(W: WeylGroup, J: Iterable[int], ab: tuple) -> tuple:
    """``(a, b) -> (min(b W_J), a b^{-1} min(b W_J))``."""
    J = frozenset(J)
    a, b = ab
    _require(a in W.coset_reps(J)[2] and W.bruhat_leq(a, b), "g")
    m = W.min_in_coset(b, J, "right")
    return (m, a * b.inverse() * m)


def appendix_h(W: WeylGroup, J: Iterable[int], xy: tuple) -> tuple:
    """``(x, y) -> (max(y W_J), y^{-1} max(y W_J), x)``."""
    J = frozenset(J)
    x, y = xy
    _require(x in W.coset_reps(J)[0] and W.bruhat_leq(y, x), "h")
    m = W.max_in_coset(y, J, "right")
    return (m, y.inverse() * m, x)


def _order_q_prime(W: WeylGroup, J, lo, hi) -> bool:
    (a1, b1, c1), (a, b, c) = lo, hi
    leq = W.bruhat_leq
    left = a * b.inverse()
    for u1 in W.parabolic(J):
        u2 = u1.inverse() * b1
        if u1.length + u2.length != b1.length:
            continue
        mid = a1 * u2.inverse()
        right = c1 * u1
        if leq(left, mid) and leq(mid, right) and leq(right, c):
            return True
    return False


def _order_omega(W: WeylGroup, J, lo, hi) -> bool:
    (a1, b1), (a, b) = lo, hi
    leq = W.bruhat_leq
    return any(leq(a, a1 * z) and leq(b1 * z, b) for z in W.parabolic(J))


def verify_appendix(rs: RootSystem, J: Iterable[int]) -> Report:
    """``f``, ``g``, ``h`` are mutually inverse order isomorphisms."""
    W = weyl_group(rs)
    J = frozenset(J)
    rep = Report("appendix_bijections", f"{rs.name} J={sorted(J)}")
    qp, om, qj = _domains(W, J)
    f = lambda p: appendix_f(W, J, p)
    g = lambda p: appendix_g(W, J, p)
    h = lambda p: appendix_h(W, J, p)
    ord_qp = lambda p, q: _order_q_prime(W, J, p, q)
    ord_om = lambda p, q: _order_omega(W, J, p, q)
    ord_qj = lambda p, q: preceq(W, p, q, J)
    rep.check(len(qp) == len(om) == len(qj), check="sizes", sizes=[len(qp), len(om), len(qj)])
    sets = {"Q'": set(qp), "Omega": set(om), "Q": set(qj)}
    for name, src, dst, fn in (("f", qp, "Omega", f), ("g", om, "Q", g), ("h", qj, "Q'", h)):
        for p in src:
            rep.check(fn(p) in sets[dst], check=f"{name} lands in {dst}", element=list(p))
    for p in qp:
        rep.check(h(g(f(p))) == p, check="h.g.f = id", element=list(p))
    for p in qj:
        rep.check(g(f(h(p))) == p, check="g.f.h = id", element=list(p))
    for p in om:
        rep.check(f(h(g(p))) == p, check="f.h.g = id", element=list(p))
    for name, src, fn, o_src, o_dst in (
        ("f", qp, f, ord_qp, ord_om), ("g", om, g, ord_om, ord_qj), ("h", qj, h, ord_qj, ord_qp),
    ):
        for p, q in product(src, src):
            a, b = o_src(p, q), o_dst(fn(p), fn(q))
            rep.check(a == b, check=f"{name} order isomorphism", lo=list(p), hi=list(q),
                      source=a, target=b)
    return rep


# -- poset diagnostics ---------------------------------------------------------------
class NotGradedError(ValueError):
    pass


@dataclass
class PosetGraph:
    """Finite poset on ``range(len(elements))`` with a rank function."""
    elements: list
    leq: list[list[bool]]
    rank: list[int]
    hasse: list[tuple[int, int]] = field(default_factory=list)

    @classmethod
    def from_relation(cls, elements: Sequence, rel: Callable, rank: Callable) -> "PosetGraph":
        n = len(elements)
        leq = [[rel(elements[i], elements[j]) for j in range(n)] for i in range(n)]
        g = cls(list(elements), leq, [rank(e) for e in elements])
        g.hasse = g._transitive_reduction()
        return g

    def _transitive_reduction(self) -> list[tuple[int, int]]:
        n = len(self.elements)
        L = self.leq
        edges = []
        for i in range(n):
            for j in range(n):
                if i != j and L[i][j] and not any(
                    k != i and k != j and L[i][k] and L[k][j] for k in range(n)
                ):
                    edges.append((i, j))
        return edges

    def check_partial_order(self) -> list[str]:
        n = len(self.elements)
        L = self.leq
        errs = []
        if not all(L[i][i] for i in range(n)):
            errs.append("not reflexive")
        if any(L[i][j] and L[j][i] for i in range(n) for j in range(n) if i != j):
            errs.append("not antisymmetric")
        if any(L[i][j] and L[j][k] and not L[i][k]
               for i in range(n) for j in range(n) for k in range(n)):
            errs.append("not transitive")
        return errs

    def moebius(self) -> dict[tuple[int, int], int]:
        n = len(self.elements)
        L = self.leq
        order = sorted(range(n), key=lambda i: self.rank[i])
        mu: dict[tuple[int, int], int] = {}
        for a in range(n):
            for b in order:
                if not L[a][b]:
                    continue
                if a == b:
                    mu[a, b] = 1
                else:
                    mu[a, b] = -sum(mu[a, c] for c in order
                                    if c != b and L[a][c] and L[c][b])
        return mu


def poset_diagnostics(P: PosetGraph) -> dict:
    """Thinness, the Eulerian property and the Moebius table of a graded poset."""
    for i, j in P.hasse:
        if P.rank[j] != P.rank[i] + 1:
            raise NotGradedError(f"cover {i} < {j} jumps rank {P.rank[i]} -> {P.rank[j]}")
    errs = P.check_partial_order()
    if errs:
        raise ValueError("; ".join(errs))
    n = len(P.elements)
    L = P.leq
    mu = P.moebius()
    thin = True
    for a in range(n):
        for b in range(n):
            if L[a][b] and P.rank[b] - P.rank[a] == 2:
                interior = sum(1 for c in range(n) if c != a and c != b and L[a][c] and L[c][b])
                thin &= interior == 2
    eulerian = all(v == (-1) ** (P.rank[b] - P.rank[a]) for (a, b), v in mu.items())
    return {
        "thin": thin,
        "eulerian": eulerian,
        "moebius": {f"{a},{b}": v for (a, b), v in sorted(mu.items())},
    }


def qj_poset(rs: RootSystem, lam: Sequence[int]) -> PosetGraph:
    """``(Q_J, preceq)`` graded by ``l(x) - l(y)``."""
    W = weyl_group(rs)
    J = J_of(rs, lam)
    elems = [tuple(p) for p in build_QJ(rs, lam)]
    return PosetGraph.from_relation(
        elems, lambda p, q: preceq(W, p, q, J), lambda p: p[0].length - p[1].length
    )
