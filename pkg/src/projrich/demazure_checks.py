"""
Property checks for the three Demazure products.

Each product is compared with a brute-force oracle taken straight from its
definition as a maximum or minimum over a Bruhat interval product.  The
monotonicity, adjunction and coset characterisations are checked as well.
Finite groups are swept exhaustively; affine groups are sampled with a
seeded generator.

>>> from projrich.root_data import build_root_system
>>> from projrich.coxeter import weyl_group
>>> verify_demazure_properties(weyl_group(build_root_system("A", 2))).passed
True
"""

from __future__ import annotations

import random
from itertools import combinations

from .coxeter import AffineWeylGroup, WeylGroup
from .reports import Report

__all__ = ["verify_demazure_properties", "random_affine_element", "parabolic_closure"]


def parabolic_closure(G, J) -> set:
    """Subgroup generated by ``s_j`` for ``j`` in ``J`` (finite for proper ``J``)."""
    out = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for j in J:
                v = w * G.s(j)
                if v not in out:
                    out.add(v)
                    nxt.append(v)
        frontier = nxt
    return out


def random_affine_element(A: AffineWeylGroup, rng: random.Random, max_len: int):
    """A random length-zero element times a random word of length ``<= max_len``."""
    omegas = A.omega_group()
    x = omegas[rng.randrange(len(omegas))].element
    for _ in range(rng.randint(0, max_len)):
        x = x * A.s(rng.choice(A.nodes))
    return x


def _unique_max(G, items):
    tops = [m for m in items if all(G.bruhat_leq(p, m) for p in items)]
    return tops[0] if len(tops) == 1 else None


def _unique_min(G, items):
    bots = [m for m in items if all(G.bruhat_leq(m, p) for p in items)]
    return bots[0] if len(bots) == 1 else None


def _check_pair(G, rep: Report, x, y, cx, cy, brute: bool) -> None:
    L = G.length
    star, trir, tril = G.demazure_star(x, y), G.demazure_trir(x, y), G.demazure_tril(x, y)
    if brute:
        prods = {u * v for u in cx for v in cy}
        rep.check(_unique_max(G, prods) == star, prop="1:max", x=x, y=y, got=star)
        rep.check(_unique_min(G, {u * y for u in cx}) == trir, prop="2:min", x=x, y=y, got=trir)
        rep.check(_unique_min(G, {x * v for v in cy}) == tril, prop="3:min", x=x, y=y, got=tril)
    # length-additive factorisations
    u1, v1 = star * y.inverse(), x.inverse() * star
    rep.check(u1 in cx and L(star) == L(u1) + L(y), prop="1:left-factor", x=x, y=y)
    rep.check(v1 in cy and L(star) == L(x) + L(v1), prop="1:right-factor", x=x, y=y)
    u2 = trir * y.inverse()
    rep.check(u2 in cx and L(trir) == L(y) - L(u2), prop="2:factor", x=x, y=y)
    v3 = x.inverse() * tril
    rep.check(v3 in cy and L(tril) == L(x) - L(v3), prop="3:factor", x=x, y=y)


def _check_monotone(G, rep: Report, x, y, xs, ys) -> None:
    star = G.demazure_star(x, y)
    tril = G.demazure_tril(x, y)
    for x2 in xs:
        rep.check(G.bruhat_leq(G.demazure_tril(x2, y), tril), prop="5", x=x, x2=x2, y=y)
        for y2 in ys:
            rep.check(G.bruhat_leq(G.demazure_star(x2, y2), star), prop="4", x=x, y=y, x2=x2, y2=y2)


def _check_adjunction(G, rep: Report, x, y, z) -> None:
    a = G.bruhat_leq(z, G.demazure_star(x, y))
    b = G.bruhat_leq(G.demazure_tril(z, y.inverse()), x)
    c = G.bruhat_leq(G.demazure_trir(x.inverse(), z), y)
    rep.check(a == b == c, prop="6", x=x, y=y, z=z, values=[a, b, c])


def _check_cosets(G, rep: Report, x, J, WJ, wJ) -> None:
    left = {u * x for u in WJ}
    right = {x * u for u in WJ}
    L = G.length
    rep.check(min(left, key=L) == G.demazure_trir(wJ, x), prop="7:min-left", x=x, J=sorted(J))
    rep.check(min(right, key=L) == G.demazure_tril(x, wJ), prop="7:min-right", x=x, J=sorted(J))
    rep.check(max(left, key=L) == G.demazure_star(wJ, x), prop="7:max-left", x=x, J=sorted(J))
    rep.check(max(right, key=L) == G.demazure_star(x, wJ), prop="7:max-right", x=x, J=sorted(J))


def _proper_subsets(nodes):
    for k in range(len(nodes)):
        yield from (frozenset(c) for c in combinations(nodes, k))


def verify_demazure_properties(G, *, samples: int = 1000, max_len: int = 8,
                               seed: int = 0, brute: bool = True) -> Report:
    """Check products (1)-(3), monotonicity (4)-(5), adjunction (6), cosets (7).

    ``G`` finite: every pair and triple.  ``G`` affine: ``samples`` seeded
    random triples of length at most ``max_len``.
    """
    if isinstance(G, WeylGroup):
        rep = Report("demazure_properties", G.rs.name)
        elts = list(G.elements)
        cones = {x: G.lower_cone(x) for x in elts}
        for x in elts:
            for y in elts:
                _check_pair(G, rep, x, y, cones[x], cones[y], brute)
                _check_monotone(G, rep, x, y, cones[x], cones[y])
                for z in elts:
                    _check_adjunction(G, rep, x, y, z)
        for J in _proper_subsets(G.nodes + (None,)):
            if None in J:
                continue
            WJ = parabolic_closure(G, J)
            wJ = max(WJ, key=G.length)
            for x in elts:
                _check_cosets(G, rep, x, J, WJ, wJ)
        return rep

    rep = Report("demazure_properties", f"affine {G.rs.name}, {samples} triples, seed {seed}")
    rng = random.Random(seed)
    subsets = list(_proper_subsets(G.nodes))
    parab = {J: parabolic_closure(G, J) for J in subsets}
    longest = {J: max(WJ, key=G.length) for J, WJ in parab.items()}
    for _ in range(samples):
        x, y, z = (random_affine_element(G, rng, max_len) for _ in range(3))
        cx, cy = G.lower_cone(x), G.lower_cone(y)
        _check_pair(G, rep, x, y, cx, cy, brute)
        xs = rng.sample(sorted(cx, key=repr), min(4, len(cx)))
        ys = rng.sample(sorted(cy, key=repr), min(4, len(cy)))
        _check_monotone(G, rep, x, y, xs, ys)
        _check_adjunction(G, rep, x, y, z)
        _check_adjunction(G, rep, x, y, rng.choice(sorted(cx, key=repr)) * y)
        J = subsets[rng.randrange(len(subsets))]
        _check_cosets(G, rep, x, J, parab[J], longest[J])
    return rep
