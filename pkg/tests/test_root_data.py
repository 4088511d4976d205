from itertools import permutations

import pytest

from projrich.coxeter import weyl_group
from projrich.root_data import AffineRoot, build_root_system, pairing


@pytest.mark.parametrize("letter,rank,n_roots", [
    ("A", 1, 2), ("A", 2, 6), ("A", 3, 12), ("B", 2, 8), ("B", 3, 18),
    ("C", 2, 8), ("C", 3, 18), ("D", 3, 12), ("D", 4, 24),
])
def test_root_counts(letter, rank, n_roots):
    rs = build_root_system(letter, rank)
    assert len(rs.roots) == n_roots
    assert 2 * len(rs.positive_roots) == n_roots


def _root_poset(rs):
    pos = rs.positive_roots
    return {(a, b) for a in pos for b in pos if all(x <= y for x, y in zip(a, b))}


def test_d3_root_poset_matches_a3():
    d3, a3 = build_root_system("D", 3), build_root_system("A", 3)
    target = _root_poset(a3)
    # D3 nodes (1,2,3) correspond to A3 nodes (2,1,3) up to relabelling
    found = False
    for perm in permutations(range(3)):
        relabel = lambda r: tuple(r[perm[i]] for i in range(3))
        image = {(relabel(a), relabel(b)) for a, b in _root_poset(d3)}
        found |= image == target
    assert found


@pytest.mark.parametrize("letter,rank", [("E", 2), ("A", 0), ("B", 1), ("D", 2), ("x", 3)])
def test_bad_input(letter, rank):
    with pytest.raises(ValueError):
        build_root_system(letter, rank)


def test_pairings(A2):
    w1 = A2.fundamental_coweight(1)
    assert pairing(w1, A2.simple_root(1)) == 1
    assert pairing(w1, A2.simple_root(2)) == 0
    assert A2.two_rho_pairing(w1) == 2
    assert A2.two_rho_pairing((0, 0)) == 0


@pytest.mark.parametrize("letter,rank", [("A", 2), ("B", 3), ("C", 3), ("D", 4)])
def test_theta_normalization(letter, rank):
    rs = build_root_system(letter, rank)
    assert rs.pairing(rs.theta_coroot, rs.highest_root) == 2
    for i in range(1, rank + 1):
        assert rs.pairing(rs.fundamental_coweight(i), rs.simple_root(i)) == 1


def test_highest_root_a2(A2):
    assert A2.highest_root == (1, 1)


def test_two_rho_is_translation_length(A2):
    A = weyl_group(A2).affine
    for lam in [(1, 0), (0, 1), (1, 1), (2, 1)]:
        assert A.length(A.translation(tuple(-c for c in lam))) == A2.two_rho_pairing(lam)


@pytest.mark.parametrize("letter,rank,order", [("A", 2, 3), ("A", 3, 4), ("B", 2, 2), ("C", 3, 2), ("D", 4, 4)])
def test_omega_group_order(letter, rank, order):
    rs = build_root_system(letter, rank)
    assert rs.fundamental_group_order == order
    assert len(rs.omega_group()) == order


def test_omega_identity_fixes_roots(A2):
    omega = A2.omega_group()
    ident = next(t for t in omega if t.label == 0)
    for beta in A2.roots:
        for level in (-1, 0, 2):
            a = AffineRoot(beta, level)
            assert A2.omega_act(ident, a) == a


def test_omega_permutes_affine_simple_roots(A2):
    simple = {A2.affine_simple_root(i) for i in range(3)}
    for tau in A2.omega_group():
        assert {A2.omega_act(tau, a) for a in simple} == simple


def test_cominuscule():
    a3 = build_root_system("A", 3)
    assert all(a3.is_cominuscule(a3.fundamental_coweight(i)) for i in (1, 2, 3))
    b3 = build_root_system("B", 3)
    assert b3.is_cominuscule((1, 0, 0))
    assert not b3.is_cominuscule((0, 0, 1))
