import pytest

from projrich.coxeter import weyl_group
from projrich.localization import (
    affine_side_loc, d_loc, e_loc, euler_normal, lemma_suite_H, lemma_suite_K,
    loc_table, matrix_identity_K, richardson_loc_alt_H, richardson_loc_alt_K,
    richardson_loc_H, richardson_loc_K, verify_cmain, verify_kmain,
    verify_reduced_word_independence, verify_support_and_degree, weyl_act, _bruhat_moebius,
)
from projrich.polynomials import LaurentK, PolyH
from projrich.richardson_poset import build_QJ
from projrich.root_data import build_root_system

J2 = frozenset({2})


def test_d_examples(WA2):
    s1 = WA2.s(1)
    for w in WA2:
        assert d_loc(WA2.identity, w) == PolyH.one(2)
    assert d_loc(s1, s1) == PolyH.linear((1, 0))
    assert d_loc(s1, WA2.longest) == PolyH.linear((1, 1))


def test_e_examples(WA2):
    s1, s2 = WA2.s(1), WA2.s(2)
    assert e_loc(WA2.identity, WA2.identity) == LaurentK.one(2)
    assert e_loc(s1, s1 * s2) == -LaurentK.one_minus_exp((1, 0))


@pytest.mark.parametrize("letter", ["A", "B"])
def test_diagonal_products(letter):
    rs = build_root_system(letter, 2)
    W = weyl_group(rs)
    for x in W:
        inv = [a for a in rs.positive_roots if not rs.is_positive(W.act_root(x.inverse(), a))]
        assert d_loc(x, x) == PolyH.product_of_roots(inv, 2)
        k = LaurentK.one(2)
        for a in inv:
            k = k * LaurentK.one_minus_exp(a)
        assert e_loc(x, x) == k


def test_loc_vanishes_off_the_cone(WB2):
    for w in WB2:
        table = loc_table(w, "K")
        assert set(table) == set(WB2.lower_cone(w))


def test_weyl_act(WA2):
    a1 = PolyH.linear((1, 0))
    assert weyl_act(WA2.identity, a1) == a1
    assert weyl_act(WA2.s(1), a1) == -a1
    assert weyl_act(WA2.longest, a1) == -PolyH.linear((0, 1))


def test_richardson_classes_a2(WA2):
    mins = WA2.coset_reps(J2)[0]
    top = max(mins, key=lambda x: x.length)
    for w in mins:
        assert richardson_loc_H((top, WA2.identity), w, J2) == PolyH.one(2)
        assert richardson_loc_K((top, WA2.identity), w, J2) == LaurentK.one(2)
    # (x, x) is a point: supported at one fixed point, in degree dim G/P
    for x in mins:
        vals = [richardson_loc_H((x, x), w, J2) for w in mins]
        support = [v for v in vals if not v.is_zero()]
        assert len(support) == 1 and support[0].is_homogeneous(2)


def test_richardson_degree(WA2):
    mins = WA2.coset_reps(J2)[0]
    for x, y in build_QJ(WA2.rs, (1, 0)):
        for w in mins:
            v = richardson_loc_H((x, y), w, J2)
            assert v.is_zero() or v.is_homogeneous(2 - (x.length - y.length))


@pytest.mark.parametrize("letter,J", [("A", J2), ("B", frozenset({1})), ("B", frozenset())])
def test_alternative_pushforward(letter, J):
    W = weyl_group(build_root_system(letter, 2))
    for x in W.coset_reps(J)[0]:
        for y in W.lower_cone(x):
            for w in W.coset_reps(J)[0]:
                assert richardson_loc_H((x, y), w, J) == richardson_loc_alt_H((x, y), w, J)
                assert richardson_loc_K((x, y), w, J) == richardson_loc_alt_K((x, y), w, J)


def test_euler_class(WA2):
    e = WA2.identity
    assert euler_normal(e, (1, 0), "H") == PolyH.one(2)
    assert euler_normal(e, (1, 0), "K") == LaurentK.one(2)
    # non-cominuscule: one inversion survives
    assert euler_normal(e, (1, 1), "H").is_homogeneous(1)


def test_affine_side_top_pair(WA2):
    e = WA2.identity
    d = affine_side_loc((e, e), e, (1, 0), "H")
    assert d.is_homogeneous(2) and not d.is_zero()


@pytest.mark.parametrize("letter,lam", [("A", (1, 0)), ("A", (0, 1)), ("B", (1, 0)), ("C", (0, 1)),
                                        ("A", (1, 1))])
def test_comparison_theorems(letter, lam):
    rs = build_root_system(letter, 2)
    assert verify_cmain(rs, lam).passed
    assert verify_kmain(rs, lam).passed


def test_sign_flip_is_detected(A2):
    rep = verify_kmain(A2, (1, 0), fault="sign-flip")
    assert not rep.passed and rep.failures
    assert not verify_cmain(A2, (1, 0), fault="sign-flip").passed


def test_lemma_suites_b2(B2):
    assert lemma_suite_H(B2).passed
    assert lemma_suite_K(B2).passed


def test_moebius_is_signed(WB2):
    mu = _bruhat_moebius(WB2)
    for x in WB2:
        for z in WB2:
            expected = (-1) ** (z.length - x.length) if WB2.bruhat_leq(x, z) else 0
            assert mu.get((z, x), 0) == expected


@pytest.mark.parametrize("letter,rank", [("A", 1), ("A", 2), ("B", 2)])
def test_matrix_identity_with_moebius_inverse(letter, rank):
    assert matrix_identity_K(build_root_system(letter, rank), variant="M_inv").passed


def test_matrix_identity_with_incidence_matrix_fails_for_a1():
    rep = matrix_identity_K(build_root_system("A", 1), variant="M")
    assert rep.n_failed == 1


def test_word_independence_and_support(WA2):
    assert verify_reduced_word_independence(WA2, 3).passed
    assert verify_support_and_degree(WA2.affine, 3).passed
