import pytest

from projrich.richardson_poset import (
    J_of, NotGradedError, PosetGraph, QJPair, admissible_set, appendix_f, appendix_g,
    appendix_h, build_QJ, poset_diagnostics, preceq, qj_poset, theta, verify_appendix,
    verify_prop_equiv, verify_theorem_combin,
)
from projrich.root_data import build_root_system

W1 = (1, 0)


def test_qj_size(A2, WA2):
    assert J_of(A2, W1) == frozenset({2})
    Q = build_QJ(A2, W1)
    assert len(Q) == 7
    s1, s2 = WA2.s(1), WA2.s(2)
    assert QJPair(s2 * s1, s2) in Q
    assert QJPair(s1, s2) not in Q


def test_qj_regular_is_all_bruhat_pairs(A2, WA2):
    assert len(build_QJ(A2, (1, 1))) == sum(len(WA2.lower_cone(x)) for x in WA2)


def test_non_dominant_rejected(A2):
    with pytest.raises(ValueError):
        build_QJ(A2, (-1, 1))


def test_preceq_examples(A2, WA2):
    J = frozenset({2})
    x = WA2.s(2) * WA2.s(1)
    e = WA2.identity
    assert preceq(WA2, (x, x), (x, x), J)
    assert preceq(WA2, (x, x), (x, e), J) != preceq(WA2, (x, e), (x, x), J)


@pytest.mark.parametrize("letter,lam", [("A", W1), ("B", W1), ("B", (0, 1))])
def test_preceq_partial_order(letter, lam):
    P = qj_poset(build_root_system(letter, 2), lam)
    assert P.check_partial_order() == []


def test_theta_examples(A2, WA2):
    A = WA2.affine
    e = WA2.identity
    assert theta(A2, (e, e), W1) == A.translation((-1, 0))
    assert A.length(theta(A2, (WA2.s(2) * WA2.s(1), e), W1)) == 0
    for x in WA2.coset_reps(frozenset({2}))[0]:
        assert A.length(theta(A2, (x, x), W1)) == 2


def test_admissible_sizes(A2):
    assert len(admissible_set(A2, W1)) == 7
    assert len(admissible_set(A2, (0, 0))) == 1
    assert len(admissible_set(build_root_system("A", 3), (0, 1, 0))) == 33


@pytest.mark.parametrize("letter,rank,lam", [("A", 2, W1), ("B", 2, W1), ("A", 2, (1, 1))])
def test_prop_equiv(letter, rank, lam):
    assert verify_prop_equiv(build_root_system(letter, rank), lam).passed


@pytest.mark.parametrize("letter,rank,lam", [
    ("A", 2, W1), ("A", 2, (0, 0)), ("A", 2, (2, 1)), ("C", 2, (0, 1)),
])
def test_theorem_combin(letter, rank, lam):
    rep = verify_theorem_combin(build_root_system(letter, rank), lam)
    assert rep.passed, rep.failures[:3]


def test_appendix_examples(WA2):
    J = frozenset({2})
    x = WA2.s(2) * WA2.s(1)
    s2, e = WA2.s(2), WA2.identity
    assert appendix_h(WA2, J, (x, e)) == (s2, s2, x)
    for (a, b) in build_QJ(WA2.rs, W1):
        assert appendix_g(WA2, J, appendix_f(WA2, J, appendix_h(WA2, J, (a, b)))) == (a, b)
    for x in WA2:
        for y in WA2.lower_cone(x):
            assert appendix_h(WA2, frozenset(), (x, y)) == (y, e, x)


def test_appendix_domain_errors(WA2):
    with pytest.raises(ValueError):
        appendix_h(WA2, frozenset({2}), (WA2.s(1) * WA2.s(2), WA2.identity))


def test_appendix_b2(B2):
    for J in [frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})]:
        assert verify_appendix(B2, J).passed


def _chain(n):
    return PosetGraph.from_relation(list(range(n)), lambda a, b: a <= b, lambda a: a)


def test_diagnostics_small_posets():
    assert not poset_diagnostics(_chain(3))["thin"]
    boolean = [frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})]
    d = poset_diagnostics(PosetGraph.from_relation(boolean, lambda a, b: a <= b, len))
    assert d["thin"] and d["eulerian"]


def test_diagnostics_rejects_ungraded():
    P = PosetGraph.from_relation([0, 1], lambda a, b: a <= b, lambda a: 2 * a)
    with pytest.raises(NotGradedError):
        poset_diagnostics(P)


def test_qj_thin_eulerian(A2):
    d = poset_diagnostics(qj_poset(A2, W1))
    assert d["thin"] and d["eulerian"]
