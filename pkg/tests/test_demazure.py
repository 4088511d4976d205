import random

from projrich.coxeter import weyl_group
from projrich.demazure_checks import parabolic_closure, random_affine_element, verify_demazure_properties
from projrich.root_data import build_root_system


def test_finite_suites(WA2, WB2):
    assert verify_demazure_properties(WA2).passed
    assert verify_demazure_properties(WB2).passed


def test_affine_sample_small(WA2):
    rep = verify_demazure_properties(WA2.affine, samples=60, max_len=5, seed=3)
    assert rep.passed and rep.n_checked > 0


def test_random_elements_are_seeded(WA2):
    A = WA2.affine
    a = [random_affine_element(A, random.Random(7), 6) for _ in range(5)]
    b = [random_affine_element(A, random.Random(7), 6) for _ in range(5)]
    assert a == b
    assert all(A.length(x) <= 6 for x in a)


def test_parabolic_closure(WA2):
    assert len(parabolic_closure(WA2, {1})) == 2
    assert len(parabolic_closure(WA2, {1, 2})) == 6


def test_broken_star_is_caught(monkeypatch):
    W = weyl_group(build_root_system("A", 2))
    monkeypatch.setattr(W, "demazure_star", lambda x, y: x * y)
    assert not verify_demazure_properties(W).passed
