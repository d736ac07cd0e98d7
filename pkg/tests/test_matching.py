"""Bipartite matching, Hall certificates, and the sharpness equivalence."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from llycurv.errors import TooLargeError, UnbalancedSidesError
from llycurv.families import (
    paley_graph,
    petersen_graph,
    random_regular_graph,
    rook_graph,
    shrikhande_graph,
)
from llycurv.matching import (
    BipartiteInstance,
    hall_reduction_check,
    local_perfect_matching,
    max_matching,
    sharpness_equivalence,
)
from helpers import augmenting_path_matching_size


def _random_instance(rng, max_side=10):
    nl = rng.randrange(1, max_side + 1)
    nr = rng.randrange(1, max_side + 1)
    edges = tuple(
        (li, ri)
        for li in range(nl)
        for ri in range(nr)
        if rng.random() < 0.35
    )
    return BipartiteInstance(left=tuple(range(nl)), right=tuple(range(nr)), edges=edges)


def test_max_matching_complete_3x3():
    inst = BipartiteInstance(
        left=(0, 1, 2),
        right=(0, 1, 2),
        edges=tuple((i, j) for i in range(3) for j in range(3)),
    )
    result = max_matching(inst)
    assert result.perfect and len(result.pairs) == 3 and result.violator is None


def test_max_matching_star_violator():
    inst = BipartiteInstance(left=(0, 1), right=(0, 1), edges=((0, 0), (1, 0)))
    result = max_matching(inst)
    assert not result.perfect
    assert len(result.pairs) == 1
    assert result.violator == (0, 1)  # both left vertices see only right 0


def test_max_matching_empty_sides_is_vacuously_perfect():
    result = max_matching(BipartiteInstance(left=(), right=(), edges=()))
    assert result.perfect and result.pairs == ()


def test_max_matching_matches_augmenting_oracle_seeded():
    rng = random.Random(101)
    for _ in range(150):
        inst = _random_instance(rng)
        result = max_matching(inst)
        oracle = augmenting_path_matching_size(
            len(inst.left), len(inst.right), inst.edges
        )
        assert len(result.pairs) == oracle


def test_max_matching_fifty_by_fifty_random():
    rng = random.Random(2024)
    for _ in range(5):
        edges = tuple(
            (li, ri) for li in range(50) for ri in range(50) if rng.random() < 0.05
        )
        inst = BipartiteInstance(
            left=tuple(range(50)), right=tuple(range(50)), edges=edges
        )
        assert len(max_matching(inst).pairs) == augmenting_path_matching_size(50, 50, edges)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_max_matching_matches_oracle_hypothesis(data):
    nl = data.draw(st.integers(1, 6))
    nr = data.draw(st.integers(1, 6))
    pool = [(li, ri) for li in range(nl) for ri in range(nr)]
    edges = tuple(data.draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool))))
    inst = BipartiteInstance(left=tuple(range(nl)), right=tuple(range(nr)), edges=edges)
    assert len(max_matching(inst).pairs) == augmenting_path_matching_size(nl, nr, edges)


def test_violator_is_genuine_when_reported():
    rng = random.Random(55)
    seen = 0
    for _ in range(200):
        inst = _random_instance(rng, max_side=7)
        result = max_matching(inst)
        if result.violator is None:
            assert len(result.pairs) == len(inst.left)
            continue
        seen += 1
        neighborhood = {
            ri for li, ri in inst.edges if li in set(result.violator)
        }
        assert len(neighborhood) < len(result.violator)
    assert seen > 20  # the sample actually exercised the deficient case


def test_local_matching_rook_perfect_shrikhande_not():
    rook = rook_graph(4)
    _, result = local_perfect_matching(rook, *next(iter(rook.edges())))
    assert result.perfect
    shri = shrikhande_graph()
    _, result = local_perfect_matching(shri, *next(iter(shri.edges())))
    assert not result.perfect
    assert result.violator is not None


def test_local_matching_paley13_all_edges_perfect():
    g = paley_graph(13)
    for x, y in g.edges():
        _, result = local_perfect_matching(g, x, y)
        assert result.perfect


def test_hall_reduction_identity_pairing():
    m = 5
    inst = BipartiteInstance(
        left=tuple(range(m)), right=tuple(range(m)),
        edges=tuple((i, i) for i in range(m)),
    )
    check = hall_reduction_check(inst)
    assert check.hypothesis_holds and check.full_hall_holds


def test_hall_reduction_isolated_right_vertex():
    inst = BipartiteInstance(left=(0, 1), right=(0, 1), edges=((0, 0), (1, 0)))
    check = hall_reduction_check(inst)
    assert not check.hypothesis_holds and not check.full_hall_holds


def test_hall_reduction_never_hypothesis_without_conclusion():
    # the lemma: half-size Hall on both sides forces full Hall
    rng = random.Random(77)
    for _ in range(1000):
        m = rng.randrange(1, 11)
        edges = tuple(
            (li, ri) for li in range(m) for ri in range(m) if rng.random() < 0.4
        )
        inst = BipartiteInstance(
            left=tuple(range(m)), right=tuple(range(m)), edges=edges
        )
        check = hall_reduction_check(inst)
        assert not (check.hypothesis_holds and not check.full_hall_holds)


def test_hall_reduction_guards():
    with pytest.raises(UnbalancedSidesError):
        hall_reduction_check(
            BipartiteInstance(left=(0,), right=(0, 1), edges=())
        )
    big = BipartiteInstance(
        left=tuple(range(15)), right=tuple(range(15)), edges=()
    )
    with pytest.raises(TooLargeError):
        hall_reduction_check(big)


def test_sharpness_equivalence_named_examples():
    rook = rook_graph(4)
    eq = sharpness_equivalence(rook, *next(iter(rook.edges())))
    assert (eq.kappa_sharp, eq.matching_perfect, eq.agree) == (True, True, True)
    shri = shrikhande_graph()
    eq = sharpness_equivalence(shri, *next(iter(shri.edges())))
    assert (eq.kappa_sharp, eq.matching_perfect, eq.agree) == (False, False, True)
    pet = petersen_graph()
    eq = sharpness_equivalence(pet, *next(iter(pet.edges())))
    assert (eq.kappa_sharp, eq.matching_perfect, eq.agree) == (False, False, True)


def test_sharpness_equivalence_on_random_regular_sample():
    for seed, (n, d) in enumerate([(14, 3), (18, 4), (21, 6)]):
        g = random_regular_graph(n, d, seed=seed)
        for x, y in list(g.edges())[:10]:
            assert sharpness_equivalence(g, x, y).agree
