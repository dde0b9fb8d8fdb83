import random

import pytest

from plotkin_wef import (
    Branch,
    Leaf,
    WeightEnumerator,
    active_leaves,
    ensemble_wef,
    exact_wef_bruteforce,
    generator_matrix,
    parse_poly,
    rm_tree,
    tree_from_active_set,
    tree_from_json_dict,
    tree_to_json_dict,
)


def test_rm_tree_examples():
    t = rm_tree(1, 3)
    assert active_leaves(t) == (3, 5, 6, 7)
    assert t.dimension == 4
    assert rm_tree(0, 1) == Branch(Leaf(active=False), Leaf(active=True))
    assert active_leaves(rm_tree(3, 3)) == tuple(range(8))


def test_rm_tree_popcount_rule():
    for m in range(6):
        for r in range(-1, m + 2):
            expected = tuple(
                i for i in range(1 << m) if i.bit_count() >= m - r
            )
            assert active_leaves(rm_tree(r, m)) == expected


def test_rm_tree_dimension_is_binomial_sum():
    from plotkin_wef import binomial

    for m in range(9):
        for r in range(0, m + 1):
            assert rm_tree(r, m).dimension == sum(binomial(m, j) for j in range(r + 1))


def test_rm_tree_dimension_pascal_identity():
    for m in range(1, 9):
        for r in range(0, m + 1):
            assert (
                rm_tree(r, m).dimension
                == rm_tree(r - 1, m - 1).dimension + rm_tree(r, m - 1).dimension
            )


def test_rm_tree_rejects_negative_depth():
    with pytest.raises(ValueError):
        rm_tree(1, -1)


def test_tree_from_active_set():
    assert tree_from_active_set(3, {3, 5, 6, 7}) == rm_tree(1, 3)
    assert tree_from_active_set(0, set()) == Leaf(active=False)
    assert tree_from_active_set(1, {0, 1}) == rm_tree(1, 1)
    with pytest.raises(ValueError):
        tree_from_active_set(2, {4})
    with pytest.raises(ValueError):
        tree_from_active_set(2, {-1})


def test_branch_requires_equal_child_lengths():
    with pytest.raises(ValueError):
        Branch(Leaf(True), Branch(Leaf(True), Leaf(False)))


def test_ensemble_wef_examples():
    assert ensemble_wef(rm_tree(1, 3)) == parse_poly("1 + 14x^4 + x^8", 8)
    assert ensemble_wef(tree_from_active_set(4, set())) == parse_poly("1", 16)
    # Frozen from brute force over the 2^11 codewords of the depth-4 tree;
    # exact because the v-side codes along the recursion are fixed by every
    # coordinate permutation.
    assert ensemble_wef(rm_tree(2, 4)) == parse_poly(
        "1 + 140x^4 + 448x^6 + 870x^8 + 448x^10 + 140x^12 + x^16", 16
    )


def test_ensemble_wef_leaves():
    assert ensemble_wef(Leaf(False)) == WeightEnumerator(1, (1, 0))
    assert ensemble_wef(Leaf(True)) == WeightEnumerator(1, (1, 1))


def test_generator_matrix_examples():
    assert generator_matrix(Leaf(True)).to_strings() == ["1"]
    assert generator_matrix(rm_tree(0, 1)).to_strings() == ["11"]
    g = generator_matrix(rm_tree(1, 3))
    assert g.to_strings() == ["11110000", "11001100", "10101010", "11111111"]
    assert exact_wef_bruteforce(g) == parse_poly("1 + 14x^4 + x^8", 8)


def test_generator_matrix_rows_are_independent():
    rng = random.Random(404)
    for _ in range(20):
        m = rng.randint(0, 5)
        active = [i for i in range(1 << m) if rng.random() < 0.5]
        tree = tree_from_active_set(m, active)
        g = generator_matrix(tree)
        assert g.k == tree.dimension == len(active)
        assert g.rank() == g.k


def test_dimension_and_length_examples():
    t = rm_tree(1, 3)
    assert (t.dimension, t.length) == (4, 8)
    frozen = tree_from_active_set(3, set())
    assert (frozen.dimension, frozen.length) == (0, 8)
    t24 = rm_tree(2, 4)
    assert (t24.dimension, t24.length) == (11, 16)


def test_mass_is_two_to_dimension_on_random_trees():
    rng = random.Random(1618)
    for _ in range(25):
        m = rng.randint(0, 6)
        active = [i for i in range(1 << m) if rng.random() < 0.5]
        tree = tree_from_active_set(m, active)
        assert ensemble_wef(tree).total_mass() == 2**tree.dimension


def test_rm_min_distance_is_power_of_two():
    for m in range(0, 5):
        for r in range(0, m + 1):
            got = ensemble_wef(rm_tree(r, m)).min_positive_weight()
            assert got == 2 ** (m - r)


def test_ensemble_equals_bruteforce_for_invariant_v_spines():
    cases = [(r, m) for m in range(0, 5) for r in (0, m - 1, m) if 0 <= r <= m]
    cases += [(1, 3), (1, 4), (2, 4)]
    for r, m in sorted(set(cases)):
        tree = rm_tree(r, m)
        assert ensemble_wef(tree) == exact_wef_bruteforce(generator_matrix(tree)), (r, m)


def test_active_set_tree_matches_rm_tree_spectrum():
    for r, m in [(0, 2), (1, 3), (2, 4)]:
        rm = rm_tree(r, m)
        rebuilt = tree_from_active_set(m, active_leaves(rm))
        assert rebuilt == rm
        assert ensemble_wef(rebuilt) == ensemble_wef(rm)


def test_tree_json_forms():
    assert tree_from_json_dict({"rm": {"r": 1, "m": 3}}) == rm_tree(1, 3)
    assert tree_from_json_dict({"m": 3, "active": [3, 5, 6, 7]}) == rm_tree(1, 3)
    assert tree_to_json_dict(rm_tree(1, 3)) == {"m": 3, "active": [3, 5, 6, 7]}
    for bad in [
        [],
        {"rm": {"r": 1}},
        {"m": 3},
        {"active": []},
        {"m": "3", "active": []},
        {"rm": {"r": 1.5, "m": 3}},
    ]:
        with pytest.raises(ValueError):
            tree_from_json_dict(bad)
