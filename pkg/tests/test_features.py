import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from glg.features import FeatureVector, extract_features, iter_label_states, squared_distance
from glg.graph import Graph, Permutation, apply_permutation, make_complete, make_path, make_star, random_gnm
from oracles import naive_features, naive_labels


def test_p3_single_step():
    fv = extract_features(make_path(3), 1)
    assert fv.blocks == ((2, 2, 3),)


def test_p3_labels_before_sorting():
    assert next(iter_label_states(make_path(3))) == [2, 3, 2]


def test_single_vertex_labels_stay_one():
    fv = extract_features(Graph(1, (0,)), 4)
    assert fv.values == (1, 1, 1, 1)


def test_k5_single_step():
    assert extract_features(make_complete(5), 1).blocks == ((5, 5, 5, 5, 5),)


def test_p3_normalized():
    fv = extract_features(make_path(3), 1, normalize=True)
    assert fv.blocks == ((Fraction(2, 7), Fraction(2, 7), Fraction(3, 7)),)


def test_frozen_multi_step_blocks():
    # values from the naive set-based oracle in tests/oracles.py
    assert extract_features(make_path(4), 3).blocks == ((2, 2, 3, 3), (5, 5, 7, 7), (10, 10, 14, 14))
    assert extract_features(make_star(4), 3).blocks == ((2, 2, 2, 4), (4, 8, 8, 8), (4, 8, 8, 8))


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        extract_features(make_path(3), 0)


def _random_graph(rng, max_n=10):
    n = rng.randrange(1, max_n + 1)
    return random_gnm(n, rng.randrange(n * (n - 1) // 2 + 1), rng.randrange(2**32))


def test_matches_naive_oracle():
    rng = random.Random(11)
    for _ in range(150):
        g = _random_graph(rng)
        k = rng.randrange(1, 5)
        assert [list(b) for b in extract_features(g, k).blocks] == naive_features(g, k)


@given(st.integers(0, 2**32), st.sampled_from([1, 2, 3]), st.booleans())
@settings(max_examples=150)
def test_isomorphism_invariance(s, k, normalize):
    rng = random.Random(s)
    g = _random_graph(rng)
    h = apply_permutation(g, Permutation.random(g.n, rng))
    assert extract_features(g, k, normalize) == extract_features(h, k, normalize)


def test_unnormalized_labels_integral_and_monotone():
    rng = random.Random(3)
    for _ in range(50):
        g = _random_graph(rng)
        labels = naive_labels(g, 5)
        prev = [1] * g.n
        for state, cur in zip(iter_label_states(g), labels):
            assert state == cur
            assert all(isinstance(x, int) and x >= 1 for x in state)
            assert all(x >= p for x, p in zip(state, prev))
            prev = state


def test_normalized_is_scaled_unnormalized():
    rng = random.Random(4)
    for _ in range(50):
        g = _random_graph(rng)
        raw = extract_features(g, 3)
        norm = extract_features(g, 3, normalize=True)
        for rb, nb in zip(raw.blocks, norm.blocks):
            total = sum(rb)
            assert sum(nb) == 1
            assert all(x > 0 for x in nb)
            assert list(nb) == [Fraction(x, total) for x in rb]


def test_block_shape():
    fv = extract_features(random_gnm(9, 14, 2), 3)
    assert len(fv.values) == len(fv) == 27
    assert all(list(b) == sorted(b) for b in fv.blocks)


@pytest.mark.parametrize("normalize", [False, True])
def test_serialization_round_trip(normalize):
    fv = extract_features(make_star(5), 2, normalize)
    line = fv.serialize()
    assert line.split()[:3] == ["5", "2", str(int(normalize))]
    assert FeatureVector.parse(line) == fv


def test_serialized_text():
    assert extract_features(make_path(3), 2).serialize() == "3 2 0 2 2 3 3 6 6"
    assert extract_features(make_path(3), 1, True).serialize() == "3 1 1 2/7 2/7 3/7"


def test_squared_distance():
    assert squared_distance([2, 2, 3, 3], [2, 2, 2, 4]) == 2
    with pytest.raises(ValueError):
        squared_distance([1], [1, 2])
