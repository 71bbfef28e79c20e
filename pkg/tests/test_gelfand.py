import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from riggedframes import gelfand
from riggedframes.errors import DimMismatch, OrderOutOfRange
from riggedframes.gelfand import BoundedSet, TripleSpec

from oracles import random_complex


def test_triple_spec_validation():
    with pytest.raises(ValueError):
        TripleSpec(0, 2)
    with pytest.raises(ValueError):
        TripleSpec(3, -1)


def test_weight_family():
    spec = TripleSpec(4, 3)
    assert_allclose(spec.weights(0), np.ones(4))
    assert_allclose(spec.weights(1), [1, 2, 3, 4])
    assert_allclose(spec.weights(2), [1, 4, 9, 16])
    with pytest.raises(OrderOutOfRange):
        spec.weights(4)
    # monotone in k for every coordinate
    for k in range(3):
        assert np.all(spec.weights(k) <= spec.weights(k + 1))


def test_pairing_examples():
    e0 = np.array([1.0, 0.0])
    assert gelfand.pairing(e0, e0) == 1.0
    assert gelfand.pairing([1.0, 1j], [1.0, 1.0]) == 1.0 + 1j
    with pytest.raises(DimMismatch):
        gelfand.pairing([1.0], [1.0, 2.0])


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_pairing_conjugate_symmetry(dim, seed):
    rng = np.random.default_rng(seed)
    f = random_complex(rng, dim)
    g = random_complex(rng, dim)
    assert gelfand.pairing(g, f) == pytest.approx(np.conj(gelfand.pairing(f, g)))


def test_pairing_sesquilinearity():
    rng = np.random.default_rng(3)
    f, g, h = (random_complex(rng, 4) for _ in range(3))
    alpha = 1.5 - 0.5j
    assert gelfand.pairing(alpha * f + g, h) == pytest.approx(
        alpha * gelfand.pairing(f, h) + gelfand.pairing(g, h)
    )
    assert gelfand.pairing(f, alpha * g) == pytest.approx(
        np.conj(alpha) * gelfand.pairing(f, g)
    )


def test_seminorm_examples():
    spec = TripleSpec(2, 2)
    assert gelfand.seminorm(spec, 0, [3.0, 4.0]) == pytest.approx(5.0)
    assert gelfand.seminorm(spec, 1, [0.0, 1.0]) == pytest.approx(2.0)
    assert gelfand.seminorm(spec, 2, [0.0, 0.0]) == 0.0
    with pytest.raises(OrderOutOfRange):
        gelfand.seminorm(spec, 3, [1.0, 0.0])


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(0, 3), st.integers(0, 2**32 - 1))
def test_seminorm_ladder_monotone(dim, max_order, seed):
    spec = TripleSpec(dim, max_order)
    rng = np.random.default_rng(seed)
    f = random_complex(rng, dim)
    profile = gelfand.decay_profile(spec, f)
    assert profile.size == max_order + 1
    assert np.all(np.diff(profile) >= -1e-12)


def test_dual_seminorm_examples():
    spec = TripleSpec(2, 2)
    assert gelfand.dual_seminorm(spec, BoundedSet(0, 1.0), [0.0, 2.0]) == pytest.approx(2.0)
    assert gelfand.dual_seminorm(spec, BoundedSet(1, 1.0), [0.0, 1.0]) == pytest.approx(0.5)
    assert gelfand.dual_seminorm(spec, BoundedSet(2, 3.0), [0.0, 0.0]) == 0.0


def test_dual_seminorm_order0_is_hilbert_norm():
    spec = TripleSpec(5, 2)
    rng = np.random.default_rng(5)
    big_f = random_complex(rng, 5)
    ball = BoundedSet(0, 1.0)
    assert gelfand.dual_seminorm(spec, ball, big_f) == pytest.approx(
        float(np.linalg.norm(big_f))
    )


def test_dual_seminorm_is_the_sup_over_the_ball():
    # Random boundary probes never exceed the closed form; the
    # constructed maximizer attains it.
    spec = TripleSpec(4, 2)
    rng = np.random.default_rng(8)
    big_f = random_complex(rng, 4)
    for order, radius in [(0, 1.0), (1, 2.0), (2, 0.7)]:
        ball = BoundedSet(order, radius)
        closed = gelfand.dual_seminorm(spec, ball, big_f)
        w = spec.weights(order)
        sampled = 0.0
        for _ in range(10_000):
            g = random_complex(rng, 4)
            g *= radius / gelfand.seminorm(spec, order, g)
            sampled = max(sampled, abs(gelfand.pairing(g, big_f)))
        assert sampled <= closed + 1e-12
        maximizer = big_f / w**2
        maximizer *= radius / gelfand.seminorm(spec, order, maximizer)
        assert abs(gelfand.pairing(maximizer, big_f)) == pytest.approx(closed, rel=1e-6)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2), st.integers(0, 2**32 - 1))
def test_cauchy_schwarz_in_the_triple(dim, order, seed):
    spec = TripleSpec(dim, 2)
    rng = np.random.default_rng(seed)
    f = random_complex(rng, dim)
    big_f = random_complex(rng, dim)
    lhs = abs(gelfand.pairing(f, big_f))
    rhs = gelfand.seminorm(spec, order, f) * gelfand.dual_seminorm(
        spec, BoundedSet(order, 1.0), big_f
    )
    assert lhs <= rhs * (1 + 1e-12) + 1e-12


def test_decay_profile_examples():
    spec = TripleSpec(3, 2)
    assert_allclose(gelfand.decay_profile(spec, [1.0, 0, 0]), [1.0, 1.0, 1.0])
    assert_allclose(gelfand.decay_profile(spec, [0, 0, 1.0]), [1.0, 3.0, 9.0])
    assert_allclose(gelfand.decay_profile(spec, [0, 0, 0]), [0.0, 0.0, 0.0])
