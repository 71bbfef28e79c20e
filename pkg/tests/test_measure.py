import numpy as np
import pytest
from numpy.testing import assert_allclose

from riggedframes import measure
from riggedframes.errors import BadInterval, DimMismatch
from riggedframes.measure import MeasureSpace, integrate, l2_inner, l2_norm

from oracles import random_complex


def test_make_counting():
    ms = measure.make_counting(3)
    assert_allclose(ms.nodes, [0.0, 1.0, 2.0])
    assert_allclose(ms.weights, np.ones(3))
    assert ms.kind == "counting"
    assert measure.make_counting(1).size == 1
    assert integrate(measure.make_counting(5), np.ones(5)) == 5.0
    with pytest.raises(BadInterval):
        measure.make_counting(0)


def test_measure_space_validation():
    with pytest.raises(BadInterval):
        MeasureSpace([0.0, 1.0], [1.0, -1.0], "simpson")
    with pytest.raises(BadInterval):
        MeasureSpace([1.0, 0.0], [1.0, 1.0], "simpson")
    with pytest.raises(BadInterval):
        MeasureSpace([0.0, 1.0], [1.0, 2.0], "counting")
    with pytest.raises(BadInterval):
        MeasureSpace([0.0, 1.0], [1.0, 1.0], "lebesgue")
    with pytest.raises(DimMismatch):
        MeasureSpace([0.0, 1.0], [1.0], "simpson")


def test_periodic_weights():
    ms = measure.make_uniform(0.0, 2 * np.pi, 4, periodic=True)
    assert_allclose(ms.weights, np.full(4, np.pi / 2))
    assert_allclose(ms.nodes, [0.0, np.pi / 2, np.pi, 3 * np.pi / 2])


def test_simpson_weights_three_nodes():
    ms = measure.make_uniform(0.0, 1.0, 3)
    assert_allclose(ms.weights, [1 / 6, 4 / 6, 1 / 6])


def test_simpson_even_node_count_integrates_cubics_exactly():
    # The 3/8 tail keeps even node counts at full order.
    ms = measure.make_uniform(0.0, 1.0, 10)
    vals = ms.nodes**3
    assert integrate(ms, vals).real == pytest.approx(0.25, abs=1e-14)


def test_periodic_integrates_sin_to_zero():
    ms = measure.make_uniform(0.0, 2 * np.pi, 16, periodic=True)
    assert abs(integrate(ms, np.sin(ms.nodes))) <= 1e-12


def test_bad_intervals():
    with pytest.raises(BadInterval):
        measure.make_uniform(1.0, 0.0, 8)
    with pytest.raises(BadInterval):
        measure.make_uniform(0.0, 1.0, 2)
    with pytest.raises(BadInterval):
        measure.make_uniform(0.0, 1.0, 1, periodic=True)
    with pytest.raises(BadInterval):
        measure.make_uniform(0.0, np.inf, 8)


def test_l2_inner_examples():
    ms = measure.make_counting(2)
    assert l2_inner(ms, [1.0, 0.0], [1.0, 0.0]) == 1.0
    assert l2_inner(ms, [1.0, 1.0], [1.0, -1.0]) == 0.0
    per = measure.make_uniform(0.0, 2 * np.pi, 8, periodic=True)
    wave = np.exp(1j * per.nodes)
    assert l2_inner(per, wave, wave).real == pytest.approx(2 * np.pi, abs=1e-12)
    with pytest.raises(DimMismatch):
        l2_inner(ms, [1.0], [1.0, 0.0])


def test_l2_inner_sesquilinear_and_positive():
    ms = measure.make_uniform(-1.0, 1.0, 9)
    rng = np.random.default_rng(2)
    xi, eta = random_complex(rng, 9), random_complex(rng, 9)
    alpha = 0.3 + 1.1j
    assert l2_inner(ms, alpha * xi, eta) == pytest.approx(alpha * l2_inner(ms, xi, eta))
    assert l2_inner(ms, xi, alpha * eta) == pytest.approx(
        np.conj(alpha) * l2_inner(ms, xi, eta)
    )
    assert l2_inner(ms, eta, xi) == pytest.approx(np.conj(l2_inner(ms, xi, eta)))
    assert l2_norm(ms, xi) > 0
    assert l2_norm(ms, np.zeros(9)) == 0.0


def test_periodic_trig_monomials_exact():
    # integral of e^{imx} over [0, 2pi) is 2pi iff m = 0 mod N, else 0
    n = 12
    ms = measure.make_uniform(0.0, 2 * np.pi, n, periodic=True)
    for m in range(-2 * n + 1, 2 * n):
        val = integrate(ms, np.exp(1j * m * ms.nodes))
        expected = 2 * np.pi if m % n == 0 else 0.0
        assert abs(val - expected) <= 1e-10


def test_simpson_refinement_converges():
    # once the Gaussian tails sit inside the window, doubling the node
    # count moves the integral below the 1e-8 level
    vals = []
    for n in (65, 129):
        ms = measure.make_uniform(-6.0, 6.0, n)
        vals.append(integrate(ms, np.exp(-ms.nodes**2)).real)
    assert abs(vals[0] - np.sqrt(np.pi)) < 1e-10
    assert abs(vals[1] - vals[0]) < 1e-8
