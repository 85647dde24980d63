import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ritzrelu.quadrature import delta_stencil, integrate, make_grid


def test_grid_250():
    g = make_grid(250)
    assert g.weight == 0.004
    assert g.points[0] == pytest.approx(0.002, abs=1e-15)
    assert g.count == 250
    assert np.all(np.diff(g.points) > 0)
    assert 0.0 < g.points[0] and g.points[-1] < 1.0


def test_smallest_grid():
    g = make_grid(2)
    np.testing.assert_array_equal(g.points, [0.25, 0.75])
    assert g.weight == 0.5


@pytest.mark.parametrize("bad", [1, 0, -3, 2.5])
def test_grid_rejects_bad_count(bad):
    with pytest.raises(ValueError):
        make_grid(bad)


def test_grid_is_read_only():
    g = make_grid(4)
    with pytest.raises(ValueError):
        g.points[0] = 1.0


def test_constants_exact():
    assert integrate(make_grid(4), np.ones(4)) == 1.0
    assert integrate(make_grid(250), np.ones(250)) == pytest.approx(1.0, abs=1e-14)


def test_integrate_length_mismatch():
    with pytest.raises(ValueError):
        integrate(make_grid(10), np.ones(9))


def test_sine_source_converges_to_antiderivative():
    exact = 100 * (1 - np.cos(3 * np.pi)) / (3 * np.pi)
    errs = []
    for m in (250, 500, 1000, 2000):
        g = make_grid(m)
        errs.append(abs(integrate(g, 100 * np.sin(3 * np.pi * g.points)) - exact))
    assert errs[0] < 2e-3
    assert all(a > b for a, b in zip(errs, errs[1:]))
    orders = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
    np.testing.assert_allclose(orders, 2.0, atol=0.01)


def test_sin_squared_half():
    g = make_grid(250)
    assert integrate(g, np.sin(3 * np.pi * g.points) ** 2) == pytest.approx(0.5, abs=1e-4)


def _nearest_by_scan(points, c):
    best, bi = np.inf, -1
    for i, x in enumerate(points):
        d = abs(x - c)
        if d < best:
            best, bi = d, i
    return bi


def test_stencil_center_half():
    g = make_grid(250)
    s = delta_stencil(g, 0.5)
    assert s.in_domain and s.amplitude == 250.0
    assert s.hit_index == _nearest_by_scan(g.points, 0.5)
    v = s.values()
    assert np.count_nonzero(v) == 1 and v[s.hit_index] == 250.0
    f = np.exp(g.points)
    assert integrate(g, v * f) == pytest.approx(f[s.hit_index], rel=1e-15)


def test_stencil_outside_domain():
    g = make_grid(250)
    s = delta_stencil(g, 1.7)
    assert not s.in_domain and s.hit_index is None
    assert integrate(g, s.values() * np.cos(g.points)) == 0.0


def test_stencil_first_point():
    g = make_grid(250)
    assert delta_stencil(g, 0.002).hit_index == 0


def test_tie_goes_to_lower_index():
    g = make_grid(4)  # points 0.125, 0.375, ...; 0.25 is exactly between the first two
    assert delta_stencil(g, 0.25).hit_index == 0


@settings(max_examples=100, deadline=None)
@given(c=st.floats(0.0, 1.0), m=st.integers(2, 600))
def test_stencil_matches_linear_scan(c, m):
    g = make_grid(m)
    assert delta_stencil(g, c).hit_index == _nearest_by_scan(g.points, c)


@settings(max_examples=100, deadline=None)
@given(c=st.floats(0.0, 1.0), a=st.floats(-3, 3), k=st.floats(0.1, 10))
def test_sifting(c, a, k):
    g = make_grid(250)
    s = delta_stencil(g, c)
    f = np.sin(k * g.points + a) + g.points ** 2
    assert integrate(g, s.values() * f) == pytest.approx(f[s.hit_index], rel=1e-13, abs=1e-15)


@given(c=st.one_of(st.floats(-1e6, -1e-9), st.floats(1.0 + 1e-9, 1e6)))
def test_out_of_domain_integrates_to_zero(c):
    g = make_grid(50)
    assert integrate(g, delta_stencil(g, c).values() * (1 + g.points)) == 0.0
