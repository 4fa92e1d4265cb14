import math
import random

import numpy as np
import pytest

from sboxkit import (
    BranchMode,
    DegenerateOrbitWarning,
    MapKind,
    MapParams,
    NonFiniteState,
    ParamOutOfRange,
    bifurcation_scan,
    iterate,
    lyapunov,
    map_derivative,
    map_step,
    renormalize,
    round15,
)


def ahyb(a, mode=BranchMode.EQUATION1):
    return MapParams(MapKind.AHYB, a, mode)


def logistic(b):
    return MapParams(MapKind.LOGISTIC, b)


def sine(beta):
    return MapParams(MapKind.SINE, beta)


# ---------------------------------------------------------------------------
# map_step / map_derivative

def test_step_branch1():
    assert map_step(ahyb(1.0), 1.0) == 3.0


def test_step_branch3_escapes_domain():
    # 3.5 * (1.0 - 3.5): the raw formula may leave (0, 4)
    assert map_step(ahyb(1.0), 3.5) == -8.75


def test_step_branch2_high_precision():
    # 0.5 + 2^0.9, frozen from a 40-digit arithmetic evaluation:
    # 2.366065983073614831962687...
    got = map_step(ahyb(0.5), 2.0)
    assert got == pytest.approx(2.366065983073614831962687, rel=1e-15)


def test_step_branch_boundaries_half_open():
    # 1.5 and 3.0 belong to the next branch up
    a = 0.7
    assert map_step(ahyb(a), 1.5) == a + 1.5**0.9
    assert map_step(ahyb(a), 3.0) == 3.0 * (a - 3.0)
    assert map_step(ahyb(a, BranchMode.ALGORITHM1), 3.0) == a - 3.0


def test_step_branch1_exactness():
    rng = random.Random(11)
    for _ in range(500):
        a = rng.uniform(1e-6, 2 - 1e-6)
        x = rng.uniform(1e-9, 1.5 - 1e-9)
        assert map_step(ahyb(a), x) == (2.0 + a) * x


def test_step_logistic():
    assert map_step(logistic(4.0), 0.5) == 1.0
    # fixed point 1 - 1/b
    assert map_step(logistic(2.5), 0.6) == pytest.approx(0.6, abs=1e-15)


def test_step_nonfinite():
    with pytest.raises(NonFiniteState):
        map_step(logistic(4.0), float("nan"))
    with pytest.raises(NonFiniteState):
        map_step(ahyb(1.0), float("inf"))


def test_param_out_of_range():
    for bad in (0.0, 2.0, 2.5, -1.0, float("nan")):
        with pytest.raises(ParamOutOfRange):
            MapParams(MapKind.AHYB, bad)
    with pytest.raises(ParamOutOfRange):
        MapParams(MapKind.LOGISTIC, 4.0001)
    MapParams(MapKind.LOGISTIC, 4.0)  # upper bound inclusive
    MapParams(MapKind.SINE, 4.0)


def test_derivative_examples():
    assert map_derivative(ahyb(1.2), 1.0) == pytest.approx(3.2)
    assert map_derivative(ahyb(1.0), 3.5) == pytest.approx(-6.0)
    assert map_derivative(logistic(4.0), 0.5) == 0.0
    assert map_derivative(ahyb(1.0, BranchMode.ALGORITHM1), 3.5) == -1.0


def test_derivative_matches_finite_difference():
    # central difference with h = 1e-7, 1000 interior points per branch,
    # points within 1e-6 of a branch boundary excluded
    h = 1e-7
    rng = random.Random(7)
    branches = [(1e-6, 1.5 - 1e-6), (1.5 + 1e-6, 3.0 - 1e-6), (3.0 + 1e-6, 4.0 - 1e-6)]
    for mode in BranchMode:
        for lo, hi in branches:
            for _ in range(1000):
                a = rng.uniform(0.05, 1.95)
                x = rng.uniform(lo + 2 * h, hi - 2 * h)
                p = ahyb(a, mode)
                fd = (map_step(p, x + h) - map_step(p, x - h)) / (2 * h)
                assert map_derivative(p, x) == pytest.approx(fd, rel=1e-4)
    for make, lo, hi in ((logistic, 0.0, 1.0), (sine, 0.0, 1.0)):
        for _ in range(1000):
            b = rng.uniform(0.1, 4.0)
            x = rng.uniform(lo + 1e-6 + 2 * h, hi - 1e-6 - 2 * h)
            p = make(b)
            fd = (map_step(p, x + h) - map_step(p, x - h)) / (2 * h)
            d = map_derivative(p, x)
            if abs(d) > 1e-4:  # relative tolerance is meaningless at zeros
                assert d == pytest.approx(fd, rel=1e-4)


# ---------------------------------------------------------------------------
# renormalize / round15

def test_renormalize_examples():
    assert renormalize(2.25) == 1.0
    assert renormalize(-8.75) == 3.0
    assert renormalize(5.0) == 0.0


def test_renormalize_nonfinite():
    with pytest.raises(NonFiniteState):
        renormalize(float("inf"))


def test_renormalize_range_property():
    # 10^6 random finite inputs, including negatives and huge magnitudes
    rng = random.Random(2718)
    for _ in range(1_000_000):
        mag = 10.0 ** rng.uniform(-12, 12)
        v = renormalize(rng.choice((-1.0, 1.0)) * mag)
        assert 0.0 <= v < 4.0


def test_round15_half_away_from_zero():
    assert round15(2.5e-15) == 3e-15
    assert round15(-2.5e-15) == -3e-15
    assert round15(1.23456789) == 1.23456789


# ---------------------------------------------------------------------------
# iterate

def test_iterate_logistic_fixed_point():
    pts = iterate(logistic(2.5), 0.2, transient=1000, n=3)
    assert pts.shape == (3,)
    assert np.all(np.abs(pts - 0.6) < 1e-9)


def test_iterate_empty():
    assert iterate(logistic(2.5), 0.2, transient=0, n=0).size == 0


def test_iterate_ahyb_fold_closure():
    pts = iterate(ahyb(1.5), 0.3, transient=0, n=10_000)
    assert np.all(pts >= 0.0)
    assert np.all(pts < 4.0)


def test_iterate_deterministic():
    a = iterate(ahyb(1.3), 0.7, transient=100, n=500)
    b = iterate(ahyb(1.3), 0.7, transient=100, n=500)
    assert np.array_equal(a, b)


def test_iterate_reseeds_zero_state():
    # 3 * (4/3) renormalizes to exactly 0; the orbit must warn and continue
    with pytest.warns(DegenerateOrbitWarning):
        pts = iterate(ahyb(1.0), 4.0 / 3.0, transient=0, n=5)
    assert np.all(pts < 4.0)
    assert pts[0] == 0.0 or pts[0] > 0.0  # emitted state is the post-fold one


# ---------------------------------------------------------------------------
# bifurcation_scan

def test_bifurcation_pre_period_doubling():
    pts = bifurcation_scan(MapKind.LOGISTIC, 2.4, 2.9, steps=11, x0=0.2,
                           transient=2000, samples=50)
    assert pts.shape == (11 * 50, 2)
    for b in np.unique(pts[:, 0]):
        states = pts[pts[:, 0] == b, 1]
        assert np.all(np.abs(states - (1.0 - 1.0 / b)) < 1e-6)


def test_bifurcation_single_step_matches_iterate():
    pts = bifurcation_scan(MapKind.LOGISTIC, 3.1, 3.9, steps=1, x0=0.4,
                           transient=100, samples=25)
    assert np.all(pts[:, 0] == 3.1)
    direct = iterate(logistic(3.1), 0.4, transient=100, n=25)
    assert np.array_equal(pts[:, 1], direct)


def test_bifurcation_period_two():
    # classic period doubling: two clusters at b = 3.2
    pts = bifurcation_scan(MapKind.LOGISTIC, 3.2, 3.2, steps=1, x0=0.35,
                           transient=4000, samples=100)
    states = np.unique(np.round(pts[:, 1], 9))
    assert len(states) == 2
    b = 3.2
    disc = math.sqrt((b + 1.0) * (b - 3.0))
    expected = sorted(((b + 1.0 - disc) / (2.0 * b), (b + 1.0 + disc) / (2.0 * b)))
    assert states[0] == pytest.approx(expected[0], abs=1e-6)
    assert states[1] == pytest.approx(expected[1], abs=1e-6)


def test_bifurcation_rejects_bad_range():
    with pytest.raises(ParamOutOfRange):
        bifurcation_scan(MapKind.LOGISTIC, -0.5, 3.0, steps=10)
    with pytest.raises(ParamOutOfRange):
        bifurcation_scan(MapKind.AHYB, 0.5, 2.5, steps=10)


# ---------------------------------------------------------------------------
# lyapunov

def test_lyapunov_logistic_fully_chaotic():
    le = lyapunov(logistic(4.0), 0.3, transient=1000, n=100_000)
    assert le == pytest.approx(math.log(2.0), abs=0.01)


def test_lyapunov_logistic_fixed_point():
    le = lyapunov(logistic(2.5), 0.2, transient=1000, n=100_000)
    assert le == pytest.approx(math.log(0.5), abs=0.01)


def test_lyapunov_sign_across_logistic_regimes():
    for b in (2.0, 2.5, 2.9):
        assert lyapunov(logistic(b), 0.2, transient=500, n=20_000) < 0.0
    assert lyapunov(logistic(4.0), 0.2, transient=500, n=20_000) > 0.0


def test_lyapunov_ahyb_positive():
    assert lyapunov(ahyb(1.5), 0.3, transient=1000, n=100_000) > 0.0


def test_lyapunov_needs_samples():
    with pytest.raises(ValueError):
        lyapunov(logistic(4.0), 0.3, transient=0, n=0)
