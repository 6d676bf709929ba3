import math

import pytest

import levyarea as la


@pytest.fixture
def mm1():
    return la.ProcessSpec(drift=-1.0, jump_rate=1.0, jumps=la.JumpDistribution.exponential(2.0))


def test_exponent_and_inverse(mm1):
    e = la.LaplaceExponent(mm1)
    assert e(2.0) == pytest.approx(1.5)
    assert e.inverse(1.5) == pytest.approx(2.0, rel=1e-12)
    assert e.hitting_time_mean(1.0) == pytest.approx(2.0)
    assert la.inverse_derivs_at_zero(e, 3) == pytest.approx([2.0, -4.0, 36.0])


def test_series():
    assert la.revert_series([1.0, 0.5], 3) == pytest.approx([1.0, -0.5, 0.5])


def test_area_law(mm1):
    e = la.LaplaceExponent(mm1)
    h = la.HoldingFunction.linear(1.0)
    assert la.lst_area(e, h, 1.0, 1.0) == pytest.approx(0.46821526013128820519, rel=1e-12)
    assert la.mean_area(e, h, 1.0) == pytest.approx(1.0)
    assert la.var_area(e, h, 1.0) == pytest.approx(4.0 / 3.0)
    c, mu = la.moments_area(e, h, 1.0, 2)
    assert mu == pytest.approx([1.0, 1.0, 7.0 / 3.0])
    assert la.corr_area(h, la.HoldingFunction.constant(1.0), 5.0) == pytest.approx(math.sqrt(3) / 2)


def test_simulation(mm1):
    e = la.LaplaceExponent(mm1)
    h = la.HoldingFunction.linear(1.0)
    r = la.estimate(mm1, h, 1.0, n_reps=20000, seed=3, lst_alphas=[1.0])
    m = r["mean_area"]
    assert abs(m["value"] - 1.0) <= 3 * m["std_error"]
    l = r["lst"][1.0]
    assert abs(l["value"] - la.lst_area(e, h, 1.0, 1.0)) <= 3 * l["std_error"]
    p = la.sample_excursion(mm1, h, 1.0, seed=5, stream=2)
    assert p["area"] == pytest.approx(p["stieltjes_area"], abs=1e-9)
    assert la.estimate(mm1, h, 1.0, n_reps=500, seed=9, workers=1) == la.estimate(mm1, h, 1.0, n_reps=500, seed=9, workers=4)


def test_inventory():
    o = la.optimal_order(4.0, la.HoldingFunction.linear(1.0), 0.5)
    assert o["x_star"] == pytest.approx(2.0, abs=1e-10)
    assert o["p_star"] == pytest.approx(4.0, abs=1e-10)
    assert la.optimal_order(4.0, la.HoldingFunction.constant(1.0), 0.5)["x_star"] is None
    x, p, _ = la.multiclass_linear([3.0, 1.0], 4.0, 0.5)
    assert x == pytest.approx(2.0)
    assert p == [0.0, 1.0]


def test_verify(mm1):
    rows = la.verify(mm1, la.HoldingFunction.linear(1.0), reps=20000)
    assert rows and all(status != "FAIL" for status, _, _ in rows)


def test_errors():
    with pytest.raises(la.LevyAreaError):
        la.ProcessSpec(drift=1.0)
    with pytest.raises(la.LevyAreaError):
        la.ProcessSpec(drift=-1.0, jump_rate=1.0)
    e = la.LaplaceExponent(la.ProcessSpec(drift=-1.0, sigma2=1.0))
    with pytest.raises(la.LevyAreaError):
        e(-1.0)
    with pytest.raises(la.LevyAreaError):
        la.lst_two_level(e, la.HoldingFunction.linear(1.0), 2.0, 1.0, 1.0)
