import math

import pytest

import gyrostab as g


@pytest.fixture
def params():
    return g.GyrostatParams([3.0, 2.0, 1.0], [1.0, 0.0, 0.0])


def test_params_roundtrip(params):
    assert params.inertia == [3.0, 2.0, 1.0]
    assert params.mu == [1.0, 0.0, 0.0]


def test_rhs_and_integrals(params):
    r = g.rhs(params, [0.0, 1.0, 0.0])
    assert r == pytest.approx([0.0, 0.0, 0.5])
    assert g.f1(params, [0.0, 1.0, 0.0]) == pytest.approx(0.25)
    assert g.f2(params, [0.0, 1.0, 0.0]) == pytest.approx(1.0)


def test_families_and_points(params):
    names = {f.name for f in g.enumerate_families(params)}
    assert "M12" in names and "M1" in names and "M2" in names
    e = g.family_point(params, "M12", -2.0)
    assert e.point == pytest.approx([-2.0, 0.0, 0.0])
    assert g.is_equilibrium(params, e.point)


def test_classify_routes_agree(params):
    unstable = g.classify(params, g.family_point(params, "M12", -2.0))
    assert unstable.closed_form == "not_stable"
    assert unstable.isolation == "not_isolated"
    assert unstable.lyapunov == "unstable"
    assert unstable.max_real_eig == pytest.approx(1.0 / math.sqrt(18.0))

    stable = g.classify(params, g.family_point(params, "M12", 1.0))
    assert stable.closed_form == "stable"
    assert stable.isolation == "isolated"
    assert stable.lyapunov == "stable"


def test_integrate_conserves(params):
    times, states, drift = g.integrate(params, [0.0, 1.0, 0.0], dt=1e-3, t_end=5.0)
    assert len(times) == len(states)
    assert times[-1] == pytest.approx(5.0)
    assert drift < 1e-10


def test_escape_experiment(params):
    e = g.family_point(params, "M12", -3.0)
    res = g.escape_experiment(params, e, 3e-3, 1e-3, 200.0, 1.5)
    assert res.escaped
    assert res.max_deviation >= 1.0


def test_scan_csv(params):
    cfg = (
        '{"inertia": [3.0, 2.0, 1.0], "mu": [1.0, 0.0, 0.0],'
        ' "sweep": {"from": -5.0, "to": 5.0, "count": 21}}'
    )
    out = g.scan_csv(cfg)
    lines = out.strip().splitlines()
    assert lines[0].startswith("q,closed_form")
    assert len(lines) == 22
    assert out == g.scan_csv(cfg)


def test_selfcheck(params):
    passed, failed, failures = g.selfcheck(params)
    assert failed == 0, failures
    assert passed >= 6
