import math

import pytest

import mqrot


def test_model_scalars():
    p = mqrot.PhysicalParams(m=1.0, M_quad=1.0, lam=1.0)
    assert mqrot.cyclotron_frequency(p) == 2.0
    assert mqrot.effective_field(p) == 1.0
    assert mqrot.delta_from_omega(p, 2.0) == pytest.approx(1.0)


def test_invalid_params_raise():
    with pytest.raises(Exception):
        mqrot.PhysicalParams(m=-1.0)


def test_roots_and_series():
    roots = mqrot.solve_xi(1, 0)
    assert roots == pytest.approx([math.sqrt(2.0)])
    assert mqrot.termination_residual(1, 0, roots[0]) == pytest.approx(0.0, abs=1e-14)

    s = mqrot.coefficients(0, roots[0], 4.0, 1)
    assert mqrot.eval_radial(s, 1.0, 1) == pytest.approx(
        math.exp(-0.5) * (1 + math.sqrt(2.0))
    )


def test_solve_level_matches_closed_form():
    p = mqrot.PhysicalParams(m=1.0, Omega=1.0, theta=1.0)
    modes = mqrot.solve_level(p, 1, 0)
    plus, minus = mqrot.closed_form_n1(p, 0)
    assert len(modes) == 2
    assert modes[0].omega == pytest.approx(plus.omega, rel=1e-12)
    assert modes[0].energy == pytest.approx(4.0, rel=1e-12)
    assert modes[1].omega == pytest.approx(minus.omega, rel=1e-12)


def test_landau_limit():
    p = mqrot.PhysicalParams(m=1.0)
    assert mqrot.landau_limit(p, 0, 0, 2.0) == pytest.approx(1.0)


def test_oracle_verification():
    p = mqrot.PhysicalParams(m=1.0, Omega=1.0, theta=1.0)
    mode = mqrot.solve_level(p, 1, 0)[0]
    rep = mqrot.verify_mode(mode, mqrot.GridSpec(10.0, 1000))
    assert rep.passed
    assert rep.eigenindex == rep.node_count == 0
    assert rep.Lambda_numeric == pytest.approx(4.0, rel=1e-4)
