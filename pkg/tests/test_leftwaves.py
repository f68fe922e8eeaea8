import math

import numpy as np
import pytest

from damstep import (
    DomainError,
    PatternKind,
    char_speeds,
    classify_left,
    hugoniot_u,
    min_upstream_depth,
    s1_velocity,
    shock_speed,
    State,
)

G = 9.81


def test_min_upstream_depth():
    assert min_upstream_depth(1.0, 0.0, G) == pytest.approx(1.0)
    # z ~ 0.102 <= 1 keeps the floor at h_l
    assert min_upstream_depth(1.0, 1.0, G) == pytest.approx(1.0)
    # direct evaluation oracle for z > 1
    assert min_upstream_depth(1.0, 4.0, G) == pytest.approx(1.3740271006322666, rel=1e-12)
    with pytest.raises(DomainError):
        min_upstream_depth(0.0, 1.0, G)


def test_s1_velocity():
    assert s1_velocity(1.0, 1.0, 1.0, G) == pytest.approx(1.0)
    # root of the stagnation cubic: u0 vanishes there
    assert s1_velocity(1.3417812146548305, 1.0, 1.0, G) == pytest.approx(0.0, abs=1e-12)
    assert s1_velocity(1.17, 1.0, 1.0, G) == pytest.approx(0.48725036098726304, rel=1e-12)
    with pytest.raises(DomainError):
        s1_velocity(0.5, 1.0, 1.0, G)


def test_classify_single_shock():
    u0 = s1_velocity(1.17, 1.0, 1.0, G)
    pattern = classify_left(1.0, 1.0, 1.17, u0, G)
    assert pattern.kind is PatternKind.S1_ONLY
    assert pattern.intermediate is None
    assert pattern.s1_speed == pytest.approx(shock_speed(1, 1.17, State(1.0, 1.0), G))
    assert pattern.s1_speed <= 1e-12


def test_classify_zero_strength_boundary():
    pattern = classify_left(1.0, 1.0, 1.0, 1.0, G)
    assert pattern.kind is PatternKind.S1_ONLY
    # zero-strength shock rides the backward characteristic
    assert pattern.s1_speed == pytest.approx(1.0 - math.sqrt(G), rel=1e-12)


def test_classify_shock_then_fan():
    # h0 = 4 opens a window between the shock locus and -sqrt(g h0)
    h_l, u_l, h0 = 1.0, 1.0, 4.0
    lo = s1_velocity(h0, h_l, u_l, G)
    hi = -math.sqrt(G * h0)
    assert lo < hi
    u0 = 0.5 * (lo + hi)
    pattern = classify_left(h_l, u_l, h0, u0, G)
    assert pattern.kind is PatternKind.S1_THEN_R2
    mid = pattern.intermediate
    assert mid is not None and h_l < mid.h < h0
    # the intermediate sits on the shock locus and the fan reaches (h0, u0)
    assert mid.u == pytest.approx(hugoniot_u(1, mid.h, State(h_l, u_l), G), rel=1e-9)
    assert mid.u + 2 * (math.sqrt(G * h0) - math.sqrt(G * mid.h)) == pytest.approx(
        u0, abs=1e-9
    )
    # every constituent speed is nonpositive
    assert pattern.s1_speed <= 1e-12
    assert char_speeds(mid, G)[1] <= 1e-12
    assert char_speeds(State(h0, u0), G)[1] <= 1e-12
    assert pattern.s1_speed <= char_speeds(mid, G)[1] <= char_speeds(State(h0, u0), G)[1]


def test_classify_window_miss_is_none():
    # below the shock-locus value: no pattern (the example window at h0 = 2
    # is empty, -sqrt(2g) sits below the locus velocity)
    assert classify_left(1.0, 1.0, 2.0, -5.0, G).kind is PatternKind.NONE
    # off the locus but not in the fan window either
    assert classify_left(1.0, 1.0, 1.17, 0.6, G).kind is PatternKind.NONE
    # h0 below the feed depth
    assert classify_left(1.0, 1.0, 0.8, 0.5, G).kind is PatternKind.NONE


def test_classify_rejects_backward_feed():
    with pytest.raises(DomainError):
        classify_left(1.0, -0.5, 1.2, 0.3, G)


def test_never_rarefaction_only():
    # u0 > u_l can only come from rarefactions, which are excluded
    rng = np.random.default_rng(31)
    for _ in range(2_000):
        h_l = float(10 ** rng.uniform(-0.5, 0.5))
        u_l = float(rng.uniform(0.0, 3.0))
        h0 = float(h_l * 10 ** rng.uniform(-0.5, 0.5))
        u0 = u_l + float(rng.uniform(0.01, 5.0))
        assert classify_left(h_l, u_l, h0, u0, G).kind is PatternKind.NONE
