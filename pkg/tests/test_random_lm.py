import math
from fractions import Fraction
from math import comb

import pytest

from coinvariant.complex import fhg_vectors
from coinvariant.homology import top_betti
from coinvariant.random_lm import (
    LMConfig,
    cd_table,
    face_uniforms,
    g_d,
    monte_carlo,
    sample_complex,
    threshold_cd,
    trial_outcome,
)

CD_REF = [2.783, 3.91, 4.962, 5.984, 6.993, 7.997, 8.998]


@pytest.mark.parametrize(
    "kw",
    [dict(p=1.5), dict(p=-0.1), dict(d=0), dict(n=3, d=2), dict(trials=-1), dict(seed=-1), dict(seed=2**64)],
)
def test_config_validation(kw):
    base = dict(n=8, d=2, p=0.5, trials=1, seed=0)
    base.update(kw)
    with pytest.raises(ValueError):
        LMConfig(**base)


def test_extreme_probabilities():
    full = sample_complex(LMConfig(7, 2, 1.0, 1, 3), 0)
    assert fhg_vectors(full).f_at(2) == comb(7, 3)
    empty = sample_complex(LMConfig(7, 2, 0.0, 1, 3), 0)
    assert empty.dim == 1 and fhg_vectors(empty).f_at(1) == comb(7, 2)


def test_full_skeleton_always_present():
    cfg = LMConfig(8, 2, 0.4, 20, 11)
    for t in range(cfg.trials):
        assert fhg_vectors(sample_complex(cfg, t)).f_at(1) == comb(8, 2)


def test_mean_fd_binomial():
    n, d, p, trials = 10, 2, 0.3, 10_000
    cfg = LMConfig(n, d, p, trials, 2024)
    N = comb(n, d + 1)
    total = sum(int((face_uniforms(cfg, t) < p).sum()) for t in range(trials))
    # the sampled complexes carry exactly the selected faces
    for t in range(50):
        cx = sample_complex(cfg, t)
        fd = len(cx.faces(d)) if cx.dim == d else 0
        assert fd == int((face_uniforms(cfg, t) < p).sum())
    mean = total / trials
    se = math.sqrt(N * p * (1 - p) / trials)
    assert abs(mean - N * p) < 3 * se


def test_homology_full_skeleton():
    rep = monte_carlo(LMConfig(6, 2, 1.0, 5, 1), "homology")
    assert rep.estimate == 1 and rep.mean_fd == comb(6, 3)


@pytest.mark.parametrize("mode", ["homology", "wlp_criterion", "wlp_direct"])
def test_zero_probability(mode):
    rep = monte_carlo(LMConfig(7, 2, 0.0, 4, 5), mode)
    assert rep.hits == 0 and rep.estimate == 0 and rep.mean_fd == 0


def test_zero_probability_d3_direct_is_not_zero():
    # the bare 2-skeleton on 6 vertices fails the WLP with caps 5
    rep = monte_carlo(LMConfig(6, 3, 0.0, 1, 5), "wlp_direct", budget=10**6)
    assert rep.hits == 1


def test_criterion_below_homology():
    cfg = LMConfig(8, 2, 0.5, 40, 77)
    for t in range(cfg.trials):
        _, h = trial_outcome(cfg, t, "homology")
        _, c = trial_outcome(cfg, t, "wlp_criterion")
        assert not c or h


def test_coupling_monotone():
    ps = [0.2, 0.35, 0.5, 0.7, 0.9]
    for t in range(15):
        prev_faces, prev_hit = set(), False
        for p in ps:
            cx = sample_complex(LMConfig(8, 2, p, 15, 9), t)
            faces = set(cx.faces(2)) if cx.dim == 2 else set()
            assert prev_faces <= faces
            hit = top_betti(cx) > 0 if faces else False
            assert hit >= prev_hit
            prev_faces, prev_hit = faces, hit


def test_reproducible_and_parallel_safe():
    cfg = LMConfig(8, 2, 0.5, 12, 123)
    a = monte_carlo(cfg, "wlp_criterion", workers=1)
    b = monte_carlo(cfg, "wlp_criterion", workers=1)
    c = monte_carlo(cfg, "wlp_criterion", workers=2)
    assert a == b == c
    assert a.to_csv(cfg) == c.to_csv(cfg)
    other = monte_carlo(LMConfig(8, 2, 0.5, 12, 124), "wlp_criterion")
    assert other.mean_fd != a.mean_fd or other.hits != a.hits


def test_budget_skips_are_reported():
    cfg = LMConfig(8, 2, 0.6, 3, 1)
    rep = monte_carlo(cfg, "wlp_direct", budget=10)
    assert rep.skipped == 3 and rep.hits == 0 and rep.estimate == 0


def test_unknown_mode():
    with pytest.raises(ValueError):
        monte_carlo(LMConfig(8, 2, 0.5, 1, 1), "nope")


def test_report_csv():
    cfg = LMConfig(6, 2, 1.0, 2, 1)
    text = monte_carlo(cfg, "homology").to_csv(cfg)
    head, row = text.splitlines()
    assert head == "n,d,p,seed,field,mode,trials,hits,skipped,estimate,mean_fd"
    assert row == "6,2,1.0,1,QQ,homology,2,2,0,1,20"


def test_threshold_values():
    assert threshold_cd(1) == 1
    for d, ref in zip(range(2, 9), CD_REF):
        assert abs(threshold_cd(d) - ref) <= 0.002
    for d in range(1, 13):
        c = threshold_cd(d)
        assert 0 < c < d + 1
        if d > 1:
            assert abs(g_d(c, d) - (d + 1)) < 1e-6
    with pytest.raises(ValueError):
        threshold_cd(3, tol=0)


def test_cd_table_format():
    assert cd_table(8) == "d,2,3,4,5,6,7,8\nc_d,2.783,3.91,4.962,5.984,6.993,7.997,8.998\n"
