import math

import numpy as np
import pytest
from scipy.special import lambertw

from lambert_tsallis.errors import BranchUnavailable, DomainError, EmptyResult, NoConvergence, UnsupportedQ
from lambert_tsallis.qdeform import exp_q
from lambert_tsallis.wq_core import (
    PRINCIPAL,
    SECONDARY,
    BranchKind,
    branch_point,
    complex_seed,
    wq,
    wq_closed_form,
    wq_eval_complex,
    wq_eval_real,
)

# bisection on w e^w = z and w exp_{5/3}(w) = z, xtol 1e-16
W1_SECONDARY_M02 = -2.5426413577735265
W1_PRINCIPAL_M02 = -0.25917110181907377
W53_PRINCIPAL_2 = 0.7322940232782731


def defining_residual(q, w, z):
    return abs(w * exp_q(q, w) - z)


@pytest.mark.parametrize("q, z_b, w_b", [
    (1.0, -1.0 / math.e, -1.0),
    (1.5, -0.5, -2.0),
    (0.5, -8.0 / 27.0, -2.0 / 3.0),
])
def test_branch_point_values(q, z_b, w_b):
    bp = branch_point(q)
    assert bp.exists
    assert bp.z_b == pytest.approx(z_b, abs=1e-12)
    assert bp.w_b == pytest.approx(w_b, abs=1e-12)


@pytest.mark.parametrize("q", [2.0, 2.5, 4.0])
def test_no_branch_point_from_two_up(q):
    assert not branch_point(q).exists


def test_secondary_unavailable_without_branch_point():
    with pytest.raises(BranchUnavailable):
        wq_eval_real(2.0, -0.3, SECONDARY)


@pytest.mark.parametrize("q, z, expected", [
    (2.0, 1.0, 0.5),
    (1.5, 1.0, 4.0 - 2.0 * math.sqrt(3.0)),
    (1.5, -0.5, -2.0),
    (0.5, 0.0, 0.0),
])
def test_closed_form_examples(q, z, expected):
    assert wq_closed_form(q, z, PRINCIPAL).w.real == pytest.approx(expected, abs=1e-14)


def test_closed_form_rejects_other_q_and_outside_domain():
    with pytest.raises(UnsupportedQ):
        wq_closed_form(0.75, 1.0, PRINCIPAL)
    with pytest.raises(DomainError):
        wq_closed_form(1.5, -0.6, PRINCIPAL)
    with pytest.raises(DomainError):
        wq_closed_form(2.0, -1.0, PRINCIPAL)


def test_real_examples():
    assert wq_eval_real(1.0, math.e).w.real == pytest.approx(1.0, abs=1e-14)
    assert wq_eval_real(1.0, -0.2, SECONDARY).w.real == pytest.approx(W1_SECONDARY_M02, rel=1e-13)
    assert wq_eval_real(1.0, -0.2).w.real == pytest.approx(W1_PRINCIPAL_M02, rel=1e-13)
    assert wq_eval_real(5.0 / 3.0, 2.0).w.real == pytest.approx(W53_PRINCIPAL_2, rel=1e-13)


@pytest.mark.parametrize("z", [-0.35, -0.2, 0.0, 0.5, 3.0, 100.0, 1e10])
def test_classical_limit_matches_scipy(z):
    got = wq_eval_real(1.0, z).w.real
    assert got == pytest.approx(lambertw(z, 0).real, rel=1e-13, abs=1e-300)
    if z < 0:
        got = wq_eval_real(1.0, z, SECONDARY).w.real
        assert got == pytest.approx(lambertw(z, -1).real, rel=1e-13)


@pytest.mark.parametrize("q", [-2.0, -0.5, 0.5, 0.75, 1.0, 4.0 / 3.0, 1.5, 5.0 / 3.0, 2.0, 3.0, 4.0])
def test_principal_at_zero(q):
    res = wq_eval_real(q, 0.0)
    assert res.w == 0
    assert res.branch == PRINCIPAL


def test_domain_error_left_of_branch_point():
    with pytest.raises(DomainError):
        wq_eval_real(1.5, -0.6)
    with pytest.raises(DomainError):
        wq_eval_real(1.0, 0.1, SECONDARY)


def _closed_form_domain(q, branch, n, rng):
    bp = branch_point(q)
    if branch is SECONDARY:
        return bp.z_b * rng.uniform(1e-6, 1.0, n)
    lo = {0.5: bp.z_b, 1.5: bp.z_b, 4.0 / 3.0: 0.0, 2.0: -0.999}[q]
    # half linear near the left end, half log-spread out to 1e3
    near = lo + (1.0 - lo) * rng.uniform(0.0, 1.0, n // 2)
    far = 10.0 ** rng.uniform(0.0, 3.0, n - n // 2)
    return np.concatenate([near, far])


@pytest.mark.parametrize("q", [0.5, 4.0 / 3.0, 1.5, 2.0])
def test_closed_form_agrees_with_iteration(q):
    rng = np.random.default_rng(int(q * 1000))
    branches = [PRINCIPAL] if q == 2.0 else [PRINCIPAL, SECONDARY]
    for branch in branches:
        for z in _closed_form_domain(q, branch, 200, rng):
            z = float(z)
            cf = wq_closed_form(q, z, branch).w.real
            it = wq_eval_real(q, z, branch).w.real
            assert abs(cf - it) <= 1e-10 * max(1.0, abs(cf)), (q, z, branch)


def test_q2_near_minus_one_limited_by_conditioning():
    # w = z/(1+z): a relative change eps in z moves w by ~eps |w| relatively
    eps = np.finfo(float).eps
    for d in 10.0 ** np.linspace(-10.0, -1.0, 60):
        z = -1.0 + d
        cf = wq_closed_form(2.0, z).w.real
        it = wq_eval_real(2.0, z).w.real
        assert abs(cf - it) <= 16 * eps * cf * cf


@pytest.mark.parametrize("q", [0.5, 1.5])
def test_branch_point_limits_from_opposite_sides(q):
    bp = branch_point(q)
    prev_p, prev_s = None, None
    for k in range(2, 9):
        z = bp.z_b + 10.0 ** (-k)
        wp = wq_eval_real(q, z, PRINCIPAL).w.real
        ws = wq_eval_real(q, z, SECONDARY).w.real
        assert ws < bp.w_b < wp
        if prev_p is not None:
            assert wp < prev_p
            assert ws > prev_s
        prev_p, prev_s = wp, ws
    assert abs(prev_p - bp.w_b) < 1e-3
    assert abs(prev_s - bp.w_b) < 1e-3


@pytest.mark.parametrize("q", [0.5, 0.75, 1.0, 4.0 / 3.0, 1.5, 5.0 / 3.0, 2.0])
def test_principal_monotone(q):
    bp = branch_point(q)
    lo = max(bp.z_b, -0.9 * abs(bp.z_b)) if bp.exists else -0.9
    ws = [wq_eval_real(q, float(z)).w.real for z in np.linspace(lo, 10.0, 400)]
    assert all(b >= a for a, b in zip(ws, ws[1:]))


def test_principal_beyond_two_covers_all_reals():
    for z in (-1e6, -50.0, -1.0, 0.3, 100.0):
        res = wq_eval_real(3.0, z)
        assert res.w.real < 1.0 / (3.0 - 1.0)
        assert defining_residual(3.0, res.w, z) <= 1e-10 * max(1.0, abs(z))


def test_steep_pole_reports_conditioning():
    # w sits ~1e-13 under the pole at 1/2; one ulp of w moves z by ~1e-4 relative
    with pytest.raises(NoConvergence, match="double resolution"):
        wq_eval_real(3.0, 1e6)


def test_complex_contains_real_value_for_q2():
    out = wq_eval_complex(2.0, 1 + 0j)
    assert any(abs(r.w - 0.5) < 1e-12 for r in out)


def test_complex_contains_both_classical_branches():
    out = wq_eval_complex(1.0, -0.2 + 0j)
    ws = [r.w for r in out]
    assert any(abs(w - W1_PRINCIPAL_M02) < 1e-10 for w in ws)
    assert any(abs(w - W1_SECONDARY_M02) < 1e-10 for w in ws)


def test_complex_results_labelled_by_modulus():
    out = wq_eval_complex(0.7, 2.0 - 1.5j)
    assert out
    assert [r.branch for r in out] == [complex_seed(k) for k in range(len(out))]
    mods = [abs(r.w) for r in out]
    assert mods == sorted(mods)
    for r in out:
        assert r.branch.kind is BranchKind.COMPLEX_SEED
        assert str(r.branch) == f"complex_seed[{r.branch.index}]"
        assert defining_residual(0.7, r.w, 2.0 - 1.5j) <= 1e-10 * max(1.0, abs(2.0 - 1.5j))


def test_complex_path_for_trinomial_argument():
    # argument produced by the x^2.01 - 5x + 6 reduction
    q = 1.0 + 2.01 / 1.01
    z = (5.05 / 2.01) * complex(-6.0) ** (-1.01 / 2.01)
    out = wq_eval_complex(q, z)
    assert out
    for r in out:
        assert defining_residual(q, r.w, z) <= 1e-10 * max(1.0, abs(z))


def test_wq_wrapper_dispatch():
    assert wq(2.0, 1.0).w == pytest.approx(0.5)
    assert wq(2.0, 1.0 + 0j, "all")
    assert wq(1.0, -0.2, SECONDARY).w.real == pytest.approx(W1_SECONDARY_M02, rel=1e-13)


def test_result_residual_field_is_honest():
    res = wq_eval_real(0.3, 7.0)
    assert res.residual == pytest.approx(defining_residual(0.3, res.w, 7.0), abs=1e-15)
    assert res.iterations <= 100


@pytest.mark.parametrize("q, z", [
    (3.0, 2.175421845395861 - 3.8331589818564895j),
    (1.7119755725171903, -7.904038338286416 - 31.358119927828877j),
])
def test_large_z_solution_next_to_pole(q, z):
    # solutions crowd w = 1/(q-1); the radial grid alone misses them
    out = wq_eval_complex(q, z)
    assert any(abs(1.0 + (1.0 - q) * r.w) < 0.2 for r in out)
    for r in out:
        assert defining_residual(q, r.w, z) <= 1e-12 * abs(z)


def test_far_solution_just_above_two():
    q, z = 2.0153984137969934, -694.110573630986 + 3.704819952835591j
    (r,) = wq_eval_complex(q, z)
    assert abs(r.w) > 1e187
    assert defining_residual(q, r.w, z) <= 1e-12 * abs(z)


def test_unrepresentable_solution_is_empty_not_wrong():
    # the nearest double to the true w leaves a relative residual of ~3e-9
    with pytest.raises(EmptyResult):
        wq_eval_complex(3.88378356496354, 233.77025473028309 + 435.0348451057112j)
