"""Relation suites for the deformed and undeformed two-qubit generators."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidtel.algebra import (
    BmwParams,
    RelationReport,
    brauer_teleportation_residuals,
    build_rep,
    check_all,
    check_brauer,
    derive_params,
    swap_cup_cap_expansion,
)
from braidtel.gates import SWAP, tl_projector, yb_gate
from braidtel.linalg import max_abs_diff

TOL = 1e-10

REFERENCE_PARAMS = BmwParams(
    sigma=cmath.exp(1j * 5 * math.pi / 4),
    w=math.sqrt(2) * 1j,
    d=2.0,
    lambdas=(
        cmath.exp(1j * 5 * math.pi / 4),
        cmath.exp(1j * 3 * math.pi / 4),
        cmath.exp(1j * math.pi / 4),
    ),
)


def _suite(phi: float, n: int = 3):
    e = tl_projector(0, 0, phi)
    b = yb_gate(phi)
    return check_all(e, b, REFERENCE_PARAMS, n=n, tol=TOL)


@pytest.mark.parametrize("phi", [0.0, math.pi / 8, 1.234])
def test_full_relation_suite(phi):
    reports = _suite(phi)
    assert [r.family for r in reports] == ["TL", "Braid", "Mixed", "Tangle"]
    for report in reports:
        assert report.passed, report.worst()


def test_four_sites_exercises_far_commutation():
    reports = _suite(0.6, n=4)
    ids = [rid for r in reports for rid, _ in r.entries]
    assert any("e1" in rid and "e3" in rid for rid in ids)
    for report in reports:
        assert report.passed, report.worst()


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False))
def test_relations_hold_across_the_family(phi):
    for report in _suite(phi):
        assert report.max_residual < 1e-9


def test_derive_params_reference_values():
    params = derive_params(yb_gate(0.77))
    assert abs(params.sigma - REFERENCE_PARAMS.sigma) < TOL
    assert abs(params.w - REFERENCE_PARAMS.w) < TOL
    assert abs(params.d - 2.0) < TOL
    _, lam2, lam3 = params.lambdas
    assert abs(lam2 * lam3 + 1) < 1e-12
    assert params.constraint_residual() < 1e-12


def test_derive_params_rejects_wrong_spectrum():
    with pytest.raises(ValueError):
        derive_params(np.eye(4))  # one distinct eigenvalue
    with pytest.raises(ValueError):
        derive_params(np.eye(3))


def test_build_rep_requires_two_sites():
    with pytest.raises(ValueError):
        build_rep(np.eye(4), np.eye(4), 1)


def test_relation_report_bookkeeping():
    report = RelationReport(family="demo", site_count=3, tolerance=1e-10)
    report.add("ok", 1e-14)
    report.add("bad", 1e-3)
    assert report.max_residual == 1e-3
    assert report.worst() == ("bad", 1e-3)
    assert not report.passed


def test_inconsistent_params_have_nonzero_residual():
    skew = BmwParams(sigma=1j, w=1.0, d=5.0, lambdas=(1j, 1.0, -1.0))
    assert skew.constraint_residual() > 1.0


def test_brauer_suite_passes():
    for report in check_brauer(n=3, tol=TOL):
        assert report.passed, report.worst()


def test_brauer_suite_four_sites():
    for report in check_brauer(n=4, tol=TOL):
        assert report.passed, report.worst()


def test_swap_expands_into_dressed_projectors():
    assert max_abs_diff(swap_cup_cap_expansion(), SWAP) < 1e-12


def test_brauer_state_identities():
    residuals = brauer_teleportation_residuals(seed=11, count=20)
    assert set(residuals) == {"projector", "swap", "tangle", "cup-cap"}
    for name, value in residuals.items():
        assert value < 1e-12, name
