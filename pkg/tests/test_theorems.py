import pytest

from qcrit import theorems
from qcrit.digits import PrimePower
from qcrit.finite_field import field_make
from qcrit.theorems import (VerifyReport, desk_bounds, explore_generators,
                            verify_admissible_order, verify_admissible_witness,
                            verify_coleman, verify_cyclic_digits,
                            verify_equivariance, verify_logderiv,
                            verify_orbit_min, verify_projection_formula)


def test_report_pass_iff_no_counterexamples():
    r = VerifyReport("s", {}, "scope", 1, [], 0.0)
    assert r.passed
    r = VerifyReport("s", {}, "scope", 1, [{"bad": 1}], 0.0)
    assert not r.passed
    d = r.to_json_dict()
    assert d["pass"] is False and d["counterexamples"] == [{"bad": 1}]
    assert r.to_json_dict(include_timing=False)["elapsed_ms"] is None


def test_desk_bounds():
    assert desk_bounds(2) == (4096, 12)
    assert desk_bounds(3) == (2187, 7)
    assert desk_bounds(5) == (3125, 5)


def test_equivariance_small_grid():
    for p, lam, n in ((2, 1, 1), (2, 2, 2), (3, 1, 1)):
        r = verify_equivariance(PrimePower(p, lam), field_make(p, n),
                                prec=48, trials=12, seed=5)
        assert r.passed, r.counterexamples[:2]
        assert r.checks == 12


def test_equivariance_rejects_wrong_characteristic():
    with pytest.raises(ValueError):
        verify_equivariance(PrimePower(2, 1), field_make(3, 1), 16, 2, 0)


def test_logderiv_small():
    r = verify_logderiv(field_make(2, 2), prec=48, trials=10, seed=1)
    assert r.passed
    assert r.checks == 60


def test_admissible_sweeps_small():
    for p in (2, 3, 5):
        r = verify_admissible_order(p, 200, 4)
        assert r.passed and r.checks > 0
        r = verify_admissible_witness(p, 200, 4)
        assert r.passed and r.checks > 0


def test_orbit_min_small():
    for p, lam in ((2, 2), (3, 1)):
        r = verify_orbit_min(PrimePower(p, lam), c_bound=100, oracle_bound=800)
        assert r.passed, r.counterexamples[:2]


def test_cyclic_digits_small():
    r = verify_cyclic_digits(PrimePower(2, 3), bound=600)
    assert r.passed
    # lambda = 1 leaves the rotation families vacuous but still passes
    r = verify_cyclic_digits(PrimePower(5, 1), bound=600)
    assert r.passed
    assert "vacuous" in r.scope


def test_projection_formula_small():
    r = verify_projection_formula(PrimePower(2, 2), field_make(2, 2),
                                  prec=64, k_bound=7, ell_bound=2)
    assert r.passed, r.counterexamples[:2]


def test_coleman_small():
    r = verify_coleman(PrimePower(2, 2), ext_degree=2, prec=48, trials=6,
                       seed=2)
    assert r.passed, r.counterexamples[:2]
    # trivial extension degree also works: the field is F_q itself
    r = verify_coleman(PrimePower(2, 2), ext_degree=1, prec=48, trials=6,
                       seed=2)
    assert r.passed


def test_reports_deterministic():
    a = verify_equivariance(PrimePower(2, 2), field_make(2, 2), 32, 6, 9)
    b = verify_equivariance(PrimePower(2, 2), field_make(2, 2), 32, 6, 9)
    da, db = a.to_json_dict(False), b.to_json_dict(False)
    assert da == db


def test_counterexamples_are_collected(monkeypatch):
    # falsify the comparison on purpose: every quadruple must now fail
    monkeypatch.setattr(theorems, "digital_cmp", lambda *a: theorems.GREATER)
    r = verify_admissible_order(2, 40, 3)
    assert not r.passed
    assert r.counterexamples
    assert r.counterexamples[0]["check"] == "digital_order"
    assert "quad" in r.counterexamples[0]
    # the collector caps runaway failures but records the total
    if len(r.counterexamples) > theorems._MAX_COUNTEREXAMPLES:
        assert r.counterexamples[-1].get("truncated")


def test_equivariance_route_matches_formula_route():
    # with a single twist generator and an Artin-Hasse generator as the
    # unit, the equivariance identity and the closed projection formula
    # describe the same series, term by term
    from qcrit.series import (AdditiveSeries, artin_hasse,
                              critical_projection,
                              critical_projection_formula, log_deriv,
                              TruncSeries)
    pq = PrimePower(2, 2)
    spec = field_make(2, 2)
    prec = 128
    ah = artin_hasse(2, prec, spec)
    for k in (1, 3, 7):
        for ell in (1, 2):
            for alpha in spec.nonzero_elements():
                for beta in spec.nonzero_elements():
                    gamma = AdditiveSeries.generator(spec, pq, prec, beta, ell)
                    unit = ah.compose(TruncSeries.monomial(spec, prec, k, alpha))
                    lhs = critical_projection(
                        log_deriv(unit.compose(gamma.as_trunc())), pq)
                    via_inverse = gamma.inverse().apply_to(
                        critical_projection(log_deriv(unit), pq))
                    via_formula = critical_projection_formula(
                        k, alpha, ell, beta, pq, prec + 1).scale(spec.scalar(k))
                    assert lhs.agrees(via_inverse)
                    assert lhs.agrees(via_formula)


def test_explore_generators_shape():
    pq = PrimePower(2, 1)
    rows = explore_generators(pq, field_make(2, 1), k_bound=63, prec=128)
    assert len(rows) == 32
    for row in rows:
        assert row["lead_exponent"] == row["k"]
        # flags agree with the membership test
        from qcrit.digits import is_critical
        assert row["critical"] == is_critical(row["k"], pq)


def test_explore_generators_alpha_pool():
    rows = explore_generators(PrimePower(2, 2), field_make(2, 2),
                              k_bound=7, prec=64)
    ks = {row["k"] for row in rows}
    assert ks == {1, 3, 5, 7}
    assert len(rows) == 4 * 3  # three nonzero coefficients in F_4
