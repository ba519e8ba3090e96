use kerr_core::oracle::{
    self, corr_smooth_oracle, integrate_2d_i, ledger, PhotonIntegral, PhotonIntegralSetup, QuadratureSpec,
};
use kerr_core::photon;
use kerr_core::quadspec::{self, EnvelopeTreatment};
use kerr_core::{Error, KerrParams, PhaseProfile, Pulse};

#[test]
fn ledger_runs_clean() {
    let rows = ledger::run(1.0, None).unwrap();
    assert!(rows.len() >= 20);
    for r in &rows {
        println!(
            "{:<28} tol {:>9.2e} achieved {:>10.3e} {}",
            r.id,
            r.tolerance,
            r.achieved,
            if r.pass { "pass" } else { "FAIL" }
        );
    }
    let failed: Vec<_> = rows.iter().filter(|r| !r.pass).map(|r| r.id.as_str()).collect();
    assert!(failed.is_empty(), "failing cases: {failed:?}");
}

#[test]
fn ledger_filter_and_unknown_case() {
    let rows = ledger::run(1.0, Some("fock-direct")).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].id, "fock-direct");
    assert!(matches!(
        ledger::run(1.0, Some("no-such-case")),
        Err(Error::UnknownCase { .. })
    ));
    let ids = ledger::case_ids();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len(), "case ids must be unique");
}

#[test]
fn tight_tolerance_scale_fails_cases() {
    let rows = ledger::run(1e-12, Some("quadspec-round-trip")).unwrap();
    assert!(!rows[0].pass);
}

#[test]
fn exact_paraxial_phase_changes_i1() {
    // the paraxial phase is only a local approximation
    let spec = QuadratureSpec::default();
    let par = PhotonIntegralSetup {
        psi0: 1.0,
        nu: 10.0,
        paraxial: true,
    };
    let exact = PhotonIntegralSetup { paraxial: false, ..par };
    let a = integrate_2d_i(&par, PhotonIntegral::I1, 0.0, 0.0, &spec).unwrap();
    let b = integrate_2d_i(&exact, PhotonIntegral::I1, 0.0, 0.0, &spec).unwrap();
    assert!((a - b).norm() / a.norm() > 1e-3);
}

#[test]
fn corr_oracle_off_grid() {
    let spec = QuadratureSpec::default();
    for &(psi0, w1, w2) in &[(0.5, 0.3, -0.2), (1.0, 0.5, 0.5), (1.0, -0.4, 0.1)] {
        let setup = PhotonIntegralSetup {
            psi0,
            nu: 10.0,
            paraxial: true,
        };
        let p = KerrParams::from_psi0(psi0, 1e-3, 10.0).unwrap();
        let o = corr_smooth_oracle(&setup, w1, w2, &spec).unwrap();
        let c = photon::corr_closed_form(&p, w1, w2);
        assert!(
            ((o - c) / c).abs() < 1e-3,
            "psi0={psi0} ({w1},{w2}): oracle {o} closed {c}"
        );
    }
}

#[test]
fn full_envelope_round_trip_is_close() {
    // the full-envelope correlator differs from the frozen one by O(ν⁻²)
    let p = Pulse::exponential(KerrParams::from_psi0(1.0, 1e-3, 10.0).unwrap()).unwrap();
    let phase = PhaseProfile::Optimal { omega0_norm: 0.0 };
    let tau_r = p.params.tau_r;
    let s = oracle::TauSamples::sample(
        |tau| Ok(quadspec::corr_rx_ry(&p, &phase, 0.0, tau, EnvelopeTreatment::Full)?.rx_smooth),
        tau_r / 50.0,
        30.0 * tau_r,
        0.25,
    )
    .unwrap();
    for &w in &[0.0, 1.0, 2.0] {
        let ft = oracle::numeric_ft(&s, w / tau_r).unwrap().value;
        let closed = quadspec::spectrum_general(&p, 0.0, w, 0.0).unwrap().0;
        assert!((ft - closed).abs() < 0.2 / (p.params.nu * p.params.nu));
    }
}
