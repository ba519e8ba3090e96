use kerr_core::oracle::ledger;
use kerr_core::photon;
use kerr_core::quadspec;
use kerr_core::{KerrParams, PhaseProfile, Pulse};

use crate::args::{BandwidthArgs, MediumArgs, PhaseArg, PhotonArgs, PhotonTable, QuadspecArgs, Range, ValidateArgs};
use crate::table::{Cell, Table};
use crate::CliError;

// how the nonlinear phase enters the photon integrals
const PHASE_READING: &str = "psi(t) = psi0 * rho^2(t), paraxial";

fn pulse(psi0: f64, medium: &MediumArgs) -> Result<Pulse, CliError> {
    Ok(Pulse::exponential(KerrParams::from_psi0(
        psi0,
        medium.gamma,
        medium.nu,
    )?)?)
}

fn medium_params(t: &mut Table, medium: &MediumArgs) {
    t.param("nu", medium.nu).param("gamma", medium.gamma);
}

pub fn quadspec(args: &QuadspecArgs) -> Result<Table, CliError> {
    let psi = args.psi.range(Range::single(1.0));
    let phase = match args.phase {
        PhaseArg::Optimal => PhaseProfile::Optimal {
            omega0_norm: args.omega0,
        },
        PhaseArg::Fixed(phi) => PhaseProfile::Constant(phi),
    };
    let omegas = args.omega_range.points();
    let mut formula = None;
    let mut rows = Vec::new();
    for psi0 in psi.points() {
        let series = quadspec::spectrum_series(&pulse(psi0, &args.medium)?, &phase, args.t, &omegas)?;
        formula.get_or_insert(series.formula_tag);
        for ((w, sx), sy) in series.omega_norm_grid.iter().zip(&series.s_x).zip(&series.s_y) {
            rows.push(vec![Cell::Num(psi0), Cell::Num(*w), Cell::Num(*sx), Cell::Num(*sy)]);
        }
    }
    let tag = formula.map_or("general", |f| f.as_str());
    let mut t = Table::new("quadspec", tag, vec!["psi0", "omega_tau_r", "s_x", "s_y"]);
    t.param("psi0", psi.describe())
        .param("omega_range", args.omega_range.describe())
        .param("t", args.t);
    match args.phase {
        PhaseArg::Optimal => t.param("phase", "optimal").param("omega0", args.omega0),
        PhaseArg::Fixed(phi) => t.param("phase", format!("fixed:{phi}")),
    };
    medium_params(&mut t, &args.medium);
    t.rows = rows;
    Ok(t)
}

pub fn bandwidth(args: &BandwidthArgs) -> Result<Table, CliError> {
    let psi = args.psi.range("0:5:51".parse().expect("valid default"));
    let mut t = Table::new("bandwidth", "half-depth quadratic", vec!["psi0", "delta_omega_tau_r"]);
    t.param("psi0", psi.describe()).param("t", args.t);
    medium_params(&mut t, &args.medium);
    for psi0 in psi.points() {
        let w = quadspec::squeezing_bandwidth_at(&pulse(psi0, &args.medium)?, args.t)?;
        t.push(vec![Cell::Num(psi0), Cell::Num(w)]);
    }
    Ok(t)
}

pub fn photon(args: &PhotonArgs) -> Result<Table, CliError> {
    let params = |psi0: f64| KerrParams::from_psi0(psi0, args.medium.gamma, args.medium.nu);
    let mut t = match args.table {
        PhotonTable::Density => {
            let psi = args.psi.range(Range::single(1.0));
            let mut t = Table::new(
                "photon",
                "density",
                vec!["psi0", "omega_tau_p", "density_classical", "density_relaxing"],
            );
            t.param("psi0", psi.describe())
                .param("omega_range", args.omega_range.describe());
            for psi0 in psi.points() {
                let p = params(psi0)?;
                for w in args.omega_range.points() {
                    t.push(vec![
                        Cell::Num(psi0),
                        Cell::Num(w),
                        Cell::Num(photon::photon_density_classical(&p, w)),
                        Cell::Num(photon::photon_density_relaxing(&p, w)),
                    ]);
                }
            }
            t
        }
        PhotonTable::Band => {
            let psi = args.psi.range("0:5:101".parse().expect("valid default"));
            let at_origin = args.band_center == 0.0;
            let mut header = vec!["psi0", "omega_tau_p", "band_width_tau_p"];
            if at_origin {
                header.push("r_tilde_simplified");
            }
            header.extend(["r_smooth", "r_delta", "r_literal"]);
            let formula = if at_origin {
                "band-integral, simplified origin form"
            } else {
                "band-integral"
            };
            let mut t = Table::new("photon", formula, header);
            t.param("psi0", psi.describe())
                .param("band_center", args.band_center)
                .param("band_width", args.band_width);
            for psi0 in psi.points() {
                let b = photon::band_integral(&params(psi0)?, args.band_center, args.band_width)?;
                let mut row = vec![Cell::Num(psi0), Cell::Num(args.band_center), Cell::Num(args.band_width)];
                if let Some(s) = b.simplified {
                    row.push(Cell::Num(s));
                }
                row.extend([Cell::Num(b.smooth_term), Cell::Num(b.delta_term), Cell::Num(b.literal)]);
                t.push(row);
            }
            t
        }
    };
    t.param("phase_reading", PHASE_READING)
        .param("units", "multiples of n0");
    medium_params(&mut t, &args.medium);
    Ok(t)
}

/// The ledger table and the number of failing cases.
pub fn validate(args: &ValidateArgs) -> Result<(Table, usize), CliError> {
    if !(args.tol_scale > 0.0 && args.tol_scale.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tol-scale must be positive, got {}",
            args.tol_scale
        )));
    }
    let rows = ledger::run(args.tol_scale, args.case.as_deref())?;
    let mut t = Table::new(
        "validate",
        "tolerance ledger",
        vec!["id", "formula_ref", "oracle_ref", "tolerance", "achieved", "pass"],
    );
    t.param("tol_scale", args.tol_scale);
    if let Some(c) = &args.case {
        t.param("case", c.as_str());
    }
    let mut failed = 0;
    for r in rows {
        failed += usize::from(!r.pass);
        t.push(vec![
            Cell::Text(r.id),
            Cell::Text(r.formula_ref),
            Cell::Text(r.oracle_ref),
            Cell::Num(r.tolerance),
            Cell::Num(r.achieved),
            Cell::Bool(r.pass),
        ]);
    }
    Ok((t, failed))
}
