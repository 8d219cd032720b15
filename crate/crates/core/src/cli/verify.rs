//! Verification suites driven by `yzq verify`.

use serde::Serialize;

use crate::e0;
use crate::pipeline::{self, multiple_cover_constant};
use crate::qseries::{self, eisenstein_g2_with_constant, g2_constant, QmodCoefficients};
use crate::rational::{int, to_canonical, Rational};
use crate::report::{IdentityReport, ReportSummary};
use crate::series::PowerSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Qmod,
    #[value(name = "n0-ode")]
    N0Ode,
    Ode3,
    Prop31,
    #[value(name = "lemma5-6")]
    Lemma56,
    Lemma7,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Qmod, Suite::N0Ode, Suite::Ode3, Suite::Prop31, Suite::Lemma56, Suite::Lemma7, Suite::All];

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qmod => "qmod",
            Suite::N0Ode => "n0-ode",
            Suite::Ode3 => "ode3",
            Suite::Prop31 => "prop31",
            Suite::Lemma56 => "lemma5-6",
            Suite::Lemma7 => "lemma7",
            Suite::All => "all",
        }
    }
}

/// Inputs a negative control may perturb. The defaults reproduce the true
/// identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    /// constant term of `G2`
    pub sigma0: Rational,
    /// initial value of the ODE solution
    pub q0: Rational,
    pub qmod_weights: QmodCoefficients,
}

impl Default for Perturbation {
    fn default() -> Self {
        Perturbation { sigma0: g2_constant(), q0: multiple_cover_constant(), qmod_weights: QmodCoefficients::IDENTITY }
    }
}

fn g2(order: usize, p: &Perturbation) -> PowerSeries {
    eisenstein_g2_with_constant(order, p.sigma0.clone())
}

fn qmod_reports(order: usize, p: &Perturbation) -> Vec<IdentityReport> {
    let g = g2(order, p);
    let mut out = vec![qseries::qmod_identity_residual_from(&g, &p.qmod_weights)];
    const FIT: &str = "Gamma0(2) fit of the level-2 E-series: a = b = 0";
    let e = -&qseries::qmod_combination(&g, &p.qmod_weights);
    out.push(match qseries::gamma0_2_fit(&e) {
        Ok(fit) if num_traits::Zero::is_zero(&fit.a) && num_traits::Zero::is_zero(&fit.b) => {
            IdentityReport::from_residual(FIT, fit.residual)
        }
        Ok(fit) => IdentityReport::aborted(
            FIT,
            &format!("a = {}, b = {}", to_canonical(&fit.a), to_canonical(&fit.b)),
        ),
        Err(err) => IdentityReport::aborted(FIT, &err.to_string()),
    });
    out
}

fn n0_ode_reports(order: usize) -> Vec<IdentityReport> {
    vec![pipeline::n0_ode_residual(order)]
}

fn ode3_reports(order: usize, p: &Perturbation) -> Vec<IdentityReport> {
    let g = g2(order + 1, p);
    let solved_name = "odd-part ODE for M0 - P0 (recursive solution)";
    let solved = match pipeline::ode3_solve_with(&g, &p.q0) {
        Ok(q) => ode3_residual_with(&g.truncate(q.order()), &q, solved_name),
        Err(e) => IdentityReport::aborted(solved_name, &e.to_string()),
    };
    let product = ode3_residual_with(&g.truncate(order), &pipeline::q_series(order), "odd-part ODE for N0(t^2)/8");
    vec![product, solved]
}

/// `20 G_o theta(Q) - (384 G_e G_o + 40 G_o - 24 theta(G_o)) Q` for an explicit `G2`.
fn ode3_residual_with(g2: &PowerSeries, q: &PowerSeries, name: &str) -> IdentityReport {
    let (ge, go) = g2.even_odd_split();
    let numer = &(&(&ge * &go).scale(&int(384)) + &go.scale(&int(40))) - &go.theta().scale(&int(24));
    let residual = &(&go.scale(&int(20)) * &q.theta()) - &(&numer * q);
    IdentityReport::from_residual(name, residual)
}

fn prop31_reports(order: usize, p: &Perturbation) -> Vec<IdentityReport> {
    vec![pipeline::proposition31_check_with(&p.q0, &g2(order + 1, p), order)]
}

fn lemma56_reports(order: usize) -> Vec<IdentityReport> {
    e0::trr_chain_checks(order)
}

fn lemma7_reports(order: usize) -> Vec<IdentityReport> {
    e0::checks::all_relative_checks(order)
}

pub fn run_suite(suite: Suite, order: usize, p: &Perturbation) -> Vec<IdentityReport> {
    match suite {
        Suite::Qmod => qmod_reports(order, p),
        Suite::N0Ode => n0_ode_reports(order),
        Suite::Ode3 => ode3_reports(order, p),
        Suite::Prop31 => prop31_reports(order, p),
        Suite::Lemma56 => lemma56_reports(order),
        Suite::Lemma7 => lemma7_reports(order),
        Suite::All => [Suite::Qmod, Suite::N0Ode, Suite::Ode3, Suite::Prop31, Suite::Lemma56, Suite::Lemma7]
            .into_iter()
            .flat_map(|s| run_suite(s, order, p))
            .collect(),
    }
}

/// Machine-readable verify output; see `schemas/verify-report.schema.json`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub suite: String,
    pub order: usize,
    pub passed: bool,
    pub identities: Vec<ReportSummary>,
}

impl VerifyReport {
    pub fn new(suite: Suite, order: usize, reports: &[IdentityReport]) -> Self {
        VerifyReport {
            schema_version: super::format::SCHEMA_VERSION,
            suite: suite.name().to_string(),
            order,
            passed: reports.iter().all(|r| r.passed),
            identities: reports.iter().map(IdentityReport::summary).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain struct serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.identities {
            let status = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {}  (order {})", r.identity, r.order_checked));
            if let Some(k) = r.first_failure_degree {
                out.push_str(&format!("  first failure at degree {k}"));
                if let Some(v) = &r.residual_at_failure {
                    out.push_str(&format!(", residual {v}"));
                }
            }
            out.push('\n');
        }
        let failed = self.identities.iter().filter(|r| !r.passed).count();
        out.push_str(&format!(
            "{}: {} identities, {} failed\n",
            self.suite,
            self.identities.len(),
            failed
        ));
        out
    }
}
