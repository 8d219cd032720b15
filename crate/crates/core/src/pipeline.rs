//! Generating functions of genus-0 family invariants on K3 and the index-two
//! verification pipeline.
//!
//! * `N0(t) = prod_{d>=1} (1 - t^d)^(-24)` counts rational curves in primitive
//!   classes `S + dF`; the coefficient of `t^d` is the Yau-Zaslow number for
//!   square `2d - 2`.
//! * `P0(t) = sum_d N0[2d-3] t^d` reindexes the primitive classes `S + (2d-3)F`,
//!   which share their square with the index-two classes `2S + dF`.
//! * `M0(t)` collects the index-two invariants; `Q = M0 - P0`.
//!
//! `Q` satisfies the first-order ODE obtained from the odd-degree part of the
//! sum-formula relations,
//!
//! ```text
//! 20 G_o theta(Q) = (384 G_e G_o + 40 G_o - 24 theta(G_o)) Q,   Q(0) = 1/8,
//! ```
//!
//! and [`ode3_solve`] integrates it by recursion. Comparing the result with
//! `N0(t^2) / 8` from the product formula is the heart of the check: the two
//! routes share no code beyond series arithmetic.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::eisenstein_g2;
use crate::rational::{frac, int, Rational};
use crate::report::IdentityReport;
use crate::series::PowerSeries;

/// `Q(0) = M0(0) - P0(0)`, the multiple-cover contribution `(1/2)^3`.
pub fn multiple_cover_constant() -> Rational {
    frac(1, 8)
}

pub fn n0_series(n: usize) -> PowerSeries {
    PowerSeries::product_one_minus(-24, n)
}

/// `N0(t^2)` exact through degree `n`.
pub fn n0_at_square(n: usize) -> PowerSeries {
    n0_series(n.div_ceil(2)).compose_monomial(2).truncate(n)
}

/// Residual of `theta(N0(t^2)) - 48 G2(t^2) N0(t^2) - 2 N0(t^2)`.
pub fn n0_ode_residual(n: usize) -> IdentityReport {
    let n0 = n0_at_square(n);
    let g2_sq = eisenstein_g2(n.div_ceil(2)).compose_monomial(2).truncate(n);
    let rhs = &(&g2_sq * &n0).scale(&int(48)) + &n0.scale(&int(2));
    IdentityReport::from_residual("primitive-class ODE for N0(t^2)", &n0.theta() - &rhs)
}

/// `P0[d] = N0[2d - 3]`, zero where `2d - 3 < 0`.
pub fn p0_from_n0(n: usize) -> PowerSeries {
    let n0 = n0_series((2 * n).saturating_sub(3));
    PowerSeries::from_fn(n, |d| {
        if d >= 2 {
            n0.coeff(2 * d - 3).clone()
        } else {
            Rational::zero()
        }
    })
}

/// `M0 = P0 + N0(t^2) / 8`.
pub fn m0_series(n: usize) -> PowerSeries {
    &p0_from_n0(n) + &n0_at_square(n).scale(&multiple_cover_constant())
}

/// `Q = M0 - P0` from the product side, i.e. `N0(t^2) / 8`.
pub fn q_series(n: usize) -> PowerSeries {
    n0_at_square(n).scale(&multiple_cover_constant())
}

/// Genus-one TRR: `(1/3) theta(X0) - (2/3) X0`.
fn genus_one_tau(x0: &PowerSeries) -> PowerSeries {
    &x0.theta().scale(&frac(1, 3)) - &x0.scale(&frac(2, 3))
}

/// `M1(tau(F)) = (1/3) theta(M0) - (2/3) M0`.
pub fn m1_tau_f(n: usize) -> PowerSeries {
    genus_one_tau(&m0_series(n))
}

/// `P1(tau(2F)) = (1/3) theta(P0) - (2/3) P0`.
pub fn p1_tau_2f(n: usize) -> PowerSeries {
    genus_one_tau(&p0_from_n0(n))
}

/// Relative invariants `X1(tau) - 4 G2 X0`.
fn relative_genus_one(x1: &PowerSeries, x0: &PowerSeries) -> PowerSeries {
    let g2 = eisenstein_g2(x0.order());
    x1 - &(&g2 * x0).scale(&int(4))
}

/// `M^V_{1,(2)} = M1(tau(F)) - 4 G2 M0`.
pub fn mv12_series(n: usize) -> PowerSeries {
    relative_genus_one(&m1_tau_f(n), &m0_series(n))
}

/// `P^U_{1,(2)} = P1(tau(2F)) - 4 G2 P0`.
pub fn pu12_series(n: usize) -> PowerSeries {
    relative_genus_one(&p1_tau_2f(n), &p0_from_n0(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// index-two classes `2S + dF`
    M,
    /// primitive classes `S + (2d-3)F`
    P,
}

/// Right-hand side for the genus-two combination `X2(tau^2) - 2 X1(pt)`:
///
/// `(20/3) G2 theta(X0) - (64 G2^2 + (40/3) G2 - 8 theta(G2)) X0`.
///
/// This is a prediction only; nothing independent pins down the left side.
pub fn ode1_lhs(n: usize, side: Side) -> PowerSeries {
    let x0 = match side {
        Side::M => m0_series(n),
        Side::P => p0_from_n0(n),
    };
    ode1_rhs_of(&x0)
}

fn ode1_rhs_of(x0: &PowerSeries) -> PowerSeries {
    let g2 = eisenstein_g2(x0.order());
    let first = (&g2 * &x0.theta()).scale(&frac(20, 3));
    let bracket = &(&(&g2 * &g2).scale(&int(64)) + &g2.scale(&frac(40, 3))) - &g2.theta().scale(&int(8));
    &first - &(&bracket * x0)
}

/// `(384 G_e G_o + 40 G_o - 24 theta(G_o), 20 G_o)` built from `g2`.
fn ode3_parts(g2: &PowerSeries) -> (PowerSeries, PowerSeries) {
    let (ge, go) = g2.even_odd_split();
    let numer = &(&(&ge * &go).scale(&int(384)) + &go.scale(&int(40))) - &go.theta().scale(&int(24));
    (numer, go.scale(&int(20)))
}

/// Residual of `20 G_o theta(Q) - (384 G_e G_o + 40 G_o - 24 theta(G_o)) Q`.
pub fn ode3_residual(q: &PowerSeries) -> IdentityReport {
    let (numer, lead) = ode3_parts(&eisenstein_g2(q.order()));
    let residual = &(&lead * &q.theta()) - &(&numer * q);
    IdentityReport::from_residual("odd-part ODE for M0 - P0", residual)
}

/// `c = (384 G_e G_o + 40 G_o - 24 theta(G_o)) / (20 G_o)`, exact through the
/// order of `g2` minus one (the division cancels one power of `t`).
///
/// Fails with [`Error::MalformedOde`] unless `c[0] = c[1] = 0`: a nonzero
/// `c[0]` leaves no nonzero solution, and a nonzero `c[1]` would feed odd
/// degrees from the constant term.
pub fn ode3_coefficient(g2: &PowerSeries) -> Result<PowerSeries> {
    let (numer, lead) = ode3_parts(g2);
    let c = numer.div(&lead)?;
    for degree in 0..=c.order().min(1) {
        if !c.coeff(degree).is_zero() {
            return Err(Error::MalformedOde {
                degree,
                value: crate::rational::to_canonical(c.coeff(degree)),
            });
        }
    }
    Ok(c)
}

/// Solves `theta(Q) = c Q` with `Q(0) = q0` through degree `n`:
/// `q_m = (1/m) sum_{k=2..m} c[k] q_{m-k}`.
pub fn ode3_solve(q0: &Rational, n: usize) -> Result<PowerSeries> {
    ode3_solve_with(&eisenstein_g2(n + 1), q0)
}

/// [`ode3_solve`] against an explicit `G2`, exact through `order(g2) - 1`.
pub fn ode3_solve_with(g2: &PowerSeries, q0: &Rational) -> Result<PowerSeries> {
    if g2.order() < 1 {
        return Err(Error::InsufficientOrder { need: 1, got: g2.order() });
    }
    let c = ode3_coefficient(g2)?;
    let n = c.order();
    let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
    q.push(q0.clone());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for k in 2..=m {
            let ck = c.coeff(k);
            if !ck.is_zero() && !q[m - k].is_zero() {
                acc += ck * &q[m - k];
            }
        }
        q.push(acc / int(m as i64));
    }
    Ok(PowerSeries::new(q))
}

/// Recursive ODE solution with `Q(0) = 1/8` against `N0(t^2) / 8`.
pub fn proposition31_check(n: usize) -> IdentityReport {
    proposition31_check_with(&multiple_cover_constant(), &eisenstein_g2(n + 1), n)
}

/// The same comparison with an arbitrary initial value and `G2`, for
/// negative controls.
pub fn proposition31_check_with(q0: &Rational, g2: &PowerSeries, n: usize) -> IdentityReport {
    const NAME: &str = "M0 - P0 = N0(t^2)/8 (ODE route vs product route)";
    match ode3_solve_with(g2, q0) {
        Ok(sol) => {
            let sol = sol.truncate(n.min(sol.order()));
            IdentityReport::from_residual(NAME, &sol - &q_series(sol.order()))
        }
        Err(e) => IdentityReport::aborted(NAME, &e.to_string()),
    }
}

/// One row of the index-two table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Index2Row {
    pub k: usize,
    /// Yau-Zaslow index `d` with `A^2 = 2d - 2`; here `4k - 3`.
    pub yz_index: usize,
    /// `N(4k-3, 2) = M0[2k] - N0[k] / 8`
    pub count: Rational,
    /// `N0[4k-3]`
    pub predicted: Rational,
    pub matches: bool,
}

/// Rational-curve counts in index-two classes `2(S + kF)` of square
/// `8k - 8`, with the multiple-cover term `N0[k] / 8` removed.
///
/// `M0` is assembled as `P0 + Q` with `Q` from the recursive ODE solution,
/// so each row compares the ODE route against the product formula.
pub fn yz_index2_table(k_max: usize) -> Result<Vec<Index2Row>> {
    if k_max == 0 {
        return Ok(Vec::new());
    }
    let order = 2 * k_max;
    let q = ode3_solve(&multiple_cover_constant(), order)?;
    let m0 = &p0_from_n0(order) + &q;
    let n0 = n0_series(4 * k_max - 3);
    let eighth = multiple_cover_constant();
    Ok((1..=k_max)
        .map(|k| {
            let count = m0.coeff(2 * k) - n0.coeff(k) * &eighth;
            let predicted = n0.coeff(4 * k - 3).clone();
            Index2Row { k, yz_index: 4 * k - 3, matches: count == predicted, count, predicted }
        })
        .collect())
}

/// `(d, N0[d])` for `0 <= d <= d_max`: primitive-class counts.
pub fn yz_index1_table(d_max: usize) -> Vec<(usize, Rational)> {
    n0_series(d_max).into_coefficients().into_iter().enumerate().collect()
}

/// Named generating functions of the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesId {
    N0,
    P0,
    M0,
    Q,
    G2,
    Ge,
    Go,
    M1TauF,
    Mv12,
    P1Tau2F,
    Pu12,
    Ode1LhsM,
    Ode1LhsP,
}

impl SeriesId {
    pub const ALL: [SeriesId; 13] = [
        SeriesId::N0,
        SeriesId::P0,
        SeriesId::M0,
        SeriesId::Q,
        SeriesId::G2,
        SeriesId::Ge,
        SeriesId::Go,
        SeriesId::M1TauF,
        SeriesId::Mv12,
        SeriesId::P1Tau2F,
        SeriesId::Pu12,
        SeriesId::Ode1LhsM,
        SeriesId::Ode1LhsP,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesId::N0 => "N0",
            SeriesId::P0 => "P0",
            SeriesId::M0 => "M0",
            SeriesId::Q => "Q",
            SeriesId::G2 => "G2",
            SeriesId::Ge => "Ge",
            SeriesId::Go => "Go",
            SeriesId::M1TauF => "M1_tauF",
            SeriesId::Mv12 => "MV_1_2",
            SeriesId::P1Tau2F => "P1_tau2F",
            SeriesId::Pu12 => "PU_1_2",
            SeriesId::Ode1LhsM => "ODE1_LHS_M",
            SeriesId::Ode1LhsP => "ODE1_LHS_P",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SeriesId::N0 => "genus-0 family invariants of primitive classes S+dF: prod (1-t^d)^-24",
            SeriesId::P0 => "genus-0 family invariants of primitive classes S+(2d-3)F",
            SeriesId::M0 => "genus-0 family invariants of index-two classes 2S+dF",
            SeriesId::Q => "M0 - P0 = N0(t^2)/8",
            SeriesId::G2 => "weight-2 Eisenstein series, constant term -1/24",
            SeriesId::Ge => "even-degree part of G2",
            SeriesId::Go => "odd-degree part of G2",
            SeriesId::M1TauF => "genus-1 invariants of 2S+dF with one tau(F): (1/3) t M0' - (2/3) M0",
            SeriesId::Mv12 => "genus-1 relative invariants of (E(2),V), contact order 2: M1(tau F) - 4 G2 M0",
            SeriesId::P1Tau2F => "genus-1 invariants of S+(2d-3)F with one tau(2F): (1/3) t P0' - (2/3) P0",
            SeriesId::Pu12 => "genus-1 relative invariants of (E(2),U), contact order 2: P1(tau 2F) - 4 G2 P0",
            SeriesId::Ode1LhsM => "prediction for M2(tau(F)^2) - 2 M1(pt)",
            SeriesId::Ode1LhsP => "prediction for P2(tau(2F)^2) - 2 P1(pt)",
        }
    }

    pub fn compute(self, n: usize) -> PowerSeries {
        match self {
            SeriesId::N0 => n0_series(n),
            SeriesId::P0 => p0_from_n0(n),
            SeriesId::M0 => m0_series(n),
            SeriesId::Q => q_series(n),
            SeriesId::G2 => eisenstein_g2(n),
            SeriesId::Ge => eisenstein_g2(n).even_odd_split().0,
            SeriesId::Go => eisenstein_g2(n).even_odd_split().1,
            SeriesId::M1TauF => m1_tau_f(n),
            SeriesId::Mv12 => mv12_series(n),
            SeriesId::P1Tau2F => p1_tau_2f(n),
            SeriesId::Pu12 => pu12_series(n),
            SeriesId::Ode1LhsM => ode1_lhs(n, Side::M),
            SeriesId::Ode1LhsP => ode1_lhs(n, Side::P),
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eisenstein_g2_with_constant;

    #[test]
    fn n0_leading_coefficients() {
        let n0 = n0_series(3);
        assert_eq!(n0.coefficients(), &[int(1), int(24), int(324), int(3200)]);
    }

    #[test]
    fn n0_ode_holds() {
        for n in [2, 8, 32] {
            assert!(n0_ode_residual(n).passed, "order {n}");
        }
        assert_eq!(n0_ode_residual(7).order_checked, 7);
    }

    #[test]
    fn p0_reindexing() {
        let p0 = p0_from_n0(3);
        assert_eq!(p0.coefficients(), &[int(0), int(0), int(24), int(3200)]);
    }

    #[test]
    fn m0_values() {
        let m0 = m0_series(4);
        assert_eq!(m0.coeff(0), &frac(1, 8));
        assert!(m0.coeff(1).is_zero());
        assert_eq!(m0.coeff(2), &int(27));
        assert_eq!(&m0 - &p0_from_n0(4), q_series(4));
    }

    #[test]
    fn genus_one_series() {
        let m1 = m1_tau_f(4);
        assert_eq!(m1.coeff(0), &frac(-1, 12));
        assert!(m1.coeff(2).is_zero());
        assert!(p1_tau_2f(4).coeff(2).is_zero());

        let mv = mv12_series(4);
        assert_eq!(mv.coeff(0), &frac(-1, 16));
        // (G2 M0)[1] = G2[1] M0[0] = 1/8, so the degree-1 term survives
        assert_eq!(mv.coeff(1), &frac(-1, 2));
        assert!(pu12_series(4).coeff(0).is_zero());
    }

    #[test]
    fn ode1_constant_term() {
        assert_eq!(ode1_lhs(3, Side::M).coeff(0), &frac(1, 18));
        assert!(ode1_rhs_of(&PowerSeries::zero(0)).is_zero());
    }

    #[test]
    fn ode1_difference_has_no_odd_part() {
        let diff = &ode1_lhs(24, Side::M) - &ode1_lhs(24, Side::P);
        assert!(diff.even_odd_split().1.is_zero());
    }

    #[test]
    fn ode3_residual_examples() {
        assert!(ode3_residual(&q_series(32)).passed);
        assert!(ode3_residual(&PowerSeries::zero(10)).passed);
        let r = ode3_residual(&PowerSeries::one(6));
        assert!(r.residual.coeff(1).is_zero());
        assert_eq!(r.first_failure_degree, Some(3));
        assert_eq!(r.residual.coeff(3), &int(-960));
    }

    #[test]
    fn ode3_coefficient_is_48_g2_at_square_plus_2() {
        let c = ode3_coefficient(&eisenstein_g2(13)).unwrap();
        let want = &eisenstein_g2(6).compose_monomial(2).scale(&int(48)) + &PowerSeries::constant(int(2), 12);
        assert_eq!(c, want);
    }

    #[test]
    fn ode3_solution_examples() {
        let q = ode3_solve(&frac(1, 8), 12).unwrap();
        assert_eq!(q.coeff(2), &int(3));
        assert_eq!(q.coeff(4), &frac(81, 2));
        assert_eq!(q.coeff(8), &frac(12825, 4));
        assert!(q.even_odd_split().1.is_zero());
        assert!(ode3_solve(&int(0), 9).unwrap().is_zero());
        assert_eq!(ode3_solve(&int(1), 4).unwrap().coefficients(), &[int(1), int(0), int(24), int(0), int(324)]);
    }

    #[test]
    fn ode3_rejects_wrong_sigma0() {
        let g2 = eisenstein_g2_with_constant(8, int(0));
        match ode3_solve_with(&g2, &frac(1, 8)) {
            Err(Error::MalformedOde { degree, .. }) => assert_eq!(degree, 0),
            other => panic!("expected MalformedOde, got {other:?}"),
        }
    }

    #[test]
    fn proposition31_examples() {
        assert!(proposition31_check(24).passed);
        let bad = proposition31_check_with(&frac(1, 4), &eisenstein_g2(9), 8);
        assert_eq!(bad.first_failure_degree, Some(0));
    }

    #[test]
    fn index2_first_row() {
        let rows = yz_index2_table(3).unwrap();
        assert_eq!(rows[0].yz_index, 1);
        assert_eq!(rows[0].count, int(24));
        assert!(rows.iter().all(|r| r.matches));
        assert_eq!((rows[2].yz_index, rows[2].predicted.clone()), (9, int(143184000)));
    }

    #[test]
    fn index1_table() {
        let t = yz_index1_table(3);
        assert_eq!(t, vec![(0, int(1)), (1, int(24)), (2, int(324)), (3, int(3200))]);
    }

    #[test]
    fn series_ids_round_trip() {
        for id in SeriesId::ALL {
            assert_eq!(id.name().parse::<SeriesId>().unwrap(), id);
            assert_eq!(id.compute(3).order(), 3);
        }
        assert!("N1".parse::<SeriesId>().is_err());
    }
}
