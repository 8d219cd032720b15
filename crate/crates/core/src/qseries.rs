//! Divisor sums, Eisenstein q-expansions and the level-two quasi-modular
//! identity.
//!
//! The weight-two series uses the convention `sigma(0) = -1/24`; that
//! constant lives only in [`eisenstein_g2`]. [`DivisorSumTable`] holds plain
//! integer divisor sums for `d >= 1`.
//!
//! The identity checked by [`qmod_identity_residual`] is
//!
//! ```text
//! 4 t^2 G2'(t^2) - 32 G2(t^2)^2 + 40 G2(t) G2(t^2) - 8 G2(t)^2 + t G2'(t) = 0
//! ```
//!
//! with both derivative terms expressed through `theta = t d/dt`:
//! `t^2 G2'(t^2) = theta(G2(t^2)) / 2` and `t G2'(t) = theta(G2)`.
//! Its negative is a weight-four form on Gamma0(2), a two-dimensional space
//! spanned by [`g4_series`] and [`g2_level2_square`]; [`gamma0_2_fit`]
//! recovers the coordinates from the first two coefficients.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};
use crate::report::IdentityReport;
use crate::series::PowerSeries;

/// Sieve-built `sigma(d)` and `sigma_3(d)` for `1 <= d <= n_max`.
#[derive(Clone, Debug)]
pub struct DivisorSumTable {
    n_max: usize,
    sigma: Vec<u64>,
    sigma3: Vec<u128>,
}

impl DivisorSumTable {
    pub fn new(n_max: usize) -> Self {
        let mut sigma = vec![0u64; n_max + 1];
        let mut sigma3 = vec![0u128; n_max + 1];
        for k in 1..=n_max {
            let cube = (k as u128).pow(3);
            for m in (k..=n_max).step_by(k) {
                sigma[m] += k as u64;
                sigma3[m] += cube;
            }
        }
        DivisorSumTable { n_max, sigma, sigma3 }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Panics for `d == 0` or `d > n_max`.
    pub fn sigma(&self, d: usize) -> u64 {
        assert!(d >= 1 && d <= self.n_max, "sigma({d}) outside table 1..={}", self.n_max);
        self.sigma[d]
    }

    pub fn sigma3(&self, d: usize) -> u128 {
        assert!(d >= 1 && d <= self.n_max, "sigma3({d}) outside table 1..={}", self.n_max);
        self.sigma3[d]
    }
}

pub fn sigma_table(n: usize) -> DivisorSumTable {
    DivisorSumTable::new(n)
}

/// The constant term of the weight-two Eisenstein series.
pub fn g2_constant() -> Rational {
    frac(-1, 24)
}

/// `G2 = -1/24 + sum_{d>=1} sigma(d) t^d` through degree `n`.
pub fn eisenstein_g2(n: usize) -> PowerSeries {
    eisenstein_g2_with_constant(n, g2_constant())
}

/// `G2` with its constant term replaced, for negative controls.
pub fn eisenstein_g2_with_constant(n: usize, constant: Rational) -> PowerSeries {
    let table = DivisorSumTable::new(n.max(1));
    PowerSeries::from_fn(n, |d| {
        if d == 0 {
            constant.clone()
        } else {
            int(table.sigma(d) as i64)
        }
    })
}

/// `(G_e, G_o)`: the even- and odd-degree parts of `G2`.
pub fn g2_even_odd(n: usize) -> (PowerSeries, PowerSeries) {
    eisenstein_g2(n).even_odd_split()
}

/// `G4 = 1/24 + 10 sum_{d>=1} sigma_3(d) t^d`.
pub fn g4_series(n: usize) -> PowerSeries {
    let table = DivisorSumTable::new(n.max(1));
    PowerSeries::from_fn(n, |d| {
        if d == 0 {
            frac(1, 24)
        } else {
            Rational::from_integer((10 * table.sigma3(d)).into())
        }
    })
}

/// `(G2(t) - 2 G2(t^2))^2`.
pub fn g2_level2_square(n: usize) -> PowerSeries {
    level2_square_of(&eisenstein_g2(n))
}

fn level2_square_of(g2: &PowerSeries) -> PowerSeries {
    let n = g2.order();
    let doubled = g2.compose_monomial(2).truncate(n).scale(&int(2));
    let diff = g2 - &doubled;
    diff.pow(2).expect("non-negative power")
}

/// Integer weights of the five terms of the quasi-modular identity.
///
/// The identity itself is [`QmodCoefficients::IDENTITY`]; other values exist
/// only to build negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QmodCoefficients {
    /// weight of `t^2 G2'(t^2)`
    pub derivative_at_square: i64,
    /// weight of `G2(t^2)^2`, entering with a minus sign
    pub square_at_square: i64,
    /// weight of `G2(t) G2(t^2)`
    pub cross: i64,
    /// weight of `G2(t)^2`, entering with a minus sign
    pub square: i64,
    /// weight of `t G2'(t)`
    pub derivative: i64,
}

impl QmodCoefficients {
    pub const IDENTITY: QmodCoefficients = QmodCoefficients {
        derivative_at_square: 4,
        square_at_square: 32,
        cross: 40,
        square: 8,
        derivative: 1,
    };
}

impl Default for QmodCoefficients {
    fn default() -> Self {
        QmodCoefficients::IDENTITY
    }
}

/// The series `4 t^2 G2'(t^2) - 32 G2(t^2)^2 + 40 G2 G2(t^2) - 8 G2^2 + t G2'`
/// built from an arbitrary input `g2`, to the order of `g2`.
pub fn qmod_combination(g2: &PowerSeries, w: &QmodCoefficients) -> PowerSeries {
    let n = g2.order();
    let at_square = g2.compose_monomial(2).truncate(n);
    // t^2 G2'(t^2) = theta(G2(t^2)) / 2
    let deriv_at_square = at_square.theta().scale(&frac(w.derivative_at_square, 2));
    let sq_at_square = (&at_square * &at_square).scale(&int(w.square_at_square));
    let cross = (g2 * &at_square).scale(&int(w.cross));
    let sq = (g2 * g2).scale(&int(w.square));
    let deriv = g2.theta().scale(&int(w.derivative));
    let lhs = &(&deriv_at_square - &sq_at_square) + &cross;
    &(&lhs - &sq) + &deriv
}

pub fn qmod_identity_residual(n: usize) -> IdentityReport {
    qmod_identity_residual_from(&eisenstein_g2(n), &QmodCoefficients::IDENTITY)
}

pub fn qmod_identity_residual_from(g2: &PowerSeries, w: &QmodCoefficients) -> IdentityReport {
    IdentityReport::from_residual("quasi-modular level-2 identity", qmod_combination(g2, w))
}

/// The weight-four level-two form whose vanishing is the identity:
/// the negative of [`qmod_combination`] at the true weights.
pub fn e_series(n: usize) -> PowerSeries {
    -&qmod_combination(&eisenstein_g2(n), &QmodCoefficients::IDENTITY)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormFitResult {
    /// coordinate on `G4`
    pub a: Rational,
    /// coordinate on `G2^(4)`
    pub b: Rational,
    pub residual: PowerSeries,
    pub is_zero_to_order: bool,
}

/// Writes `f` as `a G4 + b G2^(4) + residual` with `(a, b)` solved from the
/// coefficients of `t^0` and `t^1` only.
pub fn gamma0_2_fit(f: &PowerSeries) -> Result<FormFitResult> {
    let n = f.order();
    if n < 1 {
        return Err(Error::InsufficientOrder { need: 1, got: n });
    }
    let g4 = g4_series(n);
    let g24 = g2_level2_square(n);
    let (m00, m01) = (g4.coeff(0), g24.coeff(0));
    let (m10, m11) = (g4.coeff(1), g24.coeff(1));
    let det = m00 * m11 - m01 * m10;
    debug_assert!(!det.is_zero());
    let (c0, c1) = (f.coeff(0), f.coeff(1));
    let a = (c0 * m11 - m01 * c1) / &det;
    let b = (m00 * c1 - m10 * c0) / &det;
    let fitted = &g4.scale(&a) + &g24.scale(&b);
    let residual = f - &fitted;
    let is_zero_to_order = residual.is_zero();
    Ok(FormFitResult { a, b, residual, is_zero_to_order })
}
