//! Invariants of the rational elliptic surface `E(0) = S^2 x T^2` and the
//! relative Gromov-Taubes invariants of `(E(0), V)`.
//!
//! Every invariant family that enters the index-two sum formulas is a
//! closed-form sequence in the fiber degree `d` (see [`catalog`]). The
//! Gromov-Taubes invariants are recomputed from those families by explicit
//! convolutions over splittings `d = d1 + d2` ([`checks`]) and compared with
//! their closed forms.
//!
//! Family ids spell out class, genus, constraints and contact data:
//!
//! * `Phi[A,g](constraints)`: absolute invariants of `E(0)`,
//! * `PhiV[A,g,(s)](constraints;C_contact)`: relative invariants with
//!   multiplicity vector `s`,
//! * `GPhiV[A,chi,(s)](C_contact;constraints)`: Gromov-Taubes invariants
//!   with Euler characteristic `chi`,
//! * `TPhiV[...]`: their two-component part.
//!
//! `tauF` is the descendant `tau(F)`, `psiF` the class `psi(F)`, `g1`/`g2`
//! the basis of `H_1(V)`, and `1` the fundamental class.

pub mod catalog;
pub mod checks;
pub mod dimension;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::DivisorSumTable;
use crate::rational::{frac, int, Rational};

pub use catalog::{catalog, family};
pub use checks::{
    lemma71_check, lemma72_check, lemma73_check, lemma73f_convention_reports, trr_chain_checks,
    LemmaItem,
};

/// How `sigma(0)` is read inside invariant families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SigmaConvention {
    /// `sigma(0) = 0`: sigma-families are supported on `d >= 1`.
    #[default]
    Divisor,
    /// `sigma(0) = -1/24`, the constant term of `G2`.
    Eisenstein,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    AllNonNegative,
    Positive,
    ZeroOnly,
    Empty,
}

impl Support {
    pub fn contains(self, d: usize) -> bool {
        match self {
            Support::AllNonNegative => true,
            Support::Positive => d >= 1,
            Support::ZeroOnly => d == 0,
            Support::Empty => false,
        }
    }
}

/// Closed-form rule `d -> value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Zero,
    /// `c * delta_{d,0}`
    Delta(Rational),
    /// `c * d^power * sigma(d)`
    Sigma { coeff: Rational, power: u32 },
    /// `c * sum_{d1+d2=d} sigma(d1) sigma(d2)`
    SigmaPairSum(Rational),
    Sum(Vec<ClosedForm>),
}

impl ClosedForm {
    pub fn delta(c: Rational) -> Self {
        ClosedForm::Delta(c)
    }

    pub fn sigma(coeff: i64) -> Self {
        ClosedForm::Sigma { coeff: int(coeff), power: 0 }
    }

    pub fn d_sigma(coeff: i64) -> Self {
        ClosedForm::Sigma { coeff: int(coeff), power: 1 }
    }

    fn support(&self, conv: SigmaConvention) -> Support {
        match self {
            ClosedForm::Zero => Support::Empty,
            ClosedForm::Delta(c) if c.is_zero() => Support::Empty,
            ClosedForm::Delta(_) => Support::ZeroOnly,
            ClosedForm::Sigma { power: 0, .. } | ClosedForm::SigmaPairSum(_)
                if conv == SigmaConvention::Eisenstein =>
            {
                Support::AllNonNegative
            }
            ClosedForm::Sigma { .. } => Support::Positive,
            ClosedForm::SigmaPairSum(_) => Support::Positive,
            ClosedForm::Sum(parts) => parts.iter().fold(Support::Empty, |acc, p| {
                match (acc, p.support(conv)) {
                    (Support::Empty, s) | (s, Support::Empty) => s,
                    (a, b) if a == b => a,
                    _ => Support::AllNonNegative,
                }
            }),
        }
    }

    pub fn eval(&self, d: usize, ctx: &EvalContext) -> Rational {
        match self {
            ClosedForm::Zero => Rational::zero(),
            ClosedForm::Delta(c) => {
                if d == 0 {
                    c.clone()
                } else {
                    Rational::zero()
                }
            }
            ClosedForm::Sigma { coeff, power } => {
                coeff * int((d as i64).pow(*power)) * ctx.sigma(d)
            }
            ClosedForm::SigmaPairSum(coeff) => {
                let mut acc = Rational::zero();
                for d1 in 0..=d {
                    acc += ctx.sigma(d1) * ctx.sigma(d - d1);
                }
                coeff * acc
            }
            ClosedForm::Sum(parts) => parts.iter().map(|p| p.eval(d, ctx)).sum(),
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::to_canonical;
        match self {
            ClosedForm::Zero => f.write_str("0"),
            ClosedForm::Delta(c) => write!(f, "{} delta(d,0)", to_canonical(c)),
            ClosedForm::Sigma { coeff, power: 0 } => write!(f, "{} sigma(d)", to_canonical(coeff)),
            ClosedForm::Sigma { coeff, power: 1 } => write!(f, "{} d sigma(d)", to_canonical(coeff)),
            ClosedForm::Sigma { coeff, power } => write!(f, "{} d^{power} sigma(d)", to_canonical(coeff)),
            ClosedForm::SigmaPairSum(c) => write!(f, "sum {} sigma(d1) sigma(d2)", to_canonical(c)),
            ClosedForm::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

/// A named invariant family `d -> value` with its closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFamily {
    pub id: &'static str,
    pub rule: ClosedForm,
    pub support: Support,
    /// Where the value comes from, in words.
    pub provenance: &'static str,
}

impl SequenceFamily {
    pub fn new(id: &'static str, rule: ClosedForm, provenance: &'static str) -> Self {
        let support = rule.support(SigmaConvention::Divisor);
        SequenceFamily { id, rule, support, provenance }
    }

    /// Support under a convention; `Eisenstein` extends sigma-families to `d = 0`.
    pub fn support_under(&self, conv: SigmaConvention) -> Support {
        self.rule.support(conv)
    }

    /// Value at `d`; zero outside the support.
    pub fn eval(&self, d: usize, ctx: &EvalContext) -> Rational {
        if self.support_under(ctx.convention).contains(d) {
            self.rule.eval(d, ctx)
        } else {
            Rational::zero()
        }
    }
}

/// Divisor sums for `d <= d_max` plus the `sigma(0)` convention in force.
#[derive(Clone, Debug)]
pub struct EvalContext {
    pub convention: SigmaConvention,
    table: DivisorSumTable,
}

impl EvalContext {
    pub fn new(d_max: usize, convention: SigmaConvention) -> Self {
        EvalContext { convention, table: DivisorSumTable::new(d_max.max(1)) }
    }

    pub fn d_max(&self) -> usize {
        self.table.n_max()
    }

    pub fn sigma(&self, d: usize) -> Rational {
        match (d, self.convention) {
            (0, SigmaConvention::Divisor) => Rational::zero(),
            (0, SigmaConvention::Eisenstein) => frac(-1, 24),
            _ => int(self.table.sigma(d) as i64),
        }
    }
}

/// `weight * sum_{d1 + d2 = d} left(d1) right(d2)`, splitting the fiber
/// degree between the two components.
#[derive(Clone, Debug)]
pub struct ConvolutionSpec {
    pub left: SequenceFamily,
    pub right: SequenceFamily,
    pub weight: Rational,
}

impl ConvolutionSpec {
    pub fn new(left: &str, right: &str, weight: Rational) -> Result<Self> {
        Ok(ConvolutionSpec { left: family(left)?, right: family(right)?, weight })
    }
}

pub fn tphi_convolution(spec: &ConvolutionSpec, d: usize, ctx: &EvalContext) -> Rational {
    let ls = spec.left.support_under(ctx.convention);
    let rs = spec.right.support_under(ctx.convention);
    let mut acc = Rational::zero();
    for d1 in (0..=d).filter(|&d1| ls.contains(d1) && rs.contains(d - d1)) {
        acc += spec.left.eval(d1, ctx) * spec.right.eval(d - d1, ctx);
    }
    &spec.weight * acc
}

/// A derivation route: a sequence built from registered families by the
/// operations the sum formulas and TRR relations use.
#[derive(Clone, Debug)]
pub enum Expr {
    Family(&'static str),
    Scale(Rational, Box<Expr>),
    Sum(Vec<Expr>),
    /// splitting convolution `sum_{d1+d2=d} left(d1) right(d2)`
    Conv(Box<Expr>, Box<Expr>),
    /// `d * inner(d)`, the divisor-axiom factor `S . (S + dF) = d`
    DegreeWeighted(Box<Expr>),
    /// Solves `conv(divisor, x) = numerator` for `x` when `divisor` is
    /// supported at `d = 0`: `x(d) = numerator(d) / divisor(0)`.
    DeconvolveDelta { numerator: Box<Expr>, divisor: Box<Expr> },
}

impl Expr {
    pub fn fam(id: &'static str) -> Self {
        Expr::Family(id)
    }

    pub fn conv(left: Expr, right: Expr) -> Self {
        Expr::Conv(Box::new(left), Box::new(right))
    }

    pub fn conv_ids(left: &'static str, right: &'static str) -> Self {
        Expr::conv(Expr::Family(left), Expr::Family(right))
    }

    pub fn scale(c: Rational, e: Expr) -> Self {
        Expr::Scale(c, Box::new(e))
    }

    pub fn negated(e: Expr) -> Self {
        Expr::scale(int(-1), e)
    }

    pub fn eval(&self, d: usize, ctx: &EvalContext) -> Result<Rational> {
        Ok(match self {
            Expr::Family(id) => family(id)?.eval(d, ctx),
            Expr::Scale(c, e) => c * e.eval(d, ctx)?,
            Expr::Sum(parts) => {
                let mut acc = Rational::zero();
                for p in parts {
                    acc += p.eval(d, ctx)?;
                }
                acc
            }
            Expr::Conv(l, r) => {
                let mut acc = Rational::zero();
                for d1 in 0..=d {
                    let lv = l.eval(d1, ctx)?;
                    if !lv.is_zero() {
                        acc += lv * r.eval(d - d1, ctx)?;
                    }
                }
                acc
            }
            Expr::DegreeWeighted(e) => int(d as i64) * e.eval(d, ctx)?,
            Expr::DeconvolveDelta { numerator, divisor } => {
                let lead = divisor.eval(0, ctx)?;
                if lead.is_zero() {
                    return Err(Error::DivisionByNonUnit {
                        divisor_valuation: None,
                        dividend_valuation: None,
                    });
                }
                numerator.eval(d, ctx)? / lead
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> EvalContext {
        EvalContext::new(64, SigmaConvention::Divisor)
    }

    #[test]
    fn closed_forms_evaluate() {
        let c = ctx();
        assert_eq!(ClosedForm::sigma(2).eval(3, &c), int(8));
        assert_eq!(ClosedForm::d_sigma(16).eval(2, &c), int(96));
        assert_eq!(ClosedForm::Delta(frac(1, 2)).eval(0, &c), frac(1, 2));
        assert!(ClosedForm::Delta(frac(1, 2)).eval(1, &c).is_zero());
        // 16 sigma(1)^2 at d = 2, no sigma(0) term
        assert_eq!(ClosedForm::SigmaPairSum(int(16)).eval(2, &c), int(16));
    }

    #[test]
    fn eisenstein_convention_extends_support() {
        let f = SequenceFamily::new("x", ClosedForm::sigma(2), "test");
        assert_eq!(f.support, Support::Positive);
        let e = EvalContext::new(8, SigmaConvention::Eisenstein);
        assert_eq!(f.eval(0, &e), frac(-1, 12));
        assert!(f.eval(0, &ctx()).is_zero());
    }

    #[test]
    fn delta_convolution_is_identity() {
        let c = ctx();
        let spec = ConvolutionSpec::new("PhiV[S+dF,1,(1)](pt;C_pt)", "PhiV[S,0,(1)](C_pt)", int(1)).unwrap();
        for d in 0..=20 {
            assert_eq!(tphi_convolution(&spec, d, &c), spec.left.eval(d, &c));
        }
    }

    #[test]
    fn deconvolution_needs_nonzero_lead() {
        let e = Expr::DeconvolveDelta {
            numerator: Box::new(Expr::fam("Phi[S+dF,1](pt^2)")),
            divisor: Box::new(Expr::fam("PhiV[S,0,(1)](tauF;C_F)")),
        };
        assert!(e.eval(1, &ctx()).is_err());
    }
}
