//! Convolution routes for the Gromov-Taubes invariants of `(E(0), V)` and the
//! additive TRR chains, each compared with its registered closed form.
//!
//! A route is an [`Expr`] over catalog families. The splittings over a basis of
//! `H_*(V)` and the vanishing of terms are resolved in advance; only the
//! surviving products are encoded. All registered routes carry even-degree
//! constraints on both sides of each splitting, so every sign is `+1` except
//! the single `(-g1)` contact, which is written with an explicit `-1`.

use crate::error::{Error, Result};
use crate::rational::{frac, int};
use crate::report::IdentityReport;
use crate::series::PowerSeries;

use super::{family, EvalContext, Expr, SigmaConvention};

/// One registered check: `route` must reproduce the family `target`.
#[derive(Clone, Debug)]
pub struct LemmaItem {
    pub label: char,
    pub target: &'static str,
    pub route: Expr,
}

fn item(label: char, target: &'static str, route: Expr) -> LemmaItem {
    LemmaItem { label, target, route }
}

fn fam(id: &'static str) -> Expr {
    Expr::fam(id)
}

fn conv(l: &'static str, r: &'static str) -> Expr {
    Expr::conv_ids(l, r)
}

fn sum(parts: Vec<Expr>) -> Expr {
    Expr::Sum(parts)
}

const V_S0_PT: &str = "PhiV[S,0,(1)](C_pt)";
const V_S0_PT_F: &str = "PhiV[S,0,(1)](pt;C_F)";
const V_S0_TAU_F: &str = "PhiV[S,0,(1)](tauF;C_F)";
const V_TAU_PT: &str = "PhiV[S+dF,1,(1)](tauF;C_pt)";
const V_PT_PT: &str = "PhiV[S+dF,1,(1)](pt;C_pt)";
const V_TAU_PT_F: &str = "PhiV[S+dF,1,(1)](tauF,pt;C_F)";

/// Invariants with point and 1-cycle constraints.
pub fn lemma71_items() -> Vec<LemmaItem> {
    vec![
        item('a', "GPhiV[2S+dF,4,(1,1)](C_pt^2)", conv(V_S0_PT, V_S0_PT)),
        item(
            'b',
            "GPhiV[2S+dF,4,(1,1)](C_pt.F;g1,g2)",
            conv(V_S0_PT, "PhiV[S,0,(1)](g1,g2;C_F)"),
        ),
        item(
            'c',
            "GPhiV[2S+dF,4,(1,1)](C_(-g1).g2;g1,g2)",
            Expr::negated(conv("PhiV[S,0,(1)](g2;C_-g1)", "PhiV[S,0,(1)](g1;C_g2)")),
        ),
        item('d', "GPhiV[2S+dF,2,(2)](C_pt;g1,g2)", fam("PhiV[2S+dF,0,(2)](g1,g2;C_pt)")),
        item(
            'e',
            "GPhiV[2S+dF,2,(1,1)](C_pt^2;g1,g2)",
            sum(vec![
                Expr::scale(int(2), conv("PhiV[S+dF,1,(1)](g1,g2;C_pt)", V_S0_PT)),
                fam("PhiV[2S+dF,1,(1,1)](g1,g2;C_pt^2)"),
            ]),
        ),
        item('f', "GPhiV[2S+dF,4,(1,1)](C_pt.F;pt)", conv(V_S0_PT, V_S0_PT_F)),
        item('g', "GPhiV[2S+dF,2,(2)](C_pt;pt)", fam("PhiV[2S+dF,0,(2)](pt;C_pt)")),
        item(
            'h',
            "GPhiV[2S+dF,2,(1,1)](C_pt^2;pt)",
            sum(vec![
                conv(V_PT_PT, V_S0_PT),
                conv(V_S0_PT, V_PT_PT),
                fam("PhiV[2S+dF,1,(1,1)](pt;C_pt^2)"),
            ]),
        ),
    ]
}

/// Invariants with a single `tau(F)` constraint.
pub fn lemma72_items() -> Vec<LemmaItem> {
    vec![
        item('a', "GPhiV[2S+dF,4,(1,1)](C_pt.F;tauF)", conv(V_S0_PT, V_S0_TAU_F)),
        item(
            'b',
            "GPhiV[2S+dF,2,(2)](C_pt;tauF)",
            Expr::scale(frac(1, 2), fam("PhiV[2S,0,(2)](pt,tauF;C_F)")),
        ),
        item(
            'c',
            "GPhiV[2S+dF,2,(1,1)](C_pt^2;tauF)",
            sum(vec![
                conv(V_TAU_PT, V_S0_PT),
                conv(V_S0_PT, V_TAU_PT),
                fam("PhiV[2S+dF,1,(1,1)](tauF;C_pt^2)"),
            ]),
        ),
    ]
}

/// Invariants with two `tau(F)` constraints.
pub fn lemma73_items() -> Vec<LemmaItem> {
    // Relative genus-1 invariant with C_F and tau(F)^2: both splittings vanish.
    let c0 = sum(vec![conv(V_TAU_PT, V_S0_TAU_F), conv(V_S0_TAU_F, V_TAU_PT)]);
    let c1 = sum(vec![
        Expr::conv(c0, fam(V_S0_PT)),
        Expr::scale(int(2), conv(V_S0_TAU_F, V_TAU_PT)),
    ]);
    // the connected index-two part at d = 0 equals Phi[2S,0](tauF^2,pt)
    let c2 = fam("Phi[2S,0](tauF^2,pt)");

    let e2 = sum(vec![
        conv(V_S0_PT, V_TAU_PT_F),
        conv(V_TAU_PT, V_S0_PT_F),
        conv(V_PT_PT, V_S0_TAU_F),
    ]);
    let e = Expr::scale(
        frac(1, 2),
        sum(vec![fam("Phi[2S+dF,1](tauF^3,pt)"), Expr::negated(e2)]),
    );

    // genus-2 relative invariant with C_pt and tau(F)^2
    let ltp5 = conv(V_TAU_PT_F, V_TAU_PT);
    let f2 = sum(vec![
        Expr::scale(int(2), Expr::conv(ltp5, fam(V_S0_PT))),
        Expr::scale(int(2), conv(V_TAU_PT, V_TAU_PT)),
    ]);
    let tp_f1 = sum(vec![
        conv(V_S0_PT, "PhiV[S+dF,1,(1)](pt^2;C_F)"),
        Expr::scale(int(2), conv(V_PT_PT, V_S0_PT_F)),
    ]);
    let tp_f2 = Expr::scale(int(2), conv(V_S0_PT_F, V_S0_PT_F));
    let f1 = Expr::DeconvolveDelta {
        numerator: Box::new(sum(vec![
            fam("Phi[2S+dF,1](tauF^2,pt^2)"),
            Expr::negated(Expr::conv(tp_f1, c2.clone())),
        ])),
        divisor: Box::new(Expr::scale(frac(1, 2), tp_f2)),
    };

    vec![
        item(
            'a',
            "GPhiV[2S+dF,4,(1,1)](C_F^2;tauF^2)",
            Expr::scale(int(2), conv(V_S0_TAU_F, V_S0_TAU_F)),
        ),
        item('b', "GPhiV[2S+dF,2,(2)](C_F;tauF^2)", fam("PhiV[2S,0,(2)](tauF^2;C_F)")),
        item('c', "GPhiV[2S+dF,2,(1,1)](C_pt.F;tauF^2)", sum(vec![c1, c2.clone()])),
        item(
            'd',
            "GPhiV[2S+dF,2,(1,1)](C_(-g1).g2;tauF^2)",
            sum(vec![
                fam("TPhiV[2S+dF,2,(1,1)](C_(-g1).g2;tauF^2)"),
                fam("Phi[2S,0](tauF^2,g1,g2)"),
                Expr::negated(c2),
            ]),
        ),
        item('e', "GPhiV[2S+dF,0,(2)](C_pt;tauF^2)", e),
        item('f', "GPhiV[2S+dF,0,(1,1)](C_pt^2;tauF^2)", sum(vec![f2, f1])),
    ]
}

/// The additive chains behind the `psi(F)` and `tau(F)` closed forms, labelled
/// `a..e` in registration order.
pub fn trr_chain_items() -> Vec<LemmaItem> {
    let fiber_s = "Phi[dF,1](S)";
    vec![
        item(
            'a',
            "Phi[S+dF,1](psiF^2,S)",
            sum(vec![
                conv("Phi[0,0](F,S,1)", "Phi[S+dF,1](psiF,pt)"),
                conv("Phi[S,0](psiF,S,F^2)", fiber_s),
            ]),
        ),
        item(
            'b',
            "Phi[2S+dF,1](psiF^3,pt)",
            sum(vec![
                conv("Phi[S,0](F^2,pt)", "Phi[S+dF,1](psiF^2,S)"),
                Expr::scale(int(2), conv("Phi[S,0](psiF,pt,F,1)", "Phi[S+dF,1](psiF,pt)")),
                conv("Phi[2S,0](psiF^2,pt,F^2)", fiber_s),
            ]),
        ),
        item(
            'c',
            "Phi[2S+dF,1](tauF^3,pt)",
            sum(vec![
                fam("Phi[2S+dF,1](psiF^3,pt)"),
                Expr::scale(int(3), fam("Phi[S+dF,1](psiF^2,1,pt)")),
                Expr::scale(int(3), fam("Phi[dF,1](pt,*)")),
            ]),
        ),
        item(
            'd',
            "Phi[2S+dF,1](tauF^2,pt^2)",
            sum(vec![
                fam("Phi[2S+dF,1](psiF,tauF,pt^2)"),
                fam("Phi[S+dF,1](psiF,1,pt^2)"),
                fam("Phi[dF,1](pt,*)"),
            ]),
        ),
        item(
            'e',
            "Phi[2S+dF,1](psiF,tauF,pt^2)",
            sum(vec![
                Expr::scale(
                    int(2),
                    Expr::conv(
                        fam("Phi[S,0](F^2,pt)"),
                        sum(vec![
                            Expr::DegreeWeighted(Box::new(fam("Phi[S+dF,1](tauF,pt)"))),
                            fam("Phi[S+dF,1](pt^2)"),
                        ]),
                    ),
                ),
                conv("Phi[S,0](tauF,F,S)", "Phi[S+dF,1](pt^2)"),
                Expr::scale(int(2), conv("Phi[S,0](tauF,pt,F,1)", "Phi[S+dF,1](pt^2)")),
            ]),
        ),
    ]
}

/// Runs `it` for `d = 0..=d_max`: the route is evaluated under `conv`, the
/// closed form always under [`SigmaConvention::Divisor`].
pub fn run_item(it: &LemmaItem, d_max: usize, conv: SigmaConvention) -> IdentityReport {
    let name = it.target;
    let target = match family(it.target) {
        Ok(f) => f,
        Err(e) => return IdentityReport::aborted(name, &e.to_string()),
    };
    let route_ctx = EvalContext::new(d_max, conv);
    let closed_ctx = EvalContext::new(d_max, SigmaConvention::Divisor);
    let mut residual = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        match it.route.eval(d, &route_ctx) {
            Ok(v) => residual.push(v - target.eval(d, &closed_ctx)),
            Err(e) => return IdentityReport::aborted(name, &e.to_string()),
        }
    }
    IdentityReport::from_residual(name, PowerSeries::new(residual))
}

fn check(items: Vec<LemmaItem>, label: char, d_max: usize) -> Result<IdentityReport> {
    items
        .into_iter()
        .find(|it| it.label == label)
        .map(|it| run_item(&it, d_max, SigmaConvention::default()))
        .ok_or_else(|| Error::UnknownItem(label.to_string()))
}

pub fn lemma71_check(label: char, d_max: usize) -> Result<IdentityReport> {
    check(lemma71_items(), label, d_max)
}

pub fn lemma72_check(label: char, d_max: usize) -> Result<IdentityReport> {
    check(lemma72_items(), label, d_max)
}

pub fn lemma73_check(label: char, d_max: usize) -> Result<IdentityReport> {
    check(lemma73_items(), label, d_max)
}

/// Item (f) of the two-`tau(F)` list under both `sigma(0)` readings.
pub fn lemma73f_convention_reports(d_max: usize) -> Vec<(SigmaConvention, IdentityReport)> {
    let f = lemma73_items().into_iter().find(|it| it.label == 'f').expect("item f registered");
    [SigmaConvention::Divisor, SigmaConvention::Eisenstein]
        .into_iter()
        .map(|c| (c, run_item(&f, d_max, c)))
        .collect()
}

pub fn trr_chain_checks(d_max: usize) -> Vec<IdentityReport> {
    trr_chain_items()
        .iter()
        .map(|it| run_item(it, d_max, SigmaConvention::default()))
        .collect()
}

/// Every item of the three relative lists, in order.
pub fn all_relative_checks(d_max: usize) -> Vec<IdentityReport> {
    lemma71_items()
        .into_iter()
        .chain(lemma72_items())
        .chain(lemma73_items())
        .map(|it| run_item(&it, d_max, SigmaConvention::default()))
        .collect()
}

/// Value of the route of `it` at `d` under the default convention.
pub fn route_value(it: &LemmaItem, d: usize) -> Result<crate::rational::Rational> {
    it.route.eval(d, &EvalContext::new(d.max(1), SigmaConvention::default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn at(items: Vec<LemmaItem>, label: char, d: usize) -> crate::rational::Rational {
        let it = items.into_iter().find(|i| i.label == label).unwrap();
        route_value(&it, d).unwrap()
    }

    #[test]
    fn all_items_pass_small() {
        for r in all_relative_checks(12).into_iter().chain(trr_chain_checks(12)) {
            assert!(r.passed, "{} fails at {:?}", r.identity_name, r.first_failure_degree);
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(at(lemma71_items(), 'h', 3), int(24));
        assert_eq!(at(lemma71_items(), 'a', 0), int(1));
        assert!(at(lemma71_items(), 'a', 1).is_zero());
        assert_eq!(at(lemma72_items(), 'c', 2), int(12));
        assert_eq!(at(lemma72_items(), 'b', 0), frac(1, 2));
        assert_eq!(at(lemma73_items(), 'e', 4), int(70));
        assert_eq!(at(lemma73_items(), 'f', 2), int(88));
        assert_eq!(at(lemma73_items(), 'c', 0), int(1));
        assert!(at(lemma73_items(), 'c', 3).is_zero());
        assert_eq!(at(trr_chain_items(), 'c', 5), int(144));
        assert_eq!(at(trr_chain_items(), 'e', 1), int(14));
        assert!(at(trr_chain_items(), 'd', 0).is_zero());
    }

    #[test]
    fn unknown_item() {
        assert!(matches!(lemma71_check('i', 4), Err(Error::UnknownItem(_))));
        assert!(matches!(lemma73_check('g', 4), Err(Error::UnknownItem(_))));
    }

    #[test]
    fn divisor_convention_matches_item_f() {
        let reps = lemma73f_convention_reports(16);
        assert!(reps[0].1.passed);
        assert!(!reps[1].1.passed);
        assert_eq!(reps[1].1.first_failure_degree, Some(0));
    }
}
