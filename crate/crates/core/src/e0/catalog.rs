//! Registered invariant families of `E(0)` and `(E(0), V)`.
//!
//! Values are constants of the geometry (divisor-sum closed forms, branched
//! cover counts, triple intersections); nothing here computes geometry.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::rational::{frac, int};

use super::{ClosedForm, SequenceFamily};

fn one() -> ClosedForm {
    ClosedForm::delta(int(1))
}

fn build() -> Vec<SequenceFamily> {
    use ClosedForm as C;
    let f = SequenceFamily::new;
    vec![
        // genus 0, trivial class: triple intersection numbers
        f("Phi[0,0](F,S,1)", one(), "triple intersection F.S = 1"),
        // section classes and genus-1 fiber counts
        f("Phi[S,0](pt)", one(), "unique section through a point"),
        f("PhiV[S,0,(1)](C_pt)", one(), "unique section through a point of V"),
        f("PhiV[S,0,(1)](pt;C_F)", one(), "unique section through a point"),
        f("Phi[S,0](F^2,pt)", one(), "divisor axiom twice on Phi[S,0](pt), F.S = 1"),
        f("Phi[S,0](g1,g2)", one(), "section meeting the two 1-cycles"),
        f("PhiV[S,0,(1)](g1;C_g2)", one(), "section meeting g1, contact along g2"),
        f("PhiV[S,0,(1)](g2;C_-g1)", one(), "symplectic dual splitting of PhiV[S,0,(1)](g1;C_g2)"),
        f("PhiV[S,0,(1)](g1,g2;C_F)", one(), "section meeting g1 and g2"),
        f("Phi[S+dF,1](tauF,pt)", C::sigma(2), "genus-1 count with tau(F): 2 sigma(d)"),
        f("PhiV[S+dF,1,(1)](tauF;C_pt)", C::sigma(2), "relative version of Phi[S+dF,1](tauF,pt)"),
        f("PhiV[S+dF,1,(1)](tauF,pt;C_F)", C::sigma(2), "relative version of Phi[S+dF,1](tauF,pt)"),
        f("Phi[S+dF,1](pt^2)", C::d_sigma(2), "genus-1 curves through two points: 2 d sigma(d)"),
        f("PhiV[S+dF,1,(1)](pt;C_pt)", C::d_sigma(1), "relative genus-1 count: d sigma(d)"),
        f("PhiV[S+dF,1,(1)](pt^2;C_F)", C::d_sigma(2), "relative version of Phi[S+dF,1](pt^2)"),
        f("Phi[S+dF,1](pt,g1,g2)", C::d_sigma(1), "genus-1 count through a point and both 1-cycles"),
        f("PhiV[S+dF,1,(1)](pt,g1;C_g2)", C::d_sigma(1), "relative version of Phi[S+dF,1](pt,g1,g2)"),
        f("PhiV[S+dF,1,(1)](g1,g2;C_pt)", C::Zero, "vanishes"),
        f("Phi[dF,1](S)", C::sigma(2), "genus-1 fiber covers: 2 sigma(d)"),
        f("Phi[dF,1](pt,*)", C::Zero, "fiber classes cannot pass through a generic point"),
        // branched covers of a fixed section (ramification (2,1,2), (2,1,1), (2,2,2))
        f("PhiV[2S,0,(2)](pt,tauF;C_F)", one(), "one double cover with ramification (2,1,2)"),
        f("PhiV[S,0,(1)](tauF;C_F)", C::Zero, "no degree-1 cover with ramification (2,1,1)"),
        f("Phi[S,0](tauF)", C::Zero, "no degree-1 cover with ramification (2,1,1)"),
        f("PhiV[2S,0,(2)](tauF^2;C_F)", C::Zero, "no double cover with ramification (2,2,2)"),
        // psi(F) constraints via TRR
        f("Phi[S+dF,1](psiF,pt)", C::sigma(2), "genus-1 TRR: 2 sigma(d)"),
        f("Phi[S,0](psiF,S,F^2)", one(), "genus-0 TRR"),
        f("Phi[S,0](psiF,pt,F,1)", one(), "genus-0 TRR"),
        f("Phi[S+dF,1](psiF^2,S)", C::sigma(4), "genus-1 TRR: 4 sigma(d)"),
        f("Phi[2S,0](psiF^2,pt,F^2)", ClosedForm::delta(int(2)), "genus-0 TRR: 2"),
        f("Phi[dF,1](psiF,S,1)", C::Zero, "genus-1 TRR: 0"),
        f("Phi[S,0](tauF,F,S)", one(), "psi/tau comparison"),
        f("Phi[S,0](tauF,pt,F,1)", one(), "psi/tau comparison"),
        f("Phi[S,0](psiF,1,g1,g2)", one(), "genus-0 TRR"),
        f("Phi[2S+dF,1](psiF^3,pt)", C::sigma(12), "genus-1 TRR: 12 sigma(d)"),
        f("Phi[S+dF,1](psiF^2,1,pt)", C::sigma(4), "genus-1 TRR: 4 sigma(d)"),
        f("Phi[2S+dF,1](psiF,tauF,pt^2)", C::d_sigma(14), "genus-1 TRR: 14 d sigma(d)"),
        f("Phi[S+dF,1](psiF,1,pt^2)", C::d_sigma(2), "genus-1 TRR: 2 d sigma(d)"),
        // tau(F) constraints
        f("Phi[2S,0](tauF^2,pt)", one(), "psi/tau comparison: 1"),
        f("Phi[2S,0](tauF^2,g1,g2)", ClosedForm::delta(int(2)), "psi/tau comparison: 2"),
        f("Phi[2S+dF,1](tauF^3,pt)", C::sigma(24), "24 sigma(d)"),
        f("Phi[2S+dF,1](tauF^2,pt^2)", C::d_sigma(16), "16 d sigma(d)"),
        // connected relative invariants of 2S+dF that vanish
        f("PhiV[2S+dF,0,(2)](g1,g2;C_pt)", C::Zero, "a section cannot meet g1 and a point of V"),
        f("PhiV[2S+dF,0,(2)](pt;C_pt)", C::Zero, "a section cannot pass through two generic points"),
        f("PhiV[2S+dF,1,(1,1)](g1,g2;C_pt^2)", C::Zero, "dimension count"),
        f("PhiV[2S+dF,1,(1,1)](pt;C_pt^2)", C::Zero, "dimension count"),
        f("PhiV[2S+dF,1,(1,1)](tauF;C_pt^2)", C::Zero, "dimension count"),
        f("TPhiV[2S+dF,2,(1,1)](C_(-g1).g2;tauF^2)", C::Zero, "dimension count"),
        // Gromov-Taubes invariants: closed forms to be reproduced by convolution
        f("GPhiV[2S+dF,4,(1,1)](C_pt^2)", one(), "delta(d,0)"),
        f("GPhiV[2S+dF,4,(1,1)](C_pt.F;g1,g2)", one(), "delta(d,0)"),
        f("GPhiV[2S+dF,4,(1,1)](C_(-g1).g2;g1,g2)", ClosedForm::delta(int(-1)), "-delta(d,0)"),
        f("GPhiV[2S+dF,2,(2)](C_pt;g1,g2)", C::Zero, "0"),
        f("GPhiV[2S+dF,2,(1,1)](C_pt^2;g1,g2)", C::Zero, "0"),
        f("GPhiV[2S+dF,4,(1,1)](C_pt.F;pt)", one(), "delta(d,0)"),
        f("GPhiV[2S+dF,2,(2)](C_pt;pt)", C::Zero, "0"),
        f("GPhiV[2S+dF,2,(1,1)](C_pt^2;pt)", C::d_sigma(2), "2 d sigma(d)"),
        f("GPhiV[2S+dF,4,(1,1)](C_pt.F;tauF)", C::Zero, "0"),
        f("GPhiV[2S+dF,2,(2)](C_pt;tauF)", ClosedForm::delta(frac(1, 2)), "(1/2) delta(d,0)"),
        f("GPhiV[2S+dF,2,(1,1)](C_pt^2;tauF)", C::sigma(4), "4 sigma(d)"),
        f("GPhiV[2S+dF,4,(1,1)](C_F^2;tauF^2)", C::Zero, "0"),
        f("GPhiV[2S+dF,2,(2)](C_F;tauF^2)", C::Zero, "0"),
        f("GPhiV[2S+dF,2,(1,1)](C_pt.F;tauF^2)", one(), "delta(d,0)"),
        f("GPhiV[2S+dF,2,(1,1)](C_(-g1).g2;tauF^2)", one(), "delta(d,0)"),
        f("GPhiV[2S+dF,0,(2)](C_pt;tauF^2)", C::sigma(10), "10 sigma(d)"),
        f(
            "GPhiV[2S+dF,0,(1,1)](C_pt^2;tauF^2)",
            ClosedForm::Sum(vec![ClosedForm::SigmaPairSum(int(16)), C::d_sigma(12)]),
            "sum 16 sigma(d1) sigma(d2) + 12 d sigma(d)",
        ),
    ]
}

fn index() -> &'static BTreeMap<&'static str, SequenceFamily> {
    static CATALOG: OnceLock<BTreeMap<&'static str, SequenceFamily>> = OnceLock::new();
    CATALOG.get_or_init(|| build().into_iter().map(|f| (f.id, f)).collect())
}

/// All registered families, sorted by id.
pub fn catalog() -> impl Iterator<Item = &'static SequenceFamily> {
    index().values()
}

pub fn family(id: &str) -> Result<SequenceFamily> {
    index().get(id).cloned().ok_or_else(|| Error::UnknownFamily(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e0::{EvalContext, SigmaConvention, Support};

    #[test]
    fn ids_are_unique() {
        assert_eq!(build().len(), index().len());
    }

    #[test]
    fn lookup_examples() {
        let ctx = EvalContext::new(8, SigmaConvention::Divisor);
        assert_eq!(family("Phi[S+dF,1](tauF,pt)").unwrap().eval(3, &ctx), int(8));
        assert_eq!(family("Phi[2S+dF,1](tauF^3,pt)").unwrap().eval(1, &ctx), int(24));
        assert_eq!(family("Phi[2S,0](tauF^2,pt)").unwrap().eval(0, &ctx), int(1));
        assert!(matches!(family("Phi[3S,0](pt)"), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn delta_families_are_distinguishable() {
        // value pattern at d = 0, 1, 2 separates delta families from zero and constants
        let ctx = EvalContext::new(4, SigmaConvention::Divisor);
        for fam in catalog().filter(|f| f.support == Support::ZeroOnly) {
            let v: Vec<_> = (0..3).map(|d| fam.eval(d, &ctx)).collect();
            assert_ne!(v[0], int(0), "{}", fam.id);
            assert_eq!(v[1], int(0), "{}", fam.id);
            assert_eq!(v[2], int(0), "{}", fam.id);
        }
    }
}
