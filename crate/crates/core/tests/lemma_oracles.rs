//! Independent recomputation of the lemma routes: divisor sums by trial
//! division, convolutions by a plain double loop and by series products.

use num_traits::Zero;
use yzq_core::e0::checks::{lemma71_items, lemma72_items, lemma73_items, route_value, trr_chain_items};
use yzq_core::e0::{catalog, tphi_convolution, ConvolutionSpec, EvalContext, SigmaConvention, Support};
use yzq_core::rational::{int, Rational};
use yzq_core::PowerSeries;

const D_MAX: usize = 64;

fn sigma(d: usize) -> i64 {
    if d == 0 {
        return 0;
    }
    (1..=d).filter(|k| d.is_multiple_of(*k)).sum::<usize>() as i64
}

fn delta(c: i64) -> impl Fn(usize) -> Rational {
    move |d| if d == 0 { int(c) } else { int(0) }
}

fn sig(c: i64) -> impl Fn(usize) -> Rational {
    move |d| int(c * sigma(d))
}

fn dsig(c: i64) -> impl Fn(usize) -> Rational {
    move |d| int(c * d as i64 * sigma(d))
}

fn naive_conv(l: &dyn Fn(usize) -> Rational, r: &dyn Fn(usize) -> Rational, d: usize) -> Rational {
    let mut acc = Rational::zero();
    for d1 in 0..=d {
        for d2 in 0..=d {
            if d1 + d2 == d {
                acc += l(d1) * r(d2);
            }
        }
    }
    acc
}

fn as_series(f: &dyn Fn(usize) -> Rational) -> PowerSeries {
    PowerSeries::from_fn(D_MAX, f)
}

/// Expected closed forms of the Gromov-Taubes targets, written out by hand.
fn expected(target: &str, d: usize) -> Rational {
    let pair16 = |d: usize| naive_conv(&sig(4), &sig(4), d);
    match target {
        "GPhiV[2S+dF,4,(1,1)](C_pt^2)" | "GPhiV[2S+dF,4,(1,1)](C_pt.F;g1,g2)" | "GPhiV[2S+dF,4,(1,1)](C_pt.F;pt)" => {
            delta(1)(d)
        }
        "GPhiV[2S+dF,4,(1,1)](C_(-g1).g2;g1,g2)" => delta(-1)(d),
        "GPhiV[2S+dF,2,(2)](C_pt;g1,g2)"
        | "GPhiV[2S+dF,2,(1,1)](C_pt^2;g1,g2)"
        | "GPhiV[2S+dF,2,(2)](C_pt;pt)"
        | "GPhiV[2S+dF,4,(1,1)](C_pt.F;tauF)"
        | "GPhiV[2S+dF,4,(1,1)](C_F^2;tauF^2)"
        | "GPhiV[2S+dF,2,(2)](C_F;tauF^2)" => int(0),
        "GPhiV[2S+dF,2,(1,1)](C_pt^2;pt)" => dsig(2)(d),
        "GPhiV[2S+dF,2,(2)](C_pt;tauF)" => {
            if d == 0 {
                yzq_core::rational::frac(1, 2)
            } else {
                int(0)
            }
        }
        "GPhiV[2S+dF,2,(1,1)](C_pt^2;tauF)" => sig(4)(d),
        "GPhiV[2S+dF,2,(1,1)](C_pt.F;tauF^2)" | "GPhiV[2S+dF,2,(1,1)](C_(-g1).g2;tauF^2)" => delta(1)(d),
        "GPhiV[2S+dF,0,(2)](C_pt;tauF^2)" => sig(10)(d),
        "GPhiV[2S+dF,0,(1,1)](C_pt^2;tauF^2)" => pair16(d) + dsig(12)(d),
        "Phi[S+dF,1](psiF^2,S)" => sig(4)(d),
        "Phi[2S+dF,1](psiF^3,pt)" => sig(12)(d),
        "Phi[2S+dF,1](tauF^3,pt)" => sig(24)(d),
        "Phi[2S+dF,1](tauF^2,pt^2)" => dsig(16)(d),
        "Phi[2S+dF,1](psiF,tauF,pt^2)" => dsig(14)(d),
        other => panic!("no hand value for {other}"),
    }
}

#[test]
fn every_route_matches_hand_values() {
    let lists = [lemma71_items(), lemma72_items(), lemma73_items(), trr_chain_items()];
    for it in lists.iter().flatten() {
        for d in 0..=D_MAX {
            assert_eq!(route_value(it, d).unwrap(), expected(it.target, d), "{} at d = {d}", it.target);
        }
    }
}

#[test]
fn sigma_pair_sum_three_ways() {
    // sum_{d1+d2=d} 16 sigma(d1) sigma(d2), with sigma(0) = 0
    let product = &as_series(&sig(4)) * &as_series(&sig(4));
    let ctx = EvalContext::new(D_MAX, SigmaConvention::Divisor);
    let closed = yzq_core::e0::ClosedForm::SigmaPairSum(int(16));
    for d in 0..=D_MAX {
        let naive = naive_conv(&sig(4), &sig(4), d);
        assert_eq!(product.coeff(d), &naive, "d = {d}");
        assert_eq!(closed.eval(d, &ctx), naive, "d = {d}");
    }
}

#[test]
fn catalog_convolutions_agree_with_series_products() {
    let ctx = EvalContext::new(D_MAX, SigmaConvention::Divisor);
    // one representative per closed form
    let mut seen = Vec::new();
    let distinct: Vec<_> = catalog()
        .filter(|f| {
            let new = !seen.contains(&f.rule);
            seen.push(f.rule.clone());
            new
        })
        .collect();
    let sigma_families: Vec<_> = distinct.iter().copied().filter(|f| f.support == Support::Positive).collect();
    let delta_families: Vec<_> = distinct.iter().copied().filter(|f| f.support == Support::ZeroOnly).collect();
    for l in sigma_families.iter().chain(&delta_families) {
        for r in &sigma_families {
            let spec = ConvolutionSpec::new(l.id, r.id, int(1)).unwrap();
            let ls = PowerSeries::from_fn(D_MAX, |d| l.eval(d, &ctx));
            let rs = PowerSeries::from_fn(D_MAX, |d| r.eval(d, &ctx));
            let product = &ls * &rs;
            for d in 0..=D_MAX {
                let via_conv = tphi_convolution(&spec, d, &ctx);
                let naive = naive_conv(&|k| l.eval(k, &ctx), &|k| r.eval(k, &ctx), d);
                assert_eq!(via_conv, naive, "{} * {} at {d}", l.id, r.id);
                assert_eq!(product.coeff(d), &naive, "{} * {} at {d}", l.id, r.id);
            }
        }
    }
}

#[test]
fn self_convolution_is_symmetric() {
    let ctx = EvalContext::new(D_MAX, SigmaConvention::Divisor);
    for f in catalog() {
        let spec = ConvolutionSpec::new(f.id, f.id, int(1)).unwrap();
        for d in 0..=D_MAX {
            let forward = tphi_convolution(&spec, d, &ctx);
            let mut backward = Rational::zero();
            for d1 in (0..=d).rev() {
                backward += f.eval(d - d1, &ctx) * f.eval(d1, &ctx);
            }
            assert_eq!(forward, backward, "{} at {d}", f.id);
        }
    }
}

#[test]
fn catalog_values_match_trial_division() {
    let ctx = EvalContext::new(D_MAX, SigmaConvention::Divisor);
    let f = |id: &str| yzq_core::e0::family(id).unwrap();
    for d in 0..=D_MAX {
        assert_eq!(f("Phi[S+dF,1](tauF,pt)").eval(d, &ctx), sig(2)(d));
        assert_eq!(f("Phi[S+dF,1](pt^2)").eval(d, &ctx), dsig(2)(d));
        assert_eq!(f("PhiV[S+dF,1,(1)](pt;C_pt)").eval(d, &ctx), dsig(1)(d));
        assert_eq!(f("Phi[2S+dF,1](tauF^3,pt)").eval(d, &ctx), sig(24)(d));
        assert_eq!(f("Phi[2S,0](tauF^2,g1,g2)").eval(d, &ctx), delta(2)(d));
    }
}
