//! Truncated formal power series in one variable `t` over [`Rational`].
//!
//! A [`PowerSeries`] of order `N` knows its coefficients exactly for degrees
//! `0..=N`. Coefficients above `N` are unknown, not zero, so every binary
//! operation returns a series whose order is the minimum of its inputs
//! (further reduced where an operation loses precision, see [`PowerSeries::div`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, to_canonical, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

/// Outcome of comparing two series on their common range of exact degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Agreement {
    /// Highest degree compared, i.e. the smaller of the two orders.
    pub compared_through: usize,
    pub first_difference: Option<usize>,
}

impl Agreement {
    pub fn holds(&self) -> bool {
        self.first_difference.is_none()
    }
}

impl PowerSeries {
    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series always knows its constant term.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least one coefficient");
        PowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        PowerSeries::new((0..=order).map(f).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        PowerSeries::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::from_fn(order, |_| Rational::zero())
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^k` known through `order`; zero if `k > order`.
    pub fn monomial(k: usize, c: Rational, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`. Panics if `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &Rational {
        assert!(
            k <= self.order(),
            "coefficient t^{k} requested from a series of order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Drops coefficients above `order`. Panics if `order` exceeds the current order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise precision from {} to {order}", self.order());
        PowerSeries::new(self.coeffs[..=order].to_vec())
    }

    /// Lowest degree with a nonzero coefficient, if any within the order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn agreement(&self, other: &PowerSeries) -> Agreement {
        let n = self.order().min(other.order());
        Agreement {
            compared_through: n,
            first_difference: (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k]),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &PowerSeries) -> Self {
        let n = self.order().min(other.order());
        let a = &self.coeffs;
        let b = &other.coeffs;
        // skip zero terms: many series here are even- or odd-supported
        let nz_a: Vec<usize> = (0..=n).filter(|&i| !a[i].is_zero()).collect();
        let mut out = vec![Rational::zero(); n + 1];
        for &i in &nz_a {
            for j in 0..=(n - i) {
                if !b[j].is_zero() {
                    out[i + j] += &a[i] * &b[j];
                }
            }
        }
        PowerSeries::new(out)
    }

    /// Quotient `self / divisor`.
    ///
    /// If the divisor has valuation `v > 0` the dividend must vanish through
    /// degree `v - 1`; the common factor `t^v` is cancelled and the result
    /// order is `min(order(self), order(divisor)) - v`.
    pub fn div(&self, divisor: &PowerSeries) -> Result<Self> {
        let v = divisor.valuation();
        let non_unit = || Error::DivisionByNonUnit {
            divisor_valuation: v,
            dividend_valuation: self.valuation(),
        };
        let v = v.ok_or_else(non_unit)?;
        let n = self.order().min(divisor.order());
        if v > n || self.coeffs[..v].iter().any(|c| !c.is_zero()) {
            return Err(non_unit());
        }
        let a = &self.coeffs[v..=n];
        let b = &divisor.coeffs[v..=n];
        let m = n - v;
        let inv_lead = b[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut acc = a[k].clone();
            for i in 1..=k {
                if !b[i].is_zero() {
                    acc -= &b[i] * &q[k - i];
                }
            }
            q.push(acc * &inv_lead);
        }
        Ok(PowerSeries::new(q))
    }

    /// Logarithmic derivative operator `t d/dt`: `t^k -> k t^k`.
    pub fn theta(&self) -> Self {
        PowerSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// Substitution `t -> t^m`. The result is exact through degree `m * order`.
    pub fn compose_monomial(&self, m: usize) -> Self {
        assert!(m >= 1, "monomial substitution needs m >= 1");
        let n = self.order() * m;
        PowerSeries::from_fn(n, |k| {
            if k % m == 0 {
                self.coeffs[k / m].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// `(even part, odd part)`, both of the original order.
    pub fn even_odd_split(&self) -> (Self, Self) {
        let pick = |parity: usize| {
            PowerSeries::from_fn(self.order(), |k| {
                if k % 2 == parity {
                    self.coeffs[k].clone()
                } else {
                    Rational::zero()
                }
            })
        };
        (pick(0), pick(1))
    }

    /// Substitution `t -> -t`.
    pub fn negate_variable(&self) -> Self {
        PowerSeries::from_fn(self.order(), |k| {
            if k % 2 == 0 {
                self.coeffs[k].clone()
            } else {
                -&self.coeffs[k]
            }
        })
    }

    /// Integer power by repeated squaring. Negative exponents invert first and
    /// need a unit (nonzero constant term).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let order = self.order();
        let mut base = if e < 0 {
            if self.coeffs[0].is_zero() {
                return Err(Error::DivisionByNonUnit {
                    divisor_valuation: self.valuation(),
                    dividend_valuation: Some(0),
                });
            }
            PowerSeries::one(order).div(self)?
        } else {
            self.clone()
        };
        let mut exp = e.unsigned_abs();
        let mut acc = PowerSeries::one(order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// `prod_{d>=1} (1 - t^d)^e` through degree `order`.
    ///
    /// Expanded factor by factor: multiplying by `(1 - t^d)` is a strided
    /// difference and dividing by it a strided running sum, so no divisor
    /// sums enter this route.
    pub fn product_one_minus(e: i64, order: usize) -> Self {
        let mut c = PowerSeries::one(order).coeffs;
        for d in 1..=order {
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    for k in (d..=order).rev() {
                        let prev = c[k - d].clone();
                        c[k] -= prev;
                    }
                } else {
                    for k in d..=order {
                        let prev = c[k - d].clone();
                        c[k] += prev;
                    }
                }
            }
        }
        PowerSeries::new(c)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", to_canonical(c))?,
                1 => write!(f, "({})*t", to_canonical(c))?,
                _ => write!(f, "({})*t^{k}", to_canonical(c))?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Mul<&Rational> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &Rational) -> PowerSeries {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn geometric(order: usize) -> PowerSeries {
        PowerSeries::from_fn(order, |_| int(1))
    }

    #[test]
    fn add_cancels() {
        let a = PowerSeries::from_ints(&[1, 1]);
        let b = PowerSeries::from_ints(&[1, -1]);
        assert_eq!(&a + &b, PowerSeries::from_ints(&[2, 0]));
        assert_eq!(&a + &PowerSeries::zero(1), a);
    }

    #[test]
    fn result_order_is_min() {
        let a = PowerSeries::one(7);
        let b = PowerSeries::one(3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(a.scale(&frac(2, 3)).order(), 7);
    }

    #[test]
    fn binomial_and_geometric_products() {
        let a = PowerSeries::from_ints(&[1, 1, 0]);
        assert_eq!(&a * &a, PowerSeries::from_ints(&[1, 2, 1]));
        let g = geometric(6);
        let one_minus = PowerSeries::from_ints(&[1, -1, 0, 0, 0, 0, 0]);
        assert_eq!(&g * &one_minus, PowerSeries::one(6));
    }

    #[test]
    fn division_examples() {
        let num = PowerSeries::from_ints(&[1, 0, -1, 0]);
        let den = PowerSeries::from_ints(&[1, -1, 0, 0]);
        assert_eq!(num.div(&den).unwrap(), PowerSeries::from_ints(&[1, 1, 0, 0]));

        let f = PowerSeries::from_ints(&[2, 3, 5, 7]);
        assert_eq!(f.div(&f).unwrap(), PowerSeries::one(3));

        // valuation cancellation: (t + t^2) / t = 1 + t, order drops by one
        let num = PowerSeries::from_ints(&[0, 1, 1, 0]);
        let den = PowerSeries::from_ints(&[0, 1, 0, 0]);
        assert_eq!(num.div(&den).unwrap(), PowerSeries::from_ints(&[1, 1, 0]));
    }

    #[test]
    fn division_errors() {
        let den = PowerSeries::from_ints(&[0, 0, 1, 0]);
        let num = PowerSeries::from_ints(&[0, 1, 0, 0]);
        assert!(matches!(num.div(&den), Err(Error::DivisionByNonUnit { .. })));
        let zero = PowerSeries::zero(4);
        assert!(matches!(num.div(&zero), Err(Error::DivisionByNonUnit { .. })));
    }

    #[test]
    fn theta_examples() {
        let t3 = PowerSeries::monomial(3, int(1), 5);
        assert_eq!(t3.theta(), PowerSeries::monomial(3, int(3), 5));
        assert!(PowerSeries::constant(frac(5, 7), 4).theta().is_zero());
    }

    #[test]
    fn compose_examples() {
        let f = PowerSeries::from_ints(&[1, 1]);
        assert_eq!(f.compose_monomial(2), PowerSeries::from_ints(&[1, 0, 1]));
        let g = PowerSeries::from_ints(&[4, 5, 6]);
        assert_eq!(g.compose_monomial(1), g);
        assert_eq!(g.compose_monomial(3).order(), 6);
    }

    #[test]
    fn split_examples() {
        let f = PowerSeries::from_ints(&[1, 1, 1]);
        let (e, o) = f.even_odd_split();
        assert_eq!(e, PowerSeries::from_ints(&[1, 0, 1]));
        assert_eq!(o, PowerSeries::from_ints(&[0, 1, 0]));
        let (e, o) = e.even_odd_split();
        assert_eq!(e, PowerSeries::from_ints(&[1, 0, 1]));
        assert!(o.is_zero());
    }

    #[test]
    fn pow_examples() {
        let f = PowerSeries::from_ints(&[1, 1, 0, 0]);
        assert_eq!(f.pow(0).unwrap(), PowerSeries::one(3));
        assert_eq!(f.pow(2).unwrap(), PowerSeries::from_ints(&[1, 2, 1, 0]));
        let one_minus = PowerSeries::from_ints(&[1, -1, 0, 0, 0]);
        assert_eq!(one_minus.pow(-1).unwrap(), geometric(4));
        let t = PowerSeries::from_ints(&[0, 1, 0]);
        assert!(t.pow(-2).is_err());
    }

    #[test]
    fn product_examples() {
        assert_eq!(PowerSeries::product_one_minus(0, 6), PowerSeries::one(6));
        assert_eq!(
            PowerSeries::product_one_minus(-24, 3),
            PowerSeries::from_ints(&[1, 24, 324, 3200])
        );
        assert_eq!(
            PowerSeries::product_one_minus(1, 5),
            PowerSeries::from_ints(&[1, -1, -1, 0, 0, 1])
        );
    }

    #[test]
    fn agreement_reports_range() {
        let a = PowerSeries::from_ints(&[1, 2, 3, 4]);
        let b = PowerSeries::from_ints(&[1, 2, 9]);
        let ag = a.agreement(&b);
        assert_eq!(ag.compared_through, 2);
        assert_eq!(ag.first_difference, Some(2));
        assert!(a.agreement(&a.truncate(1)).holds());
    }

    #[test]
    fn display_is_readable() {
        let f = PowerSeries::new(vec![frac(-1, 24), int(1), int(0)]);
        assert_eq!(f.to_string(), "-1/24 + (1)*t + O(t^3)");
    }
}
