//! Truncated formal power series in `q` with exact rational coefficients.
//!
//! A series is either `Exact` (a genuine polynomial, all coefficients known) or
//! truncated `At(D)`, meaning coefficients of `q^D` and above are unknown.
//! Binary operations meet the two truncation orders so a result never silently
//! claims knowledge it does not have.

use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Truncation state of a [`QSeries`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trunc {
    /// Every coefficient is known; the value is an honest polynomial.
    Exact,
    /// Coefficients of `q^D` and above are unrepresented and unknown.
    At(usize),
}

impl Trunc {
    pub fn meet(self, other: Trunc) -> Trunc {
        match (self, other) {
            (Trunc::Exact, t) | (t, Trunc::Exact) => t,
            (Trunc::At(a), Trunc::At(b)) => Trunc::At(a.min(b)),
        }
    }

    /// Upper bound on coefficient indices that may be stored (exclusive).
    fn cap(self) -> usize {
        match self {
            Trunc::Exact => usize::MAX,
            Trunc::At(d) => d,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
    trunc: Trunc,
}

impl QSeries {
    pub fn new(mut coeffs: Vec<Rational>, trunc: Trunc) -> Self {
        coeffs.truncate(trunc.cap());
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QSeries { coeffs, trunc }
    }

    pub fn zero() -> Self {
        QSeries { coeffs: Vec::new(), trunc: Trunc::Exact }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c], Trunc::Exact)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// The monomial `c * q^k`, exact.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, Trunc::Exact)
    }

    /// The exact polynomial `1 - q`.
    pub fn one_minus_q() -> Self {
        Self::new(vec![Rational::one(), -Rational::one()], Trunc::Exact)
    }

    /// Geometric series `1/(1-q)` truncated at order `d`.
    pub fn geometric(d: usize) -> Self {
        Self::new(vec![Rational::one(); d], Trunc::At(d))
    }

    pub fn trunc(&self) -> Trunc {
        self.trunc
    }

    /// Coefficient of `q^i`; indices beyond the stored length read as zero.
    /// The caller is responsible for staying below the truncation order.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the highest stored nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.meet(other.trunc);
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        QSeries::new(coeffs, trunc)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            trunc: self.trunc,
        }
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        if c.is_zero() {
            return QSeries { coeffs: Vec::new(), trunc: self.trunc };
        }
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            trunc: self.trunc,
        }
    }

    /// Cauchy product, truncated at the meet of the operands' orders.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.meet(other.trunc);
        if self.is_zero() || other.is_zero() {
            return QSeries { coeffs: Vec::new(), trunc };
        }
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = full.min(trunc.cap());
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries::new(coeffs, trunc)
    }

    /// Multiplicative inverse as a truncated series. An exact constant inverts
    /// exactly; anything else needs a finite truncation order to invert into.
    pub fn invert(&self) -> Result<QSeries> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        match self.trunc {
            Trunc::Exact => {
                if self.coeffs.len() == 1 {
                    Ok(QSeries::constant(c0.recip()))
                } else {
                    Err(Error::TruncationTooSmall { have: usize::MAX, need: 0 })
                }
            }
            Trunc::At(d) => {
                let mut inv = vec![Rational::zero(); d];
                inv[0] = c0.recip();
                for i in 1..d {
                    let mut s = Rational::zero();
                    for j in 1..=i {
                        let a = self.coeff(j);
                        if !a.is_zero() {
                            s += a * &inv[i - j];
                        }
                    }
                    inv[i] = -s / &c0;
                }
                Ok(QSeries::new(inv, Trunc::At(d)))
            }
        }
    }

    /// Substitute `q -> -q`.
    pub fn negate_q(&self) -> QSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        QSeries { coeffs, trunc: self.trunc }
    }

    /// Substitute `q -> q^k`. Coefficients at indices not divisible by `k` are
    /// genuinely zero, so a series known below `D` is known below `k*D`.
    pub fn power_q(&self, k: usize) -> QSeries {
        assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        let trunc = match self.trunc {
            Trunc::Exact => Trunc::Exact,
            Trunc::At(d) => Trunc::At(d.saturating_mul(k)),
        };
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().saturating_mul(k)];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] = c.clone();
            }
        }
        QSeries::new(coeffs, trunc)
    }

    /// Certify the value is an exact polynomial of degree at most `max_degree`:
    /// every known coefficient above it must vanish, and for a truncated series
    /// the truncation must lie strictly above `max_degree`.
    pub fn exact_polynomial(&self, max_degree: usize) -> Result<QSeries> {
        if let Trunc::At(d) = self.trunc {
            if max_degree >= d {
                return Err(Error::TruncationTooSmall { have: d, need: max_degree + 1 });
            }
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > max_degree && !c.is_zero() {
                return Err(Error::NotPolynomial {
                    power: i,
                    max_degree,
                    coeff: c.to_string(),
                });
            }
        }
        Ok(QSeries::new(self.coeffs.clone(), Trunc::Exact))
    }

    /// Exact division by `1 - q`. On an exact polynomial this demands zero
    /// remainder (the value at q = 1 must vanish); on a truncated series it is
    /// multiplication by the geometric series.
    pub fn div_one_minus_q(&self) -> Result<QSeries> {
        match self.trunc {
            Trunc::Exact => {
                if self.is_zero() {
                    return Ok(QSeries::zero());
                }
                // (1-q) * b = c  =>  b_i = c_i + b_{i-1}
                let mut out = Vec::with_capacity(self.coeffs.len());
                let mut acc = Rational::zero();
                for c in &self.coeffs {
                    acc += c;
                    out.push(acc.clone());
                }
                let rem = out.pop().expect("nonempty");
                if !rem.is_zero() {
                    return Err(Error::NotPolynomial {
                        power: self.coeffs.len() - 1,
                        max_degree: self.coeffs.len().saturating_sub(2),
                        coeff: rem.to_string(),
                    });
                }
                Ok(QSeries::new(out, Trunc::Exact))
            }
            Trunc::At(d) => Ok(self.mul(&QSeries::geometric(d))),
        }
    }

    /// Forget coefficients from `q^d` on.
    pub fn truncate(&self, d: usize) -> QSeries {
        QSeries::new(self.coeffs.clone(), self.trunc.meet(Trunc::At(d)))
    }

    /// Equality of all coefficients below the meet of the truncation orders.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        let cap = self.trunc.meet(other.trunc).cap();
        let len = self.coeffs.len().max(other.coeffs.len()).min(cap);
        (0..len).all(|i| self.coeff(i) == other.coeff(i))
    }

    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries({}, {:?})", self, self.trunc)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let qpart = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{qpart}")?;
            } else {
                write!(f, "{mag}*{qpart}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qs(coeffs: &[i64], trunc: Trunc) -> QSeries {
        QSeries::new(coeffs.iter().map(|&c| rat_int(c)).collect(), trunc)
    }

    #[test]
    fn geometric_inverts_one_minus_q() {
        for d in 1..=64 {
            let g = QSeries::one_minus_q().truncate(d).invert().unwrap();
            assert!(g.mul(&QSeries::one_minus_q()).agrees_with(&QSeries::one()));
            assert!(g.agrees_with(&QSeries::geometric(d)));
        }
    }

    #[test]
    fn small_products() {
        let a = qs(&[1, 1], Trunc::Exact);
        let b = qs(&[1, 2], Trunc::Exact);
        assert_eq!(a.mul(&b), qs(&[1, 3, 2], Trunc::Exact));
        let f = qs(&[3, 0, 5], Trunc::At(8));
        assert_eq!(QSeries::zero().add(&f), f);
    }

    #[test]
    fn invert_constant() {
        assert_eq!(QSeries::from_int(2).invert().unwrap(), QSeries::constant(rat(1, 2)));
        assert_eq!(QSeries::one().invert().unwrap(), QSeries::one());
        assert!(matches!(
            qs(&[0, 1], Trunc::At(4)).invert(),
            Err(Error::ZeroConstantTerm)
        ));
    }

    #[test]
    fn substitutions() {
        assert_eq!(qs(&[1, 1, 1], Trunc::Exact).negate_q(), qs(&[1, -1, 1], Trunc::Exact));
        assert_eq!(qs(&[1, 1], Trunc::Exact).power_q(2), qs(&[1, 0, 1], Trunc::Exact));
        assert_eq!(qs(&[1, 1], Trunc::At(2)).power_q(2).trunc(), Trunc::At(4));
    }

    #[test]
    fn exact_polynomial_checks() {
        let one = QSeries::one_minus_q()
            .mul(&QSeries::geometric(10))
            .exact_polynomial(0)
            .unwrap();
        assert_eq!(one, QSeries::one());
        assert!(matches!(
            qs(&[1, 1], Trunc::Exact).exact_polynomial(0),
            Err(Error::NotPolynomial { power: 1, .. })
        ));
        assert!(matches!(
            qs(&[1], Trunc::At(3)).exact_polynomial(5),
            Err(Error::TruncationTooSmall { .. })
        ));
    }

    #[test]
    fn exact_division() {
        // (1-q)(1+2q) = 1 + q - 2q^2
        let c = qs(&[1, 1, -2], Trunc::Exact);
        assert_eq!(c.div_one_minus_q().unwrap(), qs(&[1, 2], Trunc::Exact));
        assert!(qs(&[1, 1], Trunc::Exact).div_one_minus_q().is_err());
    }

    fn arb_series() -> impl Strategy<Value = QSeries> {
        (
            prop::collection::vec(-9i64..=9, 0..6),
            prop_oneof![Just(Trunc::Exact), (1usize..10).prop_map(Trunc::At)],
        )
            .prop_map(|(c, t)| qs(&c, t))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert!(a.add(&b).agrees_with(&b.add(&a)));
            prop_assert!(a.mul(&b).agrees_with(&b.mul(&a)));
            prop_assert!(a.mul(&b.mul(&c)).agrees_with(&a.mul(&b).mul(&c)));
            prop_assert!(a.mul(&b.add(&c)).agrees_with(&a.mul(&b).add(&a.mul(&c))));
        }

        #[test]
        fn negate_q_is_involution(a in arb_series()) {
            prop_assert_eq!(a.negate_q().negate_q(), a);
        }

        #[test]
        fn power_q_is_ring_hom(a in arb_series(), b in arb_series(), k in 1usize..4) {
            prop_assert!(a.add(&b).power_q(k).agrees_with(&a.power_q(k).add(&b.power_q(k))));
            prop_assert!(a.mul(&b).power_q(k).agrees_with(&a.power_q(k).mul(&b.power_q(k))));
        }
    }
}
