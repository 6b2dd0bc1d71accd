//! Homogeneous symmetric functions with q-series coefficients, in any of the
//! five classical bases. The power-sum basis is canonical internally: there the
//! outer product concatenates parts, the Kronecker product is diagonal with
//! eigenvalue `z_lambda`, and plethysm is substitution.

mod chartab;
mod convert;
mod graded;

pub use chartab::{character_table, seed_character_table, table_is_memoized, CharacterTable};
pub use graded::GradedFamily;

use crate::combinat::{partitions_of, z_of, Partition};
use crate::exec;
use crate::qseries::{QSeries, Rational};
use crate::{Error, Result};
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::M),
            'e' => Some(Basis::E),
            'h' => Some(Basis::H),
            'p' => Some(Basis::P),
            's' => Some(Basis::S),
            _ => None,
        }
    }
}

/// A homogeneous symmetric function of fixed degree in a declared basis.
#[derive(Clone, PartialEq)]
pub struct SymFunc {
    degree: u32,
    basis: Basis,
    terms: BTreeMap<Partition, QSeries>,
}

impl SymFunc {
    pub fn zero(degree: u32, basis: Basis) -> Self {
        SymFunc { degree, basis, terms: BTreeMap::new() }
    }

    /// The unit of the outer product: degree 0, value 1.
    pub fn unit() -> Self {
        let mut f = SymFunc::zero(0, Basis::P);
        f.add_term(Partition::empty(), QSeries::one());
        f
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = SymFunc::zero(lambda.n(), basis);
        f.add_term(lambda, QSeries::one());
        f
    }

    pub fn h(n: u32) -> Self {
        Self::basis_element(Basis::H, Partition::single(n))
    }

    pub fn e(n: u32) -> Self {
        Self::basis_element(Basis::E, Partition::single(n))
    }

    pub fn p_of(lambda: Partition) -> Self {
        Self::basis_element(Basis::P, lambda)
    }

    pub fn s_of(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QSeries)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> QSeries {
        self.terms.get(lambda).cloned().unwrap_or_else(QSeries::zero)
    }

    /// Add `coeff * b_lambda` into this function, dropping zeros.
    pub fn add_term(&mut self, lambda: Partition, coeff: QSeries) {
        debug_assert_eq!(lambda.n(), self.degree);
        if coeff.is_zero() {
            // still record the truncation by meeting into an existing entry
            if let Some(existing) = self.terms.get_mut(&lambda) {
                let met = existing.add(&coeff);
                if met.is_zero() {
                    self.terms.remove(&lambda);
                } else {
                    *existing = met;
                }
            }
            return;
        }
        match self.terms.remove(&lambda) {
            None => {
                self.terms.insert(lambda, coeff);
            }
            Some(old) => {
                let sum = old.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(lambda, sum);
                }
            }
        }
    }

    pub(crate) fn with_basis(&self, basis: Basis) -> SymFunc {
        let mut f = self.clone();
        f.basis = basis;
        f
    }

    pub fn convert(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let p = convert::to_p(self);
        convert::from_p(&p, target)
    }

    pub fn to_p(&self) -> SymFunc {
        self.convert(Basis::P)
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (lam, c) in other.terms {
            out.add_term(lam, c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        self.map_coeffs(|q| q.scale(c))
    }

    pub fn scale_series(&self, s: &QSeries) -> SymFunc {
        self.map_coeffs(|q| q.mul(s))
    }

    pub fn negate_q(&self) -> SymFunc {
        self.map_coeffs(|q| q.negate_q())
    }

    pub fn truncate(&self, d: usize) -> SymFunc {
        self.map_coeffs(|q| q.truncate(d))
    }

    pub fn map_coeffs(&self, f: impl Fn(&QSeries) -> QSeries) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), f(c));
        }
        out
    }

    /// Fallible coefficient map; used for exact division and polynomial checks.
    pub fn try_map_coeffs(&self, f: impl Fn(&QSeries) -> Result<QSeries>) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, c) in &self.terms {
            out.add_term(lam.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Outer (induction) product, computed by part concatenation in p.
    pub fn outer_mul(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_p();
        let b = other.to_p();
        let mut out = SymFunc::zero(self.degree + other.degree, Basis::P);
        for (la, ca) in a.terms() {
            for (lb, cb) in b.terms() {
                out.add_term(la.concat(lb), ca.mul(cb));
            }
        }
        out
    }

    /// Kronecker (internal tensor) product: diagonal in the p-basis.
    pub fn kronecker(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let a = self.to_p();
        let b = other.to_p();
        let mut out = SymFunc::zero(self.degree, Basis::P);
        for (lam, ca) in a.terms() {
            let cb = b.terms.get(lam);
            if let Some(cb) = cb {
                let z = Rational::from(z_of(lam));
                out.add_term(lam.clone(), ca.mul(cb).scale(&z));
            }
        }
        Ok(out)
    }

    /// Hall inner product: `<p_lambda, p_mu> = delta z_lambda`.
    pub fn scalar_product(&self, other: &SymFunc) -> Result<QSeries> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let a = self.to_p();
        let b = other.to_p();
        let mut acc = QSeries::zero();
        for (lam, ca) in a.terms() {
            if let Some(cb) = b.terms.get(lam) {
                let z = Rational::from(z_of(lam));
                acc = acc.add(&ca.mul(cb).scale(&z));
            }
        }
        Ok(acc)
    }

    /// Plethysm `self[g]`. Outer q-coefficients are scalars; inside `p_k` the
    /// variable `q` transforms as `q -> q^k` and every part of `g` stretches
    /// by `k`.
    pub fn plethysm(&self, g: &SymFunc) -> Result<SymFunc> {
        if g.degree == 0 && !g.is_zero() {
            return Err(Error::InnerDegreeZero);
        }
        let out_degree = self.degree * g.degree;
        if g.is_zero() {
            return Ok(if self.degree == 0 {
                self.with_basis(Basis::P)
            } else {
                SymFunc::zero(out_degree, Basis::P)
            });
        }
        let f = self.to_p();
        let gp = g.to_p();
        let terms: Vec<(Partition, QSeries)> =
            f.terms.iter().map(|(l, c)| (l.clone(), c.clone())).collect();
        let result = exec::map_reduce(
            terms,
            |(lam, coeff)| {
                let mut prod = SymFunc::unit();
                for &k in lam.parts() {
                    prod = prod.outer_mul(&p_plethysm(k, &gp));
                }
                prod.scale_series(&coeff)
            },
            || SymFunc::zero(out_degree, Basis::P),
            |a, b| {
                if a.is_zero() {
                    b
                } else if b.is_zero() {
                    a
                } else {
                    a.add(&b)
                }
            },
        );
        // normalize the degree of an all-zero reduction
        Ok(if result.degree() == out_degree {
            result
        } else {
            SymFunc::zero(out_degree, Basis::P)
        })
    }

    /// Graded dimension of the underlying representation: `n!` times the
    /// coefficient of `p_{1^n}`.
    pub fn hilbert(&self) -> QSeries {
        let p = self.to_p();
        let ones = Partition::new(vec![1; self.degree as usize]);
        let mut fact = BigInt::one();
        for i in 1..=self.degree {
            fact *= BigInt::from(i);
        }
        p.coeff(&ones).scale(&Rational::from(fact))
    }

    /// True iff every Schur coefficient has nonnegative known q-coefficients.
    pub fn is_schur_positive(&self) -> bool {
        self.convert(Basis::S).terms.values().all(|c| c.is_nonneg())
    }

    /// True iff every Schur coefficient is a series of integers.
    pub fn is_schur_integral(&self) -> bool {
        self.convert(Basis::S).terms.values().all(|c| c.is_integral())
    }

    /// Coefficientwise agreement up to the common truncation order, basis-free.
    pub fn agrees_with(&self, other: &SymFunc) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let a = self.to_p();
        let b = other.to_p();
        for lam in partitions_of(self.degree) {
            if !a.coeff(&lam).agrees_with(&b.coeff(&lam)) {
                return false;
            }
        }
        true
    }

    /// Extract the coefficient of `q^k` as a symmetric function with constant
    /// coefficients, in the same basis.
    pub fn q_coefficient(&self, k: usize) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lam, c) in &self.terms {
            let v = c.coeff(k);
            if !v.is_zero() {
                out.add_term(lam.clone(), QSeries::constant(v));
            }
        }
        out
    }
}

/// `p_k[g]` for `g` in the p-basis: stretch every part by `k`, substitute
/// `q -> q^k` in every coefficient.
fn p_plethysm(k: u32, g_p: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(k * g_p.degree(), Basis::P);
    for (mu, c) in g_p.terms() {
        out.add_term(mu.stretch(k), c.power_q(k as usize));
    }
    out
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (lam, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}{}", c, self.basis.letter(), lam)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{rat, rat_int};

    fn s(parts: &[u32]) -> SymFunc {
        SymFunc::s_of(Partition::new(parts.to_vec()))
    }

    fn p(parts: &[u32]) -> SymFunc {
        SymFunc::p_of(Partition::new(parts.to_vec()))
    }

    #[test]
    fn h3_is_s3() {
        assert!(SymFunc::h(3).convert(Basis::S).agrees_with(&s(&[3])));
    }

    #[test]
    fn p2_in_schur_basis() {
        let expected = s(&[2]).sub(&s(&[1, 1]));
        assert!(p(&[2]).agrees_with(&expected));
    }

    #[test]
    fn s21_in_power_basis() {
        // s_{2,1} = (p_1^3 - p_3)/3, from the standard representation of S_3
        let expected = p(&[1, 1, 1]).scale(&rat(1, 3)).sub(&p(&[3]).scale(&rat(1, 3)));
        assert!(s(&[2, 1]).agrees_with(&expected));
    }

    #[test]
    fn outer_products() {
        // Pieri: h_2 * e_1 = s_3 + s_{2,1}
        let prod = SymFunc::h(2).outer_mul(&SymFunc::e(1));
        assert!(prod.agrees_with(&s(&[3]).add(&s(&[2, 1]))));
        // unit
        let f = s(&[2, 1]);
        assert!(f.outer_mul(&SymFunc::unit()).agrees_with(&f));
        // p-concatenation
        assert!(p(&[2]).outer_mul(&p(&[3])).agrees_with(&p(&[3, 2])));
    }

    #[test]
    fn kronecker_products() {
        let f = s(&[2, 1]).add(&s(&[3]).scale_series(&QSeries::monomial(rat_int(1), 2)));
        assert!(s(&[3]).kronecker(&f).unwrap().agrees_with(&f));
        assert!(s(&[1, 1]).kronecker(&s(&[1, 1])).unwrap().agrees_with(&s(&[2])));
        let p21 = p(&[2, 1]);
        assert!(p21.kronecker(&p21).unwrap().agrees_with(&p21.scale(&rat_int(2))));
        assert!(matches!(
            s(&[2]).kronecker(&s(&[3])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn plethysm_basics() {
        assert!(p(&[2]).plethysm(&p(&[3])).unwrap().agrees_with(&p(&[6])));
        let h2h2 = SymFunc::h(2).plethysm(&SymFunc::h(2)).unwrap();
        assert!(h2h2.agrees_with(&s(&[4]).add(&s(&[2, 2]))));
        assert!(matches!(
            SymFunc::h(2).plethysm(&SymFunc::unit()),
            Err(Error::InnerDegreeZero)
        ));
    }

    #[test]
    fn plethysm_subtraction_example() {
        // h_2[(1-q) p_1] = h_2 - q h_1 e_1 + q^2 e_2
        let inner = p(&[1]).scale_series(&QSeries::one_minus_q());
        let got = SymFunc::h(2).plethysm(&inner).unwrap();
        let q = QSeries::monomial(rat_int(1), 1);
        let q2 = QSeries::monomial(rat_int(1), 2);
        let expected = SymFunc::h(2)
            .to_p()
            .sub(&SymFunc::h(1).outer_mul(&SymFunc::e(1)).scale_series(&q))
            .add(&SymFunc::e(2).to_p().scale_series(&q2));
        assert!(got.agrees_with(&expected));
    }

    #[test]
    fn hilbert_and_scalar() {
        assert_eq!(s(&[3]).hilbert(), QSeries::one());
        let f = s(&[2]).add(&s(&[1, 1]).scale_series(&QSeries::monomial(rat_int(1), 1)));
        assert_eq!(s(&[2]).scalar_product(&s(&[2])).unwrap(), QSeries::one());
        assert_eq!(s(&[2]).scalar_product(&s(&[1, 1])).unwrap(), QSeries::zero());
        assert_eq!(
            f.scalar_product(&s(&[1, 1])).unwrap(),
            QSeries::monomial(rat_int(1), 1)
        );
        // <h_n, f> extracts the trivial multiplicity
        assert_eq!(SymFunc::h(2).scalar_product(&f).unwrap(), QSeries::one());
    }

    #[test]
    fn schur_positivity() {
        let good = s(&[2]).add(&s(&[1, 1]).scale_series(&QSeries::monomial(rat_int(1), 1)));
        assert!(good.is_schur_positive());
        assert!(!p(&[2]).is_schur_positive());
    }

    #[test]
    fn round_trips_all_bases() {
        for n in 0..=9u32 {
            for lam in partitions_of(n) {
                for basis in [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S] {
                    let f = SymFunc::basis_element(basis, lam.clone());
                    for target in [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S] {
                        let back = f.convert(target).convert(basis);
                        assert!(back.agrees_with(&f), "n={n} {lam} {basis:?}->{target:?}");
                        assert_eq!(back.convert(basis).terms.len(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_commutes_and_associates() {
        // deterministic pseudo-random functions of equal degree
        let n = 4;
        let funcs: Vec<SymFunc> = (0..3)
            .map(|i| {
                let mut f = SymFunc::zero(n, Basis::P);
                for (j, lam) in partitions_of(n).into_iter().enumerate() {
                    let c = rat_int(((i * 7 + j * 3) % 5) as i64 - 2);
                    f.add_term(lam, QSeries::constant(c));
                }
                f
            })
            .collect();
        let (a, b, c) = (&funcs[0], &funcs[1], &funcs[2]);
        assert!(a
            .kronecker(b)
            .unwrap()
            .agrees_with(&b.kronecker(a).unwrap()));
        assert!(a
            .kronecker(&b.kronecker(c).unwrap())
            .unwrap()
            .agrees_with(&a.kronecker(b).unwrap().kronecker(c).unwrap()));
        let sn = SymFunc::s_of(Partition::single(n));
        assert!(sn.kronecker(a).unwrap().agrees_with(a));
    }
}
