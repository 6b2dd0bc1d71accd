//! Sequences of symmetric functions graded by degree. The degree grading plays
//! the role of the generating-function variable `t`: component `n` carries the
//! coefficient of `t^n`, positionally, never symbolically.

use crate::combinat::partitions_of;
use crate::exec;
use crate::qseries::QSeries;
use crate::Result;

use super::SymFunc;

#[derive(Clone, Debug)]
pub struct GradedFamily {
    /// `components[i]` has degree `i + 1`.
    components: Vec<SymFunc>,
}

impl GradedFamily {
    /// Build from components of degrees `1..=max_n`.
    pub fn new(components: Vec<SymFunc>) -> Self {
        for (i, f) in components.iter().enumerate() {
            assert_eq!(f.degree() as usize, i + 1, "component degree mismatch");
        }
        GradedFamily { components }
    }

    pub fn from_fn(max_n: u32, f: impl FnMut(u32) -> SymFunc) -> Self {
        Self::new((1..=max_n).map(f).collect())
    }

    pub fn max_n(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn component(&self, n: u32) -> &SymFunc {
        assert!(n >= 1 && n <= self.max_n());
        &self.components[(n - 1) as usize]
    }

    pub fn components(&self) -> &[SymFunc] {
        &self.components
    }

    pub fn map(&self, f: impl FnMut(&SymFunc) -> SymFunc) -> GradedFamily {
        GradedFamily::new(self.components.iter().map(f).collect())
    }

    /// Scale every component by a fixed q-series (e.g. `1 - q`).
    pub fn scale_series(&self, s: &QSeries) -> GradedFamily {
        self.map(|f| f.scale_series(s))
    }

    /// Componentwise Kronecker product of two families.
    pub fn kronecker(&self, other: &GradedFamily) -> Result<GradedFamily> {
        assert_eq!(self.max_n(), other.max_n());
        let mut out = Vec::with_capacity(self.components.len());
        for (a, b) in self.components.iter().zip(&other.components) {
            out.push(a.kronecker(b)?);
        }
        Ok(GradedFamily::new(out))
    }

    /// Plethystic exponential `Exp(f) = sum_k h_k[f]`, componentwise:
    /// `Exp(f)_n = sum_{lambda |- n} prod_j h_{m_j}[f_j]`. The degree-0
    /// component (the constant 1) is dropped, matching `Exp(...) - 1`.
    pub fn plethystic_exp(&self) -> Result<GradedFamily> {
        let max_n = self.max_n();
        let mut out = Vec::with_capacity(max_n as usize);
        for n in 1..=max_n {
            let component = exec::map_reduce(
                partitions_of(n),
                |lam| {
                    let mut prod = SymFunc::unit();
                    for (j, m) in lam.to_exponential().iter() {
                        let pleth = SymFunc::h(m)
                            .plethysm(self.component(j))
                            .expect("inner degree positive");
                        prod = prod.outer_mul(&pleth);
                    }
                    prod
                },
                || SymFunc::zero(n, super::Basis::P),
                |a, b| if a.is_zero() { b } else { a.add(&b) },
            );
            out.push(if component.degree() == n {
                component
            } else {
                SymFunc::zero(n, super::Basis::P)
            });
        }
        Ok(GradedFamily::new(out))
    }
}
