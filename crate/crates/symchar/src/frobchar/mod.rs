//! The named graded Frobenius characters and the identities between them.
//!
//! `C_n` and `D_n` (configuration spaces), `OT_n` (Orlik-Terao), `M_n` (the
//! quotient by the linear relations), `R_n`/`Lambda_n` (symmetric/exterior
//! algebra on the standard representation), `T_n` (full-support submodule),
//! and the Lyndon symmetric function `l_n`. Finite objects come out as exact
//! polynomials in `q`; the infinite ones as series truncated at a caller-chosen
//! order `D`.

pub mod verify;

use crate::combinat::{divisors, moebius, partitions_of, z_of, Partition};
use crate::exec;
use crate::qseries::{rat_int, QSeries, Rational};
use crate::symfunc::{Basis, GradedFamily, SymFunc};
use crate::Result;
use num::BigInt;

/// Names of the implemented characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharName {
    C,
    D,
    DAlt,
    OT,
    M,
    R,
    T,
    Lambda,
    LambdaP,
    Lyndon,
}

/// A computed character together with its provenance.
#[derive(Clone, Debug)]
pub struct NamedCharacter {
    pub name: CharName,
    pub n: u32,
    pub value: SymFunc,
}

impl NamedCharacter {
    /// Compute by name. `max_q_degree` is required for the honest power series
    /// (OT, M, R, T) and ignored for the exact polynomials.
    pub fn compute(name: CharName, n: u32, max_q_degree: Option<usize>) -> Result<NamedCharacter> {
        let d = max_q_degree.unwrap_or(n as usize + 1);
        let value = match name {
            CharName::C => ch_c(n),
            CharName::D => ch_d(n),
            CharName::DAlt => ch_d_alt(n)?,
            CharName::OT => ch_ot(n, d),
            CharName::M => ch_m(n, d)?,
            CharName::R => ch_r(n, d),
            CharName::T => ch_t(n, d),
            CharName::Lambda => ch_lambda(n),
            CharName::LambdaP => ch_lambda_p_primed(n),
            CharName::Lyndon => lyndon(n),
        };
        Ok(NamedCharacter { name, n, value })
    }
}

/// The Lyndon symmetric function `l_n = (1/n) sum_{d|n} mu(d) p_d^{n/d}`.
pub fn lyndon(n: u32) -> SymFunc {
    assert!(n >= 1);
    let mut f = SymFunc::zero(n, Basis::P);
    for d in divisors(n as u64) {
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let lam = Partition::new(vec![d as u32; (n as u64 / d) as usize]);
        let c = Rational::new(BigInt::from(mu), BigInt::from(n));
        f.add_term(lam, QSeries::constant(c));
    }
    f
}

/// `ch_{Lambda_n} = sum_{i=0}^{n-1} q^i s_{n-i,1^i}`, the exterior algebra on
/// the standard representation placed in degree one.
pub fn ch_lambda(n: u32) -> SymFunc {
    assert!(n >= 1);
    let mut f = SymFunc::zero(n, Basis::S);
    for i in 0..n {
        let mut parts = vec![n - i];
        parts.extend(std::iter::repeat(1).take(i as usize));
        f.add_term(Partition::new(parts), QSeries::monomial(rat_int(1), i as usize));
    }
    f
}

/// `ch'_{Lambda^. P_n} = sum_{k=0}^{n} (-q)^k h_{n-k} e_k`, the primed
/// character of the exterior algebra on the permutation representation.
/// Also satisfies `ch'_{Lambda^. P_n} = (1-q) * ch_{Lambda_n}(-q)`.
pub fn ch_lambda_p_primed(n: u32) -> SymFunc {
    if n == 0 {
        return SymFunc::unit();
    }
    let mut f = SymFunc::zero(n, Basis::P);
    for k in 0..=n {
        let mut c = rat_int(1);
        if k % 2 == 1 {
            c = -c;
        }
        let term = SymFunc::h(n - k)
            .outer_mul(&SymFunc::e(k))
            .scale_series(&QSeries::monomial(c, k as usize));
        f = f.add(&term);
    }
    debug_assert!(f.agrees_with(&ch_lambda(n).negate_q().scale_series(&QSeries::one_minus_q())));
    f
}

/// `h_n[X/(1-q)]` truncated at order `d`: in the p-basis the coefficient of
/// `p_lambda` is `(1/z_lambda) prod_i 1/(1 - q^{lambda_i})`.
pub fn h_over_one_minus_q(n: u32, d: usize) -> SymFunc {
    let mut f = SymFunc::zero(n, Basis::P);
    for lam in partitions_of(n) {
        let mut c = QSeries::constant(Rational::from(z_of(&lam)).recip()).truncate(d);
        for &part in lam.parts() {
            let geom = QSeries::geometric(d).power_q(part as usize).truncate(d);
            c = c.mul(&geom);
        }
        f.add_term(lam, c);
    }
    f
}

/// `ch_{R_n} = (1-q) h_n[X/(1-q)]`, the symmetric algebra on the standard
/// representation, truncated at order `d`.
pub fn ch_r(n: u32, d: usize) -> SymFunc {
    assert!(n >= 1 && d >= 1);
    h_over_one_minus_q(n, d).scale_series(&QSeries::one_minus_q())
}

/// `ch_{C_n} = sum_{lambda |- n} q^{n - l(lambda)} prod_j h_{m_j}[l_j]`.
pub fn ch_c(n: u32) -> SymFunc {
    assert!(n >= 1);
    sum_over_partitions(n, |lam| {
        let e = lam.to_exponential();
        let mut prod = SymFunc::unit();
        for (j, m) in e.iter() {
            prod = prod.outer_mul(&SymFunc::h(m).plethysm(&lyndon(j)).expect("positive degree"));
        }
        prod.scale_series(&QSeries::monomial(rat_int(1), (n - e.length()) as usize))
    })
}

/// Numerator of the plethystic formula for `ch_{D_n}`:
/// `sum_{lambda} prod_j h_{m_j}[q^{j-1}(1-q) l_j]`, an exact polynomial.
fn ch_d_numerator(n: u32) -> SymFunc {
    sum_over_partitions(n, |lam| {
        let mut prod = SymFunc::unit();
        for (j, m) in lam.to_exponential().iter() {
            let scale = QSeries::monomial(rat_int(1), (j - 1) as usize).mul(&QSeries::one_minus_q());
            let inner = lyndon(j).scale_series(&scale);
            prod = prod.outer_mul(&SymFunc::h(m).plethysm(&inner).expect("positive degree"));
        }
        prod
    })
}

/// `ch_{D_n}`: the numerator above divided exactly by `1 - q`. The division
/// must leave no remainder; a failure signals a formula bug, not bad data.
pub fn ch_d(n: u32) -> SymFunc {
    assert!(n >= 1);
    let quotient = ch_d_numerator(n)
        .try_map_coeffs(|c| c.div_one_minus_q())
        .expect("(1-q) divides the D_n numerator exactly");
    let max_deg = n.saturating_sub(2) as usize;
    quotient
        .try_map_coeffs(|c| c.exact_polynomial(max_deg))
        .expect("ch_D_n is a polynomial of degree <= n-2")
}

/// `ch_{D_n}` by the spectral-sequence formula:
/// `sum_lambda q^{n-l(lambda)} prod_j ch'_{Lambda^. P_{m_j}}[l_j] / (1-q)`.
pub fn ch_d_alt(n: u32) -> Result<SymFunc> {
    assert!(n >= 1);
    let numerator = sum_over_partitions(n, |lam| {
        let e = lam.to_exponential();
        let mut prod = SymFunc::unit();
        for (j, m) in e.iter() {
            let outer = ch_lambda_p_primed(m);
            prod = prod.outer_mul(&outer.plethysm(&lyndon(j)).expect("positive degree"));
        }
        prod.scale_series(&QSeries::monomial(rat_int(1), (n - e.length()) as usize))
    });
    numerator.try_map_coeffs(|c| c.div_one_minus_q())
}

/// The polynomial form of `ch_{D_n}`:
/// `sum_lambda q^{n-l(lambda)} (1-q)^{c_lambda - 1} prod_j ch'_{Lambda_{m_j}}[l_j]`,
/// a priori of degree at most `n-1`.
pub fn ch_d_remark(n: u32) -> SymFunc {
    assert!(n >= 1);
    sum_over_partitions(n, |lam| {
        let e = lam.to_exponential();
        let mut prod = SymFunc::unit();
        for (j, m) in e.iter() {
            let outer = ch_lambda(m).negate_q();
            prod = prod.outer_mul(&outer.plethysm(&lyndon(j)).expect("positive degree"));
        }
        let mut scale = QSeries::monomial(rat_int(1), (n - e.length()) as usize);
        for _ in 1..e.support_count() {
            scale = scale.mul(&QSeries::one_minus_q());
        }
        prod.scale_series(&scale)
    })
}

/// `ch_{OT_n} = sum_lambda q^{n-l(lambda)} prod_j h_{m_j}[l_j * ch_{R_j}]`,
/// truncated at order `d`.
pub fn ch_ot(n: u32, d: usize) -> SymFunc {
    assert!(n >= 1 && d >= 1);
    let inner: Vec<SymFunc> = (0..=n)
        .map(|j| {
            if j == 0 {
                SymFunc::unit()
            } else {
                lyndon(j).kronecker(&ch_r(j, d)).expect("equal degrees")
            }
        })
        .collect();
    sum_over_partitions(n, |lam| {
        let e = lam.to_exponential();
        let mut prod = SymFunc::unit();
        for (j, m) in e.iter() {
            prod = prod.outer_mul(
                &SymFunc::h(m)
                    .plethysm(&inner[j as usize])
                    .expect("positive degree"),
            );
        }
        prod.scale_series(&QSeries::monomial(rat_int(1), (n - e.length()) as usize))
    })
}

/// `ch_{M_n} = ch_{OT_n} * ch'_{Lambda_n}`, certified to be an exact polynomial
/// of degree at most `n-2`. Requires `d >= n` so the vanishing of the
/// coefficients of `q^{n-1}, ..., q^{d-1}` can actually be checked.
pub fn ch_m(n: u32, d: usize) -> Result<SymFunc> {
    assert!(n >= 1);
    let ot = ch_ot(n, d);
    let lambda_primed = ch_lambda(n).negate_q();
    let m = ot.kronecker(&lambda_primed)?;
    let max_deg = n.saturating_sub(2) as usize;
    m.try_map_coeffs(|c| c.exact_polynomial(max_deg))
}

/// `ch_{T_n} = q^{n-1} l_n * ch_{R_n}`, truncated at order `d`.
pub fn ch_t(n: u32, d: usize) -> SymFunc {
    assert!(n >= 1 && d >= 1);
    lyndon(n)
        .kronecker(&ch_r(n, d))
        .expect("equal degrees")
        .scale_series(&QSeries::monomial(rat_int(1), (n - 1) as usize))
}

/// Solve the support decomposition `ch_{OT_n} = sum_lambda prod_j h_{m_j}[ch_{T_j}]`
/// for `ch_{T_n}`, given `ch_{OT_k}` for all `k <= n` (formula or oracle). The
/// triangular system recurses on smaller degrees.
pub fn ch_t_from_ot(n: u32, ot_by_k: &[SymFunc]) -> Result<Vec<SymFunc>> {
    assert_eq!(ot_by_k.len(), n as usize, "need ch_OT_k for k = 1..=n");
    let mut t: Vec<SymFunc> = Vec::with_capacity(n as usize);
    for k in 1..=n {
        let mut rest = SymFunc::zero(k, Basis::P);
        for lam in partitions_of(k) {
            if lam.parts() == [k] {
                continue;
            }
            let mut prod = SymFunc::unit();
            for (j, m) in lam.to_exponential().iter() {
                prod = prod.outer_mul(&SymFunc::h(m).plethysm(&t[(j - 1) as usize])?);
            }
            rest = rest.add(&prod);
        }
        t.push(ot_by_k[(k - 1) as usize].sub(&rest));
    }
    Ok(t)
}

/// The generating-function family `L = sum_n q^{n-1} t^n l_n`.
pub fn lyndon_family(max_n: u32) -> GradedFamily {
    GradedFamily::from_fn(max_n, |n| {
        lyndon(n).scale_series(&QSeries::monomial(rat_int(1), (n - 1) as usize))
    })
}

/// Components of `(Exp((1-q)L) - 1)/(1-q)`; each equals `ch_{D_n}`.
pub fn gen_fun_d(max_n: u32) -> Result<GradedFamily> {
    let arg = lyndon_family(max_n).scale_series(&QSeries::one_minus_q());
    let exp = arg.plethystic_exp()?;
    let mut out = Vec::with_capacity(max_n as usize);
    for n in 1..=max_n {
        out.push(exp.component(n).try_map_coeffs(|c| c.div_one_minus_q())?);
    }
    Ok(GradedFamily::new(out))
}

/// Components of `Exp((1-q)(L * H[X/(1-q)])) - 1` truncated at `d`; each
/// equals `ch_{OT_n}`. The degree-n component of `H[X/(1-q)]` is
/// `h_n[X/(1-q)]`, and the Kronecker product pairs equal degrees.
pub fn gen_fun_ot(max_n: u32, d: usize) -> Result<GradedFamily> {
    let arg = GradedFamily::from_fn(max_n, |n| {
        let scale = QSeries::monomial(rat_int(1), (n - 1) as usize).mul(&QSeries::one_minus_q());
        lyndon(n)
            .kronecker(&h_over_one_minus_q(n, d))
            .expect("equal degrees")
            .scale_series(&scale)
    });
    arg.plethystic_exp()
}

/// Parallel sum over all partitions of `n`.
fn sum_over_partitions(n: u32, term: impl Fn(&Partition) -> SymFunc + Sync + Send) -> SymFunc {
    let result = exec::map_reduce(
        partitions_of(n),
        |lam| term(&lam),
        || SymFunc::zero(n, Basis::P),
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
    if result.degree() == n {
        result
    } else {
        SymFunc::zero(n, Basis::P)
    }
}

/// Hilbert series `prod_{i=1}^{k} (1 + i q)` as an exact polynomial.
pub fn rising_product(k: u32) -> QSeries {
    let mut acc = QSeries::one();
    for i in 1..=k {
        let factor = QSeries::new(
            vec![Rational::from(BigInt::from(1)), Rational::from(BigInt::from(i))],
            crate::qseries::Trunc::Exact,
        );
        acc = acc.mul(&factor);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    fn s(parts: &[u32]) -> SymFunc {
        SymFunc::s_of(Partition::new(parts.to_vec()))
    }

    fn q_pow(k: usize) -> QSeries {
        QSeries::monomial(rat_int(1), k)
    }

    #[test]
    fn lyndon_values() {
        assert!(lyndon(1).agrees_with(&SymFunc::p_of(Partition::single(1))));
        assert!(lyndon(3).agrees_with(&s(&[2, 1])));
        // l_6 = (p_1^6 - p_2^3 - p_3^2 + p_6)/6
        let l6 = lyndon(6);
        assert_eq!(l6.coeff(&Partition::new(vec![1; 6])), QSeries::constant(rat(1, 6)));
        assert_eq!(l6.coeff(&Partition::new(vec![2, 2, 2])), QSeries::constant(rat(-1, 6)));
        assert_eq!(l6.coeff(&Partition::new(vec![3, 3])), QSeries::constant(rat(-1, 6)));
        assert_eq!(l6.coeff(&Partition::new(vec![6])), QSeries::constant(rat(1, 6)));
        assert_eq!(l6.num_terms(), 4);
    }

    #[test]
    fn lambda_characters() {
        assert!(ch_lambda(1).agrees_with(&s(&[1])));
        let expected = s(&[2]).add(&s(&[1, 1]).scale_series(&q_pow(1)));
        assert!(ch_lambda(2).agrees_with(&expected));
        // ch'_{Lambda^. P_2} = s_2 - q(s_2 + s_11) + q^2 s_11
        let lp2 = ch_lambda_p_primed(2).convert(Basis::S);
        let want = s(&[2])
            .sub(&s(&[2]).add(&s(&[1, 1])).scale_series(&q_pow(1)))
            .add(&s(&[1, 1]).scale_series(&q_pow(2)));
        assert!(lp2.agrees_with(&want));
    }

    #[test]
    fn ch_r_small() {
        assert!(ch_r(1, 6).agrees_with(&s(&[1])));
        // R_2: S^d(sign) alternates trivial/sign
        let r2 = ch_r(2, 4);
        let want = s(&[2])
            .add(&s(&[1, 1]).scale_series(&q_pow(1)))
            .add(&s(&[2]).scale_series(&q_pow(2)))
            .add(&s(&[1, 1]).scale_series(&q_pow(3)));
        assert!(r2.agrees_with(&want));
    }

    #[test]
    fn ch_r_degree_two_coefficient_at_n3() {
        // q^2 coefficient of ch_{R_3} is s_3 + s_21, the symmetric square of
        // the standard representation.
        let r3 = ch_r(3, 4).convert(Basis::S).q_coefficient(2);
        assert!(r3.agrees_with(&s(&[3]).add(&s(&[2, 1]))));
    }

    #[test]
    fn ch_c_small() {
        assert!(ch_c(1).agrees_with(&s(&[1])));
        let want2 = s(&[2]).add(&s(&[1, 1]).scale_series(&q_pow(1)));
        assert!(ch_c(2).agrees_with(&want2));
        let want3 = s(&[3])
            .add(&s(&[2, 1]).add(&s(&[1, 1, 1])).scale_series(&q_pow(1)))
            .add(&s(&[2, 1]).scale_series(&q_pow(2)));
        assert!(ch_c(3).agrees_with(&want3));
    }

    #[test]
    fn ch_d_small() {
        assert!(ch_d(1).agrees_with(&s(&[1])));
        assert!(ch_d(2).agrees_with(&s(&[2])));
        let want3 = s(&[3]).add(&s(&[1, 1, 1]).scale_series(&q_pow(1)));
        assert!(ch_d(3).agrees_with(&want3));
        assert!(ch_d_alt(3).unwrap().agrees_with(&want3));
        assert!(ch_d_remark(3).agrees_with(&want3));
    }

    #[test]
    fn ch_ot_small() {
        assert!(ch_ot(1, 4).agrees_with(&s(&[1])));
        let want2 = s(&[2])
            .add(&s(&[1, 1]).scale_series(&q_pow(1)))
            .add(&s(&[2]).scale_series(&q_pow(2)))
            .add(&s(&[1, 1]).scale_series(&q_pow(3)));
        assert!(ch_ot(2, 4).agrees_with(&want2));
        // degree-1 piece of OT_3 is spanned by e_12, e_13, e_23 with the
        // sign-permutation action
        let ot3_q1 = ch_ot(3, 3).convert(Basis::S).q_coefficient(1);
        assert!(ot3_q1.agrees_with(&s(&[2, 1]).add(&s(&[1, 1, 1]))));
    }

    #[test]
    fn ch_m_small() {
        assert!(ch_m(1, 2).unwrap().agrees_with(&s(&[1])));
        assert!(ch_m(2, 4).unwrap().agrees_with(&s(&[2])));
        let want3 = s(&[3]).add(&s(&[1, 1, 1]).scale_series(&q_pow(1)));
        assert!(ch_m(3, 4).unwrap().agrees_with(&want3));
    }

    #[test]
    fn ch_t_small() {
        assert!(ch_t(1, 4).agrees_with(&s(&[1])));
        let want2 = s(&[1, 1])
            .scale_series(&q_pow(1))
            .add(&s(&[2]).scale_series(&q_pow(2)))
            .add(&s(&[1, 1]).scale_series(&q_pow(3)));
        assert!(ch_t(2, 4).agrees_with(&want2));
        // q^2 coefficient at n=3: l_3 * s_3 = s_21
        let t3 = ch_t(3, 4).convert(Basis::S).q_coefficient(2);
        assert!(t3.agrees_with(&s(&[2, 1])));
    }

    #[test]
    fn t_from_ot_small() {
        let ots: Vec<SymFunc> = (1..=3).map(|k| ch_ot(k, 4)).collect();
        let ts = ch_t_from_ot(3, &ots).unwrap();
        assert!(ts[0].agrees_with(&s(&[1])));
        assert!(ts[1].agrees_with(&ch_t(2, 4)));
        assert!(ts[2].agrees_with(&ch_t(3, 4)));
        // no full-support monomials of degree 0 or 1 at n=3
        assert!(ts[2].q_coefficient(0).is_zero());
        assert!(ts[2].q_coefficient(1).is_zero());
    }

    #[test]
    fn generating_functions_small() {
        let gd = gen_fun_d(4).unwrap();
        assert!(gd.component(1).agrees_with(&s(&[1])));
        for n in 1..=4 {
            assert!(gd.component(n).agrees_with(&ch_d(n)), "D component {n}");
        }
        let d = 5;
        let got = gen_fun_ot(4, d).unwrap();
        for n in 1..=4 {
            assert!(got.component(n).agrees_with(&ch_ot(n, d)), "OT component {n}");
        }
    }

    #[test]
    fn exp_of_minus_q_l_truncates() {
        // Exp(-qL) = 1 - qt p_1: component 1 is -q p_1, higher components vanish
        let max_n = 5;
        let arg = lyndon_family(max_n).scale_series(&QSeries::monomial(rat_int(-1), 1));
        let exp = arg.plethystic_exp().unwrap();
        let want1 = SymFunc::p_of(Partition::single(1)).scale_series(&QSeries::monomial(rat_int(-1), 1));
        assert!(exp.component(1).agrees_with(&want1));
        for n in 2..=max_n {
            assert!(exp.component(n).is_zero(), "component {n} should vanish");
        }
    }

    #[test]
    fn hilbert_products() {
        assert_eq!(ch_c(3).hilbert(), rising_product(2));
        assert_eq!(ch_d(3).hilbert(), rising_product(1));
        assert_eq!(ch_c(5).hilbert(), rising_product(4));
        assert_eq!(ch_d(5).hilbert(), rising_product(3));
    }
}
