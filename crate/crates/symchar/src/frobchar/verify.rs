//! Verification predicates for the identity suite. Failures are data, not
//! errors: every check returns a report naming the first discrepancy found.

use crate::combinat::{partitions_of, Partition};
use crate::qseries::{rat_int, QSeries};
use crate::symfunc::{Basis, SymFunc};
use crate::Result;
use std::fmt;
use std::time::Instant;

use super::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    /// `ch_{D_n} = ch_{M_n}` (the Moseley-Proudfoot-Young equality).
    Mpy,
    /// `ch_{R_n} * ch'_{Lambda_n} = s_n` (Koszul cancellation).
    Cancellation,
    /// The three formulas for `ch_{D_n}` coincide.
    DnTwoFormulas,
    /// `ch_{OT_n} = ch_{M_n} * ch_{R_n}`.
    OtFactorization,
    /// `ch_{T_n}` from the closed formula equals the support recursion.
    TConsistency,
    /// Generating-function components reproduce the per-n formulas.
    Genfun,
    /// The `q^{n-1}` coefficient of the undivided polynomial form vanishes.
    TopDegree,
    /// `h_m[(1-q)g] = sum_k (-q)^k (h_{m-k} e_k)[g]` (subtraction formula).
    Subtraction,
    /// The projection-formula identity for `ch'_{Lambda^. P_n}`.
    Projection,
    /// Everything above.
    All,
}

impl CheckName {
    pub fn parse(s: &str) -> Option<CheckName> {
        match s {
            "mpy" => Some(CheckName::Mpy),
            "cancellation" => Some(CheckName::Cancellation),
            "dn-two-formulas" => Some(CheckName::DnTwoFormulas),
            "ot-factorization" => Some(CheckName::OtFactorization),
            "t-consistency" => Some(CheckName::TConsistency),
            "genfun" => Some(CheckName::Genfun),
            "top-degree" => Some(CheckName::TopDegree),
            "subtraction" => Some(CheckName::Subtraction),
            "projection" => Some(CheckName::Projection),
            "all" => Some(CheckName::All),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::Mpy => "mpy",
            CheckName::Cancellation => "cancellation",
            CheckName::DnTwoFormulas => "dn-two-formulas",
            CheckName::OtFactorization => "ot-factorization",
            CheckName::TConsistency => "t-consistency",
            CheckName::Genfun => "genfun",
            CheckName::TopDegree => "top-degree",
            CheckName::Subtraction => "subtraction",
            CheckName::Projection => "projection",
            CheckName::All => "all",
        }
    }
}

/// First differing coefficient between two symmetric functions.
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub partition: Vec<u32>,
    pub q_power: usize,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "first difference at partition {:?}, q^{}: {} vs {}",
            self.partition, self.q_power, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub n: u32,
    pub pass: bool,
    pub millis: u128,
    pub discrepancy: Option<Discrepancy>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: String,
    pub n_max: u32,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }
}

/// Locate the first differing (partition, q-power) between two functions,
/// comparing in the p-basis up to the common truncation.
pub fn first_discrepancy(lhs: &SymFunc, rhs: &SymFunc) -> Option<Discrepancy> {
    let a = lhs.to_p();
    let b = rhs.to_p();
    for lam in partitions_of(lhs.degree()) {
        let ca = a.coeff(&lam);
        let cb = b.coeff(&lam);
        if ca.agrees_with(&cb) {
            continue;
        }
        let cap = match ca.trunc().meet(cb.trunc()) {
            crate::qseries::Trunc::Exact => usize::MAX,
            crate::qseries::Trunc::At(d) => d,
        };
        let len = ca
            .coeffs()
            .len()
            .max(cb.coeffs().len())
            .min(cap);
        for i in 0..len {
            if ca.coeff(i) != cb.coeff(i) {
                return Some(Discrepancy {
                    partition: lam.parts().to_vec(),
                    q_power: i,
                    lhs: ca.coeff(i).to_string(),
                    rhs: cb.coeff(i).to_string(),
                });
            }
        }
    }
    None
}

fn check_equal(name: &str, n: u32, lhs: &SymFunc, rhs: &SymFunc, start: Instant) -> CheckResult {
    let discrepancy = first_discrepancy(lhs, rhs);
    CheckResult {
        name: name.to_string(),
        n,
        pass: discrepancy.is_none(),
        millis: start.elapsed().as_millis(),
        discrepancy,
    }
}

pub fn check_mpy(n_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let d = ch_d(n);
        let m = ch_m(n, n as usize + 1)?;
        out.push(check_equal("mpy", n, &d, &m, start));
    }
    Ok(out)
}

pub fn check_cancellation(n_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let d = 2 * n as usize;
        let lhs = ch_r(n, d).kronecker(&ch_lambda(n).negate_q())?;
        let rhs = SymFunc::s_of(Partition::single(n));
        out.push(check_equal("cancellation", n, &lhs, &rhs, start));
    }
    Ok(out)
}

pub fn check_dn_two_formulas(n_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let a = ch_d(n);
        let b = ch_d_alt(n)?;
        out.push(check_equal("dn-eq1-vs-eq2", n, &a, &b, start));
        let start = Instant::now();
        let c = ch_d_remark(n);
        out.push(check_equal("dn-eq2-vs-remark", n, &a, &c, start));
    }
    Ok(out)
}

pub fn check_ot_factorization(n_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let start = Instant::now();
        let d = 2 * n as usize;
        let lhs = ch_ot(n, d);
        let rhs = ch_m(n, d)?.kronecker(&ch_r(n, d))?;
        out.push(check_equal("ot-factorization", n, &lhs, &rhs, start));
    }
    Ok(out)
}

pub fn check_t_consistency(n_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let d = 2 * n_max as usize;
    let ots: Vec<SymFunc> = (1..=n_max).map(|k| ch_ot(k, d)).collect();
    let ts = ch_t_from_ot(n_max, &ots)?;
    for n in 1..=n_max {
        let start = Instant::now();
        let closed = ch_t(n, d);
        out.push(check_equal("t-consistency", n, &closed, &ts[(n - 1) as usize], start));
    }
    Ok(out)
}

pub fn check_genfun(n_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let d = n_max as usize + 1;
    let gd = gen_fun_d(n_max)?;
    let got = gen_fun_ot(n_max, d)?;
    for n in 1..=n_max {
        let start = Instant::now();
        out.push(check_equal("genfun-d", n, gd.component(n), &ch_d(n), start));
        let start = Instant::now();
        out.push(check_equal("genfun-ot", n, got.component(n), &ch_ot(n, d), start));
    }
    Ok(out)
}

pub fn check_top_degree(n_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let start = Instant::now();
        let remark = ch_d_remark(n);
        let top = remark.q_coefficient((n - 1) as usize);
        let zero = SymFunc::zero(n, Basis::P);
        out.push(check_equal("top-degree", n, &top, &zero, start));
    }
    Ok(out)
}

/// Deterministic pseudo-random symmetric function of degree `n` with small
/// q-polynomial coefficients, for identity spot checks.
fn pseudo_random_symfunc(n: u32, basis: Basis, seed: u64) -> SymFunc {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut f = SymFunc::zero(n, basis);
    for lam in partitions_of(n) {
        let c0 = (next() % 5) as i64 - 2;
        let c1 = (next() % 5) as i64 - 2;
        let coeff = QSeries::constant(crate::qseries::rat_int(c0))
            .add(&QSeries::monomial(crate::qseries::rat_int(c1), 1));
        f.add_term(lam, coeff);
    }
    f
}

/// Lemma: `h_m[(1-q) g] = sum_{k=0}^m (-q)^k (h_{m-k} e_k)[g]`.
pub fn check_subtraction(m_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        for deg_g in 1..=3u32 {
            let start = Instant::now();
            let g = pseudo_random_symfunc(deg_g, Basis::P, (m * 31 + deg_g) as u64);
            let lhs = SymFunc::h(m).plethysm(&g.scale_series(&QSeries::one_minus_q()))?;
            let mut rhs = SymFunc::zero(m * deg_g, Basis::P);
            for k in 0..=m {
                let mut c = rat_int(1);
                if k % 2 == 1 {
                    c = -c;
                }
                let outer = SymFunc::h(m - k).outer_mul(&SymFunc::e(k));
                let term = outer.plethysm(&g)?.scale_series(&QSeries::monomial(c, k as usize));
                rhs = rhs.add(&term);
            }
            out.push(check_equal(
                &format!("subtraction-m{m}-deg{deg_g}"),
                m,
                &lhs,
                &rhs,
                start,
            ));
        }
    }
    Ok(out)
}

/// Lemma: `ch'_{Lambda^. P_n} * prod_j f_{m_j}[g_j] = prod_j f_{m_j}[g_j * ch'_{Lambda^. P_j}]`
/// for `lambda |- n`, with `f` and `g` drawn from the h- and p-bases.
pub fn check_projection(n_max: u32) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let start = Instant::now();
        let mut pass = true;
        let mut disc = None;
        'outer: for lam in partitions_of(n) {
            for (fb, gb) in [
                (Basis::H, Basis::H),
                (Basis::H, Basis::P),
                (Basis::P, Basis::H),
                (Basis::P, Basis::P),
            ] {
                let pick = |basis: Basis, k: u32| match basis {
                    Basis::H => SymFunc::h(k),
                    _ => SymFunc::p_of(Partition::single(k)),
                };
                let mut lhs_prod = SymFunc::unit();
                let mut rhs_prod = SymFunc::unit();
                for (j, m) in lam.to_exponential().iter() {
                    let f = pick(fb, m);
                    let g = pick(gb, j);
                    lhs_prod = lhs_prod.outer_mul(&f.plethysm(&g)?);
                    let twisted = g.kronecker(&ch_lambda_p_primed(j))?;
                    rhs_prod = rhs_prod.outer_mul(&f.plethysm(&twisted)?);
                }
                let lhs = ch_lambda_p_primed(n).kronecker(&lhs_prod)?;
                if let Some(d) = first_discrepancy(&lhs, &rhs_prod) {
                    pass = false;
                    disc = Some(d);
                    break 'outer;
                }
            }
        }
        out.push(CheckResult {
            name: "projection".to_string(),
            n,
            pass,
            millis: start.elapsed().as_millis(),
            discrepancy: disc,
        });
    }
    Ok(out)
}

/// Run a named check (or all of them) up to `n_max`.
pub fn run(check: CheckName, n_max: u32) -> Result<VerificationReport> {
    let mut results = Vec::new();
    let mut push = |mut r: Vec<CheckResult>| results.append(&mut r);
    match check {
        CheckName::Mpy => push(check_mpy(n_max)?),
        CheckName::Cancellation => push(check_cancellation(n_max)?),
        CheckName::DnTwoFormulas => push(check_dn_two_formulas(n_max)?),
        CheckName::OtFactorization => push(check_ot_factorization(n_max)?),
        CheckName::TConsistency => push(check_t_consistency(n_max)?),
        CheckName::Genfun => push(check_genfun(n_max)?),
        CheckName::TopDegree => push(check_top_degree(n_max)?),
        CheckName::Subtraction => push(check_subtraction(4.min(n_max))?),
        CheckName::Projection => push(check_projection(n_max.min(6))?),
        CheckName::All => {
            push(check_mpy(n_max)?);
            push(check_cancellation(n_max)?);
            push(check_dn_two_formulas(n_max)?);
            push(check_ot_factorization(n_max)?);
            push(check_t_consistency(n_max)?);
            push(check_genfun(n_max)?);
            push(check_top_degree(n_max)?);
            push(check_subtraction(4)?);
            push(check_projection(n_max.min(6))?);
        }
    }
    Ok(VerificationReport {
        check: check.as_str().to_string(),
        n_max,
        results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mpy_small() {
        let r = check_mpy(4).unwrap();
        assert!(r.iter().all(|c| c.pass), "{r:?}");
    }

    #[test]
    fn cancellation_small() {
        let r = check_cancellation(6).unwrap();
        assert!(r.iter().all(|c| c.pass), "{r:?}");
    }

    #[test]
    fn subtraction_small() {
        let r = check_subtraction(3).unwrap();
        assert!(r.iter().all(|c| c.pass), "{r:?}");
    }

    #[test]
    fn projection_small() {
        let r = check_projection(4).unwrap();
        assert!(r.iter().all(|c| c.pass), "{r:?}");
    }

    #[test]
    fn top_degree_small() {
        let r = check_top_degree(6).unwrap();
        assert!(r.iter().all(|c| c.pass), "{r:?}");
    }

    #[test]
    fn discrepancy_reported() {
        let a = SymFunc::s_of(Partition::new(vec![2]));
        let b = SymFunc::s_of(Partition::new(vec![1, 1]));
        let d = first_discrepancy(&a, &b).expect("functions differ");
        assert_eq!(d.q_power, 0);
    }
}
