//! Basis conversions. Everything routes through the power-sum basis: `h` and
//! `e` expand multiplicatively, `s` converts through the character table, and
//! `m` through the (inverted) monomial-expansion matrix of the power sums.

use crate::combinat::{partitions_of, z_of, Partition};
use crate::qseries::{QSeries, Rational};
use num::{BigInt, One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::chartab::character_table;
use super::{Basis, SymFunc};

type Matrix = Vec<Vec<Rational>>;

/// Expansion of the one-part `h_n` in power sums: `sum_lambda p_lambda / z_lambda`.
fn h_in_p(n: u32) -> Vec<(Partition, Rational)> {
    partitions_of(n)
        .into_iter()
        .map(|lam| {
            let z = Rational::from(z_of(&lam));
            (lam, z.recip())
        })
        .collect()
}

/// Expansion of `e_n`: `sum_lambda (-1)^{n - l(lambda)} p_lambda / z_lambda`.
fn e_in_p(n: u32) -> Vec<(Partition, Rational)> {
    partitions_of(n)
        .into_iter()
        .map(|lam| {
            let mut c = Rational::from(z_of(&lam)).recip();
            if (n - lam.len()) % 2 == 1 {
                c = -c;
            }
            (lam, c)
        })
        .collect()
}

/// Multiply two p-basis expansions with rational coefficients.
fn p_product(
    a: &BTreeMap<Partition, Rational>,
    b: &[(Partition, Rational)],
) -> BTreeMap<Partition, Rational> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            let key = la.concat(lb);
            let c = ca * cb;
            let entry = out.entry(key).or_insert_with(Rational::zero);
            *entry += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn multiplicative_expansion(lambda: &Partition, one_part: fn(u32) -> Vec<(Partition, Rational)>) -> BTreeMap<Partition, Rational> {
    let mut acc = BTreeMap::new();
    acc.insert(Partition::empty(), Rational::one());
    for &part in lambda.parts() {
        acc = p_product(&acc, &one_part(part));
    }
    acc
}

/// Coefficient of `x^mu` in `p_lambda`: the number of ways to distribute the
/// parts of `lambda` over the positions of `mu` so that each position receives
/// exactly its target sum.
fn monomial_coeff(lambda: &Partition, mu: &Partition) -> BigInt {
    fn rec(
        parts: &[u32],
        idx: usize,
        remaining: &mut Vec<u32>,
        memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
    ) -> BigInt {
        if idx == parts.len() {
            return if remaining.iter().all(|&r| r == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (idx, remaining.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let t = parts[idx];
        let mut total = BigInt::zero();
        // group positions by remaining value; equal positions are interchangeable
        let mut seen = Vec::new();
        for pos in 0..remaining.len() {
            let v = remaining[pos];
            if v < t || seen.contains(&v) {
                continue;
            }
            seen.push(v);
            let mult = remaining.iter().filter(|&&x| x == v).count();
            remaining[pos] = v - t;
            let mut next = remaining.clone();
            next.sort_unstable_by(|a, b| b.cmp(a));
            remaining[pos] = v;
            total += BigInt::from(mult) * rec(parts, idx + 1, &mut next, memo);
        }
        memo.insert(key, total.clone());
        total
    }
    let mut remaining = mu.parts().to_vec();
    let mut memo = HashMap::new();
    rec(lambda.parts(), 0, &mut remaining, &mut memo)
}

fn invert_matrix(m: &Matrix) -> Matrix {
    let k = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Matrix = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..k {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..k {
                    let av = &a[col][j] * &f;
                    a[r][j] -= av;
                    let iv = &inv[col][j] * &f;
                    inv[r][j] -= iv;
                }
            }
        }
    }
    inv
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum MatrixKind {
    HToP,
    EToP,
    PToH,
    PToE,
    PToM,
    MToP,
}

fn matrix_cache() -> &'static Mutex<HashMap<(MatrixKind, u32), Arc<Matrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<(MatrixKind, u32), Arc<Matrix>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn matrix(kind: MatrixKind, n: u32) -> Arc<Matrix> {
    if let Some(m) = matrix_cache().lock().unwrap().get(&(kind, n)) {
        return m.clone();
    }
    let parts = partitions_of(n);
    let index: HashMap<&Partition, usize> = parts.iter().zip(0..).collect();
    let build_rows = |one_part: fn(u32) -> Vec<(Partition, Rational)>| -> Matrix {
        parts
            .iter()
            .map(|lam| {
                let exp = multiplicative_expansion(lam, one_part);
                let mut row = vec![Rational::zero(); parts.len()];
                for (mu, c) in exp {
                    row[index[&mu]] = c;
                }
                row
            })
            .collect()
    };
    let m = match kind {
        MatrixKind::HToP => build_rows(h_in_p),
        MatrixKind::EToP => build_rows(e_in_p),
        MatrixKind::PToH => invert_matrix(&matrix(MatrixKind::HToP, n)),
        MatrixKind::PToE => invert_matrix(&matrix(MatrixKind::EToP, n)),
        MatrixKind::PToM => parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|mu| Rational::from(monomial_coeff(lam, mu)))
                    .collect()
            })
            .collect(),
        MatrixKind::MToP => invert_matrix(&matrix(MatrixKind::PToM, n)),
    };
    matrix_cache()
        .lock()
        .unwrap()
        .entry((kind, n))
        .or_insert_with(|| Arc::new(m))
        .clone()
}

/// Apply a transition matrix: `g_mu = sum_lambda f_lambda M[lambda][mu]`.
fn apply_matrix(f: &SymFunc, m: &Matrix, target: Basis) -> SymFunc {
    let parts = partitions_of(f.degree());
    let index: HashMap<&Partition, usize> = parts.iter().zip(0..).collect();
    let mut out = SymFunc::zero(f.degree(), target);
    for (lam, coeff) in f.terms() {
        let row = &m[index[lam]];
        for (j, entry) in row.iter().enumerate() {
            if !entry.is_zero() {
                out.add_term(parts[j].clone(), coeff.scale(entry));
            }
        }
    }
    out
}

pub(crate) fn to_p(f: &SymFunc) -> SymFunc {
    if f.degree() == 0 {
        return f.with_basis(Basis::P);
    }
    match f.basis() {
        Basis::P => f.clone(),
        Basis::H => apply_matrix(f, &matrix(MatrixKind::HToP, f.degree()), Basis::P),
        Basis::E => apply_matrix(f, &matrix(MatrixKind::EToP, f.degree()), Basis::P),
        Basis::M => apply_matrix(f, &matrix(MatrixKind::MToP, f.degree()), Basis::P),
        Basis::S => {
            // p_mu coefficient: sum_lambda f_lambda chi_lambda(mu) / z_mu
            let table = character_table(f.degree());
            let mut out = SymFunc::zero(f.degree(), Basis::P);
            for mu in table.classes() {
                let mut acc = QSeries::zero();
                for (lam, coeff) in f.terms() {
                    let chi = table.chi(lam, mu);
                    if chi != 0 {
                        acc = acc.add(&coeff.scale(&Rational::from(BigInt::from(chi))));
                    }
                }
                let z = Rational::from(z_of(mu));
                out.add_term(mu.clone(), acc.scale(&z.recip()));
            }
            out
        }
    }
}

pub(crate) fn from_p(f: &SymFunc, target: Basis) -> SymFunc {
    debug_assert_eq!(f.basis(), Basis::P);
    if f.degree() == 0 {
        return f.with_basis(target);
    }
    match target {
        Basis::P => f.clone(),
        Basis::H => apply_matrix(f, &matrix(MatrixKind::PToH, f.degree()), Basis::H),
        Basis::E => apply_matrix(f, &matrix(MatrixKind::PToE, f.degree()), Basis::E),
        Basis::M => apply_matrix(f, &matrix(MatrixKind::PToM, f.degree()), Basis::M),
        Basis::S => {
            // s_lambda coefficient: sum_mu f_mu chi_lambda(mu)
            let table = character_table(f.degree());
            let mut out = SymFunc::zero(f.degree(), Basis::S);
            for lam in table.classes() {
                let mut acc = QSeries::zero();
                for (mu, coeff) in f.terms() {
                    let chi = table.chi(lam, mu);
                    if chi != 0 {
                        acc = acc.add(&coeff.scale(&Rational::from(BigInt::from(chi))));
                    }
                }
                out.add_term(lam.clone(), acc);
            }
            out
        }
    }
}
