//! Brute-force ground truth. Graded pieces of the presented algebras are built
//! directly from the relation generators with exact rational row reduction, and
//! graded Frobenius characters are extracted from traces of class
//! representatives on the quotient.

mod rref;

use crate::combinat::{partitions_of, z_of, Partition};
use crate::exec;
use crate::qseries::{QSeries, Rational};
use crate::symfunc::{Basis, SymFunc};
use crate::{Error, Result};
use num::{BigInt, Zero};
use std::collections::HashMap;

use rref::{Echelon, Row};

/// Degree-d monomial in the generators, as a sorted multiset of generator indices.
pub type Monomial = Vec<u16>;

pub const DEFAULT_MONOMIAL_CEILING: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    OT,
    C,
    D,
    M,
}

impl Variant {
    pub fn parse(s: &str) -> Option<Variant> {
        match s {
            "ot" => Some(Variant::OT),
            "c" => Some(Variant::C),
            "d" => Some(Variant::D),
            "m" => Some(Variant::M),
            _ => None,
        }
    }
}

/// A presentation: generators `e_{ij}` for `i < j` with `e_{ji} = -e_{ij}`,
/// plus the variant's relation generators.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    n: u32,
    variant: Variant,
    /// Canonical generators as (i, j) with i < j, 0-based.
    pairs: Vec<(u8, u8)>,
    pair_index: HashMap<(u8, u8), u16>,
}

/// A sparse relation: canonical monomials with integer coefficients.
type Relation = Vec<(Monomial, i64)>;

impl PresentedAlgebra {
    pub fn new(variant: Variant, n: u32) -> Self {
        assert!(n >= 1 && n <= 120);
        let mut pairs = Vec::new();
        let mut pair_index = HashMap::new();
        for i in 0..n as u8 {
            for j in (i + 1)..n as u8 {
                pair_index.insert((i, j), pairs.len() as u16);
                pairs.push((i, j));
            }
        }
        PresentedAlgebra { n, variant, pairs, pair_index }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn num_generators(&self) -> usize {
        self.pairs.len()
    }

    /// Canonical form of `e_{ij}` for any distinct i, j: (generator, sign).
    fn edge(&self, i: u8, j: u8) -> (u16, i64) {
        if i < j {
            (self.pair_index[&(i, j)], 1)
        } else {
            (self.pair_index[&(j, i)], -1)
        }
    }

    fn quadratic(&self, i: u8, j: u8, k: u8) -> Relation {
        // e_ij e_jk + e_jk e_ki + e_ki e_ij
        let (a, sa) = self.edge(i, j);
        let (b, sb) = self.edge(j, k);
        let (c, sc) = self.edge(k, i);
        let mono = |x: u16, y: u16| {
            let mut m = vec![x, y];
            m.sort_unstable();
            m
        };
        vec![
            (mono(a, b), sa * sb),
            (mono(b, c), sb * sc),
            (mono(c, a), sc * sa),
        ]
    }

    fn triple_square(&self, i: u8, j: u8, k: u8) -> Relation {
        // (e_ij + e_jk + e_ki)^2
        let terms = [self.edge(i, j), self.edge(j, k), self.edge(k, i)];
        let mut rel = Vec::new();
        for (x, &(gx, sx)) in terms.iter().enumerate() {
            for &(gy, sy) in terms.iter().skip(x) {
                let mut m = vec![gx, gy];
                m.sort_unstable();
                let c = if gx == gy { sx * sy } else { 2 * sx * sy };
                rel.push((m, c));
            }
        }
        rel
    }

    /// Degree-2 relation generators. Both relation shapes are invariant under
    /// cyclic rotation and reversal of (i, j, k), so one representative per
    /// 3-subset spans the same space as all ordered tuples.
    fn quadratic_relations(&self) -> Vec<Relation> {
        let n = self.n as u8;
        let mut rels = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    match self.variant {
                        Variant::OT | Variant::M => rels.push(self.quadratic(i, j, k)),
                        Variant::C => rels.push(self.quadratic(i, j, k)),
                        // squares of triple sums instead of the three-term
                        // relations, exactly as the quotient is presented
                        Variant::D => rels.push(self.triple_square(i, j, k)),
                    }
                }
            }
        }
        if self.variant == Variant::C {
            for g in 0..self.pairs.len() as u16 {
                rels.push(vec![(vec![g, g], 1)]);
            }
        }
        rels
    }

    /// Degree-1 relation generators (D and M only): `sum_{j != i} e_{ij}`.
    fn linear_relations(&self) -> Vec<Relation> {
        if !matches!(self.variant, Variant::D | Variant::M) {
            return Vec::new();
        }
        let n = self.n as u8;
        let mut rels = Vec::new();
        for i in 0..n {
            let mut rel = Vec::new();
            for j in 0..n {
                if j != i {
                    let (g, s) = self.edge(i, j);
                    rel.push((vec![g], s));
                }
            }
            rels.push(rel);
        }
        rels
    }
}

/// The degree-d piece: ambient monomial basis and a row-reduced exact basis of
/// the degree-d piece of the relation ideal.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Fully reduced (RREF) rows spanning the ideal piece, sorted by pivot.
    basis: Vec<Row>,
    pivots: Vec<usize>,
}

impl GradedPiece {
    pub fn monomial_count(&self) -> usize {
        self.monomials.len()
    }

    pub fn ideal_rank(&self) -> usize {
        self.basis.len()
    }

    pub fn quotient_dim(&self) -> usize {
        self.monomials.len() - self.basis.len()
    }
}

fn enumerate_monomials(num_gens: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current: Monomial = Vec::with_capacity(degree);
    fn rec(num_gens: usize, degree: usize, start: u16, current: &mut Monomial, out: &mut Vec<Monomial>) {
        if current.len() == degree {
            out.push(current.clone());
            return;
        }
        for g in start..num_gens as u16 {
            current.push(g);
            rec(num_gens, degree, g, current, out);
            current.pop();
        }
    }
    rec(num_gens, degree, 0, &mut current, &mut out);
    out
}

fn count_monomials(num_gens: usize, degree: usize) -> usize {
    // C(num_gens + degree - 1, degree), saturating
    let mut acc: u128 = 1;
    for i in 0..degree {
        acc = acc.saturating_mul((num_gens + i) as u128) / (i as u128 + 1);
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Build the degree-d graded piece of the presented algebra.
pub fn build_piece(alg: &PresentedAlgebra, degree: usize, ceiling: usize) -> Result<GradedPiece> {
    let g = alg.num_generators();
    let count = count_monomials(g, degree);
    if count > ceiling {
        return Err(Error::TooLarge { count, ceiling });
    }
    let monomials = enumerate_monomials(g, degree);
    let index: HashMap<Monomial, usize> = monomials.iter().cloned().zip(0..).collect();

    let mut echelon = Echelon::new();
    let mut push_products = |relations: &[Relation], cofactor_degree: usize| {
        if relations.is_empty() {
            return;
        }
        let cofactors = enumerate_monomials(g, cofactor_degree);
        for rel in relations {
            for cof in &cofactors {
                let mut row = Row::new();
                for (mono, c) in rel {
                    let mut m = mono.clone();
                    m.extend_from_slice(cof);
                    m.sort_unstable();
                    row.add(index[&m], Rational::from(BigInt::from(*c)));
                }
                echelon.insert(row);
            }
        }
    };
    if degree >= 2 {
        push_products(&alg.quadratic_relations(), degree - 2);
    }
    if degree >= 1 {
        push_products(&alg.linear_relations(), degree - 1);
    }
    let (basis, pivots) = echelon.into_rref();
    Ok(GradedPiece { degree, monomials, index, basis, pivots })
}

/// Apply a permutation (0-based image vector) to a monomial: each generator
/// maps to a signed generator, the product resorted to canonical form.
fn permute_monomial(alg: &PresentedAlgebra, perm: &[u8], mono: &Monomial) -> (Monomial, i64) {
    let mut sign = 1i64;
    let mut out: Monomial = mono
        .iter()
        .map(|&gidx| {
            let (i, j) = alg.pairs[gidx as usize];
            let (g, s) = alg.edge(perm[i as usize], perm[j as usize]);
            sign *= s;
            g
        })
        .collect();
    out.sort_unstable();
    (out, sign)
}

fn permute_row(alg: &PresentedAlgebra, piece: &GradedPiece, perm: &[u8], row: &Row) -> Row {
    let mut out = Row::new();
    for (&col, coeff) in row.iter() {
        let (m, sign) = permute_monomial(alg, perm, &piece.monomials[col]);
        let mut c = coeff.clone();
        if sign < 0 {
            c = -c;
        }
        out.add(piece.index[&m], c);
    }
    out
}

/// Trace of a permutation on the quotient: trace on the monomial span minus
/// the trace of the restriction to the ideal subspace. The restriction is read
/// off the RREF basis: coordinates of a vector in the span are its entries at
/// the pivot columns.
pub fn trace_on_quotient(alg: &PresentedAlgebra, piece: &GradedPiece, perm: &[u8]) -> Rational {
    let mut ambient = Rational::zero();
    for m in &piece.monomials {
        let (img, sign) = permute_monomial(alg, perm, m);
        if &img == m {
            ambient += Rational::from(BigInt::from(sign));
        }
    }
    let mut ideal = Rational::zero();
    for (row, &pivot) in piece.basis.iter().zip(&piece.pivots) {
        let img = permute_row(alg, piece, perm, row);
        ideal += img.get(pivot);
    }
    ambient - ideal
}

/// Assert the ideal subspace is stable under the permutation: the image of
/// each basis vector must reduce to zero against the RREF basis.
pub fn is_perm_stable(alg: &PresentedAlgebra, piece: &GradedPiece, perm: &[u8]) -> bool {
    for row in &piece.basis {
        let mut img = permute_row(alg, piece, perm, row);
        for (b, &p) in piece.basis.iter().zip(&piece.pivots) {
            let c = img.get(p);
            if !c.is_zero() {
                img.sub_scaled(b, &c);
            }
        }
        if !img.is_zero() {
            return false;
        }
    }
    true
}

/// Canonical class representative of cycle type `lambda`: cycles on
/// consecutive integers, in decreasing part order.
pub fn class_representative(lambda: &Partition) -> Vec<u8> {
    let n: u32 = lambda.n();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut start = 0usize;
    for &part in lambda.parts() {
        let p = part as usize;
        for off in 0..p {
            perm[start + off] = (start + (off + 1) % p) as u8;
        }
        start += p;
    }
    perm
}

/// The graded Frobenius character of the variant's algebra at `n`, up to
/// q-degree `max_degree`, straight from the presentation.
pub fn oracle_character(variant: Variant, n: u32, max_degree: usize) -> Result<SymFunc> {
    oracle_character_with_ceiling(variant, n, max_degree, DEFAULT_MONOMIAL_CEILING)
}

pub fn oracle_character_with_ceiling(
    variant: Variant,
    n: u32,
    max_degree: usize,
    ceiling: usize,
) -> Result<SymFunc> {
    let alg = PresentedAlgebra::new(variant, n);
    let classes = partitions_of(n);
    let mut ch = SymFunc::zero(n, Basis::P);
    for d in 0..=max_degree {
        let piece = build_piece(&alg, d, ceiling)?;
        let traces = exec::map_collect(classes.clone(), |lam| {
            let perm = class_representative(&lam);
            debug_assert!(is_perm_stable(&alg, &piece, &perm));
            (lam.clone(), trace_on_quotient(&alg, &piece, &perm))
        });
        for (lam, tr) in traces {
            if tr.is_zero() {
                continue;
            }
            let z = Rational::from(z_of(&lam));
            ch.add_term(lam, QSeries::monomial(tr / z, d));
        }
    }
    // only degrees <= max_degree were built
    Ok(ch.truncate(max_degree + 1))
}

/// `ch_{T_n}` with no reference to the closed formula: run the support
/// decomposition of `OT_n` backwards from oracle characters of `OT_k`, k <= n.
pub fn oracle_t(n: u32, max_degree: usize) -> Result<SymFunc> {
    let ots: Vec<SymFunc> = (1..=n)
        .map(|k| oracle_character(Variant::OT, k, max_degree))
        .collect::<Result<_>>()?;
    let mut ts = crate::frobchar::ch_t_from_ot(n, &ots)?;
    Ok(ts.pop().expect("nonempty"))
}
