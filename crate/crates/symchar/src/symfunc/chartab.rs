//! Character tables of symmetric groups via the Murnaghan-Nakayama rule,
//! memoized in-process. The recursion runs on beta sets (first-column hook
//! lengths): removing a border strip of size `r` replaces a beta number `b`
//! with `b - r`, with sign given by the number of beta numbers jumped over.

use crate::combinat::{partitions_of, z_of, Partition};
use crate::exec;
use num::ToPrimitive;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: u32,
    classes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[lambda_idx][mu_idx] = chi_lambda(mu)`, both in reverse-lex order.
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Conjugacy classes (= irreducible labels) in reverse-lex order.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn class_index(&self, lambda: &Partition) -> usize {
        self.index[lambda]
    }

    pub fn chi(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    /// Rebuild a table from raw values (e.g. a cache file); dimensions and the
    /// positivity of dimensions are validated, anything wrong yields `None`.
    pub fn from_values(n: u32, values: Vec<Vec<i64>>) -> Option<CharacterTable> {
        let classes = partitions_of(n);
        if values.len() != classes.len() || values.iter().any(|r| r.len() != classes.len()) {
            return None;
        }
        let dim_col = classes.len() - 1; // class (1^n) is last in reverse-lex order
        if values.iter().any(|r| r[dim_col] <= 0) {
            return None;
        }
        let index = classes.iter().cloned().zip(0..).collect();
        Some(CharacterTable { n, classes, index, values })
    }

    fn compute(n: u32) -> CharacterTable {
        let classes = partitions_of(n);
        let index: HashMap<Partition, usize> = classes.iter().cloned().zip(0..).collect();
        let rows = exec::map_collect(classes.clone(), |lambda| {
            classes
                .iter()
                .map(|mu| {
                    let mut memo = HashMap::new();
                    mn(lambda.parts().to_vec(), mu.parts(), 0, &mut memo)
                })
                .collect::<Vec<i64>>()
        });
        CharacterTable { n, classes, index, values: rows }
    }

    /// Column orthogonality, used by tests and cache validation at small n.
    pub fn is_orthogonal(&self) -> bool {
        let k = self.classes.len();
        for a in 0..k {
            for b in 0..k {
                let s: i128 = (0..k)
                    .map(|l| self.values[l][a] as i128 * self.values[l][b] as i128)
                    .sum();
                let expected = if a == b {
                    z_of(&self.classes[a]).to_i128().expect("z fits i128")
                } else {
                    0
                };
                if s != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// chi_lambda(mu[pos..]) by border-strip removal.
fn mn(lambda: Vec<u32>, mu: &[u32], pos: usize, memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    if pos == mu.len() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    if let Some(&v) = memo.get(&(lambda.clone(), pos)) {
        return v;
    }
    let r = mu[pos];
    let len = lambda.len();
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i) as u32)
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[i] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_lambda = Vec::with_capacity(len);
        for (k, &nb) in new_beta.iter().enumerate() {
            let part = nb - (len - 1 - k) as u32;
            if part > 0 {
                new_lambda.push(part);
            }
        }
        total += sign * mn(new_lambda, mu, pos + 1, memo);
    }
    memo.insert((lambda, pos), total);
    total
}

fn table_store() -> &'static Mutex<HashMap<u32, Arc<CharacterTable>>> {
    static STORE: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    STORE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The full character table of `S_n`, computed once per process.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    assert!(n >= 1);
    if let Some(t) = table_store().lock().unwrap().get(&n) {
        return t.clone();
    }
    let table = Arc::new(CharacterTable::compute(n));
    table_store()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| table.clone())
        .clone()
}

/// Install an externally restored table (e.g. from a disk cache).
pub fn seed_character_table(table: CharacterTable) {
    table_store()
        .lock()
        .unwrap()
        .entry(table.n)
        .or_insert_with(|| Arc::new(table));
}

/// Whether the table for `n` is already memoized in this process.
pub fn table_is_memoized(n: u32) -> bool {
    table_store().lock().unwrap().contains_key(&n)
}
