//! Sparse exact row reduction over the rationals.

use crate::qseries::Rational;
use num::Zero;
use std::collections::BTreeMap;

/// A sparse row vector; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Row {
    entries: BTreeMap<usize, Rational>,
}

impl Row {
    pub fn new() -> Row {
        Row::default()
    }

    pub fn add(&mut self, col: usize, value: Rational) {
        if value.is_zero() {
            return;
        }
        let entry = self.entries.entry(col).or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            self.entries.remove(&col);
        }
    }

    pub fn get(&self, col: usize) -> Rational {
        self.entries.get(&col).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn leading(&self) -> Option<(usize, Rational)> {
        self.entries.iter().next().map(|(&c, v)| (c, v.clone()))
    }

    fn scale(&mut self, factor: &Rational) {
        for v in self.entries.values_mut() {
            *v *= factor.clone();
        }
    }

    /// `self -= factor * other`.
    pub fn sub_scaled(&mut self, other: &Row, factor: &Rational) {
        for (&col, v) in &other.entries {
            self.add(col, -(factor.clone() * v.clone()));
        }
    }
}

/// Incrementally built echelon form: one row per pivot column, each row with a
/// unit leading entry.
#[derive(Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, Row>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn insert(&mut self, mut row: Row) {
        while let Some((pivot, lead)) = row.leading() {
            match self.rows.get(&pivot) {
                Some(existing) => row.sub_scaled(existing, &lead),
                None => {
                    row.scale(&(Rational::from(num::BigInt::from(1)) / lead));
                    self.rows.insert(pivot, row);
                    return;
                }
            }
        }
    }

    /// Finish to reduced row echelon form: clear every pivot column above its
    /// pivot row. Returns rows sorted by pivot, with the pivot list.
    pub fn into_rref(self) -> (Vec<Row>, Vec<usize>) {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut rows: Vec<Row> = self.rows.into_values().collect();
        // sweep from the last pivot upward so each subtracted row is already reduced
        for i in (0..rows.len()).rev() {
            for j in (i + 1)..rows.len() {
                let c = rows[i].get(pivots[j]);
                if !c.is_zero() {
                    let lower = rows[j].clone();
                    rows[i].sub_scaled(&lower, &c);
                }
            }
        }
        (rows, pivots)
    }
}
