//! Exact rank computation over the integers for sparse row sets.
//!
//! Rows are sorted `(column, coefficient)` lists with arbitrary-precision
//! entries. Elimination is fraction-free: a row is reduced against the
//! pivot holding its leading column by cross-multiplication, then divided
//! by the content gcd to keep entries small. Pivots are kept per leading
//! column, so the result is a row-echelon basis of the row space and the
//! rank is exact. No floating point anywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type SparseRow = Vec<(usize, BigInt)>;

/// Row-echelon form of a sparse integer row set.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    /// Pivot rows keyed by leading column, gcd-normalized with positive
    /// leading coefficient.
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }

    /// Reduces `row` against the current pivots without inserting it.
    /// Returns the residue, empty when the row is in the span.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        normalize(&mut row);
        loop {
            let lead = match row.first() {
                Some(&(col, _)) => col,
                None => return row,
            };
            let pivot = match self.pivots.get(&lead) {
                Some(p) => p,
                None => return row,
            };
            row = eliminate(&row, pivot);
        }
    }

    /// Reduces and, when independent, installs the residue as a new pivot.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let residue = self.reduce(row);
        match residue.first() {
            None => false,
            Some(&(lead, _)) => {
                self.pivots.insert(lead, residue);
                true
            }
        }
    }
}

/// Rank of a set of rows, consumed in order.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut ech = Echelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}

/// Cross-multiplied elimination of `row`'s leading column by `pivot`,
/// gcd-normalized. Both inputs must share the leading column.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let (lead, row_coef) = (&row[0].0, &row[0].1);
    debug_assert_eq!(*lead, pivot[0].0);
    let pivot_coef = &pivot[0].1;
    let g = row_coef.gcd(pivot_coef);
    let row_mul = pivot_coef / &g;
    let pivot_mul = row_coef / &g;

    let mut out: SparseRow = Vec::with_capacity(row.len() + pivot.len());
    let mut a = row.iter();
    let mut b = pivot.iter();
    let mut next_a = a.next();
    let mut next_b = b.next();
    while let (Some((ca, va)), Some((cb, vb))) = (next_a, next_b) {
        match ca.cmp(cb) {
            std::cmp::Ordering::Less => {
                out.push((*ca, va * &row_mul));
                next_a = a.next();
            }
            std::cmp::Ordering::Greater => {
                out.push((*cb, -(vb * &pivot_mul)));
                next_b = b.next();
            }
            std::cmp::Ordering::Equal => {
                let v = va * &row_mul - vb * &pivot_mul;
                if !v.is_zero() {
                    out.push((*ca, v));
                }
                next_a = a.next();
                next_b = b.next();
            }
        }
    }
    while let Some((ca, va)) = next_a {
        out.push((*ca, va * &row_mul));
        next_a = a.next();
    }
    while let Some((cb, vb)) = next_b {
        out.push((*cb, -(vb * &pivot_mul)));
        next_b = b.next();
    }
    normalize(&mut out);
    out
}

/// Sorts, merges duplicate columns, drops zeros, divides by the content
/// gcd, and makes the leading coefficient positive.
pub fn normalize(row: &mut SparseRow) {
    row.sort_by_key(|&(col, _)| col);
    let mut merged: SparseRow = Vec::with_capacity(row.len());
    for (col, val) in row.drain(..) {
        match merged.last_mut() {
            Some((last, acc)) if *last == col => *acc += val,
            _ => merged.push((col, val)),
        }
    }
    merged.retain(|(_, v)| !v.is_zero());
    if let Some(content) = merged.iter().map(|(_, v)| v.abs()).reduce(|a, b| a.gcd(&b)) {
        let negate = merged[0].1.is_negative();
        for (_, v) in &mut merged {
            *v = &*v / &content;
            if negate {
                *v = -&*v;
            }
        }
    }
    *row = merged;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()
    }

    #[test]
    fn rank_of_dense_examples() {
        assert_eq!(rank([row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)])]), 1);
        assert_eq!(
            rank([
                row(&[(0, 1), (1, 1)]),
                row(&[(1, 1), (2, 1)]),
                row(&[(0, 1), (2, 1)]),
            ]),
            3
        );
        // The incidence rows of a 4-cycle have rank 3.
        assert_eq!(
            rank([
                row(&[(0, 1), (1, -1)]),
                row(&[(1, 1), (2, -1)]),
                row(&[(2, 1), (3, -1)]),
                row(&[(3, 1), (0, -1)]),
            ]),
            3
        );
        assert_eq!(rank([row(&[]), row(&[(5, 7)])]), 1);
    }

    #[test]
    fn reduce_detects_span_membership() {
        let mut ech = Echelon::new();
        ech.insert(row(&[(0, 2), (1, 4)]));
        ech.insert(row(&[(1, 3), (2, 6)]));
        assert!(ech.reduce(row(&[(0, 1), (1, 2)])).is_empty());
        assert!(ech.reduce(row(&[(0, 1), (1, 5), (2, 6)])).is_empty());
        assert!(!ech.reduce(row(&[(2, 1)])).is_empty());
    }

    #[test]
    fn normalization_divides_content() {
        let mut r = row(&[(3, -6), (1, -9), (3, 2)]);
        normalize(&mut r);
        assert_eq!(r, row(&[(1, 9), (3, 4)]));
    }

    #[test]
    fn rank_is_order_independent() {
        let rows = [
            row(&[(0, 1), (2, -1)]),
            row(&[(1, 5)]),
            row(&[(0, 3), (1, 5), (2, -3)]),
            row(&[(2, 2), (3, 2)]),
        ];
        let forward = rank(rows.clone());
        let backward = rank(rows.into_iter().rev());
        assert_eq!(forward, 3);
        assert_eq!(forward, backward);
    }
}
