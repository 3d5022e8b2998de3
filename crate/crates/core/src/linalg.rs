//! Exact sparse linear algebra over the integers.
//!
//! Relation matrices are built row by row and reduced incrementally into an
//! echelon form. All elimination is fraction-free (cross-multiplication
//! followed by division by the content gcd), so every row stays an integer
//! vector that spans the same line as the exact rational row would. Ranks,
//! span-membership tests and pivot-column sets are therefore exact.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A sparse row vector with `BigInt` entries, keyed by column index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: BTreeMap<usize, BigInt>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec {
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut v = SparseVec::new();
        for (col, c) in entries {
            v.add(col, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading_col(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    pub fn get(&self, col: usize) -> Option<&BigInt> {
        self.entries.get(&col)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &BigInt)> {
        self.entries.iter()
    }

    pub fn add(&mut self, col: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.entries.entry(col).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&col);
        }
    }

    /// `self := a*self + b*other`.
    fn combine(&mut self, a: &BigInt, b: &BigInt, other: &SparseVec) {
        if !a.is_zero() {
            for v in self.entries.values_mut() {
                *v *= a;
            }
        } else {
            self.entries.clear();
        }
        for (col, c) in &other.entries {
            self.add(*col, &(b * c));
        }
    }

    /// Divide by the gcd of all entries and normalize the leading sign to +.
    fn normalize(&mut self) {
        if self.entries.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for c in self.entries.values() {
            g = g.gcd(c);
        }
        let lead_neg = self
            .entries
            .values()
            .next()
            .map(|c| c.is_negative())
            .unwrap_or(false);
        if lead_neg {
            g = -g;
        }
        if !g.is_zero() && g != BigInt::from(1) {
            for c in self.entries.values_mut() {
                *c /= &g;
            }
        }
    }
}

/// An incrementally built echelon form: at most one stored row per leading
/// column. Rows are not back-substituted (only leading columns matter for
/// rank, span membership and pivot bookkeeping).
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_cols(&self) -> BTreeSet<usize> {
        self.rows.keys().copied().collect()
    }

    /// Eliminate every pivot column from `v`; the remainder is zero exactly
    /// when `v` lies in the rational row span of the inserted rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some(lead) = v.leading_col() else {
                return v;
            };
            let Some(row) = self.rows.get(&lead) else {
                return v;
            };
            let p = row.get(lead).expect("pivot entry").clone();
            let c = -v.get(lead).expect("leading entry").clone();
            v.combine(&p, &c, row);
            debug_assert!(v.get(lead).is_none());
            v.normalize();
        }
    }

    /// Insert a row; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        match r.leading_col() {
            None => false,
            Some(lead) => {
                r.normalize();
                self.rows.insert(lead, r);
                true
            }
        }
    }

    /// Membership in the rational row span.
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}

/// Rank of a dense matrix over the rationals (plain Gaussian elimination;
/// used for small specialization checks).
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (upper, lower) = rows.split_at_mut(rank + 1);
        let prow = &upper[rank];
        let pivot = prow[col].clone();
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot;
            for (x, p) in row[col..].iter_mut().zip(&prow[col..]) {
                *x -= &factor * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(entries.iter().map(|&(c, x)| (c, BigInt::from(x))))
    }

    #[test]
    fn rank_of_dependent_rows() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        // 2*(row1) - 4*(row2) + the following = dependent
        assert!(!e.insert(v(&[(0, 1), (1, 0), (2, -2)])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivot_cols(), BTreeSet::from([0, 1]));
    }

    #[test]
    fn span_membership() {
        let mut e = Echelon::new();
        e.insert(v(&[(0, 2), (1, 4)]));
        // (1, 2) spans the same line even though entries differ by a scalar.
        assert!(e.contains(v(&[(0, 1), (1, 2)])));
        assert!(!e.contains(v(&[(0, 1), (1, 3)])));
        assert!(e.contains(SparseVec::new()));
    }

    #[test]
    fn fraction_free_reduction_is_exact() {
        // Rows engineered to force non-unit pivots.
        let mut e = Echelon::new();
        e.insert(v(&[(0, 3), (1, 5), (2, 7)]));
        e.insert(v(&[(0, 2), (1, 9), (2, 11)]));
        e.insert(v(&[(1, 4), (2, 13)]));
        assert_eq!(e.rank(), 3);
        // A rational combination: 1/3 * row0 + 1/2 * row1 (times 6 to clear).
        assert!(e.contains(v(&[(0, 12), (1, 37), (2, 47)])));
    }

    #[test]
    fn rational_rank_small() {
        let one = |n: i64| BigRational::from_integer(BigInt::from(n));
        let rows = vec![
            vec![one(1), one(2), one(3)],
            vec![one(2), one(4), one(6)],
            vec![one(0), one(1), one(1)],
        ];
        assert_eq!(rational_rank(rows), 2);
    }

    #[test]
    fn insert_order_does_not_change_rank() {
        let rows = [
            v(&[(0, 1), (3, 2)]),
            v(&[(1, 5)]),
            v(&[(0, 2), (3, 4)]),
            v(&[(0, 1), (1, 1), (3, 7)]),
            v(&[(2, 1), (3, 1)]),
        ];
        let mut perm = rows.clone();
        perm.reverse();
        let mut e1 = Echelon::new();
        let mut e2 = Echelon::new();
        for r in rows.iter().cloned() {
            e1.insert(r);
        }
        for r in perm.iter().cloned() {
            e2.insert(r);
        }
        assert_eq!(e1.rank(), e2.rank());
        assert_eq!(e1.rank(), 4);
    }
}
