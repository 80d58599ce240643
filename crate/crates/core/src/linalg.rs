//! Sparse exact Gaussian elimination over the rationals.
//!
//! Pivoting is deterministic: every stored row is keyed by its smallest column, so the
//! echelon form depends only on the order in which rows are inserted.

use crate::error::{Error, Result};
use crate::exact_arith::{Coeff, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Sparse row: column index to non-zero coefficient.
pub type SparseRow = BTreeMap<usize, Rational>;

#[derive(Clone, Debug)]
struct Row<C> {
    coeffs: SparseRow,
    rhs: C,
    tag: SparseRow,
}

/// Incremental row-echelon reducer with a right-hand side in any coefficient ring and an
/// optional record of which input rows were combined.
#[derive(Clone, Debug)]
pub struct Echelon<C: Coeff> {
    pivots: BTreeMap<usize, Row<C>>,
    inserted: usize,
    inconsistent: Vec<usize>,
    dependent: Vec<SparseRow>,
}

impl<C: Coeff> Default for Echelon<C> {
    fn default() -> Self {
        Self {
            pivots: BTreeMap::new(),
            inserted: 0,
            inconsistent: Vec::new(),
            dependent: Vec::new(),
        }
    }
}

fn axpy(target: &mut SparseRow, factor: &Rational, source: &SparseRow) {
    for (c, v) in source {
        let entry = target.entry(*c).or_insert_with(Rational::zero);
        *entry -= factor * v;
        if entry.is_zero() {
            target.remove(c);
        }
    }
}

impl<C: Coeff> Echelon<C> {
    /// Empty reducer.
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces a row against the stored pivots and stores it if independent.
    /// Returns `true` when the row added a new pivot.
    pub fn insert(&mut self, coeffs: SparseRow, rhs: C) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let mut row = Row {
            coeffs,
            rhs,
            tag: SparseRow::from([(id, Rational::one())]),
        };
        row.coeffs.retain(|_, v| !v.is_zero());
        let mut cursor = 0usize;
        loop {
            let next = row
                .coeffs
                .range(cursor..)
                .map(|(c, _)| *c)
                .find(|c| self.pivots.contains_key(c));
            let Some(col) = next else { break };
            let factor = row.coeffs[&col].clone();
            let pivot = &self.pivots[&col];
            axpy(&mut row.coeffs, &factor, &pivot.coeffs);
            axpy(&mut row.tag, &factor, &pivot.tag);
            row.rhs = row.rhs.minus(&pivot.rhs.scale(&factor));
            cursor = col + 1;
        }
        match row.coeffs.keys().next().copied() {
            Some(col) => {
                let inv = Rational::one() / &row.coeffs[&col];
                for v in row.coeffs.values_mut() {
                    *v *= &inv;
                }
                for v in row.tag.values_mut() {
                    *v *= &inv;
                }
                row.rhs = row.rhs.scale(&inv);
                self.pivots.insert(col, row);
                true
            }
            None => {
                if !row.rhs.is_zero() {
                    self.inconsistent.push(id);
                }
                self.dependent.push(row.tag);
                false
            }
        }
    }

    /// Number of pivots.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True when some inserted row reduced to `0 = c` with `c ≠ 0`.
    pub fn is_inconsistent(&self) -> bool {
        !self.inconsistent.is_empty()
    }

    /// Combinations of inserted rows that reduce to zero, one per dependent row.
    pub fn dependencies(&self) -> &[SparseRow] {
        &self.dependent
    }

    /// Back substitution with free variables set to zero.
    pub fn solution(&self, ncols: usize) -> Result<Vec<C>> {
        if self.is_inconsistent() {
            return Err(Error::InconsistentSystem(format!(
                "{} equations reduce to 0 = c",
                self.inconsistent.len()
            )));
        }
        let mut x = vec![C::zero(); ncols];
        for (col, row) in self.pivots.iter().rev() {
            let mut v = row.rhs.clone();
            for (c, a) in row.coeffs.range(col + 1..) {
                if !x[*c].is_zero() {
                    v = v.minus(&x[*c].scale(a));
                }
            }
            if *col >= ncols {
                return Err(Error::InvalidArgument(format!("column {col} out of range")));
            }
            x[*col] = v;
        }
        Ok(x)
    }

    /// Back substitution requiring a unique solution.
    pub fn unique_solution(&self, ncols: usize) -> Result<Vec<C>> {
        if self.rank() < ncols {
            return Err(Error::InconsistentSystem(format!(
                "rank {} < {} unknowns",
                self.rank(),
                ncols
            )));
        }
        self.solution(ncols)
    }
}

/// Rank of a family of sparse vectors and a basis of the linear relations among them,
/// each relation scaled to a primitive integer vector whose first non-zero entry is positive.
pub fn rank_and_kernel<K: Ord + Clone>(
    vectors: &[BTreeMap<K, Rational>],
) -> (usize, Vec<Vec<Rational>>) {
    let mut index: BTreeMap<K, usize> = BTreeMap::new();
    for v in vectors {
        for k in v.keys() {
            let n = index.len();
            index.entry(k.clone()).or_insert(n);
        }
    }
    let mut ech = Echelon::<Rational>::new();
    for v in vectors {
        let row: SparseRow = v.iter().map(|(k, c)| (index[k], c.clone())).collect();
        ech.insert(row, Rational::zero());
    }
    let kernel = ech
        .dependencies()
        .iter()
        .map(|tag| {
            let dense: Vec<Rational> = (0..vectors.len())
                .map(|i| tag.get(&i).cloned().unwrap_or_else(Rational::zero))
                .collect();
            primitive(dense)
        })
        .collect();
    (ech.rank(), kernel)
}

/// Scales a rational vector to a primitive integer vector with positive leading entry.
pub fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let mut lcm = num_bigint::BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut g = num_bigint::BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v;
    }
    let lead_negative = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    if lead_negative {
        g = -g;
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, rat};

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|(c, v)| (*c, int(*v))).collect()
    }

    #[test]
    fn unique_solve() {
        let mut e = Echelon::<Rational>::new();
        e.insert(row(&[(0, 2), (1, 1)]), int(5));
        e.insert(row(&[(0, 1), (1, -1)]), int(1));
        assert_eq!(e.unique_solution(2).unwrap(), vec![int(2), int(1)]);
    }

    #[test]
    fn detects_inconsistency_and_rank_deficiency() {
        let mut e = Echelon::<Rational>::new();
        e.insert(row(&[(0, 1), (1, 1)]), int(1));
        assert!(e.unique_solution(2).is_err());
        e.insert(row(&[(0, 2), (1, 2)]), int(3));
        assert!(e.solution(2).is_err());
    }

    #[test]
    fn kernel_is_primitive() {
        let v1: BTreeMap<u8, Rational> = [(0, int(3)), (1, int(6))].into();
        let v2: BTreeMap<u8, Rational> = [(0, int(1)), (1, int(2))].into();
        let (r, k) = rank_and_kernel(&[v1, v2]);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![int(1), int(-3)]]);
        assert_eq!(
            primitive(vec![rat(-1, 2), rat(1, 3)]),
            vec![int(3), int(-2)]
        );
    }
}
