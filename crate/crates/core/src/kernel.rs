//! Exact rational linear algebra.
//!
//! Everything downstream that claims a dimension (colengths, tangent
//! spaces, germ ranks) bottoms out in the rank and nullspace routines
//! here. Entries are arbitrary-precision rationals; elimination is
//! fraction-free (Bareiss) after clearing denominators row by row, so
//! all results are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational;

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    /// Builds a matrix from a row-major entry list.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        ExactMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r);
        }
        ExactMatrix { rows: nrows, cols: ncols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigRational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix-vector product, exact.
    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = BigRational::zero();
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc += e * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let (_, pivots) = bareiss_echelon(self.to_integer_rows());
        pivots.len()
    }

    /// Basis of the right nullspace `{v : M v = 0}`.
    ///
    /// The vectors are linearly independent by construction (each has a 1
    /// in a distinct free column) and their count is `cols - rank`.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (ech, pivots) = bareiss_echelon(self.to_integer_rows());
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            // Back-substitute through the pivot rows, bottom-up.
            for &(r, c) in pivots.iter().rev() {
                let mut acc = BigRational::zero();
                for j in (c + 1)..self.cols {
                    if !ech[r][j].is_zero() && !v[j].is_zero() {
                        acc += BigRational::from(ech[r][j].clone()) * &v[j];
                    }
                }
                v[c] = -acc / BigRational::from(ech[r][c].clone());
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `M x = rhs`, free coordinates set to zero.
    /// Returns `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(rhs.len(), self.rows);
        // Augment, clear denominators, eliminate; never pivot on the last column.
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row: Vec<BigRational> = self.row(r).to_vec();
            row.push(rhs[r].clone());
            rows.push(integerize(&row));
        }
        let (ech, pivots) = echelon_up_to(rows, self.cols);
        // Inconsistent iff a row is zero on the coefficient side but not on the augment.
        for row in &ech {
            if row[..self.cols].iter().all(Zero::is_zero) && !row[self.cols].is_zero() {
                return None;
            }
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for &(r, c) in pivots.iter().rev() {
            let mut acc = BigRational::from(ech[r][self.cols].clone());
            for j in (c + 1)..self.cols {
                if !ech[r][j].is_zero() && !x[j].is_zero() {
                    acc -= BigRational::from(ech[r][j].clone()) * &x[j];
                }
            }
            x[c] = acc / BigRational::from(ech[r][c].clone());
        }
        Some(x)
    }

    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| integerize(self.row(r))).collect()
    }
}

/// Scales a rational row by the lcm of its denominators.
fn integerize(row: &[BigRational]) -> Vec<BigInt> {
    let mut scale = BigInt::one();
    for e in row {
        if !e.is_zero() {
            scale = scale.lcm(e.denom());
        }
    }
    row.iter()
        .map(|e| {
            if e.is_zero() {
                BigInt::zero()
            } else {
                e.numer() * (&scale / e.denom())
            }
        })
        .collect()
}

fn bareiss_echelon(rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    echelon_up_to(rows, ncols)
}

/// Fraction-free (Bareiss) row echelon form, pivoting only on the first
/// `pivot_cols` columns. Pivot = first nonzero entry in column order.
/// Returns the echelon rows and the (row, col) pivot positions.
fn echelon_up_to(
    mut rows: Vec<Vec<BigInt>>,
    pivot_cols: usize,
) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..pivot_cols.min(ncols) {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (pivot_row, rest) = {
            let (head, tail) = rows.split_at_mut(r + 1);
            (&head[r], tail)
        };
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                // Same Bareiss recurrence with a zero leading entry.
                for j in (c + 1)..ncols {
                    if !row[j].is_zero() {
                        let t = &row[j] * &pivot;
                        debug_assert!((&t % &prev).is_zero());
                        row[j] = t / &prev;
                    }
                }
            } else {
                let lead = std::mem::replace(&mut row[c], BigInt::zero());
                for j in (c + 1)..ncols {
                    let t = &row[j] * &pivot - &lead * &pivot_row[j];
                    debug_assert!((&t % &prev).is_zero());
                    row[j] = t / &prev;
                }
            }
        }
        prev = pivot;
        pivots.push((r, c));
        r += 1;
    }
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qq(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_identity() {
        assert_eq!(ExactMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(ExactMatrix::zero(2, 2).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // Second row is twice the first.
        let m = ExactMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_injective() {
        assert!(ExactMatrix::identity(2).nullspace().is_empty());
    }

    #[test]
    fn nullspace_line() {
        let m = ExactMatrix::from_rows(vec![vec![q(1), q(1)]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        // (1, -1) up to scale.
        let v = &ns[0];
        assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        assert_eq!(&v[0] * q(-1), v[1]);
    }

    #[test]
    fn nullspace_full_kernel() {
        let ns = ExactMatrix::zero(2, 2).nullspace();
        assert_eq!(ns.len(), 2);
    }

    #[test]
    fn nullspace_vectors_annihilate_exactly() {
        let m = ExactMatrix::from_rows(vec![
            vec![q(2), q(4), qq(1, 3), q(0)],
            vec![q(1), q(2), q(5), q(-7)],
            vec![q(3), q(6), qq(16, 3), q(-7)],
        ]);
        let rank = m.rank();
        let ns = m.nullspace();
        assert_eq!(rank + ns.len(), m.cols());
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_invariant_under_row_scaling_and_permutation() {
        let m = ExactMatrix::from_rows(vec![
            vec![q(1), q(2), q(3)],
            vec![q(0), q(1), q(1)],
            vec![q(1), q(3), q(4)],
        ]);
        let scaled = ExactMatrix::from_rows(vec![
            m.row(1).iter().map(|e| e * qq(7, 2)).collect(),
            m.row(2).to_vec(),
            m.row(0).iter().map(|e| e * q(-3)).collect(),
        ]);
        assert_eq!(m.rank(), scaled.rank());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = ExactMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        let sol = m.solve(&[q(3), q(6)]).expect("consistent");
        assert_eq!(m.mul_vec(&sol), vec![q(3), q(6)]);
        assert!(m.solve(&[q(3), q(7)]).is_none());
    }
}
