//! Dense matrices over [`ExactScalar`] with fraction-free elimination.
//!
//! Rank and nullspace are computed by a Bareiss-style forward pass (pivots
//! taken first-nonzero in stable row order) followed by normalization to
//! reduced row echelon form. The pivot policy is deterministic, so nullspace
//! bases and reduced forms are reproducible across runs.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::scalar::ExactScalar;
use crate::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ExactScalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Build from integer rows; convenience for hard-coded tables.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        Self::from_fn(r, c, |i, j| ExactScalar::from_int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactScalar) {
        self[(i, j)] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -&self[(i, j)])
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| s * &self[(i, j)])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && *self == self.transpose().neg()
    }

    pub fn trace(&self) -> ExactScalar {
        let mut t = ExactScalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self[(i, i)].clone();
        }
        t
    }

    /// Kronecker product; used to build multispinor slot maps.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        ExactMatrix::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (bi, bj) = (i / other.rows, j / other.cols);
                let (si, sj) = (i % other.rows, j % other.cols);
                &self[(bi, bj)] * &other[(si, sj)]
            },
        )
    }

    /// Column-major flattening of the matrix into a column vector.
    pub fn vectorize(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows * self.cols, 1, |k, _| {
            self[(k / self.cols, k % self.cols)].clone()
        })
    }

    pub fn column(&self, j: usize) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, 1, |i, _| self[(i, j)].clone())
    }

    pub fn row(&self, i: usize) -> ExactMatrix {
        ExactMatrix::from_fn(1, self.cols, |_, j| self[(i, j)].clone())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "vstack: {} vs {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mat_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "mat_mul: ({}x{}) * ({}x{})",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a * b;
                    out[(i, j)] += p;
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        Ok(self.mat_mul(other)? - other.mat_mul(self)?)
    }

    pub fn anticommutator(&self, other: &ExactMatrix) -> Result<ExactMatrix, Error> {
        Ok(self.mat_mul(other)? + other.mat_mul(self)?)
    }

    /// Reduced row echelon form, rank and pivot columns.
    ///
    /// Pivot rows are normalized to a leading one before elimination, which
    /// keeps rational entry sizes near the data scale; pivots are
    /// first-nonzero in row order, so the result is deterministic.
    pub fn rref(&self) -> (ExactMatrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r >= m.rows {
                break;
            }
            // First nonzero entry at or below row r keeps the order stable.
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let tmp = m[(r, j)].clone();
                    m[(r, j)] = m[(pr, j)].clone();
                    m[(pr, j)] = tmp;
                }
            }
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    let v = &m[(r, j)] * &inv;
                    m[(r, j)] = v;
                }
            }
            for i in (r + 1)..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &(&factor * &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        // Backward pass: clear entries above each pivot.
        for (row, &col) in pivots.iter().enumerate().rev() {
            for i in 0..row {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let factor = m[(i, col)].clone();
                for j in col..m.cols {
                    if m[(row, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &(&factor * &m[(row, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        let rank = pivots.len();
        (m, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Reduce `v` against normalized pivot rows in place; zero iff spanned.
    fn reduce_row(v: &mut ExactMatrix, rows: &ExactMatrix, pivots: &[usize]) {
        for (row, &col) in pivots.iter().enumerate() {
            if v[(0, col)].is_zero() {
                continue;
            }
            let coeff = v[(0, col)].clone();
            for j in 0..v.cols {
                let t = v[(0, j)].clone() - coeff.clone() * rows[(row, j)].clone();
                v[(0, j)] = t;
            }
        }
    }

    /// Exact nullspace basis, one column vector per free variable, with the
    /// free coordinate set to one; deterministic given the pivot policy.
    pub fn nullspace(&self) -> Vec<ExactMatrix> {
        let (r, _, pivots) = self.rref();
        let mut basis = Vec::new();
        let piv_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut vec = ExactMatrix::zeros(self.cols, 1);
            vec[(free, 0)] = ExactScalar::one();
            for (row, &col) in pivots.iter().enumerate() {
                vec[(col, 0)] = -&r[(row, free)];
            }
            basis.push(vec);
        }
        basis
    }

    /// Precomputed reduced row basis, for repeated membership queries
    /// against the same row space without re-running elimination.
    pub fn row_basis(&self) -> RowBasis {
        let (m, rank, pivots) = self.rref();
        let rows = ExactMatrix::from_fn(rank, self.cols, |i, j| m[(i, j)].clone());
        RowBasis { rows, pivots }
    }

    /// True iff the row vector `v` lies in the row space of `self`.
    pub fn row_space_contains(&self, v: &ExactMatrix) -> Result<bool, Error> {
        self.row_basis().contains(v)
    }

    /// True iff `self` and `other` have identical row spaces.
    pub fn same_row_space(&self, other: &ExactMatrix) -> Result<bool, Error> {
        if self.cols != other.cols {
            return Err(Error::Shape("same_row_space: column mismatch".into()));
        }
        let basis = self.row_basis();
        if basis.rank() != other.rank() {
            return Ok(false);
        }
        for i in 0..other.rows {
            if !basis.contains(&other.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_f64(&self) -> Vec<Vec<(f64, f64)>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_f64()).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = ExactScalar;
    fn index(&self, (i, j): (usize, usize)) -> &ExactScalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactScalar {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl Sub for ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl Mul for ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: ExactMatrix) -> ExactMatrix {
        self.mat_mul(&rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Normalized spanning rows of a row space, retained for repeated exact
/// membership tests.
#[derive(Clone, Debug)]
pub struct RowBasis {
    rows: ExactMatrix,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True iff the 1 x n row `v` lies in the spanned space.
    pub fn contains(&self, v: &ExactMatrix) -> Result<bool, Error> {
        if v.cols != self.rows.cols || v.rows != 1 {
            return Err(Error::Shape(format!(
                "row basis membership: row of shape {}x{} against {} columns",
                v.rows, v.cols, self.rows.cols
            )));
        }
        let mut work = v.clone();
        ExactMatrix::reduce_row(&mut work, &self.rows, &self.pivots);
        Ok(work.is_zero())
    }
}

/// A linear system together with its exact rank and nullspace basis,
/// the common output shape of every constraint analysis in the crate.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub nullspace: Vec<ExactMatrix>,
    pub unknown_labels: Vec<String>,
}

impl ConstraintSystem {
    pub fn solve(matrix: ExactMatrix, unknown_labels: Vec<String>) -> Self {
        debug_assert!(unknown_labels.is_empty() || unknown_labels.len() == matrix.cols());
        let rank = matrix.rank();
        let nullspace = matrix.nullspace();
        Self {
            matrix,
            rank,
            nullspace,
            unknown_labels,
        }
    }

    pub fn nullity(&self) -> usize {
        self.nullspace.len()
    }

    /// Rank-nullity and exact annihilation checks; used by tests and the
    /// verification registry.
    pub fn verify(&self) -> Result<(), Error> {
        if self.rank + self.nullspace.len() != self.matrix.cols() {
            return Err(Error::Internal("rank + nullity != unknowns".into()));
        }
        for v in &self.nullspace {
            if !self.matrix.mat_mul(v)?.is_zero() {
                return Err(Error::Internal("nullspace vector not annihilated".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn gamma44() -> ExactMatrix {
        ExactMatrix::from_int_rows(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, -1],
        ])
    }

    #[test]
    fn identity_multiplication() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let i = ExactMatrix::identity(2);
        assert_eq!(i.mat_mul(&m).unwrap(), m);
    }

    #[test]
    fn parity_matrix_squares_to_identity() {
        let g = gamma44();
        assert_eq!(g.mat_mul(&g).unwrap(), ExactMatrix::identity(4));
    }

    #[test]
    fn mat_mul_matches_triple_loop_oracle() {
        // Fixed pseudo-random rational entries; oracle is the naive sum.
        let a = ExactMatrix::from_fn(3, 3, |i, j| {
            ExactScalar::new(rat((i * 7 + j * 3 + 1) as i64, (j + 2) as i64), rat(i as i64, 5))
        });
        let b = ExactMatrix::from_fn(3, 3, |i, j| {
            ExactScalar::new(rat((i + 2 * j) as i64 - 3, 3), rat((j * j) as i64, (i + 1) as i64))
        });
        let fast = a.mat_mul(&b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = ExactScalar::zero();
                for k in 0..3 {
                    acc += &a[(i, k)] * &b[(k, j)];
                }
                assert_eq!(fast[(i, j)], acc);
            }
        }
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = ExactMatrix::zeros(2, 3);
        let b = ExactMatrix::zeros(2, 3);
        assert!(a.mat_mul(&b).is_err());
    }

    #[test]
    fn zero_matrix_has_full_nullspace() {
        let sys = ConstraintSystem::solve(ExactMatrix::zeros(4, 4), vec![]);
        assert_eq!(sys.rank, 0);
        assert_eq!(sys.nullity(), 4);
        sys.verify().unwrap();
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        let sys = ConstraintSystem::solve(ExactMatrix::identity(4), vec![]);
        assert_eq!(sys.rank, 4);
        assert_eq!(sys.nullity(), 0);
        sys.verify().unwrap();
    }

    #[test]
    fn outer_product_sum_has_expected_rank() {
        // 6x4 rank-2 matrix built as u1*v1^T + u2*v2^T.
        let u1 = ExactMatrix::from_fn(6, 1, |i, _| ExactScalar::from_int(i as i64 + 1));
        let v1 = ExactMatrix::from_fn(1, 4, |_, j| ExactScalar::from_ratio(2 * j as i64 + 1, 3));
        let u2 = ExactMatrix::from_fn(6, 1, |i, _| ExactScalar::from_int((i * i) as i64 % 5));
        let v2 = ExactMatrix::from_fn(1, 4, |_, j| ExactScalar::from_int(j as i64 - 2));
        let m = u1.mat_mul(&v1).unwrap() + u2.mat_mul(&v2).unwrap();
        let sys = ConstraintSystem::solve(m.clone(), vec![]);
        assert_eq!(sys.rank, 2);
        assert_eq!(sys.nullity(), 2);
        for v in &sys.nullspace {
            assert!(m.mat_mul(v).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, -1], &[1, 3, 2]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn row_space_membership() {
        let m = ExactMatrix::from_int_rows(&[&[1, 0, 1], &[0, 1, 1]]);
        let inside = ExactMatrix::from_int_rows(&[&[2, 3, 5]]);
        let outside = ExactMatrix::from_int_rows(&[&[1, 1, 1]]);
        assert!(m.row_space_contains(&inside).unwrap());
        assert!(!m.row_space_contains(&outside).unwrap());
    }

    #[test]
    fn kron_shapes_and_values() {
        let a = ExactMatrix::from_int_rows(&[&[1, 2]]);
        let b = ExactMatrix::from_int_rows(&[&[3], &[4]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k[(1, 1)], ExactScalar::from_int(8));
    }
}
