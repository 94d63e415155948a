//! Exact sparse linear algebra: rank, kernel bases and cohomology
//! dimensions of finite complexes.
//!
//! Matrices are immutable after construction; elimination works on internal
//! row copies. Pivots are chosen by row sparsity (fewest stored entries
//! first, earliest row on ties), which keeps fill-in tame on the boundary
//! matrices produced elsewhere in the crate while staying deterministic.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("differentials {0} and {1} are not composable ({2}x{3} after {4}x{5})")]
    NotComposable(usize, usize, usize, usize, usize, usize),
    #[error("composition of differentials {0} and {1} is nonzero at entry ({2},{3})")]
    NonzeroComposition(usize, usize, usize, usize),
}

/// A sparse matrix over an exact field. Stored entries are always nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<F> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), F>,
}

impl<F: Scalar> SparseMatrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Set one entry; zero values erase. Indices must be in range.
    pub fn set(&mut self, r: usize, c: usize, v: F) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// Add `v` into entry `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, v: F) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        match self.entries.remove(&(r, c)) {
            Some(old) => {
                let sum = old + v;
                if !sum.is_zero() {
                    self.entries.insert((r, c), sum);
                }
            }
            None => self.set(r, c, v),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&F> {
        self.entries.get(&(r, c))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            t.set(c, r, v.clone());
        }
        t
    }

    /// Matrix product `self * rhs`. Panics on shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut rhs_rows: Vec<Vec<(usize, &F)>> = vec![Vec::new(); rhs.rows];
        for (r, c, v) in rhs.iter() {
            rhs_rows[r].push((c, v));
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for (r, k, v) in self.iter() {
            for &(c, w) in &rhs_rows[k] {
                out.add_to(r, c, v.clone() * w.clone());
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![F::zero(); self.rows];
        for (r, c, a) in self.iter() {
            if !v[c].is_zero() {
                let t = out[r].clone() + a.clone() * v[c].clone();
                out[r] = t;
            }
        }
        out
    }

    /// Rank over the field, by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Exact basis of the null space `{v : self * v = 0}`.
    ///
    /// One basis vector per free column, in increasing column order, with a
    /// `1` at the free column. Returns `cols - rank` vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let ech = self.echelon();
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for &(row, pcol) in &ech.pivots {
                if let Some(a) = ech.rows[row].get(&free) {
                    v[pcol] = -a.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form of an internal copy.
    fn echelon(&self) -> Echelon<F> {
        let mut rows: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); self.rows];
        for (r, c, v) in self.iter() {
            rows[r].insert(c, v.clone());
        }
        let mut used = vec![false; self.rows];
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for col in 0..self.cols {
            // Sparsest unused row with a nonzero in this column.
            let mut pick: Option<(usize, usize)> = None;
            for (r, row) in rows.iter().enumerate() {
                if used[r] || !row.contains_key(&col) {
                    continue;
                }
                if pick.is_none_or(|(_, len)| row.len() < len) {
                    pick = Some((r, row.len()));
                }
            }
            let Some((p, _)) = pick else { continue };
            used[p] = true;
            let inv = F::one() / rows[p][&col].clone();
            if !inv.is_one() {
                for v in rows[p].values_mut() {
                    *v = v.clone() * inv.clone();
                }
            }
            let pivot_row = rows[p].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == p {
                    continue;
                }
                let Some(factor) = row.get(&col).cloned() else {
                    continue;
                };
                for (&c, v) in &pivot_row {
                    let delta = factor.clone() * v.clone();
                    match row.remove(&c) {
                        Some(old) => {
                            let new = old - delta;
                            if !new.is_zero() {
                                row.insert(c, new);
                            }
                        }
                        None => {
                            row.insert(c, -delta);
                        }
                    }
                }
            }
            pivots.push((p, col));
        }
        Echelon { rows, pivots }
    }
}

struct Echelon<F> {
    rows: Vec<BTreeMap<usize, F>>,
    /// `(row, col)` pairs in increasing column order.
    pivots: Vec<(usize, usize)>,
}

/// Per-degree kernel, image and cohomology dimensions of a finite complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexDims {
    pub kernel: Vec<usize>,
    pub image: Vec<usize>,
    pub cohomology: Vec<usize>,
}

/// Cohomology dimensions of a complex given by its differentials.
///
/// `mats[q]` is the matrix of `d_q : C^q -> C^{q+1}` (so `cols(mats[q])` is
/// `dim C^q`); the complex has `mats.len() + 1` degrees. Checks that
/// consecutive differentials are composable and compose to zero; a nonzero
/// composition signals a sign-convention bug upstream.
pub fn complex_cohomology_dims<F: Scalar>(
    mats: &[SparseMatrix<F>],
) -> Result<ComplexDims, LinalgError> {
    for q in 0..mats.len().saturating_sub(1) {
        let (a, b) = (&mats[q], &mats[q + 1]);
        if a.rows() != b.cols() {
            return Err(LinalgError::NotComposable(
                q,
                q + 1,
                b.rows(),
                b.cols(),
                a.rows(),
                a.cols(),
            ));
        }
        let prod = b.mul(a);
        if let Some(((r, c), _)) = prod.entries.iter().next() {
            return Err(LinalgError::NonzeroComposition(q, q + 1, *r, *c));
        }
    }
    let degrees = mats.len() + 1;
    let mut kernel = Vec::with_capacity(degrees);
    let mut image = Vec::with_capacity(degrees);
    let ranks: Vec<usize> = mats.iter().map(SparseMatrix::rank).collect();
    for q in 0..degrees {
        if q < mats.len() {
            kernel.push(mats[q].cols() - ranks[q]);
            image.push(ranks[q]);
        } else {
            // No outgoing differential: the whole top degree is cycles.
            let dim = mats.last().map_or(0, SparseMatrix::rows);
            kernel.push(dim);
            image.push(0);
        }
    }
    let cohomology = (0..degrees)
        .map(|q| kernel[q] - if q == 0 { 0 } else { image[q - 1] })
        .collect();
    Ok(ComplexDims {
        kernel,
        image,
        cohomology,
    })
}

// Dense helpers for the small solves elsewhere in the crate (ideal
// membership, quotient complements, wedge-basis coordinates).

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref_dense<F: Scalar>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(p) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let inv = F::one() / rows[next_row][col].clone();
        for v in rows[next_row].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..rows.len() {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = factor.clone() * rows[next_row][c].clone();
                    rows[r][c] = rows[r][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    rows.truncate(next_row);
    pivots
}

/// Coordinates of `target` in the row span of `basis`, if it lies there.
///
/// `basis` rows need not be reduced; the solve is exact.
pub(crate) fn coords_in_span<F: Scalar>(basis: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let m = basis.len();
    if m == 0 {
        return target.iter().all(F::is_zero).then(Vec::new);
    }
    let n = target.len();
    // Augmented system: solve c * basis = target via columns of basis^T.
    let mut rows: Vec<Vec<F>> = (0..n)
        .map(|j| {
            let mut row: Vec<F> = (0..m).map(|i| basis[i][j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let pivots = rref_dense(&mut rows);
    if pivots.contains(&m) {
        return None; // inconsistent: target has a component outside the span
    }
    let mut coords = vec![F::zero(); m];
    for (row, &col) in rows.iter().zip(&pivots) {
        coords[col] = row[m].clone();
    }
    Some(coords)
}
