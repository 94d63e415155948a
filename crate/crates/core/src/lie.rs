//! Lie algebras given by structure constants, their ideals and quotients,
//! and finite-dimensional modules with the closure operations (dual,
//! tensor, exterior power, adjoint) plus characters and traces.
//!
//! Every construction fixes a deterministic basis order: exterior powers
//! use lexicographic index sets, tensor products are row-major, quotients
//! complete the ideal with standard basis vectors chosen greedily. Reports
//! downstream are reproducible byte for byte because of this.

use std::sync::Arc;

use thiserror::Error;

use crate::combinat::{insert_with_sign, subsets};
use crate::linalg::{coords_in_span, rref_dense};
use crate::scalar::{binomial, Scalar};
use crate::AlgRef;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("structure constant table has the wrong shape: {0}")]
    Shape(String),
    #[error("antisymmetry fails on basis pair ({i}, {j})")]
    Antisymmetry { i: usize, j: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("ideal basis rows are linearly dependent")]
    DependentRows,
    #[error("not an ideal: [x_{generator}, row {row}] leaves the span")]
    NotAnIdeal { generator: usize, row: usize },
    #[error("exterior power {p} out of range for a module of dimension {dim}")]
    ExteriorOutOfRange { p: usize, dim: usize },
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("action matrices violate the representation law on pair ({i}, {j})")]
    NotRepresentation { i: usize, j: usize },
    #[error("functional does not vanish on the bracket [x_{i}, x_{j}]")]
    NotCharacter { i: usize, j: usize },
}

/// A finite-dimensional Lie algebra over an exact field, presented by
/// structure constants: `[x_i, x_j] = sum_k c[i][j][k] x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra<F> {
    labels: Vec<String>,
    c: Vec<Vec<Vec<F>>>,
}

impl<F: Scalar> LieAlgebra<F> {
    /// Build from labels and a full `n x n x n` constant table.
    ///
    /// Only the shape is checked here; [`LieAlgebra::validate`] checks the
    /// axioms, so that deliberately broken tables can still be inspected.
    pub fn new(labels: Vec<String>, c: Vec<Vec<Vec<F>>>) -> Result<Self, LieError> {
        let n = labels.len();
        if c.len() != n
            || c.iter()
                .any(|p| p.len() != n || p.iter().any(|q| q.len() != n))
        {
            return Err(LieError::Shape(format!("expected {n}x{n}x{n} table")));
        }
        Ok(LieAlgebra { labels, c })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Coefficients of `[x_i, x_j]` in the basis.
    pub fn bracket(&self, i: usize, j: usize) -> &[F] {
        &self.c[i][j]
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vectors(&self, u: &[F], v: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = u[i].clone() * v[j].clone();
                for k in 0..n {
                    if !self.c[i][j][k].is_zero() {
                        out[k] = out[k].clone() + uv.clone() * self.c[i][j][k].clone();
                    }
                }
            }
        }
        out
    }

    /// Check antisymmetry and the Jacobi identity exactly, reporting the
    /// first violating pair or triple.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let sum = self.c[i][j][k].clone() + self.c[j][i][k].clone();
                    if !sum.is_zero() {
                        return Err(LieError::Antisymmetry { i, j });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for m in 0..n {
                        let mut sum = F::zero();
                        for l in 0..n {
                            sum = sum
                                + self.c[i][j][l].clone() * self.c[l][k][m].clone()
                                + self.c[j][k][l].clone() * self.c[l][i][m].clone()
                                + self.c[k][i][l].clone() * self.c[l][j][m].clone();
                        }
                        if !sum.is_zero() {
                            return Err(LieError::Jacobi { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Trace of `ad(x_i)`.
    pub fn ad_trace(&self, i: usize) -> F {
        let mut t = F::zero();
        for j in 0..self.dim() {
            t = t + self.c[i][j][j].clone();
        }
        t
    }
}

pub(crate) fn same_algebra<F: Scalar>(a: &AlgRef<F>, b: &AlgRef<F>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// An ideal of a Lie algebra, spanned by independent coordinate rows.
#[derive(Debug, Clone)]
pub struct LieIdeal<F> {
    algebra: AlgRef<F>,
    rows: Vec<Vec<F>>,
}

impl<F: Scalar> LieIdeal<F> {
    /// Check independence and the ideal property `[g, h] <= h` exactly.
    pub fn new(algebra: &AlgRef<F>, rows: Vec<Vec<F>>) -> Result<Self, LieError> {
        let n = algebra.dim();
        if rows.iter().any(|r| r.len() != n) {
            return Err(LieError::Shape(format!("ideal rows must have length {n}")));
        }
        let mut reduced = rows.clone();
        let pivots = rref_dense(&mut reduced);
        if pivots.len() != rows.len() {
            return Err(LieError::DependentRows);
        }
        for i in 0..n {
            let mut e = vec![F::zero(); n];
            e[i] = F::one();
            for (r, row) in rows.iter().enumerate() {
                let br = algebra.bracket_vectors(&e, row);
                if coords_in_span(&rows, &br).is_none() {
                    return Err(LieError::NotAnIdeal {
                        generator: i,
                        row: r,
                    });
                }
            }
        }
        Ok(LieIdeal {
            algebra: algebra.clone(),
            rows,
        })
    }

    pub fn algebra(&self) -> &AlgRef<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Coordinates of an ambient vector in the ideal basis, if it lies in
    /// the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        coords_in_span(&self.rows, v)
    }
}

/// A finite-dimensional module: one `d x d` action matrix per generator,
/// validated against the representation law at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieModule<F> {
    algebra: AlgRef<F>,
    dim: usize,
    action: Vec<Vec<Vec<F>>>,
}

impl<F: Scalar> LieModule<F> {
    pub fn new(
        algebra: &AlgRef<F>,
        dim: usize,
        action: Vec<Vec<Vec<F>>>,
    ) -> Result<Self, LieError> {
        let n = algebra.dim();
        if action.len() != n
            || action
                .iter()
                .any(|m| m.len() != dim || m.iter().any(|r| r.len() != dim))
        {
            return Err(LieError::Shape(format!(
                "expected {n} action matrices of size {dim}x{dim}"
            )));
        }
        for i in 0..n {
            for j in 0..n {
                let mut lhs = dmat_zero(dim);
                for k in 0..n {
                    let coef = algebra.bracket(i, j)[k].clone();
                    if !coef.is_zero() {
                        lhs = dmat_add(&lhs, &dmat_scale(&action[k], &coef));
                    }
                }
                let rhs = dmat_sub(
                    &dmat_mul(&action[i], &action[j]),
                    &dmat_mul(&action[j], &action[i]),
                );
                if lhs != rhs {
                    return Err(LieError::NotRepresentation { i, j });
                }
            }
        }
        Ok(LieModule {
            algebra: algebra.clone(),
            dim,
            action,
        })
    }

    /// The one-dimensional module with zero action.
    pub fn trivial(algebra: &AlgRef<F>) -> Self {
        let n = algebra.dim();
        LieModule {
            algebra: algebra.clone(),
            dim: 1,
            action: vec![vec![vec![F::zero()]]; n],
        }
    }

    /// The adjoint module: matrices of `ad(x_i)` read off the constants.
    pub fn adjoint(algebra: &AlgRef<F>) -> Self {
        let n = algebra.dim();
        let mut action = vec![dmat_zero(n); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    action[i][k][j] = algebra.bracket(i, j)[k].clone();
                }
            }
        }
        LieModule {
            algebra: algebra.clone(),
            dim: n,
            action,
        }
    }

    pub fn algebra(&self) -> &AlgRef<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Vec<Vec<F>> {
        &self.action[i]
    }

    /// Apply the action of generator `i` to a coordinate vector.
    pub fn apply(&self, i: usize, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (r, row) in self.action[i].iter().enumerate() {
            for (c, a) in row.iter().enumerate() {
                if !a.is_zero() && !v[c].is_zero() {
                    out[r] = out[r].clone() + a.clone() * v[c].clone();
                }
            }
        }
        out
    }

    /// Dual module, left-module convention: action matrices `-rho^T`.
    pub fn dual(&self) -> Self {
        let action = self
            .action
            .iter()
            .map(|m| {
                let mut t = dmat_zero(self.dim);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        t[c][r] = -m[r][c].clone();
                    }
                }
                t
            })
            .collect();
        LieModule {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action,
        }
    }

    /// Tensor product, basis ordered row-major: `(i, j) -> i * dim_N + j`.
    pub fn tensor(&self, other: &Self) -> Result<Self, LieError> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(LieError::AlgebraMismatch);
        }
        let (dm, dn) = (self.dim, other.dim);
        let dim = dm * dn;
        let n = self.algebra.dim();
        let mut action = vec![dmat_zero(dim); n];
        for g in 0..n {
            for i in 0..dm {
                for j in 0..dn {
                    let col = i * dn + j;
                    for r in 0..dm {
                        let a = &self.action[g][r][i];
                        if !a.is_zero() {
                            action[g][r * dn + j][col] = a.clone();
                        }
                    }
                    for s in 0..dn {
                        let b = &other.action[g][s][j];
                        if !b.is_zero() {
                            let cell = &mut action[g][i * dn + s][col];
                            *cell = cell.clone() + b.clone();
                        }
                    }
                }
            }
        }
        Ok(LieModule {
            algebra: self.algebra.clone(),
            dim,
            action,
        })
    }

    /// Exterior power, the action extended as a derivation. Basis: `p`-index
    /// sets in lexicographic order.
    pub fn exterior_power(&self, p: usize) -> Result<Self, LieError> {
        if p > self.dim {
            return Err(LieError::ExteriorOutOfRange { p, dim: self.dim });
        }
        let sets = subsets(self.dim, p);
        let index: std::collections::BTreeMap<&[usize], usize> = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let dim = sets.len();
        debug_assert_eq!(dim, binomial(self.dim, p));
        let n = self.algebra.dim();
        let mut action = vec![dmat_zero::<F>(dim); n];
        for g in 0..n {
            for (col, set) in sets.iter().enumerate() {
                for (slot, &elem) in set.iter().enumerate() {
                    let others: Vec<usize> = set
                        .iter()
                        .enumerate()
                        .filter(|&(t, _)| t != slot)
                        .map(|(_, &e)| e)
                        .collect();
                    for r in 0..self.dim {
                        let coef = &self.action[g][r][elem];
                        if coef.is_zero() {
                            continue;
                        }
                        if let Some((sorted, sign)) = insert_with_sign(r, &others, slot) {
                            let row = index[sorted.as_slice()];
                            let signed = if sign < 0 {
                                -coef.clone()
                            } else {
                                coef.clone()
                            };
                            action[g][row][col] = action[g][row][col].clone() + signed;
                        }
                    }
                }
            }
        }
        Ok(LieModule {
            algebra: self.algebra.clone(),
            dim,
            action,
        })
    }

    /// Traces of the action matrices, one per generator. These are raw
    /// traces: for a general module they need not vanish on brackets.
    pub fn trace_character(&self) -> Vec<F> {
        self.action
            .iter()
            .map(|m| {
                let mut t = F::zero();
                for i in 0..self.dim {
                    t = t + m[i][i].clone();
                }
                t
            })
            .collect()
    }
}

/// A Lie homomorphism into the base field: vanishes on all brackets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character<F> {
    algebra: AlgRef<F>,
    values: Vec<F>,
}

impl<F: Scalar> Character<F> {
    pub fn new(algebra: &AlgRef<F>, values: Vec<F>) -> Result<Self, LieError> {
        let n = algebra.dim();
        if values.len() != n {
            return Err(LieError::Shape(format!("character needs {n} values")));
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut sum = F::zero();
                for k in 0..n {
                    sum = sum + algebra.bracket(i, j)[k].clone() * values[k].clone();
                }
                if !sum.is_zero() {
                    return Err(LieError::NotCharacter { i, j });
                }
            }
        }
        Ok(Character {
            algebra: algebra.clone(),
            values,
        })
    }

    pub fn zero(algebra: &AlgRef<F>) -> Self {
        Character {
            algebra: algebra.clone(),
            values: vec![F::zero(); algebra.dim()],
        }
    }

    pub fn algebra(&self) -> &AlgRef<F> {
        &self.algebra
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(F::is_zero)
    }

    /// The associated one-dimensional module.
    pub fn to_module(&self) -> LieModule<F> {
        LieModule {
            algebra: self.algebra.clone(),
            dim: 1,
            action: self.values.iter().map(|v| vec![vec![v.clone()]]).collect(),
        }
    }
}

/// The character `x_i -> -tr(ad x_i)`; zero exactly when the algebra is
/// unimodular. Traces of `ad` vanish on brackets automatically, so this
/// always satisfies the character axiom.
pub fn unimodular_character<F: Scalar>(algebra: &AlgRef<F>) -> Character<F> {
    let values = (0..algebra.dim()).map(|i| -algebra.ad_trace(i)).collect();
    Character::new(algebra, values).expect("ad traces vanish on brackets")
}

/// Quotient by an ideal, with the projection onto the chosen complement.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra<F> {
    pub algebra: AlgRef<F>,
    /// `(n - m) x n` matrix of the projection `g -> g/h`.
    pub projection: Vec<Vec<F>>,
    /// Indices of the standard basis vectors completing the ideal.
    pub complement: Vec<usize>,
}

/// Quotient algebra on a deterministic complement: standard basis vectors
/// are appended greedily (smallest index first) until the ideal's row space
/// is completed.
pub fn quotient_algebra<F: Scalar>(
    g: &AlgRef<F>,
    h: &LieIdeal<F>,
) -> Result<QuotientAlgebra<F>, LieError> {
    if !same_algebra(g, h.algebra()) {
        return Err(LieError::AlgebraMismatch);
    }
    let n = g.dim();
    let m = h.dim();
    let mut complement = Vec::new();
    let mut span: Vec<Vec<F>> = h.rows().to_vec();
    let mut rank = {
        let mut copy = span.clone();
        rref_dense(&mut copy).len()
    };
    for j in 0..n {
        if rank == n {
            break;
        }
        let mut e = vec![F::zero(); n];
        e[j] = F::one();
        let mut trial = span.clone();
        trial.push(e.clone());
        let mut copy = trial.clone();
        let new_rank = rref_dense(&mut copy).len();
        if new_rank > rank {
            span = trial;
            rank = new_rank;
            complement.push(j);
        }
    }
    let l = n - m;
    debug_assert_eq!(complement.len(), l);

    // Projection: coordinates in (ideal rows | complement), keep the tail.
    let mut projection = vec![vec![F::zero(); n]; l];
    for k in 0..n {
        let mut e = vec![F::zero(); n];
        e[k] = F::one();
        let coords = coords_in_span(&span, &e).expect("span is all of g");
        for a in 0..l {
            projection[a][k] = coords[m + a].clone();
        }
    }

    let labels: Vec<String> = complement.iter().map(|&j| g.labels()[j].clone()).collect();
    let mut c = vec![vec![vec![F::zero(); l]; l]; l];
    for a in 0..l {
        for b in 0..l {
            let mut ea = vec![F::zero(); n];
            ea[complement[a]] = F::one();
            let mut eb = vec![F::zero(); n];
            eb[complement[b]] = F::one();
            let br = g.bracket_vectors(&ea, &eb);
            for (k, row) in projection.iter().enumerate() {
                let mut v = F::zero();
                for (t, coef) in row.iter().enumerate() {
                    if !coef.is_zero() {
                        v = v + coef.clone() * br[t].clone();
                    }
                }
                c[a][b][k] = v;
            }
        }
    }
    let algebra = LieAlgebra::new(labels, c)?;
    algebra.validate()?;
    Ok(QuotientAlgebra {
        algebra: Arc::new(algebra),
        projection,
        complement,
    })
}

/// The commutator ideal `[g, g]`, with a reduced-echelon basis.
pub fn commutator_ideal<F: Scalar>(g: &AlgRef<F>) -> LieIdeal<F> {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = g.bracket(i, j).to_vec();
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
    }
    rref_dense(&mut rows);
    LieIdeal::new(g, rows).expect("commutator span is an ideal")
}

/// Basis of the center `{v : [v, g] = 0}`, via one exact kernel solve.
pub fn center_basis<F: Scalar>(g: &AlgRef<F>) -> Vec<Vec<F>> {
    let n = g.dim();
    let mut mat = crate::linalg::SparseMatrix::zero(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = g.bracket(i, j)[k].clone();
                if !v.is_zero() {
                    mat.set(j * n + k, i, v);
                }
            }
        }
    }
    mat.kernel_basis()
}

// Dense matrix helpers shared with the complex builders.

pub(crate) fn dmat_zero<F: Scalar>(d: usize) -> Vec<Vec<F>> {
    vec![vec![F::zero(); d]; d]
}

pub(crate) fn dmat_add<F: Scalar>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| {
            ra.iter()
                .zip(rb)
                .map(|(x, y)| x.clone() + y.clone())
                .collect()
        })
        .collect()
}

pub(crate) fn dmat_sub<F: Scalar>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| {
            ra.iter()
                .zip(rb)
                .map(|(x, y)| x.clone() - y.clone())
                .collect()
        })
        .collect()
}

pub(crate) fn dmat_scale<F: Scalar>(a: &[Vec<F>], s: &F) -> Vec<Vec<F>> {
    a.iter()
        .map(|r| r.iter().map(|x| x.clone() * s.clone()).collect())
        .collect()
}

pub(crate) fn dmat_mul<F: Scalar>(a: &[Vec<F>], b: &[Vec<F>]) -> Vec<Vec<F>> {
    let d = a.len();
    let mut out = dmat_zero::<F>(d);
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].clone() + a[i][k].clone() * b[k][j].clone();
                }
            }
        }
    }
    out
}
