//! Chevalley-Eilenberg complexes: the standard resolution of the trivial
//! module by free left `U(g)`-modules (relative to an ideal), finite
//! (co)chain complexes for finite-dimensional coefficients, and the
//! reduction of Hochschild (co)homology of `U(g)` to Lie-algebra
//! (co)homology via the adjoint module of a k-central bimodule.
//!
//! Sign conventions, fixed once and validated by `d o d = 0` at every
//! construction site:
//!
//! * cochain: `(d f)(x_1,..,x_{q+1}) = sum_p (-1)^{p+1} x_p.f(..^x_p..)
//!   + sum_{p<r} (-1)^{p+r} f(\[x_p,x_r\], ..^x_p..^x_r..)`;
//! * chain: `d(x_1^..^x_q (x) m) = sum_p (-1)^p (..^x_p..) (x) x_p.m
//!   + sum_{p<r} (-1)^{p+r} (\[x_p,x_r\]^..^x_p..^x_r..) (x) m`.
//!
//! The chain signs come from turning the left action into a right one by
//! `m.x := -x.m`; of the two natural sign choices this is the one under
//! which the twisted duality discriminator passes (see `checks`).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::combinat::{insert_with_sign, subsets};
use crate::lie::{
    dmat_add, dmat_mul, dmat_scale, dmat_sub, dmat_zero, same_algebra, LieError, LieIdeal,
    LieModule,
};
use crate::linalg::{complex_cohomology_dims, ComplexDims, LinalgError, SparseMatrix};
use crate::pbw::{PbwError, UeaElement};
use crate::rng::{random_element, SplitMix};
use crate::scalar::{binomial, Scalar};
use crate::AlgRef;

#[derive(Debug, Error)]
pub enum CeError {
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("wedge degree {i} out of range 1..={m}")]
    DegreeOutOfRange { i: usize, m: usize },
    #[error(
        "boundary does not square to zero at degree {degree}: entry ({row},{col}) = {witness}"
    )]
    NonzeroComposition {
        degree: usize,
        row: usize,
        col: usize,
        witness: String,
    },
    #[error("right-equivariance fails at degree {degree}, basis element {basis}, multiplier {multiplier}")]
    EquivarianceViolation {
        degree: usize,
        basis: usize,
        multiplier: String,
    },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A finite cochain complex of finite-dimensional spaces, ascending maps
/// `maps[q] : C^q -> C^{q+1}`. `d o d = 0` is validated at construction
/// and the dimension data is computed once.
#[derive(Debug, Clone)]
pub struct FiniteComplex<F> {
    dims: Vec<usize>,
    maps: Vec<SparseMatrix<F>>,
    homology: ComplexDims,
}

impl<F: Scalar> FiniteComplex<F> {
    pub fn new(dims: Vec<usize>, maps: Vec<SparseMatrix<F>>) -> Result<Self, CeError> {
        assert_eq!(
            maps.len() + 1,
            dims.len(),
            "one map per adjacent pair of degrees"
        );
        for (q, m) in maps.iter().enumerate() {
            assert_eq!(m.cols(), dims[q], "map {q} source dimension");
            assert_eq!(m.rows(), dims[q + 1], "map {q} target dimension");
        }
        let homology = if maps.is_empty() {
            ComplexDims {
                kernel: dims.clone(),
                image: vec![0; dims.len()],
                cohomology: dims.clone(),
            }
        } else {
            complex_cohomology_dims(&maps)?
        };
        Ok(FiniteComplex {
            dims,
            maps,
            homology,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, q: usize) -> &SparseMatrix<F> {
        &self.maps[q]
    }

    pub fn cohomology(&self) -> &ComplexDims {
        &self.homology
    }

    pub fn cohomology_dims(&self) -> Vec<usize> {
        self.homology.cohomology.clone()
    }
}

fn subset_index(sets: &[Vec<usize>]) -> BTreeMap<&[usize], usize> {
    sets.iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect()
}

/// Cochain complex `C^q = Hom(wedge^q g, M)` for a finite module `M`, in
/// degrees `0..=n`.
pub fn lie_cochain_complex<F: Scalar>(
    g: &AlgRef<F>,
    module: &LieModule<F>,
) -> Result<FiniteComplex<F>, CeError> {
    if !same_algebra(g, module.algebra()) {
        return Err(CeError::AlgebraMismatch);
    }
    let n = g.dim();
    let d = module.dim();
    let dims: Vec<usize> = (0..=n).map(|q| binomial(n, q) * d).collect();
    let mut maps = Vec::with_capacity(n);
    for q in 0..n {
        let src = subsets(n, q);
        let tgt = subsets(n, q + 1);
        let src_index = subset_index(&src);
        let mut mat = SparseMatrix::zero(dims[q + 1], dims[q]);
        for (t_idx, set_t) in tgt.iter().enumerate() {
            // First sum: drop one argument, act on the coefficients.
            // 1-based p = p0 + 1, so (-1)^{p+1} is positive for even p0.
            for (p0, &t) in set_t.iter().enumerate() {
                let s: Vec<usize> = set_t.iter().copied().filter(|&u| u != t).collect();
                let s_idx = src_index[s.as_slice()];
                for v in 0..d {
                    for w in 0..d {
                        let a = &module.action(t)[w][v];
                        if a.is_zero() {
                            continue;
                        }
                        let val = if p0 % 2 == 0 { a.clone() } else { -a.clone() };
                        mat.add_to(t_idx * d + w, s_idx * d + v, val);
                    }
                }
            }
            // Second sum: contract one pair into a bracket; the bracket
            // element sorts in from the front. (-1)^{p+r} = (-1)^{p0+r0}.
            for p0 in 0..set_t.len() {
                for r0 in p0 + 1..set_t.len() {
                    let (a, b) = (set_t[p0], set_t[r0]);
                    let rest: Vec<usize> = set_t
                        .iter()
                        .copied()
                        .filter(|&u| u != a && u != b)
                        .collect();
                    for (k, coef) in g.bracket(a, b).iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let Some((sorted, sign)) = insert_with_sign(k, &rest, 0) else {
                            continue;
                        };
                        let s_idx = src_index[sorted.as_slice()];
                        let negative = ((p0 + r0) % 2 == 1) ^ (sign < 0);
                        let val = if negative {
                            -coef.clone()
                        } else {
                            coef.clone()
                        };
                        for v in 0..d {
                            mat.add_to(t_idx * d + v, s_idx * d + v, val.clone());
                        }
                    }
                }
            }
        }
        maps.push(mat);
    }
    FiniteComplex::new(dims, maps)
}

/// Chain complex `C_q = wedge^q g (x) M`, stored in cochain orientation by
/// codegree: index `i` of the result is homological degree `n - i`.
pub fn lie_chain_complex<F: Scalar>(
    g: &AlgRef<F>,
    module: &LieModule<F>,
) -> Result<FiniteComplex<F>, CeError> {
    if !same_algebra(g, module.algebra()) {
        return Err(CeError::AlgebraMismatch);
    }
    let n = g.dim();
    let d = module.dim();
    let chain_dims: Vec<usize> = (0..=n).map(|q| binomial(n, q) * d).collect();
    let mut chain_maps = Vec::with_capacity(n);
    for q in 1..=n {
        let src = subsets(n, q);
        let tgt = subsets(n, q - 1);
        let tgt_index = subset_index(&tgt);
        let mut mat = SparseMatrix::zero(chain_dims[q - 1], chain_dims[q]);
        for (s_idx, set_s) in src.iter().enumerate() {
            // First sum: (-1)^p with p = p0 + 1 -> negative for even p0.
            for (p0, &s) in set_s.iter().enumerate() {
                let rest: Vec<usize> = set_s.iter().copied().filter(|&u| u != s).collect();
                let t_idx = tgt_index[rest.as_slice()];
                for v in 0..d {
                    for w in 0..d {
                        let a = &module.action(s)[w][v];
                        if a.is_zero() {
                            continue;
                        }
                        let val = if p0 % 2 == 0 { -a.clone() } else { a.clone() };
                        mat.add_to(t_idx * d + w, s_idx * d + v, val);
                    }
                }
            }
            for p0 in 0..set_s.len() {
                for r0 in p0 + 1..set_s.len() {
                    let (a, b) = (set_s[p0], set_s[r0]);
                    let rest: Vec<usize> = set_s
                        .iter()
                        .copied()
                        .filter(|&u| u != a && u != b)
                        .collect();
                    for (k, coef) in g.bracket(a, b).iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        let Some((sorted, sign)) = insert_with_sign(k, &rest, 0) else {
                            continue;
                        };
                        let t_idx = tgt_index[sorted.as_slice()];
                        let negative = ((p0 + r0) % 2 == 1) ^ (sign < 0);
                        let val = if negative {
                            -coef.clone()
                        } else {
                            coef.clone()
                        };
                        for v in 0..d {
                            mat.add_to(t_idx * d + v, s_idx * d + v, val.clone());
                        }
                    }
                }
            }
        }
        chain_maps.push(mat);
    }
    descending_to_complex(chain_dims, chain_maps)
}

/// Repackage `d_q : C_q -> C_{q-1}` chain data as an ascending complex
/// (index = codegree).
fn descending_to_complex<F: Scalar>(
    chain_dims: Vec<usize>,
    chain_maps: Vec<SparseMatrix<F>>,
) -> Result<FiniteComplex<F>, CeError> {
    let top = chain_dims.len() - 1;
    let dims: Vec<usize> = (0..=top).map(|i| chain_dims[top - i]).collect();
    let maps: Vec<SparseMatrix<F>> = (0..top).map(|i| chain_maps[top - i - 1].clone()).collect();
    FiniteComplex::new(dims, maps)
}

/// Cohomology dimensions `H^0..H^n` of a finite module.
pub fn lie_cohomology_dims<F: Scalar>(
    g: &AlgRef<F>,
    module: &LieModule<F>,
) -> Result<Vec<usize>, CeError> {
    Ok(lie_cochain_complex(g, module)?.cohomology_dims())
}

/// Homology dimensions `H_0..H_n` of a finite module.
pub fn lie_homology_dims<F: Scalar>(
    g: &AlgRef<F>,
    module: &LieModule<F>,
) -> Result<Vec<usize>, CeError> {
    let mut dims = lie_chain_complex(g, module)?.cohomology_dims();
    dims.reverse();
    Ok(dims)
}

/// Which side the free modules of a [`FreeUComplex`] live on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    FreeLeft,
    FreeRight,
}

/// A complex of free `U(g)`-modules with entries in the enveloping
/// algebra. `diffs[i-1]` is the matrix of `delta_i : K_i -> K_{i-1}` in the
/// lexicographic wedge bases; for free left modules a map sends the basis
/// element `e_c` to `sum_r entry[r][c] e_r`, coefficients on the left.
#[derive(Debug, Clone)]
pub struct FreeUComplex<F> {
    algebra: AlgRef<F>,
    ranks: Vec<usize>,
    diffs: Vec<Vec<Vec<UeaElement<F>>>>,
    side: Side,
    raise: usize,
}

impl<F: Scalar> FreeUComplex<F> {
    pub fn algebra(&self) -> &AlgRef<F> {
        &self.algebra
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Matrix of `delta_i : K_i -> K_{i-1}` (`1 <= i <= top`).
    pub fn diff(&self, i: usize) -> &Vec<Vec<UeaElement<F>>> {
        &self.diffs[i - 1]
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Largest filtration degree among the differential entries.
    pub fn raise(&self) -> usize {
        self.raise
    }
}

/// Matrix of the boundary `delta_i : K_i(g; h) -> K_{i-1}(g; h)` of the
/// standard resolution relative to an ideal `h <= g`:
///
/// `delta(1 (x) h_1^..^h_i) = sum_p (-1)^{p+1} h_p (x) (..^h_p..)
///  + sum_{p<r} (-1)^{p+r} 1 (x) \[h_p,h_r\]^(..^h_p..^h_r..)`.
///
/// Entries have filtration degree at most one.
pub fn ce_boundary_matrix<F: Scalar>(
    g: &AlgRef<F>,
    h: &LieIdeal<F>,
    i: usize,
) -> Result<Vec<Vec<UeaElement<F>>>, CeError> {
    if !same_algebra(g, h.algebra()) {
        return Err(CeError::AlgebraMismatch);
    }
    let m = h.dim();
    if i == 0 || i > m {
        return Err(CeError::DegreeOutOfRange { i, m });
    }
    let src = subsets(m, i);
    let tgt = subsets(m, i - 1);
    let tgt_index = subset_index(&tgt);
    // [h_p, h_r] expressed in the ideal basis, precomputed.
    let mut bracket_coords = vec![vec![Vec::new(); m]; m];
    for p in 0..m {
        for r in 0..m {
            let br = g.bracket_vectors(&h.rows()[p], &h.rows()[r]);
            bracket_coords[p][r] = h
                .coords(&br)
                .expect("an ideal is closed under its own bracket");
        }
    }
    let mut mat = vec![vec![UeaElement::zero(g); src.len()]; tgt.len()];
    for (c_idx, set_s) in src.iter().enumerate() {
        for (p0, &sp) in set_s.iter().enumerate() {
            let rest: Vec<usize> = set_s.iter().copied().filter(|&u| u != sp).collect();
            let r_idx = tgt_index[rest.as_slice()];
            // h_p as a degree-one element of U(g), sign (-1)^{p+1}.
            let mut gen = UeaElement::zero(g);
            for (t, coef) in h.rows()[sp].iter().enumerate() {
                if !coef.is_zero() {
                    gen = gen.add(&UeaElement::generator(g, t).scale(coef))?;
                }
            }
            if p0 % 2 == 1 {
                gen = gen.neg();
            }
            mat[r_idx][c_idx] = mat[r_idx][c_idx].add(&gen)?;
        }
        for p0 in 0..set_s.len() {
            for r0 in p0 + 1..set_s.len() {
                let (a, b) = (set_s[p0], set_s[r0]);
                let rest: Vec<usize> = set_s
                    .iter()
                    .copied()
                    .filter(|&u| u != a && u != b)
                    .collect();
                for (k, coef) in bracket_coords[a][b].iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let Some((sorted, sign)) = insert_with_sign(k, &rest, 0) else {
                        continue;
                    };
                    let r_idx = tgt_index[sorted.as_slice()];
                    let negative = ((p0 + r0) % 2 == 1) ^ (sign < 0);
                    let scalar = if negative {
                        -coef.clone()
                    } else {
                        coef.clone()
                    };
                    mat[r_idx][c_idx] = mat[r_idx][c_idx].add(&UeaElement::scalar(g, scalar))?;
                }
            }
        }
    }
    Ok(mat)
}

/// The full standard resolution `K_.(g; h)`, with `delta o delta = 0`
/// verified symbolically in `U(g)`.
pub fn standard_resolution<F: Scalar>(
    g: &AlgRef<F>,
    h: &LieIdeal<F>,
) -> Result<FreeUComplex<F>, CeError> {
    let m = h.dim();
    let ranks: Vec<usize> = (0..=m).map(|i| binomial(m, i)).collect();
    let mut diffs = Vec::with_capacity(m);
    for i in 1..=m {
        diffs.push(ce_boundary_matrix(g, h, i)?);
    }
    let raise = diffs
        .iter()
        .flatten()
        .flatten()
        .filter_map(UeaElement::degree)
        .max()
        .unwrap_or(0);
    let complex = FreeUComplex {
        algebra: g.clone(),
        ranks,
        diffs,
        side: Side::FreeLeft,
        raise,
    };
    check_composition(&complex)?;
    Ok(complex)
}

/// Symbolic verification that consecutive boundaries compose to zero.
pub fn check_delta_squared<F: Scalar>(g: &AlgRef<F>, h: &LieIdeal<F>) -> Result<(), CeError> {
    standard_resolution(g, h).map(|_| ())
}

fn check_composition<F: Scalar>(k: &FreeUComplex<F>) -> Result<(), CeError> {
    for i in 1..k.top() {
        // delta_i o delta_{i+1} : K_{i+1} -> K_{i-1}.
        let outer = k.diff(i);
        let inner = k.diff(i + 1);
        for r in 0..outer.len() {
            for c in 0..inner[0].len() {
                let mut acc = UeaElement::zero(&k.algebra);
                for (t, inner_row) in inner.iter().enumerate() {
                    // Free left modules: the inner entry multiplies on the left.
                    acc = acc.add(&inner_row[c].mul(&outer[r][t])?)?;
                }
                if !acc.is_zero() {
                    return Err(CeError::NonzeroComposition {
                        degree: i,
                        row: r,
                        col: c,
                        witness: acc.to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Elements of `K_i(g; h)` as coordinate vectors over `U(g)`.
type KVec<F> = Vec<UeaElement<F>>;

/// Right action of `U(g)` on `K_.(g; h)`: right multiplication on the free
/// coordinate plus the adjoint action on the wedge factor, extended as a
/// derivation. The wedge stays inside `h` because `h` is an ideal.
struct RightAction<F> {
    algebra: AlgRef<F>,
    /// `wedge_action[i][j][s]` lists the targets of `xi_s . x_j` in
    /// `wedge^i h`, with scalar coefficients.
    wedge_action: Vec<Vec<Vec<Vec<(usize, F)>>>>,
}

impl<F: Scalar> RightAction<F> {
    fn new(g: &AlgRef<F>, h: &LieIdeal<F>) -> Self {
        let n = g.dim();
        let m = h.dim();
        // Coordinates of [h_p, x_j] in the ideal basis.
        let mut ad_coords = vec![vec![Vec::new(); n]; m];
        for p in 0..m {
            for j in 0..n {
                let mut e = vec![F::zero(); n];
                e[j] = F::one();
                let br = g.bracket_vectors(&h.rows()[p], &e);
                ad_coords[p][j] = h.coords(&br).expect("h is an ideal");
            }
        }
        let mut wedge_action = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let sets = subsets(m, i);
            let index = subset_index(&sets);
            let mut per_gen = vec![vec![Vec::new(); sets.len()]; n];
            for (s_idx, set_s) in sets.iter().enumerate() {
                for (slot, &sp) in set_s.iter().enumerate() {
                    let others: Vec<usize> = set_s
                        .iter()
                        .enumerate()
                        .filter(|&(t, _)| t != slot)
                        .map(|(_, &e)| e)
                        .collect();
                    for (j, targets) in per_gen.iter_mut().enumerate() {
                        for (t, coef) in ad_coords[sp][j].iter().enumerate() {
                            if coef.is_zero() {
                                continue;
                            }
                            if let Some((sorted, sign)) = insert_with_sign(t, &others, slot) {
                                let tgt = index[sorted.as_slice()];
                                let val = if sign < 0 {
                                    -coef.clone()
                                } else {
                                    coef.clone()
                                };
                                targets[s_idx].push((tgt, val));
                            }
                        }
                    }
                }
            }
            wedge_action.push(per_gen);
        }
        RightAction {
            algebra: g.clone(),
            wedge_action,
        }
    }

    fn mul_gen(&self, degree: usize, v: &KVec<F>, j: usize) -> Result<KVec<F>, CeError> {
        let gen = UeaElement::generator(&self.algebra, j);
        let mut out: KVec<F> = v.iter().map(|u| u.mul(&gen)).collect::<Result<_, _>>()?;
        for (s_idx, u) in v.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (tgt, coef) in &self.wedge_action[degree][j][s_idx] {
                out[*tgt] = out[*tgt].add(&u.scale(coef))?;
            }
        }
        Ok(out)
    }

    fn mul_element(
        &self,
        degree: usize,
        v: &KVec<F>,
        w: &UeaElement<F>,
    ) -> Result<KVec<F>, CeError> {
        let mut out = vec![UeaElement::zero(&self.algebra); v.len()];
        for (mono, coef) in w.terms() {
            let mut acc = v.clone();
            for (j, &e) in mono.exps().iter().enumerate() {
                for _ in 0..e {
                    acc = self.mul_gen(degree, &acc, j)?;
                }
            }
            for (o, a) in out.iter_mut().zip(&acc) {
                *o = o.add(&a.scale(coef))?;
            }
        }
        Ok(out)
    }
}

fn apply_delta<F: Scalar>(mat: &[Vec<UeaElement<F>>], v: &KVec<F>) -> Result<KVec<F>, CeError> {
    let algebra = mat[0][0].algebra().clone();
    let mut out = vec![UeaElement::zero(&algebra); mat.len()];
    for (r, row) in mat.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            if !entry.is_zero() && !v[c].is_zero() {
                out[r] = out[r].add(&v[c].mul(entry)?)?;
            }
        }
    }
    Ok(out)
}

/// Verify that the boundary commutes with the right `U(g)`-action: on every
/// generator against every wedge basis element, then against `samples`
/// seeded random right multipliers of degree at most two.
pub fn check_right_equivariance<F: Scalar>(
    g: &AlgRef<F>,
    h: &LieIdeal<F>,
    samples: usize,
    seed: u64,
) -> Result<(), CeError> {
    let complex = standard_resolution(g, h)?;
    let action = RightAction::new(g, h);
    let m = h.dim();
    if m == 0 {
        return Ok(());
    }
    for i in 1..=m {
        let mat = complex.diff(i);
        let rank = complex.ranks()[i];
        for j in 0..g.dim() {
            for s in 0..rank {
                let mut unit = vec![UeaElement::zero(g); rank];
                unit[s] = UeaElement::one(g);
                let lhs = apply_delta(mat, &action.mul_gen(i, &unit, j)?)?;
                let rhs = action.mul_gen(i - 1, &apply_delta(mat, &unit)?, j)?;
                if lhs != rhs {
                    return Err(CeError::EquivarianceViolation {
                        degree: i,
                        basis: s,
                        multiplier: g.labels()[j].clone(),
                    });
                }
            }
        }
    }
    let mut rng = SplitMix::new(seed);
    for _ in 0..samples {
        let i = 1 + rng.below(m);
        let w = random_element(g, 2, 2, &mut rng);
        let mat = complex.diff(i);
        let rank = complex.ranks()[i];
        for s in 0..rank {
            let mut unit = vec![UeaElement::zero(g); rank];
            unit[s] = UeaElement::one(g);
            let lhs = apply_delta(mat, &action.mul_element(i, &unit, &w)?)?;
            let rhs = action.mul_element(i - 1, &apply_delta(mat, &unit)?, &w)?;
            if lhs != rhs {
                return Err(CeError::EquivarianceViolation {
                    degree: i,
                    basis: s,
                    multiplier: w.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Specialize the standard resolution at the trivial module (send every
/// generator to zero) and return homology dimensions `H_0..H_m`. For
/// `h = g` this is the finite shadow of the resolution being a resolution:
/// `H_0 = k` and the higher homology is Lie-algebra homology with trivial
/// coefficients.
pub fn trivial_specialization_homology<F: Scalar>(
    k: &FreeUComplex<F>,
) -> Result<Vec<usize>, CeError> {
    let chain_dims = k.ranks().to_vec();
    let mut chain_maps = Vec::new();
    for i in 1..=k.top() {
        let mat_u = k.diff(i);
        let mut mat = SparseMatrix::zero(chain_dims[i - 1], chain_dims[i]);
        for (r, row) in mat_u.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                mat.set(r, c, e.constant_term());
            }
        }
        chain_maps.push(mat);
    }
    if chain_maps.is_empty() {
        return Ok(chain_dims);
    }
    let complex = descending_to_complex(chain_dims, chain_maps)?;
    let mut dims = complex.cohomology_dims();
    dims.reverse();
    Ok(dims)
}

/// A k-central bimodule: commuting left and right actions of `U(g)`.
#[derive(Debug, Clone)]
pub struct KcBimodule<F> {
    algebra: AlgRef<F>,
    dim: usize,
    left: Vec<Vec<Vec<F>>>,
    right: Vec<Vec<Vec<F>>>,
}

impl<F: Scalar> KcBimodule<F> {
    /// Validate the left representation law, the right one
    /// (`rho([x,y]) = rho(y) rho(x) - rho(x) rho(y)`), and k-centrality
    /// (every left matrix commutes with every right matrix).
    pub fn new(
        algebra: &AlgRef<F>,
        dim: usize,
        left: Vec<Vec<Vec<F>>>,
        right: Vec<Vec<Vec<F>>>,
    ) -> Result<Self, CeError> {
        let n = algebra.dim();
        LieModule::new(algebra, dim, left.clone())?;
        if right.len() != n
            || right
                .iter()
                .any(|mat| mat.len() != dim || mat.iter().any(|r| r.len() != dim))
        {
            return Err(CeError::Lie(LieError::Shape(format!(
                "expected {n} right action matrices of size {dim}x{dim}"
            ))));
        }
        for i in 0..n {
            for j in 0..n {
                let mut lhs = dmat_zero(dim);
                for (k, coef) in algebra.bracket(i, j).iter().enumerate() {
                    if !coef.is_zero() {
                        lhs = dmat_add(&lhs, &dmat_scale(&right[k], coef));
                    }
                }
                let rhs = dmat_sub(
                    &dmat_mul(&right[j], &right[i]),
                    &dmat_mul(&right[i], &right[j]),
                );
                if lhs != rhs {
                    return Err(CeError::Lie(LieError::NotRepresentation { i, j }));
                }
                if dmat_mul(&left[i], &right[j]) != dmat_mul(&right[j], &left[i]) {
                    return Err(CeError::Lie(LieError::NotRepresentation { i, j }));
                }
            }
        }
        Ok(KcBimodule {
            algebra: algebra.clone(),
            dim,
            left,
            right,
        })
    }

    /// The trivial one-dimensional bimodule.
    pub fn trivial(algebra: &AlgRef<F>) -> Self {
        let n = algebra.dim();
        KcBimodule {
            algebra: algebra.clone(),
            dim: 1,
            left: vec![vec![vec![F::zero()]]; n],
            right: vec![vec![vec![F::zero()]]; n],
        }
    }

    /// A left module viewed as a bimodule with zero right action.
    pub fn from_left_module(module: &LieModule<F>) -> Self {
        let n = module.algebra().dim();
        let dim = module.dim();
        KcBimodule {
            algebra: module.algebra().clone(),
            dim,
            left: (0..n).map(|i| module.action(i).clone()).collect(),
            right: vec![dmat_zero(dim); n],
        }
    }

    pub fn algebra(&self) -> &AlgRef<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The adjoint module `x.m = xm - mx`: the bridge from Hochschild to
    /// Lie-algebra (co)homology. k-centrality makes this a representation.
    pub fn adjoint_module(&self) -> LieModule<F> {
        let n = self.algebra.dim();
        let action: Vec<Vec<Vec<F>>> = (0..n)
            .map(|i| dmat_sub(&self.left[i], &self.right[i]))
            .collect();
        LieModule::new(&self.algebra, self.dim, action)
            .expect("adjoint action of a k-central bimodule is a representation")
    }
}

/// Hochschild cohomology and homology dimensions of `U(g)` with
/// coefficients in a finite k-central bimodule, through the adjoint module.
pub fn hochschild_dims<F: Scalar>(
    g: &AlgRef<F>,
    bimodule: &KcBimodule<F>,
) -> Result<(Vec<usize>, Vec<usize>), CeError> {
    if !same_algebra(g, bimodule.algebra()) {
        return Err(CeError::AlgebraMismatch);
    }
    let ad = bimodule.adjoint_module();
    Ok((lie_cohomology_dims(g, &ad)?, lie_homology_dims(g, &ad)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian, heis3, r2, r2_plus_r2, r3, sl2};
    use crate::lie::{unimodular_character, Character};
    use crate::scalar::{rat_int, Rat};
    use num_traits::{One, Zero};

    fn full_ideal(g: &AlgRef<Rat>) -> LieIdeal<Rat> {
        let n = g.dim();
        let rows = (0..n)
            .map(|i| {
                let mut e = vec![Rat::zero(); n];
                e[i] = Rat::one();
                e
            })
            .collect();
        LieIdeal::new(g, rows).unwrap()
    }

    #[test]
    fn boundary_matrix_degree_one_is_the_inclusion() {
        let g = r2();
        let h = LieIdeal::new(&g, vec![vec![rat_int(0), rat_int(1)]]).unwrap();
        let mat = ce_boundary_matrix(&g, &h, 1).unwrap();
        assert_eq!(mat.len(), 1);
        assert_eq!(mat[0].len(), 1);
        assert_eq!(mat[0][0], UeaElement::generator(&g, 1));
    }

    #[test]
    fn boundary_matrix_top_of_r2() {
        let g = r2();
        let h = full_ideal(&g);
        let mat = ce_boundary_matrix(&g, &h, 2).unwrap();
        // delta(1 (x) x^y) = x (x) y - y (x) x - 1 (x) y: column (-y, x - 1).
        let x = UeaElement::generator(&g, 0);
        let y = UeaElement::generator(&g, 1);
        assert_eq!(mat[0][0], y.neg());
        assert_eq!(mat[1][0], x.sub(&UeaElement::one(&g)).unwrap());
    }

    #[test]
    fn delta_squared_vanishes_on_catalog_pairs() {
        for g in [r2(), sl2(), abelian(4), heis3(), r3(2), r2_plus_r2()] {
            let h = full_ideal(&g);
            check_delta_squared(&g, &h).unwrap();
        }
    }

    #[test]
    fn right_equivariance_holds() {
        for g in [abelian(3), r2(), sl2()] {
            let h = full_ideal(&g);
            check_right_equivariance(&g, &h, 25, 17).unwrap();
        }
        let g = heis3();
        let center = LieIdeal::new(&g, vec![vec![rat_int(0), rat_int(0), rat_int(1)]]).unwrap();
        check_right_equivariance(&g, &center, 25, 17).unwrap();
    }

    #[test]
    fn cochain_complex_of_abelian_algebra_is_zero() {
        let g = abelian(3);
        let complex = lie_cochain_complex(&g, &LieModule::trivial(&g)).unwrap();
        assert_eq!(complex.cohomology_dims(), vec![1, 3, 3, 1]);
        for q in 0..3 {
            assert_eq!(complex.map(q).nnz(), 0);
        }
    }

    #[test]
    fn cohomology_with_trivial_coefficients() {
        let r2 = r2();
        assert_eq!(
            lie_cohomology_dims(&r2, &LieModule::trivial(&r2)).unwrap(),
            vec![1, 1, 0]
        );
        let sl2 = sl2();
        assert_eq!(
            lie_cohomology_dims(&sl2, &LieModule::trivial(&sl2)).unwrap(),
            vec![1, 0, 0, 1]
        );
        let h3 = heis3();
        assert_eq!(
            lie_cohomology_dims(&h3, &LieModule::trivial(&h3)).unwrap(),
            vec![1, 2, 2, 1]
        );
    }

    #[test]
    fn homology_with_trivial_and_twisted_coefficients() {
        let g = r2();
        assert_eq!(
            lie_homology_dims(&g, &LieModule::trivial(&g)).unwrap(),
            vec![1, 1, 0]
        );
        // The twisted line: x acts by -1, y by 0.
        let chi = Character::new(&g, vec![rat_int(-1), rat_int(0)]).unwrap();
        assert_eq!(
            lie_homology_dims(&g, &chi.to_module()).unwrap(),
            vec![0, 1, 1]
        );
        let ab = abelian(2);
        assert_eq!(
            lie_homology_dims(&ab, &LieModule::trivial(&ab)).unwrap(),
            vec![1, 2, 1]
        );
    }

    #[test]
    fn degree_zero_cohomology_is_the_invariants() {
        // H^0 = kernel of the stacked action matrices, H_0 = cokernel;
        // both recomputed here directly from the module data.
        for g in [r2(), sl2(), heis3(), r3(1)] {
            for module in [LieModule::trivial(&g), LieModule::adjoint(&g)] {
                let n = g.dim();
                let d = module.dim();
                let mut stacked = SparseMatrix::zero(n * d, d);
                for i in 0..n {
                    for r in 0..d {
                        for c in 0..d {
                            stacked.set(i * d + r, c, module.action(i)[r][c].clone());
                        }
                    }
                }
                let invariants = d - stacked.rank();
                assert_eq!(lie_cohomology_dims(&g, &module).unwrap()[0], invariants);

                let mut side_by_side = SparseMatrix::zero(d, n * d);
                for i in 0..n {
                    for r in 0..d {
                        for c in 0..d {
                            side_by_side.set(r, i * d + c, module.action(i)[r][c].clone());
                        }
                    }
                }
                let coinvariants = d - side_by_side.rank();
                assert_eq!(lie_homology_dims(&g, &module).unwrap()[0], coinvariants);
            }
        }
    }

    #[test]
    fn boundary_matrix_degree_one_lists_the_generators() {
        let g = sl2();
        let h = full_ideal(&g);
        let mat = ce_boundary_matrix(&g, &h, 1).unwrap();
        assert_eq!(mat.len(), 1);
        for j in 0..3 {
            assert_eq!(mat[0][j], UeaElement::generator(&g, j));
        }
    }

    #[test]
    fn euler_characteristic_vanishes() {
        let g = heis3();
        let ad = LieModule::adjoint(&g);
        let h = lie_cohomology_dims(&g, &ad).unwrap();
        let chi: i64 = h
            .iter()
            .enumerate()
            .map(|(q, &d)| if q % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        assert_eq!(chi, 0);
    }

    #[test]
    fn untwisted_duality_for_unimodular_algebras() {
        for g in [abelian(3), sl2(), heis3(), r3(-1)] {
            assert!(unimodular_character(&g).is_zero());
            let triv = LieModule::trivial(&g);
            let coh = lie_cohomology_dims(&g, &triv).unwrap();
            let mut hom = lie_homology_dims(&g, &triv).unwrap();
            hom.reverse();
            assert_eq!(coh, hom);
        }
    }

    #[test]
    fn quasi_isomorphism_spot_check() {
        for g in [r2(), sl2(), heis3()] {
            let k = standard_resolution(&g, &full_ideal(&g)).unwrap();
            let spec = trivial_specialization_homology(&k).unwrap();
            let expected = lie_homology_dims(&g, &LieModule::trivial(&g)).unwrap();
            assert_eq!(spec, expected);
            assert_eq!(spec[0], 1);
        }
    }

    #[test]
    fn adjoint_of_bimodule_cases() {
        let g = r2();
        let ad = LieModule::adjoint(&g);
        let b = KcBimodule::from_left_module(&ad);
        assert_eq!(b.adjoint_module(), ad);
        let t = KcBimodule::trivial(&g);
        assert_eq!(t.adjoint_module(), LieModule::trivial(&g));
        // Equal left and right actions cancel to the zero action.
        let chi: Vec<Vec<Vec<Rat>>> = vec![vec![vec![rat_int(5)]], vec![vec![rat_int(0)]]];
        let same = KcBimodule::new(&g, 1, chi.clone(), chi).unwrap();
        let z = same.adjoint_module();
        assert!(z.action(0)[0][0].is_zero() && z.action(1)[0][0].is_zero());
    }

    #[test]
    fn hochschild_dimension_tables() {
        let g = r2();
        let (coh, hom) = hochschild_dims(&g, &KcBimodule::trivial(&g)).unwrap();
        assert_eq!(coh, vec![1, 1, 0]);
        assert_eq!(hom, vec![1, 1, 0]);

        let ab = abelian(3);
        let (coh, hom) = hochschild_dims(&ab, &KcBimodule::trivial(&ab)).unwrap();
        assert_eq!(coh, vec![1, 3, 3, 1]);
        assert_eq!(hom, coh);

        // Whitehead vanishing: the adjoint bimodule over sl2.
        let s = sl2();
        let b = KcBimodule::from_left_module(&LieModule::adjoint(&s));
        let (coh, hom) = hochschild_dims(&s, &b).unwrap();
        assert_eq!(coh, vec![0, 0, 0, 0]);
        assert_eq!(hom, vec![0, 0, 0, 0]);
    }

    #[test]
    fn ce_boundary_rejects_bad_degrees() {
        let g = r2();
        let h = full_ideal(&g);
        assert!(matches!(
            ce_boundary_matrix(&g, &h, 3),
            Err(CeError::DegreeOutOfRange { .. })
        ));
    }
}
