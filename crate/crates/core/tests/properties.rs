//! Property tests: exact linear algebra against an independent dense
//! oracle, and algebraic invariants that must hold on arbitrary inputs.

use liecheck::catalog::{catalog, heis3, r2, r3, sl2};
use liecheck::ce::lie_cochain_complex;
use liecheck::lie::{unimodular_character, LieAlgebra, LieModule};
use liecheck::linalg::SparseMatrix;
use liecheck::rng::SplitMix;
use liecheck::scalar::{rat, rat_int, Rat};
use liecheck::AlgRef;

use num_traits::Zero;
use proptest::prelude::*;
use std::sync::Arc;

/// Plain dense Gaussian elimination, structurally independent of the
/// library's sparse elimination: first nonzero pivot, no sparsity
/// heuristics, forward elimination only.
fn dense_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() / rows[rank][col].clone();
            for c in col..ncols {
                let delta = factor.clone() * rows[rank][c].clone();
                rows[r][c] = rows[r][c].clone() - delta;
            }
        }
        rank += 1;
    }
    rank
}

fn to_dense(m: &SparseMatrix<Rat>) -> Vec<Vec<Rat>> {
    let mut rows = vec![vec![rat_int(0); m.cols()]; m.rows()];
    for (r, c, v) in m.iter() {
        rows[r][c] = v.clone();
    }
    rows
}

fn entry_strategy() -> impl Strategy<Value = Rat> {
    prop_oneof![
        3 => Just(rat_int(0)),
        2 => (-6i64..=6, 1i64..=3).prop_map(|(p, q)| rat(p, q)),
    ]
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = SparseMatrix<Rat>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(entry_strategy(), r * c).prop_map(move |vals| {
            let rows: Vec<Vec<Rat>> = vals.chunks(c).map(|ch| ch.to_vec()).collect();
            SparseMatrix::from_rows(&rows)
        })
    })
}

proptest! {
    #[test]
    fn rank_equals_transpose_rank(m in matrix_strategy(6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_matches_the_dense_oracle(m in matrix_strategy(6)) {
        prop_assert_eq!(m.rank(), dense_rank(to_dense(&m)));
    }

    #[test]
    fn kernel_vectors_annihilate_exactly(m in matrix_strategy(6)) {
        let basis = m.kernel_basis();
        prop_assert_eq!(basis.len(), m.cols() - m.rank());
        for v in &basis {
            prop_assert!(m.mul_vec(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn rank_is_invariant_under_permutation_and_scaling(
        m in matrix_strategy(6),
        seed in any::<u64>(),
    ) {
        let mut rng = SplitMix::new(seed);
        let mut row_perm: Vec<usize> = (0..m.rows()).collect();
        for i in (1..row_perm.len()).rev() {
            row_perm.swap(i, rng.below(i + 1));
        }
        let mut col_perm: Vec<usize> = (0..m.cols()).collect();
        for i in (1..col_perm.len()).rev() {
            col_perm.swap(i, rng.below(i + 1));
        }
        let scales: Vec<Rat> = (0..m.rows()).map(|_| rng.small_scalar()).collect();
        let mut shuffled = SparseMatrix::zero(m.rows(), m.cols());
        for (r, c, v) in m.iter() {
            shuffled.set(row_perm[r], col_perm[c], v.clone() * scales[r].clone());
        }
        prop_assert_eq!(m.rank(), shuffled.rank());
    }

    /// Change of basis by an arbitrary invertible integer matrix keeps the
    /// axioms valid and the unimodular character a character.
    #[test]
    fn base_changed_algebras_stay_valid(
        which in 0usize..4,
        entries in prop::collection::vec(-2i64..=2, 16),
        diag in prop::collection::vec(1i64..=2, 4),
    ) {
        let g: AlgRef<Rat> = [r2(), heis3(), sl2(), r3(2)][which].clone();
        let n = g.dim();
        // Unit-triangular-ish perturbation keeps the matrix invertible.
        let mut p = vec![vec![rat_int(0); n]; n];
        for i in 0..n {
            for (j, row) in p.iter_mut().enumerate().take(n) {
                if i < j {
                    row[i] = rat_int(entries[j * 4 + i]);
                }
            }
            p[i][i] = rat_int(diag[i]);
        }
        prop_assume!(dense_rank(p.clone()) == n);
        let mut c = vec![vec![vec![rat_int(0); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let br = g.bracket_vectors(&p[i], &p[j]);
                let coords = solve_in_span(&p, &br).expect("p is invertible");
                c[i][j] = coords;
            }
        }
        let labels = (0..n).map(|i| format!("b{i}")).collect();
        let conjugated = Arc::new(LieAlgebra::new(labels, c).unwrap());
        conjugated.validate().unwrap();
        // The constructor validates the character axiom.
        let _ = unimodular_character(&conjugated);
    }
}

/// Exact solve of `x * basis = target` by augmented dense elimination,
/// local to this test file.
fn solve_in_span(basis: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let m = basis.len();
    let n = target.len();
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rat> = (0..m).map(|i| basis[i][j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    // Reduced echelon with back substitution.
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..=m {
        let Some(p) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rat_int(1) / rows[next][col].clone();
        for v in rows[next].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..rows.len() {
            if r != next && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c2 in 0..=m {
                    let delta = f.clone() * rows[next][c2].clone();
                    rows[r][c2] = rows[r][c2].clone() - delta;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    if pivots.contains(&m) {
        return None;
    }
    let mut out = vec![rat_int(0); m];
    for (row, &col) in rows.iter().zip(&pivots) {
        out[col] = row[m].clone();
    }
    Some(out)
}

#[test]
fn multiplication_is_associative_on_random_triples() {
    use liecheck::pbw::UeaElement;
    use liecheck::rng::random_element;
    let mut rng = SplitMix::new(2024);
    for entry in catalog() {
        let g = &entry.algebra;
        for _ in 0..20 {
            let u = random_element(g, 3, 3, &mut rng);
            let v = random_element(g, 3, 3, &mut rng);
            let w = random_element(g, 3, 3, &mut rng);
            let left: UeaElement<Rat> = u.mul(&v).unwrap().mul(&w).unwrap();
            let right = u.mul(&v.mul(&w).unwrap()).unwrap();
            assert_eq!(left, right, "associativity fails over {}", entry.name);
        }
    }
}

#[test]
fn euler_characteristic_is_preserved_by_cohomology() {
    for entry in catalog() {
        for module in [
            LieModule::trivial(&entry.algebra),
            LieModule::adjoint(&entry.algebra),
        ] {
            let complex = lie_cochain_complex(&entry.algebra, &module).unwrap();
            let signed = |v: &[usize]| -> i64 {
                v.iter()
                    .enumerate()
                    .map(|(q, &d)| if q % 2 == 0 { d as i64 } else { -(d as i64) })
                    .sum()
            };
            assert_eq!(
                signed(complex.dims()),
                signed(&complex.cohomology().cohomology),
                "{}",
                entry.name
            );
        }
    }
}

#[test]
fn catalog_homology_recomputed_with_the_dense_oracle() {
    // Independent route: same complexes, ranks recomputed densely.
    for entry in catalog() {
        let complex =
            lie_cochain_complex(&entry.algebra, &LieModule::trivial(&entry.algebra)).unwrap();
        let n = entry.algebra.dim();
        let ranks: Vec<usize> = (0..n)
            .map(|q| dense_rank(to_dense(complex.map(q))))
            .collect();
        let h: Vec<usize> = (0..=n)
            .map(|q| {
                let cycles = if q < n {
                    complex.dims()[q] - ranks[q]
                } else {
                    complex.dims()[n]
                };
                cycles - if q == 0 { 0 } else { ranks[q - 1] }
            })
            .collect();
        assert_eq!(h, complex.cohomology().cohomology, "{}", entry.name);
    }
}
