//! Built-in catalog of small Lie algebras used by the verification suite.
//!
//! Every entry ships with its distinguished ideals precomputed: `full`
//! (the algebra itself, giving the whole standard resolution), the
//! commutator ideal, and the center when it is a proper nonzero ideal.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::lie::{center_basis, commutator_ideal, LieAlgebra, LieIdeal};
use crate::scalar::{rat_int, Rat, Scalar};
use crate::AlgRef;

/// One catalog algebra with named distinguished ideals.
pub struct CatalogEntry {
    pub name: String,
    pub algebra: AlgRef<Rat>,
    pub ideals: BTreeMap<String, LieIdeal<Rat>>,
    pub note: String,
}

fn build<F: Scalar>(labels: &[&str], brackets: &[(usize, usize, Vec<(usize, F)>)]) -> AlgRef<F> {
    let n = labels.len();
    let mut c = vec![vec![vec![F::zero(); n]; n]; n];
    for (i, j, terms) in brackets {
        for (k, v) in terms {
            c[*i][*j][*k] = v.clone();
            c[*j][*i][*k] = -v.clone();
        }
    }
    let g = LieAlgebra::new(labels.iter().map(|s| s.to_string()).collect(), c)
        .expect("catalog table shape");
    g.validate().expect("catalog algebra satisfies the axioms");
    Arc::new(g)
}

/// Abelian algebra of dimension `n`: all brackets zero.
pub fn abelian(n: usize) -> AlgRef<Rat> {
    let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    build(&refs, &[])
}

/// The nonabelian 2-dimensional algebra: basis (x, y), `[x, y] = y`.
pub fn r2() -> AlgRef<Rat> {
    build(&["x", "y"], &[(0, 1, vec![(1, rat_int(1))])])
}

/// Heisenberg algebra: basis (x, y, z), `[x, y] = z`.
pub fn heis3() -> AlgRef<Rat> {
    build(&["x", "y", "z"], &[(0, 1, vec![(2, rat_int(1))])])
}

/// sl2: basis (e, f, h), `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> AlgRef<Rat> {
    build(
        &["e", "f", "h"],
        &[
            (2, 0, vec![(0, rat_int(2))]),
            (2, 1, vec![(1, rat_int(-2))]),
            (0, 1, vec![(2, rat_int(1))]),
        ],
    )
}

/// Solvable 3-dimensional family: basis (x, y, z), `[x,y] = y`,
/// `[x,z] = mu z`. Unimodular exactly when `mu = -1`.
pub fn r3(mu: i64) -> AlgRef<Rat> {
    build(
        &["x", "y", "z"],
        &[
            (0, 1, vec![(1, rat_int(1))]),
            (0, 2, vec![(2, rat_int(mu))]),
        ],
    )
}

/// Direct sum of two copies of [`r2`]: basis (x1, y1, x2, y2).
pub fn r2_plus_r2() -> AlgRef<Rat> {
    build(
        &["x1", "y1", "x2", "y2"],
        &[(0, 1, vec![(1, rat_int(1))]), (2, 3, vec![(3, rat_int(1))])],
    )
}

fn entry(name: &str, algebra: AlgRef<Rat>, note: &str) -> CatalogEntry {
    let mut ideals = BTreeMap::new();
    let n = algebra.dim();
    let full_rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut e = vec![Rat::zero(); n];
            e[i] = Rat::one();
            e
        })
        .collect();
    ideals.insert(
        "full".to_string(),
        LieIdeal::new(&algebra, full_rows).expect("the whole algebra is an ideal"),
    );
    ideals.insert("commutator".to_string(), commutator_ideal(&algebra));
    let center = center_basis(&algebra);
    if !center.is_empty() && center.len() < n {
        ideals.insert(
            "center".to_string(),
            LieIdeal::new(&algebra, center).expect("the center is an ideal"),
        );
    }
    CatalogEntry {
        name: name.to_string(),
        algebra,
        ideals,
        note: note.to_string(),
    }
}

use num_traits::{One, Zero};

/// The full catalog, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        entry("abelian1", abelian(1), "abelian, dimension 1"),
        entry("abelian2", abelian(2), "abelian, dimension 2"),
        entry("abelian3", abelian(3), "abelian, dimension 3"),
        entry("abelian4", abelian(4), "abelian, dimension 4"),
        entry("r2", r2(), "nonabelian 2-dimensional solvable algebra"),
        entry("heis3", heis3(), "Heisenberg algebra, nilpotent"),
        entry("sl2", sl2(), "simple algebra sl(2)"),
        entry("r3(1)", r3(1), "solvable, diagonal ad with weights 1, 1"),
        entry(
            "r3(-1)",
            r3(-1),
            "solvable, unimodular member of the family",
        ),
        entry("r3(2)", r3(2), "solvable, diagonal ad with weights 1, 2"),
        entry("r2+r2", r2_plus_r2(), "direct sum of two solvable planes"),
    ]
}

/// Look up a catalog entry by name.
pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
