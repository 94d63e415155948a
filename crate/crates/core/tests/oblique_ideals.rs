//! The whole pipeline on ideals whose bases are not standard basis
//! vectors: quotients, boundary equivariance and truncated Ext all solve
//! against the given rows, so nothing here may depend on the span being
//! axis-aligned.

use liecheck::catalog::r3;
use liecheck::ce::{check_delta_squared, check_right_equivariance};
use liecheck::checks::verify_ext_quotient;
use liecheck::lie::{quotient_algebra, LieIdeal};
use liecheck::report::Verdict;
use liecheck::scalar::{rat, rat_int};
use liecheck::trunc::{hilbert_expected, HilbertKind, TruncatedComplex};

/// In r3(1) (`[x,y] = y`, `[x,z] = z`) every line inside span(y, z) is an
/// ideal; take the diagonal one.
fn diagonal_line() -> (liecheck::AlgRef<liecheck::Rat>, LieIdeal<liecheck::Rat>) {
    let g = r3(1);
    let rows = vec![vec![rat_int(0), rat_int(1), rat(1, 2)]];
    let h = LieIdeal::new(&g, rows).unwrap();
    (g, h)
}

#[test]
fn quotient_by_an_oblique_line() {
    let (g, h) = diagonal_line();
    let q = quotient_algebra(&g, &h).unwrap();
    assert_eq!(q.algebra.dim(), 2);
    q.algebra.validate().unwrap();
    // Greedy complement picks x and the first standard vector outside the
    // line, which is y.
    assert_eq!(q.complement, vec![0, 1]);
    // The projection kills the ideal.
    let killed: Vec<_> = q
        .projection
        .iter()
        .map(|row| {
            row.iter()
                .zip(h.rows()[0].iter())
                .map(|(a, b)| a.clone() * b.clone())
                .fold(rat_int(0), |acc, v| acc + v)
        })
        .collect();
    assert!(killed.iter().all(|v| v == &rat_int(0)));
}

#[test]
fn boundary_checks_hold_on_the_oblique_line() {
    let (g, h) = diagonal_line();
    check_delta_squared(&g, &h).unwrap();
    check_right_equivariance(&g, &h, 50, 99).unwrap();
}

#[test]
fn truncated_ext_concentrates_for_the_oblique_line() {
    let (g, h) = diagonal_line();
    let report = verify_ext_quotient("r3(1)", &g, "diag-line", &h, &[3, 4, 5]).unwrap();
    assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.observed);
    let t = TruncatedComplex::ext_of_quotient(&g, &h).unwrap();
    let kind = HilbertKind::QuotientEnvelope { ambient: 3, ideal: 1 };
    assert_eq!(
        t.hilbert_window(1, 5).unwrap(),
        (0..5).map(|d| hilbert_expected(kind, d)).collect::<Vec<_>>()
    );
}

#[test]
fn two_dimensional_oblique_ideal() {
    // The full commutator plane of r3(2), but presented by skewed rows.
    let g = r3(2);
    let rows = vec![
        vec![rat_int(0), rat_int(1), rat_int(1)],
        vec![rat_int(0), rat(1, 3), rat_int(-1)],
    ];
    let h = LieIdeal::new(&g, rows).unwrap();
    assert_eq!(h.dim(), 2);
    check_delta_squared(&g, &h).unwrap();
    check_right_equivariance(&g, &h, 30, 7).unwrap();
    let report = verify_ext_quotient("r3(2)", &g, "skew-plane", &h, &[3, 4, 5]).unwrap();
    assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.observed);
}
