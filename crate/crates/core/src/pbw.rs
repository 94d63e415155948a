//! PBW normal forms: exact arithmetic in the universal enveloping algebra.
//!
//! Elements are maps from ordered monomials `x_1^{a_1} ... x_n^{a_n}` to
//! nonzero coefficients. Products are straightened by adjacent
//! transpositions: an out-of-order pair `x_j x_i` (j > i) rewrites to
//! `x_i x_j + [x_j, x_i]`, and the bracket correction strictly drops
//! degree, so the rewriting terminates. The monomial order is the input
//! basis order; there are no configurable orders.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::lie::{same_algebra, unimodular_character, Character, LieError};
use crate::scalar::{binomial, Scalar};
use crate::AlgRef;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PbwError {
    #[error("elements live over different algebras")]
    AlgebraMismatch,
}

/// Exponent vector of an ordered monomial `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    exps: Vec<u32>,
}

impl PbwMonomial {
    pub fn one(n: usize) -> Self {
        PbwMonomial { exps: vec![0; n] }
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        PbwMonomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        PbwMonomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Filtration degree: the total exponent.
    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    fn bump(&self, i: usize) -> Self {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        PbwMonomial { exps }
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the enveloping algebra in PBW normal form. Stored
/// coefficients are nonzero; zero is the empty map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UeaElement<F> {
    algebra: AlgRef<F>,
    terms: BTreeMap<PbwMonomial, F>,
}

impl<F: Scalar> UeaElement<F> {
    pub fn zero(algebra: &AlgRef<F>) -> Self {
        UeaElement {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &AlgRef<F>) -> Self {
        Self::scalar(algebra, F::one())
    }

    pub fn scalar(algebra: &AlgRef<F>, v: F) -> Self {
        let mut e = Self::zero(algebra);
        e.add_term(PbwMonomial::one(algebra.dim()), v);
        e
    }

    pub fn generator(algebra: &AlgRef<F>, i: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.add_term(PbwMonomial::generator(algebra.dim(), i), F::one());
        e
    }

    pub fn monomial(algebra: &AlgRef<F>, m: PbwMonomial) -> Self {
        let mut e = Self::zero(algebra);
        e.add_term(m, F::one());
        e
    }

    pub fn algebra(&self) -> &AlgRef<F> {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Filtration degree; `None` for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(PbwMonomial::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Option<&F> {
        self.terms.get(m)
    }

    /// Constant (degree-zero) coefficient.
    pub fn constant_term(&self) -> F {
        self.terms
            .get(&PbwMonomial::one(self.algebra.dim()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// Coefficients of the degree-one monomials, indexed by generator.
    pub fn linear_coefficients(&self) -> Vec<F> {
        let n = self.algebra.dim();
        (0..n)
            .map(|i| {
                self.terms
                    .get(&PbwMonomial::generator(n, i))
                    .cloned()
                    .unwrap_or_else(F::zero)
            })
            .collect()
    }

    /// The top-degree part as a commutative polynomial: monomial -> coeff.
    pub fn top_symbol(&self) -> BTreeMap<PbwMonomial, F> {
        let Some(d) = self.degree() else {
            return BTreeMap::new();
        };
        self.terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, v)| (m.clone(), v.clone()))
            .collect()
    }

    fn add_term(&mut self, m: PbwMonomial, v: F) {
        if v.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + v;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, v);
            }
        }
    }

    fn add_assign(&mut self, other: &Self) {
        debug_assert!(same_algebra(&self.algebra, &other.algebra));
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PbwError> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(PbwError::AlgebraMismatch);
        }
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PbwError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UeaElement {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), -v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(&self.algebra);
        }
        UeaElement {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * s.clone()))
                .collect(),
        }
    }

    /// Product in PBW normal form. Exact; `deg(uv) <= deg u + deg v`.
    pub fn mul(&self, other: &Self) -> Result<Self, PbwError> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(PbwError::AlgebraMismatch);
        }
        let mut out = Self::zero(&self.algebra);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = monomial_times_monomial(&self.algebra, ma, mb);
                let coef = ca.clone() * cb.clone();
                for (m, v) in prod.terms {
                    out.add_term(m, v * coef.clone());
                }
            }
        }
        debug_assert!(
            out.degree().unwrap_or(0) <= self.degree().unwrap_or(0) + other.degree().unwrap_or(0)
        );
        Ok(out)
    }
}

impl<F: Scalar> fmt::Display for UeaElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let labels = self.algebra.labels();
        for (idx, (m, v)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{v}")?;
                continue;
            }
            write!(f, "{v}*")?;
            let mut first = true;
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{}", labels[i])?;
                } else {
                    write!(f, "{}^{}", labels[i], e)?;
                }
            }
        }
        Ok(())
    }
}

/// Normal form of `x_j * m` for a single generator and PBW monomial.
///
/// When `x_j` already precedes every factor of `m` the product is a
/// monomial; otherwise the leading out-of-order pair is transposed and the
/// bracket correction (one degree lower) recurses.
fn gen_times_monomial<F: Scalar>(algebra: &AlgRef<F>, j: usize, m: &PbwMonomial) -> UeaElement<F> {
    let Some(first) = m.exps().iter().position(|&e| e > 0) else {
        return UeaElement::generator(algebra, j);
    };
    if j <= first {
        return UeaElement::monomial(algebra, m.bump(j));
    }
    // x_j x_i m' = x_i (x_j m') + [x_j, x_i] m'
    let i = first;
    let mut rest = m.clone();
    rest.exps[i] -= 1;
    let shifted = gen_times_monomial(algebra, j, &rest);
    let mut out = gen_times_element(algebra, i, &shifted);
    for (k, coef) in algebra.bracket(j, i).iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        let correction = gen_times_monomial(algebra, k, &rest).scale(coef);
        out.add_assign(&correction);
    }
    out
}

fn gen_times_element<F: Scalar>(algebra: &AlgRef<F>, j: usize, e: &UeaElement<F>) -> UeaElement<F> {
    let mut out = UeaElement::zero(algebra);
    for (m, v) in &e.terms {
        out.add_assign(&gen_times_monomial(algebra, j, m).scale(v));
    }
    out
}

fn monomial_times_monomial<F: Scalar>(
    algebra: &AlgRef<F>,
    a: &PbwMonomial,
    b: &PbwMonomial,
) -> UeaElement<F> {
    let mut acc = UeaElement::monomial(algebra, b.clone());
    for i in (0..a.exps().len()).rev() {
        for _ in 0..a.exps()[i] {
            acc = gen_times_element(algebra, i, &acc);
        }
    }
    acc
}

/// Dimension of the filtration step `F_D`: `binom(n + D, n)`.
pub fn filtration_dim<F: Scalar>(algebra: &crate::lie::LieAlgebra<F>, d: usize) -> usize {
    binomial(algebra.dim() + d, algebra.dim())
}

/// All monomials of degree at most `d` in `n` variables, in monomial order.
pub fn monomials_up_to(n: usize, d: usize) -> Vec<PbwMonomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(n: usize, i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<PbwMonomial>) {
        if i == n {
            out.push(PbwMonomial::from_exps(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e as u32;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(n, 0, d, &mut cur, &mut out);
    out.sort();
    out
}

/// A filtered automorphism of generator-shift form `x_i -> x_i + c_i`.
///
/// The assignment extends to an algebra automorphism exactly when the
/// shifts form a character, which the constructor enforces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredAutomorphism<F> {
    algebra: AlgRef<F>,
    shifts: Vec<F>,
}

impl<F: Scalar> FilteredAutomorphism<F> {
    pub fn from_character(character: &Character<F>) -> Self {
        FilteredAutomorphism {
            algebra: character.algebra().clone(),
            shifts: character.values().to_vec(),
        }
    }

    pub fn from_shifts(algebra: &AlgRef<F>, shifts: Vec<F>) -> Result<Self, LieError> {
        Character::new(algebra, shifts).map(|c| Self::from_character(&c))
    }

    pub fn identity(algebra: &AlgRef<F>) -> Self {
        FilteredAutomorphism {
            algebra: algebra.clone(),
            shifts: vec![F::zero(); algebra.dim()],
        }
    }

    pub fn shifts(&self) -> &[F] {
        &self.shifts
    }

    pub fn is_identity(&self) -> bool {
        self.shifts.iter().all(F::is_zero)
    }

    pub fn inverse(&self) -> Self {
        FilteredAutomorphism {
            algebra: self.algebra.clone(),
            shifts: self.shifts.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Substitute `x_i -> x_i + c_i` and renormalize. Because substitution
    /// preserves the generator order, each monomial expands by per-variable
    /// binomials with no straightening: the result of
    /// `(x_1 + c_1)^{a_1} ... (x_n + c_n)^{a_n}` is already ordered.
    pub fn apply(&self, u: &UeaElement<F>) -> Result<UeaElement<F>, PbwError> {
        if !same_algebra(&self.algebra, u.algebra()) {
            return Err(PbwError::AlgebraMismatch);
        }
        let n = self.algebra.dim();
        let mut out = UeaElement::zero(&self.algebra);
        for (m, coef) in u.terms() {
            let mut acc: Vec<(Vec<u32>, F)> = vec![(Vec::new(), coef.clone())];
            for i in 0..n {
                let a = m.exps()[i];
                let mut next = Vec::new();
                for (exps, c) in &acc {
                    if self.shifts[i].is_zero() {
                        let mut e = exps.clone();
                        e.push(a);
                        next.push((e, c.clone()));
                        continue;
                    }
                    for t in 0..=a {
                        let mut weight = scalar_from_usize::<F>(binomial(a as usize, t as usize));
                        for _ in 0..(a - t) {
                            weight = weight * self.shifts[i].clone();
                        }
                        let mut e = exps.clone();
                        e.push(t);
                        next.push((e, c.clone() * weight));
                    }
                }
                acc = next;
            }
            for (exps, c) in acc {
                out.add_term(PbwMonomial::from_exps(exps), c);
            }
        }
        Ok(out)
    }
}

/// The dualizing automorphism `x -> x - tr(ad x)`; the identity exactly
/// when the algebra is unimodular.
pub fn dualizing_automorphism<F: Scalar>(algebra: &AlgRef<F>) -> FilteredAutomorphism<F> {
    FilteredAutomorphism::from_character(&unimodular_character(algebra))
}

fn scalar_from_usize<F: Scalar>(n: usize) -> F {
    let mut acc = F::zero();
    for _ in 0..n {
        acc = acc + F::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian, r2, sl2};
    use crate::scalar::{rat_int, Rat};
    use num_traits::Zero;

    fn mono(e: &[u32]) -> PbwMonomial {
        PbwMonomial::from_exps(e.to_vec())
    }

    #[test]
    fn abelian_multiplication_is_commutative_polynomial() {
        let g = abelian(2);
        let x1 = UeaElement::generator(&g, 0);
        let x2 = UeaElement::generator(&g, 1);
        let p = x1.mul(&x2).unwrap();
        assert_eq!(p, x2.mul(&x1).unwrap());
        assert_eq!(p.coefficient(&mono(&[1, 1])), Some(&rat_int(1)));
    }

    #[test]
    fn r2_straightening() {
        let g = r2();
        let x = UeaElement::generator(&g, 0);
        let y = UeaElement::generator(&g, 1);
        let yx = y.mul(&x).unwrap();
        // y x = x y - y
        let expected = x.mul(&y).unwrap().sub(&y).unwrap();
        assert_eq!(yx, expected);
        assert_eq!(yx.coefficient(&mono(&[1, 1])), Some(&rat_int(1)));
        assert_eq!(yx.coefficient(&mono(&[0, 1])), Some(&rat_int(-1)));
    }

    #[test]
    fn sl2_straightening() {
        let g = sl2();
        let e = UeaElement::generator(&g, 0);
        let f = UeaElement::generator(&g, 1);
        let h = UeaElement::generator(&g, 2);
        // f e = e f - h
        let fe = f.mul(&e).unwrap();
        assert_eq!(fe, e.mul(&f).unwrap().sub(&h).unwrap());
    }

    #[test]
    fn defining_relations_hold() {
        for g in [r2(), sl2(), crate::catalog::heis3(), crate::catalog::r3(2)] {
            let n = g.dim();
            for i in 0..n {
                for j in 0..n {
                    let xi = UeaElement::generator(&g, i);
                    let xj = UeaElement::generator(&g, j);
                    let comm = xi.mul(&xj).unwrap().sub(&xj.mul(&xi).unwrap()).unwrap();
                    let mut bracket = UeaElement::zero(&g);
                    for (k, c) in g.bracket(i, j).iter().enumerate() {
                        bracket = bracket.add(&UeaElement::generator(&g, k).scale(c)).unwrap();
                    }
                    assert_eq!(comm, bracket, "relation fails at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn filtration_dims() {
        assert_eq!(filtration_dim(&abelian(1), 3), 4);
        assert_eq!(filtration_dim(&abelian(2), 2), 6);
        assert_eq!(filtration_dim(&abelian(3), 4), 35);
        assert_eq!(monomials_up_to(3, 4).len(), 35);
    }

    #[test]
    fn automorphism_identity_and_shift() {
        let g = r2();
        let x = UeaElement::generator(&g, 0);
        let id = FilteredAutomorphism::identity(&g);
        assert_eq!(id.apply(&x).unwrap(), x);

        let gamma = FilteredAutomorphism::from_shifts(&g, vec![rat_int(-1), rat_int(0)]).unwrap();
        let gx = gamma.apply(&x).unwrap();
        assert_eq!(gx, x.sub(&UeaElement::one(&g)).unwrap());
    }

    #[test]
    fn automorphism_inverse_roundtrip() {
        let g = r2();
        let gamma = dualizing_automorphism(&g);
        let inv = gamma.inverse();
        let mut state = crate::rng::SplitMix::new(11);
        for _ in 0..100 {
            let u = crate::rng::random_element(&g, 3, 4, &mut state);
            let back = inv.apply(&gamma.apply(&u).unwrap()).unwrap();
            assert_eq!(back, u);
        }
    }

    #[test]
    fn automorphism_is_multiplicative() {
        let g = sl2();
        // sl2 has only the identity as generator shift; use r2 instead.
        let g2 = r2();
        let gamma = dualizing_automorphism(&g2);
        let mut state = crate::rng::SplitMix::new(5);
        for _ in 0..50 {
            let u = crate::rng::random_element(&g2, 2, 3, &mut state);
            let v = crate::rng::random_element(&g2, 2, 3, &mut state);
            let lhs = gamma.apply(&u.mul(&v).unwrap()).unwrap();
            let rhs = gamma
                .apply(&u)
                .unwrap()
                .mul(&gamma.apply(&v).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
        assert!(dualizing_automorphism(&g).is_identity());
    }

    #[test]
    fn dualizing_automorphisms() {
        assert!(dualizing_automorphism(&abelian(3)).is_identity());
        assert!(dualizing_automorphism(&sl2()).is_identity());
        let gamma = dualizing_automorphism(&r2());
        assert_eq!(gamma.shifts(), &[rat_int(-1), rat_int(0)]);
    }

    #[test]
    fn mismatched_algebras_error() {
        let a = UeaElement::generator(&r2(), 0);
        let b = UeaElement::generator(&sl2(), 0);
        assert_eq!(a.mul(&b), Err(PbwError::AlgebraMismatch));
    }

    #[test]
    fn top_symbols_multiply_commutatively() {
        let g = sl2();
        let mut state = crate::rng::SplitMix::new(9);
        for _ in 0..30 {
            let u = crate::rng::random_element(&g, 3, 3, &mut state);
            let v = crate::rng::random_element(&g, 3, 3, &mut state);
            if u.is_zero() || v.is_zero() {
                continue;
            }
            let uv = u.mul(&v).unwrap();
            assert_eq!(
                uv.degree().unwrap(),
                u.degree().unwrap() + v.degree().unwrap()
            );
            // gr U is a polynomial ring: symbols multiply with no cancellation.
            let mut expected: BTreeMap<PbwMonomial, Rat> = BTreeMap::new();
            for (ma, ca) in u.top_symbol() {
                for (mb, cb) in v.top_symbol() {
                    let sum = PbwMonomial::from_exps(
                        ma.exps()
                            .iter()
                            .zip(mb.exps())
                            .map(|(a, b)| a + b)
                            .collect(),
                    );
                    let entry = expected.entry(sum).or_insert_with(Rat::zero);
                    *entry = entry.clone() + ca.clone() * cb.clone();
                }
            }
            expected.retain(|_, v| !v.is_zero());
            assert_eq!(uv.top_symbol(), expected);
        }
    }
}
