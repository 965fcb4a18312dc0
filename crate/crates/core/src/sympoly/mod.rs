//! Symmetric polynomials in the monomial basis, plus a sparse carrier for
//! non-symmetric intermediate results.

mod ebasis;
mod sparse;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::scalars::Field;

pub use ebasis::{e_basis_expand, EPoly};
pub use sparse::{determinant, scalar_determinant, SparsePoly};

/// Distinct permutations of `v`, in lexicographic order.
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation on the sorted vector visits each arrangement once
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Number of distinct permutations of `v`.
pub fn orbit_size(v: &[u32]) -> usize {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_insert(0) += 1;
    }
    let fact = |k: usize| (1..=k).product::<usize>();
    counts.values().fold(fact(v.len()), |acc, &c| acc / fact(c))
}

/// `m_λ` as a sparse polynomial.
pub fn m_expand<F: Field>(lambda: &Partition) -> SparsePoly<F> {
    let mut p = SparsePoly::zero(lambda.n(), false);
    for e in distinct_permutations(lambda.parts()) {
        p.add_term(e, F::one());
    }
    p
}

/// Factorial monomial: `m_λ` with every `x_i^l` replaced by the falling power.
pub fn factorial_monomial<F: Field>(lambda: &Partition) -> SparsePoly<F> {
    let n = lambda.n();
    let mut out = SparsePoly::zero(n, false);
    for e in distinct_permutations(lambda.parts()) {
        let mut term = SparsePoly::one(n, false);
        for (i, &l) in e.iter().enumerate() {
            term = term.mul(&falling_power(n, i, l));
        }
        out = out.add(&term);
    }
    out
}

/// `x_i (x_i - 1) ... (x_i - l + 1)` with a 0-based index.
pub fn falling_power<F: Field>(n: usize, i: usize, l: u32) -> SparsePoly<F> {
    let mut acc = SparsePoly::one(n, false);
    for k in 0..l {
        acc = acc.mul(&SparsePoly::linear(n, false, i, F::from_int(-(k as i64))));
    }
    acc
}

/// `a_δ = ∏_{i<j} (x_i - x_j)`.
pub fn vandermonde<F: Field>(n: usize) -> SparsePoly<F> {
    let mut acc = SparsePoly::one(n, false);
    for i in 0..n {
        for j in i + 1..n {
            acc = acc.mul(&SparsePoly::var(n, false, i).sub(&SparsePoly::var(n, false, j)));
        }
    }
    acc
}

/// A symmetric polynomial `Σ c_μ m_μ` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSymPoly<F> {
    n: usize,
    terms: BTreeMap<Partition, F>,
}

impl<F: Field> MSymPoly<F> {
    pub fn zero(n: usize) -> Self {
        MSymPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: F) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Partition::empty(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, F::one())
    }

    pub fn monomial(lambda: Partition) -> Self {
        let mut p = Self::zero(lambda.n());
        p.add_term(lambda, F::one());
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Partition, F)>) -> Self {
        let mut p = Self::zero(n);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, F> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> F {
        self.terms.get(mu).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, mu: Partition, c: F) {
        assert_eq!(mu.n(), self.n, "partition length must equal the number of variables");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mu) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|c| c.clone() * s)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MSymPoly<G> {
        let mut out = MSymPoly::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<MSymPoly<G>> {
        let mut out = MSymPoly::zero(self.n);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Product, collected in the monomial basis.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        let perms_b: BTreeMap<&Partition, Vec<Vec<u32>>> = other
            .terms
            .keys()
            .map(|k| (k, distinct_permutations(k.parts())))
            .collect();
        let mut sum = vec![0u32; self.n];
        for (ka, ca) in &self.terms {
            let perms_a = distinct_permutations(ka.parts());
            for (kb, cb) in &other.terms {
                let prod = ca.clone() * cb;
                let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
                for pa in &perms_a {
                    for pb in &perms_b[kb] {
                        for (i, s) in sum.iter_mut().enumerate() {
                            *s = pa[i] + pb[i];
                        }
                        if sum.windows(2).all(|w| w[0] >= w[1]) {
                            *counts.entry(sum.clone()).or_insert(0) += 1;
                        }
                    }
                }
                for (nu, k) in counts {
                    let key = Partition::new(nu).expect("nonincreasing");
                    out.add_term(key, prod.clone() * &F::from_int(k));
                }
            }
        }
        out
    }

    pub fn to_sparse(&self) -> SparsePoly<F> {
        let mut p = SparsePoly::zero(self.n, false);
        for (k, c) in &self.terms {
            for e in distinct_permutations(k.parts()) {
                p.add_term(e, c.clone());
            }
        }
        p
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.n, "point length must equal the number of variables");
        let max_e = self
            .terms
            .keys()
            .flat_map(|k| k.parts().iter().copied())
            .max()
            .unwrap_or(0) as usize;
        let powers: Vec<Vec<F>> = point
            .iter()
            .map(|v| {
                let mut row = Vec::with_capacity(max_e + 1);
                let mut acc = F::one();
                for _ in 0..=max_e {
                    row.push(acc.clone());
                    acc *= v;
                }
                row
            })
            .collect();
        let mut total = F::zero();
        for (k, c) in &self.terms {
            let mut m = F::zero();
            for e in distinct_permutations(k.parts()) {
                let mut term = F::one();
                for (i, &ei) in e.iter().enumerate() {
                    if ei > 0 {
                        term *= &powers[i][ei as usize];
                    }
                }
                m += &term;
            }
            total += &(m * c);
        }
        total
    }

    /// Highest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MSymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn top_component(&self) -> Result<Self> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    /// `f(-x)`.
    pub fn neg_x(&self) -> Self {
        MSymPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), if k.size() % 2 == 1 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    /// `f(x_1 + c, ..., x_n + c)`.
    pub fn shift_all(&self, c: &F) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let offsets = vec![c.clone(); self.n];
        self.to_sparse()
            .translate(&offsets)
            .collect_symmetric()
            .expect("translation by a constant vector keeps symmetry")
    }

    /// `g ↦ g^+`: the same coefficients on `m_{μ,0}` in one more variable.
    pub fn plus(&self) -> Self {
        MSymPoly {
            n: self.n + 1,
            terms: self.terms.iter().map(|(k, c)| (k.push_zero(), c.clone())).collect(),
        }
    }

    /// Terms in text output order: degree descending, then reverse lexicographic.
    pub fn display_order(&self) -> Vec<(&Partition, &F)> {
        let mut v: Vec<(&Partition, &F)> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| b.0.parts().cmp(a.0.parts())));
        v
    }

    /// `{"schema":1,"n":..,"basis":"m","terms":[{"key":[..],"coeff":..}]}` in canonical order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"key": k.parts(), "coeff": c.to_scalar()}))
            .collect();
        json!({"schema": 1, "n": self.n, "basis": "m", "terms": terms})
    }
}

impl<F: Field> fmt::Display for MSymPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (k, c)) in self.display_order().into_iter().enumerate() {
            let (neg, mag) = c.signed_display();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let key = format!("m{}", k.bracketed());
            if c.is_one() || (-c.clone()).is_one() {
                f.write_str(&key)?;
            } else {
                write!(f, "{mag} {key}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> SparsePoly<F> {
    /// `{"schema":1,"n":..,"basis":"sparse","terms":[..]}`, exponents ascending.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .iter()
            .map(|(k, c)| json!({"key": k, "coeff": c.to_scalar()}))
            .collect();
        json!({"schema": 1, "n": self.n(), "basis": "sparse", "includes_t": self.has_t(), "terms": terms})
    }
}

/// `e_k = m_{1^k}`.
pub fn elementary<F: Field>(k: usize, n: usize) -> MSymPoly<F> {
    if k > n {
        return MSymPoly::zero(n);
    }
    MSymPoly::monomial(Partition::column(k, n))
}

/// `h_j = Σ_{|λ| = j} m_λ`.
pub fn complete<F: Field>(j: u32, n: usize) -> MSymPoly<F> {
    MSymPoly::from_terms(n, partitions_of(n, j).into_iter().map(|p| (p, F::one())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Param, RatFunc, Rational};
    use num_traits::{One, Zero};

    type Q = Rational;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(a: i64) -> Q {
        Q::from_integer(a.into())
    }

    fn x(n: usize, i: usize) -> SparsePoly<Q> {
        SparsePoly::var(n, false, i)
    }

    #[test]
    fn m_expand_examples() {
        assert_eq!(m_expand::<Q>(&p(&[1, 1])), x(2, 0).mul(&x(2, 1)));
        assert_eq!(m_expand::<Q>(&p(&[2, 0])), x(2, 0).pow(2).add(&x(2, 1).pow(2)));
        assert_eq!(m_expand::<Q>(&p(&[])), SparsePoly::one(0, false));
        assert_eq!(m_expand::<Q>(&p(&[2, 1, 0])).len(), 6);
    }

    #[test]
    fn evaluate_examples() {
        let m1 = MSymPoly::<Q>::monomial(p(&[1, 0]));
        assert_eq!(m1.evaluate(&[q(3), q(5)]), q(8));
        let r = RatFunc::param(Param::R);
        let m11 = MSymPoly::<RatFunc>::monomial(p(&[1, 1]));
        assert!(m11.evaluate(&[r.clone(), RatFunc::zero()]).is_zero());
        // a_δ at (1, 0) + r(1, 0)
        let a = vandermonde::<RatFunc>(2);
        assert_eq!(
            a.evaluate(&[r.clone() + &RatFunc::one(), RatFunc::zero()]),
            r + &RatFunc::one()
        );
    }

    #[test]
    fn multiply_examples() {
        let m1 = MSymPoly::<Q>::monomial(p(&[1, 0]));
        let expected = MSymPoly::from_terms(2, [(p(&[2, 0]), q(1)), (p(&[1, 1]), q(2))]);
        assert_eq!(m1.multiply(&m1), expected);
        assert_eq!(m1.multiply(&MSymPoly::one(2)), m1);
        let e2 = elementary::<Q>(2, 2);
        assert_eq!(e2.multiply(&e2), MSymPoly::monomial(p(&[2, 2])));
    }

    #[test]
    fn elementary_and_complete() {
        assert_eq!(elementary::<Q>(2, 3), MSymPoly::monomial(p(&[1, 1, 0])));
        assert_eq!(elementary::<Q>(0, 3), MSymPoly::one(3));
        let h2 = MSymPoly::from_terms(2, [(p(&[2, 0]), q(1)), (p(&[1, 1]), q(1))]);
        assert_eq!(complete::<Q>(2, 2), h2);
    }

    #[test]
    fn factorial_monomial_examples() {
        let expected = x(2, 0)
            .mul(&x(2, 0).sub(&SparsePoly::one(2, false)))
            .add(&x(2, 1).mul(&x(2, 1).sub(&SparsePoly::one(2, false))));
        assert_eq!(factorial_monomial::<Q>(&p(&[2, 0])), expected);
        assert_eq!(factorial_monomial::<Q>(&p(&[1, 1])), x(2, 0).mul(&x(2, 1)));
        assert_eq!(factorial_monomial::<Q>(&p(&[0, 0])), SparsePoly::one(2, false));
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde::<Q>(2), x(2, 0).sub(&x(2, 1)));
        assert_eq!(vandermonde::<Q>(3).len(), 6);
        assert_eq!(vandermonde::<Q>(1), SparsePoly::one(1, false));
        let a = vandermonde::<Q>(3);
        assert_eq!(a.divide_by_vandermonde().unwrap(), SparsePoly::one(3, false));
    }

    #[test]
    fn schur_from_alternant() {
        // det(x_i^{λ_j + δ_j}) for λ = (1, 0): entries x_i^2, x_i^0
        let m = vec![
            vec![x(2, 0).pow(2), SparsePoly::one(2, false)],
            vec![x(2, 1).pow(2), SparsePoly::one(2, false)],
        ];
        let s = determinant(&m)
            .divide_by_vandermonde()
            .unwrap()
            .collect_symmetric()
            .unwrap();
        assert_eq!(s, MSymPoly::monomial(p(&[1, 0])));
    }

    #[test]
    fn top_component_examples() {
        let f = MSymPoly::from_terms(2, [(p(&[1, 0]), q(1)), (p(&[0, 0]), q(5))]);
        assert_eq!(f.top_component().unwrap(), MSymPoly::monomial(p(&[1, 0])));
        assert_eq!(MSymPoly::<Q>::zero(2).top_component(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn text_format() {
        let half = Q::new(1.into(), 2.into());
        let f = MSymPoly::from_terms(2, [(p(&[1, 0]), q(1)), (p(&[0, 0]), -half)]);
        assert_eq!(f.to_string(), "m[1,0] - 1/2 m[]");
        let g = MSymPoly::from_terms(2, [(p(&[1, 1]), q(-3)), (p(&[2, 0]), q(1))]);
        assert_eq!(g.to_string(), "m[2,0] - 3 m[1,1]");
        let h = MSymPoly::from_terms(2, [(p(&[1, 1]), q(-3))]);
        assert_eq!(h.to_string(), "-3 m[1,1]");
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[2, 1, 0]), 6);
        assert_eq!(orbit_size(&[1, 1, 0]), 3);
        assert_eq!(orbit_size(&[]), 1);
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
    }
}
