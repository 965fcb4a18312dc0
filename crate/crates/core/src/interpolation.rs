//! Interpolation polynomials `P_λ^ϱ` and their closed forms.
//!
//! `P_λ^ϱ` is the symmetric polynomial of degree `|λ|` that vanishes at
//! `μ + ϱ` for every partition `μ ≠ λ` with `|μ| <= |λ|` and whose `m_λ`
//! coefficient is one.

use std::collections::BTreeMap;

use num_traits::Signed;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::partitions::{enumerate_upto, partitions_of, rho_hook_product, subsets_of_size, Partition};
use crate::scalars::{binom_scalar, Field, Rational};
use crate::sympoly::{
    complete, determinant, elementary, factorial_monomial, falling_power, vandermonde, MSymPoly, SparsePoly,
};

/// How a shift vector was specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RhoKind<F> {
    Generic,
    /// `ϱ = r δ` with `δ = (n-1, ..., 1, 0)`.
    RDelta(F),
}

/// A shift vector `ϱ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoVector<F> {
    entries: Vec<F>,
    kind: RhoKind<F>,
}

impl<F: Field> RhoVector<F> {
    pub fn generic(entries: Vec<F>) -> Self {
        RhoVector {
            entries,
            kind: RhoKind::Generic,
        }
    }

    pub fn r_delta(r: F, n: usize) -> Self {
        let entries = (0..n).map(|i| r.clone() * &F::from_int((n - 1 - i) as i64)).collect();
        RhoVector {
            entries,
            kind: RhoKind::RDelta(r),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn kind(&self) -> &RhoKind<F> {
        &self.kind
    }

    pub fn r(&self) -> Option<&F> {
        match &self.kind {
            RhoKind::RDelta(r) => Some(r),
            RhoKind::Generic => None,
        }
    }

    /// `μ + ϱ` as a point.
    pub fn point(&self, mu: &Partition) -> Vec<F> {
        mu.parts()
            .iter()
            .zip(&self.entries)
            .map(|(&m, e)| F::from_int(m as i64) + e)
            .collect()
    }

    /// `ϱ' = (ϱ_1 - ϱ_n, ..., ϱ_{n-1} - ϱ_n)`.
    pub fn reduced(&self) -> Self {
        let last = self.entries.last().cloned().unwrap_or_else(F::zero);
        let n = self.n();
        let entries: Vec<F> = self.entries[..n.saturating_sub(1)]
            .iter()
            .map(|e| e.clone() - last.clone())
            .collect();
        match &self.kind {
            // r δ minus r·0 drops to r δ in one fewer variable
            RhoKind::RDelta(r) => RhoVector {
                entries,
                kind: RhoKind::RDelta(r.clone()),
            },
            RhoKind::Generic => RhoVector {
                entries,
                kind: RhoKind::Generic,
            },
        }
    }
}

/// Whether `diff` is a negative integer `-m` with `m <= bound`.
fn forbidden_difference<F: Field>(diff: &F, bound: Option<u32>) -> bool {
    let Some(q) = diff.to_rational() else {
        return false;
    };
    if !q.is_integer() || !q.is_negative() {
        return false;
    }
    match bound {
        None => true,
        Some(b) => (-q.to_integer()) <= b.into(),
    }
}

/// `ϱ_i - ϱ_j ∉ {-1, ..., -⌊d/i⌋}` for all `i < j`.
pub fn is_d_dominant<F: Field>(rho: &RhoVector<F>, d: u32) -> bool {
    let e = rho.entries();
    (0..e.len()).all(|i| {
        let bound = d / (i as u32 + 1);
        (i + 1..e.len()).all(|j| bound == 0 || !forbidden_difference(&(e[i].clone() - e[j].clone()), Some(bound)))
    })
}

/// `ϱ_i - ϱ_j` is never a negative integer for `i < j`.
pub fn is_dominant<F: Field>(rho: &RhoVector<F>) -> bool {
    let e = rho.entries();
    (0..e.len()).all(|i| (i + 1..e.len()).all(|j| !forbidden_difference(&(e[i].clone() - e[j].clone()), None)))
}

/// For `ϱ = r δ`, the offending `(p, q)` with `r = -p/q`, `q < n`, if any.
pub fn dominance_violation(r: &Rational, n: usize) -> Option<(num_bigint::BigInt, num_bigint::BigInt)> {
    if !r.is_negative() {
        return None;
    }
    let p = -r.numer().clone();
    let q = r.denom().clone();
    if q < num_bigint::BigInt::from(n) {
        Some((p, q))
    } else {
        None
    }
}

/// Refuses a rational `r` for which `r δ` is not dominant in `n` variables.
pub fn check_r_dominant(r: &Rational, n: usize) -> Result<()> {
    match dominance_violation(r, n) {
        Some((p, q)) => Err(Error::NonDominantR {
            p: p.to_string(),
            q: q.to_string(),
            n,
        }),
        None => Ok(()),
    }
}

fn check_d_dominant<F: Field>(rho: &RhoVector<F>, d: u32) -> Result<()> {
    if is_d_dominant(rho, d) {
        return Ok(());
    }
    if let Some(r) = rho.r().and_then(F::to_rational) {
        check_r_dominant(&r, rho.n())?;
    }
    Err(Error::NonDominant(d as usize))
}

/// `A[ν][μ] = m_μ(ν + ϱ)` over the basis `enumerate_upto(n, d)`.
fn evaluation_matrix<F: Field>(basis: &[Partition], rho: &RhoVector<F>) -> linalg::Matrix<F> {
    let monomials: Vec<MSymPoly<F>> = basis.iter().map(|mu| MSymPoly::monomial(mu.clone())).collect();
    basis
        .par_iter()
        .map(|nu| {
            let x = rho.point(nu);
            monomials.iter().map(|m| m.evaluate(&x)).collect()
        })
        .collect()
}

fn from_column<F: Field>(n: usize, basis: &[Partition], x: &linalg::Matrix<F>, c: usize) -> MSymPoly<F> {
    MSymPoly::from_terms(n, basis.iter().zip(x).map(|(mu, row)| (mu.clone(), row[c].clone())))
}

/// The unique symmetric `f` of degree `<= d` with `f(μ+ϱ) = values[μ]`, by a
/// direct linear solve in the monomial basis.
pub fn interpolate<F: Field>(
    n: usize,
    d: u32,
    values: &BTreeMap<Partition, F>,
    rho: &RhoVector<F>,
) -> Result<MSymPoly<F>> {
    check_inputs(n, d, values, rho)?;
    let basis = enumerate_upto(n, d);
    let a = evaluation_matrix(&basis, rho);
    let b: linalg::Matrix<F> = basis.iter().map(|mu| vec![values[mu].clone()]).collect();
    let x = linalg::solve(&a, &b).map_err(|e| {
        if e == Error::Singular {
            Error::NonDominant(d as usize)
        } else {
            e
        }
    })?;
    Ok(from_column(n, &basis, &x, 0))
}

fn check_inputs<F: Field>(n: usize, d: u32, values: &BTreeMap<Partition, F>, rho: &RhoVector<F>) -> Result<()> {
    if rho.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: rho.n(),
        });
    }
    let basis = enumerate_upto(n, d);
    if values.len() != basis.len() || basis.iter().any(|mu| !values.contains_key(mu)) {
        return Err(Error::BadValues(d as usize));
    }
    check_d_dominant(rho, d)
}

/// The same interpolation problem solved by the inductive construction
/// `f(x) = g^+(x - ϱ_n) + ∏(x_i - ϱ_n) h(x - 1)`.
pub fn interpolate_recursive<F: Field>(
    n: usize,
    d: u32,
    values: &BTreeMap<Partition, F>,
    rho: &RhoVector<F>,
) -> Result<MSymPoly<F>> {
    check_inputs(n, d, values, rho)?;
    Ok(recurse(n, d, values, rho))
}

fn recurse<F: Field>(n: usize, d: u32, values: &BTreeMap<Partition, F>, rho: &RhoVector<F>) -> MSymPoly<F> {
    if n == 0 {
        return MSymPoly::constant(0, values[&Partition::empty(0)].clone());
    }
    let rho_n = rho.entries()[n - 1].clone();
    // points with μ_n = 0
    let g_values: BTreeMap<Partition, F> = enumerate_upto(n - 1, d)
        .into_iter()
        .map(|mu| {
            let v = values[&mu.push_zero()].clone();
            (mu, v)
        })
        .collect();
    let g = recurse(n - 1, d, &g_values, &rho.reduced());
    let g_plus = g.plus();
    let mut f = g_plus.shift_all(&-rho_n.clone());
    if d >= n as u32 {
        // points with μ_n > 0, indexed by ν = μ - (1, ..., 1)
        let h_values: BTreeMap<Partition, F> = enumerate_upto(n, d - n as u32)
            .into_iter()
            .map(|nu| {
                let mu = Partition::new(nu.parts().iter().map(|p| p + 1).collect()).expect("shifted partition");
                let shifted: Vec<F> = rho.point(&mu).into_iter().map(|x| x - rho_n.clone()).collect();
                let residual = values[&mu].clone() - g_plus.evaluate(&shifted);
                let denom = shifted.iter().fold(F::one(), |acc, x| acc * x);
                (nu, residual / denom)
            })
            .collect();
        let h = recurse(n, d - n as u32, &h_values, rho);
        let prod = elementary::<F>(n, n).shift_all(&-rho_n);
        f = f.add(&prod.multiply(&h.shift_all(&-F::one())));
    }
    f
}

/// `P_λ^ϱ` by the direct solve, with both normalizations checked against
/// each other.
pub fn solve_p<F: Field>(lambda: &Partition, rho: &RhoVector<F>) -> Result<MSymPoly<F>> {
    let n = lambda.n();
    let d = lambda.size();
    if rho.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: rho.n(),
        });
    }
    check_d_dominant(rho, d)?;
    let family = solve_degree(n, d, rho)?;
    family
        .into_iter()
        .find(|(l, _)| l == lambda)
        .map(|(_, p)| p)
        .ok_or_else(|| Error::Inconsistent("missing λ".into()))
}

/// All `P_λ^ϱ` with `|λ| = d` from one multi-right-hand-side solve.
pub fn solve_degree<F: Field>(n: usize, d: u32, rho: &RhoVector<F>) -> Result<Vec<(Partition, MSymPoly<F>)>> {
    check_d_dominant(rho, d)?;
    let basis = enumerate_upto(n, d);
    let targets = partitions_of(n, d);
    let a = evaluation_matrix(&basis, rho);
    let mut norms = Vec::with_capacity(targets.len());
    for lam in &targets {
        norms.push(rho_hook_product(lam, rho.entries())?);
    }
    let b: linalg::Matrix<F> = basis
        .iter()
        .map(|mu| {
            targets
                .iter()
                .zip(&norms)
                .map(|(lam, c)| if lam == mu { c.clone() } else { F::zero() })
                .collect()
        })
        .collect();
    let x = linalg::solve(&a, &b).map_err(|e| {
        if e == Error::Singular {
            Error::NonDominant(d as usize)
        } else {
            e
        }
    })?;
    let mut out = Vec::with_capacity(targets.len());
    for (c, lam) in targets.iter().enumerate() {
        let p = from_column(n, &basis, &x, c);
        if !p.coeff(lam).is_one() {
            return Err(Error::Inconsistent(format!(
                "coefficient of m{} in P{} is {}, expected 1",
                lam.bracketed(),
                lam.bracketed(),
                p.coeff(lam)
            )));
        }
        out.push((lam.clone(), p));
    }
    Ok(out)
}

/// Every `P_λ^ϱ` with `|λ| <= d`, in canonical order.
pub fn interpolation_basis<F: Field>(n: usize, d: u32, rho: &RhoVector<F>) -> Result<BTreeMap<Partition, MSymPoly<F>>> {
    let per_degree: Vec<Vec<(Partition, MSymPoly<F>)>> = (0..=d)
        .into_par_iter()
        .map(|e| solve_degree(n, e, rho))
        .collect::<Result<_>>()?;
    Ok(per_degree.into_iter().flatten().collect())
}

/// `P_λ = ∏(x_i - ϱ_n) P_{λ*}(x - 1)` with `λ* = λ - (1, ..., 1)`.
pub fn reduce_first_column<F: Field>(lambda: &Partition, rho: &RhoVector<F>) -> Result<MSymPoly<F>> {
    let n = lambda.n();
    if n == 0 || lambda.part(n) == 0 {
        return Err(Error::InvalidArgument(format!(
            "{} has no full first column",
            lambda.bracketed()
        )));
    }
    let star = Partition::new(lambda.parts().iter().map(|p| p - 1).collect())?;
    let inner = solve_p(&star, rho)?;
    let rho_n = rho.entries()[n - 1].clone();
    let prod = elementary::<F>(n, n).shift_all(&-rho_n);
    Ok(prod.multiply(&inner.shift_all(&-F::one())))
}

/// The two closed forms for `P_{1^k}^ϱ`: the `h`/`e` sum and the product sum.
pub fn special_1k<F: Field>(k: usize, rho: &RhoVector<F>) -> Result<(MSymPoly<F>, MSymPoly<F>)> {
    let n = rho.n();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= {n}, got {k}")));
    }
    let e = rho.entries();
    let tail = &e[k - 1..];
    let mut p1 = MSymPoly::zero(n);
    for j in 0..=k {
        let h = complete::<F>((k - j) as u32, tail.len()).evaluate(tail);
        let sign = if (k - j).is_multiple_of(2) { F::one() } else { -F::one() };
        p1 = p1.add(&elementary::<F>(j, n).scale(&(sign * &h)));
    }
    let mut p2 = SparsePoly::zero(n, false);
    for idx in subsets_of_size(n, k) {
        let mut term = SparsePoly::one(n, false);
        for (j0, &i) in idx.iter().enumerate() {
            // x_{i_j} - ϱ_{i_j + k - j}, 1-based j = j0 + 1
            let shift = i + k - (j0 + 1);
            term = term.mul(&SparsePoly::linear(n, false, i - 1, -e[shift - 1].clone()));
        }
        p2 = p2.add(&term);
    }
    Ok((p1, p2.collect_symmetric()?))
}

/// `det(x_i^{(λ_j + δ_j) falling}) / a_δ`, the `r = 1` closed form.
pub fn factorial_schur<F: Field>(lambda: &Partition) -> Result<MSymPoly<F>> {
    let n = lambda.n();
    if n == 0 {
        return Ok(MSymPoly::one(0));
    }
    let m: Vec<Vec<SparsePoly<F>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| falling_power(n, i, lambda.parts()[j] + (n - 1 - j) as u32))
                .collect()
        })
        .collect();
    determinant(&m).divide_by_vandermonde()?.collect_symmetric()
}

/// The factorial monomial `m_λ` with falling powers; the `r = 0` closed form.
pub fn factorial_monomial_case<F: Field>(lambda: &Partition) -> Result<MSymPoly<F>> {
    factorial_monomial::<F>(lambda).collect_symmetric()
}

/// The one-row closed form for `P_{(d)}^{rδ}`.
pub fn one_row<F: Field>(d: u32, r: &F, n: usize) -> Result<MSymPoly<F>> {
    if n == 0 {
        return Err(Error::InvalidArgument("one_row needs n >= 1".into()));
    }
    let neg_r = -r.clone();
    let norm = binom_scalar(&neg_r, d);
    if norm.is_zero() {
        return Err(Error::InvalidArgument(format!("binom(-r, {d}) vanishes at r = {r}")));
    }
    let binoms: Vec<F> = (0..=d).map(|k| binom_scalar(&neg_r, k)).collect();
    let mut total = SparsePoly::zero(n, false);
    // sequences d = i_0 >= i_1 >= ... >= i_{n-1} >= i_n = 0
    let mut seq = vec![0u32; n + 1];
    seq[0] = d;
    one_row_rec(1, n, r, &binoms, &mut seq, &mut total);
    total.scale(&(F::one() / &norm)).collect_symmetric()
}

fn one_row_rec<F: Field>(j: usize, n: usize, r: &F, binoms: &[F], seq: &mut Vec<u32>, total: &mut SparsePoly<F>) {
    if j == n {
        seq[n] = 0;
        let mut term = SparsePoly::one(n, false);
        for jj in 1..=n {
            let step = seq[jj - 1] - seq[jj];
            let delta = (n - jj) as i64;
            // (x_j - r δ_j - i_j) falling step
            let base = r.clone() * &F::from_int(delta) + &F::from_int(seq[jj] as i64);
            let mut factor = SparsePoly::constant(n, false, binoms[step as usize].clone());
            for l in 0..step {
                factor = factor.mul(&SparsePoly::linear(
                    n,
                    false,
                    jj - 1,
                    -(base.clone() + &F::from_int(l as i64)),
                ));
            }
            term = term.mul(&factor);
        }
        *total = total.add(&term);
        return;
    }
    for v in (0..=seq[j - 1]).rev() {
        seq[j] = v;
        one_row_rec(j + 1, n, r, binoms, seq, total);
    }
}

/// `a_δ` at `λ + ϱ`, nonzero for dominant `ϱ = rδ` with `r != 0`.
pub fn vandermonde_at<F: Field>(lambda: &Partition, rho: &RhoVector<F>) -> F {
    vandermonde::<F>(lambda.n()).evaluate(&rho.point(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Param, RatFunc};
    use num_traits::{One, Zero};

    type Q = Rational;

    fn q(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn generic(vals: &[Q]) -> RhoVector<Q> {
        RhoVector::generic(vals.to_vec())
    }

    fn x(n: usize, i: usize) -> SparsePoly<Q> {
        SparsePoly::var(n, false, i)
    }

    #[test]
    fn dominance_examples() {
        assert!(is_d_dominant(&RhoVector::r_delta(q(1, 1), 3), 10));
        assert!(is_dominant(&RhoVector::r_delta(q(1, 1), 4)));
        assert!(!is_dominant(&RhoVector::r_delta(q(-1, 2), 3)));
        assert_eq!(dominance_violation(&q(-1, 2), 3), Some((1.into(), 2.into())));
        assert!(!is_dominant(&RhoVector::r_delta(q(-3, 1), 2)));
        assert_eq!(dominance_violation(&q(-3, 1), 2), Some((3.into(), 1.into())));
        assert_eq!(dominance_violation(&q(-1, 2), 2), None);
        assert!(is_dominant(&RhoVector::r_delta(q(-1, 2), 2)));
        // -1 is excluded only once d / i reaches 1
        let rho = generic(&[q(0, 1), q(1, 1)]);
        assert!(is_d_dominant(&rho, 0));
        assert!(!is_d_dominant(&rho, 1));
    }

    #[test]
    fn interpolate_examples() {
        let rho = generic(&[q(0, 1)]);
        let basis = enumerate_upto(1, 2);
        let zeros: BTreeMap<Partition, Q> = basis.iter().map(|m| (m.clone(), Q::zero())).collect();
        assert!(interpolate(1, 2, &zeros, &rho).unwrap().is_zero());
        let vals: BTreeMap<Partition, Q> = basis
            .iter()
            .map(|m| (m.clone(), if m.size() == 2 { q(2, 1) } else { Q::zero() }))
            .collect();
        // x(x - 1) = m_(2) - m_(1)
        let expected = MSymPoly::from_terms(1, [(p(&[2]), q(1, 1)), (p(&[1]), q(-1, 1))]);
        assert_eq!(interpolate(1, 2, &vals, &rho).unwrap(), expected);
        assert_eq!(interpolate_recursive(1, 2, &vals, &rho).unwrap(), expected);
        let mut short = vals.clone();
        short.remove(&p(&[0]));
        assert_eq!(interpolate(1, 2, &short, &rho), Err(Error::BadValues(2)));
    }

    #[test]
    fn solve_p_generic_examples() {
        let rho = generic(&[q(3, 7), q(-2, 5)]);
        let r = rho.entries().to_vec();
        let one = SparsePoly::one(2, false);
        let lin = |i: usize, c: &Q| x(2, i).sub(&one.scale(c));
        let p10 = solve_p(&p(&[1, 0]), &rho).unwrap();
        assert_eq!(p10, lin(0, &r[0]).add(&lin(1, &r[1])).collect_symmetric().unwrap());
        let p11 = solve_p(&p(&[1, 1]), &rho).unwrap();
        assert_eq!(p11, lin(0, &r[1]).mul(&lin(1, &r[1])).collect_symmetric().unwrap());
        let p2 = solve_p(&p(&[2]), &generic(&[Q::zero()])).unwrap();
        assert_eq!(p2, MSymPoly::from_terms(1, [(p(&[2]), q(1, 1)), (p(&[1]), q(-1, 1))]));
    }

    #[test]
    fn reduction_matches() {
        let rho = generic(&[q(5, 3), q(1, 4)]);
        for lam in [p(&[1, 1]), p(&[2, 1]), p(&[3, 2])] {
            assert_eq!(reduce_first_column(&lam, &rho).unwrap(), solve_p(&lam, &rho).unwrap());
        }
        assert!(reduce_first_column(&p(&[1, 0]), &rho).is_err());
        let rho1 = generic(&[Q::zero()]);
        assert_eq!(
            reduce_first_column(&p(&[2]), &rho1).unwrap(),
            solve_p(&p(&[2]), &rho1).unwrap()
        );
    }

    #[test]
    fn special_1k_examples() {
        let rho = generic(&[q(2, 3), q(-1, 7)]);
        let (p1, p2) = special_1k(1, &rho).unwrap();
        let expected = MSymPoly::from_terms(2, [(p(&[1, 0]), q(1, 1)), (p(&[0, 0]), -(q(2, 3) + q(-1, 7)))]);
        assert_eq!(p1, expected);
        assert_eq!(p2, expected);
        assert!(p1.evaluate(rho.entries()).is_zero());
        let rho3 = generic(&[q(1, 2), q(3, 1), q(-5, 4)]);
        let (a, b) = special_1k(3, &rho3).unwrap();
        // k = n leaves a single index choice
        let one = SparsePoly::one(3, false);
        let prod = (0..3).fold(one.clone(), |acc, i| acc.mul(&x(3, i).sub(&one.scale(&q(-5, 4)))));
        assert_eq!(b, prod.collect_symmetric().unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn factorial_forms() {
        let expected = MSymPoly::from_terms(2, [(p(&[1, 0]), q(1, 1)), (p(&[0, 0]), q(-1, 1))]);
        assert_eq!(factorial_schur::<Q>(&p(&[1, 0])).unwrap(), expected);
        assert_eq!(factorial_schur::<Q>(&p(&[0, 0])).unwrap(), MSymPoly::one(2));
        let fm = factorial_monomial_case::<Q>(&p(&[2, 0])).unwrap();
        assert_eq!(
            fm,
            MSymPoly::from_terms(2, [(p(&[2, 0]), q(1, 1)), (p(&[1, 0]), q(-1, 1))])
        );
        assert_eq!(
            factorial_monomial_case::<Q>(&p(&[1, 1])).unwrap(),
            MSymPoly::monomial(p(&[1, 1]))
        );
    }

    #[test]
    fn one_row_examples() {
        let r = RatFunc::param(Param::R);
        let d1 = one_row(1, &r, 2).unwrap();
        let expected = MSymPoly::from_terms(2, [(p(&[1, 0]), RatFunc::one()), (p(&[0, 0]), -r.clone())]);
        assert_eq!(d1, expected);
        let n1 = one_row(2, &r, 1).unwrap();
        assert_eq!(
            n1,
            MSymPoly::from_terms(1, [(p(&[2]), RatFunc::one()), (p(&[1]), -RatFunc::one())])
        );
        assert_eq!(one_row(0, &r, 3).unwrap(), MSymPoly::one(3));
        assert!(one_row(2, &Q::zero(), 2).is_err());
    }

    #[test]
    fn symbolic_solve_small() {
        let r = RatFunc::param(Param::R);
        let rho = RhoVector::r_delta(r.clone(), 2);
        let p1 = solve_p(&p(&[1, 0]), &rho).unwrap();
        let expected = MSymPoly::from_terms(2, [(p(&[1, 0]), RatFunc::one()), (p(&[0, 0]), -r)]);
        assert_eq!(p1, expected);
        assert_eq!(
            solve_p(&p(&[1, 0]), &RhoVector::r_delta(q(-1, 1), 2)),
            Err(Error::NonDominantR {
                p: "1".into(),
                q: "1".into(),
                n: 2
            })
        );
    }
}
