//! The difference operators `D(t; r)` and `E(t)`, the Sekiguchi–Debiard
//! operator, their matrices on truncated monomial bases, and the map `Ψ`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::partitions::{all_subsets, enumerate_upto, Partition};
use crate::scalars::Field;
use crate::sympoly::{determinant, e_basis_expand, vandermonde, MSymPoly, SparsePoly};

/// Polynomial in `t` with coefficients in `F`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoly<F>(Vec<F>);

impl<F: Field> TPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        TPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> F {
        self.0.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return TPoly(Vec::new());
        }
        let mut out = vec![F::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += &(a.clone() * b);
            }
        }
        Self::new(out)
    }
}

impl<F: Field> fmt::Display for TPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = c.signed_display();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            match (mono.is_empty(), mag == "1") {
                (true, _) => f.write_str(&mag)?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{mag} {mono}")?,
            }
        }
        Ok(())
    }
}

/// `∏_i (λ_i + r δ_i + t)`.
pub fn eigenvalue<F: Field>(lambda: &Partition, r: &F) -> TPoly<F> {
    let n = lambda.n();
    lambda
        .parts()
        .iter()
        .enumerate()
        .fold(TPoly::new(vec![F::one()]), |acc, (i, &l)| {
            let c = F::from_int(l as i64) + &(r.clone() * &F::from_int((n - 1 - i) as i64));
            acc.mul(&TPoly::new(vec![c, F::one()]))
        })
}

/// A coefficient attached to a subset `I` (1-based) in an expansion `Σ_I c_I T_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTerm<F> {
    pub subset: Vec<usize>,
    pub coeff: SparsePoly<F>,
}

/// Cut-off function `φ_I = det c^I`, `c^I_ij = x_i^{δ_j+1}` for `i ∈ I` and
/// `(x_i + r)^{δ_j}` otherwise.
pub fn cutoff_phi<F: Field>(subset: &[usize], n: usize, r: &F) -> SparsePoly<F> {
    subset_determinant(subset, n, r, false)
}

// d_I when `with_t`, else φ_I.
fn subset_determinant<F: Field>(subset: &[usize], n: usize, r: &F, with_t: bool) -> SparsePoly<F> {
    if n == 0 {
        return SparsePoly::one(0, with_t);
    }
    let m: Vec<Vec<SparsePoly<F>>> = (0..n)
        .map(|i| {
            let in_i = subset.contains(&(i + 1));
            (0..n)
                .map(|j| {
                    let delta = (n - 1 - j) as u32;
                    let xi = SparsePoly::var(n, with_t, i);
                    if in_i {
                        let p = xi.pow(delta + 1);
                        if with_t {
                            p.neg()
                        } else {
                            p
                        }
                    } else {
                        let base = SparsePoly::linear(n, with_t, i, r.clone()).pow(delta);
                        if with_t {
                            xi.add(&SparsePoly::t(n)).mul(&base)
                        } else {
                            base
                        }
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

/// Which operator an [`OperatorMatrix`] represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// `D_k`, the coefficient of `t^{n-k}` in `D(t; r)`.
    D(usize),
    /// `E_k`, the coefficient of `t^k` in `E(t)`.
    E(usize),
    /// The coefficient of `t^{n-k}` in the Sekiguchi–Debiard operator.
    SekiguchiDebiard(usize),
}

/// Matrix of a linear operator in the monomial basis: column `j` holds the
/// image of `m_{domain[j]}` expanded in `codomain`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix<F> {
    pub kind: Option<OperatorKind>,
    pub domain: Vec<Partition>,
    pub codomain: Vec<Partition>,
    pub entries: Matrix<F>,
}

impl<F: Field> OperatorMatrix<F> {
    pub fn from_images(
        kind: Option<OperatorKind>,
        domain: Vec<Partition>,
        codomain: Vec<Partition>,
        images: &[MSymPoly<F>],
    ) -> Result<Self> {
        let index: BTreeMap<&Partition, usize> = codomain.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut entries = vec![vec![F::zero(); domain.len()]; codomain.len()];
        for (j, img) in images.iter().enumerate() {
            for (mu, c) in img.terms() {
                let &i = index.get(mu).ok_or_else(|| {
                    Error::Inconsistent(format!("image term m{} outside the codomain", mu.bracketed()))
                })?;
                entries[i][j] = c.clone();
            }
        }
        Ok(OperatorMatrix {
            kind,
            domain,
            codomain,
            entries,
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.codomain != self.domain {
            return Err(Error::InvalidArgument(
                "composition needs matching intermediate bases".into(),
            ));
        }
        Ok(OperatorMatrix {
            kind: None,
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            entries: linalg::mat_mul(&self.entries, &other.entries),
        })
    }

    /// Restricts the domain to its first `len` basis vectors.
    pub fn restrict_domain(&self, len: usize) -> Self {
        OperatorMatrix {
            kind: self.kind,
            domain: self.domain[..len].to_vec(),
            codomain: self.codomain.clone(),
            entries: self.entries.iter().map(|row| row[..len].to_vec()).collect(),
        }
    }

    pub fn is_square(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn apply(&self, f: &MSymPoly<F>) -> Result<MSymPoly<F>> {
        let n = self.codomain.first().map_or(f.n(), Partition::n);
        let mut out = MSymPoly::zero(n);
        for (mu, c) in f.terms() {
            let j = self
                .domain
                .iter()
                .position(|p| p == mu)
                .ok_or_else(|| Error::InvalidArgument(format!("m{} is outside the domain", mu.bracketed())))?;
            for (i, row) in self.entries.iter().enumerate() {
                if !row[j].is_zero() {
                    out.add_term(self.codomain[i].clone(), row[j].clone() * c);
                }
            }
        }
        Ok(out)
    }
}

/// All operators attached to one `(n, r)`, with the subset coefficients
/// `d_I`, `φ_I` computed once.
pub struct DifferenceOperators<F> {
    n: usize,
    r: F,
    d_terms: Vec<SubsetTerm<F>>,
    phi_terms: Vec<SubsetTerm<F>>,
    vandermonde: SparsePoly<F>,
    d_cache: Mutex<BTreeMap<Partition, Vec<MSymPoly<F>>>>,
    e_cache: Mutex<BTreeMap<(usize, Partition), MSymPoly<F>>>,
}

impl<F: Field> DifferenceOperators<F> {
    pub fn new(n: usize, r: F) -> Self {
        let subsets = all_subsets(n);
        let d_terms = subsets
            .par_iter()
            .map(|s| SubsetTerm {
                subset: s.clone(),
                coeff: subset_determinant(s, n, &r, true),
            })
            .collect();
        let phi_terms = subsets
            .par_iter()
            .map(|s| SubsetTerm {
                subset: s.clone(),
                coeff: subset_determinant(s, n, &r, false),
            })
            .collect();
        DifferenceOperators {
            n,
            vandermonde: vandermonde(n),
            r,
            d_terms,
            phi_terms,
            d_cache: Mutex::new(BTreeMap::new()),
            e_cache: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> &F {
        &self.r
    }

    /// The expansion `Δ = Σ_I d_I T_I`.
    pub fn d_terms(&self) -> &[SubsetTerm<F>] {
        &self.d_terms
    }

    /// `φ_I` for every subset, ordered by bitmask.
    pub fn phi_terms(&self) -> &[SubsetTerm<F>] {
        &self.phi_terms
    }

    pub fn phi(&self, subset: &[usize]) -> &SparsePoly<F> {
        &self
            .phi_terms
            .iter()
            .find(|s| s.subset == subset)
            .expect("subset of 1..n")
            .coeff
    }

    pub fn vandermonde(&self) -> &SparsePoly<F> {
        &self.vandermonde
    }

    fn check_n(&self, f: &MSymPoly<F>) -> Result<()> {
        if f.n() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                found: f.n(),
            })
        }
    }

    /// `D(t; r) m_μ` as its `t`-coefficients (index `k` is `t^k`, length `n+1`).
    fn d_on_monomial(&self, mu: &Partition) -> Result<Vec<MSymPoly<F>>> {
        if let Some(hit) = self.d_cache.lock().expect("cache lock").get(mu) {
            return Ok(hit.clone());
        }
        let f = MSymPoly::<F>::monomial(mu.clone()).to_sparse().with_t_slot();
        let mut num = SparsePoly::zero(self.n, true);
        for term in &self.d_terms {
            num = num.add(&term.coeff.mul(&f.shift_down(&term.subset)));
        }
        let q = num.divide_by_vandermonde()?;
        let mut parts = q.split_t();
        parts.resize(self.n + 1, SparsePoly::zero(self.n, false));
        let out: Vec<MSymPoly<F>> = parts.iter().map(SparsePoly::collect_symmetric).collect::<Result<_>>()?;
        self.d_cache.lock().expect("cache lock").insert(mu.clone(), out.clone());
        Ok(out)
    }

    /// `D(t; r) f`; entry `k` is the coefficient of `t^k`.
    pub fn apply_d(&self, f: &MSymPoly<F>) -> Result<Vec<MSymPoly<F>>> {
        self.check_n(f)?;
        let images: Vec<(F, Vec<MSymPoly<F>>)> = f
            .terms()
            .iter()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|(mu, c)| self.d_on_monomial(mu).map(|img| ((*c).clone(), img)))
            .collect::<Result<_>>()?;
        let mut out = vec![MSymPoly::zero(self.n); self.n + 1];
        for (c, img) in images {
            for (k, part) in img.iter().enumerate() {
                out[k] = out[k].add(&part.scale(&c));
            }
        }
        Ok(out)
    }

    /// `D_k f`, the coefficient of `t^{n-k}`.
    pub fn apply_d_k(&self, f: &MSymPoly<F>, k: usize) -> Result<MSymPoly<F>> {
        if k > self.n {
            return Err(Error::InvalidArgument(format!("D_{k} needs k <= {}", self.n)));
        }
        Ok(self.apply_d(f)?.swap_remove(self.n - k))
    }

    fn e_on_monomial(&self, k: usize, mu: &Partition) -> Result<MSymPoly<F>> {
        let key = (k, mu.clone());
        if let Some(hit) = self.e_cache.lock().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let f = MSymPoly::<F>::monomial(mu.clone()).to_sparse();
        let mut num = SparsePoly::zero(self.n, false);
        for term in self.phi_terms.iter().filter(|s| s.subset.len() == k) {
            num = num.add(&term.coeff.mul(&f.shift_down(&term.subset)));
        }
        let out = num.divide_by_vandermonde()?.collect_symmetric()?;
        self.e_cache.lock().expect("cache lock").insert(key, out.clone());
        Ok(out)
    }

    /// `E_k f = a_δ^{-1} Σ_{|I| = k} φ_I f(x - ε_I)`.
    pub fn apply_e(&self, f: &MSymPoly<F>, k: usize) -> Result<MSymPoly<F>> {
        self.check_n(f)?;
        if k > self.n {
            return Err(Error::InvalidArgument(format!("E_{k} needs k <= {}", self.n)));
        }
        let images: Vec<MSymPoly<F>> = f
            .terms()
            .iter()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|(mu, c)| self.e_on_monomial(k, mu).map(|img| img.scale(c)))
            .collect::<Result<_>>()?;
        Ok(images.iter().fold(MSymPoly::zero(self.n), |acc, p| acc.add(p)))
    }

    /// Sekiguchi–Debiard operator at this `r`; see [`apply_sekiguchi_debiard`].
    pub fn sekiguchi_debiard(&self, f: &MSymPoly<F>) -> Result<Vec<MSymPoly<F>>> {
        self.check_n(f)?;
        apply_sekiguchi_debiard(f, &self.r)
    }

    pub fn eigenvalue(&self, lambda: &Partition) -> TPoly<F> {
        eigenvalue(lambda, &self.r)
    }

    /// Matrix of `op` with domain `enumerate_upto(n, d)`.
    pub fn operator_matrix(&self, op: OperatorKind, d: u32) -> Result<OperatorMatrix<F>> {
        let n = self.n;
        let domain = enumerate_upto(n, d);
        let (codomain, images): (Vec<Partition>, Vec<MSymPoly<F>>) = match op {
            OperatorKind::D(k) => {
                if k > n {
                    return Err(Error::InvalidArgument(format!("D_{k} needs k <= {n}")));
                }
                let imgs = domain
                    .par_iter()
                    .map(|mu| self.d_on_monomial(mu).map(|v| v[n - k].clone()))
                    .collect::<Result<Vec<_>>>()?;
                (domain.clone(), imgs)
            }
            OperatorKind::E(k) => {
                if k > n {
                    return Err(Error::InvalidArgument(format!("E_{k} needs k <= {n}")));
                }
                let imgs = domain
                    .par_iter()
                    .map(|mu| self.e_on_monomial(k, mu))
                    .collect::<Result<Vec<_>>>()?;
                (enumerate_upto(n, d + k as u32), imgs)
            }
            OperatorKind::SekiguchiDebiard(k) => {
                if k > n {
                    return Err(Error::InvalidArgument(format!("coefficient index {k} exceeds {n}")));
                }
                let imgs = domain
                    .par_iter()
                    .map(|mu| {
                        self.sekiguchi_debiard(&MSymPoly::monomial(mu.clone()))
                            .map(|v| v[n - k].clone())
                    })
                    .collect::<Result<Vec<_>>>()?;
                (domain.clone(), imgs)
            }
        };
        OperatorMatrix::from_images(Some(op), domain, codomain, &images)
    }

    /// `Ψ(f) = ψ(f)(1)`: expand `f` in the `e_k` and let `e_k` act as `E_k` on `1`.
    pub fn psi_map(&self, f: &MSymPoly<F>) -> Result<MSymPoly<F>> {
        self.check_n(f)?;
        let expansion = e_basis_expand(f);
        let mut memo: BTreeMap<Vec<u32>, MSymPoly<F>> = BTreeMap::new();
        memo.insert(vec![0; self.n], MSymPoly::one(self.n));
        let mut out = MSymPoly::zero(self.n);
        for (a, c) in expansion.terms() {
            let img = self.e_power_on_one(a, &mut memo)?;
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    // ∏ E_k^{a_k} applied to 1; the E_k commute, so peel off the first nonzero exponent.
    fn e_power_on_one(&self, a: &[u32], memo: &mut BTreeMap<Vec<u32>, MSymPoly<F>>) -> Result<MSymPoly<F>> {
        if let Some(hit) = memo.get(a) {
            return Ok(hit.clone());
        }
        let k = a.iter().position(|&x| x > 0).expect("nonzero exponent");
        let mut smaller = a.to_vec();
        smaller[k] -= 1;
        let inner = self.e_power_on_one(&smaller, memo)?;
        let out = self.apply_e(&inner, k + 1)?;
        memo.insert(a.to_vec(), out.clone());
        Ok(out)
    }
}

/// `a_δ^{-1} det(x_i^{δ_j}(t + r δ_j + x_i ∂_i)) f`; entry `k` is the coefficient of `t^k`.
///
/// On a monomial the determinant expands to
/// `Σ_σ sgn σ ∏_i (t + r δ_σ(i) + a_i) x_i^{a_i + δ_σ(i)}`.
pub fn apply_sekiguchi_debiard<F: Field>(f: &MSymPoly<F>, r: &F) -> Result<Vec<MSymPoly<F>>> {
    let n = f.n();
    let perms = permutations_with_sign(n);
    let mut num = SparsePoly::zero(n, true);
    for (a, c) in f.to_sparse().terms() {
        for (sigma, odd) in &perms {
            let mut factor = SparsePoly::constant(n, true, if *odd { -c.clone() } else { c.clone() });
            let mut e = vec![0u32; n + 1];
            for i in 0..n {
                let delta = (n - 1 - sigma[i]) as u32;
                let shift = r.clone() * &F::from_int(delta as i64) + &F::from_int(a[i] as i64);
                factor = factor.mul(&SparsePoly::t(n).add(&SparsePoly::constant(n, true, shift)));
                e[i] = a[i] + delta;
            }
            num = num.add(&factor.mul(&monomial_with_t(n, e)));
        }
    }
    let q = num.divide_by_vandermonde()?;
    let mut parts = q.split_t();
    parts.resize(n + 1, SparsePoly::zero(n, false));
    parts.iter().map(SparsePoly::collect_symmetric).collect()
}

fn monomial_with_t<F: Field>(n: usize, e: Vec<u32>) -> SparsePoly<F> {
    let mut p = SparsePoly::zero(n, true);
    p.add_term(e, F::one());
    p
}

/// All permutations of `0..n` with their sign (`true` for odd).
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if cur.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), inversions % 2 == 1));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}
