//! Partitions of bounded length and their diagram combinatorics.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::Field;

/// A weakly decreasing sequence of nonnegative integers of fixed length `n`.
///
/// Trailing zeros are kept: the number of variables is part of the value.
/// The total order (`Ord`) is degree first, then reverse lexicographic; it is
/// the canonical order for basis vectors, matrices and serialized output.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A box `(row, col)` of a diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Pads `parts` with zeros to length `n`.
    pub fn padded(parts: &[u32], n: usize) -> Result<Self> {
        let mut v: Vec<u32> = parts.to_vec();
        while v.len() > n && v.last() == Some(&0) {
            v.pop();
        }
        if v.len() > n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: v.len(),
            });
        }
        v.resize(n, 0);
        Self::new(v)
    }

    pub fn empty(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    /// `1^k` padded to length `n`.
    pub fn column(k: usize, n: usize) -> Self {
        let mut parts = vec![1; k.min(n)];
        parts.resize(n, 0);
        Partition { parts }
    }

    /// `(d, 0, ..., 0)`.
    pub fn row(d: u32, n: usize) -> Self {
        let mut parts = vec![0; n];
        if n > 0 {
            parts[0] = d;
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of variables (slots, including zeros).
    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// `λ_i` with a 1-based index; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `λ'_j = #{i : λ_i >= j}` with a 1-based column index.
    pub fn conj_part(&self, j: usize) -> u32 {
        self.parts.iter().filter(|&&p| p as usize >= j).count() as u32
    }

    /// The transposed diagram, of length `λ_1`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1) as usize;
        Partition {
            parts: (1..=width).map(|j| self.conj_part(j)).collect(),
        }
    }

    /// Dominance: all prefix sums of `self` are at most those of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        prefix_dominated(&self.parts, &other.parts)
    }

    /// `self ⊂ other` componentwise.
    pub fn subset_of(&self, other: &Partition) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, s: Cell) -> bool {
        s.row >= 1 && s.col >= 1 && s.row <= self.n() && s.col <= self.part(s.row) as usize
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| Cell::new(i + 1, j)))
    }

    /// The exponent vector shifted by `v`, e.g. `λ - ε_I`.
    pub fn minus_indicator(&self, subset: &[usize]) -> Option<Partition> {
        let mut v = self.parts.clone();
        for &i in subset {
            let slot = v.get_mut(i - 1)?;
            *slot = slot.checked_sub(1)?;
        }
        Partition::new(v).ok()
    }

    /// `λ + ε_I` if that is still a partition.
    pub fn plus_indicator(&self, subset: &[usize]) -> Option<Partition> {
        let mut v = self.parts.clone();
        for &i in subset {
            *v.get_mut(i - 1)? += 1;
        }
        Partition::new(v).ok()
    }

    /// Drops the last slot, which must be zero.
    pub fn drop_last_zero(&self) -> Option<Partition> {
        match self.parts.last() {
            Some(0) => Some(Partition {
                parts: self.parts[..self.n() - 1].to_vec(),
            }),
            _ => None,
        }
    }

    pub fn push_zero(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(0);
        Partition { parts }
    }

    /// Subtracts one from every part; requires `λ_n > 0`.
    pub fn remove_first_column(&self) -> Option<Partition> {
        if self.parts.last().is_some_and(|&p| p > 0) {
            Some(Partition {
                parts: self.parts.iter().map(|p| p - 1).collect(),
            })
        } else {
            None
        }
    }

    /// Text form used by the CLI: `[2,1,0]`, or `[]` for the empty partition.
    pub fn bracketed(&self) -> String {
        if self.size() == 0 {
            return "[]".to_string();
        }
        let inner: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        format!("[{}]", inner.join(","))
    }
}

/// Prefix-sum dominance on arbitrary integer vectors.
pub fn prefix_dominated<T: Copy + Into<i64>>(a: &[T], b: &[T]) -> bool {
    let mut sa = 0i64;
    let mut sb = 0i64;
    for (x, y) in a.iter().zip(b) {
        sa += (*x).into();
        sb += (*y).into();
        if sa > sb {
            return false;
        }
    }
    true
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Partitions of exactly `d` with at most `n` parts, reverse lexicographic.
pub fn partitions_of(n: usize, d: u32) -> Vec<Partition> {
    fn rec(n: usize, remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if cur.len() == n {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
            }
            return;
        }
        let slots = (n - cur.len()) as u32;
        // largest first gives reverse lexicographic order
        let hi = max.min(remaining);
        for p in (0..=hi).rev() {
            if p * slots < remaining {
                break;
            }
            cur.push(p);
            rec(n, remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All partitions with at most `n` parts and `|λ| <= d`, in canonical order.
pub fn enumerate_upto(n: usize, d: u32) -> Vec<Partition> {
    (0..=d).flat_map(|e| partitions_of(n, e)).collect()
}

/// All `λ = μ + ε_I` with `|I| = k` that are partitions, with their (1-based) `I`.
pub fn vertical_strip_partitions(mu: &Partition, k: usize) -> Vec<(Partition, Vec<usize>)> {
    let n = mu.n();
    let mut out = Vec::new();
    for subset in subsets_of_size(n, k) {
        if let Some(lam) = mu.plus_indicator(&subset) {
            out.push((lam, subset));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// `λ - μ` has entries in {0, 1}.
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.n() == mu.n() && lambda.parts.iter().zip(&mu.parts).all(|(l, m)| l >= m && l - m <= 1)
}

/// 1-based subsets of `{1..n}` of size `k`, lexicographic.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    all_subsets(n).into_iter().filter(|s| s.len() == k).collect()
}

/// All 1-based subsets of `{1..n}` ordered by bitmask.
pub fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

fn check_cell(lambda: &Partition, s: Cell) -> Result<()> {
    if lambda.contains_cell(s) {
        Ok(())
    } else {
        Err(Error::BoxOutside { row: s.row, col: s.col })
    }
}

/// Lower hook `α(λ_i - j) + (λ'_j - i + 1)`.
pub fn lower_hook<F: Field>(lambda: &Partition, s: Cell, alpha: &F) -> Result<F> {
    check_cell(lambda, s)?;
    let arm = lambda.part(s.row) as i64 - s.col as i64;
    let leg = lambda.conj_part(s.col) as i64 - s.row as i64;
    Ok(alpha.clone() * &F::from_int(arm) + &F::from_int(leg + 1))
}

/// Upper hook `α(λ_i - j + 1) + (λ'_j - i)`.
pub fn upper_hook<F: Field>(lambda: &Partition, s: Cell, alpha: &F) -> Result<F> {
    check_cell(lambda, s)?;
    let arm = lambda.part(s.row) as i64 - s.col as i64;
    let leg = lambda.conj_part(s.col) as i64 - s.row as i64;
    Ok(alpha.clone() * &F::from_int(arm + 1) + &F::from_int(leg))
}

/// `c_λ(α) = ∏_s c_λ(α; s)`.
pub fn hook_product_lower<F: Field>(lambda: &Partition, alpha: &F) -> F {
    lambda.cells().fold(F::one(), |acc, s| {
        acc * &lower_hook(lambda, s, alpha).expect("cell of diagram")
    })
}

/// `c'_λ(α) = ∏_s c'_λ(α; s)`.
pub fn hook_product_upper<F: Field>(lambda: &Partition, alpha: &F) -> F {
    lambda.cells().fold(F::one(), |acc, s| {
        acc * &upper_hook(lambda, s, alpha).expect("cell of diagram")
    })
}

/// `ϱ`-hooklength `(λ_i - j + 1) + (ϱ_i - ϱ_{λ'_j})`.
pub fn rho_hooklength<F: Field>(lambda: &Partition, s: Cell, rho: &[F]) -> Result<F> {
    check_cell(lambda, s)?;
    if rho.len() != lambda.n() {
        return Err(Error::LengthMismatch {
            expected: lambda.n(),
            found: rho.len(),
        });
    }
    let arm = lambda.part(s.row) as i64 - s.col as i64 + 1;
    let leg_row = lambda.conj_part(s.col) as usize;
    Ok(F::from_int(arm) + &rho[s.row - 1] - rho[leg_row - 1].clone())
}

/// `c_λ^ϱ`, the product of all `ϱ`-hooklengths.
pub fn rho_hook_product<F: Field>(lambda: &Partition, rho: &[F]) -> Result<F> {
    let mut acc = F::one();
    for s in lambda.cells() {
        acc *= &rho_hooklength(lambda, s, rho)?;
    }
    Ok(acc)
}

/// `X(λ/μ)`: boxes `(i,j) ∈ λ` with `μ_i = λ_i` and `μ'_j < λ'_j`.
pub fn x_set(lambda: &Partition, mu: &Partition) -> Result<Vec<Cell>> {
    if mu.n() != lambda.n() {
        return Err(Error::LengthMismatch {
            expected: lambda.n(),
            found: mu.n(),
        });
    }
    if !mu.subset_of(lambda) {
        return Err(Error::NotContained {
            inner: mu.parts.clone(),
            outer: lambda.parts.clone(),
        });
    }
    Ok(lambda
        .cells()
        .filter(|s| mu.part(s.row) == lambda.part(s.row) && mu.conj_part(s.col) < lambda.conj_part(s.col))
        .collect())
}

/// Pieri coefficient `ψ'_{λ/μ}(α)` for a vertical strip `λ/μ`.
pub fn pieri_coefficient<F: Field>(lambda: &Partition, mu: &Partition, alpha: &F) -> Result<F> {
    if !is_vertical_strip(lambda, mu) {
        return Err(Error::NotVerticalStrip {
            inner: mu.parts.clone(),
            outer: lambda.parts.clone(),
        });
    }
    let mut acc = F::one();
    for s in x_set(lambda, mu)? {
        let ratio_l = lower_hook(lambda, s, alpha)? / upper_hook(lambda, s, alpha)?;
        let ratio_m = lower_hook(mu, s, alpha)? / upper_hook(mu, s, alpha)?;
        acc = acc * &ratio_l / ratio_m;
    }
    Ok(acc)
}
