use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::scalars::{binomial, Field, Rational};

use super::MSymPoly;

/// Sparse polynomial in `x_1..x_n`, optionally with one extra variable `t`
/// stored in the last exponent slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly<F> {
    n: usize,
    with_t: bool,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> SparsePoly<F> {
    pub fn zero(n: usize, with_t: bool) -> Self {
        SparsePoly {
            n,
            with_t,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, with_t: bool, c: F) -> Self {
        let mut p = Self::zero(n, with_t);
        p.add_term(vec![0; n + with_t as usize], c);
        p
    }

    pub fn one(n: usize, with_t: bool) -> Self {
        Self::constant(n, with_t, F::one())
    }

    /// `x_i` with a 0-based index.
    pub fn var(n: usize, with_t: bool, i: usize) -> Self {
        let mut e = vec![0; n + with_t as usize];
        e[i] = 1;
        let mut p = Self::zero(n, with_t);
        p.add_term(e, F::one());
        p
    }

    /// The extra variable `t`.
    pub fn t(n: usize) -> Self {
        Self::var(n, true, n)
    }

    /// `x_i + c` with a 0-based index.
    pub fn linear(n: usize, with_t: bool, i: usize, c: F) -> Self {
        Self::var(n, with_t, i).add(&Self::constant(n, with_t, c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_t(&self) -> bool {
        self.with_t
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, F> {
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

    pub fn coeff(&self, e: &[u32]) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: F) {
        debug_assert_eq!(e.len(), self.n + self.with_t as usize);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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

    fn add_term_ref(&mut self, e: &[u32], c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(e);
                }
            }
            None => {
                self.terms.insert(e.to_vec(), c.clone());
            }
        }
    }

    fn compatible(&self, other: &Self) {
        assert!(
            self.n == other.n && self.with_t == other.with_t,
            "incompatible polynomial rings"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term_ref(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            n: self.n,
            with_t: self.with_t,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.n, self.with_t);
        }
        SparsePoly {
            n: self.n,
            with_t: self.with_t,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.clone() * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.compatible(other);
        let mut out = Self::zero(self.n, self.with_t);
        let mut e = vec![0u32; self.n + self.with_t as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for (k, slot) in e.iter_mut().enumerate() {
                    *slot = ea[k] + eb[k];
                }
                out.add_term_ref(&e, &(ca.clone() * cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n, self.with_t);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `v^k` where `v` is the variable in slot `slot`.
    pub fn mul_var_pow(&self, slot: usize, k: u32) -> Self {
        SparsePoly {
            n: self.n,
            with_t: self.with_t,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[slot] += k;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Total degree in the `x` variables; `None` for zero.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[..self.n].iter().sum()).max()
    }

    /// Substitutes `x_i -> x_i + offsets[i]` for every `x` slot.
    pub fn translate(&self, offsets: &[F]) -> Self {
        assert_eq!(offsets.len(), self.n);
        let mut cur = self.clone();
        for (i, c) in offsets.iter().enumerate() {
            if !c.is_zero() {
                cur = cur.translate_var(i, c);
            }
        }
        cur
    }

    fn translate_var(&self, i: usize, c: &F) -> Self {
        let max_e = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
        let powers: Vec<F> = (0..=max_e).map(|k| c.pow(k)).collect();
        let mut out = Self::zero(self.n, self.with_t);
        for (e, coeff) in &self.terms {
            let m = e[i];
            let mut ne = e.clone();
            for k in 0..=m {
                ne[i] = k;
                let b = F::from_rational(&Rational::from_integer(binomial(m, k)));
                out.add_term_ref(&ne, &(coeff.clone() * &b * &powers[(m - k) as usize]));
            }
        }
        out
    }

    /// `f(x - ε_I)` for a 1-based index set `I`.
    pub fn shift_down(&self, subset: &[usize]) -> Self {
        let mut offsets = vec![F::zero(); self.n];
        for &i in subset {
            offsets[i - 1] = -F::one();
        }
        self.translate(&offsets)
    }

    /// `∂/∂x_i` with a 0-based index.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n, self.with_t);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c.clone() * &F::from_int(e[i] as i64));
        }
        out
    }

    /// Evaluation at a point covering every slot (including `t` if present).
    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.n + self.with_t as usize);
        let max_e = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
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
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, &ek) in e.iter().enumerate() {
                if ek > 0 {
                    term *= &powers[k][ek as usize];
                }
            }
            total += &term;
        }
        total
    }

    /// Swaps two `x` slots.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        SparsePoly {
            n: self.n,
            with_t: self.with_t,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Invariant under every transposition of `x` variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// Changes sign under every transposition of `x` variables.
    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == self.neg())
    }

    /// Exact division by `x_i - x_j` (0-based), by synthetic division in `x_i`.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Result<Self> {
        let mut groups: BTreeMap<u32, SparsePoly<F>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let k = rest[i];
            rest[i] = 0;
            groups
                .entry(k)
                .or_insert_with(|| Self::zero(self.n, self.with_t))
                .add_term(rest, c.clone());
        }
        let Some(&top) = groups.keys().next_back() else {
            return Ok(self.clone());
        };
        // p = Σ p_k x_i^k = (x_i - x_j) Σ q_k x_i^k  gives  q_{k-1} = p_k + x_j q_k
        let mut quotient = Self::zero(self.n, self.with_t);
        let mut carry = Self::zero(self.n, self.with_t);
        for k in (1..=top).rev() {
            let pk = groups.remove(&k).unwrap_or_else(|| Self::zero(self.n, self.with_t));
            carry = pk.add(&carry.mul_var_pow(j, 1));
            quotient = quotient.add(&carry.mul_var_pow(i, k - 1));
        }
        let p0 = groups.remove(&0).unwrap_or_else(|| Self::zero(self.n, self.with_t));
        if !p0.add(&carry.mul_var_pow(j, 1)).is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(quotient)
    }

    /// Exact quotient by `a_δ = ∏_{i<j} (x_i - x_j)`.
    pub fn divide_by_vandermonde(&self) -> Result<Self> {
        if !self.is_skew_symmetric() {
            return Err(Error::NotDivisible);
        }
        let mut cur = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                cur = cur.divide_by_difference(i, j)?;
            }
        }
        Ok(cur)
    }

    /// Splits off `t`: entry `k` is the coefficient of `t^k`.
    pub fn split_t(&self) -> Vec<SparsePoly<F>> {
        assert!(self.with_t, "polynomial has no t slot");
        let mut out: Vec<SparsePoly<F>> = Vec::new();
        for (e, c) in &self.terms {
            let k = e[self.n] as usize;
            while out.len() <= k {
                out.push(Self::zero(self.n, false));
            }
            out[k].add_term(e[..self.n].to_vec(), c.clone());
        }
        out
    }

    /// Embeds a `t`-free polynomial into the ring with `t`.
    pub fn with_t_slot(&self) -> Self {
        if self.with_t {
            return self.clone();
        }
        SparsePoly {
            n: self.n,
            with_t: true,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.push(0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Inverse of monomial expansion; fails unless the input is symmetric.
    pub fn collect_symmetric(&self) -> Result<MSymPoly<F>> {
        if self.with_t {
            return Err(Error::InvalidArgument(
                "collect_symmetric needs a t-free polynomial".into(),
            ));
        }
        let mut out = MSymPoly::zero(self.n);
        let mut seen: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            match self.terms.get(&key) {
                Some(kc) if kc == c => {}
                _ => return Err(Error::NotSymmetric),
            }
            *seen.entry(key).or_insert(0) += 1;
        }
        for (key, count) in seen {
            if count != super::orbit_size(&key) {
                return Err(Error::NotSymmetric);
            }
            let c = self.terms[&key].clone();
            out.add_term(Partition::new(key).expect("sorted exponent"), c);
        }
        Ok(out)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> SparsePoly<G> {
        let mut out = SparsePoly::zero(self.n, self.with_t);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

impl<F: Field> fmt::Display for SparsePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let (neg, mag) = c.signed_display();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut mono = String::new();
            for (k, &ek) in e.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                let name = if k == self.n {
                    "t".to_string()
                } else {
                    format!("x{}", k + 1)
                };
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&name);
                if ek > 1 {
                    mono.push_str(&format!("^{ek}"));
                }
            }
            match (mono.is_empty(), mag == "1") {
                (true, _) => f.write_str(&mag)?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant<F: Field>(m: &[Vec<SparsePoly<F>>]) -> SparsePoly<F> {
    let size = m.len();
    assert!(
        size > 0 && m.iter().all(|row| row.len() == size),
        "square matrix expected"
    );
    let cols: Vec<usize> = (0..size).collect();
    det_rec(m, 0, &cols)
}

fn det_rec<F: Field>(m: &[Vec<SparsePoly<F>>], row: usize, cols: &[usize]) -> SparsePoly<F> {
    let template = &m[0][0];
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = SparsePoly::zero(template.n(), template.has_t());
    for (pos, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = m[row][c].mul(&det_rec(m, row + 1, &rest));
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Determinant of a matrix of field elements, by fraction-free elimination.
pub fn scalar_determinant<F: Field>(m: &[Vec<F>]) -> F {
    let size = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut sign = false;
    let mut prev = F::one();
    for k in 0..size {
        let Some(p) = (k..size).find(|&i| !a[i][k].is_zero()) else {
            return F::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (a[k][k].clone() * &a[i][j] - a[i][k].clone() * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = F::zero();
        }
        prev = a[k][k].clone();
    }
    let d = if size == 0 {
        F::one()
    } else {
        a[size - 1][size - 1].clone()
    };
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = SparsePoly<Rational>;

    fn x(n: usize, i: usize) -> P {
        P::var(n, false, i)
    }

    #[test]
    fn divide_difference_of_squares() {
        let p = x(2, 0).pow(2).sub(&x(2, 1).pow(2));
        let q = p.divide_by_difference(0, 1).unwrap();
        assert_eq!(q, x(2, 0).add(&x(2, 1)));
        assert!(x(2, 0).divide_by_difference(0, 1).is_err());
    }

    #[test]
    fn collect_rejects_asymmetric() {
        assert!(matches!(x(2, 0).collect_symmetric(), Err(Error::NotSymmetric)));
        let s = x(2, 0).add(&x(2, 1)).collect_symmetric().unwrap();
        assert_eq!(s, MSymPoly::monomial(Partition::new(vec![1, 0]).unwrap()));
        let p = x(2, 0).pow(2).mul(&x(2, 1)).add(&x(2, 0).mul(&x(2, 1).pow(2)));
        assert_eq!(
            p.collect_symmetric().unwrap(),
            MSymPoly::monomial(Partition::new(vec![2, 1]).unwrap())
        );
    }

    #[test]
    fn translate_and_derivative() {
        let one = Rational::from_integer(1.into());
        let p = x(1, 0).pow(2); // x^2 -> (x+1)^2
        let q = p.translate(std::slice::from_ref(&one));
        let expected = x(1, 0)
            .pow(2)
            .add(&x(1, 0).scale(&Rational::from_integer(2.into())))
            .add(&P::one(1, false));
        assert_eq!(q, expected);
        assert_eq!(p.derivative(0), x(1, 0).scale(&Rational::from_integer(2.into())));
    }

    #[test]
    fn determinants_agree() {
        let m: Vec<Vec<Rational>> = vec![vec![2, 1, 3], vec![0, 4, 1], vec![5, 2, 2]]
            .into_iter()
            .map(|r| r.into_iter().map(|v| Rational::from_integer(v.into())).collect())
            .collect();
        let sp: Vec<Vec<P>> = m
            .iter()
            .map(|r| r.iter().map(|c| P::constant(1, false, c.clone())).collect())
            .collect();
        // 2(8 - 2) - 1(0 - 5) + 3(0 - 20)
        let d = scalar_determinant(&m);
        assert_eq!(d, Rational::from_integer((-43).into()));
        assert_eq!(determinant(&sp), P::constant(1, false, d));
    }
}
