use std::collections::BTreeMap;
use std::fmt;

use crate::partitions::Partition;
use crate::scalars::Field;

use super::{elementary, MSymPoly};

/// A polynomial in `e_1..e_n`; keys are exponent vectors `(a_1, ..., a_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPoly<F> {
    n: usize,
    terms: BTreeMap<Vec<u32>, F>,
}

impl<F: Field> EPoly<F> {
    pub fn zero(n: usize) -> Self {
        EPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, F> {
        &self.terms
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: F) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(F::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Substitutes the monomial expansions of the `e_k` back in.
    pub fn to_msym(&self) -> MSymPoly<F> {
        let es: Vec<MSymPoly<F>> = (1..=self.n).map(|k| elementary(k, self.n)).collect();
        let mut out = MSymPoly::zero(self.n);
        for (e, c) in &self.terms {
            out = out.add(&e_monomial(&es, e).scale(c));
        }
        out
    }
}

/// `∏ e_k^{a_k}` from precomputed `e_1..e_n`.
pub(crate) fn e_monomial<F: Field>(es: &[MSymPoly<F>], a: &[u32]) -> MSymPoly<F> {
    let n = es.first().map_or(0, MSymPoly::n);
    let mut acc = MSymPoly::one(n);
    for (k, &ak) in a.iter().enumerate() {
        for _ in 0..ak {
            acc = acc.multiply(&es[k]);
        }
    }
    acc
}

/// `e`-exponents whose product has leading monomial `m_λ`: `a_k = λ_k - λ_{k+1}`.
pub fn leading_exponents(lambda: &Partition) -> Vec<u32> {
    let p = lambda.parts();
    (0..p.len())
        .map(|k| p[k] - p.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// Writes `f` as a polynomial in the elementary symmetric functions.
pub fn e_basis_expand<F: Field>(f: &MSymPoly<F>) -> EPoly<F> {
    let n = f.n();
    let es: Vec<MSymPoly<F>> = (1..=n).map(|k| elementary(k, n)).collect();
    let mut rest = f.clone();
    let mut out = EPoly::zero(n);
    // the degree-maximal, lexicographically largest term is dominance-maximal
    while let Some((lead, c)) = rest
        .terms()
        .iter()
        .max_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| a.0.parts().cmp(b.0.parts())))
        .map(|(k, c)| (k.clone(), c.clone()))
    {
        let a = leading_exponents(&lead);
        rest = rest.sub(&e_monomial(&es, &a).scale(&c));
        out.add_term(a, c);
    }
    out
}

impl<F: Field> fmt::Display for EPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = c.signed_display();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(k, &a)| {
                    if a == 1 {
                        format!("e{}", k + 1)
                    } else {
                        format!("e{}^{a}", k + 1)
                    }
                })
                .collect();
            let is_unit = c.is_one() || (-c.clone()).is_one();
            match (mono.is_empty(), is_unit) {
                (true, _) => f.write_str(&mag)?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "{mag} {}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn expansions() {
        let m11 = MSymPoly::<Rational>::monomial(p(&[1, 1]));
        let e = e_basis_expand(&m11);
        assert_eq!(e.terms().len(), 1);
        assert_eq!(e.terms()[&vec![0, 1]], Rational::from_integer(1.into()));

        // power-sum oracle: m_(2) = p_2 = e_1^2 - 2 e_2 (Newton)
        let m2 = MSymPoly::<Rational>::monomial(p(&[2, 0]));
        let e = e_basis_expand(&m2);
        let mut expected = EPoly::zero(2);
        expected.add_term(vec![2, 0], Rational::from_integer(1.into()));
        expected.add_term(vec![0, 1], Rational::from_integer((-2).into()));
        assert_eq!(e, expected);
        assert_eq!(e.to_string(), "e1^2 - 2 e2");

        let e3 = elementary::<Rational>(3, 3);
        assert_eq!(e_basis_expand(&e3).to_msym(), e3);
    }
}
