//! Jack polynomials, integral forms, the Pieri rule and the integrality /
//! positivity scan for the inhomogeneous integral form.
//!
//! Shifted quantities live over `Q(r)`, Jack quantities over `Q(α)`; the two
//! are bridged by `α = 1/r` through [`RatFunc::invert_param`].

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::interpolation::{interpolation_basis, solve_p, RhoVector};
use crate::operators::apply_sekiguchi_debiard;
use crate::partitions::{hook_product_lower, partitions_of, pieri_coefficient, vertical_strip_partitions, Partition};
use crate::scalars::{Param, RatFunc, UniPoly};
use crate::sympoly::{elementary, MSymPoly};

fn alpha() -> RatFunc {
    RatFunc::param(Param::Alpha)
}

/// `ϱ = r δ` with symbolic `r`.
pub fn symbolic_rho(n: usize) -> RhoVector<RatFunc> {
    RhoVector::r_delta(RatFunc::param(Param::R), n)
}

/// Rewrites a polynomial over `Q(r)` over `Q(α)` with `r = 1/α`.
pub fn r_to_alpha(f: &MSymPoly<RatFunc>) -> MSymPoly<RatFunc> {
    f.map_coeffs(|c| c.invert_param(Param::Alpha))
}

/// Rewrites a polynomial over `Q(α)` over `Q(r)` with `α = 1/r`.
pub fn alpha_to_r(f: &MSymPoly<RatFunc>) -> MSymPoly<RatFunc> {
    f.map_coeffs(|c| c.invert_param(Param::R))
}

/// Top component of a shifted polynomial `P_λ^{rδ}`, written in `α`.
pub fn jack_from_shifted(shifted: &MSymPoly<RatFunc>) -> Result<MSymPoly<RatFunc>> {
    Ok(r_to_alpha(&shifted.top_component()?))
}

/// `P_λ^{(α)}` as the top component of `P_λ^{rδ}`.
pub fn jack_p(lambda: &Partition) -> Result<MSymPoly<RatFunc>> {
    jack_from_shifted(&solve_p(lambda, &symbolic_rho(lambda.n()))?)
}

/// `P_λ^{(α)}` as the triangular eigenvector of the Sekiguchi–Debiard
/// operator on the homogeneous space of degree `|λ|`, at `r = 1/α`.
pub fn jack_p_oracle(lambda: &Partition) -> Result<MSymPoly<RatFunc>> {
    let n = lambda.n();
    let r = RatFunc::one() / alpha();
    // reverse lexicographic order refines dominance
    let basis = partitions_of(n, lambda.size());
    let images: Vec<Vec<MSymPoly<RatFunc>>> = basis
        .par_iter()
        .map(|mu| apply_sekiguchi_debiard(&MSymPoly::monomial(mu.clone()), &r))
        .collect::<Result<_>>()?;
    let entry = |k: usize, row: &Partition, col: usize| images[col][k].coeff(row);
    let start = basis
        .iter()
        .position(|mu| mu == lambda)
        .expect("λ lies in its own degree");
    let diag: Vec<RatFunc> = (0..=n).map(|k| entry(k, lambda, start)).collect();
    let mut coeffs: Vec<RatFunc> = vec![RatFunc::zero(); basis.len()];
    coeffs[start] = RatFunc::one();
    for i in start + 1..basis.len() {
        let mu = &basis[i];
        let rhs: Vec<RatFunc> = (0..=n)
            .map(|k| {
                (start..i).fold(RatFunc::zero(), |acc, j| {
                    if coeffs[j].is_zero() {
                        acc
                    } else {
                        acc + &(entry(k, mu, j) * &coeffs[j])
                    }
                })
            })
            .collect();
        match (0..=n).find(|&k| diag[k] != entry(k, mu, i)) {
            Some(k) => coeffs[i] = rhs[k].clone() / (diag[k].clone() - entry(k, mu, i)),
            None if rhs.iter().all(RatFunc::is_zero) => {}
            None => {
                return Err(Error::Inconsistent(format!(
                    "eigenvalue collision at m{}",
                    mu.bracketed()
                )))
            }
        }
    }
    let p = MSymPoly::from_terms(n, basis.iter().cloned().zip(coeffs));
    // full eigen-equation, every t-coefficient and every row
    for k in 0..=n {
        let mut image = MSymPoly::zero(n);
        for (j, mu) in basis.iter().enumerate() {
            image = image.add(&images[j][k].scale(&p.coeff(mu)));
        }
        if image != p.scale(&diag[k]) {
            return Err(Error::Inconsistent(format!(
                "eigen-equation fails for {}",
                lambda.bracketed()
            )));
        }
    }
    Ok(p)
}

/// `J_λ = c_λ(α) P_λ^{(α)}`.
pub fn jack_j(lambda: &Partition) -> Result<MSymPoly<RatFunc>> {
    Ok(jack_p(lambda)?.scale(&hook_product_lower(lambda, &alpha())))
}

/// `J_λ^{rδ}(x) = (-1)^{|λ|} c_λ(1/r) P_λ^{rδ}(-x)`, written in `α = 1/r`.
pub fn shifted_j_from(lambda: &Partition, shifted: &MSymPoly<RatFunc>) -> MSymPoly<RatFunc> {
    let flipped = shifted.neg_x();
    let signed = if lambda.size() % 2 == 1 { flipped.neg() } else { flipped };
    r_to_alpha(&signed).scale(&hook_product_lower(lambda, &alpha()))
}

pub fn shifted_j(lambda: &Partition) -> Result<MSymPoly<RatFunc>> {
    Ok(shifted_j_from(lambda, &solve_p(lambda, &symbolic_rho(lambda.n()))?))
}

/// One coefficient of the conjecture scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub mu: Partition,
    /// `a_{λμ}(α) = α^{|λ|-|μ|} [m_μ] J_λ^{rδ}`.
    pub a: RatFunc,
    pub integral: bool,
    pub nonneg: bool,
    /// `μ <= λ` in the prefix-sum order.
    pub dominated: bool,
}

impl ConjectureRow {
    pub fn passes(&self) -> bool {
        self.integral && self.nonneg && self.dominated
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub lambda: Partition,
    pub n: usize,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn passes(&self) -> bool {
        self.rows.iter().all(ConjectureRow::passes)
    }

    pub fn verdict(&self) -> &'static str {
        if self.passes() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                json!({
                    "mu": row.mu.parts(),
                    "a": row.a.to_string(),
                    "integral": row.integral,
                    "nonneg": row.nonneg,
                    "dominated": row.dominated,
                })
            })
            .collect();
        json!({"lambda": self.lambda.parts(), "n": self.n, "rows": rows, "verdict": self.verdict()})
    }
}

/// Classifies each coefficient of a given `J_λ^{rδ}` (over `Q(α)`).
pub fn conjecture_from(lambda: &Partition, j: &MSymPoly<RatFunc>) -> ConjectureReport {
    let rows = j
        .terms()
        .iter()
        .map(|(mu, c)| {
            let shift = lambda.size() as i64 - mu.size() as i64;
            let power = RatFunc::from_poly(
                Param::Alpha,
                UniPoly::monomial(One::one(), shift.unsigned_abs() as usize),
            );
            let a = if shift >= 0 {
                c.clone() * &power
            } else {
                c.clone() / &power
            };
            let polynomial = a.is_polynomial();
            let integral = polynomial && a.numer().coeffs().iter().all(|q| q.is_integer());
            let nonneg = polynomial && a.numer().coeffs().iter().all(|q| !q.is_negative());
            ConjectureRow {
                mu: mu.clone(),
                a,
                integral,
                nonneg,
                dominated: mu.dominance_leq(lambda),
            }
        })
        .collect();
    ConjectureReport {
        lambda: lambda.clone(),
        n: j.n(),
        rows,
    }
}

pub fn conjecture_expand(lambda: &Partition) -> Result<ConjectureReport> {
    Ok(conjecture_from(lambda, &shifted_j(lambda)?))
}

/// Jack polynomials in `n` variables up to a degree, either from the shifted
/// theory or from the differential-operator oracle.
pub struct JackTable {
    n: usize,
    polys: BTreeMap<Partition, MSymPoly<RatFunc>>,
}

impl JackTable {
    pub fn from_shifted(n: usize, d: u32) -> Result<Self> {
        let family = interpolation_basis(n, d, &symbolic_rho(n))?;
        let polys = family
            .iter()
            .map(|(l, p)| jack_from_shifted(p).map(|j| (l.clone(), j)))
            .collect::<Result<_>>()?;
        Ok(JackTable { n, polys })
    }

    pub fn from_oracle(n: usize, d: u32) -> Result<Self> {
        let lambdas = crate::partitions::enumerate_upto(n, d);
        let polys = lambdas
            .par_iter()
            .map(|l| jack_p_oracle(l).map(|j| (l.clone(), j)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .collect();
        Ok(JackTable { n, polys })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, lambda: &Partition) -> Result<&MSymPoly<RatFunc>> {
        self.polys
            .get(lambda)
            .ok_or_else(|| Error::InvalidArgument(format!("{} is beyond the table", lambda.bracketed())))
    }

    pub fn polys(&self) -> &BTreeMap<Partition, MSymPoly<RatFunc>> {
        &self.polys
    }
}

/// Both sides of `e_k P_μ = Σ_λ ψ'_{λ/μ} P_λ` over vertical `k`-strips.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriCheck {
    pub mu: Partition,
    pub k: usize,
    pub lhs: MSymPoly<RatFunc>,
    pub rhs: MSymPoly<RatFunc>,
    pub terms: Vec<(Partition, RatFunc)>,
}

impl PieriCheck {
    pub fn residual(&self) -> MSymPoly<RatFunc> {
        self.lhs.sub(&self.rhs)
    }

    pub fn passes(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn pieri_verify(mu: &Partition, k: usize, table: &JackTable) -> Result<PieriCheck> {
    let n = mu.n();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= {n}, got {k}")));
    }
    let lhs = elementary::<RatFunc>(k, n).multiply(table.get(mu)?);
    let mut rhs = MSymPoly::zero(n);
    let mut terms = Vec::new();
    for (lam, _) in vertical_strip_partitions(mu, k) {
        let c = pieri_coefficient(&lam, mu, &alpha())?;
        rhs = rhs.add(&table.get(&lam)?.scale(&c));
        terms.push((lam, c));
    }
    Ok(PieriCheck {
        mu: mu.clone(),
        k,
        lhs,
        rhs,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Field, Rational};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(v: i64) -> RatFunc {
        RatFunc::from_int(v)
    }

    #[test]
    fn jack_examples() {
        let two_over = c(2) / (alpha() + &c(1));
        let expected = MSymPoly::from_terms(2, [(p(&[2, 0]), c(1)), (p(&[1, 1]), two_over)]);
        assert_eq!(jack_p(&p(&[2, 0])).unwrap(), expected);
        assert_eq!(jack_p_oracle(&p(&[2, 0])).unwrap(), expected);
        assert_eq!(expected.to_string(), "m[2,0] + (2/(α+1)) m[1,1]");
        assert_eq!(jack_p(&p(&[1, 1])).unwrap(), MSymPoly::monomial(p(&[1, 1])));
        assert_eq!(jack_p(&p(&[1, 0])).unwrap(), MSymPoly::monomial(p(&[1, 0])));
        assert_eq!(jack_p_oracle(&p(&[1])).unwrap(), MSymPoly::monomial(p(&[1])));
        let at_one = expected.try_map_coeffs(|q| q.substitute(&Rational::one())).unwrap();
        let schur = MSymPoly::from_terms(2, [(p(&[2, 0]), Rational::one()), (p(&[1, 1]), Rational::one())]);
        assert_eq!(at_one, schur);
    }

    #[test]
    fn integral_forms() {
        assert_eq!(
            jack_j(&p(&[1, 1])).unwrap(),
            MSymPoly::monomial(p(&[1, 1])).scale(&c(2))
        );
        let expected = MSymPoly::from_terms(2, [(p(&[2, 0]), alpha() + &c(1)), (p(&[1, 1]), c(2))]);
        assert_eq!(jack_j(&p(&[2, 0])).unwrap(), expected);
        assert_eq!(jack_j(&p(&[1])).unwrap(), MSymPoly::monomial(p(&[1])));
        let sj = shifted_j(&p(&[1, 0])).unwrap();
        let expected = MSymPoly::from_terms(2, [(p(&[1, 0]), c(1)), (p(&[0, 0]), c(1) / alpha())]);
        assert_eq!(sj, expected);
        assert_eq!(shifted_j(&p(&[0, 0])).unwrap(), MSymPoly::one(2));
    }

    #[test]
    fn conjecture_examples() {
        let rep = conjecture_expand(&p(&[1, 0])).unwrap();
        assert!(rep.passes());
        assert_eq!(rep.rows.len(), 2);
        assert!(rep.rows.iter().all(|row| row.a == c(1)));
        let rep = conjecture_expand(&p(&[1, 0, 0])).unwrap();
        let empty = rep.rows.iter().find(|row| row.mu.size() == 0).unwrap();
        assert_eq!(empty.a, c(3));
        assert!(conjecture_expand(&p(&[1, 1])).unwrap().passes());
    }

    #[test]
    fn pieri_golden() {
        let table = JackTable::from_shifted(2, 3).unwrap();
        let check = pieri_verify(&p(&[1, 0]), 1, &table).unwrap();
        assert!(check.passes());
        let expected_c = c(2) * &alpha() / (alpha() + &c(1));
        assert_eq!(check.terms, vec![(p(&[2, 0]), c(1)), (p(&[1, 1]), expected_c)]);
        let empty = pieri_verify(&p(&[0, 0]), 1, &table).unwrap();
        assert_eq!(empty.terms, vec![(p(&[1, 0]), c(1))]);
        let single = pieri_verify(&p(&[1, 1]), 1, &table).unwrap();
        assert_eq!(single.terms.len(), 1);
        assert!(single.passes());
    }
}
