//! Exhaustive verification suites over truncated ranges, each producing a
//! JSON report with the first counterexample found.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::interpolation::{
    check_r_dominant, factorial_monomial_case, factorial_schur, interpolate, interpolate_recursive,
    interpolation_basis, is_dominant, one_row, solve_p, special_1k, RhoVector,
};
use crate::jack::{
    alpha_to_r, conjecture_from, jack_from_shifted, jack_p_oracle, pieri_verify, shifted_j_from, symbolic_rho,
    JackTable,
};
use crate::operators::{eigenvalue, DifferenceOperators, OperatorKind};
use crate::partitions::{all_subsets, enumerate_upto, hook_product_lower, rho_hook_product, Partition};
use crate::scalars::{Field, Param, RatFunc, Rational};
use crate::sympoly::MSymPoly;

/// Seed for every randomized check, so reports are reproducible.
pub const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RMode {
    Symbolic,
    Value(Rational),
}

impl fmt::Display for RMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RMode::Symbolic => f.write_str("symbolic"),
            RMode::Value(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub n: usize,
    pub dmax: u32,
    pub r: RMode,
}

impl CheckConfig {
    pub fn new(n: usize, dmax: u32, r: RMode) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if let RMode::Value(q) = &r {
            check_r_dominant(q, n)?;
        }
        Ok(CheckConfig { n, dmax, r })
    }

    fn params(&self) -> Value {
        json!({"n": self.n, "dmax": self.dmax, "r": self.r.to_string()})
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Vanishing,
    Unitriangularity,
    ClosedForms,
    Eigenvalue,
    Commutativity,
    Cutoff,
    EStability,
    ExtraVanishing,
    IdealStability,
    JackCross,
    Psi,
    Pieri,
    Uniqueness,
    Conjecture,
    DegreeBound,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::Vanishing,
        Check::Unitriangularity,
        Check::ClosedForms,
        Check::Eigenvalue,
        Check::Commutativity,
        Check::Cutoff,
        Check::EStability,
        Check::ExtraVanishing,
        Check::IdealStability,
        Check::JackCross,
        Check::Psi,
        Check::Pieri,
        Check::Uniqueness,
        Check::Conjecture,
        Check::DegreeBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Vanishing => "vanishing",
            Check::Unitriangularity => "unitriangularity",
            Check::ClosedForms => "closed-forms",
            Check::Eigenvalue => "eigenvalue",
            Check::Commutativity => "commutativity",
            Check::Cutoff => "cutoff",
            Check::EStability => "e-stability",
            Check::ExtraVanishing => "extra-vanishing",
            Check::IdealStability => "ideal-stability",
            Check::JackCross => "jack-cross",
            Check::Psi => "psi",
            Check::Pieri => "pieri",
            Check::Uniqueness => "uniqueness",
            Check::Conjecture => "conjecture",
            Check::DegreeBound => "degree-bound",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub check: Check,
    pub params: Value,
    pub witness: Option<Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "check": self.check.name(),
            "params": self.params,
            "status": if self.passed() { "pass" } else { "fail" },
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

/// `None` on success, otherwise the first counterexample.
type Outcome = Result<Option<Value>>;

fn first_failure(items: Vec<Outcome>) -> Outcome {
    for item in items {
        if let Some(w) = item? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

macro_rules! with_r {
    ($cfg:expr, $f:ident ( $($arg:expr),* )) => {
        match &$cfg.r {
            RMode::Symbolic => $f($($arg,)* RatFunc::param(Param::R)),
            RMode::Value(q) => $f($($arg,)* q.clone()),
        }
    };
}

pub fn run_check(check: Check, cfg: &CheckConfig) -> Result<CheckReport> {
    let (n, d) = (cfg.n, cfg.dmax);
    let witness = match check {
        Check::Vanishing => with_r!(cfg, vanishing(n, d)),
        Check::Unitriangularity => with_r!(cfg, unitriangularity(n, d)),
        Check::ClosedForms => with_r!(cfg, closed_forms(n, d)),
        Check::Eigenvalue => with_r!(cfg, eigen(n, d)),
        Check::Commutativity => with_r!(cfg, commutativity(n, d)),
        Check::Cutoff => with_r!(cfg, cutoff(n, d)),
        Check::EStability => with_r!(cfg, e_stability(n, d)),
        Check::ExtraVanishing => with_r!(cfg, extra_vanishing(n, d)),
        Check::IdealStability => with_r!(cfg, ideal_stability(n, d)),
        Check::JackCross => jack_cross(n, d),
        Check::Psi => psi(cfg),
        Check::Pieri => pieri(n, d),
        Check::Uniqueness => with_r!(cfg, uniqueness(n, d)),
        Check::Conjecture => conjecture(n, d),
        Check::DegreeBound => with_r!(cfg, degree_bound(n, d)),
    }?;
    let mut params = cfg.params();
    if matches!(check, Check::JackCross | Check::Pieri | Check::Conjecture) {
        params["r"] = json!("symbolic");
    }
    Ok(CheckReport { check, params, witness })
}

fn point_witness(lambda: &Partition, mu: &Partition, got: &impl fmt::Display, want: &impl fmt::Display) -> Value {
    json!({"lambda": lambda.parts(), "mu": mu.parts(), "got": got.to_string(), "expected": want.to_string()})
}

fn poly_witness<F: Field>(lambda: &Partition, got: &MSymPoly<F>, want: &MSymPoly<F>) -> Value {
    json!({"lambda": lambda.parts(), "got": got.to_string(), "expected": want.to_string()})
}

fn vanishing<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let rho = RhoVector::r_delta(r, n);
    let basis = interpolation_basis(n, d, &rho)?;
    let items: Vec<Outcome> = basis
        .par_iter()
        .map(|(lambda, p)| {
            for mu in enumerate_upto(n, lambda.size()) {
                let got = p.evaluate(&rho.point(&mu));
                let want = if &mu == lambda {
                    rho_hook_product(lambda, rho.entries())?
                } else {
                    F::zero()
                };
                if got != want {
                    return Ok(Some(point_witness(lambda, &mu, &got, &want)));
                }
            }
            Ok(None)
        })
        .collect();
    first_failure(items)
}

fn unitriangularity<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let basis = interpolation_basis(n, d, &RhoVector::r_delta(r, n))?;
    for (lambda, p) in &basis {
        if !p.coeff(lambda).is_one() {
            return Ok(Some(
                json!({"lambda": lambda.parts(), "leading": p.coeff(lambda).to_string()}),
            ));
        }
        if let Some(mu) = p.terms().keys().find(|mu| *mu != lambda && !mu.dominance_leq(lambda)) {
            return Ok(Some(json!({"lambda": lambda.parts(), "undominated": mu.parts()})));
        }
    }
    Ok(None)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-30..=30).into(), rng.gen_range(2..=9).into())
}

/// Random dominant `ϱ` with rational entries.
fn random_rho(rng: &mut ChaCha8Rng, n: usize) -> RhoVector<Rational> {
    loop {
        let rho = RhoVector::generic((0..n).map(|_| random_rational(rng)).collect());
        if is_dominant(&rho) {
            return rho;
        }
    }
}

fn closed_forms<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let lambdas = enumerate_upto(n, d);
    let zero = RhoVector::r_delta(Rational::zero(), n);
    let one = RhoVector::r_delta(Rational::one(), n);
    for lambda in &lambdas {
        let (got, want) = (solve_p(lambda, &zero)?, factorial_monomial_case::<Rational>(lambda)?);
        if got != want {
            return Ok(Some(
                json!({"form": "factorial-monomial", "detail": poly_witness(lambda, &got, &want)}),
            ));
        }
        let (got, want) = (solve_p(lambda, &one)?, factorial_schur::<Rational>(lambda)?);
        if got != want {
            return Ok(Some(
                json!({"form": "factorial-schur", "detail": poly_witness(lambda, &got, &want)}),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..6 {
        let rho = random_rho(&mut rng, n);
        for k in 1..=n {
            let (p1, p2) = special_1k(k, &rho)?;
            let lambda = Partition::column(k, n);
            let direct = solve_p(&lambda, &rho)?;
            if p1 != p2 || p1 != direct {
                let entries: Vec<String> = rho.entries().iter().map(ToString::to_string).collect();
                return Ok(Some(json!({
                    "form": "1^k", "k": k, "rho": entries,
                    "p_prime": p1.to_string(), "p_double_prime": p2.to_string(), "direct": direct.to_string(),
                })));
            }
        }
    }
    let rho = RhoVector::r_delta(r.clone(), n);
    for row in 1..=d {
        let want = match one_row(row, &r, n) {
            Ok(p) => p,
            // binom(-r, row) vanishes: the closed form has no normalization here
            Err(Error::InvalidArgument(_)) => continue,
            Err(e) => return Err(e),
        };
        let lambda = Partition::row(row, n);
        let got = solve_p(&lambda, &rho)?;
        if got != want {
            return Ok(Some(
                json!({"form": "one-row", "detail": poly_witness(&lambda, &got, &want)}),
            ));
        }
    }
    Ok(None)
}

fn eigen<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let basis = interpolation_basis(n, d, &RhoVector::r_delta(r.clone(), n))?;
    let ops = DifferenceOperators::new(n, r.clone());
    let items: Vec<Outcome> = basis
        .par_iter()
        .map(|(lambda, p)| {
            let image = ops.apply_d(p)?;
            let ev = eigenvalue(lambda, &r);
            for (k, part) in image.iter().enumerate() {
                let want = p.scale(&ev.coeff(k));
                if *part != want {
                    return Ok(Some(json!({"lambda": lambda.parts(), "t_power": k, "got": part.to_string(), "expected": want.to_string()})));
                }
            }
            Ok(None)
        })
        .collect();
    first_failure(items)
}

fn commutativity<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let ops = DifferenceOperators::new(n, r);
    let d_mats: Vec<_> = (1..=n)
        .map(|k| ops.operator_matrix(OperatorKind::D(k), d))
        .collect::<Result<_>>()?;
    for i in 0..n {
        for j in i + 1..n {
            if d_mats[i].compose(&d_mats[j])? != d_mats[j].compose(&d_mats[i])? {
                return Ok(Some(json!({"operators": "D", "pair": [i + 1, j + 1]})));
            }
        }
    }
    // E_k raises degree by k, so each composite is built on matching ranges
    let mut e_mats = BTreeMap::new();
    for k in 1..=n {
        for base in (0..=n as u32).map(|j| d + j) {
            e_mats.insert((k, base), ops.operator_matrix(OperatorKind::E(k), base)?);
        }
    }
    let e = |k: usize, base: u32| -> Result<&_> {
        e_mats
            .get(&(k, base))
            .ok_or_else(|| Error::Inconsistent(format!("missing E_{k} on degree {base}")))
    };
    for i in 1..=n {
        for j in i + 1..=n {
            let ij = e(i, d + j as u32)?.compose(e(j, d)?)?;
            let ji = e(j, d + i as u32)?.compose(e(i, d)?)?;
            if ij != ji {
                return Ok(Some(json!({"operators": "E", "pair": [i, j]})));
            }
        }
    }
    Ok(None)
}

fn cutoff<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let ops = DifferenceOperators::new(n, r.clone());
    let rho = RhoVector::r_delta(r, n);
    for subset in all_subsets(n) {
        let phi = ops.phi(&subset);
        for mu in enumerate_upto(n, d) {
            if mu.minus_indicator(&subset).is_some() {
                continue;
            }
            let v = phi.evaluate(&rho.point(&mu));
            if !v.is_zero() {
                return Ok(Some(
                    json!({"subset": subset, "mu": mu.parts(), "value": v.to_string()}),
                ));
            }
        }
    }
    Ok(None)
}

fn e_stability<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let rho = RhoVector::r_delta(r.clone(), n);
    let basis = interpolation_basis(n, d, &rho)?;
    let ops = DifferenceOperators::new(n, r);
    let items: Vec<Outcome> = basis
        .par_iter()
        .map(|(mu, p)| {
            for k in 1..=n {
                let image = ops.apply_e(p, k)?;
                for nu in enumerate_upto(n, mu.size() + k as u32 - 1) {
                    let v = image.evaluate(&rho.point(&nu));
                    if !v.is_zero() {
                        return Ok(Some(
                            json!({"mu": mu.parts(), "k": k, "nu": nu.parts(), "value": v.to_string()}),
                        ));
                    }
                }
            }
            Ok(None)
        })
        .collect();
    first_failure(items)
}

type ValueRow<F> = (Partition, Vec<(Partition, F)>);

/// `P_λ(μ + r δ)` for all `|λ|, |μ| <= d`.
fn value_table<F: Field>(n: usize, d: u32, r: F) -> Result<Vec<ValueRow<F>>> {
    let rho = RhoVector::r_delta(r, n);
    let basis = interpolation_basis(n, d, &rho)?;
    let points = enumerate_upto(n, d);
    Ok(basis
        .par_iter()
        .map(|(lambda, p)| {
            (
                lambda.clone(),
                points
                    .iter()
                    .map(|mu| (mu.clone(), p.evaluate(&rho.point(mu))))
                    .collect(),
            )
        })
        .collect())
}

fn extra_vanishing<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    for (lambda, row) in value_table(n, d, r)? {
        if let Some((mu, v)) = row.iter().find(|(mu, v)| !lambda.subset_of(mu) && !v.is_zero()) {
            return Ok(Some(point_witness(&lambda, mu, v, &0)));
        }
    }
    Ok(None)
}

fn ideal_stability<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let table = value_table(n, d, r)?;
    for lambda0 in enumerate_upto(n, d) {
        for (mu, row) in table.iter().filter(|(mu, _)| lambda0.subset_of(mu)) {
            if let Some((nu, v)) = row.iter().find(|(nu, v)| !lambda0.subset_of(nu) && !v.is_zero()) {
                return Ok(Some(
                    json!({"generator": lambda0.parts(), "member": mu.parts(), "outside": nu.parts(), "value": v.to_string()}),
                ));
            }
        }
    }
    Ok(None)
}

fn jack_cross(n: usize, d: u32) -> Outcome {
    let shifted = interpolation_basis(n, d, &symbolic_rho(n))?;
    let items: Vec<Outcome> = shifted
        .par_iter()
        .map(|(lambda, p)| {
            let top = jack_from_shifted(p)?;
            let oracle = jack_p_oracle(lambda)?;
            if top != oracle {
                return Ok(Some(
                    json!({"relation": "oracle", "detail": poly_witness(lambda, &top, &oracle)}),
                ));
            }
            let alpha = RatFunc::param(Param::Alpha);
            let integral = top.scale(&hook_product_lower(lambda, &alpha));
            let shifted_top = shifted_j_from(lambda, p).top_component()?;
            if shifted_top != integral {
                return Ok(Some(
                    json!({"relation": "integral-form", "detail": poly_witness(lambda, &shifted_top, &integral)}),
                ));
            }
            let schur = top.try_map_coeffs(|c| c.substitute(&Rational::one()))?;
            let want = factorial_schur::<Rational>(lambda)?.top_component()?;
            if schur != want {
                return Ok(Some(
                    json!({"relation": "schur", "detail": poly_witness(lambda, &schur, &want)}),
                ));
            }
            Ok(None)
        })
        .collect();
    first_failure(items)
}

fn psi_against<F: Field>(n: usize, d: u32, r: F, jacks: Vec<(Partition, MSymPoly<F>)>) -> Outcome {
    let basis = interpolation_basis(n, d, &RhoVector::r_delta(r.clone(), n))?;
    let ops = DifferenceOperators::new(n, r);
    let items: Vec<Outcome> = jacks
        .par_iter()
        .map(|(lambda, jack)| {
            let got = ops.psi_map(jack)?;
            let want = &basis[lambda];
            Ok((got != *want).then(|| poly_witness(lambda, &got, want)))
        })
        .collect();
    first_failure(items)
}

fn psi(cfg: &CheckConfig) -> Outcome {
    let (n, d) = (cfg.n, cfg.dmax);
    let jacks: Vec<(Partition, MSymPoly<RatFunc>)> = enumerate_upto(n, d)
        .par_iter()
        .map(|l| jack_p_oracle(l).map(|j| (l.clone(), j)))
        .collect::<Result<_>>()?;
    match &cfg.r {
        RMode::Symbolic => {
            let jacks = jacks.into_iter().map(|(l, j)| (l, alpha_to_r(&j))).collect();
            psi_against(n, d, RatFunc::param(Param::R), jacks)
        }
        RMode::Value(r) => {
            let alpha = r
                .inv()
                .ok_or_else(|| Error::InvalidArgument("the Ψ check needs r != 0".into()))?;
            let jacks = jacks
                .into_iter()
                .map(|(l, j)| j.try_map_coeffs(|c| c.substitute(&alpha)).map(|j| (l, j)))
                .collect::<Result<_>>()?;
            psi_against(n, d, r.clone(), jacks)
        }
    }
}

fn pieri(n: usize, d: u32) -> Outcome {
    let table = JackTable::from_oracle(n, d + n as u32)?;
    let cases: Vec<(Partition, usize)> = enumerate_upto(n, d)
        .into_iter()
        .flat_map(|mu| (1..=n).map(move |k| (mu.clone(), k)))
        .collect();
    let items: Vec<Outcome> = cases
        .par_iter()
        .map(|(mu, k)| {
            let check = pieri_verify(mu, *k, &table)?;
            Ok((!check.passes()).then(|| json!({"mu": mu.parts(), "k": k, "residual": check.residual().to_string()})))
        })
        .collect();
    first_failure(items)
}

fn uniqueness<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let nodes = enumerate_upto(n, d);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for trial in 0..5 {
        let rho = random_rho(&mut rng, n);
        let values: BTreeMap<Partition, Rational> =
            nodes.iter().map(|mu| (mu.clone(), random_rational(&mut rng))).collect();
        let (direct, recursive) = (
            interpolate(n, d, &values, &rho)?,
            interpolate_recursive(n, d, &values, &rho)?,
        );
        if direct != recursive {
            return Ok(Some(
                json!({"trial": trial, "direct": direct.to_string(), "recursive": recursive.to_string()}),
            ));
        }
    }
    let rho = RhoVector::r_delta(r, n);
    let basis = interpolation_basis(n, d, &rho)?;
    let items: Vec<Outcome> = basis
        .par_iter()
        .map(|(lambda, p)| {
            let nodes = enumerate_upto(n, lambda.size());
            let values: BTreeMap<Partition, F> = nodes
                .iter()
                .map(|mu| (mu.clone(), p.evaluate(&rho.point(mu))))
                .collect();
            let recursive = interpolate_recursive(n, lambda.size(), &values, &rho)?;
            Ok((recursive != *p).then(|| poly_witness(lambda, &recursive, p)))
        })
        .collect();
    first_failure(items)
}

fn conjecture(n: usize, d: u32) -> Outcome {
    let shifted = interpolation_basis(n, d, &symbolic_rho(n))?;
    for (lambda, p) in &shifted {
        let report = conjecture_from(lambda, &shifted_j_from(lambda, p));
        if !report.passes() {
            return Ok(Some(report.to_json()));
        }
    }
    Ok(None)
}

fn degree_bound<F: Field>(n: usize, d: u32, r: F) -> Outcome {
    let ops = DifferenceOperators::new(n, r);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let basis = enumerate_upto(n, d);
    for _ in 0..5 {
        let mut terms = Vec::new();
        for mu in &basis {
            if rng.gen_bool(0.7) {
                terms.push((mu.clone(), F::from_rational(&random_rational(&mut rng))));
            }
        }
        let f = MSymPoly::from_terms(n, terms);
        let bound = f.degree().unwrap_or(0);
        for (k, part) in ops.apply_d(&f)?.iter().enumerate() {
            if part.degree().is_some_and(|e| e > bound) {
                return Ok(Some(
                    json!({"f": f.to_string(), "t_power": k, "degree": part.degree(), "bound": bound}),
                ));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, d: u32, r: RMode) -> CheckConfig {
        CheckConfig::new(n, d, r).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn refuses_non_dominant() {
        let r = Rational::new((-1).into(), 2.into());
        assert!(matches!(
            CheckConfig::new(3, 2, RMode::Value(r)),
            Err(Error::NonDominantR { .. })
        ));
    }

    #[test]
    fn small_suites_pass() {
        let half = RMode::Value(Rational::new(1.into(), 2.into()));
        for c in Check::ALL {
            let report = run_check(c, &cfg(2, 2, half.clone())).unwrap();
            assert!(report.passed(), "{}", report.to_json());
            let report = run_check(c, &cfg(2, 2, RMode::Symbolic)).unwrap();
            assert!(report.passed(), "{}", report.to_json());
        }
    }

    #[test]
    fn report_shape() {
        let report = run_check(Check::Cutoff, &cfg(2, 1, RMode::Symbolic)).unwrap();
        assert_eq!(
            report.to_json(),
            json!({"check": "cutoff", "params": {"n": 2, "dmax": 1, "r": "symbolic"}, "status": "pass"})
        );
    }
}
