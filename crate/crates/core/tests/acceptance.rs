//! End-to-end acceptance criteria, one line of output each.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::One;
use shifted_symfun::checks::{run_check, Check, CheckConfig, RMode};
use shifted_symfun::jack::{jack_p, pieri_verify, JackTable};
use shifted_symfun::partitions::Partition;
use shifted_symfun::scalars::{Field, Param, RatFunc, Rational};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn r_modes() -> Vec<RMode> {
    vec![
        RMode::Symbolic,
        RMode::Value(q(1, 1)),
        RMode::Value(q(2, 1)),
        RMode::Value(q(1, 2)),
        RMode::Value(q(5, 3)),
    ]
}

/// Runs `check` for every `n` in `ns` and every mode, failing on the first witness.
fn suite(check: Check, ns: std::ops::RangeInclusive<usize>, dmax: u32, modes: &[RMode]) -> Result<String, String> {
    let mut runs = 0;
    for n in ns {
        for mode in modes {
            let cfg = CheckConfig::new(n, dmax, mode.clone()).map_err(|e| e.to_string())?;
            let report = run_check(check, &cfg).map_err(|e| format!("{check} n={n} r={mode}: {e}"))?;
            if !report.passed() {
                return Err(report.to_json().to_string());
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} runs"))
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn pieri_golden() -> Result<String, String> {
    let alpha = RatFunc::param(Param::Alpha);
    let coefficient = RatFunc::from_int(2) * &alpha / (alpha.clone() + &RatFunc::one());
    let table = JackTable::from_shifted(2, 2).map_err(|e| e.to_string())?;
    let check = pieri_verify(&p(&[1, 0]), 1, &table).map_err(|e| e.to_string())?;
    let p2 = jack_p(&p(&[2, 0])).map_err(|e| e.to_string())?;
    let p11 = jack_p(&p(&[1, 1])).map_err(|e| e.to_string())?;
    let rhs = p2.add(&p11.scale(&coefficient));
    if check.lhs != rhs {
        return Err(format!("e1 P(1) = {} but expected {rhs}", check.lhs));
    }
    if !check.passes() {
        return Err(format!("Pieri sum leaves residual {}", check.residual()));
    }
    Ok("e1 P(1) = P(2) + 2α/(α+1) P(1,1)".into())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Box<dyn Fn() -> Result<String, String>>);
    let criteria: Vec<Criterion> = vec![
        (
            "1 vanishing characterization",
            Box::new(|| suite(Check::Vanishing, 1..=3, 5, &r_modes())),
        ),
        (
            "2 unitriangularity and dominance",
            Box::new(|| suite(Check::Unitriangularity, 1..=3, 5, &r_modes())),
        ),
        (
            "3 closed-form agreement",
            Box::new(|| suite(Check::ClosedForms, 1..=3, 5, &r_modes())),
        ),
        (
            "4 eigenvalue theorem",
            Box::new(|| suite(Check::Eigenvalue, 1..=3, 5, &[RMode::Symbolic])),
        ),
        (
            "5 commutativity",
            Box::new(|| suite(Check::Commutativity, 1..=3, 5, &[RMode::Symbolic])),
        ),
        (
            "6 Jack cross-validation",
            Box::new(|| suite(Check::JackCross, 1..=3, 5, &[RMode::Symbolic])),
        ),
        (
            "7 extra vanishing",
            Box::new(|| suite(Check::ExtraVanishing, 1..=3, 5, &r_modes())),
        ),
        (
            "8 Psi factorization",
            Box::new(|| suite(Check::Psi, 1..=3, 4, &[RMode::Symbolic, RMode::Value(q(1, 2))])),
        ),
        (
            "9 Pieri rule",
            Box::new(|| {
                let golden = pieri_golden()?;
                let runs = suite(Check::Pieri, 1..=3, 4, &[RMode::Symbolic])?;
                Ok(format!("{runs}; {golden}"))
            }),
        ),
        (
            "10 conjecture scan",
            Box::new(|| suite(Check::Conjecture, 1..=4, 5, &[RMode::Symbolic])),
        ),
        (
            "11 interpolation uniqueness",
            Box::new(|| suite(Check::Uniqueness, 1..=3, 5, &[RMode::Symbolic, RMode::Value(q(1, 2))])),
        ),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail}, {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL {why}");
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
