//! Runs the verification suites from code and prints the report.
//!
//! cargo run --example verify_suites -- 3 2 2

use padic_kas::verify::{replay, run_verify, RunConfig, Suite};

fn main() -> padic_kas::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("arguments are p n K"))
        .collect();
    let (p, n, k) = match args[..] {
        [p, n, k] => (p as u32, n, k),
        _ => (2, 2, 3),
    };
    let config = RunConfig::new(p, n, k).with_samples(2_000).seed_from_env()?;
    let report = run_verify(&config)?;
    for check in &report.checks {
        println!("{check}");
    }
    println!("{} cases in {:.2?}", report.cases(), report.wall_time);

    for check in report.checks.iter().filter(|c| !c.passed()) {
        let cx = &check.failures[0];
        println!(
            "{}: {} for {:?} ({} vs {}), replays: {}",
            check.check,
            cx.relation,
            cx.inputs,
            cx.lhs,
            cx.rhs,
            replay(&config, &check.check, cx)?
        );
    }

    let sound = config.with_suites(vec![Suite::RealSuperposition, Suite::Refinement]);
    println!("superposition suites alone pass: {}", run_verify(&sound)?.passed());
    Ok(())
}
