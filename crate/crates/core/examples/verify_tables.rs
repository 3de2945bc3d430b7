//! Solve every catalogued algebra and compare with the tabulated families.
//!
//! Usage: cargo run --release --example verify_tables [NAME...]

use std::time::Instant;

use hopf_partial::catalog::{get_algebra, load_table, table_algebras, verify_table};
use hopf_partial::polysolve::SolveConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<String> = if args.is_empty() { table_algebras().iter().map(|s| s.to_string()).collect() } else { args };
    let mut failures = 0;
    for name in &names {
        let start = Instant::now();
        let h = get_algebra(name)?;
        let report = verify_table(&h, &load_table(name)?, &SolveConfig::default())?;
        let verdict = if report.passed() { "ok" } else { "MISMATCH" };
        println!("{name:8} dim {:2}  {verdict}  ({:.1}s)", h.dim(), start.elapsed().as_secs_f64());
        for c in report.comparisons.iter().filter(|c| !c.agree) {
            println!("    {}: solver {} families, table {} rows", c.subgroup, c.solver_families, c.table_rows);
        }
        for r in &report.invalid_rows {
            println!("    row {r} is not a partial action");
        }
        failures += usize::from(!report.passed());
    }
    std::process::exit(i32::from(failures > 0));
}
