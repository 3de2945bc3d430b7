//! Solve a small polynomial system exactly and print its parametric families.

use hopf_partial::exactfield::CyclotomicField;
use hopf_partial::polysolve::{extract_families, groebner, parse_poly, MonomialOrder, PolyRing, SolveConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(CyclotomicField::new(4)?, vec!["a".into(), "b".into(), "c".into()], MonomialOrder::DegRevLex);
    // a is idempotent, b² = -1 when a = 0, c free only when a = 1
    let system = ["a^2 - a", "(a - 1)*(b^2 + 1)", "a*b", "(a - 1)*c"]
        .iter()
        .map(|s| parse_poly(&ring, s))
        .collect::<Result<Vec<_>, _>>()?;
    println!("Gröbner basis:");
    for g in groebner(&system) {
        println!("  {g}");
    }
    println!("families:");
    for f in extract_families(&ring, &system, &SolveConfig::default())? {
        println!("  {f}");
    }
    Ok(())
}
