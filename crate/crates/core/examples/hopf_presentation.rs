//! Build a pointed Hopf algebra from generators and relations, then print its
//! coproduct and check every Hopf axiom.

use hopf_partial::exactfield::CyclotomicField;
use hopf_partial::groups::FiniteGroup;
use hopf_partial::hopfcore::PointedPresentation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A4'': x ∈ P_{1,g}, xg = -gx, x² = g² - 1 over C4
    let h = PointedPresentation::new("A4''", FiniteGroup::cyclic(4, "g")?, CyclotomicField::new(4)?)
        .skew("x", ("1", "g"), &[("g", "-1")], 2, "g^2 - 1")?
        .build()?;
    println!("{} has dimension {}", h.name(), h.dim());
    for i in 0..h.dim() {
        println!("  Δ({}) = {}", h.label(i), h.format_tensor(&h.comultiply(&h.basis_vector(i))));
    }
    let report = h.check_hopf_axioms();
    println!("axioms: {} checked, {} failures", report.checked.len(), report.failures.len());
    Ok(())
}
