//! Deform Sweedler's algebra by λ_α: H_λ is two-dimensional, equals the
//! partial smash product, and is not a Hopf subalgebra.

use hopf_partial::catalog::get_algebra;
use hopf_partial::partial::PartialAction;
use hopf_partial::smash::{check_carac, check_coproduct_closure, check_skew_corollaries, compute_h_lambda, smash_product};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = get_algebra("Sweedler")?;
    let f = h.field().clone();
    for alpha in [0, 1, 5] {
        let a = f.from_int(alpha);
        let lambda = PartialAction::new(&h, vec![f.one(), f.zero(), a.clone(), a])?;
        let s = compute_h_lambda(&h, &lambda)?;
        println!("α = {alpha}: H_λ = span{{{}}}", s.labels(&h).join(", "));
        let smash = smash_product(&h, &lambda)?;
        println!("  ⟨k#H⟩ has dim {} with unit {:?}", smash.dim, smash.unit);
        let carac = check_carac(&h, &lambda);
        if let Some(w) = &carac.witness {
            println!("  λ(h₁)h₂ ≠ λ(h₁)h₂λ(h₃) at {}: {} vs {}", w.element, w.lhs, w.rhs);
        }
        println!("  Δ(H_λ) ⊆ H_λ ⊗ H_λ: {}", check_coproduct_closure(&h, &s));
        println!("  skew-primitives forcing this: {}", check_skew_corollaries(&h, &lambda).instances.len());
    }
    Ok(())
}
