//! Every Hopf algebra H is a deformation: (H ⊗ kG) with ε ⊗ λ_{1} gives back H.

use hopf_partial::catalog::get_algebra;
use hopf_partial::groups::FiniteGroup;
use hopf_partial::smash::lambda_hopf_witness_construction;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = FiniteGroup::cyclic(3, "g")?;
    for name in ["Sweedler", "A2", "kC4", "A4'''"] {
        let h = get_algebra(name)?;
        let w = lambda_hopf_witness_construction(&h, &g)?;
        println!(
            "{name}: L = {} of dim {}, dim L_λ = {}, Hopf subalgebra: {}, h ↦ h⊗1 injective: {}",
            w.l.name(),
            w.l.dim(),
            w.h_lambda.dim(),
            w.carac,
            w.morphism.injective
        );
    }
    Ok(())
}
