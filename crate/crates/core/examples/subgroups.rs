//! Subgroup lattices and the partial actions λ_N of group algebras.

use hopf_partial::catalog::get_algebra;
use hopf_partial::groups::{enumerate_subgroups, lambda_n};
use hopf_partial::partial::is_partial_action;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["kC4", "kC2xC2", "kS3", "kQ8"] {
        let h = get_algebra(name)?;
        let g = h.group_likes()?.group;
        let subs = enumerate_subgroups(&g)?;
        println!("{name}: {} subgroups", subs.len());
        for n in &subs {
            let ok = is_partial_action(&h, &lambda_n(&g, n, h.field()));
            println!("  λ_{} is a partial action: {ok}", n.display(&g));
        }
    }
    Ok(())
}
