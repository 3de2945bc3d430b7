//! Solve for every partial action of a catalogued algebra on the base field,
//! one initial condition at a time.
//!
//! Usage: cargo run --example solve_algebra -- H7

use hopf_partial::catalog::get_algebra;
use hopf_partial::groups::enumerate_subgroups;
use hopf_partial::partial::solve_partial_actions;
use hopf_partial::polysolve::SolveConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Sweedler".to_string());
    let h = get_algebra(&name)?;
    let gl = h.group_likes()?;
    for n in enumerate_subgroups(&gl.group)? {
        let families = solve_partial_actions(&h, &n, &SolveConfig::default())?;
        println!("N = {}: {} families", n.display(&gl.group), families.len());
        for f in &families {
            println!("{}", f.family);
        }
    }
    Ok(())
}
