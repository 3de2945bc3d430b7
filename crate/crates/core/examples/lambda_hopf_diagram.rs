//! Check every arrow H --λ--> L of the reduction diagram: the tabulated λ,
//! specialized at its default point, deforms H onto a copy of L.
//! Also runs the Taft computation (T_n^k)_λ ≅ T_n.

use hopf_partial::catalog::{diagram_edges, TAFT_PARAMETERS};
use hopf_partial::smash::{taft_witness, verify_edge};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut failures = 0;
    for edge in diagram_edges()? {
        let r = verify_edge(&edge)?;
        let mark = if r.verified { "ok" } else { "FAIL" };
        println!("{:6} N = {{{}}} -> {:6} dim {:2}  {mark}", edge.source, edge.subgroup.join(","), edge.target, r.dim);
        if let Some(e) = &r.error {
            println!("    {e}");
        }
        failures += usize::from(!r.verified);
    }
    for (n, k) in TAFT_PARAMETERS.into_iter().filter(|&(_, k)| k > 1) {
        match taft_witness(n, k) {
            Ok((s, _)) => println!("T_{n}^{k} -> T_{n}  dim {}  ok", s.dim()),
            Err(e) => {
                println!("T_{n}^{k} -> T_{n}  FAIL: {e}");
                failures += 1;
            }
        }
    }
    std::process::exit(i32::from(failures > 0));
}
