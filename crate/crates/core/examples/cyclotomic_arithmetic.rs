//! Exact arithmetic in Q(ζ_m): roots of unity, inverses, embeddings.

use hopf_partial::exactfield::CyclotomicField;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q8 = CyclotomicField::new(8)?;
    let zeta = q8.primitive_root();
    println!("ζ8^2 = {}", zeta.pow(2)?);
    println!("ζ8^4 = {}", zeta.pow(4)?);
    let s = &zeta + &zeta.pow(7)?;
    println!("ζ8 + ζ8^-1 = {s}  (√2), squared = {}", &s * &s);
    let a = &q8.from_int(3) + &zeta;
    let inv = a.inverse()?;
    println!("(3 + ζ8)^-1 = {inv}, check: {}", &a * &inv);
    let i4 = CyclotomicField::new(4)?.primitive_root();
    println!("ζ4 inside Q(ζ8): {}", i4.embed(&q8)?);
    Ok(())
}
