//! Polynomial systems over ℚ(ζ_m): normal forms, Gröbner bases, ideal
//! comparison, and extraction of parametric solution families.

mod groebner;
mod poly;
mod solve;

use std::collections::HashMap;

use thiserror::Error;

use crate::exactfield::{Cyclo, CyclotomicField, FieldError};
use crate::expr::{self, Evaluator, Expr, ExprError, Mode};

pub use groebner::{eliminate, groebner, ideal_contains, ideal_equal, intersect, is_unit_ideal, normal_form};
pub use poly::{same_ring, Exponents, MonomialOrder, MultiPoly, PolyRing, Ring};
pub use solve::{extract_families, SolutionFamily, SolveConfig, DEFAULT_SPLIT_BUDGET, PARAMETER_NAMES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("case-split budget of {0} branches exceeded")]
    SplitBudgetExceeded(usize),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("no point found on the family's constraint variety")]
    NoSamplePoint,
}

/// Reduce `f` modulo a Gröbner basis; the result is zero iff `f` is in the ideal.
pub fn poly_normal_form(f: &MultiPoly, gb: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
    if let Some(g) = gb.first() {
        f.check_ring(g)?;
    }
    Ok(normal_form(f, gb))
}

/// Evaluates expressions into a polynomial ring. Identifiers resolve to ring
/// variables, `zetaN` to ζ_N (when N divides the field order), or named constants.
pub struct PolyEvaluator<'a> {
    pub ring: &'a Ring,
    pub constants: &'a HashMap<String, Cyclo>,
}

pub(crate) fn zeta_constant(field: &CyclotomicField, name: &str) -> Option<Cyclo> {
    let n: u32 = name.strip_prefix("zeta")?.parse().ok()?;
    if n == 0 || !field.order().is_multiple_of(n) {
        return None;
    }
    Some(field.root_of_unity((field.order() / n) as i64))
}

impl Evaluator for PolyEvaluator<'_> {
    type Value = MultiPoly;
    fn number(&self, r: &crate::exactfield::Rational) -> Result<MultiPoly, ExprError> {
        Ok(MultiPoly::constant(self.ring, self.ring.field().from_rational(r.clone())))
    }
    fn ident(&self, name: &str) -> Result<MultiPoly, ExprError> {
        if let Some(i) = self.ring.var_index(name) {
            return Ok(MultiPoly::var(self.ring, i));
        }
        if let Some(c) = self.constants.get(name) {
            let c = c.embed(self.ring.field()).map_err(|e| ExprError::Eval(e.to_string()))?;
            return Ok(MultiPoly::constant(self.ring, c));
        }
        if let Some(c) = zeta_constant(self.ring.field(), name) {
            return Ok(MultiPoly::constant(self.ring, c));
        }
        Err(ExprError::Unknown(name.to_string()))
    }
    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, ExprError> {
        Ok(a + b)
    }
    fn neg(&self, a: &MultiPoly) -> Result<MultiPoly, ExprError> {
        Ok(-a)
    }
    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, ExprError> {
        Ok(a * b)
    }
    fn div(&self, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, ExprError> {
        let c = b.as_constant().ok_or_else(|| ExprError::Eval("division by a non-constant".into()))?;
        let inv = c.inverse().map_err(|e| ExprError::Eval(e.to_string()))?;
        Ok(a.scale(&inv))
    }
}

pub fn parse_poly_with(ring: &Ring, src: &str, constants: &HashMap<String, Cyclo>) -> Result<MultiPoly, PolyError> {
    let e: Expr = expr::parse(src, Mode::Symbol)?;
    Ok(PolyEvaluator { ring, constants }.eval(&e)?)
}

/// Parse a polynomial string (the same syntax `Display` produces).
pub fn parse_poly(ring: &Ring, src: &str) -> Result<MultiPoly, PolyError> {
    parse_poly_with(ring, src, &HashMap::new())
}

/// Parse a scalar such as `-1/2`, `zeta4` or `(1 - q)` into ℚ(ζ_m).
pub fn parse_scalar(field: &CyclotomicField, src: &str, constants: &HashMap<String, Cyclo>) -> Result<Cyclo, PolyError> {
    let ring = PolyRing::new(field.clone(), Vec::new(), MonomialOrder::DegRevLex);
    let p = parse_poly_with(&ring, src, constants)?;
    Ok(p.as_constant().expect("no variables"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_round_trip() {
        let f = CyclotomicField::new(8).unwrap();
        let r = PolyRing::new(f, vec!["a".into(), "b".into()], MonomialOrder::DegRevLex);
        let p = parse_poly(&r, "(1/2 + zeta8^3)*a^2*b - 3*b + zeta4 - 1/3").unwrap();
        let s = p.to_string();
        assert_eq!(parse_poly(&r, &s).unwrap(), p);
        assert_eq!(p.nterms(), 3);
    }

    #[test]
    fn scalars() {
        let f = CyclotomicField::new(4).unwrap();
        let mut k = HashMap::new();
        k.insert("q".to_string(), f.primitive_root());
        let s = parse_scalar(&f, "(1 - q)*q", &k).unwrap();
        assert_eq!(s, &f.primitive_root() + &f.one());
    }
}
