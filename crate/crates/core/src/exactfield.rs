//! Exact arithmetic in the cyclotomic fields ℚ(ζ_m).
//!
//! An element of ℚ(ζ_m) is a coefficient vector of length φ(m) in the power
//! basis 1, ζ, …, ζ^{φ(m)-1}, reduced modulo the cyclotomic polynomial Φ_m.
//! Rationals are `num_rational::BigRational`, always in lowest terms.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic orders differ: {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("order {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("malformed scalar: {0}")]
    Malformed(String),
}

struct FieldData {
    order: u32,
    /// Φ_m, low degree first, monic.
    phi: Vec<BigInt>,
}

/// A handle on ℚ(ζ_m). Cheap to clone; equal handles have equal order.
#[derive(Clone)]
pub struct CyclotomicField(Arc<FieldData>);

fn registry() -> &'static Mutex<HashMap<u32, CyclotomicField>> {
    static REG: OnceLock<Mutex<HashMap<u32, CyclotomicField>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

fn int_poly_divexact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let f = CyclotomicField::new(d).expect("positive order");
            num = int_poly_divexact(&num, &f.0.phi);
        }
    }
    num
}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Self, FieldError> {
        if order == 0 {
            return Err(FieldError::ZeroOrder);
        }
        if let Some(f) = registry().lock().unwrap().get(&order) {
            return Ok(f.clone());
        }
        let phi = cyclotomic_poly(order);
        let f = CyclotomicField(Arc::new(FieldData { order, phi }));
        registry().lock().unwrap().entry(order).or_insert(f.clone());
        Ok(f)
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// φ(m), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.0.phi.len() - 1
    }

    pub fn zero(&self) -> Cyclo {
        Cyclo { field: self.clone(), coeffs: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(&self) -> Cyclo {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> Cyclo {
        let mut z = self.zero();
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(&self, n: i64) -> Cyclo {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// ζ_m^k for any integer k.
    pub fn root_of_unity(&self, k: i64) -> Cyclo {
        let m = self.order() as i64;
        let e = k.rem_euclid(m) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        self.reduce(poly)
    }

    /// The primitive root ζ_m itself.
    pub fn primitive_root(&self) -> Cyclo {
        self.root_of_unity(1)
    }

    fn reduce(&self, mut poly: Vec<Rational>) -> Cyclo {
        let d = self.degree();
        let phi = &self.0.phi;
        if poly.len() > d {
            for k in (d..poly.len()).rev() {
                let c = std::mem::take(&mut poly[k]);
                if c.is_zero() {
                    continue;
                }
                for i in 0..d {
                    if !phi[i].is_zero() {
                        let t = &c * Rational::from_integer(phi[i].clone());
                        poly[k - d + i] -= t;
                    }
                }
            }
            poly.truncate(d);
        }
        poly.resize(d, Rational::zero());
        Cyclo { field: self.clone(), coeffs: poly }
    }

    /// Build an element from power-basis coefficients (any length; reduced mod Φ_m).
    pub fn from_coeffs(&self, coeffs: Vec<Rational>) -> Cyclo {
        self.reduce(coeffs)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}
impl Eq for CyclotomicField {}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta{})", self.order())
    }
}

/// An element of ℚ(ζ_m).
#[derive(Clone)]
pub struct Cyclo {
    field: CyclotomicField,
    coeffs: Vec<Rational>,
}

impl Cyclo {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }
    pub fn order(&self) -> u32 {
        self.field.order()
    }
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Cyclo) -> Result<(), FieldError> {
        if self.order() != other.order() {
            Err(FieldError::OrderMismatch(self.order(), other.order()))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Cyclo) -> Result<Cyclo, FieldError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }
    pub fn try_sub(&self, other: &Cyclo) -> Result<Cyclo, FieldError> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }
    pub fn try_mul(&self, other: &Cyclo) -> Result<Cyclo, FieldError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }
    pub fn try_div(&self, other: &Cyclo) -> Result<Cyclo, FieldError> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inverse()?))
    }

    fn add_unchecked(&self, other: &Cyclo) -> Cyclo {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclo { field: self.field.clone(), coeffs }
    }
    fn sub_unchecked(&self, other: &Cyclo) -> Cyclo {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Cyclo { field: self.field.clone(), coeffs }
    }
    fn mul_unchecked(&self, other: &Cyclo) -> Cyclo {
        let d = self.coeffs.len();
        if d == 1 {
            return Cyclo { field: self.field.clone(), coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] };
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce(prod)
    }

    pub fn scale(&self, r: &Rational) -> Cyclo {
        Cyclo { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse, by solving the linear system of multiplication-by-self.
    pub fn inverse(&self) -> Result<Cyclo, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let d = self.coeffs.len();
        if d == 1 {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        // column j of the matrix is self * ζ^j
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        let zeta = self.field.primitive_root();
        for _ in 0..d {
            cols.push(cur.coeffs.clone());
            cur = cur.mul_unchecked(&zeta);
        }
        // augmented rows
        let mut rows: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut r: Vec<Rational> = (0..d).map(|j| cols[j][i].clone()).collect();
                r.push(if i == 0 { Rational::one() } else { Rational::zero() });
                r
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !rows[r][c].is_zero()).ok_or(FieldError::DivisionByZero)?;
            rows.swap(c, p);
            let inv = rows[c][c].recip();
            for x in rows[c].iter_mut() {
                *x *= &inv;
            }
            for r in 0..d {
                if r != c && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    for k in c..=d {
                        let t = &f * &rows[c][k];
                        rows[r][k] -= t;
                    }
                }
            }
        }
        Ok(Cyclo { field: self.field.clone(), coeffs: rows.into_iter().map(|r| r[d].clone()).collect() })
    }

    pub fn pow(&self, e: i64) -> Result<Cyclo, FieldError> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Image under ℚ(ζ_m) → ℚ(ζ_M), ζ_m ↦ ζ_M^{M/m}.
    pub fn embed(&self, target: &CyclotomicField) -> Result<Cyclo, FieldError> {
        let m = self.order();
        let big = target.order();
        if !big.is_multiple_of(m) {
            return Err(FieldError::NotDivisible { from: m, to: big });
        }
        if big == m {
            return Ok(self.clone());
        }
        let step = (big / m) as usize;
        let mut poly = vec![Rational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(target.reduce(poly))
    }

    /// Floating-point value, for diagnostics only.
    pub fn approx_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let m = self.order() as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / m;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                assert_eq!(self.order(), rhs.order(), "cyclotomic order mismatch");
                self.$inner(rhs)
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add, add, add_unchecked);
binop!(Sub, sub, sub_unchecked);
binop!(Mul, mul, mul_unchecked);

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}
impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

/// Name used for ζ_m in text: `zeta8^3`.
pub fn zeta_name(order: u32) -> String {
    format!("zeta{order}")
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = zeta_name(self.order());
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "{z}")?;
                    } else {
                        write!(f, "{z}^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr { order: self.order(), coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = CycloRepr::deserialize(d)?;
        let field = CyclotomicField::new(r.order).map_err(D::Error::custom)?;
        if r.coeffs.len() != field.degree() {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for order {}, got {}",
                field.degree(),
                r.order,
                r.coeffs.len()
            )));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cyclo { field, coeffs })
    }
}

/// Parse `p` or `p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Malformed(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(FieldError::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// lcm of two orders.
pub fn lcm_order(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Multiplicative order of a root of unity, if the element is one.
pub fn root_order(x: &Cyclo) -> Option<u32> {
    let m = x.order();
    let one = x.field().one();
    let mut cur = x.clone();
    for k in 1..=(2 * m) {
        if cur == one {
            return Some(k);
        }
        cur = &cur * x;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(m: u32) -> CyclotomicField {
        CyclotomicField::new(m).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let show = |m| q(m).0.phi.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(show(1), "-1,1");
        assert_eq!(show(2), "1,1");
        assert_eq!(show(4), "1,0,1");
        assert_eq!(show(6), "1,-1,1");
        assert_eq!(show(8), "1,0,0,0,1");
        assert_eq!(show(12), "1,0,-1,0,1");
    }

    #[test]
    fn third_roots() {
        let f = q(3);
        let z = f.primitive_root();
        let a = &f.one() + &z;
        let b = &f.one() + &(&z * &z);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn eighth_root_fourth_power() {
        let f = q(8);
        assert_eq!(f.primitive_root().pow(4).unwrap(), -f.one());
    }

    #[test]
    fn embedding_sends_zeta_to_power() {
        let z3 = q(3).primitive_root();
        assert_eq!(z3.embed(&q(12)).unwrap(), q(12).root_of_unity(4));
        assert!(matches!(z3.embed(&q(8)), Err(FieldError::NotDivisible { .. })));
    }

    #[test]
    fn errors() {
        let f = q(4);
        assert_eq!(f.zero().inverse().unwrap_err(), FieldError::DivisionByZero);
        assert!(matches!(f.one().try_add(&q(3).one()), Err(FieldError::OrderMismatch(4, 3))));
    }

    #[test]
    fn json_round_trip() {
        let f = q(8);
        let x = &f.from_rational(Rational::new(1.into(), 2.into())) + &f.root_of_unity(3);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"order":8,"coeffs":["1/2","0","0","1"]}"#);
        let y: Cyclo = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn display() {
        let f = q(4);
        let x = &f.from_int(-2) + &f.primitive_root();
        assert_eq!(x.to_string(), "-2 + zeta4");
        assert_eq!((-f.primitive_root()).to_string(), "-zeta4");
    }

}
