//! Buchberger's algorithm and the ideal operations built on it.

use std::collections::HashSet;

use super::poly::{MonomialOrder, MultiPoly, PolyRing, Ring};
use super::PolyError;

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn diff(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Fully reduced remainder of `f` modulo `basis` (any order of division).
pub fn normal_form(f: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut rem_terms = Vec::new();
    while let Some((m, c)) = p.leading() {
        let m = m.clone();
        let c = c.clone();
        match basis.iter().find(|g| !g.is_zero() && divides(g.lm(), &m)) {
            Some(g) => {
                let shift = diff(&m, g.lm());
                let k = &c * &g.lc().inverse().expect("nonzero");
                p = p.sub_mul_term(&shift, &k, g);
            }
            None => {
                rem_terms.push((m.clone(), c));
                p = p.tail();
            }
        }
    }
    MultiPoly::from_terms(&ring, rem_terms)
}

fn s_poly(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let l = lcm(f.lm(), g.lm());
    let a = f.mul_term(&diff(&l, f.lm()), &f.lc().inverse().unwrap());
    let b = g.mul_term(&diff(&l, g.lm()), &g.lc().inverse().unwrap());
    &a - &b
}

/// Reduced Gröbner basis (monic, sorted by increasing leading monomial).
/// Returns `[1]` for the unit ideal and `[]` for the zero ideal.
pub fn groebner(polys: &[MultiPoly]) -> Vec<MultiPoly> {
    let Some(first) = polys.first() else { return Vec::new() };
    let ring = first.ring().clone();
    let ord = ring.order();
    let mut g: Vec<MultiPoly> = Vec::new();
    let mut input: Vec<MultiPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    input.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    for p in input {
        let r = normal_form(&p, &g);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![MultiPoly::one(&ring)];
        }
        g.push(r.monic());
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..g.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first
        let (idx, _) = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = lcm(g[a.0].lm(), g[a.1].lm());
                let lb = lcm(g[b.0].lm(), g[b.1].lm());
                ord.cmp(&la, &lb)
            })
            .unwrap();
        let (i, j) = pending.swap_remove(idx);
        let key = (i, j);
        if coprime(g[i].lm(), g[j].lm()) {
            done.insert(key);
            continue;
        }
        let l = lcm(g[i].lm(), g[j].lm());
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && divides(g[k].lm(), &l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        done.insert(key);
        if chain {
            continue;
        }
        let r = normal_form(&s_poly(&g[i], &g[j]), &g);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![MultiPoly::one(&ring)];
        }
        let n = g.len();
        g.push(r.monic());
        for k in 0..n {
            pending.push((k, n));
        }
    }
    reduce_basis(g)
}

fn reduce_basis(g: Vec<MultiPoly>) -> Vec<MultiPoly> {
    if g.is_empty() {
        return g;
    }
    let ord = g[0].ring().order();
    // minimal basis
    let mut keep: Vec<MultiPoly> = Vec::new();
    let mut sorted = g;
    sorted.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    for p in sorted {
        if !keep.iter().any(|q| divides(q.lm(), p.lm())) {
            keep.push(p);
        }
    }
    // interreduce
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<MultiPoly> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
        let lead = MultiPoly::monomial(keep[i].ring(), keep[i].lm().clone(), keep[i].lc().clone());
        let r = &lead + &normal_form(&keep[i].tail(), &others);
        out.push(r.monic());
    }
    out.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    out
}

pub fn is_unit_ideal(gb: &[MultiPoly]) -> bool {
    gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero()
}

pub fn ideal_contains(gb: &[MultiPoly], f: &MultiPoly) -> bool {
    normal_form(f, gb).is_zero()
}

/// Equality of the ideals generated by `a` and `b`.
pub fn ideal_equal(a: &[MultiPoly], b: &[MultiPoly]) -> Result<bool, PolyError> {
    if let (Some(x), Some(y)) = (a.first(), b.first()) {
        x.check_ring(y)?;
    }
    let ga = groebner(a);
    let gb = groebner(b);
    Ok(ga == gb)
}

/// Eliminate the first `k` variables of `polys`' ring; result lives in `target`,
/// whose variables must be the remaining ones in the same order.
pub fn eliminate(polys: &[MultiPoly], k: usize, target: &Ring) -> Vec<MultiPoly> {
    let Some(first) = polys.first() else { return Vec::new() };
    let src = first.ring();
    let n = src.nvars();
    assert_eq!(target.nvars(), n - k);
    let block = PolyRing::new(src.field().clone(), src.vars().to_vec(), MonomialOrder::Block(k));
    let ident: Vec<usize> = (0..n).collect();
    let mapped: Vec<MultiPoly> = polys.iter().map(|p| p.map_vars(&block, &ident)).collect();
    let gb = groebner(&mapped);
    let mut back = vec![0usize; n];
    for (i, b) in back.iter_mut().enumerate().skip(k) {
        *b = i - k;
    }
    let kept: Vec<MultiPoly> = gb
        .iter()
        .filter(|p| p.support()[..k].iter().all(|s| !s))
        .map(|p| p.map_vars(target, &back))
        .collect();
    groebner(&kept)
}

/// Generators of I ∩ J, both given in the same ring.
pub fn intersect(i: &[MultiPoly], j: &[MultiPoly], ring: &Ring) -> Vec<MultiPoly> {
    if i.is_empty() || j.is_empty() {
        return Vec::new();
    }
    let mut vars = vec!["__t".to_string()];
    vars.extend(ring.vars().iter().cloned());
    let ext = PolyRing::new(ring.field().clone(), vars, MonomialOrder::Block(1));
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let t = MultiPoly::var(&ext, 0);
    let one_minus_t = &MultiPoly::one(&ext) - &t;
    let mut gens = Vec::new();
    for p in i {
        gens.push(&t * &p.map_vars(&ext, &shift));
    }
    for p in j {
        gens.push(&one_minus_t * &p.map_vars(&ext, &shift));
    }
    eliminate(&gens, 1, ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::CyclotomicField;
    use crate::polysolve::parse_poly;

    fn ring(vars: &[&str]) -> Ring {
        PolyRing::new(
            CyclotomicField::new(1).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
    }

    fn polys(r: &Ring, src: &[&str]) -> Vec<MultiPoly> {
        src.iter().map(|s| parse_poly(r, s).unwrap()).collect()
    }

    #[test]
    fn textbook_basis() {
        // Cox–Little–O'Shea: x^3 - 2xy, x^2 y - 2y^2 + x under grlex-like orders
        let r = ring(&["x", "y"]);
        let g = groebner(&polys(&r, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]));
        let expect = groebner(&polys(&r, &["x^2", "x*y", "y^2 - 1/2*x"]));
        assert_eq!(g, expect);
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn unit_and_membership() {
        let r = ring(&["a", "b"]);
        let g = groebner(&polys(&r, &["a*b - 1", "a"]));
        assert!(is_unit_ideal(&g));
        let g = groebner(&polys(&r, &["a^2 - b", "b - 1"]));
        assert!(ideal_contains(&g, &parse_poly(&r, "a^4 - 1").unwrap()));
        assert!(!ideal_contains(&g, &parse_poly(&r, "a - 1").unwrap()));
    }

    #[test]
    fn intersection_of_axes() {
        let r = ring(&["u", "v"]);
        let i = intersect(&polys(&r, &["u"]), &polys(&r, &["v"]), &r);
        assert!(ideal_equal(&i, &polys(&r, &["u*v"])).unwrap());
    }

    #[test]
    fn implicitization() {
        let full = ring(&["t", "x", "y"]);
        let target = ring(&["x", "y"]);
        let e = eliminate(&polys(&full, &["x - t", "y - t^2"]), 1, &target);
        assert!(ideal_equal(&e, &polys(&target, &["y - x^2"])).unwrap());
    }
}
