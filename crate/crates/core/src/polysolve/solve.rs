//! From polynomial systems to parametric solution families.
//!
//! Strategy per branch: eliminate any unknown that occurs in exactly one term,
//! linearly and with a constant coefficient; compute a Gröbner basis; if some
//! basis element factors as `u·q` with `u` an unknown and neither factor in
//! the ideal, split into `u = 0` and `q = 0`. Leaves become families whose
//! surviving unknowns are the parameters.

use serde::{Deserialize, Serialize};

use super::groebner::{groebner, ideal_contains, is_unit_ideal, normal_form};
use super::poly::{MonomialOrder, MultiPoly, PolyRing, Ring};
use super::{parse_poly, PolyError};
use crate::exactfield::{Cyclo, CyclotomicField, Rational};

pub const DEFAULT_SPLIT_BUDGET: usize = 1 << 16;

pub const PARAMETER_NAMES: [&str; 12] =
    ["alpha", "beta", "theta", "gamma", "omega", "delta", "sigma", "kappa", "mu", "nu", "rho", "tau"];

fn parameter_name(i: usize) -> String {
    PARAMETER_NAMES.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("t{i}"))
}

#[derive(Clone, Debug)]
pub struct SolveConfig {
    pub split_budget: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { split_budget: DEFAULT_SPLIT_BUDGET }
    }
}

/// A parametric family of solutions: every unknown is a polynomial in the
/// parameters, and the parameters satisfy the constraint ideal.
#[derive(Clone, Debug)]
pub struct SolutionFamily {
    unknowns: Vec<String>,
    params: Ring,
    assignments: Vec<MultiPoly>,
    constraints: Vec<MultiPoly>,
}

impl SolutionFamily {
    /// Build a family; the constraints are replaced by their reduced Gröbner basis.
    pub fn new(unknowns: Vec<String>, params: Ring, assignments: Vec<MultiPoly>, constraints: Vec<MultiPoly>) -> Self {
        assert_eq!(unknowns.len(), assignments.len());
        let constraints = groebner(&constraints);
        SolutionFamily { unknowns, params, assignments, constraints }
    }
    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }
    pub fn param_ring(&self) -> &Ring {
        &self.params
    }
    pub fn parameters(&self) -> &[String] {
        self.params.vars()
    }
    pub fn assignments(&self) -> &[MultiPoly] {
        &self.assignments
    }
    pub fn assignment(&self, unknown: &str) -> Option<&MultiPoly> {
        self.unknowns.iter().position(|u| u == unknown).map(|i| &self.assignments[i])
    }
    pub fn constraints(&self) -> &[MultiPoly] {
        &self.constraints
    }
    pub fn field(&self) -> &CyclotomicField {
        self.params.field()
    }
    pub fn is_empty_variety(&self) -> bool {
        is_unit_ideal(&self.constraints)
    }

    /// Substitute the family into a polynomial over (a superset of) its unknowns.
    /// Variables of `p` that are not unknowns of the family are an error.
    pub fn substitute(&self, p: &MultiPoly) -> Result<MultiPoly, PolyError> {
        let images = p
            .ring()
            .vars()
            .iter()
            .map(|v| {
                self.unknowns
                    .iter()
                    .position(|u| u == v)
                    .map(|i| self.assignments[i].clone())
                    .ok_or(PolyError::RingMismatch)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(p.compose(&self.params, &images))
    }

    /// True if every equation vanishes on the family.
    pub fn satisfies(&self, system: &[MultiPoly]) -> Result<bool, PolyError> {
        for eq in system {
            let s = self.substitute(eq)?;
            if !ideal_contains(&self.constraints, &s) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Values of all unknowns at a parameter point.
    pub fn specialize(&self, point: &[Cyclo]) -> Vec<Cyclo> {
        self.assignments.iter().map(|a| a.evaluate(point)).collect()
    }

    pub fn point_satisfies_constraints(&self, point: &[Cyclo]) -> bool {
        self.constraints.iter().all(|c| c.evaluate(point).is_zero())
    }

    /// Ideal of the family's Zariski closure in `target` (whose variables are
    /// the unknowns, in any order), obtained by eliminating the parameters.
    pub fn implicit_ideal(&self, target: &Ring) -> Vec<MultiPoly> {
        if self.is_empty_variety() {
            return vec![MultiPoly::one(target)];
        }
        let np = self.params.nvars();
        let mut vars: Vec<String> = self.params.vars().iter().map(|v| format!("__p_{v}")).collect();
        vars.extend(target.vars().iter().cloned());
        let joint = PolyRing::new(target.field().clone(), vars, MonomialOrder::Block(np));
        let pmap: Vec<usize> = (0..np).collect();
        let mut gens: Vec<MultiPoly> = self.constraints.iter().map(|c| c.map_vars(&joint, &pmap)).collect();
        for (i, u) in self.unknowns.iter().enumerate() {
            let t = target.var_index(u).expect("unknown missing from target ring");
            let x = MultiPoly::var(&joint, np + t);
            gens.push(&x - &self.assignments[i].map_vars(&joint, &pmap));
        }
        super::groebner::eliminate(&gens, np, target)
    }

    /// Find a parameter point on the constraint variety. Parameters that no
    /// constraint pins down take `free(i)`; pinned ones are solved in order.
    pub fn sample_point(&self, free: &mut dyn FnMut(usize) -> Cyclo) -> Result<Vec<Cyclo>, PolyError> {
        if self.is_empty_variety() {
            return Err(PolyError::NoSamplePoint);
        }
        let np = self.params.nvars();
        let field = self.field().clone();
        let mut values: Vec<Cyclo> = Vec::with_capacity(np);
        for i in 0..np {
            let images: Vec<MultiPoly> = (0..np)
                .map(|j| {
                    if j < i {
                        MultiPoly::constant(&self.params, values[j].clone())
                    } else {
                        MultiPoly::var(&self.params, j)
                    }
                })
                .collect();
            let mut univariate = Vec::new();
            for c in &self.constraints {
                let s = c.compose(&self.params, &images);
                let sup = s.support();
                if sup.iter().enumerate().all(|(j, &b)| !b || j == i) {
                    if let Some(k) = s.as_constant() {
                        if !k.is_zero() {
                            return Err(PolyError::NoSamplePoint);
                        }
                    } else {
                        univariate.push(s);
                    }
                }
            }
            let v = if univariate.is_empty() {
                free(i)
            } else {
                find_common_root(&univariate, i, &field).ok_or(PolyError::NoSamplePoint)?
            };
            values.push(v);
        }
        if self.point_satisfies_constraints(&values) {
            Ok(values)
        } else {
            Err(PolyError::NoSamplePoint)
        }
    }

    /// The documented default point: free parameters take 1, 2, 3, ….
    pub fn default_point(&self) -> Result<Vec<Cyclo>, PolyError> {
        let field = self.field().clone();
        self.sample_point(&mut |i| field.from_int(i as i64 + 1))
    }

    /// Rename the parameters (same count, same order).
    pub fn rename_parameters(&self, names: &[String]) -> SolutionFamily {
        let ring = PolyRing::new(self.field().clone(), names.to_vec(), self.params.order());
        let id: Vec<usize> = (0..names.len()).collect();
        SolutionFamily {
            unknowns: self.unknowns.clone(),
            assignments: self.assignments.iter().map(|a| a.map_vars(&ring, &id)).collect(),
            constraints: self.constraints.iter().map(|c| c.map_vars(&ring, &id)).collect(),
            params: ring,
        }
    }

    /// Restrict or reorder to the given unknowns.
    pub fn select_unknowns(&self, names: &[String]) -> Option<SolutionFamily> {
        let assignments = names
            .iter()
            .map(|n| self.assignment(n).cloned())
            .collect::<Option<Vec<_>>>()?;
        Some(SolutionFamily {
            unknowns: names.to_vec(),
            params: self.params.clone(),
            assignments,
            constraints: self.constraints.clone(),
        })
    }
}

fn candidate_roots(field: &CyclotomicField) -> Vec<Cyclo> {
    let mut out = vec![field.zero()];
    let mags: Vec<Rational> = [(1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (2, 3)]
        .iter()
        .map(|&(p, q)| Rational::new(p.into(), q.into()))
        .collect();
    for j in 0..field.order() as i64 {
        let z = field.root_of_unity(j);
        for m in &mags {
            out.push(z.scale(m));
        }
    }
    out
}

fn find_common_root(polys: &[MultiPoly], var: usize, field: &CyclotomicField) -> Option<Cyclo> {
    let np = polys[0].ring().nvars();
    let at = |p: &MultiPoly, v: &Cyclo| {
        let mut pt = vec![field.zero(); np];
        pt[var] = v.clone();
        p.evaluate(&pt)
    };
    // a linear member determines the root
    if let Some(lin) = polys.iter().find(|p| p.total_degree() == 1) {
        let c1 = lin.terms().iter().find(|(e, _)| e[var] == 1).map(|(_, c)| c.clone())?;
        let c0 = lin
            .terms()
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| field.zero());
        let root = (-&c0).try_div(&c1).ok()?;
        return polys.iter().all(|p| at(p, &root).is_zero()).then_some(root);
    }
    candidate_roots(field).into_iter().find(|r| polys.iter().all(|p| at(p, r).is_zero()))
}

struct Branch {
    polys: Vec<MultiPoly>,
    subs: Vec<Option<MultiPoly>>,
}

/// Find (poly index, variable) such that the variable occurs in exactly one
/// term of that polynomial, as a bare linear term. Prefers the highest variable.
fn solvable(polys: &[MultiPoly]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None; // (var, nterms, poly)
    for (pi, p) in polys.iter().enumerate() {
        let n = p.ring().nvars();
        let mut count = vec![0usize; n];
        let mut bare = vec![false; n];
        for (e, _) in p.terms() {
            let deg: u32 = e.iter().map(|&x| x as u32).sum();
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    count[v] += 1;
                    if k == 1 && deg == 1 {
                        bare[v] = true;
                    }
                }
            }
        }
        for v in 0..n {
            if count[v] == 1 && bare[v] {
                let cand = (v, p.nterms(), pi);
                best = match best {
                    None => Some(cand),
                    Some(b) if v > b.0 || (v == b.0 && cand.1 < b.1) => Some(cand),
                    keep => keep,
                };
            }
        }
    }
    best.map(|(v, _, pi)| (pi, v))
}

fn normalize(polys: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let mut out: Vec<MultiPoly> = Vec::with_capacity(polys.len());
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let m = p.monic();
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn find_split(gb: &[MultiPoly]) -> Option<(MultiPoly, MultiPoly)> {
    let mut order: Vec<&MultiPoly> = gb.iter().collect();
    order.sort_by_key(|p| (p.total_degree(), p.nterms()));
    for g in order {
        let ring = g.ring();
        for u in 0..ring.nvars() {
            if let Some(q) = g.divide_by_var(u) {
                if q.is_constant() {
                    continue;
                }
                let uv = MultiPoly::var(ring, u);
                if !ideal_contains(gb, &uv) && !ideal_contains(gb, &q) {
                    return Some((uv, q));
                }
            }
        }
    }
    None
}

/// Solve `system` (polynomials in `ring`, whose variables are the unknowns).
/// Families are pairwise distinct and none is contained in another.
pub fn extract_families(ring: &Ring, system: &[MultiPoly], config: &SolveConfig) -> Result<Vec<SolutionFamily>, PolyError> {
    for p in system {
        if !super::poly::same_ring(p.ring(), ring) {
            return Err(PolyError::RingMismatch);
        }
    }
    let n = ring.nvars();
    let mut stack = vec![Branch { polys: system.to_vec(), subs: vec![None; n] }];
    let mut leaves: Vec<(Vec<MultiPoly>, Vec<Option<MultiPoly>>)> = Vec::new();
    let mut visited = 0usize;
    'branches: while let Some(mut b) = stack.pop() {
        visited += 1;
        if visited > config.split_budget {
            return Err(PolyError::SplitBudgetExceeded(config.split_budget));
        }
        loop {
            loop {
                b.polys = normalize(std::mem::take(&mut b.polys));
                if b.polys.iter().any(|p| p.is_constant()) {
                    continue 'branches;
                }
                let Some((pi, v)) = solvable(&b.polys) else { break };
                let p = b.polys[pi].clone();
                let term = p
                    .terms()
                    .iter()
                    .find(|(e, _)| e[v] == 1)
                    .map(|(_, c)| c.clone())
                    .expect("solvable term");
                let lin = MultiPoly::var(ring, v).scale(&term);
                let value = (&lin - &p).scale(&term.inverse().expect("nonzero"));
                b.polys = b.polys.iter().map(|q| q.substitute(v, &value)).collect();
                for s in b.subs.iter_mut().flatten() {
                    *s = s.substitute(v, &value);
                }
                b.subs[v] = Some(value);
            }
            let gb = groebner(&b.polys);
            if is_unit_ideal(&gb) {
                continue 'branches;
            }
            if solvable(&gb).is_some() {
                b.polys = gb;
                continue;
            }
            if let Some((u, q)) = find_split(&gb) {
                let mut with_q = gb.clone();
                with_q.push(q);
                let mut with_u = gb;
                with_u.push(u);
                stack.push(Branch { polys: with_q, subs: b.subs.clone() });
                stack.push(Branch { polys: with_u, subs: b.subs });
                continue 'branches;
            }
            leaves.push((gb, b.subs));
            continue 'branches;
        }
    }

    // implicit ideals in the unknown ring, for dedup and containment
    let ideals: Vec<Vec<MultiPoly>> = leaves
        .iter()
        .map(|(gb, subs)| {
            let mut gens = gb.clone();
            for (v, s) in subs.iter().enumerate() {
                if let Some(s) = s {
                    gens.push(&MultiPoly::var(ring, v) - s);
                }
            }
            groebner(&gens)
        })
        .collect();
    let contained = |small: usize, big: usize| ideals[big].iter().all(|g| normal_form(g, &ideals[small]).is_zero());
    let mut keep = Vec::new();
    for i in 0..leaves.len() {
        let redundant = (0..leaves.len()).any(|j| {
            j != i && contained(i, j) && (!contained(j, i) || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    // deterministic output: sort by number of parameters, then text
    let mut fams: Vec<SolutionFamily> = keep.into_iter().map(|i| leaf_to_family(ring, &leaves[i].0, &leaves[i].1)).collect();
    fams.sort_by_key(|f| (f.parameters().len(), f.to_string()));
    Ok(fams)
}

fn leaf_to_family(ring: &Ring, gb: &[MultiPoly], subs: &[Option<MultiPoly>]) -> SolutionFamily {
    let free: Vec<usize> = (0..ring.nvars()).filter(|&v| subs[v].is_none()).collect();
    let names: Vec<String> = (0..free.len()).map(parameter_name).collect();
    let params = PolyRing::new(ring.field().clone(), names, MonomialOrder::DegRevLex);
    let images: Vec<MultiPoly> = (0..ring.nvars())
        .map(|v| match free.iter().position(|&f| f == v) {
            Some(k) => MultiPoly::var(&params, k),
            None => MultiPoly::zero(&params),
        })
        .collect();
    let assignments = (0..ring.nvars())
        .map(|v| match &subs[v] {
            Some(s) => s.compose(&params, &images),
            None => images[v].clone(),
        })
        .collect();
    let constraints: Vec<MultiPoly> = gb.iter().map(|g| g.compose(&params, &images)).collect();
    SolutionFamily::new(ring.vars().to_vec(), params, assignments, constraints)
}

impl std::fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> =
            self.unknowns.iter().zip(&self.assignments).map(|(u, a)| format!("{u} = {a}")).collect();
        write!(f, "{{{}}}", parts.join(", "))?;
        if !self.constraints.is_empty() {
            let cs: Vec<String> = self.constraints.iter().map(|c| format!("{c} = 0")).collect();
            write!(f, " where {}", cs.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    field_order: u32,
    assignments: serde_json::Map<String, serde_json::Value>,
    parameters: Vec<String>,
    constraints: Vec<String>,
}

impl Serialize for SolutionFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut assignments = serde_json::Map::new();
        for (u, a) in self.unknowns.iter().zip(&self.assignments) {
            assignments.insert(u.clone(), serde_json::Value::String(a.to_string()));
        }
        FamilyRepr {
            field_order: self.field().order(),
            assignments,
            parameters: self.parameters().to_vec(),
            constraints: self.constraints.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SolutionFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = FamilyRepr::deserialize(d)?;
        let field = CyclotomicField::new(r.field_order).map_err(D::Error::custom)?;
        let params = PolyRing::new(field, r.parameters, MonomialOrder::DegRevLex);
        let mut unknowns = Vec::new();
        let mut assignments = Vec::new();
        for (k, v) in r.assignments {
            let s = v.as_str().ok_or_else(|| D::Error::custom("assignment must be a string"))?;
            unknowns.push(k);
            assignments.push(parse_poly(&params, s).map_err(D::Error::custom)?);
        }
        let constraints = r
            .constraints
            .iter()
            .map(|c| parse_poly(&params, c).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SolutionFamily::new(unknowns, params, assignments, constraints))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polysolve::parse_poly;

    fn ring(m: u32, vars: &[&str]) -> Ring {
        PolyRing::new(CyclotomicField::new(m).unwrap(), vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex)
    }

    #[test]
    fn line_and_point_collapse_to_line() {
        // X_gx = X_x and X_gx^2 = X_gx X_x: the point 0 lies on the line.
        let r = ring(1, &["x", "gx"]);
        let sys: Vec<MultiPoly> =
            ["gx - x", "gx*x - gx^2"].iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        let fams = extract_families(&r, &sys, &SolveConfig::default()).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].parameters().len(), 1);
        assert!(fams[0].satisfies(&sys).unwrap());
    }

    #[test]
    fn product_splits() {
        let r = ring(1, &["a", "b", "c"]);
        let sys: Vec<MultiPoly> = ["a*b", "c - a - b"].iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        let fams = extract_families(&r, &sys, &SolveConfig::default()).unwrap();
        assert_eq!(fams.len(), 2);
        for f in &fams {
            assert!(f.satisfies(&sys).unwrap());
        }
    }

    #[test]
    fn inconsistent_system() {
        let r = ring(1, &["a"]);
        let sys = vec![parse_poly(&r, "a").unwrap(), parse_poly(&r, "a - 1").unwrap()];
        assert!(extract_families(&r, &sys, &SolveConfig::default()).unwrap().is_empty());
    }

    #[test]
    fn constrained_parameter_sampling() {
        let r = ring(4, &["a", "b"]);
        let sys = vec![parse_poly(&r, "a^2 + 1").unwrap(), parse_poly(&r, "b - a^3").unwrap()];
        let fams = extract_families(&r, &sys, &SolveConfig::default()).unwrap();
        assert_eq!(fams.len(), 1);
        let pt = fams[0].default_point().unwrap();
        let vals = fams[0].specialize(&pt);
        let i = CyclotomicField::new(4).unwrap().primitive_root();
        assert!(vals[0] == i || vals[0] == -&i);
        assert_eq!(vals[1], &(&vals[0] * &vals[0]) * &vals[0]);
    }

    #[test]
    fn budget() {
        let r = ring(1, &["a", "b", "c", "d"]);
        let sys: Vec<MultiPoly> =
            ["a*b", "c*d", "a*c"].iter().map(|s| parse_poly(&r, s).unwrap()).collect();
        let err = extract_families(&r, &sys, &SolveConfig { split_budget: 2 }).unwrap_err();
        assert_eq!(err, PolyError::SplitBudgetExceeded(2));
    }

    #[test]
    fn json_round_trip() {
        let r = ring(4, &["a", "b"]);
        let sys = vec![parse_poly(&r, "a^2 + 1").unwrap(), parse_poly(&r, "b - zeta4*a").unwrap()];
        let fams = extract_families(&r, &sys, &SolveConfig::default()).unwrap();
        let s = serde_json::to_string(&fams[0]).unwrap();
        let back: SolutionFamily = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_string(), fams[0].to_string());
    }
}
