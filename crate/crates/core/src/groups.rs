//! Finite groups as multiplication tables, their subgroups, group algebras
//! kG, dual group algebras (kG)*, and the partial actions λ_N and λ^N.

use std::collections::{BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::exactfield::{Cyclo, CyclotomicField, Rational};
use crate::expr::{self, Expr, Mode};
use crate::hopfcore::{HopfAlgebra, HopfError, StructureData, Vector};

pub const SUBGROUP_ENUMERATION_BOUND: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("group of order {0} exceeds the enumeration bound")]
    TooLarge(usize),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("cannot read `{0}` as a group element")]
    BadWord(String),
    #[error("elements {0:?} do not form a subgroup")]
    NotSubgroup(Vec<String>),
}

/// A finite group given by its Cayley table. Element 0 need not be the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<(String, usize)>,
    /// Each element as a word in the generators (indices into `generators`).
    words: Vec<Vec<usize>>,
}

pub type GroupElem = usize;

fn compact_label(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&names[word[i]]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

impl FiniteGroup {
    /// Validate a Cayley table and attach generators (named elements).
    pub fn from_table(
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
        generators: Vec<(String, usize)>,
    ) -> Result<Self, GroupError> {
        let n = labels.len();
        let bad = |m: &str| GroupError::InvalidTable(m.to_string());
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("table shape"));
        }
        let identity = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)).ok_or_else(|| bad("no identity"))?;
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n).find(|&b| table[a][b] == identity).ok_or_else(|| bad("missing inverse"))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        // words by breadth-first search over the generators
        let mut words: Vec<Option<Vec<usize>>> = vec![None; n];
        words[identity] = Some(Vec::new());
        let mut queue = VecDeque::from([identity]);
        while let Some(a) = queue.pop_front() {
            for (gi, (_, g)) in generators.iter().enumerate() {
                let b = table[a][*g];
                if words[b].is_none() {
                    let mut w = words[a].clone().unwrap();
                    w.push(gi);
                    words[b] = Some(w);
                    queue.push_back(b);
                }
            }
        }
        let words: Vec<Vec<usize>> =
            words.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| bad("generators do not generate"))?;
        Ok(FiniteGroup { labels, table, identity, inverses, generators, words })
    }

    /// Table whose labels are compact words in the given generators.
    fn from_table_relabel(table: Vec<Vec<usize>>, generators: Vec<(String, usize)>) -> Result<Self, GroupError> {
        let n = table.len();
        let tmp = FiniteGroup::from_table((0..n).map(|i| i.to_string()).collect(), table, generators)?;
        let names: Vec<String> = tmp.generators.iter().map(|(s, _)| s.clone()).collect();
        let labels = tmp.words.iter().map(|w| compact_label(w, &names)).collect();
        Ok(FiniteGroup { labels, ..tmp })
    }

    /// C_{n1} × C_{n2} × …, generators named by `names`; the first factor varies fastest.
    pub fn abelian(orders: &[u32], names: &[&str]) -> Result<Self, GroupError> {
        assert_eq!(orders.len(), names.len());
        let n: usize = orders.iter().map(|&o| o as usize).product();
        let digits = |mut i: usize| -> Vec<usize> {
            orders
                .iter()
                .map(|&o| {
                    let d = i % o as usize;
                    i /= o as usize;
                    d
                })
                .collect()
        };
        let index = |d: &[usize]| -> usize {
            let mut i = 0;
            for (k, &o) in orders.iter().enumerate().rev() {
                i = i * o as usize + d[k];
            }
            i
        };
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let db = digits(b);
                        let s: Vec<usize> =
                            da.iter().zip(&db).zip(orders).map(|((x, y), &o)| (x + y) % o as usize).collect();
                        index(&s)
                    })
                    .collect()
            })
            .collect();
        let generators = names
            .iter()
            .enumerate()
            .filter(|(k, _)| orders[*k] > 1)
            .map(|(k, s)| {
                let mut d = vec![0; orders.len()];
                d[k] = 1;
                (s.to_string(), index(&d))
            })
            .collect();
        let labels: Vec<String> = (0..n)
            .map(|i| {
                let d = digits(i);
                let mut s = String::new();
                for (k, &e) in d.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(names[k]),
                        _ => s.push_str(&format!("{}^{}", names[k], e)),
                    }
                }
                if s.is_empty() {
                    "1".into()
                } else {
                    s
                }
            })
            .collect();
        let g = FiniteGroup::from_table(labels.clone(), table, generators)?;
        // keep the canonical digit words so that labels and words agree
        let words = (0..n)
            .map(|i| {
                let d = digits(i);
                let mut w = Vec::new();
                let mut gi = 0;
                for (k, &e) in d.iter().enumerate() {
                    if orders[k] > 1 {
                        w.extend(std::iter::repeat_n(gi, e));
                        gi += 1;
                    }
                }
                w
            })
            .collect();
        Ok(FiniteGroup { words, labels, ..g })
    }

    pub fn cyclic(n: u32, name: &str) -> Result<Self, GroupError> {
        Self::abelian(&[n], &[name])
    }

    /// Group generated by permutations of {0, …, k-1}.
    pub fn from_permutations(perms: &[(&str, Vec<usize>)]) -> Result<Self, GroupError> {
        let k = perms[0].1.len();
        let id: Vec<usize> = (0..k).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..k).map(|i| p[q[i]]).collect() }; // p∘q
        let mut elems: Vec<Vec<usize>> = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for (_, g) in perms {
                // right multiplication: elems[i] · g, acting as "first g then elems[i]"
                let c = compose(&elems[i], g);
                if !index.contains_key(&c) {
                    index.insert(c.clone(), elems.len());
                    elems.push(c);
                }
            }
            i += 1;
        }
        let table: Vec<Vec<usize>> =
            elems.iter().map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect()).collect();
        let generators = perms.iter().map(|(s, p)| (s.to_string(), index[p])).collect();
        Self::from_table_relabel(table, generators)
    }

    /// Named groups: `C<n>`, `C<a>xC<b>`, `C2xC2xC2` (or `C2^3`), `S3`, `D4`, `Q8`.
    pub fn named(name: &str) -> Result<Self, GroupError> {
        let unknown = || GroupError::UnknownGroup(name.to_string());
        match name {
            "S3" => Self::from_permutations(&[("r", vec![1, 2, 0]), ("s", vec![1, 0, 2])]),
            "D4" => Self::from_permutations(&[("r", vec![1, 2, 3, 0]), ("s", vec![0, 3, 2, 1])]),
            "Q8" => Self::quaternion(),
            "C2^3" | "C2xC2xC2" => Self::abelian(&[2, 2, 2], &["a", "b", "c"]),
            _ => {
                let parts: Vec<&str> = name.split('x').collect();
                let orders = parts
                    .iter()
                    .map(|p| p.strip_prefix('C').and_then(|n| n.parse::<u32>().ok()).filter(|&n| n > 0))
                    .collect::<Option<Vec<u32>>>()
                    .ok_or_else(unknown)?;
                let names = ["g", "h", "k"];
                if orders.len() > names.len() {
                    return Err(unknown());
                }
                Self::abelian(&orders, &names[..orders.len()])
            }
        }
    }

    fn quaternion() -> Result<Self, GroupError> {
        // elements (sign, unit) with unit 0..4 = 1, i, j, k; index = unit + 4·sign
        let unit_mul = |a: usize, b: usize| -> (bool, usize) {
            const T: [[(bool, usize); 4]; 4] = [
                [(false, 0), (false, 1), (false, 2), (false, 3)],
                [(false, 1), (true, 0), (false, 3), (true, 2)],
                [(false, 2), (true, 3), (true, 0), (false, 1)],
                [(false, 3), (false, 2), (true, 1), (true, 0)],
            ];
            T[a][b]
        };
        let table: Vec<Vec<usize>> = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (s, u) = unit_mul(x % 4, y % 4);
                        let neg = s ^ (x >= 4) ^ (y >= 4);
                        u + if neg { 4 } else { 0 }
                    })
                    .collect()
            })
            .collect();
        Self::from_table_relabel(table, vec![("i".into(), 1), ("j".into(), 2)])
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }
    pub fn identity(&self) -> GroupElem {
        self.identity
    }
    pub fn mul(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        self.table[a][b]
    }
    pub fn inv(&self, a: GroupElem) -> GroupElem {
        self.inverses[a]
    }
    pub fn pow(&self, a: GroupElem, k: i64) -> GroupElem {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, a: GroupElem) -> &str {
        &self.labels[a]
    }
    pub fn generators(&self) -> &[(String, GroupElem)] {
        &self.generators
    }
    pub fn word(&self, a: GroupElem) -> &[usize] {
        &self.words[a]
    }
    pub fn elements(&self) -> impl Iterator<Item = GroupElem> {
        0..self.order()
    }
    pub fn element_order(&self, a: GroupElem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
    pub fn exponent(&self) -> usize {
        use num_integer::Integer;
        self.elements().fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }
    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Read a word such as `g^2h` or `1` in the generator names.
    pub fn parse_element(&self, word: &str) -> Result<GroupElem, GroupError> {
        let bad = || GroupError::BadWord(word.to_string());
        let e = expr::parse(word, Mode::Word).map_err(|_| bad())?;
        self.eval_word(&e).ok_or_else(bad)
    }

    fn eval_word(&self, e: &Expr) -> Option<GroupElem> {
        match e {
            Expr::Num(r) if r == &Rational::from_integer(1.into()) => Some(self.identity),
            Expr::Ident(s) => self.generators.iter().find(|(n, _)| n == s).map(|(_, g)| *g),
            Expr::Mul(a, b) => Some(self.mul(self.eval_word(a)?, self.eval_word(b)?)),
            Expr::Pow(a, k) => Some(self.pow(self.eval_word(a)?, *k as i64)),
            _ => None,
        }
    }

    /// Closure of a set of elements under multiplication.
    pub fn generated_by(&self, gens: &[GroupElem]) -> Subgroup {
        let mut set: BTreeSet<GroupElem> = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(a) = frontier.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if set.insert(b) {
                    frontier.push(b);
                }
            }
        }
        Subgroup { members: set.into_iter().collect() }
    }

    pub fn is_subgroup(&self, set: &[GroupElem]) -> bool {
        let s: BTreeSet<_> = set.iter().copied().collect();
        s.contains(&self.identity) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.mul(a, b))))
    }

    pub fn subgroup_from_words(&self, words: &[&str]) -> Result<Subgroup, GroupError> {
        let elems = words.iter().map(|w| self.parse_element(w)).collect::<Result<Vec<_>, _>>()?;
        if !self.is_subgroup(&elems) {
            return Err(GroupError::NotSubgroup(words.iter().map(|s| s.to_string()).collect()));
        }
        let mut members = elems;
        members.sort_unstable();
        members.dedup();
        Ok(Subgroup { members })
    }
}

/// A subgroup, as a sorted list of elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<GroupElem>,
}

impl Subgroup {
    pub fn members(&self) -> &[GroupElem] {
        &self.members
    }
    pub fn order(&self) -> usize {
        self.members.len()
    }
    pub fn contains(&self, g: GroupElem) -> bool {
        self.members.binary_search(&g).is_ok()
    }
    pub fn labels(&self, g: &FiniteGroup) -> Vec<String> {
        self.members.iter().map(|&a| g.label(a).to_string()).collect()
    }
    pub fn display(&self, g: &FiniteGroup) -> String {
        format!("{{{}}}", self.labels(g).join(","))
    }
}

/// All subgroups, ordered by size and then by member list.
pub fn enumerate_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>, GroupError> {
    if g.order() > SUBGROUP_ENUMERATION_BOUND {
        return Err(GroupError::TooLarge(g.order()));
    }
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut frontier = vec![g.generated_by(&[])];
    found.insert(frontier[0].clone());
    while let Some(h) = frontier.pop() {
        for a in g.elements() {
            if h.contains(a) {
                continue;
            }
            let mut gens = h.members.clone();
            gens.push(a);
            let k = g.generated_by(&gens);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    Ok(out)
}

/// The group algebra kG; basis = group elements, labelled as in `g`.
pub fn group_algebra(g: &FiniteGroup, field: &CyclotomicField) -> Result<HopfAlgebra, HopfError> {
    let n = g.order();
    let one = field.one();
    let mult = (0..n).map(|a| (0..n).map(|b| Vector::basis(g.mul(a, b), &one)).collect()).collect();
    let comult = (0..n).map(|a| vec![(one.clone(), a, a)]).collect();
    let counit = vec![one.clone(); n];
    let antipode = (0..n).map(|a| Vector::basis(g.inv(a), &one)).collect();
    let generators = g.generators().iter().map(|(s, e)| (s.clone(), Vector::basis(*e, &one))).collect();
    let words = (0..n).map(|a| g.word(a).to_vec()).collect();
    HopfAlgebra::from_structure(StructureData {
        name: format!("kG({})", g.order()),
        field: field.clone(),
        labels: g.labels().to_vec(),
        mult,
        unit: Vector::basis(g.identity(), &one),
        comult,
        counit,
        antipode,
        generators,
        basis_words: words,
        constants: HashMap::new(),
    })
}

/// The dual group algebra (kG)*, basis the dual basis {g*}: g*h* = δ_{g,h} g*,
/// Δ(g*) = Σ_{uv=g} u*⊗v*, ε(g*) = δ_{g,1}, S(g*) = (g⁻¹)*.
pub fn dual_group_algebra(g: &FiniteGroup, field: &CyclotomicField) -> Result<HopfAlgebra, HopfError> {
    let n = g.order();
    let one = field.one();
    let mult = (0..n)
        .map(|a| (0..n).map(|b| if a == b { Vector::basis(a, &one) } else { Vector::zero() }).collect())
        .collect();
    let mut unit = Vector::zero();
    for a in 0..n {
        unit.add_term(a, &one);
    }
    let comult = (0..n)
        .map(|a| {
            let mut terms = Vec::new();
            for u in 0..n {
                let v = g.mul(g.inv(u), a);
                terms.push((one.clone(), u, v));
            }
            terms
        })
        .collect();
    let counit = (0..n).map(|a| if a == g.identity() { one.clone() } else { field.zero() }).collect();
    let antipode = (0..n).map(|a| Vector::basis(g.inv(a), &one)).collect();
    let labels: Vec<String> = g.labels().iter().map(|l| format!("{l}*")).collect();
    let generators = (0..n).map(|a| (format!("p{a}"), Vector::basis(a, &one))).collect();
    let words = (0..n).map(|a| vec![a]).collect();
    HopfAlgebra::from_structure(StructureData {
        name: format!("kG*({})", g.order()),
        field: field.clone(),
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        generators,
        basis_words: words,
        constants: HashMap::new(),
    })
}

/// λ_N on kG: the indicator of N.
pub fn lambda_n(g: &FiniteGroup, n: &Subgroup, field: &CyclotomicField) -> Vec<Cyclo> {
    g.elements().map(|a| if n.contains(a) { field.one() } else { field.zero() }).collect()
}

/// λ^N on (kG)*: λ(g*) = 1/|N| on N, 0 elsewhere.
pub fn lambda_dual_n(g: &FiniteGroup, n: &Subgroup, field: &CyclotomicField) -> Vec<Cyclo> {
    let w = field.from_rational(Rational::new(1.into(), (n.order() as i64).into()));
    g.elements().map(|a| if n.contains(a) { w.clone() } else { field.zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_subgroups(g: &FiniteGroup) -> usize {
        let n = g.order();
        (0u32..(1 << n))
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                g.is_subgroup(&set)
            })
            .count()
    }

    #[test]
    fn subgroup_counts_match_brute_force() {
        for name in ["C1", "C2", "C4", "C6", "C8", "C2xC2", "C4xC2", "C2^3", "S3", "D4", "Q8"] {
            let g = FiniteGroup::named(name).unwrap();
            let subs = enumerate_subgroups(&g).unwrap();
            assert_eq!(subs.len(), brute_force_subgroups(&g), "{name}");
        }
    }

    #[test]
    fn known_counts() {
        let count = |s| enumerate_subgroups(&FiniteGroup::named(s).unwrap()).unwrap().len();
        assert_eq!(count("S3"), 6);
        assert_eq!(count("C2^3"), 16);
        assert_eq!(count("C4xC2"), 8);
        assert_eq!(count("D4"), 10);
        assert_eq!(count("Q8"), 6);
    }

    #[test]
    fn labels_and_words() {
        let g = FiniteGroup::named("C4xC2").unwrap();
        let e = g.parse_element("g^3h").unwrap();
        assert_eq!(g.label(e), "g^3h");
        assert_eq!(g.element_order(e), 4);
        assert_eq!(g.parse_element("gh gh").unwrap(), g.parse_element("g^2").unwrap());
        assert!(g.parse_element("x").is_err());
        assert!(!FiniteGroup::named("S3").unwrap().is_abelian());
        assert_eq!(FiniteGroup::named("Q8").unwrap().exponent(), 4);
    }

    #[test]
    fn too_large() {
        let g = FiniteGroup::cyclic(65, "g").unwrap();
        assert_eq!(enumerate_subgroups(&g).unwrap_err(), GroupError::TooLarge(65));
    }

    #[test]
    fn rejects_bad_tables() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table(vec!["1".into(), "a".into()], t, vec![]).is_err());
    }
}
