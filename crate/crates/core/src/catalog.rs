//! Built-in algebras, encoded table rows and diagram edges.
//!
//! Algebras are named as in the classification lists (`A2`, `A4''`, `H16`),
//! plus `Sweedler`, `Taft(n,k)`, group algebras `kC4`, `kS3` and their duals
//! `kC4*`. Table rows and diagram edges are JSON data files, embedded at
//! build time and optionally read from the directory in `HOPF_PARTIAL_DATA`.

use std::collections::BTreeSet;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactfield::{lcm_order, CyclotomicField};
use crate::groups::{dual_group_algebra, enumerate_subgroups, group_algebra, FiniteGroup, GroupError, Subgroup};
use crate::hopfcore::{tensor_hopf, HopfAlgebra, HopfError, PointedPresentation};
use crate::partial::{same_variety, solve_partial_actions, PartialActionFamily, PartialError};
use crate::polysolve::{parse_poly_with, MonomialOrder, MultiPoly, PolyError, PolyRing, SolveConfig};

/// Environment variable naming a directory with `tables/*.json` and `diagram.json`.
pub const DATA_ENV: &str = "HOPF_PARTIAL_DATA";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown algebra `{0}`")]
    UnknownName(String),
    #[error("no table data for `{0}`")]
    NoTable(String),
    #[error("bad data in {file}: {message}")]
    Data { file: String, message: String },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Partial(#[from] PartialError),
}

fn data_error(file: &str, message: impl Into<String>) -> CatalogError {
    CatalogError::Data { file: file.to_string(), message: message.into() }
}

/// What the catalog promises about one algebra.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub field_order: u32,
    pub dim: usize,
    /// Number of group-like basis elements.
    pub group_likes: usize,
}

const POINTED: [(&str, &str, usize, usize); 35] = [
    ("Sweedler", "C2; x in P(1,g); xg = -gx; x^2 = 0", 4, 2),
    ("A2", "C2; x, y in P(1,g); anticommuting; x^2 = y^2 = 0", 8, 2),
    ("A4'", "C4; x in P(1,g); xg = -gx; x^2 = 0", 8, 4),
    ("A4''", "C4; x in P(1,g); xg = -gx; x^2 = g^2 - 1", 8, 4),
    ("A4'''", "C4; x in P(1,g^2); gx = q xg; x^2 = 0", 8, 4),
    ("A22", "C2xC2; x in P(1,g); xg = -gx, xh = -hx; x^2 = 0", 8, 4),
    ("H1", "C2; x, y, z in P(1,g); all anticommuting; squares 0", 16, 2),
    ("H2", "C4; x, y in P(1,g^2); xg = q gx, yg = q gy", 16, 4),
    ("H3", "C4; x, y in P(1,g^2); xg = q gx, yg = -q gy", 16, 4),
    ("H4", "C4; x, y in P(1,g); squares 0", 16, 4),
    ("H5", "C4; x, y in P(1,g); y^2 = g^2 - 1", 16, 4),
    ("H6", "C4; x, y in P(1,g); y^2 = g^2 - 1, yx = -xy + g^2 - 1", 16, 4),
    ("H7", "C4; x in P(1,g), y in P(1,g^3); squares 0", 16, 4),
    ("H8", "C4; x in P(1,g), y in P(1,g^3); y^2 = g^2 - 1", 16, 4),
    ("H9", "C4; x in P(1,g), y in P(1,g^3); x^2 = y^2 = g^2 - 1", 16, 4),
    ("H10", "C4; x in P(1,g); xg = q gx; x^4 = 0", 16, 4),
    ("H11", "C4; x in P(1,g); xg = -q gx; x^4 = 0", 16, 4),
    ("H12", "A2 tensor kC2", 16, 4),
    ("H13", "C2xC2; x, y in P(1,g); xh = hx, yh = -hy", 16, 4),
    ("H14", "Sweedler tensor Sweedler", 16, 4),
    ("H15", "C2xC2; x in P(1,g), y in P(1,h); yx = -xy", 16, 4),
    ("H16", "C2xC2; x in P(1,g), y in P(1,h); yx = -xy + gh - 1", 16, 4),
    ("H17", "Sweedler tensor k(C2xC2)", 16, 8),
    ("H18", "C8; x in P(1,g); xg = -gx; x^2 = 0", 16, 8),
    ("H19", "C8; x in P(1,g^4); xg = q gx, q of order 8", 16, 8),
    ("H20", "C8; x in P(1,g^2); xg = q gx, q of order 4", 16, 8),
    ("H21", "C8; x in P(1,g^6); xg = q gx, q of order 4", 16, 8),
    ("H22", "C8; x in P(1,g); xg = -gx; x^2 = g^2 - 1", 16, 8),
    ("H23", "C4xC2; x in P(1,g); xg = -gx, xh = hx", 16, 8),
    ("H24", "C4xC2; x in P(1,gh); xg = gx, xh = -hx", 16, 8),
    ("H25", "C4xC2; x in P(1,g^2); xg = q gx, xh = hx", 16, 8),
    ("H26", "C4xC2; x in P(1,h); xg = gx, xh = -hx", 16, 8),
    ("H27", "C4xC2; x in P(1,g^2h); xg = q gx, xh = hx", 16, 8),
    ("H28", "C4xC2; x in P(1,g); xg = -gx, xh = hx; x^2 = g^2 - 1", 16, 8),
    ("H29", "C4xC2; x in P(1,gh); xg = gx, xh = -hx; x^2 = g^2 - 1", 16, 8),
];

/// Taft-type algebras T_n^k(ω) listed in the catalog.
pub const TAFT_PARAMETERS: [(u32, u32); 5] = [(2, 1), (2, 2), (2, 4), (3, 2), (4, 2)];

/// Groups of order at most 8 whose group algebras and duals are listed.
pub const SMALL_GROUPS: [&str; 13] =
    ["C2", "C3", "C4", "C2xC2", "C5", "C6", "C7", "C8", "C4xC2", "C2xC2xC2", "S3", "D4", "Q8"];

fn field(m: u32) -> Result<CyclotomicField, HopfError> {
    Ok(CyclotomicField::new(m)?)
}

/// Field order lcm(exp G, 4, orders of the constants).
fn field_for(group: &FiniteGroup, constant_orders: &[u32]) -> u32 {
    constant_orders.iter().fold(lcm_order(group.exponent() as u32, 4), |a, &b| lcm_order(a, b))
}

fn cyclic(n: u32) -> Result<FiniteGroup, HopfError> {
    Ok(FiniteGroup::cyclic(n, "g")?)
}

fn abelian(orders: &[u32]) -> Result<FiniteGroup, HopfError> {
    Ok(FiniteGroup::abelian(orders, &["g", "h"])?)
}

fn pointed(name: &str, group: FiniteGroup, constant_orders: &[u32]) -> Result<PointedPresentation, HopfError> {
    let m = field_for(&group, constant_orders);
    Ok(PointedPresentation::new(name, group, field(m)?))
}

/// The classification entry `name`, built from its presentation.
fn build_pointed(name: &str) -> Result<Option<HopfAlgebra>, HopfError> {
    let neg = "-1";
    let c2 = || cyclic(2);
    let c4 = || cyclic(4);
    let c8 = || cyclic(8);
    let k4 = || abelian(&[2, 2]);
    let c4c2 = || abelian(&[4, 2]);
    let p = match name {
        "Sweedler" => pointed(name, c2()?, &[])?.skew("x", ("1", "g"), &[("g", neg)], 2, "0")?,
        "A2" => pointed(name, c2()?, &[])?
            .skew("x", ("1", "g"), &[("g", neg)], 2, "0")?
            .skew("y", ("1", "g"), &[("g", neg)], 2, "0")?
            .cross("y", "x", neg, "0")?,
        "A4'" => pointed(name, c4()?, &[])?.skew("x", ("1", "g"), &[("g", neg)], 2, "0")?,
        "A4''" => pointed(name, c4()?, &[])?.skew("x", ("1", "g"), &[("g", neg)], 2, "g^2 - 1")?,
        // gx = q xg, so x g = q^{-1} g x = q^3 g x
        "A4'''" => pointed(name, c4()?, &[4])?
            .constant("q", "zeta4")?
            .skew("x", ("1", "g^2"), &[("g", "q^3")], 2, "0")?,
        "A22" => pointed(name, k4()?, &[])?.skew("x", ("1", "g"), &[("g", neg), ("h", neg)], 2, "0")?,
        "H1" => pointed(name, c2()?, &[])?
            .skew("x", ("1", "g"), &[("g", neg)], 2, "0")?
            .skew("y", ("1", "g"), &[("g", neg)], 2, "0")?
            .skew("z", ("1", "g"), &[("g", neg)], 2, "0")?
            .cross("y", "x", neg, "0")?
            .cross("z", "x", neg, "0")?
            .cross("z", "y", neg, "0")?,
        "H2" | "H3" => {
            let ychi = if name == "H2" { "q" } else { "-q" };
            pointed(name, c4()?, &[4])?
                .constant("q", "zeta4")?
                .skew("x", ("1", "g^2"), &[("g", "q")], 2, "0")?
                .skew("y", ("1", "g^2"), &[("g", ychi)], 2, "0")?
                .cross("y", "x", neg, "0")?
        }
        "H4" | "H5" | "H6" => {
            let ypow = if name == "H4" { "0" } else { "g^2 - 1" };
            let rhs = if name == "H6" { "g^2 - 1" } else { "0" };
            pointed(name, c4()?, &[])?
                .skew("x", ("1", "g"), &[("g", neg)], 2, "0")?
                .skew("y", ("1", "g"), &[("g", neg)], 2, ypow)?
                .cross("y", "x", neg, rhs)?
        }
        "H7" | "H8" | "H9" => {
            let xpow = if name == "H9" { "g^2 - 1" } else { "0" };
            let ypow = if name == "H7" { "0" } else { "g^2 - 1" };
            pointed(name, c4()?, &[])?
                .skew("x", ("1", "g"), &[("g", neg)], 2, xpow)?
                .skew("y", ("1", "g^3"), &[("g", neg)], 2, ypow)?
                .cross("y", "x", neg, "0")?
        }
        "H10" | "H11" => {
            let chi = if name == "H10" { "q" } else { "-q" };
            pointed(name, c4()?, &[4])?.constant("q", "zeta4")?.skew("x", ("1", "g"), &[("g", chi)], 4, "0")?
        }
        "H12" => {
            let a2 = build_pointed("A2")?.expect("A2 is listed");
            let kc2 = group_algebra(&cyclic(2)?, a2.field())?;
            return Ok(Some(tensor_hopf(&a2, &kc2, &[("g", "h")])?.with_name(name)));
        }
        "H13" => pointed(name, k4()?, &[])?
            .skew("x", ("1", "g"), &[("g", neg), ("h", "1")], 2, "0")?
            .skew("y", ("1", "g"), &[("g", neg), ("h", neg)], 2, "0")?
            .cross("y", "x", neg, "0")?,
        "H14" => {
            let s = build_pointed("Sweedler")?.expect("Sweedler is listed");
            return Ok(Some(tensor_hopf(&s, &s, &[("g", "h"), ("x", "y")])?.with_name(name)));
        }
        "H15" | "H16" => {
            let rhs = if name == "H15" { "0" } else { "gh - 1" };
            pointed(name, k4()?, &[])?
                .skew("x", ("1", "g"), &[("g", neg), ("h", neg)], 2, "0")?
                .skew("y", ("1", "h"), &[("g", neg), ("h", neg)], 2, "0")?
                .cross("y", "x", neg, rhs)?
        }
        "H17" => {
            let s = build_pointed("Sweedler")?.expect("Sweedler is listed");
            let k = group_algebra(&FiniteGroup::abelian(&[2, 2], &["a", "b"])?, s.field())?;
            return Ok(Some(tensor_hopf(&s, &k, &[])?.with_name(name)));
        }
        "H18" => pointed(name, c8()?, &[])?.skew("x", ("1", "g"), &[("g", neg)], 2, "0")?,
        "H19" => pointed(name, c8()?, &[8])?.constant("q", "zeta8")?.skew("x", ("1", "g^4"), &[("g", "q")], 2, "0")?,
        "H20" => pointed(name, c8()?, &[4])?.constant("q", "zeta4")?.skew("x", ("1", "g^2"), &[("g", "q")], 2, "0")?,
        "H21" => pointed(name, c8()?, &[4])?.constant("q", "zeta4")?.skew("x", ("1", "g^6"), &[("g", "q")], 2, "0")?,
        "H22" => pointed(name, c8()?, &[])?.skew("x", ("1", "g"), &[("g", neg)], 2, "g^2 - 1")?,
        "H23" => pointed(name, c4c2()?, &[])?.skew("x", ("1", "g"), &[("g", neg), ("h", "1")], 2, "0")?,
        "H24" => pointed(name, c4c2()?, &[])?.skew("x", ("1", "gh"), &[("g", "1"), ("h", neg)], 2, "0")?,
        "H25" => pointed(name, c4c2()?, &[4])?
            .constant("q", "zeta4")?
            .skew("x", ("1", "g^2"), &[("g", "q"), ("h", "1")], 2, "0")?,
        "H26" => pointed(name, c4c2()?, &[])?.skew("x", ("1", "h"), &[("g", "1"), ("h", neg)], 2, "0")?,
        "H27" => pointed(name, c4c2()?, &[4])?
            .constant("q", "zeta4")?
            .skew("x", ("1", "g^2h"), &[("g", "q"), ("h", "1")], 2, "0")?,
        "H28" => pointed(name, c4c2()?, &[])?.skew("x", ("1", "g"), &[("g", neg), ("h", "1")], 2, "g^2 - 1")?,
        "H29" => pointed(name, c4c2()?, &[])?.skew("x", ("1", "gh"), &[("g", "1"), ("h", neg)], 2, "g^2 - 1")?,
        _ => return Ok(None),
    };
    Ok(Some(p.build()?.with_name(name)))
}

/// T_n^k(ω): g^{kn} = 1, x^n = 0, xg = ω gx, x ∈ P_{1,g^k}, ω = ζ_{kn}.
pub fn taft(n: u32, k: u32) -> Result<HopfAlgebra, CatalogError> {
    if n < 2 || k < 1 {
        return Err(CatalogError::UnknownName(format!("Taft({n},{k})")));
    }
    let order = k * n;
    let group = cyclic(order)?;
    let gk = if k == 1 { "g".to_string() } else { format!("g^{k}") };
    let p = pointed(&format!("Taft({n},{k})"), group, &[order])?
        .constant("omega", &format!("zeta{order}"))?
        .skew("x", ("1", &gk), &[("g", "omega")], n, "0")?;
    Ok(p.build()?)
}

fn parse_taft(name: &str) -> Option<(u32, u32)> {
    let inner = name.strip_prefix("Taft(")?.strip_suffix(')')?;
    let (n, k) = inner.split_once(',')?;
    Some((n.trim().parse().ok()?, k.trim().parse().ok()?))
}

fn group_field(g: &FiniteGroup) -> Result<CyclotomicField, HopfError> {
    field(field_for(g, &[]))
}

/// Build a catalog algebra by name.
pub fn get_algebra(name: &str) -> Result<HopfAlgebra, CatalogError> {
    if let Some(h) = build_pointed(name)? {
        return Ok(h);
    }
    if let Some((n, k)) = parse_taft(name) {
        return taft(n, k);
    }
    if let Some(rest) = name.strip_prefix('k') {
        let (group_name, dual) = match rest.strip_suffix('*') {
            Some(g) => (g, true),
            None => (rest, false),
        };
        let g = FiniteGroup::named(group_name).map_err(|_| CatalogError::UnknownName(name.to_string()))?;
        let f = group_field(&g)?;
        let h = if dual { dual_group_algebra(&g, &f)? } else { group_algebra(&g, &f)? };
        return Ok(h.with_name(name));
    }
    Err(CatalogError::UnknownName(name.to_string()))
}

/// Every catalog algebra with its expected dimension and group-like count.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = POINTED
        .iter()
        .map(|&(name, description, dim, group_likes)| CatalogEntry {
            name: name.to_string(),
            description: description.to_string(),
            field_order: if ["H18", "H19", "H20", "H21", "H22"].contains(&name) { 8 } else { 4 },
            dim,
            group_likes,
        })
        .collect();
    for (n, k) in TAFT_PARAMETERS {
        out.push(CatalogEntry {
            name: format!("Taft({n},{k})"),
            description: format!("C{}; x in P(1,g^{k}); xg = zeta{} gx; x^{n} = 0", k * n, k * n),
            field_order: lcm_order(k * n, 4),
            dim: (k * n * n) as usize,
            group_likes: (k * n) as usize,
        });
    }
    for g in SMALL_GROUPS {
        let group = FiniteGroup::named(g).expect("listed groups are known");
        let m = field_for(&group, &[]);
        out.push(CatalogEntry {
            name: format!("k{g}"),
            description: format!("group algebra of {g}"),
            field_order: m,
            dim: group.order(),
            group_likes: group.order(),
        });
        out.push(CatalogEntry {
            name: format!("k{g}*"),
            description: format!("dual group algebra of {g}; no group-like basis elements"),
            field_order: m,
            dim: group.order(),
            group_likes: 0,
        });
    }
    out
}

/// The 5 dimension-8 algebras.
pub const DIM8: [&str; 5] = ["A2", "A4'", "A4''", "A4'''", "A22"];

/// The 29 dimension-16 algebras.
pub fn dim16() -> Vec<String> {
    (1..=29).map(|i| format!("H{i}")).collect()
}

// ---------------------------------------------------------------------------
// Table data

/// One printed row: the initial condition and the values on the printed columns.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TableRowSpec {
    pub subgroup: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parameters: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constraints: Vec<String>,
    pub values: Vec<String>,
}

/// A table of partial actions, keyed by basis monomial labels.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraTable {
    pub algebra: String,
    pub columns: Vec<String>,
    pub rows: Vec<TableRowSpec>,
}

macro_rules! embedded_tables {
    ($($name:literal => $file:literal),* $(,)?) => {
        const EMBEDDED_TABLES: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../data/tables/", $file, ".json")))),*
        ];
    };
}

embedded_tables! {
    "Sweedler" => "Sweedler", "A2" => "A2", "A4'" => "A4p", "A4''" => "A4pp", "A4'''" => "A4ppp", "A22" => "A22",
    "H1" => "H1", "H2" => "H2", "H3" => "H3", "H4" => "H4", "H5" => "H5", "H6" => "H6", "H7" => "H7",
    "H8" => "H8", "H9" => "H9", "H10" => "H10", "H11" => "H11", "H12" => "H12", "H13" => "H13",
    "H14" => "H14", "H15" => "H15", "H16" => "H16", "H17" => "H17", "H18" => "H18", "H19" => "H19",
    "H20" => "H20", "H21" => "H21", "H22" => "H22", "H23" => "H23", "H24" => "H24", "H25" => "H25",
    "H26" => "H26", "H27" => "H27", "H28" => "H28", "H29" => "H29",
}

const EMBEDDED_DIAGRAM: &str = include_str!("../data/diagram.json");

/// File stem of a table: primes become `p` (`A4''` → `A4pp`).
pub fn table_file_stem(name: &str) -> String {
    name.replace('\'', "p")
}

fn data_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_ENV).map(PathBuf::from)
}

/// Names of the algebras that have table data.
pub fn table_algebras() -> Vec<&'static str> {
    EMBEDDED_TABLES.iter().map(|(n, _)| *n).collect()
}

/// Load the table for `name`, from `HOPF_PARTIAL_DATA` if set.
pub fn load_table(name: &str) -> Result<AlgebraTable, CatalogError> {
    let (text, file) = match data_dir() {
        Some(dir) => {
            let path = dir.join("tables").join(format!("{}.json", table_file_stem(name)));
            let text = std::fs::read_to_string(&path).map_err(|_| CatalogError::NoTable(name.to_string()))?;
            (text, path.display().to_string())
        }
        None => {
            let (_, text) =
                EMBEDDED_TABLES.iter().find(|(n, _)| *n == name).ok_or_else(|| CatalogError::NoTable(name.to_string()))?;
            (text.to_string(), format!("tables/{}.json", table_file_stem(name)))
        }
    };
    let table: AlgebraTable = serde_json::from_str(&text).map_err(|e| data_error(&file, e.to_string()))?;
    if table.algebra != name {
        return Err(data_error(&file, format!("table is for `{}`", table.algebra)));
    }
    if let Some(r) = table.rows.iter().find(|r| r.values.len() != table.columns.len()) {
        return Err(data_error(&file, format!("row {:?} has {} values for {} columns", r.subgroup, r.values.len(), table.columns.len())));
    }
    Ok(table)
}

/// Read the rows of a table as families of partial actions of `h`.
/// Group-like values come from the initial condition; printed group-like
/// columns must agree with it.
pub fn table_rows(h: &HopfAlgebra, table: &AlgebraTable) -> Result<Vec<PartialActionFamily>, CatalogError> {
    let file = format!("table {}", table.algebra);
    let gl = h.group_likes()?;
    let f = h.field();
    let mut columns = Vec::with_capacity(table.columns.len());
    for c in &table.columns {
        let v = h.element(c).map_err(|e| data_error(&file, e.to_string()))?;
        let (i, k) = h.as_scaled_basis(&v).ok_or_else(|| data_error(&file, format!("column `{c}` is not a basis monomial")))?;
        columns.push((i, k));
    }
    let covered: BTreeSet<usize> = columns.iter().map(|(i, _)| *i).collect();
    if covered.len() != columns.len() {
        return Err(data_error(&file, "two columns name the same basis element"));
    }
    if let Some(missing) = (0..h.dim()).find(|i| gl.element_of(*i).is_none() && !covered.contains(i)) {
        return Err(data_error(&file, format!("no column for `{}`", h.label(missing))));
    }
    let mut out = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        let words: Vec<&str> = row.subgroup.iter().map(String::as_str).collect();
        let n = gl.group.subgroup_from_words(&words)?;
        let ring = PolyRing::new(f.clone(), row.parameters.clone(), MonomialOrder::DegRevLex);
        let parse = |s: &str| parse_poly_with(&ring, s, h.constants());
        let mut lambda: Vec<Option<MultiPoly>> = vec![None; h.dim()];
        for g in gl.group.elements() {
            let v = if n.contains(g) { f.one() } else { f.zero() };
            lambda[gl.basis_index(g)] = Some(MultiPoly::constant(&ring, v));
        }
        for ((i, k), src) in columns.iter().zip(&row.values) {
            let value = parse(src)?.scale(&k.inverse().map_err(HopfError::from)?);
            match &lambda[*i] {
                Some(existing) if existing != &value => {
                    return Err(data_error(
                        &file,
                        format!("row {:?}: `{}` = {src} contradicts the initial condition", row.subgroup, h.label(*i)),
                    ))
                }
                _ => lambda[*i] = Some(value),
            }
        }
        let constraints = row.constraints.iter().map(|c| parse(c)).collect::<Result<Vec<_>, _>>()?;
        let assignments: Vec<MultiPoly> = lambda.into_iter().map(|p| p.expect("every basis element covered")).collect();
        out.push(PartialActionFamily {
            subgroup_labels: n.labels(&gl.group),
            subgroup: n,
            family: crate::polysolve::SolutionFamily::new(h.labels().to_vec(), ring, assignments, constraints),
        });
    }
    Ok(out)
}

/// Solver output against table rows for one initial condition.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupComparison {
    pub subgroup: String,
    pub solver_families: usize,
    pub table_rows: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableVerification {
    pub algebra: String,
    pub comparisons: Vec<SubgroupComparison>,
    /// Rows failing the symbolic partial-action check.
    pub invalid_rows: Vec<String>,
    /// Rows whose subgroup appears more than once.
    pub duplicate_rows: Vec<String>,
}

impl TableVerification {
    pub fn passed(&self) -> bool {
        self.invalid_rows.is_empty() && self.duplicate_rows.is_empty() && self.comparisons.iter().all(|c| c.agree)
    }
}

/// Compare the solver with the table, subgroup by subgroup, by total-variety
/// ideal equality over the non-group-like basis elements. A subgroup without
/// a row must have no solutions.
pub fn verify_table(h: &HopfAlgebra, table: &AlgebraTable, config: &SolveConfig) -> Result<TableVerification, CatalogError> {
    let rows = table_rows(h, table)?;
    let gl = h.group_likes()?;
    let mut seen = BTreeSet::new();
    let duplicate_rows = rows
        .iter()
        .filter(|r| !seen.insert(r.subgroup.clone()))
        .map(|r| r.subgroup.display(&gl.group))
        .collect();
    let invalid_rows = rows.iter().filter(|r| !r.verify_symbolic(h)).map(|r| r.subgroup.display(&gl.group)).collect();
    let mut comparisons = Vec::new();
    for n in enumerate_subgroups(&gl.group)? {
        let solved = solve_partial_actions(h, &n, config)?;
        let expected: Vec<&PartialActionFamily> = rows.iter().filter(|r| r.subgroup == n).collect();
        let a: Vec<_> = solved.iter().map(|f| &f.family).collect();
        let b: Vec<_> = expected.iter().map(|f| &f.family).collect();
        let agree = match (a.is_empty(), b.is_empty()) {
            (true, true) => true,
            (false, false) => same_variety(h, &a, &b)?,
            _ => false,
        };
        comparisons.push(SubgroupComparison {
            subgroup: n.display(&gl.group),
            solver_families: solved.len(),
            table_rows: expected.len(),
            agree,
        });
    }
    Ok(TableVerification { algebra: table.algebra.clone(), comparisons, invalid_rows, duplicate_rows })
}

/// The row of `table` whose initial condition is `subgroup` (given by member words).
pub fn find_row(h: &HopfAlgebra, table: &AlgebraTable, subgroup: &Subgroup) -> Result<Option<PartialActionFamily>, CatalogError> {
    Ok(table_rows(h, table)?.into_iter().find(|r| &r.subgroup == subgroup))
}

// ---------------------------------------------------------------------------
// Diagram

/// An arrow source --λ_N--> target: target ≅ source_λ, witnessed by images
/// of the target's generators inside the source.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DiagramEdge {
    pub source: String,
    pub subgroup: Vec<String>,
    pub target: String,
    pub images: Vec<(String, String)>,
}

/// All diagram edges, from `HOPF_PARTIAL_DATA/diagram.json` if set.
pub fn diagram_edges() -> Result<Vec<DiagramEdge>, CatalogError> {
    let (text, file) = match data_dir() {
        Some(dir) => {
            let path = dir.join("diagram.json");
            let text = std::fs::read_to_string(&path).map_err(|e| data_error(&path.display().to_string(), e.to_string()))?;
            (text, path.display().to_string())
        }
        None => (EMBEDDED_DIAGRAM.to_string(), "diagram.json".to_string()),
    };
    serde_json::from_str(&text).map_err(|e| data_error(&file, e.to_string()))
}

#[cfg(test)]
mod tests;
