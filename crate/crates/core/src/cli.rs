//! Command-line front end. `run` parses arguments, writes to the given
//! sink and returns the exit code: 0 success, 1 mismatch or failure, 2 usage.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::catalog::{self, CatalogError};
use crate::exactfield::Cyclo;
use crate::groups::{enumerate_subgroups, GroupError, Subgroup};
use crate::hopfcore::{HopfAlgebra, PresentationSpec};
use crate::partial::{solve_partial_actions, PartialAction, PartialActionFamily};
use crate::polysolve::{parse_poly, SolveConfig, DEFAULT_SPLIT_BUDGET};
use crate::smash::{self, SmashError};

#[derive(Debug, Parser)]
#[command(name = "hopf-partial", version, about = "Partial actions of pointed Hopf algebras on the base field")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of case splits per solve.
    #[arg(long, global = true, default_value_t = DEFAULT_SPLIT_BUDGET)]
    split_budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List catalog algebras with dimension and group-like count.
    ListAlgebras,
    /// Compute every partial action on the base field, by initial condition.
    PartialActions {
        algebra: String,
        /// Restrict to the subgroup generated by these words, e.g. `g^2,h` or `1`.
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Compare solver output with the tabulated families.
    VerifyTables {
        /// An algebra name or `all`.
        algebra: String,
    },
    /// Deform H by a partial action and report on H_λ.
    Smash {
        /// Catalog name, or `Taft` together with --n and --k.
        algebra: String,
        /// Table row by initial condition, e.g. `N=1,g`.
        #[arg(long)]
        row: Option<String>,
        /// Parameter value, e.g. `alpha=1`; may repeat.
        #[arg(long = "set")]
        set: Vec<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Check the Hopf algebra axioms.
    CheckAxioms {
        /// An algebra name or `all`; omit with --presentation.
        algebra: Option<String>,
        /// A presentation in JSON.
        #[arg(long)]
        presentation: Option<std::path::PathBuf>,
    },
    /// Verify every diagram edge and the Taft deformations.
    LambdaHopfReport,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::UnknownName(_) | CatalogError::NoTable(_) => Failure::Usage(e.to_string()),
            other => Failure::Failed(other.to_string()),
        }
    }
}

impl From<SmashError> for Failure {
    fn from(e: SmashError) -> Self {
        match e {
            SmashError::Catalog(c) => Failure::from(*c),
            other => Failure::Failed(other.to_string()),
        }
    }
}

macro_rules! failed_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Failed(e.to_string())
            }
        }
    )*};
}
failed_from!(crate::partial::PartialError, crate::hopfcore::HopfError, crate::polysolve::PolyError, serde_json::Error, GroupError);

/// Exit status of a finished command.
enum Outcome {
    Ok,
    Mismatch,
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Mismatch) => 1,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Failed(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, Failure> {
    let config = SolveConfig { split_budget: cli.split_budget };
    match &cli.command {
        Command::ListAlgebras => list_algebras(cli.json, out),
        Command::PartialActions { algebra, subgroup } => partial_actions(algebra, subgroup.as_deref(), &config, cli.json, out),
        Command::VerifyTables { algebra } => verify_tables(algebra, &config, cli.json, out),
        Command::Smash { algebra, row, set, n, k } => smash_cmd(algebra, row.as_deref(), set, *n, *k, cli.json, out),
        Command::CheckAxioms { algebra, presentation } => check_axioms(algebra.as_deref(), presentation.as_deref(), cli.json, out),
        Command::LambdaHopfReport => lambda_hopf_report(cli.json, out),
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Failed(e.to_string())
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out).map_err(io)
}

fn list_algebras(json: bool, out: &mut dyn Write) -> Result<Outcome, Failure> {
    let entries = catalog::entries();
    if json {
        emit_json(out, &entries)?;
    } else {
        for e in entries {
            writeln!(out, "{:12} dim {:2}  group-likes {:2}  Q(zeta{})  {}", e.name, e.dim, e.group_likes, e.field_order, e.description)
                .map_err(io)?;
        }
    }
    Ok(Outcome::Ok)
}

/// Subgroup of G(H) generated by comma-separated words.
fn parse_subgroup(h: &HopfAlgebra, selector: &str) -> Result<Subgroup, Failure> {
    let gl = h.group_likes()?;
    let mut gens = Vec::new();
    for w in selector.split(',').map(str::trim) {
        if w.is_empty() {
            return Err(Failure::Usage(format!("malformed subgroup selector `{selector}`")));
        }
        gens.push(gl.group.parse_element(w).map_err(|e: GroupError| Failure::Usage(format!("bad subgroup selector `{selector}`: {e}")))?);
    }
    Ok(gl.group.generated_by(&gens))
}

/// Columns in the tabulated order when a table exists, else every basis label.
fn display_columns(h: &HopfAlgebra) -> Vec<String> {
    match catalog::load_table(h.name()) {
        Ok(t) => t.columns,
        Err(_) => h.labels().to_vec(),
    }
}

#[derive(Serialize)]
struct FamilyOut<'a> {
    subgroup: String,
    values: BTreeMap<String, String>,
    family: &'a crate::polysolve::SolutionFamily,
}

fn partial_actions(name: &str, subgroup: Option<&str>, config: &SolveConfig, json: bool, out: &mut dyn Write) -> Result<Outcome, Failure> {
    let h = catalog::get_algebra(name)?;
    let selected = subgroup.map(|s| parse_subgroup(&h, s)).transpose()?;
    let gl = h.group_likes()?;
    let subgroups = match &selected {
        Some(n) => vec![n.clone()],
        None => enumerate_subgroups(&gl.group)?,
    };
    let columns = display_columns(&h);
    let column_vectors = columns.iter().map(|c| h.element(c)).collect::<Result<Vec<_>, _>>()?;
    let mut found: Vec<PartialActionFamily> = Vec::new();
    for n in &subgroups {
        found.extend(solve_partial_actions(&h, n, config)?);
    }
    let row_values = |f: &PartialActionFamily| -> Vec<String> { column_vectors.iter().map(|v| f.lambda_of(v).to_string()).collect() };
    if json {
        let rows: Vec<FamilyOut> = found
            .iter()
            .map(|f| FamilyOut {
                subgroup: f.subgroup.display(&gl.group),
                values: columns.iter().cloned().zip(row_values(f)).collect(),
                family: &f.family,
            })
            .collect();
        emit_json(out, &json!({ "algebra": h.name(), "columns": columns, "families": rows }))?;
    } else {
        if found.is_empty() {
            if let Some(n) = &selected {
                writeln!(out, "no partial action with initial condition {}", n.display(&gl.group)).map_err(io)?;
                return Ok(Outcome::Ok);
            }
        }
        let width = subgroups.iter().map(|n| n.display(&gl.group).len()).max().unwrap_or(3) + 2;
        writeln!(out, "{:width$}| {}", "N", columns.join(" | ")).map_err(io)?;
        for f in &found {
            write!(out, "{:width$}| {}", f.subgroup.display(&gl.group), row_values(f).join(" | ")).map_err(io)?;
            let cs: Vec<String> = f.family.constraints().iter().map(|c| format!("{c} = 0")).collect();
            if !cs.is_empty() {
                write!(out, "   ({})", cs.join(", ")).map_err(io)?;
            }
            writeln!(out).map_err(io)?;
        }
        writeln!(out, "{} families", found.len()).map_err(io)?;
    }
    Ok(Outcome::Ok)
}

fn verify_tables(name: &str, config: &SolveConfig, json: bool, out: &mut dyn Write) -> Result<Outcome, Failure> {
    let names: Vec<String> = if name == "all" {
        catalog::table_algebras().into_iter().map(String::from).collect()
    } else {
        vec![name.to_string()]
    };
    let mut reports = Vec::new();
    for n in &names {
        let h = catalog::get_algebra(n)?;
        let table = catalog::load_table(n)?;
        reports.push(catalog::verify_table(&h, &table, config)?);
    }
    let passed = reports.iter().all(|r| r.passed());
    if json {
        emit_json(out, &json!({ "passed": passed, "reports": reports }))?;
    } else {
        for r in &reports {
            writeln!(out, "{:8} {}", r.algebra, if r.passed() { "pass" } else { "MISMATCH" }).map_err(io)?;
            for c in r.comparisons.iter().filter(|c| !c.agree) {
                writeln!(out, "    N = {}: solver gives {} families, table has {} rows, varieties differ", c.subgroup, c.solver_families, c.table_rows)
                    .map_err(io)?;
            }
            for row in &r.invalid_rows {
                writeln!(out, "    row N = {row} is not a partial action").map_err(io)?;
            }
            for row in &r.duplicate_rows {
                writeln!(out, "    row N = {row} appears more than once").map_err(io)?;
            }
        }
    }
    Ok(if passed { Outcome::Ok } else { Outcome::Mismatch })
}

fn parse_assignments(set: &[String]) -> Result<BTreeMap<String, String>, Failure> {
    set.iter()
        .map(|s| match s.split_once('=') {
            Some((k, v)) if !k.trim().is_empty() && !v.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
            _ => Err(Failure::Usage(format!("expected name=value, got `{s}`"))),
        })
        .collect()
}

/// Default point with `--set` overrides applied, checked against the constraints.
fn parameter_point(row: &PartialActionFamily, overrides: &BTreeMap<String, String>) -> Result<Vec<Cyclo>, Failure> {
    let fam = &row.family;
    let names = fam.parameters().to_vec();
    let value = |name: &str| -> Result<Option<Cyclo>, Failure> {
        let Some(src) = overrides.get(name) else { return Ok(None) };
        parse_poly(fam.param_ring(), src)?
            .as_constant()
            .map(Some)
            .ok_or_else(|| Failure::Usage(format!("value of `{name}` must be a constant, got `{src}`")))
    };
    let mut fixed = Vec::new();
    for n in &names {
        fixed.push(value(n)?);
    }
    let field = fam.field().clone();
    let mut point = fam.sample_point(&mut |i| fixed[i].clone().unwrap_or_else(|| field.from_int(i as i64 + 1)))?;
    for (i, v) in fixed.into_iter().enumerate() {
        if let Some(v) = v {
            point[i] = v;
        }
    }
    if !fam.point_satisfies_constraints(&point) {
        return Err(Failure::Failed("the chosen parameter values violate the row's constraints".into()));
    }
    Ok(point)
}

fn smash_cmd(
    name: &str,
    row: Option<&str>,
    set: &[String],
    n: Option<u32>,
    k: Option<u32>,
    json: bool,
    out: &mut dyn Write,
) -> Result<Outcome, Failure> {
    let report = if name.eq_ignore_ascii_case("taft") {
        let (Some(n), Some(k)) = (n, k) else {
            return Err(Failure::Usage("`smash Taft` needs --n and --k".into()));
        };
        let (t, lambda) = smash::taft_lambda(n, k)?;
        let gl = t.group_likes()?;
        let sub = lambda.initial_condition(&gl);
        // T_2(-1) is Sweedler's algebra
        let target = if n == 2 { catalog::get_algebra("Sweedler")? } else { catalog::taft(n, 1)? };
        let gk = if k == 1 { "g".to_string() } else { format!("g^{k}") };
        let images = vec![("g".to_string(), gk), ("x".to_string(), "x".to_string())];
        smash::smash_report(&t, &lambda, Some(&sub), BTreeMap::new(), Some((&target, &images)))?
    } else {
        let h = catalog::get_algebra(name)?;
        let Some(selector) = row else {
            return Err(Failure::Usage("choose a row with --row N=<subgroup words>".into()));
        };
        let words = selector.strip_prefix("N=").unwrap_or(selector);
        let n = parse_subgroup(&h, words)?;
        let gl = h.group_likes()?;
        let table = catalog::load_table(name)?;
        let family = catalog::find_row(&h, &table, &n)?
            .ok_or_else(|| Failure::Failed(format!("no tabulated partial action with initial condition {}", n.display(&gl.group))))?;
        let overrides = parse_assignments(set)?;
        for k in overrides.keys().filter(|k| !family.family.parameters().contains(k)) {
            writeln!(out, "note: the row has no parameter `{k}`; ignored").map_err(io)?;
        }
        let point = parameter_point(&family, &overrides)?;
        let lambda = PartialAction::new(&h, family.values_at(&point))?;
        let shown: BTreeMap<String, String> =
            family.family.parameters().iter().cloned().zip(point.iter().map(|c| c.to_string())).collect();
        let labels = n.labels(&gl.group);
        let edge = catalog::diagram_edges()?.into_iter().find(|e| e.source == h.name() && same_members(&e.subgroup, &labels));
        let target = edge.as_ref().map(|e| catalog::get_algebra(&e.target)).transpose()?;
        let target_ref = match (&target, &edge) {
            (Some(t), Some(e)) => Some((t, e.images.as_slice())),
            _ => None,
        };
        smash::smash_report(&h, &lambda, Some(&n), shown, target_ref)?
    };
    if json {
        emit_json(out, &report)?;
    } else {
        write_smash_report(&report, out).map_err(io)?;
    }
    let target_ok = report.target.as_ref().is_none_or(|t| t.onto_h_lambda);
    Ok(if report.is_consistent() && target_ok { Outcome::Ok } else { Outcome::Mismatch })
}

fn same_members(a: &[String], b: &[String]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}

fn verdict(v: &smash::Verdict) -> String {
    match &v.witness {
        None => v.holds.to_string(),
        Some(w) => format!("{} (at {}: {} ≠ {})", v.holds, w.element, w.lhs, w.rhs),
    }
}

fn write_smash_report(r: &smash::SmashReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "algebra: {}", r.algebra)?;
    if let Some(n) = &r.subgroup {
        writeln!(out, "initial condition: {n}")?;
    }
    if !r.parameter_point.is_empty() {
        let p: Vec<String> = r.parameter_point.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "parameters: {}", p.join(", "))?;
    }
    writeln!(out, "dim H_λ: {}", r.dim)?;
    writeln!(out, "basis: {{{}}}", r.basis.join(", "))?;
    writeln!(out, "carac: {}", verdict(&r.carac))?;
    writeln!(out, "strong: {}", verdict(&r.strong))?;
    writeln!(out, "coproduct closure: {}", r.coproduct_closure)?;
    writeln!(out, "restriction lemma: {}", verdict(&r.restriction_lemma))?;
    writeln!(
        out,
        "skew-primitive corollary: {} instance(s), {}",
        r.skew_corollary.instances.len(),
        if r.skew_corollary.consistent { "consistent" } else { "VIOLATED" }
    )?;
    writeln!(out, "smash product = H_λ: {}", r.smash_matches_h_lambda)?;
    if let Some(t) = &r.target {
        let imgs: Vec<String> = t.images.iter().map(|(g, w)| format!("{g}↦{w}")).collect();
        let status = if t.onto_h_lambda { "verified" } else { "NOT verified" };
        writeln!(out, "target: {} ({}) {status}", t.algebra, imgs.join(", "))?;
    }
    Ok(())
}

fn check_axioms(name: Option<&str>, presentation: Option<&std::path::Path>, json: bool, out: &mut dyn Write) -> Result<Outcome, Failure> {
    let mut reports = Vec::new();
    let mut build_errors = Vec::new();
    if let Some(path) = presentation {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let spec: PresentationSpec = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        match spec.build() {
            Ok(h) => reports.push(h.check_hopf_axioms()),
            Err(e) => build_errors.push((spec.name.clone(), e.to_string())),
        }
    }
    match name {
        Some("all") => {
            for e in catalog::entries() {
                reports.push(catalog::get_algebra(&e.name)?.check_hopf_axioms());
            }
        }
        Some(n) => reports.push(catalog::get_algebra(n)?.check_hopf_axioms()),
        None if presentation.is_none() => return Err(Failure::Usage("give an algebra name, `all`, or --presentation".into())),
        None => {}
    }
    let passed = build_errors.is_empty() && reports.iter().all(|r| r.is_ok());
    if json {
        let errors: Vec<_> = build_errors.iter().map(|(n, e)| json!({ "algebra": n, "error": e })).collect();
        emit_json(out, &json!({ "passed": passed, "reports": reports, "build_errors": errors }))?;
    } else {
        for (n, e) in &build_errors {
            writeln!(out, "{n:12} FAIL  {e}").map_err(io)?;
        }
        for r in &reports {
            if r.is_ok() {
                writeln!(out, "{:12} pass  ({} laws, dim {})", r.algebra, r.checked.len(), r.dimension).map_err(io)?;
            } else {
                writeln!(out, "{:12} FAIL  {}", r.algebra, r.failed_laws().join(", ")).map_err(io)?;
            }
        }
    }
    Ok(if passed { Outcome::Ok } else { Outcome::Mismatch })
}

#[derive(Serialize)]
struct TaftLine {
    n: u32,
    k: u32,
    dim: Option<usize>,
    verified: bool,
    error: Option<String>,
}

fn lambda_hopf_report(json: bool, out: &mut dyn Write) -> Result<Outcome, Failure> {
    let edges = catalog::diagram_edges()?.iter().map(smash::verify_edge).collect::<Result<Vec<_>, _>>()?;
    let tafts: Vec<TaftLine> = catalog::TAFT_PARAMETERS
        .into_iter()
        .filter(|&(_, k)| k > 1)
        .map(|(n, k)| match smash::taft_witness(n, k) {
            Ok((s, _)) => TaftLine { n, k, dim: Some(s.dim()), verified: true, error: None },
            Err(e) => TaftLine { n, k, dim: None, verified: false, error: Some(e.to_string()) },
        })
        .collect();
    let passed = edges.iter().all(|e| e.verified) && tafts.iter().all(|t| t.verified);
    if json {
        emit_json(out, &json!({ "passed": passed, "edges": edges, "taft": tafts }))?;
    } else {
        for r in &edges {
            let e = &r.edge;
            let mark = if r.verified { "ok" } else { "FAIL" };
            writeln!(out, "{:6} --λ_{{{}}}--> {:8} dim {:2}  {mark}", e.source, e.subgroup.join(","), e.target, r.dim).map_err(io)?;
            if let Some(err) = &r.error {
                writeln!(out, "    {err}").map_err(io)?;
            }
        }
        for t in &tafts {
            let mark = if t.verified { "ok" } else { "FAIL" };
            writeln!(out, "Taft({},{}) --λ--> Taft({},1)  {mark}", t.n, t.k, t.n).map_err(io)?;
            if let Some(err) = &t.error {
                writeln!(out, "    {err}").map_err(io)?;
            }
        }
    }
    Ok(if passed { Outcome::Ok } else { Outcome::Mismatch })
}
