//! The `mckay` command line.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::catalog::{
    all_pairs, build_catalog_group, canonical, catalog_entry, pair_data, shipped_groups, Expected, PairEntry,
};
use crate::chars::GroupCharacters;
use crate::exact_arith::linalg::{IntMatrix, RatMatrix};
use crate::exact_arith::{Cyclotomic, Rational};
use crate::fold::{verify_pair, Convention, FoldResult};
use crate::group::{FiniteMatrixGroup, Mat2, DEFAULT_CAP};
use crate::mckay::{
    classify_cartan, dual_basis, intersection_matrix_b, mckay_matrix, render_dynkin, Classification, MatrixJson,
};
use crate::report::{expected_ok, verify_group, verify_pair_entry, GroupReport, PairReport};
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "mckay",
    version,
    about = "McKay and McKay-Slodowy correspondence for finite subgroups of SL2(C)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Write the result as JSON to this path.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Draw Dynkin diagrams.
    #[arg(long)]
    ascii_dynkin: bool,
    /// Reserved; every computation is deterministic.
    #[arg(long, value_name = "INT")]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the shipped groups and pairs.
    Catalog {
        #[command(flatten)]
        common: Common,
    },
    /// Print the character table of a group.
    Chartable {
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// McKay matrix, Cartan matrix and Dynkin type of a group.
    Mckay {
        group: String,
        /// Include the trivial character (affine diagram).
        #[arg(long)]
        affine: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Fold the McKay data of H along G/H. H is a catalog name, a pair
    /// label from `catalog`, or `@file.json` with generators.
    Fold {
        g: String,
        h: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check every shipped group and pair; exits 1 on any failure.
    VerifyAll {
        #[command(flatten)]
        common: Common,
    },
    /// Analyse a group given by generators in a JSON file.
    Group {
        /// Input file: {"m": order, "generators": [[a, b, c, d], ...]}.
        #[arg(long = "json", value_name = "FILE")]
        input: PathBuf,
        /// Write the report as JSON to this path.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long)]
        ascii_dynkin: bool,
        #[arg(long, value_name = "INT")]
        seed: Option<u64>,
    },
}

/// Runs the CLI on `argv` (program name first) and returns the exit code:
/// 0 on success, 1 on a failed verification or computation, 2 on bad input.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    run(argv, &mut out)
}

/// Like [`cli_main`] but writing normal output to `out`.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::UnknownCatalogName(_) | Error::Parse(_) | Error::Json(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Catalog { common } => catalog(&common, out),
        Command::Chartable { group, common } => chartable(&group, &common, out),
        Command::Mckay { group, affine, common } => mckay(&group, affine, &common, out),
        Command::Fold { g, h, common } => fold(&g, &h, &common, out),
        Command::VerifyAll { common } => verify_all(&common, out),
        Command::Group {
            input,
            out: path,
            ascii_dynkin,
            ..
        } => group(&input, path.as_deref(), ascii_dynkin, out),
    }
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

fn format_rows(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
            format!("  [{}]\n", cells.join(" "))
        })
        .collect()
}

fn format_int(m: &IntMatrix) -> String {
    format_rows(
        &m.iter()
            .map(|r| r.iter().map(i64::to_string).collect())
            .collect::<Vec<_>>(),
    )
}

fn format_rat(m: &RatMatrix) -> String {
    format_rows(
        &m.iter()
            .map(|r| r.iter().map(Rational::to_string).collect())
            .collect::<Vec<_>>(),
    )
}

fn type_name(c: &Classification) -> String {
    match c.dynkin {
        Some(t) => format!("{t} ({})", serde_json::to_value(c.kind).unwrap().as_str().unwrap()),
        None => "unknown".to_string(),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e)
}

fn load(name: &str) -> Result<GroupCharacters> {
    GroupCharacters::compute(Arc::new(build_catalog_group(name)?))
}

fn catalog(common: &Common, out: &mut dyn Write) -> Result<bool> {
    let groups = shipped_groups();
    let pairs = all_pairs()?;
    writeln!(out, "groups").map_err(io)?;
    writeln!(out, "  {:<8} {:>6} {:>8}  type", "name", "order", "classes").map_err(io)?;
    for g in &groups {
        writeln!(
            out,
            "  {:<8} {:>6} {:>8}  {}",
            g.name, g.expected_order, g.expected_classes, g.expected_type
        )
        .map_err(io)?;
    }
    writeln!(out, "pairs").map_err(io)?;
    let mut pair_json = Vec::new();
    for p in &pairs {
        let expected = expected_names(p);
        writeln!(
            out,
            "  {:<18} {}",
            p.label(),
            if expected.is_empty() {
                "discovered".to_string()
            } else {
                expected.join("|")
            }
        )
        .map_err(io)?;
        pair_json.push(json!({"g": p.g, "h": p.h, "expected": expected}));
    }
    if let Some(path) = &common.json {
        let groups_json: Vec<_> = groups
            .iter()
            .map(|g| {
                json!({
                    "name": g.name,
                    "order": g.expected_order,
                    "classes": g.expected_classes,
                    "type": g.expected_type.to_string(),
                })
            })
            .collect();
        write_json(path, &json!({"groups": groups_json, "pairs": pair_json}))?;
    }
    Ok(true)
}

fn expected_names(p: &PairEntry) -> Vec<String> {
    match &p.expected {
        Expected::Any => Vec::new(),
        Expected::Types(ts) => ts.iter().map(|t| t.to_string()).collect(),
    }
}

fn chartable(name: &str, common: &Common, out: &mut dyn Write) -> Result<bool> {
    let g = load(name)?;
    print_table(&canonical(name)?, &g, out)?;
    if let Some(path) = &common.json {
        write_json(path, &g.table.to_json())?;
    }
    Ok(true)
}

fn print_table(name: &str, g: &GroupCharacters, out: &mut dyn Write) -> Result<()> {
    let t = &g.table;
    let cls = &g.classes;
    writeln!(
        out,
        "group {name}  order {}  classes {}  field Q(zeta_{})  prime {}",
        g.group.len(),
        cls.len(),
        cls.field_order(),
        t.dixon_trace().prime
    )
    .map_err(io)?;
    let join = |v: Vec<String>| v.join(" ");
    writeln!(
        out,
        "class sizes: {}",
        join(cls.sizes().iter().map(|s| s.to_string()).collect())
    )
    .map_err(io)?;
    writeln!(
        out,
        "rep orders:  {}",
        join(cls.representative_orders().iter().map(|s| s.to_string()).collect())
    )
    .map_err(io)?;
    for (i, chi) in t.irreducibles().iter().enumerate() {
        let values: Vec<String> = chi.values().iter().map(Cyclotomic::to_string).collect();
        writeln!(out, "chi_{i} (degree {}): {}", t.degrees()[i], values.join(", ")).map_err(io)?;
    }
    Ok(())
}

fn degree_labels(degrees: &[u64]) -> Vec<String> {
    degrees.iter().map(u64::to_string).collect()
}

fn mckay_report(g: &GroupCharacters, affine: bool, out: &mut dyn Write) -> Result<serde_json::Value> {
    let a = mckay_matrix(&g.table, &g.natural, affine)?;
    let cartan = a.cartan();
    let class = classify_cartan(&cartan);
    let labels = degree_labels(&a.degrees);
    writeln!(out, "type {}", type_name(&class)).map_err(io)?;
    writeln!(out, "2I - A:").map_err(io)?;
    write!(out, "{}", format_int(&cartan)).map_err(io)?;
    write!(out, "{}", render_dynkin(&cartan, &labels)).map_err(io)?;
    let mut report = json!({
        "affine": affine,
        "A": MatrixJson { labels: labels.clone(), rows: a.entries.clone() },
        "two_I_minus_A": MatrixJson { labels: labels.clone(), rows: cartan },
        "cartan": class,
    });
    if !affine {
        let b = intersection_matrix_b(&g.table, &g.natural)?;
        let x = dual_basis(&b)?;
        writeln!(out, "dual basis (columns E*):").map_err(io)?;
        write!(out, "{}", format_rat(&x)).map_err(io)?;
        report["B"] = serde_json::to_value(MatrixJson { labels, rows: b })?;
        report["dual_basis"] = x
            .iter()
            .map(|r| r.iter().map(|q| q.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into();
    }
    Ok(report)
}

fn mckay(name: &str, affine: bool, common: &Common, out: &mut dyn Write) -> Result<bool> {
    let g = load(name)?;
    writeln!(out, "group {}  order {}", canonical(name)?, g.group.len()).map_err(io)?;
    let mut report = mckay_report(&g, affine, out)?;
    report["group"] = canonical(name)?.into();
    if let Some(path) = &common.json {
        write_json(path, &report)?;
    }
    Ok(true)
}

fn print_fold(label: &str, r: &FoldResult, diagram: bool, out: &mut dyn Write) -> Result<()> {
    let orbits: Vec<String> = r
        .orbits
        .iter()
        .map(|o| format!("{{{}}}", o.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    writeln!(out, "fold {label}  n = {}", r.n).map_err(io)?;
    writeln!(out, "orbits: {}", orbits.join(" ")).map_err(io)?;
    writeln!(
        out,
        "f: {}",
        r.f.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
    )
    .map_err(io)?;
    writeln!(out, "P:").map_err(io)?;
    write!(out, "{}", format_rat(&r.p)).map_err(io)?;
    writeln!(out, "D:").map_err(io)?;
    write!(out, "{}", format_rat(&r.d)).map_err(io)?;
    writeln!(out, "C:").map_err(io)?;
    write!(out, "{}", format_int(&r.c)).map_err(io)?;
    writeln!(out, "2I - C:").map_err(io)?;
    write!(out, "{}", format_int(&r.cartan_matrix)).map_err(io)?;
    writeln!(out, "type {}", type_name(&r.cartan)).map_err(io)?;
    if diagram && !r.cartan_matrix.is_empty() {
        write!(out, "{}", render_dynkin(&r.cartan_matrix, &r.node_labels())).map_err(io)?;
    }
    let v = &r.verdicts;
    let convention = match v.convention {
        Convention::Row => "row",
        Convention::Column => "column",
        Convention::Fail => "fail",
    };
    writeln!(
        out,
        "2I - C = -D: {convention}{}",
        if v.conventions_coincide {
            " (both weightings agree)"
        } else {
            ""
        }
    )
    .map_err(io)?;
    let flags = [
        ("main_identity", v.main_identity),
        ("consistency_square", v.consistency_square),
        ("mackey", v.mackey),
        ("frobenius", v.frobenius),
        ("ind_constant_on_orbits", v.ind_constant_on_orbits),
        ("b_invariant", v.b_invariant),
        ("homomorphism", v.homomorphism),
        ("representative_independent", v.representative_independent),
        ("weights_divide", v.weights_divide),
        ("integrality", v.integrality),
        ("finite_type", v.finite_type),
    ];
    for (name, ok) in flags {
        writeln!(out, "  {name}: {}", if ok { "ok" } else { "FAIL" }).map_err(io)?;
    }
    if let Some(ok) = v.degenerate {
        writeln!(out, "  degenerate: {}", if ok { "ok" } else { "FAIL" }).map_err(io)?;
    }
    for f in &r.failures {
        writeln!(out, "  failure: {f}").map_err(io)?;
    }
    Ok(())
}

fn fold(g_name: &str, h_name: &str, common: &Common, out: &mut dyn Write) -> Result<bool> {
    let g_canon = canonical(g_name)?;
    let entry = resolve_pair(&g_canon, h_name)?;
    let g = Arc::new(build_catalog_group(&g_canon)?);
    let data = pair_data(g, &entry.h_generators)?;
    let result = verify_pair(&data.pair, &data.h, &data.g)?;
    print_fold(&entry.label(), &result, common.ascii_dynkin, out)?;
    let ok = expected_ok(&entry.expected, &result) && result.verdicts.identities_hold();
    if let Some(path) = &common.json {
        write_json(path, &result)?;
    }
    Ok(ok)
}

fn resolve_pair(g: &str, h: &str) -> Result<PairEntry> {
    if let Some(path) = h.strip_prefix('@') {
        let input = read_group_input(Path::new(path))?;
        return Ok(PairEntry {
            g: g.to_string(),
            h: path.to_string(),
            h_generators: input,
            expected: Expected::Any,
            source: crate::catalog::PairSource::Discovered,
        });
    }
    let h_canon = canonical(h).ok();
    let known = all_pairs()?
        .into_iter()
        .find(|p| p.g == g && (p.h.eq_ignore_ascii_case(h) || h_canon.as_deref() == Some(p.h.as_str())));
    if let Some(p) = known {
        return Ok(p);
    }
    let entry = catalog_entry(h)?;
    Ok(PairEntry {
        g: g.to_string(),
        h: entry.name,
        h_generators: entry.generators,
        expected: Expected::Any,
        source: crate::catalog::PairSource::Discovered,
    })
}

#[derive(Serialize)]
struct VerifyAllJson<'a> {
    groups: &'a [GroupReport],
    pairs: &'a [PairReport],
    pass: bool,
}

fn verify_all(common: &Common, out: &mut dyn Write) -> Result<bool> {
    let mut groups = Vec::new();
    let mut pass = true;
    for entry in shipped_groups() {
        let r = verify_group(&entry)?;
        let c = &r.checks;
        writeln!(
            out,
            "group {:<6} order {:>3}  {:<8} {:<12} orth={} null={} negdef={} {}",
            r.name,
            r.order,
            r.classification
                .dynkin
                .map(|t| t.to_string())
                .unwrap_or_else(|| "unknown".into()),
            r.affine_classification
                .dynkin
                .map(|t| t.to_string())
                .unwrap_or_else(|| "unknown".into()),
            flag(c.orthogonality && c.degree_sum),
            flag(c.affine_null_vector),
            flag(c.b_negative_definite),
            if r.pass() { "PASS" } else { "FAIL" },
        )
        .map_err(io)?;
        pass &= r.pass();
        groups.push(r);
    }
    let mut pairs = Vec::new();
    for entry in all_pairs()? {
        let r = verify_pair_entry(&entry)?;
        let v = &r.result.verdicts;
        writeln!(
            out,
            "pair  {:<18} n={:<2} {:<8} D={:<5} identities={} {}",
            entry.label(),
            r.result.n,
            r.result
                .cartan
                .dynkin
                .map(|t| t.to_string())
                .unwrap_or_else(|| "unknown".into()),
            match v.convention {
                Convention::Row => "row",
                Convention::Column => "column",
                Convention::Fail => "fail",
            },
            flag(v.identities_hold()),
            if r.pass() { "PASS" } else { "FAIL" },
        )
        .map_err(io)?;
        if common.ascii_dynkin && !r.result.cartan_matrix.is_empty() {
            write!(
                out,
                "{}",
                render_dynkin(&r.result.cartan_matrix, &r.result.node_labels())
            )
            .map_err(io)?;
        }
        pass &= r.pass();
        pairs.push(r);
    }
    let failures = groups.iter().filter(|g| !g.pass()).count() + pairs.iter().filter(|p| !p.pass()).count();
    writeln!(
        out,
        "{} groups, {} pairs, {failures} failures",
        groups.len(),
        pairs.len()
    )
    .map_err(io)?;
    if let Some(path) = &common.json {
        write_json(
            path,
            &VerifyAllJson {
                groups: &groups,
                pairs: &pairs,
                pass,
            },
        )?;
    }
    Ok(pass)
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum EntryJson {
    Int(i64),
    Full(Cyclotomic),
    Bare { terms: Vec<(u64, i64, i64)> },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupInput {
    Catalog { catalog: String },
    Generators { m: u32, generators: Vec<[EntryJson; 4]> },
}

fn entry_value(e: &EntryJson, m: u32) -> Result<Cyclotomic> {
    match e {
        EntryJson::Int(n) => Cyclotomic::from_integer(m, *n),
        EntryJson::Full(c) => Ok(c.clone()),
        EntryJson::Bare { terms } => {
            let mut ts = Vec::with_capacity(terms.len());
            for &(k, num, den) in terms {
                if den == 0 {
                    return Err(Error::Parse("zero denominator".into()));
                }
                ts.push((k, crate::exact_arith::rational(num, den)));
            }
            Cyclotomic::from_terms(m, &ts)
        }
    }
}

/// Generators from a group input file; `{"catalog": name}` is accepted as
/// shorthand.
fn read_group_input(path: &Path) -> Result<Vec<Mat2>> {
    let text = std::fs::read_to_string(path)?;
    let input: GroupInput =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    match input {
        GroupInput::Catalog { catalog } => Ok(catalog_entry(&catalog)?.generators),
        GroupInput::Generators { m, generators } => generators
            .iter()
            .map(|[a, b, c, d]| {
                Mat2::new(
                    entry_value(a, m)?,
                    entry_value(b, m)?,
                    entry_value(c, m)?,
                    entry_value(d, m)?,
                )
            })
            .collect(),
    }
}

fn group(input: &Path, json_out: Option<&Path>, diagram: bool, out: &mut dyn Write) -> Result<bool> {
    let gens = read_group_input(input)?;
    let g = GroupCharacters::compute(Arc::new(FiniteMatrixGroup::closure(&gens, DEFAULT_CAP)?))?;
    let name = input.display().to_string();
    print_table(&name, &g, out)?;
    let mut report = mckay_report(&g, false, out)?;
    let affine = mckay_matrix(&g.table, &g.natural, true)?;
    let affine_class = classify_cartan(&affine.cartan());
    writeln!(out, "affine type {}", type_name(&affine_class)).map_err(io)?;
    if diagram {
        write!(
            out,
            "{}",
            render_dynkin(&affine.cartan(), &degree_labels(&affine.degrees))
        )
        .map_err(io)?;
    }
    report["order"] = g.group.len().into();
    report["table"] = serde_json::to_value(g.table.to_json())?;
    report["affine_cartan"] = serde_json::to_value(affine_class)?;
    if let Some(path) = json_out {
        write_json(path, &report)?;
    }
    Ok(true)
}
