//! Command-line interface.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain or resource error,
//! 3 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::coefficients::{c_1g, c_g, dyck_floor_counts, motzkin_floor_counts, FloorCountTable};
use crate::compositions::{
    count_g_compositions, count_mixed_compositions, enumerate_g_compositions,
    enumerate_mixed_compositions, GComposition, MixedComposition,
};
use crate::error::{domain, Error, Result};
use crate::exclusion::{
    cluster_coefficient_via_formula, cluster_coefficients, hofstadter_spectral_data,
    partition_functions, partition_functions_from_determinant, random_spectral_data,
    secular_determinant, secular_determinant_dense, symbolic_spectral_data, trace_power,
    trace_via_formula, ExclusionMatrix, SpectralData,
};
use crate::hofstadter::{
    area_polynomial_via_trace, histogram_polynomial, walk_area_histogram, weyl_expand_power,
};
use crate::json::int_value;
use crate::limits::Limits;
use crate::paths::{enumerate_dyck_bridges, enumerate_motzkin_bridges, tally_by_profile, Step};
use crate::symbolic::{
    expect_integer, parse_rational, rational_string, LaurentPolynomial, MultiPolynomial, Ring,
};
use crate::verify::run_verification;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "lukasiewicz",
    version,
    about = "Exact counts of periodic generalized Dyck and Motzkin paths"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Longest Dyck bridge to enumerate (default 16, or LUKASIEWICZ_MAX_DYCK_LEN).
    #[arg(long, global = true)]
    pub max_dyck_len: Option<usize>,
    /// Longest Motzkin bridge to enumerate (default 14, or LUKASIEWICZ_MAX_MOTZKIN_LEN).
    #[arg(long, global = true)]
    pub max_motzkin_len: Option<usize>,
    /// Longest square-lattice walk to enumerate (default 12, or LUKASIEWICZ_MAX_WALK_LEN).
    #[arg(long, global = true)]
    pub max_walk_len: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List or count g-compositions (or (1,g)-compositions with --mixed).
    Compositions(CompositionArgs),
    /// Multiplicity c_g of a g-composition, or c_{1,g} of a (1,g)-composition.
    Coeff(ProfileArgs),
    /// Per-floor path counts for one profile.
    FloorCounts(ProfileArgs),
    /// Brute-force bridge enumeration.
    Paths {
        #[command(subcommand)]
        action: PathsCommand,
    },
    /// Exclusion matrices: determinants, partition functions, cluster coefficients, traces.
    Exclusion {
        #[command(subcommand)]
        action: ExclusionCommand,
    },
    /// Closed square-lattice walks by algebraic area.
    Hofstadter {
        #[command(subcommand)]
        action: HofstadterCommand,
    },
    /// Run the cross-oracle identity checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct CompositionArgs {
    #[arg(long)]
    pub g: u32,
    /// The integer being composed (N for --mixed).
    #[arg(long)]
    pub n: u32,
    /// (1,g)-compositions instead of g-compositions.
    #[arg(long)]
    pub mixed: bool,
    /// Print only the number of compositions.
    #[arg(long)]
    pub count: bool,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("profile").required(true).args(["comp", "tilde"])))]
pub struct ProfileArgs {
    #[arg(long)]
    pub g: u32,
    /// g-composition parts, e.g. 2,1.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["tilde", "parts"])]
    pub comp: Option<Vec<u32>>,
    /// Horizontal-step parts of a (1,g)-composition.
    #[arg(long, value_delimiter = ',', requires = "parts")]
    pub tilde: Option<Vec<u32>>,
    /// Up-step parts of a (1,g)-composition (empty for the trivial one).
    #[arg(long, value_delimiter = ',', num_args = 0.., requires = "tilde")]
    pub parts: Option<Vec<u32>>,
}

#[derive(Subcommand, Debug)]
pub enum PathsCommand {
    /// List bridges as "start:steps".
    Enumerate(PathArgs),
    /// Group bridges by profile and count them by first step and floor.
    Tally(PathArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FirstStep {
    Up,
    Level,
    Down,
}

#[derive(Args, Debug)]
pub struct PathArgs {
    #[arg(long)]
    pub g: u32,
    /// Number of up steps of a Dyck bridge (length g n).
    #[arg(long, conflicts_with = "length", required_unless_present = "length")]
    pub n: Option<u32>,
    /// Length of a Motzkin bridge.
    #[arg(long)]
    pub length: Option<u32>,
    /// Keep only paths whose first step is of this kind.
    #[arg(long, value_enum)]
    pub first: Option<FirstStep>,
}

#[derive(Subcommand, Debug)]
pub enum ExclusionCommand {
    /// Coefficients of det(I - zM).
    Det(DataArgs),
    /// Partition functions Z(0), Z(1), ...
    Zn(DataArgs),
    /// Cluster coefficients b(1), ..., b(order).
    Bn {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long)]
        order: Option<usize>,
    },
    /// tr M^n by matrix power, by the composition formula and from b(n).
    Trace {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Hofstadter,
}

#[derive(Args, Debug, Clone)]
pub struct DataArgs {
    /// Exclusion order.
    #[arg(long, default_value_t = 2)]
    pub g: u32,
    /// JSON file {"f": [...], "g": [...], "stilde": [...]} with integer or "a/b" entries.
    #[arg(long, conflicts_with_all = ["preset", "random", "symbolic"])]
    pub data: Option<PathBuf>,
    /// Named dataset.
    #[arg(long, value_enum, conflicts_with_all = ["random", "symbolic"])]
    pub preset: Option<Preset>,
    /// Seeded random rational data of size --q.
    #[arg(long, conflicts_with = "symbolic")]
    pub random: bool,
    /// Symbolic data s_k (and t_k for the diagonal) with unit superdiagonal.
    #[arg(long)]
    pub symbolic: bool,
    /// Matrix size (flux denominator for the Hofstadter preset).
    #[arg(long)]
    pub q: Option<usize>,
    /// Flux numerator for the Hofstadter preset.
    #[arg(long, default_value_t = 1)]
    pub p: u64,
    /// Include the diagonal (mixed (1,g) mode) for random or symbolic data.
    #[arg(long)]
    pub mixed: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum HofstadterCommand {
    /// Number of closed walks of length n by algebraic area.
    Area {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = AreaMethod::Weyl)]
        method: AreaMethod,
        /// Run all three methods and fail unless they agree.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AreaMethod {
    Weyl,
    Walks,
    Trace,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub max_n: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// What a command produced: exit status and the text for each stream.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match run(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: match e {
                Error::Consistency(_) => EXIT_VERIFY,
                Error::Domain(_) | Error::Resource(_) => EXIT_DOMAIN,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::from_env();
    if let Some(v) = cli.max_dyck_len {
        l.dyck_len = v;
    }
    if let Some(v) = cli.max_motzkin_len {
        l.motzkin_len = v;
    }
    if let Some(v) = cli.max_walk_len {
        l.walk_len = v;
    }
    l
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    let limits = limits(cli);
    match &cli.command {
        Command::Compositions(a) => compositions(a, fmt),
        Command::Coeff(a) => coeff(a, fmt),
        Command::FloorCounts(a) => floor_counts(a, fmt),
        Command::Paths { action } => paths(action, fmt, &limits),
        Command::Exclusion { action } => exclusion(action, fmt),
        Command::Hofstadter {
            action: HofstadterCommand::Area { n, method, check },
        } => hofstadter_area(*n, *method, *check, fmt, &limits),
        Command::Verify(a) => verify(a, fmt, &limits),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn join(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn no_csv<T>(what: &str) -> Result<T> {
    domain(format!("csv output is not available for {what}"))
}

fn compositions(a: &CompositionArgs, fmt: Format) -> Result<Outcome> {
    if a.count {
        let n = if a.mixed {
            count_mixed_compositions(a.n, a.g)?
        } else {
            count_g_compositions(a.n, a.g)?
        };
        return Ok(Outcome::ok(format!("{n}\n")));
    }
    let mut out = String::new();
    if a.mixed {
        let list = enumerate_mixed_compositions(a.n, a.g)?;
        match fmt {
            Format::Json => out = to_json(&list),
            Format::Csv => {
                out.push_str("tilde,parts\n");
                for c in &list {
                    let _ = writeln!(
                        out,
                        "{},{}",
                        csv_field(&join(c.tilde())),
                        csv_field(&join(c.parts()))
                    );
                }
            }
            Format::Text => list.iter().for_each(|c| {
                let _ = writeln!(out, "{c}");
            }),
        }
    } else {
        let list = enumerate_g_compositions(a.n, a.g)?;
        match fmt {
            Format::Json => out = to_json(&list),
            Format::Csv => list.iter().for_each(|c| {
                let _ = writeln!(out, "{}", join(c.parts()));
            }),
            Format::Text => list.iter().for_each(|c| {
                let _ = writeln!(out, "{c}");
            }),
        }
    }
    Ok(Outcome::ok(out))
}

enum Profile {
    Dyck(GComposition),
    Mixed(MixedComposition),
}

fn profile(a: &ProfileArgs) -> Result<Profile> {
    match (&a.comp, &a.tilde, &a.parts) {
        (Some(c), None, None) => Ok(Profile::Dyck(GComposition::new(c.clone(), a.g)?)),
        (None, Some(t), Some(p)) => Ok(Profile::Mixed(MixedComposition::new(
            t.clone(),
            p.clone(),
            a.g,
        )?)),
        _ => domain("give either --comp, or --tilde together with --parts"),
    }
}

fn coeff(a: &ProfileArgs, fmt: Format) -> Result<Outcome> {
    let (c, mult, key) = match profile(a)? {
        Profile::Dyck(comp) => (c_g(&comp)?, a.g * comp.total(), "gn_c"),
        Profile::Mixed(mc) => (c_1g(&mc)?, mc.total(), "n_c"),
    };
    let count = expect_integer(&(&c * BigRational::from_integer(BigInt::from(mult))), key)?;
    let out = match fmt {
        Format::Json => {
            let mut m = Map::new();
            m.insert("c".into(), Value::String(rational_string(&c)));
            m.insert(key.into(), int_value(&count));
            to_json(&m)
        }
        Format::Csv => format!("c,{key}\n{},{count}\n", rational_string(&c)),
        Format::Text => format!(
            "c = {}\n{} = {count}\n",
            rational_string(&c),
            key.replace('_', " ")
        ),
    };
    Ok(Outcome::ok(out))
}

fn table_csv(out: &mut String, prefix: Option<&str>, t: &FloorCountTable) {
    for f in &t.floors {
        if let Some(p) = prefix {
            let _ = write!(out, "{},", csv_field(p));
        }
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            f.i, f.up, f.down, f.horizontal, f.any
        );
    }
}

fn table_text(out: &mut String, t: &FloorCountTable) {
    let _ = writeln!(out, "floor  up  down  horizontal  any");
    for f in &t.floors {
        let _ = writeln!(
            out,
            "{:>5}  {}  {}  {}  {}",
            f.i, f.up, f.down, f.horizontal, f.any
        );
    }
    let _ = writeln!(out, "total  {}", t.total);
}

fn floor_counts(a: &ProfileArgs, fmt: Format) -> Result<Outcome> {
    let table = match profile(a)? {
        Profile::Dyck(comp) => dyck_floor_counts(&comp)?,
        Profile::Mixed(mc) => motzkin_floor_counts(&mc)?,
    };
    let mut out = String::new();
    match fmt {
        Format::Json => out = to_json(&table),
        Format::Csv => {
            out.push_str("i,up,down,horizontal,any\n");
            table_csv(&mut out, None, &table);
        }
        Format::Text => table_text(&mut out, &table),
    }
    Ok(Outcome::ok(out))
}

fn paths(cmd: &PathsCommand, fmt: Format, limits: &Limits) -> Result<Outcome> {
    let (PathsCommand::Enumerate(a) | PathsCommand::Tally(a)) = cmd;
    let mut list = match (a.n, a.length) {
        (Some(n), None) => enumerate_dyck_bridges(n, a.g, limits)?,
        (None, Some(len)) => enumerate_motzkin_bridges(len, a.g, limits)?,
        _ => return domain("give exactly one of --n (Dyck) or --length (Motzkin)"),
    };
    if let Some(first) = a.first {
        let want = match first {
            FirstStep::Up => Step::Up,
            FirstStep::Level => Step::Level,
            FirstStep::Down => Step::Down,
        };
        list.retain(|p| p.first_step() == want);
    }
    let mut out = String::new();
    match cmd {
        PathsCommand::Enumerate(_) => match fmt {
            Format::Json => out = to_json(&list),
            Format::Csv | Format::Text => list.iter().for_each(|p| {
                let _ = writeln!(out, "{p}");
            }),
        },
        PathsCommand::Tally(_) => {
            let tally = tally_by_profile(&list)?;
            match fmt {
                Format::Json => {
                    let rows: Vec<Value> = tally
                        .iter()
                        .map(|(profile, table)| {
                            json!({
                                "profile": profile.to_string(),
                                "composition": profile,
                                "total": int_value(&table.total),
                                "floors": table.floors,
                            })
                        })
                        .collect();
                    out = to_json(&rows);
                }
                Format::Csv => {
                    out.push_str("profile,i,up,down,horizontal,any\n");
                    for (profile, table) in &tally {
                        table_csv(&mut out, Some(&profile.to_string()), table);
                    }
                }
                Format::Text => {
                    for (profile, table) in &tally {
                        let _ = writeln!(out, "{profile}");
                        table_text(&mut out, table);
                    }
                }
            }
        }
    }
    Ok(Outcome::ok(out))
}

/// How ring elements print.
pub trait Render {
    fn render(&self) -> String;
}

impl Render for BigRational {
    fn render(&self) -> String {
        rational_string(self)
    }
}

impl Render for LaurentPolynomial {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Render for MultiPolynomial {
    fn render(&self) -> String {
        self.to_string()
    }
}

fn parse_entries(v: Option<&Value>, key: &str) -> Result<Option<Vec<BigRational>>> {
    let Some(v) = v else { return Ok(None) };
    let Value::Array(items) = v else {
        return domain(format!("\"{key}\" must be an array"));
    };
    items
        .iter()
        .map(|item| match item {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => parse_rational(&n.to_string()).map_err(|_| {
                Error::Domain(format!(
                    "\"{key}\" entry {n} is not an integer; write fractions as \"a/b\""
                ))
            }),
            other => domain(format!("\"{key}\" entry {other} is not a number")),
        })
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

fn load_data(path: &PathBuf, g: u32) -> Result<SpectralData<BigRational>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Domain(format!("{} is not valid JSON: {e}", path.display())))?;
    let f = parse_entries(v.get("f"), "f")?.ok_or_else(|| Error::Domain("missing \"f\"".into()))?;
    let gd =
        parse_entries(v.get("g"), "g")?.ok_or_else(|| Error::Domain("missing \"g\"".into()))?;
    let st = parse_entries(v.get("stilde"), "stilde")?;
    SpectralData::new(g, f, gd, st)
}

fn exclusion(cmd: &ExclusionCommand, fmt: Format) -> Result<Outcome> {
    let data = match cmd {
        ExclusionCommand::Det(d) | ExclusionCommand::Zn(d) => d,
        ExclusionCommand::Bn { data, .. } | ExclusionCommand::Trace { data, .. } => data,
    };
    let mut meta = Map::new();
    meta.insert("g".into(), json!(data.g));
    let need_q = || {
        data.q
            .ok_or_else(|| Error::Domain("--q is required".into()))
    };
    if let Some(path) = &data.data {
        meta.insert("source".into(), json!(path.display().to_string()));
        exclusion_with(cmd, load_data(path, data.g)?, meta, fmt)
    } else if let Some(Preset::Hofstadter) = data.preset {
        if data.g != 2 {
            return domain("the Hofstadter preset has g = 2");
        }
        let q = need_q()?;
        meta.insert("source".into(), json!("hofstadter"));
        meta.insert("p".into(), json!(data.p));
        exclusion_with(cmd, hofstadter_spectral_data(data.p, q as u64)?, meta, fmt)
    } else if data.random {
        meta.insert("source".into(), json!("random"));
        meta.insert("seed".into(), json!(data.seed));
        exclusion_with(
            cmd,
            random_spectral_data(need_q()?, data.g, data.mixed, data.seed)?,
            meta,
            fmt,
        )
    } else if data.symbolic {
        meta.insert("source".into(), json!("symbolic"));
        exclusion_with(
            cmd,
            symbolic_spectral_data(need_q()?, data.g, data.mixed)?,
            meta,
            fmt,
        )
    } else {
        domain("choose a dataset with --data, --preset, --random or --symbolic")
    }
}

fn render_all<R: Render>(v: &[R]) -> Vec<String> {
    v.iter().map(Render::render).collect()
}

fn exclusion_with<R: Ring + Render>(
    cmd: &ExclusionCommand,
    sd: SpectralData<R>,
    mut meta: Map<String, Value>,
    fmt: Format,
) -> Result<Outcome> {
    meta.insert("q".into(), json!(sd.q()));
    meta.insert("mixed".into(), json!(sd.is_mixed()));
    let m = ExclusionMatrix::from_spectral(&sd);
    let (key, values): (&str, Vec<String>) = match cmd {
        ExclusionCommand::Det(_) => {
            let det = secular_determinant(&m);
            if det != secular_determinant_dense(&m) {
                return Err(Error::Consistency(
                    "band recurrence and dense determinant differ".into(),
                ));
            }
            ("det", render_all(&det))
        }
        ExclusionCommand::Zn(_) => {
            let z = partition_functions(&sd);
            let from_det = partition_functions_from_determinant(
                &secular_determinant(&m),
                sd.g(),
                sd.is_mixed(),
            )?;
            if z != from_det {
                return Err(Error::Consistency(
                    "partition functions differ from determinant coefficients".into(),
                ));
            }
            ("Z", render_all(&z))
        }
        ExclusionCommand::Bn { order, .. } => {
            let z = partition_functions(&sd);
            let order = order.unwrap_or(z.len() - 1).max(1);
            let b = cluster_coefficients(&z, order)?;
            for (idx, v) in b.iter().enumerate() {
                let via = cluster_coefficient_via_formula(&sd, idx as u32 + 1)?;
                if via != *v {
                    return Err(Error::Consistency(format!(
                        "b({}) from the series logarithm differs from the composition sum",
                        idx + 1
                    )));
                }
            }
            ("b", render_all(&b))
        }
        ExclusionCommand::Trace { n, .. } => {
            let direct = trace_power(&m, *n as usize)?;
            let formula = trace_via_formula(&sd, *n)?;
            meta.insert("n".into(), json!(n));
            if direct != formula {
                return Err(Error::Consistency(format!(
                    "tr M^{n}: matrix power {} vs composition formula {}",
                    direct.render(),
                    formula.render()
                )));
            }
            ("trace", vec![direct.render()])
        }
    };
    let out = match fmt {
        Format::Json => {
            meta.insert(key.into(), json!(values));
            to_json(&meta)
        }
        Format::Csv => {
            let mut s = format!("index,{key}\n");
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{i},{}", csv_field(v));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (i, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{key}[{i}] = {v}");
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn area_counts(p: &LaurentPolynomial) -> Result<Vec<(i64, BigInt)>> {
    p.terms()
        .map(|(a, c)| expect_integer(c, &format!("C({a})")).map(|c| (a, c)))
        .collect()
}

fn area_by(method: AreaMethod, n: u32, limits: &Limits) -> Result<Vec<(i64, BigInt)>> {
    let poly = match method {
        AreaMethod::Weyl => weyl_expand_power(n),
        AreaMethod::Walks => histogram_polynomial(&walk_area_histogram(n, limits)?),
        AreaMethod::Trace => area_polynomial_via_trace(n)?,
    };
    area_counts(&poly)
}

fn hofstadter_area(
    n: u32,
    method: AreaMethod,
    check: bool,
    fmt: Format,
    limits: &Limits,
) -> Result<Outcome> {
    let counts = area_by(method, n, limits)?;
    let mut stderr = String::new();
    if check {
        for other in [AreaMethod::Weyl, AreaMethod::Walks, AreaMethod::Trace] {
            if other != method && area_by(other, n, limits)? != counts {
                return Err(Error::Consistency(format!(
                    "area counts for n = {n}: {method:?} and {other:?} disagree"
                )));
            }
        }
        stderr = format!("weyl, walks and trace agree for n = {n}\n");
    }
    let mut out = String::new();
    match fmt {
        Format::Json => {
            let mut m = Map::new();
            for (a, c) in &counts {
                m.insert(a.to_string(), int_value(c));
            }
            out = to_json(&m);
        }
        Format::Csv => {
            out.push_str("area,count\n");
            for (a, c) in &counts {
                let _ = writeln!(out, "{a},{c}");
            }
        }
        Format::Text => {
            for (a, c) in &counts {
                let _ = writeln!(out, "{a:>4}  {c}");
            }
        }
    }
    Ok(Outcome {
        code: EXIT_OK,
        stdout: out,
        stderr,
    })
}

fn verify(a: &VerifyArgs, fmt: Format, limits: &Limits) -> Result<Outcome> {
    let report = run_verification(a.g, a.max_n, a.seed, limits);
    let out = match fmt {
        Format::Json => to_json(&report),
        Format::Csv => return no_csv("verify"),
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                let _ = write!(s, "{mark}  {}  [{}]", c.name, c.inputs);
                if let Some(d) = &c.detail {
                    let _ = write!(s, "  {d}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome {
        code: if report.passed { EXIT_OK } else { EXIT_VERIFY },
        stdout: out,
        stderr: String::new(),
    })
}
