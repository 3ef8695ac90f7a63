//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a mathematical check
//! failed (not level, not admissible, fixture mismatch).

use crate::admissible::file::parse_family;
use crate::admissible::{check_family, check_gd, check_weak, AdmissibleFamily, CondOutcome, Failure};
use crate::construct::{cone_family, effective_construct, matroid_from_matrix, semigroup_presentation, stanley_reisner};
use crate::dpmodule::DualSubmodule;
use crate::duality::{annihilator, inverse_system, Ideal};
use crate::error::Error;
use crate::exactalg::scalar::parse_scalar;
use crate::exactalg::{Side, VarNames};
use crate::fixtures::{run_example, EXAMPLE_IDS};
use crate::quotient::{is_level, LevelOptions, LevelReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;

pub const SEED_ENV: &str = "MACDUAL_SEED";

#[derive(Parser, Debug)]
#[command(name = "macdual", version, about = "Inverse systems and level algebras over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Full,
    Gd,
    Weak,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// Ideal file (optional `vars=` line, then generators) or inline text.
    #[arg(long)]
    ideal: String,
    /// Number of variables or comma-separated names.
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inverse system of an ideal up to a degree.
    Perp {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        cap: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Minimal generators of the annihilator of a dual submodule.
    Ann {
        /// Comma-separated dual generators, e.g. "Y^3,Z^3".
        #[arg(long)]
        dual: String,
        #[arg(long)]
        vars: String,
        /// Keep generators of degree at most this (graded input).
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Levelness of R/I via an Artinian reduction.
    LevelCheck {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long)]
        cap: Option<u32>,
        /// Explicit reduction forms, comma-separated.
        #[arg(long)]
        reduction: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Admissibility conditions of a family file.
    AdmissibleCheck {
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Constructions.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Replay the worked examples.
    Examples {
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// Family over a cone: H_n = X1^(|n|-d) H.
    Cone {
        #[arg(long)]
        vars: String,
        /// Comma-separated dual forms not involving the first d variables.
        #[arg(long)]
        h: String,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long)]
        t0: u32,
        /// Write the family file here instead of stdout.
        #[arg(long)]
        output: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Ideal from a finite graded admissible family.
    Effective {
        #[arg(long)]
        family: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Column matroid and its Stanley-Reisner ideal.
    Matroid {
        /// Rows separated by ';', entries by ',' (rationals), or a file.
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Minimal presentation of a numerical semigroup ring.
    Semigroup {
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Fail {
    Usage(String),
    Check,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Normal output goes to `out`, errors to stderr.
pub fn run(args: &[String], out: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Fail::Check) => 2,
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(cmd: Command, out: Out) -> Result<(), Fail> {
    match cmd {
        Command::Perp { input, cap, format } => perp(&input, cap, format, out),
        Command::Ann { dual, vars, bound, format } => ann(&dual, &vars, bound, format, out),
        Command::LevelCheck { input, dim, seed, trials, cap, reduction, format } => {
            let seed = match seed {
                Some(s) => s,
                None => env_seed()?,
            };
            level_check(&input, dim, seed, trials, cap, reduction.as_deref(), format, out)
        }
        Command::AdmissibleCheck { family, mode, format } => admissible_check(&family, mode, format, out),
        Command::Construct { what } => construct(what, out),
        Command::Examples { id, all, format } => examples(id, all, format, out),
    }
}

fn env_seed() -> Result<u64, Fail> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Fail::Usage(format!("{SEED_ENV} is not an integer: '{v}'"))),
        Err(_) => Ok(LevelOptions::default().seed),
    }
}

/// File contents when `arg` names an existing file, else `arg` itself.
fn file_or_inline(arg: &str) -> Result<String, Fail> {
    let p = std::path::Path::new(arg);
    if p.is_file() {
        Ok(std::fs::read_to_string(p)?)
    } else {
        Ok(arg.to_string())
    }
}

fn read_ideal(a: &IdealArgs) -> Result<(VarNames, Ideal), Fail> {
    let text = file_or_inline(&a.ideal)?;
    let mut vars = a.vars.clone();
    let mut body = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if let Some(rest) = line.strip_prefix("vars=") {
            if vars.is_none() {
                vars = Some(rest.trim().to_string());
            }
        } else if !line.is_empty() {
            body.push(line.to_string());
        }
    }
    let vars = vars.ok_or_else(|| Fail::Usage("no variables given: use --vars or a 'vars=' line".into()))?;
    let names = VarNames::parse_spec(&vars)?;
    let ideal = Ideal::parse(&names, &body.join(","))?;
    Ok((names, ideal))
}

fn emit(out: Out, format: Format, value: Value, text: &str) -> Result<(), Fail> {
    match format {
        Format::Json => {
            let mut v = value;
            v["schema"] = json!(1);
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
        Format::Text => write!(out, "{text}")?,
    }
    Ok(())
}

fn gens_json(names: &VarNames, i: &Ideal) -> Value {
    json!(i.sorted_generators().iter().map(|g| names.format(g)).collect::<Vec<_>>())
}

fn perp(input: &IdealArgs, cap: u32, format: Format, out: Out) -> Result<(), Fail> {
    let (names, ideal) = read_ideal(input)?;
    let p = inverse_system(&ideal, cap);
    let mut by = serde_json::Map::new();
    let mut text = format!("I={}\ncertainty: {}\n", ideal.format(&names), p.certainty);
    for (d, basis) in p.by_degree() {
        let fs: Vec<String> = basis.iter().map(|f| names.format(f)).collect();
        text.push_str(&format!("degree {d}: {}\n", fs.join(", ")));
        by.insert(d.to_string(), json!(fs));
    }
    let v = json!({
        "ideal": gens_json(&names, &ideal),
        "perp": by,
        "dim": p.dim(),
        "certainty": p.certainty.to_string(),
    });
    emit(out, format, v, &text)
}

fn ann(dual: &str, vars: &str, bound: Option<u32>, format: Format, out: Out) -> Result<(), Fail> {
    let names = VarNames::parse_spec(vars)?;
    let gens = names.parse_list(dual, Side::Dual)?;
    let w = DualSubmodule::closure(names.len(), &gens)?;
    let a = annihilator(&w, bound, &[])?;
    let f = a.ideal.format(&names);
    let mut text = format!("ann={f}\n");
    if a.complete_to != u32::MAX {
        text.push_str(&format!("generators complete up to degree {}\n", a.complete_to));
    }
    let v = json!({
        "ideal": gens_json(&names, &a.ideal),
        "complete_to": if a.complete_to == u32::MAX { Value::Null } else { json!(a.complete_to) },
        "dual_dim": w.dim(),
        "certainty": "exact",
    });
    emit(out, format, v, &text)
}

fn level_text(names: &VarNames, ideal: &Ideal, r: &LevelReport) -> String {
    let mut s = format!("I={}\n", ideal.format(names));
    for t in &r.trials {
        let forms: Vec<String> = t.forms.iter().map(|f| names.format(f)).collect();
        let seed = t.seed.map(|x| format!("seed {x}")).unwrap_or_else(|| "explicit".into());
        s.push_str(&format!(
            "{seed}: reduction ({}) HF={:?} socle degree {} type {} dual generator degrees {:?}{}\n",
            forms.join(", "),
            t.report.hilbert,
            t.report.socle_degree,
            t.report.socle_type,
            t.report.dual_degrees,
            if t.report.level { " level" } else { " not level" },
        ));
    }
    s.push_str(&format!(
        "{} (dim {}, multiplicity {}, stable in {}/{} trials)\n",
        if r.level { "LEVEL" } else { "NOT LEVEL" },
        r.dim,
        r.multiplicity,
        r.stability,
        r.trials.len()
    ));
    s
}

#[allow(clippy::too_many_arguments)]
fn level_check(
    input: &IdealArgs,
    dim: usize,
    seed: u64,
    trials: usize,
    cap: Option<u32>,
    reduction: Option<&str>,
    format: Format,
    out: Out,
) -> Result<(), Fail> {
    let (names, ideal) = read_ideal(input)?;
    let reduction = match reduction {
        Some(r) => Some(names.parse_list(r, Side::Ring)?),
        None => None,
    };
    let opts = LevelOptions { seed, trials, cap, reduction, ..Default::default() };
    let r = is_level(&ideal, dim, &opts)?;
    let mut v = serde_json::to_value(&r).expect("json");
    v["ideal"] = gens_json(&names, &ideal);
    for (k, t) in r.trials.iter().enumerate() {
        v["trials"][k]["forms"] = json!(t.forms.iter().map(|f| names.format(f)).collect::<Vec<_>>());
    }
    emit(out, format, v, &level_text(&names, &ideal, &r))?;
    if r.level && r.stability == r.trials.len() {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}

fn failure_json(f: &AdmissibleFamily, x: &Failure) -> Value {
    json!({
        "n": x.n.to_vec(),
        "i": x.i.map(|i| i + 1),
        "j": x.j.map(|j| j + 1),
        "detail": x.detail,
        "witness": x.witness.as_ref().map(|w| f.names().format(w)),
    })
}

fn outcome_json(f: &AdmissibleFamily, c: &CondOutcome) -> Value {
    json!({
        "pass": c.pass(),
        "checked": c.checked,
        "failures": c.failures.iter().map(|x| failure_json(f, x)).collect::<Vec<_>>(),
    })
}

fn outcome_text(f: &AdmissibleFamily, label: &str, c: &CondOutcome) -> String {
    let mut s = format!("{label}: {} ({} checks)\n", if c.pass() { "PASS" } else { "FAIL" }, c.checked);
    for x in c.failures.iter().take(5) {
        s.push_str(&format!("  n={}", x.n));
        if let Some(i) = x.i {
            s.push_str(&format!(" i={}", i + 1));
        }
        if let Some(j) = x.j {
            s.push_str(&format!(" j={}", j + 1));
        }
        s.push_str(&format!(": {}", x.detail));
        if let Some(w) = &x.witness {
            s.push_str(&format!(" witness {}", f.names().format(w)));
        }
        s.push('\n');
    }
    s
}

fn read_family(path: &str) -> Result<AdmissibleFamily, Fail> {
    Ok(parse_family(&file_or_inline(path)?)?)
}

fn admissible_check(path: &str, mode: Mode, format: Format, out: Out) -> Result<(), Fail> {
    let f = read_family(path)?;
    let head = format!("L_{}^{}", f.d(), f.tau());
    let (pass, v, text) = match mode {
        Mode::Full => {
            let r = check_family(&f);
            let text = format!(
                "{}{}{}{head}-admissible: {}\n",
                outcome_text(&f, "condition 1", &r.cond1),
                outcome_text(&f, "condition 2", &r.cond2),
                outcome_text(&f, "condition 3", &r.cond3),
                if r.admissible() { "PASS" } else { "FAIL" }
            );
            let v = json!({
                "mode": "full",
                "admissible": r.admissible(),
                "cond1": outcome_json(&f, &r.cond1),
                "cond2": outcome_json(&f, &r.cond2),
                "cond3": outcome_json(&f, &r.cond3),
            });
            (r.admissible(), v, text)
        }
        Mode::Gd => {
            let c = check_gd(&f)?;
            (c.pass(), json!({"mode": "gd", "result": outcome_json(&f, &c)}), outcome_text(&f, "G_d condition", &c))
        }
        Mode::Weak => {
            let c = check_weak(&f);
            (c.pass(), json!({"mode": "weak", "result": outcome_json(&f, &c)}), outcome_text(&f, "weak condition", &c))
        }
    };
    emit(out, format, v, &text)?;
    if pass {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}

fn parse_matrix(text: &str) -> Result<Vec<Vec<crate::exactalg::Scalar>>, Fail> {
    let rows: Vec<&str> = text.split([';', '\n']).map(str::trim).filter(|r| !r.is_empty()).collect();
    rows.iter()
        .map(|r| {
            r.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| parse_scalar(t).ok_or_else(|| Fail::Usage(format!("bad matrix entry '{t}'"))))
                .collect()
        })
        .collect()
}

fn parse_gens(text: &str) -> Result<Vec<u64>, Fail> {
    text.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| Fail::Usage(format!("bad generator '{t}'"))))
        .collect()
}

fn construct(what: ConstructCmd, out: Out) -> Result<(), Fail> {
    match what {
        ConstructCmd::Cone { vars, h, dim, t0, output, format } => {
            let names = VarNames::parse_spec(&vars)?;
            let hs = names.parse_list(&h, Side::Dual)?;
            let f = cone_family(&names, &hs, dim, t0)?;
            let file = crate::admissible::file::format_family(&f);
            if let Some(p) = &output {
                std::fs::write(p, &file)?;
            }
            let v = json!({ "family": file, "entries": f.entries().len() });
            let text = if output.is_some() { format!("wrote {} entries\n", f.entries().len()) } else { file.clone() };
            emit(out, format, v, &text)
        }
        ConstructCmd::Effective { family, format } => {
            let f = read_family(&family)?;
            let e = effective_construct(&f)?;
            let names = f.names();
            let first = &e.level.trials[0].report;
            let text = format!(
                "I={}\nn*={} s={}\nR/I: HF of reduction {:?}, type {}, {}\n{}\n",
                e.ideal.format(names),
                e.n_star,
                e.s,
                first.hilbert,
                first.socle_type,
                if e.level.level { "level" } else { "not level" },
                if e.extendable { "family extends" } else { "family does not extend" }
            );
            let v = json!({
                "ideal": gens_json(names, &e.ideal),
                "n_star": e.n_star.to_vec(),
                "s": e.s,
                "level": e.level,
                "extendable": e.extendable,
                "certainty": "exact",
            });
            emit(out, format, v, &text)?;
            if e.extendable {
                Ok(())
            } else {
                Err(Fail::Check)
            }
        }
        ConstructCmd::Matroid { matrix, format } => {
            let m = parse_matrix(&file_or_inline(&matrix)?)?;
            let c = matroid_from_matrix(&m)?;
            let sr = stanley_reisner(&c);
            let names = VarNames::indexed(c.vertices());
            let facets: Vec<String> =
                c.facets().iter().map(|f| f.iter().map(usize::to_string).collect::<Vec<_>>().join("")).collect();
            let text = format!("facets: {}\nI_Delta={}\n", facets.join(" "), sr.format(&names));
            let v = json!({ "facets": c.facets(), "ideal": gens_json(&names, &sr) });
            emit(out, format, v, &text)
        }
        ConstructCmd::Semigroup { gens, format } => {
            let w = parse_gens(&gens)?;
            let p = semigroup_presentation(&w)?;
            let names = VarNames::parse_spec(&p.weights.len().to_string())?;
            let names = if p.weights.len() <= 4 {
                VarNames::new(&["x", "y", "z", "w"][..p.weights.len()])?
            } else {
                names
            };
            let bins: Vec<String> = p.binomials().iter().map(|b| names.format(b)).collect();
            let text = format!("weights {:?}\nI=({})\n", p.weights, bins.join(","));
            let v = json!({
                "weights": p.weights,
                "relations": p.relations,
                "ideal": bins,
            });
            emit(out, format, v, &text)
        }
    }
}

fn examples(id: Option<String>, all: bool, format: Format, out: Out) -> Result<(), Fail> {
    let ids: Vec<String> = match (id, all) {
        (Some(i), _) => vec![i],
        (None, true) => EXAMPLE_IDS.iter().map(|s| s.to_string()).collect(),
        (None, false) => return Err(Fail::Usage(format!("pass --id <{}> or --all", EXAMPLE_IDS.join("|")))),
    };
    let mut ok = true;
    let mut text = String::new();
    let mut list = Vec::new();
    for id in &ids {
        match run_example(id) {
            Ok(o) => {
                ok &= o.pass;
                text.push_str(&format!("{}: {}\n", o.id, o.summary));
                for l in &o.lines {
                    text.push_str(&format!("  {l}\n"));
                }
                list.push(json!({"id": o.id, "pass": o.pass, "summary": o.summary, "checks": o.lines}));
            }
            Err(Error::Invalid(m)) if ids.len() == 1 => return Err(Fail::Usage(m)),
            Err(e) => {
                ok = false;
                text.push_str(&format!("{id}: error: {e}\n"));
                list.push(json!({"id": id, "pass": false, "error": e.to_string()}));
            }
        }
    }
    if ids.len() > 1 {
        let passed = list.iter().filter(|v| v["pass"] == json!(true)).count();
        text.push_str(&format!("{passed}/{} examples pass\n", ids.len()));
    }
    emit(out, format, json!({"examples": list, "pass": ok}), &text)?;
    if ok {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}
