use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fixloc::certify::{certify_parsed, Status};
use fixloc::genus::{chi_vector, ChiValue};
use fixloc::localization::chern_table;
use fixloc::report::Value;
use fixloc::reproduce::{reproduce_theorem, search_weights, SearchConfig};
use fixloc::{fixtures, parse_dataset, ParsedDataset};
use serde_json::json;

#[derive(Parser)]
#[command(name = "fixloc", version, about = "Fixed-point data of circle actions: certificates, genera, Chern numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print only the verdict line.
    #[arg(long, global = true)]
    quiet: bool,

    /// Omit the version banner from text output.
    #[arg(long, global = true)]
    no_banner: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check on a dataset file.
    Verify { path: PathBuf },
    /// Reduce the chi_y coefficients of a dataset file.
    Genus { path: PathBuf },
    /// Chern numbers of a dataset file by localization.
    Chern { path: PathBuf },
    /// Case analysis excluding four fixed points in dimension 10.
    #[command(name = "prove-dim10")]
    ProveDim10,
    /// Exhaustive search over bounded weights.
    Search {
        /// Largest absolute weight.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        /// Half the real dimension.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..=12))]
        n: u64,
        /// Number of fixed points.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=8))]
        points: u64,
    },
    /// Write the built-in fixtures as dataset files.
    Examples { dir: PathBuf },
}

/// What a command produced: a verdict, a text body and a JSON body.
struct Output {
    ok: bool,
    verdict: String,
    text: String,
    json: serde_json::Value,
}

fn verdict_line(ok: bool, what: &str) -> String {
    let s = if ok { Status::Pass } else { Status::Fail };
    format!("verdict: {} ({what})", s.as_str().to_uppercase())
}

fn load(path: &Path) -> Result<ParsedDataset, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_dataset(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn verify(path: &Path) -> Result<Output, String> {
    let parsed = load(path)?;
    let cert = certify_parsed(&parsed);
    Ok(Output {
        ok: cert.passed(),
        verdict: cert.verdict_line(),
        text: cert.to_text(),
        json: cert.to_json(),
    })
}

fn genus(path: &Path) -> Result<Output, String> {
    let d = load(path)?.dataset;
    let chi = chi_vector(&d);
    let profile = d.n_profile();
    let ok = chi.integers().is_ok();
    let label = d.display_label().to_string();

    let mut text = format!("chi_y genus of {label} (n = {})\n", d.n());
    text += &format!("  {:<4} {:>12} {:>6}\n", "i", "chi^i", "N_i");
    for (i, v) in chi.values().iter().enumerate() {
        text += &format!("  {i:<4} {:>12} {:>6}\n", v.to_string(), profile.counts()[i]);
    }
    let chi_json: Vec<serde_json::Value> = chi.values().iter().map(chi_value_json).collect();
    let mut json = json!({
        "label": label,
        "n": d.n(),
        "chi": chi_json,
        "n_profile": profile,
    });
    if let Ok(v) = chi.integers() {
        let strs: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        text += &format!("  chi = ({})  N = {profile}\n", strs.join(","));
        let todd = chi.todd_genus().expect("integral");
        let euler = chi.euler_number().expect("integral");
        let sig = chi.signature().expect("integral");
        text += &format!("  todd = {todd}  euler = {euler}  signature = {sig}\n");
        json["todd"] = Value::Int(todd).to_json();
        json["euler"] = Value::Int(euler).to_json();
        json["signature"] = Value::Int(sig).to_json();
    }
    let verdict = verdict_line(ok, &label);
    text += &verdict;
    text.push('\n');
    json["verdict"] = json!(if ok { "pass" } else { "fail" });
    Ok(Output { ok, verdict, text, json })
}

fn chi_value_json(v: &ChiValue) -> serde_json::Value {
    match v {
        ChiValue::Integer(c) => Value::Int(c.clone()).to_json(),
        ChiValue::NonInteger(r) => Value::Rational(r.clone()).to_json(),
        ChiValue::NonConstant(f) => json!({ "rational_function": f.to_string() }),
    }
}

fn chern(path: &Path) -> Result<Output, String> {
    let d = load(path)?.dataset;
    let table = chern_table(&d);
    let label = d.display_label().to_string();
    let ok = table.entries().iter().all(|(_, v)| v.is_integer());

    let mut text = format!("Chern numbers of {label} (n = {})\n", d.n());
    let mut numbers = serde_json::Map::new();
    for (m, v) in table.entries() {
        let val = if v.is_integer() {
            Value::Int(v.to_integer())
        } else {
            Value::Rational(v.clone())
        };
        text += &format!("  {:<12} {val}\n", m.to_string());
        numbers.insert(m.to_string(), val.to_json());
    }
    let verdict = verdict_line(ok, &label);
    text += &verdict;
    text.push('\n');
    let json = json!({
        "label": label,
        "n": d.n(),
        "chern_numbers": numbers,
        "verdict": if ok { "pass" } else { "fail" },
    });
    Ok(Output { ok, verdict, text, json })
}

fn prove() -> Output {
    match reproduce_theorem() {
        Ok(report) => {
            let what = format!("minimum {} fixed points", report.minimum_fixed_points);
            let verdict = verdict_line(true, &what);
            let mut json = report.to_json();
            json["verdict"] = json!("pass");
            Output {
                ok: true,
                text: format!("{}{verdict}\n", report.to_text()),
                verdict,
                json,
            }
        }
        Err(e) => {
            let verdict = verdict_line(false, &e.to_string());
            Output {
                ok: false,
                text: format!("{verdict}\n"),
                json: json!({ "error": e.to_string(), "verdict": "fail" }),
                verdict,
            }
        }
    }
}

fn search(bound: i64, n: u64, points: u64) -> Output {
    let cfg = SearchConfig {
        n: n as usize,
        points: points as usize,
        bound,
    };
    let report = search_weights(&cfg);
    let ok = report.passing == 0;
    let verdict = verdict_line(ok, &format!("{} passing of {} candidates", report.passing, report.candidates));
    let mut json = report.to_json();
    json["verdict"] = json!(if ok { "pass" } else { "fail" });
    Output {
        ok,
        text: format!("{}{verdict}\n", report.to_text()),
        verdict,
        json,
    }
}

fn examples(dir: &Path) -> Result<Output, String> {
    let err = |e: std::io::Error| format!("cannot write to {}: {e}", dir.display());
    fs::create_dir_all(dir).map_err(err)?;
    let mut text = String::new();
    let mut files = Vec::new();
    for (stem, d) in fixtures::all() {
        let path = dir.join(format!("{stem}.json"));
        fs::write(&path, d.to_json() + "\n").map_err(err)?;
        text += &format!("  {}  {}\n", d.display_label(), path.display());
        files.push(json!({ "label": d.display_label(), "path": path.display().to_string() }));
    }
    let verdict = verdict_line(true, &format!("{} fixtures written", files.len()));
    text += &verdict;
    text.push('\n');
    Ok(Output {
        ok: true,
        verdict,
        text,
        json: json!({ "files": files, "verdict": "pass" }),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { path } => verify(path),
        Command::Genus { path } => genus(path),
        Command::Chern { path } => chern(path),
        Command::ProveDim10 => Ok(prove()),
        Command::Search { bound, n, points } => Ok(search(*bound, *n, *points)),
        Command::Examples { dir } => examples(dir),
    };
    let out = match result {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("fixloc: {msg}");
            return ExitCode::from(2);
        }
    };
    if cli.quiet {
        println!("{}", out.verdict);
    } else if cli.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&out.json).expect("json output"));
    } else {
        if !cli.no_banner {
            println!("fixloc {}", env!("CARGO_PKG_VERSION"));
        }
        print!("{}", out.text);
    }
    ExitCode::from(if out.ok { 0 } else { 1 })
}
