//! Dispatch for the `veelocus` command line.
//!
//! [`run`] turns a [`RunSpec`] into a [`SerializedReport`] plus the text
//! rendering and exit status. Exit status is 0 when the verdict holds, 1 when
//! it does not and 2 on any error.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};
use veelocus::catalog::{self, weighted_from_locus, EXAMPLE_NAMES};
use veelocus::io::{parse_config_file, parse_config_reader};
use veelocus::scan::{self, ScanResult};
use veelocus::{check_locus, check_vee, check_wdvv, Command, Configuration, Error, Kind, Result, RunSpec, SerializedReport, Tolerance};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug)]
pub struct Outcome {
    pub report: Option<SerializedReport>,
    pub text: String,
    pub error: Option<Error>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match (&self.error, &self.report) {
            (Some(_), _) | (None, None) => EXIT_ERROR,
            (None, Some(r)) if r.verdict => EXIT_PASS,
            (None, Some(_)) => EXIT_FAIL,
        }
    }
}

/// Resolves a target: `-` reads JSON from `stdin`, an existing path or a
/// `.json` name is read as a file, anything else is a catalog name.
pub fn load_target<R: Read>(target: &str, stdin: R, tol: &Tolerance) -> Result<Configuration> {
    if target == "-" {
        return parse_config_reader(stdin, tol);
    }
    let path = Path::new(target);
    if path.is_file() || target.ends_with(".json") {
        return parse_config_file(path, tol);
    }
    catalog::by_name(target)
}

fn as_vee(config: Configuration) -> Result<Configuration> {
    match config.kind() {
        Kind::Vee => Ok(config),
        Kind::Locus => weighted_from_locus(&config),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn require_target(spec: &RunSpec) -> Result<&str> {
    spec.target
        .as_deref()
        .ok_or_else(|| Error::BadParameter(format!("{} needs a target", spec.command.as_str())))
}

fn params(tokens: &[&str]) -> Result<Vec<(String, String)>> {
    tokens
        .iter()
        .map(|t| {
            t.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {t}")))
        })
        .collect()
}

fn param<T: std::str::FromStr>(ps: &[(String, String)], key: &str, default: Option<T>) -> Result<T> {
    match ps.iter().find(|(k, _)| k == key) {
        Some((_, v)) => v.parse().map_err(|_| Error::Parse(format!("cannot parse {key}={v}"))),
        None => default.ok_or_else(|| Error::Parse(format!("missing {key}="))),
    }
}

fn list(ps: &[(String, String)], key: &str, default: &[usize]) -> Result<Vec<usize>> {
    match ps.iter().find(|(k, _)| k == key) {
        Some((_, v)) => v
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("cannot parse {key}={v}"))))
            .collect(),
        None => Ok(default.to_vec()),
    }
}

/// Scan queries: `prop1:m=<m>:l=<l>:k=<k>`, `thm1:n=<n>[:max_m=3][:perturbations=100]`,
/// `prop2[:max_m=3][:n=3,4]`, `prop3[:samples=50]`, `thm2[:n=3,4][:trials=20]`,
/// `bn[:n=3,4,5][:trials=20]`. Random scans use the run seed.
pub fn run_scan(query: &str, seed: u64) -> Result<ScanResult> {
    let tokens: Vec<&str> = query.trim().split(':').collect();
    let ps = params(&tokens[1..])?;
    match tokens[0] {
        "prop1" => scan::solve_three_vector(param(&ps, "m", None)?, param(&ps, "l", None)?, param(&ps, "k", None)?),
        "thm1" => scan::scan_theorem1(
            param(&ps, "n", None)?,
            param(&ps, "max_m", Some(3))?,
            param(&ps, "perturbations", Some(100))?,
            seed,
        ),
        "prop2" => scan::scan_prop2(param(&ps, "max_m", Some(3))?, &list(&ps, "n", &[3, 4])?),
        "prop3" => scan::scan_prop3(param(&ps, "samples", Some(50))?, seed),
        "thm2" => scan::scan_theorem2(&list(&ps, "n", &[3, 4, 5])?, param(&ps, "trials", Some(20))?, seed),
        "bn" => scan::scan_bn(&list(&ps, "n", &[3, 4, 5])?, param(&ps, "trials", Some(20))?, seed),
        other => Err(Error::Parse(format!("unknown scan query {other}"))),
    }
}

fn render_scan(text: &mut String, res: &ScanResult) {
    let (p, f) = res.tally();
    let _ = writeln!(text, "scan {}", res.query);
    for s in &res.solutions {
        match s {
            scan::Solution::Point { b2, c2, case } => {
                let _ = writeln!(text, "  solution (1, {}{:+}i, {}{:+}i)  [{case}]", b2.re, b2.im, c2.re, c2.im);
            }
            scan::Solution::Family { tag } => {
                let _ = writeln!(text, "  family {tag}");
            }
        }
    }
    for r in res.rows.iter().filter(|r| r.expected != r.observed) {
        let _ = writeln!(text, "  COUNTEREXAMPLE {} (expected {}, observed {})", r.item, r.expected, r.observed);
    }
    let _ = writeln!(
        text,
        "  {} checks ({p} expected pass, {f} expected fail), {} counterexamples",
        res.rows.len(),
        res.counterexample_count
    );
}

fn execute<R: Read>(spec: &RunSpec, stdin: R) -> Result<(bool, Value, String)> {
    let tol = Tolerance::new(spec.tol)?;
    let mut text = String::new();
    match spec.command {
        Command::CheckLocus => {
            let cfg = load_target(require_target(spec)?, stdin, &tol)?;
            let rep = check_locus(&cfg, spec.samples, spec.seed, &tol)?;
            let failing = rep.per_condition.iter().filter(|c| !c.pass).count();
            let _ = writeln!(
                text,
                "check-locus {}: {} ({} planes, {} conditions, {failing} failing)",
                rep.label,
                verdict_word(rep.overall),
                rep.planes.len(),
                rep.per_condition.len()
            );
            for c in rep.per_condition.iter().filter(|c| !c.pass) {
                let _ = writeln!(
                    text,
                    "  plane {} pivot {} s={}: residual {:e} / scale {:e}",
                    c.plane, c.pivot, c.order, c.residual, c.scale
                );
            }
            Ok((rep.overall, to_value(&rep), text))
        }
        Command::CheckVee => {
            let cfg = as_vee(load_target(require_target(spec)?, stdin, &tol)?)?;
            let rep = check_vee(&cfg, &tol)?;
            let _ = writeln!(
                text,
                "check-vee {}: {} ({} planes, {} field, dimension {})",
                rep.label,
                verdict_word(rep.overall),
                rep.per_plane.len(),
                if rep.field == veelocus::vee::Field::Real { "real" } else { "complex" },
                rep.dim
            );
            for p in rep.per_plane.iter().filter(|p| !p.pass) {
                let _ = writeln!(text, "  plane {} members {:?}: residual {:e}", p.plane, p.members, p.residual);
            }
            Ok((rep.overall, to_value(&rep), text))
        }
        Command::CheckWdvv => {
            let cfg = as_vee(load_target(require_target(spec)?, stdin, &tol)?)?;
            let rep = check_wdvv(&cfg, spec.samples, spec.seed, &tol)?;
            let _ = writeln!(
                text,
                "check-wdvv {}: {} (max residual {:e} over {} points, threshold {:e})",
                rep.label,
                verdict_word(rep.overall),
                rep.max_residual,
                rep.points.len(),
                veelocus::wdvv::WDVV_THRESHOLD
            );
            Ok((rep.overall, to_value(&rep), text))
        }
        Command::Scan => {
            let res = run_scan(require_target(spec)?, spec.seed)?;
            render_scan(&mut text, &res);
            Ok((res.verdict(), to_value(&res), text))
        }
        Command::CatalogList => {
            let mut items = Vec::new();
            for name in EXAMPLE_NAMES {
                let cfg = catalog::by_name(name)?;
                let _ = writeln!(
                    text,
                    "{name:<28} {:<5} dim {:>2}  {:>3} vectors",
                    cfg.kind().as_str(),
                    cfg.dim(),
                    cfg.len()
                );
                items.push(json!({"name": name, "kind": cfg.kind(), "dim": cfg.dim(), "vectors": cfg.len()}));
            }
            Ok((true, Value::Array(items), text))
        }
        Command::Reproduce => {
            let rep = scan::reproduce(spec.seed)?;
            for s in &rep.summary {
                let _ = writeln!(
                    text,
                    "{:<4} {:<52} {:>4} checks {:>3} counterexamples",
                    if s.pass { "PASS" } else { "FAIL" },
                    s.claim,
                    s.checks,
                    s.counterexamples
                );
            }
            Ok((rep.verdict(), to_value(&rep), text))
        }
    }
}

fn verdict_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Runs one command. `stdin` is only read for the target `-`.
pub fn run<R: Read>(spec: &RunSpec, stdin: R) -> Outcome {
    match execute(spec, stdin) {
        Ok((verdict, details, text)) => Outcome {
            report: Some(SerializedReport::new(spec.clone(), verdict, details)),
            text,
            error: None,
        },
        Err(e) => Outcome {
            report: None,
            text: String::new(),
            error: Some(e),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use veelocus::OutputFormat;

    fn spec(command: Command, target: Option<&str>) -> RunSpec {
        RunSpec {
            command,
            target: target.map(str::to_string),
            seed: 0,
            samples: 3,
            tol: 1e-9,
            output: OutputFormat::Text,
        }
    }

    #[test]
    fn exit_codes_follow_verdicts() {
        let empty: &[u8] = &[];
        assert_eq!(run(&spec(Command::CheckLocus, Some("An2:n=2:m=2")), empty).exit_code(), EXIT_PASS);
        assert_eq!(run(&spec(Command::CheckVee, Some("vee-An2:n=3:m=2")), empty).exit_code(), EXIT_FAIL);
        assert_eq!(run(&spec(Command::CheckVee, Some("nope:1")), empty).exit_code(), EXIT_ERROR);
        assert_eq!(run(&spec(Command::CheckLocus, None), empty).exit_code(), EXIT_ERROR);
    }

    #[test]
    fn stdin_target() {
        let text = br#"{"dim": 2, "kind": "vee", "entries": [{"vector": [1, 0]}, {"vector": [0, 1]}]}"#;
        let out = run(&spec(Command::CheckVee, Some("-")), &text[..]);
        assert_eq!(out.exit_code(), EXIT_PASS);
    }

    #[test]
    fn locus_targets_are_weighted_for_vee() {
        let empty: &[u8] = &[];
        let out = run(&spec(Command::CheckVee, Some("An1:n=3:m=2")), empty);
        assert_eq!(out.exit_code(), EXIT_PASS, "{:?}", out.error);
    }

    #[test]
    fn scan_queries() {
        let r = run_scan("prop1:m=2:l=1:k=1", 0).unwrap();
        assert_eq!(r.points().len(), 2);
        assert!(run_scan("prop9", 0).is_err());
        assert!(run_scan("prop1:m=2", 0).is_err());
    }
}
