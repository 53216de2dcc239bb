//! The `siegel` command line.
//!
//! Exit codes: 0 success, 1 a check failed (or `--require-transitive` saw
//! `NotTransitive`), 2 bad input.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde_json::json;

use crate::bounds::{bound_chain, large_k_sweep, BoundReport};
use crate::catalog::{build, classify, verify_paper, CheckStatus, DomainId, DomainReport, VerifyOptions};
use crate::cones::{isotropy_bound, Boundary, CatalogCone, ConeSpec};
use crate::exact_linalg::{format_rational, parse_rational, Rational};
use crate::graded_algebra::SiegelDomainSpec;
use crate::homogeneity::Verdict;
use crate::io::{load_domain_spec, named_cone, SpecDocument};
use crate::vector_fields::materialize;
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "siegel", about = "Exact automorphism algebras of Siegel domains of the second kind")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Include basis elements and vector fields in the output.
    #[arg(long, global = true)]
    pub emit_bases: bool,
    /// Seed for sampled Ω-Hermitian checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Random samples for Lorentz-cone Ω-Hermitian checks.
    #[arg(long, default_value_t = 32, global = true)]
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe a catalog cone.
    ConeInfo {
        #[arg(long)]
        cone: String,
    },
    /// Graded dimensions of g(S(Ω,H)).
    Dims(DomainArgs),
    /// Generic orbit rank of G(Ω,H) on Ω.
    Homogeneity {
        #[command(flatten)]
        domain: DomainArgs,
        /// Exit 1 when the action is certainly not transitive.
        #[arg(long)]
        require_transitive: bool,
    },
    /// Dimension bound chain, or the large-k sweep.
    Bounds(BoundsArgs),
    /// Case analysis over the named families for 2 ≤ n ≤ 5.
    Classify {
        #[arg(long)]
        n: usize,
    },
    /// Run every reference check.
    VerifyPaper {
        /// Negative control: expected total for D6(1,1,0).
        #[arg(long, default_value_t = 10)]
        d6_total: usize,
        /// Negative control: drop one generator of g(Ω₃).
        #[arg(long)]
        truncate_omega3: bool,
    },
}

/// A named domain, or a JSON spec document via `--input`.
#[derive(Args, Debug, Default)]
pub struct DomainArgs {
    /// ball, ball-product, D1..D6, T3, T4, tube
    #[arg(long)]
    pub domain: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated rationals for D5/D6.
    #[arg(long)]
    pub v: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub delta: Option<String>,
    /// Comma-separated ball dimensions for ball-product.
    #[arg(long)]
    pub factors: Option<String>,
    /// Cone for `--domain tube`.
    #[arg(long)]
    pub cone: Option<String>,
    /// Path to a JSON spec document.
    #[arg(long, conflicts_with = "domain")]
    pub input: Option<String>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub domain: DomainArgs,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub dim_g_omega: Option<usize>,
    #[arg(long)]
    pub dim_g_half: Option<usize>,
    #[arg(long)]
    pub dim_g1: Option<usize>,
    /// Tabulate the closed form against n² − 2 for 5 ≤ n ≤ n_max, k ≥ 3.
    #[arg(long)]
    pub sweep: bool,
    #[arg(long, default_value_t = 16)]
    pub n_max: usize,
}

struct Outcome {
    code: i32,
    text: String,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { code: 0, text }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let _ = writeln!(out, "{}", outcome.text.trim_end());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::ConeInfo { cone } => cone_info(&named_cone(cone)?, cli),
        Command::Dims(d) => dims(d, cli),
        Command::Homogeneity { domain, require_transitive } => {
            let report = domain_report(domain, cli)?;
            let h = &report.homogeneity;
            let text = if json {
                pretty(&json!({"domain": report.id, "homogeneity": h}))
            } else {
                rows(&[
                    ("domain", report.id.to_string()),
                    ("a_part_dim", h.a_part_dim.to_string()),
                    ("generic_rank", h.generic_rank.to_string()),
                    ("verdict", format!("{:?}", h.verdict)),
                    ("note", h.note.clone()),
                ])
            };
            let code = i32::from(*require_transitive && h.verdict == Verdict::NotTransitive);
            Ok(Outcome { code, text })
        }
        Command::Bounds(b) => bounds(b, cli),
        Command::Classify { n } => {
            let r = classify(*n, cli.samples, cli.seed)?;
            if json {
                return Ok(Outcome::ok(pretty(&r)));
            }
            let mut t = format!("n = {}, target n^2 - 2 = {}\n{}\n", r.n, r.target, r.note);
            for p in &r.pruned {
                t += &format!("pruned k={}: bound {} < {}\n", p.k, format_rational(&p.estimate), p.target);
            }
            t += "candidates:\n";
            for c in &r.candidates {
                t += &format!("  {:<14} k={} total={:<3} {:?}\n", c.id.to_string(), c.k, c.dims.total, c.verdict);
            }
            t += "homogeneous:\n";
            for e in &r.homogeneous {
                t += &format!("  {} {}\n", e.model, e.total);
            }
            t += "survivors:\n";
            for e in &r.survivors {
                t += &format!("  {} {}\n", e.model, e.total);
            }
            Ok(Outcome::ok(t))
        }
        Command::VerifyPaper { d6_total, truncate_omega3 } => {
            let opts = VerifyOptions {
                samples: cli.samples,
                seed: cli.seed,
                d6_total_expected: *d6_total,
                truncate_omega3: *truncate_omega3,
            };
            let report = verify_paper(opts);
            let code = i32::from(!report.all_passed());
            let text = if json {
                pretty(&report)
            } else {
                let mut t = String::new();
                for c in &report.checks {
                    let tag = if c.status == CheckStatus::Pass { "PASS" } else { "FAIL" };
                    t += &format!("{tag} {}  expected {}  computed {}\n", c.name, c.expected, c.computed);
                }
                t + &format!("passed {}, failed {}\n", report.summary.passed, report.summary.failed)
            };
            Ok(Outcome { code, text })
        }
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn rows(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|p| p.0.len()).max().unwrap_or(0);
    pairs.iter().map(|(k, v)| format!("{k:<w$}  {v}\n")).collect()
}

fn rationals(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',').map(|p| parse_rational(p.trim())).collect()
}

fn required<'a, T>(v: &'a Option<T>, flag: &str, domain: &str) -> Result<&'a T, Error> {
    v.as_ref().ok_or_else(|| Error::InvalidDomain(format!("--domain {domain} needs --{flag}")))
}

/// Resolves `--domain` and its parameters to a catalog id.
pub fn domain_id(d: &DomainArgs) -> Result<DomainId, Error> {
    let name = d.domain.as_deref().ok_or_else(|| Error::InvalidDomain("give --domain or --input".into()))?;
    let lower = name.to_ascii_lowercase();
    let n = || required(&d.n, "n", name).copied();
    let triple = || -> Result<[Rational; 3], Error> {
        let v = rationals(required(&d.v, "v", name)?)?;
        v.try_into().map_err(|v: Vec<_>| Error::Dimension(format!("--v needs 3 entries, got {}", v.len())))
    };
    let quad = || -> Result<[Rational; 4], Error> {
        let get = |v: &Option<String>, flag| parse_rational(required(v, flag, name)?);
        Ok([get(&d.alpha, "alpha")?, get(&d.beta, "beta")?, get(&d.gamma, "gamma")?, get(&d.delta, "delta")?])
    };
    Ok(match lower.as_str() {
        "ball" | "b" => DomainId::Ball(n()?),
        "ball-product" | "product" => {
            let fs = required(&d.factors, "factors", name)?;
            let parsed: Result<Vec<usize>, _> = fs.split(',').map(|p| p.trim().parse::<usize>()).collect();
            DomainId::BallProduct(parsed.map_err(|e| Error::Parse(format!("--factors: {e}")))?)
        }
        "d1" => DomainId::D1(n()?),
        "d2" => DomainId::D2(n()?),
        "d3" => DomainId::D3(quad()?),
        "d4" => DomainId::D4(quad()?),
        "d5" => DomainId::D5(triple()?),
        "d6" => DomainId::D6(triple()?),
        "t3" => DomainId::T3,
        "t4" => DomainId::T4,
        "tube" => DomainId::TubeOmega(required(&d.cone, "cone", name)?.parse::<CatalogCone>()?),
        _ => return Err(Error::InvalidDomain(format!("unknown domain {name:?}"))),
    })
}

fn resolve(d: &DomainArgs, cli: &Cli) -> Result<(DomainId, SiegelDomainSpec), Error> {
    if let Some(path) = &d.input {
        let text = std::fs::read_to_string(path)?;
        let loaded = load_domain_spec(&text, cli.samples, cli.seed)?;
        let label = std::path::Path::new(path).file_stem().map_or("custom".into(), |s| s.to_string_lossy().into_owned());
        return Ok((DomainId::Custom(label), loaded.spec));
    }
    let id = domain_id(d)?;
    let spec = build(&id)?;
    Ok((id, spec))
}

fn domain_report(d: &DomainArgs, cli: &Cli) -> Result<DomainReport, Error> {
    let (id, spec) = resolve(d, cli)?;
    DomainReport::compute(id, spec, cli.samples, cli.seed)
}

fn dims(d: &DomainArgs, cli: &Cli) -> Result<Outcome, Error> {
    let report = domain_report(d, cli)?;
    let fields = if cli.emit_bases {
        let alg = report.bases.as_ref().expect("compute keeps the algebra");
        materialize(&report.spec, alg)?
    } else {
        Vec::new()
    };
    if cli.format == Format::Json {
        let mut v = json!({
            "domain": report.id,
            "n": report.spec.n,
            "k": report.spec.k,
            "dims": report.dims,
            "s": report.s,
            "spec": SpecDocument::from_spec(&report.spec),
        });
        if cli.emit_bases {
            v["bases"] = serde_json::to_value(&report.bases)?;
            v["fields"] = fields
                .iter()
                .map(|f| json!({"name": f.name, "grade": f.grade.map(|g| g.to_string()), "field": f.to_string()}))
                .collect();
        }
        return Ok(Outcome::ok(pretty(&v)));
    }
    let c = report.dims.components();
    let mut t = format!("domain {}  n={} k={} m={}\n", report.id, report.spec.n, report.spec.k, report.spec.m());
    t += &format!("{:<6}{:>5}{:>6}{:>5}{:>6}{:>5}{:>7}\n", "grade", "-1", "-1/2", "0", "1/2", "1", "total");
    t += &format!("{:<6}{:>5}{:>6}{:>5}{:>6}{:>5}{:>7}\n", "dim", c[0], c[1], c[2], c[3], c[4], report.dims.total);
    t += &format!("s = {}\n", report.s);
    for f in &fields {
        t += &format!("{}  {}\n", f.name, f);
    }
    Ok(Outcome::ok(t))
}

fn bounds(b: &BoundsArgs, cli: &Cli) -> Result<Outcome, Error> {
    let json = cli.format == Format::Json;
    if b.sweep {
        let entries = large_k_sweep(b.n_max)?;
        let code = i32::from(entries.iter().any(|e| !e.margin.is_negative()));
        let text = if json {
            pretty(&json!({"margins": entries}))
        } else {
            let mut t = "n   k   estimate  target  margin\n".to_string();
            for e in &entries {
                t += &format!(
                    "{:<3} {:<3} {:<9} {:<7} {}\n",
                    e.n,
                    e.k,
                    format_rational(&e.estimate),
                    e.target,
                    format_rational(&e.margin)
                );
            }
            t
        };
        return Ok(Outcome { code, text });
    }
    let (report, total): (BoundReport, Option<usize>) = if b.domain.domain.is_some() || b.domain.input.is_some() {
        let r = domain_report(&b.domain, cli)?;
        (r.bounds, Some(r.dims.total))
    } else {
        let n = b.domain.n.ok_or_else(|| Error::InvalidDomain("bounds needs --n and --k, a domain, or --sweep".into()))?;
        let k = b.k.ok_or_else(|| Error::InvalidDomain("bounds needs --k".into()))?;
        (bound_chain(n, k, b.s, b.dim_g_omega, b.dim_g_half, b.dim_g1)?, None)
    };
    let code = total.map_or(0, |t| i32::from(!report.admits(t)));
    let text = if json {
        let mut v = serde_json::to_value(&report)?;
        if let Some(t) = total {
            v["total"] = t.into();
        }
        pretty(&v)
    } else {
        let mut pairs = vec![
            ("n", report.n.to_string()),
            ("k", report.k.to_string()),
            ("s", report.s.to_string()),
            ("dim_g_omega", format_rational(&report.dim_g_omega)),
            ("with_components", format_rational(&report.with_components)),
            ("with_component_bounds", format_rational(&report.with_component_bounds)),
            ("with_s_bound", format_rational(&report.with_s_bound)),
            ("closed_form", format_rational(&report.closed_form)),
        ];
        if let Some(t) = total {
            pairs.push(("total", t.to_string()));
        }
        rows(&pairs)
    };
    Ok(Outcome { code, text })
}

fn cone_info(cone: &ConeSpec, cli: &Cli) -> Result<Outcome, Error> {
    let boundary = match &cone.boundary {
        Boundary::Polyhedral(fs) => format!("polyhedral, {} facets", fs.len()),
        Boundary::Lorentzian { block, polyhedral } => {
            format!("lorentzian on coordinates {block:?}, {} extra facets", polyhedral.len())
        }
    };
    let interior: Vec<String> = cone.interior_point.iter().map(format_rational).collect();
    let bound = format_rational(&isotropy_bound(cone.k));
    if cli.format == Format::Json {
        let mut v = json!({
            "name": cone.name,
            "k": cone.k,
            "dim_g": cone.dim_g(),
            "isotropy_bound": bound,
            "interior_point": interior,
            "boundary": cone.boundary,
        });
        if cli.emit_bases {
            v["g_basis"] = serde_json::to_value(&cone.g_basis)?;
        }
        return Ok(Outcome::ok(pretty(&v)));
    }
    let mut t = rows(&[
        ("name", cone.name.clone()),
        ("k", cone.k.to_string()),
        ("dim_g", cone.dim_g().to_string()),
        ("isotropy_bound", bound),
        ("boundary", boundary),
        ("interior_point", format!("({})", interior.join(", "))),
    ]);
    if cli.emit_bases {
        for (i, g) in cone.g_basis.iter().enumerate() {
            let rows: Vec<String> =
                (0..g.rows()).map(|r| g.row(r).iter().map(format_rational).collect::<Vec<_>>().join(" ")).collect();
            t += &format!("g[{i}] = [{}]\n", rows.join("; "));
        }
    }
    Ok(Outcome::ok(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("siegel").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dims_json_for_d6() {
        let (code, out, _) = run_str(&["dims", "--domain", "D6", "--v", "1,1,0", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dims"]["total"], 10);
        assert_eq!(v["s"], 1);
    }

    #[test]
    fn table_and_json_agree() {
        let (_, table, _) = run_str(&["dims", "--domain", "ball", "--n", "3"]);
        let (_, json, _) = run_str(&["dims", "--domain", "ball", "--n", "3", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let dims = &v["dims"];
        let row: Vec<String> = ["g_m1", "g_mhalf", "g_0", "g_half", "g_1", "total"].iter().map(|k| dims[k].to_string()).collect();
        let table_row: Vec<&str> = table.lines().nth(2).unwrap().split_whitespace().skip(1).collect();
        assert_eq!(table_row, row);
    }

    #[test]
    fn missing_parameters_exit_two() {
        let (code, _, err) = run_str(&["dims", "--domain", "D6"]);
        assert_eq!(code, 2);
        assert!(err.contains("--v"));
        assert_eq!(run_str(&["dims", "--domain", "D3", "--alpha", "1", "--beta", "1", "--gamma", "1", "--delta", "1"]).0, 2);
        assert_eq!(run_str(&["nonsense"]).0, 2);
    }

    #[test]
    fn require_transitive() {
        let args = ["homogeneity", "--domain", "D2", "--n", "4", "--require-transitive"];
        let (code, out, _) = run_str(&args);
        assert_eq!(code, 1);
        assert!(out.contains("NotTransitive"));
        assert_eq!(run_str(&args[..5]).0, 0);
    }

    #[test]
    fn bounds_modes() {
        let (code, out, _) = run_str(&["bounds", "--n", "4", "--k", "3"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l.starts_with("closed_form") && l.ends_with(" 15")));
        let (code, out, _) = run_str(&["bounds", "--sweep", "--n-max", "6", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["margins"][0]["margin"], "-1");
        assert_eq!(run_str(&["bounds", "--sweep", "--n-max", "4"]).0, 2);
    }
}
