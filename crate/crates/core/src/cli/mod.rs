//! The `truncw` command line: coefficient tables, verification suites,
//! classification of Drinfeld data and q-det output.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input
//! error. Every rational number is written as an `n/d` string and JSON
//! output carries `"schema": "truncw/1"`.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::center_cohomology::{casimirs_from_det, center_tower};
use crate::exact_algebra::scalar::{fmt_frac, parse_frac, qi};
use crate::exact_algebra::{Ctx, Scalar, UniPoly};
use crate::glnp_basis::GlpBasis;
use crate::representations::drinfeld::data_without_center;
use crate::representations::{classify, qdet, tensor_from_weights, CenterSeries, DrinfeldData, Verdict};
use crate::suites::{self, SuiteReport};
use crate::walgebra_bases::{wbar_build, BasisSign};
use crate::Error;

pub const SCHEMA: &str = "truncw/1";
pub const DEFAULT_MAX_DIM: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Rtt,
    Soldering,
    Dirac,
    Identify,
    Center,
    Cohomology,
    /// The six suites above.
    All,
    Basis,
    Yangian,
    Coproduct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    Minus,
    Plus,
}

#[derive(Debug, Parser)]
#[command(name = "truncw", version, about = "Exact computations in the finite W-algebras W_p(N) and truncated Yangians")]
pub struct RunConfig {
    /// Rank N of gl(N).
    #[arg(long = "N", global = true, default_value_t = 2)]
    pub n: usize,
    /// Truncation level p.
    #[arg(long = "p", global = true, default_value_t = 2)]
    pub p: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest module dimension used by the rtt suite.
    #[arg(long, global = true, default_value_t = 27)]
    pub bounds: usize,
    /// Evaluation-factor weights, factors separated by ';', entries by ','.
    #[arg(long, global = true)]
    pub factors: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of M_{j,m} M_{l,n} in the basis M_{r,m+n}.
    CgTable,
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Classify Drinfeld data read as JSON from a file or stdin.
    Classify {
        /// Input file; stdin when absent or "-".
        #[arg(long)]
        input: Option<String>,
    },
    /// RTT and related checks on a tensor product of evaluation modules.
    RttVerify,
    /// Coefficients d_n of the quantum determinant on a tensor product.
    Qdet,
    /// Determinant Casimirs and the central quotient tower.
    Center,
    /// The W-bar generators of one family.
    Wbar {
        #[arg(long, value_enum, default_value_t = Sign::Minus)]
        sign: Sign,
    },
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: msg.into() }
    }
}

fn max_dim() -> Result<usize, String> {
    match std::env::var("TRUNCW_MAX_DIM") {
        Ok(v) => v.trim().parse().map_err(|_| format!("TRUNCW_MAX_DIM must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn validate(cfg: &RunConfig) -> Result<Ctx, String> {
    if cfg.n == 0 || cfg.p == 0 {
        return Err(format!("N and p must be positive (N={}, p={})", cfg.n, cfg.p));
    }
    let bound = max_dim()?;
    if cfg.n * cfg.p > bound {
        return Err(format!("N*p = {} exceeds the safety bound {bound} (set TRUNCW_MAX_DIM to raise it)", cfg.n * cfg.p));
    }
    Ctx::new(cfg.n, cfg.p).map_err(|e| e.to_string())
}

/// Parses "1,0;1/2,-1/2" into factor weights of length n.
pub fn parse_factors(s: &str, n: usize) -> crate::Result<Vec<Vec<Scalar>>> {
    let mut out = Vec::new();
    for part in s.split(';').map(str::trim).filter(|x| !x.is_empty()) {
        let w = part.split(',').map(parse_frac).collect::<crate::Result<Vec<_>>>()?;
        if w.len() != n {
            return Err(Error::InvalidInput(format!("factor {part:?} has {} entries, expected N={n}", w.len())));
        }
        out.push(w);
    }
    if out.is_empty() {
        return Err(Error::InvalidInput("no factors given".into()));
    }
    Ok(out)
}

fn frac_list(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(fmt_frac(x))).collect())
}

fn emit_json(mut v: Value, command: &str) -> String {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("command".into(), json!(command));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
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

/// Parses the arguments and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    execute(&cfg)
}

pub fn execute(cfg: &RunConfig) -> Outcome {
    let ctx = match validate(cfg) {
        Ok(c) => c,
        Err(msg) => return Outcome::usage(format!("error: {msg}\n")),
    };
    let result = match &cfg.command {
        Command::CgTable => cg_table(cfg),
        Command::Verify { suite } => verify(cfg, &ctx, *suite),
        Command::Classify { input } => classify_cmd(cfg, input.as_deref()),
        Command::RttVerify => rtt_verify(cfg),
        Command::Qdet => qdet_cmd(cfg),
        Command::Center => center_cmd(cfg, &ctx),
        Command::Wbar { sign } => wbar_cmd(cfg, &ctx, *sign),
    };
    result.unwrap_or_else(|e| match e {
        Error::InvalidInput(_) | Error::ContextMismatch(_) | Error::OutOfRange(_) | Error::NotClassifiable(_)
        | Error::ZeroDenominator | Error::TooLarge(_) => Outcome::usage(format!("error: {e}\n")),
        _ => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    })
}

fn cg_table(cfg: &RunConfig) -> crate::Result<Outcome> {
    let b = GlpBasis::new(cfg.p)?;
    let mut rows = Vec::new();
    for (j, m) in b.labels() {
        for (l, n) in b.labels() {
            for (r, c) in b.product_terms(j, m, l, n) {
                rows.push((j, m, l, n, r, m + n, c));
            }
        }
    }
    let out = match cfg.format {
        Format::Csv => {
            let mut s = String::from("j,m,l,n,r,s,value\n");
            for (j, m, l, n, r, sw, c) in &rows {
                s.push_str(&format!("{j},{m},{l},{n},{r},{sw},{}\n", fmt_frac(c)));
            }
            s
        }
        Format::Text => rows
            .iter()
            .map(|(j, m, l, n, r, sw, c)| format!("<{j},{m};{l},{n}|{r},{sw}> = {}\n", fmt_frac(c)))
            .collect(),
        Format::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|(j, m, l, n, r, sw, c)| json!({"j": j, "m": m, "l": l, "n": n, "r": r, "s": sw, "value": fmt_frac(c)}))
                .collect();
            emit_json(json!({"p": cfg.p, "entries": entries}), "cg-table")
        }
    };
    Ok(Outcome::ok(out))
}

fn report_json(r: &SuiteReport) -> Value {
    let checks: Vec<Value> =
        r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect();
    json!({"suite": r.suite, "passed": r.passed(), "checks": checks})
}

fn render_reports(cfg: &RunConfig, reports: &[SuiteReport], command: &str, extra: Value) -> Outcome {
    let passed = reports.iter().all(SuiteReport::passed);
    let first = reports.iter().find_map(|r| r.first_failure().map(|c| (r, c)));
    let out = match cfg.format {
        Format::Json => {
            let mut v = json!({
                "N": cfg.n,
                "p": cfg.p,
                "seed": cfg.seed,
                "passed": passed,
                "suites": reports.iter().map(report_json).collect::<Vec<_>>(),
                "first_failure": first.map(|(r, c)| json!({"suite": r.suite, "name": c.name, "detail": c.detail})),
            });
            if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
                m.extend(e);
            }
            emit_json(v, command)
        }
        Format::Csv => {
            let mut s = String::from("suite,name,passed,detail\n");
            for r in reports {
                for c in &r.checks {
                    let d = c.detail.clone().unwrap_or_default();
                    s.push_str(&format!("{},{},{},{}\n", r.suite, csv_field(&c.name), c.passed, csv_field(&d)));
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                for c in &r.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    s.push_str(&format!("{status} {} {}", r.suite, c.name));
                    if let Some(d) = &c.detail {
                        s.push_str(&format!(": {d}"));
                    }
                    s.push('\n');
                }
            }
            s.push_str(if passed { "all checks pass\n" } else { "verification failed\n" });
            s
        }
    };
    Outcome { code: if passed { 0 } else { 1 }, stdout: out, stderr: String::new() }
}

fn verify(cfg: &RunConfig, ctx: &Ctx, suite: Suite) -> crate::Result<Outcome> {
    let selected = match suite {
        Suite::All => vec![Suite::Rtt, Suite::Soldering, Suite::Dirac, Suite::Identify, Suite::Center, Suite::Cohomology],
        s => vec![s],
    };
    let mut reports = Vec::new();
    for s in selected {
        let r = match s {
            Suite::Rtt => match &cfg.factors {
                Some(f) => suites::rtt_checks(&parse_factors(f, cfg.n)?, false)?,
                None => suites::rtt_suite(cfg.n, cfg.bounds)?,
            },
            Suite::Soldering => suites::soldering_suite(ctx)?,
            Suite::Dirac => suites::dirac_suite(ctx)?,
            Suite::Identify => suites::identify_suite(ctx)?,
            Suite::Center => suites::center_suite(ctx, cfg.seed)?,
            Suite::Cohomology => suites::cohomology_suite(ctx, cfg.seed)?,
            Suite::Basis => suites::basis_suite(ctx.p)?,
            Suite::Yangian => suites::yangian_suite(ctx)?,
            Suite::Coproduct => suites::coproduct_suite()?,
            Suite::All => unreachable!("expanded above"),
        };
        reports.push(r);
    }
    let name = format!("{suite:?}").to_lowercase();
    Ok(render_reports(cfg, &reports, "verify", json!({"suite": name})))
}

fn factors_arg(cfg: &RunConfig) -> crate::Result<Vec<Vec<Scalar>>> {
    let f = cfg.factors.as_deref().ok_or_else(|| Error::InvalidInput("--factors is required".into()))?;
    parse_factors(f, cfg.n)
}

fn rtt_verify(cfg: &RunConfig) -> crate::Result<Outcome> {
    let f = factors_arg(cfg)?;
    let total: usize = f.len();
    let r = suites::rtt_checks(&f, false)?;
    Ok(render_reports(cfg, &[r], "rtt-verify", json!({"factor_count": total})))
}

fn qdet_cmd(cfg: &RunConfig) -> crate::Result<Outcome> {
    let f = factors_arg(cfg)?;
    let rep = tensor_from_weights(&f)?;
    let q = qdet(&rep);
    let series = q.series()?;
    // 1, d_1, ..., d_{Nk}: the same list `classify` reads as rho
    let mut d = vec![qi(1)];
    d.extend(series.expansion(cfg.n * f.len()));
    let central = q.is_central(&rep);
    let out = match cfg.format {
        Format::Json => emit_json(
            json!({
                "N": cfg.n,
                "factors": f.iter().map(|w| frac_list(w)).collect::<Vec<_>>(),
                "d": frac_list(&d),
                "numerator": frac_list(series.numerator().coeffs()),
                "denominator": frac_list(series.denominator().coeffs()),
                "central": central,
            }),
            "qdet",
        ),
        Format::Csv => {
            let mut s = String::from("n,d\n");
            for (k, x) in d.iter().enumerate() {
                s.push_str(&format!("{k},{}\n", fmt_frac(x)));
            }
            s
        }
        Format::Text => d.iter().enumerate().map(|(k, x)| format!("d_{k} = {}\n", fmt_frac(x))).collect(),
    };
    Ok(Outcome { code: if central { 0 } else { 1 }, stdout: out, stderr: String::new() })
}

fn scalar_of(v: &Value) -> crate::Result<Scalar> {
    match v {
        Value::String(s) => parse_frac(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(qi(i)),
            None => Err(Error::InvalidInput(format!("{n} is not an integer; write fractions as \"a/b\""))),
        },
        other => Err(Error::InvalidInput(format!("expected a number, got {other}"))),
    }
}

fn scalars_of(v: &Value) -> crate::Result<Vec<Scalar>> {
    v.as_array()
        .ok_or_else(|| Error::InvalidInput(format!("expected a list, got {v}")))?
        .iter()
        .map(scalar_of)
        .collect()
}

/// `{"P": [[c0, c1, ...], ...], "rho": [1, d1, ...] | {"num": [...], "den": [...]}}`
/// with polynomial coefficients in ascending powers of u.
pub fn parse_drinfeld(text: &str) -> crate::Result<DrinfeldData> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
    let p = v.get("P").ok_or_else(|| Error::InvalidInput("missing field \"P\"".into()))?;
    let polys = p
        .as_array()
        .ok_or_else(|| Error::InvalidInput("\"P\" must be a list of coefficient lists".into()))?
        .iter()
        .map(|c| scalars_of(c).map(UniPoly::new))
        .collect::<crate::Result<Vec<_>>>()?;
    match v.get("rho") {
        None | Some(Value::Null) => data_without_center(polys),
        Some(r @ Value::Array(_)) => {
            let d = scalars_of(r)?;
            if d.first() != Some(&qi(1)) {
                return Err(Error::InvalidInput("\"rho\" must start with the leading coefficient 1".into()));
            }
            Ok(DrinfeldData { polys, rho: CenterSeries::from_coefficients(&d[1..]) })
        }
        Some(r @ Value::Object(_)) => {
            let part = |k: &str| {
                r.get(k).ok_or_else(|| Error::InvalidInput(format!("\"rho\" needs \"{k}\""))).and_then(scalars_of)
            };
            let rho = CenterSeries::new(UniPoly::new(part("num")?), UniPoly::new(part("den")?))?;
            Ok(DrinfeldData { polys, rho })
        }
        Some(other) => Err(Error::InvalidInput(format!("\"rho\" must be a list or {{num, den}}, got {other}"))),
    }
}

fn classify_cmd(cfg: &RunConfig, input: Option<&str>) -> crate::Result<Outcome> {
    let text = match input {
        Some(path) if path != "-" => {
            std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
            s
        }
    };
    classify_input(cfg, &text)
}

/// Classifies Drinfeld data given as JSON text.
pub fn classify_input(cfg: &RunConfig, text: &str) -> crate::Result<Outcome> {
    let data = parse_drinfeld(text)?;
    let verdict = classify(&data, cfg.n, cfg.p)?;
    let v = match &verdict {
        Verdict::Accepted(plan) => json!({
            "N": cfg.n,
            "p": cfg.p,
            "accepted": true,
            "degree": data.total_degree(),
            "plan": {
                "factors": plan.factors.iter().map(|w| frac_list(w)).collect::<Vec<_>>(),
                "fundamental_count": plan.fundamental_count,
                "scalar_shifts": frac_list(&plan.scalar_shifts),
                "center_matched": plan.center_matched,
            },
        }),
        Verdict::Rejected { degree, bound } => json!({
            "N": cfg.n,
            "p": cfg.p,
            "accepted": false,
            "degree": degree,
            "reason": format!("degree {degree} > p={bound}"),
        }),
    };
    let out = match cfg.format {
        Format::Json => emit_json(v, "classify"),
        _ => match &verdict {
            Verdict::Accepted(plan) => {
                let mut s = format!("accepted: {} factors\n", plan.factors.len());
                for w in &plan.factors {
                    s.push_str(&w.iter().map(fmt_frac).collect::<Vec<_>>().join(","));
                    s.push('\n');
                }
                s
            }
            Verdict::Rejected { degree, bound } => format!("rejected: degree {degree} > p={bound}\n"),
        },
    };
    Ok(Outcome::ok(out))
}

fn center_cmd(cfg: &RunConfig, ctx: &Ctx) -> crate::Result<Outcome> {
    let set = casimirs_from_det(ctx)?;
    let np = ctx.n * ctx.p;
    let tower = (0..=np).map(|r| center_tower(ctx, r).map(|s| (r, s))).collect::<crate::Result<Vec<_>>>()?;
    let out = match cfg.format {
        Format::Json => emit_json(
            json!({
                "N": cfg.n,
                "p": cfg.p,
                "casimirs": set.elements.iter().enumerate()
                    .map(|(k, c)| json!({"n": k + 1, "poly": c.to_string()})).collect::<Vec<_>>(),
                "tower": tower.iter().map(|(r, s)| json!({"r": r, "surviving": s})).collect::<Vec<_>>(),
            }),
            "center",
        ),
        Format::Csv => {
            let mut s = String::from("n,poly\n");
            for (k, c) in set.elements.iter().enumerate() {
                s.push_str(&format!("{},{}\n", k + 1, csv_field(&c.to_string())));
            }
            s
        }
        Format::Text => {
            let mut s: String = set.elements.iter().enumerate().map(|(k, c)| format!("C_{} = {c}\n", k + 1)).collect();
            for (r, surv) in &tower {
                s.push_str(&format!("r={r}: {} central generators\n", surv.len()));
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn wbar_cmd(cfg: &RunConfig, ctx: &Ctx, sign: Sign) -> crate::Result<Outcome> {
    let basis = GlpBasis::new(ctx.p)?;
    let s = match sign {
        Sign::Minus => BasisSign::Minus,
        Sign::Plus => BasisSign::Plus,
    };
    let fam = wbar_build(ctx, &basis, s, ctx.p)?;
    let mut rows = Vec::new();
    for j in 0..=ctx.p {
        for a in 1..=ctx.n {
            for b in 1..=ctx.n {
                rows.push((j, a, b, fam.entry(a, b, j).to_string()));
            }
        }
    }
    let out = match cfg.format {
        Format::Json => emit_json(
            json!({
                "N": cfg.n,
                "p": cfg.p,
                "sign": format!("{sign:?}").to_lowercase(),
                "entries": rows.iter().map(|(j, a, b, v)| json!({"j": j, "a": a, "b": b, "value": v})).collect::<Vec<_>>(),
            }),
            "wbar",
        ),
        Format::Csv => {
            let mut out = String::from("j,a,b,value\n");
            for (j, a, b, v) in &rows {
                out.push_str(&format!("{j},{a},{b},{}\n", csv_field(v)));
            }
            out
        }
        Format::Text => rows.iter().map(|(j, a, b, v)| format!("Wbar_{j}^{a}{b} = {v}\n")).collect(),
    };
    Ok(Outcome::ok(out))
}
