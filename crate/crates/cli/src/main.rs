//! `elimkit`: resultants, discriminants and reduced elimination from the
//! command line.

mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Map, Value};

use elimkit_core::discriminant::discriminant;
use elimkit_core::enumerative::{consistency_checks, EnumerativeTable};
use elimkit_core::poly::{parse_polynomial, LinearPoint};
use elimkit_core::rational::{format_rational, parse_rational};
use elimkit_core::reduced::{
    project_complete_intersection, reduced_discriminant, reduced_resultant, TruncatedSystem,
    TruncationSpec,
};
use elimkit_core::resultant::{macaulay_resultant_detailed, FormSystem, MacaulayMethod};
use elimkit_core::salmon::{normal_form_at_point, plane_salmon_coefficients, salmon_expansion};
use elimkit_core::verify::{run_suite, Suite};
use elimkit_core::{ElimError, Polynomial};

const SCHEMA: &str = "elimkit/1";

#[derive(Parser, Debug)]
#[command(name = "elimkit", version, about = "Exact elimination theory for homogeneous forms")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Resultant of n+1 forms in n+1 variables.
    Res {
        #[arg(long)]
        nvars: usize,
        #[arg(required = true)]
        forms: Vec<String>,
    },
    /// Discriminant of a form.
    Disc {
        #[arg(long)]
        nvars: usize,
        form: String,
    },
    /// Reduced resultant of truncated forms at (1:0:...:0).
    Rres {
        #[arg(long)]
        nvars: usize,
        /// Truncation orders s_1,...,s_{n+1}.
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<u32>,
        /// Index of the distinguished variable.
        #[arg(long, default_value_t = 0)]
        variable: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(required = true)]
        forms: Vec<String>,
    },
    /// Reduced discriminant of a form of order s at (1:0:...:0).
    Rdisc {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        order: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        form: String,
    },
    /// Lowest terms of the discriminant of a normal form at a smooth point.
    SalmonCheck {
        #[arg(long)]
        nvars: usize,
        /// Point coordinates, comma separated rationals.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        point: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        form: String,
    },
    /// Table of enumerative formulas.
    Enum {
        #[arg(long)]
        max_degree: u32,
        /// Same as `--format json`.
        #[arg(long, conflicts_with = "markdown")]
        json: bool,
        /// Same as `--format markdown`.
        #[arg(long)]
        markdown: bool,
    },
    /// Projection of a complete intersection V(f, g) from a point on it.
    Project {
        #[arg(long)]
        nvars: usize,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        point: Vec<String>,
        /// Multiplicities of the point on V(f) and V(g).
        #[arg(long, value_delimiter = ',', num_args = 1)]
        multiplicities: Option<Vec<u32>>,
        f: String,
        g: String,
    },
    /// Run a seeded verification suite.
    Verify {
        suite: String,
        /// A seed `N` or an inclusive range `A..B`.
        #[arg(long, default_value = "0")]
        seed: String,
    },
}

/// Input problems exit with 2, failed computations with 1.
enum Failure {
    Usage(ElimError),
    Compute(ElimError),
}

impl From<ElimError> for Failure {
    fn from(e: ElimError) -> Self {
        match e {
            ElimError::Parse { .. }
            | ElimError::NvarsMismatch { .. }
            | ElimError::VariableOutOfRange { .. }
            | ElimError::NotHomogeneous(_)
            | ElimError::ZeroPolynomial
            | ElimError::DegreeTooSmall(_)
            | ElimError::InvalidInput(_) => Failure::Usage(e),
            _ => Failure::Compute(e),
        }
    }
}

fn usage<T>(r: Result<T, ElimError>) -> Result<T, Failure> {
    r.map_err(Failure::Usage)
}

/// A successful report plus whether every check in it passed.
struct Outcome {
    body: Map<String, Value>,
    markdown: Option<String>,
    ok: bool,
}

impl Outcome {
    fn new(command: &str, body: Value) -> Self {
        let mut map = Map::new();
        map.insert("schema".into(), json!(SCHEMA));
        map.insert("command".into(), json!(command));
        if let Value::Object(fields) = body {
            map.extend(fields);
        }
        Outcome {
            body: map,
            markdown: None,
            ok: true,
        }
    }
}

fn parse_forms(inputs: &[String], nvars: usize) -> Result<Vec<Polynomial>, Failure> {
    inputs
        .iter()
        .map(|s| usage(parse_polynomial(s, nvars)))
        .collect()
}

fn parse_point(coords: &[String], nvars: usize) -> Result<LinearPoint, Failure> {
    let values = coords
        .iter()
        .map(|c| {
            parse_rational(c.trim()).ok_or_else(|| {
                Failure::Usage(ElimError::InvalidInput(format!("bad coordinate '{c}'")))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != nvars {
        return Err(Failure::Usage(ElimError::NvarsMismatch {
            expected: nvars,
            found: values.len(),
        }));
    }
    Ok(LinearPoint::new(values))
}

fn form_degree(f: &Polynomial) -> Result<u32, Failure> {
    if f.is_zero() {
        return Err(Failure::Usage(ElimError::ZeroPolynomial));
    }
    f.homogeneous_total_degree()
        .ok_or_else(|| Failure::Usage(ElimError::NotHomogeneous(f.to_string())))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn parse_seeds(spec: &str) -> Result<Vec<u64>, Failure> {
    let bad = || Failure::Usage(ElimError::InvalidInput(format!("bad seed '{spec}'")));
    match spec.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![spec.trim().parse().map_err(|_| bad())?]),
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Res { nvars, forms } => {
            let forms = parse_forms(&forms, nvars)?;
            let system = usage(FormSystem::new(forms))?;
            let out = macaulay_resultant_detailed(&system)?;
            Ok(Outcome::new(
                "res",
                json!({
                    "nvars": nvars,
                    "degrees": system.degrees(),
                    "resultant": format_rational(&out.value),
                    "method": match out.method {
                        MacaulayMethod::Direct => "direct",
                        MacaulayMethod::CoordinateChange => "coordinate-change",
                        MacaulayMethod::Perturbation => "perturbation",
                    },
                    "matrix_size": out.matrix_size,
                }),
            ))
        }
        Command::Disc { nvars, form } => {
            let f = usage(parse_polynomial(&form, nvars))?;
            let r = discriminant(&f)?;
            let smooth = !r.value.is_zero();
            let mut body = to_value(&r);
            body["discriminant"] = json!(format_rational(&r.value));
            body["smooth"] = json!(smooth);
            Ok(Outcome::new("disc", body))
        }
        Command::Rres {
            nvars,
            orders,
            variable,
            seed,
            forms,
        } => {
            let forms = parse_forms(&forms, nvars)?;
            if orders.len() != forms.len() {
                return Err(Failure::Usage(ElimError::InvalidInput(format!(
                    "{} orders for {} forms",
                    orders.len(),
                    forms.len()
                ))));
            }
            let specs = forms
                .iter()
                .zip(&orders)
                .map(|(f, &s)| usage(TruncationSpec::with_variable(form_degree(f)?, s, variable)))
                .collect::<Result<Vec<_>, _>>()?;
            let system = usage(TruncatedSystem::new(forms, specs))?;
            let r = reduced_resultant(&system, seed)?;
            let mut body = json!({ "seed": seed, "orders": orders, "variable": variable });
            body["reduced_value"] = to_value(&r);
            body["reduced_resultant"] = match &r.root {
                Some(root) => json!(format_rational(root)),
                None => Value::Null,
            };
            Ok(Outcome::new("rres", body))
        }
        Command::Rdisc {
            nvars,
            order,
            seed,
            form,
        } => {
            let h = usage(parse_polynomial(&form, nvars))?;
            let spec = usage(TruncationSpec::new(form_degree(&h)?, order))?;
            let r = reduced_discriminant(&h, spec, seed)?;
            let mut body = to_value(&r);
            body["seed"] = json!(seed);
            body["order"] = json!(order);
            Ok(Outcome::new("rdisc", body))
        }
        Command::SalmonCheck {
            nvars,
            point,
            seed,
            form,
        } => {
            let f = usage(parse_polynomial(&form, nvars))?;
            let p = parse_point(&point, nvars)?;
            let nf = normal_form_at_point(&f, &p)?;
            let report = salmon_expansion(&nf, seed)?;
            let mut body = json!({
                "seed": seed,
                "normal_form": {
                    "n": nf.n,
                    "d": nf.d,
                    "t": format_rational(&nf.t),
                    "slices": nf.slices.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                },
                "expansion": to_value(&report),
            });
            if nf.n == 2 {
                body["plane"] = to_value(&plane_salmon_coefficients(&nf, seed)?);
            }
            let mut out = Outcome::new("salmon-check", body);
            out.ok = report.identity_holds != Some(false);
            Ok(out)
        }
        Command::Enum {
            max_degree,
            ..
        } => {
            if max_degree < 2 {
                return Err(Failure::Usage(ElimError::InvalidInput(
                    "--max-degree must be at least 2".into(),
                )));
            }
            let table = EnumerativeTable::new(max_degree);
            let checks = consistency_checks(max_degree);
            let ok = checks.iter().all(|c| c.holds);
            let mut body = table.to_json();
            body["consistency"] = to_value(&checks);
            let mut out = Outcome::new("enum", body);
            out.ok = ok;
            out.markdown = Some(table.to_markdown());
            Ok(out)
        }
        Command::Project {
            nvars,
            point,
            multiplicities,
            f,
            g,
        } => {
            let f = usage(parse_polynomial(&f, nvars))?;
            let g = usage(parse_polynomial(&g, nvars))?;
            let p = parse_point(&point, nvars)?;
            let mult = match multiplicities.as_deref() {
                None => None,
                Some([a, b]) => Some((*a, *b)),
                Some(_) => {
                    return Err(Failure::Usage(ElimError::InvalidInput(
                        "--multiplicities takes two values a,b".into(),
                    )))
                }
            };
            let proj = project_complete_intersection(&f, &g, &p, mult)?;
            Ok(Outcome::new(
                "project",
                json!({
                    "projection": proj.to_string(),
                    "degree": proj.homogeneous_total_degree(),
                }),
            ))
        }
        Command::Verify { suite, seed } => {
            let suite: Suite = usage(suite.parse())?;
            let seeds = parse_seeds(&seed)?;
            let reports = seeds
                .iter()
                .map(|&s| run_suite(suite, s))
                .collect::<Result<Vec<_>, _>>()?;
            let passed = reports.iter().all(|r| r.passed);
            let mut out = if let [single] = reports.as_slice() {
                Outcome::new("verify", to_value(single))
            } else {
                let same = reports
                    .windows(2)
                    .all(|w| w[0].invariant_values == w[1].invariant_values);
                let mut body = json!({
                    "suite": suite.name(),
                    "seeds": seeds,
                    "passed": passed && same,
                    "reports": to_value(&reports),
                });
                if reports.iter().any(|r| !r.invariant_values.is_empty()) {
                    body["seed_independent"] = json!(same);
                }
                Outcome::new("verify", body)
            };
            out.ok = out.body.get("passed") == Some(&json!(true));
            Ok(out)
        }
    }
}

fn error_object(e: &ElimError) -> Value {
    let mut err = json!({ "kind": e.kind(), "message": e.to_string() });
    if let ElimError::Parse { offset, expected } = e {
        err["offset"] = json!(offset);
        err["expected"] = json!(expected);
    }
    json!({ "schema": SCHEMA, "error": err })
}

/// Writes to stdout; a closed pipe is not an error.
fn write_out(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn emit(value: &Value, pretty: bool) {
    let mut text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("json values serialize");
    text.push('\n');
    write_out(&text);
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("ELIMKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::Usage(ElimError::InvalidInput(format!("ELIMKIT_THREADS='{raw}'")))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Compute(ElimError::Internal(e.to_string())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut format = cli.format;
    if let Command::Enum { json, markdown, .. } = &cli.command {
        if *markdown {
            format = Format::Markdown;
        } else if *json {
            format = Format::Json;
        }
    }
    let result = configure_threads().and_then(|()| run(cli.command));
    match result {
        Ok(outcome) => {
            match format {
                Format::Json => emit(&Value::Object(outcome.body), cli.pretty),
                Format::Markdown => {
                    let text = outcome
                        .markdown
                        .unwrap_or_else(|| render::markdown(&outcome.body));
                    write_out(&text);
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(e)) => {
            emit(&error_object(&e), cli.pretty);
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            emit(&error_object(&e), cli.pretty);
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
