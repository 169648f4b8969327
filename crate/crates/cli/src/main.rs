mod output;
mod parse;

use std::collections::BTreeMap;
use std::process::ExitCode;

use charclass::algebra::{ExactRational, Polynomial};
use charclass::cobordism::{
    designated_families, distinct_cobordism_types, elliptic_rank_profile, elliptic_span, family_polynomial,
    pontryagin_numbers, span_membership, unbounded_verdict, Basis, FamilySpec, Functional, Verdict,
};
use charclass::genera::{ahat, elliptic_q_coefficients, signature, twisted_ahat_tangent};
use charclass::ManifoldModel;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use output::{Format, Report};
use parse::{parse_functional, parse_manifold, parse_range, ResolveError};

#[derive(Parser)]
#[command(name = "charclass", version, about = "Exact characteristic numbers, genera and rational cobordism")]
struct Cli {
    /// Canonical JSON output.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output for tabular commands.
    #[arg(long, global = true)]
    csv: bool,
    /// Suppress warnings.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All Pontryagin numbers of a manifold.
    Pontryagin {
        #[arg(long, short)]
        manifold: String,
    },
    /// Signature, Â-genus or Â(M; T_C M).
    Genus {
        #[arg(long, short)]
        manifold: String,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// q-coefficients of the normalized elliptic genus.
    Elliptic {
        #[arg(long, short)]
        manifold: String,
        /// Defaults to dim/4.
        #[arg(long)]
        q_order: Option<usize>,
    },
    /// Whether the manifold model is spin.
    Spin {
        #[arg(long, short)]
        manifold: String,
    },
    /// Functionals of the elliptic q-coefficients and the rank of their span.
    Span {
        #[arg(long)]
        dim: u32,
        /// Defaults to dim/4.
        #[arg(long)]
        q_order: Option<usize>,
    },
    /// Whether a functional lies in the span of the elliptic q-coefficients.
    Member {
        #[arg(long)]
        dim: u32,
        #[arg(short = 'f', long = "functional", alias = "f", allow_hyphen_values = true)]
        functional: String,
        #[arg(long)]
        q_order: Option<usize>,
    },
    /// Values of a functional along a family and its polynomial in c.
    Scan {
        #[arg(long)]
        family: String,
        #[arg(short = 'f', long = "functional", alias = "f", allow_hyphen_values = true)]
        functional: String,
        #[arg(long, default_value = "1..5", allow_hyphen_values = true)]
        range: String,
    },
    /// Bounded or unbounded on the designated families of a dimension.
    Verdict {
        #[arg(long)]
        dim: u32,
        #[arg(short = 'f', long = "functional", alias = "f", allow_hyphen_values = true)]
        functional: String,
    },
    /// Whether family members have pairwise distinct rational cobordism types.
    Distinct {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "1..5", allow_hyphen_values = true)]
        range: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Sign,
    Ahat,
    #[value(name = "ahat_t")]
    AhatT,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<charclass::Error> for Failure {
    fn from(e: charclass::Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<ResolveError> for Failure {
    fn from(e: ResolveError) -> Self {
        match e {
            ResolveError::Library(e) => e.into(),
            e => Failure::Input(e.to_string()),
        }
    }
}

impl From<parse::ParseError> for Failure {
    fn from(e: parse::ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let mut warnings = Vec::new();
    let result = run(cli.command, &mut warnings);
    if !cli.quiet {
        for w in &warnings {
            eprintln!("warning: {w}");
        }
    }
    match result {
        Ok(report) => match report.write(format, &mut std::io::stdout().lock()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(3)
            }
        },
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn manifold(text: &str, warnings: &mut Vec<String>) -> Result<ManifoldModel, Failure> {
    Ok(parse_manifold(text)?.build(warnings)?)
}

fn family(name: &str) -> Result<FamilySpec, Failure> {
    Ok(FamilySpec::by_name(name)?)
}

fn s(x: &impl ToString) -> Value {
    Value::String(x.to_string())
}

fn run(command: Command, warnings: &mut Vec<String>) -> Result<Report, Failure> {
    match command {
        Command::Pontryagin { manifold: m } => {
            let m = manifold(&m, warnings)?;
            let v = pontryagin_numbers(&m)?;
            // keys in string order, for JSON and CSV alike
            let sorted: BTreeMap<String, String> =
                v.values().iter().map(|(p, x)| (p.to_string(), x.to_string())).collect();
            let (keys, vals): (Vec<String>, Vec<String>) = sorted.into_iter().unzip();
            let text = keys.iter().zip(&vals).map(|(k, x)| format!("{k} = {x}\n")).collect();
            let numbers: Map<String, Value> = keys.iter().cloned().zip(vals.iter().map(s)).collect();
            Ok(Report {
                text,
                json: json!({ "manifold": m.name(), "dimension": m.real_dimension(), "numbers": numbers }),
                table: Some((keys, vec![vals])),
            })
        }
        Command::Genus { manifold: m, which } => {
            let m = manifold(&m, warnings)?;
            let (name, value) = match which {
                Which::Sign => ("sign", signature(&m)?),
                Which::Ahat => ("ahat", ahat(&m)?),
                Which::AhatT => ("ahat_t", twisted_ahat_tangent(&m)?),
            };
            Ok(Report {
                text: format!("{name}({}) = {value}", m.name()),
                json: json!({ "manifold": m.name(), "genus": name, "value": s(&value) }),
                table: None,
            })
        }
        Command::Elliptic { manifold: m, q_order } => {
            let m = manifold(&m, warnings)?;
            let q_order = q_order.unwrap_or(m.real_dimension() as usize / 4);
            let coeffs = elliptic_q_coefficients(&m, q_order)?;
            let strs: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            Ok(Report {
                text: format!("[{}]", strs.join(", ")),
                json: json!({ "manifold": m.name(), "q_order": q_order, "coefficients": strs }),
                table: Some(((0..=q_order).map(|j| format!("q^{j}")).collect(), vec![strs])),
            })
        }
        Command::Spin { manifold: m } => {
            let m = manifold(&m, warnings)?;
            let spin = m.is_spin();
            Ok(Report { text: spin.to_string(), json: json!({ "manifold": m.name(), "spin": spin }), table: None })
        }
        Command::Span { dim, q_order } => {
            let n = q_order.unwrap_or(dim as usize / 4);
            let (functionals, rank) = elliptic_span(dim, n)?;
            let profile = elliptic_rank_profile(dim, n)?;
            let strs: Vec<String> = functionals.iter().map(ToString::to_string).collect();
            let mut text: String = strs.iter().enumerate().map(|(j, f)| format!("ell[{j}] = {f}\n")).collect();
            text += &format!("rank = {rank}\n");
            let ranks: Vec<usize> = profile.iter().map(|&(_, r)| r).collect();
            Ok(Report {
                text,
                json: json!({ "dimension": dim, "q_order": n, "functionals": strs, "rank": rank, "rank_by_order": ranks }),
                table: Some((
                    vec!["j".into(), "functional".into(), "rank_through_j".into()],
                    strs.iter()
                        .zip(&ranks)
                        .enumerate()
                        .map(|(j, (f, r))| vec![j.to_string(), f.clone(), r.to_string()])
                        .collect(),
                )),
            })
        }
        Command::Member { dim, functional, q_order } => {
            let basis = Basis::new(dim)?;
            let f = parse_functional(&functional, &basis)?;
            let n = q_order.unwrap_or(dim as usize / 4);
            let (span, _) = elliptic_span(dim, n)?;
            let member = span_membership(&f, &span)?;
            let verdict = if member { "in-span" } else { "not-in-span" };
            Ok(Report {
                text: verdict.to_string(),
                json: json!({ "dimension": dim, "functional": s(&f), "q_order": n, "in_span": member }),
                table: None,
            })
        }
        Command::Scan { family: name, functional, range } => {
            let fam = family(&name)?;
            let basis = Basis::new(fam.dimension())?;
            let f = parse_functional(&functional, &basis)?;
            let params = parse_range(&range)?;
            let values = params
                .iter()
                .map(|&c| Ok((c, f.evaluate_on(&fam.build(c)?)?)))
                .collect::<Result<Vec<(i64, ExactRational)>, charclass::Error>>()?;
            let poly = family_polynomial(&fam, &f)?;
            let mut text = format!("family {} ({})\nf = {f}\n", fam.name(), fam.substitution());
            for (c, v) in &values {
                text += &format!("c = {c}: {v}\n");
            }
            text += &format!("polynomial: {poly}\n");
            let rows: Vec<Value> = values.iter().map(|(c, v)| json!({ "c": c, "value": s(v) })).collect();
            Ok(Report {
                text,
                json: json!({
                    "family": fam.name(),
                    "substitution": fam.substitution(),
                    "functional": s(&f),
                    "values": rows,
                    "polynomial": s(&poly),
                }),
                table: Some((
                    vec!["c".into(), "value".into()],
                    values.iter().map(|(c, v)| vec![c.to_string(), v.to_string()]).collect(),
                )),
            })
        }
        Command::Verdict { dim, functional } => {
            let basis = Basis::new(dim)?;
            let f = parse_functional(&functional, &basis)?;
            let fams = designated_families(dim)?;
            let verdict = unbounded_verdict(&f, &fams)?;
            Ok(verdict_report(&f, &fams, &verdict))
        }
        Command::Distinct { family: name, range } => {
            let fam = family(&name)?;
            let params = parse_range(&range)?;
            let report = distinct_cobordism_types(&fam, &params)?;
            let sep = |p: &Option<charclass::Partition>| p.as_ref().map_or("none".to_string(), ToString::to_string);
            let mut text = format!("family {} ({})\ndistinct: {}\n", fam.name(), fam.substitution(), report.distinct);
            for (a, b, p) in &report.separators {
                text += &format!("c = {a}, {b}: {}\n", sep(p));
            }
            let pairs: Vec<Value> = report
                .separators
                .iter()
                .map(|(a, b, p)| json!({ "pair": [a, b], "separator": p.as_ref().map(|p| p.to_string()) }))
                .collect();
            Ok(Report {
                text,
                json: json!({
                    "family": fam.name(),
                    "substitution": fam.substitution(),
                    "distinct": report.distinct,
                    "separators": pairs,
                }),
                table: Some((
                    vec!["c1".into(), "c2".into(), "separator".into()],
                    report.separators.iter().map(|(a, b, p)| vec![a.to_string(), b.to_string(), sep(p)]).collect(),
                )),
            })
        }
    }
}

fn verdict_report(f: &Functional, fams: &[FamilySpec], verdict: &Verdict) -> Report {
    let names: Vec<&str> = fams.iter().map(FamilySpec::name).collect();
    match verdict {
        Verdict::Unbounded { witness, substitution, polynomial } => Report {
            text: format!("unbounded\nwitness: {witness} ({substitution})\npolynomial: {polynomial}"),
            json: json!({
                "functional": s(f),
                "families": names,
                "verdict": "unbounded",
                "witness": witness,
                "substitution": substitution,
                "polynomial": s(polynomial),
            }),
            table: None,
        },
        Verdict::BoundedOnFamilies { polynomials } => {
            let mut text = "bounded_on_families\n".to_string();
            for (name, p) in polynomials {
                text += &format!("{name}: {p}\n");
            }
            let per: Map<String, Value> =
                polynomials.iter().map(|(n, p): &(String, Polynomial)| (n.clone(), s(p))).collect();
            Report {
                text,
                json: json!({
                    "functional": s(f),
                    "families": names,
                    "verdict": "bounded_on_families",
                    "polynomials": per,
                }),
                table: None,
            }
        }
    }
}
