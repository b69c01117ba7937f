//! Request parsing and rendering for the `wrapsurg` command.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use wrapsurg::classify::{
    classify_reduced, exceptional_slopes_reduced, predict_reduced, reduce, surgery_in_s3_reduced, S3Surgery,
};
use wrapsurg::parse::{parse_knot, parse_slope};
use wrapsurg::{Error, Slope, SurgeryClassification, TwistedImage, WrappedKnot};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_KNOT: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Slopes,
    Normalize,
    Twist,
    Predict,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Request {
    pub command: Command,
    pub knot: WrappedKnot,
    pub slope: Option<Slope>,
    pub range: Option<(BigInt, BigInt)>,
    pub n: Option<(BigInt, BigInt)>,
    pub format: Format,
    pub moves: bool,
}

/// A failed request: message plus exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

#[derive(Parser, Debug)]
#[command(name = "wrapsurg", version, about = "Classify Dehn surgeries on wrapped Montesinos knots")]
pub struct Cli {
    #[command(subcommand)]
    pub action: Action,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Common {
    /// Knot expression, e.g. `K1[-1/2,1/3]`.
    #[arg(allow_hyphen_values = true)]
    knot: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print the equivalence witness.
    #[arg(long)]
    moves: bool,
}

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Classify one surgery slope.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// List the exceptional slopes.
    Slopes {
        #[command(flatten)]
        common: Common,
    },
    /// Show the normal form.
    Normalize {
        #[command(flatten)]
        common: Common,
    },
    /// Twist along the meridian disk of the solid torus.
    Twist {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        slope: Option<String>,
        /// Twist range `a..b`, inclusive.
        #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
        n: String,
    },
    /// Predict the twisted family in the 3-sphere.
    Predict {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
    },
    /// Exceptional slopes plus an integral slope sweep.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true, default_value = "-10..10")]
        range: String,
    },
    /// Run one request per line from a file, or standard input.
    Batch { file: Option<std::path::PathBuf> },
}

fn annotate(src: &str, e: &Error) -> String {
    match e {
        Error::Parse { pos, msg } => format!("parse error: {msg}\n  {src}\n  {}^", " ".repeat(*pos)),
        other => other.to_string(),
    }
}

fn knot_failure(src: &str, e: Error) -> Failure {
    let code = if matches!(e, Error::Parse { .. }) { EXIT_PARSE } else { EXIT_KNOT };
    Failure { code, message: annotate(src, &e) }
}

fn slope_arg(src: &str) -> Result<Slope, Failure> {
    parse_slope(src).map_err(|e| Failure { code: EXIT_PARSE, message: annotate(src, &e) })
}

/// Parses `a..b` into an inclusive integer range.
pub fn parse_range(src: &str) -> Result<(BigInt, BigInt), Failure> {
    let bad = |msg: &str| Failure { code: EXIT_PARSE, message: format!("bad range `{src}`: {msg}") };
    let (lo, hi) = src.split_once("..").ok_or_else(|| bad("expected a..b"))?;
    let lo: BigInt = lo.trim().parse().map_err(|_| bad("left end is not an integer"))?;
    let hi: BigInt = hi.trim().parse().map_err(|_| bad("right end is not an integer"))?;
    if lo > hi {
        return Err(bad("empty range"));
    }
    if &hi - &lo > BigInt::from(100_000) {
        return Err(bad("more than 100000 values"));
    }
    Ok((lo, hi))
}

impl Request {
    fn from_action(action: Action) -> Result<Request, Failure> {
        let (command, common, slope, range, n) = match action {
            Action::Classify { common, slope } => (Command::Classify, common, Some(slope), None, None),
            Action::Slopes { common } => (Command::Slopes, common, None, None, None),
            Action::Normalize { common } => (Command::Normalize, common, None, None, None),
            Action::Twist { common, slope, n } => (Command::Twist, common, slope, None, Some(n)),
            Action::Predict { common, slope, n } => (Command::Predict, common, Some(slope), None, n),
            Action::Table { common, range } => (Command::Table, common, None, Some(range), None),
            Action::Batch { .. } => unreachable!("batch is handled by the caller"),
        };
        let knot = parse_knot(&common.knot).map_err(|e| knot_failure(&common.knot, e))?;
        Ok(Request {
            command,
            knot,
            slope: slope.as_deref().map(slope_arg).transpose()?,
            range: range.as_deref().map(parse_range).transpose()?,
            n: n.as_deref().map(parse_range).transpose()?,
            format: common.format,
            moves: common.moves,
        })
    }
}

/// Parses an argument list without the program name.
pub fn parse<I, S>(args: I) -> Result<Request, Failure>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("wrapsurg".to_string()).chain(args.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(argv).map_err(|e| Failure {
        code: if e.use_stderr() { EXIT_PARSE } else { EXIT_OK },
        message: e.to_string(),
    })?;
    if matches!(cli.action, Action::Batch { .. }) {
        return Err(Failure { code: EXIT_PARSE, message: "batch requests cannot be nested".into() });
    }
    Request::from_action(cli.action)
}

/// Rendered output of one request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn classification_json(r: &Slope, c: &SurgeryClassification) -> Value {
    let tagged = serde_json::to_value(c).expect("serializable");
    json!({
        "type": c.kind(),
        "slope": r.to_string(),
        "certificate": tagged.get("certificate").cloned().unwrap_or(Value::Null),
    })
}

fn inclusive(range: &(BigInt, BigInt)) -> impl Iterator<Item = BigInt> + '_ {
    let mut cur = range.0.clone();
    std::iter::from_fn(move || {
        if cur > range.1 {
            return None;
        }
        let out = cur.clone();
        cur += 1;
        Some(out)
    })
}

fn image_text(img: &TwistedImage) -> String {
    let join = |v: &[Slope]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
    match img {
        TwistedImage::Montesinos { entries, .. } => format!("M[{}]", join(entries)),
        TwistedImage::Degenerate2Bridge { summands, .. } => {
            let parts: Vec<String> = summands.iter().map(|s| format!("b({s})")).collect();
            parts.join(" # ")
        }
    }
}

fn s3_text(s: &S3Surgery) -> String {
    match s {
        S3Surgery::Known { manifold, torus_check: Some((p, q)) } => {
            format!("{manifold} (agrees with T({p},{q}) surgery)")
        }
        S3Surgery::Known { manifold, torus_check: None } => manifold.to_string(),
        S3Surgery::Unknown => "not determined".into(),
    }
}

/// Executes a request.
pub fn run(req: &Request) -> Outcome {
    let red = reduce(&req.knot);
    let degenerate = red.normal_form.is_degenerate();
    let mut doc = json!({
        "input": req.knot.to_string(),
        "normal_form": serde_json::to_value(&red.normal_form).expect("serializable"),
        "equivalence_moves": serde_json::to_value(&red.moves).expect("serializable"),
    });
    let mut text = String::new();
    let _ = writeln!(text, "knot: {}", req.knot);
    let _ = writeln!(text, "winding number: {}", req.knot.winding_number());
    if req.moves || req.command == Command::Normalize {
        let _ = writeln!(text, "normal form: {}", red.normal_form.representative);
        let moves: Vec<String> = red.moves.iter().map(|m| m.to_string()).collect();
        let _ = writeln!(text, "moves: {}", if moves.is_empty() { "none".into() } else { moves.join(", ") });
    }
    match req.command {
        Command::Normalize => {
            let nf = &red.normal_form;
            let fracs: Vec<String> = nf.fracs.iter().map(|f| f.to_string()).collect();
            let _ = writeln!(text, "e0: {}", nf.e0);
            let _ = writeln!(text, "fractions: [{}]", fracs.join(","));
            let _ = writeln!(text, "sum: {}", req.knot.tangle().sum());
            doc["sum"] = json!(req.knot.tangle().sum().to_string());
        }
        Command::Classify => {
            let r = req.slope.as_ref().expect("classify takes a slope");
            let c = classify_reduced(&red, r);
            let _ = writeln!(text, "slope {r}: {c}");
            doc["classification"] = classification_json(r, &c);
            doc["family_prediction"] = serde_json::to_value(predict_reduced(&red, r)).expect("serializable");
        }
        Command::Slopes | Command::Table => {
            let ex = exceptional_slopes_reduced(&red);
            let _ = writeln!(text, "exceptional slopes:");
            if ex.is_empty() {
                let _ = writeln!(text, "  none");
            }
            for (r, c) in &ex {
                let _ = writeln!(text, "  {r}: {c}");
            }
            doc["exceptional_slopes"] = ex.iter().map(|(r, c)| classification_json(r, c)).collect();
            if let Some(range) = &req.range {
                let _ = writeln!(text, "sweep:");
                let mut rows = Vec::new();
                for p in inclusive(range) {
                    let r = Slope::integer(p);
                    let c = classify_reduced(&red, &r);
                    let _ = writeln!(text, "  {r}: {c}");
                    rows.push(classification_json(&r, &c));
                }
                doc["sweep"] = Value::Array(rows);
            }
        }
        Command::Twist => {
            let mut rows = Vec::new();
            for n in inclusive(req.n.as_ref().expect("twist has a default range")) {
                let img = req.knot.twist(&n);
                let mut row = json!({ "n": n.to_string(), "image": image_text(&img) });
                let mut line = format!("  n={n}: {}", image_text(&img));
                if img.is_unknot() {
                    line.push_str(" (unknot)");
                }
                if let Some(r) = &req.slope {
                    let rn = req.knot.transport_slope(r, &n);
                    let _ = write!(line, ", slope {rn}");
                    row["slope"] = json!(rn.to_string());
                }
                let _ = writeln!(text, "{line}");
                rows.push(row);
            }
            doc["twists"] = Value::Array(rows);
        }
        Command::Predict => {
            let r = req.slope.as_ref().expect("predict takes a slope");
            let c = classify_reduced(&red, r);
            let pred = predict_reduced(&red, r);
            let _ = writeln!(text, "slope {r}: {c}");
            let _ = writeln!(text, "family: {}", serde_json::to_string(&pred).expect("serializable"));
            doc["classification"] = classification_json(r, &c);
            doc["family_prediction"] = serde_json::to_value(&pred).expect("serializable");
            if let Some(range) = &req.n {
                let mut rows = Vec::new();
                for n in inclusive(range) {
                    let rn = req.knot.transport_slope(r, &n);
                    let row = match surgery_in_s3_reduced(&red, r, &n) {
                        Ok(s) => {
                            let _ = writeln!(text, "  n={n}, slope {rn}: {}", s3_text(&s));
                            json!({ "n": n.to_string(), "slope": rn.to_string(), "surgery": s })
                        }
                        Err(e) => {
                            let _ = writeln!(text, "  n={n}: {e}");
                            json!({ "n": n.to_string(), "slope": rn.to_string(), "error": e.to_string() })
                        }
                    };
                    rows.push(row);
                }
                doc["s3_family"] = Value::Array(rows);
            }
        }
    }
    for note in &red.notes {
        let _ = writeln!(text, "note: {note}");
    }
    if !red.notes.is_empty() {
        doc["notes"] = json!(red.notes);
    }
    if degenerate {
        let _ = writeln!(text, "knot is degenerate: it is a core or a trivial knot of the solid torus");
        doc["degenerate"] = json!(true);
    }
    let output = match req.format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&doc).expect("serializable") + "\n",
    };
    Outcome { output, code: if degenerate { EXIT_KNOT } else { EXIT_OK } }
}

/// Parses and runs one argument list.
pub fn execute<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    match parse(args) {
        Ok(req) => run(&req),
        Err(f) => Outcome { output: f.message + "\n", code: f.code },
    }
}

/// Runs one request per non-empty, non-comment line. Lines are processed
/// in parallel; output keeps input order. The exit code is the largest
/// line code.
pub fn batch(input: &str) -> Outcome {
    use rayon::prelude::*;
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .collect();
    let results: Vec<(usize, Outcome)> =
        lines.par_iter().map(|(i, l)| (*i, execute(l.split_whitespace()))).collect();
    let mut output = String::new();
    let mut code = EXIT_OK;
    for (i, o) in results {
        if o.code != EXIT_OK {
            let _ = writeln!(output, "line {}: exit {}", i + 1, o.code);
        }
        output.push_str(&o.output);
        code = code.max(o.code);
    }
    Outcome { output, code }
}
