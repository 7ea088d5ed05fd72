//! The `brtknot` command-line front end.

use std::io::{BufRead, IsTerminal, Read, Write};
use std::path::PathBuf;

use clap::{Args, ColorChoice, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bracket::{
    adequacy, bracket_statesum_with_cap, bracket_via_brt, genus_invariance_certificate_from, jones_from_bracket, span_bounds_from,
    turaev_genus_bound_from, DEFAULT_STATESUM_CAP,
};
use crate::brt::{brt_recursive_with_cap, brt_subgraph, brt_tree_expansion, EdgeOrder, Method, DEFAULT_BASE_CASE_CAP};
use crate::circles::trace_state_circles;
use crate::diagram::{parse_braid, parse_pd, PlanarDiagram, State};
use crate::error::{Error, ParseError};
use crate::poly::specialize_brt;
use crate::ribbon::{EdgeId, RibbonGraph};
use crate::state_graph::{build_state_graph, ribbon_from_circles, turaev_genus_of_diagram};
use crate::verify::{run_verify, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "brtknot", version, about = "Ribbon graphs, BRT polynomials and Jones polynomials of link diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// PD code, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]". Read from stdin when neither input flag is given.
    #[arg(long, conflicts_with = "braid")]
    pd: Option<String>,
    /// Braid word of signed generator indices, e.g. "1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    braid: Option<String>,
    /// Strand count for --braid (defaults to one more than the largest index).
    #[arg(long, requires = "braid")]
    strands: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BracketMethod {
    Brt,
    Statesum,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Echo the diagram in canonical JSON.
    Parse(Input),
    /// Ribbon graph of a state: cycles of σ0, σ1, σ2 and counts.
    Ribbon {
        #[command(flatten)]
        input: Input,
        /// all-a, all-b, or a bitstring with 0 = A and 1 = B per crossing.
        #[arg(long, default_value = "all-a")]
        state: String,
    },
    /// BRT polynomial of the all-A ribbon graph.
    Brt {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "recursive")]
        method: Method,
        /// Comma-separated crossing indices ordering the edges (tree method).
        #[arg(long)]
        edge_order: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BASE_CASE_CAP)]
        base_case_cap: usize,
    },
    /// Kauffman bracket.
    Bracket {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "brt")]
        method: BracketMethod,
        /// Largest crossing count accepted by the state sum.
        #[arg(long, default_value_t = DEFAULT_STATESUM_CAP)]
        cap: usize,
    },
    /// Jones polynomial in t (quarter exponents written as fractions).
    Jones(Input),
    /// Loop scans of the all-A and all-B graphs.
    Adequacy(Input),
    /// Degree bounds for the bracket.
    Span(Input),
    /// Diagram genus and the span bound on the Turaev genus.
    Tgenus(Input),
    /// Randomized cross-checks on seeded braid closures.
    Verify {
        #[arg(long = "random", default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
        #[arg(long, default_value_t = 5)]
        max_strands: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Batch mode: lines of `name<TAB>PD` in, one JSON record per line out.
    Table { file: PathBuf },
}

/// Failure of one command: exit code plus message for standard error.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.exit_code(), e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Error::from(e).into()
    }
}

/// Rewrites every JSON number as its decimal string.
pub fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_numbers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        other => other,
    }
}

fn read_diagram(input: &Input, stdin: &mut dyn Read) -> Result<PlanarDiagram, Failure> {
    if let Some(pd) = &input.pd {
        return Ok(parse_pd(pd)?);
    }
    if let Some(word) = &input.braid {
        return Ok(parse_braid(word, input.strands)?);
    }
    let mut text = String::new();
    stdin.read_to_string(&mut text).map_err(|e| Failure(1, format!("reading stdin: {e}")))?;
    Ok(parse_pd(&text)?)
}

fn poly_json<E: crate::poly::Exponent>(p: &crate::poly::Poly<E>) -> Value {
    json!({ "terms": p.to_json_value(), "text": p.to_string() })
}

fn ribbon_json(g: &RibbonGraph) -> Value {
    let c = g.counts();
    let cycles = g.cycle_notation();
    json!({
        "sigma0": cycles.sigma0,
        "sigma1": cycles.sigma1,
        "sigma2": cycles.sigma2,
        "counts": c,
        "euler_characteristic": c.euler_characteristic(),
    })
}

fn parse_edge_order(g: &RibbonGraph, text: &str) -> Result<EdgeOrder, Failure> {
    let ids = text
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse::<u32>().map(EdgeId))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure(1, format!("bad edge order {text:?}: {e}")))?;
    Ok(EdgeOrder::new(g, ids)?)
}

/// The per-diagram record printed by `table`.
pub fn analysis_record(d: &PlanarDiagram) -> Result<Value, Error> {
    let bracket = bracket_via_brt(d)?;
    let jones = jones_from_bracket(d, &bracket)?;
    let adequate = adequacy(d)?;
    let span = span_bounds_from(d, &bracket, adequate)?;
    let bound = turaev_genus_bound_from(d, &bracket)?;
    let cert = genus_invariance_certificate_from(d, &bracket, adequate)?;
    Ok(json!({
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "writhe": d.writhe(),
        "jones": poly_json(&jones),
        "span_t": bound.jones_span,
        "bracket_span": span.span,
        "adequacy": adequate,
        "span_bounds": span,
        "diagram_genus": bound.genus_of_diagram,
        "genus_bound": bound.upper_bound_from_span,
        "certificate": cert,
    }))
}

fn run_command(command: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let emit = |out: &mut dyn Write, v: Value| -> Result<(), Failure> {
        writeln!(out, "{}", stringify_numbers(v)).map_err(|e| Failure(2, format!("writing output: {e}")))
    };
    match command {
        Command::Parse(input) => {
            let d = read_diagram(&input, stdin)?;
            let mut v = d.to_json();
            v["components"] = json!(d.component_count());
            v["writhe"] = json!(d.writhe());
            v["connected"] = json!(d.is_connected());
            emit(out, v)?;
        }
        Command::Ribbon { input, state } => {
            let d = read_diagram(&input, stdin)?;
            let n = d.crossing_count();
            let s = match state.as_str() {
                "all-a" => State::all_a(n),
                "all-b" => State::all_b(n),
                bits => State::parse_bits(bits, n)?,
            };
            let g = build_state_graph(&d, &s)?;
            let circles = trace_state_circles(&d, &s);
            debug_assert_eq!(ribbon_from_circles(&circles), g);
            let mut v = ribbon_json(&g);
            v["state"] = json!(s.to_string());
            v["circles"] = json!(circles
                .circles
                .iter()
                .map(|c| json!({ "size": c.chord_ends.len(), "depth": c.depth, "rotation": c.rotation }))
                .collect::<Vec<_>>());
            emit(out, v)?;
        }
        Command::Brt { input, method, edge_order, base_case_cap } => {
            let d = read_diagram(&input, stdin)?;
            let g = crate::state_graph::all_a(&d)?;
            let c = match (method, edge_order) {
                (Method::Tree, Some(text)) => brt_tree_expansion(&g, &parse_edge_order(&g, &text)?)?,
                (Method::Tree, None) => brt_tree_expansion(&g, &EdgeOrder::ascending(&g))?,
                (_, Some(_)) => return Err(Failure(1, "--edge-order applies to --method tree only".into())),
                (Method::Recursive, None) => brt_recursive_with_cap(&g, base_case_cap)?,
                (Method::Subgraph, None) => brt_subgraph(&g)?,
            };
            let bracket = specialize_brt(&c, g.edge_count(), g.vertex_count())?;
            emit(
                out,
                json!({ "method": format!("{method:?}").to_lowercase(), "polynomial": poly_json(&c), "bracket": poly_json(&bracket) }),
            )?;
        }
        Command::Bracket { input, method, cap } => {
            let d = read_diagram(&input, stdin)?;
            let b = match method {
                BracketMethod::Brt => bracket_via_brt(&d)?,
                BracketMethod::Statesum => bracket_statesum_with_cap(&d, cap)?,
            };
            emit(out, json!({ "method": format!("{method:?}").to_lowercase(), "bracket": poly_json(&b) }))?;
        }
        Command::Jones(input) => {
            let d = read_diagram(&input, stdin)?;
            let b = bracket_via_brt(&d)?;
            let v = jones_from_bracket(&d, &b)?;
            emit(out, json!({ "writhe": d.writhe(), "jones": poly_json(&v), "span_t": crate::poly::fmt_quarter(v.span_quarters()) }))?;
        }
        Command::Adequacy(input) => {
            let d = read_diagram(&input, stdin)?;
            emit(out, json!(adequacy(&d)?))?;
        }
        Command::Span(input) => {
            let d = read_diagram(&input, stdin)?;
            let b = bracket_via_brt(&d)?;
            emit(out, json!(span_bounds_from(&d, &b, adequacy(&d)?)?))?;
        }
        Command::Tgenus(input) => {
            let d = read_diagram(&input, stdin)?;
            let b = bracket_via_brt(&d)?;
            let bound = turaev_genus_bound_from(&d, &b)?;
            let cert = genus_invariance_certificate_from(&d, &b, adequacy(&d)?)?;
            debug_assert_eq!(turaev_genus_of_diagram(&d)?, bound.genus_of_diagram);
            emit(out, json!({ "bound": bound, "certificate": cert }))?;
        }
        Command::Verify { trials, max_crossings, max_strands, seed } => {
            if max_crossings == 0 || max_strands < 2 {
                return Err(Failure(2, "verify needs --max-crossings >= 1 and --max-strands >= 2".into()));
            }
            let summary = run_verify(&VerifyConfig { trials, max_crossings, max_strands, seed });
            let passed = summary.passed();
            emit(out, json!(summary))?;
            if !passed {
                let _ = writeln!(err, "verify: {} mismatch(es)", summary.mismatches.len());
                return Ok(3);
            }
        }
        Command::Table { file } => {
            let f = std::fs::File::open(&file).map_err(|e| Failure(2, format!("{}: {e}", file.display())))?;
            let lines: Vec<String> =
                std::io::BufReader::new(f).lines().collect::<Result<_, _>>().map_err(|e| Failure(2, format!("{}: {e}", file.display())))?;
            let records: Vec<Option<Result<Value, (i32, String)>>> = lines
                .par_iter()
                .map(|line| {
                    if line.trim().is_empty() {
                        return None;
                    }
                    let (name, pd) = line.split_once('\t').unwrap_or(("", line.as_str()));
                    Some(
                        parse_pd(pd)
                            .map_err(Error::from)
                            .and_then(|d| analysis_record(&d))
                            .map(|mut v| {
                                v["name"] = json!(name);
                                v
                            })
                            .map_err(|e| (e.exit_code(), format!("{name}: {e}"))),
                    )
                })
                .collect();
            let mut code = 0;
            for (i, r) in records.into_iter().enumerate() {
                match r {
                    None => {}
                    Some(Ok(v)) => emit(out, v)?,
                    Some(Err((c, msg))) => {
                        let _ = writeln!(err, "line {}: {msg}", i + 1);
                        code = code.max(c);
                    }
                }
            }
            return Ok(code);
        }
    }
    Ok(0)
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let color = if std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty()) { ColorChoice::Never } else { ColorChoice::Auto };
    let cmd = <Cli as clap::CommandFactory>::command().color(color);
    let matches = match cmd.try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let tty = if code == 0 { std::io::stdout().is_terminal() } else { std::io::stderr().is_terminal() };
            let text = if color == ColorChoice::Never || !tty { e.to_string() } else { e.render().ansi().to_string() };
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let cli = match <Cli as clap::FromArgMatches>::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return 1;
        }
    };
    match run_command(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{EIGHT_21, TREFOIL};

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("brtknot").chain(args.iter().copied()), &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn empty_pd_bracket_is_one() {
        let (code, out, _) = call(&["bracket", "--method", "statesum"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["bracket"]["text"], "1");
    }

    #[test]
    fn ribbon_counts_of_eight_21() {
        let (code, out, _) = call(&["ribbon", "--state", "all-a", "--pd", EIGHT_21], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let c = &v["counts"];
        assert_eq!((&c["v"], &c["e"], &c["f"], &c["g"]), (&json!("3"), &json!("8"), &json!("5"), &json!("1")));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["jones", "--pd", "X[1,2,3]"], "").0, 1);
        assert_eq!(call(&["jones", "--braid", "1", "--strands", "3"], "").0, 2);
        assert_eq!(call(&["bracket", "--method", "statesum", "--cap", "2", "--pd", TREFOIL], "").0, 2);
        assert_eq!(call(&["nonsense"], "").0, 1);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn braid_input_with_negative_generator() {
        let (code, out, _) = call(&["adequacy", "--braid", "-1 2 -1 2"], "");
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn edge_order_for_tree_method() {
        let (code, a, _) = call(&["brt", "--method", "tree", "--edge-order", "2,0,1", "--pd", TREFOIL], "");
        assert_eq!(code, 0);
        let (_, b, _) = call(&["brt", "--method", "subgraph", "--pd", TREFOIL], "");
        let pa: Value = serde_json::from_str(&a).unwrap();
        let pb: Value = serde_json::from_str(&b).unwrap();
        assert_eq!(pa["polynomial"], pb["polynomial"]);
        assert_eq!(call(&["brt", "--method", "tree", "--edge-order", "0,1", "--pd", TREFOIL], "").0, 1);
    }
}
