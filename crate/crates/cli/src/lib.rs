//! Command dispatch for the `zagreb` binary.
//!
//! [`run`] turns a [`RunConfig`] into a [`Report`] holding the text to print
//! and any notices. Errors are split into input problems (exit status 2) and
//! domain failures such as non-graphical or out-of-class sequences (exit
//! status 1).

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::Number;
use zagreb_core::oracle::{verify_extremal, VerifyOptions, DEFAULT_SAMPLES};
use zagreb_core::{
    build_constraint_set, closed_form_family, degree_sequence_of, is_graphical, zagreb_bounds, zagreb_exact,
    BoundsReport, Branch, DegreeSequence, ExtremalTrace, Family, Pivot, SimpleGraph,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Bounds,
    Exact,
    ClosedForm,
    Verify,
    Graphical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    /// Comma- or whitespace-separated degrees.
    Degrees(String),
    DegreeFile(PathBuf),
    /// Edge list, one `u v` pair of 0-based indices per line.
    Edges(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<Input>,
    pub format: Format,
    pub seed: u64,
    /// Longest vector enumerated exhaustively by `verify`.
    pub max_enum: usize,
    pub family: Option<Family>,
    pub params: Vec<u32>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Domain(#[from] zagreb_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

/// What a successful dispatch produced. `success` is false when the command
/// ran but its verdict is negative (a non-graphical sequence or a failed
/// verification); the binary exits with status 1 in that case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub notices: Vec<String>,
    pub success: bool,
}

pub fn parse_degree_list(text: &str) -> Result<Vec<u32>, CliError> {
    let degrees = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| CliError::Parse(format!("invalid degree {t:?}: expected a nonnegative integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if degrees.is_empty() {
        return Err(CliError::Parse("degree list is empty".into()));
    }
    Ok(degrees)
}

/// Parses an edge list. Blank lines and text after `#` are ignored. The
/// vertex count is one more than the largest index.
pub fn parse_edge_list(text: &str) -> Result<(usize, Vec<(usize, usize)>), CliError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || CliError::Parse(format!("line {}: expected two vertex indices, got {line:?}", lineno + 1));
        let [u, v] = fields[..] else {
            return Err(bad());
        };
        edges.push((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
    }
    if edges.is_empty() {
        return Err(CliError::Parse("edge list is empty".into()));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
    Ok((n, edges))
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn raw_degrees(input: &Input) -> Result<Vec<u32>, CliError> {
    match input {
        Input::Degrees(text) => parse_degree_list(text),
        Input::DegreeFile(path) => parse_degree_list(&read(path)?),
        Input::Edges(path) => {
            let graph = load_graph(path)?;
            Ok(degree_sequence_of(&graph).degrees().to_vec())
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<SimpleGraph, CliError> {
    let (n, edges) = parse_edge_list(&read(path)?)?;
    Ok(SimpleGraph::new(n, edges)?)
}

fn degree_sequence(input: &Input, notices: &mut Vec<String>) -> Result<DegreeSequence, CliError> {
    let (seq, reordered) = DegreeSequence::from_unsorted(raw_degrees(input)?)?;
    if reordered && !matches!(input, Input::Edges(_)) {
        notices.push(format!("note: degrees reordered to nonincreasing order {seq}"));
    }
    Ok(seq)
}

fn require_input(config: &RunConfig) -> Result<&Input, CliError> {
    config
        .input
        .as_ref()
        .ok_or_else(|| CliError::Parse("one of --degrees, --degree-file or --edges is required".into()))
}

/// A JSON number, written as an integer when the value is integral.
pub fn json_number(x: f64) -> Number {
    if x.fract() == 0.0 && x.abs() < 9.0e15 {
        Number::from(x as i64)
    } else {
        Number::from_f64(x).expect("finite value")
    }
}

/// Case analysis behind one extremal vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceJson {
    pub branch: Branch,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Number>,
}

impl From<&ExtremalTrace> for TraceJson {
    fn from(t: &ExtremalTrace) -> Self {
        match t.pivot {
            Pivot::Theta(theta) => TraceJson {
                branch: t.branch,
                k: t.k,
                d: None,
                theta: Some(json_number(theta)),
                rho: None,
            },
            Pivot::Rho(rho) => TraceJson {
                branch: t.branch,
                k: t.k,
                d: Some(t.d),
                theta: None,
                rho: Some(json_number(rho)),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Branches {
    pub upper: TraceJson,
    /// The minimal element before integerization.
    pub lower: TraceJson,
}

/// JSON form of the `bounds` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub n: usize,
    pub m: usize,
    pub a: u64,
    pub h: usize,
    pub m1: u32,
    pub m2: u32,
    #[serde(rename = "M1")]
    pub big_m1: u32,
    #[serde(rename = "M2")]
    pub big_m2: u32,
    pub lower: i64,
    pub upper: i64,
    pub lower_vector: Vec<i64>,
    pub upper_vector: Vec<i64>,
    pub das_gutman: i64,
    pub branches: Branches,
    /// Exact index of the input graph, when an edge list was given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<u64>,
}

impl BoundsJson {
    pub fn new(r: &BoundsReport, exact: Option<u64>) -> Self {
        let ints = |v: &[f64]| v.iter().map(|x| x.round() as i64).collect();
        BoundsJson {
            n: r.class.vertices(),
            m: r.class.edges,
            a: r.class.square_sum,
            h: r.class.pendants,
            m1: r.class.head_lower,
            m2: r.class.tail_lower,
            big_m1: r.class.head_upper,
            big_m2: r.class.tail_upper,
            lower: r.lower,
            upper: r.upper,
            lower_vector: ints(&r.lower_vector),
            upper_vector: ints(&r.upper_vector),
            das_gutman: r.das_gutman,
            branches: Branches {
                upper: (&r.upper_trace).into(),
                lower: (&r.lower_trace).into(),
            },
            exact,
        }
    }
}

fn list<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn trace_text(t: &TraceJson) -> String {
    let mut s = format!("branch={} k={}", t.branch, t.k);
    if let Some(theta) = &t.theta {
        let _ = write!(s, " theta={theta}");
    }
    if let (Some(d), Some(rho)) = (t.d, &t.rho) {
        let _ = write!(s, " d={d} rho={rho}");
    }
    s
}

fn bounds_text(j: &BoundsJson, seq: &DegreeSequence) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "sequence={seq}");
    let _ = writeln!(s, "n={} m={} h={} a={}", j.n, j.m, j.h, j.a);
    let _ = writeln!(
        s,
        "head: {} edges in [{}, {}]; pendant edges: {} in [{}, {}]",
        j.m - j.h,
        j.m1,
        j.big_m1,
        j.h,
        j.m2,
        j.big_m2
    );
    let _ = writeln!(s, "lower={} upper={}", j.lower, j.upper);
    let _ = writeln!(s, "das_gutman={}", j.das_gutman);
    if let Some(exact) = j.exact {
        let _ = writeln!(s, "S(G)={exact}");
    }
    let _ = writeln!(s, "upper_vector={}", list(&j.upper_vector));
    let _ = writeln!(s, "lower_vector={}", list(&j.lower_vector));
    let _ = writeln!(s, "upper_trace: {}", trace_text(&j.branches.upper));
    let _ = write!(s, "lower_trace: {}", trace_text(&j.branches.lower));
    s
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn run_bounds(config: &RunConfig, notices: &mut Vec<String>) -> Result<String, CliError> {
    let input = require_input(config)?;
    let exact = match input {
        Input::Edges(path) => Some(zagreb_exact(&load_graph(path)?)?),
        _ => None,
    };
    let seq = degree_sequence(input, notices)?;
    let report = zagreb_bounds(&seq)?;
    let json = BoundsJson::new(&report, exact);
    Ok(match config.format {
        Format::Text => bounds_text(&json, &seq),
        Format::Json => to_json(&json),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactJson {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<u32>,
    pub zagreb_index: u64,
}

fn run_exact(config: &RunConfig) -> Result<String, CliError> {
    let Some(Input::Edges(path)) = &config.input else {
        return Err(CliError::Parse("exact requires --edges <path>".into()));
    };
    let graph = load_graph(path)?;
    let json = ExactJson {
        n: graph.vertex_count(),
        m: graph.edges().len(),
        degrees: degree_sequence_of(&graph).degrees().to_vec(),
        zagreb_index: zagreb_exact(&graph)?,
    };
    Ok(match config.format {
        Format::Text => format!(
            "n={} m={} degrees={}\nS(G)={}",
            json.n,
            json.m,
            list(&json.degrees),
            json.zagreb_index
        ),
        Format::Json => to_json(&json),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    pub family: Family,
    pub params: Vec<u32>,
    pub degrees: Vec<u32>,
    pub lower: i64,
    pub upper: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<i64>,
}

fn run_closed_form(config: &RunConfig) -> Result<String, CliError> {
    let family = config
        .family
        .ok_or_else(|| CliError::Parse("closed-form requires --family".into()))?;
    let c = closed_form_family(family, &config.params)?;
    let json = ClosedFormJson {
        family,
        params: c.params.clone(),
        degrees: c.sequence.degrees().to_vec(),
        lower: c.lower,
        upper: c.upper,
        exact: c.exact(),
    };
    Ok(match config.format {
        Format::Text => {
            let mut s = format!(
                "family={} params={}\nsequence={}\nlower={} upper={}",
                family,
                list(&json.params),
                c.sequence,
                json.lower,
                json.upper
            );
            if let Some(exact) = json.exact {
                let _ = write!(s, "\nexact={exact}");
            }
            s
        }
        Format::Json => to_json(&json),
    })
}

fn run_verify(config: &RunConfig, notices: &mut Vec<String>) -> Result<(String, bool), CliError> {
    let seq = degree_sequence(require_input(config)?, notices)?;
    let class = build_constraint_set(&seq)?;
    let set = class.constraint_set()?;
    let options = VerifyOptions {
        enum_cap: config.max_enum,
        samples: DEFAULT_SAMPLES,
        seed: config.seed,
    };
    let report = verify_extremal(&set, &options)?;
    let passed = report.passed();
    let out = match config.format {
        Format::Text => format!("sequence={seq}\n{report}"),
        Format::Json => to_json(&report),
    };
    Ok((out, passed))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphicalJson {
    pub degrees: Vec<u32>,
    pub graphical: bool,
}

fn run_graphical(config: &RunConfig) -> Result<(String, bool), CliError> {
    let mut degrees = raw_degrees(require_input(config)?)?;
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let graphical = is_graphical(&degrees);
    let out = match config.format {
        Format::Text => format!("degrees={} graphical={graphical}", list(&degrees)),
        Format::Json => to_json(&GraphicalJson { degrees, graphical }),
    };
    Ok((out, graphical))
}

pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    let mut notices = Vec::new();
    let (stdout, success) = match config.command {
        Command::Bounds => (run_bounds(config, &mut notices)?, true),
        Command::Exact => (run_exact(config)?, true),
        Command::ClosedForm => (run_closed_form(config)?, true),
        Command::Verify => run_verify(config, &mut notices)?,
        Command::Graphical => run_graphical(config)?,
    };
    Ok(Report {
        stdout,
        notices,
        success,
    })
}
