//! The `diagconj` command-line front end.
//!
//! Every invocation prints one line of compact JSON with sorted keys on
//! standard output. Successful responses carry `"ok": true`, the normalized
//! operands under `"input"` and the payload under `"result"`; feeding a
//! response back through `--json` reproduces it byte for byte. Exit codes are
//! 0 on success, 1 for malformed input or usage errors and 2 for
//! precondition violations.

mod io;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::action::{self, WeightVector, ZeroPattern};
use crate::diag::{self, DiagSubgroup};
use crate::error::{Error, Result};
use crate::exactmat::{hermite_normal_form, rank, smith_normal_form, IntMatrix};
use crate::lattice::{self, lattice_of};
use crate::normalizer::{self, NormalizerCase};
use crate::oracle;
use crate::perm::{Permutation, Sign};
use crate::roots::{self, TorusTag};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "diagconj",
    version,
    about = "Exact conjugacy, canonical forms and orbit structure of diagonalizable subgroups of the torus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// One operand: a matrix or a weight vector.
#[derive(Args, Debug, Default)]
struct Single {
    /// Matrix literal, rows separated by ';' and entries by whitespace.
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    /// Weight vector literal such as "1 2 3".
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    /// File holding a matrix literal or JSON input.
    #[arg(long)]
    file: Option<PathBuf>,
    /// JSON input: a matrix, an input object, or a previous response.
    #[arg(long)]
    json: Option<String>,
    /// Read the operand (text or JSON) from standard input.
    #[arg(long)]
    stdin: bool,
}

/// Two operands `a` and `b`.
#[derive(Args, Debug, Default)]
struct Pair {
    /// First operand as a matrix literal.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Second operand as a matrix literal.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    a_file: Option<PathBuf>,
    #[arg(long)]
    b_file: Option<PathBuf>,
    /// JSON object {"a": ..., "b": ...} or a previous response.
    #[arg(long)]
    json: Option<String>,
    /// Read the JSON pair object from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Group {
    Gln,
    Monomial,
    Crn,
    AutnCodim1,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Context {
    Crn,
    AutnCodim1,
    Aut3Torus,
    CrnCodim1,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Torus {
    Full,
    Special,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith normal form S = U·A·V with unimodular witnesses.
    Snf(Single),
    /// Hermite basis of the row lattice.
    Hnf(Single),
    /// Equality of two row lattices.
    LatticeEqual(Pair),
    /// Isomorphism type of D_n(A).
    Isotype(Single),
    /// Conjugacy of D_n(A) and D_n(B) in an ambient group.
    Conjugate {
        #[arg(long, value_enum)]
        group: Group,
        #[command(flatten)]
        pair: Pair,
    },
    /// Canonical representative of a conjugacy class.
    Canonical {
        #[arg(long, value_enum)]
        context: Context,
        #[command(flatten)]
        operand: Single,
    },
    /// Orbit and stabilizer of a point with the given zero coordinates.
    Orbit {
        #[command(flatten)]
        operand: Single,
        /// 1-based indices of the vanishing coordinates.
        #[arg(long, allow_hyphen_values = true)]
        zeros: Option<String>,
    },
    /// Stability and invariants of the action of D_n(l) on affine space.
    ActionReport(Single),
    /// Normalizer of D_n(l) in Aut A^n.
    Normalizer(Single),
    /// Root vectors of total degree at most D and their roots.
    Roots {
        #[arg(long)]
        dim: Option<u64>,
        #[arg(long)]
        degree: Option<u64>,
        #[arg(long, value_enum, default_value = "full")]
        torus: Torus,
        /// Report only the number of root vectors.
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: Option<String>,
        #[arg(long)]
        stdin: bool,
    },
    /// Brute-force count of torsion points of order dividing m.
    OracleTorsion {
        #[command(flatten)]
        operand: Single,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Brute-force lattice comparison inside a box.
    OracleLatticeEqual {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Brute-force search for a nonclosedness witness.
    OracleClosedness {
        #[command(flatten)]
        operand: Single,
        #[arg(long, allow_hyphen_values = true)]
        zeros: Option<String>,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Exhaustive search for l = ±(l'∘σ).
    OraclePermSign(Pair),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Snf(_) => "snf",
            Command::Hnf(_) => "hnf",
            Command::LatticeEqual(_) => "lattice-equal",
            Command::Isotype(_) => "isotype",
            Command::Conjugate { .. } => "conjugate",
            Command::Canonical { .. } => "canonical",
            Command::Orbit { .. } => "orbit",
            Command::ActionReport(_) => "action-report",
            Command::Normalizer(_) => "normalizer",
            Command::Roots { .. } => "roots",
            Command::OracleTorsion { .. } => "oracle-torsion",
            Command::OracleLatticeEqual { .. } => "oracle-lattice-equal",
            Command::OracleClosedness { .. } => "oracle-closedness",
            Command::OraclePermSign(_) => "oracle-perm-sign",
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Successful payload: normalized input, result and optional extra fields.
struct Response {
    input: Value,
    result: Value,
    extra: Vec<(&'static str, Value)>,
}

impl Response {
    fn new(input: Value, result: Value) -> Self {
        Response {
            input,
            result,
            extra: Vec::new(),
        }
    }

    fn with(mut self, key: &'static str, value: Value) -> Self {
        self.extra.push((key, value));
        self
    }
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn error_outcome(command: Option<&str>, kind: &str, code: i32, message: &str) -> Outcome {
    let mut body = Map::new();
    body.insert("schema_version".into(), json!(SCHEMA_VERSION));
    body.insert("ok".into(), json!(false));
    if let Some(c) = command {
        body.insert("command".into(), json!(c));
    }
    body.insert(
        "error".into(),
        json!({ "kind": kind, "code": code, "message": message }),
    );
    Outcome {
        code,
        stdout: render(&Value::Object(body)),
        stderr: format!("diagconj: error: {message}\n"),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn execute<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let full = e.render().to_string();
                    let message = full.lines().next().unwrap_or("usage error");
                    let message = message.strip_prefix("error: ").unwrap_or(message);
                    let mut out = error_outcome(None, "Usage", 1, message);
                    out.stderr = full;
                    out
                }
            };
        }
    };
    let name = cli.command.name();
    match dispatch(cli.command, stdin) {
        Ok(resp) => {
            let mut body = Map::new();
            body.insert("schema_version".into(), json!(SCHEMA_VERSION));
            body.insert("ok".into(), json!(true));
            body.insert("command".into(), json!(name));
            body.insert("input".into(), resp.input);
            body.insert("result".into(), resp.result);
            for (k, v) in resp.extra {
                body.insert(k.into(), v);
            }
            Outcome {
                code: 0,
                stdout: render(&Value::Object(body)),
                stderr: String::new(),
            }
        }
        Err(e) => error_outcome(Some(name), e.kind(), e.exit_code(), &e.to_string()),
    }
}

/// Entry point for the binary: prints the response and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let out = execute(args, &mut std::io::stdin().lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

// ---------------------------------------------------------------------------
// Operand collection

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))
}

fn read_stdin(stdin: &mut dyn Read) -> Result<String> {
    let mut s = String::new();
    stdin
        .read_to_string(&mut s)
        .map_err(|e| malformed(format!("cannot read standard input: {e}")))?;
    Ok(s)
}

fn looks_like_json(text: &str) -> bool {
    matches!(text.trim_start().chars().next(), Some('{') | Some('['))
}

fn is_matrix_value(v: &Value) -> bool {
    v.is_array() || v.get("entries").is_some()
}

/// A JSON document as an input object: previous responses contribute their
/// `"input"` and bare matrices become `{"matrix": …}`.
fn json_input(text: &str) -> Result<Map<String, Value>> {
    let v = io::parse_json(text)?;
    let v = match v {
        Value::Object(mut o) if o.contains_key("input") => o.remove("input").unwrap_or(Value::Null),
        other => other,
    };
    if is_matrix_value(&v) {
        let mut m = Map::new();
        m.insert("matrix".into(), v);
        return Ok(m);
    }
    match v {
        Value::Object(o) => Ok(o),
        other => Err(malformed(format!("expected a JSON object, got {other}"))),
    }
}

fn text_or_json_input(text: &str) -> Result<Map<String, Value>> {
    if looks_like_json(text) {
        json_input(text)
    } else {
        let mut m = Map::new();
        m.insert("matrix".into(), io::matrix(&io::parse_matrix_text(text)?));
        Ok(m)
    }
}

fn exactly_one(count: usize, what: &str) -> Result<()> {
    match count {
        1 => Ok(()),
        0 => Err(malformed(format!("no input given for {what}"))),
        _ => Err(malformed(format!("more than one input source for {what}"))),
    }
}

fn collect_single(s: &Single, stdin: &mut dyn Read) -> Result<Map<String, Value>> {
    let count = [
        s.matrix.is_some(),
        s.weights.is_some(),
        s.file.is_some(),
        s.json.is_some(),
        s.stdin,
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    exactly_one(count, "the operand")?;
    if let Some(t) = &s.matrix {
        let mut m = Map::new();
        m.insert("matrix".into(), io::matrix(&io::parse_matrix_text(t)?));
        Ok(m)
    } else if let Some(t) = &s.weights {
        let l = io::parse_list(t)?;
        let mut m = Map::new();
        m.insert("weights".into(), io::ints(&l));
        Ok(m)
    } else if let Some(p) = &s.file {
        text_or_json_input(&read_file(p)?)
    } else if let Some(t) = &s.json {
        json_input(t)
    } else {
        text_or_json_input(&read_stdin(stdin)?)
    }
}

fn collect_pair(p: &Pair, stdin: &mut dyn Read) -> Result<Map<String, Value>> {
    let whole = usize::from(p.json.is_some()) + usize::from(p.stdin);
    let parts = [&p.a, &p.b].iter().filter(|x| x.is_some()).count()
        + [&p.a_file, &p.b_file]
            .iter()
            .filter(|x| x.is_some())
            .count();
    if whole > 0 {
        if whole > 1 || parts > 0 {
            return Err(malformed("more than one input source for the operands"));
        }
        let text = match &p.json {
            Some(t) => t.clone(),
            None => read_stdin(stdin)?,
        };
        return json_input(&text);
    }
    let one = |lit: &Option<String>, file: &Option<PathBuf>, name: &str| -> Result<Value> {
        exactly_one(
            usize::from(lit.is_some()) + usize::from(file.is_some()),
            &format!("operand {name}"),
        )?;
        let text = match (lit, file) {
            (Some(t), _) => t.clone(),
            (_, Some(f)) => read_file(f)?,
            _ => unreachable!(),
        };
        if looks_like_json(&text) {
            Ok(io::parse_json(&text)?)
        } else {
            Ok(io::matrix(&io::parse_matrix_text(&text)?))
        }
    };
    let mut m = Map::new();
    m.insert("a".into(), one(&p.a, &p.a_file, "a")?);
    m.insert("b".into(), one(&p.b, &p.b_file, "b")?);
    Ok(m)
}

/// Adds a flag value to the input object, refusing to override a JSON field.
fn insert_flag(input: &mut Map<String, Value>, key: &str, value: Option<Value>) -> Result<()> {
    if let Some(v) = value {
        if input.contains_key(key) {
            return Err(malformed(format!(
                "\"{key}\" given both as a flag and in JSON"
            )));
        }
        input.insert(key.into(), v);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Typed views of the input object

fn field<'a>(input: &'a Map<String, Value>, keys: &[&str]) -> Result<&'a Value> {
    keys.iter()
        .find_map(|k| input.get(*k))
        .ok_or_else(|| malformed(format!("missing \"{}\"", keys[0])))
}

fn matrix_operand(input: &Map<String, Value>) -> Result<IntMatrix> {
    io::matrix_from_json_value(field(input, &["matrix", "weights"])?)
}

fn vector_of(v: &Value) -> Result<Vec<BigInt>> {
    let m = io::matrix_from_json_value(v)?;
    if m.rows() != 1 {
        return Err(malformed(format!(
            "expected a single weight vector, got {} rows",
            m.rows()
        )));
    }
    Ok(m.row(0).to_vec())
}

fn weights_operand(input: &Map<String, Value>) -> Result<Vec<BigInt>> {
    vector_of(field(input, &["weights", "matrix"])?)
}

fn count_field(input: &Map<String, Value>, key: &str) -> Result<Option<u64>> {
    input
        .get(key)
        .map(|v| {
            v.as_u64()
                .ok_or_else(|| malformed(format!("\"{key}\" must be a nonnegative integer")))
        })
        .transpose()
}

fn required_count(input: &Map<String, Value>, key: &str) -> Result<u64> {
    count_field(input, key)?.ok_or_else(|| malformed(format!("missing \"{key}\"")))
}

/// 1-based zero indices, sorted and deduplicated.
fn zeros_field(input: &Map<String, Value>) -> Result<Vec<usize>> {
    let raw = match input.get("zeros") {
        None => return Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .map(|x| {
                x.as_u64()
                    .ok_or_else(|| malformed("zero indices must be positive integers"))
            })
            .collect::<Result<Vec<u64>>>()?,
        Some(other) => {
            return Err(malformed(format!(
                "\"zeros\" must be an array, got {other}"
            )))
        }
    };
    let mut out = Vec::with_capacity(raw.len());
    for i in raw {
        if i == 0 {
            return Err(malformed("zero indices are 1-based"));
        }
        out.push(usize::try_from(i).map_err(|_| malformed("zero index too large"))?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn zeros_flag(text: &Option<String>) -> Result<Option<Value>> {
    text.as_ref()
        .map(|t| {
            let items = io::parse_list(t)?;
            Ok(Value::Array(items.iter().map(io::int).collect()))
        })
        .transpose()
}

fn pattern(n: usize, zeros: &[usize]) -> Result<ZeroPattern> {
    let zero_based: Vec<usize> = zeros.iter().map(|i| i - 1).collect();
    ZeroPattern::from_indices(n, &zero_based)
}

fn small_i64s(l: &[BigInt]) -> Result<Vec<i64>> {
    l.iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| Error::TooLarge(format!("weight {x} exceeds the oracle range")))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Encoders

fn iso_json(iso: &diag::IsoType) -> Value {
    json!({
        "torus_rank": iso.torus_rank,
        "factors": io::ints(&iso.factors),
        "finite": iso.is_finite(),
        "order": iso.order().as_ref().map(io::int),
    })
}

fn perm_sign_json(p: &Permutation, s: Sign) -> Value {
    json!({ "permutation": io::permutation(p), "sign": io::sign(s) })
}

fn matrix_input(a: &IntMatrix) -> Value {
    json!({ "matrix": io::matrix(a) })
}

fn weights_input(l: &[BigInt]) -> Value {
    json!({ "weights": io::ints(l) })
}

// ---------------------------------------------------------------------------
// Commands

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<Response> {
    match command {
        Command::Snf(s) => {
            let a = matrix_operand(&collect_single(&s, stdin)?)?;
            let snf = smith_normal_form(&a);
            let result = json!({
                "factors": io::ints(&snf.factors),
                "rank": snf.rank(),
                "s": io::matrix(&snf.s),
                "u": io::matrix(&snf.u),
                "v": io::matrix(&snf.v),
            });
            Ok(Response::new(matrix_input(&a), result))
        }
        Command::Hnf(s) => {
            let a = matrix_operand(&collect_single(&s, stdin)?)?;
            let h = hermite_normal_form(&a);
            let result = json!({ "basis": io::matrix(&h), "rank": h.rows() });
            Ok(Response::new(matrix_input(&a), result))
        }
        Command::LatticeEqual(p) => {
            let input = collect_pair(&p, stdin)?;
            let (a, b) = pair_matrices(&input)?;
            let (la, lb) = (lattice_of(&a), lattice_of(&b));
            let equal = lattice::equal(&la, &lb)?;
            let mut resp = Response::new(pair_input(&a, &b), json!(equal)).with(
                "witness",
                json!({ "hermite_a": io::matrix(la.basis()), "hermite_b": io::matrix(lb.basis()) }),
            );
            // Plücker cross-check whenever both operands have full row rank.
            if a.rows() == rank(&a) && b.rows() == rank(&b) && a.rows() == b.rows() {
                resp = resp.with("pluecker_equal", json!(lattice::pluecker_equal(&a, &b)?));
            }
            Ok(resp)
        }
        Command::Isotype(s) => {
            let a = matrix_operand(&collect_single(&s, stdin)?)?;
            let g = DiagSubgroup::from_matrix(&a);
            let mut result = iso_json(&g.iso_type());
            result["dimension"] = json!(g.dimension());
            Ok(Response::new(matrix_input(&a), result))
        }
        Command::Conjugate { group, pair } => {
            let input = collect_pair(&pair, stdin)?;
            let (a, b) = pair_matrices(&input)?;
            let g1 = DiagSubgroup::from_matrix(&a);
            let g2 = DiagSubgroup::from_matrix(&b);
            let resp = match group {
                Group::Gln | Group::Monomial => {
                    let sigma = diag::conjugate_in_gl(&g1, &g2)?;
                    with_witness(
                        Response::new(pair_input(&a, &b), json!(sigma.is_some())),
                        sigma.map(|s| json!({ "permutation": io::permutation(&s) })),
                    )
                }
                Group::Crn => {
                    let m = diag::crn_conjugator(&g1, &g2)?;
                    with_witness(
                        Response::new(pair_input(&a, &b), json!(m.is_some())),
                        m.map(|m| json!({ "matrix": io::matrix(&m) })),
                    )
                }
                Group::AutnCodim1 => {
                    let group_level = diag::conjugate_in_autn_codim1(&g1, &g2)?;
                    // Report the sign relative to the given vectors when both are single rows.
                    let rel = match (group_level.is_some(), a.rows(), b.rows()) {
                        (true, 1, 1) if g1.lattice().rank() == 1 => {
                            diag::codim1_relation(a.row(0), b.row(0))?
                        }
                        _ => group_level,
                    };
                    with_witness(
                        Response::new(pair_input(&a, &b), json!(rel.is_some())),
                        rel.map(|(p, s)| perm_sign_json(&p, s)),
                    )
                }
            };
            Ok(resp)
        }
        Command::Canonical { context, operand } => {
            let input = collect_single(&operand, stdin)?;
            match context {
                Context::Crn => {
                    let a = matrix_operand(&input)?;
                    let c = diag::crn_canonical(&DiagSubgroup::from_matrix(&a));
                    let result = json!({
                        "torus_rank": c.r,
                        "factors": io::ints(&c.factors),
                        "matrix": io::matrix(&c.canonical_matrix),
                    });
                    Ok(Response::new(matrix_input(&a), result))
                }
                Context::AutnCodim1 => {
                    let l = weights_operand(&input)?;
                    let c = diag::codim1_canonical(&l)?;
                    Ok(Response::new(weights_input(&l), io::ints(&c)))
                }
                Context::Aut3Torus => {
                    let l = weights_operand(&input)?;
                    let c = diag::aut3_torus_canonical(&l)?;
                    Ok(Response::new(weights_input(&l), io::ints(&c)))
                }
                Context::CrnCodim1 => {
                    let l = weights_operand(&input)?;
                    let d = diag::crn_codim1_canonical(&l)?;
                    let mut v = vec![BigInt::from(0); l.len()];
                    *v.last_mut().expect("nonempty weights") = d.clone();
                    let result = json!({ "d": io::int(&d), "weights": io::ints(&v) });
                    Ok(Response::new(weights_input(&l), result))
                }
            }
        }
        Command::Orbit { operand, zeros } => {
            let mut input = collect_single(&operand, stdin)?;
            insert_flag(&mut input, "zeros", zeros_flag(&zeros)?)?;
            let l = weights_operand(&input)?;
            let z = zeros_field(&input)?;
            let w = WeightVector::new(l.clone())?;
            let s = pattern(w.n(), &z)?;
            let r = action::orbit_report(&w, &s)?;
            let result = json!({
                "stabilizer": iso_json(&r.stabilizer),
                "stabilizer_dim": r.stabilizer_dim,
                "stabilizer_order": r.stabilizer_order.as_ref().map(io::int),
                "orbit_dim": r.orbit_dim,
                "closed": r.closed,
                "origin_in_closure": r.origin_in_closure,
            });
            let witness = action::origin_limit_witness(&w, &s)?
                .map(|d| json!({ "one_parameter_subgroup": io::ints(&d) }));
            let input = json!({ "weights": io::ints(&l), "zeros": z });
            Ok(with_witness(Response::new(input, result), witness))
        }
        Command::ActionReport(s) => {
            let l = weights_operand(&collect_single(&s, stdin)?)?;
            let r = action::action_report(&WeightVector::new(l.clone())?)?;
            let result = json!({
                "group_dim": r.group_dim,
                "stable": r.stable,
                "has_nonconstant_invariants": r.has_nonconstant_invariants,
                "invariant_monomial": r.invariant_monomial.as_deref().map(io::ints),
                "nonclosed_codim1_orbit_axes": io::one_based(&r.nonclosed_codim1_orbit_axes),
            });
            Ok(Response::new(weights_input(&l), result))
        }
        Command::Normalizer(s) => {
            let l = weights_operand(&collect_single(&s, stdin)?)?;
            let r = normalizer::normalizer_report(&l);
            let axis = match r.case {
                NormalizerCase::AxisCase(i) => Some(i + 1),
                _ => None,
            };
            let result = json!({
                "axis": axis,
                "contained_in_monomial": r.contained_in_monomial,
                "algebraic": r.algebraic,
                "explicit_form_known": r.explicit_form_known,
                "perm_part": {
                    "order": io::int(&r.perm_part.order),
                    "generators": r.perm_part.generators.iter()
                        .map(|(p, s)| perm_sign_json(p, *s))
                        .collect::<Vec<_>>(),
                },
                "centralizer_perm_part": r.centralizer_perm_part.iter()
                    .map(io::permutation)
                    .collect::<Vec<_>>(),
                "axis_structure": r.axis_structure.as_ref().map(|a| json!({
                    "axis": a.axis + 1,
                    "permuted_coordinates": io::one_based(&a.permuted_coordinates),
                    "element_shape": a.element_shape,
                    "isomorphism_type": normalizer::AxisStructure::ISOMORPHISM_TYPE,
                })),
            });
            Ok(Response::new(weights_input(&l), result).with("case", json!(r.case.tag())))
        }
        Command::Roots {
            dim,
            degree,
            torus,
            count_only,
            json,
            stdin: from_stdin,
        } => {
            let mut input = match (&json, from_stdin) {
                (Some(_), true) => return Err(malformed("more than one input source")),
                (Some(t), false) => json_input(t)?,
                (None, true) => json_input(&read_stdin(stdin)?)?,
                (None, false) => Map::new(),
            };
            insert_flag(&mut input, "dim", dim.map(|x| json!(x)))?;
            insert_flag(&mut input, "degree", degree.map(|x| json!(x)))?;
            let n = required_count(&input, "dim")?;
            let d = required_count(&input, "degree")?;
            if n == 0 {
                return Err(malformed("dimension must be positive"));
            }
            let total = root_count(n, d)
                .filter(|&c| c <= oracle::MAX_ENUMERATION)
                .ok_or_else(|| Error::TooLarge(format!("root vectors for n={n}, D={d}")))?;
            let tag = match torus {
                Torus::Full => TorusTag::Full,
                Torus::Special => TorusTag::Special,
            };
            let mut result = json!({ "count": total });
            if !count_only {
                let list: Vec<Value> = roots::enumerate_root_vectors(n as usize, d)
                    .iter()
                    .map(|rv| {
                        json!({
                            "i": rv.i + 1,
                            "l": rv.l,
                            "degree": rv.degree(),
                            "root": roots::root_of(rv, tag).exponents,
                        })
                    })
                    .collect();
                result["root_vectors"] = Value::Array(list);
                result["torus"] = json!(match torus {
                    Torus::Full => "full",
                    Torus::Special => "special",
                });
            }
            Ok(Response::new(json!({ "dim": n, "degree": d }), result))
        }
        Command::OracleTorsion { operand, modulus } => {
            let mut input = collect_single(&operand, stdin)?;
            insert_flag(&mut input, "modulus", modulus.map(|x| json!(x)))?;
            let a = matrix_operand(&input)?;
            let m = required_count(&input, "modulus")?;
            let count = oracle::torsion_count(&a, m)?;
            Ok(Response::new(
                json!({ "matrix": io::matrix(&a), "modulus": m }),
                json!(count),
            ))
        }
        Command::OracleLatticeEqual { pair, bound } => {
            let mut input = collect_pair(&pair, stdin)?;
            insert_flag(&mut input, "bound", bound.map(|x| json!(x)))?;
            let (a, b) = pair_matrices(&input)?;
            if a.cols() != b.cols() {
                return Err(Error::DimensionMismatch {
                    expected: a.cols(),
                    found: b.cols(),
                });
            }
            let bound = match count_field(&input, "bound")? {
                Some(x) => x,
                None => oracle::default_lattice_bound(&a, &b),
            };
            let equal = oracle::lattice_equal_bounded(&a, &b, bound)?;
            let mut echo = pair_input(&a, &b);
            echo["bound"] = json!(bound);
            Ok(Response::new(echo, json!(equal)))
        }
        Command::OracleClosedness {
            operand,
            zeros,
            bound,
        } => {
            let mut input = collect_single(&operand, stdin)?;
            insert_flag(&mut input, "zeros", zeros_flag(&zeros)?)?;
            insert_flag(&mut input, "bound", bound.map(|x| json!(x)))?;
            let l = weights_operand(&input)?;
            let small = small_i64s(&l)?;
            let z = zeros_field(&input)?;
            let mask = pattern(l.len(), &z)?;
            let mask: Vec<bool> = (0..l.len()).map(|i| mask.is_zero_at(i)).collect();
            let bound = match count_field(&input, "bound")? {
                Some(x) => x,
                None => oracle::default_closedness_bound(&small),
            };
            let witness = oracle::closedness_search(&small, &mask, bound)?;
            let result = json!({ "closed": witness.is_none(), "witness": witness });
            let echo = json!({ "weights": io::ints(&l), "zeros": z, "bound": bound });
            Ok(Response::new(echo, result))
        }
        Command::OraclePermSign(p) => {
            let input = collect_pair(&p, stdin)?;
            let a = vector_of(field(&input, &["a"])?)?;
            let b = vector_of(field(&input, &["b"])?)?;
            let found = oracle::perm_sign_exhaust(&a, &b)?;
            let echo = json!({ "a": io::ints(&a), "b": io::ints(&b) });
            Ok(with_witness(
                Response::new(echo, json!(found.is_some())),
                found.map(|(p, s)| perm_sign_json(&p, s)),
            ))
        }
    }
}

fn with_witness(resp: Response, witness: Option<Value>) -> Response {
    match witness {
        Some(w) => resp.with("witness", w),
        None => resp,
    }
}

fn pair_matrices(input: &Map<String, Value>) -> Result<(IntMatrix, IntMatrix)> {
    let a = io::matrix_from_json_value(field(input, &["a"])?)?;
    let b = io::matrix_from_json_value(field(input, &["b"])?)?;
    Ok((a, b))
}

fn pair_input(a: &IntMatrix, b: &IntMatrix) -> Value {
    json!({ "a": io::matrix(a), "b": io::matrix(b) })
}

/// `n·C(D+n−1, n−1)`, or `None` on overflow.
fn root_count(n: u64, d: u64) -> Option<u64> {
    let mut c: u64 = 1;
    for k in 1..n {
        c = c.checked_mul(d + k)? / k;
    }
    c.checked_mul(n)
}
