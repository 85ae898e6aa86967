//! Command-line surface over the core library.
//!
//! Every command prints one JSON document: `{"command", "status", "payload"}`
//! with `status` either `"ok"` or a failure kind, and exit code 0 exactly
//! when the status is ok. All integers are rendered as decimal strings —
//! class coordinates and invariant factors outgrow 64 bits in legitimate
//! runs. Usage errors are clap's business and go to the error stream.

pub mod demo;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Display;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use cockcroft_core::{
    certify, check_witness, detect_h3, e_class, efficiency_report, exponent_balance,
    leading_lie_class, lcs_weight, lyndon_words, magnus_expand, parse_presentation, parse_word,
    search_membership, smith_normal_form, trace_to_witness, Alphabet, CertificationFailure,
    ClassError, CockcroftCertificate, EClassError, EfficiencyReport, HomologyReport, IntMatrix,
    LieVector, MembershipEvidence, Presentation, RewriteTrace, SearchBounds, TruncatedSeries,
    WeightResult, Witness, WitnessFactor, Word, ENImage,
};

use demo::{NestedCommutator, TripleCommutator};

/// State budget for the search attempts inside `demo`; the constructed
/// witnesses cover the cases the budget cannot reach.
const DEMO_STEP_BUDGET: usize = 20_000;

#[derive(Parser)]
#[command(
    name = "cockcroft",
    version,
    about = "Commutator calculus for partitioned group presentations: expansions, weights, \
             Lyndon classes, Cockcroft certificates, and normal-closure membership"
)]
pub struct Cli {
    /// Compact single-line JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Pretty-printed JSON output (the default).
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Magnus expansion of a word, truncated at a degree bound.
    Expand {
        /// Comma-separated generator names, e.g. x,y,z.
        #[arg(long)]
        gens: String,
        /// Word in the bracket grammar, e.g. "[x,y] z^-2".
        #[arg(long)]
        word: String,
        /// Truncation degree.
        #[arg(long)]
        degree: usize,
    },
    /// Lower-central weight of a word, probed by doubling up to a bound.
    Weight {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        word: String,
        /// Largest degree probed before giving up.
        #[arg(long, default_value_t = 8)]
        dmax: usize,
    },
    /// Leading Lie class of a word over the Lyndon basis.
    Class {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        word: String,
        /// Degree of the class; defaults to the word's weight.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 8)]
        dmax: usize,
    },
    /// Lyndon words of one degree over the given generators.
    LyndonBasis {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        degree: usize,
    },
    /// Smith normal form of a presentation's exponent matrix or an inline matrix.
    #[command(group(clap::ArgGroup::new("source").required(true).args(["file", "matrix"])))]
    Snf {
        /// Presentation file; its exponent matrix is decomposed.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Inline matrix, rows separated by ';', entries by ',': "2,0;0,3".
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Homology of the model two-complex of a presentation.
    Homology {
        #[arg(long)]
        file: PathBuf,
    },
    /// Certify the common-weight and independence hypotheses for a
    /// partitioned presentation.
    CockcroftCheck {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        dmax: usize,
    },
    /// Bounded search for membership of a word in a normal closure.
    Member {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        word: String,
        /// Which relators generate the closure.
        #[arg(long, value_enum, default_value_t = PartChoice::All)]
        part: PartChoice,
        /// Search bounds as LENGTH,STEPS; defaults scale with the word.
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Validate a witness file against a word.
    WitnessCheck {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        word: String,
        /// JSON file: {"factors": [{"conjugator", "relator", "sign"}, ...]}.
        #[arg(long)]
        witness: PathBuf,
        #[arg(long, value_enum, default_value_t = PartChoice::All)]
        part: PartChoice,
    },
    /// Image of a word in a lower-central quotient above a certificate.
    EClass {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        word: String,
        /// Target degree m; the image lives in the degree-m quotient.
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 8)]
        dmax: usize,
    },
    /// End-to-end reproductions on the built-in example families.
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Generators x,y,z; r = {[x^a,y]}, s = {[y^b,z],[z^c,x]}, abc != 0.
    Example1 {
        #[arg(long, allow_negative_numbers = true, value_parser = nonzero_i64)]
        a: i64,
        #[arg(long, allow_negative_numbers = true, value_parser = nonzero_i64)]
        b: i64,
        #[arg(long, allow_negative_numbers = true, value_parser = nonzero_i64)]
        c: i64,
        #[arg(long, default_value_t = 8)]
        dmax: usize,
        /// Search bounds as LENGTH,STEPS for the membership attempts.
        #[arg(long)]
        bounds: Option<String>,
    },
    /// Generators x,y; r = {[x,[x,y^c]]}, s = {[y,[x,y^c]]}, c != 0.
    Example2 {
        #[arg(long, allow_negative_numbers = true, value_parser = nonzero_i64)]
        c: i64,
        #[arg(long, default_value_t = 8)]
        dmax: usize,
        #[arg(long)]
        bounds: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PartChoice {
    R,
    S,
    All,
}

fn nonzero_i64(s: &str) -> Result<i64, String> {
    let v: i64 = s.parse().map_err(|e| format!("{e}"))?;
    if v == 0 {
        return Err("must be nonzero".into());
    }
    Ok(v)
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Expand { .. } => "expand",
            Command::Weight { .. } => "weight",
            Command::Class { .. } => "class",
            Command::LyndonBasis { .. } => "lyndon-basis",
            Command::Snf { .. } => "snf",
            Command::Homology { .. } => "homology",
            Command::CockcroftCheck { .. } => "cockcroft-check",
            Command::Member { .. } => "member",
            Command::WitnessCheck { .. } => "witness-check",
            Command::EClass { .. } => "e-class",
            Command::Demo { which: DemoCommand::Example1 { .. } } => "demo example1",
            Command::Demo { which: DemoCommand::Example2 { .. } } => "demo example2",
        }
    }
}

struct Failure {
    kind: String,
    detail: Value,
}

type CmdResult = Result<Value, Failure>;

fn fail(kind: &str, message: impl Display) -> Failure {
    Failure { kind: kind.into(), detail: json!({ "message": message.to_string() }) }
}

fn fail_with(kind: &str, message: impl Display, mut extra: Map<String, Value>) -> Failure {
    extra.insert("message".into(), Value::String(message.to_string()));
    Failure { kind: kind.into(), detail: Value::Object(extra) }
}

/// Parses argv and runs one command. Returns the JSON document and the exit
/// code; clap errors (usage, --help, --version) are returned for the caller
/// to print through clap's own machinery.
pub fn execute<I, T>(argv: I) -> Result<(String, i32), clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let compact = cli.json;
    let name = cli.command.name();
    let (status, payload) = match dispatch(cli.command) {
        Ok(payload) => ("ok".to_string(), payload),
        Err(f) => (f.kind, f.detail),
    };
    let code = i32::from(status != "ok");
    let doc = json!({ "command": name, "status": status, "payload": payload });
    let text = if compact {
        doc.to_string()
    } else {
        serde_json::to_string_pretty(&doc).expect("serializable document")
    };
    Ok((text, code))
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Expand { gens, word, degree } => {
            let ab = parse_gens(&gens)?;
            let w = parse_word_arg(&ab, &word)?;
            let series = magnus_expand(&w, degree);
            Ok(json!({
                "degree": istr(degree),
                "terms": series_terms_json(&ab, &series),
            }))
        }
        Command::Weight { gens, word, dmax } => {
            let ab = parse_gens(&gens)?;
            let w = parse_word_arg(&ab, &word)?;
            Ok(weight_json(lcs_weight(&w, dmax)))
        }
        Command::Class { gens, word, degree, dmax } => {
            let ab = parse_gens(&gens)?;
            let w = parse_word_arg(&ab, &word)?;
            let degree = match degree {
                Some(d) => d,
                None => match lcs_weight(&w, dmax) {
                    WeightResult::Weight(n) => n,
                    WeightResult::Identity => {
                        return Err(fail(
                            "identity-word",
                            "the identity has no weight; pass --degree for a zero class",
                        ));
                    }
                    WeightResult::ExceedsBound(bound) => {
                        return Err(fail(
                            "weight-exceeds-bound",
                            format!("weight above the probe bound {bound}; raise --dmax"),
                        ));
                    }
                },
            };
            let vector = leading_lie_class(&w, degree).map_err(class_error)?;
            Ok(lie_vector_json(&ab, &vector))
        }
        Command::LyndonBasis { gens, degree } => {
            let ab = parse_gens(&gens)?;
            let words = lyndon_words(ab.rank(), degree);
            Ok(json!({
                "degree": istr(degree),
                "count": istr(words.len()),
                "words": words.iter().map(|m| monomial_name(&ab, m)).collect::<Vec<_>>(),
            }))
        }
        Command::Snf { file, matrix } => {
            let m = match (file, matrix) {
                (Some(path), None) => load_presentation(&path)?.exponent_matrix(),
                (None, Some(text)) => {
                    parse_matrix(&text).map_err(|e| fail("matrix-format-error", e))?
                }
                _ => unreachable!("clap enforces exactly one source"),
            };
            let snf = smith_normal_form(&m);
            Ok(json!({
                "rows": istr(m.rows()),
                "cols": istr(m.cols()),
                "rank": istr(snf.rank()),
                "invariant_factors":
                    snf.invariant_factors.iter().map(istr).collect::<Vec<_>>(),
                "u": matrix_json(&snf.u),
                "v": matrix_json(&snf.v),
            }))
        }
        Command::Homology { file } => {
            let p = load_presentation(&file)?;
            Ok(homology_json(&p.complex_homology()))
        }
        Command::CockcroftCheck { file, dmax } => {
            let p = load_presentation(&file)?;
            let cert = certify(&p, dmax).map_err(certification_failure)?;
            Ok(certificate_json(&cert))
        }
        Command::Member { file, word, part, bounds } => {
            let p = load_presentation(&file)?;
            let mu = parse_word_arg(p.alphabet(), &word)?;
            let relators = select_part(&p, part)?;
            let sb = match bounds {
                Some(text) => {
                    let (max_length, max_steps) =
                        parse_bounds(&text).map_err(|e| fail("bounds-format-error", e))?;
                    SearchBounds { max_length, max_steps }
                }
                None => SearchBounds::defaults_for(&mu, relators),
            };
            match search_membership(&mu, relators, &sb) {
                MembershipEvidence::SearchProved(trace) => {
                    let witness = trace_to_witness(&mu, relators, &trace)
                        .expect("trace produced by the search replays");
                    let balance = exponent_balance(&witness, relators)
                        .expect("witness indices in range");
                    Ok(json!({
                        "status": "proved",
                        "steps": istr(trace.steps.len()),
                        "trace": trace_json(&trace),
                        "witness": witness_json(&witness),
                        "balance": balance_json(&balance),
                    }))
                }
                MembershipEvidence::Unknown { note } => {
                    Ok(json!({ "status": "unknown", "note": note }))
                }
                MembershipEvidence::Verified(_) => unreachable!("search never returns Verified"),
            }
        }
        Command::WitnessCheck { file, word, witness, part } => {
            let p = load_presentation(&file)?;
            let mu = parse_word_arg(p.alphabet(), &word)?;
            let relators = select_part(&p, part)?;
            let text = std::fs::read_to_string(&witness)
                .map_err(|e| fail("io-error", format!("{}: {e}", witness.display())))?;
            let doc: Value = serde_json::from_str(&text)
                .map_err(|e| fail("witness-format-error", e))?;
            let witness = witness_from_json(p.alphabet(), &doc)
                .map_err(|e| fail("witness-format-error", e))?;
            let valid = check_witness(&mu, &witness, relators)
                .map_err(|e| fail("witness-error", e))?;
            let balance =
                exponent_balance(&witness, relators).map_err(|e| fail("witness-error", e))?;
            Ok(json!({
                "valid": valid,
                "factors": istr(witness.factors.len()),
                "balance": balance_json(&balance),
            }))
        }
        Command::EClass { file, word, degree, dmax } => {
            let p = load_presentation(&file)?;
            let mu = parse_word_arg(p.alphabet(), &word)?;
            let cert = certify(&p, dmax).map_err(certification_failure)?;
            let image = e_class(&mu, degree, &cert).map_err(e_class_error)?;
            Ok(json!({
                "certificate_degree": istr(cert.degree()),
                "image": image_json(p.alphabet(), &image),
            }))
        }
        Command::Demo { which } => match which {
            DemoCommand::Example1 { a, b, c, dmax, bounds } => {
                let family = TripleCommutator { a, b, c };
                let base = TripleCommutator { a: 1, b: 1, c: 1 };
                run_demo(
                    json!({ "a": istr(a), "b": istr(b), "c": istr(c) }),
                    family.presentation(),
                    family.mu(),
                    family.witness_r(),
                    family.witness_s(),
                    base.presentation(),
                    base.mu(),
                    family.scalar(),
                    dmax,
                    bounds,
                )
            }
            DemoCommand::Example2 { c, dmax, bounds } => {
                let family = NestedCommutator { c };
                let base = NestedCommutator { c: 1 };
                run_demo(
                    json!({ "c": istr(c) }),
                    family.presentation(),
                    family.mu(),
                    family.witness_r(),
                    family.witness_s(),
                    base.presentation(),
                    base.mu(),
                    family.scalar(),
                    dmax,
                    bounds,
                )
            }
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn run_demo(
    params: Value,
    p: Presentation,
    mu: Word,
    fallback_r: Witness,
    fallback_s: Witness,
    base_p: Presentation,
    base_mu: Word,
    scalar: BigInt,
    dmax: usize,
    bounds: Option<String>,
) -> CmdResult {
    let bounds = match bounds {
        Some(text) => Some(parse_bounds(&text).map_err(|e| fail("bounds-format-error", e))?),
        None => None,
    };
    let cert = certify(&p, dmax).map_err(certification_failure)?;
    let part_r = p.part_r().expect("demo presentations are partitioned");
    let part_s = p.part_s().expect("demo presentations are partitioned");
    let (ev_r, r_json) = demo_evidence(&mu, part_r, fallback_r, bounds);
    let (ev_s, s_json) = demo_evidence(&mu, part_s, fallback_s, bounds);
    let report = detect_h3(&p, &mu, &cert, &ev_r, &ev_s, dmax)
        .map_err(|e| fail("detection-error", e))?;
    let base_cert = certify(&base_p, dmax).map_err(certification_failure)?;
    let base_image =
        e_class(&base_mu, report.weight, &base_cert).map_err(e_class_error)?;
    let scalar_match = base_image.vector.scalar_mul(&scalar) == report.image.vector;
    let efficiency =
        efficiency_report(&p, &cert).expect("certificate computed from this presentation");
    Ok(json!({
        "params": params,
        "presentation": presentation_json(&p),
        "certificate": certificate_json(&cert),
        "mu": mu.to_string(),
        "membership": { "r": r_json, "s": s_json },
        "weight": istr(report.weight),
        "e_class": image_json(p.alphabet(), &report.image),
        "base_vector": coords_json(base_p.alphabet(), &base_image.vector),
        "scalar": istr(&scalar),
        "scalar_match": scalar_match,
        "detected": report.detected,
        "efficiency": efficiency_json(&efficiency),
    }))
}

/// Tries the bounded search first; falls back to the constructed witness.
/// The fallback is checked before use, so the evidence handed on is sound
/// either way.
fn demo_evidence(
    mu: &Word,
    relators: &[Word],
    fallback: Witness,
    bounds: Option<(usize, usize)>,
) -> (MembershipEvidence, Value) {
    let defaults = SearchBounds::defaults_for(mu, relators);
    let sb = match bounds {
        Some((max_length, max_steps)) => SearchBounds { max_length, max_steps },
        None => SearchBounds { max_length: defaults.max_length, max_steps: DEMO_STEP_BUDGET },
    };
    if let MembershipEvidence::SearchProved(trace) = search_membership(mu, relators, &sb) {
        let witness =
            trace_to_witness(mu, relators, &trace).expect("trace produced by the search replays");
        let balance = exponent_balance(&witness, relators).expect("witness indices in range");
        let detail = json!({
            "kind": "search-proved",
            "steps": istr(trace.steps.len()),
            "balance": balance_json(&balance),
        });
        return (MembershipEvidence::SearchProved(trace), detail);
    }
    assert!(
        check_witness(mu, &fallback, relators).expect("fallback witness indices in range"),
        "constructed fallback witness must hold",
    );
    let balance = exponent_balance(&fallback, relators).expect("witness indices in range");
    let detail = json!({
        "kind": "constructed-witness",
        "factors": istr(fallback.factors.len()),
        "balance": balance_json(&balance),
    });
    (MembershipEvidence::Verified(fallback), detail)
}

// ---- input helpers ----

fn parse_gens(s: &str) -> Result<Alphabet, Failure> {
    let names: Vec<&str> = s.split(',').map(str::trim).collect();
    Alphabet::new(names).map_err(|e| fail("parse-error", e))
}

fn parse_word_arg(ab: &Alphabet, s: &str) -> Result<Word, Failure> {
    parse_word(ab, s).map_err(|e| fail("parse-error", e))
}

fn load_presentation(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail("io-error", format!("{}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| fail("presentation-error", e))
}

fn select_part(p: &Presentation, part: PartChoice) -> Result<&[Word], Failure> {
    match part {
        PartChoice::All => Ok(p.relators()),
        PartChoice::R => p
            .part_r()
            .ok_or_else(|| fail("missing-partition", "the file has no s: lines, so no parts")),
        PartChoice::S => p
            .part_s()
            .ok_or_else(|| fail("missing-partition", "the file has no s: lines, so no parts")),
    }
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err("expected LENGTH,STEPS".into());
    }
    let max_length = parts[0].parse().map_err(|e| format!("length: {e}"))?;
    let max_steps = parts[1].parse().map_err(|e| format!("steps: {e}"))?;
    Ok((max_length, max_steps))
}

fn parse_matrix(s: &str) -> Result<IntMatrix, String> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, row_text) in s.split(';').enumerate() {
        let mut row = Vec::new();
        for entry in row_text.split(',') {
            let v: BigInt = entry
                .trim()
                .parse()
                .map_err(|_| format!("row {i}: {:?} is not an integer", entry.trim()))?;
            row.push(v);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(format!("row {i} has {} entries, row 0 has {}", row.len(), first.len()));
            }
        }
        rows.push(row);
    }
    let cols = rows.first().map(Vec::len).unwrap_or(0);
    if cols == 0 {
        return Err("matrix has no entries".into());
    }
    Ok(IntMatrix::from_rows(rows.len(), cols, rows))
}

fn witness_from_json(ab: &Alphabet, doc: &Value) -> Result<Witness, String> {
    let factors = doc
        .get("factors")
        .and_then(Value::as_array)
        .ok_or("expected an object with a \"factors\" array")?;
    let mut out = Vec::with_capacity(factors.len());
    for (i, f) in factors.iter().enumerate() {
        let conjugator_text = f
            .get("conjugator")
            .and_then(Value::as_str)
            .ok_or(format!("factor {i}: missing conjugator string"))?;
        let conjugator =
            parse_word(ab, conjugator_text).map_err(|e| format!("factor {i}: {e}"))?;
        let relator = usize::try_from(int_field(f, "relator", i)?)
            .map_err(|_| format!("factor {i}: relator must be nonnegative"))?;
        let sign = i8::try_from(int_field(f, "sign", i)?)
            .map_err(|_| format!("factor {i}: sign out of range"))?;
        out.push(WitnessFactor { conjugator, relator, sign });
    }
    Ok(Witness { factors: out })
}

/// Accepts both JSON numbers and decimal strings, mirroring the output rule.
fn int_field(f: &Value, key: &str, i: usize) -> Result<i64, String> {
    match f.get(key) {
        Some(Value::Number(n)) => {
            n.as_i64().ok_or(format!("factor {i}: {key} out of range"))
        }
        Some(Value::String(s)) => {
            s.parse().map_err(|_| format!("factor {i}: {key} is not an integer"))
        }
        _ => Err(format!("factor {i}: missing {key}")),
    }
}

// ---- error mapping ----

fn certification_failure(e: CertificationFailure) -> Failure {
    let message = e.to_string();
    match e {
        CertificationFailure::MissingPartition => fail("missing-partition", message),
        CertificationFailure::WeightExceedsBound { relator, bound } => {
            let mut extra = Map::new();
            extra.insert("relator".into(), istr(relator));
            extra.insert("bound".into(), istr(bound));
            fail_with("weight-exceeds-bound", message, extra)
        }
        CertificationFailure::UnequalWeights { weights } => {
            let mut extra = Map::new();
            extra.insert(
                "weights".into(),
                Value::Array(weights.iter().map(istr).collect()),
            );
            fail_with("unequal-weights", message, extra)
        }
        CertificationFailure::Dependent { dependency } => {
            let mut extra = Map::new();
            extra.insert(
                "dependency".into(),
                Value::Array(dependency.iter().map(istr).collect()),
            );
            fail_with("dependent-classes", message, extra)
        }
    }
}

fn class_error(e: ClassError) -> Failure {
    match e {
        ClassError::WeightBelowDegree { .. } => fail("weight-below-degree", e),
        ClassError::NotLieElement { .. } => fail("not-a-lie-element", e),
    }
}

fn e_class_error(e: EClassError) -> Failure {
    match e {
        EClassError::AlphabetMismatch => fail("alphabet-mismatch", e),
        EClassError::DegreeNotAboveCertificate { .. } => {
            fail("degree-not-above-certificate", e)
        }
        EClassError::Class(inner) => class_error(inner),
    }
}

// ---- JSON rendering ----

fn istr(n: impl ToString) -> Value {
    Value::String(n.to_string())
}

fn monomial_name(ab: &Alphabet, m: &[usize]) -> String {
    m.iter().map(|&g| ab.name(g)).collect()
}

fn series_terms_json(ab: &Alphabet, series: &TruncatedSeries) -> Value {
    let mut map = Map::new();
    for (m, c) in series.sorted_terms() {
        if m.is_empty() {
            continue;
        }
        map.insert(monomial_name(ab, m), istr(c));
    }
    Value::Object(map)
}

fn weight_json(result: WeightResult) -> Value {
    match result {
        WeightResult::Identity => json!({ "weight": "identity" }),
        WeightResult::Weight(n) => json!({ "weight": istr(n) }),
        WeightResult::ExceedsBound(bound) => {
            json!({ "weight": "exceeds-bound", "bound": istr(bound) })
        }
    }
}

fn coords_json(ab: &Alphabet, vector: &LieVector) -> Value {
    let mut map = Map::new();
    for (m, c) in vector.coords() {
        map.insert(monomial_name(ab, m), istr(c));
    }
    Value::Object(map)
}

fn lie_vector_json(ab: &Alphabet, vector: &LieVector) -> Value {
    json!({
        "degree": istr(vector.degree()),
        "basis": lyndon_words(vector.rank(), vector.degree())
            .iter()
            .map(|m| monomial_name(ab, m))
            .collect::<Vec<_>>(),
        "coords": coords_json(ab, vector),
    })
}

fn image_json(ab: &Alphabet, image: &ENImage) -> Value {
    let mut doc = lie_vector_json(ab, &image.vector);
    doc.as_object_mut()
        .expect("lie vector renders as an object")
        .insert("target_exact".into(), Value::Bool(image.target_exact));
    doc
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| istr(m.get(i, j))).collect()))
            .collect(),
    )
}

fn presentation_json(p: &Presentation) -> Value {
    let words = |ws: &[Word]| -> Value {
        Value::Array(ws.iter().map(|w| Value::String(w.to_string())).collect())
    };
    match (p.part_r(), p.part_s()) {
        (Some(r), Some(s)) => json!({
            "generators": p.alphabet().names(),
            "r": words(r),
            "s": words(s),
        }),
        _ => json!({
            "generators": p.alphabet().names(),
            "relators": words(p.relators()),
        }),
    }
}

fn certificate_json(cert: &CockcroftCertificate) -> Value {
    let ab = cert.alphabet();
    json!({
        "generators": ab.names(),
        "degree": istr(cert.degree()),
        "part_sizes": [istr(cert.part_sizes().0), istr(cert.part_sizes().1)],
        "relator_weights": cert.relator_weights().iter().map(istr).collect::<Vec<_>>(),
        "lyndon_basis": lyndon_words(ab.rank(), cert.degree())
            .iter()
            .map(|m| monomial_name(ab, m))
            .collect::<Vec<_>>(),
        "class_matrix": matrix_json(cert.class_matrix()),
        "independent": cert.independent(),
        "conclusions": {
            "intersection_in_commutator_subgroups":
                cert.conclusions().intersection_in_commutator_subgroups,
            "intersection_in_next_term": cert.conclusions().intersection_in_next_term,
            "model_cockcroft": cert.conclusions().model_cockcroft,
        },
    })
}

fn homology_json(h: &HomologyReport) -> Value {
    json!({
        "h1_torsion": h.h1_torsion.iter().map(istr).collect::<Vec<_>>(),
        "h1_free_rank": istr(h.h1_free_rank),
        "h2_free_rank": istr(h.h2_free_rank),
    })
}

fn efficiency_json(e: &EfficiencyReport) -> Value {
    json!({
        "generators": istr(e.generators),
        "relators": istr(e.relators),
        "deficiency": istr(e.deficiency),
        "h1_free_rank": istr(e.h1_free_rank),
        "h2_min_generators": istr(e.h2_min_generators),
        "efficient": e.efficient,
    })
}

fn witness_json(witness: &Witness) -> Value {
    json!({
        "factors": witness
            .factors
            .iter()
            .map(|f| {
                json!({
                    "conjugator": f.conjugator.to_string(),
                    "relator": istr(f.relator),
                    "sign": istr(f.sign),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn trace_json(trace: &RewriteTrace) -> Value {
    json!({
        "steps": trace
            .steps
            .iter()
            .map(|s| {
                json!({
                    "relator": istr(s.relator),
                    "inverted": s.inverted,
                    "shift": istr(s.shift),
                    "position": istr(s.position),
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn balance_json(balance: &BTreeMap<usize, i64>) -> Value {
    let mut map = Map::new();
    for (relator, total) in balance {
        map.insert(relator.to_string(), istr(total));
    }
    Value::Object(map)
}
