//! Command-line surface: subcommand dispatch, configuration, and the
//! append-only JSONL experiment log.
//!
//! Exit codes: 0 success, 2 usage error, 3 data/format error, 4 violated
//! mathematical precondition. `SWB_PRIME` supplies the default prime and
//! `SWB_LOG` the default log path. Identical command, seed and prime
//! produce byte-identical JSON payloads; `--no-timestamp` removes the one
//! non-deterministic log field so whole records can be compared.
//! Concurrent appends to one log file are not supported.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use serde_json::{json, Value};

use crate::arith::scalar::Field;
use crate::covers::{
    bn_number, gonality_prediction, Genus2ThetaRing, GonalityPrediction, ThetaParity,
};
use crate::detquartic::{rank_drop_points, smooth_plane_curve_check};
use crate::error::Error;
use crate::hitchin::{expected_dims, run_rank_experiment};
use crate::json::{
    builtin_fixture, from_json_str, to_json_string, BranchReportDoc, ExperimentRecord,
    Genus2RingDoc, QuarticFixtureDoc, SpectralDataDoc, TwistedEndoDoc, SCHEMA_VERSION,
};
use crate::spectral::{char_poly, classify_branching, discriminant, genus, SplittingType};

const USAGE: &str = "\
swb - exact workbench for spectral curves over the projective line

USAGE:
    swb <group> <op> [flags]

GROUPS AND OPS:
    spectral charpoly --endo FILE          characteristic polynomial of a twisted endomorphism
    spectral disc     --data FILE          discriminant of spectral data
    spectral classify --data FILE          branching classification
    spectral genus    --n N --deg-n D [--g-base G]
    hitchin  dims --e E1,E2 --m M1,M2 --k K
    hitchin  experiment --e .. --m .. --k K [--prime P] [--seed S] [--samples N]
    covers   hilbert    (--fixture FILE | --random) [--max-degree D]
    covers   generation (--fixture FILE | --random) --d-gen A --d-target B
    covers   gonality-table [--g G --theta even|odd]
    covers   bn --g G --r R --d D
    quartic  det | cofactors | adjugate-check  --fixture NAME|FILE [--quad i,j,k,l]
    quartic  rank-drop    --fixture NAME|FILE [--prime P]
    quartic  smooth-check --fixture NAME|FILE [--prime P] [--e-max E]

GLOBAL FLAGS:
    --prime P        prime field modulus (default: $SWB_PRIME or 1009)
    --seed S         random seed (default 0)
    --samples N      Monte Carlo samples (default 10)
    --out FILE       append an experiment record to this JSONL log
                     (default: $SWB_LOG)
    --format F       json | csv | text (default text)
    --no-timestamp   omit the timestamp from the log record

Built-in fixtures: beauville-genus3
";

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Json,
    Csv,
    Text,
}

struct Invocation {
    group: String,
    op: String,
    flags: BTreeMap<String, String>,
    bools: Vec<String>,
}

/// Entry point: returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    if args.is_empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help" {
        println!("{USAGE}");
        return if args.is_empty() { 2 } else { 0 };
    }
    let inv = match parse_args(args) {
        Ok(inv) => inv,
        Err(msg) => {
            eprintln!("usage error: {msg}");
            eprintln!("run `swb --help` for the command surface");
            return 2;
        }
    };
    match dispatch(&inv) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. }
                | Error::Invalid { .. }
                | Error::FieldMismatch(_, _)
                | Error::TwistMismatch { .. }
                | Error::IndexOutOfRange(_) => 3,
                _ => 4,
            }
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    }
}

enum CliError {
    Usage(String),
    Domain(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

const BOOL_FLAGS: &[&str] = &["no-timestamp", "random"];

fn parse_args(args: &[String]) -> std::result::Result<Invocation, String> {
    let mut positional = Vec::new();
    let mut flags = BTreeMap::new();
    let mut bools = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let a = &args[i];
        if let Some(name) = a.strip_prefix("--") {
            if BOOL_FLAGS.contains(&name) {
                bools.push(name.to_string());
                i += 1;
                continue;
            }
            let value = args
                .get(i + 1)
                .ok_or_else(|| format!("flag --{name} needs a value"))?;
            flags.insert(name.to_string(), value.clone());
            i += 2;
        } else {
            positional.push(a.clone());
            i += 1;
        }
    }
    if positional.len() != 2 {
        return Err(format!("expected `<group> <op>`, got {:?}", positional));
    }
    Ok(Invocation {
        group: positional[0].clone(),
        op: positional[1].clone(),
        flags,
        bools,
    })
}

impl Invocation {
    fn known_flags(&self, allowed: &[&str]) -> CliResult<()> {
        const GLOBAL: &[&str] = &["prime", "seed", "samples", "out", "format"];
        for key in self.flags.keys() {
            if !allowed.contains(&key.as_str()) && !GLOBAL.contains(&key.as_str()) {
                return Err(CliError::Usage(format!("unknown flag --{key}")));
            }
        }
        Ok(())
    }

    fn prime(&self) -> CliResult<u64> {
        match self.flags.get("prime") {
            Some(v) => v
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid --prime `{v}`"))),
            None => match std::env::var("SWB_PRIME") {
                Ok(v) => v
                    .parse()
                    .map_err(|_| CliError::Usage(format!("invalid SWB_PRIME `{v}`"))),
                Err(_) => Ok(1009),
            },
        }
    }

    fn u64_flag(&self, name: &str, default: u64) -> CliResult<u64> {
        match self.flags.get(name) {
            Some(v) => v
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid --{name} `{v}`"))),
            None => Ok(default),
        }
    }

    fn i64_flag(&self, name: &str) -> CliResult<i64> {
        let v = self.require(name)?;
        v.parse()
            .map_err(|_| CliError::Usage(format!("invalid --{name} `{v}`")))
    }

    fn require(&self, name: &str) -> CliResult<&String> {
        self.flags
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("missing required flag --{name}")))
    }

    fn format(&self) -> CliResult<Format> {
        match self.flags.get("format").map(|s| s.as_str()) {
            None | Some("text") => Ok(Format::Text),
            Some("json") => Ok(Format::Json),
            Some("csv") => Ok(Format::Csv),
            Some(other) => Err(CliError::Usage(format!(
                "invalid --format `{other}` (json|csv|text)"
            ))),
        }
    }

    fn out_path(&self) -> Option<String> {
        self.flags
            .get("out")
            .cloned()
            .or_else(|| std::env::var("SWB_LOG").ok())
    }

    fn int_list(&self, name: &str) -> CliResult<Vec<i64>> {
        let v = self.require(name)?;
        v.split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("invalid entry `{t}` in --{name}")))
            })
            .collect()
    }

    fn splitting_type(&self) -> CliResult<SplittingType> {
        let e = self.int_list("e")?;
        let m: Vec<u64> = self
            .int_list("m")?
            .into_iter()
            .map(|v| {
                u64::try_from(v)
                    .map_err(|_| CliError::Usage("multiplicities must be positive".into()))
            })
            .collect::<CliResult<_>>()?;
        SplittingType::new(e, m).map_err(CliError::from)
    }

    fn read_file(&self, name: &str) -> CliResult<String> {
        let path = self.require(name)?;
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read `{path}`: {e}")))
    }

    fn fixture_doc(&self) -> CliResult<QuarticFixtureDoc> {
        let name = self.require("fixture")?;
        let text = match builtin_fixture(name) {
            Some(t) => t.to_string(),
            None => std::fs::read_to_string(name)
                .map_err(|e| CliError::Io(format!("cannot read fixture `{name}`: {e}")))?,
        };
        let doc: QuarticFixtureDoc = from_json_str(&text)?;
        doc.validate()?;
        Ok(doc)
    }

    fn genus2_ring(&self, prime: u64, seed: u64) -> CliResult<Genus2ThetaRing> {
        if self.bools.iter().any(|b| b == "random") {
            return Genus2ThetaRing::random(prime, seed, true).map_err(CliError::from);
        }
        if self.flags.contains_key("fixture") {
            let text = self.read_file("fixture")?;
            let doc: Genus2RingDoc = from_json_str(&text)?;
            return doc.into_ring().map_err(CliError::from);
        }
        Err(CliError::Usage(
            "need either --fixture FILE or --random".into(),
        ))
    }
}

struct Rendered {
    payload: Value,
    text: String,
    csv: Option<String>,
}

fn dispatch(inv: &Invocation) -> CliResult<()> {
    let started = Instant::now();
    let (rendered, params) = run_op(inv)?;
    let elapsed_ms = started.elapsed().as_millis() as u64;
    match inv.format()? {
        Format::Json => println!("{}", to_json_string(&rendered.payload)),
        Format::Text => println!("{}", rendered.text),
        Format::Csv => match &rendered.csv {
            Some(csv) => print!("{csv}"),
            None => {
                return Err(CliError::Usage(
                    "this operation has no csv rendering".into(),
                ))
            }
        },
    }
    if let Some(path) = inv.out_path() {
        let record = ExperimentRecord {
            schema_version: SCHEMA_VERSION,
            timestamp_ms: if inv.bools.iter().any(|b| b == "no-timestamp") {
                None
            } else {
                Some(
                    std::time::SystemTime::now()
                        .duration_since(std::time::UNIX_EPOCH)
                        .map(|d| d.as_millis() as u64)
                        .unwrap_or(0),
                )
            },
            command: format!("{} {}", inv.group, inv.op),
            params,
            result: rendered.payload,
            elapsed_ms,
        };
        let line = serde_json::to_string(&record).expect("serializable record");
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)
            .map_err(|e| CliError::Io(format!("cannot open log `{path}`: {e}")))?;
        writeln!(file, "{line}").map_err(|e| CliError::Io(format!("cannot append: {e}")))?;
    }
    Ok(())
}

fn run_op(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    match (inv.group.as_str(), inv.op.as_str()) {
        ("spectral", "charpoly") => spectral_charpoly(inv),
        ("spectral", "disc") => spectral_disc(inv),
        ("spectral", "classify") => spectral_classify(inv),
        ("spectral", "genus") => spectral_genus(inv),
        ("hitchin", "dims") => hitchin_dims(inv),
        ("hitchin", "experiment") => hitchin_experiment(inv),
        ("covers", "hilbert") => covers_hilbert(inv),
        ("covers", "generation") => covers_generation(inv),
        ("covers", "gonality-table") => covers_gonality(inv),
        ("covers", "bn") => covers_bn(inv),
        ("quartic", "det") => quartic_det(inv),
        ("quartic", "cofactors") => quartic_cofactors(inv),
        ("quartic", "adjugate-check") => quartic_adjugate(inv),
        ("quartic", "rank-drop") => quartic_rank_drop(inv),
        ("quartic", "smooth-check") => quartic_smooth(inv),
        (g, o) => Err(CliError::Usage(format!("unknown command `{g} {o}`"))),
    }
}

fn spectral_charpoly(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["endo"])?;
    let text = inv.read_file("endo")?;
    let doc: TwistedEndoDoc = from_json_str(&text)?;
    let phi = doc.into_endo()?;
    let chi = char_poly(&phi)?;
    let out = SpectralDataDoc::of(&chi);
    let mut lines = vec![format!(
        "char poly of a rank-{} twisted endomorphism:",
        chi.n()
    )];
    for (i, s) in out.s.iter().enumerate() {
        lines.push(format!("  s_{} = {s}", i + 1));
    }
    let csv = {
        let mut rows = vec!["i,form".to_string()];
        rows.extend(
            out.s
                .iter()
                .enumerate()
                .map(|(i, s)| format!("{},{s}", i + 1)),
        );
        rows.join("\n") + "\n"
    };
    Ok((
        Rendered {
            payload: serde_json::to_value(&out).unwrap(),
            text: lines.join("\n"),
            csv: Some(csv),
        },
        json!({"endo": inv.flags.get("endo")}),
    ))
}

fn spectral_disc(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["data"])?;
    let text = inv.read_file("data")?;
    let doc: SpectralDataDoc = from_json_str(&text)?;
    let data = doc.into_data()?;
    let disc = discriminant(&data)?;
    let payload = json!({
        "discriminant": crate::arith::print_form(&disc),
        "twist": disc.twist(),
    });
    Ok((
        Rendered {
            text: format!("disc = {}", crate::arith::print_form(&disc)),
            payload,
            csv: None,
        },
        json!({"data": inv.flags.get("data")}),
    ))
}

fn spectral_classify(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["data"])?;
    let text = inv.read_file("data")?;
    let doc: SpectralDataDoc = from_json_str(&text)?;
    let data = doc.into_data()?;
    let report = classify_branching(&data)?;
    let doc = BranchReportDoc::of(&report);
    let mut lines = vec![
        format!("discriminant: {}", doc.discriminant),
        format!("squarefree (simply branched): {}", doc.squarefree),
    ];
    for c in &doc.classifications {
        let at =
            c.x.map(|x| format!("x = {x}"))
                .unwrap_or_else(|| "infinity".to_string());
        lines.push(format!("  {} -> {}", at, c.tag));
    }
    Ok((
        Rendered {
            payload: serde_json::to_value(&doc).unwrap(),
            text: lines.join("\n"),
            csv: None,
        },
        json!({"data": inv.flags.get("data")}),
    ))
}

fn spectral_genus(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["n", "deg-n", "g-base"])?;
    let n = inv.u64_flag("n", 0)?;
    let deg_n = inv.u64_flag("deg-n", 0)?;
    if n == 0 || deg_n == 0 {
        return Err(CliError::Usage("--n and --deg-n must be positive".into()));
    }
    let g_base = inv.u64_flag("g-base", 0)?;
    let g = genus(n, deg_n, g_base)?;
    Ok((
        Rendered {
            payload: json!({"genus": g}),
            text: format!("g = {g}"),
            csv: None,
        },
        json!({"n": n, "deg_n": deg_n, "g_base": g_base}),
    ))
}

fn hitchin_dims(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["e", "m", "k"])?;
    let st = inv.splitting_type()?;
    let k = inv.i64_flag("k")?;
    if k < 1 {
        return Err(CliError::Usage("--k must be positive".into()));
    }
    let report = expected_dims(&st, k);
    let text = format!(
        "splitting type e={:?} m={:?} k={}\n  h0(End E (k)) = {}\n  dim Aut(E)     = {}\n  base dim       = {}\n  expected (general)  = {}\n  balanced hypothesis = {}\n  expected (balanced) = {}\n  rho'                = {}\n  genus               = {}",
        report.e,
        report.m,
        report.k,
        report.end_twist_dim,
        report.aut_dim,
        report.base_dim,
        report.expected_general,
        report.balanced_applicable,
        report
            .expected_balanced
            .map(|v| v.to_string())
            .unwrap_or_else(|| "n/a".into()),
        report.rho_prime,
        report.genus,
    );
    Ok((
        Rendered {
            payload: serde_json::to_value(&report).unwrap(),
            text,
            csv: None,
        },
        json!({"e": report.e, "m": report.m, "k": k}),
    ))
}

fn hitchin_experiment(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["e", "m", "k"])?;
    let st = inv.splitting_type()?;
    let k = inv.i64_flag("k")?;
    if k < 1 {
        return Err(CliError::Usage("--k must be positive".into()));
    }
    let p = inv.prime()?;
    let seed = inv.u64_flag("seed", 0)?;
    let samples = inv.u64_flag("samples", 10)?;
    let report = run_rank_experiment(&st, k, p, seed, samples)?;
    let text = format!(
        "rank experiment e={:?} m={:?} k={} p={} seed={} samples={}\n  max rank {} / base dim {} -> dominant: {}\n  empirical fiber dim = {}\n  irreducible samples: {}/{}",
        report.e,
        report.m,
        report.k,
        report.p,
        report.seed,
        report.samples,
        report.max_rank,
        report.base_dim,
        report.dominant,
        report.empirical_fiber_dim,
        report
            .per_sample
            .iter()
            .filter(|s| s.irreducible == Some(true))
            .count(),
        report.samples,
    );
    let params =
        json!({"e": report.e, "m": report.m, "k": k, "p": p, "seed": seed, "samples": samples});
    Ok((
        Rendered {
            payload: serde_json::to_value(&report).unwrap(),
            text,
            csv: None,
        },
        params,
    ))
}

fn covers_hilbert(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["fixture", "max-degree"])?;
    let prime = inv.prime()?;
    let seed = inv.u64_flag("seed", 0)?;
    let max_degree = inv.u64_flag("max-degree", 12)? as u32;
    let ring = inv.genus2_ring(prime, seed)?;
    // Both columns regardless of the fixture's own cover flag.
    let bare = Genus2ThetaRing::new(
        ring.b1().clone(),
        ring.b2().clone(),
        ring.linear_form().clone(),
        false,
    )?;
    let full = Genus2ThetaRing::new(
        ring.b1().clone(),
        ring.b2().clone(),
        ring.linear_form().clone(),
        true,
    )?;
    let rows: Vec<(u32, u64, u64)> = (0..=max_degree)
        .map(|m| (m, bare.hilbert_dim(m), full.hilbert_dim(m)))
        .collect();
    let mut text = vec![format!(
        "{:>6} {:>10} {:>12}",
        "degree", "R_theta", "R_pullback"
    )];
    for (m, a, b) in &rows {
        text.push(format!("{m:>6} {a:>10} {b:>12}"));
    }
    let csv = {
        let mut out = vec!["degree,r_theta,r_pullback".to_string()];
        out.extend(rows.iter().map(|(m, a, b)| format!("{m},{a},{b}")));
        out.join("\n") + "\n"
    };
    let payload = json!({
        "fixture": Genus2RingDoc::of(&ring),
        "table": rows.iter().map(|(m, a, b)| json!({"degree": m, "r_theta": a, "r_pullback": b})).collect::<Vec<_>>(),
    });
    Ok((
        Rendered {
            payload,
            text: text.join("\n"),
            csv: Some(csv),
        },
        json!({"prime": prime, "seed": seed, "max_degree": max_degree, "fixture": inv.flags.get("fixture")}),
    ))
}

fn covers_generation(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["fixture", "d-gen", "d-target"])?;
    let prime = inv.prime()?;
    let seed = inv.u64_flag("seed", 0)?;
    let d_gen = inv
        .require("d-gen")?
        .parse::<u32>()
        .map_err(|_| CliError::Usage("invalid --d-gen".into()))?;
    let d_target = inv
        .require("d-target")?
        .parse::<u32>()
        .map_err(|_| CliError::Usage("invalid --d-target".into()))?;
    let ring = inv.genus2_ring(prime, seed)?;
    let generated = ring.generation_in_degree(d_gen, d_target)?;
    let dim = ring.hilbert_dim(d_target);
    let payload = json!({
        "d_gen": d_gen,
        "d_target": d_target,
        "target_dim": dim,
        "generated": generated,
    });
    Ok((
        Rendered {
            text: format!(
                "degree-{d_target} piece (dim {dim}) generated by degree-{d_gen} products: {generated}"
            ),
            payload,
            csv: None,
        },
        json!({"prime": prime, "seed": seed, "d_gen": d_gen, "d_target": d_target, "fixture": inv.flags.get("fixture")}),
    ))
}

fn covers_gonality(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["g", "theta"])?;
    let parse_parity = |v: &str| match v {
        "even" => Ok(ThetaParity::Even),
        "odd" => Ok(ThetaParity::Odd),
        other => Err(CliError::Usage(format!(
            "invalid --theta `{other}` (even|odd)"
        ))),
    };
    match (inv.flags.get("g"), inv.flags.get("theta")) {
        (Some(g), Some(theta)) => {
            let g: u64 = g
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid --g `{g}`")))?;
            let parity = parse_parity(theta)?;
            let prediction = gonality_prediction(g, parity);
            let (payload, text) = match prediction {
                GonalityPrediction::Gonality(v) => (
                    json!({"g": g, "theta": theta, "gonality": v}),
                    format!("{v}"),
                ),
                GonalityPrediction::OutsideStatedRange => (
                    json!({"g": g, "theta": theta, "gonality": "outside_stated_range"}),
                    "outside stated range".to_string(),
                ),
            };
            Ok((
                Rendered {
                    payload,
                    text,
                    csv: None,
                },
                json!({"g": g, "theta": theta}),
            ))
        }
        (None, None) => {
            let mut rows = Vec::new();
            for g in 2..=24u64 {
                for (parity, tag) in [(ThetaParity::Even, "even"), (ThetaParity::Odd, "odd")] {
                    let cell = match gonality_prediction(g, parity) {
                        GonalityPrediction::Gonality(v) => v.to_string(),
                        GonalityPrediction::OutsideStatedRange => "-".to_string(),
                    };
                    rows.push((g, tag, cell));
                }
            }
            let mut text = vec![format!("{:>4} {:>6} {:>10}", "g", "theta", "gonality")];
            for (g, tag, cell) in &rows {
                text.push(format!("{g:>4} {tag:>6} {cell:>10}"));
            }
            let csv = {
                let mut out = vec!["g,theta,gonality".to_string()];
                out.extend(rows.iter().map(|(g, t, c)| format!("{g},{t},{c}")));
                out.join("\n") + "\n"
            };
            let payload = json!(rows
                .iter()
                .map(|(g, t, c)| json!({"g": g, "theta": t, "gonality": c}))
                .collect::<Vec<_>>());
            Ok((
                Rendered {
                    payload,
                    text: text.join("\n"),
                    csv: Some(csv),
                },
                json!({}),
            ))
        }
        _ => Err(CliError::Usage(
            "--g and --theta must be given together".into(),
        )),
    }
}

fn covers_bn(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["g", "r", "d"])?;
    let g = inv
        .require("g")?
        .parse::<u64>()
        .map_err(|_| CliError::Usage("invalid --g".into()))?;
    let r = inv
        .require("r")?
        .parse::<u64>()
        .map_err(|_| CliError::Usage("invalid --r".into()))?;
    let d = inv.i64_flag("d")?;
    let rho = bn_number(g, r, d);
    Ok((
        Rendered {
            payload: json!({"g": g, "r": r, "d": d, "rho": rho}),
            text: format!("rho({g},{r},{d}) = {rho}"),
            csv: None,
        },
        json!({"g": g, "r": r, "d": d}),
    ))
}

fn quartic_det(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["fixture"])?;
    let doc = inv.fixture_doc()?;
    let m = doc.matrix_over(Field::Rational)?;
    let det = m.det_form();
    Ok((
        Rendered {
            payload: json!({"name": doc.name, "degree": det.degree(), "det": det.to_string()}),
            text: format!("det = {det}"),
            csv: None,
        },
        json!({"fixture": doc.name}),
    ))
}

fn quartic_cofactors(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["fixture"])?;
    let doc = inv.fixture_doc()?;
    let m = doc.matrix_over(Field::Rational)?;
    let d = m.size();
    let mut grid = Vec::new();
    let mut text = Vec::new();
    for i in 0..d {
        let mut row = Vec::new();
        for j in 0..d {
            let c = m.cofactor(i, j)?;
            text.push(format!("cof({i},{j}) = {c}"));
            row.push(c.to_string());
        }
        grid.push(row);
    }
    Ok((
        Rendered {
            payload: json!({"name": doc.name, "cofactors": grid}),
            text: text.join("\n"),
            csv: None,
        },
        json!({"fixture": doc.name}),
    ))
}

fn quartic_adjugate(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["fixture", "quad"])?;
    let doc = inv.fixture_doc()?;
    let m = doc.matrix_over(Field::Rational)?;
    let d = m.size();
    match inv.flags.get("quad") {
        Some(spec) => {
            let idx: Vec<usize> = spec
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| CliError::Usage(format!("invalid --quad entry `{t}`")))
                })
                .collect::<CliResult<_>>()?;
            if idx.len() != 4 {
                return Err(CliError::Usage("--quad needs four indices i,j,k,l".into()));
            }
            let quad = [idx[0], idx[1], idx[2], idx[3]];
            let holds = m.adjugate_identity_check(quad)?;
            Ok((
                Rendered {
                    payload: json!({"name": doc.name, "quad": idx, "holds": holds}),
                    text: format!("adjugate identity at {idx:?}: {holds}"),
                    csv: None,
                },
                json!({"fixture": doc.name, "quad": idx}),
            ))
        }
        None => {
            let mut failures = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        for l in 0..d {
                            if !m.adjugate_identity_check([i, j, k, l])? {
                                failures.push(vec![i, j, k, l]);
                            }
                        }
                    }
                }
            }
            let total = d * d * d * d;
            let holds = failures.is_empty();
            Ok((
                Rendered {
                    payload: json!({"name": doc.name, "quadruples": total, "holds": holds, "failures": failures}),
                    text: format!("adjugate identity on all {total} quadruples: {holds}"),
                    csv: None,
                },
                json!({"fixture": doc.name}),
            ))
        }
    }
}

fn quartic_rank_drop(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["fixture"])?;
    let doc = inv.fixture_doc()?;
    let p = inv.prime()?;
    let field = Field::prime(p)?;
    let aug = doc.augmented_over(field)?;
    let points = rank_drop_points(&aug)?;
    let mut text = vec![format!(
        "rank-drop points of [M | r] over F_{p}: {}",
        points.len()
    )];
    for pt in &points {
        text.push(format!("  [{}, {}, {}]", pt[0], pt[1], pt[2]));
    }
    let csv = {
        let mut out = vec!["x0,x1,x2".to_string()];
        out.extend(
            points
                .iter()
                .map(|pt| format!("{},{},{}", pt[0], pt[1], pt[2])),
        );
        out.join("\n") + "\n"
    };
    Ok((
        Rendered {
            payload: json!({"name": doc.name, "p": p, "count": points.len(), "points": points}),
            text: text.join("\n"),
            csv: Some(csv),
        },
        json!({"fixture": doc.name, "p": p}),
    ))
}

fn quartic_smooth(inv: &Invocation) -> CliResult<(Rendered, Value)> {
    inv.known_flags(&["fixture", "e-max"])?;
    let doc = inv.fixture_doc()?;
    let p = inv.prime()?;
    let e_max = inv.u64_flag("e-max", 2)? as u32;
    let field = Field::prime(p)?;
    let det = doc.matrix_over(field)?.det_form();
    let report = smooth_plane_curve_check(&det, p, e_max)?;
    let text = match &report {
        crate::detquartic::SmoothnessReport::SmoothOverCheckedFields { p, e_max } => format!(
            "no singular point over F_{p}^e for e <= {e_max} (not a proof over the closure)"
        ),
        crate::detquartic::SmoothnessReport::SingularPointFound {
            extension_degree, ..
        } => format!("singular point found over extension degree {extension_degree}"),
        crate::detquartic::SmoothnessReport::Inconclusive { reason } => {
            format!("inconclusive: {reason}")
        }
    };
    Ok((
        Rendered {
            payload: json!({"name": doc.name, "p": p, "e_max": e_max, "report": serde_json::to_value(&report).unwrap()}),
            text,
            csv: None,
        },
        json!({"fixture": doc.name, "p": p, "e_max": e_max}),
    ))
}
