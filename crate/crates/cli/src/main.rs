use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qpsd::certificates::{find_negative_witness, witness_value_string, Certificate};
use qpsd::classifier::classify;
use qpsd::criteria2d::{classify_2d_ternary, Criteria2dInput};
use qpsd::form::slots;
use qpsd::harness::{enumerate_family, shards_from_env, FamilySpec, HarnessConfig};
use qpsd::oracle::sphere_min_sym;
use qpsd::realroots::{count_distinct_real_roots_detail, IntPoly};
use qpsd::{Error, Family, SymTensor4, Verdict};

const EXIT_PSD: u8 = 0;
const EXIT_NOT_PSD: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NOT_COVERED: u8 = 3;
const EXIT_IO: u8 = 4;
const EXIT_VERIFY: u8 = 5;

#[derive(Parser)]
#[command(name = "qpsd", version, about = "PSD/PD decisions for ternary-entry quartic symmetric tensors")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct TensorInput {
    /// Entries in canonical slot order (5 or 15 values; see `qpsd formats`).
    #[arg(allow_negative_numbers = true)]
    entries: Vec<String>,
    /// Read the tensor from a file (whitespace/comma separated text, or a JSON object keyed by multi-index).
    #[arg(short, long)]
    file: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide PSD/PD and print the verdict.
    Classify(TensorInput),
    /// Classify, then re-verify the attached certificate exactly.
    Certify(TensorInput),
    /// Evaluate the form at an integer point, or search for a negative point.
    Witness {
        #[command(flatten)]
        input: TensorInput,
        /// Comma separated integer point.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        #[arg(long, default_value_t = 32)]
        bound: i64,
    },
    /// Count distinct real roots of an integer polynomial (constant term first).
    Roots {
        #[arg(allow_negative_numbers = true)]
        coeffs: Vec<String>,
        #[arg(short, long)]
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Numerical minimum of the form on the unit sphere.
    Oracle {
        #[command(flatten)]
        input: TensorInput,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 200)]
        iters: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Exhaustive cross-check of a diagonal family.
    Enumerate {
        /// Diagonal pattern t1111 t2222 t3333, e.g. 111, 011, 001, 000.
        #[arg(long, default_value = "111")]
        diag: String,
        /// Shard as K/N, or K with N taken from QPSD_SHARDS.
        #[arg(long, default_value = "0")]
        shard: String,
        /// Output directory; an existing run there is resumed.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        restarts: Option<usize>,
        /// Stop after this many tensors.
        #[arg(long)]
        limit: Option<u64>,
        /// Skip the oracle for tensors with a verified SOS certificate.
        #[arg(long)]
        trust_sos: bool,
    },
    /// Print the canonical entry order and the JSON schemas.
    Formats,
}

enum Fail {
    Input(String),
    Io(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(m) => Fail::Io(m),
            e => Fail::Input(e.to_string()),
        }
    }
}

type Res = Result<u8, Fail>;

fn read_file(p: &PathBuf) -> Result<String, Fail> {
    std::fs::read_to_string(p).map_err(|e| Fail::Io(format!("{}: {e}", p.display())))
}

fn read_tensor(inp: &TensorInput) -> Result<SymTensor4, Fail> {
    let text = match (&inp.file, inp.entries.is_empty()) {
        (Some(p), true) => read_file(p)?,
        (None, false) => inp.entries.join(" "),
        (Some(_), false) => return Err(Fail::Input("give entries or --file, not both".into())),
        (None, true) => return Err(Fail::Input("no tensor given".into())),
    };
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(trimmed).map_err(|e| Fail::Input(e.to_string()))?;
        let dim = if v.as_object().is_some_and(|o| o.keys().any(|k| k.contains('3'))) { 3 } else { 2 };
        return Ok(SymTensor4::parse_json(trimmed, dim)?);
    }
    if trimmed.starts_with('[') {
        let v: Vec<Value> = serde_json::from_str(trimmed).map_err(|e| Fail::Input(e.to_string()))?;
        let s: Vec<String> = v.iter().map(|x| x.to_string().trim_matches('"').to_string()).collect();
        return Ok(SymTensor4::parse_text(&s.join(" "))?);
    }
    Ok(SymTensor4::parse_text(&trimmed.replace(',', " "))?)
}

fn decide(t: &SymTensor4) -> Result<Verdict, Fail> {
    if t.dim() == 2 {
        Ok(classify_2d_ternary(&Criteria2dInput::from_tensor(t)?)?)
    } else {
        Ok(classify(t)?)
    }
}

fn verdict_code(v: &Verdict) -> u8 {
    if v.case.family == Family::NotCovered {
        EXIT_NOT_COVERED
    } else if v.is_psd {
        EXIT_PSD
    } else {
        EXIT_NOT_PSD
    }
}

fn print_verdict(v: &Verdict) {
    println!("psd: {}", if v.is_psd { "yes" } else { "no" });
    println!("pd: {}", v.is_pd.as_str());
    println!("case: {}", v.case);
    match &v.certificate {
        Certificate::Sos(s) => println!("certificate: sum of {} squares, {} remainder terms", s.squares.len(), s.remainder.len()),
        Certificate::NegativeWitness(w) => println!("witness: {:?} value {}", w.x, witness_value_string(&w.value)),
        Certificate::ZeroWitness(z) => {
            println!("zero: {}", z.x.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        }
        Certificate::CaseCitation(c) => println!("citation: {} ({})", c.case, c.note),
        Certificate::Uncertified(n) => println!("uncertified: {n}"),
    }
    if let Some(z) = &v.zero_witness {
        println!("zero: {}", z.x.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    }
}

fn cmd_classify(inp: &TensorInput) -> Res {
    let t = read_tensor(inp)?;
    let v = decide(&t)?;
    if inp.json {
        println!("{}", v.to_json());
    } else {
        print_verdict(&v);
    }
    Ok(verdict_code(&v))
}

fn cmd_certify(inp: &TensorInput) -> Res {
    let t = read_tensor(inp)?;
    let v = decide(&t)?;
    let cert_ok = v.certificate.verify(&t);
    let zero_ok = v.zero_witness.as_ref().map(|z| qpsd::certificates::is_zero_witness(&t, &z.x));
    let ok = cert_ok && zero_ok != Some(false);
    if inp.json {
        let mut j = v.to_json();
        j["verified"] = json!(ok);
        println!("{j}");
    } else {
        print_verdict(&v);
        let what = match v.certificate {
            Certificate::CaseCitation(_) => "citation accepted (no checkable identity)",
            _ if ok => "verified",
            _ => "FAILED",
        };
        println!("verification: {what}");
    }
    if !ok {
        return Ok(EXIT_VERIFY);
    }
    Ok(verdict_code(&v))
}

fn parse_point(s: &str, dim: usize) -> Result<Vec<i64>, Fail> {
    let x: Vec<i64> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<i64>().map_err(|e| Fail::Input(format!("bad coordinate {p:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    if x.len() != dim {
        return Err(Fail::Input(format!("point has {} coordinates, tensor has dimension {dim}", x.len())));
    }
    Ok(x)
}

fn cmd_witness(inp: &TensorInput, at: Option<&str>, bound: i64) -> Res {
    let t = read_tensor(inp)?;
    let found = match at {
        Some(s) => {
            let x = parse_point(s, t.dim())?;
            let v = qpsd::certificates::verify_negative_witness(&t, &x)?;
            Some((x, v))
        }
        None => find_negative_witness(&t, bound).map(|w| (w.x, w.value)),
    };
    match found {
        Some((x, v)) => {
            let neg = v < qpsd::form::q(0);
            if inp.json {
                println!("{}", json!({"x": x, "value": witness_value_string(&v), "negative": neg}));
            } else {
                println!("x: {}", x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
                println!("value: {}", witness_value_string(&v));
            }
            Ok(if neg { EXIT_NOT_PSD } else { EXIT_PSD })
        }
        None => {
            if inp.json {
                println!("{}", json!({"x": null, "bound": bound}));
            } else {
                println!("no negative integer point with max-abs <= {bound}");
            }
            Ok(EXIT_PSD)
        }
    }
}

fn cmd_roots(coeffs: &[String], file: Option<&PathBuf>, as_json: bool) -> Res {
    let text = match file {
        Some(p) => read_file(p)?,
        None => coeffs.join(" "),
    };
    let c: Vec<i64> = text
        .split(|c: char| c == ',' || c.is_whitespace() || c == '[' || c == ']')
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<i64>().map_err(|e| Fail::Input(format!("bad coefficient {p:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    let p = IntPoly::from_i64(&c)?;
    let r = count_distinct_real_roots_detail(&p)?;
    if as_json {
        println!("{}", json!({"degree": p.degree(), "count": r.count, "fallback": r.fallback}));
    } else {
        println!("{}", r.count);
        println!("fallback: {}", if r.fallback { "sturm" } else { "no" });
    }
    Ok(0)
}

fn cmd_oracle(inp: &TensorInput, restarts: usize, iters: usize, seed: Option<u64>) -> Res {
    let t = read_tensor(inp)?;
    let seed = seed.unwrap_or_else(|| HarnessConfig::from_env().seed);
    let r = sphere_min_sym(&t, restarts, iters, seed);
    if inp.json {
        println!(
            "{}",
            json!({
                "approx_min": r.approx_min,
                "argmin": r.argmin,
                "status": format!("{:?}", r.status),
                "exact_witness": r.exact_witness.as_ref().map(|w| json!({"x": w.x, "value": witness_value_string(&w.value)})),
            })
        );
    } else {
        println!("min: {:.12}", r.approx_min);
        println!("argmin: {}", r.argmin.iter().map(|v| format!("{v:.9}")).collect::<Vec<_>>().join(" "));
        println!("status: {:?}", r.status);
        if let Some(w) = &r.exact_witness {
            println!("witness: {:?} value {}", w.x, witness_value_string(&w.value));
        }
    }
    Ok(if r.exact_witness.is_some() { EXIT_NOT_PSD } else { EXIT_PSD })
}

fn parse_shard(s: &str) -> Result<(usize, usize), Fail> {
    let (k, n) = match s.split_once('/') {
        Some(kn) => kn,
        None => return Ok((s.trim().parse().map_err(|_| Fail::Input(format!("bad shard index {s:?}")))?, shards_from_env().unwrap_or(1))),
    };
    let k = k.trim().parse().map_err(|_| Fail::Input(format!("bad shard index {k:?}")))?;
    let n = n.trim().parse().map_err(|_| Fail::Input(format!("bad shard count {n:?}")))?;
    Ok((k, n))
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    diag: &str,
    shard: &str,
    out: Option<&PathBuf>,
    seed: Option<u64>,
    restarts: Option<usize>,
    limit: Option<u64>,
    trust_sos: bool,
) -> Res {
    let d = FamilySpec::parse_diag(diag)?;
    let (k, n) = parse_shard(shard)?;
    let spec = FamilySpec::new(d, k, n)?;
    let mut cfg = HarnessConfig::from_env();
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(r) = restarts {
        cfg.restarts = r;
    }
    cfg.trust_sos = trust_sos;
    let summary = enumerate_family(&spec, &cfg, out.map(|p| p.as_path()), limit)?;
    print!("{}", summary.table());
    Ok(if summary.mismatches > 0 { EXIT_NOT_PSD } else { 0 })
}

fn cmd_formats() -> Res {
    for dim in [2, 3] {
        let names: Vec<String> = slots(dim).iter().map(|s| s[..].iter().map(|a| a.to_string()).collect()).collect();
        println!("dim {dim} entry order: {}", names.join(" "));
    }
    println!();
    println!("tensor input: inline entries, a text file with the same entries, a JSON array,");
    println!("  or a JSON object keyed by multi-index (\"1123\": -1); missing keys are 0.");
    println!("  entries may be integers or p/q rationals; classify requires entries in {{-1,0,1}}.");
    println!("polynomial input: integer coefficients, constant term first.");
    println!();
    println!("verdict JSON: {{is_psd: bool, is_pd: \"true\"|\"false\"|\"unknown\", case: str, subcase: str|null,");
    println!("  normalizer: {{perm: [int], signs: [int]}}, certificate: {{kind, ...}}, zero_witness?: {{kind, x: [str]}}}}");
    println!("certificate kinds: sos {{squares: [{{coeff, form}}], remainder: [{{coeff, monomial}}]}},");
    println!("  negative_witness {{x: [int], value: \"p/q\"}}, zero_witness {{x: [str]}},");
    println!("  case_citation {{case, note}}, none {{note}}");
    println!("record JSONL (enumerate): index, tensor, case, family, subcase, is_psd, is_pd, oracle,");
    println!("  oracle_min, oracle_witness, witness, sos_verified, pd_consistent, agreement, elapsed_us");
    println!();
    println!("exit codes: 0 PSD, 1 not PSD, 2 input error, 3 not covered, 4 i/o error, 5 certificate failed");
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let r = match &cli.cmd {
        Command::Classify(i) => cmd_classify(i),
        Command::Certify(i) => cmd_certify(i),
        Command::Witness { input, at, bound } => cmd_witness(input, at.as_deref(), *bound),
        Command::Roots { coeffs, file, json } => cmd_roots(coeffs, file.as_ref(), *json),
        Command::Oracle { input, restarts, iters, seed } => cmd_oracle(input, *restarts, *iters, *seed),
        Command::Enumerate { diag, shard, out, seed, restarts, limit, trust_sos } => {
            cmd_enumerate(diag, shard, out.as_ref(), *seed, *restarts, *limit, *trust_sos)
        }
        Command::Formats => cmd_formats(),
    };
    match r {
        Ok(code) => ExitCode::from(code),
        Err(Fail::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Fail::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_IO)
        }
    }
}
