//! Exhaustive cross-checking of the classifier against the numerical oracle
//! over whole ternary families, with sharded, resumable, gzip JSONL output.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use flate2::read::MultiGzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificates::{is_zero_witness, verify_sos, Certificate};
use crate::classifier::{classify_tern, witness_verifies, Options};
use crate::error::{Error, Result};
use crate::oracle::{sphere_min, OracleStatus};
use crate::tern::{tensor_from_index, to_sym, Tern3};
use crate::verdict::{Family, Tri};

pub const PD_MARGIN: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Agreement {
    Agree,
    Mismatch,
    Uncertified,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub index: u64,
    pub tensor: Vec<i8>,
    pub case: String,
    pub family: String,
    pub subcase: Option<String>,
    pub is_psd: bool,
    pub is_pd: String,
    pub oracle: Option<OracleStatus>,
    pub oracle_min: Option<f64>,
    pub oracle_witness: Option<Vec<i64>>,
    pub witness: Option<Vec<i64>>,
    pub sos_verified: Option<bool>,
    /// PSD-not-PD carries a valid zero witness; PD has a clearly positive
    /// sphere minimum when the oracle ran.
    pub pd_consistent: bool,
    pub agreement: Agreement,
    pub elapsed_us: u64,
}

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub restarts: usize,
    pub iters: usize,
    pub seed: u64,
    /// Skip the oracle when the verdict carries an exactly verified SOS.
    pub trust_sos: bool,
    pub options: Options,
    pub chunk: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig { restarts: 20, iters: 200, seed: 20250101, trust_sos: false, options: Options::default(), chunk: 8192 }
    }
}

impl HarnessConfig {
    /// Defaults overridden by `QPSD_SEED`.
    pub fn from_env() -> Self {
        let mut c = Self::default();
        if let Some(s) = std::env::var("QPSD_SEED").ok().and_then(|v| v.parse().ok()) {
            c.seed = s;
        }
        c
    }
}

pub fn shards_from_env() -> Option<usize> {
    std::env::var("QPSD_SHARDS").ok().and_then(|v| v.parse().ok()).filter(|&n| n >= 1)
}

pub fn cross_check(t: &Tern3, index: u64, cfg: &HarnessConfig) -> CheckRecord {
    let start = Instant::now();
    let v = classify_tern(t, &cfg.options);
    let sos_verified = match &v.certificate {
        Certificate::Sos(s) => Some(verify_sos(s, &to_sym(t))),
        _ => None,
    };
    let mut oracle = None;
    let mut oracle_min = None;
    let mut oracle_witness = None;
    let mut witness = None;
    let agreement = if v.case.family == Family::NotCovered {
        Agreement::Uncertified
    } else if v.is_psd {
        if cfg.trust_sos && sos_verified == Some(true) {
            Agreement::Agree
        } else {
            let r = sphere_min(t, cfg.restarts, cfg.iters, cfg.seed ^ index);
            oracle = Some(r.status);
            oracle_min = Some(r.approx_min);
            oracle_witness = r.exact_witness.map(|w| w.x);
            if r.status == OracleStatus::NegativeCertified {
                Agreement::Mismatch
            } else {
                Agreement::Agree
            }
        }
    } else {
        if let Certificate::NegativeWitness(w) = &v.certificate {
            witness = Some(w.x.clone());
        }
        if witness_verifies(t, &v) {
            Agreement::Agree
        } else {
            Agreement::Mismatch
        }
    };
    let pd_consistent = match v.is_pd {
        Tri::False if v.is_psd => v.zero_witness.as_ref().is_some_and(|z| is_zero_witness(&to_sym(t), &z.x)),
        Tri::True => oracle_min.map_or(true, |m| m > PD_MARGIN),
        _ => true,
    };
    CheckRecord {
        index,
        tensor: t.to_vec(),
        case: v.case.to_string(),
        family: v.case.family.as_str().to_string(),
        subcase: v.case.subcase.map(str::to_string),
        is_psd: v.is_psd,
        is_pd: v.is_pd.as_str().to_string(),
        oracle,
        oracle_min,
        oracle_witness,
        witness,
        sos_verified,
        pd_consistent,
        agreement,
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub diag: [i8; 3],
    pub shard: usize,
    pub shards: usize,
}

pub const FAMILY_SIZE: u64 = 531_441;

impl FamilySpec {
    pub fn new(diag: [i8; 3], shard: usize, shards: usize) -> Result<Self> {
        if shards == 0 || shard >= shards {
            return Err(Error::Input(format!("bad shard {shard}/{shards}")));
        }
        if diag.iter().any(|d| !(-1..=1).contains(d)) {
            return Err(Error::Input("diagonal entries must be ternary".into()));
        }
        Ok(FamilySpec { diag, shard, shards })
    }

    /// Parses "111", "011", ... (digits) into a diagonal pattern.
    pub fn parse_diag(s: &str) -> Result<[i8; 3]> {
        let v: Vec<i8> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as i8).ok_or_else(|| Error::Input(format!("bad diag '{s}'"))))
            .collect::<Result<_>>()?;
        if v.len() != 3 || v.iter().any(|&d| d > 1) {
            return Err(Error::Input(format!("bad diag '{s}'")));
        }
        Ok([v[0], v[1], v[2]])
    }

    pub fn range(&self) -> (u64, u64) {
        let n = self.shards as u64;
        let k = self.shard as u64;
        (FAMILY_SIZE * k / n, FAMILY_SIZE * (k + 1) / n)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SummaryRow {
    pub count: u64,
    pub mismatches: u64,
    pub uncertified: u64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Summary {
    /// Keyed by (family, subcase, psd, pd).
    pub rows: BTreeMap<(String, String, bool, String), SummaryRow>,
    pub total: u64,
    pub mismatches: u64,
    pub uncertified: u64,
    pub not_covered: u64,
    pub sos_failures: u64,
    pub pd_inconsistent: u64,
    pub mismatch_records: Vec<CheckRecord>,
}

impl Summary {
    pub fn add(&mut self, r: &CheckRecord) {
        let key = (r.family.clone(), r.subcase.clone().unwrap_or_default(), r.is_psd, r.is_pd.clone());
        let row = self.rows.entry(key).or_default();
        row.count += 1;
        self.total += 1;
        match r.agreement {
            Agreement::Mismatch => {
                row.mismatches += 1;
                self.mismatches += 1;
                self.mismatch_records.push(r.clone());
            }
            Agreement::Uncertified => {
                row.uncertified += 1;
                self.uncertified += 1;
            }
            Agreement::Agree => {}
        }
        if r.family == Family::NotCovered.as_str() {
            self.not_covered += 1;
        }
        if !r.pd_consistent {
            self.pd_inconsistent += 1;
        }
        if r.sos_verified == Some(false) {
            self.sos_failures += 1;
        }
    }

    pub fn psd_count(&self) -> u64 {
        self.rows.iter().filter(|(k, _)| k.2).map(|(_, v)| v.count).sum()
    }

    pub fn pd_count(&self) -> u64 {
        self.rows.iter().filter(|(k, _)| k.3 == "true").map(|(_, v)| v.count).sum()
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::Io(e.to_string()))?;
        w.write_record(["case", "subcase", "psd", "pd", "count", "mismatches"])
            .map_err(|e| Error::Io(e.to_string()))?;
        for ((f, s, psd, pd), row) in &self.rows {
            w.write_record([f.as_str(), s.as_str(), &psd.to_string(), pd.as_str(), &row.count.to_string(), &row.mismatches.to_string()])
                .map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn table(&self) -> String {
        let mut s = format!("{:<12} {:<10} {:<6} {:<8} {:>8} {:>10}\n", "case", "subcase", "psd", "pd", "count", "mismatches");
        for ((f, sub, psd, pd), row) in &self.rows {
            s += &format!("{:<12} {:<10} {:<6} {:<8} {:>8} {:>10}\n", f, sub, psd, pd, row.count, row.mismatches);
        }
        s += &format!(
            "total {} psd {} pd {} mismatches {} uncertified {} not-covered {} sos-failures {} pd-inconsistent {}\n",
            self.total,
            self.psd_count(),
            self.pd_count(),
            self.mismatches,
            self.uncertified,
            self.not_covered,
            self.sos_failures,
            self.pd_inconsistent
        );
        s
    }
}

#[derive(Serialize, Deserialize)]
struct Progress {
    next_index: u64,
    bytes: u64,
}

fn progress_path(dir: &Path, shard: usize) -> PathBuf {
    dir.join(format!("progress-shard-{shard}.json"))
}

pub fn records_path(dir: &Path, shard: usize) -> PathBuf {
    dir.join(format!("records-shard-{shard}.jsonl.gz"))
}

pub fn summary_path(dir: &Path, spec: &FamilySpec) -> PathBuf {
    if spec.shards == 1 {
        dir.join("summary.csv")
    } else {
        dir.join(format!("summary-shard-{}.csv", spec.shard))
    }
}

pub fn read_records(path: &Path) -> Result<Vec<CheckRecord>> {
    let f = File::open(path)?;
    let r = BufReader::new(MultiGzDecoder::new(f));
    let mut out = vec![];
    for line in r.lines() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| Error::Io(e.to_string()))?);
    }
    Ok(out)
}

/// Runs every tensor of the shard in enumeration order. With `out`, records
/// are appended chunk by chunk as gzip members and progress is persisted so
/// an interrupted run resumes where it stopped. `limit` caps the number of
/// new records (for staged runs).
pub fn enumerate_family(spec: &FamilySpec, cfg: &HarnessConfig, out: Option<&Path>, limit: Option<u64>) -> Result<Summary> {
    let (lo, hi) = spec.range();
    let mut summary = Summary::default();
    let mut next = lo;
    let mut bytes = 0u64;
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        let pp = progress_path(dir, spec.shard);
        let rp = records_path(dir, spec.shard);
        if pp.exists() && rp.exists() {
            let p: Progress = serde_json::from_str(&std::fs::read_to_string(&pp)?).map_err(|e| Error::Io(e.to_string()))?;
            let f = OpenOptions::new().write(true).open(&rp)?;
            f.set_len(p.bytes)?;
            drop(f);
            for r in read_records(&rp)? {
                summary.add(&r);
            }
            next = p.next_index;
            bytes = p.bytes;
        } else if rp.exists() {
            std::fs::remove_file(&rp)?;
        }
    }
    let stop = match limit {
        Some(l) => hi.min(next + l),
        None => hi,
    };
    while next < stop {
        let end = stop.min(next + cfg.chunk as u64);
        let records: Vec<CheckRecord> = (next..end)
            .into_par_iter()
            .map(|k| cross_check(&tensor_from_index(spec.diag, k), k, cfg))
            .collect();
        for r in &records {
            summary.add(r);
        }
        if let Some(dir) = out {
            let rp = records_path(dir, spec.shard);
            let mut f = OpenOptions::new().create(true).append(true).open(&rp)?;
            f.seek(SeekFrom::End(0))?;
            let mut enc = GzEncoder::new(Vec::new(), Compression::fast());
            for r in &records {
                serde_json::to_writer(&mut enc, r).map_err(|e| Error::Io(e.to_string()))?;
                enc.write_all(b"\n")?;
            }
            let buf = enc.finish()?;
            f.write_all(&buf)?;
            f.sync_data()?;
            bytes += buf.len() as u64;
            let p = Progress { next_index: end, bytes };
            std::fs::write(progress_path(dir, spec.shard), serde_json::to_string(&p).unwrap())?;
        }
        next = end;
    }
    if let Some(dir) = out {
        summary.write_csv(&summary_path(dir, spec))?;
        if !summary.mismatch_records.is_empty() {
            let mut f = File::create(dir.join(format!("mismatches-shard-{}.jsonl", spec.shard)))?;
            for r in &summary.mismatch_records {
                writeln!(f, "{}", serde_json::to_string(r).unwrap())?;
            }
        }
    }
    Ok(summary)
}
