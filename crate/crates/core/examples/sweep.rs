use qpsd::harness::{enumerate_family, FamilySpec, HarnessConfig};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let diag = FamilySpec::parse_diag(args.get(1).map(String::as_str).unwrap_or("111")).unwrap();
    let limit = args.get(2).and_then(|s| s.parse().ok());
    let mut cfg = HarnessConfig::from_env();
    cfg.restarts = 20;
    cfg.iters = 200;
    if std::env::var("QPSD_A3_TRAILING").is_ok() {
        cfg.options.a3_reading = qpsd::classifier::A3Reading::Trailing;
    }
    if std::env::var("QPSD_NO_A2_WEAK").is_ok() {
        cfg.options.t313_a2_weak = false;
    }
    let t = std::time::Instant::now();
    let s = enumerate_family(&FamilySpec::new(diag, 0, 1).unwrap(), &cfg, None, limit).unwrap();
    print!("{}", s.table());
    for r in s.mismatch_records.iter().take(40) {
        println!("{:?} {} psd={} oracle={:?} min={:?}", r.tensor, r.case, r.is_psd, r.oracle_witness, r.oracle_min);
    }
    eprintln!("{:?}", t.elapsed());
}
