//! Per-spec realization timing sweep: `realize_timing <n> [pol|exp] [skip]`.

use std::io::Write;
use szego_core::*;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let mode = if args.get(2).map(|s| s == "exp").unwrap_or(false) {
        Mode::Exponential
    } else {
        Mode::Polynomial
    };
    let cfg = SearchConfig::default();
    let skip: usize = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(0);
    let specs: Vec<_> = enumerate_cases(n).unwrap().into_iter().skip(skip).collect();
    println!("n={} {:?}: {} specs", n, mode, specs.len());
    for spec in specs {
        let t = std::time::Instant::now();
        let r = realize_case(&spec, mode, &cfg);
        println!(
            "case {} q={} q1={} qc={} k={} k1={} kc={} m={} r={} s={} d={} flag={} -> {} in {:?}",
            spec.case_id, spec.q, spec.q1, spec.q_c, spec.k, spec.k1, spec.k_c,
            spec.m, spec.r, spec.s, spec.delta, spec.construction_unsupported,
            match &r {
                Ok(c) => format!("ok r{} c{} nw{}", c.trace.rounds, c.trace.candidates, c.trace.newton_iterations),
                Err(e) => format!("ERR {}", e),
            },
            t.elapsed()
        );
        std::io::stdout().flush().unwrap();
    }
}
