//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the verdicts are always printed; exits nonzero on failure.

use std::process::ExitCode;
use std::time::Instant;

use spectral_chi::verify::{criterion_verdicts, render_table, run_suite, Suite, VerifyConfig};

const TITLES: [&str; 11] = [
    "family spectra match closed forms",
    "G(k,theta,d) spectra",
    "G(k,theta,d) largest-eigenvalue cases",
    "chromatic lower bound on random and family graphs",
    "sharp graphs have only D^-1 A-equitable chi-colorings",
    "multiplicity floor and unique coloring",
    "1-sum calculus",
    "edge-disjoint union",
    "eigenfunction certificates",
    "upper bounds",
    "search ground truth at n = 5",
];

fn main() -> ExitCode {
    let start = Instant::now();
    let checks = match run_suite(Suite::All, &VerifyConfig::default()) {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL acceptance suite aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    print!("{}", render_table(&checks));
    println!();
    let verdicts = criterion_verdicts(&checks);
    let mut all = verdicts.len() == TITLES.len();
    for (id, ok) in &verdicts {
        let status = if *ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {id:>2}: {}", TITLES[*id as usize - 1]);
        all &= *ok;
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
