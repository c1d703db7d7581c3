//! Acceptance criteria. Prints one PASS/FAIL line per criterion followed by
//! its checks (measured value, tolerance, reference), then exits non-zero if
//! any criterion failed.

use std::process::ExitCode;

use nuspectra::batch::GridSpec;
use nuspectra::validate::{self, Check};
use nuspectra::Execution;
use nuspectra_validation::report;

const SEED: u64 = 0x5eed;

type Criterion = (u32, &'static str, fn() -> Vec<Check>);

fn criteria() -> Vec<Criterion> {
    vec![
        (1, "s-wave levels vs exact-equation oracle within 1e-4", || {
            validate::exact_sector(&GridSpec::default())
        }),
        (
            2,
            "l = 1 levels vs approximated-equation oracle within 1e-4; exact-centrifugal shift within the envelope",
            || validate::approximated_sector(&GridSpec::default()),
        ),
        (3, "relative error of the centrifugal replacement <= 2% on (0, 0.6]", || {
            validate::pekeris_audit().0
        }),
        (4, "Jacobi ODE, orthonormality, sum identity and 3F2 symmetry", || {
            validate::jacobi_suite(SEED, Execution::default())
        }),
        (5, "unit norm within 1e-6, normalization sum, Gram-Schmidt identity within 1e-8", || {
            validate::normalization_and_gram(&GridSpec::default())
        }),
        (6, "angular oracle vs l(l+D-2) within 1e-6, Legendre match within 1e-7", || {
            validate::angular_reduction(Execution::default())
        }),
        (7, "special cases agree with the general path within 1e-9", || {
            validate::special_case_equivalence(SEED)
        }),
        (8, "oscillator-limit error falls monotonically as lambda -> 0", || {
            validate::limiting_case(Execution::default())
        }),
        (9, "radial eigen-condition within 1e-8, angular constraint within 1e-9", || {
            let mut c = validate::radial_identities(SEED);
            c.extend(validate::angular_identities(SEED));
            c
        }),
    ]
}

fn main() -> ExitCode {
    let mut failed = Vec::new();
    let all = criteria();
    for (n, title, run) in &all {
        if !report(*n, title, &run()).is_empty() {
            failed.push(*n);
        }
    }
    println!(
        "acceptance: {}/{} criteria passed{}",
        all.len() - failed.len(),
        all.len(),
        if failed.is_empty() {
            String::new()
        } else {
            format!("; failed: {failed:?}")
        }
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
