//! Acceptance criteria 1-11, printed as one verdict line each.
//!
//! Run with `cargo test -p vircalc --test acceptance -- --nocapture` to see the report.

use vircalc::checks::{self, Criterion, Suite};

/// Criteria whose identity does not hold as stated. AC-09: with the displayed
/// linear coefficient `(α + β0(n+1))β` the Jack vectors are singular only at
/// β² = 2; the report's notes show they are singular for every case once the
/// sign of the β0 term is flipped.
const KNOWN_FAILING: &[u8] = &[9];

fn print(c: &Criterion) {
    println!("{}", c.summary_line());
    for check in &c.checks {
        let mark = if check.passed() { "ok" } else { "FAILED" };
        println!("    {mark:>6}  {} ({} cases)", check.name, check.cases);
        for f in &check.failures {
            println!("            {f}");
        }
    }
    for n in &c.notes {
        println!("    note    {n}");
    }
}

#[test]
fn acceptance_criteria() {
    let criteria = checks::all_criteria(Suite::Full);
    assert_eq!(criteria.len(), 11);
    for c in &criteria {
        print(c);
    }
    for c in &criteria {
        if KNOWN_FAILING.contains(&c.id) {
            assert!(!c.passed(), "AC-{:02} now passes; update KNOWN_FAILING", c.id);
        } else {
            assert!(c.passed(), "AC-{:02} failed", c.id);
        }
    }
}

#[test]
fn singular_vector_discrepancy_is_only_the_sign() {
    let c = checks::jack_singular_vectors(Suite::Full);
    let main = &c.checks[0];
    // The β² = 2 cases hold as displayed.
    assert_eq!(main.cases - main.failed, 8);
    assert!(c.notes[0].contains("24/24"));
    assert!(c.notes[1].contains("[\"β²/2\"]"));
}

#[test]
fn extra_invariants() {
    for check in checks::extra_invariants(Suite::Full) {
        assert!(check.passed(), "{}: {:?}", check.name, check.failures);
    }
}
