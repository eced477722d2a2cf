//! Runs every acceptance criterion and prints one PASS/FAIL line for each.

use faclr::acceptance::criteria;

fn main() {
    let mut failed = Vec::new();
    for c in criteria() {
        let outcome = c.run();
        println!("{outcome}");
        if !outcome.passed {
            failed.push(outcome.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
