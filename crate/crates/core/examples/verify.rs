//! Run every reference check and print one line per check.

use resicode::reference::{run_checks, Expectations};

fn main() {
    let results = run_checks(None, &Expectations::default()).expect("no filter");
    for r in &results {
        println!("{r}");
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!("{passed} of {} passed", results.len());
}
