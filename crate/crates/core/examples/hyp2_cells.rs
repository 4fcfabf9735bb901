// Probing whether A_s over F_p is generated by A_s(p) and the c_r, one
// (profile, degree) cell at a time.

use supersym::algebra::{hypothesis2_cell, DEFAULT_MAX_PRODUCTS};
use supersym::Profile;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2, 3] {
        let pr = Profile::new(1, 1, Some(p))?;
        for degree in 0..=6 {
            let report = hypothesis2_cell(&pr, degree, DEFAULT_MAX_PRODUCTS)?;
            println!("{}", serde_json::to_string(&report)?);
        }
    }
    // a product limit that is too small gives an inconclusive cell, not an error
    let pr = Profile::new(1, 1, Some(2))?;
    let report = hypothesis2_cell(&pr, 6, 3)?;
    println!("with a tiny limit: {:?}", report.status);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
