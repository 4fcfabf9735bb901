// Dominance order on weights: comparisons, covers and intervals.

use supersym::poset::{
    interval_bound, interval_nonneg_dominant, lambda_prime, leq, predecessors, Cone,
};
use supersym::{Profile, Weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pr = Profile::char0(2, 1)?;
    let lambda: Weight = "2,1|1".parse()?;
    let show = |w: &Weight| w.display_split(pr.m());

    let prime = lambda_prime(&pr, &lambda);
    println!("λ = {}, λ' = {}, λ' ≤ λ: {}", show(&lambda), show(&prime), leq(&prime, &lambda)?);

    for cone in [Cone::All, Cone::Dominant, Cone::NonnegDominant] {
        let preds: Vec<String> = predecessors(&pr, &lambda, cone)?.iter().map(show).collect();
        println!("covers below λ in {}: {preds:?}", cone.name());
    }

    let below = interval_nonneg_dominant(&pr, &lambda)?;
    println!(
        "{} nonnegative dominant weights below λ (bound {})",
        below.len(),
        interval_bound(&pr, &lambda)
    );
    for w in &below {
        println!("  {}", show(w));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
