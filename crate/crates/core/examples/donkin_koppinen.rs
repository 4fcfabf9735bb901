// Weight sequences read off an ideal of X(T)^- × X(T)^+ with its chain of
// sub-ideals: at cutoff k, the diagonal weights outside the k-th member.

use supersym::poset::{dk_weight_sequence, PosetElement, PosetKind, WeightIdeal};
use supersym::{Profile, Weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pr = Profile::char0(1, 1)?;
    let generators = vec![
        PosetElement::pair("-2|0".parse()?, "1|1".parse()?),
        PosetElement::pair("0|-2".parse()?, "2|0".parse()?),
    ];
    let ideal = WeightIdeal::new(pr, PosetKind::Product, generators)?;
    for cutoff in 1..=3 {
        let seq = dk_weight_sequence(&ideal, cutoff)?;
        let shown: Vec<String> = seq.iter().map(|w| w.display_split(pr.m())).collect();
        println!("cutoff {cutoff}: {}", shown.join("  "));
    }

    // the principal ideal of a diagonal element
    let lambda: Weight = "1|0".parse()?;
    let ideal = WeightIdeal::principal(pr, PosetKind::Product, PosetElement::diagonal(&lambda))?;
    let seq = dk_weight_sequence(&ideal, 3)?;
    let shown: Vec<String> = seq.iter().map(|w| w.display_split(pr.m())).collect();
    println!("principal ideal of (-λ, λ), cutoff 3: {}", shown.join("  "));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
