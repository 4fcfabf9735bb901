// The generators c_r, d_r and the Berezinian, with their leading weights.

use supersym::algebra::is_supersymmetric_laurent;
use supersym::characters::unique_leading_weight;
use supersym::generators::{berezinian_char, c_generator, companion_image, d_generator};
use supersym::{Profile, Weight};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pr = Profile::char0(2, 1)?;
    println!("profile {pr}, Ber = {}", berezinian_char(&pr));
    for r in 0..=4 {
        let c = c_generator(&pr, r);
        let d = d_generator(&pr, r);
        let lead = |w: Option<Weight>| w.map(|w| w.display_split(pr.m())).unwrap_or_default();
        println!("c_{r} = {c}    leading {}", lead(unique_leading_weight(&c)));
        println!("d_{r} = {d}    leading {}", lead(unique_leading_weight(&d)));
        assert!(is_supersymmetric_laurent(&c) && is_supersymmetric_laurent(&d));
    }

    // a product of generators whose unique leading weight is the chosen λ
    let lambda = Weight::new(vec![2, 1, 0]);
    let f = companion_image(&pr, &lambda)?;
    println!("companion of {} has {} terms", lambda.display_split(pr.m()), f.num_terms());
    assert_eq!(unique_leading_weight(&f), Some(lambda));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
