// Supercharacters of E, its dual, and their exterior and symmetric powers.

use supersym::characters::{gl11_simple_char, leading_summands};
use supersym::generators::{c_generator, d_generator};
use supersym::{Profile, SuperBasis};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pr = Profile::char0(1, 2)?;
    let e = SuperBasis::standard(pr);
    println!("dim E = {}, char E = {}", e.dim(), e.supercharacter());
    println!("char E* = {}", e.dual().supercharacter());
    for r in 0..=3 {
        let ext = e.exterior_power_char(r);
        let sym = e.dual().symmetric_power_char(r);
        println!("Λ^{r} E  = {ext}");
        println!("S^{r} E* = {sym}");
        assert_eq!(ext, c_generator(&pr, r));
        assert_eq!(sym, d_generator(&pr, r));
    }
    for (w, c) in leading_summands(&e.exterior_power_char(3))? {
        println!("leading summand of Λ^3 E: {c} at {}", w.display_split(pr.m()));
    }

    // GL(1|1) simples: one-dimensional exactly when p divides the degree
    for p in [None, Some(3)] {
        let q = Profile::new(1, 1, p)?;
        let chars: Vec<String> = (1..=3).map(|i| gl11_simple_char(&q, i, 3).map(|f| f.to_string())).collect::<Result<_, _>>()?;
        println!("p = {p:?}: degree-3 simples {chars:?}");
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
