// Graded pieces of the supersymmetric algebra, and writing elements in
// terms of a generating set.

use supersym::algebra::{
    asp_generators, c_generator_set, graded_dimension_as, subalgebra_membership,
    supersymmetric_basis,
};
use supersym::characters::gl11_simple_char;
use supersym::{LaurentPolynomial, Profile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [None, Some(2)] {
        let pr = Profile::new(1, 1, p)?;
        let dims: Vec<usize> = (0..=6).map(|d| graded_dimension_as(&pr, d)).collect();
        println!("p = {p:?}: dim A_s in degrees 0..=6 = {dims:?}");
    }
    let pr = Profile::char0(1, 1)?;
    for b in supersymmetric_basis(&pr, 3) {
        println!("  basis element in degree 3: {b}");
    }

    // a GL(1|1) simple character written in the c_r
    let f = gl11_simple_char(&pr, 2, 4)?;
    let report = subalgebra_membership(&f, &c_generator_set(&pr, 4), 4)?;
    println!("{f} is a member: {}", report.member);
    for t in &report.combination {
        println!("  {} · {}", t.coefficient, t.factors.join("·"));
    }

    // x1^2 y1^2 is 2-balanced, hence a polynomial in the A_s(2) generators
    let f2 = Profile::new(1, 1, Some(2))?;
    let g = LaurentPolynomial::unit_monomial(f2, "2|2".parse()?)?;
    let report = subalgebra_membership(&g, &asp_generators(&f2, 2)?, 4)?;
    println!("{g} over F_2 is a member: {} via {:?}", report.member, report.combination[0].factors);
    assert!(report.member);

    let xy = LaurentPolynomial::unit_monomial(pr, "1|1".parse()?)?;
    assert!(!subalgebra_membership(&xy, &c_generator_set(&pr, 2), 2)?.member);
    println!("{xy} over Q is not supersymmetric, so not a member");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
