// Exact Laurent arithmetic over Q and F_p, plus the JSON document format.

use supersym::json::{parse_polynomial, to_json_string};
use supersym::{LaurentPolynomial, Profile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Profile::char0(2, 1)?;
    let x1 = LaurentPolynomial::x(q, 1)?;
    let x2 = LaurentPolynomial::x(q, 2)?;
    let y1 = LaurentPolynomial::y(q, 1)?;

    let f = &(&x1 + &x2) - &y1;
    println!("f         = {f}");
    println!("f^2       = {}", f.pow(2));
    let y_inv = y1.monomial_pow(-1)?;
    println!("f / y1    = {}", &f * &y_inv);
    assert_eq!(&y1 * &y_inv, LaurentPolynomial::one(q));

    // (x1 + x2)^3 collapses to x1^3 + x2^3 once reduced mod 3
    let g = (&x1 + &x2).pow(3);
    let g3 = g.reduce_mod(3)?;
    println!("(x1+x2)^3 = {g}");
    println!("  mod 3   = {g3}");
    assert_eq!(g3.num_terms(), 2);

    let doc = to_json_string(&f);
    println!("json      = {doc}");
    assert_eq!(parse_polynomial(&doc)?, f);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
