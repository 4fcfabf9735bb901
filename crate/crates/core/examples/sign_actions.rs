// The two sign-twisted S_r actions on monomials x_{IJ}, and the coset sum
// that recovers power characters from them.

use supersym::generators::c_generator;
use supersym::signs::{
    circ_action, exterior_indices, power_char_by_enumeration, star_action, Convention,
    MultiIndex, Permutation, Side, SignedMonomialWord,
};
use supersym::Profile;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pr = Profile::char0(1, 1)?;
    let i = MultiIndex::new(&pr, vec![1, 2, 2])?;
    let j = MultiIndex::new(&pr, vec![2, 1, 2])?;
    let sigma = Permutation::new(vec![2, 0, 1])?;

    let w = SignedMonomialWord::x(i.clone(), j.clone())?;
    let moved = star_action(&star_action(&w, &sigma, Side::Row)?, &sigma, Side::Col)?;
    println!("{w} ⋆σ on both sides -> {moved}, same element: {}", moved.same_element(&w));
    assert!(moved.same_element(&w));

    let w = SignedMonomialWord::new(i, j, 1, Convention::ParityShifted)?;
    let moved = circ_action(&circ_action(&w, &sigma, Side::Row)?, &sigma, Side::Col)?;
    println!("{w} ∘σ on both sides -> {moved}, same element: {}", moved.same_element(&w));
    assert!(moved.same_element(&w));

    let r = 3;
    println!("LI({r}) has {} indices", exterior_indices(&pr, r).len());
    let ext = power_char_by_enumeration(&pr, r, true, false)?;
    println!("coset sum for Λ^{r} E = {ext}");
    assert_eq!(ext, c_generator(&pr, r));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
