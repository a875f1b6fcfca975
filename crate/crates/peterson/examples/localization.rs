//! Evaluates one Schubert class at one Weyl group element, both symbolically
//! (a polynomial in the simple roots) and specialized to the single variable
//! t used on the Peterson variety.
//!
//! The symbolic value comes from summing, over every embedding of a reduced
//! word of v into the chosen reduced word of w, the product of the roots
//! attached to the chosen positions. Sending every simple root to t turns
//! each product into (a height) times t^length.

use peterson::billey::specialize;
use peterson::{LieType, Result, RootSystem};

fn main() -> Result<()> {
    let rs = RootSystem::new(LieType::parse("B3")?);
    let word = [3, 2, 3, 1, 2, 3, 1, 2, 1];
    println!("reduced word for the longest element: {word:?}");

    let heights = rs.heights_list(&word)?;
    println!("heights along the word: {:?}", heights.heights());

    let v = rs.element_of(&[2, 3])?;
    let poly = rs.billey_polynomial(&v, &word)?;
    println!("sigma_v(w) for v = s2 s3, symbolically: {poly}");
    println!("specialized: {}", specialize(&poly)?);

    let direct = rs.billey_specialized(&v, &word)?;
    println!("specialized directly: {direct}");

    let off_interval = rs.billey_specialized(&rs.element_of(&[1, 2, 1])?, &[1, 2])?;
    println!("a class vanishes off its Bruhat interval: {off_interval}");
    Ok(())
}
