//! A short tour of the underlying Weyl group machinery: elements, reduced
//! words, Bruhat order, and parabolic longest elements.

use peterson::{LieType, Result, RootSystem};

fn main() -> Result<()> {
    let rs = RootSystem::new(LieType::parse("B3")?);
    println!("B3 has {} positive roots", rs.positive_roots().len());

    let w = rs.element_of(&[1, 2, 1, 3])?;
    println!("length of s1 s2 s1 s3: {}", rs.length(&w));
    println!("canonical reduced word: {:?}", rs.canonical_word(&w));
    println!("all reduced words: {:?}", rs.all_reduced_words(&w)?);

    let v = rs.element_of(&[2, 3])?;
    println!(
        "s2 s3 <= s1 s2 s1 s3 in Bruhat order: {}",
        rs.bruhat_leq(&v, &w)
    );

    let parabolic = rs.longest_element(&[2, 3])?;
    println!(
        "longest element of the {{2,3}} parabolic has length {} and word {:?}",
        rs.length(&parabolic),
        rs.canonical_word(&parabolic)
    );

    let delta = rs.longest_element(&[1, 2, 3])?;
    println!(
        "the longest element is an involution: {}",
        delta.compose(&delta).is_identity()
    );
    Ok(())
}
