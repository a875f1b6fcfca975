//! Factors a class p_{v_K} into the product of its generator classes.
//!
//! For every subset K there is a single rational constant C with
//! C * p_{v_K} = prod over i in K of p_{s_i}, checked here at every fixed
//! point. The constant factors over connected components: |K|! for a chain
//! or the F4/G2 diagrams, divided by the number of reduced words of the
//! component's Coxeter element (2 on a D fork, 3 on an E diagram).

use peterson::{LieType, Peterson, Result, RootSystem};

fn main() -> Result<()> {
    for (name, subset) in [
        ("F4", vec![1, 2, 3, 4]),
        ("E7", vec![1, 2, 3, 4, 5, 6, 7]),
        ("D5", vec![1, 2, 3, 4, 5]),
        ("B5", vec![1, 3, 4, 5]),
    ] {
        let rs = RootSystem::new(LieType::parse(name)?);
        let pet = Peterson::new(&rs)?;
        let certificate = pet.giambelli(&subset)?;
        println!("{name}, K = {subset:?}: C = {}", certificate.constant());
        for factor in certificate.components() {
            println!(
                "  component {:?} ({}): {}! / {} reduced words",
                factor.indices,
                factor.lie_type,
                factor.indices.len(),
                factor.reduced_words
            );
        }
    }
    Ok(())
}
