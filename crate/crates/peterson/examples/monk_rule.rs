//! Expands a generator class times a basis class back into the basis.
//!
//! The expansion has a diagonal part, the value of the generator at the base
//! subset's fixed point, plus one term for every superset with one more
//! node. Coefficients are exact nonnegative rationals; the D5 fork produces
//! the famous half-integral 5/2.

use peterson::{LieType, Peterson, Result, RootSystem};

fn main() -> Result<()> {
    let rs = RootSystem::new(LieType::parse("D5")?);
    let pet = Peterson::new(&rs)?;

    let expansion = pet.monk(5, &[1, 2, 3, 4])?;
    println!(
        "p_s5 * p_v_K for K = {{1,2,3,4}} (diagonal {}):",
        expansion.diagonal()
    );
    for term in expansion.terms() {
        println!(
            "  + {} * p_v_J,  J = {:?}",
            term.coeff,
            term.subset.indices()
        );
    }

    println!();
    let integral = pet.monk(1, &[2, 3])?;
    println!(
        "p_s1 * p_v_K for K = {{2,3}} (diagonal {}):",
        integral.diagonal()
    );
    for term in integral.terms() {
        println!(
            "  + {} * p_v_J,  J = {:?}",
            term.coeff,
            term.subset.indices()
        );
    }
    println!("every expansion is verified at all 32 fixed points before it is returned");
    Ok(())
}
