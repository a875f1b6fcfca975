//! Prints the full localization matrix for a small rank-three system.
//!
//! Rows are the fixed points w_K, columns the classes p_{v_K}, both listed
//! by subset size and then lexicographically, which makes the matrix lower
//! triangular with nonzero diagonal: each class vanishes at every fixed
//! point whose subset does not contain its own.

use peterson::format::{render_basis, OutputFormat};
use peterson::{LieType, Peterson, Result, RootSystem};

fn main() -> Result<()> {
    let rs = RootSystem::new(LieType::parse("C3")?);
    let pet = Peterson::new(&rs)?;
    let table = pet.basis_table();
    print!("{}", render_basis(&table, OutputFormat::Table));

    let corner = pet.localization(&[1, 2, 3], &[1, 2, 3])?;
    println!();
    println!("bottom-right entry p_v(w) at K = {{1,2,3}}: {corner}");
    Ok(())
}
