//! Walks a reduced word for a longest element and prints the height of the
//! positive root attached to each position.
//!
//! Those heights are the only data the Peterson localizations see: the value
//! of a generator class p_{s_i} at the fixed point is the sum of the heights
//! at the positions carrying letter i, and longer classes sum products of
//! heights over embeddings.

use peterson::words::{reference_word, template_word};
use peterson::{LieType, Result, RootSystem};

fn main() -> Result<()> {
    for name in ["G2", "B4", "E6"] {
        let lie_type = LieType::parse(name)?;
        let rs = RootSystem::new(lie_type);
        let word = template_word(lie_type);
        let list = rs.heights_list(&word)?;
        println!("{name} word    {:?}", list.word());
        println!("{name} heights {:?}", list.heights());
        let total: i64 = list.heights().iter().sum();
        println!("{name} height sum over all positive roots: {total}");
        println!();
    }

    // Reference words also exist for proper subsets: the per-component
    // template is translated through the component's index map.
    let rs = RootSystem::new(LieType::parse("E6")?);
    let subset = rs.classify_subset(&[1, 2, 3, 4, 5])?;
    let word = reference_word(&rs, &subset)?;
    println!("E6 subset {{1..5}} reference word: {word:?}");
    Ok(())
}
