//! Scans every Monk coefficient of several systems for non-integral values.
//!
//! Types A and C stay integral through rank five, as do G2 and D4. The first
//! non-integral coefficients appear in B3 (and persist up the B chain and
//! into F4, always multiplying by a generator inside the base subset), and
//! in D5, where the fork tips produce 5/2 even for generators outside the
//! base subset.

use peterson::{LieType, Peterson, Result, RootSystem};

fn main() -> Result<()> {
    for name in ["A5", "B3", "B5", "C5", "D4", "D5", "F4", "G2"] {
        let rs = RootSystem::new(LieType::parse(name)?);
        let pet = Peterson::new(&rs)?;
        let hits = pet.scan_nonintegral()?;
        println!("{name}: {} non-integral coefficient(s)", hits.len());
        for hit in &hits {
            let position = if hit.base.indices().contains(&hit.i) {
                "inside"
            } else {
                "outside"
            };
            println!(
                "  i={} ({position} K) K={:?} J={:?} coeff={}",
                hit.i,
                hit.base.indices(),
                hit.superset.indices(),
                hit.coeff
            );
        }
    }
    Ok(())
}
