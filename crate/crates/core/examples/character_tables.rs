//! Exact character tables of small permutation groups.

use levikit::clifford::constructions::{cyclic, dihedral, gl2, quaternion, sl2, symmetric};
use levikit::clifford::character_table;

fn main() -> levikit::Result<()> {
    for g in [cyclic(6)?, symmetric(3)?, symmetric(4)?, dihedral(4)?, quaternion(), sl2(3)?, gl2(3)?] {
        let irr = character_table(&g)?;
        println!("{} (order {}, {} classes)", g.name().unwrap_or("G"), g.order(), g.class_count());
        for chi in &irr {
            let row: Vec<String> = chi.values().iter().map(|v| format!("{:>12}", v.to_string())).collect();
            println!("  {}", row.join(" "));
        }
    }
    Ok(())
}
