//! Every irreducible character of H^n extends to its stabilizer in
//! (H ⋊ A) ≀ S_n.

use levikit::clifford::constructions::{cyclic, symmetric, trivial};
use levikit::clifford::{verify_wreath_theorem, Perm, PermGroup};

fn main() -> levikit::Result<()> {
    let c3 = cyclic(3)?;
    let inversion = PermGroup::new(3, vec![Perm::from_cycles(3, &[&[1, 2]])?])?;
    let c2 = cyclic(2)?;
    let klein = PermGroup::new(4, vec![Perm::from_cycles(4, &[&[0, 1]])?, Perm::from_cycles(4, &[&[2, 3]])?])?;
    let swap = PermGroup::new(4, vec![Perm::from_cycles(4, &[&[0, 2], &[1, 3]])?])?;

    for (name, h, a, n) in [
        ("(C3 ⋊ C2) wr S2", &c3, &inversion, 2),
        ("S3 wr S2", &symmetric(3)?, &trivial(3), 2),
        ("C2 wr S3", &c2, &trivial(2), 3),
        ("(C2^2 ⋊ C2) wr S2", &klein, &swap, 2),
    ] {
        let r = verify_wreath_theorem(h, a, n)?;
        println!("{name}: |G| = {}, {} characters of H^n, {}", r.group_order, r.characters.len(), r.status);
    }
    Ok(())
}
