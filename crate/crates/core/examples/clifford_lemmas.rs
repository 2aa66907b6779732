//! Extension versus multiplicity-free restriction, checked on normal
//! subgroups of small groups.

use levikit::clifford::constructions::{gl2, quaternion, sl2, symmetric};
use levikit::clifford::{character_table, verify_abelian_lemma, verify_lemma_equivalence, Perm, SubgroupEmbedding};

fn main() -> levikit::Result<()> {
    let s3 = symmetric(3)?;
    let c3 = s3.subgroup(vec![Perm::from_cycles(3, &[&[0, 1, 2]])?])?;
    let q8 = quaternion();
    let z = q8.subgroup(vec![q8.elements().iter().find(|g| g.order() == 2).expect("Q8 has a central involution").clone()])?;

    for (name, e) in [
        ("C3 in S3", SubgroupEmbedding::inclusion(&c3, &s3)?),
        ("Z(Q8) in Q8", SubgroupEmbedding::inclusion(&z, &q8)?),
        ("SL2(3) in GL2(3)", SubgroupEmbedding::inclusion(&sl2(3)?, &gl2(3)?)?),
    ] {
        println!("{name}");
        for (k, theta) in character_table(e.sub())?.iter().enumerate() {
            let r = verify_lemma_equivalence(&e, theta)?;
            println!("  theta_{k}: |S(theta)| = {:2}, multiplicity-free witness {:5}, extends {:5}",
                r.stabilizer_order, r.side_i, r.side_ii);
        }
    }

    let e = SubgroupEmbedding::inclusion(&sl2(3)?, &gl2(3)?)?;
    for (k, chi) in character_table(e.parent())?.iter().enumerate() {
        let r = verify_abelian_lemma(&e, chi)?;
        println!("GL2(3) chi_{k}: irreducible restriction {}, fixed by {:?}", r.restriction_irreducible, r.fixing_characters);
    }
    Ok(())
}
