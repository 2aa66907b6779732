//! Constructive checks of the extension/multiplicity-freeness equivalence
//! and of its abelian-quotient refinement, on ordinary characters.

use serde::Serialize;

use super::character::{
    character_table, extension_exists, induce, restrict, restrict_values, stabilizer_of_character, Character,
    SubgroupEmbedding,
};
use super::perm::Perm;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub stabilizer_order: usize,
    pub orbit_size: usize,
    /// Irreducibles of G whose restriction is multiplicity-free and contains θ.
    pub multiplicity_free_witnesses: Vec<usize>,
    /// Index in Irr(S_G(θ)) of an extension of θ.
    pub extension: Option<usize>,
    pub side_i: bool,
    pub side_ii: bool,
    pub induced_irreducible: Option<bool>,
    pub mackey_orbit_sum: Option<bool>,
    pub constituents_extend: Option<bool>,
    pub holds: bool,
}

fn ensure_irreducible(theta: &Character) -> Result<usize> {
    theta.irreducible_index()?.ok_or_else(|| Error::Invalid("character is not irreducible".into()))
}

/// Orbit of `θ` under conjugation by the parent of `e`.
pub fn character_orbit(theta: &Character, e: &SubgroupEmbedding) -> Result<Vec<Character>> {
    let mut orbit = vec![theta.clone()];
    let mut k = 0;
    while k < orbit.len() {
        for g in e.parent().generators() {
            let c = orbit[k].conjugate(e, g)?;
            if !orbit.contains(&c) {
                orbit.push(c);
            }
        }
        k += 1;
    }
    Ok(orbit)
}

pub fn verify_lemma_equivalence(e: &SubgroupEmbedding, theta: &Character) -> Result<EquivalenceReport> {
    if !e.is_normal() {
        return Err(Error::Invalid("subgroup is not normal".into()));
    }
    let theta_idx = ensure_irreducible(theta)?;
    let g = e.parent();
    let s = stabilizer_of_character(theta, e)?;
    let n_to_s = SubgroupEmbedding::new(e.sub().clone(), s.clone(), e.images().to_vec())?;
    let s_to_g = SubgroupEmbedding::inclusion(&s, g)?;
    let orbit = character_orbit(theta, e)?;

    let irr_g = character_table(g)?;
    let mut witnesses = Vec::new();
    for (i, chi) in irr_g.iter().enumerate() {
        let r = restrict(chi, e)?;
        if r.multiplicities[theta_idx] >= 1 && r.is_multiplicity_free() {
            witnesses.push(i);
        }
    }
    let side_i = !witnesses.is_empty();

    let ext = extension_exists(theta, &n_to_s)?;
    let side_ii = ext.is_some();
    let irr_s = character_table(&s)?;
    let extension = ext.as_ref().and_then(|x| irr_s.iter().position(|c| c == x));

    let (mut induced_irreducible, mut mackey) = (None, None);
    if let Some(x1) = &ext {
        let x = induce(x1, &s_to_g)?;
        induced_irreducible = Some(x.is_irreducible()?);
        let res = restrict_values(&x, e)?;
        let mut orbit_sum = Character::zero(e.sub());
        for c in &orbit {
            orbit_sum = orbit_sum.sum(c)?;
        }
        mackey = Some(res == orbit_sum);
    }

    // constituents of Res_S χ lying over θ restrict to θ itself
    let mut constituents_extend = None;
    if side_i {
        let mut ok = true;
        for &w in &witnesses {
            let r = restrict(&irr_g[w], &s_to_g)?;
            for (j, &m) in r.multiplicities.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                let below = restrict(&irr_s[j], &n_to_s)?;
                if below.multiplicities[theta_idx] > 0 && below.character != *theta {
                    ok = false;
                }
            }
        }
        constituents_extend = Some(ok);
    }

    let holds = side_i == side_ii
        && induced_irreducible.unwrap_or(true)
        && mackey.unwrap_or(true)
        && constituents_extend.unwrap_or(true);
    let report = EquivalenceReport {
        stabilizer_order: s.order(),
        orbit_size: orbit.len(),
        multiplicity_free_witnesses: witnesses,
        extension,
        side_i,
        side_ii,
        induced_irreducible,
        mackey_orbit_sum: mackey,
        constituents_extend,
        holds,
    };
    if !holds {
        return Err(Error::Falsified(format!("extension/multiplicity-freeness equivalence: {report:?}")));
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct AbelianReport {
    pub restriction_irreducible: bool,
    pub restriction_multiplicity_free: bool,
    /// Indices in Irr(G) of the nontrivial linear characters trivial on N.
    pub quotient_characters: Vec<usize>,
    /// Those among them with `λ·χ = χ`.
    pub fixing_characters: Vec<usize>,
    pub side_i: bool,
    pub side_ii: bool,
    pub holds: bool,
}

fn quotient_is_abelian(e: &SubgroupEmbedding) -> bool {
    let g = e.parent();
    let gens = g.generators();
    gens.iter().all(|a| {
        gens.iter().all(|b| {
            let comm: Perm = &(&(&a.inverse() * &b.inverse()) * a) * b;
            g.index_of(&comm).is_some_and(|i| e.preimage(i).is_some())
        })
    })
}

pub fn verify_abelian_lemma(e: &SubgroupEmbedding, chi: &Character) -> Result<AbelianReport> {
    if !e.is_normal() {
        return Err(Error::Invalid("subgroup is not normal".into()));
    }
    if !quotient_is_abelian(e) {
        return Err(Error::Invalid("quotient by the subgroup is not abelian".into()));
    }
    ensure_irreducible(chi)?;
    let irr = character_table(e.parent())?;
    let r = restrict(chi, e)?;
    let restriction_irreducible = r.multiplicities.iter().sum::<u64>() == 1;
    let restriction_multiplicity_free = r.is_multiplicity_free();
    let one = num_rational::BigRational::from_integer(1.into());
    let mut quotient_characters = Vec::new();
    let mut fixing_characters = Vec::new();
    for (i, lam) in irr.iter().enumerate() {
        if lam.degree() != one || lam.is_trivial() || !restrict_values(lam, e)?.is_trivial() {
            continue;
        }
        quotient_characters.push(i);
        if lam.product(chi)? == *chi {
            fixing_characters.push(i);
        }
    }
    let side_i = restriction_irreducible;
    let side_ii = restriction_multiplicity_free && fixing_characters.is_empty();
    let report = AbelianReport {
        restriction_irreducible,
        restriction_multiplicity_free,
        quotient_characters,
        fixing_characters,
        side_i,
        side_ii,
        holds: side_i == side_ii,
    };
    if !report.holds {
        return Err(Error::Falsified(format!("abelian quotient criterion: {report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::constructions::{cyclic, gl2, quaternion, sl2, symmetric};

    #[test]
    fn s3_over_c3() {
        let s3 = symmetric(3).unwrap();
        let c3 = s3.subgroup(vec![Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        let e = SubgroupEmbedding::inclusion(&c3, &s3).unwrap();
        for theta in character_table(&c3).unwrap() {
            let r = verify_lemma_equivalence(&e, &theta).unwrap();
            assert!(r.side_i && r.side_ii);
        }
        let two = character_table(&s3).unwrap().pop().unwrap();
        let r = verify_abelian_lemma(&e, &two).unwrap();
        assert!(!r.restriction_irreducible);
        assert_eq!(r.fixing_characters.len(), 1);
    }

    #[test]
    fn quaternion_both_sides_false() {
        let q8 = quaternion();
        let z = q8.subgroup(vec![q8.elements().iter().find(|g| g.order() == 2).unwrap().clone()]).unwrap();
        let e = SubgroupEmbedding::inclusion(&z, &q8).unwrap();
        let r = verify_lemma_equivalence(&e, &character_table(&z).unwrap()[1]).unwrap();
        assert!(!r.side_i && !r.side_ii && r.holds);
    }

    #[test]
    fn c4_over_c2() {
        let c4 = cyclic(4).unwrap();
        let c2 = c4.subgroup(vec![Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap()]).unwrap();
        let e = SubgroupEmbedding::inclusion(&c2, &c4).unwrap();
        let faithful = character_table(&c4)
            .unwrap()
            .into_iter()
            .find(|c| c.values().iter().any(|v| v.to_rational().is_none()))
            .unwrap();
        let r = verify_abelian_lemma(&e, &faithful).unwrap();
        assert!(r.restriction_irreducible && r.fixing_characters.is_empty());
    }

    #[test]
    fn gl2_over_sl2() {
        let g = gl2(3).unwrap();
        let n = sl2(3).unwrap();
        let e = SubgroupEmbedding::inclusion(&n, &g).unwrap();
        for chi in character_table(&g).unwrap() {
            verify_abelian_lemma(&e, &chi).unwrap();
        }
    }
}
