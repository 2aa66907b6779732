mod common;

use common::burnside::burnside_table;
use common::group;
use levikit::clifford::constructions::{cyclic, dihedral, symmetric, wreath_product};
use levikit::clifford::lemmas::character_orbit;
use levikit::clifford::{
    character_table, induce, restrict, verify_lemma_equivalence, wreath_extension_character, Character, Cyc, Perm, PermGroup,
    SubgroupEmbedding,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn embeddings() -> Vec<SubgroupEmbedding> {
    [
        ("s3.json", "c3.json"),
        ("q8.json", "z2-in-q8.json"),
        ("gl2f3.json", "sl2f3.json"),
        ("c4.json", "c2-in-c4.json"),
        ("s3wr2.json", "s3xs3.json"),
        ("s3xs3.json", "c3xc3.json"),
    ]
    .iter()
    .map(|(g, n)| SubgroupEmbedding::inclusion(&group(n), &group(g)).unwrap())
    .collect()
}

fn rational(c: &Cyc) -> BigRational {
    c.to_rational().expect("rational inner product")
}

#[test]
fn frobenius_reciprocity() {
    for e in embeddings() {
        let irr_g = character_table(e.parent()).unwrap();
        let irr_n = character_table(e.sub()).unwrap();
        for theta in &irr_n {
            let ind = induce(theta, &e).unwrap();
            for chi in &irr_g {
                let res = restrict(chi, &e).unwrap();
                assert_eq!(rational(&ind.inner(chi).unwrap()), rational(&res.character.inner(theta).unwrap()));
            }
        }
    }
}

#[test]
fn restriction_is_constant_on_orbits() {
    for e in embeddings() {
        let irr_n = character_table(e.sub()).unwrap();
        for chi in character_table(e.parent()).unwrap() {
            let res = restrict(&chi, &e).unwrap();
            for theta in &irr_n {
                let k = rational(&res.character.inner(theta).unwrap());
                for other in character_orbit(theta, &e).unwrap() {
                    assert_eq!(rational(&res.character.inner(&other).unwrap()), k);
                }
            }
        }
    }
}

#[test]
fn mackey_orbit_sum_when_extending() {
    for e in embeddings() {
        for theta in character_table(e.sub()).unwrap() {
            let r = verify_lemma_equivalence(&e, &theta).unwrap();
            if r.side_ii {
                assert_eq!(r.mackey_orbit_sum, Some(true));
                assert_eq!(r.induced_irreducible, Some(true));
            }
        }
    }
}

fn base_value(theta: &Character, x: &Perm, n: usize) -> Option<Cyc> {
    let d = theta.group().degree();
    let mut acc = Cyc::one(1);
    for i in 0..n {
        let b = x.block(i * d, d, i * d)?;
        acc = &acc * theta.value_at(&b)?;
    }
    Some(acc)
}

#[test]
fn wreath_extension_restricts_to_tensor_power() {
    for (s, n) in [(cyclic(2).unwrap(), 2), (cyclic(2).unwrap(), 3), (cyclic(3).unwrap(), 2), (symmetric(3).unwrap(), 2)] {
        for theta in character_table(&s).unwrap() {
            let ext = wreath_extension_character(&theta, n).unwrap();
            assert!(ext.is_irreducible().unwrap());
            let w = ext.group();
            let mut base_elements = 0;
            for x in w.elements() {
                if let Some(v) = base_value(&theta, x, n) {
                    assert_eq!(ext.value_at(x).unwrap(), &v);
                    base_elements += 1;
                }
            }
            assert_eq!(base_elements, s.order().pow(n as u32));
        }
    }
}

#[test]
fn sign_on_d8() {
    let c2 = cyclic(2).unwrap();
    let sign = character_table(&c2).unwrap().into_iter().find(|c| !c.is_trivial()).unwrap();
    let ext = wreath_extension_character(&sign, 2).unwrap();
    assert_eq!(ext.group().order(), 8);
    assert_eq!(ext.degree(), BigRational::from_integer(1.into()));
    // C2 wr S2 is dihedral of order 8
    let d8 = dihedral(4).unwrap();
    assert_eq!(character_table(ext.group()).unwrap().len(), character_table(&d8).unwrap().len());
    let x = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
    assert_eq!(ext.value_at(&x).unwrap().to_rational(), Some(BigRational::from_integer(1.into())));
    let y = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
    assert_eq!(ext.value_at(&y).unwrap().to_rational(), Some(BigRational::from_integer((-1).into())));
}

#[test]
fn wreath_product_orders() {
    assert_eq!(wreath_product(&symmetric(3).unwrap(), 2).unwrap().order(), 72);
    assert_eq!(wreath_product(&cyclic(2).unwrap(), 3).unwrap().order(), 48);
}

fn orthogonal(irr: &[Character]) -> bool {
    irr.iter().enumerate().all(|(i, a)| {
        irr.iter()
            .enumerate()
            .all(|(j, b)| a.inner(b).unwrap().to_rational() == Some(BigRational::from_integer(i64::from(i == j).into())))
    })
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_subgroups_of_s5(a in perm_strategy(5), b in perm_strategy(5)) {
        let g = PermGroup::new(5, vec![a, b]).unwrap();
        let irr = character_table(&g).unwrap();
        prop_assert_eq!(irr.len(), g.class_count());
        let squares: BigRational = irr.iter().map(|c| c.degree() * c.degree()).sum();
        prop_assert_eq!(squares, BigRational::from_integer(g.order().into()));
        prop_assert!(orthogonal(&irr));
        let oracle = burnside_table(&g);
        prop_assert_eq!(oracle.rows.len(), irr.len());
        let to_lib: Vec<usize> = oracle.reps.iter().map(|x| g.class_of(x).unwrap()).collect();
        for row in &oracle.rows {
            let mut vals = vec![Cyc::zero(1); row.len()];
            for (k, v) in row.iter().enumerate() {
                vals[to_lib[k]] = v.clone();
            }
            prop_assert!(irr.iter().any(|chi| chi.values() == vals.as_slice()));
        }
    }

    #[test]
    fn regular_character_decomposes_by_degree(a in perm_strategy(4), b in perm_strategy(4)) {
        let g = PermGroup::new(4, vec![a, b]).unwrap();
        let reg = Character::regular(&g);
        let mult = reg.decompose().unwrap();
        let irr = character_table(&g).unwrap();
        for (m, chi) in mult.iter().zip(&irr) {
            prop_assert_eq!(BigRational::from_integer((*m).into()), chi.degree());
        }
    }
}
