//! Extension of irreducible characters of `H^n` to their stabilizers in
//! `(H ⋊ A) ≀ S_n`.

use std::collections::HashMap;

use serde::Serialize;

use super::character::{character_table, extension_exists, stabilizer_of_character, Character, SubgroupEmbedding};
use super::constructions::{semidirect, wreath_product};
use super::cyclotomic::Cyc;
use super::group::PermGroup;
use super::perm::Perm;
use crate::{Error, Result};

/// Block permutation of an element of a wreath product with blocks of size `d`.
fn block_action(g: &Perm, d: usize, n: usize) -> Vec<usize> {
    (0..n).map(|i| g.apply((i * d) as u32) as usize / d).collect()
}

/// `∏_{cycles (i₁ → … → i_k)} θ̃_{i₁}(s_{i_k} ⋯ s_{i₁})`, where `factors[i]`
/// is the character used for cycles through block `i`.
fn cycle_product(g: &Perm, d: usize, factors: &[&Character]) -> Result<Cyc> {
    let n = factors.len();
    let sigma = block_action(g, d, n);
    let mut seen = vec![false; n];
    let mut value = Cyc::one(1);
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = sigma[i];
            len += 1;
        }
        let power = g.pow(len);
        let s = power
            .block(start * d, d, start * d)
            .ok_or_else(|| Error::Invalid(format!("{g} does not act blockwise")))?;
        let v = factors[start]
            .value_at(&s)
            .ok_or_else(|| Error::Falsified(format!("block element {s} lies outside the extension's group")))?;
        value = &value * v;
    }
    Ok(value)
}

/// The character `((s_i); σ) ↦ ∏_cycles θ̃(s_{i_k} ⋯ s_{i₁})` of `S ≀ S_n`,
/// returned with the wreath product it lives on.
pub fn wreath_extension_character(theta: &Character, n: usize) -> Result<Character> {
    let s = theta.group();
    let w = wreath_product(s, n)?;
    let factors = vec![theta; n];
    let values = w
        .classes()
        .iter()
        .map(|c| cycle_product(w.element(c.rep), s.degree(), &factors))
        .collect::<Result<Vec<_>>>()?;
    Character::new(w, values)
}

#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub holds: bool,
    /// Stabilizer order in `H ⋊ A` of each irreducible character of `H`.
    pub stabilizer_orders: Vec<usize>,
    /// Irreducibles of `H` without an extension to their stabilizer.
    pub failures: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorReport {
    /// Index in Irr(H) of each tensor factor.
    pub factors: Vec<usize>,
    /// Blocks grouped by `A`-conjugacy of their factors.
    pub partition: Vec<Vec<usize>>,
    pub stabilizer_order: usize,
    pub predicted_stabilizer_order: usize,
    pub constructed_extension_irreducible: bool,
    pub constructed_extension_restricts: bool,
    pub independent_extension_found: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WreathReport {
    pub h_order: usize,
    pub a_order: usize,
    pub n: usize,
    pub group_order: usize,
    pub hypothesis: HypothesisReport,
    pub status: String,
    pub characters: Vec<TensorReport>,
}

struct Setup {
    base: PermGroup,
    h: PermGroup,
    dh: usize,
    irr_h: Vec<Character>,
    h_in_base: SubgroupEmbedding,
    a_generators: Vec<Perm>,
}

fn factor_index(irr: &[Character], c: &Character) -> Result<usize> {
    irr.iter().position(|x| x == c).ok_or_else(|| Error::Falsified("conjugate of an irreducible is not irreducible".into()))
}

/// Checks every irreducible of `H^n` extends to its stabilizer in
/// `(H ⋊ A) ≀ S_n`, by the explicit tensor construction and by a direct
/// scan of the stabilizer's character table.
pub fn verify_wreath_theorem(h: &PermGroup, a: &PermGroup, n: usize) -> Result<WreathReport> {
    let sd = semidirect(h, a)?;
    let base = sd.group.clone();
    let d = base.degree();
    let h_in_base = SubgroupEmbedding::new(h.clone(), base.clone(), sd.h_generators())?;
    let setup = Setup {
        base: base.clone(),
        h: h.clone(),
        dh: h.degree(),
        irr_h: character_table(h)?,
        h_in_base,
        a_generators: sd.a_generators.clone(),
    };

    // hypothesis: each θ₀ extends to S_{H⋊A}(θ₀)
    let mut stabilizer_orders = Vec::new();
    let mut failures = Vec::new();
    let mut extensions: Vec<Option<Character>> = Vec::new();
    for (i, theta) in setup.irr_h.iter().enumerate() {
        let s = stabilizer_of_character(theta, &setup.h_in_base)?;
        stabilizer_orders.push(s.order());
        let emb = SubgroupEmbedding::new(h.clone(), s, sd.h_generators())?;
        let ext = extension_exists(theta, &emb)?;
        if ext.is_none() {
            failures.push(i);
        }
        extensions.push(ext);
    }
    let hypothesis = HypothesisReport { holds: failures.is_empty(), stabilizer_orders, failures };

    let g = wreath_product(&base, n)?;
    let mut report = WreathReport {
        h_order: h.order(),
        a_order: a.order(),
        n,
        group_order: g.order(),
        hypothesis,
        status: String::new(),
        characters: Vec::new(),
    };
    if !report.hypothesis.holds {
        report.status = "hypothesis violated".into();
        return Ok(report);
    }
    let extensions: Vec<Character> = extensions.into_iter().map(|x| x.expect("hypothesis holds")).collect();

    // A-orbits on Irr(H), with ad(w_m)θ_rep = θ_m
    let r = setup.irr_h.len();
    let mut orbit_rep = vec![usize::MAX; r];
    let mut to_member: Vec<Perm> = vec![Perm::identity(d); r];
    for start in 0..r {
        if orbit_rep[start] != usize::MAX {
            continue;
        }
        orbit_rep[start] = start;
        let mut queue = vec![start];
        while let Some(m) = queue.pop() {
            for s in &setup.a_generators {
                let c = setup.irr_h[m].conjugate(&setup.h_in_base, s)?;
                let j = factor_index(&setup.irr_h, &c)?;
                if orbit_rep[j] == usize::MAX {
                    orbit_rep[j] = start;
                    to_member[j] = s * &to_member[m];
                    queue.push(j);
                }
            }
        }
    }

    let n_gens: Vec<Perm> = (0..n).flat_map(|i| setup.h.generators().iter().map(move |x| x.shifted(i * d, n * d))).collect();
    let big_n = g.subgroup(n_gens.clone())?;
    let n_in_g = SubgroupEmbedding::new(big_n.clone(), g.clone(), n_gens.clone())?;
    let mut table_cache: HashMap<Vec<Perm>, PermGroup> = HashMap::new();

    let mut tuple = vec![0usize; n];
    loop {
        let rep = check_tensor(&setup, &n_in_g, &tuple, &orbit_rep, &to_member, &extensions, &mut table_cache)?;
        report.characters.push(rep);
        // next tuple in lexicographic order
        let mut k = n;
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < r {
                break;
            }
            tuple[k] = 0;
        }
        if tuple.iter().all(|&x| x == 0) {
            break;
        }
    }
    let all_ok = report.characters.iter().all(|c| c.ok);
    report.status = if all_ok { "verified".into() } else { "failed".into() };
    if !all_ok {
        let bad: Vec<_> = report.characters.iter().filter(|c| !c.ok).map(|c| c.factors.clone()).collect();
        return Err(Error::Falsified(format!("wreath extension failed for tensor factors {bad:?}")));
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn check_tensor(
    setup: &Setup,
    n_in_g: &SubgroupEmbedding,
    tuple: &[usize],
    orbit_rep: &[usize],
    to_member: &[Perm],
    extensions: &[Character],
    cache: &mut HashMap<Vec<Perm>, PermGroup>,
) -> Result<TensorReport> {
    let n = tuple.len();
    let d = setup.base.degree();
    let big_n = n_in_g.sub();

    // θ = ⊗ θ_{tuple[i]} as a character of N
    let values = big_n
        .classes()
        .iter()
        .map(|c| {
            let x = big_n.element(c.rep);
            let mut v = Cyc::one(1);
            for (i, &t) in tuple.iter().enumerate() {
                let hb = x.block(i * d, setup.dh, i * d).expect("blockwise");
                v = &v * setup.irr_h[t].value_at(&hb).expect("element of H");
            }
            v
        })
        .collect();
    let theta = Character::new(big_n.clone(), values)?;

    let mut partition: Vec<Vec<usize>> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for (i, &t) in tuple.iter().enumerate() {
        match reps.iter().position(|&r| r == orbit_rep[t]) {
            Some(k) => partition[k].push(i),
            None => {
                reps.push(orbit_rep[t]);
                partition.push(vec![i]);
            }
        }
    }

    let s = stabilizer_of_character(&theta, n_in_g)?;
    let s = cache.entry(s.generators().to_vec()).or_insert(s).clone();
    let mut predicted = 1usize;
    for (k, part) in partition.iter().enumerate() {
        let sb = extensions[reps[k]].group().order();
        predicted *= sb.pow(part.len() as u32) * (1..=part.len()).product::<usize>();
    }

    // a = (a_i): ad(a_i)θ_i = θ_rep, a_i = w_i⁻¹
    let mut a_img: Vec<u32> = Vec::with_capacity(n * d);
    for (i, &t) in tuple.iter().enumerate() {
        let ai = to_member[t].inverse();
        a_img.extend(ai.images().iter().map(|&x| x + (i * d) as u32));
    }
    let a = Perm::from_images(a_img)?;
    let a_inv = a.inverse();
    let factors: Vec<&Character> = tuple.iter().map(|&t| &extensions[orbit_rep[t]]).collect();

    // ψ(x) = ψ'(a x a⁻¹) with ψ' the cycle-product extension of ad(a)θ
    let psi_values = s
        .classes()
        .iter()
        .map(|c| cycle_product(&(&(&a * s.element(c.rep)) * &a_inv), d, &factors))
        .collect::<Result<Vec<_>>>();
    let (irreducible, restricts) = match psi_values {
        Ok(values) => {
            let psi = Character::new(s.clone(), values)?;
            let n_in_s = SubgroupEmbedding::new(big_n.clone(), s.clone(), n_in_g.images().to_vec())?;
            let res = super::character::restrict_values(&psi, &n_in_s)?;
            (psi.is_irreducible()?, res == theta)
        }
        Err(e) if e.is_falsification() => (false, false),
        Err(e) => return Err(e),
    };
    let n_in_s = SubgroupEmbedding::new(big_n.clone(), s.clone(), n_in_g.images().to_vec())?;
    let independent = extension_exists(&theta, &n_in_s)?.is_some();
    let ok = irreducible && restricts && independent && s.order() == predicted;
    Ok(TensorReport {
        factors: tuple.to_vec(),
        partition,
        stabilizer_order: s.order(),
        predicted_stabilizer_order: predicted,
        constructed_extension_irreducible: irreducible,
        constructed_extension_restricts: restricts,
        independent_extension_found: independent,
        ok,
    })
}

/// `(H ⋊ A) ≀ S_n` together with its base group `N = H^n`.
pub fn build_wreath(h: &PermGroup, a: &PermGroup, n: usize) -> Result<(PermGroup, PermGroup)> {
    let sd = semidirect(h, a)?;
    let g = wreath_product(&sd.group, n)?;
    let d = sd.group.degree();
    let gens: Vec<Perm> = (0..n).flat_map(|i| sd.h_generators().into_iter().map(move |x| x.shifted(i * d, n * d))).collect();
    let n_group = g.subgroup(gens)?;
    Ok((g, n_group))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::constructions::{cyclic, trivial};

    #[test]
    fn sign_on_d8() {
        let c2 = cyclic(2).unwrap();
        let sign = character_table(&c2).unwrap()[1].clone();
        let psi = wreath_extension_character(&sign, 2).unwrap();
        assert_eq!(psi.group().order(), 8);
        assert!(psi.is_irreducible().unwrap());
        assert_eq!(psi.degree(), num_rational::BigRational::from_integer(1.into()));
        let triv = wreath_extension_character(&Character::trivial(&c2), 3).unwrap();
        assert!(triv.is_trivial());
    }

    #[test]
    fn c3_with_inversion() {
        let c3 = cyclic(3).unwrap();
        let inv = PermGroup::new(3, vec![Perm::from_cycles(3, &[&[1, 2]]).unwrap()]).unwrap();
        let r = verify_wreath_theorem(&c3, &inv, 2).unwrap();
        assert_eq!(r.group_order, 72);
        assert_eq!(r.characters.len(), 9);
        assert!(r.hypothesis.holds);
    }

    #[test]
    fn s3_untwisted() {
        let s3 = crate::clifford::constructions::symmetric(3).unwrap();
        let r = verify_wreath_theorem(&s3, &trivial(3), 2).unwrap();
        assert_eq!(r.characters.len(), 9);
        assert_eq!(r.group_order, 72);
    }
}
