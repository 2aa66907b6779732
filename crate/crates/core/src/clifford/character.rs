use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::Cyc;
use super::group::PermGroup;
use super::perm::Perm;
use crate::{Error, Result};

/// A class function on a permutation group, one exact value per class.
#[derive(Clone, Debug)]
pub struct Character {
    group: PermGroup,
    values: Vec<Cyc>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.values == other.values
    }
}

impl Character {
    pub fn new(group: PermGroup, values: Vec<Cyc>) -> Result<Self> {
        if values.len() != group.class_count() {
            return Err(Error::Dimension(format!(
                "{} values for {} conjugacy classes",
                values.len(),
                group.class_count()
            )));
        }
        let e = group.exponent() as u32;
        let values = values.into_iter().map(|v| v.lift(num_integer::lcm(e, v.conductor()))).collect();
        Ok(Character { group, values })
    }

    pub fn trivial(group: &PermGroup) -> Self {
        let e = group.exponent() as u32;
        Character { group: group.clone(), values: vec![Cyc::one(e); group.class_count()] }
    }

    /// The permutation character of the regular representation.
    pub fn regular(group: &PermGroup) -> Self {
        let e = group.exponent() as u32;
        let mut values = vec![Cyc::zero(e); group.class_count()];
        values[0] = Cyc::from_int(e, group.order() as i64);
        Character { group: group.clone(), values }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn values(&self) -> &[Cyc] {
        &self.values
    }

    pub fn degree(&self) -> BigRational {
        self.values[0].to_rational().unwrap_or_else(BigRational::zero)
    }

    pub fn value_at(&self, g: &Perm) -> Option<&Cyc> {
        self.group.class_of(g).map(|c| &self.values[c])
    }

    pub fn is_trivial(&self) -> bool {
        let e = self.values[0].conductor();
        self.values.iter().all(|v| *v == Cyc::one(e))
    }

    /// `(1/|G|) Σ_g χ(g) conj(ψ(g))`
    pub fn inner(&self, other: &Character) -> Result<Cyc> {
        if !self.group.same_as(&other.group) {
            return Err(Error::Invalid("characters live on different groups".into()));
        }
        let e = self.values[0].conductor();
        let mut s = Cyc::zero(e);
        for (c, cl) in self.group.classes().iter().enumerate() {
            let term = &self.values[c] * &other.values[c].conj();
            s = &s + &term.scale_int(&BigInt::from(cl.size()));
        }
        Ok(s.scale(&BigRational::new(BigInt::one(), BigInt::from(self.group.order()))))
    }

    pub fn norm(&self) -> Result<Cyc> {
        self.inner(self)
    }

    pub fn product(&self, other: &Character) -> Result<Character> {
        if !self.group.same_as(&other.group) {
            return Err(Error::Invalid("characters live on different groups".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(Character { group: self.group.clone(), values })
    }

    pub fn sum(&self, other: &Character) -> Result<Character> {
        if !self.group.same_as(&other.group) {
            return Err(Error::Invalid("characters live on different groups".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Character { group: self.group.clone(), values })
    }

    pub fn zero(group: &PermGroup) -> Self {
        let e = group.exponent() as u32;
        Character { group: group.clone(), values: vec![Cyc::zero(e); group.class_count()] }
    }

    /// Multiplicities of the irreducible characters, in table order. Fails
    /// when the class function is not a character.
    pub fn decompose(&self) -> Result<Vec<u64>> {
        let irr = character_table(&self.group)?;
        irr.iter()
            .map(|chi| {
                let m = self.inner(chi)?;
                m.to_rational()
                    .filter(|r| r.is_integer() && !r.is_negative())
                    .and_then(|r| r.to_integer().to_u64())
                    .ok_or_else(|| Error::Invalid(format!("multiplicity {m} is not a non-negative integer")))
            })
            .collect()
    }

    /// Position in the character table, if irreducible.
    pub fn irreducible_index(&self) -> Result<Option<usize>> {
        Ok(character_table(&self.group)?.iter().position(|chi| chi == self))
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.irreducible_index()?.is_some())
    }

    /// `ad(g)χ : n ↦ χ(g⁻¹ n g)` for `g` normalizing the group, given in the
    /// parent of `e`.
    pub fn conjugate(&self, e: &SubgroupEmbedding, g: &Perm) -> Result<Character> {
        if !self.group.same_as(e.sub()) {
            return Err(Error::Invalid("character is not on the embedded subgroup".into()));
        }
        let parent = e.parent();
        let ginv = g.inverse();
        let values = (0..self.group.class_count())
            .map(|c| {
                let n = e.image_of(self.group.classes()[c].rep);
                let x = &(&ginv * parent.element(n)) * g;
                let xi = parent.index_of(&x).ok_or_else(|| Error::Invalid(format!("{g} is not in the parent group")))?;
                let pre = e.preimage(xi).ok_or_else(|| Error::Invalid(format!("{g} does not normalize the subgroup")))?;
                Ok(self.values[self.group.class_of_index(pre)].clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Character { group: self.group.clone(), values })
    }
}

/// Irreducible characters in canonical order, trivial character first.
pub fn character_table(g: &PermGroup) -> Result<Vec<Character>> {
    let data = g.table_data()?;
    Ok(data.rows.iter().map(|r| Character { group: g.clone(), values: r.clone() }).collect())
}

/// An injective homomorphism `sub → parent` given by generator images.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    sub: PermGroup,
    parent: PermGroup,
    images: Vec<Perm>,
    to_parent: Vec<usize>,
    from_parent: HashMap<usize, usize>,
    fusion: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn new(sub: PermGroup, parent: PermGroup, images: Vec<Perm>) -> Result<Self> {
        if images.len() != sub.generators().len() {
            return Err(Error::Dimension(format!(
                "{} images for {} generators",
                images.len(),
                sub.generators().len()
            )));
        }
        let img_idx = images
            .iter()
            .map(|p| parent.index_of(p).ok_or_else(|| Error::Invalid(format!("image {p} is not in the parent group"))))
            .collect::<Result<Vec<_>>>()?;
        let mut to_parent = vec![usize::MAX; sub.order()];
        to_parent[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, &gi) in sub.generators().iter().zip(&img_idx) {
                let y = sub.index_of(&(sub.element(x) * s)).expect("closed");
                let fy = parent.mul(to_parent[x], gi);
                if to_parent[y] == usize::MAX {
                    to_parent[y] = fy;
                    queue.push_back(y);
                } else if to_parent[y] != fy {
                    return Err(Error::Invalid("generator images do not define a homomorphism".into()));
                }
            }
        }
        let from_parent: HashMap<usize, usize> = to_parent.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        if from_parent.len() != sub.order() {
            return Err(Error::Invalid("generator images define a non-injective homomorphism".into()));
        }
        let fusion = sub.classes().iter().map(|c| parent.class_of_index(to_parent[c.rep])).collect();
        Ok(SubgroupEmbedding { sub, parent, images, to_parent, from_parent, fusion })
    }

    /// `sub ⊆ parent` on the same points.
    pub fn inclusion(sub: &PermGroup, parent: &PermGroup) -> Result<Self> {
        if !sub.is_subgroup_of(parent) {
            return Err(Error::Invalid("not a subgroup on the same points".into()));
        }
        Self::new(sub.clone(), parent.clone(), sub.generators().to_vec())
    }

    pub fn sub(&self) -> &PermGroup {
        &self.sub
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    /// Parent class of each sub class.
    pub fn fusion(&self) -> &[usize] {
        &self.fusion
    }

    pub fn image_of(&self, sub_index: usize) -> usize {
        self.to_parent[sub_index]
    }

    pub fn preimage(&self, parent_index: usize) -> Option<usize> {
        self.from_parent.get(&parent_index).copied()
    }

    pub fn image_group(&self) -> Result<PermGroup> {
        self.parent.subgroup(self.images.clone())
    }

    pub fn is_normal(&self) -> bool {
        self.parent.generators().iter().all(|g| {
            self.images.iter().all(|h| {
                self.parent.index_of(&h.conjugate(g)).is_some_and(|i| self.from_parent.contains_key(&i))
            })
        })
    }

    /// `self: A → B` followed by `outer: B → C`.
    pub fn then(&self, outer: &SubgroupEmbedding) -> Result<SubgroupEmbedding> {
        if !self.parent.same_as(outer.sub()) {
            return Err(Error::Invalid("embeddings do not compose".into()));
        }
        let images = self
            .images
            .iter()
            .map(|p| outer.parent.element(outer.image_of(outer.sub.index_of(p).expect("image in group"))).clone())
            .collect();
        SubgroupEmbedding::new(self.sub.clone(), outer.parent.clone(), images)
    }
}

#[derive(Clone, Debug)]
pub struct Restriction {
    pub character: Character,
    pub multiplicities: Vec<u64>,
}

impl Restriction {
    pub fn is_multiplicity_free(&self) -> bool {
        self.multiplicities.iter().all(|&m| m <= 1)
    }
}

pub fn restrict(chi: &Character, e: &SubgroupEmbedding) -> Result<Restriction> {
    let character = restrict_values(chi, e)?;
    let multiplicities = character.decompose()?;
    Ok(Restriction { character, multiplicities })
}

/// Pullback along the fusion map without decomposing.
pub fn restrict_values(chi: &Character, e: &SubgroupEmbedding) -> Result<Character> {
    if !chi.group.same_as(e.parent()) {
        return Err(Error::Invalid("character is not on the parent group".into()));
    }
    let values = e.fusion().iter().map(|&c| chi.values[c].clone()).collect();
    Character::new(e.sub().clone(), values)
}

/// `Ind θ (g_k) = |C_G(g_k)| / |H| · Σ_{c ↦ k} |c| θ(c)`
pub fn induce(theta: &Character, e: &SubgroupEmbedding) -> Result<Character> {
    if !theta.group.same_as(e.sub()) {
        return Err(Error::Invalid("character is not on the embedded subgroup".into()));
    }
    let parent = e.parent();
    let h = e.sub();
    let cond = num_integer::lcm(parent.exponent() as u32, theta.values[0].conductor());
    let mut sums = vec![Cyc::zero(cond); parent.class_count()];
    for (c, cl) in h.classes().iter().enumerate() {
        let k = e.fusion()[c];
        sums[k] = &sums[k] + &theta.values[c].scale_int(&BigInt::from(cl.size()));
    }
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(k, s)| s.scale(&BigRational::new(BigInt::from(parent.centralizer_order(k)), BigInt::from(h.order()))))
        .collect();
    Character::new(parent.clone(), values)
}

/// `S_G(θ) = {g : θ(g⁻¹ n g) = θ(n)}` for `N ⊴ G` embedded by `e`.
pub fn stabilizer_of_character(theta: &Character, e: &SubgroupEmbedding) -> Result<PermGroup> {
    if !e.is_normal() {
        return Err(Error::Invalid("subgroup is not normal".into()));
    }
    if !theta.group.same_as(e.sub()) {
        return Err(Error::Invalid("character is not on the embedded subgroup".into()));
    }
    let parent = e.parent();
    let n = e.sub();
    let reps: Vec<(usize, usize)> = n.classes().iter().enumerate().map(|(c, cl)| (c, e.image_of(cl.rep))).collect();
    let members: Vec<usize> = (0..parent.order())
        .filter(|&gi| {
            let g = parent.element(gi);
            let ginv = g.inverse();
            reps.iter().all(|&(c, x)| {
                let y = parent.index_of(&(&(&ginv * parent.element(x)) * g)).expect("closed");
                let pre = e.preimage(y).expect("normal");
                theta.values[n.class_of_index(pre)] == theta.values[c]
            })
        })
        .collect();
    parent.subgroup_from_elements(&members)
}

/// An irreducible character of `S` restricting to `θ` along `e: N → S`.
pub fn extension_exists(theta: &Character, e: &SubgroupEmbedding) -> Result<Option<Character>> {
    if !theta.group.same_as(e.sub()) {
        return Err(Error::Invalid("character is not on the embedded subgroup".into()));
    }
    let deg = theta.values[0].clone();
    for chi in character_table(e.parent())? {
        if chi.values[0] == deg && restrict_values(&chi, e)? == *theta {
            return Ok(Some(chi));
        }
    }
    Ok(None)
}
