use super::group::PermGroup;
use super::perm::Perm;
use crate::{Error, Result};

fn cycle(n: usize, pts: &[u32]) -> Perm {
    Perm::from_cycles(n, &[pts]).expect("valid cycle")
}

pub fn trivial(degree: usize) -> PermGroup {
    PermGroup::new(degree, vec![]).expect("trivial group").named("1")
}

pub fn cyclic(n: usize) -> Result<PermGroup> {
    let pts: Vec<u32> = (0..n as u32).collect();
    Ok(PermGroup::new(n, vec![cycle(n, &pts)])?.named(format!("C{n}")))
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[0, 1]));
    }
    if n >= 3 {
        gens.push(cycle(n, &(0..n as u32).collect::<Vec<_>>()));
    }
    Ok(PermGroup::new(n, gens)?.named(format!("S{n}")))
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    let gens = (0..n.saturating_sub(2)).map(|i| cycle(n, &[i as u32, i as u32 + 1, i as u32 + 2])).collect();
    Ok(PermGroup::new(n, gens)?.named(format!("A{n}")))
}

/// Symmetries of a regular `m`-gon, of order `2m`.
pub fn dihedral(m: usize) -> Result<PermGroup> {
    if m < 3 {
        return Err(Error::Invalid("dihedral groups need at least 3 vertices".into()));
    }
    let rot = cycle(m, &(0..m as u32).collect::<Vec<_>>());
    let refl = Perm::from_images((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect())?;
    Ok(PermGroup::new(m, vec![rot, refl])?.named(format!("D{}", 2 * m)))
}

/// The quaternion group in its regular action on 8 points.
pub fn quaternion() -> PermGroup {
    let i = Perm::from_cycles(8, &[&[0, 1, 2, 3], &[4, 5, 6, 7]]).expect("valid");
    let j = Perm::from_cycles(8, &[&[0, 4, 2, 6], &[1, 7, 3, 5]]).expect("valid");
    PermGroup::new(8, vec![i, j]).expect("Q8").named("Q8")
}

fn matrix_perm(p: u32, m: [[u32; 2]; 2]) -> Perm {
    // nonzero vectors (x, y) of F_p^2, indexed by x·p + y - 1
    let idx = |x: u32, y: u32| (x * p + y - 1) as usize;
    let n = (p * p - 1) as usize;
    let mut img = vec![0u32; n];
    for x in 0..p {
        for y in 0..p {
            if x == 0 && y == 0 {
                continue;
            }
            let nx = (m[0][0] * x + m[0][1] * y) % p;
            let ny = (m[1][0] * x + m[1][1] * y) % p;
            img[idx(x, y)] = idx(nx, ny) as u32;
        }
    }
    Perm::from_images(img).expect("invertible matrix")
}

fn check_prime(p: u32) -> Result<()> {
    if p < 2 || (2..p).any(|d| p % d == 0) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    Ok(())
}

/// `SL_2(F_p)` acting on the nonzero vectors of `F_p^2`.
pub fn sl2(p: u32) -> Result<PermGroup> {
    check_prime(p)?;
    let gens = vec![matrix_perm(p, [[1, 1], [0, 1]]), matrix_perm(p, [[1, 0], [1, 1]])];
    Ok(PermGroup::new((p * p - 1) as usize, gens)?.named(format!("SL2({p})")))
}

/// `GL_2(F_p)` on the same points as [`sl2`], so `sl2(p) ⊆ gl2(p)`.
pub fn gl2(p: u32) -> Result<PermGroup> {
    check_prime(p)?;
    let prim = (1..p).find(|&a| (1..p - 1).all(|k| (0..k).fold(1u32, |acc, _| acc * a % p) != 1)).unwrap_or(1);
    let gens = vec![
        matrix_perm(p, [[1, 1], [0, 1]]),
        matrix_perm(p, [[1, 0], [1, 1]]),
        matrix_perm(p, [[prim, 0], [0, 1]]),
    ];
    Ok(PermGroup::new((p * p - 1) as usize, gens)?.named(format!("GL2({p})")))
}

/// `A × B` on the disjoint union of the point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let n = a.degree() + b.degree();
    let mut gens: Vec<Perm> = a.generators().iter().map(|g| g.shifted(0, n)).collect();
    gens.extend(b.generators().iter().map(|g| g.shifted(a.degree(), n)));
    PermGroup::new(n, gens)
}

/// `base ≀ S_n` acting imprimitively on `n` blocks of `base.degree()` points.
pub fn wreath_product(base: &PermGroup, n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::Invalid("wreath products need n ≥ 1".into()));
    }
    let order = (base.order() as f64).powi(n as i32) * (1..=n).map(|k| k as f64).product::<f64>();
    if order > super::group::DEFAULT_GROUP_CAP as f64 {
        return Err(Error::CapExceeded { what: "wreath product order".into(), cap: super::group::DEFAULT_GROUP_CAP });
    }
    let d = base.degree();
    let total = n * d;
    let mut gens: Vec<Perm> = base.generators().iter().map(|g| g.shifted(0, total)).collect();
    gens.extend(block_permutations(d, n));
    PermGroup::new(total, gens)
}

/// Generators of `S_n` permuting `n` blocks of size `d` rigidly.
pub fn block_permutations(d: usize, n: usize) -> Vec<Perm> {
    let block_perm = |sigma: &dyn Fn(usize) -> usize| {
        let img = (0..n * d).map(|x| (sigma(x / d) * d + x % d) as u32).collect();
        Perm::from_images(img).expect("block permutation")
    };
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(block_perm(&|b| match b {
            0 => 1,
            1 => 0,
            b => b,
        }));
    }
    if n >= 3 {
        gens.push(block_perm(&|b| (b + 1) % n));
    }
    gens
}

/// `H ⋊ A` where `A` acts on `H` by conjugation through its restriction to
/// the first `H.degree()` points. Realized on `H.degree() + |A|` points, with
/// `A` also acting regularly on the extra points so the action is faithful
/// even when `A` acts trivially on `H`.
pub fn semidirect(h: &PermGroup, a: &PermGroup) -> Result<SemidirectProduct> {
    let dh = h.degree();
    if a.degree() < dh {
        return Err(Error::Dimension(format!("acting group has degree {} < {dh}", a.degree())));
    }
    let restrict = |g: &Perm| -> Result<Perm> {
        g.block(0, dh, 0)
            .ok_or_else(|| Error::Invalid(format!("{g} does not preserve the first {dh} points")))
    };
    let on_h = a.generators().iter().map(restrict).collect::<Result<Vec<_>>>()?;
    for (x, g) in on_h.iter().zip(a.generators()) {
        if !h.generators().iter().all(|s| h.contains(&s.conjugate(x))) {
            return Err(Error::Invalid(format!("{g} does not normalize H")));
        }
    }
    let na = a.order();
    let d = dh + na;
    let mut gens: Vec<Perm> = h.generators().iter().map(|g| g.extend(d)).collect();
    let mut a_gens = Vec::new();
    for (x, g) in on_h.iter().zip(a.generators()) {
        // g acts on the extra points by right multiplication on A's elements
        let gi = a.index_of(g).expect("generator");
        let mut img: Vec<u32> = x.images().to_vec();
        img.extend((0..na).map(|k| (dh + a.mul(k, gi)) as u32));
        a_gens.push(Perm::from_images(img)?);
    }
    gens.extend(a_gens.iter().cloned());
    let group = PermGroup::new(d, gens)?;
    if group.order() != h.order() * na {
        return Err(Error::Invalid("semidirect product has the wrong order".into()));
    }
    Ok(SemidirectProduct { group, h: h.clone(), a_generators: a_gens })
}

/// `H ⋊ A` together with the data needed to locate `H` and `A` inside it.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: PermGroup,
    pub h: PermGroup,
    /// Images of the generators of `A`.
    pub a_generators: Vec<Perm>,
}

impl SemidirectProduct {
    /// Generators of `H` inside the product.
    pub fn h_generators(&self) -> Vec<Perm> {
        self.h.generators().iter().map(|g| g.extend(self.group.degree())).collect()
    }
}
