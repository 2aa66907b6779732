use std::fmt;
use std::ops::Mul;

use crate::{Error, Result};

/// A permutation of `{0, …, n-1}`, stored as its image list.
///
/// Products compose left to right: `a * b` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x as usize] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based images; the convention used in JSON input.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Invalid("permutation images are 1-based".into()));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// From disjoint cycles on `n` points, 0-based.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x as usize >= n {
                    return Err(Error::Invalid(format!("point {x} out of range")));
                }
                img[x as usize] = c[(k + 1) % c.len()];
            }
        }
        Self::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<u32> {
        self.0.iter().map(|&x| x + 1).collect()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// `g⁻¹ · self · g`
    pub fn conjugate(&self, g: &Perm) -> Perm {
        &(&g.inverse() * self) * g
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut ord = 1usize;
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x as u32);
                x = self.0[x] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Extends to `n ≥ degree` points, fixing the new ones.
    pub fn extend(&self, n: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32..n as u32);
        Perm(v)
    }

    /// Moves `self` onto the points `offset..offset+degree` of `n` points.
    pub fn shifted(&self, offset: usize, n: usize) -> Perm {
        let mut v: Vec<u32> = (0..n as u32).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[offset + i] = offset as u32 + x;
        }
        Perm(v)
    }

    /// Restriction to `offset..offset+len`, which must be mapped onto `target..target+len`.
    pub fn block(&self, offset: usize, len: usize, target: usize) -> Option<Perm> {
        let mut v = Vec::with_capacity(len);
        for i in 0..len {
            let y = self.0[offset + i] as usize;
            if y < target || y >= target + len {
                return None;
            }
            v.push((y - target) as u32);
        }
        Some(Perm(v))
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Perm(self.0.iter().map(|&x| rhs.0[x as usize]).collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cs.is_empty() {
            return f.write_str("()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_applies_left_first() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!((&a * &b).apply(0), 2);
        assert_eq!((&a * &b).order(), 3);
        assert!((&a * &a.inverse()).is_identity());
        assert_eq!(a.conjugate(&b), Perm::from_cycles(3, &[&[0, 2]]).unwrap());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_one_based(&[0, 1]).is_err());
        assert_eq!(Perm::from_one_based(&[2, 1]).unwrap().to_string(), "(1,2)");
    }

    #[test]
    fn blocks() {
        let p = Perm::from_images(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(p.block(2, 2, 2).unwrap(), Perm::from_images(vec![1, 0]).unwrap());
        assert!(p.block(1, 2, 0).is_none());
        assert_eq!(Perm::from_images(vec![1, 0]).unwrap().shifted(2, 4), Perm::from_images(vec![0, 1, 3, 2]).unwrap());
    }
}
