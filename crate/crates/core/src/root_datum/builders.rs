use std::collections::HashMap;

use super::cartan::{reference_cartan, Family};
use super::{pairing, BasedRootDatum, RootDatum};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Isogeny {
    /// `X` is the weight lattice: simple coroots form a basis of `X^∨`.
    SimplyConnected,
    /// `X` is the root lattice: simple roots form a basis of `X`.
    Adjoint,
}

/// Semisimple datum with the given Cartan matrix, in one of the two extreme
/// isogeny classes. Roots are ordered positive first (by height), then their
/// negatives in the same order; the simple roots are indices `0..n`.
pub fn from_cartan(a: &[Vec<i64>], iso: Isogeny) -> Result<BasedRootDatum> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("Cartan matrix must be square".into()));
    }
    let simple_root = |j: usize| -> Vec<i64> {
        match iso {
            Isogeny::SimplyConnected => (0..n).map(|i| a[j][i]).collect(),
            Isogeny::Adjoint => (0..n).map(|i| i64::from(i == j)).collect(),
        }
    };
    let simple_coroot = |j: usize| -> Vec<i64> {
        match iso {
            Isogeny::SimplyConnected => (0..n).map(|i| i64::from(i == j)).collect(),
            Isogeny::Adjoint => (0..n).map(|i| a[i][j]).collect(),
        }
    };
    let simple: Vec<(Vec<i64>, Vec<i64>)> = (0..n).map(|j| (simple_root(j), simple_coroot(j))).collect();

    // (root, coroot, coefficients in Δ)
    let mut found: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    for (j, (r, c)) in simple.iter().enumerate() {
        index.insert(r.clone(), found.len());
        found.push((r.clone(), c.clone(), (0..n).map(|i| i64::from(i == j)).collect()));
    }
    let mut k = 0;
    while k < found.len() {
        for (i, (ai, ci)) in simple.iter().enumerate() {
            let (r, c, coef) = &found[k];
            let m = pairing(r, ci);
            let nr: Vec<i64> = r.iter().zip(ai).map(|(x, y)| x - m * y).collect();
            if index.contains_key(&nr) {
                continue;
            }
            let mc = pairing(ai, c);
            let nc: Vec<i64> = c.iter().zip(ci).map(|(x, y)| x - mc * y).collect();
            let mut ncoef = coef.clone();
            ncoef[i] -= m;
            index.insert(nr.clone(), found.len());
            found.push((nr, nc, ncoef));
            if found.len() > 100_000 {
                return Err(Error::Invalid("Cartan matrix is not of finite type".into()));
            }
        }
        k += 1;
    }
    let mut positive: Vec<&(Vec<i64>, Vec<i64>, Vec<i64>)> =
        found.iter().filter(|(_, _, coef)| coef.iter().any(|&x| x > 0)).collect();
    positive.sort_by(|x, y| {
        let hx: i64 = x.2.iter().sum();
        let hy: i64 = y.2.iter().sum();
        hx.cmp(&hy).then_with(|| y.2.cmp(&x.2))
    });
    let mut roots: Vec<Vec<i64>> = positive.iter().map(|t| t.0.clone()).collect();
    let mut coroots: Vec<Vec<i64>> = positive.iter().map(|t| t.1.clone()).collect();
    roots.extend(positive.iter().map(|t| t.0.iter().map(|x| -x).collect::<Vec<i64>>()));
    coroots.extend(positive.iter().map(|t| t.1.iter().map(|x| -x).collect::<Vec<i64>>()));
    let datum = RootDatum::from_parts(n, roots, coroots)?;
    BasedRootDatum::new(datum, (0..n).collect())
}

/// Datum from a label such as `A3`, `C2`, `G2`, `A1xA2` (factors joined by
/// `x`; `Tk` adds a rank `k` torus).
pub fn standard(label: &str, iso: Isogeny) -> Result<BasedRootDatum> {
    let mut acc: Option<BasedRootDatum> = None;
    for part in label.split('x') {
        let part = part.trim();
        let bad = || Error::Invalid(format!("unknown Cartan type {part:?}"));
        let mut chars = part.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let piece = if letter == 'T' {
            torus(n)
        } else {
            let family = match letter {
                'A' => Family::A,
                'B' => Family::B,
                'C' => Family::C,
                'D' => Family::D,
                'E' => Family::E,
                'F' => Family::F,
                'G' => Family::G,
                _ => return Err(bad()),
            };
            from_cartan(&reference_cartan(family, n).ok_or_else(bad)?, iso)?
        };
        acc = Some(match acc {
            None => piece,
            Some(a) => direct_sum(&a, &piece)?,
        });
    }
    acc.ok_or_else(|| Error::Invalid("empty type label".into()))
}

/// The torus of rank `r`: no roots.
pub fn torus(r: usize) -> BasedRootDatum {
    BasedRootDatum::new(RootDatum::from_parts(r, vec![], vec![]).expect("shape"), vec![]).expect("torus is valid")
}

/// `GL_n` on `Z^n` with roots `e_i - e_j` equal to their coroots.
pub fn gl(n: usize) -> BasedRootDatum {
    let mut roots = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for d in 1..n {
        for i in 0..n - d {
            pairs.push((i, i + d));
        }
    }
    let neg: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (j, i)).collect();
    for (i, j) in pairs.iter().chain(&neg) {
        let mut v = vec![0i64; n];
        v[*i] = 1;
        v[*j] = -1;
        roots.push(v);
    }
    let datum = RootDatum::from_parts(n, roots.clone(), roots).expect("shape");
    BasedRootDatum::new(datum, (0..n.saturating_sub(1)).collect()).expect("GL_n is valid")
}

pub fn sl2() -> BasedRootDatum {
    standard("A1", Isogeny::SimplyConnected).expect("A1")
}

pub fn pgl2() -> BasedRootDatum {
    standard("A1", Isogeny::Adjoint).expect("A1")
}

pub fn gl2() -> BasedRootDatum {
    gl(2)
}

pub fn gl3() -> BasedRootDatum {
    gl(3)
}

/// Direct sum on `X_a ⊕ X_b`; simple roots of `a` come first.
pub fn direct_sum(a: &BasedRootDatum, b: &BasedRootDatum) -> Result<BasedRootDatum> {
    let (ra, rb) = (a.datum().rank(), b.datum().rank());
    let pad = |v: &[i64], left: bool| -> Vec<i64> {
        if left {
            v.iter().copied().chain(std::iter::repeat(0).take(rb)).collect()
        } else {
            std::iter::repeat(0).take(ra).chain(v.iter().copied()).collect()
        }
    };
    let mut roots: Vec<Vec<i64>> = a.datum().roots().iter().map(|r| pad(r, true)).collect();
    roots.extend(b.datum().roots().iter().map(|r| pad(r, false)));
    let mut coroots: Vec<Vec<i64>> = a.datum().coroots().iter().map(|r| pad(r, true)).collect();
    coroots.extend(b.datum().coroots().iter().map(|r| pad(r, false)));
    let na = a.datum().num_roots();
    let mut simple = a.simple().to_vec();
    simple.extend(b.simple().iter().map(|&s| s + na));
    BasedRootDatum::new(RootDatum::from_parts(ra + rb, roots, coroots)?, simple)
}
