use std::fmt;

use serde::Serialize;

use crate::root_datum::{reference_cartan, Family};

/// Irreducible finite Coxeter types. `B` covers `C`; `I2(m)` is used only
/// for `m ∉ {3, 4, 6}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CoxeterFamily {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H3,
    H4,
    I2(u32),
}

impl CoxeterFamily {
    pub fn rank(&self) -> usize {
        match *self {
            CoxeterFamily::A(n) | CoxeterFamily::B(n) | CoxeterFamily::D(n) | CoxeterFamily::E(n) => n,
            CoxeterFamily::F4 | CoxeterFamily::H4 => 4,
            CoxeterFamily::H3 => 3,
            CoxeterFamily::G2 | CoxeterFamily::I2(_) => 2,
        }
    }
}

impl fmt::Display for CoxeterFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterFamily::A(n) => write!(f, "A{n}"),
            CoxeterFamily::B(n) => write!(f, "B{n}"),
            CoxeterFamily::D(n) => write!(f, "D{n}"),
            CoxeterFamily::E(n) => write!(f, "E{n}"),
            CoxeterFamily::F4 => write!(f, "F4"),
            CoxeterFamily::G2 => write!(f, "G2"),
            CoxeterFamily::H3 => write!(f, "H3"),
            CoxeterFamily::H4 => write!(f, "H4"),
            CoxeterFamily::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A Coxeter type as a sorted list of irreducible components, each with the
/// generator indices it occupies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterType {
    pub components: Vec<(CoxeterFamily, Vec<usize>)>,
}

impl CoxeterType {
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "1".into();
        }
        self.components.iter().map(|(c, _)| c.to_string()).collect::<Vec<_>>().join("x")
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn from_cartan(a: &[Vec<i64>]) -> Vec<Vec<u32>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        1
                    } else {
                        match a[i][j] * a[j][i] {
                            0 => 2,
                            1 => 3,
                            2 => 4,
                            3 => 6,
                            _ => unreachable!("finite type"),
                        }
                    }
                })
                .collect()
        })
        .collect()
}

fn path_with_last(n: usize, last: u32) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for i in 0..n - 1 {
        let v = if i == n - 2 { last } else { 3 };
        m[i][i + 1] = v;
        m[i + 1][i] = v;
    }
    m
}

fn candidates(n: usize) -> Vec<(CoxeterFamily, Vec<Vec<u32>>)> {
    let mut out = Vec::new();
    let cartan = |f: Family| reference_cartan(f, n).map(|a| from_cartan(&a));
    if let Some(m) = cartan(Family::A) {
        out.push((CoxeterFamily::A(n), m));
    }
    if let Some(m) = cartan(Family::B).filter(|_| n >= 3) {
        out.push((CoxeterFamily::B(n), m));
    }
    if let Some(m) = cartan(Family::D) {
        out.push((CoxeterFamily::D(n), m));
    }
    if let Some(m) = cartan(Family::E) {
        out.push((CoxeterFamily::E(n), m));
    }
    if let Some(m) = cartan(Family::F) {
        out.push((CoxeterFamily::F4, m));
    }
    match n {
        3 => out.push((CoxeterFamily::H3, path_with_last(3, 5))),
        4 => out.push((CoxeterFamily::H4, path_with_last(4, 5))),
        _ => {}
    }
    out
}

/// Recognizes a finite Coxeter matrix (`m_ii = 1`, `m_ij ≥ 2`). Returns
/// `None` when some component is not of finite type.
pub fn recognize(m: &[Vec<u32>]) -> Option<CoxeterType> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && m[i][j] != 2 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort();
        let family = match comp.len() {
            1 => CoxeterFamily::A(1),
            2 => match m[comp[0]][comp[1]] {
                3 => CoxeterFamily::A(2),
                4 => CoxeterFamily::B(2),
                6 => CoxeterFamily::G2,
                0 => return None,
                k => CoxeterFamily::I2(k),
            },
            r => {
                let sub: Vec<Vec<u32>> = comp.iter().map(|&i| comp.iter().map(|&j| m[i][j]).collect()).collect();
                candidates(r).into_iter().find(|(_, reference)| isomorphic(&sub, reference))?.0
            }
        };
        components.push((family, comp));
    }
    components.sort();
    Some(CoxeterType { components })
}

fn isomorphic(a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
    fn go(a: &[Vec<u32>], b: &[Vec<u32>], k: usize, assign: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if k == b.len() {
            return true;
        }
        for c in 0..a.len() {
            if used[c] {
                continue;
            }
            if (0..k).all(|l| a[c][assign[l]] == b[k][l]) {
                assign.push(c);
                used[c] = true;
                if go(a, b, k + 1, assign, used) {
                    return true;
                }
                used[c] = false;
                assign.pop();
            }
        }
        false
    }
    a.len() == b.len() && go(a, b, 0, &mut Vec::new(), &mut vec![false; a.len()])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_basic_types() {
        assert_eq!(recognize(&path_with_last(3, 4)).unwrap().label(), "B3");
        assert_eq!(recognize(&path_with_last(3, 3)).unwrap().label(), "A3");
        assert_eq!(recognize(&path_with_last(4, 5)).unwrap().label(), "H4");
        assert_eq!(recognize(&path_with_last(2, 6)).unwrap().label(), "G2");
        assert_eq!(recognize(&path_with_last(2, 8)).unwrap().label(), "I2(8)");
        let e8 = from_cartan(&reference_cartan(Family::E, 8).unwrap());
        assert_eq!(recognize(&e8).unwrap().label(), "E8");
        let f4 = from_cartan(&reference_cartan(Family::F, 4).unwrap());
        assert_eq!(recognize(&f4).unwrap().label(), "F4");
        assert_eq!(recognize(&[vec![1, 2], vec![2, 1]]).unwrap().label(), "A1xA1");
        assert_eq!(recognize(&[]).unwrap().label(), "1");
    }

    #[test]
    fn rejects_affine() {
        let mut m = path_with_last(3, 3);
        m[0][2] = 3;
        m[2][0] = 3;
        assert!(recognize(&m).is_none());
    }
}
