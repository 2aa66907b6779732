use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Reference Cartan matrix `a_ij = <α_i, α_j^∨>` in Bourbaki labelling.
/// `B_n` has `α_n` short, `C_n` has `α_n` long, `G_2` has `α_1` short and
/// `F_4` has `α_3, α_4` short.
pub fn reference_cartan(family: Family, n: usize) -> Option<Vec<Vec<i64>>> {
    let ok = match family {
        Family::A => n >= 1,
        Family::B | Family::C => n >= 2,
        Family::D => n >= 4,
        Family::E => (6..=8).contains(&n),
        Family::F => n == 4,
        Family::G => n == 2,
    };
    if !ok {
        return None;
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match family {
        Family::A => (0..n - 1).for_each(|i| edge(i, i + 1, -1, -1)),
        Family::B => {
            (0..n - 2).for_each(|i| edge(i, i + 1, -1, -1));
            edge(n - 2, n - 1, -2, -1);
        }
        Family::C => {
            (0..n - 2).for_each(|i| edge(i, i + 1, -1, -1));
            edge(n - 2, n - 1, -1, -2);
        }
        Family::D => {
            (0..n - 2).for_each(|i| edge(i, i + 1, -1, -1));
            edge(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            edge(0, 2, -1, -1);
            edge(1, 3, -1, -1);
            (2..n - 1).for_each(|i| edge(i, i + 1, -1, -1));
        }
        Family::F => {
            edge(0, 1, -1, -1);
            edge(1, 2, -2, -1);
            edge(2, 3, -1, -1);
        }
        Family::G => edge(0, 1, -1, -3),
    }
    Some(a)
}

/// One irreducible component of a Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DynkinComponent {
    pub family: Family,
    pub rank: usize,
    /// `nodes[k]` is the position in Δ of the reference node `k`.
    pub nodes: Vec<usize>,
}

impl DynkinComponent {
    /// `B2` and `C2` coincide; rank two doubly laced components are labelled `B2`.
    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanType {
    /// Sorted by (family, rank, first node).
    pub components: Vec<DynkinComponent>,
    /// `rank X - |Δ|`
    pub torus_rank: usize,
}

impl CartanType {
    pub fn from_cartan_matrix(a: &[Vec<i64>], lattice_rank: usize) -> Result<CartanType> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("Cartan matrix must be square".into()));
        }
        if n > lattice_rank {
            return Err(Error::Invalid("more simple roots than the lattice rank".into()));
        }
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
                    if !seen[j] && (a[i][j] != 0 || a[j][i] != 0) {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort();
            components.push(identify(a, &comp)?);
        }
        components.sort_by(|x, y| (x.family, x.rank, x.nodes.iter().min()).cmp(&(y.family, y.rank, y.nodes.iter().min())));
        Ok(CartanType { components, torus_rank: lattice_rank - n })
    }

    /// Label such as `A2xB3` (or `T1` for a torus, `A1xT2` when both occur).
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(DynkinComponent::label).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("x")
        }
    }

    /// Semisimple part only, without the torus factor.
    pub fn semisimple_label(&self) -> String {
        if self.components.is_empty() {
            return "1".into();
        }
        self.components.iter().map(DynkinComponent::label).collect::<Vec<_>>().join("x")
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn identify(a: &[Vec<i64>], comp: &[usize]) -> Result<DynkinComponent> {
    let r = comp.len();
    let families = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];
    for family in families {
        if family == Family::C && r == 2 {
            continue;
        }
        let Some(reference) = reference_cartan(family, r) else { continue };
        let mut assign = vec![usize::MAX; r];
        let mut used = vec![false; r];
        if backtrack(a, comp, &reference, 0, &mut assign, &mut used) {
            let nodes = assign.iter().map(|&k| comp[k]).collect();
            return Ok(DynkinComponent { family, rank: r, nodes });
        }
    }
    Err(Error::Invalid(format!("no finite Cartan type matches the component on positions {comp:?}")))
}

fn backtrack(
    a: &[Vec<i64>],
    comp: &[usize],
    reference: &[Vec<i64>],
    k: usize,
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == reference.len() {
        return true;
    }
    for c in 0..comp.len() {
        if used[c] {
            continue;
        }
        let fits = (0..=k).all(|l| {
            let cl = if l == k { c } else { assign[l] };
            a[comp[c]][comp[cl]] == reference[k][l] && a[comp[cl]][comp[c]] == reference[l][k]
        });
        if fits {
            assign[k] = c;
            used[c] = true;
            if backtrack(a, comp, reference, k + 1, assign, used) {
                return true;
            }
            used[c] = false;
        }
    }
    false
}
