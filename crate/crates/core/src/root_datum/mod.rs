//! Root data `(X, Φ, X^∨, Φ^∨)` on standard lattices, based root data, and
//! recognition of their Cartan types.
//!
//! Roots and coroots are stored index-aligned: `coroots[i]` is the coroot of
//! `roots[i]`. The pairing is the dot product.

mod builders;
mod cartan;

pub use builders::{direct_sum, from_cartan, gl, gl2, gl3, pgl2, sl2, standard, torus, Isogeny};
pub use cartan::{reference_cartan, CartanType, DynkinComponent, Family};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{self, IntMatrix, LatticeMap};

/// Which defining property of a root datum a violation concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Shape problems: mismatched lengths, zero or duplicate roots.
    Structure,
    /// `⟨α, α^∨⟩ = 2`.
    Pairing,
    /// `2α ∉ Φ`.
    NoDoubles,
    /// `Φ`, `Φ^∨` stable under the reflections `s_α`, `s_α^∨`.
    ReflectionStable,
    /// No multiples `cα ∈ Φ` with `c ∉ {±1, ±2}` (the `±2` case is [`Axiom::NoDoubles`]).
    Reduced,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Structure => "structure",
            Axiom::Pairing => "(i)",
            Axiom::NoDoubles => "(ii)",
            Axiom::ReflectionStable => "(iii)",
            Axiom::Reduced => "reduced",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    /// Index of the witness root, when there is one.
    pub root: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root {
            Some(r) => write!(f, "axiom {} at root {}: {}", self.axiom, r, self.detail),
            None => write!(f, "axiom {}: {}", self.axiom, self.detail),
        }
    }
}

/// A root datum with `X = X^∨ = Z^rank`.
#[derive(Clone)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, usize>,
    co_lookup: HashMap<Vec<i64>, usize>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.roots == other.roots && self.coroots == other.coroots
    }
}

impl Eq for RootDatum {}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("rank", &self.rank)
            .field("roots", &self.roots)
            .field("coroots", &self.coroots)
            .finish()
    }
}

pub fn pairing(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

impl RootDatum {
    /// Assembles a datum without checking the axioms, only vector shapes.
    /// Use [`RootDatum::validate`] to check it, or [`RootDatum::new`].
    pub fn from_parts(rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>) -> Result<Self> {
        if roots.iter().chain(&coroots).any(|v| v.len() != rank) {
            return Err(Error::Dimension(format!("every root and coroot must lie in Z^{rank}")));
        }
        let lookup = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let co_lookup = coroots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Ok(RootDatum { rank, roots, coroots, lookup, co_lookup })
    }

    /// Assembles and validates a datum.
    pub fn new(rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>) -> Result<Self> {
        let d = Self::from_parts(rank, roots, coroots)?;
        let v = d.validate();
        if v.is_empty() {
            Ok(d)
        } else {
            Err(Error::Axiom(v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")))
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub fn coroot_index(&self, v: &[i64]) -> Option<usize> {
        self.co_lookup.get(v).copied()
    }

    /// Index of `-roots[i]`. Only meaningful for valid data.
    pub fn negative(&self, i: usize) -> Option<usize> {
        let neg: Vec<i64> = self.roots[i].iter().map(|x| -x).collect();
        self.root_index(&neg)
    }

    /// Checks every axiom and returns all violations found (empty when valid).
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.roots.len();
        if self.coroots.len() != n {
            out.push(Violation {
                axiom: Axiom::Structure,
                root: None,
                detail: format!("{} roots but {} coroots", n, self.coroots.len()),
            });
            return out;
        }
        if self.lookup.len() != n || self.co_lookup.len() != n {
            out.push(Violation { axiom: Axiom::Structure, root: None, detail: "duplicate root or coroot".into() });
        }
        for i in 0..n {
            if self.roots[i].iter().all(|&x| x == 0) || self.coroots[i].iter().all(|&x| x == 0) {
                out.push(Violation { axiom: Axiom::Structure, root: Some(i), detail: "zero root or coroot".into() });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for i in 0..n {
            let p = pairing(&self.roots[i], &self.coroots[i]);
            if p != 2 {
                out.push(Violation {
                    axiom: Axiom::Pairing,
                    root: Some(i),
                    detail: format!("<alpha, alpha^vee> = {p}"),
                });
            }
        }
        for i in 0..n {
            let double: Vec<i64> = self.roots[i].iter().map(|x| 2 * x).collect();
            if let Some(j) = self.root_index(&double) {
                out.push(Violation { axiom: Axiom::NoDoubles, root: Some(i), detail: format!("2 alpha is root {j}") });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if let Some(c) = integer_multiple(&self.roots[j], &self.roots[i]) {
                    if c.abs() > 2 {
                        out.push(Violation {
                            axiom: Axiom::Reduced,
                            root: Some(i),
                            detail: format!("root {j} is {c} times this root"),
                        });
                    }
                }
            }
        }
        if out.iter().any(|v| v.axiom == Axiom::Pairing) {
            return out;
        }
        'outer: for i in 0..n {
            for j in 0..n {
                let r = self.reflect_vec(i, &self.roots[j]);
                let c = self.coreflect_vec(i, &self.coroots[j]);
                let ri = self.root_index(&r);
                let ci = self.coroot_index(&c);
                match (ri, ci) {
                    (Some(a), Some(b)) if a == b => {}
                    (None, _) => {
                        out.push(Violation {
                            axiom: Axiom::ReflectionStable,
                            root: Some(i),
                            detail: format!("s_alpha maps root {j} to {r:?}, not a root"),
                        });
                        continue 'outer;
                    }
                    (_, None) => {
                        out.push(Violation {
                            axiom: Axiom::ReflectionStable,
                            root: Some(i),
                            detail: format!("s_alpha^vee maps coroot {j} to {c:?}, not a coroot"),
                        });
                        continue 'outer;
                    }
                    _ => {
                        out.push(Violation {
                            axiom: Axiom::ReflectionStable,
                            root: Some(i),
                            detail: format!("reflected root {j} and reflected coroot {j} are not paired"),
                        });
                        continue 'outer;
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `s_i(χ) = χ - <χ, α_i^∨> α_i` applied to a vector.
    pub fn reflect_vec(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let c = pairing(v, &self.coroots[i]);
        v.iter().zip(&self.roots[i]).map(|(x, a)| x - c * a).collect()
    }

    /// `s_i^∨(γ) = γ - <α_i, γ> α_i^∨` applied to a covector.
    pub fn coreflect_vec(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let c = pairing(&self.roots[i], v);
        v.iter().zip(&self.coroots[i]).map(|(x, a)| x - c * a).collect()
    }

    /// Matrix of the reflection `s_i` on `X`.
    pub fn reflection(&self, i: usize) -> Result<LatticeMap> {
        if i >= self.roots.len() {
            return Err(Error::Invalid(format!("root index {i} out of range")));
        }
        let n = self.rank;
        let mut m = IntMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let delta = i64::from(r == c);
                m.set(r, c, BigInt::from(delta - self.roots[i][r] * self.coroots[i][c]));
            }
        }
        Ok(LatticeMap::from_matrix(m))
    }

    /// Permutation of root indices induced by `s_i`.
    pub fn reflection_permutation(&self, i: usize) -> Option<Vec<usize>> {
        (0..self.roots.len()).map(|j| self.root_index(&self.reflect_vec(i, &self.roots[j]))).collect()
    }

    /// The dual datum `(X^∨, Φ^∨, X, Φ)`.
    pub fn dual(&self) -> RootDatum {
        RootDatum {
            rank: self.rank,
            roots: self.coroots.clone(),
            coroots: self.roots.clone(),
            lookup: self.co_lookup.clone(),
            co_lookup: self.lookup.clone(),
        }
    }

    /// Transports the datum along a unimodular change of basis `g` of `X`
    /// (roots map by `g`, coroots by `g^{-T}`).
    pub fn change_basis(&self, g: &IntMatrix, g_inv: &IntMatrix) -> Result<RootDatum> {
        let to_i64 = |v: Vec<BigInt>| -> Result<Vec<i64>> {
            v.into_iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::Invalid("coordinate overflow".into())))
                .collect()
        };
        let ginv_t = g_inv.transpose();
        let roots = self.roots.iter().map(|r| to_i64(g.apply_i64(r))).collect::<Result<Vec<_>>>()?;
        let coroots = self.coroots.iter().map(|r| to_i64(ginv_t.apply_i64(r))).collect::<Result<Vec<_>>>()?;
        RootDatum::from_parts(self.rank, roots, coroots)
    }
}

/// `Some(c)` if `v = c·w` for an integer `c`.
fn integer_multiple(v: &[i64], w: &[i64]) -> Option<i64> {
    let k = w.iter().position(|&x| x != 0)?;
    if v[k] % w[k] != 0 {
        return None;
    }
    let c = v[k] / w[k];
    v.iter().zip(w).all(|(a, b)| *a == c * b).then_some(c)
}

/// A root datum together with a choice of simple roots `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedRootDatum {
    datum: RootDatum,
    simple: Vec<usize>,
    /// coefficients of every root in the basis Δ
    coefficients: Vec<Vec<i64>>,
}

impl BasedRootDatum {
    /// Validates the datum and checks that `simple` is a base: linearly
    /// independent, with every root an integer combination of one sign.
    pub fn new(datum: RootDatum, simple: Vec<usize>) -> Result<Self> {
        let violations = datum.validate();
        if !violations.is_empty() {
            return Err(Error::Axiom(violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")));
        }
        if simple.iter().any(|&i| i >= datum.num_roots()) {
            return Err(Error::Invalid("simple root index out of range".into()));
        }
        let basis: Vec<Vec<BigInt>> = simple.iter().map(|&i| lattice::to_big(datum.root(i))).collect();
        if !basis.is_empty() {
            let m = IntMatrix::from_columns(&basis, datum.rank()).expect("shape");
            if lattice::smith_normal_form(&m).rank() != simple.len() {
                return Err(Error::Invalid("simple roots are linearly dependent".into()));
            }
        }
        let mut coefficients = Vec::with_capacity(datum.num_roots());
        for (i, r) in datum.roots().iter().enumerate() {
            let c = lattice::solve_in_span(&basis, &lattice::to_big(r))
                .ok_or_else(|| Error::Invalid(format!("root {i} is not an integer combination of the simple roots")))?;
            let c: Vec<i64> = c.iter().map(|x| x.to_i64().expect("small coefficient")).collect();
            if c.iter().any(|&x| x > 0) && c.iter().any(|&x| x < 0) {
                return Err(Error::Invalid(format!("root {i} has coefficients of both signs")));
            }
            coefficients.push(c);
        }
        Ok(BasedRootDatum { datum, simple, coefficients })
    }

    /// Chooses positive roots by a generic linear functional and takes the
    /// indecomposable ones as simple roots.
    pub fn with_default_base(datum: RootDatum) -> Result<Self> {
        let violations = datum.validate();
        if !violations.is_empty() {
            return Err(Error::Axiom(violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")));
        }
        let bound = datum.roots().iter().flatten().map(|x| x.unsigned_abs()).max().unwrap_or(0) as i128;
        let base = 2 * bound + 1;
        let height = |v: &[i64]| -> i128 {
            let mut w = 1i128;
            let mut s = 0i128;
            for &x in v {
                s += x as i128 * w;
                w *= base;
            }
            s
        };
        let positive: Vec<usize> = (0..datum.num_roots()).filter(|&i| height(datum.root(i)) > 0).collect();
        let is_pos = |v: &[i64]| datum.root_index(v).is_some_and(|j| height(datum.root(j)) > 0);
        let mut simple: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&i| {
                !positive.iter().any(|&j| {
                    let d: Vec<i64> = datum.root(i).iter().zip(datum.root(j)).map(|(a, b)| a - b).collect();
                    is_pos(&d)
                })
            })
            .collect();
        simple.sort();
        Self::new(datum, simple)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    /// Coefficients of root `i` in the basis Δ (ordered as `simple()`).
    pub fn coefficients(&self, i: usize) -> &[i64] {
        &self.coefficients[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.coefficients[i].iter().any(|&x| x > 0)
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coefficients[i].iter().sum()
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.datum.num_roots()).filter(|&i| self.is_positive(i)).collect()
    }

    /// Position of a root index within Δ, if simple.
    pub fn simple_position(&self, root: usize) -> Option<usize> {
        self.simple.iter().position(|&s| s == root)
    }

    /// `a_ij = <α_i, α_j^∨>` over Δ.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple
            .iter()
            .map(|&i| self.simple.iter().map(|&j| pairing(self.datum.root(i), self.datum.coroot(j))).collect())
            .collect()
    }

    pub fn classify(&self) -> Result<CartanType> {
        CartanType::from_cartan_matrix(&self.cartan_matrix(), self.datum.rank())
    }

    /// Based dual datum (simple coroots form a base of the dual root system).
    pub fn dual(&self) -> Result<BasedRootDatum> {
        BasedRootDatum::new(self.datum.dual(), self.simple.clone())
    }

    /// `Φ_I = Φ ∩ Z·I` for `subset` given as positions into Δ, as a based
    /// datum on the same lattice with simple roots `I`.
    pub fn root_subsystem(&self, subset: &[usize]) -> Result<RootSubsystem> {
        if subset.iter().any(|&k| k >= self.simple.len()) {
            return Err(Error::Invalid("subset position out of range".into()));
        }
        let gens: Vec<Vec<BigInt>> = subset.iter().map(|&k| lattice::to_big(self.datum.root(self.simple[k]))).collect();
        let sat = lattice::saturation(&gens, self.datum.rank())?;
        let mut parent_roots = Vec::new();
        for (i, r) in self.datum.roots().iter().enumerate() {
            let r = lattice::to_big(r);
            if lattice::solve_in_span(&sat, &r).is_some() && lattice::solve_in_span(&gens, &r).is_some() {
                parent_roots.push(i);
            }
        }
        let roots = parent_roots.iter().map(|&i| self.datum.root(i).to_vec()).collect();
        let coroots = parent_roots.iter().map(|&i| self.datum.coroot(i).to_vec()).collect();
        let sub = RootDatum::from_parts(self.datum.rank(), roots, coroots)?;
        let simple = subset
            .iter()
            .map(|&k| parent_roots.iter().position(|&p| p == self.simple[k]).expect("simple root lies in its span"))
            .collect();
        Ok(RootSubsystem { based: BasedRootDatum::new(sub, simple)?, parent_roots })
    }
}

/// Result of [`BasedRootDatum::root_subsystem`].
#[derive(Clone, Debug)]
pub struct RootSubsystem {
    pub based: BasedRootDatum,
    /// `parent_roots[i]` is the index in the parent datum of the subsystem's root `i`.
    pub parent_roots: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_validates() {
        let d = RootDatum::from_parts(1, vec![vec![2], vec![-2]], vec![vec![1], vec![-1]]).unwrap();
        assert!(d.is_valid());
    }

    #[test]
    fn wrong_coroot_fails_axiom_one() {
        let d = RootDatum::from_parts(1, vec![vec![2], vec![-2]], vec![vec![2], vec![-1]]).unwrap();
        let v = d.validate();
        assert_eq!(v[0].axiom, Axiom::Pairing);
        assert_eq!(v[0].root, Some(0));
        assert!(v[0].detail.contains('4'));
    }

    #[test]
    fn gl2_validates_and_reflection_is_swap() {
        let d = RootDatum::from_parts(2, vec![vec![1, -1], vec![-1, 1]], vec![vec![1, -1], vec![-1, 1]]).unwrap();
        assert!(d.is_valid());
        let s = d.reflection(0).unwrap();
        assert_eq!(s.matrix(), &IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap());
        assert!(d.reflection(5).is_err());
    }

    #[test]
    fn reflections_are_involutions() {
        let b = standard("B3", Isogeny::SimplyConnected).unwrap();
        let d = b.datum();
        for i in 0..d.num_roots() {
            let s = d.reflection(i).unwrap();
            assert!(s.compose(&s).unwrap().matrix().is_identity());
        }
    }

    #[test]
    fn sl2_dual_is_pgl2() {
        assert_eq!(sl2().datum().dual(), *pgl2().datum());
        let g = gl2();
        assert_eq!(g.datum().dual().dual(), *g.datum());
        // GL2 on Z^2 has roots equal to coroots, so it is literally self-dual
        assert_eq!(g.datum().dual(), *g.datum());
    }

    #[test]
    fn doubled_root_is_axiom_two() {
        let d = RootDatum::from_parts(
            1,
            vec![vec![1], vec![-1], vec![2], vec![-2]],
            vec![vec![2], vec![-2], vec![1], vec![-1]],
        )
        .unwrap();
        let axioms: Vec<Axiom> = d.validate().iter().map(|v| v.axiom).collect();
        assert!(axioms.iter().all(|&a| a == Axiom::NoDoubles));
        assert!(!axioms.is_empty());
    }

    #[test]
    fn tripled_root_is_not_reduced() {
        let d = RootDatum::from_parts(
            1,
            vec![vec![1], vec![-1], vec![3], vec![-3]],
            vec![vec![2], vec![-2], vec![1], vec![-1]],
        )
        .unwrap();
        assert!(d.validate().iter().any(|v| v.axiom == Axiom::Reduced));
    }

    #[test]
    fn subsystem_examples() {
        let a2 = standard("A2", Isogeny::SimplyConnected).unwrap();
        let full = a2.root_subsystem(&[0, 1]).unwrap();
        assert_eq!(full.based.datum().num_roots(), 6);
        let one = a2.root_subsystem(&[0]).unwrap();
        assert_eq!(one.based.datum().num_roots(), 2);

        let b2 = standard("B2", Isogeny::Adjoint).unwrap();
        let short = (0..2).find(|&k| {
            let i = b2.simple()[k];
            pairing(b2.datum().root(i), b2.datum().coroot(i)) == 2 && b2.cartan_matrix()[k][1 - k] == -1
        });
        let short = short.unwrap();
        let sub = b2.root_subsystem(&[short]).unwrap();
        assert_eq!(sub.based.datum().num_roots(), 2);
    }

    #[test]
    fn default_base_recovers_a_base() {
        let b = standard("G2", Isogeny::Adjoint).unwrap();
        let rebased = BasedRootDatum::with_default_base(b.datum().clone()).unwrap();
        assert_eq!(rebased.semisimple_rank(), 2);
        assert_eq!(rebased.classify().unwrap().label(), "G2");
    }
}
