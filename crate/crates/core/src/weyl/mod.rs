//! Weyl groups as permutation groups on the root list, with parabolic
//! subgroups, normalizers, twisting by a diagram automorphism and the
//! fixed-point Coxeter groups `W^F`.
//!
//! Products follow function composition: `(uv)(α) = u(v(α))`.

mod coxeter;

pub use coxeter::{recognize, CoxeterFamily, CoxeterType};

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::isotypy::SteinbergDatum;
use crate::lattice::IntMatrix;
use crate::root_datum::{BasedRootDatum, CartanType, Family};

pub const DEFAULT_CAP: usize = 2_100_000;

/// Permutation of root indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(Vec<u16>);

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement((0..n as u16).collect())
    }

    pub fn from_perm(perm: &[usize]) -> Self {
        WeylElement(perm.iter().map(|&x| x as u16).collect())
    }

    pub fn apply(&self, root: usize) -> usize {
        self.0[root] as usize
    }

    pub fn perm(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        WeylElement(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `t ∘ self ∘ t^{-1}` for a root permutation `t`.
    pub fn conjugate_by_perm(&self, t: &[usize]) -> WeylElement {
        let mut out = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[t[i]] = t[j as usize] as u16;
        }
        WeylElement(out)
    }
}

/// Order of the Weyl group of a Cartan type, from the product of its degrees.
pub fn order_from_type(t: &CartanType) -> BigInt {
    let mut order = BigInt::from(1);
    for c in &t.components {
        let n = c.rank as u64;
        let degrees: Vec<u64> = match (c.family, n) {
            (Family::A, _) => (2..=n + 1).collect(),
            (Family::B | Family::C, _) => (1..=n).map(|i| 2 * i).collect(),
            (Family::D, _) => (1..n).map(|i| 2 * i).chain([n]).collect(),
            (Family::E, 6) => vec![2, 5, 6, 8, 9, 12],
            (Family::E, 7) => vec![2, 6, 8, 10, 12, 14, 18],
            (Family::E, _) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            (Family::F, _) => vec![2, 6, 8, 12],
            (Family::G, _) => vec![2, 6],
        };
        for d in degrees {
            order *= d;
        }
    }
    order
}

pub struct WeylGroup {
    based: BasedRootDatum,
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    /// element index of `s_i` for each position `i` of Δ
    simple: Vec<usize>,
}

impl WeylGroup {
    pub fn generate(based: &BasedRootDatum) -> Result<Self> {
        Self::generate_with_cap(based, DEFAULT_CAP)
    }

    pub fn generate_with_cap(based: &BasedRootDatum, cap: usize) -> Result<Self> {
        let datum = based.datum();
        if datum.num_roots() > u16::MAX as usize {
            return Err(Error::Invalid("too many roots".into()));
        }
        let expected = order_from_type(&based.classify()?);
        if expected > BigInt::from(cap) {
            return Err(Error::CapExceeded { what: format!("Weyl group of order {expected}"), cap });
        }
        let gens: Vec<WeylElement> = based
            .simple()
            .iter()
            .map(|&s| {
                datum
                    .reflection_permutation(s)
                    .map(|p| WeylElement::from_perm(&p))
                    .ok_or_else(|| Error::Invalid("reflection does not permute the roots".into()))
            })
            .collect::<Result<_>>()?;
        let id = WeylElement::identity(datum.num_roots());
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut k = 0;
        while k < elements.len() {
            for g in &gens {
                let x = elements[k].compose(g);
                if !index.contains_key(&x) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { what: "Weyl group enumeration".into(), cap });
                    }
                    index.insert(x.clone(), elements.len());
                    elements.push(x);
                }
            }
            k += 1;
        }
        let simple = gens.iter().map(|g| index[g]).collect();
        Ok(WeylGroup { based: based.clone(), elements, index, simple })
    }

    pub fn based(&self) -> &BasedRootDatum {
        &self.based
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Element index of the simple reflection at position `k` of Δ.
    pub fn simple_reflection(&self, k: usize) -> usize {
        self.simple[k]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    /// `a b a^{-1}`
    pub fn conj(&self, a: usize, b: usize) -> usize {
        let ea = &self.elements[a];
        self.index[&ea.compose(&self.elements[b]).compose(&ea.inverse())]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, a: usize) -> usize {
        let w = &self.elements[a];
        self.based.positive_roots().into_iter().filter(|&r| !self.based.is_positive(w.apply(r))).count()
    }

    /// Reduced word (positions of Δ) with `w = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self, a: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = a;
        while w != 0 {
            let e = &self.elements[w];
            let k = (0..self.simple.len())
                .find(|&k| !self.based.is_positive(e.apply(self.based.simple()[k])))
                .expect("non-identity element has a descent");
            word.push(k);
            w = self.mul(w, self.simple[k]);
        }
        word.reverse();
        word
    }

    /// Matrix of the element acting on `X`.
    pub fn matrix(&self, a: usize) -> IntMatrix {
        let datum = self.based.datum();
        let mut m = IntMatrix::identity(datum.rank());
        for k in self.reduced_word(a) {
            let s = datum.reflection(self.based.simple()[k]).expect("simple root in range");
            m = &m * s.matrix();
        }
        m
    }

    /// Subgroup generated by the given elements, as sorted element indices.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut out = vec![0];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort();
        out
    }

    /// `W_J` for positions `J` of Δ.
    pub fn parabolic(&self, subset: &[usize]) -> Vec<usize> {
        let gens: Vec<usize> = subset.iter().map(|&k| self.simple[k]).collect();
        self.closure(&gens)
    }

    /// The longest element `w_J` of `W_J`.
    pub fn longest_element(&self, subset: &[usize]) -> usize {
        let mut w = 0;
        loop {
            let e = &self.elements[w];
            match subset.iter().find(|&&k| self.based.is_positive(e.apply(self.based.simple()[k]))) {
                Some(&k) => w = self.mul(w, self.simple[k]),
                None => return w,
            }
        }
    }

    /// Whether `w` maps the simple roots at positions `subset` onto themselves.
    pub fn stabilizes_simple_set(&self, a: usize, subset: &[usize]) -> bool {
        let roots: HashSet<usize> = subset.iter().map(|&k| self.based.simple()[k]).collect();
        let e = &self.elements[a];
        roots.iter().all(|&r| roots.contains(&e.apply(r)))
    }

    /// Induced permutation of `subset` (as positions of Δ) when `a` stabilizes it.
    pub fn induced_simple_permutation(&self, a: usize, subset: &[usize]) -> Option<Vec<usize>> {
        let e = &self.elements[a];
        subset
            .iter()
            .map(|&k| self.based.simple_position(e.apply(self.based.simple()[k])).filter(|p| subset.contains(p)))
            .collect()
    }

    /// `{w ∈ among : w g w^{-1} ∈ target for all g in gens}`
    pub fn normalizer_within(&self, among: &[usize], gens: &[usize], target: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        for &t in target {
            member[t] = true;
        }
        among.iter().copied().filter(|&w| gens.iter().all(|&g| member[self.conj(w, g)])).collect()
    }

    pub fn normalizer_decomposition(&self, subset: &[usize]) -> Result<HowlettDecomposition> {
        check_subset(subset, self.simple.len())?;
        let all: Vec<usize> = (0..self.order()).collect();
        let w_i = self.parabolic(subset);
        let gens: Vec<usize> = subset.iter().map(|&k| self.simple[k]).collect();
        let n_wi = self.normalizer_within(&all, &gens, &w_i);
        let n_i: Vec<usize> = all.iter().copied().filter(|&w| self.stabilizes_simple_set(w, subset)).collect();
        let check = self.semidirect_check(&w_i, &n_i, &n_wi);
        Ok(HowlettDecomposition { normalizer: n_wi, parabolic: w_i, stabilizer: n_i, check })
    }

    /// `K ∩ H = {1}` and `K·H = N` as sets.
    fn semidirect_check(&self, k: &[usize], h: &[usize], n: &[usize]) -> bool {
        let hs: HashSet<usize> = h.iter().copied().collect();
        if k.iter().any(|&x| x != 0 && hs.contains(&x)) {
            return false;
        }
        if k.len() * h.len() != n.len() {
            return false;
        }
        let ns: HashSet<usize> = n.iter().copied().collect();
        let mut prod = HashSet::with_capacity(n.len());
        for &a in k {
            for &b in h {
                let x = self.mul(a, b);
                if !ns.contains(&x) {
                    return false;
                }
                prod.insert(x);
            }
        }
        prod.len() == n.len()
    }
}

fn check_subset(subset: &[usize], n: usize) -> Result<()> {
    let mut seen = HashSet::new();
    for &k in subset {
        if k >= n || !seen.insert(k) {
            return Err(Error::Invalid(format!("subset entry {k} is out of range or repeated")));
        }
    }
    Ok(())
}

/// `N_W(W_I)`, `W_I`, `N_W(I)` as sorted element indices, and whether
/// `N_W(W_I) = W_I ⋊ N_W(I)` was confirmed.
#[derive(Clone, Debug)]
pub struct HowlettDecomposition {
    pub normalizer: Vec<usize>,
    pub parabolic: Vec<usize>,
    pub stabilizer: Vec<usize>,
    pub check: bool,
}

/// `F(w) = τ w τ^{-1}` for a permutation `τ` of the roots preserving Δ.
#[derive(Clone, Debug)]
pub struct Twist {
    tau: Vec<usize>,
    /// `τ` on positions of Δ
    sigma: Vec<usize>,
    /// element index of `F(w)` for every `w`
    image: Vec<usize>,
}

impl Twist {
    pub fn identity(w: &WeylGroup) -> Twist {
        let n = w.based.datum().num_roots();
        Twist { tau: (0..n).collect(), sigma: (0..w.simple.len()).collect(), image: (0..w.order()).collect() }
    }

    pub fn from_steinberg(w: &WeylGroup, s: &SteinbergDatum) -> Result<Twist> {
        if s.based.datum() != w.based.datum() || s.based.simple() != w.based.simple() {
            return Err(Error::Invalid("Steinberg datum and Weyl group use different based data".into()));
        }
        Self::from_root_permutation(w, s.endo.tau().to_vec())
    }

    /// Twist by a diagram automorphism given on positions of Δ; the root
    /// permutation permutes coefficients in Δ accordingly.
    pub fn from_diagram(w: &WeylGroup, sigma: &[usize]) -> Result<Twist> {
        let b = &w.based;
        let n = b.semisimple_rank();
        if sigma.len() != n {
            return Err(Error::Invalid("sigma must act on all of Delta".into()));
        }
        let lookup: HashMap<Vec<i64>, usize> =
            (0..b.datum().num_roots()).map(|i| (b.coefficients(i).to_vec(), i)).collect();
        let mut tau = Vec::with_capacity(b.datum().num_roots());
        for i in 0..b.datum().num_roots() {
            let c = b.coefficients(i);
            let mut d = vec![0i64; n];
            for k in 0..n {
                d[*sigma.get(k).filter(|&&s| s < n).ok_or_else(|| Error::Invalid("sigma out of range".into()))?] = c[k];
            }
            tau.push(*lookup.get(&d).ok_or_else(|| Error::Invalid("sigma is not a diagram automorphism".into()))?);
        }
        Self::from_root_permutation(w, tau)
    }

    pub fn from_root_permutation(w: &WeylGroup, tau: Vec<usize>) -> Result<Twist> {
        let b = &w.based;
        let sigma: Vec<usize> = b
            .simple()
            .iter()
            .map(|&s| b.simple_position(tau[s]).ok_or_else(|| Error::Invalid("tau does not preserve Delta".into())))
            .collect::<Result<_>>()?;
        for (k, &s) in sigma.iter().enumerate() {
            let img = w.elements[w.simple[k]].conjugate_by_perm(&tau);
            if w.index_of(&img) != Some(w.simple[s]) {
                return Err(Error::Invalid(format!("tau does not carry s_{k} to s_{s}")));
            }
        }
        let image = w
            .elements
            .iter()
            .map(|e| w.index_of(&e.conjugate_by_perm(&tau)).ok_or_else(|| Error::Invalid("tau does not normalize W".into())))
            .collect::<Result<_>>()?;
        Ok(Twist { tau, sigma, image })
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn apply(&self, a: usize) -> usize {
        self.image[a]
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// Order of `F` as an automorphism of `W`.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.image.clone();
        while cur.iter().enumerate().any(|(i, &x)| i != x) {
            cur = cur.iter().map(|&x| self.image[x]).collect();
            k += 1;
        }
        k
    }

    /// `σ`-orbits on positions of Δ, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(&self.sigma, &(0..self.sigma.len()).collect::<Vec<_>>())
    }

    pub fn is_stable(&self, subset: &[usize]) -> bool {
        subset.iter().all(|k| subset.contains(&self.sigma[*k]))
    }
}

/// Orbits of `sigma` restricted to `subset`, each sorted, by smallest member.
pub(crate) fn orbits_of(sigma: &[usize], subset: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = subset.to_vec();
    sorted.sort();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &k in &sorted {
        if !seen.insert(k) {
            continue;
        }
        let mut orbit = vec![k];
        let mut x = sigma[k];
        while x != k {
            seen.insert(x);
            orbit.push(x);
            x = sigma[x];
        }
        orbit.sort();
        out.push(orbit);
    }
    out
}

/// `W^F` with generators `w_J` over the `τ`-orbits `J ⊆ Δ`.
#[derive(Clone, Debug)]
pub struct FixedPointCoxeter {
    /// sorted element indices of `W^F`
    pub elements: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    /// `generators[k] = w_J` for `J = orbits[k]`
    pub generators: Vec<usize>,
    pub coxeter_matrix: Vec<Vec<u32>>,
    pub coxeter_type: CoxeterType,
}

fn coxeter_matrix(w: &WeylGroup, gens: &[usize]) -> Vec<Vec<u32>> {
    gens.iter()
        .map(|&a| gens.iter().map(|&b| if a == b { 1 } else { w.element_order(w.mul(a, b)) as u32 }).collect())
        .collect()
}

pub fn fixed_points(w: &WeylGroup, f: &Twist) -> Result<FixedPointCoxeter> {
    let elements: Vec<usize> = (0..w.order()).filter(|&a| f.apply(a) == a).collect();
    let orbits = f.orbits();
    let generators: Vec<usize> = orbits.iter().map(|j| w.longest_element(j)).collect();
    for &g in &generators {
        if f.apply(g) != g || w.mul(g, g) != 0 {
            return Err(Error::Falsified("a longest element w_J is not an F-fixed involution".into()));
        }
    }
    if w.closure(&generators) != elements {
        return Err(Error::Falsified("the elements w_J do not generate W^F".into()));
    }
    let coxeter_matrix = coxeter_matrix(w, &generators);
    let coxeter_type = recognize(&coxeter_matrix)
        .ok_or_else(|| Error::Falsified("W^F generators do not satisfy a finite Coxeter matrix".into()))?;
    Ok(FixedPointCoxeter { elements, orbits, generators, coxeter_matrix, coxeter_type })
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// The four relative normalizers of a `τ`-stable `I` inside `W^F`.
#[derive(Clone, Debug)]
pub struct RelativeNormalizers {
    pub subset: Vec<usize>,
    /// `N_{W^F}(I)`
    pub stabilizer: Vec<usize>,
    /// `N_{W^F}(I, τ)`: elements conjugating each `w_J` (`J ⊆ I` a `τ`-orbit)
    /// to some `w_{J'}` and keeping `I` positive
    pub orbit_stabilizer: Vec<usize>,
    /// elements conjugating each `w_J` to some `w_{J'}`, without the
    /// positivity condition; this always contains `W_I^F`
    pub literal_conjugators: Vec<usize>,
    /// `N_{W^F}(W_I)`
    pub normalizer: Vec<usize>,
    /// `N_{W^F}(W_I^F)`
    pub fixed_normalizer: Vec<usize>,
    /// `W_I^F`
    pub parabolic_fixed: Vec<usize>,
    pub fixed_order: usize,
    pub checks: Vec<Check>,
}

impl RelativeNormalizers {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Computes the four groups and checks both equalities together with
/// `N_{W^F}(W_I) = W_I^F ⋊ N_{W^F}(I)`. Returns [`Error::Falsified`] if any
/// check fails.
pub fn relative_normalizers(w: &WeylGroup, f: &Twist, fixed: &FixedPointCoxeter, subset: &[usize]) -> Result<RelativeNormalizers> {
    let r = relative_normalizers_report(w, f, fixed, subset)?;
    if let Some(c) = r.checks.iter().find(|c| !c.pass) {
        return Err(Error::Falsified(format!("check {} failed for I = {:?}", c.name, subset)));
    }
    Ok(r)
}

/// As [`relative_normalizers`], but failed checks are recorded in the report
/// instead of producing an error.
pub fn relative_normalizers_report(
    w: &WeylGroup,
    f: &Twist,
    fixed: &FixedPointCoxeter,
    subset: &[usize],
) -> Result<RelativeNormalizers> {
    check_subset(subset, w.simple.len())?;
    if !f.is_stable(subset) {
        return Err(Error::Invalid(format!("I = {subset:?} is not tau-stable")));
    }
    let wf = &fixed.elements;
    let stabilizer: Vec<usize> = wf.iter().copied().filter(|&a| w.stabilizes_simple_set(a, subset)).collect();

    let orbits = orbits_of(&f.sigma, subset);
    let w_js: Vec<usize> = orbits.iter().map(|j| w.longest_element(j)).collect();
    let w_j_set: HashSet<usize> = w_js.iter().copied().collect();
    let literal_conjugators: Vec<usize> =
        wf.iter().copied().filter(|&a| w_js.iter().all(|&g| w_j_set.contains(&w.conj(a, g)))).collect();
    let positive_on_i = |a: usize| subset.iter().all(|&k| w.based.is_positive(w.elements[a].apply(w.based.simple()[k])));
    let orbit_stabilizer: Vec<usize> = literal_conjugators.iter().copied().filter(|&a| positive_on_i(a)).collect();

    let w_i = w.parabolic(subset);
    let gens: Vec<usize> = subset.iter().map(|&k| w.simple[k]).collect();
    let normalizer = w.normalizer_within(wf, &gens, &w_i);

    let wf_set: HashSet<usize> = wf.iter().copied().collect();
    let parabolic_fixed: Vec<usize> = w_i.iter().copied().filter(|a| wf_set.contains(a)).collect();
    let generated = w.closure(&w_js);
    let fixed_normalizer = w.normalizer_within(wf, &w_js, &parabolic_fixed);

    let checks = vec![
        Check { name: "parabolic_fixed_points_generated_by_w_J".into(), pass: generated == parabolic_fixed },
        Check { name: "stabilizer_equals_orbit_stabilizer".into(), pass: stabilizer == orbit_stabilizer },
        Check { name: "fixed_normalizer_equals_normalizer".into(), pass: fixed_normalizer == normalizer },
        Check {
            name: "twisted_howlett_decomposition".into(),
            pass: w.semidirect_check(&parabolic_fixed, &stabilizer, &normalizer),
        },
        Check {
            name: "fixed_point_howlett_decomposition".into(),
            pass: w.semidirect_check(&parabolic_fixed, &orbit_stabilizer, &fixed_normalizer),
        },
    ];
    Ok(RelativeNormalizers {
        subset: subset.to_vec(),
        stabilizer,
        orbit_stabilizer,
        literal_conjugators,
        normalizer,
        fixed_normalizer,
        parabolic_fixed,
        fixed_order: wf.len(),
        checks,
    })
}

/// All `τ`-stable subsets of Δ (as sorted position lists), smallest first.
pub fn stable_subsets(f: &Twist) -> Vec<Vec<usize>> {
    let orbits = f.orbits();
    let mut out = Vec::new();
    for mask in 0u32..(1 << orbits.len()) {
        let mut s: Vec<usize> = (0..orbits.len()).filter(|k| mask >> k & 1 == 1).flat_map(|k| orbits[k].clone()).collect();
        s.sort();
        out.push(s);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
