//! p-morphisms `(f, q, τ)` between root data and the isotypies they encode.
//!
//! A [`PMorphism`] with source `R(G')` and target `R(G)` stands for an isotypy
//! `G → G'`. Its lattice map goes the other way, `f: X' → X`, and satisfies
//! `f(τ(α)) = q(α)·α` and `f^T(α^∨) = q(α)·τ(α)^∨` for every root `α` of `G`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{self, IntMatrix, LatticeMap};
use crate::root_datum::{BasedRootDatum, RootDatum};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some(k)` when `c = p^k`.
pub fn p_power_exponent(c: u64, p: u64) -> Option<u32> {
    if c == 0 || p < 2 {
        return None;
    }
    let (mut c, mut k) = (c, 0);
    while c % p == 0 {
        c /= p;
        k += 1;
    }
    (c == 1).then_some(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PMorphism {
    source: RootDatum,
    target: RootDatum,
    f: LatticeMap,
    p: u64,
    /// indexed by roots of the target
    q: Vec<u64>,
    /// target root index ↦ source root index
    tau: Vec<usize>,
}

fn vec_eq(a: &[BigInt], b: &[i64], scale: u64) -> bool {
    a.iter().zip(b).all(|(x, &y)| *x == BigInt::from(y) * BigInt::from(scale))
}

impl PMorphism {
    /// Checks both defining identities and returns the p-morphism.
    pub fn new(source: RootDatum, target: RootDatum, f: LatticeMap, p: u64, q: Vec<u64>, tau: Vec<usize>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if f.domain().rank != source.rank() || f.codomain().rank != target.rank() {
            return Err(Error::Dimension(format!(
                "f must map Z^{} to Z^{}, got a {}x{} matrix",
                source.rank(),
                target.rank(),
                f.matrix().rows(),
                f.matrix().cols()
            )));
        }
        let n = target.num_roots();
        if source.num_roots() != n || q.len() != n || tau.len() != n {
            return Err(Error::NotPMorphism("root counts of source and target differ".into()));
        }
        let mut hit = vec![false; n];
        for (a, &t) in tau.iter().enumerate() {
            if t >= n || std::mem::replace(&mut hit[t], true) {
                return Err(Error::NotPMorphism(format!("tau is not a bijection at root {a}")));
            }
        }
        let ft = f.transpose();
        for a in 0..n {
            if p_power_exponent(q[a], p).is_none() {
                return Err(Error::NotPMorphism(format!("q at root {a} is {} which is not a power of {p}", q[a])));
            }
            let t = tau[a];
            if !vec_eq(&f.apply_i64(source.root(t)), target.root(a), q[a]) {
                return Err(Error::NotPMorphism(format!("f(tau(alpha)) != q(alpha) alpha at root {a}")));
            }
            if !vec_eq(&ft.apply_i64(target.coroot(a)), source.coroot(t), q[a]) {
                return Err(Error::NotPMorphism(format!("f^T(alpha^vee) != q(alpha) tau(alpha)^vee at root {a}")));
            }
        }
        Ok(PMorphism { source, target, f, p, q, tau })
    }

    /// Recovers `q` and `τ` from `f`: for each root `α` of the target the
    /// covector `f^T(α^∨)` must be a p-power multiple of a source coroot.
    pub fn infer(f: LatticeMap, p: u64, source: RootDatum, target: RootDatum) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if f.domain().rank != source.rank() || f.codomain().rank != target.rank() {
            return Err(Error::Dimension(format!(
                "f must be a {}x{} matrix, got {}x{}",
                target.rank(),
                source.rank(),
                f.matrix().rows(),
                f.matrix().cols()
            )));
        }
        if source.num_roots() != target.num_roots() {
            return Err(Error::NotPMorphism("root counts of source and target differ".into()));
        }
        let ft = f.transpose();
        let mut q = Vec::with_capacity(target.num_roots());
        let mut tau = Vec::with_capacity(target.num_roots());
        for a in 0..target.num_roots() {
            let v = ft.apply_i64(target.coroot(a));
            let found = (0..source.num_roots()).find_map(|j| positive_multiple(&v, source.coroot(j)).map(|c| (j, c)));
            let Some((j, c)) = found else {
                return Err(Error::NotPMorphism(format!("no source coroot on the ray of f^T(alpha^vee) for root {a}")));
            };
            if p_power_exponent(c, p).is_none() {
                return Err(Error::NotPMorphism(format!("scalar {c} at root {a} is not a power of {p}")));
            }
            q.push(c);
            tau.push(j);
        }
        Self::new(source, target, f, p, q, tau)
    }

    pub fn identity(datum: &RootDatum, p: u64) -> Result<Self> {
        let n = datum.num_roots();
        Self::new(datum.clone(), datum.clone(), LatticeMap::identity(datum.rank()), p, vec![1; n], (0..n).collect())
    }

    /// `f = p·id`, the standard Frobenius.
    pub fn frobenius(datum: &RootDatum, p: u64) -> Result<Self> {
        let n = datum.num_roots();
        Self::new(datum.clone(), datum.clone(), LatticeMap::scalar(datum.rank(), p), p, vec![p; n], (0..n).collect())
    }

    /// Endomorphism `p·P_σ` of a datum built by
    /// [`from_cartan`](crate::root_datum::from_cartan), where `P_σ` permutes
    /// the standard basis as `σ` permutes Δ. `sigma` is given on positions of Δ.
    pub fn from_diagram_automorphism(based: &BasedRootDatum, sigma: &[usize], p: u64) -> Result<Self> {
        let r = based.datum().rank();
        if sigma.len() != based.semisimple_rank() || r != sigma.len() {
            return Err(Error::Invalid("diagram automorphism needs a semisimple datum with sigma on all of Delta".into()));
        }
        let mut m = IntMatrix::zeros(r, r);
        for (i, &s) in sigma.iter().enumerate() {
            if s >= r {
                return Err(Error::Invalid("sigma out of range".into()));
            }
            m.set(s, i, BigInt::from(p));
        }
        Self::infer(LatticeMap::from_matrix(m), p, based.datum().clone(), based.datum().clone())
    }

    pub fn source(&self) -> &RootDatum {
        &self.source
    }

    pub fn target(&self) -> &RootDatum {
        &self.target
    }

    pub fn f(&self) -> &LatticeMap {
        &self.f
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> &[u64] {
        &self.q
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn classify(&self) -> IsotypyProfile {
        let c = lattice::cokernel(&self.f);
        let ct = lattice::cokernel(&self.f.transpose());
        IsotypyProfile {
            kernel_connected: !c.has_p_prime_torsion(self.p),
            kernel_finite: c.is_finite(),
            surjective: ct.is_finite(),
            injective: c.is_finite_p_group(self.p),
        }
    }

    /// The p-morphism of the dual isotypy, between the dual data, with `f^T`.
    pub fn dual(&self) -> PMorphism {
        let n = self.tau.len();
        let mut inv = vec![0; n];
        for (a, &t) in self.tau.iter().enumerate() {
            inv[t] = a;
        }
        let q = (0..n).map(|j| self.q[inv[j]]).collect();
        PMorphism {
            source: self.target.dual(),
            target: self.source.dual(),
            f: self.f.transpose(),
            p: self.p,
            q,
            tau: inv,
        }
    }
}

/// `Some(c)` with `c ≥ 1` when `v = c·w`.
fn positive_multiple(v: &[BigInt], w: &[i64]) -> Option<u64> {
    let k = w.iter().position(|&x| x != 0)?;
    let wk = BigInt::from(w[k]);
    if !(&v[k] % &wk).is_zero() {
        return None;
    }
    let c = &v[k] / &wk;
    if c <= BigInt::zero() {
        return None;
    }
    v.iter().zip(w).all(|(x, &y)| *x == &c * y).then(|| c.to_u64()).flatten()
}

/// Composite of `b` after `a`: requires `a.source == b.target`, giving
/// `f = a.f ∘ b.f`, `τ = b.τ ∘ a.τ`, `q(α) = a.q(α)·b.q(a.τ(α))`.
pub fn compose(b: &PMorphism, a: &PMorphism) -> Result<PMorphism> {
    if a.source != b.target {
        return Err(Error::Invalid("compose: the source of the inner map must equal the target of the outer one".into()));
    }
    if a.p != b.p {
        return Err(Error::Invalid(format!("compose: primes differ ({} and {})", a.p, b.p)));
    }
    let f = a.f.compose(&b.f)?;
    let n = a.tau.len();
    let mut q = Vec::with_capacity(n);
    let mut tau = Vec::with_capacity(n);
    for alpha in 0..n {
        let mid = a.tau[alpha];
        q.push(
            a.q[alpha]
                .checked_mul(b.q[mid])
                .ok_or_else(|| Error::Invalid("q overflows u64".into()))?,
        );
        tau.push(b.tau[mid]);
    }
    PMorphism::new(b.source.clone(), a.target.clone(), f, a.p, q, tau)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IsotypyProfile {
    pub kernel_connected: bool,
    pub kernel_finite: bool,
    pub surjective: bool,
    pub injective: bool,
}

/// Checks the duality equivalences between the profiles of `m` and `m.dual()`.
pub fn check_duality(m: &PMorphism) -> Result<()> {
    let a = m.classify();
    let b = m.dual().classify();
    let ok = a.kernel_connected == b.kernel_connected
        && a.surjective == b.kernel_finite
        && a.injective == (b.surjective && b.kernel_connected);
    if ok {
        Ok(())
    } else {
        Err(Error::Falsified(format!("duality equivalences fail: {a:?} vs dual {b:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SteinbergKind {
    Split,
    Twisted,
    VeryTwisted,
}

#[derive(Clone, Debug)]
pub struct SteinbergDatum {
    pub based: BasedRootDatum,
    pub endo: PMorphism,
    pub kind: SteinbergKind,
    /// smallest `m` with `f^m = p^a·id`
    pub m: u32,
    pub a: u32,
}

impl SteinbergDatum {
    /// `τ` restricted to Δ, as a permutation of positions in Δ.
    pub fn tau_on_simple(&self) -> Vec<usize> {
        let simple = self.based.simple();
        simple
            .iter()
            .map(|&s| self.based.simple_position(self.endo.tau()[s]).expect("tau preserves Delta"))
            .collect()
    }
}

pub const DEFAULT_STEINBERG_BOUND: u32 = 24;

/// Classifies an endo-p-morphism compatible with the base as split, twisted
/// or very twisted, and finds the power that is a Frobenius.
pub fn classify_steinberg(based: &BasedRootDatum, m: &PMorphism, bound: u32) -> Result<SteinbergDatum> {
    if m.source() != based.datum() || m.target() != based.datum() {
        return Err(Error::Invalid("Steinberg endomorphism must have source = target = the based datum".into()));
    }
    for &s in based.simple() {
        if based.simple_position(m.tau()[s]).is_none() {
            return Err(Error::Invalid(format!("tau does not preserve Delta: simple root {s} leaves it")));
        }
    }
    let prof = m.classify();
    if !(prof.injective && prof.surjective) {
        return Err(Error::Invalid("Steinberg endomorphism must be injective and surjective".into()));
    }
    let mut power = IntMatrix::identity(based.datum().rank());
    let mut found = None;
    for k in 1..=bound {
        power = &power * m.f().matrix();
        if let Some(c) = power.as_scalar() {
            if let Some(a) = c.to_u64().and_then(|c| p_power_exponent(c, m.p())) {
                if a >= 1 {
                    found = Some((k, a));
                    break;
                }
            }
        }
    }
    let Some((k, a)) = found else {
        return Err(Error::Invalid(format!("not Steinberg-like: no power up to {bound} is a p-power scalar")));
    };
    let q_constant = m.q().windows(2).all(|w| w[0] == w[1]);
    let tau_id = m.tau().iter().enumerate().all(|(i, &t)| i == t);
    let kind = match (tau_id, q_constant) {
        (_, false) => SteinbergKind::VeryTwisted,
        (true, true) => SteinbergKind::Split,
        (false, true) => SteinbergKind::Twisted,
    };
    Ok(SteinbergDatum { based: based.clone(), endo: m.clone(), kind, m: k, a })
}

/// Factorization `m = ψ1 ∘ ψ ∘ ψ2` (on lattices `f = f_ψ1 ∘ f_ψ ∘ f_ψ2`) with
/// `ψ1`, `ψ2` surjective with connected kernel and `ψ` injective.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub psi2: PMorphism,
    pub psi: PMorphism,
    pub psi1: PMorphism,
}

impl Factorization {
    pub fn recompose(&self) -> Result<PMorphism> {
        compose(&self.psi2, &compose(&self.psi, &self.psi1)?)
    }
}

/// Builds the factorization through the middle lattice `X' ⊕ X` with
/// `f_ψ2(x') = (x', 0)`, `f_ψ(x', x) = f(x') + Q·x` and `f_ψ1 = id`, where
/// `Q` is the largest value of `q`. Injective inputs factor trivially.
pub fn factor_isotypy(m: &PMorphism) -> Result<Factorization> {
    let p = m.p();
    if m.classify().injective {
        return Ok(Factorization {
            psi2: PMorphism::identity(m.source(), p)?,
            psi: m.clone(),
            psi1: PMorphism::identity(m.target(), p)?,
        });
    }
    let (rs, rt) = (m.source().rank(), m.target().rank());
    let big_q = m.q().iter().copied().max().unwrap_or(1);
    let n = m.target().num_roots();
    let mut inv = vec![0; n];
    for (a, &t) in m.tau().iter().enumerate() {
        inv[t] = a;
    }
    let roots: Vec<Vec<i64>> = m
        .source()
        .roots()
        .iter()
        .map(|b| b.iter().copied().chain(std::iter::repeat(0).take(rt)).collect())
        .collect();
    let coroots: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let a = inv[j];
            let scale = (big_q / m.q()[a]) as i64;
            m.source().coroot(j).iter().copied().chain(m.target().coroot(a).iter().map(|x| x * scale)).collect()
        })
        .collect();
    let middle = RootDatum::new(rs + rt, roots, coroots)?;

    let mut inc = IntMatrix::zeros(rs + rt, rs);
    for i in 0..rs {
        inc.set(i, i, BigInt::one());
    }
    let f_psi = m.f().matrix().hconcat(&IntMatrix::scalar(rt, big_q));
    let psi2 = PMorphism::new(m.source().clone(), middle.clone(), LatticeMap::from_matrix(inc), p, vec![1; n], (0..n).collect())?;
    let psi = PMorphism::new(middle, m.target().clone(), LatticeMap::from_matrix(f_psi), p, m.q().to_vec(), m.tau().to_vec())?;
    let psi1 = PMorphism::identity(m.target(), p)?;
    Ok(Factorization { psi2, psi, psi1 })
}
