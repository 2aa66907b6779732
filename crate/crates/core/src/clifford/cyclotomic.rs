//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A number is stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` modulo the
//! cyclotomic polynomial `Φ_n`. Operands with different conductors are
//! lifted to the lcm of their conductors.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `Φ_n` as integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    fn div(num: &[i64], den: &[i64]) -> Vec<i64> {
        let mut r = num.to_vec();
        let dl = den.len();
        let mut q = vec![0i64; num.len() + 1 - dl];
        for i in (0..q.len()).rev() {
            let c = r[i + dl - 1] / den[dl - 1];
            q[i] = c;
            for j in 0..dl {
                r[i + j] -= c * den[j];
            }
        }
        debug_assert!(r.iter().all(|&x| x == 0));
        q
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = div(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count()
}

/// `ζ_n^k` reduced modulo `Φ_n` for `k = 0..n`.
struct PowerTable {
    phi: usize,
    powers: Vec<Vec<i64>>,
}

thread_local! {
    static TABLES: RefCell<HashMap<u32, Rc<PowerTable>>> = RefCell::new(HashMap::new());
}

fn table(n: u32) -> Rc<PowerTable> {
    TABLES.with(|t| {
        if let Some(tab) = t.borrow().get(&n) {
            return tab.clone();
        }
        let phi_poly = cyclotomic_polynomial(n);
        let phi = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Φ_n
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..phi {
                next[i] -= top * phi_poly[i];
            }
            cur = next;
        }
        let tab = Rc::new(PowerTable { phi, powers });
        t.borrow_mut().insert(n, tab.clone());
        tab
    })
}

#[derive(Clone)]
pub struct Cyc {
    n: u32,
    c: Vec<BigRational>,
}

impl Cyc {
    pub fn zero(n: u32) -> Self {
        Cyc { n, c: vec![BigRational::zero(); table(n).phi] }
    }

    pub fn from_rational(n: u32, r: BigRational) -> Self {
        let mut z = Self::zero(n);
        z.c[0] = r;
        z
    }

    pub fn from_int(n: u32, k: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(k)))
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    /// `ζ_n^k`
    pub fn zeta(n: u32, k: i64) -> Self {
        let tab = table(n);
        let k = k.rem_euclid(n as i64) as usize;
        Cyc { n, c: tab.powers[k].iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect() }
    }

    /// `Σ_k coeffs[k]·ζ_n^k` for integer coefficients of any length.
    pub fn from_power_sum(n: u32, coeffs: &[BigInt]) -> Self {
        let tab = table(n);
        let mut out = vec![BigInt::zero(); tab.phi];
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&tab.powers[k % n as usize]) {
                if p != 0 {
                    *o += a * p;
                }
            }
        }
        Cyc { n, c: out.into_iter().map(BigRational::from_integer).collect() }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.c[1..].iter().all(Zero::is_zero).then(|| self.c[0].clone())
    }

    /// Same number written with conductor `m`, a multiple of `self.conductor()`.
    pub fn lift(&self, m: u32) -> Cyc {
        assert!(m % self.n == 0, "conductor {} does not divide {m}", self.n);
        if m == self.n {
            return self.clone();
        }
        let tab = table(m);
        let step = (m / self.n) as usize;
        let mut out = vec![BigRational::zero(); tab.phi];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&tab.powers[(i * step) % m as usize]) {
                if p != 0 {
                    *o += a * BigInt::from(p);
                }
            }
        }
        Cyc { n: m, c: out }
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (a.lift(m), b.lift(m))
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Cyc {
        let tab = table(self.n);
        let n = self.n as i64;
        let mut out = vec![BigRational::zero(); tab.phi];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let e = (i as i64 * k).rem_euclid(n) as usize;
            for (o, &p) in out.iter_mut().zip(&tab.powers[e]) {
                if p != 0 {
                    *o += a * BigInt::from(p);
                }
            }
        }
        Cyc { n: self.n, c: out }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Cyc {
        self.galois(-1)
    }

    pub fn scale(&self, r: &BigRational) -> Cyc {
        Cyc { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    pub fn scale_int(&self, k: &BigInt) -> Cyc {
        Cyc { n: self.n, c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Cyc> {
        if self.is_zero() {
            return None;
        }
        // solve (multiplication by self) · x = 1 column by column
        let phi = self.c.len();
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); phi + 1]; phi];
        for j in 0..phi {
            let col = self * &Cyc::zeta_basis(self.n, j);
            for i in 0..phi {
                m[i][j] = col.c[i].clone();
            }
        }
        m[0][phi] = BigRational::one();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in 0..=phi {
                        let v = &m[col][k] * &f;
                        m[r][k] -= v;
                    }
                }
            }
        }
        Some(Cyc { n: self.n, c: (0..phi).map(|i| m[i][phi].clone()).collect() })
    }

    fn zeta_basis(n: u32, j: usize) -> Cyc {
        let mut z = Cyc::zero(n);
        z.c[j] = BigRational::one();
        z
    }

    pub fn pow(&self, mut e: u32) -> Cyc {
        let mut acc = Cyc::one(self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b) = Cyc::common(self, other);
        a.c == b.c
    }
}

impl Eq for Cyc {}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        if self.n != rhs.n {
            let (a, b) = Cyc::common(self, rhs);
            return &a + &b;
        }
        Cyc { n: self.n, c: self.c.iter().zip(&rhs.c).map(|(x, y)| x + y).collect() }
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        self + &(-rhs)
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        if self.n != rhs.n {
            let (a, b) = Cyc::common(self, rhs);
            return &a * &b;
        }
        let tab = table(self.n);
        let phi = tab.phi;
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = raw[..phi].to_vec();
        for (k, v) in raw.into_iter().enumerate().skip(phi) {
            if v.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&tab.powers[k % self.n as usize]) {
                if p != 0 {
                    *o += &v * BigInt::from(p);
                }
            }
        }
        Cyc { n: self.n, c: out }
    }
}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, rhs: Cyc) -> Cyc {
        &self + &rhs
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, rhs: Cyc) -> Cyc {
        &self - &rhs
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, rhs: Cyc) -> Cyc {
        &self * &rhs
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Written as a sum of powers of `E(n) = exp(2πi/n)`, e.g. `-1-2*E(3)`.
impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return f.write_str(&fmt_rational(&r));
        }
        let mut s = String::new();
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else if s.is_empty() { "" } else { "+" };
            let mag = a.abs();
            let base = match k {
                0 => String::new(),
                1 => format!("E({})", self.n),
                _ => format!("E({})^{}", self.n, k),
            };
            let term = if k == 0 {
                fmt_rational(&mag)
            } else if mag.is_one() {
                base
            } else {
                format!("{}*{}", fmt_rational(&mag), base)
            };
            s.push_str(sign);
            s.push_str(&term);
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Total order on numbers of a fixed conductor, used for canonical sorting.
pub(crate) fn cmp_same_conductor(a: &Cyc, b: &Cyc) -> std::cmp::Ordering {
    let (a, b) = Cyc::common(a, b);
    a.c.cmp(&b.c)
}
