//! Character tables by simultaneous eigenvectors of the class matrices,
//! in exact cyclotomic arithmetic. Classes are computed here by brute force
//! conjugation and do not use the library's class or table code.

use levikit::clifford::{Cyc, Perm, PermGroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub struct OracleTable {
    pub reps: Vec<Perm>,
    pub sizes: Vec<usize>,
    /// one row per irreducible, indexed by the classes above
    pub rows: Vec<Vec<Cyc>>,
    pub exponent: u32,
}

impl OracleTable {
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.rows.iter().map(|r| r[0].to_rational().unwrap().to_integer().to_i64().unwrap()).collect();
        d.sort();
        d
    }

    pub fn class_of(&self, g: &PermGroup, x: &Perm) -> usize {
        let cls = brute_classes(g);
        let i = g.index_of(x).expect("element of the group");
        cls.iter().position(|c| c.contains(&i)).unwrap()
    }
}

/// Classes as element-index lists; the first class is the identity.
pub fn brute_classes(g: &PermGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut cls: Vec<usize> = g
            .elements()
            .iter()
            .map(|h| g.index_of(&(&(&h.inverse() * g.element(x)) * h)).unwrap())
            .collect();
        cls.sort();
        cls.dedup();
        for &c in &cls {
            seen[c] = true;
        }
        out.push(cls);
    }
    out
}

fn rref_nullspace(mut a: Vec<Vec<Cyc>>, cols: usize, e: u32) -> Vec<Vec<Cyc>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inverse().unwrap();
        a[r] = a[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let sub: Vec<Cyc> = a[r].iter().map(|x| x * &f).collect();
                a[i] = a[i].iter().zip(&sub).map(|(x, y)| x - y).collect();
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Cyc::zero(e); cols];
            v[f] = Cyc::one(e);
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -&a[k][f];
            }
            v
        })
        .collect()
}

fn char_poly(m: &[Vec<i64>]) -> Vec<BigRational> {
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    s += &a[i][l] * &mk[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        mk = next;
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn multisets(o: usize, d: usize, out: &mut Vec<Vec<usize>>) {
    fn rec(o: usize, left: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for t in start..o {
            cur.push(t);
            rec(o, left - 1, t, cur, out);
            cur.pop();
        }
    }
    rec(o, d, 0, &mut Vec::new(), out);
}

/// Exact eigenvalues of the class matrix, from the candidates `|C|·s/d`
/// with `s` a sum of `d` roots of unity of order dividing `o`.
fn eigenvalues(m: &[Vec<i64>], size: usize, o: usize, degrees: &[usize], e: u32) -> Vec<Cyc> {
    let poly = char_poly(m);
    let pf: Vec<f64> = poly.iter().map(|c| c.to_f64().unwrap()).collect();
    let mut found: Vec<Cyc> = Vec::new();
    for &d in degrees {
        let mut ms = Vec::new();
        multisets(o, d, &mut ms);
        for s in ms {
            let (mut re, mut im) = (0.0f64, 0.0f64);
            for &t in &s {
                let ang = 2.0 * std::f64::consts::PI * t as f64 / o as f64;
                re += ang.cos();
                im += ang.sin();
            }
            let (lre, lim) = (re * size as f64 / d as f64, im * size as f64 / d as f64);
            let (mut pr, mut pi, mut scale) = (0.0, 0.0, 0.0);
            let absl = (lre * lre + lim * lim).sqrt();
            for c in pf.iter().rev() {
                let (nr, ni) = (pr * lre - pi * lim + c, pr * lim + pi * lre);
                pr = nr;
                pi = ni;
                scale = scale * absl + c.abs();
            }
            if (pr * pr + pi * pi).sqrt() > 1e-7 * (1.0 + scale) {
                continue;
            }
            let mut coeffs = vec![BigInt::zero(); e as usize];
            for &t in &s {
                coeffs[t * e as usize / o] += 1;
            }
            let lam = Cyc::from_power_sum(e, &coeffs).scale(&BigRational::new(size.into(), d.into()));
            let mut val = Cyc::zero(e);
            for c in poly.iter().rev() {
                val = &(&val * &lam) + &Cyc::from_rational(e, c.clone());
            }
            if val.is_zero() && !found.contains(&lam) {
                found.push(lam);
            }
        }
    }
    found
}

pub fn burnside_table(g: &PermGroup) -> OracleTable {
    let classes = brute_classes(g);
    let r = classes.len();
    let order = g.order();
    let reps: Vec<Perm> = classes.iter().map(|c| g.element(c[0]).clone()).collect();
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let orders: Vec<usize> = reps.iter().map(|p| p.order()).collect();
    let e = orders.iter().fold(1usize, |a, &b| a.lcm(&b)) as u32;
    let class_index: Vec<usize> = {
        let mut v = vec![0; order];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                v[x] = k;
            }
        }
        v
    };
    // c[j][i][k] = #{x in C_j : x^-1 g_k in C_i}
    let mut c = vec![vec![vec![0i64; r]; r]; r];
    for j in 0..r {
        for k in 0..r {
            for &x in &classes[j] {
                let y = g.index_of(&(&g.element(x).inverse() * &reps[k])).unwrap();
                c[j][class_index[y]][k] += 1;
            }
        }
    }
    let degrees: Vec<usize> = (1..=order).filter(|d| d * d <= order && order % d == 0).collect();

    let mut spaces: Vec<Vec<Vec<Cyc>>> = vec![(0..r)
        .map(|i| (0..r).map(|k| if i == k { Cyc::one(e) } else { Cyc::zero(e) }).collect())
        .collect()];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = &c[j];
        let lams = eigenvalues(m, sizes[j], orders[j], &degrees, e);
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let mut total = 0;
            for lam in &lams {
                // rows of (M - lam) B, B having the basis vectors as columns
                let rows: Vec<Vec<Cyc>> = (0..r)
                    .map(|i| {
                        basis
                            .iter()
                            .map(|b| {
                                let mut s = Cyc::zero(e);
                                for k in 0..r {
                                    if m[i][k] != 0 {
                                        s = &s + &b[k].scale_int(&m[i][k].into());
                                    }
                                }
                                &s - &(&b[i] * lam)
                            })
                            .collect()
                    })
                    .collect();
                let null = rref_nullspace(rows, basis.len(), e);
                if null.is_empty() {
                    continue;
                }
                total += null.len();
                let sub: Vec<Vec<Cyc>> = null
                    .iter()
                    .map(|coef| {
                        (0..r)
                            .map(|k| {
                                let mut s = Cyc::zero(e);
                                for (b, a) in basis.iter().zip(coef) {
                                    s = &s + &(&b[k] * a);
                                }
                                s
                            })
                            .collect()
                    })
                    .collect();
                next.push(sub);
            }
            assert_eq!(total, basis.len(), "class matrix is not diagonalizable on a common eigenspace");
        }
        spaces = next;
    }
    assert_eq!(spaces.len(), r, "eigenspaces did not split into lines");

    let mut rows = Vec::new();
    for s in spaces {
        let v = &s[0];
        let inv = v[0].inverse().unwrap();
        let w: Vec<Cyc> = v.iter().map(|x| x * &inv).collect();
        let mut sum = Cyc::zero(e);
        for k in 0..r {
            sum = &sum + &(&w[k] * &w[k].conj()).scale(&BigRational::new(1.into(), sizes[k].into()));
        }
        let d2 = BigRational::from_integer(order.into()) / sum.to_rational().expect("rational norm");
        let d2 = d2.to_integer();
        let d = d2.sqrt();
        assert_eq!(&d * &d, d2, "degree squared is not a square");
        assert!(d.is_positive());
        rows.push(
            (0..r).map(|k| w[k].scale(&BigRational::new(d.clone(), sizes[k].into()))).collect::<Vec<_>>(),
        );
    }
    OracleTable { reps, sizes, rows, exponent: e }
}
