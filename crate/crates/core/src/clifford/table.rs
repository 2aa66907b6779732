//! Character tables by Dixon's method: simultaneous eigenvectors of the
//! class multiplication matrices over a prime field `F_q` with
//! `q ≡ 1 (mod exponent)`, lifted to `Q(ζ_e)` through eigenvalue
//! multiplicities.

use num_bigint::BigInt;

use super::cyclotomic::{cmp_same_conductor, Cyc};
use super::group::PermGroup;
use crate::{Error, Result};

pub(crate) struct TableData {
    pub rows: Vec<Vec<Cyc>>,
    pub prime: u64,
}

fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1;
    a %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, q);
        }
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn choose_prime(exponent: u64, order: u64) -> u64 {
    let bound = 2.0 * (order as f64).sqrt();
    let mut q = exponent + 1;
    while !(is_prime(q) && q as f64 > bound) {
        q += exponent;
    }
    q
}

fn primitive_root(q: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = q - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..q).find(|&g| factors.iter().all(|&f| pow_mod(g, (q - 1) / f, q) != 1)).unwrap_or(1)
}

/// Row-reduces in place; returns the pivot columns.
fn rref(m: &mut [Vec<u64>], q: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = inv_mod(m[r][c], q);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, inv, q);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    let v = mul_mod(f, m[r][k], q);
                    m[i][k] = (m[i][k] + q - v) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn nullspace(mut a: Vec<Vec<u64>>, q: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, |r| r.len());
    let pivots = rref(&mut a, q);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = (q - a[r][f]) % q;
            }
            v
        })
        .collect()
}

fn char_poly(mut h: Vec<Vec<u64>>, q: u64) -> Vec<u64> {
    let n = h.len();
    // Hessenberg form by similarity
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else { continue };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], q);
        for k in j + 2..n {
            let u = mul_mod(h[k][j], inv, q);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let v = mul_mod(u, h[j + 1][c], q);
                h[k][c] = (h[k][c] + q - v) % q;
            }
            for row in h.iter_mut() {
                let v = mul_mod(u, row[k], q);
                row[j + 1] = (row[j + 1] + v) % q;
            }
        }
    }
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        // (x - h_mm) p_m
        let mut next = vec![0u64; m + 2];
        for (k, &c) in p[m].iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % q;
            next[k] = (next[k] + q - mul_mod(h[m][m], c, q)) % q;
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = mul_mod(prod, h[i + 1][i], q);
            let coef = mul_mod(h[i][m], prod, q);
            if coef == 0 {
                continue;
            }
            for (k, &c) in p[i].iter().enumerate() {
                next[k] = (next[k] + q - mul_mod(coef, c, q)) % q;
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

fn eval_poly(p: &[u64], x: u64, q: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, q) + c) % q)
}

pub(crate) fn dixon(g: &PermGroup) -> Result<TableData> {
    let order = g.order() as u64;
    let classes = g.classes();
    let r = classes.len();
    let e = g.exponent() as u64;
    let q = choose_prime(e, order);

    // a[j][i][k] = #{x ∈ C_j : x⁻¹ g_k ∈ C_i}
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for (k, ck) in classes.iter().enumerate() {
        let gk = g.element(ck.rep);
        for (xi, x) in g.elements().iter().enumerate() {
            let y = &x.inverse() * gk;
            let j = g.class_of_index(xi);
            let i = g.class_of(&y).expect("closed");
            a[j][i][k] += 1;
        }
    }
    for m in a.iter_mut() {
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x %= q;
            }
        }
    }

    // split F_q^r into common eigenlines of the M_j
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect();
    let mut pending = vec![identity];
    let mut lines: Vec<Vec<u64>> = Vec::new();
    while let Some(basis) = pending.pop() {
        if basis.len() == 1 {
            lines.push(basis.into_iter().next().unwrap());
            continue;
        }
        let mut basis = basis;
        let pivots = rref(&mut basis, q);
        let d = basis.len();
        let mut split = false;
        for mj in a.iter().skip(1) {
            // coordinates of M_j b_l in the reduced basis are its pivot entries
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| (0..r).map(|i| (0..r).fold(0, |s, k| (s + mul_mod(mj[i][k], b[k], q)) % q)).collect())
                .collect();
            // restricted[l][m]: row l = coordinates of image of b_m
            let restricted: Vec<Vec<u64>> =
                (0..d).map(|l| (0..d).map(|m| images[m][pivots[l]]).collect()).collect();
            let cp = char_poly(restricted.clone(), q);
            let roots: Vec<u64> = (0..q).filter(|&x| eval_poly(&cp, x, q) == 0).collect();
            if roots.len() < 2 {
                continue;
            }
            let mut total = 0;
            for lam in roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|l| (0..d).map(|m| if l == m { (restricted[l][m] + q - lam) % q } else { restricted[l][m] }).collect())
                    .collect();
                let ns = nullspace(shifted, q);
                total += ns.len();
                let part: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|c| (0..r).map(|k| (0..d).fold(0, |s, l| (s + mul_mod(c[l], basis[l][k], q)) % q)).collect())
                    .collect();
                pending.push(part);
            }
            if total != d {
                return Err(Error::Falsified("class matrices are not simultaneously diagonalizable".into()));
            }
            split = true;
            break;
        }
        if !split {
            return Err(Error::Falsified(format!("common eigenspace of dimension {d} does not split modulo {q}")));
        }
    }
    if lines.len() != r {
        return Err(Error::Falsified("wrong number of irreducible characters".into()));
    }

    let z = pow_mod(primitive_root(q), (q - 1) / e, q);
    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let inverse: Vec<usize> = (0..r).map(|c| g.inverse_class(c)).collect();
    let powers: Vec<Vec<usize>> = classes
        .iter()
        .enumerate()
        .map(|(c, cl)| (0..cl.element_order as i64).map(|k| g.power_class(c, k)).collect())
        .collect();
    let mut rows = Vec::with_capacity(r);
    for v in lines {
        if v[0] == 0 {
            return Err(Error::Falsified("eigenvector vanishes on the identity class".into()));
        }
        let s = inv_mod(v[0], q);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, s, q)).collect();
        let mut sum = 0u64;
        for i in 0..r {
            sum = (sum + mul_mod(mul_mod(omega[i], omega[inverse[i]], q), inv_mod(sizes[i] % q, q), q)) % q;
        }
        let d2 = mul_mod(order % q, inv_mod(sum, q), q);
        let Some(deg) = (1..).take_while(|d| d * d <= order).find(|d| (d * d) % q == d2) else {
            return Err(Error::Falsified("no admissible degree".into()));
        };
        let chi_mod: Vec<u64> = (0..r).map(|i| mul_mod(mul_mod(deg, omega[i], q), inv_mod(sizes[i] % q, q), q)).collect();
        let mut row = Vec::with_capacity(r);
        for (i, cl) in classes.iter().enumerate() {
            let o = cl.element_order as u64;
            let zo = pow_mod(z, e / o, q);
            let inv_o = inv_mod(o % q, q);
            let mut coeffs = vec![BigInt::from(0); e as usize];
            let mut count = 0;
            for j in 0..o {
                let mut m = 0u64;
                for k in 0..o {
                    let root = pow_mod(zo, (q - 1) - (j * k) % (q - 1), q);
                    m = (m + mul_mod(chi_mod[powers[i][k as usize]], root, q)) % q;
                }
                m = mul_mod(m, inv_o, q);
                if m > deg {
                    return Err(Error::Falsified(format!("eigenvalue multiplicity {m} exceeds degree {deg}")));
                }
                count += m;
                coeffs[(j * (e / o)) as usize] += m;
            }
            if count != deg {
                return Err(Error::Falsified("eigenvalue multiplicities do not sum to the degree".into()));
            }
            row.push(Cyc::from_power_sum(e as u32, &coeffs));
        }
        rows.push(row);
    }
    let one = Cyc::one(e as u32);
    rows.sort_by(|x, y| {
        let tx = x.iter().all(|v| *v == one);
        let ty = y.iter().all(|v| *v == one);
        cmp_same_conductor(&x[0], &y[0]).then(ty.cmp(&tx)).then_with(|| {
            x.iter().zip(y).map(|(a, b)| cmp_same_conductor(a, b)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
        })
    });
    Ok(TableData { rows, prime: q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::perm::Perm;

    #[test]
    fn prime_choice() {
        let q = choose_prime(12, 24);
        assert_eq!(q % 12, 1);
        assert!(q as f64 > 2.0 * 24f64.sqrt());
        assert!(is_prime(q));
    }

    #[test]
    fn char_poly_of_companion() {
        // x^2 - 3x + 2 over F_7
        let m = vec![vec![0, 5], vec![1, 3]];
        assert_eq!(char_poly(m, 7), vec![2, 4, 1]);
    }

    #[test]
    fn s3_table() {
        let g = PermGroup::new(3, vec![Perm::from_cycles(3, &[&[0, 1]]).unwrap(), Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()])
            .unwrap();
        let t = dixon(&g).unwrap();
        let text: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        // classes: 1, (12), (123)
        assert_eq!(text, vec![vec!["1", "1", "1"], vec!["1", "-1", "1"], vec!["2", "0", "-1"]]);
    }

    #[test]
    fn cyclic_table_has_roots_of_unity() {
        let g = PermGroup::new(4, vec![Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()]).unwrap();
        let t = dixon(&g).unwrap();
        assert_eq!(t.rows.len(), 4);
        for row in &t.rows {
            assert_eq!(row[0], Cyc::one(4));
            let v = &row[1];
            assert_eq!(v.pow(4), Cyc::one(4));
        }
    }
}
