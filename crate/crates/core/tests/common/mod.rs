#![allow(dead_code)]

pub mod burnside;

use std::collections::{HashSet, VecDeque};
use std::path::PathBuf;

use levikit::clifford::{Character, Cyc, PermGroup, SubgroupEmbedding};
use levikit::isotypy::PMorphism;
use levikit::lattice::LatticeMap;
use levikit::root_datum::{direct_sum, standard, torus, BasedRootDatum, Isogeny};
use levikit::weyl::WeylGroup;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

pub fn group(name: &str) -> PermGroup {
    levikit::io::read_group(&example(name)).unwrap()
}

pub fn cli(args: &[&str]) -> (i32, serde_json::Value) {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_levikit"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("run levikit");
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(serde_json::Value::Null);
    (out.status.code().unwrap_or(-1), doc)
}

/// |W| as the product of the degrees of the basic invariants.
pub fn degree_product(family: char, n: usize) -> u64 {
    let degrees: Vec<u64> = match family {
        'A' => (2..=n as u64 + 1).collect(),
        'B' | 'C' => (1..=n as u64).map(|k| 2 * k).collect(),
        'D' => (1..n as u64).map(|k| 2 * k).chain([n as u64]).collect(),
        'G' => vec![2, 6],
        'F' => vec![2, 6, 8, 12],
        'E' => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        _ => panic!("unknown family {family}"),
    };
    degrees.iter().product()
}

/// Weyl group as a set of integer matrices acting on X, by closure under
/// the reflections `x ↦ x - <x, α^∨> α` of the simple roots.
pub fn matrix_weyl_group(b: &BasedRootDatum) -> Vec<Vec<Vec<i64>>> {
    let d = b.datum();
    let n = d.rank();
    let refl: Vec<Vec<Vec<i64>>> = b
        .simple()
        .iter()
        .map(|&s| {
            let (a, av) = (d.root(s), d.coroot(s));
            (0..n).map(|i| (0..n).map(|j| i64::from(i == j) - a[i] * av[j]).collect()).collect()
        })
        .collect();
    closure(n, &refl)
}

/// Weyl group on root-lattice coordinates: `s_i(α_j) = α_j - <α_j, α_i^∨> α_i`
/// with the pairings read off the datum.
pub fn root_basis_weyl_group(b: &BasedRootDatum) -> Vec<Vec<Vec<i64>>> {
    let d = b.datum();
    let s = b.simple();
    let n = s.len();
    let pair = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(a, b)| a * b).sum::<i64>();
    let refl: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    (0..n)
                        .map(|j| i64::from(k == j) - if k == i { pair(d.root(s[j]), d.coroot(s[i])) } else { 0 })
                        .collect()
                })
                .collect()
        })
        .collect();
    closure(n, &refl)
}

fn closure(n: usize, refl: &[Vec<Vec<i64>>]) -> Vec<Vec<Vec<i64>>> {
    let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut seen: HashSet<Vec<Vec<i64>>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for r in refl {
            let p = matmul(&m, r);
            if seen.insert(p.clone()) {
                queue.push_back(p);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    a.iter().map(|row| (0..m).map(|j| (0..k).map(|l| row[l] * b[l][j]).sum()).collect()).collect()
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect()).collect();
        let t = &m[0][c] * det(&minor);
        if c % 2 == 0 {
            total += t;
        } else {
            total -= t;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Rank of an integer matrix and the gcd of its maximal nonzero minors,
/// which is the order of the torsion of its cokernel.
pub fn rank_and_divisor(m: &[Vec<i64>], cols: usize) -> (usize, BigInt) {
    let rows = m.len();
    for k in (1..=rows.min(cols)).rev() {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| BigInt::from(m[i][j])).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if !g.is_zero() {
            return (k, g.abs());
        }
    }
    (0, BigInt::one())
}

fn is_power_of(mut n: BigInt, p: u64) -> bool {
    let p = BigInt::from(p);
    while n > BigInt::one() {
        if !(&n % &p).is_zero() {
            return false;
        }
        n /= &p;
    }
    true
}

/// Profile flags `(kernel_connected, kernel_finite, surjective, injective)`
/// from determinantal divisors of `f`.
pub fn oracle_profile(mo: &PMorphism) -> (bool, bool, bool, bool) {
    let rows = mo.f().matrix().to_i64_rows().expect("small entries");
    let (target, source) = (mo.target().rank(), mo.source().rank());
    let (r, d) = rank_and_divisor(&rows, source);
    let connected = is_power_of(d, mo.p());
    let finite = r == target;
    let surjective = r == source;
    (connected, finite, surjective, finite && connected)
}

fn block(a: &[Vec<i64>], b: &[Vec<i64>], acols: usize, bcols: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for r in a {
        out.push(r.iter().copied().chain(std::iter::repeat(0).take(bcols)).collect());
    }
    for r in b {
        out.push(std::iter::repeat(0).take(acols).chain(r.iter().copied()).collect());
    }
    out
}

fn simple_matrix(b: &BasedRootDatum) -> Vec<Vec<i64>> {
    let n = b.datum().rank();
    (0..n).map(|i| b.simple().iter().map(|&s| b.datum().root(s)[i]).collect()).collect()
}

/// Inverse of a unimodular integer matrix by cofactors.
fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let d = det(&big);
    if d.abs() != BigInt::one() {
        return None;
    }
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = big
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != j)
                .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, x)| x.clone()).collect())
                .collect();
            let c = det(&minor) * if (i + j) % 2 == 0 { 1 } else { -1 } * &d;
            inv[i][j] = i64::try_from(c).unwrap();
        }
    }
    Some(inv)
}

/// A random p-morphism of rank at most 3. The semisimple part is an isogeny
/// between isogeny types of one Cartan type (adjoint source, so the map is
/// fixed by sending simple roots to simple roots), twisted by a Weyl group
/// element and a p-power; the central torus gets an arbitrary integer matrix.
pub fn random_pmorphism(rng: &mut StdRng) -> PMorphism {
    let p = *[2u64, 3, 5].choose(rng).unwrap();
    let types = ["A1", "A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3", "A1xA2", "A1xA1xA1", "T1"];
    let t = *types.choose(rng).unwrap();
    let adj = standard(t, Isogeny::Adjoint).unwrap();
    let tgt = if rng.gen_bool(0.5) { standard(t, Isogeny::SimplyConnected).unwrap() } else { adj.clone() };
    let ss = adj.datum().rank();
    let extra = rng.gen_range(0..=3usize.saturating_sub(ss));
    let (src_b, tgt_b) = if extra > 0 {
        (direct_sum(&adj, &torus(extra)).unwrap(), direct_sum(&tgt, &torus(extra)).unwrap())
    } else {
        (adj.clone(), tgt.clone())
    };
    let base = if ss == 0 || t == "T1" {
        vec![]
    } else {
        matmul(&simple_matrix(&tgt), &unimodular_inverse(&simple_matrix(&adj)).unwrap())
    };
    let ss = if t == "T1" { 0 } else { ss };
    let extra = src_b.datum().rank() - ss;
    let torus_block: Vec<Vec<i64>> = (0..extra).map(|_| (0..extra).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let mut f = block(&base, &torus_block, ss, extra);
    let w = WeylGroup::generate(&tgt_b).unwrap();
    let x = rng.gen_range(0..w.order());
    f = matmul(&w.matrix(x).to_i64_rows().unwrap(), &f);
    let a = rng.gen_range(0..=2u32);
    let scale = p.pow(a) as i64;
    for row in &mut f {
        for v in row.iter_mut() {
            *v *= scale;
        }
    }
    let lm = LatticeMap::from_rows(&f, src_b.datum().rank()).unwrap();
    let m = PMorphism::infer(lm, p, src_b.datum().clone(), tgt_b.datum().clone()).unwrap();
    if rng.gen_bool(0.3) {
        m.dual()
    } else {
        m
    }
}

pub fn shipped_constructors() -> Vec<(String, BasedRootDatum)> {
    use levikit::root_datum::{gl, gl2, gl3, pgl2, sl2};
    let mut out = vec![
        ("SL2".to_string(), sl2()),
        ("PGL2".to_string(), pgl2()),
        ("GL2".to_string(), gl2()),
        ("GL3".to_string(), gl3()),
        ("GL4".to_string(), gl(4)),
    ];
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"] {
        for (iso, tag) in [(Isogeny::SimplyConnected, "sc"), (Isogeny::Adjoint, "ad")] {
            out.push((format!("{t} {tag}"), standard(t, iso).unwrap()));
        }
    }
    out
}

/// `<a, b>` over the subgroup by summing over its elements.
pub fn inner_on(sub: &PermGroup, a: impl Fn(usize) -> Cyc, b: impl Fn(usize) -> Cyc) -> BigRational {
    let mut s: Option<Cyc> = None;
    for x in 0..sub.order() {
        let t = &a(x) * &b(x).conj();
        s = Some(match s {
            None => t,
            Some(acc) => &acc + &t,
        });
    }
    let s = s.unwrap();
    s.to_rational().expect("inner product is rational") / BigRational::from_integer(sub.order().into())
}

/// Multiplicities of the oracle irreducibles of `e.sub()` in the restriction
/// of `chi`, computed elementwise.
pub fn oracle_restriction(chi: &Character, e: &SubgroupEmbedding, sub_table: &burnside::OracleTable) -> Vec<BigRational> {
    let sub = e.sub();
    let classes = burnside::brute_classes(sub);
    let mut cls_of = vec![0; sub.order()];
    for (k, c) in classes.iter().enumerate() {
        for &x in c {
            cls_of[x] = k;
        }
    }
    let parent = e.parent();
    sub_table
        .rows
        .iter()
        .map(|row| {
            inner_on(
                sub,
                |x| chi.values()[parent.class_of_index(e.image_of(x))].clone(),
                |x| row[cls_of[x]].clone(),
            )
        })
        .collect()
}
