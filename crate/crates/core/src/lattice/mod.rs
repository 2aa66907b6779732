//! Exact integer linear algebra on standard lattices `Z^n`.
//!
//! Every lattice is the standard free abelian group with its standard basis;
//! the dual lattice is identified with `Z^n` through the dot product, so the
//! transpose of a matrix is the dual map.

mod matrix;
mod smith;

pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithForm};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The standard lattice `Z^rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    pub rank: usize,
}

impl Lattice {
    pub fn new(rank: usize) -> Self {
        Lattice { rank }
    }
}

/// A group homomorphism between standard lattices. Column `j` of the matrix is
/// the image of the `j`-th basis vector of the domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeMap {
    domain: Lattice,
    codomain: Lattice,
    matrix: IntMatrix,
}

impl LatticeMap {
    pub fn new(domain: Lattice, codomain: Lattice, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != codomain.rank || matrix.cols() != domain.rank {
            return Err(Error::Dimension(format!(
                "matrix is {}x{} but the map goes Z^{} -> Z^{}",
                matrix.rows(),
                matrix.cols(),
                domain.rank,
                codomain.rank
            )));
        }
        Ok(LatticeMap { domain, codomain, matrix })
    }

    /// Map whose matrix is given; shape determines the domain and codomain.
    /// The column count of a matrix without rows is taken as `domain_rank`.
    pub fn from_matrix(matrix: IntMatrix) -> Self {
        LatticeMap { domain: Lattice::new(matrix.cols()), codomain: Lattice::new(matrix.rows()), matrix }
    }

    pub fn from_rows(rows: &[Vec<i64>], domain_rank: usize) -> Result<Self> {
        let m = IntMatrix::from_rows_with_cols(rows, domain_rank)
            .ok_or_else(|| Error::Dimension("ragged matrix rows".into()))?;
        Ok(Self::from_matrix(m))
    }

    pub fn identity(rank: usize) -> Self {
        Self::from_matrix(IntMatrix::identity(rank))
    }

    pub fn scalar(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::from_matrix(IntMatrix::scalar(rank, c))
    }

    pub fn domain(&self) -> Lattice {
        self.domain
    }

    pub fn codomain(&self) -> Lattice {
        self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// The dual map with respect to the dot-product pairings.
    pub fn transpose(&self) -> LatticeMap {
        LatticeMap { domain: self.codomain, codomain: self.domain, matrix: self.matrix.transpose() }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &LatticeMap) -> Result<LatticeMap> {
        if inner.codomain != self.domain {
            return Err(Error::Dimension(format!(
                "cannot compose Z^{} -> Z^{} after Z^{} -> Z^{}",
                self.domain.rank, self.codomain.rank, inner.domain.rank, inner.codomain.rank
            )));
        }
        Ok(LatticeMap { domain: inner.domain, codomain: self.codomain, matrix: &self.matrix * &inner.matrix })
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.apply(v)
    }

    pub fn apply_i64(&self, v: &[i64]) -> Vec<BigInt> {
        self.matrix.apply_i64(v)
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(&self.matrix).rank()
    }
}

/// Isomorphism type of a finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/d_i`
/// with `d_1 | d_2 | ...` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CokernelStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl CokernelStructure {
    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn has_p_prime_torsion(&self, p: u64) -> bool {
        let (_, p_prime) = torsion_p_split(self, p);
        !p_prime.is_empty()
    }

    /// True when the group is a finite p-group (the trivial group included).
    pub fn is_finite_p_group(&self, p: u64) -> bool {
        self.is_finite() && !self.has_p_prime_torsion(p)
    }
}

/// Structure of `Z^codomain / image(map)`.
pub fn cokernel(map: &LatticeMap) -> CokernelStructure {
    let snf = smith_normal_form(&map.matrix);
    let diag = snf.invariant_factors();
    CokernelStructure {
        free_rank: map.codomain.rank - diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Splits each invariant factor `d = p^v * m` with `gcd(m, p) = 1`, keeping the
/// factors that exceed one. `p` must be prime.
pub fn torsion_p_split(c: &CokernelStructure, p: u64) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(p);
    let mut p_part = Vec::new();
    let mut p_prime_part = Vec::new();
    for d in &c.torsion {
        let mut m = d.abs();
        let mut pv = BigInt::one();
        while (&m % &p).is_zero() {
            m /= &p;
            pv *= &p;
        }
        if !pv.is_one() {
            p_part.push(pv);
        }
        if !m.is_one() {
            p_prime_part.push(m);
        }
    }
    p_part.sort();
    p_prime_part.sort();
    (p_part, p_prime_part)
}

/// Basis (in Hermite normal form) of `{x ∈ Z^rank : m·x ∈ span_Z(vectors) for some m ≥ 1}`.
pub fn saturation(vectors: &[Vec<BigInt>], rank: usize) -> Result<Vec<Vec<BigInt>>> {
    if vectors.iter().any(|v| v.len() != rank) {
        return Err(Error::Dimension(format!("saturation: vectors must lie in Z^{rank}")));
    }
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let a = IntMatrix::from_columns(vectors, rank).expect("checked lengths");
    let snf = smith_normal_form(&a);
    let r = snf.rank();
    let basis: Vec<Vec<BigInt>> = (0..r).map(|j| snf.u_inv.column(j)).collect();
    Ok(hermite_rows(basis))
}

/// Integer coefficients `y` with `Σ y_j vectors[j] = target`, if they exist.
pub fn solve_in_span(vectors: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = target.len();
    if vectors.is_empty() {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }
    let a = IntMatrix::from_columns(vectors, n)?;
    let snf = smith_normal_form(&a);
    let z = snf.u.apply(target);
    let diag = snf.invariant_factors();
    let mut w = vec![BigInt::zero(); vectors.len()];
    for (i, zi) in z.iter().enumerate() {
        if i < diag.len() {
            let (q, r) = zi.div_rem(&diag[i]);
            if !r.is_zero() {
                return None;
            }
            w[i] = q;
        } else if !zi.is_zero() {
            return None;
        }
    }
    Some(snf.v.apply(&w))
}

/// Row-style Hermite normal form of a list of linearly independent vectors:
/// echelon form with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let n = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        if pivot_row >= rows.len() {
            break;
        }
        // gcd-reduce column `col` among rows pivot_row..
        loop {
            let nonzero: Vec<usize> = (pivot_row..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let best = *nonzero.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            rows.swap(pivot_row, best);
            let mut done = true;
            for i in pivot_row + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = &rows[i][col] / &rows[pivot_row][col];
                let pr = rows[pivot_row].clone();
                for (x, y) in rows[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][col].is_zero() {
            continue;
        }
        if rows[pivot_row][col].is_negative() {
            for x in rows[pivot_row].iter_mut() {
                *x = -x.clone();
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    for &(pr, col) in &pivots {
        let p = rows[pr][col].clone();
        for i in 0..pr {
            let q = rows[i][col].div_floor(&p);
            if q.is_zero() {
                continue;
            }
            let prow = rows[pr].clone();
            for (x, y) in rows[i].iter_mut().zip(&prow) {
                *x -= &q * y;
            }
        }
    }
    rows
}

pub(crate) fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(v: &[i64]) -> Vec<BigInt> {
        to_big(v)
    }

    fn map(rows: &[Vec<i64>]) -> LatticeMap {
        LatticeMap::from_matrix(IntMatrix::from_rows(rows).unwrap())
    }

    /// Brute-force order of `Z^n / image(A)` for a full-rank square map: count
    /// residues of the box `[0, det)^n` that are not equivalent.
    fn brute_quotient_invariants(a: &LatticeMap) -> Vec<i64> {
        // enumerate the quotient by Smith-free means: the group Z^n / A Z^n for
        // small diagonalisable A is generated by e_i with orders found by search
        let n = a.codomain().rank;
        let det = a.matrix().determinant();
        let det: i64 = num_traits::ToPrimitive::to_i64(&det.abs()).unwrap();
        let cols: Vec<Vec<BigInt>> = (0..a.domain().rank).map(|j| a.matrix().column(j)).collect();
        let in_image = |v: &[i64]| solve_in_span(&cols, &bv(v)).is_some();
        // element orders in the quotient
        let mut orders = Vec::new();
        let mut stack = vec![vec![0i64; n]];
        let mut seen = std::collections::HashSet::new();
        // enumerate representatives of the box [0, det)^n modulo the image
        let mut reps: Vec<Vec<i64>> = Vec::new();
        while let Some(v) = stack.pop() {
            if !seen.insert(v.clone()) {
                continue;
            }
            if !reps.iter().any(|r| {
                let d: Vec<i64> = v.iter().zip(r).map(|(a, b)| a - b).collect();
                in_image(&d)
            }) {
                reps.push(v.clone());
            }
            for i in 0..n {
                let mut w = v.clone();
                w[i] += 1;
                if w[i] < det {
                    stack.push(w);
                }
            }
        }
        for r in &reps {
            let mut k = 1i64;
            loop {
                let kv: Vec<i64> = r.iter().map(|x| x * k).collect();
                if in_image(&kv) {
                    break;
                }
                k += 1;
            }
            orders.push(k);
        }
        orders.sort();
        // (|G|, exponent)
        vec![reps.len() as i64, *orders.last().unwrap()]
    }

    #[test]
    fn snf_identity() {
        let s = smith_normal_form(&IntMatrix::identity(2));
        assert!(s.d.is_identity());
    }

    #[test]
    fn snf_two_three_is_one_six() {
        let a = map(&[vec![2, 0], vec![0, 3]]);
        // oracle: the quotient has order 6 and an element of order 6, so it is cyclic
        assert_eq!(brute_quotient_invariants(&a), vec![6, 6]);
        let s = smith_normal_form(a.matrix());
        assert_eq!(s.d, IntMatrix::from_rows(&[vec![1, 0], vec![0, 6]]).unwrap());
        assert_eq!(&(&s.u * a.matrix()) * &s.v, s.d);
    }

    #[test]
    fn snf_rank_one() {
        let s = smith_normal_form(&IntMatrix::from_rows(&[vec![2]]).unwrap());
        assert_eq!(s.d, IntMatrix::from_rows(&[vec![2]]).unwrap());
    }

    #[test]
    fn cokernel_examples() {
        let c = cokernel(&map(&[vec![2]]));
        assert_eq!(c, CokernelStructure { free_rank: 0, torsion: bv(&[2]) });
        let c = cokernel(&map(&[vec![1], vec![0]]));
        assert_eq!(c, CokernelStructure { free_rank: 1, torsion: vec![] });
        let a = map(&[vec![2, 0], vec![0, 6]]);
        // oracle: order 12, exponent 6 ⇒ Z/2 ⊕ Z/6
        assert_eq!(brute_quotient_invariants(&a), vec![12, 6]);
        assert_eq!(cokernel(&a), CokernelStructure { free_rank: 0, torsion: bv(&[2, 6]) });
    }

    #[test]
    fn p_split_examples() {
        let c = |t: &[i64]| CokernelStructure { free_rank: 0, torsion: bv(t) };
        assert_eq!(torsion_p_split(&c(&[12]), 2), (bv(&[4]), bv(&[3])));
        assert_eq!(torsion_p_split(&c(&[5]), 5), (bv(&[5]), vec![]));
        // valuations: 2 = 3^0·2, 6 = 3^1·2
        assert_eq!(torsion_p_split(&c(&[2, 6]), 3), (bv(&[3]), bv(&[2, 2])));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(LatticeMap::identity(3).transpose(), LatticeMap::identity(3));
        assert_eq!(map(&[vec![1, 2], vec![0, 1]]).transpose(), map(&[vec![1, 0], vec![2, 1]]));
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(saturation(&[bv(&[2, 0])], 2).unwrap(), vec![bv(&[1, 0])]);
        assert!(saturation(&[], 2).unwrap().is_empty());
        let sat = saturation(&[bv(&[2, 2]), bv(&[0, 4])], 2).unwrap();
        // brute force: every point of a box lies in the saturation (Q-span is the plane)
        for x in -3..=3 {
            for y in -3..=3 {
                assert!(solve_in_span(&sat, &bv(&[x, y])).is_some());
            }
        }
        assert_eq!(sat.len(), 2);
    }

    #[test]
    fn saturation_of_a_line() {
        let sat = saturation(&[bv(&[2, 4, 6])], 3).unwrap();
        assert_eq!(sat, vec![bv(&[1, 2, 3])]);
    }

    #[test]
    fn solve_membership() {
        let s = [bv(&[2, 0]), bv(&[0, 3])];
        assert_eq!(solve_in_span(&s, &bv(&[4, 9])), Some(bv(&[2, 3])));
        assert_eq!(solve_in_span(&s, &bv(&[1, 0])), None);
        assert_eq!(solve_in_span(&[], &bv(&[0, 0])), Some(vec![]));
    }

    #[test]
    fn compose_checks_shapes() {
        let a = LatticeMap::from_rows(&[vec![1, 0, 0]], 3).unwrap();
        let b = LatticeMap::identity(2);
        assert!(a.compose(&b).is_err());
        assert!(b.compose(&LatticeMap::from_rows(&[vec![1], vec![1]], 1).unwrap()).is_ok());
    }
}
