//! ε-coordinate realizations of the classical root systems and the matrix
//! models of their defining representations.
//!
//! Conventions: sl_{n+1} acts on C^{n+1} with ε_i − ε_j ↦ E_{ij}; so_N is
//! realized as the matrices skew-symmetric with respect to the antidiagonal;
//! sp_{2n} uses the antidiagonal symplectic form with +1 in the upper half
//! and −1 in the lower half. Under these models the Cartan subalgebra is
//! diagonal, so root vectors are single pairs of matrix units.

use crate::root_system::{Family, RootSystem, SimpleType};
use crate::{Error, Rat};
use num_traits::Zero;

/// Number of ε coordinates: n+1 for A_n, n for B/C/D.
pub fn epsilon_dim(t: SimpleType) -> usize {
    match t.family {
        Family::A => t.rank + 1,
        Family::B | Family::C | Family::D => t.rank,
        _ => panic!("epsilon coordinates only exist for classical types"),
    }
}

/// Size of the defining representation: n+1, 2n+1, 2n, 2n.
pub fn matrix_size(t: SimpleType) -> usize {
    match t.family {
        Family::A => t.rank + 1,
        Family::B => 2 * t.rank + 1,
        Family::C | Family::D => 2 * t.rank,
        _ => panic!("no defining representation model for exceptional types"),
    }
}

/// ε coordinates of a vector given in simple-root coordinates.
pub fn alpha_to_epsilon(t: SimpleType, alpha: &[Rat]) -> Vec<Rat> {
    let n = t.rank;
    let a = |k: usize| -> Rat {
        if k == 0 || k > n {
            Rat::zero()
        } else {
            alpha[k - 1]
        }
    };
    match t.family {
        // α_i = e_i − e_{i+1}
        Family::A => (1..=n + 1).map(|k| a(k) - a(k - 1)).collect(),
        // α_i = e_i − e_{i+1} (i<n), α_n = e_n
        Family::B => (1..=n).map(|k| a(k) - a(k - 1)).collect(),
        // α_i = e_i − e_{i+1} (i<n), α_n = 2e_n
        Family::C => (1..=n)
            .map(|k| if k < n { a(k) - a(k - 1) } else { Rat::from_integer(2) * a(n) - a(n - 1) })
            .collect(),
        // α_i = e_i − e_{i+1} (i<n), α_n = e_{n−1} + e_n
        Family::D => (1..=n)
            .map(|k| {
                if k < n - 1 {
                    a(k) - a(k - 1)
                } else if k == n - 1 {
                    a(n - 1) + a(n) - a(n - 2)
                } else {
                    a(n) - a(n - 1)
                }
            })
            .collect(),
        _ => panic!("epsilon coordinates only exist for classical types"),
    }
}

/// Simple-root coordinates of a vector given in ε coordinates. For A_n the
/// input must have zero coordinate sum.
pub fn epsilon_to_alpha(t: SimpleType, eps: &[Rat]) -> Vec<Rat> {
    let n = t.rank;
    let mut partial = Vec::with_capacity(eps.len());
    let mut s = Rat::zero();
    for e in eps {
        s += *e;
        partial.push(s);
    }
    match t.family {
        Family::A => {
            assert!(partial[n].is_zero(), "A-type ε vector must sum to zero");
            partial[..n].to_vec()
        }
        Family::B => partial.clone(),
        Family::C => {
            let mut out = partial.clone();
            out[n - 1] = partial[n - 1] / Rat::from_integer(2);
            out
        }
        Family::D => {
            let mut out = partial.clone();
            let s_pre = partial[n - 2];
            let c_n = eps[n - 1];
            out[n - 2] = (s_pre - c_n) / Rat::from_integer(2);
            out[n - 1] = (s_pre + c_n) / Rat::from_integer(2);
            out
        }
        _ => panic!("epsilon coordinates only exist for classical types"),
    }
}

/// A signed permutation of the ε basis: ε_i ↦ sign_i · ε_{perm_i}.
#[derive(Debug, Clone)]
pub struct SignedPerm {
    /// perm[i] = target index (0-based).
    pub perm: Vec<usize>,
    /// sign[i] ∈ {−1, +1}.
    pub sign: Vec<i64>,
}

impl SignedPerm {
    pub fn apply_eps(&self, eps: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); eps.len()];
        for (i, c) in eps.iter().enumerate() {
            if !c.is_zero() {
                out[self.perm[i]] += Rat::from_integer(self.sign[i]) * *c;
            }
        }
        out
    }

    /// Matrix on simple-root coordinates of the Weyl element this signed
    /// permutation represents.
    pub fn to_weyl(&self, rs: &RootSystem) -> crate::root_system::WeylElement {
        let t = rs.simple_type;
        let n = rs.rank();
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            let mut a = vec![Rat::zero(); n];
            a[j] = Rat::from_integer(1);
            let image = epsilon_to_alpha(t, &self.apply_eps(&alpha_to_epsilon(t, &a)));
            for (i, v) in image.iter().enumerate() {
                assert!(v.is_integer(), "signed permutation must map roots to roots");
                m[i][j] = v.to_integer();
            }
        }
        crate::root_system::WeylElement { matrix: m }
    }
}

/// One term of a classical root in ε form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsRoot {
    /// ε_i − ε_j (i ≠ j), 0-based.
    Diff(usize, usize),
    /// ε_i + ε_j (i < j).
    Sum(usize, usize),
    /// ε_i (type B only).
    Short(usize),
    /// 2ε_i (type C only).
    Long(usize),
}

/// Recognizes the ε form of a classical root given in α coordinates.
pub fn classify_eps(t: SimpleType, coords: &[i64]) -> EpsRoot {
    let alpha: Vec<Rat> = coords.iter().map(|&c| Rat::from_integer(c)).collect();
    let eps = alpha_to_epsilon(t, &alpha);
    let nz: Vec<(usize, i64)> = eps
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            assert!(c.is_integer());
            (i, c.to_integer())
        })
        .collect();
    match nz.as_slice() {
        [(i, 1), (j, -1)] => EpsRoot::Diff(*i, *j),
        [(i, -1), (j, 1)] => EpsRoot::Diff(*j, *i),
        [(i, 1), (j, 1)] => EpsRoot::Sum(*i, *j),
        [(i, 1)] => EpsRoot::Short(*i),
        [(i, 2)] => EpsRoot::Long(*i),
        other => panic!("not a positive classical root in ε form: {other:?}"),
    }
}

/// N×N integer matrix of a chosen root vector e_γ in the defining
/// representation.
pub fn root_vector_matrix(t: SimpleType, eps: EpsRoot) -> Vec<Vec<i64>> {
    let nn = matrix_size(t);
    let n = t.rank;
    let mut m = vec![vec![0i64; nn]; nn];
    // 1-based helpers mirroring the matrix-unit formulas
    let mut put = |i: usize, j: usize, v: i64| m[i - 1][j - 1] = v;
    match (t.family, eps) {
        (Family::A, EpsRoot::Diff(i, j)) => put(i + 1, j + 1, 1),
        (Family::B | Family::D, EpsRoot::Diff(i, j)) => {
            let (i, j) = (i + 1, j + 1);
            put(i, j, 1);
            put(nn + 1 - j, nn + 1 - i, -1);
        }
        (Family::B | Family::D, EpsRoot::Sum(i, j)) => {
            let (i, j) = (i + 1, j + 1);
            put(i, nn + 1 - j, 1);
            put(j, nn + 1 - i, -1);
        }
        (Family::B, EpsRoot::Short(i)) => {
            let i = i + 1;
            put(i, n + 1, 1);
            put(n + 1, nn + 1 - i, -1);
        }
        (Family::C, EpsRoot::Diff(i, j)) => {
            let (i, j) = (i + 1, j + 1);
            put(i, j, 1);
            put(nn + 1 - j, nn + 1 - i, -1);
        }
        (Family::C, EpsRoot::Sum(i, j)) => {
            let (i, j) = (i + 1, j + 1);
            put(i, nn + 1 - j, 1);
            put(j, nn + 1 - i, 1);
        }
        (Family::C, EpsRoot::Long(i)) => put(i + 1, nn - i, 1),
        other => panic!("root form {other:?} does not occur in this family"),
    }
    m
}

/// e_K = Σ_{β ∈ K} e_β in the defining representation.
pub fn cascade_nilpotent_matrix(
    rs: &RootSystem,
    cascade_roots: &[usize],
) -> Result<Vec<Vec<i64>>, Error> {
    let t = rs.simple_type;
    if !matches!(t.family, Family::A | Family::B | Family::C | Family::D) {
        return Err(Error::NotClassical(t.to_string()));
    }
    let nn = matrix_size(t);
    let mut m = vec![vec![0i64; nn]; nn];
    for &beta in cascade_roots {
        let e = root_vector_matrix(t, classify_eps(t, &rs.root(beta).coords));
        for (row, erow) in m.iter_mut().zip(&e) {
            for (v, ev) in row.iter_mut().zip(erow) {
                *v += ev;
            }
        }
    }
    Ok(m)
}

/// Membership in so_N: Aᵀ J + J A = 0 for the antidiagonal J.
pub fn in_so(m: &[Vec<i64>]) -> bool {
    let nn = m.len();
    // (AᵀJ)_{kl} = A_{N+1−l, k}ᵀ… expanded directly:
    for k in 0..nn {
        for l in 0..nn {
            let lhs = m[nn - 1 - l][k] + m[nn - 1 - k][l];
            if lhs != 0 {
                return false;
            }
        }
    }
    true
}

/// Membership in sp_{2n} for the split antidiagonal form.
pub fn in_sp(m: &[Vec<i64>]) -> bool {
    let nn = m.len();
    let n = nn / 2;
    let j = |i: usize| -> i64 {
        if i < n {
            1
        } else {
            -1
        }
    };
    // (AᵀJ + JA)_{kl} = A_{N−1−l,k}·j(N−1−l) + j(k)·A_{N−1−k,l}
    for k in 0..nn {
        for l in 0..nn {
            let lhs = m[nn - 1 - l][k] * j(nn - 1 - l) + j(k) * m[nn - 1 - k][l];
            if lhs != 0 {
                return false;
            }
        }
    }
    true
}

/// Exact rank of an integer matrix (fraction-free elimination in i128).
pub fn integer_rank(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev_pivot;
            }
            a[r][col] = 0;
        }
        prev_pivot = a[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for (k, &aik) in a[i].iter().enumerate() {
            if aik != 0 {
                for (j, &bkj) in b[k].iter().enumerate() {
                    out[i][j] += aik * bkj;
                }
            }
        }
    }
    out
}

/// Jordan partition of a nilpotent matrix from the ranks of its powers:
/// the number of parts ≥ k is rank(e^{k−1}) − rank(e^k).
pub fn jordan_partition(m: &[Vec<i64>]) -> Vec<i64> {
    let nn = m.len();
    let mut ranks = vec![nn];
    let mut p = m.to_vec();
    loop {
        let r = integer_rank(&p);
        ranks.push(r);
        if r == 0 {
            break;
        }
        p = mat_mul(&p, m);
    }
    let conjugate: Vec<i64> = ranks
        .windows(2)
        .map(|w| (w[0] - w[1]) as i64)
        .collect();
    // λ_j = #{k : λ'_k ≥ j}
    let mut lambda: Vec<i64> = (1..=conjugate.len() as i64)
        .map(|j| conjugate.iter().filter(|&&c| c >= j).count() as i64)
        .filter(|&x| x > 0)
        .collect();
    lambda.sort_unstable_by(|x, y| y.cmp(x));
    lambda
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::RootSystem;

    fn st(label: &str) -> SimpleType {
        SimpleType::parse(label).unwrap()
    }

    #[test]
    fn epsilon_roundtrip() {
        for label in ["A4", "B5", "C4", "D6"] {
            let t = st(label);
            let rs = RootSystem::build(t);
            for r in &rs.positive_roots {
                let alpha: Vec<Rat> = r.coords.iter().map(|&c| Rat::from_integer(c)).collect();
                let eps = alpha_to_epsilon(t, &alpha);
                assert_eq!(epsilon_to_alpha(t, &eps), alpha);
            }
        }
    }

    #[test]
    fn eps_norms_match_form() {
        // the ε realization must reproduce the normalized form:
        // (ε_i, ε_j) = c δ_ij with c = 1 (B, D), 1/2 (C), and for A the form
        // restricted to zero-sum vectors
        for label in ["B4", "C4", "D5"] {
            let t = st(label);
            let rs = RootSystem::build(t);
            let c = match t.family {
                Family::C => Rat::new(1, 2),
                _ => Rat::from_integer(1),
            };
            for a in &rs.positive_roots {
                for b in &rs.positive_roots {
                    let ea = alpha_to_epsilon(
                        t,
                        &a.coords.iter().map(|&x| Rat::from_integer(x)).collect::<Vec<_>>(),
                    );
                    let eb = alpha_to_epsilon(
                        t,
                        &b.coords.iter().map(|&x| Rat::from_integer(x)).collect::<Vec<_>>(),
                    );
                    let dot: Rat = ea.iter().zip(&eb).map(|(x, y)| *x * *y).sum();
                    assert_eq!(dot * c, rs.pairing_rr(a.id, b.id));
                }
            }
        }
    }

    #[test]
    fn root_vectors_live_in_the_algebra() {
        for label in ["B3", "D4", "B4", "D5"] {
            let t = st(label);
            let rs = RootSystem::build(t);
            for r in &rs.positive_roots {
                let m = root_vector_matrix(t, classify_eps(t, &r.coords));
                assert!(in_so(&m), "{label}: {:?} not in so", r.coords);
            }
        }
        for label in ["C2", "C3", "C4"] {
            let t = st(label);
            let rs = RootSystem::build(t);
            for r in &rs.positive_roots {
                let m = root_vector_matrix(t, classify_eps(t, &r.coords));
                assert!(in_sp(&m), "{label}: {:?} not in sp", r.coords);
            }
        }
    }

    #[test]
    fn sl4_cascade_matrix() {
        let t = st("A3");
        let rs = RootSystem::build(t);
        // cascade of sl₄: ε₁−ε₄ and ε₂−ε₃ → E₁₄ + E₂₃
        let b1 = rs.root_id(&[1, 1, 1]).unwrap();
        let b2 = rs.root_id(&[0, 1, 0]).unwrap();
        let m = cascade_nilpotent_matrix(&rs, &[b1, b2]).unwrap();
        let mut expect = vec![vec![0i64; 4]; 4];
        expect[0][3] = 1;
        expect[1][2] = 1;
        assert_eq!(m, expect);
        assert_eq!(integer_rank(&m), 2);
        assert_eq!(integer_rank(&mat_mul(&m, &m)), 0);
        assert_eq!(jordan_partition(&m), vec![2, 2]);
    }

    #[test]
    fn sp4_cascade_matrix() {
        let t = st("C2");
        let rs = RootSystem::build(t);
        let b1 = rs.theta; // 2ε₁
        let b2 = rs.root_id(&[0, 1]).unwrap(); // 2ε₂
        let m = cascade_nilpotent_matrix(&rs, &[b1, b2]).unwrap();
        assert_eq!(integer_rank(&m), 2);
        assert_eq!(integer_rank(&mat_mul(&m, &m)), 0);
        assert_eq!(jordan_partition(&m), vec![2, 2]);
    }

    #[test]
    fn jordan_partition_of_shift_block() {
        // a single nilpotent Jordan block of size 4 inside gl₄
        let mut m = vec![vec![0i64; 4]; 4];
        m[0][1] = 1;
        m[1][2] = 1;
        m[2][3] = 1;
        assert_eq!(jordan_partition(&m), vec![4]);
    }
}
