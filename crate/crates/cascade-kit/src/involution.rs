//! The Z₂-grading of g attached to x_K (for x_K ∈ P∨, i.e. every type
//! except A_{2p}): g₀ collects the root spaces of even x_K-degree together
//! with the Cartan, g₁ those of odd degree. Dimension bookkeeping and the
//! regular semisimple certificate inside the span of the cascade.

use crate::cascade::Cascade;
use crate::kostant::ZGrading;
use crate::root_system::{RootSystem, WeightVector};
use crate::{Error, Rat};
use num_traits::Zero;

/// Dimensions of the two eigenspaces of the involution, with the per-degree
/// count table over the full root system.
#[derive(Debug, Clone)]
pub struct Z2Grading {
    pub dim_g0: usize,
    pub dim_g1: usize,
    /// counts[s][d+2] = #Δ^±_K(d) for d ∈ {−2,…,2}; s = 0 positive, 1 negative.
    pub count_table: [[usize; 5]; 2],
}

/// Builds the Z₂-grading dimension data and checks the identities
/// dim g₀ = dim b − #K and dim g₁ = dim u + #K, along with the shape of the
/// count table (#Δ⁺(−2) = 0, #Δ⁺(−1) = #Δ⁺(2) = a, #Δ⁺(0) = #Δ⁺(1) − #K).
pub fn z2_grading(rs: &RootSystem, c: &Cascade, g: &ZGrading) -> Result<Z2Grading, Error> {
    if rs.simple_type.is_a2p() {
        return Err(Error::NotApplicable);
    }
    let m = c.size();
    let n_pos = rs.positive_roots.len();
    let mut count_table = [[0usize; 5]; 2];
    for d in -1..=2 {
        count_table[0][(d + 2) as usize] = g.part(d).len();
        // Δ⁻_K(−d) = −Δ⁺_K(d)
        count_table[1][(-d + 2) as usize] = g.part(d).len();
    }
    assert_eq!(count_table[0][0], 0, "#Δ⁺_K(−2) = 0");
    let a = count_table[0][1];
    assert_eq!(count_table[0][4], a, "#Δ⁺_K(−1) = #Δ⁺_K(2)");
    let b = count_table[0][3];
    assert_eq!(count_table[0][2], b - m, "#Δ⁺_K(0) = #Δ⁺_K(1) − #K");

    let even: usize = [-2i64, 0, 2]
        .iter()
        .map(|&d| count_table[0][(d + 2) as usize] + count_table[1][(d + 2) as usize])
        .sum();
    let odd: usize = [-1i64, 1]
        .iter()
        .map(|&d| count_table[0][(d + 2) as usize] + count_table[1][(d + 2) as usize])
        .sum();
    let dim_g0 = rs.rank() + even;
    let dim_g1 = odd;
    let dim_b = rs.rank() + n_pos;
    assert_eq!(dim_g0 + dim_g1, dim_b + n_pos, "dim g₀ + dim g₁ = dim g");
    assert_eq!(dim_g0, dim_b - m, "dim g₀ = dim b − #K");
    assert_eq!(dim_g1, n_pos + m, "dim g₁ = dim u + #K");
    Ok(Z2Grading {
        dim_g0,
        dim_g1,
        count_table,
    })
}

/// A regular semisimple certificate in the span of the cascade: an integer
/// combination ν = Σ M^{i−1} β_i with (γ, ν) ≠ 0 for every γ ∈ Δ⁺, found by
/// growing M starting at 3. Existence is guaranteed because every positive
/// root pairs nontrivially with some cascade root.
pub fn regular_certificate(rs: &RootSystem, c: &Cascade) -> (WeightVector, i64) {
    // underlying combinatorial fact first
    for r in &rs.positive_roots {
        assert!(
            c.roots().iter().any(|&b| !rs.pairing_rr(r.id, b).is_zero()),
            "every positive root meets some cascade root"
        );
    }
    let betas = c.roots();
    let mut m = 3i64;
    loop {
        let mut nu = WeightVector::zero(rs.rank());
        let mut weight = Rat::from_integer(1);
        for &b in &betas {
            nu = nu.add(&WeightVector::from_root_coords(&rs.root(b).coords).scale(weight));
            weight *= Rat::from_integer(m);
        }
        if rs
            .positive_roots
            .iter()
            .all(|r| !rs.pairing_rv(r.id, &nu).is_zero())
        {
            return (nu, m);
        }
        m += 1;
    }
}

/// The commuting-sl₂ facts behind the grading: cascade roots are strongly
/// orthogonal and pairwise orthogonal under the form.
pub fn check_sl2_commute(rs: &RootSystem, c: &Cascade) {
    let betas = c.roots();
    for (i, &a) in betas.iter().enumerate() {
        for &b in &betas[i + 1..] {
            assert!(rs.pairing_rr(a, b).is_zero(), "(β_i, β_j) = 0");
            let sum: Vec<i64> = rs
                .root(a)
                .coords
                .iter()
                .zip(&rs.root(b).coords)
                .map(|(x, y)| x + y)
                .collect();
            let diff: Vec<i64> = rs
                .root(a)
                .coords
                .iter()
                .zip(&rs.root(b).coords)
                .map(|(x, y)| x - y)
                .collect();
            assert!(!rs.is_root(&sum) && !rs.is_root(&diff));
        }
    }
}
