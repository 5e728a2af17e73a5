//! The cascade nilpotent orbit G·e_K where e_K = Σ e_{β_i}: weighted
//! Dynkin diagram via the characteristic 2x_K, height, sphericity, orbit
//! dimension from the eigenvalue grading, Jordan partitions for the
//! classical series with an independent matrix oracle, and the regular
//! subalgebra label.

use crate::cascade::Cascade;
use crate::cascade_element::{spectrum, Spectrum, TapData};
use crate::classical::{
    cascade_nilpotent_matrix, in_so, in_sp, integer_rank, jordan_partition, mat_mul, matrix_size,
};
use crate::kostant::{dominantize, KostantData};
use crate::root_system::{Family, RootSystem, WeightVector};
use crate::{Error, Rat};
use num_traits::{One, Zero};

/// Invariants of the cascade orbit.
#[derive(Debug, Clone)]
pub struct OrbitData {
    /// Weighted Dynkin labels α_i(h⁺) of the dominant characteristic.
    pub wdd: Vec<i64>,
    pub dim_orbit: usize,
    pub dim_g2: usize,
    pub dim_g4: usize,
    /// Height of e_K: max{l : (ad e_K)^l ≠ 0} = 2·max γ(x_K).
    pub height: i64,
    pub spherical: bool,
    /// Jordan partition of e_K in the defining representation (classical
    /// types only).
    pub partition: Option<Vec<i64>>,
    /// "mA1" with a tilde summand when the cascade contains a short root.
    pub regular_subalgebra_label: String,
    pub complexity: usize,
    pub rank_orbit: usize,
}

/// Weighted Dynkin labels of the cascade orbit: the dominant representative
/// of W·(2x_K) evaluated on the simple roots. For the types with w_K the
/// dominant element is −2w_K(x_K) and has a single label 2; for A_{2p} it
/// has two labels 1.
pub fn characteristic_and_wdd(
    rs: &RootSystem,
    x: &WeightVector,
    kostant: Option<&KostantData>,
) -> Vec<i64> {
    let dominant = match kostant {
        Some(kd) => {
            let d = kd.w.apply(x).neg();
            assert_eq!(
                d,
                rs.fundamental_coweight(kd.theta_image),
                "dominant characteristic is a fundamental coweight"
            );
            d
        }
        None => {
            let (w, word) = dominantize(rs, x);
            // replay the recorded word to confirm the representative
            let mut replay = x.clone();
            for &i in &word {
                replay = rs.simple_reflection(i).apply(&replay);
            }
            assert_eq!(replay, w.apply(x));
            w.apply(x)
        }
    };
    let wdd: Vec<i64> = (0..rs.rank())
        .map(|i| {
            let v = rs.pairing_rv(rs.simple_root_id(i), &dominant) * Rat::from_integer(2);
            assert!(v.is_integer(), "characteristic labels are integral");
            v.to_integer()
        })
        .collect();
    assert!(wdd.iter().all(|&l| (0..=2).contains(&l)));
    match kostant {
        Some(kd) => {
            for (i, &l) in wdd.iter().enumerate() {
                assert_eq!(l != 0, i == kd.theta_image, "single label 2 at α_j");
                if l != 0 {
                    assert_eq!(l, 2);
                }
            }
        }
        None => {
            // A_{2p}: labels 1 at positions p, p+1
            let p = rs.rank() / 2;
            for (i, &l) in wdd.iter().enumerate() {
                let expect = i64::from(i == p - 1 || i == p);
                assert_eq!(l, expect, "two labels 1 in the middle");
            }
        }
    }
    wdd
}

/// hot(e_K) = 2·max{γ(x_K) : γ ∈ Δ} — 4 exactly when θ is fundamental,
/// otherwise 2.
pub fn orbit_height(rs: &RootSystem, sp: &Spectrum) -> i64 {
    let max = sp.by_root.iter().max().copied().unwrap();
    let h = max * Rat::from_integer(2);
    assert!(h.is_integer());
    let h = h.to_integer();
    if rs.simple_type.theta_is_fundamental() {
        assert_eq!(h, 4);
    } else {
        assert_eq!(h, 2);
    }
    h
}

/// The 4-multiset M̃ = {θ} ⊎ {β_i with multiplicity c_i : i ∈ J} together
/// with an ordering whose partial sums, starting from −θ+α̃, all stay in Δ.
/// This witnesses (ad e_K)⁴ ≠ 0; (ad e_K)⁵ = 0 follows from the spectrum
/// bound, which is asserted too.
pub fn height_witness(
    rs: &RootSystem,
    c: &Cascade,
    tap: &TapData,
    sp: &Spectrum,
) -> Result<Vec<usize>, Error> {
    // spectrum bound: |γ(x_K)| ≤ 2 on all of Δ kills any 5-fold multiset
    assert!(sp
        .by_root
        .iter()
        .all(|v| *v >= -Rat::from_integer(2) && *v <= Rat::from_integer(2)));
    let betas = c.roots();
    let mut multiset: Vec<usize> = vec![rs.theta];
    for (&node, &ci) in tap.j_set.iter().zip(&tap.c) {
        for _ in 0..ci {
            multiset.push(betas[node]);
        }
    }
    assert_eq!(multiset.len(), 4);
    let start: Vec<i64> = rs
        .root(rs.theta)
        .coords
        .iter()
        .zip(&rs.root(tap.tap_root).coords)
        .map(|(t, a)| a - t)
        .collect();
    assert!(rs.is_root(&start), "−θ+α̃ is a root");
    let chain_ok = |order: &[usize]| -> bool {
        let mut cur = start.clone();
        for &b in order {
            for (c, bc) in cur.iter_mut().zip(&rs.root(b).coords) {
                *c += bc;
            }
            if !rs.is_root(&cur) {
                return false;
            }
        }
        true
    };
    let found = permutations(&multiset).into_iter().find(|ord| chain_ok(ord));
    found.ok_or(Error::NoChain)
}

/// All distinct orderings of a small multiset.
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..items.len() {
        if !seen.insert(items[i]) {
            continue;
        }
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, items[i]);
            out.push(tail);
        }
    }
    out
}

/// (dim O, dim g(2), dim g(4)) from the eigenvalue grading of 2x_K on g.
pub fn orbit_dimension(rs: &RootSystem, sp: &Spectrum) -> (usize, usize, usize) {
    let m = |v: Rat| sp.multiplicity(v);
    let dim_g = rs.rank() + 2 * rs.positive_roots.len();
    let dim_g2 = m(Rat::one()) + m(-Rat::one());
    let dim_g4 = m(Rat::from_integer(2));
    let dim_g0 = rs.rank() + 2 * m(Rat::zero());
    let dim_g1 = 2 * m(Rat::new(1, 2));
    let dim_orbit = dim_g - dim_g0 - dim_g1;
    (dim_orbit, dim_g2, dim_g4)
}

/// Table partition of e_K by the closed-form case analysis.
pub fn classical_partition(t: crate::root_system::SimpleType) -> Result<Vec<i64>, Error> {
    let n = t.rank as i64;
    let parts = |threes: i64, ones: i64| -> Vec<i64> {
        let mut v = vec![3; threes as usize];
        v.extend(std::iter::repeat(1).take(ones as usize));
        v
    };
    match t.family {
        Family::A => {
            let j = (n + 1) / 2;
            let mut v = vec![2; j as usize];
            if n % 2 == 0 {
                v.push(1);
            }
            Ok(v)
        }
        Family::C => Ok(vec![2; n as usize]),
        Family::B => {
            let j = (n + 1) / 2;
            if n % 2 == 1 {
                Ok(parts(j, j - 1)) // so_{4j−1}
            } else {
                Ok(parts(n / 2, n / 2 + 1)) // so_{4j+1}
            }
        }
        Family::D => {
            let j = n / 2;
            if n % 2 == 0 {
                Ok(parts(j, j)) // so_{4j}
            } else {
                Ok(parts(j, j + 2)) // so_{4j+2}
            }
        }
        _ => Err(Error::NotClassical(t.to_string())),
    }
}

/// Jordan partition of e_K computed in the defining representation via
/// ranks of powers; asserts membership in the algebra, the closed-form
/// partition, and the rank identities of the orthogonal series.
pub fn partition_oracle(rs: &RootSystem, c: &Cascade) -> Result<Vec<i64>, Error> {
    let t = rs.simple_type;
    let e = cascade_nilpotent_matrix(rs, &c.roots())?;
    match t.family {
        Family::B | Family::D => assert!(in_so(&e), "e_K lies in so"),
        Family::C => assert!(in_sp(&e), "e_K lies in sp"),
        Family::A => {}
        _ => unreachable!(),
    }
    let lambda = jordan_partition(&e);
    assert_eq!(
        lambda.iter().sum::<i64>(),
        matrix_size(t) as i64,
        "partition of the matrix size"
    );
    let closed = classical_partition(t)?;
    assert_eq!(lambda, closed, "matrix oracle agrees with the closed form");
    // rank identities for the orthogonal series
    let n = t.rank as i64;
    let rk = integer_rank(&e) as i64;
    let rk2 = integer_rank(&mat_mul(&e, &e)) as i64;
    match t.family {
        Family::B => {
            let expect = if n % 2 == 0 { n } else { n + 1 };
            assert_eq!(rk, expect);
            assert_eq!(rk2, (n + 1) / 2);
        }
        Family::D => {
            let expect = if n % 2 == 0 { n } else { n - 1 };
            assert_eq!(rk, expect);
            assert_eq!(rk2, n / 2);
        }
        Family::A | Family::C => {
            assert_eq!(rk, c.size() as i64);
            assert_eq!(rk2, 0);
        }
        _ => unreachable!(),
    }
    Ok(lambda)
}

/// Orbit dimension from a partition via the standard closed forms for
/// nilpotent orbits of sl/so/sp (an independent route for the oracle).
pub fn dimension_from_partition(t: crate::root_system::SimpleType, lambda: &[i64]) -> usize {
    let n_mat = matrix_size(t) as i64;
    assert_eq!(lambda.iter().sum::<i64>(), n_mat);
    let max = lambda[0];
    let conj: Vec<i64> = (1..=max)
        .map(|j| lambda.iter().filter(|&&p| p >= j).count() as i64)
        .collect();
    let sq: i64 = conj.iter().map(|c| c * c).sum();
    let odd = lambda.iter().filter(|&&p| p % 2 == 1).count() as i64;
    let dim = match t.family {
        Family::A => n_mat * n_mat - sq,
        Family::B | Family::D => (n_mat * n_mat - sq) / 2 - (n_mat - odd) / 2,
        Family::C => (n_mat * n_mat - sq) / 2 + (n_mat - odd) / 2,
        _ => panic!("classical types only"),
    };
    dim as usize
}

/// "mA1" when all cascade roots are long; "(m−1)A1+Ã1" when the cascade
/// contains a (unique) short root.
pub fn regular_subalgebra_label(rs: &RootSystem, c: &Cascade) -> String {
    let m = c.size();
    let shorts = c
        .roots()
        .iter()
        .filter(|&&b| !rs.is_long(b))
        .count();
    match shorts {
        0 => {
            if m == 1 {
                "A1".to_string()
            } else {
                format!("{m}A1")
            }
        }
        1 => {
            if m == 2 {
                "A1+Ã1".to_string()
            } else {
                format!("{}A1+Ã1", m - 1)
            }
        }
        _ => unreachable!("at most one short cascade root"),
    }
}

/// Assembles all orbit invariants. `kostant` is `None` exactly for A_{2p}.
pub fn orbit_data(
    rs: &RootSystem,
    c: &Cascade,
    x: &WeightVector,
    kostant: Option<&KostantData>,
    tap: Option<&TapData>,
) -> OrbitData {
    let sp = spectrum(rs, x);
    let wdd = characteristic_and_wdd(rs, x, kostant);
    let height = orbit_height(rs, &sp);
    let spherical = height <= 3;
    assert_eq!(
        spherical,
        !rs.simple_type.theta_is_fundamental(),
        "spherical exactly when θ is not fundamental"
    );
    if let Some(tap) = tap {
        height_witness(rs, c, tap, &sp).expect("height-4 chain witness");
    }
    let (dim_orbit, dim_g2, dim_g4) = orbit_dimension(rs, &sp);
    if let Some(kd) = kostant {
        assert_eq!(2 * dim_g4, kd.ideal.dim(), "2·dim g(4) = dim a_K");
    }
    let partition = classical_partition(rs.simple_type).ok();
    if partition.is_some() {
        let oracle = partition_oracle(rs, c).unwrap();
        assert_eq!(
            dimension_from_partition(rs.simple_type, &oracle),
            dim_orbit,
            "partition dimension matches the grading dimension"
        );
    }
    OrbitData {
        wdd,
        dim_orbit,
        dim_g2,
        dim_g4,
        height,
        spherical,
        partition,
        regular_subalgebra_label: regular_subalgebra_label(rs, c),
        complexity: 2 * dim_g4,
        rank_orbit: c.size(),
    }
}
