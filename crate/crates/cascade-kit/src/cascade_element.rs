//! The cascade element x_K = ½ Σ β_i∨ and everything derived from it: its
//! spectrum on Δ⁺, the simple-root marks, the decomposition of the adjacent
//! simple root α̃ over the cascade, lattice membership, the cascade
//! decompositions of 2ρ and 2ρ∨, and the spectrum checks coming from the
//! Frobenius subalgebra t_K ⊕ u⁺.

use crate::cascade::Cascade;
use crate::root_system::{Lattice, RootSystem, WeightVector, WeylElement};
use crate::{Error, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// The multiset {γ(x) : γ ∈ Δ⁺} with its per-root values.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// Value at each positive root, indexed by root id.
    pub by_root: Vec<Rat>,
    /// Value → multiplicity.
    pub counts: BTreeMap<Rat, usize>,
}

impl Spectrum {
    pub fn value_set(&self) -> Vec<Rat> {
        self.counts.keys().copied().collect()
    }

    pub fn multiplicity(&self, v: Rat) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }
}

/// Decomposition data of the unique simple root α̃ adjacent to θ, present
/// exactly when θ is a fundamental weight: α̃ = ½(θ − Σ_{i∈J} c_i β_i).
#[derive(Debug, Clone)]
pub struct TapData {
    /// Simple index of α̃ (0-based).
    pub tap_simple: usize,
    /// Root id of α̃.
    pub tap_root: usize,
    /// Cascade node indices J = {i : (α̃, β_i) < 0}; never contains node 0.
    pub j_set: Vec<usize>,
    /// c_i = (α̃,α̃)/(β_i,β_i) aligned with `j_set`; Σ c_i = 3.
    pub c: Vec<i64>,
}

/// One matched pair of the spectrum symmetry on Δ⁺ ∖ K.
#[derive(Debug, Clone, Copy)]
pub struct SymmetryPair {
    pub gamma: usize,
    pub partner: usize,
    /// Cascade node whose Heisenberg subset contains both.
    pub node: usize,
}

#[derive(Debug, Clone)]
pub struct SymmetryReport {
    pub pairs: Vec<SymmetryPair>,
}

/// Coefficients of 2ρ = Σ (h*(g⟨j⟩)−1) β_j and 2ρ∨ = Σ (h(g⟨j⟩)−1) β_j∨.
#[derive(Debug, Clone)]
pub struct RhoDecomposition {
    pub rho_coeffs: Vec<i64>,
    pub rho_vee_coeffs: Vec<i64>,
}

/// Eigenvalue multiset of ad x_K on t_K ⊕ u⁺ and its trace.
#[derive(Debug, Clone)]
pub struct FrobeniusReport {
    pub multiset: BTreeMap<Rat, usize>,
    pub trace: Rat,
}

/// x_K by the closed formula ½ Σ β_i∨. The defining property β_i(x_K) = 1
/// is asserted post hoc.
pub fn cascade_element(rs: &RootSystem, c: &Cascade) -> WeightVector {
    let mut x = WeightVector::zero(rs.rank());
    for &b in &c.roots() {
        x = x.add(&rs.coroot(b));
    }
    let x = x.scale(Rat::new(1, 2));
    for &b in &c.roots() {
        assert_eq!(rs.pairing_rv(b, &x), Rat::one(), "β(x_K) = 1 fails");
    }
    x
}

/// Independent route to x_K: solve the Gram system (β_j, Σ t_i β_i) = 1 on
/// the span of K, without using orthogonality of the cascade.
pub fn cascade_element_by_solving(rs: &RootSystem, c: &Cascade) -> WeightVector {
    let betas = c.roots();
    let m = betas.len();
    let mut a: Vec<Vec<Rat>> = (0..m)
        .map(|j| {
            let mut row: Vec<Rat> = (0..m)
                .map(|i| rs.pairing_rr(betas[j], betas[i]))
                .collect();
            row.push(Rat::one());
            row
        })
        .collect();
    for col in 0..m {
        let p = (col..m).find(|&r| !a[r][col].is_zero()).unwrap();
        a.swap(col, p);
        let pv = a[col][col];
        for j in col..=m {
            a[col][j] /= pv;
        }
        for r in 0..m {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in col..=m {
                    let v = a[col][j];
                    a[r][j] -= f * v;
                }
            }
        }
    }
    let mut x = WeightVector::zero(rs.rank());
    for (i, &b) in betas.iter().enumerate() {
        x = x.add(&WeightVector::from_root_coords(&rs.root(b).coords).scale(a[i][m]));
    }
    x
}

/// Spectrum of x on Δ⁺: the eigenvalues of ad x on u⁺.
pub fn spectrum(rs: &RootSystem, x: &WeightVector) -> Spectrum {
    let by_root: Vec<Rat> = rs
        .positive_roots
        .iter()
        .map(|r| rs.pairing_rv(r.id, x))
        .collect();
    let mut counts = BTreeMap::new();
    for v in &by_root {
        *counts.entry(*v).or_insert(0) += 1;
    }
    Spectrum { by_root, counts }
}

/// The marks α(x) for α ∈ Π.
pub fn simple_marks(rs: &RootSystem, x: &WeightVector) -> Vec<Rat> {
    (0..rs.rank())
        .map(|i| rs.pairing_rv(rs.simple_root_id(i), x))
        .collect()
}

/// True when x is dominant: γ(x) ≥ 0 for every positive root.
pub fn is_dominant(rs: &RootSystem, x: &WeightVector) -> bool {
    simple_marks(rs, x).iter().all(|v| *v >= Rat::zero())
}

/// Present iff θ is a fundamental weight (every type except A and C).
/// Verifies the decomposition α̃ = ½(θ − Σ c_i β_i), Σ c_i = 3,
/// α̃(x_K) = −1 and (θ−α̃)(x_K) = 2.
pub fn tap_data(rs: &RootSystem, c: &Cascade, x: &WeightVector) -> Option<TapData> {
    if !rs.simple_type.theta_is_fundamental() {
        return None;
    }
    let adjacent: Vec<usize> = (0..rs.rank())
        .filter(|&i| !rs.pairing_rr(rs.theta, rs.simple_root_id(i)).is_zero())
        .collect();
    assert_eq!(adjacent.len(), 1, "θ touches exactly one simple root");
    let tap_simple = adjacent[0];
    let tap_root = rs.simple_root_id(tap_simple);
    assert!(rs.is_long(tap_root), "α̃ is long");
    assert_eq!(rs.root(rs.theta).coords[tap_simple], 2, "[θ:α̃] = 2");

    let betas = c.roots();
    let mut j_set = Vec::new();
    let mut cs = Vec::new();
    let tap_norm = rs.norm(tap_root);
    for (i, &b) in betas.iter().enumerate() {
        if rs.pairing_rr(tap_root, b) < Rat::zero() {
            j_set.push(i);
            let ratio = tap_norm / rs.norm(b);
            assert!(ratio.is_integer());
            cs.push(ratio.to_integer());
        }
    }
    assert!(!j_set.contains(&0), "θ itself never appears in J");
    assert!(j_set.len() <= 3);
    assert_eq!(cs.iter().sum::<i64>(), 3, "Σ c_i = 3");

    // α̃ = ½(θ − Σ c_i β_i)
    let mut rhs = WeightVector::from_root_coords(&rs.root(rs.theta).coords);
    for (&node, &ci) in j_set.iter().zip(&cs) {
        rhs = rhs.sub(
            &WeightVector::from_root_coords(&rs.root(betas[node]).coords)
                .scale(Rat::from_integer(ci)),
        );
    }
    let rhs = rhs.scale(Rat::new(1, 2));
    assert_eq!(
        rhs,
        WeightVector::from_root_coords(&rs.root(tap_root).coords),
        "α̃ decomposition over the cascade"
    );
    assert_eq!(rs.pairing_rv(tap_root, x), -Rat::one(), "α̃(x_K) = −1");
    let theta_minus_tap = WeightVector::from_root_coords(&rs.root(rs.theta).coords)
        .sub(&WeightVector::from_root_coords(&rs.root(tap_root).coords));
    assert_eq!(
        rs.pairing_vv(&theta_minus_tap, x),
        Rat::from_integer(2),
        "(θ−α̃)(x_K) = 2"
    );
    Some(TapData {
        tap_simple,
        tap_root,
        j_set,
        c: cs,
    })
}

/// For every γ ∈ Δ⁺ ∖ K, the partner β_j − γ inside the same Heisenberg
/// subset; the values sum to 1, so m_d = m_{1−d}.
pub fn symmetry_check(rs: &RootSystem, c: &Cascade, x: &WeightVector) -> SymmetryReport {
    let betas = c.roots();
    let in_cascade: std::collections::BTreeSet<usize> = betas.iter().copied().collect();
    let mut node_of_root = vec![usize::MAX; rs.positive_roots.len()];
    for i in 0..c.size() {
        for g in crate::cascade::heisenberg_subset(rs, c, i) {
            node_of_root[g] = i;
        }
    }
    let mut pairs = Vec::new();
    let mut counts: BTreeMap<Rat, usize> = BTreeMap::new();
    for r in &rs.positive_roots {
        if in_cascade.contains(&r.id) {
            continue;
        }
        *counts.entry(rs.pairing_rv(r.id, x)).or_insert(0) += 1;
        let node = node_of_root[r.id];
        assert_ne!(node, usize::MAX);
        let beta = betas[node];
        let partner_coords: Vec<i64> = rs
            .root(beta)
            .coords
            .iter()
            .zip(&r.coords)
            .map(|(b, g)| b - g)
            .collect();
        let partner = rs
            .root_id(&partner_coords)
            .expect("β_j − γ stays inside the Heisenberg subset");
        assert_eq!(node_of_root[partner], node);
        assert_eq!(
            rs.pairing_rv(r.id, x) + rs.pairing_rv(partner, x),
            Rat::one(),
            "paired values sum to 1"
        );
        pairs.push(SymmetryPair {
            gamma: r.id,
            partner,
            node,
        });
    }
    for (v, m) in &counts {
        let mirrored = Rat::one() - *v;
        assert_eq!(
            counts.get(&mirrored),
            Some(m),
            "multiplicity symmetry m_d = m_{{1−d}}"
        );
    }
    SymmetryReport { pairs }
}

/// Coxeter numbers (h, h*) of the subsystem attached to a cascade node,
/// computed on a freshly built copy of the subtype.
pub fn subtype_coxeter_numbers(c: &Cascade, node: usize) -> (i64, i64) {
    let sub = RootSystem::build(c.nodes[node].subtype.simple_type);
    sub.coxeter_numbers()
}

/// Verifies 2ρ = Σ (h*(g⟨j⟩)−1) β_j and 2ρ∨ = Σ (h(g⟨j⟩)−1) β_j∨ exactly
/// and returns the two coefficient vectors.
pub fn rho_decompositions(rs: &RootSystem, c: &Cascade) -> Result<RhoDecomposition, Error> {
    let betas = c.roots();
    let mut rho_coeffs = Vec::new();
    let mut rho_vee_coeffs = Vec::new();
    let mut sum_rho = WeightVector::zero(rs.rank());
    let mut sum_rho_vee = WeightVector::zero(rs.rank());
    for (j, &b) in betas.iter().enumerate() {
        let (h, hs) = subtype_coxeter_numbers(c, j);
        rho_coeffs.push(hs - 1);
        rho_vee_coeffs.push(h - 1);
        sum_rho = sum_rho.add(
            &WeightVector::from_root_coords(&rs.root(b).coords).scale(Rat::from_integer(hs - 1)),
        );
        sum_rho_vee = sum_rho_vee.add(&rs.coroot(b).scale(Rat::from_integer(h - 1)));
    }
    let two_rho = rs.rho().scale(Rat::from_integer(2));
    let two_rho_vee = rs.rho_vee().scale(Rat::from_integer(2));
    if sum_rho != two_rho {
        return Err(Error::DecompositionMismatch(format!(
            "2ρ for {}: {:?} vs {:?}",
            rs.simple_type, sum_rho.coords, two_rho.coords
        )));
    }
    if sum_rho_vee != two_rho_vee {
        return Err(Error::DecompositionMismatch(format!(
            "2ρ∨ for {}: {:?} vs {:?}",
            rs.simple_type, sum_rho_vee.coords, two_rho_vee.coords
        )));
    }
    Ok(RhoDecomposition {
        rho_coeffs,
        rho_vee_coeffs,
    })
}

/// Whether x_K lies in the coroot lattice.
pub fn qvee_classification(rs: &RootSystem, x: &WeightVector) -> bool {
    rs.lattice_member(x, Lattice::QVee)
}

/// Models the eigenvalue multiset of ad x_K on b_K = t_K ⊕ u⁺ as
/// {0 with multiplicity #K} ⊎ {γ(x_K) : γ ∈ Δ⁺}; verifies the symmetry
/// about ½ and the trace identity ½(dim u + #K) = 2ρ(x_K) = Σ (h*(g⟨j⟩)−1).
pub fn frobenius_spectrum_check(
    rs: &RootSystem,
    c: &Cascade,
    x: &WeightVector,
) -> FrobeniusReport {
    let sp = spectrum(rs, x);
    let mut multiset = sp.counts.clone();
    *multiset.entry(Rat::zero()).or_insert(0) += c.size();
    for (v, m) in &multiset {
        assert_eq!(
            multiset.get(&(Rat::one() - *v)),
            Some(m),
            "b_K spectrum symmetric about 1/2"
        );
    }
    let trace: Rat = sp.by_root.iter().sum();
    let magic = Rat::new((rs.positive_roots.len() + c.size()) as i64, 2);
    assert_eq!(trace, magic, "trace equals the magic number ½(dim u + #K)");
    let two_rho_x = rs.pairing_vv(&rs.rho().scale(Rat::from_integer(2)), x);
    assert_eq!(trace, two_rho_x, "trace equals 2ρ(x_K)");
    let coeff_sum: i64 = (0..c.size())
        .map(|j| subtype_coxeter_numbers(c, j).1 - 1)
        .sum();
    assert_eq!(trace, Rat::from_integer(coeff_sum));
    FrobeniusReport { multiset, trace }
}

/// Coefficients k_i of γ̄ = ½(γ − w₀γ) in the basis K of the (−w₀)-fixed
/// space; the expansion is asserted to be exact.
pub fn cascade_expansion(
    rs: &RootSystem,
    c: &Cascade,
    w0: &WeylElement,
    gamma: usize,
) -> Vec<Rat> {
    let g = WeightVector::from_root_coords(&rs.root(gamma).coords);
    let img = w0.apply(&g);
    let bar = g.sub(&img).scale(Rat::new(1, 2));
    let betas = c.roots();
    let ks: Vec<Rat> = betas
        .iter()
        .map(|&b| {
            let bv = WeightVector::from_root_coords(&rs.root(b).coords);
            rs.pairing_vv(&bar, &bv) / rs.norm(b)
        })
        .collect();
    let mut recon = WeightVector::zero(rs.rank());
    for (&b, k) in betas.iter().zip(&ks) {
        recon = recon.add(&WeightVector::from_root_coords(&rs.root(b).coords).scale(*k));
    }
    assert_eq!(recon, bar, "γ̄ lies in the span of the cascade");
    ks
}
