//! Kostant's construction of abelian ideals from admissible Cartan
//! elements: the z-grading of Δ⁺, the unique Weyl element w_z whose
//! inversion set is Δ⁺_z(1) ∪ Δ⁺_z(2), the abelian ideal a_z, and the
//! explicit description of both when z = x_K (minimal/maximal elements,
//! the height threshold d_K, and the image of Π under w_K⁻¹).

use crate::root_system::{RootSystem, WeightVector, WeylElement};
use crate::{Error, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// Partition of Δ⁺ by the values γ(z) ∈ {−1, 0, 1, 2}.
#[derive(Debug, Clone)]
pub struct ZGrading {
    pub z: WeightVector,
    /// Degree of each positive root, indexed by root id.
    pub degree: Vec<i64>,
    /// parts[i+1] = root ids of degree i ∈ {−1,0,1,2}.
    parts: [Vec<usize>; 4],
    /// pi_parts[i+1] = simple indices of degree i.
    pi_parts: [Vec<usize>; 4],
}

impl ZGrading {
    pub fn part(&self, degree: i64) -> &[usize] {
        &self.parts[(degree + 1) as usize]
    }

    pub fn pi_part(&self, degree: i64) -> &[usize] {
        &self.pi_parts[(degree + 1) as usize]
    }
}

/// Root set of the abelian ideal a_z = w_z(Δ⁺_z(−1)) ⊔ w_z(−Δ⁺_z(2)).
#[derive(Debug, Clone)]
pub struct AbelianIdeal {
    pub roots: BTreeSet<usize>,
}

impl AbelianIdeal {
    pub fn dim(&self) -> usize {
        self.roots.len()
    }
}

/// Everything the construction yields for z = x_K.
#[derive(Debug, Clone)]
pub struct KostantData {
    pub grading: ZGrading,
    pub w: WeylElement,
    /// Reduced word for w (indices of simple reflections, applied first to
    /// last).
    pub word: Vec<usize>,
    pub ideal: AbelianIdeal,
    pub d_k: i64,
    /// Simple index j with w(θ) = −α_j (0-based).
    pub theta_image: usize,
    pub order: u64,
}

/// Grades Δ⁺ by γ(z); errors unless every value lies in {−1, 0, 1, 2}.
pub fn grade(rs: &RootSystem, z: &WeightVector) -> Result<ZGrading, Error> {
    let mut degree = Vec::with_capacity(rs.positive_roots.len());
    for r in &rs.positive_roots {
        let v = rs.pairing_rv(r.id, z);
        if !v.is_integer() || v < -Rat::one() || v > Rat::from_integer(2) {
            return Err(Error::NotAdmissible {
                root: r.coords.clone(),
                value: v.to_string(),
            });
        }
        degree.push(v.to_integer());
    }
    Ok(grading_from_degrees(rs, z.clone(), degree))
}

/// Fast integer path for z given in fundamental-coweight coordinates:
/// γ(z) = Σ c_i [γ:α_i]. Returns the degrees, or `None` if inadmissible.
pub fn grade_coweight(rs: &RootSystem, c: &[i64]) -> Option<Vec<i64>> {
    let mut degree = Vec::with_capacity(rs.positive_roots.len());
    for r in &rs.positive_roots {
        let v: i64 = r.coords.iter().zip(c).map(|(a, b)| a * b).sum();
        if !(-1..=2).contains(&v) {
            return None;
        }
        degree.push(v);
    }
    Some(degree)
}

/// The weight vector Σ c_i ϖ_i∨ for integer coweight coordinates.
pub fn coweight_combination(rs: &RootSystem, c: &[i64]) -> WeightVector {
    let mut z = WeightVector::zero(rs.rank());
    for (i, &ci) in c.iter().enumerate() {
        if ci != 0 {
            z = z.add(&rs.fundamental_coweight(i).scale(Rat::from_integer(ci)));
        }
    }
    z
}

pub fn grading_from_degrees(rs: &RootSystem, z: WeightVector, degree: Vec<i64>) -> ZGrading {
    let mut parts: [Vec<usize>; 4] = Default::default();
    let mut pi_parts: [Vec<usize>; 4] = Default::default();
    for (id, &d) in degree.iter().enumerate() {
        parts[(d + 1) as usize].push(id);
    }
    for i in 0..rs.rank() {
        let d = degree[rs.simple_root_id(i)];
        pi_parts[(d + 1) as usize].push(i);
    }
    ZGrading {
        z,
        degree,
        parts,
        pi_parts,
    }
}

/// Greedy walk into the antidominant chamber: while some simple root has
/// α(v) > 0, reflect in the lowest such index. Returns the Weyl element and
/// its reduced word. Terminates within #Δ⁺ steps.
pub fn anti_dominantize(rs: &RootSystem, z: &WeightVector) -> (WeylElement, Vec<usize>) {
    chamber_walk(rs, z, true)
}

/// Greedy walk into the dominant chamber (used for characteristics).
pub fn dominantize(rs: &RootSystem, z: &WeightVector) -> (WeylElement, Vec<usize>) {
    chamber_walk(rs, z, false)
}

fn chamber_walk(rs: &RootSystem, z: &WeightVector, anti: bool) -> (WeylElement, Vec<usize>) {
    let mut v = z.clone();
    let mut w = WeylElement::identity(rs.rank());
    let mut word = Vec::new();
    let bound = rs.positive_roots.len();
    loop {
        let bad = (0..rs.rank()).find(|&i| {
            let m = rs.pairing_rv(rs.simple_root_id(i), &v);
            if anti {
                m > Rat::zero()
            } else {
                m < Rat::zero()
            }
        });
        match bad {
            None => return (w, word),
            Some(i) => {
                let s = rs.simple_reflection(i);
                v = s.apply(&v);
                w = s.compose(&w);
                word.push(i);
                assert!(word.len() <= bound, "chamber walk must stop within #Δ⁺ steps");
            }
        }
    }
}

/// w_z: the unique element with N(w_z) = Δ⁺_z(1) ∪ Δ⁺_z(2), obtained as the
/// minimal-length element taking z to the antidominant chamber.
pub fn kostant_element(rs: &RootSystem, g: &ZGrading) -> (WeylElement, Vec<usize>) {
    let (w, word) = anti_dominantize(rs, &g.z);
    let n_w: BTreeSet<usize> = rs.inversion_set(&w).into_iter().collect();
    let expect: BTreeSet<usize> = g.part(1).iter().chain(g.part(2)).copied().collect();
    assert_eq!(n_w, expect, "N(w_z) = Δ⁺_z(1) ∪ Δ⁺_z(2)");
    (w, word)
}

/// a_z: the upper abelian ideal w(Δ⁺_z(−1)) ⊔ w(−Δ⁺_z(2)); all of its
/// defining properties are asserted.
pub fn abelian_ideal(rs: &RootSystem, g: &ZGrading, w: &WeylElement) -> AbelianIdeal {
    let mut roots = BTreeSet::new();
    for &r in g.part(-1) {
        let img = w.apply_coords(&rs.root(r).coords);
        let id = rs.root_id(&img).expect("w(Δ⁺_z(−1)) ⊂ Δ⁺");
        assert!(roots.insert(id));
    }
    for &r in g.part(2) {
        let img: Vec<i64> = w
            .apply_coords(&rs.root(r).coords)
            .iter()
            .map(|&c| -c)
            .collect();
        let id = rs.root_id(&img).expect("w(−Δ⁺_z(2)) ⊂ Δ⁺");
        assert!(roots.insert(id));
    }
    assert_eq!(roots.len(), g.part(-1).len() + g.part(2).len());
    assert!(rs.is_upper_ideal(&roots), "a_z is an upper ideal");
    let list: Vec<usize> = roots.iter().copied().collect();
    for (i, &a) in list.iter().enumerate() {
        for &b in &list[i..] {
            let sum: Vec<i64> = rs
                .root(a)
                .coords
                .iter()
                .zip(&rs.root(b).coords)
                .map(|(x, y)| x + y)
                .collect();
            assert!(!rs.is_root(&sum), "a_z is abelian");
        }
    }
    AbelianIdeal { roots }
}

/// Closure of both halves of the grading under root addition: degrees
/// {1,2} and degrees {−1,0} are each closed.
pub fn check_grading_closure(rs: &RootSystem, g: &ZGrading) {
    for r in &rs.positive_roots {
        for s in &rs.positive_roots {
            let sum: Vec<i64> = r.coords.iter().zip(&s.coords).map(|(a, b)| a + b).collect();
            if let Some(t) = rs.root_id(&sum) {
                let (dr, ds, dt) = (g.degree[r.id], g.degree[s.id], g.degree[t]);
                assert_eq!(dr + ds, dt);
                if dr >= 1 && ds >= 1 {
                    assert!(dt >= 1, "high part closed under addition");
                }
                if dr <= 0 && ds <= 0 {
                    assert!(dt <= 0, "low part closed under addition");
                }
            }
        }
    }
}

/// Minimal elements of an upper ideal, by cover inspection.
pub fn minimal_elements(rs: &RootSystem, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    set.iter()
        .copied()
        .filter(|&g| {
            (0..rs.rank()).all(|i| {
                let mut down = rs.root(g).coords.clone();
                down[i] -= 1;
                match rs.root_id(&down) {
                    Some(id) => !set.contains(&id),
                    None => true,
                }
            })
        })
        .collect()
}

/// Maximal elements of the complement of an upper ideal.
pub fn maximal_of_complement(rs: &RootSystem, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    rs.positive_roots
        .iter()
        .filter(|r| !set.contains(&r.id))
        .filter(|r| {
            (0..rs.rank()).all(|i| {
                let mut up = r.coords.clone();
                up[i] += 1;
                match rs.root_id(&up) {
                    Some(id) => set.contains(&id),
                    None => true,
                }
            })
        })
        .map(|r| r.id)
        .collect()
}

/// Report for the minimal/maximal element descriptions of a_K.
#[derive(Debug, Clone)]
pub struct MinMaxReport {
    pub minimals: BTreeSet<usize>,
    pub maximals: BTreeSet<usize>,
}

/// Verifies min(Δ⟨K⟩) = w_K(Π_K(−1)) and max(complement) = −w_K(Π_K(1))
/// against brute-force cover inspection.
pub fn min_max_theorems(
    rs: &RootSystem,
    g: &ZGrading,
    w: &WeylElement,
    ideal: &AbelianIdeal,
) -> MinMaxReport {
    let minimals = minimal_elements(rs, &ideal.roots);
    let maximals = maximal_of_complement(rs, &ideal.roots);
    let expect_min: BTreeSet<usize> = g
        .pi_part(-1)
        .iter()
        .map(|&i| {
            let img = w.apply_coords(&rs.root(rs.simple_root_id(i)).coords);
            rs.root_id(&img).expect("w(Π_K(−1)) ⊂ Δ⁺")
        })
        .collect();
    let expect_max: BTreeSet<usize> = g
        .pi_part(1)
        .iter()
        .map(|&i| {
            let img: Vec<i64> = w
                .apply_coords(&rs.root(rs.simple_root_id(i)).coords)
                .iter()
                .map(|&c| -c)
                .collect();
            rs.root_id(&img).expect("−w(Π_K(1)) ⊂ Δ⁺")
        })
        .collect();
    assert_eq!(minimals, expect_min, "minimal elements of the ideal");
    assert_eq!(maximals, expect_max, "maximal elements of the complement");
    MinMaxReport { minimals, maximals }
}

/// d_K = 1 + Σ_{α ∈ Π_K(≥0)} [θ:α]; asserts the height-filter description
/// of a_K and both boundary-height characterizations, plus the h/2+1 rule.
pub fn d_threshold(
    rs: &RootSystem,
    g: &ZGrading,
    w: &WeylElement,
    ideal: &AbelianIdeal,
) -> i64 {
    let theta = rs.root(rs.theta).coords.clone();
    let d_k: i64 = 1 + g
        .pi_part(0)
        .iter()
        .chain(g.pi_part(1))
        .chain(g.pi_part(2))
        .map(|&i| theta[i])
        .sum::<i64>();
    // the ideal is exactly the height filter at d_K
    for r in &rs.positive_roots {
        assert_eq!(
            ideal.roots.contains(&r.id),
            r.height() >= d_k,
            "a_K = {{ht ≥ d_K}}"
        );
    }
    let winv = w.inverse();
    // w⁻¹(γ) ∈ Π_K(d)? — the preimage may be a negative root; only the
    // positive simple case counts.
    let simple_index = |coords: &[i64]| -> Option<usize> {
        if coords.iter().sum::<i64>() == 1 && coords.iter().all(|&c| c >= 0) {
            coords.iter().position(|&c| c == 1)
        } else {
            None
        }
    };
    for r in &rs.positive_roots {
        let pre = winv.apply_coords(&r.coords);
        let in_minus_one = simple_index(&pre)
            .map(|i| g.pi_part(-1).contains(&i))
            .unwrap_or(false);
        assert_eq!(
            r.height() == d_k,
            in_minus_one,
            "ht(γ)=d_K ⟺ w_K⁻¹(γ) ∈ Π_K(−1)"
        );
        let neg_pre: Vec<i64> = pre.iter().map(|&c| -c).collect();
        let in_plus_one = simple_index(&neg_pre)
            .map(|i| g.pi_part(1).contains(&i))
            .unwrap_or(false);
        assert_eq!(
            r.height() == d_k - 1,
            in_plus_one,
            "ht(γ)=d_K−1 ⟺ −w_K⁻¹(γ) ∈ Π_K(1)"
        );
    }
    let (h, _) = rs.coxeter_numbers();
    if g.pi_part(0).is_empty() {
        assert_eq!(Rat::from_integer(d_k), Rat::new(h, 2) + Rat::one());
    } else {
        assert!(Rat::from_integer(d_k) > Rat::new(h, 2) + Rat::one());
    }
    d_k
}

/// Report of the base of Δ_z(0) and the preimage of Π.
#[derive(Debug, Clone)]
pub struct WInvPiReport {
    /// Root ids of the base of Δ_z(0) inside Δ⁺_z(0).
    pub base: Vec<usize>,
    /// Simple index j with w(θ) = −α_j.
    pub theta_image: usize,
}

/// For admissible z with rk Δ_z(0) = rk Δ − 1 and θ(z) = 1: w_z⁻¹(Π) equals
/// the base of Δ_z(0) together with −θ, each base element maps into Π, and
/// −w_z(z) is the fundamental coweight at the node absorbing θ.
pub fn w_inverse_of_pi(
    rs: &RootSystem,
    g: &ZGrading,
    w: &WeylElement,
) -> Result<WInvPiReport, Error> {
    let zero_part = g.part(0);
    if rs.span_rank(zero_part) != rs.rank() - 1 {
        return Err(Error::PreconditionFailed(format!(
            "rk Δ_z(0) = {} ≠ rk − 1",
            rs.span_rank(zero_part)
        )));
    }
    if g.degree[rs.theta] != 1 {
        return Err(Error::PreconditionFailed("θ(z) ≠ 1".into()));
    }
    // base = elements of Δ⁺_z(0) that are not sums of two of them
    let zero_set: BTreeSet<usize> = zero_part.iter().copied().collect();
    let base: Vec<usize> = zero_part
        .iter()
        .copied()
        .filter(|&gamma| {
            !zero_part.iter().any(|&a| {
                let diff: Vec<i64> = rs
                    .root(gamma)
                    .coords
                    .iter()
                    .zip(&rs.root(a).coords)
                    .map(|(x, y)| x - y)
                    .collect();
                match rs.root_id(&diff) {
                    Some(b) => zero_set.contains(&b),
                    None => false,
                }
            })
        })
        .collect();
    // each base element is mapped into Π by w (and θ to −Π)
    for &b in &base {
        let img = w.apply_coords(&rs.root(b).coords);
        assert_eq!(img.iter().sum::<i64>(), 1, "base of Δ_z(0) maps into Π");
        assert!(rs.root_id(&img).is_some());
    }
    let theta_img = w.apply_coords(&rs.root(rs.theta).coords);
    assert_eq!(theta_img.iter().sum::<i64>(), -1, "w(θ) ∈ −Π");
    let theta_image = theta_img.iter().position(|&c| c == -1).unwrap();
    // w⁻¹(Π) = base ∪ {−θ}
    let winv = w.inverse();
    let mut preimages: Vec<Vec<i64>> = (0..rs.rank())
        .map(|i| winv.apply_coords(&rs.root(rs.simple_root_id(i)).coords))
        .collect();
    preimages.sort();
    let mut expect: Vec<Vec<i64>> = base.iter().map(|&b| rs.root(b).coords.clone()).collect();
    expect.push(rs.root(rs.theta).coords.iter().map(|&c| -c).collect());
    expect.sort();
    assert_eq!(preimages, expect, "w⁻¹(Π) = base(Δ_z(0)) ∪ {{−θ}}");
    // −w(z) = ϖ_j∨
    let minus_wz = w.apply(&g.z).neg();
    assert_eq!(
        minus_wz,
        rs.fundamental_coweight(theta_image),
        "−w_z(z) is a fundamental coweight"
    );
    Ok(WInvPiReport { base, theta_image })
}

/// Runs the whole construction for z = x_K; `NotApplicable` for A_{2p}.
pub fn kostant_data(rs: &RootSystem, x: &WeightVector) -> Result<KostantData, Error> {
    if rs.simple_type.is_a2p() {
        return Err(Error::NotApplicable);
    }
    let grading = grade(rs, x)?;
    let (w, word) = kostant_element(rs, &grading);
    let ideal = abelian_ideal(rs, &grading, &w);
    let d_k = d_threshold(rs, &grading, &w, &ideal);
    let theta_img = w.apply_coords(&rs.root(rs.theta).coords);
    assert_eq!(theta_img.iter().sum::<i64>(), -1, "w_K(θ) ∈ −Π");
    let theta_image = theta_img.iter().position(|&c| c == -1).unwrap();
    let order = w.order(1_000_000)?;
    Ok(KostantData {
        grading,
        w,
        word,
        ideal,
        d_k,
        theta_image,
        order,
    })
}

/// One rejection-sampling draw of an admissible z: integer coordinates from
/// {−1,0,1} in the fundamental-coweight basis, rejected unless every
/// positive root evaluates in {−1,0,1,2}. Returns (coweight coords, degrees).
pub fn sample_admissible(
    rs: &RootSystem,
    rng: &mut impl rand::Rng,
) -> Option<(Vec<i64>, Vec<i64>)> {
    let c: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(-1..=1)).collect();
    grade_coweight(rs, &c).map(|deg| (c, deg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cascade::{compute_cascade, Cascade};
    use crate::cascade_element::cascade_element;
    use crate::root_system::SimpleType;

    fn setup(label: &str) -> (RootSystem, Cascade, WeightVector) {
        let rs = RootSystem::build(SimpleType::parse(label).unwrap());
        let c = compute_cascade(&rs);
        let x = cascade_element(&rs, &c);
        (rs, c, x)
    }

    #[test]
    fn grade_zero_vector() {
        let (rs, _, _) = setup("B3");
        let g = grade(&rs, &WeightVector::zero(3)).unwrap();
        assert_eq!(g.part(0).len(), rs.positive_roots.len());
        let (w, word) = kostant_element(&rs, &g);
        assert!(w.is_identity());
        assert!(word.is_empty());
    }

    #[test]
    fn grade_e6_pi_marks() {
        let (rs, _, x) = setup("E6");
        let g = grade(&rs, &x).unwrap();
        assert_eq!(g.pi_part(1), &[2]);
        assert_eq!(g.pi_part(-1), &[5]);
        assert_eq!(g.pi_part(0), &[0, 1, 3, 4]);
    }

    #[test]
    fn grade_a4_not_admissible() {
        let (rs, _, x) = setup("A4");
        match grade(&rs, &x) {
            Err(Error::NotAdmissible { value, .. }) => assert_eq!(value, "1/2"),
            other => panic!("expected NotAdmissible, got {other:?}"),
        }
        assert!(matches!(kostant_data(&rs, &x), Err(Error::NotApplicable)));
    }

    #[test]
    fn g2_w_k() {
        let (rs, _, x) = setup("G2");
        let data = kostant_data(&rs, &x).unwrap();
        // w_K = (r_{α₂} r_{α₁})²
        let s1 = rs.simple_reflection(0);
        let s2 = rs.simple_reflection(1);
        let expect = s2.compose(&s1).compose(&s2).compose(&s1);
        assert_eq!(data.w, expect);
        assert_eq!(data.theta_image, 1);
        assert_eq!(data.order, 3);
        // ideal = {3α₁+α₂, θ}
        let ids: Vec<Vec<i64>> = data
            .ideal
            .roots
            .iter()
            .map(|&r| rs.root(r).coords.clone())
            .collect();
        assert_eq!(ids, vec![vec![3, 1], vec![3, 2]]);
        assert_eq!(data.d_k, 4);
    }

    #[test]
    fn c_series_w_k() {
        for n in 2..=6 {
            let (rs, _, x) = setup(&format!("C{n}"));
            let data = kostant_data(&rs, &x).unwrap();
            assert!(data.ideal.roots.is_empty());
            assert_eq!(data.order, 2, "w_K is an involution for C_n");
            assert_eq!(data.theta_image, n - 1);
            let (h, _) = rs.coxeter_numbers();
            assert_eq!(data.d_k, h);
            // ε_i ↦ −ε_{n+1−i}
            let perm = crate::classical::SignedPerm {
                perm: (0..n).rev().collect(),
                sign: vec![-1; n],
            };
            assert_eq!(data.w, perm.to_weyl(&rs));
        }
    }

    #[test]
    fn e7_ideal_dimension() {
        let (rs, _, x) = setup("E7");
        let data = kostant_data(&rs, &x).unwrap();
        assert_eq!(data.ideal.dim(), 14);
        assert_eq!(data.d_k, 10);
        assert_eq!(data.order, 18);
        assert_eq!(data.theta_image, 6);
        min_max_theorems(&rs, &data.grading, &data.w, &data.ideal);
    }

    #[test]
    fn min_max_c_and_g() {
        let (rs, _, x) = setup("C4");
        let data = kostant_data(&rs, &x).unwrap();
        let rep = min_max_theorems(&rs, &data.grading, &data.w, &data.ideal);
        assert!(rep.minimals.is_empty());
        assert_eq!(rep.maximals, [rs.theta].into_iter().collect());

        let (rsg, _, xg) = setup("G2");
        let datag = kostant_data(&rsg, &xg).unwrap();
        let repg = min_max_theorems(&rsg, &datag.grading, &datag.w, &datag.ideal);
        let min_coords: Vec<Vec<i64>> = repg
            .minimals
            .iter()
            .map(|&r| rsg.root(r).coords.clone())
            .collect();
        assert_eq!(min_coords, vec![vec![3, 1]]);
    }

    #[test]
    fn e8_min_count() {
        let (rs, _, x) = setup("E8");
        let data = kostant_data(&rs, &x).unwrap();
        assert_eq!(data.grading.pi_part(-1), &[0, 2, 4, 6]);
        let rep = min_max_theorems(&rs, &data.grading, &data.w, &data.ideal);
        assert_eq!(rep.minimals.len(), 4);
        assert_eq!(data.order, 5);
        assert_eq!(data.theta_image, 6);
    }

    #[test]
    fn w_inverse_of_pi_examples() {
        let (rs, _, x) = setup("D8");
        let data = kostant_data(&rs, &x).unwrap();
        let rep = w_inverse_of_pi(&rs, &data.grading, &data.w).unwrap();
        assert_eq!(rep.theta_image, 3); // α₄ for D₈ = D_{2n} with n = 4
        // the base consists of the edge sums α_i + α_j
        for &b in &rep.base {
            assert_eq!(rs.root(b).height(), 2);
        }

        let (rsg, _, xg) = setup("G2");
        let datag = kostant_data(&rsg, &xg).unwrap();
        let repg = w_inverse_of_pi(&rsg, &datag.grading, &datag.w).unwrap();
        assert_eq!(repg.theta_image, 1);
        let minus_wx = datag.w.apply(&xg).neg();
        assert_eq!(minus_wx, rsg.fundamental_coweight(1));

        let (rse, _, xe) = setup("E7");
        let datae = kostant_data(&rse, &xe).unwrap();
        assert_eq!(datae.theta_image, 6);
        w_inverse_of_pi(&rse, &datae.grading, &datae.w).unwrap();
    }

    #[test]
    fn pi_zero_stable_under_w() {
        for label in ["A5", "B6", "C5", "D7", "E6", "E7", "E8", "F4", "G2"] {
            let (rs, _, x) = setup(label);
            let data = kostant_data(&rs, &x).unwrap();
            for &i in data.grading.pi_part(0) {
                let img = data.w.apply_coords(&rs.root(rs.simple_root_id(i)).coords);
                assert_eq!(img.iter().sum::<i64>(), 1, "w_K(Π_K(0)) ⊆ Π");
                let j = img.iter().position(|&c| c == 1).unwrap();
                assert!(data.grading.pi_part(0).contains(&j));
            }
        }
    }

    #[test]
    fn random_z_sampling() {
        use rand::SeedableRng;
        let (rs, _, _) = setup("B4");
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut found = 0;
        for _ in 0..60_000 {
            if let Some((c, deg)) = sample_admissible(&rs, &mut rng) {
                found += 1;
                let z = coweight_combination(&rs, &c);
                let g = grade(&rs, &z).unwrap();
                assert_eq!(g.degree, deg);
                check_grading_closure(&rs, &g);
                let (w, _) = kostant_element(&rs, &g);
                abelian_ideal(&rs, &g, &w);
                if found >= 100 {
                    break;
                }
            }
        }
        assert!(found >= 100, "sampler should find admissible elements");
    }
}
