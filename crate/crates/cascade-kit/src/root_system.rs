//! Root systems of the simple Lie algebras with an exact rational bilinear
//! form, in the Vinberg–Onishchik numbering of simple roots.
//!
//! Conventions fixed here and relied on everywhere else:
//! * the invariant form is normalized so that (θ,θ) = 2 for the highest root θ;
//! * simple roots are numbered: A_n chain 1…n; B_n chain with the double edge
//!   (n−1,n) and α_n short; C_n chain with the double edge (n−1,n) and α_n
//!   long; D_n chain 1…n−2 with n−1 and n both attached to n−2; E₆ chain
//!   1–2–3–4–5 with 6 on node 3; E₇ chain 1–…–6 with 7 on node 4; E₈ chain
//!   1–…–7 with 8 on node 5; F₄ chain with the double edge (2,3), α₁ and α₂
//!   short; G₂ with α₁ short.
//!
//! Roots are stored as integer coordinate vectors in the simple-root basis,
//! weights as exact rational vectors in the same basis. Floats never appear.

use crate::{Error, Rat};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// The seven families of simple root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// A simple type such as E₇ or B₅.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl SimpleType {
    /// Checks rank bounds: A n≥1, B n≥2, C n≥2, D n≥4, E n∈{6,7,8}, F n=4,
    /// G n=2. Lower classical ranks are rejected; the identifications
    /// B₁=A₁, D₂=A₁+A₁, D₃=A₃ are handled by the caller picking the
    /// canonical label.
    pub fn new(family: Family, rank: usize) -> Result<SimpleType, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Parses a label like `"E7"` or `"b5"` (case-insensitive).
    pub fn parse(s: &str) -> Result<SimpleType, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::UnknownType(s.into()))?;
        let family = Family::from_letter(letter).ok_or_else(|| Error::UnknownType(s.into()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.into()))?;
        SimpleType::new(family, rank)
    }

    /// Like [`SimpleType::parse`] but additionally rejects the low-rank
    /// aliases of other canonical labels: B₁=A₁, C₁=A₁, D₂=A₁+A₁, B₂=C₂,
    /// D₃=A₃.
    pub fn parse_canonical(s: &str) -> Result<SimpleType, Error> {
        let give = |canonical: &str| Error::NonCanonicalType {
            given: s.trim().to_uppercase(),
            canonical: canonical.into(),
        };
        let t = s.trim().to_uppercase();
        match t.as_str() {
            "B1" | "C1" => return Err(give("A1")),
            "B2" => return Err(give("C2")),
            "D1" => return Err(give("A1")),
            "D2" => return Err(give("A1+A1")),
            "D3" => return Err(give("A3")),
            _ => {}
        }
        SimpleType::parse(&t)
    }

    /// True exactly for A_{2p}: the one series whose cascade element has
    /// half-integral spectrum.
    pub fn is_a2p(self) -> bool {
        self.family == Family::A && self.rank % 2 == 0
    }

    /// θ is a fundamental weight iff the type is neither A_n nor C_n.
    pub fn theta_is_fundamental(self) -> bool {
        !matches!(self.family, Family::A | Family::C)
    }

    /// Closed-form count of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Closed-form coefficients of the highest root.
    pub fn theta_coords(self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A => vec![1; n],
            Family::B => {
                // ε₁+ε₂ = α₁ + 2(α₂+…+α_n)
                let mut c = vec![2; n];
                c[0] = 1;
                c
            }
            Family::C => {
                // 2ε₁ = 2(α₁+…+α_{n−1}) + α_n
                let mut c = vec![2; n];
                c[n - 1] = 1;
                c
            }
            Family::D => {
                let mut c = vec![2; n];
                c[0] = 1;
                c[n - 2] = 1;
                c[n - 1] = 1;
                c
            }
            Family::E => match n {
                6 => vec![1, 2, 3, 2, 1, 2],
                7 => vec![1, 2, 3, 4, 3, 2, 2],
                _ => vec![2, 3, 4, 5, 6, 4, 2, 3],
            },
            Family::F => vec![2, 4, 3, 2],
            Family::G => vec![3, 2],
        }
    }
}

/// A root, stored by its integer coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    /// Dense index into [`RootSystem::positive_roots`].
    pub id: usize,
    /// Coefficients [γ:α_i]; all of one sign for an actual root.
    pub coords: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// An exact rational element of t*_Q in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub coords: Vec<Rat>,
}

impl WeightVector {
    pub fn zero(rank: usize) -> WeightVector {
        WeightVector {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn from_root_coords(coords: &[i64]) -> WeightVector {
        WeightVector {
            coords: coords.iter().map(|&c| Rat::from_integer(c)).collect(),
        }
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: Rat) -> WeightVector {
        WeightVector {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> WeightVector {
        self.scale(-Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// Integer coordinates, if all coordinates are integral.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// The four standard lattices in t*_Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lattice {
    /// Root lattice Q = ⊕ Zα_i.
    Q,
    /// Coroot lattice Q∨ = ⊕ Zα_i∨.
    QVee,
    /// Weight lattice P = (Q∨)*.
    P,
    /// Coweight lattice P∨ = Q*.
    PVee,
}

/// An element of the Weyl group as an exact integer matrix acting on
/// simple-root coordinates (column j holds the coordinates of w(α_j)).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        let mut m = vec![vec![0; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement { matrix: m }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &v)| v == i64::from(i == j))
        })
    }

    /// Image of an integer coordinate vector (e.g. a root).
    pub fn apply_coords(&self, x: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let mut y = vec![0; n];
        for (j, &xj) in x.iter().enumerate() {
            if xj != 0 {
                for i in 0..n {
                    y[i] += self.matrix[i][j] * xj;
                }
            }
        }
        y
    }

    /// Image of a rational weight vector.
    pub fn apply(&self, x: &WeightVector) -> WeightVector {
        let n = self.rank();
        let mut y = vec![Rat::zero(); n];
        for (j, xj) in x.coords.iter().enumerate() {
            if !xj.is_zero() {
                for i in 0..n {
                    y[i] += Rat::from_integer(self.matrix[i][j]) * xj;
                }
            }
        }
        WeightVector { coords: y }
    }

    /// Composition (self ∘ other): first apply `other`, then `self`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0;
                for (k, other_row) in other.matrix.iter().enumerate() {
                    s += self.matrix[i][k] * other_row[j];
                }
                m[i][j] = s;
            }
        }
        WeylElement { matrix: m }
    }

    /// Multiplicative order, by iterated composition.
    pub fn order(&self, bound: u64) -> Result<u64, Error> {
        let mut w = self.clone();
        let mut k = 1;
        while !w.is_identity() {
            w = w.compose(self);
            k += 1;
            if k > bound {
                return Err(Error::OrderOverflow(bound));
            }
        }
        Ok(k)
    }

    /// Exact inverse; Weyl matrices are unimodular so the inverse is integral.
    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut a: Vec<Vec<Rat>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|&v| Rat::from_integer(v)).collect())
            .collect();
        let mut inv: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rat::one()
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("weyl matrix is invertible");
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col];
            for j in 0..n {
                a[col][j] /= p;
                inv[col][j] /= p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for j in 0..n {
                        let ac = a[col][j];
                        let ic = inv[col][j];
                        a[r][j] -= f * ac;
                        inv[r][j] -= f * ic;
                    }
                }
            }
        }
        let matrix = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        assert!(v.is_integer(), "weyl inverse must be integral");
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        WeylElement { matrix }
    }
}

/// The root system Δ of a simple type, with all derived data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub simple_type: SimpleType,
    /// Cartan matrix a_ij = ⟨α_i, α_j∨⟩.
    pub cartan: Vec<Vec<i64>>,
    /// Exact symmetric bilinear form (α_i, α_j), normalized so (θ,θ)=2.
    pub form: Vec<Vec<Rat>>,
    /// All positive roots, sorted by (height, lexicographic coords).
    pub positive_roots: Vec<Root>,
    /// Index of the highest root in `positive_roots`.
    pub theta: usize,
    index: HashMap<Vec<i64>, usize>,
    /// Diagram adjacency (simple indices of neighbors).
    pub neighbors: Vec<Vec<usize>>,
}

/// Squared lengths of the simple roots, normalized so long roots have
/// squared length 2.
fn simple_norms(t: SimpleType) -> Vec<Rat> {
    let n = t.rank;
    let two = Rat::from_integer(2);
    let one = Rat::one();
    match t.family {
        Family::A | Family::D | Family::E => vec![two; n],
        Family::B => {
            let mut v = vec![two; n];
            v[n - 1] = one;
            v
        }
        Family::C => {
            let mut v = vec![one; n];
            v[n - 1] = two;
            v
        }
        Family::F => vec![one, one, two, two],
        Family::G => vec![Rat::new(2, 3), two],
    }
}

/// Dynkin-diagram edges (i, j, (α_i, α_j)) in 0-based node indices.
fn diagram_edges(t: SimpleType) -> Vec<(usize, usize, Rat)> {
    let n = t.rank;
    let m1 = -Rat::one();
    let mh = -Rat::new(1, 2);
    let chain = |k: usize, w: Rat| -> Vec<(usize, usize, Rat)> {
        (0..k.saturating_sub(1)).map(|i| (i, i + 1, w)).collect()
    };
    match t.family {
        Family::A => chain(n, m1),
        Family::B => {
            let mut e = chain(n - 1, m1);
            e.push((n - 2, n - 1, m1));
            e
        }
        Family::C => {
            let mut e = chain(n - 1, mh);
            e.push((n - 2, n - 1, m1));
            e
        }
        Family::D => {
            let mut e = chain(n - 1, m1);
            e.pop();
            e.push((n - 3, n - 2, m1));
            e.push((n - 3, n - 1, m1));
            e
        }
        Family::E => {
            let mut e = chain(n - 1, m1);
            let branch = match n {
                6 => 2,
                7 => 3,
                _ => 4,
            };
            e.push((branch, n - 1, m1));
            e
        }
        Family::F => vec![(0, 1, mh), (1, 2, m1), (2, 3, m1)],
        Family::G => vec![(0, 1, m1)],
    }
}

impl RootSystem {
    /// Builds the full root system by height-graded closure from the simple
    /// roots, validating the classical count and the highest root.
    pub fn build(t: SimpleType) -> RootSystem {
        let n = t.rank;
        let norms = simple_norms(t);
        let mut form = vec![vec![Rat::zero(); n]; n];
        for (i, norm) in norms.iter().enumerate() {
            form[i][i] = *norm;
        }
        let mut neighbors = vec![Vec::new(); n];
        for (i, j, w) in diagram_edges(t) {
            form[i][j] = w;
            form[j][i] = w;
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        // a_ij = 2 (α_i, α_j) / (α_j, α_j)
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let a = Rat::from_integer(2) * form[i][j] / form[j][j];
                assert!(a.is_integer(), "cartan entries must be integral");
                cartan[i][j] = a.to_integer();
            }
        }

        // Height-graded closure using root strings: γ + α_i is a root iff
        // p − ⟨γ, α_i∨⟩ > 0 where p is the depth of the α_i-string below γ.
        let mut by_height: Vec<Vec<Vec<i64>>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut simples = Vec::new();
        for i in 0..n {
            let mut c = vec![0i64; n];
            c[i] = 1;
            seen.insert(c.clone(), ());
            simples.push(c);
        }
        by_height.push(simples);
        loop {
            let h = by_height.len();
            let mut next: Vec<Vec<i64>> = Vec::new();
            for gamma in &by_height[h - 1] {
                for i in 0..n {
                    let pairing: i64 = gamma
                        .iter()
                        .enumerate()
                        .map(|(j, &c)| c * cartan[j][i])
                        .sum();
                    let mut p = 0i64;
                    let mut down = gamma.clone();
                    loop {
                        down[i] -= 1;
                        if down.iter().all(|&c| c == 0) || !seen.contains_key(&down) {
                            break;
                        }
                        p += 1;
                    }
                    if p - pairing > 0 {
                        let mut up = gamma.clone();
                        up[i] += 1;
                        if seen.insert(up.clone(), ()).is_none() {
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            by_height.push(next);
        }

        let mut coords_list: Vec<Vec<i64>> = seen.into_keys().collect();
        coords_list.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        assert_eq!(
            coords_list.len(),
            t.positive_root_count(),
            "positive root count for {t}"
        );
        let positive_roots: Vec<Root> = coords_list
            .into_iter()
            .enumerate()
            .map(|(id, coords)| Root { id, coords })
            .collect();
        let index: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .map(|r| (r.coords.clone(), r.id))
            .collect();

        let max_height = positive_roots.last().unwrap().height();
        let at_top: Vec<&Root> = positive_roots
            .iter()
            .filter(|r| r.height() == max_height)
            .collect();
        assert_eq!(at_top.len(), 1, "highest root must be unique");
        let theta = at_top[0].id;

        let rs = RootSystem {
            simple_type: t,
            cartan,
            form,
            positive_roots,
            theta,
            index,
            neighbors,
        };
        debug_assert_eq!(rs.pairing_rr(theta, theta), Rat::from_integer(2));
        debug_assert_eq!(rs.root(theta).coords, t.theta_coords());
        rs
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank
    }

    pub fn root(&self, id: usize) -> &Root {
        &self.positive_roots[id]
    }

    /// Id of the simple root α_i (0-based i).
    pub fn simple_root_id(&self, i: usize) -> usize {
        let mut c = vec![0i64; self.rank()];
        c[i] = 1;
        self.index[&c]
    }

    /// If `coords` is a positive root, its id.
    pub fn root_id(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// True when `coords` is a root of either sign.
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if self.index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|&c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// Bilinear form on rational coordinate vectors.
    pub fn pairing(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    s += *xi * self.form[i][j] * *yj;
                }
            }
        }
        s
    }

    pub fn pairing_vv(&self, x: &WeightVector, y: &WeightVector) -> Rat {
        self.pairing(&x.coords, &y.coords)
    }

    pub fn pairing_rv(&self, gamma: usize, x: &WeightVector) -> Rat {
        let g = WeightVector::from_root_coords(&self.root(gamma).coords);
        self.pairing(&g.coords, &x.coords)
    }

    pub fn pairing_rr(&self, a: usize, b: usize) -> Rat {
        let x = WeightVector::from_root_coords(&self.root(a).coords);
        let y = WeightVector::from_root_coords(&self.root(b).coords);
        self.pairing(&x.coords, &y.coords)
    }

    /// (γ, γ); equal to 2 exactly for long roots.
    pub fn norm(&self, gamma: usize) -> Rat {
        self.pairing_rr(gamma, gamma)
    }

    pub fn is_long(&self, gamma: usize) -> bool {
        self.norm(gamma) == Rat::from_integer(2)
    }

    /// γ∨ = 2γ/(γ,γ).
    pub fn coroot(&self, gamma: usize) -> WeightVector {
        let g = WeightVector::from_root_coords(&self.root(gamma).coords);
        g.scale(Rat::from_integer(2) / self.norm(gamma))
    }

    /// Coordinatewise root order γ ≼ γ' on positive roots.
    pub fn root_order_leq(&self, a: usize, b: usize) -> bool {
        self.root(a)
            .coords
            .iter()
            .zip(&self.root(b).coords)
            .all(|(x, y)| x <= y)
    }

    /// Upper-ideal test: closed under passing to larger roots.
    pub fn is_upper_ideal(&self, set: &std::collections::BTreeSet<usize>) -> bool {
        for &g in set {
            for i in 0..self.rank() {
                let mut up = self.root(g).coords.clone();
                up[i] += 1;
                if let Some(id) = self.root_id(&up) {
                    if !set.contains(&id) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Reflection r_γ(x) = x − ⟨x, γ∨⟩γ.
    pub fn reflection(&self, gamma: usize) -> WeylElement {
        let n = self.rank();
        let g = &self.root(gamma).coords;
        let gv = self.coroot(gamma);
        let mut m = vec![vec![0i64; n]; n];
        for j in 0..n {
            let c = self.pairing(
                &WeightVector::from_root_coords(&{
                    let mut e = vec![0i64; n];
                    e[j] = 1;
                    e
                })
                .coords,
                &gv.coords,
            );
            assert!(c.is_integer());
            let c = c.to_integer();
            for i in 0..n {
                m[i][j] = i64::from(i == j) - c * g[i];
            }
        }
        WeylElement { matrix: m }
    }

    /// Reflection in the i-th simple root (0-based).
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.reflection(self.simple_root_id(i))
    }

    /// N(w) = {γ ∈ Δ⁺ | w(γ) ∈ Δ⁻}, as root ids.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<usize> {
        let mut out = Vec::new();
        for r in &self.positive_roots {
            let img = w.apply_coords(&r.coords);
            if img.iter().all(|&c| c <= 0) {
                let neg: Vec<i64> = img.iter().map(|&c| -c).collect();
                assert!(self.index.contains_key(&neg), "w must permute the roots");
                out.push(r.id);
            } else {
                assert!(
                    self.index.contains_key(&img),
                    "w must permute the roots (got {img:?})"
                );
            }
        }
        out
    }

    /// Half-sum of positive roots.
    pub fn rho(&self) -> WeightVector {
        let mut s = WeightVector::zero(self.rank());
        for r in &self.positive_roots {
            s = s.add(&WeightVector::from_root_coords(&r.coords));
        }
        s.scale(Rat::new(1, 2))
    }

    /// Half-sum of positive coroots.
    pub fn rho_vee(&self) -> WeightVector {
        let mut s = WeightVector::zero(self.rank());
        for r in &self.positive_roots {
            s = s.add(&self.coroot(r.id));
        }
        s.scale(Rat::new(1, 2))
    }

    /// (h, h*) = (1 + ht θ, (ρ, θ∨) + 1).
    pub fn coxeter_numbers(&self) -> (i64, i64) {
        let h = 1 + self.root(self.theta).height();
        let hs = self.pairing_vv(&self.rho(), &self.coroot(self.theta)) + Rat::one();
        assert!(hs.is_integer());
        (h, hs.to_integer())
    }

    /// Solves form · x = rhs by Gaussian elimination (the form is positive
    /// definite, hence invertible).
    fn solve_form(&self, rhs: &[Rat]) -> Vec<Rat> {
        let n = self.rank();
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rat> = self.form[i].clone();
                row.push(rhs[i]);
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).unwrap();
            a.swap(col, pivot);
            let p = a[col][col];
            for j in col..=n {
                a[col][j] /= p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col];
                    for j in col..=n {
                        let v = a[col][j];
                        a[r][j] -= f * v;
                    }
                }
            }
        }
        (0..n).map(|i| a[i][n]).collect()
    }

    /// Fundamental weight ϖ_i: ⟨ϖ_i, α_j∨⟩ = δ_ij.
    pub fn fundamental_weight(&self, i: usize) -> WeightVector {
        let n = self.rank();
        let rhs: Vec<Rat> = (0..n)
            .map(|j| {
                if j == i {
                    self.form[i][i] / Rat::from_integer(2)
                } else {
                    Rat::zero()
                }
            })
            .collect();
        WeightVector {
            coords: self.solve_form(&rhs),
        }
    }

    /// Fundamental coweight ϖ_i∨ = 2ϖ_i/(α_i,α_i): (ϖ_i∨, α_j) = δ_ij.
    pub fn fundamental_coweight(&self, i: usize) -> WeightVector {
        let n = self.rank();
        let rhs: Vec<Rat> = (0..n)
            .map(|j| if j == i { Rat::one() } else { Rat::zero() })
            .collect();
        WeightVector {
            coords: self.solve_form(&rhs),
        }
    }

    /// Exact membership test in the four standard lattices.
    pub fn lattice_member(&self, v: &WeightVector, lattice: Lattice) -> bool {
        match lattice {
            Lattice::Q => v.coords.iter().all(Rat::is_integer),
            Lattice::QVee => {
                // v = Σ c_i α_i∨ with α_i∨ = (2/(α_i,α_i)) α_i, so
                // c_i = v_i (α_i,α_i)/2 must be integral.
                v.coords
                    .iter()
                    .enumerate()
                    .all(|(i, c)| (*c * self.form[i][i] / Rat::from_integer(2)).is_integer())
            }
            Lattice::P => (0..self.rank()).all(|i| {
                self.pairing_vv(v, &self.coroot(self.simple_root_id(i)))
                    .is_integer()
            }),
            Lattice::PVee => (0..self.rank()).all(|i| {
                let ai = WeightVector::from_root_coords(&{
                    let mut e = vec![0i64; self.rank()];
                    e[i] = 1;
                    e
                });
                self.pairing_vv(v, &ai).is_integer()
            }),
        }
    }

    /// Positive roots supported inside the simple-root subset `s`.
    pub fn subsystem_positive_roots(&self, s: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.rank()];
        for &i in s {
            inside[i] = true;
        }
        self.positive_roots
            .iter()
            .filter(|r| {
                r.coords
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || inside[i])
            })
            .map(|r| r.id)
            .collect()
    }

    /// Highest root of the irreducible subsystem spanned by `s`.
    pub fn highest_root_in(&self, s: &[usize]) -> usize {
        let roots = self.subsystem_positive_roots(s);
        let top = roots
            .iter()
            .max_by_key(|&&id| self.root(id).height())
            .copied()
            .expect("nonempty subsystem");
        let max_h = self.root(top).height();
        debug_assert_eq!(
            roots
                .iter()
                .filter(|&&id| self.root(id).height() == max_h)
                .count(),
            1,
            "irreducible subsystem has a unique highest root"
        );
        top
    }

    /// Connected components of a subset of diagram nodes.
    pub fn diagram_components(&self, s: &[usize]) -> Vec<Vec<usize>> {
        let mut remaining: std::collections::BTreeSet<usize> = s.iter().copied().collect();
        let mut comps = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = vec![];
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.neighbors[v] {
                    if remaining.remove(&u) {
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        // deterministic order: by smallest member
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Rank (dimension of the span) of a set of roots.
    pub fn span_rank(&self, roots: &[usize]) -> usize {
        let n = self.rank();
        let mut rows: Vec<Vec<Rat>> = roots
            .iter()
            .map(|&id| {
                self.root(id)
                    .coords
                    .iter()
                    .map(|&c| Rat::from_integer(c))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..n {
            if let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
                rows.swap(rank, p);
                let pv = rows[rank][col];
                for r in 0..rows.len() {
                    if r != rank && !rows[r][col].is_zero() {
                        let f = rows[r][col] / pv;
                        for c in col..n {
                            let v = rows[rank][c];
                            rows[r][c] -= f * v;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::build(SimpleType::parse(label).unwrap())
    }

    #[test]
    fn rank_bounds() {
        assert!(SimpleType::parse("A0").is_err());
        assert!(SimpleType::parse("B1").is_err());
        assert!(SimpleType::parse("C1").is_err());
        assert!(SimpleType::parse("D3").is_err());
        assert!(SimpleType::parse("E5").is_err());
        assert!(SimpleType::parse("E9").is_err());
        assert!(SimpleType::parse("F3").is_err());
        assert!(SimpleType::parse("G3").is_err());
        assert!(SimpleType::parse("H4").is_err());
        assert!(SimpleType::parse("b5").is_ok());
        assert!(SimpleType::parse_canonical("B2").is_err());
        assert!(SimpleType::parse_canonical("D3").is_err());
        assert!(SimpleType::parse_canonical("B3").is_ok());
    }

    #[test]
    fn build_g2() {
        let rs = rs("G2");
        assert_eq!(rs.positive_roots.len(), 6);
        assert_eq!(rs.root(rs.theta).coords, vec![3, 2]);
    }

    #[test]
    fn build_a1() {
        let rs = rs("A1");
        assert_eq!(rs.positive_roots.len(), 1);
        assert_eq!(rs.root(rs.theta).coords, vec![1]);
    }

    #[test]
    fn build_f4() {
        let rs = rs("F4");
        assert_eq!(rs.positive_roots.len(), 24);
        assert_eq!(rs.root(rs.theta).coords, vec![2, 4, 3, 2]);
    }

    #[test]
    fn pairing_g2() {
        let rs = rs("G2");
        // (α₂, 3α₁+α₂) with (α₂,α₁)=−1, (α₂,α₂)=2
        let x = WeightVector {
            coords: vec![Rat::from_integer(3), Rat::from_integer(1)],
        };
        let a2 = rs.simple_root_id(1);
        assert_eq!(rs.pairing_rv(a2, &x), -Rat::one());
    }

    #[test]
    fn theta_normalized_everywhere() {
        for label in ["A5", "B4", "C3", "D5", "E6", "F4", "G2"] {
            let rs = rs(label);
            assert_eq!(rs.pairing_rr(rs.theta, rs.theta), Rat::from_integer(2));
            let zero = WeightVector::zero(rs.rank());
            assert_eq!(rs.pairing_rv(rs.theta, &zero), Rat::zero());
        }
    }

    #[test]
    fn coroot_g2_and_duality() {
        let g2 = rs("G2");
        let a1 = g2.simple_root_id(0);
        assert_eq!(
            g2.coroot(a1).coords,
            vec![Rat::from_integer(3), Rat::zero()]
        );
        // long roots are their own coroots
        let th = g2.coroot(g2.theta);
        assert_eq!(th.integer_coords().unwrap(), vec![3, 2]);
        for label in ["B2", "C4", "G2", "F4"] {
            let system = rs(label);
            for r in &system.positive_roots {
                let c = system.coroot(r.id);
                assert_eq!(system.pairing_rv(r.id, &c), Rat::from_integer(2));
            }
        }
    }

    #[test]
    fn root_order() {
        let rs3 = rs("A3");
        let a1 = rs3.simple_root_id(0);
        let a2 = rs3.simple_root_id(1);
        assert!(!rs3.root_order_leq(a1, a2));
        assert!(!rs3.root_order_leq(a2, a1));
        for label in ["A4", "G2", "B3"] {
            let rs = rs(label);
            for r in &rs.positive_roots {
                assert!(rs.root_order_leq(r.id, rs.theta));
            }
        }
        let g2 = rs("G2");
        let set: std::collections::BTreeSet<usize> =
            [g2.root_id(&[3, 1]).unwrap(), g2.theta].into_iter().collect();
        assert!(g2.is_upper_ideal(&set));
        let bad: std::collections::BTreeSet<usize> =
            [g2.root_id(&[2, 1]).unwrap()].into_iter().collect();
        assert!(!g2.is_upper_ideal(&bad));
    }

    #[test]
    fn reflections() {
        let g2 = rs("G2");
        let r = g2.reflection(g2.theta);
        assert_eq!(
            r.apply_coords(&g2.root(g2.theta).coords),
            vec![-3, -2]
        );
        assert_eq!(WeylElement::identity(2).order(10).unwrap(), 1);
        let s1 = g2.simple_reflection(0);
        assert_eq!(g2.inversion_set(&s1), vec![g2.simple_root_id(0)]);
        // every simple reflection inverts exactly one root, in every type
        for label in ["A6", "B5", "C4", "D6", "E6", "F4"] {
            let system = rs(label);
            for i in 0..system.rank() {
                assert_eq!(system.inversion_set(&system.simple_reflection(i)).len(), 1);
            }
        }
    }

    #[test]
    fn coxeter() {
        for n in 1..=8 {
            let rs = RootSystem::build(SimpleType::new(Family::A, n).unwrap());
            assert_eq!(rs.coxeter_numbers().0, (n + 1) as i64);
        }
        assert_eq!(rs("G2").coxeter_numbers(), (6, 4));
        assert_eq!(rs("E8").coxeter_numbers().0, 30);
        assert_eq!(rs("F4").coxeter_numbers(), (12, 9));
        assert_eq!(rs("B4").coxeter_numbers(), (8, 7));
        assert_eq!(rs("C4").coxeter_numbers(), (8, 5));
        assert_eq!(rs("D5").coxeter_numbers(), (8, 8));
    }

    #[test]
    fn lattice_basics() {
        let e7 = rs("E7");
        let theta = WeightVector::from_root_coords(&e7.root(e7.theta).coords);
        assert!(e7.lattice_member(&theta, Lattice::Q));
        assert!(e7.lattice_member(&theta, Lattice::QVee));
        let half = theta.scale(Rat::new(1, 2));
        assert!(!e7.lattice_member(&half, Lattice::Q));
        // fundamental (co)weights pair integrally as required
        for i in 0..e7.rank() {
            let w = e7.fundamental_weight(i);
            assert!(e7.lattice_member(&w, Lattice::P));
            let wv = e7.fundamental_coweight(i);
            assert!(e7.lattice_member(&wv, Lattice::PVee));
        }
    }

    #[test]
    fn fundamental_coweight_pairings() {
        let f4 = rs("F4");
        for i in 0..4 {
            let wv = f4.fundamental_coweight(i);
            for j in 0..4 {
                let aj = WeightVector::from_root_coords(&{
                    let mut e = vec![0i64; 4];
                    e[j] = 1;
                    e
                });
                let expect = if i == j { Rat::one() } else { Rat::zero() };
                assert_eq!(f4.pairing_vv(&wv, &aj), expect);
            }
        }
    }

    #[test]
    fn heights_cover() {
        // every non-simple positive root covers some root
        for label in ["A5", "B4", "C4", "D5", "E6", "F4", "G2"] {
            let rs = rs(label);
            for r in &rs.positive_roots {
                if r.height() > 1 {
                    let covers = (0..rs.rank()).any(|i| {
                        let mut down = r.coords.clone();
                        down[i] -= 1;
                        down.iter().all(|&c| c >= 0) && rs.root_id(&down).is_some()
                    });
                    assert!(covers, "{:?} must cover something", r.coords);
                }
            }
        }
    }

    #[test]
    fn counts_up_to_rank_12() {
        for (fam, lo) in [
            (Family::A, 1),
            (Family::B, 2),
            (Family::C, 2),
            (Family::D, 4),
        ] {
            for n in lo..=12 {
                let rs = RootSystem::build(SimpleType::new(fam, n).unwrap());
                assert_eq!(rs.positive_roots.len(), rs.simple_type.positive_root_count());
                assert_eq!(rs.root(rs.theta).coords, rs.simple_type.theta_coords());
            }
        }
        for label in ["E6", "E7", "E8", "F4", "G2"] {
            let rs = rs(label);
            assert_eq!(rs.positive_roots.len(), rs.simple_type.positive_root_count());
            assert_eq!(rs.root(rs.theta).coords, rs.simple_type.theta_coords());
        }
    }

    #[test]
    fn weyl_inverse_roundtrip() {
        let e6 = rs("E6");
        let w = e6
            .simple_reflection(0)
            .compose(&e6.simple_reflection(3))
            .compose(&e6.reflection(e6.theta));
        let wi = w.inverse();
        assert!(w.compose(&wi).is_identity());
    }
}
