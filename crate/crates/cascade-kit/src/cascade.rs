//! The Kostant cascade: the maximal set of strongly orthogonal positive
//! roots obtained by recursively taking highest roots of orthogonal
//! complements, together with the marked cascade poset (K, ≼, Φ), the
//! Heisenberg subsets, the longest-element factorization and Hasse-diagram
//! output.

use crate::root_system::{Family, RootSystem, SimpleType, WeylElement};
use crate::Rat;
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Cartan label of the subsystem attached to a cascade node. Rank-1 nodes
/// carry a flag distinguishing a short simple root (printed Ã₁) from a long
/// one (printed A₁).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subtype {
    pub simple_type: SimpleType,
    pub short: bool,
}

impl Subtype {
    pub fn label(&self) -> String {
        if self.short {
            assert_eq!(self.simple_type.rank, 1);
            "Ã1".to_string()
        } else {
            self.simple_type.to_string()
        }
    }
}

/// One node β_j of the cascade poset.
#[derive(Debug, Clone)]
pub struct CascadeNode {
    /// Root id of β_j.
    pub beta: usize,
    /// Index of the parent node; `None` exactly for β₁ = θ.
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// Simple roots Π⟨j⟩ spanning the subsystem of this node (0-based).
    pub support_pi: Vec<usize>,
    /// Cartan label of the subsystem.
    pub subtype: Subtype,
    /// Φ(β_j) = Π ∩ H_{β_j} (0-based simple indices).
    pub phi: Vec<usize>,
    /// Depth in the cascade tree (the root has level 1).
    pub level: usize,
}

/// The cascade poset; node order is a linear extension (parents first),
/// breadth-first with children ordered by smallest simple-root index.
#[derive(Debug, Clone)]
pub struct Cascade {
    pub simple_type: SimpleType,
    pub nodes: Vec<CascadeNode>,
}

impl Cascade {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Root ids of β₁, …, β_m in node order.
    pub fn roots(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.beta).collect()
    }

    pub fn node_with_root(&self, beta: usize) -> Option<usize> {
        self.nodes.iter().position(|n| n.beta == beta)
    }
}

/// Classifies a connected subdiagram by degree sequence, edge multiplicities
/// and arrow orientation, returning the canonical label (B₂ ↦ C₂, D₃ ↦ A₃).
pub fn classify_subdiagram(rs: &RootSystem, support: &[usize]) -> Subtype {
    let r = support.len();
    let inside: BTreeSet<usize> = support.iter().copied().collect();
    if r == 1 {
        let i = support[0];
        let short = !rs.is_long(rs.simple_root_id(i));
        return Subtype {
            simple_type: SimpleType::new(Family::A, 1).unwrap(),
            short,
        };
    }
    let mut edges = Vec::new();
    for &i in support {
        for &j in &rs.neighbors[i] {
            if i < j && inside.contains(&j) {
                let mult = rs.cartan[i][j] * rs.cartan[j][i];
                edges.push((i, j, mult));
            }
        }
    }
    let degree = |v: usize| -> usize {
        rs.neighbors[v]
            .iter()
            .filter(|u| inside.contains(u))
            .count()
    };
    let new = |f: Family, n: usize| Subtype {
        simple_type: SimpleType::new(f, n).unwrap(),
        short: false,
    };
    if edges.iter().any(|&(_, _, m)| m == 3) {
        assert_eq!(r, 2);
        return new(Family::G, 2);
    }
    if let Some(&(u, v, _)) = edges.iter().find(|&&(_, _, m)| m == 2) {
        if r == 2 {
            return new(Family::C, 2);
        }
        let ends = [u, v].into_iter().filter(|&x| degree(x) == 1).count();
        if ends == 0 {
            assert_eq!(r, 4);
            return new(Family::F, 4);
        }
        let tip = if degree(u) == 1 { u } else { v };
        if rs.is_long(rs.simple_root_id(tip)) {
            new(Family::C, r)
        } else {
            new(Family::B, r)
        }
    } else {
        // simply laced
        let branch: Vec<usize> = support.iter().copied().filter(|&v| degree(v) >= 3).collect();
        match branch.as_slice() {
            [] => new(Family::A, r),
            [b] => {
                // arm lengths from the branch node
                let mut arms: Vec<usize> = rs.neighbors[*b]
                    .iter()
                    .filter(|u| inside.contains(u))
                    .map(|&start| {
                        let mut len = 1;
                        let mut prev = *b;
                        let mut cur = start;
                        loop {
                            let next: Vec<usize> = rs.neighbors[cur]
                                .iter()
                                .copied()
                                .filter(|&x| x != prev && inside.contains(&x))
                                .collect();
                            match next.as_slice() {
                                [] => break,
                                [x] => {
                                    prev = cur;
                                    cur = *x;
                                    len += 1;
                                }
                                _ => unreachable!("at most one branch node in finite type"),
                            }
                        }
                        len
                    })
                    .collect();
                arms.sort_unstable();
                if arms[0] == 1 && arms[1] == 1 {
                    new(Family::D, r)
                } else {
                    assert_eq!(arms[0], 1);
                    assert_eq!(arms[1], 2);
                    new(Family::E, r)
                }
            }
            _ => unreachable!("finite diagrams have at most one branch node"),
        }
    }
}

/// Computes the cascade by the recursive highest-root construction,
/// verifying the Heisenberg partition Δ⁺ = ⊔ H_{β_i} on the way out.
pub fn compute_cascade(rs: &RootSystem) -> Cascade {
    let mut nodes: Vec<CascadeNode> = Vec::new();
    let mut queue: std::collections::VecDeque<(Vec<usize>, Option<usize>, usize)> =
        std::collections::VecDeque::new();
    queue.push_back(((0..rs.rank()).collect(), None, 1));
    while let Some((support, parent, level)) = queue.pop_front() {
        let beta = rs.highest_root_in(&support);
        let phi: Vec<usize> = support
            .iter()
            .copied()
            .filter(|&i| rs.pairing_rr(beta, rs.simple_root_id(i)) > Rat::zero())
            .collect();
        let orthogonal: Vec<usize> = support
            .iter()
            .copied()
            .filter(|&i| rs.pairing_rr(beta, rs.simple_root_id(i)).is_zero())
            .collect();
        let idx = nodes.len();
        nodes.push(CascadeNode {
            beta,
            parent,
            children: Vec::new(),
            support_pi: support.clone(),
            subtype: classify_subdiagram(rs, &support),
            phi,
            level,
        });
        if let Some(p) = parent {
            nodes[p].children.push(idx);
        }
        for comp in rs.diagram_components(&orthogonal) {
            queue.push_back((comp, Some(idx), level + 1));
        }
    }
    let cascade = Cascade {
        simple_type: rs.simple_type,
        nodes,
    };
    // Heisenberg partition of Δ⁺
    let mut covered = vec![0usize; rs.positive_roots.len()];
    for i in 0..cascade.size() {
        for g in heisenberg_subset(rs, &cascade, i) {
            covered[g] += 1;
        }
    }
    assert!(
        covered.iter().all(|&c| c == 1),
        "Heisenberg subsets must partition the positive roots"
    );
    cascade
}

/// H_{β_i} = {γ ∈ Δ⟨i⟩⁺ : (γ, β_i) > 0}.
pub fn heisenberg_subset(rs: &RootSystem, c: &Cascade, i: usize) -> Vec<usize> {
    let node = &c.nodes[i];
    rs.subsystem_positive_roots(&node.support_pi)
        .into_iter()
        .filter(|&g| rs.pairing_rr(g, node.beta) > Rat::zero())
        .collect()
}

/// (Φ, Φ⁻¹): the per-node subsets of Π and the inverse assignment Π → K.
pub fn phi_map(rs: &RootSystem, c: &Cascade) -> (Vec<Vec<usize>>, Vec<usize>) {
    let phi: Vec<Vec<usize>> = c.nodes.iter().map(|n| n.phi.clone()).collect();
    let mut inv = vec![usize::MAX; rs.rank()];
    for (j, set) in phi.iter().enumerate() {
        for &a in set {
            assert_eq!(inv[a], usize::MAX, "Φ subsets must be disjoint");
            inv[a] = j;
        }
    }
    assert!(inv.iter().all(|&j| j != usize::MAX), "Φ must cover Π");
    (phi, inv)
}

/// w₀ = Π r_{β_i}: the longest element, as the product of the commuting
/// cascade reflections.
pub fn longest_element(rs: &RootSystem, c: &Cascade) -> WeylElement {
    longest_element_ordered(rs, &c.roots())
}

/// The same product in a caller-chosen order of the factors.
pub fn longest_element_ordered(rs: &RootSystem, betas: &[usize]) -> WeylElement {
    let mut w = WeylElement::identity(rs.rank());
    for &b in betas {
        w = w.compose(&rs.reflection(b));
    }
    w
}

/// Renders the cascade tree. `dot` emits Graphviz with nodes b1, b2, …;
/// `text` an indented tree. Each node is labeled `βj {subtype}`.
pub fn hasse_diagram(c: &Cascade, dot: bool) -> String {
    if dot {
        let mut s = String::from("digraph cascade {\n  node [shape=circle];\n");
        for (i, n) in c.nodes.iter().enumerate() {
            let _ = writeln!(
                s,
                "  b{} [label=\"β{} {{{}}}\"];",
                i + 1,
                i + 1,
                n.subtype.label()
            );
        }
        for (i, n) in c.nodes.iter().enumerate() {
            for &ch in &n.children {
                let _ = writeln!(s, "  b{} -> b{};", i + 1, ch + 1);
            }
        }
        s.push_str("}\n");
        s
    } else {
        let mut s = String::new();
        fn rec(c: &Cascade, i: usize, depth: usize, s: &mut String) {
            let _ = writeln!(
                s,
                "{}β{} {{{}}}",
                "  ".repeat(depth),
                i + 1,
                c.nodes[i].subtype.label()
            );
            for &ch in &c.nodes[i].children {
                rec(c, ch, depth + 1, s);
            }
        }
        rec(c, 0, 0, &mut s);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::SimpleType;

    fn setup(label: &str) -> (RootSystem, Cascade) {
        let rs = RootSystem::build(SimpleType::parse(label).unwrap());
        let c = compute_cascade(&rs);
        (rs, c)
    }

    #[test]
    fn a2_cascade() {
        let (rs, c) = setup("A2");
        assert_eq!(c.size(), 1);
        assert_eq!(c.nodes[0].beta, rs.theta);
        assert_eq!(c.nodes[0].phi, vec![0, 1]);
    }

    #[test]
    fn g2_cascade() {
        let (rs, c) = setup("G2");
        assert_eq!(c.size(), 2);
        assert_eq!(rs.root(c.nodes[1].beta).coords, vec![1, 0]);
        assert!(c.nodes[1].subtype.short);
        assert_eq!(c.nodes[1].subtype.label(), "Ã1");
        // Heisenberg subset of the top node
        let h: Vec<Vec<i64>> = heisenberg_subset(&rs, &c, 0)
            .into_iter()
            .map(|g| rs.root(g).coords.clone())
            .collect();
        let expect = [
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        assert_eq!(h.len(), 5);
        for e in expect {
            assert!(h.contains(&e));
        }
    }

    #[test]
    fn e7_cascade_shape() {
        let (_, c) = setup("E7");
        assert_eq!(c.size(), 7);
        let labels: Vec<String> = c.nodes.iter().map(|n| n.subtype.label()).collect();
        // one maximal chain: E7, D6, D4, A1; three A1 leaves under the D4
        assert_eq!(labels[0], "E7");
        assert_eq!(labels[1], "D6");
        assert!(labels[2..].iter().filter(|l| *l == "D4").count() == 1);
        assert_eq!(labels.iter().filter(|l| *l == "A1").count(), 4);
        let d4 = c.nodes.iter().position(|n| n.subtype.label() == "D4").unwrap();
        assert_eq!(c.nodes[d4].children.len(), 3);
    }

    #[test]
    fn c_series_chain() {
        for n in 2..=6 {
            let (rs, c) = setup(&format!("C{n}"));
            assert_eq!(c.size(), n);
            for (i, node) in c.nodes.iter().enumerate() {
                assert_eq!(node.level, i + 1);
                if i > 0 {
                    assert_eq!(node.parent, Some(i - 1));
                }
                let lbl = node.subtype.label();
                if i + 1 < n {
                    assert_eq!(lbl, format!("C{}", n - i));
                } else {
                    assert_eq!(lbl, "A1");
                    assert!(rs.is_long(node.beta));
                }
            }
        }
    }

    #[test]
    fn phi_c_and_a() {
        let (_, c) = setup("C4");
        for (i, node) in c.nodes.iter().enumerate() {
            assert_eq!(node.phi, vec![i]);
        }
        let (_, c3) = setup("A3");
        assert_eq!(c3.nodes[0].phi, vec![0, 2]);
        assert_eq!(c3.nodes[1].phi, vec![1]);
        for label in ["A5", "B5", "D6", "E6", "F4", "G2"] {
            let (rs, c) = setup(label);
            let (_, inv) = phi_map(&rs, &c);
            assert_eq!(inv.len(), rs.rank());
        }
    }

    #[test]
    fn phi_size_two_iff_a_subtype() {
        for label in ["A6", "B6", "C5", "D7", "E6", "E7", "E8", "F4", "G2"] {
            let (_, c) = setup(label);
            for node in &c.nodes {
                assert!(node.phi.len() <= 2);
                let is_a2plus = node.subtype.simple_type.family == Family::A
                    && node.subtype.simple_type.rank >= 2;
                assert_eq!(node.phi.len() == 2, is_a2plus);
            }
        }
    }

    #[test]
    fn longest_element_examples() {
        let (rs1, c1) = setup("A1");
        let w0 = longest_element(&rs1, &c1);
        assert_eq!(w0.matrix, vec![vec![-1]]);
        let (rs6, c6) = setup("E6");
        let w0 = longest_element(&rs6, &c6);
        assert_eq!(c6.size(), 4);
        assert!(!w0
            .matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == -i64::from(i == j))));
        let (rs3, c3) = setup("C3");
        let w0 = longest_element(&rs3, &c3);
        assert!(w0
            .matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == -i64::from(i == j))));
        // w₀ sends every positive root to a negative one
        assert_eq!(rs3.inversion_set(&w0).len(), rs3.positive_roots.len());
    }

    #[test]
    fn hasse_output() {
        let (_, c) = setup("G2");
        let dot = hasse_diagram(&c, true);
        assert!(dot.starts_with("digraph cascade {"));
        assert!(dot.contains("b1 [label=\"β1 {G2}\"]"));
        assert!(dot.contains("b2 [label=\"β2 {Ã1}\"]"));
        assert!(dot.contains("b1 -> b2;"));
        let (_, c1) = setup("A1");
        let txt = hasse_diagram(&c1, false);
        assert_eq!(txt.trim(), "β1 {A1}");
    }

    #[test]
    fn strongly_orthogonal_everywhere() {
        for label in ["A7", "B6", "C5", "D8", "E8", "F4", "G2"] {
            let (rs, c) = setup(label);
            let betas = c.roots();
            for (i, &a) in betas.iter().enumerate() {
                for &b in &betas[i + 1..] {
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
                    assert!(!rs.is_root(&sum));
                    assert!(!rs.is_root(&diff));
                }
            }
        }
    }
}
