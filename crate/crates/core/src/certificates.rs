//! Certificate checkers. A YES answer ships evidence (a spine order, or a
//! rotation system per graph) that re-verifies without trusting the solver.
//! Rejections carry one coded reason; accepts may carry trailing caveats.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::{
    intersection_graph, Edge, Graph, LinearOrder, MaxSefeInstance, PtbeInstance,
    SunflowerSefeInstance, VertexId,
};
use crate::planarity::{same_embedding, Rotation};

/// Rotation systems, one per input graph, plus the shared edges conceded as
/// drawn differently. Empty `violated` claims an exact simultaneous drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SefeCertificate {
    pub rotations: Vec<Rotation>,
    pub violated: BTreeSet<Edge>,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub accepted: bool,
    /// Coded diagnostics: "scope:", "shape:", "representation:", "page[i]:",
    /// "planarity:", "agreement:", "budget:", or a trailing "caveat:".
    pub reasons: Vec<String>,
}

impl CheckReport {
    fn accept() -> Self {
        CheckReport { accepted: true, reasons: Vec::new() }
    }

    fn reject(reason: String) -> Self {
        CheckReport { accepted: false, reasons: vec![reason] }
    }
}

/// A spine order certifies a partitioned book embedding when the tree
/// represents it and no page has two alternating edges.
pub fn check_ptbe_certificate(inst: &PtbeInstance, order: &LinearOrder) -> CheckReport {
    let leaves = inst.tree.leaf_set();
    let distinct: BTreeSet<VertexId> = order.iter().copied().collect();
    if distinct.len() != order.len() {
        return CheckReport::reject("scope: order repeats a vertex".into());
    }
    if distinct != leaves {
        return CheckReport::reject("scope: order is not a permutation of the leaves".into());
    }
    let pos: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for v in inst.tree.internal_vertices() {
        for comp in inst.tree.components_without(v) {
            let block: Vec<usize> =
                comp.iter().filter(|u| leaves.contains(u)).map(|u| pos[u]).collect();
            let (Some(&lo), Some(&hi)) = (block.iter().min(), block.iter().max()) else {
                continue;
            };
            if hi - lo + 1 != block.len() {
                return CheckReport::reject(format!(
                    "representation: component of tree minus vertex {v} is not contiguous"
                ));
            }
        }
    }
    for i in 0..inst.k() {
        let page = inst.page_edges(i);
        for (a, e) in page.iter().enumerate() {
            if let Some(f) = page[a + 1..].iter().find(|f| alternate(&pos, *e, **f)) {
                return CheckReport::reject(format!(
                    "page[{i}]: edges ({}, {}) and ({}, {}) alternate",
                    e.0, e.1, f.0, f.1
                ));
            }
        }
    }
    CheckReport::accept()
}

fn alternate(pos: &BTreeMap<VertexId, usize>, e: Edge, f: Edge) -> bool {
    let (a, b) = (pos[&e.0].min(pos[&e.1]), pos[&e.0].max(pos[&e.1]));
    let (c, d) = (pos[&f.0].min(pos[&f.1]), pos[&f.0].max(pos[&f.1]));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Exact simultaneous embedding: every rotation planar, all of them inducing
/// the same embedding of the shared graph, nothing conceded.
pub fn check_sefe_certificate(inst: &SunflowerSefeInstance, cert: &SefeCertificate) -> CheckReport {
    if cert.rotations.len() != inst.k() {
        return CheckReport::reject(format!(
            "shape: certificate has {} rotations for {} graphs",
            cert.rotations.len(),
            inst.k()
        ));
    }
    if !cert.violated.is_empty() {
        return CheckReport::reject("scope: exact certificate must concede no edges".into());
    }
    let graphs: Vec<Graph> = (0..inst.k()).map(|i| inst.graph(i)).collect();
    if let Some(report) = planarity_failures(&graphs, &cert.rotations) {
        return report;
    }
    agreement(&inst.shared, &cert.rotations)
}

/// Bounded-concession variant: up to k* shared edges may be excluded from
/// the common-embedding comparison.
pub fn check_maxsefe_certificate(inst: &MaxSefeInstance, cert: &SefeCertificate) -> CheckReport {
    if cert.rotations.len() != 2 {
        return CheckReport::reject(format!(
            "shape: certificate has {} rotations for 2 graphs",
            cert.rotations.len()
        ));
    }
    let shared = intersection_graph(&inst.g1, &inst.g2);
    if let Some((u, v)) = cert.violated.iter().find(|(u, v)| !shared.has_edge(*u, *v)) {
        return CheckReport::reject(format!("scope: violated edge ({u}, {v}) is not shared"));
    }
    if cert.violated.len() > inst.budget as usize {
        return CheckReport::reject(format!(
            "budget: {} conceded edges exceed k* = {}",
            cert.violated.len(),
            inst.budget
        ));
    }
    let graphs = vec![inst.g1.clone(), inst.g2.clone()];
    if let Some(report) = planarity_failures(&graphs, &cert.rotations) {
        return report;
    }
    let mut rest = shared;
    for &(u, v) in &cert.violated {
        rest.remove_edge(u, v);
    }
    agreement(&rest, &cert.rotations)
}

fn planarity_failures(graphs: &[Graph], rotations: &[Rotation]) -> Option<CheckReport> {
    for (i, (g, rot)) in graphs.iter().zip(rotations).enumerate() {
        if !rot.matches(g) {
            return Some(CheckReport::reject(format!(
                "shape: rotation {i} does not cover graph {i}"
            )));
        }
        if !rot.is_planar_for(g) {
            return Some(CheckReport::reject(format!(
                "planarity: rotation {i} has positive genus"
            )));
        }
    }
    None
}

fn agreement(shared: &Graph, rotations: &[Rotation]) -> CheckReport {
    let induced: Vec<Rotation> = rotations.iter().map(|r| r.induced(shared)).collect();
    for i in 0..induced.len() {
        for j in i + 1..induced.len() {
            if !same_embedding(&induced[i], &induced[j], shared) {
                return CheckReport::reject(format!(
                    "agreement: graphs {i} and {j} induce different shared embeddings"
                ));
            }
        }
    }
    let mut report = CheckReport::accept();
    let parts = shared.components().len();
    if parts > 1 {
        report.reasons.push(format!(
            "caveat: shared agreement is rotation-level across {parts} components"
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{is_represented_by, page_alternation_free, LeafTree};
    use crate::oracles::{ptbe_brute, PTBE_GUARD};
    use crate::planarity::planar_rotation;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn random_tree(rng: &mut StdRng, n: u32) -> LeafTree {
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((rng.gen_range(0..v), v));
        }
        LeafTree::new(Graph::from_edges(edges)).unwrap()
    }

    #[test]
    fn order_checker_agrees_with_the_model_predicates() {
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..200 {
            let size = rng.gen_range(3..=7);
            let tree = random_tree(&mut rng, size);
            let leaves = tree.leaves();
            let mut pages = vec![Vec::new(), Vec::new()];
            for _ in 0..rng.gen_range(0..=4) {
                let a = leaves[rng.gen_range(0..leaves.len())];
                let b = leaves[rng.gen_range(0..leaves.len())];
                if a != b {
                    pages[rng.gen_range(0..2)].push((a, b));
                }
            }
            let Ok(inst) = PtbeInstance::new(tree, pages) else {
                continue;
            };
            let mut order = inst.tree.leaves();
            order.shuffle(&mut rng);
            let report = check_ptbe_certificate(&inst, &order);
            let expected = is_represented_by(&order, &inst.tree)
                && (0..inst.k()).all(|i| page_alternation_free(&order, &inst.page_edges(i)));
            assert_eq!(report.accepted, expected, "{:?}", report.reasons);
            if let Ok(Some(witness)) = ptbe_brute(&inst, PTBE_GUARD) {
                assert!(check_ptbe_certificate(&inst, &witness).accepted);
            }
        }
    }

    #[test]
    fn order_checker_names_the_failure() {
        // Path 0-1-2 with leaves 0, 2 hanging and leaves 3, 4 on vertex 1.
        let tree = LeafTree::new(Graph::from_edges([(0, 1), (1, 2), (1, 3), (1, 4)])).unwrap();
        let inst = PtbeInstance::new(tree, vec![vec![(0, 3), (4, 2)]]).unwrap();
        let report = check_ptbe_certificate(&inst, &vec![0, 3, 4, 2]);
        assert!(report.accepted, "{:?}", report.reasons);
        let interleaved = check_ptbe_certificate(&inst, &vec![0, 4, 3, 2]);
        assert!(!interleaved.accepted);
        assert!(interleaved.reasons[0].starts_with("page[0]"), "{:?}", interleaved.reasons);

        let star = LeafTree::new(Graph::from_edges([(0, 1), (0, 2), (0, 3)])).unwrap();
        let short = PtbeInstance::new(star.clone(), vec![vec![]]).unwrap();
        assert!(check_ptbe_certificate(&short, &vec![1, 2]).reasons[0].starts_with("scope"));

        let spine = LeafTree::new(Graph::from_edges([(0, 1), (1, 2), (0, 3), (0, 4), (2, 5)]))
            .unwrap();
        let split = PtbeInstance::new(spine, vec![vec![]]).unwrap();
        let bad = check_ptbe_certificate(&split, &vec![3, 5, 4]);
        assert!(!bad.accepted);
        assert!(bad.reasons[0].starts_with("representation"), "{:?}", bad.reasons);
    }

    #[test]
    fn sefe_checker_accepts_shared_planar_rotations() {
        let k4 = Graph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let inst = SunflowerSefeInstance::new(k4.clone(), vec![vec![], vec![]]).unwrap();
        let rot = planar_rotation(&k4).unwrap();
        let cert = SefeCertificate { rotations: vec![rot.clone(), rot.clone()], violated: BTreeSet::new() };
        assert!(check_sefe_certificate(&inst, &cert).accepted);

        let reflected = SefeCertificate {
            rotations: vec![rot.clone(), rot.reflected()],
            violated: BTreeSet::new(),
        };
        assert!(check_sefe_certificate(&inst, &reflected).accepted);

        let twisted = {
            let mut r = rot.clone();
            r.set(0, vec![1, 3, 2]);
            r
        };
        let bad = SefeCertificate { rotations: vec![rot.clone(), twisted], violated: BTreeSet::new() };
        let report = check_sefe_certificate(&inst, &bad);
        assert!(!report.accepted);
        assert!(
            report.reasons[0].starts_with("planarity") || report.reasons[0].starts_with("agreement"),
            "{:?}",
            report.reasons
        );

        let short = SefeCertificate { rotations: vec![rot], violated: BTreeSet::new() };
        assert!(check_sefe_certificate(&inst, &short).reasons[0].starts_with("shape"));
    }

    #[test]
    fn maxsefe_checker_budget_and_monotonicity() {
        let tri = |base: u32| [(base, base + 1), (base + 1, base + 2), (base, base + 2)];
        let mut g1 = Graph::from_edges(tri(0).into_iter().chain(tri(3)));
        let mut g2 = g1.clone();
        g1.add_edge(0, 3);
        g2.add_edge(1, 4);
        let mk = |budget| MaxSefeInstance::new(g1.clone(), g2.clone(), budget).unwrap();
        let rot = |g: &Graph| planar_rotation(g).unwrap();
        let exact = SefeCertificate {
            rotations: vec![rot(&g1), rot(&g2)],
            violated: BTreeSet::new(),
        };
        let report = check_maxsefe_certificate(&mk(0), &exact);
        assert!(report.accepted, "{:?}", report.reasons);
        assert!(report.reasons.iter().any(|r| r.starts_with("caveat")), "{:?}", report.reasons);

        let conceding = SefeCertificate {
            rotations: vec![rot(&g1), rot(&g2)],
            violated: [(0, 1)].into(),
        };
        assert!(!check_maxsefe_certificate(&mk(0), &conceding).accepted);
        assert!(check_maxsefe_certificate(&mk(1), &conceding).accepted);

        let foreign = SefeCertificate {
            rotations: vec![rot(&g1), rot(&g2)],
            violated: [(0, 3)].into(),
        };
        assert!(check_maxsefe_certificate(&mk(5), &foreign).reasons[0].starts_with("scope"));
    }

    #[test]
    fn maxsefe_rejections_survive_shrinking_the_concession() {
        // Two shared triangles; graph 2's rotation twists one triangle's
        // neighborhood through a private vertex, so agreement depends on
        // what is conceded.
        let shared = Graph::from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let mut g1 = shared.clone();
        g1.add_edge(2, 3);
        let mut g2 = shared.clone();
        g2.add_edge(0, 4);
        let inst = MaxSefeInstance::new(g1.clone(), g2.clone(), 6).unwrap();
        let mut rng = StdRng::seed_from_u64(5151);
        let shared_edges: Vec<Edge> = shared.edges().collect();
        for _ in 0..40 {
            let mut r1 = planar_rotation(&g1).unwrap();
            let mut r2 = planar_rotation(&g2).unwrap();
            if rng.gen_bool(0.5) {
                r1.set(0, vec![2, 1]);
                r1.set(1, vec![0, 2]);
            }
            if rng.gen_bool(0.5) {
                r2.set(4, vec![5, 3, 0]);
            }
            let mut violated: BTreeSet<Edge> = BTreeSet::new();
            for &e in &shared_edges {
                if rng.gen_bool(0.4) {
                    violated.insert(e);
                }
            }
            let cert = SefeCertificate { rotations: vec![r1, r2], violated: violated.clone() };
            if check_maxsefe_certificate(&inst, &cert).accepted {
                continue;
            }
            for &e in &violated {
                let mut smaller = cert.clone();
                smaller.violated.remove(&e);
                assert!(
                    !check_maxsefe_certificate(&inst, &smaller).accepted,
                    "shrinking {e:?} flipped a rejection"
                );
            }
        }
    }

    #[test]
    fn acceptance_is_reflection_invariant() {
        let shared = Graph::from_edges([(0, 1), (1, 2), (0, 2)]);
        let mut g1 = shared.clone();
        g1.add_edge(0, 3);
        let mut g2 = shared.clone();
        g2.add_edge(1, 3);
        let inst = MaxSefeInstance::new(g1.clone(), g2.clone(), 1).unwrap();
        let base = SefeCertificate {
            rotations: vec![planar_rotation(&g1).unwrap(), planar_rotation(&g2).unwrap()],
            violated: BTreeSet::new(),
        };
        let verdict = check_maxsefe_certificate(&inst, &base).accepted;
        for i in 0..2 {
            let mut flipped = base.clone();
            flipped.rotations[i] = flipped.rotations[i].reflected();
            assert_eq!(check_maxsefe_certificate(&inst, &flipped).accepted, verdict);
        }
    }
}
