//! Book-embedding pipeline for partitioned instances in which every page
//! except one designated free page spans the leaf set.
//!
//! The pipeline runs once per candidate first leaf (the anchor). For each
//! constrained page it builds an apex graph over the page edges, extracts the
//! anchored order tree, intersects those trees with each other and with the
//! strong orders of `T`, realises the intersection as a representative graph,
//! overlays the free page, and tests planarity of the result. One admissible
//! anchor certifies the instance; if every anchor dies there is no solution.
//! Only leaves hanging off the two spine ends can start a strong order (up to
//! reversal, which preserves solutions), so the anchor set stays small.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::model::{
    is_represented_by, is_t_biconnected, page_alternation_free, Edge, Graph, LinearOrder,
    PtbeInstance, VertexId,
};
use crate::planarity::{apex_order_pqtree_anchored, planar_rotation, Rotation};
use crate::pqtree::{PqTree, RepGraph};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The instance is solvable. The witness order is omitted only when
    /// extraction gave up; the verdict itself is still exact.
    Yes { order: Option<LinearOrder> },
    No,
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub verdict: Verdict,
    pub trace: SolverTrace,
}

/// Everything the pipeline did, step by step. Fields are `None` exactly when
/// the step never ran, so null propagation is visible in serialized traces.
#[derive(Clone, Debug, Serialize)]
pub struct SolverTrace {
    pub free_page: usize,
    pub constrained_pages: Vec<usize>,
    pub anchors: Vec<VertexId>,
    pub attempts: Vec<AnchorAttempt>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnchorAttempt {
    pub anchor: VertexId,
    /// One entry per constrained page, in `constrained_pages` order.
    pub aux_graphs: Vec<GraphSummary>,
    /// Anchored order tree per constrained page; `None` records a null tree.
    pub page_trees: Vec<Option<String>>,
    /// Intersection of the page trees.
    pub merged_tree: Option<String>,
    /// Intersection with the strong orders of `T`.
    pub final_tree: Option<String>,
    pub frontier_count: Option<String>,
    pub representative: Option<GraphSummary>,
    pub augmented: Option<GraphSummary>,
    pub planar: Option<bool>,
    pub extraction: Option<String>,
    pub order: Option<LinearOrder>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
}

impl GraphSummary {
    fn of(g: &Graph) -> Self {
        GraphSummary { vertices: g.vertex_count(), edges: g.edge_count() }
    }
}

impl AnchorAttempt {
    fn new(anchor: VertexId) -> Self {
        AnchorAttempt {
            anchor,
            aux_graphs: Vec::new(),
            page_trees: Vec::new(),
            merged_tree: None,
            final_tree: None,
            frontier_count: None,
            representative: None,
            augmented: None,
            planar: None,
            extraction: None,
            order: None,
        }
    }
}

/// Apex graph of one constrained page: the page edges over the leaves, plus a
/// fresh apex joined to every leaf. The page must span the leaf set.
pub fn build_aux_graph(inst: &PtbeInstance, page_index: usize) -> Result<(Graph, VertexId)> {
    if page_index >= inst.k() {
        return Err(Error::Malformed(format!(
            "page index {page_index} out of range for {} pages",
            inst.k()
        )));
    }
    if !is_t_biconnected(&inst.tree, &inst.pages[page_index]) {
        return Err(Error::Unsupported(format!(
            "page {page_index} does not span the leaves as a connected graph"
        )));
    }
    let apex = inst.tree.graph().max_vertex_id().unwrap_or(0) + 1;
    let mut g = Graph::new();
    for &(u, v) in &inst.pages[page_index] {
        g.add_edge(u, v);
    }
    for l in inst.tree.leaves() {
        g.add_edge(apex, l);
    }
    Ok((g, apex))
}

/// Decides the instance with `free_page` exempt from the spanning
/// requirement. Every other page must span the leaf set as a connected
/// graph; otherwise the configuration is unsupported.
pub fn solve(inst: &PtbeInstance, free_page: usize) -> Result<SolveReport> {
    if free_page >= inst.k() {
        return Err(Error::Malformed(format!(
            "free page {free_page} out of range for {} pages",
            inst.k()
        )));
    }
    let constrained: Vec<usize> = (0..inst.k()).filter(|&i| i != free_page).collect();
    for &i in &constrained {
        if !is_t_biconnected(&inst.tree, &inst.pages[i]) {
            return Err(Error::Unsupported(format!(
                "page {i} does not span the leaves, so it cannot be constrained (free page {free_page})"
            )));
        }
    }

    let leaves = inst.tree.leaves();
    let mut trace = SolverTrace {
        free_page,
        constrained_pages: constrained.clone(),
        anchors: Vec::new(),
        attempts: Vec::new(),
        notes: Vec::new(),
    };

    if leaves.len() <= 2 {
        trace.notes.push("at most two leaves: any order works".into());
        return Ok(SolveReport { verdict: Verdict::Yes { order: Some(leaves) }, trace });
    }

    let Some(strong) = PqTree::from_leaf_tree(&inst.tree) else {
        trace.notes.push("tree is not a caterpillar: no strong orders exist".into());
        return Ok(SolveReport { verdict: Verdict::No, trace });
    };

    let anchors = if constrained.is_empty() {
        // No anchored constraints; a single pass settles the instance.
        vec![*leaves.iter().min().expect("leaves nonempty")]
    } else {
        anchor_candidates(inst)
    };
    trace.anchors = anchors.clone();

    let free_edges = inst.page_edges(free_page);
    for anchor in anchors {
        let mut att = AnchorAttempt::new(anchor);
        let mut merged: Option<PqTree> = None;
        let mut page_dead = false;
        for &i in &constrained {
            let (aux, apex) = build_aux_graph(inst, i)?;
            att.aux_graphs.push(GraphSummary::of(&aux));
            match apex_order_pqtree_anchored(&aux, apex, anchor)? {
                None => {
                    att.page_trees.push(None);
                    trace.notes.push(format!("page {i} admits no order at all"));
                    trace.attempts.push(att);
                    // A page with no admissible order kills every anchor.
                    return Ok(SolveReport { verdict: Verdict::No, trace });
                }
                Some(t) => {
                    att.page_trees.push(Some(t.to_text()));
                    merged = match merged {
                        None => Some(t),
                        Some(acc) => acc.intersect(&t),
                    };
                    if merged.is_none() {
                        page_dead = true;
                        break;
                    }
                }
            }
        }
        if page_dead {
            trace.attempts.push(att);
            continue;
        }
        if let Some(t) = &merged {
            att.merged_tree = Some(t.to_text());
        }
        let final_tree = match merged {
            None => strong.clone(),
            Some(acc) => match acc.intersect(&strong) {
                None => {
                    trace.attempts.push(att);
                    continue;
                }
                Some(t) => t,
            },
        };
        att.final_tree = Some(final_tree.to_text());
        att.frontier_count = Some(final_tree.frontier_count().to_string());

        let rep = final_tree.representative_graph();
        att.representative = Some(GraphSummary::of(&rep.graph));
        let h = overlay_free_page(&rep.graph, &free_edges);
        att.augmented = Some(GraphSummary::of(&h));

        match planar_rotation(&h) {
            None => {
                att.planar = Some(false);
                trace.attempts.push(att);
            }
            Some(rot) => {
                att.planar = Some(true);
                let (order, how) = extract_order(&rot, &rep, &final_tree, inst);
                att.extraction = Some(how);
                att.order = order.clone();
                trace.attempts.push(att);
                if order.is_none() {
                    trace.notes.push("verdict is exact but no witness order was extracted".into());
                }
                return Ok(SolveReport { verdict: Verdict::Yes { order }, trace });
            }
        }
    }
    Ok(SolveReport { verdict: Verdict::No, trace })
}

/// Tries every choice of free page and returns the first supported one.
pub fn solve_auto(inst: &PtbeInstance) -> Result<(usize, SolveReport)> {
    if inst.k() == 0 {
        return Err(Error::Malformed("instance has no pages".into()));
    }
    for free in 0..inst.k() {
        match solve(inst, free) {
            Ok(report) => return Ok((free, report)),
            Err(Error::Unsupported(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Unsupported(
        "no choice of free page leaves every other page spanning".into(),
    ))
}

/// Leaves that can begin a strong order: up to reversal these are exactly the
/// leaves hanging off the two ends of the internal spine. With at most one
/// internal vertex every order is strong, so one anchor suffices because page
/// constraints are invariant under rotating the whole order.
fn anchor_candidates(inst: &PtbeInstance) -> Vec<VertexId> {
    let tree = &inst.tree;
    let internal = tree.internal_vertices();
    let leaves = tree.leaf_set();
    if internal.len() <= 1 {
        return vec![*leaves.iter().min().expect("leaves nonempty")];
    }
    let internal_set: BTreeSet<VertexId> = internal.iter().copied().collect();
    let mut out: BTreeSet<VertexId> = BTreeSet::new();
    for &u in &internal {
        let internal_deg =
            tree.graph().neighbors(u).filter(|w| internal_set.contains(w)).count();
        if internal_deg == 1 {
            out.extend(tree.graph().neighbors(u).filter(|w| leaves.contains(w)));
        }
    }
    out.into_iter().collect()
}

/// Adds the free page on top of the representative graph. A free edge
/// parallel to an existing edge is subdivided once instead of dropped.
fn overlay_free_page(rep: &Graph, free_edges: &[Edge]) -> Graph {
    let mut h = rep.clone();
    let mut next = h.max_vertex_id().map_or(0, |m| m + 1);
    for &(u, v) in free_edges {
        if h.has_edge(u, v) {
            h.add_edge(u, next);
            h.add_edge(next, v);
            next += 1;
        } else {
            h.add_edge(u, v);
        }
    }
    h
}

fn is_solution(inst: &PtbeInstance, order: &LinearOrder) -> bool {
    is_represented_by(order, &inst.tree)
        && (0..inst.k()).all(|i| page_alternation_free(order, &inst.page_edges(i)))
}

/// Reads a witness order out of a planar rotation of the augmented graph.
///
/// Fast path: restrict the rotation to the representative graph, find the
/// face holding every pendant leaf, and cut the cyclic leaf sequence at the
/// root attachment corner. When nesting hides that face, rim edges whose
/// hub triangle is not facial are rerouted alongside the spokes until the
/// face appears. As a last resort small frontiers are enumerated directly.
/// Every candidate is validated before being returned.
fn extract_order(
    rot: &Rotation,
    rep: &RepGraph,
    tree: &PqTree,
    inst: &PtbeInstance,
) -> (Option<LinearOrder>, String) {
    let leaves = inst.tree.leaf_set();
    let mut current = rot.induced(&rep.graph);
    if let Some(order) = read_pendant_face(&current, rep, &leaves) {
        for cand in [order.clone(), order.iter().rev().copied().collect()] {
            if is_solution(inst, &cand) {
                return (Some(cand), "read from the pendant face".into());
            }
        }
    }
    if reroute_rim_edges(&mut current, &rep.graph, rep) {
        if let Some(order) = read_pendant_face(&current, rep, &leaves) {
            for cand in [order.clone(), order.iter().rev().copied().collect()] {
                if is_solution(inst, &cand) {
                    return (Some(cand), "read after rerouting rim edges".into());
                }
            }
        }
    }
    if let Ok(members) = tree.frontier_enumerate(20_000) {
        for cand in members {
            if is_solution(inst, &cand) {
                return (Some(cand), "enumerated the frontier".into());
            }
        }
    }
    (None, "extraction gave up; frontier too large to enumerate".into())
}

/// Finds the face whose walk visits every pendant leaf, then linearises the
/// cyclic leaf sequence by cutting at the first corner of the root
/// attachment vertex.
fn read_pendant_face(
    rot: &Rotation,
    rep: &RepGraph,
    leaves: &BTreeSet<VertexId>,
) -> Option<LinearOrder> {
    for face in rot.trace_faces() {
        let hits = face.iter().filter(|d| leaves.contains(&d.0)).count();
        if hits != leaves.len() {
            continue;
        }
        let start = face.iter().position(|d| d.0 == rep.anchor)?;
        let mut order = Vec::with_capacity(leaves.len());
        for i in 0..face.len() {
            let v = face[(start + i) % face.len()].0;
            if leaves.contains(&v) {
                order.push(v);
            }
        }
        return Some(order);
    }
    None
}

/// Forces every rim edge of every wheel to bound a triangular face with its
/// hub, rerouting offenders alongside the two spokes. Each reroute frees
/// whatever was nested under the rim edge into the outer region. Returns
/// whether anything changed.
fn reroute_rim_edges(rot: &mut Rotation, g: &Graph, rep: &RepGraph) -> bool {
    let mut changed = false;
    let cap = rep.wheels.iter().map(|w| w.rim.len() * 4 + 4).sum::<usize>();
    for _ in 0..cap.max(1) {
        let Some((a, b, hub)) = first_buried_rim_edge(rot, rep) else {
            break;
        };
        if !reroute_one(rot, g, a, b, hub) {
            break;
        }
        changed = true;
    }
    changed
}

fn first_buried_rim_edge(rot: &Rotation, rep: &RepGraph) -> Option<(VertexId, VertexId, VertexId)> {
    for wheel in &rep.wheels {
        let n = wheel.rim.len();
        for i in 0..n {
            let a = wheel.rim[i];
            let b = wheel.rim[(i + 1) % n];
            if !triangle_is_facial(rot, a, b, wheel.hub) {
                return Some((a, b, wheel.hub));
            }
        }
    }
    None
}

fn triangle_is_facial(rot: &Rotation, a: VertexId, b: VertexId, c: VertexId) -> bool {
    let walk = |x: VertexId, y: VertexId, z: VertexId| {
        rot.next_dart((x, y)) == (y, z)
            && rot.next_dart((y, z)) == (z, x)
            && rot.next_dart((z, x)) == (x, y)
    };
    walk(a, b, c) || walk(b, a, c)
}

/// Moves edge (a, b) so it runs alongside the spokes (a, hub) and (hub, b),
/// trying the four sides and keeping the first genus-preserving one.
fn reroute_one(rot: &mut Rotation, g: &Graph, a: VertexId, b: VertexId, hub: VertexId) -> bool {
    let place = |list: &[VertexId], from: VertexId, beside: VertexId, side: usize| {
        let mut out: Vec<VertexId> = list.iter().copied().filter(|&x| x != from).collect();
        let at = out.iter().position(|&x| x == beside).expect("spoke present");
        out.insert(at + side, from);
        out
    };
    let orig_a = rot.at(a).to_vec();
    let orig_b = rot.at(b).to_vec();
    for side_a in 0..2 {
        for side_b in 0..2 {
            rot.set(a, place(&orig_a, b, hub, side_a));
            rot.set(b, place(&orig_b, a, hub, side_b));
            if rot.is_planar_for(g) && triangle_is_facial(rot, a, b, hub) {
                return true;
            }
        }
    }
    rot.set(a, orig_a);
    rot.set(b, orig_b);
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BacktrackOutcome {
    Yes(LinearOrder),
    No,
    BudgetExceeded,
}

/// Depth-first placement of leaves, one spine group at a time, pruning as
/// soon as two already-placed edges of one page alternate. Exact whenever it
/// returns within the node budget; every attempted placement costs one node.
pub fn backtracking_solve(inst: &PtbeInstance, node_budget: u64) -> BacktrackOutcome {
    let leaves = inst.tree.leaves();
    if leaves.len() <= 1 {
        return BacktrackOutcome::Yes(leaves);
    }
    let Some(groups) = spine_groups(inst) else {
        return BacktrackOutcome::No;
    };
    let pages: Vec<Vec<Edge>> = (0..inst.k()).map(|i| inst.page_edges(i)).collect();
    let mut state = Backtrack {
        pages,
        budget: node_budget,
        pos: std::collections::BTreeMap::new(),
        seq: Vec::new(),
        spans: vec![Vec::new(); inst.k()],
    };
    let mut directions = vec![groups.clone()];
    if groups.len() > 1 {
        directions.push(groups.iter().rev().cloned().collect());
    }
    for dir in directions {
        match state.go(&dir, 0) {
            Step::Found => {
                return BacktrackOutcome::Yes(state.seq);
            }
            Step::Exhausted => continue,
            Step::OutOfBudget => return BacktrackOutcome::BudgetExceeded,
        }
    }
    BacktrackOutcome::No
}

/// Leaf groups along the internal spine, or `None` when the tree is not a
/// caterpillar (then no order is represented by it).
fn spine_groups(inst: &PtbeInstance) -> Option<Vec<Vec<VertexId>>> {
    let tree = &inst.tree;
    let internal = tree.internal_vertices();
    let leaves = tree.leaf_set();
    if internal.len() <= 1 {
        return Some(vec![leaves.iter().copied().collect()]);
    }
    let internal_set: BTreeSet<VertexId> = internal.iter().copied().collect();
    let mut ends = Vec::new();
    for &u in &internal {
        let d = tree.graph().neighbors(u).filter(|w| internal_set.contains(w)).count();
        match d {
            1 => ends.push(u),
            2 => {}
            _ => return None,
        }
    }
    if ends.len() != 2 {
        return None;
    }
    let first = *ends.iter().min().expect("two spine ends");
    let mut spine = vec![first];
    let mut prev = first;
    let mut cur = first;
    while spine.len() < internal.len() {
        let next = tree
            .graph()
            .neighbors(cur)
            .find(|&w| internal_set.contains(&w) && w != prev)?;
        spine.push(next);
        prev = cur;
        cur = next;
    }
    Some(
        spine
            .iter()
            .map(|&u| tree.graph().neighbors(u).filter(|w| leaves.contains(w)).collect())
            .collect(),
    )
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Backtrack {
    pages: Vec<Vec<Edge>>,
    budget: u64,
    pos: std::collections::BTreeMap<VertexId, usize>,
    seq: Vec<VertexId>,
    /// Closed spans per page, as position pairs (lo, hi).
    spans: Vec<Vec<(usize, usize)>>,
}

impl Backtrack {
    fn go(&mut self, groups: &[Vec<VertexId>], group: usize) -> Step {
        if group == groups.len() {
            return Step::Found;
        }
        let placed_in_group =
            groups[group].iter().filter(|l| self.pos.contains_key(l)).count();
        if placed_in_group == groups[group].len() {
            return self.go(groups, group + 1);
        }
        let candidates: Vec<VertexId> = groups[group]
            .iter()
            .copied()
            .filter(|l| !self.pos.contains_key(l))
            .collect();
        for leaf in candidates {
            if self.budget == 0 {
                return Step::OutOfBudget;
            }
            self.budget -= 1;
            if self.place(leaf) {
                match self.go(groups, group) {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.unplace(leaf);
        }
        Step::Exhausted
    }

    /// Appends the leaf and closes its page spans; false on an alternation.
    fn place(&mut self, leaf: VertexId) -> bool {
        let t = self.seq.len();
        self.seq.push(leaf);
        self.pos.insert(leaf, t);
        for p in 0..self.pages.len() {
            for &(u, v) in &self.pages[p].clone() {
                let other = if u == leaf { v } else if v == leaf { u } else { continue };
                let Some(&lo) = self.pos.get(&other) else { continue };
                // Spans closing at t share the new leaf and never alternate.
                if self.spans[p].iter().any(|&(l, r)| r < t && l < lo && lo < r) {
                    return false;
                }
                self.spans[p].push((lo, t));
            }
        }
        true
    }

    fn unplace(&mut self, leaf: VertexId) {
        let t = self.seq.len() - 1;
        debug_assert_eq!(self.seq[t], leaf);
        self.seq.pop();
        self.pos.remove(&leaf);
        for spans in &mut self.spans {
            spans.retain(|&(_, r)| r != t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::LeafTree;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn star(n: u32) -> LeafTree {
        let mut g = Graph::new();
        for l in 1..=n {
            g.add_edge(0, l);
        }
        LeafTree::new(g).unwrap()
    }

    fn inst(tree: LeafTree, pages: Vec<Vec<Edge>>) -> PtbeInstance {
        PtbeInstance::new(tree, pages).unwrap()
    }

    /// Strong orders whose every page is alternation-free, straight from the
    /// frontier. Only for tiny instances.
    fn tiny_oracle(inst: &PtbeInstance) -> Option<LinearOrder> {
        let tree = PqTree::from_leaf_tree(&inst.tree)?;
        tree.frontier_enumerate(1_000_000)
            .unwrap()
            .into_iter()
            .find(|o| (0..inst.k()).all(|i| page_alternation_free(o, &inst.page_edges(i))))
    }

    #[test]
    fn path_pages_on_a_star_embed() {
        let i = inst(star(4), vec![vec![(1, 2), (2, 3), (3, 4)], vec![(1, 3)]]);
        let report = solve(&i, 1).unwrap();
        let Verdict::Yes { order: Some(order) } = report.verdict else {
            panic!("expected a witness, got {:?}", report.verdict);
        };
        assert!(is_solution(&i, &order));
        assert_eq!(report.trace.constrained_pages, vec![0]);
    }

    #[test]
    fn complete_page_refuses_one_page() {
        let all = vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
        let i = inst(star(4), vec![all, vec![]]);
        let report = solve(&i, 1).unwrap();
        assert_eq!(report.verdict, Verdict::No);
        // A page that is not outerplanar dies before any planarity test.
        assert!(report.trace.attempts.iter().any(|a| a.page_trees.contains(&None)));
        assert!(report.trace.notes.iter().any(|n| n.contains("no order")));
    }

    #[test]
    fn free_page_alone_is_a_single_pass() {
        let i = inst(star(4), vec![vec![(1, 2), (2, 3), (3, 4)]]);
        let report = solve(&i, 0).unwrap();
        let Verdict::Yes { order: Some(order) } = report.verdict else {
            panic!("expected a witness");
        };
        assert!(is_solution(&i, &order));
        assert_eq!(report.trace.anchors.len(), 1);
    }

    #[test]
    fn spanning_requirement_is_checked_per_page() {
        let i = inst(star(4), vec![vec![(1, 2)], vec![(1, 2), (2, 3), (3, 4)]]);
        assert!(matches!(solve(&i, 1), Err(Error::Unsupported(_))));
        let (free, report) = solve_auto(&i).unwrap();
        assert_eq!(free, 0);
        assert!(matches!(report.verdict, Verdict::Yes { .. }));
    }

    #[test]
    fn spider_trees_have_no_strong_orders() {
        let mut g = Graph::new();
        for (mid, leaf) in [(5u32, 1u32), (6, 2), (7, 3)] {
            g.add_edge(0, mid);
            g.add_edge(mid, leaf);
        }
        let i = inst(LeafTree::new(g).unwrap(), vec![vec![(1, 2), (2, 3)]]);
        let report = solve(&i, 0).unwrap();
        assert_eq!(report.verdict, Verdict::No);
        assert!(report.trace.notes.iter().any(|n| n.contains("caterpillar")));
    }

    #[test]
    fn zero_budget_runs_out() {
        let i = inst(star(4), vec![vec![(1, 2), (2, 3), (3, 4)]]);
        assert_eq!(backtracking_solve(&i, 0), BacktrackOutcome::BudgetExceeded);
    }

    fn random_instance(rng: &mut StdRng) -> PtbeInstance {
        // Caterpillar with 1..=3 spine vertices over 3..=6 leaves.
        let n: u32 = rng.gen_range(3..=6);
        let spine_len: u32 = rng.gen_range(1..=3.min(n - 1));
        let mut g = Graph::new();
        let spine: Vec<u32> = (n + 1..=n + spine_len).collect();
        for w in spine.windows(2) {
            g.add_edge(w[0], w[1]);
        }
        for l in 1..=n {
            g.add_edge(spine[rng.gen_range(0..spine.len())], l);
        }
        let tree = match LeafTree::new(g) {
            Ok(t) if t.leaves().len() == n as usize => t,
            // A spine vertex with no leaves degenerates; retry.
            _ => return random_instance(rng),
        };
        // Constrained page: random spanning tree over the leaves plus noise.
        let mut page0: Vec<Edge> = Vec::new();
        let leaves = tree.leaves();
        for i in 1..leaves.len() {
            page0.push((leaves[rng.gen_range(0..i)], leaves[i]));
        }
        let mut free: Vec<Edge> = Vec::new();
        for _ in 0..rng.gen_range(0..=3) {
            let a = leaves[rng.gen_range(0..leaves.len())];
            let b = leaves[rng.gen_range(0..leaves.len())];
            if a != b && !free.contains(&(a.min(b), a.max(b))) {
                free.push((a.min(b), a.max(b)));
            }
        }
        PtbeInstance::new(tree, vec![page0, free]).unwrap()
    }

    #[test]
    fn pipeline_and_backtracking_agree_with_enumeration() {
        let mut rng = StdRng::seed_from_u64(7031);
        for round in 0..300 {
            let i = random_instance(&mut rng);
            let expected = tiny_oracle(&i);
            let report = solve(&i, 1).unwrap();
            match (&report.verdict, &expected) {
                (Verdict::Yes { order: Some(o) }, Some(_)) => {
                    assert!(is_solution(&i, o), "round {round}: bad witness {o:?}");
                }
                (Verdict::No, None) => {}
                other => panic!("round {round}: solve {other:?} vs oracle {expected:?}"),
            }
            let bt = backtracking_solve(&i, 1_000_000);
            match (bt, &expected) {
                (BacktrackOutcome::Yes(o), Some(_)) => {
                    assert!(is_solution(&i, &o), "round {round}: bad dfs witness");
                }
                (BacktrackOutcome::No, None) => {}
                other => panic!("round {round}: dfs {other:?} vs oracle"),
            }
        }
    }
}
