//! Exhaustive reference solvers. Each one is small enough to trust by
//! inspection and is used to validate the pipeline and the reductions at
//! desk scale. Guards are explicit parameters; exceeding one is an error,
//! never a silent truncation.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::{
    intersection_graph, page_alternation_free, BetweennessInstance, Edge, Graph, LinearOrder,
    MaxSefeInstance, PstInstance, PtbeInstance, SunflowerSefeInstance, VertexId, XorSatInstance,
};
use crate::planarity::{for_each_rotation, rotation_count, Rotation};
use crate::pqtree::PqTree;
use crate::{Error, Result};

pub const BETWEENNESS_GUARD: usize = 10;
pub const PTBE_GUARD: usize = 9;
pub const XORSAT_GUARD: usize = 20;
pub const STEINER_EDGE_GUARD: usize = 12;
pub const STEINER_VERTEX_GUARD: usize = 8;
pub const FLIP_GUARD: usize = 22;
pub const SEFE_ROTATION_GUARD: u64 = 20_000_000;

pub fn betweenness_satisfied(order: &LinearOrder, triples: &[[VertexId; 3]]) -> bool {
    let pos: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    triples.iter().all(|t| {
        let (a, b, c) = (pos[&t[0]], pos[&t[1]], pos[&t[2]]);
        (a < b && b < c) || (c < b && b < a)
    })
}

/// First order (in lexicographic enumeration) placing every middle element
/// between its two companions.
pub fn betweenness_brute(
    inst: &BetweennessInstance,
    max_elements: usize,
) -> Result<Option<LinearOrder>> {
    if inst.elements.len() > max_elements {
        return Err(Error::Budget(format!(
            "betweenness brute force is capped at {max_elements} elements, got {}",
            inst.elements.len()
        )));
    }
    let mut perm: Vec<VertexId> = inst.elements.iter().copied().collect();
    loop {
        if betweenness_satisfied(&perm, &inst.triples) {
            return Ok(Some(perm));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// Advances to the lexicographic successor; false after the last one.
fn next_permutation(p: &mut [VertexId]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// First order represented by the tree on which no page alternates, straight
/// off the strong-order frontier.
pub fn ptbe_brute(inst: &PtbeInstance, max_leaves: usize) -> Result<Option<LinearOrder>> {
    let n = inst.tree.leaves().len();
    if n > max_leaves {
        return Err(Error::Budget(format!(
            "book-embedding brute force is capped at {max_leaves} leaves, got {n}"
        )));
    }
    let Some(tree) = PqTree::from_leaf_tree(&inst.tree) else {
        return Ok(None);
    };
    let limit = (1..=n.max(1)).product::<usize>().max(1);
    Ok(tree
        .frontier_enumerate(limit)?
        .into_iter()
        .find(|o| (0..inst.k()).all(|i| page_alternation_free(o, &inst.page_edges(i)))))
}

pub fn xorsat_unsat_count(inst: &XorSatInstance, assignment: &BTreeMap<VertexId, bool>) -> usize {
    inst.clauses
        .iter()
        .filter(|c| {
            let lit = |(v, pol): (VertexId, bool)| assignment[&v] == pol;
            lit(c[0]) == lit(c[1])
        })
        .count()
}

/// Exact minimum number of unsatisfied clauses over all assignments, with
/// the witness. Ties break toward the lowest assignment read as a bit string
/// over ascending variables.
pub fn xorsat_max_brute(
    inst: &XorSatInstance,
    max_variables: usize,
) -> Result<(usize, BTreeMap<VertexId, bool>)> {
    let vars: Vec<VertexId> = inst.variables.iter().copied().collect();
    if vars.len() > max_variables {
        return Err(Error::Budget(format!(
            "xorsat brute force is capped at {max_variables} variables, got {}",
            vars.len()
        )));
    }
    let mut best: Option<(usize, BTreeMap<VertexId, bool>)> = None;
    for mask in 0u64..(1u64 << vars.len()) {
        let assignment: BTreeMap<VertexId, bool> = vars
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, mask >> i & 1 == 1))
            .collect();
        let unsat = xorsat_unsat_count(inst, &assignment);
        if best.as_ref().is_none_or(|(b, _)| unsat < *b) {
            best = Some((unsat, assignment));
        }
    }
    Ok(best.expect("at least the empty assignment"))
}

/// Minimum-weight tree covering the terminals. Uniform weights go through
/// edge subsets by increasing cardinality, stopping at the first size that
/// admits a covering tree; small mixed-weight edge sets go through full
/// subset enumeration; otherwise every vertex superset of the terminals
/// is tried with a minimum spanning tree, which is exact because an optimal
/// Steiner tree spans its own vertex set.
pub fn steiner_brute(
    inst: &PstInstance,
    max_edges: usize,
    max_vertices: usize,
) -> Result<(u64, BTreeSet<Edge>)> {
    if inst.terminals.len() <= 1 {
        return Ok((0, BTreeSet::new()));
    }
    let edges: Vec<Edge> = inst.graph.edges().collect();
    if edges.len() <= max_edges {
        let uniform = edges.windows(2).all(|w| inst.weights[&w[0]] == inst.weights[&w[1]]);
        if uniform && !edges.is_empty() {
            return steiner_uniform(&edges, inst.weights[&edges[0]], &inst.terminals);
        }
        if edges.len() >= 64 {
            return Err(Error::Budget(format!(
                "mixed-weight subset enumeration is capped at 63 edges, got {}",
                edges.len()
            )));
        }
        let mut best: Option<(u64, BTreeSet<Edge>)> = None;
        for mask in 0u64..(1u64 << edges.len()) {
            let subset: Vec<Edge> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if !covers_as_tree(&subset, &inst.terminals) {
                continue;
            }
            let weight = subset.iter().map(|e| inst.weights[e]).sum();
            if best.as_ref().is_none_or(|(b, _)| weight < *b) {
                best = Some((weight, subset.into_iter().collect()));
            }
        }
        return best.ok_or_else(|| {
            Error::Unsupported("no connected acyclic edge set covers the terminals".into())
        });
    }
    let verts: Vec<VertexId> = inst.graph.vertices().collect();
    if verts.len() > max_vertices {
        return Err(Error::Budget(format!(
            "steiner brute force is capped at {max_edges} edges or {max_vertices} vertices"
        )));
    }
    let mut best: Option<(u64, BTreeSet<Edge>)> = None;
    for mask in 0u64..(1u64 << verts.len()) {
        let subset: BTreeSet<VertexId> = verts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if !inst.terminals.iter().all(|t| subset.contains(t)) {
            continue;
        }
        if let Some((w, es)) = spanning_mst(&inst.graph.induced(&subset), &inst.weights) {
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, es));
            }
        }
    }
    best.ok_or_else(|| {
        Error::Unsupported("no connected acyclic edge set covers the terminals".into())
    })
}

const UNIFORM_SUBSET_CAP: u64 = 4_000_000;

/// With equal weights the optimum is the smallest covering tree, so subsets
/// are visited in cardinality order and the first hit wins.
fn steiner_uniform(
    edges: &[Edge],
    weight: u64,
    terminals: &BTreeSet<VertexId>,
) -> Result<(u64, BTreeSet<Edge>)> {
    let mut examined = 0u64;
    for size in terminals.len().saturating_sub(1).max(1)..=edges.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            examined += 1;
            if examined > UNIFORM_SUBSET_CAP {
                return Err(Error::Budget(format!(
                    "uniform-weight enumeration is capped at {UNIFORM_SUBSET_CAP} subsets"
                )));
            }
            let subset: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            if covers_as_tree(&subset, terminals) {
                return Ok((size as u64 * weight, subset.into_iter().collect()));
            }
            // Advance the rightmost index that still has room to move.
            let Some(i) = (0..size).rev().find(|&i| idx[i] < edges.len() - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Err(Error::Unsupported("no connected acyclic edge set covers the terminals".into()))
}

/// The edge set must form one tree whose vertices include all terminals.
fn covers_as_tree(edges: &[Edge], terminals: &BTreeSet<VertexId>) -> bool {
    let g = Graph::from_edges(edges.iter().copied());
    terminals.iter().all(|t| g.has_vertex(*t))
        && g.is_connected()
        && g.edge_count() + 1 == g.vertex_count()
}

/// Kruskal over the whole vertex set; `None` when the graph is disconnected.
fn spanning_mst(g: &Graph, weights: &BTreeMap<Edge, u64>) -> Option<(u64, BTreeSet<Edge>)> {
    let verts: Vec<VertexId> = g.vertices().collect();
    if verts.len() <= 1 {
        return Some((0, BTreeSet::new()));
    }
    let index: BTreeMap<VertexId, usize> =
        verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by_key(|e| (weights[e], *e));
    let mut total = 0;
    let mut chosen = BTreeSet::new();
    for e in edges {
        let (ru, rv) = (find(&mut parent, index[&e.0]), find(&mut parent, index[&e.1]));
        if ru != rv {
            parent[ru] = rv;
            total += weights[&e];
            chosen.insert(e);
        }
    }
    (chosen.len() + 1 == verts.len()).then_some((total, chosen))
}

/// How two embeddings of a triangle-sharing instance may vary: a set of
/// independent flips, each inverting the orientation of some of the shared
/// triangles. `base` records which triangles already disagree with no flip
/// applied; `units[i]` lists the triangles toggled by flip i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipModel {
    pub base: Vec<bool>,
    pub units: Vec<Vec<usize>>,
}

/// Minimum number of orientation-flipped shared triangles over all flip
/// assignments, with the first minimising assignment in bit-string order.
pub fn maxsefe_flip_brute(
    inst: &MaxSefeInstance,
    model: &FlipModel,
    max_units: usize,
) -> Result<(usize, Vec<bool>)> {
    let shared = intersection_graph(&inst.g1, &inst.g2);
    let mut triangles = 0;
    for comp in shared.components() {
        let edges = comp
            .iter()
            .map(|&v| shared.neighbors(v).count())
            .sum::<usize>()
            / 2;
        if edges == 0 {
            continue;
        }
        if comp.len() != 3 || edges != 3 {
            return Err(Error::Unsupported(
                "every shared component with edges must be a triangle".into(),
            ));
        }
        triangles += 1;
    }
    if model.base.len() != triangles {
        return Err(Error::Malformed(format!(
            "flip model covers {} triangles, instance has {triangles}",
            model.base.len()
        )));
    }
    if model.units.len() > max_units {
        return Err(Error::Budget(format!(
            "flip enumeration is capped at 2^{max_units} assignments"
        )));
    }
    if let Some(bad) = model.units.iter().flatten().find(|&&t| t >= triangles) {
        return Err(Error::Malformed(format!("flip unit toggles unknown triangle {bad}")));
    }
    let mut best: Option<(usize, Vec<bool>)> = None;
    for mask in 0u64..(1u64 << model.units.len()) {
        let mut diff = model.base.clone();
        for (i, unit) in model.units.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for &t in unit {
                    diff[t] = !diff[t];
                }
            }
        }
        let violations = diff.iter().filter(|&&d| d).count();
        if best.as_ref().is_none_or(|(b, _)| violations < *b) {
            let flips = (0..model.units.len()).map(|i| mask >> i & 1 == 1).collect();
            best = Some((violations, flips));
        }
    }
    Ok(best.expect("at least the all-false assignment"))
}

/// Exhaustive sunflower-SEFE decision over rotation systems. Every rotation
/// of the shared graph is tried; each input graph must interleave its private
/// darts into it and reach genus zero. Complete when the shared graph is
/// connected and contains every private endpoint: a common embedding then
/// exists exactly when all graphs extend one shared rotation (reflecting a
/// drawing reflects its shared restriction, so mirror pairs are covered).
pub fn sefe_rotation_brute(inst: &SunflowerSefeInstance, max_candidates: u64) -> Result<bool> {
    if inst.shared.vertex_count() == 0 || !inst.shared.is_connected() {
        return Err(Error::Unsupported(
            "rotation brute force needs a nonempty connected shared graph".into(),
        ));
    }
    for es in &inst.privates {
        for &(u, v) in es {
            if !inst.shared.has_vertex(u) || !inst.shared.has_vertex(v) {
                return Err(Error::Unsupported(format!(
                    "private edge ({u}, {v}) leaves the shared vertex set"
                )));
            }
        }
    }
    let graphs: Vec<Graph> = (0..inst.k()).map(|i| inst.graph(i)).collect();
    // Cheapest extensions first so incompatible shared rotations die early.
    let mut by_cost: Vec<usize> = (0..graphs.len()).collect();
    by_cost.sort_by_key(|&i| rotation_count(&graphs[i]));
    let mut used = 0u64;
    let mut verdict = Ok(false);
    for_each_rotation(&inst.shared, max_candidates, |shared_rot| {
        used += 1;
        if used > max_candidates {
            verdict = Err(budget_exceeded(max_candidates));
            return false;
        }
        if !shared_rot.is_planar_for(&inst.shared) {
            return true;
        }
        for &i in &by_cost {
            match extends_to_planar(shared_rot, &graphs[i], &inst.shared, max_candidates, &mut used)
            {
                Ok(true) => {}
                Ok(false) => return true,
                Err(e) => {
                    verdict = Err(e);
                    return false;
                }
            }
        }
        verdict = Ok(true);
        false
    })?;
    verdict
}

fn budget_exceeded(max_candidates: u64) -> Error {
    Error::Budget(format!("rotation enumeration is capped at {max_candidates} candidates"))
}

/// Whether `g` has a genus-zero rotation restricting to `base` on the shared
/// graph. Candidates insert the private neighbors into the shared cyclic
/// lists in every possible way, head element pinned to kill cyclic shifts.
fn extends_to_planar(
    base: &Rotation,
    g: &Graph,
    shared: &Graph,
    max_candidates: u64,
    used: &mut u64,
) -> Result<bool> {
    let mut fixed: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut slots: Vec<(VertexId, Vec<Vec<VertexId>>)> = Vec::new();
    let mut total: u128 = 1;
    for v in g.vertices() {
        let shared_list: Vec<VertexId> =
            if shared.has_vertex(v) { base.at(v).to_vec() } else { Vec::new() };
        let privates: Vec<VertexId> =
            g.neighbors(v).filter(|w| !shared_list.contains(w)).collect();
        if privates.is_empty() {
            fixed.insert(v, shared_list);
            continue;
        }
        let start = shared_list.len().max(1) as u128;
        let inserted = privates.len() - usize::from(shared_list.is_empty());
        let count = (0..inserted as u128)
            .try_fold(1u128, |acc, i| acc.checked_mul(start + i))
            .unwrap_or(u128::MAX);
        total = total.saturating_mul(count);
        if total > u128::from(max_candidates) {
            return Err(budget_exceeded(max_candidates));
        }
        slots.push((v, interleavings(&shared_list, &privates)));
    }
    let mut idx = vec![0usize; slots.len()];
    loop {
        *used += 1;
        if *used > max_candidates {
            return Err(budget_exceeded(max_candidates));
        }
        let mut order = fixed.clone();
        for (slot, (v, lists)) in slots.iter().enumerate() {
            order.insert(*v, lists[idx[slot]].clone());
        }
        if Rotation::from_map(order).is_planar_for(g) {
            return Ok(true);
        }
        let mut carry = 0;
        loop {
            if carry == slots.len() {
                return Ok(false);
            }
            idx[carry] += 1;
            if idx[carry] < slots[carry].1.len() {
                break;
            }
            idx[carry] = 0;
            carry += 1;
        }
    }
}

/// All cyclic interleavings as linear lists with the head fixed.
fn interleavings(shared: &[VertexId], privates: &[VertexId]) -> Vec<Vec<VertexId>> {
    let (mut seed, rest): (Vec<VertexId>, &[VertexId]) = if shared.is_empty() {
        (vec![privates[0]], &privates[1..])
    } else {
        (shared.to_vec(), privates)
    };
    let mut lists = vec![std::mem::take(&mut seed)];
    for &p in rest {
        let mut next = Vec::new();
        for l in lists {
            for pos in 1..=l.len() {
                let mut m = l.clone();
                m.insert(pos, p);
                next.push(m);
            }
        }
        lists = next;
    }
    lists
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{leaf_expand, LeafTree};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn betweenness(n: VertexId, triples: &[[VertexId; 3]]) -> BetweennessInstance {
        BetweennessInstance::new((1..=n).collect(), triples.to_vec()).unwrap()
    }

    #[test]
    fn betweenness_finds_the_first_lexicographic_witness() {
        let yes = betweenness(3, &[[1, 2, 3]]);
        assert_eq!(betweenness_brute(&yes, BETWEENNESS_GUARD).unwrap(), Some(vec![1, 2, 3]));
        let no = betweenness(3, &[[1, 2, 3], [2, 1, 3], [1, 3, 2]]);
        assert_eq!(betweenness_brute(&no, BETWEENNESS_GUARD).unwrap(), None);
        let empty = betweenness(3, &[]);
        assert_eq!(betweenness_brute(&empty, BETWEENNESS_GUARD).unwrap(), Some(vec![1, 2, 3]));
        assert!(matches!(
            betweenness_brute(&betweenness(9, &[]), 8),
            Err(Error::Budget(_))
        ));
    }

    fn star(n: u32) -> LeafTree {
        LeafTree::new(Graph::from_edges((1..=n).map(|l| (0, l)))).unwrap()
    }

    #[test]
    fn ptbe_brute_walks_the_frontier() {
        let path = PtbeInstance::new(star(4), vec![vec![(1, 2), (2, 3), (3, 4)]]).unwrap();
        let order = ptbe_brute(&path, PTBE_GUARD).unwrap().unwrap();
        assert!(page_alternation_free(&order, &path.page_edges(0)));
        let k4 = PtbeInstance::new(
            star(4),
            vec![vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]],
        )
        .unwrap();
        assert_eq!(ptbe_brute(&k4, PTBE_GUARD).unwrap(), None);
        let free = PtbeInstance::new(star(3), vec![]).unwrap();
        let mut witness = ptbe_brute(&free, PTBE_GUARD).unwrap().unwrap();
        witness.sort();
        assert_eq!(witness, vec![1, 2, 3]);
    }

    #[test]
    fn xorsat_minimum_and_tie_break() {
        let one = XorSatInstance::new(
            [1, 2].into(),
            vec![[(1, true), (2, true)]],
            0,
        )
        .unwrap();
        let (unsat, a) = xorsat_max_brute(&one, XORSAT_GUARD).unwrap();
        assert_eq!(unsat, 0);
        // 00 fails (equal values), 10 is the first satisfying bit string.
        assert_eq!(a, [(1, true), (2, false)].into());
        let contra = XorSatInstance::new(
            [1, 2].into(),
            vec![[(1, true), (2, true)], [(1, true), (2, false)]],
            1,
        )
        .unwrap();
        assert_eq!(xorsat_max_brute(&contra, XORSAT_GUARD).unwrap().0, 1);
        let empty = XorSatInstance::new(BTreeSet::new(), vec![], 0).unwrap();
        assert_eq!(xorsat_max_brute(&empty, XORSAT_GUARD).unwrap(), (0, BTreeMap::new()));
    }

    fn pst(edges: &[(Edge, u64)], terminals: &[VertexId]) -> PstInstance {
        let g = Graph::from_edges(edges.iter().map(|&(e, _)| e));
        let weights = edges.iter().map(|&(e, w)| (e, w)).collect();
        PstInstance::new(g, weights, terminals.iter().copied().collect(), 0).unwrap()
    }

    #[test]
    fn steiner_picks_the_cheap_detour() {
        let two = pst(&[(((0, 1)), 1)], &[0, 1]);
        assert_eq!(
            steiner_brute(&two, STEINER_EDGE_GUARD, STEINER_VERTEX_GUARD).unwrap(),
            (1, [(0, 1)].into())
        );
        // The detour 0-1-2 and the direct heavy edge tie at weight 2.
        let tri = pst(&[(((0, 1)), 1), (((1, 2)), 1), (((0, 2)), 2)], &[0, 2]);
        let (w, witness) = steiner_brute(&tri, STEINER_EDGE_GUARD, STEINER_VERTEX_GUARD).unwrap();
        assert_eq!(w, 2);
        assert!(covers_as_tree(&witness.iter().copied().collect::<Vec<_>>(), &tri.terminals));
        let cheap = pst(&[(((0, 1)), 1), (((1, 2)), 1), (((0, 2)), 3)], &[0, 2]);
        assert_eq!(
            steiner_brute(&cheap, STEINER_EDGE_GUARD, STEINER_VERTEX_GUARD).unwrap(),
            (2, [(0, 1), (1, 2)].into())
        );
        let lone = pst(&[(((0, 1)), 1)], &[0]);
        assert_eq!(
            steiner_brute(&lone, STEINER_EDGE_GUARD, STEINER_VERTEX_GUARD).unwrap(),
            (0, BTreeSet::new())
        );
    }

    #[test]
    fn steiner_paths_agree_and_relabeling_is_harmless() {
        let mut rng = StdRng::seed_from_u64(411);
        for _ in 0..120 {
            let n: u32 = rng.gen_range(3..=6);
            let mut edges: Vec<(Edge, u64)> = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.6) {
                        edges.push(((u, v), rng.gen_range(1..=4)));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            let present: Vec<VertexId> =
                Graph::from_edges(edges.iter().map(|&(e, _)| e)).vertices().collect();
            let mut terms: Vec<VertexId> =
                present.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            if terms.is_empty() {
                terms.push(present[0]);
            }
            let inst = pst(&edges, &terms);
            let by_edges = steiner_brute(&inst, 15, 0);
            let by_verts = steiner_brute(&inst, 0, 8);
            match (by_edges, by_verts) {
                (Ok((w1, t1)), Ok((w2, _))) => {
                    assert_eq!(w1, w2);
                    assert!(covers_as_tree(
                        &t1.iter().copied().collect::<Vec<_>>(),
                        &inst.terminals
                    ) || t1.is_empty());
                    // Shift every id; the answer must shift with it.
                    let shifted = pst(
                        &edges.iter().map(|&((u, v), w)| ((u + 7, v + 7), w)).collect::<Vec<_>>(),
                        &terms.iter().map(|&t| t + 7).collect::<Vec<_>>(),
                    );
                    let (w3, _) = steiner_brute(&shifted, 15, 0).unwrap();
                    assert_eq!(w1, w3);
                }
                (Err(Error::Unsupported(_)), Err(Error::Unsupported(_))) => {}
                other => panic!("paths disagree: {other:?}"),
            }
        }
    }

    #[test]
    fn flip_brute_minimises_toggled_triangles() {
        let tri = Graph::from_edges([(0, 1), (1, 2), (0, 2)]);
        let inst = MaxSefeInstance::new(tri.clone(), tri, 0).unwrap();
        let fixed = FlipModel { base: vec![false], units: vec![] };
        assert_eq!(maxsefe_flip_brute(&inst, &fixed, FLIP_GUARD).unwrap(), (0, vec![]));
        let stuck = FlipModel { base: vec![true], units: vec![vec![]] };
        assert_eq!(
            maxsefe_flip_brute(&inst, &stuck, FLIP_GUARD).unwrap(),
            (1, vec![false])
        );
        let fixable = FlipModel { base: vec![true], units: vec![vec![0]] };
        assert_eq!(
            maxsefe_flip_brute(&inst, &fixable, FLIP_GUARD).unwrap(),
            (0, vec![true])
        );
        let not_triangles = MaxSefeInstance::new(
            Graph::from_edges([(0, 1), (1, 2)]),
            Graph::from_edges([(0, 1), (1, 2)]),
            0,
        )
        .unwrap();
        assert!(matches!(
            maxsefe_flip_brute(&not_triangles, &fixed, FLIP_GUARD),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn uniform_weights_take_the_cardinality_path() {
        let path: Vec<(Edge, u64)> = (0..16).map(|i| ((i, i + 1), 2)).collect();
        let long = pst(&path, &[0, 16]);
        let (w, t) = steiner_brute(&long, 16, 0).unwrap();
        assert_eq!((w, t.len()), (32, 16));
        // Cardinality order makes the witness a smallest covering tree.
        let detour = pst(&[((0, 1), 3), ((1, 2), 3), ((0, 2), 3)], &[0, 2]);
        assert_eq!(
            steiner_brute(&detour, STEINER_EDGE_GUARD, 0).unwrap(),
            (3, [(0, 2)].into())
        );
        let split = pst(&[((0, 1), 1), ((2, 3), 1)], &[0, 3]);
        assert!(matches!(
            steiner_brute(&split, STEINER_EDGE_GUARD, 0),
            Err(Error::Unsupported(_))
        ));
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..60 {
            let n: u32 = rng.gen_range(3..=6);
            let w: u64 = rng.gen_range(1..=3);
            let mut edges: Vec<(Edge, u64)> = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.55) {
                        edges.push(((u, v), w));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            let present: Vec<VertexId> =
                edges.iter().flat_map(|&((u, v), _)| [u, v]).collect();
            let mut terms: Vec<VertexId> = present.clone();
            terms.sort_unstable();
            terms.dedup();
            terms.truncate(rng.gen_range(2..=3));
            let inst = pst(&edges, &terms);
            match (steiner_brute(&inst, 15, 0), steiner_brute(&inst, 0, 8)) {
                (Ok((w1, t1)), Ok((w2, _))) => {
                    assert_eq!(w1, w2);
                    assert!(covers_as_tree(
                        &t1.iter().copied().collect::<Vec<_>>(),
                        &inst.terminals
                    ));
                }
                (Err(Error::Unsupported(_)), Err(Error::Unsupported(_))) => {}
                other => panic!("uniform paths disagree: {other:?}"),
            }
        }
    }

    #[test]
    fn sefe_rotation_matches_book_embedding_on_star_shares() {
        let mut rng = StdRng::seed_from_u64(77);
        let mut checked = 0;
        for case in 0..80 {
            let n: u32 = rng.gen_range(3..=5);
            let shared = Graph::from_edges((1..=n).map(|i| (0, i)));
            let mut used: BTreeSet<Edge> = BTreeSet::new();
            let mut privates: Vec<Vec<Edge>> = Vec::new();
            for _ in 0..2 {
                let mut es = Vec::new();
                for _ in 0..rng.gen_range(0..=3) {
                    let u = rng.gen_range(1..=n);
                    let v = rng.gen_range(1..=n);
                    let e = (u.min(v), u.max(v));
                    if u != v && used.insert(e) {
                        es.push(e);
                    }
                }
                privates.push(es);
            }
            let inst = SunflowerSefeInstance::new(shared, privates).unwrap();
            let sefe = sefe_rotation_brute(&inst, SEFE_ROTATION_GUARD).unwrap();
            let book = ptbe_brute(&leaf_expand(&inst).unwrap(), PTBE_GUARD).unwrap();
            assert_eq!(sefe, book.is_some(), "case {case}");
            checked += 1;
        }
        assert!(checked >= 60);
    }

    #[test]
    fn sefe_rotation_separates_pairwise_from_joint_embeddability() {
        let shared = Graph::from_edges([(0, 1), (0, 2), (0, 3), (0, 4)]);
        let m1 = vec![(1, 2), (3, 4)];
        let m2 = vec![(2, 3), (1, 4)];
        let m3 = vec![(1, 3), (2, 4)];
        for (a, b) in [(&m1, &m2), (&m1, &m3), (&m2, &m3)] {
            let pair =
                SunflowerSefeInstance::new(shared.clone(), vec![a.clone(), b.clone()]).unwrap();
            assert!(sefe_rotation_brute(&pair, SEFE_ROTATION_GUARD).unwrap());
        }
        let joint = SunflowerSefeInstance::new(shared, vec![m1, m2, m3]).unwrap();
        assert!(!sefe_rotation_brute(&joint, SEFE_ROTATION_GUARD).unwrap());
    }

    #[test]
    fn sefe_rotation_guards_and_degenerate_inputs() {
        let c5 = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let chords = vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)];
        let k5 = SunflowerSefeInstance::new(c5, vec![chords]).unwrap();
        assert!(!sefe_rotation_brute(&k5, SEFE_ROTATION_GUARD).unwrap());
        assert!(matches!(sefe_rotation_brute(&k5, 3), Err(Error::Budget(_))));
        let split = SunflowerSefeInstance::new(
            Graph::from_edges([(0, 1), (2, 3)]),
            vec![vec![]],
        )
        .unwrap();
        assert!(matches!(
            sefe_rotation_brute(&split, SEFE_ROTATION_GUARD),
            Err(Error::Unsupported(_))
        ));
        assert!(SunflowerSefeInstance::new(Graph::from_edges([(0, 1)]), vec![vec![(2, 3)]])
            .is_err());
    }
}
