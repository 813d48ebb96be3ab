//! PQ-trees describing the cyclic order of neighbors around an apex vertex.
//!
//! Given a planar graph `h` containing a vertex `w`, the orders in which the
//! edges around `w` can appear in a planar embedding of `h` form a PQ-tree
//! over the neighbors of `w`. When every vertex of `h - w` is adjacent to `w`
//! this is the classic outerplanarity structure: each biconnected block of
//! `h - w` contributes a rigid rim (a Q node), and each cut vertex lets the
//! attached blocks swing freely around it (a P node).
//!
//! The returned tree is linear, so a convention is needed for cutting the
//! cyclic order open. The tree built here is rooted at an anchor vertex `a`:
//! its frontier contains every admissible linear order that starts or ends at
//! `a`, and every frontier order has an admissible cyclic closure. Callers
//! that enumerate solutions must therefore try each anchor of interest.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::{Edge, Graph, VertexId};
use crate::planarity::{blocks, is_planar};
use crate::pqtree::{Node, PqTree};
use crate::{Error, Result};

/// Builds the apex-order PQ-tree anchored at the smallest neighbor of `apex`.
///
/// Returns `Ok(None)` when `h` has no planar embedding. Fails with
/// `Error::Unsupported` when `h` minus the apex is disconnected or contains a
/// block whose interior is too entangled to summarize; neither case arises
/// for the instances produced in this crate.
pub fn apex_order_pqtree(h: &Graph, apex: VertexId) -> Result<Option<PqTree>> {
    let root = h
        .neighbors(apex)
        .min()
        .ok_or_else(|| Error::Invariant("apex has no neighbors".into()))?;
    apex_order_pqtree_anchored(h, apex, root)
}

/// Same as [`apex_order_pqtree`], with an explicit anchor vertex.
///
/// The anchor must be a neighbor of the apex. The frontier of the resulting
/// tree contains every admissible order that starts or ends at the anchor.
pub fn apex_order_pqtree_anchored(
    h: &Graph,
    apex: VertexId,
    anchor: VertexId,
) -> Result<Option<PqTree>> {
    if !h.has_vertex(apex) {
        return Err(Error::Invariant("apex vertex is not in the graph".into()));
    }
    let ring: BTreeSet<VertexId> = h.neighbors(apex).collect();
    if ring.is_empty() {
        return Err(Error::Invariant("apex has no neighbors".into()));
    }
    if !ring.contains(&anchor) {
        return Err(Error::Invariant("anchor must be adjacent to the apex".into()));
    }

    let mut k = h.clone();
    k.remove_vertex(apex);
    if !k.is_connected() {
        return Err(Error::Unsupported(
            "the graph minus the apex must be connected".into(),
        ));
    }
    if k.vertex_count() == 1 {
        return Ok(Some(PqTree::new(Node::Leaf(anchor))));
    }

    let blks = blocks(&k);
    let bverts: Vec<BTreeSet<VertexId>> = blks
        .iter()
        .map(|es| es.iter().flat_map(|&(u, v)| [u, v]).collect())
        .collect();
    let mut v2b: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, vs) in bverts.iter().enumerate() {
        for &v in vs {
            v2b.entry(v).or_default().push(i);
        }
    }

    // Walk the block-cut tree outward from the anchor, recording the order of
    // discovery; replaying it backwards visits children before parents.
    #[derive(Clone, Copy)]
    enum Spot {
        Vertex(VertexId, Option<usize>),
        Block(usize, VertexId),
    }
    let mut stack = vec![Spot::Vertex(anchor, None)];
    let mut pre: Vec<Spot> = Vec::new();
    let mut block_seen = vec![false; blks.len()];
    while let Some(spot) = stack.pop() {
        pre.push(spot);
        match spot {
            Spot::Vertex(v, parent) => {
                for &b in &v2b[&v] {
                    if Some(b) != parent && !block_seen[b] {
                        block_seen[b] = true;
                        stack.push(Spot::Block(b, v));
                    }
                }
            }
            Spot::Block(b, entry) => {
                for &s in &bverts[b] {
                    if s != entry {
                        stack.push(Spot::Vertex(s, Some(b)));
                    }
                }
            }
        }
    }

    let mut vertex_built: BTreeMap<VertexId, (usize, Option<Node>)> = BTreeMap::new();
    let mut block_built: BTreeMap<usize, (usize, Option<Node>)> = BTreeMap::new();
    let mut block_entry: BTreeMap<usize, VertexId> = BTreeMap::new();
    for spot in &pre {
        if let Spot::Block(b, entry) = *spot {
            block_entry.insert(b, entry);
        }
    }

    for spot in pre.iter().rev() {
        match *spot {
            Spot::Vertex(v, _) => {
                let mut count = usize::from(ring.contains(&v));
                let mut arcs = Vec::new();
                for &b in &v2b[&v] {
                    if block_entry.get(&b) == Some(&v) {
                        let (c, node) = block_built
                            .get_mut(&b)
                            .map(|(c, n)| (*c, n.take()))
                            .unwrap_or((0, None));
                        count += c;
                        arcs.extend(node);
                    }
                }
                let node = if ring.contains(&v) {
                    if arcs.is_empty() {
                        Some(Node::Leaf(v))
                    } else {
                        let mut kids = vec![Node::Leaf(v)];
                        kids.extend(arcs);
                        Some(Node::P(kids))
                    }
                } else {
                    match arcs.len() {
                        0 => None,
                        1 => arcs.pop(),
                        _ => Some(Node::P(arcs)),
                    }
                };
                vertex_built.insert(v, (count, node));
            }
            Spot::Block(b, entry) => {
                let below: usize = bverts[b]
                    .iter()
                    .filter(|&&s| s != entry)
                    .map(|s| vertex_built[s].0)
                    .sum();
                if below == 0 {
                    // Nothing around the apex lives past this block; it only
                    // has to be drawable at all.
                    if !is_planar(&Graph::from_edges(blks[b].iter().copied())) {
                        return Ok(None);
                    }
                    block_built.insert(b, (0, None));
                    continue;
                }
                let important: BTreeSet<VertexId> = bverts[b]
                    .iter()
                    .copied()
                    .filter(|&s| s == entry || ring.contains(&s) || vertex_built[&s].0 > 0)
                    .collect();
                match block_rim(&blks[b], &bverts[b], &important) {
                    Some((rim, interior)) => {
                        if interior.iter().any(|x| important.contains(x)) {
                            // A vertex that must reach the apex face is locked
                            // inside the block.
                            return Ok(None);
                        }
                        let pos = rim
                            .iter()
                            .position(|&x| x == entry)
                            .expect("block entry lies on the rim");
                        let mut kids = Vec::new();
                        for s in rim[pos + 1..].iter().chain(rim[..pos].iter()) {
                            if let Some(node) = vertex_built
                                .get_mut(s)
                                .and_then(|(_, n)| n.take())
                            {
                                kids.push(node);
                            }
                        }
                        let node = match kids.len() {
                            0 => None,
                            1 => kids.pop(),
                            _ => Some(Node::Q(kids)),
                        };
                        block_built.insert(b, (below, node));
                    }
                    None => {
                        return if bverts[b].iter().all(|s| important.contains(s)) {
                            // Every block vertex needs the apex face, but the
                            // block is not outerplanar.
                            Ok(None)
                        } else {
                            Err(Error::Unsupported(
                                "a block mixing hidden structure with apex-facing \
                                 vertices is not outerplanar"
                                    .into(),
                            ))
                        };
                    }
                }
            }
        }
    }

    let node = vertex_built
        .get_mut(&anchor)
        .and_then(|(_, n)| n.take())
        .expect("anchor is adjacent to the apex");
    let tree = PqTree::new(node);
    debug_assert_eq!(tree.leaf_set(), ring);
    Ok(Some(tree))
}

/// Computes the rim of a biconnected block: the unique cyclic order its
/// vertices take on the boundary when the block is drawn with everything on
/// the outer face. Vertices in the second component of the result cannot
/// reach the boundary (the hub of a closed wheel). Returns `None` when the
/// block has no such rim.
fn block_rim(
    edges: &[Edge],
    verts: &BTreeSet<VertexId>,
    important: &BTreeSet<VertexId>,
) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().insert(v);
        adj.entry(v).or_default().insert(u);
    }
    if verts.len() == 2 {
        let mut it = verts.iter();
        return Some((vec![*it.next().unwrap(), *it.next().unwrap()], Vec::new()));
    }

    // A closed wheel hides its hub inside the rim cycle. Recognize that shape
    // directly, since the hub blocks the ear decomposition below.
    for &hub in verts {
        if important.contains(&hub) || adj[&hub].len() != verts.len() - 1 {
            continue;
        }
        if let Some(rim) = hubless_cycle(&adj, verts, hub) {
            return Some((rim, vec![hub]));
        }
    }

    // Peel degree-2 ears down to a single edge, then replay the peeling to
    // stitch the rim back together. Every 2-connected outerplanar graph, and
    // nothing else, survives both phases and the final chord check.
    let mut work = adj.clone();
    let mut peeled: Vec<(VertexId, VertexId, VertexId)> = Vec::new();
    let mut ears: Vec<VertexId> = work
        .iter()
        .filter(|(_, ns)| ns.len() == 2)
        .map(|(&v, _)| v)
        .collect();
    while work.len() > 2 {
        let v = loop {
            let v = ears.pop()?;
            if work.get(&v).map(|ns| ns.len()) == Some(2) {
                break v;
            }
        };
        let mut ns = work.remove(&v).unwrap().into_iter();
        let (a, b) = (ns.next().unwrap(), ns.next().unwrap());
        for (x, y) in [(a, b), (b, a)] {
            let nx = work.get_mut(&x).unwrap();
            nx.remove(&v);
            nx.insert(y);
            if nx.len() == 2 {
                ears.push(x);
            }
        }
        peeled.push((v, a, b));
    }

    let mut rest = work.keys();
    let (u, w) = (*rest.next().unwrap(), *rest.next().unwrap());
    let mut next: BTreeMap<VertexId, VertexId> = BTreeMap::from([(u, w), (w, u)]);
    let mut prev = next.clone();
    for &(v, a, b) in peeled.iter().rev() {
        let (from, to) = if next.get(&a) == Some(&b) {
            (a, b)
        } else if next.get(&b) == Some(&a) {
            (b, a)
        } else {
            return None;
        };
        next.insert(from, v);
        next.insert(v, to);
        prev.insert(to, v);
        prev.insert(v, from);
    }

    let mut rim = vec![u];
    let mut at = next[&u];
    while at != u {
        rim.push(at);
        at = next[&at];
    }
    debug_assert_eq!(rim.len(), verts.len());

    // Chords must be mutually non-crossing in the rim order.
    let pos: BTreeMap<VertexId, usize> = rim.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for &(x, y) in edges {
        let (i, j) = (pos[&x].min(pos[&y]), pos[&x].max(pos[&y]));
        if j - i == 1 || (i == 0 && j == rim.len() - 1) {
            continue;
        }
        chords.push((i, j));
    }
    chords.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut open: Vec<(usize, usize)> = Vec::new();
    for &(i, j) in &chords {
        while open.last().is_some_and(|&(_, r)| r < i) {
            open.pop();
        }
        if open.last().is_some_and(|&(_, r)| r < j) {
            return None;
        }
        open.push((i, j));
    }

    Some((rim, Vec::new()))
}

/// Checks that the block minus `hub` is a single cycle and returns it.
fn hubless_cycle(
    adj: &BTreeMap<VertexId, BTreeSet<VertexId>>,
    verts: &BTreeSet<VertexId>,
    hub: VertexId,
) -> Option<Vec<VertexId>> {
    for &v in verts {
        if v != hub && adj[&v].iter().filter(|&&n| n != hub).count() != 2 {
            return None;
        }
    }
    let start = *verts.iter().find(|&&v| v != hub)?;
    let mut cycle = vec![start];
    let mut before = hub;
    let mut at = start;
    loop {
        let to = adj[&at]
            .iter()
            .copied()
            .find(|&n| n != hub && n != before)?;
        if to == start {
            break;
        }
        cycle.push(to);
        before = at;
        at = to;
    }
    (cycle.len() == verts.len() - 1).then_some(cycle)
}
