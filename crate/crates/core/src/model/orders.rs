use std::collections::BTreeMap;

use super::graph::{Edge, VertexId};
use super::instances::LeafTree;

/// A linear (spine) order of vertex ids. Orders are never circular.
pub type LinearOrder = Vec<VertexId>;

/// Two edges (a,b), (c,d) alternate in a linear order when their spans
/// strictly interleave: a < c < b < d in spine positions. Shared endpoints
/// never alternate. Checked with the usual parenthesis stack, so big pages
/// stay cheap.
pub fn page_alternation_free(order: &LinearOrder, page: &[Edge]) -> bool {
    let pos: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    assert_eq!(pos.len(), order.len(), "order has repeated vertices");
    let mut spans: Vec<(usize, usize)> = page
        .iter()
        .map(|&(u, v)| {
            let pu = *pos.get(&u).unwrap_or_else(|| panic!("endpoint {u} not in order"));
            let pv = *pos.get(&v).unwrap_or_else(|| panic!("endpoint {v} not in order"));
            (pu.min(pv), pu.max(pv))
        })
        .collect();
    // Open longer spans first so equal-open spans nest instead of crossing.
    spans.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for p in 0..order.len() {
        while stack.last() == Some(&p) {
            stack.pop();
        }
        while next < spans.len() && spans[next].0 == p {
            stack.push(spans[next].1);
            next += 1;
        }
    }
    // Anything left on the stack was buried under a later-closing span.
    stack.is_empty()
}

/// σ is represented by T when, for every internal vertex v, the leaves of
/// each component of T − v occupy a contiguous block of σ.
pub fn is_represented_by(order: &LinearOrder, tree: &LeafTree) -> bool {
    let leaves = tree.leaves();
    if order.len() != leaves.len() {
        return false;
    }
    let mut pos: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, &v) in order.iter().enumerate() {
        if pos.insert(v, i).is_some() {
            return false;
        }
    }
    if !leaves.iter().all(|l| pos.contains_key(l)) {
        return false;
    }
    for v in tree.internal_vertices() {
        for comp in tree.components_without(v) {
            let mut lo = usize::MAX;
            let mut hi = 0;
            let mut count = 0;
            for u in comp {
                if let Some(&p) = pos.get(&u) {
                    lo = lo.min(p);
                    hi = hi.max(p);
                    count += 1;
                }
            }
            if count > 0 && hi - lo + 1 != count {
                return false;
            }
        }
    }
    true
}
