use std::collections::BTreeSet;

use super::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub connected: bool,
    pub biconnected: bool,
    pub triconnected: bool,
    pub series_parallel: bool,
    pub is_tree: bool,
    pub is_caterpillar: bool,
    pub is_pseudo_tree: bool,
}

pub fn structural_predicates(g: &Graph) -> StructuralPredicates {
    let connected = g.is_connected();
    StructuralPredicates {
        connected,
        biconnected: is_biconnected(g),
        triconnected: is_triconnected(g),
        series_parallel: is_series_parallel(g),
        is_tree: is_tree(g),
        is_caterpillar: is_caterpillar(g),
        is_pseudo_tree: connected && g.edge_count() <= g.vertex_count(),
    }
}

pub fn is_tree(g: &Graph) -> bool {
    g.vertex_count() >= 1 && g.is_connected() && g.edge_count() == g.vertex_count() - 1
}

/// Connected, at least 3 vertices, and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    if g.vertex_count() < 3 || !g.is_connected() {
        return false;
    }
    g.vertices().all(|v| {
        let mut h = g.clone();
        h.remove_vertex(v);
        h.is_connected()
    })
}

/// Connected, at least 4 vertices, and no separating pair.
pub fn is_triconnected(g: &Graph) -> bool {
    if g.vertex_count() < 4 || !g.is_connected() {
        return false;
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let mut h = g.clone();
            h.remove_vertex(u);
            h.remove_vertex(v);
            if !h.is_connected() {
                return false;
            }
        }
    }
    true
}

/// No K4 minor, i.e. treewidth ≤ 2: the graph must reduce to nothing by
/// repeatedly eliminating vertices of degree ≤ 2 (joining the two neighbors).
pub fn is_series_parallel(g: &Graph) -> bool {
    let mut h = g.clone();
    loop {
        if h.vertex_count() == 0 {
            return true;
        }
        let low = h.vertices().find(|&v| h.degree(v) <= 2);
        match low {
            None => return false,
            Some(v) => {
                let ns: Vec<VertexId> = h.neighbors(v).collect();
                h.remove_vertex(v);
                if let [a, b] = ns[..] {
                    if !h.has_edge(a, b) {
                        h.add_edge(a, b);
                    }
                }
            }
        }
    }
}

/// Tree whose non-leaf vertices induce a path (possibly empty).
pub fn is_caterpillar(g: &Graph) -> bool {
    if !is_tree(g) {
        return false;
    }
    let spine: BTreeSet<VertexId> = g.vertices().filter(|&v| g.degree(v) >= 2).collect();
    if spine.len() <= 1 {
        return true;
    }
    let h = g.induced(&spine);
    if !h.is_connected() {
        return false;
    }
    h.vertices().all(|v| h.degree(v) <= 2) && h.edge_count() == h.vertex_count() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn k4_is_triconnected_and_not_series_parallel() {
        let p = structural_predicates(&k4());
        assert!(p.connected && p.biconnected && p.triconnected);
        assert!(!p.series_parallel);
        assert!(!p.is_tree && !p.is_caterpillar && !p.is_pseudo_tree);
    }

    #[test]
    fn path_of_four_is_a_caterpillar() {
        let p4 = Graph::from_edges([(0, 1), (1, 2), (2, 3)]);
        let p = structural_predicates(&p4);
        assert!(p.is_tree && p.is_caterpillar && p.series_parallel);
        assert!(!p.biconnected);
    }

    #[test]
    fn triangle_with_pendant_is_a_pseudo_tree() {
        let g = Graph::from_edges([(0, 1), (1, 2), (0, 2), (2, 3)]);
        let p = structural_predicates(&g);
        assert!(p.is_pseudo_tree && !p.is_tree && !p.biconnected);
        assert!(p.series_parallel);
    }

    #[test]
    fn cycle_is_biconnected_not_triconnected() {
        let c4 = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 0)]);
        let p = structural_predicates(&c4);
        assert!(p.biconnected && !p.triconnected && p.series_parallel);
    }

    #[test]
    fn spider_is_a_tree_but_not_a_caterpillar() {
        // Three legs of length 2 from a hub: removing leaves leaves a star.
        let g = Graph::from_edges([(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let p = structural_predicates(&g);
        assert!(p.is_tree && !p.is_caterpillar);
    }
}
