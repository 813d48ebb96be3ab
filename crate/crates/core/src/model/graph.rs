use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub type VertexId = u32;
pub type Edge = (VertexId, VertexId);

pub fn norm_edge(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph. No self-loops, no parallel edges; isolated
/// vertices are first-class (they matter for intersection graphs).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn with_vertices<I: IntoIterator<Item = VertexId>>(vs: I) -> Self {
        let mut g = Graph::new();
        for v in vs {
            g.add_vertex(v);
        }
        g
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert_ne!(u, v, "self-loop on {u}");
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        if let Some(s) = self.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        if let Some(ns) = self.adj.remove(&v) {
            for n in ns {
                self.adj.get_mut(&n).unwrap().remove(&v);
            }
        }
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).map_or(false, |s| s.contains(&v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.adj.keys().copied().collect()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    /// Edges as (min, max) pairs, ascending.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.adj.keys().next_back().copied()
    }

    pub fn union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u, v);
        }
        g
    }

    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if self.has_vertex(v) {
                g.add_vertex(v);
            }
        }
        for (u, v) in self.edges() {
            if keep.contains(&u) && keep.contains(&v) {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn without_vertices(&self, drop: &BTreeSet<VertexId>) -> Graph {
        let keep: BTreeSet<VertexId> = self.vertices().filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for n in self.neighbors(v) {
                    if seen.insert(n) {
                        queue.push_back(n);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Common edges over the union vertex set; isolated vertices retained.
pub fn intersection_graph(g1: &Graph, g2: &Graph) -> Graph {
    let mut g = Graph::new();
    for v in g1.vertices().chain(g2.vertices()) {
        g.add_vertex(v);
    }
    for (u, v) in g1.edges() {
        if g2.has_edge(u, v) {
            g.add_edge(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_keeps_isolated_vertices() {
        let tri = Graph::from_edges([(0, 1), (1, 2), (0, 2)]);
        let one = Graph::from_edges([(0, 1)]);
        let got = intersection_graph(&tri, &one);
        assert_eq!(got.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(got.vertex_count(), 3);
        assert_eq!(got.degree(2), 0);
    }

    #[test]
    fn intersection_of_graph_with_itself() {
        let g = Graph::from_edges([(0, 1), (1, 2)]);
        assert_eq!(intersection_graph(&g, &g), g);
    }

    #[test]
    fn intersection_of_disjoint_edge_sets_is_edgeless() {
        let g1 = Graph::from_edges([(0, 1)]);
        let g2 = Graph::from_edges([(1, 2)]);
        let got = intersection_graph(&g1, &g2);
        assert_eq!(got.edge_count(), 0);
        assert_eq!(got.vertex_count(), 3);
    }
}
