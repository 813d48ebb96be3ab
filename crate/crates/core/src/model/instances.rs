use std::collections::{BTreeMap, BTreeSet};

use super::graph::{norm_edge, Edge, Graph, VertexId};
use super::predicates::is_tree;
use crate::{Error, Result};

/// A tree whose degree-1 vertices are the (labeled) leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafTree {
    graph: Graph,
}

impl LeafTree {
    pub fn new(graph: Graph) -> Result<Self> {
        if !is_tree(&graph) {
            return Err(Error::Invariant("leaf tree: graph is not a tree".into()));
        }
        Ok(LeafTree { graph })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Degree ≤ 1 vertices; a one-vertex tree is its own leaf.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.graph.vertices().filter(|&v| self.graph.degree(v) <= 1).collect()
    }

    pub fn leaf_set(&self) -> BTreeSet<VertexId> {
        self.leaves().into_iter().collect()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.graph.has_vertex(v) && self.graph.degree(v) <= 1
    }

    pub fn internal_vertices(&self) -> Vec<VertexId> {
        self.graph.vertices().filter(|&v| self.graph.degree(v) >= 2).collect()
    }

    pub fn components_without(&self, v: VertexId) -> Vec<BTreeSet<VertexId>> {
        let mut g = self.graph.clone();
        g.remove_vertex(v);
        g.components()
    }

    /// Leaves of the component of T − (u,v) that contains `side`.
    pub fn side_leaves(&self, u: VertexId, v: VertexId, side: VertexId) -> BTreeSet<VertexId> {
        let mut g = self.graph.clone();
        g.remove_edge(u, v);
        let comp = g
            .components()
            .into_iter()
            .find(|c| c.contains(&side))
            .expect("side not in tree");
        comp.into_iter().filter(|&w| self.is_leaf(w)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtbeInstance {
    pub tree: LeafTree,
    pub pages: Vec<BTreeSet<Edge>>,
}

impl PtbeInstance {
    pub fn new(tree: LeafTree, pages: Vec<Vec<Edge>>) -> Result<Self> {
        let leaves = tree.leaf_set();
        let mut norm_pages = Vec::with_capacity(pages.len());
        for (i, page) in pages.iter().enumerate() {
            let mut set = BTreeSet::new();
            for &(u, v) in page {
                if u == v {
                    return Err(Error::Invariant(format!("page {i}: self-loop on {u}")));
                }
                if !leaves.contains(&u) || !leaves.contains(&v) {
                    return Err(Error::Invariant(format!(
                        "page {i}: edge ({u},{v}) must join two leaves"
                    )));
                }
                if !set.insert(norm_edge(u, v)) {
                    return Err(Error::Invariant(format!(
                        "page {i}: duplicate edge ({u},{v})"
                    )));
                }
            }
            norm_pages.push(set);
        }
        Ok(PtbeInstance { tree, pages: norm_pages })
    }

    pub fn k(&self) -> usize {
        self.pages.len()
    }

    pub fn page_edges(&self, i: usize) -> Vec<Edge> {
        self.pages[i].iter().copied().collect()
    }
}

/// Page edges must form a connected graph touching every leaf of T.
pub fn is_t_biconnected(tree: &LeafTree, page: &BTreeSet<Edge>) -> bool {
    let leaves = tree.leaf_set();
    if leaves.is_empty() {
        return false;
    }
    let g = Graph::from_edges(page.iter().copied());
    leaves.iter().all(|l| g.degree(*l) >= 1) && g.vertex_count() == leaves.len() && g.is_connected()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SunflowerSefeInstance {
    pub shared: Graph,
    pub privates: Vec<BTreeSet<Edge>>,
}

impl SunflowerSefeInstance {
    pub fn new(shared: Graph, privates: Vec<Vec<Edge>>) -> Result<Self> {
        let mut seen: BTreeSet<Edge> = BTreeSet::new();
        let mut norm = Vec::with_capacity(privates.len());
        for (i, es) in privates.iter().enumerate() {
            let mut set = BTreeSet::new();
            for &(u, v) in es {
                if u == v {
                    return Err(Error::Invariant(format!("graph {i}: self-loop on {u}")));
                }
                if !shared.has_vertex(u) || !shared.has_vertex(v) {
                    return Err(Error::Invariant(format!(
                        "graph {i}: edge ({u},{v}) leaves the shared vertex set"
                    )));
                }
                let e = norm_edge(u, v);
                if shared.has_edge(u, v) {
                    return Err(Error::Invariant(format!(
                        "graph {i}: edge ({u},{v}) duplicates a shared edge"
                    )));
                }
                if !set.insert(e) {
                    return Err(Error::Invariant(format!("graph {i}: duplicate edge ({u},{v})")));
                }
                if !seen.insert(e) {
                    return Err(Error::Invariant(format!(
                        "graph {i}: edge ({u},{v}) appears in two private sets"
                    )));
                }
            }
            norm.push(set);
        }
        Ok(SunflowerSefeInstance { shared, privates: norm })
    }

    pub fn k(&self) -> usize {
        self.privates.len()
    }

    pub fn graph(&self, i: usize) -> Graph {
        let mut g = self.shared.clone();
        for &(u, v) in &self.privates[i] {
            g.add_edge(u, v);
        }
        g
    }
}

/// Reroute every private endpoint sitting on an internal vertex of the
/// shared tree to a fresh leaf hung off that vertex.
pub fn leaf_expand(inst: &SunflowerSefeInstance) -> Result<PtbeInstance> {
    if !is_tree(&inst.shared) {
        return Err(Error::Unsupported("leaf_expand: shared graph is not a tree".into()));
    }
    let mut tree_graph = inst.shared.clone();
    let internal: BTreeSet<VertexId> =
        inst.shared.vertices().filter(|&v| inst.shared.degree(v) >= 2).collect();
    let mut next_id = inst.shared.max_vertex_id().map_or(0, |m| m + 1);
    let mut pages: Vec<Vec<Edge>> = Vec::with_capacity(inst.privates.len());
    for page in &inst.privates {
        let mut out = Vec::new();
        for &(u, v) in page {
            let mut reroute = |w: VertexId, tg: &mut Graph| -> VertexId {
                if internal.contains(&w) {
                    let fresh = next_id;
                    next_id += 1;
                    tg.add_edge(w, fresh);
                    fresh
                } else {
                    w
                }
            };
            let nu = reroute(u, &mut tree_graph);
            let nv = reroute(v, &mut tree_graph);
            out.push((nu, nv));
        }
        pages.push(out);
    }
    PtbeInstance::new(LeafTree::new(tree_graph)?, pages)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetweennessInstance {
    pub elements: BTreeSet<VertexId>,
    pub triples: Vec<[VertexId; 3]>,
}

impl BetweennessInstance {
    pub fn new(elements: BTreeSet<VertexId>, triples: Vec<[VertexId; 3]>) -> Result<Self> {
        for t in &triples {
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::Invariant(format!("triple {t:?} has repeated elements")));
            }
            if !t.iter().all(|e| elements.contains(e)) {
                return Err(Error::Invariant(format!("triple {t:?} leaves the element set")));
            }
        }
        Ok(BetweennessInstance { elements, triples })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XorSatInstance {
    pub variables: BTreeSet<VertexId>,
    pub clauses: Vec<[(VertexId, bool); 2]>,
    pub budget: u32,
}

impl XorSatInstance {
    pub fn new(
        variables: BTreeSet<VertexId>,
        clauses: Vec<[(VertexId, bool); 2]>,
        budget: u32,
    ) -> Result<Self> {
        for c in &clauses {
            if c[0].0 == c[1].0 {
                return Err(Error::Invariant(format!(
                    "clause on ({},{}) repeats a variable",
                    c[0].0, c[1].0
                )));
            }
            if !variables.contains(&c[0].0) || !variables.contains(&c[1].0) {
                return Err(Error::Invariant("clause variable not declared".into()));
            }
        }
        Ok(XorSatInstance { variables, clauses, budget })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PstInstance {
    pub graph: Graph,
    pub weights: BTreeMap<Edge, u64>,
    pub terminals: BTreeSet<VertexId>,
    pub budget: u64,
}

impl PstInstance {
    pub fn new(
        graph: Graph,
        weights: BTreeMap<Edge, u64>,
        terminals: BTreeSet<VertexId>,
        budget: u64,
    ) -> Result<Self> {
        for (u, v) in graph.edges() {
            match weights.get(&(u, v)) {
                Some(0) => {
                    return Err(Error::Invariant(format!("edge ({u},{v}) has weight 0")))
                }
                Some(_) => {}
                None => return Err(Error::Invariant(format!("edge ({u},{v}) has no weight"))),
            }
        }
        if weights.len() != graph.edge_count() {
            return Err(Error::Invariant("weights for absent edges".into()));
        }
        for t in &terminals {
            if !graph.has_vertex(*t) {
                return Err(Error::Invariant(format!("terminal {t} not in graph")));
            }
        }
        Ok(PstInstance { graph, weights, terminals, budget })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSefeInstance {
    pub g1: Graph,
    pub g2: Graph,
    pub budget: u32,
}

impl MaxSefeInstance {
    pub fn new(g1: Graph, g2: Graph, budget: u32) -> Result<Self> {
        if g1.vertex_set() != g2.vertex_set() {
            return Err(Error::Invariant("g1 and g2 must share their vertex set".into()));
        }
        Ok(MaxSefeInstance { g1, g2, budget })
    }
}
