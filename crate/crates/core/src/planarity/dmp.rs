//! Planarity testing and embedding construction: biconnected decomposition,
//! then face-by-face insertion of bridge paths (Demoucron-style), keeping an
//! explicit face list so admissible faces stay cheap to recount.

use std::collections::{BTreeMap, BTreeSet};

use super::rotation::{Dart, Rotation};
use crate::model::graph::{norm_edge, Edge, Graph, VertexId};

/// Edge sets of the biconnected components. Iterative lowpoint search.
pub fn blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let mut num: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut low: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut counter = 0usize;
    let mut estack: Vec<Edge> = Vec::new();
    let mut out = Vec::new();

    struct Frame {
        v: VertexId,
        parent: Option<VertexId>,
        nbs: Vec<VertexId>,
        i: usize,
    }

    for root in g.vertices() {
        if num.contains_key(&root) {
            continue;
        }
        num.insert(root, counter);
        low.insert(root, counter);
        counter += 1;
        let mut stack = vec![Frame {
            v: root,
            parent: None,
            nbs: g.neighbors(root).collect(),
            i: 0,
        }];
        while let Some(top) = stack.last_mut() {
            if top.i < top.nbs.len() {
                let v = top.v;
                let w = top.nbs[top.i];
                top.i += 1;
                if Some(w) == top.parent {
                    continue;
                }
                if let Some(&nw) = num.get(&w) {
                    if nw < num[&v] {
                        estack.push(norm_edge(v, w));
                        let l = low[&v].min(nw);
                        low.insert(v, l);
                    }
                } else {
                    estack.push(norm_edge(v, w));
                    num.insert(w, counter);
                    low.insert(w, counter);
                    counter += 1;
                    stack.push(Frame { v: w, parent: Some(v), nbs: g.neighbors(w).collect(), i: 0 });
                }
            } else {
                let child = top.v;
                stack.pop();
                if let Some(parent) = stack.last() {
                    let p = parent.v;
                    let l = low[&p].min(low[&child]);
                    low.insert(p, l);
                    if low[&child] >= num[&p] {
                        let mut block = Vec::new();
                        let entry = norm_edge(p, child);
                        while let Some(e) = estack.pop() {
                            block.push(e);
                            if e == entry {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

struct Face {
    darts: Vec<Dart>,
    verts: BTreeMap<VertexId, usize>,
    frags: BTreeSet<usize>,
}

impl Face {
    fn new(darts: Vec<Dart>) -> Self {
        let verts = darts.iter().enumerate().map(|(i, d)| (d.0, i)).collect();
        Face { darts, verts, frags: BTreeSet::new() }
    }
}

struct Fragment {
    edges: Vec<Edge>,
    atts: BTreeSet<VertexId>,
    admissible: Vec<usize>,
}

struct Embedder {
    rot: BTreeMap<VertexId, Vec<VertexId>>,
    faces: Vec<Option<Face>>,
    vertex_faces: BTreeMap<VertexId, BTreeSet<usize>>,
    frags: Vec<Option<Fragment>>,
    live: BTreeSet<usize>,
    forced: BTreeSet<usize>,
    embedded: BTreeSet<VertexId>,
}

impl Embedder {
    fn add_face(&mut self, darts: Vec<Dart>) -> usize {
        let id = self.faces.len();
        let face = Face::new(darts);
        for &v in face.verts.keys() {
            self.vertex_faces.entry(v).or_default().insert(id);
        }
        self.faces.push(Some(face));
        id
    }

    fn kill_face(&mut self, id: usize) -> Face {
        let face = self.faces[id].take().expect("live face");
        for &v in face.verts.keys() {
            self.vertex_faces.get_mut(&v).unwrap().remove(&id);
        }
        face
    }

    fn recompute(&mut self, fid: usize) {
        let frag = self.frags[fid].as_mut().expect("live fragment");
        for &f in &frag.admissible {
            if let Some(face) = self.faces[f].as_mut() {
                face.frags.remove(&fid);
            }
        }
        let smallest = frag
            .atts
            .iter()
            .min_by_key(|a| self.vertex_faces[a].len())
            .expect("fragment has attachments");
        let candidates: Vec<usize> = self.vertex_faces[smallest].iter().copied().collect();
        frag.admissible = candidates
            .into_iter()
            .filter(|&f| {
                let face = self.faces[f].as_ref().expect("indexed face alive");
                frag.atts.iter().all(|a| face.verts.contains_key(a))
            })
            .collect();
        let count = frag.admissible.len();
        for f in frag.admissible.clone() {
            self.faces[f].as_mut().unwrap().frags.insert(fid);
        }
        if count <= 1 {
            self.forced.insert(fid);
        } else {
            self.forced.remove(&fid);
        }
    }

    fn add_fragment(&mut self, edges: Vec<Edge>) {
        let mut atts = BTreeSet::new();
        for &(u, v) in &edges {
            if self.embedded.contains(&u) {
                atts.insert(u);
            }
            if self.embedded.contains(&v) {
                atts.insert(v);
            }
        }
        let id = self.frags.len();
        self.frags.push(Some(Fragment { edges, atts, admissible: Vec::new() }));
        self.live.insert(id);
        self.recompute(id);
    }

    /// Components of the fragment edge set, where edges touch if they share
    /// an unembedded vertex.
    fn split_fragment(&self, edges: &[Edge]) -> Vec<Vec<Edge>> {
        let mut adj: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if !self.embedded.contains(&x) {
                    adj.entry(x).or_default().push(i);
                }
            }
        }
        let mut seen = vec![false; edges.len()];
        let mut out = Vec::new();
        for start in 0..edges.len() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(i) = queue.pop() {
                comp.push(edges[i]);
                let (u, v) = edges[i];
                for x in [u, v] {
                    if let Some(ids) = adj.get(&x) {
                        for &j in ids {
                            if !seen[j] {
                                seen[j] = true;
                                queue.push(j);
                            }
                        }
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Path between two distinct embedded vertices whose interior is fresh.
    fn alpha_path(&self, frag: &Fragment) -> Vec<VertexId> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &(u, v) in &frag.edges {
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        let start = *frag.atts.iter().next().expect("attachment");
        let mut prev: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = std::collections::VecDeque::from([start]);
        let mut goal = None;
        'outer: while let Some(v) = queue.pop_front() {
            for &w in adj.get(&v).into_iter().flatten() {
                if w == start || prev.contains_key(&w) {
                    continue;
                }
                prev.insert(w, v);
                if self.embedded.contains(&w) {
                    goal = Some(w);
                    break 'outer;
                }
                queue.push_back(w);
            }
        }
        let goal = goal.expect("fragment reaches a second attachment");
        let mut path = vec![goal];
        while *path.last().unwrap() != start {
            path.push(prev[path.last().unwrap()]);
        }
        path.reverse();
        path
    }

    fn embed_path(&mut self, path: &[VertexId], face_id: usize) {
        let face = self.kill_face(face_id);
        let (a, b) = (path[0], *path.last().unwrap());
        let n = face.darts.len();
        let pa = face.verts[&a];
        let pb = face.verts[&b];
        let x = face.darts[(pa + n - 1) % n].0;
        let y = face.darts[(pb + n - 1) % n].0;

        for w in path.windows(2) {
            self.rot.entry(w[0]).or_default();
            self.rot.entry(w[1]).or_default();
        }
        for (i, &v) in path.iter().enumerate() {
            if i == 0 || i + 1 == path.len() {
                continue;
            }
            self.rot.insert(v, vec![path[i - 1], path[i + 1]]);
            self.embedded.insert(v);
        }
        let pos = self.rot[&a].iter().position(|&t| t == x).expect("boundary dart");
        self.rot.get_mut(&a).unwrap().insert(pos + 1, path[1]);
        let pos = self.rot[&b].iter().position(|&t| t == y).expect("boundary dart");
        self.rot.get_mut(&b).unwrap().insert(pos + 1, path[path.len() - 2]);

        // Face from a forward along the old boundary to b, then the path back.
        let mut d1: Vec<Dart> = Vec::new();
        let mut i = pa;
        while i != pb {
            d1.push(face.darts[i]);
            i = (i + 1) % n;
        }
        for w in path.windows(2).rev() {
            d1.push((w[1], w[0]));
        }
        let mut d2 = Vec::new();
        let mut i = pb;
        while i != pa {
            d2.push(face.darts[i]);
            i = (i + 1) % n;
        }
        for w in path.windows(2) {
            d2.push((w[0], w[1]));
        }
        self.add_face(d1);
        self.add_face(d2);

        for fid in face.frags {
            if self.live.contains(&fid) {
                self.recompute(fid);
            }
        }
    }
}

/// Planar rotation of one biconnected component (at least three vertices).
fn embed_block(bg: &Graph) -> Option<Rotation> {
    let n = bg.vertex_count();
    if bg.edge_count() > 3 * n.max(3) - 6 {
        return None;
    }
    // Find a cycle by walking into unvisited neighbors until one repeats.
    let start = bg.vertices().next().unwrap();
    let mut seen_at: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut walk = vec![start];
    seen_at.insert(start, 0);
    let cycle: Vec<VertexId> = loop {
        let v = *walk.last().unwrap();
        let prev = walk.len().checked_sub(2).map(|i| walk[i]);
        let w = bg
            .neighbors(v)
            .find(|&w| Some(w) != prev)
            .expect("biconnected block has min degree 2");
        if let Some(&i) = seen_at.get(&w) {
            break walk[i..].to_vec();
        }
        seen_at.insert(w, walk.len());
        walk.push(w);
    };

    let mut emb = Embedder {
        rot: BTreeMap::new(),
        faces: Vec::new(),
        vertex_faces: BTreeMap::new(),
        frags: Vec::new(),
        live: BTreeSet::new(),
        forced: BTreeSet::new(),
        embedded: cycle.iter().copied().collect(),
    };
    let k = cycle.len();
    for i in 0..k {
        emb.rot.insert(cycle[i], vec![cycle[(i + k - 1) % k], cycle[(i + 1) % k]]);
    }
    emb.add_face((0..k).map(|i| (cycle[i], cycle[(i + 1) % k])).collect());
    emb.add_face((0..k).map(|i| (cycle[(k - i) % k], cycle[(k - i - 1) % k])).collect());

    let cycle_edges: BTreeSet<Edge> =
        (0..k).map(|i| norm_edge(cycle[i], cycle[(i + 1) % k])).collect();
    let rest: Vec<Edge> = bg.edges().filter(|e| !cycle_edges.contains(e)).collect();
    for part in emb.split_fragment(&rest) {
        emb.add_fragment(part);
    }

    while let Some(&fid) = emb.forced.iter().next().or_else(|| emb.live.iter().next()) {
        emb.forced.remove(&fid);
        emb.live.remove(&fid);
        let frag = emb.frags[fid].take().expect("live fragment");
        if frag.admissible.is_empty() {
            return None;
        }
        let face = frag.admissible[0];
        let path = emb.alpha_path(&frag);
        emb.embed_path(&path, face);
        let path_edges: BTreeSet<Edge> =
            path.windows(2).map(|w| norm_edge(w[0], w[1])).collect();
        let rest: Vec<Edge> =
            frag.edges.iter().copied().filter(|e| !path_edges.contains(e)).collect();
        for part in emb.split_fragment(&rest) {
            emb.add_fragment(part);
        }
    }
    Some(Rotation::from_map(emb.rot))
}

/// A planar rotation system, or None when the graph is nonplanar. Blocks are
/// embedded independently and concatenated at cut vertices.
pub fn planar_rotation(g: &Graph) -> Option<Rotation> {
    let mut order: BTreeMap<VertexId, Vec<VertexId>> =
        g.vertices().map(|v| (v, Vec::new())).collect();
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            order.get_mut(&u).unwrap().push(v);
            order.get_mut(&v).unwrap().push(u);
            continue;
        }
        let bg = Graph::from_edges(block);
        let brot = embed_block(&bg)?;
        for v in bg.vertices() {
            order.get_mut(&v).unwrap().extend_from_slice(brot.at(v));
        }
    }
    let rot = Rotation::from_map(order);
    debug_assert!(rot.is_planar_for(g));
    Some(rot)
}

pub fn is_planar(g: &Graph) -> bool {
    planar_rotation(g).is_some()
}
