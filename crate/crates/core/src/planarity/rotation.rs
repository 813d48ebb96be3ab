//! Rotation systems: cyclic neighbor orders per vertex, face tracing, genus
//! checks, and exhaustive rotation enumeration for the brute-force oracles.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use crate::model::graph::{Graph, VertexId};
use crate::{Error, Result};

pub type Dart = (VertexId, VertexId);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    order: BTreeMap<VertexId, Vec<VertexId>>,
}

impl Rotation {
    pub fn from_map(order: BTreeMap<VertexId, Vec<VertexId>>) -> Self {
        Rotation { order }
    }

    /// Neighbors in ascending order; an arbitrary but deterministic system.
    pub fn sorted(g: &Graph) -> Self {
        let order = g.vertices().map(|v| (v, g.neighbors(v).collect())).collect();
        Rotation { order }
    }

    pub fn matches(&self, g: &Graph) -> bool {
        g.vertex_count() == self.order.len()
            && g.vertices().all(|v| match self.order.get(&v) {
                Some(list) => {
                    let set: BTreeSet<VertexId> = list.iter().copied().collect();
                    set.len() == list.len() && set == g.neighbors(v).collect()
                }
                None => false,
            })
    }

    pub fn at(&self, v: VertexId) -> &[VertexId] {
        &self.order[&v]
    }

    pub fn set(&mut self, v: VertexId, list: Vec<VertexId>) {
        self.order.insert(v, list);
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.order.keys().copied()
    }

    pub fn insert_after(&mut self, v: VertexId, anchor: VertexId, item: VertexId) {
        let list = self.order.get_mut(&v).expect("vertex in rotation");
        let pos = list.iter().position(|&x| x == anchor).expect("anchor present");
        list.insert(pos + 1, item);
    }

    pub fn remove_neighbor(&mut self, v: VertexId, w: VertexId) {
        let list = self.order.get_mut(&v).expect("vertex in rotation");
        let pos = list.iter().position(|&x| x == w).expect("neighbor present");
        list.remove(pos);
    }

    pub fn successor(&self, u: VertexId, v: VertexId) -> VertexId {
        let list = self.at(v);
        let pos = list.iter().position(|&x| x == u).expect("dart endpoint in rotation");
        list[(pos + 1) % list.len()]
    }

    /// Next dart of the face containing (u, v).
    pub fn next_dart(&self, d: Dart) -> Dart {
        (d.1, self.successor(d.0, d.1))
    }

    pub fn trace_faces(&self) -> Vec<Vec<Dart>> {
        let mut seen: BTreeSet<Dart> = BTreeSet::new();
        let mut faces = Vec::new();
        for (&v, list) in &self.order {
            for &w in list {
                if seen.contains(&(v, w)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = (v, w);
                loop {
                    face.push(d);
                    seen.insert(d);
                    d = self.next_dart(d);
                    if d == (v, w) {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler check per connected component: V - E + F = 2.
    pub fn is_planar_for(&self, g: &Graph) -> bool {
        debug_assert!(self.matches(g));
        let comps = g.components();
        let mut comp_of: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of.insert(v, i);
            }
        }
        let mut face_count = vec![0i64; comps.len()];
        for face in self.trace_faces() {
            face_count[comp_of[&face[0].0]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            let verts = c.len() as i64;
            let edges = c
                .iter()
                .map(|&v| self.order[&v].len() as i64)
                .sum::<i64>()
                / 2;
            if edges > 0 && verts - edges + face_count[i] != 2 {
                return false;
            }
        }
        true
    }

    pub fn induced(&self, sub: &Graph) -> Rotation {
        let order = sub
            .vertices()
            .map(|v| {
                let keep: BTreeSet<VertexId> = sub.neighbors(v).collect();
                let list = self.order[&v]
                    .iter()
                    .copied()
                    .filter(|w| keep.contains(w))
                    .collect();
                (v, list)
            })
            .collect();
        Rotation { order }
    }

    pub fn reflected(&self) -> Rotation {
        let order = self
            .order
            .iter()
            .map(|(&v, list)| (v, list.iter().rev().copied().collect()))
            .collect();
        Rotation { order }
    }
}

fn cyclic_eq(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let Some(start) = b.iter().position(|&x| x == a[0]) else {
        return false;
    };
    (0..a.len()).all(|i| a[i] == b[(start + i) % b.len()])
}

/// Same combinatorial embedding up to reflecting whole components.
pub fn same_embedding(a: &Rotation, b: &Rotation, g: &Graph) -> bool {
    let br = b.reflected();
    g.components().iter().all(|c| {
        let straight = c.iter().all(|&v| cyclic_eq(a.at(v), b.at(v)));
        straight || c.iter().all(|&v| cyclic_eq(a.at(v), br.at(v)))
    })
}

/// Number of distinct rotation systems: the product of (deg - 1)! over all
/// vertices, fixing each first neighbor to quotient out cyclic shifts.
pub fn rotation_count(g: &Graph) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for v in g.vertices() {
        let d = g.degree(v);
        for i in 2..d {
            acc *= BigUint::from(i as u64);
        }
        let _ = d;
    }
    acc
}

/// Call `f` on every rotation system of `g`; `f` returns false to stop early.
/// Ok(true) if the enumeration completed, Ok(false) if stopped.
pub fn for_each_rotation<F: FnMut(&Rotation) -> bool>(
    g: &Graph,
    limit: u64,
    mut f: F,
) -> Result<bool> {
    if rotation_count(g) > BigUint::from(limit) {
        return Err(Error::Budget(format!(
            "{} rotation systems exceed limit {limit}",
            rotation_count(g)
        )));
    }
    let verts: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut perms: Vec<Vec<Vec<VertexId>>> = Vec::new();
    for &v in &verts {
        let nbs: Vec<VertexId> = g.neighbors(v).collect();
        let mut lists = vec![vec![nbs[0]]];
        for &w in &nbs[1..] {
            let mut next = Vec::new();
            for l in lists {
                for pos in 1..=l.len() {
                    let mut m = l.clone();
                    m.insert(pos, w);
                    next.push(m);
                }
            }
            lists = next;
        }
        perms.push(lists);
    }
    let mut idx = vec![0usize; verts.len()];
    let mut rot = Rotation::sorted(g);
    loop {
        for (slot, &v) in verts.iter().enumerate() {
            rot.set(v, perms[slot][idx[slot]].clone());
        }
        if !f(&rot) {
            return Ok(false);
        }
        let mut carry = 0;
        loop {
            if carry == verts.len() {
                return Ok(true);
            }
            idx[carry] += 1;
            if idx[carry] < perms[carry].len() {
                break;
            }
            idx[carry] = 0;
            carry += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_rotation_traces_six_faces() {
        let g = Graph::from_edges([
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ]);
        let mut rot = Rotation::sorted(&g);
        // Planar rotation of the cube: outer square, inner square, spokes.
        rot.set(0, vec![1, 4, 3]);
        rot.set(1, vec![2, 5, 0]);
        rot.set(2, vec![3, 6, 1]);
        rot.set(3, vec![0, 7, 2]);
        rot.set(4, vec![0, 5, 7]);
        rot.set(5, vec![1, 6, 4]);
        rot.set(6, vec![2, 7, 5]);
        rot.set(7, vec![3, 4, 6]);
        assert_eq!(rot.trace_faces().len(), 6);
        assert!(rot.is_planar_for(&g));
    }

    #[test]
    fn k5_has_no_planar_rotation() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(edges);
        let mut found = false;
        for_each_rotation(&g, 1 << 20, |r| {
            if r.is_planar_for(&g) {
                found = true;
                return false;
            }
            true
        })
        .unwrap();
        assert!(!found);
    }

    #[test]
    fn triangle_rotations_all_planar() {
        let g = Graph::from_edges([(0, 1), (1, 2), (0, 2)]);
        let mut count = 0;
        for_each_rotation(&g, 100, |r| {
            assert!(r.is_planar_for(&g));
            count += 1;
            true
        })
        .unwrap();
        assert_eq!(count, 1);
    }

    #[test]
    fn reflection_is_the_same_embedding() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (1, 3)]);
        let rot = Rotation::sorted(&g);
        assert!(same_embedding(&rot, &rot.reflected(), &g));
    }

    #[test]
    fn distinct_wheel_rotations_differ() {
        let g = Graph::from_edges([
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
        ]);
        let mut a = Rotation::sorted(&g);
        a.set(0, vec![1, 2, 3, 4]);
        let mut b = a.clone();
        b.set(0, vec![1, 3, 2, 4]);
        assert!(!same_embedding(&a, &b, &g));
    }

    #[test]
    fn induced_keeps_cyclic_order() {
        let g = Graph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2)]);
        let mut rot = Rotation::sorted(&g);
        rot.set(0, vec![2, 1, 3]);
        let sub = Graph::from_edges([(0, 1), (0, 3)]);
        let ind = rot.induced(&sub);
        assert_eq!(ind.at(0), &[1, 3]);
    }
}
