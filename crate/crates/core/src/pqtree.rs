//! PQ-trees over leaf ids: compact representations of sets of linear orders
//! closed under the consecutive-ones reductions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use crate::model::graph::{Graph, VertexId};
use crate::model::instances::LeafTree;
use crate::{Error, Result};

/// P children permute freely (arity >= 2 after canonicalization).
/// Q children keep their sequence up to reversal (arity >= 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Leaf(VertexId),
    P(Vec<Node>),
    Q(Vec<Node>),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    Empty,
    Full,
    Mixed,
}

impl Node {
    fn collect_leaves(&self, out: &mut Vec<VertexId>) {
        match self {
            Node::Leaf(x) => out.push(*x),
            Node::P(cs) | Node::Q(cs) => cs.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn min_leaf(&self) -> VertexId {
        match self {
            Node::Leaf(x) => *x,
            Node::P(cs) | Node::Q(cs) => cs.iter().map(Node::min_leaf).min().unwrap(),
        }
    }

    /// (leaves in s, total leaves) under this node.
    fn count(&self, s: &BTreeSet<VertexId>) -> (usize, usize) {
        match self {
            Node::Leaf(x) => (usize::from(s.contains(x)), 1),
            Node::P(cs) | Node::Q(cs) => cs.iter().fold((0, 0), |(a, b), c| {
                let (x, y) = c.count(s);
                (a + x, b + y)
            }),
        }
    }

    fn classify(&self, s: &BTreeSet<VertexId>) -> Class {
        let (ins, tot) = self.count(s);
        if ins == 0 {
            Class::Empty
        } else if ins == tot {
            Class::Full
        } else {
            Class::Mixed
        }
    }

    /// Splice single-child nodes, turn 2-child Q into P, sort P children and
    /// orient Q sequences so structural equality compares order sets.
    fn canonical(self) -> Node {
        match self {
            Node::Leaf(x) => Node::Leaf(x),
            Node::P(cs) => {
                let mut cs: Vec<Node> = cs.into_iter().map(Node::canonical).collect();
                if cs.len() == 1 {
                    return cs.pop().unwrap();
                }
                cs.sort_by_key(Node::min_leaf);
                Node::P(cs)
            }
            Node::Q(cs) => {
                let mut cs: Vec<Node> = cs.into_iter().map(Node::canonical).collect();
                if cs.len() == 1 {
                    return cs.pop().unwrap();
                }
                if cs.len() == 2 {
                    cs.sort_by_key(Node::min_leaf);
                    return Node::P(cs);
                }
                let keys: Vec<VertexId> = cs.iter().map(Node::min_leaf).collect();
                let rev: Vec<VertexId> = keys.iter().rev().copied().collect();
                if rev < keys {
                    cs.reverse();
                }
                Node::Q(cs)
            }
        }
    }

    fn to_text(&self) -> String {
        match self {
            Node::Leaf(x) => x.to_string(),
            Node::P(cs) => {
                let inner: Vec<String> = cs.iter().map(Node::to_text).collect();
                format!("P({})", inner.join(", "))
            }
            Node::Q(cs) => {
                let inner: Vec<String> = cs.iter().map(Node::to_text).collect();
                format!("Q[{}]", inner.join(", "))
            }
        }
    }
}

fn group(mut nodes: Vec<Node>) -> Option<Node> {
    match nodes.len() {
        0 => None,
        1 => nodes.pop(),
        _ => Some(Node::P(nodes)),
    }
}

/// Reduce with pertinent-root privileges: s only needs to end up contiguous,
/// not pushed to one end. Delegates downward while exactly one child is mixed.
fn reduce_root(node: Node, s: &BTreeSet<VertexId>) -> Option<Node> {
    let (cs, is_p) = match node {
        Node::Leaf(x) => return Some(Node::Leaf(x)),
        Node::P(cs) => (cs, true),
        Node::Q(cs) => (cs, false),
    };
    let classes: Vec<Class> = cs.iter().map(|c| c.classify(s)).collect();
    let nonempty: Vec<usize> =
        (0..cs.len()).filter(|&i| classes[i] != Class::Empty).collect();

    if nonempty.len() == 1 && classes[nonempty[0]] == Class::Mixed {
        let at = nonempty[0];
        let mut out = Vec::with_capacity(cs.len());
        for (i, c) in cs.into_iter().enumerate() {
            out.push(if i == at { reduce_root(c, s)? } else { c });
        }
        return Some(if is_p { Node::P(out) } else { Node::Q(out) });
    }
    if is_p {
        reduce_root_p(cs, &classes, s)
    } else {
        reduce_root_q(cs, &classes, &nonempty, s)
    }
}

fn reduce_root_p(cs: Vec<Node>, classes: &[Class], s: &BTreeSet<VertexId>) -> Option<Node> {
    let mut empties = Vec::new();
    let mut fulls = Vec::new();
    let mut chains = Vec::new();
    for (c, cl) in cs.into_iter().zip(classes) {
        match cl {
            Class::Empty => empties.push(c),
            Class::Full => fulls.push(c),
            Class::Mixed => chains.push(chain_of(c, s)?),
        }
    }
    if chains.len() > 2 {
        return None;
    }
    let block = if chains.is_empty() {
        if empties.is_empty() || fulls.is_empty() {
            empties.extend(fulls);
            return Some(Node::P(empties));
        }
        group(fulls).unwrap()
    } else {
        let mut qkids = chains.remove(0);
        if let Some(f) = group(fulls) {
            qkids.push(f);
        }
        if let Some(second) = chains.pop() {
            qkids.extend(second.into_iter().rev());
        }
        Node::Q(qkids)
    };
    empties.push(block);
    Some(Node::P(empties))
}

fn reduce_root_q(
    cs: Vec<Node>,
    classes: &[Class],
    nonempty: &[usize],
    s: &BTreeSet<VertexId>,
) -> Option<Node> {
    let (lo, hi) = match (nonempty.first(), nonempty.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Some(Node::Q(cs)),
    };
    if nonempty.len() != hi - lo + 1 {
        return None;
    }
    if (lo + 1..hi).any(|i| classes[i] == Class::Mixed) {
        return None;
    }
    let mut out = Vec::with_capacity(cs.len());
    for (i, c) in cs.into_iter().enumerate() {
        if i == lo && classes[i] == Class::Mixed {
            out.extend(chain_of(c, s)?);
        } else if i == hi && classes[i] == Class::Mixed {
            out.extend(chain_of(c, s)?.into_iter().rev());
        } else {
            out.push(c);
        }
    }
    Some(Node::Q(out))
}

/// Rearrange a mixed node so its frontier reads empty leaves then full
/// leaves; the result is the child sequence of that arrangement as a Q chain.
fn chain_of(node: Node, s: &BTreeSet<VertexId>) -> Option<Vec<Node>> {
    match node {
        Node::Leaf(_) => unreachable!("a leaf is never mixed"),
        Node::P(cs) => {
            let classes: Vec<Class> = cs.iter().map(|c| c.classify(s)).collect();
            let mut empties = Vec::new();
            let mut fulls = Vec::new();
            let mut sub: Option<Vec<Node>> = None;
            for (c, cl) in cs.into_iter().zip(classes) {
                match cl {
                    Class::Empty => empties.push(c),
                    Class::Full => fulls.push(c),
                    Class::Mixed => {
                        if sub.is_some() {
                            return None;
                        }
                        sub = Some(chain_of(c, s)?);
                    }
                }
            }
            let mut chain = Vec::new();
            chain.extend(group(empties));
            chain.extend(sub.into_iter().flatten());
            chain.extend(group(fulls));
            Some(chain)
        }
        Node::Q(cs) => {
            let classes: Vec<Class> = cs.iter().map(|c| c.classify(s)).collect();
            let ok = |cls: &[Class]| -> bool {
                let nonempty: Vec<usize> =
                    (0..cls.len()).filter(|&i| cls[i] != Class::Empty).collect();
                let (Some(&lo), Some(&hi)) = (nonempty.first(), nonempty.last()) else {
                    return false;
                };
                hi == cls.len() - 1
                    && nonempty.len() == hi - lo + 1
                    && (lo + 1..=hi).all(|i| cls[i] == Class::Full)
            };
            let (cs, classes) = if ok(&classes) {
                (cs, classes)
            } else {
                let rev_classes: Vec<Class> = classes.iter().rev().copied().collect();
                if !ok(&rev_classes) {
                    return None;
                }
                (cs.into_iter().rev().collect(), rev_classes)
            };
            let mut chain = Vec::new();
            for (c, cl) in cs.into_iter().zip(classes) {
                if cl == Class::Mixed {
                    chain.extend(chain_of(c, s)?);
                } else {
                    chain.push(c);
                }
            }
            Some(chain)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqTree {
    root: Node,
}

impl PqTree {
    pub fn new(root: Node) -> Self {
        PqTree { root: root.canonical() }
    }

    pub fn universal<I: IntoIterator<Item = VertexId>>(leaves: I) -> Self {
        let ls: Vec<Node> = leaves.into_iter().map(Node::Leaf).collect();
        assert!(!ls.is_empty(), "a PQ-tree needs at least one leaf");
        PqTree::new(Node::P(ls))
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Leaves left to right in the current arrangement.
    pub fn frontier(&self) -> Vec<VertexId> {
        let mut out = Vec::new();
        self.root.collect_leaves(&mut out);
        out
    }

    pub fn leaf_set(&self) -> BTreeSet<VertexId> {
        self.frontier().into_iter().collect()
    }

    /// Number of distinct admissible linear orders.
    pub fn frontier_count(&self) -> BigUint {
        fn rec(n: &Node) -> BigUint {
            match n {
                Node::Leaf(_) => BigUint::from(1u32),
                Node::P(cs) => {
                    let mut acc = (1..=cs.len() as u64)
                        .map(BigUint::from)
                        .product::<BigUint>();
                    for c in cs {
                        acc *= rec(c);
                    }
                    acc
                }
                Node::Q(cs) => {
                    let mut acc = BigUint::from(2u32);
                    for c in cs {
                        acc *= rec(c);
                    }
                    acc
                }
            }
        }
        rec(&self.root)
    }

    /// All admissible orders; refuses to build more than `limit` of them.
    pub fn frontier_enumerate(&self, limit: usize) -> Result<Vec<Vec<VertexId>>> {
        if self.frontier_count() > BigUint::from(limit) {
            return Err(Error::Budget(format!(
                "frontier has {} orders, limit {limit}",
                self.frontier_count()
            )));
        }
        fn concat_product(parts: &[Vec<Vec<VertexId>>]) -> Vec<Vec<VertexId>> {
            let mut acc: Vec<Vec<VertexId>> = vec![Vec::new()];
            for part in parts {
                let mut next = Vec::with_capacity(acc.len() * part.len());
                for a in &acc {
                    for p in part {
                        let mut v = a.clone();
                        v.extend_from_slice(p);
                        next.push(v);
                    }
                }
                acc = next;
            }
            acc
        }
        fn perms(n: usize) -> Vec<Vec<usize>> {
            let mut acc = vec![Vec::new()];
            for item in 0..n {
                let mut next = Vec::new();
                for p in acc {
                    for pos in 0..=p.len() {
                        let mut q = p.clone();
                        q.insert(pos, item);
                        next.push(q);
                    }
                }
                acc = next;
            }
            acc
        }
        fn rec(n: &Node) -> Vec<Vec<VertexId>> {
            match n {
                Node::Leaf(x) => vec![vec![*x]],
                Node::P(cs) => {
                    let parts: Vec<_> = cs.iter().map(rec).collect();
                    let mut out = Vec::new();
                    for perm in perms(cs.len()) {
                        let arranged: Vec<_> =
                            perm.iter().map(|&i| parts[i].clone()).collect();
                        out.extend(concat_product(&arranged));
                    }
                    out
                }
                Node::Q(cs) => {
                    let parts: Vec<_> = cs.iter().map(rec).collect();
                    let mut out = concat_product(&parts);
                    let rev: Vec<_> = parts.into_iter().rev().collect();
                    out.extend(concat_product(&rev));
                    out
                }
            }
        }
        Ok(rec(&self.root))
    }

    /// Restrict to arrangements where `s` is consecutive. None means no
    /// admissible order remains.
    pub fn reduce(self, s: &BTreeSet<VertexId>) -> Option<PqTree> {
        let leaves = self.leaf_set();
        assert!(s.is_subset(&leaves), "reduction set must consist of leaves");
        if s.len() <= 1 || s.len() == leaves.len() {
            return Some(self);
        }
        reduce_root(self.root, s).map(PqTree::new)
    }

    /// Orders admissible in both trees. Exact: a tree's order set is cut out
    /// by consecutiveness of every internal leaf set plus every union of two
    /// adjacent Q children, so reducing by those sets reproduces it.
    pub fn intersect(self, other: &PqTree) -> Option<PqTree> {
        assert_eq!(self.leaf_set(), other.leaf_set(), "trees must share leaves");
        let n = self.leaf_set().len();
        let mut sets: BTreeSet<BTreeSet<VertexId>> = BTreeSet::new();
        fn walk(n: &Node, sets: &mut BTreeSet<BTreeSet<VertexId>>, total: usize) {
            let own: BTreeSet<VertexId> = {
                let mut v = Vec::new();
                n.collect_leaves(&mut v);
                v.into_iter().collect()
            };
            if own.len() > 1 && own.len() < total {
                sets.insert(own);
            }
            match n {
                Node::Leaf(_) => {}
                Node::P(cs) => cs.iter().for_each(|c| walk(c, sets, total)),
                Node::Q(cs) => {
                    for pair in cs.windows(2) {
                        let mut v = Vec::new();
                        pair[0].collect_leaves(&mut v);
                        pair[1].collect_leaves(&mut v);
                        let u: BTreeSet<VertexId> = v.into_iter().collect();
                        if u.len() < total {
                            sets.insert(u);
                        }
                    }
                    cs.iter().for_each(|c| walk(c, sets, total));
                }
            }
        }
        walk(&other.root, &mut sets, n);
        let mut t = self;
        for s in &sets {
            t = t.reduce(s)?;
        }
        Some(t)
    }

    pub fn to_text(&self) -> String {
        self.root.to_text()
    }

    /// Tree whose frontier is exactly the orders represented by `t` in the
    /// strong sense: every component of T - v is consecutive, for every
    /// internal v. Non-empty only for caterpillars: a Q over the per-spine
    /// leaf groups (each group a free P).
    pub fn from_leaf_tree(t: &LeafTree) -> Option<PqTree> {
        let g = t.graph();
        let leaves = t.leaves();
        if leaves.len() == 1 {
            return Some(PqTree::new(Node::Leaf(leaves[0])));
        }
        let spine: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) >= 2).collect();
        if spine.len() <= 1 {
            return Some(PqTree::universal(leaves));
        }
        let spine_set: BTreeSet<VertexId> = spine.iter().copied().collect();
        let induced = g.induced(&spine_set);
        if !induced.is_connected()
            || induced.edge_count() != spine.len() - 1
            || spine.iter().any(|&v| induced.degree(v) > 2)
        {
            return None;
        }
        let start = *spine.iter().find(|&&v| induced.degree(v) <= 1).unwrap();
        let mut path = vec![start];
        let mut prev = None;
        while let Some(next) = induced
            .neighbors(*path.last().unwrap())
            .find(|&w| Some(w) != prev)
        {
            prev = Some(*path.last().unwrap());
            path.push(next);
        }
        debug_assert_eq!(path.len(), spine.len());
        let mut children = Vec::new();
        for u in path {
            let grp: Vec<Node> = g
                .neighbors(u)
                .filter(|&w| g.degree(w) == 1)
                .map(Node::Leaf)
                .collect();
            children.extend(group(grp));
        }
        Some(PqTree::new(Node::Q(children)))
    }

    /// Builds a graph whose planar embeddings realize exactly the orders of
    /// this tree: every Q node becomes a wheel whose rim freezes the child
    /// order up to reflection, every P node becomes a cut vertex around which
    /// the children swing freely, and every tree leaf becomes a degree-1
    /// vertex (with its leaf id) hanging off its gadget. Each wheel's rim has
    /// one extra slot used to attach the gadget to its parent.
    pub fn representative_graph(&self) -> RepGraph {
        let leaves = self.leaf_set();
        let mut rep = RepGraph {
            graph: Graph::new(),
            anchor: 0,
            wheels: Vec::new(),
            attach: BTreeMap::new(),
        };
        for &l in &leaves {
            rep.graph.add_vertex(l);
        }
        let mut next = leaves.iter().max().unwrap() + 1;
        let mut fresh = || {
            next += 1;
            next - 1
        };
        fn build(n: &Node, rep: &mut RepGraph, fresh: &mut dyn FnMut() -> VertexId) -> VertexId {
            match n {
                Node::Leaf(x) => *x,
                Node::P(cs) => {
                    let c = fresh();
                    rep.graph.add_vertex(c);
                    for ch in cs {
                        let a = build(ch, rep, fresh);
                        rep.graph.add_edge(c, a);
                        if let Node::Leaf(x) = ch {
                            rep.attach.insert(*x, c);
                        }
                    }
                    c
                }
                Node::Q(cs) => {
                    let hub = fresh();
                    let slot = fresh();
                    let mut rim = vec![slot];
                    for ch in cs {
                        let r = fresh();
                        rim.push(r);
                        let a = build(ch, rep, fresh);
                        rep.graph.add_edge(r, a);
                        if let Node::Leaf(x) = ch {
                            rep.attach.insert(*x, r);
                        }
                    }
                    for r in &rim {
                        rep.graph.add_edge(hub, *r);
                    }
                    for w in rim.windows(2) {
                        rep.graph.add_edge(w[0], w[1]);
                    }
                    rep.graph.add_edge(rim[0], rim[rim.len() - 1]);
                    rep.wheels.push(Wheel { hub, rim });
                    slot
                }
            }
        }
        rep.anchor = build(&self.root, &mut rep, &mut fresh);
        rep
    }
}

/// Structural companion of a PQ-tree built by
/// [`PqTree::representative_graph`]. The tree leaves are exactly the
/// degree-1 vertices of `graph`, and `attach` records where each hangs.
#[derive(Clone, Debug)]
pub struct RepGraph {
    pub graph: Graph,
    pub anchor: VertexId,
    pub wheels: Vec<Wheel>,
    pub attach: BTreeMap<VertexId, VertexId>,
}

/// One wheel gadget: a hub adjacent to every vertex of a closed rim cycle.
#[derive(Clone, Debug)]
pub struct Wheel {
    pub hub: VertexId,
    pub rim: Vec<VertexId>,
}
