use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Map, Value};

use super::graph::{norm_edge, Edge, Graph, VertexId};
use super::instances::{
    BetweennessInstance, LeafTree, MaxSefeInstance, PstInstance, PtbeInstance,
    SunflowerSefeInstance, XorSatInstance,
};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    LeafTree(LeafTree),
    Ptbe(PtbeInstance),
    Sunflower(SunflowerSefeInstance),
    Betweenness(BetweennessInstance),
    XorSat(XorSatInstance),
    Pst(PstInstance),
    MaxSefe(MaxSefeInstance),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Graph(_) => "graph",
            Instance::LeafTree(_) => "leaf_tree",
            Instance::Ptbe(_) => "ptbe",
            Instance::Sunflower(_) => "sunflower_sefe",
            Instance::Betweenness(_) => "betweenness",
            Instance::XorSat(_) => "xorsat",
            Instance::Pst(_) => "pst",
            Instance::MaxSefe(_) => "max_sefe",
        }
    }

    /// Ids the document layer must label, in ascending order.
    pub fn vertex_universe(&self) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = match self {
            Instance::Graph(g) => g.vertex_set(),
            Instance::LeafTree(t) => t.graph().vertex_set(),
            Instance::Ptbe(p) => p.tree.graph().vertex_set(),
            Instance::Sunflower(s) => s.shared.vertex_set(),
            Instance::Betweenness(b) => b.elements.clone(),
            Instance::XorSat(x) => x.variables.clone(),
            Instance::Pst(p) => p.graph.vertex_set(),
            Instance::MaxSefe(m) => m.g1.vertex_set(),
        };
        set.into_iter().collect()
    }
}

/// An instance plus its printable labels; id i carries labels[i].
/// Documents always use dense ids 0..n-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub instance: Instance,
    pub labels: Vec<String>,
}

impl Document {
    pub fn new(instance: Instance, labels: Vec<String>) -> Result<Self> {
        let universe = instance.vertex_universe();
        if universe.iter().enumerate().any(|(i, &v)| v as usize != i) {
            return Err(Error::Invariant("document ids must be dense 0..n-1".into()));
        }
        if labels.len() != universe.len() {
            return Err(Error::Invariant(format!(
                "{} labels for {} vertices",
                labels.len(),
                universe.len()
            )));
        }
        if labels.iter().collect::<BTreeSet<_>>().len() != labels.len() {
            return Err(Error::Invariant("duplicate labels".into()));
        }
        Ok(Document { instance, labels })
    }

    pub fn with_numeric_labels(instance: Instance) -> Result<Self> {
        let labels = instance.vertex_universe().iter().map(|v| v.to_string()).collect();
        Document::new(instance, labels)
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    pub fn id_of(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(|i| i as VertexId)
    }
}

struct Fields<'a> {
    map: &'a Map<String, Value>,
    seen: BTreeSet<&'a str>,
}

impl<'a> Fields<'a> {
    fn new(v: &'a Value) -> Result<Self> {
        let map = v
            .as_object()
            .ok_or_else(|| Error::Malformed("document is not an object".into()))?;
        Ok(Fields { map, seen: BTreeSet::new() })
    }

    fn get(&mut self, key: &'static str) -> Result<&'a Value> {
        self.seen.insert(key);
        self.map
            .get(key)
            .ok_or_else(|| Error::Malformed(format!("missing field `{key}`")))
    }

    fn finish(self) -> Result<()> {
        for k in self.map.keys() {
            if !self.seen.contains(k.as_str()) {
                return Err(Error::Malformed(format!("unknown field `{k}`")));
            }
        }
        Ok(())
    }
}

fn as_string_array(v: &Value, what: &str) -> Result<Vec<String>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Malformed(format!("{what} must be an array")))?;
    arr.iter()
        .map(|s| {
            s.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::Malformed(format!("{what} entries must be strings")))
        })
        .collect()
}

struct LabelMap {
    ids: BTreeMap<String, VertexId>,
    labels: Vec<String>,
}

impl LabelMap {
    fn new(labels: Vec<String>) -> Result<Self> {
        let mut ids = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if ids.insert(l.clone(), i as VertexId).is_some() {
                return Err(Error::Invariant(format!("duplicate vertex label `{l}`")));
            }
        }
        Ok(LabelMap { ids, labels })
    }

    fn id(&self, label: &Value, what: &str) -> Result<VertexId> {
        let s = label
            .as_str()
            .ok_or_else(|| Error::Malformed(format!("{what} must be a string label")))?;
        self.ids
            .get(s)
            .copied()
            .ok_or_else(|| Error::Invariant(format!("{what}: unknown label `{s}`")))
    }

    fn edge(&self, v: &Value, what: &str) -> Result<Edge> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Malformed(format!("{what} must be a 2-element array")))?;
        if arr.len() != 2 {
            return Err(Error::Malformed(format!("{what} must be a 2-element array")));
        }
        let u = self.id(&arr[0], what)?;
        let w = self.id(&arr[1], what)?;
        if u == w {
            return Err(Error::Invariant(format!("{what}: self-loop on `{}`", arr[0])));
        }
        Ok(norm_edge(u, w))
    }

    fn edge_list(&self, v: &Value, what: &str) -> Result<Vec<Edge>> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Malformed(format!("{what} must be an array of edges")))?;
        arr.iter().map(|e| self.edge(e, what)).collect()
    }
}

fn parse_graph_body(fields: &mut Fields) -> Result<(Graph, LabelMap)> {
    let labels = LabelMap::new(as_string_array(fields.get("vertices")?, "vertices")?)?;
    let edges = labels.edge_list(fields.get("edges")?, "edge")?;
    let mut g = Graph::with_vertices(0..labels.labels.len() as VertexId);
    let mut seen = BTreeSet::new();
    for (u, v) in edges {
        if !seen.insert((u, v)) {
            return Err(Error::Invariant(format!(
                "duplicate edge (`{}`,`{}`)",
                labels.labels[u as usize], labels.labels[v as usize]
            )));
        }
        g.add_edge(u, v);
    }
    Ok((g, labels))
}

fn parse_inner_graph(v: &Value, what: &str) -> Result<(Graph, LabelMap)> {
    let mut fields =
        Fields::new(v).map_err(|_| Error::Malformed(format!("{what} must be an object")))?;
    let parsed = parse_graph_body(&mut fields)?;
    fields.finish()?;
    Ok(parsed)
}

fn as_budget(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::Malformed(format!("{what} must be a non-negative integer")))
}

pub fn parse_instance(text: &str) -> Result<Document> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("bad document: {e}")))?;
    let mut fields = Fields::new(&value)?;
    let kind = fields
        .get("kind")?
        .as_str()
        .ok_or_else(|| Error::Malformed("`kind` must be a string".into()))?
        .to_owned();
    let version = fields.get("version")?;
    if version.as_u64() != Some(1) {
        return Err(Error::Malformed(format!("unsupported version {version}")));
    }

    let doc = match kind.as_str() {
        "graph" => {
            let (g, labels) = parse_graph_body(&mut fields)?;
            Document::new(Instance::Graph(g), labels.labels)?
        }
        "leaf_tree" => {
            let (g, labels) = parse_graph_body(&mut fields)?;
            Document::new(Instance::LeafTree(LeafTree::new(g)?), labels.labels)?
        }
        "ptbe" => {
            let (g, labels) = parse_inner_graph(fields.get("tree")?, "tree")?;
            let pages_v = fields
                .get("pages")?
                .as_array()
                .ok_or_else(|| Error::Malformed("pages must be an array".into()))?;
            let pages = pages_v
                .iter()
                .map(|p| labels.edge_list(p, "page edge"))
                .collect::<Result<Vec<_>>>()?;
            let inst = PtbeInstance::new(LeafTree::new(g)?, pages)?;
            Document::new(Instance::Ptbe(inst), labels.labels)?
        }
        "sunflower_sefe" => {
            let (g, labels) = parse_inner_graph(fields.get("shared")?, "shared")?;
            let privates_v = fields
                .get("privates")?
                .as_array()
                .ok_or_else(|| Error::Malformed("privates must be an array".into()))?;
            let privates = privates_v
                .iter()
                .map(|p| labels.edge_list(p, "private edge"))
                .collect::<Result<Vec<_>>>()?;
            let inst = SunflowerSefeInstance::new(g, privates)?;
            Document::new(Instance::Sunflower(inst), labels.labels)?
        }
        "betweenness" => {
            let labels = LabelMap::new(as_string_array(fields.get("elements")?, "elements")?)?;
            let triples_v = fields
                .get("triples")?
                .as_array()
                .ok_or_else(|| Error::Malformed("triples must be an array".into()))?;
            let mut triples = Vec::with_capacity(triples_v.len());
            for t in triples_v {
                let arr = t
                    .as_array()
                    .ok_or_else(|| Error::Malformed("triple must be a 3-element array".into()))?;
                if arr.len() != 3 {
                    return Err(Error::Malformed("triple must be a 3-element array".into()));
                }
                triples.push([
                    labels.id(&arr[0], "triple")?,
                    labels.id(&arr[1], "triple")?,
                    labels.id(&arr[2], "triple")?,
                ]);
            }
            let elements = (0..labels.labels.len() as VertexId).collect();
            let inst = BetweennessInstance::new(elements, triples)?;
            Document::new(Instance::Betweenness(inst), labels.labels)?
        }
        "xorsat" => {
            let labels = LabelMap::new(as_string_array(fields.get("variables")?, "variables")?)?;
            let clauses_v = fields
                .get("clauses")?
                .as_array()
                .ok_or_else(|| Error::Malformed("clauses must be an array".into()))?;
            let mut clauses = Vec::with_capacity(clauses_v.len());
            for c in clauses_v {
                let arr = c
                    .as_array()
                    .ok_or_else(|| Error::Malformed("clause must be a pair of literals".into()))?;
                if arr.len() != 2 {
                    return Err(Error::Malformed("clause must be a pair of literals".into()));
                }
                let mut lits = [(0, false); 2];
                for (slot, lit) in lits.iter_mut().zip(arr) {
                    let pair = lit.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                        Error::Malformed("literal must be [variable, polarity]".into())
                    })?;
                    let var = labels.id(&pair[0], "literal")?;
                    let pol = pair[1].as_bool().ok_or_else(|| {
                        Error::Malformed("literal polarity must be a boolean".into())
                    })?;
                    *slot = (var, pol);
                }
                clauses.push(lits);
            }
            let budget = as_budget(fields.get("budget")?, "budget")? as u32;
            let variables = (0..labels.labels.len() as VertexId).collect();
            let inst = XorSatInstance::new(variables, clauses, budget)?;
            Document::new(Instance::XorSat(inst), labels.labels)?
        }
        "pst" => {
            let labels = LabelMap::new(as_string_array(fields.get("vertices")?, "vertices")?)?;
            let edges = labels.edge_list(fields.get("edges")?, "edge")?;
            let weights_v = fields
                .get("weights")?
                .as_array()
                .ok_or_else(|| Error::Malformed("weights must be an array".into()))?;
            if weights_v.len() != edges.len() {
                return Err(Error::Invariant(format!(
                    "{} weights for {} edges",
                    weights_v.len(),
                    edges.len()
                )));
            }
            let mut g = Graph::with_vertices(0..labels.labels.len() as VertexId);
            let mut weights = BTreeMap::new();
            for (e, w) in edges.iter().zip(weights_v) {
                let w = as_budget(w, "weight")?;
                if weights.insert(*e, w).is_some() {
                    return Err(Error::Invariant("duplicate edge".into()));
                }
                g.add_edge(e.0, e.1);
            }
            let terminal_labels = as_string_array(fields.get("terminals")?, "terminals")?;
            let terminals = terminal_labels
                .iter()
                .map(|t| labels.id(&Value::String(t.clone()), "terminal"))
                .collect::<Result<BTreeSet<_>>>()?;
            let budget = as_budget(fields.get("budget")?, "budget")?;
            let inst = PstInstance::new(g, weights, terminals, budget)?;
            Document::new(Instance::Pst(inst), labels.labels)?
        }
        "max_sefe" => {
            let (g1, labels) = parse_inner_graph(fields.get("g1")?, "g1")?;
            let (g2, labels2) = parse_inner_graph(fields.get("g2")?, "g2")?;
            if labels.labels != labels2.labels {
                return Err(Error::Invariant("g1 and g2 must list the same vertices".into()));
            }
            let budget = as_budget(fields.get("budget")?, "budget")? as u32;
            let inst = MaxSefeInstance::new(g1, g2, budget)?;
            Document::new(Instance::MaxSefe(inst), labels.labels)?
        }
        other => return Err(Error::UnknownKind(other.to_owned())),
    };
    fields.finish()?;
    Ok(doc)
}

fn graph_value(g: &Graph, labels: &[String]) -> Value {
    let vertices: Vec<&String> = g.vertices().map(|v| &labels[v as usize]).collect();
    let edges: Vec<Value> = g
        .edges()
        .map(|(u, v)| json!([labels[u as usize], labels[v as usize]]))
        .collect();
    json!({ "vertices": vertices, "edges": edges })
}

fn edge_set_value(edges: &BTreeSet<Edge>, labels: &[String]) -> Value {
    Value::Array(
        edges
            .iter()
            .map(|&(u, v)| json!([labels[u as usize], labels[v as usize]]))
            .collect(),
    )
}

pub fn serialize_instance(doc: &Document) -> String {
    let labels = &doc.labels;
    let mut value = match &doc.instance {
        Instance::Graph(g) => graph_value(g, labels),
        Instance::LeafTree(t) => graph_value(t.graph(), labels),
        Instance::Ptbe(p) => json!({
            "tree": graph_value(p.tree.graph(), labels),
            "pages": p.pages.iter().map(|pg| edge_set_value(pg, labels)).collect::<Vec<_>>(),
        }),
        Instance::Sunflower(s) => json!({
            "shared": graph_value(&s.shared, labels),
            "privates": s.privates.iter().map(|pg| edge_set_value(pg, labels)).collect::<Vec<_>>(),
        }),
        Instance::Betweenness(b) => json!({
            "elements": b.elements.iter().map(|&e| &labels[e as usize]).collect::<Vec<_>>(),
            "triples": b.triples.iter()
                .map(|t| json!([labels[t[0] as usize], labels[t[1] as usize], labels[t[2] as usize]]))
                .collect::<Vec<_>>(),
        }),
        Instance::XorSat(x) => json!({
            "variables": x.variables.iter().map(|&v| &labels[v as usize]).collect::<Vec<_>>(),
            "clauses": x.clauses.iter()
                .map(|c| json!([[labels[c[0].0 as usize], c[0].1], [labels[c[1].0 as usize], c[1].1]]))
                .collect::<Vec<_>>(),
            "budget": x.budget,
        }),
        Instance::Pst(p) => {
            let edges: Vec<Edge> = p.graph.edges().collect();
            json!({
                "vertices": p.graph.vertices().map(|v| &labels[v as usize]).collect::<Vec<_>>(),
                "edges": edges.iter()
                    .map(|&(u, v)| json!([labels[u as usize], labels[v as usize]]))
                    .collect::<Vec<_>>(),
                "weights": edges.iter().map(|e| p.weights[e]).collect::<Vec<_>>(),
                "terminals": p.terminals.iter().map(|&t| &labels[t as usize]).collect::<Vec<_>>(),
                "budget": p.budget,
            })
        }
        Instance::MaxSefe(m) => json!({
            "g1": graph_value(&m.g1, labels),
            "g2": graph_value(&m.g2, labels),
            "budget": m.budget,
        }),
    };
    let obj = value.as_object_mut().unwrap();
    obj.insert("kind".into(), json!(doc.instance.kind()));
    obj.insert("version".into(), json!(1));
    serde_json::to_string_pretty(&value).unwrap()
}
