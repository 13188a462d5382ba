//! Finite directed multigraphs whose edges carry positive integer lengths.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub length: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricDigraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
}

impl MetricDigraph {
    pub fn new(labels: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let n = labels.len();
        for e in &edges {
            if e.length == 0 {
                return Err(Error::ZeroLengthEdge);
            }
            if e.source >= n || e.target >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge {} -> {} refers to a missing vertex",
                    e.source, e.target
                )));
            }
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::InvalidParameter(format!("duplicate vertex label {l}")));
            }
        }
        Ok(MetricDigraph { labels, edges })
    }

    /// Builds a graph from `(source, target, length)` label triples; vertices
    /// appear in order of first mention.
    pub fn from_labeled_edges(edges: &[(&str, &str, u64)]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut id = |l: &str, labels: &mut Vec<String>| {
            *index.entry(l.to_string()).or_insert_with(|| {
                labels.push(l.to_string());
                labels.len() - 1
            })
        };
        let mut out = Vec::with_capacity(edges.len());
        for &(s, t, length) in edges {
            let source = id(s, &mut labels);
            let target = id(t, &mut labels);
            out.push(Edge { source, target, length });
        }
        Self::new(labels, out)
    }

    pub fn empty() -> Self {
        MetricDigraph {
            labels: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.source == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.target == v).count()
    }

    /// Sum of edge lengths; equals the vertex count of the unit expansion
    /// when every vertex has exactly one incoming metric edge.
    pub fn total_length(&self) -> u64 {
        self.edges.iter().map(|e| e.length).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.edges.iter().all(|e| e.length == 1)
    }

    /// Outgoing edge indices per vertex.
    pub fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.source].push(i);
        }
        out
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for e in &self.edges {
            out[e.source].push(e.target);
        }
        out
    }

    /// Strong components, each listed by vertex index, in the reverse
    /// topological order produced by Tarjan's algorithm.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let succ = self.successors();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comps = Vec::new();
        let mut next = 0;

        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            // (vertex, position in its successor list)
            let mut call = vec![(root, 0usize)];
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&w) = succ[v].get(*pos) {
                    *pos += 1;
                    if index[w] == usize::MAX {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.vertex_count() > 0 && self.strong_components().len() == 1
    }

    pub fn require_strongly_connected(&self) -> Result<()> {
        let components = self.strong_components().len();
        if components == 1 {
            Ok(())
        } else {
            Err(Error::NotStronglyConnected { components })
        }
    }

    /// Subdivides every edge of length `m` into `m` unit edges. Interior
    /// vertices of an edge `p2 -> p5` are named `p3, p4`; other edges get
    /// `<source>~<target>.<n>`, suffixed with the edge index if needed.
    pub fn unit_expand(&self) -> MetricDigraph {
        let mut labels = self.labels.clone();
        let mut taken: std::collections::HashSet<String> = labels.iter().cloned().collect();
        let mut edges = Vec::new();
        for (idx, e) in self.edges.iter().enumerate() {
            if e.length == 1 {
                edges.push(*e);
                continue;
            }
            let names = interior_names(&self.labels[e.source], &self.labels[e.target], e.length)
                .filter(|ns| ns.iter().all(|n| !taken.contains(n)))
                .unwrap_or_else(|| {
                    let base = format!("{}~{}", self.labels[e.source], self.labels[e.target]);
                    let mut ns: Vec<String> = (1..e.length).map(|m| format!("{base}.{m}")).collect();
                    if ns.iter().any(|n| taken.contains(n)) {
                        ns = (1..e.length).map(|m| format!("{base}#{idx}.{m}")).collect();
                    }
                    ns
                });
            let mut prev = e.source;
            for name in names {
                taken.insert(name.clone());
                labels.push(name);
                let v = labels.len() - 1;
                edges.push(Edge {
                    source: prev,
                    target: v,
                    length: 1,
                });
                prev = v;
            }
            edges.push(Edge {
                source: prev,
                target: e.target,
                length: 1,
            });
        }
        MetricDigraph { labels, edges }
    }

    /// Graphviz rendering with `len=<n>` on every edge. Vertices and edges are
    /// listed in natural label order so output is stable.
    pub fn to_dot(&self, name: &str) -> String {
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by(|&a, &b| natural_cmp(&self.labels[a], &self.labels[b]));
        let mut edges = self.edges.clone();
        edges.sort_by(|a, b| {
            natural_cmp(&self.labels[a.source], &self.labels[b.source])
                .then_with(|| natural_cmp(&self.labels[a.target], &self.labels[b.target]))
                .then(a.length.cmp(&b.length))
        });
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", escape(name));
        for v in order {
            let _ = writeln!(s, "  \"{}\";", escape(&self.labels[v]));
        }
        for e in edges {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [len={}];",
                escape(&self.labels[e.source]),
                escape(&self.labels[e.target]),
                e.length
            );
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn split_label(l: &str) -> Option<(&str, u64)> {
    let pos = l.find(|c: char| c.is_ascii_digit())?;
    let (head, tail) = l.split_at(pos);
    if head.is_empty() {
        return None;
    }
    tail.parse().ok().map(|n| (head, n))
}

fn interior_names(source: &str, target: &str, length: u64) -> Option<Vec<String>> {
    let (a, m) = split_label(source)?;
    let (b, n) = split_label(target)?;
    (a == b && n == m + length).then(|| (m + 1..n).map(|i| format!("{a}{i}")).collect())
}

/// Orders `p2` before `p10`: letter prefix, then numeric suffix, then text.
pub fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    match (split_label(a), split_label(b)) {
        (Some((ha, na)), Some((hb, nb))) => ha.cmp(hb).then(na.cmp(&nb)).then_with(|| a.cmp(b)),
        _ => a.cmp(b),
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    source: String,
    target: String,
    length: u64,
}

impl Serialize for MetricDigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonGraph {
            vertices: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| JsonEdge {
                    source: self.labels[e.source].clone(),
                    target: self.labels[e.target].clone(),
                    length: e.length,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MetricDigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let g = JsonGraph::deserialize(d)?;
        let index: HashMap<&str, usize> = g.vertices.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let look = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| D::Error::custom(format!("unknown vertex {l}")))
        };
        let mut edges = Vec::with_capacity(g.edges.len());
        for e in &g.edges {
            edges.push(Edge {
                source: look(&e.source)?,
                target: look(&e.target)?,
                length: e.length,
            });
        }
        MetricDigraph::new(g.vertices, edges).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_of_length_three_expands_to_a_triangle() {
        let g = MetricDigraph::from_labeled_edges(&[("a", "a", 3)]).unwrap();
        let u = g.unit_expand();
        assert_eq!(u.vertex_count(), 3);
        assert_eq!(u.edge_count(), 3);
        assert!(u.is_unit());
        assert!(u.is_strongly_connected());
    }

    #[test]
    fn chain_interiors_get_chain_labels() {
        let g = MetricDigraph::from_labeled_edges(&[("p1", "p4", 3), ("p4", "p1", 1)]).unwrap();
        let u = g.unit_expand();
        assert_eq!(u.labels(), &["p1", "p4", "p2", "p3"]);
    }

    #[test]
    fn expanding_a_unit_graph_is_the_identity() {
        let g = MetricDigraph::from_labeled_edges(&[("a", "b", 1), ("b", "a", 1), ("a", "a", 1)]).unwrap();
        assert_eq!(g.unit_expand(), g);
    }

    #[test]
    fn parallel_long_edges_do_not_collide() {
        let g = MetricDigraph::from_labeled_edges(&[("a", "b", 3), ("a", "b", 3), ("b", "a", 1)]).unwrap();
        let u = g.unit_expand();
        assert_eq!(u.vertex_count(), 2 + 2 + 2);
        assert!(u.is_strongly_connected());
    }

    #[test]
    fn rejects_zero_lengths_and_duplicate_labels() {
        assert_eq!(
            MetricDigraph::from_labeled_edges(&[("a", "b", 0)]),
            Err(Error::ZeroLengthEdge)
        );
        assert!(MetricDigraph::new(vec!["a".into(), "a".into()], vec![]).is_err());
    }

    #[test]
    fn tarjan_components() {
        let g = MetricDigraph::from_labeled_edges(&[
            ("a", "b", 1),
            ("b", "a", 1),
            ("b", "c", 1),
            ("c", "d", 1),
            ("d", "c", 1),
        ])
        .unwrap();
        let comps = g.strong_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&vec![0, 1]));
        assert!(comps.contains(&vec![2, 3]));
        assert_eq!(
            g.require_strongly_connected(),
            Err(Error::NotStronglyConnected { components: 2 })
        );
        assert!(!MetricDigraph::empty().is_strongly_connected());
    }

    #[test]
    fn dot_output_is_sorted() {
        let g = MetricDigraph::from_labeled_edges(&[("p10", "p2", 1), ("p2", "p10", 8)]).unwrap();
        let dot = g.to_dot("g");
        let p2 = dot.find("\"p2\";").unwrap();
        let p10 = dot.find("\"p10\";").unwrap();
        assert!(p2 < p10);
        assert!(dot.contains("\"p2\" -> \"p10\" [len=8];"));
    }

    #[test]
    fn json_round_trip() {
        let g = MetricDigraph::from_labeled_edges(&[("p1", "p3", 2), ("p3", "p1", 1), ("p3", "p1", 1)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: MetricDigraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<MetricDigraph>(
            r#"{"vertices":["a"],"edges":[{"source":"a","target":"b","length":1}]}"#
        )
        .is_err());
    }
}
