//! Simple curves of a metrized digraph, its curve complex and clique
//! polynomials.

use crate::error::{Error, Result};
use crate::gamma::Family;
use crate::graph::{natural_cmp, MetricDigraph};
use crate::polynomial::IntPolynomial;
use crate::roots::{smallest_positive_root, Tolerance};
use crate::spectral::growth_rate_spectral;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// A directed cycle that visits no vertex twice. `vertices[n]` is the source
/// of `edges[n]`; the list is rotated to start at the least label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleCurve {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub weight: u64,
}

impl SimpleCurve {
    pub fn is_disjoint_from(&self, other: &SimpleCurve) -> bool {
        let mine: BTreeSet<usize> = self.vertices.iter().copied().collect();
        other.vertices.iter().all(|v| !mine.contains(v))
    }

    pub fn labels<'a>(&self, g: &'a MetricDigraph) -> Vec<&'a str> {
        self.vertices.iter().map(|&v| g.label(v)).collect()
    }
}

/// All simple cycles, each once. Parallel edges give distinct curves.
pub fn simple_cycles(g: &MetricDigraph) -> Vec<SimpleCurve> {
    let out = g.out_edges();
    let edges = g.edges();
    let n = g.vertex_count();
    let mut found = Vec::new();

    // A cycle is discovered from its least-indexed vertex only.
    for start in 0..n {
        let mut path_v = vec![start];
        let mut path_e: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];
        on_path[start] = true;
        let mut cursor = vec![0usize];
        while let Some(pos) = cursor.last_mut() {
            let v = *path_v.last().expect("path");
            if let Some(&e) = out[v].get(*pos) {
                *pos += 1;
                let w = edges[e].target;
                if w == start {
                    let mut es = path_e.clone();
                    es.push(e);
                    found.push(canonical(g, path_v.clone(), es));
                } else if w > start && !on_path[w] {
                    on_path[w] = true;
                    path_v.push(w);
                    path_e.push(e);
                    cursor.push(0);
                }
                continue;
            }
            cursor.pop();
            let v = path_v.pop().expect("path");
            on_path[v] = false;
            path_e.pop();
        }
    }
    found.sort_by(|a, b| {
        a.weight
            .cmp(&b.weight)
            .then_with(|| label_key(g, a).cmp(&label_key(g, b)))
    });
    found
}

fn label_key(g: &MetricDigraph, c: &SimpleCurve) -> Vec<(String, usize)> {
    c.vertices
        .iter()
        .zip(&c.edges)
        .map(|(&v, &e)| (g.label(v).to_string(), e))
        .collect()
}

fn canonical(g: &MetricDigraph, mut vs: Vec<usize>, mut es: Vec<usize>) -> SimpleCurve {
    let least = (0..vs.len())
        .min_by(|&a, &b| natural_cmp(g.label(vs[a]), g.label(vs[b])))
        .expect("nonempty");
    vs.rotate_left(least);
    es.rotate_left(least);
    let weight = es.iter().map(|&e| g.edges()[e].length).sum();
    SimpleCurve {
        vertices: vs,
        edges: es,
        weight,
    }
}

/// Weighted graph whose vertices are simple curves, joined when disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveComplex {
    weights: Vec<u64>,
    curves: Vec<SimpleCurve>,
    adjacent: Vec<Vec<bool>>,
}

impl CurveComplex {
    /// Complex on the given weights with the listed undirected edges.
    pub fn from_edges(weights: Vec<u64>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = weights.len();
        let mut adjacent = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a == b || a >= n || b >= n || adjacent[a][b] {
                return Err(Error::MalformedComplex(a, b));
            }
            adjacent[a][b] = true;
            adjacent[b][a] = true;
        }
        Ok(CurveComplex {
            weights,
            curves: Vec::new(),
            adjacent,
        })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Underlying curves, when the complex was built from a graph.
    pub fn curves(&self) -> &[SimpleCurve] {
        &self.curves
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacent[a][b]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.adjacent[a][b])
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacent[v].iter().filter(|&&b| b).count()
    }

    /// `K_{1,m}` followed by one `*` per isolated vertex when the complex is
    /// a star plus isolated vertices; `None` otherwise.
    pub fn shape(&self) -> Option<String> {
        let edges = self.edges();
        let isolated = (0..self.len()).filter(|&v| self.degree(v) == 0).count();
        let stars = "*".repeat(isolated);
        if edges.is_empty() {
            return (self.len() == isolated).then(|| format!("K_0{stars}"));
        }
        let center = (0..self.len()).max_by_key(|&v| self.degree(v))?;
        let m = self.degree(center);
        if m == edges.len() && edges.iter().all(|&(a, b)| a == center || b == center) {
            Some(format!("K_{{1,{m}}}{stars}"))
        } else {
            None
        }
    }

    /// Exhaustive search for an adjacency-preserving bijection that also
    /// preserves weights.
    pub fn is_isomorphic(&self, other: &CurveComplex) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        let mut a: Vec<u64> = self.weights.clone();
        let mut b: Vec<u64> = other.weights.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b || self.edges().len() != other.edges().len() {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, other: &CurveComplex, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == self.len() {
            return true;
        }
        for w in 0..other.len() {
            if used[w] || other.weights[w] != self.weights[v] || other.degree(w) != self.degree(v) {
                continue;
            }
            if (0..v).any(|u| self.adjacent[v][u] != other.adjacent[w][map[u]]) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend_iso(other, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }

    /// Graphviz rendering; vertex labels are weights.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "\\\""));
        for (v, w) in self.weights.iter().enumerate() {
            let _ = writeln!(s, "  c{v} [label=\"{w}\"];");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(s, "  c{a} -- c{b};");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize)]
struct JsonComplex<'a> {
    weights: &'a [u64],
    edges: Vec<(usize, usize)>,
    shape: Option<String>,
}

impl Serialize for CurveComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonComplex {
            weights: &self.weights,
            edges: self.edges(),
            shape: self.shape(),
        }
        .serialize(s)
    }
}

/// Curve complex of `g`: simple curves, adjacent when vertex-disjoint.
pub fn build_complex(g: &MetricDigraph) -> CurveComplex {
    let curves = simple_cycles(g);
    let n = curves.len();
    let mut adjacent = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let d = curves[a].is_disjoint_from(&curves[b]);
            adjacent[a][b] = d;
            adjacent[b][a] = d;
        }
    }
    CurveComplex {
        weights: curves.iter().map(|c| c.weight).collect(),
        curves,
        adjacent,
    }
}

/// `sum over cliques K (including the empty one) of (-1)^|K| t^w(K)`.
pub fn clique_polynomial(g: &CurveComplex) -> IntPolynomial {
    let mut terms: Vec<(i64, usize)> = Vec::new();
    let all: Vec<usize> = (0..g.len()).collect();
    extend_cliques(g, &all, 0, 0, &mut terms);
    IntPolynomial::from_terms(&terms)
}

fn extend_cliques(g: &CurveComplex, candidates: &[usize], size: usize, weight: u64, terms: &mut Vec<(i64, usize)>) {
    terms.push((if size.is_multiple_of(2) { 1 } else { -1 }, weight as usize));
    for (n, &v) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[n + 1..]
            .iter()
            .copied()
            .filter(|&u| g.adjacent[v][u])
            .collect();
        extend_cliques(g, &next, size + 1, weight + g.weights[v], terms);
    }
}

/// Weighted complexes read off the family descriptions, without building
/// the graph.
pub fn complex_from_caption(family: Family, i: i64, j: i64, k: i64) -> Result<CurveComplex> {
    family.check(i, j, k)?;
    let (i, j, k) = (i as u64, j as u64, k as u64);
    // (center, leaves, isolated)
    let (center, leaves, isolated): (u64, Vec<u64>, Vec<u64>) = match family {
        Family::PlusNondeg | Family::ZeroJ0 => (j + k, vec![k, i + k], vec![j + 2 * k, i + j + k]),
        Family::PlusJ0 | Family::Zero0k => (k, vec![k, i + k, i + k], vec![2 * k, i + 2 * k]),
        Family::MinusSmallI | Family::MinusJ0Small => (k, vec![i + j + k], vec![i + k, j + k]),
        Family::MinusLargeI | Family::MinusJ0Large => {
            let ell = i / k;
            let mut leaves = vec![i + j + k];
            leaves.extend((1..=ell).map(|m| j + k * m));
            (k, leaves, vec![i + k, j + k * (ell + 1)])
        }
    };
    let mut weights = vec![center];
    weights.extend(&leaves);
    weights.extend(&isolated);
    let edges: Vec<(usize, usize)> = (1..=leaves.len()).map(|l| (0, l)).collect();
    CurveComplex::from_edges(weights, &edges)
}

/// Check that the growth rate of `g` is the reciprocal of the smallest
/// positive root of its clique polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McMullenReport {
    pub lambda: f64,
    pub mu: f64,
    pub product_error: f64,
    pub polynomial: IntPolynomial,
    pub pass: bool,
}

pub fn verify_mcmullen(g: &MetricDigraph, tolerance: f64) -> Result<McMullenReport> {
    let solver = Tolerance::default();
    let polynomial = clique_polynomial(&build_complex(g));
    let lambda = growth_rate_spectral::<f64>(g, &solver)?.value;
    let mu = smallest_positive_root::<f64>(&polynomial, &solver)?.midpoint();
    let product_error = (lambda * mu - 1.0).abs();
    Ok(McMullenReport {
        lambda,
        mu,
        product_error,
        polynomial,
        pass: product_error < tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{gamma_from_figure, gamma_plus};

    fn weights(cs: &[SimpleCurve]) -> Vec<u64> {
        let mut w: Vec<u64> = cs.iter().map(|c| c.weight).collect();
        w.sort_unstable();
        w
    }

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn plus_cycles() {
        assert_eq!(weights(&simple_cycles(&gamma_plus(1, 1, 1).unwrap())), [1, 2, 2, 3, 3]);
        assert_eq!(weights(&simple_cycles(&gamma_plus(1, 4, 1).unwrap())), [1, 2, 5, 6, 6]);
        let (i, j, k) = (2, 3, 4);
        let mut expect = vec![k, i + k, j + k, i + j + k, j + 2 * k];
        expect.sort_unstable();
        assert_eq!(
            weights(&simple_cycles(&gamma_plus(i as i64, j as i64, k as i64).unwrap())),
            expect
        );
    }

    #[test]
    fn trivial_cycle_sets() {
        let lp = MetricDigraph::from_labeled_edges(&[("a", "a", 1)]).unwrap();
        assert_eq!(simple_cycles(&lp).len(), 1);
        let two = MetricDigraph::from_labeled_edges(&[("a", "a", 1), ("b", "b", 2)]).unwrap();
        assert_eq!(simple_cycles(&two).len(), 2);
        let cx = build_complex(&two);
        assert!(cx.is_adjacent(0, 1));
        let path = MetricDigraph::from_labeled_edges(&[("a", "b", 1)]).unwrap();
        assert!(build_complex(&path).is_empty());
        assert_eq!(clique_polynomial(&build_complex(&path)), IntPolynomial::one());
    }

    #[test]
    fn canonical_rotation_starts_at_least_label() {
        let g = MetricDigraph::from_labeled_edges(&[("c", "a", 1), ("a", "b", 1), ("b", "c", 1)]).unwrap();
        let cs = simple_cycles(&g);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].labels(&g), ["a", "b", "c"]);
    }

    #[test]
    fn plus_complex_shape_and_polynomial() {
        let cx = build_complex(&gamma_plus(1, 4, 1).unwrap());
        assert_eq!(cx.shape().as_deref(), Some("K_{1,2}**"));
        assert_eq!(clique_polynomial(&cx), p("1 - t - t^2 - t^5 - t^6 + t^7"));
    }

    #[test]
    fn minus_large_complex() {
        let g = gamma_from_figure(Family::MinusLargeI, 5, 1, 2).unwrap();
        let cx = build_complex(&g);
        assert_eq!(cx.shape().as_deref(), Some("K_{1,3}**"));
        let cap = complex_from_caption(Family::MinusLargeI, 5, 1, 2).unwrap();
        assert_eq!(cap.weights(), &[2, 8, 3, 5, 7, 7]);
        assert!(cx.is_isomorphic(&cap));
        assert_eq!(clique_polynomial(&cap), p("1 - t^2 - t^7 - t^3 - t^8 + t^10"));
    }

    #[test]
    fn caption_complexes_match_graphs() {
        for (f, i, j, k) in [
            (Family::PlusNondeg, 2, 3, 1),
            (Family::PlusJ0, 3, 0, 2),
            (Family::ZeroJ0, 0, 1, 2),
            (Family::Zero0k, 0, 0, 3),
            (Family::MinusSmallI, 2, 3, 4),
            (Family::MinusLargeI, 7, 2, 3),
            (Family::MinusJ0Small, 1, 0, 3),
            (Family::MinusJ0Large, 4, 0, 2),
        ] {
            let built = build_complex(&gamma_from_figure(f, i, j, k).unwrap());
            let cap = complex_from_caption(f, i, j, k).unwrap();
            assert!(built.is_isomorphic(&cap), "{f} ({i},{j},{k})");
        }
        assert!(complex_from_caption(Family::MinusSmallI, 5, 1, 2).is_err());
    }

    #[test]
    fn small_complexes() {
        let one = CurveComplex::from_edges(vec![3], &[]).unwrap();
        assert_eq!(clique_polynomial(&one), p("1 - t^3"));
        assert_eq!(
            clique_polynomial(&CurveComplex::from_edges(vec![], &[]).unwrap()),
            IntPolynomial::one()
        );
        assert_eq!(
            CurveComplex::from_edges(vec![1, 2], &[(0, 0)]),
            Err(Error::MalformedComplex(0, 0))
        );
        assert_eq!(
            CurveComplex::from_edges(vec![1, 2], &[(0, 1), (1, 0)]),
            Err(Error::MalformedComplex(1, 0))
        );
    }

    #[test]
    fn isomorphism_respects_weights() {
        let a = CurveComplex::from_edges(vec![1, 2, 3], &[(0, 1)]).unwrap();
        let b = CurveComplex::from_edges(vec![3, 2, 1], &[(1, 2)]).unwrap();
        let c = CurveComplex::from_edges(vec![3, 2, 1], &[(0, 1)]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&c));
    }

    #[test]
    fn mcmullen_examples() {
        let r = verify_mcmullen(&gamma_plus(1, 4, 1).unwrap(), 1e-8).unwrap();
        assert!(r.pass);
        assert!((r.lambda - 1.7220).abs() < 1e-4);

        let r = verify_mcmullen(&gamma_from_figure(Family::ZeroJ0, 0, 2, 3).unwrap(), 1e-8).unwrap();
        assert!(r.pass);
        assert!((r.lambda - 1.4134).abs() < 1e-4);

        let lp = MetricDigraph::from_labeled_edges(&[("a", "a", 5)]).unwrap();
        let r = verify_mcmullen(&lp, 1e-8).unwrap();
        assert!(r.pass);
        assert_eq!(r.polynomial, p("1 - t^5"));
        assert!((r.lambda - 1.0).abs() < 1e-12 && (r.mu - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dot_labels_are_weights() {
        let cx = complex_from_caption(Family::MinusSmallI, 1, 1, 2).unwrap();
        let dot = cx.to_dot("G");
        assert!(dot.contains("c0 [label=\"2\"]"));
        assert!(dot.contains("c0 -- c1;"));
    }
}
