//! The metrized digraphs Γ_a attached to the invariant train tracks of the
//! classes `(i,j,k)_±`.
//!
//! Each graph is a union of labelled chains `p, q, r, s` (plus sign) or
//! `p, q, r, u` (minus sign). A chain of length `L` is a path of `L` unit real
//! edges; the last one fans out to the first edge of other chains through unit
//! junction edges. A chain whose length is zero is absent, and edges into it
//! are forwarded to wherever it would have led. The compact graph keeps only
//! the chain positions that are touched by a junction edge.

use crate::error::{Error, Result};
use crate::graph::{Edge, MetricDigraph};
use crate::homology::{IjkClass, Sign};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    PlusNondeg,
    PlusJ0,
    ZeroJ0,
    Zero0k,
    MinusSmallI,
    MinusLargeI,
    MinusJ0Small,
    MinusJ0Large,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::PlusNondeg,
        Family::PlusJ0,
        Family::ZeroJ0,
        Family::Zero0k,
        Family::MinusSmallI,
        Family::MinusLargeI,
        Family::MinusJ0Small,
        Family::MinusJ0Large,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::PlusNondeg => "plus_nondeg",
            Family::PlusJ0 => "plus_j0",
            Family::ZeroJ0 => "zero_j0",
            Family::Zero0k => "zero_0k",
            Family::MinusSmallI => "minus_small_i",
            Family::MinusLargeI => "minus_large_i",
            Family::MinusJ0Small => "minus_j0_small",
            Family::MinusJ0Large => "minus_j0_large",
        }
    }

    pub fn sign(self) -> Sign {
        match self {
            Family::MinusSmallI | Family::MinusLargeI | Family::MinusJ0Small | Family::MinusJ0Large => Sign::Minus,
            _ => Sign::Plus,
        }
    }

    /// The family whose graph models `c`.
    pub fn route(c: &IjkClass) -> Family {
        let (i, j, k) = (c.i, c.j, c.k);
        match (c.sign, i == 0, j == 0) {
            (Sign::Plus, true, true) => Family::Zero0k,
            (Sign::Plus, true, false) => Family::ZeroJ0,
            (Sign::Plus, false, true) => Family::PlusJ0,
            (Sign::Plus, false, false) => Family::PlusNondeg,
            (Sign::Minus, _, false) if i < k => Family::MinusSmallI,
            (Sign::Minus, _, false) => Family::MinusLargeI,
            (Sign::Minus, _, true) if i < k => Family::MinusJ0Small,
            (Sign::Minus, _, true) => Family::MinusJ0Large,
        }
    }

    /// Checks that `(i, j, k)` belongs to this family.
    pub fn check(self, i: i64, j: i64, k: i64) -> Result<()> {
        let fail = |reason: &str| {
            Err(Error::FamilyMismatch {
                family: self.name().into(),
                i,
                j,
                k,
                reason: reason.into(),
            })
        };
        if k < 1 || i < 0 || j < 0 {
            return fail("need i, j >= 0 and k >= 1");
        }
        let ok = match self {
            Family::PlusNondeg => i >= 1 && j >= 1,
            Family::PlusJ0 => i >= 1 && j == 0,
            Family::ZeroJ0 => i == 0 && j >= 1,
            Family::Zero0k => i == 0 && j == 0,
            Family::MinusSmallI => 0 < i && i < k && j >= 1,
            Family::MinusLargeI => i >= k && j >= 1,
            Family::MinusJ0Small => 0 < i && i < k && j == 0,
            Family::MinusJ0Large => i >= k && j == 0,
        };
        if ok {
            Ok(())
        } else {
            fail(match self {
                Family::PlusNondeg => "need i >= 1 and j >= 1",
                Family::PlusJ0 => "need i >= 1 and j = 0",
                Family::ZeroJ0 => "need i = 0 and j >= 1",
                Family::Zero0k => "need i = j = 0",
                Family::MinusSmallI => "need 0 < i < k and j >= 1",
                Family::MinusLargeI => "need i >= k and j >= 1",
                Family::MinusJ0Small => "need 0 < i < k and j = 0",
                Family::MinusJ0Large => "need i >= k and j = 0",
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// Chains and junctions before compaction.
#[derive(Clone, Debug)]
struct ChainSystem {
    /// `(letter, length)`
    chains: Vec<(char, usize)>,
    /// `(source chain, target chain, target offset)`
    junctions: Vec<(usize, usize, usize)>,
}

impl ChainSystem {
    fn plus(i: usize, j: usize, k: usize) -> Self {
        let (p, q, r, s) = (0, 1, 2, 3);
        ChainSystem {
            chains: vec![('p', k), ('q', k), ('r', j), ('s', i)],
            junctions: vec![
                (p, r, 0),
                (p, p, 0),
                (p, s, 0),
                (q, r, 0),
                (q, p, 0),
                (r, q, 0),
                (r, s, 0),
                // s_i returns to p_1
                (s, p, 0),
            ],
        }
    }

    fn minus(i: usize, j: usize, k: usize) -> Self {
        let (p, q, r, u) = (0, 1, 2, 3);
        let ell = i / k;
        let rho = i - k * ell;
        let mut junctions = vec![
            (p, p, 0),
            (p, u, 0),
            (q, u, 0),
            (u, r, 0),
            (u, p, 0),
            (r, q, 0),
            (r, p, rho),
        ];
        for m in 1..=ell {
            junctions.push((r, u, i - k * m));
        }
        ChainSystem {
            chains: vec![('p', k), ('q', k), ('r', j), ('u', i)],
            junctions,
        }
    }

    /// Targets of a junction into `(chain, offset)`, forwarding through
    /// absent chains.
    fn resolve(&self, chain: usize, offset: usize, out: &mut Vec<(usize, usize)>, depth: usize) {
        if self.chains[chain].1 > 0 {
            out.push((chain, offset));
            return;
        }
        assert!(depth <= self.chains.len(), "cycle of absent chains");
        for &(s, t, o) in &self.junctions {
            if s == chain {
                self.resolve(t, o, out, depth + 1);
            }
        }
    }

    fn compact(&self) -> MetricDigraph {
        let mut unit: Vec<((usize, usize), (usize, usize))> = Vec::new();
        for &(s, t, o) in &self.junctions {
            let len = self.chains[s].1;
            if len == 0 {
                continue;
            }
            let mut targets = Vec::new();
            self.resolve(t, o, &mut targets, 0);
            for tgt in targets {
                unit.push(((s, len - 1), tgt));
            }
        }

        let mut stops: Vec<BTreeSet<usize>> = self
            .chains
            .iter()
            .map(|&(_, len)| if len == 0 { BTreeSet::new() } else { [0, len - 1].into() })
            .collect();
        for &(_, (c, o)) in &unit {
            stops[c].insert(o);
        }

        let mut labels = Vec::new();
        let mut id = std::collections::HashMap::new();
        for (c, (letter, _)) in self.chains.iter().enumerate() {
            for &o in &stops[c] {
                id.insert((c, o), labels.len());
                labels.push(format!("{letter}{}", o + 1));
            }
        }

        let mut edges = Vec::new();
        for (c, set) in stops.iter().enumerate() {
            let offs: Vec<usize> = set.iter().copied().collect();
            for w in offs.windows(2) {
                edges.push(Edge {
                    source: id[&(c, w[0])],
                    target: id[&(c, w[1])],
                    length: (w[1] - w[0]) as u64,
                });
            }
        }
        for (s, t) in unit {
            edges.push(Edge {
                source: id[&s],
                target: id[&t],
                length: 1,
            });
        }
        MetricDigraph::new(labels, edges).expect("chain systems produce valid graphs")
    }
}

/// Γ for a non-degenerate `(i,j,k)_+` with `i, j, k >= 1`.
pub fn gamma_plus(i: i64, j: i64, k: i64) -> Result<MetricDigraph> {
    gamma_from_figure(Family::PlusNondeg, i, j, k)
}

/// Γ for the named family; parameters must belong to it.
pub fn gamma_from_figure(family: Family, i: i64, j: i64, k: i64) -> Result<MetricDigraph> {
    family.check(i, j, k)?;
    let (i, j, k) = (i as usize, j as usize, k as usize);
    let system = match family.sign() {
        Sign::Plus => ChainSystem::plus(i, j, k),
        Sign::Minus => ChainSystem::minus(i, j, k),
    };
    Ok(system.compact())
}

/// Γ for any class, routed to its family.
pub fn gamma_for(c: &IjkClass) -> MetricDigraph {
    gamma_from_figure(Family::route(c), c.i, c.j, c.k).expect("routing picks a matching family")
}

/// The two-vertex graph of the seed monodromy, `(0,1)_0`.
pub fn seed_graph() -> MetricDigraph {
    gamma_from_figure(Family::Zero0k, 0, 0, 1).expect("valid parameters")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routing() {
        let r = |c: IjkClass| Family::route(&c);
        assert_eq!(r(IjkClass::plus(1, 4, 1).unwrap()), Family::PlusNondeg);
        assert_eq!(r(IjkClass::plus(3, 0, 2).unwrap()), Family::PlusJ0);
        assert_eq!(r(IjkClass::zero(1, 2).unwrap()), Family::ZeroJ0);
        assert_eq!(r(IjkClass::zero(0, 5).unwrap()), Family::Zero0k);
        assert_eq!(r(IjkClass::minus(3, 1, 4).unwrap()), Family::MinusSmallI);
        assert_eq!(r(IjkClass::minus(5, 1, 2).unwrap()), Family::MinusLargeI);
        assert_eq!(r(IjkClass::minus(1, 0, 2).unwrap()), Family::MinusJ0Small);
        assert_eq!(r(IjkClass::minus(2, 0, 2).unwrap()), Family::MinusJ0Large);
    }

    #[test]
    fn family_checks() {
        assert!(gamma_from_figure(Family::MinusSmallI, 3, 1, 4).is_ok());
        assert!(matches!(
            gamma_from_figure(Family::MinusSmallI, 5, 1, 2),
            Err(Error::FamilyMismatch { .. })
        ));
        assert!(gamma_from_figure(Family::MinusLargeI, 5, 1, 2).is_ok());
        assert!(gamma_plus(0, 1, 1).is_err());
        assert!(gamma_plus(1, 1, 0).is_err());
        assert_eq!("minus-large-i".parse::<Family>().unwrap(), Family::MinusLargeI);
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn plus_junction_vertices() {
        let g = gamma_plus(1, 1, 1).unwrap();
        assert_eq!(g.labels(), &["p1", "q1", "r1", "s1"]);
        assert_eq!(g.edge_count(), 8);
        assert!(g.is_unit());

        let g = gamma_plus(2, 3, 4).unwrap();
        let mut labels: Vec<&str> = g.labels().iter().map(String::as_str).collect();
        labels.sort();
        assert_eq!(labels, ["p1", "p4", "q1", "q4", "r1", "r3", "s1", "s2"]);
        assert_eq!(g.total_length() as i64, 8 + (4 - 1) * 2 + (3 - 1) + (2 - 1));
    }

    #[test]
    fn expansion_size_is_the_norm() {
        for c in [
            IjkClass::plus(1, 4, 1).unwrap(),
            IjkClass::plus(3, 0, 2).unwrap(),
            IjkClass::zero(2, 3).unwrap(),
            IjkClass::zero(0, 4).unwrap(),
            IjkClass::minus(3, 2, 4).unwrap(),
            IjkClass::minus(7, 2, 3).unwrap(),
            IjkClass::minus(2, 0, 5).unwrap(),
            IjkClass::minus(6, 0, 3).unwrap(),
        ] {
            let g = gamma_for(&c);
            assert_eq!(g.unit_expand().vertex_count() as i64, c.norm(), "{c}");
            assert!(g.is_strongly_connected(), "{c}");
        }
    }

    #[test]
    fn minus_large_r_fans_out() {
        // (5,1,2)_-: l = 2, rho = 1, so r1 -> q1, p2, u4, u2.
        let g = gamma_from_figure(Family::MinusLargeI, 5, 1, 2).unwrap();
        let r = g.index_of("r1").unwrap();
        let mut targets: Vec<&str> = g
            .edges()
            .iter()
            .filter(|e| e.source == r)
            .map(|e| g.label(e.target))
            .collect();
        targets.sort();
        assert_eq!(targets, ["p2", "q1", "u2", "u4"]);
    }

    #[test]
    fn seed_graph_has_two_vertices() {
        let g = seed_graph();
        assert_eq!(g.labels(), &["p1", "q1"]);
        let count = |a: &str, b: &str| {
            let (a, b) = (g.index_of(a).unwrap(), g.index_of(b).unwrap());
            g.edges().iter().filter(|e| e.source == a && e.target == b).count()
        };
        assert_eq!(count("p1", "p1"), 3);
        assert_eq!(count("p1", "q1"), 1);
        assert_eq!(count("q1", "p1"), 2);
        assert_eq!(count("q1", "q1"), 1);
    }
}
