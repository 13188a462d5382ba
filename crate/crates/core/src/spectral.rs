//! Incidence matrices, primitivity and growth rates of digraphs.

use crate::error::{Error, Result};
use crate::graph::{Edge, MetricDigraph};
use crate::roots::Tolerance;
use num_bigint::BigUint;
use num_traits::{Float, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Square non-negative integer matrix; entry `(i, j)` counts unit edges
/// `j -> i`, with indices naming the real edges of the train track.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceMatrix {
    labels: Vec<String>,
    rows: Vec<Vec<u64>>,
}

impl IncidenceMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let labels = (1..=rows.len()).map(|i| format!("e{i}")).collect();
        Self::with_labels(labels, rows)
    }

    pub fn with_labels(labels: Vec<String>, rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        if labels.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("incidence matrix must be square".into()));
        }
        Ok(IncidenceMatrix { labels, rows })
    }

    /// Incidence of the unit expansion of `g`.
    pub fn of_graph(g: &MetricDigraph) -> Self {
        let u = g.unit_expand();
        let n = u.vertex_count();
        let mut rows = vec![vec![0u64; n]; n];
        for e in u.edges() {
            rows[e.target][e.source] += 1;
        }
        IncidenceMatrix {
            labels: u.labels().to_vec(),
            rows,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    fn entries(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    fn support_graph(&self) -> MetricDigraph {
        let edges = self
            .entries()
            .into_iter()
            .map(|(i, j, _)| Edge {
                source: j,
                target: i,
                length: 1,
            })
            .collect();
        MetricDigraph::new(self.labels.clone(), edges).expect("square support")
    }

    /// Some power `M^l` with `1 <= l <= n^2` is entrywise positive.
    pub fn is_perron_frobenius(&self) -> bool {
        let n = self.dim();
        if n == 0 {
            return false;
        }
        // Once a power is positive every later one is, so M^(2^s) with
        // 2^s >= n^2 decides it; check at each squaring on the way.
        let mut p = BoolMatrix::from_counts(&self.rows);
        let mut exp: u64 = 1;
        loop {
            if p.all_true() {
                return true;
            }
            if exp >= (n * n) as u64 {
                return false;
            }
            p = p.mul(&p);
            exp *= 2;
        }
    }

    /// Perron root, by power iteration; the matrix must be irreducible.
    pub fn spectral_radius<F: Float>(&self, tolerance: &Tolerance) -> Result<SpectralEstimate<F>> {
        self.support_graph().require_strongly_connected()?;
        power_iteration(self.dim(), &self.entries(), tolerance)
    }
}

#[derive(Clone)]
struct BoolMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    fn from_counts(rows: &[Vec<u64>]) -> Self {
        let n = rows.len();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for (i, row) in rows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    bits[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        BoolMatrix { n, words, bits }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        let (n, w) = (self.n, self.words);
        let mut bits = vec![0u64; n * w];
        for i in 0..n {
            for k in 0..n {
                if self.get(i, k) {
                    for x in 0..w {
                        bits[i * w + x] |= other.bits[k * w + x];
                    }
                }
            }
        }
        BoolMatrix { n, words: w, bits }
    }

    fn all_true(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j)))
    }
}

/// Perron root estimate with Collatz–Wielandt bounds `lower <= rho <= upper`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralEstimate<F> {
    pub value: F,
    pub lower: F,
    pub upper: F,
    pub iterations: usize,
}

pub const MAX_ITERATIONS: usize = 1_000_000;
const STALL_WINDOW: usize = 10_000;

/// Power iteration on `A + I` for an irreducible non-negative `A` given by
/// `(row, col, weight)` entries. The shift makes periodic matrices converge.
fn power_iteration<F: Float>(
    n: usize,
    entries: &[(usize, usize, u64)],
    tolerance: &Tolerance,
) -> Result<SpectralEstimate<F>> {
    if n == 0 {
        return Err(Error::NotStronglyConnected { components: 0 });
    }
    let tol = F::from(tolerance.to_f64()).unwrap_or_else(F::epsilon);
    let weights: Vec<F> = entries.iter().map(|&(_, _, w)| F::from(w).unwrap()).collect();
    let mut x = vec![F::one(); n];
    let mut ax = vec![F::zero(); n];
    let mut best_gap = F::infinity();
    let mut since_best = 0;

    for it in 1..=MAX_ITERATIONS {
        ax.iter_mut().for_each(|v| *v = F::zero());
        for (&(i, j, _), &w) in entries.iter().zip(&weights) {
            ax[i] = ax[i] + w * x[j];
        }
        let mut lower = F::infinity();
        let mut upper = F::zero();
        for (a, xi) in ax.iter().zip(&x) {
            let r = *a / *xi;
            lower = lower.min(r);
            upper = upper.max(r);
        }
        let gap = upper - lower;
        let estimate = |iterations| SpectralEstimate {
            value: (lower + upper) / (F::one() + F::one()),
            lower,
            upper,
            iterations,
        };
        if gap < tol {
            return Ok(estimate(it));
        }
        if gap < best_gap {
            best_gap = gap;
            since_best = 0;
        } else {
            since_best += 1;
            if since_best >= STALL_WINDOW {
                // No further progress in this precision.
                return Ok(estimate(it));
            }
        }
        let mut top = F::zero();
        for (xi, a) in x.iter_mut().zip(&ax) {
            *xi = *xi + *a;
            top = top.max(*xi);
        }
        x.iter_mut().for_each(|v| *v = *v / top);
    }
    Err(Error::PowerIterationDiverged {
        iterations: MAX_ITERATIONS,
    })
}

/// Growth rate `λ(Γ, m)`: Perron root of the unit expansion.
/// Incidence matrix of the unit expansion of `g`.
pub fn incidence_matrix(g: &MetricDigraph) -> IncidenceMatrix {
    IncidenceMatrix::of_graph(g)
}

pub fn growth_rate_spectral<F: Float>(g: &MetricDigraph, tolerance: &Tolerance) -> Result<SpectralEstimate<F>> {
    g.require_strongly_connected()?;
    let u = g.unit_expand();
    let entries: Vec<(usize, usize, u64)> = u.edges().iter().map(|e| (e.source, e.target, 1)).collect();
    power_iteration(u.vertex_count(), &entries, tolerance)
}

/// Number of closed directed paths of length at most `horizon` in the unit
/// expansion, `sum_{t <= T} tr A^t`.
pub fn closed_path_count(g: &MetricDigraph, horizon: u32) -> BigUint {
    let u = g.unit_expand();
    let n = u.vertex_count();
    let mut power: Vec<Vec<BigUint>> = (0..n)
        .map(|i| (0..n).map(|j| BigUint::from((i == j) as u8)).collect())
        .collect();
    let mut total = BigUint::zero();
    for _ in 0..horizon {
        let mut next = vec![vec![BigUint::zero(); n]; n];
        for (i, row) in power.iter().enumerate() {
            for e in u.edges() {
                if !row[e.source].is_zero() {
                    next[i][e.target] += &row[e.source];
                }
            }
        }
        power = next;
        for (i, row) in power.iter().enumerate() {
            total += &row[i];
        }
    }
    total
}

/// `N_0(T)^(1/T)`, a slow independent estimate of the growth rate.
pub fn growth_rate_path_count(g: &MetricDigraph, horizon: u32) -> Result<f64> {
    if horizon == 0 {
        return Err(Error::InvalidParameter("horizon must be positive".into()));
    }
    let n0 = closed_path_count(g, horizon);
    if n0.is_zero() {
        return Ok(0.0);
    }
    Ok((ln_biguint(&n0) / horizon as f64).exp())
}

fn ln_biguint(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("fits").ln();
    }
    let shift = bits - 64;
    (v >> shift).to_f64().expect("64 bits").ln() + shift as f64 * std::f64::consts::LN_2
}
