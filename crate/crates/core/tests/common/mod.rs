#![allow(dead_code)]

use ffl_core::curves::CurveComplex;
use ffl_core::{IntPolynomial, MetricDigraph};

/// `det(I - A(t))`, where `A(t)_{uv}` sums `t^length` over edges `u -> v`,
/// by fraction-free elimination. Equals the clique polynomial of the curve
/// complex without enumerating any cycle.
pub fn determinant_oracle(g: &MetricDigraph) -> IntPolynomial {
    let n = g.vertex_count();
    let mut m: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        IntPolynomial::one()
                    } else {
                        IntPolynomial::zero()
                    }
                })
                .collect()
        })
        .collect();
    for e in g.edges() {
        let t = IntPolynomial::monomial(1, e.length as usize);
        m[e.source][e.target] = &m[e.source][e.target] - &t;
    }
    let mut sign = 1i64;
    let mut prev = IntPolynomial::one();
    for k in 0..n {
        let Some(pivot) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return IntPolynomial::zero();
        };
        if pivot != k {
            m.swap(pivot, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.divide_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return IntPolynomial::one();
    }
    &IntPolynomial::from_coeffs([sign]) * &m[n - 1][n - 1]
}

/// Clique polynomial by filtering every vertex subset.
pub fn brute_force_clique_polynomial(c: &CurveComplex) -> IntPolynomial {
    let n = c.len();
    assert!(n <= 20);
    let w = c.weights();
    let mut terms = Vec::new();
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = vs
            .iter()
            .enumerate()
            .all(|(a, &u)| vs[a + 1..].iter().all(|&v| c.is_adjacent(u, v)));
        if clique {
            let weight: u64 = vs.iter().map(|&v| w[v]).sum();
            terms.push((if vs.len().is_multiple_of(2) { 1 } else { -1 }, weight as usize));
        }
    }
    IntPolynomial::from_terms(&terms)
}

/// Every class `(i,j,k)` of the grid with both signs; `i = 0` only once.
pub fn ijk_grid(lo: i64, hi_ij: i64, hi_k: i64) -> Vec<ffl_core::IjkClass> {
    let mut out = Vec::new();
    for i in lo..=hi_ij {
        for j in lo..=hi_ij {
            for k in 1..=hi_k {
                out.push(ffl_core::IjkClass::plus(i, j, k).unwrap());
                if i > 0 {
                    out.push(ffl_core::IjkClass::minus(i, j, k).unwrap());
                }
            }
        }
    }
    out
}
