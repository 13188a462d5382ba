mod common;

use common::{brute_force_clique_polynomial, determinant_oracle, ijk_grid};
use ffl_core::spectral::closed_path_count;
use ffl_core::{
    build_complex, clique_polynomial, clique_polynomial_formula, complex_from_caption, dilatation_polynomial,
    gamma_for, growth_rate_path_count, growth_rate_spectral, largest_root_f64, simple_cycles, verify_mcmullen, Family,
    IjkClass, IncidenceMatrix, MetricDigraph, Sign, Tolerance,
};

fn tol() -> Tolerance {
    Tolerance::default()
}

#[test]
fn f_equals_q_on_the_grid() {
    let grid = ijk_grid(0, 6, 6);
    // i = 0 is counted once, so 7·7·6 plus 6·7·6 minus classes.
    assert_eq!(grid.len(), 7 * 7 * 6 + 6 * 7 * 6);
    for c in grid {
        assert_eq!(dilatation_polynomial(&c.to_xyz()), clique_polynomial_formula(&c), "{c}");
    }
}

#[test]
fn complex_polynomial_matches_formula_and_determinant() {
    for c in ijk_grid(0, 5, 5) {
        let g = gamma_for(&c);
        let cx = build_complex(&g);
        let q = clique_polynomial(&cx);
        assert_eq!(q, clique_polynomial_formula(&c), "{c}");
        assert_eq!(q, determinant_oracle(&g), "{c}");
        if cx.len() <= 12 {
            assert_eq!(q, brute_force_clique_polynomial(&cx), "{c}");
        }
    }
}

#[test]
fn graphs_are_strongly_connected_with_norm_many_real_edges() {
    for c in ijk_grid(0, 5, 5) {
        let g = gamma_for(&c);
        assert!(g.is_strongly_connected(), "{c}");
        assert_eq!(g.unit_expand().vertex_count() as i64, c.norm(), "{c}");
        assert!((0..g.vertex_count()).all(|v| g.out_degree(v) >= 1 && g.in_degree(v) >= 1));
    }
}

#[test]
fn caption_complexes_are_isomorphic_to_built_ones() {
    for c in ijk_grid(0, 5, 5) {
        let family = Family::route(&c);
        let built = build_complex(&gamma_for(&c));
        let caption = complex_from_caption(family, c.i, c.j, c.k).unwrap();
        assert!(built.is_isomorphic(&caption), "{c} {family}");
        assert!(built.shape().is_some(), "{c}");
    }
}

#[test]
fn plus_cycle_weights() {
    for i in 1..=5u64 {
        for j in 1..=5u64 {
            for k in 1..=5u64 {
                let g = ffl_core::gamma_plus(i as i64, j as i64, k as i64).unwrap();
                let mut w: Vec<u64> = simple_cycles(&g).iter().map(|c| c.weight).collect();
                w.sort_unstable();
                let mut expect = vec![k, i + k, j + k, i + j + k, j + 2 * k];
                expect.sort_unstable();
                assert_eq!(w, expect);
            }
        }
    }
}

#[test]
fn spectral_radius_matches_polynomial_root() {
    for c in ijk_grid(1, 5, 5) {
        let g = gamma_for(&c);
        let spectral = growth_rate_spectral::<f64>(&g, &tol()).unwrap().value;
        let root = largest_root_f64(&dilatation_polynomial(&c.to_xyz()), &tol()).unwrap();
        assert!((spectral - root).abs() < 1e-8, "{c}: {spectral} vs {root}");
    }
}

#[test]
fn perron_frobenius_exactly_for_primitive_classes() {
    for c in ijk_grid(1, 4, 4) {
        let m = IncidenceMatrix::of_graph(&gamma_for(&c));
        let primitive = c.to_xyz().is_primitive();
        assert_eq!(m.is_perron_frobenius(), primitive, "{c}");
        if primitive {
            let rho = m.spectral_radius::<f64>(&tol()).unwrap().value;
            let root = largest_root_f64(&dilatation_polynomial(&c.to_xyz()), &tol()).unwrap();
            assert!((rho - root).abs() < 1e-8, "{c}");
        }
    }
}

#[test]
fn mcmullen_holds_on_the_grid() {
    for c in ijk_grid(1, 5, 5) {
        let r = verify_mcmullen(&gamma_for(&c), 1e-8).unwrap();
        assert!(r.pass, "{c}: {r:?}");
        assert_eq!(r.polynomial, clique_polynomial_formula(&c));
    }
}

#[test]
fn path_count_oracle_agrees_with_power_iteration() {
    for c in ijk_grid(1, 5, 5) {
        let g = gamma_for(&c);
        let spectral = growth_rate_spectral::<f64>(&g, &tol()).unwrap().value;
        let counted = growth_rate_path_count(&g, 64).unwrap();
        assert!((counted - spectral).abs() < 0.05, "{c}: {counted} vs {spectral}");
    }
}

#[test]
fn path_count_estimates_tighten() {
    for c in [IjkClass::plus(1, 4, 1).unwrap(), IjkClass::minus(3, 2, 2).unwrap()] {
        let g = gamma_for(&c);
        let spectral = growth_rate_spectral::<f64>(&g, &tol()).unwrap().value;
        let mut last = f64::INFINITY;
        for t in [8, 16, 32, 64] {
            let d = (growth_rate_path_count(&g, t).unwrap() - spectral).abs();
            assert!(d <= last, "{c} at T={t}");
            last = d;
        }
    }
}

#[test]
fn closed_paths_of_a_triangle() {
    let g = MetricDigraph::from_labeled_edges(&[("a", "a", 3)]).unwrap();
    // tr A^t = 3 when 3 | t
    assert_eq!(closed_path_count(&g, 9), 9u32.into());
}

#[test]
fn minus_sign_routing_covers_all_minus_families() {
    let mut seen = std::collections::BTreeSet::new();
    for c in ijk_grid(0, 5, 5) {
        if c.sign == Sign::Minus {
            seen.insert(Family::route(&c));
        }
    }
    assert_eq!(seen.len(), 4);
}
