//! Acceptance criteria. Prints one line per criterion and exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::ijk_grid;
use ffl_core::atlas::{lattice, ScanFilter, SequenceName, SequenceParam, DEFAULT_NORM_CAP};
use ffl_core::{
    build_complex, clique_polynomial, clique_polynomial_formula, dilatation_polynomial, gamma_for, lanneau_thiffeault,
    largest_root_f64, scan, seed_graph, sequence, smallest_positive_root, FiberedClass, IjkClass, IncidenceMatrix,
    IntPolynomial, Sign, Tolerance,
};

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn tol() -> Tolerance {
    Tolerance::default()
}

fn lambda(x: i64, y: i64, z: i64) -> f64 {
    let a = FiberedClass::new(x, y, z).unwrap();
    largest_root_f64(&dilatation_polynomial(&a), &tol()).unwrap()
}

fn quoted_dilatations() -> Outcome {
    let cases = [((2, 6, 1), 1.7220), ((1, 2, -3), 1.7816), ((3, 5, 0), 1.4134)];
    let mut worst: f64 = 0.0;
    for ((x, y, z), quoted) in cases {
        worst = worst.max((lambda(x, y, z) - quoted).abs());
    }
    outcome(worst < 1e-4, format!("max deviation {worst:.2e}"))
}

fn f_equals_q() -> Outcome {
    let mut grid = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for i in 0..=6 {
            for j in 0..=6 {
                for k in 1..=6 {
                    grid.push(IjkClass::new(i, j, k, sign).unwrap());
                }
            }
        }
    }
    let bad = grid
        .iter()
        .filter(|c| dilatation_polynomial(&c.to_xyz()) != clique_polynomial_formula(c))
        .count();
    outcome(
        grid.len() == 588 && bad == 0,
        format!("{} cases, {bad} mismatches", grid.len()),
    )
}

fn mcmullen() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut mismatched = 0;
    let grid = ijk_grid(1, 5, 5);
    for c in &grid {
        let g = gamma_for(c);
        let q = clique_polynomial(&build_complex(&g));
        if q != clique_polynomial_formula(c) {
            mismatched += 1;
        }
        let growth = ffl_core::growth_rate_spectral::<f64>(&g, &tol()).unwrap().value;
        let mu = smallest_positive_root::<f64>(&q, &tol()).unwrap().midpoint();
        worst = worst.max((growth * mu - 1.0).abs());
    }
    outcome(
        worst < 1e-8 && mismatched == 0,
        format!(
            "{} graphs, max |λμ-1| = {worst:.2e}, {mismatched} polynomial mismatches",
            grid.len()
        ),
    )
}

fn factorizations() -> Outcome {
    let mut failures = Vec::new();
    let f = dilatation_polynomial(&FiberedClass::new(2, 6, 1).unwrap());
    let lhs = &ffl_core::polynomial::t_pow_plus_one(3) * &IntPolynomial::from_coeffs([1, -1, -1, -1, 1]);
    if lhs != f || f.divide_exact(&ffl_core::polynomial::t_pow_plus_one(3)).is_err() {
        failures.push("(2,6,1)".to_string());
    }
    for g in [2, 4, 8, 10] {
        let q = clique_polynomial_formula(&IjkClass::plus(1, g + 2, g - 1).unwrap());
        let d = ffl_core::polynomial::t_pow_plus_one(g as usize + 1);
        let lt = lanneau_thiffeault(g, 1).unwrap();
        if &d * &lt != q || q.divide_exact(&d).ok() != Some(lt) {
            failures.push(format!("g={g}"));
        }
    }
    outcome(failures.is_empty(), format!("5 identities, failures: {failures:?}"))
}

fn fiber_topology() -> Outcome {
    let mut failures = Vec::new();
    let t = FiberedClass::new(2, 6, 1).unwrap().fiber_topology().unwrap();
    if t.surface_name() != "Σ_{2,5}" || !t.orientable {
        failures.push("(2,6,1)".to_string());
    }
    let t = FiberedClass::new(3, 5, 0).unwrap().fiber_topology().unwrap();
    if t.surface_name() != "Σ_{0,10}" {
        failures.push("(3,5,0)".to_string());
    }
    for (g, p) in [(1, 3), (2, 4), (3, 5)] {
        let e = sequence(SequenceName::Tsai, SequenceParam::GenusPunctures(g, p), &tol()).unwrap();
        let t = e.topology;
        let expect = format!("Σ_{{{g},{}}}", 2 * p + 4);
        if t.surface_name() != expect || t.boundary_beta != (2 * p + 1) as u64 {
            failures.push(format!("tsai ({g},{p}) gave {}", t.surface_name()));
        }
    }
    outcome(failures.is_empty(), format!("5 goldens, failures: {failures:?}"))
}

fn perron_frobenius() -> Outcome {
    let grid = ijk_grid(1, 5, 5);
    let mut not_pf = Vec::new();
    let mut worst: f64 = 0.0;
    for c in &grid {
        let m = IncidenceMatrix::of_graph(&gamma_for(c));
        if !m.is_perron_frobenius() {
            not_pf.push(c.to_xyz());
            continue;
        }
        let rho = m.spectral_radius::<f64>(&tol()).unwrap().value;
        worst = worst.max((rho - largest_root_f64(&dilatation_polynomial(&c.to_xyz()), &tol()).unwrap()).abs());
    }
    let seed = IncidenceMatrix::new(vec![vec![3, 2], vec![1, 1]]).unwrap();
    let seed_ok = IncidenceMatrix::of_graph(&seed_graph()).rows() == seed.rows();
    let seed_err = (seed.spectral_radius::<f64>(&tol()).unwrap().value - (2.0 + 3f64.sqrt())).abs();
    let all_primitive = not_pf.iter().all(|a| !a.is_primitive());
    outcome(
        not_pf.is_empty() && worst < 1e-8 && seed_ok && seed_err < 1e-10,
        format!(
            "{} of {} grid matrices primitive (non-PF classes all non-primitive: {all_primitive}), \
             eigenvalue error {worst:.2e}, seed error {seed_err:.2e}",
            grid.len() - not_pf.len(),
            grid.len()
        ),
    )
}

fn asymptotics() -> Outcome {
    let golden = ((3.0 + 5f64.sqrt()) / 2.0).ln();
    let braid = 2.0 * (2.0 + 3f64.sqrt()).ln();
    let values: Vec<(i64, f64)> = (2..=100)
        .filter(|g| matches!(g % 6, 2 | 4))
        .map(|g| {
            let e = sequence(SequenceName::LtEvenGenus, SequenceParam::Single(g), &tol()).unwrap();
            (g, g as f64 * e.dilatation.ln())
        })
        .collect();
    let monotone = values.windows(2).all(|w| w[1].1 <= w[0].1);
    let (_, at100) = *values.last().unwrap();
    let lt_dist = (at100 - golden).abs() / golden;
    let e = sequence(SequenceName::Braid1, SequenceParam::Single(50), &tol()).unwrap();
    let plus = (101.0 * e.dilatation.ln() - braid).abs() / braid;
    let minus = (99.0 * e.dilatation.ln() - braid).abs() / braid;
    outcome(
        monotone && lt_dist < 0.01 && plus < 0.02,
        format!(
            "LT monotone {monotone}, distance at g=100 {:.3}%; braid (2n+1)·log λ at n=50 off by {:.3}% \
             ((2n-1)·log λ off by {:.3}%)",
            100.0 * lt_dist,
            100.0 * plus,
            100.0 * minus
        ),
    )
}

fn property_suites() -> Outcome {
    let mut failures = Vec::new();
    let grid = ijk_grid(0, 8, 8);
    for c in &grid {
        let a = c.to_xyz();
        if IjkClass::from_xyz(&a).ok() != Some(*c) {
            failures.push(format!("round trip {c}"));
        }
        if !clique_polynomial_formula(c).is_reciprocal() {
            failures.push(format!("reciprocity {c}"));
        }
    }
    for a in lattice(30) {
        if dilatation_polynomial(&a) != dilatation_polynomial(&a.swap_symmetry()) {
            failures.push(format!("swap {a}"));
        }
        let t = a.fiber_topology().unwrap();
        if t.euler_characteristic() != -a.norm() {
            failures.push(format!("euler {a}"));
        }
    }
    let render =
        || serde_json::to_string(&scan(30, &ScanFilter::default(), DEFAULT_NORM_CAP, &tol()).unwrap()).unwrap();
    if render() != render() {
        failures.push("scan determinism".into());
    }
    failures.truncate(5);
    outcome(failures.is_empty(), format!("failures: {failures:?}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("quoted dilatations", quoted_dilatations, Some(Duration::from_secs(1))),
        ("f = Q on the grid", f_equals_q, Some(Duration::from_secs(1))),
        ("McMullen cross-check", mcmullen, Some(Duration::from_secs(30))),
        ("factorization goldens", factorizations, Some(Duration::from_secs(1))),
        ("fiber topology goldens", fiber_topology, None),
        ("Perron-Frobenius", perron_frobenius, None),
        ("asymptotics", asymptotics, Some(Duration::from_secs(10))),
        ("property suites", property_suites, None),
    ];
    let mut failed = 0;
    for (n, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let pass = o.pass && budget.is_none_or(|b| elapsed < b);
        if !pass {
            failed += 1;
        }
        println!(
            "{} criterion {}: {name}: {} ({:.3}s{})",
            if pass { "PASS" } else { "FAIL" },
            n + 1,
            o.detail,
            elapsed.as_secs_f64(),
            budget.map(|b| format!(", budget {}s", b.as_secs())).unwrap_or_default()
        );
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
