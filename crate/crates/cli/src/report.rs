use std::fmt::Write as _;

use ffl_core::atlas::{asymptotic_report, valid_params, ScanFilter, SequenceParam};
use ffl_core::graph::natural_cmp;
use ffl_core::{
    build_complex, clique_polynomial, clique_polynomial_formula, dilatation_polynomial, fill_and_pull_back, gamma_for,
    gamma_from_figure, growth_rate_spectral, largest_real_root, minimizer_catalogue, scan, sequence,
    smallest_positive_root, verify_mcmullen, Family, FiberedClass, IjkClass, MetricDigraph, Section, SequenceEntry,
    SequenceName, Sign,
};
use serde::Serialize;

use crate::parse::{parse_class, parse_range, parse_triple, ClassArg, ToleranceArg};
use crate::{CliError, Command, Format};

pub const SCHEMA: &str = "ffl/1";

pub fn dispatch(cmd: &Command, format: Format, tol: &ToleranceArg) -> Result<String, CliError> {
    match cmd {
        Command::Info { class } => info(&parse_class(class)?, format, tol),
        Command::Poly { class } => poly(&parse_class(class)?, format, tol),
        Command::Graph { class, family, expand } => graph(class, family.as_deref(), *expand, format, tol),
        Command::Complex { class, family } => complex(class, family.as_deref(), format, tol),
        Command::Verify { grid } => verify(*grid, format, tol),
        Command::Sequence { name, g, n, p } => seq(name, g.as_deref(), n.as_deref(), p.as_deref(), format, tol),
        Command::Scan {
            norm_max,
            cap,
            orientable,
            non_orientable,
            genus,
            section,
        } => {
            let filter = ScanFilter {
                orientable: match (orientable, non_orientable) {
                    (true, _) => Some(true),
                    (_, true) => Some(false),
                    _ => None,
                },
                genus: *genus,
                section: section.as_deref().map(parse_section).transpose()?,
            };
            scan_cmd(*norm_max, *cap, &filter, format, tol)
        }
        Command::Fill { section, class } => fill(&parse_section(section)?, &parse_class(class)?, format, tol),
        Command::Catalogue => catalogue(format, tol),
    }
}

fn unsupported(command: &str, format: Format) -> CliError {
    let name = format!("{format:?}").to_lowercase();
    CliError::Usage(format!("{command} does not support --format {name}"))
}

fn parse_section(s: &str) -> Result<Section, CliError> {
    s.parse()
        .map_err(|e: ffl_core::Error| CliError::Usage(format!("bad section {s:?}: {e}")))
}

fn json<T: Serialize>(command: &str, tol: &ToleranceArg, body: &T) -> String {
    let mut v = serde_json::to_value(body).expect("report serializes");
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("schema".into(), SCHEMA.into());
    obj.insert("command".into(), command.into());
    obj.insert("tolerance".into(), tol.value.into());
    let mut s = serde_json::to_string_pretty(&v).expect("json value serializes");
    s.push('\n');
    s
}

fn csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn class_arg(a: &FiberedClass) -> String {
    let (x, y, z) = a.coords();
    format!("{x},{y},{z}")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// ---- info -----------------------------------------------------------------

#[derive(Serialize)]
struct InfoBody {
    class: String,
    ijk: Option<String>,
    norm: i64,
    face: String,
    surface: String,
    topology: ffl_core::FiberTopology,
    polynomial: String,
    lambda: f64,
    lambda_bracket: [f64; 2],
    normalized_entropy: f64,
}

#[derive(Serialize)]
struct ClassRow {
    param: Option<String>,
    x: i64,
    y: i64,
    z: i64,
    norm: i64,
    genus: u64,
    boundaries: u64,
    orientable: bool,
    polynomial: String,
    lambda: f64,
    ent: f64,
    tolerance: f64,
}

impl ClassRow {
    fn of(param: Option<String>, e: &SequenceEntry, tol: &ToleranceArg) -> Self {
        let (x, y, z) = e.class.coords();
        ClassRow {
            param,
            x,
            y,
            z,
            norm: e.class.norm(),
            genus: e.topology.genus,
            boundaries: e.topology.total_boundary(),
            orientable: e.topology.orientable,
            polynomial: e.polynomial.to_string(),
            lambda: e.dilatation,
            ent: e.normalized_entropy,
            tolerance: tol.value,
        }
    }
}

fn info(c: &ClassArg, format: Format, tol: &ToleranceArg) -> Result<String, CliError> {
    let a = c.xyz();
    let topology = a.fiber_topology()?;
    let f = dilatation_polynomial(&a);
    let bracket = largest_real_root::<f64>(&f, &tol.tolerance)?;
    let lambda = bracket.midpoint();
    let ijk = match c {
        ClassArg::Ijk(k) => Some(*k),
        ClassArg::Xyz(a) => a.to_ijk().ok(),
    };
    let body = InfoBody {
        class: class_arg(&a),
        ijk: ijk.map(|c| c.to_string()),
        norm: a.norm(),
        face: a.projection_to_face().to_string(),
        surface: topology.surface_name(),
        topology,
        polynomial: f.to_string(),
        lambda,
        lambda_bracket: [bracket.low, bracket.high],
        normalized_entropy: a.norm() as f64 * lambda.ln(),
    };
    match format {
        Format::Json => Ok(json("info", tol, &body)),
        Format::Csv => {
            let e = SequenceEntry::of_class(&a, &tol.tolerance)?;
            csv(&[ClassRow::of(None, &e, tol)])
        }
        Format::Text => {
            let t = &body.topology;
            let mut s = String::new();
            let _ = writeln!(s, "class        {a}");
            if let Some(ijk) = &body.ijk {
                let _ = writeln!(s, "ijk          {ijk}");
            }
            let _ = writeln!(s, "norm         {}", body.norm);
            let _ = writeln!(s, "face         {}", body.face);
            let _ = writeln!(s, "fiber        {} (genus {})", body.surface, t.genus);
            let _ = writeln!(
                s,
                "boundary     alpha {}, beta {}, gamma {}",
                t.boundary_alpha, t.boundary_beta, t.boundary_gamma
            );
            let _ = writeln!(
                s,
                "prongs       alpha {}, beta {}, gamma {}",
                t.prongs_alpha, t.prongs_beta, t.prongs_gamma
            );
            let _ = writeln!(s, "orientable   {}", yes(t.orientable));
            let _ = writeln!(s, "polynomial   {}", body.polynomial);
            let _ = writeln!(s, "lambda       {lambda:.12}");
            let _ = writeln!(s, "entropy      {:.12} (norm * log lambda)", body.normalized_entropy);
            let _ = writeln!(s, "tolerance    {:e}", tol.value);
            Ok(s)
        }
        Format::Dot => Err(unsupported("info", format)),
    }
}

// ---- poly -----------------------------------------------------------------

#[derive(Serialize)]
struct PolyBody {
    class: String,
    polynomial: String,
    degree: usize,
    reciprocal: bool,
    clique_polynomial: Option<String>,
    lambda_bracket: [f64; 2],
    mu_bracket: [f64; 2],
}

fn poly(c: &ClassArg, format: Format, tol: &ToleranceArg) -> Result<String, CliError> {
    let a = c.xyz();
    let f = dilatation_polynomial(&a);
    let q = c.ijk().ok().map(|c| clique_polynomial_formula(&c));
    let lam = largest_real_root::<f64>(&f, &tol.tolerance)?;
    let mu = smallest_positive_root::<f64>(&f, &tol.tolerance)?;
    let body = PolyBody {
        class: class_arg(&a),
        polynomial: f.to_string(),
        degree: f.degree().unwrap_or(0),
        reciprocal: f.is_reciprocal(),
        clique_polynomial: q.as_ref().map(|q| q.to_string()),
        lambda_bracket: [lam.low, lam.high],
        mu_bracket: [mu.low, mu.high],
    };
    match format {
        Format::Json => Ok(json("poly", tol, &body)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "class        {a}");
            let _ = writeln!(s, "f            {}", body.polynomial);
            let _ = writeln!(s, "degree       {}", body.degree);
            let _ = writeln!(s, "reciprocal   {}", yes(body.reciprocal));
            if let Some(q) = &q {
                let _ = writeln!(s, "Q            {q}");
                let _ = writeln!(s, "f = Q        {}", yes(*q == f));
            }
            let _ = writeln!(s, "lambda in    [{:.12}, {:.12}]", lam.low, lam.high);
            let _ = writeln!(s, "mu in        [{:.12}, {:.12}]", mu.low, mu.high);
            let _ = writeln!(s, "tolerance    {:e}", tol.value);
            Ok(s)
        }
        _ => Err(unsupported("poly", format)),
    }
}

// ---- graph / complex ------------------------------------------------------

struct Resolved {
    name: String,
    family: Family,
    graph: MetricDigraph,
}

fn resolve(class: &str, family: Option<&str>) -> Result<Resolved, CliError> {
    match family {
        Some(name) => {
            let family: Family = name
                .parse()
                .map_err(|e: ffl_core::Error| CliError::Usage(format!("bad family {name:?}: {e}")))?;
            let (i, j, k) = parse_triple(class)?;
            let graph = gamma_from_figure(family, i, j, k)?;
            Ok(Resolved {
                name: format!("{family}({i},{j},{k})"),
                family,
                graph,
            })
        }
        None => {
            let c = parse_class(class)?.ijk()?;
            Ok(Resolved {
                name: c.to_string(),
                family: Family::route(&c),
                graph: gamma_for(&c),
            })
        }
    }
}

#[derive(Serialize)]
struct Growth {
    value: f64,
    lower: f64,
    upper: f64,
}

#[derive(Serialize)]
struct GraphBody<'a> {
    name: &'a str,
    family: String,
    graph: &'a MetricDigraph,
    total_length: u64,
    growth_rate: Growth,
}

fn graph(
    class: &str,
    family: Option<&str>,
    expand: bool,
    format: Format,
    tol: &ToleranceArg,
) -> Result<String, CliError> {
    let r = resolve(class, family)?;
    let g = if expand { r.graph.unit_expand() } else { r.graph.clone() };
    let est = growth_rate_spectral::<f64>(&g, &tol.tolerance)?;
    let body = GraphBody {
        name: &r.name,
        family: r.family.to_string(),
        graph: &g,
        total_length: g.total_length(),
        growth_rate: Growth {
            value: est.value,
            lower: est.lower,
            upper: est.upper,
        },
    };
    match format {
        Format::Dot => Ok(g.to_dot(&r.name)),
        Format::Json => Ok(json("graph", tol, &body)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "graph        {} [{}]", r.name, r.family);
            let _ = writeln!(s, "vertices     {}", g.vertex_count());
            let _ = writeln!(s, "edges        {}", g.edge_count());
            let _ = writeln!(s, "length       {}", g.total_length());
            let mut edges: Vec<_> = g.edges().iter().collect();
            edges.sort_by(|a, b| {
                natural_cmp(g.label(a.source), g.label(b.source))
                    .then_with(|| natural_cmp(g.label(a.target), g.label(b.target)))
                    .then(a.length.cmp(&b.length))
            });
            for e in edges {
                let _ = writeln!(
                    s,
                    "  {} -> {} (length {})",
                    g.label(e.source),
                    g.label(e.target),
                    e.length
                );
            }
            let _ = writeln!(
                s,
                "growth rate  {:.12} in [{:.12}, {:.12}]",
                est.value, est.lower, est.upper
            );
            let _ = writeln!(s, "tolerance    {:e}", tol.value);
            Ok(s)
        }
        Format::Csv => Err(unsupported("graph", format)),
    }
}

#[derive(Serialize)]
struct CurveOut {
    weight: u64,
    vertices: Vec<String>,
}

#[derive(Serialize)]
struct ComplexBody<'a> {
    name: &'a str,
    family: String,
    complex: &'a ffl_core::CurveComplex,
    curves: Vec<CurveOut>,
    clique_polynomial: String,
    mu_bracket: [f64; 2],
}

fn complex(class: &str, family: Option<&str>, format: Format, tol: &ToleranceArg) -> Result<String, CliError> {
    let r = resolve(class, family)?;
    let cx = build_complex(&r.graph);
    let q = clique_polynomial(&cx);
    let mu = smallest_positive_root::<f64>(&q, &tol.tolerance)?;
    let curves = cx
        .curves()
        .iter()
        .map(|c| CurveOut {
            weight: c.weight,
            vertices: c.labels(&r.graph).into_iter().map(String::from).collect(),
        })
        .collect::<Vec<_>>();
    match format {
        Format::Dot => Ok(cx.to_dot(&r.name)),
        Format::Json => {
            let body = ComplexBody {
                name: &r.name,
                family: r.family.to_string(),
                complex: &cx,
                curves,
                clique_polynomial: q.to_string(),
                mu_bracket: [mu.low, mu.high],
            };
            Ok(json("complex", tol, &body))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "complex      {} [{}]", r.name, r.family);
            let _ = writeln!(s, "shape        {}", cx.shape().unwrap_or_else(|| "-".into()));
            for (n, c) in curves.iter().enumerate() {
                let _ = writeln!(s, "  c{n}  weight {:<3} {}", c.weight, c.vertices.join(" "));
            }
            let edges: Vec<String> = cx.edges().iter().map(|(a, b)| format!("c{a}-c{b}")).collect();
            let _ = writeln!(
                s,
                "edges        {}",
                if edges.is_empty() { "-".into() } else { edges.join(" ") }
            );
            let _ = writeln!(s, "clique poly  {q}");
            let _ = writeln!(s, "mu in        [{:.12}, {:.12}]", mu.low, mu.high);
            let _ = writeln!(s, "tolerance    {:e}", tol.value);
            Ok(s)
        }
        Format::Csv => Err(unsupported("complex", format)),
    }
}

// ---- verify ---------------------------------------------------------------

#[derive(Serialize)]
struct VerifyRow {
    class: String,
    family: String,
    lambda: f64,
    mu: f64,
    product_error: f64,
    polynomial_match: bool,
    pass: bool,
    tolerance: f64,
}

#[derive(Serialize)]
struct VerifyBody<'a> {
    grid: i64,
    checks: usize,
    passed: usize,
    max_product_error: f64,
    rows: &'a [VerifyRow],
}

fn verify(n: i64, format: Format, tol: &ToleranceArg) -> Result<String, CliError> {
    if n < 1 {
        return Err(CliError::Usage(format!("--grid must be at least 1, got {n}")));
    }
    if format == Format::Dot {
        return Err(unsupported("verify", format));
    }
    let mut rows = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let c = IjkClass::new(i, j, k, sign)?;
                    let r = verify_mcmullen(&gamma_for(&c), tol.value)?;
                    let polynomial_match = r.polynomial == clique_polynomial_formula(&c);
                    rows.push(VerifyRow {
                        class: c.to_string(),
                        family: Family::route(&c).to_string(),
                        lambda: r.lambda,
                        mu: r.mu,
                        product_error: r.product_error,
                        polynomial_match,
                        pass: r.pass && polynomial_match,
                        tolerance: tol.value,
                    });
                }
            }
        }
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    let worst = rows.iter().map(|r| r.product_error).fold(0.0, f64::max);
    if passed < rows.len() {
        let failed: Vec<&str> = rows
            .iter()
            .filter(|r| !r.pass)
            .take(8)
            .map(|r| r.class.as_str())
            .collect();
        return Err(CliError::Verification(format!(
            "{} of {} checks failed at tolerance {:e}, e.g. {}",
            rows.len() - passed,
            rows.len(),
            tol.value,
            failed.join(", ")
        )));
    }
    match format {
        Format::Json => {
            Ok(json("verify", tol, &VerifyBody { grid: n, checks: rows.len(), passed, max_product_error: worst, rows: &rows }))
        }
        Format::Csv => csv(&rows),
        _ => Ok(format!(
            "{} checks, {passed} passed (both signs, 1..={n} cubed)\nmax |lambda*mu - 1|  {worst:.3e}\ntolerance            {:e}\n",
            rows.len(),
            tol.value
        )),
    }
}

// ---- sequence -------------------------------------------------------------

#[derive(Serialize)]
struct SequenceRow {
    param: String,
    x: i64,
    y: i64,
    z: i64,
    norm: i64,
    genus: u64,
    boundaries: u64,
    orientable: bool,
    polynomial: String,
    lambda: f64,
    ent: f64,
    multiplier: Option<i64>,
    scaled_log_lambda: Option<f64>,
    limit: Option<f64>,
    relative_distance: Option<f64>,
    tolerance: f64,
}

#[derive(Serialize)]
struct SequenceBody<'a> {
    sequence: &'a str,
    section: String,
    rows: &'a [SequenceRow],
}

fn params(
    name: SequenceName,
    g: Option<&str>,
    n: Option<&str>,
    p: Option<&str>,
) -> Result<Vec<SequenceParam>, CliError> {
    if name == SequenceName::Tsai {
        if n.is_some() {
            return Err(CliError::Usage("tsai takes --g and --p, not --n".into()));
        }
        let (Some(g), Some(p)) = (g, p) else {
            return Err(CliError::Usage("tsai needs both --g and --p".into()));
        };
        let (glo, ghi) = parse_range(g)?;
        let (plo, phi) = parse_range(p)?;
        let all: Vec<SequenceParam> = (glo..=ghi)
            .flat_map(|g| (plo..=phi).map(move |p| SequenceParam::GenusPunctures(g, p)))
            .collect();
        return filter_params(name, all);
    }
    if p.is_some() {
        return Err(CliError::Usage(format!("--p only applies to tsai, not {name}")));
    }
    let (given, other) = if name.parameter() == "g" { (g, n) } else { (n, g) };
    if other.is_some() {
        return Err(CliError::Usage(format!("{name} is indexed by --{}", name.parameter())));
    }
    let range = given.ok_or_else(|| CliError::Usage(format!("{name} needs --{}", name.parameter())))?;
    let (lo, hi) = parse_range(range)?;
    if lo == hi {
        return filter_params(name, vec![SequenceParam::Single(lo)]);
    }
    let valid = valid_params(name, lo, hi);
    if valid.is_empty() {
        name.class(SequenceParam::Single(lo))?;
    }
    Ok(valid)
}

/// Keeps valid parameters; a lone or empty selection reports why.
fn filter_params(name: SequenceName, all: Vec<SequenceParam>) -> Result<Vec<SequenceParam>, CliError> {
    let valid: Vec<SequenceParam> = all.iter().copied().filter(|&p| name.class(p).is_ok()).collect();
    if valid.is_empty() || all.len() == 1 {
        if let Some(&first) = all.first() {
            name.class(first)?;
        }
    }
    Ok(valid)
}

fn seq(
    name: &str,
    g: Option<&str>,
    n: Option<&str>,
    p: Option<&str>,
    format: Format,
    tol: &ToleranceArg,
) -> Result<String, CliError> {
    let name: SequenceName = name
        .parse()
        .map_err(|e: ffl_core::Error| CliError::Usage(format!("{e}; expected one of {}", sequence_names())))?;
    if format == Format::Dot {
        return Err(unsupported("sequence", format));
    }
    let params = params(name, g, n, p)?;
    let asymptotic = if name.asymptotics(SequenceParam::Single(2)).is_some() {
        Some(asymptotic_report(name, &params, &tol.tolerance)?)
    } else {
        None
    };
    let mut rows = Vec::new();
    for (n, &param) in params.iter().enumerate() {
        let e = sequence(name, param, &tol.tolerance)?;
        let base = ClassRow::of(Some(param.to_string()), &e, tol);
        let a = asymptotic.as_ref().map(|r| &r[n]);
        rows.push(SequenceRow {
            param: param.to_string(),
            x: base.x,
            y: base.y,
            z: base.z,
            norm: base.norm,
            genus: base.genus,
            boundaries: base.boundaries,
            orientable: base.orientable,
            polynomial: base.polynomial,
            lambda: base.lambda,
            ent: base.ent,
            multiplier: a.map(|a| a.multiplier),
            scaled_log_lambda: a.map(|a| a.value),
            limit: a.map(|a| a.limit),
            relative_distance: a.map(|a| a.relative_distance),
            tolerance: tol.value,
        });
    }
    match format {
        Format::Csv => csv(&rows),
        Format::Json => Ok(json(
            "sequence",
            tol,
            &SequenceBody {
                sequence: name.name(),
                section: name.section().to_string(),
                rows: &rows,
            },
        )),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "sequence {} in {}, tolerance {:e}", name, name.section(), tol.value);
            let _ = writeln!(
                s,
                "{:>8} {:>16} {:>5} {:>5} {:>4} {:>4} {:>15} {:>15} {:>15} {:>9}",
                if name == SequenceName::Tsai {
                    "(g,p)"
                } else {
                    name.parameter()
                },
                "class",
                "norm",
                "genus",
                "bd",
                "ori",
                "lambda",
                "ent",
                "m*log(lambda)",
                "to limit"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>8} {:>16} {:>5} {:>5} {:>4} {:>4} {:>15.12} {:>15.12} {:>15} {:>9}",
                    r.param,
                    format!("({},{},{})", r.x, r.y, r.z),
                    r.norm,
                    r.genus,
                    r.boundaries,
                    yes(r.orientable),
                    r.lambda,
                    r.ent,
                    r.scaled_log_lambda
                        .map(|v| format!("{v:.12}"))
                        .unwrap_or_else(|| "-".into()),
                    r.relative_distance
                        .map(|v| format!("{:.4}%", 100.0 * v))
                        .unwrap_or_else(|| "-".into()),
                );
            }
            Ok(s)
        }
    }
}

fn sequence_names() -> String {
    SequenceName::ALL
        .iter()
        .map(|n| n.name())
        .collect::<Vec<_>>()
        .join(", ")
}

// ---- scan -----------------------------------------------------------------

#[derive(Serialize)]
struct ScanBody<'a> {
    norm_max: i64,
    count: usize,
    rows: &'a [ClassRow],
}

fn scan_cmd(
    norm_max: i64,
    cap: i64,
    filter: &ScanFilter,
    format: Format,
    tol: &ToleranceArg,
) -> Result<String, CliError> {
    if format == Format::Dot {
        return Err(unsupported("scan", format));
    }
    let entries = scan(norm_max, filter, cap, &tol.tolerance)?;
    let rows: Vec<ClassRow> = entries.iter().map(|e| ClassRow::of(None, e, tol)).collect();
    match format {
        Format::Csv => csv(&rows),
        Format::Json => Ok(json(
            "scan",
            tol,
            &ScanBody {
                norm_max,
                count: rows.len(),
                rows: &rows,
            },
        )),
        _ => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{} classes with norm <= {norm_max}, tolerance {:e}",
                rows.len(),
                tol.value
            );
            let _ = writeln!(
                s,
                "{:>16} {:>5} {:>5} {:>4} {:>4} {:>15} {:>15}",
                "class", "norm", "genus", "bd", "ori", "lambda", "ent"
            );
            for (r, e) in rows.iter().zip(&entries) {
                let _ = writeln!(
                    s,
                    "{:>16} {:>5} {:>5} {:>4} {:>4} {:>15.12} {:>15.12}{}",
                    e.class.to_string(),
                    r.norm,
                    r.genus,
                    r.boundaries,
                    yes(r.orientable),
                    r.lambda,
                    r.ent,
                    if e.swap_twin { "  (+ swap)" } else { "" }
                );
            }
            Ok(s)
        }
    }
}

// ---- fill -----------------------------------------------------------------

#[derive(Serialize)]
struct FillBody {
    #[serde(flatten)]
    report: ffl_core::FillReport,
    section_name: String,
    fiber_surface: String,
    filled_surface: String,
}

fn fill(section: &Section, c: &ClassArg, format: Format, tol: &ToleranceArg) -> Result<String, CliError> {
    let r = fill_and_pull_back(section, &c.xyz(), &tol.tolerance)?;
    let body = FillBody {
        section_name: section.to_string(),
        fiber_surface: r.fiber.surface_name(),
        filled_surface: r.surface_name(),
        report: r,
    };
    match format {
        Format::Json => Ok(json("fill", tol, &body)),
        Format::Text => {
            let r = &body.report;
            let mut s = String::new();
            let _ = writeln!(s, "section      {}", body.section_name);
            let _ = writeln!(s, "class        {}", r.class);
            let _ = writeln!(s, "fiber        {}", body.fiber_surface);
            let _ = writeln!(s, "filled       {}", body.filled_surface);
            let _ = writeln!(s, "capped       {}-pronged", r.filled_prongs);
            let _ = writeln!(s, "lambda       {:.12}", r.dilatation);
            let _ = writeln!(s, "pA extends   {}", yes(r.extends_pseudo_anosov));
            let _ = writeln!(s, "tolerance    {:e}", tol.value);
            Ok(s)
        }
        _ => Err(unsupported("fill", format)),
    }
}

// ---- catalogue ------------------------------------------------------------

#[derive(Serialize)]
struct CatalogueRow {
    name: String,
    class: Option<String>,
    polynomial: String,
    value: f64,
    status: ffl_core::atlas::Status,
    tolerance: f64,
}

#[derive(Serialize)]
struct CatalogueBody<'a> {
    entries: &'a [CatalogueRow],
}

fn catalogue(format: Format, tol: &ToleranceArg) -> Result<String, CliError> {
    let rows: Vec<CatalogueRow> = minimizer_catalogue(&tol.tolerance)?
        .into_iter()
        .map(|e| CatalogueRow {
            name: e.name,
            class: e.class,
            polynomial: e.polynomial.to_string(),
            value: e.value,
            status: e.status,
            tolerance: tol.value,
        })
        .collect();
    match format {
        Format::Csv => csv(&rows),
        Format::Json => Ok(json("catalogue", tol, &CatalogueBody { entries: &rows })),
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let status = format!("{:?}", r.status).to_lowercase();
                let _ = writeln!(
                    s,
                    "{:<18} {:<12} {:<15.12} {:<12} {}",
                    r.name,
                    r.class.as_deref().unwrap_or("-"),
                    r.value,
                    status,
                    r.polynomial
                );
            }
            let _ = writeln!(s, "tolerance {:e}", tol.value);
            Ok(s)
        }
        Format::Dot => Err(unsupported("catalogue", format)),
    }
}
