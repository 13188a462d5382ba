//! Dehn-filling sections, named families of classes, the catalogue of known
//! minimal dilatations and lattice scans of the fibered cone.

use crate::error::{Error, Result};
use crate::homology::{FiberTopology, FiberedClass, IjkClass, Slope};
use crate::polynomial::{
    clique_polynomial_formula, dilatation_polynomial, lanneau_thiffeault, t_pow_plus_one, IntPolynomial,
};
use crate::roots::{largest_root_f64, Tolerance};
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cusp {
    Alpha,
    Beta,
    Gamma,
}

impl Cusp {
    fn index(self) -> usize {
        match self {
            Cusp::Alpha => 0,
            Cusp::Beta => 1,
            Cusp::Gamma => 2,
        }
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cusp::Alpha => "alpha",
            Cusp::Beta => "beta",
            Cusp::Gamma => "gamma",
        })
    }
}

impl FromStr for Cusp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "alpha" | "a" | "α" => Ok(Cusp::Alpha),
            "beta" | "b" | "β" => Ok(Cusp::Beta),
            "gamma" | "c" | "γ" => Ok(Cusp::Gamma),
            _ => Err(Error::InvalidParameter(format!("unknown cusp {s:?}"))),
        }
    }
}

/// Classes whose boundary slope at `cusp` equals `slope`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Section {
    pub cusp: Cusp,
    pub slope: Slope,
}

pub const EXCEPTIONAL_SLOPES: [Slope; 5] = [
    Slope::Infinite,
    Slope::Finite(num_rational::Ratio::new_raw(-3, 1)),
    Slope::Finite(num_rational::Ratio::new_raw(-2, 1)),
    Slope::Finite(num_rational::Ratio::new_raw(-1, 1)),
    Slope::Finite(num_rational::Ratio::new_raw(0, 1)),
];

impl Section {
    pub fn new(cusp: Cusp, slope: Slope) -> Self {
        Section { cusp, slope }
    }

    /// Filling along this slope gives a hyperbolic manifold.
    pub fn is_hyperbolic(&self) -> bool {
        !EXCEPTIONAL_SLOPES.contains(&self.slope)
    }

    /// With `r = p/q`: `-p·x = q(y+z)`, `-p·y = q(z+x)` or `-p·z = q(x+y)`.
    pub fn contains(&self, a: &FiberedClass) -> bool {
        let (x, y, z) = a.coords();
        let (p, q) = self.slope.parts();
        let (lhs, rhs) = match self.cusp {
            Cusp::Alpha => (x, y + z),
            Cusp::Beta => (y, z + x),
            Cusp::Gamma => (z, x + y),
        };
        -(p as i128) * lhs as i128 == q as i128 * rhs as i128
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}({})", self.cusp, self.slope)
    }
}

impl FromStr for Section {
    type Err = Error;
    /// `beta:-1/2`, `gamma:inf`.
    fn from_str(s: &str) -> Result<Self> {
        let (c, r) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("section {s:?} must look like cusp:slope")))?;
        Ok(Section {
            cusp: c.parse()?,
            slope: r.parse()?,
        })
    }
}

pub fn in_section(s: &Section, a: &FiberedClass) -> bool {
    s.contains(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SequenceName {
    #[serde(rename = "LT_even_genus")]
    LtEvenGenus,
    #[serde(rename = "ori79")]
    Ori79,
    #[serde(rename = "ori15")]
    Ori15,
    #[serde(rename = "whitehead")]
    Whitehead,
    #[serde(rename = "braid1")]
    Braid1,
    #[serde(rename = "braid2")]
    Braid2,
    #[serde(rename = "tsai")]
    Tsai,
}

impl SequenceName {
    pub const ALL: [SequenceName; 7] = [
        SequenceName::LtEvenGenus,
        SequenceName::Ori79,
        SequenceName::Ori15,
        SequenceName::Whitehead,
        SequenceName::Braid1,
        SequenceName::Braid2,
        SequenceName::Tsai,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceName::LtEvenGenus => "LT_even_genus",
            SequenceName::Ori79 => "ori79",
            SequenceName::Ori15 => "ori15",
            SequenceName::Whitehead => "whitehead",
            SequenceName::Braid1 => "braid1",
            SequenceName::Braid2 => "braid2",
            SequenceName::Tsai => "tsai",
        }
    }

    /// Name of the main parameter: `g` or `n`.
    pub fn parameter(self) -> &'static str {
        match self {
            SequenceName::Whitehead | SequenceName::Braid1 | SequenceName::Braid2 => "n",
            _ => "g",
        }
    }

    /// Section containing every member.
    pub fn section(self) -> Section {
        let r = |p, q| Slope::from_parts(p, q);
        match self {
            SequenceName::LtEvenGenus => Section::new(Cusp::Beta, r(1, -2)),
            SequenceName::Ori79 | SequenceName::Ori15 => Section::new(Cusp::Beta, r(3, -2)),
            SequenceName::Whitehead => Section::new(Cusp::Gamma, r(1, 1)),
            SequenceName::Braid1 | SequenceName::Braid2 => Section::new(Cusp::Gamma, Slope::Infinite),
            SequenceName::Tsai => Section::new(Cusp::Beta, r(-1, 1)),
        }
    }

    /// Member of the family, after checking the parameter constraints.
    pub fn class(self, param: SequenceParam) -> Result<IjkClass> {
        let fail = |required: &str| {
            Err(Error::Congruence {
                sequence: self.name().into(),
                param: param.to_string(),
                required: required.into(),
            })
        };
        match (self, param) {
            (SequenceName::Tsai, SequenceParam::GenusPunctures(g, p)) => {
                if g < 0 || p < g {
                    return fail("0 <= g <= p");
                }
                if (2 * g + 1).gcd(&(p + g + 1)) != 1 {
                    return fail("gcd(2g+1, p+g+1) = 1");
                }
                IjkClass::plus(p - g, p - g, 2 * g + 1)
            }
            (SequenceName::Tsai, _) => fail("a pair (g,p)"),
            (_, SequenceParam::GenusPunctures(..)) => fail("a single integer parameter"),
            (SequenceName::LtEvenGenus, SequenceParam::Single(g)) => {
                if g < 2 || !matches!(g.rem_euclid(6), 2 | 4) {
                    return fail("g ≡ 2, 4 (mod 6)");
                }
                IjkClass::plus(1, g + 2, g - 1)
            }
            (SequenceName::Ori79, SequenceParam::Single(g)) => {
                if g < 7 || !matches!(g.rem_euclid(10), 7 | 9) {
                    return fail("g ≡ 7, 9 (mod 10)");
                }
                IjkClass::plus(g + 6, 2, g)
            }
            (SequenceName::Ori15, SequenceParam::Single(g)) => {
                if g < 3 || !matches!(g.rem_euclid(10), 1 | 5) {
                    return fail("g ≡ 1, 5 (mod 10) and g >= 3");
                }
                IjkClass::plus(g + 10, 4, g - 2)
            }
            (SequenceName::Whitehead, SequenceParam::Single(n)) => {
                if n < 2 {
                    return fail("n >= 2");
                }
                IjkClass::minus(2 * n - 1, 1, n - 1)
            }
            (SequenceName::Braid1, SequenceParam::Single(n)) => {
                if n < 3 {
                    return fail("n >= 3");
                }
                IjkClass::zero(1, n - 1)
            }
            (SequenceName::Braid2, SequenceParam::Single(n)) => {
                if n < 2 {
                    return fail("n >= 2");
                }
                IjkClass::zero(2, 2 * n - 1)
            }
        }
    }

    /// Factor multiplying `log λ` in the limit statement, and the limit.
    pub fn asymptotics(self, param: SequenceParam) -> Option<(i64, f64)> {
        let golden = ((3.0 + 5f64.sqrt()) / 2.0).ln();
        let braid = 2.0 * (2.0 + 3f64.sqrt()).ln();
        match (self, param) {
            (SequenceName::LtEvenGenus | SequenceName::Ori79 | SequenceName::Ori15, SequenceParam::Single(g)) => {
                Some((g, golden))
            }
            (SequenceName::Whitehead, SequenceParam::Single(n)) => Some((2 * n - 1, 2.0 * delta_d4().ln())),
            (SequenceName::Braid1, SequenceParam::Single(n)) => Some((2 * n - 1, braid)),
            (SequenceName::Braid2, SequenceParam::Single(n)) => Some((4 * n + 2, braid)),
            _ => None,
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('-', "_");
        SequenceName::ALL
            .into_iter()
            .find(|n| n.name().to_ascii_lowercase() == t)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown sequence {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SequenceParam {
    Single(i64),
    GenusPunctures(i64, i64),
}

impl fmt::Display for SequenceParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceParam::Single(v) => write!(f, "{v}"),
            SequenceParam::GenusPunctures(g, p) => write!(f, "({g},{p})"),
        }
    }
}

/// `p_i = (g+1) + i(2g+1)`, one choice of punctures keeping the class primitive.
pub fn tsai_punctures(g: i64, i: i64) -> i64 {
    (g + 1) + i * (2 * g + 1)
}

/// One fibered class with its invariants.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceEntry {
    pub param: Option<SequenceParam>,
    pub class: FiberedClass,
    pub ijk: Option<IjkClass>,
    pub topology: FiberTopology,
    pub polynomial: IntPolynomial,
    pub dilatation: f64,
    /// `norm · ln λ`
    pub normalized_entropy: f64,
    /// Set when `(y,x,z)` is a distinct class with the same dynamics.
    pub swap_twin: bool,
}

impl SequenceEntry {
    pub fn of_class(a: &FiberedClass, tolerance: &Tolerance) -> Result<Self> {
        let topology = a.fiber_topology()?;
        let polynomial = dilatation_polynomial(a);
        let dilatation = largest_root_f64(&polynomial, tolerance)?;
        Ok(SequenceEntry {
            param: None,
            class: *a,
            ijk: a.to_ijk().ok(),
            topology,
            polynomial,
            dilatation,
            normalized_entropy: a.norm() as f64 * dilatation.ln(),
            swap_twin: a.x() != a.y(),
        })
    }
}

pub fn sequence(name: SequenceName, param: SequenceParam, tolerance: &Tolerance) -> Result<SequenceEntry> {
    let c = name.class(param)?;
    let mut e = SequenceEntry::of_class(&c.to_xyz(), tolerance)?;
    e.param = Some(param);
    e.ijk = Some(c);
    Ok(e)
}

/// Parameters in `lo..=hi` accepted by the sequence.
pub fn valid_params(name: SequenceName, lo: i64, hi: i64) -> Vec<SequenceParam> {
    (lo..=hi)
        .map(SequenceParam::Single)
        .filter(|&p| name.class(p).is_ok())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub param: SequenceParam,
    pub multiplier: i64,
    pub lambda: f64,
    /// `multiplier · ln λ`
    pub value: f64,
    pub limit: f64,
    /// `|value - limit| / limit`
    pub relative_distance: f64,
}

pub fn asymptotic_report(
    name: SequenceName,
    params: &[SequenceParam],
    tolerance: &Tolerance,
) -> Result<Vec<AsymptoticRow>> {
    params
        .iter()
        .map(|&param| {
            let (multiplier, limit) = name
                .asymptotics(param)
                .ok_or_else(|| Error::InvalidParameter(format!("sequence {name} has no limit statement")))?;
            let e = sequence(name, param, tolerance)?;
            let value = multiplier as f64 * e.dilatation.ln();
            Ok(AsymptoticRow {
                param,
                multiplier,
                lambda: e.dilatation,
                value,
                limit,
                relative_distance: (value - limit).abs() / limit,
            })
        })
        .collect()
}

fn delta_d4() -> f64 {
    let p = IntPolynomial::from_coeffs([1, -2, 0, -2, 1]);
    largest_root_f64(&p, &Tolerance::default()).expect("root above one")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Proven,
    Conjectural,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogueEntry {
    pub name: String,
    pub class: Option<String>,
    pub polynomial: IntPolynomial,
    pub value: f64,
    pub status: Status,
}

/// Known minimal dilatations, each recomputed from its polynomial.
pub fn minimizer_catalogue(tolerance: &Tolerance) -> Result<Vec<CatalogueEntry>> {
    let q = |c: IjkClass| clique_polynomial_formula(&c);
    let mut rows: Vec<(String, Option<String>, IntPolynomial, Status)> = vec![
        (
            "δ_2 = δ_2^+".into(),
            Some("(1,4,1)_+".into()),
            lanneau_thiffeault(2, 1)?,
            Status::Proven,
        ),
        (
            "δ_4^+".into(),
            Some("(1,6,3)_+".into()),
            lanneau_thiffeault(4, 1)?,
            Status::Proven,
        ),
        (
            "δ_5^+".into(),
            Some("(15,4,3)_+".into()),
            q(IjkClass::plus(15, 4, 3)?).divide_exact(&t_pow_plus_one(11))?,
            Status::Proven,
        ),
        (
            "δ_7^+".into(),
            Some("(13,2,7)_+".into()),
            q(IjkClass::plus(13, 2, 7)?).divide_exact(&t_pow_plus_one(11))?,
            Status::Proven,
        ),
        (
            "δ_8^+".into(),
            Some("(1,10,7)_+".into()),
            lanneau_thiffeault(8, 1)?,
            Status::Proven,
        ),
        (
            "δ(D_4)".into(),
            None,
            IntPolynomial::from_coeffs([1, -2, 0, -2, 1]),
            Status::Proven,
        ),
        (
            "δ(D_5)".into(),
            Some("(1,2)_0".into()),
            q(IjkClass::zero(1, 2)?),
            Status::Proven,
        ),
        (
            "δ(D_7)".into(),
            Some("(1,3)_0".into()),
            q(IjkClass::zero(1, 3)?),
            Status::Proven,
        ),
        (
            "δ(D_8)".into(),
            Some("(2,3)_0".into()),
            q(IjkClass::zero(2, 3)?),
            Status::Proven,
        ),
    ];
    for g in [10, 14, 16] {
        rows.push((
            format!("δ_{g}^+ =? λ_({g},1)"),
            Some(format!("(1,{},{})_+", g + 2, g - 1)),
            lanneau_thiffeault(g, 1)?,
            Status::Conjectural,
        ));
    }
    rows.into_iter()
        .map(|(name, class, polynomial, status)| {
            let value = largest_root_f64(&polynomial, tolerance)?;
            Ok(CatalogueEntry {
                name,
                class,
                polynomial,
                value,
                status,
            })
        })
        .collect()
}

pub const DEFAULT_NORM_CAP: i64 = 200;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScanFilter {
    pub orientable: Option<bool>,
    pub genus: Option<u64>,
    pub section: Option<Section>,
}

impl ScanFilter {
    fn accepts_class(&self, a: &FiberedClass) -> bool {
        self.section.is_none_or(|s| s.contains(a))
    }

    fn accepts(&self, t: &FiberTopology) -> bool {
        self.orientable.is_none_or(|o| o == t.orientable) && self.genus.is_none_or(|g| g == t.genus)
    }
}

/// Primitive fibered classes with `y >= x` and norm at most `norm_max`.
pub fn lattice(norm_max: i64) -> Vec<FiberedClass> {
    let mut out = Vec::new();
    for y in 1..=norm_max {
        for x in 1..=y {
            // x > z and norm = x + y - z <= norm_max
            for z in (x + y - norm_max)..x {
                if x.gcd(&y).gcd(&z) == 1 {
                    out.push(FiberedClass::new(x, y, z).expect("fibered by construction"));
                }
            }
        }
    }
    out
}

fn thread_count() -> Option<usize> {
    std::env::var("FFL_THREADS")
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

/// Ranked by normalized entropy, ties broken by `(x, y, z)`. Runs on a
/// private pool capped by `FFL_THREADS` when set.
pub fn scan(norm_max: i64, filter: &ScanFilter, cap: i64, tolerance: &Tolerance) -> Result<Vec<SequenceEntry>> {
    if norm_max > cap {
        return Err(Error::CapExceeded {
            requested: norm_max,
            cap,
        });
    }
    if norm_max < 2 {
        return Ok(Vec::new());
    }
    let classes: Vec<FiberedClass> = lattice(norm_max)
        .into_iter()
        .filter(|a| filter.accepts_class(a))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_count() {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start scan threads: {e}")))?;
    let results: Vec<Result<Option<SequenceEntry>>> = pool.install(|| {
        classes
            .par_iter()
            .map(|a| {
                let topology = a.fiber_topology()?;
                if !filter.accepts(&topology) {
                    return Ok(None);
                }
                SequenceEntry::of_class(a, tolerance).map(Some)
            })
            .collect()
    });
    let mut entries = Vec::new();
    for r in results {
        if let Some(e) = r? {
            entries.push(e);
        }
    }
    entries.sort_by(|a, b| {
        a.normalized_entropy
            .total_cmp(&b.normalized_entropy)
            .then_with(|| a.class.coords().cmp(&b.class.coords()))
    });
    Ok(entries)
}

/// Fiber of a class after Dehn filling one cusp.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FillReport {
    pub section: Section,
    pub class: FiberedClass,
    pub fiber: FiberTopology,
    pub filled_genus: u64,
    pub filled_punctures: u64,
    pub filled_prongs: u64,
    pub dilatation: f64,
    /// False when the capped boundary is 1-pronged, so the monodromy does not
    /// extend to a pseudo-Anosov map.
    pub extends_pseudo_anosov: bool,
}

impl FillReport {
    pub fn surface_name(&self) -> String {
        format!("Σ_{{{},{}}}", self.filled_genus, self.filled_punctures)
    }
}

pub fn fill_and_pull_back(s: &Section, a: &FiberedClass, tolerance: &Tolerance) -> Result<FillReport> {
    if !s.is_hyperbolic() {
        return Err(Error::ExceptionalSlope {
            slope: s.slope.to_string(),
        });
    }
    if !s.contains(a) {
        let (x, y, z) = a.coords();
        return Err(Error::NotInSection {
            x,
            y,
            z,
            section: s.to_string(),
        });
    }
    let fiber = a.fiber_topology()?;
    let (capped, prongs) = match s.cusp {
        Cusp::Alpha => (fiber.boundary_alpha, fiber.prongs_alpha),
        Cusp::Beta => (fiber.boundary_beta, fiber.prongs_beta),
        Cusp::Gamma => (fiber.boundary_gamma, fiber.prongs_gamma),
    };
    debug_assert_eq!(capped as i64, a.boundary_counts()[s.cusp.index()]);
    let dilatation = largest_root_f64(&dilatation_polynomial(a), tolerance)?;
    Ok(FillReport {
        section: *s,
        class: *a,
        fiber,
        filled_genus: fiber.genus,
        filled_punctures: fiber.total_boundary() - capped,
        filled_prongs: prongs,
        dilatation,
        extends_pseudo_anosov: prongs >= 2,
    })
}
