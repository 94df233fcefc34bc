//! Instance pipelines: every identity of the volume argument, checked
//! exactly on one labeled triangulation, recorded in a [`Report`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::build::{
    cross_polytope_cone, enclose, refine, shell_prisms_from, square_shell_from, standard_simplex,
    standard_simplex_vertices, star_from_boundary, CrossPolytope, RefinementSpec,
};
use crate::degree::{degree_of_labeling, winding_number_2d, DegreeReport};
use crate::deform::{check_carrier_hypothesis, check_enclosure_hypothesis, targets_from_labeling, volume_sum_poly};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, Poly, Rational};
use crate::instance::{InstanceFile, Metadata};
use crate::label::{
    find_complementary_edges, find_fully_labeled, one_sided_labeling, random_odd_map_labeling,
    random_sperner_labeling, random_tucker_labeling, validate_sperner, validate_tucker, EdgeWitness, FullyLabeled,
    LabelKind, Labeling,
};
use crate::simplicial::{
    boundary_complex, orient_positively, validate_triangulation, Point, Region, Triangulation, ValidityReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The claim's hypothesis does not hold on this instance, so it is not
    /// asserted.
    HypothesisNotMet,
    /// Not run because an earlier step failed.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub instance_id: String,
    pub dimension: usize,
    pub mode: LabelKind,
    pub checks: Vec<Check>,
    pub complementary_edges: Vec<EdgeWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<DegreeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fully_labeled: Option<FullyLabeled>,
    pub polynomials: BTreeMap<String, Poly>,
}

impl Report {
    fn new(instance_id: String, dimension: usize, mode: LabelKind) -> Self {
        Report {
            instance_id,
            dimension,
            mode,
            checks: Vec::new(),
            complementary_edges: Vec::new(),
            degree: None,
            fully_labeled: None,
            polynomials: BTreeMap::new(),
        }
    }

    /// No check failed (hypothesis-not-met and skipped entries are fine).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.check(name).map(|c| c.status)
    }

    fn push(&mut self, name: &str, status: CheckStatus, witness: Option<String>) {
        self.checks.push(Check { name: name.to_string(), status, witness });
    }

    fn assert(&mut self, name: &str, outcome: std::result::Result<(), String>) -> bool {
        match outcome {
            Ok(()) => {
                self.push(name, CheckStatus::Pass, None);
                true
            }
            Err(w) => {
                self.push(name, CheckStatus::Fail, Some(w));
                false
            }
        }
    }

    fn not_met(&mut self, name: &str, why: impl Into<String>) {
        self.push(name, CheckStatus::HypothesisNotMet, Some(why.into()));
    }

    fn skip(&mut self, names: &[&str], why: &str) {
        for n in names {
            self.push(n, CheckStatus::Skipped, Some(why.to_string()));
        }
    }

    fn validity(&mut self, name: &str, v: &ValidityReport) -> bool {
        self.assert(
            name,
            match v.first_failure() {
                None => Ok(()),
                Some(f) => Err(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())),
            },
        )
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnclosureKind {
    /// `C = 2P` with the staircase prism shell.
    Shell,
    /// The square `[-2, 2]^2` (plane only), checked alongside the shell.
    Square2d,
}

impl FromStr for EnclosureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shell" => Ok(EnclosureKind::Shell),
            "square2d" => Ok(EnclosureKind::Square2d),
            other => Err(Error::InvalidParameter(format!("unknown enclosure {other:?}"))),
        }
    }
}

impl fmt::Display for EnclosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnclosureKind::Shell => "shell",
            EnclosureKind::Square2d => "square2d",
        })
    }
}

/// First 16 hex digits of the SHA-256 of the canonical instance JSON.
pub fn instance_id(t: &Triangulation, l: &Labeling, tag: &str) -> String {
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(t).unwrap_or_default());
    h.update(serde_json::to_vec(l).unwrap_or_default());
    h.update(tag.as_bytes());
    h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Witness for a polynomial that should equal `expected`.
fn poly_equals(p: &Poly, expected: &Poly) -> std::result::Result<(), String> {
    if p == expected {
        return Ok(());
    }
    let n = p.coeffs().len().max(expected.coeffs().len());
    let k = (0..n).find(|&k| p.coeff(k) != expected.coeff(k)).unwrap_or(0);
    Err(format!("coefficient of t^{k} is {} but {} was expected", p.coeff(k), expected.coeff(k)))
}

struct Enclosed {
    t: Triangulation,
    star: Triangulation,
    volume: Rational,
    interior: fn(&Point, &Rational) -> bool,
    bound: Rational,
}

fn l1_interior(p: &Point, bound: &Rational) -> bool {
    &p.l1_norm() < bound
}

fn max_interior(p: &Point, bound: &Rational) -> bool {
    &p.max_norm() < bound
}

/// Steps 3 to 6 on one enclosure; `prefix` distinguishes the square rerun.
/// Returns the inner sum under the star deformation.
fn enclosure_steps(report: &mut Report, prefix: &str, enc: &Enclosed, l: &Labeling, star_l: &Labeling) -> Option<Poly> {
    let name = |n: &str| format!("{prefix}{n}");
    let later = [
        name("deformation_hypothesis"),
        name("constancy_T"),
        name("constancy_T_star"),
        name("shell_sums_agree"),
        name("inner_sums_agree"),
    ];
    let later: Vec<&str> = later.iter().map(String::as_str).collect();

    let valid_t = validate_triangulation(&enc.t, &enc.volume);
    let valid_star = validate_triangulation(&enc.star, &enc.volume);
    let ok_t = report.validity(&name("enclosure_T"), &valid_t);
    let ok_star = report.validity(&name("enclosure_T_star"), &valid_star);
    if !(ok_t && ok_star) {
        report.skip(&later, "enclosure is not a valid triangulation");
        return None;
    }

    let targets = targets_from_labeling(&enc.t, l, LabelKind::Tucker, None)
        .and_then(|a| Ok((a, targets_from_labeling(&enc.star, star_l, LabelKind::Tucker, None)?)));
    let (a, a_star) = match targets {
        Ok(pair) => pair,
        Err(e) => {
            report.assert(&name("deformation_hypothesis"), Err(e.to_string()));
            report.skip(&later[1..], "targets unavailable");
            return None;
        }
    };
    let interior = |p: &Point| (enc.interior)(p, &enc.bound);
    report.assert(
        &name("deformation_hypothesis"),
        check_enclosure_hypothesis(&enc.t, &a, interior).and_then(|_| check_enclosure_hypothesis(&enc.star, &a_star, interior)),
    );

    let sums = (|| -> Result<_> {
        Ok((
            volume_sum_poly(&enc.t, &a, None)?.total,
            volume_sum_poly(&enc.star, &a_star, None)?.total,
            volume_sum_poly(&enc.t, &a, Some(Region::Shell))?.total,
            volume_sum_poly(&enc.star, &a_star, Some(Region::Shell))?.total,
            volume_sum_poly(&enc.t, &a, Some(Region::Inner))?.total,
            volume_sum_poly(&enc.star, &a_star, Some(Region::Inner))?.total,
        ))
    })();
    let (s_t, s_star, e_t, e_star, p_t, p_star) = match sums {
        Ok(s) => s,
        Err(e) => {
            report.assert(&name("constancy_T"), Err(e.to_string()));
            report.skip(&later[2..], "volume sums unavailable");
            return None;
        }
    };
    let vol_c = Poly::constant(enc.volume.clone());
    report.assert(&name("constancy_T"), poly_equals(&s_t, &vol_c));
    report.assert(&name("constancy_T_star"), poly_equals(&s_star, &vol_c));
    report.assert(&name("shell_sums_agree"), poly_equals(&e_t, &e_star));
    report.assert(&name("inner_sums_agree"), poly_equals(&p_t, &p_star));
    for (key, p) in [("S_T", s_t), ("S_T*", s_star), ("S_E(T)", e_t), ("S_E(T*)", e_star), ("S_P(T)", p_t)] {
        report.polynomials.insert(format!("{prefix}{key}"), p);
    }
    report.polynomials.insert(format!("{prefix}S_P(T*)"), p_star.clone());
    Some(p_star)
}

const TUCKER_LATE: [&str; 13] = [
    "star",
    "enclosure_T",
    "enclosure_T_star",
    "deformation_hypothesis",
    "constancy_T",
    "constancy_T_star",
    "shell_sums_agree",
    "inner_sums_agree",
    "complementary_edge",
    "degree_well_defined",
    "degree_odd",
    "bridge_identity",
    "no_edge_implies_zero",
];

/// Runs the Tucker pipeline. Never errors: anomalies are failed checks.
pub fn check_tucker_instance(t_p: &Triangulation, l: &Labeling, enclosure: EnclosureKind) -> Report {
    let d = t_p.dim();
    let mut report = Report::new(instance_id(t_p, l, &enclosure.to_string()), d, LabelKind::Tucker);

    // (1) hypotheses
    let p = match CrossPolytope::new(d) {
        Ok(p) => p,
        Err(e) => {
            report.assert("triangulation", Err(e.to_string()));
            return report;
        }
    };
    let tri_ok = !t_p.is_boundary_complex()
        && report.validity("triangulation", &validate_triangulation(t_p, &p.volume()));
    if t_p.is_boundary_complex() {
        report.assert("triangulation", Err("a boundary complex is not a triangulation of P".into()));
    }
    let labels_valid = report.validity("tucker_labeling", &validate_tucker(t_p, l));
    if !tri_ok {
        report.skip(&TUCKER_LATE, "triangulation is invalid");
        return report;
    }
    let t_p = match orient_positively(t_p) {
        Ok(t) => t,
        Err(e) => {
            report.assert("star", Err(e.to_string()));
            report.skip(&TUCKER_LATE[1..], "orientation failed");
            return report;
        }
    };

    // (2) star triangulation over the same boundary
    let built = boundary_complex(&t_p).and_then(|b| {
        let star = star_from_boundary(&b)?;
        Ok((b, star))
    });
    let (b, star) = match built {
        Ok(x) => x,
        Err(e) => {
            report.assert("star", Err(e.to_string()));
            report.skip(&TUCKER_LATE[1..], "no star triangulation");
            return report;
        }
    };
    let center = star.center().expect("star has a centre");
    let mut star_l = l.restricted(&b.vertices().keys().copied().collect());
    star_l.set(center, 0);
    report.assert("star", Ok(()));

    // (3)-(6) enclosure, constancy, restriction identities
    let base = t_p.max_id().unwrap_or(0).max(center) + 1;
    let two = Rational::from(2);
    let shell = match shell_prisms_from(&b, &two, base)
        .and_then(|shell| Ok((enclose(&t_p, &shell)?, enclose(&star, &shell)?)))
    {
        Ok((t, t_star)) => Enclosed { t, star: t_star, volume: p.enclosure_volume(), interior: l1_interior, bound: two.clone() },
        Err(e) => {
            report.assert("enclosure_T", Err(e.to_string()));
            report.skip(&TUCKER_LATE[2..], "no enclosure");
            return report;
        }
    };
    let inner = enclosure_steps(&mut report, "", &shell, l, &star_l);

    if enclosure == EnclosureKind::Square2d {
        let square = square_shell_from(&b, &two, base)
            .and_then(|sq| Ok((enclose(&t_p, &sq)?, enclose(&star, &sq)?)));
        match square {
            Ok((t, t_star)) => {
                let enc = Enclosed {
                    t,
                    star: t_star,
                    volume: Rational::from(16),
                    interior: max_interior,
                    bound: two.clone(),
                };
                enclosure_steps(&mut report, "square_", &enc, l, &star_l);
            }
            Err(e) => {
                report.assert("square_enclosure_T", Err(e.to_string()));
            }
        }
    }

    // (7) complementary edges
    report.complementary_edges = find_complementary_edges(&t_p, l);
    if labels_valid {
        report.assert(
            "complementary_edge",
            if report.complementary_edges.is_empty() {
                Err("valid Tucker labeling without a complementary edge".into())
            } else {
                Ok(())
            },
        );
    } else {
        report.not_met("complementary_edge", "labeling is not a valid Tucker labeling");
    }

    // (8) degree of the boundary map
    let p_star_at_1 = inner.as_ref().map(|p| p.eval(&Rational::one()));
    let boundary_edges = find_complementary_edges(&b, l);
    if let Some(e) = boundary_edges.first() {
        let why = format!("boundary edge {:?} is complementary", e.endpoints);
        report.not_met("degree_well_defined", why.clone());
        report.not_met("degree_odd", why.clone());
        report.not_met("bridge_identity", why);
    } else {
        match degree_of_labeling(&b, l) {
            Ok(deg) => {
                report.assert(
                    "degree_well_defined",
                    if deg.consistent {
                        Ok(())
                    } else {
                        let nets: Vec<String> =
                            deg.per_facet.iter().map(|f| format!("{}:{}", f.signature, f.net())).collect();
                        Err(format!("p - n differs across facets: {}", nets.join(" ")))
                    },
                );
                if d == 2 {
                    report.assert(
                        "winding_number",
                        match winding_number_2d(&b, l) {
                            Ok(w) if w == deg.degree => Ok(()),
                            Ok(w) => Err(format!("winding number {w}, facet degree {}", deg.degree)),
                            Err(e) => Err(e.to_string()),
                        },
                    );
                }
                if labels_valid {
                    report.assert(
                        "degree_odd",
                        if deg.degree.rem_euclid(2) == 1 { Ok(()) } else { Err(format!("degree {} is even", deg.degree)) },
                    );
                } else {
                    report.not_met("degree_odd", "labeling is not antipodal");
                }
                match &p_star_at_1 {
                    Some(v) => {
                        let expected = Rational::from(deg.degree) * p.volume();
                        report.assert(
                            "bridge_identity",
                            if v == &expected {
                                Ok(())
                            } else {
                                Err(format!("S_P(T*)(1) = {v}, degree * vol(P) = {expected}"))
                            },
                        );
                    }
                    None => report.skip(&["bridge_identity"], "inner sums unavailable"),
                }
                report.degree = Some(deg);
            }
            Err(e) => {
                report.assert("degree_well_defined", Err(e.to_string()));
                report.skip(&["degree_odd", "bridge_identity"], "degree unavailable");
            }
        }
    }

    // (9) no complementary edge anywhere forces a zero inner sum at t = 1
    match (&p_star_at_1, report.complementary_edges.is_empty()) {
        (Some(v), true) => {
            report.assert(
                "no_edge_implies_zero",
                if v.is_zero() { Ok(()) } else { Err(format!("S_P(1) = {v} without a complementary edge")) },
            );
        }
        (None, true) => report.skip(&["no_edge_implies_zero"], "inner sums unavailable"),
        (_, false) => report.not_met("no_edge_implies_zero", "complementary edges present"),
    }
    report
}

/// Runs the Sperner pipeline on a triangulation of `conv(0, e_1, ..., e_d)`.
pub fn check_sperner_instance(t_s: &Triangulation, l: &Labeling) -> Report {
    let d = t_s.dim();
    let mut report = Report::new(instance_id(t_s, l, "sperner"), d, LabelKind::Sperner);
    let late = ["deformation_hypothesis", "constancy", "fully_labeled_odd", "fully_labeled_signed"];
    let ambient = match standard_simplex_vertices(d) {
        Ok(a) => a,
        Err(e) => {
            report.assert("triangulation", Err(e.to_string()));
            return report;
        }
    };
    let volume = Rational::one() / factorial(d);
    let tri_ok = !t_s.is_boundary_complex() && report.validity("triangulation", &validate_triangulation(t_s, &volume));
    if t_s.is_boundary_complex() {
        report.assert("triangulation", Err("a boundary complex is not a triangulation of S".into()));
    }
    if !tri_ok {
        report.skip(&["sperner_labeling"], "triangulation is invalid");
        report.skip(&late, "triangulation is invalid");
        return report;
    }
    let labels_ok = match validate_sperner(t_s, l, &ambient) {
        Ok(v) => report.validity("sperner_labeling", &v),
        Err(e) => report.assert("sperner_labeling", Err(e.to_string())),
    };
    if !labels_ok {
        for n in late {
            report.not_met(n, "labeling is not a valid Sperner labeling");
        }
        return report;
    }
    let t_s = match orient_positively(t_s) {
        Ok(t) => t,
        Err(e) => {
            report.assert("deformation_hypothesis", Err(e.to_string()));
            report.skip(&late[1..], "orientation failed");
            return report;
        }
    };
    let a = match targets_from_labeling(&t_s, l, LabelKind::Sperner, Some(&ambient)) {
        Ok(a) => a,
        Err(e) => {
            report.assert("deformation_hypothesis", Err(e.to_string()));
            report.skip(&late[1..], "targets unavailable");
            return report;
        }
    };
    report.assert("deformation_hypothesis", check_carrier_hypothesis(&t_s, &a, &ambient));
    match volume_sum_poly(&t_s, &a, None) {
        Ok(vp) => {
            report.assert("constancy", poly_equals(&vp.total, &Poly::constant(volume)));
            report.polynomials.insert("S".into(), vp.total);
        }
        Err(e) => {
            report.assert("constancy", Err(e.to_string()));
        }
    }
    match find_fully_labeled(&t_s, l) {
        Ok(f) => {
            report.assert(
                "fully_labeled_odd",
                if f.total() % 2 == 1 { Ok(()) } else { Err(format!("{} fully-labeled simplices", f.total())) },
            );
            report.assert(
                "fully_labeled_signed",
                if f.signed() == 1 {
                    Ok(())
                } else {
                    Err(format!("{} positive, {} negative", f.positive, f.negative))
                },
            );
            report.fully_labeled = Some(f);
        }
        Err(e) => {
            report.assert("fully_labeled_odd", Err(e.to_string()));
            report.skip(&["fully_labeled_signed"], "search failed");
        }
    }
    report
}

/// Runs the pipeline matching the instance's labeling kind.
pub fn check_instance(instance: &InstanceFile, enclosure: EnclosureKind) -> Report {
    match instance.labeling.kind {
        LabelKind::Tucker => check_tucker_instance(&instance.triangulation, &instance.labeling, enclosure),
        LabelKind::Sperner => check_sperner_instance(&instance.triangulation, &instance.labeling),
    }
}

/// Recomputes the report for `instance` and lists every field of `stored`
/// that disagrees with it. An empty list means the stored report is genuine.
pub fn recheck(stored: &Report, instance: &InstanceFile, enclosure: EnclosureKind) -> Vec<String> {
    let fresh = check_instance(instance, enclosure);
    let mut diffs = Vec::new();
    if stored.instance_id != fresh.instance_id {
        diffs.push(format!("instance_id: stored {}, recomputed {}", stored.instance_id, fresh.instance_id));
    }
    if stored.dimension != fresh.dimension {
        diffs.push("dimension".into());
    }
    for key in stored.polynomials.keys().chain(fresh.polynomials.keys()) {
        match (stored.polynomials.get(key), fresh.polynomials.get(key)) {
            (Some(a), Some(b)) if a != b => {
                if let Err(w) = poly_equals(a, b) {
                    diffs.push(format!("polynomial {key}: {w}"));
                }
            }
            (Some(_), None) | (None, Some(_)) => diffs.push(format!("polynomial {key} missing on one side")),
            _ => {}
        }
    }
    diffs.dedup();
    if stored.checks != fresh.checks {
        let names: Vec<&str> = stored
            .checks
            .iter()
            .zip(&fresh.checks)
            .filter(|(a, b)| a != b)
            .map(|(a, _)| a.name.as_str())
            .collect();
        diffs.push(format!("checks differ: {names:?}"));
    }
    if stored.complementary_edges != fresh.complementary_edges {
        diffs.push("complementary_edges".into());
    }
    if stored.degree != fresh.degree {
        diffs.push("degree".into());
    }
    if stored.fully_labeled != fresh.fully_labeled {
        diffs.push("fully_labeled".into());
    }
    diffs
}

/// How a Tucker labeling is drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelGenerator {
    /// Uniform labels in antipodal pairs on the boundary.
    Uniform,
    /// Dominant coordinate of a random odd affine map.
    OddMap,
    /// One sign per axis; never antipodal, never complementary.
    OneSided,
}

impl FromStr for LabelGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(LabelGenerator::Uniform),
            "odd-map" => Ok(LabelGenerator::OddMap),
            "one-sided" => Ok(LabelGenerator::OneSided),
            other => Err(Error::InvalidParameter(format!("unknown label generator {other:?}"))),
        }
    }
}

impl fmt::Display for LabelGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LabelGenerator::Uniform => "uniform",
            LabelGenerator::OddMap => "odd-map",
            LabelGenerator::OneSided => "one-sided",
        })
    }
}

/// Generator state for instance `(dim, seed)`, independent of scheduling.
pub fn instance_seed(dim: usize, seed: u64) -> u64 {
    let mut z = seed ^ (dim as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A refined cross-polytope (Tucker) or standard simplex (Sperner) with a
/// random labeling.
pub fn generate_instance(
    dim: usize,
    seed: u64,
    refinement: &RefinementSpec,
    mode: LabelKind,
    labels: LabelGenerator,
) -> Result<InstanceFile> {
    let s = instance_seed(dim, seed);
    let (triangulation, labeling, generator) = match mode {
        LabelKind::Tucker => {
            let t = refine(&cross_polytope_cone(dim)?, refinement)?;
            let l = match labels {
                LabelGenerator::Uniform => random_tucker_labeling(&t, s)?,
                LabelGenerator::OddMap => random_odd_map_labeling(&t, s)?,
                LabelGenerator::OneSided => one_sided_labeling(&t, s),
            };
            (t, l, "cross-polytope")
        }
        LabelKind::Sperner => {
            let t = refine(&standard_simplex(dim, 0)?, refinement)?;
            let l = random_sperner_labeling(&t, &standard_simplex_vertices(dim)?, s)?;
            (t, l, "standard-simplex")
        }
    };
    Ok(InstanceFile {
        triangulation,
        labeling,
        metadata: Metadata {
            generator: generator.to_string(),
            seed: Some(seed),
            refinement: Some(*refinement),
            labels: (mode == LabelKind::Tucker).then(|| labels.to_string()),
        },
    })
}

/// Breaks the labeling hypothesis with a single change: for Tucker, negates
/// the label of the lowest-id boundary vertex (so it equals its antipode's);
/// for Sperner, gives the first vertex with a proper carrier a label outside
/// it.
pub fn inject_fault(instance: &InstanceFile) -> Result<InstanceFile> {
    let mut out = instance.clone();
    let t = &instance.triangulation;
    match instance.labeling.kind {
        LabelKind::Tucker => {
            let b = boundary_complex(t)?;
            let id = *b.vertices().keys().next().ok_or(Error::Empty("no boundary vertex"))?;
            let l = instance.labeling.get(id)?;
            out.labeling.set(id, -l);
        }
        LabelKind::Sperner => {
            let ambient = standard_simplex_vertices(t.dim())?;
            for (&id, v) in t.vertices() {
                let c = crate::simplicial::carrier(&v.point, &ambient)?;
                if let Some(outside) = (0..ambient.len()).find(|i| !c.contains(i)) {
                    out.labeling.set(id, outside as i32 + 1);
                    return Ok(out);
                }
            }
            return Err(Error::Unsupported("no vertex with a proper carrier".into()));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimSummary {
    pub dim: usize,
    pub run: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchSummary {
    pub mode: LabelKind,
    pub per_dim: Vec<DimSummary>,
    pub run: usize,
    pub passed: usize,
    /// The first failing report in `(dim, seed)` order; the batch stops there.
    pub failure: Option<Box<Report>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl BatchSummary {
    pub fn passed_all(&self) -> bool {
        self.failure.is_none()
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> =
            self.per_dim.iter().map(|s| format!("dim {}: {}/{} pass", s.dim, s.passed, s.run)).collect();
        out.push(format!(
            "{}: {}/{} pass in {:.2}s",
            match self.mode {
                LabelKind::Tucker => "tucker",
                LabelKind::Sperner => "sperner",
            },
            self.passed,
            self.run,
            self.elapsed.as_secs_f64()
        ));
        if let Some(r) = &self.failure {
            if let Some(c) = r.first_failure() {
                out.push(format!(
                    "HALT: instance {} (dim {}) failed {}: {}",
                    r.instance_id,
                    r.dimension,
                    c.name,
                    c.witness.clone().unwrap_or_default()
                ));
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct BatchOptions {
    pub dims: Vec<usize>,
    pub seeds: Range<u64>,
    pub refinement: RefinementSpec,
    pub mode: LabelKind,
    pub labels: LabelGenerator,
    pub enclosure: EnclosureKind,
    /// Apply [`inject_fault`] to every generated instance.
    pub inject_fault: bool,
}

impl BatchOptions {
    pub fn new(dims: Vec<usize>, seeds: Range<u64>, refinement: RefinementSpec, mode: LabelKind) -> Self {
        BatchOptions {
            dims,
            seeds,
            refinement,
            mode,
            labels: LabelGenerator::Uniform,
            enclosure: EnclosureKind::Shell,
            inject_fault: false,
        }
    }
}

/// One instance per `(dim, seed)`, checked in parallel. Aggregation stops at
/// the first failing report in `(dim, seed)` order, which is returned whole.
pub fn batch_run(opts: &BatchOptions) -> Result<BatchSummary> {
    let start = Instant::now();
    let jobs: Vec<(usize, u64)> = opts.dims.iter().flat_map(|&d| opts.seeds.clone().map(move |s| (d, s))).collect();
    let reports: Vec<Report> = jobs
        .par_iter()
        .map(|&(d, seed)| {
            let mut spec = opts.refinement;
            spec.seed = spec.seed.map(|s| s ^ instance_seed(d, seed));
            let mut inst = generate_instance(d, seed, &spec, opts.mode, opts.labels)?;
            if opts.inject_fault {
                inst = inject_fault(&inst)?;
            }
            Ok(check_instance(&inst, opts.enclosure))
        })
        .collect::<Result<_>>()?;

    let mut per_dim: BTreeMap<usize, DimSummary> = BTreeMap::new();
    let mut failure = None;
    for ((d, _), r) in jobs.iter().zip(reports) {
        let entry = per_dim.entry(*d).or_insert(DimSummary { dim: *d, run: 0, passed: 0 });
        entry.run += 1;
        if r.passed() {
            entry.passed += 1;
        } else {
            failure = Some(Box::new(r));
            break;
        }
    }
    let per_dim: Vec<DimSummary> = per_dim.into_values().collect();
    Ok(BatchSummary {
        mode: opts.mode,
        run: per_dim.iter().map(|s| s.run).sum(),
        passed: per_dim.iter().map(|s| s.passed).sum(),
        per_dim,
        failure,
        elapsed: start.elapsed(),
    })
}
