//! Geometric simplicial complexes with exact vertex coordinates.
//!
//! A [`Triangulation`] is a vertex table plus a list of maximal simplices, all
//! of the ambient dimension `d` (a triangulated polytope) or all of dimension
//! `d - 1` (a boundary complex). Simplices are stored with sorted vertex ids
//! and an explicit orientation sign relative to that sorted order.
//!
//! Orientation conventions:
//! - a `d`-simplex is positive when `det(v_1 - v_0, ..., v_d - v_0) > 0` in its
//!   oriented vertex order;
//! - a boundary `(d-1)`-simplex is positive when appending an inward point
//!   (the opposite vertex of its parent) yields a negative `d`-simplex, i.e.
//!   the outward normal comes last.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{det, factorial, Rational};

pub type VertexId = usize;

/// A point of `Q^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Rational::zero(); dim])
    }

    /// `sign * e_axis`, with `axis` counted from 1.
    pub fn unit(dim: usize, axis: usize, sign: i32) -> Self {
        let mut c = vec![Rational::zero(); dim];
        c[axis - 1] = Rational::from(sign.signum());
        Point(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn scaled(&self, s: &Rational) -> Point {
        Point(self.0.iter().map(|c| c * s).collect())
    }

    pub fn negated(&self) -> Point {
        Point(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Point) -> Vec<Rational> {
        self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()
    }

    /// `(1 - t) * self + t * other`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        let s = Rational::one() - t;
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a * &s + b * t).collect())
    }

    /// Affine combination `sum w_i p_i` (weights are used as given).
    pub fn combination(points: &[&Point], weights: &[Rational]) -> Point {
        let d = points[0].dim();
        let mut c = vec![Rational::zero(); d];
        for (p, w) in points.iter().zip(weights) {
            for (ci, x) in c.iter_mut().zip(&p.0) {
                *ci += x * w;
            }
        }
        Point(c)
    }

    pub fn l1_norm(&self) -> Rational {
        self.0.iter().map(Rational::abs).sum()
    }

    pub fn max_norm(&self) -> Rational {
        self.0.iter().map(Rational::abs).max().unwrap_or_default()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Oriented simplex: sorted vertex ids plus the orientation sign of that
/// sorted order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    ids: Vec<VertexId>,
    sign: i8,
}

impl Simplex {
    /// Canonicalizes an ordered vertex sequence; the orientation of the given
    /// order is kept as the sign.
    pub fn new(ordered: impl Into<Vec<VertexId>>) -> Result<Self> {
        let mut ids = ordered.into();
        if ids.is_empty() {
            return Err(Error::Empty("simplex without vertices"));
        }
        let mut inversions = 0usize;
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                match ids[i].cmp(&ids[j]) {
                    std::cmp::Ordering::Greater => inversions += 1,
                    std::cmp::Ordering::Equal => return Err(Error::DegenerateSimplex(ids)),
                    std::cmp::Ordering::Less => {}
                }
            }
        }
        ids.sort_unstable();
        Ok(Simplex { ids, sign: if inversions % 2 == 0 { 1 } else { -1 } })
    }

    pub(crate) fn from_sorted(ids: Vec<VertexId>, sign: i8) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        Simplex { ids, sign }
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn dim(&self) -> usize {
        self.ids.len() - 1
    }

    /// A vertex order realizing the stored orientation.
    pub fn ordered(&self) -> Vec<VertexId> {
        let mut v = self.ids.clone();
        if self.sign < 0 && v.len() >= 2 {
            v.swap(0, 1);
        }
        v
    }

    pub fn flipped(&self) -> Simplex {
        Simplex { ids: self.ids.clone(), sign: -self.sign }
    }

    /// Codimension-one faces as `(sorted ids, index of the omitted vertex)`.
    pub fn faces(&self) -> impl Iterator<Item = (Vec<VertexId>, usize)> + '_ {
        (0..self.ids.len()).map(move |i| {
            let mut f = self.ids.clone();
            f.remove(i);
            (f, i)
        })
    }

    /// Induced orientation sign of the face omitting sorted position `i`.
    pub fn induced_sign(&self, i: usize) -> i8 {
        if i % 2 == 0 {
            self.sign
        } else {
            -self.sign
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.ids.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (self.ids[i], self.ids[j])))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", if self.sign < 0 { "-" } else { "" }, self.ids)
    }
}

/// Which part of an assembled complex a maximal simplex belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    /// The triangulated cross-polytope (or simplex) itself.
    Inner,
    /// The shell between the inner polytope and the enclosure.
    Shell,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub point: Point,
    /// True iff the vertex lies on the boundary of the carrier polytope.
    pub boundary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    dim: usize,
    vertices: BTreeMap<VertexId, Vertex>,
    simplices: Vec<Simplex>,
    regions: Vec<Region>,
    center: Option<VertexId>,
    deformed: bool,
}

impl Triangulation {
    /// Checks referential integrity only: ids exist, coordinates have the
    /// ambient dimension and all simplices have dimension `dim` or all have
    /// dimension `dim - 1`.
    pub fn new(
        dim: usize,
        vertices: BTreeMap<VertexId, Vertex>,
        simplices: Vec<Simplex>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        for v in vertices.values() {
            if v.point.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.point.dim() });
            }
        }
        if let Some(first) = simplices.first() {
            let k = first.dim();
            if k != dim && k + 1 != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: k });
            }
            for s in &simplices {
                if s.dim() != k {
                    return Err(Error::DimensionMismatch { expected: k, found: s.dim() });
                }
                if let Some(&id) = s.ids().iter().find(|id| !vertices.contains_key(id)) {
                    return Err(Error::UnknownVertex(id));
                }
            }
        }
        let regions = vec![Region::Inner; simplices.len()];
        Ok(Triangulation { dim, vertices, simplices, regions, center: None, deformed: false })
    }

    pub fn with_regions(mut self, regions: Vec<Region>) -> Result<Self> {
        if regions.len() != self.simplices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.simplices.len(),
                found: regions.len(),
            });
        }
        self.regions = regions;
        Ok(self)
    }

    pub fn with_center(mut self, center: Option<VertexId>) -> Result<Self> {
        if let Some(c) = center {
            if !self.vertices.contains_key(&c) {
                return Err(Error::UnknownVertex(c));
            }
        }
        self.center = center;
        Ok(self)
    }

    /// Marks the complex as the image of a deformation, which may contain
    /// degenerate simplices.
    pub fn into_deformed(mut self) -> Self {
        self.deformed = true;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &BTreeMap<VertexId, Vertex> {
        &self.vertices
    }

    pub fn vertex(&self, id: VertexId) -> Result<&Vertex> {
        self.vertices.get(&id).ok_or(Error::UnknownVertex(id))
    }

    pub fn point(&self, id: VertexId) -> Result<&Point> {
        Ok(&self.vertex(id)?.point)
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn simplices_with_regions(&self) -> impl Iterator<Item = (&Simplex, Region)> {
        self.simplices.iter().zip(self.regions.iter().copied())
    }

    pub fn center(&self) -> Option<VertexId> {
        self.center
    }

    pub fn is_deformed(&self) -> bool {
        self.deformed
    }

    pub fn max_id(&self) -> Option<VertexId> {
        self.vertices.keys().next_back().copied()
    }

    /// True when the maximal simplices have dimension `dim - 1`.
    pub fn is_boundary_complex(&self) -> bool {
        self.simplices.first().is_some_and(|s| s.dim() + 1 == self.dim)
    }

    /// Vertices of the maximal simplices tagged with `region`.
    pub fn vertex_ids_in(&self, region: Region) -> BTreeSet<VertexId> {
        self.simplices_with_regions()
            .filter(|(_, r)| *r == region)
            .flat_map(|(s, _)| s.ids().iter().copied())
            .collect()
    }

    pub fn points_of(&self, s: &Simplex) -> Result<Vec<&Point>> {
        s.ordered().into_iter().map(|id| self.point(id)).collect()
    }

    /// All edges of all maximal simplices, deduplicated, ascending.
    pub fn edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.simplices.iter().flat_map(|s| s.edges().collect::<Vec<_>>()).collect()
    }

    /// Coordinates to id.
    pub fn point_index(&self) -> HashMap<&Point, VertexId> {
        self.vertices.iter().map(|(&id, v)| (&v.point, id)).collect()
    }

    pub(crate) fn into_parts(self) -> (usize, BTreeMap<VertexId, Vertex>, Vec<Simplex>, Vec<Region>, Option<VertexId>) {
        (self.dim, self.vertices, self.simplices, self.regions, self.center)
    }

    pub(crate) fn replace_simplices(&mut self, simplices: Vec<Simplex>) {
        debug_assert_eq!(simplices.len(), self.simplices.len());
        self.simplices = simplices;
    }
}

/// `(1/d!) det(p_1 - p_0, ..., p_d - p_0)` for `d + 1` points of `Q^d`.
pub fn simplex_volume(points: &[&Point]) -> Result<Rational> {
    let d = points.len().checked_sub(1).ok_or(Error::Empty("simplex without vertices"))?;
    if d == 0 {
        return Err(Error::InvalidDimension(0));
    }
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
        }
    }
    let rows: Vec<Vec<Rational>> = points[1..].iter().map(|p| p.sub(points[0])).collect();
    Ok(det(&rows)? / factorial(d))
}

/// Signed volume of a `d`-simplex of `t` in its stored orientation.
pub fn signed_volume(s: &Simplex, t: &Triangulation) -> Result<Rational> {
    if s.dim() != t.dim() {
        return Err(Error::DimensionMismatch { expected: t.dim(), found: s.dim() });
    }
    simplex_volume(&t.points_of(s)?)
}

/// Orientation of a boundary `(d-1)`-simplex given by `points` (in order),
/// relative to a point `inward` on the interior side.
pub fn boundary_orientation(points: &[&Point], inward: &Point) -> Result<i8> {
    let mut all: Vec<&Point> = points.to_vec();
    all.push(inward);
    let v = simplex_volume(&all)?;
    if v.is_zero() {
        return Err(Error::DegenerateSimplex(Vec::new()));
    }
    Ok(-v.signum())
}

/// A point off the affine hyperplane spanned by a `(d-1)`-simplex.
pub(crate) fn off_hyperplane_point(points: &[&Point]) -> Result<Point> {
    let d = points[0].dim();
    for axis in 1..=d {
        let mut c = points[0].coords().to_vec();
        c[axis - 1] += &Rational::one();
        let q = Point::new(c);
        let mut all = points.to_vec();
        all.push(&q);
        if !simplex_volume(&all)?.is_zero() {
            return Ok(q);
        }
    }
    Err(Error::DegenerateSimplex(Vec::new()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Named pass/fail entries; failures carry the first violating witness.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub checks: Vec<ValidityCheck>,
}

impl ValidityReport {
    pub fn record(&mut self, name: &str, outcome: std::result::Result<(), String>) {
        self.checks.push(ValidityCheck {
            name: name.to_string(),
            passed: outcome.is_ok(),
            witness: outcome.err(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&ValidityCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&ValidityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn face_incidence(t: &Triangulation) -> BTreeMap<Vec<VertexId>, Vec<(usize, usize)>> {
    let mut faces: BTreeMap<Vec<VertexId>, Vec<(usize, usize)>> = BTreeMap::new();
    for (si, s) in t.simplices().iter().enumerate() {
        for (f, omitted) in s.faces() {
            faces.entry(f).or_default().push((si, omitted));
        }
    }
    faces
}

/// Checks non-degeneracy, the pseudo-manifold face counts, total unsigned
/// volume against `expected_volume`, and orientation coherence across
/// interior faces.
pub fn validate_triangulation(t: &Triangulation, expected_volume: &Rational) -> ValidityReport {
    let mut report = ValidityReport::default();
    if let Some(s) = t.simplices().iter().find(|s| s.dim() != t.dim()) {
        report.record("dimension", Err(format!("simplex {:?} has dimension {}", s.ids(), s.dim())));
        return report;
    }
    report.record("dimension", Ok(()));

    let volumes: Vec<Rational> = match t.simplices().iter().map(|s| signed_volume(s, t)).collect() {
        Ok(v) => v,
        Err(e) => {
            report.record("non_degenerate", Err(e.to_string()));
            return report;
        }
    };
    let degenerate = t.simplices().iter().zip(&volumes).find(|(_, v)| v.is_zero());
    if t.is_deformed() {
        report.record("non_degenerate", Ok(()));
    } else {
        report.record(
            "non_degenerate",
            match degenerate {
                Some((s, _)) => Err(format!("simplex {:?} has zero volume", s.ids())),
                None => Ok(()),
            },
        );
    }

    let faces = face_incidence(t);
    report.record(
        "pseudo_manifold",
        match faces.iter().find(|(_, parents)| parents.len() > 2) {
            Some((f, parents)) => Err(format!("face {f:?} lies in {} simplices", parents.len())),
            None => Ok(()),
        },
    );

    let total: Rational = volumes.iter().map(Rational::abs).sum();
    report.record(
        "total_volume",
        if &total == expected_volume {
            Ok(())
        } else {
            Err(format!("unsigned volume sum {total}, expected {expected_volume}"))
        },
    );

    // After orienting each simplex positively, the two parents of an interior
    // face must induce opposite orientations on it.
    let positive_sign = |si: usize| -> i8 {
        let s = &t.simplices()[si];
        s.sign() * volumes[si].signum()
    };
    let incoherent = faces.iter().find(|(_, parents)| {
        if parents.len() != 2 {
            return false;
        }
        let induced = |(si, omitted): (usize, usize)| {
            let sign = positive_sign(si);
            if omitted % 2 == 0 {
                sign
            } else {
                -sign
            }
        };
        induced(parents[0]) == induced(parents[1])
    });
    report.record(
        "orientation",
        match (degenerate, incoherent) {
            (Some(_), _) if !t.is_deformed() => Err("skipped: degenerate simplices present".into()),
            (_, Some((f, _))) => Err(format!("face {f:?} has parents on the same side")),
            _ => Ok(()),
        },
    );
    report
}

/// Flips orientation signs so that every maximal simplex has positive volume.
pub fn orient_positively(t: &Triangulation) -> Result<Triangulation> {
    let mut out = t.clone();
    let mut simplices = Vec::with_capacity(t.simplices().len());
    for s in t.simplices() {
        let v = signed_volume(s, t)?;
        match v.signum() {
            0 => return Err(Error::DegenerateSimplex(s.ids().to_vec())),
            1 => simplices.push(s.clone()),
            _ => simplices.push(s.flipped()),
        }
    }
    out.replace_simplices(simplices);
    Ok(out)
}

/// The `(d-1)`-complex of faces lying in exactly one maximal simplex, oriented
/// with the outward normal last. Vertex ids are preserved.
pub fn boundary_complex(t: &Triangulation) -> Result<Triangulation> {
    if t.is_boundary_complex() {
        return Err(Error::DimensionMismatch { expected: t.dim(), found: t.dim() - 1 });
    }
    let faces = face_incidence(t);
    let mut simplices = Vec::new();
    let mut used = BTreeSet::new();
    for (face, parents) in &faces {
        match parents.len() {
            1 => {
                let (si, omitted) = parents[0];
                let inward = t.point(t.simplices()[si].ids()[omitted])?;
                let pts: Vec<&Point> = face.iter().map(|&id| t.point(id)).collect::<Result<_>>()?;
                let sign = boundary_orientation(&pts, inward)
                    .map_err(|_| Error::DegenerateSimplex(t.simplices()[si].ids().to_vec()))?;
                used.extend(face.iter().copied());
                simplices.push(Simplex::from_sorted(face.clone(), sign));
            }
            2 => {}
            n => return Err(Error::NotPseudoManifold { face: face.clone(), count: n }),
        }
    }
    let vertices = used
        .into_iter()
        .map(|id| Ok((id, Vertex { point: t.point(id)?.clone(), boundary: true })))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Triangulation::new(t.dim(), vertices, simplices)
}

/// True iff the vertex set is closed under `x -> -x` and so is the set of
/// maximal simplices.
pub fn check_antipodal_symmetry(b: &Triangulation) -> bool {
    let index = b.point_index();
    let mut antipode = HashMap::new();
    for (&id, v) in b.vertices() {
        match index.get(&v.point.negated()) {
            Some(&a) => {
                antipode.insert(id, a);
            }
            None => return false,
        }
    }
    let simplex_sets: BTreeSet<&[VertexId]> = b.simplices().iter().map(|s| s.ids()).collect();
    b.simplices().iter().all(|s| {
        let mut neg: Vec<VertexId> = s.ids().iter().map(|id| antipode[id]).collect();
        neg.sort_unstable();
        simplex_sets.contains(neg.as_slice())
    })
}

/// Barycentric coordinates of `p` with respect to a `d`-simplex of `Q^d`.
pub fn barycentric_coordinates(p: &Point, ambient: &[Point]) -> Result<Vec<Rational>> {
    let refs: Vec<&Point> = ambient.iter().collect();
    let total = simplex_volume(&refs)?;
    if total.is_zero() {
        return Err(Error::DegenerateSimplex(Vec::new()));
    }
    (0..ambient.len())
        .map(|i| {
            let mut r = refs.clone();
            r[i] = p;
            Ok(simplex_volume(&r)? / &total)
        })
        .collect()
}

/// Indices of the ambient vertices spanning the minimal face containing `p`.
pub fn carrier(p: &Point, ambient: &[Point]) -> Result<BTreeSet<usize>> {
    let lambda = barycentric_coordinates(p, ambient)?;
    if lambda.iter().any(|l| l.signum() < 0) {
        return Err(Error::OutsideSimplex);
    }
    Ok(lambda.iter().enumerate().filter(|(_, l)| l.signum() > 0).map(|(i, _)| i).collect())
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: VertexId,
    coords: Vec<Rational>,
    boundary: bool,
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    dim: usize,
    vertices: Vec<VertexJson>,
    simplices: Vec<Vec<VertexId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    center: Option<VertexId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    regions: Option<Vec<Region>>,
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let all_inner = self.regions.iter().all(|r| *r == Region::Inner);
        TriangulationJson {
            dim: self.dim,
            vertices: self
                .vertices
                .iter()
                .map(|(&id, v)| VertexJson { id, coords: v.point.coords().to_vec(), boundary: v.boundary })
                .collect(),
            simplices: self.simplices.iter().map(Simplex::ordered).collect(),
            center: self.center,
            regions: (!all_inner).then(|| self.regions.clone()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TriangulationJson::deserialize(deserializer)?;
        let mut vertices = BTreeMap::new();
        for v in raw.vertices {
            if vertices.insert(v.id, Vertex { point: Point::new(v.coords), boundary: v.boundary }).is_some() {
                return Err(D::Error::custom(format!("duplicate vertex id {}", v.id)));
            }
        }
        let simplices = raw
            .simplices
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let mut t = Triangulation::new(raw.dim, vertices, simplices).map_err(D::Error::custom)?;
        if let Some(regions) = raw.regions {
            t = t.with_regions(regions).map_err(D::Error::custom)?;
        }
        t.with_center(raw.center).map_err(D::Error::custom)
    }
}
