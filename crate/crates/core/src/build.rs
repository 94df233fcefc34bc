//! Deterministic constructors for the complexes used by the verifier.
//!
//! Vertex id layout for the cross-polytope: `+e_i` gets id `2(i-1)`, `-e_i`
//! gets `2(i-1) + 1` and the origin gets `2d`. Builders that add vertices
//! allocate ids above the current maximum, in a deterministic order.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::degree::FacetSignature;
use crate::error::{Error, Result};
use crate::exactmath::{factorial, Rational};
use crate::simplicial::{
    boundary_complex, off_hyperplane_point, orient_positively, simplex_volume, Point, Region, Simplex,
    Triangulation, Vertex, VertexId,
};

/// The `d`-dimensional cross-polytope `conv{±e_1, ..., ±e_d}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossPolytope {
    dim: usize,
}

impl CrossPolytope {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        Ok(CrossPolytope { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `e_label` for `label` in `±1..=±d`; label 0 is the origin.
    pub fn extreme_point(&self, label: i32) -> Result<Point> {
        let axis = label.unsigned_abs() as usize;
        if axis > self.dim {
            return Err(Error::InvalidParameter(format!("label {label} in dimension {}", self.dim)));
        }
        Ok(if axis == 0 { Point::origin(self.dim) } else { Point::unit(self.dim, axis, label) })
    }

    /// The `2d` extreme points with their labels, `+1, -1, +2, -2, ...`.
    pub fn extreme_points(&self) -> Vec<(i32, Point)> {
        (1..=self.dim as i32)
            .flat_map(|i| [i, -i])
            .map(|l| (l, Point::unit(self.dim, l.unsigned_abs() as usize, l)))
            .collect()
    }

    /// All `2^d` facet sign vectors, in lexicographic order with `+` first.
    pub fn facet_signatures(&self) -> Vec<FacetSignature> {
        (0..1u64 << self.dim)
            .map(|mask| {
                FacetSignature::new(
                    (0..self.dim).map(|i| if mask >> (self.dim - 1 - i) & 1 == 0 { 1 } else { -1 }).collect(),
                )
            })
            .collect()
    }

    /// `2^d / d!`.
    pub fn volume(&self) -> Rational {
        Rational::from(1i64 << self.dim) / factorial(self.dim)
    }

    /// Volume of the enclosure `2P`, `4^d / d!`.
    pub fn enclosure_volume(&self) -> Rational {
        Rational::from(1i64 << (2 * self.dim)) / factorial(self.dim)
    }

    /// True iff `p` lies on the boundary `|x|_1 = 1`.
    pub fn on_boundary(&self, p: &Point) -> bool {
        p.l1_norm() == Rational::one()
    }
}

fn vertex(point: Point, boundary: bool) -> Vertex {
    Vertex { point, boundary }
}

/// Cone from the origin over the `2^d` facets of the cross-polytope.
pub fn cross_polytope_cone(d: usize) -> Result<Triangulation> {
    let p = CrossPolytope::new(d)?;
    let origin = 2 * d;
    let mut vertices = BTreeMap::new();
    for (label, point) in p.extreme_points() {
        vertices.insert(extreme_id(label), vertex(point, true));
    }
    vertices.insert(origin, vertex(Point::origin(d), false));
    let simplices = p
        .facet_signatures()
        .iter()
        .map(|sig| {
            let mut ids = vec![origin];
            ids.extend(sig.signs().iter().enumerate().map(|(i, &s)| extreme_id(s as i32 * (i as i32 + 1))));
            Simplex::new(ids)
        })
        .collect::<Result<Vec<_>>>()?;
    orient_positively(&Triangulation::new(d, vertices, simplices)?.with_center(Some(origin))?)
}

fn extreme_id(label: i32) -> VertexId {
    let axis = label.unsigned_abs() as usize;
    2 * (axis - 1) + usize::from(label < 0)
}

/// Checks that `b` is a boundary complex lying on `∂P`, one facet per simplex.
fn check_cross_polytope_boundary(b: &Triangulation) -> Result<()> {
    if !b.is_boundary_complex() {
        return Err(Error::NotCrossPolytopeBoundary("simplices are not (d-1)-dimensional".into()));
    }
    let p = CrossPolytope::new(b.dim())?;
    if let Some((id, _)) = b.vertices().iter().find(|(_, v)| !p.on_boundary(&v.point)) {
        return Err(Error::NotCrossPolytopeBoundary(format!("vertex {id} is not on the boundary")));
    }
    for s in b.simplices() {
        for axis in 0..b.dim() {
            let signs: BTreeSet<i8> = s
                .ids()
                .iter()
                .map(|&id| b.point(id).map(|pt| pt.coords()[axis].signum()))
                .collect::<Result<BTreeSet<_>>>()?;
            if signs.contains(&1) && signs.contains(&-1) {
                return Err(Error::NotCrossPolytopeBoundary(format!(
                    "simplex {:?} is not contained in a facet",
                    s.ids()
                )));
            }
        }
    }
    Ok(())
}

/// Cones a boundary complex of the cross-polytope to a new centre vertex at
/// the origin (id `max + 1`).
pub fn star_from_boundary(b: &Triangulation) -> Result<Triangulation> {
    check_cross_polytope_boundary(b)?;
    let center = b.max_id().map_or(0, |m| m + 1);
    let mut vertices: BTreeMap<_, _> =
        b.vertices().iter().map(|(&id, v)| (id, vertex(v.point.clone(), true))).collect();
    vertices.insert(center, vertex(Point::origin(b.dim()), false));
    let simplices = b
        .simplices()
        .iter()
        .map(|s| {
            let mut ids = vec![center];
            ids.extend_from_slice(s.ids());
            Simplex::new(ids)
        })
        .collect::<Result<Vec<_>>>()?;
    orient_positively(&Triangulation::new(b.dim(), vertices, simplices)?.with_center(Some(center))?)
}

/// Staircase triangulation of `scale·P \ int(P)` over the boundary complex
/// `b`. Outer copies get ids above `b`'s maximum.
pub fn shell_prisms(b: &Triangulation, scale: &Rational) -> Result<Triangulation> {
    shell_prisms_from(b, scale, b.max_id().map_or(0, |m| m + 1))
}

/// As [`shell_prisms`], with the outer copy of the `k`-th boundary vertex (in
/// ascending id order) at id `base + k`.
pub fn shell_prisms_from(b: &Triangulation, scale: &Rational, base: VertexId) -> Result<Triangulation> {
    if scale <= &Rational::one() {
        return Err(Error::InvalidParameter(format!("shell scale {scale} must exceed 1")));
    }
    if !b.is_boundary_complex() {
        return Err(Error::NotCrossPolytopeBoundary("shell needs a boundary complex".into()));
    }
    if b.max_id().is_some_and(|m| m >= base) {
        return Err(Error::InvalidParameter(format!("outer id base {base} collides with inner ids")));
    }
    let outer: HashMap<VertexId, VertexId> =
        b.vertices().keys().enumerate().map(|(k, &id)| (id, base + k)).collect();
    let mut vertices = BTreeMap::new();
    for (&id, v) in b.vertices() {
        vertices.insert(id, vertex(v.point.clone(), false));
        vertices.insert(outer[&id], vertex(v.point.scaled(scale), true));
    }
    let mut simplices = Vec::new();
    for tau in b.simplices() {
        let w = tau.ids();
        for k in 0..w.len() {
            let mut ids: Vec<VertexId> = w[..=k].to_vec();
            ids.extend(w[k..].iter().map(|id| outer[id]));
            simplices.push(Simplex::new(ids)?);
        }
    }
    let n = simplices.len();
    orient_positively(&Triangulation::new(b.dim(), vertices, simplices)?.with_regions(vec![Region::Shell; n])?)
}

/// Union of an inner triangulation and a shell sharing its boundary vertices.
/// Inner vertices lose their boundary flag; the centre is kept.
pub fn enclose(inner: &Triangulation, shell: &Triangulation) -> Result<Triangulation> {
    if inner.dim() != shell.dim() {
        return Err(Error::DimensionMismatch { expected: inner.dim(), found: shell.dim() });
    }
    let mut vertices: BTreeMap<_, _> =
        inner.vertices().iter().map(|(&id, v)| (id, vertex(v.point.clone(), false))).collect();
    for (&id, v) in shell.vertices() {
        match vertices.get(&id) {
            Some(existing) if existing.point != v.point => {
                return Err(Error::InvalidParameter(format!("vertex {id} differs between inner and shell")));
            }
            Some(_) => {}
            None => {
                vertices.insert(id, v.clone());
            }
        }
    }
    let simplices: Vec<Simplex> = inner.simplices().iter().chain(shell.simplices()).cloned().collect();
    let regions = vec![Region::Inner; inner.simplices().len()]
        .into_iter()
        .chain(vec![Region::Shell; shell.simplices().len()])
        .collect();
    Triangulation::new(inner.dim(), vertices, simplices)?.with_regions(regions)?.with_center(inner.center())
}

/// `T = t_p ∪ shell_prisms(∂t_p, 2)`, a triangulation of `C = 2P`.
pub fn assemble_enclosure(t_p: &Triangulation) -> Result<Triangulation> {
    let b = boundary_complex(t_p)?;
    let base = t_p.max_id().map_or(0, |m| m + 1);
    enclose(t_p, &shell_prisms_from(&b, &Rational::from(2), base)?)
}

/// Square enclosure `[-h, h]^2` of a triangulated diamond, following the
/// corner-fan and edge-midpoint pattern. New vertices get ids above `t_p`'s.
pub fn square_enclosure_2d(t_p: &Triangulation, halfwidth: &Rational) -> Result<Triangulation> {
    let b = boundary_complex(t_p)?;
    let base = t_p.max_id().map_or(0, |m| m + 1);
    enclose(t_p, &square_shell_from(&b, halfwidth, base)?)
}

const QUADRANTS: [(i8, i8); 4] = [(1, 1), (-1, 1), (-1, -1), (1, -1)];

/// Shell between the diamond boundary `b` and the square of half-width `h`.
/// Corners get ids `base..base+4` (quadrant order `++, -+, --, +-`), edge
/// midpoints `base+4..base+8` (outside `+e_1, +e_2, -e_1, -e_2`).
pub fn square_shell_from(b: &Triangulation, h: &Rational, base: VertexId) -> Result<Triangulation> {
    if b.dim() != 2 {
        return Err(Error::InvalidDimension(b.dim()));
    }
    if h <= &Rational::one() {
        return Err(Error::InvalidParameter(format!("half-width {h} does not enclose the diamond strictly")));
    }
    check_cross_polytope_boundary(b)?;
    let z = Rational::zero();
    let corner = |q: usize| base + q;
    let mut vertices = BTreeMap::new();
    for (&id, v) in b.vertices() {
        vertices.insert(id, vertex(v.point.clone(), false));
    }
    for (q, &(sx, sy)) in QUADRANTS.iter().enumerate() {
        let c = Point::new(vec![h * &Rational::from(sx as i64), h * &Rational::from(sy as i64)]);
        vertices.insert(corner(q), vertex(c, true));
    }
    // (extreme label, midpoint, the two corners adjacent to it)
    let mids: [(i32, Point, usize, usize); 4] = [
        (1, Point::new(vec![h.clone(), z.clone()]), 0, 3),
        (2, Point::new(vec![z.clone(), h.clone()]), 1, 0),
        (-1, Point::new(vec![-h, z.clone()]), 2, 1),
        (-2, Point::new(vec![z.clone(), -h]), 3, 2),
    ];
    let index = b.point_index();
    let edges = b.edges();
    let mut simplices = Vec::new();

    let mut assigned: BTreeSet<VertexId> = BTreeSet::new();
    for (q, &(sx, sy)) in QUADRANTS.iter().enumerate() {
        // Boundary vertices on the diamond edge from sx·e_1 to sy·e_2, ordered by |y|.
        let mut on_edge: Vec<(Rational, VertexId)> = b
            .vertices()
            .iter()
            .filter(|(_, v)| {
                let c = v.point.coords();
                (c[0].is_zero() || c[0].signum() == sx) && (c[1].is_zero() || c[1].signum() == sy)
            })
            .map(|(&id, v)| (v.point.coords()[1].abs(), id))
            .collect();
        on_edge.sort();
        assigned.extend(on_edge.iter().map(|(_, id)| *id));
        for pair in on_edge.windows(2) {
            let (u, w) = (pair[0].1, pair[1].1);
            if !edges.contains(&(u.min(w), u.max(w))) {
                return Err(Error::NotCrossPolytopeBoundary(format!(
                    "consecutive diamond vertices {u} and {w} are not joined by a boundary edge"
                )));
            }
            simplices.push(Simplex::new(vec![corner(q), u, w])?);
        }
    }
    if let Some(id) = b.vertices().keys().find(|id| !assigned.contains(id)) {
        return Err(Error::NotCrossPolytopeBoundary(format!("vertex {id} not on any quadrant edge")));
    }
    for (k, (label, m, c1, c2)) in mids.into_iter().enumerate() {
        let e = *index
            .get(&Point::unit(2, label.unsigned_abs() as usize, label))
            .ok_or_else(|| Error::NotCrossPolytopeBoundary(format!("extreme point e_{label} missing")))?;
        let mid = base + 4 + k;
        vertices.insert(mid, vertex(m, true));
        simplices.push(Simplex::new(vec![corner(c1), mid, e])?);
        simplices.push(Simplex::new(vec![mid, corner(c2), e])?);
    }
    let n = simplices.len();
    orient_positively(&Triangulation::new(2, vertices, simplices)?.with_regions(vec![Region::Shell; n])?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RefinementScheme {
    /// Full barycentric subdivision: every `k`-simplex becomes `(k+1)!` cells.
    Barycentric,
    /// Edgewise (Freudenthal) subdivision: every `k`-simplex becomes `2^k`
    /// cells whose new vertices are edge midpoints.
    EdgeMidpoint,
}

impl FromStr for RefinementScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "barycentric" => Ok(RefinementScheme::Barycentric),
            "edge-midpoint" => Ok(RefinementScheme::EdgeMidpoint),
            other => Err(Error::InvalidParameter(format!("unknown refinement scheme {other:?}"))),
        }
    }
}

impl fmt::Display for RefinementScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RefinementScheme::Barycentric => "barycentric",
            RefinementScheme::EdgeMidpoint => "edge-midpoint",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementSpec {
    pub scheme: RefinementScheme,
    pub rounds: u32,
    /// When set, each round is followed by one stellar subdivision of a
    /// randomly chosen interior cell at a random interior point. The
    /// boundary is never touched, so its symmetry is preserved.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RefinementSpec {
    pub fn new(scheme: RefinementScheme, rounds: u32) -> Self {
        RefinementSpec { scheme, rounds, seed: None }
    }
}

/// Applies `spec.rounds` rounds of the chosen subdivision. Works on full
/// triangulations and on boundary complexes.
pub fn refine(t: &Triangulation, spec: &RefinementSpec) -> Result<Triangulation> {
    let mut rng = spec.seed.map(ChaCha8Rng::seed_from_u64);
    let mut current = t.clone();
    for _ in 0..spec.rounds {
        current = subdivide_once(&current, spec.scheme)?;
        if let Some(rng) = rng.as_mut() {
            if !current.is_boundary_complex() {
                current = stellar_insert(&current, rng)?;
            }
        }
    }
    Ok(current)
}

/// A new vertex is named by the face (sorted original ids) it is the
/// barycenter of.
type FaceKey = Vec<VertexId>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Cells of the edgewise subdivision of an ordered `k`-simplex, each given as
/// vertex pairs `(a, b)` meaning the midpoint of `u_a` and `u_b`.
fn edgewise_template(k: usize) -> Vec<Vec<(usize, usize)>> {
    if k == 0 {
        return vec![vec![(0, 0)]];
    }
    let admissible = |y: &[u8]| y.windows(2).all(|w| w[0] >= w[1]) && y.iter().all(|&v| v <= 2);
    let mut cells = Vec::new();
    for corner in 0..1u32 << k {
        let base: Vec<u8> = (0..k).map(|i| (corner >> i & 1) as u8).collect();
        for perm in permutations(k) {
            let mut y = base.clone();
            let mut path = vec![y.clone()];
            for &axis in &perm {
                y[axis] += 1;
                path.push(y.clone());
            }
            if path.iter().all(|p| admissible(p)) {
                cells.push(
                    path.iter()
                        .map(|p| {
                            let twos = p.iter().filter(|&&v| v == 2).count();
                            let ones_or_more = p.iter().filter(|&&v| v >= 1).count();
                            (twos, ones_or_more)
                        })
                        .collect(),
                );
            }
        }
    }
    debug_assert_eq!(cells.len(), 1 << k);
    cells
}

/// A total order on vertex ids under which `u < w` iff `-u < -w` whenever
/// `u` and `w` are not antipodes of each other.
fn antipodal_order(t: &Triangulation) -> HashMap<VertexId, (VertexId, bool)> {
    let index = t.point_index();
    t.vertices()
        .iter()
        .map(|(&id, v)| {
            let key = match index.get(&v.point.negated()) {
                Some(&a) => (id.min(a), id > a),
                None => (id, false),
            };
            (id, key)
        })
        .collect()
}

fn subdivide_once(t: &Triangulation, scheme: RefinementScheme) -> Result<Triangulation> {
    let boundary_complex_input = t.is_boundary_complex();
    let order = antipodal_order(t);
    let template = match scheme {
        RefinementScheme::EdgeMidpoint => t.simplices().first().map(|s| edgewise_template(s.dim())),
        RefinementScheme::Barycentric => None,
    };
    let perms = t.simplices().first().map(|s| permutations(s.dim() + 1)).unwrap_or_default();

    let mut cells: Vec<(Vec<FaceKey>, usize)> = Vec::new();
    for (si, s) in t.simplices().iter().enumerate() {
        match scheme {
            RefinementScheme::Barycentric => {
                for p in &perms {
                    let chain: Vec<FaceKey> = (0..p.len())
                        .map(|j| {
                            let mut f: Vec<VertexId> = p[..=j].iter().map(|&i| s.ids()[i]).collect();
                            f.sort_unstable();
                            f
                        })
                        .collect();
                    cells.push((chain, si));
                }
            }
            RefinementScheme::EdgeMidpoint => {
                let mut u = s.ids().to_vec();
                u.sort_by_key(|id| order[id]);
                for cell in template.as_ref().expect("template exists when simplices exist") {
                    let keys = cell
                        .iter()
                        .map(|&(a, b)| {
                            let mut f = vec![u[a], u[b]];
                            f.sort_unstable();
                            f.dedup();
                            f
                        })
                        .collect();
                    cells.push((keys, si));
                }
            }
        }
    }

    // Faces lying in the boundary of a full complex.
    let boundary_faces: HashSet<FaceKey> = if boundary_complex_input {
        HashSet::new()
    } else {
        let mut count: HashMap<FaceKey, usize> = HashMap::new();
        for s in t.simplices() {
            for (f, _) in s.faces() {
                *count.entry(f).or_default() += 1;
            }
        }
        let mut sub = HashSet::new();
        for (f, c) in count {
            if c == 1 {
                for mask in 1..1u32 << f.len() {
                    sub.insert(f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
                }
            }
        }
        sub
    };

    let (dim, mut vertices, _, regions, center) = t.clone().into_parts();
    let mut next_id = t.max_id().map_or(0, |m| m + 1);
    let mut ids: HashMap<FaceKey, VertexId> = HashMap::new();
    let mut new_simplices = Vec::with_capacity(cells.len());
    let mut new_regions = Vec::with_capacity(cells.len());
    for (keys, parent) in &cells {
        let mut cell_ids = Vec::with_capacity(keys.len());
        for key in keys {
            let id = if key.len() == 1 {
                key[0]
            } else if let Some(&id) = ids.get(key) {
                id
            } else {
                let pts: Vec<&Point> = key.iter().map(|&v| t.point(v)).collect::<Result<_>>()?;
                let w = Rational::one() / Rational::from(key.len() as i64);
                let weights = vec![w; key.len()];
                let on_boundary = boundary_complex_input || boundary_faces.contains(key);
                vertices.insert(next_id, vertex(Point::combination(&pts, &weights), on_boundary));
                ids.insert(key.clone(), next_id);
                next_id += 1;
                next_id - 1
            };
            cell_ids.push(id);
        }
        new_simplices.push(Simplex::new(cell_ids)?);
        new_regions.push(regions[*parent]);
    }

    let out = Triangulation::new(dim, vertices, new_simplices)?.with_regions(new_regions)?.with_center(center)?;
    if boundary_complex_input {
        orient_like_parents(t, out, &cells)
    } else {
        orient_positively(&out)
    }
}

/// Gives every child of a boundary simplex the orientation of its parent.
fn orient_like_parents(
    parent_complex: &Triangulation,
    mut out: Triangulation,
    cells: &[(Vec<FaceKey>, usize)],
) -> Result<Triangulation> {
    let mut oriented = Vec::with_capacity(out.simplices().len());
    for (child, (_, parent_index)) in out.simplices().iter().zip(cells) {
        let parent = &parent_complex.simplices()[*parent_index];
        let parent_pts: Vec<&Point> =
            parent.ids().iter().map(|&id| parent_complex.point(id)).collect::<Result<_>>()?;
        let child_pts: Vec<&Point> = child.ids().iter().map(|&id| out.point(id)).collect::<Result<_>>()?;
        let q = off_hyperplane_point(&parent_pts)?;
        let side = |pts: &[&Point]| -> Result<i8> {
            let mut all = pts.to_vec();
            all.push(&q);
            Ok(simplex_volume(&all)?.signum())
        };
        let rel = side(&child_pts)? * side(&parent_pts)?;
        if rel == 0 {
            return Err(Error::DegenerateSimplex(child.ids().to_vec()));
        }
        oriented.push(Simplex::from_sorted(child.ids().to_vec(), parent.sign() * rel));
    }
    out.replace_simplices(oriented);
    Ok(out)
}

/// Splits one random full-dimensional inner cell at a random interior point.
fn stellar_insert(t: &Triangulation, rng: &mut ChaCha8Rng) -> Result<Triangulation> {
    let inner: Vec<usize> =
        t.regions().iter().enumerate().filter(|(_, r)| **r == Region::Inner).map(|(i, _)| i).collect();
    if inner.is_empty() {
        return Ok(t.clone());
    }
    let target = inner[rng.gen_range(0..inner.len())];
    let s = t.simplices()[target].clone();
    let raw: Vec<i64> = (0..s.ids().len()).map(|_| rng.gen_range(1..=4)).collect();
    let total: i64 = raw.iter().sum();
    let weights: Vec<Rational> = raw.iter().map(|&w| Rational::new(w, total)).collect::<Result<_>>()?;
    let pts: Vec<&Point> = s.ids().iter().map(|&id| t.point(id)).collect::<Result<_>>()?;
    let point = Point::combination(&pts, &weights);

    let (dim, mut vertices, simplices, regions, center) = t.clone().into_parts();
    let new_id = t.max_id().map_or(0, |m| m + 1);
    vertices.insert(new_id, vertex(point, false));
    let mut out_s = Vec::with_capacity(simplices.len() + s.dim());
    let mut out_r = Vec::with_capacity(simplices.len() + s.dim());
    for (i, (simplex, region)) in simplices.into_iter().zip(regions).enumerate() {
        if i == target {
            for k in 0..s.ids().len() {
                let mut ids = s.ids().to_vec();
                ids[k] = new_id;
                out_s.push(Simplex::new(ids)?);
                out_r.push(region);
            }
        } else {
            out_s.push(simplex);
            out_r.push(region);
        }
    }
    orient_positively(&Triangulation::new(dim, vertices, out_s)?.with_regions(out_r)?.with_center(center)?)
}

/// `conv(0, e_1, ..., e_d)` after `rounds` barycentric subdivisions. Vertex
/// `0` is the origin and vertex `i` is `e_i`.
pub fn standard_simplex(d: usize, rounds: u32) -> Result<Triangulation> {
    let vertices: BTreeMap<_, _> = standard_simplex_vertices(d)?
        .into_iter()
        .enumerate()
        .map(|(i, p)| (i, vertex(p, true)))
        .collect();
    let t = orient_positively(&Triangulation::new(d, vertices, vec![Simplex::new((0..=d).collect::<Vec<_>>())?])?)?;
    refine(&t, &RefinementSpec::new(RefinementScheme::Barycentric, rounds))
}

/// Ambient vertices `0, e_1, ..., e_d` of the standard simplex.
pub fn standard_simplex_vertices(d: usize) -> Result<Vec<Point>> {
    if d == 0 {
        return Err(Error::InvalidDimension(0));
    }
    Ok(std::iter::once(Point::origin(d)).chain((1..=d).map(|i| Point::unit(d, i, 1))).collect())
}
