//! Degree of the boundary map induced by a Tucker labeling, by oriented
//! preimage counts over the facets of the cross-polytope, plus the winding
//! number in the plane.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::build::CrossPolytope;
use crate::error::{Error, Result};
use crate::exactmath::det;
use crate::label::{find_complementary_edges, Labeling};
use crate::simplicial::{boundary_complex, Point, Simplex, Triangulation, VertexId};

/// The facet of the cross-polytope spanned by `s_i e_i`, `i = 1..d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetSignature {
    signs: Vec<i8>,
}

impl FacetSignature {
    pub fn new(signs: Vec<i8>) -> Self {
        FacetSignature { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Extreme points in axis order.
    pub fn points(&self) -> Vec<Point> {
        let d = self.signs.len();
        self.signs.iter().enumerate().map(|(i, &s)| Point::unit(d, i + 1, s as i32)).collect()
    }
}

impl fmt::Display for FacetSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for FacetSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FacetSignature({self})")
    }
}

impl Serialize for FacetSignature {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FacetSignature {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(serde::de::Error::custom(format!("bad sign character {other:?}"))),
            })
            .collect::<std::result::Result<Vec<i8>, _>>()
            .map(FacetSignature::new)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetTally {
    pub signature: FacetSignature,
    pub p: usize,
    pub n: usize,
}

impl FacetTally {
    pub fn net(&self) -> i64 {
        self.p as i64 - self.n as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub per_facet: Vec<FacetTally>,
    /// `p - n` on the all-plus facet.
    pub degree: i64,
    /// True iff `p - n` is the same on every facet.
    pub consistent: bool,
}

/// Orientation of the image simplex `e_{l(v_0)}, ..., e_{l(v_{d-1})}` relative
/// to the outward orientation of its facet: `sign((-1)^(d+1) det)`.
fn image_orientation(images: &[Point]) -> Result<i8> {
    let rows: Vec<_> = images.iter().map(|p| p.coords().to_vec()).collect();
    let s = det(&rows)?.signum();
    Ok(if images.len() % 2 == 0 { -s } else { s })
}

/// The target facet of a boundary simplex and whether the label map
/// preserves orientation there; `None` if the image is degenerate.
pub fn facet_signature_of(s: &Simplex, l: &Labeling, dim: usize) -> Result<Option<(FacetSignature, i8)>> {
    if s.dim() + 1 != dim {
        return Err(Error::DimensionMismatch { expected: dim - 1, found: s.dim() });
    }
    let labels: Vec<i32> = s.ids().iter().map(|&id| l.get(id)).collect::<Result<_>>()?;
    let mut signs = vec![0i8; dim];
    for &lab in &labels {
        let axis = lab.unsigned_abs() as usize;
        if axis == 0 || axis > dim || signs[axis - 1] != 0 {
            return Ok(None);
        }
        signs[axis - 1] = lab.signum() as i8;
    }
    let images: Vec<Point> = labels.iter().map(|&lab| Point::unit(dim, lab.unsigned_abs() as usize, lab)).collect();
    Ok(Some((FacetSignature::new(signs), s.sign() * image_orientation(&images)?)))
}

fn boundary_of(t: &Triangulation) -> Result<Triangulation> {
    if t.is_boundary_complex() {
        Ok(t.clone())
    } else {
        boundary_complex(t)
    }
}

/// Tallies `(p, n)` on all `2^d` facets. Refuses to run if a boundary edge is
/// complementary, since the label map is then not simplicial into the cone.
pub fn degree_of_labeling(b: &Triangulation, l: &Labeling) -> Result<DegreeReport> {
    let b = boundary_of(b)?;
    let d = b.dim();
    if let Some(edge) = find_complementary_edges(&b, l).into_iter().next() {
        return Err(Error::NotSimplicial(edge));
    }
    let mut tally: BTreeMap<FacetSignature, (usize, usize)> = BTreeMap::new();
    for s in b.simplices() {
        if let Some((sig, sign)) = facet_signature_of(s, l, d)? {
            let e = tally.entry(sig).or_default();
            if sign > 0 {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
        }
    }
    let per_facet: Vec<FacetTally> = CrossPolytope::new(d)?
        .facet_signatures()
        .into_iter()
        .map(|sig| {
            let (p, n) = tally.get(&sig).copied().unwrap_or_default();
            FacetTally { signature: sig, p, n }
        })
        .collect();
    let degree = per_facet[0].net();
    let consistent = per_facet.iter().all(|f| f.net() == degree);
    Ok(DegreeReport { per_facet, degree, consistent })
}

/// Quarter turns of the image sequence `e_{l(v)}` along the boundary cycle
/// traversed counter-clockwise, divided by four.
pub fn winding_number_2d(b: &Triangulation, l: &Labeling) -> Result<i64> {
    let b = boundary_of(b)?;
    if b.dim() != 2 {
        return Err(Error::InvalidDimension(b.dim()));
    }
    if let Some(edge) = find_complementary_edges(&b, l).into_iter().next() {
        return Err(Error::NotSimplicial(edge));
    }
    let mut nbrs: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (u, v) in b.edges() {
        nbrs.entry(u).or_default().push(v);
        nbrs.entry(v).or_default().push(u);
    }
    if nbrs.is_empty() || nbrs.values().any(|n| n.len() != 2) {
        return Err(Error::NotACycle);
    }
    let cross = |p: &Point, q: &Point| &p.coords()[0] * &q.coords()[1] - &p.coords()[1] * &q.coords()[0];

    let start = *nbrs.keys().next().expect("non-empty");
    let p0 = b.point(start)?;
    let next = *nbrs[&start]
        .iter()
        .find(|&&w| cross(p0, b.point(w).expect("edge vertices exist")).signum() > 0)
        .ok_or(Error::NotACycle)?;
    let mut cycle = vec![start];
    let mut visited = BTreeSet::from([start]);
    let (mut prev, mut cur) = (start, next);
    while cur != start {
        if !visited.insert(cur) {
            return Err(Error::NotACycle);
        }
        cycle.push(cur);
        let n = &nbrs[&cur];
        let following = if n[0] == prev { n[1] } else { n[0] };
        prev = cur;
        cur = following;
    }
    if cycle.len() != nbrs.len() {
        return Err(Error::NotACycle);
    }

    let image = |id: VertexId| -> Result<Point> {
        let lab = l.get(id)?;
        if lab == 0 || lab.abs() > 2 {
            return Err(Error::InvalidLabel { vertex: id, label: lab });
        }
        Ok(Point::unit(2, lab.unsigned_abs() as usize, lab))
    };
    let mut quarter_turns = 0i64;
    for (i, &id) in cycle.iter().enumerate() {
        let a = image(id)?;
        let c = image(cycle[(i + 1) % cycle.len()])?;
        quarter_turns += cross(&a, &c).signum() as i64;
    }
    if quarter_turns % 4 != 0 {
        return Err(Error::NotACycle);
    }
    Ok(quarter_turns / 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{cross_polytope_cone, refine, RefinementScheme, RefinementSpec};
    use crate::fixtures::diamond;
    use crate::label::{labeling_from_odd_map, random_odd_map_labeling, random_tucker_labeling};
    use crate::simplicial::simplex_volume;
    use proptest::prelude::*;

    fn identity_boundary(d: usize) -> (Triangulation, Labeling) {
        let b = boundary_complex(&cross_polytope_cone(d).unwrap()).unwrap();
        let l = labeling_from_odd_map(&b, |x| x.coords().to_vec()).unwrap();
        (b, l)
    }

    /// Brute-force degree: for each boundary simplex whose image is the
    /// all-plus facet, compare the geometric orientation of the simplex and
    /// of its image, each taken against the origin.
    fn brute_force_degree(b: &Triangulation, l: &Labeling) -> i64 {
        let d = b.dim();
        let origin = Point::origin(d);
        let orient = |pts: &[Point]| {
            let mut refs: Vec<&Point> = pts.iter().collect();
            refs.push(&origin);
            simplex_volume(&refs).unwrap().signum() as i64
        };
        let mut total = 0;
        for s in b.simplices() {
            let ids = s.ids();
            let labels: Vec<i32> = ids.iter().map(|&id| l.get(id).unwrap()).collect();
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            if sorted != (1..=d as i32).collect::<Vec<_>>() {
                continue;
            }
            let pts: Vec<Point> = ids.iter().map(|&id| b.point(id).unwrap().clone()).collect();
            let imgs: Vec<Point> = labels.iter().map(|&x| Point::unit(d, x as usize, 1)).collect();
            total += orient(&pts) * orient(&imgs);
        }
        total
    }

    #[test]
    fn signature_examples() {
        let (b, _) = identity_boundary(2);
        let s = b.simplices().iter().find(|s| s.ids() == [0, 2]).unwrap();
        let l = Labeling::tucker([(0, 1), (2, 2)]);
        let (sig, sign) = facet_signature_of(s, &l, 2).unwrap().unwrap();
        assert_eq!(sig.to_string(), "++");
        assert_eq!(sign, 1);
        let swapped = Labeling::tucker([(0, 2), (2, 1)]);
        assert_eq!(facet_signature_of(s, &swapped, 2).unwrap().unwrap().1, -1);
        assert!(facet_signature_of(s, &Labeling::tucker([(0, 1), (2, 1)]), 2).unwrap().is_none());
        assert!(facet_signature_of(s, &Labeling::tucker([(0, 1), (2, -1)]), 2).unwrap().is_none());
        let tri = Simplex::new(vec![0, 1, 2]).unwrap();
        assert!(facet_signature_of(&tri, &l, 2).is_err());
    }

    #[test]
    fn identity_and_antipodal() {
        for d in 1..=4 {
            let (b, l) = identity_boundary(d);
            let r = degree_of_labeling(&b, &l).unwrap();
            assert_eq!(r.degree, 1);
            assert!(r.consistent);
            assert!(r.per_facet.iter().all(|f| (f.p, f.n) == (1, 0)));
            let neg = degree_of_labeling(&b, &l.negated()).unwrap();
            assert_eq!(neg.degree, if d % 2 == 0 { 1 } else { -1 });
            assert_eq!(neg.degree, brute_force_degree(&b, &l.negated()));
        }
    }

    #[test]
    fn rotation_has_degree_one() {
        let b = boundary_complex(&cross_polytope_cone(2).unwrap()).unwrap();
        let b = refine(&b, &RefinementSpec::new(RefinementScheme::Barycentric, 2)).unwrap();
        let rot = |x: &Point| vec![x.coords()[1].clone(), -&x.coords()[0]];
        let l = labeling_from_odd_map(&b, rot).unwrap();
        assert_eq!(degree_of_labeling(&b, &l).unwrap().degree, 1);
        assert_eq!(winding_number_2d(&b, &l).unwrap(), 1);
    }

    #[test]
    fn winding_examples() {
        let (b, l) = identity_boundary(2);
        assert_eq!(winding_number_2d(&b, &l).unwrap(), 1);
        assert_eq!(winding_number_2d(&b, &l.negated()).unwrap(), 1);
        let (t, l) = diamond();
        assert_eq!(winding_number_2d(&t, &l).unwrap(), -1);
        assert_eq!(degree_of_labeling(&t, &l).unwrap().degree, -1);
    }

    #[test]
    fn complementary_boundary_edge_is_refused() {
        let (b, mut l) = identity_boundary(2);
        l.set(2, -1);
        l.set(3, 1);
        assert!(matches!(degree_of_labeling(&b, &l), Err(Error::NotSimplicial(_))));
        assert!(matches!(winding_number_2d(&b, &l), Err(Error::NotSimplicial(_))));
    }

    #[test]
    fn signature_json() {
        let sig = FacetSignature::new(vec![1, -1, 1]);
        let s = serde_json::to_string(&sig).unwrap();
        assert_eq!(s, r#""+-+""#);
        assert_eq!(serde_json::from_str::<FacetSignature>(&s).unwrap(), sig);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn facet_independence_and_oddness(d in 1usize..=3, seed in any::<u64>(), rounds in 0u32..=1, odd_map in any::<bool>()) {
            let t = refine(&cross_polytope_cone(d).unwrap(), &RefinementSpec::new(RefinementScheme::EdgeMidpoint, rounds)).unwrap();
            let l = if odd_map { random_odd_map_labeling(&t, seed).unwrap() } else { random_tucker_labeling(&t, seed).unwrap() };
            let b = boundary_complex(&t).unwrap();
            if let Ok(r) = degree_of_labeling(&b, &l) {
                prop_assert!(r.consistent);
                prop_assert_eq!(r.degree.rem_euclid(2), 1);
                prop_assert_eq!(r.degree, brute_force_degree(&b, &l));
                if d == 2 {
                    prop_assert_eq!(winding_number_2d(&b, &l).unwrap(), r.degree);
                }
            }
        }
    }
}
