//! Tucker and Sperner labelings, their validation, generators and the
//! combinatorial searches (complementary edges, fully-labeled simplices).

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{det, Rational};
use crate::simplicial::{
    boundary_complex, carrier, check_antipodal_symmetry, simplex_volume, Point, Triangulation,
    ValidityReport, VertexId,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelKind {
    Tucker,
    Sperner,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub kind: LabelKind,
    labels: BTreeMap<VertexId, i32>,
}

impl Labeling {
    pub fn new(kind: LabelKind, labels: BTreeMap<VertexId, i32>) -> Self {
        Labeling { kind, labels }
    }

    pub fn tucker(labels: impl IntoIterator<Item = (VertexId, i32)>) -> Self {
        Labeling::new(LabelKind::Tucker, labels.into_iter().collect())
    }

    pub fn sperner(labels: impl IntoIterator<Item = (VertexId, i32)>) -> Self {
        Labeling::new(LabelKind::Sperner, labels.into_iter().collect())
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, i32> {
        &self.labels
    }

    pub fn get(&self, id: VertexId) -> Result<i32> {
        self.labels.get(&id).copied().ok_or(Error::MissingLabel(id))
    }

    pub fn set(&mut self, id: VertexId, label: i32) {
        self.labels.insert(id, label);
    }

    /// `v -> -l(v)` for every vertex.
    pub fn negated(&self) -> Labeling {
        Labeling::new(self.kind, self.labels.iter().map(|(&id, &l)| (id, -l)).collect())
    }

    /// Keeps only the given vertices.
    pub fn restricted(&self, ids: &BTreeSet<VertexId>) -> Labeling {
        Labeling::new(self.kind, self.labels.iter().filter(|(id, _)| ids.contains(id)).map(|(&i, &l)| (i, l)).collect())
    }
}

/// An edge whose endpoint labels sum to zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub endpoints: (VertexId, VertexId),
    pub labels: (i32, i32),
}

/// Ids of the vertices on the boundary of `t`: all of them for a boundary
/// complex, otherwise the vertices of its boundary faces.
pub fn boundary_vertex_ids(t: &Triangulation) -> Result<BTreeSet<VertexId>> {
    if t.is_boundary_complex() {
        return Ok(t.vertices().keys().copied().collect());
    }
    Ok(boundary_complex(t)?.vertices().keys().copied().collect())
}

fn boundary_of(t: &Triangulation) -> Result<Triangulation> {
    if t.is_boundary_complex() {
        Ok(t.clone())
    } else {
        boundary_complex(t)
    }
}

/// Antipode of every boundary vertex that has one.
fn antipodes(t: &Triangulation, ids: &BTreeSet<VertexId>) -> BTreeMap<VertexId, Option<VertexId>> {
    let index = t.point_index();
    ids.iter()
        .map(|&id| {
            let p = &t.vertices()[&id].point;
            (id, index.get(&p.negated()).copied())
        })
        .collect()
}

/// Tucker hypotheses: total, labels in `±1..=±d` (0 only at the centre),
/// `l(-v) = -l(v)` on the boundary, and a symmetric boundary.
pub fn validate_tucker(t: &Triangulation, l: &Labeling) -> ValidityReport {
    let mut report = ValidityReport::default();
    let d = t.dim() as i32;
    report.record(
        "tucker_kind",
        if l.kind == LabelKind::Tucker { Ok(()) } else { Err("labeling is not of Tucker kind".into()) },
    );
    report.record(
        "total",
        match t.vertices().keys().find(|id| !l.labels.contains_key(id)) {
            Some(id) => Err(format!("vertex {id} has no label")),
            None => Ok(()),
        },
    );
    let bad_range = l.labels.iter().find(|(&id, &lab)| {
        let zero_ok = lab == 0 && t.center() == Some(id);
        !(zero_ok || (lab != 0 && lab.abs() <= d))
    });
    report.record(
        "label_range",
        match bad_range {
            Some((id, lab)) => Err(format!("vertex {id} has label {lab}")),
            None => Ok(()),
        },
    );

    let boundary = match boundary_of(t) {
        Ok(b) => b,
        Err(e) => {
            report.record("antipodal_labels", Err(e.to_string()));
            return report;
        }
    };
    let ids: BTreeSet<VertexId> = boundary.vertices().keys().copied().collect();
    let mut violation = None;
    for (id, anti) in antipodes(t, &ids) {
        match anti {
            None => {
                violation = Some(format!("boundary vertex {id} has no antipode"));
                break;
            }
            Some(a) => {
                let (lv, la) = (l.labels.get(&id), l.labels.get(&a));
                if let (Some(&lv), Some(&la)) = (lv, la) {
                    if lv != -la {
                        violation = Some(format!("l({id}) = {lv} but l({a}) = {la} at its antipode"));
                        break;
                    }
                }
            }
        }
    }
    report.record("antipodal_labels", violation.map_or(Ok(()), Err));
    report.record(
        "boundary_symmetry",
        if check_antipodal_symmetry(&boundary) {
            Ok(())
        } else {
            Err("boundary complex is not antipodally symmetric".into())
        },
    );
    report
}

/// Every edge `{u, v}` of a maximal simplex with `l(u) + l(v) = 0` and
/// non-zero labels, ascending by endpoints.
pub fn find_complementary_edges(t: &Triangulation, l: &Labeling) -> Vec<EdgeWitness> {
    t.edges()
        .into_iter()
        .filter_map(|(u, v)| {
            let (lu, lv) = (*l.labels.get(&u)?, *l.labels.get(&v)?);
            (lu != 0 && lu + lv == 0).then_some(EdgeWitness { endpoints: (u, v), labels: (lu, lv) })
        })
        .collect()
}

/// `sign(g_i) * i` for the smallest `i` maximizing `|g_i|`.
fn argmax_label(g: &[Rational]) -> i32 {
    let mut best = 0;
    for i in 1..g.len() {
        if g[i].abs() > g[best].abs() {
            best = i;
        }
    }
    g[best].signum() as i32 * (best as i32 + 1)
}

/// Labels each vertex by the dominant signed coordinate of `g`. Oddness of
/// `g` is checked on boundary vertices.
pub fn labeling_from_odd_map<G>(t: &Triangulation, g: G) -> Result<Labeling>
where
    G: Fn(&Point) -> Vec<Rational>,
{
    let boundary = boundary_vertex_ids(t)?;
    let mut labels = BTreeMap::new();
    for (&id, v) in t.vertices() {
        let gv = g(&v.point);
        if gv.len() != t.dim() {
            return Err(Error::DimensionMismatch { expected: t.dim(), found: gv.len() });
        }
        if gv.iter().all(Rational::is_zero) {
            return Err(Error::ZeroMapValue(id));
        }
        if boundary.contains(&id) {
            let neg: Vec<Rational> = g(&v.point.negated()).into_iter().map(|x| -x).collect();
            if neg != gv {
                return Err(Error::NotOdd(id));
            }
        }
        labels.insert(id, argmax_label(&gv));
    }
    Ok(Labeling::new(LabelKind::Tucker, labels))
}

fn uniform_label(rng: &mut ChaCha8Rng, d: usize) -> i32 {
    let k = rng.gen_range(0..2 * d) as i32;
    if k % 2 == 0 {
        k / 2 + 1
    } else {
        -(k / 2 + 1)
    }
}

/// Uniform labels in `±1..=±d`, drawn in antipodal pairs on the boundary.
pub fn random_tucker_labeling(t: &Triangulation, seed: u64) -> Result<Labeling> {
    let boundary = boundary_of(t)?;
    if !check_antipodal_symmetry(&boundary) {
        return Err(Error::AsymmetricBoundary);
    }
    let ids: BTreeSet<VertexId> = boundary.vertices().keys().copied().collect();
    let anti = antipodes(t, &ids);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels = BTreeMap::new();
    for &id in t.vertices().keys() {
        if labels.contains_key(&id) {
            continue;
        }
        let l = uniform_label(&mut rng, t.dim());
        labels.insert(id, l);
        if let Some(Some(a)) = anti.get(&id) {
            labels.insert(*a, -l);
        }
    }
    Ok(Labeling::new(LabelKind::Tucker, labels))
}

/// An odd map `g(x) = A x + (1 - |x|_1) c` with `A` a random non-singular
/// integer matrix: linear, hence odd, on the boundary of the cross-polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddAffineMap {
    pub a: Vec<Vec<Rational>>,
    pub c: Vec<Rational>,
}

impl OddAffineMap {
    pub fn random(d: usize, rng: &mut ChaCha8Rng) -> Result<Self> {
        loop {
            let a: Vec<Vec<Rational>> =
                (0..d).map(|_| (0..d).map(|_| Rational::from(rng.gen_range(-3i64..=3))).collect()).collect();
            if det(&a)?.is_zero() {
                continue;
            }
            let c = (0..d).map(|_| Rational::from(rng.gen_range(-3i64..=3))).collect();
            return Ok(OddAffineMap { a, c });
        }
    }

    pub fn apply(&self, x: &Point) -> Vec<Rational> {
        let w = Rational::one() - x.l1_norm();
        self.a
            .iter()
            .zip(&self.c)
            .map(|(row, ci)| row.iter().zip(x.coords()).map(|(aij, xj)| aij * xj).sum::<Rational>() + ci * &w)
            .collect()
    }
}

/// Labeling induced by a random odd affine map (redrawn until it has no
/// zero on a vertex).
pub fn random_odd_map_labeling(t: &Triangulation, seed: u64) -> Result<Labeling> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g = OddAffineMap::random(t.dim(), &mut rng)?;
        match labeling_from_odd_map(t, |x| g.apply(x)) {
            Err(Error::ZeroMapValue(_)) => continue,
            other => return other,
        }
    }
}

/// Labels `s_i * i` with one random sign per axis: never complementary and,
/// on a symmetric boundary, never antipodal.
pub fn one_sided_labeling(t: &Triangulation, seed: u64) -> Labeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = t.dim();
    let signs: Vec<i32> = (0..d).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    let labels = t
        .vertices()
        .keys()
        .map(|&id| {
            let axis = rng.gen_range(0..d);
            (id, signs[axis] * (axis as i32 + 1))
        })
        .collect();
    Labeling::new(LabelKind::Tucker, labels)
}

/// Checks that each label `l(v)` names a vertex of `v`'s carrier (label `k`
/// is `ambient[k - 1]`). Errors if a vertex lies outside the simplex.
pub fn validate_sperner(t: &Triangulation, l: &Labeling, ambient: &[Point]) -> Result<ValidityReport> {
    if ambient.len() != t.dim() + 1 {
        return Err(Error::DimensionMismatch { expected: t.dim() + 1, found: ambient.len() });
    }
    let mut report = ValidityReport::default();
    report.record(
        "sperner_kind",
        if l.kind == LabelKind::Sperner { Ok(()) } else { Err("labeling is not of Sperner kind".into()) },
    );
    report.record(
        "total",
        match t.vertices().keys().find(|id| !l.labels.contains_key(id)) {
            Some(id) => Err(format!("vertex {id} has no label")),
            None => Ok(()),
        },
    );
    let mut violation = None;
    for (&id, v) in t.vertices() {
        let c = carrier(&v.point, ambient)?;
        if let Some(&lab) = l.labels.get(&id) {
            let ok = lab >= 1 && c.contains(&((lab - 1) as usize));
            if !ok && violation.is_none() {
                let names: Vec<usize> = c.iter().map(|i| i + 1).collect();
                violation = Some(format!("vertex {id} labeled {lab}, carrier {names:?}"));
            }
        }
    }
    report.record("carrier", violation.map_or(Ok(()), Err));
    Ok(report)
}

/// Draws each label uniformly from the vertex's carrier.
pub fn random_sperner_labeling(t: &Triangulation, ambient: &[Point], seed: u64) -> Result<Labeling> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels = BTreeMap::new();
    for (&id, v) in t.vertices() {
        let c: Vec<usize> = carrier(&v.point, ambient)?.into_iter().collect();
        labels.insert(id, c[rng.gen_range(0..c.len())] as i32 + 1);
    }
    Ok(Labeling::new(LabelKind::Sperner, labels))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullyLabeled {
    pub positive: usize,
    pub negative: usize,
    /// Vertex ids in ascending-label order, with the sign of that order.
    pub witnesses: Vec<(Vec<VertexId>, i8)>,
}

impl FullyLabeled {
    pub fn total(&self) -> usize {
        self.positive + self.negative
    }

    pub fn signed(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Maximal simplices carrying `d + 1` distinct labels, split by the sign of
/// the simplex with vertices sorted by label.
pub fn find_fully_labeled(t: &Triangulation, l: &Labeling) -> Result<FullyLabeled> {
    let mut out = FullyLabeled::default();
    for s in t.simplices() {
        let mut by_label: Vec<(i32, VertexId)> =
            s.ids().iter().map(|&id| Ok((l.get(id)?, id))).collect::<Result<_>>()?;
        by_label.sort_unstable();
        if by_label.windows(2).any(|w| w[0].0 == w[1].0) {
            continue;
        }
        let order: Vec<VertexId> = by_label.iter().map(|&(_, id)| id).collect();
        let pts: Vec<&Point> = order.iter().map(|&id| t.point(id)).collect::<Result<_>>()?;
        let sign = simplex_volume(&pts)?.signum();
        match sign {
            1 => out.positive += 1,
            -1 => out.negative += 1,
            _ => return Err(Error::DegenerateSimplex(s.ids().to_vec())),
        }
        out.witnesses.push((order, sign));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{
        cross_polytope_cone, refine, standard_simplex, standard_simplex_vertices, RefinementScheme, RefinementSpec,
    };
    use crate::fixtures::diamond;
    use proptest::prelude::*;

    /// `l(+-e_i) = +-i`, origin labeled `origin`.
    fn identity_cone(d: usize, origin: i32) -> (Triangulation, Labeling) {
        let t = cross_polytope_cone(d).unwrap();
        let mut labels = BTreeMap::new();
        for i in 1..=d {
            labels.insert(2 * (i - 1), i as i32);
            labels.insert(2 * (i - 1) + 1, -(i as i32));
        }
        labels.insert(2 * d, origin);
        (t, Labeling::tucker(labels))
    }

    #[test]
    fn validate_tucker_examples() {
        let (t, l) = identity_cone(3, 1);
        assert!(validate_tucker(&t, &l).passed());
        let (t, l) = diamond();
        assert!(validate_tucker(&t, &l).passed());

        let (t, mut l) = identity_cone(2, 1);
        l.set(0, 1);
        l.set(1, 1);
        let r = validate_tucker(&t, &l);
        assert_eq!(r.first_failure().unwrap().name, "antipodal_labels");
    }

    #[test]
    fn zero_label_only_at_center() {
        let (t, l) = identity_cone(2, 0);
        assert!(validate_tucker(&t, &l).passed());
        let (t, mut l) = identity_cone(2, 1);
        l.set(0, 0);
        l.set(1, 0);
        assert_eq!(validate_tucker(&t, &l).first_failure().unwrap().name, "label_range");
    }

    #[test]
    fn complementary_edge_examples() {
        let (t, l) = diamond();
        let edges = find_complementary_edges(&t, &l);
        assert!(!edges.is_empty());

        let t = cross_polytope_cone(2).unwrap();
        let ones = Labeling::tucker(t.vertices().keys().map(|&id| (id, 1)));
        assert!(find_complementary_edges(&t, &ones).is_empty());

        let (t, l) = identity_cone(2, 1);
        let edges = find_complementary_edges(&t, &l);
        assert!(edges.contains(&EdgeWitness { endpoints: (1, 4), labels: (-1, 1) }));
    }

    #[test]
    fn odd_map_examples() {
        let b = boundary_complex(&cross_polytope_cone(2).unwrap()).unwrap();
        let l = labeling_from_odd_map(&b, |x| x.coords().to_vec()).unwrap();
        assert_eq!(l.labels(), &BTreeMap::from([(0, 1), (1, -1), (2, 2), (3, -2)]));

        assert_eq!(argmax_label(&[Rational::new(1, 2).unwrap(), Rational::new(1, 2).unwrap()]), 1);

        let rot = |x: &Point| vec![x.coords()[1].clone(), -&x.coords()[0]];
        let l = labeling_from_odd_map(&b, rot).unwrap();
        assert_eq!(l.get(0).unwrap(), -2);
    }

    #[test]
    fn odd_map_errors() {
        let t = cross_polytope_cone(2).unwrap();
        assert!(matches!(labeling_from_odd_map(&t, |x| x.coords().to_vec()), Err(Error::ZeroMapValue(4))));
        let even = |x: &Point| vec![Rational::one(), x.coords()[0].clone()];
        assert!(matches!(labeling_from_odd_map(&t, even), Err(Error::NotOdd(_))));
    }

    #[test]
    fn random_tucker_is_valid_and_deterministic() {
        let t = refine(&cross_polytope_cone(2).unwrap(), &RefinementSpec::new(RefinementScheme::EdgeMidpoint, 1))
            .unwrap();
        assert_eq!(boundary_vertex_ids(&t).unwrap().len(), 8);
        let a = random_tucker_labeling(&t, 5).unwrap();
        assert!(validate_tucker(&t, &a).passed());
        assert_eq!(a, random_tucker_labeling(&t, 5).unwrap());

        let (fig, _) = diamond();
        let x = random_tucker_labeling(&fig, 1).unwrap();
        let mut y = random_tucker_labeling(&fig, 2).unwrap();
        let mut seed = 2;
        while y == x {
            seed += 1;
            y = random_tucker_labeling(&fig, seed).unwrap();
        }
        assert_ne!(x, y);
    }

    #[test]
    fn sperner_examples() {
        let ambient = standard_simplex_vertices(2).unwrap();
        let t = standard_simplex(2, 0).unwrap();
        let identity = Labeling::sperner([(0, 1), (1, 2), (2, 3)]);
        assert!(validate_sperner(&t, &identity, &ambient).unwrap().passed());
        assert_eq!(find_fully_labeled(&t, &identity).unwrap().positive, 1);
        assert_eq!(find_fully_labeled(&t, &identity).unwrap().negative, 0);

        let t1 = standard_simplex(2, 1).unwrap();
        let bary = t1
            .vertices()
            .iter()
            .find(|(_, v)| v.point == Point::new(vec![Rational::new(1, 3).unwrap(); 2]))
            .map(|(&id, _)| id)
            .unwrap();
        for lab in 1..=3 {
            let mut l = random_sperner_labeling(&t1, &ambient, 0).unwrap();
            l.set(bary, lab);
            assert!(validate_sperner(&t1, &l, &ambient).unwrap().passed());
        }

        // Midpoint of e_1 e_2 lies on the facet opposite vertex 1 (the origin).
        let mid = t1
            .vertices()
            .iter()
            .find(|(_, v)| v.point == Point::new(vec![Rational::new(1, 2).unwrap(); 2]))
            .map(|(&id, _)| id)
            .unwrap();
        let mut l = random_sperner_labeling(&t1, &ambient, 0).unwrap();
        l.set(mid, 1);
        let r = validate_sperner(&t1, &l, &ambient).unwrap();
        assert_eq!(r.first_failure().unwrap().name, "carrier");
    }

    #[test]
    fn sperner_outside_point_errors() {
        let ambient = standard_simplex_vertices(2).unwrap();
        let t = cross_polytope_cone(2).unwrap();
        let l = Labeling::sperner(t.vertices().keys().map(|&id| (id, 1)));
        assert!(matches!(validate_sperner(&t, &l, &ambient), Err(Error::OutsideSimplex)));
    }

    #[test]
    fn labels_json_form() {
        let l = Labeling::tucker([(0, 1), (12, -2)]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"kind":"tucker","labels":{"0":1,"12":-2}}"#);
        assert_eq!(serde_json::from_str::<Labeling>(&s).unwrap(), l);
    }

    fn relabel(t: &Triangulation, l: &Labeling, shift: usize) -> (Triangulation, Labeling) {
        let json = serde_json::to_value(t).unwrap();
        let mut json = json;
        for v in json["vertices"].as_array_mut().unwrap() {
            let id = v["id"].as_u64().unwrap() as usize;
            v["id"] = serde_json::json!((id * 7 + shift) % 1000);
        }
        for s in json["simplices"].as_array_mut().unwrap() {
            for id in s.as_array_mut().unwrap() {
                let v = id.as_u64().unwrap() as usize;
                *id = serde_json::json!((v * 7 + shift) % 1000);
            }
        }
        json.as_object_mut().unwrap().remove("center");
        let t2: Triangulation = serde_json::from_value(json).unwrap();
        let l2 = Labeling::new(l.kind, l.labels().iter().map(|(&id, &x)| ((id * 7 + shift) % 1000, x)).collect());
        (t2, l2)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn tucker_instances_have_complementary_edges(d in 1usize..=3, seed in any::<u64>(), rounds in 0u32..=1, midpoint in any::<bool>()) {
            let scheme = if midpoint { RefinementScheme::EdgeMidpoint } else { RefinementScheme::Barycentric };
            let t = refine(&cross_polytope_cone(d).unwrap(), &RefinementSpec::new(scheme, rounds)).unwrap();
            let l = random_tucker_labeling(&t, seed).unwrap();
            prop_assert!(validate_tucker(&t, &l).passed());
            prop_assert!(!find_complementary_edges(&t, &l).is_empty());
        }

        #[test]
        fn odd_map_labels_are_antisymmetric(d in 1usize..=3, seed in any::<u64>()) {
            let t = refine(&cross_polytope_cone(d).unwrap(), &RefinementSpec::new(RefinementScheme::EdgeMidpoint, 1)).unwrap();
            let l = random_odd_map_labeling(&t, seed).unwrap();
            let index = t.point_index();
            for id in boundary_vertex_ids(&t).unwrap() {
                let anti = index[&t.point(id).unwrap().negated()];
                prop_assert_eq!(l.get(anti).unwrap(), -l.get(id).unwrap());
            }
        }

        #[test]
        fn sperner_parity(d in 1usize..=3, rounds in 0u32..=2, seed in any::<u64>()) {
            prop_assume!(d < 3 || rounds < 2);
            let t = standard_simplex(d, rounds).unwrap();
            let ambient = standard_simplex_vertices(d).unwrap();
            let l = random_sperner_labeling(&t, &ambient, seed).unwrap();
            prop_assert!(validate_sperner(&t, &l, &ambient).unwrap().passed());
            let f = find_fully_labeled(&t, &l).unwrap();
            prop_assert_eq!(f.total() % 2, 1);
            prop_assert_eq!(f.signed(), 1);
        }

        #[test]
        fn complementary_edges_invariant_under_relabeling(seed in any::<u64>(), shift in 0usize..50) {
            let t = refine(&cross_polytope_cone(2).unwrap(), &RefinementSpec::new(RefinementScheme::Barycentric, 1)).unwrap();
            let l = random_tucker_labeling(&t, seed).unwrap();
            let (t2, l2) = relabel(&t, &l, shift);
            let map = |e: &EdgeWitness| {
                let (a, b) = ((e.endpoints.0 * 7 + shift) % 1000, (e.endpoints.1 * 7 + shift) % 1000);
                let mut pair = [(a, e.labels.0), (b, e.labels.1)];
                pair.sort();
                pair
            };
            let mut expected: Vec<_> = find_complementary_edges(&t, &l).iter().map(map).collect();
            expected.sort();
            let mut got: Vec<_> = find_complementary_edges(&t2, &l2)
                .iter()
                .map(|e| [(e.endpoints.0, e.labels.0), (e.endpoints.1, e.labels.1)])
                .collect();
            got.sort();
            prop_assert_eq!(got, expected);
        }
    }
}
