//! Time-linear, simplex-linear deformations and their volume-sum
//! polynomials. Time runs over `[0, 1]`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{poly_interpolate, Poly, Rational};
use crate::label::{LabelKind, Labeling};
use crate::simplicial::{carrier, simplex_volume, Point, Region, Simplex, Triangulation, Vertex, VertexId};

/// Where each vertex sits at time 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetAssignment {
    targets: BTreeMap<VertexId, Point>,
}

impl TargetAssignment {
    pub fn new(targets: BTreeMap<VertexId, Point>) -> Self {
        TargetAssignment { targets }
    }

    /// Every vertex stays where it is.
    pub fn identity(t: &Triangulation) -> Self {
        TargetAssignment { targets: t.vertices().iter().map(|(&id, v)| (id, v.point.clone())).collect() }
    }

    pub fn targets(&self) -> &BTreeMap<VertexId, Point> {
        &self.targets
    }

    pub fn get(&self, id: VertexId) -> Result<&Point> {
        self.targets.get(&id).ok_or(Error::UnknownVertex(id))
    }

    /// Position of vertex `id` of `t` at `time`.
    pub fn position(&self, t: &Triangulation, id: VertexId, time: &Rational) -> Result<Point> {
        Ok(t.point(id)?.lerp(self.get(id)?, time))
    }
}

/// Tucker targets send every vertex of the inner region to `e_l` (label 0 to
/// the origin) and fix the rest. Sperner targets send a vertex labeled `k` to
/// `ambient[k - 1]`.
pub fn targets_from_labeling(
    t: &Triangulation,
    l: &Labeling,
    mode: LabelKind,
    ambient: Option<&[Point]>,
) -> Result<TargetAssignment> {
    let d = t.dim();
    let mut targets = BTreeMap::new();
    match mode {
        LabelKind::Tucker => {
            let inner = t.vertex_ids_in(Region::Inner);
            for (&id, v) in t.vertices() {
                let target = if inner.contains(&id) {
                    let lab = l.get(id)?;
                    let axis = lab.unsigned_abs() as usize;
                    if axis > d {
                        return Err(Error::InvalidLabel { vertex: id, label: lab });
                    }
                    if axis == 0 {
                        Point::origin(d)
                    } else {
                        Point::unit(d, axis, lab)
                    }
                } else {
                    v.point.clone()
                };
                targets.insert(id, target);
            }
        }
        LabelKind::Sperner => {
            let ambient = ambient.ok_or_else(|| Error::InvalidParameter("Sperner targets need the ambient simplex".into()))?;
            for &id in t.vertices().keys() {
                let lab = l.get(id)?;
                let target = usize::try_from(lab - 1)
                    .ok()
                    .and_then(|k| ambient.get(k))
                    .ok_or(Error::InvalidLabel { vertex: id, label: lab })?;
                targets.insert(id, target.clone());
            }
        }
    }
    Ok(TargetAssignment { targets })
}

/// The exact polynomial `tau -> vol(deformed s at tau)`, by interpolation at
/// `tau = 0, 1/d, ..., 1`.
pub fn simplex_volume_poly(s: &Simplex, t: &Triangulation, a: &TargetAssignment) -> Result<Poly> {
    let d = t.dim();
    if s.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: s.dim() });
    }
    let order = s.ordered();
    let mut samples = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let tau = Rational::new(k as i64, d as i64)?;
        let pts: Vec<Point> = order.iter().map(|&id| a.position(t, id, &tau)).collect::<Result<_>>()?;
        let refs: Vec<&Point> = pts.iter().collect();
        samples.push((tau, simplex_volume(&refs)?));
    }
    poly_interpolate(&samples)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexPoly {
    /// Vertex ids in the simplex's oriented order.
    pub simplex: Vec<VertexId>,
    pub poly: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumePoly {
    pub total: Poly,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub per_simplex: Vec<SimplexPoly>,
}

/// Per-simplex volume polynomials and their sum, over the simplices of
/// `region` (all simplices when `None`).
pub fn volume_sum_poly(t: &Triangulation, a: &TargetAssignment, region: Option<Region>) -> Result<VolumePoly> {
    let selected: Vec<&Simplex> =
        t.simplices_with_regions().filter(|(_, r)| region.map_or(true, |want| *r == want)).map(|(s, _)| s).collect();
    let per_simplex: Vec<SimplexPoly> = selected
        .par_iter()
        .map(|s| Ok(SimplexPoly { simplex: s.ordered(), poly: simplex_volume_poly(s, t, a)? }))
        .collect::<Result<_>>()?;
    let total = per_simplex.iter().map(|sp| sp.poly.clone()).sum();
    Ok(VolumePoly { total, per_simplex })
}

/// The constancy hypothesis for a deformation of an enclosing polytope `K`:
/// vertices flagged as lying on the boundary of `K` are fixed, and every
/// other vertex is sent into `interior`.
pub fn check_enclosure_hypothesis<F>(t: &Triangulation, a: &TargetAssignment, interior: F) -> std::result::Result<(), String>
where
    F: Fn(&Point) -> bool,
{
    for (&id, v) in t.vertices() {
        let target = a.get(id).map_err(|e| e.to_string())?;
        if v.boundary {
            if target != &v.point {
                return Err(format!("boundary vertex {id} moves to {target:?}"));
            }
        } else if !interior(target) {
            return Err(format!("vertex {id} is sent to {target:?}, outside the interior"));
        }
    }
    Ok(())
}

/// The constancy hypothesis on a triangulated simplex: each target lies in
/// the carrier of its vertex.
pub fn check_carrier_hypothesis(
    t: &Triangulation,
    a: &TargetAssignment,
    ambient: &[Point],
) -> std::result::Result<(), String> {
    for (&id, v) in t.vertices() {
        let target = a.get(id).map_err(|e| e.to_string())?;
        let own = carrier(&v.point, ambient).map_err(|e| e.to_string())?;
        let image = carrier(target, ambient).map_err(|e| e.to_string())?;
        if !image.is_subset(&own) {
            return Err(format!("vertex {id} leaves its carrier"));
        }
    }
    Ok(())
}

/// The complex with every vertex moved to its position at `time`.
pub fn deformed_at(t: &Triangulation, a: &TargetAssignment, time: &Rational) -> Result<Triangulation> {
    let vertices = t
        .vertices()
        .iter()
        .map(|(&id, v)| Ok((id, Vertex { point: a.position(t, id, time)?, boundary: v.boundary })))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(Triangulation::new(t.dim(), vertices, t.simplices().to_vec())?
        .with_regions(t.regions().to_vec())?
        .with_center(t.center())?
        .into_deformed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{
        assemble_enclosure, cross_polytope_cone, refine, standard_simplex, standard_simplex_vertices, RefinementScheme,
        RefinementSpec,
    };
    use crate::exactmath::factorial;
    use crate::label::{random_sperner_labeling, random_tucker_labeling};
    use crate::simplicial::signed_volume;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    /// Symbolic expansion of the 2x2 determinant, independent of the
    /// interpolation path.
    fn symbolic_area(pts: &[(Point, Point)]) -> Poly {
        let affine = |i: usize, k: usize| {
            let (p, target) = &pts[i];
            Poly::from_coeffs(vec![p.coords()[k].clone(), &target.coords()[k] - &p.coords()[k]])
        };
        let col = |i: usize, k: usize| &affine(i, k) - &affine(0, k);
        let det = &(&col(1, 0) * &col(2, 1)) - &(&col(2, 0) * &col(1, 1));
        &det * &q(1, 2)
    }

    #[test]
    fn triangle_collapsing_to_e1() {
        let t = standard_simplex(2, 0).unwrap();
        let e1 = Point::unit(2, 1, 1);
        let a = TargetAssignment::new(t.vertices().keys().map(|&id| (id, e1.clone())).collect());
        let p = simplex_volume_poly(&t.simplices()[0], &t, &a).unwrap();
        assert_eq!(p, Poly::from_coeffs(vec![q(1, 2), q(-1, 1), q(1, 2)]));
        assert_eq!(p.eval(&Rational::one()), Rational::zero());
    }

    #[test]
    fn identity_targets_give_constant() {
        let t = refine(&cross_polytope_cone(3).unwrap(), &RefinementSpec::new(RefinementScheme::EdgeMidpoint, 1)).unwrap();
        let a = TargetAssignment::identity(&t);
        for s in t.simplices() {
            assert_eq!(simplex_volume_poly(s, &t, &a).unwrap(), Poly::constant(signed_volume(s, &t).unwrap()));
        }
        assert_eq!(volume_sum_poly(&t, &a, None).unwrap().total, Poly::constant(q(4, 3)));
    }

    #[test]
    fn tucker_targets() {
        let t_p = cross_polytope_cone(2).unwrap();
        let t = assemble_enclosure(&t_p).unwrap();
        let mut l = random_tucker_labeling(&t_p, 3).unwrap();
        l.set(4, 0);
        l.set(3, -2);
        l.set(2, 2);
        let a = targets_from_labeling(&t, &l, LabelKind::Tucker, None).unwrap();
        assert_eq!(a.get(4).unwrap(), &Point::origin(2));
        assert_eq!(a.get(3).unwrap(), &Point::unit(2, 2, -1));
        let outer = t.vertices().iter().find(|(_, v)| v.point == Point::from_ints(&[2, 0])).unwrap();
        assert_eq!(a.get(*outer.0).unwrap(), &outer.1.point);

        let mut partial = l.clone();
        partial.set(4, 1);
        let missing = Labeling::tucker(partial.labels().iter().filter(|(&id, _)| id != 0).map(|(&i, &x)| (i, x)));
        assert!(matches!(targets_from_labeling(&t, &missing, LabelKind::Tucker, None), Err(Error::MissingLabel(0))));
    }

    #[test]
    fn shared_label_degenerates() {
        let t = standard_simplex(2, 0).unwrap();
        let ambient = standard_simplex_vertices(2).unwrap();
        let l = Labeling::sperner([(0, 1), (1, 2), (2, 2)]);
        let a = targets_from_labeling(&t, &l, LabelKind::Sperner, Some(&ambient)).unwrap();
        assert!(simplex_volume_poly(&t.simplices()[0], &t, &a).unwrap().eval(&Rational::one()).is_zero());
    }

    #[test]
    fn dimension_mismatch() {
        let t = cross_polytope_cone(2).unwrap();
        let edge = Simplex::new(vec![0, 1]).unwrap();
        assert!(simplex_volume_poly(&edge, &t, &TargetAssignment::identity(&t)).is_err());
    }

    #[test]
    fn enclosure_sum_is_eight() {
        let t_p = refine(&cross_polytope_cone(2).unwrap(), &RefinementSpec::new(RefinementScheme::Barycentric, 1)).unwrap();
        let t = assemble_enclosure(&t_p).unwrap();
        let l = random_tucker_labeling(&t_p, 11).unwrap();
        let a = targets_from_labeling(&t, &l, LabelKind::Tucker, None).unwrap();
        assert_eq!(volume_sum_poly(&t, &a, None).unwrap().total, Poly::constant(Rational::from(8)));
        assert!(check_enclosure_hypothesis(&t, &a, |p| p.l1_norm() < Rational::from(2)).is_ok());
    }

    #[test]
    fn json_form() {
        let vp = VolumePoly { total: Poly::constant(Rational::from(8)), per_simplex: vec![] };
        assert_eq!(serde_json::to_string(&vp).unwrap(), r#"{"total":["8"]}"#);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn interpolated_matches_symbolic(
            coords in proptest::collection::vec((-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4), 3)
        ) {
            let vertices: BTreeMap<_, _> = coords.iter().enumerate()
                .map(|(i, c)| (i, Vertex { point: Point::from_ints(&[c.0, c.1]), boundary: false }))
                .collect();
            let s = Simplex::new(vec![0, 1, 2]).unwrap();
            let t = Triangulation::new(2, vertices, vec![s.clone()]).unwrap();
            let targets: BTreeMap<_, _> = coords.iter().enumerate().map(|(i, c)| (i, Point::from_ints(&[c.2, c.3]))).collect();
            let pairs: Vec<(Point, Point)> = (0..3).map(|i| (t.point(i).unwrap().clone(), targets[&i].clone())).collect();
            let a = TargetAssignment::new(targets);
            prop_assert_eq!(simplex_volume_poly(&s, &t, &a).unwrap(), symbolic_area(&pairs));
        }

        #[test]
        fn degree_bound_and_sperner_constancy(d in 1usize..=3, rounds in 0u32..=1, seed in any::<u64>()) {
            let t = standard_simplex(d, rounds).unwrap();
            let ambient = standard_simplex_vertices(d).unwrap();
            let l = random_sperner_labeling(&t, &ambient, seed).unwrap();
            let a = targets_from_labeling(&t, &l, LabelKind::Sperner, Some(&ambient)).unwrap();
            prop_assert!(check_carrier_hypothesis(&t, &a, &ambient).is_ok());
            let vp = volume_sum_poly(&t, &a, None).unwrap();
            for sp in &vp.per_simplex {
                prop_assert!(sp.poly.degree().map_or(true, |k| k <= d));
            }
            let summed: Poly = vp.per_simplex.iter().map(|sp| sp.poly.clone()).sum();
            prop_assert_eq!(&summed, &vp.total);
            prop_assert_eq!(vp.total, Poly::constant(Rational::one() / factorial(d)));
        }
    }
}
