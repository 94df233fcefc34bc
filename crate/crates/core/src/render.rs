//! SVG drawings of planar instances. Coordinates stay exact until the
//! attribute values are written.

use std::fmt::Write as _;

use crate::build::standard_simplex_vertices;
use crate::deform::{deformed_at, targets_from_labeling, TargetAssignment};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::label::{find_complementary_edges, LabelKind, Labeling};
use crate::simplicial::{signed_volume, Point, Triangulation};

const SIZE: i64 = 480;
const MARGIN: i64 = 30;

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    /// Draw the deformed complex at this time instead of the original.
    pub at_time: Option<Rational>,
    pub highlight_complementary: bool,
}

struct Frame {
    min_x: Rational,
    max_y: Rational,
    scale: Rational,
}

impl Frame {
    fn fit(points: &[&Point]) -> Frame {
        let xs = || points.iter().map(|p| p.coords()[0].clone());
        let ys = || points.iter().map(|p| p.coords()[1].clone());
        let (min_x, max_x) = (xs().min().unwrap_or_default(), xs().max().unwrap_or_default());
        let (min_y, max_y) = (ys().min().unwrap_or_default(), ys().max().unwrap_or_default());
        let span = std::cmp::max(&max_x - &min_x, &max_y - &min_y);
        let inner = Rational::from(SIZE - 2 * MARGIN);
        let scale = if span.is_zero() { Rational::one() } else { inner / span };
        Frame { min_x, max_y, scale }
    }

    fn map(&self, p: &Point) -> (String, String) {
        let m = Rational::from(MARGIN);
        let x = (&p.coords()[0] - &self.min_x) * &self.scale + &m;
        let y = (&self.max_y - &p.coords()[1]) * &self.scale + &m;
        (fmt_coord(&x), fmt_coord(&y))
    }
}

fn fmt_coord(r: &Rational) -> String {
    let s = format!("{:.2}", r.to_f64());
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn targets_for(t: &Triangulation, l: &Labeling) -> Result<TargetAssignment> {
    match l.kind {
        LabelKind::Tucker => targets_from_labeling(t, l, LabelKind::Tucker, None),
        LabelKind::Sperner => {
            let ambient = standard_simplex_vertices(t.dim())?;
            targets_from_labeling(t, l, LabelKind::Sperner, Some(&ambient))
        }
    }
}

/// Triangles (shaded by orientation sign), vertices with their labels, and
/// optionally the complementary edges in a distinct stroke.
pub fn render_svg(t: &Triangulation, l: &Labeling, opts: &RenderOptions) -> Result<String> {
    if t.dim() != 2 || t.is_boundary_complex() {
        return Err(Error::InvalidDimension(t.dim()));
    }
    let shown = match &opts.at_time {
        Some(time) => deformed_at(t, &targets_for(t, l)?, time)?,
        None => t.clone(),
    };
    let all: Vec<&Point> = t.vertices().values().chain(shown.vertices().values()).map(|v| &v.point).collect();
    let frame = Frame::fit(&all);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    if let Some(time) = &opts.at_time {
        let _ = writeln!(svg, r#"<title>deformed at t = {time}</title>"#);
    }
    for s in shown.simplices() {
        let v = signed_volume(s, &shown)?;
        let fill = match v.signum() {
            1 => "#dce8f5",
            -1 => "#f5dcdc",
            _ => "none",
        };
        let pts: Vec<String> = shown
            .points_of(s)?
            .iter()
            .map(|p| {
                let (x, y) = frame.map(p);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r##"<polygon points="{}" fill="{fill}" stroke="#333333" stroke-width="1"/>"##,
            pts.join(" ")
        );
    }
    if opts.highlight_complementary {
        for e in find_complementary_edges(t, l) {
            let (x1, y1) = frame.map(shown.point(e.endpoints.0)?);
            let (x2, y2) = frame.map(shown.point(e.endpoints.1)?);
            let _ = writeln!(
                svg,
                r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#d62728" stroke-width="4" class="complementary"/>"##
            );
        }
    }
    for (&id, v) in shown.vertices() {
        let (x, y) = frame.map(&v.point);
        let fill = if v.boundary { "#000000" } else { "#ffffff" };
        let _ = writeln!(svg, r##"<circle cx="{x}" cy="{y}" r="4" fill="{fill}" stroke="#000000" data-id="{id}"/>"##);
        if let Some(&lab) = l.labels().get(&id) {
            let text = if lab > 0 { format!("+{lab}") } else { lab.to_string() };
            let _ = writeln!(svg, r#"<text x="{x}" y="{y}" dx="6" dy="-6" font-size="12">{text}</text>"#);
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::cross_polytope_cone;
    use crate::fixtures::diamond;

    #[test]
    fn diamond_render_is_stable() {
        let (t, l) = diamond();
        let opts = RenderOptions { at_time: None, highlight_complementary: true };
        let a = render_svg(&t, &l, &opts).unwrap();
        assert_eq!(a, render_svg(&t, &l, &opts).unwrap());
        assert_eq!(a.matches("<polygon").count(), 14);
        assert_eq!(a.matches("class=\"complementary\"").count(), 1);
    }

    #[test]
    fn time_one_moves_vertices_to_extreme_points() {
        let t = cross_polytope_cone(2).unwrap();
        // Every vertex labeled +1 collapses onto e_1.
        let l = Labeling::tucker(t.vertices().keys().map(|&id| (id, 1)));
        let svg = render_svg(&t, &l, &RenderOptions { at_time: Some(Rational::one()), highlight_complementary: false })
            .unwrap();
        let circles: Vec<&str> = svg.lines().filter(|l| l.starts_with("<circle")).collect();
        assert_eq!(circles.len(), 5);
        let first = circles[0].split("data-id").next().unwrap().split("r=").next().unwrap().to_string();
        assert!(circles.iter().all(|c| c.starts_with(&first)));
    }

    #[test]
    fn rejects_other_dimensions() {
        let t = cross_polytope_cone(3).unwrap();
        let l = Labeling::tucker(t.vertices().keys().map(|&id| (id, 1)));
        assert!(matches!(render_svg(&t, &l, &RenderOptions::default()), Err(Error::InvalidDimension(3))));
    }
}
