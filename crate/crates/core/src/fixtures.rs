//! Hand-transcribed instances shipped with the crate.

use crate::instance::InstanceFile;
use crate::label::Labeling;
use crate::simplicial::Triangulation;

/// The labeled diamond of the classic Tucker illustration: 13 vertices
/// (ten on the boundary), 14 triangles, one complementary edge `{13, 14}`.
pub const DIAMOND_JSON: &str = include_str!("../fixtures/diamond.json");

pub fn diamond_instance() -> InstanceFile {
    InstanceFile::from_json(DIAMOND_JSON).expect("bundled fixture parses")
}

pub fn diamond() -> (Triangulation, Labeling) {
    let f = diamond_instance();
    (f.triangulation, f.labeling)
}
