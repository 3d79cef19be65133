//! Constructions of verified plane-projecting embeddings.

mod caterpillar;
mod complete;
mod convex;
mod extremal;
mod lift;
mod shift;
pub(crate) mod trig;

pub use caterpillar::{caterpillar_x_coords, cycle_x_coords, CaterpillarLayoutRequest};
pub use complete::{complete_graph_dimension, complete_graph_embedding, padded_order};
pub use convex::convex_projection_points;
pub use extremal::{extremal_seed, extremal_two_plane, EXTREMAL_SEED_PATH, PLANE_H, PLANE_M};
pub use lift::{
    forests_to_embedding, layer_plane, lift_geometric_thickness, planar_plus_paths, GeomThicknessLayout, LiftMode,
    PAPER_PLANES_ATTEMPTS,
};
pub use shift::{straight_line_planar_drawing, RotationSystem};
