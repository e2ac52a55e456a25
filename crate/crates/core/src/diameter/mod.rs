//! Structure hung off the diameter path `Γ`: its extension `Γ*`, the
//! equal-length pieces, the faces on either side, pockets, and the guard
//! segments `B`.

mod boundary_set;
mod compute;
mod gamma;
mod sides;

pub use boundary_set::{build_b, BSegment, BSource, BoundarySet};
pub(crate) use compute::locate_all;
pub use compute::{compute_diameter, compute_diameter_brute, Diameter};
pub use gamma::{checked_eps, extend_gamma, piece_count, split_pieces, EdgeClass, GammaStar, Piece, PieceEdge};
pub use sides::{
    pocket_and_edge_classify, side_split, split_by_chord, Component, PieceClasses, Side, SideDecomposition, SideOf,
};
