//! Residue rings of Z[eta] and splittings of the Hurwitz order modulo ideals.

pub mod dyadic;
pub mod mat;
pub mod ring;
pub mod split;

pub use dyadic::{
    anticommuting_pair_obstruction, o_mod_2_structure, AnticommutingObstruction, DyadicStructure,
};
pub use mat::Mat2;
pub use ring::{build_residue_ring, local_ring, ProductRing, Residue, ResidueRing, RingKind};
pub use split::{
    ideal_correspondence, reduce, reduce_via_order, solve_norm_equation, split, split_even,
    split_odd, verify_azumaya_fiber, verify_azumaya_up_to, LocalSplit, NormSolution, Presentation,
    SplitMap,
};
