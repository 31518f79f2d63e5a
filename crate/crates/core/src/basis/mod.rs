//! The new basis `B_G` of `C[M(G)]`: primitive elements of the quotient
//! types, the maps `sigma`, and everything derived from the basis.

mod build;
mod cyclic;
mod primitive;
mod stage;
mod table;

pub use build::{build_basis, BasisElement, NewBasis};
pub use cyclic::{cyclic_s, cyclic_s_prime, cyclic_space};
pub use primitive::{
    delta_of, piece_of, primitive_vector, primitives, shriek_tag, tags, tensor, Tag,
};
pub use stage::{resolve, subgroup_space, xbar_pairs, Stage, XBarPair};
pub use table::{table_row_order, TableRow};
