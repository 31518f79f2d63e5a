//! Concrete permutation groups: classes, centralizers, normality and
//! quotients.

mod group;
mod hom;
mod perm;
mod quotient;
mod standard;

pub use group::{is_normal, Class, Group, NamedReps};
pub use hom::GroupHom;
pub use perm::Perm;
pub use quotient::{find_isomorphism, identify_with_standard, quotient};
pub use standard::{
    quotient_model, standard_element, standard_reps, standard_subgroup, symmetric_group,
    CLASS_LABELS, QUOTIENT_NAMES,
};
