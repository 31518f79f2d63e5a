//! Character tables, class functions and the labelling of irreducibles.

mod class_fn;
mod dixon;
mod labels;
mod table;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use class_fn::ClassFunction;
pub use labels::{exterior_powers, root_exponent, root_label};
pub use table::{character_table, CharTable};

use crate::error::Result;
use crate::grp::Group;

/// Map from label to irreducible character.
pub fn lusztig_labels(g: &Arc<Group>) -> Result<BTreeMap<String, ClassFunction>> {
    let t = character_table(g)?;
    Ok(t.labels()
        .iter()
        .cloned()
        .zip(t.irreducibles().iter().cloned())
        .collect())
}
