pub mod basis;
pub mod chr;
pub mod error;
pub mod exact;
pub mod grp;
pub mod linalg;
pub mod mspace;
pub mod symplectic;

pub use error::{Error, Result};
pub use exact::CycNum;
