pub mod error;
pub mod field;
pub mod poly;
pub mod residue;
pub mod matrix;
pub mod cyclic;
pub mod qr;
pub mod mth;
pub mod reference;
pub mod cli;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use poly::Poly;
