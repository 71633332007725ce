pub mod algebra;
pub mod characters;
pub mod check;
pub mod error;
pub mod genseries;
pub mod posetlab;
pub mod symfunc;
pub mod verify;

pub use check::Check;
pub use error::{Error, Result};
