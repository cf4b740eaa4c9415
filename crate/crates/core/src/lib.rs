pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod ga;
pub mod groupoid;
pub mod morphisms;

pub use error::{Error, Result};
pub use groupoid::{Element, Groupoid, NGroupoid};
pub mod names;
pub mod verify;
