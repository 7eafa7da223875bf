//! Solomon descent algebras of finite Coxeter groups over fields of any
//! characteristic: structure constants, simple modules, Cartan matrices,
//! Ext-quivers and representation-type classification.

pub mod algebra;
pub mod classifier;
pub mod coxeter;
pub mod error;
pub mod export;
pub mod field;
pub mod fixture;
pub mod linalg;
pub mod partition;
pub mod quiver;
pub mod rep;
pub mod subset;

pub use error::{Error, Result};
pub use subset::Subset;
