//! Langlands parameters for reductive groups over finite fields, computed
//! entirely on the dual side: root data, twisted Weyl cosets, torsion points
//! of dual tori and component groups of their centralizers.

pub mod arith;
pub mod centralizer;
pub mod error;
pub mod finite_torus;
pub mod group;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod root_datum;
pub mod snf;
pub mod verify;
pub mod weil_deligne;
pub mod weil_params;
pub mod weyl;

pub use error::{Error, Result};
