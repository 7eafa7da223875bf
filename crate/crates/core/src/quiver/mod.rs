//! Quivers, graph recognition and representation-type certificates.

mod certificate;
mod classify;
mod graph;
mod iso;
mod paths;
pub mod saliola;

pub use certificate::{certify, Certificate, CertificateRoute};
pub use classify::{verdict_from_classes, Diagram, GraphClass, Multigraph, RepType};
pub use graph::Quiver;
pub use iso::{find_full_subquiver, find_isomorphism, isomorphic_up_to_orientation};
pub use paths::{path_count, paths_by_length, topological_order, PathCount};
