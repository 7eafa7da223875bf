//! Representation-type certificates derived from the Ext-quiver.

use std::fmt;

use serde::Serialize;

use super::classify::{verdict_from_classes, GraphClass, Multigraph, RepType};
use super::paths::{path_count, PathCount};
use super::Quiver;

/// How a verdict was obtained.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CertificateRoute {
    /// Radical square zero: the separated quiver decides the type exactly.
    SeparatedQuiverExact,
    /// The algebra is the path algebra of its acyclic Ext-quiver.
    PathAlgebra,
    /// A separated-quiver component is neither Dynkin nor extended Dynkin.
    WildQuotient,
    /// Table lookup without a computed certificate.
    #[serde(rename = "PaperLookup")]
    Lookup,
}

impl fmt::Display for CertificateRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CertificateRoute::SeparatedQuiverExact => "SeparatedQuiverExact",
            CertificateRoute::PathAlgebra => "PathAlgebra",
            CertificateRoute::WildQuotient => "WildQuotient",
            CertificateRoute::Lookup => "PaperLookup",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: RepType,
    pub route: CertificateRoute,
    /// Component classes of the graph the verdict was read from.
    pub components: Vec<GraphClass>,
}

/// Certify the representation type of a basic algebra of dimension `dim`
/// with Ext-quiver `quiver`. `None` when no route applies.
pub fn certify(quiver: &Quiver, radical_square_zero: bool, dim: u128) -> Option<Certificate> {
    let separated = Multigraph::separated(quiver).classify_components();
    if separated.contains(&GraphClass::Other) {
        return Some(Certificate { verdict: RepType::Wild, route: CertificateRoute::WildQuotient, components: separated });
    }
    if radical_square_zero {
        return Some(Certificate {
            verdict: verdict_from_classes(&separated),
            route: CertificateRoute::SeparatedQuiverExact,
            components: separated,
        });
    }
    if path_count(quiver) == PathCount::Finite(dim) {
        let underlying = Multigraph::underlying(quiver).classify_components();
        return Some(Certificate {
            verdict: verdict_from_classes(&underlying),
            route: CertificateRoute::PathAlgebra,
            components: underlying,
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_loops_are_wild() {
        let q = Quiver::from_triples(1, &[(0, 0, 3)]);
        let c = certify(&q, false, 8).unwrap();
        assert_eq!((c.verdict, c.route), (RepType::Wild, CertificateRoute::WildQuotient));
    }

    #[test]
    fn kronecker_radical_square_zero_is_tame() {
        let q = Quiver::from_triples(1, &[(0, 0, 2)]);
        let c = certify(&q, true, 3).unwrap();
        assert_eq!((c.verdict, c.route), (RepType::Tame, CertificateRoute::SeparatedQuiverExact));
        assert!(certify(&q, false, 4).is_none());
    }

    #[test]
    fn path_algebra_route() {
        // a → b → c with dimension 6 is the full path algebra of A3.
        let q = Quiver::from_triples(3, &[(0, 1, 1), (1, 2, 1)]);
        let c = certify(&q, false, 6).unwrap();
        assert_eq!((c.verdict, c.route), (RepType::Finite, CertificateRoute::PathAlgebra));
        assert!(certify(&q, false, 5).is_none());
    }
}
