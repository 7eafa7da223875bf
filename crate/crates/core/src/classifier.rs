//! The classification of representation types as a lookup table, and its
//! comparison with certificates computed from the Ext-quiver.

use std::fmt;

use serde::Serialize;

use crate::coxeter::{CoxeterType, Family};
use crate::error::{Error, Result};
use crate::field::Characteristic;
use crate::quiver::{certify, Certificate, CertificateRoute, RepType};
use crate::rep::RepresentationSummary;

/// Known representation type of the descent algebra of `ty` in characteristic `p`.
/// Characteristic zero behaves like an arbitrarily large prime.
pub fn lookup_verdict(ty: CoxeterType, p: Characteristic) -> RepType {
    use RepType::{Finite, Tame, Wild};
    let p = if p.is_zero() { u64::MAX } else { p.value() };
    let n = ty.param() as u64;
    match ty.family() {
        Family::A => {
            // A_{n-1} has rank n - 1.
            let n = n + 1;
            let finite = (p == 2 && n <= 3) || (p == 3 && n <= 4) || (p >= 5 && n <= 5);
            if finite {
                Finite
            } else {
                Wild
            }
        }
        Family::B => {
            if p >= 3 && n <= 4 {
                Finite
            } else if p == 2 && n == 2 {
                Tame
            } else {
                Wild
            }
        }
        Family::D => {
            if p >= 5 && n == 4 {
                Tame
            } else {
                Wild
            }
        }
        Family::I => {
            if p == 2 && n.is_multiple_of(2) {
                Tame
            } else {
                Finite
            }
        }
        Family::F => {
            if p >= 5 {
                Tame
            } else {
                Wild
            }
        }
        Family::H if n == 3 => {
            if p == 2 {
                Wild
            } else {
                Tame
            }
        }
        Family::H | Family::E => Wild,
    }
}

/// Pairs `(W, p)` whose lookup verdict no certificate route reaches,
/// each with the argument that settles it instead.
#[derive(Clone, Debug, Default)]
pub struct Whitelist {
    entries: Vec<(CoxeterType, Characteristic, String)>,
}

const SHIPPED_WHITELIST: &str = include_str!("../fixtures/certificate_none.txt");

impl Whitelist {
    /// The whitelist shipped with the crate.
    pub fn shipped() -> Whitelist {
        Whitelist::parse(SHIPPED_WHITELIST, "certificate_none.txt").expect("shipped whitelist parses")
    }

    /// Lines `TYPE P REASON...`, e.g. `B2 2 socle-quotient proof`; `#` starts a comment.
    pub fn parse(text: &str, source_name: &str) -> Result<Whitelist> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |reason: String| Error::Parse { source_name: source_name.to_owned(), line: i + 1, reason };
            let mut words = line.splitn(3, char::is_whitespace);
            let ty: CoxeterType = words.next().unwrap_or("").parse().map_err(|e: Error| bad(e.to_string()))?;
            let p: Characteristic = words
                .next()
                .ok_or_else(|| bad("missing characteristic".into()))?
                .parse()
                .map_err(|e: Error| bad(e.to_string()))?;
            let reason = words.next().map(str::trim).filter(|r| !r.is_empty());
            let reason = reason.ok_or_else(|| bad("missing justification".into()))?;
            entries.push((ty, p, reason.to_owned()));
        }
        Ok(Whitelist { entries })
    }

    pub fn reason(&self, ty: CoxeterType, p: Characteristic) -> Option<&str> {
        self.entries.iter().find(|(t, q, _)| *t == ty && *q == p).map(|(_, _, r)| r.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CrossCheckStatus {
    Agree,
    /// No certificate; `reason` is the whitelist justification if listed.
    CertificateNone { reason: Option<String> },
    Conflict,
}

impl fmt::Display for CrossCheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossCheckStatus::Agree => f.write_str("AGREE"),
            CrossCheckStatus::CertificateNone { .. } => f.write_str("CERTIFICATE_NONE"),
            CrossCheckStatus::Conflict => f.write_str("CONFLICT"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub coxeter_type: String,
    pub characteristic: u64,
    pub lookup: RepType,
    pub certificate: Option<Certificate>,
    pub status: CrossCheckStatus,
}

impl CrossCheck {
    /// A missing certificate that the whitelist does not explain.
    pub fn is_unexpected(&self) -> bool {
        matches!(self.status, CrossCheckStatus::Conflict | CrossCheckStatus::CertificateNone { reason: None })
    }
}

impl fmt::Display for CrossCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.status, &self.certificate) {
            (CrossCheckStatus::Agree, Some(c)) => write!(f, "{} ({}; certificate: agrees)", self.lookup, c.route),
            (CrossCheckStatus::CertificateNone { reason }, _) => write!(
                f,
                "{} ({}; certificate: none — {})",
                self.lookup,
                CertificateRoute::Lookup,
                reason.as_deref().unwrap_or("not whitelisted")
            ),
            (_, Some(c)) => write!(f, "CONFLICT: lookup {} but {} via {}", self.lookup, c.verdict, c.route),
            (_, None) => write!(f, "CONFLICT: lookup {}", self.lookup),
        }
    }
}

/// Compare the lookup verdict with the certificate computed from `summary`.
pub fn cross_check(
    ty: CoxeterType,
    summary: &RepresentationSummary,
    dim: usize,
    whitelist: &Whitelist,
) -> Result<CrossCheck> {
    let p = Characteristic::new(summary.characteristic)?;
    let lookup = lookup_verdict(ty, p);
    let certificate = certify(&summary.quiver, summary.radical_square_zero, dim as u128);
    let status = match &certificate {
        Some(c) if c.verdict == lookup => CrossCheckStatus::Agree,
        Some(_) => CrossCheckStatus::Conflict,
        None => CrossCheckStatus::CertificateNone { reason: whitelist.reason(ty, p).map(str::to_owned) },
    };
    Ok(CrossCheck { coxeter_type: ty.name(), characteristic: p.value(), lookup, certificate, status })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(ty: CoxeterType, p: u64) -> RepType {
        lookup_verdict(ty, Characteristic::new(p).unwrap())
    }

    #[test]
    fn lookup_examples() {
        assert_eq!(verdict(CoxeterType::b(2), 2), RepType::Tame);
        assert_eq!(verdict(CoxeterType::d(4), 7), RepType::Tame);
        assert_eq!(verdict(CoxeterType::d(4), 3), RepType::Wild);
        assert_eq!(verdict(CoxeterType::h(4), 3), RepType::Wild);
        assert_eq!(verdict(CoxeterType::h(3), 0), RepType::Tame);
        assert_eq!(verdict(CoxeterType::f4(), 3), RepType::Wild);
        assert_eq!(verdict(CoxeterType::dihedral(7), 0), RepType::Finite);
        assert_eq!(verdict(CoxeterType::dihedral(8), 2), RepType::Tame);
        assert_eq!(verdict(CoxeterType::dihedral(9), 2), RepType::Finite);
        assert_eq!(verdict(CoxeterType::a(2), 2), RepType::Finite);
        assert_eq!(verdict(CoxeterType::a(3), 2), RepType::Wild);
        assert_eq!(verdict(CoxeterType::a(4), 5), RepType::Finite);
        assert_eq!(verdict(CoxeterType::a(5), 0), RepType::Wild);
        assert_eq!(verdict(CoxeterType::b(4), 3), RepType::Finite);
        assert_eq!(verdict(CoxeterType::b(5), 0), RepType::Wild);
    }

    #[test]
    fn shipped_whitelist_parses() {
        let w = Whitelist::shipped();
        assert!(w.reason(CoxeterType::b(2), Characteristic::new(2).unwrap()).is_some());
    }

    #[test]
    fn whitelist_requires_reason() {
        assert!(Whitelist::parse("B2 2\n", "t").is_err());
        assert!(Whitelist::parse("B2 4 x\n", "t").is_err());
    }
}
