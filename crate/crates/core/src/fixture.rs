//! Quiver fixture files: `# key: value` header lines followed by one
//! `<a, b, c>` line per group of `c` arrows from vertex `a` to vertex `b`
//! (vertices numbered from 1).

use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::algebra::DescentAlgebra;
use crate::coxeter::{BuildOptions, CoxeterType, Family};
use crate::error::{Error, Result};
use crate::field::Characteristic;
use crate::quiver::{find_isomorphism, Quiver};
use crate::rep::ext_quiver;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverFixture {
    pub source: String,
    pub coxeter_type: CoxeterType,
    /// Characteristic as written, e.g. `3` or `>=7`.
    pub characteristic: String,
    /// Characteristics at which the fixture is checked.
    pub verify_at: Vec<Characteristic>,
    pub vertex_count: usize,
    pub triples: Vec<(usize, usize, u32)>,
    /// Needs the large-group override to build.
    pub large: bool,
}

impl QuiverFixture {
    pub fn load(path: &Path) -> Result<QuiverFixture> {
        let text = std::fs::read_to_string(path)?;
        QuiverFixture::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, source_name: &str) -> Result<QuiverFixture> {
        let err = |line: usize, reason: String| Error::Parse { source_name: source_name.to_owned(), line, reason };
        let mut family: Option<Family> = None;
        let mut rank: Option<usize> = None;
        let mut characteristic = None;
        let mut verify_at = Vec::new();
        let mut vertex_count = None;
        let mut source = source_name.to_owned();
        let mut large = false;
        let mut triples = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let Some((key, value)) = comment.split_once(':') else { continue };
                let value = value.trim();
                match key.trim() {
                    "family" => family = Some(value.parse().map_err(|e: Error| err(line_no, e.to_string()))?),
                    "rank" => rank = Some(value.parse().map_err(|_| err(line_no, format!("bad rank {value:?}")))?),
                    "p" => characteristic = Some(value.to_owned()),
                    "verify-at" => {
                        verify_at = value
                            .split_whitespace()
                            .map(|w| w.parse::<Characteristic>())
                            .collect::<Result<_>>()
                            .map_err(|e| err(line_no, e.to_string()))?
                    }
                    "vertices" => {
                        vertex_count =
                            Some(value.parse().map_err(|_| err(line_no, format!("bad vertex count {value:?}")))?)
                    }
                    "source" => source = value.to_owned(),
                    "large" => large = value == "true",
                    _ => {}
                }
                continue;
            }
            let inner = line
                .strip_prefix('<')
                .and_then(|l| l.trim_end_matches(',').strip_suffix('>'))
                .ok_or_else(|| err(line_no, format!("expected <a, b, c>, got {line:?}")))?;
            let nums: Vec<u64> = inner
                .split(',')
                .map(|w| w.trim().parse::<u64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err(line_no, format!("non-numeric triple {line:?}")))?;
            let [a, b, c] = nums[..] else {
                return Err(err(line_no, format!("expected three entries, got {}", nums.len())));
            };
            if c == 0 {
                return Err(err(line_no, "arrow multiplicity must be positive".into()));
            }
            triples.push((a as usize, b as usize, c as u32, line_no));
        }
        let missing = |what: &str| err(0, format!("missing `# {what}:` header"));
        let family = family.ok_or_else(|| missing("family"))?;
        let rank = rank.ok_or_else(|| missing("rank"))?;
        let vertex_count: usize = vertex_count.ok_or_else(|| missing("vertices"))?;
        let characteristic = characteristic.ok_or_else(|| missing("p"))?;
        if verify_at.is_empty() {
            verify_at.push(characteristic.parse().map_err(|e: Error| err(0, e.to_string()))?);
        }
        let coxeter_type = CoxeterType::new(family, rank)?;
        let mut checked = Vec::with_capacity(triples.len());
        for (a, b, c, line_no) in triples {
            if a == 0 || b == 0 || a > vertex_count || b > vertex_count {
                return Err(err(line_no, format!("vertex out of range 1..={vertex_count}")));
            }
            checked.push((a - 1, b - 1, c));
        }
        Ok(QuiverFixture { source, coxeter_type, characteristic, verify_at, vertex_count, triples: checked, large })
    }

    pub fn quiver(&self) -> Quiver {
        Quiver::from_triples(self.vertex_count, &self.triples)
    }

    pub fn arrow_count(&self) -> u64 {
        self.triples.iter().map(|t| u64::from(t.2)).sum()
    }

    /// Compare against a computed quiver, trying both arrow conventions.
    pub fn check(&self, computed: &Quiver) -> FixtureMatch {
        let expected = self.quiver();
        if let Some(map) = find_isomorphism(&expected, computed) {
            FixtureMatch::Direct(map)
        } else if let Some(map) = find_isomorphism(&expected, &computed.opposite()) {
            FixtureMatch::Opposite(map)
        } else {
            FixtureMatch::NoMatch
        }
    }
}

/// Compute the Ext-quiver at every characteristic listed in the fixture and match it.
pub fn verify(fixture: &QuiverFixture, opts: &BuildOptions) -> Result<Vec<(Characteristic, FixtureMatch)>> {
    let alg = DescentAlgebra::load(fixture.coxeter_type, opts)?;
    fixture
        .verify_at
        .iter()
        .map(|&p| Ok((p, fixture.check(&ext_quiver(&alg, p)?))))
        .collect()
}

/// Outcome of matching a fixture; the maps send fixture vertices to computed ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FixtureMatch {
    Direct(Vec<usize>),
    Opposite(Vec<usize>),
    NoMatch,
}

impl FixtureMatch {
    pub fn is_match(&self) -> bool {
        !matches!(self, FixtureMatch::NoMatch)
    }
}

impl fmt::Display for FixtureMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureMatch::Direct(_) => f.write_str("PASS (same orientation)"),
            FixtureMatch::Opposite(_) => f.write_str("PASS (opposite orientation)"),
            FixtureMatch::NoMatch => f.write_str("FAIL"),
        }
    }
}
