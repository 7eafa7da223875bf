use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Families of finite irreducible Coxeter groups handled here.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::H => 'H',
            Family::I => 'I',
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" | "C" => Ok(Family::B),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "H" => Ok(Family::H),
            "I" => Ok(Family::I),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

/// A validated Coxeter type. For the dihedral family the parameter is the
/// bond label `m`, the rank is always 2.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoxeterType {
    family: Family,
    param: usize,
}

/// Largest rank for which structure constants are computed.
pub const MAX_RANK: usize = 8;

impl CoxeterType {
    pub fn new(family: Family, param: usize) -> Result<CoxeterType> {
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&param),
            Family::B => (2..=MAX_RANK).contains(&param),
            Family::D => (4..=MAX_RANK).contains(&param),
            Family::E => {
                if param == 8 {
                    return Err(Error::OutOfScope("E8 is not supported".into()));
                }
                param == 6 || param == 7
            }
            Family::F => param == 4,
            Family::H => param == 3 || param == 4,
            Family::I => (3..=1 << 20).contains(&param),
        };
        if ok {
            Ok(CoxeterType { family, param })
        } else {
            Err(Error::OutOfScope(format!(
                "{}{} is not a supported finite irreducible type",
                family.letter(),
                param
            )))
        }
    }

    pub fn a(n: usize) -> CoxeterType {
        CoxeterType::new(Family::A, n).expect("valid rank")
    }
    pub fn b(n: usize) -> CoxeterType {
        CoxeterType::new(Family::B, n).expect("valid rank")
    }
    pub fn d(n: usize) -> CoxeterType {
        CoxeterType::new(Family::D, n).expect("valid rank")
    }
    pub fn e(n: usize) -> CoxeterType {
        CoxeterType::new(Family::E, n).expect("valid rank")
    }
    pub fn f4() -> CoxeterType {
        CoxeterType::new(Family::F, 4).expect("valid rank")
    }
    pub fn h(n: usize) -> CoxeterType {
        CoxeterType::new(Family::H, n).expect("valid rank")
    }
    pub fn dihedral(m: usize) -> CoxeterType {
        CoxeterType::new(Family::I, m).expect("valid bond")
    }

    pub fn family(self) -> Family {
        self.family
    }

    /// Rank for A..H; the bond label for the dihedral family.
    pub fn param(self) -> usize {
        self.param
    }

    pub fn rank(self) -> usize {
        match self.family {
            Family::I => 2,
            _ => self.param,
        }
    }

    /// Number of elements, computed from closed formulas.
    pub fn order(self) -> u64 {
        let n = self.param as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E if n == 6 => 51_840,
            Family::E => 2_903_040,
            Family::F => 1_152,
            Family::H if n == 3 => 120,
            Family::H => 14_400,
            Family::I => 2 * n,
        }
    }

    /// Number of positive roots (reflections).
    pub fn reflection_count(self) -> usize {
        let n = self.param;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B => n * n,
            Family::D => n * (n - 1),
            Family::E if n == 6 => 36,
            Family::E => 63,
            Family::F => 24,
            Family::H if n == 3 => 15,
            Family::H => 60,
            Family::I => n,
        }
    }

    /// Symmetric Coxeter matrix `m(i, j)`.
    pub fn coxeter_matrix(self) -> Vec<Vec<usize>> {
        let r = self.rank();
        let mut m = vec![vec![2usize; r]; r];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut bond = |i: usize, j: usize, v: usize| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match self.family {
            Family::A => (1..r).for_each(|i| bond(i - 1, i, 3)),
            Family::B => {
                bond(0, 1, 4);
                (2..r).for_each(|i| bond(i - 1, i, 3));
            }
            Family::D => {
                bond(0, 2, 3);
                (2..r).for_each(|i| bond(i - 1, i, 3));
            }
            Family::E => {
                bond(0, 2, 3);
                bond(1, 3, 3);
                (3..r).for_each(|i| bond(i - 1, i, 3));
            }
            Family::F => {
                bond(0, 1, 3);
                bond(1, 2, 4);
                bond(2, 3, 3);
            }
            Family::H => {
                bond(0, 1, 5);
                (2..r).for_each(|i| bond(i - 1, i, 3));
            }
            Family::I => bond(0, 1, self.param),
        }
        m
    }

    pub fn name(self) -> String {
        match self.family {
            Family::I => format!("I2({})", self.param),
            f => format!("{}{}", f.letter(), self.param),
        }
    }

    /// Short tag used for cache file names.
    pub fn tag(self) -> String {
        format!("{}{}", self.family.letter(), self.param)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CoxeterType {
    type Err = Error;
    /// Accepts `B4`, `F4`, `I8` and `I2(8)`.
    fn from_str(s: &str) -> Result<CoxeterType> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("bad Coxeter type {s:?}"));
        let split = s.find(|c: char| !c.is_ascii_alphabetic()).ok_or_else(bad)?;
        let family: Family = s[..split].parse()?;
        let rest = &s[split..];
        let digits = match (family, rest.strip_prefix("2(").and_then(|r| r.strip_suffix(')'))) {
            (Family::I, Some(m)) => m,
            _ => rest,
        };
        let param = digits.parse().map_err(|_| bad())?;
        CoxeterType::new(family, param)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_names() {
        for ty in [CoxeterType::b(4), CoxeterType::f4(), CoxeterType::dihedral(8), CoxeterType::e(6)] {
            assert_eq!(ty.name().parse::<CoxeterType>().unwrap(), ty);
            assert_eq!(ty.tag().parse::<CoxeterType>().unwrap(), ty);
        }
        assert!("X3".parse::<CoxeterType>().is_err());
        assert!("B".parse::<CoxeterType>().is_err());
    }

    #[test]
    fn rejects_e8_and_small_d() {
        assert!(matches!(CoxeterType::new(Family::E, 8), Err(Error::OutOfScope(_))));
        assert!(CoxeterType::new(Family::D, 3).is_err());
        assert!(CoxeterType::new(Family::I, 2).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(CoxeterType::b(2).order(), 8);
        assert_eq!(CoxeterType::d(4).order(), 192);
        assert_eq!(CoxeterType::e(6).order(), 51_840);
        assert_eq!(CoxeterType::h(4).order(), 14_400);
        assert_eq!(CoxeterType::dihedral(7).order(), 14);
    }

    #[test]
    fn d_branching() {
        let m = CoxeterType::d(4).coxeter_matrix();
        assert_eq!(m[0][2], 3);
        assert_eq!(m[1][2], 3);
        assert_eq!(m[0][1], 2);
        assert_eq!(m[2][3], 3);
    }
}
