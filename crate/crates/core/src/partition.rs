//! Integer partitions and the signed-permutation labels of parabolic
//! conjugacy classes in types A, B and D.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::subset::Subset;

/// A partition, parts stored in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// No part repeated `p` or more times; `p = 0` admits everything.
    pub fn is_regular(&self, p: u64) -> bool {
        p == 0 || self.multiplicities().iter().all(|&(_, m)| (m as u64) < p)
    }

    pub fn has_odd_part(&self) -> bool {
        self.0.iter().any(|p| p % 2 == 1)
    }

    /// Multiset union.
    pub fn join(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Remove one copy of `part`, if present.
    pub fn remove_part(&self, part: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::of).collect()
    }

    /// Ordering used to list parabolic classes of equal rank: larger size
    /// first, then lexicographically larger first.
    pub fn listing_cmp(&self, other: &Partition) -> Ordering {
        other.size().cmp(&self.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Partition {
    /// Exponent notation such as `31^2` or `2^2,1`; the empty partition prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let wide = self.0.iter().any(|&p| p >= 10);
        let mut after_exponent = false;
        for (k, (p, m)) in self.multiplicities().into_iter().enumerate() {
            if k > 0 && (wide || after_exponent) {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            after_exponent = m > 1;
            if after_exponent {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Partition {
    type Err = String;

    /// Accepts `∅`, exponent notation (`31^2`, `2^2,1`) and comma-separated parts (`3,1,1`).
    /// Only single-digit parts are parsed.
    fn from_str(s: &str) -> Result<Partition, String> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "()" || s == "0" {
            return Ok(Partition::empty());
        }
        let bad = || format!("cannot parse partition {s:?}");
        let mut parts = Vec::new();
        for chunk in s.trim_matches(|c| c == '(' || c == ')').split(',') {
            let chars: Vec<char> = chunk.trim().chars().collect();
            let mut i = 0;
            while i < chars.len() {
                let p = chars[i].to_digit(10).ok_or_else(bad)?;
                i += 1;
                let mut m = 1;
                if i < chars.len() && chars[i] == '^' {
                    let start = i + 1;
                    i = start;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    m = chars[start..i].iter().collect::<String>().parse::<usize>().map_err(|_| bad())?;
                }
                parts.extend(std::iter::repeat_n(p, m));
            }
        }
        Ok(Partition::new(parts))
    }
}

/// A signed permutation of `{±1, …, ±n}`; entry `i` is the image of `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm(Vec<i32>);

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm((1..=n as i32).collect())
    }

    pub fn apply(&self, x: i32) -> i32 {
        let y = self.0[(x.unsigned_abs() - 1) as usize];
        if x > 0 {
            y
        } else {
            -y
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm((1..=self.0.len() as i32).map(|x| self.apply(other.apply(x))).collect())
    }

    /// Generator `i` of type B: `0` negates the first coordinate, `i ≥ 1` swaps `i` and `i + 1`.
    pub fn type_b_generator(n: usize, i: usize) -> SignedPerm {
        let mut p = SignedPerm::identity(n);
        if i == 0 {
            p.0[0] = -1;
        } else {
            p.0.swap(i - 1, i);
        }
        p
    }

    /// Generator `i` of type D: `0` sends `1 ↦ -2, 2 ↦ -1`, `i ≥ 1` swaps `i` and `i + 1`.
    pub fn type_d_generator(n: usize, i: usize) -> SignedPerm {
        let mut p = SignedPerm::identity(n);
        if i == 0 {
            p.0[0] = -2;
            p.0[1] = -1;
        } else {
            p.0.swap(i - 1, i);
        }
        p
    }

    /// Lengths of the paired positive cycles, and the number of coordinates
    /// covered by negative cycles.
    pub fn cycle_type(&self) -> (Partition, u32) {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut positive = Vec::new();
        let mut negative = 0;
        for start in 1..=n as i32 {
            if seen[(start - 1) as usize] {
                continue;
            }
            let mut x = start;
            let mut steps = 0;
            loop {
                seen[(x.unsigned_abs() - 1) as usize] = true;
                x = self.apply(x);
                steps += 1;
                if x == start {
                    positive.push(steps);
                    break;
                }
                if x == -start {
                    negative += steps;
                    break;
                }
            }
        }
        (Partition::new(positive), negative)
    }
}

/// Product of the generators in `j`, in increasing index order.
fn coxeter_element(n: usize, j: Subset, gen: fn(usize, usize) -> SignedPerm) -> SignedPerm {
    j.iter().fold(SignedPerm::identity(n), |acc, i| acc.compose(&gen(n, i)))
}

/// Label of a subset of the type `B_n` generators: the positive cycle type of its Coxeter element.
pub fn type_b_label(n: usize, j: Subset) -> Partition {
    coxeter_element(n, j, SignedPerm::type_b_generator).cycle_type().0
}

/// `|N_W(W_J) : W_J|` for type `B_n`, read off the label.
pub fn type_b_normalizer_index(label: &Partition) -> u64 {
    label
        .multiplicities()
        .iter()
        .fold(1u64 << label.num_parts(), |acc, &(_, m)| acc * factorial(m))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// Labels of parabolic classes in type `D_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeDLabel {
    /// A negative cycle is present; the partition has size at most `n - 2`.
    Short(Partition),
    /// A partition of `n` with at least one odd part.
    Full(Partition),
    /// A partition of `n` with only even parts, split into two classes.
    Even(Partition, Sign),
}

impl TypeDLabel {
    pub fn partition(&self) -> &Partition {
        match self {
            TypeDLabel::Short(p) | TypeDLabel::Full(p) | TypeDLabel::Even(p, _) => p,
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            TypeDLabel::Even(_, s) => Some(*s),
            _ => None,
        }
    }

    pub fn listing_cmp(&self, other: &TypeDLabel) -> Ordering {
        self.partition()
            .listing_cmp(other.partition())
            .then_with(|| self.sign().cmp(&other.sign()))
    }

    /// All labels for `D_n`.
    pub fn all(n: u32) -> Vec<TypeDLabel> {
        let mut out: Vec<TypeDLabel> = (0..=n.saturating_sub(2)).flat_map(Partition::of).map(TypeDLabel::Short).collect();
        for p in Partition::of(n) {
            if p.has_odd_part() {
                out.push(TypeDLabel::Full(p));
            } else {
                out.push(TypeDLabel::Even(p.clone(), Sign::Plus));
                out.push(TypeDLabel::Even(p, Sign::Minus));
            }
        }
        out
    }
}

impl fmt::Display for TypeDLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeDLabel::Short(p) | TypeDLabel::Full(p) => write!(f, "{p}"),
            TypeDLabel::Even(p, Sign::Plus) => write!(f, "{p}+"),
            TypeDLabel::Even(p, Sign::Minus) => write!(f, "{p}-"),
        }
    }
}

/// Label of a subset of the type `D_n` generators (generator 0 is the branch node `u`).
pub fn type_d_label(n: usize, j: Subset) -> TypeDLabel {
    let (positive, negative) = coxeter_element(n, j, SignedPerm::type_d_generator).cycle_type();
    if negative > 0 {
        TypeDLabel::Short(positive)
    } else if positive.has_odd_part() {
        TypeDLabel::Full(positive)
    } else if j.contains(1) {
        TypeDLabel::Even(positive, Sign::Plus)
    } else {
        TypeDLabel::Even(positive, Sign::Minus)
    }
}

/// `|N_W(W_J) : W_J|` for type `D_n`, read off the label.
pub fn type_d_normalizer_index(label: &TypeDLabel) -> u64 {
    let twice = label
        .partition()
        .multiplicities()
        .iter()
        .fold(2u64, |acc, &(_, m)| (acc * factorial(m)) << m);
    match label {
        TypeDLabel::Full(_) => twice / 2 / 2,
        _ => twice / 2,
    }
}

/// Label of a subset of the type `A_n` generators: block sizes of the induced set partition of `n + 1` points.
pub fn type_a_label(n: usize, j: Subset) -> Partition {
    let mut parts = Vec::new();
    let mut run = 1;
    for i in 0..n {
        if j.contains(i) {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    Partition::new(parts)
}

fn factorial(m: u32) -> u64 {
    (1..=m as u64).product()
}

/// Size of `P_p(≤ n)`: partitions of size at most `n` surviving reduction mod `p` in type B.
pub fn type_b_regular_count(n: u32, p: u64) -> usize {
    Partition::up_to(n)
        .iter()
        .filter(|q| p == 0 || !type_b_normalizer_index(q).is_multiple_of(p))
        .count()
}

/// Size of `Γ_p(n)`.
pub fn type_d_regular_count(n: u32, p: u64) -> usize {
    TypeDLabel::all(n)
        .iter()
        .filter(|l| p == 0 || !type_d_normalizer_index(l).is_multiple_of(p))
        .count()
}
