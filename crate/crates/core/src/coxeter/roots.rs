use std::cmp::Ordering;
use std::collections::HashMap;

use super::golden::Golden;
use super::types::CoxeterType;
use crate::error::{Error, Result};

/// A root system in simple-root coordinates over `Z[φ]`.
///
/// Roots are indexed so that simple root `i` has index `i`, the positive roots
/// occupy `0..N` and root `k + N` is the negative of root `k`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<Golden>>,
    roots: Vec<Vec<Golden>>,
    lookup: HashMap<Vec<Golden>, u8>,
    reflections: Vec<Vec<u8>>,
}

impl RootSystem {
    pub fn new(ty: CoxeterType) -> Result<RootSystem> {
        let rank = ty.rank();
        let m = ty.coxeter_matrix();
        let mut cartan = vec![vec![Golden::ZERO; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                cartan[i][j] = match m[i][j] {
                    1 => Golden::int(2),
                    2 => Golden::ZERO,
                    3 => Golden::int(-1),
                    4 if i < j => Golden::int(-2),
                    4 => Golden::int(-1),
                    5 => -Golden::PHI,
                    b => {
                        return Err(Error::OutOfScope(format!(
                            "bond {b} has no root realization here; use the dihedral model"
                        )))
                    }
                };
            }
        }

        let reflect = |i: usize, beta: &[Golden]| -> Vec<Golden> {
            let c = (0..rank).fold(Golden::ZERO, |acc, j| acc + beta[j] * cartan[i][j]);
            let mut out = beta.to_vec();
            out[i] = out[i] - c;
            out
        };

        let simple: Vec<Vec<Golden>> = (0..rank)
            .map(|i| (0..rank).map(|j| Golden::int((i == j) as i64)).collect())
            .collect();
        let mut found: Vec<Vec<Golden>> = simple.clone();
        let mut seen: HashMap<Vec<Golden>, ()> = found.iter().map(|r| (r.clone(), ())).collect();
        let mut frontier = found.clone();
        let limit = 2 * ty.reflection_count();
        while let Some(beta) = frontier.pop() {
            for i in 0..rank {
                let img = reflect(i, &beta);
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    found.push(img.clone());
                    frontier.push(img);
                    if found.len() > limit {
                        return Err(Error::Inconsistency(format!("{ty}: root closure exceeds {limit}")));
                    }
                }
            }
        }
        if found.len() != limit {
            return Err(Error::Inconsistency(format!(
                "{ty}: found {} roots, expected {limit}",
                found.len()
            )));
        }

        let mut positive: Vec<Vec<Golden>> = found
            .into_iter()
            .filter(|r| is_positive_vector(r))
            .filter(|r| !simple.contains(r))
            .collect();
        positive.sort();
        let mut roots = simple.clone();
        roots.extend(positive);
        let negatives: Vec<Vec<Golden>> = roots.iter().map(|r| r.iter().map(|&c| -c).collect()).collect();
        roots.extend(negatives);

        let lookup: HashMap<Vec<Golden>, u8> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k as u8))
            .collect();
        let reflections = (0..rank)
            .map(|i| roots.iter().map(|r| lookup[&reflect(i, r)]).collect())
            .collect();

        Ok(RootSystem { rank, cartan, roots, lookup, reflections })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn is_positive(&self, idx: u8) -> bool {
        (idx as usize) < self.positive_count()
    }

    pub fn negate(&self, idx: u8) -> u8 {
        let n = self.positive_count() as u8;
        if idx < n {
            idx + n
        } else {
            idx - n
        }
    }

    pub fn coords(&self, idx: u8) -> &[Golden] {
        &self.roots[idx as usize]
    }

    pub fn cartan(&self) -> &[Vec<Golden>] {
        &self.cartan
    }

    pub fn index_of(&self, coords: &[Golden]) -> Option<u8> {
        self.lookup.get(coords).copied()
    }

    /// Permutation of root indices induced by simple reflection `i`.
    pub fn reflection(&self, i: usize) -> &[u8] {
        &self.reflections[i]
    }

    /// Set of simple roots appearing with nonzero coefficient in root `idx`.
    pub fn support(&self, idx: u8) -> u16 {
        self.coords(idx)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0u16, |m, (i, _)| m | 1 << i)
    }

    /// Image of a root under the linear map sending simple root `t` to root `images[t]`.
    pub fn apply_linear(&self, images: &[u8], idx: u8) -> u8 {
        let mut acc = vec![Golden::ZERO; self.rank];
        for (t, &c) in self.coords(idx).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, &v) in acc.iter_mut().zip(self.coords(images[t])) {
                *a = *a + c * v;
            }
        }
        self.lookup[&acc]
    }
}

fn is_positive_vector(r: &[Golden]) -> bool {
    r.iter()
        .map(|c| c.signum())
        .find(|s| *s != Ordering::Equal)
        == Some(Ordering::Greater)
}
