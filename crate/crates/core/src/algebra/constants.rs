use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::coxeter::ElementTable;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Integer structure constants `x_J x_K = Σ_L a_JKL x_L` of a descent algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    rank: usize,
    terms: Vec<Vec<(Subset, u32)>>,
}

#[derive(Serialize, Deserialize)]
struct Line {
    #[serde(rename = "J")]
    j: u16,
    #[serde(rename = "K")]
    k: u16,
    terms: Vec<(u16, u32)>,
}

impl StructureConstants {
    /// `a_JKL` counts `w ∈ X_J⁻¹ ∩ X_K` with `w⁻¹ J w ∩ K = L`.
    pub fn compute(table: &ElementTable) -> StructureConstants {
        let rank = table.rank();
        let dim = 1usize << rank;
        let mut counts = vec![0u32; dim * dim * dim];
        let mut image = vec![0u16; dim];
        let full = Subset::full(rank);
        for w in table.ids() {
            let free_left = full.without(table.left_descents(w));
            let free_right = full.without(table.right_descents(w));
            let mut sigma = [0u16; 16];
            for s in free_left.iter() {
                let t = table.conjugate_simple(w, s);
                sigma[s] = if t == crate::coxeter::NOT_SIMPLE { 0 } else { 1 << t };
            }
            for j in free_left.subsets() {
                if !j.is_empty() {
                    let low = j.0.trailing_zeros() as usize;
                    image[j.index()] = image[(j.0 & (j.0 - 1)) as usize] | sigma[low];
                } else {
                    image[0] = 0;
                }
                let img = image[j.index()];
                let base = j.index() * dim;
                for k in free_right.subsets() {
                    counts[(base + k.index()) * dim + (img & k.0) as usize] += 1;
                }
            }
        }
        let terms = counts
            .chunks(dim)
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(l, &c)| (Subset(l as u16), c))
                    .collect()
            })
            .collect();
        StructureConstants { rank, terms }
    }

    pub fn from_terms(rank: usize, terms: Vec<Vec<(Subset, u32)>>) -> Result<StructureConstants> {
        let dim = 1usize << rank;
        if terms.len() != dim * dim {
            return Err(Error::InvalidArgument(format!("expected {} products, got {}", dim * dim, terms.len())));
        }
        Ok(StructureConstants { rank, terms })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the algebra, `2^rank`.
    pub fn dim(&self) -> usize {
        1 << self.rank
    }

    /// Nonzero terms of `x_J x_K`, sorted by `L`.
    pub fn product(&self, j: Subset, k: Subset) -> &[(Subset, u32)] {
        &self.terms[j.index() * self.dim() + k.index()]
    }

    pub fn get(&self, j: Subset, k: Subset, l: Subset) -> u32 {
        let t = self.product(j, k);
        t.binary_search_by_key(&l, |&(s, _)| s).map_or(0, |i| t[i].1)
    }

    /// `β_JK = a_JKK`, the value of the character `λ_K` on `x_J`.
    pub fn mark(&self, j: Subset, k: Subset) -> u32 {
        self.get(j, k, k)
    }

    /// `|X_J⁻¹ ∩ X_K|`.
    pub fn double_coset_count(&self, j: Subset, k: Subset) -> u64 {
        self.product(j, k).iter().map(|&(_, c)| c as u64).sum()
    }

    pub fn nonzero_count(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }

    /// One JSON object per line: `{"J":…,"K":…,"terms":[[L,a],…]}`.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for j in Subset::all(self.rank) {
            for k in Subset::all(self.rank) {
                let line = Line {
                    j: j.0,
                    k: k.0,
                    terms: self.product(j, k).iter().map(|&(l, a)| (l.0, a)).collect(),
                };
                serde_json::to_writer(&mut out, &line)?;
                out.write_all(b"\n")?;
            }
        }
        Ok(())
    }

    pub fn read_jsonl<R: BufRead>(rank: usize, input: R) -> Result<StructureConstants> {
        let dim = 1usize << rank;
        let mut terms: Vec<Option<Vec<(Subset, u32)>>> = vec![None; dim * dim];
        for (n, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let parsed: Line = serde_json::from_str(&line)?;
            let bad = |reason: &str| Error::Parse { source_name: "structure constants".into(), line: n + 1, reason: reason.into() };
            if parsed.j as usize >= dim || parsed.k as usize >= dim {
                return Err(bad("subset out of range"));
            }
            let mut t: Vec<(Subset, u32)> = parsed.terms.into_iter().map(|(l, a)| (Subset(l), a)).collect();
            t.sort_unstable();
            let slot = &mut terms[parsed.j as usize * dim + parsed.k as usize];
            if slot.is_some() {
                return Err(bad("duplicate product"));
            }
            *slot = Some(t);
        }
        let terms = terms
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse { source_name: "structure constants".into(), line: 0, reason: "missing products".into() })?;
        StructureConstants::from_terms(rank, terms)
    }
}
