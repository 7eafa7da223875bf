//! Independent computation of products inside the group algebra.

use crate::coxeter::{ElemId, ElementTable};
use crate::error::{Error, Result};
use crate::subset::Subset;

use super::StructureConstants;

/// Expand `x_J x_K` by multiplying group elements, then read off its
/// coordinates in the `x_L` basis. Fails if the product is not constant on
/// right descent classes.
pub fn product(table: &ElementTable, j: Subset, k: Subset) -> Result<Vec<i64>> {
    let xj: Vec<ElemId> = table.coset_reps(j).collect();
    let xk: Vec<ElemId> = table.coset_reps(k).collect();
    let mut counts = vec![0i64; table.len()];
    for &u in &xj {
        for &v in &xk {
            counts[table.multiply(u, v) as usize] += 1;
        }
    }
    from_group_vector(table, &counts)
}

/// Coordinates of a group-algebra element lying in the descent algebra.
pub fn from_group_vector(table: &ElementTable, counts: &[i64]) -> Result<Vec<i64>> {
    let rank = table.rank();
    let dim = 1usize << rank;
    let mut by_descent: Vec<Option<i64>> = vec![None; dim];
    for w in table.ids() {
        let d = table.right_descents(w).index();
        match by_descent[d] {
            None => by_descent[d] = Some(counts[w as usize]),
            Some(c) if c != counts[w as usize] => {
                return Err(Error::Inconsistency(format!(
                    "group algebra element is not constant on descent class {}",
                    Subset(d as u16)
                )))
            }
            Some(_) => {}
        }
    }
    let full = Subset::full(rank);
    // h(T) = Σ_{L ⊆ T} c_L is the coefficient of any w with descent set S \ T.
    let h: Vec<i64> = Subset::all(rank)
        .map(|t| by_descent[full.without(t).index()].unwrap_or(0))
        .collect();
    Ok(Subset::all(rank)
        .map(|l| {
            l.subsets()
                .map(|t| if (l.len() - t.len()) % 2 == 0 { h[t.index()] } else { -h[t.index()] })
                .sum()
        })
        .collect())
}

/// All structure constants by brute force.
pub fn structure_constants(table: &ElementTable) -> Result<StructureConstants> {
    let rank = table.rank();
    let mut terms = Vec::with_capacity(1 << (2 * rank));
    for j in Subset::all(rank) {
        for k in Subset::all(rank) {
            let coeffs = product(table, j, k)?;
            let mut t = Vec::new();
            for (l, c) in coeffs.into_iter().enumerate() {
                if c < 0 {
                    return Err(Error::Inconsistency(format!("negative coefficient in x_{j} x_{k}")));
                }
                if c > 0 {
                    t.push((Subset(l as u16), c as u32));
                }
            }
            terms.push(t);
        }
    }
    StructureConstants::from_terms(rank, terms)
}
