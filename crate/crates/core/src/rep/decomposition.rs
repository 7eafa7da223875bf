use crate::algebra::{radical, DescentAlgebra};
use crate::error::{Error, Result};
use crate::field::Characteristic;
use crate::subset::Subset;

/// Decomposition matrix: rows are the characteristic-zero simples (all
/// classes, listing order), columns the simples in characteristic `p`.
/// Entry 1 when the two characters agree modulo `p` on every `x_L`.
pub fn decomposition_matrix(alg: &DescentAlgebra, p: Characteristic) -> Result<Vec<Vec<u64>>> {
    let listing = alg.listing();
    let cols = radical::regular_positions(alg, p);
    let column = |k: Subset| -> Vec<u64> {
        Subset::all(alg.rank())
            .map(|l| {
                let v = alg.constants().mark(l, k) as u64;
                if p.is_zero() {
                    v
                } else {
                    v % p.value()
                }
            })
            .collect()
    };
    let col_chars: Vec<Vec<u64>> = cols.iter().map(|&c| column(listing.representative(c))).collect();
    (0..listing.len())
        .map(|i| {
            let ch = column(listing.representative(i));
            let row: Vec<u64> = col_chars.iter().map(|c| (*c == ch) as u64).collect();
            if row.iter().sum::<u64>() != 1 {
                return Err(Error::NoTarget(listing.label(i).to_string()));
            }
            Ok(row)
        })
        .collect()
}

/// `Dᵀ C D`.
pub fn reduced_cartan(cartan: &[Vec<u64>], decomposition: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let m = decomposition.first().map_or(0, |r| r.len());
    let n = cartan.len();
    (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    (0..n)
                        .flat_map(|i| (0..n).map(move |j| (i, j)))
                        .map(|(i, j)| decomposition[i][a] * cartan[i][j] * decomposition[j][b])
                        .sum()
                })
                .collect()
        })
        .collect()
}
