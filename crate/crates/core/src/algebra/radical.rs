//! The radical of the descent algebra over a field of characteristic `p`:
//! it is spanned by the differences `x_J - x_K` of conjugate subsets together
//! with every `x_L` whose normalizer index `β_LL` is divisible by `p`.

use crate::field::Characteristic;
use crate::subset::Subset;

use super::DescentAlgebra;

/// Listing positions of the classes indexing simple modules in characteristic `p`.
pub fn regular_positions(alg: &DescentAlgebra, p: Characteristic) -> Vec<usize> {
    let listing = alg.listing();
    (0..listing.len())
        .filter(|&i| !p.divides(alg.normalizer_index(listing.representative(i)) as u64))
        .collect()
}

/// Number of simple modules in characteristic `p`.
pub fn simple_count(alg: &DescentAlgebra, p: Characteristic) -> usize {
    regular_positions(alg, p).len()
}

/// Integer vectors spanning the radical; they are linearly independent over
/// every field and number `2^n - |simple modules|`.
pub fn spanning_set(alg: &DescentAlgebra, p: Characteristic) -> Vec<Vec<i64>> {
    let dim = alg.dim();
    let listing = alg.listing();
    let mut out = Vec::new();
    for i in 0..listing.len() {
        let members = listing.members(i);
        let rep = members[0];
        for &j in &members[1..] {
            let mut v = vec![0i64; dim];
            v[rep.index()] = 1;
            v[j.index()] = -1;
            out.push(v);
        }
        if p.divides(alg.normalizer_index(rep) as u64) {
            let mut v = vec![0i64; dim];
            v[rep.index()] = 1;
            out.push(v);
        }
    }
    out
}

/// Simple modules are one-dimensional: `λ_K(x) = Σ_J x_J β_JK` for `K` a regular representative.
pub fn character_values(alg: &DescentAlgebra, x: &[i64], k: Subset) -> i64 {
    Subset::all(alg.rank())
        .map(|j| x[j.index()] * alg.constants().mark(j, k) as i64)
        .sum()
}
