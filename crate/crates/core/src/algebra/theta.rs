//! The character map sending `x_J` to the permutation character of `W` on
//! the cosets of `W_J`.

use crate::coxeter::{ConjugacyClasses, ElemId, ElementTable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::subset::Subset;

/// Number of cosets `u W_J` fixed by `g`: those `u ∈ X_J` with `u⁻¹ g u ∈ W_J`.
pub fn fixed_point_count(table: &ElementTable, j: Subset, g: ElemId) -> u64 {
    table
        .coset_reps(j)
        .filter(|&u| {
            let c = table.multiply(table.inverse(u), table.multiply(g, u));
            table.in_parabolic(c, j)
        })
        .count() as u64
}

/// Same value from class sizes: `|C_W(g)| · |class(g) ∩ W_J| / |W_J|`.
pub fn fixed_point_count_by_classes(table: &ElementTable, classes: &ConjugacyClasses, j: Subset, g: ElemId) -> Result<u64> {
    let c = classes.class_of(g);
    let class_size = classes.class(c).len() as u64;
    let parabolic = table.ids().filter(|&u| table.in_parabolic(u, j)).count() as u64;
    let meet = classes.class(c).iter().filter(|&&u| table.in_parabolic(u, j)).count() as u64;
    let num = table.len() as u64 * meet;
    let den = class_size * parabolic;
    if !num.is_multiple_of(den) {
        return Err(Error::Inconsistency(format!("non-integral permutation character at {j}")));
    }
    Ok(num / den)
}

/// Permutation characters `φ_J` on class representatives, indexed `[J][class]`.
pub fn permutation_characters(table: &ElementTable, classes: &ConjugacyClasses) -> Vec<Vec<u64>> {
    Subset::all(table.rank())
        .map(|j| (0..classes.len()).map(|c| fixed_point_count(table, j, classes.representative(c))).collect())
        .collect()
}

/// `θ(x) = Σ_J x_J φ_J`, evaluated over `field`.
pub fn theta<F: Field>(field: &F, characters: &[Vec<u64>], x: &[F::Elem]) -> Vec<F::Elem> {
    let nclasses = characters.first().map_or(0, |r| r.len());
    let mut out = field.zeros(nclasses);
    for (xj, row) in x.iter().zip(characters) {
        if field.is_zero(xj) {
            continue;
        }
        for (o, &v) in out.iter_mut().zip(row) {
            field.mul_add_assign(o, xj, &field.integer(v as i64));
        }
    }
    out
}
