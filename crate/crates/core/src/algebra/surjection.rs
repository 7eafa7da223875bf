//! Surjective algebra maps between descent algebras of types B and D.

use crate::subset::Subset;

use super::StructureConstants;

/// `B_{n+1} → B_n`: `x_K ↦ x_{K'}` where `K'` drops the sign generator and
/// shifts the rest down, and `x_K ↦ 0` when `K` lacks the sign generator.
pub fn restrict_b(k: Subset) -> Option<Subset> {
    k.contains(0).then_some(Subset(k.0 >> 1))
}

/// `D_n → B_{n-2}`: `x_J ↦ x_{J'}` when both branch generators lie in `J`, else `0`.
pub fn restrict_d(j: Subset) -> Option<Subset> {
    (j.contains(0) && j.contains(1)).then_some(Subset(j.0 >> 2))
}

/// Image of an integer combination under a basis map.
pub fn apply(x: &[i64], map: impl Fn(Subset) -> Option<Subset>, target_rank: usize) -> Vec<i64> {
    let mut out = vec![0i64; 1 << target_rank];
    for (j, &c) in x.iter().enumerate() {
        if let Some(t) = map(Subset(j as u16)) {
            out[t.index()] += c;
        }
    }
    out
}

fn product_vector(c: &StructureConstants, j: Subset, k: Subset) -> Vec<i64> {
    let mut v = vec![0i64; c.dim()];
    for &(l, a) in c.product(j, k) {
        v[l.index()] = a as i64;
    }
    v
}

/// Check `f(x_J x_K) = f(x_J) f(x_K)` for all basis pairs and that `f` preserves the identity.
/// Returns the first failing pair.
pub fn check_homomorphism(
    source: &StructureConstants,
    target: &StructureConstants,
    map: impl Fn(Subset) -> Option<Subset> + Copy,
) -> Result<(), (Subset, Subset)> {
    let (sr, tr) = (source.rank(), target.rank());
    if map(Subset::full(sr)) != Some(Subset::full(tr)) {
        return Err((Subset::full(sr), Subset::full(sr)));
    }
    for j in Subset::all(sr) {
        for k in Subset::all(sr) {
            let lhs = apply(&product_vector(source, j, k), map, tr);
            let rhs = match (map(j), map(k)) {
                (Some(a), Some(b)) => product_vector(target, a, b),
                _ => vec![0; 1 << tr],
            };
            if lhs != rhs {
                return Err((j, k));
            }
        }
    }
    Ok(())
}

/// Every basis vector of the target is hit.
pub fn is_surjective(source_rank: usize, target_rank: usize, map: impl Fn(Subset) -> Option<Subset>) -> bool {
    let mut hit = vec![false; 1 << target_rank];
    for j in Subset::all(source_rank) {
        if let Some(t) = map(j) {
            hit[t.index()] = true;
        }
    }
    hit.into_iter().all(|h| h)
}
