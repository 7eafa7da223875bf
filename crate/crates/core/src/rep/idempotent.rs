use crate::algebra::{DescentAlgebra, FieldAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;

use super::SimpleModule;

const MAX_LIFT_STEPS: usize = 64;

/// Lift an idempotent modulo the radical with `e ← 3e² - 2e³`.
pub fn lift<F: Field>(alg: &FieldAlgebra<F>, mut e: Vec<F::Elem>) -> Result<Vec<F::Elem>> {
    let f = alg.field();
    let (three, two) = (f.integer(3), f.integer(2));
    for _ in 0..MAX_LIFT_STEPS {
        let sq = alg.multiply(&e, &e);
        if sq == e {
            return Ok(e);
        }
        let cube = alg.multiply(&sq, &e);
        e = alg.sub(&alg.scale(&three, &sq), &alg.scale(&two, &cube));
    }
    Err(Error::LiftFailed(MAX_LIFT_STEPS))
}

/// Complete set of primitive orthogonal idempotents, one per simple module,
/// with `λ_K(e_i) = δ` for the simple indexed by `K`.
pub fn orthogonal_idempotents<F: Field>(
    alg: &FieldAlgebra<F>,
    desc: &DescentAlgebra,
    simples: &[SimpleModule],
) -> Result<Vec<Vec<F::Elem>>> {
    let f = alg.field();
    let m = simples.len();
    let reps: Vec<_> = simples.iter().map(|s| s.representative).collect();
    // Rows indexed by the character, columns by the basis element it is evaluated on.
    let system: Vec<Vec<F::Elem>> = reps
        .iter()
        .map(|&k| reps.iter().map(|&j| f.integer(desc.constants().mark(j, k) as i64)).collect())
        .collect();
    let mut approximations = Vec::with_capacity(m);
    for target in 0..m {
        let rhs: Vec<F::Elem> = (0..m).map(|b| if b == target { f.one() } else { f.zero() }).collect();
        let coeffs = linalg::solve(f, &system, &rhs)
            .ok_or_else(|| Error::Inconsistency("marks restricted to the simples are singular".into()))?;
        let mut e = alg.zero();
        for (c, &j) in coeffs.into_iter().zip(&reps) {
            e[j.index()] = c;
        }
        approximations.push(e);
    }

    let one = alg.one();
    let mut found: Vec<Vec<F::Elem>> = Vec::with_capacity(m);
    let mut complement = one.clone();
    for (k, approx) in approximations.into_iter().enumerate() {
        let e = if k + 1 == m {
            complement.clone()
        } else {
            let squeezed = alg.multiply(&alg.multiply(&complement, &approx), &complement);
            lift(alg, squeezed)?
        };
        complement = alg.sub(&complement, &e);
        found.push(e);
    }

    for (i, e) in found.iter().enumerate() {
        if alg.multiply(e, e) != *e {
            return Err(Error::Inconsistency(format!("idempotent {i} is not idempotent")));
        }
        for (j, g) in found.iter().enumerate() {
            if i != j && !alg.is_zero(&alg.multiply(e, g)) {
                return Err(Error::Inconsistency(format!("idempotents {i} and {j} are not orthogonal")));
            }
        }
        for (j, &k) in reps.iter().enumerate() {
            let v = alg.character(e, k);
            let ok = if i == j { f.is_one(&v) } else { f.is_zero(&v) };
            if !ok {
                return Err(Error::Inconsistency(format!("idempotent {i} acts wrongly on simple {j}")));
            }
        }
    }
    if !alg.is_zero(&complement) {
        return Err(Error::Inconsistency("idempotents do not sum to one".into()));
    }
    Ok(found)
}
