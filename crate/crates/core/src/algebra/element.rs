use super::StructureConstants;
use crate::field::Field;
use crate::subset::Subset;

/// The descent algebra over a field: elements are coefficient vectors indexed
/// by subset bitmask.
#[derive(Clone, Debug)]
pub struct FieldAlgebra<F: Field> {
    field: F,
    rank: usize,
    terms: Vec<Vec<(u16, F::Elem)>>,
    marks: Vec<Vec<F::Elem>>,
}

impl<F: Field> FieldAlgebra<F> {
    pub fn new(field: F, constants: &StructureConstants) -> Self {
        let rank = constants.rank();
        let dim = constants.dim();
        let mut terms = Vec::with_capacity(dim * dim);
        for j in Subset::all(rank) {
            for k in Subset::all(rank) {
                terms.push(
                    constants
                        .product(j, k)
                        .iter()
                        .map(|&(l, a)| (l.0, field.integer(a as i64)))
                        .filter(|(_, a)| !field.is_zero(a))
                        .collect(),
                );
            }
        }
        let marks = Subset::all(rank)
            .map(|j| Subset::all(rank).map(|k| field.integer(constants.mark(j, k) as i64)).collect())
            .collect();
        FieldAlgebra { field, rank, terms, marks }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        1 << self.rank
    }

    pub fn zero(&self) -> Vec<F::Elem> {
        self.field.zeros(self.dim())
    }

    pub fn basis(&self, j: Subset) -> Vec<F::Elem> {
        let mut v = self.zero();
        v[j.index()] = self.field.one();
        v
    }

    /// The identity element `x_S`.
    pub fn one(&self) -> Vec<F::Elem> {
        self.basis(Subset::full(self.rank))
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, c: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
        a.iter().map(|x| self.field.mul(c, x)).collect()
    }

    pub fn is_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    pub fn multiply(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let dim = self.dim();
        let mut out = self.zero();
        let nb: Vec<usize> = (0..dim).filter(|&k| !f.is_zero(&b[k])).collect();
        for (j, aj) in a.iter().enumerate() {
            if f.is_zero(aj) {
                continue;
            }
            for &k in &nb {
                let c = f.mul(aj, &b[k]);
                for (l, v) in &self.terms[j * dim + k] {
                    f.mul_add_assign(&mut out[*l as usize], &c, v);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ a·y` in the subset basis: entry `[L][K]` is the `x_L` coefficient of `a·x_K`.
    pub fn left_matrix(&self, a: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let dim = self.dim();
        let mut m = vec![self.zero(); dim];
        for (j, aj) in a.iter().enumerate() {
            if f.is_zero(aj) {
                continue;
            }
            for k in 0..dim {
                for (l, v) in &self.terms[j * dim + k] {
                    f.mul_add_assign(&mut m[*l as usize][k], aj, v);
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y·b`: entry `[L][J]` is the `x_L` coefficient of `x_J·b`.
    pub fn right_matrix(&self, b: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let dim = self.dim();
        let mut m = vec![self.zero(); dim];
        for (k, bk) in b.iter().enumerate() {
            if f.is_zero(bk) {
                continue;
            }
            for j in 0..dim {
                for (l, v) in &self.terms[j * dim + k] {
                    f.mul_add_assign(&mut m[*l as usize][j], bk, v);
                }
            }
        }
        m
    }

    /// The one-dimensional character `λ_K(a) = Σ_J a_J β_JK`.
    pub fn character(&self, a: &[F::Elem], k: Subset) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (j, aj) in a.iter().enumerate() {
            if !f.is_zero(aj) {
                f.mul_add_assign(&mut acc, aj, &self.marks[j][k.index()]);
            }
        }
        acc
    }
}
