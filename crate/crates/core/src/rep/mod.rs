//! Modular representation data of a descent algebra: simple modules,
//! radical layers, primitive idempotents, Cartan matrix and Ext-quiver.

mod decomposition;
mod idempotent;

use serde::Serialize;

pub use decomposition::{decomposition_matrix, reduced_cartan};
pub use idempotent::{lift, orthogonal_idempotents};

use crate::algebra::{radical, ClassLabel, DescentAlgebra, FieldAlgebra};
use crate::error::{Error, Result};
use crate::field::{Characteristic, Field, FieldVisitor};
use crate::linalg::{self, EchelonBasis};
use crate::quiver::Quiver;
use crate::subset::Subset;

/// A simple module: one-dimensional, named by a class representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleModule {
    /// Position in the class listing.
    pub position: usize,
    pub representative: Subset,
    pub label: ClassLabel,
}

/// The simple modules in characteristic `p`, in listing order.
pub fn simple_modules(alg: &DescentAlgebra, p: Characteristic) -> Vec<SimpleModule> {
    radical::regular_positions(alg, p)
        .into_iter()
        .map(|i| SimpleModule {
            position: i,
            representative: alg.listing().representative(i),
            label: alg.listing().label(i).clone(),
        })
        .collect()
}

/// Everything computed for one descent algebra over one field.
#[derive(Clone, Debug)]
pub struct RepresentationData<F: Field> {
    algebra: FieldAlgebra<F>,
    simples: Vec<SimpleModule>,
    radical_generators: Vec<Vec<F::Elem>>,
    radical_powers: Vec<EchelonBasis<F>>,
    idempotents: Vec<Vec<F::Elem>>,
    cartan: Vec<Vec<u64>>,
    quiver: Quiver,
}

impl<F: Field> RepresentationData<F> {
    pub fn compute(alg: &DescentAlgebra, field: F) -> Result<Self> {
        let p = Characteristic::new(field.characteristic())?;
        let fa = FieldAlgebra::new(field.clone(), alg.constants());
        let dim = alg.dim();
        let simples = simple_modules(alg, p);

        let radical_generators: Vec<Vec<F::Elem>> = radical::spanning_set(alg, p)
            .iter()
            .map(|v| v.iter().map(|&x| field.integer(x)).collect())
            .collect();
        let rad = EchelonBasis::from_vectors(field.clone(), dim, &radical_generators);
        if rad.rank() != dim - simples.len() {
            return Err(Error::Inconsistency(format!(
                "radical has dimension {}, expected {}",
                rad.rank(),
                dim - simples.len()
            )));
        }
        // Cross-check against the common kernel of all one-dimensional characters.
        let reps = alg.listing().representatives();
        let characters: Vec<Vec<F::Elem>> = reps
            .iter()
            .map(|&k| Subset::all(alg.rank()).map(|j| field.integer(alg.constants().mark(j, k) as i64)).collect())
            .collect();
        let kernel = linalg::nullspace(&field, &characters, dim);
        if kernel.len() != rad.rank() || !kernel.iter().all(|v| rad.contains(v)) {
            return Err(Error::Inconsistency("radical differs from the kernel of the characters".into()));
        }

        let idempotents = orthogonal_idempotents(&fa, alg, &simples)?;
        let mut data = RepresentationData {
            algebra: fa,
            simples,
            radical_generators,
            radical_powers: vec![rad],
            idempotents,
            cartan: Vec::new(),
            quiver: Quiver::new(Vec::new(), Vec::new()),
        };
        data.extend_radical_powers(2);
        let full = EchelonBasis::from_vectors(field.clone(), dim, &(0..dim).map(|j| data.algebra.basis(Subset(j as u16))).collect::<Vec<_>>());
        data.cartan = data.peirce_dimensions(&full);
        let top = data.peirce_dimensions(&data.radical_powers[0]);
        let second = data.peirce_dimensions(&data.radical_powers[1]);
        let n = data.simples.len();
        let arrows: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| (top[i][j] - second[i][j]) as u32).collect()).collect();
        let labels = data.simples.iter().map(|s| s.label.to_string()).collect();
        data.quiver = Quiver::new(labels, arrows);
        Ok(data)
    }

    pub fn characteristic(&self) -> u64 {
        self.algebra.field().characteristic()
    }

    pub fn algebra(&self) -> &FieldAlgebra<F> {
        &self.algebra
    }

    pub fn simples(&self) -> &[SimpleModule] {
        &self.simples
    }

    pub fn idempotents(&self) -> &[Vec<F::Elem>] {
        &self.idempotents
    }

    /// `cartan[i][j] = dim e_j A e_i`: row `i` lists the composition factors of the projective cover of simple `i`.
    pub fn cartan(&self) -> &[Vec<u64>] {
        &self.cartan
    }

    /// Arrows `i → j` counted by `dim e_j (Rad/Rad²) e_i`.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn radical(&self) -> &EchelonBasis<F> {
        &self.radical_powers[0]
    }

    pub fn radical_dim(&self) -> usize {
        self.radical_powers[0].rank()
    }

    pub fn radical_square_is_zero(&self) -> bool {
        self.radical_powers[1].rank() == 0
    }

    /// `Rad^k` for `k ≥ 1`.
    pub fn radical_power(&mut self, k: usize) -> &EchelonBasis<F> {
        assert!(k >= 1);
        self.extend_radical_powers(k);
        &self.radical_powers[k - 1]
    }

    fn extend_radical_powers(&mut self, k: usize) {
        let field = self.algebra.field().clone();
        let dim = self.algebra.dim();
        while self.radical_powers.len() < k {
            let last = self.radical_powers.last().expect("radical present");
            let mut next = EchelonBasis::new(field.clone(), dim);
            if last.rank() > 0 {
                'outer: for row in last.rows() {
                    for g in &self.radical_generators {
                        next.insert(self.algebra.multiply(row, g));
                        if next.rank() == last.rank() {
                            break 'outer;
                        }
                    }
                }
            }
            self.radical_powers.push(next);
        }
    }

    /// Dimensions of `Rad^k / Rad^{k+1}` for `k = 0, 1, …` until the radical vanishes.
    pub fn loewy_layers(&mut self) -> Vec<usize> {
        let mut layers = vec![self.simples.len()];
        let mut k = 1;
        loop {
            self.extend_radical_powers(k + 1);
            let cur = self.radical_powers[k - 1].rank();
            if cur == 0 {
                break;
            }
            layers.push(cur - self.radical_powers[k].rank());
            k += 1;
        }
        layers
    }

    /// Radical layers of each projective `A e_i`: `result[i][k][j]` is the multiplicity of
    /// simple `j` in `Rad^k e_i / Rad^{k+1} e_i`.
    pub fn projective_layers(&mut self) -> Vec<Vec<Vec<u64>>> {
        let n = self.simples.len();
        let depth = self.loewy_layers().len();
        let mut dims = vec![self.cartan.clone()];
        for k in 1..=depth {
            let basis = self.radical_powers[k - 1].clone();
            dims.push(self.peirce_dimensions(&basis));
        }
        (0..n)
            .map(|i| {
                (0..depth)
                    .map(|k| (0..n).map(|j| dims[k][i][j] - dims[k + 1][i][j]).collect())
                    .collect()
            })
            .collect()
    }

    /// `[i][j] = dim e_j X e_i` for a two-sided ideal `X`.
    fn peirce_dimensions(&self, space: &EchelonBasis<F>) -> Vec<Vec<u64>> {
        if self.characteristic() == 0 {
            self.peirce_traces(space)
        } else {
            self.peirce_ranks(space)
        }
    }

    /// In characteristic zero the trace of the idempotent map `x ↦ e_j x e_i` on `X` is its rank.
    fn peirce_traces(&self, space: &EchelonBasis<F>) -> Vec<Vec<u64>> {
        let field = self.algebra.field().clone();
        let n = self.idempotents.len();
        let lefts: Vec<Vec<Vec<F::Elem>>> = self.idempotents.iter().map(|e| self.algebra.left_matrix(e)).collect();
        let mut out = vec![vec![0u64; n]; n];
        for (i, ei) in self.idempotents.iter().enumerate() {
            let images: Vec<Vec<F::Elem>> = space.rows().iter().map(|b| self.algebra.multiply(b, ei)).collect();
            for (j, lj) in lefts.iter().enumerate() {
                let mut trace = field.zero();
                for (img, &pivot) in images.iter().zip(space.pivots()) {
                    for (a, b) in lj[pivot].iter().zip(img) {
                        if !field.is_zero(b) {
                            field.mul_add_assign(&mut trace, a, b);
                        }
                    }
                }
                out[i][j] = (0..=space.rank() as i64)
                    .find(|&d| field.integer(d) == trace)
                    .expect("trace of an idempotent map is its rank") as u64;
            }
        }
        out
    }

    fn peirce_ranks(&self, space: &EchelonBasis<F>) -> Vec<Vec<u64>> {
        let field = self.algebra.field().clone();
        let dim = self.algebra.dim();
        let n = self.idempotents.len();
        let mut out = vec![vec![0u64; n]; n];
        for (i, ei) in self.idempotents.iter().enumerate() {
            let right = EchelonBasis::from_vectors(
                field.clone(),
                dim,
                &space.rows().iter().map(|b| self.algebra.multiply(b, ei)).collect::<Vec<_>>(),
            );
            for (j, ej) in self.idempotents.iter().enumerate() {
                let images: Vec<Vec<F::Elem>> = right.rows().iter().map(|y| self.algebra.multiply(ej, y)).collect();
                out[i][j] = linalg::rank(&field, dim, &images) as u64;
            }
        }
        out
    }
}

/// Field-independent summary of [`RepresentationData`].
#[derive(Clone, Debug, Serialize)]
pub struct RepresentationSummary {
    pub characteristic: u64,
    pub simples: Vec<SimpleModule>,
    pub cartan: Vec<Vec<u64>>,
    pub quiver: Quiver,
    pub radical_dim: usize,
    pub radical_square_zero: bool,
    pub loewy_layers: Vec<usize>,
}

struct Summarize<'a>(&'a DescentAlgebra);

impl FieldVisitor for Summarize<'_> {
    type Output = Result<RepresentationSummary>;
    fn visit<F: Field>(self, field: F) -> Result<RepresentationSummary> {
        let mut data = RepresentationData::compute(self.0, field)?;
        let loewy_layers = data.loewy_layers();
        Ok(RepresentationSummary {
            characteristic: data.characteristic(),
            simples: data.simples.clone(),
            cartan: data.cartan.clone(),
            quiver: data.quiver.clone(),
            radical_dim: data.radical_dim(),
            radical_square_zero: data.radical_square_is_zero(),
            loewy_layers,
        })
    }
}

/// Compute the representation data in characteristic `p` and drop the field elements.
pub fn summarize(alg: &DescentAlgebra, p: Characteristic) -> Result<RepresentationSummary> {
    p.visit(Summarize(alg))
}

struct ExtQuiver<'a>(&'a DescentAlgebra);

impl FieldVisitor for ExtQuiver<'_> {
    type Output = Result<Quiver>;
    fn visit<F: Field>(self, field: F) -> Result<Quiver> {
        Ok(RepresentationData::compute(self.0, field)?.quiver)
    }
}

/// Only the Ext-quiver in characteristic `p`.
pub fn ext_quiver(alg: &DescentAlgebra, p: Characteristic) -> Result<Quiver> {
    p.visit(ExtQuiver(alg))
}

#[cfg(test)]
mod tests;
