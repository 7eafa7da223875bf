//! The descent algebra: structure constants, class combinatorics, products
//! over a field, and the ingredients used to study its radical.

mod constants;
mod element;
pub mod oracle;
pub mod radical;
pub mod surjection;
pub mod theta;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use constants::StructureConstants;
pub use element::FieldAlgebra;

use crate::coxeter::{BuildOptions, CoxeterType, ElementTable, Family, SubsetClasses};
use crate::error::{Error, Result};
use crate::partition::{self, Partition, TypeDLabel};
use crate::subset::Subset;

/// Combinatorial name of a parabolic conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    /// Block sizes of the induced set partition (type A).
    Blocks(Partition),
    /// Positive cycle type of the parabolic Coxeter element (type B).
    Cycles(Partition),
    /// Type D label.
    D(TypeDLabel),
    /// No combinatorial label: the representative subset.
    Subset(Subset),
}

impl ClassLabel {
    pub fn for_subset(ty: CoxeterType, j: Subset) -> ClassLabel {
        let n = ty.rank();
        match ty.family() {
            Family::A => ClassLabel::Blocks(partition::type_a_label(n, j)),
            Family::B => ClassLabel::Cycles(partition::type_b_label(n, j)),
            Family::D => ClassLabel::D(partition::type_d_label(n, j)),
            _ => ClassLabel::Subset(j),
        }
    }

    fn listing_cmp(&self, other: &ClassLabel) -> Ordering {
        match (self, other) {
            (ClassLabel::Cycles(a), ClassLabel::Cycles(b)) => a.listing_cmp(b),
            (ClassLabel::D(a), ClassLabel::D(b)) => a.listing_cmp(b),
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Blocks(p) | ClassLabel::Cycles(p) => write!(f, "{p}"),
            ClassLabel::D(l) => write!(f, "{l}"),
            ClassLabel::Subset(s) => write!(f, "{s}"),
        }
    }
}

/// Subset classes in listing order together with their labels.
#[derive(Clone, Debug)]
pub struct ClassListing {
    classes: SubsetClasses,
    order: Vec<usize>,
    position: Vec<usize>,
    labels: Vec<ClassLabel>,
}

impl ClassListing {
    /// Order classes by increasing rank, then by label (types B and D),
    /// then by representative bitmask.
    pub fn new(ty: CoxeterType, classes: SubsetClasses) -> Result<ClassListing> {
        let labels_by_class: Vec<ClassLabel> = (0..classes.len())
            .map(|c| ClassLabel::for_subset(ty, classes.representative(c)))
            .collect();
        if matches!(ty.family(), Family::A | Family::B | Family::D) {
            for c in 0..classes.len() {
                for &j in classes.members(c) {
                    if ClassLabel::for_subset(ty, j) != labels_by_class[c] {
                        return Err(Error::Inconsistency(format!("{ty}: label differs inside the class of {j}")));
                    }
                }
            }
            let distinct: std::collections::HashSet<_> = labels_by_class.iter().collect();
            if distinct.len() != labels_by_class.len() {
                return Err(Error::Inconsistency(format!("{ty}: two classes share a label")));
            }
        }
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by(|&a, &b| {
            let (ja, jb) = (classes.representative(a), classes.representative(b));
            ja.len()
                .cmp(&jb.len())
                .then_with(|| labels_by_class[a].listing_cmp(&labels_by_class[b]))
                .then_with(|| ja.cmp(&jb))
        });
        let mut position = vec![0; classes.len()];
        for (i, &c) in order.iter().enumerate() {
            position[c] = i;
        }
        let labels = order.iter().map(|&c| labels_by_class[c].clone()).collect();
        Ok(ClassListing { classes, order, position, labels })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Representative of the `i`-th class in listing order.
    pub fn representative(&self, i: usize) -> Subset {
        self.classes.representative(self.order[i])
    }

    pub fn representatives(&self) -> Vec<Subset> {
        (0..self.len()).map(|i| self.representative(i)).collect()
    }

    pub fn label(&self, i: usize) -> &ClassLabel {
        &self.labels[i]
    }

    pub fn members(&self, i: usize) -> &[Subset] {
        self.classes.members(self.order[i])
    }

    /// Listing position of the class containing `j`.
    pub fn position_of(&self, j: Subset) -> usize {
        self.position[self.classes.class_of(j)]
    }

    pub fn classes(&self) -> &SubsetClasses {
        &self.classes
    }
}

/// A descent algebra over the integers, with its class listing.
#[derive(Clone, Debug)]
pub struct DescentAlgebra {
    ty: CoxeterType,
    constants: StructureConstants,
    listing: ClassListing,
}

impl DescentAlgebra {
    /// Build through the caches in `opts.cache_dir`: stored structure
    /// constants are preferred, then a stored element table.
    pub fn load(ty: CoxeterType, opts: &BuildOptions) -> Result<DescentAlgebra> {
        let path = opts.cache_dir.as_ref().map(|d| d.join(format!("{}.constants.jsonl", ty.tag())));
        if let Some(p) = path.as_ref().filter(|p| p.exists()) {
            let file = std::io::BufReader::new(std::fs::File::open(p)?);
            let constants = StructureConstants::read_jsonl(ty.rank(), file)
                .map_err(|e| Error::CorruptCache { path: p.clone(), reason: e.to_string() })?;
            return DescentAlgebra::from_constants(ty, constants);
        }
        let alg = DescentAlgebra::new(&crate::coxeter::build(ty, opts)?)?;
        if let Some(p) = path {
            let mut bytes = Vec::new();
            alg.constants.write_jsonl(&mut bytes)?;
            crate::coxeter::cache::write_atomic(&p, &bytes)?;
        }
        Ok(alg)
    }

    pub fn new(table: &ElementTable) -> Result<DescentAlgebra> {
        let ty = table.coxeter_type();
        let constants = StructureConstants::compute(table);
        let classes = SubsetClasses::compute(table);
        Self::assemble(ty, constants, classes)
    }

    /// Rebuild from stored structure constants. Two subsets of the same size
    /// are conjugate exactly when `a_JKK > 0`.
    pub fn from_constants(ty: CoxeterType, constants: StructureConstants) -> Result<DescentAlgebra> {
        if constants.rank() != ty.rank() {
            return Err(Error::InvalidArgument(format!("{ty}: constants have rank {}", constants.rank())));
        }
        let classes = SubsetClasses::from_relation(ty.rank(), |j, k| j.len() == k.len() && constants.mark(j, k) > 0);
        Self::assemble(ty, constants, classes)
    }

    fn assemble(ty: CoxeterType, constants: StructureConstants, classes: SubsetClasses) -> Result<DescentAlgebra> {
        let listing = ClassListing::new(ty, classes)?;
        let alg = DescentAlgebra { ty, constants, listing };
        alg.check_invariants()?;
        Ok(alg)
    }

    /// Cheap identities every descent algebra satisfies.
    fn check_invariants(&self) -> Result<()> {
        let full = Subset::full(self.rank());
        let order = self.ty.order();
        for k in Subset::all(self.rank()) {
            let t = self.constants.product(full, k);
            if t != [(k, 1)] {
                return Err(Error::Inconsistency(format!("{}: x_S x_{k} is not x_{k}", self.ty)));
            }
        }
        if self.constants.double_coset_count(Subset::EMPTY, Subset::EMPTY) != order {
            return Err(Error::Inconsistency(format!("{}: |X_∅∅| differs from |W|", self.ty)));
        }
        Ok(())
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn listing(&self) -> &ClassListing {
        &self.listing
    }

    /// The marks table `β_JK` on class representatives, rows and columns in listing order.
    pub fn marks(&self) -> Vec<Vec<u32>> {
        let reps = self.listing.representatives();
        reps.iter()
            .map(|&j| reps.iter().map(|&k| self.constants.mark(j, k)).collect())
            .collect()
    }

    /// `|N_W(W_J) : W_J| = β_JJ`.
    pub fn normalizer_index(&self, j: Subset) -> u32 {
        self.constants.mark(j, j)
    }
}
