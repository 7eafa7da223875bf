use super::table::{ElemId, ElementTable, NOT_SIMPLE};
use crate::subset::Subset;

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut y = x;
        while self.0[y as usize] != r {
            let next = self.0[y as usize];
            self.0[y as usize] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi as usize] = lo;
        }
    }
}

/// Partition of the subsets of `S` into `W`-conjugacy classes.
/// Classes are listed by increasing size, then by the bitmask of their
/// representative (the smallest member).
#[derive(Clone, Debug)]
pub struct SubsetClasses {
    rank: usize,
    class_of: Vec<usize>,
    members: Vec<Vec<Subset>>,
}

impl SubsetClasses {
    /// Two subsets are conjugate iff some `w` without left descents in `J`
    /// sends every reflection of `J` to a simple reflection.
    pub fn compute(table: &ElementTable) -> SubsetClasses {
        let rank = table.rank();
        let mut uf = UnionFind::new(1 << rank);
        let mut image = vec![0u16; 1 << rank];
        for w in table.ids() {
            let free = Subset::full(rank)
                .without(table.left_descents(w))
                .iter()
                .filter(|&s| table.conjugate_simple(w, s) != NOT_SIMPLE)
                .fold(Subset::EMPTY, |m, s| m.union(Subset::singleton(s)));
            for j in free.subsets() {
                if j.is_empty() {
                    continue;
                }
                let low = j.0.trailing_zeros() as usize;
                let rest = j.0 & (j.0 - 1);
                image[j.index()] = image[rest as usize] | 1 << table.conjugate_simple(w, low);
                uf.union(j.0 as u32, image[j.index()] as u32);
            }
        }
        Self::from_union_find(rank, &mut uf)
    }

    fn from_union_find(rank: usize, uf: &mut UnionFind) -> SubsetClasses {
        let mut roots: Vec<u32> = Vec::new();
        let mut members: Vec<Vec<Subset>> = Vec::new();
        for j in Subset::all(rank) {
            let r = uf.find(j.0 as u32);
            match roots.iter().position(|&x| x == r) {
                Some(c) => members[c].push(j),
                None => {
                    roots.push(r);
                    members.push(vec![j]);
                }
            }
        }
        members.sort_by_key(|m| (m[0].len(), m[0]));
        let mut class_of = vec![0usize; 1 << rank];
        for (c, m) in members.iter().enumerate() {
            for j in m {
                class_of[j.index()] = c;
            }
        }
        SubsetClasses { rank, class_of, members }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn class_of(&self, j: Subset) -> usize {
        self.class_of[j.index()]
    }

    pub fn members(&self, class: usize) -> &[Subset] {
        &self.members[class]
    }

    pub fn representative(&self, class: usize) -> Subset {
        self.members[class][0]
    }

    pub fn representatives(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().map(|m| m[0])
    }

    pub fn conjugate(&self, j: Subset, k: Subset) -> bool {
        self.class_of(j) == self.class_of(k)
    }
}

/// Conjugacy classes of the group, found by closing under conjugation by generators.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    class_of: Vec<u32>,
    classes: Vec<Vec<ElemId>>,
}

impl ConjugacyClasses {
    pub fn compute(table: &ElementTable) -> ConjugacyClasses {
        let gens: Vec<ElemId> = (0..table.rank()).map(|s| table.generator(s)).collect();
        let mut uf = UnionFind::new(table.len());
        for w in table.ids() {
            for &g in &gens {
                let c = table.multiply(g, table.multiply(w, g));
                uf.union(w, c);
            }
        }
        let mut index = vec![u32::MAX; table.len()];
        let mut classes: Vec<Vec<ElemId>> = Vec::new();
        let mut class_of = vec![0u32; table.len()];
        for w in table.ids() {
            let r = uf.find(w) as usize;
            if index[r] == u32::MAX {
                index[r] = classes.len() as u32;
                classes.push(Vec::new());
            }
            class_of[w as usize] = index[r];
            classes[index[r] as usize].push(w);
        }
        ConjugacyClasses { class_of, classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, w: ElemId) -> usize {
        self.class_of[w as usize] as usize
    }

    pub fn class(&self, c: usize) -> &[ElemId] {
        &self.classes[c]
    }

    pub fn representative(&self, c: usize) -> ElemId {
        self.classes[c][0]
    }
}

impl SubsetClasses {
    /// Classes of the equivalence relation generated by `related`.
    pub fn from_relation(rank: usize, related: impl Fn(Subset, Subset) -> bool) -> SubsetClasses {
        let mut uf = UnionFind::new(1 << rank);
        for j in Subset::all(rank) {
            for k in Subset::all(rank) {
                if j < k && related(j, k) {
                    uf.union(j.0 as u32, k.0 as u32);
                }
            }
        }
        Self::from_union_find(rank, &mut uf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    #[test]
    fn class_counts() {
        // Conjugacy classes of subsets of S for small types.
        for (ty, n) in [
            (CoxeterType::a(3), 5),
            (CoxeterType::b(2), 4),
            (CoxeterType::b(3), 7),
            (CoxeterType::d(4), 11),
            (CoxeterType::h(3), 6),
            (CoxeterType::dihedral(5), 3),
            (CoxeterType::dihedral(6), 4),
        ] {
            let t = ElementTable::build(ty).unwrap();
            assert_eq!(SubsetClasses::compute(&t).len(), n, "{ty}");
        }
    }

    #[test]
    fn conjugacy_class_counts() {
        for (ty, n) in [(CoxeterType::a(3), 5), (CoxeterType::b(3), 10), (CoxeterType::h(3), 10), (CoxeterType::dihedral(5), 4)] {
            let t = ElementTable::build(ty).unwrap();
            assert_eq!(ConjugacyClasses::compute(&t).len(), n, "{ty}");
        }
    }
}
