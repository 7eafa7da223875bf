use std::borrow::Cow;
use std::collections::HashMap;

use super::dihedral::{Dihedral, DihedralElem};
use super::roots::RootSystem;
use super::types::{CoxeterType, Family};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Index of an element inside an [`ElementTable`].
pub type ElemId = u32;

/// Marker in the conjugation map when `w⁻¹ s w` is not a simple reflection.
pub const NOT_SIMPLE: u8 = u8::MAX;

/// Groups above this order do not keep full root permutations in memory.
pub const PERM_RETAIN_LIMIT: u64 = 500_000;

#[derive(Clone, Debug)]
enum Model {
    Roots {
        roots: RootSystem,
        /// `keys[w]` packs the images of the simple roots, one byte each.
        keys: Vec<u64>,
        inv_keys: Vec<u64>,
        index: HashMap<u64, ElemId>,
        perms: Option<Vec<u8>>,
    },
    Dihedral {
        group: Dihedral,
        elems: Vec<DihedralElem>,
        index: Vec<ElemId>,
    },
}

/// All elements of a finite Coxeter group, enumerated breadth-first by length,
/// with descent sets, supports and the simple-reflection conjugation map.
#[derive(Clone, Debug)]
pub struct ElementTable {
    ty: CoxeterType,
    rank: usize,
    model: Model,
    length: Vec<u16>,
    left: Vec<Subset>,
    right: Vec<Subset>,
    support: Vec<Subset>,
    conj: Vec<u8>,
    buckets: Vec<Vec<ElemId>>,
}

fn pack(images: &[u8]) -> u64 {
    images.iter().enumerate().fold(0u64, |k, (i, &b)| k | (b as u64) << (8 * i))
}

fn unpack(key: u64, rank: usize) -> Vec<u8> {
    (0..rank).map(|i| (key >> (8 * i)) as u8).collect()
}

/// Per-element data derived from a root permutation.
struct Records {
    rank: usize,
    keys: Vec<u64>,
    inv_keys: Vec<u64>,
    length: Vec<u16>,
    left: Vec<Subset>,
    right: Vec<Subset>,
    support: Vec<Subset>,
    conj: Vec<u8>,
    perms: Option<Vec<u8>>,
}

impl Records {
    fn new(rank: usize, retain: bool) -> Records {
        Records {
            rank,
            keys: Vec::new(),
            inv_keys: Vec::new(),
            length: Vec::new(),
            left: Vec::new(),
            right: Vec::new(),
            support: Vec::new(),
            conj: Vec::new(),
            perms: retain.then(Vec::new),
        }
    }

    fn push(&mut self, roots: &RootSystem, perm: &[u8], length: u16) {
        let rank = self.rank;
        let mut inv = [0u8; 8];
        let mut supp = 0u16;
        for (beta, &img) in perm.iter().enumerate() {
            if (img as usize) < rank {
                inv[img as usize] = beta as u8;
            }
            if roots.is_positive(beta as u8) && !roots.is_positive(img) {
                supp |= roots.support(beta as u8);
            }
        }
        let r = (0..rank).filter(|&s| !roots.is_positive(perm[s])).fold(0u16, |m, s| m | 1 << s);
        let l = (0..rank).filter(|&s| !roots.is_positive(inv[s])).fold(0u16, |m, s| m | 1 << s);
        for &beta in &inv[..rank] {
            let pos = if roots.is_positive(beta) { beta } else { roots.negate(beta) };
            self.conj.push(if (pos as usize) < rank { pos } else { NOT_SIMPLE });
        }
        self.keys.push(pack(&perm[..rank]));
        self.inv_keys.push(pack(&inv[..rank]));
        self.length.push(length);
        self.left.push(Subset(l));
        self.right.push(Subset(r));
        self.support.push(Subset(supp));
        if let Some(p) = &mut self.perms {
            p.extend_from_slice(perm);
        }
    }
}

impl ElementTable {
    pub fn build(ty: CoxeterType) -> Result<ElementTable> {
        if ty.family() == Family::I {
            return Ok(Self::build_dihedral(ty));
        }
        let roots = RootSystem::new(ty)?;
        let rank = ty.rank();
        let mut records = Records::new(rank, ty.order() <= PERM_RETAIN_LIMIT);
        let identity: Vec<u8> = (0..roots.len() as u8).collect();
        records.push(&roots, &identity, 0);
        let mut layer: Vec<Vec<u8>> = vec![identity];
        let mut length = 0u16;
        while !layer.is_empty() {
            let mut next: Vec<Vec<u8>> = Vec::new();
            let mut seen: HashMap<u64, ()> = HashMap::new();
            for w in &layer {
                for s in 0..rank {
                    if !roots.is_positive(w[s]) {
                        continue;
                    }
                    let refl = roots.reflection(s);
                    let key = pack(&(0..rank).map(|t| w[refl[t] as usize]).collect::<Vec<_>>());
                    if seen.insert(key, ()).is_none() {
                        next.push(refl.iter().map(|&b| w[b as usize]).collect());
                    }
                }
            }
            next.sort_unstable();
            length += 1;
            for p in &next {
                records.push(&roots, p, length);
            }
            layer = next;
        }
        Self::finish_roots(ty, roots, records)
    }

    /// Rebuild from packed simple-root images in enumeration order, each with
    /// its length and a left descent. Permutations are recovered layer by
    /// layer through `w = s·(s w)`.
    pub(crate) fn from_keys(ty: CoxeterType, keys: &[u64], lengths: &[u16], left: &[Subset]) -> Result<ElementTable> {
        let roots = RootSystem::new(ty)?;
        let rank = ty.rank();
        let corrupt = || Error::Inconsistency(format!("{ty}: cached element list is not consistent"));
        if keys.len() as u64 != ty.order() || keys.first() != Some(&pack(&(0..rank as u8).collect::<Vec<_>>())) {
            return Err(corrupt());
        }
        let mut records = Records::new(rank, ty.order() <= PERM_RETAIN_LIMIT);
        let mut prev: HashMap<u64, Vec<u8>> = HashMap::new();
        let mut cur: HashMap<u64, Vec<u8>> = HashMap::new();
        let identity: Vec<u8> = (0..roots.len() as u8).collect();
        records.push(&roots, &identity, 0);
        cur.insert(keys[0], identity);
        for w in 1..keys.len() {
            if lengths[w] != lengths[w - 1] {
                if lengths[w] != lengths[w - 1] + 1 {
                    return Err(corrupt());
                }
                prev = std::mem::take(&mut cur);
            }
            let s = left[w].iter().next().ok_or_else(corrupt)?;
            let refl = roots.reflection(s);
            let images = unpack(keys[w], rank);
            let shorter = pack(&images.iter().map(|&b| refl[b as usize]).collect::<Vec<_>>());
            let base = prev.get(&shorter).ok_or_else(corrupt)?;
            let perm: Vec<u8> = base.iter().map(|&b| refl[b as usize]).collect();
            if perm[..rank] != images[..] {
                return Err(corrupt());
            }
            records.push(&roots, &perm, lengths[w]);
            cur.insert(keys[w], perm);
        }
        if records.left[..] != left[..] {
            return Err(corrupt());
        }
        Self::finish_roots(ty, roots, records)
    }

    fn finish_roots(ty: CoxeterType, roots: RootSystem, rec: Records) -> Result<ElementTable> {
        let index: HashMap<u64, ElemId> = rec.keys.iter().enumerate().map(|(i, &k)| (k, i as ElemId)).collect();
        if index.len() != rec.keys.len() || rec.keys.len() as u64 != ty.order() {
            return Err(Error::Inconsistency(format!(
                "{ty}: enumerated {} distinct elements, expected {}",
                index.len(),
                ty.order()
            )));
        }
        let model = Model::Roots { roots, keys: rec.keys, inv_keys: rec.inv_keys, index, perms: rec.perms };
        Ok(Self::assemble(ty, model, rec.length, rec.left, rec.right, rec.support, rec.conj))
    }

    fn build_dihedral(ty: CoxeterType) -> ElementTable {
        let group = Dihedral::new(ty.param());
        let m = group.bond();
        let elems = group.elements();
        let mut index = vec![0 as ElemId; 2 * m as usize];
        for (i, e) in elems.iter().enumerate() {
            index[(e.rot * 2 + e.refl as u32) as usize] = i as ElemId;
        }
        let gens = [group.generator(0), group.generator(1)];
        let mut length = Vec::new();
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut support = Vec::new();
        let mut conj = Vec::new();
        for &e in &elems {
            let len = group.length(e);
            length.push(len as u16);
            let mut l = 0u16;
            let mut r = 0u16;
            for (s, &g) in gens.iter().enumerate() {
                if group.length(group.mul(g, e)) < len {
                    l |= 1 << s;
                }
                if group.length(group.mul(e, g)) < len {
                    r |= 1 << s;
                }
                let c = group.mul(group.inverse(e), group.mul(g, e));
                conj.push(gens.iter().position(|&h| h == c).map_or(NOT_SIMPLE, |t| t as u8));
            }
            left.push(Subset(l));
            right.push(Subset(r));
            support.push(Subset(match len {
                0 => 0,
                1 => l,
                _ => 0b11,
            }));
        }
        let model = Model::Dihedral { group, elems, index };
        Self::assemble(ty, model, length, left, right, support, conj)
    }

    fn assemble(
        ty: CoxeterType,
        model: Model,
        length: Vec<u16>,
        left: Vec<Subset>,
        right: Vec<Subset>,
        support: Vec<Subset>,
        conj: Vec<u8>,
    ) -> ElementTable {
        let rank = ty.rank();
        let mut buckets = vec![Vec::new(); 1 << (2 * rank)];
        for w in 0..length.len() {
            buckets[(left[w].index() << rank) | right[w].index()].push(w as ElemId);
        }
        ElementTable { ty, rank, model, length, left, right, support, conj, buckets }
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.length.len()
    }

    pub fn is_empty(&self) -> bool {
        self.length.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> {
        0..self.len() as ElemId
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.length[w as usize] as usize
    }

    pub fn left_descents(&self, w: ElemId) -> Subset {
        self.left[w as usize]
    }

    pub fn right_descents(&self, w: ElemId) -> Subset {
        self.right[w as usize]
    }

    pub fn support(&self, w: ElemId) -> Subset {
        self.support[w as usize]
    }

    /// `t` with `w⁻¹ s w = t`, or [`NOT_SIMPLE`].
    pub fn conjugate_simple(&self, w: ElemId, s: usize) -> u8 {
        self.conj[w as usize * self.rank + s]
    }

    /// Image `w⁻¹ J w ∩ S` of the simple reflections in `j`.
    pub fn conjugate_subset(&self, w: ElemId, j: Subset) -> Subset {
        j.iter()
            .map(|s| self.conjugate_simple(w, s))
            .filter(|&t| t != NOT_SIMPLE)
            .fold(Subset::EMPTY, |acc, t| acc.union(Subset::singleton(t as usize)))
    }

    /// Elements with exactly the given left and right descent sets.
    pub fn bucket(&self, left: Subset, right: Subset) -> &[ElemId] {
        &self.buckets[(left.index() << self.rank) | right.index()]
    }

    /// Minimal-length double coset representatives `X_J⁻¹ ∩ X_K`.
    pub fn double_coset_reps(&self, j: Subset, k: Subset) -> Vec<ElemId> {
        self.ids()
            .filter(|&w| self.left[w as usize].intersection(j).is_empty() && self.right[w as usize].intersection(k).is_empty())
            .collect()
    }

    /// Minimal-length left coset representatives `X_J` (no right descent in `J`).
    pub fn coset_reps(&self, j: Subset) -> impl Iterator<Item = ElemId> + '_ {
        self.ids().filter(move |&w| self.right[w as usize].intersection(j).is_empty())
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn generator(&self, s: usize) -> ElemId {
        match &self.model {
            Model::Roots { index, roots, .. } => {
                let images: Vec<u8> = (0..self.rank).map(|t| roots.reflection(s)[t]).collect();
                index[&pack(&images)]
            }
            Model::Dihedral { group, index, .. } => {
                let g = group.generator(s);
                index[(g.rot * 2 + g.refl as u32) as usize]
            }
        }
    }

    /// Root permutation of `w`; `None` for the dihedral model.
    pub fn root_permutation(&self, w: ElemId) -> Option<Cow<'_, [u8]>> {
        match &self.model {
            Model::Roots { roots, keys, perms, .. } => {
                let n = roots.len();
                Some(match perms {
                    Some(p) => Cow::Borrowed(&p[w as usize * n..(w as usize + 1) * n]),
                    None => {
                        let images = unpack(keys[w as usize], self.rank);
                        Cow::Owned((0..n as u8).map(|b| roots.apply_linear(&images, b)).collect())
                    }
                })
            }
            Model::Dihedral { .. } => None,
        }
    }

    pub fn root_system(&self) -> Option<&RootSystem> {
        match &self.model {
            Model::Roots { roots, .. } => Some(roots),
            Model::Dihedral { .. } => None,
        }
    }

    pub(crate) fn keys(&self) -> Option<&[u64]> {
        match &self.model {
            Model::Roots { keys, .. } => Some(keys),
            Model::Dihedral { .. } => None,
        }
    }

    pub fn multiply(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.model {
            Model::Roots { roots, keys, index, perms, .. } => {
                let kb = unpack(keys[b as usize], self.rank);
                let img: Vec<u8> = match perms {
                    Some(p) => {
                        let n = roots.len();
                        let pa = &p[a as usize * n..(a as usize + 1) * n];
                        kb.iter().map(|&x| pa[x as usize]).collect()
                    }
                    None => {
                        let ka = unpack(keys[a as usize], self.rank);
                        kb.iter().map(|&x| roots.apply_linear(&ka, x)).collect()
                    }
                };
                index[&pack(&img)]
            }
            Model::Dihedral { group, elems, index } => {
                let c = group.mul(elems[a as usize], elems[b as usize]);
                index[(c.rot * 2 + c.refl as u32) as usize]
            }
        }
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        match &self.model {
            Model::Roots { inv_keys, index, .. } => index[&inv_keys[w as usize]],
            Model::Dihedral { group, elems, index } => {
                let c = group.inverse(elems[w as usize]);
                index[(c.rot * 2 + c.refl as u32) as usize]
            }
        }
    }

    /// Membership in the standard parabolic subgroup `W_J`.
    pub fn in_parabolic(&self, w: ElemId, j: Subset) -> bool {
        self.support(w).is_subset_of(j)
    }
}
