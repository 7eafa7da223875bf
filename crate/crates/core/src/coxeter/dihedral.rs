/// Abstract model of the dihedral group of order `2m` generated by `s0`, `s1`
/// with `(s0 s1)^m = 1`. An element is `ρ^rot · s0^refl` with `ρ = s0 s1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElem {
    pub rot: u32,
    pub refl: bool,
}

#[derive(Copy, Clone, Debug)]
pub struct Dihedral {
    m: u32,
}

impl Dihedral {
    pub fn new(m: usize) -> Dihedral {
        Dihedral { m: m as u32 }
    }

    pub fn bond(&self) -> u32 {
        self.m
    }

    pub fn identity(&self) -> DihedralElem {
        DihedralElem { rot: 0, refl: false }
    }

    pub fn generator(&self, s: usize) -> DihedralElem {
        match s {
            0 => DihedralElem { rot: 0, refl: true },
            _ => DihedralElem { rot: self.m - 1, refl: true },
        }
    }

    pub fn mul(&self, x: DihedralElem, y: DihedralElem) -> DihedralElem {
        let r = if x.refl { self.m - y.rot } else { y.rot };
        DihedralElem {
            rot: (x.rot + r) % self.m,
            refl: x.refl ^ y.refl,
        }
    }

    pub fn inverse(&self, x: DihedralElem) -> DihedralElem {
        if x.refl {
            x
        } else {
            DihedralElem { rot: (self.m - x.rot) % self.m, refl: false }
        }
    }

    pub fn length(&self, x: DihedralElem) -> u32 {
        let (k, m) = (x.rot, self.m);
        if x.refl {
            (2 * k + 1).min(2 * (m - k) - 1)
        } else {
            (2 * k).min(2 * (m - k))
        }
    }

    /// Alternating word of length `len` starting with `first`.
    pub fn alternating(&self, first: usize, len: usize) -> DihedralElem {
        (0..len).fold(self.identity(), |acc, k| {
            self.mul(acc, self.generator((first + k) % 2))
        })
    }

    /// Elements sorted by length; among equal lengths the word starting with `s0` comes first.
    pub fn elements(&self) -> Vec<DihedralElem> {
        let m = self.m as usize;
        let mut out = vec![self.identity()];
        for len in 1..m {
            out.push(self.alternating(0, len));
            out.push(self.alternating(1, len));
        }
        out.push(self.alternating(0, m));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_are_distinct_and_lengths_match() {
        for m in 3..13 {
            let d = Dihedral::new(m);
            let els = d.elements();
            assert_eq!(els.len(), 2 * m);
            let set: std::collections::HashSet<_> = els.iter().collect();
            assert_eq!(set.len(), 2 * m);
            assert_eq!(d.alternating(0, m), d.alternating(1, m));
            for (i, &e) in els.iter().enumerate() {
                let expected = if i == 0 { 0 } else if i == 2 * m - 1 { m } else { i.div_ceil(2) };
                assert_eq!(d.length(e) as usize, expected);
                assert_eq!(d.mul(e, d.inverse(e)), d.identity());
            }
        }
    }
}
