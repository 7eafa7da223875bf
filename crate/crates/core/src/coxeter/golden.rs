use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// An element `a + b·φ` of the ring `Z[φ]`, where `φ² = φ + 1`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Golden {
    pub a: i64,
    pub b: i64,
}

impl Golden {
    pub const ZERO: Golden = Golden { a: 0, b: 0 };
    pub const ONE: Golden = Golden { a: 1, b: 0 };
    pub const PHI: Golden = Golden { a: 0, b: 1 };

    pub const fn int(a: i64) -> Golden {
        Golden { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Exact sign. `a + bφ = (2a + b + b√5) / 2`, so compare `(2a+b)²` against `5b²`.
    pub fn signum(self) -> Ordering {
        let x = 2 * self.a + self.b;
        let y = self.b;
        match (x.cmp(&0), y.cmp(&0)) {
            (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
            (Ordering::Less | Ordering::Equal, Ordering::Less | Ordering::Equal) => Ordering::Less,
            (Ordering::Greater | Ordering::Equal, Ordering::Greater | Ordering::Equal) => {
                Ordering::Greater
            }
            (Ordering::Greater, Ordering::Less) => (x * x).cmp(&(5 * y * y)),
            (Ordering::Less, Ordering::Greater) => (5 * y * y).cmp(&(x * x)),
        }
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, o: Golden) -> Golden {
        Golden { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, o: Golden) -> Golden {
        Golden { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden { a: -self.a, b: -self.b }
    }
}

impl Mul for Golden {
    type Output = Golden;
    fn mul(self, o: Golden) -> Golden {
        let bd = self.b * o.b;
        Golden {
            a: self.a * o.a + bd,
            b: self.a * o.b + self.b * o.a + bd,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn approx(g: Golden) -> f64 {
        g.a as f64 + g.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }

    #[test]
    fn phi_squared() {
        assert_eq!(Golden::PHI * Golden::PHI, Golden::PHI + Golden::ONE);
    }

    proptest! {
        #[test]
        fn sign_agrees_with_floating_point(a in -1000i64..1000, b in -1000i64..1000) {
            let g = Golden { a, b };
            let f = approx(g);
            let expected = if g.is_zero() { Ordering::Equal } else if f > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(g.signum(), expected);
        }

        #[test]
        fn multiplication_matches_reals(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = Golden { a, b };
            let y = Golden { a: c, b: d };
            prop_assert!((approx(x * y) - approx(x) * approx(y)).abs() < 1e-6);
        }
    }
}
