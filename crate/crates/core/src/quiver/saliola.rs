//! Closed-form Ext-quiver of the type B descent algebra when the
//! characteristic does not divide the group order.

use super::Quiver;
use crate::error::{Error, Result};
use crate::field::Characteristic;
use crate::partition::Partition;

/// Arrows from `lambda` to `mu`.
pub fn arrow_count(lambda: &Partition, mu: &Partition) -> u32 {
    if mu.num_parts() != lambda.num_parts() + 2 {
        return 0;
    }
    let mut distinct: Vec<u32> = lambda.parts().to_vec();
    distinct.dedup();
    // A part x of lambda split as a + b + c with a > b > c.
    for &x in &distinct {
        let delta = lambda.remove_part(x).expect("part present");
        for c in 1..x {
            for b in c + 1..x {
                if x <= b + c {
                    break;
                }
                let a = x - b - c;
                if a > b && delta.join(&Partition::new(vec![a, b, c])) == *mu {
                    return 2;
                }
            }
        }
    }
    // A part x of lambda split as a + 2b with a ≠ b.
    for &x in &distinct {
        let delta = lambda.remove_part(x).expect("part present");
        for b in 1..=x / 2 {
            let a = x - 2 * b;
            if a >= 1 && a != b && delta.join(&Partition::new(vec![a, b, b])) == *mu {
                return 1;
            }
        }
    }
    // mu is lambda with two distinct new parts.
    if mu.size() > lambda.size() {
        let mut rest = mu.clone();
        for &x in lambda.parts() {
            match rest.remove_part(x) {
                Some(r) => rest = r,
                None => return 0,
            }
        }
        if let [a, b] = rest.parts() {
            if a > b {
                return 1;
            }
        }
    }
    0
}

/// Quiver on the partitions `vertices`, labelled by their compact names.
pub fn quiver(vertices: &[Partition]) -> Quiver {
    let labels = vertices.iter().map(|p| p.to_string()).collect();
    let arrows = vertices
        .iter()
        .map(|l| vertices.iter().map(|m| arrow_count(l, m)).collect())
        .collect();
    Quiver::new(labels, arrows)
}

/// The quiver for `B_n` on all partitions of size at most `n`.
pub fn type_b_quiver(n: u32) -> Quiver {
    quiver(&Partition::up_to(n))
}

/// The formula quiver for `B_n` over a field of characteristic `p`, which
/// requires `p` not to divide `|B_n| = 2^n n!`.
pub fn oracle_b(n: u32, p: Characteristic) -> Result<Quiver> {
    let order_divisible = p.value() != 0 && (p.value() == 2 || p.value() <= u64::from(n));
    if order_divisible {
        return Err(Error::HypothesisViolated(format!("p = {p} divides the order of B{n}")));
    }
    Ok(type_b_quiver(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn b4_arrows() {
        let q = type_b_quiver(4);
        let arrows: Vec<(String, String, u32)> = q
            .triples()
            .into_iter()
            .map(|(a, b, c)| (q.labels()[a].clone(), q.labels()[b].clone(), c))
            .collect();
        let expected: Vec<(String, String, u32)> = [("4", "21^2"), ("1", "21^2"), ("∅", "31"), ("∅", "21")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string(), 1))
            .collect();
        assert_eq!(arrows.len(), 4);
        for e in expected {
            assert!(arrows.contains(&e), "{e:?}");
        }
    }

    #[test]
    fn double_arrow_from_split_into_three() {
        assert_eq!(arrow_count(&p("6"), &p("321")), 2);
        assert_eq!(arrow_count(&p("5"), &p("311")), 1);
        assert_eq!(arrow_count(&p("4"), &p("22")), 0);
    }
}
