//! Isomorphism of quivers with arrow multiplicities, by backtracking over
//! vertex signatures.

use super::Quiver;

type Signature = (u32, Vec<u32>, Vec<u32>);

fn signature(q: &Quiver, v: usize) -> Signature {
    let n = q.vertex_count();
    let mut out: Vec<u32> = (0..n).filter(|&w| w != v).map(|w| q.arrows(v, w)).filter(|&c| c > 0).collect();
    let mut inc: Vec<u32> = (0..n).filter(|&w| w != v).map(|w| q.arrows(w, v)).filter(|&c| c > 0).collect();
    out.sort_unstable();
    inc.sort_unstable();
    (q.arrows(v, v), out, inc)
}

/// A bijection `map[a] = b` from the vertices of `a` onto those of `b`
/// preserving all arrow multiplicities, if one exists.
pub fn find_isomorphism(a: &Quiver, b: &Quiver) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.arrow_count() != b.arrow_count() {
        return None;
    }
    let sa: Vec<Signature> = (0..n).map(|v| signature(a, v)).collect();
    let sb: Vec<Signature> = (0..n).map(|v| signature(b, v)).collect();
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    // Visit vertices so that each one after the first in a component touches an earlier one.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(sa[v].1.len() + sa[v].2.len()));
    for s in starts {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in 0..n {
                if !placed[w] && (a.arrows(v, w) > 0 || a.arrows(w, v) > 0) {
                    placed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &sa, &sb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Quiver,
    b: &Quiver,
    sa: &[Signature],
    sb: &[Signature],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mut tried_isolated = false;
    for cand in 0..b.vertex_count() {
        if used[cand] || sa[v] != sb[cand] {
            continue;
        }
        // Isolated vertices with equal signatures are interchangeable.
        let isolated = sa[v].1.is_empty() && sa[v].2.is_empty();
        if isolated && tried_isolated {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            a.arrows(u, v) == b.arrows(map[u], cand) && a.arrows(v, u) == b.arrows(cand, map[u])
        });
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(a, b, sa, sb, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[v] = usize::MAX;
        tried_isolated |= isolated;
    }
    false
}

/// Isomorphic to `b` or to the opposite of `b`.
pub fn isomorphic_up_to_orientation(a: &Quiver, b: &Quiver) -> bool {
    find_isomorphism(a, b).is_some() || find_isomorphism(a, &b.opposite()).is_some()
}

/// An injective vertex map embedding `small` as a full subquiver of `large`.
pub fn find_full_subquiver(small: &Quiver, large: &Quiver) -> Option<Vec<usize>> {
    let n = small.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; large.vertex_count()];
    fn go(small: &Quiver, large: &Quiver, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == small.vertex_count() {
            return true;
        }
        for cand in 0..large.vertex_count() {
            if used[cand] || small.arrows(v, v) != large.arrows(cand, cand) {
                continue;
            }
            let ok = (0..v).all(|u| {
                small.arrows(u, v) == large.arrows(map[u], cand) && small.arrows(v, u) == large.arrows(cand, map[u])
            });
            if !ok {
                continue;
            }
            map[v] = cand;
            used[cand] = true;
            if go(small, large, v + 1, map, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
    go(small, large, 0, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn permuted(q: &Quiver, perm: &[usize]) -> Quiver {
        let triples: Vec<_> = q.triples().into_iter().map(|(a, b, c)| (perm[a], perm[b], c)).collect();
        Quiver::from_triples(q.vertex_count(), &triples)
    }

    #[test]
    fn detects_non_isomorphic() {
        let a = Quiver::from_triples(3, &[(0, 1, 1), (1, 2, 1)]);
        let b = Quiver::from_triples(3, &[(0, 1, 1), (2, 1, 1)]);
        assert!(find_isomorphism(&a, &b).is_none());
        assert!(!isomorphic_up_to_orientation(&a, &b));
        let c = Quiver::from_triples(3, &[(2, 1, 1), (1, 0, 1)]);
        assert!(find_isomorphism(&a, &c).is_some());
    }

    proptest! {
        #[test]
        fn relabelled_quivers_are_isomorphic(
            n in 1usize..9,
            raw in prop::collection::vec((0usize..9, 0usize..9, 1u32..3), 0..12),
            seed in any::<u64>(),
        ) {
            let triples: Vec<_> = raw.into_iter().map(|(a, b, c)| (a % n, b % n, c)).collect();
            let q = Quiver::from_triples(n, &triples);
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let r = permuted(&q, &perm);
            let map = find_isomorphism(&q, &r).expect("isomorphic");
            for (a, b, c) in q.triples() {
                prop_assert_eq!(r.arrows(map[a], map[b]), c);
            }
        }
    }
}
