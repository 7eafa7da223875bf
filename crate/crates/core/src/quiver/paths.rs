use super::Quiver;

/// Number of paths in a quiver, trivial paths included.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PathCount {
    Finite(u128),
    /// The quiver has an oriented cycle (loops included).
    Infinite,
}

/// Vertices in an order where every arrow goes forward, if one exists.
pub fn topological_order(q: &Quiver) -> Option<Vec<usize>> {
    let n = q.vertex_count();
    let mut indegree: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| q.arrows(i, j) > 0).count()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&j| indegree[j] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for w in 0..n {
            if q.arrows(v, w) > 0 && v != w {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub fn path_count(q: &Quiver) -> PathCount {
    let Some(order) = topological_order(q) else {
        return PathCount::Infinite;
    };
    let n = q.vertex_count();
    let mut from = vec![0u128; n];
    for &v in order.iter().rev() {
        from[v] = 1 + (0..n).map(|w| q.arrows(v, w) as u128 * from[w]).sum::<u128>();
    }
    PathCount::Finite(from.iter().sum())
}

/// Paths of each length: `result[k]` counts paths with `k` arrows. `None` for cyclic quivers.
pub fn paths_by_length(q: &Quiver) -> Option<Vec<u128>> {
    topological_order(q)?;
    let n = q.vertex_count();
    let mut cur = vec![1u128; n];
    let mut out = Vec::new();
    while cur.iter().any(|&c| c > 0) {
        out.push(cur.iter().sum());
        cur = (0..n).map(|v| (0..n).map(|w| q.arrows(v, w) as u128 * cur[w]).sum()).collect();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let q = Quiver::from_triples(3, &[(0, 1, 1), (1, 2, 2)]);
        assert_eq!(path_count(&q), PathCount::Finite(3 + 3 + 2));
        assert_eq!(paths_by_length(&q), Some(vec![3, 3, 2]));
        let cyclic = Quiver::from_triples(2, &[(0, 1, 1), (1, 0, 1)]);
        assert_eq!(path_count(&cyclic), PathCount::Infinite);
        assert_eq!(path_count(&Quiver::from_triples(1, &[(0, 0, 1)])), PathCount::Infinite);
    }

    fn explicit_paths(q: &Quiver) -> u128 {
        fn starting_at(q: &Quiver, v: usize) -> u128 {
            let n = q.vertex_count();
            1 + (0..n)
                .filter(|&w| q.arrows(v, w) > 0)
                .map(|w| u128::from(q.arrows(v, w)) * starting_at(q, w))
                .sum::<u128>()
        }
        (0..q.vertex_count()).map(|v| starting_at(q, v)).sum()
    }

    proptest::proptest! {
        #[test]
        fn matches_explicit_enumeration(
            n in 1usize..7,
            raw in proptest::collection::vec((0usize..7, 0usize..7, 1u32..3), 0..10),
        ) {
            // Arrows only go from smaller to larger index, so the quiver is acyclic.
            let triples: Vec<_> = raw
                .into_iter()
                .map(|(a, b, c)| (a % n, b % n, c))
                .filter(|&(a, b, _)| a < b)
                .collect();
            let q = Quiver::from_triples(n, &triples);
            proptest::prop_assert_eq!(path_count(&q), PathCount::Finite(explicit_paths(&q)));
            let layers = paths_by_length(&q).unwrap();
            proptest::prop_assert_eq!(layers.iter().sum::<u128>(), explicit_paths(&q));
        }
    }
}
