use std::fmt;

use serde::Serialize;

use super::Quiver;

/// An undirected multigraph given by a symmetric multiplicity matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    edges: Vec<Vec<u32>>,
}

impl Multigraph {
    pub fn new(edges: Vec<Vec<u32>>) -> Multigraph {
        Multigraph { edges }
    }

    /// Underlying graph of a quiver: arrows in both directions are added up.
    pub fn underlying(q: &Quiver) -> Multigraph {
        let n = q.vertex_count();
        let edges = (0..n)
            .map(|i| (0..n).map(|j| if i == j { q.arrows(i, i) } else { q.arrows(i, j) + q.arrows(j, i) }).collect())
            .collect();
        Multigraph { edges }
    }

    /// Separated quiver: vertex `i` (sources) and vertex `n + i` (targets),
    /// one edge between `i` and `n + j` per arrow `i → j`.
    pub fn separated(q: &Quiver) -> Multigraph {
        let n = q.vertex_count();
        let mut edges = vec![vec![0u32; 2 * n]; 2 * n];
        for (i, j, c) in q.triples() {
            edges[i][n + j] += c;
            edges[n + j][i] += c;
        }
        Multigraph { edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.edges.len()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for w in 0..n {
                    if self.edges[v][w] > 0 && comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Classify a connected component.
    pub fn classify(&self, comp: &[usize]) -> GraphClass {
        let v = comp.len();
        let mut simple_edges = 0usize;
        let mut degree = vec![0usize; v];
        for (a, &x) in comp.iter().enumerate() {
            if self.edges[x][x] > 0 {
                return GraphClass::Other;
            }
            for (b, &y) in comp.iter().enumerate() {
                let m = self.edges[x][y];
                if m == 0 || a == b {
                    continue;
                }
                if m >= 2 {
                    return if v == 2 && m == 2 { GraphClass::Euclidean(Diagram::A(1)) } else { GraphClass::Other };
                }
                degree[a] += 1;
                if a < b {
                    simple_edges += 1;
                }
            }
        }
        let neighbours = |a: usize| -> Vec<usize> {
            (0..v).filter(|&b| b != a && self.edges[comp[a]][comp[b]] > 0).collect()
        };
        if simple_edges == v {
            return if v >= 3 && degree.iter().all(|&d| d == 2) {
                GraphClass::Euclidean(Diagram::A(v - 1))
            } else {
                GraphClass::Other
            };
        }
        if simple_edges + 1 != v {
            return GraphClass::Other;
        }
        let branch: Vec<usize> = (0..v).filter(|&a| degree[a] >= 3).collect();
        match branch.as_slice() {
            [] => GraphClass::Dynkin(Diagram::A(v)),
            [c] if degree[*c] == 4 => {
                if v == 5 {
                    GraphClass::Euclidean(Diagram::D(4))
                } else {
                    GraphClass::Other
                }
            }
            [c] if degree[*c] == 3 => {
                let mut arms: Vec<usize> = neighbours(*c)
                    .into_iter()
                    .map(|start| {
                        let (mut prev, mut cur, mut len) = (*c, start, 1);
                        loop {
                            let next: Vec<usize> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                            match next.as_slice() {
                                [w] => {
                                    prev = cur;
                                    cur = *w;
                                    len += 1;
                                }
                                _ => return len,
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                match (arms[0], arms[1], arms[2]) {
                    (1, 1, c) => GraphClass::Dynkin(Diagram::D(c + 3)),
                    (1, 2, 2) => GraphClass::Dynkin(Diagram::E(6)),
                    (1, 2, 3) => GraphClass::Dynkin(Diagram::E(7)),
                    (1, 2, 4) => GraphClass::Dynkin(Diagram::E(8)),
                    (2, 2, 2) => GraphClass::Euclidean(Diagram::E(6)),
                    (1, 3, 3) => GraphClass::Euclidean(Diagram::E(7)),
                    (1, 2, 5) => GraphClass::Euclidean(Diagram::E(8)),
                    _ => GraphClass::Other,
                }
            }
            [a, b] if degree[*a] == 3 && degree[*b] == 3 => {
                let leaves = |x: usize| neighbours(x).into_iter().filter(|&w| degree[w] == 1).count();
                if leaves(*a) == 2 && leaves(*b) == 2 {
                    GraphClass::Euclidean(Diagram::D(v - 1))
                } else {
                    GraphClass::Other
                }
            }
            _ => GraphClass::Other,
        }
    }

    pub fn classify_components(&self) -> Vec<GraphClass> {
        self.components().iter().map(|c| self.classify(c)).collect()
    }
}

/// Simply laced Dynkin diagram.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Diagram {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagram::A(n) => write!(f, "A{n}"),
            Diagram::D(n) => write!(f, "D{n}"),
            Diagram::E(n) => write!(f, "E{n}"),
        }
    }
}

/// Class of a connected graph.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GraphClass {
    Dynkin(Diagram),
    /// Extended (Euclidean) diagram; `Euclidean(A(1))` is the double edge.
    Euclidean(Diagram),
    Other,
}

impl fmt::Display for GraphClass {
    /// Names such as `A4`, `Dt4` (extended `D4`), `At1` or `Other`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Dynkin(d) => write!(f, "{d}"),
            GraphClass::Euclidean(Diagram::A(n)) => write!(f, "At{n}"),
            GraphClass::Euclidean(Diagram::D(n)) => write!(f, "Dt{n}"),
            GraphClass::Euclidean(Diagram::E(n)) => write!(f, "Et{n}"),
            GraphClass::Other => f.write_str("Other"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Finite => "Finite",
            RepType::Tame => "Tame",
            RepType::Wild => "Wild",
        })
    }
}

/// Finite if every component is Dynkin, tame if every component is Dynkin or
/// Euclidean with at least one Euclidean, wild otherwise.
pub fn verdict_from_classes(classes: &[GraphClass]) -> RepType {
    if classes.contains(&GraphClass::Other) {
        RepType::Wild
    } else if classes.iter().any(|c| matches!(c, GraphClass::Euclidean(_))) {
        RepType::Tame
    } else {
        RepType::Finite
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        let mut m = vec![vec![0u32; n]; n];
        for &(a, b) in edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        Multigraph::new(m)
    }

    fn class(n: usize, edges: &[(usize, usize)]) -> String {
        let g = graph(n, edges);
        let comps = g.components();
        assert_eq!(comps.len(), 1);
        g.classify(&comps[0]).to_string()
    }

    #[test]
    fn recognizes_diagrams() {
        assert_eq!(class(1, &[]), "A1");
        assert_eq!(class(4, &[(0, 1), (1, 2), (2, 3)]), "A4");
        assert_eq!(class(4, &[(0, 1), (0, 2), (0, 3)]), "D4");
        assert_eq!(class(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), "Dt4");
        assert_eq!(class(2, &[(0, 1), (0, 1)]), "At1");
        assert_eq!(class(2, &[(0, 1), (0, 1), (0, 1)]), "Other");
        assert_eq!(class(3, &[(0, 1), (1, 2), (2, 0)]), "At2");
        assert_eq!(class(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]), "E6");
        assert_eq!(class(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]), "Et6");
        assert_eq!(class(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]), "Dt5");
        assert_eq!(class(1, &[(0, 0)]), "Other");
        assert_eq!(class(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]), "E8");
        assert_eq!(class(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)]), "Et8");
    }

    #[test]
    fn loop_becomes_edge_in_separated_quiver() {
        let q = Quiver::from_triples(1, &[(0, 0, 1)]);
        let classes = Multigraph::separated(&q).classify_components();
        assert_eq!(classes, vec![GraphClass::Dynkin(Diagram::A(2))]);
        let q = Quiver::from_triples(1, &[(0, 0, 2)]);
        assert_eq!(verdict_from_classes(&Multigraph::separated(&q).classify_components()), RepType::Tame);
    }

    /// Edge list of the standard shape of `c`, with its vertex count.
    fn canonical(c: GraphClass) -> (usize, Vec<(usize, usize)>) {
        let path = |n: usize| (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match c {
            GraphClass::Dynkin(Diagram::A(n)) => (n, path(n)),
            GraphClass::Dynkin(Diagram::D(n)) => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1));
                (n, e)
            }
            GraphClass::Dynkin(Diagram::E(n)) => {
                let mut e = path(n - 1);
                e.push((2, n - 1));
                (n, e)
            }
            GraphClass::Euclidean(Diagram::A(1)) => (2, vec![(0, 1), (0, 1)]),
            GraphClass::Euclidean(Diagram::A(n)) => {
                let mut e = path(n + 1);
                e.push((n, 0));
                (n + 1, e)
            }
            GraphClass::Euclidean(Diagram::D(n)) => {
                let mut e = path(n - 1);
                e.push((1, n - 1));
                e.push((n - 3, n));
                (n + 1, e)
            }
            GraphClass::Euclidean(Diagram::E(6)) => (7, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]),
            GraphClass::Euclidean(Diagram::E(7)) => {
                let mut e = path(7);
                e.push((3, 7));
                (8, e)
            }
            GraphClass::Euclidean(Diagram::E(n)) => {
                assert_eq!(n, 8);
                let mut e = path(8);
                e.push((2, 8));
                (9, e)
            }
            GraphClass::Other => (1, vec![(0, 0)]),
        }
    }

    fn shapes() -> Vec<GraphClass> {
        use GraphClass::{Dynkin, Euclidean};
        let mut out: Vec<GraphClass> = (1..=12).map(|n| Dynkin(Diagram::A(n))).collect();
        out.extend((4..=12).map(|n| Dynkin(Diagram::D(n))));
        out.extend((6..=8).map(|n| Dynkin(Diagram::E(n))));
        out.extend((1..=11).map(|n| Euclidean(Diagram::A(n))));
        out.extend((4..=11).map(|n| Euclidean(Diagram::D(n))));
        out.extend((6..=8).map(|n| Euclidean(Diagram::E(n))));
        out
    }

    proptest::proptest! {
        #[test]
        fn canonical_shapes_round_trip(pick in 0usize..64, seed in proptest::prelude::any::<u64>()) {
            let all = shapes();
            let c = all[pick % all.len()];
            let (n, edges) = canonical(c);
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (state >> 33) as usize % (i + 1));
            }
            let relabelled: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
            proptest::prop_assert_eq!(class(n, &relabelled), c.to_string());
        }
    }
}
