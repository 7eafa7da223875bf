use serde::{Deserialize, Serialize};

/// A finite quiver with arrow multiplicities: `arrows[i][j]` arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: Vec<Vec<u32>>,
}

impl Quiver {
    pub fn new(labels: Vec<String>, arrows: Vec<Vec<u32>>) -> Quiver {
        assert!(arrows.len() == labels.len() && arrows.iter().all(|r| r.len() == labels.len()));
        Quiver { labels, arrows }
    }

    /// Unlabelled quiver on `n` vertices (labelled `1..=n`) from `(from, to, count)` triples, 0-based.
    pub fn from_triples(n: usize, triples: &[(usize, usize, u32)]) -> Quiver {
        let mut arrows = vec![vec![0u32; n]; n];
        for &(a, b, c) in triples {
            arrows[a][b] += c;
        }
        Quiver { labels: (1..=n).map(|i| i.to_string()).collect(), arrows }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arrows(&self, from: usize, to: usize) -> u32 {
        self.arrows[from][to]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> u64 {
        self.arrows.iter().flatten().map(|&c| c as u64).sum()
    }

    pub fn loop_count(&self) -> u64 {
        (0..self.vertex_count()).map(|i| self.arrows[i][i] as u64).sum()
    }

    /// Nonzero `(from, to, count)` triples, 0-based, in row-major order.
    pub fn triples(&self) -> Vec<(usize, usize, u32)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.arrows[i][j] > 0)
            .map(|(i, j)| (i, j, self.arrows[i][j]))
            .collect()
    }

    /// Reverse every arrow.
    pub fn opposite(&self) -> Quiver {
        let n = self.vertex_count();
        let arrows = (0..n).map(|i| (0..n).map(|j| self.arrows[j][i]).collect()).collect();
        Quiver { labels: self.labels.clone(), arrows }
    }

    /// Full subquiver on the given vertices, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Quiver {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let arrows = vertices
            .iter()
            .map(|&a| vertices.iter().map(|&b| self.arrows[a][b]).collect())
            .collect();
        Quiver { labels, arrows }
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}
