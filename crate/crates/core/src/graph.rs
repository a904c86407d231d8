//! Undirected connected simple graphs with precomputed distances.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{PebbleError, Result};

/// A connected simple undirected graph.
///
/// Vertices are identified by index `0..vertex_count()`. Each vertex also
/// carries a display name used at the I/O boundary. All-pairs distances are
/// computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    dist: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph with vertices named `v1..vN`.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let names = (1..=vertex_count).map(|i| format!("v{i}")).collect();
        Self::with_names(names, edges)
    }

    pub fn with_names(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(PebbleError::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            for index in [a, b] {
                if index >= n {
                    return Err(PebbleError::VertexOutOfRange { index, vertex_count: n });
                }
            }
            if a == b {
                return Err(PebbleError::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(PebbleError::ParallelEdge(key.0, key.1));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let dist: Vec<Vec<u32>> = (0..n).map(|s| bfs(&adjacency, s)).collect();
        if dist[0].contains(&u32::MAX) {
            return Err(PebbleError::Disconnected);
        }
        Ok(Self {
            names,
            adjacency,
            edges: seen.into_iter().collect(),
            dist,
        })
    }

    pub fn single_vertex() -> Self {
        Self::new(1, &[]).expect("single vertex graph is valid")
    }

    /// Path `v1 - v2 - ... - vn`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Self::new(n, &edges)
    }

    /// Star with centre `v1` and `leaves` pendant vertices.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::new(leaves + 1, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n > 2 {
            edges.push((n - 1, 0));
        }
        Self::new(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(lo, hi)` index pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `v` in ascending index order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn distance(&self, a: usize, b: usize) -> u32 {
        self.dist[a][b]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.dist[v].iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.vertex_count()).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(PebbleError::VertexOutOfRange { index: v, vertex_count: self.vertex_count() })
        }
    }

    /// Induced subgraph on `keep` (ascending original indices). Fails if the
    /// result is disconnected or empty.
    pub fn induced(&self, keep: &[usize]) -> Result<Self> {
        let mut map = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| map[a] != usize::MAX && map[b] != usize::MAX)
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        Self::with_names(names, &edges)
    }

    /// Graph with vertex `v` deleted.
    pub fn without_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if self.vertex_count() == 1 {
            return Err(PebbleError::SingletonGraph);
        }
        let keep: Vec<_> = (0..self.vertex_count()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }
}

fn bfs(adjacency: &[Vec<usize>], source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adjacency.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in &adjacency[u] {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All connected labeled graphs on `n` vertices, in increasing edge-mask order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    assert!(pairs.len() < 32, "edge-subset enumeration limited to small n");
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).ok()
        })
        .collect()
}
