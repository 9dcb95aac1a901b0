//! Counting `k`-edge simple paths in undirected graphs.

mod count;
mod profile;

pub use count::{
    count_paths, count_paths_dp, count_paths_dp_within, count_paths_ie, count_paths_mitm,
    count_paths_mitm_lowmem, dp_peak_entries, lowmem_pair_count, PathAlgo,
};
pub use profile::{count_walks, path_profile_dp, path_profile_ie, path_profiles_dp, PathProfile};

use crate::error::{CountError, Result};
use crate::subset::{SubsetMask, Universe};

/// A simple undirected graph on vertices `0..n` with neighbourhoods stored as
/// masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    universe: Universe,
    adjacency: Vec<SubsetMask>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        let universe = Universe::new(n)?;
        Ok(Graph {
            universe,
            adjacency: vec![SubsetMask::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds edge `uv`; self-loops and repeated edges are errors.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(CountError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(CountError::SelfLoop(u));
        }
        if self.adjacency[u].contains(v) {
            return Err(CountError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adjacency[u] = self.adjacency[u].with(v);
        self.adjacency[v] = self.adjacency[v].with(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.universe.len()
    }

    #[inline]
    pub fn universe(&self) -> Universe {
        self.universe
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> SubsetMask {
        self.adjacency[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adjacency[u]
                .elements()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(CountError::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(CountError::SelfLoop(1)));
        g.add_edge(0, 2).unwrap();
        assert_eq!(g.add_edge(2, 0), Err(CountError::DuplicateEdge(0, 2)));
        assert_eq!(
            g.add_edge(0, 3),
            Err(CountError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn builders() {
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(Graph::path(5).unwrap().edge_count(), 4);
        assert_eq!(Graph::cycle(5).unwrap().edge_count(), 5);
        assert_eq!(Graph::cycle(2).unwrap().edge_count(), 1);
        let g = Graph::path(3).unwrap();
        assert!(g.has_edge(1, 0) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert!(h.has_edge(0, 2) && h.has_edge(0, 1) && !h.has_edge(1, 2));
    }
}
