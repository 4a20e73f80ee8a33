//! Small undirected simple graphs stored as one 64-bit neighbor mask per vertex.

use std::fmt;

use crate::error::GraphError;

/// Maximum order supported by the bitset representation.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Undirected simple graph on vertices `0..n`, `n ≤ 64`.
///
/// `adj[v]` is the neighbor set of `v`. The matrix is symmetric with an empty
/// diagonal; every constructor maintains this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge {
                n,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbor masks, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut g = Graph::empty(n)?;
        let mask = low_bits(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            let mut rest = row;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Star `S_n`: one center joined to `n − 1` leaves.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] & !low_bits(u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Mask of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// True when the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.is_connected_subset(self.vertex_mask())
    }

    /// Connectivity of the subgraph induced by `mask` (false for the empty set).
    pub fn is_connected_subset(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask & mask.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & mask & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == mask
    }

    /// Subgraph induced by `mask`, relabeled in increasing vertex order.
    pub fn induced(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let verts: Vec<usize> = iter_bits(mask).collect();
        let mut index = [0usize; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| iter_bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | bit(index[w])))
            .collect();
        Graph {
            n: verts.len(),
            adj,
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal the order"
        );
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            adj[perm[u]] = iter_bits(self.adj[u]).fold(0u64, |acc, w| acc | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// `u` and `v` have the same neighbors apart from each other.
    #[inline]
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        self.adj[u] & !bit(v) == self.adj[v] & !bit(u)
    }
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
