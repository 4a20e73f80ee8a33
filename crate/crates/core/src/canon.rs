//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree starts from the degree partition, refines it to an
//! equitable ordered partition, and branches on the first non-singleton cell.
//! Every construction step depends only on the ordered partition, so the set
//! of leaf codes is invariant under relabeling and its minimum is a canonical
//! form. Branches on twin vertices (same neighbors apart from each other) are
//! skipped: swapping twins is an automorphism that fixes the current partition,
//! so their subtrees produce identical leaf codes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{bit, iter_bits, Graph};

/// Lexicographically minimal adjacency matrix over the search-tree leaves.
///
/// Layout: the order `n` as one byte, then each permuted adjacency row as
/// `⌈n/8⌉` big-endian bytes. Two graphs are isomorphic iff their codes match.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// Rebuilds the canonically labeled graph the code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let width = row_width(n);
        let adj = (0..n)
            .map(|i| {
                let row = &self.0[1 + i * width..1 + (i + 1) * width];
                let word = row.iter().fold(0u64, |acc, &b| (acc << 8) | u64::from(b));
                // rows are stored with the first vertex in the highest bit
                reverse_low(word, n)
            })
            .collect();
        Graph::from_adjacency(adj).expect("canonical code encodes a simple graph")
    }

    fn from_rows(n: usize, rows: &[u64]) -> Self {
        let width = row_width(n);
        let mut bytes = Vec::with_capacity(1 + n * width);
        bytes.push(n as u8);
        for &row in rows {
            let be = row.to_be_bytes();
            bytes.extend_from_slice(&be[8 - width..]);
        }
        CanonicalCode(bytes)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let hex: String = self.0.iter().map(|b| format!("{b:02x}")).collect();
        serializer.serialize_str(&hex)
    }
}

fn row_width(n: usize) -> usize {
    n.div_ceil(8).max(1)
}

/// Mirrors the lowest `n` bits so vertex 0 lands in bit `n − 1`.
fn reverse_low(word: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        word.reverse_bits() >> (64 - n)
    }
}

/// Canonical code of `g`.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.order();
    if n == 0 {
        return CanonicalCode::from_rows(0, &[]);
    }
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut last = usize::MAX;
    for (d, v) in by_degree {
        if d != last {
            cells.push(Vec::new());
            last = d;
        }
        cells.last_mut().unwrap().push(v);
    }
    let mut best: Option<Vec<u64>> = None;
    search(g, cells, &mut best);
    CanonicalCode::from_rows(n, &best.expect("search visits at least one leaf"))
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let rows = leaf_rows(g, &order);
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&w| g.are_twins(v, w)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(cell.iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[target + 1..]);
        search(g, child, best);
    }
}

/// Splits cells by neighbor counts into each splitter cell until stable.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | bit(v));
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors(v) & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let before = next.len();
                let mut last = u32::MAX;
                for (k, v) in keyed {
                    if k != last {
                        next.push(Vec::new());
                        last = k;
                    }
                    next.last_mut().unwrap().push(v);
                }
                changed |= next.len() - before > 1;
            }
            cells = next;
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn leaf_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = [0usize; 64];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| iter_bits(g.neighbors(v)).fold(0u64, |acc, w| acc | bit(n - 1 - pos[w])))
        .collect()
}
