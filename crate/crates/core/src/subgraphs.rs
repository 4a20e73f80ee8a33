//! Brute-force census of connected induced subgraphs of a small graph.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::GraphError;
use crate::graph::Graph;
use crate::linalg::spectral_radius_numeric;

/// Largest order accepted by [`enumerate_connected_induced`].
pub const ENUMERATION_LIMIT: usize = 16;

/// Default merge distance for numeric radius clustering.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-9;

/// Convergence tolerance used for each subgraph radius inside the census.
pub const RADIUS_TOL: f64 = 1e-13;

const CHUNK_BITS: usize = 10;

/// One canonical code per isomorphism class of connected induced subgraph,
/// sorted. The length is `b(G)`.
///
/// Subsets are visited in reflected Gray-code order split into contiguous
/// chunks that run in parallel; each chunk collects a sorted set and the sets
/// are merged.
pub fn enumerate_connected_induced(g: &Graph) -> Result<Vec<CanonicalCode>, GraphError> {
    let n = g.order();
    if n > ENUMERATION_LIMIT {
        return Err(GraphError::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let total: u64 = 1 << n;
    let chunk: u64 = 1 << CHUNK_BITS.min(n);
    let chunks = total.div_ceil(chunk);
    let merged = (0..chunks)
        .into_par_iter()
        .map(|c| scan_chunk(g, c * chunk, ((c + 1) * chunk).min(total)))
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(merged.into_iter().collect())
}

fn scan_chunk(g: &Graph, start: u64, end: u64) -> BTreeSet<CanonicalCode> {
    let mut codes = BTreeSet::new();
    let mut prev_mask = 0u64;
    let mut prev_connected = false;
    for i in start..end {
        let mask = i ^ (i >> 1);
        let connected = if i > start {
            let flipped = mask ^ prev_mask;
            let v = flipped.trailing_zeros() as usize;
            if mask & flipped != 0 && prev_connected {
                // adding v to a connected set keeps it connected iff v touches it
                g.neighbors(v) & prev_mask != 0
            } else if mask == flipped {
                true
            } else {
                g.is_connected_subset(mask)
            }
        } else {
            g.is_connected_subset(mask)
        };
        if connected {
            codes.insert(canonical_code(&g.induced(mask)));
        }
        prev_mask = mask;
        prev_connected = connected;
    }
    codes
}

/// Single-linkage clustering of sorted values: a new cluster starts whenever
/// the gap to the previous value exceeds `tol`. Returns each cluster's
/// smallest value.
pub fn cluster_sorted(values: &[f64], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for &v in values {
        if out.is_empty() || v - last > tol {
            out.push(v);
        }
        last = v;
    }
    out
}

/// Spectral radii of all connected induced subgraph classes, sorted.
pub fn subgraph_radii(g: &Graph) -> Result<Vec<f64>, GraphError> {
    let codes = enumerate_connected_induced(g)?;
    let mut radii = codes
        .par_iter()
        .map(|c| spectral_radius_numeric(&c.to_graph(), RADIUS_TOL))
        .collect::<Result<Vec<_>, _>>()?;
    radii.sort_by(f64::total_cmp);
    Ok(radii)
}

/// Numeric complementarity spectrum: subgraph radii merged within
/// `cluster_tol`. Its length estimates `c(G)`.
pub fn complementarity_spectrum_numeric(
    g: &Graph,
    cluster_tol: f64,
) -> Result<Vec<f64>, GraphError> {
    Ok(cluster_sorted(&subgraph_radii(g)?, cluster_tol))
}

/// `(b, c, r)` for a small graph from the brute-force engine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericCensus {
    pub b: usize,
    pub c: usize,
    pub r: f64,
}

pub fn b_c_r_numeric(g: &Graph, cluster_tol: f64) -> Result<NumericCensus, GraphError> {
    let radii = subgraph_radii(g)?;
    let b = radii.len();
    let c = cluster_sorted(&radii, cluster_tol).len();
    Ok(NumericCensus {
        b,
        c,
        r: b as f64 / c as f64,
    })
}
