//! Inputs shared by the criterion benches in `benches/`.

use specred_core::garlic::{build, GarlicParams, SubgraphId};
use specred_core::{Graph, RhoSquared};

pub fn garlic_graph(p: u64, q: u64) -> Graph {
    build(GarlicParams::new(p, q).expect("valid parameters")).expect("order fits")
}

/// Squared radii of every garlic `G_{s,t}` with `s, t ≤ n`, in row order.
pub fn garlic_radii(n: u64) -> Vec<RhoSquared> {
    (0..=n)
        .flat_map(|s| (1..=n).map(move |t| SubgraphId::garlic(s, t)))
        .map(|id| id.rho2().expect("small parameters stay in range"))
        .collect()
}
