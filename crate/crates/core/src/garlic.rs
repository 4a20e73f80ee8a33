//! Garlic graphs `G_{p,q}`: a center with `p` pendant leaves, joined to a far
//! vertex by `q` internally disjoint paths of length two.
//!
//! Their connected induced subgraphs are again garlic graphs or stars, so
//! every quantity of interest has a closed form in `(p, q)`.

use std::fmt;

use serde::Serialize;

use crate::error::GarlicError;
use crate::graph::{Graph, MAX_ORDER};
use crate::linalg::spectral_radius_lists;
use crate::pythagorean::PythTriplet;
use crate::surd::{exact_sqrt, RhoSquared};

/// Parameters of `G_{p,q}`; `q = 0` denotes the star `S_{p+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GarlicParams {
    p: u64,
    q: u64,
}

impl GarlicParams {
    pub fn new(p: u64, q: u64) -> Result<Self, GarlicError> {
        if p == 0 && q == 0 {
            return Err(GarlicError::EmptyParams { p, q });
        }
        Ok(GarlicParams { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of vertices: `p + q + 2`, or `p + 1` for a star.
    pub fn order(&self) -> u64 {
        if self.q == 0 {
            self.p + 1
        } else {
            self.p + self.q + 2
        }
    }
}

/// Identity of a member of a garlic subgraph catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SubgraphId {
    /// `G_{s,t}` with `t ≥ 1`.
    Garlic { s: u64, t: u64 },
    /// `S_r` on `r ≥ 1` vertices.
    Star { r: u64 },
}

impl SubgraphId {
    pub fn garlic(s: u64, t: u64) -> Self {
        SubgraphId::Garlic { s, t }
    }

    pub fn star(r: u64) -> Self {
        SubgraphId::Star { r }
    }

    pub fn order(&self) -> u64 {
        match *self {
            SubgraphId::Garlic { s, t } => s + t + 2,
            SubgraphId::Star { r } => r,
        }
    }

    /// Exact squared spectral radius.
    pub fn rho2(&self) -> Result<RhoSquared, GarlicError> {
        match *self {
            SubgraphId::Garlic { s, t } => rho2(GarlicParams::new(s, t)?),
            SubgraphId::Star { r } => Ok(RhoSquared::from_integer(r.saturating_sub(1))),
        }
    }

    /// The graph this identity names.
    pub fn to_graph(&self) -> Result<Graph, GarlicError> {
        match *self {
            SubgraphId::Garlic { s, t } => build(GarlicParams::new(s, t)?),
            SubgraphId::Star { r } => {
                check_order(r)?;
                Ok(Graph::star(r as usize)?)
            }
        }
    }

    /// `G_{0,1}` and `S_3` are both the path on three vertices.
    pub fn is_isomorphic_to(&self, other: &SubgraphId) -> bool {
        let p3 = |x: &SubgraphId| {
            matches!(
                x,
                SubgraphId::Garlic { s: 0, t: 1 } | SubgraphId::Star { r: 3 }
            )
        };
        self == other || (p3(self) && p3(other))
    }
}

impl fmt::Display for SubgraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgraphId::Garlic { s, t } => write!(f, "G_{{{s},{t}}}"),
            SubgraphId::Star { r } => write!(f, "S_{r}"),
        }
    }
}

/// Why two catalog members share (or do not share) a spectral radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EqualityRule {
    /// Both garlic with `p, q ≥ 1`; both `√(p² + 4q²)` integral with equal
    /// `p + 2q + r`.
    PerimeterMatch,
    /// Both garlic with `p₁ = 2q₂` and `p₂ = 2q₁`.
    LegSwap,
    /// `S_n` and `G_{p,q}`, `p ≥ 1`, with `r = √(p² + 4q²)` integral and
    /// `n = (p + 2q + r)/2 + 1`.
    StarGarlicPT,
    /// `S_{2q+1}` and `G_{0,q}`.
    StarBipartite,
    /// `G_{0,q₁}` and `G_{p₂,q₂}`, `p₂ ≥ 1`, with `r₂` integral and
    /// `4q₁ = p₂ + 2q₂ + r₂`.
    BipartiteGarlicPT,
    NotEqual,
    IsomorphicInputs,
}

impl EqualityRule {
    pub fn name(&self) -> &'static str {
        match self {
            EqualityRule::PerimeterMatch => "PerimeterMatch",
            EqualityRule::LegSwap => "LegSwap",
            EqualityRule::StarGarlicPT => "StarGarlicPT",
            EqualityRule::StarBipartite => "StarBipartite",
            EqualityRule::BipartiteGarlicPT => "BipartiteGarlicPT",
            EqualityRule::NotEqual => "NotEqual",
            EqualityRule::IsomorphicInputs => "IsomorphicInputs",
        }
    }

    pub fn is_equal(&self) -> bool {
        *self != EqualityRule::NotEqual
    }
}

impl fmt::Display for EqualityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_order(order: u64) -> Result<(), GarlicError> {
    if order > MAX_ORDER as u64 {
        return Err(GarlicError::Limit(format!(
            "order {order} exceeds the materialization limit {MAX_ORDER}"
        )));
    }
    Ok(())
}

/// Materializes `G_{p,q}`.
///
/// Labels: `0` center, `1` far vertex, `2..2+q` path midpoints, then the `p`
/// pendants. For `q = 0` the result is the star `S_{p+1}` centered at `0`.
pub fn build(params: GarlicParams) -> Result<Graph, GarlicError> {
    check_order(params.order())?;
    let (p, q) = (params.p as usize, params.q as usize);
    if q == 0 {
        return Ok(Graph::star(p + 1)?);
    }
    let mut edges = Vec::with_capacity(p + 2 * q);
    for m in 2..2 + q {
        edges.push((0, m));
        edges.push((m, 1));
    }
    for leaf in 2 + q..2 + q + p {
        edges.push((0, leaf));
    }
    Ok(Graph::from_edges(p + q + 2, &edges)?)
}

/// Largest vertex count accepted by [`rho_numeric`].
pub const NUMERIC_ORDER_LIMIT: u64 = 1 << 20;

/// Power-iteration radius of `G_{p,q}` from neighbor lists, so orders beyond
/// the bitset limit of [`build`] are fine. Labels as in [`build`].
pub fn rho_numeric(params: GarlicParams, tol: f64) -> Result<f64, GarlicError> {
    if params.order() > NUMERIC_ORDER_LIMIT {
        return Err(GarlicError::Limit(format!(
            "order {} exceeds the numeric limit {NUMERIC_ORDER_LIMIT}",
            params.order()
        )));
    }
    let (p, q) = (params.p as usize, params.q as usize);
    let lists: Vec<Vec<usize>> = if q == 0 {
        let mut lists = vec![(1..=p).collect::<Vec<_>>()];
        lists.extend((0..p).map(|_| vec![0]));
        lists
    } else {
        let mut lists = vec![Vec::new(); p + q + 2];
        for m in 2..2 + q {
            lists[0].push(m);
            lists[1].push(m);
            lists[m] = vec![0, 1];
        }
        for leaf in 2 + q..2 + q + p {
            lists[0].push(leaf);
            lists[leaf].push(0);
        }
        lists
    };
    Ok(spectral_radius_lists(&lists, tol)?)
}

/// `b(G_{p,q}) = qp + 2q + p`, valid for `q ≥ 1`, `p + q ≥ 2`.
///
/// At `(0, 1)` the graph is `P₃`, which has three classes rather than two, so
/// that input is refused.
pub fn b_formula(p: u64, q: u64) -> Result<u64, GarlicError> {
    if q < 1 || p + q < 2 {
        return Err(GarlicError::Precondition {
            op: "b_formula",
            requirement: "q >= 1 and p + q >= 2",
            p,
            q,
        });
    }
    Ok(q * p + 2 * q + p)
}

/// Expanded `x^{p+q−2}(x⁴ − (p+2q)x² + pq)`, ascending powers, degree `p+q+2`.
///
/// When `p = 0` the constant term vanishes and the product is
/// `x^q(x² − 2q)`, which also covers `(0, 1)` where `p + q − 2 < 0`.
pub fn char_poly(p: u64, q: u64) -> Result<Vec<i128>, GarlicError> {
    if q < 1 {
        return Err(GarlicError::Precondition {
            op: "char_poly",
            requirement: "q >= 1",
            p,
            q,
        });
    }
    let n = (p + q + 2) as usize;
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    coeffs[n - 2] = -i128::from(p + 2 * q);
    if p > 0 {
        coeffs[n - 4] = i128::from(p) * i128::from(q);
    }
    Ok(coeffs)
}

/// Exact `ρ²(G_{p,q}) = (p + 2q + √(p² + 4q²)) / 2`, canonicalized.
///
/// For `q = 0` this reduces to `p`, the squared radius of `S_{p+1}`.
pub fn rho2(params: GarlicParams) -> Result<RhoSquared, GarlicError> {
    let (p, q) = (u128::from(params.p), u128::from(params.q));
    Ok(RhoSquared::new(p + 2 * q, p * p + 4 * q * q)?)
}

/// `√(p² + 4q²)` when integral.
fn hypotenuse(p: u64, q: u64) -> Option<u128> {
    let (p, q) = (u128::from(p), u128::from(q));
    exact_sqrt(p * p + 4 * q * q)
}

/// Connected induced subgraph classes of `G_{p,q}`, `q ≥ 1`.
///
/// Garlic members `G_{s,t}` (`0 ≤ s ≤ p`, `1 ≤ t ≤ q`) come first in
/// `(s, t)` order, then stars `S_1 … S_{p+q+1}`. `S_3` is omitted because it
/// is `G_{0,1}`.
pub fn subgraph_catalog(p: u64, q: u64) -> Result<Vec<SubgraphId>, GarlicError> {
    if q < 1 {
        return Err(GarlicError::Precondition {
            op: "subgraph_catalog",
            requirement: "q >= 1",
            p,
            q,
        });
    }
    let mut out = Vec::with_capacity(((p + 1) * q + p + q + 1) as usize);
    for s in 0..=p {
        for t in 1..=q {
            out.push(SubgraphId::garlic(s, t));
        }
    }
    out.extend((1..=p + q + 1).filter(|&r| r != 3).map(SubgraphId::star));
    Ok(out)
}

/// Classifies whether `a` and `b` share a spectral radius, returning the first
/// applicable rule in the order: isomorphic inputs, leg swap, perimeter match,
/// star/garlic triplet, star/bipartite, bipartite/garlic triplet.
pub fn same_radius_classified(a: SubgraphId, b: SubgraphId) -> EqualityRule {
    use SubgraphId::{Garlic, Star};
    if a.is_isomorphic_to(&b) {
        return EqualityRule::IsomorphicInputs;
    }
    if let (Garlic { s: p1, t: q1 }, Garlic { s: p2, t: q2 }) = (a, b) {
        if p1 >= 1 && p2 >= 1 {
            if p1 == 2 * q2 && p2 == 2 * q1 {
                return EqualityRule::LegSwap;
            }
            if let (Some(r1), Some(r2)) = (hypotenuse(p1, q1), hypotenuse(p2, q2)) {
                let lhs = u128::from(p1 + 2 * q1) + r1;
                let rhs = u128::from(p2 + 2 * q2) + r2;
                if lhs == rhs {
                    return EqualityRule::PerimeterMatch;
                }
            }
        }
    }
    let star_garlic = match (a, b) {
        (Star { r }, Garlic { s, t }) | (Garlic { s, t }, Star { r }) => Some((r, s, t)),
        _ => None,
    };
    if let Some((n, p, q)) = star_garlic {
        if p >= 1 {
            if let Some(r) = hypotenuse(p, q) {
                if u128::from(n) == (u128::from(p + 2 * q) + r) / 2 + 1 {
                    return EqualityRule::StarGarlicPT;
                }
            }
        } else if n == 2 * q + 1 {
            return EqualityRule::StarBipartite;
        }
    }
    let bipartite_garlic = match (a, b) {
        (Garlic { s: 0, t: q1 }, Garlic { s: p2, t: q2 })
        | (Garlic { s: p2, t: q2 }, Garlic { s: 0, t: q1 })
            if p2 >= 1 =>
        {
            Some((q1, p2, q2))
        }
        _ => None,
    };
    if let Some((q1, p2, q2)) = bipartite_garlic {
        if let Some(r2) = hypotenuse(p2, q2) {
            if 4 * u128::from(q1) == u128::from(p2 + 2 * q2) + r2 {
                return EqualityRule::BipartiteGarlicPT;
            }
        }
    }
    EqualityRule::NotEqual
}

/// The four graphs whose squared radius is the perimeter `P` of `t`:
/// `S_{P+1}`, `G_{0,P/2}`, `G_{2b,a}` and `G_{2a,b}`.
pub fn quadruple(t: PythTriplet) -> Result<[SubgraphId; 4], GarlicError> {
    let (a, b) = t.legs();
    let perimeter = t.perimeter();
    if !crate::pythagorean::is_pt(a, b, t.c()) || !perimeter.is_multiple_of(2) {
        return Err(GarlicError::NotATriplet { a, b, c: t.c() });
    }
    Ok([
        SubgraphId::star(perimeter + 1),
        SubgraphId::garlic(0, perimeter / 2),
        SubgraphId::garlic(2 * b, a),
        SubgraphId::garlic(2 * a, b),
    ])
}
