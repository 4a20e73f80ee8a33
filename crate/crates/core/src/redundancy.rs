//! Exact `b`, `c` and `r = b/c` for garlic graphs by grouping catalog members
//! on their canonical squared radius, plus the bookkeeping around the
//! redundancy lower bound and balanced-family sweeps.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::GarlicError;
use crate::garlic::{
    build, same_radius_classified, subgraph_catalog, EqualityRule, GarlicParams, SubgraphId,
};
use crate::pythagorean::gcd;
use crate::subgraphs::b_c_r_numeric;
use crate::surd::{exact_sqrt, RhoSquared};

/// Largest `p` or `q` accepted by [`census`].
pub const CENSUS_PARAM_LIMIT: u64 = 100_000;
/// Largest catalog [`census`] materializes class by class.
pub const CENSUS_SIZE_LIMIT: u64 = 50_000_000;
/// Largest `q_max` accepted by [`balanced_sweep`].
pub const SWEEP_LIMIT: u64 = 2_000;

/// Catalog members sharing one squared spectral radius.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoincidenceClass {
    #[serde(flatten)]
    pub rho2: RhoSquared,
    pub members: Vec<SubgraphId>,
    /// Rule linking the first member to each later one.
    pub rules: Vec<EqualityRule>,
}

/// Reduced fraction, serialized as `[num, den]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.num, self.den].serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RedundancyReport {
    pub p: u64,
    pub q: u64,
    pub b: u64,
    pub c: u64,
    pub ratio: Ratio,
    pub k: u64,
    pub bound_statement: i64,
    pub bound_proof: i64,
    pub classes: Vec<CoincidenceClass>,
}

impl RedundancyReport {
    /// Classes with more than one member.
    pub fn collisions(&self) -> impl Iterator<Item = &CoincidenceClass> {
        self.classes.iter().filter(|c| c.members.len() > 1)
    }
}

fn check_census_params(op: &'static str, p: u64, q: u64) -> Result<(), GarlicError> {
    if q < 1 || p + q < 2 {
        return Err(GarlicError::Precondition {
            op,
            requirement: "q >= 1 and p + q >= 2",
            p,
            q,
        });
    }
    if p > CENSUS_PARAM_LIMIT || q > CENSUS_PARAM_LIMIT {
        return Err(GarlicError::Precondition {
            op,
            requirement: "p, q <= 100000",
            p,
            q,
        });
    }
    Ok(())
}

/// Exact census of `G_{p,q}`: the catalog grouped by canonical `ρ²`, classes
/// in ascending radius order.
pub fn census(p: u64, q: u64) -> Result<RedundancyReport, GarlicError> {
    check_census_params("census", p, q)?;
    let size = q * p + 2 * q + p;
    if size > CENSUS_SIZE_LIMIT {
        return Err(GarlicError::Limit(format!(
            "catalog of G_{{{p},{q}}} has {size} members, above {CENSUS_SIZE_LIMIT}"
        )));
    }
    let catalog = subgraph_catalog(p, q)?;
    let mut keyed = catalog
        .into_par_iter()
        .map(|id| id.rho2().map(|r| (r, id)))
        .collect::<Result<Vec<_>, _>>()?;
    keyed.par_sort_unstable();

    let mut classes: Vec<CoincidenceClass> = Vec::new();
    for (rho2, id) in keyed {
        match classes.last_mut() {
            Some(last) if last.rho2 == rho2 => {
                last.rules.push(same_radius_classified(last.members[0], id));
                last.members.push(id);
            }
            _ => classes.push(CoincidenceClass {
                rho2,
                members: vec![id],
                rules: Vec::new(),
            }),
        }
    }
    let b = b_count(p, q);
    let c = classes.len() as u64;
    let bounds = paper_lower_bound(p, q)?;
    Ok(RedundancyReport {
        p,
        q,
        b,
        c,
        ratio: Ratio::new(b, c),
        k: bounds.k,
        bound_statement: bounds.statement,
        bound_proof: bounds.proof,
        classes,
    })
}

fn b_count(p: u64, q: u64) -> u64 {
    q * p + 2 * q + p
}

/// `(b, c)` of `G_{p,q}` without materializing the catalog.
///
/// Irrational values `(A, B)` with `B > 0` are shared only by a leg-swap pair
/// `G_{s,t}`, `G_{2t,s/2}` (equal `A` and `B` fix `{s, 2t}`), so they are
/// counted directly; rational values are collected in a bitmap indexed by `A`.
pub fn census_counts(p: u64, q: u64) -> Result<(u64, u64), GarlicError> {
    check_census_params("census_counts", p, q)?;
    let max_a = 2 * (p + 2 * q) + 2;
    let mut rational = vec![false; max_a as usize + 1];
    let mut irrational = 0u64;
    for s in 0..=p {
        for t in 1..=q {
            let (s2, t2) = (u128::from(s), u128::from(t));
            match exact_sqrt(s2 * s2 + 4 * t2 * t2) {
                Some(r) => rational[(u128::from(s + 2 * t) + r) as usize] = true,
                None => {
                    let partner_smaller = s % 2 == 0
                        && 2 * t <= p
                        && (1..=q).contains(&(s / 2))
                        && (2 * t, s / 2) < (s, t);
                    if !partner_smaller {
                        irrational += 1;
                    }
                }
            }
        }
    }
    for r in (1..=p + q + 1).filter(|&r| r != 3) {
        rational[(2 * (r - 1)) as usize] = true;
    }
    let c = irrational + rational.iter().filter(|&&x| x).count() as u64;
    Ok((b_count(p, q), c))
}

/// Leg-swap pairs and star/bipartite pairs present in a catalog.
pub type SubgraphPair = (SubgraphId, SubgraphId);

/// `S1`: unordered pairs `{G_{2q₂,q₁}, G_{2q₁,q₂}}`, `q₁ < q₂`, both in the
/// catalog of `G_{p,q}`. `S2`: pairs `{S_{2q₁+1}, G_{0,q₁}}` in the catalog,
/// `q₁ ≥ 2` (at `q₁ = 1` both are `P₃`).
pub fn s1_s2_sets(p: u64, q: u64) -> Result<(Vec<SubgraphPair>, Vec<SubgraphPair>), GarlicError> {
    if q < 1 {
        return Err(GarlicError::Precondition {
            op: "s1_s2_sets",
            requirement: "q >= 1",
            p,
            q,
        });
    }
    let k = q.min(p / 2);
    let mut s1 = Vec::new();
    for q1 in 1..=k {
        for q2 in q1 + 1..=k {
            s1.push((
                SubgraphId::garlic(2 * q2, q1),
                SubgraphId::garlic(2 * q1, q2),
            ));
        }
    }
    let s2 = (2..=q)
        .filter(|&q1| 2 * q1 < p + q + 1)
        .map(|q1| (SubgraphId::star(2 * q1 + 1), SubgraphId::garlic(0, q1)))
        .collect();
    Ok((s1, s2))
}

/// Both readings of the lower bound on `c(G_{p,q})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBounds {
    /// `min(q, ⌊p/2⌋)`.
    pub k: u64,
    /// `b − max(0, (k−1)(k+2)/2)`.
    pub statement: i64,
    /// `b − (k−1)(k+2)/2` without clamping (exceeds `b` when `k = 0`).
    pub statement_raw: i64,
    /// `b − k(k+1)/2`.
    pub proof: i64,
}

pub fn paper_lower_bound(p: u64, q: u64) -> Result<LowerBounds, GarlicError> {
    let b = b_formula_checked(p, q)? as i64;
    let k = q.min(p / 2);
    let ki = k as i64;
    let correction = (ki - 1) * (ki + 2) / 2;
    Ok(LowerBounds {
        k,
        statement: b - correction.max(0),
        statement_raw: b - correction,
        proof: b - ki * (ki + 1) / 2,
    })
}

fn b_formula_checked(p: u64, q: u64) -> Result<u64, GarlicError> {
    crate::garlic::b_formula(p, q)
}

/// One row of the balanced-family sweep.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub q: u64,
    pub b: u64,
    pub c: u64,
    pub ratio: f64,
    pub bound_ratio: f64,
}

/// `4(q² + 2q) / (3q² + 7q + 2)`.
pub fn balanced_bound_ratio(q: u64) -> f64 {
    let q = q as f64;
    4.0 * (q * q + 2.0 * q) / (3.0 * q * q + 7.0 * q + 2.0)
}

/// Exact `b`, `c`, `r` of `G_{2q,q}` for `q = 1..=q_max`, in `q` order.
pub fn balanced_sweep(q_max: u64) -> Result<Vec<SweepRow>, GarlicError> {
    if q_max > SWEEP_LIMIT {
        return Err(GarlicError::Limit(format!(
            "q_max {q_max} exceeds {SWEEP_LIMIT}"
        )));
    }
    (1..=q_max)
        .into_par_iter()
        .map(|q| {
            let (b, c) = census_counts(2 * q, q)?;
            Ok(SweepRow {
                q,
                b,
                c,
                ratio: b as f64 / c as f64,
                bound_ratio: balanced_bound_ratio(q),
            })
        })
        .collect()
}

/// CSV rendering of sweep rows.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("q,b,c,ratio,bound_ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{:.9},{:.9}\n",
            r.q, r.b, r.c, r.ratio, r.bound_ratio
        ));
    }
    out
}

/// A one-parameter slice of the garlic family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subfamily {
    /// `𝒢_{p,q}` with `p` fixed, `q` varying.
    FixedP(u64),
    /// `𝒢_{p,q}` with `q` fixed, `p` varying.
    FixedQ(u64),
}

impl Subfamily {
    pub fn params(&self, free: u64) -> (u64, u64) {
        match *self {
            Subfamily::FixedP(p) => (p, free),
            Subfamily::FixedQ(q) => (free, q),
        }
    }

    /// Offset `b − c` tabulated for this slice, where one is listed.
    pub fn claimed_offset(&self) -> Option<u64> {
        match *self {
            Subfamily::FixedP(1 | 2) | Subfamily::FixedQ(1) => Some(0),
            Subfamily::FixedP(3) => Some(1),
            Subfamily::FixedP(4 | 5) | Subfamily::FixedQ(2) => Some(3),
            Subfamily::FixedP(6) | Subfamily::FixedQ(3) => Some(7),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Subfamily::FixedP(p) => format!("G_{{{p},q}}"),
            Subfamily::FixedQ(q) => format!("G_{{p,{q}}}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OffsetRow {
    pub p: u64,
    pub q: u64,
    pub b: u64,
    pub c: u64,
    pub offset: u64,
    pub claimed: Option<u64>,
    pub matches: Option<bool>,
}

/// Observed `b − c` across a slice, flagged against the tabulated offset.
pub fn subfamily_offsets(
    family: Subfamily,
    range: RangeInclusive<u64>,
) -> Result<Vec<OffsetRow>, GarlicError> {
    let claimed = family.claimed_offset();
    range
        .into_par_iter()
        .map(|free| {
            let (p, q) = family.params(free);
            let (b, c) = census_counts(p, q)?;
            Ok(OffsetRow {
                p,
                q,
                b,
                c,
                offset: b - c,
                claimed,
                matches: claimed.map(|x| x == b - c),
            })
        })
        .collect()
}

/// Whether the exact census and the brute-force engine agree on `b` and `c`.
pub fn generic_crosscheck(p: u64, q: u64, tol: f64) -> Result<bool, GarlicError> {
    let params = GarlicParams::new(p, q)?;
    if params.order() > crate::subgraphs::ENUMERATION_LIMIT as u64 {
        return Err(GarlicError::Limit(format!(
            "G_{{{p},{q}}} has order {} above the enumeration limit",
            params.order()
        )));
    }
    let exact = census(p, q)?;
    let numeric = b_c_r_numeric(&build(params)?, tol)?;
    Ok(exact.b == numeric.b as u64 && exact.c == numeric.c as u64)
}

/// Distinct squared radii among a set of ids; used by checks that need
/// `c` for an arbitrary id set.
pub fn distinct_rho2(ids: &[SubgraphId]) -> Result<BTreeSet<RhoSquared>, GarlicError> {
    ids.iter().map(|id| id.rho2()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgraphs::DEFAULT_CLUSTER_TOL;
    use SubgraphId as S;

    #[test]
    fn census_4_2() {
        let r = census(4, 2).unwrap();
        assert_eq!((r.b, r.c), (16, 13));
        assert_eq!(r.ratio, Ratio { num: 16, den: 13 });
        let collisions: Vec<Vec<SubgraphId>> = r.collisions().map(|c| c.members.clone()).collect();
        assert_eq!(
            collisions,
            vec![
                vec![S::garlic(0, 2), S::star(5)],
                vec![S::garlic(2, 2), S::garlic(4, 1)],
                vec![S::garlic(3, 2), S::star(7)],
            ]
        );
        for class in r.collisions() {
            assert!(class.rules.iter().all(|rule| rule.is_equal()));
        }
        assert_eq!(
            r.classes
                .iter()
                .map(|c| c.members.len() as u64)
                .sum::<u64>(),
            r.b
        );
    }

    #[test]
    fn census_small_cases() {
        let r = census(1, 1).unwrap();
        assert_eq!((r.b, r.c, r.ratio), (4, 4, Ratio::new(1, 1)));
        let r = census(2, 2).unwrap();
        assert_eq!((r.b, r.c), (10, 9));
        let coll: Vec<_> = r.collisions().collect();
        assert_eq!(coll.len(), 1);
        assert_eq!(coll[0].members, vec![S::garlic(0, 2), S::star(5)]);
        assert_eq!(coll[0].rho2, RhoSquared::from_integer(4));
        assert!(census(0, 1).is_err());
        assert!(census(3, 0).is_err());
    }

    #[test]
    fn classes_ascend() {
        let r = census(6, 4).unwrap();
        assert!(r.classes.windows(2).all(|w| w[0].rho2 < w[1].rho2));
    }

    #[test]
    fn fast_counts_match_census() {
        for p in 0..=14 {
            for q in 1..=9 {
                if p + q < 2 {
                    continue;
                }
                let r = census(p, q).unwrap();
                assert_eq!(census_counts(p, q).unwrap(), (r.b, r.c), "p={p} q={q}");
            }
        }
        for q in [20, 37, 50] {
            let r = census(2 * q, q).unwrap();
            assert_eq!(census_counts(2 * q, q).unwrap(), (r.b, r.c));
        }
    }

    #[test]
    fn s1_s2() {
        let (s1, s2) = s1_s2_sets(4, 2).unwrap();
        assert_eq!(s1, vec![(S::garlic(4, 1), S::garlic(2, 2))]);
        assert_eq!(s2, vec![(S::star(5), S::garlic(0, 2))]);
        let (s1, s2) = s1_s2_sets(2, 1).unwrap();
        assert!(s1.is_empty() && s2.is_empty());
        let (s1, _) = s1_s2_sets(8, 4).unwrap();
        assert_eq!(s1.len(), 6);
    }

    #[test]
    fn bounds() {
        let b = paper_lower_bound(4, 2).unwrap();
        assert_eq!((b.k, b.statement, b.proof), (2, 14, 13));
        let b = paper_lower_bound(8, 4).unwrap();
        assert_eq!((b.k, b.statement, b.proof), (4, 39, 38));
        // eleven merges: seven pairs and two triples at 6 and 12
        assert_eq!(census(8, 4).unwrap().c, 37);
        for p in 2..10 {
            let b = paper_lower_bound(p, 1).unwrap();
            let full = crate::garlic::b_formula(p, 1).unwrap() as i64;
            // k = 1: the statement correction vanishes, the proof one is 1
            assert_eq!((b.statement, b.proof), (full, full - 1));
        }
        // k = 0: the raw expression exceeds b, the clamped one does not
        let b = paper_lower_bound(1, 3).unwrap();
        assert_eq!(b.k, 0);
        assert_eq!(b.statement_raw, b.statement + 1);
    }

    #[test]
    fn sweep_rows() {
        let rows = balanced_sweep(2).unwrap();
        assert_eq!((rows[0].q, rows[0].b, rows[0].c), (1, 6, 6));
        assert_eq!(rows[0].ratio, 1.0);
        assert_eq!(rows[0].bound_ratio, 1.0);
        assert_eq!((rows[1].b, rows[1].c), (16, 13));
        assert!((rows[1].bound_ratio - 32.0 / 28.0).abs() < 1e-15);
        let csv = sweep_csv(&rows);
        assert_eq!(
            csv,
            "q,b,c,ratio,bound_ratio\n1,6,6,1.000000000,1.000000000\n2,16,13,1.230769231,1.142857143\n"
        );
        assert!(balanced_sweep(SWEEP_LIMIT + 1).is_err());
    }

    #[test]
    fn offsets() {
        let rows = subfamily_offsets(Subfamily::FixedP(3), 2..=3).unwrap();
        assert_eq!((rows[0].offset, rows[0].matches), (1, Some(true)));
        assert_eq!((rows[1].offset, rows[1].matches), (3, Some(false)));
        let rows = subfamily_offsets(Subfamily::FixedP(4), 2..=2).unwrap();
        assert_eq!((rows[0].offset, rows[0].matches), (3, Some(true)));
        assert_eq!(Subfamily::FixedP(9).claimed_offset(), None);
    }

    #[test]
    fn crosscheck_examples() {
        assert!(generic_crosscheck(4, 2, DEFAULT_CLUSTER_TOL).unwrap());
        assert!(generic_crosscheck(1, 1, DEFAULT_CLUSTER_TOL).unwrap());
        assert!(generic_crosscheck(0, 2, DEFAULT_CLUSTER_TOL).unwrap());
        assert!(generic_crosscheck(10, 6, DEFAULT_CLUSTER_TOL).is_err());
    }

    #[test]
    fn report_json_shape() {
        let json = serde_json::to_value(census(1, 1).unwrap()).unwrap();
        assert_eq!(json["ratio"], serde_json::json!([1, 1]));
        let first = &json["classes"][0];
        assert_eq!(first["A"], 0);
        assert_eq!(
            first["members"][0],
            serde_json::json!({"kind": "star", "r": 1})
        );
        assert!(first["rules"].as_array().unwrap().is_empty());
    }
}
