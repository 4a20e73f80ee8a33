//! Checks every quantitative statement made about garlic graphs against the
//! exact engines, recording a minimal witness for each failure.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::garlic::{
    b_formula, build, char_poly, quadruple, rho2 as garlic_rho2, rho_numeric, subgraph_catalog,
    GarlicParams, SubgraphId,
};
use crate::linalg::characteristic_polynomial;
use crate::pythagorean::{
    count_estimate, count_estimate_constant, count_pts_legs_leq, garlic_family_common_radius,
    is_pt, pts_with_perimeter, PythTriplet,
};
use crate::redundancy::{balanced_bound_ratio, census_counts, paper_lower_bound, Subfamily};
use crate::subgraphs::{enumerate_connected_induced, RADIUS_TOL};
use crate::surd::{exact_sqrt, RhoSquared};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Confirmed,
    Refuted,
    EdgeCase,
}

impl ClaimStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::Confirmed => "confirmed",
            ClaimStatus::Refuted => "refuted",
            ClaimStatus::EdgeCase => "edge-case",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditEntry {
    pub claim: String,
    pub location: String,
    pub status: ClaimStatus,
    pub witness: Option<Value>,
}

/// Parameter ranges the audit sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditGrid {
    Small,
    Full,
}

impl std::str::FromStr for AuditGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(AuditGrid::Small),
            "full" => Ok(AuditGrid::Full),
            other => Err(format!("unknown grid '{other}' (expected small or full)")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Limits {
    p_max: u64,
    q_max: u64,
    /// Largest order handed to subgraph enumeration.
    enum_order: u64,
    /// Largest order handed to the integer characteristic polynomial.
    poly_order: u64,
    /// Parameter bound for pairwise radius comparisons.
    pair_max: u64,
    perimeter_max: u64,
    leg_max: u64,
    family_m: usize,
    offset_max: u64,
    /// Grid for the redundancy-ratio ceiling.
    ratio_max: (u64, u64),
    balanced_q: &'static [u64],
    count_n: &'static [u64],
}

impl AuditGrid {
    fn limits(self) -> Limits {
        match self {
            AuditGrid::Small => Limits {
                p_max: 12,
                q_max: 8,
                enum_order: 13,
                poly_order: 16,
                pair_max: 30,
                perimeter_max: 300,
                leg_max: 60,
                family_m: 5,
                offset_max: 20,
                ratio_max: (40, 20),
                balanced_q: &[50, 100, 200],
                count_n: &[500, 1000],
            },
            AuditGrid::Full => Limits {
                p_max: 40,
                q_max: 20,
                enum_order: 16,
                poly_order: 20,
                pair_max: 60,
                perimeter_max: 1000,
                leg_max: 100,
                family_m: 8,
                offset_max: 60,
                ratio_max: (80, 40),
                balanced_q: &[50, 100, 200, 500, 1000, 2000],
                count_n: &[500, 1000, 2000, 4000],
            },
        }
    }
}

/// Census-admissible cells `q ≥ 1`, `p + q ≥ 2`, ordered by `(p + q, p)` so
/// the first failing cell is a smallest witness.
fn cells(p_max: u64, q_max: u64) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = (0..=p_max)
        .flat_map(|p| (1..=q_max).map(move |q| (p, q)))
        .filter(|&(p, q)| p + q >= 2)
        .collect();
    out.sort_by_key(|&(p, q)| (p + q, p));
    out
}

/// First cell (in `cells` order) where `check` returns a witness.
fn first_witness<F>(cells: &[(u64, u64)], check: F) -> Option<Value>
where
    F: Fn(u64, u64) -> Option<Value> + Sync,
{
    cells
        .par_iter()
        .map(|&(p, q)| check(p, q))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

fn verdict(witness: Option<Value>) -> (ClaimStatus, Option<Value>) {
    match witness {
        Some(w) => (ClaimStatus::Refuted, Some(w)),
        None => (ClaimStatus::Confirmed, None),
    }
}

fn counts(p: u64, q: u64) -> (u64, u64) {
    census_counts(p, q).expect("audit cells are census-admissible")
}

fn rho(id: SubgraphId) -> RhoSquared {
    id.rho2()
        .expect("audit parameters are inside the surd envelope")
}

fn hyp(p: u64, q: u64) -> Option<u64> {
    exact_sqrt(u128::from(p * p + 4 * q * q)).map(|r| r as u64)
}

type Check = fn(&Limits) -> AuditEntry;

fn entry(
    claim: &str,
    location: &str,
    (status, witness): (ClaimStatus, Option<Value>),
) -> AuditEntry {
    AuditEntry {
        claim: claim.into(),
        location: location.into(),
        status,
        witness,
    }
}

fn subgraph_count(l: &Limits) -> AuditEntry {
    let grid = cells(l.p_max, l.q_max);
    let w = first_witness(&grid, |p, q| {
        let formula = b_formula(p, q).ok()?;
        let catalog = subgraph_catalog(p, q).ok()?.len() as u64;
        let enumerated = if p + q + 2 <= l.enum_order {
            let g = build(GarlicParams::new(p, q).ok()?).ok()?;
            Some(enumerate_connected_induced(&g).ok()?.len() as u64)
        } else {
            None
        };
        (formula != catalog || enumerated.is_some_and(|e| e != formula)).then(|| {
            json!({"p": p, "q": q, "formula": formula, "catalog": catalog, "enumerated": enumerated})
        })
    });
    entry("subgraph-count", "subgraph count lemma", verdict(w))
}

fn subgraph_count_degenerate(_: &Limits) -> AuditEntry {
    let g =
        build(GarlicParams::new(0, 1).expect("(0,1) is a valid garlic")).expect("G_{0,1} builds");
    let enumerated = enumerate_connected_induced(&g)
        .map(|v| v.len())
        .unwrap_or(0);
    let (p, q) = (0u64, 1u64);
    let expression = q * p + 2 * q + p;
    let status = if enumerated as u64 == expression {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::EdgeCase
    };
    entry(
        "subgraph-count-at-0-1",
        "subgraph count lemma",
        (
            status,
            (status != ClaimStatus::Confirmed).then(|| {
                json!({"p": 0, "q": 1, "expression": expression, "enumerated": enumerated,
                       "note": "G_{0,1} is P3; the formula is refused at this input"})
            }),
        ),
    )
}

fn characteristic_equation(l: &Limits) -> AuditEntry {
    let grid: Vec<_> = cells(l.p_max, l.q_max)
        .into_iter()
        .filter(|&(p, q)| p + q + 2 <= l.poly_order)
        .collect();
    let w = first_witness(&grid, |p, q| {
        let closed = char_poly(p, q).ok()?;
        let g = build(GarlicParams::new(p, q).ok()?).ok()?;
        let direct = characteristic_polynomial(&g)?;
        (closed != direct).then(|| json!({"p": p, "q": q}))
    });
    entry(
        "characteristic-equation",
        "characteristic equation lemma",
        verdict(w),
    )
}

fn radius_formula(l: &Limits) -> AuditEntry {
    let mut grid: Vec<_> = (1..=l.p_max).map(|p| (p, 0)).collect();
    grid.extend(cells(l.p_max, l.q_max));
    let w = first_witness(&grid, |p, q| {
        let params = GarlicParams::new(p, q).ok()?;
        let closed = garlic_rho2(params).ok()?.sqrt_f64();
        let numeric = rho_numeric(params, RADIUS_TOL).ok()?;
        ((closed - numeric).abs() > 1e-9)
            .then(|| json!({"p": p, "q": q, "closed_form": closed, "numeric": numeric}))
    });
    entry(
        "spectral-radius-formula",
        "characteristic equation lemma",
        verdict(w),
    )
}

fn induced_monotone(l: &Limits) -> AuditEntry {
    let grid = cells(l.p_max, l.q_max);
    let w = first_witness(&grid, |s, t| {
        let g = rho(SubgraphId::garlic(s, t));
        let mut smaller = vec![SubgraphId::star(s + t + 1)];
        if s >= 1 {
            smaller.push(SubgraphId::garlic(s - 1, t));
        }
        if t >= 2 {
            smaller.push(SubgraphId::garlic(s, t - 1));
        }
        smaller.into_iter().find(|h| rho(*h) >= g).map(
            |h| json!({"graph": SubgraphId::garlic(s, t).to_string(), "subgraph": h.to_string()}),
        )
    });
    entry(
        "induced-subgraph-strict",
        "induced subgraph lemma",
        verdict(w),
    )
}

fn garlic_pairs(l: &Limits) -> AuditEntry {
    let ids: Vec<(u64, u64)> = (1..=l.pair_max)
        .flat_map(|s| (1..=l.pair_max).map(move |t| (s, t)))
        .collect();
    let w = ids
        .par_iter()
        .enumerate()
        .map(|(i, &(p1, q1))| {
            ids[i + 1..].iter().find_map(|&(p2, q2)| {
                let equal = rho(SubgraphId::garlic(p1, q1)) == rho(SubgraphId::garlic(p2, q2));
                let cond_i = match (hyp(p1, q1), hyp(p2, q2)) {
                    (Some(r1), Some(r2)) => r1 != r2 && p1 + 2 * q1 + r1 == p2 + 2 * q2 + r2,
                    _ => false,
                };
                let cond_ii = p1 == 2 * q2 && p2 == 2 * q1;
                (equal != (cond_i || cond_ii))
                    .then(|| json!({"first": [p1, q1], "second": [p2, q2], "equal": equal}))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    entry("garlic-pair-equality", "garlic pair theorem", verdict(w))
}

fn star_garlic(l: &Limits) -> AuditEntry {
    let n_max = 2 * l.pair_max + 2;
    let grid: Vec<(u64, u64)> = (0..=l.pair_max)
        .flat_map(|p| (1..=l.pair_max).map(move |q| (p, q)))
        .collect();
    let w = first_witness(&grid, |p, q| {
        let g = rho(SubgraphId::garlic(p, q));
        (1..=n_max).find_map(|n| {
            let equal = rho(SubgraphId::star(n)) == g;
            let cond = if p != 0 {
                hyp(p, q).is_some_and(|r| n == (p + 2 * q + r) / 2 + 1)
            } else {
                n == 2 * q + 1
            };
            (equal != cond).then(|| json!({"n": n, "p": p, "q": q, "equal": equal}))
        })
    });
    entry(
        "star-garlic-equality",
        "star and garlic theorem",
        verdict(w),
    )
}

fn zero_pendant(l: &Limits) -> AuditEntry {
    let grid: Vec<(u64, u64)> = (1..=l.pair_max)
        .flat_map(|p| (1..=l.pair_max).map(move |q| (p, q)))
        .collect();
    let w = first_witness(&grid, |p2, q2| {
        let g = rho(SubgraphId::garlic(p2, q2));
        (1..=2 * l.pair_max).find_map(|q1| {
            let equal = rho(SubgraphId::garlic(0, q1)) == g;
            let cond = hyp(p2, q2).is_some_and(|r| 4 * q1 == p2 + 2 * q2 + r);
            (equal != cond).then(|| json!({"q1": q1, "p2": p2, "q2": q2, "equal": equal}))
        })
    });
    entry("zero-pendant-equality", "zero-pendant theorem", verdict(w))
}

fn all_triplets(perimeter_max: u64) -> Vec<PythTriplet> {
    (12..=perimeter_max)
        .step_by(2)
        .flat_map(pts_with_perimeter)
        .collect()
}

fn quadruple_radius(l: &Limits) -> AuditEntry {
    let w = all_triplets(l.perimeter_max).into_iter().find_map(|t| {
        let quad = quadruple(t).ok()?;
        let target = RhoSquared::from_integer(t.perimeter());
        let distinct = quad
            .iter()
            .enumerate()
            .all(|(i, a)| quad[i + 1..].iter().all(|b| !a.is_isomorphic_to(b)));
        (!distinct || quad.iter().any(|id| rho(*id) != target))
            .then(|| json!({"triplet": t, "graphs": quad.map(|g| g.to_string())}))
    });
    entry("quadruple-common-radius", "quadruple theorem", verdict(w))
}

/// Every catalog-style graph (`G_{s,t}` with `t ≥ 1`, or a star) whose squared
/// radius is the integer `n`.
fn graphs_with_integer_rho2(n: u64) -> BTreeSet<SubgraphId> {
    let mut out = BTreeSet::new();
    out.insert(SubgraphId::star(n + 1));
    if n.is_multiple_of(2) {
        out.insert(SubgraphId::garlic(0, n / 2));
    }
    for t in pts_with_perimeter(2 * n) {
        let (x, y) = t.legs();
        if y % 2 == 0 {
            out.insert(SubgraphId::garlic(x, y / 2));
        }
        if x % 2 == 0 {
            out.insert(SubgraphId::garlic(y, x / 2));
        }
    }
    out.retain(|id| !(id == &SubgraphId::garlic(0, 1)));
    out
}

fn quadruple_exactly_four(l: &Limits) -> AuditEntry {
    // Perimeters shared by several triplets add graphs by design; the claim is
    // about a triplet that is alone at its perimeter.
    let w = all_triplets(l.perimeter_max).into_iter().find_map(|t| {
        let perimeter = t.perimeter();
        if pts_with_perimeter(perimeter).len() != 1 {
            return None;
        }
        let graphs = graphs_with_integer_rho2(perimeter);
        let quad: BTreeSet<SubgraphId> = quadruple(t).ok()?.into_iter().collect();
        (graphs.len() != 4).then(|| {
            json!({
                "triplet": t,
                "rho2": perimeter,
                "graphs": graphs.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "outside_quadruple": graphs.difference(&quad).map(|g| g.to_string()).collect::<Vec<_>>(),
            })
        })
    });
    let status = if w.is_some() {
        ClaimStatus::EdgeCase
    } else {
        ClaimStatus::Confirmed
    };
    entry("quadruple-exactly-four", "quadruple theorem", (status, w))
}

fn common_radius_family(l: &Limits) -> AuditEntry {
    let w = (1..=l.family_m).find_map(|m| {
        let graphs = match garlic_family_common_radius(m) {
            Ok(g) => g,
            Err(e) => return Some(json!({"m": m, "error": e.to_string()})),
        };
        let target = rho(graphs[graphs.len() - 1]);
        let distinct = graphs.iter().collect::<BTreeSet<_>>().len() == graphs.len();
        let shared = graphs.iter().all(|g| rho(*g) == target);
        (!(distinct && shared && graphs.len() == 2 * m + 1)).then(|| json!({"m": m}))
    });
    entry(
        "equal-perimeter-family",
        "equal-perimeter construction",
        verdict(w),
    )
}

fn example_sqrt60(_: &Limits) -> AuditEntry {
    let pair = [SubgraphId::garlic(10, 12), SubgraphId::garlic(15, 10)];
    let claimed = RhoSquared::from_integer(60);
    let exact: Vec<RhoSquared> = pair.iter().map(|g| rho(*g)).collect();
    let ok = exact.iter().all(|r| *r == claimed);
    let w = (!ok).then(|| {
        json!({
            "graphs": pair.map(|g| g.to_string()),
            "claimed_rho2": 60,
            "exact_rho2": exact[0],
            "shared": exact[0] == exact[1],
        })
    });
    entry("first-example-radius", "first worked example", verdict(w))
}

fn example_smallest_shared_perimeter(_: &Limits) -> AuditEntry {
    let first = (2..=60)
        .step_by(2)
        .find(|&p| pts_with_perimeter(p).len() >= 2);
    let w = (first != Some(60)).then(|| json!({"smallest_shared_perimeter": first}));
    entry(
        "first-example-smallest-perimeter",
        "first worked example",
        verdict(w),
    )
}

fn example_six_graphs(_: &Limits) -> AuditEntry {
    let graphs = [
        SubgraphId::garlic(40, 15),
        SubgraphId::garlic(30, 20),
        SubgraphId::garlic(48, 10),
        SubgraphId::garlic(20, 24),
        SubgraphId::garlic(0, 30),
        SubgraphId::star(61),
    ];
    let target = RhoSquared::from_integer(60);
    let w = graphs
        .iter()
        .find(|g| rho(**g) != target)
        .map(|g| json!({"graph": g.to_string(), "rho2": rho(*g)}));
    entry(
        "second-example-six-graphs",
        "second worked example",
        verdict(w),
    )
}

fn listed_triplets(claim: &str, location: &str, rows: &[(u64, &[[u64; 3]])]) -> AuditEntry {
    let w = rows.iter().find_map(|&(perimeter, triplets)| {
        let exact = pts_with_perimeter(perimeter);
        let bad = triplets.iter().find(|&&[a, b, c]| {
            !is_pt(a, b, c)
                || a + b + c != perimeter
                || !exact
                    .iter()
                    .any(|t| t.as_array() == [a.min(b), a.max(b), c])
        })?;
        Some(json!({"perimeter": perimeter, "triplet": bad, "exact": exact}))
    });
    entry(claim, location, verdict(w))
}

/// Pairs listed in the equal-perimeter pair table.
pub const PAIR_TABLE: [(u64, [[u64; 3]; 2]); 4] = [
    (84, [[21, 28, 35], [12, 35, 37]]),
    (90, [[15, 36, 39], [9, 40, 41]]),
    (120, [[30, 40, 50], [20, 48, 52]]),
    (132, [[33, 44, 55], [11, 60, 61]]),
];

/// Rows of the equal-perimeter family table.
pub const FAMILY_TABLE: [(u64, &[[u64; 3]]); 4] = [
    (60, &[[15, 20, 25], [10, 24, 26]]),
    (120, &[[30, 40, 50], [20, 48, 52], [24, 45, 51]]),
    (
        240,
        &[[60, 80, 100], [40, 96, 104], [48, 90, 102], [15, 112, 113]],
    ),
    (
        420,
        &[
            [105, 140, 175],
            [70, 168, 182],
            [120, 126, 174],
            [60, 175, 185],
            [28, 195, 197],
        ],
    ),
];

fn pair_table(_: &Limits) -> AuditEntry {
    let rows: Vec<(u64, &[[u64; 3]])> = PAIR_TABLE.iter().map(|(p, t)| (*p, &t[..])).collect();
    listed_triplets("pair-table-triplets", "equal-perimeter pair table", &rows)
}

fn family_table(_: &Limits) -> AuditEntry {
    listed_triplets(
        "family-table-triplets",
        "equal-perimeter family table",
        &FAMILY_TABLE,
    )
}

fn s1_rho2(q1: u64, q2: u64) -> RhoSquared {
    rho(SubgraphId::garlic(2 * q2, q1))
}

fn hyp_legs(a: u64, b: u64) -> Option<u64> {
    exact_sqrt(u128::from(a * a + b * b)).map(|r| r as u64)
}

fn s1_pairs(l: &Limits) -> AuditEntry {
    let pairs: Vec<(u64, u64)> = (1..=l.leg_max)
        .flat_map(|a| (a + 1..=l.leg_max).map(move |b| (a, b)))
        .collect();
    let w = pairs
        .par_iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            pairs[i + 1..].iter().find_map(|&(c, d)| {
                let equal = s1_rho2(a, b) == s1_rho2(c, d);
                let cond = match (hyp_legs(a, b), hyp_legs(c, d)) {
                    (Some(r), Some(s)) => a + b + r == c + d + s,
                    _ => false,
                };
                (equal != cond).then(|| json!({"first": [a, b], "second": [c, d], "equal": equal}))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    entry("pair-sets-part-a", "pair-set lemma, part (a)", verdict(w))
}

fn s2_pairs(_: &Limits) -> AuditEntry {
    let values: BTreeSet<RhoSquared> = (2..=500).map(|q1| rho(SubgraphId::garlic(0, q1))).collect();
    let w = (values.len() != 499).then(|| json!({"distinct": values.len(), "pairs": 499}));
    entry("pair-sets-part-b", "pair-set lemma, part (b)", verdict(w))
}

fn s1_s2_cross(l: &Limits) -> AuditEntry {
    let pairs: Vec<(u64, u64)> = (1..=l.leg_max)
        .flat_map(|a| (a + 1..=l.leg_max).map(move |b| (a, b)))
        .collect();
    let q3_max = 2 * l.leg_max;
    let w = pairs
        .par_iter()
        .map(|&(a, b)| {
            let value = s1_rho2(a, b);
            (2..=q3_max).find_map(|q3| {
                let equal = value == rho(SubgraphId::garlic(0, q3));
                let cond = hyp_legs(a, b).is_some_and(|r| 2 * q3 == a + b + r);
                (equal != cond).then(|| json!({"s1": [a, b], "q3": q3, "equal": equal}))
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    entry("pair-sets-part-c", "pair-set lemma, part (c)", verdict(w))
}

fn bound_witness(p: u64, q: u64, bound: i64, c: u64) -> Value {
    let (b, _) = counts(p, q);
    json!({"p": p, "q": q, "k": q.min(p / 2), "b": b, "bound": bound, "c": c})
}

fn lower_bound_statement(l: &Limits) -> AuditEntry {
    let grid: Vec<_> = cells(l.p_max, l.q_max)
        .into_iter()
        .filter(|&(p, q)| q.min(p / 2) >= 2)
        .collect();
    let w = first_witness(&grid, |p, q| {
        let bounds = paper_lower_bound(p, q).ok()?;
        let (_, c) = counts(p, q);
        (bounds.statement > c as i64).then(|| bound_witness(p, q, bounds.statement, c))
    });
    entry(
        "lower-bound-statement",
        "lower bound theorem statement",
        verdict(w),
    )
}

fn lower_bound_statement_small_k(l: &Limits) -> AuditEntry {
    let grid: Vec<_> = cells(l.p_max, l.q_max)
        .into_iter()
        .filter(|&(p, q)| q.min(p / 2) <= 1)
        .collect();
    let w = first_witness(&grid, |p, q| {
        let bounds = paper_lower_bound(p, q).ok()?;
        let (_, c) = counts(p, q);
        (bounds.statement > c as i64).then(|| bound_witness(p, q, bounds.statement, c))
    });
    entry(
        "lower-bound-statement-k-at-most-1",
        "lower bound theorem statement",
        verdict(w),
    )
}

fn lower_bound_raw(l: &Limits) -> AuditEntry {
    let grid = cells(l.p_max, l.q_max);
    let w = first_witness(&grid, |p, q| {
        let bounds = paper_lower_bound(p, q).ok()?;
        let (_, c) = counts(p, q);
        (bounds.statement_raw > c as i64).then(|| bound_witness(p, q, bounds.statement_raw, c))
    });
    let status = if w.is_some() {
        ClaimStatus::EdgeCase
    } else {
        ClaimStatus::Confirmed
    };
    entry(
        "lower-bound-unclamped-correction",
        "lower bound theorem statement",
        (status, w),
    )
}

fn lower_bound_proof(l: &Limits) -> AuditEntry {
    let grid = cells(l.p_max, l.q_max);
    let w = first_witness(&grid, |p, q| {
        let bounds = paper_lower_bound(p, q).ok()?;
        let (_, c) = counts(p, q);
        (bounds.proof > c as i64).then(|| bound_witness(p, q, bounds.proof, c))
    });
    entry("lower-bound-proof", "lower bound theorem proof", verdict(w))
}

fn lower_bound_equality(l: &Limits) -> AuditEntry {
    let grid: Vec<_> = cells(l.p_max, l.q_max)
        .into_iter()
        .filter(|&(p, _)| p >= 1)
        .collect();
    let w = first_witness(&grid, |p, q| {
        let bounds = paper_lower_bound(p, q).ok()?;
        let (_, c) = counts(p, q);
        let claimed = p == 1 || p == 2 || q == 1;
        let holds = bounds.statement == c as i64;
        (claimed != holds).then(|| {
            json!({"p": p, "q": q, "bound": bounds.statement, "c": c, "equality_claimed": claimed})
        })
    });
    entry(
        "lower-bound-equality-cases",
        "lower bound theorem statement",
        verdict(w),
    )
}

fn non_redundant(claim: &str, l: &Limits, family: Subfamily) -> AuditEntry {
    let w = (1..=l.offset_max).find_map(|free| {
        let (p, q) = family.params(free);
        if p + q < 2 {
            return None;
        }
        let (b, c) = counts(p, q);
        (b != c).then(|| json!({"graph": format!("G_{{{p},{q}}}"), "b": b, "c": c}))
    });
    entry(claim, "non-redundancy corollary", verdict(w))
}

fn corollary_1q(l: &Limits) -> AuditEntry {
    non_redundant("non-redundant-p-1", l, Subfamily::FixedP(1))
}

fn corollary_2q(l: &Limits) -> AuditEntry {
    non_redundant("non-redundant-p-2", l, Subfamily::FixedP(2))
}

fn corollary_p1(l: &Limits) -> AuditEntry {
    non_redundant("non-redundant-q-1", l, Subfamily::FixedQ(1))
}

fn table_offset(l: &Limits, family: Subfamily) -> AuditEntry {
    let claimed = family
        .claimed_offset()
        .expect("table families carry an offset");
    let rows: Vec<(u64, u64, u64, u64)> = (1..=l.offset_max)
        .map(|free| family.params(free))
        .filter(|&(p, q)| p + q >= 2)
        .map(|(p, q)| {
            let (b, c) = counts(p, q);
            (p, q, b, c)
        })
        .collect();
    let matches_at: Vec<[u64; 2]> = rows
        .iter()
        .filter(|r| r.2 - r.3 == claimed)
        .map(|r| [r.0, r.1])
        .collect();
    let w = rows
        .iter()
        .find(|r| r.2 - r.3 != claimed)
        .map(|&(p, q, b, c)| {
            json!({"p": p, "q": q, "b": b, "c": c, "offset": b - c, "claimed_offset": claimed,
               "family": family.label(), "matches_at": matches_at})
        });
    let claim = match family {
        Subfamily::FixedP(p) => format!("subfamily-offset-p-{p}"),
        Subfamily::FixedQ(q) => format!("subfamily-offset-q-{q}"),
    };
    entry(&claim, "subfamily table", verdict(w))
}

fn balanced_finite_bound(l: &Limits) -> AuditEntry {
    let w = (1..=l.offset_max).find_map(|q| {
        let (b, c) = counts(2 * q, q);
        let ratio = b as f64 / c as f64;
        let bound = balanced_bound_ratio(q);
        (ratio > bound + 1e-12)
            .then(|| json!({"q": q, "b": b, "c": c, "ratio": ratio, "bound_ratio": bound}))
    });
    entry(
        "balanced-ratio-bound",
        "redundancy index theorem",
        verdict(w),
    )
}

fn index_at_most_four_thirds(l: &Limits) -> AuditEntry {
    let mut grid = cells(l.ratio_max.0, l.ratio_max.1);
    grid.extend(l.balanced_q.iter().map(|&q| (2 * q, q)));
    grid.sort_by_key(|&(p, q)| (p + q, p));
    grid.dedup();
    let w = first_witness(&grid, |p, q| {
        let (b, c) = counts(p, q);
        (3 * b > 4 * c).then(|| json!({"p": p, "q": q, "b": b, "c": c}))
    });
    entry(
        "redundancy-index-at-most-4/3",
        "redundancy index theorem",
        verdict(w),
    )
}

fn balanced_limit(l: &Limits) -> AuditEntry {
    let rows: Vec<Value> = l
        .balanced_q
        .iter()
        .map(|&q| {
            let (b, c) = counts(2 * q, q);
            json!({"q": q, "ratio": b as f64 / c as f64})
        })
        .collect();
    let last = rows.last().and_then(|r| r["ratio"].as_f64()).unwrap_or(0.0);
    let w = ((last - 4.0 / 3.0).abs() >= 0.05).then(|| json!({"samples": rows}));
    entry(
        "balanced-ratio-limit-4/3",
        "redundancy index theorem",
        verdict(w),
    )
}

fn count_estimate_claim(l: &Limits) -> AuditEntry {
    let samples: Vec<Value> = l
        .count_n
        .iter()
        .map(|&n| {
            let exact = count_pts_legs_leq(n).unwrap_or(0);
            json!({"n": n, "exact": exact, "estimate": count_estimate(n)})
        })
        .collect();
    entry(
        "leg-count-estimate",
        "leg-count estimate",
        (
            ClaimStatus::EdgeCase,
            Some(json!({
                "constant": count_estimate_constant(),
                "log_base": "natural",
                "samples": samples,
                "note": "log base unstated; the leading term is not close to exact counts at these n",
            })),
        ),
    )
}

const CHECKS: &[Check] = &[
    subgraph_count,
    subgraph_count_degenerate,
    characteristic_equation,
    radius_formula,
    induced_monotone,
    garlic_pairs,
    star_garlic,
    zero_pendant,
    quadruple_radius,
    quadruple_exactly_four,
    common_radius_family,
    example_sqrt60,
    example_smallest_shared_perimeter,
    example_six_graphs,
    pair_table,
    family_table,
    s1_pairs,
    s2_pairs,
    s1_s2_cross,
    lower_bound_statement,
    lower_bound_statement_small_k,
    lower_bound_raw,
    lower_bound_proof,
    lower_bound_equality,
    corollary_1q,
    corollary_2q,
    corollary_p1,
    |l| table_offset(l, Subfamily::FixedP(1)),
    |l| table_offset(l, Subfamily::FixedP(2)),
    |l| table_offset(l, Subfamily::FixedQ(1)),
    |l| table_offset(l, Subfamily::FixedP(3)),
    |l| table_offset(l, Subfamily::FixedP(4)),
    |l| table_offset(l, Subfamily::FixedP(5)),
    |l| table_offset(l, Subfamily::FixedQ(2)),
    |l| table_offset(l, Subfamily::FixedP(6)),
    |l| table_offset(l, Subfamily::FixedQ(3)),
    balanced_finite_bound,
    index_at_most_four_thirds,
    balanced_limit,
    count_estimate_claim,
];

/// Runs every claim check on `grid`; entries are sorted by claim id.
pub fn audit_paper_claims(grid: AuditGrid) -> Vec<AuditEntry> {
    let limits = grid.limits();
    let mut out: Vec<AuditEntry> = CHECKS.par_iter().map(|check| check(&limits)).collect();
    out.sort_by(|a, b| a.claim.cmp(&b.claim));
    out
}

/// True when at least one entry is refuted.
pub fn has_refutations(entries: &[AuditEntry]) -> bool {
    entries.iter().any(|e| e.status == ClaimStatus::Refuted)
}
