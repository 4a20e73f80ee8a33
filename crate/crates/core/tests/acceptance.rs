//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use serde_json::Value;
use specred_core::audit::{FAMILY_TABLE, PAIR_TABLE};
use specred_core::garlic::{
    b_formula, build, char_poly, quadruple, rho2, rho_numeric, same_radius_classified,
    subgraph_catalog,
};
use specred_core::pythagorean::{
    count_estimate, count_pts_legs_leq, equal_perimeter_family, garlic_family_common_radius,
    pts_with_perimeter,
};
use specred_core::redundancy::{census, census_counts, paper_lower_bound};
use specred_core::subgraphs::{b_c_r_numeric, enumerate_connected_induced, RADIUS_TOL};
use specred_core::{
    audit_paper_claims, AuditEntry, AuditGrid, ClaimStatus, GarlicParams, RhoSquared, SubgraphId,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_secs as f64, || {
        format!("took {elapsed:.2?}, limit {limit_secs} s")
    })
}

fn gp(p: u64, q: u64) -> GarlicParams {
    GarlicParams::new(p, q).unwrap()
}

fn subgraph_count_oracle() -> Outcome {
    let t = Instant::now();
    let mut cells = 0;
    for p in 0..=6 {
        for q in 1..=5 {
            if p + q < 2 {
                continue;
            }
            let enumerated = enumerate_connected_induced(&build(gp(p, q)).unwrap())
                .unwrap()
                .len();
            let formula = b_formula(p, q).unwrap();
            ensure(enumerated as u64 == formula, || {
                format!("G_{{{p},{q}}}: enumerated {enumerated}, formula {formula}")
            })?;
            cells += 1;
        }
    }
    within(t.elapsed(), 10)?;
    Ok(format!("{cells} cells in {:.2?}", t.elapsed()))
}

fn edge_case_0_1(audit: &[AuditEntry]) -> Outcome {
    let enumerated = enumerate_connected_induced(&build(gp(0, 1)).unwrap())
        .unwrap()
        .len();
    ensure(enumerated == 3, || format!("enumeration gave {enumerated}"))?;
    ensure(b_formula(0, 1).is_err(), || {
        "b_formula accepted (0,1)".into()
    })?;
    let e = find(audit, "subgraph-count-at-0-1");
    ensure(e.status == ClaimStatus::EdgeCase, || {
        format!("status {}", e.status.as_str())
    })?;
    Ok("enumeration 3, expression 2, formula refuses".into())
}

fn closed_form_vs_numeric() -> Outcome {
    let t = Instant::now();
    let mut worst = 0f64;
    let grid = (1..=40)
        .map(|p| (p, 0))
        .chain((0..=40).flat_map(|p| (1..=40).map(move |q| (p, q))));
    for (p, q) in grid {
        let params = gp(p, q);
        let closed = rho2(params).unwrap().sqrt_f64();
        let numeric = rho_numeric(params, RADIUS_TOL).unwrap();
        worst = worst.max((closed - numeric).abs());
    }
    ensure(worst <= 1e-9, || format!("max deviation {worst:e}"))?;
    within(t.elapsed(), 5)?;
    Ok(format!("max deviation {worst:.1e} in {:.2?}", t.elapsed()))
}

/// Roots of the expanded polynomial read off its coefficients: a zero of
/// multiplicity equal to the lowest nonzero index, times a polynomial in `x²`.
fn roots_of_expansion(coeffs: &[i128]) -> Vec<f64> {
    let zeros = coeffs.iter().position(|&c| c != 0).unwrap();
    let rest = &coeffs[zeros..];
    let ys: Vec<f64> = match rest.len() - 1 {
        2 => vec![-rest[0] as f64],
        4 => {
            let (b, c) = (rest[2] as f64, rest[0] as f64);
            let d = (b * b - 4.0 * c).sqrt();
            vec![(-b + d) / 2.0, (-b - d) / 2.0]
        }
        d => panic!("unexpected residual degree {d}"),
    };
    let mut roots = vec![0.0; zeros];
    for y in ys {
        roots.push(y.sqrt());
        roots.push(-y.sqrt());
    }
    roots.sort_by(f64::total_cmp);
    roots
}

fn characteristic_polynomial_roots() -> Outcome {
    let mut worst = 0f64;
    for p in 0..=10 {
        for q in 1..=10 {
            let g = build(gp(p, q)).unwrap();
            let n = g.order();
            let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
            let mut eig: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
            eig.sort_by(f64::total_cmp);
            let roots = roots_of_expansion(&char_poly(p, q).unwrap());
            ensure(roots.len() == n, || {
                format!("G_{{{p},{q}}}: {} roots", roots.len())
            })?;
            for (x, y) in eig.iter().zip(&roots) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    ensure(worst <= 1e-8, || format!("max deviation {worst:e}"))?;
    Ok(format!("max deviation {worst:.1e}"))
}

fn exact_vs_numeric_census() -> Outcome {
    let mut cells = 0;
    for p in 0..=11u64 {
        for q in 1..=12 - p {
            if p + q < 2 {
                continue;
            }
            let exact = census(p, q).unwrap();
            let numeric = b_c_r_numeric(&build(gp(p, q)).unwrap(), 1e-9).unwrap();
            ensure(
                exact.c == numeric.c as u64 && exact.b == numeric.b as u64,
                || {
                    format!(
                        "G_{{{p},{q}}}: exact (b,c)=({},{}), numeric ({},{})",
                        exact.b, exact.c, numeric.b, numeric.c
                    )
                },
            )?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells agree"))
}

fn quadruples() -> Outcome {
    let t = Instant::now();
    let mut count = 0;
    for triplet in (1..=300).flat_map(pts_with_perimeter) {
        let ids = quadruple(triplet).unwrap();
        let target = 2 * u128::from(triplet.perimeter());
        for id in ids {
            let r = id.rho2().unwrap();
            ensure(r.a() == target && r.b() == 0, || {
                format!("{id}: {r} for {triplet:?}")
            })?;
        }
        let distinct: BTreeSet<_> = ids.iter().collect();
        ensure(distinct.len() == 4, || {
            format!("repeated ids for {triplet:?}")
        })?;
        count += 1;
    }
    within(t.elapsed(), 1)?;
    Ok(format!("{count} triplets"))
}

fn example_reproduction() -> Outcome {
    let ids = [
        SubgraphId::garlic(40, 15),
        SubgraphId::garlic(30, 20),
        SubgraphId::garlic(48, 10),
        SubgraphId::garlic(20, 24),
        SubgraphId::garlic(0, 30),
        SubgraphId::star(61),
    ];
    for id in ids {
        let r = id.rho2().unwrap();
        ensure(r.a() == 120 && r.b() == 0, || format!("{id}: {r}"))?;
    }
    Ok("six graphs with rho^2 = 60".into())
}

fn as_set(rows: &[[u64; 3]]) -> BTreeSet<[u64; 3]> {
    rows.iter().copied().collect()
}

fn exact_set(perimeter: u64) -> BTreeSet<[u64; 3]> {
    pts_with_perimeter(perimeter)
        .iter()
        .map(|t| t.as_array())
        .collect()
}

fn perimeter_tables() -> Outcome {
    let mut notes = Vec::new();
    // the pair table shows one equal-perimeter pair per row, so its rows must
    // be contained in the exact set; the family table lists whole sets
    for (p, rows) in PAIR_TABLE {
        let exact = exact_set(p);
        let listed = as_set(&rows);
        ensure(listed.is_subset(&exact), || {
            format!("pair table P={p}: {listed:?} vs {exact:?}")
        })?;
        if listed != exact {
            notes.push(format!("P={p} lists {} of {}", listed.len(), exact.len()));
        }
    }
    for (p, rows) in FAMILY_TABLE {
        let exact = exact_set(p);
        ensure(as_set(rows) == exact, || {
            format!("family table P={p}: {rows:?} vs {exact:?}")
        })?;
    }
    let extra = if notes.is_empty() {
        String::new()
    } else {
        format!("; pair table {}", notes.join(", "))
    };
    Ok(format!("family table exact at 60/120/240/420{extra}"))
}

fn equal_perimeter_construction() -> Outcome {
    let t = Instant::now();
    for m in 1..=8 {
        let fam = equal_perimeter_family(m).unwrap();
        let distinct: BTreeSet<_> = fam.triplets.iter().map(|t| t.as_array()).collect();
        ensure(distinct.len() == m, || {
            format!("m={m}: {} distinct", distinct.len())
        })?;
        ensure(
            fam.triplets.iter().all(|t| t.perimeter() == fam.perimeter),
            || format!("m={m}: perimeters differ"),
        )?;
        let ids = garlic_family_common_radius(m).unwrap();
        let distinct_ids: BTreeSet<_> = ids.iter().collect();
        ensure(
            ids.len() == 2 * m + 1 && distinct_ids.len() == ids.len(),
            || format!("m={m}: {} ids, {} distinct", ids.len(), distinct_ids.len()),
        )?;
        let values: BTreeSet<RhoSquared> = ids.iter().map(|id| id.rho2().unwrap()).collect();
        ensure(values.len() == 1, || {
            format!("m={m}: {} radii", values.len())
        })?;
    }
    within(t.elapsed(), 1)?;
    Ok(format!(
        "m = 1..8, P(8) = {}",
        equal_perimeter_family(8).unwrap().perimeter
    ))
}

fn balanced_convergence() -> Outcome {
    let t = Instant::now();
    let r200 = census(400, 200).unwrap().ratio.to_f64();
    ensure((r200 - 4.0 / 3.0).abs() <= 0.05, || {
        format!("r(G_400,200) = {r200}")
    })?;
    let mut min = f64::INFINITY;
    for q in 50..=200 {
        let (b, c) = census_counts(2 * q, q).unwrap();
        let r = b as f64 / c as f64;
        ensure(r > 1.30, || format!("r(G_{{{},{q}}}) = {r}", 2 * q))?;
        min = min.min(r);
    }
    within(t.elapsed(), 60)?;
    Ok(format!(
        "r(G_400,200) = {r200:.6}, min r on q=50..200 is {min:.6}"
    ))
}

fn classifier_completeness() -> Outcome {
    let catalog = subgraph_catalog(12, 6).unwrap();
    let mut pairs = 0;
    let mut equal = 0;
    for (i, &a) in catalog.iter().enumerate() {
        for &b in &catalog[i + 1..] {
            let surd_eq = a.rho2().unwrap() == b.rho2().unwrap();
            let classified = same_radius_classified(a, b).is_equal();
            ensure(surd_eq == classified, || {
                format!("{a} vs {b}: surd {surd_eq}, rule {classified}")
            })?;
            pairs += 1;
            equal += usize::from(surd_eq);
        }
    }
    Ok(format!("{pairs} pairs, {equal} equal, 0 mismatches"))
}

fn pair_set_lemma() -> Outcome {
    // (b): S2 pairs {S_{2q+1}, G_{0,q}} have squared radius 2q
    let mut seen = BTreeSet::new();
    for q1 in 2..=500 {
        let a = SubgraphId::star(2 * q1 + 1).rho2().unwrap();
        let b = SubgraphId::garlic(0, q1).rho2().unwrap();
        ensure(a == b, || format!("S2 pair at q={q1} does not collide"))?;
        ensure(seen.insert(a), || format!("S2 value at q={q1} repeats"))?;
    }
    // perimeter index of triplets with both legs at most 60
    let mut perimeter_of: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for t in (1..=400).flat_map(pts_with_perimeter) {
        if t.b() <= 60 {
            perimeter_of.insert(t.legs(), t.perimeter());
        }
    }
    let s1 = |q1: u64, q2: u64| SubgraphId::garlic(2 * q2, q1).rho2().unwrap();
    let legs: Vec<(u64, u64)> = (1..=60)
        .flat_map(|a| (a + 1..=60).map(move |b| (a, b)))
        .collect();
    // (a): distinct S1 pairs collide iff both are triplet legs of one perimeter
    for (i, &(a, b)) in legs.iter().enumerate() {
        for &(c, d) in &legs[i + 1..] {
            let collide = s1(a, b) == s1(c, d);
            let index = matches!(
                (perimeter_of.get(&(a, b)), perimeter_of.get(&(c, d))),
                (Some(x), Some(y)) if x == y
            );
            ensure(collide == index, || format!("S1 ({a},{b}) vs ({c},{d})"))?;
        }
    }
    // (c): an S1 pair meets an S2 pair iff 2q3 is the triplet's perimeter
    for &(a, b) in &legs {
        for q3 in 2..=120 {
            let collide = s1(a, b) == SubgraphId::garlic(0, q3).rho2().unwrap();
            let index = perimeter_of.get(&(a, b)) == Some(&(2 * q3));
            ensure(collide == index, || format!("S1 ({a},{b}) vs S2 q={q3}"))?;
        }
    }
    Ok(format!(
        "{} leg pairs, {} triplets indexed",
        legs.len(),
        perimeter_of.len()
    ))
}

fn find<'a>(audit: &'a [AuditEntry], claim: &str) -> &'a AuditEntry {
    audit
        .iter()
        .find(|e| e.claim == claim)
        .unwrap_or_else(|| panic!("no claim {claim}"))
}

fn refuted_with<'a>(audit: &'a [AuditEntry], claim: &str) -> Result<&'a Value, String> {
    let e = find(audit, claim);
    ensure(e.status == ClaimStatus::Refuted, || {
        format!("{claim}: {}", e.status.as_str())
    })?;
    e.witness
        .as_ref()
        .ok_or_else(|| format!("{claim}: no witness"))
}

fn audit_refutations(audit: &[AuditEntry]) -> Outcome {
    let w = refuted_with(audit, "lower-bound-statement")?;
    ensure(
        w["p"] == 4 && w["q"] == 2 && w["bound"] == 14 && w["c"] == 13,
        || format!("{w}"),
    )?;
    let exact = census(4, 2).unwrap();
    ensure(
        exact.c == 13 && paper_lower_bound(4, 2).unwrap().statement == 14,
        || "independent (4,2) values differ".into(),
    )?;

    let w = refuted_with(audit, "non-redundant-p-2")?;
    ensure(
        w["graph"] == "G_{2,2}" && w["b"] == 10 && w["c"] == 9,
        || format!("{w}"),
    )?;
    let exact = census(2, 2).unwrap();
    ensure((exact.b, exact.c) == (10, 9), || {
        "independent G_{2,2} values differ".into()
    })?;

    let w = refuted_with(audit, "first-example-radius")?;
    ensure(
        w["exact_rho2"]["A"] == 60 && w["exact_rho2"]["B"] == 0,
        || format!("{w}"),
    )?;
    for id in [SubgraphId::garlic(10, 12), SubgraphId::garlic(15, 10)] {
        let r = id.rho2().unwrap();
        ensure(r == RhoSquared::from_integer(30), || format!("{id}: {r}"))?;
    }
    Ok("(4,2) bound 14 > c 13; G_{2,2} b=10 c=9; G_{10,12}, G_{15,10} rho^2 = 30".into())
}

fn triplet_count() -> Outcome {
    let c12 = count_pts_legs_leq(12).unwrap();
    ensure(c12 == 4, || format!("count(12) = {c12}"))?;
    let mut parts = Vec::new();
    for n in [500, 1000, 2000] {
        let (a, b) = (
            count_pts_legs_leq(n).unwrap(),
            count_pts_legs_leq(2 * n).unwrap(),
        );
        let growth = b as f64 / a as f64;
        ensure((2.0..=2.6).contains(&growth), || {
            format!("count({})/count({n}) = {growth}", 2 * n)
        })?;
        parts.push(format!(
            "n={n}: {a} (estimate {:.0}), growth {growth:.3}",
            count_estimate(n)
        ));
    }
    Ok(parts.join("; "))
}

fn determinism() -> Outcome {
    let once = || serde_json::to_vec(&census(24, 12).unwrap()).unwrap();
    let (a, b) = (once(), once());
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let c = pool.install(once);
    ensure(a == b && a == c, || {
        "census JSON differs between runs".into()
    })?;
    Ok(format!("{} bytes, identical across 3 runs", a.len()))
}

fn main() {
    let audit = audit_paper_claims(AuditGrid::Small);
    let criteria: Vec<Criterion> = vec![
        ("subgraph-count oracle", Box::new(subgraph_count_oracle)),
        ("edge case (0,1)", Box::new(|| edge_case_0_1(&audit))),
        (
            "closed form vs numeric radius",
            Box::new(closed_form_vs_numeric),
        ),
        (
            "characteristic polynomial",
            Box::new(characteristic_polynomial_roots),
        ),
        ("exact vs numeric census", Box::new(exact_vs_numeric_census)),
        ("quadruples", Box::new(quadruples)),
        ("example reproduction", Box::new(example_reproduction)),
        ("perimeter tables", Box::new(perimeter_tables)),
        (
            "equal-perimeter construction",
            Box::new(equal_perimeter_construction),
        ),
        (
            "balanced-family convergence",
            Box::new(balanced_convergence),
        ),
        ("classifier completeness", Box::new(classifier_completeness)),
        ("pair-set lemma", Box::new(pair_set_lemma)),
        ("audit refutations", Box::new(|| audit_refutations(&audit))),
        ("triplet-count oracle", Box::new(triplet_count)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
