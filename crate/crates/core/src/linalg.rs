//! Numeric spectral tools: Perron root by power iteration, exact characteristic
//! polynomials of small adjacency matrices, and real-root isolation for
//! polynomials whose roots are all real.

use crate::error::GraphError;
use crate::graph::{iter_bits, Graph};

/// Iteration cap for [`spectral_radius_numeric`].
pub const MAX_POWER_ITERATIONS: usize = 1_000_000;

/// Largest adjacency eigenvalue of a connected graph.
///
/// Iterates `x ← (A + I)x` from the all-ones vector. The unit shift makes the
/// Perron root strictly dominant in modulus, which plain iteration lacks on
/// bipartite graphs (`−ρ` is then also an eigenvalue). Stops when successive
/// Rayleigh quotients of `A` differ by less than `tol`.
pub fn spectral_radius_numeric(g: &Graph, tol: f64) -> Result<f64, GraphError> {
    let n = g.order();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if n == 1 {
        return Ok(0.0);
    }
    Ok(power_iterate(n, tol, |x, out| mul_adjacency(g, x, out)))
}

/// [`spectral_radius_numeric`] for a connected graph given as neighbor lists,
/// with no order limit. Connectivity is the caller's responsibility.
pub fn spectral_radius_lists(neighbors: &[Vec<usize>], tol: f64) -> Result<f64, GraphError> {
    match neighbors.len() {
        0 => Err(GraphError::Empty),
        1 => Ok(0.0),
        n => Ok(power_iterate(n, tol, |x, out| {
            for (o, nb) in out.iter_mut().zip(neighbors) {
                *o = nb.iter().map(|&w| x[w]).sum();
            }
        })),
    }
}

fn power_iterate(n: usize, tol: f64, mul: impl Fn(&[f64], &mut [f64])) -> f64 {
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0; n];
    let mut prev = f64::NEG_INFINITY;
    for _ in 0..MAX_POWER_ITERATIONS {
        mul(&x, &mut ax);
        // x is unit length, so the Rayleigh quotient is x·Ax.
        let rq: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        if (rq - prev).abs() < tol {
            return rq;
        }
        prev = rq;
        let norm = x
            .iter()
            .zip(&ax)
            .map(|(xi, axi)| (xi + axi) * (xi + axi))
            .sum::<f64>()
            .sqrt();
        for (xi, axi) in x.iter_mut().zip(&ax) {
            *xi = (*xi + axi) / norm;
        }
    }
    prev
}

fn mul_adjacency(g: &Graph, x: &[f64], out: &mut [f64]) {
    for (v, o) in out.iter_mut().enumerate() {
        *o = iter_bits(g.neighbors(v)).map(|w| x[w]).sum();
    }
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier in exact
/// integer arithmetic. Coefficients are in ascending order of power.
///
/// Returns `None` if an intermediate value overflows `i128`.
pub fn characteristic_polynomial(g: &Graph) -> Option<Vec<i128>> {
    let n = g.order();
    let a: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(g.has_edge(i, j))).collect())
        .collect();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    // m holds M_k; starts at M_0 = 0.
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = vec![vec![0i128; n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = 0i128;
                for t in iter_bits(g.neighbors(i)) {
                    acc = acc.checked_add(m[t][j])?;
                }
                *cell = acc;
            }
            row[i] = row[i].checked_add(coeffs[n - k + 1])?;
        }
        m = next;
        // c_{n−k} = −tr(A·M_k) / k
        let mut trace = 0i128;
        for i in 0..n {
            for t in 0..n {
                if a[i][t] != 0 {
                    trace = trace.checked_add(m[t][i])?;
                }
            }
        }
        coeffs[n - k] = -trace / k as i128;
    }
    Some(coeffs)
}

/// Evaluates an ascending-coefficient polynomial by Horner's rule.
pub fn eval_poly(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as f64)
        .collect()
}

fn trim(coeffs: &[f64]) -> &[f64] {
    let mut end = coeffs.len();
    while end > 0 && coeffs[end - 1] == 0.0 {
        end -= 1;
    }
    &coeffs[..end]
}

fn cauchy_bound(coeffs: &[f64]) -> f64 {
    let lead = coeffs[coeffs.len() - 1].abs();
    1.0 + coeffs[..coeffs.len() - 1]
        .iter()
        .map(|c| c.abs() / lead)
        .fold(0.0, f64::max)
}

fn bisect(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = eval_poly(coeffs, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = eval_poly(coeffs, mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All roots, ascending, of a polynomial with simple real roots only.
///
/// Roots of `f` are separated by roots of `f'` (Rolle), so recursion on the
/// derivative gives intervals each holding at most one root, located by
/// bisection.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let coeffs = trim(coeffs);
    match coeffs.len() {
        0 | 1 => return Vec::new(),
        2 => return vec![-coeffs[0] / coeffs[1]],
        _ => {}
    }
    let bound = cauchy_bound(coeffs);
    let mut points = vec![-bound];
    points.extend(real_roots(&derivative(coeffs)));
    points.push(bound);
    let mut roots = Vec::new();
    for w in points.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let (f_lo, f_hi) = (eval_poly(coeffs, lo), eval_poly(coeffs, hi));
        if f_lo == 0.0 {
            if roots.last() != Some(&lo) {
                roots.push(lo);
            }
        } else if f_hi != 0.0 && (f_lo < 0.0) != (f_hi < 0.0) {
            roots.push(bisect(coeffs, lo, hi));
        }
    }
    if eval_poly(coeffs, bound) == 0.0 {
        roots.push(bound);
    }
    roots
}

/// Largest root of a polynomial with only real roots whose largest root is
/// simple, e.g. the characteristic polynomial of a connected graph.
pub fn largest_real_root(coeffs: &[f64]) -> f64 {
    let coeffs = trim(coeffs);
    if coeffs.len() == 2 {
        return -coeffs[0] / coeffs[1];
    }
    let crit = real_roots(&derivative(coeffs));
    let lo = crit.last().copied().unwrap_or(-cauchy_bound(coeffs));
    let hi = cauchy_bound(coeffs);
    let (f_lo, f_hi) = (eval_poly(coeffs, lo), eval_poly(coeffs, hi));
    if f_lo == 0.0 || (f_lo < 0.0) == (f_hi < 0.0) {
        return lo;
    }
    bisect(coeffs, lo, hi)
}

/// Perron root through the exact characteristic polynomial; an independent
/// route to [`spectral_radius_numeric`] for small graphs.
pub fn spectral_radius_charpoly(g: &Graph) -> Option<f64> {
    if g.order() == 1 {
        return Some(0.0);
    }
    let coeffs: Vec<f64> = characteristic_polynomial(g)?
        .into_iter()
        .map(|c| c as f64)
        .collect();
    Some(largest_real_root(&coeffs))
}
