//! Exact rational linear programming via a dense two-phase simplex with
//! Bland's rule, plus the convex-hull queries built on it.
//!
//! Problems here are tiny (at most a handful of equality constraints), so a
//! naive tableau with exact pivoting is both fast enough and free of any
//! numerical tolerance.

use num_traits::{One, Signed, Zero};

use crate::arith::Rat;

#[derive(Clone, Debug, PartialEq)]
pub enum LpResult {
    Optimal { value: Rat, x: Vec<Rat> },
    Infeasible,
    Unbounded,
}

/// Minimizes c.x subject to A x = b, x >= 0.
pub fn solve_min(c: &[Rat], a: &[Vec<Rat>], b: &[Rat]) -> LpResult {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Normalize right-hand sides to be nonnegative.
    let mut rows: Vec<Vec<Rat>> = a.to_vec();
    let mut rhs: Vec<Rat> = b.to_vec();
    for i in 0..m {
        if rhs[i].is_negative() {
            for v in &mut rows[i] {
                *v = -std::mem::take(v);
            }
            rhs[i] = -std::mem::take(&mut rhs[i]);
        }
    }

    // Phase 1: artificial variables n..n+m with an identity basis.
    for (i, row) in rows.iter_mut().enumerate() {
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let phase1_cost: Vec<Rat> = (0..n + m)
        .map(|j| if j < n { Rat::zero() } else { Rat::one() })
        .collect();
    if pivot_to_optimum(&mut rows, &mut rhs, &mut basis, &phase1_cost).is_none() {
        // Phase 1 is bounded below by zero; unboundedness cannot happen.
        unreachable!("phase-1 objective is bounded");
    }
    let phase1_value = objective_value(&rhs, &basis, &phase1_cost);
    if !phase1_value.is_zero() {
        return LpResult::Infeasible;
    }

    // Remove artificial variables from the basis, dropping redundant rows.
    let mut i = 0;
    while i < rows.len() {
        if basis[i] >= n {
            match (0..n).find(|&j| !rows[i][j].is_zero()) {
                Some(j) => pivot(&mut rows, &mut rhs, &mut basis, i, j),
                None => {
                    rows.remove(i);
                    rhs.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in &mut rows {
        row.truncate(n);
    }

    // Phase 2 on the original objective.
    if pivot_to_optimum(&mut rows, &mut rhs, &mut basis, c).is_none() {
        return LpResult::Unbounded;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        x[j] = rhs[i].clone();
    }
    let value = objective_value(&rhs, &basis, c);
    LpResult::Optimal { value, x }
}

fn objective_value(rhs: &[Rat], basis: &[usize], cost: &[Rat]) -> Rat {
    let mut v = Rat::zero();
    for (i, &j) in basis.iter().enumerate() {
        v += &cost[j] * &rhs[i];
    }
    v
}

/// Runs Bland-rule pivots until optimality; None signals an unbounded ray.
fn pivot_to_optimum(
    rows: &mut Vec<Vec<Rat>>,
    rhs: &mut Vec<Rat>,
    basis: &mut Vec<usize>,
    cost: &[Rat],
) -> Option<()> {
    let ncols = cost.len();
    loop {
        // Reduced cost of column j: c_j - sum_i c_basis[i] * rows[i][j].
        let mut entering = None;
        for j in 0..ncols {
            if basis.contains(&j) {
                continue;
            }
            let mut reduced = cost[j].clone();
            for (i, &bj) in basis.iter().enumerate() {
                if !cost[bj].is_zero() && !rows[i][j].is_zero() {
                    reduced -= &cost[bj] * &rows[i][j];
                }
            }
            if reduced.is_negative() {
                entering = Some(j);
                break; // Bland: smallest eligible index
            }
        }
        let Some(j) = entering else {
            return Some(());
        };
        let mut leaving: Option<(usize, Rat)> = None;
        for i in 0..rows.len() {
            if rows[i][j].is_positive() {
                let ratio = &rhs[i] / &rows[i][j];
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && basis[i] < basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leaving else {
            return None;
        };
        pivot(rows, rhs, basis, r, j);
    }
}

fn pivot(rows: &mut [Vec<Rat>], rhs: &mut [Rat], basis: &mut [usize], r: usize, j: usize) {
    let p = rows[r][j].clone();
    for v in rows[r].iter_mut() {
        *v = std::mem::take(v) / &p;
    }
    rhs[r] = std::mem::take(&mut rhs[r]) / &p;
    for i in 0..rows.len() {
        if i == r || rows[i][j].is_zero() {
            continue;
        }
        let f = rows[i][j].clone();
        for k in 0..rows[i].len() {
            let t = &rows[r][k] * &f;
            rows[i][k] -= t;
        }
        let t = &rhs[r] * &f;
        rhs[i] -= t;
    }
    basis[r] = j;
}

/// Whether x lies in the convex hull of the given points.
pub fn in_hull(points: &[Vec<Rat>], x: &[Rat]) -> bool {
    let m = points.len();
    if m == 0 {
        return false;
    }
    let n = x.len();
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    for k in 0..n {
        a.push(points.iter().map(|p| p[k].clone()).collect());
    }
    a.push(vec![Rat::one(); m]);
    let mut b: Vec<Rat> = x.to_vec();
    b.push(Rat::one());
    let c = vec![Rat::zero(); m];
    !matches!(solve_min(&c, &a, &b), LpResult::Infeasible)
}

/// Whether x lies in the interior of the convex hull of the given points.
///
/// Uses the fact that the relative interior of a polytope is the set of
/// strictly positive convex combinations of its points; for full-dimensional
/// hulls this is the topological interior. Maximizing the minimum weight
/// epsilon and testing epsilon > 0 decides strict positivity exactly.
pub fn in_hull_interior(points: &[Vec<Rat>], x: &[Rat]) -> bool {
    let m = points.len();
    if m == 0 {
        return false;
    }
    let n = x.len();
    // Variables: mu_1..mu_m >= 0 and eps >= 0, with lambda_i = mu_i + eps.
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(n + 1);
    for k in 0..n {
        let mut row: Vec<Rat> = points.iter().map(|p| p[k].clone()).collect();
        let mut s = Rat::zero();
        for p in points {
            s += &p[k];
        }
        row.push(s);
        a.push(row);
    }
    let mut last = vec![Rat::one(); m];
    last.push(Rat::from_integer(m.into()));
    a.push(last);
    let mut b: Vec<Rat> = x.to_vec();
    b.push(Rat::one());
    let mut c = vec![Rat::zero(); m];
    c.push(-Rat::one()); // maximize eps
    match solve_min(&c, &a, &b) {
        LpResult::Optimal { value, .. } => (-value).is_positive(),
        LpResult::Infeasible => false,
        LpResult::Unbounded => unreachable!("eps is bounded by 1/m"),
    }
}

/// Minimum of sum(mu) over mu >= 0 with sum(mu_i * p_i) = x.
///
/// For a 0-symmetric polytope conv(points) this is exactly the gauge of x.
pub fn min_conic_weight(points: &[Vec<Rat>], x: &[Rat]) -> Option<Rat> {
    let m = points.len();
    let n = x.len();
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for k in 0..n {
        a.push(points.iter().map(|p| p[k].clone()).collect());
    }
    let b: Vec<Rat> = x.to_vec();
    let c = vec![Rat::one(); m];
    match solve_min(&c, &a, &b) {
        LpResult::Optimal { value, .. } => Some(value),
        LpResult::Infeasible => None,
        LpResult::Unbounded => unreachable!("weights are nonnegative"),
    }
}

/// Range of the last coordinate over the hull slice with the first n-1
/// coordinates fixed to `prefix`; None when the slice misses the hull.
pub fn fiber_range(points: &[Vec<Rat>], prefix: &[Rat]) -> Option<(Rat, Rat)> {
    let m = points.len();
    let n = prefix.len() + 1;
    debug_assert!(points.iter().all(|p| p.len() == n));
    let mut a: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for k in 0..n - 1 {
        a.push(points.iter().map(|p| p[k].clone()).collect());
    }
    a.push(vec![Rat::one(); m]);
    let mut b: Vec<Rat> = prefix.to_vec();
    b.push(Rat::one());
    let c_max: Vec<Rat> = points.iter().map(|p| -p[n - 1].clone()).collect();
    let hi = match solve_min(&c_max, &a, &b) {
        LpResult::Optimal { value, .. } => -value,
        LpResult::Infeasible => return None,
        LpResult::Unbounded => unreachable!("hull is bounded"),
    };
    let c_min: Vec<Rat> = points.iter().map(|p| p[n - 1].clone()).collect();
    let lo = match solve_min(&c_min, &a, &b) {
        LpResult::Optimal { value, .. } => value,
        _ => unreachable!("feasibility already established"),
    };
    Some((lo, hi))
}
