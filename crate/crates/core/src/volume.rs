//! Exact rational volume of polytopes in dimension at most 4, by fan
//! triangulation from an interior point over a brute-force facet search.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::bodies::{det_rational, Body, BodyRep, SymmetricHPolytope};
use crate::error::{Error, Result};
use crate::matrix::{rational_rank, solve_rational};

pub const MAX_VOLUME_DIM: usize = 4;

/// Exact Lebesgue volume of a polytope body (H-representations are
/// converted to vertex form first).
pub fn volume(body: &Body) -> Result<Rat> {
    let n = body.dim();
    if n > MAX_VOLUME_DIM {
        return Err(Error::DimensionTooLarge(n, MAX_VOLUME_DIM));
    }
    let vertices: Vec<Vec<Rat>> = match body.rep() {
        BodyRep::Ellipsoid(_) => return Err(Error::NotPolytope),
        BodyRep::VPolytope(v) => v.vertices().to_vec(),
        BodyRep::HPolytope(h) => hpolytope_vertices(h, n)?,
    };
    Ok(hull_volume(&vertices, n))
}

/// Vertex enumeration for a bounded symmetric H-polytope: intersect every
/// n-subset of the defining hyperplanes and keep the feasible solutions.
pub fn hpolytope_vertices(h: &SymmetricHPolytope, n: usize) -> Result<Vec<Vec<Rat>>> {
    let mut planes: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (a, b) in h.constraints() {
        let row: Vec<Rat> = a.iter().map(|v| Rat::from_integer(v.clone())).collect();
        planes.push((row.clone(), b.clone()));
        planes.push((row.iter().map(|v| -v).collect(), b.clone()));
    }
    let m = planes.len();
    let mut verts: Vec<Vec<Rat>> = Vec::new();
    let mut idx = vec![0usize; n];
    subsets(m, n, &mut idx, 0, 0, &mut |chosen| {
        let a: Vec<Vec<Rat>> = chosen.iter().map(|&i| planes[i].0.clone()).collect();
        let b: Vec<Rat> = chosen.iter().map(|&i| planes[i].1.clone()).collect();
        if let Some(x) = solve_rational(&a, &b) {
            let feasible = h
                .constraints()
                .iter()
                .all(|(normal, bound)| {
                    let mut acc = Rat::zero();
                    for (c, xi) in normal.iter().zip(&x) {
                        acc += Rat::from_integer(c.clone()) * xi;
                    }
                    acc.abs() <= *bound
                });
            if feasible && !verts.contains(&x) {
                verts.push(x);
            }
        }
    });
    if verts.is_empty() {
        return Err(Error::DegenerateBody("H-polytope has no vertices".into()));
    }
    Ok(verts)
}

fn subsets(
    m: usize,
    k: usize,
    idx: &mut Vec<usize>,
    depth: usize,
    start: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        f(idx);
        return;
    }
    for i in start..m {
        idx[depth] = i;
        subsets(m, k, idx, depth + 1, i + 1, f);
    }
}

/// Volume of conv(points), assuming the hull is full-dimensional in R^d.
pub fn hull_volume(points: &[Vec<Rat>], d: usize) -> Rat {
    let mut total = Rat::zero();
    let factorial: Int = (1..=d as u64).product::<u64>().into();
    for simplex in triangulate_full(points, d) {
        let rows: Vec<Vec<Rat>> = simplex[1..]
            .iter()
            .map(|p| p.iter().zip(&simplex[0]).map(|(a, b)| a - b).collect())
            .collect();
        total += det_rational(&rows).abs();
    }
    total / Rat::from_integer(factorial)
}

/// Triangulation of conv(points) into d-simplices (fans from the centroid
/// over a triangulation of the boundary; simplex corners need not be
/// vertices of the hull, which is fine for volume sums).
fn triangulate_full(points: &[Vec<Rat>], d: usize) -> Vec<Vec<Vec<Rat>>> {
    if d == 1 {
        let lo = points.iter().min().unwrap().clone();
        let hi = points.iter().max().unwrap().clone();
        return vec![vec![lo, hi]];
    }
    if points.len() == d + 1 {
        return vec![points.to_vec()];
    }
    let centroid = centroid(points);
    triangulate_boundary(points, d)
        .into_iter()
        .map(|mut s| {
            s.push(centroid.clone());
            s
        })
        .collect()
}

/// (d-1)-simplices covering the boundary of conv(points) in R^d.
fn triangulate_boundary(points: &[Vec<Rat>], d: usize) -> Vec<Vec<Vec<Rat>>> {
    let mut out = Vec::new();
    for facet in facets(points, d) {
        // Project the facet along a coordinate its normal does not
        // annihilate; the projection is an affine bijection on the facet.
        let j = facet
            .normal
            .iter()
            .position(|v| !v.is_zero())
            .expect("facet normal is nonzero");
        let projected: Vec<Vec<Rat>> = facet
            .points
            .iter()
            .map(|p| drop_coord(p, j))
            .collect();
        for simplex in triangulate_full(&projected, d - 1) {
            let lifted: Vec<Vec<Rat>> = simplex
                .iter()
                .map(|q| lift_coord(q, j, &facet.normal, &facet.offset))
                .collect();
            out.push(lifted);
        }
    }
    out
}

struct Facet {
    normal: Vec<Rat>,
    offset: Rat,
    points: Vec<Vec<Rat>>,
}

/// Supporting hyperplanes found by brute force over d-subsets of points;
/// each facet carries every input point incident to its hyperplane.
fn facets(points: &[Vec<Rat>], d: usize) -> Vec<Facet> {
    let m = points.len();
    let mut found: BTreeMap<(Vec<Rat>, Rat), Vec<usize>> = BTreeMap::new();
    let mut idx = vec![0usize; d];
    subsets(m, d, &mut idx, 0, 0, &mut |chosen| {
        let base = &points[chosen[0]];
        let rows: Vec<Vec<Rat>> = chosen[1..]
            .iter()
            .map(|&i| {
                points[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect::<Vec<Rat>>()
            })
            .collect();
        let Some(normal) = nullspace_vector(&rows, d) else {
            return;
        };
        let offset: Rat = dot(&normal, base);
        let mut side_pos = false;
        let mut side_neg = false;
        for p in points {
            match dot(&normal, p).cmp(&offset) {
                std::cmp::Ordering::Greater => side_pos = true,
                std::cmp::Ordering::Less => side_neg = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        if side_pos && side_neg {
            return;
        }
        // Orient outward: all points on the <= side.
        let (normal, offset) = if side_pos {
            (normal.iter().map(|v| -v).collect::<Vec<Rat>>(), -offset.clone())
        } else {
            (normal, offset)
        };
        let (normal, offset) = canonical_scale(normal, offset);
        let incident: Vec<usize> = (0..m)
            .filter(|&i| dot(&normal, &points[i]) == offset)
            .collect();
        found.entry((normal, offset)).or_insert(incident);
    });
    found
        .into_iter()
        .map(|((normal, offset), incident)| Facet {
            normal,
            offset,
            points: incident.into_iter().map(|i| points[i].clone()).collect(),
        })
        .collect()
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

fn drop_coord(p: &[Rat], j: usize) -> Vec<Rat> {
    p.iter()
        .enumerate()
        .filter(|(i, _)| *i != j)
        .map(|(_, v)| v.clone())
        .collect()
}

/// Reinserts coordinate j so the lifted point satisfies normal.x = offset.
fn lift_coord(q: &[Rat], j: usize, normal: &[Rat], offset: &Rat) -> Vec<Rat> {
    let mut acc = offset.clone();
    let mut full = vec![Rat::zero(); q.len() + 1];
    let mut qi = 0;
    for i in 0..full.len() {
        if i == j {
            continue;
        }
        full[i] = q[qi].clone();
        acc -= &normal[i] * &q[qi];
        qi += 1;
    }
    full[j] = acc / &normal[j];
    full
}

/// A nonzero solution of rows * g = 0 when the rows have rank d-1.
fn nullspace_vector(rows: &[Vec<Rat>], d: usize) -> Option<Vec<Rat>> {
    if rational_rank(rows) + 1 != d {
        return None;
    }
    // Row-reduce and read a kernel vector off the free column.
    let mut a = rows.to_vec();
    let rows_n = a.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..d {
        if r >= rows_n {
            break;
        }
        let Some(p) = (r..rows_n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][col].clone();
        for j in col..d {
            a[r][j] = &a[r][j] / &pivot;
        }
        for i in 0..rows_n {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..d {
                    let t = &a[r][j] * &f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..d).find(|c| !pivot_cols.contains(c))?;
    let mut g = vec![Rat::zero(); d];
    g[free] = Rat::one();
    for &(pr, pc) in &pivots {
        g[pc] = -a[pr][free].clone();
    }
    Some(g)
}

fn centroid(points: &[Vec<Rat>]) -> Vec<Rat> {
    let d = points[0].len();
    let mut c = vec![Rat::zero(); d];
    for p in points {
        for (ci, pi) in c.iter_mut().zip(p) {
            *ci += pi;
        }
    }
    let m = Rat::from_integer(Int::from(points.len() as u64));
    for ci in &mut c {
        *ci = std::mem::take(ci) / &m;
    }
    c
}

/// Scales (g, h) to a primitive integer normal with positive leading sign
/// convention fixed by the inequality orientation.
fn canonical_scale(g: Vec<Rat>, h: Rat) -> (Vec<Rat>, Rat) {
    let mut lcm = Int::one();
    for v in g.iter().chain(std::iter::once(&h)) {
        lcm = lcm.lcm(v.denom());
    }
    let ints: Vec<Int> = g
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let h_int = h.numer() * (&lcm / h.denom());
    let mut gcd = Int::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    gcd = gcd.gcd(&h_int);
    if gcd.is_zero() {
        gcd = Int::one();
    }
    (
        ints.iter()
            .map(|v| Rat::from_integer(v / &gcd))
            .collect(),
        Rat::from_integer(h_int / gcd),
    )
}
