//! Exact convex bodies: symmetric H-polytopes, V-polytopes, and rational
//! ellipsoids, with membership, gauge, symmetry, and bounding boxes.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::arith::{GaugeValue, Int, Rat};
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::lp;
use crate::matrix::{rational_rank, solve_rational, IntMatrix};

/// Intersection of symmetric slabs |a.x| <= b; 0-symmetric by encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricHPolytope {
    dim: usize,
    constraints: Vec<(Vec<Int>, Rat)>,
}

impl SymmetricHPolytope {
    pub fn new(dim: usize, constraints: Vec<(Vec<Int>, Rat)>) -> Result<Self> {
        if constraints.is_empty() {
            return Err(Error::DegenerateBody("no constraints".into()));
        }
        for (a, b) in &constraints {
            if a.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: a.len(),
                });
            }
            if a.iter().all(|v| v.is_zero()) {
                return Err(Error::DegenerateBody("zero constraint normal".into()));
            }
            if !b.is_positive() {
                return Err(Error::DegenerateBody(
                    "constraint bound must be positive".into(),
                ));
            }
        }
        let normals: Vec<Vec<Rat>> = constraints
            .iter()
            .map(|(a, _)| a.iter().map(|v| Rat::from_integer(v.clone())).collect())
            .collect();
        if rational_rank(&normals) < dim {
            return Err(Error::Unbounded);
        }
        Ok(SymmetricHPolytope { dim, constraints })
    }

    pub fn constraints(&self) -> &[(Vec<Int>, Rat)] {
        &self.constraints
    }
}

/// Convex hull of finitely many rational points, stored by its canonical
/// irredundant vertex list in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<Vec<Rat>>,
}

impl VPolytope {
    pub fn new(dim: usize, points: Vec<Vec<Rat>>) -> Result<Self> {
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        let mut uniq: Vec<Vec<Rat>> = points;
        uniq.sort();
        uniq.dedup();
        if uniq.is_empty() {
            return Err(Error::DegenerateBody("no vertices".into()));
        }
        // Keep exactly the vertices: p is a vertex iff p is outside the
        // hull of the remaining points.
        let mut vertices = Vec::with_capacity(uniq.len());
        for (i, p) in uniq.iter().enumerate() {
            let others: Vec<Vec<Rat>> = uniq
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            if others.is_empty() || !lp::in_hull(&others, p) {
                vertices.push(p.clone());
            }
        }
        let anchor = &vertices[0];
        let rows: Vec<Vec<Rat>> = vertices[1..]
            .iter()
            .map(|v| v.iter().zip(anchor).map(|(a, b)| a - b).collect())
            .collect();
        if rational_rank(&rows) < dim {
            return Err(Error::DegenerateBody(format!(
                "vertex set is not full-dimensional in R^{dim}"
            )));
        }
        Ok(VPolytope { dim, vertices })
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    /// Vertices as lattice points, when all coordinates are integers.
    pub fn integer_vertices(&self) -> Option<Vec<LatticePoint>> {
        let mut out = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let mut coords = Vec::with_capacity(self.dim);
            for c in v {
                if !c.is_integer() {
                    return None;
                }
                coords.push(c.to_integer());
            }
            out.push(LatticePoint(coords));
        }
        Some(out)
    }
}

/// { x : (x-c)^T Q (x-c) <= 1 } with symmetric positive-definite rational Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalEllipsoid {
    dim: usize,
    center: Vec<Rat>,
    q: Vec<Vec<Rat>>,
}

impl RationalEllipsoid {
    pub fn new(center: Vec<Rat>, q: Vec<Vec<Rat>>) -> Result<Self> {
        let dim = center.len();
        if q.len() != dim || q.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: q.len(),
            });
        }
        for i in 0..dim {
            for j in 0..i {
                if q[i][j] != q[j][i] {
                    return Err(Error::DegenerateBody("Q is not symmetric".into()));
                }
            }
        }
        // Sylvester: all leading principal minors strictly positive.
        for k in 1..=dim {
            let sub: Vec<Vec<Rat>> = (0..k).map(|i| q[i][..k].to_vec()).collect();
            if !det_rational(&sub).is_positive() {
                return Err(Error::DegenerateBody(
                    "Q is not positive definite".into(),
                ));
            }
        }
        Ok(RationalEllipsoid { dim, center, q })
    }

    pub fn center(&self) -> &[Rat] {
        &self.center
    }

    pub fn q(&self) -> &[Vec<Rat>] {
        &self.q
    }

    /// (x-c)^T Q (x-c), evaluated exactly.
    pub fn quadratic(&self, x: &[Rat]) -> Rat {
        let y: Vec<Rat> = x.iter().zip(&self.center).map(|(a, b)| a - b).collect();
        let mut acc = Rat::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += &self.q[i][j] * &y[i] * &y[j];
            }
        }
        acc
    }
}

/// Determinant of a rational matrix by exact Gaussian elimination.
pub fn det_rational(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] / &pivot;
            for j in col..n {
                let t = &a[col][j] * &f;
                a[i][j] -= t;
            }
        }
    }
    det
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BodyRep {
    HPolytope(SymmetricHPolytope),
    VPolytope(VPolytope),
    Ellipsoid(RationalEllipsoid),
}

/// A full-dimensional convex body with cached symmetry flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Body {
    rep: BodyRep,
    zero_symmetric: bool,
    strictly_convex: bool,
}

impl Body {
    pub fn from_hpolytope(h: SymmetricHPolytope) -> Body {
        Body {
            rep: BodyRep::HPolytope(h),
            zero_symmetric: true,
            strictly_convex: false,
        }
    }

    pub fn from_vpolytope(v: VPolytope) -> Body {
        let neg: Vec<Vec<Rat>> = v
            .vertices
            .iter()
            .map(|p| p.iter().map(|c| -c).collect())
            .collect();
        let mut neg_sorted = neg;
        neg_sorted.sort();
        let zero_symmetric = neg_sorted == v.vertices;
        Body {
            rep: BodyRep::VPolytope(v),
            zero_symmetric,
            strictly_convex: false,
        }
    }

    pub fn from_ellipsoid(e: RationalEllipsoid) -> Body {
        let zero_symmetric = e.center.iter().all(|c| c.is_zero());
        Body {
            rep: BodyRep::Ellipsoid(e),
            zero_symmetric,
            strictly_convex: true,
        }
    }

    pub fn rep(&self) -> &BodyRep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        match &self.rep {
            BodyRep::HPolytope(h) => h.dim,
            BodyRep::VPolytope(v) => v.dim,
            BodyRep::Ellipsoid(e) => e.dim,
        }
    }

    pub fn is_zero_symmetric(&self) -> bool {
        self.zero_symmetric
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.strictly_convex
    }

    pub fn is_polytope(&self) -> bool {
        !matches!(self.rep, BodyRep::Ellipsoid(_))
    }

    fn check_dim(&self, x: &[Rat]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Closed membership.
    pub fn contains(&self, x: &[Rat]) -> Result<bool> {
        self.check_dim(x)?;
        Ok(match &self.rep {
            BodyRep::HPolytope(h) => h
                .constraints
                .iter()
                .all(|(a, b)| dot_int_rat(a, x).abs() <= *b),
            BodyRep::VPolytope(v) => lp::in_hull(&v.vertices, x),
            BodyRep::Ellipsoid(e) => e.quadratic(x) <= Rat::one(),
        })
    }

    /// Membership in the interior.
    pub fn contains_interior(&self, x: &[Rat]) -> Result<bool> {
        self.check_dim(x)?;
        Ok(match &self.rep {
            BodyRep::HPolytope(h) => h
                .constraints
                .iter()
                .all(|(a, b)| dot_int_rat(a, x).abs() < *b),
            BodyRep::VPolytope(v) => lp::in_hull_interior(&v.vertices, x),
            BodyRep::Ellipsoid(e) => e.quadratic(x) < Rat::one(),
        })
    }

    /// Minkowski gauge min { t > 0 : x in t*K } for a 0-symmetric body.
    pub fn gauge(&self, x: &[Rat]) -> Result<GaugeValue> {
        self.check_dim(x)?;
        if !self.zero_symmetric {
            return Err(Error::NotZeroSymmetric);
        }
        if x.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroVector);
        }
        Ok(match &self.rep {
            BodyRep::HPolytope(h) => {
                let mut best = Rat::zero();
                for (a, b) in &h.constraints {
                    let v = dot_int_rat(a, x).abs() / b;
                    if v > best {
                        best = v;
                    }
                }
                GaugeValue::from_rational(&best)
            }
            BodyRep::VPolytope(v) => {
                let w = lp::min_conic_weight(&v.vertices, x)
                    .expect("full-dimensional symmetric hull spans R^n");
                GaugeValue::from_rational(&w)
            }
            BodyRep::Ellipsoid(e) => GaugeValue::from_radicand(e.quadratic(x)),
        })
    }

    /// An integer box containing the body, one (lo, hi) pair per coordinate.
    pub fn bounding_box(&self) -> Result<Vec<(Int, Int)>> {
        match &self.rep {
            BodyRep::VPolytope(v) => Ok((0..v.dim)
                .map(|k| {
                    let lo = v.vertices.iter().map(|p| &p[k]).min().unwrap();
                    let hi = v.vertices.iter().map(|p| &p[k]).max().unwrap();
                    (lo.floor().to_integer(), hi.ceil().to_integer())
                })
                .collect()),
            BodyRep::HPolytope(h) => {
                let mut ineqs: Vec<(Vec<Rat>, Rat)> = Vec::new();
                for (a, b) in &h.constraints {
                    let pos: Vec<Rat> =
                        a.iter().map(|v| Rat::from_integer(v.clone())).collect();
                    let neg: Vec<Rat> = pos.iter().map(|v| -v).collect();
                    ineqs.push((pos, b.clone()));
                    ineqs.push((neg, b.clone()));
                }
                let mut out = Vec::with_capacity(h.dim);
                for k in 0..h.dim {
                    let (lo, hi) = coordinate_range(&ineqs, k)?;
                    out.push((lo.floor().to_integer(), hi.ceil().to_integer()));
                }
                Ok(out)
            }
            BodyRep::Ellipsoid(e) => {
                // Extent along axis k is sqrt((Q^-1)_kk) around the center.
                let mut out = Vec::with_capacity(e.dim);
                for k in 0..e.dim {
                    let mut unit = vec![Rat::zero(); e.dim];
                    unit[k] = Rat::one();
                    let col = solve_rational(&e.q, &unit)
                        .expect("positive definite Q is invertible");
                    let d = col[k].clone();
                    debug_assert!(d.is_positive());
                    out.push((
                        crate::arith::floor_minus_sqrt(&e.center[k], &d),
                        crate::arith::ceil_plus_sqrt(&e.center[k], &d),
                    ));
                }
                Ok(out)
            }
        }
    }

    /// Homothetic copy t*K for rational t > 0.
    pub fn dilate(&self, t: &Rat) -> Body {
        assert!(t.is_positive());
        let rep = match &self.rep {
            BodyRep::HPolytope(h) => BodyRep::HPolytope(SymmetricHPolytope {
                dim: h.dim,
                constraints: h
                    .constraints
                    .iter()
                    .map(|(a, b)| (a.clone(), b * t))
                    .collect(),
            }),
            BodyRep::VPolytope(v) => BodyRep::VPolytope(VPolytope {
                dim: v.dim,
                vertices: v
                    .vertices
                    .iter()
                    .map(|p| p.iter().map(|c| c * t).collect())
                    .collect(),
            }),
            BodyRep::Ellipsoid(e) => BodyRep::Ellipsoid(RationalEllipsoid {
                dim: e.dim,
                center: e.center.iter().map(|c| c * t).collect(),
                q: e.q
                    .iter()
                    .map(|row| row.iter().map(|v| v / (t * t)).collect())
                    .collect(),
            }),
        };
        Body {
            rep,
            zero_symmetric: self.zero_symmetric,
            strictly_convex: self.strictly_convex,
        }
    }
}

fn dot_int_rat(a: &[Int], x: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (ai, xi) in a.iter().zip(x) {
        if !ai.is_zero() {
            acc += Rat::from_integer(ai.clone()) * xi;
        }
    }
    acc
}

/// Exact coordinate range of a bounded rational inequality system via
/// Fourier-Motzkin elimination of all other variables.
fn coordinate_range(ineqs: &[(Vec<Rat>, Rat)], keep: usize) -> Result<(Rat, Rat)> {
    let dim = ineqs[0].0.len();
    let mut system: Vec<(Vec<Rat>, Rat)> = ineqs.to_vec();
    for var in 0..dim {
        if var == keep {
            continue;
        }
        system = fm_eliminate(&system, var);
    }
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for (c, d) in &system {
        let coef = &c[keep];
        match coef.cmp(&Rat::zero()) {
            Ordering::Greater => {
                let bound = d / coef;
                if hi.as_ref().map_or(true, |h| bound < *h) {
                    hi = Some(bound);
                }
            }
            Ordering::Less => {
                let bound = d / coef;
                if lo.as_ref().map_or(true, |l| bound > *l) {
                    lo = Some(bound);
                }
            }
            Ordering::Equal => {
                if d.is_negative() {
                    return Err(Error::DegenerateBody("infeasible system".into()));
                }
            }
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => Ok((l, h)),
        _ => Err(Error::Unbounded),
    }
}

/// One Fourier-Motzkin elimination step removing variable `var`.
fn fm_eliminate(ineqs: &[(Vec<Rat>, Rat)], var: usize) -> Vec<(Vec<Rat>, Rat)> {
    let mut zero = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (c, d) in ineqs {
        match c[var].cmp(&Rat::zero()) {
            Ordering::Equal => zero.push((c.clone(), d.clone())),
            Ordering::Greater => pos.push((c.clone(), d.clone())),
            Ordering::Less => neg.push((c.clone(), d.clone())),
        }
    }
    let mut out = zero;
    for (cp, dp) in &pos {
        for (cn, dn) in &neg {
            // Scale so coefficients on `var` cancel: cn[var] < 0 < cp[var].
            let fp = -&cn[var];
            let fn_ = cp[var].clone();
            let mut c: Vec<Rat> = cp
                .iter()
                .zip(cn)
                .map(|(a, b)| a * &fp + b * &fn_)
                .collect();
            c[var] = Rat::zero();
            let d = dp * &fp + dn * &fn_;
            out.push((c, d));
        }
    }
    // Drop duplicate rows to keep FM growth in check at these sizes.
    out.sort();
    out.dedup();
    out
}

/// Standard body constructors.
pub mod standard {
    use super::*;

    /// The cube [-1,1]^n as a V-polytope.
    pub fn cube(n: usize) -> Body {
        let mut verts = Vec::with_capacity(1 << n);
        for mask in 0..(1u32 << n) {
            verts.push(
                (0..n)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            Rat::one()
                        } else {
                            -Rat::one()
                        }
                    })
                    .collect(),
            );
        }
        Body::from_vpolytope(VPolytope::new(n, verts).expect("cube is full-dimensional"))
    }

    /// The slab parallelepiped C_{n-1} x [-l, l].
    pub fn slab_parallelepiped(n: usize, l: &Int) -> Result<Body> {
        if *l < Int::one() {
            return Err(Error::InvalidParameter(format!(
                "slab length must be a positive integer, got {l}"
            )));
        }
        let mut verts = Vec::with_capacity(1 << n);
        for mask in 0..(1u32 << n) {
            verts.push(
                (0..n)
                    .map(|i| {
                        let mag = if i + 1 == n {
                            Rat::from_integer(l.clone())
                        } else {
                            Rat::one()
                        };
                        if mask >> i & 1 == 1 {
                            mag
                        } else {
                            -mag
                        }
                    })
                    .collect(),
            );
        }
        Ok(Body::from_vpolytope(VPolytope::new(n, verts)?))
    }

    /// The crosspolytope conv{ +-e_i }.
    pub fn crosspolytope(n: usize) -> Body {
        let mut verts = Vec::with_capacity(2 * n);
        for i in 0..n {
            for sign in [1i64, -1] {
                let mut v = vec![Rat::zero(); n];
                v[i] = Rat::from_integer(Int::from(sign));
                verts.push(v);
            }
        }
        Body::from_vpolytope(VPolytope::new(n, verts).expect("crosspolytope is full-dimensional"))
    }

    /// Ellipsoid { x : (x-c)^T Q (x-c) <= 1 }.
    pub fn ellipsoid(q: Vec<Vec<Rat>>, center: Vec<Rat>) -> Result<Body> {
        Ok(Body::from_ellipsoid(RationalEllipsoid::new(center, q)?))
    }

    /// Image A*K of a body under a unimodular matrix.
    pub fn unimodular_image(a: &IntMatrix, k: &Body) -> Result<Body> {
        if !a.is_square() || a.rows() != k.dim() {
            return Err(Error::DimensionMismatch {
                expected: k.dim(),
                got: a.rows(),
            });
        }
        if !a.is_unimodular()? {
            return Err(Error::NotUnimodular(a.det()?));
        }
        let inv = a.inverse_unimodular()?;
        let rep = match k.rep() {
            BodyRep::VPolytope(v) => {
                let verts = v
                    .vertices
                    .iter()
                    .map(|p| a.mul_rat_vec(p))
                    .collect::<Vec<_>>();
                BodyRep::VPolytope(VPolytope::new(v.dim, verts)?)
            }
            BodyRep::HPolytope(h) => {
                // |a_i . A^-1 y| <= b_i, i.e. normals map through (A^-1)^T.
                let inv_t = inv.transpose();
                let constraints = h
                    .constraints
                    .iter()
                    .map(|(normal, b)| (inv_t.mul_vec(normal), b.clone()))
                    .collect();
                BodyRep::HPolytope(SymmetricHPolytope::new(h.dim, constraints)?)
            }
            BodyRep::Ellipsoid(e) => {
                // (y - Ac)^T (A^-T Q A^-1) (y - Ac) <= 1.
                let n = e.dim;
                let inv_rat: Vec<Vec<Rat>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| Rat::from_integer(inv[(i, j)].clone()))
                            .collect()
                    })
                    .collect();
                let mut q_new = vec![vec![Rat::zero(); n]; n];
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = Rat::zero();
                        for p in 0..n {
                            for r in 0..n {
                                acc += &inv_rat[p][i] * &e.q[p][r] * &inv_rat[r][j];
                            }
                        }
                        q_new[i][j] = acc;
                    }
                }
                let center_new = a.mul_rat_vec(&e.center);
                BodyRep::Ellipsoid(RationalEllipsoid::new(center_new, q_new)?)
            }
        };
        Ok(Body {
            rep,
            zero_symmetric: k.zero_symmetric,
            strictly_convex: k.strictly_convex,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::standard::*;
    use super::*;
    use crate::arith::{int, rat, rat_int};

    fn rv(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    fn disk2() -> Body {
        // x^2 + y^2 <= 2, i.e. Q = I/2.
        ellipsoid(
            vec![vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(1, 2)]],
            vec![rat(0, 1), rat(0, 1)],
        )
        .unwrap()
    }

    #[test]
    fn membership_examples() {
        let c2 = cube(2);
        assert!(c2.contains(&rv(&[1, 1])).unwrap());
        assert!(!c2.contains_interior(&rv(&[1, 1])).unwrap());
        assert!(c2.contains(&rv(&[0, 0])).unwrap());
        assert!(c2.contains_interior(&rv(&[0, 0])).unwrap());
        let e = disk2();
        assert!(e.contains(&rv(&[1, 1])).unwrap());
        assert!(!e.contains_interior(&rv(&[1, 1])).unwrap());
        assert!(!e.contains(&rv(&[2, 0])).unwrap());
    }

    #[test]
    fn symmetry_flags() {
        let v = VPolytope::new(
            2,
            vec![rv(&[1, 0]), rv(&[-1, 0]), rv(&[0, 1]), rv(&[0, -1])],
        )
        .unwrap();
        assert!(Body::from_vpolytope(v).is_zero_symmetric());
        let t = VPolytope::new(2, vec![rv(&[0, 0]), rv(&[1, 0]), rv(&[0, 1])]).unwrap();
        assert!(!Body::from_vpolytope(t).is_zero_symmetric());
        let e = ellipsoid(
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]],
            vec![rat(1, 2), rat(0, 1)],
        )
        .unwrap();
        assert!(!e.is_zero_symmetric());
        assert!(e.is_strictly_convex());
    }

    #[test]
    fn gauge_examples() {
        let c2 = cube(2);
        assert_eq!(c2.gauge(&rv(&[1, 1])).unwrap(), GaugeValue::one());
        assert_eq!(
            c2.gauge(&rv(&[3, 1])).unwrap(),
            GaugeValue::from_rational(&rat_int(3))
        );
        let e = disk2();
        assert_eq!(
            e.gauge(&rv(&[1, 0])).unwrap(),
            GaugeValue::from_radicand(rat(1, 2))
        );
        assert!(c2.gauge(&rv(&[0, 0])).is_err());
        let t = VPolytope::new(2, vec![rv(&[0, 0]), rv(&[1, 0]), rv(&[0, 1])]).unwrap();
        assert!(Body::from_vpolytope(t).gauge(&rv(&[1, 0])).is_err());
    }

    #[test]
    fn gauge_matches_membership_on_grid() {
        // gauge <= 1 iff contains; gauge < 1 iff interior.
        let bodies = [cube(2), crosspolytope(2), disk2()];
        for body in &bodies {
            for x in -2i64..=2 {
                for y in -2i64..=2 {
                    if x == 0 && y == 0 {
                        continue;
                    }
                    let p = rv(&[x, y]);
                    let g = body.gauge(&p).unwrap();
                    assert_eq!(
                        g.cmp_rational(&rat_int(1)) != Ordering::Greater,
                        body.contains(&p).unwrap()
                    );
                    assert_eq!(
                        g.cmp_rational(&rat_int(1)) == Ordering::Less,
                        body.contains_interior(&p).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn bounding_boxes() {
        let c2 = cube(2);
        assert_eq!(
            c2.bounding_box().unwrap(),
            vec![(int(-1), int(1)), (int(-1), int(1))]
        );
        let e = disk2();
        let bb = e.bounding_box().unwrap();
        // sqrt(2) is strictly between 1 and 2; box must contain K.
        assert_eq!(bb, vec![(int(-2), int(2)), (int(-2), int(2))]);
        let v = VPolytope::new(
            2,
            vec![rv(&[1, 0]), rv(&[-1, 0]), rv(&[1, 2]), rv(&[-1, -2])],
        )
        .unwrap();
        assert_eq!(
            Body::from_vpolytope(v).bounding_box().unwrap(),
            vec![(int(-1), int(1)), (int(-2), int(2))]
        );
        let h = SymmetricHPolytope::new(
            2,
            vec![
                (vec![int(1), int(0)], rat_int(1)),
                (vec![int(0), int(1)], rat_int(3)),
            ],
        )
        .unwrap();
        assert_eq!(
            Body::from_hpolytope(h).bounding_box().unwrap(),
            vec![(int(-1), int(1)), (int(-3), int(3))]
        );
        // Sheared H-polytope: |x| <= 1, |x + y| <= 1 has y range [-2, 2].
        let h = SymmetricHPolytope::new(
            2,
            vec![
                (vec![int(1), int(0)], rat_int(1)),
                (vec![int(1), int(1)], rat_int(1)),
            ],
        )
        .unwrap();
        assert_eq!(
            Body::from_hpolytope(h).bounding_box().unwrap(),
            vec![(int(-1), int(1)), (int(-2), int(2))]
        );
    }

    #[test]
    fn degenerate_bodies_rejected() {
        // A segment in the plane is not full-dimensional.
        assert!(VPolytope::new(2, vec![rv(&[0, 0]), rv(&[1, 1])]).is_err());
        // A single slab is unbounded.
        assert!(SymmetricHPolytope::new(2, vec![(vec![int(1), int(0)], rat_int(1))]).is_err());
        // Indefinite Q.
        assert!(RationalEllipsoid::new(
            vec![rat_int(0), rat_int(0)],
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(-1)]],
        )
        .is_err());
        assert!(slab_parallelepiped(2, &int(0)).is_err());
    }

    #[test]
    fn vertex_canonicalization_drops_interior_points() {
        let v = VPolytope::new(
            2,
            vec![
                rv(&[1, 1]),
                rv(&[1, -1]),
                rv(&[-1, 1]),
                rv(&[-1, -1]),
                rv(&[0, 0]),
                rv(&[1, 0]), // edge midpoint
                rv(&[1, 1]), // duplicate
            ],
        )
        .unwrap();
        assert_eq!(v.vertices().len(), 4);
    }

    #[test]
    fn standard_constructors() {
        assert_eq!(cube(2).dim(), 2);
        match cube(2).rep() {
            BodyRep::VPolytope(v) => assert_eq!(v.vertices().len(), 4),
            _ => panic!("cube should be a V-polytope"),
        }
        let slab = slab_parallelepiped(2, &int(3)).unwrap();
        assert_eq!(
            slab.bounding_box().unwrap(),
            vec![(int(-1), int(1)), (int(-3), int(3))]
        );
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]);
        let sheared = unimodular_image(&a, &cube(2)).unwrap();
        match sheared.rep() {
            BodyRep::VPolytope(v) => {
                let mut verts = v.vertices().to_vec();
                verts.sort();
                let mut want = vec![rv(&[1, 0]), rv(&[1, 2]), rv(&[-1, 0]), rv(&[-1, -2])];
                want.sort();
                assert_eq!(verts, want);
            }
            _ => panic!("expected V-polytope"),
        }
        assert!(sheared.is_zero_symmetric());
        let not_uni = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        assert!(unimodular_image(&not_uni, &cube(2)).is_err());
    }

    #[test]
    fn unimodular_image_of_hrep_and_ellipsoid() {
        let a = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        let h = Body::from_hpolytope(
            SymmetricHPolytope::new(
                2,
                vec![
                    (vec![int(1), int(0)], rat_int(1)),
                    (vec![int(0), int(1)], rat_int(1)),
                ],
            )
            .unwrap(),
        );
        let img = unimodular_image(&a, &h).unwrap();
        // Image of the cube under [[1,1],[0,1]] contains (2,1) = A(1,1) on
        // its boundary and (1,1) = A(0,1)... membership transported exactly.
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                let pre = a
                    .inverse_unimodular()
                    .unwrap()
                    .mul_rat_vec(&rv(&[x, y]));
                assert_eq!(
                    img.contains(&rv(&[x, y])).unwrap(),
                    h.contains(&pre).unwrap()
                );
            }
        }
        let e = disk2();
        let img = unimodular_image(&a, &e).unwrap();
        assert!(img.contains(&rv(&[2, 1])).unwrap()); // A(1,1), quadratic = 1
        assert!(!img.contains_interior(&rv(&[2, 1])).unwrap());
        assert!(img.is_zero_symmetric());
    }

    #[test]
    fn dilation() {
        let c2 = cube(2).dilate(&rat_int(2));
        assert!(c2.contains(&rv(&[2, 2])).unwrap());
        assert!(!c2.contains(&rv(&[3, 0])).unwrap());
        let e = disk2().dilate(&rat_int(2));
        assert!(e.contains(&rv(&[2, 2])).unwrap()); // 4+4 = 8 = 2*4
        assert!(!e.contains_interior(&rv(&[2, 2])).unwrap());
    }
}
