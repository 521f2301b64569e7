//! Lattice point enumeration and successive minima.
//!
//! Enumeration walks integer fibers of the bounding box: for each prefix of
//! the first n-1 coordinates the body meets the fiber in an exact rational
//! interval, so the integer points on it are read off without scanning.
//! H-polytopes and ellipsoids yield the interval directly; V-polytopes get
//! it from two exact LPs plus one midpoint interiority test.

use num_traits::{One, Signed, Zero};

use crate::arith::{
    ceil_minus_sqrt, ceil_plus_sqrt, floor_minus_sqrt, floor_plus_sqrt, GaugeValue, Int, Rat,
};
use crate::bodies::{Body, BodyRep};
use crate::error::{Error, Result};
use crate::lattice::{linear_rank, LatticePoint, PointSet};
use crate::lp;

/// Successive minima lambda_1 <= ... <= lambda_n with attaining witnesses.
#[derive(Clone, Debug)]
pub struct SuccessiveMinima {
    pub values: Vec<GaugeValue>,
    pub witnesses: Vec<LatticePoint>,
}

/// All lattice points of a bounded full-dimensional body.
pub fn lattice_points(body: &Body) -> Result<PointSet> {
    enumerate(body, false)
}

/// All interior lattice points of a bounded full-dimensional body.
pub fn interior_lattice_points(body: &Body) -> Result<PointSet> {
    enumerate(body, true)
}

/// (total, interior, boundary) lattice point counts.
pub fn count(body: &Body) -> Result<(usize, usize, usize)> {
    let total = lattice_points(body)?.len();
    let interior = interior_lattice_points(body)?.len();
    debug_assert!(interior <= total);
    Ok((total, interior, total - interior))
}

fn enumerate(body: &Body, interior: bool) -> Result<PointSet> {
    let n = body.dim();
    let bbox = body.bounding_box()?;
    let mut out = PointSet::new(n);
    let mut prefix = vec![Int::zero(); n.saturating_sub(1)];
    scan_prefix(body, &bbox, 0, &mut prefix, interior, &mut out)?;
    Ok(out)
}

fn scan_prefix(
    body: &Body,
    bbox: &[(Int, Int)],
    depth: usize,
    prefix: &mut Vec<Int>,
    interior: bool,
    out: &mut PointSet,
) -> Result<()> {
    let n = body.dim();
    if depth + 1 == n || n == 1 {
        let range = fiber_interval(body, prefix, interior)?;
        if let Some((lo, hi)) = range {
            let mut t = lo;
            while t <= hi {
                let mut coords = prefix.clone();
                coords.push(t.clone());
                out.insert(LatticePoint(coords))?;
                t += 1;
            }
        }
        return Ok(());
    }
    let (lo, hi) = bbox[depth].clone();
    let mut v = lo;
    while v <= hi {
        prefix[depth] = v.clone();
        scan_prefix(body, bbox, depth + 1, prefix, interior, out)?;
        v += 1;
    }
    Ok(())
}

/// Integer range of the last coordinate on the fiber over `prefix`, or None
/// when the fiber misses the body (or its interior).
fn fiber_interval(body: &Body, prefix: &[Int], interior: bool) -> Result<Option<(Int, Int)>> {
    match body.rep() {
        BodyRep::HPolytope(h) => {
            // Each |a.x| <= b pins t = x_n to a rational interval.
            let mut lo: Option<Rat> = None;
            let mut hi: Option<Rat> = None;
            let n = body.dim();
            for (a, b) in h.constraints() {
                let coef = Rat::from_integer(a[n - 1].clone());
                let mut fixed = Rat::zero();
                for k in 0..n - 1 {
                    if !a[k].is_zero() {
                        fixed += Rat::from_integer(a[k].clone() * &prefix[k]);
                    }
                }
                // -b <= fixed + coef * t <= b
                if coef.is_zero() {
                    if &fixed.clone().abs() > b || (interior && fixed.abs() == *b) {
                        return Ok(None);
                    }
                    continue;
                }
                let u1 = (b - &fixed) / &coef;
                let u2 = (-b - &fixed) / &coef;
                let (l, u) = if u1 <= u2 { (u1, u2) } else { (u2, u1) };
                if lo.as_ref().map_or(true, |v| l > *v) {
                    lo = Some(l);
                }
                if hi.as_ref().map_or(true, |v| u < *v) {
                    hi = Some(u);
                }
            }
            let (lo, hi) = (lo.unwrap(), hi.unwrap());
            if interior {
                Ok(open_integer_range(&lo, &hi))
            } else {
                Ok(closed_integer_range(&lo, &hi))
            }
        }
        BodyRep::Ellipsoid(e) => {
            // Quadratic in t: A t^2 + B t + C <= 1, coefficients recovered
            // from three exact evaluations.
            let n = body.dim();
            let eval = |t: i64| -> Rat {
                let mut x: Vec<Rat> =
                    prefix.iter().map(|v| Rat::from_integer(v.clone())).collect();
                x.push(Rat::from_integer(Int::from(t)));
                e.quadratic(&x)
            };
            let f0 = eval(0);
            let f1 = eval(1);
            let fm1 = eval(-1);
            let two = Rat::from_integer(Int::from(2));
            let a = (&f1 + &fm1) / &two - &f0;
            let b = (&f1 - &fm1) / &two;
            let c = &f0 - Rat::one();
            debug_assert!(a.is_positive());
            let disc = &b * &b - Rat::from_integer(Int::from(4)) * &a * &c;
            if disc.is_negative() {
                return Ok(None);
            }
            // Roots (-b -+ sqrt(disc)) / 2a as shift +- sqrt(radicand).
            let shift = -&b / (&two * &a);
            let radicand = &disc / (Rat::from_integer(Int::from(4)) * &a * &a);
            if interior {
                let lo = floor_minus_sqrt(&shift, &radicand) + 1;
                let hi = ceil_plus_sqrt(&shift, &radicand) - 1;
                Ok(if lo <= hi { Some((lo, hi)) } else { None })
            } else {
                let lo = ceil_minus_sqrt(&shift, &radicand);
                let hi = floor_plus_sqrt(&shift, &radicand);
                Ok(if lo <= hi { Some((lo, hi)) } else { None })
            }
        }
        BodyRep::VPolytope(v) => {
            let pref: Vec<Rat> = prefix.iter().map(|p| Rat::from_integer(p.clone())).collect();
            let Some((lo, hi)) = lp::fiber_range(v.vertices(), &pref) else {
                return Ok(None);
            };
            if interior {
                // The open chord is interior exactly when its midpoint is;
                // otherwise the whole chord lies in the boundary.
                if lo == hi {
                    return Ok(None);
                }
                let mut mid = pref.clone();
                mid.push((&lo + &hi) / Rat::from_integer(Int::from(2)));
                if !body.contains_interior(&mid)? {
                    return Ok(None);
                }
                Ok(open_integer_range(&lo, &hi))
            } else {
                Ok(closed_integer_range(&lo, &hi))
            }
        }
    }
}

fn closed_integer_range(lo: &Rat, hi: &Rat) -> Option<(Int, Int)> {
    let l = lo.ceil().to_integer();
    let h = hi.floor().to_integer();
    if l <= h {
        Some((l, h))
    } else {
        None
    }
}

fn open_integer_range(lo: &Rat, hi: &Rat) -> Option<(Int, Int)> {
    let l = lo.floor().to_integer() + 1;
    let h = hi.ceil().to_integer() - 1;
    if l <= h {
        Some((l, h))
    } else {
        None
    }
}

/// Hard cap on the doubling schedule for successive minima.
pub const MINIMA_SCALE_CAP: u64 = 64;

/// Successive minima of a 0-symmetric bounded body, with witnesses chosen
/// deterministically (ties broken by lexicographic order).
pub fn successive_minima(body: &Body) -> Result<SuccessiveMinima> {
    if !body.is_zero_symmetric() {
        return Err(Error::NotZeroSymmetric);
    }
    let n = body.dim();
    let mut t: u64 = 1;
    loop {
        let scaled = body.dilate(&Rat::from_integer(Int::from(t)));
        let pts = lattice_points(&scaled)?;
        let nonzero: Vec<&LatticePoint> = pts.iter().filter(|p| !p.is_zero()).collect();
        if linear_rank(&nonzero.iter().map(|p| (*p).clone()).collect::<Vec<_>>()) >= n {
            // All candidates with gauge <= t are inside t*K, so the greedy
            // selection below sees every relevant point.
            let mut with_gauge: Vec<(GaugeValue, LatticePoint)> = nonzero
                .into_iter()
                .map(|p| Ok((body.gauge(&p.to_rat())?, p.clone())))
                .collect::<Result<_>>()?;
            with_gauge.sort_by(|(ga, pa), (gb, pb)| ga.cmp(gb).then_with(|| pa.cmp(pb)));
            let mut values = Vec::with_capacity(n);
            let mut witnesses: Vec<LatticePoint> = Vec::with_capacity(n);
            for (g, p) in with_gauge {
                let mut trial = witnesses.clone();
                trial.push(p.clone());
                if linear_rank(&trial) > witnesses.len() {
                    values.push(g);
                    witnesses.push(p);
                    if witnesses.len() == n {
                        break;
                    }
                }
            }
            debug_assert_eq!(witnesses.len(), n);
            return Ok(SuccessiveMinima { values, witnesses });
        }
        if t >= MINIMA_SCALE_CAP {
            return Err(Error::MinimaCapExceeded(MINIMA_SCALE_CAP));
        }
        t *= 2;
    }
}

/// First successive minimum.
pub fn lambda1(body: &Body) -> Result<GaugeValue> {
    Ok(successive_minima(body)?.values[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, rat_int};
    use crate::bodies::standard::*;
    use crate::bodies::{RationalEllipsoid, SymmetricHPolytope};

    fn disk2() -> Body {
        Body::from_ellipsoid(
            RationalEllipsoid::new(
                vec![rat_int(0), rat_int(0)],
                vec![vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(1, 2)]],
            )
            .unwrap(),
        )
    }

    /// Independent oracle: scan a strictly larger box point by point using
    /// only the membership predicate.
    fn naive_points(body: &Body, interior: bool) -> PointSet {
        let bbox = body.bounding_box().unwrap();
        let pad = int(2);
        let mut out = PointSet::new(body.dim());
        let mut stack: Vec<Vec<Int>> = vec![vec![]];
        for (lo, hi) in &bbox {
            let mut next = Vec::new();
            for partial in &stack {
                let mut v = lo - &pad;
                while v <= hi + &pad {
                    let mut p = partial.clone();
                    p.push(v.clone());
                    next.push(p);
                    v += 1;
                }
            }
            stack = next;
        }
        for coords in stack {
            let p = LatticePoint(coords);
            let inside = if interior {
                body.contains_interior(&p.to_rat()).unwrap()
            } else {
                body.contains(&p.to_rat()).unwrap()
            };
            if inside {
                out.insert(p).unwrap();
            }
        }
        out
    }

    #[test]
    fn counts_match_known_values() {
        assert_eq!(count(&cube(2)).unwrap(), (9, 1, 8));
        assert_eq!(count(&cube(3)).unwrap(), (27, 1, 26));
        let slab22 = slab_parallelepiped(2, &int(2)).unwrap();
        assert_eq!(count(&slab22).unwrap(), (15, 3, 12));
        let slab23 = slab_parallelepiped(2, &int(3)).unwrap();
        assert_eq!(count(&slab23).unwrap(), (21, 5, 16));
        assert_eq!(count(&disk2()).unwrap(), (9, 5, 4));
        assert_eq!(count(&crosspolytope(2)).unwrap(), (5, 1, 4));
        let cross2 = crosspolytope(2).dilate(&rat_int(2));
        assert_eq!(count(&cross2).unwrap(), (13, 5, 8));
    }

    #[test]
    fn interior_points_of_slab() {
        let slab = slab_parallelepiped(2, &int(2)).unwrap();
        let pts = interior_lattice_points(&slab).unwrap();
        let want = PointSet::from_i64(2, &[&[0, -1], &[0, 0], &[0, 1]]);
        assert_eq!(pts, want);
    }

    #[test]
    fn enumeration_matches_naive_scan() {
        let h = Body::from_hpolytope(
            SymmetricHPolytope::new(
                2,
                vec![
                    (vec![int(1), int(1)], rat_int(2)),
                    (vec![int(1), int(-1)], rat_int(1)),
                ],
            )
            .unwrap(),
        );
        let sheared = unimodular_image(
            &crate::matrix::IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]),
            &cube(2),
        )
        .unwrap();
        let offcenter = ellipsoid(
            vec![vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(1, 3)]],
            vec![rat(1, 2), rat(-1, 3)],
        )
        .unwrap();
        for body in [cube(2), crosspolytope(3), disk2(), h, sheared, offcenter] {
            for interior in [false, true] {
                let fast = enumerate(&body, interior).unwrap();
                let slow = naive_points(&body, interior);
                assert_eq!(fast, slow, "mismatch (interior={interior})");
            }
        }
    }

    #[test]
    fn minima_of_cubes() {
        let sm = successive_minima(&cube(3)).unwrap();
        assert_eq!(sm.values, vec![GaugeValue::one(); 3]);
        let sm = successive_minima(&cube(2).dilate(&rat_int(2))).unwrap();
        assert_eq!(
            sm.values,
            vec![GaugeValue::from_rational(&rat(1, 2)); 2]
        );
    }

    #[test]
    fn minima_of_slab() {
        let slab = slab_parallelepiped(2, &int(3)).unwrap();
        let sm = successive_minima(&slab).unwrap();
        assert_eq!(sm.values[0], GaugeValue::from_rational(&rat(1, 3)));
        assert_eq!(sm.values[1], GaugeValue::one());
        // Lexicographic tie-break picks (0,-1) over the equal-gauge (0,1),
        // and (-1,-3) is the lex-least independent point of gauge one.
        assert_eq!(sm.witnesses[0], LatticePoint::from_i64(&[0, -1]));
        assert_eq!(sm.witnesses[1], LatticePoint::from_i64(&[-1, -3]));
        assert_eq!(
            slab.gauge(&sm.witnesses[1].to_rat()).unwrap(),
            GaugeValue::one()
        );
    }

    #[test]
    fn minima_of_small_ellipsoid() {
        // x^2 + y^2 <= 1/4 contains no nonzero lattice point; lambda_1 = 2.
        let e = ellipsoid(
            vec![vec![rat_int(4), rat_int(0)], vec![rat_int(0), rat_int(4)]],
            vec![rat_int(0), rat_int(0)],
        )
        .unwrap();
        let sm = successive_minima(&e).unwrap();
        assert_eq!(sm.values[0], GaugeValue::from_rational(&rat_int(2)));
        assert_eq!(sm.values[1], GaugeValue::from_rational(&rat_int(2)));
    }

    #[test]
    fn lambda1_examples() {
        assert_eq!(lambda1(&cube(2)).unwrap(), GaugeValue::one());
        assert_eq!(
            lambda1(&disk2()).unwrap(),
            GaugeValue::from_radicand(rat(1, 2))
        );
        let slab = slab_parallelepiped(2, &int(5)).unwrap();
        assert_eq!(
            lambda1(&slab).unwrap(),
            GaugeValue::from_rational(&rat(1, 5))
        );
        assert!(lambda1(&ellipsoid(
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]],
            vec![rat(1, 2), rat(0, 1)],
        )
        .unwrap())
        .is_err());
    }

    #[test]
    fn lambda1_is_min_gauge_over_scaled_box() {
        // Oracle: lambda_1 equals the minimum gauge over nonzero lattice
        // points of a generously scaled copy.
        for body in [cube(2), crosspolytope(2), disk2()] {
            let l1 = lambda1(&body).unwrap();
            let scaled = body.dilate(&rat_int(4));
            let mut best: Option<GaugeValue> = None;
            for p in lattice_points(&scaled).unwrap().iter() {
                if p.is_zero() {
                    continue;
                }
                let g = body.gauge(&p.to_rat()).unwrap();
                if best.as_ref().map_or(true, |b| g < *b) {
                    best = Some(g);
                }
            }
            assert_eq!(best.unwrap(), l1);
        }
    }
}
