//! Lattice points of Z^n, residue classes, and finite point sets.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::rational_rank;

/// A point of Z^n with exact integer coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<Int>);

impl LatticePoint {
    pub fn from_i64(coords: &[i64]) -> Self {
        LatticePoint(coords.iter().map(|&v| Int::from(v)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![Int::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn neg(&self) -> Self {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, t: &Int) -> Self {
        LatticePoint(self.0.iter().map(|c| c * t).collect())
    }

    /// Coordinate-wise exact division; None when any coordinate is not divisible.
    pub fn div_exact(&self, m: &Int) -> Option<Self> {
        let mut out = Vec::with_capacity(self.dim());
        for c in &self.0 {
            let (q, r) = c.div_rem(m);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(LatticePoint(out))
    }

    pub fn to_rat(&self) -> Vec<Rat> {
        self.0.iter().map(|c| Rat::from_integer(c.clone())).collect()
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A residue class of Z^n modulo m, stored by its canonical representative
/// with all entries reduced into [0, m).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueClass {
    pub modulus: Int,
    pub representative: Vec<Int>,
}

fn check_modulus(m: &Int) -> Result<()> {
    if *m < Int::from(2) {
        return Err(Error::BadModulus(m.clone()));
    }
    Ok(())
}

/// Whether x and y are congruent modulo m, i.e. x - y lies in m*Z^n.
pub fn congruent(x: &LatticePoint, y: &LatticePoint, m: &Int) -> Result<bool> {
    check_modulus(m)?;
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    Ok(x.0
        .iter()
        .zip(&y.0)
        .all(|(a, b)| ((a - b) % m).is_zero()))
}

/// Canonical residue class of x modulo m.
pub fn residue_class(x: &LatticePoint, m: &Int) -> Result<ResidueClass> {
    check_modulus(m)?;
    Ok(ResidueClass {
        modulus: m.clone(),
        representative: x.0.iter().map(|c| c.mod_floor(m)).collect(),
    })
}

/// A finite set of lattice points of a fixed dimension, kept in canonical
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointSet {
    dim: usize,
    points: BTreeSet<LatticePoint>,
}

impl PointSet {
    pub fn new(dim: usize) -> Self {
        PointSet {
            dim,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points(dim: usize, pts: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut set = PointSet::new(dim);
        for p in pts {
            set.insert(p)?;
        }
        Ok(set)
    }

    pub fn from_i64(dim: usize, pts: &[&[i64]]) -> Self {
        Self::from_points(dim, pts.iter().map(|p| LatticePoint::from_i64(p))).unwrap()
    }

    pub fn insert(&mut self, p: LatticePoint) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        self.points.insert(p);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &LatticePoint> {
        self.points.iter()
    }

    pub fn first(&self) -> Option<&LatticePoint> {
        self.points.iter().next()
    }

    /// The set { -p : p in self }.
    pub fn negated(&self) -> PointSet {
        PointSet {
            dim: self.dim,
            points: self.points.iter().map(|p| p.neg()).collect(),
        }
    }

    /// The set translated by v.
    pub fn translated(&self, v: &LatticePoint) -> PointSet {
        PointSet {
            dim: self.dim,
            points: self.points.iter().map(|p| p.add(v)).collect(),
        }
    }

    /// Translation moving the lexicographic minimum to the origin.
    pub fn normalized_translation(&self) -> PointSet {
        match self.first() {
            None => self.clone(),
            Some(anchor) => {
                let a = anchor.clone();
                PointSet {
                    dim: self.dim,
                    points: self.points.iter().map(|p| p.sub(&a)).collect(),
                }
            }
        }
    }
}

/// Whether all points of a nonempty set lie on one affine line.
pub fn is_collinear(u: &PointSet) -> Result<bool> {
    Ok(affine_dim(u)? <= 1)
}

/// Affine dimension: rank of { p - p0 : p in U } for a fixed anchor p0.
pub fn affine_dim(u: &PointSet) -> Result<usize> {
    let anchor = u.first().ok_or(Error::EmptyPointSet)?.clone();
    let rows: Vec<Vec<Rat>> = u
        .iter()
        .skip(1)
        .map(|p| p.sub(&anchor).to_rat())
        .collect();
    Ok(rational_rank(&rows))
}

/// Exact rank of a list of integer vectors.
pub fn linear_rank(vectors: &[LatticePoint]) -> usize {
    let rows: Vec<Vec<Rat>> = vectors.iter().map(|p| p.to_rat()).collect();
    rational_rank(&rows)
}
