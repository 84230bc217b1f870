//! Closed equilateral walks: the edge-sequence data model and its verifier.
//!
//! A walk is an ordered list of edge vectors. It represents an equilateral
//! polygon exactly when all edges share one squared norm and the edges sum
//! to zero; [`EquilateralWalk::verify`] checks both conditions exactly and
//! reports the findings rather than rejecting imperfect data, so that
//! deserialized walks stay diagnosable.

use num_bigint::BigInt;
use num_traits::Signed;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::lattice::{LatticeParams, LatticeVector};
use crate::simplicity::is_simple;

/// A candidate equilateral closed polygon: a lattice parameter plus an
/// ordered list of edge vectors.
///
/// No validity is enforced at construction; `verify` reports it. Walks
/// produced by the construction routines always verify as closed and
/// equilateral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquilateralWalk {
    params: LatticeParams,
    edges: Vec<LatticeVector>,
}

impl EquilateralWalk {
    pub fn new(params: LatticeParams, edges: Vec<LatticeVector>) -> Self {
        EquilateralWalk { params, edges }
    }

    pub fn params(&self) -> &LatticeParams {
        &self.params
    }

    pub fn edges(&self) -> &[LatticeVector] {
        &self.edges
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn into_parts(self) -> (LatticeParams, Vec<LatticeVector>) {
        (self.params, self.edges)
    }

    /// The `n + 1` prefix-sum points of the walk, starting at `origin`.
    /// For a closed walk the last point equals the first.
    pub fn vertices(&self, origin: &LatticeVector) -> Vec<LatticeVector> {
        let mut points = Vec::with_capacity(self.edges.len() + 1);
        points.push(origin.clone());
        let mut current = origin.clone();
        for edge in &self.edges {
            current = &current + edge;
            points.push(current.clone());
        }
        points
    }

    /// Checks closure (edge sum zero) and equilaterality (one shared squared
    /// norm), both in exact arithmetic. `side_sq` is reported exactly when
    /// the walk is equilateral. Simplicity is only examined on request and
    /// only for closed walks.
    ///
    /// Errors: `WalkTooShort` if there are fewer than 3 edges, `ZeroEdge` if
    /// any edge is the zero vector.
    pub fn verify(&self, check_simplicity: bool) -> Result<VerificationReport> {
        let n = self.edges.len();
        if n < 3 {
            return Err(Error::WalkTooShort { n });
        }
        if let Some(index) = self.edges.iter().position(LatticeVector::is_zero) {
            return Err(Error::ZeroEdge { index });
        }

        let is_closed = edge_sum(&self.edges).is_zero();

        let first_norm = self.edges[0].norm_sq(&self.params);
        let is_equilateral = self.edges[1..]
            .iter()
            .all(|e| e.norm_sq(&self.params) == first_norm);
        let side_sq = is_equilateral.then_some(first_norm);

        let simple = if check_simplicity && is_closed {
            Some(is_simple(self)?)
        } else {
            None
        };

        Ok(VerificationReport {
            n,
            is_closed,
            is_equilateral,
            side_sq,
            is_simple: simple,
        })
    }
}

/// Outcome of [`EquilateralWalk::verify`].
///
/// `side_sq` is present exactly when `is_equilateral` holds; `is_simple` is
/// populated only when simplicity was requested and the walk is closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub is_closed: bool,
    pub is_equilateral: bool,
    pub side_sq: Option<BigInt>,
    pub is_simple: Option<bool>,
}

impl VerificationReport {
    /// Closed and equilateral: the walk is a genuine equilateral polygon.
    pub fn is_valid_polygon(&self) -> bool {
        self.is_closed && self.is_equilateral
    }
}

/// Componentwise sum of a list of edges.
pub fn edge_sum(edges: &[LatticeVector]) -> LatticeVector {
    edges
        .iter()
        .fold(LatticeVector::zero(), |acc, e| &acc + e)
}

/// Canonical edge order used for serialized walks.
///
/// Edges are grouped by exact direction: positive-`b` edges first in
/// decreasing slope order, then `b = 0` edges with positive `a`, then
/// negative-`b` edges in decreasing slope order, then `b = 0` edges with
/// negative `a`. Slopes `b*sqrt(m)/a` are compared exactly via cross
/// products (the common factor `sqrt(m)` cancels); vertical edges rank
/// first within their group. Ties fall back to lexicographic order, which
/// makes the order total on arbitrary multisets.
pub fn canonical_cmp(u: &LatticeVector, v: &LatticeVector) -> Ordering {
    let gu = group_rank(u);
    let gv = group_rank(v);
    if gu != gv {
        return gu.cmp(&gv);
    }
    // Within the positive-b and negative-b groups, sort by decreasing slope.
    if (gu == 0 || gu == 2) && !u.a.is_zero() && !v.a.is_zero() {
        // Same slope class means a*a' > 0, so b/a > b'/a' iff b*a' > b'*a.
        let cu = slope_class(u);
        let cv = slope_class(v);
        if cu != cv {
            return cu.cmp(&cv);
        }
        let cross = &u.b * &v.a - &v.b * &u.a;
        if cross.is_positive() {
            return Ordering::Less;
        }
        if cross.is_negative() {
            return Ordering::Greater;
        }
    } else if gu == 0 || gu == 2 {
        let cu = slope_class(u);
        let cv = slope_class(v);
        if cu != cv {
            return cu.cmp(&cv);
        }
    }
    (&u.a, &u.b).cmp(&(&v.a, &v.b))
}

/// Sorts an edge multiset into the canonical order.
pub fn canonical_order(mut edges: Vec<LatticeVector>) -> Vec<LatticeVector> {
    edges.sort_by(canonical_cmp);
    edges
}

fn group_rank(v: &LatticeVector) -> u8 {
    if v.b.is_positive() {
        0
    } else if v.b.is_negative() {
        2
    } else if v.a.is_positive() {
        1
    } else if v.a.is_negative() {
        3
    } else {
        4
    }
}

/// 0 = vertical (slope +inf), 1 = positive slope, 2 = negative slope.
/// Only meaningful for edges with nonzero `b`.
fn slope_class(v: &LatticeVector) -> u8 {
    if v.a.is_zero() {
        0
    } else if v.a.is_positive() == v.b.is_positive() {
        1
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn walk(m: i64, edges: &[(i64, i64)]) -> EquilateralWalk {
        EquilateralWalk::new(
            LatticeParams::new(m).unwrap(),
            edges
                .iter()
                .map(|&(a, b)| LatticeVector::new(a, b))
                .collect(),
        )
    }

    #[test]
    fn edge_sum_examples() {
        let edges: Vec<_> = [(1, 1), (1, -1), (-1, -1), (-1, 1)]
            .iter()
            .map(|&(a, b)| LatticeVector::new(a, b))
            .collect();
        assert_eq!(edge_sum(&edges), LatticeVector::zero());
        assert_eq!(
            edge_sum(&[LatticeVector::new(2, 0)]),
            LatticeVector::new(2, 0)
        );
        // the 3-edge base walk for m = 3
        let edges: Vec<_> = [(14, 0), (-7, -7), (-7, 7)]
            .iter()
            .map(|&(a, b)| LatticeVector::new(a, b))
            .collect();
        assert_eq!(edge_sum(&edges), LatticeVector::zero());
    }

    #[test]
    fn vertices_are_prefix_sums() {
        let w = walk(3, &[(2, 0), (-1, 1), (-1, -1)]);
        let pts = w.vertices(&LatticeVector::zero());
        let expected: Vec<_> = [(0, 0), (2, 0), (1, 1), (0, 0)]
            .iter()
            .map(|&(a, b)| LatticeVector::new(a, b))
            .collect();
        assert_eq!(pts, expected);
    }

    #[test]
    fn vertices_of_empty_walk() {
        let w = walk(3, &[]);
        let origin = LatticeVector::new(5, 5);
        assert_eq!(w.vertices(&origin), vec![origin]);
    }

    #[test]
    fn verify_triangle() {
        let w = walk(3, &[(14, 0), (-7, -7), (-7, 7)]);
        let report = w.verify(false).unwrap();
        assert_eq!(report.n, 3);
        assert!(report.is_closed);
        assert!(report.is_equilateral);
        assert_eq!(report.side_sq, Some(BigInt::from(196)));
        assert_eq!(report.is_simple, None);
    }

    #[test]
    fn verify_detects_corruption() {
        let w = walk(3, &[(1, 0), (-7, -7), (-7, 7)]);
        let report = w.verify(false).unwrap();
        assert!(!report.is_equilateral);
        assert_eq!(report.side_sq, None);
        assert!(!report.is_closed);
    }

    #[test]
    fn verify_rejects_short_and_zero_edges() {
        let w = walk(3, &[(1, 0), (-1, 0)]);
        assert_eq!(w.verify(false), Err(Error::WalkTooShort { n: 2 }));
        let w = walk(3, &[(1, 0), (0, 0), (-1, 0)]);
        assert_eq!(w.verify(false), Err(Error::ZeroEdge { index: 1 }));
    }

    #[test]
    fn verify_invariant_under_rotation_and_reversal() {
        let base = [(14, 0), (-7, -7), (-7, 7)];
        let reference = walk(3, &base).verify(false).unwrap();
        for shift in 0..base.len() {
            let mut rotated = base.to_vec();
            rotated.rotate_left(shift);
            assert_eq!(walk(3, &rotated).verify(false).unwrap(), reference);
        }
        let reversed: Vec<_> = base.iter().rev().map(|&(a, b)| (-a, -b)).collect();
        assert_eq!(walk(3, &reversed).verify(false).unwrap(), reference);
    }

    #[test]
    fn vertices_translate_with_origin() {
        let w = walk(3, &[(2, 0), (-1, 1), (-1, -1)]);
        let shift = LatticeVector::new(10, -4);
        let base = w.vertices(&LatticeVector::zero());
        let moved = w.vertices(&shift);
        for (p, q) in base.iter().zip(&moved) {
            assert_eq!(&(p + &shift), q);
        }
    }

    #[test]
    fn canonical_order_of_base_walks() {
        // m = 3: one positive-b edge, then the positive x-axis edge, then
        // the negative-b edge.
        let edges = canonical_order(
            [(14, 0), (-7, -7), (-7, 7)]
                .iter()
                .map(|&(a, b)| LatticeVector::new(a, b))
                .collect(),
        );
        let expected: Vec<_> = [(-7, 7), (14, 0), (-7, -7)]
            .iter()
            .map(|&(a, b)| LatticeVector::new(a, b))
            .collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn canonical_order_sorts_by_decreasing_slope() {
        let edges = canonical_order(
            [
                (3, -1),
                (-2, 0),
                (0, 2),
                (-3, -1),
                (1, 2),
                (4, 0),
                (-1, 2),
                (0, -2),
            ]
            .iter()
            .map(|&(a, b)| LatticeVector::new(a, b))
            .collect(),
        );
        let expected: Vec<_> = [
            (0, 2),   // vertical up
            (1, 2),   // slope +2
            (-1, 2),  // slope -2
            (4, 0),   // +x axis
            (0, -2),  // vertical down
            (-3, -1), // slope +1/3
            (3, -1),  // slope -1/3
            (-2, 0),  // -x axis
        ]
        .iter()
        .map(|&(a, b)| LatticeVector::new(a, b))
        .collect();
        assert_eq!(edges, expected);
    }
}
