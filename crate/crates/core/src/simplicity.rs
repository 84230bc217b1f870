//! Exact simplicity test for closed walks.
//!
//! Vertex coordinates are pairs `(a, b*sqrt(m))`, so every orientation and
//! on-segment predicate reduces to the sign of an element of `Z[sqrt(m)]`,
//! computed exactly via [`QuadInt::sign`]. Collinear overlap of segments
//! counts as an intersection, and coincident distinct vertices make a walk
//! non-simple; both outcomes are reported, never raised as errors.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::{LatticeParams, LatticeVector, QuadInt};
use crate::walk::{edge_sum, EquilateralWalk};

/// A point with coordinates in `Z[sqrt(m)]`: `x = a + 0*sqrt(m)`,
/// `y = 0 + b*sqrt(m)`.
#[derive(Debug, Clone)]
struct QuadPoint {
    x: QuadInt,
    y: QuadInt,
}

impl QuadPoint {
    fn from_lattice(v: &LatticeVector) -> Self {
        QuadPoint {
            x: QuadInt::new(v.a.clone(), BigInt::from(0)),
            y: QuadInt::new(BigInt::from(0), v.b.clone()),
        }
    }
}

/// Sign of the cross product `(q - p) x (r - p)`: positive for a left turn,
/// zero for collinear points.
fn orient(p: &QuadPoint, q: &QuadPoint, r: &QuadPoint, params: &LatticeParams) -> i32 {
    let dqx = q.x.sub(&p.x);
    let dqy = q.y.sub(&p.y);
    let drx = r.x.sub(&p.x);
    let dry = r.y.sub(&p.y);
    let cross = dqx.mul(&dry, params).sub(&dqy.mul(&drx, params));
    cross.sign(params)
}

/// Whether `r`, already known to be collinear with segment `pq`, lies on the
/// closed segment. Checked coordinate-wise with exact signs.
fn on_segment(p: &QuadPoint, q: &QuadPoint, r: &QuadPoint, params: &LatticeParams) -> bool {
    within(&p.x, &q.x, &r.x, params) && within(&p.y, &q.y, &r.y, params)
}

/// min(lo, hi) <= v <= max(lo, hi) over `Z[sqrt(m)]`.
fn within(lo: &QuadInt, hi: &QuadInt, v: &QuadInt, params: &LatticeParams) -> bool {
    // v - lo and hi - v agree in sign exactly when v lies between the
    // endpoints, whichever way round they are.
    v.sub(lo).sign(params) * hi.sub(v).sign(params) >= 0
}

/// Closed-segment intersection test, exact. Touching endpoints and collinear
/// overlap both count as intersections.
fn segments_intersect(
    p1: &QuadPoint,
    p2: &QuadPoint,
    q1: &QuadPoint,
    q2: &QuadPoint,
    params: &LatticeParams,
) -> bool {
    let o1 = orient(p1, p2, q1, params);
    let o2 = orient(p1, p2, q2, params);
    let o3 = orient(q1, q2, p1, params);
    let o4 = orient(q1, q2, p2, params);

    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(p1, p2, q1, params))
        || (o2 == 0 && on_segment(p1, p2, q2, params))
        || (o3 == 0 && on_segment(q1, q2, p1, params))
        || (o4 == 0 && on_segment(q1, q2, p2, params))
}

/// Whether a closed walk traces a simple polygon: no coincident distinct
/// vertices, no intersection between non-adjacent edges, and adjacent edges
/// sharing only their common endpoint.
///
/// Errors with `NotClosed` when the edge sum is nonzero.
pub fn is_simple(walk: &EquilateralWalk) -> Result<bool> {
    let sum = edge_sum(walk.edges());
    if !sum.is_zero() {
        return Err(Error::NotClosed { sum });
    }
    let params = walk.params();
    let n = walk.n();
    if n == 0 {
        return Ok(false);
    }

    // All n vertices must be pairwise distinct; this also catches zero
    // edges and the collapse created by inserted {u, -u} pairs.
    let vertices = walk.vertices(&LatticeVector::zero());
    let corners = &vertices[..n];
    let mut seen = HashSet::with_capacity(n);
    for v in corners {
        if !seen.insert((v.a.clone(), v.b.clone())) {
            return Ok(false);
        }
    }

    // Adjacent edges may share only their common endpoint: reject the pair
    // when it is collinear and doubles back (negative dot product).
    let m = params.m();
    for i in 0..n {
        let e1 = &walk.edges()[i];
        let e2 = &walk.edges()[(i + 1) % n];
        let cross = &e1.a * &e2.b - &e2.a * &e1.b;
        if cross.is_zero() {
            let dot = &e1.a * &e2.a + m * &e1.b * &e2.b;
            if dot.is_negative() {
                return Ok(false);
            }
        }
    }

    let points: Vec<QuadPoint> = vertices.iter().map(QuadPoint::from_lattice).collect();
    for i in 0..n {
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue; // adjacent around the wrap
            }
            if segments_intersect(
                &points[i],
                &points[i + 1],
                &points[j],
                &points[j + 1],
                params,
            ) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeParams;

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
    fn triangle_is_simple() {
        let w = walk(3, &[(14, 0), (-7, -7), (-7, 7)]);
        assert_eq!(is_simple(&w), Ok(true));
    }

    #[test]
    fn parallelogram_is_simple() {
        let w = walk(7, &[(1, 1), (1, -1), (-1, -1), (-1, 1)]);
        assert_eq!(is_simple(&w), Ok(true));
    }

    #[test]
    fn immediate_backtrack_is_not_simple() {
        let w = walk(3, &[(2, 0), (-2, 0), (2, 0), (-1, 1), (-1, -1)]);
        assert_eq!(is_simple(&w), Ok(false));
    }

    #[test]
    fn crossing_edges_are_not_simple() {
        // A bowtie: vertices (0,0), (1,1), (1,0), (0,1); the first and third
        // segments cross properly.
        let w = walk(3, &[(1, 1), (0, -1), (-1, 1), (0, -1)]);
        assert_eq!(is_simple(&w), Ok(false));
    }

    #[test]
    fn collinear_overlap_counts_as_intersection() {
        // Vertex (1, 0) of the fourth segment lies in the interior of the
        // first segment (0,0)-(3,0).
        let w = walk(5, &[(3, 0), (-1, 1), (-1, -1), (-1, 1), (0, -1)]);
        assert_eq!(is_simple(&w), Ok(false));
    }

    #[test]
    fn coincident_vertices_are_not_simple() {
        // A closed equilateral figure-eight for m = 3 (all norms 4): two
        // triangles glued at the origin, which is revisited mid-walk.
        let w = walk(3, &[(1, 1), (1, -1), (-2, 0), (-1, 1), (-1, -1), (2, 0)]);
        assert_eq!(is_simple(&w), Ok(false));
    }

    #[test]
    fn open_walk_is_an_error() {
        let w = walk(3, &[(1, 1), (1, -1)]);
        assert!(matches!(is_simple(&w), Err(Error::NotClosed { .. })));
    }
}
