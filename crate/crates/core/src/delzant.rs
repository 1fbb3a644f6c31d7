//! Smooth vertices and Delzant polytopes.
//!
//! A vertex is smooth when its edges number exactly `dim` and their
//! primitive directions form a Z-basis of the lattice. For a polytope of
//! dimension below the ambient rank the lattice is the saturated lattice of
//! the direction space of its affine hull.

use alloc::vec::Vec;

use num_traits::One;

use crate::lattice;
use crate::num::{Int, IntVector, RatVector};
use crate::polytope::{Polytope, PolytopeError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothnessFailure {
    EdgeCountMismatch { edges: usize, dim: usize },
    /// The edge directions generate a sublattice of the given index.
    NotZBasis { index: Int },
    /// Never produced for rational polytopes.
    IrrationalSlope,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub vertex: RatVector,
    pub is_smooth: bool,
    pub edge_directions: Vec<IntVector>,
    pub failure_reason: Option<SmoothnessFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantReport {
    pub is_delzant: bool,
    pub vertices: Vec<SmoothnessReport>,
}

impl DelzantReport {
    pub fn failures(&self) -> impl Iterator<Item = &SmoothnessReport> {
        self.vertices.iter().filter(|r| !r.is_smooth)
    }
}

pub fn is_smooth_vertex(p: &Polytope, v: &RatVector) -> Result<SmoothnessReport, PolytopeError> {
    let edges = p.edges_at_vertex(v)?;
    let edge_directions: Vec<IntVector> = edges.into_iter().map(|e| e.direction).collect();
    let failure = if edge_directions.len() != p.dim() {
        Some(SmoothnessFailure::EdgeCountMismatch {
            edges: edge_directions.len(),
            dim: p.dim(),
        })
    } else if p.is_full_dimensional() {
        let ok = lattice::is_z_basis(&edge_directions, p.rank())
            .expect("edge count equals the rank");
        if ok {
            None
        } else {
            let index = lattice::saturate(&edge_directions, p.rank())
                .expect("edge directions have ambient length")
                .index;
            Some(SmoothnessFailure::NotZBasis { index })
        }
    } else {
        // The edges at a vertex span the direction space of the hull, so
        // the saturation of the edges is the hull lattice.
        let index = lattice::saturate(&edge_directions, p.rank())
            .expect("edge directions have ambient length")
            .index;
        if index.is_one() {
            None
        } else {
            Some(SmoothnessFailure::NotZBasis { index })
        }
    };
    Ok(SmoothnessReport {
        vertex: v.clone(),
        is_smooth: failure.is_none(),
        edge_directions,
        failure_reason: failure,
    })
}

/// Checks every vertex; the report lists all of them.
pub fn is_delzant(p: &Polytope) -> DelzantReport {
    let vertices: Vec<SmoothnessReport> = p
        .vertices()
        .iter()
        .map(|v| is_smooth_vertex(p, v).expect("vertex of its own polytope"))
        .collect();
    DelzantReport {
        is_delzant: vertices.iter().all(|r| r.is_smooth),
        vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use crate::polytope::box_polytope;
    use proptest::prelude::*;

    fn pt(xs: &[i64]) -> RatVector {
        RatVector::from_i64s(xs)
    }

    fn hull(points: &[&[i64]]) -> Polytope {
        let pts: Vec<RatVector> = points.iter().map(|p| pt(p)).collect();
        Polytope::from_vertices(&pts).unwrap()
    }

    #[test]
    fn square_and_scaled_simplex_are_smooth() {
        let sq = box_polytope(&[(0, 1), (0, 1)]);
        assert!(is_smooth_vertex(&sq, &pt(&[0, 0])).unwrap().is_smooth);
        assert!(is_delzant(&sq).is_delzant);

        let tri = hull(&[&[0, 0], &[2, 0], &[0, 2]]);
        let rep = is_delzant(&tri);
        assert!(rep.is_delzant);
        assert_eq!(rep.vertices.len(), 3);
    }

    #[test]
    fn determinant_two_corner_is_not_smooth() {
        // Edges (1,0) and (1,2) at the origin.
        let tri = hull(&[&[0, 0], &[1, 0], &[1, 2]]);
        let r = is_smooth_vertex(&tri, &pt(&[0, 0])).unwrap();
        assert!(!r.is_smooth);
        assert_eq!(
            r.failure_reason,
            Some(SmoothnessFailure::NotZBasis { index: Int::from(2) })
        );
    }

    #[test]
    fn thin_triangle_fails_at_its_apex() {
        let tri = hull(&[&[0, 0], &[2, 0], &[0, 1]]);
        let rep = is_delzant(&tri);
        assert!(!rep.is_delzant);
        let bad: Vec<_> = rep.failures().map(|r| r.vertex.clone()).collect();
        assert_eq!(bad, [pt(&[0, 1])]);
    }

    #[test]
    fn hirzebruch_trapezoid_is_delzant() {
        let (m, a) = (1, 2);
        let trap = hull(&[&[0, 0], &[1, -m], &[1, a], &[0, a]]);
        assert!(is_delzant(&trap).is_delzant);
    }

    #[test]
    fn simplicial_cone_of_a_non_simple_vertex() {
        // Apex of a square pyramid has four edges in dimension three.
        let pyr = hull(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[2, 2, 0], &[1, 1, 1]]);
        let r = is_smooth_vertex(&pyr, &pt(&[1, 1, 1])).unwrap();
        assert_eq!(
            r.failure_reason,
            Some(SmoothnessFailure::EdgeCountMismatch { edges: 4, dim: 3 })
        );
    }

    #[test]
    fn lower_dimensional_pieces_use_the_hull_lattice() {
        let seg = hull(&[&[0, 0], &[2, 4]]);
        assert!(is_delzant(&seg).is_delzant);

        let flat = hull(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert!(is_delzant(&flat).is_delzant);

        let skew = hull(&[&[0, 0, 0], &[1, 1, 0], &[1, -1, 0]]);
        let r = is_smooth_vertex(&skew, &pt(&[0, 0, 0])).unwrap();
        assert!(!r.is_smooth);
    }

    #[test]
    fn not_a_vertex() {
        let sq = box_polytope(&[(0, 1), (0, 1)]);
        let mid = RatVector::new(alloc::vec![rat(1, 2), rat(0, 1)]);
        assert!(matches!(
            is_smooth_vertex(&sq, &mid),
            Err(PolytopeError::NotVertex(_))
        ));
    }

    fn unimodular_2x2() -> impl Strategy<Value = [[i64; 2]; 2]> {
        proptest::array::uniform2(proptest::array::uniform2(-2i64..=2))
            .prop_filter("unimodular", |m| (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1)
    }

    fn fixtures() -> Vec<Polytope> {
        alloc::vec![
            box_polytope(&[(0, 1), (0, 1)]),
            hull(&[&[0, 0], &[2, 0], &[0, 1]]),
            hull(&[&[0, 0], &[1, 0], &[1, 2]]),
            hull(&[&[0, 0], &[1, -2], &[1, 3], &[0, 3]]),
            hull(&[&[-2, -1], &[-1, -1], &[0, 0], &[0, 1], &[-2, 1]]),
        ]
    }

    proptest! {
        #[test]
        fn delzant_is_invariant_under_lattice_automorphisms(
            u in unimodular_2x2(),
            shift in proptest::array::uniform2(-3i64..=3),
        ) {
            let rows = [IntVector::from_i64s(&u[0]), IntVector::from_i64s(&u[1])];
            for p in fixtures() {
                let q = p.affine_image(&rows, &pt(&shift)).unwrap();
                prop_assert_eq!(is_delzant(&p).is_delzant, is_delzant(&q).is_delzant);
            }
        }
    }
}
