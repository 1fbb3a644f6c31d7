//! Compact rational polytopes with both representations.
//!
//! A [`Polytope`] carries an irredundant list of facet halfspaces, a list of
//! equations cutting out its affine hull, and its exact vertex set. Either
//! representation can be the input; the other one is produced by the double
//! description method. Polytopes of dimension below the ambient rank are
//! supported throughout.

mod dd;

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg;
use crate::num::{Int, IntVector, Rat, RatVector};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("halfspace normal is zero")]
    ZeroNormal,
    #[error("feasible set is empty")]
    Empty,
    #[error("feasible set is unbounded")]
    Unbounded,
    #[error("expected coordinates of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point {0} is not contained in the polytope")]
    NotContained(RatVector),
    #[error("point {0} is not a vertex of the polytope")]
    NotVertex(RatVector),
}

/// The closed halfspace `{x : <normal, x> >= offset}` with a primitive
/// normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    normal: IntVector,
    offset: Rat,
}

impl HalfSpace {
    /// Builds `<normal, x> >= offset`, rescaling so the normal is primitive.
    pub fn new(normal: IntVector, offset: Rat) -> Result<Self, PolytopeError> {
        let g = normal.content();
        if g.is_zero() {
            return Err(PolytopeError::ZeroNormal);
        }
        if g.is_one() {
            return Ok(HalfSpace { normal, offset });
        }
        let normal = normal.primitive_part();
        let offset = offset / Rat::from_integer(g);
        Ok(HalfSpace { normal, offset })
    }

    /// `<normal, x> >= offset` from machine integers; panics on a zero normal.
    pub fn from_i64s(normal: &[i64], offset: Rat) -> Self {
        HalfSpace::new(IntVector::from_i64s(normal), offset).expect("nonzero normal")
    }

    /// The rational halfspace `<normal, x> >= offset` for a rational normal.
    pub fn from_rational(normal: &RatVector, offset: Rat) -> Result<Self, PolytopeError> {
        let l = crate::num::lcm_denominators(normal.entries());
        let scaled = normal.clear_denominators();
        HalfSpace::new(scaled, offset * Rat::from_integer(l))
    }

    pub fn normal(&self) -> &IntVector {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn rank(&self) -> usize {
        self.normal.len()
    }

    /// `<normal, x> - offset`; non-negative exactly on the halfspace.
    pub fn slack(&self, point: &RatVector) -> Rat {
        self.normal.pair(point) - &self.offset
    }

    pub fn contains(&self, point: &RatVector) -> bool {
        !self.slack(point).is_negative()
    }

    pub fn is_tight(&self, point: &RatVector) -> bool {
        self.slack(point).is_zero()
    }

    /// The opposite closed halfspace `<normal, x> <= offset`.
    pub fn flipped(&self) -> HalfSpace {
        HalfSpace {
            normal: self.normal.neg(),
            offset: -self.offset.clone(),
        }
    }

    /// Same inequality on `Q^k x Q`, ignoring the new coordinate.
    pub fn extended(&self) -> HalfSpace {
        HalfSpace {
            normal: self.normal.extended(Int::zero()),
            offset: self.offset.clone(),
        }
    }

    // Integer vector (d*normal, -p) for offset p/d, a constraint on the
    // homogenized point (x, t).
    fn homogenized(&self) -> IntVector {
        let d = self.offset.denom().clone();
        self.normal.scale(&d).extended(-self.offset.numer().clone())
    }
}

/// A face of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Indices into [`Polytope::facets`] of the facets containing the face.
    pub active_halfspaces: Vec<usize>,
    /// Indices into [`Polytope::vertices`].
    pub vertex_indices: Vec<usize>,
    pub vertices: Vec<RatVector>,
    pub dim: usize,
}

/// An edge `e` at a vertex `v`, written `e/v = v + length_param * direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeAtVertex {
    /// Primitive lattice vector pointing from `v` into the edge.
    pub direction: IntVector,
    pub length_param: Rat,
    pub other_vertex: RatVector,
}

#[derive(Clone, Debug)]
pub struct Polytope {
    rank: usize,
    dim: usize,
    equations: Vec<HalfSpace>,
    facets: Vec<HalfSpace>,
    vertices: Vec<RatVector>,
    facet_vertices: Vec<Vec<usize>>,
}

/// Dimension of the affine hull of a nonempty point set.
pub fn affine_dim(points: &[RatVector]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<RatVector> = rest.iter().map(|p| p.sub(first)).collect();
    Some(linalg::rank(&diffs, first.len()))
}

impl Polytope {
    /// Intersection of closed halfspaces in `Q^rank`.
    pub fn from_halfspaces(rank: usize, halfspaces: &[HalfSpace]) -> Result<Self, PolytopeError> {
        Self::from_constraints(rank, halfspaces, &[])
    }

    /// Intersection of halfspaces `<n, x> >= b` and hyperplanes `<n, x> = b`.
    pub fn from_constraints(
        rank: usize,
        inequalities: &[HalfSpace],
        equations: &[HalfSpace],
    ) -> Result<Self, PolytopeError> {
        for h in inequalities.iter().chain(equations) {
            if h.rank() != rank {
                return Err(PolytopeError::DimensionMismatch {
                    expected: rank,
                    found: h.rank(),
                });
            }
        }
        let all: Vec<HalfSpace> = inequalities
            .iter()
            .cloned()
            .chain(equations.iter().flat_map(|e| [e.clone(), e.flipped()]))
            .collect();

        let mut cons = Vec::with_capacity(all.len() + 1);
        cons.push(IntVector::unit(rank + 1, rank));
        cons.extend(all.iter().map(HalfSpace::homogenized));
        let gens = dd::cone_generators(&cons, rank + 1);

        let mut vertices = Vec::new();
        let mut recession = !gens.lineality.is_empty();
        for r in &gens.rays {
            let t = &r[rank];
            if t.is_zero() {
                recession = true;
                continue;
            }
            let t = Rat::from_integer(t.clone());
            vertices.push(RatVector::new(
                r.entries()[..rank]
                    .iter()
                    .map(|x| Rat::from_integer(x.clone()) / &t)
                    .collect(),
            ));
        }
        if vertices.is_empty() {
            return Err(PolytopeError::Empty);
        }
        if recession {
            return Err(PolytopeError::Unbounded);
        }
        Ok(Self::assemble(rank, &all, vertices))
    }

    /// Convex hull of a nonempty list of points.
    pub fn from_vertices(points: &[RatVector]) -> Result<Self, PolytopeError> {
        let rank = points.first().ok_or(PolytopeError::Empty)?.len();
        if let Some(p) = points.iter().find(|p| p.len() != rank) {
            return Err(PolytopeError::DimensionMismatch {
                expected: rank,
                found: p.len(),
            });
        }
        // Valid inequalities (n, c) with <n, p> + c >= 0 form a cone whose
        // generators describe the hull.
        let cons: Vec<IntVector> = points
            .iter()
            .map(|p| p.extended(Rat::one()).clear_denominators())
            .collect();
        let gens = dd::cone_generators(&cons, rank + 1);
        let split = |g: &IntVector| {
            let normal = IntVector::new(g.entries()[..rank].to_vec());
            let offset = -Rat::from_integer(g[rank].clone());
            (normal, offset)
        };
        let mut inequalities = Vec::new();
        for r in &gens.rays {
            let (n, b) = split(r);
            if !n.is_zero() {
                inequalities.push(HalfSpace::new(n, b)?);
            }
        }
        let equations = gens
            .lineality
            .iter()
            .map(|l| {
                let (n, b) = split(l);
                HalfSpace::new(n, b)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let hull = Self::from_constraints(rank, &inequalities, &equations)?;
        debug_assert!(hull.vertices.iter().all(|v| points.contains(v)));
        Ok(hull)
    }

    // Sorts vertices, splits constraints into implicit equations and
    // irredundant facets.
    fn assemble(rank: usize, constraints: &[HalfSpace], mut vertices: Vec<RatVector>) -> Self {
        vertices.sort();
        vertices.dedup();
        let dim = affine_dim(&vertices).expect("nonempty vertex set");

        let mut equations: Vec<HalfSpace> = Vec::new();
        let mut facets: Vec<HalfSpace> = Vec::new();
        let mut facet_vertices: Vec<Vec<usize>> = Vec::new();
        for h in constraints {
            let tight: Vec<usize> = (0..vertices.len())
                .filter(|&i| h.is_tight(&vertices[i]))
                .collect();
            if tight.len() == vertices.len() {
                let mut normals: Vec<RatVector> =
                    equations.iter().map(|e| e.normal.to_rat()).collect();
                normals.push(h.normal.to_rat());
                if linalg::rank(&normals, rank) == normals.len() {
                    equations.push(h.clone());
                }
                continue;
            }
            if tight.is_empty() || facet_vertices.contains(&tight) {
                continue;
            }
            let pts: Vec<RatVector> = tight.iter().map(|&i| vertices[i].clone()).collect();
            if dim > 0 && affine_dim(&pts) == Some(dim - 1) {
                facets.push(h.clone());
                facet_vertices.push(tight);
            }
        }
        debug_assert_eq!(equations.len(), rank - dim);
        Polytope {
            rank,
            dim,
            equations,
            facets,
            vertices,
            facet_vertices,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.rank
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    /// Irredundant facet inequalities, relative to the affine hull.
    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    /// Independent equations cutting out the affine hull.
    pub fn equations(&self) -> &[HalfSpace] {
        &self.equations
    }

    /// Vertex indices on each facet, parallel to [`Polytope::facets`].
    pub fn facet_vertices(&self) -> &[Vec<usize>] {
        &self.facet_vertices
    }

    pub fn contains(&self, point: &RatVector) -> bool {
        point.len() == self.rank
            && self.equations.iter().all(|e| e.is_tight(point))
            && self.facets.iter().all(|f| f.contains(point))
    }

    pub fn vertex_index(&self, point: &RatVector) -> Option<usize> {
        self.vertices.binary_search(point).ok()
    }

    pub fn is_vertex(&self, point: &RatVector) -> bool {
        self.vertex_index(point).is_some()
    }

    /// Every halfspace and equation describing the polytope, the equations
    /// expanded into opposite halfspace pairs.
    pub fn halfspaces(&self) -> Vec<HalfSpace> {
        self.facets
            .iter()
            .cloned()
            .chain(self.equations.iter().flat_map(|e| [e.clone(), e.flipped()]))
            .collect()
    }

    /// The smallest face containing the given vertices (by index).
    pub fn face_spanned_by(&self, vertex_indices: &[usize]) -> Face {
        let active: Vec<usize> = (0..self.facets.len())
            .filter(|&f| {
                vertex_indices
                    .iter()
                    .all(|v| self.facet_vertices[f].contains(v))
            })
            .collect();
        self.face_from_active(active)
    }

    fn face_from_active(&self, active: Vec<usize>) -> Face {
        let vertex_indices: Vec<usize> = (0..self.vertices.len())
            .filter(|v| active.iter().all(|&f| self.facet_vertices[f].contains(v)))
            .collect();
        let vertices: Vec<RatVector> = vertex_indices
            .iter()
            .map(|&i| self.vertices[i].clone())
            .collect();
        let dim = affine_dim(&vertices).expect("faces of a polytope are nonempty");
        Face {
            active_halfspaces: active,
            vertex_indices,
            vertices,
            dim,
        }
    }

    /// The minimal face containing `point`: cut out by the facets tight at it.
    pub fn minimal_face(&self, point: &RatVector) -> Result<Face, PolytopeError> {
        self.check_len(point)?;
        if !self.contains(point) {
            return Err(PolytopeError::NotContained(point.clone()));
        }
        let active = (0..self.facets.len())
            .filter(|&f| self.facets[f].is_tight(point))
            .collect();
        Ok(self.face_from_active(active))
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        let face = self.face_spanned_by(&[a, b]);
        face.vertex_indices.len() == 2
    }

    /// All edges as pairs of vertex indices `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The edges containing the vertex `v`, with primitive directions.
    pub fn edges_at_vertex(&self, v: &RatVector) -> Result<Vec<EdgeAtVertex>, PolytopeError> {
        self.check_len(v)?;
        let i = self
            .vertex_index(v)
            .ok_or_else(|| PolytopeError::NotVertex(v.clone()))?;
        let mut out = Vec::new();
        for j in 0..self.vertices.len() {
            if j == i || !self.adjacent(i, j) {
                continue;
            }
            let w = &self.vertices[j];
            let (direction, length_param) = w
                .sub(v)
                .primitive_direction()
                .expect("distinct vertices");
            out.push(EdgeAtVertex {
                direction,
                length_param,
                other_vertex: w.clone(),
            });
        }
        Ok(out)
    }

    /// Exact intersection with extra halfspaces, `None` when empty.
    ///
    /// Panics if a halfspace lives in a different rank.
    pub fn intersect(&self, extra: &[HalfSpace]) -> Option<Polytope> {
        let mut ineqs = self.facets.clone();
        ineqs.extend_from_slice(extra);
        match Self::from_constraints(self.rank, &ineqs, &self.equations) {
            Ok(p) => Some(p),
            Err(PolytopeError::Empty) => None,
            Err(e) => panic!("intersection of a polytope: {e}"),
        }
    }

    /// Set intersection of two polytopes, `None` when empty.
    pub fn intersection(&self, other: &Polytope) -> Option<Polytope> {
        self.intersect(&other.halfspaces())
    }

    /// Same point set.
    pub fn same_set(&self, other: &Polytope) -> bool {
        self.rank == other.rank && self.vertices == other.vertices
    }

    /// Whether every point of `other` lies in `self`.
    pub fn contains_polytope(&self, other: &Polytope) -> bool {
        other.vertices.iter().all(|v| self.contains(v))
    }

    /// Integral generators of the direction space of the affine hull.
    pub fn direction_vectors(&self) -> Vec<IntVector> {
        let Some((first, rest)) = self.vertices.split_first() else {
            return Vec::new();
        };
        rest.iter()
            .map(|p| p.sub(first).clear_denominators())
            .collect()
    }

    /// Image under `x -> m x + t` for an integer matrix `m` given by rows.
    pub fn affine_image(&self, rows: &[IntVector], shift: &RatVector) -> Result<Polytope, PolytopeError> {
        let image: Vec<RatVector> = self
            .vertices
            .iter()
            .map(|v| {
                RatVector::new(rows.iter().map(|r| r.pair(v)).collect::<Vec<_>>()).add(shift)
            })
            .collect();
        Polytope::from_vertices(&image)
    }

    /// Image under the projection dropping the last coordinate.
    pub fn project_last(&self) -> Polytope {
        let image: Vec<RatVector> = self.vertices.iter().map(RatVector::truncated).collect();
        Polytope::from_vertices(&image).expect("projection of a nonempty polytope")
    }

    fn check_len(&self, point: &RatVector) -> Result<(), PolytopeError> {
        if point.len() != self.rank {
            return Err(PolytopeError::DimensionMismatch {
                expected: self.rank,
                found: point.len(),
            });
        }
        Ok(())
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.same_set(other)
    }
}

impl Eq for Polytope {}

/// Axis-parallel box `prod [lo_i, hi_i]` from integer bounds.
pub fn box_polytope(bounds: &[(i64, i64)]) -> Polytope {
    let k = bounds.len();
    let mut hs = Vec::with_capacity(2 * k);
    for (i, &(lo, hi)) in bounds.iter().enumerate() {
        let e = IntVector::unit(k, i);
        hs.push(HalfSpace::new(e.clone(), Rat::from_integer(Int::from(lo))).unwrap());
        hs.push(HalfSpace::new(e.neg(), -Rat::from_integer(Int::from(hi))).unwrap());
    }
    Polytope::from_halfspaces(k, &hs).expect("nonempty box")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};
    use alloc::vec;

    fn pt(xs: &[i64]) -> RatVector {
        RatVector::from_i64s(xs)
    }

    fn unit_square() -> Polytope {
        box_polytope(&[(0, 1), (0, 1)])
    }

    #[test]
    fn segment_from_halfspaces() {
        let p = Polytope::from_halfspaces(
            1,
            &[
                HalfSpace::from_i64s(&[1], rat_int(0)),
                HalfSpace::from_i64s(&[-1], rat_int(-1)),
            ],
        )
        .unwrap();
        assert_eq!(p.vertices(), &[pt(&[0]), pt(&[1])]);
        assert_eq!(p.dim(), 1);
    }

    #[test]
    fn rectangle_of_the_product_example() {
        let p = box_polytope(&[(-2, 1), (-1, 1)]);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        assert!(p.is_vertex(&pt(&[-2, -1])));
        assert!(p.is_vertex(&pt(&[1, 1])));
    }

    #[test]
    fn unbounded_and_empty() {
        assert_eq!(
            Polytope::from_halfspaces(1, &[HalfSpace::from_i64s(&[1], rat_int(0))]).unwrap_err(),
            PolytopeError::Unbounded
        );
        let empty = Polytope::from_halfspaces(
            1,
            &[
                HalfSpace::from_i64s(&[1], rat_int(2)),
                HalfSpace::from_i64s(&[-1], rat_int(-1)),
            ],
        );
        assert_eq!(empty.unwrap_err(), PolytopeError::Empty);
    }

    #[test]
    fn redundant_halfspaces_are_dropped() {
        let p = Polytope::from_halfspaces(
            2,
            &[
                HalfSpace::from_i64s(&[1, 0], rat_int(0)),
                HalfSpace::from_i64s(&[0, 1], rat_int(0)),
                HalfSpace::from_i64s(&[-1, -1], rat_int(-1)),
                HalfSpace::from_i64s(&[-1, 0], rat_int(-5)),
                HalfSpace::from_i64s(&[2, 2], rat_int(-3)),
            ],
        )
        .unwrap();
        assert_eq!(p.facets().len(), 3);
        assert_eq!(p.vertices(), &[pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0])]);
    }

    #[test]
    fn hull_of_square_and_trapezoid() {
        let sq = Polytope::from_vertices(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])])
            .unwrap();
        assert_eq!(sq.facets().len(), 4);
        assert_eq!(sq, unit_square());

        let (m, a) = (1, 3);
        let trap = Polytope::from_vertices(&[pt(&[0, 0]), pt(&[1, -m]), pt(&[1, a]), pt(&[0, a])])
            .unwrap();
        assert_eq!(trap.vertices().len(), 4);
        assert_eq!(trap.facets().len(), 4);
    }

    #[test]
    fn hull_drops_interior_points() {
        let p = Polytope::from_vertices(&[
            pt(&[0, 0]),
            pt(&[2, 0]),
            pt(&[0, 2]),
            pt(&[1, 0]),
            pt(&[0, 1]),
        ])
        .unwrap();
        assert_eq!(p.vertices(), &[pt(&[0, 0]), pt(&[0, 2]), pt(&[2, 0])]);
    }

    #[test]
    fn single_point() {
        let p = Polytope::from_vertices(&[RatVector::from_fracs(&[(1, 2), (3, 1)])]).unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.equations().len(), 2);
        assert!(p.facets().is_empty());
        assert!(p.edges().is_empty());
        assert!(p.edges_at_vertex(&p.vertices()[0].clone()).unwrap().is_empty());
    }

    #[test]
    fn lower_dimensional_segment_in_plane() {
        let p = Polytope::from_vertices(&[pt(&[0, 0]), pt(&[2, 2]), pt(&[1, 1])]).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.vertices(), &[pt(&[0, 0]), pt(&[2, 2])]);
        assert_eq!(p.facets().len(), 2);
        assert!(p.contains(&pt(&[1, 1])));
        assert!(!p.contains(&pt(&[1, 0])));
    }

    #[test]
    fn minimal_faces_of_square() {
        let sq = unit_square();
        let f = sq.minimal_face(&RatVector::from_fracs(&[(1, 2), (1, 2)])).unwrap();
        assert_eq!(f.dim, 2);
        let f = sq.minimal_face(&pt(&[0, 0])).unwrap();
        assert_eq!(f.dim, 0);
        let f = sq.minimal_face(&RatVector::from_fracs(&[(1, 2), (0, 1)])).unwrap();
        assert_eq!(f.dim, 1);
        assert_eq!(f.active_halfspaces.len(), 1);
        let tight = &sq.facets()[f.active_halfspaces[0]];
        assert_eq!(tight.normal(), &IntVector::from_i64s(&[0, 1]));
        assert!(matches!(
            sq.minimal_face(&pt(&[2, 0])),
            Err(PolytopeError::NotContained(_))
        ));
    }

    #[test]
    fn edges_at_vertices() {
        let sq = unit_square();
        let mut dirs: Vec<_> = sq
            .edges_at_vertex(&pt(&[0, 0]))
            .unwrap()
            .into_iter()
            .map(|e| (e.direction, e.length_param))
            .collect();
        dirs.sort();
        assert_eq!(
            dirs,
            vec![
                (IntVector::from_i64s(&[0, 1]), rat_int(1)),
                (IntVector::from_i64s(&[1, 0]), rat_int(1))
            ]
        );

        let tri = Polytope::from_vertices(&[pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2])]).unwrap();
        let mut dirs: Vec<_> = tri
            .edges_at_vertex(&pt(&[2, 0]))
            .unwrap()
            .into_iter()
            .map(|e| (e.direction, e.length_param))
            .collect();
        dirs.sort();
        assert_eq!(
            dirs,
            vec![
                (IntVector::from_i64s(&[-1, 0]), rat_int(2)),
                (IntVector::from_i64s(&[-1, 1]), rat_int(2))
            ]
        );

        let seg = box_polytope(&[(0, 1)]);
        let e = seg.edges_at_vertex(&pt(&[0])).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].direction, IntVector::from_i64s(&[1]));
        assert_eq!(e[0].length_param, rat_int(1));
        assert!(matches!(
            seg.edges_at_vertex(&RatVector::from_fracs(&[(1, 2)])),
            Err(PolytopeError::NotVertex(_))
        ));
    }

    #[test]
    fn intersections() {
        let sq = unit_square();
        let left = sq.intersect(&[HalfSpace::from_i64s(&[-1, 0], rat_int(0))]).unwrap();
        assert_eq!(left.dim(), 1);
        assert_eq!(left.vertices(), &[pt(&[0, 0]), pt(&[0, 1])]);
        assert!(sq.intersect(&[HalfSpace::from_i64s(&[-1, 0], rat_int(1))]).is_none());

        let rect = box_polytope(&[(-2, 1), (-1, 1)]);
        let q = rect
            .intersect(&[
                HalfSpace::from_i64s(&[1, 0], rat_int(0)),
                HalfSpace::from_i64s(&[0, 1], rat_int(0)),
            ])
            .unwrap();
        assert_eq!(q, sq);
    }

    #[test]
    fn halfspace_normalizes_to_primitive() {
        let h = HalfSpace::new(IntVector::from_i64s(&[2, 4]), rat_int(3)).unwrap();
        assert_eq!(h.normal(), &IntVector::from_i64s(&[1, 2]));
        assert_eq!(h.offset(), &rat(3, 2));
        assert_eq!(
            HalfSpace::new(IntVector::zeros(2), rat_int(0)).unwrap_err(),
            PolytopeError::ZeroNormal
        );
    }
}
