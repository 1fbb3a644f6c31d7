//! Smooth polygons: self-intersection numbers of the boundary divisors,
//! recognition of Hirzebruch surfaces and their blowups, and degrees of the
//! walls of a planar subdivision inside each adjacent cell.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::cut::{PieceSet, Subdivision};
use crate::delzant;
use crate::num::{Int, IntVector, RatVector};
use crate::polytope::Polytope;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Toric2dError {
    #[error("polygon expected: rank and dimension must both be 2")]
    NotDim2,
    #[error("polygon is not Delzant")]
    NotDelzant,
}

/// Vertex indices of a polygon in counterclockwise order, starting at the
/// smallest vertex.
pub fn ccw_cycle(p: &Polytope) -> Result<Vec<usize>, Toric2dError> {
    if p.rank() != 2 || p.dim() != 2 {
        return Err(Toric2dError::NotDim2);
    }
    let n = p.vertices().len();
    let mut neighbours = alloc::vec![Vec::new(); n];
    for (a, b) in p.edges() {
        neighbours[a].push(b);
        neighbours[b].push(a);
    }
    let mut cycle = alloc::vec![0];
    let mut prev = 0;
    let mut cur = neighbours[0][0];
    while cur != 0 {
        cycle.push(cur);
        let next = if neighbours[cur][0] == prev {
            neighbours[cur][1]
        } else {
            neighbours[cur][0]
        };
        prev = cur;
        cur = next;
    }
    let v = p.vertices();
    let (a, b, c) = (&v[cycle[0]], &v[cycle[1]], &v[cycle[n - 1]]);
    let (e, f) = (b.sub(a), c.sub(a));
    if (&e[0] * &f[1] - &e[1] * &f[0]).is_negative() {
        cycle[1..].reverse();
    }
    Ok(cycle)
}

pub fn ccw_vertices(p: &Polytope) -> Result<Vec<RatVector>, Toric2dError> {
    Ok(ccw_cycle(p)?
        .into_iter()
        .map(|i| p.vertices()[i].clone())
        .collect())
}

/// An edge `[start, end]` traversed counterclockwise with its inward normal
/// and self-intersection number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDegree {
    pub start: RatVector,
    pub end: RatVector,
    pub normal: IntVector,
    pub degree: Int,
}

impl EdgeDegree {
    /// Whether the edge has exactly these two endpoints, in either order.
    pub fn joins(&self, a: &RatVector, b: &RatVector) -> bool {
        (self.start == *a && self.end == *b) || (self.start == *b && self.end == *a)
    }
}

fn inward_normal(start: &RatVector, end: &RatVector) -> IntVector {
    let e = end.sub(start).clear_denominators();
    IntVector::new(alloc::vec![-e[1].clone(), e[0].clone()]).primitive_part()
}

// d with prev + next = -d * mid.
fn relation_degree(prev: &IntVector, mid: &IntVector, next: &IntVector) -> Int {
    let sum = prev.add(next);
    let c = if mid[0].is_zero() { 1 } else { 0 };
    let d = -(&sum[c] / &mid[c]);
    debug_assert_eq!(sum, mid.scale(&-d.clone()));
    d
}

/// Edges in counterclockwise order starting at the smallest vertex; the
/// degree `d` satisfies `u_prev + u_next = -d u` for consecutive inward
/// normals.
pub fn edge_self_intersections(p: &Polytope) -> Result<Vec<EdgeDegree>, Toric2dError> {
    let cycle = ccw_cycle(p)?;
    if !delzant::is_delzant(p).is_delzant {
        return Err(Toric2dError::NotDelzant);
    }
    let v = p.vertices();
    let n = cycle.len();
    let normals: Vec<IntVector> = (0..n)
        .map(|i| inward_normal(&v[cycle[i]], &v[cycle[(i + 1) % n]]))
        .collect();
    Ok((0..n)
        .map(|i| EdgeDegree {
            start: v[cycle[i]].clone(),
            end: v[cycle[(i + 1) % n]].clone(),
            degree: relation_degree(&normals[(i + n - 1) % n], &normals[i], &normals[(i + 1) % n]),
            normal: normals[i].clone(),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    P2,
    P1xP1,
    Hirzebruch(u64),
    /// Obtained from `of` by `count` toric blowups.
    Blowup { count: usize, of: Box<SurfaceKind> },
    Unknown,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceKind::P2 => f.write_str("P2"),
            SurfaceKind::P1xP1 => f.write_str("P1xP1"),
            SurfaceKind::Hirzebruch(m) => write!(f, "Hirzebruch({m})"),
            SurfaceKind::Blowup { count, of } => write!(f, "Blowup({count}, {of})"),
            SurfaceKind::Unknown => f.write_str("Unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceId {
    pub kind: SurfaceKind,
    pub vertex_count: usize,
}

fn classify_minimal(degrees: &[Int]) -> SurfaceKind {
    match degrees.len() {
        3 if degrees.iter().all(|d| *d == Int::from(1)) => SurfaceKind::P2,
        4 => {
            let m = (0..4).find_map(|s| {
                let d = |i: usize| &degrees[(s + i) % 4];
                (d(0).is_zero() && d(2).is_zero() && *d(1) == -d(3).clone())
                    .then(|| d(1).abs())
            });
            match m {
                Some(m) if m.is_zero() => SurfaceKind::P1xP1,
                Some(m) => u64::try_from(m).map_or(SurfaceKind::Unknown, SurfaceKind::Hirzebruch),
                None => SurfaceKind::Unknown,
            }
        }
        _ => SurfaceKind::Unknown,
    }
}

// Smallest rotation or reflection of a cyclic degree sequence.
fn canonical(degrees: &[Int]) -> Vec<Int> {
    let n = degrees.len();
    let mut best: Option<Vec<Int>> = None;
    for s in 0..n {
        for dir in [false, true] {
            let seq: Vec<Int> = (0..n)
                .map(|i| {
                    let k = if dir { (s + n - i) % n } else { (s + i) % n };
                    degrees[k].clone()
                })
                .collect();
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
    }
    best.unwrap_or_default()
}

fn blow_down(degrees: &[Int], i: usize) -> Vec<Int> {
    let n = degrees.len();
    let mut out = degrees.to_vec();
    out[(i + n - 1) % n] += 1;
    out[(i + 1) % n] += 1;
    out.remove(i);
    out
}

/// Classifies by blowing down `-1` edges until four or fewer remain. Where
/// several edges qualify, the result with the smallest total `|degree|`
/// wins, so the answer does not depend on coordinates.
pub fn identify_surface(p: &Polytope) -> Result<SurfaceId, Toric2dError> {
    let mut degrees: Vec<Int> = edge_self_intersections(p)?
        .into_iter()
        .map(|e| e.degree)
        .collect();
    let vertex_count = degrees.len();
    let mut count = 0;
    while degrees.len() > 4 {
        let best = (0..degrees.len())
            .filter(|&i| degrees[i] == Int::from(-1))
            .map(|i| canonical(&blow_down(&degrees, i)))
            .min_by_key(|d| (d.iter().map(Signed::abs).sum::<Int>(), d.clone()));
        let Some(next) = best else {
            return Ok(SurfaceId {
                kind: SurfaceKind::Unknown,
                vertex_count,
            });
        };
        degrees = next;
        count += 1;
    }
    let base = classify_minimal(&degrees);
    let kind = if count == 0 || base == SurfaceKind::Unknown {
        base
    } else {
        SurfaceKind::Blowup {
            count,
            of: Box::new(base),
        }
    };
    Ok(SurfaceId { kind, vertex_count })
}

/// Degree of the wall `Δ_ij` computed inside the cell `in_piece`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallDegree {
    pub between: (usize, usize),
    pub in_piece: usize,
    pub degree: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorDegreeReport {
    pub entries: Vec<WallDegree>,
    /// `d_i + d_j` for walls seen from both sides.
    pub sums: Vec<((usize, usize), Int)>,
}

impl DivisorDegreeReport {
    pub fn degree(&self, between: (usize, usize), in_piece: usize) -> Option<&Int> {
        self.entries
            .iter()
            .find(|e| e.between == between && e.in_piece == in_piece)
            .map(|e| &e.degree)
    }
}

/// For every one-dimensional wall `Δ_ij`, `i < j`, and each full-dimensional
/// side, the self-intersection of the wall inside that side. Walls that are
/// not an edge of a side are skipped for that side.
pub fn divisor_degree_report(sub: &Subdivision) -> Result<DivisorDegreeReport, Toric2dError> {
    if sub.ambient().rank() != 2 {
        return Err(Toric2dError::NotDim2);
    }
    let n = sub.len();
    let mut edges: Vec<Option<Vec<EdgeDegree>>> = Vec::with_capacity(n);
    for i in 0..n {
        edges.push(match sub.cell(i) {
            Some(c) if c.dim() == 2 => Some(edge_self_intersections(c)?),
            _ => None,
        });
    }
    let mut entries = Vec::new();
    let mut sums = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let Some(wall) = sub.piece(PieceSet::from_indices([i, j])) else {
                continue;
            };
            if wall.dim() != 1 {
                continue;
            }
            let (a, b) = (&wall.vertices()[0], &wall.vertices()[1]);
            let mut seen = Vec::new();
            for side in [i, j] {
                let found = edges[side]
                    .as_ref()
                    .and_then(|es| es.iter().find(|e| e.joins(a, b)));
                if let Some(e) = found {
                    seen.push(e.degree.clone());
                    entries.push(WallDegree {
                        between: (i, j),
                        in_piece: side,
                        degree: e.degree.clone(),
                    });
                }
            }
            if let [x, y] = seen.as_slice() {
                sums.push(((i, j), x + y));
            }
        }
    }
    Ok(DivisorDegreeReport { entries, sums })
}
