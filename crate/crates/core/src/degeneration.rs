//! The lifted polytope between the graph of `-min_i L_i` and the hyperplane
//! `u = a`, its normal fan, and the projection of that fan onto the fan of
//! the projective line.

use alloc::vec::Vec;

use num_traits::Signed;
use thiserror::Error;

use crate::cut::{CutData, CutError};
use crate::delzant;
use crate::lattice;
use crate::num::{Int, IntVector, Rat, RatVector};
use crate::polytope::{Face, HalfSpace, Polytope, PolytopeError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DegenerationError {
    #[error("a = {a} must exceed the bound {bound}")]
    BoundViolated { bound: Rat, a: Rat },
    #[error("expected rank {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("polytope is not Delzant")]
    NotDelzant,
    #[error("graph face of piece {0} does not project onto the piece")]
    ProjectionMismatch(usize),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Cut(#[from] CutError),
}

/// `-min_{eta in Δ} min_i L_i(eta)`, attained at a vertex of `Δ`.
pub fn min_a_bound(p: &Polytope, cuts: &CutData) -> Rat {
    p.vertices()
        .iter()
        .map(|v| -cuts.min_value(v))
        .max()
        .expect("polytopes have vertices")
}

/// Heights `-min_i L_i(v)` of the lower boundary over the vertices of the
/// cells, sorted and distinct. A top hyperplane at one of these heights
/// touches the lower boundary.
pub fn critical_values(p: &Polytope, cuts: &CutData) -> Result<Vec<Rat>, DegenerationError> {
    let sub = crate::cut::subdivide(p, cuts)?;
    let mut out: Vec<Rat> = sub
        .cell_vertices()
        .iter()
        .map(|v| -cuts.min_value(v))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct LiftedPolytope {
    pub polytope: Polytope,
    pub a: Rat,
    pub base: Polytope,
    /// The graph face over `Δ_i`, `None` when `Δ_i` is empty.
    pub piece_faces: Vec<Option<Face>>,
    pub top_face: Face,
}

/// `{(eta, u) : eta in Δ, -min_i L_i(eta) <= u <= a}` for `a` above
/// [`min_a_bound`].
pub fn lift(p: &Polytope, cuts: &CutData, a: &Rat) -> Result<LiftedPolytope, DegenerationError> {
    if p.rank() != cuts.rank() {
        return Err(DegenerationError::DimensionMismatch {
            expected: p.rank(),
            found: cuts.rank(),
        });
    }
    let bound = min_a_bound(p, cuts);
    if *a <= bound {
        return Err(DegenerationError::BoundViolated {
            bound,
            a: a.clone(),
        });
    }
    let k = p.rank();
    let lift_half = |h: &HalfSpace| h.extended();

    let mut inequalities: Vec<HalfSpace> = p.facets().iter().map(lift_half).collect();
    inequalities.push(HalfSpace::new(IntVector::unit(k + 1, k).neg(), -a.clone())?);
    let graph: Vec<HalfSpace> = cuts
        .data()
        .iter()
        .map(|d| HalfSpace::new(d.xi.extended(Int::from(1)), d.eps.clone()))
        .collect::<Result<_, _>>()?;
    inequalities.extend(graph.iter().cloned());
    let equations: Vec<HalfSpace> = p.equations().iter().map(lift_half).collect();
    let lifted = Polytope::from_constraints(k + 1, &inequalities, &equations)?;

    let sub = crate::cut::subdivide(p, cuts)?;
    let mut piece_faces = Vec::with_capacity(cuts.len());
    for (i, h) in graph.iter().enumerate() {
        let face = tight_face(&lifted, h);
        match (&face, sub.cell(i)) {
            (None, None) => {}
            (Some(f), Some(cell)) if project(&f.vertices) == *cell => {}
            _ => return Err(DegenerationError::ProjectionMismatch(i)),
        }
        piece_faces.push(face);
    }
    let top = HalfSpace::new(IntVector::unit(k + 1, k).neg(), -a.clone())?;
    let top_face = tight_face(&lifted, &top).expect("the top hyperplane supports the lift");

    Ok(LiftedPolytope {
        polytope: lifted,
        a: a.clone(),
        base: p.clone(),
        piece_faces,
        top_face,
    })
}

fn tight_face(p: &Polytope, h: &HalfSpace) -> Option<Face> {
    let tight: Vec<usize> = (0..p.vertices().len())
        .filter(|&i| h.is_tight(&p.vertices()[i]))
        .collect();
    (!tight.is_empty()).then(|| p.face_spanned_by(&tight))
}

fn project(points: &[RatVector]) -> Polytope {
    let image: Vec<RatVector> = points.iter().map(RatVector::truncated).collect();
    Polytope::from_vertices(&image).expect("nonempty point set")
}

impl LiftedPolytope {
    /// Image of the lift under the projection to the first `k` coordinates.
    pub fn projection(&self) -> Polytope {
        self.polytope.project_last()
    }

    pub fn is_delzant(&self) -> bool {
        delzant::is_delzant(&self.polytope).is_delzant
    }
}

/// A complete fan given by primitive rays and maximal cones as ray indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub rays: Vec<IntVector>,
    pub maximal_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(rays: Vec<IntVector>, maximal_cones: Vec<Vec<usize>>) -> Self {
        Fan {
            rays,
            maximal_cones,
        }
    }

    pub fn rank(&self) -> usize {
        self.rays.first().map_or(0, IntVector::len)
    }

    /// Whether the rays of every maximal cone form a Z-basis.
    pub fn is_smooth(&self) -> bool {
        let k = self.rank();
        self.maximal_cones.iter().all(|c| {
            let rays: Vec<IntVector> = c.iter().map(|&i| self.rays[i].clone()).collect();
            lattice::is_z_basis(&rays, k).unwrap_or(false)
        })
    }
}

/// Inward facet normals as rays; one maximal cone per vertex, spanned by
/// the normals of the facets through it.
pub fn normal_fan(p: &Polytope) -> Result<Fan, DegenerationError> {
    if !p.is_full_dimensional() {
        return Err(DegenerationError::NotFullDimensional);
    }
    if !delzant::is_delzant(p).is_delzant {
        return Err(DegenerationError::NotDelzant);
    }
    let rays: Vec<IntVector> = p.facets().iter().map(|h| h.normal().clone()).collect();
    let cones = (0..p.vertices().len())
        .map(|v| {
            (0..rays.len())
                .filter(|&f| p.facet_vertices()[f].contains(&v))
                .collect()
        })
        .collect();
    Ok(Fan::new(rays, cones))
}

/// Where a cone lands under the projection to the last coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeImage {
    Nonneg,
    Nonpos,
    Zero,
    /// Rays on both sides; not contained in a cone of the target fan.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationReport {
    pub compatible: bool,
    pub cone_images: Vec<ConeImage>,
}

/// Checks that each maximal cone maps into `{u >= 0}`, `{u <= 0}` or `{0}`.
pub fn check_fan_fibration(fan: &Fan) -> FibrationReport {
    let cone_images: Vec<ConeImage> = fan
        .maximal_cones
        .iter()
        .map(|cone| {
            let last = |i: &usize| fan.rays[*i].entries().last().cloned().unwrap_or_default();
            let pos = cone.iter().any(|i| last(i).is_positive());
            let neg = cone.iter().any(|i| last(i).is_negative());
            match (pos, neg) {
                (true, true) => ConeImage::Mixed,
                (true, false) => ConeImage::Nonneg,
                (false, true) => ConeImage::Nonpos,
                (false, false) => ConeImage::Zero,
            }
        })
        .collect();
    FibrationReport {
        compatible: !cone_images.contains(&ConeImage::Mixed),
        cone_images,
    }
}

pub fn check_fibration(lifted: &LiftedPolytope) -> Result<FibrationReport, DegenerationError> {
    Ok(check_fan_fibration(&normal_fan(&lifted.polytope)?))
}

impl ConeImage {
    pub fn as_str(self) -> &'static str {
        match self {
            ConeImage::Nonneg => ">=0",
            ConeImage::Nonpos => "<=0",
            ConeImage::Zero => "0",
            ConeImage::Mixed => "mixed",
        }
    }
}
