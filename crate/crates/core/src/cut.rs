//! Cutting data and the subdivision it induces.
//!
//! A tuple of pairs `(xi_i, eps_i)` with `xi_i` integral defines affine
//! functionals `L_i(eta) = <eta, xi_i> - eps_i`. The piece `Δ_i` is the part
//! of `Δ` where `L_i` is minimal, and `Δ_I` for a set of indices `I` is where
//! every `L_i` with `i` in `I` is minimal at once.
//!
//! Two ways of deciding quasi-regularity live here:
//!
//! * the definitional check ([`is_quasi_regular`]): Delzant pieces,
//!   primitive differences `xi_i - xi_j` on nonempty walls, and
//!   `|I_v| <= d_v(Δ) + 1` at every vertex of every piece;
//! * the lattice check ([`lattice_criterion_quasi_regular`]): at every such
//!   vertex the sum of the lattice of the stabilizer directions `t_v` and the
//!   differences `xi_i - xi_j` must be direct and saturated.
//!
//! Piece indices are zero-based throughout this module.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::delzant;
use crate::lattice::{self, LatticeError, Sublattice};
use crate::linalg;
use crate::num::{IntVector, Rat, RatVector};
use crate::polytope::{HalfSpace, Polytope, PolytopeError};

/// Largest number of cuts accepted; subsets are stored as bitmasks.
pub const MAX_CUTS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("cutting data needs at least one pair")]
    NoCuts,
    #[error("{0} cuts exceed the supported maximum of {MAX_CUTS}")]
    TooManyCuts(usize),
    #[error("expected vectors of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point {0} is not contained in the polytope")]
    NotContained(RatVector),
    #[error("index {index} is not active at {vertex}")]
    NotActive { vertex: RatVector, index: usize },
    #[error("rank conditions fail at {0}; the sum with t_v is not direct")]
    RankPreconditionFailed(RatVector),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("cocycle entry ({i},{j}) is missing")]
    IncompleteCocycle { i: usize, j: usize },
    #[error("cocycle entries ({i},{j}) and ({j},{i}) are not opposite")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("cocycle identity fails for ({i},{j},{k})")]
    NotACocycle { i: usize, j: usize, k: usize },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// One pair `(xi, eps)`, i.e. the functional `eta -> <eta, xi> - eps`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutDatum {
    pub xi: IntVector,
    pub eps: Rat,
}

impl CutDatum {
    pub fn new(xi: IntVector, eps: Rat) -> Self {
        CutDatum { xi, eps }
    }

    pub fn from_i64s(xi: &[i64], eps: Rat) -> Self {
        CutDatum::new(IntVector::from_i64s(xi), eps)
    }

    /// `L(eta)`; lengths must agree.
    pub fn eval(&self, eta: &RatVector) -> Rat {
        self.xi.pair(eta) - &self.eps
    }
}

/// `L(eta) = <eta, xi> - eps`.
pub fn eval_l(d: &CutDatum, eta: &RatVector) -> Result<Rat, CutError> {
    if d.xi.len() != eta.len() {
        return Err(CutError::DimensionMismatch {
            expected: d.xi.len(),
            found: eta.len(),
        });
    }
    Ok(d.eval(eta))
}

/// A nonempty list of cut pairs sharing one ambient rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutData {
    data: Vec<CutDatum>,
}

impl CutData {
    pub fn new(data: Vec<CutDatum>) -> Result<Self, CutError> {
        let first = data.first().ok_or(CutError::NoCuts)?;
        if data.len() > MAX_CUTS {
            return Err(CutError::TooManyCuts(data.len()));
        }
        let k = first.xi.len();
        if let Some(d) = data.iter().find(|d| d.xi.len() != k) {
            return Err(CutError::DimensionMismatch {
                expected: k,
                found: d.xi.len(),
            });
        }
        Ok(CutData { data })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.data[0].xi.len()
    }

    pub fn get(&self, i: usize) -> &CutDatum {
        &self.data[i]
    }

    pub fn data(&self) -> &[CutDatum] {
        &self.data
    }

    pub fn values(&self, eta: &RatVector) -> Vec<Rat> {
        self.data.iter().map(|d| d.eval(eta)).collect()
    }

    /// `min_i L_i(eta)`.
    pub fn min_value(&self, eta: &RatVector) -> Rat {
        self.values(eta)
            .into_iter()
            .min()
            .expect("cutting data is nonempty")
    }

    /// Indices attaining `min_i L_i(eta)`.
    pub fn argmin(&self, eta: &RatVector) -> PieceSet {
        let values = self.values(eta);
        let min = values.iter().min().expect("cutting data is nonempty");
        PieceSet::from_indices(
            values
                .iter()
                .enumerate()
                .filter(|(_, v)| *v == min)
                .map(|(i, _)| i),
        )
    }

    /// Adds the same `(xi, eps)` to every pair.
    pub fn shifted(&self, xi: &IntVector, eps: &Rat) -> CutData {
        CutData {
            data: self
                .data
                .iter()
                .map(|d| CutDatum::new(d.xi.add(xi), &d.eps + eps))
                .collect(),
        }
    }

    /// `xi_i - xi_j`.
    pub fn xi_diff(&self, i: usize, j: usize) -> IntVector {
        self.data[i].xi.sub(&self.data[j].xi)
    }

    // Halfspace form of L_i <= L_j, i.e. <eta, xi_j - xi_i> >= eps_j - eps_i.
    fn le_constraint(&self, i: usize, j: usize) -> Constraint {
        let normal = self.data[j].xi.sub(&self.data[i].xi);
        let offset = &self.data[j].eps - &self.data[i].eps;
        if normal.is_zero() {
            if offset.is_positive() {
                Constraint::Never
            } else {
                Constraint::Always
            }
        } else {
            Constraint::Half(HalfSpace::new(normal, offset).expect("nonzero normal"))
        }
    }
}

enum Constraint {
    Always,
    Never,
    Half(HalfSpace),
}

/// A nonempty subset of the cut indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PieceSet(u32);

impl PieceSet {
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_CUTS);
        PieceSet(1 << i)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        PieceSet(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn from_bits(bits: u32) -> Self {
        PieceSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PieceSet) -> PieceSet {
        PieceSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    pub fn first(self) -> Option<usize> {
        self.iter().next()
    }

    /// All nonempty subsets of `{0, .., n-1}`, ordered by size then bits.
    pub fn all_nonempty(n: usize) -> Vec<PieceSet> {
        let mut sets: Vec<PieceSet> = (1u32..(1u32 << n)).map(PieceSet).collect();
        sets.sort_by_key(|s| (s.len(), s.0));
        sets
    }
}

/// One-based, e.g. `{1,2}`.
impl fmt::Display for PieceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// The pieces `Δ_I` for every nonempty `I`.
#[derive(Clone, Debug)]
pub struct Subdivision {
    ambient: Polytope,
    cuts: CutData,
    pieces: BTreeMap<PieceSet, Option<Polytope>>,
}

/// The pieces `Δ_I = {eta in Δ : L_i(eta) <= L_j(eta) for i in I, all j}`.
pub fn subdivide(p: &Polytope, cuts: &CutData) -> Result<Subdivision, CutError> {
    check_rank(p, cuts)?;
    let pieces = PieceSet::all_nonempty(cuts.len())
        .into_iter()
        .map(|set| (set, region(p, cuts, set)))
        .collect();
    Ok(Subdivision {
        ambient: p.clone(),
        cuts: cuts.clone(),
        pieces,
    })
}

fn check_rank(p: &Polytope, cuts: &CutData) -> Result<(), CutError> {
    if p.rank() != cuts.rank() {
        return Err(CutError::DimensionMismatch {
            expected: p.rank(),
            found: cuts.rank(),
        });
    }
    Ok(())
}

fn region(p: &Polytope, cuts: &CutData, set: PieceSet) -> Option<Polytope> {
    let mut extra = Vec::new();
    for i in set.iter() {
        for j in (0..cuts.len()).filter(|&j| j != i) {
            match cuts.le_constraint(i, j) {
                Constraint::Always => {}
                Constraint::Never => return None,
                Constraint::Half(h) => {
                    if !extra.contains(&h) {
                        extra.push(h);
                    }
                }
            }
        }
    }
    p.intersect(&extra)
}

impl Subdivision {
    pub fn ambient(&self) -> &Polytope {
        &self.ambient
    }

    pub fn cuts(&self) -> &CutData {
        &self.cuts
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    /// `Δ_I`, `None` when empty.
    pub fn piece(&self, set: PieceSet) -> Option<&Polytope> {
        self.pieces.get(&set).and_then(Option::as_ref)
    }

    /// `Δ_i`.
    pub fn cell(&self, i: usize) -> Option<&Polytope> {
        self.piece(PieceSet::singleton(i))
    }

    /// Every `(I, Δ_I)`, empty ones included.
    pub fn pieces(&self) -> impl Iterator<Item = (PieceSet, Option<&Polytope>)> {
        self.pieces.iter().map(|(s, p)| (*s, p.as_ref()))
    }

    pub fn nonempty(&self) -> impl Iterator<Item = (PieceSet, &Polytope)> {
        self.pieces
            .iter()
            .filter_map(|(s, p)| p.as_ref().map(|p| (*s, p)))
    }

    /// Indices `i` with `Δ_i` empty.
    pub fn empty_cells(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.cell(i).is_none()).collect()
    }

    /// Indices `i` with `Δ_i` nonempty but of lower dimension than `Δ`.
    pub fn degenerate_cells(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                self.cell(i)
                    .is_some_and(|c| c.dim() < self.ambient.dim())
            })
            .collect()
    }

    /// The distinct vertices of all nonempty `Δ_i`, sorted.
    pub fn cell_vertices(&self) -> Vec<RatVector> {
        let mut out: Vec<RatVector> = (0..self.len())
            .filter_map(|i| self.cell(i))
            .flat_map(|c| c.vertices().iter().cloned())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Same cells, compared exactly.
    pub fn same_pieces(&self, other: &Subdivision) -> bool {
        self.pieces.len() == other.pieces.len()
            && self
                .pieces
                .iter()
                .zip(&other.pieces)
                .all(|((s, a), (t, b))| s == t && a == b)
    }
}

/// `I_v`, the indices whose piece contains the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveSet {
    pub point: RatVector,
    pub indices: PieceSet,
}

pub fn active_set(cuts: &CutData, v: &RatVector, p: &Polytope) -> Result<ActiveSet, CutError> {
    check_rank(p, cuts)?;
    if v.len() != p.rank() {
        return Err(CutError::DimensionMismatch {
            expected: p.rank(),
            found: v.len(),
        });
    }
    if !p.contains(v) {
        return Err(CutError::NotContained(v.clone()));
    }
    Ok(ActiveSet {
        point: v.clone(),
        indices: cuts.argmin(v),
    })
}

/// A vertex where `|I_v| > d_v(Δ) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetransViolation {
    pub vertex: RatVector,
    pub active: PieceSet,
    pub face_dim: usize,
}

// Local data at a tested vertex.
struct VertexData {
    active: PieceSet,
    face_dim: usize,
    // Integral basis of t_v, the annihilator of the directions of Δ_v.
    torus: Vec<IntVector>,
}

fn vertex_data(sub: &Subdivision, v: &RatVector) -> VertexData {
    let face = sub
        .ambient
        .minimal_face(v)
        .expect("tested vertices lie in the polytope");
    let k = sub.ambient.rank();
    let directions: Vec<RatVector> = face.vertices.iter().map(|w| w.sub(v)).collect();
    VertexData {
        active: sub.cuts.argmin(v),
        face_dim: face.dim,
        torus: linalg::nullspace_int(&directions, k),
    }
}

/// Checks `|I_v| <= d_v(Δ) + 1` at every vertex of every nonempty `Δ_i`.
pub fn check_detrans(sub: &Subdivision) -> Vec<DetransViolation> {
    sub.cell_vertices()
        .into_iter()
        .filter_map(|v| {
            let data = vertex_data(sub, &v);
            (data.active.len() > data.face_dim + 1).then_some(DetransViolation {
                vertex: v,
                active: data.active,
                face_dim: data.face_dim,
            })
        })
        .collect()
}

/// The two rank conditions at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCheck {
    pub vertex: RatVector,
    pub active: PieceSet,
    /// `dim span{xi_i - xi_j : i, j in I_v}`.
    pub span_rank: usize,
    /// `dim t_v`.
    pub torus_dim: usize,
    /// `t_v ∩ span{xi_i - xi_j} = 0`.
    pub transversal: bool,
    pub holds: bool,
}

fn differences(cuts: &CutData, active: PieceSet, base: usize) -> Vec<IntVector> {
    active
        .iter()
        .filter(|&j| j != base)
        .map(|j| cuts.xi_diff(base, j))
        .collect()
}

fn rank_check(sub: &Subdivision, v: &RatVector, data: &VertexData) -> RankCheck {
    let k = sub.ambient.rank();
    let base = data.active.first().expect("active sets are nonempty");
    let diffs = differences(&sub.cuts, data.active, base);
    let span_rank = linalg::rank_int(&diffs, k);
    let mut both = data.torus.clone();
    both.extend(diffs.iter().cloned());
    let transversal = linalg::rank_int(&both, k) == data.torus.len() + span_rank;
    RankCheck {
        vertex: v.clone(),
        active: data.active,
        span_rank,
        torus_dim: data.torus.len(),
        transversal,
        holds: transversal && span_rank + 1 == data.active.len(),
    }
}

/// Evaluates `dim span{xi_ij : i,j in I_v} = |I_v| - 1` and
/// `t_v ∩ span{xi_ij} = 0` at every vertex of every nonempty `Δ_i`.
pub fn check_rank_criterion(sub: &Subdivision) -> Vec<RankCheck> {
    sub.cell_vertices()
        .into_iter()
        .map(|v| {
            let data = vertex_data(sub, &v);
            rank_check(sub, &v, &data)
        })
        .collect()
}

/// Whether `Λ ∩ (t_v + span{xi_ij}) = Λ_{t_v} ⊕ ⊕_{j in I_v - i} Z xi_ij` at
/// `v`, with `i = base`.
///
/// Fails with [`CutError::RankPreconditionFailed`] when the sum on the right
/// is not direct.
pub fn lattice_criterion_at(sub: &Subdivision, v: &RatVector, base: usize) -> Result<bool, CutError> {
    if !sub.ambient.contains(v) {
        return Err(CutError::NotContained(v.clone()));
    }
    let data = vertex_data(sub, v);
    if !data.active.contains(base) {
        return Err(CutError::NotActive {
            vertex: v.clone(),
            index: base,
        });
    }
    if !rank_check(sub, v, &data).holds {
        return Err(CutError::RankPreconditionFailed(v.clone()));
    }
    let k = sub.ambient.rank();
    let torus_lattice = lattice::saturate(&data.torus, k)?.lattice;
    let a = Sublattice::new(torus_lattice.basis().to_vec(), k)?;
    Ok(lattice::direct_sum_equals_saturation(
        &a,
        &differences(&sub.cuts, data.active, base),
    )?)
}

/// Lattice-criterion verdict at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVerdict {
    pub vertex: RatVector,
    /// The rank conditions hold, so the direct sum is defined.
    pub rank_precondition: bool,
    /// `T_v x (S^1)^{I_v}_• -> T` is injective: the rank conditions hold and
    /// the direct sum is saturated.
    pub holds: bool,
}

/// The lattice criterion at every vertex of every nonempty `Δ_i`, with the
/// smallest active index as base. Where the rank conditions fail the map is
/// not injective and the verdict is negative.
pub fn lattice_criterion_quasi_regular(sub: &Subdivision) -> Vec<LatticeVerdict> {
    sub.cell_vertices()
        .into_iter()
        .map(|v| {
            let base = sub.cuts.argmin(&v).first().expect("nonempty");
            match lattice_criterion_at(sub, &v, base) {
                Ok(holds) => LatticeVerdict {
                    vertex: v,
                    rank_precondition: true,
                    holds,
                },
                Err(CutError::RankPreconditionFailed(_)) => LatticeVerdict {
                    vertex: v,
                    rank_precondition: false,
                    holds: false,
                },
                Err(e) => panic!("lattice criterion at a cell vertex: {e}"),
            }
        })
        .collect()
}

/// A nonempty cell that is not Delzant, with its non-smooth vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDelzantFailure {
    pub cell: usize,
    pub vertices: Vec<RatVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiRegularityReport {
    pub is_quasi_regular: bool,
    /// Whether `Δ` itself is Delzant; the criteria presume it.
    pub ambient_delzant: bool,
    /// Cells `Δ_i` that are empty; dropped from the Delzant and
    /// primitivity checks but indices are kept.
    pub empty_cells: Vec<usize>,
    /// Lower-dimensional cells that are not a face of `Δ` shared with a
    /// full-dimensional cell.
    pub degenerate_cells: Vec<usize>,
    pub delzant_failures: Vec<CellDelzantFailure>,
    /// Pairs `i < j` with `Δ_ij` nonempty and `xi_i - xi_j` not primitive.
    pub primitivity_failures: Vec<(usize, usize)>,
    pub detrans_failures: Vec<DetransViolation>,
}

/// The definitional quasi-regularity check.
pub fn is_quasi_regular(sub: &Subdivision) -> QuasiRegularityReport {
    let n = sub.len();
    let ambient = &sub.ambient;

    let degenerate_cells = sub
        .degenerate_cells()
        .into_iter()
        .filter(|&i| !is_shared_face(sub, i))
        .collect::<Vec<_>>();

    let delzant_failures = (0..n)
        .filter_map(|i| {
            let cell = sub.cell(i)?;
            let report = delzant::is_delzant(cell);
            (!report.is_delzant).then(|| CellDelzantFailure {
                cell: i,
                vertices: report.failures().map(|r| r.vertex.clone()).collect(),
            })
        })
        .collect::<Vec<_>>();

    let mut primitivity_failures = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if sub.piece(PieceSet::from_indices([i, j])).is_none() {
                continue;
            }
            if !lattice::is_primitive(&sub.cuts.xi_diff(i, j)).unwrap_or(false) {
                primitivity_failures.push((i, j));
            }
        }
    }

    let detrans_failures = check_detrans(sub);
    QuasiRegularityReport {
        is_quasi_regular: degenerate_cells.is_empty()
            && delzant_failures.is_empty()
            && primitivity_failures.is_empty()
            && detrans_failures.is_empty(),
        ambient_delzant: delzant::is_delzant(ambient).is_delzant,
        empty_cells: sub.empty_cells(),
        degenerate_cells,
        delzant_failures,
        primitivity_failures,
        detrans_failures,
    }
}

// A lower-dimensional cell that is a face of Δ and lies in a full-dimensional
// cell.
fn is_shared_face(sub: &Subdivision, i: usize) -> bool {
    let Some(cell) = sub.cell(i) else {
        return false;
    };
    let ambient = &sub.ambient;
    let count = Rat::from_integer(cell.vertices().len().into());
    let centroid = cell
        .vertices()
        .iter()
        .fold(RatVector::zeros(cell.rank()), |acc, v| acc.add(v))
        .scale(&count.recip());
    let face = ambient
        .minimal_face(&centroid)
        .expect("cells lie in the polytope");
    if face.vertices != cell.vertices() {
        return false;
    }
    (0..sub.len()).any(|j| {
        sub.cell(j)
            .is_some_and(|c| c.dim() == ambient.dim() && c.contains_polytope(cell))
    })
}

/// A one-cocycle `(xi_ij, eps_ij)` on `{0, .., n-1}`, stored by ordered pair
/// with `(xi_ji, eps_ji) = -(xi_ij, eps_ij)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    n: usize,
    rank: usize,
    entries: BTreeMap<(usize, usize), (IntVector, Rat)>,
}

impl Cocycle {
    pub fn new(n: usize, rank: usize) -> Self {
        Cocycle {
            n,
            rank,
            entries: BTreeMap::new(),
        }
    }

    /// The differences `(xi_j, eps_j) - (xi_i, eps_i)` of a tuple.
    pub fn from_cut_data(cuts: &CutData) -> Self {
        let mut c = Cocycle::new(cuts.len(), cuts.rank());
        for i in 0..cuts.len() {
            for j in 0..cuts.len() {
                if i != j {
                    let (a, b) = (cuts.get(i), cuts.get(j));
                    c.entries.insert((i, j), (b.xi.sub(&a.xi), &b.eps - &a.eps));
                }
            }
        }
        c
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Records `(xi_ij, eps_ij)`; rejects entries contradicting antisymmetry.
    pub fn insert(&mut self, i: usize, j: usize, xi: IntVector, eps: Rat) -> Result<(), CutError> {
        for idx in [i, j] {
            if idx >= self.n {
                return Err(CutError::IndexOutOfRange(idx));
            }
        }
        if xi.len() != self.rank {
            return Err(CutError::DimensionMismatch {
                expected: self.rank,
                found: xi.len(),
            });
        }
        if i == j {
            if xi.is_zero() && eps.is_zero() {
                return Ok(());
            }
            return Err(CutError::NotAntisymmetric { i, j });
        }
        if let Some((x, e)) = self.entries.get(&(j, i)) {
            if *x != xi.neg() || *e != -eps.clone() {
                return Err(CutError::NotAntisymmetric { i: j, j: i });
            }
        }
        if let Some((x, e)) = self.entries.get(&(i, j)) {
            if *x != xi || *e != eps {
                return Err(CutError::NotAntisymmetric { i, j });
            }
        }
        self.entries.insert((i, j), (xi, eps));
        Ok(())
    }

    /// `(xi_ij, eps_ij)`, completed by antisymmetry and zero on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> Option<(IntVector, Rat)> {
        if i == j {
            return Some((IntVector::zeros(self.rank), Rat::zero()));
        }
        if let Some(e) = self.entries.get(&(i, j)) {
            return Some(e.clone());
        }
        self.entries
            .get(&(j, i))
            .map(|(x, e)| (x.neg(), -e.clone()))
    }
}

/// A tuple `(xi_i, eps_i)` with `(xi_ij, eps_ij) = (xi_j, eps_j) - (xi_i, eps_i)`,
/// normalized by `(xi_0, eps_0) = (0, 0)`. Any other cobounding tuple differs
/// from it by one common shift `(xi, eps)`.
pub fn cobound(cocycle: &Cocycle) -> Result<CutData, CutError> {
    let n = cocycle.len();
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let e = cocycle
                .get(i, j)
                .ok_or(CutError::IncompleteCocycle { i, j })?;
            table.insert((i, j), e);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x1, e1) = &table[&(i, j)];
                let (x2, e2) = &table[&(j, k)];
                let (x3, e3) = &table[&(i, k)];
                if x1.add(x2) != *x3 || &(e1 + e2) != e3 {
                    return Err(CutError::NotACocycle { i, j, k });
                }
            }
        }
    }
    CutData::new(
        (0..n)
            .map(|j| {
                let (xi, eps) = table[&(0, j)].clone();
                CutDatum::new(xi, eps)
            })
            .collect(),
    )
}

impl QuasiRegularityReport {
    /// Whether every failure list is empty; equals `is_quasi_regular`.
    pub fn all_lists_empty(&self) -> bool {
        self.degenerate_cells.is_empty()
            && self.delzant_failures.is_empty()
            && self.primitivity_failures.is_empty()
            && self.detrans_failures.is_empty()
    }
}
