//! Integer lattices: Hermite normal form, primitivity, saturation and
//! basis tests inside `Z^k`.
//!
//! Everything here works on explicit integer row vectors. Two lattices are
//! compared through their Hermite normal forms, which are canonical.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg;
use crate::num::{Int, IntVector, Rat, RatVector};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("zero vector has no primitivity")]
    ZeroVector,
    #[error("expected {expected} vectors, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("vectors are linearly dependent over Q")]
    NotIndependent,
    #[error("vector of length {found} in a lattice of rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Rectangular integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    ncols: usize,
    rows: Vec<IntVector>,
}

impl IntMatrix {
    pub fn new(rows: Vec<IntVector>, ncols: usize) -> Result<Self, LatticeError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(LatticeError::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(IntMatrix { ncols, rows })
    }

    /// Panics if the rows are ragged.
    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| IntVector::from_i64s(r)).collect();
        IntMatrix::new(rows, ncols).expect("rectangular matrix")
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            ncols: n,
            rows: (0..n).map(|i| IntVector::unit(n, i)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.ncols)
            .map(|j| IntVector::new(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        IntMatrix {
            ncols: self.rows.len(),
            rows,
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows(), "matrix shapes do not compose");
        let cols = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| IntVector::new(cols.rows.iter().map(|c| r.dot(c)).collect()))
            .collect();
        IntMatrix {
            ncols: other.ncols,
            rows,
        }
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Int {
        assert_eq!(self.nrows(), self.ncols, "determinant of a non-square matrix");
        let rows: Vec<RatVector> = self.rows.iter().map(IntVector::to_rat).collect();
        linalg::det(&rows).to_integer()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    // row[target] -= factor * row[source]
    fn sub_multiple(&mut self, target: usize, source: usize, factor: &Int) {
        if factor.is_zero() {
            return;
        }
        let src = self.rows[source].scale(factor);
        self.rows[target] = self.rows[target].sub(&src);
    }

    fn negate_row(&mut self, i: usize) {
        self.rows[i] = self.rows[i].neg();
    }
}

/// Row Hermite normal form `h` of a matrix `m` together with a unimodular
/// transform `u` such that `u * m = h`.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`, in order.
    pub pivots: Vec<usize>,
}

impl Hnf {
    /// Number of nonzero rows, i.e. the rank of the input.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows of `h`: the canonical basis of the row lattice.
    pub fn basis(&self) -> Vec<IntVector> {
        self.h.rows()[..self.rank()].to_vec()
    }
}

/// Row Hermite normal form: echelon shape, positive pivots, entries above a
/// pivot reduced into `[0, pivot)`, zero rows last.
pub fn hnf(m: &IntMatrix) -> Hnf {
    let nrows = m.nrows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(nrows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.ncols() {
        if r == nrows {
            break;
        }
        // Euclid on column c below row r.
        loop {
            let best = (r..nrows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..nrows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                h.sub_multiple(i, r, &q);
                u.sub_multiple(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            h.sub_multiple(i, r, &q);
            u.sub_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    Hnf { h, u, pivots }
}

/// Whether `xi` is not a proper integer multiple of another lattice vector.
pub fn is_primitive(xi: &IntVector) -> Result<bool, LatticeError> {
    if xi.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    Ok(xi.content().is_one())
}

/// Z-basis of `{x in Z^ncols : <row, x> = 0 for every row}`.
pub fn integer_kernel(rows: &[IntVector], ncols: usize) -> Vec<IntVector> {
    let m = IntMatrix {
        ncols,
        rows: rows.to_vec(),
    };
    let t = hnf(&m.transpose());
    t.u.rows()[t.rank()..].to_vec()
}

/// Canonical (HNF) basis of the lattice generated by `vectors`.
pub fn lattice_basis(vectors: &[IntVector], ambient_rank: usize) -> Vec<IntVector> {
    let m = IntMatrix {
        ncols: ambient_rank,
        rows: vectors.to_vec(),
    };
    hnf(&m).basis()
}

/// Whether two generating sets span the same lattice.
pub fn same_lattice(a: &[IntVector], b: &[IntVector], ambient_rank: usize) -> bool {
    lattice_basis(a, ambient_rank) == lattice_basis(b, ambient_rank)
}

/// Sublattice of `Z^k` given by a Q-linearly independent basis.
#[derive(Clone, Debug)]
pub struct Sublattice {
    basis: Vec<IntVector>,
    ambient_rank: usize,
}

impl Sublattice {
    pub fn new(basis: Vec<IntVector>, ambient_rank: usize) -> Result<Self, LatticeError> {
        check_lengths(&basis, ambient_rank)?;
        if linalg::rank_int(&basis, ambient_rank) != basis.len() {
            return Err(LatticeError::NotIndependent);
        }
        Ok(Sublattice {
            basis,
            ambient_rank,
        })
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Sublattice {
            basis: Vec::new(),
            ambient_rank,
        }
    }

    pub fn basis(&self) -> &[IntVector] {
        &self.basis
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Whether `v` is an integer combination of the basis.
    pub fn contains(&self, v: &IntVector) -> bool {
        let basis: Vec<RatVector> = self.basis.iter().map(IntVector::to_rat).collect();
        match linalg::coordinates(&basis, &v.to_rat()) {
            Some(c) => c.iter().all(Rat::is_integer),
            None => false,
        }
    }
}

impl PartialEq for Sublattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank
            && same_lattice(&self.basis, &other.basis, self.ambient_rank)
    }
}

impl Eq for Sublattice {}

/// Saturation `Z^k ∩ span_R(vectors)` of a generating set.
#[derive(Clone, Debug)]
pub struct Saturation {
    pub lattice: Sublattice,
    /// Index of the lattice generated by the input inside the saturation.
    pub index: Int,
}

/// Computes `Z^k ∩ span_R(vectors)` as the double integer orthogonal
/// complement of the input, and the index of the input lattice in it.
pub fn saturate(vectors: &[IntVector], ambient_rank: usize) -> Result<Saturation, LatticeError> {
    check_lengths(vectors, ambient_rank)?;
    let generated = lattice_basis(vectors, ambient_rank);
    if generated.is_empty() {
        return Ok(Saturation {
            lattice: Sublattice::zero(ambient_rank),
            index: Int::one(),
        });
    }
    let perp = integer_kernel(&generated, ambient_rank);
    let saturated = lattice_basis(&integer_kernel(&perp, ambient_rank), ambient_rank);
    debug_assert_eq!(saturated.len(), generated.len());

    let sat_rat: Vec<RatVector> = saturated.iter().map(IntVector::to_rat).collect();
    let coords: Vec<RatVector> = generated
        .iter()
        .map(|g| {
            RatVector::new(
                linalg::coordinates(&sat_rat, &g.to_rat()).expect("generator lies in its saturation"),
            )
        })
        .collect();
    let index = linalg::det(&coords).abs();
    debug_assert!(index.is_integer());
    Ok(Saturation {
        lattice: Sublattice {
            basis: saturated,
            ambient_rank,
        },
        index: index.to_integer(),
    })
}

/// Whether `vectors` is a Z-basis of `Z^k`.
pub fn is_z_basis(vectors: &[IntVector], ambient_rank: usize) -> Result<bool, LatticeError> {
    if vectors.len() != ambient_rank {
        return Err(LatticeError::RankMismatch {
            expected: ambient_rank,
            found: vectors.len(),
        });
    }
    check_lengths(vectors, ambient_rank)?;
    let m = IntMatrix {
        ncols: ambient_rank,
        rows: vectors.to_vec(),
    };
    Ok(m.det().abs().is_one())
}

/// Decides whether `part_a ⊕ (⊕ Z b)` is already saturated, i.e. equals
/// `Z^k ∩ span_R(part_a, gens_b)`.
pub fn direct_sum_equals_saturation(
    part_a: &Sublattice,
    gens_b: &[IntVector],
) -> Result<bool, LatticeError> {
    let k = part_a.ambient_rank();
    check_lengths(gens_b, k)?;
    let mut combined = part_a.basis().to_vec();
    combined.extend_from_slice(gens_b);
    if linalg::rank_int(&combined, k) != combined.len() {
        return Err(LatticeError::NotIndependent);
    }
    Ok(saturate(&combined, k)?.index.is_one())
}

fn check_lengths(vectors: &[IntVector], ambient_rank: usize) -> Result<(), LatticeError> {
    match vectors.iter().find(|v| v.len() != ambient_rank) {
        Some(v) => Err(LatticeError::DimensionMismatch {
            expected: ambient_rank,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn iv(xs: &[i64]) -> IntVector {
        IntVector::from_i64s(xs)
    }

    fn is_hnf(h: &Hnf) -> bool {
        let mut last_pivot = None;
        for (r, &c) in h.pivots.iter().enumerate() {
            if last_pivot.is_some_and(|p| c <= p) {
                return false;
            }
            let pivot = h.h.get(r, c);
            if !pivot.is_positive() {
                return false;
            }
            if (0..c).any(|j| !h.h.get(r, j).is_zero()) {
                return false;
            }
            for i in 0..r {
                let e = h.h.get(i, c);
                if e.is_negative() || e >= pivot {
                    return false;
                }
            }
            for i in r + 1..h.h.nrows() {
                if !h.h.get(i, c).is_zero() {
                    return false;
                }
            }
            last_pivot = Some(c);
        }
        h.h.rows()[h.rank()..].iter().all(IntVector::is_zero)
    }

    #[test]
    fn hnf_of_identity_and_diagonal() {
        let id = IntMatrix::identity(2);
        let r = hnf(&id);
        assert_eq!(r.h, id);
        assert_eq!(r.u, id);

        let d = IntMatrix::from_i64s(&[&[2, 0], &[0, 3]]);
        let r = hnf(&d);
        assert_eq!(r.h, d);
        assert_eq!(r.u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_preserves_row_lattice() {
        // The lattice spanned by (2,4),(1,3) has determinant 2; brute force
        // over small coefficient boxes both ways.
        let m = IntMatrix::from_i64s(&[&[2, 4], &[1, 3]]);
        let r = hnf(&m);
        assert!(is_hnf(&r));
        assert_eq!(r.h, IntMatrix::from_i64s(&[&[1, 1], &[0, 2]]));
        let in_span = |gens: &[IntVector], target: &IntVector| {
            (-6i64..=6).any(|a| {
                (-6i64..=6).any(|b| {
                    gens[0].scale(&Int::from(a)).add(&gens[1].scale(&Int::from(b))) == *target
                })
            })
        };
        for row in r.h.rows() {
            assert!(in_span(m.rows(), row));
        }
        for row in m.rows() {
            assert!(in_span(r.h.rows(), row));
        }
    }

    #[test]
    fn primitivity() {
        assert_eq!(is_primitive(&iv(&[1, 0])), Ok(true));
        assert_eq!(is_primitive(&iv(&[2, 4])), Ok(false));
        assert_eq!(is_primitive(&iv(&[3, 5])), Ok(true));
        assert_eq!(is_primitive(&iv(&[0, 0])), Err(LatticeError::ZeroVector));
    }

    #[test]
    fn saturation_examples() {
        let s = saturate(&[iv(&[2, 0])], 2).unwrap();
        assert_eq!(s.lattice.basis(), &[iv(&[1, 0])]);
        assert_eq!(s.index, Int::from(2));

        let s = saturate(&[], 3).unwrap();
        assert!(s.lattice.basis().is_empty());
        assert_eq!(s.index, Int::one());

        let s = saturate(&[iv(&[2, 2]), iv(&[0, 4])], 2).unwrap();
        assert_eq!(s.lattice, Sublattice::new(vec![iv(&[1, 0]), iv(&[0, 1])], 2).unwrap());
        assert_eq!(s.index, Int::from(8));
    }

    #[test]
    fn z_basis() {
        assert_eq!(is_z_basis(&[iv(&[1, 0]), iv(&[0, 1])], 2), Ok(true));
        assert_eq!(is_z_basis(&[iv(&[1, 0]), iv(&[0, 2])], 2), Ok(false));
        assert_eq!(is_z_basis(&[iv(&[2, 1]), iv(&[1, 1])], 2), Ok(true));
        assert_eq!(
            is_z_basis(&[iv(&[1, 0])], 2),
            Err(LatticeError::RankMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn direct_sums() {
        let a = Sublattice::new(vec![iv(&[1, 0])], 2).unwrap();
        assert_eq!(direct_sum_equals_saturation(&a, &[iv(&[0, 1])]), Ok(true));

        let zero = Sublattice::zero(2);
        assert_eq!(
            direct_sum_equals_saturation(&zero, &[iv(&[1, 1]), iv(&[1, -1])]),
            Ok(false)
        );

        let a3 = Sublattice::new(vec![iv(&[1, 0, 0])], 3).unwrap();
        assert_eq!(direct_sum_equals_saturation(&a3, &[iv(&[0, 1, 0])]), Ok(true));

        assert_eq!(
            direct_sum_equals_saturation(&a, &[iv(&[3, 0])]),
            Err(LatticeError::NotIndependent)
        );
    }

    #[test]
    fn kernel_is_orthogonal_and_saturated() {
        let rows = [iv(&[2, 4, 6])];
        let k = integer_kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(v.dot(&rows[0]).is_zero());
        }
        assert!(saturate(&k, 3).unwrap().index.is_one());
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r).prop_map(
                move |rows| {
                    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
                    IntMatrix::from_i64s(&refs)
                },
            )
        })
    }

    proptest! {
        #[test]
        fn hnf_transform_is_unimodular(m in small_matrix()) {
            let r = hnf(&m);
            prop_assert!(r.u.det().abs().is_one());
            prop_assert_eq!(r.u.mul(&m), r.h.clone());
            prop_assert!(is_hnf(&r));
        }

        #[test]
        fn saturation_is_idempotent(m in small_matrix()) {
            let k = m.ncols();
            let s = saturate(m.rows(), k).unwrap();
            let again = saturate(s.lattice.basis(), k).unwrap();
            prop_assert!(again.index.is_one());
            prop_assert_eq!(again.lattice, s.lattice);
        }

        #[test]
        fn primitive_iff_saturation_is_itself(xs in proptest::collection::vec(-9i64..=9, 1..=3)) {
            let v = IntVector::from_i64s(&xs);
            prop_assume!(!v.is_zero());
            let s = saturate(core::slice::from_ref(&v), v.len()).unwrap();
            let b = s.lattice.basis();
            let same = b[0] == v || b[0] == v.neg();
            prop_assert_eq!(is_primitive(&v).unwrap(), same);
        }
    }
}
