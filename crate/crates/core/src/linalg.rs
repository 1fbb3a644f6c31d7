// Dense exact linear algebra over Q on small matrices given as row lists.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::num::{IntVector, Rat, RatVector};

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub(crate) fn rref(rows: &[RatVector], ncols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub(crate) fn rank(rows: &[RatVector], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

pub(crate) fn rank_int(rows: &[IntVector], ncols: usize) -> usize {
    let rows: Vec<RatVector> = rows.iter().map(IntVector::to_rat).collect();
    rank(&rows, ncols)
}

/// Basis of `{x : <row, x> = 0 for every row}`.
pub(crate) fn nullspace(rows: &[RatVector], ncols: usize) -> Vec<RatVector> {
    let (m, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = alloc::vec![Rat::zero(); ncols];
        x[free] = Rat::one();
        for (row, &p) in m.iter().zip(&pivots) {
            x[p] = -row[free].clone();
        }
        basis.push(RatVector::new(x));
    }
    basis
}

/// Integral basis of the rational null space, each vector primitive.
pub(crate) fn nullspace_int(rows: &[RatVector], ncols: usize) -> Vec<IntVector> {
    nullspace(rows, ncols)
        .iter()
        .map(|v| v.clear_denominators().primitive_part())
        .collect()
}

/// Determinant of a square matrix.
pub(crate) fn det(rows: &[RatVector]) -> Rat {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    d
}

/// Coordinates of `v` in terms of the (independent) `basis`, if `v` lies in
/// its span.
pub(crate) fn coordinates(basis: &[RatVector], v: &RatVector) -> Option<Vec<Rat>> {
    let n = v.len();
    let r = basis.len();
    // Solve sum_j c_j basis_j = v: augmented system with the basis as columns.
    let rows: Vec<RatVector> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            RatVector::new(row)
        })
        .collect();
    let (m, pivots) = rref(&rows, r + 1);
    if pivots.contains(&r) {
        return None;
    }
    let mut c = alloc::vec![Rat::zero(); r];
    for (row, &p) in m.iter().zip(&pivots) {
        c[p] = row[r].clone();
    }
    Some(c)
}
