// Double description method over the integers.
//
// Computes generators of the cone {x : <a, x> >= 0 for every constraint a}
// as a lineality basis plus the extreme rays of the pointed part. Rays are
// kept primitive; adjacency of a positive/negative pair uses the
// combinatorial test on zero sets, which is exact for a pointed cone.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::num::{Int, IntVector};

pub(crate) struct ConeGenerators {
    pub lineality: Vec<IntVector>,
    pub rays: Vec<IntVector>,
}

struct Ray {
    v: IntVector,
    // zero[i] is meaningful for constraints processed so far.
    zero: Vec<bool>,
}

// (alpha * x - beta * y), made primitive.
fn combine(alpha: &Int, x: &IntVector, beta: &Int, y: &IntVector) -> IntVector {
    x.scale(alpha).sub(&y.scale(beta)).primitive_part()
}

pub(crate) fn cone_generators(constraints: &[IntVector], dim: usize) -> ConeGenerators {
    let m = constraints.len();
    let mut lineality: Vec<IntVector> = (0..dim).map(|i| IntVector::unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (idx, a) in constraints.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        if let Some(p) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            let mut pivot = lineality.swap_remove(p);
            let mut ap = a.dot(&pivot);
            if ap.is_negative() {
                pivot = pivot.neg();
                ap = -ap;
            }
            for l in lineality.iter_mut() {
                let al = a.dot(l);
                if !al.is_zero() {
                    *l = combine(&ap, l, &al, &pivot);
                }
            }
            for r in rays.iter_mut() {
                let ar = a.dot(&r.v);
                if !ar.is_zero() {
                    r.v = combine(&ap, &r.v, &ar, &pivot);
                }
                r.zero[idx] = true;
            }
            // The pivot is tight on every earlier constraint.
            let mut zero = alloc::vec![false; m];
            zero[..idx].iter_mut().for_each(|z| *z = true);
            rays.push(Ray { v: pivot, zero });
            continue;
        }

        let values: Vec<Int> = rays.iter().map(|r| a.dot(&r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut created = Vec::new();
        for &i in &pos {
            for &j in &neg {
                let common: Vec<usize> = (0..idx)
                    .filter(|&c| rays[i].zero[c] && rays[j].zero[c])
                    .collect();
                let blocked = rays.iter().enumerate().any(|(k, r)| {
                    k != i && k != j && common.iter().all(|&c| r.zero[c])
                });
                if blocked {
                    continue;
                }
                let v = combine(&values[i], &rays[j].v, &values[j], &rays[i].v);
                let mut zero = alloc::vec![false; m];
                for &c in &common {
                    zero[c] = true;
                }
                zero[idx] = true;
                created.push(Ray { v, zero });
            }
        }

        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (r, val) in rays.into_iter().zip(&values) {
            if val.is_negative() {
                continue;
            }
            let mut r = r;
            r.zero[idx] = val.is_zero();
            kept.push(r);
        }
        kept.extend(created);
        rays = kept;
    }

    ConeGenerators {
        lineality,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(xs: &[i64]) -> IntVector {
        IntVector::from_i64s(xs)
    }

    #[test]
    fn positive_orthant() {
        let g = cone_generators(&[iv(&[1, 0]), iv(&[0, 1])], 2);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays;
        rays.sort();
        assert_eq!(rays, [iv(&[0, 1]), iv(&[1, 0])]);
    }

    #[test]
    fn square_cone() {
        // Homogenized unit square: x >= 0, y >= 0, t - x >= 0, t - y >= 0, t >= 0.
        let cons = [
            iv(&[0, 0, 1]),
            iv(&[1, 0, 0]),
            iv(&[0, 1, 0]),
            iv(&[-1, 0, 1]),
            iv(&[0, -1, 1]),
        ];
        let g = cone_generators(&cons, 3);
        assert!(g.lineality.is_empty());
        let mut rays = g.rays;
        rays.sort();
        assert_eq!(
            rays,
            [iv(&[0, 0, 1]), iv(&[0, 1, 1]), iv(&[1, 0, 1]), iv(&[1, 1, 1])]
        );
    }

    #[test]
    fn halfplane_keeps_lineality() {
        let g = cone_generators(&[iv(&[1, 0])], 2);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays.len(), 1);
    }
}
