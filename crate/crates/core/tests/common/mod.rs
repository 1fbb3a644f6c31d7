#![allow(dead_code)]

use momentcut_core::cut::{subdivide, CutData, CutDatum, Subdivision};
use momentcut_core::delzant::is_delzant;
use momentcut_core::num::{rat, rat_int};
use momentcut_core::polytope::box_polytope;
use momentcut_core::{HalfSpace, IntVector, Polytope, Rat, RatVector};
use rand::rngs::StdRng;
use rand::Rng;

pub fn pt(xs: &[i64]) -> RatVector {
    RatVector::from_i64s(xs)
}

pub fn cuts(data: &[(&[i64], Rat)]) -> CutData {
    CutData::new(
        data.iter()
            .map(|(xi, eps)| CutDatum::from_i64s(xi, eps.clone()))
            .collect(),
    )
    .unwrap()
}

/// Named instances from the worked examples.
pub fn fixtures() -> Vec<(&'static str, Polytope, CutData)> {
    let seg = box_polytope(&[(0, 1)]);
    vec![
        (
            "product three-fold",
            box_polytope(&[(-2, 1), (-1, 1)]),
            cuts(&[
                (&[0, 0], rat_int(0)),
                (&[1, 0], rat_int(0)),
                (&[0, 1], rat_int(0)),
            ]),
        ),
        (
            "segment two-fold",
            seg.clone(),
            cuts(&[(&[1], rat(1, 2)), (&[0], rat_int(0))]),
        ),
        ("segment single", seg.clone(), cuts(&[(&[2], rat_int(0))])),
        (
            "segment non-primitive",
            seg,
            cuts(&[(&[2], rat_int(0)), (&[0], rat_int(0))]),
        ),
        (
            "square degenerate",
            box_polytope(&[(0, 1), (0, 1)]),
            cuts(&[
                (&[0, 0], rat_int(0)),
                (&[1, 0], rat_int(0)),
                (&[2, 0], rat_int(0)),
            ]),
        ),
    ]
}

fn unimodular(rng: &mut StdRng) -> [IntVector; 2] {
    loop {
        let m: [[i64; 2]; 2] = [
            [rng.gen_range(-2..=2), rng.gen_range(-2..=2)],
            [rng.gen_range(-2..=2), rng.gen_range(-2..=2)],
        ];
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1 {
            return [IntVector::from_i64s(&m[0]), IntVector::from_i64s(&m[1])];
        }
    }
}

/// A Delzant polygon: a box or a right triangle, up to two corners cut off
/// along the sum of the adjacent facet normals, then moved by a random
/// lattice automorphism and translation.
pub fn random_delzant_polygon(rng: &mut StdRng) -> Polytope {
    loop {
        let mut p = if rng.gen_bool(0.5) {
            box_polytope(&[(0, rng.gen_range(1..=3)), (0, rng.gen_range(1..=3))])
        } else {
            let s = rng.gen_range(1..=3);
            Polytope::from_vertices(&[pt(&[0, 0]), pt(&[s, 0]), pt(&[0, s])]).unwrap()
        };
        for _ in 0..rng.gen_range(0..=2) {
            let v = p.vertices()[rng.gen_range(0..p.vertices().len())].clone();
            let normals: Vec<IntVector> = p
                .facets()
                .iter()
                .filter(|h| h.is_tight(&v))
                .map(|h| h.normal().clone())
                .collect();
            let n = normals[0].add(&normals[1]);
            let offset = n.pair(&v) + rat_int(1);
            let Ok(h) = HalfSpace::new(n, offset) else { continue };
            if let Some(q) = p.intersect(&[h]) {
                if q.dim() == 2 && is_delzant(&q).is_delzant {
                    p = q;
                }
            }
        }
        let rows = unimodular(rng);
        let shift = pt(&[rng.gen_range(-2..=2), rng.gen_range(-2..=2)]);
        let q = p.affine_image(&rows, &shift).unwrap();
        if is_delzant(&q).is_delzant {
            return q;
        }
    }
}

pub fn random_segment(rng: &mut StdRng) -> Polytope {
    let lo = rng.gen_range(-3..=2);
    let hi = rng.gen_range(lo + 1..=3);
    box_polytope(&[(lo, hi)])
}

/// Rank 1 or 2 polytope with 1 to 3 cuts, entries in [-3,3] and offsets
/// with denominators up to 4.
pub fn random_instance(rng: &mut StdRng) -> (Polytope, CutData) {
    let p = if rng.gen_bool(0.3) {
        random_segment(rng)
    } else {
        random_delzant_polygon(rng)
    };
    let k = p.rank();
    let n = rng.gen_range(1..=3);
    // Integral offsets make ties at lattice vertices common.
    let integral = rng.gen_bool(0.5);
    let data = (0..n)
        .map(|_| {
            let xi: Vec<i64> = (0..k).map(|_| rng.gen_range(-3..=3)).collect();
            let eps = if integral {
                rat_int(rng.gen_range(-2..=2))
            } else {
                rat(rng.gen_range(-8..=8), rng.gen_range(1..=4))
            };
            CutDatum::new(IntVector::from_i64s(&xi), eps)
        })
        .collect();
    (p, CutData::new(data).unwrap())
}

pub fn random_subdivision(rng: &mut StdRng) -> Subdivision {
    let (p, c) = random_instance(rng);
    subdivide(&p, &c).unwrap()
}

/// A rational point of `p` as a random convex combination of its vertices.
pub fn sample_point(p: &Polytope, rng: &mut StdRng) -> RatVector {
    let weights: Vec<i64> = p.vertices().iter().map(|_| rng.gen_range(0..=5)).collect();
    let total: i64 = weights.iter().sum();
    if total == 0 {
        return p.vertices()[0].clone();
    }
    p.vertices()
        .iter()
        .zip(&weights)
        .fold(RatVector::zeros(p.rank()), |acc, (v, w)| {
            acc.add(&v.scale(&rat(*w, total)))
        })
}
