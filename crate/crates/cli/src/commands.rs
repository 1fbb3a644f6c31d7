//! The subcommands, as functions from a parsed job to a JSON report.

use momentcut_core::cut::{self, PieceSet};
use momentcut_core::degeneration::{self, DegenerationError};
use momentcut_core::delzant::{self, SmoothnessFailure};
use momentcut_core::toric2d::{self, Toric2dError};
use momentcut_core::{CutData, Polytope, Rat, Subdivision};
use num_traits::One;
use serde_json::{json, Value};

use crate::spec::{int_json, int_vector_json, rat_json, rat_vector_json, JobSpec, SpecError};
use crate::svg;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INCONSISTENT: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckDelzant,
    Subdivide,
    CheckRegular,
    Lift,
    Degrees,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Overrides the `a` of the job file.
    pub a: Option<Rat>,
    pub svg: bool,
    pub max_rank: usize,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    /// One or more lines for standard error.
    pub summary: String,
    pub exit: u8,
    pub svg: Option<String>,
}

impl Outcome {
    fn new(report: Value, summary: impl Into<String>, ok: bool) -> Self {
        Outcome {
            report,
            summary: summary.into(),
            exit: if ok { EXIT_OK } else { EXIT_FALSE },
            svg: None,
        }
    }

    // Attaches a figure; an unsupported rank keeps the data but exits 2.
    fn with_figure(mut self, figure: Option<Result<String, svg::FigureUnsupported>>) -> Self {
        match figure {
            Some(Ok(s)) => self.svg = Some(s),
            Some(Err(e)) => {
                self.summary.push_str(&format!("\nno figure written: {e}"));
                self.exit = EXIT_INPUT;
            }
            None => {}
        }
        self
    }
}

pub fn run(command: Command, job: &JobSpec, opts: &Options) -> Result<Outcome, SpecError> {
    let p = job.polytope.to_polytope(opts.max_rank)?;
    if command == Command::CheckDelzant {
        return Ok(check_delzant(&p, opts));
    }
    let cuts = job.cut_data(p.rank())?;
    let sub = cut::subdivide(&p, &cuts).map_err(|e| SpecError::new("cuts", e))?;
    Ok(match command {
        Command::CheckDelzant => unreachable!(),
        Command::Subdivide => subdivide(&sub, opts),
        Command::CheckRegular => check_regular(&sub),
        Command::Lift => {
            let a = opts.a.clone().or_else(|| job.a.as_ref().map(|a| a.0.clone()));
            lift(&p, &cuts, a, opts)
        }
        Command::Degrees => degrees(&sub),
    })
}

fn one_based(set: PieceSet) -> Value {
    set.iter().map(|i| i + 1).collect()
}

pub fn polytope_json(p: &Polytope) -> Value {
    let half = |h: &momentcut_core::HalfSpace| {
        json!({"normal": int_vector_json(h.normal()), "offset": rat_json(h.offset())})
    };
    json!({
        "rank": p.rank(),
        "dim": p.dim(),
        "vertices": p.vertices().iter().map(rat_vector_json).collect::<Vec<_>>(),
        "facets": p.facets().iter().map(half).collect::<Vec<_>>(),
        "equations": p.equations().iter().map(half).collect::<Vec<_>>(),
    })
}

fn cuts_json(cuts: &CutData) -> Value {
    cuts.data()
        .iter()
        .map(|d| json!({"xi": int_vector_json(&d.xi), "eps": rat_json(&d.eps)}))
        .collect()
}

fn check_delzant(p: &Polytope, opts: &Options) -> Outcome {
    let report = delzant::is_delzant(p);
    let vertices: Vec<Value> = report
        .vertices
        .iter()
        .map(|r| {
            let failure = match &r.failure_reason {
                None => Value::Null,
                Some(SmoothnessFailure::EdgeCountMismatch { edges, dim }) => {
                    json!({"kind": "EdgeCountMismatch", "edges": edges, "dim": dim})
                }
                Some(SmoothnessFailure::NotZBasis { index }) => {
                    json!({"kind": "NotZBasis", "index": int_json(index)})
                }
                Some(SmoothnessFailure::IrrationalSlope) => json!({"kind": "IrrationalSlope"}),
            };
            json!({
                "vertex": rat_vector_json(&r.vertex),
                "smooth": r.is_smooth,
                "edge_directions": r.edge_directions.iter().map(int_vector_json).collect::<Vec<_>>(),
                "failure": failure,
            })
        })
        .collect();
    let failing: Vec<String> = report.failures().map(|r| r.vertex.to_string()).collect();
    let summary = if report.is_delzant {
        format!("Delzant: all {} vertices smooth", report.vertices.len())
    } else {
        format!("not Delzant: non-smooth at {}", failing.join(" "))
    };
    let figure = opts.svg.then(|| svg::polytope(p, "polytope"));
    Outcome::new(
        json!({"is_delzant": report.is_delzant, "vertices": vertices}),
        summary,
        report.is_delzant,
    )
    .with_figure(figure)
}

fn subdivide(sub: &Subdivision, opts: &Options) -> Outcome {
    let pieces: Vec<Value> = sub
        .nonempty()
        .map(|(set, p)| {
            json!({
                "indices": one_based(set),
                "dim": p.dim(),
                "vertices": p.vertices().iter().map(rat_vector_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    let empty: Vec<Value> = sub
        .pieces()
        .filter(|(_, p)| p.is_none())
        .map(|(s, _)| one_based(s))
        .collect();
    let summary = format!("{} nonempty pieces", pieces.len());
    let figure = opts.svg.then(|| svg::subdivision(sub));
    Outcome::new(
        json!({
            "cuts": cuts_json(sub.cuts()),
            "pieces": pieces,
            "empty": empty,
        }),
        summary,
        true,
    )
    .with_figure(figure)
}

fn check_regular(sub: &Subdivision) -> Outcome {
    let def = cut::is_quasi_regular(sub);
    let lattice = cut::lattice_criterion_quasi_regular(sub);
    let ranks = cut::check_rank_criterion(sub);
    let lattice_holds = lattice.iter().all(|v| v.holds);
    let ranks_hold = ranks.iter().all(|r| r.holds);
    let detrans_holds = def.detrans_failures.is_empty();
    let lattice_verdict = detrans_holds && lattice_holds && def.delzant_failures.is_empty();
    let agree = def.is_quasi_regular == lattice_verdict && detrans_holds == ranks_hold;

    let cells = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
    let report = json!({
        "quasi_regular": def.is_quasi_regular,
        "lattice_criterion": lattice_verdict,
        "agreement": agree,
        "ambient_delzant": def.ambient_delzant,
        "definitional": {
            "empty_cells": cells(&def.empty_cells),
            "degenerate_cells": cells(&def.degenerate_cells),
            "delzant_failures": def.delzant_failures.iter().map(|f| json!({
                "cell": f.cell + 1,
                "vertices": f.vertices.iter().map(rat_vector_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "primitivity_failures": def.primitivity_failures.iter()
                .map(|(i, j)| json!([i + 1, j + 1])).collect::<Vec<_>>(),
            "detrans_failures": def.detrans_failures.iter().map(|d| json!({
                "vertex": rat_vector_json(&d.vertex),
                "active": one_based(d.active),
                "face_dim": d.face_dim,
            })).collect::<Vec<_>>(),
        },
        "rank_criterion": ranks.iter().map(|r| json!({
            "vertex": rat_vector_json(&r.vertex),
            "active": one_based(r.active),
            "span_rank": r.span_rank,
            "torus_dim": r.torus_dim,
            "transversal": r.transversal,
            "holds": r.holds,
        })).collect::<Vec<_>>(),
        "lattice": lattice.iter().map(|v| json!({
            "vertex": rat_vector_json(&v.vertex),
            "rank_precondition": v.rank_precondition,
            "holds": v.holds,
        })).collect::<Vec<_>>(),
        "note": "for toric input a quasi-regular tuple is regular",
    });

    let mut summary = if def.is_quasi_regular {
        String::from("quasi-regular")
    } else {
        let mut reasons = Vec::new();
        if !def.degenerate_cells.is_empty() {
            reasons.push(format!("degenerate cells {:?}", cells(&def.degenerate_cells)));
        }
        for f in &def.delzant_failures {
            reasons.push(format!("cell {} not Delzant", f.cell + 1));
        }
        for (i, j) in &def.primitivity_failures {
            reasons.push(format!("xi_{}{} not primitive", i + 1, j + 1));
        }
        for d in &def.detrans_failures {
            reasons.push(format!("too many active cuts at {}", d.vertex));
        }
        format!("not quasi-regular: {}", reasons.join("; "))
    };
    if !def.ambient_delzant {
        summary.push_str("\nwarning: the polytope is not Delzant; criteria may disagree");
    }
    let mut out = Outcome::new(report, summary, def.is_quasi_regular);
    if !agree && def.ambient_delzant {
        out.summary
            .push_str("\ninternal inconsistency: the two criteria disagree");
        out.exit = EXIT_INCONSISTENT;
    }
    out
}

fn lift(p: &Polytope, cuts: &CutData, a: Option<Rat>, opts: &Options) -> Outcome {
    let bound = degeneration::min_a_bound(p, cuts);
    let a = a.unwrap_or_else(|| &bound + Rat::one());
    let lifted = match degeneration::lift(p, cuts, &a) {
        Ok(l) => l,
        Err(DegenerationError::BoundViolated { bound, a }) => {
            return Outcome::new(
                json!({"error": "BoundViolated", "bound": rat_json(&bound), "a": rat_json(&a)}),
                format!("a = {a} does not exceed the bound {bound}"),
                false,
            );
        }
        Err(e) => {
            return Outcome::new(
                json!({"error": e.to_string()}),
                format!("lift failed: {e}"),
                false,
            )
        }
    };
    let critical = degeneration::critical_values(p, cuts)
        .map(|c| c.contains(&a))
        .unwrap_or(false);
    let is_delzant = lifted.is_delzant();
    let fan = degeneration::normal_fan(&lifted.polytope).ok();
    let fibration = fan.as_ref().map(degeneration::check_fan_fibration);
    let compatible = fibration.as_ref().is_some_and(|f| f.compatible);
    let surface = (lifted.polytope.rank() == 2)
        .then(|| toric2d::identify_surface(&lifted.polytope).ok())
        .flatten();
    let vertices = |f: &momentcut_core::Face| {
        f.vertices.iter().map(rat_vector_json).collect::<Vec<_>>()
    };
    let report = json!({
        "a": rat_json(&a),
        "bound": rat_json(&bound),
        "critical": critical,
        "polytope": polytope_json(&lifted.polytope),
        "delzant": is_delzant,
        "fan": fan.as_ref().map(|f| json!({
            "rays": f.rays.iter().map(int_vector_json).collect::<Vec<_>>(),
            "cones": f.maximal_cones,
        })),
        "fibration": fibration.as_ref().map(|f| json!({
            "compatible": f.compatible,
            "cone_images": f.cone_images.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
        })),
        "top_face": vertices(&lifted.top_face),
        "piece_faces": lifted.piece_faces.iter().enumerate().map(|(i, f)| json!({
            "cell": i + 1,
            "vertices": f.as_ref().map(vertices),
        })).collect::<Vec<_>>(),
        "surface": surface.as_ref().map(|s| s.kind.to_string()),
    });
    let mut summary = format!(
        "lift at a = {a} (bound {bound}): {} vertices, {}, fibration {}",
        lifted.polytope.vertices().len(),
        if is_delzant { "Delzant" } else { "not Delzant" },
        if compatible { "compatible" } else { "incompatible" },
    );
    if let Some(s) = &surface {
        summary.push_str(&format!(", surface {}", s.kind));
    }
    let figure = opts
        .svg
        .then(|| svg::polytope(&lifted.polytope, &format!("u = {a}")));
    Outcome::new(report, summary, is_delzant && compatible).with_figure(figure)
}

fn degrees(sub: &Subdivision) -> Outcome {
    let fail = |e: Toric2dError| {
        let kind = match e {
            Toric2dError::NotDim2 => "NotDim2",
            Toric2dError::NotDelzant => "NotDelzant",
        };
        Outcome::new(json!({"error": kind}), format!("degrees unavailable: {e}"), false)
    };
    let report = match toric2d::divisor_degree_report(sub) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let mut pieces = Vec::new();
    for i in 0..sub.len() {
        let Some(cell) = sub.cell(i).filter(|c| c.dim() == 2) else {
            continue;
        };
        let edges = match toric2d::edge_self_intersections(cell) {
            Ok(e) => e,
            Err(e) => return fail(e),
        };
        let surface = toric2d::identify_surface(cell).map(|s| s.kind.to_string()).ok();
        pieces.push(json!({
            "piece": i + 1,
            "surface": surface,
            "edges": edges.iter().map(|e| json!({
                "start": rat_vector_json(&e.start),
                "end": rat_vector_json(&e.end),
                "degree": int_json(&e.degree),
            })).collect::<Vec<_>>(),
        }));
    }
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "between": [e.between.0 + 1, e.between.1 + 1],
                "in_piece": e.in_piece + 1,
                "degree": int_json(&e.degree),
            })
        })
        .collect();
    let summary = report
        .entries
        .iter()
        .map(|e| {
            format!(
                "wall {}{} in cell {}: {}",
                e.between.0 + 1,
                e.between.1 + 1,
                e.in_piece + 1,
                e.degree
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    Outcome::new(
        json!({
            "edges": entries,
            "sums": report.sums.iter().map(|((i, j), s)| json!({
                "between": [i + 1, j + 1],
                "sum": int_json(s),
            })).collect::<Vec<_>>(),
            "pieces": pieces,
        }),
        if summary.is_empty() { "no walls".to_owned() } else { summary },
        true,
    )
}
