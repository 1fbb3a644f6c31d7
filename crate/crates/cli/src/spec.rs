//! JSON job files.
//!
//! Rationals travel as strings (`"3/4"`, `"-2"`); integer vectors as JSON
//! integer arrays. Piece indices in files are one-based.

use std::fmt;
use std::str::FromStr;

use momentcut_core::cut::{cobound, Cocycle, CutError};
use momentcut_core::polytope::PolytopeError;
use momentcut_core::{CutData, CutDatum, HalfSpace, Int, IntVector, Polytope, Rat, RatVector};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

/// Input problem, located by a JSON path such as `cuts[0].eps`.
#[derive(Debug, Error)]
#[error("{field}: {message}")]
pub struct SpecError {
    pub field: String,
    pub message: String,
}

impl SpecError {
    pub fn new(field: impl Into<String>, message: impl fmt::Display) -> Self {
        SpecError {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

/// An exact rational written as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(JsonRat(Rat::from_integer(n.into()))),
            Raw::Str(s) => Rat::from_str(s.trim())
                .map(JsonRat)
                .map_err(|e| de::Error::custom(format_args!("invalid rational {s:?}: {e}"))),
        }
    }
}

fn int_vector(xs: &[i64]) -> IntVector {
    IntVector::from_i64s(xs)
}

fn to_i64s(v: &IntVector, field: &str) -> Result<Vec<i64>, SpecError> {
    v.entries()
        .iter()
        .map(|x| i64::try_from(x).map_err(|_| SpecError::new(field, "integer exceeds 64 bits")))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfSpaceSpec {
    pub normal: Vec<i64>,
    pub offset: JsonRat,
}

/// Either halfspaces `<normal, x> >= offset` (plus optional equations) or
/// a vertex list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfSpaceSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equations: Option<Vec<HalfSpaceSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<JsonRat>>>,
}

fn halfspaces(specs: &[HalfSpaceSpec], rank: usize, field: &str) -> Result<Vec<HalfSpace>, SpecError> {
    specs
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let at = format!("{field}[{i}]");
            if h.normal.len() != rank {
                return Err(SpecError::new(
                    format!("{at}.normal"),
                    format_args!("expected {rank} entries, found {}", h.normal.len()),
                ));
            }
            HalfSpace::new(int_vector(&h.normal), h.offset.0.clone())
                .map_err(|e| SpecError::new(format!("{at}.normal"), e))
        })
        .collect()
}

impl PolytopeSpec {
    /// The halfspace description of `p`.
    pub fn from_polytope(p: &Polytope) -> Result<Self, SpecError> {
        let spec = |h: &HalfSpace| -> Result<HalfSpaceSpec, SpecError> {
            Ok(HalfSpaceSpec {
                normal: to_i64s(h.normal(), "normal")?,
                offset: JsonRat(h.offset().clone()),
            })
        };
        let equations: Vec<HalfSpaceSpec> = p.equations().iter().map(spec).collect::<Result<_, _>>()?;
        Ok(PolytopeSpec {
            rank: Some(p.rank()),
            halfspaces: Some(p.facets().iter().map(spec).collect::<Result<_, _>>()?),
            equations: (!equations.is_empty()).then_some(equations),
            vertices: None,
        })
    }

    /// The declared or inferred rank.
    pub fn rank(&self) -> Result<usize, SpecError> {
        if let Some(r) = self.rank {
            return Ok(r);
        }
        let from_h = self
            .halfspaces
            .iter()
            .chain(&self.equations)
            .flatten()
            .map(|h| h.normal.len())
            .next();
        let from_v = self.vertices.iter().flatten().map(Vec::len).next();
        from_h
            .or(from_v)
            .ok_or_else(|| SpecError::new("polytope", "cannot infer the rank"))
    }

    pub fn to_polytope(&self, max_rank: usize) -> Result<Polytope, SpecError> {
        let rank = self.rank()?;
        if rank == 0 {
            return Err(SpecError::new("polytope.rank", "rank must be positive"));
        }
        if rank > max_rank {
            return Err(SpecError::new(
                "polytope.rank",
                format_args!("rank {rank} exceeds the limit {max_rank} (MOMENTCUT_MAX_RANK)"),
            ));
        }
        let geometry = |e: PolytopeError| SpecError::new("polytope", e);
        match (&self.halfspaces, &self.vertices) {
            (Some(hs), None) => {
                let ineqs = halfspaces(hs, rank, "polytope.halfspaces")?;
                let eqs = halfspaces(
                    self.equations.as_deref().unwrap_or_default(),
                    rank,
                    "polytope.equations",
                )?;
                Polytope::from_constraints(rank, &ineqs, &eqs).map_err(geometry)
            }
            (None, Some(vs)) => {
                if self.equations.is_some() {
                    return Err(SpecError::new(
                        "polytope.equations",
                        "equations only accompany halfspaces",
                    ));
                }
                let mut points = Vec::with_capacity(vs.len());
                for (i, v) in vs.iter().enumerate() {
                    if v.len() != rank {
                        return Err(SpecError::new(
                            format!("polytope.vertices[{i}]"),
                            format_args!("expected {rank} entries, found {}", v.len()),
                        ));
                    }
                    points.push(RatVector::new(v.iter().map(|x| x.0.clone()).collect()));
                }
                Polytope::from_vertices(&points).map_err(geometry)
            }
            _ => Err(SpecError::new(
                "polytope",
                "give exactly one of \"halfspaces\" or \"vertices\"",
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutSpec {
    pub xi: Vec<i64>,
    pub eps: JsonRat,
}

/// `(xi_ij, eps_ij)` with one-based `i`, `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleEntrySpec {
    pub i: usize,
    pub j: usize,
    pub xi: Vec<i64>,
    pub eps: JsonRat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub polytope: PolytopeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cuts: Option<Vec<CutSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<Vec<CocycleEntrySpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<JsonRat>,
}

pub fn cut_specs(cuts: &CutData) -> Result<Vec<CutSpec>, SpecError> {
    cuts.data()
        .iter()
        .map(|d| {
            Ok(CutSpec {
                xi: to_i64s(&d.xi, "xi")?,
                eps: JsonRat(d.eps.clone()),
            })
        })
        .collect()
}

fn check_len(xi: &[i64], rank: usize, field: String) -> Result<(), SpecError> {
    if xi.len() != rank {
        return Err(SpecError::new(
            field,
            format_args!("expected {rank} entries, found {}", xi.len()),
        ));
    }
    Ok(())
}

fn cut_error(field: &str, e: CutError) -> SpecError {
    let e = match e {
        CutError::IncompleteCocycle { i, j } => format!("entry ({},{}) is missing", i + 1, j + 1),
        CutError::NotAntisymmetric { i, j } => {
            format!("entries ({},{}) and ({},{}) are not opposite", i + 1, j + 1, j + 1, i + 1)
        }
        CutError::NotACocycle { i, j, k } => {
            format!("cocycle identity fails for ({},{},{})", i + 1, j + 1, k + 1)
        }
        other => other.to_string(),
    };
    SpecError::new(field, e)
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<JobSpec, SpecError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let field = if path == "." { "input".to_owned() } else { path };
            SpecError::new(field, e.into_inner())
        })
    }

    /// The cutting data from `cuts` or, failing that, from `cocycle`.
    pub fn cut_data(&self, rank: usize) -> Result<CutData, SpecError> {
        match (&self.cuts, &self.cocycle) {
            (Some(cuts), None) => {
                let mut data = Vec::with_capacity(cuts.len());
                for (i, c) in cuts.iter().enumerate() {
                    check_len(&c.xi, rank, format!("cuts[{i}].xi"))?;
                    data.push(CutDatum::new(int_vector(&c.xi), c.eps.0.clone()));
                }
                CutData::new(data).map_err(|e| cut_error("cuts", e))
            }
            (None, Some(entries)) => {
                let n = entries.iter().map(|e| e.i.max(e.j)).max().unwrap_or(0);
                let mut cocycle = Cocycle::new(n, rank);
                for (k, e) in entries.iter().enumerate() {
                    let at = format!("cocycle[{k}]");
                    if e.i == 0 || e.j == 0 {
                        return Err(SpecError::new(at, "indices are one-based"));
                    }
                    check_len(&e.xi, rank, format!("{at}.xi"))?;
                    cocycle
                        .insert(e.i - 1, e.j - 1, int_vector(&e.xi), e.eps.0.clone())
                        .map_err(|err| cut_error(&at, err))?;
                }
                cobound(&cocycle).map_err(|e| cut_error("cocycle", e))
            }
            (None, None) => Err(SpecError::new("cuts", "give \"cuts\" or \"cocycle\"")),
            (Some(_), Some(_)) => Err(SpecError::new(
                "cocycle",
                "give only one of \"cuts\" and \"cocycle\"",
            )),
        }
    }
}

/// `Int` as a JSON number when it fits, otherwise as a string.
pub fn int_json(x: &Int) -> serde_json::Value {
    i64::try_from(x).map_or_else(|_| x.to_string().into(), Into::into)
}

pub fn int_vector_json(v: &IntVector) -> serde_json::Value {
    v.entries().iter().map(int_json).collect()
}

pub fn rat_json(x: &Rat) -> serde_json::Value {
    x.to_string().into()
}

pub fn rat_vector_json(v: &RatVector) -> serde_json::Value {
    v.entries().iter().map(rat_json).collect()
}
