//! JSON and DOT formats.
//!
//! Map files look like
//! `{"lambda":[[1,2]],"n":2,"rho":[],"signature":[2,0,0],"tau":[[1,2]]}`:
//! cycles are 1-based with fixed points omitted and a signature entry `0`
//! stands for `∞`. Writers emit compact JSON with sorted keys and a trailing
//! newline, so reading and writing a file written here is the identity.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::blade::{BladeSystem, BoundaryReport, ComplexDouble, Passport, SurfaceType};
use crate::census::CensusRecord;
use crate::dart::DartMap;
use crate::error::{Error, Result};
use crate::normalize::{ExactInt, Normalization, Point, RationalMap};
use crate::perm::Permutation;
use crate::triangle::{SchreierData, TriangleSignature};

// Field order is alphabetical so derived output has sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub lambda: Vec<Vec<usize>>,
    pub n: usize,
    pub rho: Vec<Vec<usize>>,
    pub signature: [u32; 3],
    pub tau: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DartFile {
    pub n: usize,
    pub x: Vec<Vec<usize>>,
    pub y: Vec<Vec<usize>>,
}

impl MapFile {
    pub fn from_system(b: &BladeSystem) -> Self {
        MapFile {
            lambda: b.lambda().to_cycle_lists(),
            n: b.len(),
            rho: b.rho().to_cycle_lists(),
            signature: b.signature().codes(),
            tau: b.tau().to_cycle_lists(),
        }
    }

    pub fn to_system(&self) -> Result<BladeSystem> {
        BladeSystem::from_cycles(
            self.n,
            &self.tau,
            &self.lambda,
            &self.rho,
            TriangleSignature::from_codes(self.signature),
        )
    }
}

impl DartFile {
    pub fn from_dart(d: &DartMap) -> Self {
        DartFile {
            n: d.len(),
            x: d.x().to_cycle_lists(),
            y: d.y().to_cycle_lists(),
        }
    }

    pub fn to_dart(&self) -> Result<DartMap> {
        DartMap::from_cycles(self.n, &self.x, &self.y)
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

/// Compact JSON with a trailing newline.
pub fn to_line(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

pub fn read_map(text: &str) -> Result<BladeSystem> {
    parse_json::<MapFile>(text, "map file")?.to_system()
}

pub fn map_value(b: &BladeSystem) -> Value {
    to_value(&MapFile::from_system(b))
}

pub fn write_map(b: &BladeSystem) -> String {
    to_line(&map_value(b))
}

pub fn read_dart(text: &str) -> Result<DartMap> {
    parse_json::<DartFile>(text, "dart file")?.to_dart()
}

pub fn dart_value(d: &DartMap) -> Value {
    to_value(&DartFile::from_dart(d))
}

pub fn write_dart(d: &DartMap) -> String {
    to_line(&dart_value(d))
}

/// Either kind of input file, told apart by its keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMap {
    Blades(BladeSystem),
    Darts(DartMap),
}

pub fn read_any(text: &str) -> Result<AnyMap> {
    let v: Value = parse_json(text, "input file")?;
    if v.get("x").is_some() && v.get("tau").is_none() {
        let f: DartFile =
            serde_json::from_value(v).map_err(|e| Error::Parse(format!("dart file: {e}")))?;
        Ok(AnyMap::Darts(f.to_dart()?))
    } else {
        let f: MapFile =
            serde_json::from_value(v).map_err(|e| Error::Parse(format!("map file: {e}")))?;
        Ok(AnyMap::Blades(f.to_system()?))
    }
}

pub fn surface_value(s: &SurfaceType) -> Value {
    json!({
        "boundary": s.boundary,
        "euler": s.euler,
        "genus_or_crosscaps": s.genus_or_crosscaps,
        "orientable": s.orientable,
    })
}

pub fn passport_value(p: &Passport) -> Value {
    json!({"over0": p.over0, "over1": p.over1, "overinf": p.overinf})
}

/// Surface type fields plus `map_type` and `passport`, one flat object.
pub fn invariants_value(b: &BladeSystem) -> Result<Value> {
    let mut v = surface_value(&b.classify()?);
    let (m, n) = b.map_type();
    let obj = v.as_object_mut().expect("object");
    obj.insert("map_type".into(), json!([m, n]));
    obj.insert("passport".into(), passport_value(&b.passport()));
    Ok(v)
}

/// A map file object extended with `surface`, `passport` and `map_type`.
pub fn census_record_value(r: &CensusRecord) -> Value {
    let mut v = map_value(&r.system);
    let obj = v.as_object_mut().expect("object");
    obj.insert("map_type".into(), json!([r.map_type.0, r.map_type.1]));
    obj.insert("passport".into(), passport_value(&r.passport));
    obj.insert("surface".into(), surface_value(&r.surface));
    v
}

/// Blades are 1-based.
pub fn boundary_value(r: &BoundaryReport) -> Value {
    let pair = |p: &crate::blade::FixedPair| json!({"blade": p.blade + 1, "generator": p.generator.name()});
    json!({
        "components": r.components.iter().map(|c| c.iter().map(pair).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "count": r.count(),
        "fixed_pairs": r.fixed_pairs.iter().map(pair).collect::<Vec<_>>(),
    })
}

/// `deck` lists, for each original blade, the 1-based `[component, blade]`
/// of its two lifts; the deck involution swaps them.
pub fn deck_value(d: &ComplexDouble) -> Value {
    let lift = |(c, b): (usize, usize)| json!([c + 1, b + 1]);
    json!({
        "components": d.components.len(),
        "deck": d.lift.iter().map(|[p, m]| json!([lift(*p), lift(*m)])).collect::<Vec<_>>(),
    })
}

pub fn double_value(d: &ComplexDouble) -> Value {
    let mut v = deck_value(d);
    v["components"] = Value::Array(d.components.iter().map(map_value).collect());
    v
}

/// Basepoint 1-based; words over `a = r0`, `b = r1`, `c = r∞`.
pub fn schreier_value(s: &SchreierData) -> Value {
    let words =
        |ws: &[crate::triangle::GroupWord]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>();
    json!({
        "basepoint": s.basepoint + 1,
        "representatives": words(&s.representatives),
        "stabilizer_generators": words(&s.stabilizer_generators),
    })
}

fn points_value<I: ExactInt>(ps: &[Point<I>]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
}

/// Coefficients lowest degree first, as rational literals.
pub fn rational_map_value<I: ExactInt>(h: &RationalMap<I>) -> Value {
    let coeffs = |p: &crate::normalize::Poly<I>| {
        p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()
    };
    json!({
        "denominator": coeffs(h.denominator()),
        "numerator": coeffs(h.numerator()),
        "text": h.to_string(),
    })
}

pub fn certificate_value<I: ExactInt>(n: &Normalization<I>) -> Value {
    let c = &n.certificate;
    json!({
        "before_final": c.before_final.as_ref().map(|s| json!({
            "images": points_value(&s.images),
            "map": rational_map_value(&s.map),
            "own_critical_values": points_value(&s.own_critical_values),
        })),
        "images": points_value(&c.images),
        "inputs": points_value(&c.inputs),
        "map": rational_map_value(&n.map),
        "own_critical_values": points_value(&c.own_critical_values),
        "padded": points_value(&c.padded),
        "steps": c.steps.iter().map(|s| json!({
            "kind": s.kind.name(),
            "map": rational_map_value(&s.map),
        })).collect::<Vec<_>>(),
    })
}

pub fn error_value(e: &Error) -> Value {
    json!({"error": e.kind(), "message": e.to_string()})
}

/// Undirected blade graph: one edge per 2-cycle and a loop per fixed blade,
/// labelled by the generator. Blades are numbered from 1.
pub fn to_dot(b: &BladeSystem) -> String {
    let mut s = String::from("graph blades {\n");
    for i in 0..b.len() {
        let _ = writeln!(s, "  {};", i + 1);
    }
    for r in crate::blade::Reflection::ALL {
        let g: &Permutation = b.generator(r);
        for i in 0..b.len() {
            let j = g.apply(i);
            if i <= j {
                let _ = writeln!(s, "  {} -- {} [label=\"{}\"];", i + 1, j + 1, r.name());
            }
        }
    }
    s.push_str("}\n");
    s
}
