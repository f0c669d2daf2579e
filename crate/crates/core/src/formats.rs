//! JSON wire formats: posets given by generator pairs, topological spaces
//! given by point names and open sets, and the report values the CLI emits.
//! serde_json's default map preserves sorted keys, so serialized reports are
//! byte-stable for fixed inputs.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::Poset;
use crate::powerspace::PowerSpace;
use crate::topology::{SpaceReport, TopSpace};

#[derive(Deserialize)]
struct PosetDoc {
    elements: Vec<String>,
    #[serde(default)]
    leq: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct TopSpaceDoc {
    points: Vec<String>,
    opens: Vec<Vec<String>>,
    #[serde(default)]
    generate: bool,
}

/// Parses `{"elements": [...], "leq": [["a","b"], ...]}`; `leq` lists
/// generators and the reflexive-transitive closure is taken.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let doc: PosetDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let pairs: Vec<(&str, &str)> = doc
        .leq
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    Poset::new(doc.elements, &pairs)
}

pub fn emit_poset(p: &Poset) -> Value {
    let leq: Vec<Value> = (0..p.n())
        .flat_map(|i| {
            (0..p.n())
                .filter(move |&j| i != j && p.leq(i, j))
                .map(move |j| json!([p.names()[i], p.names()[j]]))
        })
        .collect();
    json!({ "elements": p.names(), "leq": leq })
}

/// Parses `{"points": [...], "opens": [["p0","p1"], ...], "generate": bool}`.
pub fn parse_topspace(text: &str) -> Result<TopSpace> {
    let doc: TopSpaceDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let index = |name: &str| {
        doc.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    };
    let n = doc.points.len();
    let mut opens = Vec::with_capacity(doc.opens.len());
    for open in &doc.opens {
        let mut idx = Vec::with_capacity(open.len());
        for name in open {
            idx.push(index(name)?);
        }
        opens.push(PointSet::from_indices(n, idx));
    }
    TopSpace::new(doc.points, opens, doc.generate)
}

pub fn emit_topspace(space: &TopSpace) -> Value {
    let opens: Vec<Vec<String>> =
        space.opens().iter().map(|u| space.set_names(u)).collect();
    json!({ "points": space.points(), "opens": opens })
}

fn set_value(space: &TopSpace, s: &PointSet) -> Value {
    json!(space.set_names(s))
}

fn point_name(space: &TopSpace, i: usize) -> Value {
    json!(space.points()[i])
}

/// A space report with all witnesses rendered against point names.
pub fn emit_space_report(space: &TopSpace, report: &SpaceReport) -> Value {
    let sober_witness = report.sober.witness.as_ref().map(|(f, gens)| {
        json!({
            "irreducible_closed": set_value(space, f),
            "generic_points": gens.iter().map(|&i| point_name(space, i)).collect::<Vec<_>>(),
        })
    });
    let wf_witness = report.well_filtered.witness.as_ref().map(|(family, open)| {
        json!({
            "filtered_family": family.iter().map(|k| set_value(space, k)).collect::<Vec<_>>(),
            "open": set_value(space, open),
        })
    });
    let d_witness = if report.d_space.holds {
        Value::Null
    } else {
        json!({
            "t0_failure": report.d_space.t0_witness.map(|(a, b)| json!([point_name(space, a), point_name(space, b)])),
            "directed_without_sup_behavior": report.d_space.non_dcpo_witness.as_ref().map(|d| set_value(space, d)),
            "open_not_scott_open": report.d_space.non_scott_open.as_ref().map(|u| set_value(space, u)),
        })
    };
    json!({
        "points": space.points().len(),
        "opens": space.opens().len(),
        "t0": report.t0,
        "t0_witness": report.t0_witness,
        "sober": { "holds": report.sober.holds, "witness": sober_witness },
        "well_filtered": {
            "holds": report.well_filtered.holds,
            "witness": wf_witness,
            "families_checked": report.well_filtered.families_checked,
            "search_exhausted": report.well_filtered.search_exhausted,
        },
        "d_space": { "holds": report.d_space.holds, "witness": d_witness },
        "coherent": {
            "holds": report.coherent.holds,
            "witness": report.coherent.witness.as_ref().map(|(a, b)| {
                json!([set_value(space, a), set_value(space, b)])
            }),
        },
    })
}

/// The sidecar emitted alongside a power space: reverse-inclusion order and
/// the canonical map's graph.
pub fn emit_powerspace_sidecar(ps: &PowerSpace) -> Result<Value> {
    let names: Vec<String> = (0..ps.elements().len()).map(|i| ps.element_name(i)).collect();
    let mut order = Vec::new();
    for i in 0..names.len() {
        for j in 0..names.len() {
            if i != j && ps.leq(i, j) {
                order.push(json!([names[i], names[j]]));
            }
        }
    }
    let xi = ps.canonical_map()?;
    let graph: Vec<Value> = xi
        .graph
        .iter()
        .enumerate()
        .map(|(x, &k)| json!([ps.base().points()[x], names[k]]))
        .collect();
    Ok(json!({
        "elements": names,
        "order": order,
        "canonical_map": graph,
    }))
}

/// Serializes with a trailing newline; serde_json emits maps with sorted
/// keys, making the output byte-stable.
pub fn to_stable_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialization");
    s.push('\n');
    s
}
