//! JSON input documents and serializers.
//!
//! Four document shapes are accepted, distinguished by their fields:
//! a complex (`facets`, optionally `vertex_names` / `void`), a squarefree
//! ideal (`generators` as flat 0/1 exponent vectors over x₁..x_m,y₁..y_n),
//! a general monomial ideal (`generators` as `{x, y}` exponent objects) and
//! a bihomogeneous form (`bidegree` + `terms`). Facet entries may be vertex
//! names or bare indices.

use crate::complex::{BiGround, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hypersurface::{BihomogeneousForm, FormTerm};
use crate::local_cohomology::SeriesTerm;
use crate::monomial::{MonomialGenerator, MonomialIdeal};
use crate::stanley_reisner::complex_of_squarefree_ideal;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A parsed input: whichever of the four document shapes was recognized.
#[derive(Debug, Clone)]
pub enum InputDocument {
    Complex(SimplicialComplex),
    /// A squarefree ideal document, already converted to its complex.
    SquarefreeIdeal(SimplicialComplex),
    MonomialIdeal(MonomialIdeal),
    Form(BihomogeneousForm),
}

#[derive(Debug, Deserialize)]
struct VertexNames {
    v: Vec<String>,
    w: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum VertexRef {
    Index(usize),
    Name(String),
}

#[derive(Debug, Deserialize)]
struct ComplexDoc {
    m: usize,
    n: usize,
    #[serde(default)]
    vertex_names: Option<VertexNames>,
    #[serde(default)]
    facets: Vec<Vec<VertexRef>>,
    #[serde(default)]
    void: bool,
}

#[derive(Debug, Deserialize)]
struct SquarefreeDoc {
    m: usize,
    n: usize,
    generators: Vec<Vec<u32>>,
}

#[derive(Debug, Deserialize)]
struct ExponentPair {
    x: Vec<u32>,
    y: Vec<u32>,
}

#[derive(Debug, Deserialize)]
struct MonomialDoc {
    m: usize,
    n: usize,
    generators: Vec<ExponentPair>,
}

#[derive(Debug, Deserialize)]
struct FormDoc {
    m: usize,
    n: usize,
    bidegree: (u32, u32),
    terms: Vec<ExponentPair>,
}

fn document_error(e: impl std::fmt::Display) -> Error {
    Error::Document(e.to_string())
}

fn ground_of(m: usize, n: usize, names: Option<VertexNames>) -> Result<BiGround> {
    match names {
        Some(names) => BiGround::with_names(m, n, names.v, names.w),
        None => BiGround::new(m, n),
    }
}

fn resolve_facet(ground: &BiGround, entries: &[VertexRef]) -> Result<Face> {
    let mut members = Vec::with_capacity(entries.len());
    for e in entries {
        match e {
            VertexRef::Index(i) => {
                if *i >= ground.size() {
                    return Err(Error::VertexOutOfRange {
                        index: *i,
                        size: ground.size(),
                    });
                }
                members.push(*i);
            }
            VertexRef::Name(name) => match ground.resolve_name(name) {
                Some(i) => members.push(i),
                None => {
                    return Err(Error::Document(format!("unknown vertex name {name:?}")))
                }
            },
        }
    }
    Ok(Face::from_members(members))
}

pub fn complex_from_doc(value: &Value) -> Result<SimplicialComplex> {
    let doc: ComplexDoc = serde_json::from_value(value.clone()).map_err(document_error)?;
    let ground = ground_of(doc.m, doc.n, doc.vertex_names)?;
    if doc.void {
        if !doc.facets.is_empty() {
            return Err(Error::Document(
                "a void complex cannot list facets".into(),
            ));
        }
        return Ok(SimplicialComplex::void(ground));
    }
    if doc.facets.is_empty() {
        return Err(Error::Document(
            "facet list must be non-empty unless \"void\": true is given".into(),
        ));
    }
    let facets = doc
        .facets
        .iter()
        .map(|f| resolve_facet(&ground, f))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::new(ground, facets)
}

pub fn squarefree_complex_from_doc(value: &Value) -> Result<SimplicialComplex> {
    let doc: SquarefreeDoc = serde_json::from_value(value.clone()).map_err(document_error)?;
    let ground = BiGround::new(doc.m, doc.n)?;
    let mut supports = Vec::with_capacity(doc.generators.len());
    for exps in &doc.generators {
        if exps.len() != ground.size() {
            return Err(Error::DegreeLengthMismatch {
                expected: ground.size(),
                got: exps.len(),
            });
        }
        if exps.iter().any(|&e| e > 1) {
            return Err(Error::NonSquarefree);
        }
        supports.push(Face::from_members(
            exps.iter().enumerate().filter(|(_, &e)| e == 1).map(|(i, _)| i),
        ));
    }
    complex_of_squarefree_ideal(&supports, ground)
}

pub fn monomial_ideal_from_doc(value: &Value) -> Result<MonomialIdeal> {
    let doc: MonomialDoc = serde_json::from_value(value.clone()).map_err(document_error)?;
    let ground = BiGround::new(doc.m, doc.n)?;
    MonomialIdeal::new(
        ground,
        doc.generators
            .into_iter()
            .map(|p| MonomialGenerator { x: p.x, y: p.y })
            .collect(),
    )
}

pub fn form_from_doc(value: &Value) -> Result<BihomogeneousForm> {
    let doc: FormDoc = serde_json::from_value(value.clone()).map_err(document_error)?;
    let ground = BiGround::new(doc.m, doc.n)?;
    BihomogeneousForm::new(
        ground,
        doc.bidegree,
        doc.terms
            .into_iter()
            .map(|p| FormTerm { x: p.x, y: p.y })
            .collect(),
    )
}

/// Detects the document shape from its fields and parses accordingly.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let value: Value = serde_json::from_str(text).map_err(document_error)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Document("top-level value must be an object".into()))?;
    if obj.contains_key("facets") || obj.contains_key("void") {
        return Ok(InputDocument::Complex(complex_from_doc(&value)?));
    }
    if obj.contains_key("bidegree") || obj.contains_key("terms") {
        return Ok(InputDocument::Form(form_from_doc(&value)?));
    }
    if let Some(gens) = obj.get("generators").and_then(Value::as_array) {
        let flat = gens.iter().all(Value::is_array);
        if flat {
            return Ok(InputDocument::SquarefreeIdeal(squarefree_complex_from_doc(
                &value,
            )?));
        }
        return Ok(InputDocument::MonomialIdeal(monomial_ideal_from_doc(&value)?));
    }
    Err(Error::Document(
        "unrecognized document: expected a complex, ideal or form".into(),
    ))
}

/// Complex serializer: the inverse of [`complex_from_doc`], with facets
/// written as vertex names.
pub fn complex_to_doc(complex: &SimplicialComplex) -> Value {
    let ground = complex.ground();
    let facets: Vec<Vec<String>> = if complex.is_void() {
        Vec::new()
    } else {
        complex
            .facets()
            .iter()
            .map(|f| f.members().into_iter().map(|v| ground.vertex_name(v)).collect())
            .collect()
    };
    let mut doc = serde_json::json!({
        "m": ground.m(),
        "n": ground.n(),
        "vertex_names": {
            "v": (0..ground.m()).map(|i| ground.vertex_name(i)).collect::<Vec<_>>(),
            "w": (0..ground.n()).map(|j| ground.vertex_name(ground.m() + j)).collect::<Vec<_>>(),
        },
        "facets": facets,
    });
    if complex.is_void() {
        doc["void"] = Value::Bool(true);
    }
    doc
}

/// One serialized series term: `F` and `G` as vertex-name lists.
#[derive(Debug, Serialize)]
pub struct SeriesTermDoc {
    #[serde(rename = "F")]
    pub f: Vec<String>,
    #[serde(rename = "G")]
    pub g: Vec<String>,
    pub coeff: usize,
}

/// Series output document `{ "i": …, "terms": [ … ] }`.
pub fn series_to_doc(ground: &BiGround, i: i64, terms: &[SeriesTerm]) -> Value {
    let terms: Vec<SeriesTermDoc> = terms
        .iter()
        .map(|t| SeriesTermDoc {
            f: t.f.members().into_iter().map(|v| ground.vertex_name(v)).collect(),
            g: t.g.members().into_iter().map(|v| ground.vertex_name(v)).collect(),
            coeff: t.coeff,
        })
        .collect();
    serde_json::json!({ "i": i, "terms": terms })
}
