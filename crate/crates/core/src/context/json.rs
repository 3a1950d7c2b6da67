//! JSON documents carrying a context, optional concept labels and named masses.
//!
//! ```json
//! {
//!   "objects": ["a", "b", "c"],
//!   "attributes": ["w", "x", "y", "z"],
//!   "incidence": [["a", "w"], ["a", "x"], ["b", "x"]],
//!   "labels": {"Pop": ["a", "b"]},
//!   "masses": {"m1": {"Pop": "3/5", "top": "0.4"}}
//! }
//! ```
//!
//! Mass keys are resolved against the lattice only when [`ContextDocument::resolve`]
//! is called.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use super::FormalContext;
use crate::error::{Error, Result};
use crate::evidence::MassFunction;
use crate::lattice::{ConceptId, ConceptLattice};
use crate::limits::Limits;
use crate::probspace::scalar_string;
use crate::rational::{format_exact, parse_rational, Rational};
use crate::sets::ObjectSet;

/// A named, not yet resolved mass assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct MassSpec {
    pub name: String,
    /// `(concept key, value)` in document order.
    pub entries: Vec<(String, Rational)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContextDocument {
    pub context: FormalContext,
    /// `(label, extent)` in document order.
    pub labels: Vec<(String, ObjectSet)>,
    pub masses: Vec<MassSpec>,
}

pub fn parse_json_context(text: &str) -> Result<ContextDocument> {
    let value: Value = serde_json::from_str(text)?;
    let root = value
        .as_object()
        .ok_or_else(|| Error::Document("top level must be an object".into()))?;

    let names = |key: &str| -> Result<Vec<String>> {
        root.get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Document(format!("missing array `{key}`")))?
            .iter()
            .map(scalar_string)
            .collect()
    };
    let objects = names("objects")?;
    let attributes = names("attributes")?;

    let mut pairs = Vec::new();
    let incidence = root
        .get("incidence")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Document("missing array `incidence`".into()))?;
    for pair in incidence {
        let pair = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Document(format!("incidence entry {pair} is not a pair")))?;
        let g = scalar_string(&pair[0])?;
        let m = scalar_string(&pair[1])?;
        let gi = objects
            .iter()
            .position(|o| *o == g)
            .ok_or_else(|| Error::Document(format!("unknown object {g:?}")))?;
        let mi = attributes
            .iter()
            .position(|a| *a == m)
            .ok_or_else(|| Error::Document(format!("unknown attribute {m:?}")))?;
        pairs.push((gi, mi));
    }
    let context = FormalContext::new(objects, attributes, pairs)?;

    let mut labels = Vec::new();
    if let Some(map) = optional_map(root, "labels")? {
        for (label, members) in map {
            let members = members
                .as_array()
                .ok_or_else(|| Error::Document(format!("label {label:?} must list objects")))?;
            let mut extent = ObjectSet::empty(context.num_objects());
            for g in members {
                let g = scalar_string(g)?;
                let gi = context.object_index(&g).ok_or_else(|| {
                    Error::Document(format!("label {label:?}: unknown object {g:?}"))
                })?;
                extent.insert(gi);
            }
            labels.push((label.clone(), extent));
        }
    }

    let mut masses = Vec::new();
    if let Some(map) = optional_map(root, "masses")? {
        for (name, entries) in map {
            let entries = entries
                .as_object()
                .ok_or_else(|| Error::Document(format!("mass {name:?} must be an object")))?;
            let mut parsed = Vec::new();
            let mut sum = Rational::zero();
            for (key, v) in entries {
                let v = parse_rational(&scalar_string(v)?)?;
                if v.is_negative() {
                    return Err(Error::InvalidMass(format!(
                        "mass {name:?} assigns {} to {key:?}",
                        format_exact(&v)
                    )));
                }
                sum += &v;
                parsed.push((key.clone(), v));
            }
            if !sum.is_one() {
                return Err(Error::NotNormalized {
                    name: name.clone(),
                    sum: format_exact(&sum),
                });
            }
            masses.push(MassSpec {
                name: name.clone(),
                entries: parsed,
            });
        }
    }

    Ok(ContextDocument {
        context,
        labels,
        masses,
    })
}

fn optional_map<'a>(
    root: &'a Map<String, Value>,
    key: &str,
) -> Result<Option<&'a Map<String, Value>>> {
    match root.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Object(map)) => Ok(Some(map)),
        Some(_) => Err(Error::Document(format!("`{key}` must be an object"))),
    }
}

impl ContextDocument {
    /// Enumerates the lattice and attaches the document's labels.
    pub fn build_lattice(&self) -> Result<Arc<ConceptLattice>> {
        self.build_lattice_with(&Limits::default())
    }

    pub fn build_lattice_with(&self, limits: &Limits) -> Result<Arc<ConceptLattice>> {
        let lattice = ConceptLattice::from_context_with(self.context.clone(), limits)?
            .with_labels(self.labels.iter().cloned())?;
        Ok(Arc::new(lattice))
    }

    pub fn mass_names(&self) -> Vec<&str> {
        self.masses.iter().map(|m| m.name.as_str()).collect()
    }

    /// Resolves every mass against `lattice`, in document order.
    pub fn resolve(&self, lattice: &Arc<ConceptLattice>) -> Result<Vec<MassFunction>> {
        self.masses
            .iter()
            .map(|spec| spec.resolve(lattice))
            .collect()
    }

    /// Resolves the named mass.
    pub fn resolve_named(&self, lattice: &Arc<ConceptLattice>, name: &str) -> Result<MassFunction> {
        self.masses
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| {
                Error::Document(format!(
                    "no mass named {name:?} (have: {})",
                    self.mass_names().join(", ")
                ))
            })?
            .resolve(lattice)
    }
}

impl MassSpec {
    pub fn resolve(&self, lattice: &Arc<ConceptLattice>) -> Result<MassFunction> {
        let mut seen: Vec<(ConceptId, &str)> = Vec::new();
        let mut entries = Vec::new();
        for (key, v) in &self.entries {
            let id = resolve_key(lattice, &self.name, key)?;
            if let Some((_, other)) = seen.iter().find(|(c, _)| *c == id) {
                return Err(Error::Document(format!(
                    "mass {:?}: keys {other:?} and {key:?} name the same concept",
                    self.name
                )));
            }
            seen.push((id, key));
            entries.push((id, v.clone()));
        }
        MassFunction::from_entries(lattice.clone(), entries)
    }
}

/// Finds the concept named by `key`: an attached label, `top`/`⊤`,
/// `bottom`/`⊥`, a default label `c<index>`, or an extent literal `{a,b}`.
/// `owner` names the document part being resolved, for error messages.
pub fn resolve_key(lattice: &ConceptLattice, owner: &str, key: &str) -> Result<ConceptId> {
    let mut candidates = Vec::new();
    if let Some(id) = lattice.find_label(key) {
        candidates.push(id);
    }
    match key {
        "top" | "⊤" => candidates.push(lattice.top()),
        "bottom" | "⊥" => candidates.push(lattice.bottom()),
        _ => {}
    }
    if let Some(id) = key
        .strip_prefix('c')
        .and_then(|i| i.parse::<usize>().ok())
        .filter(|&i| i < lattice.len())
        .map(ConceptId)
    {
        if lattice.explicit_label(id).is_none() && id != lattice.top() && id != lattice.bottom() {
            candidates.push(id);
        }
    }
    if let Some(inner) = key.strip_prefix('{').and_then(|k| k.strip_suffix('}')) {
        let ctx = lattice.context();
        let mut extent = ObjectSet::empty(ctx.num_objects());
        let mut known = true;
        for name in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match ctx.object_index(name) {
                Some(g) => {
                    extent.insert(g);
                }
                None => known = false,
            }
        }
        if known {
            if let Some(id) = lattice.find_by_extent(&extent) {
                candidates.push(id);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    match candidates.len() {
        0 => Err(Error::UnresolvedLabel {
            name: owner.into(),
            label: key.into(),
        }),
        1 => Ok(candidates[0]),
        _ => Err(Error::AmbiguousLabel {
            name: owner.into(),
            label: key.into(),
        }),
    }
}
