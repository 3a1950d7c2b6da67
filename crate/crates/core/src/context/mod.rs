//! Formal contexts `(objects, attributes, incidence)` and the derivation
//! operators between object sets and attribute sets.

mod cxt;
mod json;

use std::collections::HashSet;

pub use cxt::parse_cxt;
pub use json::{parse_json_context, resolve_key, ContextDocument, MassSpec};

use crate::error::{Error, Result};
use crate::sets::{AttributeSet, ObjectSet};

/// Name given to the attribute added by [`FormalContext::normalize_no_universal_object`].
pub const FRESH_ATTRIBUTE: &str = "__none__";

/// A finite formal context. Object and attribute order is significant and
/// defines index order everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    // intent of each single object
    rows: Vec<AttributeSet>,
    // extent of each single attribute
    columns: Vec<ObjectSet>,
}

impl FormalContext {
    /// Builds a context from names and `(object, attribute)` index pairs.
    pub fn new<I>(objects: Vec<String>, attributes: Vec<String>, incidence: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_distinct("object", &objects)?;
        check_distinct("attribute", &attributes)?;
        let mut rows = vec![AttributeSet::empty(attributes.len()); objects.len()];
        let mut columns = vec![ObjectSet::empty(objects.len()); attributes.len()];
        for (g, m) in incidence {
            if g >= objects.len() || m >= attributes.len() {
                return Err(Error::Document(format!(
                    "incidence pair ({g}, {m}) out of range for {}x{} context",
                    objects.len(),
                    attributes.len()
                )));
            }
            rows[g].insert(m);
            columns[m].insert(g);
        }
        Ok(Self {
            objects,
            attributes,
            rows,
            columns,
        })
    }

    /// Convenience constructor from string slices and incidence by name.
    pub fn from_names(
        objects: &[&str],
        attributes: &[&str],
        incidence: &[(&str, &str)],
    ) -> Result<Self> {
        let objects: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let attributes: Vec<String> = attributes.iter().map(|s| s.to_string()).collect();
        let mut pairs = Vec::with_capacity(incidence.len());
        for (g, m) in incidence {
            let gi = index_of(&objects, g)
                .ok_or_else(|| Error::Document(format!("unknown object {g:?}")))?;
            let mi = index_of(&attributes, m)
                .ok_or_else(|| Error::Document(format!("unknown attribute {m:?}")))?;
            pairs.push((gi, mi));
        }
        Self::new(objects, attributes, pairs)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        index_of(&self.objects, name)
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        index_of(&self.attributes, name)
    }

    pub fn has(&self, object: usize, attribute: usize) -> bool {
        self.rows[object].contains(attribute)
    }

    /// The attributes of a single object.
    pub fn object_intent(&self, object: usize) -> &AttributeSet {
        &self.rows[object]
    }

    /// The objects having a single attribute.
    pub fn attribute_extent(&self, attribute: usize) -> &ObjectSet {
        &self.columns[attribute]
    }

    /// Incidence pairs in row-major index order.
    pub fn incidence(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(g, row)| row.iter().map(move |m| (g, m)))
    }

    pub fn all_objects(&self) -> ObjectSet {
        ObjectSet::full(self.num_objects())
    }

    pub fn all_attributes(&self) -> AttributeSet {
        AttributeSet::full(self.num_attributes())
    }

    /// Attributes shared by every object of `objects`; all attributes for ∅.
    pub fn up(&self, objects: &ObjectSet) -> AttributeSet {
        let mut intent = self.all_attributes();
        for g in objects.iter() {
            intent.intersect_with(&self.rows[g]);
        }
        intent
    }

    /// Objects having every attribute of `attributes`; all objects for ∅.
    pub fn down(&self, attributes: &AttributeSet) -> ObjectSet {
        let mut extent = self.all_objects();
        for m in attributes.iter() {
            extent.intersect_with(&self.columns[m]);
        }
        extent
    }

    /// Guarantees that no object has every attribute, by adding one fresh
    /// attribute held by no object when needed. Existing indices are kept,
    /// so the fresh attribute is always the last one.
    pub fn normalize_no_universal_object(&self) -> FormalContext {
        if self.down(&self.all_attributes()).is_empty() {
            return self.clone();
        }
        let mut name = FRESH_ATTRIBUTE.to_string();
        let mut counter = 1;
        while self.attribute_index(&name).is_some() {
            name = format!("{FRESH_ATTRIBUTE}{counter}");
            counter += 1;
        }
        let mut attributes = self.attributes.clone();
        attributes.push(name);
        FormalContext::new(
            self.objects.clone(),
            attributes,
            self.incidence().collect::<Vec<_>>(),
        )
        .expect("extending a valid context stays valid")
    }

    /// Serializes to Burmeister CXT.
    pub fn to_cxt(&self) -> String {
        cxt::write_cxt(self)
    }

    pub fn format_objects(&self, set: &ObjectSet) -> String {
        format_names(&self.objects, set.iter())
    }

    pub fn format_attributes(&self, set: &AttributeSet) -> String {
        format_names(&self.attributes, set.iter())
    }
}

fn index_of(names: &[String], name: &str) -> Option<usize> {
    names.iter().position(|n| n == name)
}

fn check_distinct(kind: &str, names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::Document(format!("duplicate {kind} name {name:?}")));
        }
    }
    Ok(())
}

fn format_names(names: &[String], indices: impl Iterator<Item = usize>) -> String {
    let parts: Vec<&str> = indices.map(|i| names[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn music() -> FormalContext {
        FormalContext::from_names(
            &["a", "b", "c"],
            &["w", "x", "y", "z"],
            &[
                ("a", "w"),
                ("a", "x"),
                ("b", "x"),
                ("b", "y"),
                ("c", "y"),
                ("c", "z"),
            ],
        )
        .unwrap()
    }

    fn objs(ctx: &FormalContext, names: &[&str]) -> ObjectSet {
        ObjectSet::from_indices(
            ctx.num_objects(),
            names.iter().map(|n| ctx.object_index(n).unwrap()),
        )
    }

    fn attrs(ctx: &FormalContext, names: &[&str]) -> AttributeSet {
        AttributeSet::from_indices(
            ctx.num_attributes(),
            names.iter().map(|n| ctx.attribute_index(n).unwrap()),
        )
    }

    #[test]
    fn up_on_music_context() {
        let ctx = music();
        assert_eq!(ctx.up(&objs(&ctx, &["a"])), attrs(&ctx, &["w", "x"]));
        assert_eq!(ctx.up(&objs(&ctx, &["a", "b"])), attrs(&ctx, &["x"]));
        assert_eq!(ctx.up(&objs(&ctx, &[])), ctx.all_attributes());
    }

    #[test]
    fn down_on_music_context() {
        let ctx = music();
        assert_eq!(ctx.down(&attrs(&ctx, &["y"])), objs(&ctx, &["b", "c"]));
        assert_eq!(ctx.down(&attrs(&ctx, &[])), ctx.all_objects());
        assert!(ctx.down(&ctx.all_attributes()).is_empty());
    }

    #[test]
    fn rejects_duplicates_and_bad_pairs() {
        let dup = FormalContext::new(vec!["a".into(), "a".into()], vec![], Vec::new());
        assert!(matches!(dup, Err(Error::Document(_))));
        let bad = FormalContext::new(vec!["a".into()], vec!["x".into()], vec![(0, 1)]);
        assert!(matches!(bad, Err(Error::Document(_))));
    }

    #[test]
    fn normalization_adds_fresh_attribute_only_when_needed() {
        let ctx = music();
        assert_eq!(ctx.normalize_no_universal_object(), ctx);

        let case3 = FormalContext::from_names(
            &["a", "b", "c"],
            &["x", "y", "z"],
            &[("a", "x"), ("b", "y"), ("c", "x"), ("c", "y"), ("c", "z")],
        )
        .unwrap();
        let normalized = case3.normalize_no_universal_object();
        assert_eq!(normalized.num_attributes(), 4);
        assert_eq!(normalized.attributes()[3], FRESH_ATTRIBUTE);
        assert!(normalized.down(&normalized.all_attributes()).is_empty());
        assert!(normalized.attribute_extent(3).is_empty());

        let empty = FormalContext::new(vec![], vec![], Vec::new()).unwrap();
        assert_eq!(empty.normalize_no_universal_object(), empty);
    }

    #[test]
    fn fresh_attribute_name_avoids_collisions() {
        let ctx = FormalContext::from_names(
            &["a"],
            &["__none__", "__none__1"],
            &[("a", "__none__"), ("a", "__none__1")],
        )
        .unwrap();
        let normalized = ctx.normalize_no_universal_object();
        assert_eq!(normalized.attributes()[2], "__none__2");
    }

    // Closure laws, checked over every subset of small random contexts.
    #[test]
    fn galois_laws_exhaustive() {
        for seed in 0..20u64 {
            let ctx = crate::oracle::random_context(seed, 5, 5, 0.5);
            let (n, k) = (ctx.num_objects(), ctx.num_attributes());
            for mask in 0u32..(1 << n) {
                let b = ObjectSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
                let up = ctx.up(&b);
                assert!(b.is_subset(&ctx.down(&up)));
                assert_eq!(ctx.up(&ctx.down(&up)), up);
                for mask2 in 0u32..(1 << n) {
                    let b2 = ObjectSet::from_indices(n, (0..n).filter(|i| mask2 >> i & 1 == 1));
                    if b.is_subset(&b2) {
                        assert!(ctx.up(&b2).is_subset(&up));
                    }
                }
            }
            for mask in 0u32..(1 << k) {
                let y = AttributeSet::from_indices(k, (0..k).filter(|i| mask >> i & 1 == 1));
                let down = ctx.down(&y);
                assert!(y.is_subset(&ctx.up(&down)));
                assert_eq!(ctx.down(&ctx.up(&down)), down);
                for mask2 in 0u32..(1 << k) {
                    let y2 = AttributeSet::from_indices(k, (0..k).filter(|i| mask2 >> i & 1 == 1));
                    if y.is_subset(&y2) {
                        assert!(ctx.down(&y2).is_subset(&down));
                    }
                }
            }
        }
    }
}
