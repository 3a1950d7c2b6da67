//! Concept lattices of finite formal contexts.
//!
//! Concepts are enumerated by closing the family of object intents under
//! intersection; each closed intent then determines its extent. Concepts are
//! kept in a canonical order (descending extent size, then lexicographic
//! extent) and addressed by [`ConceptId`], an index into that order. Order,
//! meet and join are precomputed tables.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::limits::{ensure, Limits};
use crate::sets::{AttributeSet, ObjectSet};

/// Index of a concept in its lattice's canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConceptId(pub usize);

impl ConceptId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ConceptId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A formal concept: a closed extent together with its closed intent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Concept {
    extent: ObjectSet,
    intent: AttributeSet,
}

impl Concept {
    pub fn extent(&self) -> &ObjectSet {
        &self.extent
    }

    pub fn intent(&self) -> &AttributeSet {
        &self.intent
    }
}

#[derive(Debug, Clone)]
pub struct ConceptLattice {
    context: FormalContext,
    concepts: Vec<Concept>,
    leq: Vec<bool>,
    meet: Vec<ConceptId>,
    join: Vec<ConceptId>,
    top: ConceptId,
    bottom: ConceptId,
    by_extent: HashMap<ObjectSet, ConceptId>,
    labels: Vec<Option<String>>,
}

/// Enumerates every concept of `ctx` under the default capacity bounds.
pub fn enumerate_concepts(ctx: &FormalContext) -> Result<ConceptLattice> {
    ConceptLattice::from_context(ctx.clone())
}

impl ConceptLattice {
    pub fn from_context(context: FormalContext) -> Result<Self> {
        Self::from_context_with(context, &Limits::default())
    }

    pub fn from_context_with(context: FormalContext, limits: &Limits) -> Result<Self> {
        ensure("context objects", context.num_objects(), limits.objects)?;

        let mut seen: HashSet<AttributeSet> = HashSet::new();
        let mut intents = vec![context.all_attributes()];
        seen.insert(context.all_attributes());
        for g in 0..context.num_objects() {
            let row = context.object_intent(g);
            let snapshot = intents.len();
            for i in 0..snapshot {
                let candidate = intents[i].intersection(row);
                if seen.insert(candidate.clone()) {
                    intents.push(candidate);
                    ensure("lattice concepts", intents.len(), limits.concepts)?;
                }
            }
        }

        let mut concepts: Vec<Concept> = intents
            .into_iter()
            .map(|intent| Concept {
                extent: context.down(&intent),
                intent,
            })
            .collect();
        concepts.sort_by(|a, b| {
            b.extent
                .len()
                .cmp(&a.extent.len())
                .then_with(|| a.extent.lex_cmp(&b.extent))
        });

        let n = concepts.len();
        let by_extent: HashMap<ObjectSet, ConceptId> = concepts
            .iter()
            .enumerate()
            .map(|(i, c)| (c.extent.clone(), ConceptId(i)))
            .collect();
        let by_intent: HashMap<&AttributeSet, ConceptId> = concepts
            .iter()
            .enumerate()
            .map(|(i, c)| (&c.intent, ConceptId(i)))
            .collect();

        let mut leq = vec![false; n * n];
        let mut meet = vec![ConceptId(0); n * n];
        let mut join = vec![ConceptId(0); n * n];
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&concepts[i], &concepts[j]);
                leq[i * n + j] = a.extent.is_subset(&b.extent);
                meet[i * n + j] = by_extent[&a.extent.intersection(&b.extent)];
                join[i * n + j] = by_intent[&a.intent.intersection(&b.intent)];
            }
        }
        let top = by_extent[&context.all_objects()];
        let bottom = by_intent[&context.all_attributes()];

        Ok(Self {
            context,
            labels: vec![None; n],
            concepts,
            leq,
            meet,
            join,
            top,
            bottom,
            by_extent,
        })
    }

    /// Attaches user-facing names, each given by the extent it denotes.
    pub fn with_labels<I>(mut self, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = (String, ObjectSet)>,
    {
        for (name, extent) in labels {
            let id = self.find_by_extent(&extent).ok_or_else(|| {
                Error::Document(format!(
                    "label {name:?} names {}, which is not a concept extent",
                    self.context.format_objects(&extent)
                ))
            })?;
            if self.labels.iter().flatten().any(|l| *l == name) {
                return Err(Error::Document(format!("label {name:?} used twice")));
            }
            if let Some(previous) = &self.labels[id.0] {
                return Err(Error::Document(format!(
                    "labels {previous:?} and {name:?} name the same concept"
                )));
            }
            self.labels[id.0] = Some(name);
        }
        Ok(self)
    }

    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = ConceptId> + ExactSizeIterator {
        (0..self.concepts.len()).map(ConceptId)
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, id: ConceptId) -> &Concept {
        &self.concepts[id.0]
    }

    pub fn extent(&self, id: ConceptId) -> &ObjectSet {
        &self.concepts[id.0].extent
    }

    pub fn intent(&self, id: ConceptId) -> &AttributeSet {
        &self.concepts[id.0].intent
    }

    pub fn top(&self) -> ConceptId {
        self.top
    }

    pub fn bottom(&self) -> ConceptId {
        self.bottom
    }

    pub fn leq(&self, c: ConceptId, d: ConceptId) -> bool {
        self.leq[c.0 * self.len() + d.0]
    }

    pub fn lt(&self, c: ConceptId, d: ConceptId) -> bool {
        c != d && self.leq(c, d)
    }

    pub fn meet(&self, c: ConceptId, d: ConceptId) -> ConceptId {
        self.meet[c.0 * self.len() + d.0]
    }

    pub fn join(&self, c: ConceptId, d: ConceptId) -> ConceptId {
        self.join[c.0 * self.len() + d.0]
    }

    /// True when the meet of `c` and `d` has a nonempty extent.
    pub fn meets_nonempty(&self, c: ConceptId, d: ConceptId) -> bool {
        !self.extent(self.meet(c, d)).is_empty()
    }

    pub fn find_by_extent(&self, extent: &ObjectSet) -> Option<ConceptId> {
        self.by_extent.get(extent).copied()
    }

    pub fn find_by_intent(&self, intent: &AttributeSet) -> Option<ConceptId> {
        self.find_by_extent(&self.context.down(intent))
            .filter(|&id| self.intent(id) == intent)
    }

    pub fn find_label(&self, name: &str) -> Option<ConceptId> {
        self.labels
            .iter()
            .position(|l| l.as_deref() == Some(name))
            .map(ConceptId)
    }

    pub fn explicit_label(&self, id: ConceptId) -> Option<&str> {
        self.labels[id.0].as_deref()
    }

    /// The attached label, or `top` / `bottom` / `c<index>`.
    pub fn label(&self, id: ConceptId) -> String {
        match self.explicit_label(id) {
            Some(l) => l.to_string(),
            None if id == self.top => "top".into(),
            None if id == self.bottom => "bottom".into(),
            None => format!("c{}", id.0),
        }
    }

    /// `({objects},{attributes})`
    pub fn describe(&self, id: ConceptId) -> String {
        format!(
            "({},{})",
            self.context.format_objects(self.extent(id)),
            self.context.format_attributes(self.intent(id))
        )
    }

    /// Cover pairs `(lower, upper)`, sorted by index.
    pub fn covers(&self) -> Vec<(ConceptId, ConceptId)> {
        let mut edges = Vec::new();
        for c in self.ids() {
            for d in self.ids() {
                if self.lt(c, d) && !self.ids().any(|e| self.lt(c, e) && self.lt(e, d)) {
                    edges.push((c, d));
                }
            }
        }
        edges
    }

    /// Whether two lattices are interchangeable for mass functions.
    pub fn same_structure(&self, other: &ConceptLattice) -> bool {
        std::ptr::eq(self, other) || self.context == other.context
    }

    /// Re-enumerates over a context in which no object has every attribute.
    ///
    /// Returns the new lattice and, for each old concept, the new concept with
    /// the same extent. When the context already satisfies the condition the
    /// map is the identity.
    pub fn without_universal_object(&self) -> Result<(ConceptLattice, Vec<ConceptId>)> {
        let context = self.context.normalize_no_universal_object();
        let labels: Vec<(String, ObjectSet)> = self
            .ids()
            .filter_map(|id| {
                self.explicit_label(id)
                    .map(|l| (l.to_string(), self.extent(id).clone()))
            })
            .collect();
        let limits = Limits {
            objects: usize::MAX,
            concepts: usize::MAX,
            ..Limits::default()
        };
        let lattice = ConceptLattice::from_context_with(context, &limits)?.with_labels(labels)?;
        let map = self
            .ids()
            .map(|id| {
                lattice
                    .find_by_extent(self.extent(id))
                    .expect("closed extents stay closed under a fresh empty attribute")
            })
            .collect();
        Ok((lattice, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::tests::music;

    fn music_lattice() -> ConceptLattice {
        ConceptLattice::from_context(music()).unwrap()
    }

    fn by_objects(lat: &ConceptLattice, names: &[&str]) -> ConceptId {
        let ctx = lat.context();
        let ext = ObjectSet::from_indices(
            ctx.num_objects(),
            names.iter().map(|n| ctx.object_index(n).unwrap()),
        );
        lat.find_by_extent(&ext).unwrap()
    }

    #[test]
    fn music_lattice_has_seven_concepts_in_canonical_order() {
        let lat = music_lattice();
        let described: Vec<String> = lat.ids().map(|id| lat.describe(id)).collect();
        assert_eq!(
            described,
            [
                "({a,b,c},{})",
                "({a,b},{x})",
                "({b,c},{y})",
                "({a},{w,x})",
                "({b},{x,y})",
                "({c},{y,z})",
                "({},{w,x,y,z})",
            ]
        );
        assert_eq!(lat.top(), ConceptId(0));
        assert_eq!(lat.bottom(), ConceptId(6));
    }

    #[test]
    fn music_meets_and_joins() {
        let lat = music_lattice();
        let pop = by_objects(&lat, &["a", "b"]);
        let rnb = by_objects(&lat, &["b", "c"]);
        let epop = by_objects(&lat, &["a"]);
        let pop_rnb = by_objects(&lat, &["b"]);
        assert_eq!(lat.meet(pop, rnb), pop_rnb);
        assert_eq!(lat.join(epop, pop_rnb), pop);
        assert!(lat.leq(pop_rnb, pop));
        assert!(!lat.leq(pop, rnb));
        for c in lat.ids() {
            assert_eq!(lat.meet(c, lat.top()), c);
            assert_eq!(lat.join(c, lat.bottom()), c);
            assert!(lat.leq(lat.bottom(), c));
        }
    }

    #[test]
    fn movie_contexts() {
        let case1 = FormalContext::from_names(
            &["a", "b", "c"],
            &["x", "y", "z"],
            &[("a", "x"), ("b", "y"), ("c", "z")],
        )
        .unwrap();
        let lat = ConceptLattice::from_context(case1).unwrap();
        assert_eq!(lat.len(), 5);
        let c1 = by_objects(&lat, &["a"]);
        let c3 = by_objects(&lat, &["b"]);
        assert_eq!(lat.join(c1, c3), lat.top());
        assert!(lat.extent(lat.bottom()).is_empty());

        let case3 = FormalContext::from_names(
            &["a", "b", "c"],
            &["x", "y", "z"],
            &[("a", "x"), ("b", "y"), ("c", "x"), ("c", "y"), ("c", "z")],
        )
        .unwrap();
        let lat = ConceptLattice::from_context(case3).unwrap();
        assert_eq!(lat.len(), 4);
        let c1 = by_objects(&lat, &["a", "c"]);
        let c3 = by_objects(&lat, &["b", "c"]);
        assert_eq!(lat.meet(c1, c3), lat.bottom());
        assert_eq!(
            lat.context().format_objects(lat.extent(lat.bottom())),
            "{c}"
        );
    }

    #[test]
    fn empty_incidence_gives_two_concepts() {
        for n in 1..5 {
            let objects = (0..n).map(|i| format!("g{i}")).collect();
            let ctx =
                FormalContext::new(objects, vec!["m".into(), "k".into()], Vec::new()).unwrap();
            let lat = ConceptLattice::from_context(ctx).unwrap();
            assert_eq!(lat.len(), 2);
            assert_eq!(lat.extent(lat.top()).len(), n);
            assert!(lat.extent(lat.bottom()).is_empty());
        }
    }

    #[test]
    fn degenerate_contexts() {
        let empty = FormalContext::new(vec![], vec![], Vec::new()).unwrap();
        let lat = ConceptLattice::from_context(empty).unwrap();
        assert_eq!(lat.len(), 1);
        assert_eq!(lat.top(), lat.bottom());
    }

    #[test]
    fn object_capacity_is_enforced() {
        let objects = (0..25).map(|i| format!("g{i}")).collect();
        let ctx = FormalContext::new(objects, vec![], Vec::new()).unwrap();
        assert!(matches!(
            ConceptLattice::from_context(ctx),
            Err(Error::Capacity {
                limit: 24,
                actual: 25,
                ..
            })
        ));
    }

    #[test]
    fn covers_of_music_lattice() {
        let lat = music_lattice();
        // ⊤ covers Pop, R&B; Pop covers E-Pop, Pop-R&B; R&B covers Pop-R&B, Funk;
        // E-Pop, Pop-R&B, Funk cover ⊥.
        assert_eq!(lat.covers().len(), 9);
    }

    #[test]
    fn labels_attach_by_extent() {
        let ctx = music();
        let ab = ObjectSet::from_indices(3, [0, 1]);
        let lat = ConceptLattice::from_context(ctx.clone())
            .unwrap()
            .with_labels([("Pop".to_string(), ab)])
            .unwrap();
        assert_eq!(lat.find_label("Pop"), Some(ConceptId(1)));
        assert_eq!(lat.label(ConceptId(1)), "Pop");
        assert_eq!(lat.label(ConceptId(0)), "top");
        assert_eq!(lat.label(ConceptId(6)), "bottom");
        assert_eq!(lat.label(ConceptId(2)), "c2");

        let not_closed = ObjectSet::from_indices(3, [0, 2]);
        assert!(ConceptLattice::from_context(ctx)
            .unwrap()
            .with_labels([("Odd".to_string(), not_closed)])
            .is_err());
    }

    #[test]
    fn normalization_maps_concepts_by_extent() {
        let case3 = FormalContext::from_names(
            &["a", "b", "c"],
            &["x", "y", "z"],
            &[("a", "x"), ("b", "y"), ("c", "x"), ("c", "y"), ("c", "z")],
        )
        .unwrap();
        let lat = ConceptLattice::from_context(case3).unwrap();
        let (normalized, map) = lat.without_universal_object().unwrap();
        assert_eq!(normalized.len(), 5);
        assert!(normalized.extent(normalized.bottom()).is_empty());
        assert_ne!(map[lat.bottom().0], normalized.bottom());
        for id in lat.ids() {
            assert_eq!(lat.extent(id), normalized.extent(map[id.0]));
        }
    }

    #[test]
    fn lattice_laws_on_random_contexts() {
        for seed in 0..30 {
            let ctx = crate::oracle::random_context(seed, 5, 4, 0.45);
            let lat = ConceptLattice::from_context(ctx).unwrap();
            for c in lat.ids() {
                for d in lat.ids() {
                    let m = lat.meet(c, d);
                    let j = lat.join(c, d);
                    assert_eq!(lat.leq(c, d), m == c);
                    assert_eq!(lat.leq(c, d), j == d);
                    assert_eq!(lat.leq(c, d), lat.intent(d).is_subset(lat.intent(c)));
                    assert_eq!(lat.extent(m), &lat.extent(c).intersection(lat.extent(d)));
                    assert_eq!(lat.intent(j), &lat.intent(c).intersection(lat.intent(d)));
                    assert_eq!(m, lat.meet(d, c));
                    assert_eq!(j, lat.join(d, c));
                    assert_eq!(lat.meet(c, j), c);
                    assert_eq!(lat.join(c, m), c);
                    for e in lat.ids() {
                        assert_eq!(lat.meet(lat.meet(c, d), e), lat.meet(c, lat.meet(d, e)));
                        assert_eq!(lat.join(lat.join(c, d), e), lat.join(c, lat.join(d, e)));
                    }
                }
                assert_eq!(lat.meet(c, c), c);
                assert_eq!(lat.join(c, c), c);
                let concept = lat.concept(c);
                assert_eq!(&lat.context().up(concept.extent()), concept.intent());
                assert_eq!(&lat.context().down(concept.intent()), concept.extent());
            }
        }
    }
}
