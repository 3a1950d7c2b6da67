//! Belief and plausibility as inner and outer measures.
//!
//! Three explicit constructions of a probability space whose inner measure is
//! a given belief function and whose outer measure is the matching
//! plausibility:
//!
//! * [`represent_set`] for mass functions on a powerset, with carrier
//!   `S′ = {(X,u) | u ∈ X}`, atoms `X* = {(X,u) | u ∈ X}` of measure `m(X)`,
//!   and `h(X) = {(Y,u) ∈ S′ | u ∈ X}`;
//! * [`represent_concepts`], the algebraic construction on a concept
//!   lattice: atoms `d*` of the product `∏_a L` with `d*(a) = d` if `a = d`
//!   and `⊥` otherwise, and the embedding `h(c)(a) = c ∧ a`;
//! * [`represent_concepts_frame`], which builds the derived context with
//!   objects `(c,a)` for `a ∈ extent(c)`, attributes `(c,x)`, and
//!   `(c,a) I′ (d,x)` iff `c ≠ d` or `a I x`.
//!
//! The concept constructions need a bottom concept with empty extent.
//! [`normalize_mass`] re-homes a mass on a lattice that satisfies this, and
//! [`verify_representation`] applies it automatically.

use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::evidence::powerset::{bel_set, format_subset, pl_set, SetMass, Subset};
use crate::evidence::{bel, pl, MassFunction};
use crate::lattice::{ConceptId, ConceptLattice};
use crate::limits::{ensure, Limits};
use crate::probspace::{ConceptualProbabilitySpace, ProbabilitySpace};
use crate::rational::Rational;
use crate::sets::{CarrierSet, ObjectSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Algebraic,
    Frame,
    Set,
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Construction::Algebraic => "algebraic",
            Construction::Frame => "frame",
            Construction::Set => "set",
        })
    }
}

/// One element of the source: its belief and plausibility next to the inner
/// and outer measure of its image.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRow {
    pub label: String,
    pub bel: Rational,
    pub inner: Rational,
    pub pl: Rational,
    pub outer: Rational,
}

impl VerificationRow {
    pub fn passed(&self) -> bool {
        self.bel == self.inner && self.pl == self.outer
    }
}

/// A structural property of a construction, with a witness on failure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructuralCheck {
    pub name: &'static str,
    pub witness: Option<String>,
}

impl StructuralCheck {
    fn new(name: &'static str, witness: Option<String>) -> Self {
        Self { name, witness }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub construction: Construction,
    /// Whether a fresh attribute had to be added to empty the bottom extent.
    pub normalized: bool,
    pub rows: Vec<VerificationRow>,
    pub checks: Vec<StructuralCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(VerificationRow::passed)
            && self.checks.iter().all(StructuralCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

// ---------------------------------------------------------------------------
// powersets

/// The probability space over `S′` representing a set-level mass.
#[derive(Debug, Clone)]
pub struct SetRepresentation {
    mass: SetMass,
    points: Vec<(Subset, usize)>,
    /// Block index of `X*`, by mask; `None` for `∅`.
    block_of: Vec<Option<usize>>,
    space: ProbabilitySpace,
}

pub fn represent_set(m: &SetMass) -> Result<SetRepresentation> {
    represent_set_with(m, &Limits::default())
}

pub fn represent_set_with(m: &SetMass, limits: &Limits) -> Result<SetRepresentation> {
    let n = m.size();
    ensure("set representation carrier", n, limits.represent_set)?;
    let full = m.full();
    let points: Vec<(Subset, usize)> = (1..=full)
        .flat_map(|x| (0..n).filter(move |u| x >> u & 1 == 1).map(move |u| (x, u)))
        .collect();
    let mut block_of = vec![None; full as usize + 1];
    let mut blocks = Vec::new();
    let mut measure = Vec::new();
    for x in 1..=full {
        block_of[x as usize] = Some(blocks.len());
        blocks.push(CarrierSet::from_indices(
            points.len(),
            (0..points.len()).filter(|&p| points[p].0 == x),
        ));
        measure.push(m.value(x).clone());
    }
    let names = points
        .iter()
        .map(|&(x, u)| format!("({},{u})", format_subset(x)))
        .collect();
    let space = ProbabilitySpace::new(names, blocks, measure)?;
    Ok(SetRepresentation {
        mass: m.clone(),
        points,
        block_of,
        space,
    })
}

impl SetRepresentation {
    pub fn mass(&self) -> &SetMass {
        &self.mass
    }

    /// `S′` in construction order.
    pub fn points(&self) -> &[(Subset, usize)] {
        &self.points
    }

    pub fn space(&self) -> &ProbabilitySpace {
        &self.space
    }

    /// The atom `X*`; empty for `X = ∅`.
    pub fn atom(&self, x: Subset) -> CarrierSet {
        match self.block_of[x as usize] {
            Some(b) => self.space.blocks()[b].clone(),
            None => CarrierSet::empty(self.points.len()),
        }
    }

    /// `h(X) = {(Y,u) ∈ S′ | u ∈ X}`
    pub fn embed(&self, x: Subset) -> CarrierSet {
        CarrierSet::from_indices(
            self.points.len(),
            (0..self.points.len()).filter(|&p| x >> self.points[p].1 & 1 == 1),
        )
    }

    /// `h` is injective, preserves `∩`, `∪` and complement, and maps `∅`, `S`
    /// to `∅`, `S′`.
    pub fn check_homomorphism(&self) -> StructuralCheck {
        let full = self.mass.full();
        let carrier = self.points.len();
        let images: Vec<CarrierSet> = (0..=full).map(|x| self.embed(x)).collect();
        let witness = (|| {
            if !images[0].is_empty() {
                return Some("h(∅) ≠ ∅".to_string());
            }
            if images[full as usize] != CarrierSet::full(carrier) {
                return Some("h(S) ≠ S′".to_string());
            }
            for x in 0..=full {
                let hx = &images[x as usize];
                if images[(full & !x) as usize] != hx.complement() {
                    return Some(format!("complement fails at {}", format_subset(x)));
                }
                for y in 0..=full {
                    let hy = &images[y as usize];
                    let (sx, sy) = (format_subset(x), format_subset(y));
                    if x != y && hx == hy {
                        return Some(format!("h({sx}) = h({sy})"));
                    }
                    if images[(x & y) as usize] != hx.intersection(hy) {
                        return Some(format!("intersection fails at {sx}, {sy}"));
                    }
                    if images[(x | y) as usize] != hx.union(hy) {
                        return Some(format!("union fails at {sx}, {sy}"));
                    }
                }
            }
            None
        })();
        StructuralCheck::new("h is an injective Boolean homomorphism", witness)
    }

    /// Distinct atoms are disjoint and every atom has measure `m(X)`.
    pub fn check_atoms(&self) -> StructuralCheck {
        let full = self.mass.full();
        let witness = (|| {
            for x in 1..=full {
                let b = self.block_of[x as usize]?;
                if self.space.block_measure(b) != self.mass.value(x) {
                    return Some(format!(
                        "μ({}*) ≠ m({})",
                        format_subset(x),
                        format_subset(x)
                    ));
                }
                for y in x + 1..=full {
                    if !self.atom(x).is_disjoint(&self.atom(y)) {
                        return Some(format!("{}* meets {}*", format_subset(x), format_subset(y)));
                    }
                }
            }
            None
        })();
        StructuralCheck::new("atoms are disjoint with μ(X*) = m(X)", witness)
    }

    /// Compares `bel(X)` with `μ_*(h(X))` and `pl(X)` with `μ^*(h(X))` for every `X ⊆ S`.
    pub fn verify(&self) -> VerificationReport {
        let rows = (0..=self.mass.full())
            .map(|x| {
                let image = self.embed(x);
                VerificationRow {
                    label: format_subset(x),
                    bel: bel_set(&self.mass, x),
                    inner: self.space.inner_measure(&image),
                    pl: pl_set(&self.mass, x),
                    outer: self.space.outer_measure(&image),
                }
            })
            .collect();
        VerificationReport {
            construction: Construction::Set,
            normalized: false,
            rows,
            checks: vec![self.check_homomorphism(), self.check_atoms()],
        }
    }
}

// ---------------------------------------------------------------------------
// concept lattices

/// Re-homes `m` on a lattice whose bottom has an empty extent.
///
/// Returns the new mass, the map from old to new concepts (same extent), and
/// whether anything changed. The old bottom keeps its mass as an ordinary
/// concept; the new bottom gets none.
pub fn normalize_mass(m: &MassFunction) -> Result<(MassFunction, Vec<ConceptId>, bool)> {
    let lattice = m.lattice();
    if lattice.extent(lattice.bottom()).is_empty() {
        return Ok((m.clone(), lattice.ids().collect(), false));
    }
    let (normalized, map) = lattice.without_universal_object()?;
    let moved = m.transport(Arc::new(normalized), &map)?;
    Ok((moved, map, true))
}

fn require_empty_bottom(lattice: &ConceptLattice) -> Result<()> {
    let bottom = lattice.bottom();
    if lattice.extent(bottom).is_empty() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "bottom concept has extent {}; normalize first",
            lattice.context().format_objects(lattice.extent(bottom))
        )))
    }
}

/// The algebraic representation. Only the atoms and the images `h(c)` are
/// materialized, never the product lattice.
#[derive(Debug, Clone)]
pub struct ConceptRepresentation {
    mass: MassFunction,
    space: ConceptualProbabilitySpace,
}

pub fn represent_concepts(m: &MassFunction) -> Result<ConceptRepresentation> {
    represent_concepts_with(m, &Limits::default())
}

pub fn represent_concepts_with(m: &MassFunction, limits: &Limits) -> Result<ConceptRepresentation> {
    let lattice = m.lattice();
    require_empty_bottom(lattice)?;
    ensure(
        "algebraic representation concepts",
        lattice.len(),
        limits.represent_concepts,
    )?;
    Ok(ConceptRepresentation {
        mass: m.clone(),
        space: ConceptualProbabilitySpace {
            atoms: lattice.ids().collect(),
            measure: m.values().to_vec(),
        },
    })
}

impl ConceptRepresentation {
    pub fn mass(&self) -> &MassFunction {
        &self.mass
    }

    pub fn lattice(&self) -> &Arc<ConceptLattice> {
        self.mass.lattice()
    }

    pub fn space(&self) -> &ConceptualProbabilitySpace {
        &self.space
    }

    /// Coordinates of `d*`.
    pub fn atom(&self, d: ConceptId) -> Vec<ConceptId> {
        let lat = self.lattice();
        lat.ids()
            .map(|a| if a == d { d } else { lat.bottom() })
            .collect()
    }

    /// Coordinates of `h(c)`.
    pub fn embed(&self, c: ConceptId) -> Vec<ConceptId> {
        let lat = self.lattice();
        lat.ids().map(|a| lat.meet(c, a)).collect()
    }

    /// Order of the product lattice.
    pub fn product_leq(&self, x: &[ConceptId], y: &[ConceptId]) -> bool {
        let lat = self.lattice();
        x.iter().zip(y).all(|(&a, &b)| lat.leq(a, b))
    }

    /// `μ_*(h(c)) = Σ { m(d) | d* ≤ h(c) }`
    pub fn inner_measure(&self, c: ConceptId) -> Rational {
        let image = self.embed(c);
        self.mass
            .support()
            .filter(|&(d, _)| self.product_leq(&self.atom(d), &image))
            .map(|(_, v)| v)
            .sum()
    }

    /// `μ^*(h(c)) = Σ { m(d) | d ∧ c ≠ ⊥ }`
    pub fn outer_measure(&self, c: ConceptId) -> Rational {
        let lat = self.lattice();
        self.mass
            .support()
            .filter(|&(d, _)| lat.meet(d, c) != lat.bottom())
            .map(|(_, v)| v)
            .sum()
    }

    /// `h(c ∧ d)(a) = h(c)(a) ∧ h(d)(a)` on every coordinate.
    pub fn check_meet_preserving(&self) -> StructuralCheck {
        let lat = self.lattice();
        let images: Vec<Vec<ConceptId>> = lat.ids().map(|c| self.embed(c)).collect();
        let witness = (|| {
            for c in lat.ids() {
                for d in lat.ids() {
                    let meet = &images[lat.meet(c, d).index()];
                    for a in lat.ids() {
                        let i = a.index();
                        if meet[i] != lat.meet(images[c.index()][i], images[d.index()][i]) {
                            return Some(format!(
                                "h({} ∧ {}) differs at coordinate {}",
                                lat.label(c),
                                lat.label(d),
                                lat.label(a)
                            ));
                        }
                    }
                }
            }
            None
        })();
        StructuralCheck::new("h is meet-preserving", witness)
    }

    /// `h` is injective.
    pub fn check_injective(&self) -> StructuralCheck {
        let lat = self.lattice();
        let images: Vec<Vec<ConceptId>> = lat.ids().map(|c| self.embed(c)).collect();
        let witness = lat.ids().find_map(|c| {
            lat.ids()
                .filter(|&d| d > c && images[c.index()] == images[d.index()])
                .map(|d| format!("h({}) = h({})", lat.label(c), lat.label(d)))
                .next()
        });
        StructuralCheck::new("h is injective", witness)
    }

    /// `d* ≤ h(c)` iff `d ≤ c`, for all pairs.
    pub fn check_atom_criterion(&self) -> StructuralCheck {
        let lat = self.lattice();
        let witness = lat.ids().find_map(|c| {
            let image = self.embed(c);
            lat.ids()
                .find(|&d| self.product_leq(&self.atom(d), &image) != lat.leq(d, c))
                .map(|d| {
                    format!(
                        "{}* ≤ h({}) disagrees with the lattice order",
                        lat.label(d),
                        lat.label(c)
                    )
                })
        });
        StructuralCheck::new("d* ≤ h(c) iff d ≤ c", witness)
    }

    /// `d ∧ c ≠ ⊥` iff `extent(d ∧ c) ≠ ∅`, so the outer measure counts the
    /// same concepts as plausibility.
    pub fn check_outer_criterion(&self) -> StructuralCheck {
        let lat = self.lattice();
        let witness = lat.ids().find_map(|c| {
            lat.ids()
                .find(|&d| (lat.meet(d, c) != lat.bottom()) != lat.meets_nonempty(d, c))
                .map(|d| format!("{} ∧ {}", lat.label(d), lat.label(c)))
        });
        StructuralCheck::new("d ∧ c ≠ ⊥ iff extent(d ∧ c) ≠ ∅", witness)
    }

    fn check_measure(&self) -> StructuralCheck {
        let total = self.space.total();
        let witness = (!total.is_one()).then(|| format!("total measure {total}"));
        StructuralCheck::new("μ is a probability measure", witness)
    }

    fn checks(&self) -> Vec<StructuralCheck> {
        vec![
            self.check_measure(),
            self.check_injective(),
            self.check_meet_preserving(),
            self.check_atom_criterion(),
            self.check_outer_criterion(),
        ]
    }
}

/// The frame-theoretic representation, built over an explicit derived context.
#[derive(Debug, Clone)]
pub struct FrameRepresentation {
    mass: MassFunction,
    derived: FormalContext,
    /// Object `i` of the derived context is `(c, a)`.
    pairs: Vec<(ConceptId, usize)>,
    /// Blocks are the nonempty atom extents.
    space: ProbabilitySpace,
    atoms: Vec<ObjectSet>,
    checks: Vec<StructuralCheck>,
}

pub fn represent_concepts_frame(m: &MassFunction) -> Result<FrameRepresentation> {
    represent_concepts_frame_with(m, &Limits::default())
}

pub fn represent_concepts_frame_with(
    m: &MassFunction,
    limits: &Limits,
) -> Result<FrameRepresentation> {
    let lat = m.lattice();
    let ctx = lat.context();
    if !ctx.down(&ctx.all_attributes()).is_empty() {
        return Err(Error::Precondition(
            "some object has every attribute; normalize first".into(),
        ));
    }
    ensure(
        "frame construction concepts",
        lat.len(),
        limits.frame_concepts,
    )?;
    let pairs: Vec<(ConceptId, usize)> = lat
        .ids()
        .flat_map(|c| lat.extent(c).iter().map(move |a| (c, a)))
        .collect();
    ensure(
        "frame construction objects",
        pairs.len(),
        limits.frame_objects,
    )?;

    let k = ctx.num_attributes();
    let objects: Vec<String> = pairs
        .iter()
        .map(|&(c, a)| format!("({c},{})", ctx.objects()[a]))
        .collect();
    let attributes: Vec<String> = lat
        .ids()
        .flat_map(|c| ctx.attributes().iter().map(move |x| format!("({c},{x})")))
        .collect();
    let mut incidence = Vec::new();
    for (i, &(c, a)) in pairs.iter().enumerate() {
        for d in lat.ids() {
            for x in 0..k {
                if c != d || ctx.has(a, x) {
                    incidence.push((i, d.index() * k + x));
                }
            }
        }
    }
    let derived = FormalContext::new(objects, attributes, incidence)?;

    let n = pairs.len();
    let atoms: Vec<ObjectSet> = lat
        .ids()
        .map(|d| ObjectSet::from_indices(n, (0..n).filter(|&i| pairs[i].0 == d)))
        .collect();
    let nonempty: Vec<ConceptId> = lat.ids().filter(|d| !atoms[d.index()].is_empty()).collect();
    let space = ProbabilitySpace::new(
        derived.objects().to_vec(),
        nonempty.iter().map(|d| atoms[d.index()].retag()).collect(),
        nonempty.iter().map(|&d| m.value(d).clone()).collect(),
    )?;

    let mut rep = FrameRepresentation {
        mass: m.clone(),
        derived,
        pairs,
        space,
        atoms,
        checks: Vec::new(),
    };
    rep.checks = rep.run_checks(&nonempty);
    Ok(rep)
}

impl FrameRepresentation {
    pub fn mass(&self) -> &MassFunction {
        &self.mass
    }

    pub fn derived_context(&self) -> &FormalContext {
        &self.derived
    }

    pub fn pairs(&self) -> &[(ConceptId, usize)] {
        &self.pairs
    }

    pub fn space(&self) -> &ProbabilitySpace {
        &self.space
    }

    /// Extent of the atom for `d`: `{(d,a) | a ∈ extent(d)}`.
    pub fn atom(&self, d: ConceptId) -> &ObjectSet {
        &self.atoms[d.index()]
    }

    /// Extent of `h(c)`: `{(d,a) ∈ A′ | a ∈ extent(c)}`.
    pub fn embed(&self, c: ConceptId) -> ObjectSet {
        let extent = self.mass.lattice().extent(c);
        ObjectSet::from_indices(
            self.pairs.len(),
            (0..self.pairs.len()).filter(|&i| extent.contains(self.pairs[i].1)),
        )
    }

    pub fn is_closed(&self, extent: &ObjectSet) -> bool {
        self.derived.down(&self.derived.up(extent)) == *extent
    }

    pub fn inner_measure(&self, c: ConceptId) -> Rational {
        self.space.inner_measure(&self.embed(c).retag())
    }

    pub fn outer_measure(&self, c: ConceptId) -> Rational {
        self.space.outer_measure(&self.embed(c).retag())
    }

    pub fn checks(&self) -> &[StructuralCheck] {
        &self.checks
    }

    fn run_checks(&self, nonempty: &[ConceptId]) -> Vec<StructuralCheck> {
        let lat = self.mass.lattice().clone();
        let n = self.pairs.len();

        let atoms_closed = lat
            .ids()
            .find(|&d| !self.is_closed(self.atom(d)))
            .map(|d| format!("atom of {} is not closed", lat.label(d)));

        let unions_closed = (0u32..1 << nonempty.len()).find_map(|mask| {
            let union = (0..nonempty.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(ObjectSet::empty(n), |acc, i| {
                    acc.union(self.atom(nonempty[i]))
                });
            (!self.is_closed(&union)).then(|| {
                let names: Vec<String> = (0..nonempty.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| lat.label(nonempty[i]))
                    .collect();
                format!("union of atoms [{}] is not closed", names.join(", "))
            })
        });

        let images: Vec<ObjectSet> = lat.ids().map(|c| self.embed(c)).collect();
        let lands = lat
            .ids()
            .find(|&c| !self.is_closed(&images[c.index()]))
            .map(|c| format!("h({}) is not an extent", lat.label(c)));
        let injective = lat.ids().find_map(|c| {
            lat.ids()
                .find(|&d| d > c && images[c.index()] == images[d.index()])
                .map(|d| format!("h({}) = h({})", lat.label(c), lat.label(d)))
        });
        let meets = lat.ids().find_map(|c| {
            lat.ids()
                .find(|&d| {
                    images[lat.meet(c, d).index()]
                        != images[c.index()].intersection(&images[d.index()])
                })
                .map(|d| {
                    format!(
                        "h({} ∧ {}) ≠ h({}) ∩ h({})",
                        lat.label(c),
                        lat.label(d),
                        lat.label(c),
                        lat.label(d)
                    )
                })
        });

        vec![
            StructuralCheck::new("atom extents are closed", atoms_closed),
            StructuralCheck::new("unions of atom extents are closed", unions_closed),
            StructuralCheck::new("h lands in concepts of the derived context", lands),
            StructuralCheck::new("h is injective", injective),
            StructuralCheck::new("h is meet-preserving", meets),
        ]
    }
}

/// Builds the requested construction (normalizing first if needed) and
/// compares belief and plausibility with the inner and outer measures for
/// every concept of the original lattice.
pub fn verify_representation(
    m: &MassFunction,
    construction: Construction,
) -> Result<VerificationReport> {
    verify_representation_with(m, construction, &Limits::default())
}

pub fn verify_representation_with(
    m: &MassFunction,
    construction: Construction,
    limits: &Limits,
) -> Result<VerificationReport> {
    let (normalized, map, changed) = normalize_mass(m)?;
    type Measures = Box<dyn Fn(ConceptId) -> (Rational, Rational)>;
    let (measures, checks): (Measures, Vec<StructuralCheck>) = match construction {
        Construction::Algebraic => {
            let rep = represent_concepts_with(&normalized, limits)?;
            let checks = rep.checks();
            (
                Box::new(move |c| (rep.inner_measure(c), rep.outer_measure(c))),
                checks,
            )
        }
        Construction::Frame => {
            let rep = represent_concepts_frame_with(&normalized, limits)?;
            let checks = rep.checks().to_vec();
            (
                Box::new(move |c| (rep.inner_measure(c), rep.outer_measure(c))),
                checks,
            )
        }
        Construction::Set => {
            return Err(Error::Precondition(
                "the set construction applies to powerset masses".into(),
            ))
        }
    };
    let lat = m.lattice();
    let rows = lat
        .ids()
        .map(|c| {
            let (inner, outer) = measures(map[c.index()]);
            VerificationRow {
                label: lat.label(c),
                bel: bel(m, c),
                inner,
                pl: pl(m, c),
                outer,
            }
        })
        .collect();
    Ok(VerificationReport {
        construction,
        normalized: changed,
        rows,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combine::combine_many;
    use crate::context::tests::music;
    use crate::evidence::powerset::belief_table_set;
    use crate::oracle::{
        brute_inner_measure, powerset_context, random_lattice, random_mass, random_set_mass,
    };
    use crate::rational::ratio;
    use num_traits::Zero;

    fn music_lattice() -> Arc<ConceptLattice> {
        Arc::new(ConceptLattice::from_context(music()).unwrap())
    }

    fn mass(lat: &Arc<ConceptLattice>, entries: &[(usize, i64, i64)]) -> MassFunction {
        MassFunction::from_entries(
            lat.clone(),
            entries.iter().map(|&(i, p, q)| (ConceptId(i), ratio(p, q))),
        )
        .unwrap()
    }

    fn music_masses(lat: &Arc<ConceptLattice>) -> Vec<MassFunction> {
        vec![
            mass(lat, &[(3, 1, 5), (0, 4, 5)]),
            mass(lat, &[(1, 3, 5), (0, 2, 5)]),
            mass(lat, &[(4, 1, 5), (5, 3, 5), (0, 1, 5)]),
        ]
    }

    #[test]
    fn set_examples() {
        let single = SetMass::from_entries(1, [(1, ratio(1, 1))]).unwrap();
        let rep = represent_set(&single).unwrap();
        assert_eq!(rep.points(), [(1, 0)]);
        assert_eq!(rep.embed(1), CarrierSet::full(1));
        assert_eq!(rep.space().inner_measure(&rep.embed(1)), ratio(1, 1));

        let vacuous = SetMass::vacuous(2).unwrap();
        let rep = represent_set(&vacuous).unwrap();
        let h1 = rep.embed(0b01);
        assert_eq!(rep.space().inner_measure(&h1), ratio(0, 1));
        assert_eq!(rep.space().outer_measure(&h1), ratio(1, 1));

        let m = SetMass::from_entries(2, [(0b01, ratio(1, 2)), (0b11, ratio(1, 2))]).unwrap();
        let rep = represent_set(&m).unwrap();
        let h1 = rep.embed(0b01);
        assert_eq!(rep.space().inner_measure(&h1), ratio(1, 2));
        assert_eq!(brute_inner_measure(rep.space(), &h1), ratio(1, 2));
        assert!(rep.verify().passed());
    }

    #[test]
    fn set_construction_sizes_and_bounds() {
        let m = SetMass::vacuous(3).unwrap();
        let rep = represent_set(&m).unwrap();
        assert_eq!(rep.points().len(), 3 * 4);
        assert_eq!(rep.space().blocks().len(), 7);
        assert!(represent_set(&SetMass::vacuous(5).unwrap()).is_err());
    }

    #[test]
    fn random_set_masses_verify() {
        for seed in 0..30 {
            let n = 1 + (seed as usize % 4);
            let m = random_set_mass(seed, n, 16);
            let rep = represent_set(&m).unwrap();
            let report = rep.verify();
            assert!(report.passed(), "seed {seed}: {report:?}");
            if n == 4 {
                // 2^15 algebra elements; the brute oracle is too slow here
                continue;
            }
            for x in 0..=m.full() {
                assert_eq!(
                    brute_inner_measure(rep.space(), &rep.embed(x)),
                    belief_table_set(&m).get(x).clone()
                );
            }
        }
    }

    #[test]
    fn music_algebraic() {
        let lat = music_lattice();
        let masses = music_masses(&lat);
        let rep = represent_concepts(&masses[0]).unwrap();
        assert_eq!(rep.inner_measure(ConceptId(1)), ratio(1, 5));
        assert_eq!(rep.outer_measure(ConceptId(5)), ratio(4, 5));
        let combined = combine_many(&masses).unwrap().result;
        for m in masses.iter().chain([&combined]) {
            let report = verify_representation(m, Construction::Algebraic).unwrap();
            assert!(report.passed(), "{report:?}");
            assert!(!report.normalized);
            assert_eq!(report.rows.len(), 7);
        }
    }

    #[test]
    fn vacuous_algebraic() {
        let lat = music_lattice();
        let rep = represent_concepts(&MassFunction::vacuous(lat.clone())).unwrap();
        for c in lat.ids() {
            let expected_inner = if c == lat.top() { 1 } else { 0 };
            assert_eq!(rep.inner_measure(c), ratio(expected_inner, 1));
            let expected_outer = if lat.extent(c).is_empty() { 0 } else { 1 };
            assert_eq!(rep.outer_measure(c), ratio(expected_outer, 1));
        }
    }

    #[test]
    fn precondition_is_enforced() {
        let ctx = FormalContext::from_names(
            &["a", "b", "c"],
            &["x", "y", "z"],
            &[("a", "x"), ("b", "y"), ("c", "x"), ("c", "y"), ("c", "z")],
        )
        .unwrap();
        let lat = Arc::new(ConceptLattice::from_context(ctx).unwrap());
        let m = mass(&lat, &[(3, 81, 100), (1, 9, 100), (2, 9, 100), (0, 1, 100)]);
        assert!(matches!(
            represent_concepts(&m),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            represent_concepts_frame(&m),
            Err(Error::Precondition(_))
        ));

        let (normalized, map, changed) = normalize_mass(&m).unwrap();
        assert!(changed);
        assert_eq!(normalized.lattice().len(), 5);
        assert_eq!(normalized.value(map[3]), &ratio(81, 100));
        assert!(normalized.value(normalized.lattice().bottom()).is_zero());
        for construction in [Construction::Algebraic, Construction::Frame] {
            let report = verify_representation(&m, construction).unwrap();
            assert!(report.normalized);
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn case_one_frame() {
        let ctx = FormalContext::from_names(
            &["a", "b", "c"],
            &["x", "y", "z"],
            &[("a", "x"), ("b", "y"), ("c", "z")],
        )
        .unwrap();
        let lat = Arc::new(ConceptLattice::from_context(ctx).unwrap());
        let m1 = mass(&lat, &[(1, 9, 10), (0, 1, 10)]);
        let m2 = mass(&lat, &[(2, 9, 10), (0, 1, 10)]);
        let rep = represent_concepts_frame(&m1).unwrap();
        assert!(
            rep.checks().iter().all(StructuralCheck::passed),
            "{:?}",
            rep.checks()
        );
        assert_eq!(rep.inner_measure(ConceptId(1)), ratio(9, 10));
        assert_eq!(rep.pairs().len(), 6);
        assert!(verify_representation(&m2, Construction::Frame)
            .unwrap()
            .passed());
    }

    #[test]
    fn music_frame() {
        let lat = music_lattice();
        let masses = music_masses(&lat);
        let rep = represent_concepts_frame(&masses[1]).unwrap();
        assert_eq!(rep.outer_measure(ConceptId(3)), ratio(1, 1));
        assert_eq!(rep.derived_context().num_objects(), 10);
        assert_eq!(rep.derived_context().num_attributes(), 28);
        for m in &masses {
            assert!(verify_representation(m, Construction::Frame)
                .unwrap()
                .passed());
        }
    }

    #[test]
    fn degenerate_frame() {
        // a single object with no attributes: ⊤ = ⊥ would be nonempty, so
        // normalization adds an attribute first
        let ctx = FormalContext::from_names(&["a"], &[], &[]).unwrap();
        let lat = Arc::new(ConceptLattice::from_context(ctx).unwrap());
        assert_eq!(lat.len(), 1);
        let m = MassFunction::vacuous(lat);
        let report = verify_representation(&m, Construction::Frame).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.normalized);
    }

    #[test]
    fn frame_bounds() {
        let lat = Arc::new(ConceptLattice::from_context(powerset_context(4)).unwrap());
        assert_eq!(lat.len(), 16);
        let m = MassFunction::vacuous(lat);
        assert!(matches!(
            represent_concepts_frame(&m),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn corrupted_measure_fails_where_expected() {
        let lat = music_lattice();
        let m = &music_masses(&lat)[2];
        let mut rep = represent_concepts(m).unwrap();
        // move 1/10 from Funk onto Pop-R&B inside the space only
        rep.space.measure[5] -= ratio(1, 10);
        rep.space.measure[4] += ratio(1, 10);
        let corrupted = MassFunction::new(lat.clone(), rep.space.measure.clone()).unwrap();
        let rep = represent_concepts(&corrupted).unwrap();
        let failing: Vec<ConceptId> = lat
            .ids()
            .filter(|&c| bel(m, c) != rep.inner_measure(c) || pl(m, c) != rep.outer_measure(c))
            .collect();
        // concepts above or meeting exactly one of the two perturbed atoms
        let expected: Vec<ConceptId> = lat
            .ids()
            .filter(|&c| {
                lat.leq(ConceptId(4), c) != lat.leq(ConceptId(5), c)
                    || lat.meets_nonempty(ConceptId(4), c) != lat.meets_nonempty(ConceptId(5), c)
            })
            .collect();
        assert_eq!(failing, expected);
        assert!(!failing.is_empty());
    }

    #[test]
    fn random_pairs_verify_both_ways() {
        for seed in 0..25 {
            let lat = Arc::new(random_lattice(seed, 8));
            let m = random_mass(seed, &lat);
            let algebraic = verify_representation(&m, Construction::Algebraic).unwrap();
            assert!(algebraic.passed(), "seed {seed}: {algebraic:?}");
            match verify_representation(&m, Construction::Frame) {
                Ok(frame) => {
                    assert!(frame.passed(), "seed {seed}: {frame:?}");
                    assert_eq!(frame.rows, algebraic.rows);
                }
                Err(Error::Capacity { .. }) => {}
                Err(e) => panic!("seed {seed}: {e}"),
            }
        }
    }

    #[test]
    fn set_and_concept_constructions_agree_on_powersets() {
        for n in 1..=3usize {
            let lat = Arc::new(ConceptLattice::from_context(powerset_context(n)).unwrap());
            for seed in 0..10 {
                let set_mass = random_set_mass(seed, n, 8);
                let entries = set_mass.support().map(|(x, v)| {
                    let extent = ObjectSet::from_indices(n, (0..n).filter(|i| x >> i & 1 == 1));
                    (lat.find_by_extent(&extent).unwrap(), v.clone())
                });
                let m = MassFunction::from_entries(lat.clone(), entries).unwrap();
                let concepts = represent_concepts(&m).unwrap();
                let sets = represent_set(&set_mass).unwrap();
                for x in 0..=set_mass.full() {
                    let extent = ObjectSet::from_indices(n, (0..n).filter(|i| x >> i & 1 == 1));
                    let c = lat.find_by_extent(&extent).unwrap();
                    let image = sets.embed(x);
                    assert_eq!(
                        concepts.inner_measure(c),
                        sets.space().inner_measure(&image)
                    );
                    assert_eq!(
                        concepts.outer_measure(c),
                        sets.space().outer_measure(&image)
                    );
                }
            }
        }
    }
}
