//! Mass, belief and plausibility functions on concept lattices, plus the
//! powerset versions in [`powerset`].
//!
//! For a mass `m` on a concept lattice:
//!
//! * `bel(c)` is the total mass of concepts below `c`;
//! * `pl(c)` is the total mass of concepts whose meet with `c` has a nonempty
//!   extent.
//!
//! All values are exact rationals.

pub mod powerset;

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{ConceptId, ConceptLattice};
use crate::rational::{format_exact, Rational};

/// A normalized, nonnegative assignment of mass to the concepts of a lattice.
///
/// When the bottom concept has an empty extent it carries no mass.
#[derive(Debug, Clone)]
pub struct MassFunction {
    lattice: Arc<ConceptLattice>,
    values: Vec<Rational>,
}

impl PartialEq for MassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.lattice.same_structure(&other.lattice) && self.values == other.values
    }
}

impl MassFunction {
    /// `values` is indexed by [`ConceptId`].
    pub fn new(lattice: Arc<ConceptLattice>, values: Vec<Rational>) -> Result<Self> {
        if values.len() != lattice.len() {
            return Err(Error::InvalidMass(format!(
                "{} values for a lattice of {} concepts",
                values.len(),
                lattice.len()
            )));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(Error::InvalidMass(format!(
                "negative mass {} on {}",
                format_exact(v),
                lattice.label(ConceptId(i))
            )));
        }
        let sum: Rational = values.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidMass(format!(
                "masses sum to {}, expected 1",
                format_exact(&sum)
            )));
        }
        let bottom = lattice.bottom();
        if lattice.extent(bottom).is_empty() && !values[bottom.0].is_zero() {
            return Err(Error::InvalidMass(format!(
                "bottom concept has an empty extent but mass {}",
                format_exact(&values[bottom.0])
            )));
        }
        Ok(Self { lattice, values })
    }

    /// Builds a mass from sparse entries; unlisted concepts get 0.
    pub fn from_entries<I>(lattice: Arc<ConceptLattice>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ConceptId, Rational)>,
    {
        let mut values = vec![Rational::zero(); lattice.len()];
        for (id, v) in entries {
            values[id.0] += v;
        }
        Self::new(lattice, values)
    }

    /// All mass on the top concept: total ignorance.
    pub fn vacuous(lattice: Arc<ConceptLattice>) -> Self {
        let mut values = vec![Rational::zero(); lattice.len()];
        values[lattice.top().0] = Rational::one();
        Self { lattice, values }
    }

    pub fn lattice(&self) -> &Arc<ConceptLattice> {
        &self.lattice
    }

    pub fn value(&self, id: ConceptId) -> &Rational {
        &self.values[id.0]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Concepts with nonzero mass, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (ConceptId, &Rational)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (ConceptId(i), v))
    }

    /// Same masses, re-homed on another lattice through `map` (old id → new id).
    pub(crate) fn transport(
        &self,
        lattice: Arc<ConceptLattice>,
        map: &[ConceptId],
    ) -> Result<Self> {
        Self::from_entries(
            lattice,
            self.support().map(|(id, v)| (map[id.0], v.clone())),
        )
    }
}

/// Total mass of the concepts below `c`.
pub fn bel(m: &MassFunction, c: ConceptId) -> Rational {
    let lat = m.lattice();
    m.support()
        .filter(|&(d, _)| lat.leq(d, c))
        .map(|(_, v)| v)
        .sum()
}

/// Total mass of the concepts whose meet with `c` has a nonempty extent.
pub fn pl(m: &MassFunction, c: ConceptId) -> Rational {
    let lat = m.lattice();
    m.support()
        .filter(|&(d, _)| lat.meets_nonempty(d, c))
        .map(|(_, v)| v)
        .sum()
}

/// Belief and plausibility of every concept, indexed by [`ConceptId`].
#[derive(Debug, Clone, PartialEq)]
pub struct BeliefTable {
    pub bel: Vec<Rational>,
    pub pl: Vec<Rational>,
}

pub fn belief_table(m: &MassFunction) -> BeliefTable {
    let ids = m.lattice().ids();
    let (bel, pl) = ids.map(|c| (bel(m, c), pl(m, c))).unzip();
    BeliefTable { bel, pl }
}

/// Recovers the mass inducing a per-concept belief table, by Möbius
/// recursion `m(c) = bel(c) - Σ_{c' < c} m(c')` along a linear extension.
///
/// Fails with a witness when `bel(⊤) ≠ 1`, when `bel` is not monotone, or when
/// some recovered mass is negative.
pub fn mass_from_bel_lattice(
    lattice: Arc<ConceptLattice>,
    bel: &[Rational],
) -> Result<MassFunction> {
    if bel.len() != lattice.len() {
        return Err(Error::InvalidMass(format!(
            "{} belief values for a lattice of {} concepts",
            bel.len(),
            lattice.len()
        )));
    }
    if !bel[lattice.top().0].is_one() {
        return Err(Error::Precondition(format!(
            "bel(top) = {}, expected 1",
            format_exact(&bel[lattice.top().0])
        )));
    }
    for c in lattice.ids() {
        for d in lattice.ids() {
            if lattice.lt(c, d) && bel[c.0] > bel[d.0] {
                return Err(Error::NotMonotone {
                    lower: lattice.label(c),
                    upper: lattice.label(d),
                    lower_value: format_exact(&bel[c.0]),
                    upper_value: format_exact(&bel[d.0]),
                });
            }
        }
    }

    // Canonical order sorts by descending extent size, so walking it backwards
    // visits every concept after all concepts strictly below it.
    let mut mass = vec![Rational::zero(); lattice.len()];
    for c in lattice.ids().rev() {
        let below: Rational = lattice
            .ids()
            .filter(|&d| lattice.lt(d, c))
            .map(|d| &mass[d.0])
            .sum();
        let value = &bel[c.0] - below;
        if value.is_negative() {
            return Err(Error::NegativeMass {
                witness: lattice.label(c),
                value: format_exact(&value),
            });
        }
        mass[c.0] = value;
    }
    MassFunction::new(lattice, mass)
}
