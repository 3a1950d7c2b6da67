//! Brute-force ground truth for the rest of the crate.
//!
//! Nothing here calls into the code it validates: derivations are recomputed
//! from raw incidence, order and meets from raw extents, and inner/outer
//! measures by enumerating the whole σ-algebra. Only the domain types are
//! shared.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::evidence::powerset::{format_subset, SetMass, SetTable, Subset};
use crate::evidence::MassFunction;
use crate::lattice::{ConceptId, ConceptLattice};
use crate::probspace::ProbabilitySpace;
use crate::rational::{format_exact, ratio, Rational};
use crate::sets::{AttributeSet, CarrierSet, ObjectSet};

/// Largest carrier accepted by the axiom checkers.
pub const AXIOM_MAX_CARRIER: usize = 5;
/// Largest tuple length accepted by the axiom checkers.
pub const AXIOM_MAX_N: usize = 3;
/// Bound on the denominators of randomly generated masses.
pub const MAX_DENOMINATOR: i64 = 64;

/// Direction of a full scan; results must not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanOrder {
    Forward,
    Reverse,
}

fn scan(n: usize, order: ScanOrder) -> Box<dyn Iterator<Item = usize>> {
    match order {
        ScanOrder::Forward => Box::new(0..n),
        ScanOrder::Reverse => Box::new((0..n).rev()),
    }
}

/// `Σ { m(d) | extent(d) ⊆ extent(c) }`, by a full scan of the concepts.
pub fn brute_bel(m: &MassFunction, c: ConceptId) -> Rational {
    brute_bel_in(m, c, ScanOrder::Forward)
}

/// `Σ { m(d) | extent(d) ∩ extent(c) ≠ ∅ }`, by a full scan of the concepts.
pub fn brute_pl(m: &MassFunction, c: ConceptId) -> Rational {
    brute_pl_in(m, c, ScanOrder::Forward)
}

pub fn brute_bel_in(m: &MassFunction, c: ConceptId, order: ScanOrder) -> Rational {
    let concepts = m.lattice().concepts();
    let target = concepts[c.index()].extent();
    let mut total = Rational::zero();
    for d in scan(concepts.len(), order) {
        if concepts[d].extent().iter().all(|g| target.contains(g)) {
            total += &m.values()[d];
        }
    }
    total
}

pub fn brute_pl_in(m: &MassFunction, c: ConceptId, order: ScanOrder) -> Rational {
    let concepts = m.lattice().concepts();
    let target = concepts[c.index()].extent();
    let mut total = Rational::zero();
    for d in scan(concepts.len(), order) {
        if concepts[d].extent().iter().any(|g| target.contains(g)) {
            total += &m.values()[d];
        }
    }
    total
}

/// Every concept of `ctx`, found by closing each of the `2^|objects|` object
/// subsets and deduplicating. Sorted by extent size (descending), then
/// lexicographically.
pub fn brute_concepts(ctx: &FormalContext) -> Vec<(ObjectSet, AttributeSet)> {
    let n = ctx.num_objects();
    let k = ctx.num_attributes();
    assert!(
        n <= 16,
        "brute-force enumeration is exponential in the objects"
    );
    let mut found: Vec<(ObjectSet, AttributeSet)> = Vec::new();
    for mask in 0u32..(1 << n) {
        let intent = AttributeSet::from_indices(
            k,
            (0..k).filter(|&m| (0..n).all(|g| mask >> g & 1 == 0 || ctx.has(g, m))),
        );
        let extent =
            ObjectSet::from_indices(n, (0..n).filter(|&g| intent.iter().all(|m| ctx.has(g, m))));
        if !found.iter().any(|(e, _)| *e == extent) {
            found.push((extent, intent));
        }
    }
    found.sort_by(|a, b| {
        let ka: Vec<usize> = a.0.iter().collect();
        let kb: Vec<usize> = b.0.iter().collect();
        kb.len().cmp(&ka.len()).then(ka.cmp(&kb))
    });
    found
}

/// `μ_*(y)` as the supremum of `μ(a)` over every algebra element `a ⊆ y`.
pub fn brute_inner_measure(space: &ProbabilitySpace, y: &CarrierSet) -> Rational {
    algebra_elements(space)
        .filter(|(set, _)| set.is_subset(y))
        .map(|(_, mu)| mu)
        .max()
        .expect("the empty union is always below y")
}

/// `μ^*(y)` as the infimum of `μ(a)` over every algebra element `a ⊇ y`.
pub fn brute_outer_measure(space: &ProbabilitySpace, y: &CarrierSet) -> Rational {
    algebra_elements(space)
        .filter(|(set, _)| y.is_subset(set))
        .map(|(_, mu)| mu)
        .min()
        .expect("the full carrier is always above y")
}

/// All `2^#blocks` elements of the algebra with their measures.
fn algebra_elements(space: &ProbabilitySpace) -> impl Iterator<Item = (CarrierSet, Rational)> + '_ {
    let b = space.blocks().len();
    assert!(b <= 16);
    (0u32..(1 << b)).map(move |mask| {
        let mut set = CarrierSet::empty(space.carrier_size());
        let mut mu = Rational::zero();
        for i in 0..b {
            if mask >> i & 1 == 1 {
                set = set.union(&space.blocks()[i]);
                mu += space.block_measure(i);
            }
        }
        (set, mu)
    })
}

/// Outcome of an exhaustive inequality check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub checked_tuples: u64,
    pub first_violation: Option<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    /// The tuple `A_1, …, A_n`, or `[S]` when `f(S) ≠ 1`.
    pub sets: Vec<String>,
    /// Left-hand side of the failed inequality.
    pub lhs: String,
    /// Right-hand side of the failed inequality.
    pub rhs: String,
}

#[derive(Clone, Copy)]
enum Axiom {
    Belief,
    Plausibility,
}

/// Checks `f(S) = 1` and, for every tuple of `n ≤ n_max` subsets,
/// `f(A_1 ∪ … ∪ A_n) ≥ Σ_{∅≠I⊆[n]} (-1)^{|I|+1} f(∩_{i∈I} A_i)`.
///
/// Both sides are symmetric in the `A_i`, so each multiset of subsets is
/// checked once (as a nondecreasing tuple).
pub fn check_belief_axioms_set(f: &SetTable, n_max: usize) -> Result<AxiomReport> {
    check_axioms(f, n_max, Axiom::Belief)
}

/// Checks `f(S) = 1` and, for every tuple of `n ≤ n_max` subsets,
/// `f(A_1 ∩ … ∩ A_n) ≤ Σ_{∅≠I⊆[n]} (-1)^{|I|+1} f(∪_{i∈I} A_i)`,
/// the dual of the belief inequality under `pl(X) = 1 - bel(S \ X)`.
pub fn check_plausibility_axioms_set(f: &SetTable, n_max: usize) -> Result<AxiomReport> {
    check_axioms(f, n_max, Axiom::Plausibility)
}

fn check_axioms(f: &SetTable, n_max: usize, axiom: Axiom) -> Result<AxiomReport> {
    if f.size() > AXIOM_MAX_CARRIER {
        return Err(Error::Capacity {
            what: "axiom-check carrier",
            limit: AXIOM_MAX_CARRIER,
            actual: f.size(),
        });
    }
    if n_max > AXIOM_MAX_N {
        return Err(Error::Capacity {
            what: "axiom-check tuple length",
            limit: AXIOM_MAX_N,
            actual: n_max,
        });
    }
    let full = f.full();
    if !f.get(full).is_one() {
        return Ok(AxiomReport {
            checked_tuples: 0,
            first_violation: Some(Violation {
                sets: vec![format_subset(full)],
                lhs: format_exact(f.get(full)),
                rhs: "1".into(),
            }),
        });
    }

    let universe = full as usize + 1;
    let mut checked = 0u64;
    for n in 1..=n_max {
        let mut tuple = vec![0usize; n];
        loop {
            checked += 1;
            let sets: Vec<Subset> = tuple.iter().map(|&s| s as Subset).collect();
            if let Some(v) = tuple_violation(f, full, &sets, axiom) {
                return Ok(AxiomReport {
                    checked_tuples: checked,
                    first_violation: Some(v),
                });
            }
            // next nondecreasing tuple
            let mut i = n;
            while i > 0 && tuple[i - 1] == universe - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            tuple[i - 1] += 1;
            for j in i..n {
                tuple[j] = tuple[i - 1];
            }
        }
    }
    Ok(AxiomReport {
        checked_tuples: checked,
        first_violation: None,
    })
}

fn tuple_violation(f: &SetTable, full: Subset, sets: &[Subset], axiom: Axiom) -> Option<Violation> {
    let n = sets.len();
    let mut rhs = Rational::zero();
    for index_mask in 1u32..(1 << n) {
        let chosen = (0..n).filter(|i| index_mask >> i & 1 == 1).map(|i| sets[i]);
        let combined = match axiom {
            Axiom::Belief => chosen.fold(full, |acc, s| acc & s),
            Axiom::Plausibility => chosen.fold(0, |acc, s| acc | s),
        };
        if index_mask.count_ones() % 2 == 1 {
            rhs += f.get(combined);
        } else {
            rhs -= f.get(combined);
        }
    }
    let (lhs, ok) = match axiom {
        Axiom::Belief => {
            let lhs = f.get(sets.iter().fold(0, |acc, &s| acc | s));
            (lhs, *lhs >= rhs)
        }
        Axiom::Plausibility => {
            let lhs = f.get(sets.iter().fold(full, |acc, &s| acc & s));
            (lhs, *lhs <= rhs)
        }
    };
    (!ok).then(|| Violation {
        sets: sets.iter().map(|&s| format_subset(s)).collect(),
        lhs: format_exact(lhs),
        rhs: format_exact(&rhs),
    })
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A context whose incidence pairs are each present with probability `density`.
/// Objects are named `g0, g1, …` and attributes `m0, m1, …`.
pub fn random_context(
    seed: u64,
    n_objects: usize,
    n_attributes: usize,
    density: f64,
) -> FormalContext {
    let mut rng = rng(seed, 1);
    let density = density.clamp(0.0, 1.0);
    let mut pairs = Vec::new();
    for g in 0..n_objects {
        for m in 0..n_attributes {
            if rng.gen_bool(density) {
                pairs.push((g, m));
            }
        }
    }
    FormalContext::new(
        (0..n_objects).map(|i| format!("g{i}")).collect(),
        (0..n_attributes).map(|i| format!("m{i}")).collect(),
        pairs,
    )
    .expect("generated names are distinct")
}

/// A random lattice with at most `max_concepts` concepts (at least one object).
pub fn random_lattice(seed: u64, max_concepts: usize) -> ConceptLattice {
    let mut rng = rng(seed, 2);
    loop {
        let n_objects = rng.gen_range(1..=5);
        let n_attributes = rng.gen_range(1..=5);
        let density = rng.gen_range(0.2..0.8);
        let ctx = random_context(rng.gen(), n_objects, n_attributes, density);
        let lattice = ConceptLattice::from_context(ctx).expect("within desk bounds");
        if lattice.len() <= max_concepts {
            return lattice;
        }
    }
}

/// Distributes `denominator` units over `k` slots, each slot getting at least one.
fn random_units(rng: &mut ChaCha8Rng, k: usize, denominator: i64) -> Vec<i64> {
    let mut units = vec![1i64; k];
    for _ in k as i64..denominator {
        units[rng.gen_range(0..k)] += 1;
    }
    units
}

/// A random mass on `lat` with denominator at most 64, supported on up to four
/// concepts, never on an empty-extent bottom.
///
/// Panics if `lat` admits no mass at all (a context without objects).
pub fn random_mass(seed: u64, lat: &std::sync::Arc<ConceptLattice>) -> MassFunction {
    let mut rng = rng(seed, 3);
    let eligible: Vec<ConceptId> = lat
        .ids()
        .filter(|&c| c != lat.bottom() || !lat.extent(c).is_empty())
        .collect();
    assert!(!eligible.is_empty(), "lattice admits no mass function");
    let k = rng.gen_range(1..=eligible.len().min(4));
    let support: Vec<ConceptId> = eligible.choose_multiple(&mut rng, k).copied().collect();
    let denominator = rng.gen_range(k as i64..=MAX_DENOMINATOR);
    let units = random_units(&mut rng, k, denominator);
    MassFunction::from_entries(
        lat.clone(),
        support
            .into_iter()
            .zip(units)
            .map(|(c, u)| (c, ratio(u, denominator))),
    )
    .expect("generated masses are valid")
}

/// A random mass on the powerset of an `n`-element set, with denominator at
/// most `max_denominator` and nonempty focal sets.
pub fn random_set_mass(seed: u64, n: usize, max_denominator: i64) -> SetMass {
    assert!(n >= 1);
    let mut rng = rng(seed, 4);
    let nonempty: Vec<Subset> = (1..(1u32 << n)).collect();
    let k = rng.gen_range(1..=nonempty.len().min(max_denominator as usize).min(4));
    let support: Vec<Subset> = nonempty.choose_multiple(&mut rng, k).copied().collect();
    let denominator = rng.gen_range(k as i64..=max_denominator);
    let units = random_units(&mut rng, k, denominator);
    SetMass::from_entries(
        n,
        support
            .into_iter()
            .zip(units)
            .map(|(x, u)| (x, ratio(u, denominator))),
    )
    .expect("generated masses are valid")
}

/// A random partition of `0..n` with a random measure (zero blocks allowed).
pub fn random_partition_space(seed: u64, n: usize) -> ProbabilitySpace {
    assert!(n >= 1);
    let mut rng = rng(seed, 5);
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    let mut distinct: Vec<usize> = labels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let blocks: Vec<Vec<usize>> = distinct
        .iter()
        .map(|&l| (0..n).filter(|&p| labels[p] == l).collect())
        .collect();
    let denominator = rng.gen_range(1..=MAX_DENOMINATOR);
    let mut units = vec![0i64; blocks.len()];
    for _ in 0..denominator {
        units[rng.gen_range(0..blocks.len())] += 1;
    }
    ProbabilitySpace::from_blocks(
        n,
        blocks,
        units.into_iter().map(|u| ratio(u, denominator)).collect(),
    )
    .expect("generated partitions are valid")
}

/// The contranominal scale on `n` elements (`a I x` iff `a ≠ x`), whose
/// concept extents are exactly the subsets of the objects.
pub fn powerset_context(n: usize) -> FormalContext {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let pairs = (0..n).flat_map(|a| (0..n).filter(move |&x| x != a).map(move |x| (a, x)));
    FormalContext::new(names.clone(), names, pairs).expect("distinct names")
}

/// Inner-measure table of a space over `P(S)` (requires `|S| ≤ 12`).
pub fn inner_measure_table(space: &ProbabilitySpace) -> SetTable {
    subset_table(space, |sp, y| sp.inner_measure(y))
}

/// Outer-measure table of a space over `P(S)` (requires `|S| ≤ 12`).
pub fn outer_measure_table(space: &ProbabilitySpace) -> SetTable {
    subset_table(space, |sp, y| sp.outer_measure(y))
}

fn subset_table(
    space: &ProbabilitySpace,
    f: impl Fn(&ProbabilitySpace, &CarrierSet) -> Rational,
) -> SetTable {
    let n = space.carrier_size();
    SetTable::from_fn(n, |mask| {
        let y = CarrierSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
        f(space, &y)
    })
    .expect("carrier within set bounds")
}

/// Additive probability on `P(S)` from point weights.
pub fn additive_table(weights: &[Rational]) -> SetTable {
    let n = weights.len();
    SetTable::from_fn(n, |mask| {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &weights[i])
            .sum()
    })
    .expect("carrier within set bounds")
}

/// `X ↦ 1 - f(S \ X)`
pub fn dual_table(f: &SetTable) -> SetTable {
    let full = f.full();
    SetTable::from_fn(f.size(), |x| Rational::one() - f.get(full & !x)).expect("same size")
}
