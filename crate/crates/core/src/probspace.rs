//! Finite probability spaces whose σ-algebra is given by its atoms (a
//! partition of the carrier), and the inner/outer measures obtained through
//! the adjoints of the algebra's embedding into the powerset.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::ConceptId;
use crate::rational::{format_exact, parse_rational, Rational};
use crate::sets::CarrierSet;

/// `(S, 𝔸, μ)` with `𝔸` generated by `blocks`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilitySpace {
    carrier: Vec<String>,
    blocks: Vec<CarrierSet>,
    measure: Vec<Rational>,
}

impl ProbabilitySpace {
    /// Blocks must be nonempty, pairwise disjoint and cover the carrier;
    /// measures must be nonnegative and sum to 1. Zero-measure blocks are fine.
    pub fn new(
        carrier: Vec<String>,
        blocks: Vec<CarrierSet>,
        measure: Vec<Rational>,
    ) -> Result<Self> {
        let n = carrier.len();
        if blocks.len() != measure.len() {
            return Err(Error::Document(format!(
                "{} blocks but {} measure values",
                blocks.len(),
                measure.len()
            )));
        }
        let mut covered = CarrierSet::empty(n);
        for (i, block) in blocks.iter().enumerate() {
            if block.domain() != n {
                return Err(Error::Document(format!("block {i} has the wrong domain")));
            }
            if block.is_empty() {
                return Err(Error::Document(format!("block {i} is empty")));
            }
            if !block.is_disjoint(&covered) {
                return Err(Error::Document(format!(
                    "block {i} overlaps an earlier block"
                )));
            }
            covered = covered.union(block);
        }
        if covered.len() != n {
            return Err(Error::Document("blocks do not cover the carrier".into()));
        }
        if let Some(v) = measure.iter().find(|v| v.is_negative()) {
            return Err(Error::InvalidMass(format!(
                "negative measure {}",
                format_exact(v)
            )));
        }
        let total: Rational = measure.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidMass(format!(
                "measure sums to {}, expected 1",
                format_exact(&total)
            )));
        }
        Ok(Self {
            carrier,
            blocks,
            measure,
        })
    }

    /// Carrier `0..n` with unnamed points.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>, measure: Vec<Rational>) -> Result<Self> {
        for block in &blocks {
            if let Some(&p) = block.iter().find(|&&p| p >= n) {
                return Err(Error::Document(format!(
                    "point {p} outside carrier of size {n}"
                )));
            }
        }
        let blocks = blocks
            .into_iter()
            .map(|b| CarrierSet::from_indices(n, b))
            .collect();
        Self::new((0..n).map(|i| i.to_string()).collect(), blocks, measure)
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier.len()
    }

    pub fn blocks(&self) -> &[CarrierSet] {
        &self.blocks
    }

    pub fn block_measure(&self, block: usize) -> &Rational {
        &self.measure[block]
    }

    /// The algebra element `e(a)` for the union of the chosen blocks.
    pub fn union_of_blocks(&self, chosen: impl IntoIterator<Item = usize>) -> CarrierSet {
        chosen
            .into_iter()
            .fold(CarrierSet::empty(self.carrier_size()), |acc, b| {
                acc.union(&self.blocks[b])
            })
    }

    /// Measure of an algebra element given by block indices.
    pub fn measure_of_blocks(&self, chosen: impl IntoIterator<Item = usize>) -> Rational {
        chosen.into_iter().map(|b| &self.measure[b]).sum()
    }

    /// Blocks contained in `y`: the atoms of `ι(y)`.
    pub fn blocks_inside(&self, y: &CarrierSet) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].is_subset(y))
            .collect()
    }

    /// Blocks meeting `y`: the atoms of `γ(y)`.
    pub fn blocks_meeting(&self, y: &CarrierSet) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| !self.blocks[b].is_disjoint(y))
            .collect()
    }

    /// Largest algebra element inside `y`.
    pub fn iota(&self, y: &CarrierSet) -> CarrierSet {
        self.union_of_blocks(self.blocks_inside(y))
    }

    /// Smallest algebra element containing `y`.
    pub fn gamma(&self, y: &CarrierSet) -> CarrierSet {
        self.union_of_blocks(self.blocks_meeting(y))
    }

    /// `μ_*(y) = μ(ι(y))`
    pub fn inner_measure(&self, y: &CarrierSet) -> Rational {
        self.measure_of_blocks(self.blocks_inside(y))
    }

    /// `μ^*(y) = μ(γ(y))`
    pub fn outer_measure(&self, y: &CarrierSet) -> Rational {
        self.measure_of_blocks(self.blocks_meeting(y))
    }

    /// Whether `y` is an element of the algebra (a union of blocks).
    pub fn is_measurable(&self, y: &CarrierSet) -> bool {
        self.iota(y) == *y
    }

    pub fn to_json(&self) -> SpaceJson {
        SpaceJson {
            carrier: self.carrier.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|p| self.carrier[p].clone()).collect())
                .collect(),
            mu: self.measure.iter().map(format_exact).collect(),
        }
    }
}

/// JSON form: `{"carrier": [...], "blocks": [[...], ...], "mu": ["1/2", ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub carrier: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub mu: Vec<String>,
}

/// Parses the JSON partition-space format. Carrier entries may be strings or
/// numbers; measures are `"p/q"` or decimal strings (or JSON numbers).
pub fn parse_space_json(text: &str) -> Result<ProbabilitySpace> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    space_from_value(&value)
}

pub(crate) fn space_from_value(value: &serde_json::Value) -> Result<ProbabilitySpace> {
    let field = |name: &str| {
        value
            .get(name)
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Document(format!("missing array `{name}`")))
    };
    let carrier: Vec<String> = field("carrier")?
        .iter()
        .map(scalar_string)
        .collect::<Result<_>>()?;
    let index = |name: &str| {
        carrier
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::Document(format!("block point {name:?} not in carrier")))
    };
    let mut blocks = Vec::new();
    for block in field("blocks")? {
        let points = block
            .as_array()
            .ok_or_else(|| Error::Document("each block must be an array".into()))?;
        let mut set = CarrierSet::empty(carrier.len());
        for p in points {
            set.insert(index(&scalar_string(p)?)?);
        }
        blocks.push(set);
    }
    let mu = field("mu")?
        .iter()
        .map(|v| parse_rational(&scalar_string(v)?))
        .collect::<Result<Vec<_>>>()?;
    if carrier
        .iter()
        .collect::<std::collections::HashSet<_>>()
        .len()
        != carrier.len()
    {
        return Err(Error::Document("duplicate carrier points".into()));
    }
    ProbabilitySpace::new(carrier, blocks, mu)
}

pub(crate) fn scalar_string(v: &serde_json::Value) -> Result<String> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => Err(Error::Document(format!(
            "expected string or number, got {other}"
        ))),
    }
}

/// Atoms and measure of a conceptual probability space. Which lattice
/// elements the atoms denote, and how `ι`/`γ` act on them, is supplied by the
/// construction that produced the space.
#[derive(Debug, Clone, PartialEq)]
pub struct ConceptualProbabilitySpace {
    /// One atom per source concept `d`, written `d*`.
    pub atoms: Vec<ConceptId>,
    pub measure: Vec<Rational>,
}

impl ConceptualProbabilitySpace {
    pub fn measure_of(&self, atoms: impl IntoIterator<Item = usize>) -> Rational {
        atoms.into_iter().map(|a| &self.measure[a]).sum()
    }

    pub fn total(&self) -> Rational {
        self.measure.iter().fold(Rational::zero(), |acc, v| acc + v)
    }
}
