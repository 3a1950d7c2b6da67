//! Desk-scale capacity bounds.
//!
//! Every bound can be raised through the `CDS_CAPACITY` environment variable,
//! e.g. `CDS_CAPACITY=objects=30,concepts=20000`. Raising them is at your own
//! risk: several constructions are exponential in these sizes.

use crate::error::{Error, Result};

pub const CAPACITY_ENV: &str = "CDS_CAPACITY";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Objects of a context handed to concept enumeration.
    pub objects: usize,
    /// Concepts of an enumerated lattice (the meet/join tables are quadratic).
    pub concepts: usize,
    /// Carrier size for set-level mass and belief functions.
    pub set_carrier: usize,
    /// Carrier size for the set-level representation construction.
    pub represent_set: usize,
    /// Concepts accepted by the algebraic construction (its checks are cubic).
    pub represent_concepts: usize,
    /// Concepts accepted by the frame-theoretic construction.
    pub frame_concepts: usize,
    /// Objects of the derived context built by the frame-theoretic construction.
    pub frame_objects: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            objects: 24,
            concepts: 4096,
            set_carrier: 12,
            represent_set: 4,
            represent_concepts: 512,
            frame_concepts: 8,
            frame_objects: 24,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `CDS_CAPACITY` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPACITY_ENV) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Applies `key=value` pairs separated by commas.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::Document(format!("{CAPACITY_ENV}: expected key=value, got {item:?}"))
            })?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Document(format!("{CAPACITY_ENV}: bad number in {item:?}")))?;
            let slot = match key.trim() {
                "objects" => &mut self.objects,
                "concepts" => &mut self.concepts,
                "set_carrier" => &mut self.set_carrier,
                "represent_set" => &mut self.represent_set,
                "represent_concepts" => &mut self.represent_concepts,
                "frame_concepts" => &mut self.frame_concepts,
                "frame_objects" => &mut self.frame_objects,
                other => {
                    return Err(Error::Document(format!(
                        "{CAPACITY_ENV}: unknown bound {other:?}"
                    )))
                }
            };
            *slot = value;
        }
        Ok(self)
    }
}

pub(crate) fn ensure(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Capacity {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
