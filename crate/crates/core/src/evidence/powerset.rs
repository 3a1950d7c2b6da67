//! Mass and belief functions over the powerset of a finite set `S = {0..n}`.
//!
//! Subsets are bit masks (`u32`); bit `i` stands for element `i`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::{ensure, Limits};
use crate::rational::{format_exact, Rational};

pub type Subset = u32;

/// Formats a subset as `{0,2}`.
pub fn format_subset(set: Subset) -> String {
    let elems: Vec<String> = (0..32)
        .filter(|i| set >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", elems.join(","))
}

/// Iterates every subset of `set`, including `set` and the empty set.
pub fn subsets_of(set: Subset) -> impl Iterator<Item = Subset> {
    let mut next = Some(set);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            Some((current - 1) & set)
        };
        Some(current)
    })
}

/// A rational-valued function on every subset of `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct SetTable {
    size: usize,
    values: Vec<Rational>,
}

impl SetTable {
    pub fn new(size: usize, values: Vec<Rational>) -> Result<Self> {
        ensure("set carrier", size, Limits::default().set_carrier)?;
        if values.len() != 1 << size {
            return Err(Error::InvalidMass(format!(
                "{} values for the {} subsets of a {size}-element set",
                values.len(),
                1u64 << size
            )));
        }
        Ok(Self { size, values })
    }

    pub fn from_fn(size: usize, f: impl FnMut(Subset) -> Rational) -> Result<Self> {
        ensure("set carrier", size, Limits::default().set_carrier)?;
        Self::new(size, (0..1u32 << size).map(f).collect())
    }

    /// Number of elements of `S`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn full(&self) -> Subset {
        ((1u64 << self.size) - 1) as Subset
    }

    pub fn get(&self, set: Subset) -> &Rational {
        &self.values[set as usize]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// A mass function on `P(S)`: nonnegative, summing to 1, and zero on ∅.
#[derive(Debug, Clone, PartialEq)]
pub struct SetMass(SetTable);

impl SetMass {
    pub fn new(table: SetTable) -> Result<Self> {
        if let Some((x, v)) = table
            .values
            .iter()
            .enumerate()
            .find(|(_, v)| v.is_negative())
        {
            return Err(Error::InvalidMass(format!(
                "negative mass {} on {}",
                format_exact(v),
                format_subset(x as Subset)
            )));
        }
        let sum: Rational = table.values.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidMass(format!(
                "masses sum to {}, expected 1",
                format_exact(&sum)
            )));
        }
        if !table.values[0].is_zero() {
            return Err(Error::InvalidMass("the empty set carries mass".into()));
        }
        Ok(Self(table))
    }

    pub fn from_entries<I>(size: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, Rational)>,
    {
        let mut values = vec![Rational::zero(); 1 << size];
        for (set, v) in entries {
            if set as usize >= values.len() {
                return Err(Error::InvalidMass(format!(
                    "{} is not a subset of a {size}-element set",
                    format_subset(set)
                )));
            }
            values[set as usize] += v;
        }
        Self::new(SetTable::new(size, values)?)
    }

    /// All mass on `S`.
    pub fn vacuous(size: usize) -> Result<Self> {
        let full = ((1u64 << size) - 1) as Subset;
        Self::from_entries(size, [(full, Rational::one())])
    }

    pub fn table(&self) -> &SetTable {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn full(&self) -> Subset {
        self.0.full()
    }

    pub fn value(&self, set: Subset) -> &Rational {
        self.0.get(set)
    }

    pub fn support(&self) -> impl Iterator<Item = (Subset, &Rational)> {
        self.0
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(x, v)| (x as Subset, v))
    }
}

/// `bel(X) = Σ_{Y ⊆ X} m(Y)`
pub fn bel_set(m: &SetMass, x: Subset) -> Rational {
    subsets_of(x).map(|y| m.value(y)).sum()
}

/// `pl(X) = Σ_{Y ∩ X ≠ ∅} m(Y)`
pub fn pl_set(m: &SetMass, x: Subset) -> Rational {
    m.support()
        .filter(|&(y, _)| y & x != 0)
        .map(|(_, v)| v)
        .sum()
}

pub fn belief_table_set(m: &SetMass) -> SetTable {
    SetTable {
        size: m.size(),
        values: (0..=m.full()).map(|x| bel_set(m, x)).collect(),
    }
}

pub fn plausibility_table_set(m: &SetMass) -> SetTable {
    SetTable {
        size: m.size(),
        values: (0..=m.full()).map(|x| pl_set(m, x)).collect(),
    }
}

/// Möbius inversion `m(X) = Σ_{Y ⊆ X} (-1)^{|X \ Y|} bel(Y)`.
///
/// Fails with the first subset (in mask order) whose recovered mass is
/// negative, which certifies that `bel` is not a belief function.
pub fn mass_from_bel_set(bel: &SetTable) -> Result<SetMass> {
    let full = bel.full();
    if !bel.get(full).is_one() {
        return Err(Error::Precondition(format!(
            "bel(S) = {}, expected 1",
            format_exact(bel.get(full))
        )));
    }
    let mut values = Vec::with_capacity(bel.values.len());
    for x in 0..=full {
        let mut acc = Rational::zero();
        for y in subsets_of(x) {
            if (x & !y).count_ones() % 2 == 0 {
                acc += bel.get(y);
            } else {
                acc -= bel.get(y);
            }
        }
        if acc.is_negative() {
            return Err(Error::NegativeMass {
                witness: format_subset(x),
                value: format_exact(&acc),
            });
        }
        values.push(acc);
    }
    SetMass::new(SetTable {
        size: bel.size,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn uniform_singletons(n: usize) -> SetMass {
        SetMass::from_entries(n, (0..n).map(|i| (1 << i, ratio(1, n as i64)))).unwrap()
    }

    #[test]
    fn subset_enumeration() {
        let mut subs: Vec<Subset> = subsets_of(0b101).collect();
        subs.sort();
        assert_eq!(subs, vec![0, 1, 4, 5]);
        assert_eq!(subsets_of(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn belief_of_uniform_singletons() {
        let m = uniform_singletons(3);
        assert_eq!(bel_set(&m, 0b011), ratio(2, 3));
        assert_eq!(bel_set(&m, 0b111), ratio(1, 1));
        assert_eq!(pl_set(&m, 0b001), ratio(1, 3));
    }

    #[test]
    fn vacuous_belief_is_zero_below_s() {
        let m = SetMass::vacuous(3).unwrap();
        for x in 0..7 {
            assert_eq!(bel_set(&m, x), ratio(0, 1));
        }
        assert_eq!(bel_set(&m, 7), ratio(1, 1));
    }

    #[test]
    fn inversion_examples() {
        let point = SetMass::from_entries(2, [(0b01, ratio(1, 1))]).unwrap();
        assert_eq!(mass_from_bel_set(&belief_table_set(&point)).unwrap(), point);

        // bel(X) = |X| / |S|
        let bel = SetTable::from_fn(3, |x| ratio(x.count_ones() as i64, 3)).unwrap();
        assert_eq!(mass_from_bel_set(&bel).unwrap(), uniform_singletons(3));

        // inner measure of the partition {0,1} | {2} with weights 1/3, 2/3
        let bel = SetTable::from_fn(3, |x| {
            let mut v = ratio(0, 1);
            if x & 0b011 == 0b011 {
                v += ratio(1, 3);
            }
            if x & 0b100 != 0 {
                v += ratio(2, 3);
            }
            v
        })
        .unwrap();
        let m = mass_from_bel_set(&bel).unwrap();
        let support: Vec<_> = m.support().map(|(x, v)| (x, v.clone())).collect();
        assert_eq!(support, vec![(0b011, ratio(1, 3)), (0b100, ratio(2, 3))]);
    }

    #[test]
    fn inversion_rejects_non_beliefs() {
        // f(X) = 1 for X ≠ ∅ is not superadditive on {0},{1}
        let f = SetTable::from_fn(2, |x| if x == 0 { ratio(0, 1) } else { ratio(1, 1) }).unwrap();
        match mass_from_bel_set(&f) {
            Err(Error::NegativeMass { witness, value }) => {
                assert_eq!(witness, "{0,1}");
                assert_eq!(value, "-1");
            }
            other => panic!("expected negative mass, got {other:?}"),
        }
        let g = SetTable::from_fn(1, |_| ratio(1, 2)).unwrap();
        assert!(matches!(mass_from_bel_set(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn set_mass_validation() {
        assert!(SetMass::from_entries(2, [(0, ratio(1, 1))]).is_err());
        assert!(SetMass::from_entries(2, [(1, ratio(1, 2))]).is_err());
        assert!(SetMass::from_entries(2, [(8, ratio(1, 1))]).is_err());
        assert!(SetTable::new(13, vec![]).is_err());
    }

    fn arb_mass(max_size: usize) -> impl Strategy<Value = SetMass> {
        (1..=max_size).prop_flat_map(|n| {
            proptest::collection::vec(0u32..5, (1 << n) - 1).prop_filter_map(
                "all-zero weights",
                move |weights| {
                    let total: u32 = weights.iter().sum();
                    (total > 0).then(|| {
                        SetMass::from_entries(
                            n,
                            weights
                                .iter()
                                .enumerate()
                                .map(|(i, &w)| ((i + 1) as Subset, ratio(w as i64, total as i64))),
                        )
                        .unwrap()
                    })
                },
            )
        })
    }

    proptest! {
        #[test]
        fn duality_and_round_trip(m in arb_mass(6)) {
            let full = m.full();
            for x in 0..=full {
                prop_assert_eq!(pl_set(&m, x), ratio(1, 1) - bel_set(&m, full & !x));
            }
            let back = mass_from_bel_set(&belief_table_set(&m)).unwrap();
            prop_assert_eq!(back, m);
        }
    }
}
