//! Dempster's rule of combination on concept lattices and on powersets.
//!
//! Products of masses are pushed onto the meet of their two focal elements.
//! Pairs whose meet has an empty extent are conflict; the remaining mass is
//! renormalized. Total conflict leaves the combination undefined and is
//! reported as [`Error::TotalConflict`].

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::evidence::powerset::{SetMass, SetTable};
use crate::evidence::MassFunction;
use crate::lattice::ConceptLattice;
use crate::rational::Rational;

/// A combined mass together with the conflict discarded before normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationReport<M> {
    pub result: M,
    pub conflict: Rational,
}

/// Combines two masses on the same concept lattice.
pub fn combine(m1: &MassFunction, m2: &MassFunction) -> Result<CombinationReport<MassFunction>> {
    combine_step(m1, m2, 1)
}

fn combine_step(
    m1: &MassFunction,
    m2: &MassFunction,
    step: usize,
) -> Result<CombinationReport<MassFunction>> {
    if !m1.lattice().same_structure(m2.lattice()) {
        return Err(Error::LatticeMismatch);
    }
    let lattice: &Arc<ConceptLattice> = m1.lattice();
    let mut raw = vec![Rational::zero(); lattice.len()];
    let mut agreement = Rational::zero();
    for (c1, v1) in m1.support() {
        for (c2, v2) in m2.support() {
            let meet = lattice.meet(c1, c2);
            if lattice.extent(meet).is_empty() {
                continue;
            }
            let product = v1 * v2;
            agreement += &product;
            raw[meet.0] += product;
        }
    }
    if agreement.is_zero() {
        return Err(Error::TotalConflict { step });
    }
    let values = raw.into_iter().map(|v| v / &agreement).collect();
    Ok(CombinationReport {
        result: MassFunction::new(lattice.clone(), values)?,
        conflict: Rational::from_integer(1.into()) - agreement,
    })
}

/// Left fold of [`combine`]. The reported conflict is that of the last step;
/// a total conflict names the (1-based) step at which it occurred.
pub fn combine_many(masses: &[MassFunction]) -> Result<CombinationReport<MassFunction>> {
    let first = masses
        .first()
        .ok_or_else(|| Error::Precondition("nothing to combine".into()))?;
    Ok(combine_steps(masses)?
        .pop()
        .unwrap_or_else(|| CombinationReport {
            result: first.clone(),
            conflict: Rational::zero(),
        }))
}

/// The intermediate results of the left fold, one per combination step.
pub fn combine_steps(masses: &[MassFunction]) -> Result<Vec<CombinationReport<MassFunction>>> {
    let (first, rest) = masses
        .split_first()
        .ok_or_else(|| Error::Precondition("nothing to combine".into()))?;
    let mut steps: Vec<CombinationReport<MassFunction>> = Vec::with_capacity(rest.len());
    for (i, m) in rest.iter().enumerate() {
        let current = steps.last().map_or(first, |r| &r.result);
        let next = combine_step(current, m, i + 1)?;
        steps.push(next);
    }
    Ok(steps)
}

/// Combines two masses on the same powerset, meeting by intersection.
pub fn combine_set(m1: &SetMass, m2: &SetMass) -> Result<CombinationReport<SetMass>> {
    if m1.size() != m2.size() {
        return Err(Error::LatticeMismatch);
    }
    let mut raw = vec![Rational::zero(); 1 << m1.size()];
    let mut agreement = Rational::zero();
    for (x, v1) in m1.support() {
        for (y, v2) in m2.support() {
            let meet = x & y;
            if meet == 0 {
                continue;
            }
            let product = v1 * v2;
            agreement += &product;
            raw[meet as usize] += product;
        }
    }
    if agreement.is_zero() {
        return Err(Error::TotalConflict { step: 1 });
    }
    let values = raw.into_iter().map(|v| v / &agreement).collect();
    Ok(CombinationReport {
        result: SetMass::new(SetTable::new(m1.size(), values)?)?,
        conflict: Rational::from_integer(1.into()) - agreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::FormalContext;
    use crate::lattice::ConceptId;
    use crate::rational::ratio;

    fn movie_lattice() -> Arc<ConceptLattice> {
        // ⊤ 0, c1=(a,x) 1, c3=(b,y) 2, c2=(c,z) 3, ⊥ 4
        let ctx = FormalContext::from_names(
            &["a", "b", "c"],
            &["x", "y", "z"],
            &[("a", "x"), ("b", "y"), ("c", "z")],
        )
        .unwrap();
        Arc::new(ConceptLattice::from_context(ctx).unwrap())
    }

    fn mass(lat: &Arc<ConceptLattice>, entries: &[(usize, i64, i64)]) -> MassFunction {
        MassFunction::from_entries(
            lat.clone(),
            entries.iter().map(|&(i, p, q)| (ConceptId(i), ratio(p, q))),
        )
        .unwrap()
    }

    #[test]
    fn compromise_keeps_only_the_agreement() {
        let lat = movie_lattice();
        let m1 = mass(&lat, &[(1, 9, 10), (3, 1, 10)]);
        let m2 = mass(&lat, &[(3, 1, 10), (2, 9, 10)]);
        let report = combine(&m1, &m2).unwrap();
        assert_eq!(report.result, mass(&lat, &[(3, 1, 1)]));
        assert_eq!(report.conflict, ratio(99, 100));
    }

    #[test]
    fn conflict_without_resolution() {
        let lat = movie_lattice();
        let m1 = mass(&lat, &[(1, 9, 10), (0, 1, 10)]);
        let m2 = mass(&lat, &[(2, 9, 10), (0, 1, 10)]);
        let report = combine(&m1, &m2).unwrap();
        assert_eq!(
            report.result,
            mass(&lat, &[(1, 9, 19), (2, 9, 19), (0, 1, 19)])
        );
        assert_eq!(report.conflict, ratio(81, 100));
    }

    #[test]
    fn vacuous_is_identity() {
        let lat = movie_lattice();
        let m = mass(&lat, &[(1, 1, 3), (2, 2, 3)]);
        let vacuous = MassFunction::vacuous(lat);
        let report = combine(&m, &vacuous).unwrap();
        assert_eq!(report.result, m);
        assert_eq!(report.conflict, ratio(0, 1));
        assert_eq!(combine(&vacuous, &m).unwrap().result, m);
    }

    #[test]
    fn total_conflict_is_an_error() {
        let lat = movie_lattice();
        let m1 = mass(&lat, &[(1, 1, 1)]);
        let m2 = mass(&lat, &[(2, 1, 1)]);
        assert!(matches!(
            combine(&m1, &m2),
            Err(Error::TotalConflict { step: 1 })
        ));
        let vacuous = MassFunction::vacuous(lat);
        assert!(matches!(
            combine_many(&[vacuous, m1, m2]),
            Err(Error::TotalConflict { step: 2 })
        ));
    }

    #[test]
    fn combine_many_edge_cases() {
        let lat = movie_lattice();
        let m = mass(&lat, &[(1, 1, 2), (0, 1, 2)]);
        let single = combine_many(std::slice::from_ref(&m)).unwrap();
        assert_eq!(single.result, m);
        assert_eq!(single.conflict, ratio(0, 1));
        assert!(combine_many(&[]).is_err());
        assert!(combine_steps(std::slice::from_ref(&m)).unwrap().is_empty());
    }

    #[test]
    fn steps_record_each_conflict() {
        let lat = movie_lattice();
        let m1 = mass(&lat, &[(1, 9, 10), (0, 1, 10)]);
        let m2 = mass(&lat, &[(2, 9, 10), (0, 1, 10)]);
        let vacuous = MassFunction::vacuous(lat);
        let steps = combine_steps(&[m1.clone(), vacuous, m2.clone()]).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].result, m1);
        assert_eq!(steps[0].conflict, ratio(0, 1));
        assert_eq!(steps[1].conflict, ratio(81, 100));
        assert_eq!(steps[1].result, combine(&m1, &m2).unwrap().result);
    }

    #[test]
    fn mismatched_lattices() {
        let lat = movie_lattice();
        let other = Arc::new(
            ConceptLattice::from_context(
                FormalContext::from_names(&["a"], &["x"], &[("a", "x")]).unwrap(),
            )
            .unwrap(),
        );
        let m1 = MassFunction::vacuous(lat);
        let m2 = MassFunction::vacuous(other);
        assert!(matches!(combine(&m1, &m2), Err(Error::LatticeMismatch)));
    }

    #[test]
    fn set_level_examples() {
        let disjoint1 = SetMass::from_entries(2, [(0b01, ratio(1, 1))]).unwrap();
        let disjoint2 = SetMass::from_entries(2, [(0b10, ratio(1, 1))]).unwrap();
        assert!(matches!(
            combine_set(&disjoint1, &disjoint2),
            Err(Error::TotalConflict { .. })
        ));

        let vacuous = SetMass::vacuous(2).unwrap();
        assert_eq!(combine_set(&disjoint1, &vacuous).unwrap().result, disjoint1);

        let m1 = SetMass::from_entries(2, [(0b01, ratio(1, 2)), (0b11, ratio(1, 2))]).unwrap();
        let report = combine_set(&m1, &vacuous).unwrap();
        assert_eq!(report.result.value(0b01), &ratio(1, 2));
        assert_eq!(report.result.value(0b11), &ratio(1, 2));
        assert_eq!(report.conflict, ratio(0, 1));
    }
}
