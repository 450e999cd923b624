//! Dempster's rule of combination.

use std::collections::BTreeMap;

use crate::{Bba, Error, Result};

/// `k` values this close to 1 are treated as total conflict.
pub const TOTAL_CONFLICT_TOLERANCE: f64 = 1e-12;

/// Mass the two sources jointly assign to disjoint pairs of focal sets.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Conflict(f64);

impl Conflict {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_total(self) -> bool {
        self.0 >= 1.0 - TOTAL_CONFLICT_TOLERANCE
    }
}

pub fn conflict(m1: &Bba, m2: &Bba) -> Result<Conflict> {
    m1.ensure_same_frame(m2)?;
    let mut k = 0.0;
    for (b, mb) in m1.focal_elements() {
        for (c, mc) in m2.focal_elements() {
            if b.intersect(c).is_none() {
                k += mb * mc;
            }
        }
    }
    Ok(Conflict(k.clamp(0.0, 1.0)))
}

/// Orthogonal sum `m1 ⊕ m2`.
///
/// Fails with [`Error::TotalConflict`] when the sources are completely
/// contradictory.
pub fn combine_dempster(m1: &Bba, m2: &Bba) -> Result<Bba> {
    combine_with_conflict(m1, m2).map(|(m, _)| m)
}

/// Orthogonal sum together with the conflict that was normalized away.
pub fn combine_with_conflict(m1: &Bba, m2: &Bba) -> Result<(Bba, Conflict)> {
    m1.ensure_same_frame(m2)?;
    let mut joint = BTreeMap::new();
    let mut k = 0.0;
    for (b, mb) in m1.focal_elements() {
        for (c, mc) in m2.focal_elements() {
            match b.intersect(c) {
                Some(a) => *joint.entry(a).or_insert(0.0) += mb * mc,
                None => k += mb * mc,
            }
        }
    }
    let k = Conflict(k.clamp(0.0, 1.0));
    if k.is_total() {
        return Err(Error::TotalConflict(k.0));
    }
    // joint total equals 1 - k for normalized inputs
    let norm: f64 = joint.values().sum();
    joint.retain(|_, m: &mut f64| {
        *m /= norm;
        *m > 0.0
    });
    Ok((Bba::from_parts(m1.frame().clone(), joint), k))
}

/// Left fold of the binary rule over `bbas`, returning the conflict of each step.
pub fn combine_all<'a, I>(bbas: I) -> Result<(Bba, Vec<Conflict>)>
where
    I: IntoIterator<Item = &'a Bba>,
{
    let mut iter = bbas.into_iter();
    let first = iter.next().ok_or(Error::NothingToCombine)?;
    let mut acc = first.clone();
    let mut conflicts = Vec::new();
    for next in iter {
        let (m, k) = combine_with_conflict(&acc, next)?;
        acc = m;
        conflicts.push(k);
    }
    Ok((acc, conflicts))
}
