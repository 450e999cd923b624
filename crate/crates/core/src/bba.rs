//! Basic belief assignments (mass functions).

use std::collections::BTreeMap;

use crate::{Error, FocalSet, Frame, Result};

/// Allowed deviation of the total mass from 1.
pub const MASS_SUM_TOLERANCE: f64 = 1e-9;

// the boundary itself is inclusive; a few ulps absorb the representation error of decimal input
fn sum_out_of_tolerance(total: f64) -> bool {
    (total - 1.0).abs() > MASS_SUM_TOLERANCE + 4.0 * f64::EPSILON
}

/// A validated mass function on a [`Frame`].
///
/// Only focal elements (strictly positive mass) are stored, the empty set
/// never carries mass and the masses sum to 1 within [`MASS_SUM_TOLERANCE`].
/// Values are immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct Bba {
    frame: Frame,
    masses: BTreeMap<FocalSet, f64>,
}

impl Bba {
    /// Validates `entries`; repeated sets are merged by summing their masses.
    pub fn new<I>(frame: &Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        Self::build(frame, entries, false)
    }

    /// Like [`Bba::new`] but rescales the masses to sum to exactly 1 instead of
    /// rejecting a total that is off by rounding. A zero total is still an error.
    pub fn new_normalized<I>(frame: &Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        Self::build(frame, entries, true)
    }

    fn build<I>(frame: &Frame, entries: I, renormalize: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (FocalSet, f64)>,
    {
        let mut masses = BTreeMap::new();
        for (set, mass) in entries {
            if !frame.contains_set(&set) {
                return Err(Error::FrameMismatch);
            }
            if !mass.is_finite() || mass < 0.0 {
                return Err(Error::InvalidMass(mass));
            }
            *masses.entry(set).or_insert(0.0) += mass;
        }
        masses.retain(|_, m| *m > 0.0);

        let total: f64 = masses.values().sum();
        if renormalize && total > 0.0 {
            masses.values_mut().for_each(|m| *m /= total);
        } else if sum_out_of_tolerance(total) {
            return Err(Error::MassSum(total));
        }
        Ok(Self {
            frame: frame.clone(),
            masses,
        })
    }

    /// Convenience constructor taking 1-based index lists.
    pub fn from_indices(frame: &Frame, entries: &[(&[usize], f64)]) -> Result<Self> {
        let entries = entries
            .iter()
            .map(|(set, mass)| Ok((frame.set_of_indices(set.iter().copied())?, *mass)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, entries)
    }

    /// All mass on the whole frame: total ignorance.
    pub fn vacuous(frame: &Frame) -> Self {
        Self::categorical(frame, frame.theta())
    }

    /// All mass on `set`.
    pub fn categorical(frame: &Frame, set: FocalSet) -> Self {
        debug_assert!(frame.contains_set(&set));
        Self {
            frame: frame.clone(),
            masses: BTreeMap::from([(set, 1.0)]),
        }
    }

    /// Assembles a result whose validity the caller already guarantees.
    pub(crate) fn from_parts(frame: Frame, masses: BTreeMap<FocalSet, f64>) -> Self {
        let bba = Self { frame, masses };
        debug_assert!(bba.check_invariants().is_ok(), "{bba:?}");
        bba
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Mass of `set`, zero when it is not focal.
    pub fn mass_of(&self, set: &FocalSet) -> Result<f64> {
        if !self.frame.contains_set(set) {
            return Err(Error::FrameMismatch);
        }
        Ok(self.masses.get(set).copied().unwrap_or(0.0))
    }

    /// Focal elements with their masses, ordered by bit pattern.
    pub fn focal_elements(&self) -> impl ExactSizeIterator<Item = (&FocalSet, f64)> + '_ {
        self.masses.iter().map(|(s, m)| (s, *m))
    }

    pub fn focal_count(&self) -> usize {
        self.masses.len()
    }

    pub fn total_mass(&self) -> f64 {
        self.masses.values().sum()
    }

    /// True when every focal element is a singleton.
    pub fn is_bayesian(&self) -> bool {
        self.masses.keys().all(FocalSet::is_singleton)
    }

    pub(crate) fn ensure_same_frame(&self, other: &Bba) -> Result<()> {
        if self.frame == other.frame {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }

    /// Re-checks every structural invariant.
    pub fn check_invariants(&self) -> Result<()> {
        for (set, &mass) in &self.masses {
            if !self.frame.contains_set(set) {
                return Err(Error::FrameMismatch);
            }
            if !(mass > 0.0 && mass <= 1.0 + MASS_SUM_TOLERANCE) {
                return Err(Error::InvalidMass(mass));
            }
        }
        let total = self.total_mass();
        if sum_out_of_tolerance(total) {
            return Err(Error::MassSum(total));
        }
        Ok(())
    }
}
