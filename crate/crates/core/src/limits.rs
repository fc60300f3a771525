use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};

/// Enumeration bounds. Every exhaustive routine checks the relevant bound
/// before it starts and fails with [`Error::CarrierTooLarge`] past it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest monoid whose ideals may be enumerated.
    pub monoid_enumeration: usize,
    /// Largest ring whose ideals may be enumerated.
    pub ring_enumeration: usize,
    /// Largest ring accepted by the ring constructors.
    pub ring_carrier: usize,
    /// Largest carrier on which the comparison oracles scan every subset.
    pub oracle_subsets: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            monoid_enumeration: 12,
            ring_enumeration: 32,
            ring_carrier: 64,
            oracle_subsets: 20,
        }
    }
}

impl Limits {
    /// Same enumeration cap for both contexts.
    pub fn with_enumeration_cap(self, cap: usize) -> Self {
        Limits {
            monoid_enumeration: cap,
            ring_enumeration: cap,
            ..self
        }
    }

    pub fn enumeration_cap(&self, kind: Kind) -> usize {
        match kind {
            Kind::Monoid => self.monoid_enumeration,
            Kind::Ring => self.ring_enumeration,
        }
    }

    pub(crate) fn check_enumeration(&self, algebra: &Algebra) -> Result<()> {
        let cap = self.enumeration_cap(algebra.kind());
        if algebra.len() > cap {
            return Err(Error::CarrierTooLarge {
                size: algebra.len(),
                cap,
            });
        }
        Ok(())
    }

    pub(crate) fn check_oracle(&self, algebra: &Algebra) -> Result<()> {
        let cap = self.oracle_subsets.min(63);
        if algebra.len() > cap {
            return Err(Error::CarrierTooLarge {
                size: algebra.len(),
                cap,
            });
        }
        Ok(())
    }
}
