//! Finite commutative rings, the classical context used as an oracle.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::algebra::{Algebra, ElementId, Kind};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::localization::{self, LocalizationResult};

/// Raw ring tables over carrier indices, as read from a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTables {
    pub labels: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub zero: usize,
    pub mul: Vec<Vec<usize>>,
    pub one: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing(Arc<Algebra>);

impl Deref for FiniteRing {
    type Target = Algebra;

    fn deref(&self) -> &Algebra {
        &self.0
    }
}

impl FiniteRing {
    pub fn new(tables: RingTables) -> Result<Self> {
        Self::new_with_limits(tables, &Limits::default())
    }

    pub fn new_with_limits(tables: RingTables, limits: &Limits) -> Result<Self> {
        check_size(tables.labels.len(), limits)?;
        Ok(FiniteRing(Arc::new(Algebra::ring(tables)?)))
    }

    pub fn from_algebra(algebra: Arc<Algebra>) -> Result<Self> {
        match algebra.kind() {
            Kind::Ring => Ok(FiniteRing(algebra)),
            found => Err(Error::KindMismatch {
                expected: Kind::Ring,
                found,
            }),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0
    }

    /// `Z/n`, labelled `0..n-1`.
    pub fn zmod(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("zmod needs n >= 1".into()));
        }
        let table = |op: fn(usize, usize) -> usize| {
            (0..n)
                .map(|a| (0..n).map(|b| op(a, b) % n).collect())
                .collect()
        };
        Self::new(RingTables {
            labels: (0..n).map(|a| format!("{a}")).collect(),
            add: table(|a, b| a + b),
            neg: (0..n).map(|a| (n - a) % n).collect(),
            zero: 0,
            mul: table(|a, b| a * b),
            one: 1 % n,
        })
    }

    /// Componentwise ring on `A × B`, pairs ordered with `A` major.
    pub fn product(&self, other: &FiniteRing) -> Result<FiniteRing> {
        let (n, m) = (self.len(), other.len());
        let (ra, rb) = (self.ring_ops(), other.ring_ops());
        let split = |x: usize| (ElementId::new(x / m), ElementId::new(x % m));
        let pair = |a: ElementId, b: ElementId| a.index() * m + b.index();
        let table = |op_a: &dyn Fn(ElementId, ElementId) -> ElementId,
                     op_b: &dyn Fn(ElementId, ElementId) -> ElementId| {
            (0..n * m)
                .map(|x| {
                    (0..n * m)
                        .map(|y| {
                            let ((xa, xb), (ya, yb)) = (split(x), split(y));
                            pair(op_a(xa, ya), op_b(xb, yb))
                        })
                        .collect()
                })
                .collect()
        };
        let mut labels = Vec::with_capacity(n * m);
        for a in self.elements() {
            for b in other.elements() {
                labels.push(format!("({},{})", self.label(a), other.label(b)));
            }
        }
        Self::new(RingTables {
            labels,
            add: table(&|a, b| ra.add(a, b), &|a, b| rb.add(a, b)),
            neg: (0..n * m)
                .map(|x| {
                    let (a, b) = split(x);
                    pair(ra.neg(a), rb.neg(b))
                })
                .collect(),
            zero: pair(ra.zero(), rb.zero()),
            mul: table(&|a, b| self.mul(a, b), &|a, b| other.mul(a, b)),
            one: pair(self.unit(), other.unit()),
        })
    }

    fn ring_ops(&self) -> &crate::algebra::Additive {
        self.additive().expect("FiniteRing carries addition")
    }

    /// Fractions `a / f^n`; the zero ring when `f` is nilpotent.
    pub fn localize(&self, f: ElementId) -> LocalizationResult {
        localization::at_element(&self.0, f)
    }

    pub fn localize_at_set(&self, set: &BitSet) -> LocalizationResult {
        localization::at_set(&self.0, set)
    }

    /// The smallest ideal containing `generators`.
    pub fn ideal_closure(&self, generators: &BitSet) -> BitSet {
        self.0.ideal_closure(generators)
    }
}

fn check_size(size: usize, limits: &Limits) -> Result<()> {
    if size > limits.ring_carrier {
        return Err(Error::CarrierTooLarge {
            size,
            cap: limits.ring_carrier,
        });
    }
    Ok(())
}
