//! Finite commutative monoids in sets: constructors and localizations.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::algebra::{Algebra, ElementId, Kind};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::localization::{self, LocalizationResult};

/// An [`Algebra`] known to carry no additive structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid(Arc<Algebra>);

impl Deref for FiniteMonoid {
    type Target = Algebra;

    fn deref(&self) -> &Algebra {
        &self.0
    }
}

fn power_label(exp: usize) -> String {
    match exp {
        0 => "1".into(),
        1 => "x".into(),
        _ => format!("x{exp}"),
    }
}

impl FiniteMonoid {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        Ok(FiniteMonoid(Arc::new(Algebra::monoid(
            labels, table, unit,
        )?)))
    }

    pub fn from_algebra(algebra: Arc<Algebra>) -> Result<Self> {
        match algebra.kind() {
            Kind::Monoid => Ok(FiniteMonoid(algebra)),
            found => Err(Error::KindMismatch {
                expected: Kind::Monoid,
                found,
            }),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0
    }

    pub fn trivial() -> Self {
        Self::cyclic(0, 1).expect("period is positive")
    }

    /// `{1, e}` with `e·e = e`.
    pub fn idem() -> Self {
        Self::cyclic(1, 1).expect("period is positive")
    }

    /// `⟨x | x^(index+period) = x^index⟩` on the carrier `1, x, ..., x^(index+period-1)`.
    pub fn cyclic(index: usize, period: usize) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidArgument(
                "cyclic monoid needs period >= 1".into(),
            ));
        }
        let n = index + period;
        let reduce = |e: usize| {
            if e < index {
                e
            } else {
                index + (e - index) % period
            }
        };
        let table = (0..n)
            .map(|i| (0..n).map(|j| reduce(i + j)).collect())
            .collect();
        Self::new((0..n).map(power_label).collect(), table, 0)
    }

    /// Componentwise product on `A × B`, pairs ordered with `A` major.
    pub fn direct_product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let (n, m) = (self.len(), other.len());
        let pair = |a: usize, b: usize| a * m + b;
        let mut labels = Vec::with_capacity(n * m);
        for a in self.elements() {
            for b in other.elements() {
                labels.push(format!("({},{})", self.label(a), other.label(b)));
            }
        }
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| {
                        let a = self.mul(ElementId::new(x / m), ElementId::new(y / m));
                        let b = other.mul(ElementId::new(x % m), ElementId::new(y % m));
                        pair(a.index(), b.index())
                    })
                    .collect()
            })
            .collect();
        let unit = pair(self.unit().index(), other.unit().index());
        Self::new(labels, table, unit).expect("product of monoids is a monoid")
    }

    /// `A ∪ {0}` with `0` absorbing; the new element comes last.
    pub fn adjoin_zero(&self) -> FiniteMonoid {
        let n = self.len();
        let mut zero_label = String::from("0");
        while self.element(&zero_label).is_some() {
            zero_label.push('\'');
        }
        let mut labels: Vec<String> = self.labels().to_vec();
        labels.push(zero_label.to_string());
        let table = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if i == n || j == n {
                            n
                        } else {
                            self.mul(ElementId::new(i), ElementId::new(j)).index()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(labels, table, self.unit().index()).expect("adjoining a zero keeps the laws")
    }

    /// The colimit of `A -f-> A -f-> ...`, realized on fractions `a / f^n`.
    pub fn localize_at_element(&self, f: ElementId) -> LocalizationResult {
        localization::at_element(&self.0, f)
    }

    /// Fractions `a / s` with `s` in the submonoid generated by `set`.
    pub fn localize_at_set(&self, set: &BitSet) -> LocalizationResult {
        localization::at_set(&self.0, set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn e(i: usize) -> ElementId {
        ElementId::new(i)
    }

    #[test]
    fn cyclic_constructors() {
        assert_eq!(FiniteMonoid::cyclic(0, 1).unwrap().len(), 1);
        let c3 = FiniteMonoid::cyclic(2, 1).unwrap();
        assert_eq!(c3.labels(), ["1", "x", "x2"]);
        assert_eq!(c3.mul(e(1), e(2)), e(2));
        assert_eq!(c3.mul(e(2), e(2)), e(2));
        let twisted = FiniteMonoid::cyclic(1, 2).unwrap();
        // x^3 = x
        assert_eq!(twisted.mul(e(1), e(2)), e(1));
        assert_eq!(twisted.mul(e(2), e(2)), e(2));
        assert!(matches!(
            FiniteMonoid::cyclic(3, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn products() {
        let c3 = FiniteMonoid::cyclic(2, 1).unwrap();
        let with_trivial = c3.direct_product(&FiniteMonoid::trivial());
        assert!(with_trivial.same_tables(&c3));

        let idem = FiniteMonoid::idem();
        let m2 = idem.direct_product(&idem);
        assert_eq!(m2.len(), 4);
        assert!(m2.elements().all(|a| m2.mul(a, a) == a));
        assert_eq!(c3.direct_product(&idem).len(), 6);
    }

    #[test]
    fn adjoined_zero_absorbs() {
        let t0 = FiniteMonoid::trivial().adjoin_zero();
        assert_eq!(t0.labels(), ["1", "0"]);
        let i0 = FiniteMonoid::idem().adjoin_zero();
        assert_eq!(i0.labels(), ["1", "x", "0"]);
        let c30 = FiniteMonoid::cyclic(2, 1).unwrap().adjoin_zero();
        assert_eq!(c30.len(), 4);
        let zero = c30.element("0").unwrap();
        assert!(c30.elements().all(|a| c30.mul(a, zero) == zero));
        let twice = c30.adjoin_zero();
        assert_eq!(twice.labels()[4], "0'");
    }

    #[test]
    fn localizations_at_elements() {
        let c3 = FiniteMonoid::cyclic(2, 1).unwrap();
        let at_unit = c3.localize_at_element(c3.unit());
        assert!(at_unit.algebra.same_tables(&c3));
        assert_eq!(at_unit.map.map(), &[e(0), e(1), e(2)]);

        let at_x = c3.localize_at_element(e(1));
        assert_eq!(at_x.algebra.len(), 1);
        let idem = FiniteMonoid::idem();
        assert_eq!(idem.localize_at_element(e(1)).algebra.len(), 1);

        // localizing at an absorbing zero collapses everything
        let i0 = idem.adjoin_zero();
        assert_eq!(
            i0.localize_at_element(i0.element("0").unwrap())
                .algebra
                .len(),
            1
        );
    }

    #[test]
    fn localizations_at_sets() {
        let c3 = FiniteMonoid::cyclic(2, 1).unwrap();
        let trivial_set = c3.localize_at_set(&BitSet::singleton(3, 0));
        assert!(trivial_set.algebra.same_tables(&c3));
        let units = c3.localize_at_set(&c3.unit_group());
        assert!(units.algebra.same_tables(&c3));
        let all = c3.localize_at_set(&BitSet::full(3));
        assert_eq!(all.algebra.len(), 1);
        // empty input is closed to {1}
        assert_eq!(c3.localize_at_set(&BitSet::empty(3)).algebra.len(), 3);
    }

    #[test]
    fn inverse_witnesses() {
        let m = FiniteMonoid::cyclic(1, 2)
            .unwrap()
            .direct_product(&FiniteMonoid::idem());
        for f in m.elements() {
            let loc = m.localize_at_element(f);
            for &(s, inv) in &loc.inverses {
                assert_eq!(loc.algebra.mul(loc.map.apply(s), inv), loc.algebra.unit());
            }
        }
        let _ = vec![0];
    }
}
