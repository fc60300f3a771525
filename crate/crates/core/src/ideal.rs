//! Ideals of a validated algebra and the operations on them.
//!
//! An ideal is a subset of the carrier closed under multiplication by every
//! element; in a ring it is also an additive subgroup. In the monoid context
//! the empty set is an ideal, and it is always prime there.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::algebra::{same_algebra, Algebra, ElementId, Kind, Morphism};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::localization::LocalizationResult;

#[derive(Clone)]
pub struct Ideal {
    parent: Arc<Algebra>,
    members: BitSet,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_algebra(&self.parent, &other.parent)
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|e| self.parent.label(e)))
            .finish()
    }
}

impl Ideal {
    /// Checks that `members` is closed under the ambient action.
    pub fn new(parent: Arc<Algebra>, members: BitSet) -> Result<Self> {
        if members.universe() != parent.len() {
            return Err(Error::Shape(format!(
                "subset over {} elements, carrier has {}",
                members.universe(),
                parent.len()
            )));
        }
        if parent.ideal_closure(&members) != members {
            return Err(Error::InvalidArgument(
                "subset is not closed under the ambient action".into(),
            ));
        }
        Ok(Ideal { parent, members })
    }

    pub(crate) fn from_closed(parent: Arc<Algebra>, members: BitSet) -> Self {
        debug_assert_eq!(parent.ideal_closure(&members), members);
        Ideal { parent, members }
    }

    /// Smallest ideal containing `generators`.
    pub fn generated<I>(parent: &Arc<Algebra>, generators: I) -> Self
    where
        I: IntoIterator<Item = ElementId>,
    {
        let set = BitSet::from_indices(parent.len(), generators.into_iter().map(ElementId::index));
        Ideal {
            members: parent.ideal_closure(&set),
            parent: parent.clone(),
        }
    }

    pub fn principal(parent: &Arc<Algebra>, f: ElementId) -> Self {
        Self::generated(parent, [f])
    }

    pub fn whole(parent: &Arc<Algebra>) -> Self {
        Ideal {
            members: BitSet::full(parent.len()),
            parent: parent.clone(),
        }
    }

    /// The least ideal: empty for monoids, `{0}` for rings.
    pub fn bottom(parent: &Arc<Algebra>) -> Self {
        Self::generated(parent, [])
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.members.contains(e.index())
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter().map(ElementId::new)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.members.is_full()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.iter().map(|e| self.parent.label(e)).collect()
    }

    fn same_parent(&self, other: &Ideal) -> Result<()> {
        if same_algebra(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::MixedParents)
        }
    }

    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        self.same_parent(other)?;
        Ok(self.members.is_subset(&other.members))
    }

    /// `q.q'`: the ideal generated by all products `a·b`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_parent(other)?;
        let alg = &*self.parent;
        let mut raw = BitSet::empty(alg.len());
        for a in self.iter() {
            for b in other.iter() {
                raw.insert(alg.mul(a, b).index());
            }
        }
        Ok(Ideal {
            members: alg.ideal_closure(&raw),
            parent: self.parent.clone(),
        })
    }

    /// `q^n` for `n >= 1`; `q^0` is the whole algebra.
    pub fn power(&self, n: usize) -> Ideal {
        let mut acc = Ideal::whole(&self.parent);
        for _ in 0..n {
            acc = acc.product(self).expect("same parent");
        }
        acc
    }

    /// The ideal generated by `q ∪ q'` (the sum, for rings).
    pub fn join(&self, other: &Ideal) -> Result<Ideal> {
        self.same_parent(other)?;
        Ok(Ideal {
            members: self
                .parent
                .ideal_closure(&self.members.union(&other.members)),
            parent: self.parent.clone(),
        })
    }

    pub fn meet(&self, other: &Ideal) -> Result<Ideal> {
        self.same_parent(other)?;
        Ok(Ideal::from_closed(
            self.parent.clone(),
            self.members.intersection(&other.members),
        ))
    }

    /// `f⁻¹q = {a : f·a ∈ q}`, the largest ideal that `f` multiplies into `q`.
    pub fn transporter(&self, f: ElementId) -> Ideal {
        let alg = &*self.parent;
        let members = BitSet::from_indices(
            alg.len(),
            alg.elements()
                .filter(|&a| self.contains(alg.mul(f, a)))
                .map(ElementId::index),
        );
        Ideal::from_closed(self.parent.clone(), members)
    }

    /// Elements with some positive power in `q`. Powers up to
    /// `index + period` of each element's power orbit exhaust all of them.
    pub fn radical(&self) -> Ideal {
        let alg = &*self.parent;
        let members = BitSet::from_indices(
            alg.len(),
            alg.elements()
                .filter(|&a| alg.powers(a).iter().any(|p| self.members.contains(p)))
                .map(ElementId::index),
        );
        Ideal::from_closed(self.parent.clone(), members)
    }

    /// The intersection of the primes containing `q`; the whole algebra when
    /// there are none.
    pub fn radical_by_primes(&self, limits: &Limits) -> Result<Ideal> {
        let mut members = BitSet::full(self.parent.len());
        for p in enumerate_primes(&self.parent, limits)? {
            if self.members.is_subset(&p.members) {
                members.intersect_with(&p.members);
            }
        }
        Ok(Ideal::from_closed(self.parent.clone(), members))
    }

    /// Proper, and the complement is closed under multiplication.
    pub fn is_prime(&self) -> bool {
        if self.is_whole() {
            return false;
        }
        let alg = &*self.parent;
        let outside: Vec<ElementId> = self
            .members
            .complement()
            .iter()
            .map(ElementId::new)
            .collect();
        outside
            .iter()
            .all(|&a| outside.iter().all(|&b| !self.contains(alg.mul(a, b))))
    }

    /// A generating family, scanning the carrier in order and keeping each
    /// element not already generated by the previous ones.
    pub fn generators(&self) -> Vec<ElementId> {
        let mut chosen = Vec::new();
        let mut reached = Ideal::bottom(&self.parent);
        for a in self.iter() {
            if !reached.contains(a) {
                chosen.push(a);
                reached = Ideal::generated(&self.parent, chosen.iter().copied());
            }
        }
        chosen
    }

    /// The ideal generated in the target by `u(q)`.
    pub fn image(&self, u: &Morphism) -> Result<Ideal> {
        if !same_algebra(&self.parent, u.source()) {
            return Err(Error::MixedParents);
        }
        Ok(Ideal::generated(
            u.target(),
            self.iter().map(|a| u.apply(a)),
        ))
    }

    /// `q_f` in `A_f`. Computed as the classes of the fractions `a / f^n`,
    /// `a ∈ q`, and as the image ideal along `A -> A_f`; the two must agree.
    pub fn localize(&self, f: ElementId) -> Result<(LocalizationResult, Ideal)> {
        let loc = crate::localization::at_element(&self.parent, f);
        let ideal = self.localize_in(&loc)?;
        Ok((loc, ideal))
    }

    /// `q` transported into an existing localization of its parent.
    pub fn localize_in(&self, loc: &LocalizationResult) -> Result<Ideal> {
        if !same_algebra(&self.parent, loc.source()) {
            return Err(Error::MixedParents);
        }
        let alg = &*self.parent;
        let target = &loc.algebra;
        let mut by_classes = BitSet::empty(target.len());
        for &(s, _) in &loc.inverses {
            let orbit = alg.power_orbit(s);
            for n in 0..=orbit.index + orbit.period {
                let den = alg.pow(s, n);
                for a in self.iter() {
                    if let Some(c) = loc.class_of(a, den) {
                        by_classes.insert(c.index());
                    }
                }
            }
        }
        let by_classes = Ideal::new(target.clone(), by_classes)?;
        let by_image = self.image(&loc.map)?;
        if by_classes != by_image {
            return Err(Error::Inconsistent(format!(
                "localized ideal {by_classes:?} differs from image ideal {by_image:?}"
            )));
        }
        Ok(by_image)
    }
}

/// A proper ideal with multiplicatively closed complement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimeIdeal(Ideal);

impl PrimeIdeal {
    pub fn new(ideal: Ideal) -> Option<Self> {
        ideal.is_prime().then_some(PrimeIdeal(ideal))
    }

    pub fn ideal(&self) -> &Ideal {
        &self.0
    }

    pub fn into_ideal(self) -> Ideal {
        self.0
    }
}

impl Deref for PrimeIdeal {
    type Target = Ideal;

    fn deref(&self) -> &Ideal {
        &self.0
    }
}

/// Every ideal, ordered by bitset value.
///
/// The lattice is walked upward from the least ideal by joining one
/// principal ideal at a time; every ideal is a finite join of principals, so
/// the walk reaches all of them.
pub fn enumerate_ideals(parent: &Arc<Algebra>, limits: &Limits) -> Result<Vec<Ideal>> {
    limits.check_enumeration(parent)?;
    let principals: Vec<BitSet> = parent
        .elements()
        .map(|f| Ideal::principal(parent, f).members)
        .collect();
    let bottom = Ideal::bottom(parent).members;
    let mut seen = BTreeSet::new();
    seen.insert(bottom.clone());
    let mut queue = VecDeque::from([bottom]);
    while let Some(current) = queue.pop_front() {
        for f in parent.elements() {
            if current.contains(f.index()) {
                continue;
            }
            let joined = current.union(&principals[f.index()]);
            let next = match parent.kind() {
                Kind::Monoid => joined,
                Kind::Ring => parent.ideal_closure(&joined),
            };
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|m| Ideal::from_closed(parent.clone(), m))
        .collect())
}

/// Every proper prime, ordered by bitset value.
///
/// For monoids the complements are enumerated directly: a complement of a
/// prime is a face, a submonoid `F` with `a·b ∈ F ⇒ a, b ∈ F`. The face
/// generated by a set is the set of divisors of the submonoid it generates,
/// and faces are walked upward from the unit group. Rings filter the ideal
/// lattice.
pub fn enumerate_primes(parent: &Arc<Algebra>, limits: &Limits) -> Result<Vec<PrimeIdeal>> {
    limits.check_enumeration(parent)?;
    let primes: BTreeSet<BitSet> = match parent.kind() {
        Kind::Ring => enumerate_ideals(parent, limits)?
            .into_iter()
            .filter(Ideal::is_prime)
            .map(|q| q.members)
            .collect(),
        Kind::Monoid => {
            let start = face_closure(parent, &BitSet::empty(parent.len()));
            let mut faces = BTreeSet::new();
            faces.insert(start.clone());
            let mut queue = VecDeque::from([start]);
            while let Some(face) = queue.pop_front() {
                for a in face.complement().iter() {
                    let mut grown = face.clone();
                    grown.insert(a);
                    let next = face_closure(parent, &grown);
                    if !faces.contains(&next) {
                        faces.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
            faces.iter().map(BitSet::complement).collect()
        }
    };
    Ok(primes
        .into_iter()
        .map(|m| PrimeIdeal(Ideal::from_closed(parent.clone(), m)))
        .collect())
}

fn face_closure(parent: &Algebra, set: &BitSet) -> BitSet {
    let generated = crate::localization::multiplicative_closure(parent, set);
    BitSet::from_indices(
        parent.len(),
        parent
            .elements()
            .filter(|&a| {
                parent
                    .elements()
                    .any(|b| generated.contains(parent.mul(a, b).index()))
            })
            .map(ElementId::index),
    )
}
