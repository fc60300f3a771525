//! The validated algebra object shared by both contexts, plus element-level
//! operations and morphisms.
//!
//! An [`Algebra`] is a finite commutative monoid, optionally carrying an
//! additive group that makes it a commutative ring. All laws are checked
//! exhaustively at construction; afterwards the object is immutable and every
//! operation is a table lookup.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, LawViolation, Result};
use crate::ring::RingTables;

/// Index into the ordered carrier of an algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(u32);

impl ElementId {
    #[inline]
    pub const fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Kind {
    Monoid,
    Ring,
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Additive {
    add: Vec<ElementId>,
    neg: Vec<ElementId>,
    zero: ElementId,
    n: usize,
}

impl Additive {
    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        self.neg[a.index()]
    }

    #[inline]
    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn zero(&self) -> ElementId {
        self.zero
    }
}

/// Index and period of the power sequence `1, f, f^2, ...`: the least
/// `index >= 0` and `period >= 1` with `f^(index + period) = f^index`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PowerOrbit {
    pub index: usize,
    pub period: usize,
}

impl PowerOrbit {
    /// Exponent reached by `f^exp` once reduced into `0..index + period`.
    pub fn reduce(&self, exp: usize) -> usize {
        if exp < self.index {
            exp
        } else {
            self.index + (exp - self.index) % self.period
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Algebra {
    labels: Vec<String>,
    mul: Vec<ElementId>,
    unit: ElementId,
    additive: Option<Additive>,
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::Shape("carrier is empty".into()));
    }
    if labels.len() > u32::MAX as usize {
        return Err(Error::Shape("carrier too large to index".into()));
    }
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::Shape(format!("duplicate label `{l}`")));
        }
    }
    Ok(())
}

fn square_table(name: &str, table: &[Vec<usize>], n: usize) -> Result<Vec<ElementId>> {
    if table.len() != n {
        return Err(Error::Shape(format!(
            "{name} table has {} rows, expected {n}",
            table.len()
        )));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Shape(format!(
                "{name} table row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        for &e in row {
            out.push(in_range(name, e, n)?);
        }
    }
    Ok(out)
}

fn in_range(name: &str, e: usize, n: usize) -> Result<ElementId> {
    if e >= n {
        return Err(Error::Shape(format!(
            "{name} entry {e} outside carrier of size {n}"
        )));
    }
    Ok(ElementId::new(e))
}

impl Algebra {
    /// Validates a commutative monoid given by its multiplication table
    /// (`table[a][b] = a·b`, entries are carrier indices).
    pub fn monoid(labels: Vec<String>, table: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        let mul = square_table("multiplication", &table, n)?;
        let unit = in_range("unit", unit, n)?;
        let algebra = Algebra {
            labels,
            mul,
            unit,
            additive: None,
        };
        algebra.check_multiplicative_laws()?;
        Ok(algebra)
    }

    /// Validates a commutative ring.
    pub fn ring(tables: RingTables) -> Result<Self> {
        let RingTables {
            labels,
            add,
            neg,
            zero,
            mul,
            one,
        } = tables;
        check_labels(&labels)?;
        let n = labels.len();
        let add = square_table("addition", &add, n)?;
        if neg.len() != n {
            return Err(Error::Shape(format!(
                "negation table has {} entries, expected {n}",
                neg.len()
            )));
        }
        let neg = neg
            .into_iter()
            .map(|e| in_range("negation", e, n))
            .collect::<Result<Vec<_>>>()?;
        let zero = in_range("zero", zero, n)?;
        let mul = square_table("multiplication", &mul, n)?;
        let unit = in_range("unit", one, n)?;
        let algebra = Algebra {
            labels,
            mul,
            unit,
            additive: Some(Additive { add, neg, zero, n }),
        };
        algebra.check_additive_laws()?;
        algebra.check_multiplicative_laws()?;
        algebra.check_distributivity()?;
        Ok(algebra)
    }

    fn check_multiplicative_laws(&self) -> Result<()> {
        for a in self.elements() {
            if self.mul(self.unit, a) != a || self.mul(a, self.unit) != a {
                return Err(LawViolation::BadUnit(self.label(a).into()).into());
            }
        }
        for a in self.elements() {
            for b in self.elements().skip(a.index() + 1) {
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(LawViolation::NotCommutative(
                        self.label(a).into(),
                        self.label(b).into(),
                    )
                    .into());
                }
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(LawViolation::NotAssociative(
                            self.label(a).into(),
                            self.label(b).into(),
                            self.label(c).into(),
                        )
                        .into());
                    }
                }
            }
        }
        Ok(())
    }

    fn ring_violation(&self, law: &'static str, witnesses: &[ElementId]) -> Error {
        LawViolation::BadRingAxiom {
            law,
            witnesses: witnesses.iter().map(|&w| self.label(w).into()).collect(),
        }
        .into()
    }

    fn check_additive_laws(&self) -> Result<()> {
        let r = self.additive.as_ref().expect("ring");
        for a in self.elements() {
            if r.add(r.zero, a) != a {
                return Err(self.ring_violation("additive identity", &[a]));
            }
            if r.add(a, r.neg(a)) != r.zero {
                return Err(self.ring_violation("additive inverse", &[a]));
            }
            for b in self.elements() {
                if r.add(a, b) != r.add(b, a) {
                    return Err(self.ring_violation("additive commutativity", &[a, b]));
                }
                for c in self.elements() {
                    if r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) {
                        return Err(self.ring_violation("additive associativity", &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_distributivity(&self) -> Result<()> {
        let r = self.additive.as_ref().expect("ring");
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if self.mul(a, r.add(b, c)) != r.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(self.ring_violation("distributivity", &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: carriers are nonempty.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn kind(&self) -> Kind {
        if self.additive.is_some() {
            Kind::Ring
        } else {
            Kind::Monoid
        }
    }

    #[inline]
    pub fn is_ring(&self) -> bool {
        self.additive.is_some()
    }

    /// The additive structure, present iff this is a ring.
    #[inline]
    pub fn additive(&self) -> Option<&Additive> {
        self.additive.as_ref()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn label(&self, e: ElementId) -> &str {
        &self.labels[e.index()]
    }

    pub fn element(&self, label: &str) -> Option<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(ElementId::new)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.len()).map(ElementId::new)
    }

    #[inline]
    pub fn unit(&self) -> ElementId {
        self.unit
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a.index() * self.len() + b.index()]
    }

    /// The product of two elements. The same as [`Algebra::mul`]; kept under
    /// its own name since `(f ⊘ g) = (f).(g)` is a tested law.
    #[inline]
    pub fn oslash(&self, f: ElementId, g: ElementId) -> ElementId {
        self.mul(f, g)
    }

    pub fn pow(&self, f: ElementId, exp: usize) -> ElementId {
        let mut acc = self.unit;
        let mut base = f;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn power_orbit(&self, f: ElementId) -> PowerOrbit {
        let mut first_seen = vec![usize::MAX; self.len()];
        let mut current = self.unit;
        let mut exp = 0;
        loop {
            let seen = first_seen[current.index()];
            if seen != usize::MAX {
                return PowerOrbit {
                    index: seen,
                    period: exp - seen,
                };
            }
            first_seen[current.index()] = exp;
            current = self.mul(current, f);
            exp += 1;
        }
    }

    /// The distinct positive powers `f, f^2, ..., f^(index + period)`.
    pub fn powers(&self, f: ElementId) -> BitSet {
        let orbit = self.power_orbit(f);
        let mut out = BitSet::empty(self.len());
        let mut current = f;
        for _ in 0..orbit.index + orbit.period {
            out.insert(current.index());
            current = self.mul(current, f);
        }
        out
    }

    pub fn is_unit(&self, f: ElementId) -> bool {
        self.elements().any(|g| self.mul(f, g) == self.unit)
    }

    pub fn inverse(&self, f: ElementId) -> Option<ElementId> {
        self.elements().find(|&g| self.mul(f, g) == self.unit)
    }

    pub fn unit_group(&self) -> BitSet {
        BitSet::from_indices(
            self.len(),
            self.elements()
                .filter(|&f| self.is_unit(f))
                .map(ElementId::index),
        )
    }

    /// Smallest ideal containing `set`. In a monoid this is `A·set`; in a ring
    /// the additive subgroup generated by `A·set`.
    pub fn ideal_closure(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::empty(self.len());
        for a in set {
            let a = ElementId::new(a);
            for r in self.elements() {
                out.insert(self.mul(r, a).index());
            }
        }
        if let Some(additive) = &self.additive {
            out.insert(additive.zero.index());
            self.additive_closure(&mut out);
        }
        out
    }

    fn additive_closure(&self, set: &mut BitSet) {
        let r = self.additive.as_ref().expect("ring");
        let mut members: Vec<ElementId> = set.iter().map(ElementId::new).collect();
        let mut queue = members.clone();
        while let Some(x) = queue.pop() {
            let mut i = 0;
            while i < members.len() {
                let z = r.add(x, members[i]);
                if set.insert(z.index()) {
                    members.push(z);
                    queue.push(z);
                }
                i += 1;
            }
        }
    }

    /// Smallest subset containing `set` and the unit that is closed under
    /// multiplication, and under addition for rings.
    pub fn subobject_closure(&self, set: &BitSet) -> BitSet {
        let mut out = set.clone();
        out.insert(self.unit.index());
        if let Some(r) = &self.additive {
            out.insert(r.zero.index());
        }
        let mut members: Vec<ElementId> = out.iter().map(ElementId::new).collect();
        let mut queue = members.clone();
        while let Some(x) = queue.pop() {
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                let mut fresh = [Some(self.mul(x, y)), None];
                if let Some(r) = &self.additive {
                    fresh[1] = Some(r.add(x, y));
                }
                for z in fresh.into_iter().flatten() {
                    if out.insert(z.index()) {
                        members.push(z);
                        queue.push(z);
                    }
                }
                i += 1;
            }
        }
        out
    }

    /// The algebra induced on a subset closed under the operations, with the
    /// carrier order inherited.
    fn restrict(&self, members: &BitSet) -> Algebra {
        let old: Vec<ElementId> = members.iter().map(ElementId::new).collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (i, e) in old.iter().enumerate() {
            new_index[e.index()] = i;
        }
        let reindex = |e: ElementId| ElementId::new(new_index[e.index()]);
        let n = old.len();
        let table = |op: &dyn Fn(ElementId, ElementId) -> ElementId| {
            let mut t = Vec::with_capacity(n * n);
            for &a in &old {
                for &b in &old {
                    t.push(reindex(op(a, b)));
                }
            }
            t
        };
        let mul = table(&|a, b| self.mul(a, b));
        let additive = self.additive.as_ref().map(|r| Additive {
            add: table(&|a, b| r.add(a, b)),
            neg: old.iter().map(|&a| reindex(r.neg(a))).collect(),
            zero: reindex(r.zero),
            n,
        });
        Algebra {
            labels: old.iter().map(|&e| self.label(e).into()).collect(),
            mul,
            unit: reindex(self.unit),
            additive,
        }
    }

    /// Tables equal up to labels.
    pub fn same_tables(&self, other: &Algebra) -> bool {
        self.mul == other.mul && self.unit == other.unit && self.additive == other.additive
    }

    /// The smallest submonoid (subring for rings) containing `generators`.
    pub fn generated_subobject(self: &Arc<Self>, generators: &BitSet) -> Subalgebra {
        Subalgebra::new(self, self.subobject_closure(generators))
    }
}

/// A subset closed under the operations, materialized as its own algebra.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub members: BitSet,
    pub algebra: Arc<Algebra>,
    pub inclusion: Morphism,
}

impl Subalgebra {
    fn new(ambient: &Arc<Algebra>, members: BitSet) -> Self {
        let algebra = Arc::new(ambient.restrict(&members));
        let map = members.iter().map(ElementId::new).collect();
        let inclusion = Morphism {
            source: algebra.clone(),
            target: ambient.clone(),
            map,
        };
        Subalgebra {
            members,
            algebra,
            inclusion,
        }
    }

    /// Position of an ambient element inside the subalgebra carrier.
    pub fn locate(&self, e: ElementId) -> Option<ElementId> {
        if !self.members.contains(e.index()) {
            return None;
        }
        Some(ElementId::new(
            self.members.iter().take_while(|&m| m < e.index()).count(),
        ))
    }
}

/// A structure-preserving carrier map between two algebras of the same kind.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    map: Vec<ElementId>,
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.source, &other.source)
            && same_algebra(&self.target, &other.target)
            && self.map == other.map
    }
}

impl Eq for Morphism {}

/// Pointer identity, falling back to structural equality.
pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Morphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, map: Vec<ElementId>) -> Result<Self> {
        if source.kind() != target.kind() {
            return Err(Error::KindMismatch {
                expected: source.kind(),
                found: target.kind(),
            });
        }
        if map.len() != source.len() {
            return Err(Error::Shape(format!(
                "map has {} entries, source has {}",
                map.len(),
                source.len()
            )));
        }
        if let Some(bad) = map.iter().find(|e| e.index() >= target.len()) {
            return Err(Error::Shape(format!(
                "map entry {} outside target of size {}",
                bad.index(),
                target.len()
            )));
        }
        let morphism = Morphism {
            source,
            target,
            map,
        };
        morphism.check()?;
        Ok(morphism)
    }

    fn check(&self) -> Result<()> {
        let (s, t) = (&*self.source, &*self.target);
        let fail = |law, ws: &[ElementId]| Error::NotAMorphism {
            law,
            witnesses: ws.iter().map(|&w| s.label(w).into()).collect(),
        };
        if self.apply(s.unit()) != t.unit() {
            return Err(fail("the unit", &[s.unit()]));
        }
        for a in s.elements() {
            for b in s.elements() {
                if self.apply(s.mul(a, b)) != t.mul(self.apply(a), self.apply(b)) {
                    return Err(fail("multiplication", &[a, b]));
                }
                if let (Some(rs), Some(rt)) = (s.additive(), t.additive()) {
                    if self.apply(rs.add(a, b)) != rt.add(self.apply(a), self.apply(b)) {
                        return Err(fail("addition", &[a, b]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity(algebra: &Arc<Algebra>) -> Self {
        Morphism {
            source: algebra.clone(),
            target: algebra.clone(),
            map: algebra.elements().collect(),
        }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn map(&self) -> &[ElementId] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: ElementId) -> ElementId {
        self.map[a.index()]
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &Morphism) -> Result<Morphism> {
        if !same_algebra(&self.target, &then.source) {
            return Err(Error::MixedParents);
        }
        Ok(Morphism {
            source: self.source.clone(),
            target: then.target.clone(),
            map: self.map.iter().map(|&a| then.apply(a)).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BitSet::empty(self.target.len());
        self.map.iter().all(|e| seen.insert(e.index()))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().is_full()
    }

    pub fn image_set(&self) -> BitSet {
        BitSet::from_indices(self.target.len(), self.map.iter().map(|e| e.index()))
    }

    /// The set-image of the map as a subalgebra of the target, together with
    /// the corestriction `source -> image`.
    pub fn image(&self) -> (Subalgebra, Morphism) {
        let sub = Subalgebra::new(&self.target, self.image_set());
        let map = self
            .map
            .iter()
            .map(|&e| sub.locate(e).expect("image contains every value"))
            .collect();
        let corestriction = Morphism {
            source: self.source.clone(),
            target: sub.algebra.clone(),
            map,
        };
        (sub, corestriction)
    }
}
