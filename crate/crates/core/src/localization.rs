//! Localizations `A_f` and `S^-1 A` as algebras of fractions.
//!
//! Both contexts share one construction. A fraction is a pair
//! `(numerator, denominator)`; two fractions `a/s` and `b/t` are identified
//! when some witness `u` of the inverted part satisfies `u·a·t = u·b·s`
//! (monoids) or `u·(a·t - b·s) = 0` (rings). For `A_f` the witnesses are the
//! powers `f^k`, `k <= |A|`, which exhaust the power orbit; for `S^-1 A` they
//! are the members of the submonoid generated by `S`.
//!
//! Each class is named by its normal-form representative: least exponent
//! (resp. the unit denominator first), then least numerator.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{Algebra, ElementId, Morphism};
use crate::bitset::BitSet;
use crate::ring::RingTables;

/// A localization `w: A -> B` together with inverse witnesses.
#[derive(Clone, Debug)]
pub struct LocalizationResult {
    pub algebra: Arc<Algebra>,
    /// `w: A -> A_f` (resp. `A -> S^-1 A`), `a ↦ a/1`.
    pub map: Morphism,
    /// For each inverted element `s`, the class inverse to `w(s)`.
    pub inverses: Vec<(ElementId, ElementId)>,
    representatives: Vec<(ElementId, ElementId)>,
    witnesses: Vec<ElementId>,
}

struct Candidate {
    numerator: ElementId,
    denominator: ElementId,
    label: String,
}

struct Fractions<'a> {
    source: &'a Algebra,
    witnesses: Vec<ElementId>,
}

impl Fractions<'_> {
    fn equivalent(&self, (a, s): (ElementId, ElementId), (b, t): (ElementId, ElementId)) -> bool {
        let alg = self.source;
        let at = alg.mul(a, t);
        let bs = alg.mul(b, s);
        match alg.additive() {
            None => self
                .witnesses
                .iter()
                .any(|&u| alg.mul(u, at) == alg.mul(u, bs)),
            Some(r) => {
                let diff = r.sub(at, bs);
                self.witnesses.iter().any(|&u| alg.mul(u, diff) == r.zero())
            }
        }
    }

    fn class_of(
        &self,
        reps: &[(ElementId, ElementId)],
        fraction: (ElementId, ElementId),
    ) -> Option<usize> {
        reps.iter().position(|&r| self.equivalent(r, fraction))
    }
}

impl LocalizationResult {
    pub fn source(&self) -> &Arc<Algebra> {
        self.map.source()
    }

    /// Normal-form `(numerator, denominator)` of a class.
    pub fn representative(&self, class: ElementId) -> (ElementId, ElementId) {
        self.representatives[class.index()]
    }

    /// The class of `numerator / denominator`, if the pair is a fraction of
    /// this localization.
    pub fn class_of(&self, numerator: ElementId, denominator: ElementId) -> Option<ElementId> {
        let fractions = Fractions {
            source: self.source(),
            witnesses: self.witnesses.clone(),
        };
        // the denominator must become invertible
        let den_class =
            fractions.class_of(&self.representatives, (denominator, self.source().unit()))?;
        if !self.algebra.is_unit(ElementId::new(den_class)) {
            return None;
        }
        fractions
            .class_of(&self.representatives, (numerator, denominator))
            .map(ElementId::new)
    }

    pub fn inverse_of(&self, s: ElementId) -> Option<ElementId> {
        self.inverses
            .iter()
            .find(|&&(t, _)| t == s)
            .map(|&(_, inv)| inv)
    }
}

/// `A_f`: fractions `a / f^n` for `n <= index + period` of the power orbit.
pub fn at_element(source: &Arc<Algebra>, f: ElementId) -> LocalizationResult {
    let orbit = source.power_orbit(f);
    let witnesses = (0..=source.len()).map(|k| source.pow(f, k)).collect();
    let mut candidates = Vec::new();
    for n in 0..=orbit.index + orbit.period {
        let denominator = source.pow(f, n);
        for a in source.elements() {
            let label = if n == 0 {
                source.label(a).into()
            } else {
                format!("{}/{}^{n}", source.label(a), source.label(f))
            };
            candidates.push(Candidate {
                numerator: a,
                denominator,
                label,
            });
        }
    }
    build(source, candidates, witnesses, &[f])
}

/// `S^-1 A` for the submonoid generated by `set` (and the unit).
pub fn at_set(source: &Arc<Algebra>, set: &BitSet) -> LocalizationResult {
    let closed = multiplicative_closure(source, set);
    let unit = source.unit();
    let mut denominators: Vec<ElementId> = closed.iter().map(ElementId::new).collect();
    denominators.sort_by_key(|&s| (s != unit, s));
    let mut candidates = Vec::new();
    for &s in &denominators {
        for a in source.elements() {
            let label = if s == unit {
                source.label(a).into()
            } else {
                format!("{}/{}", source.label(a), source.label(s))
            };
            candidates.push(Candidate {
                numerator: a,
                denominator: s,
                label,
            });
        }
    }
    build(source, candidates, denominators.clone(), &denominators)
}

/// Submonoid generated by `set`, always containing the unit.
pub fn multiplicative_closure(source: &Algebra, set: &BitSet) -> BitSet {
    let mut out = set.clone();
    out.insert(source.unit().index());
    loop {
        let members: Vec<ElementId> = out.iter().map(ElementId::new).collect();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                grew |= out.insert(source.mul(a, b).index());
            }
        }
        if !grew {
            return out;
        }
    }
}

fn build(
    source: &Arc<Algebra>,
    candidates: Vec<Candidate>,
    witnesses: Vec<ElementId>,
    inverted: &[ElementId],
) -> LocalizationResult {
    let fractions = Fractions { source, witnesses };
    let mut reps: Vec<(ElementId, ElementId)> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    for c in candidates {
        let fraction = (c.numerator, c.denominator);
        if fractions.class_of(&reps, fraction).is_none() {
            reps.push(fraction);
            labels.push(c.label);
        }
    }
    let class = |fraction| {
        fractions
            .class_of(&reps, fraction)
            .expect("fractions are closed under the operations")
    };
    let unit = source.unit();
    let table =
        |op: &dyn Fn((ElementId, ElementId), (ElementId, ElementId)) -> (ElementId, ElementId)| {
            reps.iter()
                .map(|&x| reps.iter().map(|&y| class(op(x, y))).collect())
                .collect::<Vec<Vec<usize>>>()
        };
    let mul = table(&|(a, s), (b, t)| (source.mul(a, b), source.mul(s, t)));
    let one = class((unit, unit));
    let algebra = match source.additive() {
        None => Algebra::monoid(labels, mul, one),
        Some(r) => Algebra::ring(RingTables {
            add: table(&|(a, s), (b, t)| {
                (r.add(source.mul(a, t), source.mul(b, s)), source.mul(s, t))
            }),
            neg: reps.iter().map(|&(a, s)| class((r.neg(a), s))).collect(),
            zero: class((r.zero(), unit)),
            labels,
            mul,
            one,
        }),
    }
    .expect("fraction tables satisfy the algebra laws");
    let algebra = Arc::new(algebra);
    let map = Morphism::new(
        source.clone(),
        algebra.clone(),
        source
            .elements()
            .map(|a| ElementId::new(class((a, unit))))
            .collect(),
    )
    .expect("a ↦ a/1 is a morphism");
    let inverses = inverted
        .iter()
        .map(|&s| (s, ElementId::new(class((unit, s)))))
        .collect();
    LocalizationResult {
        algebra,
        map,
        inverses,
        representatives: reps,
        witnesses: fractions.witnesses,
    }
}
