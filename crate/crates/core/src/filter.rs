//! Gabriel filters, carried symbolically by a generating ideal whenever
//! possible and expanded to explicit ideal sets under the enumeration cap.
//!
//! * `Primitive(q)`: the smallest filter containing `q`, i.e. the ideals
//!   containing some power `q^n`.
//! * `LocallyPrimitive(q)`: the intersection of the `G_f`, `f ∈ q`, i.e. the
//!   ideals containing a power of every element of `q`.
//! * `Extensional(members)`: an explicit, audited set of ideals.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{same_algebra, Algebra, ElementId};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, enumerate_primes, Ideal, PrimeIdeal};
use crate::limits::Limits;
use crate::localization;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterForm {
    Primitive(Ideal),
    LocallyPrimitive(Ideal),
    /// Sorted by bitset value, without duplicates.
    Extensional(Vec<Ideal>),
}

#[derive(Clone, Debug)]
pub struct GabrielFilter {
    parent: Arc<Algebra>,
    form: FilterForm,
}

/// First failure found by [`axioms_audit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuditViolation {
    Empty,
    MissingWhole,
    NotFiltered {
        member: Ideal,
        superset: Ideal,
    },
    NotTransporterClosed {
        member: Ideal,
        element: String,
        transporter: Ideal,
    },
    NotCommutative {
        left: Ideal,
        right: Ideal,
        product: Ideal,
    },
    NotFiniteType {
        member: Ideal,
    },
    /// `candidate` is not a member although `f⁻¹(candidate)` is one for
    /// every `f` in `member`.
    LocalCharacter {
        member: Ideal,
        candidate: Ideal,
    },
}

impl fmt::Display for AuditViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditViolation::Empty => f.write_str("the set of ideals is empty"),
            AuditViolation::MissingWhole => f.write_str("the whole algebra is not a member"),
            AuditViolation::NotFiltered { member, superset } => {
                write!(f, "not filtered: {member:?} is a member but {superset:?} ⊇ it is not")
            }
            AuditViolation::NotTransporterClosed {
                member,
                element,
                transporter,
            } => write!(
                f,
                "not closed under transporters: {element}⁻¹{member:?} = {transporter:?} is not a member"
            ),
            AuditViolation::NotCommutative {
                left,
                right,
                product,
            } => write!(
                f,
                "not commutative: {left:?}.{right:?} = {product:?} is not a member"
            ),
            AuditViolation::NotFiniteType { member } => {
                write!(f, "member {member:?} contains no finitely generated member")
            }
            AuditViolation::LocalCharacter { member, candidate } => write!(
                f,
                "every f in {member:?} has f⁻¹{candidate:?} in the set, but {candidate:?} is not a member"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub members: usize,
    pub violation: Option<AuditViolation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks a set of ideals against the Gabriel filter axioms: the whole
/// algebra is a member, members are closed under every transporter `f⁻¹q`,
/// and the local-character axiom, both directly and in the equivalent form
/// nonempty + filtered + commutative + finite type.
pub fn axioms_audit(
    parent: &Arc<Algebra>,
    candidate: &[Ideal],
    limits: &Limits,
) -> Result<AuditReport> {
    let all = enumerate_ideals(parent, limits)?;
    if candidate.iter().any(|q| !same_algebra(q.parent(), parent)) {
        return Err(Error::MixedParents);
    }
    let member_sets: alloc::collections::BTreeSet<&BitSet> =
        candidate.iter().map(Ideal::members).collect();
    let is_member = |q: &Ideal| member_sets.contains(q.members());
    let report = |violation| {
        Ok(AuditReport {
            members: member_sets.len(),
            violation,
        })
    };
    if candidate.is_empty() {
        return report(Some(AuditViolation::Empty));
    }
    if !is_member(&Ideal::whole(parent)) {
        return report(Some(AuditViolation::MissingWhole));
    }
    for q in candidate {
        for r in &all {
            if q.members().is_subset(r.members()) && !is_member(r) {
                return report(Some(AuditViolation::NotFiltered {
                    member: q.clone(),
                    superset: r.clone(),
                }));
            }
        }
    }
    for q in candidate {
        for f in parent.elements() {
            let t = q.transporter(f);
            if !is_member(&t) {
                return report(Some(AuditViolation::NotTransporterClosed {
                    member: q.clone(),
                    element: parent.label(f).into(),
                    transporter: t,
                }));
            }
        }
    }
    for q in candidate {
        for r in candidate {
            let p = q.product(r)?;
            if !is_member(&p) {
                return report(Some(AuditViolation::NotCommutative {
                    left: q.clone(),
                    right: r.clone(),
                    product: p,
                }));
            }
        }
    }
    for q in candidate {
        if !has_finitely_generated_member_below(q, &is_member) {
            return report(Some(AuditViolation::NotFiniteType { member: q.clone() }));
        }
    }
    for q in candidate {
        for r in &all {
            if !is_member(r) && q.iter().all(|f| is_member(&r.transporter(f))) {
                return report(Some(AuditViolation::LocalCharacter {
                    member: q.clone(),
                    candidate: r.clone(),
                }));
            }
        }
    }
    report(None)
}

fn has_finitely_generated_member_below(q: &Ideal, is_member: &dyn Fn(&Ideal) -> bool) -> bool {
    // carriers are finite, so the generating family is finite
    let generated = Ideal::generated(q.parent(), q.generators());
    generated.members().is_subset(q.members()) && is_member(&generated)
}

impl GabrielFilter {
    pub fn primitive(q: Ideal) -> Self {
        GabrielFilter {
            parent: q.parent().clone(),
            form: FilterForm::Primitive(q),
        }
    }

    pub fn locally_primitive(q: Ideal) -> Self {
        GabrielFilter {
            parent: q.parent().clone(),
            form: FilterForm::LocallyPrimitive(q),
        }
    }

    /// An explicit filter; rejected unless it passes [`axioms_audit`].
    pub fn extensional(
        parent: &Arc<Algebra>,
        members: Vec<Ideal>,
        limits: &Limits,
    ) -> Result<Self> {
        let report = axioms_audit(parent, &members, limits)?;
        if let Some(v) = report.violation {
            return Err(Error::InvalidArgument(alloc::format!(
                "not a Gabriel filter: {v}"
            )));
        }
        Ok(Self::extensional_unchecked(parent, members))
    }

    fn extensional_unchecked(parent: &Arc<Algebra>, mut members: Vec<Ideal>) -> Self {
        members.sort_by(|a, b| a.members().cmp(b.members()));
        members.dedup();
        GabrielFilter {
            parent: parent.clone(),
            form: FilterForm::Extensional(members),
        }
    }

    /// `G_f`: the ideals containing a power of `f`.
    pub fn of_element(parent: &Arc<Algebra>, f: ElementId) -> Self {
        Self::primitive(Ideal::principal(parent, f))
    }

    /// `G_S`: the union of the `G_f` over the submonoid generated by `set`.
    pub fn of_multiplicative_set(
        parent: &Arc<Algebra>,
        set: &BitSet,
        limits: &Limits,
    ) -> Result<Self> {
        let closed = localization::multiplicative_closure(parent, set);
        let filters: Vec<GabrielFilter> = closed
            .iter()
            .map(|f| Self::of_element(parent, ElementId::new(f)))
            .collect();
        let mut members = Vec::new();
        for q in enumerate_ideals(parent, limits)? {
            let mut inside = false;
            for g in &filters {
                if g.contains(&q)? {
                    inside = true;
                    break;
                }
            }
            if inside {
                members.push(q);
            }
        }
        Ok(Self::extensional_unchecked(parent, members))
    }

    /// The ideals `q` whose localization `q_f` is the unit ideal of `A_f`.
    pub fn of_localization(parent: &Arc<Algebra>, f: ElementId, limits: &Limits) -> Result<Self> {
        let loc = localization::at_element(parent, f);
        let mut members = Vec::new();
        for q in enumerate_ideals(parent, limits)? {
            if q.localize_in(&loc)?.is_whole() {
                members.push(q);
            }
        }
        Ok(Self::extensional_unchecked(parent, members))
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    pub fn form(&self) -> &FilterForm {
        &self.form
    }

    /// The generating ideal of a symbolic filter.
    pub fn generator(&self) -> Option<&Ideal> {
        match &self.form {
            FilterForm::Primitive(q) | FilterForm::LocallyPrimitive(q) => Some(q),
            FilterForm::Extensional(_) => None,
        }
    }

    pub fn contains(&self, q: &Ideal) -> Result<bool> {
        if !same_algebra(&self.parent, q.parent()) {
            return Err(Error::MixedParents);
        }
        Ok(match &self.form {
            FilterForm::Primitive(p) => {
                // p ⊇ p^2 ⊇ ... strictly decreases until it stabilizes
                let mut power = p.clone();
                loop {
                    if power.members().is_subset(q.members()) {
                        break true;
                    }
                    let next = power.product(p)?;
                    if next == power {
                        break false;
                    }
                    power = next;
                }
            }
            FilterForm::LocallyPrimitive(p) => {
                let alg = &*self.parent;
                p.iter().all(|f| !alg.powers(f).is_disjoint(q.members()))
            }
            FilterForm::Extensional(members) => members.iter().any(|m| m.members() == q.members()),
        })
    }

    /// All members, in bitset order.
    pub fn members(&self, limits: &Limits) -> Result<Vec<Ideal>> {
        if let FilterForm::Extensional(members) = &self.form {
            return Ok(members.clone());
        }
        let mut out = Vec::new();
        for q in enumerate_ideals(&self.parent, limits)? {
            if self.contains(&q)? {
                out.push(q);
            }
        }
        Ok(out)
    }

    /// Primes belonging to the filter. For `LocallyPrimitive(q)` these are
    /// exactly the primes containing `q`.
    pub fn primes(&self, limits: &Limits) -> Result<Vec<PrimeIdeal>> {
        let mut out = Vec::new();
        for p in enumerate_primes(&self.parent, limits)? {
            let inside = match &self.form {
                FilterForm::LocallyPrimitive(q) => q.members().is_subset(p.members()),
                _ => self.contains(&p)?,
            };
            if inside {
                out.push(p);
            }
        }
        Ok(out)
    }

    fn check_parent(&self, other: &GabrielFilter) -> Result<()> {
        if same_algebra(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::MixedParents)
        }
    }

    /// The join in the poset of (locally) primitive filters: generated by
    /// the product of the generators.
    pub fn union(&self, other: &GabrielFilter) -> Result<GabrielFilter> {
        self.check_parent(other)?;
        match (&self.form, &other.form) {
            (FilterForm::LocallyPrimitive(q), FilterForm::LocallyPrimitive(r)) => {
                Ok(Self::locally_primitive(q.product(r)?))
            }
            (FilterForm::Primitive(q), FilterForm::Primitive(r)) => {
                Ok(Self::primitive(q.product(r)?))
            }
            _ => Err(Error::MixedForms),
        }
    }

    /// The meet: generated by the ideal generated by both generators.
    /// Explicit filters intersect as sets.
    pub fn intersection(&self, other: &GabrielFilter) -> Result<GabrielFilter> {
        self.check_parent(other)?;
        match (&self.form, &other.form) {
            (FilterForm::LocallyPrimitive(q), FilterForm::LocallyPrimitive(r)) => {
                Ok(Self::locally_primitive(q.join(r)?))
            }
            (FilterForm::Primitive(q), FilterForm::Primitive(r)) => Ok(Self::primitive(q.join(r)?)),
            (FilterForm::Extensional(a), FilterForm::Extensional(b)) => {
                let members = a.iter().filter(|q| b.contains(q)).cloned().collect();
                Ok(Self::extensional_unchecked(&self.parent, members))
            }
            _ => Err(Error::MixedForms),
        }
    }

    /// Equality through prime sets, which decides equality of locally
    /// primitive filters.
    pub fn equals(&self, other: &GabrielFilter, limits: &Limits) -> Result<bool> {
        self.check_parent(other)?;
        Ok(self.primes(limits)? == other.primes(limits)?)
    }

    /// Extensional equality of member sets.
    pub fn same_members(&self, other: &GabrielFilter, limits: &Limits) -> Result<bool> {
        self.check_parent(other)?;
        Ok(self.members(limits)? == other.members(limits)?)
    }

    /// Every member contains a finitely generated member. On a finite
    /// carrier this holds for every realizable filter; the check is still
    /// carried out member by member.
    pub fn is_quasi_compact(&self, limits: &Limits) -> Result<bool> {
        let members = self.members(limits)?;
        let sets: alloc::collections::BTreeSet<&BitSet> =
            members.iter().map(Ideal::members).collect();
        Ok(members.iter().all(|q| {
            has_finitely_generated_member_below(q, &|r: &Ideal| sets.contains(r.members()))
        }))
    }

    pub fn audit(&self, limits: &Limits) -> Result<AuditReport> {
        axioms_audit(&self.parent, &self.members(limits)?, limits)
    }
}
