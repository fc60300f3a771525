//! The topological space of proper primes.
//!
//! Closed sets are `V(q) = {p : q ⊆ p}`, opens their complements, and the
//! sets `D(f) = {p : f ∉ p}` form a basis. Point sets are [`BitSet`]s over
//! point indices; a closed set is identified with its radical representative.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{same_algebra, Algebra, ElementId};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::filter::{FilterForm, GabrielFilter};
use crate::ideal::{enumerate_ideals, enumerate_primes, Ideal, PrimeIdeal};
use crate::limits::Limits;

#[derive(Clone, Debug)]
pub struct ClosedSet {
    pub radical: Ideal,
    pub points: BitSet,
}

/// An open point set with an ideal `q` whose `V(q)` is its complement.
#[derive(Clone, Debug)]
pub struct OpenSet {
    pub points: BitSet,
    pub generator: Ideal,
}

impl PartialEq for OpenSet {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for OpenSet {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub covered: bool,
    /// A point of the target missed by every member of the family.
    pub witness: Option<usize>,
    /// Whether the answer computed through Gabriel filters agrees.
    pub filter_side_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub points: BitSet,
    pub generic_point: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SoberReport {
    pub sober: bool,
    pub irreducible_closed_sets: usize,
    /// An irreducible closed set without exactly one generic point.
    pub offending: Option<(BitSet, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct ZariskiSpace {
    algebra: Arc<Algebra>,
    limits: Limits,
    points: Vec<PrimeIdeal>,
    /// `specialization[i]` holds every `j` with `p_i ⊆ p_j`.
    specialization: Vec<BitSet>,
    closed_sets: Vec<ClosedSet>,
}

impl ZariskiSpace {
    pub fn build(algebra: &Arc<Algebra>, limits: &Limits) -> Result<Self> {
        let points = enumerate_primes(algebra, limits)?;
        let n = points.len();
        let specialization = points
            .iter()
            .map(|p| {
                BitSet::from_indices(
                    n,
                    (0..n).filter(|&j| p.members().is_subset(points[j].members())),
                )
            })
            .collect();
        let mut space = ZariskiSpace {
            algebra: algebra.clone(),
            limits: *limits,
            points,
            specialization,
            closed_sets: Vec::new(),
        };
        let mut by_points: BTreeMap<BitSet, Ideal> = BTreeMap::new();
        for q in enumerate_ideals(algebra, limits)? {
            let v = space.v_of(&q)?;
            let radical = q.radical();
            if let Some(existing) = by_points.get(&v) {
                if *existing != radical {
                    return Err(Error::Inconsistent(alloc::format!(
                        "radicals {existing:?} and {radical:?} cut out the same closed set"
                    )));
                }
            } else {
                by_points.insert(v, radical);
            }
        }
        space.closed_sets = by_points
            .into_iter()
            .map(|(points, radical)| ClosedSet { radical, points })
            .collect();
        Ok(space)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn points(&self) -> &[PrimeIdeal] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `p_i ⊆ p_j`, i.e. `p_j` lies in the closure of `p_i`.
    pub fn specializes(&self, i: usize, j: usize) -> bool {
        self.specialization[i].contains(j)
    }

    /// Covering pairs `(i, j)` of the inclusion order: `p_i ⊊ p_j` with
    /// nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.specializes(i, j) {
                    continue;
                }
                let between = (0..n)
                    .any(|k| k != i && k != j && self.specializes(i, k) && self.specializes(k, j));
                if !between {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Distinct closed sets, ordered by point-set value.
    pub fn closed_sets(&self) -> &[ClosedSet] {
        &self.closed_sets
    }

    /// Distinct opens, complements of [`Self::closed_sets`] in the same order.
    pub fn opens(&self) -> Vec<OpenSet> {
        self.closed_sets
            .iter()
            .map(|c| OpenSet {
                points: c.points.complement(),
                generator: c.radical.clone(),
            })
            .collect()
    }

    fn check_parent(&self, q: &Ideal) -> Result<()> {
        if same_algebra(&self.algebra, q.parent()) {
            Ok(())
        } else {
            Err(Error::MixedParents)
        }
    }

    pub fn v_of(&self, q: &Ideal) -> Result<BitSet> {
        self.check_parent(q)?;
        Ok(BitSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&i| q.members().is_subset(self.points[i].members())),
        ))
    }

    /// The open complement of `V(q)`.
    pub fn open_of_ideal(&self, q: &Ideal) -> Result<OpenSet> {
        Ok(OpenSet {
            points: self.v_of(q)?.complement(),
            generator: q.clone(),
        })
    }

    /// `D(f) = {p : f ∉ p}`.
    pub fn d_of(&self, f: ElementId) -> OpenSet {
        self.open_of_ideal(&Ideal::principal(&self.algebra, f))
            .expect("same parent")
    }

    /// The open whose complement is the prime set of a locally primitive
    /// (or primitive) filter.
    pub fn open_of_filter(&self, g: &GabrielFilter) -> Result<OpenSet> {
        let generator = match g.form() {
            FilterForm::LocallyPrimitive(q) | FilterForm::Primitive(q) => q.clone(),
            FilterForm::Extensional(_) => return Err(Error::MixedForms),
        };
        self.check_parent(&generator)?;
        let mut closed = BitSet::empty(self.len());
        for p in g.primes(&self.limits)? {
            let i = self
                .points
                .iter()
                .position(|x| x == &p)
                .ok_or_else(|| Error::Inconsistent("filter prime is not a point".into()))?;
            closed.insert(i);
        }
        Ok(OpenSet {
            points: closed.complement(),
            generator,
        })
    }

    /// Elements `f_1..f_k` of the generator with `U = ⋃ D(f_i)`. Chosen
    /// greedily by new coverage, ties to the least element.
    pub fn basis_decomposition(&self, u: &OpenSet) -> Result<Vec<ElementId>> {
        self.check_parent(&u.generator)?;
        let mut remaining = u.points.clone();
        let mut chosen = Vec::new();
        let basics: Vec<(ElementId, BitSet)> = u
            .generator
            .iter()
            .map(|f| (f, self.d_of(f).points))
            .collect();
        while !remaining.is_empty() {
            let best = basics
                .iter()
                .map(|(f, d)| (d.intersection(&remaining).len(), *f, d))
                .filter(|(gain, _, _)| *gain > 0)
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
            let Some((_, f, d)) = best else {
                return Err(Error::Inconsistent(
                    "generator elements do not cover the open".into(),
                ));
            };
            chosen.push(f);
            remaining.difference_with(d);
        }
        let mut union = BitSet::empty(self.len());
        for &f in &chosen {
            union.union_with(&self.d_of(f).points);
        }
        if union != u.points {
            return Err(Error::Inconsistent("basic opens overshoot the open".into()));
        }
        Ok(chosen)
    }

    /// Whether `family` covers `target`, with a missed point when it does
    /// not. The filter-side answer compares the meet of the target's filter
    /// with the family's filters against the family's filters alone.
    pub fn is_cover(&self, target: &OpenSet, family: &[OpenSet]) -> Result<CoverReport> {
        self.check_parent(&target.generator)?;
        let mut union = BitSet::empty(self.len());
        for u in family {
            self.check_parent(&u.generator)?;
            union.union_with(&u.points);
        }
        let missed = target.points.difference(&union);
        let covered = missed.is_empty();

        let mut family_filter = GabrielFilter::locally_primitive(Ideal::bottom(&self.algebra));
        for u in family {
            family_filter = family_filter
                .intersection(&GabrielFilter::locally_primitive(u.generator.clone()))?;
        }
        let target_filter = GabrielFilter::locally_primitive(target.generator.clone());
        let with_target = family_filter.intersection(&target_filter)?;
        let filter_covered = with_target.equals(&family_filter, &self.limits)?;

        Ok(CoverReport {
            covered,
            witness: missed.first(),
            filter_side_agrees: filter_covered == covered,
        })
    }

    /// Always true on a finite carrier; returns a smallest family of basic
    /// opens `D(f)`, `f` in the generator, covering `U`.
    pub fn is_quasi_compact_open(&self, u: &OpenSet) -> Result<(bool, Vec<ElementId>)> {
        let greedy = self.basis_decomposition(u)?;
        let mut distinct: Vec<(ElementId, BitSet)> = Vec::new();
        for f in u.generator.iter() {
            let d = self.d_of(f).points;
            if !d.is_empty() && !distinct.iter().any(|(_, e)| *e == d) {
                distinct.push((f, d));
            }
        }
        for size in 0..greedy.len() {
            if let Some(found) = covering_combination(&distinct, &u.points, size) {
                return Ok((true, found));
            }
        }
        Ok((true, greedy))
    }

    /// Maximal irreducible closed sets `V(p)`, `p` a minimal prime.
    pub fn irreducible_components(&self) -> Vec<Component> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.specializes(j, i)))
            .map(|i| Component {
                points: self.specialization[i].clone(),
                generic_point: i,
            })
            .collect()
    }

    /// Every irreducible closed set has exactly one generic point.
    pub fn check_sober(&self) -> SoberReport {
        let closed: Vec<&BitSet> = self.closed_sets.iter().map(|c| &c.points).collect();
        let mut irreducible = 0;
        for z in &closed {
            if z.is_empty() {
                continue;
            }
            let reducible = closed.iter().any(|a| {
                *a != *z
                    && a.is_subset(z)
                    && closed
                        .iter()
                        .any(|b| *b != *z && b.is_subset(z) && a.union(b) == **z)
            });
            if reducible {
                continue;
            }
            irreducible += 1;
            let generic: Vec<usize> = z
                .iter()
                .filter(|&i| self.specialization[i] == **z)
                .collect();
            if generic.len() != 1 {
                return SoberReport {
                    sober: false,
                    irreducible_closed_sets: irreducible,
                    offending: Some(((*z).clone(), generic)),
                };
            }
        }
        SoberReport {
            sober: true,
            irreducible_closed_sets: irreducible,
            offending: None,
        }
    }

    /// Sorted labels of point `i`.
    pub fn point_labels(&self, i: usize) -> Vec<String> {
        self.points[i]
            .labels()
            .into_iter()
            .map(String::from)
            .collect()
    }
}

fn covering_combination(
    basics: &[(ElementId, BitSet)],
    target: &BitSet,
    size: usize,
) -> Option<Vec<ElementId>> {
    fn go(
        basics: &[(ElementId, BitSet)],
        start: usize,
        left: usize,
        acc: &mut Vec<usize>,
        target: &BitSet,
    ) -> bool {
        if left == 0 {
            let mut union = BitSet::empty(target.universe());
            for &i in acc.iter() {
                union.union_with(&basics[i].1);
            }
            return union == *target;
        }
        for i in start..basics.len() {
            if !basics[i].1.is_subset(target) {
                continue;
            }
            acc.push(i);
            if go(basics, i + 1, left - 1, acc, target) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    go(basics, 0, size, &mut acc, target).then(|| acc.into_iter().map(|i| basics[i].0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteMonoid;
    use crate::ring::FiniteRing;
    use alloc::vec;

    fn space(a: &Arc<Algebra>) -> ZariskiSpace {
        ZariskiSpace::build(a, &Limits::default()).unwrap()
    }

    fn c3() -> Arc<Algebra> {
        FiniteMonoid::cyclic(2, 1).unwrap().algebra().clone()
    }

    fn z6() -> Arc<Algebra> {
        FiniteRing::zmod(6).unwrap().algebra().clone()
    }

    fn el(a: &Algebra, l: &str) -> ElementId {
        a.element(l).unwrap()
    }

    fn pts(s: &BitSet) -> Vec<usize> {
        s.iter().collect()
    }

    #[test]
    fn small_spaces() {
        let trivial = FiniteMonoid::trivial().algebra().clone();
        let t = space(&trivial);
        assert_eq!(t.len(), 1);
        assert_eq!(t.closed_sets().len(), 2);

        let c3 = c3();
        let s = space(&c3);
        assert_eq!(s.point_labels(0), Vec::<String>::new());
        assert_eq!(s.point_labels(1), ["x", "x2"]);
        let closed: Vec<Vec<usize>> = s.closed_sets().iter().map(|c| pts(&c.points)).collect();
        assert_eq!(closed, vec![vec![], vec![1], vec![0, 1]]);
        assert_eq!(s.hasse_edges(), vec![(0, 1)]);

        let z6 = z6();
        let s = space(&z6);
        assert_eq!(s.len(), 2);
        assert!(s.hasse_edges().is_empty());
        let closed: Vec<Vec<usize>> = s.closed_sets().iter().map(|c| pts(&c.points)).collect();
        assert_eq!(closed, vec![vec![], vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn closed_and_basic_opens() {
        let c3 = c3();
        let s = space(&c3);
        assert_eq!(pts(&s.v_of(&Ideal::bottom(&c3)).unwrap()), [0, 1]);
        assert!(s.v_of(&Ideal::whole(&c3)).unwrap().is_empty());
        assert_eq!(
            pts(&s.v_of(&Ideal::principal(&c3, el(&c3, "x2"))).unwrap()),
            [1]
        );
        assert!(s.d_of(c3.unit()).points.is_full());
        assert_eq!(pts(&s.d_of(el(&c3, "x")).points), [0]);

        let z6 = z6();
        let s = space(&z6);
        // points: (3) then (2); D(2) = {(3)}
        assert_eq!(pts(&s.d_of(el(&z6, "2")).points), [0]);
        assert_eq!(s.point_labels(0), ["0", "3"]);
    }

    #[test]
    fn opens_from_filters() {
        let c3 = c3();
        let s = space(&c3);
        let bottom = GabrielFilter::locally_primitive(Ideal::bottom(&c3));
        assert!(s.open_of_filter(&bottom).unwrap().points.is_empty());
        let whole = GabrielFilter::locally_primitive(Ideal::whole(&c3));
        assert!(s.open_of_filter(&whole).unwrap().points.is_full());
        let gx = GabrielFilter::locally_primitive(Ideal::principal(&c3, el(&c3, "x")));
        assert_eq!(pts(&s.open_of_filter(&gx).unwrap().points), [0]);
    }

    #[test]
    fn basis_decompositions() {
        let c3 = c3();
        let s = space(&c3);
        let whole = s.open_of_ideal(&Ideal::whole(&c3)).unwrap();
        assert_eq!(s.basis_decomposition(&whole).unwrap(), [c3.unit()]);
        let gen = s
            .open_of_ideal(&Ideal::principal(&c3, el(&c3, "x")))
            .unwrap();
        assert_eq!(s.basis_decomposition(&gen).unwrap(), [el(&c3, "x")]);
        let z6 = z6();
        let s = space(&z6);
        let u = s.d_of(el(&z6, "2"));
        assert_eq!(s.basis_decomposition(&u).unwrap(), [el(&z6, "2")]);
        let empty = s.open_of_ideal(&Ideal::bottom(&z6)).unwrap();
        assert!(s.basis_decomposition(&empty).unwrap().is_empty());
    }

    #[test]
    fn covers() {
        let z6 = z6();
        let s = space(&z6);
        let whole = s.open_of_ideal(&Ideal::whole(&z6)).unwrap();
        let family = [s.d_of(el(&z6, "2")), s.d_of(el(&z6, "3"))];
        let r = s.is_cover(&whole, &family).unwrap();
        assert!(r.covered && r.filter_side_agrees);
        assert!(
            s.is_cover(&whole, core::slice::from_ref(&whole))
                .unwrap()
                .covered
        );
        assert!(s.is_cover(&whole, &[s.d_of(z6.unit())]).unwrap().covered);

        let c3 = c3();
        let s = space(&c3);
        let whole = s.open_of_ideal(&Ideal::whole(&c3)).unwrap();
        let r = s.is_cover(&whole, &[s.d_of(el(&c3, "x"))]).unwrap();
        assert!(!r.covered);
        assert!(r.filter_side_agrees);
        assert_eq!(s.point_labels(r.witness.unwrap()), ["x", "x2"]);
    }

    #[test]
    fn quasi_compact_opens() {
        let c3 = c3();
        let s = space(&c3);
        let whole = s.open_of_ideal(&Ideal::whole(&c3)).unwrap();
        assert_eq!(
            s.is_quasi_compact_open(&whole).unwrap(),
            (true, vec![c3.unit()])
        );
        let u = s.d_of(el(&c3, "x"));
        assert_eq!(
            s.is_quasi_compact_open(&u).unwrap(),
            (true, vec![el(&c3, "x")])
        );
    }

    #[test]
    fn components_and_sobriety() {
        let trivial = FiniteMonoid::trivial().algebra().clone();
        let t = space(&trivial);
        assert_eq!(t.irreducible_components().len(), 1);
        assert!(t.check_sober().sober);

        let c3 = c3();
        let s = space(&c3);
        let comps = s.irreducible_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].generic_point, 0);
        assert!(s.check_sober().sober);

        let z6 = z6();
        let s = space(&z6);
        assert_eq!(s.irreducible_components().len(), 2);
        assert!(s.check_sober().sober);
    }
}
