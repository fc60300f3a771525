//! Independent rebuilds of the spectrum, by scanning every subset of the
//! carrier, compared with [`ZariskiSpace`] through the identity on primes.
//!
//! For monoids the points are the ideals with a multiplicatively closed
//! complement and the topology is generated by the sets `{p : f ∉ p}`. For
//! rings the points are the proper ideals passing the elementwise prime test
//! and the closed sets are the `V(I)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, ElementId};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::limits::Limits;
use crate::monoid::FiniteMonoid;
use crate::ring::FiniteRing;
use crate::spectrum::ZariskiSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub agrees: bool,
    pub points: usize,
    pub open_sets: usize,
    pub mismatch: Option<String>,
}

fn subsets(a: &Algebra) -> impl Iterator<Item = BitSet> + '_ {
    let n = a.len();
    (0..1u64 << n).map(move |mask| BitSet::from_mask(n, mask))
}

fn absorbs(a: &Algebra, s: &BitSet) -> bool {
    s.iter().all(|x| {
        a.elements()
            .all(|y| s.contains(a.mul(ElementId::new(x), y).index()))
    })
}

fn is_ring_ideal(a: &Algebra, s: &BitSet) -> bool {
    let r = a.additive().expect("ring");
    s.contains(r.zero().index())
        && absorbs(a, s)
        && s.iter().all(|x| {
            s.iter()
                .all(|y| s.contains(r.add(ElementId::new(x), ElementId::new(y)).index()))
        })
}

fn point_list(space: &ZariskiSpace) -> Vec<BitSet> {
    space.points().iter().map(|p| p.members().clone()).collect()
}

/// Every union of members of `basis`, as point sets.
fn unions(universe: usize, basis: &[BitSet]) -> BTreeSet<BitSet> {
    let mut out = BTreeSet::new();
    out.insert(BitSet::empty(universe));
    for b in basis {
        let grown: Vec<BitSet> = out.iter().map(|u| u.union(b)).collect();
        out.extend(grown);
    }
    out
}

fn finish(space: &ZariskiSpace, points: Vec<BitSet>, opens: BTreeSet<BitSet>) -> ComparisonReport {
    let ours = point_list(space);
    let mismatch = if ours != points {
        Some(format!(
            "points differ: {} here, {} in the oracle",
            ours.len(),
            points.len()
        ))
    } else {
        let mine: BTreeSet<BitSet> = space.opens().into_iter().map(|u| u.points).collect();
        mine.symmetric_difference(&opens)
            .next()
            .map(|diff| format!("open set {diff:?} is on one side only"))
    };
    ComparisonReport {
        agrees: mismatch.is_none(),
        points: points.len(),
        open_sets: opens.len(),
        mismatch,
    }
}

/// The monoid spectrum built directly from prime ideals and the basic opens
/// `{p : f ∉ p}`.
pub fn compare_deitmar(a: &FiniteMonoid, limits: &Limits) -> Result<ComparisonReport> {
    limits.check_oracle(a)?;
    let space = ZariskiSpace::build(a.algebra(), limits)?;
    let points: Vec<BitSet> = subsets(a)
        .filter(|p| !p.is_full() && absorbs(a, p))
        .filter(|p| {
            let c = p.complement();
            c.iter().all(|x| {
                c.iter()
                    .all(|y| c.contains(a.mul(ElementId::new(x), ElementId::new(y)).index()))
            })
        })
        .collect();
    let n = points.len();
    let basis: Vec<BitSet> = a
        .elements()
        .map(|f| BitSet::from_indices(n, (0..n).filter(|&i| !points[i].contains(f.index()))))
        .collect();
    let opens = unions(n, &basis);
    Ok(finish(&space, points, opens))
}

/// The textbook prime spectrum of a finite ring.
pub fn compare_ring_classical(a: &FiniteRing, limits: &Limits) -> Result<ComparisonReport> {
    limits.check_oracle(a)?;
    let space = ZariskiSpace::build(a.algebra(), limits)?;
    let ideals: Vec<BitSet> = subsets(a).filter(|s| is_ring_ideal(a, s)).collect();
    let points: Vec<BitSet> = ideals
        .iter()
        .filter(|p| {
            !p.is_full()
                && a.elements().all(|x| {
                    a.elements().all(|y| {
                        !p.contains(a.mul(x, y).index())
                            || p.contains(x.index())
                            || p.contains(y.index())
                    })
                })
        })
        .cloned()
        .collect();
    let n = points.len();
    let opens = ideals
        .iter()
        .map(|i| BitSet::from_indices(n, (0..n).filter(|&k| !i.is_subset(&points[k]))))
        .collect();
    Ok(finish(&space, points, opens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monoid_examples() {
        let limits = Limits::default();
        for m in [
            FiniteMonoid::trivial(),
            FiniteMonoid::cyclic(2, 1).unwrap(),
            FiniteMonoid::idem().adjoin_zero(),
        ] {
            let r = compare_deitmar(&m, &limits).unwrap();
            assert!(r.agrees, "{r:?}");
        }
        let r = compare_deitmar(&FiniteMonoid::cyclic(2, 1).unwrap(), &limits).unwrap();
        assert_eq!((r.points, r.open_sets), (2, 3));
    }

    #[test]
    fn ring_examples() {
        let limits = Limits::default();
        let r = compare_ring_classical(&FiniteRing::zmod(1).unwrap(), &limits).unwrap();
        assert!(r.agrees);
        assert_eq!(r.points, 0);
        let r = compare_ring_classical(&FiniteRing::zmod(6).unwrap(), &limits).unwrap();
        assert!(r.agrees);
        assert_eq!((r.points, r.open_sets), (2, 4));
        let r = compare_ring_classical(&FiniteRing::zmod(4).unwrap(), &limits).unwrap();
        assert!(r.agrees);
        assert_eq!(r.points, 1);
    }

    #[test]
    fn oracle_cap() {
        let limits = Limits {
            oracle_subsets: 3,
            ..Limits::default()
        };
        assert!(compare_ring_classical(&FiniteRing::zmod(4).unwrap(), &limits).is_err());
    }
}
