use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use spectra_core::{
    corpus, hom, localization, Algebra, BitSet, ElementId, GabrielFilter, Ideal, Limits,
    ZariskiSpace,
};

fn corpus_algebras() -> &'static [Arc<Algebra>] {
    static ALL: OnceLock<Vec<Arc<Algebra>>> = OnceLock::new();
    ALL.get_or_init(|| {
        let mut all: Vec<Arc<Algebra>> = corpus::monoids()
            .into_iter()
            .map(|(_, m)| m.algebra().clone())
            .collect();
        all.extend(
            corpus::rings()
                .into_iter()
                .map(|(_, r)| r.algebra().clone()),
        );
        all
    })
}

fn space_of(i: usize) -> &'static ZariskiSpace {
    static SPACES: OnceLock<Vec<ZariskiSpace>> = OnceLock::new();
    &SPACES.get_or_init(|| {
        corpus_algebras()
            .iter()
            .map(|a| ZariskiSpace::build(a, &Limits::default()).unwrap())
            .collect()
    })[i]
}

/// A corpus index with two subsets and two elements of that algebra.
fn sample() -> impl Strategy<Value = (usize, BitSet, BitSet, ElementId, ElementId)> {
    (0..corpus_algebras().len()).prop_flat_map(|i| {
        let n = corpus_algebras()[i].len();
        let mask = (1u64 << n) - 1;
        (Just(i), 0..=mask, 0..=mask, 0..n, 0..n).prop_map(move |(i, s, t, f, g)| {
            (
                i,
                BitSet::from_mask(n, s),
                BitSet::from_mask(n, t),
                ElementId::new(f),
                ElementId::new(g),
            )
        })
    })
}

fn gen(a: &Arc<Algebra>, s: &BitSet) -> Ideal {
    Ideal::generated(a, s.iter().map(ElementId::new))
}

fn member_sets(g: &GabrielFilter) -> Vec<BitSet> {
    g.members(&Limits::default())
        .unwrap()
        .iter()
        .map(|q| q.members().clone())
        .collect()
}

#[test]
fn validated_tables_satisfy_the_laws() {
    for a in corpus_algebras() {
        for x in a.elements() {
            assert_eq!(a.mul(a.unit(), x), x);
            for y in a.elements() {
                assert_eq!(a.mul(x, y), a.mul(y, x));
                for z in a.elements() {
                    assert_eq!(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)));
                    if let Some(r) = a.additive() {
                        assert_eq!(a.mul(x, r.add(y, z)), r.add(a.mul(x, y), a.mul(x, z)));
                    }
                }
            }
        }
    }
}

fn assert_universal(catalog: &[Arc<Algebra>]) {
    for a in catalog {
        for f in a.elements() {
            let loc = localization::at_element(a, f);
            for b in catalog {
                let composites: Vec<Vec<ElementId>> = hom::morphisms(&loc.algebra, b)
                    .iter()
                    .map(|v| loc.map.then(v).unwrap().map().to_vec())
                    .collect();
                for u in hom::morphisms(a, b) {
                    let count = composites
                        .iter()
                        .filter(|c| c.as_slice() == u.map())
                        .count();
                    assert_eq!(count, usize::from(b.is_unit(u.apply(f))));
                }
            }
        }
    }
}

#[test]
fn monoid_localizations_are_universal() {
    let catalog: Vec<Arc<Algebra>> = corpus::monoids()
        .into_iter()
        .map(|(_, m)| m.algebra().clone())
        .collect();
    assert_universal(&catalog);
}

#[test]
fn ring_localizations_are_universal() {
    let catalog: Vec<Arc<Algebra>> = corpus::rings()
        .into_iter()
        .map(|(_, r)| r.algebra().clone())
        .filter(|r| r.len() <= 8)
        .collect();
    assert_universal(&catalog);
}

proptest! {
    #[test]
    fn power_orbit_repeats((i, _s, _t, f, _g) in sample()) {
        let a = &corpus_algebras()[i];
        let o = a.power_orbit(f);
        for k in 0..=a.len() {
            prop_assert_eq!(a.pow(f, o.index + o.period + k), a.pow(f, o.index + k));
        }
    }

    #[test]
    fn image_factors_through_corestriction((i, _s, _t, _f, _g) in sample(), pick in any::<prop::sample::Index>()) {
        let a = &corpus_algebras()[i];
        let targets = corpus_algebras();
        let b = &targets[pick.index(targets.len())];
        for u in hom::morphisms(a, b).into_iter().take(8) {
            let (sub, co) = u.image();
            for x in a.elements() {
                prop_assert_eq!(sub.inclusion.apply(co.apply(x)), u.apply(x));
            }
            prop_assert_eq!(sub.members.clone(), u.image_set());
        }
    }

    #[test]
    fn oslash_is_the_principal_product((i, _s, _t, f, g) in sample()) {
        let a = &corpus_algebras()[i];
        let lhs = Ideal::principal(a, a.oslash(f, g));
        let rhs = Ideal::principal(a, f).product(&Ideal::principal(a, g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn radical_is_prime_with_a_unique_minimal_prime((i, s, _t, _f, _g) in sample()) {
        let a = &corpus_algebras()[i];
        let q = gen(a, &s);
        let above: Vec<_> = spectra_core::ideal::enumerate_primes(a, &Limits::default())
            .unwrap()
            .into_iter()
            .filter(|p| q.members().is_subset(p.members()))
            .collect();
        let minimal = above
            .iter()
            .filter(|p| above.iter().all(|r| r == *p || !r.members().is_subset(p.members())))
            .count();
        if minimal == 1 {
            prop_assert!(q.radical().is_prime());
        }
    }

    #[test]
    fn localizing_at_a_power_changes_nothing((i, _s, _t, f, _g) in sample(), n in 1usize..4) {
        let a = &corpus_algebras()[i];
        let at_f = localization::at_element(a, f);
        let at_power = localization::at_element(a, a.pow(f, n));
        prop_assert!(hom::find_isomorphism(&at_f.algebra, &at_power.algebra).is_some());
        let by_set = localization::at_set(a, &a.powers(f));
        prop_assert!(hom::find_isomorphism(&at_f.algebra, &by_set.algebra).is_some());
    }

    #[test]
    fn every_class_is_a_fraction((i, _s, _t, f, _g) in sample()) {
        let a = &corpus_algebras()[i];
        let loc = localization::at_element(a, f);
        let inv = loc.inverse_of(f).unwrap();
        let b = &loc.algebra;
        prop_assert_eq!(b.mul(loc.map.apply(f), inv), b.unit());
        for class in b.elements() {
            let found = a.elements().any(|x| {
                (0..=a.len()).any(|n| b.mul(loc.map.apply(x), b.pow(inv, n)) == class)
            });
            prop_assert!(found);
        }
    }

    #[test]
    fn localized_ideal_matches_its_image((i, s, _t, f, _g) in sample()) {
        let a = &corpus_algebras()[i];
        let q = gen(a, &s);
        let loc = localization::at_element(a, f);
        // the class route and the image route are compared inside
        let local = q.localize_in(&loc).unwrap();
        prop_assert_eq!(local, q.image(&loc.map).unwrap());
    }

    #[test]
    fn locally_primitive_is_a_meet_of_element_filters((i, s, _t, _f, _g) in sample()) {
        let a = &corpus_algebras()[i];
        let limits = Limits::default();
        let q = gen(a, &s);
        let mut meet = GabrielFilter::locally_primitive(Ideal::bottom(a));
        for f in q.generators() {
            meet = meet.intersection(&GabrielFilter::locally_primitive(Ideal::principal(a, f))).unwrap();
        }
        let lp = GabrielFilter::locally_primitive(q.clone());
        prop_assert_eq!(member_sets(&meet), member_sets(&lp));
        let mut by_elements: Option<Vec<BitSet>> = None;
        for f in q.generators() {
            let m = member_sets(&GabrielFilter::of_element(a, f));
            by_elements = Some(match by_elements {
                None => m,
                Some(acc) => acc.into_iter().filter(|x| m.contains(x)).collect(),
            });
        }
        let all = spectra_core::ideal::enumerate_ideals(a, &limits).unwrap();
        let by_elements = by_elements.unwrap_or_else(|| all.iter().map(|x| x.members().clone()).collect());
        prop_assert_eq!(by_elements, member_sets(&lp));
        // on a finite carrier the primitive and locally primitive filters agree
        prop_assert!(lp.is_quasi_compact(&limits).unwrap());
        prop_assert_eq!(member_sets(&GabrielFilter::primitive(q)), member_sets(&lp));
    }

    #[test]
    fn primitive_membership_is_a_power((i, s, t, _f, _g) in sample()) {
        let a = &corpus_algebras()[i];
        let (q, r) = (gen(a, &s), gen(a, &t));
        let by_power = (1..=a.len() + 1).any(|n| q.power(n).members().is_subset(r.members()));
        prop_assert_eq!(GabrielFilter::primitive(q).contains(&r).unwrap(), by_power);
    }

    #[test]
    fn union_of_filters_unions_primes((i, s, t, _f, _g) in sample()) {
        let a = &corpus_algebras()[i];
        let limits = Limits::default();
        let (gq, gr) = (
            GabrielFilter::locally_primitive(gen(a, &s)),
            GabrielFilter::locally_primitive(gen(a, &t)),
        );
        let u = gq.union(&gr).unwrap();
        let mut expected: Vec<BitSet> = gq.primes(&limits).unwrap().iter().map(|p| p.members().clone()).collect();
        expected.extend(gr.primes(&limits).unwrap().iter().map(|p| p.members().clone()));
        expected.sort();
        expected.dedup();
        let got: Vec<BitSet> = u.primes(&limits).unwrap().iter().map(|p| p.members().clone()).collect();
        prop_assert_eq!(got, expected);
        prop_assert!(u.is_quasi_compact(&limits).unwrap());
        prop_assert!(gq.intersection(&gr).unwrap().is_quasi_compact(&limits).unwrap());
    }

    #[test]
    fn closed_sets_and_radicals((i, s, _t, _f, _g) in sample()) {
        let a = &corpus_algebras()[i];
        let space = space_of(i);
        let q = gen(a, &s);
        let v = space.v_of(&q).unwrap();
        for p in v.iter() {
            for j in 0..space.len() {
                if space.specializes(p, j) {
                    prop_assert!(v.contains(j));
                }
            }
        }
        prop_assert_eq!(&v, &space.v_of(&q.radical()).unwrap());
        let g = space.open_of_filter(&GabrielFilter::locally_primitive(q.clone())).unwrap();
        let h = space.open_of_filter(&GabrielFilter::locally_primitive(q.radical())).unwrap();
        prop_assert_eq!(g, h);
        prop_assert!(space.closed_sets().iter().any(|c| c.points == v));
    }
}
