//! Exhaustive search over carrier maps. Used as an oracle for universal
//! properties and for isomorphism checks between small algebras.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, ElementId, Morphism};

const UNSET: usize = usize::MAX;

struct Search<'a> {
    source: &'a Algebra,
    target: &'a Algebra,
    injective: bool,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Every constraint touching `e` whose operands are all assigned.
    fn consistent(&self, e: usize) -> bool {
        let (s, t) = (self.source, self.target);
        for x in 0..s.len() {
            if self.map[x] == UNSET {
                continue;
            }
            for y in 0..s.len() {
                if self.map[y] == UNSET {
                    continue;
                }
                let (xe, ye) = (ElementId::new(x), ElementId::new(y));
                let z = s.mul(xe, ye).index();
                if (x == e || y == e || z == e)
                    && self.map[z] != UNSET
                    && t.mul(ElementId::new(self.map[x]), ElementId::new(self.map[y]))
                        .index()
                        != self.map[z]
                {
                    return false;
                }
                if let (Some(rs), Some(rt)) = (s.additive(), t.additive()) {
                    let z = rs.add(xe, ye).index();
                    if (x == e || y == e || z == e)
                        && self.map[z] != UNSET
                        && rt
                            .add(ElementId::new(self.map[x]), ElementId::new(self.map[y]))
                            .index()
                            != self.map[z]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, next: usize, out: &mut Vec<Vec<usize>>, stop_at_first: bool) {
        if stop_at_first && !out.is_empty() {
            return;
        }
        if next == self.source.len() {
            out.push(self.map.clone());
            return;
        }
        if self.map[next] != UNSET {
            self.run(next + 1, out, stop_at_first);
            return;
        }
        for image in 0..self.target.len() {
            if self.injective && self.used[image] {
                continue;
            }
            self.map[next] = image;
            self.used[image] = true;
            if self.consistent(next) {
                self.run(next + 1, out, stop_at_first);
            }
            self.used[image] = false;
            self.map[next] = UNSET;
        }
    }
}

fn search(
    source: &Arc<Algebra>,
    target: &Arc<Algebra>,
    injective: bool,
    stop_at_first: bool,
) -> Vec<Morphism> {
    if source.kind() != target.kind() || (injective && source.len() != target.len()) {
        return Vec::new();
    }
    let mut state = Search {
        source,
        target,
        injective,
        map: vec![UNSET; source.len()],
        used: vec![false; target.len()],
    };
    let unit = source.unit().index();
    state.map[unit] = target.unit().index();
    state.used[target.unit().index()] = true;
    let mut found = Vec::new();
    if state.consistent(unit) {
        state.run(0, &mut found, stop_at_first);
    }
    found
        .into_iter()
        .map(|m| {
            Morphism::new(
                source.clone(),
                target.clone(),
                m.into_iter().map(ElementId::new).collect(),
            )
            .expect("search only yields structure-preserving maps")
        })
        .collect()
}

/// Every morphism `source -> target`, in lexicographic order of the map.
pub fn morphisms(source: &Arc<Algebra>, target: &Arc<Algebra>) -> Vec<Morphism> {
    search(source, target, false, false)
}

/// Some isomorphism `a -> b`, if one exists.
pub fn find_isomorphism(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Option<Morphism> {
    search(a, b, true, true).into_iter().next()
}
