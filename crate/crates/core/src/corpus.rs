//! The shipped test corpus.
//!
//! Monoids: every table of size at most 5 reachable from `cyclic(m, r)` by
//! `product` (both factors nontrivial) and `adjoin_zero`, deduplicated by
//! table equality, plus `C3`, `IDEM` and `M2 = IDEM × IDEM`. Rings: `Z/2`
//! through `Z/12` and `Z/2 × Z/2`. Names use the CLI expression syntax.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::monoid::FiniteMonoid;
use crate::ring::FiniteRing;

pub const MAX_MONOID: usize = 5;

pub fn c3() -> FiniteMonoid {
    FiniteMonoid::cyclic(2, 1).expect("period 1")
}

pub fn idem() -> FiniteMonoid {
    FiniteMonoid::idem()
}

pub fn m2() -> FiniteMonoid {
    idem().direct_product(&idem())
}

fn push_new(out: &mut Vec<(String, FiniteMonoid)>, name: String, m: FiniteMonoid) -> bool {
    if m.len() > MAX_MONOID || out.iter().any(|(_, k)| k.same_tables(&m)) {
        return false;
    }
    out.push((name, m));
    true
}

pub fn monoids() -> Vec<(String, FiniteMonoid)> {
    let mut out = Vec::new();
    push_new(&mut out, "trivial".into(), FiniteMonoid::trivial());
    for size in 1..=MAX_MONOID {
        for period in 1..=size {
            let index = size - period;
            let m = FiniteMonoid::cyclic(index, period).expect("period >= 1");
            push_new(&mut out, format!("cyclic({index},{period})"), m);
        }
    }
    push_new(&mut out, "product(cyclic(1,1),cyclic(1,1))".into(), m2());
    loop {
        let snapshot = out.clone();
        let mut grew = false;
        for (name, m) in &snapshot {
            grew |= push_new(&mut out, format!("adjoin_zero({name})"), m.adjoin_zero());
            for (other_name, other) in &snapshot {
                if m.len() > 1 && other.len() > 1 && m.len() * other.len() <= MAX_MONOID {
                    grew |= push_new(
                        &mut out,
                        format!("product({name},{other_name})"),
                        m.direct_product(other),
                    );
                }
            }
        }
        if !grew {
            return out;
        }
    }
}

pub fn rings() -> Vec<(String, FiniteRing)> {
    let mut out: Vec<(String, FiniteRing)> = (2..=12)
        .map(|n| (format!("zmod({n})"), FiniteRing::zmod(n).expect("n >= 1")))
        .collect();
    let z2 = FiniteRing::zmod(2).expect("n >= 1");
    out.push((
        "product(zmod(2),zmod(2))".into(),
        z2.product(&z2).expect("small"),
    ));
    out
}
