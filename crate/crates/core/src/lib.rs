//! Zariski geometry of finite commutative monoids and finite commutative rings.
//!
//! The crate works over two concrete contexts: finite commutative monoids in
//! sets (the `F1` flavour, see [`monoid`]) and small finite commutative rings
//! (see [`ring`]). Both are materialized as a validated [`Algebra`], and every
//! higher-level construction is written once against it:
//!
//! * [`ideal`]: generated ideals, products, transporters, radicals, primes.
//! * [`localization`]: `A_f` and `S^-1 A` as fraction algebras.
//! * [`filter`]: primitive, locally primitive and extensional Gabriel filters.
//! * [`spectrum`]: the sober space of proper primes, its basis and coverings.
//! * [`compare`]: independent rebuilds of the classical and monoid spectra.
//!
//! Everything is finite and exhaustively checkable. Enumeration is bounded by
//! a [`Limits`] value; exceeding a bound is an error, never a truncation.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bitset;
pub mod compare;
pub mod corpus;
mod error;
pub mod filter;
pub mod hom;
pub mod ideal;
mod limits;
pub mod localization;
pub mod monoid;
pub mod ring;
pub mod spectrum;

pub use algebra::{Algebra, ElementId, Kind, Morphism, PowerOrbit, Subalgebra};
pub use bitset::BitSet;
pub use error::{Error, LawViolation, Result};
pub use filter::{AuditReport, AuditViolation, FilterForm, GabrielFilter};
pub use ideal::{Ideal, PrimeIdeal};
pub use limits::Limits;
pub use localization::LocalizationResult;
pub use monoid::FiniteMonoid;
pub use ring::{FiniteRing, RingTables};
pub use spectrum::{OpenSet, ZariskiSpace};
