use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Kind;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// A law that a candidate table failed, with the labels of the witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawViolation {
    NotAssociative(String, String, String),
    NotCommutative(String, String),
    BadUnit(String),
    BadRingAxiom {
        law: &'static str,
        witnesses: Vec<String>,
    },
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawViolation::NotAssociative(a, b, c) => {
                write!(f, "multiplication is not associative at ({a}, {b}, {c})")
            }
            LawViolation::NotCommutative(a, b) => {
                write!(f, "multiplication is not commutative at ({a}, {b})")
            }
            LawViolation::BadUnit(a) => write!(f, "unit does not act as identity on {a}"),
            LawViolation::BadRingAxiom { law, witnesses } => {
                write!(f, "ring axiom `{law}` fails at (")?;
                for (i, w) in witnesses.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    f.write_str(w)?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Tables of the wrong shape, out-of-range entries, duplicate labels.
    Shape(String),
    /// A well-shaped table that breaks an algebra law.
    Law(LawViolation),
    /// A carrier map that does not preserve structure.
    NotAMorphism {
        law: &'static str,
        witnesses: Vec<String>,
    },
    CarrierTooLarge {
        size: usize,
        cap: usize,
    },
    MixedParents,
    MixedForms,
    KindMismatch {
        expected: Kind,
        found: Kind,
    },
    InvalidArgument(String),
    /// Two routes that must agree did not; always an implementation defect.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(msg) => write!(f, "malformed tables: {msg}"),
            Error::Law(v) => v.fmt(f),
            Error::NotAMorphism { law, witnesses } => {
                write!(f, "map does not preserve {law} at {witnesses:?}")
            }
            Error::CarrierTooLarge { size, cap } => {
                write!(
                    f,
                    "carrier of size {size} exceeds the enumeration cap {cap}"
                )
            }
            Error::MixedParents => f.write_str("operands belong to different algebras"),
            Error::MixedForms => f.write_str("operation is not defined between these filter forms"),
            Error::KindMismatch { expected, found } => {
                write!(f, "expected a {expected:?} but found a {found:?}")
            }
            Error::InvalidArgument(msg) => f.write_str(msg),
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<LawViolation> for Error {
    fn from(v: LawViolation) -> Self {
        Error::Law(v)
    }
}
