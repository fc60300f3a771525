//! Constructor expressions such as `product(cyclic(2,1),adjoin_zero(idem))`.
//!
//! ```text
//! expr := "trivial" | "idem"
//!       | "cyclic" "(" nat "," nat ")" | "zmod" "(" nat ")"
//!       | "product" "(" expr "," expr ")" | "adjoin_zero" "(" expr ")"
//! ```

use std::sync::Arc;

use spectra_core::{Algebra, FiniteMonoid, FiniteRing, Kind};

use crate::error::{CliError, CliResult};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    kind: Kind,
}

impl Parser<'_> {
    fn error(&self, msg: impl std::fmt::Display) -> CliError {
        CliError::Parse(format!("expr column {}: {msg}", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> CliResult<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format_args!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> CliResult<&str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a constructor name"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn nat(&mut self) -> CliResult<usize> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let value = rest[..len]
            .parse()
            .map_err(|_| self.error("expected a natural number"))?;
        self.pos += len;
        Ok(value)
    }

    fn monoid_only(&self, name: &str) -> CliResult<()> {
        match self.kind {
            Kind::Monoid => Ok(()),
            Kind::Ring => Err(self.error(format_args!("`{name}` builds a monoid, not a ring"))),
        }
    }

    fn expr(&mut self) -> CliResult<Arc<Algebra>> {
        let start = self.pos;
        let name = self.ident()?.to_owned();
        let built = match name.as_str() {
            "trivial" => match self.kind {
                Kind::Monoid => Ok(FiniteMonoid::trivial().algebra().clone()),
                Kind::Ring => FiniteRing::zmod(1).map(|r| r.algebra().clone()),
            },
            "idem" => {
                self.monoid_only(&name)?;
                Ok(FiniteMonoid::idem().algebra().clone())
            }
            "cyclic" => {
                self.monoid_only(&name)?;
                self.eat('(')?;
                let m = self.nat()?;
                self.eat(',')?;
                let r = self.nat()?;
                self.eat(')')?;
                FiniteMonoid::cyclic(m, r).map(|c| c.algebra().clone())
            }
            "zmod" => {
                if self.kind != Kind::Ring {
                    return Err(self.error("`zmod` builds a ring, not a monoid"));
                }
                self.eat('(')?;
                let n = self.nat()?;
                self.eat(')')?;
                FiniteRing::zmod(n).map(|r| r.algebra().clone())
            }
            "product" => {
                self.eat('(')?;
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                self.eat(')')?;
                match self.kind {
                    Kind::Monoid => Ok(FiniteMonoid::from_algebra(a)?
                        .direct_product(&FiniteMonoid::from_algebra(b)?)
                        .algebra()
                        .clone()),
                    Kind::Ring => FiniteRing::from_algebra(a)?
                        .product(&FiniteRing::from_algebra(b)?)
                        .map(|r| r.algebra().clone()),
                }
            }
            "adjoin_zero" => {
                self.monoid_only(&name)?;
                self.eat('(')?;
                let a = self.expr()?;
                self.eat(')')?;
                Ok(FiniteMonoid::from_algebra(a)?
                    .adjoin_zero()
                    .algebra()
                    .clone())
            }
            _ => {
                self.pos = start;
                return Err(self.error(format_args!("unknown constructor `{name}`")));
            }
        };
        built.map_err(|e| {
            self.pos = start;
            match CliError::from(e) {
                CliError::Cap(m) => CliError::Cap(m),
                other => self.error(other.to_string()),
            }
        })
    }
}

pub fn parse(src: &str, kind: Kind) -> CliResult<Arc<Algebra>> {
    let mut p = Parser { src, pos: 0, kind };
    let a = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(a)
}
