//! The JSON algebra document.
//!
//! A document names its kind and gives either a constructor `expr` or
//! explicit tables. Table entries are element labels or zero-based indices.
//!
//! ```json
//! {"kind": "monoid", "labels": ["1", "x"], "table": [["1", "x"], ["x", "x"]], "unit": "1"}
//! {"kind": "ring", "expr": "zmod(6)"}
//! ```
//!
//! Rings add `add`, `neg` and `zero`; `table` and `unit` are the
//! multiplication and its identity. Localization output also carries the
//! structure map in `morphism` and the inverse witnesses in `inverses`,
//! both as `[source, target]` label pairs; they are ignored on input.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use spectra_core::{Algebra, Kind, LocalizationResult, RingTables};

use crate::error::{CliError, CliResult};
use crate::expr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindTag {
    Monoid,
    Ring,
}

impl From<KindTag> for Kind {
    fn from(k: KindTag) -> Kind {
        match k {
            KindTag::Monoid => Kind::Monoid,
            KindTag::Ring => Kind::Ring,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Index(usize),
    Label(String),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub kind: Option<KindTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expr: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphism: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverses: Option<Vec<[String; 2]>>,
}

struct Resolver<'a> {
    labels: &'a [String],
}

impl Resolver<'_> {
    fn entry(&self, e: &Entry, at: &str) -> CliResult<usize> {
        match e {
            Entry::Index(i) if *i < self.labels.len() => Ok(*i),
            Entry::Index(i) => Err(CliError::Parse(format!("{at}: index {i} out of range"))),
            Entry::Label(l) => self
                .labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| CliError::Parse(format!("{at}: unknown label '{l}'"))),
        }
    }

    fn row(&self, row: &[Entry], at: &str) -> CliResult<Vec<usize>> {
        row.iter()
            .enumerate()
            .map(|(j, e)| self.entry(e, &format!("{at}[{j}]")))
            .collect()
    }

    fn table(&self, t: &[Vec<Entry>], at: &str) -> CliResult<Vec<Vec<usize>>> {
        t.iter()
            .enumerate()
            .map(|(i, r)| self.row(r, &format!("{at}[{i}]")))
            .collect()
    }
}

fn required<'a, T>(field: &'a Option<T>, name: &str) -> CliResult<&'a T> {
    field
        .as_ref()
        .ok_or_else(|| CliError::Parse(format!("missing field `{name}`")))
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Builds and validates the algebra the document describes.
    pub fn to_algebra(&self) -> CliResult<Arc<Algebra>> {
        let kind: Kind = (*required(&self.kind, "kind")?).into();
        if let Some(src) = &self.expr {
            let explicit = self.labels.is_some()
                || self.table.is_some()
                || self.unit.is_some()
                || self.add.is_some()
                || self.neg.is_some()
                || self.zero.is_some();
            if explicit {
                return Err(CliError::Parse(
                    "give either `expr` or explicit tables, not both".into(),
                ));
            }
            return expr::parse(src, kind);
        }
        let labels = required(&self.labels, "labels")?;
        let r = Resolver { labels };
        let mul = r.table(required(&self.table, "table")?, "table")?;
        let unit = r.entry(required(&self.unit, "unit")?, "unit")?;
        let algebra = match kind {
            Kind::Monoid => {
                if self.add.is_some() || self.neg.is_some() || self.zero.is_some() {
                    return Err(CliError::Parse(
                        "`add`, `neg` and `zero` are only allowed for rings".into(),
                    ));
                }
                Algebra::monoid(labels.clone(), mul, unit)?
            }
            Kind::Ring => Algebra::ring(RingTables {
                labels: labels.clone(),
                add: r.table(required(&self.add, "add")?, "add")?,
                neg: r.row(required(&self.neg, "neg")?, "neg")?,
                zero: r.entry(required(&self.zero, "zero")?, "zero")?,
                mul,
                one: unit,
            })?,
        };
        Ok(Arc::new(algebra))
    }

    /// Explicit-table document of `a`, entries as labels.
    pub fn from_algebra(a: &Algebra) -> Self {
        let label = |e| Entry::Label(a.label(e).to_owned());
        let table = |op: &dyn Fn(_, _) -> _| {
            a.elements()
                .map(|x| a.elements().map(|y| label(op(x, y))).collect())
                .collect()
        };
        let mut doc = AlgebraDocument {
            kind: Some(if a.is_ring() {
                KindTag::Ring
            } else {
                KindTag::Monoid
            }),
            labels: Some(a.labels().to_vec()),
            table: Some(table(&|x, y| a.mul(x, y))),
            unit: Some(label(a.unit())),
            ..Default::default()
        };
        if let Some(r) = a.additive() {
            doc.add = Some(table(&|x, y| r.add(x, y)));
            doc.neg = Some(a.elements().map(|x| label(r.neg(x))).collect());
            doc.zero = Some(label(r.zero()));
        }
        doc
    }

    pub fn from_localization(loc: &LocalizationResult) -> Self {
        let source = loc.source();
        let target = &loc.algebra;
        let mut doc = Self::from_algebra(target);
        doc.morphism = Some(
            source
                .elements()
                .map(|a| {
                    [
                        source.label(a).to_owned(),
                        target.label(loc.map.apply(a)).to_owned(),
                    ]
                })
                .collect(),
        );
        doc.inverses = Some(
            loc.inverses
                .iter()
                .map(|&(s, inv)| [source.label(s).to_owned(), target.label(inv).to_owned()])
                .collect(),
        );
        doc
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("documents serialize");
        out.push('\n');
        out
    }
}
