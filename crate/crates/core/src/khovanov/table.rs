use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::Field;
use crate::atom::GenusValue;
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::poly::LaurentPoly;
use crate::SCHEMA_VERSION;

/// Nonzero dimensions of `Kh^{t,q}` over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KhTable {
    field: Field,
    entries: BTreeMap<(i64, i64), u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KhEntry {
    pub t: i64,
    pub q: i64,
    pub dim: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableDoc {
    #[serde(default)]
    schema: Option<u32>,
    field: Field,
    entries: Vec<KhEntry>,
    #[serde(default, skip_deserializing)]
    thickness: Option<HalfInt>,
    #[serde(default, skip_deserializing)]
    q_span: Option<i64>,
}

impl KhTable {
    pub fn new<I>(field: Field, entries: I) -> Self
    where
        I: IntoIterator<Item = KhEntry>,
    {
        let mut map = BTreeMap::new();
        for e in entries {
            *map.entry((e.t, e.q)).or_insert(0) += e.dim;
        }
        map.retain(|_, d| *d > 0);
        Self { field, entries: map }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dim(&self, t: i64, q: i64) -> u64 {
        self.entries.get(&(t, q)).copied().unwrap_or(0)
    }

    /// Entries ordered by `(t, q)`.
    pub fn entries(&self) -> impl Iterator<Item = KhEntry> + '_ {
        self.entries.iter().map(|(&(t, q), &dim)| KhEntry { t, q, dim })
    }

    pub fn total_dim(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn q_range(&self) -> Option<(i64, i64)> {
        let qs = self.entries.keys().map(|&(_, q)| q);
        Some((qs.clone().min()?, qs.max()?))
    }

    /// `q_max - q_min`.
    pub fn q_span(&self) -> Result<i64> {
        let (lo, hi) = self.q_range().ok_or(Error::EmptyTable)?;
        Ok(hi - lo)
    }

    /// Distinct diagonal indices `q - 2t`.
    pub fn diagonals(&self) -> BTreeSet<i64> {
        self.entries.keys().map(|&(t, q)| q - 2 * t).collect()
    }

    /// Number of diagonals between the two extreme ones,
    /// `(max(q-2t) - min(q-2t))/2 + 1`. A half-integer when q-parities mix.
    pub fn thickness(&self) -> Result<HalfInt> {
        let diags = self.diagonals();
        let (lo, hi) = (diags.first().ok_or(Error::EmptyTable)?, diags.last().unwrap());
        Ok(HalfInt::from_twice(hi - lo + 2))
    }

    /// `Σ (-1)^t dim q^q`.
    pub fn graded_euler_characteristic(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.entries().map(|e| {
            let sign = if e.t.rem_euclid(2) == 0 { 1 } else { -1 };
            (e.q as i32, sign * e.dim as i64)
        }))
    }

    pub fn to_json_value(&self) -> Value {
        let doc = TableDoc {
            schema: Some(SCHEMA_VERSION),
            field: self.field,
            entries: self.entries().collect(),
            thickness: self.thickness().ok(),
            q_span: self.q_span().ok(),
        };
        serde_json::to_value(doc).expect("table documents always serialize")
    }

    /// Reads a table document (`{"field", "entries": [{t, q, dim}]}`), or the
    /// first per-field report of a certificate document.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)?;
        let doc = if v.get("entries").is_some() {
            v
        } else if let Some(report) = v.get("fields").and_then(|f| f.as_array()).and_then(|a| a.first()) {
            report.clone()
        } else {
            return Err(Error::InconsistentTable("document has no `entries` list".into()));
        };
        let doc: TableDoc = serde_json::from_value(doc)?;
        Ok(Self::new(doc.field, doc.entries))
    }

    /// Rows `q` descending, columns `t` ascending; blank cells are empty.
    pub fn render(&self) -> String {
        let Some((qlo, qhi)) = self.q_range() else {
            return "(empty table)\n".into();
        };
        let ts: Vec<i64> = self.entries.keys().map(|&(t, _)| t).collect();
        let (tlo, thi) = (*ts.iter().min().unwrap(), *ts.iter().max().unwrap());
        let same_parity = self.entries.keys().all(|&(_, q)| (q - qlo).rem_euclid(2) == 0);
        let step = if same_parity { 2 } else { 1 };
        let width = 4;
        let mut out = String::new();
        let _ = write!(out, "{:>width$} |", "q\\t");
        for t in tlo..=thi {
            let _ = write!(out, "{t:>width$}");
        }
        out.push('\n');
        out.push_str(&"-".repeat(width + 2 + width * (thi - tlo + 1) as usize));
        out.push('\n');
        let mut q = qhi;
        while q >= qlo {
            let _ = write!(out, "{q:>width$} |");
            for t in tlo..=thi {
                match self.dim(t, q) {
                    0 => out.push_str(&" ".repeat(width)),
                    d => {
                        let _ = write!(out, "{d:>width$}");
                    }
                }
            }
            out.push('\n');
            q -= step;
        }
        out
    }
}

/// Broad first completeness: the q-span attains `2n + χ`.
pub fn broad_1_complete(tab: &KhTable, n: usize, chi: i64) -> Result<bool> {
    Ok(tab.q_span()? == 2 * n as i64 + chi)
}

/// Second completeness: the table has `g + 2` diagonals.
pub fn is_2_complete(tab: &KhTable, g: &GenusValue) -> Result<bool> {
    Ok(tab.thickness()?.twice() == g.twice_genus as i64 + 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(t: i64, q: i64, dim: u64) -> KhEntry {
        KhEntry { t, q, dim }
    }

    #[test]
    fn unknot_table() {
        let tab = KhTable::new(Field::Q, [e(0, 1, 1), e(0, -1, 1)]);
        assert_eq!(tab.thickness().unwrap(), HalfInt::from_int(2));
        assert_eq!(tab.q_span().unwrap(), 2);
        assert!(broad_1_complete(&tab, 0, 2).unwrap());
        assert!(is_2_complete(&tab, &GenusValue { twice_genus: 0, orientable: true }).unwrap());
        assert!(!is_2_complete(&tab, &GenusValue { twice_genus: 2, orientable: true }).unwrap());
    }

    #[test]
    fn empty_table_errors() {
        let tab = KhTable::new(Field::Gf2, [e(0, 1, 0)]);
        assert!(tab.is_empty());
        assert!(matches!(tab.thickness(), Err(Error::EmptyTable)));
        assert!(matches!(tab.q_span(), Err(Error::EmptyTable)));
    }

    #[test]
    fn mixed_parity_gives_half_thickness() {
        let tab = KhTable::new(Field::Gf2, [e(0, 0, 1), e(0, 1, 1)]);
        assert_eq!(tab.thickness().unwrap(), HalfInt::from_twice(3));
    }

    #[test]
    fn json_round_trip() {
        let tab = KhTable::new(Field::Q, [e(0, 1, 1), e(0, 3, 1), e(2, 5, 1), e(3, 9, 1)]);
        let text = tab.to_json_value().to_string();
        assert!(text.contains("\"field\":\"q\""));
        assert!(text.contains("\"thickness\":2"));
        assert_eq!(KhTable::from_json(&text).unwrap(), tab);
        assert!(KhTable::from_json("{\"x\": 1}").is_err());
    }

    #[test]
    fn render_layout() {
        let tab = KhTable::new(Field::Q, [e(0, 1, 1), e(0, 3, 1), e(2, 5, 1), e(3, 9, 1)]);
        let text = tab.render();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].contains("0   1   2   3"));
        assert!(lines[2].trim_start().starts_with("9 |"));
        assert!(lines.last().unwrap().trim_start().starts_with("1 |"));
        assert_eq!(lines.len(), 2 + 5);
    }
}
