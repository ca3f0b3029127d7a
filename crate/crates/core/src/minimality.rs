//! Minimality certificates: first completeness (strict, from the bracket, or
//! broad, from a Khovanov q-span) together with second completeness (the
//! thickness attains `g + 2`) certify that a diagram has the fewest
//! classical crossings among diagrams of its link.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::atom::{build_atom, genus, GenusValue};
use crate::error::{Error, Result};
use crate::half::HalfInt;
use crate::khovanov::{
    broad_1_complete, build_complex, homology, is_2_complete, rational_obstruction, Field, KhEntry,
    KhTable,
};
use crate::state_sum::{check_limit, is_1_complete};
use crate::diagram::Diagram;
use crate::SCHEMA_VERSION;

/// Crossing limits for the exponential computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub kh_q: usize,
    pub kh_gf2: usize,
    pub states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { kh_q: 12, kh_gf2: 14, states: crate::state_sum::DEFAULT_STATE_LIMIT }
    }
}

impl Limits {
    /// The same cap for everything.
    pub fn uniform(max_crossings: usize) -> Self {
        Self { kh_q: max_crossings, kh_gf2: max_crossings, states: max_crossings }
    }

    pub fn kh(&self, field: Field) -> usize {
        match field {
            Field::Q => self.kh_q,
            Field::Gf2 => self.kh_gf2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Minimal,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Minimal => "MINIMAL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Khovanov data over one coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReport {
    pub field: Field,
    pub entries: Vec<KhEntry>,
    pub q_min: i64,
    pub q_max: i64,
    pub q_span: i64,
    pub thickness: HalfInt,
    pub broad_1_complete: bool,
    pub two_complete: bool,
}

impl FieldReport {
    fn new(tab: &KhTable, n: usize, chi: i64, g: &GenusValue) -> Result<Self> {
        let (q_min, q_max) = tab.q_range().ok_or(Error::EmptyTable)?;
        Ok(Self {
            field: tab.field(),
            entries: tab.entries().collect(),
            q_min,
            q_max,
            q_span: q_max - q_min,
            thickness: tab.thickness()?,
            broad_1_complete: broad_1_complete(tab, n, chi)?,
            two_complete: is_2_complete(tab, g)?,
        })
    }

    pub fn table(&self) -> KhTable {
        KhTable::new(self.field, self.entries.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub n: usize,
    pub chi: i64,
    pub twice_genus: u64,
    pub genus: HalfInt,
    pub orientable: bool,
    /// Set only when certifying from a table alone.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus_lower_bound: Option<HalfInt>,
    /// `None` when the bracket was not computed or vanishes.
    pub bracket_span: Option<i64>,
    pub span_bound: i64,
    /// `2n + χ`, the bound on the Khovanov q-span.
    pub q_span_bound: i64,
    pub strict_1_complete: bool,
    pub broad_1_complete: bool,
    /// Fields whose q-span attains `2n + χ`.
    pub broad_fields: Vec<Field>,
    /// Largest thickness over the computed fields.
    pub thickness: HalfInt,
    pub two_complete: bool,
    pub verdict: Verdict,
    pub fields: Vec<FieldReport>,
    pub reasoning: Vec<String>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// The reasoning lines followed by the verdict.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.reasoning {
            out.push_str("- ");
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

fn verdict(strict: bool, broad: bool, two: bool) -> Verdict {
    if (strict || broad) && two {
        Verdict::Minimal
    } else {
        Verdict::Inconclusive
    }
}

/// GF(2) always, and Q as well when the atom is orientable.
pub fn default_fields(d: &Diagram) -> Vec<Field> {
    if rational_obstruction(&build_atom(d)).is_none() {
        vec![Field::Gf2, Field::Q]
    } else {
        vec![Field::Gf2]
    }
}

pub fn certify(d: &Diagram, fields: &[Field]) -> Result<Certificate> {
    certify_with(d, fields, &Limits::default())
}

/// Runs the bracket, the atom and Khovanov homology over every requested
/// field (the defaults when `fields` is empty).
pub fn certify_with(d: &Diagram, fields: &[Field], limits: &Limits) -> Result<Certificate> {
    let n = d.crossing_count();
    let mut fields = if fields.is_empty() { default_fields(d) } else { fields.to_vec() };
    fields.sort();
    fields.dedup();
    check_limit(d, limits.states, "state sum")?;
    for &f in &fields {
        check_limit(d, limits.kh(f), "Khovanov homology")?;
    }

    let atom = build_atom(d);
    let g = genus(&atom);
    let chi = atom.white_count() as i64 + atom.black_count() as i64 - n as i64;
    let one = is_1_complete(d);
    let orientation = d.orient();

    let mut reasoning = vec![format!(
        "atom: a = {}, b = {}, n = {n}, chi = {chi}, {}, genus {}",
        atom.white_count(),
        atom.black_count(),
        if g.orientable { "orientable" } else { "non-orientable" },
        g.genus()
    )];
    reasoning.push(match one.span {
        Some(span) => format!(
            "bracket span {span} {} 4n + 2(chi - 2) = {}",
            if one.strict { "attains" } else { "is below" },
            one.bound
        ),
        None => format!("bracket vanishes; bound 4n + 2(chi - 2) = {}", one.bound),
    });

    let mut reports = vec![];
    for &field in &fields {
        let complex = build_complex(d, &orientation, field)?;
        let report = FieldReport::new(&homology(&complex), n, chi, &g)?;
        reasoning.push(format!(
            "Kh over {field}: q from {} to {}, span {} {} 2n + chi = {}; thickness {} {} g + 2 = {}",
            report.q_min,
            report.q_max,
            report.q_span,
            if report.broad_1_complete { "attains" } else { "is below" },
            2 * n as i64 + chi,
            report.thickness,
            if report.two_complete { "attains" } else { "is below" },
            HalfInt::from_twice(g.twice_genus as i64 + 4),
        ));
        reports.push(report);
    }

    let broad_fields: Vec<Field> = reports.iter().filter(|r| r.broad_1_complete).map(|r| r.field).collect();
    let two_complete = reports.iter().any(|r| r.two_complete);
    let thickness = reports.iter().map(|r| r.thickness).max().ok_or(Error::EmptyTable)?;
    let verdict = verdict(one.strict, !broad_fields.is_empty(), two_complete);
    reasoning.push(format!(
        "1-complete: {}; 2-complete: {}",
        if one.strict {
            "strictly".to_string()
        } else if broad_fields.is_empty() {
            "no".to_string()
        } else {
            format!("broadly over {}", join(&broad_fields))
        },
        if two_complete { "yes" } else { "no" }
    ));

    Ok(Certificate {
        schema: SCHEMA_VERSION,
        n,
        chi,
        twice_genus: g.twice_genus,
        genus: g.genus(),
        orientable: g.orientable,
        genus_lower_bound: None,
        bracket_span: one.span,
        span_bound: one.bound,
        q_span_bound: 2 * n as i64 + chi,
        strict_1_complete: one.strict,
        broad_1_complete: !broad_fields.is_empty(),
        broad_fields,
        thickness,
        two_complete,
        verdict,
        fields: reports,
        reasoning,
    })
}

fn join(fields: &[Field]) -> String {
    fields.iter().map(|f| f.name()).collect::<Vec<_>>().join(", ")
}

/// Certifies an unknown `n`-crossing diagram from its Khovanov table alone.
///
/// The thickness bounds the genus from below by `T - 2`; taking that genus
/// (or the hinted `chi`, when it describes a larger genus) fixes the bound
/// `2n + χ` the q-span is compared against.
pub fn certify_from_table(tab: &KhTable, n: usize, chi_hint: Option<i64>) -> Result<Certificate> {
    let (q_min, q_max) = tab.q_range().ok_or(Error::EmptyTable)?;
    let q_span = q_max - q_min;
    let thickness = tab.thickness()?;
    let twice_g_min = (thickness.twice() - 4).max(0);
    let chi_min = 2 - twice_g_min;

    let mut reasoning = vec![
        format!(
            "Kh over {}: {} nonzero diagonals, thickness T = {thickness}",
            tab.field(),
            tab.diagonals().len()
        ),
        format!(
            "T <= g + 2 forces genus >= {}, so chi <= {chi_min}",
            HalfInt::from_twice(twice_g_min)
        ),
    ];
    let chi = match chi_hint {
        Some(c) if c > chi_min => {
            return Err(Error::InconsistentTable(format!(
                "chi = {c} means genus {}, but thickness {thickness} needs genus at least {}",
                HalfInt::from_twice(2 - c),
                HalfInt::from_twice(twice_g_min)
            )));
        }
        Some(c) if c < chi_min => {
            reasoning.push(format!("using the supplied chi = {c}, a genus above the lower bound"));
            c
        }
        _ => chi_min,
    };
    let twice_genus = 2 - chi;
    let bound = 2 * n as i64 + chi;
    if q_span > bound {
        return Err(Error::InconsistentTable(format!(
            "q-span {q_span} exceeds 2n + chi = {bound}; no {n}-crossing diagram of that genus has this table"
        )));
    }
    let g = GenusValue { twice_genus: twice_genus as u64, orientable: twice_genus % 2 == 0 };
    let broad = q_span == bound;
    let two = is_2_complete(tab, &g)?;
    reasoning.push(format!(
        "q from {q_min} to {q_max}: span {q_span} {} 2n + chi = {bound}",
        if broad { "attains" } else { "is below" }
    ));
    reasoning.push(format!(
        "thickness {thickness} {} g + 2 = {}",
        if two { "attains" } else { "is below" },
        HalfInt::from_twice(twice_genus + 4)
    ));
    let verdict = verdict(false, broad, two);

    Ok(Certificate {
        schema: SCHEMA_VERSION,
        n,
        chi,
        twice_genus: twice_genus as u64,
        genus: HalfInt::from_twice(twice_genus),
        orientable: g.orientable,
        genus_lower_bound: Some(HalfInt::from_twice(twice_g_min)),
        bracket_span: None,
        span_bound: crate::state_sum::span_bound(n, chi),
        q_span_bound: bound,
        strict_1_complete: false,
        broad_1_complete: broad,
        broad_fields: if broad { vec![tab.field()] } else { vec![] },
        thickness,
        two_complete: two,
        verdict,
        fields: vec![FieldReport {
            field: tab.field(),
            entries: tab.entries().collect(),
            q_min,
            q_max,
            q_span,
            thickness,
            broad_1_complete: broad,
            two_complete: two,
        }],
        reasoning,
    })
}
