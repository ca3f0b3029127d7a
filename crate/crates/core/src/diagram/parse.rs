//! PD-code and signed Gauss-code readers.

use std::collections::HashMap;

use super::{Diagram, Port};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Slot {
    Classical(Port),
    // (virtual crossing index, local slot)
    Virtual(usize, usize),
}

/// Parses PD text: `X a b c d` (classical) and `V a b c d` (virtual)
/// records, labels counterclockwise from the incoming under-strand.
/// Commas, brackets and a `PD` prefix are accepted, `#` starts a comment.
/// Virtual crossings are dissolved: at `V a b c d` the labels a–c and b–d
/// are fused into passing arcs. Empty input is the crossing-free unknot.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let mut classical = 0usize;
    let mut virtuals = 0usize;
    let mut uses: HashMap<String, Vec<(Slot, usize)>> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = strip_comment(raw)
            .split(|ch: char| ch.is_whitespace() || matches!(ch, ',' | '[' | ']' | '(' | ')'))
            .filter(|t| !t.is_empty() && *t != "PD")
            .collect();
        let mut rest = toks.as_slice();
        while let Some((kind, tail)) = rest.split_first() {
            let labels: Vec<&str> = tail.iter().take_while(|t| !matches!(**t, "X" | "V")).copied().collect();
            if labels.len() != 4 {
                return Err(parse_err(line, format!("`{kind}` needs 4 labels, found {}", labels.len())));
            }
            rest = &tail[4..];
            let make: Box<dyn Fn(usize) -> Slot> = match *kind {
                "X" => {
                    let c = classical;
                    classical += 1;
                    Box::new(move |l| Slot::Classical(4 * c + l))
                }
                "V" => {
                    let v = virtuals;
                    virtuals += 1;
                    Box::new(move |l| Slot::Virtual(v, l))
                }
                other => return Err(parse_err(line, format!("unknown crossing kind `{other}`"))),
            };
            for (l, label) in labels.iter().enumerate() {
                let entry = uses.entry(label.to_string()).or_default();
                entry.push((make(l), line));
                if entry.len() > 2 {
                    return Err(parse_err(line, format!("label `{label}` used more than twice")));
                }
            }
        }
    }
    if let Some((label, occ)) = uses.iter().filter(|(_, v)| v.len() != 2).min_by_key(|(_, v)| v[0].1) {
        return Err(parse_err(occ[0].1, format!("label `{label}` used only once")));
    }
    if classical == 0 && virtuals == 0 {
        return Ok(Diagram::unknot());
    }

    let mut other: HashMap<Slot, Slot> = HashMap::new();
    for occ in uses.values() {
        other.insert(occ[0].0, occ[1].0);
        other.insert(occ[1].0, occ[0].0);
    }
    let mut label_of_port: Vec<Option<i64>> = vec![None; 4 * classical];
    for (label, occ) in &uses {
        for &(slot, _) in occ {
            if let Slot::Classical(p) = slot {
                label_of_port[p] = label.parse().ok();
            }
        }
    }
    let mut seen_virtual = vec![[false; 4]; virtuals];
    let mut partner = vec![usize::MAX; 4 * classical];
    for p in 0..4 * classical {
        let mut s = other[&Slot::Classical(p)];
        while let Slot::Virtual(v, l) = s {
            seen_virtual[v][l] = true;
            seen_virtual[v][(l + 2) % 4] = true;
            s = other[&Slot::Virtual(v, (l + 2) % 4)];
        }
        let Slot::Classical(q) = s else { unreachable!() };
        partner[p] = q;
    }
    // closed chains made only of virtual crossings are crossing-free loops
    let mut loops = 0;
    for v in 0..virtuals {
        for l in 0..4 {
            if seen_virtual[v][l] {
                continue;
            }
            loops += 1;
            let (mut cv, mut cl) = (v, l);
            loop {
                seen_virtual[cv][cl] = true;
                seen_virtual[cv][(cl + 2) % 4] = true;
                match other[&Slot::Virtual(cv, (cl + 2) % 4)] {
                    Slot::Virtual(nv, nl) if !seen_virtual[nv][nl] => (cv, cl) = (nv, nl),
                    _ => break,
                }
            }
        }
    }
    // Under-strands enter at port 0. Over-strands follow increasing labels,
    // wrapping from a component's largest label to its smallest.
    let under: Vec<Option<bool>> = (0..4 * classical).map(|p| (p % 4 == 0).then_some(true)).collect();
    let mut over = vec![None; 4 * classical];
    for c in 0..classical {
        if let (Some(b), Some(d)) = (label_of_port[4 * c + 1], label_of_port[4 * c + 3]) {
            if b != d {
                let b_enters = if d == b + 1 || b == d + 1 { d == b + 1 } else { b > d };
                over[4 * c + 1] = Some(b_enters);
            }
        }
    }
    Diagram::with_hint_layers(partner, loops, &[&under, &over])
}

#[derive(Clone, Copy, Debug)]
struct Passage {
    label: u64,
    over: bool,
    positive: bool,
    line: usize,
}

fn parse_token(tok: &str, line: usize) -> Result<Passage> {
    let bad = || parse_err(line, format!("unknown token `{tok}`"));
    let mut chars = tok.chars();
    let over = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('O') => true,
        Some('U') => false,
        _ => return Err(bad()),
    };
    let rest = chars.as_str();
    let (digits, sign) = rest.split_at(rest.len().saturating_sub(1));
    let positive = match sign {
        "+" => true,
        "-" => false,
        _ => return Err(bad()),
    };
    let label = digits.parse().map_err(|_| bad())?;
    Ok(Passage { label, over, positive, line })
}

/// Parses a signed Gauss code: tokens `O<k><sign>` / `U<k><sign>`, one run
/// per component, components separated by `;`. Every label appears once as
/// `O` and once as `U` with the same sign. An empty component is a
/// crossing-free loop; empty input is the unknot.
///
/// Realizability is never checked, so any balanced code gives a (possibly
/// virtual) diagram. Under-passages enter at port 0; an over-passage enters
/// at port 3 on a positive crossing and at port 1 on a negative one.
pub fn parse_gauss(text: &str) -> Result<Diagram> {
    let mut components: Vec<Vec<Passage>> = vec![vec![]];
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        for (j, chunk) in strip_comment(raw).split(';').enumerate() {
            if j > 0 {
                components.push(vec![]);
            }
            for tok in chunk.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
                components.last_mut().unwrap().push(parse_token(tok, line)?);
                last_line = line;
            }
        }
    }
    if components.len() > 1 && components.last().is_some_and(|c| c.is_empty()) {
        components.pop();
    }

    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut seen: Vec<[Option<Passage>; 2]> = vec![];
    for p in components.iter().flatten() {
        let next = index.len();
        let c = *index.entry(p.label).or_insert(next);
        if c == seen.len() {
            seen.push([None, None]);
        }
        let slot = &mut seen[c][p.over as usize];
        if slot.is_some() {
            let kind = if p.over { "O" } else { "U" };
            return Err(parse_err(p.line, format!("label {} appears twice as {kind}", p.label)));
        }
        *slot = Some(*p);
    }
    for [under, over] in &seen {
        match (under, over) {
            (Some(u), Some(o)) if u.positive != o.positive => {
                return Err(parse_err(o.line, format!("label {} has conflicting signs", o.label)));
            }
            (Some(u), None) => {
                return Err(parse_err(u.line, format!("label {} never appears as O", u.label)));
            }
            (None, Some(o)) => {
                return Err(parse_err(o.line, format!("label {} never appears as U", o.label)));
            }
            (None, None) => return Err(parse_err(last_line, "internal: empty label record")),
            _ => {}
        }
    }

    let ports = |p: &Passage| -> (Port, Port) {
        let x = 4 * index[&p.label];
        match (p.over, p.positive) {
            (false, _) => (x, x + 2),
            (true, true) => (x + 3, x + 1),
            (true, false) => (x + 1, x + 3),
        }
    };
    let mut partner = vec![usize::MAX; 4 * seen.len()];
    let mut hints = vec![None; 4 * seen.len()];
    let mut loops = 0;
    for comp in &components {
        if comp.is_empty() {
            loops += 1;
            continue;
        }
        for (k, p) in comp.iter().enumerate() {
            let (_, exit) = ports(p);
            let (entry, _) = ports(&comp[(k + 1) % comp.len()]);
            partner[exit] = entry;
            partner[entry] = exit;
            hints[entry] = Some(true);
        }
    }
    Diagram::with_hints(partner, loops, &hints)
}
