use std::path::Path;

use kmc_core::minimality::certify_with;
use kmc_core::state_sum::kauffman_bracket_limited;
use kmc_core::{
    certify_from_table, enumerate_k1, khovanov_table, span_bound, AtomSummary, Certificate, Field, Verdict,
    SCHEMA_VERSION,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{is_diagram_file, load_diagram, load_table, Failure};
use crate::{OutputMode, RunConfig};

/// Writes to stdout; a closed pipe (`kmc ... | head`) ends the run quietly.
fn out(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("kmc: stdout: {e}");
        std::process::exit(1);
    }
}

fn out_json(doc: &impl serde::Serialize) {
    out(&(serde_json::to_string_pretty(doc).expect("json values serialize") + "\n"));
}

fn emit(cfg: &RunConfig, doc: Value, text: impl FnOnce() -> String) {
    match cfg.output {
        OutputMode::Json => out_json(&doc),
        OutputMode::Text => out(&text()),
    }
}

pub fn bracket(cfg: &RunConfig, file: &Path) -> Result<(), Failure> {
    let d = load_diagram(file)?;
    let b = kauffman_bracket_limited(&d, cfg.limits.states)?;
    let atom = AtomSummary::of(&d);
    let n = d.crossing_count();
    let span = b.span().map(i64::from);
    let bound = span_bound(n, atom.chi);
    let strict = span == Some(bound);
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "n": n,
        "bracket": b.display_with("A"),
        "terms": b.terms().map(|(e, c)| (e.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
        "span": span,
        "bound": bound,
        "one_complete": strict,
    });
    emit(cfg, doc, || {
        let span = span.map_or_else(|| "-".to_string(), |s| s.to_string());
        format!("bracket: {}\nspan: {span}\nbound: {bound}\nstrict 1-complete: {strict}\n", b.display_with("A"))
    });
    Ok(())
}

pub fn atom(cfg: &RunConfig, file: &Path) -> Result<(), Failure> {
    let d = load_diagram(file)?;
    let a = AtomSummary::of(&d);
    let mut doc = serde_json::to_value(a).expect("atom summaries serialize");
    doc["schema"] = json!(SCHEMA_VERSION);
    doc["n"] = json!(d.crossing_count());
    doc["genus"] = json!(a.genus());
    emit(cfg, doc, || {
        format!(
            "crossings: {}\nA-cells: {}\nB-cells: {}\neuler characteristic: {}\norientable: {}\ngenus: {}\n",
            d.crossing_count(),
            a.a,
            a.b,
            a.chi,
            a.orientable,
            a.genus()
        )
    });
    Ok(())
}

pub fn kh(cfg: &RunConfig, file: &Path, field: Field) -> Result<(), Failure> {
    let d = load_diagram(file)?;
    let tab = khovanov_table(&d, field, cfg.limits.kh(field))?;
    emit(cfg, tab.to_json_value(), || {
        let mut out = format!("Khovanov homology over {field}\n{}", tab.render());
        if let Ok(t) = tab.thickness() {
            out.push_str(&format!("thickness: {t}\n"));
        }
        out
    });
    Ok(())
}

pub fn k1(cfg: &RunConfig, file: &Path) -> Result<(), Failure> {
    let d = load_diagram(file)?;
    let census = enumerate_k1(&d, cfg.limits.states)?;
    let checks = census.checks();
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "n": census.n,
        "count": census.len(),
        "histogram": census.histogram,
        "window": census.window,
        "amplitude": census.amplitude(),
        "parity": census.parity(),
        "chi": census.chi,
        "orientable": census.orientable,
        "checks": checks,
    });
    emit(cfg, doc, || {
        let mut out = format!("single-circle states: {}\n", census.len());
        for (r, count) in &census.histogram {
            out.push_str(&format!("  r = {r}: {count}\n"));
        }
        let (lo, hi) = census.window;
        out.push_str(&format!("window: [{lo}, {hi}]\namplitude: {}\n", census.amplitude()));
        let parity = match checks.constant_parity {
            None => "not required",
            Some(true) => "constant",
            Some(false) => "mixed",
        };
        out.push_str(&format!("parity: {parity}\nchecks pass: {}\n", checks.all_pass()));
        out
    });
    Ok(())
}

fn emit_certificate(cfg: &RunConfig, c: &Certificate) {
    match cfg.output {
        OutputMode::Json => out(&(c.to_json() + "\n")),
        OutputMode::Text => out(&c.render()),
    }
}

pub fn certify(cfg: &RunConfig, file: &Path, fields: &[Field]) -> Result<(), Failure> {
    let d = load_diagram(file)?;
    let c = certify_with(&d, fields, &cfg.limits)?;
    emit_certificate(cfg, &c);
    Ok(())
}

pub fn certify_table(cfg: &RunConfig, file: &Path, n: usize, chi: Option<i64>) -> Result<(), Failure> {
    let tab = load_table(file)?;
    let c = certify_from_table(&tab, n, chi)?;
    emit_certificate(cfg, &c);
    Ok(())
}

/// Certifies every diagram file in `dir`. Returns `false` when any file failed.
pub fn batch(cfg: &RunConfig, dir: &Path, fields: &[Field]) -> Result<bool, Failure> {
    let io = |source| Failure::Io { path: dir.to_owned(), source };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && is_diagram_file(&path) {
            files.push(path);
        }
    }
    files.sort();
    let results: Vec<_> = files
        .par_iter()
        .map(|f| load_diagram(f).and_then(|d| Ok(certify_with(&d, fields, &cfg.limits)?)))
        .collect();

    let (mut minimal, mut inconclusive, mut failed) = (0, 0, 0);
    let mut docs = Vec::new();
    for (path, result) in files.iter().zip(results) {
        let name = path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        match result {
            Ok(c) => {
                match c.verdict {
                    Verdict::Minimal => minimal += 1,
                    Verdict::Inconclusive => inconclusive += 1,
                }
                if cfg.output == OutputMode::Text {
                    out(&format!("{name}: {} (n={}, thickness {}, genus {})\n", c.verdict, c.n, c.thickness, c.genus));
                }
                docs.push(json!({ "file": name, "verdict": c.verdict, "certificate": c }));
            }
            Err(e) => {
                failed += 1;
                eprintln!("kmc: {e}");
                if cfg.output == OutputMode::Text {
                    out(&format!("{name}: ERROR\n"));
                }
                docs.push(json!({ "file": name, "error": e.to_string() }));
            }
        }
    }
    match cfg.output {
        OutputMode::Text => out(&format!("{minimal} minimal, {inconclusive} inconclusive, {failed} failed\n")),
        OutputMode::Json => {
            let doc = json!({
                "schema": SCHEMA_VERSION,
                "results": docs,
                "minimal": minimal,
                "inconclusive": inconclusive,
                "failed": failed,
            });
            out_json(&doc);
        }
    }
    Ok(failed == 0)
}
