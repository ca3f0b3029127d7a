//! Python bindings. Structured results come back as plain dicts and lists.

use kmc_core::khovanov::default_limit;
use kmc_core::minimality::{certify_with, Limits};
use kmc_core::state_sum::{kauffman_bracket_limited, DEFAULT_STATE_LIMIT};
use kmc_core::{
    certify_from_table, enumerate_k1, khovanov_table, parse_gauss, parse_pd, span_bound, AtomSummary,
    Error, Field, KhTable, Twist, SCHEMA_VERSION,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde_json::{json, Value};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. }
        | Error::InvalidDiagram(_)
        | Error::NoSuchArc(_)
        | Error::NoSuchCrossing(_)
        | Error::InconsistentTable(_)
        | Error::EmptyTable
        | Error::Json(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn parse_field(name: &str) -> PyResult<Field> {
    name.parse().map_err(PyValueError::new_err)
}

/// A classical or virtual link diagram.
#[pyclass(name = "Diagram", module = "kmc", frozen)]
pub struct PyDiagram {
    inner: kmc_core::Diagram,
}

#[pymethods]
impl PyDiagram {
    #[staticmethod]
    fn from_pd(text: &str) -> PyResult<Self> {
        Ok(Self { inner: parse_pd(text).map_err(py_err)? })
    }

    #[staticmethod]
    fn from_gauss(text: &str) -> PyResult<Self> {
        Ok(Self { inner: parse_gauss(text).map_err(py_err)? })
    }

    /// Closure of a braid word; generator `i` is `σ_i`, `-i` its inverse.
    #[staticmethod]
    fn from_braid(strands: usize, word: Vec<i32>) -> PyResult<Self> {
        Ok(Self { inner: kmc_core::Diagram::from_braid(strands, &word).map_err(py_err)? })
    }

    #[staticmethod]
    fn unknot() -> Self {
        Self { inner: kmc_core::Diagram::unknot() }
    }

    #[getter]
    fn crossing_count(&self) -> usize {
        self.inner.crossing_count()
    }

    #[getter]
    fn components(&self) -> usize {
        self.inner.components()
    }

    fn is_alternating(&self) -> bool {
        self.inner.is_alternating()
    }

    fn to_pd(&self) -> String {
        self.inner.to_pd()
    }

    fn mirror(&self) -> Self {
        Self { inner: self.inner.mirror() }
    }

    fn virtualize(&self, crossing: usize) -> PyResult<Self> {
        Ok(Self { inner: self.inner.virtualize(crossing).map_err(py_err)? })
    }

    #[pyo3(signature = (arc, positive = true))]
    fn r1_add(&self, arc: usize, positive: bool) -> PyResult<Self> {
        let twist = if positive { Twist::Positive } else { Twist::Negative };
        Ok(Self { inner: self.inner.r1_add(arc, twist).map_err(py_err)? })
    }

    fn r2_add(&self, over_arc: usize, under_arc: usize) -> PyResult<Self> {
        Ok(Self { inner: self.inner.r2_add(over_arc, under_arc).map_err(py_err)? })
    }

    /// Kauffman bracket as `{exponent: coefficient}`.
    #[pyo3(signature = (limit = DEFAULT_STATE_LIMIT))]
    fn bracket(&self, limit: usize) -> PyResult<std::collections::BTreeMap<i32, i64>> {
        let b = kauffman_bracket_limited(&self.inner, limit).map_err(py_err)?;
        Ok(b.terms().collect())
    }

    /// `(span, bound)`; span is `None` when the bracket vanishes.
    fn bracket_span(&self) -> PyResult<(Option<i64>, i64)> {
        let b = kauffman_bracket_limited(&self.inner, DEFAULT_STATE_LIMIT).map_err(py_err)?;
        let chi = AtomSummary::of(&self.inner).chi;
        Ok((b.span().map(i64::from), span_bound(self.inner.crossing_count(), chi)))
    }

    fn atom<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let a = AtomSummary::of(&self.inner);
        let mut v = serde_json::to_value(a).expect("atom summaries serialize");
        v["genus"] = json!(a.genus());
        to_py(py, &v)
    }

    #[pyo3(signature = (field = "gf2", limit = None))]
    fn kh<'py>(&self, py: Python<'py>, field: &str, limit: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
        let field = parse_field(field)?;
        let tab = py
            .detach(|| khovanov_table(&self.inner, field, limit.unwrap_or(default_limit(field))))
            .map_err(py_err)?;
        to_py(py, &tab.to_json_value())
    }

    #[pyo3(signature = (limit = DEFAULT_STATE_LIMIT))]
    fn k1<'py>(&self, py: Python<'py>, limit: usize) -> PyResult<Bound<'py, PyAny>> {
        let c = py.detach(|| enumerate_k1(&self.inner, limit)).map_err(py_err)?;
        let v = json!({
            "schema": SCHEMA_VERSION,
            "n": c.n,
            "count": c.len(),
            "histogram": c.histogram,
            "window": c.window,
            "amplitude": c.amplitude(),
            "parity": c.parity(),
            "checks": c.checks(),
        });
        to_py(py, &v)
    }

    /// Minimality certificate; `fields` defaults to gf2, plus q when the
    /// atom is orientable.
    #[pyo3(signature = (fields = None, max_crossings = None))]
    fn certify<'py>(
        &self,
        py: Python<'py>,
        fields: Option<Vec<String>>,
        max_crossings: Option<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let fields = fields.unwrap_or_default().iter().map(|f| parse_field(f)).collect::<PyResult<Vec<_>>>()?;
        let limits = max_crossings.map_or_else(Limits::default, Limits::uniform);
        let c = py.detach(|| certify_with(&self.inner, &fields, &limits)).map_err(py_err)?;
        to_py(py, &serde_json::to_value(&c).expect("certificates serialize"))
    }

    fn __repr__(&self) -> String {
        format!(
            "Diagram(crossings={}, components={})",
            self.inner.crossing_count(),
            self.inner.components()
        )
    }
}

/// Certificate from a Khovanov table document (JSON text) alone.
#[pyfunction]
#[pyo3(signature = (table_json, n, chi = None))]
fn certify_table<'py>(py: Python<'py>, table_json: &str, n: usize, chi: Option<i64>) -> PyResult<Bound<'py, PyAny>> {
    let tab = KhTable::from_json(table_json).map_err(py_err)?;
    let c = certify_from_table(&tab, n, chi).map_err(py_err)?;
    to_py(py, &serde_json::to_value(&c).expect("certificates serialize"))
}

#[pymodule]
fn kmc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_function(wrap_pyfunction!(certify_table, m)?)?;
    m.add("SCHEMA_VERSION", SCHEMA_VERSION)?;
    Ok(())
}
