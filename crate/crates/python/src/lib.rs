//! Python bindings: point sets, VC-dimension, constructions, detectors and
//! the claim checks. Reports come back as plain dicts and lists.

use hamming::constructions::{construct as build, ConstructionSpec};
use hamming::detect::{detect as run_detector, witness_from_config, ConfigKind};
use hamming::hamming::{parse_point_set, write_point_set, Point};
use hamming::shatter::{shatters as check_shatters, vc_dimension as vc, ShatterCheck, DEFAULT_MAX_K};
use hamming::verify::{self, Budget, ClaimId, RequestedMode};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

fn err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn json<'py>(py: Python<'py>, value: impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &serde_json::to_value(value).map_err(err)?)
}

/// The graph H(d, q, t) on Z_q^d.
#[pyclass(frozen, from_py_object)]
#[derive(Clone, Copy)]
struct HammingParams(hamming::hamming::HammingParams);

#[pymethods]
impl HammingParams {
    #[new]
    #[pyo3(signature = (d, q, t = 1))]
    fn new(d: usize, q: u32, t: usize) -> PyResult<Self> {
        hamming::hamming::HammingParams::new(d, q, t).map(Self).map_err(err)
    }

    #[getter]
    fn d(&self) -> usize {
        self.0.d()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.q()
    }

    #[getter]
    fn t(&self) -> usize {
        self.0.t()
    }

    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    fn __repr__(&self) -> String {
        self.0.to_string()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// A subset of the vertices of H(d, q, t).
#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct PointSet(hamming::hamming::PointSet);

#[pymethods]
impl PointSet {
    #[new]
    fn new(params: &HammingParams, points: Vec<Vec<u32>>) -> PyResult<Self> {
        hamming::hamming::PointSet::from_coords(params.0, &points).map(Self).map_err(err)
    }

    /// Parses the point-file format: a `d q t` line, then one point per line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_point_set(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn full(params: &HammingParams) -> Self {
        Self(hamming::hamming::PointSet::full(params.0))
    }

    fn to_text(&self) -> String {
        write_point_set(&self.0, &[])
    }

    #[getter]
    fn params(&self) -> HammingParams {
        HammingParams(self.0.params())
    }

    fn points(&self) -> Vec<Vec<u32>> {
        self.0.points().map(|p| p.coords().to_vec()).collect()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __contains__(&self, coords: Vec<u32>) -> bool {
        Point::new(&self.0.params(), coords).is_ok_and(|p| self.0.contains(&p))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("PointSet({}, {} points)", self.0.params(), self.0.len())
    }
}

fn points(set: &PointSet, coords: Vec<Vec<u32>>) -> PyResult<Vec<Point>> {
    coords.into_iter().map(|c| Point::new(&set.0.params(), c).map_err(err)).collect()
}

/// Exact VC-dimension as a dict with `dimension`, `witness` and `refuted_at`.
#[pyfunction]
#[pyo3(signature = (u, max_k = DEFAULT_MAX_K))]
fn vc_dimension<'py>(py: Python<'py>, u: &PointSet, max_k: usize) -> PyResult<Bound<'py, PyAny>> {
    let set = u.0.clone();
    let result = py.detach(move || vc(&set, Some(max_k)));
    json(py, &result)
}

/// True when the neighborhoods of members of `u` shatter `w`.
#[pyfunction]
fn shatters(u: &PointSet, w: Vec<Vec<u32>>) -> PyResult<bool> {
    let w = points(u, w)?;
    Ok(matches!(check_shatters(&w, &u.0).map_err(err)?, ShatterCheck::Shattered(_)))
}

/// Builds `u1`, `u2`, `u3`, `diag`, `band3` or `ustar`.
#[pyfunction]
#[pyo3(signature = (name, q, d = None))]
fn construct(name: &str, q: u32, d: Option<usize>) -> PyResult<PointSet> {
    let spec = ConstructionSpec::from_name(name, d, q).map_err(err)?;
    build(&spec).map(PointSet).map_err(err)
}

fn kind(name: &str) -> PyResult<ConfigKind> {
    Ok(match name.replace(['-', '_'], "").to_ascii_lowercase().as_str() {
        "linetriple" => ConfigKind::LineTriple,
        "corner" => ConfigKind::Corner,
        "fist" => ConfigKind::Fist,
        "rectangle" => ConfigKind::Rectangle,
        "pluck" => ConfigKind::Pluck,
        "fouronaline" => ConfigKind::FourOnALine,
        _ => return Err(PyValueError::new_err(format!("unknown configuration {name:?}"))),
    })
}

/// Runs a detector. Returns None when nothing is found, otherwise the
/// configuration as a dict, with a validated `witness` when one exists.
#[pyfunction]
fn detect<'py>(py: Python<'py>, name: &str, u: &PointSet) -> PyResult<Option<Bound<'py, PyAny>>> {
    let Some(config) = run_detector(kind(name)?, &u.0).map_err(err)? else {
        return Ok(None);
    };
    let out = json(py, &config)?;
    let witness = witness_from_config(&config, &u.0).ok();
    out.set_item("witness", json(py, &witness)?)?;
    Ok(Some(out))
}

/// Checks claims (ids such as "T1.3", or ["all"]) at each q and returns the
/// consolidated report as a dict.
#[pyfunction]
#[pyo3(signature = (claims, qs, d = None, mode = "auto", seed = 0, samples = verify::DEFAULT_SAMPLES, cap = verify::DEFAULT_WORK_CAP))]
#[allow(clippy::too_many_arguments)]
fn check<'py>(
    py: Python<'py>,
    claims: Vec<String>,
    qs: Vec<u32>,
    d: Option<usize>,
    mode: &str,
    seed: u64,
    samples: u64,
    cap: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let (items, notes) = if claims.len() == 1 && claims[0].eq_ignore_ascii_case("all") {
        verify::default_suite(&qs)
    } else {
        let ids = claims.iter().map(|c| c.parse::<ClaimId>()).collect::<Result<Vec<_>, _>>().map_err(err)?;
        verify::suite_for(&ids, d, &qs)
    };
    let mode = match mode {
        "auto" => RequestedMode::Auto,
        "exhaustive" => RequestedMode::Exhaustive,
        "sampled" => RequestedMode::Sampled,
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    let budget = Budget {
        cap,
        samples,
        seed,
        mode,
        progress: None,
    };
    let reports = py.detach(|| verify::run_suite(&items, &budget)).map_err(err)?;
    json(py, verify::suite_report(&reports, &notes))
}

/// Exact threshold for vc >= k: returns (m_star, certificate).
#[pyfunction]
#[pyo3(signature = (params, k, cap = verify::DEFAULT_WORK_CAP))]
fn threshold(py: Python<'_>, params: &HammingParams, k: usize, cap: u64) -> PyResult<(usize, PointSet)> {
    let p = params.0;
    let r = py.detach(move || verify::threshold_search(p, k, cap)).map_err(err)?;
    Ok((r.m_star, PointSet(r.certificate)))
}

#[pymodule]
fn hamming_vc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<HammingParams>()?;
    m.add_class::<PointSet>()?;
    m.add_function(wrap_pyfunction!(vc_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(shatters, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(detect, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(threshold, m)?)?;
    Ok(())
}
