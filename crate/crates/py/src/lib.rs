//! Python module `toc`: constructions, verification and bounds. Objects
//! cross the boundary as the JSON documents the CLI reads and writes.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use toc_core::acceptance;
use toc_core::bounds::exact_value;
use toc_core::catalog;
use toc_core::cert::{paper_style, Certificate, Manifest};
use toc_core::construct::{construct as build, Method};
use toc_core::verify::{verify_tiling, ExpectedSize};
use toc_core::{Error, Params};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parameter(_) | Error::Unsupported(_) | Error::Nonexistent(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// Builds and verifies a tiling; returns its certificate as JSON.
#[pyfunction]
#[pyo3(signature = (q, n, d, w, method = "auto"))]
pub fn construct(q: u32, n: usize, d: usize, w: usize, method: &str) -> PyResult<String> {
    let p = Params::new(q, n, d, w).map_err(py_err)?;
    let m: Method = method.parse().map_err(py_err)?;
    let c = build(&p, m).map_err(py_err)?;
    let manifest = Manifest::new(format!("python construct {method}"), Some(p), 0, 0);
    Ok(Certificate::from_construction(&c, manifest).to_json_string())
}

/// Verifies a certificate; returns the verdict as JSON.
#[pyfunction]
#[pyo3(signature = (certificate, oracle = false))]
pub fn verify(certificate: &str, oracle: bool) -> PyResult<String> {
    let t = Certificate::from_json_str(certificate)
        .and_then(|c| c.to_tiling())
        .map_err(py_err)?;
    let source = if oracle {
        ExpectedSize::Oracle
    } else {
        ExpectedSize::Formula
    };
    Ok(serde_json::to_string(&verify_tiling(&t, source)).expect("verdict json"))
}

/// The tiles of a certificate as `pos.sym` lines.
#[pyfunction]
pub fn paper_style_text(certificate: &str) -> PyResult<String> {
    let t = Certificate::from_json_str(certificate)
        .and_then(|c| c.to_tiling())
        .map_err(py_err)?;
    Ok(paper_style(&t))
}

/// Upper bound, exact value (or None) and sources, as JSON.
#[pyfunction]
pub fn bound(q: u32, n: usize, d: usize, w: usize) -> PyResult<String> {
    let p = Params::new(q, n, d, w).map_err(py_err)?;
    Ok(serde_json::to_string(&exact_value(&p)).expect("bound json"))
}

#[pyfunction]
pub fn catalog_names() -> Vec<String> {
    catalog::names().into_iter().map(String::from).collect()
}

/// Runs one acceptance criterion; returns `(passed, line)`.
#[pyfunction]
pub fn acceptance_criterion(id: u32) -> PyResult<(bool, String)> {
    let r = acceptance::run_criterion(id).map_err(py_err)?;
    Ok((r.passed, r.line()))
}

#[pymodule]
fn toc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(paper_style_text, m)?)?;
    m.add_function(wrap_pyfunction!(bound, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(acceptance_criterion, m)?)?;
    Ok(())
}
