//! Python bindings for the `dirpoly` crate.
//!
//! Naturals cross the boundary as Python `int`, probabilities as
//! `fractions.Fraction`. Library errors raise `ValueError`.

use std::collections::BTreeMap;

use ::dirpoly as dp;
use dp::{BigRational, BigUint};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyFloat, PyString};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A Dirichlet polynomial `sum a_j * j^y` with natural coefficients.
#[pyclass(
    name = "DirPoly",
    module = "dirpoly",
    frozen,
    skip_from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyDirPoly(pub dp::DirPoly);

#[pymethods]
impl PyDirPoly {
    /// `DirPoly("4^y + 3")`, `DirPoly({4: 1, 1: 3})` mapping base to
    /// coefficient, or `DirPoly()` for zero.
    #[new]
    #[pyo3(signature = (source = None))]
    fn new(source: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let Some(source) = source else {
            return Ok(Self(dp::DirPoly::zero()));
        };
        if let Ok(text) = source.cast::<PyString>() {
            return dp::parse(text.to_str()?).map(Self).map_err(value_error);
        }
        let terms: BTreeMap<BigUint, BigUint> = source.extract()?;
        Ok(Self(dp::DirPoly::from_terms(terms)))
    }

    #[staticmethod]
    fn exponential(base: BigUint) -> Self {
        Self(dp::DirPoly::exponential(base))
    }

    #[staticmethod]
    fn constant(a: BigUint) -> Self {
        Self(dp::DirPoly::constant(a))
    }

    /// `(base, coefficient)` pairs in ascending base order.
    fn terms(&self) -> Vec<(BigUint, BigUint)> {
        self.0
            .terms()
            .map(|(b, a)| (b.clone(), a.clone()))
            .collect()
    }

    fn coefficient(&self, base: BigUint) -> BigUint {
        self.0.coefficient(&base)
    }

    /// `|d(n)|`.
    fn eval(&self, n: u64) -> BigUint {
        self.0.eval(n)
    }

    fn num_outcomes(&self) -> BigUint {
        self.0.num_outcomes()
    }

    fn num_draws(&self) -> BigUint {
        self.0.num_draws()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn scale(&self, a: BigUint) -> Self {
        Self(self.0.scale(&a))
    }

    #[pyo3(signature = (labels = None))]
    fn to_bundle(&self, labels: Option<Vec<String>>) -> PyResult<PyBundle> {
        dp::LabelledBundle::from_poly(&self.0, labels)
            .map(PyBundle)
            .map_err(value_error)
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DirPoly('{}')", self.0)
    }
}

/// A finite set of draws over labelled outcomes, one fibre per outcome.
#[pyclass(
    name = "Bundle",
    module = "dirpoly",
    frozen,
    skip_from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyBundle(pub dp::LabelledBundle);

#[pymethods]
impl PyBundle {
    /// `Bundle([("a", 2), ("b", 1)])`.
    #[new]
    fn new(fibres: Vec<(String, BigUint)>) -> PyResult<Self> {
        dp::LabelledBundle::new(fibres)
            .map(Self)
            .map_err(value_error)
    }

    /// Fibres labelled `x1, x2, ...`.
    #[staticmethod]
    fn from_sizes(sizes: Vec<BigUint>) -> Self {
        Self(dp::LabelledBundle::from_sizes(sizes))
    }

    fn labels(&self) -> Vec<String> {
        self.0.labels().map(str::to_owned).collect()
    }

    fn sizes(&self) -> Vec<BigUint> {
        self.0.sizes().cloned().collect()
    }

    fn fibres(&self) -> Vec<(String, BigUint)> {
        self.0
            .fibres()
            .iter()
            .map(|f| (f.label.clone(), f.size.clone()))
            .collect()
    }

    fn size_of(&self, label: &str) -> Option<BigUint> {
        self.0.size_of(label).cloned()
    }

    fn num_outcomes(&self) -> usize {
        self.0.num_outcomes()
    }

    fn num_draws(&self) -> BigUint {
        self.0.num_draws()
    }

    fn to_poly(&self) -> PyDirPoly {
        PyDirPoly(self.0.to_poly())
    }

    fn __len__(&self) -> usize {
        self.0.num_outcomes()
    }

    fn __repr__(&self) -> String {
        let fibres: Vec<String> = self
            .0
            .fibres()
            .iter()
            .map(|f| format!("({:?}, {})", f.label, f.size))
            .collect();
        format!("Bundle([{}])", fibres.join(", "))
    }
}

/// An element of the rectangle rig, stored as area and power product `W^A`.
#[pyclass(
    name = "Rect",
    module = "dirpoly",
    frozen,
    skip_from_py_object,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyRect(pub dp::RectValue);

#[pymethods]
impl PyRect {
    #[new]
    fn new(area: BigUint, power_product: BigUint) -> Self {
        Self(dp::RectValue::new(area, power_product))
    }

    #[getter]
    fn area(&self) -> BigUint {
        self.0.area().clone()
    }

    #[getter]
    fn power_product(&self) -> BigUint {
        self.0.power_product().clone()
    }

    /// `(W, relative error bound)`; raises at zero area.
    fn width(&self) -> PyResult<(f64, f64)> {
        let w = self.0.width().map_err(value_error)?;
        Ok((w.value, w.relative_error_bound))
    }

    fn __add__(&self, other: PyRef<'_, Self>) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __mul__(&self, other: PyRef<'_, Self>) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __repr__(&self) -> String {
        format!("Rect({}, {})", self.0.area(), self.0.power_product())
    }
}

#[pyclass(
    name = "Measures",
    module = "dirpoly",
    frozen,
    skip_from_py_object,
    get_all
)]
#[derive(Clone)]
pub struct PyMeasures {
    area: BigUint,
    power_product: BigUint,
    width: f64,
    entropy: f64,
    length: f64,
}

impl From<dp::Measures> for PyMeasures {
    fn from(m: dp::Measures) -> Self {
        Self {
            area: m.area,
            power_product: m.power_product,
            width: m.width,
            entropy: m.entropy,
            length: m.length,
        }
    }
}

#[pymethods]
impl PyMeasures {
    fn __repr__(&self) -> String {
        format!(
            "Measures(area={}, power_product={}, width={}, entropy={}, length={})",
            self.area, self.power_product, self.width, self.entropy, self.length
        )
    }
}

#[pyclass(
    name = "CrossMeasures",
    module = "dirpoly",
    frozen,
    skip_from_py_object,
    get_all
)]
#[derive(Clone)]
pub struct PyCrossMeasures {
    cross_entropy: f64,
    cross_area: BigUint,
    cross_power_product: BigUint,
    cross_width: f64,
    cross_length: f64,
    kl_divergence: f64,
    degenerate: bool,
}

impl From<dp::CrossMeasures> for PyCrossMeasures {
    fn from(m: dp::CrossMeasures) -> Self {
        Self {
            degenerate: m.is_degenerate(),
            cross_entropy: m.cross_entropy,
            cross_area: m.cross_area,
            cross_power_product: m.cross_power_product,
            cross_width: m.cross_width,
            cross_length: m.cross_length,
            kl_divergence: m.kl_divergence,
        }
    }
}

#[pymethods]
impl PyCrossMeasures {
    fn __repr__(&self) -> String {
        format!(
            "CrossMeasures(cross_entropy={}, cross_area={}, cross_width={}, cross_length={}, kl_divergence={})",
            self.cross_entropy, self.cross_area, self.cross_width, self.cross_length, self.kl_divergence
        )
    }
}

#[pyclass(
    name = "CheckReport",
    module = "dirpoly",
    frozen,
    skip_from_py_object,
    get_all
)]
pub struct PyCheckReport {
    measures: PyMeasures,
    tolerance: f64,
    float_residual: f64,
    log_residual: f64,
    /// `"pass"` or `"fail"`.
    status: String,
}

#[pyclass(
    name = "CrossCheckReport",
    module = "dirpoly",
    frozen,
    skip_from_py_object,
    get_all
)]
pub struct PyCrossCheckReport {
    measures: PyCrossMeasures,
    tolerance: f64,
    residual: Option<f64>,
    /// `"pass"`, `"fail"` or `"degenerate"`.
    status: String,
}

#[pyfunction]
fn parse(text: &str) -> PyResult<PyDirPoly> {
    dp::parse(text).map(PyDirPoly).map_err(value_error)
}

#[pyfunction]
fn h_map(d: &PyDirPoly) -> PyRect {
    PyRect(dp::h_map(&d.0))
}

#[pyfunction]
fn measures(d: &PyDirPoly) -> PyResult<PyMeasures> {
    dp::measures(&d.0).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn entropy(b: &PyBundle) -> PyResult<f64> {
    dp::entropy(&b.0).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (d, tol = dp::DEFAULT_TOLERANCE))]
fn check_rectangle_area(d: &PyDirPoly, tol: f64) -> PyResult<PyCheckReport> {
    let r = dp::check_rectangle_area(&d.0, tol).map_err(value_error)?;
    let status = if r.passed() { "pass" } else { "fail" };
    Ok(PyCheckReport {
        status: status.into(),
        tolerance: r.tolerance,
        float_residual: r.float_residual,
        log_residual: r.log_residual,
        measures: r.measures.into(),
    })
}

#[pyfunction]
fn cross_measures(d: &PyBundle, e: &PyBundle) -> PyResult<PyCrossMeasures> {
    dp::cross_measures(&d.0, &e.0)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (d, e, tol = dp::DEFAULT_TOLERANCE))]
fn check_cross_rectangle_area(
    d: &PyBundle,
    e: &PyBundle,
    tol: f64,
) -> PyResult<PyCrossCheckReport> {
    let r = dp::check_cross_rectangle_area(&d.0, &e.0, tol).map_err(value_error)?;
    Ok(PyCrossCheckReport {
        status: r.status.to_string(),
        tolerance: r.tolerance,
        residual: r.residual,
        measures: r.measures.into(),
    })
}

#[pyfunction]
fn kl_divergence(d: &PyBundle, e: &PyBundle) -> PyResult<f64> {
    dp::kl_divergence(&d.0, &e.0).map_err(value_error)
}

/// `|Dir(d, e)|`.
#[pyfunction]
fn hom_count(d: &PyDirPoly, e: &PyDirPoly) -> BigUint {
    dp::hom_count(&d.0, &e.0)
}

#[pyfunction]
fn hom_count_over_base(d: &PyBundle, e: &PyBundle) -> PyResult<BigUint> {
    dp::hom_count_over_base(&d.0, &e.0).map_err(value_error)
}

/// Counts bundle morphisms one by one; small bundles only.
#[pyfunction]
#[pyo3(signature = (d, e, over_base = false))]
fn count_bundle_morphisms(d: &PyBundle, e: &PyBundle, over_base: bool) -> PyResult<usize> {
    Ok(dp::bundle_morphisms(&d.0, &e.0, over_base)
        .map_err(value_error)?
        .count())
}

fn rational(p: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    if p.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err(
            "probabilities must be exact: use int, str or fractions.Fraction",
        ));
    }
    let text = p.str()?;
    text.to_str()?
        .trim()
        .parse()
        .map_err(|_| value_error(format!("not a rational number: {text}")))
}

/// The smallest bundle realising `[(label, probability), ...]`.
#[pyfunction]
fn from_distribution(entries: Vec<(String, Bound<'_, PyAny>)>) -> PyResult<PyBundle> {
    let entries = entries
        .into_iter()
        .map(|(label, p)| Ok((label, rational(&p)?)))
        .collect::<PyResult<Vec<_>>>()?;
    let p = dp::RationalDistribution::new(entries).map_err(value_error)?;
    Ok(PyBundle(dp::from_rational_distribution(&p)))
}

/// `[(label, Fraction), ...]`.
#[pyfunction]
fn to_distribution<'py>(
    py: Python<'py>,
    b: &PyBundle,
) -> PyResult<Vec<(String, Bound<'py, PyAny>)>> {
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    let p = dp::to_distribution(&b.0).map_err(value_error)?;
    p.entries()
        .iter()
        .map(|(label, q)| {
            Ok((
                label.clone(),
                fraction.call1((q.numer().clone(), q.denom().clone()))?,
            ))
        })
        .collect()
}

#[pyfunction]
fn product_bundle(b1: &PyBundle, b2: &PyBundle) -> PyBundle {
    PyBundle(dp::product_bundle(&b1.0, &b2.0))
}

#[pymodule]
#[pyo3(name = "dirpoly")]
fn dirpoly_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDirPoly>()?;
    m.add_class::<PyBundle>()?;
    m.add_class::<PyRect>()?;
    m.add_class::<PyMeasures>()?;
    m.add_class::<PyCrossMeasures>()?;
    m.add_class::<PyCheckReport>()?;
    m.add_class::<PyCrossCheckReport>()?;
    m.add("DEFAULT_TOLERANCE", dp::DEFAULT_TOLERANCE)?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(h_map, m)?)?;
    m.add_function(wrap_pyfunction!(measures, m)?)?;
    m.add_function(wrap_pyfunction!(entropy, m)?)?;
    m.add_function(wrap_pyfunction!(check_rectangle_area, m)?)?;
    m.add_function(wrap_pyfunction!(cross_measures, m)?)?;
    m.add_function(wrap_pyfunction!(check_cross_rectangle_area, m)?)?;
    m.add_function(wrap_pyfunction!(kl_divergence, m)?)?;
    m.add_function(wrap_pyfunction!(hom_count, m)?)?;
    m.add_function(wrap_pyfunction!(hom_count_over_base, m)?)?;
    m.add_function(wrap_pyfunction!(count_bundle_morphisms, m)?)?;
    m.add_function(wrap_pyfunction!(from_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(to_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(product_bundle, m)?)?;
    Ok(())
}
