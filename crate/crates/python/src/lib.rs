//! Python bindings. Polynomials cross the boundary as strings in the
//! variable names of the owning object.

use macdual::admissible::{check_family, check_weak, format_family, parse_family, AdmissibleFamily};
use macdual::construct::{cone_family, effective_construct, semigroup_presentation};
use macdual::dpmodule::{contract as dp_contract, pairing as dp_pairing, DualSubmodule};
use macdual::duality::{annihilator as dp_annihilator, ideal_contains, ideal_equal, inverse_system, Ideal as CoreIdeal};
use macdual::exactalg::scalar::format_scalar;
use macdual::quotient::{artinian_report, is_level, LevelOptions};
use macdual::{Side, VarNames};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use std::collections::BTreeMap;

fn err(e: macdual::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn names(vars: &str) -> PyResult<VarNames> {
    VarNames::parse_spec(vars).map_err(err)
}

/// Ideal of a polynomial ring over Q.
#[pyclass(name = "Ideal", module = "macdual", frozen)]
struct PyIdeal {
    names: VarNames,
    inner: CoreIdeal,
}

#[pymethods]
impl PyIdeal {
    /// `Ideal("x,y,z", "y^4, yz, z^4")`; `vars` may also be a count.
    #[new]
    fn new(vars: &str, generators: &str) -> PyResult<Self> {
        let names = names(vars)?;
        let inner = CoreIdeal::parse(&names, generators).map_err(err)?;
        Ok(PyIdeal { names, inner })
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner.sorted_generators().iter().map(|g| self.names.format(g)).collect()
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    fn is_graded(&self) -> bool {
        self.inner.is_graded()
    }

    /// `(member, certainty)`.
    #[pyo3(signature = (f, truncation=None))]
    fn contains(&self, f: &str, truncation: Option<u32>) -> PyResult<(bool, String)> {
        let p = self.names.parse_ring(f).map_err(err)?;
        let (b, c) = ideal_contains(&self.inner, &p, truncation).map_err(err)?;
        Ok((b, c.to_string()))
    }

    #[pyo3(signature = (other, truncation=None))]
    fn equals(&self, other: &PyIdeal, truncation: Option<u32>) -> PyResult<(bool, String)> {
        let (b, c) = ideal_equal(&self.inner, &other.inner, truncation).map_err(err)?;
        Ok((b, c.to_string()))
    }

    /// Basis of `I^⊥ ∩ D_{<=n}` by degree, and its certainty.
    fn inverse_system(&self, n: u32) -> (BTreeMap<u32, Vec<String>>, String) {
        let p = inverse_system(&self.inner, n);
        let by = p.by_degree().into_iter().map(|(d, v)| (d, v.iter().map(|f| self.names.format(f)).collect())).collect();
        (by, p.certainty.to_string())
    }

    /// Hilbert function, socle degree, type and levelness of an Artinian quotient.
    #[pyo3(signature = (cap=12))]
    fn artinian_report<'py>(&self, py: Python<'py>, cap: u32) -> PyResult<Bound<'py, PyDict>> {
        let r = artinian_report(&self.inner, cap).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("hilbert", r.hilbert)?;
        d.set_item("socle_degree", r.socle_degree)?;
        d.set_item("type", r.socle_type)?;
        d.set_item("level", r.level)?;
        d.set_item("dual_degrees", r.dual_degrees)?;
        Ok(d)
    }

    /// Levelness of `R/I` of dimension `dim` via random or given reductions.
    #[pyo3(signature = (dim, seed=1, trials=3, reduction=None))]
    fn is_level<'py>(
        &self,
        py: Python<'py>,
        dim: usize,
        seed: u64,
        trials: usize,
        reduction: Option<Vec<String>>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let reduction = match reduction {
            Some(v) => Some(v.iter().map(|s| self.names.parse_ring(s)).collect::<Result<Vec<_>, _>>().map_err(err)?),
            None => None,
        };
        let opts = LevelOptions { seed, trials, reduction, ..Default::default() };
        let r = is_level(&self.inner, dim, &opts).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("level", r.level)?;
        d.set_item("multiplicity", r.multiplicity)?;
        d.set_item("socle_degree", r.socle_degree)?;
        d.set_item("stability", r.stability)?;
        let first = &r.trials[0].report;
        d.set_item("hilbert", first.hilbert.clone())?;
        d.set_item("type", first.socle_type)?;
        d.set_item("dual_degrees", first.dual_degrees.clone())?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("Ideal({})", self.inner.format(&self.names))
    }
}

/// Finite family `{H_n^j}` of dual polynomials.
#[pyclass(name = "Family", module = "macdual", frozen)]
struct PyFamily {
    inner: AdmissibleFamily,
}

#[pymethods]
impl PyFamily {
    /// Parses the text format (`d=.., tau=.., t0=.., vars=.., z=..` header,
    /// then `H[n][j] = ...` lines).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyFamily { inner: parse_family(text).map_err(err)? })
    }

    /// Family `H_n = X1^(|n|-d) H` over the given forms.
    #[staticmethod]
    #[pyo3(signature = (vars, h, t0, d=1))]
    fn cone(vars: &str, h: Vec<String>, t0: u32, d: usize) -> PyResult<Self> {
        let v = names(vars)?;
        let hs = h.iter().map(|s| v.parse_dual(s)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        Ok(PyFamily { inner: cone_family(&v, &hs, d, t0).map_err(err)? })
    }

    fn to_text(&self) -> String {
        format_family(&self.inner)
    }

    /// Outcome of the three admissibility conditions as a dict.
    fn check<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = check_family(&self.inner);
        let d = PyDict::new(py);
        d.set_item("admissible", r.admissible())?;
        for (k, c) in [("cond1", &r.cond1), ("cond2", &r.cond2), ("cond3", &r.cond3)] {
            let fails: Vec<(Vec<u32>, Option<String>)> = c
                .failures
                .iter()
                .map(|f| (f.n.to_vec(), f.witness.as_ref().map(|w| self.inner.names().format(w))))
                .collect();
            d.set_item(k, fails)?;
        }
        Ok(d)
    }

    fn check_weak(&self) -> bool {
        check_weak(&self.inner).pass()
    }

    /// `(ideal, extendable)` from the effective construction.
    fn effective_construct(&self) -> PyResult<(PyIdeal, bool)> {
        let e = effective_construct(&self.inner).map_err(err)?;
        Ok((PyIdeal { names: self.inner.names().clone(), inner: e.ideal }, e.extendable))
    }
}

/// `f o F` as a dual polynomial.
#[pyfunction]
fn contract(vars: &str, f: &str, g: &str) -> PyResult<String> {
    let v = names(vars)?;
    let r = dp_contract(&v.parse_ring(f).map_err(err)?, &v.parse_dual(g).map_err(err)?).map_err(err)?;
    Ok(v.format(&r))
}

/// `<f, F>` as a rational string.
#[pyfunction]
fn pairing(vars: &str, f: &str, g: &str) -> PyResult<String> {
    let v = names(vars)?;
    let r = dp_pairing(&v.parse_ring(f).map_err(err)?, &v.parse_dual(g).map_err(err)?).map_err(err)?;
    Ok(format_scalar(&r))
}

/// Minimal generators of `ann<F_1, ..>`, optionally only up to `bound`.
#[pyfunction]
#[pyo3(signature = (vars, dual, bound=None))]
fn annihilator(vars: &str, dual: Vec<String>, bound: Option<u32>) -> PyResult<PyIdeal> {
    let v = names(vars)?;
    let gens = dual.iter().map(|s| v.parse(s, Side::Dual)).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let w = DualSubmodule::closure(v.len(), &gens).map_err(err)?;
    let a = dp_annihilator(&w, bound, &[]).map_err(err)?;
    Ok(PyIdeal { names: v, inner: a.ideal })
}

/// Minimal presentation ideal of `K[t^a : a in gens]`.
#[pyfunction]
fn semigroup_ideal(gens: Vec<u64>) -> PyResult<PyIdeal> {
    let p = semigroup_presentation(&gens).map_err(err)?;
    let n = p.weights.len();
    let v = if n <= 4 { VarNames::new(&["x", "y", "z", "w"][..n]).map_err(err)? } else { VarNames::indexed(n) };
    Ok(PyIdeal { names: v, inner: p.ideal() })
}

/// Replays a worked example: `(pass, lines)`.
#[pyfunction]
fn run_example(id: &str) -> PyResult<(bool, Vec<String>)> {
    let o = macdual::fixtures::run_example(id).map_err(err)?;
    let mut lines = vec![o.summary];
    lines.extend(o.lines);
    Ok((o.pass, lines))
}

#[pymodule(name = "macdual")]
fn macdual_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyFamily>()?;
    m.add_function(wrap_pyfunction!(contract, m)?)?;
    m.add_function(wrap_pyfunction!(pairing, m)?)?;
    m.add_function(wrap_pyfunction!(annihilator, m)?)?;
    m.add_function(wrap_pyfunction!(semigroup_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(run_example, m)?)?;
    m.add("EXAMPLES", macdual::fixtures::EXAMPLE_IDS.to_vec())?;
    Ok(())
}
