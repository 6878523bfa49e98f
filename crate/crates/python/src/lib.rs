//! Python bindings. Elements are passed around as `Element` objects tied to
//! the group that created them; facets are lists of node indices.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use affine_schubert_core as core;
use core::syntax::{format_element, format_translation_form, parse_element};
use core::{AffineWeylElement, CartanType, Coweight, Facet};

fn py_err(e: core::Error) -> PyErr {
    match e {
        core::Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(frozen, skip_from_py_object, module = "affine_schubert")]
#[derive(Clone)]
struct Element {
    group: Arc<core::AffineWeylGroup>,
    inner: AffineWeylElement,
}

#[pymethods]
impl Element {
    #[getter]
    fn translation(&self) -> Vec<i64> {
        self.inner.translation().0.clone()
    }

    #[getter]
    fn finite_part(&self) -> Vec<Vec<i64>> {
        self.inner.finite_part().rows()
    }

    fn length(&self) -> usize {
        self.group.length(&self.inner)
    }

    fn reduced_word(&self) -> Vec<usize> {
        self.group.reduced_word(&self.inner).0
    }

    fn inverse(&self) -> Element {
        self.wrap(self.group.inverse(&self.inner))
    }

    fn translation_form(&self) -> String {
        format_translation_form(&self.group, &self.inner)
    }

    fn __mul__(&self, other: &Element) -> Element {
        self.wrap(self.group.multiply(&self.inner, &other.inner))
    }

    fn __le__(&self, other: &Element) -> bool {
        self.group.bruhat_leq(&self.inner, &other.inner)
    }

    fn __eq__(&self, other: &Element) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format_element(&self.group, &self.inner)
    }
}

impl Element {
    fn wrap(&self, inner: AffineWeylElement) -> Element {
        Element {
            group: Arc::clone(&self.group),
            inner,
        }
    }
}

type ResolutionTriple = (Vec<usize>, Vec<usize>, Element);
type StrataTriple = (Vec<Element>, Vec<usize>, Vec<(usize, usize)>);

/// The affine Weyl group of type `cartan_type` (A, B, C or D) and rank `rank`.
#[pyclass(frozen, module = "affine_schubert")]
struct AffineWeylGroup {
    inner: Arc<core::AffineWeylGroup>,
}

impl AffineWeylGroup {
    fn wrap(&self, inner: AffineWeylElement) -> Element {
        Element {
            group: Arc::clone(&self.inner),
            inner,
        }
    }

    fn facet(&self, nodes: Option<Vec<usize>>) -> PyResult<Facet> {
        self.inner.facet(nodes.unwrap_or_default()).map_err(py_err)
    }
}

#[pymethods]
impl AffineWeylGroup {
    #[new]
    fn new(cartan_type: &str, rank: usize) -> PyResult<Self> {
        let t: CartanType = cartan_type.parse().map_err(py_err)?;
        let inner = core::AffineWeylGroup::build(t, rank).map_err(py_err)?;
        Ok(AffineWeylGroup {
            inner: Arc::new(inner),
        })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn identity(&self) -> Element {
        self.wrap(self.inner.identity())
    }

    /// Parses `w:0,1,0`, `t:-1,0|id`, `t:-1,0|w:1,2,1` or `id`.
    fn element(&self, text: &str) -> PyResult<Element> {
        Ok(self.wrap(parse_element(&self.inner, text).map_err(py_err)?))
    }

    #[pyo3(name = "from_word")]
    fn word_element(&self, word: Vec<usize>) -> PyResult<Element> {
        Ok(self.wrap(self.inner.from_word(&word).map_err(py_err)?))
    }

    #[pyo3(name = "from_translation")]
    fn translation_element(&self, mu: Vec<i64>) -> PyResult<Element> {
        Ok(self.wrap(self.inner.from_translation(&Coweight(mu)).map_err(py_err)?))
    }

    fn simple_reflection(&self, i: usize) -> PyResult<Element> {
        Ok(self.wrap(self.inner.simple_reflection(i).map_err(py_err)?))
    }

    fn length(&self, w: &Element) -> usize {
        self.inner.length(&w.inner)
    }

    fn bruhat_leq(&self, u: &Element, w: &Element) -> bool {
        self.inner.bruhat_leq(&u.inner, &w.inner)
    }

    #[pyo3(signature = (w, right=None))]
    fn min_right_rep(&self, w: &Element, right: Option<Vec<usize>>) -> PyResult<Element> {
        let f = self.facet(right)?;
        Ok(self.wrap(self.inner.min_right_rep(&w.inner, &f)))
    }

    #[pyo3(signature = (w, left=None, right=None))]
    fn maxmin_rep(
        &self,
        w: &Element,
        left: Option<Vec<usize>>,
        right: Option<Vec<usize>>,
    ) -> PyResult<Element> {
        let (l, r) = (self.facet(left)?, self.facet(right)?);
        Ok(self.wrap(self.inner.maxmin_rep(&w.inner, &l, &r)))
    }

    #[pyo3(signature = (w, left=None, right=None))]
    fn waldspurger_length(
        &self,
        w: &Element,
        left: Option<Vec<usize>>,
        right: Option<Vec<usize>>,
    ) -> PyResult<usize> {
        let (l, r) = (self.facet(left)?, self.facet(right)?);
        self.inner
            .waldspurger_length(&w.inner, &l, &r)
            .map_err(py_err)
    }

    #[pyo3(signature = (w, left=None, right=None))]
    fn schubert_dim(
        &self,
        w: &Element,
        left: Option<Vec<usize>>,
        right: Option<Vec<usize>>,
    ) -> PyResult<usize> {
        let (l, r) = (self.facet(left)?, self.facet(right)?);
        Ok(self.inner.schubert_dim(&w.inner, &l, &r))
    }

    #[pyo3(signature = (max_len, left=None, right=None))]
    fn enumerate_reps(
        &self,
        max_len: usize,
        left: Option<Vec<usize>>,
        right: Option<Vec<usize>>,
    ) -> PyResult<Vec<Element>> {
        let (l, r) = (self.facet(left)?, self.facet(right)?);
        Ok(self
            .inner
            .enumerate_reps(&l, &r, max_len)
            .into_iter()
            .map(|x| self.wrap(x))
            .collect())
    }

    /// Returns `(elements, dims, covers)` with covers as index pairs.
    #[pyo3(signature = (w, left=None, right=None))]
    fn strata(
        &self,
        w: &Element,
        left: Option<Vec<usize>>,
        right: Option<Vec<usize>>,
    ) -> PyResult<StrataTriple> {
        let (l, r) = (self.facet(left)?, self.facet(right)?);
        let p = self.inner.strata(&w.inner, &l, &r);
        let elements = p.elements.iter().map(|x| self.wrap(x.clone())).collect();
        Ok((elements, p.dims, p.covers))
    }

    /// Strata poset as a DOT digraph.
    #[pyo3(signature = (w, left=None, right=None))]
    fn strata_dot(
        &self,
        w: &Element,
        left: Option<Vec<usize>>,
        right: Option<Vec<usize>>,
    ) -> PyResult<String> {
        let (l, r) = (self.facet(left)?, self.facet(right)?);
        Ok(self.inner.strata(&w.inner, &l, &r).to_dot())
    }

    fn antidominant_rep(&self, mu: Vec<i64>) -> PyResult<Vec<i64>> {
        Ok(self
            .inner
            .antidominant_rep(&Coweight(mu))
            .map_err(py_err)?
            .0)
    }

    fn antidominance_leq(&self, lam: Vec<i64>, mu: Vec<i64>) -> PyResult<bool> {
        self.inner
            .antidominance_leq(&Coweight(lam), &Coweight(mu))
            .map_err(py_err)
    }

    /// List of `(P, Q, factor)` triples for the minimal representative `w`.
    #[pyo3(signature = (w, facet=None))]
    fn resolutive_sequence(
        &self,
        w: &Element,
        facet: Option<Vec<usize>>,
    ) -> PyResult<Vec<ResolutionTriple>> {
        let f = self.facet(facet)?;
        let steps = self
            .inner
            .resolutive_sequence(&w.inner, &f)
            .map_err(py_err)?;
        Ok(steps
            .into_iter()
            .map(|s| {
                (
                    s.parahoric.to_vec(),
                    s.intersection.to_vec(),
                    self.wrap(s.factor),
                )
            })
            .collect())
    }

    fn __repr__(&self) -> String {
        format!("AffineWeylGroup({})", self.inner.datum())
    }
}

/// The `C_m` example for `mu_p`, as a JSON string with alphabetical keys.
#[pyfunction]
fn unitary_example(m: usize, p: usize) -> PyResult<String> {
    let (g, ex) = core::unitary_example(m, p).map_err(py_err)?;
    Ok(serde_json::to_string(&ex.to_json(&g)).expect("JSON values serialize"))
}

/// Runs the command-line interface on `args` and returns
/// `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let out = core::cli::run(std::iter::once("affine-schubert".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn affine_schubert(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<AffineWeylGroup>()?;
    m.add_class::<Element>()?;
    m.add_function(wrap_pyfunction!(unitary_example, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
