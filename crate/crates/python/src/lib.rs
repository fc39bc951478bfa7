//! Python bindings for `burnlab-core`.

use burnlab_core::cactus::approx_cactus as core_approx_cactus;
use burnlab_core::ditree::{
    approx_arborescence as core_approx_arborescence, approx_arborescence_2 as core_approx_arborescence_2,
    approx_polytree as core_approx_polytree,
};
use burnlab_core::gen::{self, GenSpec, GraphClass};
use burnlab_core::graph::{self as core_graph, is_cactus};
use burnlab_core::oracle::{
    baseline_3approx as core_baseline_3approx, cycle_formula as core_cycle_formula, exact_burning_number_with,
    oracle_cap, DEFAULT_BUDGET,
};
use burnlab_core::{
    simulate as core_simulate, validate as core_validate, AnyGraph, BurnError, BurningSchedule, DirectedTree,
    TreeClass, UndirectedGraph, Verdict,
};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(burnlab, BurnlabError, PyValueError, "Raised for invalid graphs, schedules and inputs.");

fn err(e: BurnError) -> PyErr {
    BurnlabError::new_err(e.to_string())
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "burnlab", frozen)]
struct PyGraph(UndirectedGraph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        UndirectedGraph::new(n, edges).map(Self).map_err(err)
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        Self(UndirectedGraph::path(n))
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        Self(UndirectedGraph::cycle(n))
    }

    #[staticmethod]
    fn star(leaves: usize) -> Self {
        Self(UndirectedGraph::star(leaves))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_cactus(&self) -> bool {
        is_cactus(&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.edge_count())
    }
}

/// Directed graph whose underlying graph is a tree.
#[pyclass(name = "DiTree", module = "burnlab", frozen)]
struct PyDiTree(DirectedTree);

#[pymethods]
impl PyDiTree {
    #[new]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        DirectedTree::new(n, arcs).map(Self).map_err(err)
    }

    #[staticmethod]
    fn chain(n: usize) -> Self {
        Self(DirectedTree::chain(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn arcs(&self) -> Vec<(usize, usize)> {
        self.0.arcs().to_vec()
    }

    fn roots(&self) -> Vec<usize> {
        self.0.roots()
    }

    /// `"arborescence"`, `"polytree"` or `"invalid"`.
    fn classify(&self) -> &'static str {
        match self.0.classify() {
            TreeClass::Arborescence => "arborescence",
            TreeClass::Polytree => "polytree",
            TreeClass::Invalid => "invalid",
        }
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("DiTree(n={}, roots={})", self.0.n(), self.0.roots().len())
    }
}

#[derive(FromPyObject)]
enum GraphArg<'py> {
    Undirected(PyRef<'py, PyGraph>),
    Directed(PyRef<'py, PyDiTree>),
}

fn wrap(g: AnyGraph, py: Python<'_>) -> PyResult<Py<PyAny>> {
    Ok(match g {
        AnyGraph::Undirected(u) => Py::new(py, PyGraph(u))?.into_any(),
        AnyGraph::Directed(t) => Py::new(py, PyDiTree(t))?.into_any(),
    })
}

/// A schedule from an approximation algorithm and the smallest guess it accepted.
#[pyclass(name = "Approximation", module = "burnlab", frozen, get_all)]
struct PyApproximation {
    schedule: Vec<usize>,
    b_star: u32,
}

#[pymethods]
impl PyApproximation {
    #[getter]
    fn length(&self) -> usize {
        self.schedule.len()
    }

    fn __repr__(&self) -> String {
        format!("Approximation(length={}, b_star={}, schedule={:?})", self.schedule.len(), self.b_star, self.schedule)
    }
}

fn approximation(r: burnlab_core::Result<burnlab_core::Approximation>) -> PyResult<PyApproximation> {
    let a = r.map_err(err)?;
    Ok(PyApproximation {
        schedule: a.schedule.0,
        b_star: a.b_star,
    })
}

#[pyfunction]
fn approx_cactus(g: PyRef<'_, PyGraph>) -> PyResult<PyApproximation> {
    approximation(core_approx_cactus(&g.0))
}

#[pyfunction]
fn baseline_3approx(g: PyRef<'_, PyGraph>) -> PyResult<PyApproximation> {
    approximation(core_baseline_3approx(&g.0))
}

#[pyfunction]
fn approx_polytree(t: PyRef<'_, PyDiTree>) -> PyResult<PyApproximation> {
    approximation(core_approx_polytree(&t.0))
}

#[pyfunction]
fn approx_arborescence_2(t: PyRef<'_, PyDiTree>) -> PyResult<PyApproximation> {
    approximation(core_approx_arborescence_2(&t.0))
}

#[pyfunction]
fn approx_arborescence(t: PyRef<'_, PyDiTree>) -> PyResult<PyApproximation> {
    approximation(core_approx_arborescence(&t.0))
}

/// Burned vertices after running `schedule`; raises if a source is already burned.
#[pyfunction]
fn simulate(g: GraphArg<'_>, schedule: Vec<usize>) -> PyResult<Vec<usize>> {
    let s = BurningSchedule(schedule);
    let sim = match &g {
        GraphArg::Undirected(u) => core_simulate(&u.0, &s),
        GraphArg::Directed(t) => core_simulate(&t.0, &s),
    };
    Ok(sim.map_err(err)?.burned_set())
}

/// `None` if `schedule` burns the whole graph, otherwise the reason it does not.
#[pyfunction]
fn validate(g: GraphArg<'_>, schedule: Vec<usize>) -> Option<String> {
    let s = BurningSchedule(schedule);
    let verdict = match &g {
        GraphArg::Undirected(u) => core_validate(&u.0, &s),
        GraphArg::Directed(t) => core_validate(&t.0, &s),
    };
    match verdict {
        Verdict::Accept => None,
        Verdict::Reject(v) => Some(v.to_string()),
    }
}

/// Exact burning number and an optimal schedule. `cap` limits the vertex count.
#[pyfunction]
#[pyo3(signature = (g, cap=None))]
fn exact_burning_number(py: Python<'_>, g: GraphArg<'_>, cap: Option<usize>) -> PyResult<(u32, Vec<usize>)> {
    let cap = cap.unwrap_or_else(oracle_cap);
    let r = match &g {
        GraphArg::Undirected(u) => {
            let u = &u.0;
            py.detach(|| exact_burning_number_with(u, cap, DEFAULT_BUDGET))
        }
        GraphArg::Directed(t) => {
            let t = &t.0;
            py.detach(|| exact_burning_number_with(t, cap, DEFAULT_BUDGET))
        }
    };
    let r = r.map_err(err)?;
    Ok((r.b, r.witness.0))
}

/// Burning number of a path or cycle on `n` vertices.
#[pyfunction]
fn cycle_formula(n: usize) -> u32 {
    core_cycle_formula(n)
}

/// Seeded random `"cactus"`, `"polytree"` or `"arborescence"`.
#[pyfunction]
#[pyo3(signature = (class_, n, seed, cycle_fraction=GenSpec::DEFAULT_CYCLE_FRACTION, max_out_degree=GenSpec::DEFAULT_MAX_OUT_DEGREE))]
fn generate(
    py: Python<'_>,
    class_: &str,
    n: usize,
    seed: u64,
    cycle_fraction: f64,
    max_out_degree: usize,
) -> PyResult<Py<PyAny>> {
    let class: GraphClass = class_.parse().map_err(err)?;
    let spec = GenSpec {
        class,
        n,
        seed,
        cycle_fraction,
        max_out_degree,
    };
    wrap(gen::generate(&spec).map_err(err)?, py)
}

#[pyfunction]
fn read_graph(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    wrap(core_graph::read_graph(text).map_err(err)?, py)
}

#[pyfunction]
fn write_graph(g: GraphArg<'_>) -> String {
    let any: AnyGraph = match g {
        GraphArg::Undirected(u) => u.0.clone().into(),
        GraphArg::Directed(t) => t.0.clone().into(),
    };
    core_graph::write_graph(&any)
}

#[pymodule]
fn burnlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BurnlabError", m.py().get_type::<BurnlabError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDiTree>()?;
    m.add_class::<PyApproximation>()?;
    m.add_function(wrap_pyfunction!(approx_cactus, m)?)?;
    m.add_function(wrap_pyfunction!(baseline_3approx, m)?)?;
    m.add_function(wrap_pyfunction!(approx_polytree, m)?)?;
    m.add_function(wrap_pyfunction!(approx_arborescence_2, m)?)?;
    m.add_function(wrap_pyfunction!(approx_arborescence, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(exact_burning_number, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_formula, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(read_graph, m)?)?;
    m.add_function(wrap_pyfunction!(write_graph, m)?)?;
    Ok(())
}
