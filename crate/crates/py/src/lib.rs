//! Python bindings. Operands use the same literals as the command line
//! ("(..)", "p:312", "c:2,1", "h:2,1", "(()) ()"), and expansions come back
//! as exact (numerator, denominator, key) tuples.

use hopf_trees::alg::{kernel, ysym};
use hopf_trees::cli::{execute, Command};
use hopf_trees::lit;
use hopf_trees::poset::{Element, Family, MapName, Poset};
use hopf_trees::tree::Tree;
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Term = (BigInt, BigInt, String);

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Run one subcommand and parse the rendered expansion back into terms.
fn expand(cmd: Command) -> PyResult<Vec<Term>> {
    let (text, code) = execute(&cmd).map_err(err)?;
    if code != 0 {
        let last = text.trim_end().lines().last().unwrap_or("command failed");
        return Err(PyValueError::new_err(last.to_string()));
    }
    text.lines()
        .skip(1)
        .map(|l| {
            let mut parts = l.splitn(3, '\t');
            let frac = parts.next().unwrap_or_default();
            let (num, den) = frac.split_once('/').ok_or_else(|| err("malformed term"))?;
            let key = parts.nth(1).ok_or_else(|| err("malformed term"))?.to_string();
            Ok((
                num.parse::<BigInt>().map_err(err)?,
                den.parse::<BigInt>().map_err(err)?,
                key,
            ))
        })
        .collect()
}

fn split_tensor(terms: Vec<Term>) -> PyResult<Vec<(BigInt, BigInt, String, String)>> {
    terms
        .into_iter()
        .map(|(num, den, key)| {
            let (a, b) = key.split_once(" \u{2297} ").ok_or_else(|| err("malformed tensor"))?;
            Ok((num, den, a.to_string(), b.to_string()))
        })
        .collect()
}

fn parse_element(family: Family, n: usize, s: &str) -> PyResult<Element> {
    Ok(match family {
        Family::Weak => Element::Perm(lit::parse_perm(s).map_err(err)?),
        Family::Tamari => Element::Tree(lit::parse_tree(s).map_err(err)?),
        Family::Boolean => Element::Set(lit::parse_subset(s, n.saturating_sub(1)).map_err(err)?),
    })
}

#[pyfunction]
#[pyo3(signature = (algebra, x, y, basis=None))]
fn product(algebra: &str, x: &str, y: &str, basis: Option<String>) -> PyResult<Vec<Term>> {
    expand(Command::Product {
        algebra: algebra.to_string(),
        basis,
        x: x.to_string(),
        y: y.to_string(),
    })
}

#[pyfunction]
#[pyo3(signature = (algebra, x, basis=None, route=None))]
fn coproduct(
    algebra: &str,
    x: &str,
    basis: Option<String>,
    route: Option<String>,
) -> PyResult<Vec<(BigInt, BigInt, String, String)>> {
    split_tensor(expand(Command::Coproduct {
        algebra: algebra.to_string(),
        basis,
        route,
        x: x.to_string(),
    })?)
}

#[pyfunction]
#[pyo3(signature = (algebra, x, basis=None, explicit=false))]
fn antipode(algebra: &str, x: &str, basis: Option<String>, explicit: bool) -> PyResult<Vec<Term>> {
    expand(Command::Antipode {
        algebra: algebra.to_string(),
        basis,
        explicit,
        x: x.to_string(),
    })
}

#[pyfunction]
fn convert(algebra: &str, from_basis: &str, to_basis: &str, x: &str) -> PyResult<Vec<Term>> {
    expand(Command::Convert {
        algebra: algebra.to_string(),
        from: from_basis.to_string(),
        to: to_basis.to_string(),
        x: x.to_string(),
    })
}

/// Apply a morphism, splitting, involution, or structural isomorphism.
#[pyfunction]
#[pyo3(signature = (kind, name, operand, basis=None, n=None, target=None))]
fn basis_map(
    kind: &str,
    name: &str,
    operand: &str,
    basis: Option<String>,
    n: Option<usize>,
    target: Option<String>,
) -> PyResult<Vec<Term>> {
    if kind == "poset" {
        return Err(err("use poset_map for maps between poset elements"));
    }
    expand(Command::Map {
        kind: kind.to_string(),
        name: name.to_string(),
        basis,
        n,
        target,
        operand: operand.to_string(),
    })
}

#[pyfunction]
fn poset_map(name: &str, n: usize, x: &str) -> PyResult<String> {
    let m = MapName::parse(name).map_err(err)?;
    let x = parse_element(m.source(n).family, n, x)?;
    Ok(m.apply(&x, n).map_err(err)?.key())
}

#[pyfunction]
fn leq(family: &str, n: usize, x: &str, y: &str) -> PyResult<bool> {
    let family = Family::parse(family).map_err(err)?;
    let poset = Poset::new(family, n);
    poset
        .leq(&parse_element(family, n, x)?, &parse_element(family, n, y)?)
        .map_err(err)
}

#[pyfunction]
fn moebius(family: &str, n: usize, x: &str, y: &str) -> PyResult<i64> {
    let family = Family::parse(family).map_err(err)?;
    let poset = Poset::new(family, n);
    poset
        .moebius(&parse_element(family, n, x)?, &parse_element(family, n, y)?)
        .map_err(err)
}

#[pyfunction]
fn moebius_row(family: &str, n: usize, x: &str) -> PyResult<Vec<(String, i64)>> {
    let family = Family::parse(family).map_err(err)?;
    let poset = Poset::new(family, n);
    let row = poset.mobius_row(&parse_element(family, n, x)?);
    let mut out: Vec<(String, i64)> = row.iter().map(|(k, v)| (k.clone(), *v)).collect();
    out.sort();
    Ok(out)
}

#[pyfunction]
fn kernel_basis(which: &str, n: usize) -> PyResult<Vec<String>> {
    match which {
        "lambda" => Ok(kernel::kernel_basis_lambda(n)
            .iter()
            .map(lit::perm_literal)
            .collect()),
        "l" => Ok(kernel::kernel_basis_l(n).iter().map(Tree::to_string).collect()),
        other => Err(err(format!("unknown kernel \"{other}\""))),
    }
}

#[pyfunction]
fn cocycle(pair: &str, k: &str, kp: &str) -> PyResult<Vec<Term>> {
    expand(Command::Kernel {
        which: None,
        n: None,
        cocycle: Some(pair.to_string()),
        operands: vec![k.to_string(), kp.to_string()],
    })
}

#[pyfunction]
fn kernel_dims(n: usize) -> (usize, usize) {
    kernel::kernel_dims(n)
}

#[pyfunction]
fn primitives(n: usize) -> Vec<String> {
    ysym::primitives_basis(n).iter().map(Tree::to_string).collect()
}

#[pyfunction]
fn coradical_level(t: &str) -> PyResult<usize> {
    Ok(ysym::coradical_level(&lit::parse_tree(t).map_err(err)?))
}

#[pyfunction]
fn catalan(n: usize) -> usize {
    hopf_trees::tree::catalan_number(n)
}

#[pyfunction]
#[pyo3(signature = (suite, max_n=None))]
fn verify(suite: &str, max_n: Option<usize>) -> PyResult<(bool, usize, Option<String>)> {
    let report = hopf_trees::verify::run_suite(suite, max_n).map_err(err)?;
    Ok((
        report.ok(),
        report.checks,
        report.first_counterexample().map(str::to_string),
    ))
}

#[pymodule]
fn hopf_trees_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(coproduct, m)?)?;
    m.add_function(wrap_pyfunction!(antipode, m)?)?;
    m.add_function(wrap_pyfunction!(convert, m)?)?;
    m.add_function(wrap_pyfunction!(basis_map, m)?)?;
    m.add_function(wrap_pyfunction!(poset_map, m)?)?;
    m.add_function(wrap_pyfunction!(leq, m)?)?;
    m.add_function(wrap_pyfunction!(moebius, m)?)?;
    m.add_function(wrap_pyfunction!(moebius_row, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_basis, m)?)?;
    m.add_function(wrap_pyfunction!(cocycle, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_dims, m)?)?;
    m.add_function(wrap_pyfunction!(primitives, m)?)?;
    m.add_function(wrap_pyfunction!(coradical_level, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
