//! End-to-end acceptance battery: ten numbered criteria, one printed
//! pass/fail line each. Every criterion must hold for the build to count.

use hopf_trees::alg::lincomb::{antipode, coproduct, scalar, tensor_apply, HopfAlg, Vect};
use hopf_trees::alg::{ysym, ysym::YsymF, ysym::YsymM};
use hopf_trees::lit::parse_tree;
use hopf_trees::tree::{catalan_number, Tree};
use hopf_trees::verify::run_suite;

fn suite(name: &str) -> Result<(), String> {
    let report = run_suite(name, None).map_err(|e| e.to_string())?;
    if report.ok() {
        Ok(())
    } else {
        Err(format!(
            "suite {name}: {}",
            report.first_counterexample().unwrap_or("unknown failure")
        ))
    }
}

fn t(s: &str) -> Tree {
    parse_tree(s).unwrap()
}

/// Delta(M_r) matches the conversion route for n <= 6, primitive counts are
/// Catalan(n-1) for n <= 8, and the Hilbert recursion holds for n <= 10.
fn coproduct_grading() -> Result<(), String> {
    for n in 0..=6 {
        for r in Tree::all(n) {
            let v = Vect::basis(r.clone());
            let direct = coproduct::<YsymM>(&v);
            let via_f = tensor_apply(&coproduct::<YsymF>(&ysym::m_to_f(&v)), |k| {
                ysym::f_to_m(&Vect::basis(k.clone()))
            });
            if direct != via_f {
                return Err(format!("coproduct mismatch at {r}"));
            }
        }
    }
    for n in 1..=8 {
        if ysym::primitives_basis(n).len() != catalan_number(n - 1) {
            return Err(format!("primitive count wrong at degree {n}"));
        }
    }
    for n in 0..=10 {
        ysym::grading_check(n)?;
    }
    Ok(())
}

/// The closed antipode formula agrees with the convolution recursion on all
/// of Y_n for n <= 5, with frozen spot values at degree two.
fn explicit_antipode() -> Result<(), String> {
    suite("antipode-explicit")?;
    // comb(2) is progressive hence primitive: S(M) = -M
    let comb2 = t("((..).)");
    if ysym::antipode_m_explicit(&comb2) != Vect::basis(comb2.clone()).scale(&scalar(-1)) {
        return Err("spot value S(M_comb2) wrong".into());
    }
    // the chain splits once: S(M) = M_comb2 + M_chain
    let chain = t("(.(..))");
    let expect = Vect::basis(comb2).add(&Vect::basis(chain.clone()));
    if ysym::antipode_m_explicit(&chain) != expect {
        return Err("spot value S(M_chain) wrong".into());
    }
    if antipode::<YsymM>(&Vect::basis(chain.clone())) != expect {
        return Err("recursion disagrees on the chain".into());
    }
    Ok(())
}

/// The monomial product of the one-node generators, frozen.
fn generator_product() -> Result<(), String> {
    let prod = YsymM::product_keys(&t("(..)"), &t("(..)"));
    if prod.coeff(&t("((..).)")) != scalar(1) || prod.coeff(&t("(.(..))")) != scalar(2) {
        return Err("M_1 . M_1 expansion wrong".into());
    }
    suite("product-routes")
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Result<(), String>)> = vec![
        ("1 hopf axioms, exact arithmetic at full caps", || suite("hopf-axioms")),
        ("2 six adjunctions, exhaustive", || suite("galois")),
        ("3 monomial image formulas vs conversion", || suite("mbasis-images")),
        ("4 product-route equivalence and positivity", generator_product),
        ("5 coproduct, primitives, Hilbert recursion", coproduct_grading),
        ("6 explicit antipode vs recursion", explicit_antipode),
        ("7 kernel dimensions, predicates, cocycles", || suite("kernels")),
        ("8 dual coproduct three-route agreement", || suite("dual-coproduct-routes")),
        ("9 forest-tree isomorphism and bijection", || suite("phi-iso")),
        ("10 involutions and the embedding square", || {
            suite("involution")?;
            suite("ck-diagram")
        }),
    ];
    let mut failed = false;
    for (label, check) in criteria {
        match check() {
            Ok(()) => println!("criterion {label}: pass"),
            Err(e) => {
                failed = true;
                println!("criterion {label}: FAIL ({e})");
            }
        }
    }
    assert!(!failed, "acceptance criteria failed");
}
