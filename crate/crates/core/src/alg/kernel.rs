use crate::alg::lincomb::{antipode, product, HopfAlg, Vect};
use crate::alg::morphism::{gamma_split, l_on_m, lambda_on_m};
use crate::alg::qsym::{Composition, QsymM};
use crate::alg::ssym::SsymM;
use crate::alg::ysym::YsymM;
use crate::error::{invalid, Result};
use crate::perm::{Pattern, Permutation};
use crate::tree::{catalan_number, Tree};

/// Basis of the Hopf kernel of `Lambda` in degree `n`: the `M_sigma` whose
/// last global-descent factor is not 132-avoiding.
pub fn kernel_basis_lambda(n: usize) -> Vec<Permutation> {
    Permutation::all(n)
        .into_iter()
        .filter(|s| {
            s.gd_decompose()
                .last()
                .is_some_and(|f| !f.avoids(Pattern::P132))
        })
        .collect()
}

/// Basis of the Hopf kernel of `L` in degree `n`: the `M_t` whose last
/// progressive component is not a right comb.
pub fn kernel_basis_l(n: usize) -> Vec<Tree> {
    Tree::all(n)
        .into_iter()
        .filter(|t| {
            t.progressive_decompose()
                .last()
                .is_some_and(|c| *c != Tree::comb(c.degree()))
        })
        .collect()
}

/// The closed formulas `a_n = n! - sum_k k! c_{n-k-1}` and
/// `b_n = c_n - sum_k c_k`.
pub fn kernel_dims(n: usize) -> (usize, usize) {
    let factorial = |m: usize| -> usize { (1..=m).product() };
    let a = factorial(n)
        - (0..n)
            .map(|k| factorial(k) * catalan_number(n - k - 1))
            .sum::<usize>();
    let b = catalan_number(n) - (0..n).map(catalan_number).sum::<usize>();
    (a, b)
}

/// Membership in the left Hopf kernel of `Lambda` (plus scalars):
/// `(id (x) Lambda) Delta(x) = x (x) 1`, checked linearly.
pub fn in_lambda_kernel(v: &Vect<Permutation>) -> bool {
    let mut out: Vect<(Permutation, Tree)> = Vect::zero();
    let mut expect: Vect<(Permutation, Tree)> = Vect::zero();
    for (s, cs) in &v.0 {
        for ((a, b), c) in &SsymM::coproduct_key(s).0 {
            let image = lambda_on_m(&Vect::basis(b.clone()));
            for (t, ct) in &image.0 {
                out.add_term((a.clone(), t.clone()), cs.clone() * c.clone() * ct.clone());
            }
        }
        expect.add_term((s.clone(), Tree::Leaf), cs.clone());
    }
    out == expect
}

/// `(id (x) Lambda) Delta(M_sigma) = M_sigma (x) 1`.
pub fn kernel_predicate_lambda(s: &Permutation) -> bool {
    in_lambda_kernel(&Vect::basis(s.clone()))
}

/// Membership in the left Hopf kernel of `L` (plus scalars).
pub fn in_l_kernel(v: &Vect<Tree>) -> bool {
    let mut out: Vect<(Tree, Composition)> = Vect::zero();
    let mut expect: Vect<(Tree, Composition)> = Vect::zero();
    for (t, ct) in &v.0 {
        for ((a, b), c) in &YsymM::coproduct_key(t).0 {
            let image = l_on_m(&Vect::basis(b.clone()));
            for (alpha, ca) in &image.0 {
                out.add_term((a.clone(), alpha.clone()), ct.clone() * c.clone() * ca.clone());
            }
        }
        expect.add_term((t.clone(), vec![]), ct.clone());
    }
    out == expect
}

/// `(id (x) L) Delta(M_t) = M_t (x) 1`.
pub fn kernel_predicate_l(t: &Tree) -> bool {
    in_l_kernel(&Vect::basis(t.clone()))
}

/// Membership in the left Hopf kernel of `D` (plus scalars).
pub fn in_d_kernel(v: &Vect<Permutation>) -> bool {
    let mut out: Vect<(Permutation, Composition)> = Vect::zero();
    let mut expect: Vect<(Permutation, Composition)> = Vect::zero();
    for (s, cs) in &v.0 {
        for ((a, b), c) in &SsymM::coproduct_key(s).0 {
            let image = crate::alg::morphism::d_on_m(&Vect::basis(b.clone()));
            for (alpha, ca) in &image.0 {
                out.add_term((a.clone(), alpha.clone()), cs.clone() * c.clone() * ca.clone());
            }
        }
        expect.add_term((s.clone(), vec![]), cs.clone());
    }
    out == expect
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CocyclePair {
    LambdaGamma,
    LC,
    DZ,
}

impl CocyclePair {
    pub fn parse(s: &str) -> Result<CocyclePair> {
        match s {
            "lambda-gamma" => Ok(CocyclePair::LambdaGamma),
            "l-c" => Ok(CocyclePair::LC),
            "d-z" => Ok(CocyclePair::DZ),
            _ => Err(invalid(format!("unknown cocycle pair \"{s}\""))),
        }
    }
}

/// `c(k, k') = sum gamma(k_1) gamma(k'_1) S(gamma(k_2 k'_2))` for the pair
/// `(Lambda, Gamma)`; the value lands in the permutation algebra.
pub fn cocycle_lambda_gamma(k: &Tree, kp: &Tree) -> Vect<Permutation> {
    let mut out = Vect::zero();
    for ((k1, k2), c1) in &YsymM::coproduct_key(k).0 {
        for ((k1p, k2p), c2) in &YsymM::coproduct_key(kp).0 {
            let head = product::<SsymM>(
                &gamma_split(&Vect::basis(k1.clone())),
                &gamma_split(&Vect::basis(k1p.clone())),
            );
            let tail = antipode::<SsymM>(&gamma_split(&YsymM::product_keys(k2, k2p)));
            let term = product::<SsymM>(&head, &tail);
            out.add_scaled(&term, &(c1.clone() * c2.clone()));
        }
    }
    out
}

/// The same cocycle for `(L, C)`, landing in the tree algebra.
pub fn cocycle_l_c(k: &Composition, kp: &Composition) -> Vect<Tree> {
    let mut out = Vect::zero();
    for ((k1, k2), c1) in &QsymM::coproduct_key(k).0 {
        for ((k1p, k2p), c2) in &QsymM::coproduct_key(kp).0 {
            let head = product::<YsymM>(
                &crate::alg::morphism::c_split(&Vect::basis(k1.clone())),
                &crate::alg::morphism::c_split(&Vect::basis(k1p.clone())),
            );
            let tail = antipode::<YsymM>(&crate::alg::morphism::c_split(
                &QsymM::product_keys(k2, k2p),
            ));
            let term = product::<YsymM>(&head, &tail);
            out.add_scaled(&term, &(c1.clone() * c2.clone()));
        }
    }
    out
}

/// The same cocycle for `(D, Z)`, landing in the permutation algebra.
pub fn cocycle_d_z(k: &Composition, kp: &Composition) -> Vect<Permutation> {
    let mut out = Vect::zero();
    for ((k1, k2), c1) in &QsymM::coproduct_key(k).0 {
        for ((k1p, k2p), c2) in &QsymM::coproduct_key(kp).0 {
            let head = product::<SsymM>(
                &crate::alg::morphism::z_split(&Vect::basis(k1.clone())),
                &crate::alg::morphism::z_split(&Vect::basis(k1p.clone())),
            );
            let tail = antipode::<SsymM>(&crate::alg::morphism::z_split(
                &QsymM::product_keys(k2, k2p),
            ));
            let term = product::<SsymM>(&head, &tail);
            out.add_scaled(&term, &(c1.clone() * c2.clone()));
        }
    }
    out
}

/// Membership of a permutation-algebra value in `A = k (+) kernel(Lambda)`.
/// The kernel is a coordinate subspace of the monomial basis, so the exact
/// solve reduces to a support check.
pub fn in_lambda_kernel_span(v: &Vect<Permutation>) -> bool {
    v.0.keys()
        .filter(|s| s.degree() >= 1)
        .all(|s| kernel_basis_lambda(s.degree()).contains(s))
}

/// Membership of a tree-algebra value in `A = k (+) kernel(L)`.
pub fn in_l_kernel_span(v: &Vect<Tree>) -> bool {
    v.0.keys()
        .filter(|t| t.degree() >= 1)
        .all(|t| kernel_basis_l(t.degree()).contains(t))
}
