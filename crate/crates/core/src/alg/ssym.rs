use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::alg::lincomb::{HopfAlg, Tensor, Vect};
use crate::lit;
use crate::perm::{shuffle_class, Permutation};
use crate::poset::{Element, Family, Poset};
use crate::subset::Subset;

/// The fundamental basis of the Hopf algebra of permutations.
pub struct SsymF;

impl HopfAlg for SsymF {
    type Key = Permutation;

    const BASIS_ID: &'static str = "F_perm";

    fn degree(k: &Permutation) -> usize {
        k.degree()
    }

    fn unit_key() -> Permutation {
        Permutation::identity(0)
    }

    fn basis(n: usize) -> Vec<Permutation> {
        Permutation::all(n)
    }

    fn key_string(k: &Permutation) -> String {
        lit::perm_literal(k)
    }

    /// `F_sigma . F_tau = sum_{zeta in Sh(p,q)} F_{(sigma/tau).zeta^{-1}}`.
    fn product_keys(a: &Permutation, b: &Permutation) -> Vect<Permutation> {
        let stacked = a.concat_under(b);
        let mut out = Vect::zero();
        for zeta in shuffle_class(a.degree(), b.degree()) {
            out.add_term(stacked.compose(&zeta.inverse()), crate::alg::lincomb::scalar(1));
        }
        out
    }

    /// Deconcatenate at every position and standardize both blocks.
    fn coproduct_key(a: &Permutation) -> Tensor<Permutation> {
        let n = a.degree();
        let mut out = Vect::zero();
        for i in 0..=n {
            let left: Vec<i64> = (1..=i).map(|p| a.at(p) as i64).collect();
            let right: Vec<i64> = (i + 1..=n).map(|p| a.at(p) as i64).collect();
            out.add_term(
                (
                    Permutation::standardize(&left).unwrap(),
                    Permutation::standardize(&right).unwrap(),
                ),
                crate::alg::lincomb::scalar(1),
            );
        }
        out
    }
}

/// The monomial basis, obtained from F by Moebius inversion over the weak
/// order.
pub struct SsymM;

static M_PRODUCT_CACHE: Lazy<Mutex<HashMap<(Permutation, Permutation), Vect<Permutation>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl HopfAlg for SsymM {
    type Key = Permutation;

    const BASIS_ID: &'static str = "M_perm";

    fn degree(k: &Permutation) -> usize {
        k.degree()
    }

    fn unit_key() -> Permutation {
        Permutation::identity(0)
    }

    fn basis(n: usize) -> Vec<Permutation> {
        Permutation::all(n)
    }

    fn key_string(k: &Permutation) -> String {
        lit::perm_literal(k)
    }

    /// Computed through the F basis.
    fn product_keys(a: &Permutation, b: &Permutation) -> Vect<Permutation> {
        if let Some(v) = M_PRODUCT_CACHE.lock().unwrap().get(&(a.clone(), b.clone())) {
            return v.clone();
        }
        let fa = m_to_f(&Vect::basis(a.clone()));
        let fb = m_to_f(&Vect::basis(b.clone()));
        let out = f_to_m(&crate::alg::lincomb::product::<SsymF>(&fa, &fb));
        M_PRODUCT_CACHE
            .lock()
            .unwrap()
            .insert((a.clone(), b.clone()), out.clone());
        out
    }

    /// `Delta(M_rho) = sum_{rho = sigma\tau} M_sigma (x) M_tau`, one term
    /// per global descent plus the two trivial terms.
    fn coproduct_key(a: &Permutation) -> Tensor<Permutation> {
        let n = a.degree();
        let one = crate::alg::lincomb::scalar(1);
        let mut out = Vect::zero();
        out.add_term((Permutation::identity(0), a.clone()), one.clone());
        if n == 0 {
            return out;
        }
        out.add_term((a.clone(), Permutation::identity(0)), one.clone());
        for g in a.global_descents().members() {
            let cut = Subset::from_members([g], n - 1).unwrap();
            let parts = a.decompose_at(&cut);
            out.add_term((parts[0].clone(), parts[1].clone()), one.clone());
        }
        out
    }
}

/// `M_sigma = sum_{sigma <= tau} mu(sigma, tau) F_tau`, extended linearly.
pub fn m_to_f(v: &Vect<Permutation>) -> Vect<Permutation> {
    v.apply(|k| {
        let poset = Poset::new(Family::Weak, k.degree());
        let row = poset.mobius_row(&Element::Perm(k.clone()));
        let mut out = Vect::zero();
        for e in poset.elements() {
            if let Some(&mu) = row.get(&e.key()) {
                let Element::Perm(p) = e else { unreachable!() };
                out.add_term(p, crate::alg::lincomb::scalar(mu));
            }
        }
        out
    })
}

/// `F_sigma = sum_{sigma <= tau} M_tau`, the inverse conversion.
pub fn f_to_m(v: &Vect<Permutation>) -> Vect<Permutation> {
    v.apply(|k| {
        let poset = Poset::new(Family::Weak, k.degree());
        let x = Element::Perm(k.clone());
        let mut out = Vect::zero();
        for e in poset.elements() {
            if poset.leq(&x, &e).unwrap() {
                let Element::Perm(p) = e else { unreachable!() };
                out.add_term(p, crate::alg::lincomb::scalar(1));
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alg::lincomb::{antipode, coproduct, product, scalar};

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    fn fv(word: &[usize]) -> Vect<Permutation> {
        Vect::basis(p(word))
    }

    #[test]
    fn shuffle_product() {
        let prod = product::<SsymF>(&fv(&[1]), &fv(&[1]));
        assert_eq!(prod, fv(&[1, 2]).add(&fv(&[2, 1])));
        // unit
        let f21 = fv(&[2, 1]);
        assert_eq!(product::<SsymF>(&f21, &fv(&[])), f21);
        // degrees add and term count is the binomial coefficient
        let prod = product::<SsymF>(&fv(&[2, 1]), &fv(&[1, 3, 2]));
        let total: crate::alg::lincomb::Scalar =
            prod.0.values().cloned().fold(scalar(0), |a, b| a + b);
        assert_eq!(total, scalar(10));
        assert!(prod.0.keys().all(|k| k.degree() == 5));
    }

    #[test]
    fn deconcatenation_coproduct() {
        let cop = coproduct::<SsymF>(&fv(&[2, 1]));
        let mut expect: Tensor<Permutation> = Vect::zero();
        expect.add_term((p(&[]), p(&[2, 1])), scalar(1));
        expect.add_term((p(&[1]), p(&[1])), scalar(1));
        expect.add_term((p(&[2, 1]), p(&[])), scalar(1));
        assert_eq!(cop, expect);
    }

    #[test]
    fn monomial_conversion_round_trip() {
        for n in 0..=4 {
            for sigma in Permutation::all(n) {
                let v = Vect::basis(sigma);
                assert_eq!(f_to_m(&m_to_f(&v)), v);
                assert_eq!(m_to_f(&f_to_m(&v)), v);
            }
        }
        // top element: no strict upper set
        assert_eq!(m_to_f(&fv(&[2, 1])), fv(&[2, 1]));
    }

    #[test]
    fn monomial_coproduct_and_product() {
        let cop = coproduct::<SsymM>(&fv(&[2, 1]));
        let mut expect: Tensor<Permutation> = Vect::zero();
        expect.add_term((p(&[]), p(&[2, 1])), scalar(1));
        expect.add_term((p(&[1]), p(&[1])), scalar(1));
        expect.add_term((p(&[2, 1]), p(&[])), scalar(1));
        assert_eq!(cop, expect);
        // M-coproduct agrees with the F-route on all of S_4
        for sigma in Permutation::all(4) {
            let direct = coproduct::<SsymM>(&Vect::basis(sigma.clone()));
            let via_f = coproduct::<SsymF>(&m_to_f(&Vect::basis(sigma)));
            let back = via_f.apply(|(a, b)| {
                let la = f_to_m(&Vect::basis(a.clone()));
                let lb = f_to_m(&Vect::basis(b.clone()));
                let mut t = Vect::zero();
                for (x, cx) in &la.0 {
                    for (y, cy) in &lb.0 {
                        t.add_term((x.clone(), y.clone()), cx.clone() * cy.clone());
                    }
                }
                t
            });
            assert_eq!(direct, back);
        }
        let prod = product::<SsymM>(&fv(&[1]), &fv(&[1]));
        assert_eq!(prod, fv(&[1, 2]).add(&fv(&[2, 1]).scale(&scalar(2))));
    }

    #[test]
    fn antipode_m21() {
        let s = antipode::<SsymM>(&fv(&[2, 1]));
        assert_eq!(s, fv(&[1, 2]).add(&fv(&[2, 1])));
        let s1 = antipode::<SsymM>(&fv(&[1]));
        assert_eq!(s1, fv(&[1]).scale(&scalar(-1)));
    }
}
