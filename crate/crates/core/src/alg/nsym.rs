use crate::alg::lincomb::{HopfAlg, Tensor, Vect};
use crate::alg::qsym::{compositions, weight, Composition, QsymM};
use crate::lit;

/// Noncommutative symmetric functions on the basis dual to the quasi-
/// symmetric monomial basis; free on one generator per degree.
pub struct NsymMstar;

impl HopfAlg for NsymMstar {
    type Key = Composition;

    const BASIS_ID: &'static str = "Mstar_comp";

    fn degree(k: &Composition) -> usize {
        weight(k)
    }

    fn unit_key() -> Composition {
        vec![]
    }

    fn basis(n: usize) -> Vec<Composition> {
        compositions(n)
    }

    fn key_string(k: &Composition) -> String {
        lit::composition_literal(k)
    }

    /// Free product: concatenation of compositions.
    fn product_keys(a: &Composition, b: &Composition) -> Vect<Composition> {
        let mut k = a.clone();
        k.extend_from_slice(b);
        Vect::basis(k)
    }

    /// Multiplicative extension of the divided-power coproduct on the
    /// generators: `Delta(M*_(a)) = sum_{i+j=a} M*_(i) (x) M*_(j)`.
    fn coproduct_key(alpha: &Composition) -> Tensor<Composition> {
        let mut out: Tensor<Composition> = Vect::basis((vec![], vec![]));
        for &a in alpha {
            let mut next = Vect::zero();
            for ((x, y), c) in &out.0 {
                for i in 0..=a {
                    let mut x2 = x.clone();
                    if i > 0 {
                        x2.push(i);
                    }
                    let mut y2 = y.clone();
                    if a - i > 0 {
                        y2.push(a - i);
                    }
                    next.add_term((x2, y2), c.clone());
                }
            }
            out = next;
        }
        out
    }
}

/// The coproduct obtained by dualizing the quasi-shuffle product: the
/// coefficient of `M*_alpha (x) M*_beta` is that of `M_gamma` in
/// `M_alpha . M_beta`.
pub fn coproduct_dualized(gamma: &Composition) -> Tensor<Composition> {
    let n = weight(gamma);
    let mut out = Vect::zero();
    for a in 0..=n {
        for alpha in compositions(a) {
            for beta in compositions(n - a) {
                let c = QsymM::product_keys(&alpha, &beta).coeff(gamma);
                out.add_term((alpha.clone(), beta), c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alg::lincomb::scalar;

    fn v(alpha: &[usize]) -> Vect<Composition> {
        Vect::basis(alpha.to_vec())
    }

    #[test]
    fn free_product() {
        assert_eq!(
            NsymMstar::product_keys(&vec![2], &vec![1, 1]),
            v(&[2, 1, 1])
        );
        assert_eq!(NsymMstar::product_keys(&vec![], &vec![3]), v(&[3]));
    }

    #[test]
    fn coproduct_matches_dualization() {
        for n in 0..=5 {
            for gamma in compositions(n) {
                assert_eq!(
                    NsymMstar::coproduct_key(&gamma),
                    coproduct_dualized(&gamma),
                    "mismatch at {gamma:?}"
                );
            }
        }
        // Delta(M*_(1,1)) has M*_(1) (x) M*_(1) with coefficient 2
        let cop = NsymMstar::coproduct_key(&vec![1, 1]);
        assert_eq!(cop.coeff(&(vec![1], vec![1])), scalar(2));
    }
}
