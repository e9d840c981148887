use crate::alg::lincomb::{scalar, HopfAlg, Tensor, Vect};
use crate::forest::Forest;
use crate::tree::Tree;

/// The noncommutative Connes-Kreimer Hopf algebra on ordered forests.
pub struct Nck;

impl HopfAlg for Nck {
    type Key = Forest;

    const BASIS_ID: &'static str = "forest";

    fn degree(k: &Forest) -> usize {
        k.degree()
    }

    fn unit_key() -> Forest {
        Forest::empty()
    }

    fn basis(n: usize) -> Vec<Forest> {
        Forest::all(n)
    }

    fn key_string(k: &Forest) -> String {
        k.to_string()
    }

    /// Free product: forest concatenation.
    fn product_keys(a: &Forest, b: &Forest) -> Vect<Forest> {
        Vect::basis(a.concat(b))
    }

    /// Sum over admissible cuts, pruned part first.
    fn coproduct_key(a: &Forest) -> Tensor<Forest> {
        let mut out = Vect::zero();
        for (removed, remaining) in a.admissible_cuts() {
            out.add_term((removed, remaining), scalar(1));
        }
        out
    }
}

/// `Phi(f) = M*_{phi(f)}`, the Hopf isomorphism onto the dual of the tree
/// algebra.
pub fn phi_vect(v: &Vect<Forest>) -> Vect<Tree> {
    v.apply(|f| Vect::basis(f.to_binary()))
}

pub fn phi_inverse_vect(v: &Vect<Tree>) -> Vect<Forest> {
    v.apply(|t| Vect::basis(Forest::from_binary(t)))
}

/// The reflection involution, an algebra anti-isomorphism.
pub fn involution(v: &Vect<Forest>) -> Vect<Forest> {
    v.apply(|f| Vect::basis(f.reflect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alg::lr::LrMstar;
    use crate::forest::OrderedTree;

    fn ladder(n: usize) -> Forest {
        Forest(vec![OrderedTree::ladder(n)])
    }

    #[test]
    fn ladder_coproduct() {
        let cop = Nck::coproduct_key(&ladder(2));
        let mut expect: Tensor<Forest> = Vect::zero();
        expect.add_term((Forest::empty(), ladder(2)), scalar(1));
        expect.add_term((ladder(1), ladder(1)), scalar(1));
        expect.add_term((ladder(2), Forest::empty()), scalar(1));
        assert_eq!(cop, expect);
    }

    #[test]
    fn phi_is_hopf_morphism_small() {
        for n in 0..=3 {
            for f in Forest::all(n) {
                for m in 0..=2 {
                    for g in Forest::all(m) {
                        let lhs = phi_vect(&Nck::product_keys(&f, &g));
                        let rhs = LrMstar::product_keys(&f.to_binary(), &g.to_binary());
                        assert_eq!(lhs, rhs, "product mismatch at {f} * {g}");
                    }
                }
                let lhs = Nck::coproduct_key(&f).apply(|(a, b)| {
                    Vect::basis((a.to_binary(), b.to_binary()))
                });
                let rhs = LrMstar::coproduct_key(&f.to_binary());
                assert_eq!(lhs, rhs, "coproduct mismatch at {f}");
            }
        }
    }

    #[test]
    fn reflection() {
        for n in 0..=5 {
            for f in Forest::all(n) {
                assert_eq!(f.reflect().reflect(), f);
                assert_eq!(f.reflect().to_binary(), f.to_binary().reflect());
            }
        }
        // anti-isomorphism
        let a = ladder(2);
        let b = Forest::all(3)[1].clone();
        let lhs = involution(&Nck::product_keys(&a, &b));
        let rhs = Nck::product_keys(&b.reflect(), &a.reflect());
        assert_eq!(lhs, rhs);
    }
}
