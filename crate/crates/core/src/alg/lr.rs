use crate::alg::lincomb::{scalar, HopfAlg, Tensor, Vect};
use crate::alg::ysym::YsymM;
use crate::error::{invalid, Result};
use crate::maps::{gamma, lambda};
use crate::perm::pi_r;
use crate::subset::Subset;
use crate::tree::Tree;

/// The dual basis `M*_t`; the algebra is free on the progressive trees.
pub struct LrMstar;

impl HopfAlg for LrMstar {
    type Key = Tree;

    const BASIS_ID: &'static str = "Mstar_tree";

    fn degree(k: &Tree) -> usize {
        k.degree()
    }

    fn unit_key() -> Tree {
        Tree::Leaf
    }

    fn basis(n: usize) -> Vec<Tree> {
        Tree::all(n)
    }

    fn key_string(k: &Tree) -> String {
        k.to_string()
    }

    /// `M*_s . M*_t = M*_{s\t}`.
    fn product_keys(a: &Tree, b: &Tree) -> Vect<Tree> {
        Vect::basis(a.concat_over(b))
    }

    /// Sum of prunings over admissible node subsets, pruned part first.
    fn coproduct_key(a: &Tree) -> Tensor<Tree> {
        let mut out = Vect::zero();
        for set in a.admissible_node_subsets() {
            let (tp, tpp) = a.prune(&set).unwrap();
            out.add_term((tp, tpp), scalar(1));
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoproductRoute {
    Dualize,
    Admissible,
    Intermediate,
}

impl CoproductRoute {
    pub fn parse(s: &str) -> Result<CoproductRoute> {
        match s {
            "dualize" => Ok(CoproductRoute::Dualize),
            "admissible" => Ok(CoproductRoute::Admissible),
            "intermediate" => Ok(CoproductRoute::Intermediate),
            _ => Err(invalid(format!("unknown coproduct route \"{s}\""))),
        }
    }
}

/// Three independent computations of the same coproduct.
pub fn coproduct_route(r: &Tree, route: CoproductRoute) -> Tensor<Tree> {
    match route {
        CoproductRoute::Admissible => LrMstar::coproduct_key(r),
        CoproductRoute::Intermediate => coproduct_intermediate(r),
        CoproductRoute::Dualize => coproduct_dualized(r),
    }
}

/// `Delta(M*_r) = sum_{R <= [n], lambda(pi_R) <= r} M*_{r|_R} (x)
/// M*_{r|_{R^c}}` with `r|_R = lambda(gamma(r)|_R)`.
fn coproduct_intermediate(r: &Tree) -> Tensor<Tree> {
    let n = r.degree();
    let gr = gamma(r);
    let mut out = Vect::zero();
    for set in Subset::all(n) {
        if !tamari_leq(&lambda(&pi_r(&set, n).unwrap()), r) {
            continue;
        }
        let left = lambda(&gr.restrict(&set).unwrap());
        let right = lambda(&gr.restrict(&set.complement()).unwrap());
        out.add_term((left, right), scalar(1));
    }
    out
}

/// The coefficient of `M*_s (x) M*_t` is that of `M_r` in `M_s . M_t`.
fn coproduct_dualized(r: &Tree) -> Tensor<Tree> {
    let n = r.degree();
    let mut out = Vect::zero();
    for p in 0..=n {
        for s in Tree::all(p) {
            for t in Tree::all(n - p) {
                let c = YsymM::product_keys(&s, &t).coeff(r);
                out.add_term((s.clone(), t), c);
            }
        }
    }
    out
}

fn tamari_leq(a: &Tree, b: &Tree) -> bool {
    gamma(a).weak_leq(&gamma(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lit::parse_tree;

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    #[test]
    fn free_product() {
        assert_eq!(
            LrMstar::product_keys(&t("(..)"), &t("(..)")),
            Vect::basis(t("(.(..))"))
        );
        assert_eq!(LrMstar::product_keys(&t("."), &t("(.(..))")), Vect::basis(t("(.(..))")));
    }

    #[test]
    fn coproduct_one_node() {
        let cop = LrMstar::coproduct_key(&t("(..)"));
        let mut expect: Tensor<Tree> = Vect::zero();
        expect.add_term((t("."), t("(..)")), scalar(1));
        expect.add_term((t("(..)"), t(".")), scalar(1));
        assert_eq!(cop, expect);
    }

    #[test]
    fn coproduct_degree_two() {
        // the comb is a product of generators; the chain is not
        let cop = LrMstar::coproduct_key(&t("((..).)"));
        assert_eq!(cop.coeff(&(t("(..)"), t("(..)"))), scalar(1));
        let cop = LrMstar::coproduct_key(&t("(.(..))"));
        assert_eq!(cop.coeff(&(t("(..)"), t("(..)"))), scalar(2));
    }

    #[test]
    fn routes_agree_small() {
        for n in 0..=4 {
            for r in Tree::all(n) {
                let a = coproduct_route(&r, CoproductRoute::Admissible);
                let b = coproduct_route(&r, CoproductRoute::Intermediate);
                let c = coproduct_route(&r, CoproductRoute::Dualize);
                assert_eq!(a, b, "admissible vs intermediate at {r}");
                assert_eq!(a, c, "admissible vs dualize at {r}");
            }
        }
    }
}
