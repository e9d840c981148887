use crate::alg::lincomb::{HopfAlg, Tensor, Vect};
use crate::alg::nck::Nck;
use crate::alg::nsym::NsymMstar;
use crate::alg::qsym::Composition;
use crate::alg::sym::{Partition, SymH};
use crate::error::{invalid, Result};
use crate::forest::{Forest, OrderedTree};
use crate::maps::c_map;
use crate::subset::Subset;
use crate::tree::Tree;

/// The commutative Connes-Kreimer Hopf algebra on canonical unordered
/// forests (fixed points of `Forest::unorder`).
pub struct Ck;

impl HopfAlg for Ck {
    type Key = Forest;

    const BASIS_ID: &'static str = "uforest";

    fn degree(k: &Forest) -> usize {
        k.degree()
    }

    fn unit_key() -> Forest {
        Forest::empty()
    }

    fn basis(n: usize) -> Vec<Forest> {
        let mut out: Vec<Forest> = Forest::all(n).iter().map(Forest::unorder).collect();
        out.sort_by_key(|f| f.to_string());
        out.dedup();
        out
    }

    fn key_string(k: &Forest) -> String {
        k.to_string()
    }

    /// Operate on any planar representative and canonicalize.
    fn product_keys(a: &Forest, b: &Forest) -> Vect<Forest> {
        Nck::product_keys(a, b).apply(|f| Vect::basis(f.unorder()))
    }

    fn coproduct_key(a: &Forest) -> Tensor<Forest> {
        Nck::coproduct_key(a).apply(|(x, y)| Vect::basis((x.unorder(), y.unorder())))
    }
}

/// The forgetful Hopf surjection onto unordered forests.
pub fn u_map(v: &Vect<Forest>) -> Vect<Forest> {
    v.apply(|f| Vect::basis(f.unorder()))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NsymTarget {
    Nck,
    LrDual,
}

impl NsymTarget {
    pub fn parse(s: &str) -> Result<NsymTarget> {
        match s {
            "nck" => Ok(NsymTarget::Nck),
            "lr" => Ok(NsymTarget::LrDual),
            _ => Err(invalid(format!("unknown embedding target \"{s}\""))),
        }
    }
}

/// `M*_alpha -> l_{a_1} ... l_{a_k}` as an ordered forest of ladders.
pub fn embed_nsym_forest(alpha: &Composition) -> Forest {
    Forest(alpha.iter().map(|&a| OrderedTree::ladder(a)).collect())
}

/// `M*_alpha -> M*_{C(alpha)}`, the comb concatenation `1_{a_1}\...\1_{a_k}`.
pub fn embed_nsym_tree(alpha: &Composition) -> Tree {
    let n: usize = alpha.iter().sum();
    c_map(&Subset::from_composition(alpha), n).unwrap()
}

/// `h_lambda -> l_{l_1} ... l_{l_k}` as a canonical unordered forest.
pub fn embed_sym_forest(lambda: &Partition) -> Forest {
    embed_nsym_forest(lambda).unorder()
}

/// The canonical surjection onto symmetric functions: sort the parts.
pub fn project_sym(v: &Vect<Composition>) -> Vect<Partition> {
    v.apply(|alpha| {
        let mut l = alpha.clone();
        l.sort_unstable_by(|x, y| y.cmp(x));
        Vect::basis(l)
    })
}

/// The two composite paths around the square agree, and both embeddings
/// respect product and coproduct in each degree up to `n`.
pub fn diagram_check(n: usize) -> Result<()> {
    for d in 0..=n {
        for alpha in NsymMstar::basis(d) {
            // U(NSym -> NCK) = (Sym -> CK)(NSym -> Sym)
            let via_nck = u_map(&Vect::basis(embed_nsym_forest(&alpha)));
            let via_sym = project_sym(&Vect::basis(alpha.clone()))
                .apply(|l| Vect::basis(embed_sym_forest(l)));
            if via_nck != via_sym {
                return Err(invalid(format!("square fails at {alpha:?}")));
            }
            // the NSym embedding is a coalgebra map
            let lhs = NsymMstar::coproduct_key(&alpha)
                .apply(|(x, y)| Vect::basis((embed_nsym_forest(x), embed_nsym_forest(y))));
            let rhs = Nck::coproduct_key(&embed_nsym_forest(&alpha));
            if lhs != rhs {
                return Err(invalid(format!("NSym embedding coproduct fails at {alpha:?}")));
            }
        }
        for lambda in SymH::basis(d) {
            // the Sym embedding is a coalgebra map
            let lhs = SymH::coproduct_key(&lambda)
                .apply(|(x, y)| Vect::basis((embed_sym_forest(x), embed_sym_forest(y))));
            let rhs = Ck::coproduct_key(&embed_sym_forest(&lambda));
            if lhs != rhs {
                return Err(invalid(format!("Sym embedding coproduct fails at {lambda:?}")));
            }
        }
    }
    // both embeddings are algebra maps: generators multiply freely
    for a in 1..=n {
        for b in 1..=n.saturating_sub(a) {
            let lhs = Nck::product_keys(&embed_nsym_forest(&vec![a]), &embed_nsym_forest(&vec![b]));
            if lhs != Vect::basis(embed_nsym_forest(&vec![a, b])) {
                return Err(invalid(format!("NSym embedding product fails at ({a},{b})")));
            }
            let lhs = Ck::product_keys(&embed_sym_forest(&vec![a]), &embed_sym_forest(&vec![b]));
            let mut l = vec![a, b];
            l.sort_unstable_by(|x, y| y.cmp(x));
            if lhs != Vect::basis(embed_sym_forest(&l)) {
                return Err(invalid(format!("Sym embedding product fails at ({a},{b})")));
            }
        }
    }
    Ok(())
}
