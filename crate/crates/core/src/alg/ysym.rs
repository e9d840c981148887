use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::alg::lincomb::{scalar, HopfAlg, Scalar, Tensor, Vect};
use crate::maps::{gamma, lambda};
use crate::perm::{perms_with_descents_in, shuffle_class, Permutation};
use crate::poset::{Element, Family, Poset};
use crate::subset::Subset;
use crate::tree::{catalan_number, Tree};

/// The fundamental basis of the Hopf algebra of planar binary trees.
pub struct YsymF;

impl HopfAlg for YsymF {
    type Key = Tree;

    const BASIS_ID: &'static str = "F_tree";

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

    /// `F_t . F_s = sum_{t -> (t_0,...,t_q)} F_{(t_0,...,t_q)/s}`.
    fn product_keys(a: &Tree, b: &Tree) -> Vect<Tree> {
        let mut out = Vect::zero();
        for parts in a.splits_multi(b.degree()) {
            out.add_term(Tree::attach(&parts, b).unwrap(), scalar(1));
        }
        out
    }

    /// `Delta(F_t) = sum_{t -> (t_0, t_1)} F_{t_0} (x) F_{t_1}`.
    fn coproduct_key(a: &Tree) -> Tensor<Tree> {
        let mut out = Vect::zero();
        for (l, r) in a.splits() {
            out.add_term((l, r), scalar(1));
        }
        out
    }
}

/// The monomial basis of the same algebra, related to F by Moebius
/// inversion over the Tamari order.
pub struct YsymM;

static M_PRODUCT_CACHE: Lazy<Mutex<HashMap<(Tree, Tree), Vect<Tree>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl HopfAlg for YsymM {
    type Key = Tree;

    const BASIS_ID: &'static str = "M_tree";

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

    /// Route A: convert to F, multiply, convert back.
    fn product_keys(a: &Tree, b: &Tree) -> Vect<Tree> {
        if let Some(v) = M_PRODUCT_CACHE.lock().unwrap().get(&(a.clone(), b.clone())) {
            return v.clone();
        }
        let fa = m_to_f(&Vect::basis(a.clone()));
        let fb = m_to_f(&Vect::basis(b.clone()));
        let out = f_to_m(&crate::alg::lincomb::product::<YsymF>(&fa, &fb));
        M_PRODUCT_CACHE
            .lock()
            .unwrap()
            .insert((a.clone(), b.clone()), out.clone());
        out
    }

    /// `Delta(M_r) = sum_{r = s\t} M_s (x) M_t`, one term per position in
    /// `R(r)` plus the two trivial terms.
    fn coproduct_key(a: &Tree) -> Tensor<Tree> {
        let one = scalar(1);
        let mut out = Vect::zero();
        out.add_term((Tree::Leaf, a.clone()), one.clone());
        if a.degree() == 0 {
            return out;
        }
        out.add_term((a.clone(), Tree::Leaf), one.clone());
        let components = a.progressive_decompose();
        for cut in 1..components.len() {
            let left = assemble(&components[..cut]);
            let right = assemble(&components[cut..]);
            out.add_term((left, right), one.clone());
        }
        out
    }
}

fn assemble(components: &[Tree]) -> Tree {
    components
        .iter()
        .fold(Tree::Leaf, |acc, c| acc.concat_over(c))
}

/// `M_t = sum_{t <= s} mu(t, s) F_s`, extended linearly.
pub fn m_to_f(v: &Vect<Tree>) -> Vect<Tree> {
    v.apply(|k| {
        let poset = Poset::new(Family::Tamari, k.degree());
        let row = poset.mobius_row(&Element::Tree(k.clone()));
        let mut out = Vect::zero();
        for e in poset.elements() {
            if let Some(&mu) = row.get(&e.key()) {
                let Element::Tree(t) = e else { unreachable!() };
                out.add_term(t, scalar(mu));
            }
        }
        out
    })
}

/// `F_t = sum_{t <= s} M_s`, the inverse conversion.
pub fn f_to_m(v: &Vect<Tree>) -> Vect<Tree> {
    v.apply(|k| {
        let poset = Poset::new(Family::Tamari, k.degree());
        let x = Element::Tree(k.clone());
        let mut out = Vect::zero();
        for e in poset.elements() {
            if poset.leq(&x, &e).unwrap() {
                let Element::Tree(t) = e else { unreachable!() };
                out.add_term(t, scalar(1));
            }
        }
        out
    })
}

fn tamari_leq(a: &Tree, b: &Tree) -> bool {
    gamma(a).weak_leq(&gamma(b))
}

/// `f_zeta(s, t) = lambda(gamma(s)/gamma(t) . zeta^{-1})`.
pub fn f_zeta(zeta: &Permutation, s: &Tree, t: &Tree) -> Tree {
    lambda(&gamma(s).concat_under(&gamma(t)).compose(&zeta.inverse()))
}

/// Route B for the monomial product: the coefficient of `M_r` counts the
/// `zeta` in `Sh(p,q)` for which `(s, t)` is the maximum pair with
/// `f_zeta(s, t) <= r`.
pub fn m_product_route_b(s: &Tree, t: &Tree) -> Vect<Tree> {
    let (p, q) = (s.degree(), t.degree());
    let trees_p = Tree::all(p);
    let trees_q = Tree::all(q);
    let rs = Tree::all(p + q);
    // Tamari order via inclusion of inversion sets of gamma
    let mask = |v: &[Tree]| -> Vec<u128> {
        v.iter().map(|x| gamma(x).inversion_mask()).collect()
    };
    let (mp, mq, mr) = (mask(&trees_p), mask(&trees_q), mask(&rs));
    let si = trees_p.iter().position(|x| x == s).unwrap();
    let ti = trees_q.iter().position(|x| x == t).unwrap();
    let mut counts = vec![0i64; rs.len()];
    for zeta in shuffle_class(p, q) {
        // f_zeta is independent of r; tabulate it once per zeta
        let ftab: Vec<Vec<u128>> = trees_p
            .iter()
            .map(|a| {
                trees_q
                    .iter()
                    .map(|b| gamma(&f_zeta(&zeta, a, b)).inversion_mask())
                    .collect()
            })
            .collect();
        for (ri, _) in rs.iter().enumerate() {
            let below: Vec<(usize, usize)> = (0..trees_p.len())
                .flat_map(|a| (0..trees_q.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| ftab[a][b] & !mr[ri] == 0)
                .collect();
            let max = below.iter().find(|&&(a, b)| {
                below
                    .iter()
                    .all(|&(c, d)| mp[c] & !mp[a] == 0 && mq[d] & !mq[b] == 0)
            });
            if max == Some(&(si, ti)) {
                counts[ri] += 1;
            }
        }
    }
    let mut out = Vect::zero();
    for (r, c) in rs.into_iter().zip(counts) {
        out.add_term(r, scalar(c));
    }
    out
}

/// The image of `f_zeta` over all tree pairs of the given bidegree.
pub fn f_zeta_image(zeta: &Permutation, p: usize, q: usize) -> Vec<Tree> {
    let mut out: Vec<Tree> = Tree::all(p)
        .iter()
        .flat_map(|a| {
            Tree::all(q)
                .iter()
                .map(|b| f_zeta(zeta, a, b))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The image of `lambda . phi_zeta` over all permutation pairs, where
/// `phi_zeta(sigma, tau) = (sigma/tau) . zeta^{-1}`.
pub fn lambda_phi_zeta_image(zeta: &Permutation, p: usize, q: usize) -> Vec<Tree> {
    let mut out: Vec<Tree> = Permutation::all(p)
        .iter()
        .flat_map(|a| {
            Permutation::all(q)
                .iter()
                .map(|b| lambda(&a.concat_under(b).compose(&zeta.inverse())))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Number of progressive components; level 1 elements index the primitives.
pub fn coradical_level(t: &Tree) -> usize {
    t.progressive_decompose().len()
}

/// The progressive trees of degree `n`, indexing a basis of the primitive
/// component.
pub fn primitives_basis(n: usize) -> Vec<Tree> {
    Tree::all(n)
        .into_iter()
        .filter(|t| t.is_progressive())
        .collect()
}

/// Every reduced-coproduct term of `M_t` splits the coradical level
/// additively, and level counts satisfy the Catalan recursion.
pub fn grading_check(n: usize) -> Result<(), String> {
    for t in Tree::all(n) {
        let k = coradical_level(&t);
        for ((a, b), _) in &YsymM::coproduct_key(&t).0 {
            if a.degree() == 0 || b.degree() == 0 {
                continue;
            }
            if coradical_level(a) + coradical_level(b) != k {
                return Err(format!("level mismatch in coproduct of {t}"));
            }
        }
    }
    // c_n = sum_k c_{k-1} c_{n-k}: first component of degree k, rest free
    if n >= 1 {
        let total: usize = (1..=n)
            .map(|k| catalan_number(k - 1) * catalan_number(n - k))
            .sum();
        if total != catalan_number(n) {
            return Err(format!("Catalan recursion fails at n={n}"));
        }
    }
    Ok(())
}

/// The reflection involution `M_t -> M_{t^r}`.
pub fn involution(v: &Vect<Tree>) -> Vect<Tree> {
    v.apply(|k| Vect::basis(k.reflect()))
}

/// Explicit antipode on the monomial basis:
/// `S(M_t) = -(-1)^{#R(t)} sum_s kappa(t, s) M_s`.
pub fn antipode_m_explicit(t: &Tree) -> Vect<Tree> {
    let n = t.degree();
    if n == 0 {
        return Vect::basis(Tree::Leaf);
    }
    let r_t = t.right_branch_set();
    let sign: Scalar = if r_t.len() % 2 == 0 {
        scalar(-1)
    } else {
        scalar(1)
    };
    let mut out = Vect::zero();
    for s in Tree::all(n) {
        let k = kappa(t, &s, &r_t);
        out.add_term(s, sign.clone() * scalar(k));
    }
    out
}

/// `kappa(t, s)` counts `zeta` with `Des(zeta) <= R(t)` subject to the
/// dominance, maximality and minimality conditions of the antipode formula.
pub fn kappa(t: &Tree, s: &Tree, r_t: &Subset) -> i64 {
    let n = t.degree();
    let gt = gamma(t);
    let mut count = 0i64;
    'zeta: for zeta in perms_with_descents_in(r_t, n) {
        let zinv = zeta.inverse();
        // (i) lambda(gamma(t)_{R(t)} . zeta^{-1}) <= s
        if !tamari_leq(&lambda(&gt.partial_under(r_t).compose(&zinv)), s) {
            continue;
        }
        // (ii) t is maximal among t' >= t with the same property
        for tp in Tree::all(n) {
            if tp != *t
                && tamari_leq(t, &tp)
                && tamari_leq(&lambda(&gamma(&tp).partial_under(r_t).compose(&zinv)), s)
            {
                continue 'zeta;
            }
        }
        // (iii) R(t) is minimal among Des(zeta) <= R <= R(t)
        let des = zeta.descents();
        for r in subsets_between(&des, r_t) {
            if r != *r_t && tamari_leq(&lambda(&gt.partial_under(&r).compose(&zinv)), s) {
                continue 'zeta;
            }
        }
        count += 1;
    }
    count
}

fn subsets_between(lo: &Subset, hi: &Subset) -> Vec<Subset> {
    let free: Vec<usize> = hi
        .members()
        .into_iter()
        .filter(|&m| !lo.contains(m))
        .collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0..(1u64 << free.len()) {
        let mut s = *lo;
        for (i, &m) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(m);
            }
        }
        out.push(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alg::lincomb::{antipode, coproduct, product};
    use crate::lit::parse_tree;

    fn tv(s: &str) -> Vect<Tree> {
        Vect::basis(parse_tree(s).unwrap())
    }

    #[test]
    fn fundamental_product_and_coproduct() {
        let prod = product::<YsymF>(&tv("(..)"), &tv("(..)"));
        assert_eq!(prod, tv("((..).)").add(&tv("(.(..))")));
        let cop = coproduct::<YsymF>(&tv("(..)"));
        let mut expect: Tensor<Tree> = Vect::zero();
        expect.add_term((Tree::Leaf, Tree::one_node()), scalar(1));
        expect.add_term((Tree::one_node(), Tree::Leaf), scalar(1));
        assert_eq!(cop, expect);
    }

    #[test]
    fn monomial_conversion() {
        // M of the tree lambda(3412) expands into 4 F-terms with signs + - - +
        let t = lambda(&Permutation::from_word(vec![3, 4, 1, 2]).unwrap());
        let f = m_to_f(&Vect::basis(t));
        let signs: Vec<Scalar> = f.0.values().cloned().collect();
        assert_eq!(f.0.len(), 4);
        assert_eq!(
            signs.iter().filter(|c| **c == scalar(1)).count(),
            2
        );
        assert_eq!(
            signs.iter().filter(|c| **c == scalar(-1)).count(),
            2
        );
        for n in 0..=5 {
            for t in Tree::all(n) {
                let v = Vect::basis(t);
                assert_eq!(f_to_m(&m_to_f(&v)), v);
            }
        }
    }

    #[test]
    fn monomial_product_and_coproduct() {
        let prod = product::<YsymM>(&tv("(..)"), &tv("(..)"));
        assert_eq!(prod, tv("((..).)").add(&tv("(.(..))").scale(&scalar(2))));
        assert_eq!(product::<YsymM>(&tv("((..).)"), &tv(".")), tv("((..).)"));
        // progressive trees are primitive
        for n in 1..=5 {
            for t in primitives_basis(n) {
                let cop = YsymM::coproduct_key(&t);
                assert_eq!(cop.0.len(), 2);
            }
        }
        // the chain has two progressive components, so a middle term appears
        let cop = YsymM::coproduct_key(&parse_tree("(.(..))").unwrap());
        assert_eq!(
            cop.coeff(&(Tree::one_node(), Tree::one_node())),
            scalar(1)
        );
    }

    #[test]
    fn route_b_agrees_with_route_a() {
        for p in 0..=2 {
            for q in 0..=2 {
                for s in Tree::all(p) {
                    for t in Tree::all(q) {
                        let a = YsymM::product_keys(&s, &t);
                        let b = m_product_route_b(&s, &t);
                        assert_eq!(a, b, "routes differ on {s} * {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn grading_and_primitives() {
        assert_eq!(coradical_level(&Tree::comb(3)), 1);
        let chain = parse_tree("(.(.(..)))").unwrap();
        assert_eq!(coradical_level(&chain), 3);
        for n in 1..=6 {
            assert_eq!(primitives_basis(n).len(), catalan_number(n - 1));
        }
        for n in 0..=6 {
            grading_check(n).unwrap();
        }
    }

    #[test]
    fn explicit_antipode_small() {
        // primitive: S(M_t) = -M_t
        let m = Tree::comb(2);
        assert_eq!(antipode_m_explicit(&m), Vect::basis(m).scale(&scalar(-1)));
        // the 2-chain: S(M) = M_{comb(2)} + M_{chain}
        let x = parse_tree("(.(..))").unwrap();
        assert_eq!(
            antipode_m_explicit(&x),
            tv("((..).)").add(&tv("(.(..))"))
        );
        for n in 0..=4 {
            for t in Tree::all(n) {
                assert_eq!(
                    antipode_m_explicit(&t),
                    antipode::<YsymM>(&Vect::basis(t.clone())),
                    "antipode mismatch at {t}"
                );
            }
        }
    }

    #[test]
    fn involution_properties() {
        for n in 0..=5 {
            for t in Tree::all(n) {
                assert_eq!(t.reflect().reflect(), t);
            }
        }
        // algebra isomorphism on M
        for s in Tree::all(2) {
            for t in Tree::all(2) {
                let lhs = involution(&YsymM::product_keys(&s, &t));
                let rhs = YsymM::product_keys(&s.reflect(), &t.reflect());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
