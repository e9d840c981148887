use crate::alg::lincomb::{scalar, HopfAlg, Tensor, Vect};
use crate::lit;
use crate::poset::{Element, Family, Poset};
use crate::subset::Subset;

pub type Composition = Vec<usize>;

/// All compositions of `n`, one per subset of `[n-1]`, in the binary-counter
/// order of the subsets.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![vec![]];
    }
    Subset::all(n - 1)
        .into_iter()
        .map(|s| s.to_composition(n))
        .collect()
}

pub fn weight(alpha: &[usize]) -> usize {
    alpha.iter().sum()
}

/// The monomial basis of quasi-symmetric functions.
pub struct QsymM;

impl HopfAlg for QsymM {
    type Key = Composition;

    const BASIS_ID: &'static str = "M_comp";

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

    /// Quasi-shuffle: interleave the parts, optionally merging a leading
    /// part from each side.
    fn product_keys(a: &Composition, b: &Composition) -> Vect<Composition> {
        fn go(a: &[usize], b: &[usize]) -> Vec<Composition> {
            if a.is_empty() {
                return vec![b.to_vec()];
            }
            if b.is_empty() {
                return vec![a.to_vec()];
            }
            let mut out = Vec::new();
            for mut tail in go(&a[1..], b) {
                tail.insert(0, a[0]);
                out.push(tail);
            }
            for mut tail in go(a, &b[1..]) {
                tail.insert(0, b[0]);
                out.push(tail);
            }
            for mut tail in go(&a[1..], &b[1..]) {
                tail.insert(0, a[0] + b[0]);
                out.push(tail);
            }
            out
        }
        let mut out = Vect::zero();
        for alpha in go(a, b) {
            out.add_term(alpha, scalar(1));
        }
        out
    }

    /// Deconcatenation.
    fn coproduct_key(a: &Composition) -> Tensor<Composition> {
        let mut out = Vect::zero();
        for i in 0..=a.len() {
            out.add_term((a[..i].to_vec(), a[i..].to_vec()), scalar(1));
        }
        out
    }
}

/// The fundamental basis; structure maps are computed through M.
pub struct QsymF;

impl HopfAlg for QsymF {
    type Key = Composition;

    const BASIS_ID: &'static str = "F_comp";

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

    fn product_keys(a: &Composition, b: &Composition) -> Vect<Composition> {
        let prod = crate::alg::lincomb::product::<QsymM>(
            &f_to_m(&Vect::basis(a.clone())),
            &f_to_m(&Vect::basis(b.clone())),
        );
        m_to_f(&prod)
    }

    fn coproduct_key(a: &Composition) -> Tensor<Composition> {
        let cop = crate::alg::lincomb::coproduct::<QsymM>(&f_to_m(&Vect::basis(a.clone())));
        cop.apply(|(x, y)| {
            let lx = m_to_f(&Vect::basis(x.clone()));
            let ly = m_to_f(&Vect::basis(y.clone()));
            let mut t = Vect::zero();
            for (kx, cx) in &lx.0 {
                for (ky, cy) in &ly.0 {
                    t.add_term((kx.clone(), ky.clone()), cx.clone() * cy.clone());
                }
            }
            t
        })
    }
}

/// `M_alpha = sum_{beta refines alpha} (-1)^{k(beta)-k(alpha)} F_beta`,
/// the Boolean Moebius row.
pub fn m_to_f(v: &Vect<Composition>) -> Vect<Composition> {
    v.apply(|k| {
        let n = weight(k);
        let poset = Poset::new(Family::Boolean, n);
        let row = poset.mobius_row(&Element::Set(Subset::from_composition(k)));
        let mut out = Vect::zero();
        for e in poset.elements() {
            if let Some(&mu) = row.get(&e.key()) {
                let Element::Set(s) = e else { unreachable!() };
                out.add_term(s.to_composition(n), scalar(mu));
            }
        }
        out
    })
}

/// `F_alpha = sum_{beta refines alpha} M_beta`.
pub fn f_to_m(v: &Vect<Composition>) -> Vect<Composition> {
    v.apply(|k| {
        let n = weight(k);
        let s = Subset::from_composition(k);
        let mut out = Vect::zero();
        for t in Subset::all(n.saturating_sub(1)) {
            if s.is_subset_of(&t) {
                out.add_term(t.to_composition(n), scalar(1));
            }
        }
        out
    })
}

/// The reversal involution `M_alpha -> M_{alpha^r}` (same formula on F).
pub fn involution(v: &Vect<Composition>) -> Vect<Composition> {
    v.apply(|k| {
        let mut r = k.clone();
        r.reverse();
        Vect::basis(r)
    })
}
