use crate::alg::lincomb::Vect;
use crate::alg::qsym::Composition;
use crate::maps::{c_map, gamma, lambda, z_map};
use crate::perm::{Pattern, Permutation};
use crate::subset::Subset;
use crate::tree::Tree;

/// `D: F_sigma -> F_{comp(Des(sigma))}`.
pub fn d_on_f(v: &Vect<Permutation>) -> Vect<Composition> {
    v.apply(|s| Vect::basis(s.descents().to_composition(s.degree())))
}

/// `D: M_sigma -> M_{comp(Des(sigma))}` when `sigma = Z(Des(sigma))`,
/// zero otherwise.
pub fn d_on_m(v: &Vect<Permutation>) -> Vect<Composition> {
    v.apply(|s| {
        let des = s.descents();
        if z_map(&des, s.degree()).unwrap() == *s {
            Vect::basis(des.to_composition(s.degree()))
        } else {
            Vect::zero()
        }
    })
}

/// `Lambda: F_sigma -> F_{lambda(sigma)}`.
pub fn lambda_on_f(v: &Vect<Permutation>) -> Vect<Tree> {
    v.apply(|s| Vect::basis(lambda(s)))
}

/// `Lambda: M_sigma -> M_{lambda(sigma)}` when `sigma` is 132-avoiding,
/// zero otherwise.
pub fn lambda_on_m(v: &Vect<Permutation>) -> Vect<Tree> {
    v.apply(|s| {
        if s.avoids(Pattern::P132) {
            Vect::basis(lambda(s))
        } else {
            Vect::zero()
        }
    })
}

/// `L: F_t -> F_{comp(L(t))}`.
pub fn l_on_f(v: &Vect<Tree>) -> Vect<Composition> {
    v.apply(|t| Vect::basis(t.left_leaf_set().to_composition(t.degree())))
}

/// `L: M_t -> M_{comp(L(t))}` when `t = C(L(t))`, zero otherwise.
pub fn l_on_m(v: &Vect<Tree>) -> Vect<Composition> {
    v.apply(|t| {
        let s = t.left_leaf_set();
        if c_map(&s, t.degree()).unwrap() == *t {
            Vect::basis(s.to_composition(t.degree()))
        } else {
            Vect::zero()
        }
    })
}

/// The coalgebra splitting `Gamma: M_t -> M_{gamma(t)}`.
pub fn gamma_split(v: &Vect<Tree>) -> Vect<Permutation> {
    v.apply(|t| Vect::basis(gamma(t)))
}

/// The coalgebra splitting `C: M_alpha -> M_{C(alpha)}`.
pub fn c_split(v: &Vect<Composition>) -> Vect<Tree> {
    v.apply(|alpha| {
        let n = alpha.iter().sum();
        Vect::basis(c_map(&Subset::from_composition(alpha), n).unwrap())
    })
}

/// The coalgebra splitting `Z: M_alpha -> M_{Z(alpha)}`.
pub fn z_split(v: &Vect<Composition>) -> Vect<Permutation> {
    v.apply(|alpha| {
        let n = alpha.iter().sum();
        Vect::basis(z_map(&Subset::from_composition(alpha), n).unwrap())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alg::lincomb::{product, Vect};
    use crate::alg::qsym::compositions;
    use crate::alg::ssym::SsymF;
    use crate::alg::ysym::YsymF;
    use crate::lit::parse_perm;

    fn pv(s: &str) -> Vect<Permutation> {
        Vect::basis(parse_perm(s).unwrap())
    }

    #[test]
    fn f_route_images() {
        assert_eq!(
            d_on_f(&pv("p:231")),
            Vect::basis(vec![2, 1])
        );
        let img = lambda_on_f(&pv("p:42351"));
        let t = lambda(&parse_perm("p:42351").unwrap());
        assert_eq!(img, Vect::basis(t));
    }

    #[test]
    fn m_route_kills_off_image() {
        // 42351 = gamma(lambda(41253)) is 132-avoiding
        let s = parse_perm("p:42351").unwrap();
        assert!(s.avoids(Pattern::P132));
        assert_eq!(
            lambda_on_m(&Vect::basis(s.clone())),
            Vect::basis(lambda(&s))
        );
        assert_eq!(lambda_on_m(&pv("p:132")), Vect::zero());
        // per degree, the kill count is n! - Catalan(n)
        for n in 1..=5 {
            let zeros = Permutation::all(n)
                .into_iter()
                .filter(|s| lambda_on_m(&Vect::basis(s.clone())).is_zero())
                .count();
            let cn = crate::tree::catalan_number(n);
            assert_eq!(zeros, factorial(n) - cn);
        }
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn sections_invert() {
        for n in 0..=5 {
            for t in Tree::all(n) {
                assert_eq!(lambda_on_m(&gamma_split(&Vect::basis(t.clone()))), Vect::basis(t));
            }
            for alpha in compositions(n) {
                let v = Vect::basis(alpha);
                assert_eq!(l_on_m(&c_split(&v)), v);
                assert_eq!(d_on_m(&z_split(&v)), v);
            }
        }
    }

    #[test]
    fn d_is_l_after_lambda() {
        for n in 0..=5 {
            for s in Permutation::all(n) {
                let v = Vect::basis(s);
                assert_eq!(d_on_f(&v), l_on_f(&lambda_on_f(&v)));
                assert_eq!(d_on_m(&v), l_on_m(&lambda_on_m(&v)));
            }
        }
    }

    #[test]
    fn morphisms_respect_f_products() {
        for s in Permutation::all(2) {
            for t in Permutation::all(2) {
                let prod = product::<SsymF>(&Vect::basis(s.clone()), &Vect::basis(t.clone()));
                let lhs = lambda_on_f(&prod);
                let rhs = product::<YsymF>(
                    &lambda_on_f(&Vect::basis(s.clone())),
                    &lambda_on_f(&Vect::basis(t.clone())),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }
}
