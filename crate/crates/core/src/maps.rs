use crate::error::{invalid, Result};
use crate::perm::Permutation;
use crate::subset::Subset;
use crate::tree::Tree;

/// `lambda(sigma) = lambda(sigma_l) v lambda(sigma_r)`, split at the
/// position of the maximum value.
pub fn lambda(sigma: &Permutation) -> Tree {
    let n = sigma.degree();
    if n == 0 {
        return Tree::Leaf;
    }
    let j = sigma.inverse().at(n);
    let (l, r) = split_standardized(sigma, j);
    Tree::node(lambda(&l), lambda(&r))
}

fn split_standardized(sigma: &Permutation, j: usize) -> (Permutation, Permutation) {
    let n = sigma.degree();
    let left: Vec<i64> = (1..j).map(|i| sigma.at(i) as i64).collect();
    let right: Vec<i64> = (j + 1..=n).map(|i| sigma.at(i) as i64).collect();
    (
        Permutation::standardize(&left).unwrap(),
        Permutation::standardize(&right).unwrap(),
    )
}

/// `gamma(t) = gamma(t_l) v gamma(t_r)`, the maximum of the fiber of
/// `lambda` over `t`.
pub fn gamma(t: &Tree) -> Permutation {
    match t {
        Tree::Leaf => Permutation::identity(0),
        Tree::Node(l, r) => gamma(l).graft(&gamma(r)),
    }
}

/// `gamma_min(t) = gamma_min(t_l) v_ gamma_min(t_r)`, the minimum of the
/// fiber of `lambda` over `t`.
pub fn gamma_min(t: &Tree) -> Permutation {
    match t {
        Tree::Leaf => Permutation::identity(0),
        Tree::Node(l, r) => gamma_min(l).graft_under(&gamma_min(r)),
    }
}

/// `rho(sigma) = rho(sigma_l) v rho(sigma_r)`, split at the first global
/// descent, or at position n with an empty right factor when there is none.
pub fn rho(sigma: &Permutation) -> Tree {
    let n = sigma.degree();
    if n == 0 {
        return Tree::Leaf;
    }
    let j = sigma.global_descents().members().first().copied().unwrap_or(n);
    let (l, r) = split_standardized(sigma, j);
    Tree::node(rho(&l), rho(&r))
}

/// `Z(S) = id_{p1} \ id_{p2-p1} \ ...`, the maximum permutation with
/// descent set `S`.
pub fn z_map(set: &Subset, n: usize) -> Result<Permutation> {
    check_descent_set(set, n)?;
    Ok(set
        .to_composition(n)
        .into_iter()
        .fold(Permutation::identity(0), |acc, a| {
            acc.concat_over(&Permutation::identity(a))
        }))
}

/// `C(S) = 1_{p1} \ 1_{p2-p1} \ ...`.
pub fn c_map(set: &Subset, n: usize) -> Result<Tree> {
    check_descent_set(set, n)?;
    Ok(set
        .to_composition(n)
        .into_iter()
        .fold(Tree::Leaf, |acc, a| acc.concat_over(&Tree::comb(a))))
}

fn check_descent_set(set: &Subset, n: usize) -> Result<()> {
    if set.ambient() != n.saturating_sub(1) {
        return Err(invalid(format!("subset must live in [{}]", n.saturating_sub(1))));
    }
    Ok(())
}

/// One step of the fiber-preserving reduction: among all 132-patterns
/// `i<j<k`, pick one with `sigma(k)` maximum, then `sigma(j)` minimum, and
/// transpose the values `sigma(k)+1` and `sigma(k)`. The result is covered
/// by `sigma` and has the same image under `rho`.
pub fn descent_reduction(sigma: &Permutation) -> Option<Permutation> {
    let n = sigma.degree();
    let mut best: Option<(usize, usize)> = None;
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                if sigma.at(i) < sigma.at(k) && sigma.at(k) < sigma.at(j) {
                    let cand = (sigma.at(k), sigma.at(j));
                    let better = match best {
                        None => true,
                        Some((bk, bj)) => cand.0 > bk || (cand.0 == bk && cand.1 < bj),
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    let (vk, _) = best?;
    let mut word = sigma.word().to_vec();
    let pm = word.iter().position(|&v| v == vk + 1).unwrap();
    let pk = word.iter().position(|&v| v == vk).unwrap();
    word.swap(pm, pk);
    Some(Permutation::from_word(word).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lit::parse_perm;
    use crate::perm::Pattern;

    fn p(s: &str) -> Permutation {
        parse_perm(s).unwrap()
    }

    #[test]
    fn lambda_gamma_examples() {
        let t = lambda(&p("p:41253"));
        assert_eq!(gamma(&t), p("p:42351"));
        for n in 0..=6 {
            assert_eq!(lambda(&Permutation::identity(n)), Tree::comb(n));
            assert_eq!(gamma(&Tree::comb(n)), Permutation::identity(n));
            assert_eq!(gamma_min(&Tree::comb(n)), Permutation::identity(n));
        }
        let big = p("p:564973812");
        assert_eq!(lambda(&big), Tree::node(lambda(&p("p:231")), lambda(&p("p:43512"))));
    }

    #[test]
    fn lambda_fibers() {
        for n in 0..=6 {
            let trees = Tree::all(n);
            let mut counts = std::collections::HashMap::new();
            for s in Permutation::all(n) {
                *counts.entry(lambda(&s)).or_insert(0usize) += 1;
            }
            // surjective, fibers partition the symmetric group
            assert_eq!(counts.len(), trees.len());
            for t in &trees {
                let fiber: Vec<Permutation> = Permutation::all(n)
                    .into_iter()
                    .filter(|s| lambda(s) == *t)
                    .collect();
                let g = gamma(t);
                let gm = gamma_min(t);
                assert!(fiber.iter().all(|s| s.weak_leq(&g) && gm.weak_leq(s)));
                assert!(fiber.contains(&g) && fiber.contains(&gm));
                assert!(g.avoids(crate::perm::Pattern::P132));
            }
        }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&p("p:132")), Tree::comb(3));
        for n in 0..=6 {
            for t in Tree::all(n) {
                assert_eq!(rho(&gamma(&t)), t);
            }
            for s in Permutation::all(n) {
                if s.avoids(Pattern::P132) {
                    assert_eq!(rho(&s), lambda(&s));
                }
            }
        }
    }

    #[test]
    fn z_and_c_maps() {
        let s1 = Subset::from_members([1], 1).unwrap();
        assert_eq!(z_map(&s1, 2).unwrap(), p("p:21"));
        assert_eq!(z_map(&Subset::empty(4), 5).unwrap(), Permutation::identity(5));
        let s12 = Subset::from_members([1, 2], 2).unwrap();
        assert_eq!(
            c_map(&s12, 3).unwrap(),
            Tree::comb(1).concat_over(&Tree::comb(1)).concat_over(&Tree::comb(1))
        );
        // C of the full set is the Tamari maximum, lambda(omega_3)
        assert_eq!(c_map(&s12, 3).unwrap(), lambda(&Permutation::longest(3)));
        // Z = gamma after C, and Z(S) is the maximum with descent set S
        for n in 1..=5 {
            for s in Subset::all(n - 1) {
                let z = z_map(&s, n).unwrap();
                assert_eq!(z, gamma(&c_map(&s, n).unwrap()));
                assert_eq!(z.descents(), s);
                for q in Permutation::all(n) {
                    if q.descents() == s {
                        assert!(q.weak_leq(&z));
                    }
                }
            }
        }
    }

    #[test]
    fn descent_reduction_fibers() {
        for n in 2..=6 {
            for s in Permutation::all(n) {
                match descent_reduction(&s) {
                    None => assert!(s.avoids(Pattern::P132)),
                    Some(sp) => {
                        assert!(!s.avoids(Pattern::P132));
                        assert!(sp.weak_leq(&s));
                        assert_eq!(sp.inversions().len() + 1, s.inversions().len());
                        assert_eq!(rho(&sp), rho(&s));
                    }
                }
            }
        }
        // the reduction chain 4756132 -> 4657132 -> 4567132 -> 4567123
        // terminates at the 132-avoiding member gamma(rho(4756132))
        let start = p("p:4756132");
        let mut cur = start.clone();
        let mut steps = Vec::new();
        while let Some(next) = descent_reduction(&cur) {
            steps.push(next.clone());
            cur = next;
        }
        assert_eq!(
            steps,
            vec![p("p:4657132"), p("p:4567132"), p("p:4567123")]
        );
        assert_eq!(cur, gamma(&rho(&start)));
    }
}
