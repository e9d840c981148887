use crate::error::{invalid, Result};
use crate::subset::Subset;

/// A permutation of `[n]` in one-line notation. The empty word is the unique
/// degree-0 permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    word: Vec<usize>,
}

/// Patterns supported by [`Permutation::avoids`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pattern {
    P132,
    P213,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    /// The maximum `omega_n = (n, ..., 2, 1)` of the weak order.
    pub fn longest(n: usize) -> Self {
        Permutation { word: (1..=n).rev().collect() }
    }

    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(invalid(format!("word is not a permutation of [{n}]")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut w = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            w[v - 1] = i + 1;
        }
        Permutation { word: w }
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            word: other.word.iter().map(|&v| self.word[v - 1]).collect(),
        }
    }

    /// The standard permutation of a sequence of distinct integers.
    pub fn standardize(seq: &[i64]) -> Result<Permutation> {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by_key(|&i| seq[i]);
        for pair in idx.windows(2) {
            if seq[pair[0]] == seq[pair[1]] {
                return Err(invalid("entries are not pairwise distinct"));
            }
        }
        let mut word = vec![0; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            word[i] = rank + 1;
        }
        Ok(Permutation { word })
    }

    fn standardize_values(vals: &[usize]) -> Permutation {
        let seq: Vec<i64> = vals.iter().map(|&v| v as i64).collect();
        Permutation::standardize(&seq).expect("distinct values")
    }

    /// Inversions as pairs of positions `(i, j)` with `i < j` and
    /// `word(i) > word(j)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.degree();
        let mut inv = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.at(i) > self.at(j) {
                    inv.push((i, j));
                }
            }
        }
        inv
    }

    /// Inversion set packed into a bit mask, for fast weak-order comparisons.
    /// Pair `(i, j)` occupies bit `(i-1)*n + (j-1)`. Requires `n <= 11`.
    pub fn inversion_mask(&self) -> u128 {
        let n = self.degree();
        assert!(n <= 11, "inversion mask supports degree <= 11");
        let mut mask = 0u128;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.at(i) > self.at(j) {
                    mask |= 1 << ((i - 1) * n + (j - 1));
                }
            }
        }
        mask
    }

    /// `sigma <= tau` in the (left) weak order: inclusion of inversion sets.
    pub fn weak_leq(&self, other: &Permutation) -> bool {
        debug_assert_eq!(self.degree(), other.degree());
        let a = self.inversion_mask();
        let b = other.inversion_mask();
        a & !b == 0
    }

    /// Descent set: positions `p` with `word(p) > word(p+1)`, in `[n-1]`.
    pub fn descents(&self) -> Subset {
        let n = self.degree();
        let mut s = Subset::empty(n.saturating_sub(1));
        for p in 1..n {
            if self.at(p) > self.at(p + 1) {
                s.insert(p);
            }
        }
        s
    }

    /// Global descents: positions `p` such that every value in positions
    /// `1..=p` exceeds every value in positions `p+1..=n`.
    pub fn global_descents(&self) -> Subset {
        let n = self.degree();
        let mut s = Subset::empty(n.saturating_sub(1));
        let mut min_prefix = usize::MAX;
        // max of suffix starting after p, scanned from the left via prefix mins
        for p in 1..n {
            min_prefix = min_prefix.min(self.at(p));
            // p is a global descent iff min of first p values > max of the rest,
            // i.e. first p values are exactly {n-p+1, ..., n}
            if min_prefix == n - p + 1 {
                s.insert(p);
            }
        }
        s
    }

    /// Grafting `sigma v tau`: `(sigma+q, p+q+1, tau)`.
    pub fn graft(&self, other: &Permutation) -> Permutation {
        let (p, q) = (self.degree(), other.degree());
        let mut word = Vec::with_capacity(p + q + 1);
        word.extend(self.word.iter().map(|&v| v + q));
        word.push(p + q + 1);
        word.extend(other.word.iter().copied());
        Permutation { word }
    }

    /// Grafting `sigma v_ tau`: `(sigma, p+q+1, tau+p)`.
    pub fn graft_under(&self, other: &Permutation) -> Permutation {
        let (p, q) = (self.degree(), other.degree());
        let mut word = Vec::with_capacity(p + q + 1);
        word.extend(self.word.iter().copied());
        word.push(p + q + 1);
        word.extend(other.word.iter().map(|&v| v + p));
        Permutation { word }
    }

    /// `sigma \ tau`: `(sigma+q, tau)`.
    pub fn concat_over(&self, other: &Permutation) -> Permutation {
        let q = other.degree();
        let mut word = Vec::with_capacity(self.degree() + q);
        word.extend(self.word.iter().map(|&v| v + q));
        word.extend(other.word.iter().copied());
        Permutation { word }
    }

    /// `sigma / tau`: `(sigma, tau+p)`.
    pub fn concat_under(&self, other: &Permutation) -> Permutation {
        let p = self.degree();
        let mut word = Vec::with_capacity(p + other.degree());
        word.extend(self.word.iter().copied());
        word.extend(other.word.iter().map(|&v| v + p));
        Permutation { word }
    }

    /// The unique decomposition into `\`-factors with no global descents.
    /// Returns the empty list for the empty permutation.
    pub fn gd_decompose(&self) -> Vec<Permutation> {
        self.decompose_at(&self.global_descents())
    }

    /// Split at the positions of `cuts` (which must consist of global
    /// descents) and standardize each block.
    pub fn decompose_at(&self, cuts: &Subset) -> Vec<Permutation> {
        let n = self.degree();
        if n == 0 {
            return vec![];
        }
        let mut out = Vec::new();
        let mut start = 0;
        let mut bounds: Vec<usize> = cuts.members();
        bounds.push(n);
        for b in bounds {
            out.push(Permutation::standardize_values(&self.word[start..b]));
            start = b;
        }
        out
    }

    /// The `/`-assembly of the blocks cut out by `cuts`:
    /// `tau_R = tau_1 / tau_2 / ... / tau_r`.
    pub fn partial_under(&self, cuts: &Subset) -> Permutation {
        self.decompose_at(cuts)
            .into_iter()
            .fold(Permutation::identity(0), |acc, f| acc.concat_under(&f))
    }

    /// Pattern avoidance with positions `i < j < k` and strict value
    /// comparisons.
    pub fn avoids(&self, pattern: Pattern) -> bool {
        let n = self.degree();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    let (a, b, c) = (self.at(i), self.at(j), self.at(k));
                    let hit = match pattern {
                        Pattern::P132 => a < c && c < b,
                        Pattern::P213 => b < a && a < c,
                    };
                    if hit {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Restriction `rho|_R`: standardize the values at the positions in `R`.
    pub fn restrict(&self, positions: &Subset) -> Result<Permutation> {
        if positions.ambient() != self.degree() {
            return Err(invalid("restriction set has wrong ambient degree"));
        }
        let vals: Vec<usize> = positions.members().iter().map(|&p| self.at(p)).collect();
        Ok(Permutation::standardize_values(&vals))
    }

    /// All permutations of `[n]` in lexicographic order of their words.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { word: word.clone() });
            // next permutation in lex order
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| word[i] < word[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        out
    }
}

/// `pi_R` for `R` a subset of `[n]`: the inverse of the word
/// `(R_1, ..., R_p, Rc_1, ..., Rc_q)`.
pub fn pi_r(set: &Subset, n: usize) -> Result<Permutation> {
    if set.ambient() != n {
        return Err(invalid("subset ambient must equal n"));
    }
    let mut word = Vec::with_capacity(n);
    word.extend(set.members());
    word.extend(set.complement().members());
    Ok(Permutation::from_word(word)?.inverse())
}

/// The minimal coset representatives `Sh(p, q)`: permutations of `[p+q]` with
/// descent set contained in `{p}`. One per `p`-subset `R` of `[p+q]`, with
/// word `(sorted R, sorted R^c)`.
pub fn shuffle_class(p: usize, q: usize) -> Vec<Permutation> {
    Subset::all_of_size(p + q, p)
        .into_iter()
        .map(|r| {
            let mut word: Vec<usize> = r.members();
            word.extend(r.complement().members());
            Permutation::from_word(word).unwrap()
        })
        .collect()
}

/// `S^S`: all permutations of `[n]` whose descent set is contained in `s`.
pub fn perms_with_descents_in(s: &Subset, n: usize) -> Vec<Permutation> {
    debug_assert_eq!(s.ambient(), n.saturating_sub(1));
    Permutation::all(n)
        .into_iter()
        .filter(|p| p.descents().is_subset_of(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(
            Permutation::standardize(&[5, 6, 4, 9, 7, 3]).unwrap(),
            p(&[3, 4, 2, 6, 5, 1])
        );
        assert_eq!(Permutation::standardize(&[1, 2, 3]).unwrap(), p(&[1, 2, 3]));
        assert_eq!(Permutation::standardize(&[]).unwrap(), Permutation::identity(0));
        assert!(Permutation::standardize(&[2, 2]).is_err());
    }

    #[test]
    fn inversion_and_descent_examples() {
        let s = p(&[4, 2, 3, 5, 1]);
        assert_eq!(
            s.inversions(),
            vec![(1, 2), (1, 3), (1, 5), (2, 5), (3, 5), (4, 5)]
        );
        assert_eq!(p(&[2, 1]).descents().members(), vec![1]);
        assert_eq!(
            p(&[5, 6, 4, 9, 7, 3, 8, 1, 2]).global_descents().members(),
            vec![7]
        );
    }

    #[test]
    fn grafting_and_concatenation() {
        assert_eq!(p(&[1]).graft(&Permutation::identity(0)), p(&[1, 2]));
        assert_eq!(Permutation::identity(0).graft(&p(&[1])), p(&[2, 1]));
        assert_eq!(
            p(&[2, 3, 1]).graft(&p(&[4, 3, 5, 1, 2])),
            p(&[7, 8, 6, 9, 4, 3, 5, 1, 2])
        );
        let t = p(&[1, 3, 2])
            .concat_over(&p(&[3, 4, 1, 2]).concat_over(&p(&[2, 1])));
        assert_eq!(t, p(&[7, 9, 8, 5, 6, 3, 4, 2, 1]));
        let u = p(&[1, 3, 2])
            .concat_under(&p(&[3, 4, 1, 2]).concat_under(&p(&[2, 1])));
        assert_eq!(u, p(&[1, 3, 2, 6, 7, 4, 5, 9, 8]));
        let s = p(&[3, 1, 2]);
        assert_eq!(s.concat_over(&Permutation::identity(0)), s);
        assert_eq!(Permutation::identity(0).concat_under(&s), s);
    }

    #[test]
    fn grafting_identities() {
        // (rho v sigma) \ tau = rho v (sigma \ tau) and the underline variant
        for rho in Permutation::all(2) {
            for sigma in Permutation::all(1) {
                for tau in Permutation::all(2) {
                    assert_eq!(
                        rho.graft(&sigma).concat_over(&tau),
                        rho.graft(&sigma.concat_over(&tau))
                    );
                    assert_eq!(
                        rho.concat_under(&sigma.graft_under(&tau)),
                        rho.concat_under(&sigma).graft_under(&tau)
                    );
                }
            }
        }
    }

    #[test]
    fn gd_decompose_examples() {
        // 798563421 = 132\3412\21 = 132\12\12\1\1 after splitting 3412 and 21
        let t = p(&[7, 9, 8, 5, 6, 3, 4, 2, 1]);
        assert_eq!(
            t.gd_decompose(),
            vec![p(&[1, 3, 2]), p(&[1, 2]), p(&[1, 2]), p(&[1]), p(&[1])]
        );
        assert!(t.gd_decompose().iter().all(|f| f.global_descents().is_empty()));
        assert_eq!(p(&[1, 2, 3]).gd_decompose(), vec![p(&[1, 2, 3])]);
        assert_eq!(p(&[2, 1]).gd_decompose(), vec![p(&[1]), p(&[1])]);
        assert_eq!(Permutation::identity(0).gd_decompose(), vec![]);
        // refold check
        let refold = t
            .gd_decompose()
            .into_iter()
            .fold(Permutation::identity(0), |acc, f| acc.concat_over(&f));
        assert_eq!(refold, t);
    }

    #[test]
    fn partial_under_example() {
        // tau = 132\3412\21, cut at R = {3,7}, a subset of GDes = {3,5,7,8}
        let tau = p(&[7, 9, 8, 5, 6, 3, 4, 2, 1]);
        assert_eq!(tau.global_descents().members(), vec![3, 5, 7, 8]);
        let r = Subset::from_members([3, 7], 8).unwrap();
        assert_eq!(tau.partial_under(&r), p(&[1, 3, 2, 6, 7, 4, 5, 9, 8]));
        // R = {} gives st(tau) = tau
        let none = Subset::empty(8);
        assert_eq!(tau.partial_under(&none), tau);
    }

    #[test]
    fn avoidance_examples() {
        assert!(p(&[4, 3, 5, 1, 2]).avoids(Pattern::P132));
        assert!(!p(&[1, 3, 2]).avoids(Pattern::P132));
        let both = Permutation::all(4)
            .into_iter()
            .filter(|s| s.avoids(Pattern::P132) && s.avoids(Pattern::P213))
            .count();
        assert_eq!(both, 8);
    }

    #[test]
    fn pi_r_example() {
        let r = Subset::from_members([1, 3], 4).unwrap();
        assert_eq!(pi_r(&r, 4).unwrap(), p(&[1, 3, 2, 4]));
        // pi_R(R_i) = i and pi_R(Rc_i) = p + i
        let r = Subset::from_members([2, 5], 5).unwrap();
        let pr = pi_r(&r, 5).unwrap();
        assert_eq!(pr.at(2), 1);
        assert_eq!(pr.at(5), 2);
        assert_eq!(pr.at(1), 3);
    }

    #[test]
    fn restrict_full_and_shuffles() {
        let rho = p(&[4, 2, 3, 5, 1]);
        assert_eq!(rho.restrict(&Subset::full(5)).unwrap(), rho);
        assert_eq!(
            rho.restrict(&Subset::from_members([1, 4], 5).unwrap()).unwrap(),
            p(&[1, 2])
        );
        let sh = shuffle_class(2, 2);
        assert_eq!(sh.len(), 6);
        for z in &sh {
            assert!(z.descents().is_subset_of(&Subset::from_members([2], 3).unwrap()));
        }
    }

    #[test]
    fn weak_order_basics() {
        assert!(Permutation::identity(3).weak_leq(&p(&[3, 2, 1])));
        assert!(!p(&[2, 1, 3]).weak_leq(&p(&[1, 3, 2])));
        assert_eq!(Permutation::all(4).len(), 24);
    }
}
