use std::fmt;

use crate::error::{invalid, Result};
use crate::subset::Subset;

/// A rooted planar binary tree. Degree is the number of internal nodes; a
/// leaf has degree 0 and is the unit for `\` and `/`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

use Tree::{Leaf, Node};

impl Tree {
    pub fn node(l: Tree, r: Tree) -> Tree {
        Node(Box::new(l), Box::new(r))
    }

    pub fn one_node() -> Tree {
        Tree::node(Leaf, Leaf)
    }

    pub fn degree(&self) -> usize {
        match self {
            Leaf => 0,
            Node(l, r) => 1 + l.degree() + r.degree(),
        }
    }

    /// The right comb `1_n`: `comb(n) = comb(n-1) v Leaf`.
    pub fn comb(n: usize) -> Tree {
        let mut t = Leaf;
        for _ in 0..n {
            t = Tree::node(t, Leaf);
        }
        t
    }

    pub fn graft(&self, other: &Tree) -> Tree {
        Tree::node(self.clone(), other.clone())
    }

    pub fn split_root(&self) -> Result<(Tree, Tree)> {
        match self {
            Leaf => Err(invalid("cannot split a leaf at the root")),
            Node(l, r) => Ok(((**l).clone(), (**r).clone())),
        }
    }

    /// `s \ t`: adjoin the root of `t` to the rightmost branch of `s`.
    /// Satisfies `s\t = s_l v (s_r\t)`.
    pub fn concat_over(&self, other: &Tree) -> Tree {
        match self {
            Leaf => other.clone(),
            Node(l, r) => Tree::node((**l).clone(), r.concat_over(other)),
        }
    }

    /// `s / t`: adjoin the root of `s` to the leftmost branch of `t`.
    /// Satisfies `s/t = (s/t_l) v t_r`.
    pub fn concat_under(&self, other: &Tree) -> Tree {
        match other {
            Leaf => self.clone(),
            Node(l, r) => Tree::node(self.concat_under(l), (**r).clone()),
        }
    }

    /// `t` is progressive iff `t_r` is a leaf.
    pub fn is_progressive(&self) -> bool {
        matches!(self, Node(_, r) if **r == Leaf)
    }

    /// The unique factorization into progressive trees under `\`.
    /// `t = t_l v t_r = (t_l v Leaf) \ t_r`.
    pub fn progressive_decompose(&self) -> Vec<Tree> {
        let mut out = Vec::new();
        let mut cur = self;
        while let Node(l, r) = cur {
            out.push(Tree::node((**l).clone(), Leaf));
            cur = r;
        }
        out
    }

    /// Reflection `t^r`: reverse the progressive components, reflecting each
    /// component `s v Leaf` to `s^r v Leaf`.
    pub fn reflect(&self) -> Tree {
        let mut out = Leaf;
        for c in self.progressive_decompose() {
            let (s, _) = c.split_root().unwrap();
            out = Tree::node(s.reflect(), Leaf).concat_over(&out);
        }
        out
    }

    /// `L(t)`: labels in `[n-1]` of leaves that are left children, leaves
    /// numbered `0..n` left to right. Equals `Des(gamma(t))`.
    pub fn left_leaf_set(&self) -> Subset {
        let n = self.degree();
        let mut s = Subset::empty(n.saturating_sub(1));
        let mut next = 0usize;
        self.walk_leaves(&mut next, false, &mut |label, is_left| {
            if is_left && label >= 1 && label < n {
                s.insert(label);
            }
        });
        s
    }

    fn walk_leaves(&self, next: &mut usize, is_left: bool, f: &mut impl FnMut(usize, bool)) {
        match self {
            Leaf => {
                f(*next, is_left);
                *next += 1;
            }
            Node(l, r) => {
                l.walk_leaves(next, true, f);
                r.walk_leaves(next, false, f);
            }
        }
    }

    /// `R(t)`: positions in `[n-1]` where `t` splits as `r\t'`, i.e. proper
    /// partial sums of the progressive component degrees. Equals
    /// `GDes(gamma(t))`.
    pub fn right_branch_set(&self) -> Subset {
        let n = self.degree();
        let mut s = Subset::empty(n.saturating_sub(1));
        let mut acc = 0;
        for c in self.progressive_decompose() {
            acc += c.degree();
            if acc < n {
                s.insert(acc);
            }
        }
        s
    }

    /// Tamari covers of `t`: right rotation `(A v B) v C -> A v (B v C)` at
    /// each internal node with an internal left child. The right comb is the
    /// minimum under this orientation.
    pub fn tamari_covers_up(&self) -> Vec<Tree> {
        let mut out = Vec::new();
        if let Node(l, r) = self {
            if let Node(a, b) = &**l {
                out.push(Tree::node((**a).clone(), Tree::node((**b).clone(), (**r).clone())));
            }
            for lc in l.tamari_covers_up() {
                out.push(Tree::node(lc, (**r).clone()));
            }
            for rc in r.tamari_covers_up() {
                out.push(Tree::node((**l).clone(), rc));
            }
        }
        out
    }

    /// All trees with `n` internal nodes, sorted by canonical serialization.
    pub fn all(n: usize) -> Vec<Tree> {
        fn build(n: usize) -> Vec<Tree> {
            if n == 0 {
                return vec![Leaf];
            }
            let mut out = Vec::new();
            for k in 0..n {
                for l in build(k) {
                    for r in build(n - 1 - k) {
                        out.push(Tree::node(l.clone(), r));
                    }
                }
            }
            out
        }
        let mut out = build(n);
        out.sort_by_key(|t| t.to_string());
        out
    }

    /// Is `set` admissible for `self` under the in-order node labeling: for
    /// every labeled node in `set`, its left subtree is contained in `set`.
    pub fn is_admissible(&self, set: &Subset) -> bool {
        fn go(t: &Tree, set: &Subset, offset: usize) -> bool {
            match t {
                Leaf => true,
                Node(l, r) => {
                    let j = offset + l.degree() + 1;
                    if set.contains(j) {
                        // left subtree labels are offset+1 ..= j-1
                        if !((offset + 1)..j).all(|i| set.contains(i)) {
                            return false;
                        }
                    }
                    go(l, set, offset) && go(r, set, j)
                }
            }
        }
        set.ambient() == self.degree() && go(self, set, 0)
    }

    /// All admissible node subsets, in binary-counter order.
    pub fn admissible_node_subsets(&self) -> Vec<Subset> {
        Subset::all(self.degree())
            .into_iter()
            .filter(|s| self.is_admissible(s))
            .collect()
    }

    /// Prune at an admissible subset: `(t'_R, t''_R)` where `t'_R` is the
    /// `\`-assembly of the removed branches and `t''_R` the reattachment of
    /// the rest.
    pub fn prune(&self, set: &Subset) -> Result<(Tree, Tree)> {
        if !self.is_admissible(set) {
            return Err(invalid("node subset is not admissible"));
        }
        fn go(t: &Tree, set: &Subset, offset: usize) -> (Tree, Tree) {
            match t {
                Leaf => (Leaf, Leaf),
                Node(l, r) => {
                    let j = offset + l.degree() + 1;
                    let (tp, tpp) = go(r, set, j);
                    if set.contains(j) {
                        (Tree::node((**l).clone(), tp), tpp)
                    } else {
                        let (sp, spp) = go(l, set, offset);
                        (sp.concat_over(&tp), Tree::node(spp, tpp))
                    }
                }
            }
        }
        Ok(go(self, set, 0))
    }

    /// All splits of `t` into `q+1` pieces at a weakly increasing multiset of
    /// `q` leaves, in colex order of the leaf multiset. Cutting at leaf `i`
    /// puts the first `i` internal nodes in the left piece.
    pub fn splits_multi(&self, q: usize) -> Vec<Vec<Tree>> {
        let p = self.degree();
        let mut out = Vec::new();
        let mut cuts = vec![0usize; q];
        loop {
            out.push(self.cut_at(&cuts));
            // next weakly increasing sequence over 0..=p, colex order
            let Some(i) = (0..q).find(|&i| cuts[i] < *cuts.get(i + 1).unwrap_or(&p)) else {
                break;
            };
            cuts[i] += 1;
            for c in cuts[..i].iter_mut() {
                *c = 0;
            }
        }
        out
    }

    /// Cut at the sorted leaf positions `cuts` (each in `0..=p`), producing
    /// `cuts.len()+1` pieces with internal-node counts given by consecutive
    /// differences.
    fn cut_at(&self, cuts: &[usize]) -> Vec<Tree> {
        fn split_two(t: &Tree, i: usize) -> (Tree, Tree) {
            // piece sizes (i, degree - i); cut descends toward leaf i
            match t {
                Leaf => (Leaf, Leaf),
                Node(l, r) => {
                    let dl = l.degree();
                    if i <= dl {
                        let (a, b) = split_two(l, i);
                        (a, Tree::node(b, (**r).clone()))
                    } else {
                        let (a, b) = split_two(r, i - dl - 1);
                        (Tree::node((**l).clone(), a), b)
                    }
                }
            }
        }
        let mut out = Vec::with_capacity(cuts.len() + 1);
        let mut rest = self.clone();
        let mut consumed = 0;
        for &c in cuts {
            let (a, b) = split_two(&rest, c - consumed);
            out.push(a);
            consumed = c;
            rest = b;
        }
        out.push(rest);
        out
    }

    /// Pairwise splits `t -> (t_0, t_1)`, in colex (left-degree) order.
    pub fn splits(&self) -> Vec<(Tree, Tree)> {
        self.splits_multi(1)
            .into_iter()
            .map(|mut v| {
                let b = v.pop().unwrap();
                (v.pop().unwrap(), b)
            })
            .collect()
    }

    /// `(t_0, ..., t_q) / s`: attach `t_i` to the `i`-th leaf of `s`.
    pub fn attach(parts: &[Tree], s: &Tree) -> Result<Tree> {
        if parts.len() != s.degree() + 1 {
            return Err(invalid("part count must equal leaf count of the base tree"));
        }
        fn go(s: &Tree, parts: &[Tree], next: &mut usize) -> Tree {
            match s {
                Leaf => {
                    let t = parts[*next].clone();
                    *next += 1;
                    t
                }
                Node(l, r) => {
                    let nl = go(l, parts, next);
                    let nr = go(r, parts, next);
                    Tree::node(nl, nr)
                }
            }
        }
        let mut next = 0;
        Ok(go(s, parts, &mut next))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => write!(f, "."),
            Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

pub fn catalan_number(n: usize) -> usize {
    catalan(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lit::parse_tree;

    fn t(s: &str) -> Tree {
        parse_tree(s).unwrap()
    }

    #[test]
    fn comb_and_split() {
        assert_eq!(Tree::comb(2).to_string(), "((..).)");
        assert_eq!(Tree::one_node().to_string(), "(..)");
        assert_eq!(
            Tree::comb(3).split_root().unwrap(),
            (Tree::comb(2), Leaf)
        );
        assert!(Leaf.split_root().is_err());
        assert_eq!(Leaf.graft(&Leaf), Tree::one_node());
    }

    #[test]
    fn concat_examples() {
        let one = Tree::one_node();
        assert_eq!(one.concat_over(&one).to_string(), "(.(..))");
        assert_eq!(one.concat_under(&one).to_string(), "((..).)");
        let s = t("((..)(..))");
        assert_eq!(s.concat_over(&Leaf), s);
        assert_eq!(Leaf.concat_under(&s), s);
        // associativity at small degree
        for a in Tree::all(2) {
            for b in Tree::all(1) {
                for c in Tree::all(2) {
                    assert_eq!(
                        a.concat_over(&b).concat_over(&c),
                        a.concat_over(&b.concat_over(&c))
                    );
                    assert_eq!(
                        a.concat_under(&b).concat_under(&c),
                        a.concat_under(&b.concat_under(&c))
                    );
                }
            }
        }
    }

    #[test]
    fn progressive_structure() {
        // the comb is progressive; the left-leaning chain splits completely
        assert_eq!(Tree::comb(3).progressive_decompose(), vec![Tree::comb(3)]);
        assert_eq!(
            t("(.(.(..)))").progressive_decompose(),
            vec![Tree::one_node(), Tree::one_node(), Tree::one_node()]
        );
        assert!(Tree::comb(3).is_progressive());
        assert!(!t("((..)(..))").is_progressive());
        assert!(t("((..).)").is_progressive());
        for n in 1..=8 {
            let progressive = Tree::all(n).into_iter().filter(Tree::is_progressive).count();
            assert_eq!(progressive, catalan(n - 1));
        }
        // refold
        for tr in Tree::all(4) {
            let folded = tr
                .progressive_decompose()
                .into_iter()
                .fold(Leaf, |acc, c| acc.concat_over(&c));
            assert_eq!(folded, tr);
        }
    }

    #[test]
    fn reflect_involution() {
        assert_eq!(Tree::comb(4).reflect(), Tree::comb(4));
        assert_eq!(Leaf.reflect(), Leaf);
        let one = Tree::one_node();
        for tr in Tree::all(4) {
            assert_eq!(tr.reflect().reflect(), tr);
            assert_eq!(
                one.concat_over(&tr).reflect(),
                tr.reflect().concat_over(&one)
            );
        }
    }

    #[test]
    fn branch_sets() {
        assert_eq!(Tree::comb(5).left_leaf_set().members(), Vec::<usize>::new());
        // the comb is indecomposable; the chain 1_1\1_1\1_1 splits everywhere
        assert_eq!(Tree::comb(3).right_branch_set().members(), Vec::<usize>::new());
        let top3 = t("(.(.(..)))");
        assert_eq!(top3.right_branch_set().members(), vec![1, 2]);
    }

    #[test]
    fn catalan_counts_and_tamari() {
        for (n, c) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)] {
            assert_eq!(Tree::all(n).len(), c);
            assert_eq!(catalan(n), c);
        }
        assert_eq!(catalan(10), 16796);
        assert_eq!(Tree::all(10).len(), 16796);
        // top of Y_3 is the left comb; it covers nothing upward
        assert!(t("(.(.(..)))").tamari_covers_up().is_empty());
        assert_eq!(Tree::comb(2).tamari_covers_up(), vec![t("(.(..))")]);
        // every non-maximal tree has at least one cover
        for tr in Tree::all(4) {
            let max = tr == t("(.(.(.(..))))");
            assert_eq!(tr.tamari_covers_up().is_empty(), max);
        }
    }

    #[test]
    fn admissible_and_prune() {
        let one = Tree::one_node();
        assert_eq!(one.admissible_node_subsets().len(), 2);
        for tr in Tree::all(3) {
            let n = tr.degree();
            let empty = Subset::empty(n);
            let full = Subset::full(n);
            assert_eq!(tr.prune(&empty).unwrap(), (Leaf, tr.clone()));
            assert_eq!(tr.prune(&full).unwrap(), (tr.clone(), Leaf));
        }
        // the worked 8-node example: R keeps 5 nodes, leaves 3
        // tree is lambda(67458231); built here from its known shape
        let r = crate::maps::lambda(
            &crate::perm::Permutation::from_word(vec![6, 7, 4, 5, 8, 2, 3, 1]).unwrap(),
        );
        assert_eq!(r.degree(), 8);
        let sets = r.admissible_node_subsets();
        let mut found = false;
        for s in &sets {
            if s.len() == 5 {
                let (tp, tpp) = r.prune(s).unwrap();
                assert_eq!(tp.degree(), 5);
                assert_eq!(tpp.degree(), 3);
                found = true;
            }
        }
        assert!(found);
    }

    #[test]
    fn splits_and_attach() {
        let one = Tree::one_node();
        let two = one.splits();
        assert_eq!(two, vec![(Leaf, one.clone()), (one.clone(), Leaf)]);
        for tr in Tree::all(2) {
            assert_eq!(tr.splits_multi(2).len(), 6);
        }
        // binomial(p+q, p) splits in general
        for tr in Tree::all(3) {
            assert_eq!(tr.splits_multi(3).len(), 20);
        }
        assert_eq!(
            Tree::attach(&[Leaf, one.clone()], &one).unwrap().to_string(),
            "(.(..))"
        );
        assert!(Tree::attach(&[Leaf], &one).is_err());
        // splits reassemble: attach(parts, comb) where cut pieces concat back
        for tr in Tree::all(3) {
            for (a, b) in tr.splits() {
                assert_eq!(a.degree() + b.degree(), 3);
            }
        }
    }
}
