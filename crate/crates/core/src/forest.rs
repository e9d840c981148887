use std::fmt;

use crate::tree::Tree;

/// A rooted planar tree of arbitrary arity; a node is its ordered list of
/// child subtrees. Degree counts all nodes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

/// An ordered sequence of rooted planar trees. The empty forest is the
/// degree-0 element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Forest(pub Vec<OrderedTree>);

impl OrderedTree {
    pub fn leaf() -> OrderedTree {
        OrderedTree { children: vec![] }
    }

    pub fn degree(&self) -> usize {
        1 + self.children.iter().map(OrderedTree::degree).sum::<usize>()
    }

    /// The ladder `l_n`: every node has exactly one child.
    pub fn ladder(n: usize) -> OrderedTree {
        assert!(n >= 1);
        let mut t = OrderedTree::leaf();
        for _ in 1..n {
            t = OrderedTree { children: vec![t] };
        }
        t
    }

    /// Children sorted descending by canonical serialization, recursively.
    pub fn unorder(&self) -> OrderedTree {
        let mut children: Vec<OrderedTree> =
            self.children.iter().map(OrderedTree::unorder).collect();
        children.sort_by(|a, b| b.to_string().cmp(&a.to_string()));
        OrderedTree { children }
    }

    /// Mirror image: reverse the child order, recursively.
    pub fn reflect(&self) -> OrderedTree {
        OrderedTree {
            children: self.children.iter().rev().map(OrderedTree::reflect).collect(),
        }
    }

    /// All ordered trees with `n` nodes, sorted by serialization.
    pub fn all(n: usize) -> Vec<OrderedTree> {
        assert!(n >= 1);
        let mut out: Vec<OrderedTree> = Forest::all(n - 1)
            .into_iter()
            .map(|f| OrderedTree { children: f.0 })
            .collect();
        out.sort_by_key(|t| t.to_string());
        out
    }
}

impl Forest {
    pub fn empty() -> Forest {
        Forest(vec![])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(OrderedTree::degree).sum()
    }

    /// Forest concatenation, the free product of NCK.
    pub fn concat(&self, other: &Forest) -> Forest {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Forest(v)
    }

    /// Canonical unordered form: unorder each component, then sort the
    /// components descending by serialization.
    pub fn unorder(&self) -> Forest {
        let mut v: Vec<OrderedTree> = self.0.iter().map(OrderedTree::unorder).collect();
        v.sort_by(|a, b| b.to_string().cmp(&a.to_string()));
        Forest(v)
    }

    /// Mirror image across a vertical line: reverse the component order and
    /// reflect each tree.
    pub fn reflect(&self) -> Forest {
        Forest(self.0.iter().rev().map(OrderedTree::reflect).collect())
    }

    /// All forests with `n` total nodes, sorted by serialization.
    pub fn all(n: usize) -> Vec<Forest> {
        fn build(n: usize) -> Vec<Forest> {
            if n == 0 {
                return vec![Forest::empty()];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for t in OrderedTree::all(first) {
                    for rest in build(n - first) {
                        let mut v = vec![t.clone()];
                        v.extend(rest.0);
                        out.push(Forest(v));
                    }
                }
            }
            out
        }
        let mut out = build(n);
        out.sort_by_key(|f| f.to_string());
        out
    }

    /// All admissible cuts: pairs `(removed, remaining)` of forests, where
    /// the removed node set is closed under taking descendants and removed
    /// subtrees are listed left to right.
    pub fn admissible_cuts(&self) -> Vec<(Forest, Forest)> {
        fn tree_cuts(t: &OrderedTree) -> Vec<(Forest, Option<OrderedTree>)> {
            let mut out = vec![(Forest(vec![t.clone()]), None)];
            let mut partial: Vec<(Forest, Vec<OrderedTree>)> =
                vec![(Forest::empty(), vec![])];
            for c in &t.children {
                let child_cuts = tree_cuts(c);
                let mut next = Vec::new();
                for (removed, kept) in &partial {
                    for (crem, ckept) in &child_cuts {
                        let mut kept2 = kept.clone();
                        if let Some(k) = ckept {
                            kept2.push(k.clone());
                        }
                        next.push((removed.concat(crem), kept2));
                    }
                }
                partial = next;
            }
            for (removed, kept) in partial {
                out.push((removed, Some(OrderedTree { children: kept })));
            }
            out
        }
        let mut cuts: Vec<(Forest, Forest)> = vec![(Forest::empty(), Forest::empty())];
        for t in &self.0 {
            let tc = tree_cuts(t);
            let mut next = Vec::new();
            for (removed, kept) in &cuts {
                for (trem, tkept) in &tc {
                    let mut k = kept.clone();
                    if let Some(t) = tkept {
                        k.0.push(t.clone());
                    }
                    next.push((removed.concat(trem), k));
                }
            }
            cuts = next;
        }
        cuts
    }

    /// The bijection onto planar binary trees:
    /// `phi(t_1 ... t_k) = phi(t_1)\...\phi(t_k)` with
    /// `phi(tree) = phi(children) v Leaf`.
    pub fn to_binary(&self) -> Tree {
        let mut out = Tree::Leaf;
        for t in &self.0 {
            let inner = Forest(t.children.clone()).to_binary();
            out = out.concat_over(&Tree::node(inner, Tree::Leaf));
        }
        out
    }

    /// Inverse of `to_binary`, via progressive components.
    pub fn from_binary(t: &Tree) -> Forest {
        let mut v = Vec::new();
        for c in t.progressive_decompose() {
            let (s, _) = c.split_root().unwrap();
            v.push(OrderedTree { children: Forest::from_binary(&s).0 });
        }
        Forest(v)
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladders_and_serialization() {
        assert_eq!(OrderedTree::ladder(1).to_string(), "()");
        assert_eq!(OrderedTree::ladder(3).to_string(), "((()))");
        assert_eq!(Forest::empty().to_string(), "∅");
        assert_eq!(
            Forest(vec![OrderedTree::ladder(2), OrderedTree::ladder(1)]).to_string(),
            "(()) ()"
        );
    }

    #[test]
    fn unorder_canonicalization() {
        let a = Forest(vec![OrderedTree::ladder(2), OrderedTree::ladder(1)]);
        let b = Forest(vec![OrderedTree::ladder(1), OrderedTree::ladder(2)]);
        assert_eq!(a.unorder(), b.unorder());
        // two 3-node trees with 2 children in either order
        let l = OrderedTree { children: vec![OrderedTree::ladder(2), OrderedTree::ladder(1)] };
        let r = OrderedTree { children: vec![OrderedTree::ladder(1), OrderedTree::ladder(2)] };
        assert_eq!(l.unorder(), r.unorder());
        for f in Forest::all(4) {
            assert_eq!(f.unorder().unorder(), f.unorder());
        }
    }

    #[test]
    fn forest_counts() {
        // planar forests with n nodes are counted by Catalan(n)
        for (n, c) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14)] {
            assert_eq!(Forest::all(n).len(), c);
        }
        // distinct unordered forests
        let distinct = |n: usize| {
            let mut v: Vec<String> =
                Forest::all(n).iter().map(|f| f.unorder().to_string()).collect();
            v.sort();
            v.dedup();
            v.len()
        };
        assert_eq!(distinct(1), 1);
        assert_eq!(distinct(2), 2);
        assert_eq!(distinct(3), 4);
        assert_eq!(distinct(4), 9);
    }

    #[test]
    fn phi_bijection() {
        let one = Forest(vec![OrderedTree::ladder(1)]);
        assert_eq!(one.to_binary().to_string(), "(..)");
        assert_eq!(
            Forest(vec![OrderedTree::ladder(2)]).to_binary(),
            Tree::comb(2)
        );
        for n in 1..=6 {
            assert_eq!(
                Forest(vec![OrderedTree::ladder(n)]).to_binary(),
                Tree::comb(n)
            );
        }
        for n in 0..=8 {
            let forests = Forest::all(n);
            let mut images: Vec<Tree> = forests.iter().map(Forest::to_binary).collect();
            for (f, t) in forests.iter().zip(&images) {
                assert_eq!(t.degree(), n);
                assert_eq!(&Forest::from_binary(t), f);
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), forests.len());
        }
    }

    #[test]
    fn ladder_cuts() {
        let l2 = Forest(vec![OrderedTree::ladder(2)]);
        let mut cuts: Vec<String> = l2
            .admissible_cuts()
            .iter()
            .map(|(a, b)| format!("{a} | {b}"))
            .collect();
        cuts.sort();
        assert_eq!(cuts, vec!["(()) | ∅", "() | ()", "∅ | (())"]);
    }
}
