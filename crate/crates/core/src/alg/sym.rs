use crate::alg::lincomb::{HopfAlg, Tensor, Vect};
use crate::lit;

pub type Partition = Vec<usize>;

/// All partitions of `n`, parts weakly decreasing, in lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Symmetric functions on the complete homogeneous basis `h_lambda`.
pub struct SymH;

impl HopfAlg for SymH {
    type Key = Partition;

    const BASIS_ID: &'static str = "h_partition";

    fn degree(k: &Partition) -> usize {
        k.iter().sum()
    }

    fn unit_key() -> Partition {
        vec![]
    }

    fn basis(n: usize) -> Vec<Partition> {
        partitions(n)
    }

    fn key_string(k: &Partition) -> String {
        lit::partition_literal(k)
    }

    /// Commutative free product: merge the parts and re-sort.
    fn product_keys(a: &Partition, b: &Partition) -> Vect<Partition> {
        let mut k = a.clone();
        k.extend_from_slice(b);
        k.sort_unstable_by(|x, y| y.cmp(x));
        Vect::basis(k)
    }

    /// Multiplicative extension of `Delta(h_n) = sum_{i+j=n} h_i (x) h_j`.
    fn coproduct_key(lambda: &Partition) -> Tensor<Partition> {
        let mut out: Tensor<Partition> = Vect::basis((vec![], vec![]));
        for &a in lambda {
            let mut next = Vect::zero();
            for ((x, y), c) in &out.0 {
                for i in 0..=a {
                    let mut x2 = x.clone();
                    if i > 0 {
                        x2.push(i);
                        x2.sort_unstable_by(|p, q| q.cmp(p));
                    }
                    let mut y2 = y.clone();
                    if a - i > 0 {
                        y2.push(a - i);
                        y2.sort_unstable_by(|p, q| q.cmp(p));
                    }
                    next.add_term((x2, y2), c.clone());
                }
            }
            out = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alg::lincomb::scalar;

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(0), vec![Vec::<usize>::new()]);
        assert_eq!(partitions(4).len(), 5);
        for lambda in partitions(6) {
            assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn product_and_coproduct() {
        assert_eq!(
            SymH::product_keys(&vec![1], &vec![2]),
            Vect::basis(vec![2, 1])
        );
        // commutativity
        for a in partitions(3) {
            for b in partitions(2) {
                assert_eq!(SymH::product_keys(&a, &b), SymH::product_keys(&b, &a));
            }
        }
        let cop = SymH::coproduct_key(&vec![2]);
        assert_eq!(cop.coeff(&(vec![1], vec![1])), scalar(1));
        assert_eq!(cop.coeff(&(vec![], vec![2])), scalar(1));
        // cocommutativity
        for lambda in partitions(4) {
            let cop = SymH::coproduct_key(&lambda);
            for ((x, y), c) in &cop.0 {
                assert_eq!(cop.coeff(&(y.clone(), x.clone())), c.clone());
            }
        }
    }
}
