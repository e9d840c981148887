use crate::error::{invalid, Result};

/// A subset of `[m]` = {1, ..., m} stored as a bit set, together with its
/// ambient bound `m`. Descent-type sets live in `[n-1]`, node sets in `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subset {
    bits: u64,
    ambient: usize,
}

impl Subset {
    pub fn empty(ambient: usize) -> Self {
        assert!(ambient < 64);
        Subset { bits: 0, ambient }
    }

    pub fn full(ambient: usize) -> Self {
        assert!(ambient < 64);
        Subset {
            bits: if ambient == 0 { 0 } else { (1u64 << ambient) - 1 },
            ambient,
        }
    }

    pub fn from_members(members: impl IntoIterator<Item = usize>, ambient: usize) -> Result<Self> {
        let mut s = Subset::empty(ambient);
        for m in members {
            if m == 0 || m > ambient {
                return Err(invalid(format!("member {m} out of range [1,{ambient}]")));
            }
            s.bits |= 1 << (m - 1);
        }
        Ok(s)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn contains(&self, m: usize) -> bool {
        m >= 1 && m <= self.ambient && self.bits & (1 << (m - 1)) != 0
    }

    pub fn insert(&mut self, m: usize) {
        debug_assert!(m >= 1 && m <= self.ambient);
        self.bits |= 1 << (m - 1);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn members(&self) -> Vec<usize> {
        (1..=self.ambient).filter(|&m| self.contains(m)).collect()
    }

    pub fn complement(&self) -> Subset {
        Subset {
            bits: Subset::full(self.ambient).bits & !self.bits,
            ambient: self.ambient,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        debug_assert_eq!(self.ambient, other.ambient);
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.ambient, other.ambient);
        Subset { bits: self.bits | other.bits, ambient: self.ambient }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.ambient, other.ambient);
        Subset { bits: self.bits & other.bits, ambient: self.ambient }
    }

    /// All subsets of `[ambient]`, in binary-counter order.
    pub fn all(ambient: usize) -> Vec<Subset> {
        assert!(ambient < 64);
        (0..(1u64 << ambient)).map(|bits| Subset { bits, ambient }).collect()
    }

    /// All subsets of cardinality `k`, in binary-counter order.
    pub fn all_of_size(ambient: usize, k: usize) -> Vec<Subset> {
        Subset::all(ambient).into_iter().filter(|s| s.len() == k).collect()
    }

    /// The composition of `n` associated with a subset of `[n-1]`:
    /// `S = {p1 < ... < pk}` maps to `(p1, p2-p1, ..., n-pk)`.
    pub fn to_composition(&self, n: usize) -> Vec<usize> {
        debug_assert_eq!(self.ambient, n.saturating_sub(1));
        if n == 0 {
            return vec![];
        }
        let mut parts = Vec::new();
        let mut prev = 0;
        for p in self.members() {
            parts.push(p - prev);
            prev = p;
        }
        parts.push(n - prev);
        parts
    }

    /// Inverse of `to_composition`: partial sums of `alpha`, dropping the last.
    pub fn from_composition(alpha: &[usize]) -> Subset {
        let n: usize = alpha.iter().sum();
        let mut s = Subset::empty(n.saturating_sub(1));
        let mut acc = 0;
        for &a in &alpha[..alpha.len().saturating_sub(1)] {
            acc += a;
            s.insert(acc);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_subset_bijection() {
        // I(alpha) for alpha = (2,1,3): {2,3} in [5]
        let s = Subset::from_composition(&[2, 1, 3]);
        assert_eq!(s.members(), vec![2, 3]);
        assert_eq!(s.to_composition(6), vec![2, 1, 3]);
        // round trip over all subsets of [4] (compositions of 5)
        for s in Subset::all(4) {
            assert_eq!(Subset::from_composition(&s.to_composition(5)), s);
        }
    }

    #[test]
    fn boolean_basics() {
        let s = Subset::from_members([2, 5, 7], 7).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.contains(5));
        assert!(!s.contains(3));
        assert_eq!(s.complement().members(), vec![1, 3, 4, 6]);
        assert!(Subset::from_members([2], 7).unwrap().is_subset_of(&s));
        assert!(Subset::from_members([0], 3).is_err());
        assert!(Subset::from_members([4], 3).is_err());
    }
}
