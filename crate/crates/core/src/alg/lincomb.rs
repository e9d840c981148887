use std::collections::BTreeMap;
use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::Zero;

pub type Scalar = BigRational;

pub fn scalar(v: i64) -> Scalar {
    BigRational::from_integer(v.into())
}

/// A finite formal linear combination over basis keys, with no explicit
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vect<K: Ord + Clone>(pub BTreeMap<K, Scalar>);

pub type Tensor<K> = Vect<(K, K)>;

impl<K: Ord + Clone> Default for Vect<K> {
    fn default() -> Self {
        Vect(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Vect<K> {
    pub fn zero() -> Self {
        Vect(BTreeMap::new())
    }

    pub fn basis(k: K) -> Self {
        let mut m = BTreeMap::new();
        m.insert(k, scalar(1));
        Vect(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Vect<K>) -> Vect<K> {
        let mut out = self.clone();
        for (k, c) in &other.0 {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Vect<K>) -> Vect<K> {
        self.add(&other.scale(&scalar(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Vect<K> {
        if c.is_zero() {
            return Vect::zero();
        }
        Vect(self.0.iter().map(|(k, v)| (k.clone(), v.clone() * c.clone())).collect())
    }

    pub fn add_scaled(&mut self, other: &Vect<K>, c: &Scalar) {
        for (k, v) in &other.0 {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    /// Apply a key-to-vector linear map.
    pub fn apply<L: Ord + Clone>(&self, f: impl Fn(&K) -> Vect<L>) -> Vect<L> {
        let mut out = Vect::zero();
        for (k, c) in &self.0 {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

/// A graded connected Hopf algebra presented by structure maps on a basis.
pub trait HopfAlg {
    type Key: Ord + Clone + Debug;

    const BASIS_ID: &'static str;

    fn degree(k: &Self::Key) -> usize;
    fn unit_key() -> Self::Key;
    fn basis(n: usize) -> Vec<Self::Key>;
    fn key_string(k: &Self::Key) -> String;
    fn product_keys(a: &Self::Key, b: &Self::Key) -> Vect<Self::Key>;
    fn coproduct_key(a: &Self::Key) -> Tensor<Self::Key>;
}

pub fn unit_vect<A: HopfAlg>() -> Vect<A::Key> {
    Vect::basis(A::unit_key())
}

pub fn product<A: HopfAlg>(v: &Vect<A::Key>, w: &Vect<A::Key>) -> Vect<A::Key> {
    let mut out = Vect::zero();
    for (a, ca) in &v.0 {
        for (b, cb) in &w.0 {
            out.add_scaled(&A::product_keys(a, b), &(ca.clone() * cb.clone()));
        }
    }
    out
}

pub fn coproduct<A: HopfAlg>(v: &Vect<A::Key>) -> Tensor<A::Key> {
    v.apply(A::coproduct_key)
}

pub fn counit<A: HopfAlg>(v: &Vect<A::Key>) -> Scalar {
    v.coeff(&A::unit_key())
}

pub fn tensor_product<A: HopfAlg>(v: &Tensor<A::Key>, w: &Tensor<A::Key>) -> Tensor<A::Key> {
    let mut out = Vect::zero();
    for ((a1, a2), ca) in &v.0 {
        for ((b1, b2), cb) in &w.0 {
            let left = A::product_keys(a1, b1);
            let right = A::product_keys(a2, b2);
            let c = ca.clone() * cb.clone();
            for (l, cl) in &left.0 {
                for (r, cr) in &right.0 {
                    out.add_term((l.clone(), r.clone()), c.clone() * cl.clone() * cr.clone());
                }
            }
        }
    }
    out
}

/// Apply a key-to-vector linear map to both tensor legs.
pub fn tensor_apply<K: Ord + Clone, L: Ord + Clone>(
    t: &Tensor<K>,
    f: impl Fn(&K) -> Vect<L>,
) -> Tensor<L> {
    t.apply(|(a, b)| {
        let fa = f(a);
        let fb = f(b);
        let mut out = Vect::zero();
        for (x, cx) in &fa.0 {
            for (y, cy) in &fb.0 {
                out.add_term((x.clone(), y.clone()), cx.clone() * cy.clone());
            }
        }
        out
    })
}

/// Swap the tensor legs.
pub fn tensor_swap<K: Ord + Clone>(t: &Tensor<K>) -> Tensor<K> {
    t.apply(|(a, b)| Vect::basis((b.clone(), a.clone())))
}

/// The antipode from the graded-connected recursion
/// `S(x) = -x - sum S(x') x''` over the reduced coproduct.
pub fn antipode<A: HopfAlg>(v: &Vect<A::Key>) -> Vect<A::Key> {
    let mut memo: BTreeMap<A::Key, Vect<A::Key>> = BTreeMap::new();
    let mut out = Vect::zero();
    for (k, c) in &v.0 {
        let s = antipode_key::<A>(k, &mut memo);
        out.add_scaled(&s, c);
    }
    out
}

fn antipode_key<A: HopfAlg>(
    k: &A::Key,
    memo: &mut BTreeMap<A::Key, Vect<A::Key>>,
) -> Vect<A::Key> {
    if A::degree(k) == 0 {
        return Vect::basis(A::unit_key());
    }
    if let Some(v) = memo.get(k) {
        return v.clone();
    }
    let mut out = Vect::basis(k.clone()).scale(&scalar(-1));
    for ((a, b), c) in &A::coproduct_key(k).0 {
        if A::degree(a) == 0 || A::degree(b) == 0 {
            continue;
        }
        let sa = antipode_key::<A>(a, memo);
        let mut term = Vect::zero();
        for (x, cx) in &sa.0 {
            term.add_scaled(&A::product_keys(x, b), cx);
        }
        out.add_scaled(&term, &(-c.clone()));
    }
    memo.insert(k.clone(), out.clone());
    out
}

/// Convolution `(S * id)(x)`; zero in positive degree when S is the antipode.
pub fn convolve_antipode_id<A: HopfAlg>(k: &A::Key) -> Vect<A::Key> {
    let mut out = Vect::zero();
    for ((a, b), c) in &A::coproduct_key(k).0 {
        let sa = antipode::<A>(&Vect::basis(a.clone()));
        for (x, cx) in &sa.0 {
            out.add_scaled(&A::product_keys(x, b), &(c.clone() * cx.clone()));
        }
    }
    out
}

/// Convolution `(id * S)(x)`.
pub fn convolve_id_antipode<A: HopfAlg>(k: &A::Key) -> Vect<A::Key> {
    let mut out = Vect::zero();
    for ((a, b), c) in &A::coproduct_key(k).0 {
        let sb = antipode::<A>(&Vect::basis(b.clone()));
        for (x, cx) in &sb.0 {
            out.add_scaled(&A::product_keys(a, x), &(c.clone() * cx.clone()));
        }
    }
    out
}
