use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{invalid, Result};
use crate::maps;
use crate::perm::Permutation;
use crate::subset::Subset;
use crate::tree::Tree;

/// The three poset families: weak order on S_n, Tamari order on Y_n, and
/// the Boolean lattice of subsets of [n-1].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    Weak,
    Tamari,
    Boolean,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Weak => "weak",
            Family::Tamari => "tamari",
            Family::Boolean => "boolean",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "weak" => Ok(Family::Weak),
            "tamari" => Ok(Family::Tamari),
            "boolean" => Ok(Family::Boolean),
            _ => Err(invalid(format!("unknown poset family \"{s}\""))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Element {
    Perm(Permutation),
    Tree(Tree),
    Set(Subset),
}

impl Element {
    pub fn key(&self) -> String {
        match self {
            Element::Perm(p) => crate::lit::perm_literal(p),
            Element::Tree(t) => t.to_string(),
            Element::Set(s) => crate::lit::subset_literal(s),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Poset {
    pub family: Family,
    pub n: usize,
}

impl Poset {
    pub fn new(family: Family, n: usize) -> Poset {
        Poset { family, n }
    }

    pub fn elements(&self) -> Vec<Element> {
        match self.family {
            Family::Weak => Permutation::all(self.n).into_iter().map(Element::Perm).collect(),
            Family::Tamari => Tree::all(self.n).into_iter().map(Element::Tree).collect(),
            Family::Boolean => Subset::all(self.n.saturating_sub(1))
                .into_iter()
                .map(Element::Set)
                .collect(),
        }
    }

    pub fn minimum(&self) -> Element {
        match self.family {
            Family::Weak => Element::Perm(Permutation::identity(self.n)),
            Family::Tamari => Element::Tree(Tree::comb(self.n)),
            Family::Boolean => Element::Set(Subset::empty(self.n.saturating_sub(1))),
        }
    }

    pub fn maximum(&self) -> Element {
        match self.family {
            Family::Weak => Element::Perm(Permutation::longest(self.n)),
            Family::Tamari => {
                Element::Tree(maps::lambda(&Permutation::longest(self.n)))
            }
            Family::Boolean => Element::Set(Subset::full(self.n.saturating_sub(1))),
        }
    }

    fn check(&self, x: &Element) -> Result<()> {
        let ok = match (self.family, x) {
            (Family::Weak, Element::Perm(p)) => p.degree() == self.n,
            (Family::Tamari, Element::Tree(t)) => t.degree() == self.n,
            (Family::Boolean, Element::Set(s)) => s.ambient() == self.n.saturating_sub(1),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!(
                "element {} does not belong to {}({})",
                x.key(),
                self.family.name(),
                self.n
            )))
        }
    }

    pub fn leq(&self, x: &Element, y: &Element) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.leq_unchecked(x, y))
    }

    fn leq_unchecked(&self, x: &Element, y: &Element) -> bool {
        match (x, y) {
            (Element::Perm(a), Element::Perm(b)) => a.weak_leq(b),
            (Element::Tree(a), Element::Tree(b)) => {
                maps::gamma(a).weak_leq(&maps::gamma(b))
            }
            (Element::Set(a), Element::Set(b)) => a.is_subset_of(b),
            _ => unreachable!(),
        }
    }

    pub fn rank(&self, x: &Element) -> usize {
        match x {
            Element::Perm(p) => p.inversions().len(),
            Element::Tree(t) => maps::gamma(t).inversions().len(),
            Element::Set(s) => s.len(),
        }
    }

    /// Elements covering `x`.
    pub fn covers(&self, x: &Element) -> Result<Vec<Element>> {
        self.check(x)?;
        let mut out = match x {
            Element::Perm(p) => perm_covers_up(p).into_iter().map(Element::Perm).collect(),
            Element::Tree(t) => {
                t.tamari_covers_up().into_iter().map(Element::Tree).collect()
            }
            Element::Set(s) => {
                let mut v = Vec::new();
                for m in s.complement().members() {
                    let mut bigger = *s;
                    bigger.insert(m);
                    v.push(Element::Set(bigger));
                }
                v
            }
        };
        out.sort_by_key(Element::key);
        out.dedup();
        Ok(out)
    }

    /// The interval `[x, y]`, materialized by upward BFS from `x` filtered
    /// by `<= y`, sorted by key.
    pub fn interval(&self, x: &Element, y: &Element) -> Result<Vec<Element>> {
        if !self.leq(x, y)? {
            return Ok(vec![]);
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![x.clone()];
        seen.insert(x.clone());
        while let Some(z) = queue.pop() {
            for c in self.covers(&z)? {
                if self.leq_unchecked(&c, y) && seen.insert(c.clone()) {
                    queue.push(c);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// The Moebius function of the interval `[x, y]`.
    pub fn moebius(&self, x: &Element, y: &Element) -> Result<i64> {
        if !self.leq(x, y)? {
            return Err(invalid(format!("{} is not below {}", x.key(), y.key())));
        }
        Ok(*self.mobius_row(x).get(&y.key()).expect("row covers the up-set"))
    }

    /// All values `mu(x, y)` for `y >= x`, keyed by `y.key()`, computed in
    /// one rank-ordered pass and memoized.
    pub fn mobius_row(&self, x: &Element) -> Arc<HashMap<String, i64>> {
        let cache_key = CacheKey {
            family: self.family,
            n: self.n,
            col: false,
            base: x.key(),
        };
        if let Some(row) = cache_get(&cache_key) {
            return row;
        }
        let mut ups: Vec<Element> = self
            .elements()
            .into_iter()
            .filter(|z| self.leq_unchecked(x, z))
            .collect();
        ups.sort_by_key(|z| self.rank(z));
        let row = Arc::new(self.recurse(&ups));
        cache_put(cache_key, row.clone());
        row
    }

    /// All values `mu(v, w)` for `v <= w`, keyed by `v.key()`.
    pub fn mobius_column(&self, w: &Element) -> Arc<HashMap<String, i64>> {
        let cache_key = CacheKey {
            family: self.family,
            n: self.n,
            col: true,
            base: w.key(),
        };
        if let Some(col) = cache_get(&cache_key) {
            return col;
        }
        let mut downs: Vec<Element> = self
            .elements()
            .into_iter()
            .filter(|z| self.leq_unchecked(z, w))
            .collect();
        downs.sort_by_key(|z| self.rank(z));
        downs.reverse();
        // column recursion mu(v, w) = -sum_{v < z <= w} mu(z, w), with the
        // comparison direction flipped relative to the row pass
        let col = Arc::new(self.recurse_rev(&downs));
        cache_put(cache_key, col.clone());
        col
    }

    fn recurse(&self, chainable: &[Element]) -> HashMap<String, i64> {
        let mut mu = vec![0i64; chainable.len()];
        for i in 0..chainable.len() {
            if i == 0 {
                mu[0] = 1;
                continue;
            }
            let mut s = 0;
            for j in 0..i {
                if self.leq_unchecked(&chainable[j], &chainable[i]) {
                    s += mu[j];
                }
            }
            mu[i] = -s;
        }
        chainable.iter().map(Element::key).zip(mu).collect()
    }

    fn recurse_rev(&self, chainable: &[Element]) -> HashMap<String, i64> {
        let mut mu = vec![0i64; chainable.len()];
        for i in 0..chainable.len() {
            if i == 0 {
                mu[0] = 1;
                continue;
            }
            let mut s = 0;
            for j in 0..i {
                if self.leq_unchecked(&chainable[i], &chainable[j]) {
                    s += mu[j];
                }
            }
            mu[i] = -s;
        }
        chainable.iter().map(Element::key).zip(mu).collect()
    }
}

fn perm_covers_up(p: &Permutation) -> Vec<Permutation> {
    let n = p.degree();
    let inv = p.inverse();
    let mut out = Vec::new();
    for v in 1..n {
        // transposing the values v and v+1 adds one inversion when v+1 sits
        // to the right of v
        if inv.at(v) < inv.at(v + 1) {
            let mut word = p.word().to_vec();
            word.swap(inv.at(v) - 1, inv.at(v + 1) - 1);
            out.push(Permutation::from_word(word).unwrap());
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct CacheKey {
    family: Family,
    n: usize,
    col: bool,
    base: String,
}

static MOBIUS_CACHE: Lazy<Mutex<HashMap<CacheKey, Arc<HashMap<String, i64>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static CACHE_BUDGET: AtomicUsize = AtomicUsize::new(4_000_000);
static CACHE_ENTRIES: AtomicUsize = AtomicUsize::new(0);

pub fn set_mobius_cache_budget(entries: usize) {
    CACHE_BUDGET.store(entries, Ordering::Relaxed);
}

fn cache_get(key: &CacheKey) -> Option<Arc<HashMap<String, i64>>> {
    MOBIUS_CACHE.lock().unwrap().get(key).cloned()
}

fn cache_put(key: CacheKey, value: Arc<HashMap<String, i64>>) {
    let added = value.len();
    if CACHE_ENTRIES.load(Ordering::Relaxed) + added > CACHE_BUDGET.load(Ordering::Relaxed) {
        return;
    }
    let mut guard = MOBIUS_CACHE.lock().unwrap();
    if guard.insert(key, value).is_none() {
        CACHE_ENTRIES.fetch_add(added, Ordering::Relaxed);
    }
}

/// Serialize the Moebius memo as sorted "key TAB value" lines.
pub fn save_mobius_cache(dir: &std::path::Path) -> std::io::Result<()> {
    let guard = MOBIUS_CACHE.lock().unwrap();
    let mut lines = Vec::new();
    for (k, row) in guard.iter() {
        let kind = if k.col { "col" } else { "row" };
        for (other, mu) in row.iter() {
            lines.push(format!(
                "{} {} {} {} {}\t{}",
                k.family.name(),
                k.n,
                kind,
                k.base,
                other,
                mu
            ));
        }
    }
    lines.sort();
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("mobius.tsv"), lines.join("\n") + "\n")
}

pub fn load_mobius_cache(dir: &std::path::Path) -> std::io::Result<()> {
    let path = dir.join("mobius.tsv");
    if !path.exists() {
        return Ok(());
    }
    let text = std::fs::read_to_string(path)?;
    let mut rows: HashMap<CacheKey, HashMap<String, i64>> = HashMap::new();
    for line in text.lines() {
        let Some((head, mu)) = line.rsplit_once('\t') else { continue };
        let parts: Vec<&str> = head.splitn(5, ' ').collect();
        if parts.len() != 5 {
            continue;
        }
        let (Ok(family), Ok(n), Ok(mu)) =
            (Family::parse(parts[0]), parts[1].parse::<usize>(), mu.parse::<i64>())
        else {
            continue;
        };
        let key = CacheKey { family, n, col: parts[2] == "col", base: parts[3].to_string() };
        rows.entry(key).or_default().insert(parts[4].to_string(), mu);
    }
    for (k, v) in rows {
        cache_put(k, Arc::new(v));
    }
    Ok(())
}

/// The nine named poset maps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapName {
    Lambda,
    Gamma,
    GammaMin,
    Rho,
    Des,
    GDes,
    Z,
    C,
    L,
    R,
}

impl MapName {
    pub fn parse(s: &str) -> Result<MapName> {
        Ok(match s {
            "lambda" => MapName::Lambda,
            "gamma" => MapName::Gamma,
            "gamma-min" => MapName::GammaMin,
            "rho" => MapName::Rho,
            "des" => MapName::Des,
            "gdes" => MapName::GDes,
            "z" => MapName::Z,
            "c" => MapName::C,
            "l" => MapName::L,
            "r" => MapName::R,
            _ => return Err(invalid(format!("unknown map \"{s}\""))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            MapName::Lambda => "lambda",
            MapName::Gamma => "gamma",
            MapName::GammaMin => "gamma-min",
            MapName::Rho => "rho",
            MapName::Des => "des",
            MapName::GDes => "gdes",
            MapName::Z => "z",
            MapName::C => "c",
            MapName::L => "l",
            MapName::R => "r",
        }
    }

    pub fn source(&self, n: usize) -> Poset {
        let family = match self {
            MapName::Lambda | MapName::Rho | MapName::Des | MapName::GDes => Family::Weak,
            MapName::Gamma | MapName::GammaMin | MapName::L | MapName::R => Family::Tamari,
            MapName::Z | MapName::C => Family::Boolean,
        };
        Poset::new(family, n)
    }

    pub fn target(&self, n: usize) -> Poset {
        let family = match self {
            MapName::Lambda | MapName::Rho | MapName::C => Family::Tamari,
            MapName::Gamma | MapName::GammaMin | MapName::Z => Family::Weak,
            MapName::Des | MapName::GDes | MapName::L | MapName::R => Family::Boolean,
        };
        Poset::new(family, n)
    }

    pub fn apply(&self, x: &Element, n: usize) -> Result<Element> {
        self.source(n).check(x)?;
        Ok(match (self, x) {
            (MapName::Lambda, Element::Perm(p)) => Element::Tree(maps::lambda(p)),
            (MapName::Rho, Element::Perm(p)) => Element::Tree(maps::rho(p)),
            (MapName::Des, Element::Perm(p)) => Element::Set(p.descents()),
            (MapName::GDes, Element::Perm(p)) => Element::Set(p.global_descents()),
            (MapName::Gamma, Element::Tree(t)) => Element::Perm(maps::gamma(t)),
            (MapName::GammaMin, Element::Tree(t)) => Element::Perm(maps::gamma_min(t)),
            (MapName::L, Element::Tree(t)) => Element::Set(t.left_leaf_set()),
            (MapName::R, Element::Tree(t)) => Element::Set(t.right_branch_set()),
            (MapName::Z, Element::Set(s)) => Element::Perm(maps::z_map(s, n)?),
            (MapName::C, Element::Set(s)) => Element::Tree(maps::c_map(s, n)?),
            _ => unreachable!(),
        })
    }
}

/// Outcome of an exhaustive order check, carrying the first counterexample
/// in key order when the check fails.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub ok: bool,
    pub counterexample: Option<(String, String)>,
}

impl CheckReport {
    fn pass() -> CheckReport {
        CheckReport { ok: true, counterexample: None }
    }

    fn fail(a: String, b: String) -> CheckReport {
        CheckReport { ok: false, counterexample: Some((a, b)) }
    }
}

pub fn check_order_preserving(f: MapName, n: usize) -> Result<CheckReport> {
    let src = f.source(n);
    let elems = src.elements();
    for x in &elems {
        for y in &elems {
            if src.leq_unchecked(x, y) {
                let fx = f.apply(x, n)?;
                let fy = f.apply(y, n)?;
                if !f.target(n).leq_unchecked(&fx, &fy) {
                    return Ok(CheckReport::fail(x.key(), y.key()));
                }
            }
        }
    }
    Ok(CheckReport::pass())
}

/// Verify `f(x) <= y  <=>  x <= g(y)` over all pairs at rank `n`.
pub fn check_galois(f: MapName, g: MapName, n: usize) -> Result<CheckReport> {
    let p = f.source(n);
    let q = f.target(n);
    if g.source(n) != q || g.target(n) != p {
        return Err(invalid("maps do not have adjoint-compatible signatures"));
    }
    for x in p.elements() {
        let fx = f.apply(&x, n)?;
        for y in q.elements() {
            let lhs = q.leq_unchecked(&fx, &y);
            let rhs = p.leq_unchecked(&x, &g.apply(&y, n)?);
            if lhs != rhs {
                return Ok(CheckReport::fail(x.key(), y.key()));
            }
        }
    }
    Ok(CheckReport::pass())
}

/// The Moebius-function transfer identity across a Galois connection:
/// for all `x` in the source and `w` in the target,
/// `sum_{y >= x, f(y) = w} mu(x, y)  =  sum_{v <= w, g(v) = x} mu(v, w)`.
pub fn rota_transfer_check(f: MapName, g: MapName, n: usize) -> Result<CheckReport> {
    let p = f.source(n);
    let q = f.target(n);
    if g.source(n) != q || g.target(n) != p {
        return Err(invalid("maps do not have adjoint-compatible signatures"));
    }
    let mut lhs: HashMap<(String, String), i64> = HashMap::new();
    for x in p.elements() {
        let row = p.mobius_row(&x);
        for y in p.elements() {
            if let Some(&mu) = row.get(&y.key()) {
                let w = f.apply(&y, n)?;
                *lhs.entry((x.key(), w.key())).or_insert(0) += mu;
            }
        }
    }
    let mut rhs: HashMap<(String, String), i64> = HashMap::new();
    for w in q.elements() {
        let col = q.mobius_column(&w);
        for v in q.elements() {
            if let Some(&mu) = col.get(&v.key()) {
                let x = g.apply(&v, n)?;
                *rhs.entry((x.key(), w.key())).or_insert(0) += mu;
            }
        }
    }
    let mut keys: Vec<(String, String)> = lhs.keys().chain(rhs.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    for k in keys {
        if lhs.get(&k).copied().unwrap_or(0) != rhs.get(&k).copied().unwrap_or(0) {
            return Ok(CheckReport::fail(k.0, k.1));
        }
    }
    Ok(CheckReport::pass())
}

/// The six adjoint pairs.
pub const GALOIS_PAIRS: [(MapName, MapName); 6] = [
    (MapName::Lambda, MapName::Gamma),
    (MapName::Gamma, MapName::Rho),
    (MapName::Des, MapName::Z),
    (MapName::Z, MapName::GDes),
    (MapName::L, MapName::C),
    (MapName::C, MapName::R),
];

pub const ALL_MAPS: [MapName; 10] = [
    MapName::Lambda,
    MapName::Gamma,
    MapName::GammaMin,
    MapName::Rho,
    MapName::Des,
    MapName::GDes,
    MapName::Z,
    MapName::C,
    MapName::L,
    MapName::R,
];
