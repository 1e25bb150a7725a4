use std::sync::OnceLock;

use itertools::Itertools;
use rand::Rng;
use serde::Serialize;

use super::action::{orbit_with_transversal, Action, OnPoints};
use super::{binomial, prime_power, Perm};
use crate::{Budget, Error, Result};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    rep_index: Vec<u32>,
    reps: Vec<Perm>,
    rep_inv: Vec<Perm>,
    /// Number of generators already checked for each orbit point.
    checked: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut rep_index = vec![NONE; degree];
        rep_index[base] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            rep_index,
            reps: vec![Perm::identity(degree)],
            rep_inv: vec![Perm::identity(degree)],
            checked: vec![0],
        }
    }

    /// Appends a generator and extends the orbit without disturbing the
    /// existing transversal.
    fn push_gen(&mut self, g: Perm) {
        self.gens.push(g);
        let newest = self.gens.len() - 1;
        let mut head = 0;
        let old_len = self.orbit.len();
        while head < self.orbit.len() {
            let x = self.orbit[head];
            let range = if head < old_len { newest..self.gens.len() } else { 0..self.gens.len() };
            for gi in range {
                let y = self.gens[gi].apply(x);
                if self.rep_index[y] == NONE {
                    self.rep_index[y] = self.orbit.len() as u32;
                    let r = self.reps[head].compose(&self.gens[gi]);
                    self.rep_inv.push(r.inverse());
                    self.reps.push(r);
                    self.orbit.push(y);
                    self.checked.push(0);
                }
            }
            head += 1;
        }
    }
}

/// Base and strong generating set built by deterministic Schreier–Sims.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain { degree, levels: Vec::new() }
    }

    /// Builds a chain whose base starts with `prefix`.
    pub fn build(degree: usize, gens: &[Perm], prefix: &[usize]) -> Self {
        let mut chain = StabChain::new(degree);
        for &b in prefix {
            chain.levels.push(Level::new(degree, b));
        }
        for g in gens {
            chain.insert(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Strong generators fixing the first `depth` base points.
    pub fn strong_gens(&self, depth: usize) -> Vec<Perm> {
        self.levels.get(depth).map(|l| l.gens.clone()).unwrap_or_default()
    }

    fn strip(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for l in start..self.levels.len() {
            let lev = &self.levels[l];
            let idx = lev.rep_index[h.apply(lev.base)];
            if idx == NONE {
                return (h, l);
            }
            h = h.compose(&lev.rep_inv[idx as usize]);
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Adds `g` to the group; returns whether the group grew.
    pub fn insert(&mut self, g: &Perm) -> bool {
        let (y, j) = self.strip(g, 0);
        if j == self.levels.len() && y.is_identity() {
            return false;
        }
        self.add_strong(y, 0, j);
        let mut i = j as isize;
        while i >= 0 {
            match self.find_nonsifting(i as usize) {
                Some((y, jj)) => {
                    self.add_strong(y, i as usize + 1, jj);
                    i = jj as isize;
                }
                None => i -= 1,
            }
        }
        true
    }

    fn add_strong(&mut self, y: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let b = y.first_moved().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, b));
        }
        for l in from..=to {
            self.levels[l].push_gen(y.clone());
        }
    }

    fn find_nonsifting(&mut self, i: usize) -> Option<(Perm, usize)> {
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            while self.levels[i].checked[k] < self.levels[i].gens.len() {
                let lev = &self.levels[i];
                let s = &lev.gens[lev.checked[k]];
                let img = s.apply(lev.orbit[k]);
                let h = lev.reps[k].compose(s).compose(&lev.rep_inv[lev.rep_index[img] as usize]);
                self.levels[i].checked[k] += 1;
                if h.is_identity() {
                    continue;
                }
                let (y, jj) = self.strip(&h, i + 1);
                if jj < self.levels.len() || !y.is_identity() {
                    return Some((y, jj));
                }
            }
            k += 1;
        }
        None
    }

    /// Element `r_{k-1} ⋯ r_0` for transversal indices `idx` (one per level).
    fn element(&self, idx: &[usize]) -> Perm {
        let mut g = Perm::identity(self.degree);
        for (l, &i) in idx.iter().enumerate().rev() {
            g = g.compose(&self.levels[l].reps[i]);
        }
        g
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        let idx: Vec<usize> = self.levels.iter().map(|l| rng.gen_range(0..l.orbit.len())).collect();
        self.element(&idx)
    }

    /// Visits every group element; stops early when `f` returns false.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm) -> bool) {
        let sizes = self.transversal_sizes();
        let mut idx = vec![0usize; sizes.len()];
        loop {
            if !f(&self.element(&idx)) {
                return;
            }
            let mut l = 0;
            loop {
                if l == sizes.len() {
                    return;
                }
                idx[l] += 1;
                if idx[l] < sizes[l] {
                    break;
                }
                idx[l] = 0;
                l += 1;
            }
        }
    }
}

/// A permutation group given by generators, with a lazily built chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl Serialize for PermGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PermGroup", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("generators", &self.gens)?;
        st.end()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup { degree, gens, chain: OnceLock::new() })
    }

    pub fn from_chain(chain: StabChain) -> Self {
        let gens = chain.strong_gens(0);
        let lock = OnceLock::new();
        let degree = chain.degree;
        let _ = lock.set(chain);
        PermGroup { degree, gens, chain: lock }
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: vec![], chain: OnceLock::new() }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_fn(n, |x| if x < 2 { 1 - x } else { x }));
        }
        if n >= 3 {
            gens.push(Perm::from_fn(n, |x| (x + 1) % n));
        }
        PermGroup::new(n, gens).expect("consistent degrees")
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n).map(|k| Perm::from_fn(n, |x| match x {
            0 => 1,
            1 => k,
            x if x == k => 0,
            x => x,
        }));
        PermGroup::new(n, gens.collect()).expect("consistent degrees")
    }

    pub fn cyclic(n: usize) -> Self {
        PermGroup::new(n, vec![Perm::from_fn(n, |x| (x + 1) % n)]).expect("consistent degrees")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::build(self.degree, &self.gens, &[]))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Point stabilizer; its generators are Schreier generators sifted into a
    /// chain with base starting at `pt`.
    pub fn stabilizer(&self, pt: usize) -> PermGroup {
        let full = StabChain::build(self.degree, &self.gens, &[pt]);
        let tail = StabChain { degree: self.degree, levels: full.levels[1..].to_vec() };
        PermGroup::from_chain(tail)
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, pts: &[usize]) -> PermGroup {
        let full = StabChain::build(self.degree, &self.gens, pts);
        let tail = StabChain { degree: self.degree, levels: full.levels[pts.len()..].to_vec() };
        PermGroup::from_chain(tail)
    }

    pub fn orbit(&self, pt: usize) -> Vec<usize> {
        super::orbit(&self.gens, &pt, &OnPoints)
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let o = self.orbit(x);
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// k-transitivity via the chain with base `0..k`: the stabilizer of the
    /// first `i` points must be transitive on the remaining `n - i`.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        let n = self.degree;
        if k > n {
            return Err(Error::InvalidParameter(format!("k={k} exceeds degree {n}")));
        }
        if k == 0 {
            return Ok(true);
        }
        let prefix: Vec<usize> = (0..k).collect();
        let chain = StabChain::build(n, &self.gens, &prefix);
        Ok((0..k).all(|i| chain.levels[i].orbit.len() == n - i))
    }

    /// Orbit of the ordered tuple `(0, .., k-1)` compared with the number of
    /// such tuples.
    pub fn is_k_transitive_by_orbit(&self, k: usize, budget: &Budget) -> Result<bool> {
        let n = self.degree as u64;
        let total: u64 = (0..k as u64).map(|i| n - i).product();
        if total > budget.orbit_points {
            return Err(Error::budget("k-tuple orbit", budget.orbit_points));
        }
        let seed: Vec<usize> = (0..k).collect();
        Ok(super::orbit(&self.gens, &seed, &super::OnTuples).len() as u64 == total)
    }

    /// Orbit of the k-subset `{0, .., k-1}` compared with `C(n, k)`.
    pub fn is_k_homogeneous(&self, k: usize, budget: &Budget) -> Result<bool> {
        let n = self.degree;
        if k > n {
            return Err(Error::InvalidParameter(format!("k={k} exceeds degree {n}")));
        }
        let total = binomial(n as u64, k as u64);
        if total > budget.orbit_points {
            return Err(Error::budget("k-subset orbit", budget.orbit_points));
        }
        if n <= 128 {
            // bitmask encoding avoids allocating a vector per subset
            let seed: u128 = (0..k).fold(0, |m, i| m | 1 << i);
            let maps: Vec<Vec<u128>> = self.gens.iter().map(|g| (0..n).map(|x| 1u128 << g.apply(x)).collect()).collect();
            let mut seen = std::collections::HashSet::from([seed]);
            let mut stack = vec![seed];
            while let Some(m) = stack.pop() {
                for map in &maps {
                    let mut img = 0u128;
                    let mut bits = m;
                    while bits != 0 {
                        let x = bits.trailing_zeros() as usize;
                        img |= map[x];
                        bits &= bits - 1;
                    }
                    if seen.insert(img) {
                        stack.push(img);
                    }
                }
            }
            return Ok(seen.len() as u64 == total);
        }
        let seed: Vec<usize> = (0..k).collect();
        Ok(super::orbit(&self.gens, &seed, &super::OnSets).len() as u64 == total)
    }

    /// All elements, refusing groups above the budget.
    pub fn elements(&self, budget: &Budget) -> Result<Vec<Perm>> {
        if self.order() > budget.group_elements as u128 {
            return Err(Error::budget("group enumeration", budget.group_elements));
        }
        let mut out = Vec::with_capacity(self.order() as usize);
        self.chain().for_each_element(|g| {
            out.push(g.clone());
            true
        });
        Ok(out)
    }

    /// Order by closing the generators under multiplication; `None` once more
    /// than `limit` elements are seen.
    pub fn brute_force_order(&self, limit: usize) -> Option<usize> {
        let id = Perm::identity(self.degree);
        let mut seen = std::collections::HashSet::from([id.clone()]);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for g in &self.gens {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    queue.push(y);
                }
            }
        }
        Some(seen.len())
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Perm {
        self.chain().random_element(rng)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    /// `self` normalizes `n`: every conjugate of a generator of `n` by a
    /// generator of `self` lies in `n`.
    pub fn normalizes(&self, n: &PermGroup) -> bool {
        self.gens.iter().all(|g| n.gens.iter().all(|x| n.contains(&x.conjugate_by(g))))
    }

    pub fn is_normal_subgroup(&self, n: &PermGroup) -> bool {
        n.is_subgroup_of(self) && self.normalizes(n)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().tuple_combinations().all(|(a, b)| a.compose(b) == b.compose(a))
    }

    /// Smallest normal subgroup of `self` containing `elts`.
    pub fn normal_closure(&self, elts: &[Perm]) -> PermGroup {
        let mut chain = StabChain::new(self.degree);
        let mut gens: Vec<Perm> = Vec::new();
        let mut queue: Vec<Perm> = elts.to_vec();
        while let Some(x) = queue.pop() {
            if chain.insert(&x) {
                gens.push(x.clone());
                for g in &self.gens {
                    queue.push(x.conjugate_by(g));
                }
            }
        }
        let mut out = PermGroup::new(self.degree, gens).expect("consistent degrees");
        out.chain = OnceLock::from(chain);
        out
    }

    /// The group generated by the generators of both.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        PermGroup::new(self.degree, gens).expect("consistent degrees")
    }

    /// Image of the group under a map on generators; `f` must be a
    /// homomorphism into the target degree.
    pub fn map_gens(&self, degree: usize, f: impl Fn(&Perm) -> Perm) -> PermGroup {
        PermGroup::new(degree, self.gens.iter().map(f).collect()).expect("consistent degrees")
    }
}

/// Stabilizer of `seed` under an arbitrary action: orbit with transversal,
/// then Schreier generators inserted until the order reaches
/// `|G| / |orbit|`. Returns the stabilizer and the orbit length.
pub fn stabilizer_under<A: Action>(
    group: &PermGroup,
    seed: &A::Point,
    action: &A,
    budget: &Budget,
) -> Result<(PermGroup, usize)> {
    let (pts, reps, index) =
        orbit_with_transversal(group.gens(), group.degree(), seed, action, budget.orbit_points)
            .ok_or_else(|| Error::budget("stabilizer orbit", budget.orbit_points))?;
    let order = group.order();
    let target = order / pts.len() as u128;
    if target * pts.len() as u128 != order {
        return Err(Error::Contradiction("orbit length does not divide group order".into()));
    }
    let mut chain = StabChain::new(group.degree());
    'outer: for (k, x) in pts.iter().enumerate() {
        for g in group.gens() {
            if chain.order() == target {
                break 'outer;
            }
            let y = action.act(x, g);
            let j = index[&y];
            let h = reps[k].compose(g).compose(&reps[j].inverse());
            chain.insert(&h);
        }
    }
    if chain.order() != target {
        return Err(Error::Contradiction("Schreier generators do not reach the stabilizer order".into()));
    }
    Ok((PermGroup::from_chain(chain), pts.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoTransitiveType {
    Affine,
    AlmostSimple,
}

/// Splits a 2-transitive group by the existence of a regular elementary
/// abelian normal subgroup, searched as normal closures of fixed-point-free
/// elements of prime order p where the degree is a power of p.
pub fn two_transitive_type(g: &PermGroup, budget: &Budget) -> Result<TwoTransitiveType> {
    if !g.is_k_transitive(2)? {
        return Err(Error::Precondition("group is not 2-transitive".into()));
    }
    let n = g.degree();
    let Some((p, _)) = prime_power(n as u64) else {
        return Ok(TwoTransitiveType::AlmostSimple);
    };
    if g.order() > budget.group_elements as u128 {
        return Err(Error::budget("two_transitive_type enumeration", budget.group_elements));
    }
    let mut found = None;
    let mut tried: Vec<PermGroup> = Vec::new();
    g.chain().for_each_element(|x| {
        if x.is_identity() || x.support_size() != n || !x.pow(p).is_identity() {
            return true;
        }
        if tried.iter().any(|t| t.contains(x)) {
            return true;
        }
        let closure = g.normal_closure(std::slice::from_ref(x));
        let regular = closure.order() == n as u128 && closure.is_transitive();
        let elementary = closure.gens().iter().all(|y| y.pow(p).is_identity());
        if regular && elementary && closure.is_abelian() {
            found = Some(closure);
            return false;
        }
        tried.push(closure);
        true
    });
    Ok(if found.is_some() { TwoTransitiveType::Affine } else { TwoTransitiveType::AlmostSimple })
}

/// `N_{Sym(n)}(T)`. Exhaustive over `Sym(n)` up to the budgeted degree;
/// otherwise `candidates` are verified to normalize `T` and generate the
/// result.
pub fn normalizer_in_sym(t: &PermGroup, candidates: Option<&[Perm]>, budget: &Budget) -> Result<PermGroup> {
    let n = t.degree();
    if let Some(c) = candidates {
        for g in c {
            if !t.gens().iter().all(|x| t.contains(&x.conjugate_by(g))) {
                return Err(Error::Precondition(format!("{g} does not normalize T")));
            }
        }
        return PermGroup::new(n, c.to_vec());
    }
    if n > budget.normalizer_degree {
        return Err(Error::budget("exhaustive normalizer degree", budget.normalizer_degree as u64));
    }
    let mut chain = StabChain::new(n);
    let mut gens = Vec::new();
    for images in (0..n as u32).permutations(n) {
        let g = Perm::from_images(images).expect("permutation");
        if chain.contains(&g) {
            continue;
        }
        if t.gens().iter().all(|x| t.contains(&x.conjugate_by(&g))) {
            chain.insert(&g);
            gens.push(g);
        }
    }
    let mut out = PermGroup::new(n, gens)?;
    out.chain = OnceLock::from(chain);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Perm {
        Perm::from_cycles(n, s).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        for n in 1..=7 {
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(PermGroup::symmetric(n).order(), fact);
            assert_eq!(PermGroup::alternating(n).order(), if n >= 2 { fact / 2 } else { 1 });
        }
        let s4 = PermGroup::new(4, vec![p(4, "(0 1)"), p(4, "(0 1 2 3)")]).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.brute_force_order(100), Some(24));
        assert_eq!(PermGroup::trivial(5).order(), 1);
    }

    #[test]
    fn stabilizers() {
        let c5 = PermGroup::cyclic(5);
        assert_eq!(c5.stabilizer(0).order(), 1);
        let s5 = PermGroup::symmetric(5);
        let st = s5.stabilizer(3);
        assert_eq!(st.order(), 24);
        assert!(st.gens().iter().all(|g| g.apply(3) == 3));
    }

    #[test]
    fn transitivity_predicates() {
        let b = Budget::default();
        let s5 = PermGroup::symmetric(5);
        assert!(s5.is_k_transitive(3).unwrap());
        assert!(s5.is_k_homogeneous(3, &b).unwrap());
        let c7 = PermGroup::cyclic(7);
        assert!(!c7.is_k_homogeneous(2, &b).unwrap());
        // Frobenius group of order 21: 7-cycle and x -> 2x (cubing map on the
        // multiplicative group has order 3; x -> 2x has order 3 mod 7)
        let f21 = PermGroup::new(7, vec![Perm::from_fn(7, |x| (x + 1) % 7), Perm::from_fn(7, |x| 2 * x % 7)]).unwrap();
        assert_eq!(f21.order(), 21);
        assert!(f21.is_k_homogeneous(2, &b).unwrap());
        assert!(!f21.is_k_transitive(2).unwrap());
        assert!(!f21.is_k_transitive_by_orbit(2, &b).unwrap());
    }

    fn agl1(pr: usize) -> PermGroup {
        let g = (2..pr).find(|&g| (1..pr - 1).all(|k| (0..k).fold(1, |a, _| a * g % pr) != 1)).unwrap();
        PermGroup::new(pr, vec![Perm::from_fn(pr, |x| (x + 1) % pr), Perm::from_fn(pr, |x| x * g % pr)]).unwrap()
    }

    #[test]
    fn affine_versus_almost_simple() {
        let b = Budget::default();
        assert_eq!(two_transitive_type(&agl1(5), &b).unwrap(), TwoTransitiveType::Affine);
        assert_eq!(two_transitive_type(&PermGroup::symmetric(5), &b).unwrap(), TwoTransitiveType::AlmostSimple);
        assert_eq!(two_transitive_type(&PermGroup::symmetric(2), &b).unwrap(), TwoTransitiveType::Affine);
        assert_eq!(two_transitive_type(&PermGroup::symmetric(4), &b).unwrap(), TwoTransitiveType::Affine);
        assert_eq!(two_transitive_type(&PermGroup::symmetric(3), &b).unwrap(), TwoTransitiveType::Affine);
        assert_eq!(two_transitive_type(&PermGroup::alternating(6), &b).unwrap(), TwoTransitiveType::AlmostSimple);
        assert!(two_transitive_type(&PermGroup::cyclic(5), &b).is_err());
    }

    #[test]
    fn normalizers() {
        let b = Budget::default();
        let c4 = PermGroup::new(4, vec![p(4, "(0 1 2 3)")]).unwrap();
        let n = normalizer_in_sym(&c4, None, &b).unwrap();
        assert_eq!(n.order(), 8);
        assert!(!n.is_k_transitive(2).unwrap());
        let v4 = PermGroup::new(4, vec![p(4, "(0 1)(2 3)"), p(4, "(0 2)(1 3)")]).unwrap();
        assert_eq!(normalizer_in_sym(&v4, None, &b).unwrap().order(), 24);
        assert_eq!(normalizer_in_sym(&PermGroup::trivial(5), None, &b).unwrap().order(), 120);
        assert!(normalizer_in_sym(&PermGroup::trivial(9), None, &b).is_err());
        let bad = [p(4, "(0 1)")];
        assert!(normalizer_in_sym(&c4, Some(&bad), &b).is_err());
    }

    #[test]
    fn normal_closure_and_elements() {
        let s4 = PermGroup::symmetric(4);
        let nc = s4.normal_closure(&[p(4, "(0 1)(2 3)")]);
        assert_eq!(nc.order(), 4);
        assert!(s4.is_normal_subgroup(&nc));
        let elts = s4.elements(&Budget::default()).unwrap();
        let set: std::collections::HashSet<_> = elts.iter().cloned().collect();
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn stabilizer_under_set_action() {
        let s6 = PermGroup::symmetric(6);
        let (st, len) = stabilizer_under(&s6, &vec![0usize, 1], &super::super::OnSets, &Budget::default()).unwrap();
        assert_eq!(len, 15);
        assert_eq!(st.order(), 48);
    }
}
