//! Threshold spreading: hulls, dynamic monopolies and the exhaustive
//! minimum-monopoly search.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexFn};
use crate::par::{self, Exec};

/// Default vertex limit for [`dyn_bruteforce`].
pub const DYN_SIZE_LIMIT: usize = 20;

/// A subset of `0..n`, iterated in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    member: Vec<bool>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { member: vec![false; n] }
    }

    pub fn full(n: usize) -> Self {
        VertexSet { member: vec![true; n] }
    }

    /// Panics if a vertex is outside `0..n`.
    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        Self::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.member.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.member.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        !std::mem::replace(&mut self.member[v], true)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        std::mem::replace(&mut self.member[v], false)
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.member.contains(&true)
    }

    pub fn is_full(&self) -> bool {
        self.member.iter().all(|&b| b)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.member.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// The hull of `seed` in `(g, tau)`: the least superset of `seed` closed
/// under "u joins once at least `tau(u)` of its neighbours are in".
///
/// Worklist propagation with per-vertex counters, `O(n + m)`.
pub fn compute_hull(g: &Graph, tau: &VertexFn, seed: &VertexSet) -> VertexSet {
    let n = g.n();
    assert_eq!(tau.len(), n, "threshold function length");
    let mut active = VertexSet::empty(n);
    let mut queue = Vec::new();
    for u in 0..n {
        if seed.contains(u) || tau[u] <= 0 {
            active.insert(u);
            queue.push(u);
        }
    }
    let mut hits = vec![0i64; n];
    while let Some(u) = queue.pop() {
        for &v in g.neighbors(u) {
            if active.contains(v) {
                continue;
            }
            hits[v] += 1;
            if hits[v] >= tau[v] {
                active.insert(v);
                queue.push(v);
            }
        }
    }
    active
}

/// The hull computed by repeated sweeps over the vertices in `order`
/// until nothing changes. Independent of [`compute_hull`]; used to check
/// that the closure does not depend on processing order.
pub fn compute_hull_in_order(g: &Graph, tau: &VertexFn, seed: &VertexSet, order: &[usize]) -> VertexSet {
    let mut active = seed.clone();
    loop {
        let mut changed = false;
        for &u in order {
            if active.contains(u) {
                continue;
            }
            let inside = g.neighbors(u).iter().filter(|&&v| active.contains(v)).count() as i64;
            if inside >= tau[u] {
                active.insert(u);
                changed = true;
            }
        }
        if !changed {
            return active;
        }
    }
}

pub fn is_dynamic_monopoly(g: &Graph, tau: &VertexFn, seed: &VertexSet) -> bool {
    compute_hull(g, tau, seed).is_full()
}

/// Bitmask view of a small instance, used by the exhaustive searches.
pub(crate) struct MaskInstance {
    nbr: Vec<u64>,
    tau: Vec<i64>,
    full: u64,
    auto: u64,
}

impl MaskInstance {
    pub(crate) fn new(g: &Graph, tau: &VertexFn) -> Self {
        let n = g.n();
        debug_assert!(n < 64);
        let nbr = (0..n).map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let auto = (0..n).filter(|&u| tau[u] <= 0).fold(0u64, |m, u| m | 1 << u);
        MaskInstance { nbr, tau: tau.values().to_vec(), full: low_bits(n), auto }
    }

    pub(crate) fn hull(&self, seed: u64) -> u64 {
        let mut active = seed | self.auto;
        loop {
            let before = active;
            let mut rest = self.full & !active;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (self.nbr[u] & active).count_ones() as i64 >= self.tau[u] {
                    active |= 1 << u;
                }
            }
            if active == before {
                return active;
            }
        }
    }

    pub(crate) fn is_monopoly(&self, seed: u64) -> bool {
        self.hull(seed) == self.full
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All `k`-element subsets of `0..len` as bitmasks, in increasing numeric
/// order (Gosper's hack).
pub(crate) fn k_subsets(len: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(len < 64);
    let limit = 1u64 << len;
    let first = if k > len { None } else { Some(low_bits(k)) };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        let next = (((r ^ x) >> 2) / c) | r;
        (next < limit).then_some(next)
    })
}

/// Spreads the bits of `compact` onto the positions listed in `slots`.
pub(crate) fn expand(compact: u64, slots: &[usize]) -> u64 {
    slots.iter().enumerate().filter(|(i, _)| compact >> i & 1 == 1).fold(0, |m, (_, &s)| m | 1 << s)
}

/// `dyn(g, tau)` by exhaustive search.
pub fn dyn_bruteforce(g: &Graph, tau: &VertexFn, size_limit: usize) -> Result<usize> {
    dyn_bruteforce_with(Exec::default(), g, tau, size_limit)
}

pub fn dyn_bruteforce_with(exec: Exec, g: &Graph, tau: &VertexFn, size_limit: usize) -> Result<usize> {
    min_dynamic_monopoly_with(exec, g, tau, size_limit).map(|d| d.len())
}

/// A minimum dynamic monopoly, by exhaustive search.
///
/// Vertices with `tau(u) > d(u)` can never be activated by neighbours and
/// are put into every candidate. The remaining vertices are searched by
/// ascending cardinality; within a cardinality the first monopoly in
/// increasing bitmask order is returned.
pub fn min_dynamic_monopoly(g: &Graph, tau: &VertexFn, size_limit: usize) -> Result<VertexSet> {
    min_dynamic_monopoly_with(Exec::default(), g, tau, size_limit)
}

pub fn min_dynamic_monopoly_with(exec: Exec, g: &Graph, tau: &VertexFn, size_limit: usize) -> Result<VertexSet> {
    let n = g.n();
    if n > size_limit || n >= 64 {
        return Err(Error::InstanceTooLarge { n, limit: size_limit.min(63) });
    }
    tau.check_len(n)?;
    let inst = MaskInstance::new(g, tau);
    let forced = (0..n).filter(|&u| tau[u] > g.degree(u) as i64).fold(0u64, |m, u| m | 1 << u);
    let free: Vec<usize> = (0..n).filter(|&u| forced >> u & 1 == 0).collect();
    for k in 0..=free.len() {
        let found = if exec.is_parallel() && free.len() >= 12 {
            let candidates: Vec<u64> = k_subsets(free.len(), k).collect();
            par::find_first(exec, &candidates, |&s| inst.is_monopoly(forced | expand(s, &free))).copied()
        } else {
            k_subsets(free.len(), k).find(|&s| inst.is_monopoly(forced | expand(s, &free)))
        };
        if let Some(s) = found {
            return Ok(VertexSet::from_mask(n, forced | expand(s, &free)));
        }
    }
    unreachable!("the full vertex set is always a dynamic monopoly")
}

/// `sum_u tau(u) / (d(u) + 1)` as an exact rational; an upper bound on
/// `dyn(g, tau)` whenever `0 <= tau <= d`.
pub fn ackerman_bound(g: &Graph, tau: &VertexFn) -> Result<Ratio<i64>> {
    tau.check_len(g.n())?;
    let mut total = Ratio::from_integer(0);
    for u in 0..g.n() {
        let degree = g.degree(u);
        if tau[u] < 0 || tau[u] > degree as i64 {
            return Err(Error::ThresholdOutOfRange { vertex: u, value: tau[u], degree });
        }
        total += Ratio::new(tau[u], degree as i64 + 1);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn hull_chain_reaction() {
        let h = compute_hull(&p3(), &VertexFn::constant(3, 1), &set(3, &[0]));
        assert_eq!(h.to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn hull_zero_thresholds() {
        let h = compute_hull(&c4(), &VertexFn::zeros(4), &VertexSet::empty(4));
        assert!(h.is_full());
    }

    #[test]
    fn hull_blocked() {
        let tau = VertexFn::new(vec![1, 2, 1]);
        assert_eq!(compute_hull(&p3(), &tau, &set(3, &[0])).to_vec(), vec![0]);
    }

    #[test]
    fn monopoly_examples() {
        let g = p3();
        assert!(is_dynamic_monopoly(&g, &VertexFn::constant(3, 1), &set(3, &[0])));
        let tau = VertexFn::new(vec![1, 2, 1]);
        assert!(!is_dynamic_monopoly(&g, &tau, &set(3, &[0])));
        assert!(is_dynamic_monopoly(&g, &tau, &set(3, &[0, 2])));
    }

    #[test]
    fn negative_thresholds_self_activate() {
        let tau = VertexFn::new(vec![5, -3, 5]);
        assert_eq!(compute_hull(&p3(), &tau, &VertexSet::empty(3)).to_vec(), vec![1]);
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(4, 4).collect::<Vec<_>>(), vec![0b1111]);
        assert_eq!(k_subsets(3, 4).count(), 0);
        let all: Vec<u64> = k_subsets(6, 3).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|m| m.count_ones() == 3));
    }

    #[test]
    fn dyn_small() {
        assert_eq!(dyn_bruteforce(&p3(), &VertexFn::constant(3, 1), DYN_SIZE_LIMIT), Ok(1));
        assert_eq!(dyn_bruteforce(&p3(), &VertexFn::constant(3, 2), DYN_SIZE_LIMIT), Ok(2));
        assert_eq!(dyn_bruteforce(&c4(), &VertexFn::zeros(4), DYN_SIZE_LIMIT), Ok(0));
    }

    #[test]
    fn dyn_size_guard() {
        let g = Graph::new(25, &[]).unwrap();
        assert_eq!(
            dyn_bruteforce(&g, &VertexFn::zeros(25), DYN_SIZE_LIMIT),
            Err(Error::InstanceTooLarge { n: 25, limit: 20 })
        );
    }

    #[test]
    fn ackerman_examples() {
        assert_eq!(ackerman_bound(&p3(), &VertexFn::constant(3, 1)), Ok(Ratio::new(4, 3)));
        assert_eq!(ackerman_bound(&c4(), &VertexFn::zeros(4)), Ok(Ratio::from_integer(0)));
        assert_eq!(ackerman_bound(&c4(), &VertexFn::constant(4, 2)), Ok(Ratio::new(8, 3)));
        assert!(matches!(
            ackerman_bound(&p3(), &VertexFn::new(vec![2, 0, 0])),
            Err(Error::ThresholdOutOfRange { vertex: 0, .. })
        ));
        assert!(ackerman_bound(&p3(), &VertexFn::new(vec![0, -1, 0])).is_err());
    }
}
