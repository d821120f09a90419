//! Matching-induced thresholds and desk-scale checkers for the matching
//! bounds on `vacc(G, 0, d_G, b)`.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::ext::ExtInt;
use crate::graph::{Graph, RootedTree, VertexFn};
use crate::oracle::vacc_bruteforce;
use crate::par::{self, Exec};
use crate::spread::{dyn_bruteforce_with, is_dynamic_monopoly, k_subsets, low_bits, VertexSet};

/// Default vertex limit for the exhaustive matching searches and checkers.
pub const MATCHING_SIZE_LIMIT: usize = 12;

/// A set of pairwise disjoint edges, stored as sorted `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Matching> {
        let mut norm: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        norm.sort_unstable();
        let mut covered = vec![false; g.n()];
        for &(u, v) in &norm {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!("{u}-{v} is not an edge")));
            }
            for w in [u, v] {
                if std::mem::replace(&mut covered[w], true) {
                    return Err(Error::InvalidMatching(format!("vertex {w} is covered twice")));
                }
            }
        }
        Ok(Matching { edges: norm })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covers(&self, u: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == u || b == u)
    }

    /// The first `k` edges.
    pub fn truncated(&self, k: usize) -> Matching {
        Matching { edges: self.edges[..k.min(self.edges.len())].to_vec() }
    }
}

/// `tau_M(u) = d(u)` for vertices covered by `m`, `0` elsewhere.
pub fn tau_from_matching(g: &Graph, m: &Matching) -> Result<VertexFn> {
    let m = Matching::new(g, m.edges())?;
    let mut tau = vec![0; g.n()];
    for &(u, v) in m.edges() {
        tau[u] = g.degree(u) as i64;
        tau[v] = g.degree(v) as i64;
    }
    Ok(VertexFn::new(tau))
}

/// Maximum matching of a tree: in postorder, pair each still-unmatched
/// vertex with its parent if the parent is free.
pub fn max_matching_tree(t: &RootedTree) -> Matching {
    let mut matched = vec![false; t.n()];
    let mut edges = Vec::new();
    for &u in t.postorder() {
        if let Some(p) = t.parent(u) {
            if !matched[u] && !matched[p] {
                matched[u] = true;
                matched[p] = true;
                edges.push((u.min(p), u.max(p)));
            }
        }
    }
    edges.sort_unstable();
    Matching { edges }
}

fn check_size(g: &Graph, size_limit: usize) -> Result<()> {
    if g.n() > size_limit || g.n() >= 64 {
        Err(Error::InstanceTooLarge { n: g.n(), limit: size_limit.min(63) })
    } else {
        Ok(())
    }
}

/// Every matching of `g`, sorted by edge list.
pub fn all_matchings(g: &Graph) -> Vec<Matching> {
    fn grow(edges: &[(usize, usize)], from: usize, used: u64, current: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        out.push(Matching { edges: current.clone() });
        for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
            let mask = 1u64 << u | 1u64 << v;
            if used & mask == 0 {
                current.push((u, v));
                grow(edges, i + 1, used | mask, current, out);
                current.pop();
            }
        }
    }
    let edges = g.edges();
    let mut out = Vec::new();
    grow(&edges, 0, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A maximum matching by branch and bound over the edge list.
pub fn max_matching_bruteforce(g: &Graph, size_limit: usize) -> Result<Matching> {
    if (g.n() > size_limit && g.m() > 2 * size_limit) || g.n() >= 64 {
        return Err(Error::InstanceTooLarge { n: g.n(), limit: size_limit.min(63) });
    }
    struct Search<'a> {
        edges: &'a [(usize, usize)],
        best: Vec<(usize, usize)>,
        current: Vec<(usize, usize)>,
    }
    impl Search<'_> {
        fn go(&mut self, from: usize, used: u64, free: u32) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            let bound = self.current.len() + (free as usize / 2).min(self.edges.len() - from);
            if bound <= self.best.len() {
                return;
            }
            for i in from..self.edges.len() {
                let (u, v) = self.edges[i];
                let mask = 1u64 << u | 1u64 << v;
                if used & mask == 0 {
                    self.current.push((u, v));
                    self.go(i + 1, used | mask, free - 2);
                    self.current.pop();
                }
            }
        }
    }
    let edges = g.edges();
    let mut search = Search { edges: &edges, best: Vec::new(), current: Vec::new() };
    search.go(0, 0, g.n() as u32);
    Ok(Matching { edges: search.best })
}

/// A minimum vertex cover by ascending-cardinality search.
pub fn min_vertex_cover_bruteforce(g: &Graph, size_limit: usize) -> Result<VertexSet> {
    check_size(g, size_limit)?;
    let n = g.n();
    let edges = g.edges();
    for k in 0..=n {
        if let Some(s) = k_subsets(n, k).find(|&s| edges.iter().all(|&(u, v)| (s >> u | s >> v) & 1 == 1)) {
            return Ok(VertexSet::from_mask(n, s));
        }
    }
    Ok(VertexSet::from_mask(n, low_bits(n)))
}

/// Which branch of the regular-graph argument applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularCase {
    /// `2 r nu > b`: a matching of size `floor(b / 2r)` fits the budget and
    /// already forces enough seeds.
    LargeMatching { size: usize },
    /// `2 r nu <= b`: a minimum vertex cover (at most `2 nu` vertices) is a
    /// dynamic monopoly of `(G, d_G)`.
    SmallMatching { cover: usize },
}

/// Outcome of a checker run.
///
/// `lhs` is `vacc(G, 0, d_G, b)`; `rhs` is the largest `dyn(G, tau_M)` over
/// matchings with `tau_M(V) <= b`, attained by `witness`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub lhs: ExtInt,
    pub rhs: i64,
    pub witness: Matching,
    pub case: Option<RegularCase>,
    pub holds: bool,
}

impl BoundReport {
    /// `lhs / rhs`, when both are finite and `rhs > 0`.
    pub fn ratio(&self) -> Option<Ratio<i64>> {
        match self.lhs {
            ExtInt::Finite(l) if self.rhs > 0 => Some(Ratio::new(l, self.rhs)),
            _ => None,
        }
    }
}

fn check_budget(b: i64, min: i64, max: i64) -> Result<()> {
    if (min..=max).contains(&b) {
        Ok(())
    } else {
        Err(Error::BudgetOutOfRange { budget: b, min, max })
    }
}

/// Both sides of the matching comparison.
fn compare(g: &Graph, b: i64, size_limit: usize) -> Result<(ExtInt, i64, Matching)> {
    check_size(g, size_limit)?;
    check_budget(b, 0, 2 * g.m() as i64)?;
    let lhs = vacc_bruteforce(g, &VertexFn::zeros(g.n()), &g.degrees(), b, size_limit)?;
    let candidates: Vec<(Matching, VertexFn)> = all_matchings(g)
        .into_iter()
        .map(|m| {
            let tau = tau_from_matching(g, &m).expect("enumerated matchings are valid");
            (m, tau)
        })
        .filter(|(_, tau)| tau.sum() <= b)
        .collect();
    let values = par::map_indices(Exec::default(), candidates.len(), |i| {
        dyn_bruteforce_with(Exec::Sequential, g, &candidates[i].1, size_limit).expect("size checked") as i64
    });
    // The empty matching always qualifies; ties go to the first matching.
    let (best, rhs) = values.iter().enumerate().fold((0, values[0]), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
    Ok((lhs, rhs, candidates[best].0.clone()))
}

/// On trees, `vacc(T, 0, d_T, b)` is attained by some `tau_M` within budget.
pub fn khza_check(g: &Graph, b: i64, size_limit: usize) -> Result<BoundReport> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let (lhs, rhs, witness) = compare(g, b, size_limit)?;
    Ok(BoundReport { lhs, rhs, witness, case: None, holds: lhs == ExtInt::Finite(rhs) })
}

/// Checks `vacc(G, 0, d_G, b) <= 2 max_M dyn(G, tau_M)` over matchings with
/// `tau_M(V) <= b`.
pub fn conjecture1_check(g: &Graph, b: i64, size_limit: usize) -> Result<BoundReport> {
    let (lhs, rhs, witness) = compare(g, b, size_limit)?;
    Ok(BoundReport { lhs, rhs, witness, case: None, holds: lhs <= ExtInt::Finite(2 * rhs) })
}

/// [`conjecture1_check`] on an `r`-regular graph with
/// `(2r - 1)(r + 1) <= b <= r n`, together with the intermediate bounds:
/// `vacc <= b / (r + 1)` and the case split on the matching number.
pub fn theorem2_check(g: &Graph, b: i64, size_limit: usize) -> Result<BoundReport> {
    let r = g.regular_degree().ok_or(Error::NotRegular)? as i64;
    check_size(g, size_limit)?;
    check_budget(b, (2 * r - 1) * (r + 1), r * g.n() as i64)?;
    let mut report = conjecture1_check(g, b, size_limit)?;
    let lhs = report.lhs.finite().expect("budget within capacity");
    let averaged = lhs * (r + 1) <= b;

    let nu_matching = max_matching_bruteforce(g, size_limit)?;
    let nu = nu_matching.len() as i64;
    let (case, case_ok) = if 2 * r * nu > b {
        let size = if r == 0 { 0 } else { b / (2 * r) };
        let m = nu_matching.truncated(size as usize);
        let tau = tau_from_matching(g, &m)?;
        let ok = size < nu && tau.sum() == 2 * r * size && tau.sum() <= b && 2 * r * (size + 1) > b;
        (RegularCase::LargeMatching { size: size as usize }, ok)
    } else {
        let cover = min_vertex_cover_bruteforce(g, size_limit)?;
        let ok = cover.len() as i64 <= 2 * nu && is_dynamic_monopoly(g, &g.degrees(), &cover);
        (RegularCase::SmallMatching { cover: cover.len() }, ok)
    };
    report.holds = report.holds && averaged && case_ok;
    report.case = Some(case);
    Ok(report)
}
