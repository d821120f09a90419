//! Exhaustive ground truth for small instances.

use crate::error::{Error, Result};
use crate::ext::ExtInt;
use crate::graph::{Graph, VertexFn};
use crate::par::{self, Exec};
use crate::spread::dyn_bruteforce_with;

/// Default vertex limit for [`vacc_bruteforce`].
pub const VACC_SIZE_LIMIT: usize = 10;

/// Streams every `iota` with `0 <= iota <= iota_max` and `sum(iota) = b`,
/// in increasing lexicographic order.
#[derive(Clone, Debug)]
pub struct Increments {
    caps: Vec<i64>,
    // suffix[i] = caps[i..].sum()
    suffix: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl Increments {
    fn fill(&self, current: &mut [i64], from: usize, mut rest: i64) {
        for (i, slot) in current.iter_mut().enumerate().skip(from) {
            let v = (rest - self.suffix[i + 1]).max(0);
            *slot = v;
            rest -= v;
        }
        debug_assert_eq!(rest, 0);
    }
}

impl Iterator for Increments {
    type Item = VertexFn;

    fn next(&mut self) -> Option<VertexFn> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Rightmost position that can grow while something remains after it.
        let mut after = 0;
        for i in (0..succ.len()).rev() {
            if after > 0 && succ[i] < self.caps[i] {
                succ[i] += 1;
                self.fill(&mut succ, i + 1, after - 1);
                self.next = Some(succ);
                break;
            }
            after += succ[i];
        }
        Some(VertexFn::new(current))
    }
}

pub fn enumerate_increments(iota_max: &VertexFn, b: i64) -> Increments {
    let caps = iota_max.values().iter().map(|&c| c.max(0)).collect::<Vec<_>>();
    let mut suffix = vec![0; caps.len() + 1];
    for i in (0..caps.len()).rev() {
        suffix[i] = suffix[i + 1] + caps[i];
    }
    let mut it = Increments { caps, suffix, next: None };
    if (0..=it.suffix[0]).contains(&b) {
        let mut first = vec![0; it.caps.len()];
        it.fill(&mut first, 0, b);
        it.next = Some(first);
    }
    it
}

/// Every increment with total at most `b`.
pub fn enumerate_increments_at_most(iota_max: &VertexFn, b: i64) -> impl Iterator<Item = VertexFn> + '_ {
    (0..=b).flat_map(move |t| enumerate_increments(iota_max, t))
}

/// `vacc(g, tau, iota_max, b)` by enumerating all increments.
pub fn vacc_bruteforce(g: &Graph, tau: &VertexFn, iota_max: &VertexFn, b: i64, size_limit: usize) -> Result<ExtInt> {
    vacc_bruteforce_with(Exec::default(), g, tau, iota_max, b, size_limit)
}

pub fn vacc_bruteforce_with(
    exec: Exec,
    g: &Graph,
    tau: &VertexFn,
    iota_max: &VertexFn,
    b: i64,
    size_limit: usize,
) -> Result<ExtInt> {
    vacc_over(exec, g, tau, iota_max, enumerate_increments(iota_max, b), b, size_limit)
}

/// Same maximum taken over increments with total at most `b`.
pub fn vacc_bruteforce_at_most(g: &Graph, tau: &VertexFn, iota_max: &VertexFn, b: i64, size_limit: usize) -> Result<ExtInt> {
    vacc_over(Exec::default(), g, tau, iota_max, enumerate_increments_at_most(iota_max, b), b, size_limit)
}

fn vacc_over<I>(
    exec: Exec,
    g: &Graph,
    tau: &VertexFn,
    iota_max: &VertexFn,
    increments: I,
    b: i64,
    size_limit: usize,
) -> Result<ExtInt>
where
    I: Iterator<Item = VertexFn> + Send,
{
    let n = g.n();
    if n > size_limit || n >= 64 {
        return Err(Error::InstanceTooLarge { n, limit: size_limit.min(63) });
    }
    tau.check_len(n)?;
    iota_max.check_len(n)?;
    if b < 0 {
        return Err(Error::NegativeBudget(b));
    }
    let best = par::max_over(exec, increments, |iota| {
        let dyn_value = dyn_bruteforce_with(Exec::Sequential, g, &(tau + &iota), n).expect("size checked");
        ExtInt::Finite(dyn_value as i64)
    });
    Ok(best.unwrap_or(ExtInt::NegInf))
}

/// `max { k : sum_{i <= k} (d(u_i) + 1) <= total }` over vertices sorted by
/// non-decreasing degree.
pub fn vacc_formula_avg(g: &Graph, total: i64) -> Result<usize> {
    let max = 2 * g.m() as i64 + g.n() as i64;
    if !(0..=max).contains(&total) {
        return Err(Error::TotalOutOfRange { total, max });
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&u| (g.degree(u), u));
    let mut spent = 0i64;
    Ok(order
        .into_iter()
        .take_while(|&u| {
            spent += g.degree(u) as i64 + 1;
            spent <= total
        })
        .count())
}
