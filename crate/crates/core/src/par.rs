//! Execution strategy for the data-parallel loops.
//!
//! With the `parallel` feature the loops run on the rayon global pool;
//! without it [`Exec::Parallel`] degrades to the sequential path. Every
//! helper returns the same value under both strategies.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// `f(i)` for every `i` in `0..len`, in index order.
pub(crate) fn map_indices<R, F>(exec: Exec, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}

/// Maximum of `f` over a streaming iterator.
pub(crate) fn max_over<I, T, F>(exec: Exec, iter: I, f: F) -> Option<T>
where
    I: Iterator + Send,
    I::Item: Send,
    T: Ord + Send,
    F: Fn(I::Item) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return iter.par_bridge().map(f).max();
    }
    let _ = exec;
    iter.map(f).max()
}

/// First element of `items` (in slice order) satisfying `pred`.
pub(crate) fn find_first<T, F>(exec: Exec, items: &[T], pred: F) -> Option<&T>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().find_first(|x| pred(x));
    }
    let _ = exec;
    items.iter().find(|x| pred(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(map_indices(exec, 5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(max_over(exec, (0..100u32).map(|x| x % 37), |x| x * 2), Some(72));
            assert_eq!(max_over(exec, std::iter::empty::<u32>(), |x| x), None);
            let items: Vec<u32> = (0..1000).collect();
            assert_eq!(find_first(exec, &items, |&x| x > 10 && x % 7 == 0), Some(&14));
        }
    }
}
