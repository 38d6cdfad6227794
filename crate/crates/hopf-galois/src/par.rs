//! Execution strategy for the data-parallel kernels.
//!
//! Every parallel kernel collects results in index order, so both strategies
//! produce identical output.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

static CURRENT: AtomicU8 = AtomicU8::new(if cfg!(feature = "parallel") { 1 } else { 0 });

impl Exec {
    /// The process-wide strategy; `Parallel` by default when the feature is on.
    pub fn current() -> Exec {
        match CURRENT.load(Ordering::Relaxed) {
            1 if cfg!(feature = "parallel") => Exec::Parallel,
            _ => Exec::Sequential,
        }
    }

    pub fn set(self) {
        CURRENT.store(matches!(self, Exec::Parallel) as u8, Ordering::Relaxed);
    }
}

/// Runs `f` with `exec` installed, restoring the previous strategy afterwards.
pub fn with_exec<T>(exec: Exec, f: impl FnOnce() -> T) -> T {
    let prev = Exec::current();
    exec.set();
    let out = f();
    prev.set();
    out
}

/// `(0..n).map(f)` collected in order.
pub fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if Exec::current() == Exec::Parallel && n > 1 {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Applies `f` to every element of `items`.
pub fn for_each_mut<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize, &mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if Exec::current() == Exec::Parallel && items.len() > 1 {
        use rayon::prelude::*;
        items.par_iter_mut().enumerate().for_each(|(i, x)| f(i, x));
        return;
    }
    items.iter_mut().enumerate().for_each(|(i, x)| f(i, x));
}

/// Smallest index in `0..n` satisfying `pred`.
pub fn find_first<F>(n: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if Exec::current() == Exec::Parallel && n > 1 {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_first(|&i| pred(i));
    }
    (0..n).find(|&i| pred(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let f = |i: usize| i * i % 7;
        let a = with_exec(Exec::Sequential, || map_range(100, f));
        let b = with_exec(Exec::Parallel, || map_range(100, f));
        assert_eq!(a, b);
        let p = |i: usize| i > 10 && i.is_multiple_of(3);
        assert_eq!(
            with_exec(Exec::Sequential, || find_first(100, p)),
            with_exec(Exec::Parallel, || find_first(100, p))
        );
    }
}
