//! Case-sweep execution: rayon-backed when the `parallel` feature is on,
//! plain iteration otherwise. `map_cases_seq` is always sequential so the
//! bench suite can compare both paths in one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over the cases, in input order.
#[cfg(feature = "parallel")]
pub fn map_cases<T, R, F>(cases: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    cases.par_iter().map(f).collect()
}

/// Maps `f` over the cases, in input order (sequential fallback).
#[cfg(not(feature = "parallel"))]
pub fn map_cases<T, R, F>(cases: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    cases.iter().map(f).collect()
}

/// Always-sequential twin of `map_cases`.
pub fn map_cases_seq<T, R, F>(cases: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    cases.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree_in_order() {
        let cases: Vec<u64> = (0..100).collect();
        let f = |x: &u64| x * x + 1;
        assert_eq!(map_cases(&cases, f), map_cases_seq(&cases, f));
    }
}
