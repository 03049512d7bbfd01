//! Execution-mode plumbing for the data-parallel batch loops.
//!
//! Every batch in the crate (Koszul strands, harness cases) funnels
//! through [`map_ordered`]. With the `parallel` feature (the default)
//! `ExecMode::Parallel` fans out on the rayon pool; without it the
//! parallel mode degrades to the sequential path, which is also what
//! the benchmarks compare against.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

/// Maps `f` over `items`, preserving input order in the output.
pub fn map_ordered<I, O, F>(mode: ExecMode, items: &[I], f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.iter().map(f).collect(),
        ExecMode::Parallel => map_parallel(items, f),
    }
}

#[cfg(feature = "parallel")]
fn map_parallel<I, O, F>(items: &[I], f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_parallel<I, O, F>(items: &[I], f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Runs `f` inside a rayon pool with the requested number of worker
/// threads; `None` keeps the global default. Without the `parallel`
/// feature the thread count is ignored.
pub fn with_thread_count<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        match threads {
            Some(k) if k > 0 => rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .expect("thread pool construction")
                .install(f),
            _ => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let items: Vec<u32> = (0..1000).collect();
        let seq = map_ordered(ExecMode::Sequential, &items, |&x| x * x);
        let par = map_ordered(ExecMode::Parallel, &items, |&x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }

    #[test]
    fn thread_count_override_runs() {
        let out = with_thread_count(Some(2), || {
            map_ordered(ExecMode::Parallel, &[1, 2, 3], |&x| x + 1)
        });
        assert_eq!(out, vec![2, 3, 4]);
    }
}
