//! Optional data parallelism.
//!
//! Batch entry points (rule classification, face sweeps, decomposition
//! levels, trajectory checks) take an [`Execution`] mode. With the
//! `parallel` feature enabled `Execution::Parallel` fans work out over the
//! rayon pool; without it every mode runs sequentially. Results are always
//! returned in input order, so output does not depend on the mode.

/// How batch work is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// True when this mode actually uses more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Order-preserving map over a vector.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Order-preserving map over a slice.
    pub fn map_ref<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Order-preserving map over `0..n`.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }

    /// Applies `f` to consecutive chunks of `data` of length `chunk`.
    pub fn for_each_chunk_mut<T, F>(self, data: &mut [T], chunk: usize, f: F)
    where
        T: Send,
        F: Fn(&mut [T]) + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            data.par_chunks_mut(chunk).for_each(f);
            return;
        }
        data.chunks_mut(chunk).for_each(f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let seq = Execution::Sequential.map_range(1000, |i| i * i);
        let par = Execution::Parallel.map_range(1000, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(
            Execution::Parallel.map(vec![3, 1, 2], |x| x + 1),
            vec![4, 2, 3]
        );
        let mut data = vec![1u32; 64];
        Execution::Parallel.for_each_chunk_mut(&mut data, 8, |c| c[0] = 0);
        assert_eq!(data.iter().filter(|&&x| x == 0).count(), 8);
    }

    #[test]
    fn default_follows_feature() {
        assert_eq!(
            Execution::default().is_parallel(),
            cfg!(feature = "parallel")
        );
    }
}
