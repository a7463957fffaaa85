//! Basis-tuple sweeps.
//!
//! Every identity checker reduces, by multilinearity, to evaluating a defect
//! on each tuple of basis indices. Those evaluations are independent, so with
//! the `parallel` feature they run on rayon; the sequential fallback walks the
//! same index order. Either way the violations come back in lexicographic
//! tuple order, so reports are byte-for-byte reproducible regardless of
//! thread count.

use std::sync::atomic::{AtomicBool, Ordering};

use crate::report::{CheckReport, Violation};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maximum number of free variables in any identity family in this crate.
pub const MAX_ARITY: usize = 8;

/// Sweeps smaller than this run sequentially even when parallelism is
/// enabled; spawning tasks costs more than the work saved.
const PARALLEL_CUTOFF: usize = 2048;

static PARALLEL: AtomicBool = AtomicBool::new(cfg!(feature = "parallel"));

/// Turns the rayon sweep path on or off at runtime; returns the previous
/// setting. Without the `parallel` feature this is a no-op and sweeps always
/// run sequentially.
pub fn set_parallel(enabled: bool) -> bool {
    if cfg!(feature = "parallel") {
        PARALLEL.swap(enabled, Ordering::Relaxed)
    } else {
        false
    }
}

/// Whether sweeps currently use the parallel path.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL.load(Ordering::Relaxed)
}

fn decode(mut flat: usize, dims: &[usize]) -> [usize; MAX_ARITY] {
    let mut idx = [0usize; MAX_ARITY];
    for pos in (0..dims.len()).rev() {
        idx[pos] = flat % dims[pos];
        flat /= dims[pos];
    }
    idx
}

fn total(dims: &[usize]) -> usize {
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .expect("tuple space too large")
}

/// Evaluates `defect` on every tuple in `dims` (lexicographic order) and
/// collects the non-`None` results. `dims.len()` must be at most
/// [`MAX_ARITY`].
pub(crate) fn scan<F>(dims: &[usize], defect: F) -> Vec<Violation>
where
    F: Fn(&[usize]) -> Option<Violation> + Sync,
{
    assert!(dims.len() <= MAX_ARITY, "tuple arity {} exceeds maximum", dims.len());
    let n = total(dims);
    #[cfg(feature = "parallel")]
    if parallel_enabled() && n >= PARALLEL_CUTOFF {
        return (0..n)
            .into_par_iter()
            .filter_map(|flat| defect(&decode(flat, dims)[..dims.len()]))
            .collect();
    }
    scan_sequential(dims, n, &defect)
}

fn scan_sequential<F>(dims: &[usize], n: usize, defect: &F) -> Vec<Violation>
where
    F: Fn(&[usize]) -> Option<Violation> + Sync,
{
    (0..n).filter_map(|flat| defect(&decode(flat, dims)[..dims.len()])).collect()
}

/// Number of tuples a scan over `dims` evaluates (used for `checked` counts).
pub(crate) fn tuple_count(dims: &[usize]) -> usize {
    total(dims)
}

/// Sweeps one identity family: evaluates `defect` on every basis tuple and
/// reports the tuples where it is nonzero under the given identity name.
pub(crate) fn scan_family<F>(identity: &str, dims: &[usize], defect: F) -> CheckReport
where
    F: Fn(&[usize]) -> Vec<crate::scalar::Scalar> + Sync,
{
    let violations = scan(dims, |tuple| {
        let d = defect(tuple);
        if crate::scalar::is_zero_vec(&d) {
            None
        } else {
            Some(Violation::new(identity, tuple, d))
        }
    });
    CheckReport::from_violations(tuple_count(dims), violations)
}
