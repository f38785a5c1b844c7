//! Multi-threaded cube-frontier expansion. The output is the concatenation
//! of per-code successor lists in frontier order — exactly what the
//! sequential expander produces — so results are identical for any worker
//! count.

use semikit_core::commutator::{CubeExpander, ExpandCtx};

pub struct ThreadedExpander {
    workers: usize,
}

impl ThreadedExpander {
    pub fn new(workers: usize) -> Self {
        ThreadedExpander {
            workers: workers.max(1),
        }
    }
}

impl CubeExpander for ThreadedExpander {
    fn expand(&mut self, ctx: &ExpandCtx<'_>, level: &[u64]) -> Vec<u64> {
        if self.workers == 1 || level.len() < 2 * self.workers {
            let mut out = Vec::new();
            for &code in level {
                ctx.successors(code, &mut out);
            }
            return out;
        }
        let chunk = level.len().div_ceil(self.workers);
        let results: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = level
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        for &code in part {
                            ctx.successors(code, &mut out);
                        }
                        out
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker")).collect()
        });
        let mut out = Vec::with_capacity(results.iter().map(Vec::len).sum());
        for part in results {
            out.extend(part);
        }
        out
    }
}
