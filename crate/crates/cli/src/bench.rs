//! Call-count and wall-time comparison of the two evaluators.

use std::time::Instant;

use sublists_core::instances::{BuiltinProblem, ProblemInput};
use sublists_core::Algorithm;

pub const CSV_HEADER: &str = "n,td_g_calls,bu_g_calls,td_wall_ns,bu_wall_ns";

/// Largest `n` accepted; top-down cost grows like `n!`.
pub const MAX_BENCH_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub td_g_calls: u64,
    pub bu_g_calls: u64,
    pub td_wall_ns: u128,
    pub bu_wall_ns: u128,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n, self.td_g_calls, self.bu_g_calls, self.td_wall_ns, self.bu_wall_ns
        )
    }
}

/// Runs both evaluators on the distinct input of length `n + 1`.
pub fn measure(problem: BuiltinProblem, n: usize) -> sublists_core::Result<BenchRow> {
    let input = ProblemInput::distinct(problem.input_kind(), n + 1);
    let timed = |algo| {
        let start = Instant::now();
        let (_, stats) = problem.run(algo, &input)?;
        Ok::<_, sublists_core::Error>((stats.g_calls, start.elapsed().as_nanos()))
    };
    let (td_g_calls, td_wall_ns) = timed(Algorithm::TopDown)?;
    let (bu_g_calls, bu_wall_ns) = timed(Algorithm::BottomUp)?;
    Ok(BenchRow {
        n,
        td_g_calls,
        bu_g_calls,
        td_wall_ns,
        bu_wall_ns,
    })
}

pub fn rows(problem: BuiltinProblem, max_n: usize) -> sublists_core::Result<Vec<BenchRow>> {
    (0..=max_n).map(|n| measure(problem, n)).collect()
}
