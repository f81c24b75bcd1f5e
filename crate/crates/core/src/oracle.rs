//! Brute-force ground truth at desk scale: exhaustive local-peak enumeration,
//! exhaustive exploration of the improving-flip graph, and recomputation of
//! the reference peak table.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{build_cd_gadget, BridgeConvention, GadgetBoundary};
use crate::error::{Error, Result};
use crate::tables::table1_expected_peaks;
use crate::vcsp::{Assignment, VcspInstance};

/// Hard cap for [`enumerate_peaks`]: `2^24` assignments is a seconds-scale scan.
pub const MAX_ENUM_VARS: usize = 24;

/// Default node budget for [`explore_ascent_graph`].
pub const DEFAULT_EXPLORE_BUDGET: usize = 10_000_000;

/// All local peaks of `inst` (assignments with no strictly improving flip),
/// sorted canonically by bit string. Exhaustive; requires ≤ 24 variables.
pub fn enumerate_peaks(inst: &VcspInstance) -> Result<Vec<Assignment>> {
    let d = inst.num_vars();
    if d > MAX_ENUM_VARS {
        return Err(Error::TooLarge(format!(
            "peak enumeration supports at most {MAX_ENUM_VARS} variables, got {d}"
        )));
    }
    // Compile per-variable constraint views: (mask of the other scope
    // variables, weight). A constraint contributes to v's delta iff all other
    // scope variables are set.
    let mut per_var: Vec<Vec<(u32, i64)>> = vec![Vec::new(); d];
    for c in inst.constraints() {
        let full: u32 = c.scope.iter().fold(0, |m, &v| m | 1 << v);
        for &v in &c.scope {
            per_var[v].push((full & !(1u32 << v), c.weight));
        }
    }
    let is_peak = |x: u32| -> bool {
        for (v, cons) in per_var.iter().enumerate() {
            let mut acc: i128 = 0;
            for &(others, w) in cons {
                if x & others == others {
                    acc += i128::from(w);
                }
            }
            let improving = if x >> v & 1 == 1 { acc < 0 } else { acc > 0 };
            if improving {
                return false;
            }
        }
        true
    };
    let total: u64 = 1u64 << d;
    let mut peaks: Vec<Assignment> = (0..total)
        .into_par_iter()
        .filter(|&x| is_peak(x as u32))
        .map(|x| Assignment::from_bits((0..d).map(|v| x >> v & 1 == 1).collect()))
        .collect();
    peaks.sort();
    Ok(peaks)
}

/// Exhaustive report on the directed graph whose nodes are assignments
/// reachable from `start` and whose arcs are strictly improving flips.
#[derive(Debug, Clone, Serialize)]
pub struct AscentGraphReport {
    pub start: Assignment,
    pub reachable_count: usize,
    /// All peaks reachable from `start`, canonically sorted.
    pub peaks_reached: Vec<Assignment>,
    /// Maximum out-degree over reachable assignments (peaks have 0).
    pub max_out_degree: usize,
    /// True iff every reachable non-peak has exactly one improving move and
    /// exactly one peak is reached — i.e. there is a single maximal path.
    pub unique_maximal_path: bool,
    /// Length of that single path, when it exists.
    pub path_length: Option<usize>,
}

fn pack(x: &Assignment) -> Vec<u64> {
    let mut words = vec![0u64; (x.len() + 63) / 64];
    for (i, &b) in x.bits().iter().enumerate() {
        if b {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

/// Depth-first exploration of the improving-flip graph from `start`,
/// memoizing visited assignments. The graph is acyclic (fitness strictly
/// increases along every arc), so the visit terminates; `budget` bounds the
/// number of distinct assignments visited.
pub fn explore_ascent_graph(
    inst: &VcspInstance,
    start: &Assignment,
    budget: usize,
) -> Result<AscentGraphReport> {
    let mut visited: HashSet<Vec<u64>> = HashSet::new();
    let mut peaks: BTreeSet<Assignment> = BTreeSet::new();
    let mut max_out_degree = 0usize;
    let mut all_out_degree_one = true;
    visited.insert(pack(start));
    let mut stack = vec![start.clone()];
    while let Some(x) = stack.pop() {
        let moves = inst.improving_moves(&x)?;
        max_out_degree = max_out_degree.max(moves.len());
        if moves.is_empty() {
            peaks.insert(x);
            continue;
        }
        if moves.len() != 1 {
            all_out_degree_one = false;
        }
        for (v, delta) in moves {
            debug_assert!(delta > 0);
            let y = x.flipped(v);
            if visited.insert(pack(&y)) {
                if visited.len() > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                stack.push(y);
            }
        }
    }
    let unique_maximal_path = all_out_degree_one && peaks.len() == 1;
    // A unique maximal path visits every reachable assignment exactly once.
    let path_length = unique_maximal_path.then(|| visited.len() - 1);
    Ok(AscentGraphReport {
        start: start.clone(),
        reachable_count: visited.len(),
        peaks_reached: peaks.into_iter().collect(),
        max_out_degree,
        unique_maximal_path,
        path_length,
    })
}

/// Comparison between brute-forced gadget peaks and the reference peak table
/// for one `(P, Q, R)` boundary context.
#[derive(Debug, Clone, Serialize)]
pub struct PeakContextReport {
    pub p: bool,
    pub q: bool,
    pub r: bool,
    /// Peak set the reference table claims (with its "0/1" entry resolved to `R`).
    pub expected: Vec<String>,
    /// Brute-forced peak set of the generated gadget.
    pub actual: Vec<String>,
    pub matches: bool,
}

/// Comparison across all eight `(P, Q, R)` contexts (with `S = 0`).
#[derive(Debug, Clone, Serialize)]
pub struct PeakTableReport {
    pub n: u32,
    pub k: u32,
    pub convention: BridgeConvention,
    pub contexts: Vec<PeakContextReport>,
    pub pass: bool,
    /// The recorded boundary assumption: the table does not address the
    /// `m_k`-weighted edge from slot 6 into the next-lower gadget, so its
    /// far endpoint is pinned to zero.
    pub note: &'static str,
}

/// Brute-forces the peaks of gadget `k` (scale `n`) for every boundary
/// context `(P, Q) ∈ {0,1}²` and `R ∈ {0,1}` with `S = 0`, and checks set
/// equality against the reference peak table.
pub fn verify_peak_table(n: u32, k: u32, convention: BridgeConvention) -> Result<PeakTableReport> {
    if k == 0 || k > n {
        return Err(Error::ParamOutOfRange(format!(
            "peak table context needs 1 ≤ k ≤ n, got (n, k) = ({n}, {k})"
        )));
    }
    let mut contexts = Vec::with_capacity(8);
    for p in [false, true] {
        for q in [false, true] {
            for r in [false, true] {
                let inst = build_cd_gadget(n, k, GadgetBoundary::new(p, q, r, false), convention)?;
                let actual: Vec<String> = enumerate_peaks(&inst)?
                    .iter()
                    .map(|a| a.to_string())
                    .collect();
                let expected: Vec<String> = table1_expected_peaks(p, q, r)
                    .iter()
                    .map(|a| a.to_string())
                    .collect();
                let matches = expected == actual;
                contexts.push(PeakContextReport {
                    p,
                    q,
                    r,
                    expected,
                    actual,
                    matches,
                });
            }
        }
    }
    let pass = contexts.iter().all(|c| c.matches);
    Ok(PeakTableReport {
        n,
        k,
        convention,
        contexts,
        pass,
        note: "S = x_(k-1,1) pinned to 0; the reference table does not address it",
    })
}
