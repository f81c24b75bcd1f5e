//! Strict local search: pivot rules, ascent execution, trace recording, and
//! per-step uniqueness auditing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::vcsp::{Assignment, Slot, VarId, VcspInstance};

/// Default step budget for instances that are not generated chains.
pub const DEFAULT_MAX_STEPS: usize = 100_000_000;

/// Default step budget for a generated chain of `m` gadgets: twice the
/// designated ascent length `10(2^m − 1)`.
pub fn default_chain_max_steps(m: u32) -> usize {
    let t_m = 10usize * ((1usize << m) - 1);
    2 * t_m
}

/// How the next improving flip is chosen. Each rule is deterministic given
/// its seed, the instance, and the start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    /// The lowest variable id with a positive delta.
    FirstImprovement,
    /// The maximum delta; ties break toward the lowest variable id.
    Steepest,
    /// Uniform over improving moves, driven by a seeded ChaCha8 stream.
    RandomImprovement { seed: u64 },
}

impl PivotRule {
    pub fn describe(&self) -> String {
        match self {
            PivotRule::FirstImprovement => "first".to_string(),
            PivotRule::Steepest => "steepest".to_string(),
            PivotRule::RandomImprovement { seed } => format!("random(seed={seed})"),
        }
    }
}

/// Whether the per-step uniqueness audit ran, and its verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Audited {
    Yes,
    No,
    NotAudited,
}

/// One recorded flip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub var: VarId,
    pub delta: i64,
    /// Fitness after this flip.
    pub fitness: i64,
    /// Number of improving moves available *before* this flip; present only
    /// when the run was audited.
    pub improving_count: Option<usize>,
}

/// A complete ascent record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AscentTrace {
    pub start: Assignment,
    pub steps: Vec<Step>,
    pub end: Assignment,
    pub audited_unique: Audited,
    /// First audited step with improving-move count ≠ 1: (step index, count).
    pub first_violation: Option<(usize, usize)>,
    /// True when the run stopped at the step budget rather than at a peak.
    pub truncated: bool,
}

impl AscentTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Repeatedly applies `rule` from `start` until no improving move remains or
/// `max_steps` flips have been taken (the trace is then marked truncated).
/// With `audit` set, each step additionally records the full improving-move
/// count and the trace reports whether every count was exactly 1.
pub fn run_ascent(
    inst: &VcspInstance,
    start: &Assignment,
    rule: PivotRule,
    max_steps: usize,
    audit: bool,
) -> Result<AscentTrace> {
    let mut x = start.clone();
    let mut fitness = inst.evaluate(&x)?;
    let mut rng = match rule {
        PivotRule::RandomImprovement { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut steps = Vec::new();
    let mut first_violation = None;
    let mut truncated = false;
    loop {
        let (choice, count) = if audit || rng.is_some() {
            let moves = inst.improving_moves(&x)?;
            let choice = match (&rule, moves.as_slice()) {
                (_, []) => None,
                (PivotRule::FirstImprovement, ms) => Some(ms[0]),
                (PivotRule::Steepest, ms) => {
                    // max delta, ties to lowest id (moves are id-sorted).
                    Some(*ms.iter().max_by_key(|(v, d)| (*d, std::cmp::Reverse(*v))).unwrap())
                }
                (PivotRule::RandomImprovement { .. }, ms) => {
                    let i = rng.as_mut().unwrap().gen_range(0..ms.len());
                    Some(ms[i])
                }
            };
            (choice, audit.then_some(moves.len()))
        } else {
            (pick_without_enumeration(inst, &x, rule)?, None)
        };
        let Some((var, delta)) = choice else { break };
        debug_assert!(delta > 0);
        if audit && count != Some(1) {
            first_violation.get_or_insert((steps.len(), count.unwrap()));
        }
        if steps.len() >= max_steps {
            truncated = true;
            break;
        }
        x.flip(var);
        fitness = fitness.checked_add(delta).ok_or(Error::ArithmeticOverflow)?;
        steps.push(Step {
            var,
            delta,
            fitness,
            improving_count: count,
        });
    }
    let audited_unique = if !audit {
        Audited::NotAudited
    } else if first_violation.is_none() {
        Audited::Yes
    } else {
        Audited::No
    };
    Ok(AscentTrace {
        start: start.clone(),
        steps,
        end: x,
        audited_unique,
        first_violation,
        truncated,
    })
}

/// Rule application without materializing the full improving-move list
/// (first-improvement stops at the first hit; steepest scans once).
fn pick_without_enumeration(
    inst: &VcspInstance,
    x: &Assignment,
    rule: PivotRule,
) -> Result<Option<(VarId, i64)>> {
    let mut best: Option<(VarId, i64)> = None;
    for v in 0..inst.num_vars() {
        let d = inst.flip_delta(x, v)?;
        if d > 0 {
            match rule {
                PivotRule::FirstImprovement => return Ok(Some((v, d))),
                _ => {
                    if best.map_or(true, |(_, bd)| d > bd) {
                        best = Some((v, d));
                    }
                }
            }
        }
    }
    Ok(best)
}

/// Walks the ascent from `start` (rule irrelevant when unique) verifying that
/// every non-peak assignment visited has exactly one improving move. Returns
/// the verdict together with the audited trace, whose `first_violation`
/// carries the first offending step if any.
pub fn audit_uniqueness(
    inst: &VcspInstance,
    start: &Assignment,
    max_steps: usize,
) -> Result<(bool, AscentTrace)> {
    let trace = run_ascent(inst, start, PivotRule::FirstImprovement, max_steps, true)?;
    Ok((trace.audited_unique == Audited::Yes, trace))
}

/// Flip deltas of gadget `k`'s 8 variables at `x`, in slot order
/// 1, 2, 3, 4, 5, 6, A, B.
pub fn delta_row(inst: &VcspInstance, x: &Assignment, gadget: u32) -> Result<[i64; 8]> {
    let mut row = [0i64; 8];
    for (i, &slot) in Slot::CD_ORDER.iter().enumerate() {
        let v = inst
            .var_by_label(gadget, slot)
            .ok_or(Error::UnknownGadget(gadget))?;
        row[i] = inst.flip_delta(x, v)?;
    }
    Ok(row)
}

#[derive(Serialize)]
struct JsonlHeader<'a> {
    start: String,
    end: String,
    rule: String,
    steps: usize,
    audited_unique: Audited,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_violation: Option<(usize, usize)>,
    truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonlStep {
    step: usize,
    var: VarId,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<(u32, String)>,
    delta: i64,
    fitness: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    improving_count: Option<usize>,
}

/// Renders a trace as JSONL: a header record with start/end bit strings and
/// the rule descriptor, then one record per step.
pub fn trace_to_jsonl(inst: &VcspInstance, trace: &AscentTrace, rule: PivotRule) -> String {
    let mut out = String::new();
    let header = JsonlHeader {
        start: trace.start.to_string(),
        end: trace.end.to_string(),
        rule: rule.describe(),
        steps: trace.steps.len(),
        audited_unique: trace.audited_unique,
        first_violation: trace.first_violation,
        truncated: trace.truncated,
        note: None,
    };
    out.push_str(&serde_json::to_string(&header).expect("header serializes"));
    out.push('\n');
    for (t, s) in trace.steps.iter().enumerate() {
        let label = inst
            .label(s.var)
            .map(|l| (l.gadget, l.slot.as_str().to_string()));
        let rec = JsonlStep {
            step: t,
            var: s.var,
            label,
            delta: s.delta,
            fitness: s.fitness,
            improving_count: s.improving_count,
        };
        out.push_str(&serde_json::to_string(&rec).expect("step serializes"));
        out.push('\n');
    }
    out
}

/// Slot order used by [`delta_row`], re-exported for report rendering.
pub fn delta_row_slots() -> [Slot; 8] {
    Slot::CD_ORDER
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        build_cd_chain, cd_end, cd_start, BridgeConvention, CdParams, Variant,
    };

    fn chain(n: u32, m: u32, variant: Variant) -> (VcspInstance, CdParams) {
        let params = CdParams::new(n, m, variant, BridgeConvention::ASide).unwrap();
        (build_cd_chain(&params).unwrap(), params)
    }

    #[test]
    fn single_gadget_ascent_has_ten_steps() {
        let (inst, params) = chain(1, 1, Variant::P10);
        let start = cd_start(&params).unwrap();
        for rule in [
            PivotRule::FirstImprovement,
            PivotRule::Steepest,
            PivotRule::RandomImprovement { seed: 7 },
        ] {
            let trace = run_ascent(&inst, &start, rule, 100, false).unwrap();
            assert_eq!(trace.len(), 10, "rule {rule:?}");
            assert_eq!(trace.end.to_string(), "11111001");
            assert!(!trace.truncated);
        }
    }

    #[test]
    fn reverse_two_gadget_ascent_has_thirty_steps() {
        let (inst, params) = chain(2, 2, Variant::P00);
        let trace = run_ascent(
            &inst,
            &cd_start(&params).unwrap(),
            PivotRule::Steepest,
            default_chain_max_steps(2),
            true,
        )
        .unwrap();
        assert_eq!(trace.len(), 30);
        assert_eq!(trace.end.to_string(), "0".repeat(16));
        assert_eq!(trace.end, cd_end(&params).unwrap());
        assert_eq!(trace.audited_unique, Audited::Yes);
    }

    #[test]
    fn starting_at_a_peak_takes_zero_steps() {
        let (inst, params) = chain(1, 1, Variant::P10);
        let end = cd_end(&params).unwrap();
        let trace = run_ascent(&inst, &end, PivotRule::FirstImprovement, 10, true).unwrap();
        assert!(trace.is_empty());
        assert_eq!(trace.end, end);
        assert_eq!(trace.audited_unique, Audited::Yes);
    }

    #[test]
    fn fitness_is_strictly_increasing_and_replay_matches() {
        let (inst, params) = chain(3, 3, Variant::P10);
        let start = cd_start(&params).unwrap();
        let trace = run_ascent(&inst, &start, PivotRule::Steepest, 1_000, false).unwrap();
        assert_eq!(trace.len(), 70); // 10(2^3 − 1)
        let mut x = start.clone();
        let mut prev = inst.evaluate(&x).unwrap();
        for s in &trace.steps {
            assert!(s.delta > 0);
            x.flip(s.var);
            assert!(s.fitness > prev);
            assert_eq!(inst.evaluate(&x).unwrap(), s.fitness);
            prev = s.fitness;
        }
        assert_eq!(x, trace.end);
    }

    #[test]
    fn budget_truncation_is_reported() {
        let (inst, params) = chain(2, 2, Variant::P10);
        let trace = run_ascent(&inst, &cd_start(&params).unwrap(), PivotRule::Steepest, 5, false).unwrap();
        assert!(trace.truncated);
        assert_eq!(trace.len(), 5);
    }

    #[test]
    fn audit_flags_multiple_improving_moves() {
        // Two independent positive unaries: 2 improving moves at 00.
        let inst = VcspInstance::new(
            2,
            vec![
                (vec![0], 1),
                (vec![1], 1),
            ],
        )
        .unwrap();
        let (unique, trace) =
            audit_uniqueness(&inst, &Assignment::zeros(2), 100).unwrap();
        assert!(!unique);
        assert_eq!(trace.first_violation, Some((0, 2)));
        assert_eq!(trace.audited_unique, Audited::No);
    }

    #[test]
    fn designated_ascents_are_unique_small_m() {
        for m in 1..=6 {
            for variant in [Variant::P10, Variant::P00] {
                let (inst, params) = chain(m, m, variant);
                let (unique, trace) = audit_uniqueness(
                    &inst,
                    &cd_start(&params).unwrap(),
                    default_chain_max_steps(m),
                )
                .unwrap();
                assert!(unique, "m={m} variant={variant:?}");
                assert_eq!(trace.len(), 10 * ((1usize << m) - 1));
                assert_eq!(trace.end, cd_end(&params).unwrap());
            }
        }
    }

    #[test]
    fn rules_agree_on_unique_ascents() {
        let (inst, params) = chain(4, 4, Variant::P10);
        let start = cd_start(&params).unwrap();
        let budget = default_chain_max_steps(4);
        let a = run_ascent(&inst, &start, PivotRule::FirstImprovement, budget, false).unwrap();
        let b = run_ascent(&inst, &start, PivotRule::Steepest, budget, false).unwrap();
        let c = run_ascent(
            &inst,
            &start,
            PivotRule::RandomImprovement { seed: 42 },
            budget,
            false,
        )
        .unwrap();
        assert_eq!(a.steps, b.steps);
        assert_eq!(a.steps, c.steps);
    }

    #[test]
    fn random_rule_is_seed_deterministic() {
        let inst = VcspInstance::new(
            4,
            (0..4).map(|v| (vec![v], 1)).collect(),
        )
        .unwrap();
        let start = Assignment::zeros(4);
        let rule = PivotRule::RandomImprovement { seed: 7 };
        let a = run_ascent(&inst, &start, rule, 100, false).unwrap();
        let b = run_ascent(&inst, &start, rule, 100, false).unwrap();
        assert_eq!(a.steps, b.steps);
    }

    #[test]
    fn delta_row_matches_flip_deltas() {
        let (inst, params) = chain(2, 2, Variant::P10);
        let x = cd_start(&params).unwrap();
        let row = delta_row(&inst, &x, 1).unwrap();
        // Gadget 1 all-zero with P = x_{2,6} = 0 context: slot 1 delta is the
        // bare unary −(2 m_1 + 13) = −45 for n = 2 (m_1 = 16), slot 5 is −1.
        assert_eq!(row[0], -45);
        assert_eq!(row[4], -1);
        assert!(matches!(delta_row(&inst, &x, 9), Err(Error::UnknownGadget(9))));
    }

    #[test]
    fn jsonl_export_shape() {
        let (inst, params) = chain(1, 1, Variant::P10);
        let trace = run_ascent(
            &inst,
            &cd_start(&params).unwrap(),
            PivotRule::FirstImprovement,
            100,
            true,
        )
        .unwrap();
        let text = trace_to_jsonl(&inst, &trace, PivotRule::FirstImprovement);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 11); // header + 10 steps
        let header: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(header["start"], "00000000");
        assert_eq!(header["end"], "11111001");
        assert_eq!(header["rule"], "first");
        let first: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(first["step"], 0);
        assert_eq!(first["improving_count"], 1);
        assert!(first["label"].is_array());
    }
}
