//! Generators for the controlled-doubling construction (gadgets, chains,
//! designated start/end assignments) and the Michel–Scott scope structure.
//!
//! The controlled-doubling chain is built from 8-variable gadgets whose
//! weights are parameterized by `m_k = 2^(k−1)(8n+16) − 16` (doubling channel)
//! and `s_k = 8(n−k)` (control channel). Slots 1–6 of each gadget create the
//! exponential blow-up; slots A and B form the control channel that permits
//! only one active gadget at a time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vcsp::{Assignment, Slot, VarId, VarLabel, VcspInstance};

/// Largest admissible gadget count: `m_k` overflows 64-bit weights past
/// `k ≈ 55`, so builders reject anything above this cap with a clear error.
pub const MAX_GADGETS: u32 = 48;

/// Which of the two chain instances to build. They differ in exactly one
/// constraint: the unary on the top gadget's slot 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Ascends from the all-zero assignment to `111110 01 0^(8(m−1))`.
    P10,
    /// The reverse instance: ascends from `111110 01 0^(8(m−1))` to zero.
    P00,
}

/// Resolution of the two conflicting definitions of the inter-gadget
/// bridge edge between `(k−1,B)` and `(k,A)`.
///
/// The source material assigns this one physical edge two values differing
/// by 2: `s_k + 6` as seen from the A endpoint's gadget and `s_(k−1)` as seen
/// from the B endpoint's gadget. Both are kept selectable so the conflict is
/// first-class testable; `ASide` is the default because the modified unary
/// `Ĉ((k,A)) = 1` — which the reference delta table relies on — forces it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BridgeConvention {
    ASide,
    BSide,
}

/// Parameters of a controlled-doubling chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CdParams {
    /// Weight-scale parameter (fixes `m_k` and `s_k`).
    pub n: u32,
    /// Number of gadgets in the chain; `1 ≤ m ≤ n ≤ 48`.
    pub m: u32,
    pub variant: Variant,
    pub convention: BridgeConvention,
}

impl CdParams {
    pub fn new(n: u32, m: u32, variant: Variant, convention: BridgeConvention) -> Result<Self> {
        let p = CdParams {
            n,
            m,
            variant,
            convention,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 1 || self.m > self.n || self.n > MAX_GADGETS {
            return Err(Error::ParamOutOfRange(format!(
                "require 1 <= m <= n <= {}, got n={}, m={}",
                MAX_GADGETS, self.n, self.m
            )));
        }
        Ok(())
    }
}

/// Boundary bits that close a single gadget into a standalone instance.
///
/// `p` and `q` stand for the assignments of `x_(k+1,6)` and `x_(k−1,B)`;
/// `r` and `s` stand for `x_(k+1,A)` and `x_(k−1,1)` and default to 0,
/// matching the chain states in which the reference tables are evaluated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetBoundary {
    pub p: bool,
    pub q: bool,
    #[serde(default)]
    pub r: bool,
    #[serde(default)]
    pub s: bool,
}

impl GadgetBoundary {
    pub fn new(p: bool, q: bool, r: bool, s: bool) -> Self {
        GadgetBoundary { p, q, r, s }
    }
}

/// The doubling-channel scale `m_k = 2^(k−1)(8n+16) − 16`, exact.
pub fn m_k(n: u32, k: u32) -> Result<i64> {
    if k == 0 || k > MAX_GADGETS + 1 {
        return Err(Error::ParamOutOfRange(format!(
            "gadget index k={k} outside 1..={}",
            MAX_GADGETS + 1
        )));
    }
    let base = 8i64 * i64::from(n) + 16;
    let scaled = base
        .checked_mul(1i64 << (k - 1))
        .ok_or(Error::ArithmeticOverflow)?;
    scaled.checked_sub(16).ok_or(Error::ArithmeticOverflow)
}

/// The control-channel scale `s_k = 8(n−k)`; negative above `k = n`.
pub fn s_k(n: u32, k: u32) -> i64 {
    8 * (i64::from(n) - i64::from(k))
}

/// Weight of the bridge edge into gadget `k`'s A slot, i.e. on the scope
/// `{(k−1,B), (k,A)}`, under the chosen convention.
pub fn bridge_in_weight(n: u32, k: u32, convention: BridgeConvention) -> i64 {
    match convention {
        BridgeConvention::ASide => s_k(n, k) + 6,
        BridgeConvention::BSide => s_k(n, k - 1),
    }
}

/// Weight of the bridge edge out of gadget `k`'s B slot, i.e. on the scope
/// `{(k,B), (k+1,A)}`, under the chosen convention.
pub fn bridge_out_weight(n: u32, k: u32, convention: BridgeConvention) -> i64 {
    bridge_in_weight(n, k + 1, convention)
}

/// The full weight table of gadget `k`, exactly as defined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CdWeights {
    pub n: u32,
    pub k: u32,
    pub m_k: i64,
    pub s_k: i64,
    /// Unary weights in slot order `1..6, A, B`.
    pub unaries: [(Slot, i64); 8],
    /// The eleven intra-gadget binary scopes.
    pub binaries: [([Slot; 2], i64); 11],
    /// The two ternary scopes.
    pub ternaries: [([Slot; 3], i64); 2],
    /// Weight of the doubling edge `{(k,6), (k−1,1)}` (equals `m_k`).
    pub inter_gadget_doubling: i64,
}

impl CdWeights {
    pub fn unary(&self, slot: Slot) -> i64 {
        self.unaries
            .iter()
            .find(|(s, _)| *s == slot)
            .expect("all eight slots present")
            .1
    }
}

/// Computes every weight of gadget `k` for scale parameter `n`.
pub fn cd_weights(n: u32, k: u32) -> Result<CdWeights> {
    if k < 1 || k > n || n > MAX_GADGETS {
        return Err(Error::ParamOutOfRange(format!(
            "require 1 <= k <= n <= {MAX_GADGETS}, got n={n}, k={k}"
        )));
    }
    let m = m_k(n, k)?;
    let s = s_k(n, k);
    use Slot::*;
    Ok(CdWeights {
        n,
        k,
        m_k: m,
        s_k: s,
        unaries: [
            (S1, -(2 * m + 13)),
            (S2, -(m + 5)),
            (S3, -(m + 3)),
            (S4, -(m + s + 7)),
            (S5, -1),
            (S6, -(m + 1)),
            (A, -(s + 5)),
            (B, -(s + 3)),
        ],
        binaries: [
            ([S1, S2], m + 6),
            ([S2, S3], m + 4),
            ([S3, S6], m + 2),
            ([S1, S4], m + 6),
            ([S4, S5], m + 4),
            ([S5, S6], -(m + 2)),
            ([A, B], s + 4),
            ([S1, B], -2),
            ([S2, B], s + 4),
            ([S4, A], s + 2),
            ([S4, B], s + 2),
        ],
        ternaries: [([S2, A, B], -(s + 4)), ([S4, A, B], -(s + 2))],
        inter_gadget_doubling: m,
    })
}

/// Builds a closed 8-variable gadget instance with the boundary bits folded
/// into the four affected unaries:
/// slot 1 gains `P·m_(k+1)`, slot 6 gains `S·m_k`, slot A gains `Q·w_in`,
/// and slot B gains `R·w_out` (bridge weights per convention).
pub fn build_cd_gadget(
    n: u32,
    k: u32,
    boundary: GadgetBoundary,
    convention: BridgeConvention,
) -> Result<VcspInstance> {
    let w = cd_weights(n, k)?;
    let idx = |slot: Slot| -> VarId {
        Slot::CD_ORDER.iter().position(|&s| s == slot).unwrap()
    };
    let mut raw: Vec<(Vec<VarId>, i64)> = Vec::new();
    for &(slot, weight) in &w.unaries {
        let weight = match slot {
            Slot::S1 if boundary.p => weight
                .checked_add(m_k(n, k + 1)?)
                .ok_or(Error::ArithmeticOverflow)?,
            Slot::S6 if boundary.s => weight
                .checked_add(w.m_k)
                .ok_or(Error::ArithmeticOverflow)?,
            Slot::A if boundary.q => weight + bridge_in_weight(n, k, convention),
            Slot::B if boundary.r => weight + bridge_out_weight(n, k, convention),
            _ => weight,
        };
        raw.push((vec![idx(slot)], weight));
    }
    for &(scope, weight) in &w.binaries {
        raw.push((scope.iter().map(|&s| idx(s)).collect(), weight));
    }
    for &(scope, weight) in &w.ternaries {
        raw.push((scope.iter().map(|&s| idx(s)).collect(), weight));
    }
    let labels = Slot::CD_ORDER
        .iter()
        .map(|&slot| Some(VarLabel::new(k, slot)))
        .collect();
    VcspInstance::with_labels(8, raw, labels)
}

/// Bit position of `(k, slot)` in the canonical chain order: gadget `m`
/// first, then `m−1, …, 1`; within a gadget the order is `1..6, A, B`.
pub fn chain_position(m: u32, k: u32, slot: Slot) -> VarId {
    let offset = Slot::CD_ORDER
        .iter()
        .position(|&s| s == slot)
        .expect("chain slots are 1..6, A, B");
    8 * (m - k) as usize + offset
}

/// Builds the full chain instance on `8m` variables.
pub fn build_cd_chain(params: &CdParams) -> Result<VcspInstance> {
    params.validate()?;
    let (n, m) = (params.n, params.m);
    let pos = |k: u32, slot: Slot| chain_position(m, k, slot);
    let mut raw: Vec<(Vec<VarId>, i64)> = Vec::new();
    for k in 1..=m {
        let w = cd_weights(n, k)?;
        for &(slot, weight) in &w.unaries {
            let weight = if slot == Slot::S1 && k == m && params.variant == Variant::P10 {
                // Top gadget: fold the (absent) incoming doubling edge into
                // the unary, yielding the effective weight m_m + 3.
                weight
                    .checked_add(m_k(n, m + 1)?)
                    .ok_or(Error::ArithmeticOverflow)?
            } else {
                weight
            };
            raw.push((vec![pos(k, slot)], weight));
        }
        for &(scope, weight) in &w.binaries {
            raw.push((scope.iter().map(|&s| pos(k, s)).collect(), weight));
        }
        for &(scope, weight) in &w.ternaries {
            raw.push((scope.iter().map(|&s| pos(k, s)).collect(), weight));
        }
        if k >= 2 {
            // Doubling edge {(k,6), (k−1,1)} and control bridge
            // {(k−1,B), (k,A)}.
            raw.push((
                vec![pos(k, Slot::S6), pos(k - 1, Slot::S1)],
                w.inter_gadget_doubling,
            ));
            raw.push((
                vec![pos(k - 1, Slot::B), pos(k, Slot::A)],
                bridge_in_weight(n, k, params.convention),
            ));
        }
    }
    // In the first gadget the dangling doubling edge and control bridge are
    // merged into the single constraint C((1,6),(1,A)) = m_1 = s_0 = 8n.
    raw.push((
        vec![pos(1, Slot::S6), pos(1, Slot::A)],
        8 * i64::from(n),
    ));
    let mut labels = vec![None; 8 * m as usize];
    for k in 1..=m {
        for &slot in &Slot::CD_ORDER {
            labels[pos(k, slot)] = Some(VarLabel::new(k, slot));
        }
    }
    VcspInstance::with_labels(8 * m as usize, raw, labels)
}

fn designated_peak(m: u32) -> Assignment {
    // Gadget m set to 111110 01 (slots 1..6, A, B), all lower gadgets zero.
    let mut x = Assignment::zeros(8 * m as usize);
    for slot in [Slot::S1, Slot::S2, Slot::S3, Slot::S4, Slot::S5, Slot::B] {
        x.set(chain_position(m, m, slot), true);
    }
    x
}

/// Designated start of the unique ascent for the given variant.
pub fn cd_start(params: &CdParams) -> Result<Assignment> {
    params.validate()?;
    Ok(match params.variant {
        Variant::P10 => Assignment::zeros(8 * params.m as usize),
        Variant::P00 => designated_peak(params.m),
    })
}

/// Designated end (the reached peak) for the given variant.
pub fn cd_end(params: &CdParams) -> Result<Assignment> {
    params.validate()?;
    Ok(match params.variant {
        Variant::P10 => designated_peak(params.m),
        Variant::P00 => Assignment::zeros(8 * params.m as usize),
    })
}

/// Builds the Michel–Scott scope structure on `8n + 4` variables with unit
/// weights (structure only; the original weights live in a figure and are out
/// of scope).
///
/// Scopes per inner gadget `k = 1..n`: the path `{(k,i),(k,i+1)}` for
/// `i = 1..7`, plus the connections `{(k,i),(k−1,1)}` for `i = 2,4,6` and
/// `{(k−1,8),(k,i)}` for `i = 3,5,7`, together with eight unit unaries.
/// The base gadget contributes `{(0,1),(0,8)}`; the final gadget contributes
/// `{(n+1,1),(n+1,2)}` and the connector `{(n+1,1),(n,1)}`.
pub fn build_ms_scopes(n: u32) -> Result<VcspInstance> {
    if n < 1 || n > 4096 {
        return Err(Error::ParamOutOfRange(format!(
            "require 1 <= n <= 4096, got n={n}"
        )));
    }
    let ms_slot = |i: u32| -> Slot {
        match i {
            1 => Slot::S1,
            2 => Slot::S2,
            3 => Slot::S3,
            4 => Slot::S4,
            5 => Slot::S5,
            6 => Slot::S6,
            7 => Slot::S7,
            8 => Slot::S8,
            _ => unreachable!(),
        }
    };
    // Variable order: (0,1), (0,8), then gadgets 1..n with slots 1..8,
    // then (n+1,1), (n+1,2).
    let num_vars = (8 * n + 4) as usize;
    let pos = |k: u32, i: u32| -> VarId {
        if k == 0 {
            if i == 1 {
                0
            } else {
                1
            }
        } else if k <= n {
            (2 + 8 * (k - 1) + (i - 1)) as usize
        } else {
            (2 + 8 * n + (i - 1)) as usize
        }
    };
    let mut raw: Vec<(Vec<VarId>, i64)> = Vec::new();
    raw.push((vec![pos(0, 1), pos(0, 8)], 1));
    for k in 1..=n {
        for i in 1..=8 {
            raw.push((vec![pos(k, i)], 1));
        }
        for i in 1..=7 {
            raw.push((vec![pos(k, i), pos(k, i + 1)], 1));
        }
        for i in [2, 4, 6] {
            raw.push((vec![pos(k, i), pos(k - 1, 1)], 1));
        }
        for i in [3, 5, 7] {
            raw.push((vec![pos(k - 1, 8), pos(k, i)], 1));
        }
    }
    raw.push((vec![pos(n + 1, 1), pos(n + 1, 2)], 1));
    raw.push((vec![pos(n + 1, 1), pos(n, 1)], 1));

    let mut labels = vec![None; num_vars];
    labels[pos(0, 1)] = Some(VarLabel::new(0, Slot::S1));
    labels[pos(0, 8)] = Some(VarLabel::new(0, Slot::S8));
    for k in 1..=n {
        for i in 1..=8 {
            labels[pos(k, i)] = Some(VarLabel::new(k, ms_slot(i)));
        }
    }
    labels[pos(n + 1, 1)] = Some(VarLabel::new(n + 1, Slot::S1));
    labels[pos(n + 1, 2)] = Some(VarLabel::new(n + 1, Slot::S2));
    VcspInstance::with_labels(num_vars, raw, labels)
}
