//! Core data model: Boolean VCSP instances, assignments, fitness evaluation
//! and single-flip delta computation.
//!
//! An instance is a set of weighted scopes over Boolean variables; its fitness
//! function is `f(x) = Σ_S C(S) · Π_{i∈S} x_i` with exact 64-bit integer
//! arithmetic. The same object doubles as a constraint hypergraph for the
//! width tooling in [`crate::graphwidth`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphwidth::{Graph, Hypergraph};

/// Position of a variable in the canonical variable order of an instance.
pub type VarId = usize;

/// Slot of a variable inside an 8-variable gadget.
///
/// Controlled-doubling gadgets use slots `1..=6` plus the control slots `A`
/// and `B`; the Michel–Scott structure uses slots `1..=8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
    A,
    B,
}

impl Slot {
    /// The eight slots of a controlled-doubling gadget, in canonical order.
    pub const CD_ORDER: [Slot; 8] = [
        Slot::S1,
        Slot::S2,
        Slot::S3,
        Slot::S4,
        Slot::S5,
        Slot::S6,
        Slot::A,
        Slot::B,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Slot::S1 => "1",
            Slot::S2 => "2",
            Slot::S3 => "3",
            Slot::S4 => "4",
            Slot::S5 => "5",
            Slot::S6 => "6",
            Slot::S7 => "7",
            Slot::S8 => "8",
            Slot::A => "A",
            Slot::B => "B",
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Slot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "1" => Slot::S1,
            "2" => Slot::S2,
            "3" => Slot::S3,
            "4" => Slot::S4,
            "5" => Slot::S5,
            "6" => Slot::S6,
            "7" => Slot::S7,
            "8" => Slot::S8,
            "A" => Slot::A,
            "B" => Slot::B,
            other => return Err(Error::InvalidInstance(format!("unknown slot {other:?}"))),
        })
    }
}

impl Serialize for Slot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Slot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Structured label attaching a variable to a gadget position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarLabel {
    pub gadget: u32,
    pub slot: Slot,
}

impl VarLabel {
    pub fn new(gadget: u32, slot: Slot) -> Self {
        VarLabel { gadget, slot }
    }

    /// Canonical vertex name `"<gadget>.<slot>"` used by the width tooling.
    pub fn vertex_name(&self) -> String {
        format!("{}.{}", self.gadget, self.slot)
    }
}

/// A weighted scope: a nonempty set of distinct variables and a 64-bit weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    /// Sorted, duplicate-free variable ids.
    pub scope: Vec<VarId>,
    pub weight: i64,
}

impl Constraint {
    pub fn new(scope: Vec<VarId>, weight: i64) -> Self {
        Constraint { scope, weight }
    }

    pub fn arity(&self) -> usize {
        self.scope.len()
    }
}

/// A fixed-length Boolean assignment.
///
/// Serializes as a bit string (`"0110…"`) in the canonical variable order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn zeros(len: usize) -> Self {
        Assignment {
            bits: vec![false; len],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, v: VarId) -> bool {
        self.bits[v]
    }

    pub fn set(&mut self, v: VarId, value: bool) {
        self.bits[v] = value;
    }

    pub fn flip(&mut self, v: VarId) {
        self.bits[v] = !self.bits[v];
    }

    /// A copy with variable `v` flipped.
    pub fn flipped(&self, v: VarId) -> Self {
        let mut out = self.clone();
        out.flip(v);
        out
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Assignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::InvalidInstance(format!(
                        "assignment strings may contain only 0/1, found {other:?}"
                    )))
                }
            }
        }
        Ok(Assignment { bits })
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Assignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An immutable Boolean VCSP instance.
///
/// Invariants enforced at construction:
/// - every scope references only valid variables, is nonempty, and has no
///   duplicate variables;
/// - no two constraints share the identical scope set (equal scopes are merged
///   by summing their weights at build time);
/// - scopes are stored sorted by variable id, constraints sorted by scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcspInstance {
    num_vars: usize,
    constraints: Vec<Constraint>,
    labels: Vec<Option<VarLabel>>,
    by_var: Vec<Vec<u32>>,
}

impl VcspInstance {
    /// Builds an instance from raw `(scope, weight)` pairs, merging duplicate
    /// scopes by summing their weights.
    pub fn new(num_vars: usize, raw: Vec<(Vec<VarId>, i64)>) -> Result<Self> {
        Self::with_labels(num_vars, raw, vec![None; num_vars])
    }

    /// As [`VcspInstance::new`], additionally attaching per-variable labels.
    pub fn with_labels(
        num_vars: usize,
        raw: Vec<(Vec<VarId>, i64)>,
        labels: Vec<Option<VarLabel>>,
    ) -> Result<Self> {
        if labels.len() != num_vars {
            return Err(Error::InvalidInstance(format!(
                "{} labels for {} variables",
                labels.len(),
                num_vars
            )));
        }
        let mut merged: BTreeMap<Vec<VarId>, i64> = BTreeMap::new();
        for (mut scope, weight) in raw {
            if scope.is_empty() {
                return Err(Error::InvalidInstance("empty scope".into()));
            }
            scope.sort_unstable();
            if scope.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInstance(format!(
                    "duplicate variable in scope {scope:?}"
                )));
            }
            if let Some(&v) = scope.last() {
                if v >= num_vars {
                    return Err(Error::InvalidVariable(v));
                }
            }
            let slot = merged.entry(scope).or_insert(0);
            *slot = slot
                .checked_add(weight)
                .ok_or(Error::ArithmeticOverflow)?;
        }
        let constraints: Vec<Constraint> = merged
            .into_iter()
            .map(|(scope, weight)| Constraint { scope, weight })
            .collect();
        let mut by_var = vec![Vec::new(); num_vars];
        for (ci, c) in constraints.iter().enumerate() {
            for &v in &c.scope {
                by_var[v].push(ci as u32);
            }
        }
        Ok(VcspInstance {
            num_vars,
            constraints,
            labels,
            by_var,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn label(&self, v: VarId) -> Option<VarLabel> {
        self.labels.get(v).copied().flatten()
    }

    /// Canonical vertex name of variable `v`: the label's `"<k>.<slot>"` when
    /// labelled, otherwise the bare index.
    pub fn vertex_name(&self, v: VarId) -> String {
        match self.label(v) {
            Some(l) => l.vertex_name(),
            None => v.to_string(),
        }
    }

    /// The variable carrying label `(gadget, slot)`, if any.
    pub fn var_by_label(&self, gadget: u32, slot: Slot) -> Option<VarId> {
        self.labels
            .iter()
            .position(|l| matches!(l, Some(l) if l.gadget == gadget && l.slot == slot))
    }

    fn check_len(&self, x: &Assignment) -> Result<()> {
        if x.len() != self.num_vars {
            return Err(Error::LengthMismatch {
                expected: self.num_vars,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Exact fitness `Σ_S C(S) Π_{i∈S} x_i`; overflow is an error.
    pub fn evaluate(&self, x: &Assignment) -> Result<i64> {
        self.check_len(x)?;
        let mut acc: i64 = 0;
        for c in &self.constraints {
            if c.scope.iter().all(|&v| x.get(v)) {
                acc = acc.checked_add(c.weight).ok_or(Error::ArithmeticOverflow)?;
            }
        }
        Ok(acc)
    }

    /// Fitness change caused by flipping variable `v`, computed incrementally
    /// from the constraints containing `v` only.
    pub fn flip_delta(&self, x: &Assignment, v: VarId) -> Result<i64> {
        if v >= self.num_vars {
            return Err(Error::InvalidVariable(v));
        }
        self.check_len(x)?;
        let mut acc: i64 = 0;
        for &ci in &self.by_var[v] {
            let c = &self.constraints[ci as usize];
            if c.scope.iter().all(|&u| u == v || x.get(u)) {
                acc = acc.checked_add(c.weight).ok_or(Error::ArithmeticOverflow)?;
            }
        }
        if x.get(v) {
            acc.checked_neg().ok_or(Error::ArithmeticOverflow)
        } else {
            Ok(acc)
        }
    }

    /// All strictly improving single flips at `x`, sorted by variable id.
    /// Empty exactly when `x` is a local peak.
    pub fn improving_moves(&self, x: &Assignment) -> Result<Vec<(VarId, i64)>> {
        self.check_len(x)?;
        let mut out = Vec::new();
        for v in 0..self.num_vars {
            let d = self.flip_delta(x, v)?;
            if d > 0 {
                out.push((v, d));
            }
        }
        Ok(out)
    }

    /// Whether `x` is a local peak (no strictly improving flip).
    pub fn is_peak(&self, x: &Assignment) -> Result<bool> {
        self.check_len(x)?;
        for v in 0..self.num_vars {
            if self.flip_delta(x, v)? > 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The constraint hypergraph, with canonical vertex names.
    pub fn hypergraph(&self) -> Hypergraph {
        let names: Vec<String> = (0..self.num_vars).map(|v| self.vertex_name(v)).collect();
        let edges: Vec<Vec<usize>> = self
            .constraints
            .iter()
            .filter(|c| c.arity() >= 2)
            .map(|c| c.scope.clone())
            .collect();
        Hypergraph::from_indexed(names, edges)
    }

    /// The primal graph (2-section): variables are vertices and two variables
    /// are adjacent iff they co-occur in some scope.
    pub fn primal_graph(&self) -> Graph {
        self.hypergraph().primal()
    }

    /// Serializes to the JSON wire format.
    pub fn to_json(&self) -> String {
        let wire = WireInstance {
            num_vars: self.num_vars,
            labels: self
                .labels
                .iter()
                .enumerate()
                .filter_map(|(v, l)| {
                    l.map(|l| WireLabel {
                        var: v,
                        gadget: l.gadget,
                        slot: l.slot,
                    })
                })
                .collect(),
            constraints: self.constraints.clone(),
        };
        serde_json::to_string_pretty(&wire).expect("instance serialization cannot fail")
    }

    /// Parses the JSON wire format.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: WireInstance = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInstance(format!("JSON parse error: {e}")))?;
        let mut labels = vec![None; wire.num_vars];
        for l in wire.labels {
            if l.var >= wire.num_vars {
                return Err(Error::InvalidVariable(l.var));
            }
            labels[l.var] = Some(VarLabel::new(l.gadget, l.slot));
        }
        VcspInstance::with_labels(
            wire.num_vars,
            wire.constraints
                .into_iter()
                .map(|c| (c.scope, c.weight))
                .collect(),
            labels,
        )
    }

    /// GraphViz DOT rendering of the primal structure with weight labels:
    /// unary weights annotate nodes, binary constraints become solid labelled
    /// edges, ternary constraints become dashed triangles.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::from("graph vcsp {\n  node [shape=ellipse];\n");
        let mut unary = vec![None; self.num_vars];
        for c in &self.constraints {
            if c.arity() == 1 {
                unary[c.scope[0]] = Some(c.weight);
            }
        }
        for v in 0..self.num_vars {
            let name = self.vertex_name(v);
            match unary[v] {
                Some(w) => {
                    let _ = writeln!(out, "  \"{name}\" [label=\"{name}\\n{w}\"];");
                }
                None => {
                    let _ = writeln!(out, "  \"{name}\" [label=\"{name}\"];");
                }
            }
        }
        for c in &self.constraints {
            match c.arity() {
                2 => {
                    let _ = writeln!(
                        out,
                        "  \"{}\" -- \"{}\" [label=\"{}\"];",
                        self.vertex_name(c.scope[0]),
                        self.vertex_name(c.scope[1]),
                        c.weight
                    );
                }
                a if a >= 3 => {
                    for i in 0..c.scope.len() {
                        for j in (i + 1)..c.scope.len() {
                            let _ = writeln!(
                                out,
                                "  \"{}\" -- \"{}\" [style=dashed, label=\"{}\"];",
                                self.vertex_name(c.scope[i]),
                                self.vertex_name(c.scope[j]),
                                c.weight
                            );
                        }
                    }
                }
                _ => {}
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct WireLabel {
    var: usize,
    gadget: u32,
    slot: Slot,
}

#[derive(Serialize, Deserialize)]
struct WireInstance {
    num_vars: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    labels: Vec<WireLabel>,
    constraints: Vec<Constraint>,
}
