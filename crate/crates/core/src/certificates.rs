//! Bundled width certificates for the three published max-cut/VCSP
//! constructions, transcribed verbatim from their sources:
//!
//! - the controlled-doubling gadget (path decomposition of width 3 and a
//!   `K_4` minor),
//! - the Michel–Scott (2024) max-cut gadget (claimed width-4 decomposition
//!   and `K_5` minor),
//! - the Monien–Tscheuschner (2010) max-cut gadget (claimed width-5
//!   decomposition and `K_5` minor; its edge set is published only as a
//!   figure, so only structural checks are possible).
//!
//! Transcriptions are canonical and are **not** corrected where the source
//! is defective; repaired variants ship separately under distinct ids so the
//! defects stay visible.

use crate::graphwidth::{MinorCertificate, PathDecomposition};

fn cd(k: u32, slot: &str) -> String {
    format!("{k}.{slot}")
}

/// The width-3 path decomposition of controlled-doubling gadget `k`
/// (5 bins of 4). First bin holds the interface to gadget `k+1`
/// (slots 1, B), last bin the interface to gadget `k−1` (slots 6, A).
pub fn cd_gadget_decomposition(k: u32) -> PathDecomposition {
    PathDecomposition::new(vec![
        vec![cd(k, "1"), cd(k, "B"), cd(k, "2"), cd(k, "4")],
        vec![cd(k, "B"), cd(k, "2"), cd(k, "4"), cd(k, "A")],
        vec![cd(k, "2"), cd(k, "4"), cd(k, "A"), cd(k, "3")],
        vec![cd(k, "4"), cd(k, "A"), cd(k, "3"), cd(k, "5")],
        vec![cd(k, "A"), cd(k, "3"), cd(k, "5"), cd(k, "6")],
    ])
}

/// The `K_4` minor of controlled-doubling gadget `k`.
pub fn cd_gadget_k4(k: u32) -> MinorCertificate {
    MinorCertificate {
        branch_sets: vec![
            vec![cd(k, "1")],
            vec![cd(k, "A"), cd(k, "2"), cd(k, "3")],
            vec![cd(k, "B")],
            vec![cd(k, "4"), cd(k, "5"), cd(k, "6")],
        ],
        target: 4,
    }
}

/// The vertex window of Michel–Scott gadget `k` used by its certificates:
/// the two boundary vertices `(k−1,1)`, `(k−1,8)` plus the gadget's eight.
pub fn ms_two_gadget_window(k: u32) -> Vec<String> {
    let mut v = vec![cd(k - 1, "1"), cd(k - 1, "8")];
    for i in 1..=8 {
        v.push(cd(k, &i.to_string()));
    }
    v
}

/// The claimed width-4 path decomposition of Michel–Scott gadget `k`,
/// verbatim. As published, vertices `(k,4)` and `(k,7)` occupy
/// non-contiguous bin intervals, so validation rejects it.
pub fn ms_gadget_decomposition(k: u32) -> PathDecomposition {
    PathDecomposition::new(vec![
        vec![cd(k - 1, "1"), cd(k - 1, "8"), cd(k, "6"), cd(k, "4"), cd(k, "5")],
        vec![cd(k - 1, "1"), cd(k - 1, "8"), cd(k, "6"), cd(k, "4"), cd(k, "3")],
        vec![cd(k - 1, "1"), cd(k - 1, "8"), cd(k, "6"), cd(k, "7"), cd(k, "3")],
        vec![cd(k - 1, "1"), cd(k, "2"), cd(k, "4"), cd(k, "3")],
        vec![cd(k, "1"), cd(k, "8"), cd(k, "2"), cd(k, "7")],
    ])
}

/// The Michel–Scott decomposition with the single-token repair that makes it
/// valid: the fourth bin's `(k,4)` — already finished two bins earlier —
/// replaced by `(k,7)`, closing both contiguity gaps. Width stays 4 and all
/// 14 window edges are covered.
pub fn ms_gadget_decomposition_repaired(k: u32) -> PathDecomposition {
    let mut pd = ms_gadget_decomposition(k);
    pd.bins[3] = vec![cd(k - 1, "1"), cd(k, "2"), cd(k, "7"), cd(k, "3")];
    pd
}

/// The claimed `K_5` minor of Michel–Scott gadget `k`, verbatim. On the
/// published structure the branch sets `{(k,1),(k,2),(k,3)}` and
/// `{(k,6),(k,7),(k,8)}` share no edge, so validation rejects it.
pub fn ms_gadget_k5(k: u32) -> MinorCertificate {
    MinorCertificate {
        branch_sets: vec![
            vec![cd(k - 1, "1")],
            vec![cd(k - 1, "8")],
            vec![cd(k, "1"), cd(k, "2"), cd(k, "3")],
            vec![cd(k, "4"), cd(k, "5")],
            vec![cd(k, "6"), cd(k, "7"), cd(k, "8")],
        ],
        target: 5,
    }
}

/// A valid `K_5` minor on the two-gadget Michel–Scott structure: the last
/// branch set of the verbatim certificate enlarged with `(2,7)` and `(2,6)`,
/// which connects it to `(1,1)` through the next gadget. Defined on the
/// `n = 2` structure with `k = 1`.
pub fn ms_gadget_k5_extended() -> MinorCertificate {
    MinorCertificate {
        branch_sets: vec![
            vec![cd(0, "1")],
            vec![cd(0, "8")],
            vec![cd(1, "1"), cd(1, "2"), cd(1, "3")],
            vec![cd(1, "4"), cd(1, "5")],
            vec![cd(1, "6"), cd(1, "7"), cd(1, "8"), cd(2, "7"), cd(2, "6")],
        ],
        target: 5,
    }
}

/// The claimed width-5 path decomposition of the Monien–Tscheuschner gadget,
/// verbatim (11 bins; bins 6 and 7 are printed identically). Vertex names
/// are normalized to letter-then-index (`4C` → `C4`, etc.) so contiguity is
/// mechanically checkable. The gadget's edge set is published only as a
/// figure, so edge coverage cannot be checked.
pub fn mt_decomposition() -> PathDecomposition {
    let b = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    PathDecomposition::new(vec![
        b(&["C0", "C1", "C2", "C3", "C4", "D0"]),
        b(&["C3", "C4", "C5", "C6", "D0", "F10"]),
        b(&["A6", "B6", "C6", "C10", "D0", "F10"]),
        b(&["C6", "C7", "C8", "C9", "C10", "F10"]),
        b(&["C6", "C8", "C10", "E14", "F10", "G12"]),
        b(&["C10", "E14", "F10", "G10", "G11", "G12"]),
        b(&["C10", "E14", "F10", "G10", "G11", "G12"]),
        b(&["C10", "D10", "E10", "E14", "F10", "G12"]),
        b(&["C10", "E14", "F12", "F13", "F14", "G12"]),
        b(&["C10", "C12", "D12", "D13", "F12"]),
        b(&["A12", "B12", "C12", "C13", "D13"]),
    ])
}

/// Interface vertices required in the first bin of [`mt_decomposition`].
pub fn mt_first_interface() -> Vec<String> {
    vec!["C0".into(), "D0".into()]
}

/// Interface vertices required in the last bin of [`mt_decomposition`].
pub fn mt_last_interface() -> Vec<String> {
    vec!["C13".into(), "D13".into()]
}

/// The claimed `K_5` minor of the Monien–Tscheuschner gadget, verbatim.
/// Structure-only checks apply (edge set unavailable).
pub fn mt_k5() -> MinorCertificate {
    let b = |names: &[&str]| names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    MinorCertificate {
        branch_sets: vec![
            b(&["C0", "D0", "C1", "C2", "C3", "C4", "C5", "C6", "B6", "A6"]),
            b(&["C10", "C9", "D10", "E10"]),
            b(&["F10", "G10", "G11"]),
            b(&["C7", "C8", "E14", "D13", "C13"]),
            b(&["G12", "F12", "F13", "F14", "D12", "C12", "B12", "A12"]),
        ],
        target: 5,
    }
}

/// All vertex names appearing in the Monien–Tscheuschner certificates,
/// for building a vertices-only hypergraph.
pub fn mt_vertex_universe() -> Vec<String> {
    let mut names: Vec<String> = mt_decomposition().vertex_union().into_iter().collect();
    for set in mt_k5().branch_sets {
        for v in set {
            if !names.contains(&v) {
                names.push(v);
            }
        }
    }
    names.sort();
    names
}

/// A bundled decomposition with the context needed to validate it.
#[derive(Debug, Clone)]
pub struct NamedDecomposition {
    pub id: &'static str,
    pub description: &'static str,
    pub decomposition: PathDecomposition,
    /// False when the owning structure's edge set is unavailable.
    pub edges_available: bool,
    pub first_interface: Vec<String>,
    pub last_interface: Vec<String>,
}

/// A bundled minor certificate with the context needed to validate it.
#[derive(Debug, Clone)]
pub struct NamedMinor {
    pub id: &'static str,
    pub description: &'static str,
    pub certificate: MinorCertificate,
    pub edges_available: bool,
}

/// Every bundled certificate under its stable artifact id. Gadget-indexed
/// certificates are instantiated at `k = 1`.
pub fn bundled_certificates() -> (Vec<NamedDecomposition>, Vec<NamedMinor>) {
    let decompositions = vec![
        NamedDecomposition {
            id: "prop3",
            description: "controlled-doubling gadget, width-3 path decomposition",
            decomposition: cd_gadget_decomposition(1),
            edges_available: true,
            first_interface: vec![cd(1, "1"), cd(1, "B")],
            last_interface: vec![cd(1, "6"), cd(1, "A")],
        },
        NamedDecomposition {
            id: "prop2",
            description: "Michel–Scott gadget, claimed width-4 path decomposition (verbatim)",
            decomposition: ms_gadget_decomposition(1),
            edges_available: true,
            first_interface: vec![cd(0, "1"), cd(0, "8")],
            last_interface: vec![cd(1, "1"), cd(1, "8")],
        },
        NamedDecomposition {
            id: "prop2-repaired",
            description: "Michel–Scott gadget decomposition, single-token contiguity repair",
            decomposition: ms_gadget_decomposition_repaired(1),
            edges_available: true,
            first_interface: vec![cd(0, "1"), cd(0, "8")],
            last_interface: vec![cd(1, "1"), cd(1, "8")],
        },
        NamedDecomposition {
            id: "prop1",
            description: "Monien–Tscheuschner gadget, claimed width-5 path decomposition \
                          (edge set unavailable; structural checks only)",
            decomposition: mt_decomposition(),
            edges_available: false,
            first_interface: mt_first_interface(),
            last_interface: mt_last_interface(),
        },
    ];
    let minors = vec![
        NamedMinor {
            id: "prop3-k4",
            description: "controlled-doubling gadget, K4 minor",
            certificate: cd_gadget_k4(1),
            edges_available: true,
        },
        NamedMinor {
            id: "prop2-k5",
            description: "Michel–Scott gadget, claimed K5 minor (verbatim)",
            certificate: ms_gadget_k5(1),
            edges_available: true,
        },
        NamedMinor {
            id: "prop2-k5-extended",
            description: "Michel–Scott two-gadget structure, K5 minor with enlarged last branch set",
            certificate: ms_gadget_k5_extended(),
            edges_available: true,
        },
        NamedMinor {
            id: "prop1-k5",
            description: "Monien–Tscheuschner gadget, claimed K5 minor \
                          (edge set unavailable; structural checks only)",
            certificate: mt_k5(),
            edges_available: false,
        },
    ];
    (decompositions, minors)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::constructions::build_ms_scopes;
    use crate::graphwidth::{
        exact_pathwidth, validate_decomposition, validate_minor,
        validate_minor_structure_only, Hypergraph,
    };

    fn ms_window_hypergraph() -> Hypergraph {
        let inst = build_ms_scopes(2).unwrap();
        let keep: BTreeSet<String> = ms_two_gadget_window(1).into_iter().collect();
        inst.hypergraph().induced(&keep).unwrap()
    }

    #[test]
    fn ms_window_has_fourteen_edges() {
        assert_eq!(ms_window_hypergraph().edge_count(), 14);
    }

    #[test]
    fn verbatim_ms_decomposition_is_rejected_for_contiguity() {
        let hg = ms_window_hypergraph();
        let pd = ms_gadget_decomposition(1);
        let report = validate_decomposition(&hg, &pd, &[], &[]).unwrap();
        assert!(!report.valid);
        assert_eq!(report.width, 4);
        // Exactly the two published gaps: (1,4) and (1,7).
        let noncontig: Vec<&String> = report
            .violations
            .iter()
            .filter(|v| v.contains("non-contiguous"))
            .collect();
        assert_eq!(noncontig.len(), 2, "{:?}", report.violations);
        assert!(noncontig.iter().any(|v| v.contains("\"1.4\"")));
        assert!(noncontig.iter().any(|v| v.contains("\"1.7\"")));
    }

    #[test]
    fn repaired_ms_decomposition_is_valid_width_four() {
        let hg = ms_window_hypergraph();
        let pd = ms_gadget_decomposition_repaired(1);
        let report = validate_decomposition(
            &hg,
            &pd,
            &[cd(0, "1"), cd(0, "8")],
            &[cd(1, "1"), cd(1, "8")],
        )
        .unwrap();
        assert!(report.valid, "violations: {:?}", report.violations);
        assert_eq!(report.width, 4);
    }

    #[test]
    fn verbatim_ms_k5_is_rejected_for_one_missing_adjacency() {
        let inst = build_ms_scopes(2).unwrap();
        let g = inst.primal_graph();
        let report = validate_minor(&g, &ms_gadget_k5(1)).unwrap();
        assert!(!report.valid);
        assert_eq!(
            report.violations,
            vec!["branch sets 2 and 4 have no connecting edge".to_string()]
        );
    }

    #[test]
    fn extended_ms_k5_is_valid() {
        let inst = build_ms_scopes(2).unwrap();
        let g = inst.primal_graph();
        let report = validate_minor(&g, &ms_gadget_k5_extended()).unwrap();
        assert!(report.valid, "violations: {:?}", report.violations);
        // Soundness pairing: an accepted K5 forces pathwidth ≥ 4.
        assert!(exact_pathwidth(&g).unwrap() >= 4);
    }

    #[test]
    fn mt_certificates_pass_structural_checks() {
        let hg = Hypergraph::vertices_only(mt_vertex_universe());
        let pd = mt_decomposition();
        let report =
            validate_decomposition(&hg, &pd, &mt_first_interface(), &mt_last_interface()).unwrap();
        assert!(report.valid, "violations: {:?}", report.violations);
        assert_eq!(report.width, 5);
        assert!(!report.edge_coverage_checked);

        let minor = validate_minor_structure_only(&mt_k5());
        assert!(minor.valid, "violations: {:?}", minor.violations);
    }

    #[test]
    fn mt_k5_vertices_are_known() {
        let universe: BTreeSet<String> = mt_vertex_universe().into_iter().collect();
        for set in mt_k5().branch_sets {
            for v in set {
                assert!(universe.contains(&v));
            }
        }
        // 30 distinct vertices across the bundled MT artifacts.
        assert_eq!(universe.len(), 30);
    }

    #[test]
    fn bundle_is_complete() {
        let (decomps, minors) = bundled_certificates();
        let dids: Vec<_> = decomps.iter().map(|d| d.id).collect();
        let mids: Vec<_> = minors.iter().map(|m| m.id).collect();
        assert_eq!(dids, vec!["prop3", "prop2", "prop2-repaired", "prop1"]);
        assert_eq!(
            mids,
            vec!["prop3-k4", "prop2-k5", "prop2-k5-extended", "prop1-k5"]
        );
    }
}
