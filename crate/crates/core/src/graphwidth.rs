//! Width evidence: path-decomposition validation, clique-minor certificate
//! validation, exact pathwidth for small graphs, and composition of
//! per-gadget decompositions into whole-chain decompositions.
//!
//! All vertex-facing APIs speak named vertices (`"<gadget>.<slot>"` for
//! generated instances) so that certificate files stay readable.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph over named vertices.
#[derive(Debug, Clone)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new(names: Vec<String>) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let adj = vec![BTreeSet::new(); names.len()];
        Graph { names, index, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn add_edge_by_name(&mut self, u: &str, v: &str) -> Result<()> {
        let (u, v) = (self.index_of(u)?, self.index_of(v)?);
        self.add_edge(u, v);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn neighbor_names(&self, v: &str) -> Result<Vec<String>> {
        let v = self.index_of(v)?;
        Ok(self.adj[v].iter().map(|&u| self.names[u].clone()).collect())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The subgraph induced by the named vertex set.
    pub fn induced(&self, keep: &BTreeSet<String>) -> Result<Graph> {
        let mut kept: Vec<usize> = Vec::new();
        for name in keep {
            kept.push(self.index_of(name)?);
        }
        kept.sort_unstable();
        let names: Vec<String> = kept.iter().map(|&i| self.names[i].clone()).collect();
        let mut g = Graph::new(names);
        let back: HashMap<usize, usize> =
            kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        for (pos, &old) in kept.iter().enumerate() {
            for &nbr in &self.adj[old] {
                if let Some(&n) = back.get(&nbr) {
                    g.add_edge(pos, n);
                }
            }
        }
        Ok(g)
    }
}

/// A hypergraph over named vertices; hyperedges are vertex sets of size ≥ 2.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<BTreeSet<usize>>,
}

impl Hypergraph {
    pub fn from_indexed(names: Vec<String>, edges: Vec<Vec<usize>>) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut dedup: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for e in edges {
            dedup.insert(e.into_iter().collect());
        }
        Hypergraph {
            names,
            index,
            edges: dedup.into_iter().collect(),
        }
    }

    /// A hypergraph with vertices only (used when the edge set of a published
    /// structure is unavailable and only structural checks are possible).
    pub fn vertices_only(names: Vec<String>) -> Self {
        Hypergraph::from_indexed(names, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// The 2-section: every pair of vertices sharing a hyperedge is adjacent.
    pub fn primal(&self) -> Graph {
        let mut g = Graph::new(self.names.clone());
        for e in &self.edges {
            let vs: Vec<usize> = e.iter().copied().collect();
            for i in 0..vs.len() {
                for j in (i + 1)..vs.len() {
                    g.add_edge(vs[i], vs[j]);
                }
            }
        }
        g
    }

    /// The sub-hypergraph induced by the named vertex set (hyperedges fully
    /// inside the set are kept).
    pub fn induced(&self, keep: &BTreeSet<String>) -> Result<Hypergraph> {
        let mut kept: Vec<usize> = Vec::new();
        for name in keep {
            kept.push(self.index_of(name)?);
        }
        kept.sort_unstable();
        let back: HashMap<usize, usize> =
            kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let names: Vec<String> = kept.iter().map(|&i| self.names[i].clone()).collect();
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|v| back.contains_key(v)))
            .map(|e| e.iter().map(|v| back[v]).collect())
            .collect();
        Ok(Hypergraph::from_indexed(names, edges))
    }
}

/// An ordered sequence of vertex bins.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bins: Vec<Vec<String>>,
}

impl PathDecomposition {
    pub fn new(bins: Vec<Vec<String>>) -> Self {
        PathDecomposition { bins }
    }

    /// One less than the largest bin size (0 for an empty decomposition).
    pub fn width(&self) -> usize {
        self.bins
            .iter()
            .map(|b| b.len())
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// All vertices mentioned in any bin.
    pub fn vertex_union(&self) -> BTreeSet<String> {
        self.bins.iter().flatten().cloned().collect()
    }
}

/// Disjoint branch sets claiming a `K_target` minor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorCertificate {
    pub branch_sets: Vec<Vec<String>>,
    pub target: usize,
}

/// Outcome of [`validate_decomposition`].
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub valid: bool,
    pub width: usize,
    pub violations: Vec<String>,
    /// False when the underlying structure ships without an edge set, in
    /// which case hyperedge coverage is skipped.
    pub edge_coverage_checked: bool,
}

/// Checks the three path-decomposition properties — vertex coverage,
/// hyperedge containment in some bin, and contiguity of every vertex's bin
/// interval — plus the two chain-interface requirements (the first bin must
/// contain `first_must_contain`, the last bin `last_must_contain`; empty sets
/// are always satisfied). Returns the width and an itemized violation list.
pub fn validate_decomposition(
    hg: &Hypergraph,
    pd: &PathDecomposition,
    first_must_contain: &[String],
    last_must_contain: &[String],
) -> Result<DecompositionReport> {
    let mut violations = Vec::new();
    // Resolve bins; unknown vertex names are hard errors.
    let mut bins: Vec<BTreeSet<usize>> = Vec::with_capacity(pd.bins.len());
    for bin in &pd.bins {
        let mut b = BTreeSet::new();
        for name in bin {
            b.insert(hg.index_of(name)?);
        }
        bins.push(b);
    }
    if bins.is_empty() {
        violations.push("decomposition has no bins".to_string());
    }
    // Vertex coverage and contiguity.
    for v in 0..hg.vertex_count() {
        let positions: Vec<usize> = bins
            .iter()
            .enumerate()
            .filter_map(|(i, b)| b.contains(&v).then_some(i))
            .collect();
        match (positions.first(), positions.last()) {
            (None, _) => violations.push(format!("vertex {:?} is in no bin", hg.names[v])),
            (Some(&lo), Some(&hi)) => {
                if positions.len() != hi - lo + 1 {
                    violations.push(format!(
                        "vertex {:?} occupies a non-contiguous bin interval {positions:?}",
                        hg.names[v]
                    ));
                }
            }
            _ => unreachable!(),
        }
    }
    // Hyperedge containment.
    let edge_coverage_checked = hg.has_edges();
    for e in &hg.edges {
        if !bins.iter().any(|b| e.is_subset(b)) {
            let names: Vec<&str> = e.iter().map(|&v| hg.names[v].as_str()).collect();
            violations.push(format!("hyperedge {names:?} is contained in no bin"));
        }
    }
    // Interface sets.
    for (what, set, bin) in [
        ("first", first_must_contain, bins.first()),
        ("last", last_must_contain, bins.last()),
    ] {
        if let Some(bin) = bin {
            for name in set {
                let v = hg.index_of(name)?;
                if !bin.contains(&v) {
                    violations.push(format!("{what} bin is missing interface vertex {name:?}"));
                }
            }
        }
    }
    Ok(DecompositionReport {
        valid: violations.is_empty(),
        width: pd.width(),
        violations,
        edge_coverage_checked,
    })
}

/// Outcome of [`validate_minor`].
#[derive(Debug, Clone, Serialize)]
pub struct MinorReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Validates a clique-minor certificate on a simple graph: the branch sets
/// must be nonempty, pairwise disjoint, each inducing a connected subgraph,
/// and every pair of branch sets must be joined by at least one edge.
pub fn validate_minor(g: &Graph, cert: &MinorCertificate) -> Result<MinorReport> {
    let mut violations = Vec::new();
    let mut sets: Vec<BTreeSet<usize>> = Vec::new();
    for set in &cert.branch_sets {
        let mut s = BTreeSet::new();
        for name in set {
            s.insert(g.index_of(name)?);
        }
        sets.push(s);
    }
    if sets.len() != cert.target {
        violations.push(format!(
            "certificate claims K_{} but provides {} branch sets",
            cert.target,
            sets.len()
        ));
    }
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            violations.push(format!("branch set {i} is empty"));
            continue;
        }
        // Connectivity by BFS within the set.
        let start = *s.iter().next().unwrap();
        let mut seen = BTreeSet::from([start]);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for &v in g.neighbors(u) {
                if s.contains(&v) && seen.insert(v) {
                    queue.push(v);
                }
            }
        }
        if seen.len() != s.len() {
            violations.push(format!("branch set {i} does not induce a connected subgraph"));
        }
    }
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            if !sets[i].is_disjoint(&sets[j]) {
                violations.push(format!("branch sets {i} and {j} overlap"));
                continue;
            }
            let joined = sets[i]
                .iter()
                .any(|&u| g.neighbors(u).iter().any(|v| sets[j].contains(v)));
            if !joined {
                violations.push(format!("branch sets {i} and {j} have no connecting edge"));
            }
        }
    }
    Ok(MinorReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// Structural validation for certificates whose edge set is unavailable:
/// only branch-set count, nonemptiness, and pairwise disjointness can be
/// checked. The report says so explicitly.
pub fn validate_minor_structure_only(cert: &MinorCertificate) -> MinorReport {
    let mut violations = Vec::new();
    if cert.branch_sets.len() != cert.target {
        violations.push(format!(
            "certificate claims K_{} but provides {} branch sets",
            cert.target,
            cert.branch_sets.len()
        ));
    }
    let sets: Vec<BTreeSet<&String>> = cert
        .branch_sets
        .iter()
        .map(|s| s.iter().collect())
        .collect();
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            violations.push(format!("branch set {i} is empty"));
        }
        for (j, t) in sets.iter().enumerate().skip(i + 1) {
            if !s.is_disjoint(t) {
                violations.push(format!("branch sets {i} and {j} overlap"));
            }
        }
    }
    MinorReport {
        valid: violations.is_empty(),
        violations,
    }
}

/// Hard cap for [`exact_pathwidth`]: the subset DP table holds `2^|V|` bytes.
pub const MAX_EXACT_PATHWIDTH_VERTICES: usize = 22;

/// Exact pathwidth via the vertex-separation formulation: the minimum over
/// linear orders of the maximum boundary size, computed by dynamic
/// programming over vertex subsets (`f(S) = max(min_{v∈S} f(S∖v), ∂S)`).
pub fn exact_pathwidth(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > MAX_EXACT_PATHWIDTH_VERTICES {
        return Err(Error::TooLarge(format!(
            "exact pathwidth supports at most {MAX_EXACT_PATHWIDTH_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let mut f = vec![0u8; 1usize << n];
    for set in 1..=full {
        // Boundary: vertices in `set` with a neighbor outside it.
        let mut boundary = 0u8;
        let mut t = set;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            if adj[v] & !set & full != 0 {
                boundary += 1;
            }
        }
        let mut best = u8::MAX;
        let mut t = set;
        while t != 0 {
            let v = t.trailing_zeros();
            t &= t - 1;
            best = best.min(f[(set ^ (1 << v)) as usize]);
        }
        f[set as usize] = best.max(boundary);
    }
    Ok(usize::from(f[full as usize]))
}

/// Converts a linear vertex order into the standard path decomposition whose
/// width equals the order's vertex separation: bin `t` holds `order[t]` plus
/// every earlier vertex that still has a neighbor at position ≥ `t`.
pub fn order_to_decomposition(g: &Graph, order: &[usize]) -> PathDecomposition {
    let position: HashMap<usize, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut bins = Vec::with_capacity(order.len());
    for (t, &vt) in order.iter().enumerate() {
        let mut bin = vec![g.names()[vt].clone()];
        for &u in &order[..t] {
            if g.neighbors(u).iter().any(|w| position[w] >= t) {
                bin.push(g.names()[u].clone());
            }
        }
        bins.push(bin);
    }
    PathDecomposition::new(bins)
}

/// Concatenates per-gadget decompositions into a whole-chain decomposition.
///
/// Consecutive parts are stitched with a junction bin holding the endpoints
/// of every hyperedge that crosses between them; for this to preserve
/// contiguity, the crossing endpoints must already sit in the last bin of the
/// earlier part and the first bin of the later part. Any vertex outside all
/// parts, overlap between parts, or hyperedge spanning non-consecutive parts
/// is an [`Error::InterfaceMismatch`].
pub fn compose_chain_decomposition(
    hg: &Hypergraph,
    parts: &[PathDecomposition],
) -> Result<PathDecomposition> {
    if parts.is_empty() {
        return Err(Error::InterfaceMismatch("no parts to compose".into()));
    }
    if parts.len() == 1 {
        return Ok(parts[0].clone());
    }
    // Assign every vertex to exactly one part.
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (pi, part) in parts.iter().enumerate() {
        for name in part.vertex_union() {
            let v = hg.index_of(&name)?;
            if let Some(prev) = owner.insert(v, pi) {
                return Err(Error::InterfaceMismatch(format!(
                    "vertex {name:?} appears in parts {prev} and {pi}"
                )));
            }
        }
    }
    for (v, name) in hg.names().iter().enumerate() {
        if !owner.contains_key(&v) {
            return Err(Error::InterfaceMismatch(format!(
                "vertex {name:?} is covered by no part"
            )));
        }
    }
    // Junction vertex sets between consecutive parts.
    let mut junctions: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); parts.len() - 1];
    for e in &hg.edges {
        let mut ps: Vec<usize> = e.iter().map(|v| owner[v]).collect();
        ps.sort_unstable();
        ps.dedup();
        match ps.as_slice() {
            [_] => {}
            [a, b] if b == &(a + 1) => junctions[*a].extend(e.iter().copied()),
            _ => {
                let names: Vec<&str> = e.iter().map(|&v| hg.names()[v].as_str()).collect();
                return Err(Error::InterfaceMismatch(format!(
                    "hyperedge {names:?} spans non-consecutive parts {ps:?}"
                )));
            }
        }
    }
    // Crossing endpoints must live in the facing boundary bins.
    for (i, junction) in junctions.iter().enumerate() {
        let last: BTreeSet<String> = parts[i]
            .bins
            .last()
            .map(|b| b.iter().cloned().collect())
            .unwrap_or_default();
        let first: BTreeSet<String> = parts[i + 1]
            .bins
            .first()
            .map(|b| b.iter().cloned().collect())
            .unwrap_or_default();
        for &v in junction {
            let name = &hg.names()[v];
            let home = owner[&v];
            let ok = if home == i {
                last.contains(name)
            } else {
                first.contains(name)
            };
            if !ok {
                return Err(Error::InterfaceMismatch(format!(
                    "crossing vertex {name:?} is absent from the facing boundary bin of part {home}"
                )));
            }
        }
    }
    // Concatenate with junction bins in between.
    let mut bins = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        bins.extend(part.bins.iter().cloned());
        if i + 1 < parts.len() && !junctions[i].is_empty() {
            bins.push(
                junctions[i]
                    .iter()
                    .map(|&v| hg.names()[v].clone())
                    .collect(),
            );
        }
    }
    Ok(PathDecomposition::new(bins))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates;
    use crate::constructions::{build_cd_gadget, build_ms_scopes, BridgeConvention, GadgetBoundary};

    fn path3() -> Graph {
        let mut g = Graph::new(vec!["a".into(), "b".into(), "c".into()]);
        g.add_edge_by_name("a", "b").unwrap();
        g.add_edge_by_name("b", "c").unwrap();
        g
    }

    #[test]
    fn pathwidth_of_small_graphs() {
        assert_eq!(exact_pathwidth(&path3()).unwrap(), 1);

        let mut k4 = Graph::new((0..4).map(|i| i.to_string()).collect());
        for i in 0..4 {
            for j in (i + 1)..4 {
                g_add(&mut k4, i, j);
            }
        }
        assert_eq!(exact_pathwidth(&k4).unwrap(), 3);

        let empty = Graph::new(vec!["x".into()]);
        assert_eq!(exact_pathwidth(&empty).unwrap(), 0);
    }

    fn g_add(g: &mut Graph, u: usize, v: usize) {
        g.add_edge(u, v);
    }

    #[test]
    fn pathwidth_caps_vertex_count() {
        let g = Graph::new((0..23).map(|i| i.to_string()).collect());
        assert!(matches!(exact_pathwidth(&g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn cd_gadget_primal_pathwidth_is_three() {
        let inst =
            build_cd_gadget(1, 1, GadgetBoundary::default(), BridgeConvention::ASide).unwrap();
        assert_eq!(exact_pathwidth(&inst.primal_graph()).unwrap(), 3);
    }

    #[test]
    fn ms_structure_pathwidths() {
        // Frozen by the subset DP: the one-gadget structure has pathwidth 3,
        // the two-gadget structure pathwidth 4.
        let g1 = build_ms_scopes(1).unwrap().primal_graph();
        assert_eq!(exact_pathwidth(&g1).unwrap(), 3);
        let g2 = build_ms_scopes(2).unwrap().primal_graph();
        assert_eq!(exact_pathwidth(&g2).unwrap(), 4);
    }

    #[test]
    fn decomposition_validation_accepts_and_rejects() {
        let inst =
            build_cd_gadget(1, 1, GadgetBoundary::default(), BridgeConvention::ASide).unwrap();
        let hg = inst.hypergraph();
        let pd = certificates::cd_gadget_decomposition(1);
        let report = validate_decomposition(
            &hg,
            &pd,
            &["1.1".into(), "1.B".into()],
            &["1.6".into(), "1.A".into()],
        )
        .unwrap();
        assert!(report.valid, "violations: {:?}", report.violations);
        assert_eq!(report.width, 3);

        // Deleting a whole bin leaves contiguity intact (removing a column
        // cannot split an interval) but orphans the hyperedges only it held.
        let mut broken = pd.clone();
        broken.bins.remove(2);
        let report = validate_decomposition(&hg, &broken, &[], &[]).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .all(|v| v.contains("contained in no bin")));

        // Dropping one vertex occurrence from a middle bin breaks both
        // contiguity and coverage of the ternary scope that bin held.
        let mut broken = pd.clone();
        broken.bins[1].retain(|v| v != "1.4");
        let report = validate_decomposition(&hg, &broken, &[], &[]).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("non-contiguous") && v.contains("\"1.4\"")));
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("contained in no bin")));
    }

    #[test]
    fn minor_validation_accepts_and_rejects() {
        let inst =
            build_cd_gadget(1, 1, GadgetBoundary::default(), BridgeConvention::ASide).unwrap();
        let g = inst.primal_graph();
        let report = validate_minor(&g, &certificates::cd_gadget_k4(1)).unwrap();
        assert!(report.valid, "violations: {:?}", report.violations);

        // Non-adjacent singletons are not a K2 minor.
        let bad = MinorCertificate {
            branch_sets: vec![vec!["1.1".into()], vec!["1.3".into()]],
            target: 2,
        };
        let report = validate_minor(&g, &bad).unwrap();
        assert!(!report.valid);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("no connecting edge")));
    }

    #[test]
    fn unknown_vertices_are_hard_errors() {
        let g = path3();
        let cert = MinorCertificate {
            branch_sets: vec![vec!["zz".into()]],
            target: 1,
        };
        assert!(matches!(
            validate_minor(&g, &cert),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn order_to_decomposition_is_valid_and_bounded() {
        let g = path3();
        let hg = Hypergraph::from_indexed(
            g.names().to_vec(),
            g.edges().iter().map(|&(u, v)| vec![u, v]).collect(),
        );
        let pd = order_to_decomposition(&g, &[0, 1, 2]);
        let report = validate_decomposition(&hg, &pd, &[], &[]).unwrap();
        assert!(report.valid, "violations: {:?}", report.violations);
        assert!(report.width >= exact_pathwidth(&g).unwrap());
    }

    #[test]
    fn compose_single_part_is_identity() {
        let inst =
            build_cd_gadget(1, 1, GadgetBoundary::default(), BridgeConvention::ASide).unwrap();
        let pd = certificates::cd_gadget_decomposition(1);
        let out = compose_chain_decomposition(&inst.hypergraph(), &[pd.clone()]).unwrap();
        assert_eq!(out, pd);
    }

    #[test]
    fn compose_rejects_uncoverable_cross_edges() {
        // Two parts whose boundary bins miss the crossing vertices.
        let names: Vec<String> = vec!["a".into(), "b".into(), "c".into(), "d".into()];
        let hg = Hypergraph::from_indexed(names, vec![vec![0, 1], vec![2, 3], vec![1, 2]]);
        let p1 = PathDecomposition::new(vec![vec!["b".into(), "a".into()]]); // last bin has b ✓
        let p2 = PathDecomposition::new(vec![vec!["d".into()], vec!["c".into()]]); // first bin misses c
        assert!(matches!(
            compose_chain_decomposition(&hg, &[p1, p2]),
            Err(Error::InterfaceMismatch(_))
        ));
    }
}
