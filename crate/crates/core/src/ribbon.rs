//! Oriented ribbon graphs as rotation systems.
//!
//! Half-edges are small integers; half-edge `h` belongs to edge `h >> 1` and
//! is paired with `h ^ 1`, so the edge involution is implicit. Vertices are
//! stored explicitly as cyclic sequences, which keeps isolated vertices alive
//! through edge deletion. Faces are the orbits of `h ↦ σ0⁻¹(σ1(h))`, i.e.
//! `σ1` followed by `σ0⁻¹`, so that `σ0 σ1 σ2 = id` read left to right.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::UnionFind;
use crate::error::Error;

pub type HalfEdge = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub u32);

impl EdgeId {
    pub fn half_edges(self) -> [HalfEdge; 2] {
        [2 * self.0, 2 * self.0 + 1]
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[inline]
pub fn partner(h: HalfEdge) -> HalfEdge {
    h ^ 1
}

#[inline]
pub fn edge_of(h: HalfEdge) -> EdgeId {
    EdgeId(h >> 1)
}

/// Vertex, edge, face, component counts plus genus and nullity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphCounts {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub k: usize,
    pub g: usize,
    pub n: usize,
}

impl GraphCounts {
    pub fn euler_characteristic(&self) -> i64 {
        self.v as i64 - self.e as i64 + self.f as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    vertices: Vec<Vec<HalfEdge>>,
}

impl RibbonGraph {
    /// Builds a graph from cyclic half-edge sequences, checking that every
    /// half-edge and its partner occur exactly once.
    pub fn new(vertices: Vec<Vec<HalfEdge>>) -> Result<Self, Error> {
        let mut seen = BTreeMap::new();
        for (vi, seq) in vertices.iter().enumerate() {
            for &h in seq {
                if seen.insert(h, vi).is_some() {
                    return Err(Error::InvalidRibbonGraph(format!("half-edge {h} occurs twice")));
                }
            }
        }
        if let Some(h) = seen.keys().find(|&&h| !seen.contains_key(&partner(h))) {
            return Err(Error::InvalidRibbonGraph(format!("half-edge {h} has no partner")));
        }
        Ok(RibbonGraph { vertices })
    }

    /// Builds a graph from arbitrary half-edge labels and an explicit pairing,
    /// e.g. the cycle notation of a worked example.
    pub fn from_pairing(vertices: &[Vec<u32>], pairs: &[(u32, u32)]) -> Result<Self, Error> {
        let mut relabel = BTreeMap::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if a == b {
                return Err(Error::InvalidRibbonGraph(format!("half-edge {a} paired with itself")));
            }
            for (h, new) in [(a, 2 * i as u32), (b, 2 * i as u32 + 1)] {
                if relabel.insert(h, new).is_some() {
                    return Err(Error::InvalidRibbonGraph(format!("half-edge {h} paired twice")));
                }
            }
        }
        let vs = vertices
            .iter()
            .map(|seq| {
                seq.iter()
                    .map(|h| relabel.get(h).copied().ok_or_else(|| Error::InvalidRibbonGraph(format!("half-edge {h} is unpaired"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        RibbonGraph::new(vs)
    }

    /// `n` isolated vertices and no edges.
    pub fn isolated(n: usize) -> Self {
        RibbonGraph { vertices: vec![Vec::new(); n] }
    }

    pub fn vertices(&self) -> &[Vec<HalfEdge>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn half_edges(&self) -> impl Iterator<Item = HalfEdge> + '_ {
        self.vertices.iter().flatten().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edge identifiers in ascending order.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut e: Vec<EdgeId> = self.half_edges().filter(|h| h & 1 == 0).map(edge_of).collect();
        e.sort();
        e
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.half_edges().any(|h| h == 2 * e.0)
    }

    fn max_half_edge(&self) -> usize {
        self.half_edges().max().map_or(0, |h| h as usize + 2)
    }

    /// Vertex index of every half-edge (indexed by half-edge id).
    pub fn vertex_of(&self) -> Vec<usize> {
        let mut at = vec![usize::MAX; self.max_half_edge()];
        for (vi, seq) in self.vertices.iter().enumerate() {
            for &h in seq {
                at[h as usize] = vi;
            }
        }
        at
    }

    /// `σ0` as a lookup table (`u32::MAX` for absent half-edges).
    pub fn sigma0(&self) -> Vec<HalfEdge> {
        let mut next = vec![u32::MAX; self.max_half_edge()];
        for seq in &self.vertices {
            for (i, &h) in seq.iter().enumerate() {
                next[h as usize] = seq[(i + 1) % seq.len()];
            }
        }
        next
    }

    fn sigma0_inverse(&self) -> Vec<HalfEdge> {
        let mut prev = vec![u32::MAX; self.max_half_edge()];
        for seq in &self.vertices {
            for (i, &h) in seq.iter().enumerate() {
                prev[seq[(i + 1) % seq.len()] as usize] = h;
            }
        }
        prev
    }

    /// Face orbits of `σ2`, each starting at its smallest half-edge, sorted.
    pub fn faces(&self) -> Vec<Vec<HalfEdge>> {
        let prev = self.sigma0_inverse();
        let mut seen = vec![false; prev.len()];
        let mut hs: Vec<HalfEdge> = self.half_edges().collect();
        hs.sort();
        let mut out = Vec::new();
        for h in hs {
            if seen[h as usize] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut b = h;
            while !seen[b as usize] {
                seen[b as usize] = true;
                orbit.push(b);
                b = prev[partner(b) as usize];
            }
            out.push(orbit);
        }
        out
    }

    /// Number of faces; each isolated vertex bounds one face of its own.
    pub fn face_count(&self) -> usize {
        let isolated = self.vertices.iter().filter(|s| s.is_empty()).count();
        let prev = self.sigma0_inverse();
        let mut seen = vec![false; prev.len()];
        let mut faces = 0;
        for h in self.half_edges() {
            if seen[h as usize] {
                continue;
            }
            faces += 1;
            let mut b = h;
            while !seen[b as usize] {
                seen[b as usize] = true;
                b = prev[partner(b) as usize];
            }
        }
        faces + isolated
    }

    pub fn component_count(&self) -> usize {
        let at = self.vertex_of();
        let mut uf = UnionFind::new(self.vertices.len());
        for h in self.half_edges() {
            uf.union(at[h as usize], at[partner(h) as usize]);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn counts(&self) -> GraphCounts {
        let v = self.vertex_count();
        let e = self.edge_count();
        let f = self.face_count();
        let k = self.component_count();
        let twice_g = 2 * k + e - v - f;
        debug_assert!(twice_g.is_multiple_of(2) && 2 * k + e >= v + f, "rotation system is not orientable-consistent");
        GraphCounts { v, e, f, k, g: twice_g / 2, n: e + k - v }
    }

    pub fn genus(&self) -> usize {
        self.counts().g
    }

    fn check_edge(&self, e: EdgeId) -> Result<(), Error> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e.0))
        }
    }

    pub fn is_loop(&self, e: EdgeId) -> Result<bool, Error> {
        self.check_edge(e)?;
        let [a, b] = e.half_edges();
        Ok(self.vertices.iter().any(|s| s.contains(&a) && s.contains(&b)))
    }

    pub fn is_bridge(&self, e: EdgeId) -> Result<bool, Error> {
        Ok(self.delete_edge(e)?.component_count() > self.component_count())
    }

    /// Removes both half-edges of `e`; the vertex set is unchanged.
    pub fn delete_edge(&self, e: EdgeId) -> Result<RibbonGraph, Error> {
        self.check_edge(e)?;
        let vertices = self.vertices.iter().map(|s| s.iter().copied().filter(|&h| edge_of(h) != e).collect()).collect();
        Ok(RibbonGraph { vertices })
    }

    /// Merges the endpoints of the non-loop edge `e`: `(e⁺ u1…up)` and
    /// `(e⁻ w1…wq)` become `(u1…up w1…wq)`.
    pub fn contract_edge(&self, e: EdgeId) -> Result<RibbonGraph, Error> {
        self.check_edge(e)?;
        let [a, b] = e.half_edges();
        let at = self.vertex_of();
        let (u, w) = (at[a as usize], at[b as usize]);
        if u == w {
            return Err(Error::LoopContraction(e.0));
        }
        let after = |seq: &[HalfEdge], h: HalfEdge| -> Vec<HalfEdge> {
            let i = seq.iter().position(|&x| x == h).unwrap();
            seq[i + 1..].iter().chain(&seq[..i]).copied().collect()
        };
        let mut merged = after(&self.vertices[u], a);
        merged.extend(after(&self.vertices[w], b));
        let mut vertices = Vec::with_capacity(self.vertices.len() - 1);
        for (i, s) in self.vertices.iter().enumerate() {
            if i == u {
                vertices.push(std::mem::take(&mut merged));
            } else if i != w {
                vertices.push(s.clone());
            }
        }
        Ok(RibbonGraph { vertices })
    }

    /// The graph whose vertices are the faces of `self`, same edge pairing.
    pub fn dual(&self) -> RibbonGraph {
        let mut vertices = self.faces();
        vertices.extend(self.vertices.iter().filter(|s| s.is_empty()).cloned());
        RibbonGraph { vertices }
    }

    /// The spanning subgraph keeping only the edges in `keep`.
    pub fn spanning_subgraph(&self, keep: impl Fn(EdgeId) -> bool) -> RibbonGraph {
        let vertices = self.vertices.iter().map(|s| s.iter().copied().filter(|&h| keep(edge_of(h))).collect()).collect();
        RibbonGraph { vertices }
    }

    /// Edges renumbered 0..e in ascending order, each vertex rotated to start
    /// at its smallest half-edge, vertices sorted by that half-edge.
    pub fn canonical(&self) -> RibbonGraph {
        let edges = self.edges();
        let rank: BTreeMap<EdgeId, u32> = edges.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();
        let mut vertices: Vec<Vec<HalfEdge>> = self
            .vertices
            .iter()
            .map(|s| {
                let mut s: Vec<HalfEdge> = s.iter().map(|&h| 2 * rank[&edge_of(h)] + (h & 1)).collect();
                if let Some(i) = s.iter().enumerate().min_by_key(|(_, &h)| h).map(|(i, _)| i) {
                    s.rotate_left(i);
                }
                s
            })
            .collect();
        vertices.sort_by_key(|s| s.first().copied().unwrap_or(u32::MAX));
        RibbonGraph { vertices }
    }

    /// An isomorphism-invariant code for connected graphs: the smallest
    /// breadth-first relabeling over all root half-edges. Orientation is
    /// respected (a graph and its mirror get different codes in general).
    pub fn isomorphism_code(&self) -> Vec<u32> {
        let hs: Vec<HalfEdge> = self.half_edges().collect();
        if hs.is_empty() {
            return vec![u32::MAX, self.vertices.len() as u32];
        }
        let s0 = self.sigma0();
        let mut best: Option<Vec<u32>> = None;
        let mut label = vec![u32::MAX; s0.len()];
        let mut order: Vec<HalfEdge> = Vec::with_capacity(hs.len());
        for &root in &hs {
            for &h in &hs {
                label[h as usize] = u32::MAX;
            }
            order.clear();
            label[root as usize] = 0;
            order.push(root);
            let mut head = 0;
            let mut code = Vec::with_capacity(2 * hs.len() + 2);
            while head < order.len() {
                let h = order[head];
                head += 1;
                for nb in [s0[h as usize], partner(h)] {
                    if label[nb as usize] == u32::MAX {
                        label[nb as usize] = order.len() as u32;
                        order.push(nb);
                    }
                    code.push(label[nb as usize]);
                }
            }
            // Half-edges unreachable from the root mean a disconnected graph.
            code.push(order.len() as u32);
            code.push(self.vertices.len() as u32);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        best.unwrap()
    }

    /// Cycle notation with 1-based half-edge labels, e.g. `(1 3 5)(2 4)`.
    pub fn cycle_notation(&self) -> CycleNotation {
        let c = self.canonical();
        let fmt_cycles = |cycles: &[Vec<HalfEdge>]| -> String {
            cycles.iter().map(|c| format!("({})", c.iter().map(|h| (h + 1).to_string()).collect::<Vec<_>>().join(" "))).collect()
        };
        let sigma1: Vec<Vec<HalfEdge>> = c.edges().iter().map(|e| e.half_edges().to_vec()).collect();
        CycleNotation {
            sigma0: fmt_cycles(&c.vertices.iter().filter(|s| !s.is_empty()).cloned().collect::<Vec<_>>()),
            sigma1: fmt_cycles(&sigma1),
            sigma2: fmt_cycles(&c.faces()),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let c = self.canonical();
        let edges: Vec<[HalfEdge; 2]> = c.edges().iter().map(|e| e.half_edges()).collect();
        serde_json::json!({ "vertices": c.vertices, "edges": edges })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleNotation {
    pub sigma0: String,
    pub sigma1: String,
    pub sigma2: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn bridge() -> RibbonGraph {
        RibbonGraph::new(vec![vec![0], vec![1]]).unwrap()
    }

    pub(crate) fn one_loop() -> RibbonGraph {
        RibbonGraph::new(vec![vec![0, 1]]).unwrap()
    }

    fn double_edge() -> RibbonGraph {
        RibbonGraph::new(vec![vec![0, 2], vec![3, 1]]).unwrap()
    }

    /// All-A state graph of 8_21, half-edges labelled 1..16.
    pub(crate) fn eight_21_all_a() -> RibbonGraph {
        let pairs: Vec<(u32, u32)> = (0..8).map(|i| (2 * i + 1, 2 * i + 2)).collect();
        RibbonGraph::from_pairing(&[vec![2, 6, 12, 10, 14, 16, 8, 4, 15, 13], vec![1, 3, 5], vec![7, 9, 11]], &pairs).unwrap()
    }

    #[test]
    fn counts_examples() {
        let c = eight_21_all_a().counts();
        assert_eq!((c.v, c.e, c.f, c.k, c.g, c.n), (3, 8, 5, 1, 1, 6));
        assert_eq!(c.euler_characteristic(), 0);
        let c = RibbonGraph::isolated(1).counts();
        assert_eq!((c.v, c.e, c.f, c.k, c.g, c.n), (1, 0, 1, 1, 0, 0));
        let c = one_loop().counts();
        assert_eq!((c.v, c.e, c.f, c.k, c.g, c.n), (1, 1, 2, 1, 0, 1));
    }

    #[test]
    fn face_orbits_of_eight_21() {
        // σ2 = {13,10,7,16,4,1},{5,2},{8,11,6,3},{12,9},{15,14}
        let mut sizes: Vec<usize> = eight_21_all_a().faces().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 2, 2, 4, 6]);
        // The literal σ2 cycle through label 13 (edge 6, first half) is 13→10→7→16→4→1.
        let g = eight_21_all_a();
        let prev = g.sigma0_inverse();
        let to_new = |l: u32| l - 1; // pairs (2i+1, 2i+2) map to (2i, 2i+1)
        let mut b = to_new(13);
        let mut seen = vec![13];
        for _ in 0..5 {
            b = prev[partner(b) as usize];
            seen.push(b + 1);
        }
        assert_eq!(seen, vec![13, 10, 7, 16, 4, 1]);
    }

    #[test]
    fn delete_examples() {
        let g = one_loop().delete_edge(EdgeId(0)).unwrap();
        assert_eq!(g, RibbonGraph::isolated(1));
        let b = bridge();
        assert_eq!(b.delete_edge(EdgeId(0)).unwrap().component_count(), b.component_count() + 1);
        let d = double_edge();
        let before = d.counts();
        let after = d.delete_edge(EdgeId(0)).unwrap().counts();
        assert_eq!(after.k, before.k);
        assert_eq!(after.n + 1, before.n);
        assert_eq!(one_loop().delete_edge(EdgeId(7)), Err(Error::UnknownEdge(7)));
    }

    #[test]
    fn contract_examples() {
        assert_eq!(bridge().contract_edge(EdgeId(0)).unwrap(), RibbonGraph::isolated(1));
        let g = double_edge().contract_edge(EdgeId(0)).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.is_loop(EdgeId(1)).unwrap());
        assert_eq!(g.counts().f, double_edge().counts().f);
        assert_eq!(one_loop().contract_edge(EdgeId(0)), Err(Error::LoopContraction(0)));
    }

    #[test]
    fn dual_examples() {
        let d = one_loop().dual();
        assert_eq!(d.vertex_count(), 2);
        assert!(d.is_bridge(EdgeId(0)).unwrap());
        let c = eight_21_all_a().dual().counts();
        assert_eq!((c.v, c.e, c.f, c.g), (5, 8, 3, 1));
        let g = eight_21_all_a();
        assert_eq!(g.dual().dual().counts(), g.counts());
        assert_eq!(RibbonGraph::isolated(1).dual().counts(), RibbonGraph::isolated(1).counts());
    }

    #[test]
    fn loop_and_bridge_predicates() {
        assert_eq!((one_loop().is_loop(EdgeId(0)).unwrap(), one_loop().is_bridge(EdgeId(0)).unwrap()), (true, false));
        assert_eq!((bridge().is_loop(EdgeId(0)).unwrap(), bridge().is_bridge(EdgeId(0)).unwrap()), (false, true));
        assert_eq!((double_edge().is_loop(EdgeId(0)).unwrap(), double_edge().is_bridge(EdgeId(0)).unwrap()), (false, false));
        assert_eq!(bridge().is_bridge(EdgeId(3)), Err(Error::UnknownEdge(3)));
    }

    #[test]
    fn validation() {
        assert!(RibbonGraph::new(vec![vec![0]]).is_err());
        assert!(RibbonGraph::new(vec![vec![0, 1, 0]]).is_err());
        assert!(RibbonGraph::from_pairing(&[vec![1, 2]], &[(1, 1)]).is_err());
    }

    #[test]
    fn isomorphism_code_ignores_labels() {
        let g = eight_21_all_a();
        // relabel edges by reversing their ids and swap vertex order
        let relabeled: Vec<Vec<HalfEdge>> =
            g.vertices().iter().rev().map(|s| s.iter().map(|&h| 2 * (7 - (h >> 1)) + (h & 1)).collect()).collect();
        let r = RibbonGraph::new(relabeled).unwrap();
        assert_eq!(r.isomorphism_code(), g.isomorphism_code());
        assert_ne!(g.isomorphism_code(), g.dual().isomorphism_code());
    }

    #[test]
    fn cycle_notation_style() {
        let c = one_loop().cycle_notation();
        assert_eq!(c.sigma0, "(1 2)");
        assert_eq!(c.sigma1, "(1 2)");
        assert_eq!(c.sigma2, "(1)(2)");
    }
}
