//! The Bollobás–Riordan–Tutte polynomial `C(G; X, Y, Z)` of an oriented
//! ribbon graph, by deletion–contraction, by the spanning-subgraph sum and by
//! the spanning-tree expansion with Tutte activities.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::diagram::UnionFind;
use crate::error::Error;
use crate::poly::{MultiPoly, Xyz};
use crate::ribbon::{edge_of, partner, EdgeId, HalfEdge, RibbonGraph};

pub const DEFAULT_BASE_CASE_CAP: usize = 24;
pub const DEFAULT_SUBGRAPH_CAP: usize = 30;
const MASK_BITS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Recursive,
    Subgraph,
    Tree,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recursive" => Ok(Method::Recursive),
            "subgraph" => Ok(Method::Subgraph),
            "tree" => Ok(Method::Tree),
            _ => Err(format!("unknown method {s:?} (expected recursive, subgraph or tree)")),
        }
    }
}

/// A total order on the edges of one ribbon graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder {
    order: Vec<EdgeId>,
    rank: BTreeMap<EdgeId, usize>,
}

impl EdgeOrder {
    /// Checks that `order` lists every edge of `g` exactly once.
    pub fn new(g: &RibbonGraph, order: Vec<EdgeId>) -> Result<Self, Error> {
        let mut rank = BTreeMap::new();
        for (i, &e) in order.iter().enumerate() {
            if !g.has_edge(e) {
                return Err(Error::InvalidEdgeOrder(format!("edge {e} is not in the graph")));
            }
            if rank.insert(e, i).is_some() {
                return Err(Error::InvalidEdgeOrder(format!("edge {e} listed twice")));
            }
        }
        if rank.len() != g.edge_count() {
            return Err(Error::InvalidEdgeOrder(format!("{} of {} edges listed", rank.len(), g.edge_count())));
        }
        Ok(EdgeOrder { order, rank })
    }

    pub fn ascending(g: &RibbonGraph) -> Self {
        Self::new(g, g.edges()).expect("edge list is a permutation")
    }

    pub fn random(g: &RibbonGraph, rng: &mut impl Rng) -> Self {
        let mut order = g.edges();
        order.shuffle(rng);
        Self::new(g, order).expect("shuffle is a permutation")
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.order
    }

    pub fn rank(&self, e: EdgeId) -> usize {
        self.rank[&e]
    }
}

/// A spanning tree with its active edges, all listed in ascending id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivityRecord {
    pub tree: Vec<EdgeId>,
    pub internally_active: Vec<EdgeId>,
    pub externally_active: Vec<EdgeId>,
}

/// Dense view of a ribbon graph for counting faces and components of many
/// spanning subgraphs, each given as a bitmask over edge indices.
struct Frame {
    edges: Vec<EdgeId>,
    /// Rotation at each vertex as (half-edge, edge index).
    rotations: Vec<Vec<(HalfEdge, usize)>>,
    /// Endpoint vertices of each edge.
    ends: Vec<(usize, usize)>,
    slots: usize,
}

impl Frame {
    fn new(g: &RibbonGraph) -> Result<Self, Error> {
        let edges = g.edges();
        if edges.len() > MASK_BITS {
            return Err(Error::TooManyEdges { edges: edges.len(), cap: MASK_BITS });
        }
        let index: BTreeMap<EdgeId, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let rotations: Vec<Vec<(HalfEdge, usize)>> =
            g.vertices().iter().map(|s| s.iter().map(|&h| (h, index[&edge_of(h)])).collect()).collect();
        let mut ends = vec![(0, 0); edges.len()];
        for (v, s) in rotations.iter().enumerate() {
            for &(h, i) in s {
                if h & 1 == 0 {
                    ends[i].0 = v;
                } else {
                    ends[i].1 = v;
                }
            }
        }
        let slots = g.half_edges().max().map_or(0, |h| h as usize + 2);
        Ok(Frame { edges, rotations, ends, slots })
    }

    fn full_mask(&self) -> u64 {
        if self.edges.len() == MASK_BITS {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        }
    }

    fn components(&self, mask: u64) -> usize {
        let mut uf = UnionFind::new(self.rotations.len());
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            if mask >> i & 1 == 1 {
                uf.union(a, b);
            }
        }
        uf.count()
    }

    /// Faces of the spanning subgraph `mask`, counting one per isolated vertex.
    /// `prev` and `seen` are scratch buffers of length `self.slots`.
    fn faces(&self, mask: u64, prev: &mut [HalfEdge], seen: &mut [bool]) -> usize {
        let mut faces = 0;
        let mut kept: Vec<HalfEdge> = Vec::new();
        for s in &self.rotations {
            let start = kept.len();
            kept.extend(s.iter().filter(|&&(_, i)| mask >> i & 1 == 1).map(|&(h, _)| h));
            let here = &kept[start..];
            if here.is_empty() {
                faces += 1;
                continue;
            }
            for (j, &h) in here.iter().enumerate() {
                prev[here[(j + 1) % here.len()] as usize] = h;
            }
        }
        for &h in &kept {
            seen[h as usize] = false;
        }
        for &h in &kept {
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
        faces
    }
}

/// Deletion–contraction with the default one-vertex cap.
pub fn brt_recursive(g: &RibbonGraph) -> Result<MultiPoly, Error> {
    brt_recursive_with_cap(g, DEFAULT_BASE_CASE_CAP)
}

/// Deletion–contraction; one-vertex graphs with more than `cap` loops are refused.
pub fn brt_recursive_with_cap(g: &RibbonGraph, cap: usize) -> Result<MultiPoly, Error> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let mut memo = HashMap::new();
    recurse(g, cap, &mut memo)
}

fn recurse(g: &RibbonGraph, cap: usize, memo: &mut HashMap<Vec<u32>, MultiPoly>) -> Result<MultiPoly, Error> {
    if g.edge_count() == 0 {
        return Ok(MultiPoly::one());
    }
    let key = g.isomorphism_code();
    if let Some(c) = memo.get(&key) {
        return Ok(c.clone());
    }
    let result = if g.vertex_count() == 1 {
        one_vertex_sum(g, cap)?
    } else {
        let mut bridge = None;
        let mut split = None;
        for e in g.edges() {
            if g.is_loop(e)? {
                continue;
            }
            if g.is_bridge(e)? {
                bridge.get_or_insert(e);
            } else {
                split = Some(e);
                break;
            }
        }
        match (split, bridge) {
            (Some(e), _) => recurse(&g.delete_edge(e)?, cap, memo)? + recurse(&g.contract_edge(e)?, cap, memo)?,
            (None, Some(e)) => MultiPoly::x() * recurse(&g.contract_edge(e)?, cap, memo)?,
            (None, None) => unreachable!("a connected graph with two vertices has a non-loop edge"),
        }
    };
    memo.insert(key, result.clone());
    Ok(result)
}

/// `Σ_H Y^{n(H)} Z^{g(H)}` over the loop subsets of a one-vertex graph.
fn one_vertex_sum(g: &RibbonGraph, cap: usize) -> Result<MultiPoly, Error> {
    let e = g.edge_count();
    if e > cap || e >= MASK_BITS {
        return Err(Error::BaseCaseTooLarge { edges: e, cap });
    }
    let frame = Frame::new(g)?;
    let tally = |range: std::ops::Range<u64>| {
        let mut prev = vec![0; frame.slots];
        let mut seen = vec![false; frame.slots];
        let mut acc: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for mask in range {
            let size = mask.count_ones();
            let f = frame.faces(mask, &mut prev, &mut seen) as u32;
            *acc.entry((size, (1 + size - f) / 2)).or_default() += 1;
        }
        acc
    };
    let total = 1u64 << e;
    let counts = parallel_tally(total, tally);
    Ok(MultiPoly::from_terms(counts.into_iter().map(|((n, genus), c)| (Xyz { x: 0, y: n, z: genus }, BigInt::from(c)))))
}

/// Splits `0..total` into blocks, tallies each (in parallel when large) and
/// merges the tallies.
fn parallel_tally<K: Ord + Send>(total: u64, tally: impl Fn(std::ops::Range<u64>) -> BTreeMap<K, u64> + Sync) -> BTreeMap<K, u64> {
    const BLOCK: u64 = 1 << 12;
    let merge = |mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>| {
        for (k, v) in b {
            *a.entry(k).or_default() += v;
        }
        a
    };
    if total <= BLOCK {
        return tally(0..total);
    }
    (0..total.div_ceil(BLOCK)).into_par_iter().map(|b| tally(b * BLOCK..((b + 1) * BLOCK).min(total))).reduce(BTreeMap::new, merge)
}

/// `Σ_H (X−1)^{k(H)−k(G)} Y^{n(H)} Z^{g(H)}` over all spanning subgraphs.
pub fn brt_subgraph(g: &RibbonGraph) -> Result<MultiPoly, Error> {
    let e = g.edge_count();
    if e > DEFAULT_SUBGRAPH_CAP {
        return Err(Error::TooManyEdges { edges: e, cap: DEFAULT_SUBGRAPH_CAP });
    }
    let frame = Frame::new(g)?;
    let v = g.vertex_count();
    let kg = frame.components(frame.full_mask());
    let tally = |range: std::ops::Range<u64>| {
        let mut prev = vec![0; frame.slots];
        let mut seen = vec![false; frame.slots];
        let mut acc: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
        for mask in range {
            let size = mask.count_ones() as usize;
            let k = frame.components(mask);
            let f = frame.faces(mask, &mut prev, &mut seen);
            let nullity = size + k - v;
            let genus = (2 * k + size - v - f) / 2;
            *acc.entry(((k - kg) as u32, nullity as u32, genus as u32)).or_default() += 1;
        }
        acc
    };
    let counts = parallel_tally(1u64 << e, tally);
    let x_minus_1 = MultiPoly::x() - MultiPoly::one();
    let mut powers = vec![MultiPoly::one()];
    let mut out = MultiPoly::zero();
    for ((j, n, genus), c) in counts {
        while powers.len() <= j as usize {
            let next = powers.last().unwrap() * &x_minus_1;
            powers.push(next);
        }
        out += powers[j as usize].shift(Xyz { x: 0, y: n, z: genus }).scale(&BigInt::from(c));
    }
    Ok(out)
}

/// Every spanning tree of the underlying graph with its activities under `ord`.
pub fn enumerate_spanning_trees(g: &RibbonGraph, ord: &EdgeOrder) -> Result<Vec<ActivityRecord>, Error> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let frame = Frame::new(g)?;
    Ok(spanning_tree_masks(&frame, g.vertex_count())
        .into_iter()
        .map(|t| {
            let (internal, external) = activities(&frame, t, ord);
            let ids = |m: u64| (0..frame.edges.len()).filter(|i| m >> i & 1 == 1).map(|i| frame.edges[i]).collect();
            ActivityRecord { tree: ids(t), internally_active: ids(internal), externally_active: ids(external) }
        })
        .collect())
}

fn spanning_tree_masks(frame: &Frame, v: usize) -> Vec<u64> {
    fn go(frame: &Frame, i: usize, need: usize, mask: u64, uf: &UnionFind, out: &mut Vec<u64>) {
        if need == 0 {
            out.push(mask);
            return;
        }
        if frame.edges.len() - i < need {
            return;
        }
        let (a, b) = frame.ends[i];
        let mut with = uf.clone();
        if with.union(a, b) {
            go(frame, i + 1, need - 1, mask | 1 << i, &with, out);
        }
        go(frame, i + 1, need, mask, uf, out);
    }
    let mut out = Vec::new();
    go(frame, 0, v - 1, 0, &UnionFind::new(v), &mut out);
    out
}

/// Internally and externally active edge masks of the tree `t`.
fn activities(frame: &Frame, t: u64, ord: &EdgeOrder) -> (u64, u64) {
    let m = frame.edges.len();
    let rank: Vec<usize> = frame.edges.iter().map(|&e| ord.rank(e)).collect();
    let mut internal = 0u64;
    let mut cycle_min = vec![usize::MAX; m];
    for i in (0..m).filter(|&i| t >> i & 1 == 1) {
        let mut uf = UnionFind::new(frame.rotations.len());
        for j in (0..m).filter(|&j| j != i && t >> j & 1 == 1) {
            uf.union(frame.ends[j].0, frame.ends[j].1);
        }
        let cut: Vec<usize> = (0..m).filter(|&j| uf.find(frame.ends[j].0) != uf.find(frame.ends[j].1)).collect();
        if cut.iter().all(|&j| rank[j] >= rank[i]) {
            internal |= 1 << i;
        }
        for j in cut.into_iter().filter(|&j| j != i) {
            cycle_min[j] = cycle_min[j].min(rank[i]);
        }
    }
    let external = (0..m).filter(|&j| t >> j & 1 == 0 && cycle_min[j] > rank[j]).fold(0u64, |acc, j| acc | 1 << j);
    (internal, external)
}

/// `Σ_T X^{i(T)} Σ_{S ⊆ E(T)} Y^{|S|} Z^{g(T ∪ S)}`.
pub fn brt_tree_expansion(g: &RibbonGraph, ord: &EdgeOrder) -> Result<MultiPoly, Error> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let frame = Frame::new(g)?;
    let trees = spanning_tree_masks(&frame, g.vertex_count());
    let counts = trees
        .par_iter()
        .map(|&t| {
            let (internal, external) = activities(&frame, t, ord);
            let i = internal.count_ones();
            let ext: Vec<usize> = (0..frame.edges.len()).filter(|j| external >> j & 1 == 1).collect();
            let mut prev = vec![0; frame.slots];
            let mut seen = vec![false; frame.slots];
            let mut acc: BTreeMap<(u32, u32, u32), u64> = BTreeMap::new();
            for sub in 0u64..1 << ext.len() {
                let mut mask = t;
                for (b, &j) in ext.iter().enumerate() {
                    if sub >> b & 1 == 1 {
                        mask |= 1 << j;
                    }
                }
                let s = sub.count_ones();
                let f = frame.faces(mask, &mut prev, &mut seen) as u32;
                *acc.entry((i, s, (1 + s - f) / 2)).or_default() += 1;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(MultiPoly::from_terms(counts.into_iter().map(|((x, y, z), c)| (Xyz { x, y, z }, BigInt::from(c)))))
}

/// Dispatches on `method`; the tree method uses ascending edge order unless
/// `order` is given.
pub fn brt(g: &RibbonGraph, method: Method, order: Option<&EdgeOrder>) -> Result<MultiPoly, Error> {
    match method {
        Method::Recursive => brt_recursive(g),
        Method::Subgraph => brt_subgraph(g),
        Method::Tree => match order {
            Some(o) => brt_tree_expansion(g, o),
            None => brt_tree_expansion(g, &EdgeOrder::ascending(g)),
        },
    }
}
