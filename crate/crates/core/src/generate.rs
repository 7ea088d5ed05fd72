//! Seeded random inputs: braid closures, alternating diagrams and connected
//! ribbon graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{braid_closure, rotate, PlanarDiagram, UnionFind};
use crate::ribbon::{HalfEdge, RibbonGraph};

/// Uniform generator indices in `1..strands` with uniform signs.
pub fn random_braid_word(rng: &mut impl Rng, strands: usize, length: usize) -> Vec<i64> {
    (0..length)
        .map(|_| {
            let i = rng.gen_range(1..strands as i64);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// A connected braid-closure diagram with between 1 and `max_crossings`
/// crossings on 2 to `max_strands` strands.
pub fn random_connected_braid(rng: &mut impl Rng, max_crossings: usize, max_strands: usize) -> PlanarDiagram {
    assert!(max_crossings >= 1 && max_strands >= 2);
    loop {
        let strands = rng.gen_range(2..=max_strands);
        let length = rng.gen_range(1..=max_crossings);
        let d = braid_closure(&random_braid_word(rng, strands, length), strands);
        if d.is_connected() {
            return d;
        }
    }
}

/// Swaps over and under where needed so that every crossing's A-smoothing
/// joins two regions of the same checkerboard colour. On a connected
/// projection the result is alternating.
pub fn make_alternating(d: &PlanarDiagram) -> PlanarDiagram {
    let ports = d.port_count();
    let mut regions = UnionFind::new(ports);
    for p in 0..ports {
        regions.union(p, rotate(d.mate(p), 3));
    }
    // Corners p and rotate(p, 3) lie on opposite sides of the edge at port p.
    let mut colour: Vec<Option<bool>> = vec![None; ports];
    let mut by_region: Vec<Vec<usize>> = vec![Vec::new(); ports];
    for p in 0..ports {
        by_region[regions.find(p)].push(p);
    }
    for start in 0..ports {
        let r0 = regions.find(start);
        if colour[r0].is_some() {
            continue;
        }
        colour[r0] = Some(false);
        let mut stack = vec![r0];
        while let Some(r) = stack.pop() {
            let c = colour[r].unwrap();
            for &p in &by_region[r] {
                for q in [rotate(p, 1), rotate(p, 3)] {
                    let s = regions.find(q);
                    if s != r && colour[s].is_none() {
                        colour[s] = Some(!c);
                        stack.push(s);
                    }
                }
            }
        }
    }
    let crossings = d
        .crossings()
        .iter()
        .enumerate()
        .map(|(x, &c)| if colour[regions.find(4 * x + 1)] == Some(true) { [c[1], c[2], c[3], c[0]] } else { c })
        .collect();
    PlanarDiagram::from_unoriented(crossings, d.free_circles()).expect("crossing changes keep the diagram valid")
}

/// A connected ribbon graph with at most `max_edges` edges and random rotations.
pub fn random_ribbon_graph(rng: &mut impl Rng, max_edges: usize) -> RibbonGraph {
    let e = rng.gen_range(0..=max_edges);
    let v = rng.gen_range(1..=e + 1);
    let mut ends: Vec<(usize, usize)> = (1..v).map(|i| (rng.gen_range(0..i), i)).collect();
    while ends.len() < e {
        ends.push((rng.gen_range(0..v), rng.gen_range(0..v)));
    }
    ends.shuffle(rng);
    let mut vertices: Vec<Vec<HalfEdge>> = vec![Vec::new(); v];
    for (i, &(a, b)) in ends.iter().enumerate() {
        vertices[a].push(2 * i as u32);
        vertices[b].push(2 * i as u32 + 1);
    }
    for s in &mut vertices {
        s.shuffle(rng);
    }
    RibbonGraph::new(vertices).expect("every edge has both half-edges")
}
