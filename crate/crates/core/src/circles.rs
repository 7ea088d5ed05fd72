//! State circles of a smoothed diagram, with plane nesting and orientation.
//!
//! Regions of the sphere are unions of crossing corners: corners joined
//! along an edge of the projection, plus the two corners a smoothing opens
//! into each other. Circles and regions form a tree; rooting it at an outer
//! region gives each circle a nesting depth.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::diagram::{crossing_of, rotate, PlanarDiagram, Port, Smoothing, State, UnionFind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rotation {
    Clockwise,
    Counterclockwise,
}

/// One chord end: the smoothing arc `site` (0 or 1) at `crossing`.
pub type ChordEnd = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Circle {
    /// Chord ends in traversal order.
    pub chord_ends: Vec<ChordEnd>,
    pub depth: usize,
    pub rotation: Rotation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateCircles {
    pub circles: Vec<Circle>,
}

impl StateCircles {
    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    /// Number of chord ends on each circle, sorted descending.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.circles.iter().map(|c| c.chord_ends.len()).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

/// Traces the circles of `s`, rooting every connected piece of the diagram at
/// the face to the right of its lowest-labelled edge.
pub fn trace_state_circles(d: &PlanarDiagram, s: &State) -> StateCircles {
    trace_state_circles_rooted(d, s, &[])
}

/// Like [`trace_state_circles`], but a corner listed in `roots` overrides the
/// default outer face for the piece of the diagram containing it.
pub fn trace_state_circles_rooted(d: &PlanarDiagram, s: &State, roots: &[Port]) -> StateCircles {
    let n = d.crossing_count();
    assert_eq!(s.len(), n, "state must cover every crossing");
    let ports = d.port_count();

    let mut regions = UnionFind::new(ports);
    for p in 0..ports {
        regions.union(p, rotate(d.mate(p), 3));
    }
    for x in 0..n {
        match s.get(x) {
            Smoothing::A => regions.union(4 * x + 1, 4 * x + 3),
            Smoothing::B => regions.union(4 * x, 4 * x + 2),
        };
    }

    let mut pieces = UnionFind::new(n);
    for p in 0..ports {
        pieces.union(crossing_of(p), crossing_of(d.mate(p)));
    }

    // Default root per piece: right-hand face of its lowest-labelled edge.
    let mut root_of_piece: BTreeMap<usize, (u32, Port)> = BTreeMap::new();
    for p in (0..ports).filter(|&p| !d.is_incoming(p)) {
        let piece = pieces.find(crossing_of(p));
        let entry = root_of_piece.entry(piece).or_insert((u32::MAX, 0));
        if d.label(p) < entry.0 {
            *entry = (d.label(p), rotate(p, 3));
        }
    }
    for &corner in roots {
        let piece = pieces.find(crossing_of(corner));
        root_of_piece.entry(piece).and_modify(|e| e.1 = corner);
    }

    struct Raw {
        ends: Vec<ChordEnd>,
        left: usize,
        right: usize,
    }
    let mut raw = Vec::new();
    let mut visited = vec![false; ports];
    for start in 0..ports {
        if visited[start] {
            continue;
        }
        let mut ends = Vec::new();
        let mut p = start;
        loop {
            visited[p] = true;
            let q = d.mate(p);
            visited[q] = true;
            let x = crossing_of(q);
            let smoothing = s.get(x);
            ends.push((x, smoothing.site(q)));
            p = smoothing.partner(q);
            if p == start {
                break;
            }
        }
        raw.push(Raw { ends, left: regions.find(start), right: regions.find(rotate(start, 3)) });
    }

    // Breadth-first distances in the region/circle tree of each piece.
    let mut adjacency: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in &raw {
        debug_assert_ne!(c.left, c.right, "a state circle separates two regions");
        adjacency.entry(c.left).or_default().push(c.right);
        adjacency.entry(c.right).or_default().push(c.left);
    }
    let mut dist: BTreeMap<usize, usize> = BTreeMap::new();
    for &(_, corner) in root_of_piece.values() {
        let r = regions.find(corner);
        dist.insert(r, 0);
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            for &w in adjacency.get(&u).map(Vec::as_slice).unwrap_or(&[]) {
                if let std::collections::btree_map::Entry::Vacant(slot) = dist.entry(w) {
                    slot.insert(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }

    let mut circles: Vec<Circle> = raw
        .into_iter()
        .map(|c| {
            let (dl, dr) = (dist[&c.left], dist[&c.right]);
            debug_assert!(dl.abs_diff(dr) == 1);
            let depth = dl.min(dr);
            // The inner side is on the left exactly when travelling counterclockwise.
            let counterclockwise = dl > dr;
            let want_ccw = depth % 2 == 0;
            let mut ends = c.ends;
            if counterclockwise != want_ccw {
                ends.reverse();
            }
            Circle { chord_ends: ends, depth, rotation: if want_ccw { Rotation::Counterclockwise } else { Rotation::Clockwise } }
        })
        .collect();
    circles.extend((0..d.free_circles()).map(|_| Circle { chord_ends: Vec::new(), depth: 0, rotation: Rotation::Counterclockwise }));
    StateCircles { circles }
}

/// Number of circles of `s` without any plane bookkeeping.
pub fn count_circles(d: &PlanarDiagram, s: &State) -> usize {
    let ports = d.port_count();
    let mut visited = vec![false; ports];
    let mut count = d.free_circles();
    for start in 0..ports {
        if visited[start] {
            continue;
        }
        count += 1;
        let mut p = start;
        loop {
            visited[p] = true;
            let q = d.mate(p);
            visited[q] = true;
            p = s.get(crossing_of(q)).partner(q);
            if p == start {
                break;
            }
        }
    }
    count
}

/// Circle count for the state encoded by `mask` (bit set = B-smoothing),
/// reusing `visited` as scratch space.
pub(crate) fn count_circles_mask(d: &PlanarDiagram, mask: u64, visited: &mut [bool]) -> usize {
    visited.iter_mut().for_each(|v| *v = false);
    let mut count = d.free_circles();
    for start in 0..visited.len() {
        if visited[start] {
            continue;
        }
        count += 1;
        let mut p = start;
        loop {
            visited[p] = true;
            let q = d.mate(p);
            visited[q] = true;
            let smoothing = if mask >> crossing_of(q) & 1 == 1 { Smoothing::B } else { Smoothing::A };
            p = smoothing.partner(q);
            if p == start {
                break;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{dual_state, parse_pd};

    #[test]
    fn trefoil_circles() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let a = trace_state_circles(&d, &State::all_a(3));
        let b = trace_state_circles(&d, &State::all_b(3));
        assert_eq!(a.len() + b.len(), 5);
        assert_eq!(count_circles(&d, &State::all_a(3)), a.len());
        for c in a.circles.iter().chain(&b.circles) {
            let expect = if c.depth % 2 == 1 { Rotation::Clockwise } else { Rotation::Counterclockwise };
            assert_eq!(c.rotation, expect);
        }
    }

    #[test]
    fn every_chord_end_used_once() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        for mask in 0..8u64 {
            let s = State::from_mask(3, mask);
            let circles = trace_state_circles(&d, &s);
            let mut ends: Vec<ChordEnd> = circles.circles.iter().flat_map(|c| c.chord_ends.clone()).collect();
            ends.sort();
            let expect: Vec<ChordEnd> = (0..3).flat_map(|x| [(x, 0), (x, 1)]).collect();
            assert_eq!(ends, expect);
            let mut scratch = vec![false; d.port_count()];
            assert_eq!(count_circles_mask(&d, mask, &mut scratch), circles.len());
            // circles(s) + circles(ŝ) = c + 2 − 2g ≤ c + 2
            assert!(circles.len() + count_circles(&d, &dual_state(&s)) <= 5);
        }
    }

    #[test]
    fn free_circles_are_unnested() {
        let d = PlanarDiagram::unlink(2);
        let c = trace_state_circles(&d, &State::all_a(0));
        assert_eq!(c.len(), 2);
        assert!(c.circles.iter().all(|c| c.depth == 0 && c.chord_ends.is_empty()));
    }
}
