//! Planar link diagrams given as PD codes or braid words.
//!
//! A crossing `X[a,b,c,d]` lists its four edge labels counterclockwise,
//! starting at the incoming under-strand. Ports are numbered `4·x + i` for
//! crossing `x` and position `i`; corner `4·x + i` is the quadrant between
//! port `i` and port `i + 1`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};

pub type Port = usize;

#[inline]
pub fn crossing_of(p: Port) -> usize {
    p / 4
}

#[inline]
pub fn position_of(p: Port) -> usize {
    p % 4
}

/// The port on the other side of the crossing (the strand goes straight through).
#[inline]
pub fn straight(p: Port) -> Port {
    p - p % 4 + (p % 4 + 2) % 4
}

/// The port `k` steps counterclockwise from `p` around its crossing.
#[inline]
pub fn rotate(p: Port, k: usize) -> Port {
    p - p % 4 + (p % 4 + k) % 4
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    pub fn flip(self) -> Self {
        match self {
            Smoothing::A => Smoothing::B,
            Smoothing::B => Smoothing::A,
        }
    }

    /// The port joined to `p` by this smoothing: A joins (0,1),(2,3); B joins (1,2),(3,0).
    #[inline]
    pub fn partner(self, p: Port) -> Port {
        let i = p % 4;
        let j = match (self, i) {
            (Smoothing::A, 0) => 1,
            (Smoothing::A, 1) => 0,
            (Smoothing::A, 2) => 3,
            (Smoothing::A, _) => 2,
            (Smoothing::B, 1) => 2,
            (Smoothing::B, 2) => 1,
            (Smoothing::B, 3) => 0,
            (Smoothing::B, _) => 3,
        };
        p - i + j
    }

    /// Which of the two smoothing arcs (0 or 1) at the crossing passes through `p`.
    #[inline]
    pub fn site(self, p: Port) -> usize {
        match self {
            Smoothing::A => (p % 4) / 2,
            Smoothing::B => ((p % 4 + 3) % 4) / 2,
        }
    }
}

/// A choice of smoothing at every crossing, indexed by crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct State(Vec<Smoothing>);

impl State {
    pub fn new(choices: Vec<Smoothing>) -> Self {
        State(choices)
    }

    pub fn constant(n: usize, s: Smoothing) -> Self {
        State(vec![s; n])
    }

    pub fn all_a(n: usize) -> Self {
        Self::constant(n, Smoothing::A)
    }

    pub fn all_b(n: usize) -> Self {
        Self::constant(n, Smoothing::B)
    }

    /// Bit `i` of `mask` set means crossing `i` takes the B-smoothing.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        State((0..n).map(|i| if mask >> i & 1 == 1 { Smoothing::B } else { Smoothing::A }).collect())
    }

    /// Parses a string of `0`/`A` (A-smoothing) and `1`/`B` (B-smoothing).
    pub fn parse_bits(bits: &str, crossings: usize) -> Result<Self, ParseError> {
        let choices: Option<Vec<Smoothing>> = bits
            .trim()
            .chars()
            .map(|c| match c {
                '0' | 'a' | 'A' => Some(Smoothing::A),
                '1' | 'b' | 'B' => Some(Smoothing::B),
                _ => None,
            })
            .collect();
        match choices {
            Some(v) if v.len() == crossings => Ok(State(v)),
            Some(v) => Err(ParseError::StateLength { got: v.len(), expected: crossings }),
            None => Err(ParseError::Syntax { index: 0, message: format!("bad state bitstring {bits:?}") }),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, crossing: usize) -> Smoothing {
        self.0[crossing]
    }

    pub fn choices(&self) -> &[Smoothing] {
        &self.0
    }

    pub fn count(&self, s: Smoothing) -> usize {
        self.0.iter().filter(|&&c| c == s).count()
    }
}

/// Flips the smoothing at every crossing.
pub fn dual_state(s: &State) -> State {
    State(s.0.iter().map(|c| c.flip()).collect())
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", if *c == Smoothing::A { '0' } else { '1' })?;
        }
        Ok(())
    }
}

/// A validated link diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
    free_circles: usize,
    mate: Vec<Port>,
    incoming_over: Vec<u8>,
    components: usize,
    connected: bool,
}

impl PlanarDiagram {
    /// Validates crossings and resolves orientations. `free_circles` counts
    /// crossingless unknotted components drawn disjointly from the rest.
    pub fn new(crossings: Vec<[u32; 4]>, free_circles: usize) -> Result<Self, ParseError> {
        let mate = pair_ports(&crossings)?;
        let incoming_over = orient(&crossings, &mate)?;

        let mut components = free_circles;
        let mut visited = vec![false; mate.len()];
        for start in 0..mate.len() {
            if visited[start] {
                continue;
            }
            components += 1;
            let mut p = start;
            loop {
                visited[p] = true;
                let q = mate[p];
                visited[q] = true;
                p = straight(q);
                if p == start {
                    break;
                }
            }
        }

        let n = crossings.len();
        let graph_connected = n == 0 || {
            let mut uf = UnionFind::new(n);
            for (p, &q) in mate.iter().enumerate() {
                uf.union(crossing_of(p), crossing_of(q));
            }
            uf.count() == 1
        };
        let connected = if n == 0 { free_circles <= 1 } else { graph_connected && free_circles == 0 };

        Ok(PlanarDiagram { crossings, free_circles, mate, incoming_over, components, connected })
    }

    /// Like [`PlanarDiagram::new`], but each crossing only has to list its
    /// ports counterclockwise starting at *some* end of the under-strand.
    /// Every component is oriented starting from its lowest port, and
    /// crossings whose under-strand then runs backwards are rotated by two.
    pub fn from_unoriented(mut crossings: Vec<[u32; 4]>, free_circles: usize) -> Result<Self, ParseError> {
        let trial = pair_ports(&crossings)?;
        let mut incoming = vec![None; trial.len()];
        for start in 0..trial.len() {
            if incoming[start].is_some() {
                continue;
            }
            let mut p = start;
            loop {
                incoming[p] = Some(true);
                incoming[straight(p)] = Some(false);
                p = trial[straight(p)];
                if p == start {
                    break;
                }
            }
        }
        for (x, c) in crossings.iter_mut().enumerate() {
            if incoming[4 * x] == Some(false) {
                c.rotate_left(2);
            }
        }
        PlanarDiagram::new(crossings, free_circles)
    }

    /// The crossingless diagram of `n` unlinked circles.
    pub fn unlink(n: usize) -> Self {
        PlanarDiagram::new(Vec::new(), n).expect("crossingless diagram is valid")
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn require_connected(&self) -> Result<(), Error> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::DisconnectedDiagram)
        }
    }

    /// The port at the other end of the edge leaving `p`.
    #[inline]
    pub fn mate(&self, p: Port) -> Port {
        self.mate[p]
    }

    pub fn port_count(&self) -> usize {
        self.mate.len()
    }

    pub fn label(&self, p: Port) -> u32 {
        self.crossings[crossing_of(p)][position_of(p)]
    }

    /// Whether `p` lies on the over-strand of its crossing.
    #[inline]
    pub fn is_over(&self, p: Port) -> bool {
        p % 2 == 1
    }

    /// Whether the oriented strand enters its crossing through `p`.
    pub fn is_incoming(&self, p: Port) -> bool {
        match p % 4 {
            0 => true,
            2 => false,
            i => i as u8 == self.incoming_over[crossing_of(p)],
        }
    }

    /// +1 when the over-strand runs from port 3 to port 1, otherwise −1.
    pub fn sign(&self, crossing: usize) -> i64 {
        if self.incoming_over[crossing] == 3 {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|x| self.sign(x)).sum()
    }

    /// Swaps over and under at every crossing, re-rooting each port list at
    /// its new incoming under-strand.
    pub fn mirror(&self) -> PlanarDiagram {
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(x, &[a, b, c, d])| if self.incoming_over[x] == 3 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        PlanarDiagram::new(crossings, self.free_circles).expect("mirror preserves validity")
    }

    /// Renumbers edges 1, 2, … consecutively along each oriented component.
    pub fn relabeled(&self) -> PlanarDiagram {
        let mut labels = vec![0u32; self.mate.len()];
        let mut next = 1u32;
        let starts: Vec<Port> = (0..self.mate.len())
            .filter(|&p| p % 4 == 0)
            .chain((0..self.mate.len()).filter(|&p| p % 2 == 1 && self.is_incoming(p)))
            .collect();
        for start in starts {
            if labels[start] != 0 {
                continue;
            }
            let mut p = start;
            loop {
                labels[p] = next;
                labels[self.mate[p]] = next;
                next += 1;
                p = self.mate[straight(p)];
                if p == start {
                    break;
                }
            }
        }
        let crossings =
            (0..self.crossings.len()).map(|x| [labels[4 * x], labels[4 * x + 1], labels[4 * x + 2], labels[4 * x + 3]]).collect();
        PlanarDiagram::new(crossings, self.free_circles).expect("relabeling preserves validity")
    }

    /// Applies `f` to every edge label.
    pub fn map_labels(&self, f: impl Fn(u32) -> u32) -> Result<PlanarDiagram, ParseError> {
        let crossings = self.crossings.iter().map(|c| c.map(&f)).collect();
        PlanarDiagram::new(crossings, self.free_circles)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({ "crossings": self.crossings });
        if self.free_circles > 0 && !(self.crossings.is_empty() && self.free_circles == 1) {
            v["free_circles"] = serde_json::json!(self.free_circles);
        }
        v
    }

    /// Over/under passages of each component in traversal order.
    pub fn passages(&self) -> Vec<Vec<(usize, bool)>> {
        let mut seen = vec![false; self.mate.len()];
        let mut out = Vec::new();
        for start in (0..self.mate.len()).filter(|&p| self.is_incoming(p)) {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                comp.push((crossing_of(p), self.is_over(p)));
                p = self.mate[straight(p)];
                if p == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// True when every edge runs from an over-passage to an under-passage.
    pub fn is_strictly_alternating(&self) -> bool {
        (0..self.mate.len()).all(|p| self.is_over(p) != self.is_over(self.mate[p]))
    }

    /// True when the diagram splits along two-edge cuts into strictly
    /// alternating pieces.
    pub fn is_alternating_connected_sum(&self) -> bool {
        let over = (0..self.mate.len()).map(|p| self.is_over(p)).collect();
        alternating_summands(self.mate.clone(), over)
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.crossings.iter().map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]")).collect();
        write!(f, "{}", terms.join(" "))
    }
}

/// Pairs the two ports carrying each edge label.
fn pair_ports(crossings: &[[u32; 4]]) -> Result<Vec<Port>, ParseError> {
    let mut seen: BTreeMap<u32, Vec<Port>> = BTreeMap::new();
    for (x, c) in crossings.iter().enumerate() {
        for (i, &l) in c.iter().enumerate() {
            if l == 0 {
                return Err(ParseError::Syntax { index: x, message: "edge labels must be positive".into() });
            }
            seen.entry(l).or_default().push(4 * x + i);
        }
    }
    let mut mate = vec![usize::MAX; 4 * crossings.len()];
    for (&label, ports) in &seen {
        if ports.len() != 2 {
            return Err(ParseError::Label { label, count: ports.len(), crossing: crossing_of(ports[0]) });
        }
        mate[ports[0]] = ports[1];
        mate[ports[1]] = ports[0];
    }
    Ok(mate)
}

/// Resolves which over-port is incoming at every crossing.
fn orient(crossings: &[[u32; 4]], mate: &[Port]) -> Result<Vec<u8>, ParseError> {
    let n = mate.len();
    let mut incoming: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    let set = |incoming: &mut Vec<Option<bool>>, queue: &mut VecDeque<Port>, p: Port, v: bool| -> Result<(), ParseError> {
        match incoming[p] {
            Some(old) if old != v => Err(ParseError::Orientation { crossing: crossing_of(p) }),
            Some(_) => Ok(()),
            None => {
                incoming[p] = Some(v);
                queue.push_back(p);
                Ok(())
            }
        }
    };
    for x in 0..crossings.len() {
        set(&mut incoming, &mut queue, 4 * x, true)?;
        set(&mut incoming, &mut queue, 4 * x + 2, false)?;
    }
    let mut seed = 0;
    loop {
        while let Some(p) = queue.pop_front() {
            let v = incoming[p].unwrap();
            set(&mut incoming, &mut queue, mate[p], !v)?;
            set(&mut incoming, &mut queue, straight(p), !v)?;
        }
        // Components that never pass under anything: orient them by label succession.
        while seed < n && incoming[seed].is_some() {
            seed += 1;
        }
        if seed == n {
            break;
        }
        let x = crossing_of(seed);
        let (lb, ld) = (crossings[x][1], crossings[x][3]);
        let d_in = if ld + 1 == lb {
            true
        } else if lb + 1 == ld {
            false
        } else {
            ld >= lb
        };
        set(&mut incoming, &mut queue, 4 * x + 3, d_in)?;
    }
    Ok((0..crossings.len()).map(|x| if incoming[4 * x + 3] == Some(true) { 3 } else { 1 }).collect())
}

fn alternating_summands(mate: Vec<Port>, over: Vec<bool>) -> bool {
    let ports = mate.len();
    if (0..ports).all(|p| over[p] != over[mate[p]]) {
        return true;
    }
    let n = ports / 4;
    let edges: Vec<(Port, Port)> = (0..ports).filter(|&p| p < mate[p]).map(|p| (p, mate[p])).collect();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (p1, q1) = edges[i];
            let (mut p2, mut q2) = edges[j];
            // Crossings reachable from p1's crossing without the two edges.
            let mut side = vec![false; n];
            let mut stack = vec![crossing_of(p1)];
            side[crossing_of(p1)] = true;
            while let Some(x) = stack.pop() {
                for (i, &m) in mate[4 * x..4 * x + 4].iter().enumerate() {
                    let p = 4 * x + i;
                    if p == p1 || p == q1 || p == p2 || p == q2 {
                        continue;
                    }
                    let y = crossing_of(m);
                    if !side[y] {
                        side[y] = true;
                        stack.push(y);
                    }
                }
            }
            if side[crossing_of(q1)] {
                continue;
            }
            if !side[crossing_of(p2)] {
                std::mem::swap(&mut p2, &mut q2);
            }
            if !side[crossing_of(p2)] || side[crossing_of(q2)] {
                continue;
            }
            let split = |keep: bool, a: Port, b: Port| {
                let index: Vec<Option<usize>> = {
                    let mut k = 0;
                    (0..n)
                        .map(|x| {
                            (side[x] == keep).then(|| {
                                k += 1;
                                k - 1
                            })
                        })
                        .collect()
                };
                let remap = |p: Port| 4 * index[crossing_of(p)].unwrap() + position_of(p);
                let count = index.iter().flatten().count();
                let mut m = vec![0; 4 * count];
                let mut o = vec![false; 4 * count];
                for p in (0..ports).filter(|&p| side[crossing_of(p)] == keep) {
                    let q = if p == a {
                        b
                    } else if p == b {
                        a
                    } else {
                        mate[p]
                    };
                    m[remap(p)] = remap(q);
                    o[remap(p)] = over[p];
                }
                (m, o)
            };
            let (m1, o1) = split(true, p1, p2);
            let (m2, o2) = split(false, q1, q2);
            return alternating_summands(m1, o1) && alternating_summands(m2, o2);
        }
    }
    false
}

/// Parses whitespace- or comma-separated `X[a,b,c,d]` terms. An empty text
/// is the crossingless unknot.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram, ParseError> {
    let mut crossings = Vec::new();
    let mut rest = text.trim();
    if let Some(inner) = rest.strip_prefix("PD[").and_then(|r| r.strip_suffix(']')) {
        rest = inner;
    }
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let index = crossings.len();
        let syntax = |message: &str| ParseError::Syntax { index, message: message.to_string() };
        let body = rest.strip_prefix("X[").or_else(|| rest.strip_prefix("x[")).ok_or_else(|| syntax("expected `X[`"))?;
        let close = body.find(']').ok_or_else(|| syntax("missing `]`"))?;
        let labels: Vec<u32> = body[..close]
            .split(',')
            .map(|s| s.trim().parse::<u32>().map_err(|_| syntax(&format!("bad label {:?}", s.trim()))))
            .collect::<Result<_, _>>()?;
        if labels.len() != 4 {
            return Err(syntax(&format!("expected 4 labels, found {}", labels.len())));
        }
        crossings.push([labels[0], labels[1], labels[2], labels[3]]);
        rest = &body[close + 1..];
    }
    let free = usize::from(crossings.is_empty());
    PlanarDiagram::new(crossings, free)
}

/// Parses a braid word of signed generator indices (`"1 -2 1"`, also
/// accepting commas) and returns its closure. The strand count defaults to
/// one more than the largest index used.
pub fn parse_braid(word: &str, strands: Option<usize>) -> Result<PlanarDiagram, ParseError> {
    let mut gens = Vec::new();
    for (position, tok) in word.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).enumerate() {
        let g: i64 = tok.parse().map_err(|_| ParseError::Syntax { index: position, message: format!("bad generator {tok:?}") })?;
        if g == 0 {
            return Err(ParseError::BraidIndex { position, index: g });
        }
        gens.push(g);
    }
    let needed = gens.iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1);
    let strands = strands.unwrap_or(needed);
    if let Some(position) = gens.iter().position(|g| g.unsigned_abs() as usize + 1 > strands) {
        return Err(ParseError::BraidStrands { position, strands });
    }
    Ok(braid_closure(&gens, strands.max(1)))
}

/// The closure of a braid on `strands` strands; generator `k > 0` is a
/// positive crossing between strands `k` and `k + 1`.
pub fn braid_closure(gens: &[i64], strands: usize) -> PlanarDiagram {
    let mut cur: Vec<u32> = (0..strands as u32).collect();
    let mut next = strands as u32;
    let mut raw = Vec::with_capacity(gens.len());
    for &g in gens {
        let r = g.unsigned_abs() as usize;
        let l = r - 1;
        let (n1, n2) = (next, next + 1);
        next += 2;
        if g > 0 {
            raw.push([cur[r], n1, n2, cur[l]]);
            cur[l] = n2;
            cur[r] = n1;
        } else {
            raw.push([cur[l], cur[r], n1, n2]);
            cur[r] = n1;
            cur[l] = n2;
        }
    }
    // Close: the top segment at each position is the bottom segment there.
    let mut alias: Vec<u32> = (0..next).collect();
    let mut free = 0;
    for (j, &top) in cur.iter().enumerate() {
        if top == j as u32 {
            free += 1;
        } else {
            alias[top as usize] = j as u32;
        }
    }
    let crossings = raw.iter().map(|c| c.map(|l| alias[l as usize] + 1)).collect();
    PlanarDiagram::new(crossings, free).expect("braid closures are valid diagrams").relabeled()
}

/// Minimal union-find used throughout the crate.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), sets: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.sets -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn parses_trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert!(d.is_connected());
        assert_eq!(d.writhe().abs(), 3);
        assert!(d.is_strictly_alternating());
    }

    #[test]
    fn empty_pd_is_unknot() {
        let d = parse_pd("").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert!(d.is_connected());
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.mirror(), d);
    }

    #[test]
    fn single_kink() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 1);
        assert_eq!(d.mirror().writhe(), -1);
        assert!(d.is_strictly_alternating());
    }

    #[test]
    fn parse_errors_carry_crossing_index() {
        assert!(matches!(parse_pd("X[1,2,3,4] Y[1,2]"), Err(ParseError::Syntax { index: 1, .. })));
        assert!(matches!(parse_pd("X[1,2,3]"), Err(ParseError::Syntax { index: 0, .. })));
        assert!(matches!(parse_pd("X[1,2,3,4]"), Err(ParseError::Label { count: 1, .. })));
        assert!(matches!(parse_pd("X[1,1,1,2]"), Err(ParseError::Label { label: 1, count: 3, .. })));
        assert!(matches!(parse_pd("X[0,0,1,1]"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn inconsistent_under_strands_are_rejected() {
        // Both under-strands leave through the shared edge.
        assert!(matches!(parse_pd("X[1,3,2,4] X[5,4,2,3] X[1,6,5,6]"), Err(ParseError::Orientation { .. })));
    }

    #[test]
    fn braid_closures() {
        let t = parse_braid("1 1 1", None).unwrap();
        assert_eq!((t.crossing_count(), t.component_count(), t.writhe()), (3, 1, 3));
        assert!(t.is_connected());
        let u = parse_braid("", None).unwrap();
        assert_eq!((u.crossing_count(), u.component_count()), (0, 1));
        let h = parse_braid("1 -1", None).unwrap();
        assert_eq!(h.crossing_count(), 2);
        assert!(h.is_connected());
        assert_eq!(h.writhe(), 0);
        assert!(matches!(parse_braid("1 0", None), Err(ParseError::BraidIndex { position: 1, .. })));
        assert!(matches!(parse_braid("3", Some(2)), Err(ParseError::BraidStrands { .. })));
        let split = parse_braid("1", Some(3)).unwrap();
        assert!(!split.is_connected());
        assert_eq!(split.free_circles(), 1);
    }

    #[test]
    fn mirror_is_involution_and_negates_writhe() {
        for w in ["1 1 1", "1 -2 1 -2", "1 2 -1 2 2", "1 1 2 -1 -1 2 2 3 -2"] {
            let d = parse_braid(w, None).unwrap();
            assert_eq!(d.mirror().mirror(), d);
            assert_eq!(d.mirror().writhe(), -d.writhe());
        }
    }

    #[test]
    fn relabeling_is_sequential() {
        let d = parse_pd(TREFOIL).unwrap().map_labels(|l| 10 * l + 3).unwrap();
        let r = d.relabeled();
        assert_eq!(r.writhe(), d.writhe());
        let mut labels: Vec<u32> = r.crossings().iter().flatten().copied().collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn over_only_component_uses_label_order() {
        // Hopf link: each component passes under once.
        let hopf = parse_pd("X[4,1,3,2] X[2,3,1,4]").unwrap();
        assert_eq!(hopf.component_count(), 2);
        assert_eq!(hopf.writhe().abs(), 2);
    }

    #[test]
    fn dual_state_involution() {
        let s = State::new(vec![Smoothing::A, Smoothing::B]);
        let t = dual_state(&s);
        assert_eq!(t, State::new(vec![Smoothing::B, Smoothing::A]));
        assert_eq!(dual_state(&t), s);
        assert_eq!(dual_state(&State::all_a(3)), State::all_b(3));
    }

    #[test]
    fn connected_sum_of_kinks_is_not_strictly_alternating() {
        // Two positive kinks in a row.
        let d = parse_braid("1 2", None).unwrap();
        assert!(!d.is_strictly_alternating());
        assert!(d.is_alternating_connected_sum());
        let d = parse_braid("1 -2 1 -2", None).unwrap();
        assert!(d.is_strictly_alternating());
    }
}
