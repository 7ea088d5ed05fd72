//! The ribbon graph of a Kauffman state.
//!
//! Vertices are the state circles, one edge per crossing. Each circle is
//! read in its nesting-parity orientation and lists the chord ends it meets;
//! chord end `(x, site)` becomes half-edge `2x + site`.

use crate::circles::{count_circles, trace_state_circles_rooted, StateCircles};
use crate::diagram::{dual_state, PlanarDiagram, Port, State};
use crate::error::Error;
use crate::ribbon::RibbonGraph;

/// Ribbon graph of `s` built from already traced circles.
pub fn ribbon_from_circles(circles: &StateCircles) -> RibbonGraph {
    let vertices = circles.circles.iter().map(|c| c.chord_ends.iter().map(|&(x, site)| 2 * x as u32 + site as u32).collect()).collect();
    RibbonGraph::new(vertices).expect("each crossing contributes both chord ends")
}

pub fn build_state_graph(d: &PlanarDiagram, s: &State) -> Result<RibbonGraph, Error> {
    build_state_graph_rooted(d, s, &[])
}

/// [`build_state_graph`] with an explicit outer corner (see
/// [`trace_state_circles_rooted`]).
pub fn build_state_graph_rooted(d: &PlanarDiagram, s: &State, roots: &[Port]) -> Result<RibbonGraph, Error> {
    d.require_connected()?;
    let circles = trace_state_circles_rooted(d, s, roots);
    let g = ribbon_from_circles(&circles);
    let c = g.counts();
    let dual_circles = count_circles(d, &dual_state(s));
    if c.v != circles.len() || c.e != d.crossing_count() || c.f != dual_circles {
        return Err(Error::Postcondition(format!(
            "state graph counts v={} e={} f={} disagree with circles {} / crossings {} / dual circles {}",
            c.v,
            c.e,
            c.f,
            circles.len(),
            d.crossing_count(),
            dual_circles
        )));
    }
    Ok(g)
}

pub fn all_a(d: &PlanarDiagram) -> Result<RibbonGraph, Error> {
    build_state_graph(d, &State::all_a(d.crossing_count()))
}

pub fn all_b(d: &PlanarDiagram) -> Result<RibbonGraph, Error> {
    build_state_graph(d, &State::all_b(d.crossing_count()))
}

/// Genus of the all-A ribbon graph of this particular diagram.
pub fn turaev_genus_of_diagram(d: &PlanarDiagram) -> Result<usize, Error> {
    let g = all_a(d)?.genus();
    let n = d.crossing_count();
    let sa = count_circles(d, &State::all_a(n));
    let sb = count_circles(d, &State::all_b(n));
    let twice = 2 + n as i64 - sa as i64 - sb as i64;
    if twice != 2 * g as i64 {
        return Err(Error::Postcondition(format!("genus {g} disagrees with circle-count genus {twice}/2")));
    }
    Ok(g)
}

/// Whether the all-A ribbon graph is planar. Cross-checked against the
/// direct over/under scans: a strictly alternating diagram must have genus
/// 0, and a genus-0 diagram must split into strictly alternating summands.
pub fn is_alternating_diagram(d: &PlanarDiagram) -> Result<bool, Error> {
    let genus_zero = turaev_genus_of_diagram(d)? == 0;
    let strict = d.is_strictly_alternating();
    let summands = d.is_alternating_connected_sum();
    if (strict && !genus_zero) || genus_zero != summands {
        return Err(Error::Postcondition(format!(
            "alternation scans (strict {strict}, summands {summands}) disagree with genus-0 {genus_zero}"
        )));
    }
    Ok(genus_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, parse_pd};

    #[test]
    fn trefoil_state_graph() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let c = all_a(&d).unwrap().counts();
        assert_eq!((c.v, c.e, c.f, c.g), (3, 3, 2, 0));
        assert_eq!(all_b(&d).unwrap().genus(), 0);
        assert!(is_alternating_diagram(&d).unwrap());
    }

    #[test]
    fn unknot_is_isolated_vertex() {
        let g = all_a(&PlanarDiagram::unknot()).unwrap();
        assert_eq!(g, RibbonGraph::isolated(1));
    }

    #[test]
    fn disconnected_rejected() {
        let d = parse_braid("1", Some(3)).unwrap();
        assert_eq!(all_a(&d), Err(Error::DisconnectedDiagram));
        assert_eq!(turaev_genus_of_diagram(&PlanarDiagram::unlink(2)), Err(Error::DisconnectedDiagram));
    }

    #[test]
    fn kink_is_alternating() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        assert!(is_alternating_diagram(&d).unwrap());
        assert_eq!(turaev_genus_of_diagram(&d).unwrap(), 0);
    }

    #[test]
    fn mirror_swaps_a_and_b() {
        for w in ["1 1 1 2 -1 -1 2 2", "1 -2 1 -2", "1 2 2 -1 3 -2 3"] {
            let d = parse_braid(w, None).unwrap();
            assert_eq!(all_b(&d).unwrap().counts(), all_a(&d.mirror()).unwrap().counts());
            assert_eq!(turaev_genus_of_diagram(&d).unwrap(), turaev_genus_of_diagram(&d.mirror()).unwrap());
        }
    }
}
