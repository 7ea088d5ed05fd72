//! Kauffman bracket and Jones polynomial, adequacy, span bounds and the
//! Turaev-genus estimate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::brt::{brt, Method};
use crate::circles::{count_circles, count_circles_mask};
use crate::diagram::{PlanarDiagram, State};
use crate::error::Error;
use crate::poly::{specialize_brt, substitute_t, LaurentA, LaurentT};
use crate::ribbon::RibbonGraph;
use crate::state_graph::{all_a, all_b, turaev_genus_of_diagram};

pub const DEFAULT_STATESUM_CAP: usize = 22;

/// Sum over all smoothings with the default crossing cap.
pub fn bracket_statesum(d: &PlanarDiagram) -> Result<LaurentA, Error> {
    bracket_statesum_with_cap(d, DEFAULT_STATESUM_CAP)
}

/// `Σ_s A^{#A − #B} δ^{|s| − 1}` over all `2^c` states.
pub fn bracket_statesum_with_cap(d: &PlanarDiagram, cap: usize) -> Result<LaurentA, Error> {
    let c = d.crossing_count();
    if c > cap || c >= 64 {
        return Err(Error::TooManyCrossings { crossings: c, cap });
    }
    const BLOCK: u64 = 1 << 10;
    let total = 1u64 << c;
    let tally = |lo: u64, hi: u64| {
        let mut visited = vec![false; d.port_count()];
        let mut acc: BTreeMap<(i64, usize), u64> = BTreeMap::new();
        for mask in lo..hi {
            let b = mask.count_ones() as i64;
            let circles = count_circles_mask(d, mask, &mut visited);
            *acc.entry((c as i64 - 2 * b, circles)).or_default() += 1;
        }
        acc
    };
    let counts = (0..total.div_ceil(BLOCK)).into_par_iter().map(|blk| tally(blk * BLOCK, ((blk + 1) * BLOCK).min(total))).reduce(
        BTreeMap::new,
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    let delta = LaurentA::delta();
    let mut powers = vec![LaurentA::one()];
    let mut out = LaurentA::zero();
    for ((a, circles), n) in counts {
        while powers.len() < circles {
            let next = powers.last().unwrap() * &delta;
            powers.push(next);
        }
        out += (&powers[circles - 1] * &LaurentA::a_pow(a)).scale(&BigInt::from(n));
    }
    Ok(out)
}

/// Bracket through the BRT polynomial of the all-A graph (recursive method).
pub fn bracket_via_brt(d: &PlanarDiagram) -> Result<LaurentA, Error> {
    bracket_via_brt_with(d, Method::Recursive)
}

pub fn bracket_via_brt_with(d: &PlanarDiagram, method: Method) -> Result<LaurentA, Error> {
    let g = all_a(d)?;
    bracket_from_graph(&g, method)
}

/// Specializes the BRT polynomial of an all-A graph to the bracket.
pub fn bracket_from_graph(g: &RibbonGraph, method: Method) -> Result<LaurentA, Error> {
    let c = brt(g, method, None)?;
    specialize_brt(&c, g.edge_count(), g.vertex_count())
}

/// `(−A)^{−3w} ⟨P⟩` written in `t = A^{−4}`.
pub fn jones(d: &PlanarDiagram) -> Result<LaurentT, Error> {
    let bracket = bracket_via_brt(d)?;
    jones_from_bracket(d, &bracket)
}

pub fn jones_from_bracket(d: &PlanarDiagram, bracket: &LaurentA) -> Result<LaurentT, Error> {
    let v = substitute_t(bracket, d.writhe());
    if d.component_count() == 1 && !v.has_integral_exponents() {
        return Err(Error::Postcondition(format!("knot Jones polynomial has fractional exponents: {v}")));
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Adequacy {
    pub a_adequate: bool,
    pub b_adequate: bool,
}

fn has_loop(g: &RibbonGraph) -> Result<bool, Error> {
    for e in g.edges() {
        if g.is_loop(e)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Loop scans of the all-A and all-B graphs; the all-B scan is repeated on
/// the all-A graph of the mirror image and the two must agree.
pub fn adequacy(d: &PlanarDiagram) -> Result<Adequacy, Error> {
    let a = !has_loop(&all_a(d)?)?;
    let b = !has_loop(&all_b(d)?)?;
    if b != !has_loop(&all_a(&d.mirror())?)? {
        return Err(Error::Postcondition("all-B loop scan disagrees with the mirror's all-A scan".into()));
    }
    Ok(Adequacy { a_adequate: a, b_adequate: b })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanBounds {
    pub edges: usize,
    pub a_circles: usize,
    pub b_circles: usize,
    /// `e + 2v − 2`, an upper bound for the top degree of the bracket.
    pub max_bound: i64,
    /// `−e − 2v′ + 2`, a lower bound for the bottom degree.
    pub min_bound: i64,
    pub span_bound: i64,
    pub max_degree: i64,
    pub min_degree: i64,
    pub span: i64,
    /// `Some(true)` when both adequacy flags hold and `span = 2e + 2v + 2v′ − 4`.
    pub exact_if_adequate: Option<bool>,
}

pub fn span_bounds(d: &PlanarDiagram) -> Result<SpanBounds, Error> {
    let bracket = bracket_via_brt(d)?;
    span_bounds_from(d, &bracket, adequacy(d)?)
}

/// [`span_bounds`] for an already computed bracket and adequacy.
pub fn span_bounds_from(d: &PlanarDiagram, bracket: &LaurentA, adequate: Adequacy) -> Result<SpanBounds, Error> {
    d.require_connected()?;
    let n = d.crossing_count();
    let e = n as i64;
    let v = count_circles(d, &State::all_a(n));
    let vp = count_circles(d, &State::all_b(n));
    let max_bound = e + 2 * v as i64 - 2;
    let min_bound = -e - 2 * vp as i64 + 2;
    let (Some(lo), Some(hi)) = (bracket.min_degree(), bracket.max_degree()) else {
        return Err(Error::Postcondition("bracket of a nonempty diagram vanished".into()));
    };
    let fail = |what: &str| Err(Error::Postcondition(format!("{what}: bracket degrees [{lo}, {hi}], bounds [{min_bound}, {max_bound}]")));
    if hi > max_bound || lo < min_bound {
        return fail("bracket exceeds its degree bounds");
    }
    if adequate.a_adequate && hi != max_bound {
        return fail("A-adequate diagram misses its top degree");
    }
    if adequate.b_adequate && lo != min_bound {
        return fail("B-adequate diagram misses its bottom degree");
    }
    let exact_if_adequate = if adequate.a_adequate && adequate.b_adequate {
        let formula = 2 * e + 2 * v as i64 + 2 * vp as i64 - 4;
        if hi - lo != formula {
            return fail("adequate span differs from 2e + 2v + 2v' - 4");
        }
        Some(true)
    } else {
        None
    };
    Ok(SpanBounds {
        edges: n,
        a_circles: v,
        b_circles: vp,
        max_bound,
        min_bound,
        span_bound: max_bound - min_bound,
        max_degree: hi,
        min_degree: lo,
        span: hi - lo,
        exact_if_adequate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TuraevBound {
    pub genus_of_diagram: usize,
    pub crossings: usize,
    pub jones_span: i64,
    /// `c − span_t V`; never below `genus_of_diagram`.
    pub upper_bound_from_span: i64,
    pub sharp: bool,
}

pub fn turaev_genus_bound(d: &PlanarDiagram) -> Result<TuraevBound, Error> {
    let bracket = bracket_via_brt(d)?;
    turaev_genus_bound_from(d, &bracket)
}

pub fn turaev_genus_bound_from(d: &PlanarDiagram, bracket: &LaurentA) -> Result<TuraevBound, Error> {
    let genus = turaev_genus_of_diagram(d)?;
    let v = jones_from_bracket(d, bracket)?;
    let quarters = v.span_quarters();
    if quarters % 4 != 0 || quarters != bracket.span() {
        return Err(Error::Postcondition(format!("Jones span {quarters}/4 is not a quarter of the bracket span {}", bracket.span())));
    }
    let span_t = quarters / 4;
    let c = d.crossing_count();
    let bound = c as i64 - span_t;
    if genus as i64 > bound {
        return Err(Error::Postcondition(format!("diagram genus {genus} exceeds c - span = {bound}")));
    }
    Ok(TuraevBound {
        genus_of_diagram: genus,
        crossings: c,
        jones_span: span_t,
        upper_bound_from_span: bound,
        sharp: genus as i64 == bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusCertificate {
    pub genus: usize,
    pub certified_invariant: bool,
    /// `4e − span⟨P⟩`, equal to `4·genus` when certified.
    pub witness: Option<i64>,
}

pub fn genus_invariance_certificate(d: &PlanarDiagram) -> Result<GenusCertificate, Error> {
    let bracket = bracket_via_brt(d)?;
    genus_invariance_certificate_from(d, &bracket, adequacy(d)?)
}

pub fn genus_invariance_certificate_from(d: &PlanarDiagram, bracket: &LaurentA, adequate: Adequacy) -> Result<GenusCertificate, Error> {
    let genus = turaev_genus_of_diagram(d)?;
    if !(adequate.a_adequate && adequate.b_adequate) {
        return Ok(GenusCertificate { genus, certified_invariant: false, witness: None });
    }
    let witness = 4 * d.crossing_count() as i64 - bracket.span();
    if witness != 4 * genus as i64 {
        return Err(Error::Postcondition(format!("adequate diagram: 4e - span = {witness} but genus is {genus}")));
    }
    Ok(GenusCertificate { genus, certified_invariant: true, witness: Some(witness) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_braid, parse_pd};
    use crate::poly::TQuarter;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn trivial_diagrams() {
        assert_eq!(bracket_statesum(&PlanarDiagram::unknot()).unwrap(), LaurentA::one());
        assert_eq!(bracket_via_brt(&PlanarDiagram::unknot()).unwrap(), LaurentA::one());
        assert_eq!(bracket_statesum(&PlanarDiagram::unlink(2)).unwrap(), LaurentA::delta());
        assert_eq!(bracket_via_brt(&PlanarDiagram::unlink(2)), Err(Error::DisconnectedDiagram));
    }

    #[test]
    fn kinks() {
        let pos = parse_pd("X[1,1,2,2]").unwrap();
        let neg = pos.mirror();
        assert_eq!((pos.writhe(), neg.writhe()), (1, -1));
        let minus_a3 = -LaurentA::a_pow(3);
        for f in [bracket_statesum, bracket_via_brt] {
            assert_eq!(f(&pos).unwrap(), minus_a3);
            assert_eq!(f(&neg).unwrap(), minus_a3.invert_variable());
        }
        assert_eq!(jones(&pos).unwrap(), LaurentT::one());
        assert_eq!(jones(&neg).unwrap(), LaurentT::one());
        let a = adequacy(&pos).unwrap();
        assert!(!(a.a_adequate && a.b_adequate));
        assert!(!genus_invariance_certificate(&pos).unwrap().certified_invariant);
    }

    #[test]
    fn trefoil() {
        let d = parse_pd(TREFOIL).unwrap();
        let b = bracket_statesum(&d).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.span(), 12);
        for m in [Method::Recursive, Method::Subgraph, Method::Tree] {
            assert_eq!(bracket_via_brt_with(&d, m).unwrap(), b);
        }
        // left-handed under the pinned convention: V = -t^-4 + t^-3 + t^-1
        let v = jones(&d).unwrap();
        let expect = LaurentT::from_terms([(TQuarter(-16), -1), (TQuarter(-12), 1), (TQuarter(-4), 1)]);
        assert_eq!(v, expect);
        assert_eq!(adequacy(&d).unwrap(), Adequacy { a_adequate: true, b_adequate: true });
        let s = span_bounds(&d).unwrap();
        assert_eq!((s.span, s.span_bound, s.exact_if_adequate), (12, 12, Some(true)));
        let t = turaev_genus_bound(&d).unwrap();
        assert_eq!((t.genus_of_diagram, t.jones_span, t.upper_bound_from_span), (0, 3, 0));
        let cert = genus_invariance_certificate(&d).unwrap();
        assert_eq!((cert.genus, cert.certified_invariant), (0, true));
    }

    #[test]
    fn mirror_inverts_variable() {
        for w in ["1 1 1", "1 -2 1 -2", "1 1 2 -1 2 2 -3 2 3", "1 -1"] {
            let d = parse_braid(w, None).unwrap();
            assert_eq!(bracket_statesum(&d.mirror()).unwrap(), bracket_statesum(&d).unwrap().invert_variable());
        }
    }

    #[test]
    fn statesum_cap() {
        let d = parse_braid("1 1 1 1 1", None).unwrap();
        assert_eq!(bracket_statesum_with_cap(&d, 4), Err(Error::TooManyCrossings { crossings: 5, cap: 4 }));
    }
}
