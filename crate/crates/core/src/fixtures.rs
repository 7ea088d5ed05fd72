//! Named diagrams used by the tests, the CLI and the verification harness.

use crate::diagram::{parse_pd, PlanarDiagram};
use crate::error::ParseError;

/// Standard trefoil PD; left-handed (writhe −3) under the crate's convention.
pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

/// An 8-crossing diagram of 8_21 whose all-A graph has vertex rotations of
/// sizes 10, 3, 3 and faces of sizes 6, 4, 2, 2, 2.
pub const EIGHT_21: &str = "X[1,7,2,6] X[3,1,4,16] X[7,3,8,2] X[15,13,16,12] X[9,15,10,14] X[13,9,14,8] X[10,5,11,6] X[4,11,5,12]";

/// One-crossing diagram of the unknot with writhe +1.
pub const POSITIVE_KINK: &str = "X[1,1,2,2]";

pub fn trefoil() -> PlanarDiagram {
    parse_pd(TREFOIL).expect("fixture parses")
}

pub fn figure_eight() -> PlanarDiagram {
    parse_pd(FIGURE_EIGHT).expect("fixture parses")
}

pub fn eight_21() -> PlanarDiagram {
    parse_pd(EIGHT_21).expect("fixture parses")
}

pub fn positive_kink() -> PlanarDiagram {
    parse_pd(POSITIVE_KINK).expect("fixture parses")
}

/// The standard pretzel diagram with one twist column per entry; the sign
/// of an entry picks the handedness of its column.
pub fn pretzel(twists: &[i32]) -> Result<PlanarDiagram, ParseError> {
    let n = twists.len();
    if n == 0 || twists.contains(&0) {
        return Err(ParseError::Syntax { index: 0, message: "pretzel columns need nonzero twists".into() });
    }
    let mut next = 0u32;
    let mut fresh = || {
        next += 1;
        next
    };
    let top: Vec<u32> = (0..n).map(|_| fresh()).collect();
    let bottom: Vec<u32> = (0..n).map(|_| fresh()).collect();
    let mut crossings = Vec::new();
    for (i, &t) in twists.iter().enumerate() {
        let k = t.unsigned_abs() as usize;
        let left_of = (i + n - 1) % n;
        let mut north = (top[left_of], top[i]);
        for j in 0..k {
            let south = if j + 1 == k { (bottom[left_of], bottom[i]) } else { (fresh(), fresh()) };
            let (nw, ne, sw, se) = (north.0, north.1, south.0, south.1);
            // Counterclockwise from an end of the under-strand.
            crossings.push(if t > 0 { [sw, se, ne, nw] } else { [nw, sw, se, ne] });
            north = south;
        }
    }
    PlanarDiagram::from_unoriented(crossings, 0)
}
