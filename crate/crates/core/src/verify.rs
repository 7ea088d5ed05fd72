//! Randomized self-check: every trial draws a seeded braid closure and
//! compares the independent computations against each other.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bracket::{adequacy, bracket_statesum, bracket_via_brt, span_bounds_from, turaev_genus_bound_from};
use crate::diagram::{dual_state, PlanarDiagram, State};
use crate::error::Error;
use crate::generate::random_connected_braid;
use crate::state_graph::{build_state_graph, is_alternating_diagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: usize,
    pub max_crossings: usize,
    pub max_strands: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { trials: 200, max_crossings: 12, max_strands: 5, seed: 7 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub trial: usize,
    pub diagram: String,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub trials: usize,
    pub max_crossings: usize,
    pub max_strands: usize,
    pub bracket_agreements: usize,
    pub duality_agreements: usize,
    pub mirror_agreements: usize,
    pub bound_checks: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The diagram drawn for `trial`, independent of how trials are scheduled.
pub fn trial_diagram(config: &VerifyConfig, trial: usize) -> PlanarDiagram {
    random_connected_braid(&mut trial_rng(config.seed, trial), config.max_crossings, config.max_strands)
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

#[derive(Default)]
struct Outcome {
    bracket: bool,
    duality: bool,
    mirror: bool,
    bounds: bool,
    mismatches: Vec<Mismatch>,
}

fn run_trial(config: &VerifyConfig, trial: usize) -> Outcome {
    let mut rng = trial_rng(config.seed, trial);
    let d = random_connected_braid(&mut rng, config.max_crossings, config.max_strands);
    let mut out = Outcome::default();
    let mut mismatches = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        mismatches.push(Mismatch { trial, diagram: d.to_string(), check, detail });
    };

    let oracle = bracket_statesum(&d);
    let via_brt = bracket_via_brt(&d);
    match (&oracle, &via_brt) {
        (Ok(a), Ok(b)) if a == b => out.bracket = true,
        (Ok(a), Ok(b)) => fail("bracket", format!("statesum {a} but via BRT {b}")),
        (a, b) => fail("bracket", format!("statesum {a:?}, via BRT {b:?}")),
    }

    let n = d.crossing_count();
    let mask = if n == 0 { 0 } else { rng.gen::<u64>() & ((1u64 << n) - 1) };
    let s = State::from_mask(n, mask);
    match (build_state_graph(&d, &s), build_state_graph(&d, &dual_state(&s))) {
        (Ok(g), Ok(h)) => {
            let (a, b) = (g.counts(), h.counts());
            if a.v == b.f && a.f == b.v && a.g == b.g {
                out.duality = true;
            } else {
                fail("duality", format!("state {s}: {a:?} vs dual {b:?}"));
            }
        }
        (g, h) => fail("duality", format!("state {s}: {g:?} / {h:?}")),
    }

    if let Ok(b) = &oracle {
        match bracket_statesum(&d.mirror()) {
            Ok(m) if m == b.invert_variable() => out.mirror = true,
            Ok(m) => fail("mirror", format!("mirror bracket {m}, expected {}", b.invert_variable())),
            Err(e) => fail("mirror", e.to_string()),
        }
        let bounds = (|| -> Result<(), Error> {
            span_bounds_from(&d, b, adequacy(&d)?)?;
            turaev_genus_bound_from(&d, b)?;
            is_alternating_diagram(&d)?;
            Ok(())
        })();
        match bounds {
            Ok(()) => out.bounds = true,
            Err(e) => fail("bounds", e.to_string()),
        }
    }
    out.mismatches = mismatches;
    out
}

/// Runs every trial (in parallel) and tallies the results in trial order.
pub fn run_verify(config: &VerifyConfig) -> VerifySummary {
    let outcomes: Vec<Outcome> = (0..config.trials).into_par_iter().map(|i| run_trial(config, i)).collect();
    let count = |f: fn(&Outcome) -> bool| outcomes.iter().filter(|o| f(o)).count();
    VerifySummary {
        seed: config.seed,
        trials: config.trials,
        max_crossings: config.max_crossings,
        max_strands: config.max_strands,
        bracket_agreements: count(|o| o.bracket),
        duality_agreements: count(|o| o.duality),
        mirror_agreements: count(|o| o.mirror),
        bound_checks: count(|o| o.bounds),
        mismatches: outcomes.into_iter().flat_map(|o| o.mismatches).collect(),
    }
}
