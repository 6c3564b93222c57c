//! Batch certification over colourings, reduced up to dihedral symmetry.

use serde::{Deserialize, Serialize};

use crate::arc::{enumerate_arcs, is_permitted};
use crate::error::Result;
use crate::polygon::{Colour, PolygonSpec};
use crate::shelling::{certify_with, GreedyConfig, Verdict};

/// Every colouring of an `m`-cycle with at least one blue vertex. With
/// `up_to_symmetry`, only the lexicographically least representative of
/// each rotation/reflection class is kept. Sorted by colour string.
pub fn colourings(m: usize, up_to_symmetry: bool) -> Vec<Vec<Colour>> {
    let mut out: Vec<Vec<Colour>> = (0u64..1 << m)
        .map(|bits| {
            (0..m)
                .map(|v| {
                    if bits >> v & 1 == 1 {
                        Colour::Red
                    } else {
                        Colour::Blue
                    }
                })
                .collect::<Vec<_>>()
        })
        .filter(|c| c.contains(&Colour::Blue))
        .filter(|c| !up_to_symmetry || is_canonical(c))
        .collect();
    out.sort_by_key(|c| c.iter().map(|c| c.symbol()).collect::<String>());
    out
}

fn is_canonical(c: &[Colour]) -> bool {
    let m = c.len();
    let key = |v: Vec<Colour>| v.iter().map(|c| c.symbol()).collect::<String>();
    let own = key(c.to_vec());
    (0..m).all(|r| {
        let rotated: Vec<Colour> = (0..m).map(|i| c[(i + r) % m]).collect();
        let mut reflected = rotated.clone();
        reflected.reverse();
        own <= key(rotated) && own <= key(reflected)
    })
}

/// Non-trivial iff some arc is rejected (both endpoints red).
pub fn is_nontrivial(spec: &PolygonSpec) -> bool {
    enumerate_arcs(spec, false)
        .into_iter()
        .any(|a| !is_permitted(spec, a))
}

/// Expected verdict: a ball for the permitted complex of a non-trivial
/// bicolouring, a sphere for the full complex (which is also what a trivial
/// bicolouring gives).
pub fn expected_verdict(spec: &PolygonSpec, permitted_only: bool) -> Verdict {
    if permitted_only && is_nontrivial(spec) {
        Verdict::ClosedBall
    } else {
        Verdict::Sphere
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub polygon: String,
    pub permitted_only: bool,
    pub nontrivial: bool,
    pub faces: usize,
    pub dimension: isize,
    pub pseudomanifold: bool,
    pub boundary_faces: usize,
    pub euler_characteristic: i64,
    pub shelling: String,
    pub verified: bool,
    pub wilson: bool,
    pub repaired: bool,
    pub verdict: Verdict,
    pub expected: Verdict,
}

impl SweepRow {
    pub fn agrees(&self) -> bool {
        self.verdict == self.expected
    }
}

/// The jobs of a sweep: for each `m`, the full complex followed by the
/// permitted complex of every colouring.
pub fn sweep_jobs(
    punctured: bool,
    ms: impl IntoIterator<Item = usize>,
    up_to_symmetry: bool,
) -> Result<Vec<(PolygonSpec, bool)>> {
    let mut jobs = Vec::new();
    for m in ms {
        jobs.push((PolygonSpec::uncoloured(m, punctured)?, false));
        for c in colourings(m, up_to_symmetry) {
            jobs.push((PolygonSpec::new(m, punctured, c)?, true));
        }
    }
    Ok(jobs)
}

pub fn sweep_row(
    spec: &PolygonSpec,
    permitted_only: bool,
    config: &GreedyConfig,
) -> Result<SweepRow> {
    let cert = certify_with(spec, permitted_only, config)?;
    Ok(SweepRow {
        polygon: spec.to_string(),
        permitted_only,
        nontrivial: is_nontrivial(spec),
        faces: cert.shelling.as_ref().map_or(0, |o| o.len()),
        dimension: cert.dimension,
        pseudomanifold: cert.pseudomanifold.is_pseudomanifold(),
        boundary_faces: cert.pseudomanifold.boundary_faces,
        euler_characteristic: cert.euler_characteristic,
        shelling: cert
            .shelling
            .as_ref()
            .map_or_else(|| "none".to_string(), |o| o.provenance().to_string()),
        verified: cert.shelling_verified,
        wilson: cert.wilson_verified,
        repaired: cert.repair.is_some(),
        verdict: cert.verdict,
        expected: expected_verdict(spec, permitted_only),
    })
}

pub const TABLE_HEADER: &str =
    "polygon                                  complex    trivial faces  dim pm  bdry   chi shelling    verified wilson repaired verdict";

/// One fixed-width table line.
pub fn format_row(r: &SweepRow) -> String {
    format!(
        "{:<40} {:<10} {:<7} {:>5} {:>4} {:<3} {:>5} {:>5} {:<11} {:<8} {:<6} {:<8} {}",
        r.polygon,
        if r.permitted_only {
            "permitted"
        } else {
            "full"
        },
        if r.nontrivial { "no" } else { "yes" },
        r.faces,
        r.dimension,
        if r.pseudomanifold { "yes" } else { "no" },
        r.boundary_faces,
        r.euler_characteristic,
        r.shelling,
        r.verified,
        r.wilson,
        r.repaired,
        r.verdict,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colouring_counts_up_to_symmetry() {
        // binary bracelets of length m, minus the all-red one
        for (m, n) in [(2, 2), (3, 3), (4, 5), (5, 7), (6, 12), (7, 17), (8, 29)] {
            assert_eq!(colourings(m, true).len(), n, "m={m}");
        }
        assert_eq!(colourings(5, false).len(), 31);
    }

    #[test]
    fn triviality() {
        let s = |c: &str| PolygonSpec::convex(c).unwrap();
        assert!(!is_nontrivial(&s("BBBBBR")));
        assert!(!is_nontrivial(&s("BBBBRR")));
        assert!(is_nontrivial(&s("BBBRRR")));
        assert!(is_nontrivial(&s("BRBRBR")));
        assert!(is_nontrivial(&PolygonSpec::punctured("BBBR").unwrap()));
    }
}
