//! Ball and sphere certificates: a shellable pseudo-manifold is a PL ball
//! when its boundary is non-empty and a PL sphere otherwise. The Euler
//! characteristic is checked against the verdict as a second line of
//! evidence.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    check_wilson_property, greedy_shelling, shell_coloured_convex, shell_coloured_punctured,
    verify_shelling, GreedyConfig, RepairEvent, ShellingOrder,
};
use crate::complex::{build_complex, PseudomanifoldReport};
use crate::error::Result;
use crate::polygon::PolygonSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ClosedBall,
    Sphere,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ClosedBall => "closed-ball",
            Verdict::Sphere => "sphere",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone)]
pub struct BallCertificate {
    pub polygon: PolygonSpec,
    pub permitted_only: bool,
    pub dimension: isize,
    pub pseudomanifold: PseudomanifoldReport,
    pub boundary_empty: bool,
    pub shelling: Option<ShellingOrder>,
    pub shelling_verified: bool,
    pub wilson_verified: bool,
    pub euler_characteristic: i64,
    pub repair: Option<RepairEvent>,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
}

/// Structured form of a [`BallCertificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub polygon: String,
    pub permitted_only: bool,
    pub dimension: isize,
    pub faces: usize,
    pub pseudomanifold: bool,
    pub pure: bool,
    pub strongly_connected: bool,
    pub boundary_faces: usize,
    pub boundary_empty: bool,
    pub shelling_provenance: Option<String>,
    pub shelling_verified: bool,
    pub wilson_verified: bool,
    pub euler_characteristic: i64,
    pub repaired: bool,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
}

impl BallCertificate {
    pub fn to_document(&self) -> CertificateDocument {
        CertificateDocument {
            polygon: self.polygon.to_string(),
            permitted_only: self.permitted_only,
            dimension: self.dimension,
            faces: self.shelling.as_ref().map_or(0, |o| o.len()),
            pseudomanifold: self.pseudomanifold.is_pseudomanifold(),
            pure: self.pseudomanifold.pure,
            strongly_connected: self.pseudomanifold.strongly_connected,
            boundary_faces: self.pseudomanifold.boundary_faces,
            boundary_empty: self.boundary_empty,
            shelling_provenance: self.shelling.as_ref().map(|o| o.provenance().to_string()),
            shelling_verified: self.shelling_verified,
            wilson_verified: self.wilson_verified,
            euler_characteristic: self.euler_characteristic,
            repaired: self.repair.is_some(),
            verdict: self.verdict,
            diagnostics: self.diagnostics.clone(),
        }
    }

    /// Plain-text report, one `key: value` per line.
    pub fn report(&self) -> String {
        let doc = self.to_document();
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&v);
            out.push('\n');
        };
        line("polygon", doc.polygon);
        line(
            "complex",
            if doc.permitted_only {
                "permitted"
            } else {
                "full"
            }
            .into(),
        );
        line("dimension", doc.dimension.to_string());
        line("maximal faces", doc.faces.to_string());
        line("pure", doc.pure.to_string());
        line("strongly connected", doc.strongly_connected.to_string());
        line("pseudo-manifold", doc.pseudomanifold.to_string());
        line("boundary faces", doc.boundary_faces.to_string());
        line(
            "shelling",
            format!(
                "{} (verified: {}, wilson: {})",
                doc.shelling_provenance.unwrap_or_else(|| "none".into()),
                doc.shelling_verified,
                doc.wilson_verified
            ),
        );
        line("euler characteristic", doc.euler_characteristic.to_string());
        if let Some(r) = &self.repair {
            line(
                "repair",
                format!(
                    "constructed order failed at k={} (repaired: {})",
                    r.failed_at, r.repaired
                ),
            );
        }
        for d in &doc.diagnostics {
            line("note", d.clone());
        }
        line("verdict", doc.verdict.to_string());
        out
    }
}

pub fn certify(spec: &PolygonSpec, permitted_only: bool) -> Result<BallCertificate> {
    certify_with(spec, permitted_only, &GreedyConfig::default())
}

/// Shells the (permitted) complex with the matching constructor (greedy
/// search for the full punctured complex), verifies the order with both
/// checkers, and combines it with the pseudo-manifold report and `χ`.
pub fn certify_with(
    spec: &PolygonSpec,
    permitted_only: bool,
    config: &GreedyConfig,
) -> Result<BallCertificate> {
    let complex = build_complex(spec, permitted_only)?;
    let pm = complex.pseudomanifold_report();
    let dimension = complex.dimension();
    let chi = complex.euler_characteristic();
    let mut diagnostics = Vec::new();

    let (shelling, repair) = match (permitted_only, spec.is_punctured()) {
        (true, false) => {
            let s = shell_coloured_convex(spec, config)?;
            (Some(s.order), s.repair)
        }
        (true, true) => {
            let s = shell_coloured_punctured(spec, config)?;
            (Some(s.order), s.repair)
        }
        (false, false) => {
            // the full complex is the permitted complex of the all-blue polygon
            let s = shell_coloured_convex(&spec.with_all_blue(), config)?;
            let order = ShellingOrder::new(
                complex.clone(),
                s.order.faces().to_vec(),
                s.order.provenance(),
            )?;
            (Some(order), s.repair)
        }
        (false, true) => (greedy_shelling(&complex, config)?, None),
    };
    if let Some(r) = &repair {
        diagnostics.push(format!(
            "constructed order failed at k={}; {}",
            r.failed_at,
            if r.repaired {
                "replaced by greedy search"
            } else {
                "greedy search gave up"
            }
        ));
    }

    let (shelling_verified, wilson_verified) = match &shelling {
        Some(o) => (
            verify_shelling(o)?.passed(),
            check_wilson_property(o)?.passed(),
        ),
        None => {
            diagnostics.push(format!(
                "no shelling found within a budget of {} nodes",
                config.budget
            ));
            (false, false)
        }
    };

    let boundary_empty = pm.boundary_empty();
    let expected_chi = if boundary_empty {
        1 + if dimension % 2 == 0 { 1 } else { -1 }
    } else {
        1
    };
    let mut verdict = if pm.is_pseudomanifold() && shelling_verified {
        if boundary_empty {
            Verdict::Sphere
        } else {
            Verdict::ClosedBall
        }
    } else {
        if !pm.is_pseudomanifold() {
            diagnostics.push("not a pseudo-manifold".into());
        }
        if shelling.is_some() && !shelling_verified {
            diagnostics.push("shelling order failed verification".into());
        }
        Verdict::Inconclusive
    };
    if verdict != Verdict::Inconclusive && chi != expected_chi {
        diagnostics.push(format!(
            "euler characteristic {chi}, expected {expected_chi}"
        ));
        verdict = Verdict::Inconclusive;
    }

    Ok(BallCertificate {
        polygon: spec.clone(),
        permitted_only,
        dimension,
        pseudomanifold: pm,
        boundary_empty,
        shelling,
        shelling_verified,
        wilson_verified,
        euler_characteristic: chi,
        repair,
        verdict,
        diagnostics,
    })
}
