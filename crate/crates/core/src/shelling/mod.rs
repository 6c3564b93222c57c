//! Shelling orders of pure complexes: checking, constructing and the ball
//! and sphere certificates built on them.
//!
//! Positions reported by the checkers are 1-based, so the first face of an
//! order is `C_1`.

mod certify;
mod construct;
mod greedy;
mod paths;

pub use certify::{certify, certify_with, BallCertificate, CertificateDocument, Verdict};
pub use construct::{
    shell_coloured_convex, shell_coloured_punctured, ConstructedShelling, RepairEvent,
};
pub use greedy::{greedy_shelling, GreedyConfig, DEFAULT_BUDGET};
pub use paths::{flip_path_to_fan, Flip};

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::{parse_face_line, ArcComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::polygon::PolygonSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Constructed,
    Greedy,
    User,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Constructed => "constructed",
            Provenance::Greedy => "greedy",
            Provenance::User => "user",
        })
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "constructed" => Ok(Provenance::Constructed),
            "greedy" => Ok(Provenance::Greedy),
            "user" => Ok(Provenance::User),
            other => Err(Error::Parse(format!("unknown provenance {other:?}"))),
        }
    }
}

/// An enumeration of every maximal face of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingOrder {
    complex: ArcComplex,
    order: Vec<Face>,
    provenance: Provenance,
}

impl ShellingOrder {
    /// Fails unless `order` lists every maximal face of `complex` exactly once.
    pub fn new(complex: ArcComplex, order: Vec<Face>, provenance: Provenance) -> Result<Self> {
        if order.len() != complex.len() {
            return Err(Error::NotAPermutation(format!(
                "{} faces listed, complex has {}",
                order.len(),
                complex.len()
            )));
        }
        let mut seen = vec![false; complex.len()];
        for &f in &order {
            let idx = complex.face_index(f).ok_or_else(|| {
                Error::NotAPermutation(format!(
                    "{{{}}} is not a maximal face",
                    complex.format_face(f)
                ))
            })?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(Error::NotAPermutation(format!(
                    "{{{}}} listed twice",
                    complex.format_face(f)
                )));
            }
        }
        Ok(ShellingOrder {
            complex,
            order,
            provenance,
        })
    }

    pub fn complex(&self) -> &ArcComplex {
        &self.complex
    }

    pub fn faces(&self) -> &[Face] {
        &self.order
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Same order, tagged differently.
    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// `shelling d=<d> n=<count> provenance=<tag>`, then one face per line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "shelling d={} n={} provenance={}\n",
            self.complex.dimension(),
            self.order.len(),
            self.provenance
        );
        for &f in &self.order {
            out.push_str(&self.complex.format_face(f));
            out.push('\n');
        }
        out
    }

    /// Parses an order file against `complex`.
    pub fn parse_text(complex: &ArcComplex, text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty shelling file".into()))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("shelling") {
            return Err(Error::Parse(format!("bad shelling header {header:?}")));
        }
        let (mut d, mut n, mut provenance) = (None, None, Provenance::User);
        for field in fields {
            match field.split_once('=') {
                Some(("d", v)) => d = v.parse::<isize>().ok(),
                Some(("n", v)) => n = v.parse::<usize>().ok(),
                Some(("provenance", v)) => provenance = v.parse()?,
                _ => return Err(Error::Parse(format!("bad header field {field:?}"))),
            }
        }
        let (d, n) = d
            .zip(n)
            .ok_or_else(|| Error::Parse(format!("header needs d= and n=: {header:?}")))?;
        if d != complex.dimension() {
            return Err(Error::Parse(format!(
                "order has d={d}, complex has dimension {}",
                complex.dimension()
            )));
        }
        let order = lines
            .map(|l| parse_face_line(complex.table(), l))
            .collect::<Result<Vec<_>>>()?;
        if order.len() != n {
            return Err(Error::Parse(format!(
                "header says n={n}, found {} faces",
                order.len()
            )));
        }
        ShellingOrder::new(complex.clone(), order, provenance)
    }

    pub fn to_document(&self) -> OrderDocument {
        OrderDocument {
            polygon: self.complex.spec().to_string(),
            dim: self.complex.dimension(),
            provenance: self.provenance,
            faces: self
                .order
                .iter()
                .map(|&f| {
                    self.complex
                        .table()
                        .arcs_of(f)
                        .iter()
                        .map(|a| a.to_string())
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDocument {
    pub polygon: String,
    pub dim: isize,
    pub provenance: Provenance,
    pub faces: Vec<Vec<String>>,
}

/// Result of checking an order: `failure` is `None` on success.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCheck {
    /// 1-based position `k` of the first face whose intersection with its
    /// predecessors is not pure of dimension `d-1`.
    pub failure: Option<usize>,
}

impl ShellingCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilsonCheck {
    /// First 1-based pair `(j, k)`, `j < k`, with no witness `i < k`.
    pub failure: Option<(usize, usize)>,
}

impl WilsonCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks the shelling condition directly: for every `k >= 2` the complex
/// `(C_1 ∪ ... ∪ C_{k-1}) ∩ C_k`, generated by the simplices `C_j ∩ C_k`,
/// must have all of its maximal faces of dimension `d-1`.
pub fn verify_shelling(order: &ShellingOrder) -> Result<ShellingCheck> {
    if !order.complex.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(ShellingCheck {
        failure: first_shelling_failure(order.faces(), facet_size(&order.complex)),
    })
}

fn facet_size(c: &ArcComplex) -> usize {
    c.dimension().max(0) as usize
}

pub(crate) fn first_shelling_failure(faces: &[Face], facet_size: usize) -> Option<usize> {
    (1..faces.len())
        .find(|&k| !intersection_is_pure(&faces[..k], faces[k], facet_size))
        .map(|k| k + 1)
}

fn intersection_is_pure(prefix: &[Face], face: Face, facet_size: usize) -> bool {
    let mut generators: Vec<Face> = prefix
        .iter()
        .map(|&p| p.intersection(face))
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    generators.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let mut maximal: Vec<Face> = Vec::new();
    for g in generators {
        if !maximal.iter().any(|&mx| g.is_subset(mx)) {
            maximal.push(g);
        }
    }
    !maximal.is_empty() && maximal.iter().all(|f| f.len() == facet_size)
}

/// Checks the pairwise witness form: for all `j < k` some `i < k` has
/// `C_i ∩ C_k` of codimension one and containing `C_j ∩ C_k`.
pub fn check_wilson_property(order: &ShellingOrder) -> Result<WilsonCheck> {
    if !order.complex.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(WilsonCheck {
        failure: first_wilson_failure(order.faces(), facet_size(&order.complex)),
    })
}

pub(crate) fn first_wilson_failure(faces: &[Face], facet_size: usize) -> Option<(usize, usize)> {
    for k in 1..faces.len() {
        let ck = faces[k];
        let witnesses: Vec<Face> = faces[..k]
            .iter()
            .map(|&ci| ci.intersection(ck))
            .filter(|s| s.len() == facet_size)
            .collect();
        for (j, &cj) in faces[..k].iter().enumerate() {
            let shared = cj.intersection(ck);
            if !witnesses.iter().any(|&w| shared.is_subset(w)) {
                return Some((j + 1, k + 1));
            }
        }
    }
    None
}

/// Lexicographic product of two face sequences through `embed`.
pub(crate) fn join_faces(
    xs: &[Face],
    ys: &[Face],
    embed: impl Fn(Face, Face) -> Face,
) -> Vec<Face> {
    xs.iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .map(|(x, y)| embed(x, y))
        .collect()
}

/// Shelling of a join: pairs `(x, y)` in lexicographic order of their ranks
/// in `ox` and `oy`, mapped into `join` by `embed`.
pub fn join_shelling(
    ox: &ShellingOrder,
    oy: &ShellingOrder,
    join: &ArcComplex,
    embed: impl Fn(Face, Face) -> Face,
) -> Result<ShellingOrder> {
    let faces = join_faces(ox.faces(), oy.faces(), embed);
    ShellingOrder::new(join.clone(), faces, Provenance::Constructed)
        .map_err(|e| Error::BadEmbedding(e.to_string()))
}

/// Reads an order file for the (permitted) complex of `spec`.
pub fn parse_order(spec: &PolygonSpec, permitted_only: bool, text: &str) -> Result<ShellingOrder> {
    let complex = crate::complex::build_complex(spec, permitted_only)?;
    ShellingOrder::parse_text(&complex, text)
}
