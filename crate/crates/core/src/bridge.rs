//! Decorated ideal polygons and their alternately coloured Euclidean models.
//!
//! A decorated `n`-gon (possibly once-punctured) becomes a `2n`-gon: edge `i`
//! (between decorated vertices `i` and `i+1`) is the blue vertex `2i` and
//! decorated vertex `k` is the red vertex `2k-1 (mod 2n)`. Edge-to-edge arcs
//! become blue-blue diagonals and edge-to-vertex arcs red-blue ones.
//!
//! In the punctured case an arc between two points also records which way
//! round the puncture it goes. `s=0` means the puncture-free side runs
//! counterclockwise from the first named end (the lower edge for `E`, the
//! edge for `V`), `s=1` the other way. A loop `E(i,i)` needs no side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arc::{arcs_cross, is_permitted, Arc, ArcTable};
use crate::complex::build_complex;
use crate::error::{Error, Result};
use crate::face::{canonical_cmp, Face};
use crate::polygon::{Colour, PolygonSpec};
use crate::triangulation::maximal_cliques;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecoratedPolygon {
    n: usize,
    punctured: bool,
}

impl DecoratedPolygon {
    pub fn new(n: usize, punctured: bool) -> Result<Self> {
        let min = if punctured { 2 } else { 3 };
        if n < min {
            return Err(Error::InvalidSpec(format!(
                "a decorated {}polygon needs at least {min} vertices, got n={n}",
                if punctured { "once-punctured " } else { "" }
            )));
        }
        Ok(DecoratedPolygon { n, punctured })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_punctured(&self) -> bool {
        self.punctured
    }

    /// Dimension of the arc complex: `2n-4`, or `2n-2` when punctured.
    pub fn dimension(&self) -> usize {
        if self.punctured {
            2 * self.n - 2
        } else {
            2 * self.n - 4
        }
    }

    fn blue(&self, edge: usize) -> usize {
        2 * (edge % self.n)
    }

    fn red(&self, vertex: usize) -> usize {
        (2 * (vertex % self.n) + 2 * self.n - 1) % (2 * self.n)
    }
}

impl fmt::Display for DecoratedPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H:n={};punctured={}", self.n, u8::from(self.punctured))
    }
}

impl FromStr for DecoratedPolygon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().strip_prefix("H:").ok_or_else(|| {
            Error::Parse(format!("decorated polygon must start with 'H:': {s:?}"))
        })?;
        let (mut n, mut punctured) = (None, false);
        for field in body.split(';') {
            match field.split_once('=') {
                Some(("n", v)) => {
                    n = Some(
                        v.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad n {v:?}")))?,
                    )
                }
                Some(("punctured", "0")) => punctured = false,
                Some(("punctured", "1")) => punctured = true,
                _ => return Err(Error::Parse(format!("bad field {field:?} in {s:?}"))),
            }
        }
        DecoratedPolygon::new(
            n.ok_or_else(|| Error::Parse("missing n".into()))?,
            punctured,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DecoratedArc {
    /// Edge `a` to edge `b`, `a <= b`; `a == b` only for the punctured loop.
    EdgeToEdge {
        a: usize,
        b: usize,
        side: Option<u8>,
    },
    EdgeToVertex {
        edge: usize,
        vertex: usize,
        side: Option<u8>,
    },
}

impl fmt::Display for DecoratedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DecoratedArc::EdgeToEdge { a, b, side: None } => write!(f, "E({a},{b})"),
            DecoratedArc::EdgeToEdge {
                a,
                b,
                side: Some(s),
            } => write!(f, "E({a},{b};s={s})"),
            DecoratedArc::EdgeToVertex {
                edge,
                vertex,
                side: None,
            } => write!(f, "V({edge};{vertex})"),
            DecoratedArc::EdgeToVertex {
                edge,
                vertex,
                side: Some(s),
            } => {
                write!(f, "V({edge};{vertex};s={s})")
            }
        }
    }
}

impl FromStr for DecoratedArc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed decorated arc {s:?}"));
        let (tag, rest) = s.split_at(s.find('(').ok_or_else(bad)?);
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (inner, side) = match inner.split_once(";s=") {
            Some((head, s)) => (
                head,
                Some(s.parse::<u8>().ok().filter(|&s| s <= 1).ok_or_else(bad)?),
            ),
            None => (inner, None),
        };
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match tag {
            "E" => {
                let (a, b) = inner.split_once(',').ok_or_else(bad)?;
                Ok(DecoratedArc::EdgeToEdge {
                    a: num(a)?,
                    b: num(b)?,
                    side,
                })
            }
            "V" => {
                let (e, v) = inner.split_once(';').ok_or_else(bad)?;
                Ok(DecoratedArc::EdgeToVertex {
                    edge: num(e)?,
                    vertex: num(v)?,
                    side,
                })
            }
            _ => Err(bad()),
        }
    }
}

/// `m = 2n`, alternating blue/red from the blue vertex of edge 0.
pub fn to_bicoloured(p: &DecoratedPolygon) -> PolygonSpec {
    let colours = (0..2 * p.n)
        .map(|v| {
            if v % 2 == 0 {
                Colour::Blue
            } else {
                Colour::Red
            }
        })
        .collect();
    PolygonSpec::new(2 * p.n, p.punctured, colours).expect("2n meets the minimum size")
}

/// Inverse of [`to_bicoloured`]; needs the alternating colouring starting
/// with blue at vertex 0.
pub fn from_bicoloured(spec: &PolygonSpec) -> Result<DecoratedPolygon> {
    let m = spec.m();
    let alternating = m.is_multiple_of(2) && (0..m).all(|v| spec.is_blue(v) == (v % 2 == 0));
    if !alternating {
        return Err(Error::InvalidSpec(format!(
            "{spec} is not alternately coloured from a blue vertex 0"
        )));
    }
    DecoratedPolygon::new(m / 2, spec.is_punctured())
}

/// All arcs of the decorated polygon, listed from the decorated side.
pub fn enumerate_decorated_arcs(p: &DecoratedPolygon) -> Vec<DecoratedArc> {
    let n = p.n;
    let mut out = Vec::new();
    for a in 0..n {
        if p.punctured {
            out.push(DecoratedArc::EdgeToEdge {
                a,
                b: a,
                side: None,
            });
            for b in a + 1..n {
                for s in 0..2 {
                    out.push(DecoratedArc::EdgeToEdge {
                        a,
                        b,
                        side: Some(s),
                    });
                }
            }
        } else {
            for b in a + 1..n {
                out.push(DecoratedArc::EdgeToEdge { a, b, side: None });
            }
        }
    }
    for edge in 0..n {
        for vertex in 0..n {
            if p.punctured {
                // the short way to an end of the edge is a boundary path
                if vertex != (edge + 1) % n {
                    out.push(DecoratedArc::EdgeToVertex {
                        edge,
                        vertex,
                        side: Some(0),
                    });
                }
                if vertex != edge {
                    out.push(DecoratedArc::EdgeToVertex {
                        edge,
                        vertex,
                        side: Some(1),
                    });
                }
            } else if vertex != edge && vertex != (edge + 1) % n {
                out.push(DecoratedArc::EdgeToVertex {
                    edge,
                    vertex,
                    side: None,
                });
            }
        }
    }
    out.sort();
    out
}

pub fn translate_arc(p: &DecoratedPolygon, a: DecoratedArc) -> Result<Arc> {
    let n = p.n;
    let spec = to_bicoloured(p);
    let foreign = || Error::Parse(format!("{a} is not an arc of {p}"));
    let arc = match (a, p.punctured) {
        (DecoratedArc::EdgeToEdge { a, b, side: None }, false) if a < b && b < n => {
            Arc::diagonal(p.blue(a), p.blue(b))
        }
        (DecoratedArc::EdgeToEdge { a, b, side: None }, true) if a == b && a < n => {
            Arc::loop_at(p.blue(a))
        }
        (
            DecoratedArc::EdgeToEdge {
                a,
                b,
                side: Some(s),
            },
            true,
        ) if a < b && b < n => {
            let (x, y) = (p.blue(a), p.blue(b));
            if s == 0 {
                Arc::punctured(x, y)
            } else {
                Arc::punctured(y, x)
            }
        }
        (
            DecoratedArc::EdgeToVertex {
                edge,
                vertex,
                side: None,
            },
            false,
        ) if edge < n && vertex < n => Arc::diagonal(p.blue(edge), p.red(vertex)),
        (
            DecoratedArc::EdgeToVertex {
                edge,
                vertex,
                side: Some(s),
            },
            true,
        ) if edge < n && vertex < n => {
            let (x, y) = (p.blue(edge), p.red(vertex));
            if s == 0 {
                Arc::punctured(x, y)
            } else {
                Arc::punctured(y, x)
            }
        }
        _ => return Err(foreign()),
    };
    arc.validate(&spec).map_err(|_| foreign())?;
    Ok(arc)
}

pub fn translate_back(p: &DecoratedPolygon, arc: Arc) -> Result<DecoratedArc> {
    let spec = to_bicoloured(p);
    arc.validate(&spec)?;
    if !is_permitted(&spec, arc) {
        return Err(Error::Rejected(arc));
    }
    let (i, j) = arc.endpoints();
    let edge = |v: usize| v / 2;
    let vertex = |v: usize| v.div_ceil(2) % p.n;
    Ok(match (p.punctured, i % 2 == 0, j % 2 == 0) {
        (false, true, true) => DecoratedArc::EdgeToEdge {
            a: edge(i),
            b: edge(j),
            side: None,
        },
        (false, true, false) => DecoratedArc::EdgeToVertex {
            edge: edge(i),
            vertex: vertex(j),
            side: None,
        },
        (false, false, true) => DecoratedArc::EdgeToVertex {
            edge: edge(j),
            vertex: vertex(i),
            side: None,
        },
        (true, true, true) if i == j => DecoratedArc::EdgeToEdge {
            a: edge(i),
            b: edge(i),
            side: None,
        },
        (true, true, true) => {
            let (a, b) = (edge(i), edge(j));
            DecoratedArc::EdgeToEdge {
                a: a.min(b),
                b: a.max(b),
                side: Some(u8::from(a > b)),
            }
        }
        (true, true, false) => DecoratedArc::EdgeToVertex {
            edge: edge(i),
            vertex: vertex(j),
            side: Some(0),
        },
        (true, false, true) => DecoratedArc::EdgeToVertex {
            edge: edge(j),
            vertex: vertex(i),
            side: Some(1),
        },
        (_, false, false) => unreachable!("rejected arcs handled above"),
    })
}

/// Outcome of comparing the decorated arc complex with the permitted
/// complex of the coloured `2n`-gon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsomorphismReport {
    pub decorated_vertices: usize,
    pub coloured_vertices: usize,
    pub decorated_faces: usize,
    pub coloured_faces: usize,
    pub dimension: isize,
    pub isomorphic: bool,
}

/// Builds the decorated arc complex on its own (vertices from
/// [`enumerate_decorated_arcs`], disjointness pulled back through
/// [`translate_arc`]) and checks that `translate_arc` maps it face for face
/// onto the permitted complex of [`to_bicoloured`].
pub fn verify_isomorphism(p: &DecoratedPolygon) -> Result<IsomorphismReport> {
    let spec = to_bicoloured(p);
    let arcs = enumerate_decorated_arcs(p);
    let images = arcs
        .iter()
        .map(|&a| translate_arc(p, a))
        .collect::<Result<Vec<_>>>()?;
    let mut adjacency = Vec::with_capacity(arcs.len());
    for (i, &x) in images.iter().enumerate() {
        let mut row = Face::EMPTY;
        for (j, &y) in images.iter().enumerate() {
            if i != j && !arcs_cross(&spec, x, y)? {
                row = row.insert(j);
            }
        }
        adjacency.push(row);
    }
    let decorated_faces = maximal_cliques(&adjacency, Face::from_indices(0..arcs.len()));

    let coloured = build_complex(&spec, true)?;
    let table: &ArcTable = coloured.table();
    let vertex_map = images
        .iter()
        .map(|&a| table.index_of(a))
        .collect::<Result<Vec<_>>>()?;
    let mut mapped: Vec<Face> = decorated_faces
        .iter()
        .map(|f| Face::from_indices(f.iter().map(|i| vertex_map[i])))
        .collect();
    mapped.sort_by(canonical_cmp);

    let mut image_set = vertex_map.clone();
    image_set.sort_unstable();
    image_set.dedup();
    let bijective_on_vertices = image_set.len() == arcs.len()
        && Face::from_indices(image_set.iter().copied()) == table.permitted();
    let coloured_vertices = coloured.vertices().len();

    Ok(IsomorphismReport {
        decorated_vertices: arcs.len(),
        coloured_vertices,
        decorated_faces: decorated_faces.len(),
        coloured_faces: coloured.len(),
        dimension: coloured.dimension(),
        isomorphic: bijective_on_vertices && mapped == coloured.faces(),
    })
}
