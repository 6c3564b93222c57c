//! Arcs of a polygon and the crossing relation between them.
//!
//! A convex diagonal is an unordered pair `{i, j}` of non-adjacent vertices.
//! A punctured arc `(i, j)` runs from `i` to `j` with the vertices strictly
//! between `i` and `j` (counterclockwise) on its puncture-free side, so
//! `j == i + 1` is a boundary edge and `i == j` is the maximal loop at `i`.
//!
//! Crossing is decided on a chord lift. Convex diagonals are chords of the
//! `m`-gon itself. Punctured arcs lift to the antipodal double cover, a
//! `2m`-gon: the loop at `i` becomes the diameter `{i, i+m}` and the arc
//! `(i, i+t)` the chord pair `{i, i+t}`, `{i+m, i+t+m}`. Two arcs cross iff
//! some chords of their lifts strictly interleave.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{Face, MAX_ARCS};
use crate::polygon::PolygonSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Arc {
    /// Convex diagonal, stored with `i < j`.
    Diagonal(usize, usize),
    /// Punctured arc; `Punctured(i, i)` is the maximal loop at `i`.
    Punctured(usize, usize),
}

impl Arc {
    /// Convex diagonal with endpoints normalised to `i < j`.
    pub fn diagonal(i: usize, j: usize) -> Arc {
        Arc::Diagonal(i.min(j), i.max(j))
    }

    pub fn punctured(i: usize, j: usize) -> Arc {
        Arc::Punctured(i, j)
    }

    pub fn loop_at(v: usize) -> Arc {
        Arc::Punctured(v, v)
    }

    pub fn endpoints(self) -> (usize, usize) {
        match self {
            Arc::Diagonal(i, j) | Arc::Punctured(i, j) => (i, j),
        }
    }

    pub fn is_loop(self) -> bool {
        matches!(self, Arc::Punctured(i, j) if i == j)
    }

    pub fn is_incident(self, v: usize) -> bool {
        let (i, j) = self.endpoints();
        i == v || j == v
    }

    /// Checks that `self` is a non-trivial arc of `spec`.
    pub fn validate(self, spec: &PolygonSpec) -> Result<()> {
        let m = spec.m();
        let ok = match self {
            Arc::Diagonal(i, j) => {
                !spec.is_punctured() && i < j && j < m && j != i + 1 && !(i == 0 && j == m - 1)
            }
            Arc::Punctured(i, j) => spec.is_punctured() && i < m && j < m && j != (i + 1) % m,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ForeignArc(self))
        }
    }

    /// The chords this arc lifts to, on the `m`-gon (convex) or the
    /// `2m`-gon double cover (punctured).
    pub fn lift(self, spec: &PolygonSpec) -> ChordLift {
        let m = spec.m();
        match self {
            Arc::Diagonal(i, j) => ChordLift::new(m, &[(i, j)]),
            Arc::Punctured(i, j) if i == j => ChordLift::new(2 * m, &[(i, i + m)]),
            Arc::Punctured(i, j) => {
                let t = (j + m - i) % m;
                let n = 2 * m;
                ChordLift::new(n, &[(i, (i + t) % n), ((i + m) % n, (i + t + m) % n)])
            }
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Arc::Diagonal(i, j) => write!(f, "D({i},{j})"),
            Arc::Punctured(i, j) if i == j => write!(f, "L({i})"),
            Arc::Punctured(i, j) => write!(f, "A({i},{j})"),
        }
    }
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Arc> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed arc {s:?}"));
        let (tag, rest) = s.split_at(s.find('(').ok_or_else(bad)?);
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let nums = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (tag, nums.as_slice()) {
            ("D", &[i, j]) if i < j => Ok(Arc::Diagonal(i, j)),
            ("A", &[i, j]) if i != j => Ok(Arc::Punctured(i, j)),
            ("L", &[i]) => Ok(Arc::loop_at(i)),
            _ => Err(bad()),
        }
    }
}

/// One or two chords on a `n`-gon, each stored with its smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordLift {
    n: usize,
    chords: Vec<(usize, usize)>,
}

impl ChordLift {
    fn new(n: usize, chords: &[(usize, usize)]) -> Self {
        let mut chords: Vec<_> = chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        chords.sort_unstable();
        ChordLift { n, chords }
    }

    pub fn cover_size(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn crosses(&self, other: &ChordLift) -> bool {
        self.chords
            .iter()
            .any(|&c| other.chords.iter().any(|&d| chords_interleave(c, d)))
    }
}

/// Strict interleaving of two chords; a shared endpoint is not a crossing.
fn chords_interleave((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |x: usize| a < x && x < b;
    inside(c) != inside(d)
}

/// Whether `a` and `b` cross, for two arcs of `spec`. Equal arcs do not cross.
pub fn arcs_cross(spec: &PolygonSpec, a: Arc, b: Arc) -> Result<bool> {
    a.validate(spec)?;
    b.validate(spec)?;
    Ok(a != b && a.lift(spec).crosses(&b.lift(spec)))
}

/// An arc is permitted unless both endpoints are red. A loop's endpoints are
/// both its base vertex.
pub fn is_permitted(spec: &PolygonSpec, a: Arc) -> bool {
    let (i, j) = a.endpoints();
    spec.is_blue(i) || spec.is_blue(j)
}

/// All non-trivial arcs of `spec` in canonical (lexicographic) order.
pub fn enumerate_arcs(spec: &PolygonSpec, permitted_only: bool) -> Vec<Arc> {
    let m = spec.m();
    let mut arcs = Vec::with_capacity(spec.arc_count());
    for i in 0..m {
        if spec.is_punctured() {
            for j in 0..m {
                if j != (i + 1) % m {
                    arcs.push(Arc::Punctured(i, j));
                }
            }
        } else {
            for j in i + 2..m {
                if !(i == 0 && j == m - 1) {
                    arcs.push(Arc::Diagonal(i, j));
                }
            }
        }
    }
    if permitted_only {
        arcs.retain(|&a| is_permitted(spec, a));
    }
    arcs
}

/// The arc universe of a polygon with its pairwise compatibility masks.
///
/// Faces of every complex over `spec` are [`Face`]s indexing into
/// [`ArcTable::arcs`], so permitted and unrestricted complexes share bit
/// positions.
#[derive(Debug, Clone)]
pub struct ArcTable {
    spec: PolygonSpec,
    arcs: Vec<Arc>,
    compatible: Vec<Face>,
    permitted: Face,
}

impl ArcTable {
    pub fn new(spec: &PolygonSpec) -> Result<Self> {
        let arcs = enumerate_arcs(spec, false);
        if arcs.len() > MAX_ARCS {
            return Err(Error::TooManyArcs(arcs.len()));
        }
        let lifts: Vec<ChordLift> = arcs.iter().map(|a| a.lift(spec)).collect();
        let compatible = (0..arcs.len())
            .map(|i| {
                Face::from_indices(
                    (0..arcs.len()).filter(|&j| j != i && !lifts[i].crosses(&lifts[j])),
                )
            })
            .collect();
        let permitted =
            Face::from_indices((0..arcs.len()).filter(|&i| is_permitted(spec, arcs[i])));
        Ok(ArcTable {
            spec: spec.clone(),
            arcs,
            compatible,
            permitted,
        })
    }

    pub fn spec(&self) -> &PolygonSpec {
        &self.spec
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    pub fn index_of(&self, arc: Arc) -> Result<usize> {
        self.arcs
            .binary_search(&arc)
            .map_err(|_| Error::ForeignArc(arc))
    }

    /// Arcs disjoint from arc `index` (itself excluded).
    pub fn compatible(&self, index: usize) -> Face {
        self.compatible[index]
    }

    pub fn crosses(&self, a: usize, b: usize) -> bool {
        a != b && !self.compatible[a].contains(b)
    }

    pub fn permitted(&self) -> Face {
        self.permitted
    }

    /// All arcs, or only the permitted ones.
    pub fn universe(&self, permitted_only: bool) -> Face {
        if permitted_only {
            self.permitted
        } else {
            Face::from_indices(0..self.arcs.len())
        }
    }

    /// Pairwise non-crossing.
    pub fn is_independent(&self, face: Face) -> bool {
        face.iter()
            .all(|i| face.remove(i).is_subset(self.compatible[i]))
    }

    pub fn face_of(&self, arcs: &[Arc]) -> Result<Face> {
        arcs.iter()
            .try_fold(Face::EMPTY, |f, &a| Ok(f.insert(self.index_of(a)?)))
    }

    pub fn arcs_of(&self, face: Face) -> Vec<Arc> {
        face.iter().map(|i| self.arcs[i]).collect()
    }

    /// Space-separated arc text forms, e.g. `D(0,2) D(0,3)`.
    pub fn format_face(&self, face: Face) -> String {
        let parts: Vec<String> = face.iter().map(|i| self.arcs[i].to_string()).collect();
        parts.join(" ")
    }

    pub fn parse_face(&self, line: &str) -> Result<Face> {
        line.split_whitespace().try_fold(Face::EMPTY, |f, tok| {
            let arc: Arc = tok.parse()?;
            let i = self.index_of(arc)?;
            if f.contains(i) {
                return Err(Error::Parse(format!("arc {arc} repeated in face {line:?}")));
            }
            Ok(f.insert(i))
        })
    }
}
