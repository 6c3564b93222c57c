//! Triangulations, flips, fans, extension of partial arc systems and cutting
//! a punctured polygon along a maximal loop.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arc::{enumerate_arcs, is_permitted, Arc, ArcTable};
use crate::error::{Error, Result};
use crate::face::{canonical_cmp, Face};
use crate::polygon::PolygonSpec;

/// A maximal set of pairwise disjoint arcs, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triangulation {
    spec: PolygonSpec,
    arcs: Vec<Arc>,
}

impl Triangulation {
    /// Checks size, pairwise disjointness and (punctured) the unique loop.
    pub fn new(spec: &PolygonSpec, mut arcs: Vec<Arc>) -> Result<Self> {
        arcs.sort_unstable();
        arcs.dedup();
        for &a in &arcs {
            a.validate(spec)?;
        }
        let expected = spec.triangulation_size();
        if arcs.len() != expected {
            return Err(Error::InvalidTriangulation(format!(
                "{} arcs, expected {expected}",
                arcs.len()
            )));
        }
        check_disjoint(spec, &arcs)?;
        if spec.is_punctured() && arcs.iter().filter(|a| a.is_loop()).count() != 1 {
            return Err(Error::InvalidTriangulation(
                "a punctured triangulation has exactly one maximal loop".into(),
            ));
        }
        Ok(Triangulation {
            spec: spec.clone(),
            arcs,
        })
    }

    pub(crate) fn from_face(table: &ArcTable, face: Face) -> Self {
        Triangulation {
            spec: table.spec().clone(),
            arcs: table.arcs_of(face),
        }
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

    pub fn contains(&self, arc: Arc) -> bool {
        self.arcs.binary_search(&arc).is_ok()
    }

    /// The maximal loop of a punctured triangulation.
    pub fn loop_arc(&self) -> Option<Arc> {
        self.arcs.iter().copied().find(|a| a.is_loop())
    }

    pub fn is_permitted(&self) -> bool {
        self.arcs.iter().all(|&a| is_permitted(&self.spec, a))
    }

    /// The vertex every arc is incident to, if there is one (lowest first).
    pub fn fan_base(&self) -> Option<usize> {
        (0..self.spec.m()).find(|&v| self.arcs.iter().all(|a| a.is_incident(v)))
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(Arc::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_disjoint(spec: &PolygonSpec, arcs: &[Arc]) -> Result<()> {
    let lifts: Vec<_> = arcs.iter().map(|a| a.lift(spec)).collect();
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            if lifts[i].crosses(&lifts[j]) {
                return Err(Error::Crossing(arcs[i], arcs[j]));
            }
        }
    }
    Ok(())
}

/// Maximal cliques of a graph given by adjacency bitsets, restricted to
/// `universe`, in canonical face order.
pub fn maximal_cliques(adjacency: &[Face], universe: Face) -> Vec<Face> {
    fn expand(adj: &[Face], r: Face, p: Face, x: Face, out: &mut Vec<Face>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(adj[u]).len())
            .expect("p or x is non-empty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(adj[pivot]).iter() {
            expand(
                adj,
                r.insert(v),
                p.intersection(adj[v]),
                x.intersection(adj[v]),
                out,
            );
            p = p.remove(v);
            x = x.insert(v);
        }
    }
    let mut out = Vec::new();
    expand(adjacency, Face::EMPTY, universe, Face::EMPTY, &mut out);
    out.sort_by(canonical_cmp);
    out
}

/// Maximal faces of the (permitted) arc complex of `table`'s polygon.
pub(crate) fn triangulation_faces(table: &ArcTable, permitted_only: bool) -> Vec<Face> {
    let adjacency: Vec<Face> = (0..table.len()).map(|i| table.compatible(i)).collect();
    maximal_cliques(&adjacency, table.universe(permitted_only))
}

/// All triangulations, in canonical order: faces compared by their sorted
/// arc lists.
pub fn enumerate_triangulations(
    spec: &PolygonSpec,
    permitted_only: bool,
) -> Result<Vec<Triangulation>> {
    if permitted_only {
        spec.require_blue()?;
    }
    let table = ArcTable::new(spec)?;
    Ok(triangulation_faces(&table, permitted_only)
        .into_iter()
        .map(|f| Triangulation::from_face(&table, f))
        .collect())
}

/// Replaces `arc` by the other completion of `t \ {arc}`. `None` when that
/// codimension-one face has a single completion in the chosen arc set.
pub fn flip(
    t: &Triangulation,
    arc: Arc,
    permitted_only: bool,
) -> Result<Option<(Triangulation, Arc)>> {
    let table = ArcTable::new(t.spec())?;
    flip_in(&table, t, arc, permitted_only)
}

pub(crate) fn flip_in(
    table: &ArcTable,
    t: &Triangulation,
    arc: Arc,
    permitted_only: bool,
) -> Result<Option<(Triangulation, Arc)>> {
    if !t.contains(arc) {
        return Err(Error::NotInTriangulation(arc));
    }
    let face = table.face_of(t.arcs())?;
    let removed = table.index_of(arc)?;
    let rest = face.remove(removed);
    let candidates = rest
        .iter()
        .fold(table.universe(permitted_only), |acc, i| {
            acc.intersection(table.compatible(i))
        })
        .difference(face);
    debug_assert!(candidates.len() <= 1, "codim-1 face with >2 completions");
    Ok(candidates.iter().next().map(|added| {
        (
            Triangulation::from_face(table, rest.insert(added)),
            table.arc(added),
        )
    }))
}

/// The fan at `v`: every diagonal at `v` (convex), or the loop at `v` plus
/// every arc `(v, j)` (punctured).
pub fn fan_triangulation(spec: &PolygonSpec, v: usize) -> Result<Triangulation> {
    let m = spec.m();
    if v >= m {
        return Err(Error::InvalidSpec(format!(
            "vertex {v} out of range for m={m}"
        )));
    }
    let arcs = if spec.is_punctured() {
        std::iter::once(Arc::loop_at(v))
            .chain((2..m).map(|t| Arc::punctured(v, (v + t) % m)))
            .collect()
    } else {
        (2..m - 1).map(|t| Arc::diagonal(v, (v + t) % m)).collect()
    };
    Triangulation::new(spec, arcs)
}

/// Completes a non-crossing arc set to a triangulation.
///
/// Punctured polygons are first cut along a loop: the one in `partial`, or
/// else the loop at the lowest eligible endpoint of an outermost arc (arcs
/// nearest the puncture), or the lowest eligible vertex when `partial` is
/// empty. Each untriangulated region is then fanned from its lowest blue
/// vertex (lowest vertex when unrestricted).
pub fn extend_to_triangulation(
    spec: &PolygonSpec,
    partial: &[Arc],
    permitted_only: bool,
) -> Result<Triangulation> {
    let mut partial = partial.to_vec();
    partial.sort_unstable();
    partial.dedup();
    for &a in &partial {
        a.validate(spec)?;
        if permitted_only && !is_permitted(spec, a) {
            return Err(Error::Rejected(a));
        }
    }
    if permitted_only {
        spec.require_blue()?;
    }
    check_disjoint(spec, &partial)?;
    let eligible = |v: usize| !permitted_only || spec.is_blue(v);

    if !spec.is_punctured() {
        let arcs = extend_convex(spec, &partial, permitted_only)?;
        return Triangulation::new(spec, arcs);
    }

    let base = match partial.iter().find(|a| a.is_loop()) {
        Some(l) => l.endpoints().0,
        None => {
            let outer = outermost_arcs(spec, &partial);
            let mut endpoints: Vec<usize> = outer
                .iter()
                .flat_map(|a| [a.endpoints().0, a.endpoints().1])
                .filter(|&v| eligible(v))
                .collect();
            endpoints.sort_unstable();
            match endpoints.first() {
                Some(&v) => v,
                None if partial.is_empty() => (0..spec.m())
                    .find(|&v| eligible(v))
                    .expect("blue vertex checked above"),
                None => unreachable!("a permitted arc has a blue endpoint"),
            }
        }
    };
    let cut = cut_along_loop(spec, Arc::loop_at(base))?;
    let inner: Vec<Arc> = partial
        .iter()
        .filter(|a| !a.is_loop())
        .map(|&a| cut.to_cut(a).ok_or(Error::Crossing(a, Arc::loop_at(base))))
        .collect::<Result<_>>()?;
    let filled = extend_convex(cut.cut_spec(), &inner, permitted_only)?;
    let mut arcs: Vec<Arc> = filled.into_iter().map(|d| cut.from_cut(d)).collect();
    arcs.push(Arc::loop_at(base));
    Triangulation::new(spec, arcs)
}

/// Arcs of a punctured arc system not enclosed by any other arc.
fn outermost_arcs(spec: &PolygonSpec, arcs: &[Arc]) -> Vec<Arc> {
    let m = spec.m();
    // puncture-free side as the set of strictly interior vertices
    let interior = |a: Arc| -> Vec<usize> {
        let (i, j) = a.endpoints();
        let t = (j + m - i) % m;
        (1..t).map(|s| (i + s) % m).collect()
    };
    let encloses = |outer: Arc, inner: Arc| -> bool {
        // inner lies on outer's puncture-free side
        let side = interior(outer);
        let (i, j) = inner.endpoints();
        let (oi, oj) = outer.endpoints();
        let on_side = |v: usize| v == oi || v == oj || side.contains(&v);
        outer != inner
            && on_side(i)
            && on_side(j)
            && interior(inner).iter().all(|&v| side.contains(&v))
    };
    arcs.iter()
        .copied()
        .filter(|a| !a.is_loop())
        .filter(|&a| !arcs.iter().any(|&b| !b.is_loop() && encloses(b, a)))
        .collect()
}

fn extend_convex(spec: &PolygonSpec, partial: &[Arc], permitted_only: bool) -> Result<Vec<Arc>> {
    let diagonals: Vec<(usize, usize)> = partial.iter().map(|a| a.endpoints()).collect();
    let mut out = partial.to_vec();
    for region in regions((0..spec.m()).collect(), &diagonals) {
        if region.len() < 4 {
            continue;
        }
        let apex_pos = region
            .iter()
            .enumerate()
            .filter(|&(_, &v)| !permitted_only || spec.is_blue(v))
            .min_by_key(|&(_, &v)| v)
            .map(|(p, _)| p)
            .ok_or_else(|| Error::InvalidSpec(format!("region {region:?} has no blue vertex")))?;
        let k = region.len();
        for s in 2..k - 1 {
            out.push(Arc::diagonal(region[apex_pos], region[(apex_pos + s) % k]));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Splits a convex polygon (vertex list in boundary order) along the given
/// non-crossing diagonals.
fn regions(poly: Vec<usize>, diagonals: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let k = poly.len();
    let pos = |v: usize| poly.iter().position(|&w| w == v);
    let split = diagonals.iter().find_map(|&(u, w)| {
        let (a, b) = (pos(u)?, pos(w)?);
        let (a, b) = (a.min(b), a.max(b));
        (b - a >= 2 && !(a == 0 && b == k - 1)).then_some((a, b))
    });
    match split {
        None => vec![poly],
        Some((a, b)) => {
            let left: Vec<usize> = poly[a..=b].to_vec();
            let right: Vec<usize> = poly[b..].iter().chain(&poly[..=a]).copied().collect();
            let mut out = regions(left, diagonals);
            out.extend(regions(right, diagonals));
            out
        }
    }
}

/// A punctured polygon cut open along the maximal loop at `base`.
///
/// The cut polygon is the convex `(m+1)`-gon `v', v+1, ..., v-1, v''` with
/// both copies of `v` keeping its colour; cut vertex `0` is `v'` and cut
/// vertex `m` is `v''`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopCut {
    spec: PolygonSpec,
    base: usize,
    cut: PolygonSpec,
}

impl LoopCut {
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn cut_spec(&self) -> &PolygonSpec {
        &self.cut
    }

    fn position(&self, v: usize) -> usize {
        let m = self.spec.m();
        (v + m - self.base) % m
    }

    /// Diagonal of the cut polygon for an arc disjoint from the loop; `None`
    /// for the loop itself and for arcs crossing it.
    pub fn to_cut(&self, arc: Arc) -> Option<Arc> {
        let m = self.spec.m();
        let (i, j) = match arc {
            Arc::Punctured(i, j) if i != j && i < m && j < m => (i, j),
            _ => return None,
        };
        let p = self.position(i);
        let q = if j == self.base { m } else { self.position(j) };
        (p < q).then(|| Arc::diagonal(p, q))
    }

    /// Inverse of [`LoopCut::to_cut`].
    pub fn from_cut(&self, diagonal: Arc) -> Arc {
        let m = self.spec.m();
        let (p, q) = diagonal.endpoints();
        let label = |x: usize| (self.base + x) % m;
        Arc::punctured(label(p), label(q))
    }

    /// Every arc of the punctured polygon that survives the cut, paired with
    /// its diagonal.
    pub fn translation(&self) -> Vec<(Arc, Arc)> {
        enumerate_arcs(&self.spec, false)
            .into_iter()
            .filter_map(|a| self.to_cut(a).map(|d| (a, d)))
            .collect()
    }
}

pub fn cut_along_loop(spec: &PolygonSpec, loop_arc: Arc) -> Result<LoopCut> {
    loop_arc.validate(spec)?;
    if !loop_arc.is_loop() {
        return Err(Error::NotALoop(loop_arc));
    }
    let m = spec.m();
    let base = loop_arc.endpoints().0;
    // the bigon cuts open to a triangle, which has no diagonals
    let cut = PolygonSpec::new_cut(m + 1, (0..=m).map(|x| spec.colour(base + x)).collect());
    Ok(LoopCut {
        spec: spec.clone(),
        base,
        cut,
    })
}
