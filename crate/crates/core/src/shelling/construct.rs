//! Recursive shelling orders for permitted complexes of bicoloured convex
//! and once-punctured polygons.
//!
//! Convex: label the polygon `q_1, ..., q_m` counterclockwise so that `q_1`
//! is blue and `q_m` red (for an all-blue region `q_m` is simply the last
//! vertex). Every permitted triangulation lies in exactly one of the stars
//!
//! * `σ_{m-1} = {q_1 q_{m-1}}`,
//! * `σ_k = {q_1 q_k, q_k q_m}` for blue `k = m-2, ..., 3`,
//! * `σ_2 = {q_2 q_m}` when `q_2` is blue,
//!
//! taken in that order. Each star is the join of the permitted complexes of
//! the two polygons cut off by `σ_k`, shelled recursively and combined
//! lexicographically.
//!
//! Punctured: one cell per maximal loop at a blue vertex, starting at the
//! blue vertex that follows a red one and going counterclockwise. The star of
//! a loop is the permitted complex of the polygon cut open along it.

use serde::Serialize;

use super::{
    first_shelling_failure, greedy_shelling, join_faces, GreedyConfig, Provenance, ShellingOrder,
};
use crate::arc::{Arc, ArcTable};
use crate::complex::{build_complex, ArcComplex};
use crate::error::Result;
use crate::face::Face;
use crate::polygon::{Colour, PolygonSpec};
use crate::triangulation::cut_along_loop;

/// A constructed order that failed verification and was replaced by a
/// greedy search result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairEvent {
    pub polygon: String,
    /// 1-based position where the constructed order failed.
    pub failed_at: usize,
    pub repaired: bool,
}

#[derive(Debug, Clone)]
pub struct ConstructedShelling {
    pub order: ShellingOrder,
    pub repair: Option<RepairEvent>,
}

/// Recursion context: a convex polygon whose diagonals map into the arc
/// table of the complex being shelled.
struct Region<'a> {
    colours: &'a [Colour],
    diagonal: &'a dyn Fn(usize, usize) -> usize,
}

impl Region<'_> {
    fn blue(&self, v: usize) -> bool {
        self.colours[v] == Colour::Blue
    }

    fn arc(&self, u: usize, v: usize) -> Face {
        Face::singleton((self.diagonal)(u.min(v), u.max(v)))
    }

    /// Faces of the permitted complex of the sub-polygon `poly` (vertex
    /// labels in boundary order), in shelling order.
    fn shell(&self, poly: &[usize]) -> Vec<Face> {
        let k = poly.len();
        if k <= 3 {
            return vec![Face::EMPTY];
        }
        let q = self.relabel(poly);
        let last = k - 1;
        let mut out = Vec::new();

        // σ_{m-1}: q_1 q_{m-1}, leaving the triangle q_{m-1} q_m q_1
        let sigma = self.arc(q[0], q[last - 1]);
        let xs = self.shell(&q[..last]);
        out.extend(join_faces(&xs, &[Face::EMPTY], |x, _| x.union(sigma)));

        for idx in (1..last - 1).rev() {
            let v = q[idx];
            // q_m is red unless the whole region is blue
            if !self.blue(v) {
                continue;
            }
            if idx >= 2 {
                let sigma = self.arc(q[0], v).union(self.arc(v, q[last]));
                let xs = self.shell(&q[..=idx]);
                let ys = self.shell(&q[idx..]);
                out.extend(join_faces(&xs, &ys, |x, y| x.union(y).union(sigma)));
            } else {
                let sigma = self.arc(v, q[last]);
                let ys = self.shell(&q[1..]);
                out.extend(join_faces(&[Face::EMPTY], &ys, |_, y| y.union(sigma)));
            }
        }
        out
    }

    /// Rotates `poly` to start at a blue vertex whose predecessor is red,
    /// choosing the lexicographically least (blue, red) edge. Without red
    /// vertices the highest label takes the red role.
    fn relabel(&self, poly: &[usize]) -> Vec<usize> {
        let k = poly.len();
        let start = (0..k)
            .filter(|&p| self.blue(poly[p]) && !self.blue(poly[(p + k - 1) % k]))
            .min_by_key(|&p| (poly[p], poly[(p + k - 1) % k]))
            .unwrap_or_else(|| {
                let top = (0..k).max_by_key(|&p| poly[p]).expect("non-empty polygon");
                (top + 1) % k
            });
        (0..k).map(|s| poly[(start + s) % k]).collect()
    }
}

fn finish(
    complex: ArcComplex,
    faces: Vec<Face>,
    config: &GreedyConfig,
) -> Result<ConstructedShelling> {
    let facet_size = complex.dimension().max(0) as usize;
    let failure = first_shelling_failure(&faces, facet_size);
    let order = ShellingOrder::new(complex.clone(), faces, Provenance::Constructed)?;
    let Some(failed_at) = failure else {
        return Ok(ConstructedShelling {
            order,
            repair: None,
        });
    };
    let polygon = complex.spec().to_string();
    match greedy_shelling(&complex, config)? {
        Some(repaired) => Ok(ConstructedShelling {
            order: repaired,
            repair: Some(RepairEvent {
                polygon,
                failed_at,
                repaired: true,
            }),
        }),
        None => Ok(ConstructedShelling {
            order,
            repair: Some(RepairEvent {
                polygon,
                failed_at,
                repaired: false,
            }),
        }),
    }
}

/// Shelling of the permitted complex of a convex polygon with at least one
/// blue vertex. Verified before it is returned; a failing construction is
/// replaced by [`greedy_shelling`] and reported in
/// [`ConstructedShelling::repair`].
pub fn shell_coloured_convex(
    spec: &PolygonSpec,
    config: &GreedyConfig,
) -> Result<ConstructedShelling> {
    let complex = build_complex(spec, true)?;
    let faces = convex_faces(complex.table(), spec, Arc::diagonal);
    finish(complex, faces, config)
}

fn convex_faces(
    table: &ArcTable,
    polygon: &PolygonSpec,
    to_arc: impl Fn(usize, usize) -> Arc,
) -> Vec<Face> {
    let diagonal = |u: usize, v: usize| {
        table
            .index_of(to_arc(u, v))
            .expect("diagonal of a sub-polygon is an arc")
    };
    let region = Region {
        colours: polygon.colours(),
        diagonal: &diagonal,
    };
    let poly: Vec<usize> = (0..polygon.m()).collect();
    region.shell(&poly)
}

/// Shelling of the permitted complex of a punctured polygon with at least
/// one blue vertex, star by star over the blue maximal loops.
pub fn shell_coloured_punctured(
    spec: &PolygonSpec,
    config: &GreedyConfig,
) -> Result<ConstructedShelling> {
    let complex = build_complex(spec, true)?;
    let m = spec.m();
    let start = (0..m)
        .find(|&v| spec.is_blue(v) && !spec.is_blue(v + m - 1))
        .unwrap_or(0);
    let mut faces = Vec::with_capacity(complex.len());
    for v in (0..m).map(|s| (start + s) % m).filter(|&v| spec.is_blue(v)) {
        let loop_arc = Arc::loop_at(v);
        let cut = cut_along_loop(spec, loop_arc)?;
        let loop_face = Face::singleton(complex.table().index_of(loop_arc)?);
        let star = convex_faces(complex.table(), cut.cut_spec(), |p, q| {
            cut.from_cut(Arc::diagonal(p, q))
        });
        faces.extend(star.into_iter().map(|f| f.union(loop_face)));
    }
    finish(complex, faces, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::{check_wilson_property, verify_shelling};

    fn shell(s: &str) -> ConstructedShelling {
        let spec: PolygonSpec = s.parse().unwrap();
        if spec.is_punctured() {
            shell_coloured_punctured(&spec, &GreedyConfig::default()).unwrap()
        } else {
            shell_coloured_convex(&spec, &GreedyConfig::default()).unwrap()
        }
    }

    fn assert_constructed_shelling(s: &str) -> ConstructedShelling {
        let out = shell(s);
        assert_eq!(out.repair, None, "{s}");
        assert_eq!(out.order.provenance(), Provenance::Constructed);
        assert!(verify_shelling(&out.order).unwrap().passed(), "{s}");
        assert!(check_wilson_property(&out.order).unwrap().passed(), "{s}");
        out
    }

    #[test]
    fn square_base_case() {
        let out = assert_constructed_shelling("P:m=4;punctured=0;colours=BRBR");
        assert_eq!(out.order.len(), 1);
    }

    #[test]
    fn alternate_hexagon() {
        let out = assert_constructed_shelling("P:m=6;punctured=0;colours=BRBRBR");
        assert_eq!(out.order.complex().dimension(), 2);
    }

    #[test]
    fn one_red_hexagon_shells_the_full_complex() {
        let out = assert_constructed_shelling("P:m=6;punctured=0;colours=BBBBBR");
        assert_eq!(out.order.len(), 14);
    }

    #[test]
    fn punctured_bigon_single_face() {
        let out = assert_constructed_shelling("P:m=2;punctured=1;colours=BR");
        assert_eq!(out.order.len(), 1);
    }

    #[test]
    fn alternate_punctured_square_groups_by_loop() {
        let out = assert_constructed_shelling("P:m=4;punctured=1;colours=BRBR");
        let table = out.order.complex().table();
        let loops: Vec<Arc> = out
            .order
            .faces()
            .iter()
            .map(|&f| table.arcs_of(f).into_iter().find(|a| a.is_loop()).unwrap())
            .collect();
        assert_eq!(loops.len(), 6);
        assert!(loops[..3].iter().all(|&l| l == Arc::loop_at(0)));
        assert!(loops[3..].iter().all(|&l| l == Arc::loop_at(2)));
    }

    #[test]
    fn punctured_pentagon_with_one_red() {
        assert_constructed_shelling("P:m=5;punctured=1;colours=BBBBR");
    }
}
