//! Flip paths from any triangulation to a fan.

use serde::{Deserialize, Serialize};

use crate::arc::{Arc, ArcTable};
use crate::error::{Error, Result};
use crate::polygon::PolygonSpec;
use crate::triangulation::{cut_along_loop, flip_in, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flip {
    pub removed: Arc,
    pub added: Arc,
}

/// Flips taking `t` to a fan: at a blue vertex (any vertex when
/// unrestricted) for convex polygons, and for punctured polygons to the loop
/// plus fan at the base of `t`'s own loop, staying inside that loop's star.
///
/// Convex: while some region next to the base `v` is not yet fanned, the
/// triangle at `v` in that region has a diagonal `ab` opposite `v`; flipping
/// it brings in a diagonal at `v`. Every flip adds an arc at the base, so the
/// path length is the number of arcs of `t` not incident to it.
pub fn flip_path_to_fan(t: &Triangulation, permitted_only: bool) -> Result<Vec<Flip>> {
    let spec = t.spec();
    if permitted_only {
        spec.require_blue()?;
        if let Some(&a) = t
            .arcs()
            .iter()
            .find(|&&a| !crate::arc::is_permitted(spec, a))
        {
            return Err(Error::Rejected(a));
        }
    }
    if !spec.is_punctured() {
        let eligible = |v: usize| !permitted_only || spec.is_blue(v);
        let base = t
            .fan_base()
            .filter(|&v| eligible(v))
            .or_else(|| (0..spec.m()).find(|&v| eligible(v)))
            .expect("blue vertex checked above");
        return convex_path(spec, t.arcs(), base, permitted_only);
    }

    let loop_arc = t
        .loop_arc()
        .ok_or_else(|| Error::InvalidTriangulation("no maximal loop".into()))?;
    let cut = cut_along_loop(spec, loop_arc)?;
    let inner: Vec<Arc> = t.arcs().iter().filter_map(|&a| cut.to_cut(a)).collect();
    let path = convex_path(cut.cut_spec(), &inner, 0, permitted_only)?;
    Ok(path
        .into_iter()
        .map(|f| Flip {
            removed: cut.from_cut(f.removed),
            added: cut.from_cut(f.added),
        })
        .collect())
}

fn convex_path(
    spec: &PolygonSpec,
    arcs: &[Arc],
    base: usize,
    permitted_only: bool,
) -> Result<Vec<Flip>> {
    let m = spec.m();
    if m < 4 {
        return Ok(Vec::new());
    }
    let table = ArcTable::new(spec)?;
    let mut current = Triangulation::new(spec, arcs.to_vec())?;
    let offset = |w: usize| (w + m - base) % m;
    let mut path = Vec::new();
    loop {
        // neighbours of the base in boundary order, boundary edges included
        let mut fan: Vec<usize> = current
            .arcs()
            .iter()
            .filter(|a| a.is_incident(base))
            .map(|a| {
                let (i, j) = a.endpoints();
                if i == base {
                    j
                } else {
                    i
                }
            })
            .chain([(base + 1) % m, (base + m - 1) % m])
            .collect();
        fan.sort_by_key(|&w| offset(w));
        let Some(gap) = fan.windows(2).find(|w| offset(w[1]) - offset(w[0]) >= 2) else {
            return Ok(path);
        };
        let removed = Arc::diagonal(gap[0], gap[1]);
        let (next, added) = flip_in(&table, &current, removed, permitted_only)?
            .ok_or_else(|| Error::InvalidTriangulation(format!("{removed} cannot be flipped")))?;
        debug_assert!(added.is_incident(base));
        path.push(Flip { removed, added });
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::{enumerate_triangulations, fan_triangulation, flip};

    fn replay(t: &Triangulation, path: &[Flip], permitted_only: bool) -> Triangulation {
        let mut cur = t.clone();
        for f in path {
            let (next, added) = flip(&cur, f.removed, permitted_only).unwrap().unwrap();
            assert_eq!(added, f.added);
            if permitted_only {
                assert!(next.is_permitted());
            }
            cur = next;
        }
        cur
    }

    #[test]
    fn blue_fan_needs_no_flips() {
        let spec: PolygonSpec = "P:m=6;punctured=0;colours=BRBRBR".parse().unwrap();
        let fan = fan_triangulation(&spec, 2).unwrap();
        assert!(flip_path_to_fan(&fan, true).unwrap().is_empty());
        let spec: PolygonSpec = "P:m=4;punctured=1;colours=BRBR".parse().unwrap();
        let fan = fan_triangulation(&spec, 2).unwrap();
        assert!(flip_path_to_fan(&fan, true).unwrap().is_empty());
    }

    #[test]
    fn alternate_hexagon_paths_end_in_a_blue_fan() {
        let spec: PolygonSpec = "P:m=6;punctured=0;colours=BRBRBR".parse().unwrap();
        for t in enumerate_triangulations(&spec, true).unwrap() {
            let path = flip_path_to_fan(&t, true).unwrap();
            let end = replay(&t, &path, true);
            let base = end.fan_base().unwrap();
            assert!(spec.is_blue(base));
            let off_base = t.arcs().iter().filter(|a| !a.is_incident(base)).count();
            assert!(path.len() <= off_base);
        }
    }

    #[test]
    fn punctured_paths_stay_in_the_loop_star() {
        let spec: PolygonSpec = "P:m=4;punctured=1;colours=BRBR".parse().unwrap();
        for t in enumerate_triangulations(&spec, true).unwrap() {
            let l = t.loop_arc().unwrap();
            let path = flip_path_to_fan(&t, true).unwrap();
            assert!(path.iter().all(|f| f.removed != l && !f.added.is_loop()));
            let end = replay(&t, &path, true);
            assert_eq!(end, fan_triangulation(&spec, l.endpoints().0).unwrap());
        }
    }

    #[test]
    fn unrestricted_paths() {
        let spec = PolygonSpec::uncoloured(7, false).unwrap();
        for t in enumerate_triangulations(&spec, false).unwrap() {
            let path = flip_path_to_fan(&t, false).unwrap();
            let end = replay(&t, &path, false);
            assert!(end.fan_base().is_some());
        }
    }
}
