//! Depth-first search for a shelling order.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{first_shelling_failure, Provenance, ShellingOrder};
use crate::complex::ArcComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Default node budget, enough for complexes of a few hundred faces.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreedyConfig {
    /// Maximum number of search nodes expanded before giving up.
    pub budget: usize,
    /// Seeds the tie-breaking between equally ranked candidates.
    pub seed: u64,
}

impl Default for GreedyConfig {
    fn default() -> Self {
        GreedyConfig {
            budget: DEFAULT_BUDGET,
            seed: 0,
        }
    }
}

struct Search<'a> {
    faces: &'a [Face],
    facet_size: usize,
    /// seeded tie-break rank per face
    rank: Vec<usize>,
    nodes: usize,
    budget: usize,
    dead: HashSet<Vec<u64>>,
}

impl Search<'_> {
    /// Number of facets `face` shares with the prefix, or `None` if
    /// appending it would break the shelling condition.
    fn shared_facets(&self, prefix: &[usize], face: Face) -> Option<usize> {
        let mut witnesses: Vec<Face> = Vec::new();
        for &p in prefix {
            let s = self.faces[p].intersection(face);
            if s.len() == self.facet_size && !witnesses.contains(&s) {
                witnesses.push(s);
            }
        }
        if witnesses.is_empty() {
            return None;
        }
        prefix
            .iter()
            .all(|&p| {
                let s = self.faces[p].intersection(face);
                witnesses.iter().any(|&w| s.is_subset(w))
            })
            .then_some(witnesses.len())
    }

    fn extend(&mut self, prefix: &mut Vec<usize>, used: &mut Vec<u64>) -> bool {
        if prefix.len() == self.faces.len() {
            return true;
        }
        if self.nodes >= self.budget || self.dead.contains(used) {
            return false;
        }
        self.nodes += 1;
        let mut candidates: Vec<(usize, usize)> = (0..self.faces.len())
            .filter(|&i| used[i / 64] >> (i % 64) & 1 == 0)
            .filter_map(|i| self.shared_facets(prefix, self.faces[i]).map(|n| (i, n)))
            .collect();
        // most shared facets first, so the remaining boundary stays small
        candidates.sort_by_key(|&(i, n)| (std::cmp::Reverse(n), self.rank[i]));
        for (i, _) in candidates {
            prefix.push(i);
            used[i / 64] |= 1 << (i % 64);
            if self.extend(prefix, used) {
                return true;
            }
            used[i / 64] &= !(1 << (i % 64));
            prefix.pop();
            if self.nodes >= self.budget {
                return false;
            }
        }
        self.dead.insert(used.clone());
        false
    }
}

/// Searches for a shelling order, depth first with memoised dead prefixes.
///
/// `None` means the budget ran out or every start failed; it says nothing
/// about shellability. A returned order has been re-verified.
pub fn greedy_shelling(
    complex: &ArcComplex,
    config: &GreedyConfig,
) -> Result<Option<ShellingOrder>> {
    if !complex.is_pure() {
        return Err(Error::NotPure);
    }
    let faces = complex.faces();
    let n = faces.len();
    let mut rank: Vec<usize> = (0..n).collect();
    rank.shuffle(&mut ChaCha8Rng::seed_from_u64(config.seed));
    let mut search = Search {
        faces,
        facet_size: complex.dimension().max(0) as usize,
        rank,
        nodes: 0,
        budget: config.budget,
        dead: HashSet::new(),
    };
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&i| search.rank[i]);
    for start in starts {
        let mut prefix = vec![start];
        let mut used = vec![0u64; n.div_ceil(64)];
        used[start / 64] |= 1 << (start % 64);
        if search.extend(&mut prefix, &mut used) {
            let order: Vec<Face> = prefix.iter().map(|&i| faces[i]).collect();
            if first_shelling_failure(&order, search.facet_size).is_some() {
                return Ok(None);
            }
            return ShellingOrder::new(complex.clone(), order, Provenance::Greedy).map(Some);
        }
        if search.nodes >= search.budget {
            break;
        }
    }
    Ok(None)
}
