//! Exact minimum set cover for the small instances that arise around a
//! single vertex: the universe is a vertex's white neighborhood and the
//! candidate sets are its incident edges.

use crate::VertexSet;

/// Minimum number of `sets` whose union contains `universe`, or `None` if
/// even all of them together leave something uncovered.
pub fn min_cover_size(universe: &VertexSet, sets: &[&VertexSet]) -> Option<usize> {
    min_cover(universe, sets).map(|chosen| chosen.len())
}

/// Indices (into `sets`) of one minimum cover of `universe`.
pub fn min_cover(universe: &VertexSet, sets: &[&VertexSet]) -> Option<Vec<usize>> {
    if universe.is_empty() {
        return Some(Vec::new());
    }

    // Restrict to the universe, then drop empties, duplicates and any set
    // contained in another candidate.
    let mut restricted: Vec<(usize, VertexSet)> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (i, s.intersection(universe)))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    restricted.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
    let mut kept: Vec<(usize, VertexSet)> = Vec::with_capacity(restricted.len());
    for (i, s) in restricted {
        if !kept.iter().any(|(_, k)| s.is_subset(k)) {
            kept.push((i, s));
        }
    }

    let mut union = VertexSet::empty(universe.capacity());
    for (_, s) in &kept {
        union.union_with(s);
    }
    if !universe.is_subset(&union) {
        return None;
    }

    let greedy = greedy_cover(universe, &kept);
    let mut search = Search {
        sets: &kept,
        largest: kept.first().map_or(1, |(_, s)| s.len()),
        best: greedy,
        chosen: Vec::new(),
    };
    search.descend(universe.clone());
    Some(search.best.into_iter().map(|slot| kept[slot].0).collect())
}

fn greedy_cover(universe: &VertexSet, sets: &[(usize, VertexSet)]) -> Vec<usize> {
    let mut uncovered = universe.clone();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (slot, _) = sets
            .iter()
            .enumerate()
            .max_by_key(|(slot, (_, s))| (s.intersection(&uncovered).len(), std::cmp::Reverse(*slot)))
            .expect("coverable");
        chosen.push(slot);
        uncovered.difference_with(&sets[slot].1);
    }
    chosen
}

struct Search<'a> {
    sets: &'a [(usize, VertexSet)],
    largest: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, uncovered: VertexSet) {
        if uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let lower = self.chosen.len() + uncovered.len().div_ceil(self.largest);
        if lower >= self.best.len() {
            return;
        }

        // Branch on the uncovered element with the fewest candidate sets.
        let pivot = uncovered
            .iter()
            .min_by_key(|&x| self.sets.iter().filter(|(_, s)| s.contains(x)).count())
            .expect("nonempty");
        for slot in 0..self.sets.len() {
            if !self.sets[slot].1.contains(pivot) {
                continue;
            }
            self.chosen.push(slot);
            let rest = uncovered.difference(&self.sets[slot].1);
            self.descend(rest);
            self.chosen.pop();
        }
    }
}
