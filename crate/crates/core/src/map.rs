//! Self-maps on finite point sets and their orbit structure.
//!
//! A [`SelfMap`] is a total function table on `{0, …, k-1}`. Viewed as a
//! functional graph, every point walks along a pre-periodic tail into
//! exactly one cycle; [`OrbitAnalysis`] records that decomposition once
//! and caches it, since classifiers and searches query it repeatedly.
//!
//! Distances play no role here, so a `SelfMap` stands alone; operations
//! that need geometry pair it with a `FiniteMetricSpace` and check that
//! the sizes agree. On a finite space every self-map is continuous
//! (the topology is discrete), so no continuity analysis is offered.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::Error;

/// A periodic orbit, stored in traversal order and rotated so the
/// smallest point index comes first. Its prime period is its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    points: Vec<usize>,
}

impl Cycle {
    /// The cycle's points in traversal order, smallest index first.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// The least `k > 0` with `T^k(x) = x` for every `x` on the cycle —
    /// exactly the cycle length, since the points are pairwise distinct.
    pub fn prime_period(&self) -> usize {
        self.points.len()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.points.contains(&point)
    }
}

/// Where a starting point lands: how long its tail is and which cycle
/// it enters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tail {
    /// Number of strictly pre-periodic iterates before the cycle.
    pub len: usize,
    /// Index into [`OrbitAnalysis::cycles`].
    pub cycle: usize,
}

/// Full orbit decomposition of a self-map: fixed points, all cycles
/// with their prime periods, and per-point tail data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitAnalysis {
    fixed_points: Vec<usize>,
    cycles: Vec<Cycle>,
    tails: Vec<Tail>,
    by_period: BTreeMap<usize, Vec<usize>>,
}

impl OrbitAnalysis {
    fn compute(table: &[usize]) -> Self {
        let k = table.len();
        // Three-state walk: 0 = unvisited, 1 = on the current path,
        // 2 = finished. A walk that re-enters the current path has
        // found a new cycle; one that hits finished territory has not.
        let mut color = vec![0u8; k];
        let mut pos_on_path = vec![0usize; k];
        let mut raw_cycles: Vec<Vec<usize>> = Vec::new();
        for start in 0..k {
            if color[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut cur = start;
            while color[cur] == 0 {
                color[cur] = 1;
                pos_on_path[cur] = path.len();
                path.push(cur);
                cur = table[cur];
            }
            if color[cur] == 1 {
                let mut cycle = path[pos_on_path[cur]..].to_vec();
                let min_at = cycle
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &p)| p)
                    .map(|(i, _)| i)
                    .unwrap();
                cycle.rotate_left(min_at);
                raw_cycles.push(cycle);
            }
            for &p in &path {
                color[p] = 2;
            }
        }
        raw_cycles.sort_by_key(|c| c[0]);
        let cycles: Vec<Cycle> = raw_cycles
            .into_iter()
            .map(|points| Cycle { points })
            .collect();

        let mut cycle_of = vec![usize::MAX; k];
        for (ci, cycle) in cycles.iter().enumerate() {
            for &p in cycle.points() {
                cycle_of[p] = ci;
            }
        }
        let mut tails: Vec<Option<Tail>> = (0..k)
            .map(|p| {
                (cycle_of[p] != usize::MAX).then(|| Tail {
                    len: 0,
                    cycle: cycle_of[p],
                })
            })
            .collect();
        for start in 0..k {
            if tails[start].is_some() {
                continue;
            }
            let mut pending = Vec::new();
            let mut cur = start;
            while tails[cur].is_none() {
                pending.push(cur);
                cur = table[cur];
            }
            let mut info = tails[cur].unwrap();
            for &p in pending.iter().rev() {
                info = Tail {
                    len: info.len + 1,
                    cycle: info.cycle,
                };
                tails[p] = Some(info);
            }
        }
        let tails: Vec<Tail> = tails.into_iter().map(Option::unwrap).collect();

        let fixed_points: Vec<usize> = (0..k).filter(|&i| table[i] == i).collect();
        let mut by_period: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for cycle in &cycles {
            by_period
                .entry(cycle.prime_period())
                .or_default()
                .extend_from_slice(cycle.points());
        }
        for points in by_period.values_mut() {
            points.sort_unstable();
        }
        OrbitAnalysis {
            fixed_points,
            cycles,
            tails,
            by_period,
        }
    }

    /// Points `i` with `T(i) = i`, ascending.
    pub fn fixed_points(&self) -> &[usize] {
        &self.fixed_points
    }

    /// All cycles, ordered by their smallest point.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Tail data for every starting point.
    pub fn tails(&self) -> &[Tail] {
        &self.tails
    }

    /// Periodic points grouped by prime period. The period-1 entry, when
    /// present, equals [`fixed_points`](Self::fixed_points).
    pub fn periodic_by_period(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.by_period
    }
}

/// A total self-map on `{0, …, k-1}`, given by its image table.
/// Immutable after construction; the orbit decomposition is computed
/// lazily once and shared.
#[derive(Debug)]
pub struct SelfMap {
    table: Vec<usize>,
    analysis: OnceLock<OrbitAnalysis>,
}

impl Clone for SelfMap {
    fn clone(&self) -> Self {
        Self {
            table: self.table.clone(),
            analysis: self.analysis.clone(),
        }
    }
}

impl PartialEq for SelfMap {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for SelfMap {}

impl SelfMap {
    /// Builds a self-map on `size` points from its image table.
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self, Error> {
        if table.len() != size {
            return Err(Error::TableSizeMismatch {
                table: table.len(),
                size,
            });
        }
        for &image in &table {
            if image >= size {
                return Err(Error::PointOutOfRange { index: image, size });
            }
        }
        Ok(Self {
            table,
            analysis: OnceLock::new(),
        })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `T(point)`. Panics if `point` is out of range.
    pub fn apply(&self, point: usize) -> usize {
        self.table[point]
    }

    /// `T^steps(point)`.
    pub fn iterate(&self, point: usize, steps: usize) -> usize {
        let mut cur = point;
        for _ in 0..steps {
            cur = self.table[cur];
        }
        cur
    }

    /// The cached orbit decomposition.
    pub fn orbit_analysis(&self) -> &OrbitAnalysis {
        self.analysis
            .get_or_init(|| OrbitAnalysis::compute(&self.table))
    }

    /// Splits the forward orbit of `start` into its strictly
    /// pre-periodic tail and the cycle it enters; the cycle is listed
    /// from the orbit's entry point. `tail ++ cycle` is the maximal
    /// non-repeating prefix of `start, T start, T² start, …`.
    ///
    /// Panics if `start` is out of range.
    pub fn orbit(&self, start: usize) -> (Vec<usize>, Vec<usize>) {
        let mut first_seen = vec![usize::MAX; self.size()];
        let mut seq = Vec::new();
        let mut cur = start;
        while first_seen[cur] == usize::MAX {
            first_seen[cur] = seq.len();
            seq.push(cur);
            cur = self.table[cur];
        }
        let cycle = seq.split_off(first_seen[cur]);
        (seq, cycle)
    }

    /// Points `i` with `T(i) = i`, ascending.
    pub fn fixed_points(&self) -> &[usize] {
        self.orbit_analysis().fixed_points()
    }

    /// Periodic points grouped by prime period.
    pub fn periodic_points(&self) -> &BTreeMap<usize, Vec<usize>> {
        self.orbit_analysis().periodic_by_period()
    }

    /// True iff every cycle is a fixed point. On a finite space this is
    /// exactly asymptotic regularity: the step gaps `d(T^m x, T^{m+1} x)`
    /// of every orbit are eventually zero iff no cycle of length ≥ 2
    /// exists (a longer cycle repeats a positive gap forever).
    pub fn is_asymptotically_regular(&self) -> bool {
        self.orbit_analysis()
            .cycles()
            .iter()
            .all(|c| c.prime_period() == 1)
    }
}
