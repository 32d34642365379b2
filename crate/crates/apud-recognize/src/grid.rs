use crate::RecognizeError;
use apud_geometry::rational::{rat, serde_rat};
use apud_geometry::{verify_realization, Axis, LineConfig, LineRef, Placement, Point, Rat};
use apud_graph::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Resolution and effort bounds for the grid search. Candidate centers are
/// the multiples of `step` within `[-window, window]` along each line, so
/// a NO answer is only "no realization at this resolution".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    #[serde(with = "serde_rat")]
    pub step: Rat,
    #[serde(with = "serde_rat")]
    pub window: Rat,
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            step: rat(1, 20),
            window: rat(4, 1),
            max_nodes: 4_000_000_000,
        }
    }
}

/// Search result. `Found` placements are re-verified exactly before being
/// returned; `NotFound` means the whole grid was exhausted without a
/// solution; `Exhausted` means the node budget ran out first and nothing
/// can be concluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridOutcome {
    Found { placement: Placement, nodes: u64 },
    NotFound { nodes: u64 },
    Exhausted { nodes: u64 },
}

impl GridOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            GridOutcome::Found { nodes, .. }
            | GridOutcome::NotFound { nodes }
            | GridOutcome::Exhausted { nodes } => *nodes,
        }
    }
}

const GRID_VERTEX_GUARD: usize = 12;

/// A reflection of the plane that maps the line configuration onto itself
/// and the offset grid onto itself: swap the axes, negate x, negate y, in
/// that application order.
#[derive(Debug, Clone, Copy)]
struct Sym {
    swap: bool,
    neg_x: bool,
    neg_y: bool,
}

struct Grid {
    /// (axis, index-within-axis, fixed coordinate scaled).
    lines: Vec<(Axis, usize, i128)>,
    step_s: i128,
    k_max: i64,
    words: usize,
    /// adjacency masks: for a disk on line `a` at offset `ka`, which
    /// offsets on line `b` are within distance 2. Indexed
    /// `[(a * L + b) * P + (ka + k_max)]`, `words` words each.
    table: Vec<u64>,
    syms: Vec<Sym>,
    /// line lookup by (axis, scaled fixed coordinate), for symmetry images.
    by_value: HashMap<(bool, i128), usize>,
}

fn isqrt(n: i128) -> i128 {
    if n < 0 {
        return -1;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r > 0 && r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl Grid {
    fn build(lines: &LineConfig, budget: &SearchBudget) -> Result<Self, RecognizeError> {
        if budget.step <= Rat::from_integer(BigInt::from(0)) {
            return Err(RecognizeError::BadBudget("step must be positive".into()));
        }
        if budget.window <= Rat::from_integer(BigInt::from(0)) {
            return Err(RecognizeError::BadBudget("window must be positive".into()));
        }
        let mut scale = BigInt::from(1);
        scale = scale.lcm(budget.step.denom());
        for v in lines.horizontals().iter().chain(lines.verticals()) {
            scale = scale.lcm(v.denom());
        }
        let to_scaled = |r: &Rat| -> Option<i128> {
            (r.numer() * (&scale / r.denom())).to_i128()
        };
        let limit = 1i128 << 40;
        let step_s = to_scaled(&budget.step)
            .filter(|&s| s > 0 && s < limit)
            .ok_or_else(|| RecognizeError::BadBudget("step does not scale to an integer".into()))?;
        let k_max = (&budget.window / &budget.step)
            .floor()
            .to_integer()
            .to_i64()
            .filter(|&k| k >= 0 && k <= 1 << 14)
            .ok_or_else(|| RecognizeError::BadBudget("window/step too large".into()))?;
        let positions = (2 * k_max + 1) as usize;
        let s_i = scale
            .to_i128()
            .filter(|&s| s < limit)
            .ok_or_else(|| RecognizeError::BadBudget("coordinate denominators too large".into()))?;

        let mut line_meta = Vec::new();
        for (i, y) in lines.horizontals().iter().enumerate() {
            let f = to_scaled(y).filter(|v| v.abs() < limit).ok_or_else(|| {
                RecognizeError::BadBudget("line coordinate too large".into())
            })?;
            line_meta.push((Axis::H, i, f));
        }
        for (i, x) in lines.verticals().iter().enumerate() {
            let f = to_scaled(x).filter(|v| v.abs() < limit).ok_or_else(|| {
                RecognizeError::BadBudget("line coordinate too large".into())
            })?;
            line_meta.push((Axis::V, i, f));
        }
        let l = line_meta.len();
        if l == 0 {
            return Err(RecognizeError::BadBudget("no lines to place on".into()));
        }
        if l * positions > 1 << 22 {
            return Err(RecognizeError::BadBudget("grid too large".into()));
        }

        let words = positions.div_ceil(64);
        let four_s2 = 4 * s_i * s_i;

        // Point of (line a, offset k) in scaled coordinates.
        let point = |a: usize, k: i64| -> (i128, i128) {
            let (axis, _, f) = line_meta[a];
            match axis {
                Axis::H => (k as i128 * step_s, f),
                Axis::V => (f, k as i128 * step_s),
            }
        };

        let mut table = vec![0u64; l * l * positions * words];
        for a in 0..l {
            for ka in -k_max..=k_max {
                let (px, py) = point(a, ka);
                for b in 0..l {
                    let (axis_b, _, fb) = line_meta[b];
                    // Along line b, the variable coordinate must stay within
                    // sqrt(4S^2 - gap^2) of the projection of the placed disk.
                    let (proj, gap) = match axis_b {
                        Axis::H => (px, py - fb),
                        Axis::V => (py, px - fb),
                    };
                    let rhs = four_s2 - gap * gap;
                    if rhs < 0 {
                        continue;
                    }
                    let s = isqrt(rhs);
                    let lo =
                        Integer::div_ceil(&(proj - s), &step_s).max(-(k_max as i128)) as i64;
                    let hi =
                        Integer::div_floor(&(proj + s), &step_s).min(k_max as i128) as i64;
                    if lo > hi {
                        continue;
                    }
                    let base = ((a * l + b) * positions + (ka + k_max) as usize) * words;
                    for kb in lo..=hi {
                        let bit = (kb + k_max) as usize;
                        table[base + bit / 64] |= 1 << (bit % 64);
                    }
                }
            }
        }

        // Reflections that preserve the configuration and the offset grid.
        let mut syms = Vec::new();
        let mut key_set: Vec<(bool, i128)> = line_meta
            .iter()
            .map(|&(axis, _, f)| (axis == Axis::V, f))
            .collect();
        key_set.sort_unstable();
        for code in 1u8..8 {
            let sym = Sym {
                swap: code & 1 != 0,
                neg_x: code & 2 != 0,
                neg_y: code & 4 != 0,
            };
            let mut image: Vec<(bool, i128)> = line_meta
                .iter()
                .map(|&(axis, _, f)| {
                    let mut vertical = axis == Axis::V;
                    if sym.swap {
                        vertical = !vertical;
                    }
                    let flip = if vertical { sym.neg_x } else { sym.neg_y };
                    (vertical, if flip { -f } else { f })
                })
                .collect();
            image.sort_unstable();
            if image == key_set {
                syms.push(sym);
            }
        }

        let by_value = line_meta
            .iter()
            .enumerate()
            .map(|(i, &(axis, _, f))| ((axis == Axis::V, f), i))
            .collect();

        Ok(Grid {
            lines: line_meta,
            step_s,
            k_max,
            words,
            table,
            syms,
            by_value,
        })
    }

    fn line_count(&self) -> usize {
        self.lines.len()
    }

    fn positions(&self) -> usize {
        (2 * self.k_max + 1) as usize
    }

    fn mask(&self, a: usize, ka: i64, b: usize) -> &[u64] {
        let l = self.line_count();
        let base = ((a * l + b) * self.positions() + (ka + self.k_max) as usize) * self.words;
        &self.table[base..base + self.words]
    }

    fn point(&self, a: usize, k: i64) -> (i128, i128) {
        let (axis, _, f) = self.lines[a];
        match axis {
            Axis::H => (k as i128 * self.step_s, f),
            Axis::V => (f, k as i128 * self.step_s),
        }
    }

    /// Image of a grid position under a reflection; None if the image line
    /// is missing (cannot happen for the reflections kept by `build`).
    fn pos_image(&self, sym: Sym, a: usize, k: i64) -> Option<(usize, i64)> {
        let (mut x, mut y) = self.point(a, k);
        if sym.swap {
            std::mem::swap(&mut x, &mut y);
        }
        if sym.neg_x {
            x = -x;
        }
        if sym.neg_y {
            y = -y;
        }
        let (vert0, _) = (self.lines[a].0 == Axis::V, ());
        let vertical = vert0 != sym.swap;
        let (fixed, variable) = if vertical { (x, y) } else { (y, x) };
        let b = *self.by_value.get(&(vertical, fixed))?;
        debug_assert_eq!(variable % self.step_s, 0);
        Some((b, (variable / self.step_s) as i64))
    }
}

/// Deterministic search order: seed each component with its highest-degree
/// vertex, then grow by most-placed-neighbors.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None; // (anchored, degree, !v)
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let anchored = g.neighbors(v).filter(|&u| placed[u]).count();
            let key = (anchored, g.degree(v));
            match best {
                None => best = Some((key.0, key.1, v)),
                Some((a, d, bv)) => {
                    if key > (a, d) || (key == (a, d) && v < bv) {
                        best = Some((key.0, key.1, v));
                    }
                }
            }
        }
        let v = best.unwrap().2;
        placed[v] = true;
        order.push(v);
    }
    order
}

/// Interchangeable-vertex classes: vertices with identical open
/// neighborhoods can be permuted freely, so their positions are forced
/// into index order.
fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for v in 0..g.vertex_count() {
        groups.entry(g.row(v).to_vec()).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().filter(|c| c.len() > 1).collect();
    out.sort();
    out
}

struct Search<'a> {
    g: &'a Graph,
    grid: &'a Grid,
    order: Vec<usize>,
    /// twin partner constraints: (other vertex, must_be_greater_or_equal)
    twin_bounds: Vec<Vec<(usize, bool)>>,
    domains: Vec<u64>,
    saved: Vec<Vec<u64>>,
    placed_at: Vec<Option<(usize, i64)>>,
    nodes: u64,
    max_nodes: u64,
    exhausted: bool,
    /// Node counter shared across parallel branches, flushed in batches.
    shared_nodes: Option<std::sync::Arc<std::sync::atomic::AtomicU64>>,
    unflushed: u64,
}

impl<'a> Search<'a> {
    fn stride(&self) -> usize {
        self.grid.line_count() * self.grid.words
    }

    fn domain_of(&self, v: usize) -> &[u64] {
        &self.domains[v * self.stride()..(v + 1) * self.stride()]
    }

    fn count_node(&mut self) -> bool {
        self.nodes += 1;
        if let Some(shared) = &self.shared_nodes {
            self.unflushed += 1;
            if self.unflushed >= 4096 {
                use std::sync::atomic::Ordering;
                let total = shared.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
                self.unflushed = 0;
                if total > self.max_nodes {
                    self.exhausted = true;
                    return false;
                }
            }
        } else if self.nodes > self.max_nodes {
            self.exhausted = true;
            return false;
        }
        true
    }

    fn run(&mut self, depth: usize) -> Option<Vec<(usize, i64)>> {
        if depth == self.order.len() {
            return Some(
                (0..self.g.vertex_count())
                    .map(|v| self.placed_at[v].unwrap())
                    .collect(),
            );
        }
        let u = self.order[depth];
        let words = self.grid.words;
        let domain: Vec<u64> = self.domain_of(u).to_vec();
        for line in 0..self.grid.line_count() {
            for w in 0..words {
                let mut bits = domain[line * words + w];
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let k = (w * 64 + b) as i64 - self.grid.k_max;
                    if !self.count_node() {
                        return None;
                    }
                    if !self.position_allowed(depth, u, line, k) {
                        continue;
                    }
                    if let Some(hit) = self.place_and_run(depth, u, line, k) {
                        return Some(hit);
                    }
                    if self.exhausted {
                        return None;
                    }
                }
            }
        }
        None
    }

    /// Places `u`, propagates domains with forward checking, and recurses;
    /// undoes everything on failure.
    fn place_and_run(
        &mut self,
        depth: usize,
        u: usize,
        line: usize,
        k: i64,
    ) -> Option<Vec<(usize, i64)>> {
        let stride = self.stride();
        let words = self.grid.words;
        self.saved.push(self.domains.clone());
        self.placed_at[u] = Some((line, k));
        let mut dead = false;
        for w2 in 0..self.g.vertex_count() {
            if self.placed_at[w2].is_some() {
                continue;
            }
            let adj = self.g.adjacent(u, w2);
            let base = w2 * stride;
            let mut alive = false;
            for line2 in 0..self.grid.line_count() {
                let mask = self.grid.mask(line, k, line2);
                for w3 in 0..words {
                    let d = &mut self.domains[base + line2 * words + w3];
                    if adj {
                        *d &= mask[w3];
                    } else {
                        *d &= !mask[w3];
                    }
                    alive |= *d != 0;
                }
            }
            if !alive {
                dead = true;
                break;
            }
        }
        let hit = if dead { None } else { self.run(depth + 1) };
        if hit.is_none() {
            self.domains = self.saved.pop().unwrap();
            self.placed_at[u] = None;
        } else {
            self.saved.pop();
        }
        hit
    }

    fn position_allowed(&self, depth: usize, u: usize, line: usize, k: i64) -> bool {
        // Twin order: interchangeable vertices keep index order.
        for &(other, must_geq) in &self.twin_bounds[u] {
            if let Some(p) = self.placed_at[other] {
                if must_geq && (line, k) < p {
                    return false;
                }
                if !must_geq && (line, k) > p {
                    return false;
                }
            }
        }
        // Root canonicalization under configuration reflections.
        if depth == 0 {
            for &sym in &self.grid.syms {
                if let Some(img) = self.grid.pos_image(sym, line, k) {
                    if img < (line, k) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Exhaustive search for a realization of `g` on `lines` with all centers
/// at grid offsets. Sound for YES (the returned placement is re-verified
/// exactly in rational arithmetic); a `NotFound` only rules out this grid.
/// Deterministic: the first placement in search order wins.
pub fn solve_placement_grid(
    g: &Graph,
    lines: &LineConfig,
    budget: &SearchBudget,
) -> Result<GridOutcome, RecognizeError> {
    solve_placement_grid_with_jobs(g, lines, budget, 1)
}

/// Like [`solve_placement_grid`], splitting the search across first-vertex
/// branches when `jobs > 1`. Found/NotFound outcomes are unaffected (the
/// lexicographically first branch with a solution wins); only the node
/// counts and the exact budget-exhaustion point depend on scheduling.
pub fn solve_placement_grid_with_jobs(
    g: &Graph,
    lines: &LineConfig,
    budget: &SearchBudget,
    jobs: usize,
) -> Result<GridOutcome, RecognizeError> {
    let n = g.vertex_count();
    if n > GRID_VERTEX_GUARD {
        return Err(RecognizeError::GuardExceeded {
            what: "grid placement search",
            limit: GRID_VERTEX_GUARD,
            got: n,
        });
    }
    if n == 0 {
        return Ok(GridOutcome::Found {
            placement: Placement::new(),
            nodes: 0,
        });
    }
    if lines.line_count() == 0 {
        return Ok(GridOutcome::NotFound { nodes: 0 });
    }
    let grid = Grid::build(lines, budget)?;

    let order = search_order(g);
    let mut twin_bounds = vec![Vec::new(); n];
    for class in twin_classes(g) {
        for pair in class.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            // pos(a) <= pos(b): whichever is placed second checks the bound.
            twin_bounds[a].push((b, false));
            twin_bounds[b].push((a, true));
        }
    }

    let stride = grid.line_count() * grid.words;
    let positions = grid.positions();
    let mut full = vec![u64::MAX; stride];
    for line in 0..grid.line_count() {
        for w in 0..grid.words {
            let hi = ((positions.min((w + 1) * 64)) - w * 64).min(64);
            let mask = if w * 64 >= positions {
                0
            } else if hi == 64 {
                u64::MAX
            } else {
                (1u64 << hi) - 1
            };
            full[line * grid.words + w] = mask;
        }
    }
    let mut domains = Vec::with_capacity(n * stride);
    for _ in 0..n {
        domains.extend_from_slice(&full);
    }

    let fresh = |shared: Option<std::sync::Arc<std::sync::atomic::AtomicU64>>| Search {
        g,
        grid: &grid,
        order: order.clone(),
        twin_bounds: twin_bounds.clone(),
        domains: domains.clone(),
        saved: Vec::new(),
        placed_at: vec![None; n],
        nodes: 0,
        max_nodes: budget.max_nodes,
        exhausted: false,
        shared_nodes: shared,
        unflushed: 0,
    };

    let (hit, nodes, exhausted) = if jobs <= 1 {
        let mut search = fresh(None);
        let hit = search.run(0);
        (hit, search.nodes, search.exhausted)
    } else {
        run_parallel(fresh, &grid, &order, jobs)
            .map_err(|e| RecognizeError::BadBudget(format!("thread pool: {}", e)))?
    };

    match hit {
        Some(hit) => {
            let mut placement = Placement::new();
            for (v, (line, k)) in hit.into_iter().enumerate() {
                let (axis, idx, _) = grid.lines[line];
                let offset = &budget.step * Rat::from_integer(BigInt::from(k));
                let point = match axis {
                    Axis::H => Point::new(offset, lines.horizontals()[idx].clone()),
                    Axis::V => Point::new(lines.verticals()[idx].clone(), offset),
                };
                placement.place(v, point, LineRef { axis, index: idx });
            }
            let report = verify_realization(g, lines, &placement)?;
            if !report.is_valid() {
                // The integer search and the rational verifier disagree;
                // that would be a bug, not a data error.
                unreachable!("grid solution failed exact re-verification: {:?}", report);
            }
            Ok(GridOutcome::Found { placement, nodes })
        }
        None if exhausted => Ok(GridOutcome::Exhausted { nodes }),
        None => Ok(GridOutcome::NotFound { nodes }),
    }
}

type BranchResult = (Option<Vec<(usize, i64)>>, u64, bool);

/// Splits the search over the first vertex's candidate positions. Every
/// branch is explored unless a lexicographically earlier branch has already
/// found a solution, so Found/NotFound match the sequential outcome.
fn run_parallel<'a>(
    fresh: impl Fn(Option<std::sync::Arc<std::sync::atomic::AtomicU64>>) -> Search<'a> + Sync,
    grid: &Grid,
    order: &[usize],
    jobs: usize,
) -> Result<BranchResult, rayon::ThreadPoolBuildError> {
    use rayon::prelude::*;
    use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
    use std::sync::Arc;

    let root = order[0];
    let probe = fresh(None);
    let mut roots: Vec<(usize, i64)> = Vec::new();
    let words = grid.words;
    let domain = probe.domain_of(root).to_vec();
    for line in 0..grid.line_count() {
        for w in 0..words {
            let mut bits = domain[line * words + w];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let k = (w * 64 + b) as i64 - grid.k_max;
                if probe.position_allowed(0, root, line, k) {
                    roots.push((line, k));
                }
            }
        }
    }

    let shared = Arc::new(AtomicU64::new(0));
    let winner = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let results: Vec<BranchResult> = pool.install(|| {
        roots
            .par_iter()
            .enumerate()
            .map(|(i, &(line, k))| {
                if winner.load(Ordering::Relaxed) < i {
                    return (None, 0, false);
                }
                let mut search = fresh(Some(shared.clone()));
                let hit = search.place_and_run(0, root, line, k);
                if hit.is_some() {
                    winner.fetch_min(i, Ordering::Relaxed);
                }
                (hit, search.nodes, search.exhausted)
            })
            .collect()
    });

    let nodes: u64 = results.iter().map(|r| r.1).sum::<u64>() + roots.len() as u64;
    let exhausted = results.iter().any(|r| r.2);
    for (hit, _, _) in results {
        if hit.is_some() {
            return Ok((hit, nodes, exhausted));
        }
    }
    Ok((None, nodes, exhausted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use apud_graph::{make_pattern, PatternKind};

    fn cross() -> LineConfig {
        LineConfig::origin_cross()
    }

    fn coarse() -> SearchBudget {
        SearchBudget {
            step: rat(1, 4),
            window: rat(4, 1),
            max_nodes: 100_000_000,
        }
    }

    #[test]
    fn single_vertex_is_found() {
        let out = solve_placement_grid(&Graph::new(1), &cross(), &coarse()).unwrap();
        assert!(matches!(out, GridOutcome::Found { .. }));
    }

    #[test]
    fn c4_is_found_and_verified() {
        let c4 = make_pattern(PatternKind::Cycle(4)).unwrap();
        match solve_placement_grid(&c4, &cross(), &coarse()).unwrap() {
            GridOutcome::Found { placement, .. } => {
                assert_eq!(placement.len(), 4);
            }
            other => panic!("expected Found, got {:?}", other),
        }
    }

    #[test]
    fn k14_found_on_perpendicular_pair() {
        let star = make_pattern(PatternKind::Star(4)).unwrap();
        let out = solve_placement_grid(&star, &cross(), &coarse()).unwrap();
        assert!(matches!(out, GridOutcome::Found { .. }));
    }

    #[test]
    fn c5_not_found_at_coarse_resolution() {
        let c5 = make_pattern(PatternKind::Cycle(5)).unwrap();
        let out = solve_placement_grid(&c5, &cross(), &coarse()).unwrap();
        assert!(matches!(out, GridOutcome::NotFound { .. }), "{:?}", out);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let c5 = make_pattern(PatternKind::Cycle(5)).unwrap();
        let tiny = SearchBudget {
            step: rat(1, 20),
            window: rat(4, 1),
            max_nodes: 1000,
        };
        let out = solve_placement_grid(&c5, &cross(), &tiny).unwrap();
        assert!(matches!(out, GridOutcome::Exhausted { nodes: _ }));
    }

    #[test]
    fn no_lines_means_not_found() {
        let cfg = LineConfig::new(vec![], vec![]).unwrap();
        let out = solve_placement_grid(&Graph::new(2), &cfg, &SearchBudget::default()).unwrap();
        assert!(matches!(out, GridOutcome::NotFound { .. }));
    }

    #[test]
    fn guard_rejects_large_graphs() {
        assert!(matches!(
            solve_placement_grid(&Graph::new(13), &cross(), &coarse()),
            Err(RecognizeError::GuardExceeded { .. })
        ));
    }
}

#[cfg(test)]
mod parallel_tests {
    use super::*;
    use apud_geometry::rational::rat;
    use apud_graph::{make_pattern, PatternKind};

    #[test]
    fn parallel_matches_sequential() {
        let budget = SearchBudget {
            step: rat(1, 8),
            window: rat(4, 1),
            max_nodes: u64::MAX,
        };
        let cross = LineConfig::origin_cross();
        for kind in [PatternKind::Cycle(4), PatternKind::Cycle(5), PatternKind::Claw] {
            let g = make_pattern(kind).unwrap();
            let seq = solve_placement_grid(&g, &cross, &budget).unwrap();
            let par = solve_placement_grid_with_jobs(&g, &cross, &budget, 4).unwrap();
            match (&seq, &par) {
                (GridOutcome::Found { placement: a, .. }, GridOutcome::Found { placement: b, .. }) => {
                    assert_eq!(a, b, "{}", kind)
                }
                (GridOutcome::NotFound { .. }, GridOutcome::NotFound { .. }) => {}
                other => panic!("outcomes diverge for {}: {:?}", kind, other),
            }
        }
    }
}
