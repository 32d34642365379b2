use crate::{make_pattern, Graph, GraphError, PatternKind};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// One induced copy of a pattern in a host graph.
///
/// `vertices[i]` is the host vertex playing pattern vertex `i`. Copies are
/// reported up to pattern automorphism: two embeddings that cover the same
/// host vertex set with the same role partition count once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Occurrence {
    pub pattern: PatternKind,
    pub vertices: Vec<usize>,
}

/// Vertex classes of a pattern under one round of degree refinement:
/// class = (degree, sorted neighbor degrees). This separates core vertices
/// from rays in every pattern this crate generates.
fn pattern_classes(pattern: &Graph) -> Vec<u32> {
    let degs: Vec<usize> = (0..pattern.vertex_count())
        .map(|v| pattern.degree(v))
        .collect();
    let sigs: Vec<(usize, Vec<usize>)> = (0..pattern.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = pattern.neighbors(v).map(|u| degs[u]).collect();
            nd.sort_unstable();
            (degs[v], nd)
        })
        .collect();
    let mut uniq = sigs.clone();
    uniq.sort();
    uniq.dedup();
    sigs.iter()
        .map(|sig| uniq.binary_search(sig).unwrap() as u32)
        .collect()
}

/// Dedup key: the host vertex set partitioned by pattern vertex class.
fn occurrence_key(classes: &[u32], mapping: &[usize]) -> Vec<(u32, usize)> {
    let mut key: Vec<(u32, usize)> = classes.iter().copied().zip(mapping.iter().copied()).collect();
    key.sort_unstable();
    key
}

/// Search order over pattern vertices: highest degree first, then greedily
/// the vertex with the most already-ordered neighbors, so every step after
/// the first is anchored by at least one placed neighbor when the pattern
/// is connected.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let p = pattern.vertex_count();
    let mut order = Vec::with_capacity(p);
    let mut placed = vec![false; p];
    for _ in 0..p {
        let mut best: Option<usize> = None;
        let score = |v: usize| {
            let anchored = pattern.neighbors(v).filter(|&u| placed[u]).count();
            (anchored, pattern.degree(v))
        };
        for v in 0..p {
            if placed[v] {
                continue;
            }
            match best {
                None => best = Some(v),
                Some(b) if score(v) > score(b) => best = Some(v),
                _ => {}
            }
        }
        let v = best.unwrap();
        placed[v] = true;
        order.push(v);
    }
    order
}

fn backtrack(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        return out(mapping);
    }
    let pv = order[depth];
    let pdeg = pattern.degree(pv);
    'cand: for hv in 0..host.vertex_count() {
        if used[hv] || host.degree(hv) < pdeg {
            continue;
        }
        for d in 0..depth {
            let pu = order[d];
            if pattern.adjacent(pu, pv) != host.adjacent(mapping[pu], hv) {
                continue 'cand;
            }
        }
        mapping[pv] = hv;
        used[hv] = true;
        let stop = backtrack(host, pattern, order, depth + 1, mapping, used, out);
        used[hv] = false;
        if stop {
            return true;
        }
    }
    false
}

/// Every induced occurrence of `pattern` in `host`, deduplicated by host
/// vertex set plus role partition and sorted for deterministic output.
/// Exhaustive backtracking with degree pruning; empty when absent.
pub fn find_induced_embeddings(host: &Graph, pattern: &Graph) -> Vec<Vec<usize>> {
    if pattern.vertex_count() == 0 || pattern.vertex_count() > host.vertex_count() {
        return Vec::new();
    }
    let classes = pattern_classes(pattern);
    let order = search_order(pattern);
    let mut seen: BTreeSet<Vec<(u32, usize)>> = BTreeSet::new();
    let mut found: Vec<(Vec<(u32, usize)>, Vec<usize>)> = Vec::new();
    let mut mapping = vec![0usize; pattern.vertex_count()];
    let mut used = vec![false; host.vertex_count()];
    backtrack(
        host,
        pattern,
        &order,
        0,
        &mut mapping,
        &mut used,
        &mut |m: &[usize]| {
            let key = occurrence_key(&classes, m);
            if seen.insert(key.clone()) {
                found.push((key, m.to_vec()));
            }
            false
        },
    );
    found.sort();
    found.into_iter().map(|(_, m)| m).collect()
}

/// True when `host` contains at least one induced copy of `pattern`.
pub fn exists_induced(host: &Graph, pattern: &Graph) -> bool {
    if pattern.vertex_count() == 0 || pattern.vertex_count() > host.vertex_count() {
        return false;
    }
    let order = search_order(pattern);
    let mut mapping = vec![0usize; pattern.vertex_count()];
    let mut used = vec![false; host.vertex_count()];
    backtrack(
        host,
        pattern,
        &order,
        0,
        &mut mapping,
        &mut used,
        &mut |_| true,
    )
}

/// Named-pattern convenience over [`find_induced_embeddings`].
pub fn find_induced(host: &Graph, kind: PatternKind) -> Result<Vec<Occurrence>, GraphError> {
    let pattern = make_pattern(kind)?;
    Ok(find_induced_embeddings(host, &pattern)
        .into_iter()
        .map(|vertices| Occurrence {
            pattern: kind,
            vertices,
        })
        .collect())
}

/// True iff `host` contains no induced copy of any listed pattern.
pub fn is_induced_free(host: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|p| !exists_induced(host, p))
}
