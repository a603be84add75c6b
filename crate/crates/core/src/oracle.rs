//! Exponential ground truth: exact `c(G)` and `ν(G)`, the cycle-pair
//! intersection condition, a treewidth-at-most-2 decider and the class `ℋ`
//! machinery built on top of it.

use std::collections::{BTreeSet, HashMap};

use crate::connectivity::{blocks, cut_vertices, is_biconnected};
use crate::error::{Error, Result};
use crate::multigraph::{Cycle, CycleDecomposition, EdgeId, MultiGraph, Subgraph, VertexId};
use crate::operators::{disjoint_two_cuts, edge_separation_step, OperatorApplication};
use crate::rng::Rng;

pub const DEFAULT_EDGE_LIMIT: usize = 24;
/// Hard ceiling imposed by the 64-bit edge masks.
pub const MAX_EDGE_LIMIT: usize = 64;
pub const CYCLE_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub c_min: usize,
    pub nu_max: usize,
    pub min_witness: CycleDecomposition,
    pub max_witness: CycleDecomposition,
}

fn check_size(g: &MultiGraph, edge_limit: usize) -> Result<()> {
    let limit = edge_limit.min(MAX_EDGE_LIMIT);
    if g.m() > limit {
        return Err(Error::TooLarge(format!(
            "{} edges exceed the oracle limit of {limit}",
            g.m()
        )));
    }
    Ok(())
}

/// Compact vertex indices (for 128-bit vertex masks) of non-isolated vertices.
fn compact_vertices(g: &MultiGraph) -> Result<Vec<u32>> {
    let mut idx = vec![u32::MAX; g.n()];
    let mut next = 0u32;
    for v in g.vertices() {
        if !g.incident(v).is_empty() {
            idx[v.0] = next;
            next += 1;
        }
    }
    if next > 128 {
        return Err(Error::TooLarge(format!("{next} non-isolated vertices")));
    }
    Ok(idx)
}

/// Depth-first extension of a path from `cur` back to `target`, using only
/// edges in `allowed` and vertices outside `visited`. Calls `found` with the
/// edge and vertex masks of every closed cycle; stops when it returns false.
#[allow(clippy::too_many_arguments)]
fn close_paths(
    g: &MultiGraph,
    vidx: &[u32],
    cur: VertexId,
    target: VertexId,
    allowed: u64,
    visited: u128,
    path: u64,
    found: &mut dyn FnMut(u64, u128) -> bool,
) -> bool {
    for &f in g.incident(cur) {
        let bit = 1u64 << f.0;
        if allowed & bit == 0 || path & bit != 0 {
            continue;
        }
        let w = g.opposite(f, cur);
        if w == target {
            if !found(path | bit, visited) {
                return false;
            }
            continue;
        }
        let wbit = 1u128 << vidx[w.0];
        if visited & wbit != 0 {
            continue;
        }
        if !close_paths(g, vidx, w, target, allowed, visited | wbit, path | bit, found) {
            return false;
        }
    }
    true
}

/// Every simple cycle through `e` inside `allowed` (which must contain `e`),
/// as edge and vertex masks.
fn cycles_through(
    g: &MultiGraph,
    vidx: &[u32],
    e: EdgeId,
    allowed: u64,
    found: &mut dyn FnMut(u64, u128) -> bool,
) -> bool {
    let (a, b) = g.endpoints(e);
    let visited = (1u128 << vidx[a.0]) | (1u128 << vidx[b.0]);
    let ebit = 1u64 << e.0;
    close_paths(g, vidx, b, a, allowed & !ebit, visited, ebit, found)
}

/// Walks the simple cycle formed by the edges in `mask`.
fn cycle_from_mask(g: &MultiGraph, mask: u64) -> Cycle {
    let e0 = EdgeId(mask.trailing_zeros() as usize);
    let (start, mut cur) = g.endpoints(e0);
    let mut vertices = vec![start];
    let mut edges = vec![e0];
    let mut prev = e0;
    while cur != start {
        let f = *g
            .incident(cur)
            .iter()
            .find(|&&f| f != prev && mask & (1u64 << f.0) != 0)
            .expect("mask is a closed cycle");
        vertices.push(cur);
        edges.push(f);
        prev = f;
        cur = g.opposite(f, cur);
    }
    Cycle { vertices, edges }
}

#[derive(Clone, Copy)]
struct Best {
    min: u32,
    max: u32,
    min_cycle: u64,
    max_cycle: u64,
}

struct Search<'a> {
    g: &'a MultiGraph,
    vidx: Vec<u32>,
    memo: HashMap<u64, Best>,
}

impl Search<'_> {
    /// Best decompositions of the even subgraph spanned by `mask`.
    ///
    /// Branches on every cycle through the smallest remaining edge; the
    /// remainder after removing a cycle is even again, so every branch
    /// completes.
    fn solve(&mut self, mask: u64) -> (u32, u32) {
        if mask == 0 {
            return (0, 0);
        }
        if let Some(b) = self.memo.get(&mask) {
            return (b.min, b.max);
        }
        let e = EdgeId(mask.trailing_zeros() as usize);
        let mut cycles = Vec::new();
        cycles_through(self.g, &self.vidx, e, mask, &mut |c, _| {
            cycles.push(c);
            true
        });
        let mut best = Best {
            min: u32::MAX,
            max: 0,
            min_cycle: 0,
            max_cycle: 0,
        };
        for c in cycles {
            let (lo, hi) = self.solve(mask & !c);
            if lo + 1 < best.min {
                best.min = lo + 1;
                best.min_cycle = c;
            }
            if hi + 1 > best.max {
                best.max = hi + 1;
                best.max_cycle = c;
            }
        }
        assert!(best.min != u32::MAX, "even subgraph without a cycle");
        self.memo.insert(mask, best);
        (best.min, best.max)
    }

    fn witness(&self, mut mask: u64, pick_min: bool) -> CycleDecomposition {
        let mut cycles = Vec::new();
        while mask != 0 {
            let b = self.memo[&mask];
            let c = if pick_min { b.min_cycle } else { b.max_cycle };
            cycles.push(cycle_from_mask(self.g, c));
            mask &= !c;
        }
        CycleDecomposition { cycles }
    }
}

/// Exact minimum and maximum cycle numbers with witness decompositions.
///
/// Exhaustive backtracking over the cycles through the smallest unused edge,
/// memoised on the set of unused edges.
pub fn oracle_cycle_numbers(g: &MultiGraph, edge_limit: usize) -> Result<OracleResult> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    check_size(g, edge_limit)?;
    let mut search = Search {
        g,
        vidx: compact_vertices(g)?,
        memo: HashMap::new(),
    };
    let full = if g.m() == 64 { u64::MAX } else { (1u64 << g.m()) - 1 };
    let (c_min, nu_max) = search.solve(full);
    Ok(OracleResult {
        c_min: c_min as usize,
        nu_max: nu_max as usize,
        min_witness: search.witness(full, true),
        max_witness: search.witness(full, false),
    })
}

/// Every simple cycle of `g`, each reported once (canonical form: traversed
/// from its smallest edge id, all other edges larger).
pub fn enumerate_cycles(g: &MultiGraph, edge_limit: usize) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_cycle(g, edge_limit, &mut |edges, _| {
        if out.len() == CYCLE_ENUMERATION_CAP {
            overflow = true;
            return false;
        }
        out.push(cycle_from_mask(g, edges));
        true
    })?;
    if overflow {
        return Err(Error::TooLarge(format!(
            "more than {CYCLE_ENUMERATION_CAP} cycles"
        )));
    }
    Ok(out)
}

fn for_each_cycle(
    g: &MultiGraph,
    edge_limit: usize,
    found: &mut dyn FnMut(u64, u128) -> bool,
) -> Result<()> {
    check_size(g, edge_limit)?;
    let vidx = compact_vertices(g)?;
    for e in g.edges() {
        let above = if e.0 == 63 { 0 } else { !0u64 << (e.0 + 1) };
        let allowed = above | (1u64 << e.0);
        if !cycles_through(g, &vidx, e, allowed, found) {
            break;
        }
    }
    Ok(())
}

/// Two edge-disjoint cycles sharing at least three vertices, if any exist.
///
/// Cycles are enumerated canonically and each new one is compared with all
/// previous ones; the search stops at the first hit and gives up with
/// `TooLarge` after [`CYCLE_ENUMERATION_CAP`] cycles.
pub fn has_triple_intersecting_cycle_pair(
    g: &MultiGraph,
    edge_limit: usize,
) -> Result<Option<(Cycle, Cycle)>> {
    let mut seen: Vec<(u64, u128)> = Vec::new();
    let mut hit = None;
    let mut overflow = false;
    for_each_cycle(g, edge_limit, &mut |edges, verts| {
        if let Some(&(e, _)) = seen
            .iter()
            .find(|&&(e, v)| e & edges == 0 && (v & verts).count_ones() >= 3)
        {
            hit = Some((e, edges));
            return false;
        }
        if seen.len() == CYCLE_ENUMERATION_CAP {
            overflow = true;
            return false;
        }
        seen.push((edges, verts));
        true
    })?;
    if overflow {
        return Err(Error::TooLarge(format!(
            "more than {CYCLE_ENUMERATION_CAP} cycles"
        )));
    }
    Ok(hit.map(|(a, b)| (cycle_from_mask(g, a), cycle_from_mask(g, b))))
}

/// Decides `tw(g) <= 2` by series-parallel reduction.
///
/// Parallel bundles are collapsed first (they do not affect treewidth), then
/// vertices of degree at most one are deleted and degree-2 vertices are
/// replaced by an edge between their neighbours until nothing applies. The
/// graph has treewidth at most 2 iff it reduces to nothing; the order of the
/// reductions does not matter.
pub fn is_treewidth_at_most_2(g: &MultiGraph) -> bool {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); g.n()];
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        adj[a.0].insert(b.0);
        adj[b.0].insert(a.0);
    }
    let mut alive = vec![true; g.n()];
    let mut remaining = g.n();
    let mut queue: Vec<usize> = (0..g.n()).filter(|&v| adj[v].len() <= 2).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] || adj[v].len() > 2 {
            continue;
        }
        let nbrs: Vec<usize> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &w in &nbrs {
            adj[w].remove(&v);
        }
        if let [a, b] = nbrs[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        alive[v] = false;
        remaining -= 1;
        queue.extend(nbrs);
    }
    remaining == 0
}

/// Biconnected, 4-regular and of treewidth at most 2.
pub fn is_class_h(g: &MultiGraph) -> bool {
    g.vertices().all(|v| g.incident(v).len() == 4)
        && g.n() >= 2
        && is_biconnected(g)
        && is_treewidth_at_most_2(g)
}

/// Eulerian, maximum degree at most 4 and treewidth at most 2.
pub fn is_class_h_prime(g: &MultiGraph) -> bool {
    g.is_eulerian() && g.max_degree() <= 4 && is_treewidth_at_most_2(g)
}

/// A cycle of length `k >= 2` with every edge doubled.
pub fn is_closed_necklace(g: &MultiGraph) -> bool {
    let n = g.n();
    if n < 2 || g.m() != 2 * n || !g.is_connected() {
        return false;
    }
    if n == 2 {
        return true;
    }
    g.vertices().all(|v| {
        let inc = g.incident(v);
        if inc.len() != 4 {
            return false;
        }
        let nbrs: Vec<VertexId> = inc.iter().map(|&e| g.opposite(e, v)).collect();
        let distinct: BTreeSet<_> = nbrs.iter().collect();
        distinct.len() == 2
            && distinct
                .iter()
                .all(|&&w| nbrs.iter().filter(|&&x| x == w).count() == 2)
    })
}

/// Block-level test for connected 4-regular graphs: every block is either a
/// cycle all of whose vertices are cut vertices of `g`, or turns into a
/// member of `ℋ` once the cut vertices of `g` inside it are resolved.
///
/// On connected 4-regular inputs this agrees with [`is_class_h_prime`].
pub fn four_regular_block_check(g: &MultiGraph) -> bool {
    if !g.is_connected() || g.vertices().any(|v| g.incident(v).len() != 4) {
        return false;
    }
    let cuts = cut_vertices(g);
    blocks(g).blocks.iter().all(|b| {
        let is_cut: Vec<bool> = b.vertex_map.iter().map(|v| cuts.contains(v)).collect();
        let local = &b.graph;
        let is_cycle = local.vertices().all(|v| local.incident(v).len() == 2);
        if is_cycle {
            return is_cut.iter().all(|&c| c);
        }
        resolve_all(local.clone(), is_cut).is_some_and(|h| is_class_h(&h))
    })
}

fn resolve_all(mut g: MultiGraph, mut marked: Vec<bool>) -> Option<MultiGraph> {
    while let Some(v) = marked.iter().position(|&m| m) {
        let (h, relabel) = g.resolve(VertexId(v)).ok()?;
        let mut next = vec![false; h.n()];
        for (old, new) in relabel.vertices.iter().enumerate() {
            if let Some(new) = new {
                next[new.0] = marked[old];
            }
        }
        g = h;
        marked = next;
    }
    Some(g)
}

/// How [`decompose_class_h`] picks among the available 2-cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutChoice {
    /// First cut in lexicographic edge-id order.
    First,
    /// Uniformly random among all disjoint 2-cuts, seeded.
    Random(u64),
}

/// Result of splitting an `ℋ` member into closed necklaces.
#[derive(Debug, Clone)]
pub struct ClassHDecomposition {
    /// Edge-separation steps in the order they were applied.
    pub steps: Vec<OperatorApplication>,
    /// The disjoint union of necklaces left at the end.
    pub final_graph: MultiGraph,
}

impl ClassHDecomposition {
    pub fn leaves(&self) -> Vec<Subgraph> {
        self.final_graph.components()
    }

    /// Sorted multiset of leaf necklace lengths.
    pub fn leaf_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.leaves().iter().map(|c| c.graph.n()).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Re-applies `≎` for every step, newest first.
    pub fn replay(&self) -> Result<MultiGraph> {
        let mut g = self.final_graph.clone();
        for step in self.steps.iter().rev() {
            step.reidentify(&mut g)?;
        }
        Ok(g)
    }
}

/// Splits `g ∈ ℋ` by disjoint 2-cuts until only closed necklaces remain.
pub fn decompose_class_h(g: &MultiGraph, choice: CutChoice) -> Result<ClassHDecomposition> {
    if !is_class_h(g) {
        return Err(Error::NotClassH);
    }
    let mut rng = match choice {
        CutChoice::First => None,
        CutChoice::Random(seed) => Some(Rng::new(seed)),
    };
    let mut current = g.clone();
    let mut steps = Vec::new();
    'outer: loop {
        for comp in current.components() {
            let cuts = disjoint_two_cuts(&comp.graph);
            if cuts.is_empty() {
                if !is_closed_necklace(&comp.graph) {
                    return Err(Error::NotClassH);
                }
                continue;
            }
            let (e1, e2) = match rng.as_mut() {
                None => cuts[0],
                Some(r) => *r.pick(&cuts),
            };
            let (next, step) =
                edge_separation_step(&current, (comp.edge_map[e1.0], comp.edge_map[e2.0]))?;
            current = next;
            steps.push(step);
            continue 'outer;
        }
        break;
    }
    Ok(ClassHDecomposition {
        steps,
        final_graph: current,
    })
}
