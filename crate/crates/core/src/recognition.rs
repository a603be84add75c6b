//! Vertex-edge decomposition and the unique-cycle-number decision.
//!
//! A biconnected graph with a vertex-edge separator `(v, e)` is the `⊻` of
//! two smaller biconnected graphs. [`ve_components`] undoes such
//! identifications until no separator is left; the graph has a unique cycle
//! number iff every remaining piece is an Eulerian multiedge.
//!
//! Two interchangeable routes find separators. [`WorkGraph`] rewires one
//! graph in place and runs a single lowpoint DFS over the component of `v`
//! per test, reading both sides of the chosen bridge off the DFS preorder.
//! The naive route ([`test_and_decompose`], [`ve_components_naive`])
//! materialises `G - v` and recomputes reachability from scratch. Both pick
//! the same separator and produce identical traces.

use std::collections::VecDeque;
use std::fmt;

use crate::connectivity::{blocks, cut_vertices, is_biconnected, split_at_cut_vertex};
use crate::error::{Error, Result};
use crate::multigraph::{Cycle, EdgeId, MultiGraph, Subgraph, VertexId};
use crate::operators::{bridge_after_removing, ve_separation_step, OperatorApplication, VeSeparator};
use crate::oracle::{has_triple_intersecting_cycle_pair, oracle_cycle_numbers};
use crate::rng::Rng;

/// Worklist discipline for [`ve_components`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Order {
    /// FIFO queue seeded with all vertices in increasing id order; split
    /// vertices and their copies are appended at the back.
    #[default]
    Ascending,
    /// Uniformly random removal from the worklist, seeded.
    Randomized(u64),
}

enum Worklist {
    Queue(VecDeque<VertexId>),
    Random(Vec<VertexId>, Rng),
}

impl Worklist {
    fn new(n: usize, order: Order) -> Self {
        let all = (0..n).map(VertexId);
        match order {
            Order::Ascending => Worklist::Queue(all.collect()),
            Order::Randomized(seed) => Worklist::Random(all.collect(), Rng::new(seed)),
        }
    }

    fn pop(&mut self) -> Option<VertexId> {
        match self {
            Worklist::Queue(q) => q.pop_front(),
            Worklist::Random(xs, rng) => {
                if xs.is_empty() {
                    None
                } else {
                    let i = rng.below(xs.len());
                    Some(xs.swap_remove(i))
                }
            }
        }
    }

    fn push(&mut self, v: VertexId) {
        match self {
            Worklist::Queue(q) => q.push_back(v),
            Worklist::Random(xs, _) => xs.push(v),
        }
    }
}

/// The separation steps applied by [`ve_components`] and the resulting
/// disjoint union of irreducible parts.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionTrace {
    pub steps: Vec<OperatorApplication>,
    pub final_graph: MultiGraph,
}

impl DecompositionTrace {
    pub fn final_components(&self) -> Vec<Subgraph> {
        self.final_graph.components()
    }

    /// Vertex of the input each vertex of the final graph was split from.
    pub fn origins(&self) -> Vec<VertexId> {
        let mut origin: Vec<VertexId> = self.final_graph.vertices().collect();
        for step in &self.steps {
            match *step {
                OperatorApplication::VertexEdgeIdent { vertex, copy, .. }
                | OperatorApplication::VertexIdent { vertex, copy } => {
                    origin[copy.0] = origin[vertex.0];
                }
                OperatorApplication::EdgeIdent { .. } => {}
            }
        }
        origin
    }

    /// Number of vertex-edge separation steps.
    pub fn separation_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, OperatorApplication::VertexEdgeIdent { .. }))
            .count()
    }

    /// Undoes every step, newest first.
    pub fn replay(&self) -> Result<MultiGraph> {
        let mut g = self.final_graph.clone();
        for step in self.steps.iter().rev() {
            step.reidentify(&mut g)?;
        }
        Ok(g)
    }
}

impl fmt::Display for DecompositionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// A graph being decomposed in place, plus DFS scratch space reused across
/// tests. Scratch entries are valid only when their stamp equals the current
/// epoch, so nothing is cleared between tests.
#[derive(Debug, Clone)]
pub struct WorkGraph {
    graph: MultiGraph,
    stamp: Vec<u32>,
    pre: Vec<u32>,
    low: Vec<u32>,
    last: Vec<u32>,
    epoch: u32,
    stack: Vec<(VertexId, Option<EdgeId>, usize)>,
}

impl WorkGraph {
    pub fn new(graph: MultiGraph) -> Self {
        WorkGraph {
            graph,
            stamp: Vec::new(),
            pre: Vec::new(),
            low: Vec::new(),
            last: Vec::new(),
            epoch: 0,
            stack: Vec::new(),
        }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn into_graph(self) -> MultiGraph {
        self.graph
    }

    /// Algorithm 1 on the part containing `v`: if `(part - v)` has a bridge,
    /// split along the smallest one and return the record.
    ///
    /// The DFS starts at the smallest neighbour `s` of `v` and never enters
    /// `v`. For the chosen bridge `p -> c` the subtree of `c` is one side and
    /// everything else, including `s`, is the other, so `v` stays with `p`
    /// and its copy goes with `c`.
    pub fn test_and_decompose(&mut self, v: VertexId) -> Result<Option<OperatorApplication>> {
        self.graph.check_vertex(v)?;
        let g = &self.graph;
        let Some(s) = g.incident(v).iter().map(|&e| g.opposite(e, v)).min() else {
            return Ok(None);
        };
        let n = g.n();
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
            self.pre.resize(n, 0);
            self.low.resize(n, 0);
            self.last.resize(n, 0);
        }
        self.epoch += 1;
        let epoch = self.epoch;
        let WorkGraph {
            stamp,
            pre,
            low,
            last,
            stack,
            ..
        } = self;

        let mut counter = 0u32;
        let mut best: Option<(EdgeId, VertexId, VertexId)> = None;
        stamp[s.0] = epoch;
        pre[s.0] = counter;
        low[s.0] = counter;
        counter += 1;
        stack.push((s, None, 0));
        while let Some(top) = stack.last_mut() {
            let (u, parent_edge, i) = *top;
            let inc = g.incident(u);
            if i < inc.len() {
                top.2 += 1;
                let f = inc[i];
                if Some(f) == parent_edge {
                    continue;
                }
                let w = g.opposite(f, u);
                if w == v {
                    continue;
                }
                if stamp[w.0] == epoch {
                    low[u.0] = low[u.0].min(pre[w.0]);
                } else {
                    stamp[w.0] = epoch;
                    pre[w.0] = counter;
                    low[w.0] = counter;
                    counter += 1;
                    stack.push((w, Some(f), 0));
                }
                continue;
            }
            stack.pop();
            last[u.0] = counter - 1;
            if let (Some(&(p, _, _)), Some(f)) = (stack.last(), parent_edge) {
                low[p.0] = low[p.0].min(low[u.0]);
                if low[u.0] > pre[p.0] && best.is_none_or(|(b, _, _)| f < b) {
                    best = Some((f, p, u));
                }
            }
        }

        let Some((e, p, c)) = best else {
            return Ok(None);
        };
        let (lo, hi) = (pre[c.0], last[c.0]);
        let in_subtree = |x: VertexId| stamp[x.0] == epoch && (lo..=hi).contains(&pre[x.0]);
        debug_assert!(g.incident(v).iter().any(|&f| in_subtree(g.opposite(f, v))));
        // split_off visits the incidence list of v in order
        let moved: Vec<bool> = g
            .incident(v)
            .iter()
            .map(|&f| in_subtree(g.opposite(f, v)))
            .collect();
        let mut flags = moved.into_iter();
        let copy = self.graph.split_off(v, |_| flags.next().expect("one flag per edge"));
        self.graph.set_endpoints(e, p, v);
        let new_edge = self.graph.add_edge(c, copy)?;
        Ok(Some(OperatorApplication::VertexEdgeIdent {
            vertex: v,
            edge: e,
            copy,
            new_edge,
        }))
    }
}

/// Algorithm 1 on an immutable graph, by the naive route: finds the
/// smallest bridge of `(part of v) - v` and separates along it. Returns the
/// new graph and `(v, copy)` on success, or a clone of `g` and `None`.
pub fn test_and_decompose(
    g: &MultiGraph,
    v: VertexId,
) -> Result<(MultiGraph, Option<(VertexId, VertexId)>)> {
    match naive_step(g, v)? {
        Some((h, OperatorApplication::VertexEdgeIdent { vertex, copy, .. })) => {
            Ok((h, Some((vertex, copy))))
        }
        Some(_) => unreachable!("separation yields a vertex-edge record"),
        None => Ok((g.clone(), None)),
    }
}

fn naive_step(g: &MultiGraph, v: VertexId) -> Result<Option<(MultiGraph, OperatorApplication)>> {
    match bridge_after_removing(g, v)? {
        Some(edge) => Ok(Some(ve_separation_step(g, VeSeparator { vertex: v, edge })?)),
        None => Ok(None),
    }
}

/// Algorithm 2: splits a biconnected graph into parts without vertex-edge
/// separators. After a split only the two copies of the split vertex are
/// retested.
pub fn ve_components(g: &MultiGraph, order: Order) -> Result<DecompositionTrace> {
    if !is_biconnected(g) {
        return Err(Error::NotBiconnected);
    }
    let mut work = WorkGraph::new(g.clone());
    let mut list = Worklist::new(g.n(), order);
    let mut steps = Vec::new();
    while let Some(v) = list.pop() {
        if let Some(step) = work.test_and_decompose(v)? {
            if let OperatorApplication::VertexEdgeIdent { vertex, copy, .. } = step {
                list.push(vertex);
                list.push(copy);
            }
            steps.push(step);
        }
    }
    Ok(DecompositionTrace {
        steps,
        final_graph: work.into_graph(),
    })
}

/// [`ve_components`] by the naive route; used as a differential reference.
pub fn ve_components_naive(g: &MultiGraph, order: Order) -> Result<DecompositionTrace> {
    if !is_biconnected(g) {
        return Err(Error::NotBiconnected);
    }
    let mut current = g.clone();
    let mut list = Worklist::new(g.n(), order);
    let mut steps = Vec::new();
    while let Some(v) = list.pop() {
        if let Some((next, step)) = naive_step(&current, v)? {
            if let OperatorApplication::VertexEdgeIdent { vertex, copy, .. } = step {
                list.push(vertex);
                list.push(copy);
            }
            current = next;
            steps.push(step);
        }
    }
    Ok(DecompositionTrace {
        steps,
        final_graph: current,
    })
}

/// Evidence for a negative verdict.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A final part that is not an Eulerian multiedge. `vertices[i]` is the
    /// input vertex that local vertex `i` was split from.
    IrreducibleComponent {
        graph: MultiGraph,
        vertices: Vec<VertexId>,
    },
    /// Two edge-disjoint cycles sharing at least three vertices.
    CyclePair(Cycle, Cycle),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecognitionVerdict {
    pub unique: bool,
    pub witness: Option<Witness>,
}

impl RecognitionVerdict {
    fn yes() -> Self {
        RecognitionVerdict {
            unique: true,
            witness: None,
        }
    }

    /// Replaces the witness of a negative verdict by an oracle cycle pair
    /// when `g` is small enough; keeps the old witness otherwise.
    pub fn with_cycle_pair(mut self, g: &MultiGraph, edge_limit: usize) -> Self {
        if !self.unique {
            if let Ok(Some((a, b))) = has_triple_intersecting_cycle_pair(g, edge_limit) {
                self.witness = Some(Witness::CyclePair(a, b));
            }
        }
        self
    }
}

/// Algorithm 3's final check: every vertex has exactly one neighbour and
/// even degree. Returns the first offending vertex. Isolated vertices are
/// single-vertex components with cycle number 0 and pass.
fn first_irreducible_vertex(g: &MultiGraph) -> Option<VertexId> {
    g.vertices().find(|&v| {
        let inc = g.incident(v);
        let Some(&first) = inc.first() else {
            return false;
        };
        let w = g.opposite(first, v);
        inc.len() % 2 == 1 || inc.iter().any(|&e| g.opposite(e, v) != w)
    })
}

fn verdict_from_trace(trace: &DecompositionTrace) -> RecognitionVerdict {
    let g = &trace.final_graph;
    match first_irreducible_vertex(g) {
        None => RecognitionVerdict::yes(),
        Some(bad) => {
            let comp = g
                .components()
                .into_iter()
                .find(|c| c.vertex_map.contains(&bad))
                .expect("vertex lies in a component");
            let origins = trace.origins();
            RecognitionVerdict {
                unique: false,
                witness: Some(Witness::IrreducibleComponent {
                    vertices: comp.vertex_map.iter().map(|v| origins[v.0]).collect(),
                    graph: comp.graph,
                }),
            }
        }
    }
}

/// Algorithm 3 for one biconnected graph with even degrees.
pub fn is_cycle_number_unique_biconnected(
    g: &MultiGraph,
    order: Order,
) -> Result<RecognitionVerdict> {
    Ok(decide_biconnected(g, order)?.0)
}

fn decide_biconnected(
    g: &MultiGraph,
    order: Order,
) -> Result<(RecognitionVerdict, DecompositionTrace)> {
    if !is_biconnected(g) {
        return Err(Error::NotBiconnected);
    }
    if let Some(v) = g.vertices().find(|&v| g.incident(v).len() % 2 == 1) {
        return Err(Error::OddDegree(v.0));
    }
    let trace = ve_components(g, order)?;
    Ok((verdict_from_trace(&trace), trace))
}

/// Whole-graph decomposition of an Eulerian graph as a single trace: cut
/// vertices are split first (`VI` records, smallest cut vertex first), then
/// Algorithm 2 runs on the resulting disjoint union of blocks. Replaying the
/// trace restores `g` with identical ids.
pub fn decompose(g: &MultiGraph, order: Order) -> Result<(RecognitionVerdict, DecompositionTrace)> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let mut current = g.clone();
    let mut steps = Vec::new();
    while let Some(&v) = cut_vertices(&current).iter().next() {
        let (next, vertex, copy) = split_at_cut_vertex(&current, v)?;
        current = next;
        steps.push(OperatorApplication::VertexIdent { vertex, copy });
    }
    let mut work = WorkGraph::new(current);
    let mut list = Worklist::new(work.graph().n(), order);
    while let Some(v) = list.pop() {
        if let Some(step) = work.test_and_decompose(v)? {
            if let OperatorApplication::VertexEdgeIdent { vertex, copy, .. } = step {
                list.push(vertex);
                list.push(copy);
            }
            steps.push(step);
        }
    }
    let trace = DecompositionTrace {
        steps,
        final_graph: work.into_graph(),
    };
    Ok((verdict_from_trace(&trace), trace))
}

/// Per-block outcome of the general-graph check.
#[derive(Debug, Clone)]
pub struct BlockReport {
    pub block: Subgraph,
    pub trace: DecompositionTrace,
    pub verdict: RecognitionVerdict,
}

/// Runs Algorithm 3 on every block of an Eulerian graph. Witness vertices
/// are translated back to ids of `g`.
pub fn block_reports(g: &MultiGraph, order: Order) -> Result<Vec<BlockReport>> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let forest = blocks(g);
    let mut out = Vec::with_capacity(forest.blocks.len());
    for block in forest.blocks {
        if block.graph.m() == 1 {
            return Err(Error::PreconditionViolated(
                "bridge block in an Eulerian graph".into(),
            ));
        }
        let (mut verdict, trace) = decide_biconnected(&block.graph, order)?;
        if let Some(Witness::IrreducibleComponent { vertices, .. }) = verdict.witness.as_mut() {
            for v in vertices.iter_mut() {
                *v = block.vertex_map[v.0];
            }
        }
        out.push(BlockReport {
            block,
            trace,
            verdict,
        });
    }
    Ok(out)
}

/// Decides `c(G) = ν(G)` for an Eulerian graph: the conjunction over its
/// blocks. The witness, if any, comes from the first failing block.
pub fn is_cycle_number_unique(g: &MultiGraph, order: Order) -> Result<RecognitionVerdict> {
    let reports = block_reports(g, order)?;
    Ok(reports
        .into_iter()
        .map(|r| r.verdict)
        .find(|v| !v.unique)
        .unwrap_or_else(RecognitionVerdict::yes))
}

/// `(c(G), ν(G))` assembled from the decomposition: each block is split into
/// irreducible parts, multiedges with `2k` edges contribute `(k, k)`, other
/// parts go to the exhaustive oracle, and every separation step subtracts
/// one. Block values add up.
pub fn cycle_numbers_via_decomposition(
    g: &MultiGraph,
    budget: usize,
    order: Order,
) -> Result<(usize, usize)> {
    let mut c = 0;
    let mut nu = 0;
    let mut index = 0;
    for report in block_reports(g, order)? {
        for comp in report.trace.final_components() {
            let h = &comp.graph;
            if h.m() == 0 {
                // a lone vertex
            } else if h.is_eulerian_multiedge() {
                c += h.m() / 2;
                nu += h.m() / 2;
            } else if h.m() > budget {
                return Err(Error::ComponentTooLarge {
                    component: index,
                    edges: h.m(),
                    limit: budget,
                });
            } else {
                let r = oracle_cycle_numbers(h, budget)?;
                c += r.c_min;
                nu += r.nu_max;
            }
            index += 1;
        }
        c -= report.trace.steps.len();
        nu -= report.trace.steps.len();
    }
    Ok((c, nu))
}
