//! Lowpoint machinery: bridges, cut vertices, blocks and the `Split` step.
//!
//! The DFS is iterative and skips only the *tree edge instance* when looking
//! back at the parent, so a parallel edge to the parent counts as a back edge
//! and parallel pairs are never reported as bridges.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, Subgraph, VertexId};

const UNSEEN: usize = usize::MAX;

/// Biconnected components of a graph plus their cut-vertex incidence.
#[derive(Debug, Clone)]
pub struct BlockForest {
    pub blocks: Vec<Subgraph>,
    pub cut_vertices: BTreeSet<VertexId>,
    /// Cut vertex → indices into `blocks` of the blocks containing it.
    pub block_cut_incidence: BTreeMap<VertexId, Vec<usize>>,
}

struct Lowpoint {
    bridges: Vec<EdgeId>,
    articulation: Vec<bool>,
    block_edges: Vec<Vec<EdgeId>>,
    isolated: Vec<VertexId>,
}

struct Frame {
    v: VertexId,
    parent_edge: Option<EdgeId>,
    next: usize,
}

fn lowpoint(g: &MultiGraph) -> Lowpoint {
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Lowpoint {
        bridges: Vec::new(),
        articulation: vec![false; n],
        block_edges: Vec::new(),
        isolated: Vec::new(),
    };
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();

    for root in g.vertices() {
        if disc[root.0] != UNSEEN {
            continue;
        }
        if g.incident(root).is_empty() {
            disc[root.0] = time;
            time += 1;
            out.isolated.push(root);
            continue;
        }
        disc[root.0] = time;
        low[root.0] = time;
        time += 1;
        let mut root_children = 0;
        stack.push(Frame {
            v: root,
            parent_edge: None,
            next: 0,
        });
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if let Some(&e) = g.incident(v).get(frame.next) {
                frame.next += 1;
                if Some(e) == frame.parent_edge {
                    continue;
                }
                let w = g.opposite(e, v);
                if disc[w.0] == UNSEEN {
                    edge_stack.push(e);
                    disc[w.0] = time;
                    low[w.0] = time;
                    time += 1;
                    stack.push(Frame {
                        v: w,
                        parent_edge: Some(e),
                        next: 0,
                    });
                } else if disc[w.0] < disc[v.0] {
                    low[v.0] = low[v.0].min(disc[w.0]);
                    edge_stack.push(e);
                }
                continue;
            }
            let frame = stack.pop().expect("non-empty");
            let Some(pe) = frame.parent_edge else {
                continue;
            };
            let p = g.opposite(pe, v);
            low[p.0] = low[p.0].min(low[v.0]);
            if low[v.0] > disc[p.0] {
                out.bridges.push(pe);
            }
            if low[v.0] >= disc[p.0] {
                if p == root {
                    root_children += 1;
                } else {
                    out.articulation[p.0] = true;
                }
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == pe {
                        break;
                    }
                }
                out.block_edges.push(block);
            }
        }
        if root_children >= 2 {
            out.articulation[root.0] = true;
        }
    }
    out
}

/// All bridges, in increasing id order.
pub fn bridges(g: &MultiGraph) -> Vec<EdgeId> {
    let mut b = lowpoint(g).bridges;
    b.sort_unstable();
    b
}

/// The bridge with the smallest id, if any component has one.
pub fn find_cut_edge(g: &MultiGraph) -> Option<EdgeId> {
    lowpoint(g).bridges.into_iter().min()
}

pub fn cut_vertices(g: &MultiGraph) -> BTreeSet<VertexId> {
    lowpoint(g)
        .articulation
        .iter()
        .enumerate()
        .filter_map(|(v, &a)| a.then_some(VertexId(v)))
        .collect()
}

/// Connected without cut vertices. `K1`, a single edge and a parallel pair
/// all count as biconnected.
pub fn is_biconnected(g: &MultiGraph) -> bool {
    g.is_connected() && !lowpoint(g).articulation.contains(&true)
}

pub fn is_two_edge_connected(g: &MultiGraph) -> bool {
    g.is_connected() && lowpoint(g).bridges.is_empty()
}

/// Biconnected components. Isolated vertices form single-vertex blocks.
///
/// Blocks are ordered by their smallest vertex id, ties by smallest edge id;
/// inside a block, vertices and edges appear in increasing parent id order.
pub fn blocks(g: &MultiGraph) -> BlockForest {
    let lp = lowpoint(g);
    let mut keyed: Vec<(Vec<VertexId>, Vec<EdgeId>)> = lp
        .block_edges
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vs: Vec<VertexId> = edges
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.endpoints(e);
                    [a, b]
                })
                .collect();
            vs.sort_unstable();
            vs.dedup();
            (vs, edges)
        })
        .chain(lp.isolated.into_iter().map(|v| (vec![v], Vec::new())))
        .collect();
    keyed.sort_by(|a, b| (a.0[0], a.1.first()).cmp(&(b.0[0], b.1.first())));

    let cut_vertices: BTreeSet<VertexId> = lp
        .articulation
        .iter()
        .enumerate()
        .filter_map(|(v, &a)| a.then_some(VertexId(v)))
        .collect();
    let mut block_cut_incidence: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (i, (vs, _)) in keyed.iter().enumerate() {
        for v in vs {
            if cut_vertices.contains(v) {
                block_cut_incidence.entry(*v).or_default().push(i);
            }
        }
    }
    BlockForest {
        blocks: keyed.iter().map(|(vs, es)| g.subgraph(vs, es)).collect(),
        cut_vertices,
        block_cut_incidence,
    }
}

/// Vertices reachable from `start` without passing through `avoid` or any
/// edge in `skip_edges`.
pub(crate) fn reach_avoiding(
    g: &MultiGraph,
    start: VertexId,
    avoid: Option<VertexId>,
    skip_edges: &[EdgeId],
) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    if Some(start) == avoid {
        return seen;
    }
    seen[start.0] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &e in g.incident(u) {
            if skip_edges.contains(&e) {
                continue;
            }
            let w = g.opposite(e, u);
            if Some(w) != avoid && !seen[w.0] {
                seen[w.0] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Splits `g` at the cut vertex `v` so that `g = (G1, v1) ∨ (G2, v2)`.
///
/// `G1` is `v` together with the component of `g - v` that contains the
/// smallest neighbour of `v`; `v1 = v` keeps its id there. Everything else
/// that was attached to `v` moves to the fresh vertex `v2 = n`. Edge ids are
/// unchanged. A cut vertex joining several parts peels off one part per call.
pub fn split_at_cut_vertex(g: &MultiGraph, v: VertexId) -> Result<(MultiGraph, VertexId, VertexId)> {
    g.check_vertex(v)?;
    let first = g
        .neighbours(v)?
        .into_iter()
        .next()
        .ok_or(Error::NotACutVertex(v.0))?;
    let side = reach_avoiding(g, first, Some(v), &[]);
    let moving: Vec<EdgeId> = g
        .incident(v)
        .iter()
        .copied()
        .filter(|&e| !side[g.opposite(e, v).0])
        .collect();
    if moving.is_empty() {
        return Err(Error::NotACutVertex(v.0));
    }
    let mut out = g.clone();
    let v2 = out.add_vertex();
    for e in moving {
        out.move_endpoint(e, v, v2);
    }
    Ok((out, v, v2))
}
