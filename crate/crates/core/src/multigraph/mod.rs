//! Undirected loop-free multigraphs with stable vertex and edge identifiers.
//!
//! Parallel edges are first-class: every edge has its own [`EdgeId`], and two
//! graphs are compared through their endpoint multisets rather than through
//! adjacency sets.

mod decomposition;
mod format;

pub use decomposition::{Cycle, CycleDecomposition};
pub use format::{parse_graph, write_graph};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Old-to-new id maps produced by operations that delete elements.
///
/// `None` marks an element that no longer exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabelling {
    pub vertices: Vec<Option<VertexId>>,
    pub edges: Vec<Option<EdgeId>>,
}

/// A subgraph lifted out of a parent graph, with local-to-parent id maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: MultiGraph,
    /// `vertex_map[local] = parent`.
    pub vertex_map: Vec<VertexId>,
    /// `edge_map[local] = parent`.
    pub edge_map: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiGraph {
    endpoints: Vec<[VertexId; 2]>,
    incidence: Vec<Vec<EdgeId>>,
}

impl MultiGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        MultiGraph {
            endpoints: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from endpoint pairs; edge `i` gets id `i`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.incidence.push(Vec::new());
        VertexId(self.incidence.len() - 1)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u.0));
        }
        let e = EdgeId(self.endpoints.len());
        self.endpoints.push([u, v]);
        self.incidence[u.0].push(e);
        self.incidence[v.0].push(e);
        Ok(e)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.incidence.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.endpoints.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.m()).map(EdgeId)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v.0))
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.m() {
            Ok(())
        } else {
            Err(Error::InvalidEdge(e.0))
        }
    }

    /// Endpoints of `e` in insertion order. Panics on an invalid id.
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [u, v] = self.endpoints[e.0];
        (u, v)
    }

    /// The endpoint of `e` that is not `v`.
    #[inline]
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.endpoints[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    #[inline]
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v.0]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v.0].len())
    }

    pub fn neighbours(&self, v: VertexId) -> Result<BTreeSet<VertexId>> {
        self.check_vertex(v)?;
        Ok(self.incidence[v.0]
            .iter()
            .map(|&e| self.opposite(e, v))
            .collect())
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Component label per vertex and the number of components.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        const UNSEEN: usize = usize::MAX;
        let mut label = vec![UNSEEN; self.n()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if label[s] != UNSEEN {
                continue;
            }
            label[s] = count;
            queue.push_back(VertexId(s));
            while let Some(u) = queue.pop_front() {
                for &e in &self.incidence[u.0] {
                    let w = self.opposite(e, u);
                    if label[w.0] == UNSEEN {
                        label[w.0] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Connected and non-empty.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_labels().1 == 1
    }

    pub fn has_even_degrees(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() % 2 == 0)
    }

    /// Connected with all degrees even. `K1` counts as Eulerian.
    pub fn is_eulerian(&self) -> bool {
        self.is_connected() && self.has_even_degrees()
    }

    /// Two vertices joined by an even number (at least two) of parallel edges.
    pub fn is_eulerian_multiedge(&self) -> bool {
        self.n() == 2 && self.m() >= 2 && self.m() % 2 == 0
    }

    /// Replaces the degree-2 vertex `u` by an edge between its two neighbours.
    ///
    /// Surviving ids keep their relative order; the new edge gets the last id.
    pub fn resolve(&self, u: VertexId) -> Result<(MultiGraph, Relabelling)> {
        let degree = self.degree(u)?;
        if degree != 2 {
            return Err(Error::DegreeNotTwo { vertex: u.0, degree });
        }
        let (e0, e1) = (self.incidence[u.0][0], self.incidence[u.0][1]);
        let (a, b) = (self.opposite(e0, u), self.opposite(e1, u));
        if a == b {
            return Err(Error::NeighboursNotDistinct(u.0));
        }
        let (mut g, relabel) = self.without(&[u], &[e0, e1]);
        let na = relabel.vertices[a.0].expect("neighbour survives");
        let nb = relabel.vertices[b.0].expect("neighbour survives");
        g.add_edge(na, nb)?;
        Ok((g, relabel))
    }

    /// Deletes the vertex `v` with its incident edges.
    pub fn remove_vertex(&self, v: VertexId) -> Result<(MultiGraph, Relabelling)> {
        self.check_vertex(v)?;
        Ok(self.without(&[v], &[]))
    }

    /// Deletes the given edges, keeping every vertex.
    pub fn remove_edges(&self, edges: &[EdgeId]) -> Result<(MultiGraph, Relabelling)> {
        for &e in edges {
            self.check_edge(e)?;
        }
        Ok(self.without(&[], edges))
    }

    /// Deletes vertices (with their incident edges) and extra edges,
    /// re-densifying the surviving ids in order.
    fn without(&self, vertices: &[VertexId], edges: &[EdgeId]) -> (MultiGraph, Relabelling) {
        let mut vertex_alive = vec![true; self.n()];
        for v in vertices {
            vertex_alive[v.0] = false;
        }
        let mut edge_alive = vec![true; self.m()];
        for e in edges {
            edge_alive[e.0] = false;
        }
        let mut vmap = vec![None; self.n()];
        let mut next = 0;
        for (v, slot) in vmap.iter_mut().enumerate() {
            if vertex_alive[v] {
                *slot = Some(VertexId(next));
                next += 1;
            }
        }
        let mut g = MultiGraph::new(next);
        let mut emap = vec![None; self.m()];
        for (e, slot) in emap.iter_mut().enumerate() {
            let [a, b] = self.endpoints[e];
            if let (true, Some(na), Some(nb)) = (edge_alive[e], vmap[a.0], vmap[b.0]) {
                *slot = Some(g.add_edge(na, nb).expect("valid edge"));
            }
        }
        (
            g,
            Relabelling {
                vertices: vmap,
                edges: emap,
            },
        )
    }

    /// The subgraph spanned by `vertices` and exactly the edges in `edges`.
    ///
    /// Local ids follow the order of the given slices.
    pub fn subgraph(&self, vertices: &[VertexId], edges: &[EdgeId]) -> Subgraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, v) in vertices.iter().enumerate() {
            local[v.0] = i;
        }
        let mut g = MultiGraph::new(vertices.len());
        for &e in edges {
            let [a, b] = self.endpoints[e.0];
            g.add_edge(VertexId(local[a.0]), VertexId(local[b.0]))
                .expect("subgraph edge endpoints are listed");
        }
        Subgraph {
            graph: g,
            vertex_map: vertices.to_vec(),
            edge_map: edges.to_vec(),
        }
    }

    /// Connected components as subgraphs, ordered by smallest vertex id.
    pub fn components(&self) -> Vec<Subgraph> {
        let (label, count) = self.component_labels();
        let mut vs = vec![Vec::new(); count];
        for v in self.vertices() {
            vs[label[v.0]].push(v);
        }
        let mut es = vec![Vec::new(); count];
        for e in self.edges() {
            es[label[self.endpoints[e.0][0].0]].push(e);
        }
        vs.iter()
            .zip(&es)
            .map(|(v, e)| self.subgraph(v, e))
            .collect()
    }

    /// Sorted list of normalised endpoint pairs; equal iff the graphs have
    /// identical edge multisets on the same vertex ids.
    pub fn endpoint_multiset(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = self
            .endpoints
            .iter()
            .map(|&[a, b]| (a.0.min(b.0), a.0.max(b.0)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    /// Normalised endpoint pair per edge id.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.endpoints
            .iter()
            .map(|&[a, b]| (a.0.min(b.0), a.0.max(b.0)))
            .collect()
    }

    /// Same vertex count and same endpoints for every edge id.
    pub fn same_labelled(&self, other: &MultiGraph) -> bool {
        self.n() == other.n() && self.edge_list() == other.edge_list()
    }

    /// Disjoint union; `other`'s ids are offset by `self.n()` and `self.m()`.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let mut g = self.clone();
        let offset = g.n();
        for _ in 0..other.n() {
            g.add_vertex();
        }
        for &[a, b] in &other.endpoints {
            g.add_edge(VertexId(a.0 + offset), VertexId(b.0 + offset))
                .expect("valid edge");
        }
        g
    }

    // Raw mutators used by operators that rewire graphs in place. They keep
    // the incidence lists consistent with the endpoint table.

    pub(crate) fn set_endpoints(&mut self, e: EdgeId, u: VertexId, v: VertexId) {
        debug_assert_ne!(u, v);
        let [a, b] = self.endpoints[e.0];
        detach(&mut self.incidence[a.0], e);
        detach(&mut self.incidence[b.0], e);
        self.endpoints[e.0] = [u, v];
        self.incidence[u.0].push(e);
        self.incidence[v.0].push(e);
    }

    /// Moves endpoint `from` of `e` to `to`.
    pub(crate) fn move_endpoint(&mut self, e: EdgeId, from: VertexId, to: VertexId) {
        let other = self.opposite(e, from);
        self.set_endpoints(e, other, to);
    }

    /// Appends a copy of `v` and moves every edge at `v` selected by `moved`
    /// over to it. Linear in the degree of `v`.
    pub(crate) fn split_off(
        &mut self,
        v: VertexId,
        mut moved: impl FnMut(EdgeId) -> bool,
    ) -> VertexId {
        let copy = self.add_vertex();
        let (go, stay): (Vec<EdgeId>, Vec<EdgeId>) =
            std::mem::take(&mut self.incidence[v.0]).into_iter().partition(|&e| moved(e));
        for &e in &go {
            let ends = &mut self.endpoints[e.0];
            let slot = if ends[0] == v { 0 } else { 1 };
            ends[slot] = copy;
        }
        self.incidence[v.0] = stay;
        self.incidence[copy.0] = go;
        copy
    }

    /// Removes the last edge.
    pub(crate) fn pop_edge(&mut self) -> Option<(VertexId, VertexId)> {
        let [a, b] = self.endpoints.pop()?;
        let e = EdgeId(self.endpoints.len());
        detach(&mut self.incidence[a.0], e);
        detach(&mut self.incidence[b.0], e);
        Some((a, b))
    }

    /// Removes the last vertex, which must be isolated.
    pub(crate) fn pop_isolated_vertex(&mut self) {
        let last = self.incidence.pop();
        debug_assert!(last.is_some_and(|inc| inc.is_empty()));
    }
}

fn detach(list: &mut Vec<EdgeId>, e: EdgeId) {
    if let Some(pos) = list.iter().position(|&x| x == e) {
        list.remove(pos);
    }
}
