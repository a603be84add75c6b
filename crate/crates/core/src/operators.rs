//! The binary identification operators `∨`, `≎`, `⊻` and their inverses.
//!
//! The forward operators take two independent graphs. The inverse steps work
//! inside a single graph that is a disjoint union of parts: they split one
//! part into two and return an [`OperatorApplication`] describing the
//! identification that undoes the split. Splits keep every existing id and
//! append new vertices/edges at the end, so replaying records in reverse
//! order restores the original graph with identical ids.

use std::fmt;
use std::str::FromStr;

use crate::connectivity::{self, reach_avoiding};
use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};
use crate::oracle::is_treewidth_at_most_2;

/// Where each element of one operand ended up in the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperandMap {
    pub vertices: Vec<VertexId>,
    /// `None` for the operand edge consumed by the operator.
    pub edges: Vec<Option<EdgeId>>,
}

#[derive(Debug, Clone)]
pub struct Identified {
    pub graph: MultiGraph,
    pub first: OperandMap,
    pub second: OperandMap,
}

fn check_endpoint(g: &MultiGraph, e: EdgeId, u: VertexId) -> Result<VertexId> {
    g.check_edge(e)?;
    g.check_vertex(u)?;
    let (a, b) = g.endpoints(e);
    if u == a {
        Ok(b)
    } else if u == b {
        Ok(a)
    } else {
        Err(Error::NotAnEndpoint {
            vertex: u.0,
            edge: e.0,
        })
    }
}

fn identity_map(g: &MultiGraph) -> OperandMap {
    OperandMap {
        vertices: g.vertices().collect(),
        edges: g.edges().map(Some).collect(),
    }
}

/// `(g1, u1) ∨ (g2, u2)`: glue the two graphs at `u1 = u2`.
///
/// `g1` keeps its ids. `g2`'s vertices other than `u2` follow at `n1..`, its
/// edges at `m1..`.
pub fn vertex_identification(
    g1: &MultiGraph,
    u1: VertexId,
    g2: &MultiGraph,
    u2: VertexId,
) -> Result<Identified> {
    g1.check_vertex(u1)?;
    g2.check_vertex(u2)?;
    let n1 = g1.n();
    let vertices: Vec<VertexId> = g2
        .vertices()
        .map(|w| match w.cmp(&u2) {
            std::cmp::Ordering::Equal => u1,
            std::cmp::Ordering::Less => VertexId(n1 + w.0),
            std::cmp::Ordering::Greater => VertexId(n1 + w.0 - 1),
        })
        .collect();
    let mut g = g1.clone();
    for _ in 1..g2.n() {
        g.add_vertex();
    }
    let edges = g2
        .edges()
        .map(|e| {
            let (a, b) = g2.endpoints(e);
            Some(g.add_edge(vertices[a.0], vertices[b.0]).expect("mapped edge"))
        })
        .collect();
    Ok(Identified {
        first: identity_map(g1),
        second: OperandMap { vertices, edges },
        graph: g,
    })
}

/// `(g1, e1, u1) ≎ (g2, e2, u2)`: delete `e1 = u1v1` and `e2 = u2v2`, then add
/// `u1u2` and `v1v2`.
///
/// `u1u2` takes over the id of `e1`; `v1v2` takes over the slot of `e2`
/// (offset by `m1`). So `n = n1 + n2` and `m = m1 + m2`.
pub fn edge_identification(
    g1: &MultiGraph,
    e1: EdgeId,
    u1: VertexId,
    g2: &MultiGraph,
    e2: EdgeId,
    u2: VertexId,
) -> Result<Identified> {
    let v1 = check_endpoint(g1, e1, u1)?;
    let v2 = check_endpoint(g2, e2, u2)?;
    let n1 = g1.n();
    let m1 = g1.m();
    let mut g = g1.disjoint_union(g2);
    let shift = |w: VertexId| VertexId(w.0 + n1);
    g.set_endpoints(e1, u1, shift(u2));
    g.set_endpoints(EdgeId(m1 + e2.0), v1, shift(v2));
    let mut first = identity_map(g1);
    first.edges[e1.0] = None;
    let mut second = OperandMap {
        vertices: g2.vertices().map(shift).collect(),
        edges: g2.edges().map(|e| Some(EdgeId(m1 + e.0))).collect(),
    };
    second.edges[e2.0] = None;
    Ok(Identified {
        graph: g,
        first,
        second,
    })
}

/// `(g1, e1, u1) ⊻ (g2, e2, u2)`: delete `e1 = u1v1` and `e2 = u2v2`, identify
/// `v1` with `v2`, and add `u1u2`.
///
/// The merged vertex keeps the id of `v1`; `u1u2` takes over the id of `e1`.
/// `g2`'s remaining vertices and edges follow in order, so
/// `n = n1 + n2 - 1` and `m = m1 + m2 - 1`.
pub fn vertex_edge_identification(
    g1: &MultiGraph,
    e1: EdgeId,
    u1: VertexId,
    g2: &MultiGraph,
    e2: EdgeId,
    u2: VertexId,
) -> Result<Identified> {
    let v1 = check_endpoint(g1, e1, u1)?;
    let v2 = check_endpoint(g2, e2, u2)?;
    let n1 = g1.n();
    let m1 = g1.m();
    let vertices: Vec<VertexId> = g2
        .vertices()
        .map(|w| match w.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => VertexId(n1 + w.0),
            std::cmp::Ordering::Greater => VertexId(n1 + w.0 - 1),
        })
        .collect();
    let mut g = g1.clone();
    for _ in 1..g2.n() {
        g.add_vertex();
    }
    g.set_endpoints(e1, u1, vertices[u2.0]);
    let mut edges = Vec::with_capacity(g2.m());
    for e in g2.edges() {
        if e == e2 {
            edges.push(None);
            continue;
        }
        let (a, b) = g2.endpoints(e);
        edges.push(Some(
            g.add_edge(vertices[a.0], vertices[b.0]).expect("mapped edge"),
        ));
    }
    debug_assert_eq!(g.m(), m1 + g2.m() - 1);
    let mut first = identity_map(g1);
    first.edges[e1.0] = None;
    Ok(Identified {
        graph: g,
        first,
        second: OperandMap { vertices, edges },
    })
}

/// Smaller endpoint of `e`; the anchor used by the convenience wrappers.
pub fn smaller_endpoint(g: &MultiGraph, e: EdgeId) -> VertexId {
    let (a, b) = g.endpoints(e);
    a.min(b)
}

/// `≎` anchored at the smaller endpoint of each edge.
pub fn edge_identification_at(
    g1: &MultiGraph,
    e1: EdgeId,
    g2: &MultiGraph,
    e2: EdgeId,
) -> Result<Identified> {
    g1.check_edge(e1)?;
    g2.check_edge(e2)?;
    edge_identification(g1, e1, smaller_endpoint(g1, e1), g2, e2, smaller_endpoint(g2, e2))
}

/// `⊻` anchored at the smaller endpoint of each edge.
pub fn vertex_edge_identification_at(
    g1: &MultiGraph,
    e1: EdgeId,
    g2: &MultiGraph,
    e2: EdgeId,
) -> Result<Identified> {
    g1.check_edge(e1)?;
    g2.check_edge(e2)?;
    vertex_edge_identification(g1, e1, smaller_endpoint(g1, e1), g2, e2, smaller_endpoint(g2, e2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    VertexIdent,
    EdgeIdent,
    VertexEdgeIdent,
}

/// A vertex `v` and an edge `e` of the same part whose joint removal
/// disconnects that part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VeSeparator {
    pub vertex: VertexId,
    pub edge: EdgeId,
}

/// One identification recorded against a split graph.
///
/// Each variant describes the state *after* the split; [`reidentify`]
/// performs the identification and restores the state before it.
///
/// [`reidentify`]: OperatorApplication::reidentify
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorApplication {
    /// `v` was split into `v` and the appended vertex `copy`.
    VertexIdent { vertex: VertexId, copy: VertexId },
    /// `first` now joins `a1-a2` and `second` joins `b1-b2`; before the split
    /// they joined `a1-b1` and `a2-b2`.
    EdgeIdent {
        first: EdgeId,
        second: EdgeId,
        a1: VertexId,
        a2: VertexId,
        b1: VertexId,
        b2: VertexId,
    },
    /// `vertex` was split off into the appended `copy`, and `edge = u1u2` was
    /// replaced by `edge = u1 vertex` plus the appended `new_edge = u2 copy`.
    VertexEdgeIdent {
        vertex: VertexId,
        edge: EdgeId,
        copy: VertexId,
        new_edge: EdgeId,
    },
}

impl OperatorApplication {
    pub fn kind(&self) -> OperatorKind {
        match self {
            OperatorApplication::VertexIdent { .. } => OperatorKind::VertexIdent,
            OperatorApplication::EdgeIdent { .. } => OperatorKind::EdgeIdent,
            OperatorApplication::VertexEdgeIdent { .. } => OperatorKind::VertexEdgeIdent,
        }
    }

    /// Applies the recorded identification to the two parts of `g`.
    ///
    /// Records must be replayed in reverse order of creation: the appended
    /// vertex and edge have to be the last ones of `g`.
    pub fn reidentify(&self, g: &mut MultiGraph) -> Result<()> {
        let stale = || Error::PreconditionViolated("record does not match graph".into());
        match *self {
            OperatorApplication::VertexIdent { vertex, copy } => {
                if copy.0 + 1 != g.n() || vertex.0 >= copy.0 {
                    return Err(stale());
                }
                for e in g.incident(copy).to_vec() {
                    g.move_endpoint(e, copy, vertex);
                }
                g.pop_isolated_vertex();
            }
            OperatorApplication::EdgeIdent {
                first,
                second,
                a1,
                a2,
                b1,
                b2,
            } => {
                g.check_edge(first)?;
                g.check_edge(second)?;
                let norm = |(x, y): (VertexId, VertexId)| (x.min(y), x.max(y));
                if norm(g.endpoints(first)) != norm((a1, a2))
                    || norm(g.endpoints(second)) != norm((b1, b2))
                {
                    return Err(stale());
                }
                g.set_endpoints(first, a1, b1);
                g.set_endpoints(second, a2, b2);
            }
            OperatorApplication::VertexEdgeIdent {
                vertex,
                edge,
                copy,
                new_edge,
            } => {
                if copy.0 + 1 != g.n() || new_edge.0 + 1 != g.m() || edge.0 >= new_edge.0 {
                    return Err(stale());
                }
                let (x, y) = g.endpoints(edge);
                if x != vertex && y != vertex {
                    return Err(stale());
                }
                let u1 = g.opposite(edge, vertex);
                let (x, y) = g.endpoints(new_edge);
                if x != copy && y != copy {
                    return Err(stale());
                }
                let u2 = g.opposite(new_edge, copy);
                g.pop_edge();
                g.set_endpoints(edge, u1, u2);
                for e in g.incident(copy).to_vec() {
                    g.move_endpoint(e, copy, vertex);
                }
                g.pop_isolated_vertex();
            }
        }
        Ok(())
    }
}

/// Trace lines:
///
/// ```text
/// VI <v> -> <v> <copy>
/// EI <first> <second> -> <a1>-<a2> <b1>-<b2>
/// VE <v> <e> -> <v>/<e> <copy>/<new_edge>
/// ```
impl fmt::Display for OperatorApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorApplication::VertexIdent { vertex, copy } => {
                write!(f, "VI {vertex} -> {vertex} {copy}")
            }
            OperatorApplication::EdgeIdent {
                first,
                second,
                a1,
                a2,
                b1,
                b2,
            } => write!(f, "EI {first} {second} -> {a1}-{a2} {b1}-{b2}"),
            OperatorApplication::VertexEdgeIdent {
                vertex,
                edge,
                copy,
                new_edge,
            } => write!(f, "VE {vertex} {edge} -> {vertex}/{edge} {copy}/{new_edge}"),
        }
    }
}

impl FromStr for OperatorApplication {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || format!("malformed trace line `{s}`");
        let toks: Vec<&str> = s.split_ascii_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let pair = |t: &str, sep: char| -> std::result::Result<(usize, usize), String> {
            let (a, b) = t.split_once(sep).ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        match toks.as_slice() {
            ["VI", v, "->", v1, copy] => {
                let vertex = VertexId(num(v)?);
                if num(v1)? != vertex.0 {
                    return Err(bad());
                }
                Ok(OperatorApplication::VertexIdent {
                    vertex,
                    copy: VertexId(num(copy)?),
                })
            }
            ["EI", e1, e2, "->", a, b] => {
                let (a1, a2) = pair(a, '-')?;
                let (b1, b2) = pair(b, '-')?;
                Ok(OperatorApplication::EdgeIdent {
                    first: EdgeId(num(e1)?),
                    second: EdgeId(num(e2)?),
                    a1: VertexId(a1),
                    a2: VertexId(a2),
                    b1: VertexId(b1),
                    b2: VertexId(b2),
                })
            }
            ["VE", v, e, "->", left, right] => {
                let (vertex, edge) = (num(v)?, num(e)?);
                if pair(left, '/')? != (vertex, edge) {
                    return Err(bad());
                }
                let (copy, new_edge) = pair(right, '/')?;
                Ok(OperatorApplication::VertexEdgeIdent {
                    vertex: VertexId(vertex),
                    edge: EdgeId(edge),
                    copy: VertexId(copy),
                    new_edge: EdgeId(new_edge),
                })
            }
            _ => Err(bad()),
        }
    }
}

/// The smallest bridge of `(component of v) - v`, if any.
///
/// This is the naive route: it materialises `g - v` and runs a full bridge
/// search on it.
pub fn bridge_after_removing(g: &MultiGraph, v: VertexId) -> Result<Option<EdgeId>> {
    let (h, relabel) = g.remove_vertex(v)?;
    let (label, _) = g.component_labels();
    let mut back = vec![EdgeId(0); h.m()];
    for (old, new) in relabel.edges.iter().enumerate() {
        if let Some(new) = new {
            back[new.0] = EdgeId(old);
        }
    }
    Ok(connectivity::bridges(&h)
        .into_iter()
        .map(|e| back[e.0])
        .find(|&e| label[g.endpoints(e).0 .0] == label[v.0]))
}

/// Scans vertices in increasing id order and returns the first vertex-edge
/// separator found, pairing each vertex with the smallest bridge of `g - v`.
pub fn find_ve_separator(g: &MultiGraph) -> Result<Option<VeSeparator>> {
    if !connectivity::is_biconnected(g) {
        return Err(Error::NotBiconnected);
    }
    for v in g.vertices() {
        if let Some(edge) = bridge_after_removing(g, v)? {
            return Ok(Some(VeSeparator { vertex: v, edge }));
        }
    }
    Ok(None)
}

/// Replaces the part `H` containing `s.vertex` by `H1 ∪ H2` with
/// `H = H1 ⊻ H2`.
///
/// With `e = u1u2`: the copy of `v` on the side of `v`'s smallest neighbour
/// keeps the id `v`, the other copy is appended. `e` becomes `u1 v` and the
/// appended edge is `u2 copy`, where `u1` lies on the side that kept `v`.
pub fn ve_separation_step(
    g: &MultiGraph,
    s: VeSeparator,
) -> Result<(MultiGraph, OperatorApplication)> {
    let VeSeparator { vertex: v, edge: e } = s;
    g.check_vertex(v)?;
    g.check_edge(e)?;
    let not_sep = || Error::NotASeparator {
        vertex: v.0,
        edge: e.0,
    };
    let (x, y) = g.endpoints(e);
    if x == v || y == v {
        return Err(not_sep());
    }
    let from_x = reach_avoiding(g, x, Some(v), &[e]);
    if from_x[y.0] {
        return Err(not_sep());
    }
    let from_y = reach_avoiding(g, y, Some(v), &[e]);
    let neighbours = g.neighbours(v)?;
    if neighbours.iter().any(|w| !from_x[w.0] && !from_y[w.0]) {
        // a third piece hanging off v: v was already a cut vertex
        return Err(Error::NotBiconnected);
    }
    let first = *neighbours.iter().next().ok_or_else(not_sep)?;
    let (kept, moved, u1, u2) = if from_x[first.0] {
        (&from_x, &from_y, x, y)
    } else {
        (&from_y, &from_x, y, x)
    };
    if !neighbours.iter().any(|w| moved[w.0]) || !neighbours.iter().any(|w| kept[w.0]) {
        return Err(not_sep());
    }
    let mut out = g.clone();
    let copy = out.add_vertex();
    for &f in g.incident(v) {
        if moved[g.opposite(f, v).0] {
            out.move_endpoint(f, v, copy);
        }
    }
    out.set_endpoints(e, u1, v);
    let new_edge = out.add_edge(u2, copy)?;
    Ok((
        out,
        OperatorApplication::VertexEdgeIdent {
            vertex: v,
            edge: e,
            copy,
            new_edge,
        },
    ))
}

/// Every pair `{e1, e2}` (with `e1 < e2`) of edges with four distinct
/// endpoints whose removal disconnects the component containing them.
pub fn disjoint_two_cuts(g: &MultiGraph) -> Vec<(EdgeId, EdgeId)> {
    let mut out = Vec::new();
    for e1 in g.edges() {
        let (a, b) = g.endpoints(e1);
        for e2 in g.edges().skip(e1.0 + 1) {
            let (c, d) = g.endpoints(e2);
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !reach_avoiding(g, a, None, &[e1, e2])[b.0] {
                out.push((e1, e2));
            }
        }
    }
    out
}

/// A 2-cut whose two edges share no endpoint, or `None` when `g` is a closed
/// necklace.
///
/// Requires `g` to be biconnected, 4-regular and of treewidth at most 2.
/// Exhaustive pair scan; the first pair in lexicographic id order wins.
pub fn find_disjoint_two_cut(g: &MultiGraph) -> Result<Option<(EdgeId, EdgeId)>> {
    if !connectivity::is_biconnected(g) {
        return Err(Error::PreconditionViolated("graph is not biconnected".into()));
    }
    if g.vertices().any(|v| g.incident(v).len() != 4) {
        return Err(Error::PreconditionViolated("graph is not 4-regular".into()));
    }
    if !is_treewidth_at_most_2(g) {
        return Err(Error::PreconditionViolated("treewidth exceeds 2".into()));
    }
    Ok(disjoint_two_cuts(g).into_iter().next())
}

/// Replaces the part containing the 2-cut `{e1, e2}` by `G1 ∪ G2` with
/// `part = G1 ≎ G2`.
///
/// With `e1 = a1b1`, `e2 = a2b2` and `a1, a2` on the same side, `e1` becomes
/// `a1a2` and `e2` becomes `b1b2`. Ids and counts are unchanged.
pub fn edge_separation_step(
    g: &MultiGraph,
    cut: (EdgeId, EdgeId),
) -> Result<(MultiGraph, OperatorApplication)> {
    let (e1, e2) = cut;
    g.check_edge(e1)?;
    g.check_edge(e2)?;
    let (a1, b1) = g.endpoints(e1);
    let (x, y) = g.endpoints(e2);
    if e1 == e2 || a1 == x || a1 == y || b1 == x || b1 == y {
        return Err(Error::SharedEndpoint(e1.0, e2.0));
    }
    let side = reach_avoiding(g, a1, None, &[e1, e2]);
    if side[b1.0] || side[x.0] == side[y.0] {
        return Err(Error::NotATwoCut(e1.0, e2.0));
    }
    let other = reach_avoiding(g, b1, None, &[e1, e2]);
    let (a2, b2) = if side[x.0] { (x, y) } else { (y, x) };
    if !other[b2.0] {
        return Err(Error::NotATwoCut(e1.0, e2.0));
    }
    let mut out = g.clone();
    out.set_endpoints(e1, a1, a2);
    out.set_endpoints(e2, b1, b2);
    Ok((
        out,
        OperatorApplication::EdgeIdent {
            first: e1,
            second: e2,
            a1,
            a2,
            b1,
            b2,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{find_cut_edge, is_biconnected, split_at_cut_vertex};
    use crate::generators::{gen_closed_necklace, gen_cycle};

    fn graph(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
        MultiGraph::from_edges(n, edges).unwrap()
    }

    fn necklace2() -> MultiGraph {
        gen_closed_necklace(2).unwrap()
    }

    /// Every `(v, e)` with `e` not at `v`, checked by plain reachability.
    fn all_separators(g: &MultiGraph) -> Vec<(VertexId, EdgeId)> {
        let mut out = Vec::new();
        for v in g.vertices() {
            for e in g.edges() {
                let (a, b) = g.endpoints(e);
                if a == v || b == v {
                    continue;
                }
                if !reach_avoiding(g, a, Some(v), &[e])[b.0] {
                    out.push((v, e));
                }
            }
        }
        out
    }

    fn k5() -> MultiGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j));
            }
        }
        graph(5, &edges)
    }

    #[test]
    fn vertex_identification_of_triangles_is_bowtie() {
        let c3 = gen_cycle(3).unwrap();
        let r = vertex_identification(&c3, VertexId(1), &c3, VertexId(2)).unwrap();
        assert_eq!((r.graph.n(), r.graph.m()), (5, 6));
        assert_eq!(
            crate::connectivity::cut_vertices(&r.graph).into_iter().collect::<Vec<_>>(),
            vec![VertexId(1)]
        );
        assert_eq!(r.second.vertices[2], VertexId(1));
    }

    #[test]
    fn vertex_identification_with_k1() {
        let c3 = gen_cycle(3).unwrap();
        let r = vertex_identification(&MultiGraph::new(1), VertexId(0), &c3, VertexId(0)).unwrap();
        assert_eq!(r.graph.endpoint_multiset(), c3.endpoint_multiset());
        assert_eq!(
            vertex_identification(&c3, VertexId(3), &c3, VertexId(0)).unwrap_err(),
            Error::InvalidVertex(3)
        );
    }

    #[test]
    fn edge_identification_of_triangles_is_c6() {
        let c3 = gen_cycle(3).unwrap();
        let r = edge_identification(&c3, EdgeId(0), VertexId(0), &c3, EdgeId(0), VertexId(0))
            .unwrap();
        let g = r.graph;
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!(g.is_connected());
        assert!(g.vertices().all(|v| g.degree(v) == Ok(2)));
    }

    #[test]
    fn edge_identification_of_necklaces() {
        let n2 = necklace2();
        let r = edge_identification_at(&n2, EdgeId(0), &n2, EdgeId(0)).unwrap();
        let g = r.graph;
        assert_eq!((g.n(), g.m()), (4, 8));
        assert!(is_biconnected(&g));
        assert!(g.vertices().all(|v| g.degree(v) == Ok(4)));
    }

    #[test]
    fn edge_identification_requires_endpoint() {
        let c3 = gen_cycle(3).unwrap();
        assert_eq!(
            edge_identification(&c3, EdgeId(0), VertexId(2), &c3, EdgeId(0), VertexId(0))
                .unwrap_err(),
            Error::NotAnEndpoint { vertex: 2, edge: 0 }
        );
    }

    #[test]
    fn vertex_edge_identification_of_triangles_is_c5() {
        let c3 = gen_cycle(3).unwrap();
        let r = vertex_edge_identification_at(&c3, EdgeId(0), &c3, EdgeId(0)).unwrap();
        let g = r.graph;
        assert_eq!((g.n(), g.m()), (5, 5));
        assert!(g.is_connected());
        assert!(g.vertices().all(|v| g.degree(v) == Ok(2)));
        assert_eq!(r.first.edges[0], None);
        assert_eq!(r.second.edges[0], None);
    }

    #[test]
    fn vertex_edge_identification_of_necklaces() {
        let n2 = necklace2();
        let r = vertex_edge_identification_at(&n2, EdgeId(0), &n2, EdgeId(0)).unwrap();
        assert_eq!((r.graph.n(), r.graph.m()), (3, 7));
        assert!(is_biconnected(&r.graph));
    }

    #[test]
    fn vertex_edge_identification_keeps_bridges() {
        let path = graph(3, &[(0, 1), (1, 2)]);
        let c3 = gen_cycle(3).unwrap();
        for e1 in path.edges() {
            let r = vertex_edge_identification_at(&path, e1, &c3, EdgeId(1)).unwrap();
            assert!(find_cut_edge(&r.graph).is_some());
        }
    }

    #[test]
    fn separator_search_examples() {
        let c3 = gen_cycle(3).unwrap();
        let c5 = vertex_edge_identification_at(&c3, EdgeId(0), &c3, EdgeId(0))
            .unwrap()
            .graph;
        let s = find_ve_separator(&c5).unwrap().unwrap();
        assert!(all_separators(&c5).contains(&(s.vertex, s.edge)));
        for n in 4..8 {
            assert!(find_ve_separator(&gen_cycle(n).unwrap()).unwrap().is_some());
        }
        assert_eq!(find_ve_separator(&necklace2()), Ok(None));
        assert!(all_separators(&k5()).is_empty());
        assert_eq!(find_ve_separator(&k5()), Ok(None));
        let bowtie = graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert_eq!(find_ve_separator(&bowtie), Err(Error::NotBiconnected));
    }

    #[test]
    fn ve_separation_inverts_c5() {
        let c3 = gen_cycle(3).unwrap();
        let c5 = vertex_edge_identification_at(&c3, EdgeId(0), &c3, EdgeId(0))
            .unwrap()
            .graph;
        // pair a vertex with the edge opposite to it
        let v = VertexId(0);
        let nb = c5.neighbours(v).unwrap();
        let edge = c5
            .edges()
            .find(|&e| {
                let (a, b) = c5.endpoints(e);
                ![a, b].iter().any(|x| *x == v || nb.contains(x))
            })
            .unwrap();
        let s = VeSeparator { vertex: v, edge };
        let (h, record) = ve_separation_step(&c5, s).unwrap();
        assert_eq!((h.n(), h.m()), (6, 6));
        let comps = h.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.graph.n() == 3 && c.graph.m() == 3));
        let mut back = h.clone();
        record.reidentify(&mut back).unwrap();
        assert!(back.same_labelled(&c5));
    }

    #[test]
    fn ve_separation_inverts_necklace_construction() {
        let n2 = necklace2();
        let g = vertex_edge_identification_at(&n2, EdgeId(0), &n2, EdgeId(0))
            .unwrap()
            .graph;
        let s = find_ve_separator(&g).unwrap().unwrap();
        let (h, _) = ve_separation_step(&g, s).unwrap();
        let comps = h.components();
        assert_eq!(comps.len(), 2);
        for c in comps {
            assert_eq!(c.graph.endpoint_multiset(), n2.endpoint_multiset());
        }
    }

    #[test]
    fn ve_separation_rejects_non_separators() {
        let c5 = gen_cycle(5).unwrap();
        // edge 0 = 0-1 touches vertex 0
        assert_eq!(
            ve_separation_step(&c5, VeSeparator { vertex: VertexId(0), edge: EdgeId(0) }),
            Err(Error::NotASeparator { vertex: 0, edge: 0 })
        );
        let k = k5();
        assert!(matches!(
            ve_separation_step(&k, VeSeparator { vertex: VertexId(0), edge: EdgeId(9) }),
            Err(Error::NotASeparator { .. })
        ));
    }

    #[test]
    fn ve_separation_matches_two_operand_identification() {
        let c3 = gen_cycle(3).unwrap();
        let c4 = gen_cycle(4).unwrap();
        let r = vertex_edge_identification(&c4, EdgeId(1), VertexId(1), &c3, EdgeId(2), VertexId(2))
            .unwrap();
        let g = r.graph;
        let merged = r.first.vertices[2];
        let joining = EdgeId(1);
        let (h, rec) = ve_separation_step(&g, VeSeparator { vertex: merged, edge: joining }).unwrap();
        let mut sorted: Vec<_> = h
            .components()
            .into_iter()
            .map(|c| (c.graph.n(), c.graph.m()))
            .collect();
        sorted.sort();
        assert_eq!(sorted, vec![(3, 3), (4, 4)]);
        let mut back = h;
        rec.reidentify(&mut back).unwrap();
        assert!(back.same_labelled(&g));
    }

    #[test]
    fn two_cut_examples() {
        assert_eq!(find_disjoint_two_cut(&gen_closed_necklace(3).unwrap()), Ok(None));
        assert_eq!(find_disjoint_two_cut(&necklace2()), Ok(None));
        let n2 = necklace2();
        let g = edge_identification_at(&n2, EdgeId(0), &n2, EdgeId(0)).unwrap().graph;
        // ids 0 and 4 are the two crossing edges added by the operator
        let cut = find_disjoint_two_cut(&g).unwrap().unwrap();
        assert_eq!(cut, (EdgeId(0), EdgeId(4)));
        assert!(matches!(
            find_disjoint_two_cut(&k5()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn edge_separation_examples() {
        let n2 = necklace2();
        let g = edge_identification_at(&n2, EdgeId(0), &n2, EdgeId(0)).unwrap().graph;
        let (h, rec) = edge_separation_step(&g, (EdgeId(0), EdgeId(4))).unwrap();
        for c in h.components() {
            assert_eq!(c.graph.endpoint_multiset(), n2.endpoint_multiset());
        }
        let mut back = h;
        rec.reidentify(&mut back).unwrap();
        assert!(back.same_labelled(&g));

        let c6 = gen_cycle(6).unwrap();
        let (h, _) = edge_separation_step(&c6, (EdgeId(0), EdgeId(3))).unwrap();
        let comps = h.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.graph.n() == 3 && c.graph.m() == 3));

        assert_eq!(
            edge_separation_step(&c6, (EdgeId(0), EdgeId(1))).unwrap_err(),
            Error::SharedEndpoint(0, 1)
        );
        let k = k5();
        assert!(matches!(
            edge_separation_step(&k, (EdgeId(0), EdgeId(9))),
            Err(Error::NotATwoCut(0, 9))
        ));
    }

    #[test]
    fn split_then_identify_restores_graph() {
        let bowtie = graph(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        let (mut h, v1, v2) = split_at_cut_vertex(&bowtie, VertexId(0)).unwrap();
        let rec = OperatorApplication::VertexIdent { vertex: v1, copy: v2 };
        rec.reidentify(&mut h).unwrap();
        assert!(h.same_labelled(&bowtie));
    }

    #[test]
    fn trace_lines_round_trip() {
        let records = [
            OperatorApplication::VertexIdent {
                vertex: VertexId(3),
                copy: VertexId(9),
            },
            OperatorApplication::EdgeIdent {
                first: EdgeId(1),
                second: EdgeId(5),
                a1: VertexId(0),
                a2: VertexId(2),
                b1: VertexId(1),
                b2: VertexId(3),
            },
            OperatorApplication::VertexEdgeIdent {
                vertex: VertexId(2),
                edge: EdgeId(4),
                copy: VertexId(7),
                new_edge: EdgeId(11),
            },
        ];
        for r in records {
            let line = r.to_string();
            assert_eq!(line.parse::<OperatorApplication>(), Ok(r));
        }
        assert_eq!(records[2].to_string(), "VE 2 4 -> 2/4 7/11");
        assert!("VE 2 4 -> 3/4 7/11".parse::<OperatorApplication>().is_err());
        assert!("XX 1".parse::<OperatorApplication>().is_err());
    }
}
