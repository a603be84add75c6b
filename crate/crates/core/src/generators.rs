//! Deterministic and seeded constructors for the graph families used in
//! tests, corpora and benchmarks.
//!
//! The recursive families also return a [`ConstructionScript`] that rebuilds
//! the graph exactly, ids included.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, MultiGraph, VertexId};
use crate::operators::{edge_identification, vertex_edge_identification, vertex_identification};
use crate::rng::Rng;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParam(msg.into())
}

/// Two vertices joined by `2k` parallel edges.
pub fn gen_eulerian_multiedge(k: usize) -> Result<MultiGraph> {
    if k == 0 {
        return Err(invalid("multiedge needs k >= 1"));
    }
    MultiGraph::from_edges(2, &vec![(0, 1); 2 * k])
}

/// The cycle `0, 1, ..., k-1` with every edge doubled. Edges `2i` and `2i+1`
/// join `i` and `i+1 mod k`.
pub fn gen_closed_necklace(k: usize) -> Result<MultiGraph> {
    if k < 2 {
        return Err(invalid("necklace needs k >= 2"));
    }
    let edges: Vec<_> = (0..k).flat_map(|i| [(i, (i + 1) % k); 2]).collect();
    MultiGraph::from_edges(k, &edges)
}

/// The cycle `0, 1, ..., k-1`; edge `i` joins `i` and `i+1 mod k`. `k = 2`
/// gives a pair of parallel edges.
pub fn gen_cycle(k: usize) -> Result<MultiGraph> {
    if k < 2 {
        return Err(invalid("cycle needs k >= 2"));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    MultiGraph::from_edges(k, &edges)
}

/// Replaces `e = ab` by `a x` (keeping the id) and the appended edge `x b`,
/// where `x` is a new vertex.
pub fn subdivide(g: &mut MultiGraph, e: EdgeId) -> Result<VertexId> {
    g.check_edge(e)?;
    let (a, b) = g.endpoints(e);
    let x = g.add_vertex();
    g.set_endpoints(e, a, x);
    g.add_edge(x, b)?;
    Ok(x)
}

/// Adds a cycle through `len` distinct random vertices of `g`.
pub fn add_random_cycle(g: &mut MultiGraph, len: usize, rng: &mut Rng) -> Result<Vec<VertexId>> {
    if len < 2 || len > g.n() {
        return Err(invalid(format!("cycle length {len} on {} vertices", g.n())));
    }
    let mut all: Vec<VertexId> = g.vertices().collect();
    rng.shuffle(&mut all);
    all.truncate(len);
    add_cycle(g, &all)?;
    Ok(all)
}

fn add_cycle(g: &mut MultiGraph, vs: &[VertexId]) -> Result<()> {
    for (i, &v) in vs.iter().enumerate() {
        g.add_edge(v, vs[(i + 1) % vs.len()])?;
    }
    Ok(())
}

/// One line of a construction script. Graphs live in numbered slots; binary
/// steps store their result in the first slot and empty the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptStep {
    /// `K`: a single vertex.
    Point,
    /// `G n`: `n` isolated vertices.
    Empty(usize),
    /// `M k`: Eulerian multiedge with `2k` edges.
    Multiedge(usize),
    /// `N k`: closed necklace of length `k`.
    Necklace(usize),
    /// `C k`: cycle of length `k`.
    Cycle(usize),
    /// `V i u j w`: `(slot i, u) ∨ (slot j, w)`.
    VertexIdent { i: usize, u: usize, j: usize, w: usize },
    /// `E i e u j f w`: `(slot i, e, u) ≎ (slot j, f, w)`.
    EdgeIdent { i: usize, e: usize, u: usize, j: usize, f: usize, w: usize },
    /// `X i e u j f w`: `(slot i, e, u) ⊻ (slot j, f, w)`.
    VertexEdgeIdent { i: usize, e: usize, u: usize, j: usize, f: usize, w: usize },
    /// `S i e`: subdivide edge `e` of slot `i`.
    Subdivide { i: usize, e: usize },
    /// `Y i v1 v2 ...`: add a cycle through the listed vertices of slot `i`.
    AddCycle { i: usize, vertices: Vec<usize> },
}

impl fmt::Display for ScriptStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScriptStep::Point => write!(f, "K"),
            ScriptStep::Empty(n) => write!(f, "G {n}"),
            ScriptStep::Multiedge(k) => write!(f, "M {k}"),
            ScriptStep::Necklace(k) => write!(f, "N {k}"),
            ScriptStep::Cycle(k) => write!(f, "C {k}"),
            ScriptStep::VertexIdent { i, u, j, w } => write!(f, "V {i} {u} {j} {w}"),
            ScriptStep::EdgeIdent { i, e, u, j, f: e2, w } => {
                write!(f, "E {i} {e} {u} {j} {e2} {w}")
            }
            ScriptStep::VertexEdgeIdent { i, e, u, j, f: e2, w } => {
                write!(f, "X {i} {e} {u} {j} {e2} {w}")
            }
            ScriptStep::Subdivide { i, e } => write!(f, "S {i} {e}"),
            ScriptStep::AddCycle { i, vertices } => {
                write!(f, "Y {i}")?;
                for v in vertices {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for ScriptStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || invalid(format!("malformed script line `{s}`"));
        let mut toks = s.split_ascii_whitespace();
        let tag = toks.next().ok_or_else(bad)?;
        let nums: Vec<usize> = toks
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let step = match (tag, nums.as_slice()) {
            ("K", []) => ScriptStep::Point,
            ("G", &[n]) => ScriptStep::Empty(n),
            ("M", &[k]) => ScriptStep::Multiedge(k),
            ("N", &[k]) => ScriptStep::Necklace(k),
            ("C", &[k]) => ScriptStep::Cycle(k),
            ("V", &[i, u, j, w]) => ScriptStep::VertexIdent { i, u, j, w },
            ("E", &[i, e, u, j, f, w]) => ScriptStep::EdgeIdent { i, e, u, j, f, w },
            ("X", &[i, e, u, j, f, w]) => ScriptStep::VertexEdgeIdent { i, e, u, j, f, w },
            ("S", &[i, e]) => ScriptStep::Subdivide { i, e },
            ("Y", [i, rest @ ..]) if rest.len() >= 2 => ScriptStep::AddCycle {
                i: *i,
                vertices: rest.to_vec(),
            },
            _ => return Err(bad()),
        };
        Ok(step)
    }
}

/// A replayable recipe for a generated graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstructionScript {
    pub steps: Vec<ScriptStep>,
}

impl fmt::Display for ConstructionScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

impl FromStr for ConstructionScript {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<_>>()?;
        Ok(ConstructionScript { steps })
    }
}

/// Slot machine shared by replay and the generators, so both produce the
/// same ids.
#[derive(Default)]
struct Slots {
    graphs: Vec<Option<MultiGraph>>,
}

impl Slots {
    fn get(&self, i: usize) -> Result<&MultiGraph> {
        self.graphs
            .get(i)
            .and_then(Option::as_ref)
            .ok_or_else(|| invalid(format!("slot {i} is empty")))
    }

    fn take_pair(&mut self, i: usize, j: usize) -> Result<(MultiGraph, MultiGraph)> {
        if i == j {
            return Err(invalid("binary step on a single slot"));
        }
        self.get(i)?;
        self.get(j)?;
        Ok((
            self.graphs[i].take().expect("checked"),
            self.graphs[j].take().expect("checked"),
        ))
    }

    fn apply(&mut self, step: &ScriptStep) -> Result<()> {
        let vid = VertexId;
        let eid = EdgeId;
        match *step {
            ScriptStep::Point => self.graphs.push(Some(MultiGraph::new(1))),
            ScriptStep::Empty(n) => self.graphs.push(Some(MultiGraph::new(n))),
            ScriptStep::Multiedge(k) => self.graphs.push(Some(gen_eulerian_multiedge(k)?)),
            ScriptStep::Necklace(k) => self.graphs.push(Some(gen_closed_necklace(k)?)),
            ScriptStep::Cycle(k) => self.graphs.push(Some(gen_cycle(k)?)),
            ScriptStep::VertexIdent { i, u, j, w } => {
                let (a, b) = self.take_pair(i, j)?;
                self.graphs[i] = Some(vertex_identification(&a, vid(u), &b, vid(w))?.graph);
            }
            ScriptStep::EdgeIdent { i, e, u, j, f, w } => {
                let (a, b) = self.take_pair(i, j)?;
                self.graphs[i] =
                    Some(edge_identification(&a, eid(e), vid(u), &b, eid(f), vid(w))?.graph);
            }
            ScriptStep::VertexEdgeIdent { i, e, u, j, f, w } => {
                let (a, b) = self.take_pair(i, j)?;
                self.graphs[i] = Some(
                    vertex_edge_identification(&a, eid(e), vid(u), &b, eid(f), vid(w))?.graph,
                );
            }
            ScriptStep::Subdivide { i, e } => {
                self.get(i)?;
                subdivide(self.graphs[i].as_mut().expect("checked"), eid(e))?;
            }
            ScriptStep::AddCycle { i, ref vertices } => {
                let g = self.get(i)?;
                let vs: Vec<VertexId> = vertices.iter().map(|&v| vid(v)).collect();
                for &v in &vs {
                    g.check_vertex(v)?;
                }
                add_cycle(self.graphs[i].as_mut().expect("checked"), &vs)?;
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<MultiGraph> {
        let mut left = self.graphs.into_iter().flatten();
        match (left.next(), left.next()) {
            (Some(g), None) => Ok(g),
            (None, _) => Err(invalid("script builds nothing")),
            _ => Err(invalid("script leaves more than one graph")),
        }
    }
}

impl ConstructionScript {
    /// Rebuilds the graph; exactly one non-empty slot must remain.
    pub fn replay(&self) -> Result<MultiGraph> {
        let mut slots = Slots::default();
        for step in &self.steps {
            slots.apply(step)?;
        }
        slots.finish()
    }
}

/// Records each step and applies it immediately.
#[derive(Default)]
struct Builder {
    slots: Slots,
    script: ConstructionScript,
    /// Non-empty slots.
    alive: Vec<usize>,
}

impl Builder {
    fn push(&mut self, step: ScriptStep) {
        self.alive.push(self.slots.graphs.len());
        self.run(step);
    }

    fn run(&mut self, step: ScriptStep) {
        self.slots.apply(&step).expect("generator emits valid steps");
        self.script.steps.push(step);
    }

    fn graph(&self, i: usize) -> &MultiGraph {
        self.slots.graphs[i].as_ref().expect("live slot")
    }

    /// Two distinct live slots, removing the second from the live list.
    fn pick_pair(&mut self, rng: &mut Rng) -> (usize, usize) {
        let a = rng.below(self.alive.len());
        let mut b = rng.below(self.alive.len() - 1);
        if b >= a {
            b += 1;
        }
        let (i, j) = (self.alive[a], self.alive[b]);
        self.alive.swap_remove(b);
        (i, j)
    }

    /// A random edge of slot `i` and a random endpoint of it.
    fn pick_anchor(&self, i: usize, rng: &mut Rng) -> (usize, usize) {
        let g = self.graph(i);
        let e = EdgeId(rng.below(g.m()));
        let (a, b) = g.endpoints(e);
        (e.0, if rng.chance(1, 2) { a.0 } else { b.0 })
    }

    fn finish(self) -> (MultiGraph, ConstructionScript) {
        (self.slots.finish().expect("one graph left"), self.script)
    }
}

/// A random member of the class built from Eulerian multiedges by `∨` and `⊻`
/// (multiedge half-sizes in `1..=2`). See [`gen_class_g_with`].
pub fn gen_class_g(target_n: usize, seed: u64) -> Result<(MultiGraph, ConstructionScript)> {
    gen_class_g_with(target_n, 2, seed)
}

/// Starts from `target_n - 1` multiedges with `2k` edges, `k` uniform in
/// `1..=max_half`, and merges random pairs: `∨` at random vertices with
/// probability 1/3, otherwise `⊻` at random edges and endpoints. Both
/// operators lose one vertex, so the result has exactly `target_n` vertices.
pub fn gen_class_g_with(
    target_n: usize,
    max_half: usize,
    seed: u64,
) -> Result<(MultiGraph, ConstructionScript)> {
    if target_n < 2 {
        return Err(invalid("classG needs target_n >= 2"));
    }
    if max_half == 0 {
        return Err(invalid("classG needs max_half >= 1"));
    }
    let mut rng = Rng::new(seed);
    let mut b = Builder::default();
    for _ in 0..target_n - 1 {
        let k = rng.range(1, max_half);
        b.push(ScriptStep::Multiedge(k));
    }
    while b.alive.len() > 1 {
        let (i, j) = b.pick_pair(&mut rng);
        let step = if rng.chance(1, 3) {
            let u = rng.below(b.graph(i).n());
            let w = rng.below(b.graph(j).n());
            ScriptStep::VertexIdent { i, u, j, w }
        } else {
            let (e, u) = b.pick_anchor(i, &mut rng);
            let (f, w) = b.pick_anchor(j, &mut rng);
            ScriptStep::VertexEdgeIdent { i, e, u, j, f, w }
        };
        b.run(step);
    }
    Ok(b.finish())
}

/// Closed necklaces of length `2..=4` (the last one possibly shorter to hit
/// the target) merged pairwise by `≎` at random edges. `≎` adds vertex
/// counts, so the result has `target_n` vertices unless the remainder would be
/// a single vertex, in which case it has `target_n + 1`.
pub fn gen_class_h(target_n: usize, seed: u64) -> Result<(MultiGraph, ConstructionScript)> {
    if target_n < 2 {
        return Err(invalid("classH needs target_n >= 2"));
    }
    let mut rng = Rng::new(seed);
    let mut b = Builder::default();
    let mut total = 0;
    while total < target_n {
        let left = target_n - total;
        let k = rng.range(2, 4).min(left).max(2);
        b.push(ScriptStep::Necklace(k));
        total += k;
    }
    while b.alive.len() > 1 {
        let (i, j) = b.pick_pair(&mut rng);
        let (e, u) = b.pick_anchor(i, &mut rng);
        let (f, w) = b.pick_anchor(j, &mut rng);
        b.run(ScriptStep::EdgeIdent { i, e, u, j, f, w });
    }
    Ok(b.finish())
}

/// A random member of `ℋ′` on exactly `target_n` vertices.
///
/// Pieces are closed necklaces (`2..=4`) and cycles (`2..=5`) whose sizes sum
/// to at most `target_n`. Random pairs are merged by `≎`, or with
/// probability 1/2 by `∨` at degree-2 vertices; a piece without a degree-2
/// vertex is subdivided first. Random subdivisions then pad the vertex count.
/// `target_n = 1` gives a single vertex.
pub fn gen_class_h_prime(target_n: usize, seed: u64) -> Result<(MultiGraph, ConstructionScript)> {
    if target_n == 0 {
        return Err(invalid("classHprime needs target_n >= 1"));
    }
    if target_n == 1 {
        let mut b = Builder::default();
        b.push(ScriptStep::Point);
        return Ok(b.finish());
    }
    let mut rng = Rng::new(seed);
    let mut b = Builder::default();
    let mut total = 0;
    while target_n - total >= 2 {
        let left = target_n - total;
        let step = if rng.chance(1, 2) {
            ScriptStep::Necklace(rng.range(2, 4).min(left))
        } else {
            ScriptStep::Cycle(rng.range(2, 5).min(left))
        };
        total += match step {
            ScriptStep::Necklace(k) | ScriptStep::Cycle(k) => k,
            _ => unreachable!(),
        };
        b.push(step);
    }
    let degree_two = |g: &MultiGraph| -> Vec<usize> {
        g.vertices()
            .filter(|&v| g.incident(v).len() == 2)
            .map(|v| v.0)
            .collect()
    };
    while b.alive.len() > 1 {
        let (i, j) = b.pick_pair(&mut rng);
        let di = degree_two(b.graph(i));
        let dj = degree_two(b.graph(j));
        // subdividing both would overshoot the vertex budget
        let glue = rng.chance(1, 2) && (!di.is_empty() || !dj.is_empty());
        if !glue {
            let (e, u) = b.pick_anchor(i, &mut rng);
            let (f, w) = b.pick_anchor(j, &mut rng);
            b.run(ScriptStep::EdgeIdent { i, e, u, j, f, w });
            continue;
        }
        let mut ends = [(i, di), (j, dj)];
        for (slot, ds) in ends.iter_mut() {
            if ds.is_empty() {
                let g = b.graph(*slot);
                let e = rng.below(g.m());
                let x = g.n();
                b.run(ScriptStep::Subdivide { i: *slot, e });
                ds.push(x);
            }
        }
        let u = *rng.pick(&ends[0].1);
        let w = *rng.pick(&ends[1].1);
        b.run(ScriptStep::VertexIdent { i, u, j, w });
    }
    let i = b.alive[0];
    while b.graph(i).n() < target_n {
        let e = rng.below(b.graph(i).m());
        b.run(ScriptStep::Subdivide { i, e });
    }
    Ok(b.finish())
}

/// A Hamiltonian cycle on a random vertex order plus `extra_cycles` cycles on
/// random vertex subsets of random length `2..=n`. Connected and even by
/// construction; `n = 1` gives a single vertex and ignores `extra_cycles`.
pub fn gen_random_eulerian(n: usize, extra_cycles: usize, seed: u64) -> Result<MultiGraph> {
    gen_random_eulerian_with(n, extra_cycles, n, seed)
}

/// As [`gen_random_eulerian`], with extra cycle lengths capped at `max_len`.
pub fn gen_random_eulerian_with(
    n: usize,
    extra_cycles: usize,
    max_len: usize,
    seed: u64,
) -> Result<MultiGraph> {
    Ok(random_eulerian_scripted(n, extra_cycles, max_len, seed)?.0)
}

fn random_eulerian_scripted(
    n: usize,
    extra_cycles: usize,
    max_len: usize,
    seed: u64,
) -> Result<(MultiGraph, ConstructionScript)> {
    if n == 0 {
        return Err(invalid("randomEulerian needs n >= 1"));
    }
    let mut b = Builder::default();
    b.push(ScriptStep::Empty(n));
    if n == 1 {
        return Ok(b.finish());
    }
    if max_len < 2 {
        return Err(invalid("cycle length cap must be >= 2"));
    }
    let mut rng = Rng::new(seed);
    let cycle = |len: usize, rng: &mut Rng| {
        let mut all: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut all);
        all.truncate(len);
        ScriptStep::AddCycle { i: 0, vertices: all }
    };
    let base = cycle(n, &mut rng);
    b.run(base);
    for _ in 0..extra_cycles {
        let len = rng.range(2, max_len.min(n));
        let step = cycle(len, &mut rng);
        b.run(step);
    }
    Ok(b.finish())
}

/// Graph families known to the generator front end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Multiedge,
    Necklace,
    Cycle,
    ClassG,
    ClassH,
    ClassHPrime,
    RandomEulerian,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Multiedge,
        Family::Necklace,
        Family::Cycle,
        Family::ClassG,
        Family::ClassH,
        Family::ClassHPrime,
        Family::RandomEulerian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Multiedge => "multiedge",
            Family::Necklace => "necklace",
            Family::Cycle => "cycle",
            Family::ClassG => "classG",
            Family::ClassH => "classH",
            Family::ClassHPrime => "classHprime",
            Family::RandomEulerian => "randomEulerian",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| invalid(format!("unknown family `{s}`")))
    }
}

/// Family, size parameters and seed.
///
/// Parameters: `multiedge k`, `necklace k`, `cycle k`,
/// `classG n [max_half]`, `classH n`, `classHprime n`,
/// `randomEulerian n [extra_cycles]` (default 2 extra cycles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: MultiGraph,
    pub script: ConstructionScript,
}

impl GenSpec {
    pub fn new(family: Family, params: &[usize], seed: u64) -> Self {
        GenSpec {
            family,
            params: params.to_vec(),
            seed,
        }
    }

    pub fn generate(&self) -> Result<Generated> {
        let p = &self.params;
        let arity = |lo: usize, hi: usize| {
            if p.len() < lo || p.len() > hi {
                Err(invalid(format!(
                    "{} takes {lo}..={hi} parameters, got {}",
                    self.family,
                    p.len()
                )))
            } else {
                Ok(())
            }
        };
        let single = |step: ScriptStep| -> Result<Generated> {
            let script = ConstructionScript { steps: vec![step] };
            Ok(Generated {
                graph: script.replay()?,
                script,
            })
        };
        match self.family {
            Family::Multiedge => {
                arity(1, 1)?;
                gen_eulerian_multiedge(p[0])?;
                single(ScriptStep::Multiedge(p[0]))
            }
            Family::Necklace => {
                arity(1, 1)?;
                gen_closed_necklace(p[0])?;
                single(ScriptStep::Necklace(p[0]))
            }
            Family::Cycle => {
                arity(1, 1)?;
                gen_cycle(p[0])?;
                single(ScriptStep::Cycle(p[0]))
            }
            Family::ClassG => {
                arity(1, 2)?;
                let (graph, script) =
                    gen_class_g_with(p[0], p.get(1).copied().unwrap_or(2), self.seed)?;
                Ok(Generated { graph, script })
            }
            Family::ClassH => {
                arity(1, 1)?;
                let (graph, script) = gen_class_h(p[0], self.seed)?;
                Ok(Generated { graph, script })
            }
            Family::ClassHPrime => {
                arity(1, 1)?;
                let (graph, script) = gen_class_h_prime(p[0], self.seed)?;
                Ok(Generated { graph, script })
            }
            Family::RandomEulerian => {
                arity(1, 2)?;
                let (graph, script) =
                    random_eulerian_scripted(p[0], p.get(1).copied().unwrap_or(2), p[0], self.seed)?;
                Ok(Generated { graph, script })
            }
        }
    }
}

/// One manifest record: `family=<f> params=<a,b,..> seed=<s> file=<path>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub spec: GenSpec,
    pub file: String,
}

impl fmt::Display for ManifestEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.spec.params.iter().map(usize::to_string).collect();
        write!(
            f,
            "family={} params={} seed={} file={}",
            self.spec.family,
            params.join(","),
            self.spec.seed,
            self.file
        )
    }
}

impl FromStr for ManifestEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || invalid(format!("malformed manifest line `{s}`"));
        let (mut family, mut params, mut seed, mut file) = (None, None, None, None);
        for tok in s.split_ascii_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(bad)?;
            match k {
                "family" => family = Some(v.parse::<Family>()?),
                "params" => {
                    params = Some(
                        v.split(',')
                            .filter(|x| !x.is_empty())
                            .map(|x| x.parse().map_err(|_| bad()))
                            .collect::<Result<Vec<usize>>>()?,
                    )
                }
                "seed" => seed = Some(v.parse().map_err(|_| bad())?),
                "file" => file = Some(v.to_string()),
                _ => return Err(bad()),
            }
        }
        Ok(ManifestEntry {
            spec: GenSpec {
                family: family.ok_or_else(bad)?,
                params: params.ok_or_else(bad)?,
                seed: seed.ok_or_else(bad)?,
            },
            file: file.ok_or_else(bad)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_biconnected;

    #[test]
    fn base_families() {
        let g = gen_eulerian_multiedge(1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 2));
        assert_eq!(
            gen_eulerian_multiedge(2).unwrap().endpoint_multiset(),
            gen_closed_necklace(2).unwrap().endpoint_multiset()
        );
        assert!(gen_eulerian_multiedge(0).is_err());

        let n3 = gen_closed_necklace(3).unwrap();
        assert_eq!((n3.n(), n3.m()), (3, 6));
        assert!(n3.vertices().all(|v| n3.degree(v).unwrap() == 4));
        assert!(is_biconnected(&n3));
        assert!(gen_closed_necklace(1).is_err());

        assert!(gen_cycle(7).unwrap().is_eulerian());
        assert!(gen_cycle(1).is_err());
    }

    #[test]
    fn class_g_hits_target_exactly() {
        for n in 2..30 {
            let (g, script) = gen_class_g(n, n as u64).unwrap();
            assert_eq!(g.n(), n);
            assert!(g.is_eulerian());
            assert_eq!(script.replay().unwrap(), g);
        }
        let (g, _) = gen_class_g(2, 5).unwrap();
        assert!(g.is_eulerian_multiedge());
        assert!(gen_class_g(1, 0).is_err());
    }

    #[test]
    fn same_seed_same_graph() {
        assert_eq!(gen_class_g(40, 9).unwrap().0, gen_class_g(40, 9).unwrap().0);
        assert_ne!(gen_class_g(40, 9).unwrap().0, gen_class_g(40, 10).unwrap().0);
        assert_eq!(
            gen_random_eulerian(8, 3, 1).unwrap(),
            gen_random_eulerian(8, 3, 1).unwrap()
        );
    }

    #[test]
    fn class_h_outputs() {
        for seed in 0..20 {
            let (g, script) = gen_class_h(12, seed).unwrap();
            assert!(g.n() == 12 || g.n() == 13);
            assert!(g.vertices().all(|v| g.degree(v).unwrap() == 4));
            assert!(is_biconnected(&g));
            assert_eq!(script.replay().unwrap(), g);
        }
    }

    #[test]
    fn class_h_prime_outputs() {
        for n in 1..20 {
            let (g, script) = gen_class_h_prime(n, n as u64 * 3).unwrap();
            assert_eq!(g.n(), n);
            assert!(g.is_eulerian());
            assert!(g.max_degree() <= 4);
            assert_eq!(script.replay().unwrap(), g);
        }
    }

    #[test]
    fn random_eulerian_outputs() {
        assert_eq!(
            gen_random_eulerian(6, 0, 3).unwrap().endpoint_multiset().len(),
            6
        );
        for seed in 0..30 {
            let g = gen_random_eulerian(7, 3, seed).unwrap();
            assert!(g.is_eulerian());
        }
        assert_eq!(gen_random_eulerian(1, 4, 0).unwrap().n(), 1);
        assert!(gen_random_eulerian(0, 0, 0).is_err());
    }

    #[test]
    fn subdivision_keeps_parity() {
        let mut g = gen_closed_necklace(3).unwrap();
        let x = subdivide(&mut g, EdgeId(0)).unwrap();
        assert_eq!(g.degree(x).unwrap(), 2);
        assert_eq!(g.m(), 7);
        assert!(g.is_eulerian());
    }

    #[test]
    fn script_text_round_trips() {
        let (_, script) = gen_class_h_prime(15, 4).unwrap();
        let text = script.to_string();
        assert_eq!(text.parse::<ConstructionScript>().unwrap(), script);
        let step: ScriptStep = "Y 0 1 2 3".parse().unwrap();
        assert_eq!(step.to_string(), "Y 0 1 2 3");
        assert!("Y 0 1".parse::<ScriptStep>().is_err());
        assert!("Q 1".parse::<ScriptStep>().is_err());
    }

    #[test]
    fn genspec_front_end() {
        let g = GenSpec::new(Family::Necklace, &[3], 0).generate().unwrap();
        assert_eq!(g.graph, gen_closed_necklace(3).unwrap());
        assert!(GenSpec::new(Family::Multiedge, &[0], 0).generate().is_err());
        assert!(GenSpec::new(Family::ClassG, &[], 0).generate().is_err());
        assert_eq!("classHprime".parse::<Family>().unwrap(), Family::ClassHPrime);
        let entry = ManifestEntry {
            spec: GenSpec::new(Family::ClassG, &[50, 2], 7),
            file: "classG-0000.graph".into(),
        };
        let line = entry.to_string();
        assert_eq!(line, "family=classG params=50,2 seed=7 file=classG-0000.graph");
        assert_eq!(line.parse::<ManifestEntry>().unwrap(), entry);
    }
}
