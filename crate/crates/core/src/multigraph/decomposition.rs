use std::collections::HashSet;
use std::fmt;

use super::{EdgeId, MultiGraph, VertexId};
use crate::error::{Error, Result};

/// A closed walk with distinct vertices and distinct edges.
///
/// `edges[i]` joins `vertices[i]` and `vertices[(i + 1) % len]`. Two parallel
/// edges form the shortest cycle (length 2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        let k = self.edges.len();
        if k < 2 || self.vertices.len() != k {
            return Err(Error::InvalidDecomposition(format!(
                "cycle with {} vertices and {} edges",
                self.vertices.len(),
                k
            )));
        }
        let distinct_v: HashSet<_> = self.vertices.iter().collect();
        let distinct_e: HashSet<_> = self.edges.iter().collect();
        if distinct_v.len() != k || distinct_e.len() != k {
            return Err(Error::InvalidDecomposition(
                "cycle repeats a vertex or an edge".into(),
            ));
        }
        for i in 0..k {
            let e = self.edges[i];
            g.check_edge(e)?;
            let (a, b) = g.endpoints(e);
            let (x, y) = (self.vertices[i], self.vertices[(i + 1) % k]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(Error::InvalidDecomposition(format!(
                    "edge {e} does not join {x} and {y}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C")?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

/// A set of cycles partitioning the edge set of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleDecomposition {
    pub cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Checks that every cycle is closed and simple and that the cycles use
    /// each edge of `g` exactly once.
    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        let mut used = vec![false; g.m()];
        for c in &self.cycles {
            c.validate(g)?;
            for &e in &c.edges {
                if std::mem::replace(&mut used[e.0], true) {
                    return Err(Error::InvalidDecomposition(format!(
                        "edge {e} used twice"
                    )));
                }
            }
        }
        if let Some(e) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidDecomposition(format!("edge {e} not covered")));
        }
        Ok(())
    }
}

/// One `C <e1> ... <ek>` line per cycle.
impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> MultiGraph {
        MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn cyc(vs: &[usize], es: &[usize]) -> Cycle {
        Cycle {
            vertices: vs.iter().copied().map(VertexId).collect(),
            edges: es.iter().copied().map(EdgeId).collect(),
        }
    }

    #[test]
    fn valid_decomposition() {
        let d = CycleDecomposition {
            cycles: vec![cyc(&[0, 1, 2], &[0, 1, 2]), cyc(&[3, 4, 0], &[4, 5, 3])],
        };
        assert_eq!(d.validate(&bowtie()), Ok(()));
        assert_eq!(d.to_string(), "C 0 1 2\nC 4 5 3\n");
    }

    #[test]
    fn rejects_missing_and_repeated_edges() {
        let g = bowtie();
        let partial = CycleDecomposition {
            cycles: vec![cyc(&[0, 1, 2], &[0, 1, 2])],
        };
        assert!(partial.validate(&g).is_err());
        let twice = CycleDecomposition {
            cycles: vec![
                cyc(&[0, 1, 2], &[0, 1, 2]),
                cyc(&[0, 1, 2], &[0, 1, 2]),
                cyc(&[3, 4, 0], &[4, 5, 3]),
            ],
        };
        assert!(twice.validate(&g).is_err());
    }

    #[test]
    fn rejects_open_walks() {
        let g = bowtie();
        assert!(cyc(&[0, 1, 2], &[0, 1, 3]).validate(&g).is_err());
        assert!(cyc(&[0], &[0]).validate(&g).is_err());
    }

    #[test]
    fn parallel_pair_is_a_cycle() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(cyc(&[0, 1], &[0, 1]).validate(&g), Ok(()));
    }
}
