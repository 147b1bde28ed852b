use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, Graph};
use crate::{Error, Result};

/// A sequence of distinct vertices.
///
/// A `Path` is only checked for distinctness on construction; adjacency in a
/// host graph is checked by [`Path::validate_in`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPath);
        }
        for (idx, v) in vertices.iter().enumerate() {
            if vertices[..idx].contains(v) {
                return Err(Error::RepeatedVertex(*v));
            }
        }
        Ok(Path(vertices))
    }

    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        debug_assert!(Path::new(vertices.clone()).is_ok());
        Path(vertices)
    }

    /// Number of vertices on the path.
    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    pub fn is_endpoint(&self, v: usize) -> bool {
        self.first() == v || self.last() == v
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0
            .windows(2)
            .map(|w| Edge::new(w[0], w[1]).expect("path vertices are distinct"))
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges().any(|x| x == e)
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.0.clone();
        v.reverse();
        Path(v)
    }

    /// The orientation whose first vertex is not larger than its last.
    pub fn canonical(&self) -> Path {
        if self.first() > self.last() {
            self.reversed()
        } else {
            self.clone()
        }
    }

    /// Equality as undirected paths.
    pub fn same_undirected(&self, other: &Path) -> bool {
        self == other || (self.order() == other.order() && self.0.iter().eq(other.0.iter().rev()))
    }

    /// Checks that every vertex is in `g` and consecutive vertices are adjacent.
    pub fn validate_in(&self, g: &Graph) -> Result<()> {
        for &v in &self.0 {
            if v >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.order(),
                });
            }
        }
        for w in self.0.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::NotAdjacent(w[0], w[1]));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, v) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}
