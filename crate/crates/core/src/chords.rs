//! Position of an edge relative to a reference path.

use crate::graph::Edge;
use crate::path::Path;
use crate::{Error, Result};

/// How an edge sits relative to a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChordClass {
    /// Both endpoints are internal vertices of the path.
    Inner,
    /// Both endpoints on the path, at least one of them an end vertex.
    Boundary,
    /// The edge is an edge of the path.
    PathEdge,
    /// At least one endpoint lies off the path.
    NonChord,
}

pub fn classify_chord(p: &Path, e: Edge) -> ChordClass {
    let (Some(a), Some(b)) = (p.position(e.u()), p.position(e.v())) else {
        return ChordClass::NonChord;
    };
    if a.abs_diff(b) == 1 {
        return ChordClass::PathEdge;
    }
    let last = p.order() - 1;
    if a == 0 || a == last || b == 0 || b == last {
        ChordClass::Boundary
    } else {
        ChordClass::Inner
    }
}

/// True when `d` uses no inner chord of the reference detour `p`.
pub fn is_basic_detour(d: &Path, p: &Path) -> Result<bool> {
    if d.order() != p.order() {
        return Err(Error::OrderMismatch(d.order(), p.order()));
    }
    Ok(d.edges().all(|e| classify_chord(p, e) != ChordClass::Inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn p9() -> Path {
        Path::new((0..9).collect()).unwrap()
    }

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn classify_examples() {
        let p = p9();
        assert_eq!(classify_chord(&p, e(0, 2)), ChordClass::Boundary);
        assert_eq!(classify_chord(&p, e(6, 8)), ChordClass::Boundary);
        assert_eq!(classify_chord(&p, e(4, 7)), ChordClass::Inner);
        assert_eq!(classify_chord(&p, e(1, 4)), ChordClass::Inner);
        assert_eq!(classify_chord(&p, e(3, 4)), ChordClass::PathEdge);
        assert_eq!(classify_chord(&p, e(3, 9)), ChordClass::NonChord);
        assert_eq!(classify_chord(&p, e(0, 8)), ChordClass::Boundary);
    }

    #[test]
    fn basic_detour_examples() {
        let p = p9();
        assert_eq!(is_basic_detour(&p, &p), Ok(true));
        let d = Path::new(vec![3, 2, 0, 1, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(is_basic_detour(&d, &p), Ok(false));
        let d = Path::new(vec![0, 1, 2, 3, 4, 7, 8, 6, 5]).unwrap();
        assert_eq!(is_basic_detour(&d, &p), Ok(false));
        let d = Path::new(vec![0, 1, 2, 3, 4, 5, 6, 8, 7]).unwrap();
        assert_eq!(is_basic_detour(&d, &p), Ok(true));
        let short = Path::new((0..4).collect::<Vec<_>>()).unwrap();
        assert_eq!(is_basic_detour(&short, &p), Err(Error::OrderMismatch(4, 9)));
    }
}
