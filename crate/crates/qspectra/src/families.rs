//! Constructors for the named extremal graphs and matrices: the four
//! pendant-decorated families H_j^n, the seven candidate base graphs A_i^j,
//! and the bordered submatrices S_6 and S_7.
//!
//! Labeling convention, fixed so the matrices come out in bordered form: the
//! hub z is vertex 0, the remaining base vertices follow, and pendants take
//! the highest labels. In particular S_j equals the signless Laplacian of
//! the 5-vertex family member with row and column 0 removed.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::IntSymMatrix;
use crate::graph::{Graph, TricyclicClass};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("family H_{j}^n requires n >= {min}, got {n}")]
    TooFewVertices { j: usize, min: usize, n: usize },
    #[error("no candidate base A_{index}^{j}")]
    UnknownBase { j: usize, index: u8 },
    #[error("S matrices exist only for the classes with 6 and 7 simple cycles")]
    NoSuchSMatrix,
    #[error("unknown family id {0:?}")]
    UnknownFamily(String),
    #[error("family {0} requires a vertex count")]
    MissingOrder(String),
}

/// Smallest order for which H_j^n exists.
pub fn min_vertices(class: TricyclicClass) -> usize {
    match class {
        TricyclicClass::C3 => 7,
        TricyclicClass::C4 => 6,
        TricyclicClass::C6 => 5,
        TricyclicClass::C7 => 4,
    }
}

/// A fixed small graph with its drawn vertices exposed by name. The hub z is
/// always present; the other anchors exist only where the drawing labels
/// them.
#[derive(Debug, Clone)]
pub struct AnchoredGraph {
    pub graph: Graph,
    pub z: usize,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub u: Option<usize>,
    pub v: Option<usize>,
}

/// The extremal family member H_j^n: the base A_1^j with all remaining
/// vertices attached to the hub as pendants. Vertex 0 is the hub.
pub fn build_h(class: TricyclicClass, n: usize) -> Result<Graph, FamilyError> {
    let min = min_vertices(class);
    if n < min {
        return Err(FamilyError::TooFewVertices { j: class.cycle_count(), min, n });
    }
    let base = build_a(class, 1).expect("A_1^j exists for every class").graph;
    let k = base.n();
    let edges = base
        .edges()
        .iter()
        .copied()
        .chain((k..n).map(|p| (0, p)));
    Ok(Graph::new(n, edges).expect("family construction is valid"))
}

/// Candidate bases A_i^j with their drawn anchor vertices.
pub fn build_a(class: TricyclicClass, index: u8) -> Result<AnchoredGraph, FamilyError> {
    let j = class.cycle_count();
    let (edges, n, x, y, u, v): (&[(usize, usize)], usize, _, _, _, _) = match (class, index) {
        // Three triangles sharing the hub; x and y sit on different triangles.
        (TricyclicClass::C3, 1) => (
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
            7,
            Some(1),
            Some(3),
            None,
            None,
        ),
        // Three triangles in a chain: one at z, one at u, one on the edge zu.
        (TricyclicClass::C3, 2) => (
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (1, 5), (1, 6), (5, 6)],
            7,
            None,
            None,
            Some(1),
            Some(2),
        ),
        // Two triangles on the edge zx plus one more triangle at z.
        (TricyclicClass::C4, 1) => (
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (0, 5), (4, 5)],
            6,
            Some(1),
            Some(4),
            None,
            None,
        ),
        // A 4-cycle u p v z with both diagonals absent except uv, plus a
        // triangle at z.
        (TricyclicClass::C4, 2) => (
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5)],
            6,
            None,
            None,
            Some(1),
            Some(2),
        ),
        // K_{2,3} plus the hub-hub edge.
        (TricyclicClass::C6, 1) => (
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
            5,
            None,
            None,
            None,
            None,
        ),
        // Triangle z u v with one extra common neighbor on each of zu and zv.
        (TricyclicClass::C6, 2) => (
            &[(0, 1), (0, 2), (1, 2), (1, 3), (0, 3), (0, 4), (2, 4)],
            5,
            None,
            None,
            Some(1),
            Some(2),
        ),
        (TricyclicClass::C7, 1) => (
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            4,
            None,
            None,
            None,
            None,
        ),
        _ => return Err(FamilyError::UnknownBase { j, index }),
    };
    let graph = Graph::new(n, edges.iter().copied()).expect("base edge lists are valid");
    debug_assert_eq!(graph.m(), graph.n() + 2);
    Ok(AnchoredGraph { graph, z: 0, x, y, u, v })
}

/// The bordered submatrices of the 5-vertex family members: S_j is the
/// signless Laplacian of H_j^5 with the hub row and column removed.
pub fn build_s(class: TricyclicClass) -> Result<IntSymMatrix, FamilyError> {
    let rows = match class {
        TricyclicClass::C6 => vec![
            vec![4, 1, 1, 1],
            vec![1, 2, 0, 0],
            vec![1, 0, 2, 0],
            vec![1, 0, 0, 2],
        ],
        TricyclicClass::C7 => vec![
            vec![3, 1, 1, 0],
            vec![1, 3, 1, 0],
            vec![1, 1, 3, 0],
            vec![0, 0, 0, 1],
        ],
        _ => return Err(FamilyError::NoSuchSMatrix),
    };
    Ok(IntSymMatrix::from_rows(rows).expect("S matrices are symmetric"))
}

/// Identifier for anything this module can build, as used by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    H(TricyclicClass),
    A(TricyclicClass, u8),
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let norm = s.trim().to_ascii_uppercase();
        let class_of = |c: char| -> Option<TricyclicClass> {
            match c {
                '3' => Some(TricyclicClass::C3),
                '4' => Some(TricyclicClass::C4),
                '6' => Some(TricyclicClass::C6),
                '7' => Some(TricyclicClass::C7),
                _ => None,
            }
        };
        let bytes: Vec<char> = norm.chars().collect();
        match bytes.as_slice() {
            ['H', j] => class_of(*j)
                .map(FamilyId::H)
                .ok_or_else(|| FamilyError::UnknownFamily(s.into())),
            ['A', j, '_', i] | ['A', j, i] => {
                let class = class_of(*j).ok_or_else(|| FamilyError::UnknownFamily(s.into()))?;
                let index = i.to_digit(10).ok_or_else(|| FamilyError::UnknownFamily(s.into()))?;
                Ok(FamilyId::A(class, index as u8))
            }
            _ => Err(FamilyError::UnknownFamily(s.into())),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::H(c) => write!(f, "H{}", c.cycle_count()),
            FamilyId::A(c, i) => write!(f, "A{}_{}", c.cycle_count(), i),
        }
    }
}

/// Build a family member from an id and, for the H families, an order.
pub fn build_family(id: FamilyId, n: Option<usize>) -> Result<Graph, FamilyError> {
    match id {
        FamilyId::H(class) => {
            let n = n.ok_or_else(|| FamilyError::MissingOrder(id.to_string()))?;
            build_h(class, n)
        }
        FamilyId::A(class, index) => Ok(build_a(class, index)?.graph),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::exact::{char_poly, signless_laplacian};
    use crate::graph::TricyclicClass::*;

    #[test]
    fn h7_at_minimum_is_k4() {
        let g = build_h(C7, 4).unwrap();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn h6_smallest_member() {
        let g = build_h(C6, 5).unwrap();
        assert_eq!(g.m(), 7);
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 4, 4]);
        assert_eq!(g.count_simple_cycles(), 6);
    }

    #[test]
    fn families_are_tricyclic_with_matching_class() {
        for class in TricyclicClass::ALL {
            for n in min_vertices(class)..=12 {
                let g = build_h(class, n).unwrap();
                assert!(g.is_tricyclic(), "H_{class}^{n}");
                assert_eq!(g.m(), n + 2);
                assert_eq!(g.tricyclic_class().unwrap(), class, "H_{class}^{n}");
            }
        }
    }

    #[test]
    fn below_minimum_is_rejected() {
        assert!(matches!(
            build_h(C3, 6),
            Err(FamilyError::TooFewVertices { j: 3, min: 7, n: 6 })
        ));
        assert!(build_h(C7, 3).is_err());
    }

    #[test]
    fn pendants_attach_to_the_hub() {
        let g = build_h(C4, 9).unwrap();
        let pendants = g.pendent_vertices();
        assert_eq!(pendants, vec![6, 7, 8]);
        for &p in &pendants {
            assert!(g.has_edge(0, p));
        }
    }

    #[test]
    fn base_of_h_is_a1() {
        for class in TricyclicClass::ALL {
            let a1 = build_a(class, 1).unwrap().graph;
            for n in min_vertices(class)..=12 {
                let g = build_h(class, n).unwrap();
                let base = g.base().unwrap().graph;
                assert!(is_isomorphic(&base, &a1).unwrap(), "base(H_{class}^{n})");
            }
        }
    }

    #[test]
    fn candidate_bases_have_the_advertised_cycle_counts() {
        let expected = [
            ((C3, 1), 3),
            ((C3, 2), 3),
            ((C4, 1), 4),
            ((C4, 2), 4),
            ((C6, 1), 6),
            ((C6, 2), 6),
            ((C7, 1), 7),
        ];
        for ((class, index), cycles) in expected {
            let a = build_a(class, index).unwrap();
            assert_eq!(a.graph.count_simple_cycles(), cycles, "A_{index}^{class}");
            assert_eq!(a.graph.m(), a.graph.n() + 2, "A_{index}^{class}");
            assert!(a.graph.pendent_vertices().is_empty(), "A_{index}^{class}");
        }
        assert!(build_a(C7, 2).is_err());
        assert!(build_a(C6, 3).is_err());
    }

    #[test]
    fn a17_is_k4_and_a14_pins_the_drawing() {
        assert_eq!(build_a(C7, 1).unwrap().graph, Graph::complete(4));
        // The 4-cycle class base: 8 edges and exactly 4 simple cycles.
        let a14 = build_a(C4, 1).unwrap();
        assert_eq!(a14.graph.m(), 8);
        assert_eq!(a14.graph.count_simple_cycles(), 4);
    }

    #[test]
    fn distinct_candidate_bases_are_not_isomorphic() {
        let pairs = [(C3, 1, C3, 2), (C4, 1, C4, 2), (C6, 1, C6, 2)];
        for (c1, i1, c2, i2) in pairs {
            let a = build_a(c1, i1).unwrap().graph;
            let b = build_a(c2, i2).unwrap().graph;
            assert!(!is_isomorphic(&a, &b).unwrap());
        }
    }

    #[test]
    fn s_matrices_match_the_bordered_extraction() {
        for class in [C6, C7] {
            let s = build_s(class).unwrap();
            let q5 = signless_laplacian(&build_h(class, 5).unwrap());
            assert_eq!(s, q5.delete_row_col(0));
        }
        assert!(build_s(C3).is_err());
    }

    #[test]
    fn s_matrices_are_cospectral() {
        let p6 = char_poly(&build_s(C6).unwrap()).unwrap();
        let p7 = char_poly(&build_s(C7).unwrap()).unwrap();
        assert_eq!(p6, p7);
    }

    #[test]
    fn family_ids_parse() {
        assert_eq!("H6".parse::<FamilyId>().unwrap(), FamilyId::H(C6));
        assert_eq!("h7".parse::<FamilyId>().unwrap(), FamilyId::H(C7));
        assert_eq!("A3_2".parse::<FamilyId>().unwrap(), FamilyId::A(C3, 2));
        assert_eq!("a61".parse::<FamilyId>().unwrap(), FamilyId::A(C6, 1));
        assert!("H5".parse::<FamilyId>().is_err());
        assert!("B3".parse::<FamilyId>().is_err());
        assert!(build_family(FamilyId::H(C6), None).is_err());
    }

    #[test]
    fn anchors_are_in_range_and_distinct_from_hub() {
        for (class, index) in [(C3, 1), (C3, 2), (C4, 1), (C4, 2), (C6, 1), (C6, 2), (C7, 1)] {
            let a = build_a(class, index).unwrap();
            assert_eq!(a.z, 0);
            for anchor in [a.x, a.y, a.u, a.v].into_iter().flatten() {
                assert!(anchor > 0 && anchor < a.graph.n());
            }
        }
    }
}
