//! Graphs transcribed from published figures, as (upper, lower) edge lists.

use bfk_core::{FaceGraph, Graph};

use super::{face, graph};

/// 3-regular graph of a 7-dimensional face with 17 facets.
pub fn seven_dim_seventeen_facets() -> FaceGraph {
    face(
        6,
        &[
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 0),
            (2, 1),
            (2, 3),
            (3, 2),
            (3, 4),
            (3, 5),
            (4, 3),
            (4, 4),
            (4, 5),
            (5, 3),
            (5, 4),
            (5, 5),
        ],
    )
}

/// Square pyramid; also the 4x4 face with matchings id, (0 1), (1 2), (2 3), (0 1)(2 3).
pub fn square_pyramid() -> FaceGraph {
    face(4, &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
}

pub fn simplex4() -> FaceGraph {
    face(4, &[(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
}

/// A second irreducible 4-simplex graph, on five nodes.
pub fn simplex4_on_five() -> FaceGraph {
    face(
        5,
        &[(0, 0), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (4, 4)],
    )
}

/// Join of a segment and a square.
pub fn edge_join_square() -> FaceGraph {
    face(4, &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 0), (3, 2), (3, 3)])
}

pub fn pyramid_over_prism() -> FaceGraph {
    face(
        5,
        &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 3), (3, 4), (4, 0), (4, 3), (4, 4)],
    )
}

pub fn wedge_w1() -> FaceGraph {
    face(
        5,
        &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3), (4, 4)],
    )
}

/// Pyramid over a 3-cube; one edge lies in a single perfect matching.
pub fn pyramid_over_cube() -> FaceGraph {
    face(
        6,
        &[
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 2),
            (2, 3),
            (3, 2),
            (3, 3),
            (3, 4),
            (4, 4),
            (4, 5),
            (5, 0),
            (5, 4),
            (5, 5),
        ],
    )
}

pub fn k33() -> FaceGraph {
    face(3, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)])
}

/// A 3-simplex on four nodes.
pub fn tetrahedron_on_four() -> FaceGraph {
    face(4, &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 3)])
}

/// The same 3-simplex on three nodes.
pub fn tetrahedron_on_three() -> FaceGraph {
    face(3, &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)])
}

/// Graph with a node of maximal degree.
pub fn max_degree_example() -> FaceGraph {
    face(
        6,
        &[
            (0, 0),
            (0, 1),
            (0, 3),
            (1, 1),
            (1, 2),
            (1, 4),
            (2, 0),
            (2, 2),
            (2, 5),
            (3, 0),
            (3, 3),
            (4, 1),
            (4, 4),
            (5, 2),
            (5, 5),
        ],
    )
}

/// Graph in which three edges at one node extend to a triangle.
pub fn triangle_host() -> FaceGraph {
    face(5, &[(0, 0), (0, 2), (1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (3, 0), (3, 2), (3, 3), (3, 4), (4, 3), (4, 4)])
}

/// Upper node 2 is reducible.
pub fn reducible_example() -> FaceGraph {
    face(4, &[(0, 0), (0, 1), (0, 3), (1, 0), (1, 1), (1, 3), (2, 1), (2, 2), (3, 0), (3, 2), (3, 3)])
}

/// Graph whose lower nodes 0, 1, 2 have exactly the common neighbours upper 0 and 1.
pub fn common_neighbour_example() -> FaceGraph {
    face(
        6,
        &[
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 2),
            (2, 4),
            (3, 2),
            (3, 3),
            (4, 0),
            (4, 1),
            (4, 3),
            (4, 5),
            (5, 3),
            (5, 4),
            (5, 5),
        ],
    )
}

/// Contraction example: upper node 3 has degree 2. Not elementary.
pub fn contraction_input() -> Graph {
    graph(4, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)])
}

/// `res(red(contraction_input, upper 3))` as drawn.
pub fn contraction_resolved() -> Graph {
    graph(
        5,
        &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (1, 3), (2, 2), (2, 4), (3, 2), (3, 3), (4, 2), (4, 4)],
    )
}

/// Resolution of the face multigraph with multiplicities (0,0):2 and (1,2):3.
pub fn multigraph_resolution() -> FaceGraph {
    face(
        6,
        &[
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 2),
            (3, 3),
            (4, 3),
            (4, 4),
            (5, 3),
            (5, 5),
        ],
    )
}

/// Pyramid over the 6-cube on 12 nodes: six 4-cycles joined in a ring.
pub fn ring_of_six_squares() -> FaceGraph {
    let mut edges = Vec::new();
    for i in 0..6 {
        let (a, b) = (2 * i, 2 * i + 1);
        edges.extend([(a, a), (a, b), (b, a), (b, b)]);
        edges.push((b, (b + 1) % 12));
    }
    face(12, &edges)
}

/// Wedge of the square pyramid over the facet without edge (2, 1), as drawn.
pub fn square_pyramid_wedge_facet() -> FaceGraph {
    let mut e = square_pyramid().edges();
    e.extend([(2, 4), (4, 1), (4, 4)]);
    face(5, &e)
}

/// Wedge of the square pyramid over the complement of that facet, as drawn.
pub fn square_pyramid_wedge_complement() -> FaceGraph {
    let mut e: Vec<_> = square_pyramid().edges().into_iter().filter(|&x| x != (2, 1)).collect();
    e.extend([(2, 4), (4, 4), (4, 1), (4, 5), (5, 4), (5, 5)]);
    face(6, &e)
}
