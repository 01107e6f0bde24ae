//! Graph I/O and canonical forms: parse graph6 and edge-list text, relabel,
//! and recover the canonical representative.
//!
//! Run with: cargo run --example graph_formats

use qspectra::canon::{canonical_form, is_isomorphic};
use qspectra::graph::Graph;

fn main() {
    // A 5-vertex star written in graph6: 'D' encodes n = 5, the data bytes
    // place the four edges at vertex 4.
    let star = Graph::parse_graph6("D?{").unwrap();
    println!("D?{{ decodes to n = {}, edges {:?}", star.n(), star.edges());

    // Same graph in the plain edge-list format.
    let text = star.to_edge_list();
    print!("as an edge list:\n{text}");
    assert_eq!(Graph::parse_edge_list(&text).unwrap(), star);

    // Relabeling moves the center; the canonical form does not care.
    let relabeled = star.relabel(&[4, 3, 2, 1, 0]);
    println!("relabeled encoding: {}", relabeled.to_graph6().unwrap());
    let a = canonical_form(&star).unwrap();
    let b = canonical_form(&relabeled).unwrap();
    assert_eq!(a, b);
    println!("canonical graph6 of both: {}", a.canonical_graph6());

    // The canonizer separates graphs that degree counts cannot.
    let c6 = Graph::cycle(6);
    let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    println!(
        "C_6 vs two triangles, both 2-regular: isomorphic = {}",
        is_isomorphic(&c6, &two_triangles).unwrap()
    );

    // Structure helpers used throughout the crate.
    let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
    println!(
        "triangle with a tree hung on it: cyclomatic number {}, pendent vertices {:?}",
        g.cyclomatic_number(),
        g.pendent_vertices()
    );
    let base = g.base().unwrap();
    println!(
        "its base keeps vertices {:?} and is the triangle {}",
        base.vertex_map,
        base.graph.to_graph6().unwrap()
    );
}
