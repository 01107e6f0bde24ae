//! The neighbor-transfer machinery: finite-horizon walk dominance between
//! two vertices, and the transfer construction that rewires a set of
//! neighbors from a dominated vertex to a dominating one, strictly raising
//! the SLEE.
//!
//! Run with: cargo run --example transfer_dominance

use qspectra::graph::Graph;
use qspectra::spectral::{slee, DEFAULT_TOL};
use qspectra::walks::{apply_transfer, check_dominance, check_transfer_hypotheses};

fn main() {
    // Route: a star on 5 vertices with one extra edge (1, 2). Vertex 3 is a
    // plain leaf, so N(3) = {0} sits inside N(0) + {0} and 0 dominates 3.
    let route = Graph::new(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap();
    println!("transfer route: {}", route.to_graph6().unwrap());

    let horizon = 2 * route.n() + 8;
    let closed = check_dominance(&route, 3, 3, &route, 0, 0, horizon).unwrap();
    println!(
        "closed walks at 3 vs at 0: {:?} (first strict k = {:?}, horizon {})",
        closed.outcome, closed.first_strict_k, horizon
    );

    // Move vertex 5 (isolated in the route, adjacent to neither endpoint).
    let moved = [5];
    let hyp = check_transfer_hypotheses(&route, 3, 0, &moved, horizon).unwrap();
    println!("transfer hypotheses hold at horizon {horizon}: {}", hyp.hold());

    let (g_v, g_u) = apply_transfer(&route, 3, 0, &moved).unwrap();
    let slee_v = slee(&g_v, DEFAULT_TOL).unwrap().value;
    let slee_u = slee(&g_u, DEFAULT_TOL).unwrap().value;
    println!("SLEE with 5 attached to 3: {slee_v:.9}");
    println!("SLEE with 5 attached to 0: {slee_u:.9}");
    assert!(slee_v < slee_u);
    println!("attaching to the dominating endpoint wins by {:.3e}", slee_u - slee_v);
}
