//! Exact spectral moments and the two Estrada-type indices side by side.
//! T_k = Tr(Q^k) counts closed semi-edge walks of length k; the low orders
//! have closed forms in degrees and triangle counts.
//!
//! Run with: cargo run --example estrada_moments

use qspectra::exact::spectral_moments;
use qspectra::graph::Graph;
use qspectra::spectral::{estrada_index, slee, DEFAULT_TOL};

fn main() {
    let graphs = [
        ("K_4", Graph::complete(4)),
        ("C_5", Graph::cycle(5)),
        ("star on 6", Graph::star(6)),
        ("P_6", Graph::path(6)),
    ];
    for (name, g) in &graphs {
        let t = spectral_moments(g, 6);
        let moments: Vec<String> = t.as_slice().iter().map(|m| m.to_string()).collect();
        println!("{name}: T_0..T_6 = [{}]", moments.join(", "));

        let degs = g.degrees();
        let d2: usize = degs.iter().map(|d| d * d).sum();
        assert_eq!(t.get(2).to_string(), (d2 + 2 * g.m()).to_string());

        println!(
            "     SLEE = {:.9}   adjacency Estrada index = {:.9}",
            slee(g, DEFAULT_TOL).unwrap().value,
            estrada_index(g, DEFAULT_TOL).unwrap(),
        );
    }
}
