//! The two extremal families on the same vertex count share one signless
//! Laplacian characteristic polynomial, even though the graphs are not
//! isomorphic. This prints the exact polynomials and the shared SLEE value.
//!
//! Run with: cargo run --example cospectral_pair

use qspectra::canon::is_isomorphic;
use qspectra::exact::{are_q_cospectral, char_poly, signless_laplacian};
use qspectra::families::{build_h, build_s};
use qspectra::graph::TricyclicClass::{C6, C7};
use qspectra::spectral::{slee, DEFAULT_TOL};

fn main() {
    for n in 5..=10 {
        let h6 = build_h(C6, n).unwrap();
        let h7 = build_h(C7, n).unwrap();
        let p6 = char_poly(&signless_laplacian(&h6)).unwrap();
        assert!(are_q_cospectral(&h6, &h7));
        assert!(!is_isomorphic(&h6, &h7).unwrap());
        println!(
            "n = {n:2}: {} and {} are Q-cospectral, SLEE = {:.9}",
            h6.to_graph6().unwrap(),
            h7.to_graph6().unwrap(),
            slee(&h6, DEFAULT_TOL).unwrap().value,
        );
        if n == 5 {
            println!("        det(Q - xI) coefficients (constant first): {}", p6.to_json());
        }
    }

    // The bordered submatrices behind the shared polynomial.
    let s6 = char_poly(&build_s(C6).unwrap()).unwrap();
    let s7 = char_poly(&build_s(C7).unwrap()).unwrap();
    assert_eq!(s6, s7);
    println!("\nS_6 and S_7 share det(S - xI) = {}", s6.to_json());
}
