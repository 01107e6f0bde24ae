//! Shared test oracles: independent reference implementations that the
//! library is checked against. Everything here favors obviousness over
//! speed and avoids the code paths under test.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;

use qspectra::exact::{poly, CharPoly, IntSymMatrix};
use qspectra::graph::Graph;

/// Reference graph6 decoder: builds the flat bit vector first and maps bit
/// index k to its edge through the closed form for the column boundaries,
/// rather than walking columns the way the library does.
pub fn reference_parse_graph6(s: &str) -> Graph {
    let bytes = s.trim_end().as_bytes();
    let n = (bytes[0] - 63) as usize;
    let mut bits = Vec::new();
    for &b in &bytes[1..] {
        let v = b - 63;
        for i in (0..6).rev() {
            bits.push(v >> i & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    for (k, &set) in bits.iter().take(n * n.saturating_sub(1) / 2).enumerate() {
        if !set {
            continue;
        }
        // col is the largest c with c(c-1)/2 <= k.
        let mut col = 1;
        while (col + 1) * col / 2 <= k {
            col += 1;
        }
        let row = k - col * (col - 1) / 2;
        edges.push((row, col));
    }
    Graph::new(n, edges).expect("reference decode")
}

/// Every permutation of 0..n, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, arr: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(arr.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, out);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    let mut arr: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut arr, &mut out);
    out
}

/// Brute-force isomorphism: try every vertex bijection.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    permutations(g.n()).iter().any(|perm| {
        g.edges()
            .iter()
            .all(|&(u, v)| h.has_edge(perm[u], perm[v]))
    })
}

/// Brute-force canonical graph6: relabel by every permutation and keep the
/// lexicographically smallest encoding.
pub fn brute_force_canonical_graph6(g: &Graph) -> String {
    permutations(g.n())
        .iter()
        .map(|perm| g.relabel(perm).to_graph6().expect("small graph"))
        .min()
        .expect("at least the identity permutation")
}

/// Naive tricyclic enumeration for n <= 6: filter every edge subset of K_n
/// of size n + 2 for connectivity, then deduplicate by the brute-force
/// canonical form. Returns the sorted canonical graph6 registry.
pub fn naive_tricyclic_registry(n: usize) -> Vec<String> {
    assert!(n <= 6, "the naive oracle enumerates all C(n(n-1)/2, n+2) subsets");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = pairs.len();
    let m = n + 2;
    let mut registry = std::collections::BTreeSet::new();
    if m > total {
        return Vec::new();
    }
    // Gosper's hack over m-subsets of the edge set.
    let mut subset: u32 = (1 << m) - 1;
    let limit: u32 = 1 << total;
    while subset < limit {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).expect("subset of K_n");
        if g.is_connected() {
            registry.insert(brute_force_canonical_graph6(&g));
        }
        let c = subset & subset.wrapping_neg();
        let r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
    registry.into_iter().collect()
}

/// Characteristic polynomial oracle: fraction-free (Bareiss) elimination
/// over the polynomial ring, entirely separate from the trace recursion the
/// library uses. Returns det(M - xI) with coefficients ascending.
pub fn bareiss_char_poly(m: &IntSymMatrix) -> CharPoly {
    let n = m.order();
    assert!(n >= 1);
    // Entries of M - xI as polynomials.
    let mut a: Vec<Vec<Vec<BigInt>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = vec![m.get(i, j).clone()];
                    if i == j {
                        p.push(-BigInt::one());
                    }
                    poly::trim(p)
                })
                .collect()
        })
        .collect();
    let mut prev_pivot: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n - 1 {
        assert!(!poly::is_zero(&a[k][k]), "leading minors of M - xI never vanish");
        for i in k + 1..n {
            for j in k + 1..n {
                let num = poly::sub(
                    &poly::mul(&a[k][k], &a[i][j]),
                    &poly::mul(&a[i][k], &a[k][j]),
                );
                a[i][j] = exact_poly_div(&num, &prev_pivot);
            }
        }
        prev_pivot = a[k][k].clone();
    }
    CharPoly::from_coeffs(a[n - 1][n - 1].clone())
}

/// Exact polynomial long division, panicking on a nonzero remainder.
fn exact_poly_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let den = poly::trim(den.to_vec());
    assert!(!poly::is_zero(&den), "division by the zero polynomial");
    let mut rem = poly::trim(num.to_vec());
    if poly::is_zero(&rem) {
        return vec![BigInt::zero()];
    }
    let dd = den.len() - 1;
    let lead = den.last().expect("nonempty").clone();
    assert!(rem.len() > dd, "degree of numerator below denominator");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for shift in (0..quot.len()).rev() {
        let coeff = rem[shift + dd].clone();
        if coeff.is_zero() {
            continue;
        }
        let q = &coeff / &lead;
        assert_eq!(&q * &lead, coeff, "division must be exact");
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &q * d;
        }
        quot[shift] = q;
    }
    assert!(poly::is_zero(&rem), "remainder must vanish");
    poly::trim(quot)
}

/// Erdos-Renyi graph with edge probability p.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p));
    Graph::new(n, edges).expect("random subset of K_n")
}

/// Number of triangles, counted directly over vertex triples.
pub fn triangle_count(g: &Graph) -> usize {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    count += 1;
                }
            }
        }
    }
    count
}
