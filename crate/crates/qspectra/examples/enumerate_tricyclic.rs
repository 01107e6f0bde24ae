//! Exhaustively enumerate the tricyclic graphs (connected, m = n + 2) on
//! small vertex counts, one canonical representative per isomorphism class,
//! split by the number of simple cycles.
//!
//! Run with: cargo run --release --example enumerate_tricyclic

use qspectra::search::TricyclicSearch;

fn main() {
    let mut search = TricyclicSearch::new();
    println!("{:>3} {:>8} {:>8} {:>8} {:>8} {:>8} {:>10}", "n", "total", "j=3", "j=4", "j=6", "j=7", "elapsed");
    for n in 4..=8 {
        let run = search.enumeration_run(n).expect("n within range");
        let count = |j: usize| run.class_counts.get(&j).copied().unwrap_or(0);
        println!(
            "{:>3} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}ms",
            n,
            run.total,
            count(3),
            count(4),
            count(6),
            count(7),
            run.elapsed_ms
        );
    }
    println!();
    let graphs = search.enumerate(5).unwrap();
    println!("the {} tricyclic graphs on 5 vertices, as canonical graph6:", graphs.len());
    for g in graphs.iter() {
        println!(
            "  {}  degrees {:?}, {} simple cycles",
            g.to_graph6().unwrap(),
            g.degrees(),
            g.count_simple_cycles()
        );
    }
}
