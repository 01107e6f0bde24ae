//! Canonical forms for graphs on up to 16 vertices.
//!
//! The canonical form is the lexicographically smallest adjacency bit-string
//! over all vertex permutations, with bits in graph6 column order, so the
//! canonical form doubles as a canonical graph6 encoding. The search is a
//! backtracking minimization: vertices are assigned to positions one at a
//! time, each new position appends one column of adjacency bits, and branches
//! whose partial string already exceeds the best known string are cut.
//! A neighborhood-refinement coloring orders the candidates so a near-minimal
//! string is found early, which is what makes the pruning effective; the
//! coloring never excludes a candidate, so the result is the true minimum.

use std::cmp::Ordering;

use crate::graph::{Graph, GraphError};

/// Largest order the canonizer accepts.
pub const MAX_CANON_VERTICES: usize = 16;

/// Canonical form of a graph: the minimal adjacency bit-string and one
/// permutation that achieves it.
///
/// Equality, ordering and hashing look at the bit-string only; the witness
/// permutation is whichever minimal relabeling the search found first.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
    perm: Vec<usize>,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for CanonicalForm {}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Packed adjacency bits of the canonical labeling, graph6 column order,
    /// most significant bit first.
    pub fn bits(&self) -> &[u64] {
        &self.bits
    }

    /// Relabeling that achieves the canonical form: vertex v of the original
    /// graph sits at position `permutation()[v]` of the canonical one.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// The canonically labeled graph itself.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for col in 1..self.n {
            for row in 0..col {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    edges.push((row, col));
                }
                k += 1;
            }
        }
        Graph::new(self.n, edges).unwrap()
    }

    /// graph6 string of the canonical labeling.
    pub fn canonical_graph6(&self) -> String {
        self.to_graph().to_graph6().expect("canonical form is within graph6 range")
    }
}

/// Canonical form of `g`; fails for n > 16.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(GraphError::TooLarge { n: g.n(), limit: MAX_CANON_VERTICES });
    }
    let mut rows = [0u16; MAX_CANON_VERTICES];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    Ok(canonical_form_rows(&rows[..g.n()]))
}

/// Canonical form straight from bitset adjacency rows (one row per vertex).
pub(crate) fn canonical_form_rows(rows: &[u16]) -> CanonicalForm {
    let n = rows.len();
    debug_assert!(n <= MAX_CANON_VERTICES);
    let (columns, perm) = canon_columns(rows);
    CanonicalForm { n, bits: pack_columns(n, &columns), perm }
}

/// Isomorphism test via canonical forms; fails for n > 16.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Pack per-position columns (column k holds k bits, bit for position 0 at
/// the most significant end) into the MSB-first stream CanonicalForm exposes.
fn pack_columns(n: usize, columns: &[u32]) -> Vec<u64> {
    let nbits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; nbits.div_ceil(64)];
    let mut k = 0;
    for (col, &val) in columns.iter().enumerate() {
        let width = col + 1;
        for i in 0..width {
            if val >> (width - 1 - i) & 1 == 1 {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Core minimization over bitset adjacency rows. Returns the per-position
/// columns of the minimal string (columns[k] is the column appended by
/// position k+1) and the permutation old vertex -> canonical position.
fn canon_columns(rows: &[u16]) -> (Vec<u32>, Vec<usize>) {
    let n = rows.len();
    if n <= 1 {
        return (Vec::new(), vec![0; n]);
    }
    let order = refinement_order(rows);
    let mut search = CanonSearch {
        rows,
        n,
        order: &order,
        chosen: Vec::with_capacity(n),
        used: 0,
        current: vec![0u32; n - 1],
        best: None,
        best_perm: Vec::new(),
        generation: 0,
    };
    search.descend(Ordering::Equal);
    let (columns, chosen) = (search.best.unwrap(), search.best_perm);
    let mut perm = vec![0usize; n];
    for (pos, &v) in chosen.iter().enumerate() {
        perm[v] = pos;
    }
    (columns, perm)
}

struct CanonSearch<'a> {
    rows: &'a [u16],
    n: usize,
    order: &'a [usize],
    chosen: Vec<usize>,
    used: u16,
    current: Vec<u32>,
    best: Option<Vec<u32>>,
    best_perm: Vec<usize>,
    /// Bumped whenever `best` is replaced, so ancestors notice that their
    /// prefix is now shared with the best string.
    generation: u64,
}

impl CanonSearch<'_> {
    /// Extend the partial assignment. `rel_in` compares the current prefix
    /// against the same-length prefix of the best string; Less also covers
    /// "no best string yet". Whenever a descendant replaces the best string,
    /// the new best runs through this node, so the prefix relation resets to
    /// Equal.
    fn descend(&mut self, rel_in: Ordering) {
        let depth = self.chosen.len();
        if depth == self.n {
            if rel_in == Ordering::Less {
                self.best = Some(self.current.clone());
                self.best_perm = self.chosen.clone();
                self.generation += 1;
            }
            return;
        }
        let mut rel = rel_in;
        let mut gen_seen = self.generation;
        let mut tried: Vec<usize> = Vec::new();
        for &cand in self.order {
            if self.used >> cand & 1 == 1 {
                continue;
            }
            if self.generation != gen_seen {
                gen_seen = self.generation;
                rel = Ordering::Equal;
            }
            // Twin skip: swapping two vertices whose rows agree outside the
            // pair is an automorphism fixing everything already placed, so a
            // candidate twinned with an earlier one spans the same strings.
            if tried.iter().any(|&t| {
                let m = !(1u16 << cand) & !(1u16 << t);
                self.rows[cand] & m == self.rows[t] & m
            }) {
                tried.push(cand);
                continue;
            }
            tried.push(cand);

            let column = {
                let mut c: u32 = 0;
                for &p in &self.chosen {
                    c = c << 1 | (self.rows[cand] >> p & 1) as u32;
                }
                c
            };
            let next_rel = match rel {
                Ordering::Less => Ordering::Less,
                _ if depth == 0 => rel,
                _ => match &self.best {
                    None => Ordering::Less,
                    Some(best) => column.cmp(&best[depth - 1]),
                },
            };
            if next_rel == Ordering::Greater {
                continue;
            }
            if depth > 0 {
                self.current[depth - 1] = column;
            }
            self.chosen.push(cand);
            self.used |= 1 << cand;
            self.descend(next_rel);
            self.used &= !(1 << cand);
            self.chosen.pop();
        }
    }
}

/// Candidate exploration order from iterated neighborhood refinement:
/// vertices are colored by degree, then repeatedly recolored by the multiset
/// of neighbor colors until stable. Pure heuristic; correctness of the
/// minimization does not depend on it.
fn refinement_order(rows: &[u16]) -> Vec<usize> {
    let n = rows.len();
    let mut colors: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    for _ in 0..n {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neigh: Vec<u32> = (0..n)
                .filter(|&w| rows[v] >> w & 1 == 1)
                .map(|w| colors[w])
                .collect();
            neigh.sort_unstable();
            sigs.push((colors[v], neigh));
        }
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let new_colors: Vec<u32> = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).unwrap() as u32)
            .collect();
        if new_colors == colors {
            break;
        }
        colors = new_colors;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    order
}
