//! Semi-edge walk combinatorics.
//!
//! A semi-edge walk alternates vertices and edges, where consecutive
//! vertices only need to be endpoints of the incident edge; at each step the
//! walk picks an incident edge and then either stays on its current endpoint
//! or crosses to the other one. Walk counts between endpoints coincide with
//! entries of powers of the signless Laplacian, which this module exploits
//! (walk_table) and independently re-derives by explicit enumeration
//! (enumerate_walks) so each side can check the other.
//!
//! The dominance comparisons quantify over all walk lengths in the theory;
//! machine checks here run to a finite horizon and the verdicts say so.

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::{signless_laplacian, IntSymMatrix};
use crate::graph::{Graph, GraphError};

/// Guards for the explicit enumerator: counts grow like (2 * max degree)^k.
pub const ENUM_MAX_K: usize = 10;
pub const ENUM_MAX_N: usize = 10;

#[derive(Debug, Error)]
pub enum WalkError {
    #[error(
        "explicit enumeration is limited to n <= {ENUM_MAX_N} and k <= {ENUM_MAX_K} \
         (got n = {n}, k = {k}); use walk_table for larger instances"
    )]
    EnumerationGuard { n: usize, k: usize },
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("transfer endpoints must be distinct vertices")]
    TransferSameEndpoint,
    #[error("transferred vertex {w} violates the precondition: {reason}")]
    TransferPrecondition { w: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Count semi-edge walks of length k from x to y by explicit backtracking
/// over the edge choices at every step.
pub fn enumerate_walks(g: &Graph, k: usize, x: usize, y: usize) -> Result<u64, WalkError> {
    if g.n() > ENUM_MAX_N || k > ENUM_MAX_K {
        return Err(WalkError::EnumerationGuard { n: g.n(), k });
    }
    for v in [x, y] {
        if v >= g.n() {
            return Err(WalkError::VertexOutOfRange(v, g.n()));
        }
    }
    fn count(g: &Graph, v: usize, left: usize, y: usize) -> u64 {
        if left == 0 {
            return (v == y) as u64;
        }
        let mut total = 0;
        for &w in g.neighbors(v) {
            // edge vw chosen: stay on v or cross to w
            total += count(g, v, left - 1, y);
            total += count(g, w, left - 1, y);
        }
        total
    }
    Ok(count(g, x, k, y))
}

/// All walk counts of one length at once: the exact k-th power of Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTable {
    k: usize,
    counts: IntSymMatrix,
}

impl WalkTable {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn count(&self, x: usize, y: usize) -> &BigInt {
        self.counts.get(x, y)
    }

    /// Number of closed walks of length k, i.e. the spectral moment T_k.
    pub fn trace(&self) -> BigInt {
        self.counts.trace()
    }

    pub fn matrix(&self) -> &IntSymMatrix {
        &self.counts
    }
}

pub fn walk_table(g: &Graph, k: usize) -> WalkTable {
    WalkTable { k, counts: signless_laplacian(g).pow(k) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceOutcome {
    /// Counts never exceed the partner and are strictly below at some length.
    StrictlyDominates,
    /// Counts never exceed the partner.
    Dominates,
    /// Some length has a strictly larger count than the partner.
    Incomparable,
}

/// Finite-horizon comparison of two walk-count sequences. The verdict speaks
/// only about lengths up to the horizon; it is a surrogate for the all-length
/// relations of the theory, not a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceVerdict {
    pub horizon: usize,
    pub outcome: DominanceOutcome,
    pub first_strict_k: Option<usize>,
    pub first_violation_k: Option<usize>,
}

impl DominanceVerdict {
    /// No violation up to the horizon (the finite-horizon analogue of <=).
    pub fn dominates(&self) -> bool {
        self.first_violation_k.is_none()
    }

    /// Dominates with at least one strict inequality.
    pub fn strictly_dominates(&self) -> bool {
        self.outcome == DominanceOutcome::StrictlyDominates
    }
}

/// Compare walk counts from (g; x, y) against (h; u, v) for k = 0..=horizon.
pub fn check_dominance(
    g: &Graph,
    x: usize,
    y: usize,
    h: &Graph,
    u: usize,
    v: usize,
    horizon: usize,
) -> Result<DominanceVerdict, WalkError> {
    for (vert, graph) in [(x, g), (y, g), (u, h), (v, h)] {
        if vert >= graph.n() {
            return Err(WalkError::VertexOutOfRange(vert, graph.n()));
        }
    }
    let qg = signless_laplacian(g);
    let qh = signless_laplacian(h);
    let mut pg = IntSymMatrix::identity(g.n());
    let mut ph = IntSymMatrix::identity(h.n());
    let mut first_strict_k = None;
    let mut first_violation_k = None;
    for k in 0..=horizon {
        if k > 0 {
            pg = pg.mul(&qg);
            ph = ph.mul(&qh);
        }
        let (cg, ch) = (pg.get(x, y), ph.get(u, v));
        if cg < ch && first_strict_k.is_none() {
            first_strict_k = Some(k);
        }
        if cg > ch && first_violation_k.is_none() {
            first_violation_k = Some(k);
        }
        if first_strict_k.is_some() && first_violation_k.is_some() {
            break;
        }
    }
    let outcome = if first_violation_k.is_some() {
        DominanceOutcome::Incomparable
    } else if first_strict_k.is_some() {
        DominanceOutcome::StrictlyDominates
    } else {
        DominanceOutcome::Dominates
    };
    Ok(DominanceVerdict { horizon, outcome, first_strict_k, first_violation_k })
}

/// The transfer construction: from a route graph and a set of vertices to
/// move, build the pair (G_v, G_u) where G_v joins every moved vertex to
/// `from` and G_u joins them to `to`. Requires that none of the new edges
/// already exist.
pub fn apply_transfer(
    g: &Graph,
    from: usize,
    to: usize,
    moved: &[usize],
) -> Result<(Graph, Graph), WalkError> {
    if from == to {
        return Err(WalkError::TransferSameEndpoint);
    }
    for v in [from, to] {
        if v >= g.n() {
            return Err(WalkError::VertexOutOfRange(v, g.n()));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for &w in moved {
        if w >= g.n() {
            return Err(WalkError::VertexOutOfRange(w, g.n()));
        }
        if w == from || w == to {
            return Err(WalkError::TransferPrecondition {
                w,
                reason: "coincides with a transfer endpoint".into(),
            });
        }
        if !seen.insert(w) {
            return Err(WalkError::TransferPrecondition { w, reason: "listed twice".into() });
        }
        for (end, name) in [(from, "from"), (to, "to")] {
            if g.has_edge(end, w) {
                return Err(WalkError::TransferPrecondition {
                    w,
                    reason: format!("edge to `{name}` endpoint {end} already present"),
                });
            }
        }
    }
    let g_v = g.with_edges_added(moved.iter().map(|&w| (from, w)))?;
    let g_u = g.with_edges_added(moved.iter().map(|&w| (to, w)))?;
    Ok((g_v, g_u))
}

/// Finite-horizon check of the transfer-lemma hypotheses on a route graph:
/// closed walks at `from` strictly dominated by closed walks at `to`, and for
/// every moved vertex w the (w, from) counts dominated by the (w, to) ones.
#[derive(Debug, Clone)]
pub struct TransferHypotheses {
    pub closed_pair: DominanceVerdict,
    pub per_moved: Vec<DominanceVerdict>,
}

impl TransferHypotheses {
    pub fn hold(&self) -> bool {
        self.closed_pair.strictly_dominates() && self.per_moved.iter().all(|v| v.dominates())
    }
}

pub fn check_transfer_hypotheses(
    route: &Graph,
    from: usize,
    to: usize,
    moved: &[usize],
    horizon: usize,
) -> Result<TransferHypotheses, WalkError> {
    let closed_pair = check_dominance(route, from, from, route, to, to, horizon)?;
    let per_moved = moved
        .iter()
        .map(|&w| check_dominance(route, w, from, route, w, to, horizon))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TransferHypotheses { closed_pair, per_moved })
}
