use std::collections::HashMap;

use crate::arith::{Laurent, Var};
use crate::graphs::ChromaticCache;
use crate::planar::{CanonKey, EmbeddedGraph};

use super::{ChromaticElement, PlanarPartition};

/// Rewrites embedded rectangle graphs into the planar-partition basis using
/// the local relations: an interior 1-valent vertex kills the graph, an
/// inner loop edge contributes a factor of Q-1, and an inner non-loop edge
/// splits as contraction minus deletion. Memoized on canonical map form.
pub struct Reducer {
    memo: HashMap<CanonKey, ChromaticElement>,
    memo_signed: HashMap<CanonKey, ChromaticElement>,
    /// Shared chromatic-polynomial cache for trace computations.
    pub chromatic: ChromaticCache,
}

impl Default for Reducer {
    fn default() -> Self {
        Self::new()
    }
}

impl Reducer {
    pub fn new() -> Self {
        Reducer {
            memo: HashMap::new(),
            memo_signed: HashMap::new(),
            chromatic: ChromaticCache::new(),
        }
    }

    /// Reduce a rectangle graph to an element over `Q`.
    pub fn reduce(&mut self, g: &EmbeddedGraph) -> ChromaticElement {
        self.reduce_impl(g, false)
    }

    /// Reduction in the sign convention of the state-sum expansion: each
    /// smoothing that merges two boundary-to-boundary edges costs a factor
    /// of -1. On diagrams whose reduction never subdivides a boundary arc
    /// this agrees with `reduce`.
    pub fn reduce_signed(&mut self, g: &EmbeddedGraph) -> ChromaticElement {
        self.reduce_impl(g, true)
    }

    fn reduce_impl(&mut self, g: &EmbeddedGraph, signed: bool) -> ChromaticElement {
        assert_eq!(g.n_bottom(), g.n_top(), "rectangle graphs have n/n boundary");
        let mut g = g.delete_isolated();
        let mut factor = Laurent::one(Var::BigQ);
        let q_minus_1 = Laurent::gen(Var::BigQ) - Laurent::one(Var::BigQ);
        // Circles disconnected from the rest contribute Q-1 each.
        if g.free_loops() > 0 {
            factor = factor * q_minus_1.pow(g.free_loops() as u32);
            g = g.without_free_loops();
        }
        if has_interior_pendant(&g) {
            return ChromaticElement::zero(g.n_bottom(), Var::BigQ);
        }
        let (smoothed, outer_merges) = g.smooth_two_valent_counted();
        if signed && outer_merges % 2 == 1 {
            factor = -factor;
        }
        if smoothed.free_loops() > 0 {
            factor = factor * q_minus_1.pow(smoothed.free_loops() as u32);
        }
        let g = smoothed.without_free_loops();
        let key = g.canonical_key();
        let memo = if signed { &self.memo_signed } else { &self.memo };
        if let Some(hit) = memo.get(&key) {
            return hit.scale(&factor);
        }
        let result = self.reduce_core(&g, &q_minus_1, signed);
        let memo = if signed { &mut self.memo_signed } else { &mut self.memo };
        memo.insert(key, result.clone());
        result.scale(&factor)
    }

    fn reduce_core(&mut self, g: &EmbeddedGraph, q_minus_1: &Laurent, signed: bool) -> ChromaticElement {
        // Loop edges first, then the first inner edge in dart order.
        let mut loop_dart = None;
        let mut inner_dart = None;
        for d in 0..g.num_darts() {
            if d < g.alpha(d) && g.is_inner_edge(d) {
                if g.is_loop_edge(d) {
                    loop_dart = Some(d);
                    break;
                }
                if inner_dart.is_none() {
                    inner_dart = Some(d);
                }
            }
        }
        if let Some(d) = loop_dart {
            let rest = g.delete_edge(d).expect("inner edge");
            return self.reduce_impl(&rest, signed).scale(q_minus_1);
        }
        if let Some(d) = inner_dart {
            let contracted = self.reduce_impl(&g.contract_edge(d).expect("non-loop inner edge"), signed);
            let deleted = self.reduce_impl(&g.delete_edge(d).expect("inner edge"), signed);
            return contracted.sub(&deleted);
        }
        // Terminal graph: only outer edges remain, so each interior vertex is
        // a star on its boundary points and each arc joins two of them.
        ChromaticElement::from_partition(terminal_partition(g), Var::BigQ)
    }
}

fn has_interior_pendant(g: &EmbeddedGraph) -> bool {
    (0..g.num_darts()).any(|d| !g.is_stub(d) && g.sigma(d) == d)
}

/// Read the boundary partition off a graph with no inner edges.
pub(super) fn terminal_partition(g: &EmbeddedGraph) -> PlanarPartition {
    let n = g.n_bottom();
    debug_assert_eq!(g.free_loops(), 0);
    debug_assert_eq!(g.isolated_vertices(), 0);
    let boundary = g.boundary();
    let position_of = |d: usize| boundary.iter().position(|&b| b == d).expect("stub dart");
    let mut blocks: Vec<Vec<u8>> = Vec::new();
    let mut in_star = vec![false; g.num_darts()];
    for v in g.vertices() {
        let mut block = Vec::new();
        for &d in &v {
            let mate = g.alpha(d);
            assert!(g.is_stub(mate), "terminal graph has only outer edges");
            in_star[d] = true;
            in_star[mate] = true;
            block.push(position_of(mate) as u8);
        }
        blocks.push(block);
    }
    for (d, dd) in g.edges() {
        if !in_star[d] {
            // boundary-to-boundary arc
            blocks.push(vec![position_of(d) as u8, position_of(dd) as u8]);
        }
    }
    PlanarPartition::new(n, blocks)
}
