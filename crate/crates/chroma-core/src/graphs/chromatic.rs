use std::collections::HashMap;

use crate::arith::{Laurent, Var};
use crate::planar::EmbeddedGraph;

use super::{canonical_form, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphPolyError {
    #[error("edge count {0} exceeds the subset-enumeration limit {1}")]
    TooManyEdges(usize, usize),
    #[error("planar dual: {0}")]
    Dual(#[from] crate::planar::MapError),
}

/// Memo cache for deletion-contraction, keyed on canonical forms. Purely an
/// optimization: concurrent callers may each use their own cache.
#[derive(Default)]
pub struct ChromaticCache {
    memo: HashMap<Vec<u64>, Laurent>,
}

impl ChromaticCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

fn big_q() -> Laurent {
    Laurent::gen(Var::BigQ)
}

fn q_minus_1() -> Laurent {
    Laurent::gen(Var::BigQ) - Laurent::one(Var::BigQ)
}

/// Chromatic polynomial by deletion-contraction. Loops give zero, parallel
/// bundles collapse before recursion, components multiply, and the pivot
/// edge is chosen inside the largest biconnected block.
pub fn chromatic_delcon(g: &Multigraph, cache: &mut ChromaticCache) -> Laurent {
    if g.has_loop() {
        return Laurent::zero(Var::BigQ);
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut acc = Laurent::one(Var::BigQ);
        for comp in comps {
            acc = acc * chromatic_delcon(&g.induced(&comp), cache);
        }
        return acc;
    }
    let g = g.simplified();
    let n = g.num_vertices();
    if n == 0 {
        return Laurent::one(Var::BigQ);
    }
    // A connected simple graph with n-1 edges is a tree: Q(Q-1)^(n-1).
    if g.num_edges() + 1 == n {
        return big_q() * q_minus_1().pow((n - 1) as u32);
    }
    let key = canonical_form(&g);
    if let Some(hit) = cache.memo.get(&key) {
        return hit.clone();
    }
    // Pivot inside the largest biconnected block for fast convergence to
    // tree-like remainders.
    let blocks = g.biconnected_blocks();
    let pivot = blocks
        .iter()
        .max_by_key(|b| b.len())
        .and_then(|b| b.iter().min())
        .copied()
        .expect("a connected non-tree graph has a block with an edge");
    let result = chromatic_delcon(&g.delete_edge(pivot), cache)
        - chromatic_delcon(&g.contract_edge(pivot), cache);
    cache.memo.insert(key, result.clone());
    result
}

pub const RANKSUM_EDGE_LIMIT: usize = 24;

/// Chromatic polynomial as the rank-sum over edge subsets: the alternating
/// sum of `Q^(number of components)` over all spanning subgraphs.
pub fn chromatic_ranksum(g: &Multigraph) -> Result<Laurent, GraphPolyError> {
    let m = g.num_edges();
    if m > RANKSUM_EDGE_LIMIT {
        return Err(GraphPolyError::TooManyEdges(m, RANKSUM_EDGE_LIMIT));
    }
    let n = g.num_vertices();
    let edges = g.edges();
    let mut acc = Laurent::zero(Var::BigQ);
    for mask in 0u64..(1u64 << m) {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            while parent[x] != x {
                let p = parent[parent[x]];
                parent[x] = p;
                return find(parent, p);
            }
            x
        }
        let mut comps = n as i64;
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    comps -= 1;
                }
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        acc = acc + Laurent::monomial(Var::BigQ, comps, crate::arith::rat(sign));
    }
    Ok(acc)
}

/// Chromatic polynomial of the planar dual of a closed embedded graph.
pub fn dual_chromatic(
    g: &EmbeddedGraph,
    cache: &mut ChromaticCache,
) -> Result<Laurent, GraphPolyError> {
    let dual = g.dual()?;
    Ok(chromatic_delcon(&Multigraph::from_embedded(&dual), cache))
}

/// Count proper colorings with `k` colors by exhaustive assignment. Test
/// oracle only.
pub fn brute_force_colorings(g: &Multigraph, k: u64) -> u64 {
    let n = g.num_vertices();
    if k == 0 {
        return if n == 0 { 1 } else { 0 };
    }
    let mut assignment = vec![0u64; n];
    let mut count = 0u64;
    'outer: loop {
        let proper = g
            .edges()
            .iter()
            .all(|&(a, b)| assignment[a] != assignment[b]);
        if proper {
            count += 1;
        }
        for i in 0..n {
            assignment[i] += 1;
            if assignment[i] < k {
                continue 'outer;
            }
            assignment[i] = 0;
        }
        break;
    }
    count
}
