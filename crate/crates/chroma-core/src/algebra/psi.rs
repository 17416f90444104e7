use crate::arith::{rat, Laurent, Var};
use crate::planar::EmbeddedGraph;

use super::{ChromaticElement, PlanarPartition};

pub const PSI_EDGE_LIMIT: usize = 24;

/// State-sum expansion over subsets of the inner edges: each subset S
/// contributes a sign `(-1)^(E - |S|)`, a factor `Q^nullity`, and the basis
/// diagram induced by the boundary connectivity of the subgraph with all
/// vertices, all outer edges, and the inner edges of S. Subsets whose
/// connectivity would leave a boundary point alone correspond to diagrams
/// with a pendant interior vertex and contribute nothing.
pub fn psi_expansion(g: &EmbeddedGraph) -> Result<ChromaticElement, crate::graphs::GraphPolyError> {
    assert_eq!(g.n_bottom(), g.n_top(), "rectangle graphs have n/n boundary");
    let n = g.n_bottom();
    let g = g.delete_isolated().materialize_free_loops();
    let total_edges = g.num_edges();
    let inner: Vec<usize> = (0..g.num_darts())
        .filter(|&d| d < g.alpha(d) && g.is_inner_edge(d))
        .collect();
    if inner.len() > PSI_EDGE_LIMIT {
        return Err(crate::graphs::GraphPolyError::TooManyEdges(inner.len(), PSI_EDGE_LIMIT));
    }
    let outer: Vec<usize> = (0..g.num_darts())
        .filter(|&d| d < g.alpha(d) && !g.is_inner_edge(d))
        .collect();
    // Vertex ids: sigma orbits including the boundary stubs.
    let m = g.num_darts();
    let mut vertex_of = vec![usize::MAX; m];
    let mut v_count = 0usize;
    for d in 0..m {
        if vertex_of[d] != usize::MAX {
            continue;
        }
        let mut x = d;
        loop {
            vertex_of[x] = v_count;
            x = g.sigma(x);
            if x == d {
                break;
            }
        }
        v_count += 1;
    }
    let boundary_vertex: Vec<usize> = g.boundary().iter().map(|&b| vertex_of[b]).collect();
    let mut out = ChromaticElement::zero(n, Var::BigQ);
    for mask in 0u64..(1u64 << inner.len()) {
        let mut parent: Vec<usize> = (0..v_count).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let nxt = parent[c];
                parent[c] = r;
                c = nxt;
            }
            r
        }
        let mut edge_count = 0usize;
        let mut comps = v_count;
        let unite = |parent: &mut [usize], a: usize, b: usize, comps: &mut usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra] = rb;
                *comps -= 1;
            }
        };
        for &d in &outer {
            unite(&mut parent, vertex_of[d], vertex_of[g.alpha(d)], &mut comps);
            edge_count += 1;
        }
        for (i, &d) in inner.iter().enumerate() {
            if mask >> i & 1 == 1 {
                unite(&mut parent, vertex_of[d], vertex_of[g.alpha(d)], &mut comps);
                edge_count += 1;
            }
        }
        // nullity = E - V + C of the spanning subgraph
        let nullity = edge_count as i64 - v_count as i64 + comps as i64;
        // boundary partition induced by connectivity
        let mut blocks: std::collections::BTreeMap<usize, Vec<u8>> = Default::default();
        for (pos, &v) in boundary_vertex.iter().enumerate() {
            blocks.entry(find(&mut parent, v)).or_default().push(pos as u8);
        }
        if blocks.values().any(|b| b.len() < 2) {
            continue;
        }
        let part = PlanarPartition::new(n, blocks.into_values());
        let sign = if (total_edges - mask.count_ones() as usize) % 2 == 0 { 1 } else { -1 };
        out.add_term(part, Laurent::monomial(Var::BigQ, nullity, rat(sign)));
    }
    Ok(out)
}
