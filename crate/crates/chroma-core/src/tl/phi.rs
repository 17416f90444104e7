use crate::arith::{rat, Laurent, Var};
use crate::planar::EmbeddedGraph;

use super::{TLDiagram, TLElement};

pub const PHI_EDGE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PhiError {
    #[error("edge count {0} exceeds the doubling limit {1}")]
    TooManyEdges(usize, usize),
    #[error("boundary counts differ")]
    Boundary,
}

/// Doubling homomorphism into the Temperley-Lieb algebra on twice the
/// strands. Each edge is replaced by the two-strand projector, each r-valent
/// vertex contributes d^((r-2)/2), and each boundary point becomes two
/// adjacent points. The expansion runs over edge subsets S: a kept edge
/// contributes the two parallel sides of its band, a cut edge contributes a
/// turn-back at each end, and the resulting curves are the boundary of the
/// ribbon neighborhood of the subgraph. Closed curves weigh d each; open
/// ones assemble the matching.
pub fn phi(g: &EmbeddedGraph) -> Result<TLElement, PhiError> {
    if g.n_bottom() != g.n_top() {
        return Err(PhiError::Boundary);
    }
    let n = g.n_bottom();
    let g = g.delete_isolated().materialize_free_loops();
    let edges = g.edges();
    if edges.len() > PHI_EDGE_LIMIT {
        return Err(PhiError::TooManyEdges(edges.len(), PHI_EDGE_LIMIT));
    }
    // Total vertex factor: d^(sum (r-2) / 2) over interior vertices.
    let vertex_exp_doubled: i64 = g
        .vertices()
        .iter()
        .map(|v| v.len() as i64 - 2)
        .sum();
    assert!(vertex_exp_doubled % 2 == 0, "vertex valences sum to an even excess");
    let vertex_exp = vertex_exp_doubled / 2;

    // Side endpoints: left(d) = 2d, right(d) = 2d+1, where left is the side
    // swept counterclockwise from the dart. Static connections along the
    // vertex-disk boundaries join left(d) to right(sigma(d)).
    let m = g.num_darts();
    let side_l = |d: usize| 2 * d;
    let side_r = |d: usize| 2 * d + 1;
    let mut static_link = vec![usize::MAX; 2 * m];
    for d in 0..m {
        if !g.is_stub(d) {
            let (a, b) = (side_l(d), side_r(g.sigma(d)));
            static_link[a] = b;
            static_link[b] = a;
        }
    }
    // TL positions of the stub sides, in the 2n-strand circular order.
    let mut tl_pos = vec![usize::MAX; 2 * m];
    for (idx, &b) in g.boundary().iter().enumerate() {
        if idx < n {
            tl_pos[side_l(b)] = 2 * idx;
            tl_pos[side_r(b)] = 2 * idx + 1;
        } else {
            let geo = 2 * n - 1 - idx; // 0-based from the left
            tl_pos[side_l(b)] = 4 * n - 2 - 2 * geo;
            tl_pos[side_r(b)] = 4 * n - 1 - 2 * geo;
        }
    }
    let mut out = TLElement::zero(2 * n);
    let e_count = edges.len();
    for mask in 0u64..(1u64 << e_count) {
        let mut edge_link = vec![usize::MAX; 2 * m];
        for (i, &(d, dd)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                // band kept: the two parallel sides
                edge_link[side_l(d)] = side_r(dd);
                edge_link[side_r(dd)] = side_l(d);
                edge_link[side_r(d)] = side_l(dd);
                edge_link[side_l(dd)] = side_r(d);
            } else {
                // band cut: turn back around each end
                edge_link[side_l(d)] = side_r(d);
                edge_link[side_r(d)] = side_l(d);
                edge_link[side_l(dd)] = side_r(dd);
                edge_link[side_r(dd)] = side_l(dd);
            }
        }
        // Walk the curves: terminals are the stub sides.
        let mut visited = vec![false; 2 * m];
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for start in 0..2 * m {
            if tl_pos[start] == usize::MAX || visited[start] {
                continue;
            }
            visited[start] = true;
            // leave along the edge link first
            let mut p = edge_link[start];
            loop {
                visited[p] = true;
                if tl_pos[p] != usize::MAX {
                    pairs.push((tl_pos[start].min(tl_pos[p]), tl_pos[start].max(tl_pos[p])));
                    break;
                }
                let q = static_link[p];
                visited[q] = true;
                p = edge_link[q];
            }
        }
        let mut circles = 0i64;
        for start in 0..2 * m {
            if visited[start] || static_link[start] == usize::MAX {
                continue;
            }
            circles += 1;
            let mut p = start;
            loop {
                visited[p] = true;
                let q = edge_link[p];
                visited[q] = true;
                p = static_link[q];
                if p == start {
                    break;
                }
            }
        }
        let cut = (e_count - mask.count_ones() as usize) as i64;
        let coeff = Laurent::monomial(
            Var::D,
            vertex_exp + circles - cut,
            rat(if cut % 2 == 0 { 1 } else { -1 }),
        );
        out.add_term(TLDiagram::new(2 * n, pairs), coeff);
    }
    Ok(out)
}

/// Apply the homomorphism to an element of the chromatic algebra: basis
/// diagrams are drawn canonically and doubled; coefficients convert via
/// Q = d^2.
pub fn phi_element(e: &crate::algebra::ChromaticElement) -> Result<TLElement, PhiError> {
    let mut out = TLElement::zero(2 * e.strands());
    for (p, c) in e.terms() {
        let img = phi(&p.draw())?;
        let cd = c.substitute(Var::D).expect("Q converts to d");
        out = out.add(&img.scale(&cd));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_basis, multiply, reflect, trace, ChromaticElement, Reducer};
    use crate::planar::random::{random_rectangle_graph, GrowthConfig};
    use crate::planar::MapBuilder;
    use crate::tl::{jones_wenzl_p2, tl_multiply, tl_trace};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn strand_maps_to_projector() {
        let strand = MapBuilder::new().bottom([1]).top([1]).build().unwrap();
        assert_eq!(phi(&strand).unwrap(), jones_wenzl_p2(1, 2));
    }

    #[test]
    fn free_circle_maps_to_d2_minus_1() {
        let circle = crate::planar::EmbeddedGraph::closed_trivial(1, 0);
        let img = phi(&circle).unwrap();
        let empty = TLDiagram::identity(0);
        let expect = Laurent::from_terms(Var::D, [(2, rat(1)), (0, rat(-1))]);
        assert_eq!(img.coeff(&empty), expect);
    }

    #[test]
    fn four_valent_vertex_carries_factor_d() {
        let x = MapBuilder::new()
            .bottom([1, 2])
            .top([4, 3])
            .vertex([1, 2, 3, 4])
            .build()
            .unwrap();
        let img = phi(&x).unwrap();
        // the all-bands term keeps the spine; its coefficient is exactly d
        let leading = img
            .terms()
            .map(|(_, c)| c.max_exp().unwrap_or(i64::MIN))
            .max()
            .unwrap();
        assert_eq!(leading, 1);
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> crate::planar::EmbeddedGraph {
        let cfg = GrowthConfig { moves: 4, pendant_percent: 10, free_loop_percent: 10 };
        random_rectangle_graph(rng, n, &cfg)
    }

    #[test]
    fn respects_local_relations() {
        // contraction-deletion, the loop factor, and pendant vanishing
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        let d2_minus_1 = Laurent::from_terms(Var::D, [(2, rat(1)), (0, rat(-1))]);
        let mut tested_delcon = 0;
        let mut tested_loop = 0;
        while tested_delcon < 12 || tested_loop < 6 {
            let n = rng.gen_range(0..3);
            let g = random_graph(&mut rng, n).materialize_free_loops();
            for d in 0..g.num_darts() {
                if d < g.alpha(d) && g.is_inner_edge(d) {
                    if g.is_loop_edge(d) && tested_loop < 12 {
                        let lhs = phi(&g).unwrap();
                        let rest = phi(&g.delete_edge(d).unwrap()).unwrap();
                        assert_eq!(lhs, rest.scale(&d2_minus_1));
                        tested_loop += 1;
                        break;
                    } else if !g.is_loop_edge(d) && tested_delcon < 24 {
                        let lhs = phi(&g).unwrap();
                        let con = phi(&g.contract_edge(d).unwrap()).unwrap();
                        let del = phi(&g.delete_edge(d).unwrap()).unwrap();
                        assert_eq!(lhs, con.sub(&del));
                        tested_delcon += 1;
                        break;
                    }
                }
            }
        }
        // pendant vertices vanish
        let pendant = MapBuilder::new()
            .bottom([1])
            .top([2])
            .vertex([1, 3, 2])
            .vertex([3])
            .build()
            .unwrap();
        assert!(phi(&pendant).unwrap().is_zero());
    }

    #[test]
    fn multiplicative_on_basis_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(92);
        let mut red = Reducer::new();
        for n in 1..3usize {
            let basis = enumerate_basis(n);
            for _ in 0..6 {
                let a = ChromaticElement::from_partition(
                    basis[rng.gen_range(0..basis.len())].clone(),
                    Var::BigQ,
                );
                let b = ChromaticElement::from_partition(
                    basis[rng.gen_range(0..basis.len())].clone(),
                    Var::BigQ,
                );
                let prod = multiply(&mut red, &a, &b);
                let lhs = phi_element(&prod).unwrap();
                let rhs = tl_multiply(&phi_element(&a).unwrap(), &phi_element(&b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trace_intertwining() {
        // tl_trace(phi(G)) equals the chromatic trace of the reduction,
        // converted by Q = d^2
        let mut red = Reducer::new();
        for n in 0..4usize {
            for b in enumerate_basis(n) {
                let g = b.draw();
                let lhs = tl_trace(&phi(&g).unwrap());
                let e = red.reduce(&g);
                let rhs = trace(&mut red, &e).substitute(Var::D).unwrap();
                assert_eq!(lhs, rhs, "basis diagram {b}");
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(93);
        for _ in 0..20 {
            let n = rng.gen_range(0..3);
            let g = random_graph(&mut rng, n);
            let lhs = tl_trace(&phi(&g).unwrap());
            let e = red.reduce(&g);
            let rhs = trace(&mut red, &e).substitute(Var::D).unwrap();
            assert_eq!(lhs, rhs, "graph:\n{g}");
        }
        // the reflection symmetry of the pairing carries over
        let a = ChromaticElement::from_partition(
            crate::algebra::PlanarPartition::new(2, [vec![0, 1], vec![2, 3]]),
            Var::BigQ,
        );
        let refl = reflect(&a);
        assert_eq!(
            tl_trace(&phi_element(&refl).unwrap()),
            tl_trace(&phi_element(&a).unwrap())
        );
    }
}
