//! Seeded random planar maps, grown by local moves that preserve genus zero.

use rand::Rng;

use super::map::EmbeddedGraph;

/// Faces of the compactified map as orbits of `sigma . alpha`, with the
/// infinity vertex spliced in for rectangle graphs.
fn face_orbits_with_infinity(g: &EmbeddedGraph) -> Vec<Vec<usize>> {
    let sigma = g.sigma_with_infinity();
    let m = g.num_darts();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for d in 0..m {
        if seen[d] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = d;
        loop {
            seen[x] = true;
            orbit.push(x);
            x = sigma[g.alpha(x)];
            if x == d {
                break;
            }
        }
        out.push(orbit);
    }
    out
}

impl EmbeddedGraph {
    /// Insert a new edge across a face, between the corners just before the
    /// face darts `d1` and `d2` (which must lie on the same face and at
    /// interior vertices). With `d1 == d2` this adds a trivial loop.
    fn insert_face_edge(&self, d1: usize, d2: usize) -> EmbeddedGraph {
        let mut g = self.clone();
        let u = g.alpha.len();
        let w = u + 1;
        g.alpha.extend([w, u]);
        g.stub.extend([false, false]);
        g.sigma.extend([0, 0]);
        if d1 == d2 {
            // prev -> u -> w -> d1
            let prev = prev_in_rotation(&g.sigma[..u], d1);
            g.sigma[u] = w;
            g.sigma[w] = d1;
            g.sigma[prev] = u;
        } else {
            let p1 = prev_in_rotation(&g.sigma[..u], d1);
            let p2 = prev_in_rotation(&g.sigma[..u], d2);
            g.sigma[u] = d1;
            g.sigma[p1] = u;
            g.sigma[w] = d2;
            g.sigma[p2] = w;
        }
        g
    }

    /// Subdivide the edge at dart `d` with a new 2-valent vertex.
    fn subdivide_edge(&self, d: usize) -> EmbeddedGraph {
        let mut g = self.clone();
        let dd = g.alpha[d];
        let x = g.alpha.len();
        let y = x + 1;
        g.alpha[d] = x;
        g.alpha.push(d); // x
        g.alpha.push(dd); // y
        g.alpha[dd] = y;
        g.sigma.extend([y, x]);
        g.sigma[x] = y;
        g.sigma[y] = x;
        g.stub.extend([false, false]);
        g
    }

    /// Attach a pendant edge to a fresh 1-valent vertex at the corner before
    /// face dart `d`.
    fn attach_pendant(&self, d: usize) -> EmbeddedGraph {
        let mut g = self.clone();
        let u = g.alpha.len();
        let w = u + 1;
        g.alpha.extend([w, u]);
        g.stub.extend([false, false]);
        let prev = prev_in_rotation(&g.sigma, d);
        g.sigma.extend([0, 0]);
        g.sigma[u] = d;
        g.sigma[prev] = u;
        g.sigma[w] = w;
        g
    }
}

fn prev_in_rotation(sigma: &[usize], d: usize) -> usize {
    let mut x = d;
    while sigma[x] != d {
        x = sigma[x];
    }
    x
}

#[derive(Debug, Clone)]
pub struct GrowthConfig {
    /// Number of edge-adding moves.
    pub moves: usize,
    /// Chance (out of 100) that a move attaches a pendant edge instead of a
    /// face edge; pendants make the element vanish in the chromatic algebra.
    pub pendant_percent: u32,
    /// Chance (out of 100) of dropping in a free loop.
    pub free_loop_percent: u32,
}

impl Default for GrowthConfig {
    fn default() -> Self {
        GrowthConfig { moves: 4, pendant_percent: 0, free_loop_percent: 10 }
    }
}

/// Grow a random rectangle graph with `n` strands: start from a random
/// noncrossing pairing of the boundary drawn as arcs and apply local moves.
pub fn random_rectangle_graph<R: Rng>(rng: &mut R, n: usize, cfg: &GrowthConfig) -> EmbeddedGraph {
    let mut g = random_strand_diagram(rng, n);
    for _ in 0..cfg.moves {
        g = random_move(rng, &g, cfg);
    }
    debug_assert!(g.validate().is_ok());
    g
}

/// Random closed sphere graph: grow in a rectangle with no boundary points.
pub fn random_sphere_graph<R: Rng>(rng: &mut R, edges: usize) -> EmbeddedGraph {
    // Seed with a circle materialized as a loop vertex so faces exist.
    let mut g = EmbeddedGraph::closed_trivial(1, 0).materialize_free_loops();
    let cfg = GrowthConfig { moves: 0, pendant_percent: 5, free_loop_percent: 0 };
    while g.num_edges() < edges {
        g = random_move(rng, &g, &cfg);
    }
    debug_assert!(g.validate().is_ok());
    g
}

fn random_move<R: Rng>(rng: &mut R, g: &EmbeddedGraph, cfg: &GrowthConfig) -> EmbeddedGraph {
    if rng.gen_range(0..100) < cfg.free_loop_percent {
        return g.add_free_loops(1);
    }
    let roll = rng.gen_range(0..100u32);
    // Subdivision keeps things planar and grows chains.
    if roll < 25 && g.num_edges() > 0 {
        let edges = g.edges();
        let (d, _) = edges[rng.gen_range(0..edges.len())];
        return g.subdivide_edge(d);
    }
    let faces = face_orbits_with_infinity(g);
    let interior_corners: Vec<(usize, usize)> = faces
        .iter()
        .enumerate()
        .flat_map(|(f, orbit)| {
            orbit
                .iter()
                .filter(|&&d| !g.is_stub(d))
                .map(move |&d| (f, d))
                .collect::<Vec<_>>()
        })
        .collect();
    if interior_corners.is_empty() {
        // Nothing to attach to yet; drop in a circle and try again later.
        return g.materialize_free_loops_one();
    }
    let (f, d1) = interior_corners[rng.gen_range(0..interior_corners.len())];
    if roll >= 25 && roll < 25 + cfg.pendant_percent {
        return g.attach_pendant(d1);
    }
    let same_face: Vec<usize> = faces[f]
        .iter()
        .copied()
        .filter(|&d| !g.is_stub(d))
        .collect();
    let d2 = same_face[rng.gen_range(0..same_face.len())];
    let out = g.insert_face_edge(d1, d2);
    debug_assert!(out.validate().is_ok(), "face edge insertion broke planarity");
    out
}

impl EmbeddedGraph {
    fn materialize_free_loops_one(&self) -> EmbeddedGraph {
        self.add_free_loops(1).materialize_free_loops()
    }
}

/// Random noncrossing pairing of the 2n boundary points, drawn with arcs.
fn random_strand_diagram<R: Rng>(rng: &mut R, n: usize) -> EmbeddedGraph {
    // Build a random balanced pairing of positions 0..2n on the circle.
    let mut pairing = vec![usize::MAX; 2 * n];
    let mut stack = Vec::new();
    // Random noncrossing matchings via random balanced parentheses.
    let mut opens = n;
    let mut closes = n;
    for pos in 0..2 * n {
        let can_close = !stack.is_empty() && closes > 0;
        let must_close = opens == 0;
        if must_close || (can_close && rng.gen_bool(0.5)) {
            let open = stack.pop().unwrap();
            pairing[open] = pos;
            pairing[pos] = open;
            closes -= 1;
        } else {
            stack.push(pos);
            opens -= 1;
        }
    }
    // Positions are circular indices; translate to builder rows.
    let mut builder = super::MapBuilder::new();
    let mut bottom = vec![0usize; n];
    let mut top = vec![0usize; n];
    let mut label = 1usize;
    for p in 0..2 * n {
        if pairing[p] > p {
            let q = pairing[p];
            for pos in [p, q] {
                if pos < n {
                    bottom[pos] = label;
                } else {
                    // circular index n..2n runs right to left along the top
                    top[2 * n - 1 - pos] = label;
                }
            }
            label += 1;
        }
    }
    builder = builder.bottom(bottom).top(top);
    builder.build().expect("noncrossing pairing is planar")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn grown_graphs_stay_planar() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..4 {
            for _ in 0..25 {
                let g = random_rectangle_graph(
                    &mut rng,
                    n,
                    &GrowthConfig { moves: 5, pendant_percent: 10, free_loop_percent: 10 },
                );
                g.validate().unwrap();
                assert_eq!(g.n_bottom(), n);
                assert_eq!(g.n_top(), n);
            }
        }
    }

    #[test]
    fn sphere_graphs_stay_planar() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let g = random_sphere_graph(&mut rng, 6);
            g.validate().unwrap();
            assert!(g.is_closed());
        }
    }
}
