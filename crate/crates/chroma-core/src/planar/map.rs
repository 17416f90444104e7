use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("alpha is not a fixed-point-free involution at dart {0}")]
    BadAlpha(usize),
    #[error("sigma is not a permutation")]
    BadSigma,
    #[error("boundary dart {0} is invalid or repeated")]
    BadBoundary(usize),
    #[error("boundary stub {0} must be a fixed point of sigma")]
    StubNotFixed(usize),
    #[error("map is not planar: Euler characteristic {0} on a component")]
    NotPlanar(i64),
    #[error("operation requires a closed graph (no boundary points)")]
    NotClosed,
    #[error("operation requires equal top and bottom boundary counts")]
    BoundaryMismatch,
    #[error("cannot contract a loop edge")]
    ContractLoop,
    #[error("edge touches the boundary; only interior edges may be modified")]
    BoundaryEdge,
    #[error("dart {0} out of range")]
    NoSuchDart(usize),
    #[error("edge label {0} used {1} times, expected exactly 2")]
    BadEdgeLabel(usize, usize),
}

/// A face of an embedded graph: the cyclic orbit of darts under the face
/// permutation `sigma . alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<usize>,
}

/// Combinatorial map of a graph embedded in a rectangle or sphere.
///
/// Boundary points are modeled as degree-1 stub vertices: each one owns a
/// single dart which is a fixed point of `sigma` and whose `alpha`-mate sits
/// at an interior vertex (or at another boundary point, for a through arc).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedGraph {
    pub(super) alpha: Vec<usize>,
    pub(super) sigma: Vec<usize>,
    pub(super) stub: Vec<bool>,
    pub(super) n_bottom: usize,
    pub(super) n_top: usize,
    /// Stub darts in circular order: bottom left to right, then top right to left.
    pub(super) boundary: Vec<usize>,
    pub(super) free_loops: usize,
    pub(super) isolated: usize,
}

impl EmbeddedGraph {
    /// Closed graph with no darts: `loops` circles and `isolated` bare vertices.
    pub fn closed_trivial(free_loops: usize, isolated: usize) -> Self {
        EmbeddedGraph {
            alpha: Vec::new(),
            sigma: Vec::new(),
            stub: Vec::new(),
            n_bottom: 0,
            n_top: 0,
            boundary: Vec::new(),
            free_loops,
            isolated,
        }
    }

    pub fn num_darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn isolated_vertices(&self) -> usize {
        self.isolated
    }

    pub fn alpha(&self, d: usize) -> usize {
        self.alpha[d]
    }

    pub fn sigma(&self, d: usize) -> usize {
        self.sigma[d]
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn is_stub(&self, d: usize) -> bool {
        self.stub[d]
    }

    /// Interior vertices as sigma-orbits (stubs excluded), each orbit listed
    /// in rotation order starting from its smallest dart.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.num_darts()];
        let mut out = Vec::new();
        for d in 0..self.num_darts() {
            if seen[d] || self.stub[d] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = d;
            loop {
                seen[x] = true;
                orbit.push(x);
                x = self.sigma[x];
                if x == d {
                    break;
                }
            }
            out.push(orbit);
        }
        out
    }

    /// Edges as dart pairs `(d, alpha(d))` with `d < alpha(d)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.num_darts())
            .filter(|&d| d < self.alpha[d])
            .map(|d| (d, self.alpha[d]))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.num_darts() / 2
    }

    /// An edge is inner when neither end is a boundary stub.
    pub fn is_inner_edge(&self, d: usize) -> bool {
        !self.stub[d] && !self.stub[self.alpha[d]]
    }

    /// A loop edge has both darts at the same interior vertex.
    pub fn is_loop_edge(&self, d: usize) -> bool {
        self.is_inner_edge(d) && self.same_vertex(d, self.alpha[d])
    }

    fn same_vertex(&self, a: usize, b: usize) -> bool {
        let mut x = a;
        loop {
            if x == b {
                return true;
            }
            x = self.sigma[x];
            if x == a {
                return false;
            }
        }
    }

    pub fn degree(&self, d: usize) -> usize {
        let mut deg = 1;
        let mut x = self.sigma[d];
        while x != d {
            deg += 1;
            x = self.sigma[x];
        }
        deg
    }

    /// Rotation `sigma` extended by the point at infinity: the boundary stubs
    /// become one vertex whose rotation is the boundary cycle reversed. This
    /// compactifies the rectangle into the sphere.
    pub(super) fn sigma_with_infinity(&self) -> Vec<usize> {
        let mut s = self.sigma.clone();
        let b = &self.boundary;
        if !b.is_empty() {
            for k in 0..b.len() {
                let prev = if k == 0 { b[b.len() - 1] } else { b[k - 1] };
                s[b[k]] = prev;
            }
        }
        s
    }

    /// Structural validation: involution/permutation checks plus a genus-zero
    /// check (Euler characteristic 2 on each component of the sphere
    /// compactification).
    pub fn validate(&self) -> Result<(), MapError> {
        let m = self.num_darts();
        if self.sigma.len() != m || self.stub.len() != m {
            return Err(MapError::BadSigma);
        }
        for d in 0..m {
            if self.alpha[d] >= m || self.alpha[d] == d || self.alpha[self.alpha[d]] != d {
                return Err(MapError::BadAlpha(d));
            }
            if self.sigma[d] >= m {
                return Err(MapError::BadSigma);
            }
        }
        let mut hit = vec![false; m];
        for d in 0..m {
            if hit[self.sigma[d]] {
                return Err(MapError::BadSigma);
            }
            hit[self.sigma[d]] = true;
        }
        if self.boundary.len() != self.n_bottom + self.n_top {
            return Err(MapError::BadBoundary(self.boundary.len()));
        }
        let mut seen = vec![false; m];
        for &b in &self.boundary {
            if b >= m || seen[b] || !self.stub[b] {
                return Err(MapError::BadBoundary(b));
            }
            seen[b] = true;
            if self.sigma[b] != b {
                return Err(MapError::StubNotFixed(b));
            }
        }
        for d in 0..m {
            if self.stub[d] && !seen[d] {
                return Err(MapError::BadBoundary(d));
            }
        }
        // Genus check per component of the compactified map.
        let s = self.sigma_with_infinity();
        let comps = components(&s, &self.alpha);
        for comp in comps {
            let chi = euler_characteristic(&s, &self.alpha, &comp, &self.stub);
            if chi != 2 {
                return Err(MapError::NotPlanar(chi));
            }
        }
        Ok(())
    }

    /// Faces of the graph viewed in the sphere. Rectangle graphs are
    /// compactified first; free loops each contribute one extra face, and
    /// disconnected pieces share an ambient face.
    pub fn faces(&self) -> Vec<Face> {
        let g = self.glued_for_faces();
        let mut seen = vec![false; g.alpha.len()];
        let mut out = Vec::new();
        for d in 0..g.alpha.len() {
            if seen[d] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = d;
            loop {
                seen[x] = true;
                orbit.push(x);
                x = g.sigma[g.alpha[x]];
                if x == d {
                    break;
                }
            }
            out.push(Face { darts: orbit });
        }
        if out.is_empty() {
            out.push(Face { darts: Vec::new() });
        }
        for _ in 0..g.free_loops {
            out.push(Face { darts: Vec::new() });
        }
        out
    }

    /// Materialized, connected-up form used for face counting and duals:
    /// free loops become a 2-valent vertex with a loop edge, extra components
    /// are nested into the face of the first component that contains its
    /// smallest dart. Rectangle graphs keep the infinity vertex's rotation.
    fn glued_for_faces(&self) -> EmbeddedGraph {
        let mut g = self.clone();
        g.sigma = self.sigma_with_infinity();
        for d in &mut g.stub {
            *d = false;
        }
        g.boundary.clear();
        g.n_bottom = 0;
        g.n_top = 0;
        g
    }

    /// Replace each free-loop circle by a 2-valent vertex carrying a loop
    /// edge, so that it participates in dart-level constructions.
    pub fn materialize_free_loops(&self) -> EmbeddedGraph {
        let mut g = self.clone();
        for _ in 0..self.free_loops {
            let p = g.alpha.len();
            let q = p + 1;
            g.alpha.extend([q, p]);
            g.sigma.extend([q, p]);
            g.stub.extend([false, false]);
        }
        g.free_loops = 0;
        g
    }

    /// Planar dual of a closed graph: one vertex per face, one edge per edge.
    /// Free loops are materialized first; disconnected pieces are nested
    /// canonically (the choice does not affect any chromatic quantity).
    /// Isolated vertices do not change the dual and are dropped.
    pub fn dual(&self) -> Result<EmbeddedGraph, MapError> {
        if !self.is_closed() {
            return Err(MapError::NotClosed);
        }
        let g = self.materialize_free_loops();
        if g.alpha.is_empty() {
            // The sphere has one face.
            return Ok(EmbeddedGraph::closed_trivial(0, 1));
        }
        // Dual rotation is the face permutation; dual faces are the old
        // vertices. Components are then glued at their ambient faces.
        let m = g.alpha.len();
        let mut sigma_star: Vec<usize> = (0..m).map(|d| g.sigma[g.alpha[d]]).collect();
        let comps = components(&g.sigma, &g.alpha);
        if comps.len() > 1 {
            // Merge the face orbit containing each component's smallest dart
            // into one vertex of the dual: concatenate the cycles.
            let mut cycles: Vec<Vec<usize>> = Vec::new();
            for comp in &comps {
                let seed = *comp.iter().min().unwrap();
                let mut cyc = Vec::new();
                let mut x = seed;
                loop {
                    cyc.push(x);
                    x = sigma_star[x];
                    if x == seed {
                        break;
                    }
                }
                cycles.push(cyc);
            }
            let merged: Vec<usize> = cycles.concat();
            for (i, &d) in merged.iter().enumerate() {
                sigma_star[d] = merged[(i + 1) % merged.len()];
            }
        }
        let out = EmbeddedGraph {
            alpha: g.alpha.clone(),
            sigma: sigma_star,
            stub: vec![false; m],
            n_bottom: 0,
            n_top: 0,
            boundary: Vec::new(),
            free_loops: 0,
            isolated: 0,
        };
        debug_assert!(out.validate().is_ok());
        Ok(out)
    }

    /// Delete an interior edge. Endpoint vertices left with no darts become
    /// isolated vertices.
    pub fn delete_edge(&self, d: usize) -> Result<EmbeddedGraph, MapError> {
        Ok(self.delete_edge_traced(d)?.0)
    }

    /// Like `delete_edge` but also returns the dart relabeling
    /// (`old -> Some(new)` for surviving darts).
    pub fn delete_edge_traced(
        &self,
        d: usize,
    ) -> Result<(EmbeddedGraph, Vec<Option<usize>>), MapError> {
        if d >= self.num_darts() {
            return Err(MapError::NoSuchDart(d));
        }
        if !self.is_inner_edge(d) {
            return Err(MapError::BoundaryEdge);
        }
        let mut s = Scratch::from(self);
        s.remove_edge(d);
        Ok(s.finish())
    }

    /// Contract an interior non-loop edge, merging the endpoint rotations.
    pub fn contract_edge(&self, d: usize) -> Result<EmbeddedGraph, MapError> {
        Ok(self.contract_edge_traced(d)?.0)
    }

    pub fn contract_edge_traced(
        &self,
        d: usize,
    ) -> Result<(EmbeddedGraph, Vec<Option<usize>>), MapError> {
        if d >= self.num_darts() {
            return Err(MapError::NoSuchDart(d));
        }
        if !self.is_inner_edge(d) {
            return Err(MapError::BoundaryEdge);
        }
        if self.is_loop_edge(d) {
            return Err(MapError::ContractLoop);
        }
        let dd = self.alpha[d];
        // Merged rotation: darts after d around one endpoint, then darts
        // after alpha(d) around the other.
        let mut cycle = Vec::new();
        let mut x = self.sigma[d];
        while x != d {
            cycle.push(x);
            x = self.sigma[x];
        }
        let mut y = self.sigma[dd];
        while y != dd {
            cycle.push(y);
            y = self.sigma[y];
        }
        let mut s = Scratch::from(self);
        if cycle.is_empty() {
            s.isolated += 1;
        } else {
            for (i, &c) in cycle.iter().enumerate() {
                s.sigma[c] = cycle[(i + 1) % cycle.len()];
            }
        }
        s.kill(d);
        s.kill(dd);
        Ok(s.finish())
    }

    /// Remove all interior 2-valent vertices, merging their edges; a 2-valent
    /// vertex whose two darts form one edge becomes a free loop.
    pub fn smooth_two_valent(&self) -> EmbeddedGraph {
        self.smooth_two_valent_counted().0
    }

    /// Like `smooth_two_valent`, also counting the smoothings that merged two
    /// boundary-to-boundary edges. That count carries the sign relating the
    /// state-sum expansion of a subdivided diagram to its canonical form.
    pub fn smooth_two_valent_counted(&self) -> (EmbeddedGraph, usize) {
        let mut s = Scratch::from(self);
        let mut outer_merges = 0;
        loop {
            let mut target = None;
            for d in 0..s.alpha.len() {
                if s.live[d] && !s.stub[d] && s.sigma[d] != d && s.sigma[s.sigma[d]] == d {
                    target = Some(d);
                    break;
                }
            }
            match target {
                Some(d) => {
                    if s.smooth_vertex(d) {
                        outer_merges += 1;
                    }
                }
                None => break,
            }
        }
        (s.finish().0, outer_merges)
    }

    /// Drop all isolated interior vertices.
    pub fn delete_isolated(&self) -> EmbeddedGraph {
        let mut g = self.clone();
        g.isolated = 0;
        g
    }

    pub fn add_free_loops(&self, k: usize) -> EmbeddedGraph {
        let mut g = self.clone();
        g.free_loops += k;
        g
    }

    pub fn without_free_loops(&self) -> EmbeddedGraph {
        let mut g = self.clone();
        g.free_loops = 0;
        g
    }

    /// Close a rectangle graph into the sphere by joining bottom point `i`
    /// to the top point directly above it with an arc around the rectangle;
    /// the 2-valent join vertices are smoothed away.
    pub fn closure(&self) -> Result<EmbeddedGraph, MapError> {
        if self.n_bottom != self.n_top {
            return Err(MapError::BoundaryMismatch);
        }
        let n = self.n_bottom;
        let mut s = Scratch::from(self);
        let mut joins = Vec::new();
        for i in 0..n {
            let bot = self.boundary[i];
            let top = self.boundary[2 * n - 1 - i];
            let x = s.new_dart();
            let y = s.new_dart();
            s.alpha[x] = y;
            s.alpha[y] = x;
            s.sigma[bot] = x;
            s.sigma[x] = bot;
            s.sigma[top] = y;
            s.sigma[y] = top;
            s.stub[bot] = false;
            s.stub[top] = false;
            joins.push(bot);
            joins.push(top);
        }
        for d in joins {
            if s.live[d] {
                s.smooth_vertex(d);
            }
        }
        s.boundary.clear();
        s.n_bottom = 0;
        s.n_top = 0;
        let g = s.finish().0;
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Join the rightmost bottom point to the rightmost top point with an arc
    /// around the right side of the rectangle, smoothing the joins. Takes an
    /// n-strand rectangle graph to an (n-1)-strand one.
    pub fn close_rightmost(&self) -> Result<EmbeddedGraph, MapError> {
        if self.n_bottom == 0 || self.n_top == 0 {
            return Err(MapError::BoundaryMismatch);
        }
        let bot = self.boundary[self.n_bottom - 1];
        let top = self.boundary[self.n_bottom];
        let mut s = Scratch::from(self);
        let x = s.new_dart();
        let y = s.new_dart();
        s.alpha[x] = y;
        s.alpha[y] = x;
        s.sigma[bot] = x;
        s.sigma[x] = bot;
        s.sigma[top] = y;
        s.sigma[y] = top;
        s.stub[bot] = false;
        s.stub[top] = false;
        for d in [bot, top] {
            if s.live[d] {
                s.smooth_vertex(d);
            }
        }
        s.boundary.remove(self.n_bottom);
        s.boundary.remove(self.n_bottom - 1);
        s.n_bottom -= 1;
        s.n_top -= 1;
        let g = s.finish().0;
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }

    /// Stack `upper` on top of `self`, joining this graph's top points to the
    /// other's bottom points and smoothing the joins. The result keeps this
    /// graph's bottom boundary and `upper`'s top boundary.
    pub fn stack(&self, upper: &EmbeddedGraph) -> Result<EmbeddedGraph, MapError> {
        let k = self.n_top;
        if upper.n_bottom != k {
            return Err(MapError::BoundaryMismatch);
        }
        let off = self.num_darts();
        let mut s = Scratch::from(self);
        s.alpha.extend(upper.alpha.iter().map(|&d| d + off));
        s.sigma.extend(upper.sigma.iter().map(|&d| d + off));
        s.stub.extend(upper.stub.iter().copied());
        s.live.extend(std::iter::repeat(true).take(upper.num_darts()));
        s.free_loops += upper.free_loops;
        s.isolated += upper.isolated;
        let mut joins = Vec::new();
        for i in 1..=k {
            // this graph's top point at geometric position i, and upper's
            // bottom point at the same position
            let t = self.boundary[self.n_bottom + (k - i)];
            let b = upper.boundary[i - 1] + off;
            let x = s.new_dart();
            let y = s.new_dart();
            s.alpha[x] = y;
            s.alpha[y] = x;
            s.sigma[t] = x;
            s.sigma[x] = t;
            s.sigma[b] = y;
            s.sigma[y] = b;
            s.stub[t] = false;
            s.stub[b] = false;
            joins.push(t);
            joins.push(b);
        }
        for d in joins {
            if s.live[d] {
                s.smooth_vertex(d);
            }
        }
        s.boundary = self.boundary[..self.n_bottom]
            .iter()
            .copied()
            .chain(upper.boundary[upper.n_bottom..].iter().map(|&d| d + off))
            .collect();
        s.n_bottom = self.n_bottom;
        s.n_top = upper.n_top;
        let g = s.finish().0;
        debug_assert!(g.validate().is_ok());
        Ok(g)
    }
}

impl fmt::Display for EmbeddedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::io::render_graph(self))
    }
}

/// Connected components of the dart set under the group generated by sigma
/// and alpha.
pub(super) fn components(sigma: &[usize], alpha: &[usize]) -> Vec<Vec<usize>> {
    let m = alpha.len();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for d in 0..m {
        if seen[d] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![d];
        seen[d] = true;
        while let Some(x) = stack.pop() {
            comp.push(x);
            for nb in [sigma[x], alpha[x]] {
                if !seen[nb] {
                    seen[nb] = true;
                    stack.push(nb);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn euler_characteristic(sigma: &[usize], alpha: &[usize], comp: &[usize], stub: &[bool]) -> i64 {
    let in_comp = |d: usize| comp.binary_search(&d).is_ok();
    let mut seen_v = vec![false; sigma.len()];
    let mut seen_f = vec![false; sigma.len()];
    let mut v = 0i64;
    let mut f = 0i64;
    let mut stubs_present = false;
    for &d in comp {
        if stub[d] {
            stubs_present = true;
        }
        if !seen_v[d] {
            v += 1;
            let mut x = d;
            loop {
                seen_v[x] = true;
                x = sigma[x];
                if x == d {
                    break;
                }
            }
        }
        if !seen_f[d] {
            f += 1;
            let mut x = d;
            loop {
                seen_f[x] = true;
                x = sigma[alpha[x]];
                if x == d {
                    break;
                }
            }
        }
        debug_assert!(in_comp(alpha[d]) && in_comp(sigma[d]));
    }
    // With the infinity splice the stub darts all belong to one vertex,
    // which the orbit count above already reflects; nothing extra to add.
    let _ = stubs_present;
    let e = comp.len() as i64 / 2;
    v - e + f
}

/// Mutable working copy with tombstones; `finish` compacts dart ids.
struct Scratch {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    stub: Vec<bool>,
    live: Vec<bool>,
    boundary: Vec<usize>,
    n_bottom: usize,
    n_top: usize,
    free_loops: usize,
    isolated: usize,
}

impl Scratch {
    fn from(g: &EmbeddedGraph) -> Self {
        Scratch {
            alpha: g.alpha.clone(),
            sigma: g.sigma.clone(),
            stub: g.stub.clone(),
            live: vec![true; g.num_darts()],
            boundary: g.boundary.clone(),
            n_bottom: g.n_bottom,
            n_top: g.n_top,
            free_loops: g.free_loops,
            isolated: g.isolated,
        }
    }

    fn new_dart(&mut self) -> usize {
        let d = self.alpha.len();
        self.alpha.push(d);
        self.sigma.push(d);
        self.stub.push(false);
        self.live.push(true);
        d
    }

    fn kill(&mut self, d: usize) {
        self.live[d] = false;
    }

    fn sigma_inv(&self, d: usize) -> usize {
        let mut x = d;
        while self.sigma[x] != d {
            x = self.sigma[x];
        }
        x
    }

    /// Remove the edge at dart `d`, splicing rotations; empties become
    /// isolated vertices.
    fn remove_edge(&mut self, d: usize) {
        let dd = self.alpha[d];
        for x in [d, dd] {
            if !self.live[x] {
                continue;
            }
            // x may equal dd when removing a loop; handle one end at a time.
            let prev = self.sigma_inv(x);
            if prev == x {
                if !self.stub[x] {
                    self.isolated += 1;
                }
            } else {
                self.sigma[prev] = self.sigma[x];
            }
            self.kill(x);
        }
    }

    /// Smooth the 2-valent vertex owning dart `d`. Returns whether the two
    /// merged edges both ended on boundary stubs.
    fn smooth_vertex(&mut self, d: usize) -> bool {
        let q = self.sigma[d];
        debug_assert!(q != d && self.sigma[q] == d, "vertex must be 2-valent");
        if self.alpha[d] == q {
            // The two darts form a single loop edge: a bare circle.
            self.kill(d);
            self.kill(q);
            self.free_loops += 1;
            false
        } else {
            let a = self.alpha[d];
            let b = self.alpha[q];
            let both_outer = self.stub[a] && self.stub[b];
            self.alpha[a] = b;
            self.alpha[b] = a;
            self.kill(d);
            self.kill(q);
            both_outer
        }
    }

    fn finish(self) -> (EmbeddedGraph, Vec<Option<usize>>) {
        let mut map = vec![None; self.alpha.len()];
        let mut next = 0usize;
        for d in 0..self.alpha.len() {
            if self.live[d] {
                map[d] = Some(next);
                next += 1;
            }
        }
        let mut alpha = vec![0; next];
        let mut sigma = vec![0; next];
        let mut stub = vec![false; next];
        for d in 0..self.alpha.len() {
            if let Some(nd) = map[d] {
                alpha[nd] = map[self.alpha[d]].expect("edge mate must be live");
                sigma[nd] = map[self.sigma[d]].expect("rotation image must be live");
                stub[nd] = self.stub[d];
            }
        }
        let boundary = self
            .boundary
            .iter()
            .map(|&d| map[d].expect("boundary dart must be live"))
            .collect();
        (
            EmbeddedGraph {
                alpha,
                sigma,
                stub,
                n_bottom: self.n_bottom,
                n_top: self.n_top,
                boundary,
                free_loops: self.free_loops,
                isolated: self.isolated,
            },
            map,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::random::{random_rectangle_graph, random_sphere_graph, GrowthConfig};
    use crate::planar::MapBuilder;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn theta() -> EmbeddedGraph {
        MapBuilder::new().vertex([1, 2, 3]).vertex([3, 2, 1]).build().unwrap()
    }

    #[test]
    fn face_counts() {
        // single circle in the sphere: two faces
        let circle = EmbeddedGraph::closed_trivial(1, 0);
        assert_eq!(circle.faces().len(), 2);
        assert_eq!(theta().faces().len(), 3);
        // single edge between two vertices: a tree has one face
        let edge = MapBuilder::new().vertex([1]).vertex([1]).build().unwrap();
        assert_eq!(edge.faces().len(), 1);
    }

    #[test]
    fn dual_examples() {
        // circle -> one edge joining two vertices
        let circle = EmbeddedGraph::closed_trivial(1, 0);
        let d = circle.dual().unwrap();
        assert_eq!(d.num_edges(), 1);
        assert_eq!(d.vertices().len(), 2);
        // theta -> triangle
        let d = theta().dual().unwrap();
        assert_eq!(d.num_edges(), 3);
        assert_eq!(d.vertices().len(), 3);
        assert_eq!(d.faces().len(), 2);
        assert!(d.vertices().iter().all(|v| v.len() == 2));
        // lone vertex -> lone vertex
        let v = EmbeddedGraph::closed_trivial(0, 1);
        let d = v.dual().unwrap();
        assert_eq!(d.num_darts(), 0);
        assert_eq!(d.isolated_vertices(), 1);
    }

    #[test]
    fn dual_preserves_edges_and_involutes() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..40 {
            let g = random_sphere_graph(&mut rng, 7);
            let d = g.dual().unwrap();
            assert_eq!(d.num_edges(), g.materialize_free_loops().num_edges());
            // dual . dual is the identity on connected dartful maps
            let gm = g.materialize_free_loops();
            if super::components(&gm.sigma, &gm.alpha).len() == 1 && gm.num_darts() > 0 {
                assert!(gm.dual().unwrap().dual().unwrap().isomorphic(&gm));
            }
        }
    }

    #[test]
    fn delete_and_contract_examples() {
        let th = theta();
        // deleting one edge of theta leaves a 2-cycle
        let (d, _) = th.edges()[1];
        let del = th.delete_edge(d).unwrap();
        assert_eq!(del.num_edges(), 2);
        assert_eq!(del.vertices().len(), 2);
        assert_eq!(del.faces().len(), 2);
        // contracting one edge of a triangle gives a 2-cycle
        let tri = MapBuilder::new()
            .vertex([1, 2])
            .vertex([2, 3])
            .vertex([3, 1])
            .build()
            .unwrap();
        let (d, _) = tri.edges()[0];
        let con = tri.contract_edge(d).unwrap();
        assert_eq!(con.num_edges(), 2);
        assert_eq!(con.vertices().len(), 2);
        // deleting the only edge of a 2-vertex path leaves 2 isolated vertices
        let path = MapBuilder::new().vertex([1]).vertex([1]).build().unwrap();
        let (d, _) = path.edges()[0];
        let emptied = path.delete_edge(d).unwrap();
        assert_eq!(emptied.num_darts(), 0);
        assert_eq!(emptied.isolated_vertices(), 2);
        // loops cannot be contracted
        let loop_g = MapBuilder::new().vertex([1, 1]).build().unwrap();
        assert_eq!(loop_g.contract_edge(0), Err(MapError::ContractLoop));
    }

    #[test]
    fn closure_examples() {
        // one vertical strand closes to a circle
        let strand = MapBuilder::new().bottom([1]).top([1]).build().unwrap();
        let c = strand.closure().unwrap();
        assert_eq!(c.num_darts(), 0);
        assert_eq!(c.free_loops(), 1);
        // n parallel strands close to n circles
        let strands = MapBuilder::new().bottom([1, 2, 3]).top([1, 2, 3]).build().unwrap();
        let c = strands.closure().unwrap();
        assert_eq!(c.free_loops(), 3);
        // two stars stacked via identity close to the theta graph
        let tripods = MapBuilder::new()
            .bottom([1, 2, 3])
            .top([4, 5, 6])
            .vertex([1, 2, 3])
            .vertex([6, 5, 4])
            .build()
            .unwrap();
        let closed = tripods.closure().unwrap();
        assert!(closed.isomorphic(&theta()));
    }

    #[test]
    fn smoothing_examples() {
        // path of 3 vertices -> single edge
        let path3 = MapBuilder::new()
            .vertex([1])
            .vertex([1, 2])
            .vertex([2])
            .build()
            .unwrap();
        let s = path3.smooth_two_valent();
        assert_eq!(s.num_edges(), 1);
        assert_eq!(s.vertices().len(), 2);
        // vertex with a loop through a 2-valent vertex -> vertex with a loop
        let g = MapBuilder::new().vertex([1, 2]).vertex([2, 1]).build().unwrap();
        // one of the two vertices smooths away, leaving a loop vertex;
        // smoothing again turns the bare bigon into vertex+loop forms
        let s = g.smooth_two_valent();
        assert_eq!(s.free_loops(), 1);
        assert_eq!(s.num_darts(), 0);
        // trivalent vertex with loop plus 2-valent on the loop
        let g = MapBuilder::new()
            .bottom([3])
            .top([4])
            .vertex([3, 1, 2, 4])
            .vertex([1, 2])
            .build()
            .unwrap();
        let s = g.smooth_two_valent();
        assert_eq!(s.vertices().len(), 1);
        assert_eq!(s.num_edges(), 3);
        assert!(s.edges().iter().any(|&(a, b)| s.is_loop_edge(a) || s.is_loop_edge(b)));
        // isolated vertex beside a strand: strand alone after deletion
        let g = MapBuilder::new().bottom([1]).top([1]).isolated(1).build().unwrap();
        let s = g.delete_isolated();
        assert_eq!(s.isolated_vertices(), 0);
        assert_eq!(s.num_edges(), 1);
    }

    #[test]
    fn euler_holds_after_random_ops() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let g = random_rectangle_graph(
                &mut rng,
                2,
                &GrowthConfig { moves: 5, pendant_percent: 10, free_loop_percent: 5 },
            );
            g.validate().unwrap();
            let inner: Vec<usize> = (0..g.num_darts())
                .filter(|&d| d < g.alpha(d) && g.is_inner_edge(d))
                .collect();
            if let Some(&d) = inner.first() {
                g.delete_edge(d).unwrap().validate().unwrap();
                if !g.is_loop_edge(d) {
                    g.contract_edge(d).unwrap().validate().unwrap();
                }
            }
            g.closure().unwrap().validate().unwrap();
        }
    }

    #[test]
    fn delete_contract_commute_on_disjoint_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut checked = 0;
        while checked < 25 {
            let g = random_sphere_graph(&mut rng, 6);
            let edges = g.edges();
            let mut found = None;
            'outer: for &(a, _) in &edges {
                for &(b, _) in &edges {
                    if a != b
                        && !g.is_loop_edge(a)
                        && !g.is_loop_edge(b)
                        && g.alpha(a) != b
                    {
                        found = Some((a, b));
                        break 'outer;
                    }
                }
            }
            let Some((e1, e2)) = found else { continue };
            let (g1, map1) = g.delete_edge_traced(e1).unwrap();
            let r1 = g1.contract_edge(map1[e2].unwrap()).unwrap();
            let (g2, map2) = g.contract_edge_traced(e2).unwrap();
            let r2 = g2.delete_edge(map2[e1].unwrap()).unwrap();
            assert!(r1.isomorphic(&r2));
            checked += 1;
        }
    }

    #[test]
    fn stack_identity_strands() {
        let id2 = MapBuilder::new().bottom([1, 2]).top([1, 2]).build().unwrap();
        let cupcap = MapBuilder::new().bottom([1, 1]).top([2, 2]).build().unwrap();
        let stacked = cupcap.stack(&id2).unwrap();
        assert!(stacked.isomorphic(&cupcap));
        let stacked = id2.stack(&cupcap).unwrap();
        assert!(stacked.isomorphic(&cupcap));
        // cupcap over cupcap: the middle cap and cup close into a circle
        let double = cupcap.stack(&cupcap).unwrap();
        assert_eq!(double.free_loops(), 1);
        assert_eq!(double.num_edges(), 2);
    }
}
