use crate::planar::EmbeddedGraph;

/// Finite multigraph: `n` vertices and an edge list allowing parallels and
/// loops. The embedding is forgotten; the chromatic polynomial does not see
/// it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        let g = Multigraph { n, edges };
        debug_assert!(g.edges.iter().all(|&(a, b)| a < g.n && b < g.n));
        g
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        let e = if a <= b { (a, b) } else { (b, a) };
        let pos = self.edges.partition_point(|x| *x < e);
        self.edges.insert(pos, e);
    }

    /// Underlying abstract multigraph of an embedded graph: interior vertices
    /// and boundary stubs all become vertices, isolated vertices are kept,
    /// and each free-loop circle becomes a fresh vertex with a loop edge.
    pub fn from_embedded(g: &EmbeddedGraph) -> Self {
        let m = g.num_darts();
        let mut vertex_of = vec![usize::MAX; m];
        let mut next = 0;
        for d in 0..m {
            if vertex_of[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            loop {
                vertex_of[x] = next;
                x = g.sigma(x);
                if x == d {
                    break;
                }
            }
            next += 1;
        }
        let mut edges = Vec::new();
        for (d, dd) in g.edges() {
            edges.push((vertex_of[d], vertex_of[dd]));
        }
        for _ in 0..g.free_loops() {
            edges.push((next, next));
            next += 1;
        }
        next += g.isolated_vertices();
        Multigraph::new(next, edges)
    }

    /// Collapse parallel edge bundles to single edges.
    pub fn simplified(&self) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.dedup();
        Multigraph { n: self.n, edges }
    }

    pub fn delete_edge(&self, idx: usize) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Multigraph { n: self.n, edges }
    }

    /// Contract edge `idx` (must not be a loop): its endpoints merge; other
    /// edges between the pair become loops only if parallel copies existed.
    pub fn contract_edge(&self, idx: usize) -> Multigraph {
        let (u, v) = self.edges[idx];
        assert_ne!(u, v, "cannot contract a loop");
        let map = |x: usize| {
            let y = if x == v { u } else { x };
            if y > v {
                y - 1
            } else {
                y
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &(a, b))| (map(a), map(b)))
            .collect::<Vec<_>>();
        Multigraph::new(self.n - 1, edges)
    }

    /// Connected components as vertex sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..self.n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Induced subgraph on a vertex subset, with vertices renumbered.
    pub fn induced(&self, verts: &[usize]) -> Multigraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        Multigraph::new(verts.len(), edges.collect::<Vec<_>>())
    }

    /// Edge sets of the biconnected components (blocks) of the simple graph.
    pub fn biconnected_blocks(&self) -> Vec<Vec<usize>> {
        // Hopcroft-Tarjan lowpoint algorithm, iterative over edge indices.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == b {
                continue;
            }
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        let mut num = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut counter = 0;
        let mut stack: Vec<usize> = Vec::new(); // edge indices
        let mut blocks = Vec::new();
        // Recursive helper in closure form.
        struct Dfs<'a> {
            adj: &'a [Vec<(usize, usize)>],
            num: &'a mut Vec<usize>,
            low: &'a mut Vec<usize>,
            counter: &'a mut usize,
            stack: &'a mut Vec<usize>,
            blocks: &'a mut Vec<Vec<usize>>,
        }
        fn dfs(ctx: &mut Dfs, v: usize, parent_edge: usize) {
            ctx.num[v] = *ctx.counter;
            ctx.low[v] = *ctx.counter;
            *ctx.counter += 1;
            for &(w, ei) in &ctx.adj[v] {
                if ei == parent_edge {
                    continue;
                }
                if ctx.num[w] == usize::MAX {
                    ctx.stack.push(ei);
                    dfs(ctx, w, ei);
                    ctx.low[v] = ctx.low[v].min(ctx.low[w]);
                    if ctx.low[w] >= ctx.num[v] {
                        let mut block = Vec::new();
                        while let Some(&top) = ctx.stack.last() {
                            ctx.stack.pop();
                            block.push(top);
                            if top == ei {
                                break;
                            }
                        }
                        ctx.blocks.push(block);
                    }
                } else if ctx.num[w] < ctx.num[v] {
                    ctx.stack.push(ei);
                    ctx.low[v] = ctx.low[v].min(ctx.num[w]);
                }
            }
        }
        for v in 0..self.n {
            if num[v] == usize::MAX {
                let mut ctx = Dfs {
                    adj: &adj,
                    num: &mut num,
                    low: &mut low,
                    counter: &mut counter,
                    stack: &mut stack,
                    blocks: &mut blocks,
                };
                dfs(&mut ctx, v, usize::MAX);
            }
        }
        blocks
    }
}
