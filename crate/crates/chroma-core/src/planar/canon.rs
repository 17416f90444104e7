use super::map::{components, EmbeddedGraph};

/// Canonical encoding of an embedded graph up to dart relabeling. Boundary
/// stubs are pinned in their cyclic order; components not attached to the
/// boundary are canonicalized exhaustively over starting darts and sorted.
/// Two graphs are isomorphic as marked maps iff their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Vec<i64>);

impl EmbeddedGraph {
    pub fn canonical_key(&self) -> CanonKey {
        let m = self.num_darts();
        let mut label: Vec<Option<usize>> = vec![None; m];
        let mut order: Vec<usize> = Vec::with_capacity(m);
        // Boundary-anchored component: breadth-first over sigma then alpha.
        for &b in &self.boundary {
            if label[b].is_none() {
                label[b] = Some(order.len());
                order.push(b);
            }
        }
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for nb in [self.sigma[d], self.alpha[d]] {
                if label[nb].is_none() {
                    label[nb] = Some(order.len());
                    order.push(nb);
                }
            }
        }
        // Floating components: minimal encoding over anchor darts.
        let comps = components(&self.sigma, &self.alpha);
        let mut floating: Vec<Vec<i64>> = Vec::new();
        for comp in comps {
            if label[comp[0]].is_some() {
                continue;
            }
            let best = comp
                .iter()
                .map(|&seed| component_encoding(self, &comp, seed))
                .min()
                .unwrap();
            floating.push(best);
        }
        floating.sort();
        let mut code: Vec<i64> = vec![
            self.n_bottom as i64,
            self.n_top as i64,
            self.free_loops as i64,
            self.isolated as i64,
            m as i64,
        ];
        for &d in &order {
            code.push(label[self.sigma[d]].map_or(-1, |x| x as i64));
            code.push(label[self.alpha[d]].map_or(-1, |x| x as i64));
        }
        // Anchored traversal reaches every dart of its components, so the
        // -1 placeholder never survives for them; floating parts follow.
        code.push(-2);
        for f in floating {
            code.extend(f);
            code.push(-2);
        }
        CanonKey(code)
    }

    /// Marked-map isomorphism: equal boundary data and some dart relabeling
    /// matching sigma and alpha.
    pub fn isomorphic(&self, other: &EmbeddedGraph) -> bool {
        self.canonical_key() == other.canonical_key()
    }
}

fn component_encoding(g: &EmbeddedGraph, comp: &[usize], seed: usize) -> Vec<i64> {
    let mut label: Vec<Option<usize>> = vec![None; g.num_darts()];
    let mut order = Vec::with_capacity(comp.len());
    label[seed] = Some(0);
    order.push(seed);
    let mut head = 0;
    while head < order.len() {
        let d = order[head];
        head += 1;
        for nb in [g.sigma(d), g.alpha(d)] {
            if label[nb].is_none() {
                label[nb] = Some(order.len());
                order.push(nb);
            }
        }
    }
    let mut code = Vec::with_capacity(2 * order.len());
    for &d in &order {
        code.push(label[g.sigma(d)].unwrap() as i64);
        code.push(label[g.alpha(d)].unwrap() as i64);
    }
    code
}
