use super::map::{EmbeddedGraph, MapError};

/// Ergonomic constructor for embedded graphs. Vertices are given as
/// counterclockwise lists of edge labels; the boundary rows list the edge
/// labels hitting the bottom (left to right) and top (left to right) of the
/// rectangle. Every label must occur exactly twice overall. A label used
/// twice at one vertex is a loop; a label on two boundary rows is a through
/// arc.
#[derive(Debug, Clone, Default)]
pub struct MapBuilder {
    vertices: Vec<Vec<usize>>,
    bottom: Vec<usize>,
    top: Vec<usize>,
    free_loops: usize,
    isolated: usize,
}

impl MapBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add an interior vertex with its edge labels in counterclockwise order.
    pub fn vertex(mut self, labels: impl Into<Vec<usize>>) -> Self {
        self.vertices.push(labels.into());
        self
    }

    /// Edge labels meeting the bottom boundary, left to right.
    pub fn bottom(mut self, labels: impl Into<Vec<usize>>) -> Self {
        self.bottom = labels.into();
        self
    }

    /// Edge labels meeting the top boundary, left to right.
    pub fn top(mut self, labels: impl Into<Vec<usize>>) -> Self {
        self.top = labels.into();
        self
    }

    pub fn free_loops(mut self, k: usize) -> Self {
        self.free_loops = k;
        self
    }

    pub fn isolated(mut self, k: usize) -> Self {
        self.isolated = k;
        self
    }

    pub fn build(self) -> Result<EmbeddedGraph, MapError> {
        // Dart ids: boundary stubs first (bottom left to right, then top
        // right to left, matching the circular order), then interior darts.
        let n_bottom = self.bottom.len();
        let n_top = self.top.len();
        let mut slots: Vec<usize> = Vec::new(); // dart -> edge label
        let mut stub = Vec::new();
        let mut sigma = Vec::new();
        for &lbl in self.bottom.iter() {
            slots.push(lbl);
            stub.push(true);
            sigma.push(sigma.len());
        }
        for &lbl in self.top.iter().rev() {
            slots.push(lbl);
            stub.push(true);
            sigma.push(sigma.len());
        }
        let boundary: Vec<usize> = (0..n_bottom + n_top).collect();
        for v in &self.vertices {
            let start = slots.len();
            for &lbl in v {
                slots.push(lbl);
                stub.push(false);
                sigma.push(0);
            }
            let k = v.len();
            for i in 0..k {
                sigma[start + i] = start + (i + 1) % k;
            }
        }
        // Pair the two occurrences of each label.
        let m = slots.len();
        let mut alpha = vec![usize::MAX; m];
        let mut first: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        let mut counts: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        for (d, &lbl) in slots.iter().enumerate() {
            *counts.entry(lbl).or_insert(0) += 1;
            match first.remove(&lbl) {
                None => {
                    first.insert(lbl, d);
                }
                Some(e) => {
                    alpha[d] = e;
                    alpha[e] = d;
                }
            }
        }
        for (lbl, c) in counts {
            if c != 2 {
                return Err(MapError::BadEdgeLabel(lbl, c));
            }
        }
        let g = EmbeddedGraph {
            alpha,
            sigma,
            stub,
            n_bottom,
            n_top,
            boundary,
            free_loops: self.free_loops,
            isolated: self.isolated,
        };
        g.validate()?;
        Ok(g)
    }
}
