use std::fmt;

use crate::planar::{EmbeddedGraph, MapBuilder};

/// Noncrossing partition of the 2n boundary points of the rectangle with no
/// singleton blocks. Points are numbered 0..2n in circular order: bottom
/// left to right, then top right to left. Blocks are stored sorted, so equal
/// partitions are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarPartition {
    n: usize,
    blocks: Vec<Vec<u8>>,
}

impl PlanarPartition {
    pub fn new(n: usize, blocks: impl IntoIterator<Item = Vec<u8>>) -> Self {
        let mut blocks: Vec<Vec<u8>> = blocks.into_iter().collect();
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        let p = PlanarPartition { n, blocks };
        debug_assert!(p.check().is_ok(), "invalid partition: {p:?} ({:?})", p.check());
        p
    }

    fn check(&self) -> Result<(), String> {
        let mut seen = vec![false; 2 * self.n];
        for b in &self.blocks {
            if b.len() < 2 {
                return Err("singleton block".into());
            }
            for &p in b {
                let p = p as usize;
                if p >= 2 * self.n || seen[p] {
                    return Err(format!("bad point {p}"));
                }
                seen[p] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err("points not covered".into());
        }
        if !noncrossing(&self.blocks) {
            return Err("crossing blocks".into());
        }
        Ok(())
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    /// The identity diagram: n vertical strands.
    pub fn identity(n: usize) -> Self {
        PlanarPartition::new(n, (0..n).map(|i| vec![i as u8, (2 * n - 1 - i) as u8]))
    }

    /// Reflection in a horizontal line: position p maps to 2n-1-p.
    pub fn reflected(&self) -> Self {
        let m = (2 * self.n - 1) as u8;
        PlanarPartition::new(
            self.n,
            self.blocks.iter().map(|b| b.iter().map(|&p| m - p).collect::<Vec<_>>()),
        )
    }

    /// Number of edges in the canonical drawing: one per 2-block, k per
    /// k-block star. This fixes the sign of the state-sum expansion.
    pub fn drawing_edges(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| if b.len() == 2 { 1 } else { b.len() })
            .sum()
    }

    /// Canonical drawing as an embedded graph: a 2-block is one arc, a block
    /// of k >= 3 points is a star with one interior vertex.
    pub fn draw(&self) -> EmbeddedGraph {
        let n = self.n;
        let mut bottom = vec![0usize; n];
        let mut top = vec![0usize; n];
        let mut builder = MapBuilder::new();
        let mut label = 0usize;
        let place = |pos: u8, lbl: usize, bottom: &mut Vec<usize>, top: &mut Vec<usize>| {
            let p = pos as usize;
            if p < n {
                bottom[p] = lbl;
            } else {
                top[2 * n - 1 - p] = lbl;
            }
        };
        for b in &self.blocks {
            if b.len() == 2 {
                label += 1;
                place(b[0], label, &mut bottom, &mut top);
                place(b[1], label, &mut bottom, &mut top);
            } else {
                // Star: rays to circularly ascending points are already in
                // counterclockwise order around the interior vertex.
                let mut spokes = Vec::with_capacity(b.len());
                for &p in b {
                    label += 1;
                    place(p, label, &mut bottom, &mut top);
                    spokes.push(label);
                }
                builder = builder.vertex(spokes);
            }
        }
        builder
            .bottom(bottom)
            .top(top)
            .build()
            .expect("noncrossing partition draws planar")
    }
}

impl fmt::Display for PlanarPartition {
    /// 1-based block notation, e.g. `{1,4}{2,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("{}");
        }
        for b in &self.blocks {
            let inner: Vec<String> = b.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        Ok(())
    }
}

/// Crossing test in the circular order; for points numbered along the
/// circle this coincides with the linear test.
fn noncrossing(blocks: &[Vec<u8>]) -> bool {
    for (i, a) in blocks.iter().enumerate() {
        for b in blocks.iter().skip(i + 1) {
            for w in a.windows(2) {
                let inside = |p: u8| p > w[0] && p < w[1];
                let ins = b.iter().filter(|&&p| inside(p)).count();
                if ins != 0 && ins != b.len() {
                    return false;
                }
            }
        }
    }
    true
}

/// All noncrossing singleton-free partitions of the 2n boundary points, in
/// sorted order. These are the additive basis diagrams of the algebra.
pub fn enumerate_basis(n: usize) -> Vec<PlanarPartition> {
    let points: Vec<u8> = (0..2 * n as u8).collect();
    let mut out: Vec<PlanarPartition> = segment_partitions(&points)
        .into_iter()
        .map(|blocks| PlanarPartition::new(n, blocks))
        .collect();
    out.sort();
    out
}

fn segment_partitions(points: &[u8]) -> Vec<Vec<Vec<u8>>> {
    if points.is_empty() {
        return vec![Vec::new()];
    }
    let first = points[0];
    let rest = &points[1..];
    let mut out = Vec::new();
    // Choose the rest of first's block as a subset of the remaining points;
    // the gaps between chosen points must be partitioned independently.
    let k = rest.len();
    for mask in 0u32..(1 << k) {
        if mask == 0 {
            continue; // no singleton blocks
        }
        let mut block = vec![first];
        let mut segments: Vec<&[u8]> = Vec::new();
        let mut seg_start = 0usize;
        for i in 0..k {
            if mask >> i & 1 == 1 {
                block.push(rest[i]);
                segments.push(&rest[seg_start..i]);
                seg_start = i + 1;
            }
        }
        segments.push(&rest[seg_start..]);
        let mut partials: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
        let mut dead = false;
        for seg in segments {
            let sub = segment_partitions(seg);
            if sub.is_empty() {
                dead = true;
                break;
            }
            let mut next = Vec::new();
            for p in &partials {
                for s in &sub {
                    let mut q = p.clone();
                    q.extend(s.iter().cloned());
                    next.push(q);
                }
            }
            partials = next;
        }
        if dead {
            continue;
        }
        for mut p in partials {
            p.push(block.clone());
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Oracle: enumerate every set partition and filter.
    fn brute_force_basis(n: usize) -> BTreeSet<PlanarPartition> {
        let m = 2 * n;
        let mut out = BTreeSet::new();
        let mut assignment = vec![0usize; m];
        loop {
            let mut blocks: Vec<Vec<u8>> = Vec::new();
            let groups = assignment.iter().copied().max().map_or(0, |x| x + 1);
            for g in 0..groups {
                let blk: Vec<u8> = (0..m)
                    .filter(|&p| assignment[p] == g)
                    .map(|p| p as u8)
                    .collect();
                if !blk.is_empty() {
                    blocks.push(blk);
                }
            }
            if blocks.iter().all(|b| b.len() >= 2) && noncrossing(&blocks) {
                out.insert(PlanarPartition::new(n, blocks));
            }
            // next restricted-growth string
            let mut i = m;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                let cap = assignment[..i].iter().copied().max().map_or(0, |x| x + 1);
                if assignment[i] < cap && assignment[i] < m - 1 {
                    assignment[i] += 1;
                    for a in assignment[i + 1..].iter_mut() {
                        *a = 0;
                    }
                    break;
                }
                assignment[i] = 0;
            }
        }
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(enumerate_basis(0).len(), 1);
        assert_eq!(enumerate_basis(1).len(), 1);
        assert_eq!(enumerate_basis(2).len(), 3);
        assert_eq!(enumerate_basis(3).len(), 15);
        assert_eq!(enumerate_basis(4).len(), 91);
    }

    #[test]
    fn matches_brute_force() {
        for n in 0..4 {
            let fast: BTreeSet<PlanarPartition> = enumerate_basis(n).into_iter().collect();
            assert_eq!(fast, brute_force_basis(n));
        }
    }

    #[test]
    fn crossing_detected() {
        assert!(noncrossing(&[vec![0, 1], vec![2, 3]]));
        assert!(noncrossing(&[vec![0, 3], vec![1, 2]]));
        assert!(!noncrossing(&[vec![0, 2], vec![1, 3]]));
    }

    #[test]
    fn drawings_are_planar() {
        for n in 0..4 {
            for b in enumerate_basis(n) {
                let g = b.draw();
                g.validate().unwrap();
                assert_eq!(g.num_edges(), b.drawing_edges());
            }
        }
    }

    #[test]
    fn identity_and_reflection() {
        let id = PlanarPartition::identity(3);
        assert_eq!(id.to_string(), "{1,6}{2,5}{3,4}");
        assert_eq!(id.reflected(), id);
        let p = PlanarPartition::new(2, [vec![0, 1], vec![2, 3]]);
        assert_eq!(p.reflected(), p);
        let q = PlanarPartition::new(2, [vec![0, 1, 2, 3]]);
        assert_eq!(q.reflected(), q);
        // an asymmetric example in three strands
        let r = PlanarPartition::new(3, [vec![0, 1], vec![2, 5], vec![3, 4]]);
        let refl = PlanarPartition::new(3, [vec![0, 3], vec![1, 2], vec![4, 5]]);
        assert_eq!(r.reflected(), refl);
    }
}
