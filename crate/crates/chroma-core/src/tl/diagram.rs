use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Laurent, Var};

/// Noncrossing perfect matching of the 2m boundary points of the rectangle,
/// numbered circularly: bottom 0..m left to right, then top m..2m right to
/// left. Closed loops never appear in a diagram; they are absorbed into
/// coefficients as factors of d.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TLDiagram {
    m: usize,
    mate: Vec<u16>,
}

impl TLDiagram {
    pub fn new(m: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut mate = vec![u16::MAX; 2 * m];
        for (a, b) in pairs {
            assert!(a < 2 * m && b < 2 * m && a != b, "bad pair ({a},{b})");
            assert!(mate[a] == u16::MAX && mate[b] == u16::MAX, "point matched twice");
            mate[a] = b as u16;
            mate[b] = a as u16;
        }
        let d = TLDiagram { m, mate };
        assert!(d.is_complete(), "not a perfect matching");
        assert!(d.is_noncrossing(), "matching crosses");
        d
    }

    fn is_complete(&self) -> bool {
        self.mate.iter().all(|&x| x != u16::MAX)
    }

    fn is_noncrossing(&self) -> bool {
        let k = self.mate.len();
        for a in 0..k {
            let b = self.mate[a] as usize;
            if a > b {
                continue;
            }
            for c in a + 1..b {
                let d = self.mate[c] as usize;
                if d < a || d > b {
                    return false;
                }
            }
        }
        true
    }

    pub fn strands(&self) -> usize {
        self.m
    }

    pub fn mate(&self, p: usize) -> usize {
        self.mate[p] as usize
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len())
            .filter(|&p| p < self.mate(p))
            .map(|p| (p, self.mate(p)))
            .collect()
    }

    pub fn identity(m: usize) -> Self {
        TLDiagram::new(m, (0..m).map(|i| (i, 2 * m - 1 - i)))
    }
}

impl fmt::Display for TLDiagram {
    /// 1-based pair notation, e.g. `(1,4)(2,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            write!(f, "({},{})", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// All noncrossing perfect matchings of 2m points (Catalan many), sorted.
pub fn enumerate_diagrams(m: usize) -> Vec<TLDiagram> {
    fn matchings(points: &[u16]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let a = points[0] as usize;
        // pair the first point at an odd offset so both sides stay even
        for k in (1..points.len()).step_by(2) {
            let b = points[k] as usize;
            let inside = &points[1..k];
            let outside = &points[k + 1..];
            for mi in matchings(inside) {
                for mo in matchings(outside) {
                    let mut m = vec![(a, b)];
                    m.extend(mi.iter().copied());
                    m.extend(mo.iter().copied());
                    out.push(m);
                }
            }
        }
        out
    }
    let points: Vec<u16> = (0..2 * m as u16).collect();
    let mut out: Vec<TLDiagram> = matchings(&points)
        .into_iter()
        .map(|pairs| TLDiagram::new(m, pairs))
        .collect();
    out.sort();
    out
}

/// Linear combination of diagrams with Laurent coefficients in `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TLElement {
    m: usize,
    terms: BTreeMap<TLDiagram, Laurent>,
}

impl TLElement {
    pub fn zero(m: usize) -> Self {
        TLElement { m, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: TLDiagram) -> Self {
        let m = d.strands();
        let mut terms = BTreeMap::new();
        terms.insert(d, Laurent::one(Var::D));
        TLElement { m, terms }
    }

    pub fn strands(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &TLDiagram) -> Laurent {
        self.terms.get(d).cloned().unwrap_or_else(|| Laurent::zero(Var::D))
    }

    pub fn add_term(&mut self, d: TLDiagram, c: Laurent) {
        assert_eq!(d.strands(), self.m);
        assert_eq!(c.var(), Var::D);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(&c).expect("same variable");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &TLElement) -> TLElement {
        assert_eq!(self.m, rhs.m);
        let mut out = self.clone();
        for (d, c) in rhs.terms.iter() {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &TLElement) -> TLElement {
        self.add(&rhs.scale(&-Laurent::one(Var::D)))
    }

    pub fn scale(&self, c: &Laurent) -> TLElement {
        if c.is_zero() {
            return TLElement::zero(self.m);
        }
        let mut out = TLElement::zero(self.m);
        for (d, k) in self.terms.iter() {
            out.add_term(d.clone(), k.checked_mul(c).expect("same variable"));
        }
        out
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.terms.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}) * {d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        assert_eq!(enumerate_diagrams(0).len(), 1);
        assert_eq!(enumerate_diagrams(1).len(), 1);
        assert_eq!(enumerate_diagrams(2).len(), 2);
        assert_eq!(enumerate_diagrams(3).len(), 5);
        assert_eq!(enumerate_diagrams(4).len(), 14);
        assert_eq!(enumerate_diagrams(6).len(), 132);
    }

    #[test]
    #[should_panic(expected = "crosses")]
    fn crossing_rejected() {
        TLDiagram::new(2, [(0, 2), (1, 3)]);
    }
}
