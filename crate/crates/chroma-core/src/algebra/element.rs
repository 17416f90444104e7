use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Laurent, Var};

use super::PlanarPartition;

/// Finite linear combination of planar-partition basis diagrams with Laurent
/// polynomial coefficients. The coefficient variable is normally `Q`; the
/// skein-algebra pipelines carry elements over `A` instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticElement {
    n: usize,
    var: Var,
    terms: BTreeMap<PlanarPartition, Laurent>,
}

impl ChromaticElement {
    pub fn zero(n: usize, var: Var) -> Self {
        ChromaticElement { n, var, terms: BTreeMap::new() }
    }

    pub fn from_partition(p: PlanarPartition, var: Var) -> Self {
        let n = p.strands();
        let mut terms = BTreeMap::new();
        terms.insert(p, Laurent::one(var));
        ChromaticElement { n, var, terms }
    }

    pub fn identity(n: usize, var: Var) -> Self {
        ChromaticElement::from_partition(PlanarPartition::identity(n), var)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarPartition, &Laurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &PlanarPartition) -> Laurent {
        self.terms.get(p).cloned().unwrap_or_else(|| Laurent::zero(self.var))
    }

    pub fn add_term(&mut self, p: PlanarPartition, c: Laurent) {
        assert_eq!(p.strands(), self.n, "strand count mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
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

    pub fn add(&self, rhs: &ChromaticElement) -> ChromaticElement {
        assert_eq!(self.n, rhs.n);
        assert_eq!(self.var, rhs.var);
        let mut out = self.clone();
        for (p, c) in rhs.terms.iter() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &ChromaticElement) -> ChromaticElement {
        self.add(&rhs.scale_neg())
    }

    fn scale_neg(&self) -> ChromaticElement {
        ChromaticElement {
            n: self.n,
            var: self.var,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Laurent) -> ChromaticElement {
        if c.is_zero() {
            return ChromaticElement::zero(self.n, self.var);
        }
        let mut out = ChromaticElement::zero(self.n, self.var);
        for (p, k) in self.terms.iter() {
            out.add_term(p.clone(), k.checked_mul(c).expect("same variable"));
        }
        out
    }

    /// Convert every coefficient into the target variable.
    pub fn into_var(self, target: Var) -> ChromaticElement {
        if self.var == target {
            return self;
        }
        let mut out = ChromaticElement::zero(self.n, target);
        for (p, c) in self.terms {
            out.add_term(p, c.substitute(target).expect("valid conversion path"));
        }
        out
    }
}

impl fmt::Display for ChromaticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (p, c) in self.terms.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}) * {p}")?;
        }
        Ok(())
    }
}
