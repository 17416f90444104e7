use num_traits::Zero;

use crate::arith::{Laurent, Var};
use crate::graphs::dual_chromatic;
use crate::planar::EmbeddedGraph;

use super::{ChromaticElement, Reducer};

impl Reducer {
    /// Reduce and convert into the coefficient variable of the surrounding
    /// computation.
    fn reduce_in(&mut self, g: &EmbeddedGraph, var: Var) -> ChromaticElement {
        self.reduce(g).into_var(var)
    }
}

/// Product by vertical stacking: `a` at the bottom, `b` above it, basis
/// diagrams drawn canonically and re-reduced.
pub fn multiply(
    r: &mut Reducer,
    a: &ChromaticElement,
    b: &ChromaticElement,
) -> ChromaticElement {
    assert_eq!(a.strands(), b.strands(), "strand count mismatch");
    assert_eq!(a.var(), b.var(), "coefficient variable mismatch");
    let mut out = ChromaticElement::zero(a.strands(), a.var());
    for (pa, ca) in a.terms() {
        let ga = pa.draw();
        for (pb, cb) in b.terms() {
            let stacked = ga.stack(&pb.draw()).expect("same strand count");
            let red = r.reduce_in(&stacked, a.var());
            out = out.add(&red.scale(&ca.checked_mul(cb).expect("same variable")));
        }
    }
    out
}

/// Markov trace of a single basis diagram: close the diagram into the
/// sphere and take `1/Q` times the chromatic polynomial of the dual of the
/// closure. The division is exact; a remainder signals an embedding bug.
fn trace_partition(r: &mut Reducer, p: &super::PlanarPartition) -> Laurent {
    let closed = p.draw().closure().expect("basis diagram closes");
    let chi = dual_chromatic(&closed, &mut r.chromatic).expect("closed graph");
    assert!(
        chi.coeff(0).is_zero() && chi.min_exp().map_or(true, |e| e >= 0),
        "trace: chromatic polynomial of the dual closure must be divisible by Q"
    );
    chi.exact_div(&Laurent::gen(Var::BigQ)).expect("monomial division")
}

/// Markov trace, extended linearly. The result is in the element's own
/// coefficient variable.
pub fn trace(r: &mut Reducer, a: &ChromaticElement) -> Laurent {
    let mut acc = Laurent::zero(a.var());
    for (p, c) in a.terms() {
        let t = trace_partition(r, p)
            .substitute(a.var())
            .expect("trace polynomial converts");
        acc = acc + t * c.clone();
    }
    acc
}

/// Reflection in a horizontal line, extended linearly. Coefficients are
/// rational, so no conjugation is applied.
pub fn reflect(a: &ChromaticElement) -> ChromaticElement {
    let mut out = ChromaticElement::zero(a.strands(), a.var());
    for (p, c) in a.terms() {
        out.add_term(p.reflected(), c.clone());
    }
    out
}

/// Trace pairing `<a,b> = tr(a . reflect(b))`.
pub fn inner_product(r: &mut Reducer, a: &ChromaticElement, b: &ChromaticElement) -> Laurent {
    let prod = multiply(r, a, &reflect(b));
    trace(r, &prod)
}

/// Close off the rightmost strand, mapping an n-strand element to an
/// (n-1)-strand one; the partial Markov closure used for curl checks.
pub fn close_rightmost(r: &mut Reducer, a: &ChromaticElement) -> ChromaticElement {
    assert!(a.strands() >= 1);
    let mut out = ChromaticElement::zero(a.strands() - 1, a.var());
    for (p, c) in a.terms() {
        let closed = p.draw().close_rightmost().expect("strand exists");
        let red = r.reduce(&closed).into_var(a.var());
        out = out.add(&red.scale(c));
    }
    out
}
