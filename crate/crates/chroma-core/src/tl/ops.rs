use crate::arith::{rat, Laurent, Var};

use super::{TLDiagram, TLElement};

pub fn tl_identity(m: usize) -> TLElement {
    TLElement::from_diagram(TLDiagram::identity(m))
}

/// The idempotent generator at strands i, i+1 (1-based): a cup-cap with
/// coefficient 1/d.
pub fn generator_e(i: usize, m: usize) -> TLElement {
    assert!(i >= 1 && i + 1 <= m, "generator index {i} out of range for {m} strands");
    let mut pairs = vec![(i - 1, i), (2 * m - 1 - i, 2 * m - i)];
    for j in 0..m {
        if j != i - 1 && j != i {
            pairs.push((j, 2 * m - 1 - j));
        }
    }
    TLElement::from_diagram(TLDiagram::new(m, pairs)).scale(&Laurent::monomial(Var::D, -1, rat(1)))
}

/// The projector on two adjacent strands: identity minus cup-cap over d,
/// which is identity minus the generator.
pub fn jones_wenzl_p2(i: usize, m: usize) -> TLElement {
    tl_identity(m).sub(&generator_e(i, m))
}

/// Stack two diagrams (`a` below `b`), absorb each closed circle as a factor
/// of d, and return the diagram together with the circle count.
fn stack_diagrams(a: &TLDiagram, b: &TLDiagram) -> (TLDiagram, usize) {
    let m = a.strands();
    // node ids: a's points 0..2m, b's points 2m..4m
    let link = |p: usize| -> usize {
        if p < 2 * m {
            a.mate(p)
        } else {
            2 * m + b.mate(p - 2 * m)
        }
    };
    // junction partner for middle points: a's top geometric i <-> b's bottom i
    let junction = |p: usize| -> Option<usize> {
        if p >= m && p < 2 * m {
            // a's top circular index p = geometric 2m-p (1-based)
            let geo = 2 * m - p; // 1-based from left
            Some(2 * m + (geo - 1))
        } else if p >= 2 * m && p < 3 * m {
            let geo = p - 2 * m + 1;
            Some(2 * m - geo)
        } else {
            None
        }
    };
    let external = |p: usize| -> Option<usize> {
        if p < m {
            Some(p) // result bottom
        } else if p >= 3 * m {
            Some(p - 2 * m) // result top keeps circular index m..2m
        } else {
            None
        }
    };
    let mut visited = vec![false; 4 * m];
    let mut pairs = Vec::new();
    for start in (0..m).chain(3 * m..4 * m) {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut p = link(start);
        loop {
            visited[p] = true;
            match external(p) {
                Some(end) => {
                    pairs.push((external(start).unwrap(), end));
                    break;
                }
                None => {
                    let j = junction(p).expect("middle point");
                    visited[j] = true;
                    p = link(j);
                }
            }
        }
    }
    let mut circles = 0;
    for p in m..3 * m {
        if visited[p] {
            continue;
        }
        circles += 1;
        let mut q = p;
        loop {
            visited[q] = true;
            let l = link(q);
            visited[l] = true;
            q = junction(l).expect("middle point");
            if q == p {
                break;
            }
        }
    }
    let dedup: Vec<(usize, usize)> = pairs.into_iter().filter(|&(x, y)| x < y).collect();
    (TLDiagram::new(m, dedup), circles)
}

/// Bilinear product by vertical stacking with circle weight d.
pub fn tl_multiply(a: &TLElement, b: &TLElement) -> TLElement {
    assert_eq!(a.strands(), b.strands(), "strand count mismatch");
    let mut out = TLElement::zero(a.strands());
    for (da, ca) in a.terms() {
        for (db, cb) in b.terms() {
            let (d, circles) = stack_diagrams(da, db);
            let w = Laurent::monomial(Var::D, circles as i64, rat(1));
            out.add_term(d, ca.checked_mul(cb).unwrap().checked_mul(&w).unwrap());
        }
    }
    out
}

/// Markov trace: close bottom point i to the top point directly above it
/// and weigh each resulting circle by d.
pub fn tl_trace(a: &TLElement) -> Laurent {
    let m = a.strands();
    let mut acc = Laurent::zero(Var::D);
    for (d, c) in a.terms() {
        let mut visited = vec![false; 2 * m];
        let mut circles = 0i64;
        for p in 0..2 * m {
            if visited[p] {
                continue;
            }
            circles += 1;
            let mut q = p;
            loop {
                visited[q] = true;
                let mate = d.mate(q);
                visited[mate] = true;
                q = 2 * m - 1 - mate; // closure partner
                if q == p {
                    break;
                }
            }
        }
        acc = acc + Laurent::monomial(Var::D, circles, rat(1)).checked_mul(c).unwrap();
    }
    acc
}
