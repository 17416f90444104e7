use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::enumerate_basis;
use crate::arith::Rational;

use super::{phi, TLDiagram};

/// Rank of the matrix expressing the doubled basis diagrams of the n-strand
/// chromatic algebra over the Temperley-Lieb diagram basis, with the loop
/// weight evaluated at an exact rational d. Injectivity predicts rank equal
/// to the basis size at generic d.
pub fn phi_rank(n: usize, d: &Rational) -> usize {
    assert!(!d.is_zero(), "loop weight must be nonzero");
    let basis = enumerate_basis(n);
    // Collect the image vectors, indexing the TL diagrams that appear.
    let mut diagram_index: BTreeMap<TLDiagram, usize> = BTreeMap::new();
    let mut columns: Vec<Vec<(usize, Rational)>> = Vec::new();
    for b in &basis {
        let img = phi(&b.draw()).expect("basis diagrams are small");
        let mut col = Vec::new();
        for (diag, coeff) in img.terms() {
            let next = diagram_index.len();
            let idx = *diagram_index.entry(diag.clone()).or_insert(next);
            col.push((idx, coeff.eval_rational(d).expect("nonzero d")));
        }
        columns.push(col);
    }
    let rows = diagram_index.len();
    let cols = columns.len();
    let mut m = vec![vec![Rational::zero(); cols]; rows];
    for (j, col) in columns.into_iter().enumerate() {
        for (i, v) in col {
            m[i][j] = v;
        }
    }
    // Exact Gaussian elimination.
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&i| !m[i][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let inv = m[row][col].clone().recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in 0..cols {
                    let sub = &m[row][c] * &f;
                    m[i][c] = &m[i][c] - &sub;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn ranks_match_basis_sizes() {
        assert_eq!(phi_rank(0, &rat(2)), 1);
        assert_eq!(phi_rank(1, &rat(3)), 1);
        assert_eq!(phi_rank(2, &ratio(7, 2)), 3);
        assert_eq!(phi_rank(3, &ratio(13, 5)), 15);
    }
}
