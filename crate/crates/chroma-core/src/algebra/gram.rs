use nalgebra::DMatrix;

use crate::arith::{Laurent, Var};

use super::{enumerate_basis, inner_product, ChromaticElement, Reducer};

/// Pairwise trace pairings of the basis diagrams, as exact polynomials in Q.
pub fn inner_product_table(r: &mut Reducer, n: usize) -> Vec<Vec<Laurent>> {
    let basis = enumerate_basis(n);
    let k = basis.len();
    let elems: Vec<ChromaticElement> = basis
        .into_iter()
        .map(|b| ChromaticElement::from_partition(b, Var::BigQ))
        .collect();
    let mut table = vec![vec![Laurent::zero(Var::BigQ); k]; k];
    for i in 0..k {
        for j in i..k {
            let p = inner_product(r, &elems[i], &elems[j]);
            table[j][i] = p.clone();
            table[i][j] = p;
        }
    }
    table
}

/// Gram matrix of the trace pairing on the basis of the n-strand algebra,
/// evaluated at a real Q.
pub fn gram_matrix(r: &mut Reducer, n: usize, q: f64) -> DMatrix<f64> {
    let table = inner_product_table(r, n);
    let k = table.len();
    DMatrix::from_fn(k, k, |i, j| table[i][j].eval_f64(q).expect("polynomial evaluation"))
}

/// Eigenvalues of the Gram matrix, ascending. The matrix is symmetric by
/// the Markov property of the trace.
pub fn gram_eigenvalues(r: &mut Reducer, n: usize, q: f64) -> Vec<f64> {
    let m = gram_matrix(r, n, q);
    let sym = nalgebra::SymmetricEigen::new(m);
    let mut eigs: Vec<f64> = sym.eigenvalues.iter().copied().collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn one_strand_gram() {
        let mut r = Reducer::new();
        let table = inner_product_table(&mut r, 1);
        assert_eq!(table.len(), 1);
        let q1 = Laurent::gen(Var::BigQ) - Laurent::one(Var::BigQ);
        assert_eq!(table[0][0], q1);
        let m = gram_matrix(&mut r, 1, 5.0);
        assert_eq!(m[(0, 0)], 4.0);
    }

    #[test]
    fn symmetric_table() {
        let mut r = Reducer::new();
        for n in 1..3usize {
            let t = inner_product_table(&mut r, n);
            for i in 0..t.len() {
                for j in 0..t.len() {
                    assert_eq!(t[i][j], t[j][i]);
                }
            }
        }
    }

    #[test]
    fn positive_definite_above_four() {
        let mut r = Reducer::new();
        for n in 1..4usize {
            for q in [4.0, 4.5, 5.0] {
                let eigs = gram_eigenvalues(&mut r, n, q);
                let max = eigs.last().copied().unwrap();
                assert!(
                    eigs[0] > 1e-9 * max,
                    "n={n} Q={q}: min eigenvalue {} vs max {max}",
                    eigs[0]
                );
            }
        }
    }

    #[test]
    fn semidefinite_at_special_values() {
        let mut r = Reducer::new();
        let beraha5 = 2.0 + 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        let beraha6 = 2.0 + 2.0 * (2.0 * std::f64::consts::PI / 6.0).cos();
        for n in 1..4usize {
            for q in [beraha5, beraha6] {
                let eigs = gram_eigenvalues(&mut r, n, q);
                let max = eigs.last().copied().unwrap();
                assert!(
                    eigs[0] >= -1e-9 * max,
                    "n={n} Q={q}: min eigenvalue {} vs max {max}",
                    eigs[0]
                );
            }
        }
    }

    #[test]
    fn pairing_at_integer_points_is_exact() {
        // <cupcap, cupcap> = tr((Q-1) cupcap) and the cupcap closes into a
        // single circle, so the pairing is (Q-1)^2.
        let mut r = Reducer::new();
        let cupcap = ChromaticElement::from_partition(
            super::super::PlanarPartition::new(2, [vec![0, 1], vec![2, 3]]),
            Var::BigQ,
        );
        let ip = inner_product(&mut r, &cupcap, &cupcap);
        let q1 = Laurent::gen(Var::BigQ) - Laurent::one(Var::BigQ);
        assert_eq!(ip, q1.pow(2));
        assert_eq!(ip.eval_rational(&rat(3)).unwrap(), rat(4));
    }
}
