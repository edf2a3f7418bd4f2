//! Borel subalgebras and their spectral matrices.
//!
//! With the coroot basis `h_i` of the Cartan subalgebra and the root vectors
//! `E_alpha` (alpha > 0) ordered by height, `ad` of a Borel subalgebra is
//! triangular, so its characteristic polynomial is
//! `z0^n * prod_j (z0 + sum_i alpha_j(h_i) z_i)`.

use serde::Serialize;

use crate::charpoly::LinearFactors;
use crate::exactnum::{rank_over_rationals, Rational, RationalMatrix};
use crate::rootsys::{RootSystem, Weight};
use crate::weights::WeightMultiset;

/// Coefficient matrix of the linear factors, `(n + s) x (n + s)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralMatrix {
    /// Rank of the root system, `dim h`.
    pub n: usize,
    /// Number of positive roots.
    pub s: usize,
    pub matrix: RationalMatrix,
}

/// The factored adjoint polynomial of the Borel subalgebra.
pub fn borel_factors(rs: &RootSystem) -> LinearFactors {
    let mut ms = WeightMultiset::new(rs.tag());
    ms.insert(Weight::zero(rs.rank()), rs.rank() as u64);
    for root in rs.positive_roots() {
        ms.insert(root.weight.clone(), 1);
    }
    ms.into()
}

/// `n` zero rows for the Cartan basis, then one row per positive root in height order.
pub fn spectral_matrix(rs: &RootSystem) -> SpectralMatrix {
    let n = rs.rank();
    let s = rs.positive_roots().len();
    let mut matrix = RationalMatrix::zeros(n + s, n + s);
    for (j, root) in rs.positive_roots().iter().enumerate() {
        for (i, &v) in root.weight.coords().iter().enumerate() {
            matrix[(n + j, i)] = Rational::from(v);
        }
    }
    SpectralMatrix { n, s, matrix }
}

pub fn spectral_rank(rs: &RootSystem) -> usize {
    rank_over_rationals(&spectral_matrix(rs).matrix)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelReport {
    pub n: usize,
    pub s: usize,
    pub rank: usize,
    pub pass: bool,
}

impl BorelReport {
    pub fn summary(&self) -> String {
        if self.pass {
            format!("rank(lambda_B) = {} = dim h : PASS", self.rank)
        } else {
            format!("rank(lambda_B) = {} != {} = dim h : FAIL", self.rank, self.n)
        }
    }
}

pub fn borel_report(rs: &RootSystem) -> BorelReport {
    let rank = spectral_rank(rs);
    BorelReport { n: rs.rank(), s: rs.positive_roots().len(), rank, pass: rank == rs.rank() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{supported_types, Family};

    #[test]
    fn small_cases() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let f = borel_factors(&a1);
        assert_eq!(f.as_multiset().get(&Weight(vec![0])), 1);
        assert_eq!(f.as_multiset().get(&Weight(vec![2])), 1);
        let m = spectral_matrix(&a1).matrix;
        assert_eq!(m, RationalMatrix::from_i64_rows(&[vec![0, 0], vec![2, 0]]).unwrap());
        assert_eq!(spectral_rank(&a1), 1);

        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let f = borel_factors(&a2);
        let want = WeightMultiset::from_pairs(
            a2.tag(),
            [
                (Weight(vec![0, 0]), 2),
                (Weight(vec![2, -1]), 1),
                (Weight(vec![-1, 2]), 1),
                (Weight(vec![1, 1]), 1),
            ],
        )
        .unwrap();
        assert_eq!(f.as_multiset(), &want);
    }

    #[test]
    fn rank_equals_cartan_dimension_everywhere() {
        for tag in supported_types(8) {
            let rs = RootSystem::build(tag.family, tag.rank).unwrap();
            let report = borel_report(&rs);
            assert!(report.pass, "{tag}");
            assert_eq!(borel_factors(&rs).degree() as usize, rs.rank() + rs.positive_roots().len());
        }
        let g2 = RootSystem::build(Family::G, 2).unwrap();
        assert_eq!(borel_report(&g2).summary(), "rank(lambda_B) = 2 = dim h : PASS");
    }

    #[test]
    fn simple_root_rows_already_have_full_rank() {
        for tag in supported_types(8) {
            let rs = RootSystem::build(tag.family, tag.rank).unwrap();
            let rows: Vec<Vec<i64>> = (0..rs.rank()).map(|i| rs.simple_root_weight(i).0).collect();
            let m = RationalMatrix::from_i64_rows(&rows).unwrap();
            assert_eq!(rank_over_rationals(&m), rs.rank(), "{tag}");
        }
    }

    #[test]
    fn matrix_shape() {
        let b3 = RootSystem::build(Family::B, 3).unwrap();
        let sm = spectral_matrix(&b3);
        assert_eq!((sm.n, sm.s), (3, 9));
        assert_eq!(sm.matrix.rows(), 12);
        for i in 0..sm.matrix.rows() {
            for j in 0..sm.matrix.cols() {
                if i < sm.n || j >= sm.n {
                    assert!(sm.matrix[(i, j)].is_zero());
                }
            }
        }
    }
}
