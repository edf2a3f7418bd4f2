use liecp::charpoly::{expand_small, linearize};
use liecp::oracle::{det_pencil, sl2_matrices};
use liecp::sl2embed::irrep_closed_form;
use liecp::{CharPoly, Family, RootSystem, Weight};

#[test]
fn cartan_restriction_matches_linearized_factors() {
    let a1 = RootSystem::build(Family::A, 1).unwrap();
    for m in 0..=8usize {
        let det = det_pencil(&sl2_matrices(m)).unwrap();
        let restricted = det.restrict_to_zero(&[2, 3]).truncate_vars(2).unwrap();
        let f = CharPoly::irreducible(a1.tag(), Weight(vec![m as i64])).unwrap();
        let expanded = expand_small(&linearize(&a1, &f).unwrap(), 64).unwrap();
        assert_eq!(restricted, expanded, "m = {m}");
    }
}

#[test]
fn determinant_is_homogeneous_of_dimension_degree() {
    for m in 0..=8usize {
        let det = det_pencil(&sl2_matrices(m)).unwrap();
        assert!(det.is_homogeneous_of_degree(m as u32 + 1));
        assert_eq!(det, irrep_closed_form(m as u64));
    }
}
