//! Symbolic determinants of matrix pencils, used as an independent check at
//! `sl(2)` scale.

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{rank_over_rationals, Rational, RationalMatrix};
use crate::poly::SparsePoly;

pub const DEFAULT_PENCIL_CAP: usize = 12;
pub const MAX_GENERATORS: usize = 8;

/// `z0 I + z1 A_1 + ... + zm A_m` for square matrices `A_i` of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixPencil {
    pub size: usize,
    pub generators: Vec<RationalMatrix>,
}

impl MatrixPencil {
    pub fn new(generators: Vec<RationalMatrix>) -> Result<Self> {
        let size = generators.first().map_or(0, RationalMatrix::rows);
        if generators.iter().any(|g| g.rows() != size || g.cols() != size) {
            return Err(Error::Shape("pencil generators must be square of equal size".into()));
        }
        Ok(MatrixPencil { size, generators })
    }

    fn nvars(&self) -> usize {
        self.generators.len() + 1
    }

    fn entry(&self, i: usize, j: usize) -> SparsePoly {
        let mut coeffs = vec![Rational::from(i64::from(i == j))];
        coeffs.extend(self.generators.iter().map(|g| g[(i, j)].clone()));
        SparsePoly::linear(&coeffs)
    }

    fn symbolic(&self) -> Vec<Vec<SparsePoly>> {
        (0..self.size).map(|i| (0..self.size).map(|j| self.entry(i, j)).collect()).collect()
    }
}

/// `(h, e, f)` on `V(m)` with basis `v_0..v_m`:
/// `h v_k = (m-2k) v_k`, `e v_k = (m-k+1) v_{k-1}`, `f v_k = (k+1) v_{k+1}`.
pub fn sl2_matrices(m: usize) -> MatrixPencil {
    let d = m + 1;
    let mut h = RationalMatrix::zeros(d, d);
    let mut e = RationalMatrix::zeros(d, d);
    let mut f = RationalMatrix::zeros(d, d);
    for k in 0..d {
        h[(k, k)] = Rational::from(m as i64 - 2 * k as i64);
        if k > 0 {
            e[(k - 1, k)] = Rational::from((m - k + 1) as i64);
        }
        if k < m {
            f[(k + 1, k)] = Rational::from((k + 1) as i64);
        }
    }
    MatrixPencil { size: d, generators: vec![h, e, f] }
}

/// `ad h, ad e, ad f` in the basis `(h, e, f)`.
pub fn sl2_adjoint_pencil() -> MatrixPencil {
    let m = |rows: [[i64; 3]; 3]| RationalMatrix::from_i64_rows(&rows.map(Vec::from)).unwrap();
    // Columns are images of h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
    let ad_h = m([[0, 0, 0], [0, 2, 0], [0, 0, -2]]);
    let ad_e = m([[0, 0, 1], [-2, 0, 0], [0, 0, 0]]);
    let ad_f = m([[0, -1, 0], [0, 0, 0], [2, 0, 0]]);
    MatrixPencil { size: 3, generators: vec![ad_h, ad_e, ad_f] }
}

pub fn commutator(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    a.mul(b)?.sub(&b.mul(a)?)
}

/// Expanded `det(z0 I + sum_i z_i A_i)`.
pub fn det_pencil(p: &MatrixPencil) -> Result<SparsePoly> {
    det_pencil_with_cap(p, DEFAULT_PENCIL_CAP)
}

pub fn det_pencil_with_cap(p: &MatrixPencil, cap: usize) -> Result<SparsePoly> {
    if p.size > cap {
        return Err(Error::SizeCapExceeded { size: p.size, cap });
    }
    if p.generators.len() > MAX_GENERATORS {
        return Err(Error::Shape(format!(
            "{} generators, at most {MAX_GENERATORS} supported",
            p.generators.len()
        )));
    }
    if p.size < 5 {
        Ok(det_cofactor(&p.symbolic(), p.nvars()))
    } else {
        Ok(det_bareiss(p.symbolic(), p.nvars()))
    }
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<SparsePoly>], nvars: usize) -> SparsePoly {
    let n = m.len();
    if n == 0 {
        return SparsePoly::one(nvars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = SparsePoly::zero(nvars);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SparsePoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &det_cofactor(&minor, nvars);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Fraction-free elimination over the polynomial ring; every division is exact.
pub fn det_bareiss(mut m: Vec<Vec<SparsePoly>>, nvars: usize) -> SparsePoly {
    let n = m.len();
    if n == 0 {
        return SparsePoly::one(nvars);
    }
    let mut negate = false;
    let mut prev = SparsePoly::one(nvars);
    for k in 0..n - 1 {
        let Some(pivot) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return SparsePoly::zero(nvars);
        };
        if pivot != k {
            m.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = &m[k][k] * &m[i][j];
                let num = if m[i][k].is_zero() || m[k][j].is_zero() {
                    a
                } else {
                    &a - &(&m[i][k] * &m[k][j])
                };
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = SparsePoly::zero(nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// `diag(1, B)`.
pub fn block_base_change(b: &RationalMatrix) -> RationalMatrix {
    let m = b.rows();
    let mut d = RationalMatrix::zeros(m + 1, m + 1);
    d[(0, 0)] = Rational::one();
    for i in 0..m {
        for j in 0..b.cols() {
            d[(i + 1, j + 1)] = b[(i, j)].clone();
        }
    }
    d
}

/// `f(zD)`: each `z_j` becomes `sum_i z_i D[i][j]`.
pub fn substitute_base_change(f: &SparsePoly, d: &RationalMatrix) -> Result<SparsePoly> {
    let n = f.nvars();
    if d.rows() != n || d.cols() != n {
        return Err(Error::Shape(format!(
            "substitution matrix is {}x{}, polynomial has {n} variables",
            d.rows(),
            d.cols()
        )));
    }
    let block_ok = d[(0, 0)] == Rational::one()
        && (1..n).all(|k| d[(0, k)].is_zero() && d[(k, 0)].is_zero());
    if !block_ok {
        return Err(Error::Shape("substitution matrix must have the form diag(1, B)".into()));
    }
    let subs: Vec<SparsePoly> = (0..n)
        .map(|j| SparsePoly::linear(&(0..n).map(|i| d[(i, j)].clone()).collect::<Vec<_>>()))
        .collect();
    Ok(f.compose(&subs))
}

/// The pencil in the new basis `w_i = sum_j B[i][j] v_j`.
pub fn transform_pencil(p: &MatrixPencil, b: &RationalMatrix) -> Result<MatrixPencil> {
    let m = p.generators.len();
    if b.rows() != m || b.cols() != m {
        return Err(Error::Shape(format!("base change must be {m}x{m}")));
    }
    let generators = (0..m)
        .map(|i| {
            (0..m).try_fold(RationalMatrix::zeros(p.size, p.size), |acc, j| {
                acc.add(&p.generators[j].scale(&b[(i, j)]))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MatrixPencil { size: p.size, generators })
}

/// Checks `f_{B2}(z) = f_{B1}(zD)` with `D = diag(1, B)`.
pub fn verify_base_change(p: &MatrixPencil, b: &RationalMatrix) -> Result<bool> {
    let m = p.generators.len();
    if b.rows() != m || b.cols() != m {
        return Err(Error::Shape(format!("base change must be {m}x{m}")));
    }
    if rank_over_rationals(b) < m {
        return Err(Error::SingularB);
    }
    let original = det_pencil(p)?;
    let transformed = det_pencil(&transform_pencil(p, b)?)?;
    Ok(transformed == substitute_base_change(&original, &block_base_change(b))?)
}

/// The automorphism `(h, e, f) -> (-h, f, e)` as a base change.
pub fn tau_automorphism() -> RationalMatrix {
    RationalMatrix::from_i64_rows(&[vec![-1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).unwrap()
}

/// A random integer matrix with determinant +-1: a product of elementary
/// row operations, a permutation and sign flips.
pub fn random_unimodular<R: Rng>(size: usize, rng: &mut R) -> RationalMatrix {
    let mut rows: Vec<Vec<i64>> =
        (0..size).map(|i| (0..size).map(|j| i64::from(i == j)).collect()).collect();
    if size > 1 {
        for _ in 0..3 * size {
            let a = rng.gen_range(0..size);
            let mut b = rng.gen_range(0..size - 1);
            if b >= a {
                b += 1;
            }
            let k = rng.gen_range(-2..=2);
            let src = rows[a].clone();
            for (x, s) in rows[b].iter_mut().zip(&src) {
                *x += k * s;
            }
        }
        let a = rng.gen_range(0..size);
        let b = rng.gen_range(0..size);
        rows.swap(a, b);
    }
    for row in rows.iter_mut() {
        if rng.gen_bool(0.5) {
            row.iter_mut().for_each(|x| *x = -*x);
        }
    }
    RationalMatrix::from_i64_rows(&rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sl2_brackets_hold() {
        for m in 0..7 {
            let p = sl2_matrices(m);
            let [h, e, f] = [&p.generators[0], &p.generators[1], &p.generators[2]];
            assert_eq!(commutator(h, e).unwrap(), e.scale(&Rational::from(2)));
            assert_eq!(commutator(h, f).unwrap(), f.scale(&Rational::from(-2)));
            assert_eq!(&commutator(e, f).unwrap(), h);
        }
        let p = sl2_matrices(1);
        assert_eq!(p.generators[0], RationalMatrix::from_i64_rows(&[vec![1, 0], vec![0, -1]]).unwrap());
        assert_eq!(p.generators[1], RationalMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]).unwrap());
        assert_eq!(p.generators[2], RationalMatrix::from_i64_rows(&[vec![0, 0], vec![1, 0]]).unwrap());
        let p = sl2_matrices(0);
        assert!(p.generators.iter().all(|g| g == &RationalMatrix::zeros(1, 1)));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_pencil(&sl2_matrices(1)).unwrap().to_string(), "z0^2 - z1^2 - z2*z3");
        let v2 = det_pencil(&sl2_matrices(2)).unwrap();
        assert_eq!(v2.to_string(), "z0^3 - 4*z0*z1^2 - 4*z0*z2*z3");
        assert_eq!(det_pencil(&sl2_adjoint_pencil()).unwrap(), v2);
        assert_eq!(det_pencil(&sl2_matrices(0)).unwrap().to_string(), "z0");
    }

    #[test]
    fn adjoint_pencil_is_ad() {
        let p = sl2_adjoint_pencil();
        let [h, e, f] = [&p.generators[0], &p.generators[1], &p.generators[2]];
        assert_eq!(&commutator(e, f).unwrap(), h);
        assert_eq!(commutator(h, e).unwrap(), e.scale(&Rational::from(2)));
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        for m in 4..8 {
            let p = sl2_matrices(m);
            assert_eq!(det_bareiss(p.symbolic(), 4), det_cofactor(&p.symbolic(), 4), "m = {m}");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let b = random_unimodular(3, &mut rng);
            let p = transform_pencil(&sl2_matrices(5), &b).unwrap();
            assert_eq!(det_bareiss(p.symbolic(), 4), det_cofactor(&p.symbolic(), 4));
        }
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        // Antidiagonal pencil: the first pivot column starts with zero.
        let g = RationalMatrix::from_i64_rows(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]).unwrap();
        let p = MatrixPencil::new(vec![g]).unwrap();
        let mut sym = p.symbolic();
        for (i, row) in sym.iter_mut().enumerate() {
            row[i] = &row[i] - &SparsePoly::var(2, 0);
        }
        assert_eq!(det_bareiss(sym.clone(), 2), det_cofactor(&sym, 2));
        assert_eq!(det_bareiss(sym, 2).to_string(), "-z1^3");
    }

    #[test]
    fn caps() {
        assert_eq!(
            det_pencil(&sl2_matrices(12)),
            Err(Error::SizeCapExceeded { size: 13, cap: 12 })
        );
        assert!(det_pencil_with_cap(&sl2_matrices(3), 3).is_err());
    }

    #[test]
    fn substitution_examples() {
        let f = det_pencil(&sl2_matrices(1)).unwrap();
        assert_eq!(substitute_base_change(&f, &RationalMatrix::identity(4)).unwrap(), f);
        let swap = RationalMatrix::from_i64_rows(&[vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(substitute_base_change(&f, &block_base_change(&swap)).unwrap(), f);
        let tau = block_base_change(&tau_automorphism());
        assert_eq!(substitute_base_change(&f, &tau).unwrap(), f);

        let mut bad = RationalMatrix::identity(4);
        bad[(0, 1)] = Rational::one();
        assert!(matches!(substitute_base_change(&f, &bad), Err(Error::Shape(_))));
    }

    #[test]
    fn base_change_examples() {
        let id = RationalMatrix::identity(3);
        assert!(verify_base_change(&sl2_matrices(2), &id).unwrap());
        let diag = RationalMatrix::from_i64_rows(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]).unwrap();
        assert!(verify_base_change(&sl2_matrices(1), &diag).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let b = random_unimodular(3, &mut rng);
        assert!(verify_base_change(&sl2_matrices(2), &b).unwrap());
        let singular = RationalMatrix::from_i64_rows(&[vec![1, 1, 0], vec![2, 2, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(verify_base_change(&sl2_matrices(1), &singular), Err(Error::SingularB));
    }

    #[test]
    fn unimodular_matrices_are_invertible_over_z() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let b = random_unimodular(3, &mut rng);
            let inv = b.inverse().unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    assert!(inv[(i, j)].is_integer());
                }
            }
        }
    }
}
