//! Root systems of the simple types A-G in their standard ambient realizations.
//!
//! Conventions:
//! - `cartan[i][j] = <alpha_j, alpha_i> = 2(alpha_j, alpha_i)/(alpha_i, alpha_i)`.
//! - A [`Weight`] stores `lambda(h_i) = <lambda, alpha_i>`, i.e. coordinates in
//!   the fundamental-weight basis.
//! - A_n lives in R^{n+1}; B_n, C_n, D_n, F_4 in R^n; E_6, E_7, E_8 in R^8
//!   (Bourbaki labelling); G_2 in the plane x+y+z = 0 of R^3.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, RationalMatrix};

/// Largest rank accepted for the classical families by [`RootSystem::build`].
pub const DEFAULT_MAX_CLASSICAL_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Ranks accepted for this family when classical ranks are capped at `cap`.
    pub fn ranks(self, cap: usize) -> Vec<usize> {
        match self {
            Family::A => (1..=cap).collect(),
            Family::B | Family::C => (2..=cap).collect(),
            Family::D => (4..=cap).collect(),
            Family::E => vec![6, 7, 8],
            Family::F => vec![4],
            Family::G => vec![2],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// Identifies a root system: family and rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeTag {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Every supported type with classical ranks capped at `cap`.
pub fn supported_types(cap: usize) -> Vec<TypeTag> {
    Family::ALL
        .iter()
        .flat_map(|&family| family.ranks(cap).into_iter().map(move |rank| TypeTag { family, rank }))
        .collect()
}

/// A vector in the ambient Euclidean space of a realization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AmbientVector(pub Vec<Rational>);

impl AmbientVector {
    pub fn zero(dim: usize) -> Self {
        AmbientVector(vec![Rational::zero(); dim])
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        AmbientVector(coords.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &AmbientVector) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn add_scaled(&mut self, other: &AmbientVector, s: &Rational) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += &(b * s);
        }
    }
}

/// Integer coordinates `lambda(h_{alpha_i})` in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    /// `self + k * other`
    pub fn add_multiple(&self, other: &Weight, k: i64) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated integers, optionally wrapped in brackets: `1,0,2` or `[1,0,2]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad weight {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootClass {
    Long,
    Short,
}

impl RootClass {
    pub fn as_str(self) -> &'static str {
        match self {
            RootClass::Long => "long",
            RootClass::Short => "short",
        }
    }
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RootClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "long" | "alpha" => Ok(RootClass::Long),
            "short" | "gamma" => Ok(RootClass::Short),
            _ => Err(Error::Parse(format!("unknown root class {s:?}"))),
        }
    }
}

/// A positive root in all three coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveRoot {
    pub ambient: AmbientVector,
    /// Coefficients in the simple-root basis (nonnegative).
    pub simple_coords: Vec<i64>,
    /// `<beta, alpha_i>` for each simple root.
    pub weight: Weight,
    pub height: i64,
    pub class: RootClass,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    tag: TypeTag,
    ambient_dim: usize,
    simple_roots: Vec<AmbientVector>,
    positive_roots: Vec<PositiveRoot>,
    cartan: Vec<Vec<i64>>,
    fundamental_weights: Vec<AmbientVector>,
    rho: AmbientVector,
    /// `height(lambda) = sum_j height_coeffs[j] * lambda_j`.
    height_coeffs: Vec<Rational>,
    /// `|alpha_j|^2 / min |alpha|^2`, an integer in {1, 2, 3}.
    length_ratios: Vec<i64>,
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

fn ambient_simple_roots(tag: TypeTag) -> (usize, Vec<AmbientVector>) {
    let n = tag.rank;
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = unit(dim, i);
        v[j] = Rational::from(-1);
        AmbientVector(v)
    };
    match tag.family {
        Family::A => (n + 1, (0..n).map(|i| diff(n + 1, i, i + 1)).collect()),
        Family::B | Family::C | Family::D => {
            let mut roots: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let last = match tag.family {
                Family::B => AmbientVector(unit(n, n - 1)),
                Family::C => {
                    let mut v = unit(n, n - 1);
                    v[n - 1] = Rational::from(2);
                    AmbientVector(v)
                }
                _ => {
                    let mut v = unit(n, n - 1);
                    v[n - 2] = Rational::one();
                    AmbientVector(v)
                }
            };
            roots.push(last);
            (n, roots)
        }
        Family::E => {
            let half = Rational::new(1, 2);
            let mut a1 = vec![-&half; 8];
            a1[0] = half.clone();
            a1[7] = half;
            let mut a2 = unit(8, 0);
            a2[1] = Rational::one();
            let mut roots = vec![AmbientVector(a1), AmbientVector(a2), diff(8, 1, 0)];
            roots.extend((2..7).map(|i| diff(8, i, i - 1)));
            roots.truncate(n);
            (8, roots)
        }
        Family::F => {
            let half = Rational::new(1, 2);
            let mut a4 = vec![-&half; 4];
            a4[0] = half;
            (4, vec![diff(4, 1, 2), diff(4, 2, 3), AmbientVector(unit(4, 3)), AmbientVector(a4)])
        }
        Family::G => (
            3,
            vec![AmbientVector::from_i64(&[1, -1, 0]), AmbientVector::from_i64(&[-2, 1, 1])],
        ),
    }
}

impl RootSystem {
    /// Builds the root system of a supported simple type.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Self::build_with_rank_cap(family, rank, DEFAULT_MAX_CLASSICAL_RANK)
    }

    /// Like [`RootSystem::build`] with a different cap on classical ranks.
    pub fn build_with_rank_cap(family: Family, rank: usize, cap: usize) -> Result<Self> {
        if !family.ranks(cap).contains(&rank) {
            return Err(Error::UnsupportedType { family: family.letter(), rank });
        }
        let tag = TypeTag { family, rank };
        let (ambient_dim, simple_roots) = ambient_simple_roots(tag);
        let n = rank;

        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = Rational::from(2) * simple_roots[j].dot(&simple_roots[i])
                            / simple_roots[i].dot(&simple_roots[i]);
                        v.to_i64().expect("Cartan integers are integral")
                    })
                    .collect()
            })
            .collect();

        let sq: Vec<Rational> = simple_roots.iter().map(|a| a.dot(a)).collect();
        let min_sq = sq.iter().min().cloned().expect("rank >= 1");
        let length_ratios: Vec<i64> =
            sq.iter().map(|s| (s / &min_sq).to_i64().expect("integral length ratio")).collect();
        let max_ratio = *length_ratios.iter().max().unwrap();

        // Close the simple roots under simple reflections, staying positive.
        let pairing = |c: &[i64], i: usize| -> i64 { (0..n).map(|j| c[j] * cartan[i][j]).sum() };
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut c = vec![0; n];
            c[i] = 1;
            seen.insert(c.clone());
            queue.push_back(c);
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..n {
                let p = pairing(&c, i);
                if p == 0 {
                    continue;
                }
                let mut r = c.clone();
                r[i] -= p;
                if r.iter().all(|&x| x >= 0) && seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }

        let mut positive_roots: Vec<PositiveRoot> = seen
            .into_iter()
            .map(|c| {
                let mut ambient = AmbientVector::zero(ambient_dim);
                for (j, &cj) in c.iter().enumerate() {
                    ambient.add_scaled(&simple_roots[j], &Rational::from(cj));
                }
                let weight = Weight((0..n).map(|i| pairing(&c, i)).collect());
                let ratio = (ambient.dot(&ambient) / &min_sq).to_i64().unwrap();
                let class = if ratio == max_ratio { RootClass::Long } else { RootClass::Short };
                PositiveRoot { ambient, height: c.iter().sum(), simple_coords: c, weight, class }
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            a.height.cmp(&b.height).then_with(|| b.simple_coords.cmp(&a.simple_coords))
        });

        let cartan_m = RationalMatrix::from_i64_rows(&cartan)?;
        let cartan_inv = cartan_m.inverse().expect("Cartan matrices are invertible");
        // omega_i = sum_k M[i][k] alpha_k with M = (C^T)^{-1} = (C^{-1})^T.
        let fundamental_weights: Vec<AmbientVector> = (0..n)
            .map(|i| {
                let mut w = AmbientVector::zero(ambient_dim);
                for (k, alpha) in simple_roots.iter().enumerate() {
                    w.add_scaled(alpha, &cartan_inv[(k, i)]);
                }
                w
            })
            .collect();
        let mut rho = AmbientVector::zero(ambient_dim);
        for w in &fundamental_weights {
            rho.add_scaled(w, &Rational::one());
        }
        let height_coeffs =
            (0..n).map(|j| (0..n).map(|i| cartan_inv[(i, j)].clone()).sum()).collect();

        Ok(RootSystem {
            tag,
            ambient_dim,
            simple_roots,
            positive_roots,
            cartan,
            fundamental_weights,
            rho,
            height_coeffs,
            length_ratios,
        })
    }

    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn family(&self) -> Family {
        self.tag.family
    }

    pub fn rank(&self) -> usize {
        self.tag.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[AmbientVector] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[AmbientVector] {
        &self.fundamental_weights
    }

    pub fn weyl_vector(&self) -> &AmbientVector {
        &self.rho
    }

    /// `|alpha_j|^2 / min |alpha|^2` for each simple root.
    pub fn length_ratios(&self) -> &[i64] {
        &self.length_ratios
    }

    /// Dimension of the Lie algebra: rank + number of roots.
    pub fn algebra_dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// All roots (positive then negative) in fundamental coordinates.
    pub fn all_root_weights(&self) -> Vec<Weight> {
        let pos = self.positive_roots.iter().map(|r| r.weight.clone());
        let neg = self.positive_roots.iter().map(|r| r.weight.neg());
        pos.chain(neg).collect()
    }

    /// All roots in ambient coordinates, paired with their length class.
    pub fn all_roots_ambient(&self) -> Vec<(AmbientVector, RootClass)> {
        let mut out: Vec<_> =
            self.positive_roots.iter().map(|r| (r.ambient.clone(), r.class)).collect();
        out.extend(self.positive_roots.iter().map(|r| {
            (AmbientVector(r.ambient.0.iter().map(|x| -x).collect()), r.class)
        }));
        out
    }

    /// Simple root `alpha_i` (0-based) in fundamental coordinates: column i of the Cartan matrix.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    /// `<beta, lambda> = 2(beta, lambda)/(lambda, lambda)`.
    pub fn pairing(&self, beta: &AmbientVector, lambda: &AmbientVector) -> Result<Rational> {
        self.check_ambient(beta)?;
        self.check_ambient(lambda)?;
        let norm = lambda.dot(lambda);
        if norm.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Rational::from(2) * beta.dot(lambda) / norm)
    }

    fn check_ambient(&self, v: &AmbientVector) -> Result<()> {
        if v.dim() != self.ambient_dim {
            return Err(Error::Shape(format!(
                "ambient vector of length {} in a {}-dimensional realization",
                v.dim(),
                self.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::LengthMismatch {
                weight: w.0.clone(),
                got: w.len(),
                expected: self.rank(),
            });
        }
        Ok(())
    }

    /// Coordinates `<v, alpha_i>`; fails unless every pairing is an integer.
    pub fn to_fundamental(&self, v: &AmbientVector) -> Result<Weight> {
        self.simple_roots
            .iter()
            .enumerate()
            .map(|(i, alpha)| {
                let p = self.pairing(v, alpha)?;
                p.to_i64().ok_or_else(|| Error::NonIntegral { index: i + 1, value: p.to_string() })
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn to_ambient(&self, w: &Weight) -> Result<AmbientVector> {
        self.check_weight(w)?;
        let mut v = AmbientVector::zero(self.ambient_dim);
        for (omega, &c) in self.fundamental_weights.iter().zip(&w.0) {
            v.add_scaled(omega, &Rational::from(c));
        }
        Ok(v)
    }

    /// Simple reflection `s_i` with a 1-based index.
    pub fn reflect(&self, w: &Weight, i: usize) -> Result<Weight> {
        self.check_weight(w)?;
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        let mut out = w.clone();
        self.reflect_in_place(&mut out.0, i - 1);
        Ok(out)
    }

    /// `s_i` with a 0-based index, no checks.
    pub(crate) fn reflect_in_place(&self, w: &mut [i64], i: usize) {
        let k = w[i];
        if k != 0 {
            for (wj, row) in w.iter_mut().zip(&self.cartan) {
                *wj -= k * row[i];
            }
        }
    }

    /// The unique dominant weight in the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut v = w.0.clone();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            self.reflect_in_place(&mut v, i);
        }
        Weight(v)
    }

    /// The Weyl orbit of `w`, in no particular order.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let start = self.dominant_representative(w);
        let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            for i in 0..self.rank() {
                if v.0[i] > 0 {
                    let mut r = v.0.clone();
                    self.reflect_in_place(&mut r, i);
                    let r = Weight(r);
                    if seen.insert(r.clone()) {
                        stack.push(r);
                    }
                }
            }
            out.push(v);
        }
        out
    }

    /// Height of a weight: the sum of its coefficients in the simple-root basis.
    pub fn height(&self, w: &Weight) -> Rational {
        self.height_coeffs.iter().zip(&w.0).map(|(c, &x)| c * &Rational::from(x)).sum()
    }

    /// Coefficients of `w` in the simple-root basis.
    pub fn simple_root_coords(&self, w: &Weight) -> Vec<Rational> {
        let c = RationalMatrix::from_i64_rows(&self.cartan).expect("square");
        let inv = c.inverse().expect("invertible");
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| &inv[(i, j)] * &Rational::from(w.0[j])).sum())
            .collect()
    }

    /// First positive root of the given length class, in stored order.
    pub fn representative_root(&self, class: RootClass) -> Option<&PositiveRoot> {
        self.positive_roots.iter().find(|r| r.class == class)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.length_ratios.iter().all(|&r| r == 1)
    }

    pub fn root_classes(&self) -> Vec<RootClass> {
        if self.is_simply_laced() {
            vec![RootClass::Long]
        } else {
            vec![RootClass::Long, RootClass::Short]
        }
    }

    /// JSON-friendly snapshot of the realization.
    pub fn dump(&self) -> RootSystemDump {
        RootSystemDump {
            family: self.family(),
            rank: self.rank(),
            ambient_dim: self.ambient_dim,
            simple_roots: self.simple_roots.clone(),
            positive_roots: self.positive_roots.clone(),
            cartan_matrix: self.cartan.clone(),
            fundamental_weights: self.fundamental_weights.clone(),
            weyl_vector_rho: self.rho.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSystemDump {
    pub family: Family,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<AmbientVector>,
    pub positive_roots: Vec<PositiveRoot>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub fundamental_weights: Vec<AmbientVector>,
    pub weyl_vector_rho: AmbientVector,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expected_positive_count(tag: TypeTag) -> usize {
        let n = tag.rank;
        match tag.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    #[test]
    fn classical_root_counts() {
        for tag in supported_types(DEFAULT_MAX_CLASSICAL_RANK) {
            let rs = RootSystem::build(tag.family, tag.rank).unwrap();
            assert_eq!(rs.positive_roots().len(), expected_positive_count(tag), "{tag}");
        }
    }

    #[test]
    fn cartan_entries_and_fundamental_duality() {
        for tag in supported_types(DEFAULT_MAX_CLASSICAL_RANK) {
            let rs = RootSystem::build(tag.family, tag.rank).unwrap();
            for (i, row) in rs.cartan_matrix().iter().enumerate() {
                for (j, &a) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(a, 2);
                    } else {
                        assert!((-3..=0).contains(&a), "{tag} entry {a}");
                    }
                }
            }
            for (i, omega) in rs.fundamental_weights().iter().enumerate() {
                for (j, alpha) in rs.simple_roots().iter().enumerate() {
                    let p = rs.pairing(omega, alpha).unwrap();
                    assert_eq!(p, Rational::from(i64::from(i == j)), "{tag}");
                }
            }
        }
    }

    #[test]
    fn rho_is_half_the_positive_root_sum() {
        for tag in supported_types(6) {
            let rs = RootSystem::build(tag.family, tag.rank).unwrap();
            let mut sum = AmbientVector::zero(rs.ambient_dim());
            for r in rs.positive_roots() {
                sum.add_scaled(&r.ambient, &Rational::new(1, 2));
            }
            assert_eq!(&sum, rs.weyl_vector(), "{tag}");
        }
    }

    #[test]
    fn c2_matches_the_standard_realization() {
        let rs = RootSystem::build(Family::C, 2).unwrap();
        let got: HashSet<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.ambient.0.iter().map(|x| x.to_i64().unwrap()).collect())
            .collect();
        let want: HashSet<Vec<i64>> =
            [vec![1, -1], vec![0, 2], vec![1, 1], vec![2, 0]].into_iter().collect();
        assert_eq!(got, want);
        let long: Vec<_> =
            rs.positive_roots().iter().filter(|r| r.class == RootClass::Long).collect();
        assert_eq!(long.len(), 2);
    }

    #[test]
    fn a1_and_g2() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.cartan_matrix(), &[vec![2]]);

        let g2 = RootSystem::build(Family::G, 2).unwrap();
        assert_eq!(g2.positive_roots().len(), 6);
        let sq: Vec<Rational> = g2.positive_roots().iter().map(|r| r.ambient.dot(&r.ambient)).collect();
        let max = sq.iter().max().unwrap();
        let min = sq.iter().min().unwrap();
        assert_eq!(max / min, Rational::from(3));
        assert_eq!(g2.positive_roots().iter().filter(|r| r.class == RootClass::Long).count(), 3);
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(RootSystem::build(Family::D, 2), Err(Error::UnsupportedType { .. })));
        assert!(matches!(RootSystem::build(Family::E, 9), Err(Error::UnsupportedType { .. })));
        assert!(matches!(RootSystem::build(Family::A, 0), Err(Error::UnsupportedType { .. })));
        assert!(RootSystem::build(Family::A, 9).is_err());
        assert!(RootSystem::build_with_rank_cap(Family::A, 9, 9).is_ok());
    }

    #[test]
    fn pairing_examples() {
        let c2 = RootSystem::build(Family::C, 2).unwrap();
        let beta = AmbientVector::from_i64(&[1, 1]);
        let lambda = AmbientVector::from_i64(&[0, 2]);
        assert_eq!(c2.pairing(&beta, &lambda).unwrap(), Rational::one());
        assert_eq!(c2.pairing(&beta, &beta).unwrap(), Rational::from(2));
        assert_eq!(c2.pairing(&beta, &AmbientVector::zero(2)), Err(Error::ZeroVector));

        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let b = AmbientVector::from_i64(&[1, 0, -1]);
        let l = AmbientVector::from_i64(&[1, -1, 0]);
        assert_eq!(a2.pairing(&b, &l).unwrap(), Rational::one());
    }

    #[test]
    fn to_fundamental_examples() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(a1.to_fundamental(&a1.simple_roots()[0]).unwrap(), Weight(vec![2]));
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(a2.to_fundamental(&a2.fundamental_weights()[0]).unwrap(), Weight(vec![1, 0]));
        let c2 = RootSystem::build(Family::C, 2).unwrap();
        assert_eq!(
            c2.to_fundamental(&AmbientVector::from_i64(&[2, 0])).unwrap(),
            Weight(vec![2, 0])
        );
        let half = AmbientVector(vec![Rational::new(1, 2), Rational::zero()]);
        assert!(matches!(c2.to_fundamental(&half), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn reflect_examples() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(a1.reflect(&Weight(vec![3]), 1).unwrap(), Weight(vec![-3]));
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(a2.reflect(&Weight(vec![1, 0]), 1).unwrap(), Weight(vec![-1, 1]));
        assert_eq!(a2.reflect(&Weight::zero(2), 2).unwrap(), Weight::zero(2));
        assert!(matches!(
            a2.reflect(&Weight::zero(2), 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(a2.reflect(&Weight::zero(2), 0).is_err());
    }

    #[test]
    fn root_pairings_are_small_integers() {
        for tag in supported_types(5) {
            let rs = RootSystem::build(tag.family, tag.rank).unwrap();
            let roots = rs.all_roots_ambient();
            for (b, _) in &roots {
                for (a, _) in &roots {
                    let p = rs.pairing(b, a).unwrap().to_i64().unwrap();
                    assert!((-3..=3).contains(&p));
                }
            }
        }
    }

    #[test]
    fn simple_reflections_permute_the_other_positive_roots() {
        for tag in supported_types(5) {
            let rs = RootSystem::build(tag.family, tag.rank).unwrap();
            for i in 0..rs.rank() {
                let alpha = rs.simple_root_weight(i);
                let mut others: Vec<Weight> = rs
                    .positive_roots()
                    .iter()
                    .map(|r| r.weight.clone())
                    .filter(|w| *w != alpha)
                    .collect();
                let mut images: Vec<Weight> =
                    others.iter().map(|w| rs.reflect(w, i + 1).unwrap()).collect();
                others.sort();
                images.sort();
                assert_eq!(others, images, "{tag} s_{}", i + 1);
            }
        }
    }

    #[test]
    fn orbit_sizes() {
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(a2.weyl_orbit(&Weight(vec![1, 1])).len(), 6);
        let e8 = RootSystem::build(Family::E, 8).unwrap();
        let highest = e8.positive_roots().last().unwrap().weight.clone();
        assert_eq!(e8.weyl_orbit(&highest).len(), 240);
    }

    #[test]
    fn heights_of_roots() {
        let f4 = RootSystem::build(Family::F, 4).unwrap();
        for r in f4.positive_roots() {
            assert_eq!(f4.height(&r.weight), Rational::from(r.height));
        }
        assert_eq!(f4.positive_roots().last().unwrap().height, 11);
    }
}
