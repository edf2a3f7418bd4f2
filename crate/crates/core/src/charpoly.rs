//! Characteristic polynomials in canonical form.
//!
//! A full characteristic polynomial is stored as the decomposition it
//! determines. Its linearization (the restriction to the Cartan variables)
//! is a product of linear forms `z0 + c1*z1 + ... + cn*zn`, stored as the
//! multiset of coefficient vectors, which are exactly the weights.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::poly::SparsePoly;
use crate::reconstruct::decompose;
use crate::rootsys::{RootSystem, TypeTag, Weight};
use crate::weights::{rep_weights_with_cap, Decomposition, WeightMultiset, DEFAULT_DIM_CAP};

/// Largest degree [`expand_small`] will expand by default.
pub const DEFAULT_DEGREE_CAP: u64 = 64;

/// `prod (z0 + sum_i c_i z_i)^mult`, keyed by the coefficient vectors `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactors(WeightMultiset);

impl LinearFactors {
    pub fn new(tag: TypeTag) -> Self {
        LinearFactors(WeightMultiset::new(tag))
    }

    /// The unit of the resolution product: the single factor `z0`.
    pub fn unit(tag: TypeTag) -> Self {
        let mut ms = WeightMultiset::new(tag);
        ms.insert(Weight::zero(tag.rank), 1);
        LinearFactors(ms)
    }

    pub fn tag(&self) -> TypeTag {
        self.0.tag()
    }

    pub fn as_multiset(&self) -> &WeightMultiset {
        &self.0
    }

    pub fn into_multiset(self) -> WeightMultiset {
        self.0
    }

    /// Degree of the polynomial.
    pub fn degree(&self) -> u64 {
        self.0.total()
    }

    pub fn from_json(tag: TypeTag, text: &str) -> Result<Self> {
        WeightMultiset::from_json(tag, text).map(LinearFactors)
    }

    pub fn to_json(&self) -> String {
        self.0.to_json()
    }
}

impl From<WeightMultiset> for LinearFactors {
    fn from(ms: WeightMultiset) -> Self {
        LinearFactors(ms)
    }
}

impl Serialize for LinearFactors {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// A characteristic polynomial, represented by its irreducible decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub decomposition: Decomposition,
}

impl CharPoly {
    pub fn new(decomposition: Decomposition) -> Self {
        CharPoly { decomposition }
    }

    pub fn irreducible(tag: TypeTag, highest: Weight) -> Result<Self> {
        Decomposition::irreducible(tag, highest).map(CharPoly::new)
    }

    /// The characteristic polynomial `z0` of the trivial representation.
    pub fn trivial(tag: TypeTag) -> Self {
        CharPoly::new(Decomposition::trivial(tag))
    }

    pub fn tag(&self) -> TypeTag {
        self.decomposition.tag()
    }

    pub fn from_json(tag: TypeTag, text: &str) -> Result<Self> {
        Decomposition::from_json(tag, text).map(CharPoly::new)
    }

    pub fn to_json(&self) -> String {
        self.decomposition.to_json()
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.decomposition.serialize(serializer)
    }
}

/// The linearization map: weights of the representation read as linear factors.
pub fn linearize(rs: &RootSystem, f: &CharPoly) -> Result<LinearFactors> {
    linearize_with_cap(rs, f, DEFAULT_DIM_CAP)
}

pub fn linearize_with_cap(rs: &RootSystem, f: &CharPoly, cap: u64) -> Result<LinearFactors> {
    rep_weights_with_cap(rs, &f.decomposition, cap).map(LinearFactors)
}

/// Pairwise sums of coefficient vectors with multiplied multiplicities.
pub fn resolution_product(a: &LinearFactors, b: &LinearFactors) -> Result<LinearFactors> {
    if a.tag() != b.tag() {
        return Err(Error::TagMismatch { left: a.tag(), right: b.tag() });
    }
    let mut out = WeightMultiset::new(a.tag());
    for (x, mx) in a.0.iter() {
        for (y, my) in b.0.iter() {
            out.insert(x.add(y), mx * my);
        }
    }
    Ok(LinearFactors(out))
}

/// `f * g`: linearize both, multiply, and peel the result back into a decomposition.
pub fn product_on_charpoly(rs: &RootSystem, f: &CharPoly, g: &CharPoly) -> Result<CharPoly> {
    product_on_charpoly_with_cap(rs, f, g, DEFAULT_DIM_CAP)
}

pub fn product_on_charpoly_with_cap(
    rs: &RootSystem,
    f: &CharPoly,
    g: &CharPoly,
    cap: u64,
) -> Result<CharPoly> {
    if f.tag() != g.tag() {
        return Err(Error::TagMismatch { left: f.tag(), right: g.tag() });
    }
    let lf = linearize_with_cap(rs, f, cap)?;
    let lg = linearize_with_cap(rs, g, cap)?;
    let prod = resolution_product(&lf, &lg)?;
    decompose(rs, prod.as_multiset()).map(CharPoly::new)
}

/// Expands the product of linear factors in `z0..zn`.
pub fn expand_small(a: &LinearFactors, degree_cap: u64) -> Result<SparsePoly> {
    let degree = a.degree();
    if degree > degree_cap {
        return Err(Error::CapExceeded { degree, cap: degree_cap });
    }
    let nvars = a.tag().rank + 1;
    let mut out = SparsePoly::one(nvars);
    for (w, m) in a.0.iter() {
        let mut coeffs = vec![Rational::one()];
        coeffs.extend(w.coords().iter().map(|&c| Rational::from(c)));
        let factor = SparsePoly::linear(&coeffs);
        out = &out * &factor.pow(m as u32);
    }
    Ok(out)
}
