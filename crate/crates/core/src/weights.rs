//! Weight multisets of finite-dimensional representations.
//!
//! Multiplicities of an irreducible module come from Freudenthal's
//! recursion, run over the dominant weights only and then spread over Weyl
//! orbits. The invariant form is the ambient dot product, rescaled so that
//! the shortest simple root has squared length 1; only ratios enter the
//! recursion, so every quantity stays an integer.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, TypeTag, Weight};

/// Refuse irreducible modules above this dimension unless told otherwise.
pub const DEFAULT_DIM_CAP: u64 = 1_000_000;

#[derive(Serialize, Deserialize)]
struct CoordsEntry {
    coords: Vec<i64>,
    mult: u64,
}

#[derive(Serialize, Deserialize)]
struct HighestEntry {
    highest: Vec<i64>,
    mult: u64,
}

/// A multiset of weights, keyed in lexicographic coordinate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    tag: TypeTag,
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new(tag: TypeTag) -> Self {
        WeightMultiset { tag, entries: BTreeMap::new() }
    }

    /// Collects `(weight, mult)` pairs, merging repeats and dropping zero multiplicities.
    pub fn from_pairs(tag: TypeTag, pairs: impl IntoIterator<Item = (Weight, u64)>) -> Result<Self> {
        let mut ms = WeightMultiset::new(tag);
        for (w, m) in pairs {
            if w.len() != tag.rank {
                return Err(Error::LengthMismatch { got: w.len(), weight: w.0, expected: tag.rank });
            }
            ms.insert(w, m);
        }
        Ok(ms)
    }

    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct weights.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Sum of multiplicities, i.e. the dimension of the representation.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Adds `scale` copies of `other`.
    pub fn add_scaled(&mut self, other: &WeightMultiset, scale: u64) {
        for (w, m) in other.iter() {
            self.insert(w.clone(), m * scale);
        }
    }

    /// Removes `scale` copies of `other`; `None` if some multiplicity would go negative.
    pub(crate) fn try_subtract_scaled(&mut self, other: &WeightMultiset, scale: u64) -> Option<()> {
        for (w, m) in other.iter() {
            if self.get(w) < m * scale {
                return None;
            }
        }
        for (w, m) in other.iter() {
            let slot = self.entries.get_mut(w).expect("checked above");
            *slot -= m * scale;
            if *slot == 0 {
                self.entries.remove(w);
            }
        }
        Some(())
    }

    /// True if every simple reflection maps the multiset onto itself.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        (1..=rs.rank()).all(|i| {
            self.iter().all(|(w, m)| rs.reflect(w, i).map(|r| self.get(&r) == m).unwrap_or(false))
        })
    }

    /// Reads the `[{"coords": [..], "mult": n}, ..]` format.
    pub fn from_json(tag: TypeTag, text: &str) -> Result<Self> {
        let raw: Vec<CoordsEntry> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_pairs(tag, raw.into_iter().map(|e| (Weight(e.coords), e.mult)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

impl Serialize for WeightMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (w, &m) in &self.entries {
            seq.serialize_element(&CoordsEntry { coords: w.0.clone(), mult: m })?;
        }
        seq.end()
    }
}

/// A multiset of dominant highest weights: a representation up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    tag: TypeTag,
    entries: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn new(tag: TypeTag) -> Self {
        Decomposition { tag, entries: BTreeMap::new() }
    }

    pub fn from_pairs(tag: TypeTag, pairs: impl IntoIterator<Item = (Weight, u64)>) -> Result<Self> {
        let mut d = Decomposition::new(tag);
        for (w, m) in pairs {
            d.insert(w, m)?;
        }
        Ok(d)
    }

    /// A single irreducible constituent.
    pub fn irreducible(tag: TypeTag, highest: Weight) -> Result<Self> {
        Self::from_pairs(tag, [(highest, 1)])
    }

    pub fn trivial(tag: TypeTag) -> Self {
        Self::irreducible(tag, Weight::zero(tag.rank)).expect("zero weight is dominant")
    }

    pub fn insert(&mut self, highest: Weight, mult: u64) -> Result<()> {
        if highest.len() != self.tag.rank {
            return Err(Error::LengthMismatch {
                got: highest.len(),
                weight: highest.0,
                expected: self.tag.rank,
            });
        }
        if !highest.is_dominant() {
            return Err(Error::NotDominant(highest.0));
        }
        if mult > 0 {
            *self.entries.entry(highest).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn tag(&self) -> TypeTag {
        self.tag
    }

    pub fn entries(&self) -> &BTreeMap<Weight, u64> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum mult * dim V(highest)`.
    pub fn dimension(&self, rs: &RootSystem) -> Result<BigUint> {
        let mut total = BigUint::default();
        for (w, m) in self.iter() {
            total += weyl_dim(rs, w)? * BigUint::from(m);
        }
        Ok(total)
    }

    /// Reads the `[{"highest": [..], "mult": n}, ..]` format.
    pub fn from_json(tag: TypeTag, text: &str) -> Result<Self> {
        let raw: Vec<HighestEntry> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_pairs(tag, raw.into_iter().map(|e| (Weight(e.highest), e.mult)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (w, &m) in &self.entries {
            seq.serialize_element(&HighestEntry { highest: w.0.clone(), mult: m })?;
        }
        seq.end()
    }
}

fn check_highest(rs: &RootSystem, highest: &Weight) -> Result<()> {
    rs.check_weight(highest)?;
    if !highest.is_dominant() {
        return Err(Error::NotDominant(highest.0.clone()));
    }
    Ok(())
}

/// `(mu, beta)` for `beta` given by simple-root coordinates, in the rescaled form.
fn form_with_root(ratios: &[i64], beta_coords: &[i64], mu: &[i64]) -> i64 {
    beta_coords.iter().zip(ratios).zip(mu).map(|((c, d), m)| c * d * m).sum()
}

/// Weyl's dimension formula: `prod_{beta > 0} (lambda + rho, beta) / (rho, beta)`.
pub fn weyl_dim(rs: &RootSystem, highest: &Weight) -> Result<BigUint> {
    check_highest(rs, highest)?;
    let shifted: Vec<i64> = highest.0.iter().map(|x| x + 1).collect();
    let ones = vec![1; rs.rank()];
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for beta in rs.positive_roots() {
        let a = form_with_root(rs.length_ratios(), &beta.simple_coords, &shifted);
        let b = form_with_root(rs.length_ratios(), &beta.simple_coords, &ones);
        num *= BigUint::from(a as u64);
        den *= BigUint::from(b as u64);
    }
    debug_assert!((&num % &den) == BigUint::default());
    Ok(num / den)
}

/// Multiplicities of the dominant weights of `V(highest)`.
pub fn dominant_multiplicities(rs: &RootSystem, highest: &Weight) -> Result<BTreeMap<Weight, u64>> {
    check_highest(rs, highest)?;
    let n = rs.rank();
    let ratios = rs.length_ratios();
    let roots: Vec<(&Weight, &[i64])> = rs
        .positive_roots()
        .iter()
        .map(|r| (&r.weight, r.simple_coords.as_slice()))
        .collect();

    // Dominant weights below `highest`, each with the simple-root coordinates
    // of `highest - mu`. Subtracting positive roots while staying dominant
    // reaches all of them.
    let mut depth: HashMap<Weight, Vec<i64>> = HashMap::from([(highest.clone(), vec![0; n])]);
    let mut queue = VecDeque::from([highest.clone()]);
    while let Some(mu) = queue.pop_front() {
        let base = depth[&mu].clone();
        for (alpha, coords) in &roots {
            let next = mu.sub(alpha);
            if next.is_dominant() && !depth.contains_key(&next) {
                let c = base.iter().zip(coords.iter()).map(|(a, b)| a + b).collect();
                depth.insert(next.clone(), c);
                queue.push_back(next);
            }
        }
    }

    let mut order: Vec<(Weight, Vec<i64>)> = depth.into_iter().collect();
    order.sort_by(|(wa, ca), (wb, cb)| {
        ca.iter().sum::<i64>().cmp(&cb.iter().sum::<i64>()).then_with(|| wb.cmp(wa))
    });

    let mut mult: HashMap<Weight, u64> = HashMap::with_capacity(order.len());
    mult.insert(highest.clone(), 1);
    for (mu, c) in order.iter().skip(1) {
        // (lambda + rho)^2 - (mu + rho)^2 = (lambda - mu, lambda + mu + 2 rho)
        let denom: i128 = (0..n)
            .map(|j| i128::from(c[j] * ratios[j] * (highest.0[j] + mu.0[j] + 2)))
            .sum();
        let mut sum: i128 = 0;
        for (alpha, coords) in &roots {
            for k in 1.. {
                let w = mu.add_multiple(alpha, k);
                let dom = rs.dominant_representative(&w);
                let Some(&m) = mult.get(&dom) else { break };
                let term = i128::from(m)
                    .checked_mul(i128::from(form_with_root(ratios, coords, &w.0)))
                    .expect("multiplicity overflow");
                sum = sum.checked_add(term).expect("multiplicity overflow");
            }
        }
        let twice = 2 * sum;
        assert!(denom > 0 && twice % denom == 0, "Freudenthal recursion is not integral");
        let m = u64::try_from(twice / denom).expect("nonnegative multiplicity");
        mult.insert(mu.clone(), m);
    }
    Ok(mult.into_iter().collect())
}

/// All weights of the irreducible module `V(highest)` with multiplicities.
pub fn irrep_weights(rs: &RootSystem, highest: &Weight) -> Result<WeightMultiset> {
    irrep_weights_with_cap(rs, highest, DEFAULT_DIM_CAP)
}

pub fn irrep_weights_with_cap(rs: &RootSystem, highest: &Weight, cap: u64) -> Result<WeightMultiset> {
    let dim = weyl_dim(rs, highest)?;
    if dim > BigUint::from(cap) {
        return Err(Error::DimensionCapExceeded {
            highest: highest.0.clone(),
            dim: dim.to_string(),
            cap,
        });
    }
    let mut out = WeightMultiset::new(rs.tag());
    for (mu, m) in dominant_multiplicities(rs, highest)? {
        for w in rs.weyl_orbit(&mu) {
            out.insert(w, m);
        }
    }
    debug_assert_eq!(Some(out.total()), dim.to_u64());
    Ok(out)
}

/// Weights of a direct sum: the union of the constituents' weight multisets.
pub fn rep_weights(rs: &RootSystem, d: &Decomposition) -> Result<WeightMultiset> {
    rep_weights_with_cap(rs, d, DEFAULT_DIM_CAP)
}

pub fn rep_weights_with_cap(rs: &RootSystem, d: &Decomposition, cap: u64) -> Result<WeightMultiset> {
    if d.tag() != rs.tag() {
        return Err(Error::TagMismatch { left: d.tag(), right: rs.tag() });
    }
    let mut out = WeightMultiset::new(rs.tag());
    for (w, m) in d.iter() {
        out.add_scaled(&irrep_weights_with_cap(rs, w, cap)?, m);
    }
    Ok(out)
}

/// True if `mu <= lambda` in the dominance order.
pub fn dominated_by(rs: &RootSystem, mu: &Weight, lambda: &Weight) -> bool {
    rs.simple_root_coords(&lambda.sub(mu))
        .iter()
        .all(|c| c.is_integer() && !c.is_negative())
}

/// Distinct dominant weights in a multiset.
pub fn dominant_part(ms: &WeightMultiset) -> HashSet<Weight> {
    ms.iter().filter(|(w, _)| w.is_dominant()).map(|(w, _)| w.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn ms(tag: TypeTag, pairs: &[(&[i64], u64)]) -> WeightMultiset {
        WeightMultiset::from_pairs(tag, pairs.iter().map(|(w, m)| (Weight(w.to_vec()), *m))).unwrap()
    }

    #[test]
    fn sl2_irreps() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let got = irrep_weights(&a1, &Weight(vec![2])).unwrap();
        assert_eq!(got, ms(a1.tag(), &[(&[2], 1), (&[0], 1), (&[-2], 1)]));
        for m in 0..12 {
            assert_eq!(weyl_dim(&a1, &Weight(vec![m])).unwrap(), BigUint::from(m as u64 + 1));
        }
    }

    #[test]
    fn trivial_rep_everywhere() {
        for family in [Family::A, Family::B, Family::E, Family::G] {
            let rank = family.ranks(8)[0];
            let rs = RootSystem::build(family, rank).unwrap();
            let zero = Weight::zero(rank);
            assert_eq!(irrep_weights(&rs, &zero).unwrap(), ms(rs.tag(), &[(&zero.0, 1)]));
            assert_eq!(weyl_dim(&rs, &zero).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn a2_adjoint_matches_the_roots() {
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let got = irrep_weights(&a2, &Weight(vec![1, 1])).unwrap();
        let mut want = WeightMultiset::new(a2.tag());
        for r in a2.all_root_weights() {
            want.insert(r, 1);
        }
        want.insert(Weight::zero(2), 2);
        assert_eq!(got, want);
        assert_eq!(weyl_dim(&a2, &Weight(vec![1, 1])).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn adjoint_of_every_type() {
        // The highest root heads the adjoint module: roots once each, zero rank times.
        for tag in crate::rootsys::supported_types(5) {
            let rs = RootSystem::build(tag.family, tag.rank).unwrap();
            let theta = rs.positive_roots().last().unwrap().weight.clone();
            let got = irrep_weights(&rs, &theta).unwrap();
            let mut want = WeightMultiset::new(tag);
            for r in rs.all_root_weights() {
                want.insert(r, 1);
            }
            want.insert(Weight::zero(tag.rank), tag.rank as u64);
            assert_eq!(got, want, "{tag}");
        }
    }

    #[test]
    fn rep_weights_examples() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let d = Decomposition::from_pairs(a1.tag(), [(Weight(vec![1]), 2)]).unwrap();
        assert_eq!(rep_weights(&a1, &d).unwrap(), ms(a1.tag(), &[(&[1], 2), (&[-1], 2)]));
        let d = Decomposition::from_pairs(a1.tag(), [(Weight(vec![2]), 1), (Weight(vec![0]), 1)])
            .unwrap();
        assert_eq!(
            rep_weights(&a1, &d).unwrap(),
            ms(a1.tag(), &[(&[2], 1), (&[0], 2), (&[-2], 1)])
        );
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        let d = Decomposition::irreducible(a2.tag(), Weight(vec![1, 0])).unwrap();
        assert_eq!(
            rep_weights(&a2, &d).unwrap(),
            ms(a2.tag(), &[(&[1, 0], 1), (&[-1, 1], 1), (&[0, -1], 1)])
        );
    }

    #[test]
    fn not_dominant_is_rejected() {
        let a2 = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(
            irrep_weights(&a2, &Weight(vec![1, -1])),
            Err(Error::NotDominant(vec![1, -1]))
        );
        assert!(weyl_dim(&a2, &Weight(vec![-1, 0])).is_err());
        assert!(Decomposition::irreducible(a2.tag(), Weight(vec![0, -2])).is_err());
    }

    #[test]
    fn dimension_cap() {
        let e8 = RootSystem::build(Family::E, 8).unwrap();
        let big = Weight(vec![1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(matches!(irrep_weights(&e8, &big), Err(Error::DimensionCapExceeded { .. })));
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        assert!(irrep_weights_with_cap(&a1, &Weight(vec![10]), 10).is_err());
        assert!(irrep_weights_with_cap(&a1, &Weight(vec![10]), 11).is_ok());
    }

    #[test]
    fn known_multiplicities() {
        // B2 = so(5): vector, spin and adjoint.
        let b2 = RootSystem::build(Family::B, 2).unwrap();
        assert_eq!(weyl_dim(&b2, &Weight(vec![1, 0])).unwrap(), BigUint::from(5u32));
        assert_eq!(weyl_dim(&b2, &Weight(vec![0, 1])).unwrap(), BigUint::from(4u32));
        assert_eq!(weyl_dim(&b2, &Weight(vec![0, 2])).unwrap(), BigUint::from(10u32));
        // G2: the 7-dim rep has weight zero once; the 27-dim V(2,0) (short
        // fundamental twice) has zero weight with multiplicity 3.
        let g2 = RootSystem::build(Family::G, 2).unwrap();
        let seven = irrep_weights(&g2, &Weight(vec![1, 0])).unwrap();
        assert_eq!(seven.total(), 7);
        assert_eq!(seven.get(&Weight(vec![0, 0])), 1);
        let big = irrep_weights(&g2, &Weight(vec![2, 0])).unwrap();
        assert_eq!(big.total(), 27);
        assert_eq!(big.get(&Weight(vec![0, 0])), 3);
        // E8 adjoint and the 3875.
        let e8 = RootSystem::build(Family::E, 8).unwrap();
        let mut w = vec![0; 8];
        w[0] = 1;
        assert_eq!(weyl_dim(&e8, &Weight(w.clone())).unwrap(), BigUint::from(3875u32));
        let m = irrep_weights(&e8, &Weight(w)).unwrap();
        assert_eq!(m.total(), 3875);
        assert_eq!(m.get(&Weight::zero(8)), 35);
    }

    #[test]
    fn json_format() {
        let a1 = RootSystem::build(Family::A, 1).unwrap();
        let w = irrep_weights(&a1, &Weight(vec![1])).unwrap();
        assert_eq!(w.to_json(), r#"[{"coords":[-1],"mult":1},{"coords":[1],"mult":1}]"#);
        assert_eq!(WeightMultiset::from_json(a1.tag(), &w.to_json()).unwrap(), w);
        let d = Decomposition::from_pairs(a1.tag(), [(Weight(vec![2]), 1), (Weight(vec![0]), 1)])
            .unwrap();
        assert_eq!(d.to_json(), r#"[{"highest":[0],"mult":1},{"highest":[2],"mult":1}]"#);
        assert!(WeightMultiset::from_json(a1.tag(), r#"[{"coords":[1,2],"mult":1}]"#).is_err());
    }
}
