//! Recovering a decomposition from a weight multiset by repeatedly peeling
//! off the irreducible module headed by a maximal weight.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::rootsys::{RootSystem, Weight};
use crate::weights::{irrep_weights_with_cap, weyl_dim, Decomposition, WeightMultiset};

/// Decomposes `gamma` into irreducibles.
///
/// Among the weights still present, the one of greatest height is taken
/// (ties broken by the lexicographically largest coordinates). It is
/// maximal in the dominance order, so if `gamma` is a character it is
/// dominant and heads a constituent; all copies of that constituent are
/// subtracted at once.
///
/// Inputs that are not the weight system of any representation are
/// rejected with [`Error::NotACharacter`].
pub fn decompose(rs: &RootSystem, gamma: &WeightMultiset) -> Result<Decomposition> {
    decompose_with(rs, gamma, |_| 0)
}

/// [`decompose`] with a caller-chosen tie-break: `pick` receives the
/// maximal-height candidates (sorted lexicographically descending) and
/// returns the index to peel.
pub fn decompose_with(
    rs: &RootSystem,
    gamma: &WeightMultiset,
    mut pick: impl FnMut(&[Weight]) -> usize,
) -> Result<Decomposition> {
    if gamma.tag() != rs.tag() {
        return Err(Error::TagMismatch { left: gamma.tag(), right: rs.tag() });
    }
    if gamma.is_empty() {
        return Err(Error::NotACharacter("empty weight multiset".into()));
    }

    let mut by_height: Vec<(Rational, Weight)> =
        gamma.iter().map(|(w, _)| (rs.height(w), w.clone())).collect();
    by_height.sort_by(|a, b| b.cmp(a));

    let mut rest = gamma.clone();
    let mut out = Decomposition::new(rs.tag());
    let mut cursor = 0;
    while !rest.is_empty() {
        while rest.get(&by_height[cursor].1) == 0 {
            cursor += 1;
        }
        let top = &by_height[cursor].0;
        let candidates: Vec<Weight> = by_height[cursor..]
            .iter()
            .take_while(|(h, _)| h == top)
            .filter(|(_, w)| rest.get(w) > 0)
            .map(|(_, w)| w.clone())
            .collect();
        let chosen = candidates[pick(&candidates).min(candidates.len() - 1)].clone();

        if !chosen.is_dominant() {
            return Err(Error::NotACharacter(format!(
                "maximal weight {chosen} is not dominant"
            )));
        }
        let copies = rest.get(&chosen);
        let remaining = rest.total();
        let dim = weyl_dim(rs, &chosen)?;
        if &dim * BigUint::from(copies) > BigUint::from(remaining) {
            return Err(Error::NotACharacter(format!(
                "{copies} x V({chosen}) needs {copies} x {dim} weights, only {remaining} remain"
            )));
        }
        let irrep = irrep_weights_with_cap(rs, &chosen, u64::MAX)?;
        rest.try_subtract_scaled(&irrep, copies).ok_or_else(|| {
            Error::NotACharacter(format!(
                "removing {copies} copies of V({chosen}) leaves a negative multiplicity"
            ))
        })?;
        out.insert(chosen, copies)?;
    }
    Ok(out)
}
