//! The acceptance suite, runnable from tests and from the command line.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::borel::borel_report;
use crate::charpoly::{product_on_charpoly, resolution_product, CharPoly, LinearFactors};
use crate::error::Result;
use crate::exactnum::{rank_over_rationals, RationalMatrix};
use crate::oracle::{
    block_base_change, det_pencil, random_unimodular, sl2_matrices, substitute_base_change, tau_automorphism,
    verify_base_change,
};
use crate::reconstruct::decompose;
use crate::rootsys::{supported_types, Family, RootClass, RootSystem, Weight, DEFAULT_MAX_CLASSICAL_RANK};
use crate::sl2embed::{embed_report, irrep_closed_form, render_markdown, published_audit, K0Reading, RankReading};
use crate::weights::{irrep_weights, rep_weights, weyl_dim, Decomposition, WeightMultiset};

/// Checked-in rendering of the published-table audit.
pub const AUDIT_GOLDEN: &str = include_str!("../tests/golden/eigenvalue_audit.md");

pub const DEFAULT_SEED: u64 = 0x5eed_1ea5;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    /// Wall-clock budget, if the criterion has one.
    pub budget_ms: Option<u128>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {}: {} ({} ms) {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.detail
        )
    }
}

/// Outcome of a check body: pass flag and a human-readable detail.
type Outcome = Result<(bool, String)>;

fn timed(id: u8, name: &'static str, budget: Option<Duration>, body: impl FnOnce() -> Outcome) -> CriterionResult {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (mut pass, mut detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    if let Some(b) = budget {
        if elapsed > b {
            pass = false;
            detail = format!("{detail}; over budget of {} ms", b.as_millis());
        }
    }
    CriterionResult {
        id,
        name,
        pass,
        detail,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: budget.map(|b| b.as_millis()),
    }
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    vec![
        determinant_closed_form(),
        round_trip(seed),
        clebsch_gordan(),
        monoid_laws(seed),
        dimension_identity(),
        published_table(AUDIT_GOLDEN),
        borel_rank(),
        base_change(seed),
        weyl_invariance(seed),
    ]
}

/// `det` of the `V(m)` pencil equals the closed form, `m = 0..8`.
pub fn determinant_closed_form() -> CriterionResult {
    timed(1, "sl(2) determinants match the closed form", Some(Duration::from_secs(10)), || {
        let bad: Vec<usize> = (0..=8)
            .map(|m| Ok((m, det_pencil(&sl2_matrices(m))? == irrep_closed_form(m as u64))))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter_map(|(m, ok)| (!ok).then_some(m))
            .collect();
        Ok((bad.is_empty(), format!("m = 0..8, mismatches at {bad:?}")))
    })
}

const ROUND_TRIP_TYPES: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::B, 2),
    (Family::C, 3),
    (Family::D, 4),
    (Family::G, 2),
];

const ROUND_TRIP_CASES: usize = 200;
const ROUND_TRIP_MAX_DIM: u64 = 200;

/// Random decompositions with total dimension at most `ROUND_TRIP_MAX_DIM`.
pub fn random_decompositions(seed: u64, count: usize) -> Result<Vec<(RootSystem, Decomposition)>> {
    let systems: Vec<RootSystem> = ROUND_TRIP_TYPES
        .iter()
        .map(|&(f, r)| RootSystem::build(f, r))
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let rs = systems.choose(&mut rng).expect("nonempty").clone();
        let mut d = Decomposition::new(rs.tag());
        let mut budget = ROUND_TRIP_MAX_DIM;
        for _ in 0..rng.gen_range(1..=4) {
            let w = Weight((0..rs.rank()).map(|_| rng.gen_range(0..=3)).collect());
            let dim = weyl_dim(&rs, &w)?;
            let Some(dim) = u64::try_from(dim).ok().filter(|&d| d <= budget) else { continue };
            let copies = rng.gen_range(1..=(budget / dim).min(3));
            d.insert(w, copies)?;
            budget -= dim * copies;
        }
        if !d.is_empty() {
            out.push((rs, d));
        }
    }
    Ok(out)
}

/// `decompose(rep_weights(D)) = D` on random decompositions.
pub fn round_trip(seed: u64) -> CriterionResult {
    timed(2, "decompose inverts rep_weights", Some(Duration::from_secs(60)), || {
        let cases = random_decompositions(seed, ROUND_TRIP_CASES)?;
        let mut failures = Vec::new();
        for (rs, d) in &cases {
            if &decompose(rs, &rep_weights(rs, d)?)? != d {
                failures.push(format!("{}: {}", rs.tag(), d.to_json()));
            }
        }
        Ok((failures.is_empty(), format!("{} cases, failures: {failures:?}", cases.len())))
    })
}

fn a1_product(rs: &RootSystem, a: i64, b: i64) -> Result<Decomposition> {
    let f = CharPoly::irreducible(rs.tag(), Weight(vec![a]))?;
    let g = CharPoly::irreducible(rs.tag(), Weight(vec![b]))?;
    Ok(product_on_charpoly(rs, &f, &g)?.decomposition)
}

/// Tensor products of `sl(2)` and small `sl(3)` irreducibles.
pub fn clebsch_gordan() -> CriterionResult {
    timed(3, "resolution product reproduces tensor products", None, || {
        let a1 = RootSystem::build(Family::A, 1)?;
        let mut failures = Vec::new();
        for a in 0..=10i64 {
            for b in 0..=10i64 {
                let expect =
                    Decomposition::from_pairs(a1.tag(), (0..=a.min(b)).map(|i| (Weight(vec![a + b - 2 * i]), 1)))?;
                if a1_product(&a1, a, b)? != expect {
                    failures.push(format!("A1 {a}x{b}"));
                }
            }
        }
        let a2 = RootSystem::build(Family::A, 2)?;
        let irr = |w: [i64; 2]| CharPoly::irreducible(a2.tag(), Weight(w.to_vec()));
        let got = product_on_charpoly(&a2, &irr([1, 0])?, &irr([0, 1])?)?.decomposition;
        let expect = Decomposition::from_pairs(a2.tag(), [(Weight(vec![1, 1]), 1), (Weight(vec![0, 0]), 1)])?;
        if got != expect {
            failures.push(format!("A2 [1,0]x[0,1] gave {}", got.to_json()));
        }
        let adj = product_on_charpoly(&a2, &irr([1, 1])?, &irr([1, 1])?)?.decomposition;
        let total = adj.dimension(&a2)?;
        let summed: BigUint = adj
            .iter()
            .map(|(w, m)| weyl_dim(&a2, w).map(|d| d * m))
            .sum::<Result<BigUint>>()?;
        if total != BigUint::from(64u32) || summed != total {
            failures.push(format!("A2 [1,1]x[1,1] has dimension {total}, constituents sum to {summed}"));
        }
        Ok((failures.is_empty(), format!("121 A1 products and 2 A2 products, failures: {failures:?}")))
    })
}

fn random_factors(rng: &mut ChaCha8Rng, rs: &RootSystem) -> LinearFactors {
    let mut ms = WeightMultiset::new(rs.tag());
    for _ in 0..rng.gen_range(0..=4) {
        let w = Weight((0..rs.rank()).map(|_| rng.gen_range(-3..=3)).collect());
        ms.insert(w, rng.gen_range(1..=3));
    }
    ms.into()
}

/// Associativity, commutativity and unit of the resolution product.
pub fn monoid_laws(seed: u64) -> CriterionResult {
    timed(4, "resolution product is a commutative monoid", None, || {
        let systems = [RootSystem::build(Family::A, 2)?, RootSystem::build(Family::G, 2)?, RootSystem::build(Family::B, 3)?];
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 4);
        let mut failures = 0;
        for _ in 0..100 {
            let rs = systems.choose(&mut rng).expect("nonempty");
            let [a, b, c] = [(); 3].map(|_| random_factors(&mut rng, rs));
            let unit = LinearFactors::unit(rs.tag());
            let left = resolution_product(&resolution_product(&a, &b)?, &c)?;
            let right = resolution_product(&a, &resolution_product(&b, &c)?)?;
            let ok = left == right
                && resolution_product(&a, &b)? == resolution_product(&b, &a)?
                && resolution_product(&a, &unit)? == a
                && resolution_product(&unit, &a)? == a;
            if !ok {
                failures += 1;
            }
        }
        Ok((failures == 0, format!("100 random triples, {failures} failures")))
    })
}

/// `dim L = k0_total + 2 (k1 + k2 + k3)` for every type, rank and root class.
pub fn dimension_identity() -> CriterionResult {
    timed(5, "root sl(2) eigenvalue counts add up to dim L", Some(Duration::from_secs(5)), || {
        let mut checked = 0;
        let mut failures = Vec::new();
        for tag in supported_types(DEFAULT_MAX_CLASSICAL_RANK) {
            let rs = RootSystem::build(tag.family, tag.rank)?;
            for class in rs.root_classes() {
                checked += 1;
                if !embed_report(&rs, class)?.dim_identity_holds {
                    failures.push(format!("{tag} {class}"));
                }
            }
        }
        Ok((failures.is_empty(), format!("{checked} (type, class) pairs, failures: {failures:?}")))
    })
}

/// Audit of the published eigenvalue table against computed values.
///
/// Expected agreement: G2 and F4 rows entirely, C_n short rows, D_n rows with
/// the Cartan subalgebra counted in `k0`, A_n rows with `n` read as the matrix
/// size, and the `k0` column of the E rows. Expected disagreement: `k1` of the
/// C_n long rows, both B_n rows, and the `k1`/`k2` split of the E rows.
pub fn published_table(golden: &str) -> CriterionResult {
    timed(6, "published eigenvalue table audit", None, || {
        let reports = published_audit()?;
        let mut problems = Vec::new();
        for r in &reports {
            let t = r.published.as_ref().expect("audit rows carry a comparison");
            let what = format!("{} at {}{} ({:?} n = {})", t.row, r.family, r.rank, t.reading, t.n);
            if !r.dim_identity_holds {
                problems.push(format!("{what}: dimension identity fails"));
            }
            let expect_match = match (r.family, r.root_class) {
                (Family::G | Family::F, _) => Some(t.all_match()),
                (Family::C, RootClass::Short) => Some(t.all_match()),
                (Family::D, _) => Some(t.all_match() && t.k0_reading == K0Reading::CartanInclusive),
                (Family::A, _) if t.reading == RankReading::SlN => Some(t.all_match()),
                (Family::E, _) => Some(t.matches[0] && t.matches[3] && t.k1_plus_k2_matches),
                _ => None,
            };
            if expect_match == Some(false) {
                problems.push(format!(
                    "{what}: computed k = {:?} (k0 with Cartan {}) vs published {:?}",
                    ks(r),
                    r.k0_total,
                    t.claimed
                ));
            }
            let expect_flag = match (r.family, r.root_class) {
                (Family::C, RootClass::Long) => Some(!t.matches[1]),
                (Family::B, _) => Some(!t.all_match()),
                (Family::E, _) => Some(!t.matches[1] && !t.matches[2]),
                _ => None,
            };
            if expect_flag == Some(false) {
                problems.push(format!("{what}: expected a flagged mismatch"));
            }
        }
        let rendered = render_markdown(&reports);
        if rendered != golden {
            problems.push("rendered audit differs from the golden file".into());
        }
        Ok((problems.is_empty(), format!("{} audit rows, problems: {problems:?}", reports.len())))
    })
}

fn ks(r: &crate::sl2embed::EmbeddingReport) -> [u64; 4] {
    [r.k(0), r.k(1), r.k(2), r.k(3)]
}

/// The Borel spectral matrix has rank `dim h` everywhere.
pub fn borel_rank() -> CriterionResult {
    timed(7, "Borel spectral rank equals dim h", Some(Duration::from_secs(5)), || {
        let mut failures = Vec::new();
        let types = supported_types(DEFAULT_MAX_CLASSICAL_RANK);
        for tag in &types {
            let report = borel_report(&RootSystem::build(tag.family, tag.rank)?);
            if !report.pass {
                failures.push(format!("{tag}: {}", report.summary()));
            }
        }
        Ok((failures.is_empty(), format!("{} types, failures: {failures:?}", types.len())))
    })
}

fn random_invertible(rng: &mut ChaCha8Rng) -> RationalMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let b = RationalMatrix::from_i64_rows(&rows).expect("rectangular");
        if rank_over_rationals(&b) == 3 {
            return b;
        }
    }
}

/// Base-change covariance of the determinant and invariance under `(-h, f, e)`.
pub fn base_change(seed: u64) -> CriterionResult {
    timed(8, "determinant transforms under base change", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 8);
        let mut failures = Vec::new();
        for i in 0..50 {
            let m = i % 4;
            let b = if i % 2 == 0 { random_unimodular(3, &mut rng) } else { random_invertible(&mut rng) };
            if !verify_base_change(&sl2_matrices(m), &b)? {
                failures.push(format!("m = {m}, B = {:?}", b.row_vecs()));
            }
        }
        let tau = tau_automorphism();
        let d = block_base_change(&tau);
        for m in 1..=4 {
            let f = det_pencil(&sl2_matrices(m))?;
            if substitute_base_change(&f, &d)? != f || !verify_base_change(&sl2_matrices(m), &tau)? {
                failures.push(format!("tau changes the m = {m} determinant"));
            }
        }
        Ok((failures.is_empty(), format!("50 random base changes, tau on m = 1..4, failures: {failures:?}")))
    })
}

/// Every irreducible weight multiset used by the round-trip and tensor checks
/// is invariant under the simple reflections.
pub fn weyl_invariance(seed: u64) -> CriterionResult {
    timed(9, "irreducible weight multisets are Weyl invariant", None, || {
        let mut checked = 0;
        let mut failures = Vec::new();
        let mut check = |rs: &RootSystem, w: &Weight| -> Result<()> {
            checked += 1;
            if !irrep_weights(rs, w)?.is_weyl_invariant(rs) {
                failures.push(format!("{} {w}", rs.tag()));
            }
            Ok(())
        };
        for (rs, d) in random_decompositions(seed, ROUND_TRIP_CASES)? {
            for (w, _) in d.iter() {
                check(&rs, w)?;
            }
        }
        let a1 = RootSystem::build(Family::A, 1)?;
        for a in 0..=20 {
            check(&a1, &Weight(vec![a]))?;
        }
        let a2 = RootSystem::build(Family::A, 2)?;
        for w in [[1, 0], [0, 1], [1, 1], [2, 2], [3, 0], [0, 3], [0, 0]] {
            check(&a2, &Weight(w.to_vec()))?;
        }
        Ok((failures.is_empty(), format!("{checked} multisets, failures: {failures:?}")))
    })
}
