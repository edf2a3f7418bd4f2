//! Root `sl(2)` subalgebras acting on a simple Lie algebra.
//!
//! For a root `lambda`, the triple `(H_lambda, E_lambda, E_-lambda)` spans a
//! copy of `sl(2)`; `ad H_lambda` acts on `E_beta` by `<beta, lambda>` and on
//! the Cartan subalgebra by zero. Counting the roots by pairing value gives
//! the eigenvalue multiplicities, hence the characteristic polynomial of the
//! adjoint action. The published table of these counts is kept as data and
//! compared against the enumeration.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::poly::SparsePoly;
use crate::rootsys::{
    supported_types, AmbientVector, Family, RootClass, RootSystem, Weight,
    DEFAULT_MAX_CLASSICAL_RANK,
};
use crate::weights::WeightMultiset;

/// `z0^{d0} * prod_{n>=1} (z0^2 - n^2 (z1^2 + z2 z3))^{d_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Sl2CharPoly {
    /// Exponents `d_n`; only nonzero entries are stored.
    pub d: BTreeMap<u64, u64>,
}

impl Sl2CharPoly {
    pub fn from_exponents(pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut d = BTreeMap::new();
        for (n, k) in pairs {
            if k > 0 {
                *d.entry(n).or_insert(0) += k;
            }
        }
        Sl2CharPoly { d }
    }

    pub fn exponent(&self, n: u64) -> u64 {
        self.d.get(&n).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.d.iter().map(|(&n, &k)| if n == 0 { k } else { 2 * k }).sum()
    }

    /// Factored text form, e.g. `z0^4 * (z0^2 - 1*(z1^2+z2*z3))^4`.
    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        if let Some(&k) = self.d.get(&0) {
            parts.push(format!("z0^{k}"));
        }
        for (&n, &k) in self.d.range(1..) {
            parts.push(format!("(z0^2 - {}*(z1^2+z2*z3))^{k}", n * n));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" * ")
        }
    }

    /// The expanded polynomial in `z0, z1, z2, z3`.
    pub fn expand(&self) -> SparsePoly {
        let mut out = SparsePoly::one(4);
        for (&n, &k) in &self.d {
            let factor = if n == 0 { SparsePoly::var(4, 0) } else { quadratic_factor(n) };
            out = &out * &factor.pow(k as u32);
        }
        out
    }
}

/// `z0^2 - n^2 (z1^2 + z2 z3)`
fn quadratic_factor(n: u64) -> SparsePoly {
    let z = |i| SparsePoly::var(4, i);
    let casimir = &z(1).pow(2) + &(&z(2) * &z(3));
    &z(0).pow(2) - &casimir.scale(&Rational::from((n * n) as i64))
}

/// Closed form for the irreducible `(m+1)`-dimensional representation:
/// `z0 prod_{l=1}^{m/2} (z0^2 - 4l^2 C)` for even `m` and
/// `prod_{l=0}^{(m-1)/2} (z0^2 - (2l+1)^2 C)` for odd `m`, with `C = z1^2 + z2 z3`.
pub fn irrep_closed_form(m: u64) -> SparsePoly {
    if m.is_multiple_of(2) {
        (1..=m / 2).fold(SparsePoly::var(4, 0), |acc, l| &acc * &quadratic_factor(2 * l))
    } else {
        (0..=(m - 1) / 2).fold(SparsePoly::one(4), |acc, l| &acc * &quadratic_factor(2 * l + 1))
    }
}

/// Reads off `d_n` = multiplicity of the `h`-eigenvalue `n` from an `A1` weight multiset.
pub fn sl2_dims(ws: &WeightMultiset) -> Result<Sl2CharPoly> {
    let tag = ws.tag();
    if tag.family != Family::A || tag.rank != 1 {
        return Err(Error::Shape(format!("sl2 exponents need an A1 multiset, got {tag}")));
    }
    let mut d = BTreeMap::new();
    for (w, m) in ws.iter() {
        let n = w.coords()[0];
        let mirror = ws.get(&Weight(vec![-n]));
        if mirror != m {
            return Err(Error::NotACharacter(format!(
                "eigenvalue {n} has multiplicity {m} but {} has {mirror}",
                -n
            )));
        }
        if n >= 0 {
            d.insert(n as u64, m);
        }
    }
    Ok(Sl2CharPoly { d })
}

/// Counts of roots by pairing value against one root of a given class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub family: Family,
    pub rank: usize,
    pub root_class: RootClass,
    /// The root `lambda` used, in ambient coordinates.
    pub representative: AmbientVector,
    /// `k_roots[i]` = number of roots `beta` with `<beta, lambda> = i`, for `i = 0..=3`.
    pub k_roots: BTreeMap<u8, u64>,
    pub cartan_dim: u64,
    /// `k_roots[0] + cartan_dim`: the full multiplicity of eigenvalue 0.
    pub k0_total: u64,
    pub dim_l: u64,
    /// `dim_l == k0_total + 2 (k1 + k2 + k3)`.
    pub dim_identity_holds: bool,
    pub published: Option<PublishedComparison>,
}

impl EmbeddingReport {
    pub fn k(&self, i: u8) -> u64 {
        self.k_roots.get(&i).copied().unwrap_or(0)
    }
}

/// Which reading of the published `k0` agrees with the computed value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum K0Reading {
    RootsOnly,
    CartanInclusive,
    Neither,
}

/// How the symbolic `n` of a published row is instantiated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankReading {
    /// `n` is the rank of the root system.
    Rank,
    /// `n` is the size of the matrices in `sl_n`, i.e. rank + 1.
    SlN,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PublishedComparison {
    pub row: String,
    pub reading: RankReading,
    /// The value substituted for the row's `n`.
    pub n: i64,
    pub claimed: [i64; 4],
    pub k0_reading: K0Reading,
    /// Per-entry agreement; `k0` agrees under either reading.
    pub matches: [bool; 4],
    pub k1_plus_k2_matches: bool,
}

impl PublishedComparison {
    pub fn all_match(&self) -> bool {
        self.matches.iter().all(|&m| m)
    }
}

/// One published row: each entry is `a n^2 + b n + c`.
#[derive(Clone, Copy, Debug)]
pub struct PublishedRow {
    pub family: Family,
    pub class: RootClass,
    pub label: &'static str,
    pub k: [[i64; 3]; 4],
}

impl PublishedRow {
    pub fn claimed(&self, n: i64) -> [i64; 4] {
        self.k.map(|[a, b, c]| a * n * n + b * n + c)
    }
}

const fn row(family: Family, class: RootClass, label: &'static str, k: [[i64; 3]; 4]) -> PublishedRow {
    PublishedRow { family, class, label, k }
}

const fn c(v: i64) -> [i64; 3] {
    [0, 0, v]
}

/// The published values of `k0..k3`, transcribed as polynomials in `n`.
pub const PUBLISHED_ROWS: &[PublishedRow] = &[
    row(Family::A, RootClass::Long, "A_n alpha", [[1, -5, 6], [0, 2, -4], c(1), c(0)]),
    row(Family::B, RootClass::Long, "B_n alpha", [[2, -7, 14], [0, 4, -8], c(1), c(0)]),
    row(Family::B, RootClass::Short, "B_n gamma", [[2, -3, -2], c(0), [0, 2, 1], c(0)]),
    row(Family::C, RootClass::Long, "C_n alpha", [[2, -3, 6], [0, 2, -4], c(1), c(0)]),
    row(Family::C, RootClass::Short, "C_n gamma", [[2, -7, 10], [0, 4, -8], c(3), c(0)]),
    row(Family::D, RootClass::Long, "D_n alpha", [[2, -9, 14], [0, 4, -8], c(1), c(0)]),
    row(Family::G, RootClass::Long, "G_2 alpha", [c(2), c(4), c(1), c(0)]),
    row(Family::G, RootClass::Short, "G_2 gamma", [c(2), c(2), c(1), c(2)]),
    row(Family::F, RootClass::Long, "F_4 alpha", [c(18), c(14), c(1), c(0)]),
    row(Family::F, RootClass::Short, "F_4 gamma", [c(18), c(14), c(1), c(0)]),
    row(Family::E, RootClass::Long, "E_6 alpha", [c(30), c(12), c(9), c(0)]),
    row(Family::E, RootClass::Long, "E_7 alpha", [c(60), c(16), c(17), c(0)]),
    row(Family::E, RootClass::Long, "E_8 alpha", [c(126), c(24), c(33), c(0)]),
];

fn table_row(family: Family, rank: usize, class: RootClass) -> Option<&'static PublishedRow> {
    PUBLISHED_ROWS.iter().find(|r| {
        r.family == family
            && r.class == class
            && (family != Family::E || r.label.starts_with(&format!("E_{rank}")))
    })
}

/// Pairing counts `#{beta in Phi : <beta, lambda> = v}` for `v = -3..=3`.
pub fn pairing_histogram(rs: &RootSystem, lambda: &AmbientVector) -> Result<[u64; 7]> {
    let mut hist = [0u64; 7];
    for (beta, _) in rs.all_roots_ambient() {
        let p = rs.pairing(&beta, lambda)?;
        let v = p
            .to_i64()
            .filter(|v| (-3..=3).contains(v))
            .ok_or_else(|| Error::Shape(format!("pairing {p} is not a root pairing")))?;
        hist[(v + 3) as usize] += 1;
    }
    Ok(hist)
}

/// Eigenvalue counts of `ad H_lambda` for a root `lambda` of the requested class.
pub fn embed_report(rs: &RootSystem, class: RootClass) -> Result<EmbeddingReport> {
    let lambda = rs
        .representative_root(class)
        .ok_or(Error::NoSuchRootClass(rs.tag(), class.as_str()))?
        .ambient
        .clone();
    let hist = pairing_histogram(rs, &lambda)?;
    for i in 1..=3 {
        if hist[3 + i] != hist[3 - i] {
            return Err(Error::Shape(format!("pairing counts for +{i} and -{i} differ")));
        }
    }
    let k_roots: BTreeMap<u8, u64> = (0..=3u8).map(|i| (i, hist[3 + i as usize])).collect();
    let cartan_dim = rs.rank() as u64;
    let k0_total = k_roots[&0] + cartan_dim;
    let dim_l = rs.algebra_dim() as u64;
    let dim_identity_holds = dim_l == k0_total + 2 * (k_roots[&1] + k_roots[&2] + k_roots[&3]);
    Ok(EmbeddingReport {
        family: rs.family(),
        rank: rs.rank(),
        root_class: class,
        representative: lambda,
        k_roots,
        cartan_dim,
        k0_total,
        dim_l,
        dim_identity_holds,
        published: None,
    })
}

/// Exponents of the adjoint characteristic polynomial of the root `sl(2)`.
pub fn embed_charpoly(report: &EmbeddingReport) -> Sl2CharPoly {
    Sl2CharPoly::from_exponents(
        [(0, report.k0_total)].into_iter().chain((1..=3u8).map(|i| (i as u64, report.k(i)))),
    )
}

/// Compares a computed report against a published row.
pub fn compare(report: &EmbeddingReport, row: &PublishedRow, reading: RankReading) -> PublishedComparison {
    let n = match reading {
        RankReading::Rank => report.rank as i64,
        RankReading::SlN => report.rank as i64 + 1,
    };
    let claimed = row.claimed(n);
    let k0_roots = report.k(0) as i64;
    let k0_reading = if claimed[0] == k0_roots {
        K0Reading::RootsOnly
    } else if claimed[0] == report.k0_total as i64 {
        K0Reading::CartanInclusive
    } else {
        K0Reading::Neither
    };
    let matches = [
        k0_reading != K0Reading::Neither,
        claimed[1] == report.k(1) as i64,
        claimed[2] == report.k(2) as i64,
        claimed[3] == report.k(3) as i64,
    ];
    let k1_plus_k2_matches = claimed[1] + claimed[2] == (report.k(1) + report.k(2)) as i64;
    PublishedComparison {
        row: row.label.to_string(),
        reading,
        n,
        claimed,
        k0_reading,
        matches,
        k1_plus_k2_matches,
    }
}

/// One report per published row and supported rank (A rows under both readings of `n`).
pub fn published_audit() -> Result<Vec<EmbeddingReport>> {
    let mut out = Vec::new();
    for tag in supported_types(DEFAULT_MAX_CLASSICAL_RANK) {
        let rs = RootSystem::build(tag.family, tag.rank)?;
        for class in rs.root_classes() {
            let Some(row) = table_row(tag.family, tag.rank, class) else { continue };
            let base = embed_report(&rs, class)?;
            let readings: &[RankReading] = if tag.family == Family::A {
                &[RankReading::Rank, RankReading::SlN]
            } else {
                &[RankReading::Rank]
            };
            for &reading in readings {
                let mut report = base.clone();
                report.published = Some(compare(&report, row, reading));
                out.push(report);
            }
        }
    }
    Ok(out)
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

/// Markdown table of an audit, one line per report.
pub fn render_markdown(reports: &[EmbeddingReport]) -> String {
    let mut s = String::new();
    s.push_str(
        "| type | root | row | n | k0 roots | k0 +cartan | k1 | k2 | k3 | dim L | claimed k0 | claimed k1 | claimed k2 | claimed k3 | k0 reading | k1 ok | k2 ok | k3 ok | k1+k2 ok | identity |\n",
    );
    s.push_str("|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n");
    for r in reports {
        let (label, n, claimed, reading, m, sum) = match &r.published {
            Some(t) => (
                t.row.clone(),
                t.n.to_string(),
                t.claimed.map(|v| v.to_string()),
                match t.k0_reading {
                    K0Reading::RootsOnly => "roots only",
                    K0Reading::CartanInclusive => "with Cartan",
                    K0Reading::Neither => "NO",
                },
                t.matches.map(flag),
                flag(t.k1_plus_k2_matches),
            ),
            None => ("-".into(), "-".into(), ["-".to_string(), "-".into(), "-".into(), "-".into()], "-", ["-"; 4], "-"),
        };
        let _ = writeln!(
            s,
            "| {}{} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.family,
            r.rank,
            r.root_class,
            label,
            n,
            r.k(0),
            r.k0_total,
            r.k(1),
            r.k(2),
            r.k(3),
            r.dim_l,
            claimed[0],
            claimed[1],
            claimed[2],
            claimed[3],
            reading,
            m[1],
            m[2],
            m[3],
            sum,
            flag(r.dim_identity_holds),
        );
    }
    s
}

pub fn render_json(reports: &[EmbeddingReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("plain data");
    s.push('\n');
    s
}
