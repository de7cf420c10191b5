//! Restrictions of irreducible alpha-representations to the canonical subgroups,
//! and the census of all classes against the closed-form counts.
//!
//! Two verdict paths:
//! * rank path: for `rho` irreducible the commutant of `rho(H)` is spanned by the
//!   `rho(g)`, `g in G/G0`, that pair trivially with `H`, so its dimension is
//!   `p^c` with `c = 2 n_G - rank(W A_alpha)` (`W` = reduced exponent vectors of
//!   `H`'s generators). With `delta = n_G - n_H` there are `p^{2 delta - c}`
//!   distinct constituents, each of multiplicity `p^{c - delta}`.
//! * matrix path: the commutant of the actual restricted images over `Q(xi_p)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cocycle::{class_at, class_count, BilinearCocycle};
use crate::construct::{construct_inflated, ProjRep};
use crate::error::{Error, Result};
use crate::fpmatrix::{count_rank_formula, FpMatrix};
use crate::pgroup::{subgroup, AbelianPGroup, Limits, SubgroupSpec};
use crate::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Irreducible,
    SplitsP,
    SplitsP2,
    /// A constituent occurs with multiplicity above 1.
    Repeated,
}

impl Category {
    pub fn as_str(&self) -> &'static str {
        match self {
            Category::Irreducible => "irreducible",
            Category::SplitsP => "splits-p",
            Category::SplitsP2 => "splits-p2",
            Category::Repeated => "repeated",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "irreducible" => Ok(Category::Irreducible),
            "splits-p" => Ok(Category::SplitsP),
            "splits-p2" => Ok(Category::SplitsP2),
            "repeated" => Ok(Category::Repeated),
            _ => Err(Error::Parse(format!("unknown category {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionVerdict {
    pub spec: SubgroupSpec,
    pub class_matrix: FpMatrix,
    pub ambient_rank: usize,
    pub restricted_rank: usize,
    pub ambient_dim: u128,
    /// Number of distinct irreducible constituents.
    pub constituents: u128,
    pub multiplicity: u128,
    pub commutant_dim: u128,
    pub category: Category,
}

impl RestrictionVerdict {
    fn build(
        spec: SubgroupSpec,
        c: &FpMatrix,
        n_g: usize,
        n_h: usize,
        commutant_exp: usize,
    ) -> Result<Self> {
        let p = c.p() as u128;
        let delta = n_g.checked_sub(n_h).ok_or_else(|| {
            Error::CocycleMismatch(format!("restricted rank {n_h} above ambient rank {n_g}"))
        })?;
        if commutant_exp < delta || commutant_exp > 2 * delta {
            return Err(Error::CocycleMismatch(format!(
                "commutant p^{commutant_exp} inconsistent with rank drop {delta}"
            )));
        }
        let constituents = p.pow((2 * delta - commutant_exp) as u32);
        let multiplicity = p.pow((commutant_exp - delta) as u32);
        let category = if multiplicity > 1 {
            Category::Repeated
        } else {
            match delta {
                0 => Category::Irreducible,
                1 => Category::SplitsP,
                _ => Category::SplitsP2,
            }
        };
        Ok(RestrictionVerdict {
            spec,
            class_matrix: c.clone(),
            ambient_rank: n_g,
            restricted_rank: n_h,
            ambient_dim: p.pow(n_g as u32),
            constituents,
            multiplicity,
            commutant_dim: p.pow(commutant_exp as u32),
            category,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "form": self.spec.to_string(),
            "class_matrix": self.class_matrix.to_string(),
            "ambient_rank": self.ambient_rank,
            "restricted_rank": self.restricted_rank,
            "ambient_dim": self.ambient_dim.to_string(),
            "constituents": self.constituents.to_string(),
            "multiplicity": self.multiplicity.to_string(),
            "commutant_dim": self.commutant_dim.to_string(),
            "category": self.category.as_str(),
        })
    }
}

/// Precomputed rank-path data for one `(G, spec)`.
pub struct RankAnalyzer {
    spec: SubgroupSpec,
    /// Reduced exponent vectors of `H`'s generators, one per row.
    w: FpMatrix,
    kept_rows: Vec<usize>,
    kept_cols: Vec<usize>,
}

impl RankAnalyzer {
    pub fn new(group: &AbelianPGroup, spec: SubgroupSpec, limits: &Limits) -> Result<Self> {
        let h = subgroup(group, spec, limits)?;
        let p = group.p();
        let rows: Vec<u64> = h
            .generators
            .iter()
            .flat_map(|(g, _)| g.reduced(p))
            .collect();
        let w = FpMatrix::from_vec(p, h.generators.len(), group.rank(), rows)?;
        let (kept_rows, kept_cols) = spec.kept_coordinates(group.t(), group.s());
        Ok(RankAnalyzer {
            spec,
            w,
            kept_rows,
            kept_cols,
        })
    }

    pub fn verdict(&self, alpha: &BilinearCocycle) -> Result<RestrictionVerdict> {
        let c = alpha.matrix();
        let n_g = c.rank();
        let n_h = c.select(&self.kept_rows, &self.kept_cols).rank();
        let pairing = self.w.mul(&alpha.a_matrix())?.rank();
        RestrictionVerdict::build(self.spec, c, n_g, n_h, 2 * n_g - pairing)
    }
}

pub fn rank_verdict(alpha: &BilinearCocycle, spec: SubgroupSpec) -> Result<RestrictionVerdict> {
    RankAnalyzer::new(alpha.group(), spec, &Limits::default())?.verdict(alpha)
}

fn log_p(p: u64, mut v: usize) -> Option<usize> {
    let mut e = 0;
    while v > 1 {
        if !v.is_multiple_of(p as usize) {
            return None;
        }
        v /= p as usize;
        e += 1;
    }
    (v == 1).then_some(e)
}

/// Matrix path: commutant of `rho` evaluated on `H`'s generators.
pub fn restrict_rep(rho: &ProjRep, spec: SubgroupSpec) -> Result<RestrictionVerdict> {
    let alpha = rho.cocycle();
    let group = alpha.group();
    let h = subgroup(group, spec, &Limits::default())?;
    let images = h
        .generators
        .iter()
        .map(|(g, _)| rho.evaluate_rep(g))
        .collect::<Result<Vec<_>>>()?;
    let dim = crate::matrix::commutant_dimension(&images, rho.dim())?;
    let exp = log_p(group.p(), dim).ok_or_else(|| {
        Error::CocycleMismatch(format!("commutant dimension {dim} is not a power of p"))
    })?;
    let n_h = alpha.restrict(spec)?.rank();
    let n_g = log_p(group.p(), rho.dim()).ok_or_else(|| {
        Error::CocycleMismatch(format!("dimension {} is not a power of p", rho.dim()))
    })?;
    RestrictionVerdict::build(spec, alpha.matrix(), n_g, n_h, exp)
}

/// Categories that a form can produce according to its index.
pub fn categories_for(spec: SubgroupSpec) -> Vec<Category> {
    match spec.index_exponent() {
        0 => vec![Category::Irreducible],
        1 => vec![Category::Irreducible, Category::SplitsP],
        _ => vec![
            Category::Irreducible,
            Category::SplitsP,
            Category::SplitsP2,
            Category::Repeated,
        ],
    }
}

/// Row keys `(category, n_H)` in display order.
pub fn row_layout(group: &AbelianPGroup, spec: SubgroupSpec) -> Vec<(Category, usize)> {
    let (rows, cols) = spec.kept_coordinates(group.t(), group.s());
    let max_n = rows.len().min(cols.len());
    categories_for(spec)
        .into_iter()
        .flat_map(|c| (0..=max_n).map(move |n| (c, n)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub category: Category,
    /// Rank of the restricted matrix.
    pub n: usize,
    pub count: u128,
    /// Up to three class matrices in the row, lowest enumeration index first.
    pub examples: Vec<FpMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub group: AbelianPGroup,
    pub spec: SubgroupSpec,
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    pub fn total(&self) -> u128 {
        self.rows.iter().map(|r| r.count).sum()
    }

    pub fn get(&self, category: Category, n: usize) -> u128 {
        self.rows
            .iter()
            .find(|r| r.category == category && r.n == n)
            .map_or(0, |r| r.count)
    }
}

fn z(p: u64, m: usize, n: usize, r: usize) -> Result<i128> {
    if r > m.min(n) {
        return Ok(0);
    }
    i128::try_from(count_rank_formula(p, m, n, r)?).map_err(|_| Error::Overflow("census count"))
}

fn pw(p: u64, e: usize) -> Result<i128> {
    (p as i128)
        .checked_pow(e as u32)
        .ok_or(Error::Overflow("census count"))
}

/// Closed-form counts per `(category, n_H)` for the canonical forms.
pub fn expected_counts(group: &AbelianPGroup, spec: SubgroupSpec) -> Result<CensusTable> {
    if spec == SubgroupSpec::Full {
        return Err(Error::InvalidForm("FULL has no restriction count".into()));
    }
    subgroup(group, spec, &Limits::default())?;
    let (p, t, s) = (group.p(), group.t(), group.s());
    let pi = p as i128;
    let formula = |cat: Category, n: usize| -> Result<i128> {
        use Category::*;
        let v = match (spec, cat) {
            (SubgroupSpec::X(_) | SubgroupSpec::B(_), Irreducible) => {
                pw(p, n)? * z(p, t - 1, s, n)?
            }
            (SubgroupSpec::X(_) | SubgroupSpec::B(_), SplitsP) => {
                pw(p, n)? * (pw(p, s - n)? - 1) * z(p, t - 1, s, n)?
            }
            (SubgroupSpec::Y(_), Irreducible) => pw(p, n)? * z(p, t, s - 1, n)?,
            (SubgroupSpec::Y(_), SplitsP) => pw(p, n)? * (pw(p, t - n)? - 1) * z(p, t, s - 1, n)?,
            (SubgroupSpec::A(..), Irreducible) => pw(p, 2 * n)? * z(p, t - 2, s, n)?,
            (SubgroupSpec::A(..), SplitsP) => {
                pw(p, 2 * n)? * (pi + 1) * (pw(p, s - n)? - 1) * z(p, t - 2, s, n)?
            }
            (SubgroupSpec::A(..), SplitsP2) => {
                pw(p, 2 * n)? * (pw(p, s - n)? - 1) * (pw(p, s - n)? - pi) * z(p, t - 2, s, n)?
            }
            (SubgroupSpec::C(..), Irreducible) => pw(p, 2 * n)? * z(p, t - 1, s - 1, n)?,
            (SubgroupSpec::C(..), SplitsP) => {
                pw(p, 2 * n + 1)?
                    * ((pw(p, t - n - 1)? - 1) + (pw(p, s - n - 1)? - 1))
                    * z(p, t - 1, s - 1, n)?
            }
            (SubgroupSpec::C(..), SplitsP2) => {
                pw(p, 2 * n + 1)?
                    * (pw(p, t - n - 1)? - 1)
                    * (pw(p, s - n - 1)? - 1)
                    * z(p, t - 1, s - 1, n)?
            }
            _ => 0,
        };
        Ok(v)
    };
    let rows = row_layout(group, spec)
        .into_iter()
        .map(|(category, n)| {
            let v = formula(category, n)?;
            let count =
                u128::try_from(v).map_err(|_| Error::Overflow("negative closed-form count"))?;
            Ok(CensusRow {
                category,
                n,
                count,
                examples: Vec::new(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CensusTable {
        group: group.clone(),
        spec,
        rows,
    })
}

type Tally = HashMap<(Category, usize), (u128, Vec<(u128, FpMatrix)>)>;

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (key, (count, examples)) in b {
        let slot = a.entry(key).or_insert((0, Vec::new()));
        slot.0 += count;
        slot.1.extend(examples);
        slot.1.sort_by_key(|(i, _)| *i);
        slot.1.truncate(3);
    }
    a
}

/// Rank-path verdict for every class, tallied by `(category, n_H)`.
pub fn classify_all(
    group: &AbelianPGroup,
    spec: SubgroupSpec,
    limits: &Limits,
) -> Result<CensusTable> {
    let total = class_count(group)?;
    limits.check("class count", total, limits.max_classes)?;
    let analyzer = RankAnalyzer::new(group, spec, limits)?;
    let tally = (0..total as u64)
        .into_par_iter()
        .try_fold(Tally::new, |mut acc, idx| -> Result<Tally> {
            let alpha = class_at(group, idx as u128);
            let v = analyzer.verdict(&alpha)?;
            let slot = acc
                .entry((v.category, v.restricted_rank))
                .or_insert((0, Vec::new()));
            slot.0 += 1;
            if slot.1.len() < 3 {
                slot.1.push((idx as u128, alpha.matrix().clone()));
            }
            Ok(acc)
        })
        .try_reduce(Tally::new, |a, b| Ok(merge(a, b)))?;
    let mut keys = row_layout(group, spec);
    let mut extra: Vec<(Category, usize)> = tally
        .keys()
        .filter(|k| !keys.contains(k))
        .copied()
        .collect();
    extra.sort();
    keys.extend(extra);
    let rows = keys
        .into_iter()
        .map(|(category, n)| {
            let (count, examples) = tally.get(&(category, n)).cloned().unwrap_or_default();
            CensusRow {
                category,
                n,
                count,
                examples: examples.into_iter().map(|(_, m)| m).collect(),
            }
        })
        .collect();
    Ok(CensusTable {
        group: group.clone(),
        spec,
        rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub category: Category,
    pub n: usize,
    pub expected: u128,
    pub observed: u128,
    /// Sample classes in the observed row.
    pub examples: Vec<FpMatrix>,
}

impl ComparisonRow {
    pub fn matches(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusComparison {
    pub group: AbelianPGroup,
    pub spec: SubgroupSpec,
    pub rows: Vec<ComparisonRow>,
}

impl CensusComparison {
    pub fn new(expected: &CensusTable, observed: &CensusTable) -> Self {
        let mut keys: Vec<(Category, usize)> =
            expected.rows.iter().map(|r| (r.category, r.n)).collect();
        for r in &observed.rows {
            if !keys.contains(&(r.category, r.n)) {
                keys.push((r.category, r.n));
            }
        }
        let rows = keys
            .into_iter()
            .map(|(category, n)| ComparisonRow {
                category,
                n,
                expected: expected.get(category, n),
                observed: observed.get(category, n),
                examples: observed
                    .rows
                    .iter()
                    .find(|r| r.category == category && r.n == n)
                    .map(|r| r.examples.clone())
                    .unwrap_or_default(),
            })
            .collect();
        CensusComparison {
            group: observed.group.clone(),
            spec: observed.spec,
            rows,
        }
    }

    pub fn matches(&self) -> bool {
        self.rows.iter().all(ComparisonRow::matches)
    }

    pub fn discrepancies(&self) -> Vec<&ComparisonRow> {
        self.rows.iter().filter(|r| !r.matches()).collect()
    }

    pub fn expected_total(&self) -> u128 {
        self.rows.iter().map(|r| r.expected).sum()
    }

    pub fn observed_total(&self) -> u128 {
        self.rows.iter().map(|r| r.observed).sum()
    }

    /// One line per discrepancy, naming offending class matrices.
    pub fn report(&self) -> String {
        self.discrepancies()
            .iter()
            .map(|r| {
                let classes: Vec<String> = r.examples.iter().map(|m| format!("[{m}]")).collect();
                format!(
                    "{} {} {} n={}: expected {} observed {}; classes {}",
                    self.group,
                    self.spec,
                    r.category,
                    r.n,
                    r.expected,
                    r.observed,
                    if classes.is_empty() {
                        "-".to_string()
                    } else {
                        classes.join(" ")
                    }
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("form,category,n,expected,observed,match\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                self.spec,
                r.category,
                r.n,
                r.expected,
                r.observed,
                r.matches()
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "group": self.group.to_string(),
            "form": self.spec.to_string(),
            "rows": self.rows.iter().map(|r| json!({
                "category": r.category.as_str(),
                "n": r.n,
                "expected": r.expected.to_string(),
                "observed": r.observed.to_string(),
                "match": r.matches(),
            })).collect::<Vec<_>>(),
            "expected_total": self.expected_total().to_string(),
            "observed_total": self.observed_total().to_string(),
            "match": self.matches(),
            "discrepancies": self.discrepancies().iter().map(|r| json!({
                "category": r.category.as_str(),
                "n": r.n,
                "expected": r.expected.to_string(),
                "observed": r.observed.to_string(),
                "classes": r.examples.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Result of comparing rank and matrix verdicts on a set of classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpotCheck {
    pub checked: usize,
    /// `(rank verdict, matrix verdict)` pairs that disagree.
    pub mismatches: Vec<(RestrictionVerdict, RestrictionVerdict)>,
}

impl SpotCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Class indices to spot-check: all when there are at most `all_below`, else `samples` seeded picks.
pub fn spot_check_indices(total: u128, all_below: u128, samples: usize, seed: u64) -> Vec<u128> {
    if total <= all_below {
        return (0..total).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = usize::try_from(total).unwrap_or(usize::MAX);
    let mut picked: Vec<u128> = sample(&mut rng, n, samples.min(n))
        .into_iter()
        .map(|i| i as u128)
        .collect();
    picked.sort_unstable();
    picked
}

/// Builds `rho` for each listed class and compares matrix and rank verdicts.
pub fn spot_check(
    group: &AbelianPGroup,
    spec: SubgroupSpec,
    indices: &[u128],
    limits: &Limits,
) -> Result<SpotCheck> {
    let analyzer = RankAnalyzer::new(group, spec, limits)?;
    let results = indices
        .par_iter()
        .map(
            |&idx| -> Result<Option<(RestrictionVerdict, RestrictionVerdict)>> {
                let alpha = class_at(group, idx);
                let by_rank = analyzer.verdict(&alpha)?;
                let by_matrix = restrict_rep(&construct_inflated(&alpha)?, spec)?;
                Ok((by_rank != by_matrix).then_some((by_rank, by_matrix)))
            },
        )
        .collect::<Result<Vec<_>>>()?;
    Ok(SpotCheck {
        checked: indices.len(),
        mismatches: results.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_general;

    fn ex1(p: u64) -> BilinearCocycle {
        BilinearCocycle::parse(&format!("p={p};r=2,2;s=1,1"), "1,1;0,0").unwrap()
    }

    #[test]
    fn restrict_rep_examples() {
        for p in [2, 3] {
            let a = ex1(p);
            let rho = construct_general(&a).unwrap();
            let v = restrict_rep(&rho, SubgroupSpec::X(0)).unwrap();
            assert_eq!(v.ambient_dim, p as u128);
            assert_eq!(v.constituents, p as u128);
            assert_eq!(v.category, Category::SplitsP);
            assert_eq!(v, rank_verdict(&a, SubgroupSpec::X(0)).unwrap());
            let v = restrict_rep(&rho, SubgroupSpec::Y(1)).unwrap();
            assert_eq!(v.restricted_rank, 1);
            assert_eq!(v.constituents, 1);
            assert_eq!(v.category, Category::Irreducible);
        }
        let z = BilinearCocycle::trivial("p=3;r=3,3;s=1,1".parse().unwrap());
        let rho = construct_general(&z).unwrap();
        for spec in SubgroupSpec::all_valid(z.group(), 1)
            .into_iter()
            .chain(SubgroupSpec::all_valid(z.group(), 2))
        {
            let v = restrict_rep(&rho, spec).unwrap();
            assert_eq!((v.ambient_dim, v.constituents), (1, 1));
        }
    }

    #[test]
    fn classify_examples() {
        let l = Limits::default();
        let g: AbelianPGroup = "p=2;r=2,2;s=1,1".parse().unwrap();
        let t = classify_all(&g, SubgroupSpec::X(1), &l).unwrap();
        assert_eq!(t.get(Category::Irreducible, 0), 1);
        assert_eq!(t.get(Category::Irreducible, 1), 6);
        assert_eq!(t.get(Category::SplitsP, 0), 3);
        assert_eq!(t.get(Category::SplitsP, 1), 6);
        assert_eq!(t.total(), 16);
        assert_eq!(t.rows.len(), 4);
        assert!(t.rows[0].examples[0].is_zero());

        let g: AbelianPGroup = "p=2;r=1;s=1".parse().unwrap();
        let t = classify_all(&g, SubgroupSpec::Y(0), &l).unwrap();
        assert_eq!(t.get(Category::Irreducible, 0), 1);
        assert_eq!(t.get(Category::SplitsP, 0), 1);
    }

    #[test]
    fn expected_examples() {
        let g: AbelianPGroup = "p=2;r=2,2;s=1,1".parse().unwrap();
        let e = expected_counts(&g, SubgroupSpec::X(0)).unwrap();
        assert_eq!(e.get(Category::Irreducible, 0), 1);
        assert_eq!(e.get(Category::Irreducible, 1), 6);
        assert_eq!(e.get(Category::SplitsP, 0), 3);
        let g: AbelianPGroup = "p=3;r=3,3;s=1,1".parse().unwrap();
        let e = expected_counts(&g, SubgroupSpec::A(0, 1)).unwrap();
        assert_eq!(e.rows.iter().map(|r| r.n).max(), Some(0));
        assert_eq!(e.get(Category::Irreducible, 0), 1);
        assert!(matches!(
            expected_counts(&g, SubgroupSpec::Full),
            Err(Error::InvalidForm(_))
        ));
        assert!(matches!(
            expected_counts(&g, SubgroupSpec::Y(3)),
            Err(Error::InvalidForm(_))
        ));
    }

    #[test]
    fn form_c_has_repeated_constituents() {
        // the closed forms miss classes whose restriction is one constituent with multiplicity p;
        // their number is p^{2n} (p - 1) Z(p, t-1, s-1, n)
        let l = Limits::default();
        for (p, t, s) in [(2u64, 2usize, 2usize), (2, 2, 3), (2, 3, 2), (3, 2, 2)] {
            let r = vec![3u32; t];
            let g = AbelianPGroup::new(p, &r, &vec![1; s]).unwrap();
            let spec = SubgroupSpec::C(0, 0);
            let observed = classify_all(&g, spec, &l).unwrap();
            let expected = expected_counts(&g, spec).unwrap();
            for row in &expected.rows {
                if row.category != Category::Repeated {
                    assert_eq!(
                        row.count,
                        observed.get(row.category, row.n),
                        "{g} {spec} {}",
                        row.category
                    );
                }
            }
            for n in 0..t.min(s) {
                let rep = (p as u128).pow(2 * n as u32)
                    * (p as u128 - 1)
                    * count_rank_formula(p, t - 1, s - 1, n).unwrap();
                assert_eq!(observed.get(Category::Repeated, n), rep);
            }
            let cmp = CensusComparison::new(&expected, &observed);
            assert!(!cmp.matches());
            assert!(cmp.report().contains("repeated"));
        }
    }

    #[test]
    fn comparison_output() {
        let l = Limits::default();
        let g: AbelianPGroup = "p=2;r=1,1;s=1,1".parse().unwrap();
        let spec = SubgroupSpec::X(0);
        let cmp = CensusComparison::new(
            &expected_counts(&g, spec).unwrap(),
            &classify_all(&g, spec, &l).unwrap(),
        );
        assert!(cmp.matches());
        let csv = cmp.to_csv();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.starts_with("form,category,n,expected,observed,match\n"));
        assert_eq!(cmp.to_json()["match"], true);
        assert_eq!(cmp.report(), "");
    }

    #[test]
    fn spot_checks_agree() {
        let l = Limits::default();
        let g: AbelianPGroup = "p=3;r=3,3;s=1,1".parse().unwrap();
        for spec in SubgroupSpec::all_valid(&g, 1)
            .into_iter()
            .chain(SubgroupSpec::all_valid(&g, 2))
        {
            let idx = spot_check_indices(class_count(&g).unwrap(), 256, 100, 1);
            let sc = spot_check(&g, spec, &idx, &l).unwrap();
            assert_eq!(sc.checked, 81);
            assert!(sc.passed(), "{spec}: {:?}", sc.mismatches.first());
        }
        assert_eq!(spot_check_indices(10_000, 256, 100, 5).len(), 100);
        assert_eq!(
            spot_check_indices(10_000, 256, 100, 5),
            spot_check_indices(10_000, 256, 100, 5)
        );
    }

    #[test]
    fn category_text() {
        for c in [
            Category::Irreducible,
            Category::SplitsP,
            Category::SplitsP2,
            Category::Repeated,
        ] {
            assert_eq!(c.as_str().parse::<Category>().unwrap(), c);
        }
    }
}
