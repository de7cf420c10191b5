//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use projrep::census::{spot_check, CensusComparison, RankAnalyzer};
use projrep::cocycle::{class_count, enumerate_classes};
use projrep::pgroup::generated_subgroup;
use projrep::{
    classify_all, construct_general, construct_inflated, construct_tensor, count_rank_enumerate,
    count_rank_formula, expected_counts, AbelianPGroup, BilinearCocycle, CycMatrix, CycScalar,
    FpMatrix, GroupElement, Limits, ProjRep, SubgroupSpec,
};

const MAX_ORDER: u128 = 4096;
const MAX_CLASSES: u128 = 256;

const BUDGET_REGULAR: Duration = Duration::from_secs(120);
const BUDGET_CONSTRUCT: Duration = Duration::from_secs(600);
const BUDGET_RANK_COUNT: Duration = Duration::from_secs(60);
const BUDGET_INDEX_P: Duration = Duration::from_secs(300);
const BUDGET_INDEX_P2: Duration = Duration::from_secs(300);
const BUDGET_EXAMPLES: Duration = Duration::from_secs(60);
const BUDGET_TENSOR: Duration = Duration::from_secs(120);
const BUDGET_INFLATE: Duration = Duration::from_secs(300);
const BUDGET_CLIFFORD: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);
/// Per form: letter, tables compared, tables matching.
type FormTally = Vec<(char, usize, usize)>;

fn limits() -> Limits {
    Limits {
        max_elements: 1 << 20,
        max_matrices: 1 << 26,
        max_classes: 1 << 16,
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Non-increasing tuples of length `len` drawn from `vals`.
fn non_increasing(len: usize, vals: &[u32]) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for tail in non_increasing(len - 1, vals) {
        for &v in vals {
            if tail.last().is_none_or(|&l| v <= l) {
                let mut t = tail.clone();
                t.push(v);
                out.push(t);
            }
        }
    }
    out
}

fn sweep(primes: &[u64], ts: &[usize], ss: &[usize], rs: &[u32], ns: &[u32]) -> Vec<AbelianPGroup> {
    let mut out = Vec::new();
    for &p in primes {
        for &t in ts {
            for &s in ss {
                if (p as u128).pow((s * t) as u32) > MAX_CLASSES {
                    continue;
                }
                for r in non_increasing(t, rs) {
                    for n in non_increasing(s, ns) {
                        let g = AbelianPGroup::new(p, &r, &n).unwrap();
                        if g.order() <= MAX_ORDER {
                            out.push(g);
                        }
                    }
                }
            }
        }
    }
    out
}

fn small_sweep() -> Vec<AbelianPGroup> {
    sweep(&[2, 3], &[1, 2, 3], &[1, 2, 3], &[1, 2], &[1, 2])
}

fn index_p_sweep() -> Vec<AbelianPGroup> {
    sweep(&[2, 3], &[1, 2, 3, 4], &[1, 2, 3, 4], &[2], &[1])
}

fn regular_sets_agree() -> Outcome {
    let l = limits();
    let mut classes = 0;
    let groups = small_sweep();
    for g in &groups {
        for a in enumerate_classes(g, &l).map_err(err)? {
            let derived = a.regular_mask(&l).map_err(err)?;
            let brute = a.regular_mask_bruteforce(&l).map_err(err)?;
            ensure(derived == brute, || {
                format!("regular set differs for {g} C=[{}]", a.matrix())
            })?;
            let size = derived.iter().filter(|&&b| b).count() as u128;
            let index = (g.p() as u128).pow(a.regular_elements().index_exponent as u32);
            ensure(size * index == g.order(), || {
                format!("index of G0 wrong for {g} C=[{}]", a.matrix())
            })?;
            classes += 1;
        }
    }
    Ok(format!("{} groups, {classes} classes", groups.len()))
}

fn constructions_verified() -> Outcome {
    let l = limits();
    let mut classes = 0;
    let mut pairs = 0u128;
    let groups: Vec<_> = small_sweep()
        .into_iter()
        .filter(|g| g.is_elementary_g2())
        .collect();
    for g in &groups {
        for a in enumerate_classes(g, &l).map_err(err)? {
            let tag = || format!("{g} C=[{}]", a.matrix());
            let rho = construct_general(&a).map_err(err)?;
            let check = rho.check_identity_exhaustive(&l).map_err(err)?;
            ensure(check.exhaustive, || {
                format!("identity check not exhaustive for {}", tag())
            })?;
            if let Some((x, y)) = &check.failure {
                return Err(format!("identity fails at ({x}, {y}) for {}", tag()));
            }
            pairs += check.pairs_checked;
            let rank = a.rank();
            let p = g.p() as usize;
            ensure(rho.dim() == p.pow(rank as u32), || {
                format!("dim {} for {}", rho.dim(), tag())
            })?;
            let index = a.regular_elements().index_exponent;
            ensure(index == 2 * rank, || {
                format!("[G:G0] = p^{index} for {}", tag())
            })?;
            let comm = rho.commutant_dimension().map_err(err)?;
            ensure(comm == 1, || {
                format!("commutant dimension {comm} for {}", tag())
            })?;
            classes += 1;
        }
    }
    Ok(format!(
        "{} groups, {classes} classes, {pairs} pairs",
        groups.len()
    ))
}

fn rank_counts() -> Outcome {
    let l = limits();
    let mut cases = 0;
    for (p, max) in [(2u64, 3usize), (3, 3), (5, 2)] {
        for m in 1..=max {
            for n in 1..=max {
                let mut total = 0u128;
                for r in 0..=m.min(n) {
                    let formula = count_rank_formula(p, m, n, r).map_err(err)?;
                    let counted = count_rank_enumerate(p, m, n, r, &l).map_err(err)?;
                    ensure(formula == counted, || {
                        format!("p={p} {m}x{n} rank {r}: formula {formula}, enumeration {counted}")
                    })?;
                    total += formula;
                    cases += 1;
                }
                let all = (p as u128).pow((m * n) as u32);
                ensure(total == all, || {
                    format!("p={p} {m}x{n}: ranks sum to {total}, not {all}")
                })?;
            }
        }
    }
    Ok(format!("{cases} (p, m, n, r) cases"))
}

/// Per-form tallies and the discrepancy report.
fn compare_forms(
    groups: &[AbelianPGroup],
    index_exponent: u32,
) -> Result<(FormTally, Vec<String>), String> {
    let l = limits();
    let mut forms: FormTally = Vec::new();
    let mut report = Vec::new();
    for g in groups {
        let total = class_count(g).map_err(err)?;
        for spec in SubgroupSpec::all_valid(g, index_exponent) {
            let expected = expected_counts(g, spec).map_err(err)?;
            let observed = classify_all(g, spec, &l).map_err(err)?;
            ensure(observed.total() == total, || {
                format!(
                    "{g} {spec}: observed rows sum to {}, not {total}",
                    observed.total()
                )
            })?;
            let cmp = CensusComparison::new(&expected, &observed);
            let sums = expected.total() == total;
            if !sums {
                report.push(format!(
                    "{g} {spec}: expected rows sum to {}, not {total}",
                    expected.total()
                ));
            }
            if !cmp.matches() {
                report.push(cmp.report());
            }
            let form = spec.to_string().chars().next().unwrap_or('?');
            let slot = match forms.iter().position(|f| f.0 == form) {
                Some(i) => i,
                None => {
                    forms.push((form, 0, 0));
                    forms.len() - 1
                }
            };
            forms[slot].1 += 1;
            if sums && cmp.matches() {
                forms[slot].2 += 1;
            }
        }
    }
    Ok((forms, report))
}

fn census_outcome(groups: &[AbelianPGroup], index_exponent: u32) -> Outcome {
    let (forms, report) = compare_forms(groups, index_exponent)?;
    let summary = forms
        .iter()
        .map(|(f, n, ok)| format!("form {f}: {ok}/{n} tables match"))
        .collect::<Vec<_>>()
        .join(", ");
    if report.is_empty() {
        Ok(format!("{} groups; {summary}", groups.len()))
    } else {
        Err(format!(
            "{} groups; {summary}\n{}",
            groups.len(),
            report.join("\n")
        ))
    }
}

fn index_p_census() -> Outcome {
    census_outcome(&index_p_sweep(), 1)
}

fn index_p2_census() -> Outcome {
    census_outcome(&sweep(&[2], &[1, 2, 3, 4], &[1, 2, 3, 4], &[3], &[1]), 2)
}

fn clock(p: u64, c: u64) -> CycMatrix {
    CycMatrix::diag(
        p,
        (0..p as i64)
            .map(|m| CycScalar::root_power(p, -m * c as i64))
            .collect(),
    )
}

fn shift(p: u64) -> CycMatrix {
    let d = p as usize;
    CycMatrix::from_fn(p, d, d, |i, j| {
        CycScalar::from_integer(p, i64::from(i == (j + 1) % d))
    })
}

fn cocycle(p: u64, r: &[u32], n: &[u32], c: &str) -> BilinearCocycle {
    let g = AbelianPGroup::new(p, r, n).unwrap();
    BilinearCocycle::new(g, FpMatrix::parse(p, c).unwrap()).unwrap()
}

fn images_match(rho: &ProjRep, want: &[CycMatrix], tag: &str) -> Result<(), String> {
    ensure(rho.images() == want, || format!("images differ for {tag}"))
}

fn same_subgroup(a: &BilinearCocycle, gens: &[GroupElement], tag: &str) -> Result<(), String> {
    let l = limits();
    let g = a.group();
    let ours = generated_subgroup(g, &a.regular_elements().generators, &l).map_err(err)?;
    let theirs = generated_subgroup(g, gens, &l).map_err(err)?;
    ensure(ours == theirs, || {
        format!(
            "G0 differs for {tag}: {} vs {} elements",
            ours.len(),
            theirs.len()
        )
    })
}

fn worked_examples() -> Outcome {
    let l = limits();
    let mut checks = 0;
    for p in [2u64, 3, 5] {
        let id = CycMatrix::identity(p, p as usize);
        for r in [[1u32, 1], [2, 2]] {
            let one = cocycle(p, &r, &[1, 1], "1,1;0,0");
            let rho = construct_general(&one).map_err(err)?;
            images_match(
                &rho,
                &[clock(p, 1), id.clone(), shift(p), shift(p)],
                &format!("first example p={p}"),
            )?;
            let two = cocycle(p, &r, &[1, 1], "1,0;1,0");
            let rho2 = construct_general(&two).map_err(err)?;
            images_match(
                &rho2,
                &[clock(p, 1), clock(p, 1), shift(p), id.clone()],
                &format!("second example p={p}"),
            )?;
            if r[0] == 1 {
                for rho in [&rho, &rho2] {
                    ensure(
                        rho.check_identity_exhaustive(&l).map_err(err)?.passed(),
                        || format!("identity p={p}"),
                    )?;
                }
            }
            checks += 2;
        }

        let g = AbelianPGroup::new(p, &[2, 2], &[1, 1]).unwrap();
        let e = |m: &[i64], k: &[i64]| g.element(m, k).unwrap();
        let pp = p as i64;
        let one = cocycle(p, &[2, 2], &[1, 1], "1,1;0,0");
        same_subgroup(
            &one,
            &[
                e(&[pp, 0], &[0, 0]),
                e(&[0, 1], &[0, 0]),
                e(&[0, 0], &[1, -1]),
            ],
            "first example",
        )?;
        let two = cocycle(p, &[2, 2], &[1, 1], "1,0;1,0");
        let gens = [
            e(&[pp, 0], &[0, 0]),
            e(&[0, pp], &[0, 0]),
            e(&[1, -1], &[0, 0]),
            e(&[0, 0], &[0, 1]),
        ];
        same_subgroup(&two, &gens, "second example")?;
        checks += 2;
    }

    let a = cocycle(2, &[2, 2], &[1, 1], "0,1;1,0");
    let one = |v| CycScalar::from_integer(2, v);
    let d = CycMatrix::diag(2, vec![one(1), one(-1)]);
    let i2 = CycMatrix::identity(2, 2);
    let swap = shift(2);
    let kron = |x: &CycMatrix, y: &CycMatrix| x.kron(y).unwrap();
    let rho = construct_tensor(&a).map_err(err)?;
    let want = [
        kron(&d, &i2),
        kron(&i2, &d),
        kron(&i2, &swap),
        kron(&swap, &i2),
    ];
    images_match(&rho, &want, "tensor example")?;
    ensure(
        rho.check_identity_exhaustive(&l).map_err(err)?.passed(),
        || "tensor identity".into(),
    )?;
    let g = a.group();
    same_subgroup(
        &a,
        &[
            g.element(&[2, 0], &[0, 0]).unwrap(),
            g.element(&[0, 2], &[0, 0]).unwrap(),
        ],
        "tensor example",
    )?;
    ensure(a.regular_elements().index_exponent == 4, || {
        "tensor example index".into()
    })?;
    checks += 3;
    Ok(format!("{checks} example checks"))
}

/// Matrices of the form `P D` with `P` a permutation and `D` invertible diagonal.
fn generalized_permutations(p: u64, t: usize) -> Vec<FpMatrix> {
    let perms: Vec<Vec<usize>> = if t == 1 {
        vec![vec![0]]
    } else {
        vec![vec![0, 1], vec![1, 0]]
    };
    let mut out = Vec::new();
    for perm in perms {
        let mut scales = vec![vec![]];
        for _ in 0..t {
            scales = scales
                .into_iter()
                .flat_map(|s: Vec<u64>| {
                    (1..p).map(move |c| {
                        let mut s = s.clone();
                        s.push(c);
                        s
                    })
                })
                .collect();
        }
        for s in scales {
            let mut m = FpMatrix::zeros(p, t, t);
            for (i, &j) in perm.iter().enumerate() {
                m.set(i, j, s[i]);
            }
            out.push(m);
        }
    }
    out
}

fn tensor_coherence() -> Outcome {
    let l = limits();
    let (mut cases, mut central) = (0, 0);
    for p in [2u64, 3] {
        for t in [1usize, 2] {
            for r in non_increasing(t, &[1, 2]) {
                let g = AbelianPGroup::new(p, &r, &vec![1; t]).unwrap();
                for c in generalized_permutations(p, t) {
                    let a = BilinearCocycle::new(g.clone(), c).map_err(err)?;
                    let tag = || format!("{g} C=[{}]", a.matrix());
                    let tensor = construct_tensor(&a).map_err(err)?;
                    let general = construct_general(&a).map_err(err)?;
                    for rho in [&tensor, &general] {
                        let check = rho.check_identity_exhaustive(&l).map_err(err)?;
                        ensure(check.passed(), || format!("identity fails for {}", tag()))?;
                    }
                    ensure(tensor.dim() == general.dim(), || {
                        format!("dimensions differ for {}", tag())
                    })?;
                    ensure(tensor.is_irreducible().map_err(err)?, || {
                        format!("tensor reducible for {}", tag())
                    })?;
                    if r.iter().all(|&x| x == 1) {
                        ensure(a.regular_elements().index_exponent == 2 * t, || {
                            format!("not of central type: {}", tag())
                        })?;
                        ensure(tensor.is_equivalent(&general).map_err(err)?, || {
                            format!("inequivalent for {}", tag())
                        })?;
                        central += 1;
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} classes, {central} of central type"))
}

fn inflation() -> Outcome {
    let l = limits();
    let mut classes = 0;
    let groups = sweep(&[2, 3], &[1, 2], &[1, 2], &[1, 2], &[1, 2]);
    for g in &groups {
        let lifts: Vec<GroupElement> = (0..g.s())
            .filter(|&j| g.n()[j] > 1)
            .map(|j| g.pow(&g.y(j), g.p()))
            .collect();
        for a in enumerate_classes(g, &l).map_err(err)? {
            let tag = || format!("{g} C=[{}]", a.matrix());
            let rho = construct_inflated(&a).map_err(err)?;
            let check = rho.check_identity_exhaustive(&l).map_err(err)?;
            if let Some((x, y)) = &check.failure {
                return Err(format!("identity fails at ({x}, {y}) for {}", tag()));
            }
            for idx in 0..g.order() as usize {
                let x = g.element_at(idx);
                let here = rho.evaluate_monomial(&x);
                for nu in &lifts {
                    let there = rho.evaluate_monomial(&g.mul(&x, nu).map_err(err)?);
                    ensure(here == there, || {
                        format!("not constant on cosets at {x} for {}", tag())
                    })?;
                }
            }
            classes += 1;
        }
    }
    for p in [2u64, 3, 5] {
        let id = CycMatrix::identity(p, p as usize);
        let one = cocycle(p, &[2, 2], &[2, 2], "1,1;0,0");
        let rho = construct_inflated(&one).map_err(err)?;
        images_match(
            &rho,
            &[clock(p, 1), id.clone(), shift(p), shift(p)],
            &format!("inflated first example p={p}"),
        )?;
        let two = cocycle(p, &[2, 2], &[2, 2], "1,0;1,0");
        let rho = construct_inflated(&two).map_err(err)?;
        images_match(
            &rho,
            &[clock(p, 1), clock(p, 1), shift(p), id],
            &format!("inflated second example p={p}"),
        )?;
        if p < 5 {
            let check = rho.check_identity_exhaustive(&l).map_err(err)?;
            ensure(check.passed(), || {
                format!("identity fails on inflated example p={p}")
            })?;
        }
    }
    Ok(format!("{} groups, {classes} classes", groups.len()))
}

fn clifford_dichotomy() -> Outcome {
    let l = limits();
    let mut classes = 0;
    let groups = index_p_sweep();
    for g in &groups {
        let total = class_count(g).map_err(err)?;
        let all: Vec<u128> = (0..total).collect();
        for spec in SubgroupSpec::all_valid(g, 1) {
            let analyzer = RankAnalyzer::new(g, spec, &l).map_err(err)?;
            for a in enumerate_classes(g, &l).map_err(err)? {
                let v = analyzer.verdict(&a).map_err(err)?;
                ensure(
                    v.constituents == 1 || v.constituents == g.p() as u128,
                    || {
                        format!(
                            "{g} {spec} C=[{}]: {} constituents",
                            a.matrix(),
                            v.constituents
                        )
                    },
                )?;
            }
            let check = spot_check(g, spec, &all, &l).map_err(err)?;
            if let Some((rank, matrix)) = check.mismatches.first() {
                return Err(format!(
                    "{g} {spec}: rank verdict {} vs matrix verdict {}",
                    rank.to_json(),
                    matrix.to_json()
                ));
            }
            classes += check.checked;
        }
    }
    Ok(format!(
        "{} groups, {classes} (class, subgroup) pairs",
        groups.len()
    ))
}

fn run(id: usize, name: &str, budget: Duration, f: fn() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(detail) if elapsed > budget => Err(format!("{detail}; over budget")),
        other => other,
    };
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d.as_str()),
        Err(d) => ("FAIL", d.as_str()),
    };
    let mut lines = detail.lines();
    println!(
        "{tag} [{id}] {name}: {} ({:.1}s / {}s)",
        lines.next().unwrap_or(""),
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    for line in lines {
        println!("      {line}");
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "regular set from the kernel of A equals the brute-force set",
            BUDGET_REGULAR,
            regular_sets_agree,
        ),
        (
            "general construction: identity, dimension, irreducibility",
            BUDGET_CONSTRUCT,
            constructions_verified,
        ),
        (
            "rank counts: closed form equals enumeration",
            BUDGET_RANK_COUNT,
            rank_counts,
        ),
        (
            "index-p census: forms X and Y",
            BUDGET_INDEX_P,
            index_p_census,
        ),
        (
            "index-p^2 census: forms A, B and C at p = 2",
            BUDGET_INDEX_P2,
            index_p2_census,
        ),
        (
            "worked examples are reproduced exactly",
            BUDGET_EXAMPLES,
            worked_examples,
        ),
        (
            "tensor and general constructions agree",
            BUDGET_TENSOR,
            tensor_coherence,
        ),
        (
            "inflation from the elementary quotient",
            BUDGET_INFLATE,
            inflation,
        ),
        (
            "restriction to index p: one or p constituents, rank and matrix verdicts agree",
            BUDGET_CLIFFORD,
            clifford_dichotomy,
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        if !run(i + 1, name, budget, f) {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
