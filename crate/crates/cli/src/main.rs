use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use projrep::census::{spot_check, spot_check_indices, CensusComparison, RankAnalyzer};
use projrep::cocycle::class_count;
use projrep::construct::dim_matches_rank;
use projrep::{
    classify_all, construct_general, construct_inflated, construct_tensor, count_rank_enumerate,
    count_rank_formula, expected_counts, restrict_rep, BilinearCocycle, Limits, ProjRep,
    SubgroupSpec, SCHEMA,
};
use serde_json::{json, Value};

const DEFAULT_SEED: u64 = 0x5eed;
const SAMPLED_PAIRS: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "projrep",
    version,
    about = "Projective representations of abelian p-groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the representation attached to a cocycle class.
    Construct {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value = "general")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        out: Out,
    },
    /// Check the cocycle identity, irreducibility and dimension of a representation.
    Verify {
        #[command(flatten)]
        class: OptionalClassArgs,
        /// Representation JSON written by `construct`; replaces -g/-c.
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "general")]
        method: Method,
        /// Largest group order checked on all pairs; larger groups are sampled.
        #[arg(long, default_value_t = 4096)]
        cap: u128,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        out: Out,
    },
    /// Generators of the subgroup of regular elements and its index.
    Regular {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value = "json")]
        out: Out,
    },
    /// Restrict the representation to a canonical subgroup.
    Restrict {
        #[command(flatten)]
        class: ClassArgs,
        /// Subgroup form: X<i>, Y<j>, A<i>,<j>, B<i> or C<i>,<j>.
        #[arg(short = 'f', long)]
        form: String,
        #[arg(long, value_enum, default_value = "inflate")]
        method: Method,
        #[arg(long, value_enum, default_value = "json")]
        out: Out,
    },
    /// Classify every class by restriction type and compare with the closed forms.
    Census {
        #[arg(short = 'g', long)]
        group: String,
        #[arg(short = 'f', long)]
        form: String,
        /// Largest number of classes enumerated.
        #[arg(long, default_value_t = 1_000_000)]
        cap: u128,
        /// Classes rebuilt as matrices and restricted, as a cross-check.
        #[arg(long, default_value_t = 64)]
        spot_checks: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        out: Out,
    },
    /// Number of m x n matrices over Z/p of rank r.
    CountRank {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'r')]
        r: usize,
        /// Largest number of matrices enumerated.
        #[arg(long, default_value_t = 10_000_000)]
        cap: u128,
        #[arg(long, value_enum, default_value = "pretty")]
        out: Out,
    },
}

#[derive(Args)]
struct ClassArgs {
    /// Group descriptor, e.g. "p=2;r=2,2;s=1,1".
    #[arg(short = 'g', long)]
    group: String,
    /// Cocycle matrix C, rows separated by ';', e.g. "1,1;0,0".
    #[arg(short = 'c', long)]
    cocycle: String,
}

#[derive(Args)]
struct OptionalClassArgs {
    #[arg(short = 'g', long)]
    group: Option<String>,
    #[arg(short = 'c', long)]
    cocycle: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    General,
    Tensor,
    Inflate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Csv,
    Pretty,
}

enum Failure {
    Usage(String),
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = std::result::Result<(), Failure>;

fn class(args: &ClassArgs) -> Result<BilinearCocycle, Failure> {
    Ok(BilinearCocycle::parse(&args.group, &args.cocycle)?)
}

fn build(alpha: &BilinearCocycle, method: Method) -> Result<ProjRep, Failure> {
    Ok(match method {
        Method::General => construct_general(alpha)?,
        Method::Tensor => construct_tensor(alpha)?,
        Method::Inflate => construct_inflated(alpha)?,
    })
}

fn no_csv(out: Out) -> Run {
    if out == Out::Csv {
        return Err(Failure::Usage(
            "csv output is only available for census and count-rank".into(),
        ));
    }
    Ok(())
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn checked(ok: bool) -> Run {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn construct(class_args: &ClassArgs, method: Method, out: Out) -> Run {
    no_csv(out)?;
    let rho = build(&class(class_args)?, method)?;
    if out == Out::Json {
        print_json(&rho.to_json());
    } else {
        println!(
            "group {}  cocycle [{}]  dim {}",
            rho.group(),
            rho.cocycle().matrix(),
            rho.dim()
        );
        for (name, m) in rho.group().generator_names().iter().zip(rho.images()) {
            println!("{name}:\n{m}");
        }
    }
    Ok(())
}

fn verify(rho: &ProjRep, cap: u128, seed: u64, out: Out) -> Run {
    no_csv(out)?;
    let check = if rho.group().order() <= cap {
        let limits = Limits {
            max_elements: cap,
            ..Limits::default()
        };
        rho.check_identity_exhaustive(&limits)?
    } else {
        rho.check_identity_sampled(SAMPLED_PAIRS, seed)?
    };
    let commutant = rho.commutant_dimension()?;
    let dims = dim_matches_rank(rho);
    let ok = check.passed() && commutant == 1 && dims;
    if out == Out::Json {
        print_json(&json!({
            "schema": SCHEMA,
            "group": rho.group().to_string(),
            "cocycle": rho.cocycle().matrix().to_string(),
            "dim": rho.dim(),
            "cocycle_identity": check.passed(),
            "exhaustive": check.exhaustive,
            "pairs_checked": check.pairs_checked.to_string(),
            "failure": check.failure.as_ref().map(|(g, h)| vec![g.to_string(), h.to_string()]),
            "commutant_dim": commutant,
            "dim_matches_rank": dims,
        }));
    } else {
        let mode = if check.exhaustive { "all" } else { "sampled" };
        println!(
            "cocycle identity: {} ({} {mode} pairs)",
            check.passed(),
            check.pairs_checked
        );
        if let Some((g, h)) = &check.failure {
            println!("  fails at g = {g}, h = {h}");
        }
        println!("commutant dimension: {commutant}");
        println!("dimension matches rank: {dims}");
    }
    checked(ok)
}

fn regular(class_args: &ClassArgs, out: Out) -> Run {
    no_csv(out)?;
    let alpha = class(class_args)?;
    let set = alpha.regular_elements();
    let gens: Vec<String> = set.generators.iter().map(ToString::to_string).collect();
    let index = (alpha.p() as u128)
        .checked_pow(set.index_exponent as u32)
        .ok_or_else(|| Failure::Usage("index overflows".into()))?;
    if out == Out::Json {
        print_json(&json!({
            "schema": SCHEMA,
            "group": alpha.group().to_string(),
            "cocycle": alpha.matrix().to_string(),
            "generators": gens,
            "index_exponent": set.index_exponent,
            "index": index.to_string(),
        }));
    } else {
        println!("G0 = <{}>", gens.join(", "));
        println!("|G/G0| = {}^{} = {index}", alpha.p(), set.index_exponent);
    }
    Ok(())
}

fn restrict(class_args: &ClassArgs, form: &str, method: Method, out: Out) -> Run {
    no_csv(out)?;
    let alpha = class(class_args)?;
    let spec: SubgroupSpec = form.parse()?;
    let by_matrix = restrict_rep(&build(&alpha, method)?, spec)?;
    let by_rank = RankAnalyzer::new(alpha.group(), spec, &Limits::default())?.verdict(&alpha)?;
    let agree = by_matrix == by_rank;
    if out == Out::Json {
        let mut v = by_matrix.to_json();
        v["rank_path_agrees"] = json!(agree);
        print_json(&v);
    } else {
        let v = &by_matrix;
        println!("form {}  class [{}]", v.spec, v.class_matrix);
        println!(
            "rank on G: {}  rank on H: {}",
            v.ambient_rank, v.restricted_rank
        );
        println!(
            "dim {}  constituents {}  multiplicity {}",
            v.ambient_dim, v.constituents, v.multiplicity
        );
        println!(
            "commutant dimension {}  category {}",
            v.commutant_dim, v.category
        );
        println!("rank path agrees: {agree}");
    }
    checked(agree)
}

fn census(group: &str, form: &str, cap: u128, spot_checks: usize, seed: u64, out: Out) -> Run {
    let group = group.parse()?;
    let spec: SubgroupSpec = form.parse()?;
    let limits = Limits {
        max_classes: cap,
        ..Limits::default()
    };
    let expected = expected_counts(&group, spec)?;
    let observed = classify_all(&group, spec, &limits)?;
    let cmp = CensusComparison::new(&expected, &observed);
    let indices = spot_check_indices(class_count(&group)?, spot_checks as u128, spot_checks, seed);
    let spot = spot_check(&group, spec, &indices, &limits)?;
    match out {
        Out::Csv => print!("{}", cmp.to_csv()),
        Out::Json => {
            let mut v = cmp.to_json();
            v["spot_checks"] = json!({
                "seed": seed,
                "checked": spot.checked,
                "mismatches": spot.mismatches.iter().map(|(r, m)| json!({"rank": r.to_json(), "matrix": m.to_json()})).collect::<Vec<_>>(),
            });
            print_json(&v);
        }
        Out::Pretty => {
            println!("{} {}", cmp.group, cmp.spec);
            println!(
                "{:<12} {:>3} {:>12} {:>12}  match",
                "category", "n", "expected", "observed"
            );
            for r in &cmp.rows {
                let mark = if r.matches() { "yes" } else { "NO" };
                println!(
                    "{:<12} {:>3} {:>12} {:>12}  {mark}",
                    r.category.as_str(),
                    r.n,
                    r.expected,
                    r.observed
                );
            }
            println!(
                "total {} expected, {} observed",
                cmp.expected_total(),
                cmp.observed_total()
            );
            println!(
                "spot checks: {} classes, {} mismatches",
                spot.checked,
                spot.mismatches.len()
            );
        }
    }
    if !cmp.matches() && out != Out::Json {
        eprintln!("{}", cmp.report());
    }
    checked(cmp.matches() && spot.passed())
}

fn count_rank(p: u64, m: usize, n: usize, r: usize, cap: u128, out: Out) -> Run {
    let formula = count_rank_formula(p, m, n, r)?;
    let total = (p as u128).checked_pow((m * n) as u32);
    // enumeration is skipped, not refused, above the cap
    let enumeration = match total {
        Some(t) if t <= cap => {
            let limits = Limits {
                max_matrices: cap,
                ..Limits::default()
            };
            Some(count_rank_enumerate(p, m, n, r, &limits)?)
        }
        _ => None,
    };
    let shown = enumeration.map_or("skipped".to_string(), |e| e.to_string());
    match out {
        Out::Json => print_json(&json!({
            "schema": SCHEMA,
            "p": p, "m": m, "n": n, "r": r,
            "formula": formula.to_string(),
            "enumeration": enumeration.map(|e| e.to_string()),
        })),
        Out::Csv => println!("p,m,n,r,formula,enumeration\n{p},{m},{n},{r},{formula},{shown}"),
        Out::Pretty => println!("formula={formula} enumeration={shown}"),
    }
    checked(enumeration.is_none_or(|e| e == formula))
}

fn load_rep(path: &PathBuf) -> Result<ProjRep, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)?;
    Ok(ProjRep::from_json(&v)?)
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Construct { class, method, out } => construct(&class, method, out),
        Command::Verify {
            class,
            rep,
            method,
            cap,
            seed,
            out,
        } => {
            let rho = match (rep, class.group, class.cocycle) {
                (Some(path), None, None) => load_rep(&path)?,
                (None, Some(group), Some(cocycle)) => {
                    build(&BilinearCocycle::parse(&group, &cocycle)?, method)?
                }
                _ => return Err(Failure::Usage("give either --rep or both -g and -c".into())),
            };
            verify(&rho, cap, seed, out)
        }
        Command::Regular { class, out } => regular(&class, out),
        Command::Restrict {
            class,
            form,
            method,
            out,
        } => restrict(&class, &form, method, out),
        Command::Census {
            group,
            form,
            cap,
            spot_checks,
            seed,
            out,
        } => census(&group, &form, cap, spot_checks, seed, out),
        Command::CountRank {
            p,
            m,
            n,
            r,
            cap,
            out,
        } => count_rank(p, m, n, r, cap, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
