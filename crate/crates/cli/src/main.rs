use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use liecp::borel::{borel_report, spectral_matrix};
use liecp::charpoly::{expand_small, linearize_with_cap, product_on_charpoly_with_cap, DEFAULT_DEGREE_CAP};
use liecp::oracle::{
    det_pencil, random_unimodular, sl2_matrices, transform_pencil, verify_base_change, DEFAULT_PENCIL_CAP,
};
use liecp::reconstruct::decompose;
use liecp::rootsys::{Family, RootClass, RootSystem, Weight, DEFAULT_MAX_CLASSICAL_RANK};
use liecp::selftest::{run_all, DEFAULT_SEED};
use liecp::sl2embed::{embed_charpoly, embed_report, irrep_closed_form, render_json, render_markdown, published_audit};
use liecp::weights::DEFAULT_DIM_CAP;
use liecp::{CharPoly, Decomposition, Error, LinearFactors};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exact multiparameter characteristic polynomials of simple Lie algebra representations.
#[derive(Parser)]
#[command(name = "liecp", version)]
struct Cli {
    /// Refuse irreducibles whose dimension exceeds this.
    #[arg(long, global = true, env = "LIECP_DIM_CAP", default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: u64,
    /// Largest accepted rank for the classical families.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLASSICAL_RANK)]
    max_rank: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArgs {
    /// Family letter: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Dump simple roots, positive roots and the Cartan matrix as JSON.
    Rootsys(TypeArgs),
    /// Characteristic polynomial of a representation given by highest weights.
    Charpoly {
        #[command(flatten)]
        ty: TypeArgs,
        /// Highest weight in fundamental coordinates, e.g. 1,0; repeat for a direct sum.
        #[arg(long = "highest", required = true, allow_hyphen_values = true)]
        highest: Vec<Weight>,
        /// Also print the expanded polynomial in z0..zn.
        #[arg(long)]
        expand: bool,
    },
    /// Linear factors (weights) of a representation.
    Linearize {
        #[command(flatten)]
        ty: TypeArgs,
        /// Highest weight; repeat for a direct sum.
        #[arg(long = "highest", allow_hyphen_values = true, conflicts_with = "input", required_unless_present = "input")]
        highest: Vec<Weight>,
        /// CharPoly JSON file, or - for standard input.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Recover the decomposition from a linear-factor JSON file.
    Decompose {
        #[command(flatten)]
        ty: TypeArgs,
        /// LinearFactors JSON file, or - for standard input.
        #[arg(long)]
        input: PathBuf,
    },
    /// Tensor product of two irreducibles via the resolution product.
    Product {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        left: Weight,
        #[arg(long, allow_hyphen_values = true)]
        right: Weight,
    },
    /// Audit of the published root sl(2) eigenvalue table.
    Sl2Table {
        #[arg(long, conflicts_with = "markdown")]
        json: bool,
        #[arg(long)]
        markdown: bool,
    },
    /// Eigenvalue counts and polynomial of one root sl(2).
    Sl2Embed {
        #[command(flatten)]
        ty: TypeArgs,
        /// long (alpha) or short (gamma).
        #[arg(long)]
        class: RootClass,
    },
    /// Spectral rank of the Borel subalgebra.
    Borel {
        #[command(flatten)]
        ty: TypeArgs,
        /// Print the spectral matrix as JSON instead.
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Compare the sl(2) determinant on V(m) with its closed form.
    VerifySl2 {
        #[arg(long)]
        m: usize,
    },
    /// Check the determinant transforms correctly under a random base change.
    VerifyBasechange {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Either a computed failure (exit 1) or a library error (exit 1).
enum Failure {
    Error(Error),
    Message(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn read_input(path: &PathBuf) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| text)
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Failure::Message(format!("cannot read {}: {e}", path.display())))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data")
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(cli: Cli) -> Outcome {
    let build = |t: &TypeArgs| RootSystem::build_with_rank_cap(t.family, t.rank, cli.max_rank);
    let decomposition = |rs: &RootSystem, ws: &[Weight]| -> liecp::Result<Decomposition> {
        let mut d = Decomposition::new(rs.tag());
        for w in ws {
            d.insert(w.clone(), 1)?;
        }
        Ok(d)
    };
    match &cli.command {
        Command::Rootsys(t) => println!("{}", json(&build(t)?.dump())),
        Command::Charpoly { ty, highest, expand } => {
            let rs = build(ty)?;
            let f = CharPoly::new(decomposition(&rs, highest)?);
            println!("{}", f.to_json());
            if *expand {
                let factors = linearize_with_cap(&rs, &f, cli.dim_cap)?;
                println!("{}", expand_small(&factors, DEFAULT_DEGREE_CAP)?);
            }
        }
        Command::Linearize { ty, highest, input } => {
            let rs = build(ty)?;
            let f = match input {
                Some(path) => CharPoly::from_json(rs.tag(), &read_input(path)?)?,
                None => CharPoly::new(decomposition(&rs, highest)?),
            };
            println!("{}", linearize_with_cap(&rs, &f, cli.dim_cap)?.to_json());
        }
        Command::Decompose { ty, input } => {
            let rs = build(ty)?;
            let factors = LinearFactors::from_json(rs.tag(), &read_input(input)?)?;
            println!("{}", CharPoly::new(decompose(&rs, factors.as_multiset())?).to_json());
        }
        Command::Product { ty, left, right } => {
            let rs = build(ty)?;
            let f = CharPoly::irreducible(rs.tag(), left.clone())?;
            let g = CharPoly::irreducible(rs.tag(), right.clone())?;
            println!("{}", product_on_charpoly_with_cap(&rs, &f, &g, cli.dim_cap)?.to_json());
        }
        Command::Sl2Table { markdown, .. } => {
            let reports = published_audit()?;
            if *markdown {
                print!("{}", render_markdown(&reports));
            } else {
                print!("{}", render_json(&reports));
            }
        }
        Command::Sl2Embed { ty, class } => {
            let report = embed_report(&build(ty)?, *class)?;
            let text = embed_charpoly(&report).to_text();
            println!("{}", json(&serde_json::json!({ "report": report, "charpoly": text })));
        }
        Command::Borel { ty, dump_matrix } => {
            let rs = build(ty)?;
            if *dump_matrix {
                println!("{}", json(&spectral_matrix(&rs)));
                return Ok(true);
            }
            let report = borel_report(&rs);
            println!("s = {}", report.s);
            println!("n = {}", report.n);
            println!("{}", report.summary());
            return Ok(report.pass);
        }
        Command::VerifySl2 { m } => {
            let oracle = det_pencil(&sl2_matrices(*m))?;
            let closed = irrep_closed_form(*m as u64);
            println!("oracle:      {oracle}");
            println!("closed form: {closed}");
            println!("{}", pass_fail(oracle == closed));
            return Ok(oracle == closed);
        }
        Command::VerifyBasechange { m, seed, trials } => {
            if m + 1 > DEFAULT_PENCIL_CAP {
                return Err(Error::SizeCapExceeded { size: m + 1, cap: DEFAULT_PENCIL_CAP }.into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut all = true;
            for _ in 0..*trials {
                let b = random_unimodular(3, &mut rng);
                let ok = verify_base_change(&sl2_matrices(*m), &b)?;
                let transformed = det_pencil(&transform_pencil(&sl2_matrices(*m), &b)?)?;
                println!("B = {}", serde_json::to_string(&b).expect("plain data"));
                println!("transformed: {transformed}");
                println!("{}", pass_fail(ok));
                all &= ok;
            }
            return Ok(all);
        }
        Command::Selftest { seed } => {
            let results = run_all(*seed);
            for r in &results {
                println!("{}", r.line());
            }
            let failed = results.iter().filter(|r| !r.pass).count();
            println!("{} of {} criteria passed", results.len() - failed, results.len());
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Message(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
