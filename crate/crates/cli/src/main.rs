//! `polyfew`: bounds tables, witnesses, census runs and polytope utilities.
//!
//! Exit codes: 0 success, 1 a check failed, 2 invalid input or arguments.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use polyfew_core::census::{Census, CensusCache, CACHE_ENV};
use polyfew_core::json::PolytopeDoc;
use polyfew_core::{
    canonical_key, crude_k_log2, d_bracket, face_lattice, from_json, marcus_limit, polar,
    strip_core, to_json, verify_witness, witness, Error, IncidencePolytope,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "polyfew",
    version,
    about = "Polytopes with few vertices and few facets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Engine {
    /// Census cache directory.
    #[arg(long, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket and crude bound table.
    Bounds {
        #[arg(long)]
        alpha_max: u32,
        #[arg(long)]
        beta_max: u32,
        #[arg(long)]
        csv: bool,
    },
    /// Witness polytope for (A, B) as JSON.
    Witness {
        alpha: u32,
        beta: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks every witness in the grid 1..=A x 1..=B.
    VerifyWitness {
        #[arg(long, default_value_t = 12)]
        alpha_max: u32,
        #[arg(long, default_value_t = 12)]
        beta_max: u32,
    },
    /// Census records as JSON lines.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        alpha: u8,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        beta_cap: Option<usize>,
        #[command(flatten)]
        engine: Engine,
    },
    /// Largest dimension of a non-pyramid with d+3 vertices and d+1+beta facets.
    ComputeD {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        beta_max: u32,
        #[command(flatten)]
        engine: Engine,
    },
    /// Largest dimension of an unneighborly polytope with d+alpha+1 vertices.
    MarcusScan {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        alpha: u8,
        #[arg(long)]
        dmax: usize,
        #[command(flatten)]
        engine: Engine,
    },
    /// Number of types with at most d+1+alpha vertices and d+1+beta facets.
    Count {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        #[command(flatten)]
        engine: Engine,
    },
    /// Strips apexes; prints the apex count and the core.
    Strip { file: PathBuf },
    /// Polar polytope as JSON.
    Polar { file: PathBuf },
    /// Face lattice summary.
    Lattice { file: PathBuf },
    /// Prints whether two polytopes are combinatorially equivalent.
    Isomorphic { first: PathBuf, second: PathBuf },
}

enum Fail {
    Usage(String),
    Check(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_) | Error::LatticeNotGraded(_) => Fail::Check(e.to_string()),
            _ => Fail::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Fail>;

fn usage(e: impl std::fmt::Display) -> Fail {
    Fail::Usage(e.to_string())
}

fn read_polytope(path: &Path) -> Result<IncidencePolytope, Fail> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string(value).expect("plain data serializes")
    );
}

impl Engine {
    fn run<T: Send>(&self, f: impl FnOnce(&Census) -> T + Send) -> Result<T, Fail> {
        let census = match &self.cache {
            Some(dir) => Census::with_cache(CensusCache::open(dir)?),
            None => Census::new(),
        };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.into())
            .build()
            .map_err(usage)?;
        Ok(pool.install(|| f(&census)))
    }
}

fn bounds(alpha_max: u32, beta_max: u32, csv: bool) -> Outcome {
    let mut out = String::new();
    if csv {
        out.push_str("alpha,beta,lower,upper,crude_k_log2\n");
    } else {
        out.push_str(&format!(
            "{:>5} {:>5} {:>6} {:>6} {:>13}\n",
            "alpha", "beta", "lower", "upper", "crude_k_log2"
        ));
    }
    for a in 0..=alpha_max {
        for b in 0..=beta_max {
            let br = d_bracket(a, b);
            let k = crude_k_log2(a, b);
            if csv {
                writeln!(out, "{a},{b},{},{},{k}", br.lower, br.upper).unwrap();
            } else {
                writeln!(out, "{a:>5} {b:>5} {:>6} {:>6} {k:>13}", br.lower, br.upper).unwrap();
            }
        }
    }
    print!("{out}");
    Ok(())
}

fn verify_grid(alpha_max: u32, beta_max: u32) -> Outcome {
    println!("alpha,beta,dim,vertices,facets,pyramid,matches");
    let mut failures = 0;
    for a in 1..=alpha_max {
        for b in 1..=beta_max {
            let r = verify_witness(a, b)?;
            println!(
                "{a},{b},{},{},{},{},{}",
                r.dim, r.num_vertices, r.num_facets, r.is_pyramid, r.matches
            );
            failures += usize::from(!r.matches);
        }
    }
    let total = alpha_max as usize * beta_max as usize;
    eprintln!("{} of {total} witnesses match", total - failures);
    if failures > 0 {
        return Err(Fail::Check(format!("{failures} witnesses do not match")));
    }
    Ok(())
}

fn compute_d(beta_max: u32, engine: &Engine) -> Outcome {
    let rows = engine.run(|c| {
        (2..=beta_max as usize)
            .map(|b| c.compute_d2(b, None).map(|d| (b, d)))
            .collect::<Result<Vec<_>, _>>()
    })??;
    let mut bad = Vec::new();
    for (b, d) in rows {
        println!("{b},{d}");
        let br = d_bracket(2, b as u32);
        if (d as u64) < br.lower || d as u64 > br.upper {
            bad.push(format!(
                "D(2,{b}) = {d} outside [{}, {}]",
                br.lower, br.upper
            ));
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Fail::Check(bad.join("; ")))
    }
}

fn marcus(alpha: u8, dmax: usize, engine: &Engine) -> Outcome {
    let d = engine.run(|c| c.marcus_scan(alpha.into(), dmax))??;
    println!("{d}");
    let limit = marcus_limit(alpha.into())?;
    if d as u64 > limit {
        return Err(Fail::Check(format!(
            "unneighborly polytope in dimension {d} exceeds the limit {limit}"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct StripDoc {
    apex_count: usize,
    core: PolytopeDoc,
}

#[derive(Serialize)]
struct LatticeDoc {
    dim: usize,
    rank: usize,
    faces: usize,
    rank_counts: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Bounds {
            alpha_max,
            beta_max,
            csv,
        } => bounds(alpha_max, beta_max, csv),
        Command::Witness { alpha, beta, out } => {
            let text = to_json(&witness(alpha, beta)?);
            match out {
                Some(path) => fs::write(&path, text + "\n")
                    .map_err(|e| usage(format!("{}: {e}", path.display()))),
                None => {
                    println!("{text}");
                    Ok(())
                }
            }
        }
        Command::VerifyWitness {
            alpha_max,
            beta_max,
        } => verify_grid(alpha_max, beta_max),
        Command::Enumerate {
            alpha,
            dim,
            beta_cap,
            engine,
        } => {
            let records = engine.run(|c| c.census(alpha.into(), dim, beta_cap))??;
            let mut out = String::new();
            for r in &records {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
            print!("{out}");
            eprintln!("{} records", records.len());
            Ok(())
        }
        Command::ComputeD { beta_max, engine } => compute_d(beta_max, &engine),
        Command::MarcusScan {
            alpha,
            dmax,
            engine,
        } => marcus(alpha, dmax, &engine),
        Command::Count {
            dim,
            alpha,
            beta,
            engine,
        } => {
            let n = engine.run(|c| c.count_types(dim, alpha, beta))??;
            println!("{n}");
            Ok(())
        }
        Command::Strip { file } => {
            let s = strip_core(&read_polytope(&file)?);
            print_json(&StripDoc {
                apex_count: s.apex_count,
                core: PolytopeDoc::from_polytope(&s.core),
            });
            Ok(())
        }
        Command::Polar { file } => {
            println!("{}", to_json(&polar(&read_polytope(&file)?)?));
            Ok(())
        }
        Command::Lattice { file } => {
            let p = read_polytope(&file)?;
            let l = face_lattice(&p)?;
            print_json(&LatticeDoc {
                dim: p.dim(),
                rank: l.rank(),
                faces: l.len(),
                rank_counts: l.rank_counts(),
                edges: l.edges(),
            });
            Ok(())
        }
        Command::Isomorphic { first, second } => {
            let same =
                canonical_key(&read_polytope(&first)?) == canonical_key(&read_polytope(&second)?);
            println!("{same}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            eprintln!(
                "polyfew: {}",
                text.lines().next().unwrap_or("invalid arguments")
            );
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Check(msg)) => {
            eprintln!("polyfew: check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("polyfew: {msg}");
            ExitCode::from(2)
        }
    }
}
