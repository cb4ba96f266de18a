use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use cyclefree::boards::{make_spec, BoardSpec, Square};
use cyclefree::builders::{
    delta_mn, directed_matching, filtration_level, omega, sym, theta, theta1, theta2, Family,
};
use cyclefree::complexes::{link, SimplicialComplex, Vertex};
use cyclefree::homology::{homology, unreduced_homology, Coefficients};
use cyclefree::io::{read_facets, write_facets};
use cyclefree::verify::{run_claims, Status, NOT_REPRODUCIBLE};

#[derive(Parser)]
#[command(
    name = "cyclefree",
    version,
    about = "Chessboard and cycle-free complexes and their homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Delta,
    Omega,
    Dm,
    Theta,
    Theta1,
    Theta2,
    Fp,
    Sym,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Ambient {
    /// All rook placements, loops counting as cycles.
    I,
    /// Directed matchings without loops.
    Ii,
}

#[derive(Subcommand)]
enum Command {
    /// Build a complex and write it as a facet file.
    Build {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Board size; the parameter of Sym for `sym`.
        #[arg(long)]
        n: usize,
        /// Extra rows (omega) or columns (delta, default n).
        #[arg(long)]
        m: Option<usize>,
        /// Extra columns (omega).
        #[arg(long)]
        p: Option<usize>,
        /// Cycle budget of the filtration level (fp).
        #[arg(long)]
        cycles: Option<usize>,
        /// Ambient complex of the filtration (fp).
        #[arg(long, value_enum, default_value = "i")]
        ambient: Ambient,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the homology of a facet file.
    Homology {
        #[arg(long = "in")]
        input: PathBuf,
        /// Work over the prime field F_P instead of the integers.
        #[arg(long = "mod")]
        modulus: Option<u32>,
        #[arg(long)]
        max_dim: Option<isize>,
        #[arg(long)]
        unreduced: bool,
    },
    /// Print the f-vector of a facet file.
    Fvector {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print the link of a vertex as a facet file.
    Link {
        #[arg(long = "in")]
        input: PathBuf,
        /// Vertex as ROW,COL.
        #[arg(long, allow_hyphen_values = true)]
        vertex: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the claim catalog.
    Verify {
        #[arg(long = "claim")]
        claims: Vec<String>,
        #[arg(long)]
        long: bool,
        #[arg(long)]
        json: bool,
    },
}

fn load(path: &PathBuf) -> Result<cyclefree::io::FacetFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(read_facets(&text)?)
}

fn build(
    family: FamilyArg,
    n: usize,
    m: Option<usize>,
    p: Option<usize>,
    cycles: Option<usize>,
    ambient: Ambient,
) -> Result<(SimplicialComplex, Option<BoardSpec>)> {
    let omega_spec = || make_spec(n, m.unwrap_or(0), p.unwrap_or(0));
    Ok(match family {
        FamilyArg::Delta => {
            let cx = delta_mn(n, m.unwrap_or(n));
            let board = (1..=n as i32)
                .flat_map(|r| (1..=m.unwrap_or(n) as i32).map(move |c| Square::new(r, c)));
            (cx, Some(BoardSpec::unrestricted(board)))
        }
        FamilyArg::Omega => {
            let spec = omega_spec();
            (omega(&spec), Some(spec))
        }
        FamilyArg::Theta => (theta(n), Some(make_spec(n, 0, 0))),
        FamilyArg::Theta1 => (theta1(n), Some(make_spec(n, 0, 0))),
        FamilyArg::Theta2 => (theta2(n), Some(make_spec(n, 0, 0))),
        FamilyArg::Dm => (directed_matching(n), None),
        FamilyArg::Fp => {
            let Some(c) = cycles else {
                bail!("--family fp needs --cycles");
            };
            let family = match ambient {
                Ambient::I => Family::Delta,
                Ambient::Ii => Family::DirectedMatching,
            };
            (filtration_level(family, n, c), None)
        }
        FamilyArg::Sym => {
            if n == 0 {
                bail!("--family sym needs --n ≥ 1");
            }
            (sym(n), None)
        }
    })
}

fn parse_vertex(s: &str) -> Result<Vertex> {
    let (r, c) = s
        .split_once(',')
        .with_context(|| format!("`{s}` is not ROW,COL"))?;
    Ok(Vertex::square(r.trim().parse()?, c.trim().parse()?))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build {
            family,
            n,
            m,
            p,
            cycles,
            ambient,
            out,
        } => {
            let (cx, spec) = build(family, n, m, p, cycles, ambient)?;
            fs::write(&out, write_facets(&cx, spec.as_ref())?)
                .with_context(|| format!("writing {}", out.display()))?;
        }
        Command::Homology {
            input,
            modulus,
            max_dim,
            unreduced,
        } => {
            let cx = load(&input)?.complex;
            let coefficients = modulus.map_or(Coefficients::Integers, Coefficients::Prime);
            let top = max_dim.unwrap_or(cx.dim().unwrap_or(-1));
            let r = if unreduced {
                unreduced_homology(&cx, ..=top, coefficients)?
            } else {
                homology(&cx, ..=top, coefficients)?
            };
            let name = if unreduced { "H" } else { "H~" };
            for (k, g) in r.iter() {
                match coefficients {
                    Coefficients::Integers => println!("{name}_{k} = {g}"),
                    Coefficients::Prime(p) => println!("{name}_{k} = (F_{p})^{}", g.rank()),
                }
            }
        }
        Command::Fvector { input } => {
            let f = load(&input)?.complex.f_vector();
            let parts: Vec<String> = f.iter().map(usize::to_string).collect();
            println!("({})", parts.join(", "));
        }
        Command::Link { input, vertex, out } => {
            let file = load(&input)?;
            let v = parse_vertex(&vertex)?;
            let lk = link(&file.complex, v)?;
            let spec = match (&file.spec, v.as_square()) {
                (Some(s), Some(sq)) => Some(s.reduced(sq)?),
                _ => None,
            };
            let text = write_facets(&lk, spec.as_ref())?;
            match out {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => print!("{text}"),
            }
        }
        Command::Verify { claims, long, json } => {
            let reports = run_claims(&claims, long)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    let tag = match r.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::SkippedLong => "SKIP",
                    };
                    println!("{tag} {:<22} {:>8} ms  {}", r.id, r.ms, r.computed);
                    if r.status == Status::Fail {
                        println!("     expected: {}", r.expected);
                    }
                }
                println!("not checked at this scale:");
                for note in NOT_REPRODUCIBLE {
                    println!("  - {note}");
                }
            }
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
