use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lexelim::algorithms::{
    color_universally_signable, max_clique_bruteforce, max_clique_c2, max_clique_c3,
    max_clique_c4, max_clique_c6, max_clique_chordal, max_clique_ehf, CliqueCertificate,
    CliqueOutcome, CliqueResult, ColoringOutcome,
};
use lexelim::configurations::{survey_configurations, ClassId, ConfigKind};
use lexelim::elimination::{elimination_ordering, EliminationCertificate, EliminationResult};
use lexelim::generators::{gen_chordal, gen_configuration, gen_random, ConfigParams, Probability};
use lexelim::graph::Graph;
use lexelim::io;

#[derive(Parser)]
#[command(
    name = "lexelim",
    version,
    about = "LexBFS elimination orderings, Truemper configuration recognition, \
             and clique/coloring algorithms for hereditary graph classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    Chordal,
    UniversallySignable,
    EvenHoleFree,
    WheelFree,
}

impl ClassArg {
    fn id(self) -> ClassId {
        match self {
            ClassArg::C1 => ClassId::C1,
            ClassArg::C2 => ClassId::C2,
            ClassArg::C3 => ClassId::C3,
            ClassArg::C4 => ClassId::C4,
            ClassArg::C5 => ClassId::C5,
            ClassArg::C6 => ClassId::C6,
            ClassArg::C7 => ClassId::C7,
            ClassArg::C8 => ClassId::C8,
            ClassArg::Chordal => ClassId::Chordal,
            ClassArg::UniversallySignable => ClassId::UniversallySignable,
            ClassArg::EvenHoleFree => ClassId::EvenHoleFree,
            ClassArg::WheelFree => ClassId::WheelFree,
        }
    }

    fn token(self) -> &'static str {
        match self {
            ClassArg::C1 => "c1",
            ClassArg::C2 => "c2",
            ClassArg::C3 => "c3",
            ClassArg::C4 => "c4",
            ClassArg::C5 => "c5",
            ClassArg::C6 => "c6",
            ClassArg::C7 => "c7",
            ClassArg::C8 => "c8",
            ClassArg::Chordal => "chordal",
            ClassArg::UniversallySignable => "universally-signable",
            ClassArg::EvenHoleFree => "even-hole-free",
            ClassArg::WheelFree => "wheel-free",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgoArg {
    Chordal,
    Ehf,
    C2,
    C3,
    C4,
    C6,
    Brute,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a LexBFS ordering and verify it against a class family
    Order {
        file: PathBuf,
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Maximum weighted clique (weights default to 1)
    Clique {
        file: PathBuf,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Verify ordering and scan structure, returning certificates for
        /// off-class inputs (c3/c4/c6)
        #[arg(long)]
        verify: bool,
    },
    /// List contained configurations and class memberships
    Recognize {
        file: PathBuf,
        /// Brute-force cap on the vertex count
        #[arg(long, default_value_t = lexelim::DEFAULT_BRUTE_CAP)]
        cap: usize,
    },
    /// Color a universally signable graph with at most max(3, omega) colors
    Color { file: PathBuf },
    /// Generate a graph and write it in the plain dialect
    ///
    /// Kinds: theta L1 L2 L3 | prism L1 L2 L3 | pyramid L1 L2 L3 |
    /// wheel RIM POS... | hole LEN | random N P | chordal N P
    /// (P is a rational like 1/2)
    Generate {
        kind: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const EXIT_INPUT_ERROR: u8 = 1;
const EXIT_CERTIFICATE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Order { file, class } => cmd_order(&file, class),
        Command::Clique { file, algo, verify } => cmd_clique(&file, algo, verify),
        Command::Recognize { file, cap } => cmd_recognize(&file, cap),
        Command::Color { file } => cmd_color(&file),
        Command::Generate {
            kind,
            params,
            seed,
            out,
        } => cmd_generate(&kind, &params, seed, out.as_deref()),
    }
}

fn load(file: &std::path::Path) -> Result<io::ParsedGraph, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    io::parse(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn join_ids(ids: &[u32]) -> String {
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn certificate_line(cert: &EliminationCertificate) -> String {
    format!(
        "CERTIFICATE i={} W={}",
        cert.position,
        join_ids(&cert.witness)
    )
}

fn cmd_order(file: &std::path::Path, class: ClassArg) -> Result<ExitCode, String> {
    let g = load(file)?.graph;
    let result = elimination_ordering(&g, class.id()).map_err(|e| e.to_string())?;
    println!("{}", join_ids(result.lexbfs_ordering().order()));
    match result {
        EliminationResult::Ordering { .. } => {
            println!("ELIMINATION OK {}", class.token());
            Ok(ExitCode::SUCCESS)
        }
        EliminationResult::Certificate { certificate, .. } => {
            println!("{}", certificate_line(&certificate));
            Ok(ExitCode::from(EXIT_CERTIFICATE))
        }
    }
}

fn print_clique(r: &CliqueResult) {
    println!("WEIGHT {}", r.weight);
    println!("CLIQUE {}", join_ids(&r.clique));
}

fn cmd_clique(file: &std::path::Path, algo: AlgoArg, verify: bool) -> Result<ExitCode, String> {
    let wg = load(file)?.into_weighted();
    let outcome = match algo {
        AlgoArg::Brute => {
            CliqueOutcome::Clique(max_clique_bruteforce(&wg).map_err(|e| e.to_string())?)
        }
        AlgoArg::Chordal => max_clique_chordal(&wg),
        AlgoArg::Ehf => max_clique_ehf(&wg),
        AlgoArg::C2 => max_clique_c2(&wg),
        AlgoArg::C3 => max_clique_c3(&wg, verify),
        AlgoArg::C4 => max_clique_c4(&wg, verify),
        AlgoArg::C6 => max_clique_c6(&wg, verify),
    };
    match outcome {
        CliqueOutcome::Clique(r) => {
            print_clique(&r);
            Ok(ExitCode::SUCCESS)
        }
        CliqueOutcome::Certificate(cert) => {
            match cert {
                CliqueCertificate::Elimination { certificate, .. } => {
                    println!("{}", certificate_line(&certificate));
                }
                CliqueCertificate::NeighborhoodNotChordal { vertex, hole } => {
                    println!("CERTIFICATE v={vertex} HOLE={}", join_ids(&hole));
                }
                CliqueCertificate::NotTwoCliques {
                    position, offender, ..
                } => {
                    println!("CERTIFICATE i={position} OFFENDER={offender}");
                }
                CliqueCertificate::NotCliqueOrStable {
                    position, witness, ..
                }
                | CliqueCertificate::NotCompleteMultipartite {
                    position, witness, ..
                } => {
                    println!("CERTIFICATE i={position} W={}", join_ids(&witness));
                }
            }
            Ok(ExitCode::from(EXIT_CERTIFICATE))
        }
    }
}

fn cmd_recognize(file: &std::path::Path, cap: usize) -> Result<ExitCode, String> {
    let g = load(file)?.graph;
    let survey = survey_configurations(&g, cap).map_err(|e| e.to_string())?;
    for kind in ConfigKind::ALL {
        if let Some(w) = survey.get(&kind) {
            println!("{} {}", kind.name(), join_ids(&w.vertices));
        }
    }
    let classes: Vec<&str> = [
        ClassId::C1,
        ClassId::C2,
        ClassId::C3,
        ClassId::C4,
        ClassId::C5,
        ClassId::C6,
        ClassId::C7,
        ClassId::C8,
        ClassId::OddSignable,
        ClassId::EvenSignable,
    ]
    .into_iter()
    .filter(|c| c.forbidden().iter().all(|k| !survey.contains_key(k)))
    .map(ClassId::name)
    .collect();
    println!("CLASSES: {}", classes.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn cmd_color(file: &std::path::Path) -> Result<ExitCode, String> {
    let g = load(file)?.graph;
    match color_universally_signable(&g) {
        ColoringOutcome::Coloring(c) => {
            println!("COLORS {}", c.count());
            println!(
                "ASSIGNMENT {}",
                c.colors()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            Ok(ExitCode::SUCCESS)
        }
        ColoringOutcome::Certificate(cert) => {
            println!("{}", certificate_line(&cert));
            Ok(ExitCode::from(EXIT_CERTIFICATE))
        }
    }
}

fn parse_probability(token: &str) -> Result<Probability, String> {
    let (num, den) = match token.split_once('/') {
        Some((a, b)) => (
            a.parse::<u32>()
                .map_err(|e| format!("bad probability `{token}`: {e}"))?,
            b.parse::<u32>()
                .map_err(|e| format!("bad probability `{token}`: {e}"))?,
        ),
        None => (
            token
                .parse::<u32>()
                .map_err(|e| format!("bad probability `{token}`: {e}"))?,
            1,
        ),
    };
    Probability::new(num, den).map_err(|e| e.to_string())
}

fn parse_usize(token: &str, what: &str) -> Result<usize, String> {
    token
        .parse::<usize>()
        .map_err(|e| format!("bad {what} `{token}`: {e}"))
}

fn lengths3(params: &[String], kind: &str) -> Result<[usize; 3], String> {
    if params.len() != 3 {
        return Err(format!("{kind} takes exactly three path lengths"));
    }
    Ok([
        parse_usize(&params[0], "length")?,
        parse_usize(&params[1], "length")?,
        parse_usize(&params[2], "length")?,
    ])
}

fn cmd_generate(
    kind: &str,
    params: &[String],
    seed: u64,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    let graph: Graph = match kind {
        "theta" => {
            let lengths = lengths3(params, "theta")?;
            gen_configuration(&ConfigParams::Theta { lengths })
                .map_err(|e| e.to_string())?
                .0
        }
        "prism" => {
            let lengths = lengths3(params, "prism")?;
            gen_configuration(&ConfigParams::Prism { lengths })
                .map_err(|e| e.to_string())?
                .0
        }
        "pyramid" => {
            let lengths = lengths3(params, "pyramid")?;
            gen_configuration(&ConfigParams::Pyramid { lengths })
                .map_err(|e| e.to_string())?
                .0
        }
        "wheel" => {
            if params.len() < 4 {
                return Err("wheel takes a rim length and at least three spoke positions".into());
            }
            let rim = parse_usize(&params[0], "rim length")?;
            let spokes = params[1..]
                .iter()
                .map(|p| parse_usize(p, "spoke position"))
                .collect::<Result<Vec<_>, _>>()?;
            gen_configuration(&ConfigParams::Wheel { rim, spokes })
                .map_err(|e| e.to_string())?
                .0
        }
        "hole" => {
            if params.len() != 1 {
                return Err("hole takes one length".into());
            }
            let len = parse_usize(&params[0], "length")?;
            if len < 4 {
                return Err("holes have length at least 4".into());
            }
            let edges: Vec<(u32, u32)> =
                (0..len as u32).map(|i| (i, (i + 1) % len as u32)).collect();
            Graph::new(len, &edges).map_err(|e| e.to_string())?
        }
        "random" | "chordal" => {
            if params.len() != 2 {
                return Err(format!("{kind} takes a vertex count and a probability"));
            }
            let n = parse_usize(&params[0], "vertex count")?;
            let p = parse_probability(&params[1])?;
            if kind == "random" {
                gen_random(n, p, seed)
            } else {
                gen_chordal(n, p, seed)
            }
        }
        other => return Err(format!("unknown generator kind `{other}`")),
    };
    let text = io::write_plain(&graph, None);
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}
