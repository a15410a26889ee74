use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use posetime::harness::dot::{export_dot_labeled, DotMode};
use posetime::harness::lattice::{generate_lattice, LatticeSpec};
use posetime::harness::random::{generate_random, longest_chain};
use posetime::harness::simplex::generate_simplex;
use posetime::harness::text::{parse_text, to_text};
use posetime::harness::verify::{
    builtin_sources, verify_algebra, verify_all, verify_source, Report,
};
use posetime::harness::Source;
use posetime::interval::{interval_pair_one_chain, interval_pair_two_chains, Side};
use posetime::projection::{backward_index, classify_projection, forward_index};
use posetime::spacetime::{
    apply_pair_transform, beta, gamma, inner_product, interval_scalar, lorentz_matrix,
    scalar_length, to_coords,
};
use posetime::structure::{collinearity_case, detect_linear_relation};
use posetime::{EventId, GeneralizedInterval, IntervalPair, PairTransform, Rational, ValuedChain};

#[derive(Parser)]
#[command(
    name = "posetime",
    version,
    about = "Quantify event posets with observer chains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load or generate a poset and write it in the text format.
    Build {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print forward and backward projections of every event onto a chain.
    Project {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        chain: String,
    },
    /// Print collinearity case and betweenness of every event relative to two chains.
    Classify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        chains: Vec<String>,
    },
    /// Test whether one chain is linearly related to another.
    Relate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        chain: String,
        #[arg(long)]
        onto: String,
    },
    /// Quantify a generalized interval with one or two chains.
    Quantify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        interval: Vec<String>,
        #[arg(long, num_args = 1..=2, value_names = ["P", "Q"])]
        chains: Vec<String>,
        /// Sides of the endpoints for one-chain quantification.
        #[arg(long, num_args = 2, value_names = ["SIDE_A", "SIDE_B"])]
        sides: Vec<SideArg>,
    },
    /// Apply the pair transform (m, n) to an interval pair.
    Transform {
        #[arg(long)]
        m: Rational,
        #[arg(long)]
        n: Rational,
        #[arg(long, num_args = 2, value_names = ["DP", "DQ"], allow_negative_numbers = true)]
        pair: Vec<Rational>,
    },
    /// Print the interval scalar of a pair.
    Scalar {
        #[arg(long, num_args = 2, value_names = ["DP", "DQ"], allow_negative_numbers = true)]
        pair: Vec<Rational>,
    },
    /// Print the inner product of two pairs.
    Inner {
        #[arg(long, num_args = 2, value_names = ["DP", "DQ"], allow_negative_numbers = true)]
        pair: Vec<Rational>,
        #[arg(long, num_args = 2, value_names = ["DP", "DQ"], allow_negative_numbers = true)]
        with: Vec<Rational>,
    },
    /// Run the invariant suite on one source, or on every built-in generator.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Export Graphviz DOT.
    Export {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value = "hasse")]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Text-format poset file.
    #[arg(long, conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// lattice:U,V | simplex:N | random:SEED,N,D
    #[arg(long)]
    gen: Option<Generator>,
}

#[derive(Clone, Debug)]
enum Generator {
    Lattice(usize, usize),
    Simplex(usize),
    Random(u64, usize, f64),
}

impl FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| format!("expected KIND:ARGS, got `{s}`"))?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        fn num<T: FromStr>(w: &str) -> Result<T, String> {
            w.parse()
                .map_err(|_| format!("`{w}` is not a valid number"))
        }
        match (kind, args.as_slice()) {
            ("lattice", [u, v]) => Ok(Generator::Lattice(num(u)?, num(v)?)),
            ("simplex", [n]) => Ok(Generator::Simplex(num(n)?)),
            ("random", [seed, n, d]) => Ok(Generator::Random(num(seed)?, num(n)?, num(d)?)),
            _ => Err(format!(
                "unknown generator `{s}`; use lattice:U,V, simplex:N or random:SEED,N,D"
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Hasse,
    Geometric,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

impl SourceArgs {
    fn load(&self) -> anyhow::Result<Option<Source>> {
        if let Some(path) = &self.input {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let doc = parse_text(&text).with_context(|| format!("parsing {}", path.display()))?;
            return Ok(Some(Source::plain(
                path.display().to_string(),
                doc.poset,
                doc.chains,
            )));
        }
        let Some(gen) = &self.gen else {
            return Ok(None);
        };
        let source = match *gen {
            Generator::Lattice(u, v) => generate_lattice(&LatticeSpec::standard(u, v))?
                .into_source(format!("lattice:{u},{v}")),
            Generator::Simplex(n) => generate_simplex(n)?.into_source(format!("simplex:{n}")),
            Generator::Random(seed, n, d) => {
                let poset = generate_random(seed, n, d)?;
                let chains = if n > 0 {
                    vec![longest_chain(&poset)?]
                } else {
                    Vec::new()
                };
                Source::plain(format!("random:{seed},{n},{d}"), poset, chains)
            }
        };
        Ok(Some(source))
    }

    fn require(&self) -> anyhow::Result<Source> {
        self.load()?
            .ok_or_else(|| anyhow!("no poset given; pass --input FILE or --gen KIND:ARGS"))
    }
}

fn find_chain<'s>(s: &'s Source, name: &str) -> anyhow::Result<&'s ValuedChain> {
    s.chain(name).ok_or_else(|| {
        let names: Vec<&str> = s.chains.iter().map(|c| c.name()).collect();
        anyhow!("no chain named `{name}` (have: {})", names.join(", "))
    })
}

/// Accepts an event id or a generator label such as `(3,1)`.
fn find_event(s: &Source, word: &str) -> anyhow::Result<EventId> {
    if let Some(i) = s.labels.iter().position(|l| l == word) {
        return Ok(EventId(i));
    }
    match word.parse::<usize>() {
        Ok(i) if i < s.poset.event_count() => Ok(EventId(i)),
        _ => bail!("no event `{word}`"),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_report(report: &Report) -> ExitCode {
    for r in &report.results {
        println!("{r}");
    }
    let failed = report.failures().count();
    println!("{} checks, {failed} failed", report.results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Build { source, out } => {
            let s = source.require()?;
            emit(out.as_ref(), &to_text(&s.poset, &s.chains))?;
            eprintln!(
                "{}: {} events, {} cover edges, {} chains",
                s.name,
                s.poset.event_count(),
                s.poset.cover_edges().len(),
                s.chains.len()
            );
        }
        Command::Project { source, chain } => {
            let s = source.require()?;
            let c = find_chain(&s, &chain)?;
            println!("event\tlabel\tpair\tcase");
            for x in s.poset.events() {
                let show = |i: Option<usize>| i.map_or(".".to_string(), |i| c.value(i).to_string());
                let f = show(forward_index(&s.poset, x, c));
                let b = show(backward_index(&s.poset, x, c));
                let case = classify_projection(&s.poset, x, c)?.case;
                println!("{x}\t{}\t({f}, {b})\t{}", s.label(x), case.letter());
            }
        }
        Command::Classify { source, chains } => {
            let s = source.require()?;
            let (p, q) = (find_chain(&s, &chains[0])?, find_chain(&s, &chains[1])?);
            println!("event\tlabel\tcase\tbetweenness");
            for x in s.poset.events() {
                match collinearity_case(&s.poset, x, p, q) {
                    Ok(case) => println!("{x}\t{}\t{case}\t{}", s.label(x), case.betweenness()),
                    Err(e) => println!("{x}\t{}\t.\t. ({e})", s.label(x)),
                }
            }
        }
        Command::Relate {
            source,
            chain,
            onto,
        } => {
            let s = source.require()?;
            let (c, p) = (find_chain(&s, &chain)?, find_chain(&s, &onto)?);
            match detect_linear_relation(&s.poset, c, p) {
                Ok(rel) => {
                    let (m, n) = rel.per_unit();
                    println!("{rel}");
                    println!("(m, n) per unit = ({m}, {n})");
                }
                Err(e) => println!("not linearly related: {e}"),
            }
        }
        Command::Quantify {
            source,
            interval,
            chains,
            sides,
        } => {
            let s = source.require()?;
            let iv = GeneralizedInterval::new(
                find_event(&s, &interval[0])?,
                find_event(&s, &interval[1])?,
            );
            let pair = match chains.as_slice() {
                [p] => {
                    if sides.len() != 2 {
                        bail!("one-chain quantification needs --sides for both endpoints");
                    }
                    let c = find_chain(&s, p)?;
                    interval_pair_one_chain(&s.poset, iv, c, [sides[0].into(), sides[1].into()])?
                }
                [p, q] => {
                    interval_pair_two_chains(&s.poset, iv, find_chain(&s, p)?, find_chain(&s, q)?)?
                }
                _ => bail!("--chains takes one or two chain names"),
            };
            let (sym, anti) = pair.decompose();
            let scalar = interval_scalar(&pair);
            println!("interval {} .. {}", s.label(iv.a), s.label(iv.b));
            println!("basis {}", pair.basis);
            println!("pair {pair}");
            println!("symmetric {sym}");
            println!("antisymmetric {anti}");
            println!("class {}", pair.classify());
            println!("length {}", pair.length());
            println!("distance {}", pair.distance());
            println!("scalar {} ({})", scalar.value, scalar.character);
        }
        Command::Transform { m, n, pair } => {
            let t = PairTransform::new(m, n)?;
            let p = IntervalPair::new(pair[0], pair[1]);
            let out = apply_pair_transform(&p, &t);
            let [[a, b], [c, d]] = lorentz_matrix(&t);
            println!("pair {p} -> {out}");
            println!("scalar {} -> {}", p.product(), out.product());
            println!("beta {}", beta(&t));
            println!("gamma {}", gamma(&t));
            println!("matrix [[{a}, {b}], [{c}, {d}]]");
        }
        Command::Scalar { pair } => {
            let p = IntervalPair::new(pair[0], pair[1]);
            let scalar = interval_scalar(&p);
            println!("scalar {} ({})", scalar.value, scalar.character);
            println!("length {}", scalar_length(&p));
            println!("{}", to_coords(&p));
            println!("class {}", p.classify());
        }
        Command::Inner { pair, with } => {
            let a = IntervalPair::new(pair[0], pair[1]);
            let b = IntervalPair::new(with[0], with[1]);
            println!("{}", inner_product(&a, &b));
        }
        Command::Verify { source } => {
            let report = match source.load()? {
                Some(s) => {
                    let mut results = verify_source(&s);
                    results.extend(verify_algebra(0x5eed));
                    Report { results }
                }
                None => verify_all(&builtin_sources()?),
            };
            return Ok(print_report(&report));
        }
        Command::Export { source, mode, out } => {
            let s = source.require()?;
            let mode = match mode {
                ModeArg::Hasse => DotMode::Hasse,
                ModeArg::Geometric => DotMode::Geometric,
            };
            emit(
                out.as_ref(),
                &export_dot_labeled(&s.poset, &s.chains, mode, &s.labels),
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
