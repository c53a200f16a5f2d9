//! The `unimap` command line. `run` parses arguments and returns the
//! process exit code: 0 on success, 1 when an invariant fails (the failing
//! object goes to stderr or `--output`), 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::bijection::{close_psi, open_phi, opening_sequences, OpeningSequence};
use crate::checks::{run_suite, Suite};
use crate::enumerate::{
    catalan, count_dominant_schemes, count_unicellular, dominant_schemes, enum_dominant,
    enum_trees_with_triples, CountTable, EnumOptions, Generator, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::io::{
    from_json, to_json, write_atomic, ClosedMapFile, LabelledTreeFile, MapFile,
    TreeWithTriplesFile, WellLabelledFile,
};
use crate::labelled::LabelledTree;
use crate::perm::VertexId;
use crate::scheme::is_dominant;
use crate::stats::{
    estimate_tg_moment, estimate_tg_probability, pooled_profile, run_batches, sample_dominant_map,
    sample_labelled_tree, sample_plane_tree, sample_well_labelled,
    Estimate, LabelHistogram, SeededRng,
};

#[derive(Parser, Debug)]
#[command(name = "unimap", version, about = "Unicellular maps: surgery, bijections, enumeration, sampling")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Seed for every sampler
    #[arg(long, global = true, env = "UNIMAP_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for enumeration and sampling
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Maximum number of involutions an exhaustive run may visit
    #[arg(long = "budget", global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_budget: u64,
    /// Write the result here (atomically) instead of stdout
    #[arg(long = "output", short = 'o', global = true)]
    pub output_path: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

impl Config {
    fn workers(&self) -> usize {
        self.workers
            .map(|w| w as usize)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |w| w.get()))
    }

    fn enum_options(&self) -> EnumOptions {
        EnumOptions {
            workers: self.workers(),
            budget: self.node_budget,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check map invariants and print genus, faces and vertices
    Validate { map: PathBuf },
    /// Count maps (or dominant maps, schemes, trees with triples) of genus g with n edges
    Enumerate {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        dominant: bool,
        #[arg(long)]
        schemes: bool,
        #[arg(long = "trees-with-triples")]
        trees_with_triples: bool,
    },
    /// Open a dominant map into a tree with triples
    Open {
        map: PathBuf,
        /// Opening sequence v1,...,vg (vertex ids); defaults to the file's "sequence"
        #[arg(long, value_delimiter = ',', conflicts_with = "all")]
        sequence: Option<Vec<u32>>,
        /// Open along every opening sequence
        #[arg(long)]
        all: bool,
    },
    /// Close a tree with triples into a map and its opening sequence
    Close { tree: PathBuf },
    /// Run an exhaustive self-check suite
    Check {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1)]
        g: u32,
        #[arg(long)]
        nmax: u32,
    },
    /// Draw uniform random objects
    Sample {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        g: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Monte-Carlo estimate of t_g
    EstimateTg {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Method::Moment)]
        method: Method,
    },
    /// Pooled distance profile histogram of random quadrangulations, tree side
    Profile {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 50)]
        bins: usize,
        /// Also write per-sample radii as CSV
        #[arg(long)]
        radius: Option<PathBuf>,
        /// Also write a gnuplot histogram dump
        #[arg(long)]
        gnuplot: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Surgery,
    Bijection,
    Counts,
    Labelled,
    Series,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Surgery => Suite::Surgery,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Counts => Suite::Counts,
            SuiteArg::Labelled => Suite::Labelled,
            SuiteArg::Series => Suite::Series,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Tree,
    LabelledTree,
    DominantMap,
    WellLabelled,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Moment,
    Probability,
}

/// What a subcommand produced.
pub struct Outcome {
    pub text: String,
    /// Failing object for exit code 1.
    pub failure: Option<Value>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failure: None }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli.config, &out.text) {
                eprintln!("error: {e}");
                return 1;
            }
            match out.failure {
                None => 0,
                Some(obj) => {
                    eprintln!("{}", serde_json::to_string_pretty(&obj).unwrap());
                    1
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::Json(_) | Error::Format(_) => 2,
                _ => 1,
            }
        }
    }
}

fn emit(config: &Config, text: &str) -> Result<()> {
    match &config.output_path {
        Some(p) => write_atomic(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Validate { map } => validate(map),
        Command::Enumerate {
            g,
            n,
            dominant,
            schemes,
            trees_with_triples,
        } => enumerate(cfg, *g, *n, *dominant, *schemes, *trees_with_triples),
        Command::Open { map, sequence, all } => open(map, sequence.as_deref(), *all),
        Command::Close { tree } => {
            let file: TreeWithTriplesFile = from_json(&std::fs::read_to_string(tree)?)?;
            let (m, seq) = close_psi(&file.to_value()?)?;
            Ok(Outcome::ok(to_json(&ClosedMapFile::from_value(&m, &seq))?))
        }
        Command::Check { suite, g, nmax } => {
            let report = run_suite((*suite).into(), *g, *nmax, &cfg.enum_options())?;
            let text = match cfg.format {
                Format::Csv => report.render(),
                Format::Json => to_json(&json!({
                    "suite": report.suite.as_str(),
                    "passed": report.passed(),
                    "checks": report.lines.iter().map(|l| json!({
                        "name": l.name, "passed": l.passed, "detail": l.detail
                    })).collect::<Vec<_>>(),
                }))?,
            };
            Ok(Outcome {
                text,
                failure: report.counterexample,
            })
        }
        Command::Sample { kind, g, n, count } => sample(cfg, *kind, *g, *n, *count),
        Command::EstimateTg { g, n, samples, method } => {
            let e = match method {
                Method::Moment => estimate_tg_moment(*g, *n, *samples, cfg.seed, cfg.workers())?,
                Method::Probability => estimate_tg_probability(*g, *n, *samples, cfg.seed, cfg.workers())?,
            };
            let text = match cfg.format {
                Format::Csv => format!("{}\n{}\n", Estimate::CSV_HEADER, e.csv_row()),
                Format::Json => to_json(&json!({
                    "target": e.target, "g": e.g, "n": e.n, "samples": e.samples,
                    "mean": e.mean, "stderr": e.std_error, "seed": e.seed,
                }))?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Profile {
            g,
            n,
            samples,
            bins,
            radius,
            gnuplot,
        } => {
            let p = pooled_profile(*g, *n, *samples, cfg.seed, cfg.workers())?;
            if let Some(path) = radius {
                let mut s = String::from("sample,radius\n");
                for (i, r) in p.radii.iter().enumerate() {
                    writeln!(s, "{i},{r:.9}").unwrap();
                }
                write_atomic(path, &s)?;
            }
            if let Some(path) = gnuplot {
                write_atomic(path, &p.to_gnuplot(*bins))?;
            }
            let text = match cfg.format {
                Format::Csv => p.to_csv(*bins),
                Format::Json => to_json(&json!({
                    "g": p.g, "n": p.n, "samples": p.samples, "seed": p.seed,
                    "histogram": p.histogram(*bins),
                    "mean_radius": p.mean_radius(),
                    "unit_mass": p.all_unit_mass,
                }))?,
            };
            Ok(Outcome {
                text,
                failure: (!p.all_unit_mass).then(|| json!({"error": "profile mass differs from 1"})),
            })
        }
    }
}

fn validate(path: &PathBuf) -> Result<Outcome> {
    let file: MapFile = from_json(&std::fs::read_to_string(path)?)?;
    let m = match file.to_map() {
        Ok(m) => m,
        Err(e) => {
            return Ok(Outcome {
                text: format!("invalid: {e}\n"),
                failure: Some(serde_json::to_value(&file).unwrap()),
            })
        }
    };
    if !m.is_connected() {
        return Ok(Outcome {
            text: "invalid: map is not connected\n".into(),
            failure: Some(serde_json::to_value(&file).unwrap()),
        });
    }
    let text = format!(
        "edges={} vertices={} faces={} genus={} unicellular={} dominant={}\n",
        m.n(),
        m.vertex_count(),
        m.face_count(),
        m.genus()?,
        m.is_unicellular(),
        is_dominant(&m)
    );
    Ok(Outcome::ok(text))
}

fn enumerate(cfg: &Config, g: u32, n: u32, dominant: bool, schemes: bool, twt: bool) -> Result<Outcome> {
    let opts = cfg.enum_options();
    let mut table = CountTable::default();
    if schemes {
        if g == 0 {
            return Err(Error::GenusOutOfRange { g, n });
        }
        // every dominant scheme of genus g has 6g-3 edges
        let (brute, formula) = if n == 6 * g - 3 {
            (count_dominant_schemes(g, &opts)?, dominant_schemes(g as u64)?)
        } else {
            (BigUint::default(), BigUint::default())
        };
        table.push(g, n, brute, Generator::BruteForce);
        table.push(g, n, formula, Generator::Formula);
    } else if twt {
        let count = enum_trees_with_triples(g as usize, n as usize, &opts)?.len();
        table.push(g, n, count.into(), Generator::BruteForce);
    } else if dominant {
        let count = if 2 * g <= n { enum_dominant(g, n, &opts)?.len() } else { 0 };
        table.push(g, n, count.into(), Generator::BruteForce);
    } else {
        let count = if 2 * g <= n { count_unicellular(g, n, &opts)? } else { BigUint::default() };
        table.push(g, n, count, Generator::BruteForce);
        if g == 0 {
            table.push(g, n, catalan(n as u64), Generator::Formula);
        }
    }
    let failure = (!table.disagreements().is_empty()).then(|| json!({"disagreements": table.disagreements()}));
    let text = match cfg.format {
        Format::Csv => table.to_csv(),
        Format::Json => to_json(
            &table
                .entries
                .iter()
                .map(|e| json!({"g": e.g, "n": e.n, "count": e.count.to_string(), "generator": e.generator.as_str()}))
                .collect::<Vec<_>>(),
        )?,
    };
    Ok(Outcome { text, failure })
}

fn open(path: &PathBuf, sequence: Option<&[u32]>, all: bool) -> Result<Outcome> {
    let value: Value = from_json(&std::fs::read_to_string(path)?)?;
    let file: MapFile = serde_json::from_value(value.clone())?;
    let m = file.to_rooted()?;
    if all {
        let mut out = Vec::new();
        for seq in opening_sequences(&m)? {
            let tc = open_phi(&m, &seq)?;
            let mut obj = serde_json::to_value(TreeWithTriplesFile::from_value(&tc))?;
            obj["sequence"] = json!(seq.nodes.iter().map(|v| v.0).collect::<Vec<_>>());
            out.push(obj);
        }
        return Ok(Outcome::ok(to_json(&out)?));
    }
    let nodes: Vec<u32> = match sequence {
        Some(s) => s.to_vec(),
        None => match value.get("sequence") {
            Some(s) => serde_json::from_value(s.clone())?,
            None => {
                return Err(Error::InvalidSequence("give --sequence or --all".into()));
            }
        },
    };
    let seq = OpeningSequence::new(nodes.into_iter().map(VertexId).collect());
    let tc = open_phi(&m, &seq)?;
    Ok(Outcome::ok(to_json(&TreeWithTriplesFile::from_value(&tc))?))
}

fn sample(cfg: &Config, kind: Kind, g: usize, n: usize, count: usize) -> Result<Outcome> {
    let seed = SeededRng::new(cfg.seed);
    let parts = run_batches(count, seed, cfg.workers(), |rng, size| {
        let mut out = Vec::with_capacity(size);
        for _ in 0..size {
            let v = match kind {
                Kind::Tree => serde_json::to_value(MapFile::from_rooted(&sample_plane_tree(n, rng)?))?,
                Kind::LabelledTree => {
                    serde_json::to_value(LabelledTreeFile::from_value(&sample_labelled_tree(n, rng)?))?
                }
                Kind::DominantMap => serde_json::to_value(MapFile::from_rooted(&sample_dominant_map(g, n, rng)?))?,
                Kind::WellLabelled => {
                    serde_json::to_value(WellLabelledFile::from_value(&sample_well_labelled(g, n, rng)?))?
                }
            };
            out.push(v);
        }
        Ok(out)
    })?;
    let items: Vec<Value> = parts.into_iter().flatten().collect();
    let text = match cfg.format {
        Format::Json => to_json(&items)?,
        Format::Csv => {
            let mut s = String::from("index,edges,vertices,genus,cube_sum\n");
            for (i, v) in items.iter().enumerate() {
                let m = serde_json::from_value::<MapFile>(v.clone())?.to_map()?;
                let cube = match kind {
                    Kind::LabelledTree => {
                        let t: LabelledTree = serde_json::from_value::<LabelledTreeFile>(v.clone())?.to_value()?;
                        LabelHistogram::of_tree(&t).cube_sum().to_string()
                    }
                    Kind::WellLabelled => {
                        let w = serde_json::from_value::<WellLabelledFile>(v.clone())?.to_value()?;
                        LabelHistogram::of_tree(&w.labelled).cube_sum().to_string()
                    }
                    _ => String::new(),
                };
                writeln!(s, "{i},{},{},{},{cube}", m.n(), m.vertex_count(), m.genus()?).unwrap();
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}
