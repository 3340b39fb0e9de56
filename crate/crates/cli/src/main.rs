//! `bdsym`: analyze finite Boolean dynamical systems under the asynchronous
//! unbounded-delay update model.
//!
//! Exit codes: 0 on success or a passing check, 1 on a failing check or an
//! empty enumeration, 2 on usage or input errors.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bdsym_core::formats::{
    parse_bijection, parse_function, parse_pair, parse_schedule, serialize_function, ScheduleFile,
};
use bdsym_core::groups::{classify_with, generate_group, ClassifyOptions, PairSet};
use bdsym_core::morphisms::{
    check_anti_iso, check_iso, find_anti_isos, find_isos, verify_anti_iso, verify_iso,
    MorphismKind, MorphismPair, SearchOptions, VerifyOptions, DEFAULT_SEARCH_CAP, DEFAULT_SEED,
};
use bdsym_core::orbits::{
    anti_orbit_branches, continuous_anti_orbit, continuous_orbit, discrete_orbit, system_prefixes,
    OrbitMode, OrbitPrefix, PiecewiseSignal, SchedulePrefix, TimedSchedule,
};
use bdsym_core::portrait::build_portrait;
use bdsym_core::{Bijection, State, TruthTable};

#[derive(Parser)]
#[command(
    name = "bdsym",
    version,
    about = "Asynchronous Boolean dynamical systems: portraits, orbits, isomorphisms, symmetry"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TextJson {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PortraitFormat {
    Dot,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Forward,
    Anti,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a function file and print its canonical form
    Show {
        function: PathBuf,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Emit the asynchronous state portrait
    Portrait {
        function: PathBuf,
        #[arg(long, value_enum, default_value_t = PortraitFormat::Dot)]
        format: PortraitFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a forward orbit from a start state under a schedule file
    Orbit {
        function: PathBuf,
        schedule: PathBuf,
        /// Start state as a bit string, leftmost coordinate first
        start: String,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Enumerate the backward branches from a start state
    AntiOrbit {
        function: PathBuf,
        schedule: PathBuf,
        start: String,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Exhaustively enumerate isomorphism pairs between two systems
    Iso {
        phi: PathBuf,
        psi: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Exhaustively enumerate anti-isomorphism pairs between two systems
    AntiIso {
        phi: PathBuf,
        psi: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Enumerate the automorphism pairs of one system
    Aut {
        function: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Enumerate the anti-automorphism pairs of one system
    AntiAut {
        function: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Close generator pairs from pair files into a symmetry group
    Group {
        function: PathBuf,
        #[arg(required = true)]
        pairs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Report the symmetry classification of a system
    Classify {
        function: PathBuf,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Check one (g, g') pair between two systems
    CheckPair {
        /// Check the anti-isomorphism diagrams instead
        #[arg(long)]
        anti: bool,
        phi: PathBuf,
        psi: PathBuf,
        g: Option<PathBuf>,
        gp: Option<PathBuf>,
        /// Read the pair from a single pair file instead of two bijections
        #[arg(long)]
        pair: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Verify that the equivalent characterizations agree on one pair
    Verify {
        /// Check the isomorphism statements
        #[arg(long)]
        thm29: bool,
        /// Check the anti-isomorphism statements
        #[arg(long)]
        thm28: bool,
        phi: PathBuf,
        psi: PathBuf,
        g: Option<PathBuf>,
        gp: Option<PathBuf>,
        #[arg(long)]
        pair: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        horizon: i32,
        #[arg(long, default_value_t = 1000)]
        budget: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
    /// Compare the forward prefix set of LEFT with the chosen prefix set of RIGHT
    EqualSystems {
        #[arg(long, value_enum)]
        mode: ModeArg,
        left: PathBuf,
        right: PathBuf,
        #[arg(long, default_value_t = 4)]
        horizon: i32,
        #[arg(long, value_enum, default_value_t = TextJson::Text)]
        format: TextJson,
    },
}

#[derive(clap::Args)]
struct SearchArgs {
    /// Stop after this many pairs (output flagged truncated)
    #[arg(long)]
    limit: Option<usize>,
    /// Print only the total count
    #[arg(long)]
    count: bool,
    /// Enumerate everything (the default; kept for explicit scripts)
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = TextJson::Text)]
    format: TextJson,
}

enum CliError {
    Io { path: PathBuf, message: String },
    Core(bdsym_core::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<bdsym_core::Error> for CliError {
    fn from(e: bdsym_core::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn with_path<T>(path: &Path, parsed: bdsym_core::Result<T>) -> CliResult<T> {
    parsed.map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn load_function(path: &Path) -> CliResult<TruthTable> {
    with_path(path, parse_function(&read(path)?))
}

fn load_bijection(path: &Path) -> CliResult<Bijection> {
    with_path(path, parse_bijection(&read(path)?))
}

fn load_schedule(path: &Path) -> CliResult<ScheduleFile> {
    with_path(path, parse_schedule(&read(path)?))
}

fn parse_start(text: &str, n: usize) -> CliResult<State> {
    if text.len() != n || text.chars().any(|c| c != '0' && c != '1') {
        return Err(CliError::Usage(format!(
            "start state `{text}` is not a {n}-bit string"
        )));
    }
    let bits: Vec<bool> = text.chars().map(|c| c == '1').collect();
    Ok(State::from_bits(&bits)?)
}

/// Reads the pair either from two bijection files or from one pair file.
fn load_pair_args(
    g: &Option<PathBuf>,
    gp: &Option<PathBuf>,
    pair: &Option<PathBuf>,
) -> CliResult<(Bijection, Bijection)> {
    match (g, gp, pair) {
        (Some(g), Some(gp), None) => Ok((load_bijection(g)?, load_bijection(gp)?)),
        (None, None, Some(path)) => with_path(path, parse_pair(&read(path)?)),
        _ => Err(CliError::Usage(
            "supply either <G> <GP> bijection files or --pair <FILE>".into(),
        )),
    }
}

/// `BDSYM_MAX_N` raises the exhaustive-search cap; factorial growth makes
/// anything past the default impractical, hence the opt-in.
fn search_cap() -> CliResult<usize> {
    match std::env::var("BDSYM_MAX_N") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("BDSYM_MAX_N: `{raw}` is not a dimension"))),
        Err(_) => Ok(DEFAULT_SEARCH_CAP),
    }
}

fn check_horizon(horizon: i32) -> CliResult<()> {
    if horizon < -1 {
        return Err(CliError::Usage(format!(
            "--horizon must be at least -1, got {horizon}"
        )));
    }
    Ok(())
}

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cmd: Cmd) -> CliResult<u8> {
    match cmd {
        Cmd::Show { function, format } => show(&function, format),
        Cmd::Portrait {
            function,
            format,
            output,
        } => portrait(&function, format, output.as_deref()),
        Cmd::Orbit {
            function,
            schedule,
            start,
            format,
        } => orbit(&function, &schedule, &start, format),
        Cmd::AntiOrbit {
            function,
            schedule,
            start,
            format,
        } => anti_orbit(&function, &schedule, &start, format),
        Cmd::Iso { phi, psi, search } => {
            let phi = load_function(&phi)?;
            let psi = load_function(&psi)?;
            run_search(&phi, &psi, MorphismKind::Iso, &search)
        }
        Cmd::AntiIso { phi, psi, search } => {
            let phi = load_function(&phi)?;
            let psi = load_function(&psi)?;
            run_search(&phi, &psi, MorphismKind::AntiIso, &search)
        }
        Cmd::Aut { function, search } => {
            let phi = load_function(&function)?;
            run_search(&phi, &phi, MorphismKind::Iso, &search)
        }
        Cmd::AntiAut { function, search } => {
            let phi = load_function(&function)?;
            run_search(&phi, &phi, MorphismKind::AntiIso, &search)
        }
        Cmd::Group {
            function,
            pairs,
            format,
        } => group(&function, &pairs, format),
        Cmd::Classify { function, format } => classify_cmd(&function, format),
        Cmd::CheckPair {
            anti,
            phi,
            psi,
            g,
            gp,
            pair,
            format,
        } => check_pair(anti, &phi, &psi, &g, &gp, &pair, format),
        Cmd::Verify {
            thm29,
            thm28,
            phi,
            psi,
            g,
            gp,
            pair,
            horizon,
            budget,
            seed,
            format,
        } => verify(
            thm29, thm28, &phi, &psi, &g, &gp, &pair, horizon, budget, seed, format,
        ),
        Cmd::EqualSystems {
            mode,
            left,
            right,
            horizon,
            format,
        } => equal_systems(mode, &left, &right, horizon, format),
    }
}

fn show(path: &Path, format: TextJson) -> CliResult<u8> {
    let table = load_function(path)?;
    let fixed: Vec<String> = table.fixed_points().iter().map(State::bit_string).collect();
    match format {
        TextJson::Text => {
            print!("{}", serialize_function(&table));
            println!(
                "# fixed points: {}",
                if fixed.is_empty() {
                    "none".into()
                } else {
                    fixed.join(" ")
                }
            );
        }
        TextJson::Json => {
            let rows: Vec<_> = table
                .entries()
                .map(|(i, o)| json!([i.bit_string(), o.bit_string()]))
                .collect();
            println!(
                "{}",
                json!({ "n": table.dim(), "rows": rows, "fixed_points": fixed })
            );
        }
    }
    Ok(PASS)
}

fn portrait(path: &Path, format: PortraitFormat, output: Option<&Path>) -> CliResult<u8> {
    let table = load_function(path)?;
    let graph = build_portrait(&table);
    let rendered = match format {
        PortraitFormat::Dot => graph.render_dot(),
        PortraitFormat::Json => format!("{}\n", graph.to_json()),
    };
    match output {
        Some(dest) => std::fs::write(dest, rendered).map_err(|e| CliError::Io {
            path: dest.to_path_buf(),
            message: e.to_string(),
        })?,
        None => print!("{rendered}"),
    }
    Ok(PASS)
}

fn print_discrete_orbit(orbit: &OrbitPrefix, format: TextJson) {
    match format {
        TextJson::Text => {
            for (i, value) in orbit.values().iter().enumerate() {
                println!("k={}: {value}", i as i32 - 1);
            }
        }
        TextJson::Json => {
            let values: Vec<String> = orbit.values().iter().map(State::bit_string).collect();
            println!("{}", json!({ "values": values }));
        }
    }
}

fn print_signal(signal: &PiecewiseSignal, format: TextJson) {
    match format {
        TextJson::Text => {
            match signal.breakpoints().first() {
                Some((t0, _)) => println!("(-inf, {t0}): {}", signal.initial()),
                None => println!("(-inf, +inf): {}", signal.initial()),
            }
            let bps = signal.breakpoints();
            for (i, (t, value)) in bps.iter().enumerate() {
                match bps.get(i + 1) {
                    Some((next, _)) => println!("[{t}, {next}): {value}"),
                    None => println!("[{t}, +inf): {value}"),
                }
            }
        }
        TextJson::Json => println!("{}", signal.to_json()),
    }
}

fn orbit(function: &Path, schedule: &Path, start: &str, format: TextJson) -> CliResult<u8> {
    let table = load_function(function)?;
    let mu = parse_start(start, table.dim())?;
    match load_schedule(schedule)? {
        ScheduleFile::Prefix(alpha) => {
            print_discrete_orbit(&discrete_orbit(&table, &mu, &alpha)?, format)
        }
        ScheduleFile::Timed(rho) => print_signal(&continuous_orbit(&table, &mu, &rho)?, format),
    }
    Ok(PASS)
}

fn anti_orbit(function: &Path, schedule: &Path, start: &str, format: TextJson) -> CliResult<u8> {
    let table = load_function(function)?;
    let mu = parse_start(start, table.dim())?;
    let (alpha, timed): (SchedulePrefix, Option<TimedSchedule>) = match load_schedule(schedule)? {
        ScheduleFile::Prefix(alpha) => (alpha, None),
        ScheduleFile::Timed(rho) => (rho.schedule().clone(), Some(rho)),
    };
    let branches = anti_orbit_branches(&table, &mu, &alpha)?;
    match (&timed, format) {
        (None, TextJson::Text) => {
            for branch in &branches {
                let line: Vec<String> = branch.values().iter().map(State::bit_string).collect();
                println!("{}", line.join(" "));
            }
        }
        (None, TextJson::Json) => {
            for branch in &branches {
                let values: Vec<String> = branch.values().iter().map(State::bit_string).collect();
                println!("{}", json!({ "values": values }));
            }
        }
        (Some(rho), _) => {
            for branch in &branches {
                let signal = continuous_anti_orbit(&table, branch, rho)?;
                print_signal(&signal, format);
            }
        }
    }
    if branches.is_empty() {
        eprintln!("no branches");
        return Ok(FAIL);
    }
    Ok(PASS)
}

fn run_search(
    phi: &TruthTable,
    psi: &TruthTable,
    kind: MorphismKind,
    args: &SearchArgs,
) -> CliResult<u8> {
    let opts = SearchOptions {
        limit: if args.all { None } else { args.limit },
        count_only: args.count,
        max_dim: search_cap()?,
    };
    let outcome = match kind {
        MorphismKind::Iso => find_isos(phi, psi, &opts)?,
        MorphismKind::AntiIso => find_anti_isos(phi, psi, &opts)?,
    };
    if args.count {
        match args.format {
            TextJson::Text => println!("{}", outcome.count),
            TextJson::Json => println!("{}", json!({ "count": outcome.count })),
        }
        return Ok(if outcome.count == 0 { FAIL } else { PASS });
    }
    for pair in &outcome.pairs {
        match args.format {
            TextJson::Text => println!("{pair}"),
            TextJson::Json => println!("{}", pair.to_json()),
        }
    }
    if args.format == TextJson::Text {
        println!("found {} pair(s)", outcome.pairs.len());
    }
    if outcome.truncated {
        eprintln!("output truncated at --limit");
    }
    Ok(if outcome.pairs.is_empty() { FAIL } else { PASS })
}

fn group(function: &Path, pair_files: &[PathBuf], format: TextJson) -> CliResult<u8> {
    let phi = load_function(function)?;
    let mut generators = Vec::new();
    for path in pair_files {
        let (g, gp) = with_path(path, parse_pair(&read(path)?))?;
        generators.push(MorphismPair::new(g, gp, MorphismKind::Iso)?);
    }
    let gens = PairSet::new(phi.dim(), generators)?;
    let closed = match generate_group(&gens, &phi) {
        Ok(set) => set,
        Err(e @ bdsym_core::Error::NotAnAutomorphism { .. }) => {
            eprintln!("{e}");
            return Ok(FAIL);
        }
        Err(e) => return Err(e.into()),
    };
    match format {
        TextJson::Text => {
            println!("order {}", closed.len());
            for pair in closed.iter() {
                println!("{pair}");
            }
            if closed.len() > 1 {
                println!("symmetry group of order {}", closed.len());
            } else {
                println!("trivial group (not a symmetry group)");
            }
        }
        TextJson::Json => println!("{}", closed.to_json()),
    }
    Ok(PASS)
}

fn classify_cmd(function: &Path, format: TextJson) -> CliResult<u8> {
    let phi = load_function(function)?;
    let opts = ClassifyOptions {
        max_dim: search_cap()?,
    };
    let report = classify_with(&phi, &opts)?;
    match format {
        TextJson::Text => println!("{report}"),
        TextJson::Json => println!("{}", report.to_json()),
    }
    Ok(PASS)
}

#[allow(clippy::too_many_arguments)]
fn check_pair(
    anti: bool,
    phi: &Path,
    psi: &Path,
    g: &Option<PathBuf>,
    gp: &Option<PathBuf>,
    pair: &Option<PathBuf>,
    format: TextJson,
) -> CliResult<u8> {
    let phi = load_function(phi)?;
    let psi = load_function(psi)?;
    let (g, gp) = load_pair_args(g, gp, pair)?;
    let (kind, pass) = if anti {
        ("anti-iso", check_anti_iso(&phi, &psi, &g, &gp)?)
    } else {
        ("iso", check_iso(&phi, &psi, &g, &gp)?)
    };
    match format {
        TextJson::Text => println!("{kind}: {pass}"),
        TextJson::Json => println!("{}", json!({ "kind": kind, "pass": pass })),
    }
    Ok(if pass { PASS } else { FAIL })
}

#[allow(clippy::too_many_arguments)]
fn verify(
    thm29: bool,
    thm28: bool,
    phi: &Path,
    psi: &Path,
    g: &Option<PathBuf>,
    gp: &Option<PathBuf>,
    pair: &Option<PathBuf>,
    horizon: i32,
    budget: u64,
    seed: Option<u64>,
    format: TextJson,
) -> CliResult<u8> {
    if thm29 == thm28 {
        return Err(CliError::Usage(
            "pass exactly one of --thm29 (isomorphism) or --thm28 (anti-isomorphism)".into(),
        ));
    }
    check_horizon(horizon)?;
    let phi = load_function(phi)?;
    let psi = load_function(psi)?;
    let (g, gp) = load_pair_args(g, gp, pair)?;
    let opts = VerifyOptions {
        horizon,
        budget,
        seed: seed.unwrap_or(DEFAULT_SEED),
    };
    let report = if thm29 {
        verify_iso(&phi, &psi, &g, &gp, &opts)?
    } else {
        verify_anti_iso(&phi, &psi, &g, &gp, &opts)?
    };
    match format {
        TextJson::Text => println!("{report}"),
        TextJson::Json => println!("{}", report.to_json()),
    }
    Ok(if report.all_pass() { PASS } else { FAIL })
}

fn equal_systems(
    mode: ModeArg,
    left: &Path,
    right: &Path,
    horizon: i32,
    format: TextJson,
) -> CliResult<u8> {
    check_horizon(horizon)?;
    let left_table = load_function(left)?;
    let right_table = load_function(right)?;
    let left_set = system_prefixes(&left_table, horizon, OrbitMode::Forward)?;
    let right_mode = match mode {
        ModeArg::Forward => OrbitMode::Forward,
        ModeArg::Anti => OrbitMode::Anti,
    };
    let right_set = system_prefixes(&right_table, horizon, right_mode)?;
    let equal = left_set == right_set;
    let mode_name = match mode {
        ModeArg::Forward => "forward",
        ModeArg::Anti => "anti",
    };
    match format {
        TextJson::Text => {
            println!("left (forward): {} sequences", left_set.len());
            println!("right ({mode_name}): {} sequences", right_set.len());
            println!("equal: {equal}");
        }
        TextJson::Json => println!(
            "{}",
            json!({
                "equal": equal,
                "left": left_set.len(),
                "right": right_set.len(),
                "horizon": horizon,
                "mode": mode_name,
            })
        ),
    }
    Ok(if equal { PASS } else { FAIL })
}
