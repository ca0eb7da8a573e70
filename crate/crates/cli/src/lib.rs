//! Command-line front end: argument definitions and dispatch.
//!
//! Every command reads one filling (text grid or JSON) from `--in` or stdin,
//! writes text or JSON to `--out` or stdout, and reports domain errors as
//! [`Failure`]s, which `main` turns into exit status 1.

pub mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rimhook::classical::{self, ChainKind, SsytPair};
use rimhook::enumeration::{enumerate_rpps, enumerate_tableaux, EnumBudget, DEFAULT_CEILING};
use rimhook::format::GridJson;
use rimhook::insertion::{self, factorize_steps, FailureReason, Insertion};
use rimhook::pakmap;
use rimhook::verify::{self, Config};
use rimhook::{build, factorize, Cell, Error, LatticePath, Partition, Rpp, Tableau};

#[derive(Debug, Parser)]
#[command(
    name = "rimhook",
    version,
    about = "Rim-hook insertion into reverse plane partitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Read input from a file instead of stdin.
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads for verification suites (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for randomised sampling in verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Ceiling on the number of items any enumeration may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING)]
    pub budget: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Weak,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Rpps,
    Tableaux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Stanley,
    Gansner,
    Bijection,
    Golden,
    Pak,
    Commutation,
    InsertionUniqueness,
    Crossing,
    Hg,
    Diag,
    Gk,
    Syt,
    RskThm,
    Involution,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hook lengths, corners, regions and both cell orders of a shape.
    Info {
        #[arg(long)]
        shape: Partition,
    },
    /// All rim-hooks of a shape in increasing order.
    Rimhooks {
        #[arg(long)]
        shape: Partition,
        /// Draw each rim-hook.
        #[arg(long)]
        draw: bool,
        /// Write an SVG of the rim-hook anchored at `--hook` (default: the first).
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[arg(long)]
        hook: Option<Cell>,
    },
    /// Checks that the input is a reverse plane partition.
    Validate {
        #[arg(long)]
        shape: Option<Partition>,
    },
    /// Diagonal sums by content.
    Trace,
    /// Candidate cells in content order.
    Candidates,
    /// Inserts the rim-hook anchored at `--hook`.
    Insert {
        #[arg(long)]
        hook: Cell,
    },
    /// The weakly increasing factorisation into rim-hooks.
    Factorize {
        /// Include every extraction path.
        #[arg(long)]
        steps: bool,
    },
    /// Builds the filling of a tableau of rim-hook multiplicities.
    Build {
        /// Shape of the tableau; an empty input then means the zero tableau.
        #[arg(long)]
        shape: Option<Partition>,
    },
    /// Pak's corner-peeling map.
    Xi {
        /// First corner to peel.
        #[arg(long)]
        corner: Option<Cell>,
    },
    /// Toggles the diagonal of an outer corner and removes it.
    Zeta {
        #[arg(long)]
        corner: Cell,
    },
    /// Hillman–Grassl.
    Hg,
    /// Inverse Hillman–Grassl.
    HgInv {
        #[arg(long)]
        shape: Option<Partition>,
    },
    /// RSK of the tableau read as a matrix.
    Rsk,
    /// Inverse RSK; input is `P`, a line `--`, then `Q` (or JSON `{"p":…,"q":…}`).
    RskInv {
        /// Shape of the matrix (default: square of the largest entry).
        #[arg(long)]
        shape: Option<Partition>,
    },
    /// Partition formed by the nonzero entries of diagonal `k`.
    Diag {
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
    },
    /// Maximal total length of `r` chains in the rectangle of diagonal `k`.
    Gk {
        #[arg(long, allow_hyphen_values = true)]
        k: i32,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Runs a property suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Streams all fillings up to a size as newline-delimited JSON.
    Enumerate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        shape: Partition,
        /// Largest size (weighted by hook lengths for tableaux).
        #[arg(long)]
        bound: usize,
    },
    /// Draws the input with diagonals labelled.
    Render {
        /// Cells to highlight, e.g. `(1,3),(2,3)`.
        #[arg(long)]
        path: Option<String>,
        /// Highlight the insertion path of this rim-hook instead.
        #[arg(long)]
        hook: Option<Cell>,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
}

/// Verification ranges; defaults are the reference ranges.
#[derive(Debug, Clone, clap::Args)]
pub struct Bounds {
    /// Shapes to check (repeatable).
    #[arg(long = "shape")]
    pub shapes: Vec<Partition>,
    /// Truncation degree for the hook-product check.
    #[arg(long, default_value_t = 10)]
    pub degree: usize,
    /// Truncation degree for the trace checks.
    #[arg(long, default_value_t = 8)]
    pub trace_degree: u64,
    /// Size bound for round-trip suites.
    #[arg(long, default_value_t = 8)]
    pub bound: usize,
    #[arg(long, default_value_t = 8)]
    pub commute_bound: usize,
    /// Largest shape size for the path suites.
    #[arg(long, default_value_t = 9)]
    pub small_shape_max: usize,
    /// Size bound for the path suites.
    #[arg(long, default_value_t = 6)]
    pub small_bound: usize,
    #[arg(long, default_value = "3,3,3")]
    pub gk_shape: Partition,
    #[arg(long, default_value_t = 5)]
    pub gk_sum: u32,
    #[arg(long, default_value_t = 3)]
    pub syt_n: usize,
    #[arg(long, default_value_t = 4)]
    pub perm_n: usize,
    #[arg(long, default_value_t = 8)]
    pub counterexample_bound: usize,
    #[arg(long, default_value_t = 2)]
    pub corner_trials: usize,
}

impl Bounds {
    fn config(&self, seed: u64, budget: EnumBudget) -> Config {
        let base = Config::default();
        Config {
            shapes: if self.shapes.is_empty() {
                base.shapes
            } else {
                self.shapes.clone()
            },
            stanley_degree: self.degree,
            gansner_degree: self.trace_degree,
            bijection_bound: self.bound,
            commute_bound: self.commute_bound,
            small_shape_max: self.small_shape_max,
            small_rpp_bound: self.small_bound,
            gk_shape: self.gk_shape.clone(),
            gk_entry_sum: self.gk_sum,
            syt_max_n: self.syt_n,
            perm_max_n: self.perm_n,
            counterexample_bound: self.counterexample_bound,
            seed,
            random_corner_trials: self.corner_trials,
            budget,
        }
    }
}

/// A domain-level failure: the message plus a machine-readable body.
#[derive(Debug)]
pub struct Failure {
    pub kind: String,
    pub message: String,
    pub detail: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let dbg = format!("{e:?}");
        let kind = dbg
            .split(|c: char| !c.is_alphanumeric())
            .next()
            .unwrap_or("Error")
            .to_string();
        Failure {
            kind,
            message: e.to_string(),
            detail: Value::Null,
        }
    }
}

fn io_failure(what: &str, e: io::Error) -> Failure {
    Failure {
        kind: "Io".into(),
        message: format!("{what}: {e}"),
        detail: Value::Null,
    }
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({"error": self.kind, "message": self.message, "detail": self.detail})
    }
}

/// Text and JSON renderings of one result.
struct Out {
    text: String,
    json: Value,
}

impl Out {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Out {
            text: text.into(),
            json,
        }
    }
}

fn read_input(cli: &Cli) -> Result<String, Failure> {
    match &cli.input {
        Some(p) => fs::read_to_string(p).map_err(|e| io_failure(&p.display().to_string(), e)),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| io_failure("stdin", e))?;
            Ok(s)
        }
    }
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn parse_grid_json(text: &str) -> Result<GridJson, Failure> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()).into())
}

fn parse_rpp(text: &str, shape: Option<&Partition>) -> Result<Rpp, Failure> {
    if is_json(text) {
        return Ok(Rpp::from_json(&parse_grid_json(text)?)?);
    }
    let rows = rimhook::format::parse_grid(text)?;
    Ok(match shape {
        Some(s) => Rpp::new(s.clone(), rows)?,
        None => Rpp::from_rows(rows)?,
    })
}

fn parse_tableau(text: &str, shape: Option<&Partition>) -> Result<Tableau, Failure> {
    if is_json(text) {
        return Ok(Tableau::from_json(&parse_grid_json(text)?)?);
    }
    let rows = rimhook::format::parse_grid(text)?;
    Ok(match shape {
        Some(s) if rows.is_empty() => Tableau::zero(s),
        Some(s) => Tableau::new(s.clone(), rows)?,
        None => Tableau::from_rows(rows)?,
    })
}

fn parse_pair(text: &str) -> Result<SsytPair, Failure> {
    let (p, q) = if is_json(text) {
        #[derive(serde::Deserialize)]
        struct Pair {
            p: GridJson,
            q: GridJson,
        }
        let pair: Pair = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        (Rpp::from_json(&pair.p)?, Rpp::from_json(&pair.q)?)
    } else {
        let (a, b) = text
            .split_once("--")
            .ok_or_else(|| Error::Parse("expected P, a line `--`, then Q".into()))?;
        (parse_rpp(a, None)?, parse_rpp(b, None)?)
    };
    Ok(SsytPair { p, q })
}

fn cells_json(cells: &[Cell]) -> Value {
    json!(cells)
}

fn cells_text(cells: &[Cell]) -> String {
    cells
        .iter()
        .map(Cell::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_cells(s: &str) -> Result<Vec<Cell>, Failure> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let end = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unterminated cell in {s:?}")))?;
        out.push(rest[..=end].trim().parse()?);
        rest = rest[end + 1..].trim_start_matches([',', ' ']);
    }
    Ok(out)
}

fn grid_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("grids serialise")
}

fn info(shape: &Partition) -> Result<Out, Failure> {
    let hooks: Vec<Vec<usize>> = (1..=shape.len() as i32)
        .map(|i| {
            (1..=shape.row_len(i) as i32)
                .map(|j| shape.hook_length(Cell::new(i, j)).expect("in shape"))
                .collect()
        })
        .collect();
    let corners = shape.corners()?;
    let regions: Vec<(i32, char)> = (shape.min_content()..=shape.max_content())
        .map(|k| {
            (
                k,
                shape
                    .region_of_content(k)
                    .expect("content in range")
                    .letter(),
            )
        })
        .collect();
    let revlex = shape.cells_revlex();
    let content = shape.cells_content_order();
    let mut text = format!("shape {shape}, {} cells\nhook lengths\n", shape.size());
    for row in &hooks {
        let r: Vec<String> = row.iter().map(usize::to_string).collect();
        text.push_str(&format!("  {}\n", r.join(" ")));
    }
    text.push_str(&format!("outer corners {}\n", cells_text(&corners.outer)));
    text.push_str(&format!("inner corners {}\n", cells_text(&corners.inner)));
    let reg: Vec<String> = regions.iter().map(|(k, c)| format!("{k}:{c}")).collect();
    text.push_str(&format!("regions {}\n", reg.join(" ")));
    text.push_str(&format!("rim-hook order {}\n", cells_text(&revlex)));
    text.push_str(&format!("content order {}\n", cells_text(&content)));
    let json = json!({
        "shape": shape,
        "size": shape.size(),
        "hooks": hooks,
        "corners": corners,
        "regions": regions.iter().map(|(k, c)| (k.to_string(), json!(c.to_string()))).collect::<serde_json::Map<_, _>>(),
        "rimhook_order": revlex,
        "content_order": content,
    });
    Ok(Out::new(text, json))
}

fn rimhooks(
    shape: &Partition,
    draw: bool,
    svg: Option<&PathBuf>,
    hook: Option<Cell>,
) -> Result<Out, Failure> {
    let hooks = shape.rim_hooks();
    let mut text = String::new();
    let mut list = Vec::new();
    for h in &hooks {
        text.push_str(&format!(
            "{} len {}: {}\n",
            h.anchor(),
            h.len(),
            cells_text(h.cells())
        ));
        if draw {
            let rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
            text.push_str(&render::ascii(&rows, &|u| h.contains(u)));
        }
        list.push(json!({"anchor": h.anchor(), "length": h.len(), "cells": h.cells()}));
    }
    if let Some(path) = svg {
        let h = match hook {
            Some(a) => shape.rim_hook(a)?,
            None => hooks.first().cloned().ok_or(Error::EmptyPartition)?,
        };
        fs::write(path, render::svg(shape, None, h.cells()))
            .map_err(|e| io_failure(&path.display().to_string(), e))?;
    }
    Ok(Out::new(text, Value::Array(list)))
}

fn reason_text(r: &FailureReason) -> String {
    match r {
        FailureReason::LeavesShape { cell } => format!("the path leaves the shape at {cell}"),
        FailureReason::Incompatible => "the path is not compatible".into(),
        FailureReason::NotReversePlanePartition => "the result is not monotone".into(),
    }
}

fn insert(pi: &Rpp, hook: Cell) -> Result<Out, Failure> {
    match insertion::try_insert_at(pi, hook)? {
        Insertion::Inserted { path, result } => Ok(Out::new(
            format!("path {path}\n{result}"),
            json!({"inserted": true, "path": path.cells(), "result": result}),
        )),
        Insertion::Failed(f) => {
            let witness = f
                .witness
                .map(|w| w.to_string())
                .unwrap_or_else(|| "none".into());
            Err(Failure {
                kind: "DoesNotInsert".into(),
                message: format!(
                    "h^{hook} does not insert: {} along {}; candidate before the path's end: {witness}",
                    reason_text(&f.reason),
                    f.path
                ),
                detail: json!({"inserted": false, "path": f.path.cells(), "reason": f.reason, "witness": f.witness}),
            })
        }
    }
}

fn factorize_cmd(pi: &Rpp, steps: bool) -> Out {
    let f = factorize(pi);
    let t = f.tableau();
    let mut text = format!("{t}anchors {}\n", cells_text(&f.anchors));
    let mut json = json!({"tableau": t, "anchors": f.anchors});
    if steps {
        let st = factorize_steps(pi);
        for (n, s) in st.iter().enumerate() {
            text.push_str(&format!(
                "step {}: candidate {}, path {}, rim-hook {}\n{}",
                n + 1,
                s.candidate,
                s.path,
                s.anchor,
                s.result
            ));
        }
        json["steps"] = grid_value(&st);
    }
    Out::new(text, json)
}

fn grid_out<T: std::fmt::Display + serde::Serialize>(x: &T) -> Out {
    Out::new(x.to_string(), grid_value(x))
}

fn kind_of(k: Kind) -> ChainKind {
    match k {
        Kind::Weak => ChainKind::WeakSouthEast,
        Kind::Strict => ChainKind::StrictNorthEast,
    }
}

fn verify_cmd(cli: &Cli, suite: Suite, bounds: &Bounds) -> Result<Out, Failure> {
    let cfg = bounds.config(cli.seed, EnumBudget::new(cli.budget));
    let names: Vec<String> = match suite {
        Suite::All => verify::SUITES.iter().map(|s| s.to_string()).collect(),
        s => vec![s.to_possible_value().expect("named").get_name().to_string()],
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| Failure {
            kind: "ThreadPool".into(),
            message: e.to_string(),
            detail: Value::Null,
        })?;
    let reports: Vec<verify::Report> = pool.install(|| {
        names
            .iter()
            .map(|n| verify::run(n, &cfg).expect("suite names match"))
            .collect()
    });
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    let json = grid_value(&reports);
    if reports.iter().all(|r| r.passed) {
        Ok(Out::new(text, json))
    } else {
        let failed: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.suite.as_str())
            .collect();
        Err(Failure {
            kind: "VerificationFailed".into(),
            message: format!("{text}failed: {}", failed.join(", ")),
            detail: json,
        })
    }
}

fn emit(cli: &Cli, out: &Out) -> Result<(), Failure> {
    let body = match cli.format {
        Format::Text => out.text.clone(),
        Format::Json => format!("{}\n", out.json),
    };
    write_out(cli, &body)
}

fn write_out(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(p) => fs::write(p, body).map_err(|e| io_failure(&p.display().to_string(), e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| io_failure("stdout", e))
        }
    }
}

/// Streams newline-delimited JSON; never materialises the whole family.
fn enumerate_cmd(
    cli: &Cli,
    family: Family,
    shape: &Partition,
    bound: usize,
) -> Result<(), Failure> {
    let budget = EnumBudget::new(cli.budget);
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).map_err(|e| io_failure(&p.display().to_string(), e))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    let mut put = |v: Value| writeln!(sink, "{v}").map_err(|e| io_failure("output", e));
    match family {
        Family::Rpps => {
            for pi in enumerate_rpps(shape, bound, &budget)? {
                put(grid_value(&pi))?;
            }
        }
        Family::Tableaux => {
            for t in enumerate_tableaux(shape, bound, &budget)? {
                put(grid_value(&t))?;
            }
        }
    }
    sink.flush().map_err(|e| io_failure("output", e))
}

fn render_cmd(
    pi: &Rpp,
    path: Option<&str>,
    hook: Option<Cell>,
    svg: Option<&PathBuf>,
) -> Result<Out, Failure> {
    let cells: Vec<Cell> = match (path, hook) {
        (Some(p), _) => {
            let cells = parse_cells(p)?;
            // validates the steps as a lattice path
            if cells.len() > 1 {
                let ne = LatticePath::new(cells.clone(), rimhook::Orientation::NorthEast);
                if let Err(e) = ne {
                    LatticePath::new(cells.clone(), rimhook::Orientation::SouthWest)
                        .map_err(|_| e)?;
                }
            }
            cells
        }
        (None, Some(a)) => insertion::try_insert_at(pi, a)?.path().cells().to_vec(),
        (None, None) => Vec::new(),
    };
    let text = render::ascii(pi.rows(), &|u| cells.contains(&u));
    if let Some(p) = svg {
        fs::write(p, render::svg(pi.shape(), Some(pi.rows()), &cells))
            .map_err(|e| io_failure(&p.display().to_string(), e))?;
    }
    Ok(Out::new(
        text.clone(),
        json!({"ascii": text, "highlight": cells_json(&cells)}),
    ))
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Result<(), Failure> {
    let out = match &cli.command {
        Command::Info { shape } => info(shape)?,
        Command::Rimhooks {
            shape,
            draw,
            svg,
            hook,
        } => rimhooks(shape, *draw, svg.as_ref(), *hook)?,
        Command::Validate { shape } => {
            let pi = parse_rpp(&read_input(cli)?, shape.as_ref())?;
            Out::new(
                format!("valid: shape {}, size {}\n", pi.shape(), pi.size()),
                json!({"valid": true, "shape": pi.shape(), "size": pi.size()}),
            )
        }
        Command::Trace => {
            let pi = parse_rpp(&read_input(cli)?, None)?;
            let tr = classical::trace_map(&pi);
            let text: String = tr.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
            let json: serde_json::Map<String, Value> =
                tr.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            Out::new(text, Value::Object(json))
        }
        Command::Candidates => {
            let pi = parse_rpp(&read_input(cli)?, None)?;
            let c = pi.candidates();
            Out::new(
                format!("{}\n", cells_text(&c)),
                json!({"candidates": c, "min": pi.min_candidate()}),
            )
        }
        Command::Insert { hook } => insert(&parse_rpp(&read_input(cli)?, None)?, *hook)?,
        Command::Factorize { steps } => factorize_cmd(&parse_rpp(&read_input(cli)?, None)?, *steps),
        Command::Build { shape } => {
            grid_out(&build(&parse_tableau(&read_input(cli)?, shape.as_ref())?))
        }
        Command::Xi { corner } => {
            let pi = parse_rpp(&read_input(cli)?, None)?;
            match corner {
                Some(x) => grid_out(&pakmap::xi_via(&pi, *x)?),
                None => grid_out(&pakmap::xi(&pi)),
            }
        }
        Command::Zeta { corner } => grid_out(&pakmap::zeta(
            &parse_rpp(&read_input(cli)?, None)?,
            *corner,
        )?),
        Command::Hg => grid_out(&classical::hg(&parse_rpp(&read_input(cli)?, None)?)),
        Command::HgInv { shape } => grid_out(&classical::hg_inv(&parse_tableau(
            &read_input(cli)?,
            shape.as_ref(),
        )?)),
        Command::Rsk => {
            let pair = classical::rsk(&parse_tableau(&read_input(cli)?, None)?);
            Out::new(
                format!("{}--\n{}", pair.p, pair.q),
                json!({"p": pair.p, "q": pair.q}),
            )
        }
        Command::RskInv { shape } => {
            let pair = parse_pair(&read_input(cli)?)?;
            let shape = match shape {
                Some(s) => s.clone(),
                None => {
                    let n = pair
                        .p
                        .rows()
                        .iter()
                        .chain(pair.q.rows())
                        .flatten()
                        .copied()
                        .max()
                        .unwrap_or(0);
                    Partition::square(n as usize)
                }
            };
            grid_out(&classical::rsk_inv(&pair, &shape)?)
        }
        Command::Diag { k } => {
            let mu = classical::diag_partition(&parse_rpp(&read_input(cli)?, None)?, *k);
            Out::new(format!("{mu}\n"), json!({"k": k, "partition": mu}))
        }
        Command::Gk { k, r, kind } => {
            let t = parse_tableau(&read_input(cli)?, None)?;
            let max = classical::gk_chain_max(&t, *k, *r, kind_of(*kind), cli.budget)?;
            let mu = classical::diag_partition(&build(&t), *k);
            let mu = if *kind == Kind::Strict {
                mu.conjugate()
            } else {
                mu
            };
            let sum: usize = mu.parts().iter().take(*r).sum();
            Out::new(
                format!("{max}\npartial sum of {mu}: {sum}\n"),
                json!({"max": max, "partition": mu, "partial_sum": sum}),
            )
        }
        Command::Verify { suite, bounds } => verify_cmd(cli, *suite, bounds)?,
        Command::Enumerate {
            family,
            shape,
            bound,
        } => return enumerate_cmd(cli, *family, shape, *bound),
        Command::Render { path, hook, svg } => render_cmd(
            &parse_rpp(&read_input(cli)?, None)?,
            path.as_deref(),
            *hook,
            svg.as_ref(),
        )?,
    };
    emit(cli, &out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_lists() {
        let c = parse_cells("(1,3),(2,3), (2,2)").unwrap();
        assert_eq!(c, vec![Cell::new(1, 3), Cell::new(2, 3), Cell::new(2, 2)]);
        assert!(parse_cells("(1,3").is_err());
        assert_eq!(parse_cells(&cells_text(&c)).unwrap(), c);
    }

    #[test]
    fn failure_kinds() {
        let f: Failure = Error::NotMonotone {
            cell: Cell::new(1, 2),
        }
        .into();
        assert_eq!(f.kind, "NotMonotone");
        let f: Failure = Error::EmptyPartition.into();
        assert_eq!(f.kind, "EmptyPartition");
    }

    #[test]
    fn pairs_parse_both_ways() {
        let pair = parse_pair("1 1 1 1\n2 2 3\n3\n--\n1 1 1 1\n2 3 3\n3\n").unwrap();
        let json = json!({"p": pair.p, "q": pair.q}).to_string();
        let again = parse_pair(&json).unwrap();
        assert_eq!(again.p, pair.p);
        assert_eq!(again.q, pair.q);
    }

    #[test]
    fn zero_tableau_from_shape() {
        let t = parse_tableau("", Some(&"2,1".parse().unwrap())).unwrap();
        assert!(t.is_zero());
        assert!(build(&t).is_zero());
    }
}
