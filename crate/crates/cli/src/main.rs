//! `ys` — exact Young/Schur graph combinatorics from the command line.
//!
//! Exit codes: 0 on success (and passing verification), 1 when a
//! verification sweep fails (a report is still printed), 2 on usage
//! errors, including inadmissible parameters.

mod table_io;
mod verify;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use table_io::{from_distribution, from_empirical, render, Format, TableJson};
use young_schur::graph::{enumerate_layer, Diagram, DEFAULT_ORDINARY_CAP, DEFAULT_STRICT_CAP};
use young_schur::kerov::{kerov_coords, shifted_kerov_coords, shifted_up_function, up_function};
use young_schur::measures::{
    build_measure, AlphaParam, CoherentFamily, DistributionTable, SchurFamily, YoungFamily,
    ZParams,
};
use young_schur::rational::{parse_rational, Rational};
use young_schur::sample::{tv_distance, EmpiricalTable, ForcedSampler, GrowthTrace, Sampler};
use young_schur::{Partition, StrictPartition};

#[derive(Parser)]
#[command(
    name = "ys",
    version,
    about = "Exact combinatorics of the Young and Schur graphs: enumeration, \
             coherent measures, verification sweeps, and seeded growth sampling"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Young,
    Schur,
}

impl KindArg {
    fn default_cap(self) -> u64 {
        match self {
            KindArg::Young => DEFAULT_ORDINARY_CAP,
            KindArg::Schur => DEFAULT_STRICT_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Plancherel,
    PlancherelShifted,
    Z,
    Alpha,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Direct,
    ForcedSym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmitArg {
    Hist,
    Traces,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropArg {
    Coherence,
    DownEquality,
    PlanchUp,
    ZUp,
    LemmaDpaths,
    Proportionality,
    ClosedForms,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every diagram of one level, optionally with its path count
    Enum {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: u64,
        /// Append the path count (f for young, g for schur)
        #[arg(long)]
        dims: bool,
        #[arg(long, value_enum, default_value = "exact")]
        format: Format,
        /// Override the safety cap (24 for young, 40 for schur)
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Interlacing coordinates and rational function of one diagram
    Kerov {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Comma-separated decreasing parts; empty for the empty diagram
        #[arg(long, default_value = "")]
        parts: String,
    },
    /// Double a strict partition into its symmetric ordinary diagram
    Double {
        #[arg(long, default_value = "")]
        parts: String,
    },
    /// Exact level measure of a coherent family
    Measure {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u64,
        /// z + z' (z family)
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// z * z' (z family)
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        /// alpha (alpha family)
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, value_enum, default_value = "exact")]
        format: Format,
        /// Decimal digits in the csv display column
        #[arg(long, default_value_t = 12)]
        digits: usize,
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Run an exact verification sweep and print a JSON report
    Verify {
        #[arg(long, value_enum)]
        prop: PropArg,
        /// Upper weight bound of the sweep; each prop has its own default
        #[arg(long)]
        max_n: Option<u64>,
        /// alpha values to sweep (repeatable); default 3/16, 1/4, 5
        #[arg(long = "alpha")]
        alphas: Vec<String>,
        /// z parameter pairs "s,p" (repeatable); default -1,3/16 0,1 -1,5
        #[arg(long = "zparams", allow_hyphen_values = true)]
        zparams: Vec<String>,
    },
    /// Seeded growth sampling; emits a histogram or raw traces
    Sample {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Master seed; YS_SEED supplies the default
        #[arg(long, env = "YS_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "direct")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "hist")]
        emit: EmitArg,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, value_enum, default_value = "exact")]
        format: Format,
        #[arg(long, default_value_t = 12)]
        digits: usize,
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Total variation distance between a saved table and the exact measure
    Tv {
        /// JSON file previously produced by `measure` or `sample --emit hist`
        #[arg(long)]
        against: PathBuf,
        #[arg(long)]
        max_n: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CliResult = Result<ExitCode, String>;

fn run(cmd: Cmd) -> CliResult {
    match cmd {
        Cmd::Enum {
            kind,
            n,
            dims,
            format,
            max_n,
        } => cmd_enum(kind, n, dims, format, max_n),
        Cmd::Kerov { kind, parts } => cmd_kerov(kind, &parts),
        Cmd::Double { parts } => cmd_double(&parts),
        Cmd::Measure {
            family,
            n,
            s,
            p,
            alpha,
            format,
            digits,
            max_n,
        } => cmd_measure(family, n, s, p, alpha, format, digits, max_n),
        Cmd::Verify {
            prop,
            max_n,
            alphas,
            zparams,
        } => cmd_verify(prop, max_n, alphas, zparams),
        Cmd::Sample {
            kind,
            family,
            n,
            count,
            seed,
            method,
            emit,
            s,
            p,
            alpha,
            format,
            digits,
            max_n,
        } => cmd_sample(SampleArgs {
            kind,
            family,
            n,
            count,
            seed,
            method,
            emit,
            s,
            p,
            alpha,
            format,
            digits,
            max_n,
        }),
        Cmd::Tv { against, max_n } => cmd_tv(&against, max_n),
    }
}

fn check_cap(n: u64, kind: KindArg, max_n: Option<u64>) -> Result<(), String> {
    let cap = max_n.unwrap_or_else(|| kind.default_cap());
    if n > cap {
        Err(format!(
            "level {n} exceeds the safety cap {cap}; raise it with --max-n"
        ))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------
// enum
// ---------------------------------------------------------------------

fn cmd_enum(kind: KindArg, n: u64, dims: bool, format: Format, max_n: Option<u64>) -> CliResult {
    let cap = max_n.unwrap_or_else(|| kind.default_cap());
    match kind {
        KindArg::Young => enum_one::<Partition>(n, cap, dims, format),
        KindArg::Schur => enum_one::<StrictPartition>(n, cap, dims, format),
    }
}

fn enum_one<D: Diagram>(n: u64, cap: u64, dims: bool, format: Format) -> CliResult {
    let layer =
        enumerate_layer::<D>(n, cap).map_err(|e| format!("{e}; raise it with --max-n"))?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                parts: String,
                dim: String,
            }
            let rows: Vec<Row> = layer
                .vertices
                .iter()
                .map(|d| Row {
                    parts: d.to_string(),
                    dim: d.dim().to_string(),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        Format::Csv => {
            println!("{}", if dims { "parts,dim" } else { "parts" });
            for d in &layer.vertices {
                if dims {
                    println!("\"{d}\",{}", d.dim());
                } else {
                    println!("\"{d}\"");
                }
            }
        }
        Format::Exact => {
            for d in &layer.vertices {
                if dims {
                    println!("{d}\t{}", d.dim());
                } else {
                    println!("{d}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// kerov / double
// ---------------------------------------------------------------------

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_kerov(kind: KindArg, parts: &str) -> CliResult {
    match kind {
        KindArg::Young => {
            let p: Partition = parts.parse().map_err(|e: young_schur::Error| e.to_string())?;
            let c = kerov_coords(&p);
            println!("addable contents (x): {}", join(c.addable()));
            println!("removable contents (y): {}", join(c.removable()));
            println!("R(u) = {}", up_function(&p).render("u"));
        }
        KindArg::Schur => {
            let s: StrictPartition =
                parts.parse().map_err(|e: young_schur::Error| e.to_string())?;
            let c = shifted_kerov_coords(&s);
            println!("addable nonzero contents (x): {}", join(c.addable_nonzero()));
            println!("removable contents (y): {}", join(c.removable()));
            println!("R(v) = {}", shifted_up_function(&s).render("v"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_double(parts: &str) -> CliResult {
    let s: StrictPartition = parts.parse().map_err(|e: young_schur::Error| e.to_string())?;
    println!("{}", s.double());
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// measure
// ---------------------------------------------------------------------

fn parse_zparams(s: &Option<String>, p: &Option<String>) -> Result<ZParams, String> {
    let (Some(s), Some(p)) = (s, p) else {
        return Err("the z family needs both --s and --p".into());
    };
    let s = parse_rational(s).map_err(|e| e.to_string())?;
    let p = parse_rational(p).map_err(|e| e.to_string())?;
    ZParams::new(s, p).map_err(|e| e.to_string())
}

fn parse_alpha(alpha: &Option<String>) -> Result<AlphaParam, String> {
    let Some(a) = alpha else {
        return Err("the alpha family needs --alpha".into());
    };
    AlphaParam::new(parse_rational(a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn z_param_map(zp: &ZParams) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("s".to_string(), zp.sum().to_string()),
        ("p".to_string(), zp.product().to_string()),
    ])
}

fn alpha_param_map(a: &AlphaParam) -> BTreeMap<String, String> {
    BTreeMap::from([("alpha".to_string(), a.alpha().to_string())])
}

#[allow(clippy::too_many_arguments)]
fn cmd_measure(
    family: FamilyArg,
    n: u64,
    s: Option<String>,
    p: Option<String>,
    alpha: Option<String>,
    format: Format,
    digits: usize,
    max_n: Option<u64>,
) -> CliResult {
    let table = match family {
        FamilyArg::Plancherel => {
            check_cap(n, KindArg::Young, max_n)?;
            from_distribution(&build_measure(&YoungFamily::Plancherel, n), &BTreeMap::new())
        }
        FamilyArg::Z => {
            check_cap(n, KindArg::Young, max_n)?;
            let zp = parse_zparams(&s, &p)?;
            from_distribution(&build_measure(&YoungFamily::Z(zp.clone()), n), &z_param_map(&zp))
        }
        FamilyArg::PlancherelShifted => {
            check_cap(n, KindArg::Schur, max_n)?;
            from_distribution(&build_measure(&SchurFamily::Plancherel, n), &BTreeMap::new())
        }
        FamilyArg::Alpha => {
            check_cap(n, KindArg::Schur, max_n)?;
            let a = parse_alpha(&alpha)?;
            from_distribution(
                &build_measure(&SchurFamily::Alpha(a.clone()), n),
                &alpha_param_map(&a),
            )
        }
    };
    print!("{}", render(&table, format, digits));
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

fn cmd_verify(
    prop: PropArg,
    max_n: Option<u64>,
    alphas: Vec<String>,
    zparams: Vec<String>,
) -> CliResult {
    let aset: Vec<AlphaParam> = if alphas.is_empty() {
        ["3/16", "1/4", "5"]
            .iter()
            .map(|a| AlphaParam::new(parse_rational(a).unwrap()).unwrap())
            .collect()
    } else {
        alphas
            .iter()
            .map(|a| parse_alpha(&Some(a.clone())))
            .collect::<Result<_, _>>()?
    };
    let zset: Vec<ZParams> = if zparams.is_empty() {
        [("-1", "3/16"), ("0", "1"), ("-1", "5")]
            .iter()
            .map(|(s, p)| {
                ZParams::new(parse_rational(s).unwrap(), parse_rational(p).unwrap()).unwrap()
            })
            .collect()
    } else {
        zparams
            .iter()
            .map(|sp| {
                let (s, p) = sp
                    .split_once(',')
                    .ok_or_else(|| format!("--zparams wants \"s,p\", got {sp:?}"))?;
                parse_zparams(&Some(s.to_string()), &Some(p.to_string()))
            })
            .collect::<Result<_, _>>()?
    };

    let report = match prop {
        PropArg::Coherence => verify::coherence(max_n.unwrap_or(12), &zset, &aset),
        PropArg::DownEquality => verify::down_equality(max_n.unwrap_or(12)),
        PropArg::PlanchUp => verify::planch_up(max_n.unwrap_or(10)),
        PropArg::ZUp => verify::z_up(max_n.unwrap_or(10), &aset),
        PropArg::LemmaDpaths => verify::lemma_dpaths(max_n.unwrap_or(8))?,
        PropArg::Proportionality => verify::proportionality(max_n.unwrap_or(8), &aset),
        PropArg::ClosedForms => verify::closed_forms(max_n.unwrap_or(12), &zset, &aset),
    };
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------

struct SampleArgs {
    kind: KindArg,
    family: FamilyArg,
    n: u64,
    count: u64,
    seed: u64,
    method: MethodArg,
    emit: EmitArg,
    s: Option<String>,
    p: Option<String>,
    alpha: Option<String>,
    format: Format,
    digits: usize,
    max_n: Option<u64>,
}

#[derive(Serialize)]
struct TraceJson {
    family: String,
    seed: u64,
    index: u64,
    trace: Vec<String>,
}

fn trace_line<D: Diagram>(t: &GrowthTrace<D>) -> String {
    let json = TraceJson {
        family: t.family.clone(),
        seed: t.seed,
        index: t.index,
        trace: t.diagrams.iter().map(ToString::to_string).collect(),
    };
    serde_json::to_string(&json).unwrap()
}

fn sample_direct<F: CoherentFamily>(
    family: F,
    params: BTreeMap<String, String>,
    args: &SampleArgs,
) -> CliResult {
    let sampler = Sampler::new(family);
    match args.emit {
        EmitArg::Traces => {
            for i in 0..args.count {
                println!("{}", trace_line(&sampler.trace(args.n, args.seed, i)));
            }
        }
        EmitArg::Hist => {
            let mut emp = EmpiricalTable::new(args.n);
            for i in 0..args.count {
                let t = sampler.trace(args.n, args.seed, i);
                emp.record(t.final_diagram().clone())
                    .expect("trace ends at the requested level");
            }
            print!(
                "{}",
                render(&from_empirical(&emp, &params), args.format, args.digits)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sample(args: SampleArgs) -> CliResult {
    check_cap(args.n, args.kind, args.max_n)?;
    match (args.kind, args.family) {
        (KindArg::Young, FamilyArg::Plancherel) | (KindArg::Young, FamilyArg::Z) => {
            if args.method == MethodArg::ForcedSym {
                return Err("forced-sym growth needs --kind schur --family alpha".into());
            }
            if args.family == FamilyArg::Plancherel {
                sample_direct(YoungFamily::Plancherel, BTreeMap::new(), &args)
            } else {
                let zp = parse_zparams(&args.s, &args.p)?;
                sample_direct(YoungFamily::Z(zp.clone()), z_param_map(&zp), &args)
            }
        }
        (KindArg::Schur, FamilyArg::PlancherelShifted) => {
            if args.method == MethodArg::ForcedSym {
                return Err("forced-sym growth needs --family alpha".into());
            }
            sample_direct(SchurFamily::Plancherel, BTreeMap::new(), &args)
        }
        (KindArg::Schur, FamilyArg::Alpha) => {
            let a = parse_alpha(&args.alpha)?;
            match args.method {
                MethodArg::Direct => {
                    sample_direct(SchurFamily::Alpha(a.clone()), alpha_param_map(&a), &args)
                }
                MethodArg::ForcedSym => sample_forced(a, &args),
            }
        }
        (kind, family) => Err(format!(
            "family {family:?} does not live on the {kind:?} graph"
        )),
    }
}

fn sample_forced(a: AlphaParam, args: &SampleArgs) -> CliResult {
    let sampler = ForcedSampler::new(a.clone());
    match args.emit {
        EmitArg::Traces => {
            for i in 0..args.count {
                let t = sampler
                    .trace(args.n, args.seed, i)
                    .map_err(|e| e.to_string())?;
                println!("{}", trace_line(&t));
            }
        }
        EmitArg::Hist => {
            let mut emp = EmpiricalTable::new(args.n);
            for i in 0..args.count {
                let t = sampler
                    .trace(args.n, args.seed, i)
                    .map_err(|e| e.to_string())?;
                emp.record(t.undoubled_final().map_err(|e| e.to_string())?)
                    .expect("undoubled final sits at the requested level");
            }
            print!(
                "{}",
                render(
                    &from_empirical(&emp, &alpha_param_map(&a)),
                    args.format,
                    args.digits
                )
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------
// tv
// ---------------------------------------------------------------------

fn cmd_tv(path: &PathBuf, max_n: Option<u64>) -> CliResult {
    let file = File::open(path).map_err(|e| format!("cannot open {}: {e}", path.display()))?;
    let table: TableJson = serde_json::from_reader(BufReader::new(file))
        .map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    let tv = match table.kind.as_str() {
        "ordinary" => {
            check_cap(table.n, KindArg::Young, max_n)?;
            let fam = young_family_of(&table.params)?;
            tv_against::<Partition>(&table, &build_measure(&fam, table.n))?
        }
        "strict" => {
            check_cap(table.n, KindArg::Schur, max_n)?;
            let fam = schur_family_of(&table.params)?;
            tv_against::<StrictPartition>(&table, &build_measure(&fam, table.n))?
        }
        other => return Err(format!("unknown table kind {other:?}")),
    };
    println!("{tv}");
    Ok(ExitCode::SUCCESS)
}

fn young_family_of(params: &BTreeMap<String, String>) -> Result<YoungFamily, String> {
    if params.is_empty() {
        return Ok(YoungFamily::Plancherel);
    }
    if params.contains_key("s") && params.contains_key("p") {
        let zp = parse_zparams(&params.get("s").cloned(), &params.get("p").cloned())?;
        return Ok(YoungFamily::Z(zp));
    }
    Err(format!("cannot infer an ordinary family from params {params:?}"))
}

fn schur_family_of(params: &BTreeMap<String, String>) -> Result<SchurFamily, String> {
    if params.is_empty() {
        return Ok(SchurFamily::Plancherel);
    }
    if params.contains_key("alpha") {
        let a = parse_alpha(&params.get("alpha").cloned())?;
        return Ok(SchurFamily::Alpha(a));
    }
    Err(format!("cannot infer a strict family from params {params:?}"))
}

fn tv_against<D: Diagram>(
    file: &TableJson,
    exact: &DistributionTable<D>,
) -> Result<Rational, String> {
    if file.total.is_some() {
        let mut emp = EmpiricalTable::new(file.n);
        for e in &file.entries {
            let d: D = e
                .parts
                .parse()
                .map_err(|err: young_schur::Error| err.to_string())?;
            emp.record_many(d, e.count.unwrap_or(0))
                .map_err(|err| err.to_string())?;
        }
        return tv_distance(&emp, exact).map_err(|e| e.to_string());
    }
    let mut probs: BTreeMap<D, Rational> = BTreeMap::new();
    for e in &file.entries {
        let d: D = e
            .parts
            .parse()
            .map_err(|err: young_schur::Error| err.to_string())?;
        if d.weight() != file.n {
            return Err(format!("entry {d} is not at level {}", file.n));
        }
        probs.insert(d, e.prob()?);
    }
    let mut acc = Rational::new(0.into(), 1.into());
    for (d, p) in exact.iter() {
        let stored = probs.remove(d).unwrap_or_else(|| Rational::new(0.into(), 1.into()));
        let diff = stored - p;
        acc += if diff < Rational::new(0.into(), 1.into()) {
            -diff
        } else {
            diff
        };
    }
    if let Some((d, _)) = probs.into_iter().next() {
        return Err(format!("entry {d} is not at level {}", file.n));
    }
    Ok(acc / Rational::new(2.into(), 1.into()))
}
