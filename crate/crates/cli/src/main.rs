//! `fcat`: counting, enumeration, cross-family maps, verification and
//! SVG rendering for the three Fuss-Catalan families.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, 3 guard rail,
//! 4 schema violation, 5 invariant violation, 6 I/O failure.

mod svg;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use fuss_catalan::json::{DissectionJson, PartitionJson, RefinedCountTableJson, TableauJson};
use fuss_catalan::{
    count_partitions, count_positive, enumerate_dissections, enumerate_partitions,
    enumerate_regions, omega, omega_inverse, psi, psi_inverse, psi_prime, refined_count,
    Dissection, LabeledPolygon, Labeling, RefinedCountTable, ShiTableau, StaircasePartition,
};
use std::collections::BTreeSet;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD_RAIL: u8 = 3;
const EXIT_SCHEMA: u8 = 4;
const EXIT_INVARIANT: u8 = 5;
const EXIT_IO: u8 = 6;

/// Candidate ceiling for enumerator-backed commands; beyond it the
/// command refuses to run without --force.
const GUARD_RAIL_CANDIDATES: u128 = 100_000_000;

/// Verification sweeps refuse bounds past this point.
const VERIFY_N_MAX: usize = 6;
const VERIFY_M_MAX: usize = 4;

#[derive(Parser)]
#[command(
    name = "fcat",
    version,
    about = "Staircase partitions, Shi tableaux and polygon dissections: counts, maps, checks, figures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an exact count as a decimal string.
    Count {
        #[arg(long, value_enum)]
        family: CountFamily,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        /// Snake-index subset for the refined family, e.g. --J 1,3.
        #[arg(long = "J", value_delimiter = ',')]
        subset: Option<Vec<usize>>,
        /// With the refined family: print the whole table over all subsets.
        #[arg(long)]
        table: bool,
        /// Override the guard rail on enumerator-backed counts.
        #[arg(long)]
        force: bool,
        /// Emit a JSON object instead of the bare number.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream every member of a family as JSON lines.
    Enumerate {
        #[arg(long, value_enum)]
        family: EnumerateFamily,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(long, value_enum, default_value_t = LabelingArg::Alternating)]
        labeling: LabelingArg,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map one object across families (JSON in, JSON out).
    Map {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        /// Input file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; prints one JSON verdict per check.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render an object (partition, tableau, dissection or polygon) as SVG.
    Render {
        /// Input file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "svg")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountFamily {
    Partitions,
    Regions,
    Dissections,
    Positive,
    Refined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateFamily {
    Partitions,
    Regions,
    Dissections,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Partition,
    Tableau,
    Dissection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelingArg {
    Standard,
    Alternating,
}

impl From<LabelingArg> for Labeling {
    fn from(arg: LabelingArg) -> Self {
        match arg {
            LabelingArg::Standard => Labeling::Standard,
            LabelingArg::Alternating => Labeling::Alternating,
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
    fn guard(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_GUARD_RAIL,
            message: message.into(),
        }
    }
    fn schema(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_SCHEMA,
            message: message.into(),
        }
    }
    fn invariant(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVARIANT,
            message: message.into(),
        }
    }
    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Count {
            family,
            n,
            m,
            subset,
            table,
            force,
            json,
            out,
        } => {
            validate_parameters(n, m)?;
            let output = cmd_count(family, n, m, subset, table, force, json)?;
            write_output(out, &output)?;
            Ok(0)
        }
        Command::Enumerate {
            family,
            n,
            m,
            labeling,
            force,
            out,
        } => {
            validate_parameters(n, m)?;
            let output = cmd_enumerate(family, n, m, labeling.into(), force)?;
            write_output(out, &output)?;
            Ok(0)
        }
        Command::Map {
            from,
            to,
            input,
            out,
        } => {
            let text = read_input(input)?;
            let output = cmd_map(from, to, &text)?;
            write_output(out, &output)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            n_max,
            m_max,
            out,
        } => {
            if n_max == 0 || m_max == 0 || n_max > VERIFY_N_MAX || m_max > VERIFY_M_MAX {
                return Err(CliError::guard(format!(
                    "verification bounds must satisfy 1 <= n-max <= {VERIFY_N_MAX}, 1 <= m-max <= {VERIFY_M_MAX}"
                )));
            }
            let verdicts = verify::run_suite(suite, n_max, m_max);
            let mut lines = String::new();
            let mut all_ok = true;
            for v in &verdicts {
                all_ok &= v.passed();
                lines.push_str(&serde_json::to_string(v).expect("verdicts serialize"));
                lines.push('\n');
            }
            write_output(out, &lines)?;
            Ok(if all_ok { 0 } else { EXIT_VERIFICATION })
        }
        Command::Render { input, format, out } => {
            if format != "svg" {
                return Err(CliError::usage(format!("unsupported format {format:?}")));
            }
            let text = read_input(input)?;
            let output = cmd_render(&text)?;
            write_output(out, &output)?;
            Ok(0)
        }
    }
}

fn validate_parameters(n: usize, m: usize) -> Result<(), CliError> {
    if n == 0 || m == 0 {
        return Err(CliError::usage("n and m must be at least 1"));
    }
    Ok(())
}

/// Guard rail for enumerator-backed work, measured by the naive
/// candidate space of the tableau family.
fn check_guard_rail(n: usize, m: usize, force: bool) -> Result<(), CliError> {
    if force {
        return Ok(());
    }
    let mut candidates: u128 = 1;
    for _ in 0..n * (n + 1) / 2 {
        candidates = match candidates.checked_mul((m + 1) as u128) {
            Some(c) if c <= GUARD_RAIL_CANDIDATES => c,
            _ => {
                return Err(CliError::guard(format!(
                    "candidate space (m+1)^(n(n+1)/2) exceeds {GUARD_RAIL_CANDIDATES}; pass --force to override"
                )))
            }
        };
    }
    Ok(())
}

fn cmd_count(
    family: CountFamily,
    n: usize,
    m: usize,
    subset: Option<Vec<usize>>,
    table: bool,
    force: bool,
    json: bool,
) -> Result<String, CliError> {
    if subset.is_some() && family != CountFamily::Refined {
        return Err(CliError::usage("--J is only valid with --family refined"));
    }
    if table {
        if family != CountFamily::Refined {
            return Err(CliError::usage(
                "--table is only valid with --family refined",
            ));
        }
        if subset.is_some() {
            return Err(CliError::usage("--table and --J are mutually exclusive"));
        }
        let full = RefinedCountTable::from_formula(n, m);
        return Ok(to_line(&RefinedCountTableJson::from(&full)));
    }
    let count = match family {
        CountFamily::Partitions => count_partitions(n, m),
        CountFamily::Positive => count_positive(n, m),
        CountFamily::Refined => {
            let subset: BTreeSet<usize> = subset.unwrap_or_default().into_iter().collect();
            if let Some(&bad) = subset.iter().find(|&&i| i == 0 || i > n) {
                return Err(CliError::usage(format!(
                    "subset index {bad} outside 1..={n}"
                )));
            }
            refined_count(n, m, &subset)
        }
        CountFamily::Regions => {
            check_guard_rail(n, m, force)?;
            enumerate_regions(n, m).count().into()
        }
        CountFamily::Dissections => {
            check_guard_rail(n, m, force)?;
            enumerate_dissections(n, m, Labeling::Alternating)
                .count()
                .into()
        }
    };
    let family_name = match family {
        CountFamily::Partitions => "partitions",
        CountFamily::Regions => "regions",
        CountFamily::Dissections => "dissections",
        CountFamily::Positive => "positive",
        CountFamily::Refined => "refined",
    };
    if json {
        Ok(format!(
            "{}\n",
            serde_json::json!({ "family": family_name, "n": n, "m": m, "count": count.to_string() })
        ))
    } else {
        Ok(format!("{count}\n"))
    }
}

fn cmd_enumerate(
    family: EnumerateFamily,
    n: usize,
    m: usize,
    labeling: Labeling,
    force: bool,
) -> Result<String, CliError> {
    let mut lines = String::new();
    match family {
        EnumerateFamily::Partitions => {
            for p in enumerate_partitions(n, m) {
                lines.push_str(&to_line(&PartitionJson::from(&p)));
            }
        }
        EnumerateFamily::Regions => {
            check_guard_rail(n, m, force)?;
            for t in enumerate_regions(n, m) {
                lines.push_str(&to_line(&TableauJson::from(&t)));
            }
        }
        EnumerateFamily::Dissections => {
            check_guard_rail(n, m, force)?;
            for d in enumerate_dissections(n, m, labeling) {
                lines.push_str(&to_line(&DissectionJson::from(&d)));
            }
        }
    }
    Ok(lines)
}

fn to_line<T: serde::Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("wire structs serialize");
    line.push('\n');
    line
}

fn parse_partition(text: &str) -> Result<StaircasePartition, CliError> {
    let raw: PartitionJson =
        serde_json::from_str(text).map_err(|e| CliError::schema(e.to_string()))?;
    raw.try_into()
        .map_err(|e: fuss_catalan::PartitionError| CliError::invariant(e.to_string()))
}

fn parse_tableau(text: &str) -> Result<ShiTableau, CliError> {
    let raw: TableauJson =
        serde_json::from_str(text).map_err(|e| CliError::schema(e.to_string()))?;
    raw.try_into()
        .map_err(|e: fuss_catalan::TableauError| CliError::invariant(e.to_string()))
}

fn parse_dissection(text: &str) -> Result<Dissection, CliError> {
    let raw: DissectionJson =
        serde_json::from_str(text).map_err(|e| CliError::schema(e.to_string()))?;
    raw.try_into()
        .map_err(|e: fuss_catalan::DissectionError| CliError::invariant(e.to_string()))
}

/// Serializes an object and re-validates the serialized form under the
/// target family's checker before handing it out.
fn emit_partition(p: &StaircasePartition) -> Result<String, CliError> {
    let dto = PartitionJson::from(p);
    StaircasePartition::try_from(dto.clone())
        .map_err(|e| CliError::invariant(format!("output failed re-validation: {e}")))?;
    Ok(to_line(&dto))
}

fn emit_tableau(t: &ShiTableau) -> Result<String, CliError> {
    let dto = TableauJson::from(t);
    ShiTableau::try_from(dto.clone())
        .map_err(|e| CliError::invariant(format!("output failed re-validation: {e}")))?;
    Ok(to_line(&dto))
}

fn emit_dissection(d: &Dissection) -> Result<String, CliError> {
    let dto = DissectionJson::from(d);
    Dissection::try_from(dto.clone())
        .map_err(|e| CliError::invariant(format!("output failed re-validation: {e}")))?;
    Ok(to_line(&dto))
}

fn cmd_map(from: Kind, to: Kind, text: &str) -> Result<String, CliError> {
    let invariant = |e: fuss_catalan::BijectionError| CliError::invariant(e.to_string());
    match (from, to) {
        (Kind::Partition, Kind::Partition) => emit_partition(&parse_partition(text)?),
        (Kind::Partition, Kind::Tableau) => {
            emit_tableau(&ShiTableau::from_partition(&parse_partition(text)?))
        }
        (Kind::Partition, Kind::Dissection) => {
            emit_dissection(&psi_inverse(&parse_partition(text)?))
        }
        (Kind::Tableau, Kind::Partition) => emit_partition(&parse_tableau(text)?.to_partition()),
        (Kind::Tableau, Kind::Tableau) => emit_tableau(&parse_tableau(text)?),
        (Kind::Tableau, Kind::Dissection) => emit_dissection(&omega_inverse(&parse_tableau(text)?)),
        (Kind::Dissection, Kind::Partition) => {
            let d = parse_dissection(text)?;
            let p = match d.polygon().labeling() {
                Labeling::Alternating => psi(&d).map_err(invariant)?,
                Labeling::Standard => psi_prime(&d).map_err(invariant)?,
            };
            emit_partition(&p)
        }
        (Kind::Dissection, Kind::Tableau) => {
            let d = parse_dissection(text)?;
            emit_tableau(&omega(&d).map_err(invariant)?)
        }
        (Kind::Dissection, Kind::Dissection) => emit_dissection(&parse_dissection(text)?),
    }
}

fn cmd_render(text: &str) -> Result<String, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::schema(e.to_string()))?;
    let object = value
        .as_object()
        .ok_or_else(|| CliError::schema("expected a JSON object"))?;
    if object.contains_key("rows") {
        let t = parse_tableau(text)?;
        Ok(svg::tableau_svg(&t))
    } else if object.contains_key("parts") {
        let p = parse_partition(text)?;
        Ok(svg::partition_svg(&p))
    } else if object.contains_key("diagonals") {
        let d = parse_dissection(text)?;
        Ok(svg::polygon_svg(d.polygon(), d.diagonals(), false))
    } else if object.contains_key("labeling") {
        // bare polygon: draw it with its snake highlighted
        let raw: PolygonJson =
            serde_json::from_value(value).map_err(|e| CliError::schema(e.to_string()))?;
        if raw.n == 0 || raw.m == 0 {
            return Err(CliError::invariant("n and m must be at least 1"));
        }
        let polygon = LabeledPolygon::with_labeling(raw.n, raw.m, raw.labeling);
        Ok(svg::polygon_svg(&polygon, &[], true))
    } else {
        Err(CliError::schema(
            "unrecognized object: expected parts, rows, diagonals or labeling fields",
        ))
    }
}

#[derive(serde::Deserialize)]
struct PolygonJson {
    n: usize,
    m: usize,
    labeling: Labeling,
}

fn read_input(input: Option<PathBuf>) -> Result<String, CliError> {
    match input {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| CliError::io(format!("cannot read standard input: {e}")))?;
            Ok(buffer)
        }
    }
}

fn write_output(out: Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(&path, content)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
