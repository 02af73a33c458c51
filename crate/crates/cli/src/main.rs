use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sepball::repro::{
    fig1, fig1_abs_sep_onset, fig1_classic_entry, fig1_csv, scan, scan_csv, table1, table1_csv,
    ParamRange, TABLE1_TOLERANCE,
};
use sepball::selfcheck::{run_selfcheck, DEFAULT_SEED};
use sepball::statefile::{load_state, LoadedState, DEFAULT_FILE_TOL};
use sepball::states::FamilyTag;
use sepball::svg::{fig1_svg, Marker};
use sepball::{classify, classify_spectrum_only, Error, Result};

#[derive(Parser)]
#[command(name = "sepball", version, about = "Separability and purity-ball diagnostics for qubit-qudit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a state read from a state file.
    Classify {
        #[arg(long)]
        input: PathBuf,
        /// Hermiticity and trace tolerance used when validating the file.
        #[arg(long, default_value_t = DEFAULT_FILE_TOL)]
        tol: f64,
        /// Write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Zero-discord abs-sep and classic-ball thresholds against the printed table.
    Table1 {
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Purity and ball bounds of the product family over p in [0, 1/2].
    Fig1 {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 501)]
        samples: usize,
    },
    /// Evaluate every criterion over a parameter grid of a family.
    Scan {
        #[arg(long)]
        family: String,
        /// `name=lo:hi:step`; repeat for a multi-dimensional grid.
        #[arg(long = "range", required = true)]
        ranges: Vec<String>,
        /// Fix a non-scanned parameter, `name=value`.
        #[arg(long = "set")]
        fixed: Vec<String>,
        #[arg(long)]
        csv: PathBuf,
    },
    /// Run the seeded property suites.
    Selfcheck {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn parse_assignment(s: &str) -> Result<(String, f64)> {
    let bad = || Error::Domain(format!("'{s}' must look like name=value"));
    let (k, v) = s.split_once('=').ok_or_else(bad)?;
    Ok((k.trim().to_string(), v.trim().parse().map_err(|_| bad())?))
}

fn cmd_classify(input: &Path, tol: f64, json: Option<&Path>) -> Result<ExitCode> {
    let id = input
        .file_stem()
        .map_or_else(|| input.display().to_string(), |s| s.to_string_lossy().into_owned());
    let report = match load_state(input, tol)? {
        LoadedState::Valid(rho) => classify(&rho, &id)?,
        LoadedState::NonNormal(s) => classify_spectrum_only(&s, &id)?,
    };
    print!("{report}");
    if let Some(path) = json {
        write_file(path, &report.to_json())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn fmt_opt(v: Option<f64>, digits: usize) -> String {
    v.map_or_else(|| "none".to_string(), |x| format!("{x:.digits$}"))
}

fn cmd_table1(csv: Option<&Path>) -> Result<ExitCode> {
    let rows = table1();
    println!(
        "{:>6}  {:>14} {:>14}  {:>9} {:>9}  {:>10} {:>10}",
        "|r2|", "p_abs", "p_ball", "printed", "printed", "|d_abs|", "|d_ball|"
    );
    for r in &rows {
        println!(
            "{:>6}  {:>14} {:>14}  {:>9} {:>9}  {:>10} {:>10}",
            r.r2_abs,
            fmt_opt(r.p_abs, 10),
            fmt_opt(r.p_ball, 10),
            fmt_opt(r.printed_p_abs, 5),
            fmt_opt(r.printed_p_ball, 5),
            fmt_opt(r.delta_abs(), 6),
            fmt_opt(r.delta_ball(), 6),
        );
    }
    let bad = rows.iter().filter(|r| !r.agrees()).count();
    if bad == 0 {
        println!("all rows agree with the printed endpoints within {TABLE1_TOLERANCE}");
    } else {
        println!("{bad} row(s) differ from the printed endpoints by more than {TABLE1_TOLERANCE}");
    }
    if let Some(path) = csv {
        write_file(path, &table1_csv(&rows))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_fig1(csv: &Path, svg: Option<&Path>, samples: usize) -> Result<ExitCode> {
    let rows = fig1(samples)?;
    write_file(csv, &fig1_csv(&rows))?;
    let onset = fig1_abs_sep_onset();
    let entry = fig1_classic_entry();
    println!("abs-sep onset        p = {onset:.10}  ((2 - sqrt 2)/4 = {:.10})", (2.0 - 2f64.sqrt()) / 4.0);
    println!("classic-ball entry   p = {entry:.10}  ((1 - 1/sqrt 3)/2 = {:.10})", (1.0 - 1.0 / 3f64.sqrt()) / 2.0);
    println!("wrote {} rows to {}", rows.len(), csv.display());
    if let Some(path) = svg {
        let markers = [
            Marker { p: onset, label: "(2-sqrt2)/4" },
            Marker { p: entry, label: "(1-1/sqrt3)/2" },
        ];
        write_file(path, &fig1_svg(&rows, Some((onset, 0.5)), &markers))?;
        println!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(family: &str, ranges: &[String], fixed: &[String], csv: &Path) -> Result<ExitCode> {
    let tag: FamilyTag = family.parse()?;
    let ranges = ranges
        .iter()
        .map(|r| r.parse::<ParamRange>())
        .collect::<Result<Vec<_>>>()?;
    let fixed = fixed
        .iter()
        .map(|s| parse_assignment(s))
        .collect::<Result<Vec<_>>>()?;
    let out = scan(tag, &ranges, &fixed)?;
    write_file(csv, &scan_csv(&out))?;
    println!("wrote {} rows to {}", out.rows.len(), csv.display());
    for n in &out.notes {
        println!("{n}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_selfcheck(seed: u64) -> ExitCode {
    let report = run_selfcheck(seed);
    println!("{report}");
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { input, tol, json } => cmd_classify(&input, tol, json.as_deref()),
        Command::Table1 { csv } => cmd_table1(csv.as_deref()),
        Command::Fig1 { csv, svg, samples } => cmd_fig1(&csv, svg.as_deref(), samples),
        Command::Scan {
            family,
            ranges,
            fixed,
            csv,
        } => cmd_scan(&family, &ranges, &fixed, &csv),
        Command::Selfcheck { seed } => Ok(cmd_selfcheck(seed)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
