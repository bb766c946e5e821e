use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use bidyadic_cli::report::{run_classify, run_invert, run_wave, ReportFile};
use bidyadic_cli::spec_file::scalar_from_str;
use bidyadic_cli::surface::run_surface;
use bidyadic_cli::{load_spec, CliError};

/// Exact laboratory for electromagnetic constitutive media: classify,
/// invert, solve for plane waves, and sample wave surfaces.
#[derive(Parser)]
#[command(name = "bidyadic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a medium: structural class, the 35-coefficient quartic,
    /// and the principal/skewon/axion decomposition
    Classify {
        /// Spec file path, or `gen:<family>` to draw from the seeded corpus
        spec: String,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit JSON instead of plain text
        #[arg(long)]
        json: bool,
        /// Add float mirrors next to the exact quartic coefficients
        #[arg(long)]
        float: bool,
        /// Seed for `gen:` specs
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Invert a medium exactly (closed form on rank-two recipes)
    Invert {
        /// Spec file path, or `gen:<family>`
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Solve for a plane wave with a given wave one-form
    Wave {
        /// Spec file path, or `gen:<family>`
        spec: String,
        /// The four rational components ν1 ν2 ν3 ν4 (nonzero overall)
        #[arg(long, num_args = 4, allow_hyphen_values = true,
              value_names = ["NU1", "NU2", "NU3", "NU4"])]
        nu: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample the wave surface as CSV: real wavenumber roots along a
    /// deterministic spread of exact unit rays
    Surface {
        /// Spec file path, or `gen:<family>`
        spec: String,
        /// Frequency (a rational, e.g. 3/2)
        #[arg(long)]
        frequency: String,
        /// Number of rays (at least 8)
        #[arg(long, default_value_t = 32)]
        resolution: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the frozen basis conventions as an auditable table
    DumpConventions,
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_report(report: &ReportFile, json: bool, out: Option<&Path>) -> Result<i32, CliError> {
    let text = if json { report.to_json() } else { report.render_text() };
    write_or_print(&text, out)?;
    Ok(report.exit_code())
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Classify { spec, out, json, float, seed } => {
            let input = load_spec(&spec, seed)?;
            let report = run_classify(&input, float)?;
            emit_report(&report, json, out.as_deref())
        }
        Command::Invert { spec, out, json, seed } => {
            let input = load_spec(&spec, seed)?;
            let report = run_invert(&input)?;
            emit_report(&report, json, out.as_deref())
        }
        Command::Wave { spec, nu, out, json, seed } => {
            let input = load_spec(&spec, seed)?;
            let nu: [String; 4] = nu
                .try_into()
                .map_err(|_| CliError::Parse("--nu takes exactly four components".to_string()))?;
            let report = run_wave(&input, &nu)?;
            emit_report(&report, json, out.as_deref())
        }
        Command::Surface { spec, frequency, resolution, out, seed } => {
            let input = load_spec(&spec, seed)?;
            let omega = scalar_from_str(&frequency, "--frequency")?;
            let csv = run_surface(&input, &omega, resolution)?;
            write_or_print(&csv, out.as_deref())?;
            Ok(0)
        }
        Command::DumpConventions => {
            print!("{}", bidyadic::convention::dump());
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let start = std::time::Instant::now();
    let code = match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    // Timing stays on stderr so reports remain byte-for-byte reproducible.
    eprintln!("elapsed: {:.3?}", start.elapsed());
    std::process::exit(code);
}
