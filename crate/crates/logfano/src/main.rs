use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use logfano::commands::{self, Document, Status};
use logfano::config::{Format, JobConfig};
use logfano::input::InputError;

/// Bodies of ample angles and tail blow-ups of log pairs on rational surfaces.
#[derive(Parser)]
#[command(name = "logfano", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice, canonical class, boundary shape and budget.
    Describe(Job),
    /// The body of ample angles of a pair and the origin verdict.
    Aa(Job),
    /// Classify a tail sequence of --h right and --v left blow-ups.
    Tail(Job),
    /// Tail verdicts over F_n bases and all h + v up to --max-tails.
    Sweep(Job),
    /// Run the self-verification suite (exit 1 on any failure).
    Verify(Job),
    /// Re-verify every certificate in a JSON document.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

#[derive(clap::Args)]
struct Job {
    /// JSON file with the same keys as the flags; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    job: JobConfig,
}

fn load(job: Job) -> Result<JobConfig, InputError> {
    let Some(path) = job.config else {
        return Ok(job.job);
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| InputError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let file: JobConfig = serde_json::from_str(&text)
        .map_err(|e| InputError::Invalid(format!("config {}: {e}", path.display())))?;
    Ok(job.job.over(file))
}

fn write_out(dir: &Path, doc: &Document) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let json = serde_json::to_string_pretty(&doc.json).expect("values serialize") + "\n";
    std::fs::write(dir.join(format!("{}.json", doc.command)), json)?;
    std::fs::write(dir.join(format!("{}.txt", doc.command)), &doc.text)?;
    if let Some(csv) = &doc.csv {
        std::fs::write(dir.join(format!("{}.csv", doc.command)), csv)?;
    }
    Ok(())
}

fn emit(doc: &Document, format: Format) {
    match format {
        Format::Text => print!("{}", doc.text),
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc.json).expect("values serialize")),
        Format::Csv => match &doc.csv {
            Some(csv) => print!("{csv}"),
            None => print!("{}", doc.text),
        },
    }
}

fn run(cli: Cli) -> Result<(Document, Format, Option<PathBuf>), InputError> {
    let (config, f): (JobConfig, fn(&JobConfig) -> Result<Document, InputError>) = match cli.command {
        Command::Describe(j) => (load(j)?, commands::describe),
        Command::Aa(j) => (load(j)?, commands::aa),
        Command::Tail(j) => (load(j)?, commands::tail),
        Command::Sweep(j) => (load(j)?, commands::sweep),
        Command::Verify(j) => (load(j)?, commands::verify),
        Command::Check { file, format } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| InputError::Invalid(format!("cannot read {}: {e}", file.display())))?;
            return Ok((commands::check(&text)?, format.unwrap_or_default(), None));
        }
    };
    let doc = f(&config)?;
    Ok((doc, config.format(), config.out.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((doc, format, out)) => {
            if let Some(dir) = out {
                if let Err(e) = write_out(&dir, &doc) {
                    eprintln!("error: cannot write to {}: {e}", dir.display());
                    return ExitCode::from(Status::BadInput as u8);
                }
            }
            emit(&doc, format);
            ExitCode::from(doc.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::BadInput as u8)
        }
    }
}
