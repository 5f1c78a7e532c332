use clap::{Parser, Subcommand};
use flatsets::cli::{self, CommandOutput, ExitStatus, Field};
use flatsets::codes::KasamiParams;
use flatsets::families::Family;
use std::path::PathBuf;
use std::process::ExitCode;

/// Flat {0, α}-sets of unit vectors from bipartite distance-regular graphs.
#[derive(Parser)]
#[command(name = "flatsets", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph, verify it and construct its vector set.
    Build {
        /// 8-cycle, 4-cube, folded-8-cube, vls, golay or kasami.
        graph: Option<String>,
        /// Kasami parameters, e.g. q=2,variant=i,j=1,m=1.
        #[arg(long)]
        kasami: Option<String>,
        /// Also run the tensor-rank check on large sets.
        #[arg(long)]
        deep: bool,
        /// Write adjacency and vector files here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search intersection arrays whose sets meet a flat bound.
    Search {
        #[arg(long, default_value_t = 200)]
        max_k: u64,
        /// real or complex; both when omitted.
        #[arg(long)]
        field: Option<String>,
    },
    /// Rebuild and check the table of largest sets from graphs.
    Table1 {
        #[arg(long)]
        deep: bool,
    },
    /// Write adjacency and vector files for a graph.
    Export {
        graph: Option<String>,
        #[arg(long)]
        kasami: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(ExitStatus::Usage.code() as u8)
}

fn family(graph: Option<String>, kasami: Option<String>) -> Result<Family, String> {
    match (graph.as_deref(), kasami) {
        (Some("kasami") | None, Some(spec)) => spec
            .parse::<KasamiParams>()
            .map(Family::Kasami)
            .map_err(|e| e.to_string()),
        (Some("kasami"), None) => Err("kasami needs --kasami q=<q>,variant=<i|ii>[,j=<j>,m=<m>]".into()),
        (Some(_), Some(_)) => Err("--kasami only applies to the kasami graph".into()),
        (Some(name), None) => name.parse::<Family>().map_err(|e| e.to_string()),
        (None, None) => Err("a graph name is required".into()),
    }
}

fn emit(out: CommandOutput) -> ExitCode {
    println!("{}", out.report.to_json());
    ExitCode::from(out.status.code() as u8)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match args.command {
        Command::Build {
            graph,
            kasami,
            deep,
            out,
        } => match family(graph, kasami) {
            Ok(f) => emit(cli::cmd_build(f, deep, out.as_deref())),
            Err(e) => usage(&e),
        },
        Command::Search { max_k, field } => {
            let field = match field.as_deref().map(str::parse::<Field>).transpose() {
                Ok(f) => f,
                Err(e) => return usage(&e.to_string()),
            };
            emit(cli::cmd_search(max_k, field))
        }
        Command::Table1 { deep } => emit(cli::cmd_table1(deep)),
        Command::Export { graph, kasami, out } => match family(graph, kasami) {
            Ok(f) => emit(cli::cmd_export(f, &out)),
            Err(e) => usage(&e),
        },
    }
}
