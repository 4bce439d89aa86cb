//! chordalsep: recognize chordal subclasses defined by separator relations,
//! inspect separators and clique trees, and run the verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage,
//! parse or domain errors.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chordalsep::analysis::{classify_pair, helly_check_bruteforce, helly_check_triples};
use chordalsep::chordal::{build_clique_forest, is_chordal};
use chordalsep::graph::{parse_graphs, to_graph6, Graph, InputFormat};
use chordalsep::harness::{enumerate_graphs, render_json, render_text, run_all, Filter};
use chordalsep::patterns::{classify, pattern_occurrences, Catalog};

#[derive(Parser)]
#[command(
    name = "chordalsep",
    version,
    about = "Chordal graph subclass recognition via minimal vertex separators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership report for each input graph (chordal inputs only)
    Classify(InputArgs),
    /// Separator multiset and pairwise relation matrix (chordal inputs only)
    Separators(InputArgs),
    /// Clique tree (forest for disconnected graphs) as DOT or JSON
    Cliquetree(CliquetreeArgs),
    /// Helly check of the separator multiset (chordal inputs only)
    Helly(InputArgs),
    /// Induced occurrences of the seven cataloged patterns
    Patterns(InputArgs),
    /// Run the verification suites on an internally enumerated corpus
    Verify(VerifyArgs),
    /// Stream small graphs, one representative per isomorphism class
    Enumerate(EnumerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum FormatOpt {
    #[default]
    Auto,
    Graph6,
    Edgelist,
}

impl From<FormatOpt> for InputFormat {
    fn from(value: FormatOpt) -> InputFormat {
        match value {
            FormatOpt::Auto => InputFormat::Auto,
            FormatOpt::Graph6 => InputFormat::Graph6,
            FormatOpt::Edgelist => InputFormat::EdgeList,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum OutputOpt {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum FilterOpt {
    #[default]
    All,
    Connected,
    Chordal,
    ConnectedChordal,
}

impl From<FilterOpt> for Filter {
    fn from(value: FilterOpt) -> Filter {
        match value {
            FilterOpt::All => Filter::All,
            FilterOpt::Connected => Filter::Connected,
            FilterOpt::Chordal => Filter::Chordal,
            FilterOpt::ConnectedChordal => Filter::ConnectedChordal,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Input file; reads stdin when omitted
    path: Option<PathBuf>,
    /// Input format (auto: graph6 when the first byte is in the graph6 range)
    #[arg(long, value_enum, default_value_t)]
    format: FormatOpt,
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    output: OutputOpt,
}

#[derive(Args)]
struct CliquetreeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Tie-break seeds; one tree is emitted per seed
    #[arg(long, value_delimiter = ',', default_values_t = [0u64])]
    seeds: Vec<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest vertex count of the enumerated corpus
    #[arg(long = "max-n", default_value_t = 6)]
    max_n: usize,
    /// Comma-separated tie-break seeds for the invariance suite
    #[arg(long, value_delimiter = ',', default_values_t = (0..20u64).collect::<Vec<_>>())]
    seeds: Vec<u64>,
    #[arg(long, value_enum, default_value_t)]
    output: OutputOpt,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest vertex count (at most 8)
    #[arg(long = "max-n")]
    max_n: usize,
    #[arg(long, value_enum, default_value_t)]
    filter: FilterOpt,
}

/// Usage, parse or domain error: diagnostic on stderr, exit 2.
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(err: E) -> CliError {
        CliError(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Classify(args) => cmd_classify(&args),
        Command::Separators(args) => cmd_separators(&args),
        Command::Cliquetree(args) => cmd_cliquetree(&args),
        Command::Helly(args) => cmd_helly(&args),
        Command::Patterns(args) => cmd_patterns(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Enumerate(args) => cmd_enumerate(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError(message)) => {
            eprintln!("chordalsep: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_graphs(args: &InputArgs) -> Result<Vec<(Graph, Option<String>)>, CliError> {
    let text = match &args.path {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| CliError(e.to_string()))?;
            buf
        }
    };
    Ok(parse_graphs(&text, args.format.into())?)
}

fn require_text_or_json(args: &InputArgs) -> Result<bool, CliError> {
    match args.output {
        OutputOpt::Text => Ok(false),
        OutputOpt::Json => Ok(true),
        OutputOpt::Dot => Err(CliError("dot output is only available for cliquetree".into())),
    }
}

fn require_chordal(g: &Graph) -> Result<(), CliError> {
    if !is_chordal(g) {
        return Err(CliError("input graph is not chordal".into()));
    }
    Ok(())
}

fn display_name(g: &Graph, name: &Option<String>) -> String {
    match (name, to_graph6(g)) {
        (Some(n), Ok(g6)) => format!("{n} ({g6})"),
        (Some(n), Err(_)) => n.clone(),
        (None, Ok(g6)) => g6,
        (None, Err(_)) => format!("graph on {} vertices", g.n()),
    }
}

fn cmd_classify(args: &InputArgs) -> Result<ExitCode, CliError> {
    let json = require_text_or_json(args)?;
    for (g, name) in read_graphs(args)? {
        require_chordal(&g)?;
        let report = classify(&g)?;
        if json {
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
        } else {
            println!("graph {}", display_name(&g, &name));
            let classes = [
                ("i", &report.classes.i),
                ("ii", &report.classes.ii),
                ("iii", &report.classes.iii),
                ("iv", &report.classes.iv),
                ("v", &report.classes.v),
                ("vi", &report.classes.vi),
                ("helly", &report.classes.helly),
            ];
            for (id, verdict) in classes {
                match &verdict.witness {
                    Some(w) => println!(
                        "  {id:<5} non-member  ({} at {:?})",
                        w.pattern, w.vertices
                    ),
                    None => println!("  {id:<5} member"),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_separators(args: &InputArgs) -> Result<ExitCode, CliError> {
    let json = require_text_or_json(args)?;
    for (g, name) in read_graphs(args)? {
        require_chordal(&g)?;
        let family = chordalsep::chordal::separator_family(&g, 0)?;
        let sets: Vec<Vec<usize>> = family.iter().map(|s| s.iter().copied().collect()).collect();
        let matrix: Vec<Vec<String>> = (0..family.len())
            .map(|i| {
                (0..family.len())
                    .map(|j| {
                        if i == j {
                            ".".to_string()
                        } else {
                            classify_pair(family.get(i), family.get(j)).tag().to_string()
                        }
                    })
                    .collect()
            })
            .collect();
        if json {
            let value = serde_json::json!({
                "graph6": to_graph6(&g).ok(),
                "name": name,
                "separators": sets,
                "relations": matrix,
            });
            println!("{value}");
        } else {
            println!("graph {}", display_name(&g, &name));
            if family.is_empty() {
                println!("  separator multiset: (empty)");
                continue;
            }
            println!("  separator multiset:");
            for (i, s) in family.iter().enumerate() {
                println!("    S{i} = {s}");
            }
            let mut header = String::from("       ");
            for j in 0..family.len() {
                let _ = write!(header, " S{j:<3}");
            }
            println!("{header}");
            for (i, row) in matrix.iter().enumerate() {
                let mut line = format!("    S{i:<3}");
                for cell in row {
                    let _ = write!(line, " {cell:<4}");
                }
                println!("{line}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cliquetree(args: &CliquetreeArgs) -> Result<ExitCode, CliError> {
    for (g, name) in read_graphs(&args.input)? {
        require_chordal(&g)?;
        for &seed in &args.seeds {
            let tree = build_clique_forest(&g, seed)?;
            match args.input.output {
                OutputOpt::Json => {
                    let value = serde_json::json!({
                        "graph6": to_graph6(&g).ok(),
                        "name": name,
                        "seed": seed,
                        "cliques": tree.cliques.iter().map(|c| c.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>(),
                        "edges": tree.edges.iter().map(|e| serde_json::json!({
                            "a": e.a,
                            "b": e.b,
                            "separator": e.separator.iter().copied().collect::<Vec<_>>(),
                        })).collect::<Vec<_>>(),
                    });
                    println!("{value}");
                }
                OutputOpt::Text | OutputOpt::Dot => print!("{}", tree.to_dot()),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_helly(args: &InputArgs) -> Result<ExitCode, CliError> {
    let json = require_text_or_json(args)?;
    for (g, name) in read_graphs(args)? {
        require_chordal(&g)?;
        let family = chordalsep::chordal::separator_family(&g, 0)?;
        let report = if family.len() <= 20 {
            let fast = helly_check_triples(&family);
            let slow = helly_check_bruteforce(&family);
            debug_assert_eq!(fast.holds, slow.holds);
            slow
        } else {
            helly_check_triples(&family)
        };
        if json {
            let value = report.to_json(&family, None);
            println!("{}", serde_json::to_string(&value).expect("report serializes"));
        } else {
            println!("graph {}", display_name(&g, &name));
            if report.holds {
                println!("  Helly property: holds ({} separators)", family.len());
            } else {
                let indices = report.witness.clone().unwrap_or_default();
                let sets: Vec<String> = indices.iter().map(|&i| family.get(i).to_string()).collect();
                println!(
                    "  Helly property: fails, witness S{:?} = {}",
                    indices,
                    sets.join(", ")
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_patterns(args: &InputArgs) -> Result<ExitCode, CliError> {
    let json = require_text_or_json(args)?;
    let catalog = Catalog::standard();
    for (g, name) in read_graphs(args)? {
        let occurrences = pattern_occurrences(&g, &catalog);
        if json {
            let mut map = serde_json::Map::new();
            for (pattern, occurrence) in &occurrences {
                map.insert(
                    pattern.to_string(),
                    match occurrence {
                        Some(set) => serde_json::json!(set.iter().copied().collect::<Vec<_>>()),
                        None => serde_json::Value::Null,
                    },
                );
            }
            let value = serde_json::json!({
                "graph6": to_graph6(&g).ok(),
                "name": name,
                "patterns": map,
            });
            println!("{value}");
        } else {
            println!("graph {}", display_name(&g, &name));
            for (pattern, occurrence) in &occurrences {
                match occurrence {
                    Some(set) => println!("  {pattern:<9} present at {set}"),
                    None => println!("  {pattern:<9} absent"),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let results = run_all(args.max_n, &args.seeds)?;
    match args.output {
        OutputOpt::Json => print!("{}", render_json(&results)),
        OutputOpt::Text => print!("{}", render_text(&results)),
        OutputOpt::Dot => return Err(CliError("dot output is only available for cliquetree".into())),
    }
    if results.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<ExitCode, CliError> {
    let graphs = enumerate_graphs(args.max_n, args.filter.into())?;
    for g in &graphs {
        println!("{}", to_graph6(g).expect("enumerated graphs fit graph6"));
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
