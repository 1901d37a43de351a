use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pg_core::classifiers::{psl2_numbers, rhs_predicate, sz_numbers, RhsArgs, TheoremId};
use pg_core::harness::{
    analyze_built, build_analysis_graph, default_corpus, load_corpus, run_all, run_theorem_case, AnalyzeOptions,
    HarnessOptions, VerificationReport,
};
use pg_core::patterns::{catalog, parse_pattern_list};
use pg_core::power_graph::{export_graph, ExportFormat};
use pg_core::Result;

#[derive(Parser)]
#[command(name = "pg", version, about = "Power graphs of finite groups and forbidden induced subgraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure flags, prime graph and pattern freeness of one group.
    Analyze {
        spec: String,
        /// Use the proper power graph (identity removed).
        #[arg(long)]
        proper: bool,
        /// Comma-separated pattern names; defaults to the whole catalog.
        #[arg(long)]
        patterns: Option<String>,
        /// Write the graph as `dot` or `json` to PATH.
        #[arg(long, num_args = 2, value_names = ["FORMAT", "PATH"])]
        export: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// Check one characterization, or `all`, over a corpus.
    Verify {
        theorem: String,
        /// Corpus file: one spec per line, `#` comments.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Raise the group order cap.
        #[arg(long)]
        allow_large: bool,
        /// Shortest cycle counted as an even hole.
        #[arg(long, default_value_t = 4)]
        min_hole_length: usize,
        #[arg(long)]
        json: bool,
    },
    /// Inspect the default corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Number-theoretic side conditions only.
    Numbers {
        #[command(subcommand)]
        family: NumbersFamily,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    List,
}

#[derive(Subcommand)]
enum NumbersFamily {
    Psl2 { q: u64 },
    Sz { q: u64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Analyze { spec, proper, patterns, export, json } => {
            let patterns = match patterns {
                Some(list) => parse_pattern_list(&list)?,
                None => catalog(),
            };
            let export = match export.as_deref() {
                Some([format, path]) => Some((format.parse::<ExportFormat>()?, PathBuf::from(path))),
                _ => None,
            };
            let (group, graph) = build_analysis_graph(&spec, proper)?;
            let report = analyze_built(&group, &graph, &AnalyzeOptions { proper, patterns });
            if let Some((format, path)) = export {
                std::fs::write(path, export_graph(&graph, format))?;
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                let f = &report.flags;
                println!("group       {}", report.group);
                println!("order       {}", report.order);
                println!("graph       {} ({} vertices, {} edges, {} twin classes)", report.graph, report.vertices, report.edges, report.twin_classes);
                println!("nilpotent   {}", f.is_nilpotent);
                println!("cyclic      {}", f.is_cyclic);
                println!("p-group     {}", f.is_p_group);
                println!("EPPO        {}", f.is_eppo);
                println!("EPO         {}", f.is_epo);
                println!("prime graph {:?} edges {:?}", report.prime_graph.vertices, report.prime_graph.edges);
                println!("chordal     {}", report.chordal.holds);
                println!("cograph     {}", report.cograph.holds);
                println!("chain       {}", report.chain.holds);
                for e in &report.patterns.entries {
                    match &e.witness {
                        None => println!("{:<11} free", e.pattern),
                        Some(w) => println!("{:<11} found {}", e.pattern, w.labels.join(" ~ ")),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { theorem, corpus, allow_large, min_hole_length, json } => {
            let corpus = match corpus {
                Some(path) => load_corpus(&path)?,
                None => default_corpus(),
            };
            let options = HarnessOptions { min_hole_length, allow_large, ..HarnessOptions::default() };
            let reports = if theorem == "all" {
                run_all(&corpus, &options)?
            } else {
                vec![run_theorem_case(&theorem, &corpus, &options)?]
            };
            if json {
                let text = if theorem == "all" {
                    serde_json::to_string_pretty(&reports)
                } else {
                    serde_json::to_string_pretty(&reports[0])
                };
                println!("{}", text.expect("report serializes"));
            } else {
                for r in &reports {
                    print_report(r);
                }
            }
            let mismatches: usize = reports.iter().map(|r| r.mismatches).sum();
            Ok(if mismatches == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Corpus { action: CorpusAction::List } => {
            let corpus = default_corpus();
            for e in &corpus.groups {
                let tag = |t: Option<bool>, name: &str| match t {
                    Some(true) => name.to_string(),
                    Some(false) => format!("non-{name}"),
                    None => "?".to_string(),
                };
                println!(
                    "{:<12} {:<18} {:<14} {}",
                    e.spec,
                    e.family,
                    tag(e.nilpotent_expected, "nilpotent"),
                    tag(e.eppo_expected, "eppo")
                );
            }
            for q in &corpus.sz_parameters {
                println!("{:<12} {:<18} rhs-only", format!("Sz({q})"), "suzuki");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Numbers { family } => {
            let (id, q, numbers) = match family {
                NumbersFamily::Psl2 { q } => (TheoremId::Psl2, q, psl2_numbers(q)?.to_vec()),
                NumbersFamily::Sz { q } => (TheoremId::Sz, q, sz_numbers(q)?.to_vec()),
            };
            let holds = rhs_predicate(id, RhsArgs::FieldOrder(q))?;
            let list: Vec<String> = numbers
                .iter()
                .map(|&n| format!("{n}{}", if pg_core::classifiers::is_admissible_cyclic_order(n) { "" } else { "!" }))
                .collect();
            println!("{id} q={q} numbers={} predicate={holds}", list.join(","));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_report(r: &VerificationReport) {
    let status = if r.mismatches == 0 { "ok" } else { "MISMATCH" };
    println!("{:<20} {:>4} entries {:>3} mismatches {:>7} ms  {status}", r.theorem, r.entries.len(), r.mismatches, r.ms);
    for e in r.entries.iter().filter(|e| !e.agree) {
        let side = e.graph_side.map_or("-".to_string(), |b| b.to_string());
        let witness = e.witness.as_ref().map_or(String::new(), |w| format!(" witness [{}]", w.join(", ")));
        println!("    {}: graph={side} rhs={}{witness}", e.group, e.rhs);
    }
}
