//! `sja` — command-line front end for the semijoin-algebra workbench.
//!
//! Exit codes: 0 success (and claim holds), 1 claim fails, 2 usage or
//! parse errors.

mod repl;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use semijoin::checks;
use semijoin::corpus;
use semijoin::database::Database;
use semijoin::distinguish::{self, Certificate, SynthesisBudget};
use semijoin::eval::evaluate;
use semijoin::game::{GameSpace, Side, SpoilerTree, Strategy};
use semijoin::parse::{parse_database, parse_expression, parse_tuple, render_database};
use semijoin::value::Tuple;

#[derive(Parser)]
#[command(
    name = "sja",
    version,
    about = "Evaluate semijoin-algebra expressions, decide comparison games, synthesize distinguishing expressions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an expression on a database and print the result relation
    Eval {
        /// database file
        db: PathBuf,
        /// expression text, or @FILE to read it from a file
        expr: String,
        /// make the exit code 0 iff the result is nonempty (1 otherwise)
        #[arg(long)]
        empty_check: bool,
        /// line-oriented output only
        #[arg(long)]
        machine: bool,
    },
    /// Decide the comparison game between two databases
    Game {
        db_a: PathBuf,
        db_b: PathBuf,
        /// starting tuple on the left side, e.g. "(a,1)" or "()"
        #[arg(long, default_value = "()")]
        left: String,
        /// starting tuple on the right side
        #[arg(long, default_value = "()")]
        right: String,
        /// number of rounds, or "inf"
        #[arg(long, default_value = "inf")]
        rounds: String,
        /// print the strategy certificate
        #[arg(long)]
        certificate: bool,
        /// line-oriented output
        #[arg(long)]
        machine: bool,
        /// play the game turn by turn on the terminal
        #[arg(long)]
        interactive: bool,
        /// which player the human controls in interactive mode
        #[arg(long, value_enum, default_value_t = HumanRole::Spoiler)]
        play: HumanRole,
    },
    /// Synthesize a separating expression or certify indistinguishability
    Distinguish {
        db_a: PathBuf,
        db_b: PathBuf,
        #[arg(long, default_value = "()")]
        left: String,
        #[arg(long, default_value = "()")]
        right: String,
        /// cap on the synthesis rank
        #[arg(long)]
        max_rank: Option<u32>,
        /// line-oriented output
        #[arg(long)]
        machine: bool,
    },
    /// List or emit the bundled benchmark databases
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
    /// Run a claim suite and print the table
    Check {
        /// the suite to run
        #[arg(long, default_value = "paper")]
        suite: String,
        /// comma-separated criterion ids to run (default: all)
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// List entry names and their claims
    List,
    /// Write an entry's database files into a directory
    Emit {
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HumanRole {
    Spoiler,
    Duplicator,
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. `sja ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_db(path: &Path) -> Result<Database, String> {
    let src =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_database(&src).map_err(|e| format!("{}:{e}", path.display()))
}

fn load_tuple(text: &str, what: &str) -> Result<Tuple, String> {
    parse_tuple(text).map_err(|e| format!("{what} tuple `{text}`: {e}"))
}

fn parse_rounds(text: &str) -> Result<Option<u32>, String> {
    if text == "inf" {
        Ok(None)
    } else {
        text.parse::<u32>()
            .map(Some)
            .map_err(|_| format!("--rounds must be a number or `inf`, got `{text}`"))
    }
}

/// When a tuple is rejected, show what would have been accepted.
fn space_hint(space: &GameSpace, side: Side) -> String {
    let elems: Vec<String> = space.elements(side).iter().map(|t| t.to_string()).collect();
    format!("valid tuples on the {side} side: {}", elems.join(" "))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Eval {
            db,
            expr,
            empty_check,
            machine,
        } => {
            let database = load_db(&db)?;
            let src = if let Some(path) = expr.strip_prefix('@') {
                fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
            } else {
                expr
            };
            let e = parse_expression(&src, database.schema(), database.vocab())
                .map_err(|e| e.to_string())?;
            let result = evaluate(&e, &database).map_err(|e| e.to_string())?;
            for t in result.iter() {
                println!("{t}");
            }
            if !machine {
                eprintln!("{} tuple(s), arity {}", result.len(), result.arity());
            }
            if empty_check && result.is_empty() {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Game {
            db_a,
            db_b,
            left,
            right,
            rounds,
            certificate,
            machine,
            interactive,
            play,
        } => {
            let a = load_db(&db_a)?;
            let b = load_db(&db_b)?;
            let space = GameSpace::new(&a, &b).map_err(|e| e.to_string())?;
            let lt = load_tuple(&left, "left")?;
            let rt = load_tuple(&right, "right")?;
            let rounds = parse_rounds(&rounds)?;
            if space.win0(&lt, &rt).is_err() {
                return Err(format!(
                    "starting configuration [{lt} | {rt}] is not playable; {}\n{}",
                    space_hint(&space, Side::Left),
                    space_hint(&space, Side::Right)
                ));
            }
            if interactive {
                let stdin = std::io::stdin();
                let stdout = std::io::stdout();
                repl::run(
                    &space,
                    lt,
                    rt,
                    rounds,
                    play == HumanRole::Duplicator,
                    &mut stdin.lock(),
                    &mut stdout.lock(),
                )
                .map_err(|e| e.to_string())?;
                return Ok(ExitCode::SUCCESS);
            }
            let verdict = match rounds {
                None => space.solve_infinite(&lt, &rt),
                Some(m) => space.solve_finite(&lt, &rt, m),
            }
            .map_err(|e| e.to_string())?;
            if machine {
                println!("winner={}", verdict.winner);
                println!("rank={}", verdict.rank);
            } else {
                println!("winner: {}", verdict.winner);
                println!("rank: {}", verdict.rank);
            }
            if certificate {
                print_strategy(&verdict.strategy, machine);
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Distinguish {
            db_a,
            db_b,
            left,
            right,
            max_rank,
            machine,
        } => {
            let a = load_db(&db_a)?;
            let b = load_db(&db_b)?;
            let lt = load_tuple(&left, "left")?;
            let rt = load_tuple(&right, "right")?;
            let mut budget = SynthesisBudget::default();
            if let Some(r) = max_rank {
                budget.max_rank = r;
            }
            let cert = distinguish::certify_with_budget(&a, &b, &lt, &rt, &budget)
                .map_err(|e| e.to_string())?;
            match cert {
                Certificate::Separation {
                    expr,
                    from,
                    rounds,
                    in_left,
                    in_right,
                } => {
                    if machine {
                        println!("verdict=separation");
                        println!("rounds={rounds}");
                        println!("from={from}");
                        println!("member_left={in_left}");
                        println!("member_right={in_right}");
                        println!("expr={expr}");
                    } else {
                        println!("separating expression (spoiler wins in {rounds} round(s), synthesized from the {from} side):");
                        println!("{expr}");
                        println!("membership of {lt} on the left:  {in_left}");
                        println!("membership of {rt} on the right: {in_right}");
                    }
                }
                Certificate::Indistinguishable { region } => {
                    if machine {
                        println!("verdict=indistinguishable");
                        println!("region_size={}", region.len());
                    } else {
                        println!(
                            "indistinguishable: the duplicator wins the infinite game; winning region has {} configuration(s)",
                            region.len()
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Corpus { cmd } => match cmd {
            CorpusCmd::List => {
                for entry in corpus::entries() {
                    println!("{:<18} {}", entry.name, entry.claim);
                }
                Ok(ExitCode::SUCCESS)
            }
            CorpusCmd::Emit { name, out } => {
                let entry = corpus::entry(&name).ok_or_else(|| {
                    format!("unknown corpus entry `{name}`; try `sja corpus list`")
                })?;
                fs::create_dir_all(&out)
                    .map_err(|e| format!("cannot create {}: {e}", out.display()))?;
                for (stem, db) in &entry.databases {
                    let path = out.join(format!("{stem}.db"));
                    fs::write(&path, render_database(db))
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    println!("{}", path.display());
                }
                Ok(ExitCode::SUCCESS)
            }
        },

        Cmd::Check { suite, only } => {
            if suite != "paper" {
                return Err(format!("unknown suite `{suite}`; available: paper"));
            }
            let filter: Option<Vec<String>> =
                only.map(|s| s.split(',').map(|p| p.trim().to_string()).collect());
            let rows: Vec<checks::CheckRow> = checks::run_paper_suite()
                .into_iter()
                .filter(|r| {
                    filter
                        .as_ref()
                        .is_none_or(|ids| ids.iter().any(|i| i == r.id))
                })
                .collect();
            if rows.is_empty() {
                return Err("no criteria matched the --only filter".into());
            }
            let mut all_pass = true;
            for row in &rows {
                all_pass &= row.pass;
                println!(
                    "criterion {:>2}  {:<26} {}  [{:>10.1?}]  {}",
                    row.id,
                    row.name,
                    row.status(),
                    row.elapsed,
                    row.detail
                );
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn print_strategy(strategy: &Strategy, machine: bool) {
    match strategy {
        Strategy::Spoiler(None) => {
            if machine {
                println!("certificate=zero-round");
            } else {
                println!("the configuration already fails the 0-round conditions; no move needed");
            }
        }
        Strategy::Spoiler(Some(tree)) => {
            if machine {
                println!("certificate=spoiler-tree");
                println!("tree_depth={}", tree.depth());
                println!("tree_nodes={}", tree.node_count());
            } else {
                println!("spoiler strategy (depth {}):", tree.depth());
                print_tree(tree, 0);
            }
        }
        Strategy::Duplicator { rounds, region } => {
            if machine {
                println!("certificate=duplicator-region");
                println!("region_size={}", region.len());
            } else {
                match rounds {
                    None => println!(
                        "duplicator holds {} configuration(s) forever:",
                        region.len()
                    ),
                    Some(m) => println!(
                        "duplicator holds {} configuration(s) for {m} round(s):",
                        region.len()
                    ),
                }
                for cfg in region {
                    println!("  {cfg}");
                }
            }
        }
    }
}

fn print_tree(tree: &SpoilerTree, indent: usize) {
    let pad = "  ".repeat(indent);
    println!("{pad}spoiler plays {} on the {} side", tree.mv, tree.side);
    if tree.replies.is_empty() {
        println!("{pad}  no legal answer: the duplicator is stuck");
        return;
    }
    for (answer, sub) in &tree.replies {
        println!("{pad}  if the duplicator answers {answer}:");
        print_tree(sub, indent + 2);
    }
}
