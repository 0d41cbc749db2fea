//! Command-line front end.
//!
//! Exit codes: 0 success, 1 negative verdict or failed precondition,
//! 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use perfpairs::expr::{build, parse_expr, recognize};
use perfpairs::graph::{decode_graph6, encode_graph6, invariants};
use perfpairs::harness::{
    census, derive_l4_catalog, hunt_counterexamples, ingest_graph6, verify_graphs, verify_universal, witness_text,
    Predicate, Verdict, GENERATOR_MAX_ORDER,
};
use perfpairs::pairs::{classify_pair, theorem_collection, CollectionId, NamedClass, PairSpec, Property};
use perfpairs::perfect::{is_omega_colourable, is_perfect, is_perfect_definition};
use perfpairs::ramsey::{RamseyTable, Threshold};
use perfpairs::structure::{indep5_classify, l4_classify, l5_colour, mn_split, olariu_decompose, StructureError};
use perfpairs::Graph;

#[derive(Parser)]
#[command(name = "perfpairs", version, about = "Forbidden induced pairs for perfectness and ω-colourability")]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph as an expression, e.g. "co(K3+P4)".
    #[arg(long)]
    expr: Option<String>,
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
}

impl GraphInput {
    fn graph(&self) -> Result<Graph, String> {
        match (&self.expr, &self.g6) {
            (Some(e), _) => build(e).map_err(|err| format!("bad expression '{e}': {err}")),
            (_, Some(s)) => decode_graph6(s).map_err(|err| format!("bad graph6 '{s}': {err}")),
            _ => Err("give --expr or --g6".into()),
        }
    }
}

#[derive(Args)]
struct PairInput {
    /// The two forbidden graphs.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], required = true)]
    pair: Vec<String>,
    /// Read the pair as graph6 instead of expressions.
    #[arg(long)]
    pair_g6: bool,
}

impl PairInput {
    fn pair(&self) -> Result<PairSpec, String> {
        let one = |s: &String| {
            if self.pair_g6 {
                decode_graph6(s).map_err(|e| format!("bad graph6 '{s}': {e}"))
            } else {
                build(s).map_err(|e| format!("bad expression '{s}': {e}"))
            }
        };
        Ok(PairSpec::new(one(&self.pair[0])?, one(&self.pair[1])?))
    }
}

#[derive(Args)]
struct Scope {
    /// Largest order to enumerate.
    #[arg(long, default_value_t = 9)]
    nmax: usize,
    /// Allow order 10 (minutes of CPU time).
    #[arg(long)]
    large: bool,
}

impl Scope {
    fn n_max(&self) -> Result<usize, String> {
        if self.nmax > 9 && !self.large {
            return Err(format!("--nmax {} needs --large", self.nmax));
        }
        if self.nmax > GENERATOR_MAX_ORDER {
            return Err(format!(
                "--nmax {} is beyond the generator limit of {GENERATOR_MAX_ORDER}; pass graphs with --input",
                self.nmax
            ));
        }
        Ok(self.nmax)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its normal form, graph6 and shape.
    #[command(after_help = "Example:\n  perfpairs expr 'co(K3+P4)'")]
    Expr {
        text: String,
        /// Treat the input as graph6.
        #[arg(long)]
        g6: bool,
    },
    /// Invariants, perfectness or ω-colourability of one graph.
    #[command(after_help = "Example:\n  perfpairs check --expr C5 --perfect")]
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        perfect: bool,
        /// Use the subset-by-subset definition instead of odd holes.
        #[arg(long, requires = "perfect")]
        definition: bool,
        #[arg(long)]
        omega: bool,
    },
    /// Membership of a pair in every collection.
    #[command(after_help = "Example:\n  perfpairs classify --pair K1,3 P5")]
    Classify {
        #[command(flatten)]
        pair: PairInput,
    },
    /// The collection characterizing a class and property.
    #[command(after_help = "Example:\n  perfpairs theorem --class G5 --property perfect")]
    Theorem {
        #[arg(long)]
        class: NamedClass,
        #[arg(long)]
        property: Property,
        /// Allow finitely many exceptions.
        #[arg(long)]
        finite_exceptions: bool,
    },
    /// Check a property on every pair-free graph of a class.
    #[command(after_help = "Example:\n  perfpairs verify --pair 2K1+K2 D --class G5 --property omega --nmax 9")]
    Verify {
        #[command(flatten)]
        pair: PairInput,
        #[arg(long)]
        class: NamedClass,
        #[arg(long)]
        property: Property,
        #[command(flatten)]
        scope: Scope,
        /// Check the graphs of a graph6 file instead of enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Print the full report rather than the summary line.
        #[arg(long)]
        report: bool,
    },
    /// List counterexamples, one record per line.
    #[command(after_help = "Example:\n  perfpairs hunt --pair 4K1 D --class Goa --property perfect --nmax 6 --first")]
    Hunt {
        #[command(flatten)]
        pair: PairInput,
        #[arg(long)]
        class: NamedClass,
        #[arg(long)]
        property: Property,
        #[command(flatten)]
        scope: Scope,
        /// Stop after the smallest order with a counterexample.
        #[arg(long)]
        first: bool,
    },
    /// All pattern-free graphs satisfying predicates, up to isomorphism.
    #[command(after_help = "Example:\n  perfpairs census --free 4K1 K3 --pred connected alpha=3 not_omega not_odd_cycle --nmax 8")]
    Census {
        /// Forbidden induced subgraphs (expressions).
        #[arg(long, num_args = 1.., required = true)]
        free: Vec<String>,
        /// connected, perfect, not_perfect, omega, not_omega, odd_cycle,
        /// not_odd_cycle, alpha=K, alpha>=K, class=NAME.
        #[arg(long = "pred", num_args = 1..)]
        predicates: Vec<Predicate>,
        #[command(flatten)]
        scope: Scope,
    },
    /// Derive the twin-collapsed base catalog around an induced C5.
    #[command(after_help = "Example:\n  perfpairs catalog --nmax 9")]
    Catalog {
        #[command(flatten)]
        scope: Scope,
    },
    /// ω-colour a {kK1+K2, co(lK1+K2)}-free graph with a large clique.
    #[command(after_help = "Example:\n  perfpairs colour --expr K12 --k 3 --l 2")]
    Colour {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Structural decompositions.
    #[command(after_help = "Example:\n  perfpairs decompose --expr C5 --kind l4")]
    Decompose {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "olariu")]
        kind: DecomposeKind,
    },
    /// Ramsey numbers, thresholds and lower-bound witnesses.
    #[command(after_help = "Example:\n  perfpairs bounds threshold l5_omega 3 2")]
    Bounds {
        #[command(subcommand)]
        what: BoundsCommand,
        /// File of `R(k,l)=value` lines overriding the built-in table.
        #[arg(long, global = true)]
        overrides: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum DecomposeKind {
    Olariu,
    Mn,
    Indep5,
    L4,
}

#[derive(Subcommand)]
enum BoundsCommand {
    #[command(after_help = "Example:\n  perfpairs bounds ramsey 4 5")]
    Ramsey { k: u64, l: u64 },
    /// bipartite_kK1K2, indep5, multipartite_clique, mn_split,
    /// omega_kK1K2_Z1, omega_kK1K2_D, omega_co, l5_omega.
    #[command(after_help = "Example:\n  perfpairs bounds threshold indep5")]
    Threshold { name: Threshold, params: Vec<u64> },
    /// graph6 of a stored graph on R(k,l)-1 vertices with neither kK1 nor K_l.
    #[command(after_help = "Example:\n  perfpairs bounds witness 4 4")]
    Witness { k: u64, l: u64 },
}

/// Failure classes mapped to exit codes.
enum Failure {
    Verdict(String),
    Usage(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verdict(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn list(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Expr { text, g6 } => {
            let (normal, g) = if g6 {
                let g = decode_graph6(&text).map_err(usage)?;
                (None, g)
            } else {
                let e = parse_expr(&text).map_err(usage)?;
                (Some(e.to_string()), build(&text).map_err(usage)?)
            };
            let mut out = String::new();
            if let Some(n) = normal {
                out.push_str(&format!("expression: {n}\n"));
            }
            out.push_str(&format!(
                "graph6: {}\norder: {}\nedges: {}\nrecognized: {}\n",
                encode_graph6(&g),
                g.order(),
                g.edge_count(),
                recognize(&g)
            ));
            Ok(out)
        }
        Command::Check { input, perfect, definition, omega } => {
            let g = input.graph().map_err(Failure::Usage)?;
            let mut out = String::new();
            let mut negative = false;
            if !perfect && !omega {
                let inv = invariants(&g);
                out.push_str(&format!(
                    "order {} edges {} alpha {} omega {} chi {} connected {}\n",
                    g.order(),
                    g.edge_count(),
                    inv.alpha,
                    inv.omega,
                    inv.chi,
                    g.is_connected()
                ));
            }
            if perfect {
                let cert = if definition { is_perfect_definition(&g) } else { is_perfect(&g) }.map_err(usage)?;
                match &cert.witness {
                    None => out.push_str("perfect\n"),
                    Some(w) => {
                        negative = true;
                        out.push_str(&format!("imperfect; {}\n", witness_text(w)));
                    }
                }
            }
            if omega {
                let inv = invariants(&g);
                if is_omega_colourable(&g) {
                    out.push_str(&format!("omega-colourable; chi {} = omega {}\n", inv.chi, inv.omega));
                } else {
                    negative = true;
                    out.push_str(&format!("not omega-colourable; chi {} > omega {}\n", inv.chi, inv.omega));
                }
            }
            if negative {
                Err(Failure::Verdict(out))
            } else {
                Ok(out)
            }
        }
        Command::Classify { pair } => {
            let p = pair.pair().map_err(Failure::Usage)?;
            let v = classify_pair(&p);
            let mut out = format!("pair: {}\n", perfpairs::harness::pair_label(&p));
            for id in CollectionId::ALL {
                out.push_str(&format!("{}:{}\n", id.name(), if v.get(id) { "yes" } else { "no" }));
            }
            Ok(out)
        }
        Command::Theorem { class, property, finite_exceptions } => {
            let c = theorem_collection(class, property, finite_exceptions).map_err(usage)?;
            Ok(format!("{}\n", c.name()))
        }
        Command::Verify { pair, class, property, scope, input, report } => {
            let p = pair.pair().map_err(Failure::Usage)?;
            let r = match input {
                Some(path) => {
                    let graphs = ingest_graph6(&path).map_err(usage)?;
                    verify_graphs(&p, &class.spec(), property, &graphs)
                }
                None => verify_universal(&p, &class.spec(), property, scope.n_max().map_err(Failure::Usage)?),
            }
            .map_err(usage)?;
            let out = if report { r.render() } else { format!("{}\n", r.summary()) };
            match r.verdict {
                Verdict::AllHold => Ok(out),
                Verdict::Violated => Err(Failure::Verdict(out)),
            }
        }
        Command::Hunt { pair, class, property, scope, first } => {
            let p = pair.pair().map_err(Failure::Usage)?;
            let found = hunt_counterexamples(&p, &class.spec(), property, scope.n_max().map_err(Failure::Usage)?, first)
                .map_err(usage)?;
            let mut out: String = found.iter().map(|c| format!("{c}\n")).collect();
            out.push_str(&format!("found {}\n", found.len()));
            Ok(out)
        }
        Command::Census { free, predicates, scope } => {
            let patterns = free.iter().map(|s| build(s).map_err(usage)).collect::<Result<Vec<_>, _>>()?;
            let c = census(&patterns, &predicates, scope.n_max().map_err(Failure::Usage)?).map_err(usage)?;
            Ok(c.render())
        }
        Command::Catalog { scope } => {
            let c = derive_l4_catalog(scope.n_max().map_err(Failure::Usage)?).map_err(usage)?;
            Ok(c.render())
        }
        Command::Colour { input, k, l } => {
            let g = input.graph().map_err(Failure::Usage)?;
            match l5_colour(&g, k, l) {
                Ok(c) => Ok(c.certificate()),
                Err(e @ StructureError::Precondition(_)) => Err(Failure::Verdict(format!("{e}\n"))),
                Err(e) => Err(usage(e)),
            }
        }
        Command::Decompose { input, kind } => {
            let g = input.graph().map_err(Failure::Usage)?;
            let precondition = |e: StructureError| match e {
                StructureError::Precondition(_) => Failure::Verdict(format!("{e}\n")),
                other => usage(other),
            };
            Ok(match kind {
                DecomposeKind::Olariu => olariu_decompose(&g).certificate(),
                DecomposeKind::Mn => {
                    let s = mn_split(&g);
                    let side = |cs: &[u64]| {
                        cs.iter().map(|&c| list(perfpairs::graph::bits(c))).collect::<Vec<_>>().join(" | ")
                    };
                    format!("M: {}\nN: {}\n", side(&s.m), side(&s.n))
                }
                DecomposeKind::Indep5 => format!("{}\n", indep5_classify(&g).map_err(precondition)?.name()),
                DecomposeKind::L4 => l4_classify(&g).map_err(precondition)?.certificate(),
            })
        }
        Command::Bounds { what, overrides } => {
            let table = match overrides {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    RamseyTable::with_overrides(&text).map_err(usage)?
                }
                None => RamseyTable::default(),
            };
            match what {
                BoundsCommand::Ramsey { k, l } => Ok(format!("R({k},{l}) = {}\n", table.ramsey(k, l).map_err(usage)?)),
                BoundsCommand::Threshold { name, params } => {
                    Ok(format!("{} = {}\n", name.name(), table.threshold(name, &params).map_err(usage)?))
                }
                BoundsCommand::Witness { k, l } => match table.witness(k, l) {
                    Some(w) => Ok(format!("{}\n", encode_graph6(&w))),
                    None => Err(Failure::Verdict(format!("no stored witness for R({k},{l})\n"))),
                },
            }
        }
    }
}
