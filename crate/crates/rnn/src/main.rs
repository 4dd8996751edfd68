//! `rnn` — rainbow neighbourhood numbers of small graphs, exactly.
//!
//! Exit codes: 0 success/verified, 1 verification mismatch, 2 input error,
//! 3 budget exhaustion.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rnn::colouring::{clique_number, convention_colourings, SearchBudget, DEFAULT_BUDGET};
use rnn::families::{generate, join_k1, Family, FamilySpec};
use rnn::graph::{
    emit_dimacs, emit_edge_list, emit_graph6, parse_dimacs, parse_edge_list, parse_graph6, Graph,
};
use rnn::rainbow::{
    check_clique_bound, check_join_lemma, check_lemma_3_2, check_theorem_1_1, check_theorem_2_1,
    rainbow_count, rainbow_range, verify_prop_2_3, verify_prop_2_4, verify_prop_2_5,
    verify_thm_1_2, FamilyCheck, RainbowError, RainbowOptions,
};
use rnn::random::random_connected_corpus;
use rnn::report::{family_csv, family_text, range_text, RunReport};
use serde::Serialize;
use std::io::Read;
use std::time::Instant;

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "rnn", version, about = "Exact rainbow neighbourhood numbers of small graphs")]
struct Cli {
    /// Search-node budget (overrides the RNN_BUDGET environment variable).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Worker threads; results are identical for any value.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Dimacs,
    Edges,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file, or "-" for stdin.
    input: Option<String>,
    /// Generate a named family instead: family:params, e.g. cycle:7,
    /// complete_bipartite:3,4 or join_k1:cycle:5.
    #[arg(long, value_name = "SPEC", conflicts_with = "input")]
    gen: Option<String>,
    /// Input format (auto-detected by default).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Reject disconnected graphs.
    #[arg(long)]
    require_connected: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, size, ω, χ, r⁻, r⁺ and the convention value of one graph.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
        /// Include witness colourings in the output.
        #[arg(long)]
        witness: bool,
    },
    /// Check a named result over a family range or random corpus.
    Verify {
        /// One of: thm1.1, thm1.2, lem1.3, thm2.1, prop2.3, prop2.4,
        /// prop2.5, lem3.2, clique-bound.
        id: String,
        /// Odd parameter range A..B (prop2.3, prop2.4).
        #[arg(long, value_name = "A..B")]
        odd: Option<String>,
        /// Parameter range A..B (prop2.5).
        #[arg(long, value_name = "A..B")]
        n: Option<String>,
        /// Family sweep family:A..B (e.g. path:2..10).
        #[arg(long, value_name = "FAM:A..B")]
        gen: Option<String>,
        /// Use COUNT seeded random connected graphs as the corpus.
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// RNG seed; required with --random.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Emit a convention colouring and its rainbow report (JSON).
    Colour {
        #[command(flatten)]
        input: InputArgs,
        /// Emit every convention colouring.
        #[arg(long)]
        all: bool,
        /// Emit an r⁺-attaining colouring instead.
        #[arg(long)]
        maximize: bool,
    },
    /// Rainbow report for a user-supplied colouring (JSON
    /// {"k":…,"assignment":[…]}; file or "-").
    Rainbow {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "FILE")]
        colouring: String,
    },
    /// Re-emit the graph in another format.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        to: Format,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let budget = cli
        .budget
        .or_else(|| std::env::var("RNN_BUDGET").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(DEFAULT_BUDGET);
    let opts = RainbowOptions {
        budget: SearchBudget::new(budget),
        threads: cli.threads.max(1),
        prune_low_degree: true,
    };
    match &cli.cmd {
        Cmd::Invariants { input, json, witness } => cmd_invariants(input, *json, *witness, &opts),
        Cmd::Verify { id, odd, n, gen, random, max_n, seed, json, csv } => {
            cmd_verify(id, odd, n, gen, *random, *max_n, *seed, *json, *csv, &opts)
        }
        Cmd::Colour { input, all, maximize } => cmd_colour(input, *all, *maximize, &opts),
        Cmd::Rainbow { input, colouring } => cmd_rainbow(input, colouring, &opts),
        Cmd::Convert { input, to } => cmd_convert(input, *to),
    }
    .unwrap_or_else(|(code, msg)| {
        eprintln!("error: {msg}");
        code
    })
}

type CliError = (i32, String);

fn input_err(msg: impl Into<String>) -> CliError {
    (EXIT_INPUT, msg.into())
}

// ---------------------------------------------------------------------------
// Input loading
// ---------------------------------------------------------------------------

fn parse_gen_spec(spec: &str) -> Result<Graph, CliError> {
    if let Some(rest) = spec.strip_prefix("join_k1:") {
        return Ok(join_k1(&parse_gen_spec(rest)?).with_label(format!("join_k1:{rest}")));
    }
    let (name, params) = spec
        .split_once(':')
        .ok_or_else(|| input_err(format!("bad --gen spec {spec:?}: expected family:params")))?;
    let family = Family::from_name(name)
        .ok_or_else(|| input_err(format!("unknown family {name:?}")))?;
    let params: Vec<usize> = params
        .split([',', 'x'])
        .map(|t| t.parse().map_err(|_| input_err(format!("bad parameter {t:?}"))))
        .collect::<Result<_, _>>()?;
    let fs = FamilySpec::new(family, params).map_err(|e| input_err(e.to_string()))?;
    generate(&fs).map_err(|e| input_err(e.to_string()))
}

fn detect_format(text: &str) -> Format {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let tag = first.trim_start().chars().next().unwrap_or(' ');
    if (tag == 'c' || tag == 'p') && first.split_whitespace().count() > 1 {
        Format::Dimacs
    } else if text.split_whitespace().all(|t| t.parse::<usize>().is_ok())
        && !text.trim().is_empty()
    {
        Format::Edges
    } else {
        Format::Graph6
    }
}

fn load_graph(args: &InputArgs) -> Result<(Graph, String), CliError> {
    let (graph, desc) = if let Some(spec) = &args.gen {
        (parse_gen_spec(spec)?, spec.clone())
    } else {
        let path = args
            .input
            .as_deref()
            .ok_or_else(|| input_err("no input: give a file, \"-\", or --gen"))?;
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input_err(e.to_string()))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| input_err(format!("{path}: {e}")))?
        };
        let format = args.format.unwrap_or_else(|| detect_format(&text));
        let g = match format {
            Format::Graph6 => parse_graph6(text.trim()).map_err(|e| input_err(e.to_string()))?,
            Format::Dimacs => {
                let (g, warnings) = parse_dimacs(&text).map_err(|e| input_err(e.to_string()))?;
                for w in warnings {
                    eprintln!("warning: {w}");
                }
                g
            }
            Format::Edges => parse_edge_list(&text).map_err(|e| input_err(e.to_string()))?,
        };
        (g, path.to_string())
    };
    if args.require_connected && !graph.is_connected() {
        return Err(input_err(format!("{desc}: graph is not connected")));
    }
    Ok((graph, desc))
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

fn cmd_invariants(
    input: &InputArgs,
    json: bool,
    witness: bool,
    opts: &RainbowOptions,
) -> Result<i32, CliError> {
    let (g, desc) = load_graph(input)?;
    let started = Instant::now();
    let r = rainbow_range(&g, opts);
    let omega = clique_number(&g, opts.budget);
    let exact = r.exact && omega.exact;
    if json {
        #[derive(Serialize)]
        struct Payload<'a> {
            n: usize,
            m: usize,
            omega: usize,
            #[serde(flatten)]
            range: &'a rnn::RainbowRange,
        }
        let mut range = r.clone();
        if !witness {
            range.min_witness = None;
            range.max_witness = None;
        }
        let payload = serde_json::to_value(Payload {
            n: g.n(),
            m: g.edge_count(),
            omega: omega.omega,
            range: &range,
        })
        .unwrap();
        let report = RunReport::new(
            "invariants",
            &desc,
            opts.budget.max_nodes,
            started.elapsed().as_millis(),
            exact,
            payload,
        );
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print!("{}", range_text(&desc, g.n(), g.edge_count(), omega.omega, &r));
        if witness {
            if let Some(w) = &r.min_witness {
                println!("min witness  {}", serde_json::to_string(w).unwrap());
            }
            if let Some(w) = &r.max_witness {
                println!("max witness  {}", serde_json::to_string(w).unwrap());
            }
        }
    }
    Ok(if exact { EXIT_OK } else { EXIT_BUDGET })
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct GraphVerdict {
    graph: String,
    pass: bool,
    details: String,
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| input_err(format!("bad range {s:?}: expected A..B")))?;
    let lo = a.parse().map_err(|_| input_err(format!("bad range bound {a:?}")))?;
    let hi = b.parse().map_err(|_| input_err(format!("bad range bound {b:?}")))?;
    if lo > hi {
        return Err(input_err(format!("empty range {s:?}")));
    }
    Ok((lo, hi))
}

fn odd_values(range: &Option<String>, default: (usize, usize)) -> Result<Vec<usize>, CliError> {
    let (lo, hi) = match range {
        Some(s) => parse_range(s)?,
        None => default,
    };
    Ok((lo..=hi).filter(|n| n % 2 == 1).collect())
}

/// Corpus for the per-graph checkers: random connected graphs, a family
/// sweep, or a small default set of named graphs.
fn corpus(
    gen: &Option<String>,
    random: Option<usize>,
    max_n: usize,
    seed: Option<u64>,
) -> Result<Vec<(String, Graph)>, CliError> {
    if let Some(count) = random {
        let seed = seed.ok_or_else(|| input_err("--random requires --seed"))?;
        return Ok(random_connected_corpus(seed, count, 4, max_n)
            .into_iter()
            .enumerate()
            .map(|(i, g)| (format!("random[{i}] n={} m={}", g.n(), g.edge_count()), g))
            .collect());
    }
    if let Some(spec) = gen {
        let (fam, range) = spec
            .split_once(':')
            .ok_or_else(|| input_err(format!("bad --gen sweep {spec:?}")))?;
        let family =
            Family::from_name(fam).ok_or_else(|| input_err(format!("unknown family {fam:?}")))?;
        let (lo, hi) = parse_range(range)?;
        return (lo..=hi)
            .map(|n| {
                let fs = FamilySpec::new(family, vec![n]).map_err(|e| input_err(e.to_string()))?;
                Ok((fs.describe(), generate(&fs).unwrap()))
            })
            .collect();
    }
    Ok([
        FamilySpec::cycle(5),
        FamilySpec::cycle(7),
        FamilySpec::complete(3),
        FamilySpec::null(4),
        FamilySpec::sunlet(5),
        FamilySpec::empty_sun(4),
    ]
    .iter()
    .map(|fs| (fs.describe(), generate(fs).unwrap()))
    .collect())
}

fn emit_family_check(fc: &FamilyCheck, json: bool, csv: bool) -> i32 {
    if json {
        println!("{}", serde_json::to_string_pretty(fc).unwrap());
    } else if csv {
        print!("{}", family_csv(fc));
    } else {
        print!("{}", family_text(fc));
    }
    if fc.rows.iter().any(|r| !r.exact) {
        EXIT_BUDGET
    } else if fc.all_match {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn emit_verdicts(id: &str, rows: &[GraphVerdict], json: bool, csv: bool) -> i32 {
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            id: &'a str,
            rows: &'a [GraphVerdict],
            all_pass: bool,
        }
        let all_pass = rows.iter().all(|r| r.pass);
        println!(
            "{}",
            serde_json::to_string_pretty(&Out { id, rows, all_pass }).unwrap()
        );
    } else if csv {
        println!("graph,pass,details");
        for r in rows {
            println!("{},{},\"{}\"", r.graph, r.pass, r.details);
        }
    } else {
        for r in rows {
            println!("{} {} — {}", if r.pass { "PASS" } else { "FAIL" }, r.graph, r.details);
        }
    }
    if rows.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    id: &str,
    odd: &Option<String>,
    nrange: &Option<String>,
    gen: &Option<String>,
    random: Option<usize>,
    max_n: usize,
    seed: Option<u64>,
    json: bool,
    csv: bool,
    opts: &RainbowOptions,
) -> Result<i32, CliError> {
    let budget_err = |e: RainbowError| (EXIT_BUDGET, e.to_string());
    match id {
        "prop2.3" => {
            let ns = odd_values(odd, (3, 13))?;
            Ok(emit_family_check(&verify_prop_2_3(&ns, opts), json, csv))
        }
        "prop2.4" => {
            let ns: Vec<usize> = odd_values(odd, (7, 7))?.into_iter().filter(|&n| n >= 7).collect();
            Ok(emit_family_check(&verify_prop_2_4(&ns, opts), json, csv))
        }
        "prop2.5" => {
            let (lo, hi) = match nrange {
                Some(s) => parse_range(s)?,
                None => (3, 5),
            };
            let ns: Vec<usize> = (lo.max(3)..=hi).collect();
            Ok(emit_family_check(&verify_prop_2_5(&ns, opts), json, csv))
        }
        "thm1.2" => {
            let spec = gen.clone().unwrap_or_else(|| "path:2..10".to_string());
            let specs: Vec<FamilySpec> = corpus(&Some(spec), None, max_n, seed)?
                .into_iter()
                .map(|(desc, g)| {
                    if !g.is_bipartite() {
                        return Err(input_err(format!("{desc} is not bipartite")));
                    }
                    let (fam, param) = desc.split_once(':').unwrap();
                    Ok(FamilySpec::new(
                        Family::from_name(fam).unwrap(),
                        vec![param.parse().unwrap()],
                    )
                    .unwrap())
                })
                .collect::<Result<_, _>>()?;
            Ok(emit_family_check(&verify_thm_1_2(&specs, opts), json, csv))
        }
        "lem1.3" => {
            let rows: Vec<GraphVerdict> = corpus(gen, random, max_n, seed)?
                .iter()
                .map(|(desc, g)| {
                    let jc = check_join_lemma(g, opts).map_err(budget_err)?;
                    Ok(GraphVerdict {
                        graph: desc.clone(),
                        pass: jc.pass,
                        details: format!(
                            "base ({}, {}), joined ({}, {})",
                            jc.base_min, jc.base_max, jc.joined_min, jc.joined_max
                        ),
                    })
                })
                .collect::<Result<_, CliError>>()?;
            Ok(emit_verdicts(id, &rows, json, csv))
        }
        "thm1.1" | "thm2.1" | "lem3.2" | "clique-bound" => {
            let rows: Vec<GraphVerdict> = corpus(gen, random, max_n, seed)?
                .iter()
                .map(|(desc, g)| {
                    let v = match id {
                        "lem3.2" => check_lemma_3_2(g, opts.budget),
                        _ => {
                            let r = rainbow_range(g, opts);
                            match id {
                                "thm1.1" => check_theorem_1_1(g, &r),
                                "thm2.1" => check_theorem_2_1(g, &r),
                                _ => check_clique_bound(g, &r, opts.budget),
                            }
                        }
                    }
                    .map_err(budget_err)?;
                    Ok(GraphVerdict { graph: desc.clone(), pass: v.pass, details: v.details })
                })
                .collect::<Result<_, CliError>>()?;
            Ok(emit_verdicts(id, &rows, json, csv))
        }
        _ => Err(input_err(format!(
            "unknown verify id {id:?} (expected thm1.1, thm1.2, lem1.3, thm2.1, prop2.3, prop2.4, prop2.5, lem3.2, clique-bound)"
        ))),
    }
}

// ---------------------------------------------------------------------------
// colour / rainbow / convert
// ---------------------------------------------------------------------------

fn cmd_colour(
    input: &InputArgs,
    all: bool,
    maximize: bool,
    opts: &RainbowOptions,
) -> Result<i32, CliError> {
    let (g, desc) = load_graph(input)?;
    let started = Instant::now();
    let payload = if maximize {
        let r = rainbow_range(&g, opts);
        if !r.exact {
            return Err((EXIT_BUDGET, "budget exhausted before an exact maximum".into()));
        }
        let w = r.max_witness.expect("exact range has a witness");
        serde_json::to_value(rainbow_count(&g, &w).unwrap()).unwrap()
    } else {
        let out = convention_colourings(&g, opts.budget);
        if !out.stats.complete {
            return Err((EXIT_BUDGET, "budget exhausted during enumeration".into()));
        }
        let reports: Vec<_> = out
            .colourings
            .iter()
            .map(|c| rainbow_count(&g, c).unwrap())
            .collect();
        if all {
            serde_json::to_value(&reports).unwrap()
        } else {
            serde_json::to_value(&reports[0]).unwrap()
        }
    };
    let report = RunReport::new(
        "colour",
        &desc,
        opts.budget.max_nodes,
        started.elapsed().as_millis(),
        true,
        payload,
    );
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(EXIT_OK)
}

fn cmd_rainbow(
    input: &InputArgs,
    colouring: &str,
    opts: &RainbowOptions,
) -> Result<i32, CliError> {
    let (g, desc) = load_graph(input)?;
    let text = if colouring == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_err(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(colouring).map_err(|e| input_err(format!("{colouring}: {e}")))?
    };
    let c: rnn::Colouring = serde_json::from_str(&text).map_err(|e| input_err(e.to_string()))?;
    if c.assignment().len() != g.n() {
        return Err(input_err(format!(
            "colouring has {} entries, graph has {} vertices",
            c.assignment().len(),
            g.n()
        )));
    }
    let report = rainbow_count(&g, &c).map_err(|e| input_err(e.to_string()))?;
    let out = RunReport::new(
        "rainbow",
        &desc,
        opts.budget.max_nodes,
        0,
        true,
        serde_json::to_value(&report).unwrap(),
    );
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    Ok(EXIT_OK)
}

fn cmd_convert(input: &InputArgs, to: Format) -> Result<i32, CliError> {
    let (g, _) = load_graph(input)?;
    match to {
        Format::Graph6 => println!("{}", emit_graph6(&g)),
        Format::Dimacs => print!("{}", emit_dimacs(&g)),
        Format::Edges => print!("{}", emit_edge_list(&g)),
    }
    Ok(EXIT_OK)
}
