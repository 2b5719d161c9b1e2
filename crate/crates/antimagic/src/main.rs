//! Command-line front end: label graphs, verify labelings, run the search
//! oracle, generate families, sweep corpora and explain decompositions.

use antimagic::decompose::{build_plan, DecomposeError};
use antimagic::engine::{label_arithmetic_full, ArithSeq, EngineError, Op};
use antimagic::graph::Graph;
use antimagic::json::{
    labeling_from_json, labeling_to_json, parse_op, plan_to_json, report_to_json, LabelingJson,
};
use antimagic::rational::{format_rat, parse_rat, Rat};
use antimagic::universal::{search_label_bounded, UniversalError, DEFAULT_SEARCH_BOUND};
use antimagic::verify::verify;
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

const EXIT_OK: i32 = 0;
const EXIT_IO: i32 = 1;
const EXIT_PRECONDITION: i32 = 2;
const EXIT_FAIL: i32 = 3;

#[derive(Parser)]
#[command(
    name = "antimagic",
    about = "Antimagic and product-antimagic edge labelings of graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Label a graph with an arithmetic sequence and verify the result
    Label {
        /// edge-list file, or - for stdin
        input: String,
        /// operation: + or *
        #[arg(long, default_value = "+")]
        op: String,
        /// first label (exact rational, e.g. 1, 1/4, 2.5)
        #[arg(long, default_value = "1")]
        l1: String,
        /// common difference (exact rational, > 0)
        #[arg(long, default_value = "1")]
        d: String,
        /// output format: json or dot
        #[arg(long, default_value = "json")]
        format: String,
        /// write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling JSON against a graph
    Verify {
        /// edge-list file, or - for stdin
        graph: String,
        /// labeling JSON file
        labeling: PathBuf,
        /// expected first label of an arithmetic label set
        #[arg(long)]
        l1: Option<String>,
        /// expected common difference
        #[arg(long)]
        d: Option<String>,
    },
    /// Exhaustive/backtracking search for a labeling with an explicit label set
    Oracle {
        /// edge-list file, or - for stdin
        input: String,
        /// operation: + or *
        #[arg(long, default_value = "+")]
        op: String,
        /// comma-separated exact rationals, ascending
        #[arg(long)]
        labels: String,
        /// edge-count bound for the search
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Emit an edge list for a named graph family
    Generate {
        /// path, cycle, star, random-caterpillar, random-leafy-cycle,
        /// random-subdivided, random-v3, random-support
        #[arg(long)]
        family: String,
        /// size parameter (edges for the fixed families)
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Label and verify a whole corpus, emitting a TSV summary
    Sweep {
        /// enum, caterpillars, leafy-cycles, subdivided
        #[arg(long)]
        corpus: String,
        /// max vertex count for the enum corpus
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// instance count for the random corpora
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Emit the decomposition plan (pruned graph, partition, GPD, trails)
    Explain {
        /// edge-list file, or - for stdin
        input: String,
    },
}

fn main() {
    std::process::exit(run(Cli::parse()));
}

fn read_graph(path: &str) -> Result<Graph, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    antimagic::graph::Graph::parse_edge_list(&text).map_err(|e| e.to_string())
}

fn parse_rat_arg(name: &str, s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| format!("--{name}: {e}"))
}

fn engine_exit(e: &EngineError) -> i32 {
    match e {
        EngineError::Precondition(_) | EngineError::InvalidSequence(_) => EXIT_PRECONDITION,
        EngineError::Internal(_) => EXIT_FAIL,
    }
}

fn run(cli: Cli) -> i32 {
    match cli.cmd {
        Cmd::Label { input, op, l1, d, format, out } => cmd_label(&input, &op, &l1, &d, &format, out.as_deref()),
        Cmd::Verify { graph, labeling, l1, d } => cmd_verify(&graph, &labeling, l1.as_deref(), d.as_deref()),
        Cmd::Oracle { input, op, labels, bound } => cmd_oracle(&input, &op, &labels, bound),
        Cmd::Generate { family, m, seed } => cmd_generate(&family, m, seed),
        Cmd::Sweep { corpus, max_n, count, seed } => cmd_sweep(&corpus, max_n, count, seed),
        Cmd::Explain { input } => cmd_explain(&input),
    }
}

fn cmd_label(
    input: &str,
    op: &str,
    l1: &str,
    d: &str,
    format: &str,
    out: Option<&std::path::Path>,
) -> i32 {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_IO, &e),
    };
    let op = match parse_op(op) {
        Ok(op) => op,
        Err(e) => return fail(EXIT_PRECONDITION, &e.to_string()),
    };
    let seq = match (parse_rat_arg("l1", l1), parse_rat_arg("d", d)) {
        (Ok(l1), Ok(d)) => ArithSeq::new(l1, d),
        (Err(e), _) | (_, Err(e)) => return fail(EXIT_PRECONDITION, &e),
    };
    let outcome = match label_arithmetic_full(&g, &seq, op) {
        Ok(o) => o,
        Err(e) => return fail(engine_exit(&e), &e.to_string()),
    };
    let text = match format {
        "json" => {
            let json = labeling_to_json(&g, &outcome.labeling);
            serde_json::to_string_pretty(&json).expect("serializable") + "\n"
        }
        "dot" => antimagic::dot::to_dot(&g, Some(&outcome.labeling)),
        other => return fail(EXIT_PRECONDITION, &format!("unknown format {other:?}")),
    };
    emit(out, &text)
}

fn cmd_verify(graph: &str, labeling: &PathBuf, l1: Option<&str>, d: Option<&str>) -> i32 {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_IO, &e),
    };
    let text = match std::fs::read_to_string(labeling) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_IO, &format!("{}: {e}", labeling.display())),
    };
    let json: LabelingJson = match serde_json::from_str(&text) {
        Ok(j) => j,
        Err(e) => return fail(EXIT_IO, &format!("bad labeling JSON: {e}")),
    };
    let lab = match labeling_from_json(&g, &json) {
        Ok(l) => l,
        Err(e) => return fail(EXIT_PRECONDITION, &e.to_string()),
    };
    let expected = match (l1, d) {
        (Some(l1), Some(d)) => {
            match (parse_rat_arg("l1", l1), parse_rat_arg("d", d)) {
                (Ok(l1), Ok(d)) => Some(ArithSeq::new(l1, d).labels(g.edge_count())),
                (Err(e), _) | (_, Err(e)) => return fail(EXIT_PRECONDITION, &e),
            }
        }
        (None, None) => None,
        _ => return fail(EXIT_PRECONDITION, "--l1 and --d must be given together"),
    };
    let report = verify(&g, &lab, expected.as_deref());
    let json = report_to_json(&report);
    println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
    if report.ok() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn cmd_oracle(input: &str, op: &str, labels: &str, bound: Option<usize>) -> i32 {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_IO, &e),
    };
    let op = match parse_op(op) {
        Ok(op) => op,
        Err(e) => return fail(EXIT_PRECONDITION, &e.to_string()),
    };
    let mut parsed = Vec::new();
    for part in labels.split(',') {
        match parse_rat(part.trim()) {
            Ok(r) => parsed.push(r),
            Err(e) => return fail(EXIT_PRECONDITION, &format!("--labels: {e}")),
        }
    }
    let bound = bound.unwrap_or(if g.is_path() || g.is_cycle() {
        usize::MAX
    } else {
        DEFAULT_SEARCH_BOUND
    });
    match search_label_bounded(&g, &parsed, op, None, bound) {
        Ok(lab) => {
            let json = labeling_to_json(&g, &lab);
            println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
            EXIT_OK
        }
        Err(UniversalError::NotFound) => fail(EXIT_FAIL, "no labeling exists"),
        Err(e @ UniversalError::TooLarge { .. })
        | Err(e @ UniversalError::BadLabels(_))
        | Err(e @ UniversalError::Precondition(_)) => fail(EXIT_PRECONDITION, &e.to_string()),
        Err(e) => fail(EXIT_FAIL, &e.to_string()),
    }
}

fn cmd_generate(family: &str, m: usize, seed: u64) -> i32 {
    let result = match family {
        "path" => antimagic::generate::path(m),
        "cycle" => antimagic::generate::cycle(m),
        "star" => antimagic::generate::star(m),
        "random-caterpillar" => antimagic::generate::random_caterpillar(m, seed),
        "random-leafy-cycle" => antimagic::generate::random_leafy_cycle(m, seed),
        "random-subdivided" => antimagic::generate::random_subdivided_leafy(m, seed),
        "random-v3" => antimagic::generate::random_v3_subset_vs(m, seed),
        "random-support" => antimagic::generate::random_interior_support(m, seed),
        other => return fail(EXIT_PRECONDITION, &format!("unknown family {other:?}")),
    };
    match result {
        Ok(g) => {
            print!("{}", g.to_edge_list());
            EXIT_OK
        }
        Err(e) => fail(EXIT_PRECONDITION, &e.to_string()),
    }
}

struct SweepCase {
    id: String,
    g: Graph,
    op: Op,
    seq: ArithSeq,
}

fn sweep_cases(corpus: &str, max_n: usize, count: usize, seed: u64) -> Result<Vec<SweepCase>, String> {
    let one = || Rat::from_integer(1.into());
    let grid_sum: Vec<(Rat, Rat)> = vec![
        (parse_rat("1").unwrap(), parse_rat("1").unwrap()),
        (parse_rat("1/4").unwrap(), parse_rat("1/3").unwrap()),
        (parse_rat("3").unwrap(), parse_rat("7/2").unwrap()),
        (parse_rat("10").unwrap(), parse_rat("1").unwrap()),
    ];
    let mut cases = Vec::new();
    let mut push = |id: String, g: Graph, grids: &[(Op, Rat, Rat)]| {
        for (op, l1, d) in grids {
            cases.push(SweepCase {
                id: id.clone(),
                g: g.clone(),
                op: *op,
                seq: ArithSeq::new(l1.clone(), d.clone()),
            });
        }
    };
    match corpus {
        "enum" => {
            let graphs = antimagic::enumerate::enumerate_connected(max_n.min(7));
            for (i, g) in graphs.into_iter().enumerate() {
                if g.edge_count() < 3 {
                    continue;
                }
                let classes = antimagic::classify::classify(&g);
                if !classes.deg3.is_subset(&classes.supports) {
                    continue;
                }
                let mut grids = Vec::new();
                for (l1, d) in &grid_sum {
                    grids.push((Op::Sum, l1.clone(), d.clone()));
                    if *l1 >= one() {
                        grids.push((Op::Product, l1.clone(), d.clone()));
                    }
                }
                push(format!("enum-{i}"), g, &grids);
            }
        }
        "caterpillars" => {
            for i in 0..count {
                let m = 50 + ((seed.wrapping_add(i as u64).wrapping_mul(2654435761)) % 151) as usize;
                let g = antimagic::generate::random_caterpillar(m, seed + i as u64)
                    .map_err(|e| e.to_string())?;
                let grids = vec![
                    (Op::Sum, one(), one()),
                    (Op::Sum, parse_rat("2").unwrap(), parse_rat("1/2").unwrap()),
                    (Op::Product, one(), one()),
                    (Op::Product, one(), parse_rat("2").unwrap()),
                ];
                push(format!("caterpillar-{i}"), g, &grids);
            }
        }
        "leafy-cycles" | "subdivided" => {
            for i in 0..count {
                let m = 6 + ((seed.wrapping_add(i as u64).wrapping_mul(40503)) % 95) as usize;
                let g = if corpus == "leafy-cycles" {
                    antimagic::generate::random_leafy_cycle(m.max(4), seed + i as u64)
                } else {
                    antimagic::generate::random_subdivided_leafy(m.max(6), seed + i as u64)
                }
                .map_err(|e| e.to_string())?;
                let grids = vec![(Op::Sum, one(), one()), (Op::Product, one(), one())];
                push(format!("{corpus}-{i}"), g, &grids);
            }
        }
        other => return Err(format!("unknown corpus {other:?}")),
    }
    Ok(cases)
}

fn cmd_sweep(corpus: &str, max_n: usize, count: usize, seed: u64) -> i32 {
    let cases = match sweep_cases(corpus, max_n, count, seed) {
        Ok(c) => c,
        Err(e) => return fail(EXIT_PRECONDITION, &e),
    };
    let mut rows: Vec<(usize, String, Option<String>)> = cases
        .par_iter()
        .enumerate()
        .map(|(i, case)| {
            let start = Instant::now();
            let result = label_arithmetic_full(&case.g, &case.seq, case.op);
            let elapsed = start.elapsed().as_millis();
            let (status, witness) = match result {
                Ok(_) => ("pass", None),
                Err(e) => ("fail", Some(format!("{}: {e}", case.id))),
            };
            let row = format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}ms",
                case.id,
                case.g.vertex_count(),
                case.g.edge_count(),
                antimagic::json::op_str(case.op),
                format_rat(&case.seq.l1),
                format_rat(&case.seq.d),
                status,
                elapsed
            );
            (i, row, witness)
        })
        .collect();
    rows.sort_by_key(|&(i, _, _)| i);
    println!("graph-id\tn\tm\top\tl1\td\tstatus\truntime");
    let mut failed = false;
    for (_, row, witness) in rows {
        println!("{row}");
        if let Some(w) = witness {
            eprintln!("FAIL {w}");
            failed = true;
        }
    }
    if failed {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn cmd_explain(input: &str) -> i32 {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(e) => return fail(EXIT_IO, &e),
    };
    match build_plan(&g) {
        Ok(plan) => {
            let json = plan_to_json(&g, &plan);
            println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
            EXIT_OK
        }
        Err(e @ DecomposeError::Precondition(_)) => fail(EXIT_PRECONDITION, &e.to_string()),
        Err(e) => fail(EXIT_FAIL, &e.to_string()),
    }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> i32 {
    match out {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => fail(EXIT_IO, &format!("{}: {e}", path.display())),
        },
        None => {
            print!("{text}");
            EXIT_OK
        }
    }
}

fn fail(code: i32, msg: &str) -> i32 {
    eprintln!("error: {msg}");
    code
}
