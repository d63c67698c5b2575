use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use arbor::balance::{balance_exact, DegreeSequence, Partition};
use arbor::equitable::{equitable3_traced, equitable_k_traced, verify_strong_k};
use arbor::experiments::{
    run_balanced_fraction, run_degree_stats, run_equitable_fraction, run_max_degree, ExperimentConfig,
};
use arbor::io::{format_tree, parse_colors, parse_tree};
use arbor::random::{
    enumerate_labeled_trees, prufer_decode, prufer_encode, random_prufer, stats_from_prufer, tree_stats, Seed,
};
use arbor::{Error, KColoring, Tree};
use serde_json::{json, Value};

use crate::{Command, Emit, Experiment, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{message}")]
    Internal { message: String, tree: Option<String> },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal { .. } => 1,
        }
    }

    fn from_lib(e: Error, tree: Option<&Tree>) -> Self {
        if e.is_precondition() {
            CliError::Input(e.to_string())
        } else {
            CliError::Internal {
                message: e.to_string(),
                tree: tree.map(format_tree),
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::from_lib(e, None)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Sample {
            n,
            trials,
            seed,
            emit,
            out,
        } => write_out(out.as_deref(), &sample(n, trials, seed, emit)?),
        Command::Check { input } => write_out(None, &pretty(&check(&read_tree(&input)?))),
        Command::Color {
            k,
            input,
            constrain,
            verify,
            out,
        } => {
            let t = read_tree(&input)?;
            let v = match verify {
                Some(path) => verify_file(&t, k, &path)?,
                None => color(&t, k, constrain.map(|c| (c[0], c[1])))?,
            };
            write_out(out.as_deref(), &pretty(&v))
        }
        Command::Balance { seq, input } => {
            let values = match (seq, input) {
                (Some(s), _) => parse_seq(&s)?,
                (None, Some(path)) => read_tree(&path)?.degrees(),
                (None, None) => return Err(CliError::Input("give --seq or --in".into())),
            };
            write_out(None, &pretty(&balance(&values)?))
        }
        Command::Experiment {
            kind,
            n,
            k,
            trials,
            seed,
            workers,
            out,
            format,
        } => {
            let mut cfg = ExperimentConfig::new(n, trials, seed);
            cfg.k = k;
            cfg.workers = workers;
            let summary = match kind {
                Experiment::Balanced => run_balanced_fraction(&cfg)?,
                Experiment::Equitable => run_equitable_fraction(&cfg)?,
                Experiment::Degrees => run_degree_stats(&cfg)?,
                Experiment::Maxdeg => run_max_degree(&cfg)?,
            };
            let text = match format {
                Format::Csv => summary.to_csv(),
                Format::Json => pretty(&serde_json::to_value(&summary).map_err(internal)?),
            };
            write_out(out.as_deref(), &text)
        }
        Command::Enumerate {
            n,
            count_only,
            emit,
            out,
        } => write_out(out.as_deref(), &enumerate(n, count_only, emit)?),
    }
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal {
        message: e.to_string(),
        tree: None,
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Input(format!("stdin: {e}")));
    }
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<Tree> {
    parse_tree(&read_text(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_seq(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u32>()
                .map_err(|_| CliError::Input(format!("`{tok}` is not a non-negative integer")))
        })
        .collect()
}

fn sample(n: usize, trials: u64, seed: u64, emit: Emit) -> Result<String> {
    if n < 2 {
        return Err(CliError::Input(format!("n must be at least 2, got {n}")));
    }
    let mut s = String::new();
    if emit == Emit::Stats {
        s.push_str("trial,max_degree,x1,x2\n");
    }
    for trial in 0..trials {
        let code = random_prufer(n, &mut Seed(seed).trial_rng(trial));
        match emit {
            Emit::Prufer => s.push_str(&(prufer_text(&code) + "\n")),
            Emit::Edges => {
                if trial > 0 {
                    s.push('\n');
                }
                s.push_str(&format_tree(&prufer_decode(&code, n)?));
            }
            Emit::Stats => {
                let st = stats_from_prufer(&code, n);
                writeln!(s, "{trial},{},{},{}", st.max_degree, st.x1, st.x2).unwrap();
            }
        }
    }
    Ok(s)
}

fn prufer_text(code: &[usize]) -> String {
    arbor::experiments::prufer_line(code)
}

fn check(t: &Tree) -> Value {
    let st = tree_stats(t);
    let b = balance_exact(&t.degrees()).ok();
    let d = t.max_degree();
    json!({
        "n": t.n(),
        "edges": t.edge_count(),
        "max_degree": st.max_degree,
        "x1": st.x1,
        "x2": st.x2,
        "is_string": t.is_string(),
        "pre_leaves": t.pre_leaves(),
        "F": b.as_ref().map(|b| b.value),
        "balanced": b.as_ref().map(|b| b.is_balanced()),
        // Largest k with k * maxdeg <= n.
        "max_equitable_k": t.n().checked_div(d),
        "prufer": if t.n() >= 2 { json!(prufer_text(&prufer_encode(t))) } else { Value::Null },
    })
}

fn color(t: &Tree, k: usize, pair: Option<(usize, usize)>) -> Result<Value> {
    let built = match pair {
        Some(_) if k != 3 => return Err(CliError::Input("--constrain needs --k 3".into())),
        Some(_) => equitable3_traced(t, pair),
        None => equitable_k_traced(t, k),
    }
    .map_err(|e| CliError::from_lib(e, Some(t)))?;
    let cert = verify_strong_k(t, &built.coloring)?;
    if !cert.valid {
        return Err(CliError::Internal {
            message: "constructed coloring failed verification".into(),
            tree: Some(format_tree(t)),
        });
    }
    Ok(coloring_json(&built.coloring, Some(&built.trace), None))
}

fn verify_file(t: &Tree, k: usize, path: &Path) -> Result<Value> {
    let colors = parse_colors(&read_text(path)?)?;
    let c = KColoring::new(k, colors)?;
    let cert = verify_strong_k(t, &c)?;
    Ok(coloring_json(&c, None, Some((cert.valid, &cert.mono_edges))))
}

fn coloring_json(c: &KColoring, trace: Option<&[String]>, check: Option<(bool, &[usize])>) -> Value {
    let mut v = json!({
        "k": c.k(),
        "assignment": c.colors(),
        "class_sizes": c.class_sizes(),
    });
    if let Some(trace) = trace {
        v["trace"] = json!(trace);
    }
    if let Some((valid, mono)) = check {
        v["valid"] = json!(valid);
        v["mono_edges"] = json!(mono);
    }
    v
}

fn balance(values: &[u32]) -> Result<Value> {
    let seq = DegreeSequence::new(values.to_vec())?;
    let b = balance_exact(&seq)?;
    let side = |p: &Partition, i: bool| -> Vec<usize> { (if i { &p.i } else { &p.j }).iter().map(|x| x + 1).collect() };
    Ok(json!({
        "F": b.value,
        "partition_I": side(&b.witness, true),
        "partition_J": side(&b.witness, false),
        "sum_I": b.witness.sum_i,
        "sum_J": b.witness.sum_j,
        "balanced": b.is_balanced(),
    }))
}

fn enumerate(n: usize, count_only: bool, emit: Emit) -> Result<String> {
    let trees = enumerate_labeled_trees(n)?;
    if count_only {
        return Ok(format!("{}\n", trees.count()));
    }
    let mut s = String::new();
    for (i, t) in trees.enumerate() {
        match emit {
            Emit::Prufer if n >= 2 => s.push_str(&(prufer_text(&prufer_encode(&t)) + "\n")),
            Emit::Stats => {
                if i == 0 {
                    s.push_str("index,max_degree,x1,x2\n");
                }
                let st = tree_stats(&t);
                writeln!(s, "{i},{},{},{}", st.max_degree, st.x1, st.x2).unwrap();
            }
            _ => {
                if i > 0 {
                    s.push('\n');
                }
                s.push_str(&format_tree(&t));
            }
        }
    }
    Ok(s)
}
