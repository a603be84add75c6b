use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use cyclenum::bench::{loglog_slope, time_recognition, to_csv};
use cyclenum::generators::{GenSpec, ManifestEntry};
use cyclenum::oracle::{oracle_cycle_numbers, DEFAULT_EDGE_LIMIT};
use cyclenum::recognition::{
    block_reports, cycle_numbers_via_decomposition, decompose, DecompositionTrace, Order,
    RecognitionVerdict, Witness,
};
use cyclenum::{parse_graph, write_graph, Error, MultiGraph};

/// Unique cycle numbers of Eulerian multigraphs.
#[derive(Parser)]
#[command(name = "cyclenum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct OrderFlags {
    /// Process the worklist in random order.
    #[arg(long)]
    randomized_order: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl OrderFlags {
    fn order(self) -> Order {
        if self.randomized_order {
            Order::Randomized(self.seed)
        } else {
            Order::Ascending
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether all cycle decompositions have the same size.
    Check {
        path: PathBuf,
        /// Report every block separately.
        #[arg(long)]
        per_component: bool,
        /// Print evidence for NOT-UNIQUE.
        #[arg(long)]
        witness: bool,
        /// Largest graph for which the witness is a cycle pair.
        #[arg(long, default_value_t = DEFAULT_EDGE_LIMIT)]
        edge_limit: usize,
        #[command(flatten)]
        order: OrderFlags,
    },
    /// Print the vertex-edge decomposition trace and the final components.
    Decompose {
        path: PathBuf,
        #[arg(long)]
        trace_out: Option<PathBuf>,
        #[arg(long)]
        dot_out: Option<PathBuf>,
        #[command(flatten)]
        order: OrderFlags,
    },
    /// Exact c and nu by exhaustive search.
    Oracle {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EDGE_LIMIT)]
        edge_limit: usize,
    },
    /// c and nu from the decomposition, with the oracle on irreducible parts.
    Numbers {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EDGE_LIMIT)]
        edge_limit: usize,
        #[command(flatten)]
        order: OrderFlags,
    },
    /// Generate graphs: multiedge k | necklace k | cycle k | classG n [half] |
    /// classH n | classHprime n | randomEulerian n [extra].
    Generate {
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corpus directory; without it the graph goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Number of instances, seeds `seed, seed+1, ...`.
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Time recognition on generated instances of growing size.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000")]
        sizes: Vec<usize>,
        /// Largest multiedge half-size; bounds m/n.
        #[arg(long, default_value_t = 2)]
        density: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Also write the CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn read_graph(path: &Path) -> anyhow::Result<MultiGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = parse_graph(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(g)
}

fn verdict_word(unique: bool) -> &'static str {
    if unique {
        "UNIQUE"
    } else {
        "NOT-UNIQUE"
    }
}

fn verdict_code(unique: bool) -> u8 {
    if unique {
        0
    } else {
        1
    }
}

fn print_witness(verdict: &RecognitionVerdict) {
    match &verdict.witness {
        None => {}
        Some(Witness::CyclePair(a, b)) => {
            println!("witness cycle-pair");
            println!("{a}");
            println!("{b}");
        }
        Some(Witness::IrreducibleComponent { graph, vertices }) => {
            let vs: Vec<String> = vertices.iter().map(ToString::to_string).collect();
            println!("witness component vertices {}", vs.join(" "));
            print!("{}", write_graph(graph));
        }
    }
}

fn check(
    path: &Path,
    per_component: bool,
    witness: bool,
    edge_limit: usize,
    order: Order,
) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let reports = block_reports(&g, order)?;
    if per_component {
        for (i, r) in reports.iter().enumerate() {
            let vs: Vec<String> = r.block.vertex_map.iter().map(ToString::to_string).collect();
            println!(
                "block {i} vertices {} edges {} steps {} {}",
                vs.join(","),
                r.block.graph.m(),
                r.trace.steps.len(),
                verdict_word(r.verdict.unique)
            );
        }
    }
    let unique = reports.iter().all(|r| r.verdict.unique);
    println!("{}", verdict_word(unique));
    if witness && !unique {
        let failing = reports
            .iter()
            .find(|r| !r.verdict.unique)
            .expect("some block fails");
        let mut v = failing.verdict.clone();
        // a cycle pair inside the block is also one in g once mapped back
        v = v.with_cycle_pair(&failing.block.graph, edge_limit);
        if let Some(Witness::CyclePair(a, b)) = &mut v.witness {
            for c in [a, b] {
                for x in c.vertices.iter_mut() {
                    *x = failing.block.vertex_map[x.0];
                }
                for e in c.edges.iter_mut() {
                    *e = failing.block.edge_map[e.0];
                }
            }
        }
        print_witness(&v);
    }
    Ok(verdict_code(unique))
}

fn trace_text(trace: &DecompositionTrace, unique: bool) -> String {
    let mut out = trace.to_string();
    writeln!(out, "VERDICT {}", if unique { "unique" } else { "nonunique" }).unwrap();
    out
}

fn dot(trace: &DecompositionTrace) -> String {
    let origins = trace.origins();
    let mut out = String::from("graph decomposition {\n  node [shape=circle];\n");
    for (i, comp) in trace.final_components().iter().enumerate() {
        let kind = if comp.graph.is_eulerian_multiedge() {
            "multiedge"
        } else if comp.graph.m() == 0 {
            "vertex"
        } else {
            "irreducible"
        };
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        writeln!(out, "    label=\"{i}: {kind}\";").unwrap();
        for v in &comp.vertex_map {
            writeln!(out, "    v{} [label=\"{}\"];", v.0, origins[v.0]).unwrap();
        }
        for e in &comp.edge_map {
            let (a, b) = trace.final_graph.endpoints(*e);
            writeln!(out, "    v{} -- v{} [label=\"{}\"];", a.0, b.0, e.0).unwrap();
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

fn decompose_cmd(
    path: &Path,
    trace_out: Option<&Path>,
    dot_out: Option<&Path>,
    order: Order,
) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let (verdict, trace) = decompose(&g, order)?;
    let text = trace_text(&trace, verdict.unique);
    print!("{text}");
    let comps = trace.final_components();
    println!("steps {}", trace.separation_steps());
    println!("components {}", comps.len());
    for (i, c) in comps.iter().enumerate() {
        let vs: Vec<String> = c.vertex_map.iter().map(ToString::to_string).collect();
        println!(
            "component {i} n {} m {} vertices {}{}",
            c.graph.n(),
            c.graph.m(),
            vs.join(","),
            if c.graph.is_eulerian_multiedge() || c.graph.m() == 0 {
                ""
            } else {
                " irreducible"
            }
        );
    }
    if let Some(p) = trace_out {
        fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
    }
    if let Some(p) = dot_out {
        fs::write(p, dot(&trace)).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(0)
}

fn oracle_cmd(path: &Path, edge_limit: usize) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let r = oracle_cycle_numbers(&g, edge_limit)?;
    println!("{} {}", r.c_min, r.nu_max);
    println!("min-witness");
    print!("{}", r.min_witness);
    println!("max-witness");
    print!("{}", r.max_witness);
    Ok(0)
}

fn numbers_cmd(path: &Path, edge_limit: usize, order: Order) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let (c, nu) = cycle_numbers_via_decomposition(&g, edge_limit, order)?;
    println!("{c} {nu}");
    Ok(0)
}

fn generate_cmd(
    family: &str,
    params: &[usize],
    seed: u64,
    out: Option<&Path>,
    count: u64,
) -> anyhow::Result<u8> {
    let family = family.parse()?;
    if count == 0 {
        bail!(Error::InvalidParam("count must be positive".into()));
    }
    let Some(dir) = out else {
        if count != 1 {
            bail!(Error::InvalidParam("--count needs --out".into()));
        }
        let g = GenSpec::new(family, params, seed).generate()?;
        print!("{}", write_graph(&g.graph));
        return Ok(0);
    };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let manifest_path = dir.join("manifest.txt");
    let mut manifest = if manifest_path.exists() {
        fs::read_to_string(&manifest_path)?
    } else {
        String::new()
    };
    let existing = manifest.lines().count();
    for i in 0..count {
        let spec = GenSpec::new(family, params, seed + i);
        let g = spec.generate()?;
        let stem = format!("{family}-{:04}", existing as u64 + i);
        let file = format!("{stem}.graph");
        fs::write(dir.join(&file), write_graph(&g.graph))?;
        fs::write(dir.join(format!("{stem}.script")), g.script.to_string())?;
        let entry = ManifestEntry { spec, file };
        writeln!(manifest, "{entry}").unwrap();
        println!("{}", dir.join(&entry.file).display());
    }
    fs::write(&manifest_path, manifest)?;
    Ok(0)
}

fn bench_cmd(
    sizes: &[usize],
    density: usize,
    seed: u64,
    repeats: usize,
    csv: Option<&Path>,
) -> anyhow::Result<u8> {
    let mut rows = Vec::new();
    println!("{:>8} {:>9} {:>12}", "n", "m", "seconds");
    for &n in sizes {
        let r = time_recognition(n, density, seed, repeats)?;
        println!("{:>8} {:>9} {:>12.6}", r.n, r.m, r.time.as_secs_f64());
        rows.push(r);
    }
    let table = to_csv(&rows);
    println!();
    print!("{table}");
    if rows.len() >= 2 {
        println!("slope {:.3}", loglog_slope(&rows));
    }
    if let Some(p) = csv {
        fs::write(p, table)?;
    }
    Ok(0)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Check {
            path,
            per_component,
            witness,
            edge_limit,
            order,
        } => check(&path, per_component, witness, edge_limit, order.order()),
        Command::Decompose {
            path,
            trace_out,
            dot_out,
            order,
        } => decompose_cmd(&path, trace_out.as_deref(), dot_out.as_deref(), order.order()),
        Command::Oracle { path, edge_limit } => oracle_cmd(&path, edge_limit),
        Command::Numbers {
            path,
            edge_limit,
            order,
        } => numbers_cmd(&path, edge_limit, order.order()),
        Command::Generate {
            family,
            params,
            seed,
            out,
            count,
        } => generate_cmd(&family, &params, seed, out.as_deref(), count),
        Command::Bench {
            sizes,
            density,
            seed,
            repeats,
            csv,
        } => bench_cmd(&sizes, density, seed, repeats, csv.as_deref()),
    }
}

/// 3 for resource limits, 2 for everything else.
fn error_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::TooLarge(_) | Error::ComponentTooLarge { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(error_code(&err))
        }
    }
}
