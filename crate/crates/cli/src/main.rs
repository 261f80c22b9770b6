use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dighom_core::catalog::{
    match_fixture, read_graph6_lines, run_catalog, run_catalog_on, CatalogOptions,
};
use dighom_core::fixtures::named_image;
use dighom_core::lasso::{find_lasso, lasso_rigidity};
use dighom_core::loops::{compute_lm, CountStatus};
use dighom_core::maps::{
    homotopy_equivalence, pointed_equivalence_obstruction, pointed_rigidity_witness,
    reducibility_witness, rigidity_witness,
};
use dighom_core::reductions::{lemma_reduce_fully, FilterConfig};
use dighom_core::{
    canonical_form, encode_graph6, parse_graph6, reduce_to_core, DigitalImage, ImageMap,
    SearchBudget,
};

#[derive(Parser)]
#[command(
    name = "dighom",
    version,
    about = "Digital homotopy of finite simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true, value_name = "INT")]
    jobs: Option<usize>,
}

#[derive(Args, Clone)]
#[group(id = "input", required = true, multiple = false)]
struct Input {
    /// Built-in image by name, e.g. C5 or IMG7_1.
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
    /// Image as a graph6 string.
    #[arg(long, value_name = "STRING")]
    g6: Option<String>,
    /// Edge-list file: vertex count on the first line, then `u v` per line.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Args, Clone)]
#[group(id = "other", multiple = false)]
struct Other {
    #[arg(long, value_name = "NAME")]
    other_fixture: Option<String>,
    #[arg(long, value_name = "STRING")]
    other_g6: Option<String>,
    #[arg(long, value_name = "PATH")]
    other_file: Option<PathBuf>,
}

#[derive(Args)]
struct Budget {
    /// Longest loop extension tried by loop searches.
    #[arg(long, value_name = "INT")]
    max_ext: Option<usize>,
    /// Maximum number of states a single search may visit.
    #[arg(long, value_name = "INT")]
    max_states: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Basic facts about an image.
    Info {
        #[command(flatten)]
        input: Input,
        /// Print Graphviz DOT instead.
        #[arg(long)]
        dot: bool,
    },
    /// Apply the reduction lemmas until none fires.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "paper", value_name = "paper|fast")]
        filter: FilterConfig,
    },
    /// Compute the core with an equivalence certificate.
    Core {
        #[command(flatten)]
        input: Input,
    },
    /// Decide reducibility exactly.
    Reducible {
        #[command(flatten)]
        input: Input,
    },
    /// Decide rigidity exactly.
    Rigid {
        #[command(flatten)]
        input: Input,
    },
    /// Decide pointed rigidity at one basepoint or all of them.
    PointedRigid {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "INT")]
        basepoint: Option<usize>,
        /// Report whether pointed rigidity rules out a pointed equivalence
        /// to this image.
        #[command(flatten)]
        other: Other,
    },
    /// The loop invariant L_m.
    Lm {
        #[command(flatten)]
        input: Input,
        /// Loop length
        #[arg(long, value_name = "INT")]
        m: usize,
        #[command(flatten)]
        budget: Budget,
    },
    /// Decide homotopy equivalence of two images.
    Equivalent {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        other: Other,
    },
    /// Find lassos: for one pair with --x and --prev, otherwise for all pairs.
    Lasso {
        #[command(flatten)]
        input: Input,
        /// Point the path reaches at time 1
        #[arg(long, value_name = "INT", requires = "prev")]
        x: Option<usize>,
        /// Adjacent point the path starts from
        #[arg(long, value_name = "INT", requires = "x")]
        prev: Option<usize>,
    },
    /// Catalog homotopy types of connected images.
    Catalog {
        /// Enumerate all connected images on this many points (1..=9).
        #[arg(
            long,
            value_name = "INT",
            required_unless_present = "file",
            conflicts_with = "file"
        )]
        n: Option<usize>,
        /// Read images from a graph6 file instead, one per line.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[arg(long, default_value = "paper", value_name = "paper|fast")]
        filter: FilterConfig,
        /// Checkpoint directory for enumeration shards.
        #[arg(long, value_name = "PATH")]
        shard_dir: Option<PathBuf>,
    },
    /// Print the graph6 encoding of an image.
    Encode {
        #[command(flatten)]
        input: Input,
    },
    /// Print a graph6 string as an edge list.
    Decode {
        #[arg(long, value_name = "STRING")]
        g6: String,
    },
}

/// Whether the command reached a definite answer.
enum Status {
    Decided,
    Unknown,
}

struct Output {
    json: Value,
    text: String,
    status: Status,
}

impl Output {
    fn decided(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            status: Status::Decided,
        }
    }
}

fn load(
    fixture: &Option<String>,
    g6: &Option<String>,
    file: &Option<PathBuf>,
) -> Result<Option<DigitalImage>> {
    Ok(match (fixture, g6, file) {
        (Some(name), _, _) => Some(named_image(name)?),
        (_, Some(s), _) => Some(parse_graph6(s).with_context(|| format!("graph6 `{s}`"))?),
        (_, _, Some(path)) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Some(
                DigitalImage::parse_edge_list(&text)
                    .with_context(|| format!("parsing {}", path.display()))?,
            )
        }
        _ => None,
    })
}

impl Input {
    fn image(&self) -> Result<DigitalImage> {
        load(&self.fixture, &self.g6, &self.file)?.context("no input image given")
    }
}

impl Other {
    fn image(&self) -> Result<Option<DigitalImage>> {
        load(&self.other_fixture, &self.other_g6, &self.other_file)
    }
}

fn values(f: &ImageMap) -> String {
    f.values()
        .iter()
        .enumerate()
        .map(|(x, y)| format!("{x}↦{y}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

fn check_vertex(x: &DigitalImage, v: usize) -> Result<()> {
    if v >= x.n() {
        bail!("point {v} out of range for an image with {} points", x.n());
    }
    Ok(())
}

fn info(x: &DigitalImage, dot: bool) -> Output {
    let degrees: Vec<usize> = (0..x.n()).map(|v| x.degree(v)).collect();
    let components = x.components().count;
    let canonical = canonical_form(x).graph6();
    let fixture = match_fixture(x);
    let json = json!({
        "command": "info",
        "graph6": encode_graph6(x),
        "canonical_graph6": canonical,
        "points": x.n(),
        "edges": x.edge_count(),
        "components": components,
        "degrees": degrees,
        "matched_fixture": fixture,
    });
    let text = if dot {
        x.to_dot(fixture.as_deref().unwrap_or("image"))
    } else {
        format!(
            "points      {}\nedges       {}\ncomponents  {components}\ndegrees     {degrees:?}\ngraph6      {}\ncanonical   {canonical}\nfixture     {}\n",
            x.n(),
            x.edge_count(),
            encode_graph6(x),
            fixture.as_deref().unwrap_or("-")
        )
    };
    Output::decided(json, text)
}

fn run(cli: &Cli) -> Result<Output> {
    Ok(match &cli.command {
        Command::Info { input, dot } => info(&input.image()?, *dot),
        Command::Reduce { input, filter } => {
            let x = input.image()?;
            let (result, kept, steps) = lemma_reduce_fully(&x, *filter);
            let mut text = String::new();
            let mut current = x.clone();
            for (i, step) in steps.iter().enumerate() {
                step.verify(&current)
                    .context("internal: certificate failed to verify")?;
                let kind = to_json(&step.kind());
                let kind = kind.as_str().unwrap_or_default();
                text.push_str(&format!(
                    "step {}: {kind} -> {}\n",
                    i + 1,
                    points(step.result.n())
                ));
                current = step.result.clone();
            }
            text.push_str(&format!(
                "result: {}, graph6 {}\n",
                points(result.n()),
                encode_graph6(&result)
            ));
            let json = json!({
                "command": "reduce",
                "filter": to_json(filter),
                "result": encode_graph6(&result),
                "kept": kept,
                "steps": to_json(&steps),
            });
            Output::decided(json, text)
        }
        Command::Core { input } => {
            let x = input.image()?;
            let core = reduce_to_core(&x);
            let cert = core.equivalence(&x)?;
            cert.verify(&x, &core.core)
                .context("internal: equivalence failed to verify")?;
            let fixture = match_fixture(&core.core);
            let json = json!({
                "command": "core",
                "core": encode_graph6(&core.core),
                "points": core.core.n(),
                "kept": core.kept,
                "matched_fixture": fixture,
                "steps": to_json(&core.steps),
                "equivalence": to_json(&cert),
            });
            let text = format!(
                "core: {}, graph6 {}{}\nkept points: {:?}\nreduction steps: {}\n",
                points(core.core.n()),
                encode_graph6(&core.core),
                fixture.map(|f| format!(" ({f})")).unwrap_or_default(),
                core.kept,
                core.steps.len()
            );
            Output::decided(json, text)
        }
        Command::Reducible { input } => {
            let x = input.image()?;
            let witness = reducibility_witness(&x);
            let text = match &witness {
                Some(f) => format!(
                    "reducible\nnonsurjective map one step from the identity: {}\n",
                    values(f)
                ),
                None => "irreducible\n".to_string(),
            };
            let json = json!({
                "command": "reducible",
                "graph6": encode_graph6(&x),
                "reducible": witness.is_some(),
                "witness": to_json(&witness),
            });
            Output::decided(json, text)
        }
        Command::Rigid { input } => {
            let x = input.image()?;
            let witness = rigidity_witness(&x);
            let text = match &witness {
                Some(f) => format!("not rigid\nmap one step from the identity: {}\n", values(f)),
                None => "rigid\n".to_string(),
            };
            let json = json!({
                "command": "rigid",
                "graph6": encode_graph6(&x),
                "rigid": witness.is_none(),
                "witness": to_json(&witness),
            });
            Output::decided(json, text)
        }
        Command::PointedRigid {
            input,
            basepoint,
            other,
        } => {
            let x = input.image()?;
            let other = other.image()?;
            let points: Vec<usize> = match basepoint {
                Some(b) => {
                    check_vertex(&x, *b)?;
                    vec![*b]
                }
                None => (0..x.n()).collect(),
            };
            let mut results = Vec::new();
            let mut text = String::new();
            for b in points {
                let witness = pointed_rigidity_witness(&x, b)?;
                let obstruction = match &other {
                    Some(y) => pointed_equivalence_obstruction(&x, b, y)?,
                    None => None,
                };
                text.push_str(&match &witness {
                    Some(f) => format!("basepoint {b}: not pointed rigid ({})\n", values(f)),
                    None => format!("basepoint {b}: pointed rigid\n"),
                });
                if let Some(o) = &obstruction {
                    text.push_str(&format!(
                        "  no pointed homotopy equivalence to the {}-point image: a pointed rigid image admits none to a smaller one\n",
                        o.target_points
                    ));
                }
                results.push(json!({
                    "basepoint": b,
                    "pointed_rigid": witness.is_none(),
                    "witness": to_json(&witness),
                    "obstruction": to_json(&obstruction),
                }));
            }
            Output::decided(
                json!({"command": "pointed-rigid", "graph6": encode_graph6(&x), "results": results}),
                text,
            )
        }
        Command::Lm { input, m, budget } => {
            let x = input.image()?;
            let mut b = SearchBudget::default();
            if let Some(s) = budget.max_states {
                b.max_states = s;
            }
            b.max_extension_length = budget.max_ext;
            let table = compute_lm(&x, *m, &b)?;
            let status = match table.status {
                CountStatus::Exact => Status::Decided,
                CountStatus::UpperBound => Status::Unknown,
            };
            let mut text = format!(
                "L_{} = {} ({})\n",
                m,
                table.count,
                match table.status {
                    CountStatus::Exact => "exact",
                    CountStatus::UpperBound => "upper bound",
                }
            );
            for r in &table.representatives {
                text.push_str(&format!("  {:?}\n", r.values()));
            }
            let mut json = to_json(&table);
            json["command"] = json!("lm");
            Output { json, text, status }
        }
        Command::Equivalent { input, other } => {
            let x = input.image()?;
            let y = other.image()?.context(
                "equivalent needs a second image (--other-fixture, --other-g6 or --other-file)",
            )?;
            let cert = homotopy_equivalence(&x, &y)?;
            let text = match &cert {
                Some(c) => format!(
                    "homotopy equivalent\nf: {}\ng: {}\n",
                    values(&c.f),
                    values(&c.g)
                ),
                None => "not homotopy equivalent (cores differ)\n".to_string(),
            };
            let json = json!({
                "command": "equivalent",
                "equivalent": cert.is_some(),
                "certificate": to_json(&cert),
            });
            Output::decided(json, text)
        }
        Command::Lasso {
            input,
            x: cur,
            prev,
        } => {
            let x = input.image()?;
            if let (Some(cur), Some(prev)) = (cur, prev) {
                let lasso = find_lasso(&x, *cur, *prev)?;
                let text = match &lasso {
                    Some(l) => format!("path {:?}\nloop {:?}\n", l.path, l.cycle),
                    None => "no lasso without right angles\n".to_string(),
                };
                let json = json!({"command": "lasso", "lasso": to_json(&lasso)});
                Output::decided(json, text)
            } else {
                let cert = lasso_rigidity(&x);
                let text = match &cert {
                    Some(c) => {
                        let mut s = "rigid: every ordered adjacent pair has a lasso\n".to_string();
                        for e in &c.lassos {
                            s.push_str(&format!(
                                "  {:?}: path {:?} loop {:?}\n",
                                e.pair, e.lasso.path, e.lasso.cycle
                            ));
                        }
                        s
                    }
                    None => "no lasso certificate (this says nothing about rigidity)\n".to_string(),
                };
                let json = json!({"command": "lasso", "certified": cert.is_some(), "certificate": to_json(&cert)});
                Output::decided(json, text)
            }
        }
        Command::Catalog {
            n,
            file,
            filter,
            shard_dir,
        } => {
            let report = match (n, file) {
                (Some(n), _) => run_catalog(
                    *n,
                    &CatalogOptions {
                        filter: *filter,
                        shard_dir: shard_dir.clone(),
                    },
                )?,
                (None, Some(path)) => {
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    run_catalog_on(&read_graph6_lines(&text)?, *filter)?
                }
                (None, None) => bail!("catalog needs --n or --file"),
            };
            let mut json = to_json(&report);
            json["command"] = json!("catalog");
            Output::decided(json, report.to_table())
        }
        Command::Encode { input } => {
            let x = input.image()?;
            let g6 = encode_graph6(&x);
            Output::decided(
                json!({"command": "encode", "graph6": g6}),
                format!("{g6}\n"),
            )
        }
        Command::Decode { g6 } => {
            let x = parse_graph6(g6).with_context(|| format!("graph6 `{g6}`"))?;
            let edges: Vec<[usize; 2]> = x.edges().into_iter().map(|(u, v)| [u, v]).collect();
            Output::decided(
                json!({"command": "decode", "points": x.n(), "edges": edges}),
                x.to_edge_list(),
            )
        }
    })
}

fn emit(cli: &Cli, out: &Output) -> Result<()> {
    let body = if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&out.json)?)
    } else {
        out.text.clone()
    };
    match &cli.out {
        Some(path) => {
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))?
        }
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which is reserved for unknown verdicts
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(1);
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli).and_then(|out| emit(&cli, &out).map(|_| out.status)) {
        Ok(Status::Decided) => ExitCode::SUCCESS,
        Ok(Status::Unknown) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn points(n: usize) -> String {
    if n == 1 {
        "1 point".to_string()
    } else {
        format!("{n} points")
    }
}
