use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use polyreal::closure::{compare_closure, Comparison, Derivation};
use polyreal::cone::{build_cone, enumerate_points, kostant, weights_up_to};
use polyreal::crystal::check_axioms;
use polyreal::tableaux::enumerate_tab;
use polyreal::{
    check_positivity, compute_closure, generate_binfty, raw_cone, AdaptedSequence, CartanData,
    ClosureOptions, Orientation, Positivity, RootWeight, SequenceSpec, Validation,
};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::process::ExitCode;

// Writes a line to stdout, ignoring a closed pipe.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

/// Verifier for polyhedral realizations of B(infinity) in types A, B, C, D.
#[derive(Parser)]
#[command(name = "polyreal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List admissible column tableaux supported in the first rows.
    Tab {
        #[command(flatten)]
        common: Common,
        /// Largest row a tableau form may use (default: rank).
        #[arg(long)]
        rows: Option<usize>,
        /// Print the linear form of each tableau.
        #[arg(long)]
        expand: bool,
    },
    /// Compute the truncated closure of the coordinate forms.
    Closure {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
        /// Print a derivation word for each form.
        #[arg(long)]
        derivations: bool,
    },
    /// Check that every closure form is nonnegative in row 1 (exit 1 otherwise).
    Positivity {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
    },
    /// Compare the closure with the tableau forms (exit 1 if they differ).
    Equality {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        window: Window,
    },
    /// Print the inequality system of the image of the embedding.
    Cone {
        #[command(flatten)]
        common: Common,
        /// Skip simplification.
        #[arg(long)]
        raw: bool,
    },
    /// Generate B(infinity) and check it against the cone and the Kostant
    /// partition function (exit 1 on any mismatch).
    CrystalVerify {
        #[command(flatten)]
        common: Common,
        /// Number of f operators applied from the origin.
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Write the crystal graph in DOT format to this file.
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Cartan type and rank, e.g. A3 or c3.
    #[arg(long = "type")]
    cartan: String,
    /// Orientation bits, e.g. `--p 2,1=1 3,2=0`.
    #[arg(long, num_args = 1.., conflicts_with = "period")]
    p: Vec<String>,
    /// Period of the sequence, first letter first, e.g. 2,1,3.
    #[arg(long, value_delimiter = ',')]
    period: Vec<usize>,
    /// Non-repeating prefix before the period.
    #[arg(long, value_delimiter = ',', requires = "period")]
    prefix: Vec<usize>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Worker threads; more than one enables parallel enumeration.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct Window {
    /// Closure window W (default: rank + 5).
    #[arg(long)]
    window: Option<usize>,
}

struct Config {
    spec: SequenceSpec,
    orientation: Option<Orientation>,
    json: bool,
    parallel: bool,
}

impl Config {
    fn rank(&self) -> usize {
        self.spec.cartan().rank()
    }

    fn adapted(&self) -> anyhow::Result<AdaptedSequence> {
        AdaptedSequence::from_spec(&self.spec).context("this command needs an adapted sequence")
    }

    fn window(&self, w: &Window) -> anyhow::Result<usize> {
        let window = w.window.unwrap_or(self.rank() + 5);
        if window < self.rank() {
            bail!("window {window} is smaller than the rank {}", self.rank());
        }
        Ok(window)
    }

    fn closure_options(&self, window: usize) -> ClosureOptions {
        ClosureOptions {
            parallel: self.parallel,
            ..ClosureOptions::new(window)
        }
    }

    fn header(&self, command: &str) -> Value {
        json!({
            "schema_version": 1,
            "command": command,
            "type": self.spec.cartan().name(),
            "sequence": {
                "prefix": self.spec.prefix(),
                "period": self.spec.period(),
                "orientation": self.orientation.as_ref().map(|o| o.to_string()),
                "shifts": self.orientation.as_ref().map(|_| {
                    AdaptedSequence::from_spec(&self.spec).map(|a| a.shifts().to_vec()).ok()
                }),
            },
        })
    }
}

fn parse_orientation(cartan: &CartanData, tokens: &[String]) -> anyhow::Result<Orientation> {
    let mut assignments = Vec::new();
    for tok in tokens.iter().flat_map(|t| t.split_whitespace()) {
        let parse = || -> Option<((usize, usize), u8)> {
            let (edge, bit) = tok.split_once('=')?;
            let (i, j) = edge.split_once(',')?;
            Some((
                (i.trim().parse().ok()?, j.trim().parse().ok()?),
                bit.trim().parse().ok()?,
            ))
        };
        assignments.push(
            parse()
                .ok_or_else(|| anyhow!("bad orientation bit `{tok}`, expected i,j=0 or i,j=1"))?,
        );
    }
    Ok(Orientation::new(cartan, assignments)?)
}

fn configure(common: &Common) -> anyhow::Result<Config> {
    let cartan: CartanData = common.cartan.parse()?;
    if let Some(jobs) = common.jobs {
        if jobs == 0 {
            bail!("--jobs must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }
    let parallel = common.jobs.is_some_and(|j| j > 1);
    let (spec, orientation) = if !common.period.is_empty() {
        let spec = SequenceSpec::new(cartan, common.prefix.clone(), common.period.clone())?;
        let orientation = match spec.validate() {
            Validation::Adapted(o) => Some(o),
            _ => None,
        };
        (spec, orientation)
    } else if !common.p.is_empty() || cartan.edges().is_empty() {
        let o = parse_orientation(&cartan, &common.p)?;
        let adapted = AdaptedSequence::from_orientation(&cartan, o.clone());
        (adapted.sequence().clone(), Some(o))
    } else {
        bail!("give either --p or --period");
    };
    Ok(Config {
        spec,
        orientation,
        json: common.json,
        parallel,
    })
}

fn print_json(v: &Value) {
    say!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn word_text(cfg: &Config, d: &Derivation) -> String {
    let mut parts: Vec<String> = d
        .word
        .iter()
        .rev()
        .map(|&(m, i)| format!("S{}", cfg.spec.position(m, i)))
        .collect();
    parts.push(format!("x{}", cfg.spec.position(d.seed.row, d.seed.col)));
    parts.join(" ")
}

fn derivation_json(cfg: &Config, d: &Derivation) -> Value {
    json!({
        "seed": d.seed,
        "word": d.word.iter().map(|&(m, i)| json!({"s": m, "j": i, "k": cfg.spec.position(m, i)})).collect::<Vec<_>>(),
    })
}

fn cmd_tab(cfg: &Config, rows: Option<usize>, expand: bool) -> anyhow::Result<bool> {
    let seq = cfg.adapted()?;
    let rows = rows.unwrap_or(cfg.rank());
    let tabs = enumerate_tab(&seq, rows);
    if cfg.json {
        let list: Vec<Value> = tabs
            .iter()
            .map(|t| {
                let mut v = json!({"tableau": t.to_string()});
                if expand {
                    v["form"] = json!(t.expand::<i64>(&seq).to_string());
                }
                v
            })
            .collect();
        let mut out = cfg.header("tab");
        out["rows"] = json!(rows);
        out["tableaux"] = json!(list);
        print_json(&out);
    } else {
        for t in &tabs {
            if expand {
                say!("{t} = {}", t.expand::<i64>(&seq));
            } else {
                say!("{t}");
            }
        }
    }
    Ok(true)
}

fn cmd_closure(cfg: &Config, window: &Window, derivations: bool) -> anyhow::Result<bool> {
    let w = cfg.window(window)?;
    let closure = compute_closure::<i64>(&cfg.spec, cfg.closure_options(w));
    let forms = closure.sorted();
    if cfg.json {
        let list: Vec<Value> = forms
            .iter()
            .map(|f| {
                let mut v = json!({"form": f.to_string(), "terms": f});
                if derivations {
                    v["derivation"] =
                        derivation_json(cfg, &closure.derivation(f).expect("closure form"));
                }
                v
            })
            .collect();
        let mut out = cfg.header("closure");
        out["window"] = json!(w);
        out["pad"] = json!(closure.pad);
        out["safe_rows"] = json!(closure.safe_rows);
        out["overflow_count"] = json!(closure.overflow_count);
        out["forms"] = json!(list);
        print_json(&out);
    } else {
        say!(
            "# {} forms, window {}, safe rows {}, overflow {}",
            forms.len(),
            w,
            closure.safe_rows,
            closure.overflow_count
        );
        for f in &forms {
            if derivations {
                let d = closure.derivation(f).expect("closure form");
                say!("{f}    <- {}", word_text(cfg, &d));
            } else {
                say!("{f}");
            }
        }
    }
    Ok(true)
}

fn cmd_positivity(cfg: &Config, window: &Window) -> anyhow::Result<bool> {
    let w = cfg.window(window)?;
    let closure = compute_closure::<i64>(&cfg.spec, cfg.closure_options(w));
    let verdict = check_positivity(closure.forms());
    if cfg.json {
        let mut out = cfg.header("positivity");
        out["window"] = json!(w);
        out["pass"] = json!(verdict.passed());
        if let Positivity::Witness { form, column } = &verdict {
            out["witness"] = json!({
                "form": form.to_string(),
                "single_index": form.single_index(&cfg.spec),
                "column": column,
                "derivation": derivation_json(cfg, &closure.derivation(form).expect("closure form")),
            });
        }
        print_json(&out);
    } else {
        match &verdict {
            Positivity::Pass => say!("pass: {} forms, row 1 nonnegative", closure.len()),
            Positivity::Witness { form, column } => {
                let d = closure.derivation(form).expect("closure form");
                say!("fail: {}", form.single_index(&cfg.spec));
                say!("form: {form}");
                say!("negative coefficient at x[1,{column}]");
                say!("derivation: {}", word_text(cfg, &d));
            }
        }
    }
    Ok(verdict.passed())
}

fn comparison_json(c: &Comparison<i64>) -> Value {
    json!({
        "equal": c.equal,
        "safe_rows": c.safe_rows,
        "closure_size": c.closure_size,
        "tableau_count": c.tableau_count,
        "overflow_count": c.overflow_count,
        "missing_from_closure": c.missing_from_closure.iter()
            .map(|(f, t)| json!({"form": f.to_string(), "tableau": t.to_string()}))
            .collect::<Vec<_>>(),
        "missing_from_tab": c.missing_from_tab.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "collisions": c.collisions.iter()
            .map(|(f, ts)| json!({"form": f.to_string(), "tableaux": ts.iter().map(|t| t.to_string()).collect::<Vec<_>>()}))
            .collect::<Vec<_>>(),
    })
}

fn cmd_equality(cfg: &Config, window: &Window) -> anyhow::Result<bool> {
    let w = cfg.window(window)?;
    let seq = cfg.adapted()?;
    let closure = compute_closure::<i64>(seq.sequence(), cfg.closure_options(w));
    let c = compare_closure(&seq, &closure);
    if cfg.json {
        let mut out = cfg.header("equality");
        out["window"] = json!(w);
        out["report"] = comparison_json(&c);
        print_json(&out);
    } else {
        say!(
            "{}: {} closure forms, {} tableaux, safe rows {}",
            if c.equal { "equal" } else { "different" },
            c.closure_size,
            c.tableau_count,
            c.safe_rows
        );
        for (f, t) in &c.missing_from_closure {
            say!("missing from closure: {f} from {t}");
        }
        for f in &c.missing_from_tab {
            say!("not a tableau form: {f}");
        }
        for (f, ts) in &c.collisions {
            let names: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
            say!("shared expansion: {f} from {}", names.join(", "));
        }
    }
    Ok(c.equal)
}

fn cmd_cone(cfg: &Config, raw: bool) -> anyhow::Result<bool> {
    let seq = cfg.adapted()?;
    let system = if raw {
        raw_cone(&seq)
    } else {
        build_cone(&seq)
    };
    if cfg.json {
        let mut out = cfg.header("cone");
        out["raw"] = json!(raw);
        out["rows"] = json!(system.rows);
        out["constraints"] = json!(system
            .constraints
            .iter()
            .map(|c| json!({
                "form": c.form.to_string(),
                "terms": c.form,
                "sources": c.sources.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>());
        out["zero_vars"] = json!(system.zero_vars);
        print_json(&out);
    } else {
        say!("{system}");
    }
    Ok(true)
}

fn cmd_crystal_verify(
    cfg: &Config,
    depth: usize,
    dot: Option<&std::path::Path>,
) -> anyhow::Result<bool> {
    let seq = cfg.adapted()?;
    let n = cfg.rank();
    let graph = generate_binfty(seq.sequence(), depth, cfg.parallel);
    if let Some(path) = dot {
        std::fs::write(path, graph.to_dot())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let cone = build_cone(&seq);
    let non_members: Vec<String> = graph
        .points
        .iter()
        .filter(|p| !cone.member(p))
        .map(|p| p.to_string())
        .collect();
    let axioms = check_axioms(seq.sequence(), &graph);
    let counts = graph.weight_counts(n);
    let mut rows: BTreeMap<RootWeight, (usize, usize, u64)> = BTreeMap::new();
    let mut mismatches = Vec::new();
    for mu in weights_up_to(n, depth as i64) {
        let generated = counts.get(&mu).copied().unwrap_or(0);
        let lattice = enumerate_points(&cone, &mu).len();
        let k = kostant(seq.kind(), n, &mu);
        if generated as u64 != k || lattice as u64 != k {
            mismatches.push(mu.clone());
        }
        rows.insert(mu, (generated, lattice, k));
    }
    let ok = non_members.is_empty() && axioms.is_empty() && mismatches.is_empty();
    if cfg.json {
        let mut out = cfg.header("crystal-verify");
        out["depth"] = json!(depth);
        out["points"] = json!(graph.points.len());
        out["pass"] = json!(ok);
        out["weights"] = json!(rows
            .iter()
            .map(|(mu, &(g, l, k))| json!({"weight": mu.0, "generated": g, "lattice": l, "kostant": k}))
            .collect::<Vec<_>>());
        out["non_members"] = json!(non_members);
        out["axiom_failures"] = json!(axioms);
        print_json(&out);
    } else {
        say!(
            "{}: {} points to depth {}, {} weights checked",
            if ok { "pass" } else { "fail" },
            graph.points.len(),
            depth,
            rows.len()
        );
        for mu in &mismatches {
            let (g, l, k) = rows[mu];
            say!("weight {mu}: generated {g}, lattice points {l}, Kostant {k}");
        }
        for p in non_members.iter().take(10) {
            say!("not in the cone: {p}");
        }
        for a in axioms.iter().take(10) {
            say!("axiom: {a}");
        }
    }
    Ok(ok)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Tab {
            common,
            rows,
            expand,
        } => cmd_tab(&configure(&common)?, rows, expand),
        Command::Closure {
            common,
            window,
            derivations,
        } => cmd_closure(&configure(&common)?, &window, derivations),
        Command::Positivity { common, window } => cmd_positivity(&configure(&common)?, &window),
        Command::Equality { common, window } => cmd_equality(&configure(&common)?, &window),
        Command::Cone { common, raw } => cmd_cone(&configure(&common)?, raw),
        Command::CrystalVerify { common, depth, dot } => {
            cmd_crystal_verify(&configure(&common)?, depth, dot.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
