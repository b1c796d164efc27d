//! The `ordfor` command line. Every invocation prints one JSON report and
//! exits 0 on pass, 1 when a counterexample is found, 2 on bad input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::category::{compose, enumerate_hom, size_bound};
use crate::checks::{self, Report};
use crate::error::{Error, Result};
use crate::forest::{ForestRecord, OrderedForest};
use crate::kan::{
    counit_check, detect_fibration, detect_weak_equivalence, pushforward, pushforward_functor,
    PresheafMapRecord, PresheafRecord,
};
use crate::morphism::{raw_graft, reduce_counting, ForestMorphism};
use crate::normalization::{
    is_fibration, is_weak_equivalence, normalize, normalize_map, SsmMapRecord, SsmRecord,
};
use crate::oracle;
use crate::shadow::{enumerate_surjections, sigma_of};

#[derive(Debug, Parser)]
#[command(
    name = "ordfor",
    version,
    about = "Ordered forests under grafting and their shadow on surjections"
)]
pub struct Cli {
    /// Also write the report (or the DOT graph for export-dot) to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a forest file.
    Validate { file: PathBuf },
    /// Split a forest into its trees.
    Decompose { file: PathBuf },
    /// Graft and reduce `f ∘ g`.
    Compose { f: PathBuf, g: PathBuf },
    /// Contract every unary internal vertex.
    Reduce { file: PathBuf },
    /// List the morphisms `[m] -> [n]`.
    EnumHom {
        m: usize,
        n: usize,
        /// Cross-check against the brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// List the surjections `[n] ↠ [m]`.
    EnumEpi { n: usize, m: usize },
    /// The shadow surjection of a morphism.
    Shadow { file: PathBuf },
    /// Exhaustive property sweeps.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Right Kan extension and its unit and counit.
    #[command(subcommand)]
    Kan(KanCommand),
    /// Normalization of the left adjoint on random complexes.
    NkCheck(RandomArgs),
    /// Normalized chains and homology of a semisimplicial module.
    Homology { file: PathBuf },
    /// Weak equivalence and fibration tests for a map of modules.
    Weq { file: PathBuf },
    /// Write a forest as a Graphviz graph.
    ExportDot { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Unit laws and associativity.
    Axioms {
        #[arg(long, default_value_t = 3)]
        max: usize,
        /// Largest object for associativity; defaults to `min(max, 2)`.
        #[arg(long)]
        assoc_max: Option<usize>,
    },
    /// Unique reduction normal forms.
    Confluence {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Functoriality and fullness of the shadow.
    Pi {
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Tree decomposition of every small forest.
    Decomposition {
        #[arg(long, default_value_t = 7)]
        max_size: usize,
    },
    /// Raw grafts of all small composable pairs.
    Graft {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
    /// Cocones against factorizations through the graft.
    Universal {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 4)]
        target_size: usize,
        #[arg(long)]
        oracle: bool,
    },
    /// Hom enumeration against brute force, and the size bound.
    Hom {
        #[arg(long, default_value_t = 3)]
        max: usize,
        #[arg(long, default_value_t = 9)]
        oracle_size: usize,
        #[arg(long, default_value_t = 12)]
        sweep_size: usize,
    },
    /// The shadow calculus on surjections.
    Shadow {
        #[arg(long, default_value_t = 3)]
        max: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_count: usize,
    },
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 3)]
    pub trunc: usize,
    #[arg(long, default_value_t = 3)]
    pub max_dim: usize,
}

#[derive(Debug, Subcommand)]
pub enum KanCommand {
    /// The limit at `[n]`, or the whole induced functor.
    Push {
        file: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Unit isomorphism over a family of test functors.
    Unit {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        trunc: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
    /// Counit and its pushforward; defaults to the representable at [0].
    Counit {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        trunc: usize,
    },
    /// Detected weak equivalence and fibration for a presheaf map.
    Weq { file: PathBuf },
    /// Detection against the direct test on random restricted maps.
    Detect {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        trunc: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Decompose { .. } => "decompose",
            Command::Compose { .. } => "compose",
            Command::Reduce { .. } => "reduce",
            Command::EnumHom { .. } => "enum-hom",
            Command::EnumEpi { .. } => "enum-epi",
            Command::Shadow { .. } => "shadow",
            Command::Check(_) => "check",
            Command::Kan(_) => "kan",
            Command::NkCheck(_) => "nk-check",
            Command::Homology { .. } => "homology",
            Command::Weq { .. } => "weq",
            Command::ExportDot { .. } => "export-dot",
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

fn read_forest(path: &Path) -> Result<OrderedForest> {
    read_json::<ForestRecord>(path)?.validate()
}

fn read_morphism(path: &Path) -> Result<ForestMorphism> {
    ForestMorphism::from_forest(read_forest(path)?)
}

fn file_param(path: &Path) -> Value {
    json!({ "file": path.display().to_string() })
}

fn morphism_json(f: &ForestMorphism) -> Value {
    json!({ "dom": f.dom(), "cod": f.cod(), "forest": f.to_record() })
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Report> {
    let start = Instant::now();
    let report = match &cli.command {
        Command::Validate { file } => {
            let f = read_forest(file)?;
            let result = json!({
                "forest": f.to_record(),
                "minima": f.minima(),
                "maxima": f.maxima(),
                "height": f.height(),
            });
            Report::outcome("validate", file_param(file), result, start)
        }
        Command::Decompose { file } => {
            let f = read_forest(file)?;
            let d = f.decompose();
            let trees: Vec<Value> = d
                .components
                .iter()
                .zip(d.trees(&f))
                .map(|(c, t)| json!({ "root": c.root, "lo": c.lo, "hi": c.hi, "tree": t.to_record() }))
                .collect();
            let failures = d.verify(&f);
            let mut r = Report::outcome(
                "decompose",
                file_param(file),
                json!({ "trees": trees }),
                start,
            );
            r.pass = failures.is_empty();
            r.counterexamples = failures.into_iter().map(Value::from).collect();
            r
        }
        Command::Compose { f, g } => {
            let (mf, mg) = (read_morphism(f)?, read_morphism(g)?);
            let graft = raw_graft(&mf, &mg)?;
            let composite = compose(&mf, &mg)?;
            let result = json!({
                "graft": graft.h.to_record(),
                "j_f": graft.j_f,
                "j_g": graft.j_g,
                "composite": morphism_json(&composite),
            });
            let params = json!({ "f": f.display().to_string(), "g": g.display().to_string() });
            Report::outcome("compose", params, result, start)
        }
        Command::Reduce { file } => {
            let f = read_forest(file)?;
            let (normal, steps) = reduce_counting(&f)?;
            Report::outcome(
                "reduce",
                file_param(file),
                json!({ "normal_form": normal.to_record(), "contractions": steps }),
                start,
            )
        }
        Command::EnumHom {
            m,
            n,
            oracle: cross,
        } => {
            let hom = enumerate_hom(*m, *n);
            let listed: Vec<Value> = hom.morphisms.iter().map(|f| json!(f.to_record())).collect();
            let mut r = Report::outcome(
                "enum-hom",
                json!({ "m": m, "n": n, "oracle": cross }),
                json!({ "count": hom.len(), "size_bound": size_bound(*m, *n), "forests": listed }),
                start,
            );
            if *cross {
                let expected = oracle::hom_by_brute_force(*m, *n, size_bound(*m, *n));
                r.counts
                    .insert("oracle_count".into(), json!(expected.len()));
                if expected != hom.morphisms {
                    r.pass = false;
                    r.counterexamples
                        .push(json!({ "enumerated": hom.len(), "oracle": expected.len() }));
                }
            }
            r
        }
        Command::EnumEpi { n, m } => {
            let all = enumerate_surjections(*n, *m);
            let values: Vec<Value> = all.iter().map(|s| json!(s.values())).collect();
            Report::outcome(
                "enum-epi",
                json!({ "n": n, "m": m }),
                json!({ "count": all.len(), "surjections": values }),
                start,
            )
        }
        Command::Shadow { file } => {
            let f = read_morphism(file)?;
            let s = sigma_of(&f);
            Report::outcome("shadow", file_param(file), json!(s.to_record()), start)
        }
        Command::Check(c) => match c {
            CheckCommand::Axioms { max, assoc_max } => {
                checks::category_axioms(*max, assoc_max.unwrap_or((*max).min(2)))
            }
            CheckCommand::Confluence { max_size } => checks::confluence(*max_size),
            CheckCommand::Pi { max } => checks::shadow_functor(*max),
            CheckCommand::Decomposition { max_size } => checks::decomposition(*max_size),
            CheckCommand::Graft { max_size } => checks::graft_soundness(*max_size),
            CheckCommand::Universal {
                max_size,
                target_size,
                oracle,
            } => checks::universal_property(*max_size, *target_size, *oracle),
            CheckCommand::Hom {
                max,
                oracle_size,
                sweep_size,
            } => checks::hom_enumeration(*max, *oracle_size, *sweep_size),
            CheckCommand::Shadow {
                max,
                max_n,
                max_count,
            } => checks::shadow_calculus(*max, *max_n, *max_count),
        },
        Command::Kan(k) => match k {
            KanCommand::Push { file, n } => {
                let x = read_json::<PresheafRecord>(file)?.to_presheaf()?;
                let mut params = file_param(file);
                params["n"] = json!(n);
                let result = match n {
                    Some(n) => {
                        let p = pushforward(&x, *n)?;
                        json!({
                            "dim": p.dim(),
                            "comma_objects": p.comma.objects.len(),
                            "comma_arrows": p.comma.arrows.len(),
                            "basis": p.limit.basis.to_record(),
                        })
                    }
                    None => {
                        let pf = pushforward_functor(&x)?;
                        json!({ "dims": pf.functor.dims(), "functor": pf.functor.to_record() })
                    }
                };
                Report::outcome("kan push", params, result, start)
            }
            KanCommand::Unit {
                seed,
                trials,
                trunc,
                max_dim,
            } => checks::unit(*seed, *trials, *trunc, *max_dim),
            KanCommand::Counit { file: None, trunc } => checks::counit(&[0], *trunc),
            KanCommand::Counit {
                file: Some(file), ..
            } => {
                let x = read_json::<PresheafRecord>(file)?.to_presheaf()?;
                let r = counit_check(&x)?;
                let mut report = Report::outcome("kan counit", file_param(file), json!(r), start);
                report.pass = r.passed();
                report
            }
            KanCommand::Weq { file } => {
                let f = read_json::<PresheafMapRecord>(file)?.to_map()?;
                let result = json!({
                    "weak_equivalence": detect_weak_equivalence(&f)?,
                    "fibration": detect_fibration(&f)?,
                });
                Report::outcome("kan weq", file_param(file), result, start)
            }
            KanCommand::Detect {
                seed,
                trials,
                trunc,
                max_dim,
            } => checks::detection(*seed, *trials, *trunc, *max_dim),
        },
        Command::NkCheck(a) => checks::normalization(a.seed, a.trials, a.trunc, a.max_dim),
        Command::Homology { file } => {
            let x = read_json::<SsmRecord>(file)?.to_module()?;
            let c = normalize(&x)?;
            let result = json!({
                "normalized_dims": c.dims(),
                "homology": c.homology_dims(),
                "complex": c.to_record(),
            });
            Report::outcome("homology", file_param(file), result, start)
        }
        Command::Weq { file } => {
            let f = read_json::<SsmMapRecord>(file)?.to_map()?;
            let n = normalize_map(&f)?;
            let result = json!({
                "weak_equivalence": is_weak_equivalence(&f)?,
                "fibration": is_fibration(&f)?,
                "levelwise_surjective": f.is_levelwise_surjective(),
                "normalized_components": n.components().iter().map(|m| m.to_record()).collect::<Vec<_>>(),
            });
            Report::outcome("weq", file_param(file), result, start)
        }
        Command::ExportDot { file } => {
            let f = read_forest(file)?;
            let path = cli
                .out
                .clone()
                .unwrap_or_else(|| file.with_extension("dot"));
            fs::write(&path, f.to_dot())
                .map_err(|e| Error::MalformedInput(format!("{}: {e}", path.display())))?;
            Report::outcome(
                "export-dot",
                file_param(file),
                json!({ "written": path.display().to_string() }),
                start,
            )
        }
    };
    Ok(report)
}

/// Parses `argv`, runs the command, prints the report and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(report) => {
            let code = if report.pass { 0 } else { 1 };
            (
                serde_json::to_string_pretty(&report).expect("reports serialize"),
                code,
            )
        }
        Err(e) => {
            let body = json!({
                "command": cli.command.name(),
                "pass": false,
                "error": { "kind": e.kind(), "message": e.to_string() },
            });
            (
                serde_json::to_string_pretty(&body).expect("errors serialize"),
                2,
            )
        }
    };
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let (Some(path), false) = (&cli.out, matches!(cli.command, Command::ExportDot { .. })) {
        if let Err(e) = fs::write(path, format!("{text}\n")) {
            eprintln!("cannot write {}: {e}", path.display());
            return 2;
        }
    }
    code
}
