mod claims;
mod export;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use orthograph::automorph::{arc_transitivity_witness, automorphism_group};
use orthograph::combinat::{same_weight_witness, WitnessRequest};
use orthograph::symmetry::{
    construct_graph_distinguishing, construct_quotient_distinguishing, is_distinguishing_reduced, m_bound,
    minimality_witness, smaller_quotient_determining_set, two_labeling_witness, Labeling,
};
use orthograph::{Bits, Omega, OmegaQuotient};
use rayon::prelude::*;
use serde_json::json;

use claims::{Caps, REGISTRY};
use export::Named;
use report::{render_text, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Edgelist,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Parser)]
#[command(name = "ortho", version, about = "Build orthogonality graphs and verify their symmetry properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct CapArgs {
    /// Largest group whose elements may be listed.
    #[arg(long, default_value_t = 1 << 20)]
    cap_group: u64,
    /// Largest exhaustive sweep over labelings, subsets or vertex pairs.
    #[arg(long, default_value_t = 1 << 24)]
    cap_sweep: u64,
    /// Largest k whose graph is built with explicit adjacency.
    #[arg(long, default_value_t = orthograph::MAX_MATERIALIZE_K)]
    cap_materialize: u32,
}

impl From<CapArgs> for Caps {
    fn from(c: CapArgs) -> Self {
        Caps { group: c.cap_group, sweep: c.cap_sweep, materialize_k: c.cap_materialize }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write Ω_2k and its twin quotient as edge lists and DOT files.
    Build {
        #[arg(long)]
        k: u32,
        /// Output directory; without it, Ω_2k is printed in --format.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Print the twin quotient Ω̃_2k.
    Quotient {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Automorphism group of Ω_2k (or of its quotient) by backtracking search.
    Aut {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        quotient: bool,
        /// Also list every element, if the order is within --cap-group.
        #[arg(long)]
        elements: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run one registered claim.
    Verify {
        /// Claim id; see --list.
        claim: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include elapsed time in the report.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run every claim at the k values of the chosen level.
    Suite {
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Minimum number of labels m for 2 ≤ k ≤ k-max.
    TableM {
        #[arg(long, default_value_t = 18)]
        k_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The constructed distinguishing labeling of Ω_2k with m labels.
    Label {
        #[arg(long)]
        k: u32,
        /// Emit the labeling of the quotient instead.
        #[arg(long)]
        quotient: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Explicit witnesses and search probes.
    #[command(subcommand)]
    Witness(WitnessCommand),
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// A weight-(k-1) vertex adjacent to u but not to w (equal odd weight).
    SameWeight {
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
    },
    /// An automorphism mapping the arc (x, y) to the arc (u, w).
    Arc {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        w: String,
    },
    /// A nontrivial automorphism preserving a 2-labeling, given as a string
    /// of 1s and 2s indexed by vertex.
    TwoLabeling {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        labels: String,
    },
    /// A quotient automorphism fixing D without [x_(2k-1)] pointwise.
    Minimality {
        #[arg(long)]
        k: u32,
    },
    /// Search for a determining set of the quotient smaller than D.
    DetProbe {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

fn sink(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_json(value: &impl serde::Serialize, out: &Option<PathBuf>) -> anyhow::Result<()> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn emit_reports(reports: &[Report], format: Format, out: &Option<PathBuf>) -> anyhow::Result<()> {
    match format {
        Format::Json => emit_json(&reports, out),
        Format::Text => Ok(sink(out)?.write_all(render_text(reports).as_bytes())?),
        other => bail!("reports are written as json or text, not {other:?}"),
    }
}

fn omega_named(k: u32, caps: Caps) -> anyhow::Result<Named> {
    let graph = Omega::new(k)?.materialize_with_cap(caps.materialize_k)?;
    Ok(Named { name: format!("omega{}", 2 * k), k, graph })
}

fn quotient_named(k: u32, caps: Caps) -> anyhow::Result<Named> {
    let graph = OmegaQuotient::new(k)?.materialize_with_cap(caps.materialize_k)?;
    Ok(Named { name: format!("quotient{}", 2 * k), k, graph })
}

fn parse_bits(s: &str) -> anyhow::Result<Bits> {
    Bits::parse(s).with_context(|| format!("parsing bitstring {s:?}"))
}

fn exit_for(reports: &[Report]) -> ExitCode {
    if reports.iter().any(|r| r.verdict.is_failure()) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn thread_pool() -> anyhow::Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("ORTHO_THREADS") {
        let n: usize = v.parse().with_context(|| format!("ORTHO_THREADS={v:?}"))?;
        builder = builder.num_threads(n);
    }
    Ok(builder.build()?)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Build { k, out, format, caps } => {
            let caps = Caps::from(caps);
            let graphs = [omega_named(k, caps)?, quotient_named(k, caps)?];
            match out {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    let formats = match format {
                        Some(f) => vec![f],
                        None => vec![Format::Edgelist, Format::Dot],
                    };
                    for g in &graphs {
                        for &f in &formats {
                            let path = dir.join(g.file_name(f));
                            let mut file = io::BufWriter::new(fs::File::create(&path)?);
                            g.write(f, &mut file)?;
                            file.flush()?;
                            eprintln!("wrote {}", path.display());
                        }
                    }
                }
                None => {
                    graphs[0].write(format.unwrap_or(Format::Edgelist), &mut io::BufWriter::new(io::stdout().lock()))?
                }
            }
        }
        Command::Quotient { k, format, out, caps } => {
            let g = quotient_named(k, caps.into())?;
            let mut w = io::BufWriter::new(sink(&out)?);
            g.write(format, &mut w)?;
            w.flush()?;
        }
        Command::Aut { k, quotient, elements, format, out, caps } => {
            let caps = Caps::from(caps);
            let g = if quotient { quotient_named(k, caps)? } else { omega_named(k, caps)? };
            let group = automorphism_group(&g.graph, None)?;
            let listed = if elements { Some(group.elements(caps.group)?) } else { None };
            match format {
                Format::Json => {
                    let r = group.report();
                    let doc = json!({
                        "graph": g.name,
                        "order": r.order,
                        "base": group.base(),
                        "orbit_lengths": group.orbit_lengths(),
                        "generators": r.generators,
                        "elements": listed.map(|v| v.iter().map(|a| a.images().to_vec()).collect::<Vec<_>>()),
                    });
                    emit_json(&doc, &out)?;
                }
                Format::Text => {
                    let mut w = sink(&out)?;
                    writeln!(w, "|Aut({})| = {}", g.name, group.order())?;
                    writeln!(w, "base: {:?}", group.base())?;
                    writeln!(w, "orbit lengths: {:?}", group.orbit_lengths())?;
                    writeln!(w, "generators: {}", group.generators().len())?;
                }
                other => bail!("group reports are written as json or text, not {other:?}"),
            }
        }
        Command::Verify { claim, k, list, format, out, timings, caps } => {
            if list {
                let rows: Vec<_> = REGISTRY
                    .iter()
                    .map(|c| json!({ "claim_id": c.id, "anchor": c.anchor, "k": format!("{}..={}", c.ks.start(), c.ks.end()), "default_k": c.default_k }))
                    .collect();
                match format {
                    Format::Text => {
                        let mut w = sink(&out)?;
                        for c in REGISTRY {
                            writeln!(w, "{:<22} {}", c.id, c.anchor)?;
                        }
                    }
                    _ => emit_json(&rows, &out)?,
                }
                return Ok(ExitCode::SUCCESS);
            }
            let Some(id) = claim else { bail!("give a claim id or --list") };
            let Some(c) = claims::find(&id) else { bail!("unknown claim id {id:?}; see `ortho verify --list`") };
            let k = k.unwrap_or(c.default_k);
            if !c.ks.contains(&k) {
                bail!("claim {id} accepts k in {}..={}, got {k}", c.ks.start(), c.ks.end());
            }
            let report = c.run(k, caps.into(), timings);
            let reports = [report];
            emit_reports(&reports, format, &out)?;
            return Ok(exit_for(&reports));
        }
        Command::Suite { level, format, out, timings, caps } => {
            let caps = Caps::from(caps);
            let jobs: Vec<_> = REGISTRY
                .iter()
                .flat_map(|c| {
                    let ks = match level {
                        Level::Quick => c.quick,
                        Level::Full => c.full,
                    };
                    ks.iter().map(move |&k| (c, k))
                })
                .collect();
            let reports: Vec<Report> =
                thread_pool()?.install(|| jobs.par_iter().map(|&(c, k)| c.run(k, caps, timings)).collect());
            emit_reports(&reports, format, &out)?;
            return Ok(exit_for(&reports));
        }
        Command::TableM { k_max, format } => {
            if k_max < 2 {
                bail!("--k-max must be at least 2");
            }
            let rows: Vec<(u32, u32)> = (2..=k_max).map(|k| (k, m_bound(k))).collect();
            let mut w = sink(&None)?;
            match format {
                Format::Text => {
                    let cells = |f: &dyn Fn(&(u32, u32)) -> u32| -> String {
                        rows.iter().map(|r| format!("{:>3}", f(r))).collect::<Vec<_>>().join("")
                    };
                    writeln!(w, "k {}", cells(&|r| r.0))?;
                    writeln!(w, "m {}", cells(&|r| r.1))?;
                }
                Format::Json => {
                    let doc: Vec<_> = rows.iter().map(|&(k, m)| json!({ "k": k, "m": m })).collect();
                    serde_json::to_writer_pretty(&mut w, &doc)?;
                    writeln!(w)?;
                }
                other => bail!("the table is written as text or json, not {other:?}"),
            }
        }
        Command::Label { k, quotient, out, caps } => {
            let caps = Caps::from(caps);
            let f = if quotient { construct_quotient_distinguishing(k)? } else { construct_graph_distinguishing(k)? };
            let verified = if k <= caps.materialize_k && !quotient {
                json!(is_distinguishing_reduced(k, &f)?)
            } else {
                json!(null)
            };
            let doc = json!({ "k": k, "m": m_bound(k), "labels_used": f.used_label_count(), "distinguishing": verified, "labels": f });
            emit_json(&doc, &out)?;
        }
        Command::Witness(w) => witness(w)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn witness(cmd: WitnessCommand) -> anyhow::Result<()> {
    let doc = match cmd {
        WitnessCommand::SameWeight { u, w } => {
            let req = WitnessRequest::new(parse_bits(&u)?, parse_bits(&w)?)?;
            let y = same_weight_witness(&req)?;
            json!({ "u": u, "w": w, "y": y.to_string(), "weight": y.weight() })
        }
        WitnessCommand::Arc { x, y, u, w } => {
            let a = arc_transitivity_witness(parse_bits(&x)?, parse_bits(&y)?, parse_bits(&u)?, parse_bits(&w)?)?;
            json!({ "maps": [[x, u], [y, w]], "automorphism": a.provenance() })
        }
        WitnessCommand::TwoLabeling { k, labels } => {
            let parsed: Vec<u32> = labels
                .chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(|c| c.to_digit(10).context("labels are digits 1 and 2"))
                .collect::<anyhow::Result<_>>()?;
            let f = Labeling::new(parsed, 2)?;
            let a = two_labeling_witness(&f, k)?;
            json!({ "k": k, "automorphism": a.provenance(), "images": a.images() })
        }
        WitnessCommand::Minimality { k } => {
            let b = minimality_witness(k)?;
            json!({ "k": k, "quotient_automorphism": b })
        }
        WitnessCommand::DetProbe { k, max_size } => {
            let found = smaller_quotient_determining_set(k, max_size)?;
            json!({ "k": k, "searched_up_to": max_size.min(2 * k as usize - 2), "smaller_set": found })
        }
    };
    emit_json(&doc, &None)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
