use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use equideg::bifurcation::{Conclusion, Mode, DIRECTION_ALTERNATIVE};
use equideg::burnside::to_term_list;
use equideg::model_io::{run_report, Model, ModelConfig};
use equideg::spectrum::{BesselZeroTable, Triple};
use equideg::Error;

const BUNDLED: &str = include_str!("../../models/six-membranes.json");

#[derive(Parser)]
#[command(name = "equideg", version, about = "Equivariant degree bifurcation analysis on the disc")]
struct Cli {
    /// Model configuration (JSON). Defaults to the bundled six-membrane model.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Isotypic decomposition of V and the coupling weights.
    Decompose,
    /// Squared Bessel zeros s_nm.
    Bessel {
        #[arg(long, default_value_t = 10)]
        m_max: u32,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
    },
    /// Critical points in increasing alpha.
    CriticalPoints,
    /// Basic degree of V_{m,j}.
    BasicDegree {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        j: usize,
    },
    /// Local bifurcation invariant at a critical point.
    Invariant {
        #[arg(long)]
        id: Triple,
        #[arg(long, default_value = "relative")]
        mode: Mode,
    },
    /// Global verdict for a maximal orbit type.
    Global {
        #[arg(long)]
        orbit_type: String,
    },
    /// Full report.
    Report,
    /// Kernel mode sampled on a polar grid, as CSV.
    KernelGrid {
        #[arg(long)]
        id: Triple,
        #[arg(long)]
        orbit_type: String,
        #[arg(long, default_value_t = 200)]
        resolution: usize,
    },
}

fn load(cli: &Cli) -> equideg::Result<Model> {
    let cfg = match &cli.config {
        Some(p) => ModelConfig::from_path(p)?,
        None => ModelConfig::from_json(BUNDLED)?,
    };
    Model::new(cfg)
}

fn run(cli: &Cli) -> equideg::Result<String> {
    let text = cli.format == Format::Text;
    let out = match &cli.command {
        Command::Bessel { m_max, n_max } => {
            let t = BesselZeroTable::new(*m_max, *n_max)?;
            if text {
                let mut s = String::from("m\\n");
                for n in 1..=*n_max {
                    s.push_str(&format!("\t{n}"));
                }
                s.push('\n');
                for m in 0..=*m_max {
                    s.push_str(&m.to_string());
                    for v in t.row(m) {
                        s.push_str(&format!("\t{v:.3}"));
                    }
                    s.push('\n');
                }
                s
            } else {
                let rows: Vec<&[f64]> = (0..=*m_max).map(|m| t.row(m)).collect();
                json_string(json!({ "s": rows }))
            }
        }
        Command::Decompose => {
            let model = load(cli)?;
            let rows: Vec<Value> = model
                .decomposition
                .iter()
                .enumerate()
                .map(|(j, (label, mult))| {
                    let b = model.blocks.iter().find(|b| b.j == j);
                    json!({
                        "j": j,
                        "label": label,
                        "multiplicity": mult,
                        "weight": b.map(|b| b.weight),
                        "eigenvalue_multiplicity": b.map(|b| b.multiplicity),
                    })
                })
                .collect();
            if text {
                let mut s = String::new();
                for (j, (label, mult)) in model.decomposition.iter().enumerate() {
                    s.push_str(&format!("{label}\tm_{j} = {mult}"));
                    if let Some(b) = model.blocks.iter().find(|b| b.j == j) {
                        s.push_str(&format!("\tweight {:.6}\tdim {}", b.weight, b.multiplicity));
                    }
                    s.push('\n');
                }
                s
            } else {
                json_string(Value::Array(rows))
            }
        }
        Command::CriticalPoints => {
            let model = load(cli)?;
            let cps = model.spectrum.critical_points()?;
            if text {
                cps.iter()
                    .map(|c| format!("{}\talpha = {:.10}\tzeta = {:.10}\ts = {:.6}\n", c.id, c.alpha, c.zeta_level, c.s))
                    .collect()
            } else {
                json_string(serde_json::to_value(&cps).expect("serializes"))
            }
        }
        Command::BasicDegree { m, j } => {
            let model = load(cli)?;
            let d = model.book.basic_degree(*m, *j)?;
            if text {
                format!("{}\n", d.display(model.ambient()))
            } else {
                json_string(json!({ "m": m, "j": j, "terms": to_term_list(&d, model.ambient()) }))
            }
        }
        Command::Invariant { id, mode } => {
            let model = load(cli)?;
            let p = model.problem()?;
            let w = p.local_invariant(p.critical_point(*id)?, *mode)?;
            if text {
                format!("omega{} [{}] = {}\n", w.id, w.mode, w.value.display(model.ambient()))
            } else {
                json_string(json!({
                    "id": w.id,
                    "alpha": w.alpha,
                    "mode": w.mode,
                    "k_fixed": w.k_fixed,
                    "alpha_minus": w.alpha_minus,
                    "alpha_plus": w.alpha_plus,
                    "terms": to_term_list(&w.value, model.ambient()),
                }))
            }
        }
        Command::Global { orbit_type } => {
            let model = load(cli)?;
            let amb = model.ambient();
            let h = model.orbit_type(orbit_type)?;
            let v = model.problem()?.global_verdict(&h)?;
            let members: Vec<Triple> = v.j_set.iter().map(|c| c.id).collect();
            let symmetry = v.symmetry.as_ref().map(|t| amb.symbol(t));
            let unbounded = v.conclusion == Conclusion::UnboundedBranch;
            if text {
                let mut s = format!(
                    "{}: s_bar = {:?}, J = {:?}, {:?}",
                    amb.symbol(&h),
                    v.s_bar,
                    members.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    v.conclusion
                );
                if let Some(sym) = &symmetry {
                    s.push_str(&format!(" with symmetry at least {sym}"));
                }
                s.push('\n');
                if unbounded {
                    s.push_str(DIRECTION_ALTERNATIVE);
                    s.push('\n');
                }
                s
            } else {
                json_string(json!({
                    "orbit_type": amb.symbol(&h),
                    "max_folding": v.s_bar,
                    "members": members,
                    "odd": v.odd,
                    "conclusion": v.conclusion,
                    "symmetry": symmetry,
                    "alternative": unbounded.then_some(DIRECTION_ALTERNATIVE),
                }))
            }
        }
        Command::Report => {
            let model = load(cli)?;
            let r = run_report(&model)?;
            if text {
                report_text(&r)
            } else {
                r.to_json()
            }
        }
        Command::KernelGrid { id, orbit_type, resolution } => {
            let model = load(cli)?;
            let h = model.orbit_type(orbit_type)?;
            model.kernel_mode(*id, &h)?.grid_csv(*resolution)
        }
    };
    Ok(out)
}

fn json_string(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializes");
    s.push('\n');
    s
}

fn report_text(r: &equideg::model_io::BifurcationReport) -> String {
    let terms = |ts: &[equideg::burnside::Term]| {
        ts.iter()
            .map(|t| format!("{:+} {}", t.coeff, t.symbol))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = format!("model {}\n\ncritical points\n", r.model.name);
    for c in &r.critical_points {
        s.push_str(&format!("  {}  alpha = {:.6}\n", c.id, c.alpha));
    }
    s.push_str("\ninvariants\n");
    for w in &r.invariants {
        s.push_str(&format!("  {} [{}]: {}\n", w.id, w.mode, terms(&w.terms)));
    }
    s.push_str("\ncertificates\n");
    for c in &r.certificates {
        s.push_str(&format!("  {} {}: {}\n", c.id, c.orbit_type, c.statement));
    }
    s.push_str("\nverdicts\n");
    for v in &r.verdicts {
        s.push_str(&format!(
            "  {}: {:?}{}\n",
            v.orbit_type,
            v.conclusion,
            v.symmetry.as_ref().map(|x| format!(" with symmetry {x}")).unwrap_or_default()
        ));
    }
    s.push_str("\nsums\n");
    for x in &r.rabinowitz_sum {
        s.push_str(&format!("  [{}]: {}\n", x.mode, terms(&x.terms)));
    }
    for f in &r.flags {
        s.push_str(&format!("flag: {f}\n"));
    }
    for w in &r.warnings {
        s.push_str(&format!("warning: {w}\n"));
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Some(p) = &cli.out {
                if let Err(e) = std::fs::write(p, out) {
                    eprintln!("error: {}: {e}", p.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_config_error() {
        2
    } else {
        3
    }
}
