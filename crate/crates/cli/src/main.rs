use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use upperspace::formats::{
    emit_powerspace_sidecar, emit_space_report, emit_topspace, parse_poset,
    parse_topspace, to_stable_string,
};
use upperspace::frame::FrameOnD;
use upperspace::gallery::{analyze_gallery, check_witness, GalleryName};
use upperspace::powerspace::PowerSpace;
use upperspace::rudin;
use upperspace::suite::{run_suite, SuiteConfig};
use upperspace::{PointSet, WfParams};

/// Analyzer for finite topological spaces, Smyth power spaces and the frames
/// they carry.
#[derive(Parser)]
#[command(name = "upperspace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Cap on enumerated elements (power-space members, opens).
    #[arg(long, global = true, default_value_t = 100_000)]
    cap: usize,

    /// Seed for sampled checks; always recorded in the output.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Include witness details in reports.
    #[arg(long, global = true)]
    witnesses: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full report (T0, sobriety, well-filteredness, d-space, coherence) for
    /// a space given as TopSpace JSON.
    Analyze { input: PathBuf },
    /// Scott topology of a poset given as Poset JSON.
    Scott { input: PathBuf },
    /// Smyth power space of a space: upper Vietoris topology plus a sidecar
    /// with the reverse-inclusion order and the canonical map.
    Powerspace { input: PathBuf },
    /// Frame checks on D(L) for a finite lattice given as Poset JSON.
    FrameCheck { input: PathBuf },
    /// Minimal irreducible closed subsets: input JSON with "space", "family"
    /// (member point-name lists) and "closed".
    Rudin { input: PathBuf },
    /// Verdicts for a named symbolic space: nat-alexandroff, nat-cofinite,
    /// omega-cocountable-model.
    Gallery {
        name: String,
        /// Also emit the finite fragment on {0..N-1} as a TopSpace.
        #[arg(long)]
        restrict: Option<usize>,
    },
    /// The full verification battery.
    Suite {
        /// Exhaustively enumerate labeled posets up to this size.
        #[arg(long = "exhaustive-upto", default_value_t = 4)]
        exhaustive_upto: usize,
    },
}

enum Outcome {
    Ok(Value),
    Violation(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let (value, code) = match outcome {
                Outcome::Ok(v) => (v, ExitCode::SUCCESS),
                Outcome::Violation(v) => (v, ExitCode::from(2)),
            };
            let text = to_stable_string(&value);
            match &cli.common.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::FAILURE;
                    }
                }
                None => print!("{text}"),
            }
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    let common = &cli.common;
    match &cli.command {
        Command::Analyze { input } => {
            let space = parse_topspace(&read(input)?).map_err(|e| e.to_string())?;
            let params = WfParams { element_cap: common.cap, ..WfParams::default() };
            let report = space.space_report(&params).map_err(|e| e.to_string())?;
            let mut value = emit_space_report(&space, &report);
            value["seed"] = json!(common.seed);
            if !common.witnesses {
                strip_witnesses(&mut value);
            }
            let ok = report.t0
                && report.sober.holds
                && report.well_filtered.holds
                && report.d_space.holds
                && report.coherent.holds;
            Ok(if ok { Outcome::Ok(value) } else { Outcome::Violation(value) })
        }
        Command::Scott { input } => {
            let poset = parse_poset(&read(input)?).map_err(|e| e.to_string())?;
            let scott = poset.scott_topology().map_err(|e| e.to_string())?;
            let mut value = emit_topspace(&scott);
            value["seed"] = json!(common.seed);
            Ok(Outcome::Ok(value))
        }
        Command::Powerspace { input } => {
            let space = parse_topspace(&read(input)?).map_err(|e| e.to_string())?;
            let ps = PowerSpace::build(&space, common.cap).map_err(|e| e.to_string())?;
            let uv = ps.uv_topspace().map_err(|e| e.to_string())?;
            let sidecar = emit_powerspace_sidecar(&ps).map_err(|e| e.to_string())?;
            if let Some(out) = &common.out {
                let mut side_path = out.clone();
                side_path.set_extension("sidecar.json");
                fs::write(&side_path, to_stable_string(&sidecar))
                    .map_err(|e| format!("cannot write {}: {e}", side_path.display()))?;
                let mut value = emit_topspace(&uv);
                value["seed"] = json!(common.seed);
                Ok(Outcome::Ok(value))
            } else {
                Ok(Outcome::Ok(json!({
                    "space": emit_topspace(&uv),
                    "sidecar": sidecar,
                    "seed": common.seed,
                })))
            }
        }
        Command::FrameCheck { input } => {
            let lattice = parse_poset(&read(input)?).map_err(|e| e.to_string())?;
            let frame = FrameOnD::build(&lattice).map_err(|e| e.to_string())?;
            let law = frame.frame_law_check(common.seed);
            let m = frame.elements().len();
            // heyting_implication verifies residuation against every third
            // element; running it over all pairs covers all triples
            for a in 0..m {
                for b in 0..m {
                    frame.heyting_implication(a, b);
                }
            }
            let spatiality = frame.primes_and_spatiality();
            let value = json!({
                "frame_law": law.holds,
                "frame_law_exhaustive": law.exhaustive,
                "residuation": true,
                "spatial": spatiality.spatial,
                "primes": spatiality.primes.len(),
                "element_count": m,
                "seed": common.seed,
            });
            Ok(if law.holds && spatiality.spatial {
                Outcome::Ok(value)
            } else {
                Outcome::Violation(value)
            })
        }
        Command::Rudin { input } => {
            let doc: Value =
                serde_json::from_str(&read(input)?).map_err(|e| e.to_string())?;
            let space =
                parse_topspace(&doc["space"].to_string()).map_err(|e| e.to_string())?;
            let ps = PowerSpace::build(&space, common.cap).map_err(|e| e.to_string())?;
            let to_set = |v: &Value| -> Result<PointSet, String> {
                let names = v
                    .as_array()
                    .ok_or("family members and closed must be name arrays")?;
                let mut idx = Vec::new();
                for name in names {
                    let name = name.as_str().ok_or("point names must be strings")?;
                    idx.push(
                        space
                            .point_index(name)
                            .ok_or_else(|| format!("unknown point {name:?}"))?,
                    );
                }
                Ok(PointSet::from_indices(space.n(), idx))
            };
            let mut family = Vec::new();
            for member in doc["family"].as_array().ok_or("missing \"family\"")? {
                let k = to_set(member)?;
                family.push(
                    ps.element_index(&k)
                        .ok_or_else(|| format!("{member} is not in D(X)"))?,
                );
            }
            let c = to_set(&doc["closed"])?;
            let (minimal, checklist) =
                rudin::rudin_minimal(&ps, &family, &c).map_err(|e| e.to_string())?;
            let value = json!({
                "minimal_closed": space.set_names(&minimal),
                "checklist": {
                    "closed": checklist.closed,
                    "subset_of_c": checklist.subset_of_c,
                    "meets_all_members": checklist.meets_all_members,
                    "minimal": checklist.minimal,
                    "irreducible": checklist.irreducible,
                },
                "seed": common.seed,
            });
            Ok(if checklist.all() { Outcome::Ok(value) } else { Outcome::Violation(value) })
        }
        Command::Gallery { name, restrict } => {
            let name = GalleryName::parse(name).map_err(|e| e.to_string())?;
            let report = analyze_gallery(name).map_err(|e| e.to_string())?;
            let witnesses_ok = report
                .witnesses
                .iter()
                .map(|w| check_witness(name, w))
                .collect::<Result<Vec<bool>, _>>()
                .map_err(|e| e.to_string())?
                .into_iter()
                .all(|ok| ok);
            let mut value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
            value["witnesses_validated"] = json!(witnesses_ok);
            value["seed"] = json!(common.seed);
            if !common.witnesses {
                value.as_object_mut().unwrap().remove("witnesses");
            }
            if let Some(n) = restrict {
                let fragment = name.restrict(*n).map_err(|e| e.to_string())?;
                value["restriction"] = emit_topspace(&fragment);
            }
            Ok(if witnesses_ok { Outcome::Ok(value) } else { Outcome::Violation(value) })
        }
        Command::Suite { exhaustive_upto } => {
            let cfg = SuiteConfig {
                seed: common.seed,
                exhaustive_upto: *exhaustive_upto,
                element_cap: common.cap,
                ..SuiteConfig::default()
            };
            let report = run_suite(&cfg).map_err(|e| e.to_string())?;
            for c in &report.criteria {
                eprintln!(
                    "criterion {}: {} [{}] ({} cases, {} ms)",
                    c.id,
                    c.name,
                    if c.pass { "PASS" } else { "FAIL" },
                    c.cases,
                    c.millis,
                );
            }
            let value = report.to_json();
            Ok(if report.pass { Outcome::Ok(value) } else { Outcome::Violation(value) })
        }
    }
}

fn strip_witnesses(value: &mut Value) {
    for key in ["sober", "well_filtered", "d_space", "coherent"] {
        if let Some(obj) = value[key].as_object_mut() {
            obj.remove("witness");
        }
    }
    value.as_object_mut().unwrap().remove("t0_witness");
}
