//! Subcommand implementations.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::json;

use prodstate::classify::{classify_lh, classify_prod};
use prodstate::gadgets::{
    self, decode_coloring, decode_cut, encode_coloring, encode_cut, objective_value, ReductionKind,
    WeightMatrix,
};
use prodstate::geometry::{self, LemmaCheckConfig, LemmaId};
use prodstate::graph::Graph;
use prodstate::hamiltonian::HamiltonianFile;
use prodstate::oracle::{self, GridObjective, OracleBudget};
use prodstate::pauli::{Hermitian4, TermSet};
use prodstate::solvers::{self, SolverConfig, StepSchedule};
use prodstate::Error;

/// Usage problems exit 2; domain errors exit 3 with a JSON body.
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn env_f64(name: &str) -> Option<f64> {
    std::env::var(name).ok()?.parse().ok()
}

/// Default classification tolerance, overridable via
/// `PRODSTATE_TOL_CLASSIFY`.
fn default_classify_tol() -> f64 {
    env_f64("PRODSTATE_TOL_CLASSIFY").unwrap_or(prodstate::consts::TOL_CLASSIFY)
}

/// Default solver stopping tolerance, overridable via
/// `PRODSTATE_SOLVER_TOL`.
fn default_solver_tol() -> f64 {
    env_f64("PRODSTATE_SOLVER_TOL").unwrap_or(prodstate::consts::SOLVER_TOL)
}

fn parse_graph(path: &PathBuf) -> Result<Graph, CliError> {
    Ok(Graph::parse(&crate::output::read_file(path)?)?)
}

fn parse_terms(path: &PathBuf) -> Result<TermSet, CliError> {
    let text = crate::output::read_file(path)?;
    let terms: TermsFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))?;
    TermSet::new(terms.terms).map_err(CliError::Domain)
}

fn parse_single_term(path: &PathBuf) -> Result<Hermitian4, CliError> {
    let text = crate::output::read_file(path)?;
    // Accept either a bare term or a {"terms": [...]} document.
    if let Ok(h) = serde_json::from_str::<Hermitian4>(&text) {
        return Ok(h);
    }
    let terms: TermsFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))?;
    terms
        .terms
        .into_iter()
        .next()
        .ok_or_else(|| CliError::Usage("term file is empty".into()))
}

#[derive(serde::Deserialize)]
struct TermsFile {
    terms: Vec<Hermitian4>,
}

fn parse_weights(spec: &Option<String>) -> Result<Option<WeightMatrix>, CliError> {
    let Some(spec) = spec else { return Ok(None) };
    let parts: Vec<f64> = spec
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("cannot parse --W '{spec}': {e}")))?;
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "--W wants three comma-separated entries, got {}",
            parts.len()
        )));
    }
    Ok(Some(WeightMatrix::new(parts[0], parts[1], parts[2])?))
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct ClassifyArgs {
    /// JSON file: {"terms": [{"matrix": ...}, ...]}.
    #[arg(long)]
    terms: PathBuf,
    /// Tolerance for the rank-1 and parallelism tests.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn classify(args: ClassifyArgs) -> Result<(), CliError> {
    let tol = args.tol.unwrap_or_else(default_classify_tol);
    let set = parse_terms(&args.terms)?;
    let prod = classify_prod(&set, tol);
    let lh = classify_lh(&set, tol);
    let out = json!({
        "config": { "terms": args.terms, "tol": tol },
        "prod": prod,
        "lh": lh.class,
        "witness_rotation": lh.witness,
    });
    crate::output::emit(&args.out, &out)
}

// ---------------------------------------------------------------------------
// compile
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReductionName {
    #[value(name = "maxcut-wmc")]
    MaxcutWmc,
    #[value(name = "3col-wmc-eq")]
    ThreeColWmcEq,
    #[value(name = "3col-wmc-2max")]
    ThreeColWmc2Max,
    #[value(name = "3col-mc3")]
    ThreeColMc3,
    #[value(name = "antisym-ham")]
    AntisymHam,
    #[value(name = "sym-ham")]
    SymHam,
}

#[derive(Args)]
pub struct CompileArgs {
    #[arg(long, value_enum)]
    reduction: ReductionName,
    #[arg(long)]
    graph: PathBuf,
    /// 2-qubit term (JSON), required by the Hamiltonian gadgets.
    #[arg(long)]
    term: Option<PathBuf>,
    /// Star-gadget size override.
    #[arg(long = "K")]
    k: Option<usize>,
    /// Stretch entries "a,b,c" for maxcut-wmc.
    #[arg(long = "W")]
    weights: Option<String>,
    /// Third stretch entry for 3col-wmc-2max.
    #[arg(long, default_value_t = 0.5)]
    gamma: f64,
    /// Max-Cut decision target; brute-forced when omitted.
    #[arg(long)]
    cut_target: Option<u64>,
    /// Source-instance cut thresholds mapped into energy units by the
    /// Hamiltonian gadgets.
    #[arg(long)]
    thr_yes: Option<f64>,
    #[arg(long)]
    thr_no: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn compile(args: CompileArgs) -> Result<(), CliError> {
    let g = parse_graph(&args.graph)?;
    let thresholds = match (args.thr_yes, args.thr_no) {
        (Some(y), Some(n)) => Some((y, n)),
        (None, None) => None,
        _ => {
            return Err(CliError::Usage(
                "--thr-yes and --thr-no must be given together".into(),
            ))
        }
    };
    let artifact = match args.reduction {
        ReductionName::MaxcutWmc => {
            let w = parse_weights(&args.weights)?.unwrap_or(WeightMatrix::new(1.0, 0.5, 0.25)?);
            gadgets::maxcut_to_wmc(&g, &w, args.k, args.cut_target)?
        }
        ReductionName::ThreeColWmcEq => gadgets::threecolor_to_wmc_equal(&g)?,
        ReductionName::ThreeColWmc2Max => {
            gadgets::threecolor_to_wmc_twomax(&g, args.k, args.gamma)?
        }
        ReductionName::ThreeColMc3 => gadgets::threecolor_to_mc3(&g)?,
        ReductionName::AntisymHam | ReductionName::SymHam => {
            let term_path = args
                .term
                .as_ref()
                .ok_or_else(|| CliError::Usage("Hamiltonian gadgets need --term".into()))?;
            let term = parse_single_term(term_path)?;
            if args.reduction == ReductionName::AntisymHam {
                gadgets::antisym_gadget_hamiltonian(&term, &g, thresholds)?
            } else {
                gadgets::sym_gadget_hamiltonian(&term, &g, thresholds)?
            }
        }
    };
    let out = json!({
        "config": {
            "graph": args.graph,
            "K": args.k,
            "gamma": args.gamma,
            "cut_target": args.cut_target,
        },
        "artifact": artifact,
    });
    crate::output::emit(&args.out, &out)
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Objective {
    Mck,
    Wmc,
    Prod,
}

#[derive(Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    objective: Objective,
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Stretch entries "a,b,c" for the wmc objective.
    #[arg(long = "W")]
    weights: Option<String>,
    /// Hamiltonian JSON for the prod objective.
    #[arg(long)]
    ham: Option<PathBuf>,
    /// Vector dimension for mck.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 1)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = prodstate::consts::SOLVER_MAX_ITERS)]
    iters: usize,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn solve(args: SolveArgs) -> Result<(), CliError> {
    let tol = args.tol.unwrap_or_else(default_solver_tol);
    let cfg = SolverConfig {
        seed: args.seed,
        restarts: args.restarts,
        max_iters: args.iters,
        tol,
    };
    let report = match args.objective {
        Objective::Mck => {
            let path = args
                .graph
                .as_ref()
                .ok_or_else(|| CliError::Usage("mck needs --graph".into()))?;
            let g = parse_graph(path)?;
            solvers::multi_restart_mck(&g, args.k, &cfg)?
        }
        Objective::Wmc => {
            let path = args
                .graph
                .as_ref()
                .ok_or_else(|| CliError::Usage("wmc needs --graph".into()))?;
            let g = parse_graph(path)?;
            let w = parse_weights(&args.weights)?.unwrap_or(WeightMatrix::identity());
            solvers::multi_restart_wmc(&g, &w, StepSchedule::default(), &cfg)?
        }
        Objective::Prod => {
            let path = args
                .ham
                .as_ref()
                .ok_or_else(|| CliError::Usage("prod needs --ham".into()))?;
            let text = crate::output::read_file(path)?;
            let file: HamiltonianFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("cannot parse {}: {e}", path.display())))?;
            let (h, terms) = file.split()?;
            solvers::multi_restart_prod(&h, &terms, &cfg)?
        }
    };
    let out = json!({
        "config": { "graph": args.graph, "ham": args.ham, "k": args.k, "solver": cfg },
        "report": report,
    });
    crate::output::emit(&args.out, &out)
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleTask {
    Maxcut,
    #[value(name = "3color")]
    ThreeColor,
    Grid,
}

#[derive(Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    task: OracleTask,
    #[arg(long)]
    graph: PathBuf,
    /// Grid objective: mck or wmc.
    #[arg(long, value_enum)]
    objective: Option<Objective>,
    #[arg(long = "W")]
    weights: Option<String>,
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Grid resolution in degrees.
    #[arg(long, default_value_t = prodstate::consts::GRID_RESOLUTION_DEG)]
    resolution: u32,
    #[arg(long, default_value_t = 5)]
    max_vertices: usize,
    #[arg(long, default_value_t = prodstate::consts::GRID_TIME_LIMIT_SECS)]
    time_limit: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn oracle(args: OracleArgs) -> Result<(), CliError> {
    let g = parse_graph(&args.graph)?;
    let out = match args.task {
        OracleTask::Maxcut => {
            let (value, labeling) = oracle::brute_maxcut(&g)?;
            json!({
                "config": { "graph": args.graph, "task": "maxcut" },
                "value": value,
                "labeling": labeling,
            })
        }
        OracleTask::ThreeColor => {
            let coloring = oracle::brute_3coloring(&g)?;
            json!({
                "config": { "graph": args.graph, "task": "3color" },
                "colorable": coloring.is_some(),
                "coloring": coloring,
            })
        }
        OracleTask::Grid => {
            let objective = match args.objective {
                Some(Objective::Wmc) => GridObjective::Wmc {
                    w: parse_weights(&args.weights)?.unwrap_or(WeightMatrix::identity()),
                },
                Some(Objective::Mck) | None => GridObjective::Mck { k: args.k },
                Some(Objective::Prod) => {
                    return Err(CliError::Usage(
                        "grid search supports mck and wmc objectives".into(),
                    ))
                }
            };
            let budget = OracleBudget {
                max_vertices: args.max_vertices,
                grid_resolution: args.resolution,
                time_limit_secs: args.time_limit,
            };
            let result = oracle::grid_search_vectors(&g, &objective, &budget)?;
            json!({
                "config": {
                    "graph": args.graph,
                    "task": "grid",
                    "objective": objective,
                    "budget": budget,
                },
                "result": result,
            })
        }
    };
    crate::output::emit(&args.out, &out)
}

// ---------------------------------------------------------------------------
// verify-geometry
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct VerifyGeometryArgs {
    /// A2, A3, A4, A5, or A6max.
    #[arg(long)]
    lemma: String,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    /// Asserted constant for the O(δ) conclusions.
    #[arg(long)]
    constant: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn verify_geometry(args: VerifyGeometryArgs) -> Result<(), CliError> {
    let lemma = LemmaId::from_str(&args.lemma)?;
    let defaults = LemmaCheckConfig::default();
    let cfg = LemmaCheckConfig {
        samples: args.samples,
        seed: args.seed,
        eps: args.eps.unwrap_or(defaults.eps),
        delta: args.delta.unwrap_or(defaults.delta),
        constant_c: args.constant.unwrap_or(defaults.constant_c),
    };
    let report = geometry::check_lemma(lemma, &cfg);
    crate::output::emit(&args.out, &report)
}

// ---------------------------------------------------------------------------
// roundtrip
// ---------------------------------------------------------------------------

#[derive(Args)]
pub struct RoundtripArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum)]
    reduction: ReductionName,
    #[arg(long = "K")]
    k: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    gamma: f64,
    #[arg(long = "W")]
    weights: Option<String>,
    #[arg(long, default_value_t = 100)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2000)]
    iters: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct RoundtripValues {
    threshold_yes: f64,
    threshold_no: f64,
    solver_best: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    encoded_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_cut: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decoded_cut: Option<u64>,
}

pub fn roundtrip(args: RoundtripArgs) -> Result<(), CliError> {
    let g = parse_graph(&args.graph)?;
    let cfg = SolverConfig {
        seed: args.seed,
        restarts: args.restarts,
        max_iters: args.iters,
        tol: default_solver_tol(),
    };

    let artifact = match args.reduction {
        ReductionName::MaxcutWmc => {
            let w = parse_weights(&args.weights)?.unwrap_or(WeightMatrix::new(1.0, 0.5, 0.25)?);
            gadgets::maxcut_to_wmc(&g, &w, args.k, None)?
        }
        ReductionName::ThreeColWmcEq => gadgets::threecolor_to_wmc_equal(&g)?,
        ReductionName::ThreeColWmc2Max => {
            gadgets::threecolor_to_wmc_twomax(&g, args.k, args.gamma)?
        }
        ReductionName::ThreeColMc3 => gadgets::threecolor_to_mc3(&g)?,
        _ => {
            return Err(CliError::Usage(
                "roundtrip drives the graph reductions; compile Hamiltonian gadgets directly"
                    .into(),
            ))
        }
    };

    let out_graph = artifact.output_graph()?.clone();
    let report = match artifact.kind {
        ReductionKind::ThreeColorToMc3 => solvers::multi_restart_mck(&out_graph, 3, &cfg)?,
        _ => {
            let w = artifact
                .params
                .weight
                .expect("graph artifacts record their stretch");
            solvers::multi_restart_wmc(&out_graph, &w, StepSchedule::default(), &cfg)?
        }
    };
    let best = match &report.best_assignment {
        solvers::Assignment::Vectors(v) => v.clone(),
        _ => unreachable!("graph solvers return vector assignments"),
    };

    let threshold_yes = artifact.threshold_yes.unwrap();
    let threshold_no = artifact.threshold_no.unwrap();

    let verdict = if artifact.kind == ReductionKind::MaxCutToWmc {
        let (oracle_cut, labeling) = oracle::brute_maxcut(&g)?;
        let encoded = encode_cut(&artifact, &labeling)?;
        let encoded_value = objective_value(&artifact, &encoded)?;
        let (_, decoded_cut) = decode_cut(&artifact, &best)?;
        json!({
            "oracle_yes": true,
            "complete_side_met": (encoded_value - threshold_yes).abs() <= 1e-9,
            "decoded_solution_valid": decoded_cut == oracle_cut,
            "values": RoundtripValues {
                threshold_yes,
                threshold_no,
                solver_best: report.best_value,
                encoded_value: Some(encoded_value),
                oracle_cut: Some(oracle_cut),
                decoded_cut: Some(decoded_cut),
            },
        })
    } else {
        let coloring = oracle::brute_3coloring(&g)?;
        let decoded = decode_coloring(&artifact, &best)?;
        match coloring {
            Some(c) => {
                let encoded = encode_coloring(&artifact, &c)?;
                let encoded_value = objective_value(&artifact, &encoded)?;
                json!({
                    "oracle_yes": true,
                    "complete_side_met": (encoded_value - threshold_yes).abs() <= 1e-9,
                    "decoded_solution_valid": decoded.is_some(),
                    "decoded_coloring": decoded,
                    "values": RoundtripValues {
                        threshold_yes,
                        threshold_no,
                        solver_best: report.best_value,
                        encoded_value: Some(encoded_value),
                        oracle_cut: None,
                        decoded_cut: None,
                    },
                })
            }
            None => {
                let gap = artifact.params.epsilon.unwrap_or(0.0);
                json!({
                    "oracle_yes": false,
                    "solver_below_threshold": report.best_value < threshold_yes - gap,
                    "decoded_solution_valid": false,
                    "decode_failure": decoded.is_none(),
                    "note": "soundness at desk scale is empirical evidence, not proof",
                    "values": RoundtripValues {
                        threshold_yes,
                        threshold_no,
                        solver_best: report.best_value,
                        encoded_value: None,
                        oracle_cut: None,
                        decoded_cut: None,
                    },
                })
            }
        }
    };

    let out = json!({
        "config": {
            "graph": args.graph,
            "K": args.k,
            "gamma": args.gamma,
            "solver": cfg,
        },
        "verdict": verdict,
    });
    crate::output::emit(&args.out, &out)
}
