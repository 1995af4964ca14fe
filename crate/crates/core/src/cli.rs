//! Instance files, reports and the command implementations behind the
//! `skelreal` binary.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::explorer::{
    build_move_graph, connected_components, enumerate_realizations, find_move_path,
    verify_counterexample, CounterexampleCheck, EnumerationMode, OracleLimit, FIG2_LABELS,
};
use crate::graph::{DegreeSequence, LabeledGraph};
use crate::skeleton::{check_consistency, jdm_to_skeleton, Bone, Partition, SkeletonGraph};
use crate::solvers::{
    bipartition_range, bipartition_realize, bipartition_skeleton, unicyclic_solve_detailed,
    BipartitionOutcome, Shape,
};
use crate::swaps::{Move, MoveKind, Swap};
use crate::tutte::weak_realize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub label: String,
    pub degree: usize,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoneEntry {
    pub a: String,
    pub b: String,
    /// `None` leaves the bone's edge count free.
    #[serde(default)]
    pub weight: Option<u64>,
}

/// On-disk instance: vertices with degree and class label, and bones between
/// class labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub vertices: Vec<VertexEntry>,
    #[serde(default)]
    pub bones: Vec<BoneEntry>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        serde_json::from_str(text)
            .map_err(|e| format!("line {}, column {}: {e}", e.line(), e.column()))
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> std::result::Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// A parsed instance with dense vertex and class ids. Vertex ids follow file
/// order; class ids follow first appearance among the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub labels: Vec<String>,
    pub class_labels: Vec<String>,
    pub d: DegreeSequence,
    pub skeleton: SkeletonGraph,
}

impl Instance {
    pub fn from_file(file: &InstanceFile) -> std::result::Result<Self, String> {
        let mut labels = Vec::new();
        let mut seen = BTreeSet::new();
        let mut class_labels: Vec<String> = Vec::new();
        let mut class_index: HashMap<String, usize> = HashMap::new();
        let mut class_of = Vec::new();
        let mut degrees = Vec::new();
        for v in &file.vertices {
            if !seen.insert(v.label.clone()) {
                return Err(format!("duplicate vertex label {:?}", v.label));
            }
            labels.push(v.label.clone());
            let next = class_labels.len();
            let c = *class_index.entry(v.class.clone()).or_insert_with(|| {
                class_labels.push(v.class.clone());
                next
            });
            class_of.push(c);
            degrees.push(v.degree);
        }
        let partition = Partition::from_class_of(class_of).map_err(|e| e.to_string())?;
        let mut bones = Vec::new();
        for b in &file.bones {
            let lookup = |l: &String| {
                class_index
                    .get(l)
                    .copied()
                    .ok_or_else(|| format!("bone refers to unknown class {l:?}"))
            };
            bones.push(Bone::new(lookup(&b.a)?, lookup(&b.b)?, b.weight));
        }
        let skeleton = SkeletonGraph::new(partition, bones).map_err(|e| e.to_string())?;
        Ok(Instance {
            labels,
            class_labels,
            d: DegreeSequence::new(degrees),
            skeleton,
        })
    }

    pub fn to_file(&self) -> InstanceFile {
        let p = self.skeleton.partition();
        InstanceFile {
            vertices: (0..self.labels.len())
                .map(|v| VertexEntry {
                    label: self.labels[v].clone(),
                    degree: self.d[v],
                    class: self.class_labels[p.class_of(v)].clone(),
                })
                .collect(),
            bones: self
                .skeleton
                .bones()
                .iter()
                .map(|b| BoneEntry {
                    a: self.class_labels[b.a].clone(),
                    b: self.class_labels[b.b].clone(),
                    weight: b.weight,
                })
                .collect(),
        }
    }

    /// Edges as label pairs, each pair and the list sorted.
    pub fn edge_labels(&self, g: &LabeledGraph) -> Vec<[String; 2]> {
        let mut out: Vec<[String; 2]> = g
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if a <= b {
                    [a, b]
                } else {
                    [b, a]
                }
            })
            .collect();
        out.sort();
        out
    }

    pub fn edges_text(&self, g: &LabeledGraph) -> String {
        let parts: Vec<String> = self
            .edge_labels(g)
            .iter()
            .map(|[a, b]| format!("{a}-{b}"))
            .collect();
        if parts.is_empty() {
            "(none)".to_string()
        } else {
            parts.join(" ")
        }
    }

    pub fn bone_name(&self, s: &SkeletonGraph, b: usize) -> String {
        let bone = &s.bones()[b];
        format!(
            "{}-{}",
            self.class_labels[bone.a], self.class_labels[bone.b]
        )
    }

    fn pair_text(&self, u: usize, v: usize) -> String {
        let (a, b) = (&self.labels[u], &self.labels[v]);
        if a <= b {
            format!("{a}-{b}")
        } else {
            format!("{b}-{a}")
        }
    }

    fn swap_text(&self, s: &Swap) -> String {
        format!(
            "{}, {} => {}, {}",
            self.pair_text(s.a, s.b),
            self.pair_text(s.c, s.d),
            self.pair_text(s.b, s.c),
            self.pair_text(s.a, s.d)
        )
    }

    pub fn move_text(&self, m: &Move) -> String {
        match m {
            Move::Swap(s) => format!("swap {}", self.swap_text(s)),
            Move::DoubleSwap(ds) => format!(
                "double swap [{}] + [{}]",
                self.swap_text(&ds.first),
                self.swap_text(&ds.second)
            ),
            Move::CircuitExchange(x) => {
                let vs: Vec<&str> = x.circuit.iter().map(|&v| self.labels[v].as_str()).collect();
                format!("exchange {}", vs.join(" "))
            }
        }
    }

    fn witness(&self, name: &str, g: &LabeledGraph, s: &SkeletonGraph) -> WitnessReport {
        let counts = s.bone_counts(g);
        WitnessReport {
            name: name.to_string(),
            edges: self.edge_labels(g),
            bone_counts: (0..s.bones().len())
                .map(|b| BoneValue {
                    bone: self.bone_name(s, b),
                    value: counts[b],
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoneValue {
    pub bone: String,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub name: String,
    pub edges: Vec<[String; 2]>,
    pub bone_counts: Vec<BoneValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeReport {
    pub quantity: String,
    pub min: u64,
    pub max: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFunctionReport {
    pub weights: Vec<BoneValue>,
    pub witness: WitnessReport,
}

/// Machine-readable result of one command.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<RangeReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weight_functions: Vec<WeightFunctionReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<&CounterexampleCheck> for CheckReport {
    fn from(c: &CounterexampleCheck) -> Self {
        CheckReport {
            name: c.name.clone(),
            passed: c.passed,
            detail: c.detail.clone(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "skelreal",
    version,
    about = "Realize degree sequences under skeleton graph constraints"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MovesArg {
    Swaps,
    #[value(name = "swaps+double")]
    SwapsDouble,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Find a realization that uses only chords of the skeleton.
    WeakRealize {
        /// Instance file (JSON)
        instance: PathBuf,
        /// Also write a JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-class instances: realize a crossing count, or report the range.
    Bipartition {
        /// Instance file (JSON)
        instance: PathBuf,
        /// Number of crossing edges to realize
        #[arg(long, conflicts_with = "range", required_unless_present = "range")]
        k: Option<usize>,
        /// Report the feasible crossing counts instead
        #[arg(long)]
        range: bool,
        /// Also write a JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All feasible weight functions of a loopless skeleton with at most one cycle.
    Unicyclic {
        /// Instance file (JSON)
        instance: PathBuf,
        /// Also write a JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate consistent realizations and their move graph.
    Explore {
        /// Instance file (JSON)
        instance: PathBuf,
        /// Move kinds that connect realizations
        #[arg(long, value_enum, default_value = "swaps")]
        moves: MovesArg,
        /// Shortest move path between two realization indices.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"])]
        path: Option<Vec<usize>>,
        /// Also write a JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the built-in instance where swaps alone are not enough.
    VerifyCounterexample {
        /// Also write a JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Turn a joint degree matrix into an instance file.
    Jdm {
        /// Whitespace-separated square matrix, one row per line
        matrix: PathBuf,
        /// Also write a JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Command {
    fn out(&self) -> Option<&Path> {
        match self {
            Command::WeakRealize { out, .. }
            | Command::Bipartition { out, .. }
            | Command::Unicyclic { out, .. }
            | Command::Explore { out, .. }
            | Command::VerifyCounterexample { out }
            | Command::Jdm { out, .. } => out.as_deref(),
        }
    }
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Box<Report>>,
}

impl Outcome {
    fn done(code: i32, stdout: String, report: Report) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
            report: Some(Box::new(report)),
        }
    }

    fn malformed(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_MALFORMED,
            stderr: format!("error: {}\n", msg.into()),
            ..Outcome::default()
        }
    }

    fn from_error(e: Error) -> Self {
        match e {
            Error::OracleLimit(_) => Outcome {
                code: EXIT_LIMIT,
                stderr: format!("error: {e}\n"),
                ..Outcome::default()
            },
            e => Outcome::malformed(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<Outcome, Outcome>;

fn lift<T>(r: crate::error::Result<T>) -> std::result::Result<T, Outcome> {
    r.map_err(Outcome::from_error)
}

fn load_instance(path: &Path) -> std::result::Result<Instance, Outcome> {
    let file = InstanceFile::load(path).map_err(Outcome::malformed)?;
    Instance::from_file(&file).map_err(|e| Outcome::malformed(format!("{}: {e}", path.display())))
}

/// Runs a command. The JSON report goes to `--out` when given.
pub fn execute(cmd: &Command) -> Outcome {
    let result = match cmd {
        Command::WeakRealize { instance, .. } => cmd_weak_realize(instance),
        Command::Bipartition {
            instance, k, range, ..
        } => cmd_bipartition(instance, *k, *range),
        Command::Unicyclic { instance, .. } => cmd_unicyclic(instance),
        Command::Explore {
            instance,
            moves,
            path,
            ..
        } => cmd_explore(instance, *moves, path.as_deref()),
        Command::VerifyCounterexample { .. } => cmd_verify_counterexample(),
        Command::Jdm { matrix, .. } => cmd_jdm(matrix),
    };
    let mut outcome = result.unwrap_or_else(|e| e);
    if let (Some(path), Some(report)) = (cmd.out(), &outcome.report) {
        let mut json = serde_json::to_string_pretty(report).expect("report serializes");
        json.push('\n');
        if let Err(e) = std::fs::write(path, json) {
            outcome
                .stderr
                .push_str(&format!("error: {}: {e}\n", path.display()));
            outcome.code = EXIT_MALFORMED;
        }
    }
    outcome
}

fn cmd_weak_realize(path: &Path) -> CmdResult {
    let inst = load_instance(path)?;
    let mut report = Report {
        command: "weak-realize".into(),
        ..Report::default()
    };
    match lift(weak_realize(&inst.d, &inst.skeleton))? {
        Some(g) => {
            report.verdict = "feasible".into();
            report
                .witnesses
                .push(inst.witness("witness", &g, &inst.skeleton));
            let text = format!(
                "weak-realize: feasible\nedges ({}): {}\n",
                g.edge_count(),
                inst.edges_text(&g)
            );
            Ok(Outcome::done(EXIT_OK, text, report))
        }
        None => {
            report.verdict = "infeasible".into();
            report.reason = Some("no realization uses only chords".into());
            Ok(Outcome::done(
                EXIT_INFEASIBLE,
                "weak-realize: infeasible (no realization uses only chords)\n".into(),
                report,
            ))
        }
    }
}

fn cmd_bipartition(path: &Path, k: Option<usize>, range: bool) -> CmdResult {
    let inst = load_instance(path)?;
    let p = inst.skeleton.partition().clone();
    if p.num_classes() != 2 {
        return Err(Outcome::malformed(format!(
            "bipartition needs exactly two classes, found {}",
            p.num_classes()
        )));
    }
    let s_all = SkeletonGraph::all_chords(p.clone());
    if range || k.is_none() {
        let mut report = Report {
            command: "bipartition --range".into(),
            ..Report::default()
        };
        let Some(r) = lift(bipartition_range(&inst.d, &p))? else {
            report.verdict = "infeasible".into();
            report.reason = Some("not graphical".into());
            return Ok(Outcome::done(
                EXIT_INFEASIBLE,
                "bipartition range: infeasible (not graphical)\n".into(),
                report,
            ));
        };
        report.verdict = "feasible".into();
        report.range = Some(RangeReport {
            quantity: "crossing edges".into(),
            min: r.eps_min as u64,
            max: r.eps_max as u64,
        });
        report
            .witnesses
            .push(inst.witness("min", &r.witness_min, &s_all));
        report
            .witnesses
            .push(inst.witness("max", &r.witness_max, &s_all));
        let text = format!(
            "bipartition range: eps_min={} eps_max={}\nmin witness: {}\nmax witness: {}\n",
            r.eps_min,
            r.eps_max,
            inst.edges_text(&r.witness_min),
            inst.edges_text(&r.witness_max)
        );
        return Ok(Outcome::done(EXIT_OK, text, report));
    }

    let k = k.unwrap();
    let mut report = Report {
        command: format!("bipartition --k {k}"),
        ..Report::default()
    };
    let (code, text) = match lift(bipartition_realize(&inst.d, &p, k))? {
        BipartitionOutcome::Realized(g) => {
            let sk = lift(bipartition_skeleton(&inst.d, &p, k))?
                .expect("a realization implies a valid skeleton");
            debug_assert!(check_consistency(&g, &sk).unwrap().is_consistent());
            report.verdict = "feasible".into();
            report.witnesses.push(inst.witness("witness", &g, &sk));
            (
                EXIT_OK,
                format!(
                    "bipartition k={k}: feasible\nedges ({}): {}\n",
                    g.edge_count(),
                    inst.edges_text(&g)
                ),
            )
        }
        other => {
            let (reason, detail) = match other {
                BipartitionOutcome::NotGraphical => ("not graphical", String::new()),
                BipartitionOutcome::OutOfRange { eps_min, eps_max } => (
                    "out of range",
                    format!("; crossing counts run from {eps_min} to {eps_max}"),
                ),
                BipartitionOutcome::WrongParity { eps_min, eps_max } => (
                    "parity",
                    format!(
                        "; feasible crossing counts are {eps_min}, {}, ..., {eps_max}",
                        eps_min + 2
                    ),
                ),
                BipartitionOutcome::Realized(_) => unreachable!(),
            };
            report.verdict = "infeasible".into();
            report.reason = Some(reason.into());
            (
                EXIT_INFEASIBLE,
                format!("bipartition k={k}: infeasible ({reason}{detail})\n"),
            )
        }
    };
    Ok(Outcome::done(code, text, report))
}

fn cmd_unicyclic(path: &Path) -> CmdResult {
    let inst = load_instance(path)?;
    let s = &inst.skeleton;
    let rep = lift(unicyclic_solve_detailed(
        &inst.d,
        s,
        &OracleLimit::from_env(),
    ))?;
    let shape = match &rep.shape {
        Shape::Tree => "tree".to_string(),
        Shape::Unicyclic(c) if c.is_odd() => format!("odd cycle of length {}", c.len()),
        Shape::Unicyclic(c) => format!(
            "even cycle of length {}, alpha on bone {}",
            c.len(),
            inst.bone_name(s, c.bones[0])
        ),
    };
    let mut report = Report {
        command: "unicyclic".into(),
        ..Report::default()
    };
    let mut text = format!(
        "unicyclic: {} ({shape})\n",
        plural(rep.solutions.len(), "weight function")
    );
    for sol in &rep.solutions {
        let ws = s
            .with_weights(&sol.weights.iter().map(|&w| Some(w)).collect::<Vec<_>>())
            .expect("solutions fit capacity");
        let weights: Vec<BoneValue> = (0..s.bones().len())
            .map(|b| BoneValue {
                bone: inst.bone_name(s, b),
                value: sol.weights[b],
            })
            .collect();
        let names: Vec<String> = weights
            .iter()
            .map(|w| format!("{}={}", w.bone, w.value))
            .collect();
        let _ = writeln!(text, "weights {}", names.join(" "));
        let _ = writeln!(text, "  witness: {}", inst.edges_text(&sol.witness));
        report.weight_functions.push(WeightFunctionReport {
            weights,
            witness: inst.witness("witness", &sol.witness, &ws),
        });
    }
    if rep.violations > 0 || rep.fallbacks > 0 {
        let _ = writeln!(
            text,
            "note: {} exchanges moved alpha by more than one; {} values came from enumeration",
            rep.violations, rep.fallbacks
        );
    }
    if rep.solutions.is_empty() {
        report.verdict = "infeasible".into();
        report.reason = Some("no weight function admits a realization".into());
        Ok(Outcome::done(EXIT_INFEASIBLE, text, report))
    } else {
        report.verdict = "feasible".into();
        Ok(Outcome::done(EXIT_OK, text, report))
    }
}

fn cmd_explore(path: &Path, moves: MovesArg, route: Option<&[usize]>) -> CmdResult {
    let inst = load_instance(path)?;
    let s = &inst.skeleton;
    let limit = OracleLimit::from_env();
    let r = lift(enumerate_realizations(
        &inst.d,
        s,
        EnumerationMode::Consistent,
        &limit,
    ))?;
    let (kinds, moves_name) = match moves {
        MovesArg::Swaps => (BTreeSet::from([MoveKind::Swap]), "swaps"),
        MovesArg::SwapsDouble => (
            BTreeSet::from([MoveKind::Swap, MoveKind::DoubleSwap]),
            "swaps+double",
        ),
    };
    let m = lift(build_move_graph(&r, s, &kinds, &limit))?;
    let comps = connected_components(&m);

    let mut report = Report {
        command: format!("explore --moves {moves_name}"),
        verdict: "enumerated".into(),
        ..Report::default()
    };
    let mut text = format!(
        "explore: {}, moves: {moves_name}\n",
        plural(r.len(), "realization")
    );
    for (i, g) in r.graphs().iter().enumerate() {
        let _ = writeln!(text, "realization {i}: {}", inst.edges_text(g));
        report
            .witnesses
            .push(inst.witness(&format!("realization {i}"), g, s));
    }
    let comp_text: Vec<String> = comps
        .iter()
        .map(|c| {
            format!(
                "{{{}}}",
                c.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    let _ = writeln!(
        text,
        "components ({}): {}",
        comps.len(),
        comp_text.join(" ")
    );
    report.components = Some(comps);

    let mut code = EXIT_OK;
    if let Some(&[from, to]) = route {
        report.command.push_str(&format!(" --path {from} {to}"));
        if from >= r.len() || to >= r.len() {
            return Err(Outcome::malformed(format!(
                "path endpoints must be below {} (the number of realizations)",
                r.len()
            )));
        }
        match lift(find_move_path(&m, from, to))? {
            Some(path) => {
                let steps: Vec<String> = path.iter().map(|mv| inst.move_text(mv)).collect();
                let _ = writeln!(text, "path {from} -> {to}: {}", plural(steps.len(), "move"));
                for st in &steps {
                    let _ = writeln!(text, "  {st}");
                }
                report.verdict = "reachable".into();
                report.path = Some(steps);
            }
            None => {
                let _ = writeln!(text, "path {from} -> {to}: unreachable");
                report.verdict = "unreachable".into();
                code = EXIT_INFEASIBLE;
            }
        }
    }
    Ok(Outcome::done(code, text, report))
}

fn plural(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("1 {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

fn fig2_instance_labels() -> Instance {
    let (d, skeleton) = crate::explorer::fig2_instance();
    Instance {
        labels: FIG2_LABELS.iter().map(|s| s.to_string()).collect(),
        class_labels: vec!["U".into(), "W".into()],
        d,
        skeleton,
    }
}

fn cmd_verify_counterexample() -> CmdResult {
    let inst = fig2_instance_labels();
    let rep = lift(verify_counterexample())?;
    let mut report = Report {
        command: "verify-counterexample".into(),
        verdict: if rep.passed() { "pass" } else { "fail" }.into(),
        ..Report::default()
    };
    let mut text = format!("verify-counterexample: {}\n", report.verdict);
    for (i, g) in rep.realizations.graphs().iter().enumerate() {
        let _ = writeln!(text, "realization {i}: {}", inst.edges_text(g));
        report
            .witnesses
            .push(inst.witness(&format!("realization {i}"), g, &inst.skeleton));
    }
    for (i, j, mv) in rep.swap_graph.edges() {
        let _ = writeln!(text, "swap edge {i} - {j}: {}", inst.move_text(mv));
    }
    for (i, j, mv) in rep.double_graph.edges() {
        if matches!(mv, Move::DoubleSwap(_)) {
            let _ = writeln!(text, "double swap edge {i} - {j}: {}", inst.move_text(mv));
        }
    }
    for c in &rep.checks {
        let _ = writeln!(
            text,
            "check {}: {} ({})",
            c.name,
            if c.passed { "pass" } else { "FAIL" },
            c.detail
        );
    }
    report.checks = rep.checks.iter().map(CheckReport::from).collect();
    report.components = Some(rep.swap_components.clone());
    let code = if rep.passed() {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    Ok(Outcome::done(code, text, report))
}

/// Whitespace-separated rows of non-negative integers; blank lines and lines
/// starting with `#` are skipped.
pub fn parse_matrix(text: &str) -> std::result::Result<Vec<Vec<u64>>, String> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|e| format!("line {}: {t:?}: {e}", i + 1))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}

fn cmd_jdm(path: &Path) -> CmdResult {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::malformed(format!("{}: {e}", path.display())))?;
    let jdm =
        parse_matrix(&text).map_err(|e| Outcome::malformed(format!("{}: {e}", path.display())))?;
    let mut report = Report {
        command: "jdm".into(),
        ..Report::default()
    };
    let converted = match jdm_to_skeleton(&jdm) {
        Ok(c) => c,
        Err(e @ Error::NonIntegralCount { .. }) => {
            report.verdict = "infeasible".into();
            report.reason = Some(e.to_string());
            return Ok(Outcome::done(
                EXIT_INFEASIBLE,
                format!("jdm: infeasible ({e})\n"),
                report,
            ));
        }
        Err(e) => return Err(Outcome::malformed(e.to_string())),
    };
    let Some((d, skeleton)) = converted else {
        report.verdict = "infeasible".into();
        report.reason = Some("a bone weight exceeds its capacity".into());
        return Ok(Outcome::done(
            EXIT_INFEASIBLE,
            "jdm: infeasible (a bone weight exceeds its capacity)\n".into(),
            report,
        ));
    };
    let p = skeleton.partition();
    let class_labels: Vec<String> = (0..p.num_classes())
        .map(|c| format!("deg{}", d[p.class(c)[0]]))
        .collect();
    let inst = Instance {
        labels: (0..d.len()).map(|v| format!("v{v}")).collect(),
        class_labels,
        d,
        skeleton,
    };
    let file = inst.to_file();
    report.verdict = "feasible".into();
    report.instance = Some(file.clone());
    Ok(Outcome::done(EXIT_OK, file.emit(), report))
}
