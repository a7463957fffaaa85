use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use leibniz3::deformation::{check_nijenhuis_element, cocycle_space, deformation_check};
use leibniz3::dialgebra::{
    check_action, check_dialgebra, induced_dialgebra, semidirect_bowtie, Action,
};
use leibniz3::embedding::{
    check_averaging, check_embedding_tensor, check_nijenhuis_operator, graph_check,
    induced_tri_leibniz, lift_nt,
};
use leibniz3::leibniz::{
    check_fundamental_identity, check_ideal, check_representation, quotient, semidirect_sum,
    Representation,
};
use leibniz3::matrix::LinMap;
use leibniz3::scalar::{int, zeros};
use leibniz3::subspace::Subspace;
use leibniz3::tensor::Bracket3;
use leibniz3::trileibniz::{
    averaging_embedding, check_tri_leibniz, direct_sum_tri, from_3leibniz, from_differential,
    hemisemidirect, universal_quotient, TriLeibnizAlgebra,
};
use leibniz3::CoreError;
use leibniz3_cli::format::{self, EmbeddingScenario, FileDoc, FormatError, Loaded};
use leibniz3_cli::render::Report;

#[derive(Parser)]
#[command(
    name = "leibniz3",
    version,
    about = "Exact-arithmetic checker and constructor for trilinear Leibniz structures"
)]
struct Cli {
    /// Report format written to stdout.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    /// Maximum number of violations listed per check.
    #[arg(long, default_value_t = 32, global = true)]
    violation_cap: usize,
    /// Worker threads for identity sweeps; 1 forces the sequential path.
    /// Reports are identical for every value.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity checker matching the file's kind.
    Check { file: PathBuf },
    /// Build a derived structure, check it, and optionally save it.
    #[command(subcommand)]
    Construct(Construction),
    /// Cocycle, coboundary and first-cohomology dimensions of a tensor
    /// scenario.
    Cohomology { file: PathBuf },
    /// List the ordered basis pairs accepted as Nijenhuis elements of a
    /// tensor scenario.
    NijenhuisScan { file: PathBuf },
    /// Verify the equivalence theorems on a concrete instance.
    VerifyTheorems { file: PathBuf },
}

#[derive(Subcommand)]
enum Construction {
    /// Three-bracket system on g⊕V from a representation file.
    Hemisemidirect {
        representation: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Single-bracket algebra on g⊕V from a representation file.
    Semidirect {
        representation: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Single-bracket algebra on g⊕K from an action file.
    Bowtie {
        action: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient algebra by the ideal spanned by the rows of a matrix file.
    Quotient {
        algebra: PathBuf,
        span: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also save the projection map.
        #[arg(long)]
        out_map: Option<PathBuf>,
    },
    /// Representation of the quotient by the bracket-difference ideal of a
    /// three-bracket system.
    UniversalQuotient {
        trileibniz: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also save the projection map.
        #[arg(long)]
        out_map: Option<PathBuf>,
    },
    /// Ambient algebra carrying an averaging operator that embeds a
    /// three-bracket system.
    AveragingEmbedding {
        trileibniz: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also save the averaging operator.
        #[arg(long)]
        out_map: Option<PathBuf>,
    },
    /// Three-bracket system induced by a verified embedding tensor scenario.
    InducedTri {
        scenario: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dialgebra induced by a homomorphic embedding tensor over an action.
    InducedDialgebra {
        action: PathBuf,
        tensor: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diagonal three-bracket system on k copies of an algebra.
    DirectSumTri {
        algebra: PathBuf,
        copies: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Three-bracket system from a square-zero derivation.
    FromDifferential {
        algebra: PathBuf,
        differential: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Format(FormatError),
    Core(CoreError),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Format(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Format(e)
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// Failed mathematical preconditions count as failed checks (exit 1);
    /// everything else is an input problem (exit 2).
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                CoreError::NotAnIdeal { .. }
                | CoreError::NotSquareZero { .. }
                | CoreError::NotADerivation { .. }
                | CoreError::NotAMorphism { .. }
                | CoreError::IdealClosureFailure { .. }
                | CoreError::QuotientIllDefined { .. }
                | CoreError::NotAnEmbeddingTensor { .. }
                | CoreError::NotAnAction { .. }
                | CoreError::NotHomomorphicEmbeddingTensor { .. }
                | CoreError::NotANijenhuisElement { .. }
                | CoreError::NotInvertible { .. }
                | CoreError::IntertwiningFailure { .. } => 1,
                _ => 2,
            },
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        configure_jobs(jobs);
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                OutputFormat::Json => print!("{}", report.to_json()),
                OutputFormat::Text => print!("{}", report.to_text(start.elapsed())),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn configure_jobs(jobs: usize) {
    if jobs <= 1 {
        leibniz3::set_parallel(false);
    } else {
        leibniz3::set_parallel(true);
        // Ignore the error if a global pool already exists; sizing is
        // best-effort and has no effect on results.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let cap = cli.violation_cap;
    match &cli.command {
        Command::Check { file } => cmd_check(file, cap),
        Command::Construct(c) => cmd_construct(c, cap),
        Command::Cohomology { file } => cmd_cohomology(file),
        Command::NijenhuisScan { file } => cmd_nijenhuis_scan(file),
        Command::VerifyTheorems { file } => cmd_verify_theorems(file, cap),
    }
}

fn cmd_check(file: &Path, cap: usize) -> Result<Report, CliError> {
    let loaded = format::load(file)?;
    let mut report = Report::new(format!("check {}", file.display()));
    match &loaded {
        Loaded::Leibniz3(b) => {
            report.push_check("fundamental identity", &check_fundamental_identity(b), cap);
        }
        Loaded::TriLeibniz(ta) => {
            report.push_check("three-bracket identities", &check_tri_leibniz(ta), cap);
        }
        Loaded::Representation(rep) => {
            report.push_check("representation axioms", &check_representation(rep), cap);
        }
        Loaded::Action(act) => {
            report.push_check("action axioms", &check_action(act), cap);
        }
        Loaded::EmbeddingScenario(s) => {
            report.push_check("embedding tensor", &check_embedding_tensor(&s.tensor, &s.rep)?, cap);
        }
        Loaded::Dialgebra(d) => {
            report.push_check("dialgebra identities", &check_dialgebra(d), cap);
        }
        Loaded::DeformationScenario(s) => {
            report.push_check(
                "deformation layers",
                &deformation_check(&s.tensor, &s.generator, &s.rep)?,
                cap,
            );
        }
        Loaded::Linmap(_) => {
            return Err(CliError::Usage(
                "no identity check is defined for kind linmap; reference the map from a scenario"
                    .into(),
            ));
        }
    }
    Ok(report)
}

/// Extracts the (representation, tensor) pair that the cohomology and scan
/// commands operate on.
fn scenario_parts(loaded: Loaded, file: &Path) -> Result<(Representation, LinMap), CliError> {
    match loaded {
        Loaded::EmbeddingScenario(s) => Ok((s.rep, s.tensor)),
        Loaded::DeformationScenario(s) => Ok((s.rep, s.tensor)),
        other => Err(CliError::Usage(format!(
            "{} has kind {}, expected embedding_scenario or deformation_scenario",
            file.display(),
            other.kind()
        ))),
    }
}

fn cmd_cohomology(file: &Path) -> Result<Report, CliError> {
    let (rep, tensor) = scenario_parts(format::load(file)?, file)?;
    let mut report = Report::new(format!("cohomology {}", file.display()));
    let space = cocycle_space(&tensor, &rep)?;
    let overlap = space.b1.intersect(&space.z1)?;
    let mut dims = BTreeMap::new();
    dims.insert("b1_cap_z1_dim".to_string(), overlap.dim());
    dims.insert("b1_dim".to_string(), space.b1.dim());
    dims.insert("h1_dim".to_string(), space.h1_dim);
    dims.insert("z1_dim".to_string(), space.z1.dim());
    report.dimensions = Some(dims);
    Ok(report)
}

fn cmd_nijenhuis_scan(file: &Path) -> Result<Report, CliError> {
    let (rep, tensor) = scenario_parts(format::load(file)?, file)?;
    let n = rep.alg_dim();
    let basis = |i: usize| {
        let mut v = zeros(n);
        v[i] = int(1);
        v
    };
    let mut passing = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if check_nijenhuis_element(&basis(i), &basis(j), &tensor, &rep)?.passed() {
                passing.push([i, j]);
            }
        }
    }
    let mut report = Report::new(format!("nijenhuis-scan {}", file.display()));
    report.passing_pairs = Some(passing);
    Ok(report)
}

fn cmd_verify_theorems(file: &Path, cap: usize) -> Result<Report, CliError> {
    let loaded = format::load(file)?;
    let mut report = Report::new(format!("verify-theorems {}", file.display()));
    match &loaded {
        Loaded::Leibniz3(b) => {
            let fi = check_fundamental_identity(b).passed();
            let tri = check_tri_leibniz(&from_3leibniz(b)).passed();
            report.push_theorem(
                "single-bracket-equivalence",
                fi == tri,
                format!(
                    "fundamental identity pass = {fi}, equal-bracket three-bracket system pass = {tri}"
                ),
            );
        }
        Loaded::Representation(rep) => {
            let axioms = check_representation(rep).passed();
            let semi = check_fundamental_identity(&semidirect_sum(rep)).passed();
            let hemi = check_tri_leibniz(&hemisemidirect(rep)).passed();
            report.push_theorem(
                "semidirect-equivalence",
                axioms == semi,
                format!("representation axioms pass = {axioms}, semidirect sum pass = {semi}"),
            );
            report.push_theorem(
                "hemisemidirect-equivalence",
                axioms == hemi,
                format!(
                    "representation axioms pass = {axioms}, hemisemidirect system pass = {hemi}"
                ),
            );
        }
        Loaded::Action(act) => {
            let axioms = check_action(act).passed();
            let bowtie = check_fundamental_identity(&semidirect_bowtie(act)).passed();
            report.push_theorem(
                "bowtie-equivalence",
                axioms == bowtie,
                format!("action axioms pass = {axioms}, bowtie sum pass = {bowtie}"),
            );
        }
        Loaded::EmbeddingScenario(s) => {
            let et = check_embedding_tensor(&s.tensor, &s.rep)?.passed();
            let (nmap, ambient) = lift_nt(&s.tensor, &s.rep)?;
            let nij = check_nijenhuis_operator(&nmap, &ambient)?.passed();
            let graph = graph_check(&s.tensor, &s.rep)?.passed();
            report.push_theorem(
                "tensor-nijenhuis-graph-equivalence",
                et == nij && nij == graph,
                format!(
                    "embedding tensor pass = {et}, lifted Nijenhuis operator pass = {nij}, graph closure pass = {graph}"
                ),
            );
        }
        Loaded::DeformationScenario(s) => {
            let layered = deformation_check(&s.tensor, &s.generator, &s.rep)?.passed();
            let mut verdicts = Vec::new();
            for k in 1..=3i64 {
                let deformed = s.tensor.add(&s.generator.scale(&int(k)))?;
                verdicts.push(check_embedding_tensor(&deformed, &s.rep)?.passed());
            }
            let substituted = verdicts.iter().all(|&v| v);
            report.push_theorem(
                "coefficient-substitution-equivalence",
                layered == substituted,
                format!(
                    "coefficient layers pass = {layered}, substitution at t = 1, 2, 3 passes = {verdicts:?}"
                ),
            );
        }
        Loaded::TriLeibniz(ta) => {
            let tri = check_tri_leibniz(ta);
            report.push_check("three-bracket identities", &tri, cap);
            if tri.passed() {
                let (_q_alg, rep, project) = universal_quotient(ta)?;
                let induced = induced_tri_leibniz(&project, &rep)?;
                report.push_theorem(
                    "universal-quotient-round-trip",
                    induced == *ta,
                    format!(
                        "induced three-bracket system equals the input entry-for-entry = {}",
                        induced == *ta
                    ),
                );
                let proj_ok = check_embedding_tensor(&project, &rep)?.passed();
                report.push_theorem(
                    "quotient-projection-tensor",
                    proj_ok,
                    format!("projection passes the embedding tensor check = {proj_ok}"),
                );
                let (big, avg, _incl) = averaging_embedding(ta)?;
                let avg_ok = check_averaging(&avg, &big)?.passed();
                report.push_theorem(
                    "averaging-operator",
                    avg_ok,
                    format!("ambient averaging operator passes = {avg_ok}"),
                );
            }
        }
        Loaded::Dialgebra(_) | Loaded::Linmap(_) => {
            return Err(CliError::Usage(format!(
                "verify-theorems is not defined for kind {}",
                loaded.kind()
            )));
        }
    }
    Ok(report)
}

fn expect_leibniz3(path: &Path) -> Result<Bracket3, CliError> {
    match format::load(path)? {
        Loaded::Leibniz3(b) => Ok(b),
        other => Err(kind_usage(path, &other, "leibniz3")),
    }
}

fn expect_trileibniz(path: &Path) -> Result<TriLeibnizAlgebra, CliError> {
    match format::load(path)? {
        Loaded::TriLeibniz(ta) => Ok(ta),
        other => Err(kind_usage(path, &other, "trileibniz")),
    }
}

fn expect_representation(path: &Path) -> Result<Representation, CliError> {
    match format::load(path)? {
        Loaded::Representation(rep) => Ok(rep),
        other => Err(kind_usage(path, &other, "representation")),
    }
}

fn expect_action(path: &Path) -> Result<Action, CliError> {
    match format::load(path)? {
        Loaded::Action(act) => Ok(act),
        other => Err(kind_usage(path, &other, "action")),
    }
}

fn expect_linmap(path: &Path) -> Result<LinMap, CliError> {
    match format::load(path)? {
        Loaded::Linmap(m) => Ok(m),
        other => Err(kind_usage(path, &other, "linmap")),
    }
}

fn expect_embedding_scenario(path: &Path) -> Result<EmbeddingScenario, CliError> {
    match format::load(path)? {
        Loaded::EmbeddingScenario(s) => Ok(s),
        other => Err(kind_usage(path, &other, "embedding_scenario")),
    }
}

fn kind_usage(path: &Path, got: &Loaded, expected: &str) -> CliError {
    CliError::Usage(format!(
        "{} has kind {}, expected {expected}",
        path.display(),
        got.kind()
    ))
}

fn finish_construct(
    report: &mut Report,
    doc: FileDoc,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    if let Some(path) = out {
        format::write_doc(&doc, path)?;
        report.saved = Some(path.display().to_string());
    }
    report.constructed = Some(doc);
    Ok(())
}

fn save_map(map: &LinMap, out_map: &Option<PathBuf>) -> Result<(), CliError> {
    if let Some(path) = out_map {
        format::write_doc(&format::encode_linmap(map), path)?;
    }
    Ok(())
}

fn cmd_construct(c: &Construction, cap: usize) -> Result<Report, CliError> {
    match c {
        Construction::Hemisemidirect { representation, out } => {
            let rep = expect_representation(representation)?;
            let mut report =
                Report::new(format!("construct hemisemidirect {}", representation.display()));
            report.push_check("representation axioms", &check_representation(&rep), cap);
            let ta = hemisemidirect(&rep);
            report.push_check("three-bracket identities", &check_tri_leibniz(&ta), cap);
            finish_construct(&mut report, format::encode_trileibniz(&ta), out)?;
            Ok(report)
        }
        Construction::Semidirect { representation, out } => {
            let rep = expect_representation(representation)?;
            let mut report =
                Report::new(format!("construct semidirect {}", representation.display()));
            report.push_check("representation axioms", &check_representation(&rep), cap);
            let alg = semidirect_sum(&rep);
            report.push_check("fundamental identity", &check_fundamental_identity(&alg), cap);
            finish_construct(&mut report, format::encode_leibniz3(&alg), out)?;
            Ok(report)
        }
        Construction::Bowtie { action, out } => {
            let act = expect_action(action)?;
            let mut report = Report::new(format!("construct bowtie {}", action.display()));
            report.push_check("action axioms", &check_action(&act), cap);
            let alg = semidirect_bowtie(&act);
            report.push_check("fundamental identity", &check_fundamental_identity(&alg), cap);
            finish_construct(&mut report, format::encode_leibniz3(&alg), out)?;
            Ok(report)
        }
        Construction::Quotient { algebra, span, out, out_map } => {
            let b = expect_leibniz3(algebra)?;
            let gens = expect_linmap(span)?;
            if gens.cols() != b.dim() {
                return Err(CliError::Usage(format!(
                    "span matrix has {} columns but the algebra has dimension {}",
                    gens.cols(),
                    b.dim()
                )));
            }
            let ideal = Subspace::from_rows(b.dim(), &gens.row_vecs())?;
            let mut report = Report::new(format!(
                "construct quotient {} {}",
                algebra.display(),
                span.display()
            ));
            let closure = check_ideal(&ideal, &b)?;
            report.push_check("ideal closure", &closure, cap);
            if !closure.passed() {
                return Ok(report);
            }
            let (q, project) = quotient(&b, &ideal)?;
            report.push_check("fundamental identity", &check_fundamental_identity(&q), cap);
            save_map(&project, out_map)?;
            finish_construct(&mut report, format::encode_leibniz3(&q), out)?;
            Ok(report)
        }
        Construction::UniversalQuotient { trileibniz, out, out_map } => {
            let ta = expect_trileibniz(trileibniz)?;
            let mut report =
                Report::new(format!("construct universal-quotient {}", trileibniz.display()));
            let tri = check_tri_leibniz(&ta);
            report.push_check("three-bracket identities", &tri, cap);
            if !tri.passed() {
                return Ok(report);
            }
            let (_q_alg, rep, project) = universal_quotient(&ta)?;
            report.push_check("representation axioms", &check_representation(&rep), cap);
            report.push_check(
                "quotient projection tensor",
                &check_embedding_tensor(&project, &rep)?,
                cap,
            );
            save_map(&project, out_map)?;
            finish_construct(&mut report, format::encode_representation(&rep), out)?;
            Ok(report)
        }
        Construction::AveragingEmbedding { trileibniz, out, out_map } => {
            let ta = expect_trileibniz(trileibniz)?;
            let mut report =
                Report::new(format!("construct averaging-embedding {}", trileibniz.display()));
            let tri = check_tri_leibniz(&ta);
            report.push_check("three-bracket identities", &tri, cap);
            if !tri.passed() {
                return Ok(report);
            }
            let (big, avg, _incl) = averaging_embedding(&ta)?;
            report.push_check("fundamental identity", &check_fundamental_identity(&big), cap);
            report.push_check("averaging operator", &check_averaging(&avg, &big)?, cap);
            save_map(&avg, out_map)?;
            finish_construct(&mut report, format::encode_leibniz3(&big), out)?;
            Ok(report)
        }
        Construction::InducedTri { scenario, out } => {
            let s = expect_embedding_scenario(scenario)?;
            let mut report = Report::new(format!("construct induced-tri {}", scenario.display()));
            let ta = induced_tri_leibniz(&s.tensor, &s.rep)?;
            report.push_check("three-bracket identities", &check_tri_leibniz(&ta), cap);
            finish_construct(&mut report, format::encode_trileibniz(&ta), out)?;
            Ok(report)
        }
        Construction::InducedDialgebra { action, tensor, out } => {
            let act = expect_action(action)?;
            let t = expect_linmap(tensor)?;
            let mut report = Report::new(format!(
                "construct induced-dialgebra {} {}",
                action.display(),
                tensor.display()
            ));
            let d = induced_dialgebra(&t, &act)?;
            report.push_check("dialgebra identities", &check_dialgebra(&d), cap);
            finish_construct(&mut report, format::encode_dialgebra(&d), out)?;
            Ok(report)
        }
        Construction::DirectSumTri { algebra, copies, out } => {
            let b = expect_leibniz3(algebra)?;
            let mut report = Report::new(format!(
                "construct direct-sum-tri {} {copies}",
                algebra.display()
            ));
            report.push_check("fundamental identity", &check_fundamental_identity(&b), cap);
            let ta = direct_sum_tri(&b, *copies)?;
            report.push_check("three-bracket identities", &check_tri_leibniz(&ta), cap);
            finish_construct(&mut report, format::encode_trileibniz(&ta), out)?;
            Ok(report)
        }
        Construction::FromDifferential { algebra, differential, out } => {
            let b = expect_leibniz3(algebra)?;
            let d = expect_linmap(differential)?;
            let mut report = Report::new(format!(
                "construct from-differential {} {}",
                algebra.display(),
                differential.display()
            ));
            let ta = from_differential(&b, &d)?;
            report.push_check("three-bracket identities", &check_tri_leibniz(&ta), cap);
            finish_construct(&mut report, format::encode_trileibniz(&ta), out)?;
            Ok(report)
        }
    }
}
