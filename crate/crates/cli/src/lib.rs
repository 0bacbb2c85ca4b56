//! Command-line front end for `gyrorep`.
//!
//! [`run`] parses arguments, dispatches to the library and writes one report
//! per invocation. Exit codes: `0` success, `1` a failed verification or an
//! unmet theorem hypothesis (reported), `2` usage, parse or I/O errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use gyrorep::error::{GyroError, ParseError, RegularError, RepError};
use gyrorep::gyro::{mobius_sample_check, IdentityReport};
use gyrorep::regular::{converse_maschke_bounded, inclusion_chain, ConverseBranch, GyroClassPartition, RegularRep};
use gyrorep::rep::{DecompositionResult, Irreducibility, DEFAULT_SEARCH_BOUND};
use gyrorep::{builtin, text, Field, GyroTable, Matrix, Representation, Subspace};

#[derive(Parser, Debug)]
#[command(name = "gyrorep", version, about = "Exact representations of finite gyrogroups")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Table file, or `builtin:g8|klein|cyclic:<n>|trivial:1`.
    pub source: String,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// `q` or `f:<p>` with p prime.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    pub field: Field,
}

#[derive(Args, Debug, Clone)]
pub struct BoundArg {
    /// Largest number of points an exhaustive search may enumerate.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
    pub bound: u128,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate the table and re-check the gyrogroup identities.
    Verify(Source),
    /// Summarise the gyrogroup.
    Info {
        #[command(flatten)]
        source: Source,
        /// Print the table in file format instead.
        #[arg(long)]
        emit_table: bool,
    },
    /// Render gyr[a,b] for every pair with automorphism labels.
    GyrTable(Source),
    /// The partition spanning L^gyr(G).
    Lgyr {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldArg,
    },
    /// The left regular representation on L^gyr(G) and the functional σ.
    Regrep {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Decompose into summands with no proper invariant subspace.
    Decompose {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldArg,
        /// Representation file (default: the regular representation on L^gyr).
        #[arg(long)]
        rep: Option<PathBuf>,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Averaging projection and invariant complement of a subspace.
    Maschke {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        field: FieldArg,
        /// Vector file, or `fix` / `ker-sigma` for the regular representation.
        #[arg(long)]
        subspace: String,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Certify that L^gyr ∩ ker σ has no invariant complement over GF(p).
    Converse {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'p')]
        prime: u64,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// The chain {0} ⊆ Fix ⊆ U ⊆ L^gyr ⊆ L(G) over GF(p).
    Chain {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'p')]
        prime: u64,
    },
    /// Sampled identity check on the Möbius disk.
    MobiusCheck {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        seed: u64,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

/// Why a command stopped.
#[derive(Debug)]
enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1, with a report already written.
    Reported,
    /// Exit 1, message only.
    Verification(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::fmt::Error> for Failure {
    fn from(e: std::fmt::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        match e {
            RepError::CharacteristicDividesOrder { .. } | RepError::NotInvariant { .. } => {
                Failure::Verification(e.to_string())
            }
            RepError::SearchSpaceTooLarge { .. } => Failure::Usage(format!("{e}; raise --bound")),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<RegularError> for Failure {
    fn from(e: RegularError) -> Self {
        match e {
            RegularError::Rep(r) => r.into(),
            RegularError::PrimeDoesNotDivideOrder { .. } | RegularError::InternalInconsistency(_) => {
                Failure::Verification(e.to_string())
            }
            RegularError::Linalg(_) => Failure::Usage(e.to_string()),
        }
    }
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Reported) => 1,
        Err(Failure::Verification(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

fn load(source: &str) -> Result<GyroTable, LoadError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin(name).map_err(|e| LoadError::Usage(e.to_string()));
    }
    let content =
        std::fs::read_to_string(source).map_err(|e| LoadError::Usage(format!("{source}: {e}")))?;
    text::parse_table(&content).map_err(|e| match e {
        ParseError::Gyro(g) => LoadError::NotGyrogroup(g),
        other => LoadError::Usage(format!("{source}: {other}")),
    })
}

enum LoadError {
    Usage(String),
    NotGyrogroup(GyroError),
}

fn load_table(source: &Source) -> Result<GyroTable, Failure> {
    load(&source.source).map_err(|e| match e {
        LoadError::Usage(m) => Failure::Usage(m),
        LoadError::NotGyrogroup(g) => Failure::Usage(format!("{}: not a gyrogroup: {g}", source.source)),
    })
}

fn read_file(path: &std::path::Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_rep(g: &GyroTable, field: Field, path: &std::path::Path) -> Result<Representation, Failure> {
    let (d, matrices) = text::parse_representation(&read_file(path)?, field, g.order())
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let rep = Representation::new(Arc::new(g.clone()), field, d, matrices)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    rep.verify()
        .map_err(|v| Failure::Usage(format!("{}: not a representation: {v:?}", path.display())))?;
    Ok(rep)
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Verify(source) => verify(source, json, out),
        Command::Info { source, emit_table } => info(&load_table(source)?, *emit_table, json, out),
        Command::GyrTable(source) => gyr_table(&load_table(source)?, json, out),
        Command::Lgyr { source, field } => lgyr(&load_table(source)?, field.field, json, out),
        Command::Regrep { source, field } => regrep(&load_table(source)?, field.field, json, out),
        Command::Decompose {
            source,
            field,
            rep,
            bound,
        } => decompose(&load_table(source)?, field.field, rep.as_deref(), bound.bound, json, out),
        Command::Maschke {
            source,
            field,
            subspace,
            rep,
        } => maschke(&load_table(source)?, field.field, subspace, rep.as_deref(), json, out),
        Command::Converse { source, prime, bound } => converse(&load_table(source)?, *prime, bound.bound, json, out),
        Command::Chain { source, prime } => chain(&load_table(source)?, *prime, json, out),
        Command::MobiusCheck { samples, tol, seed } => mobius(*samples, *tol, *seed, json, out),
    }
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    gyrogroup: bool,
    error: Option<String>,
    group: Option<bool>,
    gyrocommutative: Option<bool>,
    gyroautomorphisms: Option<usize>,
    identities: Option<&'a IdentityReport>,
}

fn verify(source: &Source, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let g = match load(&source.source) {
        Ok(g) => g,
        Err(LoadError::Usage(m)) => return Err(Failure::Usage(m)),
        Err(LoadError::NotGyrogroup(e)) => {
            if json {
                emit(
                    out,
                    &VerifyReport {
                        gyrogroup: false,
                        error: Some(e.to_string()),
                        group: None,
                        gyrocommutative: None,
                        gyroautomorphisms: None,
                        identities: None,
                    },
                )?;
            } else {
                writeln!(out, "gyrogroup: no ({e})")?;
            }
            return Err(Failure::Reported);
        }
    };
    let report = g.verify_identities();
    let ok = report.all_passed();
    if json {
        emit(
            out,
            &VerifyReport {
                gyrogroup: ok,
                error: None,
                group: Some(g.is_group()),
                gyrocommutative: Some(g.is_gyrocommutative()),
                gyroautomorphisms: Some(g.gyr_perms().len()),
                identities: Some(&report),
            },
        )?;
    } else {
        for c in &report.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            match &c.counterexample {
                Some(x) => writeln!(out, "{status}  {} (counterexample {x:?})", c.name)?,
                None => writeln!(out, "{status}  {}", c.name)?,
            }
        }
        writeln!(
            out,
            "gyrogroup: {}; group: {}; gyroautomorphisms: {}",
            yes_no(ok),
            yes_no(g.is_group()),
            g.gyr_perms().len()
        )?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct InfoReport {
    order: usize,
    identity: usize,
    inverses: Vec<usize>,
    group: bool,
    gyrocommutative: bool,
    gyroautomorphisms: Vec<String>,
}

fn info(g: &GyroTable, emit_table: bool, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    if emit_table {
        out.write_all(text::emit_table(g).as_bytes())?;
        return Ok(());
    }
    let report = InfoReport {
        order: g.order(),
        identity: g.identity(),
        inverses: g.elements().map(|a| g.inverse(a)).collect(),
        group: g.is_group(),
        gyrocommutative: g.is_gyrocommutative(),
        gyroautomorphisms: g.gyr_perms().iter().map(ToString::to_string).collect(),
    };
    if json {
        return emit(out, &report);
    }
    writeln!(out, "order: {}", report.order)?;
    writeln!(out, "identity: {}", report.identity)?;
    writeln!(out, "inverses: {}", join(&report.inverses))?;
    writeln!(out, "group: {}", yes_no(report.group))?;
    writeln!(out, "gyrocommutative: {}", yes_no(report.gyrocommutative))?;
    writeln!(out, "distinct gyrations: {}", report.gyroautomorphisms.len())?;
    for (label, p) in gyr_labels(g).iter().zip(&report.gyroautomorphisms) {
        writeln!(out, "  {label} = {p}")?;
    }
    Ok(())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// `I` for the identity, then `t1`, `t2`, … in order of first appearance
/// scanning `(a, b)` row-major.
pub fn gyr_labels(g: &GyroTable) -> Vec<String> {
    (0..g.gyr_perms().len())
        .map(|i| if i == 0 { "I".to_string() } else { format!("t{i}") })
        .collect()
}

/// The label of `gyr[a,b]` for every pair.
pub fn gyr_label_grid(g: &GyroTable) -> Vec<Vec<String>> {
    let labels = gyr_labels(g);
    g.elements()
        .map(|a| g.elements().map(|b| labels[g.gyr_index(a, b)].clone()).collect())
        .collect()
}

/// Row `a`, column `b` holds the label of `gyr[a,b]`, followed by a legend
/// in cycle notation.
pub fn render_gyr_table(g: &GyroTable) -> String {
    let grid = gyr_label_grid(g);
    let width = grid
        .iter()
        .flatten()
        .map(String::len)
        .chain(std::iter::once(g.order().saturating_sub(1).to_string().len()))
        .max()
        .unwrap_or(1);
    let mut s = String::new();
    let _ = write!(s, "{:>width$} |", "");
    for b in g.elements() {
        let _ = write!(s, " {b:>width$}");
    }
    s.push('\n');
    let _ = writeln!(s, "{}", "-".repeat((width + 1) * (g.order() + 1) + 1));
    for (a, row) in grid.iter().enumerate() {
        let _ = write!(s, "{a:>width$} |");
        for cell in row {
            let _ = write!(s, " {cell:>width$}");
        }
        s.push('\n');
    }
    s.push('\n');
    for (label, p) in gyr_labels(g).iter().zip(g.gyr_perms()) {
        let _ = writeln!(s, "{label} = {p}");
    }
    s
}

#[derive(Serialize)]
struct GyrTableReport {
    labels: Vec<LabelledPerm>,
    grid: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct LabelledPerm {
    label: String,
    cycles: String,
    map: Vec<usize>,
}

fn gyr_table(g: &GyroTable, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    if json {
        let labels = gyr_labels(g)
            .into_iter()
            .zip(g.gyr_perms())
            .map(|(label, p)| LabelledPerm {
                label,
                cycles: p.to_string(),
                map: p.as_slice().to_vec(),
            })
            .collect();
        return emit(
            out,
            &GyrTableReport {
                labels,
                grid: gyr_label_grid(g),
            },
        );
    }
    out.write_all(render_gyr_table(g).as_bytes())?;
    Ok(())
}

#[derive(Serialize)]
struct LgyrReport<'a> {
    field: Field,
    order: usize,
    dim: usize,
    classes: &'a [Vec<usize>],
    matches_constraint_kernel: bool,
}

fn lgyr(g: &GyroTable, field: Field, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let partition = gyrorep::regular::lgyr_partition(g);
    let oracle = gyrorep::regular::lgyr_constraint_kernel(g, field);
    let report = LgyrReport {
        field,
        order: g.order(),
        dim: partition.len(),
        classes: &partition.classes,
        matches_constraint_kernel: partition.lgyr_subspace(field) == oracle,
    };
    if json {
        emit(out, &report)?;
    } else {
        writeln!(out, "field: {field}")?;
        writeln!(out, "dim L^gyr: {} (order {})", report.dim, report.order)?;
        writeln!(out, "classes: {}", render_classes(&partition))?;
        writeln!(
            out,
            "matches kernel of the constraint system: {}",
            yes_no(report.matches_constraint_kernel)
        )?;
    }
    if report.matches_constraint_kernel {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn render_classes(p: &GyroClassPartition) -> String {
    p.classes
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_matrix(m: &Matrix, indent: &str) -> String {
    let mut s = String::new();
    for row in m.row_vecs() {
        let _ = writeln!(s, "{indent}{}", join(row));
    }
    s
}

fn render_subspace(u: &Subspace, indent: &str) -> String {
    if u.is_zero() {
        return format!("{indent}(zero subspace)\n");
    }
    render_matrix(u.basis(), indent)
}

#[derive(Serialize)]
struct RegrepReport<'a> {
    field: Field,
    classes: &'a [Vec<usize>],
    degree: usize,
    matrices: &'a [Matrix],
    coincidences: Vec<(usize, usize)>,
    sigma: gyrorep::regular::SigmaReport,
    fix: Subspace,
}

fn regrep(g: &GyroTable, field: Field, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let reg = RegularRep::new(g, field)?;
    let sigma = reg.sigma_report();
    let fix = reg.fix_subspace()?;
    let report = RegrepReport {
        field,
        classes: &reg.partition().classes,
        degree: reg.rep().degree(),
        matrices: reg.rep().matrices(),
        coincidences: reg.coincidences(),
        sigma,
        fix,
    };
    if json {
        emit(out, &report)?;
    } else {
        writeln!(out, "field: {field}")?;
        writeln!(out, "basis: indicators of {}", render_classes(reg.partition()))?;
        writeln!(out, "degree: {}", report.degree)?;
        for (a, m) in report.matrices.iter().enumerate() {
            writeln!(out, "λ({a}):")?;
            out.write_all(render_matrix(m, "  ").as_bytes())?;
        }
        if report.coincidences.is_empty() {
            writeln!(out, "coincidences: none")?;
        } else {
            let pairs: Vec<String> = report.coincidences.iter().map(|(a, b)| format!("λ({a}) = λ({b})")).collect();
            writeln!(out, "coincidences: {}", pairs.join(", "))?;
        }
        let s = &report.sigma;
        writeln!(out, "σ on class coordinates: {}", join(&s.class_sizes_in_field))?;
        writeln!(out, "dim ker σ in L(G): {} of {}", s.dim_ker_sigma_in_lg, s.dim_lg)?;
        writeln!(out, "L^gyr ⊆ ker σ: {}", yes_no(s.lgyr_subset_ker_sigma))?;
        writeln!(out, "dim U = dim (L^gyr ∩ ker σ): {}", s.dim_u)?;
        writeln!(out, "U invariant: {}", yes_no(s.u_invariant))?;
        writeln!(out, "Fix: dim {}", report.fix.dim())?;
        out.write_all(render_subspace(&report.fix, "  ").as_bytes())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct DecomposeReport<'a> {
    field: Field,
    degree: usize,
    source: &'static str,
    dims: Vec<usize>,
    #[serde(flatten)]
    result: &'a DecompositionResult,
}

fn decompose(
    g: &GyroTable,
    field: Field,
    rep_path: Option<&std::path::Path>,
    bound: u128,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (rep, source) = match rep_path {
        Some(p) => (load_rep(g, field, p)?, "file"),
        None => (RegularRep::new(g, field)?.rep().clone(), "regular representation on L^gyr"),
    };
    let result = rep.decompose(bound)?;
    if json {
        emit(
            out,
            &DecomposeReport {
                field,
                degree: rep.degree(),
                source,
                dims: result.dims(),
                result: &result,
            },
        )?;
    } else {
        writeln!(out, "representation: {source}, degree {}, field {field}", rep.degree())?;
        writeln!(out, "summands: {}", result.summands.len())?;
        for (i, s) in result.summands.iter().enumerate() {
            let verdict = match s.irreducible {
                Irreducibility::Yes => "irreducible (exhaustive search)",
                Irreducibility::No => "reducible",
                Irreducibility::Unknown => "irreducibility unknown (heuristic search)",
            };
            writeln!(out, "[{}] dim {}, {verdict}", i + 1, s.subspace.dim())?;
            out.write_all(render_subspace(&s.subspace, "    ").as_bytes())?;
        }
        writeln!(out, "dims: {}", join(&result.dims()))?;
        writeln!(out, "direct sum: {}", yes_no(result.direct_sum))?;
        writeln!(out, "searches: {}", result.log.len())?;
    }
    if result.direct_sum {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

#[derive(Serialize)]
struct MaschkeReport {
    field: Field,
    degree: usize,
    subspace: Subspace,
    projection: Matrix,
    complement: Subspace,
    idempotent: bool,
    identity_on_subspace: bool,
    image_is_subspace: bool,
    intertwines: bool,
    complement_invariant: bool,
    direct_sum: bool,
}

impl MaschkeReport {
    fn passed(&self) -> bool {
        self.idempotent
            && self.identity_on_subspace
            && self.image_is_subspace
            && self.intertwines
            && self.complement_invariant
            && self.direct_sum
    }
}

fn maschke(
    g: &GyroTable,
    field: Field,
    subspace: &str,
    rep_path: Option<&std::path::Path>,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (rep, u) = match rep_path {
        Some(p) => {
            let rep = load_rep(g, field, p)?;
            if matches!(subspace, "fix" | "ker-sigma") {
                return Err(Failure::Usage(format!(
                    "--subspace {subspace} only applies to the regular representation"
                )));
            }
            let u = read_subspace(subspace, field, rep.degree())?;
            (rep, u)
        }
        None => {
            let reg = RegularRep::new(g, field)?;
            let u = match subspace {
                "fix" => reg.fix_subspace()?,
                "ker-sigma" => reg.sigma_kernel(),
                path => read_subspace(path, field, reg.rep().degree())?,
            };
            (reg.rep().clone(), u)
        }
    };
    let pi = rep.averaging_projection(&u)?;
    let w = rep.maschke_complement(&u)?;
    let identity_on_subspace = u.vectors().all(|v| pi.mul_vec(v) == v);
    let report = MaschkeReport {
        field,
        degree: rep.degree(),
        idempotent: &pi * &pi == pi,
        identity_on_subspace,
        image_is_subspace: pi.image() == u,
        intertwines: rep.matrices().iter().all(|m| &pi * m == m * &pi),
        complement_invariant: rep.is_invariant(&w)?,
        direct_sum: u.is_direct_sum(&w).map_err(|e| Failure::Usage(e.to_string()))?,
        subspace: u,
        projection: pi,
        complement: w,
    };
    if json {
        emit(out, &report)?;
    } else {
        writeln!(out, "field: {field}; degree: {}", report.degree)?;
        writeln!(out, "U: dim {}", report.subspace.dim())?;
        out.write_all(render_subspace(&report.subspace, "  ").as_bytes())?;
        writeln!(out, "averaging projection π:")?;
        out.write_all(render_matrix(&report.projection, "  ").as_bytes())?;
        writeln!(out, "W = ker π: dim {}", report.complement.dim())?;
        out.write_all(render_subspace(&report.complement, "  ").as_bytes())?;
        writeln!(out, "π² = π: {}", yes_no(report.idempotent))?;
        writeln!(out, "π = id on U: {}", yes_no(report.identity_on_subspace))?;
        writeln!(out, "image π = U: {}", yes_no(report.image_is_subspace))?;
        writeln!(out, "π commutes with every λ(a): {}", yes_no(report.intertwines))?;
        writeln!(out, "W invariant: {}", yes_no(report.complement_invariant))?;
        writeln!(out, "U ⊕ W = whole space: {}", yes_no(report.direct_sum))?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn read_subspace(path: &str, field: Field, dim: usize) -> Result<Subspace, Failure> {
    let vectors = text::parse_vectors(&read_file(path.as_ref())?, field, dim)
        .map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    Ok(Subspace::span(field, dim, vectors))
}

fn converse(g: &GyroTable, prime: u64, bound: u128, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let report = converse_maschke_bounded(g, prime, bound)?;
    if json {
        emit(out, &report)?;
    } else {
        writeln!(out, "field: GF({prime}); order {}", report.order)?;
        writeln!(out, "class sizes: {}", join(&report.class_sizes))?;
        writeln!(out, "dim L^gyr: {}; dim U: {}", report.dim_lgyr, report.dim_u)?;
        writeln!(out, "σ nonzero on L^gyr: {}", yes_no(report.hypothesis_holds))?;
        for c in &report.candidates {
            let verdict = match c.moved_by {
                Some(h) => format!("moved by λ({h})"),
                None => "invariant".to_string(),
            };
            writeln!(out, "candidate span{{{}}}: {verdict}", join(&c.vector))?;
        }
        writeln!(out, "candidates checked: {}", report.candidates_checked)?;
        let branch = match report.branch {
            ConverseBranch::NoInvariantComplement => "no invariant complement",
            ConverseBranch::HypothesisFails => "hypothesis fails; inapplicable",
            ConverseBranch::ComplementFound => "complement found",
        };
        writeln!(out, "branch: {branch}")?;
        writeln!(out, "{}", report.narrative)?;
    }
    match report.branch {
        ConverseBranch::NoInvariantComplement => Ok(()),
        _ => Err(Failure::Reported),
    }
}

fn chain(g: &GyroTable, prime: u64, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let report = inclusion_chain(g, prime)?;
    if json {
        emit(out, &report)?;
    } else {
        writeln!(out, "field: GF({prime}); group: {}", yes_no(report.is_group))?;
        writeln!(out, "{}", report.render())?;
        writeln!(out, "all inclusions hold: {}", yes_no(report.all_hold()))?;
    }
    if report.all_hold() {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn mobius(samples: usize, tol: f64, seed: u64, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let report = mobius_sample_check(samples, tol, seed).map_err(|e| Failure::Usage(e.to_string()))?;
    if json {
        emit(out, &report)?;
    } else {
        writeln!(
            out,
            "samples: {}; seed: {}; modulus cap: {}; tolerance: {:e}",
            report.samples, report.seed, report.modulus_cap, report.tolerance
        )?;
        writeln!(out, "max left gyroassociativity residual: {:e}", report.max_left_gyroassociativity)?;
        writeln!(out, "max left loop residual: {:e}", report.max_left_loop)?;
        writeln!(out, "max ||gyr factor| - 1|: {:e}", report.max_unimodularity)?;
        writeln!(out, "passed: {}", yes_no(report.passed))?;
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("gyrorep").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_g8() {
        let (code, out, _) = run_str(&["verify", "builtin:g8"]);
        assert_eq!(code, 0);
        assert!(out.contains("gyrogroup: yes; group: no; gyroautomorphisms: 2"), "{out}");
    }

    #[test]
    fn lgyr_cyclic() {
        let (code, out, _) = run_str(&["lgyr", "builtin:cyclic:4"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim L^gyr: 4"));
        assert!(out.contains("classes: {0} {1} {2} {3}"));
    }

    #[test]
    fn grid_labels_for_g8() {
        let g = builtin("g8").unwrap();
        let grid = gyr_label_grid(&g);
        assert!(grid[3].iter().all(|c| c == "I"));
        assert_eq!(grid[4][1], "t1");
        assert!(render_gyr_table(&g).contains("t1 = (4 6)(5 7)"));
    }

    #[test]
    fn groups_render_all_identity() {
        let g = builtin("cyclic:5").unwrap();
        assert!(gyr_label_grid(&g).iter().flatten().all(|c| c == "I"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&[]).0, 2);
        assert_eq!(run_str(&["lgyr", "builtin:g8", "--field", "f:4"]).0, 2);
        assert_eq!(run_str(&["mobius-check"]).0, 2);
        assert_eq!(run_str(&["info", "builtin:nope"]).0, 2);
        assert_eq!(run_str(&["info", "/nonexistent/table.txt"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn hypothesis_failures_exit_one() {
        assert_eq!(run_str(&["decompose", "builtin:g8", "--field", "f:2"]).0, 1);
        assert_eq!(run_str(&["converse", "builtin:g8", "-p", "2"]).0, 1);
        assert_eq!(run_str(&["chain", "builtin:g8", "-p", "3"]).0, 1);
    }
}
