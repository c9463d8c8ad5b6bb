//! The command-line surface. Every command renders into strings so the whole
//! run can be replayed in tests without a subprocess.

use std::fmt::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monofact_core::catalog;
use monofact_core::cohomology::{h1, z1};
use monofact_core::descent::{cocycle_kernel, descent_cohomology, enumerate_descent_cocycles, unit_valued_cocycles};
use monofact_core::factorization::{enumerate_factorizations, fac_over};
use monofact_core::groupoid::CohomologyClasses;
use monofact_core::map::find_isomorphism;
use monofact_core::submonoid::enumerate_submonoids;
use monofact_core::{AlgebraError, FiniteMonoid, MonoidAction, SemidirectProduct, Side, SubMonoid};

use crate::document::{emit_monoid, load_action, load_monoid, DocumentError};
use crate::selection::parse_submonoid;
use crate::verify::verify_suite;
use crate::witness::integer_witnesses;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "monofact", version, about = "Factorizations, descent cocycles and cohomology of finite monoids")]
pub struct Cli {
    /// Exit with status 1 when a command's answer is negative.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Monoid document path, or @NAME for a catalog entry.
    #[arg(long = "in", value_name = "FILE")]
    pub input: String,
}

#[derive(Args, Debug)]
pub struct ActionInput {
    /// The monoid acted on.
    #[arg(long, value_name = "FILE")]
    pub a: String,
    /// The acting monoid.
    #[arg(long, value_name = "FILE")]
    pub b: String,
    #[arg(long, value_name = "FILE")]
    pub action: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Basic facts about a monoid.
    Info(Input),
    /// All submonoids.
    Submonoids(Input),
    /// Factorizations, or the second factors over --first. Negative when none.
    Fac {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "SPEC")]
        first: Option<String>,
    },
    /// Descent cocycles into --sub. Negative when none.
    Cocycles {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "SPEC")]
        sub: String,
        /// Keep cocycles that are unit-valued on this second factor.
        #[arg(long, value_name = "SPEC")]
        unit_on: Option<String>,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Classes of left cocycles into --sub under the star action.
    /// Negative when there is more than one class.
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "SPEC")]
        sub: String,
        #[arg(long, value_name = "SPEC")]
        unit_on: Option<String>,
    },
    /// The semidirect product of --a by --b.
    Semidirect {
        #[command(flatten)]
        input: ActionInput,
        /// Print the product as a monoid document only.
        #[arg(long)]
        emit: bool,
    },
    /// 1-cocycles of --b with values in --a.
    Z1 {
        #[command(flatten)]
        input: ActionInput,
        /// Restrict to unit-valued cocycles.
        #[arg(long)]
        units: bool,
    },
    /// First cohomology. Negative when there is more than one class.
    H1 {
        #[command(flatten)]
        input: ActionInput,
        #[arg(long)]
        units: bool,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Include the built-in catalog.
        #[arg(long)]
        catalog: bool,
    },
    /// Bounded checks of the integer examples.
    Witness {
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// List the built-in catalog.
    Catalog,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Validation(String),
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        match e {
            DocumentError::Io { .. } | DocumentError::UnknownCatalog(_) => Failure::Usage(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::SizeBoundExceeded { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

/// Text plus whether the answer was negative.
struct Report {
    text: String,
    negative: bool,
    /// Failures that set a non-zero status even without `--strict`.
    failed: bool,
}

impl Report {
    fn positive(text: String) -> Self {
        Report { text, negative: false, failed: false }
    }
}

/// Runs the tool on `argv` (including the program name).
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok(r) => {
            let code = if r.failed || (cli.strict && r.negative) { EXIT_NEGATIVE } else { EXIT_OK };
            Outcome { code, stdout: r.text, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Validation(msg)) => {
            Outcome { code: EXIT_VALIDATION, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}

fn select(m: &FiniteMonoid, spec: &str) -> Result<SubMonoid, Failure> {
    parse_submonoid(m, spec).map_err(|e| Failure::Usage(format!("selection {spec:?}: {e}")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load_action_input(input: &ActionInput) -> Result<MonoidAction, Failure> {
    let a = load_monoid(&input.a, None)?;
    let b = load_monoid(&input.b, None)?;
    Ok(load_action(&input.action, &b, &a)?)
}

fn execute(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Info(input) => info(&load_monoid(&input.input, None)?),
        Command::Submonoids(input) => submonoids(&load_monoid(&input.input, None)?),
        Command::Fac { input, first } => fac(&load_monoid(&input.input, None)?, first.as_deref()),
        Command::Cocycles { input, sub, unit_on, side } => {
            cocycles(&load_monoid(&input.input, None)?, sub, unit_on.as_deref(), *side)
        }
        Command::Cohomology { input, sub, unit_on } => cohomology(&load_monoid(&input.input, None)?, sub, unit_on.as_deref()),
        Command::Semidirect { input, emit } => semidirect(&load_action_input(input)?, *emit),
        Command::Z1 { input, units } => cocycles1(&load_action_input(input)?, *units),
        Command::H1 { input, units } => cohomology1(&load_action_input(input)?, *units),
        Command::Verify { max_size, catalog } => {
            let rep = verify_suite(*max_size, *catalog)?;
            Ok(Report { text: rep.render(), negative: !rep.all_pass(), failed: !rep.all_pass() })
        }
        Command::Witness { bound } => {
            if *bound == 0 {
                return Err(Failure::Usage("--bound must be at least 1".into()));
            }
            let rep = integer_witnesses(*bound);
            Ok(Report { text: rep.render(), negative: !rep.passes(), failed: !rep.passes() })
        }
        Command::Catalog => {
            let mut s = String::new();
            for m in catalog::all().into_iter().chain([catalog::rz2_plus_one()]) {
                writeln!(s, "@{:<8} size {}", m.name().unwrap_or("?"), m.size()).unwrap();
            }
            Ok(Report::positive(s))
        }
    }
}

fn info(m: &FiniteMonoid) -> Result<Report, Failure> {
    let units = m.elements().filter(|&x| m.is_invertible(x)).count();
    let subs = enumerate_submonoids(m)?;
    let mut s = String::new();
    if let Some(name) = m.name() {
        writeln!(s, "name: {name}").unwrap();
    }
    writeln!(s, "size: {}", m.size()).unwrap();
    writeln!(s, "identity: {}", m.label(m.identity())).unwrap();
    writeln!(s, "units: {units}").unwrap();
    writeln!(s, "group: {}", yes_no(m.is_group())).unwrap();
    writeln!(s, "commutative: {}", yes_no(m.is_commutative())).unwrap();
    writeln!(s, "conical: {}", yes_no(m.is_conical())).unwrap();
    writeln!(s, "submonoids: {}", subs.len()).unwrap();
    Ok(Report::positive(s))
}

fn submonoids(m: &FiniteMonoid) -> Result<Report, Failure> {
    let subs = enumerate_submonoids(m)?;
    let mut s = String::new();
    for sub in &subs {
        let mut tags = Vec::new();
        if sub.is_subgroup() {
            tags.push("group");
        }
        if sub.is_conical() {
            tags.push("conical");
        }
        writeln!(s, "{}  order {}  {}", sub.display(), sub.len(), tags.join(" ")).unwrap();
    }
    writeln!(s, "|Sub| = {}", subs.len()).unwrap();
    Ok(Report::positive(s))
}

fn fac(m: &FiniteMonoid, first: Option<&str>) -> Result<Report, Failure> {
    let mut s = String::new();
    match first {
        Some(spec) => {
            let a = select(m, spec)?;
            let fo = fac_over(m, &a)?;
            for b in &fo {
                writeln!(s, "{}", b.display()).unwrap();
            }
            writeln!(s, "|FAC({}/M)| = {}", a.display(), fo.len()).unwrap();
            Ok(Report { text: s, negative: fo.is_empty(), failed: false })
        }
        None => {
            let facs = enumerate_factorizations(m)?;
            for f in &facs {
                writeln!(s, "{}", f.display()).unwrap();
            }
            writeln!(s, "|FAC| = {}", facs.len()).unwrap();
            Ok(Report { text: s, negative: facs.is_empty(), failed: false })
        }
    }
}

fn cocycles(m: &FiniteMonoid, sub: &str, unit_on: Option<&str>, side: SideArg) -> Result<Report, Failure> {
    let a = select(m, sub)?;
    let mut s = String::new();
    let (list, base) = match (unit_on, side) {
        (Some(spec), SideArg::Left) => {
            let b = select(m, spec)?;
            let pointed = unit_valued_cocycles(m, &a, &b)?;
            (pointed.elements, Some(pointed.base))
        }
        (Some(_), SideArg::Right) => return Err(Failure::Usage("--unit-on applies to left cocycles".into())),
        (None, SideArg::Left) => (enumerate_descent_cocycles(m, &a, Side::Left)?, None),
        (None, SideArg::Right) => (enumerate_descent_cocycles(m, &a, Side::Right)?, None),
    };
    for (i, q) in list.iter().enumerate() {
        let mark = if Some(i) == base { " *" } else { "" };
        writeln!(s, "{}  Ker = {}{mark}", q.map().display(), cocycle_kernel(q).display()).unwrap();
    }
    writeln!(s, "|D| = {}", list.len()).unwrap();
    Ok(Report { text: s, negative: list.is_empty(), failed: false })
}

fn render_classes<T>(
    s: &mut String,
    classes: &CohomologyClasses<T>,
    show: impl Fn(&T) -> String,
    witness: impl Fn(usize) -> String,
) {
    for (c, members) in classes.classes.iter().enumerate() {
        let base = if classes.base_class() == Some(c) { " (base)" } else { "" };
        writeln!(s, "class {}{base}: {} members", c + 1, members.len()).unwrap();
        for &i in members {
            writeln!(s, "  {}  via {}", show(&classes.objects[i]), witness(classes.witnesses[i])).unwrap();
        }
    }
}

fn cohomology(m: &FiniteMonoid, sub: &str, unit_on: Option<&str>) -> Result<Report, Failure> {
    let a = select(m, sub)?;
    let b = unit_on.map(|spec| select(m, spec)).transpose()?;
    let classes = descent_cohomology(m, &a, b.as_ref())?;
    let mut s = String::new();
    render_classes(&mut s, &classes, |q| q.map().display(), |g| m.label(g));
    writeln!(s, "|D| = {}, classes = {}", classes.objects.len(), classes.num_classes()).unwrap();
    Ok(Report { text: s, negative: classes.num_classes() > 1, failed: false })
}

fn semidirect(act: &MonoidAction, emit: bool) -> Result<Report, Failure> {
    let sd = SemidirectProduct::new(act.acted(), act, act.actor())?;
    let p = sd.product();
    if emit {
        return Ok(Report::positive(emit_monoid(p)));
    }
    let mut s = String::new();
    writeln!(s, "size: {}", p.size()).unwrap();
    writeln!(s, "identity: {}", p.label(p.identity())).unwrap();
    writeln!(s, "group: {}", yes_no(p.is_group())).unwrap();
    writeln!(s, "commutative: {}", yes_no(p.is_commutative())).unwrap();
    let iso: Vec<String> = catalog::all()
        .iter()
        .filter(|c| find_isomorphism(c, p).is_some())
        .map(|c| c.name().unwrap_or("?").to_string())
        .collect();
    writeln!(s, "isomorphic to: {}", if iso.is_empty() { "-".to_string() } else { iso.join(", ") }).unwrap();
    for x in p.elements() {
        let row: Vec<String> = p.elements().map(|y| p.label(p.mul(x, y))).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    Ok(Report::positive(s))
}

fn cocycles1(act: &MonoidAction, units: bool) -> Result<Report, Failure> {
    let zs = z1(act, units)?;
    let mut s = String::new();
    for chi in &zs {
        writeln!(s, "{}", chi.map().display()).unwrap();
    }
    writeln!(s, "|Z1| = {}", zs.len()).unwrap();
    Ok(Report::positive(s))
}

fn cohomology1(act: &MonoidAction, units: bool) -> Result<Report, Failure> {
    let classes = h1(act, units)?;
    let a = act.acted();
    let mut s = String::new();
    render_classes(&mut s, &classes, |chi| chi.map().display(), |g| a.label(g));
    writeln!(s, "|Z1| = {}, |H1| = {}", classes.objects.len(), classes.num_classes()).unwrap();
    Ok(Report { text: s, negative: classes.num_classes() > 1, failed: false })
}
