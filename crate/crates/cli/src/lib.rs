//! The `gvz` command line: build groups from JSON specs, print character
//! tables, evaluate GVZ / Camina predicates and run the theorem checks.

mod render;

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use gvz_core::analysis::{self, ids, Analysis, TheoremReport};
use gvz_core::{CharacterTable, DixonOptions, Error, Group, GroupSpec, Subgroup};

pub use render::SCHEMA_ID;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_HYPOTHESIS: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "gvz", version, about = "Exact character tables and GVZ-group checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the conjugacy classes and the irreducible characters.
    Table(GroupArgs),
    /// Evaluate a predicate on the group.
    Check {
        kind: CheckKind,
        /// Normal subgroup for `gcp`: `center`, `derived`, or comma-separated
        /// generator words / element indices.
        #[arg(long, default_value = "center")]
        normal: String,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Check the stated theorems on the group.
    Verify {
        target: VerifyTarget,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Write a group spec.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenFamily {
    /// The `G_n` family for an odd prime `p`.
    Gn {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        n: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = gvz_core::group::DEFAULT_ORDER_CAP)]
        max_order: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Group spec as JSON, or `@path` to read it from a file.
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for class coefficients and independent checks.
    #[arg(long, default_value_t = 1)]
    pub parallel: usize,
    /// Refuse groups larger than this.
    #[arg(long, default_value_t = gvz_core::group::DEFAULT_ORDER_CAP)]
    pub max_order: usize,
    /// Also print approximate complex values (text tables only).
    #[arg(long)]
    pub decimal: bool,
    /// Print timings on stderr.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Gvz,
    Gcp,
    TwoDegree,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    #[value(name = "thm1.1")]
    FiberBijections,
    #[value(name = "thm1.2")]
    ClassCondition,
    #[value(name = "lemmas")]
    Lemmas,
    #[value(name = "prop2.11")]
    OrderP4,
    #[value(name = "centres")]
    Centres,
    #[value(name = "all")]
    All,
}

impl VerifyTarget {
    pub fn name(self) -> &'static str {
        match self {
            VerifyTarget::FiberBijections => "thm1.1",
            VerifyTarget::ClassCondition => "thm1.2",
            VerifyTarget::Lemmas => "lemmas",
            VerifyTarget::OrderP4 => "prop2.11",
            VerifyTarget::Centres => "centres",
            VerifyTarget::All => "all",
        }
    }

    /// Id of the report the target produces.
    fn report_id(self) -> &'static str {
        match self {
            VerifyTarget::FiberBijections => ids::FIBER_BIJECTIONS,
            VerifyTarget::ClassCondition => ids::CLASS_CONDITION,
            VerifyTarget::Lemmas => ids::LEMMA_SUITE,
            VerifyTarget::OrderP4 => ids::ORDER_P4_CAMINA,
            VerifyTarget::Centres => ids::CENTRE_CENSUS,
            VerifyTarget::All => "all",
        }
    }

    const EACH: [VerifyTarget; 5] = [
        VerifyTarget::FiberBijections,
        VerifyTarget::ClassCondition,
        VerifyTarget::Lemmas,
        VerifyTarget::OrderP4,
        VerifyTarget::Centres,
    ];
}

/// Everything a run produced; `main` writes it out and exits with `code`.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) => EXIT_INPUT,
        Error::Resource(_) => EXIT_RESOURCE,
        Error::HypothesisNotMet(_) | Error::NotApplicable(_) => EXIT_HYPOTHESIS,
        Error::NotNilpotent | Error::TheoremViolation(_) | Error::Internal(_) => EXIT_FAIL,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Table(args) => with_group(args, "table", table),
        Command::Check { kind, normal, group } => with_group(group, "check", |ctx| check(ctx, *kind, normal)),
        Command::Verify { target, group } => with_group(group, "verify", |ctx| verify(ctx, *target)),
        Command::Gen { family: GenFamily::Gn { p, n, out, max_order } } => gen_gn(*p, *n, out.as_ref(), *max_order),
    }
}

/// Loaded group and options shared by the commands.
struct Context<'a> {
    args: &'a GroupArgs,
    command: &'static str,
    spec: GroupSpec,
    group: Arc<Group>,
    options: DixonOptions,
    diagnostics: Vec<String>,
    started: Instant,
}

impl Context<'_> {
    fn table(&mut self) -> gvz_core::Result<Arc<CharacterTable>> {
        let t = CharacterTable::compute_with(&self.group, &self.options)?;
        self.lap("character table");
        Ok(Arc::new(t))
    }

    fn analysis(&mut self) -> gvz_core::Result<Analysis> {
        let t = self.table()?;
        let a = Analysis::with_options(t, self.options.clone())?;
        self.lap("character data");
        Ok(a)
    }

    fn lap(&mut self, what: &str) {
        if self.args.timings {
            self.diagnostics.push(format!("{what}: {:.3}s", self.started.elapsed().as_secs_f64()));
        }
    }

    fn envelope(&self, result: Value) -> Value {
        render::envelope(self.command, Some((&self.spec, &self.group)), result)
    }
}

/// A command's rendered output and exit code.
struct Rendered {
    text: String,
    json: Value,
    code: i32,
}

fn read_spec(arg: &str) -> gvz_core::Result<GroupSpec> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    GroupSpec::parse(&text)
}

fn with_group(
    args: &GroupArgs,
    command: &'static str,
    body: impl FnOnce(&mut Context) -> gvz_core::Result<Rendered>,
) -> Outcome {
    let started = Instant::now();
    let loaded = read_spec(&args.group).and_then(|spec| {
        let group = spec.build(args.max_order)?;
        Ok((spec, group))
    });
    let (spec, group) = match loaded {
        Ok(x) => x,
        Err(e) => return error_outcome(args.format, command, None, &e),
    };
    let mut ctx = Context {
        args,
        command,
        spec,
        group,
        options: DixonOptions { parallel: args.parallel.max(1), ..Default::default() },
        diagnostics: Vec::new(),
        started,
    };
    ctx.lap("group");
    let result = body(&mut ctx);
    let mut outcome = match result {
        Ok(r) => Outcome {
            stdout: match args.format {
                Format::Text => r.text,
                Format::Json => render::json_string(&r.json),
            },
            stderr: String::new(),
            code: r.code,
        },
        Err(e) => error_outcome(args.format, command, Some((&ctx.spec, &ctx.group)), &e),
    };
    for d in &ctx.diagnostics {
        outcome.stderr.push_str(d);
        outcome.stderr.push('\n');
    }
    outcome
}

fn error_outcome(format: Format, command: &str, group: Option<(&GroupSpec, &Arc<Group>)>, e: &Error) -> Outcome {
    let code = exit_code(e);
    match format {
        Format::Text => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code },
        Format::Json => Outcome {
            stdout: render::json_string(&render::envelope(command, group, render::error_json(e))),
            stderr: format!("error: {e}\n"),
            code,
        },
    }
}

fn table(ctx: &mut Context) -> gvz_core::Result<Rendered> {
    let t = ctx.table()?;
    let text = render::table_text(&t, ctx.args.decimal);
    let json = ctx.envelope(render::table_json(&t));
    Ok(Rendered { text, json, code: EXIT_PASS })
}

/// Resolves `center`, `derived`, or a comma-separated list of element words
/// or indices generating the subgroup.
pub fn parse_normal(group: &Arc<Group>, a: &Analysis, text: &str) -> gvz_core::Result<Subgroup> {
    match text.trim() {
        "center" | "centre" => return Ok(a.centre().clone()),
        "derived" => return Ok(a.derived().clone()),
        _ => {}
    }
    let mut elements = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let x = match token.parse::<usize>() {
            Ok(i) if i < group.order() => i,
            Ok(i) => return Err(Error::Input(format!("element index {i} out of range"))),
            Err(_) => (0..group.order())
                .find(|&x| group.label(x) == token)
                .ok_or_else(|| Error::Input(format!("no element with word '{token}'")))?,
        };
        elements.push(x);
    }
    if elements.is_empty() {
        return Err(Error::Input("empty subgroup description".into()));
    }
    Ok(Subgroup::generated_by(group, &elements))
}

fn check(ctx: &mut Context, kind: CheckKind, normal: &str) -> gvz_core::Result<Rendered> {
    let a = ctx.analysis()?;
    let (holds, result, text) = match kind {
        CheckKind::Gvz => {
            let r = analysis::is_gvz(&a)?;
            let text = render::gvz_text(&r);
            (r.is_gvz, json!({ "kind": "gvz", "holds": r.is_gvz, "report": r }), text)
        }
        CheckKind::Gcp => {
            let n = parse_normal(&ctx.group, &a, normal)?;
            let r = analysis::is_gcp(&a, &n)?;
            let text = render::gcp_text(&r);
            (r.holds, json!({ "kind": "gcp", "holds": r.holds, "report": r }), text)
        }
        CheckKind::TwoDegree => {
            let r = analysis::two_degree(&a);
            let text = render::two_degree_text(&r);
            (r.holds, json!({ "kind": "two-degree", "holds": r.holds, "report": r }), text)
        }
    };
    ctx.lap("check");
    let code = if holds { EXIT_PASS } else { EXIT_FAIL };
    Ok(Rendered { text, json: ctx.envelope(result), code })
}

fn run_target(a: &Analysis, target: VerifyTarget) -> gvz_core::Result<TheoremReport> {
    match target {
        VerifyTarget::FiberBijections => analysis::verify_fiber_bijections(a),
        VerifyTarget::ClassCondition => analysis::verify_class_condition(a),
        VerifyTarget::Lemmas => analysis::verify_lemma_suite(a),
        VerifyTarget::OrderP4 => analysis::verify_order_p4_criterion(a),
        VerifyTarget::Centres => analysis::verify_centre_census(a),
        VerifyTarget::All => unreachable!("expanded by the caller"),
    }
}

/// Runs one target; an unmet hypothesis becomes a not-applicable report.
fn run_target_or_skip(a: &Analysis, target: VerifyTarget) -> gvz_core::Result<(TheoremReport, bool)> {
    match run_target(a, target) {
        Ok(r) => Ok((r, true)),
        Err(Error::HypothesisNotMet(why)) => {
            Ok((TheoremReport::not_applicable(target.report_id(), a.group().name(), why), false))
        }
        Err(e) => Err(e),
    }
}

fn verify(ctx: &mut Context, target: VerifyTarget) -> gvz_core::Result<Rendered> {
    let a = ctx.analysis()?;
    let targets: Vec<VerifyTarget> = match target {
        VerifyTarget::All => VerifyTarget::EACH.to_vec(),
        t => vec![t],
    };
    let results: Vec<gvz_core::Result<(TheoremReport, bool)>> = if ctx.options.parallel > 1 && targets.len() > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(ctx.options.parallel)
            .build()
            .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
        pool.install(|| targets.par_iter().map(|&t| run_target_or_skip(&a, t)).collect())
    } else {
        targets.iter().map(|&t| run_target_or_skip(&a, t)).collect()
    };
    let mut reports = Vec::with_capacity(results.len());
    let mut applicable = Vec::with_capacity(results.len());
    for r in results {
        let (report, met) = r?;
        reports.push(report);
        applicable.push(met);
    }
    ctx.lap("verification");
    let pass = reports.iter().all(|r| r.pass);
    let code = if !pass {
        EXIT_FAIL
    } else if target != VerifyTarget::All && !applicable[0] {
        EXIT_HYPOTHESIS
    } else {
        EXIT_PASS
    };
    let labelled: Vec<(&str, &TheoremReport)> = targets.iter().map(|t| t.name()).zip(&reports).collect();
    let text = render::verify_text(&ctx.group, &labelled, pass);
    let result = render::verify_json(target.name(), &labelled, pass);
    Ok(Rendered { text, json: ctx.envelope(result), code })
}

fn gen_gn(p: u32, n: usize, out: Option<&PathBuf>, max_order: usize) -> Outcome {
    let spec = GroupSpec::Gn { p, n };
    if let Err(e) = spec.build(max_order) {
        return Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: exit_code(&e) };
    }
    let mut text = spec.canonical();
    text.push('\n');
    match out {
        None => Outcome { stdout: text, stderr: String::new(), code: EXIT_PASS },
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { stdout: format!("wrote {}\n", path.display()), stderr: String::new(), code: EXIT_PASS },
            Err(e) => Outcome {
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
                code: EXIT_INPUT,
            },
        },
    }
}
