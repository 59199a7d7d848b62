//! `fourdom`: command-line front end for the decision engine.
//!
//! Inputs are file paths, inline JSON, or built-in names such as
//! `Sigma0(2)#S2xS2`. Decision verbs exit 0/1/2 for yes/no/unknown; every
//! usage, parse or validation error exits 3.

mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use fourdom::domination::{
    chi4, enumerate_simply_connected, rigidity, Decision, DominationError, Engine, GroupDescriptor,
};
use fourdom::intforms::{classify_with, split_off_with, IntForm, SearchLimits, SplitDecision};
use fourdom::laurent::{AxiomRegistry, RegistryError};
use fourdom::manifolds::{decompose, validate, z2_form, ManifoldDescriptor};
use fourdom::wire::{self, WireError};

const EXIT_ERROR: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Verb {
    ClassifyForm,
    Split,
    ClassifyManifold,
    Validate,
    Decompose,
    Dominates,
    StablyDominates,
    Chi4,
    MinimalTarget,
    EnumerateSc,
    EnumerateStable,
    EnumerateZn,
    UniversalDominator,
    Z2Form,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Debug, Parser)]
#[command(name = "fourdom", version, about = "Degree-one maps between 4-manifolds with cyclic fundamental group")]
struct Cli {
    verb: Verb,
    /// First form or manifold: a file, inline JSON, or a built-in name.
    #[arg(long)]
    x: Option<String>,
    /// Second form or manifold.
    #[arg(long)]
    y: Option<String>,
    /// Group: 1, Z, Zn:N, Ab:d1,d2,... or beta1:B.
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Use the order-2 Σ-block models for every even order.
    #[arg(long, value_enum, default_value_t = Toggle::Off)]
    z2_extrapolation: Toggle,
    #[arg(long, default_value_t = 9)]
    definite_cap: usize,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("missing required flag --{0}")]
    Missing(&'static str),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("bad group {0:?}: {1}")]
    Group(String, String),
    #[error(transparent)]
    Wire(#[from] WireError),
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Manifold(#[from] fourdom::manifolds::ManifoldError),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Missing(_) | CliError::Group(..) => "usage",
            CliError::Io { .. } | CliError::Registry(_) => "io",
            CliError::Wire(WireError::Invalid(_)) | CliError::Domination(DominationError::InvalidDescriptor { .. }) => {
                "validation"
            }
            CliError::Wire(_) => "parse",
            CliError::Domination(DominationError::BoundTooLarge { .. }) => "bound",
            CliError::Domination(_) | CliError::Manifold(_) => "domain",
        }
    }

    fn violations(&self) -> Vec<&'static str> {
        match self {
            CliError::Wire(WireError::Invalid(v)) | CliError::Domination(DominationError::InvalidDescriptor { violations: v, .. }) => {
                v.iter().map(|v| v.name()).collect()
            }
            _ => Vec::new(),
        }
    }
}

struct Report {
    body: Value,
    code: u8,
}

impl Report {
    fn plain(body: Value) -> Self {
        Report { body, code: 0 }
    }

    /// Merges the decision into `body`; the exit code follows the outcome.
    fn decided(mut body: Value, decision: Decision) -> Self {
        if let Value::Object(map) = wire::decision_to_json(&decision) {
            body.as_object_mut().expect("report bodies are objects").extend(map);
        }
        Report { body, code: outcome_code(decision.outcome()) }
    }
}

fn outcome_code(outcome: &str) -> u8 {
    match outcome {
        "yes" => 0,
        "no" => 1,
        _ => 2,
    }
}

/// Reads the argument as a file if one exists at that path.
fn input_text(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
    } else {
        Ok(arg.to_string())
    }
}

fn parse_group(s: &str) -> Result<GroupDescriptor, CliError> {
    let bad = |msg: &str| CliError::Group(s.to_string(), msg.to_string());
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad("expected a non-negative integer"));
    match s.split_once(':') {
        None if s == "1" => Ok(GroupDescriptor::Trivial),
        None if s == "Z" => Ok(GroupDescriptor::InfiniteCyclic),
        Some(("Zn", n)) => match num(n)? {
            0 => Ok(GroupDescriptor::InfiniteCyclic),
            1 => Ok(GroupDescriptor::Trivial),
            n => Ok(GroupDescriptor::FiniteCyclic(n)),
        },
        Some(("Ab", list)) => {
            let factors = list.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
            GroupDescriptor::finite_abelian(factors).map_err(|m| bad(&m))
        }
        Some(("beta1", b)) => Ok(GroupDescriptor::General { beta1: num(b)? }),
        _ => Err(bad("expected 1, Z, Zn:N, Ab:d1,d2,... or beta1:B")),
    }
}

struct Context {
    cli: Cli,
    engine: Engine,
}

impl Context {
    fn raw(&self, which: &'static str) -> Result<String, CliError> {
        let arg = match which {
            "x" => self.cli.x.as_deref(),
            _ => self.cli.y.as_deref(),
        };
        input_text(arg.ok_or(CliError::Missing(which))?)
    }

    fn form(&self, which: &'static str) -> Result<IntForm, CliError> {
        Ok(wire::parse_form(&self.raw(which)?)?)
    }

    fn manifold(&self, which: &'static str) -> Result<ManifoldDescriptor, CliError> {
        Ok(wire::parse_descriptor(&self.raw(which)?, &self.engine.registry)?)
    }

    fn bound(&self) -> Result<usize, CliError> {
        self.cli.bound.ok_or(CliError::Missing("bound"))
    }
}

fn run(ctx: &Context) -> Result<Report, CliError> {
    let engine = &ctx.engine;
    Ok(match ctx.cli.verb {
        Verb::ClassifyForm => {
            let f = ctx.form("x")?;
            Report::plain(json!({
                "class": classify_with(&f, &engine.limits).to_string(),
                "invariants": wire::invariants_to_json(&f.invariants()),
            }))
        }
        Verb::Split => {
            let (x, y) = (ctx.form("x")?, ctx.form("y")?);
            let body = match split_off_with(&x, &y, &engine.limits) {
                SplitDecision::Yes { complement } => {
                    json!({ "outcome": "yes", "complement": wire::invariants_to_json(&complement) })
                }
                SplitDecision::No(reason) => json!({ "outcome": "no", "reason": reason.to_string() }),
                SplitDecision::Undecided(reason) => json!({ "outcome": "unknown", "reason": reason.to_string() }),
            };
            let code = outcome_code(body["outcome"].as_str().unwrap_or_default());
            Report { body, code }
        }
        Verb::ClassifyManifold => {
            let d = ctx.manifold("x")?;
            Report::plain(json!({
                "pi1": d.pi1().to_string(),
                "betti": d.betti(),
                "chi": d.chi(),
                "signature": d.signature(),
                "ks": d.ks(),
                "w2": d.w2().map(|w| w.to_string()),
                "form_class": classify_with(d.form(), &engine.limits).to_string(),
            }))
        }
        Verb::Validate => {
            let d = wire::descriptor_from_json(&parse_json_or_name(&ctx.raw("x")?)?)?;
            let violations = validate(&d, &engine.registry);
            let body = json!({
                "valid": violations.is_empty(),
                "violations": violations.iter().map(|v| json!({ "name": v.name(), "detail": v.to_string() })).collect::<Vec<_>>(),
            });
            Report { body, code: if violations.is_empty() { 0 } else { EXIT_ERROR } }
        }
        Verb::Decompose => {
            let parts = decompose(&ctx.manifold("x")?, &engine.registry)?;
            let part = |p: &fourdom::manifolds::Decomposition| {
                json!({ "sigma": p.sigma.to_string(), "m": wire::descriptor_to_json(&p.m) })
            };
            Report::plain(json!({
                "primary": part(&parts.primary),
                "alternates": parts.alternates.iter().map(part).collect::<Vec<_>>(),
            }))
        }
        Verb::Dominates => {
            let (x, y) = (ctx.manifold("x")?, ctx.manifold("y")?);
            let dec = engine.dominates(&x, &y)?;
            let mut body = json!({});
            if let Some(r) = rigidity(&x, &y, &dec) {
                body["rigidity"] = json!({ "chi": r.chi, "statement": r.statement });
            }
            Report::decided(body, dec)
        }
        Verb::StablyDominates => {
            let (x, y) = (ctx.manifold("x")?, ctx.manifold("y")?);
            Report::decided(json!({}), engine.stably_dominates(&x, &y)?)
        }
        Verb::Chi4 => {
            let spec = ctx.cli.group.as_deref().ok_or(CliError::Missing("group"))?;
            let body = match chi4(&parse_group(spec)?) {
                fourdom::domination::Chi4::Value(v) => json!({ "value": v }),
                fourdom::domination::Chi4::LowerBound(v) => json!({ "lower_bound": v }),
            };
            Report::plain(body)
        }
        Verb::MinimalTarget => {
            let (target, dec) = engine.minimal_target(&ctx.manifold("x")?)?;
            Report::decided(json!({ "target": wire::descriptor_to_json(&target), "chi": target.chi() }), dec)
        }
        Verb::EnumerateSc => {
            let list = enumerate_simply_connected(ctx.bound()?)?;
            Report::plain(json!({
                "count": list.len(),
                "classes": list.iter().map(wire::descriptor_to_json).collect::<Vec<_>>(),
            }))
        }
        Verb::EnumerateStable => {
            let classes = engine.enumerate_stable_targets_z(&ctx.manifold("x")?)?;
            Report::plain(json!({
                "count": classes.len(),
                "classes": classes
                    .iter()
                    .map(|c| json!({
                        "invariants": wire::invariants_to_json(&c.invariants),
                        "ks": c.ks,
                        "representative": wire::descriptor_to_json(&c.representative),
                    }))
                    .collect::<Vec<_>>(),
            }))
        }
        Verb::EnumerateZn => {
            let targets = engine.enumerate_targets_zn(&ctx.manifold("x")?)?;
            Report::plain(json!({
                "count": targets.len(),
                "targets": targets
                    .iter()
                    .map(|(d, dec)| json!({ "target": wire::descriptor_to_json(d), "decision": wire::decision_to_json(dec) }))
                    .collect::<Vec<_>>(),
            }))
        }
        Verb::UniversalDominator => {
            let u = engine.universal_dominator_z(ctx.bound()?)?;
            let body = json!({
                "bound": u.bound,
                "summands": u.summands.len(),
                "beta2": u.descriptor.form().rank(),
                "signature": u.descriptor.signature(),
                "ks": u.descriptor.ks(),
            });
            match &ctx.cli.x {
                Some(_) => Report::decided(body, u.certify(engine, &ctx.manifold("x")?)?),
                None => Report::plain(body),
            }
        }
        Verb::Z2Form => {
            let z = z2_form(&ctx.manifold("x")?, &engine.registry)?;
            Report::plain(json!({
                "gram2": z.form.matrix(),
                "class": z.form.class().to_string(),
                "alternating": z.form.is_alternating(),
                "extrapolated": z.extrapolated,
            }))
        }
    })
}

fn parse_json_or_name(text: &str) -> Result<Value, CliError> {
    let t = text.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| WireError::Shape(e.to_string()).into())
    } else {
        Ok(wire::descriptor_to_json(&wire::manifold_expression(t)?))
    }
}

fn load_registry() -> Result<AxiomRegistry, CliError> {
    match std::env::var_os("FOURDOM_AXIOMS") {
        Some(path) => Ok(AxiomRegistry::from_file(Path::new(&path))?),
        None => Ok(AxiomRegistry::builtin()),
    }
}

fn emit(body: &Value, format: Format) {
    let text = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(body).expect("serializable")),
        Format::Text => render::text(body),
    };
    // a closed pipe is not an error for a report
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_ERROR);
        }
    };
    let format = cli.format;
    let result = load_registry().and_then(|registry| {
        let limits = SearchLimits::with_definite_cap(cli.definite_cap);
        let engine = Engine::new(registry, limits, cli.z2_extrapolation == Toggle::On);
        run(&Context { cli, engine })
    });
    match result {
        Ok(report) => {
            emit(&report.body, format);
            ExitCode::from(report.code)
        }
        Err(e) => {
            let body = json!({ "error": e.kind(), "message": e.to_string(), "violations": e.violations() });
            emit(&body, format);
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
