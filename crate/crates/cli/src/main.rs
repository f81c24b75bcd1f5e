//! Command-line front end: instance generation, ascent runs, and
//! verification of oracles and width certificates.
//!
//! Exit codes: 0 success/verified, 1 verification failed, 2 usage error,
//! 3 budget exceeded.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ascentlab::certificates::{bundled_certificates, ms_two_gadget_window, mt_vertex_universe};
use ascentlab::constructions::{
    build_cd_chain, build_cd_gadget, build_ms_scopes, cd_start, BridgeConvention, CdParams,
    GadgetBoundary, Variant,
};
use ascentlab::graphwidth::{
    exact_pathwidth, validate_decomposition, validate_minor, validate_minor_structure_only,
    Hypergraph,
};
use ascentlab::oracle::{
    enumerate_peaks, explore_ascent_graph, verify_peak_table, DEFAULT_EXPLORE_BUDGET,
};
use ascentlab::search::{
    default_chain_max_steps, run_ascent, trace_to_jsonl, Audited, PivotRule, DEFAULT_MAX_STEPS,
};
use ascentlab::tables::delta_table_report;
use ascentlab::vcsp::{Assignment, VcspInstance};
use ascentlab::Error;

/// Environment variable naming the default directory for `--output` paths.
const OUT_DIR_ENV: &str = "ASCENTLAB_OUT";

const EXIT_VERIFIED: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ascentlab",
    about = "Pseudo-Boolean VCSP fitness-landscape laboratory",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Build {
        #[command(subcommand)]
        what: BuildCommand,
    },
    /// Run strict local search on an instance file and record the trace.
    Ascend(AscendArgs),
    /// Verify oracles, reference tables, and width certificates.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    P10,
    P00,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::P10 => Variant::P10,
            VariantArg::P00 => Variant::P00,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    ASide,
    BSide,
}

impl From<ConventionArg> for BridgeConvention {
    fn from(c: ConventionArg) -> BridgeConvention {
        match c {
            ConventionArg::ASide => BridgeConvention::ASide,
            ConventionArg::BSide => BridgeConvention::BSide,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    First,
    Steepest,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildFormat {
    Json,
    Dot,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; relative paths resolve against $ASCENTLAB_OUT when set.
    /// Defaults to standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum BuildCommand {
    /// A controlled-doubling chain of m gadgets at weight scale n.
    CdChain {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "p10")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "a-side")]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value = "json")]
        format: BuildFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// A single closed gadget with boundary bits folded into its unaries.
    CdGadget {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Boundary bit P (state of the next-higher gadget's slot 6).
        #[arg(long, default_value_t = false)]
        p: bool,
        /// Boundary bit Q (state of the next-lower gadget's slot B).
        #[arg(long, default_value_t = false)]
        q: bool,
        /// Boundary bit R (state of the next-higher gadget's slot A).
        #[arg(long, default_value_t = false)]
        r: bool,
        /// Boundary bit S (state of the next-lower gadget's slot 1).
        #[arg(long, default_value_t = false)]
        s: bool,
        #[arg(long, value_enum, default_value = "a-side")]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value = "json")]
        format: BuildFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The Michel–Scott max-cut scope structure on 8n+4 variables.
    MsScopes {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: BuildFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct AscendArgs {
    /// Instance file produced by `build`.
    #[arg(long)]
    instance: PathBuf,
    /// Start assignment: a bit string, or `designated` for the generated
    /// chain's designated start (resolved via --variant).
    #[arg(long, default_value = "designated")]
    start: String,
    /// Variant used to resolve `--start designated` on chain instances.
    #[arg(long, value_enum, default_value = "p10")]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "first")]
    rule: RuleArg,
    /// Seed for the random-improvement rule.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Step budget; defaults to 2·10(2^m−1) for labelled 8m-variable chains,
    /// otherwise 10^8.
    #[arg(long)]
    max_steps: Option<usize>,
    /// Fail (exit 1) unless the ascent takes exactly this many steps.
    #[arg(long)]
    expect_steps: Option<usize>,
    /// Record the improving-move count at every step and audit uniqueness.
    #[arg(long, default_value_t = false)]
    audit: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Enumerate the peaks of an instance file, or compare a gadget's
    /// brute-forced peaks against the reference peak table (--n/--k).
    Peaks {
        #[arg(long, conflicts_with_all = ["n", "k"])]
        instance: Option<PathBuf>,
        #[arg(long, requires = "k")]
        n: Option<u32>,
        #[arg(long, requires = "n")]
        k: Option<u32>,
        #[arg(long, value_enum, default_value = "a-side")]
        convention: ConventionArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exhaustively explore the improving-flip graph of a generated chain.
    Explore {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "p10")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "a-side")]
        convention: ConventionArg,
        /// Start assignment: `designated` or a bit string.
        #[arg(long, default_value = "designated")]
        start: String,
        #[arg(long, default_value_t = DEFAULT_EXPLORE_BUDGET)]
        budget: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Validate a bundled path decomposition against its structure.
    Decomposition {
        /// One of: prop3, prop2, prop2-repaired, prop1.
        #[arg(long)]
        cert: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Validate a bundled clique-minor certificate against its structure.
    Minor {
        /// One of: prop3-k4, prop2-k5, prop2-k5-extended, prop1-k5.
        #[arg(long)]
        cert: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute the exact pathwidth of a built-in structure or instance file.
    Pathwidth {
        #[arg(long, conflicts_with = "instance", value_parser = ["cd-gadget", "ms-two-gadget"])]
        builtin: Option<String>,
        #[arg(long)]
        instance: Option<PathBuf>,
        /// Fail (exit 1) unless the pathwidth equals this value.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Recompute the reference delta table in a chain context.
    DeltaTable {
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, value_enum, default_value = "a-side")]
        convention: ConventionArg,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err.downcast_ref::<Error>() {
                Some(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
                Some(Error::ParamOutOfRange(_) | Error::TooLarge(_) | Error::InvalidVariable(_)) => {
                    EXIT_USAGE
                }
                _ => EXIT_FAILED,
            };
            ExitCode::from(code)
        }
    }
}

/// Writes `text` to the resolved output target (stdout when none given).
fn emit(out: &OutputArgs, text: &str) -> anyhow::Result<()> {
    match &out.output {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => {
            let path = match std::env::var_os(OUT_DIR_ENV) {
                Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
                _ => path.clone(),
            };
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(&path, text)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
    }
}

fn render_instance(inst: &VcspInstance, format: BuildFormat) -> String {
    match format {
        BuildFormat::Json => inst.to_json(),
        BuildFormat::Dot => inst.to_dot(),
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Build { what } => build(what),
        Command::Ascend(args) => ascend(args),
        Command::Verify { what } => verify(what),
    }
}

fn build(what: BuildCommand) -> anyhow::Result<u8> {
    match what {
        BuildCommand::CdChain {
            n,
            m,
            variant,
            convention,
            format,
            out,
        } => {
            let params = CdParams::new(n, m, variant.into(), convention.into())?;
            let inst = build_cd_chain(&params)?;
            eprintln!(
                "cd-chain n={n} m={m}: {} variables, {} constraints",
                inst.num_vars(),
                inst.constraints().len()
            );
            emit(&out, &render_instance(&inst, format))?;
            Ok(EXIT_VERIFIED)
        }
        BuildCommand::CdGadget {
            n,
            k,
            p,
            q,
            r,
            s,
            convention,
            format,
            out,
        } => {
            let inst = build_cd_gadget(n, k, GadgetBoundary::new(p, q, r, s), convention.into())?;
            eprintln!(
                "cd-gadget n={n} k={k} P={} Q={} R={} S={}: {} variables, {} constraints",
                u8::from(p),
                u8::from(q),
                u8::from(r),
                u8::from(s),
                inst.num_vars(),
                inst.constraints().len()
            );
            emit(&out, &render_instance(&inst, format))?;
            Ok(EXIT_VERIFIED)
        }
        BuildCommand::MsScopes { n, format, out } => {
            let inst = build_ms_scopes(n)?;
            eprintln!(
                "ms-scopes n={n}: {} variables, {} constraints",
                inst.num_vars(),
                inst.constraints().len()
            );
            emit(&out, &render_instance(&inst, format))?;
            Ok(EXIT_VERIFIED)
        }
    }
}

/// Resolves `--start`: a literal bit string, or the designated chain start.
fn resolve_start(
    inst: &VcspInstance,
    start: &str,
    variant: Variant,
) -> anyhow::Result<Assignment> {
    if start != "designated" {
        return Ok(start.parse::<Assignment>().map_err(Error::from)?);
    }
    let d = inst.num_vars();
    if d % 8 != 0 || d == 0 {
        anyhow::bail!("`--start designated` needs an 8m-variable chain instance");
    }
    let m = (d / 8) as u32;
    let params = CdParams::new(m, m, variant, BridgeConvention::ASide)?;
    Ok(cd_start(&params)?)
}

fn ascend(args: AscendArgs) -> anyhow::Result<u8> {
    let inst = VcspInstance::from_json(&std::fs::read_to_string(&args.instance)?)?;
    let variant: Variant = args.variant.into();
    let start = resolve_start(&inst, &args.start, variant)?;
    let rule = match args.rule {
        RuleArg::First => PivotRule::FirstImprovement,
        RuleArg::Steepest => PivotRule::Steepest,
        RuleArg::Random => PivotRule::RandomImprovement { seed: args.seed },
    };
    let max_steps = args.max_steps.unwrap_or_else(|| {
        if inst.num_vars() % 8 == 0 && inst.label(0).is_some() {
            default_chain_max_steps((inst.num_vars() / 8) as u32)
        } else {
            DEFAULT_MAX_STEPS
        }
    });
    let trace = run_ascent(&inst, &start, rule, max_steps, args.audit)?;
    emit(&args.out, trace_to_jsonl(&inst, &trace, rule).trim_end())?;
    eprintln!(
        "ascend: {} steps, end {}, audit {:?}",
        trace.len(),
        trace.end,
        trace.audited_unique
    );
    if trace.truncated {
        eprintln!("step budget of {max_steps} exceeded");
        return Ok(EXIT_BUDGET);
    }
    if let Some(expect) = args.expect_steps {
        if trace.len() != expect {
            eprintln!("expected {expect} steps, got {}", trace.len());
            return Ok(EXIT_FAILED);
        }
    }
    if args.audit && trace.audited_unique == Audited::No {
        eprintln!("audit found a non-unique step: {:?}", trace.first_violation);
        return Ok(EXIT_FAILED);
    }
    Ok(EXIT_VERIFIED)
}

/// The structure a bundled certificate id is validated against.
fn certificate_hypergraph(id: &str) -> anyhow::Result<Hypergraph> {
    if id.starts_with("prop3") {
        let gadget =
            build_cd_gadget(1, 1, GadgetBoundary::default(), BridgeConvention::ASide)?;
        Ok(gadget.hypergraph())
    } else if id == "prop2-k5" || id == "prop2-k5-extended" {
        Ok(build_ms_scopes(2)?.hypergraph())
    } else if id.starts_with("prop2") {
        let window: BTreeSet<String> = ms_two_gadget_window(1).into_iter().collect();
        Ok(build_ms_scopes(2)?.hypergraph().induced(&window)?)
    } else if id.starts_with("prop1") {
        Ok(Hypergraph::vertices_only(mt_vertex_universe()))
    } else {
        anyhow::bail!("unknown certificate id {id:?}")
    }
}

fn verify(what: VerifyCommand) -> anyhow::Result<u8> {
    match what {
        VerifyCommand::Peaks {
            instance,
            n,
            k,
            convention,
            out,
        } => match (instance, n, k) {
            (Some(path), _, _) => {
                let inst = VcspInstance::from_json(&std::fs::read_to_string(path)?)?;
                let peaks: Vec<String> = enumerate_peaks(&inst)?
                    .iter()
                    .map(|a| a.to_string())
                    .collect();
                emit(&out, &serde_json::to_string_pretty(&peaks)?)?;
                Ok(EXIT_VERIFIED)
            }
            (None, Some(n), Some(k)) => {
                let report = verify_peak_table(n, k, convention.into())?;
                emit(&out, &serde_json::to_string_pretty(&report)?)?;
                Ok(if report.pass { EXIT_VERIFIED } else { EXIT_FAILED })
            }
            _ => anyhow::bail!("pass either --instance or both --n and --k"),
        },
        VerifyCommand::Explore {
            n,
            m,
            variant,
            convention,
            start,
            budget,
            out,
        } => {
            let params = CdParams::new(n, m, variant.into(), convention.into())?;
            let inst = build_cd_chain(&params)?;
            let start = resolve_start(&inst, &start, variant.into())?;
            let report = explore_ascent_graph(&inst, &start, budget)?;
            emit(&out, &serde_json::to_string_pretty(&report)?)?;
            Ok(if report.unique_maximal_path {
                EXIT_VERIFIED
            } else {
                EXIT_FAILED
            })
        }
        VerifyCommand::Decomposition { cert, out } => {
            let (decomps, _) = bundled_certificates();
            let named = decomps
                .into_iter()
                .find(|d| d.id == cert)
                .ok_or_else(|| anyhow::anyhow!("unknown decomposition id {cert:?}"))?;
            let hg = certificate_hypergraph(&cert)?;
            let report = validate_decomposition(
                &hg,
                &named.decomposition,
                &named.first_interface,
                &named.last_interface,
            )?;
            emit(&out, &serde_json::to_string_pretty(&report)?)?;
            Ok(if report.valid { EXIT_VERIFIED } else { EXIT_FAILED })
        }
        VerifyCommand::Minor { cert, out } => {
            let (_, minors) = bundled_certificates();
            let named = minors
                .into_iter()
                .find(|m| m.id == cert)
                .ok_or_else(|| anyhow::anyhow!("unknown minor id {cert:?}"))?;
            let report = if named.edges_available {
                let g = certificate_hypergraph(&cert)?.primal();
                validate_minor(&g, &named.certificate)?
            } else {
                eprintln!("edge set unavailable for {cert}; structural checks only");
                validate_minor_structure_only(&named.certificate)
            };
            emit(&out, &serde_json::to_string_pretty(&report)?)?;
            Ok(if report.valid { EXIT_VERIFIED } else { EXIT_FAILED })
        }
        VerifyCommand::Pathwidth {
            builtin,
            instance,
            expect,
        } => {
            let g = match (builtin.as_deref(), instance) {
                (Some("cd-gadget"), None) => {
                    build_cd_gadget(1, 1, GadgetBoundary::default(), BridgeConvention::ASide)?
                        .primal_graph()
                }
                (Some("ms-two-gadget"), None) => build_ms_scopes(2)?.primal_graph(),
                (None, Some(path)) => {
                    VcspInstance::from_json(&std::fs::read_to_string(path)?)?.primal_graph()
                }
                _ => anyhow::bail!("pass exactly one of --builtin or --instance"),
            };
            let width = exact_pathwidth(&g)?;
            println!("{width}");
            Ok(match expect {
                Some(e) if e != width => EXIT_FAILED,
                _ => EXIT_VERIFIED,
            })
        }
        VerifyCommand::DeltaTable {
            n,
            k,
            convention,
            out,
        } => {
            let report = delta_table_report(n, k, convention.into())?;
            emit(&out, &serde_json::to_string_pretty(&report)?)?;
            Ok(if report.pass { EXIT_VERIFIED } else { EXIT_FAILED })
        }
    }
}
