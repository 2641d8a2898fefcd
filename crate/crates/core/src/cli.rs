//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 when nothing failed, 2 when a verification check failed,
//! 1 on usage or configuration errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{default_catalog, load_catalog_dir, GroupSpec};
use crate::context::GroupContext;
use crate::embedding::Property;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::harness::{emit_report, run_suite, HarnessConfig, ReportFormat, Suite};
use crate::norms::{omega_norm, ClassKind, NormOptions, OmegaClass};
use crate::series::{is_nilpotent, is_solvable};
use crate::subgroup::is_subnormal_in;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "omega-norm",
    version,
    about = "Embedding properties and Ω-norms of finite permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Subgroup table with the seven embedding flags per subgroup.
    Analyze {
        /// `builtin:NAME[:params]` or a group file.
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_lattice: Option<usize>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Order and generators of an Ω-norm.
    Norms {
        #[arg(long)]
        group: String,
        /// sn, sc, pronormal, h, wn, subnorm, ne, sylow or all-subgroups.
        #[arg(long)]
        omega: String,
        /// Restrict the class to p-subgroups.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        include_trivial: bool,
        #[arg(long)]
        max_lattice: Option<usize>,
    },
    /// Run a check suite over the catalog.
    Verify {
        #[arg(long)]
        suite: String,
        /// Directory of `*.group.json` files added to the builtin catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        builtin_only: bool,
        /// Closure cap; larger groups are reported as skipped.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        max_lattice: Option<usize>,
    },
    /// Builtin catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// Builtin specs with orders and degrees.
    List,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Analyze {
            group,
            max_lattice,
            format,
        } => {
            let format: ReportFormat = format.parse()?;
            let cap = HarnessConfig::resolve_lattice_cap(max_lattice)?;
            let group = GroupSpec::parse(&group).build(DEFAULT_MAX_ORDER)?;
            let table = analyze(&group, cap)?;
            out.write_all(render_analysis(&table, format)?.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Norms {
            group,
            omega,
            p,
            include_trivial,
            max_lattice,
        } => {
            let kind: ClassKind = omega.parse()?;
            let cap = HarnessConfig::resolve_lattice_cap(max_lattice)?;
            let group = GroupSpec::parse(&group).build(DEFAULT_MAX_ORDER)?;
            let ctx = GroupContext::with_lattice_cap(&group, cap);
            let class = match p {
                Some(p) => OmegaClass::new(kind).restricted_to(p),
                None => OmegaClass::new(kind),
            };
            let opts = NormOptions {
                include_trivial,
                ..NormOptions::default()
            };
            let n = omega_norm(&ctx, class, opts)?;
            writeln!(out, "group: {}", group.name())?;
            match p {
                Some(p) => writeln!(out, "omega: {kind} (p = {p})")?,
                None => writeln!(out, "omega: {kind}")?,
            }
            writeln!(out, "order: {}", n.order())?;
            writeln!(out, "generators:")?;
            for g in n.generator_perms() {
                writeln!(out, "  {g}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            catalog,
            builtin_only,
            max_order,
            out: out_path,
            format,
            max_lattice,
        } => {
            let suite = Suite::parse(&suite)?;
            let format: ReportFormat = format.parse()?;
            let config = HarnessConfig {
                lattice_cap: HarnessConfig::resolve_lattice_cap(max_lattice)?,
                max_order: max_order.unwrap_or(DEFAULT_MAX_ORDER),
                ..HarnessConfig::default()
            };
            let mut specs = default_catalog();
            if let (Some(dir), false) = (catalog, builtin_only) {
                specs.extend(load_catalog_dir(dir)?);
            }
            let report = run_suite(suite, &specs, &config);
            let text = emit_report(&report, format)?;
            match out_path {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(if report.failed() {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            })
        }
        Command::Catalog(CatalogCommand::List) => {
            writeln!(out, "{:<8} {:>6} {:>6}  builtin", "name", "order", "degree")?;
            for spec in default_catalog() {
                let g = spec.build(DEFAULT_MAX_ORDER)?;
                writeln!(
                    out,
                    "{:<8} {:>6} {:>6}  {}",
                    g.name(),
                    g.order(),
                    g.degree(),
                    spec.source
                )?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SubgroupRow {
    pub index: usize,
    pub order: usize,
    pub generators: Vec<Vec<u32>>,
    pub normal: bool,
    pub subnormal: bool,
    pub self_normalizing: bool,
    pub self_centralizing: bool,
    pub pronormal: bool,
    pub h_subgroup: bool,
    pub weakly_normal: bool,
    pub ne_subgroup: bool,
    pub subnormalizer_condition: bool,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub group: String,
    pub order: usize,
    pub degree: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub subgroups: Vec<SubgroupRow>,
}

/// One row per subgroup, in lattice order.
pub fn analyze(group: &FiniteGroup, lattice_cap: usize) -> Result<Analysis> {
    let ctx = GroupContext::with_lattice_cap(group, lattice_cap);
    let lattice = ctx.lattice()?;
    let flags = Property::ALL
        .iter()
        .map(|&p| ctx.membership(p))
        .collect::<Result<Vec<_>>>()?;
    let subgroups = lattice
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let f = |p: Property| flags[p.index()][i];
            SubgroupRow {
                index: i,
                order: h.order(),
                generators: h.generator_perms().into_iter().map(Vec::from).collect(),
                normal: h.is_normal(),
                subnormal: is_subnormal_in(ctx.whole(), h),
                self_normalizing: f(Property::SelfNormalizing),
                self_centralizing: f(Property::SelfCentralizing),
                pronormal: f(Property::Pronormal),
                h_subgroup: f(Property::HSubgroup),
                weakly_normal: f(Property::WeaklyNormal),
                ne_subgroup: f(Property::NeSubgroup),
                subnormalizer_condition: f(Property::SubnormalizerCondition),
            }
        })
        .collect();
    Ok(Analysis {
        group: group.name().to_string(),
        order: group.order(),
        degree: group.degree(),
        abelian: group.is_abelian(),
        nilpotent: is_nilpotent(group),
        solvable: is_solvable(group),
        subgroups,
    })
}

pub fn render_analysis(a: &Analysis, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(a).map_err(Error::from)?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Markdown => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# {} (order {}, degree {})\n",
                a.group, a.order, a.degree
            );
            let _ = writeln!(
                s,
                "| # | order | normal | subnormal | sn | sc | pronormal | h | wn | ne | subnorm |"
            );
            let _ = writeln!(s, "|---|---|---|---|---|---|---|---|---|---|---|");
            let mark = |b: bool| if b { "x" } else { "" };
            for r in &a.subgroups {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.index,
                    r.order,
                    mark(r.normal),
                    mark(r.subnormal),
                    mark(r.self_normalizing),
                    mark(r.self_centralizing),
                    mark(r.pronormal),
                    mark(r.h_subgroup),
                    mark(r.weakly_normal),
                    mark(r.ne_subgroup),
                    mark(r.subnormalizer_condition)
                );
            }
            Ok(s)
        }
    }
}
