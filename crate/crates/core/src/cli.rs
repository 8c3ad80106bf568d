//! The `bsk` command-line front end.
//!
//! Every subcommand prints a short human-readable report; `--out` also
//! writes the structured record as JSON. Exit status is 0 on success, 1
//! when a verification fails, and 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::io::{format_point_set, read_point_set};
use crate::geom::metric::{diameter, Metric};
use crate::geom::polytope::VPolytope;
use crate::larman::{self, family::read_family};
use crate::net;
use crate::partition::{self, witness, FiniteOptions, FmOutcome, SearchParams};
use crate::scalar::{Scalar, TOL_GEOM};
use crate::width;

#[derive(Debug, Parser)]
#[command(name = "bsk", version, about = "Partition, net and set-family computations for Borsuk's problem")]
pub struct Cli {
    /// Distance: `euclid` or `lp:<p>` (`lp:inf` for the maximum norm).
    #[arg(long, global = true, default_value = "euclid")]
    pub metric: Metric,
    /// Read decimal literals as exact rationals.
    #[arg(long, global = true)]
    pub exact: bool,
    #[arg(long, global = true, default_value_t = TOL_GEOM)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search budget (coloring nodes or pattern evaluations, per command).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Write the structured result as JSON.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Draw a planar partition.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Diameter and a witness pair.
    Diam { file: PathBuf },
    /// Fewest parts of smaller diameter.
    B { file: PathBuf },
    /// Optimal `m`-part partition of a finite set.
    Fm {
        file: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// 0/1 embedding of a set family.
    Embed { family: PathBuf },
    /// `ℓ(𝒜, n, k)` and its agreement with `b` of the embedding.
    Ell {
        family: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Frankl–Wilson checks: a family file for the `2p-1` case, or the exhaustive `4p` search.
    Fw {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Upper and lower bounds on `b` in dimension `n`.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        to: Option<usize>,
    },
    /// First dimension where `1.07^√n` exceeds `n + 1`.
    Crossover,
    /// Width-1 hexagon partition, or embedding of a diameter-1 polygon file.
    Hexagon { file: Option<PathBuf> },
    /// Discretized Reuleaux polygon.
    Reuleaux {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 1.0)]
        width: f64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Four-piece search on the truncated octahedron.
    Octa {
        /// Three cut depths, comma separated.
        #[arg(long, value_delimiter = ',')]
        cuts: Option<Vec<f64>>,
        #[arg(long, default_value_t = width::octahedron::OCTA_STRETCH)]
        stretch: f64,
    },
    /// Snap a body to the lattice of a net.
    Snap {
        file: PathBuf,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        kappa: Option<String>,
    },
    /// Enumerate planar lattice polygons of a net (uses `--config`).
    Enumerate {
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Full verification run (uses `--config`).
    Pipeline,
    /// Lattice-point count and enumeration bound for a net.
    Plan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        kappa: Option<String>,
    },
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

enum Verdict {
    Ok,
    Failed,
}

impl Ctx<'_> {
    fn say(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref()).map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))
    }

    fn record<T: Serialize>(&self, v: &T) -> Result<()> {
        if let Some(p) = &self.cli.out {
            let text = serde_json::to_string_pretty(v).expect("serializable record");
            write_file(p, &(text + "\n"))?;
        }
        Ok(())
    }

    fn svg(&self, r: &partition::PartitionResult, outline: Option<&[Vec<f64>]>) -> Result<()> {
        if let Some(p) = &self.cli.svg {
            write_file(p, &witness::render_svg(r, outline)?)?;
        }
        Ok(())
    }

    fn points(&self, file: &Path) -> Result<crate::geom::point::PointSet> {
        read_point_set(file, self.cli.exact)
    }

    fn config(&self) -> Result<net::PipelineConfig> {
        let p = self
            .cli
            .config
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("this command needs --config <path>".into()))?;
        let text = std::fs::read_to_string(p).map_err(|e| Error::Parse {
            file: p.display().to_string(),
            line: 0,
            msg: e.to_string(),
        })?;
        net::PipelineConfig::parse(&text, &p.display().to_string())
    }
}

fn write_file(p: &Path, text: &str) -> Result<()> {
    std::fs::write(p, text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display())))
}

fn spec_from(n: usize, alpha: &str, kappa: Option<&str>) -> Result<net::NetSpec> {
    let a = Scalar::parse(alpha, true).map_err(Error::InvalidArgument)?;
    match kappa {
        Some(k) => net::NetSpec::with_kappa(n, a, Scalar::parse(k, true).map_err(Error::InvalidArgument)?),
        None => net::make_spec(n, a),
    }
}

fn dispatch(cx: &mut Ctx<'_>) -> Result<Verdict> {
    let cli = cx.cli;
    let finite = FiniteOptions {
        metric: cli.metric,
        tol: cli.tol,
        budget: cli.budget.unwrap_or(FiniteOptions::default().budget),
        ..FiniteOptions::default()
    };
    let search = SearchParams {
        budget: cli.budget.unwrap_or(SearchParams::default().budget),
        seed: cli.seed,
        ..SearchParams::default()
    };
    match &cli.command {
        Command::Diam { file } => {
            let x = cx.points(file)?;
            let d = diameter(&x, cli.metric);
            cx.say(format!("d = {} (metric {}, gauge {})", d.value, cli.metric, d.gauge))?;
            cx.say(format!("witness: points {} and {}", d.witness.0, d.witness.1))?;
            cx.record(&d)?;
        }
        Command::B { file } => {
            let x = cx.points(file)?;
            let b = partition::b_finite(&x, &finite)?;
            match b.value() {
                Some(v) => cx.say(format!("b = {v} ({} diametral pairs)", b.diametral_pairs))?,
                None => cx.say(format!("b in [{}, {}] (budget exhausted)", b.lower, b.upper))?,
            }
            cx.say(format!("coloring: {:?}", b.coloring))?;
            cx.record(&b)?;
        }
        Command::Fm { file, m } => {
            let x = cx.points(file)?;
            let r = partition::f_m_finite(&x, *m, &finite)?;
            match &r {
                FmOutcome::Exact(p) => cx.say(format!("f_{m} = {} (d = {})", p.theta, p.d))?,
                FmOutcome::Bracket { theta_lo, theta_hi, .. } => cx.say(format!("f_{m} in [{theta_lo}, {theta_hi}] (budget exhausted)"))?,
            }
            cx.say(format!("assignment: {:?}", r.best().assignment))?;
            cx.record(&r)?;
        }
        Command::Embed { family } => {
            let f = read_family(family)?;
            let x = larman::embed(&f)?;
            let text = format_point_set(&x, Some(&format!("0/1 embedding, n={} h={}", f.ground_n(), f.h())));
            match &cli.out {
                Some(p) => write_file(p, &text)?,
                None => cx.say(text.trim_end())?,
            }
        }
        Command::Ell { family, k } => {
            let f = read_family(family)?;
            let budget = cli.budget.unwrap_or(1_000_000);
            let e = larman::verify_larman_borsuk_equivalence(&f, *k, budget)?;
            cx.say(format!("ell in [{}, {}], b in [{}, {}]", e.ell.0, e.ell.1, e.b.0, e.b.1))?;
            cx.say(match e.holds {
                Some(true) => "b(T(A)) = ell(A, n, k)".to_string(),
                Some(false) => "b(T(A)) != ell(A, n, k)".to_string(),
                None if !e.premise_met => "premise not met: no pair overlaps in exactly k".to_string(),
                None => "undecided within budget".to_string(),
            })?;
            cx.record(&e)?;
            if e.holds == Some(false) {
                return Ok(Verdict::Failed);
            }
        }
        Command::Fw { p, family } => match family {
            Some(path) => {
                let f = read_family(path)?;
                let r = larman::fw_lemma2_check(&f, *p)?;
                cx.say(format!("|F| = {}, bound C(n, p-1) = {}", r.size, r.bound))?;
                if let Some((a, b)) = &r.violation {
                    cx.say(format!("overlap rule violated by {a:?} and {b:?}; bound not asserted"))?;
                }
                cx.record(&r)?;
                if r.within_bound == Some(false) {
                    return Ok(Verdict::Failed);
                }
            }
            None => {
                let r = larman::fw_lemma3_search(*p, cli.budget.unwrap_or(50_000_000))?;
                match r.m_found {
                    Some(m) => cx.say(format!(
                        "largest family found: {m}{}; bound ½·C(4p, p) = {}",
                        if r.exact { " (exact)" } else { " (lower bound)" },
                        r.bound
                    ))?,
                    None => cx.say(format!("bound-only mode: ½·C(4p, p) = {}", r.bound))?,
                }
                cx.record(&r)?;
                if r.within_bound == Some(false) {
                    return Ok(Verdict::Failed);
                }
            }
        },
        Command::Bounds { n, to } => {
            let rows: Vec<_> = (*n..=to.unwrap_or(*n)).map(larman::bounds_table).collect();
            cx.say(larman::bounds::format_bounds(&rows).trim_end())?;
            cx.record(&rows)?;
        }
        Command::Crossover => {
            let c = larman::kk_crossover();
            cx.say(format!("smallest n with 1.07^√n > n+1: {}", c.n))?;
            cx.say(format!(
                "margins: {:.3e} at n-1, {:.3e} at n; single sign change on grid: {}",
                c.margin_before, c.margin_at, c.grid_monotone
            ))?;
            cx.record(&c)?;
        }
        Command::Hexagon { file } => match file {
            None => {
                let one = num_rational::BigRational::from_integer(1.into());
                let exact = width::hexagon_max_sq_diameter_exact(&one);
                let pose = width::HexagonPose::new(std::f64::consts::PI / 6.0, [0.0, 0.0], 1.0 / 3f64.sqrt());
                let r = width::hexagon_three_partition(&pose);
                cx.say(format!(
                    "width-1 hexagon: 3 pieces, max squared diameter {exact} (exact), diameter {}",
                    r.max_part_diameter()
                ))?;
                cx.svg(&r, Some(&pose.hexagon.rows()))?;
                cx.record(&r)?;
            }
            Some(path) => {
                let p = VPolytope::from_points(&cx.points(path)?);
                let (pose, r) = width::three_partition_unit_diameter(&p, cli.tol.max(1e-9))?;
                cx.say(format!(
                    "hexagon angle {:.6} rad, center ({:.6}, {:.6}); piece diameters {:?}",
                    pose.angle, pose.center[0], pose.center[1], r.part_diameters
                ))?;
                cx.svg(&r, Some(&pose.hexagon.rows()))?;
                cx.record(&r)?;
                if r.max_part_diameter() > 3f64.sqrt() / 2.0 + 1e-6 {
                    return Ok(Verdict::Failed);
                }
            }
        },
        Command::Reuleaux { k, width: w, samples } => {
            let b = width::reuleaux_polygon(*k, *w, *samples)?;
            let (lo, hi) = width::width_constancy(&b.polygon, 720)?;
            let text = format_point_set(
                b.polygon.vertices(),
                Some(&format!("Reuleaux polygon k={k} width={w} samples/arc={samples} sagitta={:.3e}", b.sagitta)),
            );
            match &cli.out {
                Some(p) => write_file(p, &text)?,
                None => cx.say(text.trim_end())?,
            }
            eprintln!("widths over 720 directions: [{lo}, {hi}], sagitta bound {:.3e}", b.sagitta);
        }
        Command::Octa { cuts, stretch } => {
            let depths = match cuts.as_deref() {
                None => width::octahedron::default_cut_depths(),
                Some([a, b, c]) => [*a, *b, *c],
                Some(v) => return Err(Error::InvalidArgument(format!("--cuts needs 3 values, got {}", v.len()))),
            };
            let p = width::truncated_octahedron(depths)?;
            let params = SearchParams {
                budget: cli.budget.unwrap_or(width::octahedron::OCTA_DEFAULT_BUDGET),
                ..search
            };
            let r = width::octahedron_four_partition(&p, *stretch, &params)?;
            cx.say(format!(
                "truncated octahedron ({} vertices, diameter {:.6}): best 4-piece max diameter {:.6} after {} evaluations; below 1: {}; <= {}: {}",
                p.len(),
                p.diameter(Metric::Euclidean).value,
                r.max_diameter,
                r.evaluations,
                r.primary_met,
                r.stretch_target,
                r.stretch_met
            ))?;
            cx.record(&r)?;
            if !r.primary_met {
                return Ok(Verdict::Failed);
            }
        }
        Command::Snap { file, alpha, kappa } => {
            let k = VPolytope::from_points(&cx.points(file)?);
            let spec = spec_from(k.dim(), alpha, kappa.as_deref())?;
            let r = net::snap(&k, &spec)?;
            cx.say(format!(
                "{} lattice vertices; hausdorff {:.6e} <= {:.6e}: {}",
                r.polytope.vertices.len(),
                r.hausdorff,
                r.bound,
                r.within_bound
            ))?;
            cx.record(&r)?;
            if !r.within_bound {
                return Ok(Verdict::Failed);
            }
        }
        Command::Enumerate { no_symmetry } => {
            let cfg = cx.config()?;
            let spec = cfg.spec()?;
            let en = net::enumerate_2d(&spec, !no_symmetry, cfg.guard_cap)?;
            cx.say(format!(
                "{} polygons ({} before symmetry reduction); {} lattice points in the outer disk, {} in the annulus",
                en.polytopes.len(),
                en.full_count(),
                en.disk_points,
                en.annulus_points
            ))?;
            cx.record(&en)?;
        }
        Command::Pipeline => {
            let cfg = cx.config()?;
            let report = net::run_config(&cfg)?;
            cx.say(report.summary().trim_end())?;
            cx.record(&report)?;
            if !matches!(report.conclusion, net::Conclusion::Established { .. }) {
                return Ok(Verdict::Failed);
            }
        }
        Command::Plan { n, alpha, kappa } => {
            let spec = spec_from(*n, alpha, kappa.as_deref())?;
            let r = net::plan_report(&spec);
            cx.say(format!(
                "n={} kappa={} outer={:.6}: {} lattice points in the outer ball{}; at most 2^{} lattice polytopes",
                r.n,
                spec.kappa,
                r.outer,
                r.lattice_points,
                if r.exact { "" } else { " (volume estimate)" },
                r.subset_bound_log2
            ))?;
            if let Some(c) = &r.polygon_count {
                cx.say(format!("exactly {c} lattice polygons in the shell"))?;
            }
            if r.enumeration_refused {
                cx.say(format!("enumeration refused: beyond the guard cap of {} annulus points", r.guard_cap))?;
            }
            cx.record(&r)?;
        }
    }
    Ok(Verdict::Ok)
}

/// Parses `args` (program name first) and runs the command; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let mut cx = Ctx { cli: &cli, out };
    match dispatch(&mut cx) {
        Ok(Verdict::Ok) => 0,
        Ok(Verdict::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
