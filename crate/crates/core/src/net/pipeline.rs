use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::io::format_point_set;
use crate::geom::polytope::VPolytope;
use crate::net::enumerate::{enumerate_2d, DEFAULT_GUARD_CAP};
use crate::net::lattice::LatticePolytope;
use crate::net::spec::{kappa_for, make_spec, NetSpec};
use crate::partition::verify::{verify_f_bound, SearchParams, VerifyOutcome};
use crate::scalar::{Scalar, TOL_GEOM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    /// The search budget ran out. Not a refutation.
    Failed,
    /// No search was run (zero budget).
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub id: String,
    pub status: Status,
    pub theta: Option<f64>,
    pub pattern: Option<String>,
    pub evaluations: u64,
    /// Orbit size under the lattice symmetries (1 without reduction).
    pub orbit: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Conclusion {
    /// Every polytope verified and the net is fine enough: `f_m(K) <= (1+α)/2` on the whole class.
    Established {
        value: f64,
        chain: Vec<String>,
    },
    /// Every polytope verified, but `√n·κ` exceeds `¼(1-α)`, so the
    /// continuity step does not transfer the bound to all bodies.
    CoarseNet {
        value: f64,
        beta: f64,
        allowed: f64,
    },
    NotEstablished {
        reason: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub spec: NetSpec,
    pub m: usize,
    pub entries: Vec<Entry>,
    pub conclusion: Conclusion,
    pub vacuous: bool,
    pub dumped: Vec<PathBuf>,
}

impl VerificationReport {
    pub fn count(&self, s: Status) -> usize {
        self.entries.iter().filter(|e| e.status == s).count()
    }

    pub fn all_verified(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Verified)
    }

    pub fn summary(&self) -> String {
        let worst = self.entries.iter().filter_map(|e| e.theta).fold(0.0f64, f64::max);
        let concl = match &self.conclusion {
            Conclusion::Established { value, .. } => format!("established: f_{}(K) <= {value}", self.m),
            Conclusion::CoarseNet { value, beta, allowed } => {
                format!("all verified, but net radius {beta:.6} > {allowed:.6}; bound {value} holds only on the enumerated family")
            }
            Conclusion::NotEstablished { reason } => format!("not established: {reason}"),
        };
        format!(
            "n={} alpha={} kappa={} m={}: {} polytopes, {} verified, {} failed, {} unknown, worst theta {:.6}{}\nconclusion: {}\n",
            self.spec.n,
            self.spec.alpha,
            self.spec.kappa,
            self.m,
            self.entries.len(),
            self.count(Status::Verified),
            self.count(Status::Failed),
            self.count(Status::Unknown),
            worst,
            if self.vacuous { " (vacuous: nothing enumerated)" } else { "" },
            concl
        )
    }
}

/// `θ_P + 2ε`, the bound on `f_m(K)` for a body within `ε` of a polytope
/// with `f_m(P) <= θ_P`. Requires `θ_P <= α` and `ε <= ¼(1-α)`, and then
/// the result is at most `½(1+α) < 1`.
pub fn conclusion_arithmetic(alpha: f64, theta_p: f64, epsilon: f64) -> Result<f64> {
    if !(alpha < 1.0) {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} must be below 1")));
    }
    if theta_p > alpha + TOL_GEOM {
        return Err(Error::Hypothesis(format!("theta_P = {theta_p} exceeds alpha = {alpha}")));
    }
    if epsilon < 0.0 || epsilon > 0.25 * (1.0 - alpha) + TOL_GEOM {
        return Err(Error::Hypothesis(format!(
            "epsilon = {epsilon} exceeds (1 - alpha)/4 = {}",
            0.25 * (1.0 - alpha)
        )));
    }
    let v = theta_p + 2.0 * epsilon;
    let cap = 0.5 * (1.0 + alpha);
    assert!(v <= cap + 2.0 * TOL_GEOM && cap < 1.0, "bound chain broken: {v} > {cap}");
    Ok(v)
}

fn conclude(spec: &NetSpec, entries: &[Entry]) -> Conclusion {
    let alpha = spec.alpha.to_f64();
    if let Some(e) = entries.iter().find(|e| e.status != Status::Verified) {
        return Conclusion::NotEstablished {
            reason: format!("polytope {} is {:?}", e.id, e.status),
        };
    }
    let beta = spec.beta();
    let allowed = spec.epsilon_allowed();
    let value = 0.5 * (1.0 + alpha);
    match conclusion_arithmetic(alpha, alpha, beta) {
        Ok(v) => Conclusion::Established {
            value,
            chain: vec![
                format!("f_m(P) <= {alpha} for every enumerated P"),
                format!("δ^H(K, P) <= √n·κ = {beta} <= (1 - α)/4 = {allowed}"),
                format!("f_m(K) <= f_m(P) + 2·δ^H <= {alpha} + {} = {v} <= (1 + α)/2 = {value} < 1", 2.0 * beta),
            ],
        },
        Err(_) => Conclusion::CoarseNet { value, beta, allowed },
    }
}

/// Verifies a list of lattice polytopes in parallel; entries come back in input order.
pub fn verify_polytopes(
    spec: &NetSpec,
    m: usize,
    polys: &[LatticePolytope],
    orbits: &[usize],
    params: &SearchParams,
    dump_dir: Option<&Path>,
) -> Result<VerificationReport> {
    let alpha = spec.alpha.to_f64();
    let results: Vec<Result<(Entry, Option<VPolytope>)>> = polys
        .par_iter()
        .enumerate()
        .map(|(i, lp)| {
            let p = lp.to_vpolytope(&spec.kappa)?;
            let out = verify_f_bound(&p, m, alpha, params)?;
            let status = match &out {
                VerifyOutcome::Verified { .. } => Status::Verified,
                _ if out.evaluations() == 0 => Status::Unknown,
                _ => Status::Failed,
            };
            let entry = Entry {
                id: lp.id(),
                status,
                theta: out.best_theta(),
                pattern: out.best().map(|b| b.pattern.clone()),
                evaluations: out.evaluations(),
                orbit: orbits.get(i).copied().unwrap_or(1),
            };
            Ok((entry, (status != Status::Verified).then_some(p)))
        })
        .collect();
    let mut entries = Vec::with_capacity(results.len());
    let mut failed = Vec::new();
    for r in results {
        let (e, p) = r?;
        if let Some(p) = p {
            failed.push((e.id.clone(), p));
        }
        entries.push(e);
    }
    let mut dumped = Vec::new();
    if let Some(dir) = dump_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::InvalidArgument(format!("{}: {e}", dir.display())))?;
        for (k, (id, p)) in failed.iter().enumerate() {
            let path = dir.join(format!("failed_{k:05}.txt"));
            std::fs::write(&path, format_point_set(p.vertices(), Some(&format!("lattice polytope {id}"))))
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            dumped.push(path);
        }
    }
    let conclusion = conclude(spec, &entries);
    Ok(VerificationReport {
        spec: spec.clone(),
        m,
        vacuous: entries.is_empty(),
        entries,
        conclusion,
        dumped,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineConfig {
    pub n: usize,
    /// Decimal or `p/q`; read exactly.
    pub alpha: String,
    pub kappa: Option<String>,
    pub inner: Option<f64>,
    pub outer: Option<f64>,
    #[serde(default = "default_m")]
    pub m: usize,
    #[serde(default = "default_budget")]
    pub budget: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_true")]
    pub symmetry: bool,
    #[serde(default = "default_cap")]
    pub guard_cap: usize,
    pub dump_dir: Option<PathBuf>,
}

fn default_m() -> usize {
    3
}
fn default_budget() -> u64 {
    SearchParams::default().budget
}
fn default_true() -> bool {
    true
}
fn default_cap() -> usize {
    DEFAULT_GUARD_CAP
}

impl PipelineConfig {
    pub fn parse(text: &str, source: &str) -> Result<PipelineConfig> {
        toml::from_str(text).map_err(|e| Error::Parse {
            file: source.to_string(),
            line: e.span().map_or(0, |s| text[..s.start].matches('\n').count() + 1),
            msg: e.message().to_string(),
        })
    }

    pub fn spec(&self) -> Result<NetSpec> {
        let num = |s: &str| Scalar::parse(s, true).map_err(Error::InvalidArgument);
        let alpha = num(&self.alpha)?;
        let kappa = match &self.kappa {
            Some(k) => num(k)?,
            None => kappa_for(self.n, &alpha),
        };
        match (self.inner, self.outer) {
            (Some(i), Some(o)) => NetSpec::with_shell(self.n, alpha, kappa, i, o),
            (None, None) if self.kappa.is_none() => make_spec(self.n, alpha),
            (None, None) => NetSpec::with_kappa(self.n, alpha, kappa),
            _ => Err(Error::InvalidArgument("give both inner and outer, or neither".into())),
        }
    }

    pub fn params(&self) -> SearchParams {
        SearchParams {
            budget: self.budget,
            seed: self.seed,
            ..SearchParams::default()
        }
    }
}

/// Enumerates the planar lattice net of `spec` and verifies every polygon.
pub fn run_pipeline(spec: &NetSpec, m: usize, params: &SearchParams, symmetry: bool, guard_cap: usize, dump_dir: Option<&Path>) -> Result<VerificationReport> {
    let en = enumerate_2d(spec, symmetry, guard_cap)?;
    verify_polytopes(spec, m, &en.polytopes, &en.orbit_sizes, params, dump_dir)
}

pub fn run_config(cfg: &PipelineConfig) -> Result<VerificationReport> {
    let spec = cfg.spec()?;
    run_pipeline(&spec, cfg.m, &cfg.params(), cfg.symmetry, cfg.guard_cap, cfg.dump_dir.as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        let a = 0.995;
        assert!((conclusion_arithmetic(a, a, 0.25 * (1.0 - a)).unwrap() - 0.9975).abs() < 1e-12);
        assert!((conclusion_arithmetic(0.9, 0.9, 0.025).unwrap() - 0.95).abs() < 1e-12);
        assert!(conclusion_arithmetic(0.9, 0.95, 0.0).is_err());
        assert!(conclusion_arithmetic(0.9, 0.5, 0.03).is_err());
    }

    #[test]
    fn config_parse() {
        let c = PipelineConfig::parse("n = 2\nalpha = \"0.95\"\nkappa = \"0.2\"\n", "demo.toml").unwrap();
        assert_eq!(c.m, 3);
        let s = c.spec().unwrap();
        assert_eq!(s.kappa, Scalar::ratio(1, 5));
        let e = PipelineConfig::parse("n = 2\nalpha = 0.9\n", "bad.toml").unwrap_err();
        assert!(e.to_string().starts_with("bad.toml:2:"), "{e}");
    }

    #[test]
    fn empty_enumeration_is_vacuous() {
        let s = NetSpec::with_shell(2, Scalar::ratio(9, 10), Scalar::int(1), 0.5, 0.9).unwrap();
        let r = run_pipeline(&s, 3, &SearchParams::default(), true, 64, None).unwrap();
        assert!(r.vacuous);
        assert!(matches!(r.conclusion, Conclusion::CoarseNet { .. }));
    }

    #[test]
    fn zero_budget_all_unknown() {
        let s = NetSpec::with_shell(2, Scalar::ratio(9, 10), Scalar::int(1), 1.0, 2.3).unwrap();
        let p = SearchParams {
            budget: 0,
            ..SearchParams::default()
        };
        let r = run_pipeline(&s, 3, &p, true, 64, None).unwrap();
        assert!(!r.entries.is_empty());
        assert_eq!(r.count(Status::Unknown), r.entries.len());
        assert!(matches!(r.conclusion, Conclusion::NotEstablished { .. }));
    }
}
