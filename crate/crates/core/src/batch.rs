//! Tables of spectra, parameter sweeps and sampled wavefunctions.
//!
//! Rows are computed through [`Execution`] and always returned in a fixed
//! order, so the same request produces the same table in either mode.

use serde::Serialize;

use crate::angular::{self, RingParams};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::centrifugal_gamma_real;
use crate::oracle::{self, EigenOptions, Grid, DEFAULT_GRID_POINTS, DEFAULT_RMAX_FACTOR};
use crate::radial::{self, PotentialParams, RadialEigenstate};

/// Radial finite-difference grid: (0, rmax_factor/λ] with `points` points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub rmax_factor: f64,
    pub points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            rmax_factor: DEFAULT_RMAX_FACTOR,
            points: DEFAULT_GRID_POINTS,
        }
    }
}

impl GridSpec {
    pub fn grid(&self, lambda: f64) -> Result<Grid> {
        Grid::radial(lambda, self.rmax_factor, self.points)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRequest {
    pub params: PotentialParams,
    pub dim: u32,
    pub n_max: u32,
    pub l_max: u32,
    pub numeric: bool,
    pub grid: GridSpec,
    pub execution: Execution,
}

impl SpectrumRequest {
    pub fn new(params: PotentialParams, dim: u32) -> Self {
        Self {
            params,
            dim,
            n_max: 0,
            l_max: 0,
            numeric: false,
            grid: GridSpec::default(),
            execution: Execution::default(),
        }
    }
}

/// One (n, l) level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRow {
    pub n: u32,
    /// Angular level index; equals l_{D−1} when the ring term vanishes.
    pub l: u32,
    /// l_{D−1} entering γ_D (non-integer with a ring term).
    pub l_eff: f64,
    pub dim: u32,
    pub e_analytic: Option<f64>,
    pub e_numeric: Option<f64>,
    pub rel_diff: Option<f64>,
    /// Failing bound-state conditions, `;`-separated, or `ok`.
    pub bound_flags: String,
    pub error: Option<String>,
}

/// l_{D−1} of angular level `level`. Without a ring term this is `level`
/// itself; otherwise the θ_{D−1} equation is solved with Λ_{D−2} = 0.
pub fn effective_l(ring: &RingParams, dim: u32, level: u32) -> Result<f64> {
    if *ring == RingParams::zero() || dim < 3 {
        return Ok(f64::from(level));
    }
    Ok(angular::solve(ring, dim, 0.0, level)?.l)
}

/// Lowest `count` levels of the approximated radial equation by finite
/// differences.
pub fn numeric_levels(
    p: &PotentialParams,
    gamma_d: f64,
    count: usize,
    grid: &Grid,
    execution: Execution,
) -> Result<Vec<f64>> {
    let opts = EigenOptions {
        execution,
        ..Default::default()
    };
    let potential = |r: f64| p.radial_potential(r) + p.centrifugal_approx(gamma_d, r);
    Ok(oracle::radial_solve_with(potential, grid, count, p.kinetic(), &opts)?.eigenvalues)
}

fn sector_rows(req: &SpectrumRequest, level: u32) -> Vec<SpectrumRow> {
    let ns = 0..=req.n_max;
    let blank = |n: u32, l_eff: f64, flags: String, err: String| SpectrumRow {
        n,
        l: level,
        l_eff,
        dim: req.dim,
        e_analytic: None,
        e_numeric: None,
        rel_diff: None,
        bound_flags: flags,
        error: Some(err),
    };
    if let Err(e) = req.params.validate() {
        return ns.map(|n| blank(n, f64::NAN, "invalid".into(), e.to_string())).collect();
    }
    let ring = RingParams::from_physical(&req.params);
    let l_eff = match effective_l(&ring, req.dim, level) {
        Ok(l) => l,
        Err(e) => return ns.map(|n| blank(n, f64::NAN, "angular".into(), e.to_string())).collect(),
    };
    let gamma_d = centrifugal_gamma_real(req.dim, l_eff);
    let window = radial::bound_state_window_gamma(&req.params, gamma_d);
    let failures = window.failures();
    let flags = if failures.is_empty() {
        "ok".to_string()
    } else {
        failures.join(";")
    };
    let numeric = if req.numeric {
        Some(
            req.grid
                .grid(req.params.lambda)
                .and_then(|g| numeric_levels(&req.params, gamma_d, req.n_max as usize + 1, &g, Execution::Sequential)),
        )
    } else {
        None
    };
    ns.map(|n| {
        let mut row = SpectrumRow {
            n,
            l: level,
            l_eff,
            dim: req.dim,
            e_analytic: None,
            e_numeric: None,
            rel_diff: None,
            bound_flags: flags.clone(),
            error: None,
        };
        match RadialEigenstate::with_gamma(n, gamma_d, &req.params) {
            Ok(s) => row.e_analytic = Some(s.energy),
            Err(e) => {
                row.e_analytic = radial::energy_for_gamma(n, gamma_d, &req.params).ok();
                row.error = Some(e.to_string());
            }
        }
        match &numeric {
            Some(Ok(levels)) => row.e_numeric = levels.get(n as usize).copied(),
            Some(Err(e)) if row.error.is_none() => row.error = Some(format!("oracle: {e}")),
            _ => {}
        }
        if let (Some(a), Some(b), None) = (row.e_analytic, row.e_numeric, &row.error) {
            row.rel_diff = Some((a - b).abs() / b.abs().max(f64::MIN_POSITIVE));
        }
        row
    })
    .collect()
}

/// Rows ordered by n, then l.
pub fn spectrum(req: &SpectrumRequest) -> Vec<SpectrumRow> {
    let sectors = req.execution.map_range(req.l_max as usize + 1, |l| sector_rows(req, l as u32));
    let mut rows = Vec::with_capacity(sectors.len() * (req.n_max as usize + 1));
    for n in 0..=req.n_max as usize {
        for s in &sectors {
            rows.push(s[n].clone());
        }
    }
    rows
}

/// Parameter a sweep can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepParam {
    A,
    B,
    Lambda,
    Gamma,
    Zeta,
    Kappa,
    Mu,
    Hbar,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::A => "A",
            SweepParam::B => "B",
            SweepParam::Lambda => "lambda",
            SweepParam::Gamma => "gamma",
            SweepParam::Zeta => "zeta",
            SweepParam::Kappa => "kappa",
            SweepParam::Mu => "mu",
            SweepParam::Hbar => "hbar",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "A" => SweepParam::A,
            "B" => SweepParam::B,
            "lambda" => SweepParam::Lambda,
            "gamma" => SweepParam::Gamma,
            "zeta" => SweepParam::Zeta,
            "kappa" => SweepParam::Kappa,
            "mu" => SweepParam::Mu,
            "hbar" => SweepParam::Hbar,
            _ => return None,
        })
    }

    pub fn apply(self, p: &mut PotentialParams, v: f64) {
        match self {
            SweepParam::A => p.a = v,
            SweepParam::B => p.b = v,
            SweepParam::Lambda => p.lambda = v,
            SweepParam::Gamma => p.gamma = v,
            SweepParam::Zeta => p.zeta = v,
            SweepParam::Kappa => p.kappa = v,
            SweepParam::Mu => p.mu = v,
            SweepParam::Hbar => p.hbar = v,
        }
    }
}

/// Oscillator limit: A and B follow λ through [`radial::limiting_case_map`]
/// and each level is compared with the ½mω²r² + ħ²α/(2mr²) oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitingSpec {
    pub omega: f64,
    pub alpha: f64,
    /// Fixed box size for both oracles (the oscillator does not scale with λ).
    pub r_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRequest {
    pub base: SpectrumRequest,
    pub param: SweepParam,
    pub values: Vec<f64>,
    pub limiting: Option<LimitingSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub param: &'static str,
    pub value: f64,
    #[serde(flatten)]
    pub row: SpectrumRow,
    /// Oscillator oracle level (limiting sweeps only).
    pub reference: Option<f64>,
    /// |E_numeric − 2B/3 − reference| (limiting sweeps only).
    pub reference_error: Option<f64>,
}

/// Lowest `count` levels of the exact (non-approximated) radial equation of
/// V = A tanh² + B coth² on (0, r_max].
pub fn exact_levels(p: &PotentialParams, gamma_d: f64, count: usize, grid: &Grid) -> Result<Vec<f64>> {
    let potential = |r: f64| p.radial_potential(r) + p.centrifugal(gamma_d, r);
    Ok(oracle::radial_solve_with(
        potential,
        grid,
        count,
        p.kinetic(),
        &EigenOptions {
            execution: Execution::Sequential,
            ..Default::default()
        },
    )?
    .eigenvalues)
}

/// Levels of ½mω²r² + ħ²α/(2mr²) + γ_D ħ²/(2mr²) on (0, r_max].
pub fn oscillator_levels(
    omega: f64,
    alpha: f64,
    gamma_d: f64,
    mu: f64,
    hbar: f64,
    count: usize,
    grid: &Grid,
) -> Result<Vec<f64>> {
    let kin = hbar * hbar / (2.0 * mu);
    let potential = |r: f64| 0.5 * mu * omega * omega * r * r + kin * (alpha + gamma_d) / (r * r);
    Ok(oracle::radial_solve_with(
        potential,
        grid,
        count,
        kin,
        &EigenOptions {
            execution: Execution::Sequential,
            ..Default::default()
        },
    )?
    .eigenvalues)
}

fn limiting_rows(req: &SweepRequest, spec: &LimitingSpec, value: f64) -> Vec<SweepRow> {
    let mut base = req.base;
    base.execution = Execution::Sequential;
    let p0 = base.params;
    let fail = |msg: String| {
        (0..=base.n_max)
            .flat_map(|n| {
                (0..=base.l_max).map(move |l| (n, l))
            })
            .map(|(n, l)| SweepRow {
                param: req.param.name(),
                value,
                row: SpectrumRow {
                    n,
                    l,
                    l_eff: f64::from(l),
                    dim: base.dim,
                    e_analytic: None,
                    e_numeric: None,
                    rel_diff: None,
                    bound_flags: "invalid".into(),
                    error: Some(msg.clone()),
                },
                reference: None,
                reference_error: None,
            })
            .collect::<Vec<_>>()
    };
    let map = match radial::limiting_case_map(spec.omega, spec.alpha, value, p0.mu, p0.hbar) {
        Ok(m) => m,
        Err(e) => return fail(e.to_string()),
    };
    let params = PotentialParams {
        a: map.a,
        b: map.b,
        lambda: value,
        gamma: 0.0,
        zeta: 0.0,
        kappa: 0.0,
        ..p0
    };
    let grid = match Grid::uniform(0.0, spec.r_max, base.grid.points) {
        Ok(g) => g,
        Err(e) => return fail(e.to_string()),
    };
    let count = base.n_max as usize + 1;
    let mut out = Vec::new();
    let mut sectors = Vec::new();
    for l in 0..=base.l_max {
        let gamma_d = crate::geometry::centrifugal_gamma(base.dim, l);
        let exact = exact_levels(&params, gamma_d, count, &grid);
        let osc = oscillator_levels(spec.omega, spec.alpha, gamma_d, p0.mu, p0.hbar, count, &grid);
        sectors.push((l, gamma_d, exact, osc));
    }
    for n in 0..=base.n_max {
        for (l, gamma_d, exact, osc) in &sectors {
            let analytic = radial::energy_for_gamma(n, *gamma_d, &params);
            let mut row = SpectrumRow {
                n,
                l: *l,
                l_eff: f64::from(*l),
                dim: base.dim,
                e_analytic: analytic.as_ref().ok().copied(),
                e_numeric: None,
                rel_diff: None,
                bound_flags: "ok".into(),
                error: None,
            };
            let mut reference = None;
            let mut reference_error = None;
            match (exact, osc) {
                (Ok(e), Ok(o)) => {
                    let en = e[n as usize];
                    row.e_numeric = Some(en);
                    reference = Some(o[n as usize]);
                    reference_error = Some((en - map.shift - o[n as usize]).abs());
                    if let Some(a) = row.e_analytic {
                        row.rel_diff = Some((a - en).abs() / en.abs());
                    }
                }
                (Err(e), _) | (_, Err(e)) => row.error = Some(format!("oracle: {e}")),
            }
            if let Err(e) = analytic {
                row.error.get_or_insert(e.to_string());
            }
            out.push(SweepRow {
                param: req.param.name(),
                value,
                row,
                reference,
                reference_error,
            });
        }
    }
    out
}

/// Rows ordered by sweep value, then n, then l. Failing points produce rows
/// with an error and never abort the sweep.
pub fn sweep(req: &SweepRequest) -> Result<Vec<SweepRow>> {
    if req.values.is_empty() {
        return Err(Error::Invalid("sweep needs at least one value".into()));
    }
    if req.limiting.is_some() && req.param != SweepParam::Lambda {
        return Err(Error::Invalid("the oscillator limit sweeps lambda".into()));
    }
    let blocks = req.base.execution.map(&req.values, |&v| match &req.limiting {
        Some(spec) => limiting_rows(req, spec, v),
        None => {
            let mut point = req.base;
            point.execution = Execution::Sequential;
            req.param.apply(&mut point.params, v);
            spectrum(&point)
                .into_iter()
                .map(|row| SweepRow {
                    param: req.param.name(),
                    value: v,
                    row,
                    reference: None,
                    reference_error: None,
                })
                .collect()
        }
    });
    Ok(blocks.into_iter().flatten().collect())
}

/// A normalized radial wavefunction on a grid starting at r = 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WavefunctionTable {
    pub state: RadialEigenstate,
    pub r: Vec<f64>,
    pub g: Vec<f64>,
}

pub fn wavefunction(
    params: &PotentialParams,
    dim: u32,
    level: u32,
    n: u32,
    grid: &GridSpec,
    execution: Execution,
) -> Result<WavefunctionTable> {
    params.validate()?;
    let ring = RingParams::from_physical(params);
    let l_eff = effective_l(&ring, dim, level)?;
    let state = RadialEigenstate::with_gamma(n, centrifugal_gamma_real(dim, l_eff), params)?;
    let r = grid.grid(params.lambda)?.points();
    let g = execution.map(&r, |&x| state.wavefunction(x));
    Ok(WavefunctionTable { state, r, g })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn acceptance() -> PotentialParams {
        PotentialParams {
            a: 10.0,
            b: 3.0,
            lambda: 0.5,
            ..Default::default()
        }
    }

    #[test]
    fn spectrum_order_and_example() {
        let mut req = SpectrumRequest::new(PotentialParams::default(), 3);
        req.n_max = 1;
        req.l_max = 1;
        let rows = spectrum(&req);
        let keys: Vec<(u32, u32)> = rows.iter().map(|r| (r.n, r.l)).collect();
        assert_eq!(keys, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        // no bound level at A = B = 0: rows carry the error and the flags
        assert!(rows.iter().all(|r| r.error.is_some()));
        assert!(rows[0].bound_flags.contains("no-bound-level"));
    }

    #[test]
    fn numeric_column_agrees() {
        let mut req = SpectrumRequest::new(acceptance(), 3);
        req.n_max = 1;
        req.numeric = true;
        for row in spectrum(&req) {
            assert!(row.error.is_none());
            assert!(row.rel_diff.unwrap() < 1e-4, "{row:?}");
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let mut req = SpectrumRequest::new(acceptance(), 4);
        req.n_max = 2;
        req.l_max = 2;
        let par = spectrum(&req);
        req.execution = Execution::Sequential;
        assert_eq!(par, spectrum(&req));
    }

    #[test]
    fn sweep_single_step_equals_spectrum() {
        let mut req = SpectrumRequest::new(acceptance(), 3);
        req.n_max = 1;
        let s = sweep(&SweepRequest {
            base: req,
            param: SweepParam::A,
            values: vec![10.0],
            limiting: None,
        })
        .unwrap();
        let direct = spectrum(&req);
        assert_eq!(s.iter().map(|r| r.row.clone()).collect::<Vec<_>>(), direct);
    }

    #[test]
    fn sweep_tags_a_condition() {
        let mut req = SpectrumRequest::new(acceptance(), 3);
        req.params.lambda = 1.0;
        let s = sweep(&SweepRequest {
            base: req,
            param: SweepParam::A,
            values: vec![-1.0, 10.0],
            limiting: None,
        })
        .unwrap();
        assert!(s[0].row.bound_flags.contains("A-condition"));
        assert!(s[0].row.error.is_some());
        assert!(s[1].row.error.is_none());
    }

    #[test]
    fn wavefunction_table_is_normalized() {
        let t = wavefunction(&acceptance(), 3, 0, 1, &GridSpec::default(), Execution::default()).unwrap();
        assert_eq!(t.g[0], 0.0);
        let g = GridSpec::default().grid(0.5).unwrap();
        let w = oracle::quadrature::simpson_weights(&g);
        let norm = oracle::quadrature::weighted_dot(&w, &t.g, &t.g);
        assert!((norm - 1.0).abs() < 1e-6);
        assert_eq!(oracle::count_nodes(&t.g, 1e-9), 1);
    }
}
