//! Adaptive Gauss-Kronrod integration and Matsubara series summation.
//!
//! All routines are globally adaptive: every panel lives in one pool and the
//! panel with the largest error estimate is bisected until the summed error
//! meets `max(abs_tol, rel_tol * |I|)`. Panel contributions are always summed
//! in the same order, so results are deterministic.

use crate::error::{CasimirError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Maximum number of bisections of any initial panel.
    pub max_depth: u32,
    /// Consecutive negligible Matsubara terms required before stopping.
    pub matsubara_consecutive: usize,
    /// Hard cap on the number of Matsubara terms.
    pub matsubara_max_terms: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-300,
            max_depth: 60,
            matsubara_consecutive: 3,
            matsubara_max_terms: 100_000,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(CasimirError::invalid("relative tolerance", self.rel_tol, "must be positive"));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(CasimirError::invalid("absolute tolerance", self.abs_tol, "must be positive"));
        }
        if self.max_depth < 10 {
            return Err(CasimirError::invalid(
                "maximum depth",
                self.max_depth as f64,
                "must be at least 10",
            ));
        }
        if self.matsubara_consecutive == 0 || self.matsubara_max_terms == 0 {
            return Err(CasimirError::invalid(
                "Matsubara truncation",
                self.matsubara_max_terms as f64,
                "term counts must be positive",
            ));
        }
        Ok(())
    }

    /// Same configuration with both tolerances divided by `factor`.
    pub fn tightened(&self, factor: f64) -> Self {
        Self {
            rel_tol: self.rel_tol / factor,
            abs_tol: self.abs_tol / factor,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

impl NumericResult {
    pub fn relative_error(&self) -> f64 {
        if self.value == 0.0 {
            if self.error_estimate == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.error_estimate / self.value).abs()
        }
    }
}

// Kronrod 15-point abscissae (descending, last is the center) and weights;
// odd indices are the embedded 7-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

type Integrand<'a> = dyn FnMut(f64) -> Result<f64> + 'a;

fn check_finite(x: f64, y: f64) -> Result<f64> {
    if y.is_finite() {
        Ok(y)
    } else {
        Err(CasimirError::NonConvergence {
            context: "quadrature",
            detail: format!("integrand is not finite at x = {x:e}"),
        })
    }
}

/// One 15-point Kronrod panel with the 7-point Gauss error estimate,
/// rescaled as in QUADPACK.
fn gk15(f: &mut Integrand<'_>, a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = check_finite(center, f(center)?)?;
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let x1 = center - dx;
        let x2 = center + dx;
        let f1 = check_finite(x1, f(x1)?)?;
        let f2 = check_finite(x2, f(x2)?)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let result = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok((result, err))
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

const MAX_PANELS: usize = 100_000;

/// Pool of panels refined globally by bisection.
struct Pool<'f, 'a> {
    f: &'f mut Integrand<'a>,
    panels: Vec<Panel>,
    evaluations: usize,
}

impl<'f, 'a> Pool<'f, 'a> {
    fn new(f: &'f mut Integrand<'a>) -> Self {
        Self {
            f,
            panels: Vec::new(),
            evaluations: 0,
        }
    }

    fn push(&mut self, a: f64, b: f64, depth: u32) -> Result<Panel> {
        let (value, error) = gk15(self.f, a, b)?;
        self.evaluations += 15;
        let p = Panel {
            a,
            b,
            value,
            error,
            depth,
        };
        self.panels.push(p);
        Ok(p)
    }

    fn totals(&self) -> (f64, f64) {
        let mut value = 0.0;
        let mut error = 0.0;
        for p in &self.panels {
            value += p.value;
            error += p.error;
        }
        (value, error)
    }

    fn bisect_worst(&mut self, max_depth: u32) -> Result<()> {
        let idx = self
            .panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, _)| i)
            .expect("pool is never empty");
        let p = self.panels[idx];
        if p.depth >= max_depth || self.panels.len() >= MAX_PANELS {
            return Err(CasimirError::NonConvergence {
                context: "adaptive quadrature",
                detail: format!(
                    "subdivision limit reached on [{:e}, {:e}] with error {:e}",
                    p.a, p.b, p.error
                ),
            });
        }
        let mid = 0.5 * (p.a + p.b);
        if !(mid > p.a && mid < p.b) {
            return Err(CasimirError::NonConvergence {
                context: "adaptive quadrature",
                detail: format!("panel [{:e}, {:e}] cannot be split further", p.a, p.b),
            });
        }
        self.panels.swap_remove(idx);
        self.push(p.a, mid, p.depth + 1)?;
        self.push(mid, p.b, p.depth + 1)?;
        // keep summation order independent of refinement history
        self.panels.sort_by(|x, y| x.a.total_cmp(&y.a));
        Ok(())
    }
}

fn tolerance(cfg: &QuadratureConfig, value: f64) -> f64 {
    cfg.abs_tol.max(cfg.rel_tol * value.abs())
}

/// Fallible integral over the finite interval `[a, b]` split at `breakpoints`.
pub fn try_integrate_with_breakpoints(
    mut f: impl FnMut(f64) -> Result<f64>,
    breakpoints: &[f64],
    cfg: &QuadratureConfig,
) -> Result<NumericResult> {
    cfg.validate()?;
    if breakpoints.len() < 2 {
        return Err(CasimirError::invalid(
            "integration range",
            breakpoints.len() as f64,
            "needs at least two end points",
        ));
    }
    if breakpoints.iter().any(|x| !x.is_finite()) || breakpoints.windows(2).any(|w| w[1] < w[0]) {
        return Err(CasimirError::invalid(
            "integration range",
            f64::NAN,
            "end points must be finite and ascending",
        ));
    }
    let mut pool = Pool::new(&mut f);
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            pool.push(w[0], w[1], 0)?;
        }
    }
    if pool.panels.is_empty() {
        return Ok(NumericResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 1,
        });
    }
    loop {
        let (value, error) = pool.totals();
        if error <= tolerance(cfg, value) {
            return Ok(NumericResult {
                value,
                error_estimate: error,
                evaluations: pool.evaluations,
            });
        }
        pool.bisect_worst(cfg.max_depth)?;
    }
}

/// Fallible integral over `[a, b]`.
pub fn try_integrate(
    f: impl FnMut(f64) -> Result<f64>,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<NumericResult> {
    if b < a {
        let r = try_integrate_with_breakpoints(f, &[b, a], cfg)?;
        return Ok(NumericResult {
            value: -r.value,
            ..r
        });
    }
    try_integrate_with_breakpoints(f, &[a, b], cfg)
}

/// Integral of `f` over `[a, b]`.
pub fn integrate(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<NumericResult> {
    try_integrate(|x| Ok(f(x)), a, b, cfg)
}

/// Largest scaled abscissa before the tail is declared non-convergent.
const SEMI_INFINITE_LIMIT: f64 = 1125899906842624.0; // 2^50

/// Fallible integral over `(0, inf)` for an integrand decaying on `decay_scale`.
///
/// The range is cut into panels `[0, 1], [1, 2], [2, 4], ...` in units of
/// `decay_scale`. Panels are appended until the geometric extrapolation of
/// the last two panel ratios bounds the remaining tail below the tolerance;
/// that bound is added to the error estimate, not to the value.
pub fn try_integrate_semi_infinite(
    mut f: impl FnMut(f64) -> Result<f64>,
    decay_scale: f64,
    cfg: &QuadratureConfig,
) -> Result<NumericResult> {
    cfg.validate()?;
    if !(decay_scale > 0.0 && decay_scale.is_finite()) {
        return Err(CasimirError::invalid("decay scale", decay_scale, "must be positive"));
    }
    let mut g = |u: f64| -> Result<f64> { Ok(decay_scale * f(u * decay_scale)?) };
    let mut pool = Pool::new(&mut g);
    pool.push(0.0, 1.0, 0)?;
    let mut edge = 1.0;
    while edge < 64.0 {
        pool.push(edge, 2.0 * edge, 0)?;
        edge *= 2.0;
    }
    loop {
        let (value, error) = pool.totals();
        let tol = tolerance(cfg, value);
        // current estimates of the two outermost panels
        let outer = panel_sum(&pool.panels, edge / 2.0, edge);
        let inner = panel_sum(&pool.panels, edge / 4.0, edge / 2.0);
        let tail = geometric_tail(inner, outer);
        if tail > 0.25 * tol {
            if edge >= SEMI_INFINITE_LIMIT {
                return Err(CasimirError::NonConvergence {
                    context: "semi-infinite quadrature",
                    detail: format!("tail bound {tail:e} still above tolerance {tol:e}"),
                });
            }
            pool.push(edge, 2.0 * edge, 0)?;
            edge *= 2.0;
            continue;
        }
        if error + tail <= tol {
            return Ok(NumericResult {
                value,
                error_estimate: error + tail,
                evaluations: pool.evaluations,
            });
        }
        pool.bisect_worst(cfg.max_depth)?;
    }
}

fn panel_sum(panels: &[Panel], a: f64, b: f64) -> f64 {
    panels
        .iter()
        .filter(|p| p.a >= a && p.b <= b)
        .map(|p| p.value)
        .sum()
}

/// Bound on `sum_{j>=1} |outer| q^j` with `q = |outer / inner|`.
fn geometric_tail(inner: f64, outer: f64) -> f64 {
    let outer = outer.abs();
    if outer == 0.0 {
        return 0.0;
    }
    let q = outer / inner.abs();
    if q < 1.0 {
        outer * q / (1.0 - q)
    } else {
        f64::INFINITY
    }
}

/// Integral of `f` over `(0, inf)`; see [`try_integrate_semi_infinite`].
pub fn integrate_semi_infinite(
    f: impl Fn(f64) -> f64,
    decay_scale: f64,
    cfg: &QuadratureConfig,
) -> Result<NumericResult> {
    try_integrate_semi_infinite(|x| Ok(f(x)), decay_scale, cfg)
}

/// Compensated (Neumaier) running sum.
#[derive(Debug, Default, Clone, Copy)]
struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Fallible Matsubara sum `term(0)/2 + sum_{m>=1} term(m)`.
///
/// Stops once `cfg.matsubara_consecutive` successive terms are below
/// `rel_tol` times the partial sum. The remaining tail is extrapolated as a
/// geometric series from the last two terms; its size is also added to the
/// error estimate together with the terms' own errors.
pub fn try_matsubara_sum(
    mut term: impl FnMut(u64) -> Result<NumericResult>,
    cfg: &QuadratureConfig,
) -> Result<NumericResult> {
    cfg.validate()?;
    let first = term(0)?;
    let mut sum = CompensatedSum::default();
    sum.add(0.5 * first.value);
    let mut error = 0.5 * first.error_estimate;
    let mut evaluations = first.evaluations;
    let mut previous = first.value;
    let mut quiet = 0usize;
    for m in 1..cfg.matsubara_max_terms as u64 {
        let t = term(m)?;
        if !t.value.is_finite() {
            return Err(CasimirError::NonConvergence {
                context: "Matsubara sum",
                detail: format!("term {m} is not finite"),
            });
        }
        sum.add(t.value);
        error += t.error_estimate;
        evaluations += t.evaluations;
        let partial = sum.value();
        if t.value.abs() <= tolerance(cfg, partial) {
            quiet += 1;
        } else {
            quiet = 0;
        }
        if quiet >= cfg.matsubara_consecutive {
            let tail = if previous == 0.0 && t.value == 0.0 {
                0.0
            } else {
                geometric_tail(previous, t.value)
            };
            if tail.is_finite() {
                // extrapolate a same-signed geometric tail, keep its size as error
                let extrapolated = if previous * t.value > 0.0 {
                    tail.copysign(t.value)
                } else {
                    0.0
                };
                sum.add(extrapolated);
                return Ok(NumericResult {
                    value: sum.value(),
                    error_estimate: error + tail,
                    evaluations,
                });
            }
        }
        previous = t.value;
    }
    Err(CasimirError::NonConvergence {
        context: "Matsubara sum",
        detail: format!(
            "terms not negligible after {} terms (partial sum {:e})",
            cfg.matsubara_max_terms,
            sum.value()
        ),
    })
}

/// Matsubara sum of an infallible, exactly known term.
pub fn matsubara_sum(term: impl Fn(u64) -> f64, cfg: &QuadratureConfig) -> Result<NumericResult> {
    try_matsubara_sum(
        |m| {
            Ok(NumericResult {
                value: term(m),
                error_estimate: 0.0,
                evaluations: 1,
            })
        },
        cfg,
    )
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0, "Gauss-Legendre rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    /// Composite Simpson on `[a, b]` with `n` (even) intervals.
    fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut s = f(a) + f(b);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(a + i as f64 * h);
        }
        s * h / 3.0
    }

    fn planck(t: f64) -> f64 {
        t * t * t / t.exp_m1()
    }

    #[test]
    fn exponential() {
        let r = integrate_semi_infinite(|t| (-t).exp(), 1.0, &cfg()).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12, "{r:?}");
        assert!(r.error_estimate.is_finite() && r.evaluations > 0);
        let r = integrate_semi_infinite(|t| t * t * (-t).exp(), 1.0, &cfg()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn planck_kernel_against_simpson() {
        let oracle = simpson(planck, 1e-8, 60.0, 1_000_000);
        let exact = PI.powi(4) / 15.0;
        assert!(((oracle - exact) / exact).abs() < 1e-9);
        let r = integrate_semi_infinite(planck, 1.0, &cfg()).unwrap();
        assert!(((r.value - oracle) / oracle).abs() < 1e-9, "{r:?}");
        assert!(r.error_estimate <= 1e-9 * r.value);
    }

    #[test]
    fn decay_scale_is_only_a_hint() {
        for scale in [1e-3, 0.1, 1.0, 10.0, 1e3] {
            let r = integrate_semi_infinite(|t| 3.0 * (-3.0 * t).exp(), scale, &cfg()).unwrap();
            assert!((r.value - 1.0).abs() < 1e-10, "scale {scale}: {r:?}");
        }
        // physical units: kappa^2 exp(-2 kappa L) with L = 1 um
        let l = 1e-6;
        let r = integrate_semi_infinite(|k| k * k * (-2.0 * k * l).exp(), 1.0 / (2.0 * l), &cfg()).unwrap();
        let exact = 2.0 / (2.0 * l).powi(3);
        assert!(((r.value - exact) / exact).abs() < 1e-10);
    }

    #[test]
    fn finite_interval() {
        let r = integrate(|x| x.sin(), 0.0, PI, &cfg()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12);
        let r = integrate(|x| x.sin(), PI, 0.0, &cfg()).unwrap();
        assert!((r.value + 2.0).abs() < 1e-12);
        let r = integrate(|x| x.sqrt(), 0.0, 1.0, &cfg()).unwrap();
        assert!((r.value - 2.0 / 3.0).abs() < 1e-10);
        let r = try_integrate_with_breakpoints(|x| Ok(x.abs()), &[-1.0, 0.0, 2.0], &cfg()).unwrap();
        assert!((r.value - 2.5).abs() < 1e-13);
    }

    #[test]
    fn non_convergence_is_reported() {
        // not integrable at 0
        let tight = QuadratureConfig {
            max_depth: 12,
            ..cfg()
        };
        let r = integrate(|x| 1.0 / x, 0.0, 1.0, &tight);
        assert!(matches!(r, Err(CasimirError::NonConvergence { .. })), "{r:?}");
        // no decay at all
        let r = integrate_semi_infinite(|_| 1.0, 1.0, &cfg());
        assert!(matches!(r, Err(CasimirError::NonConvergence { .. })), "{r:?}");
        let r = integrate(|_| f64::NAN, 0.0, 1.0, &cfg());
        assert!(r.is_err());
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig { rel_tol: 0.0, ..cfg() }.validate().is_err());
        assert!(QuadratureConfig { abs_tol: -1.0, ..cfg() }.validate().is_err());
        assert!(QuadratureConfig { max_depth: 9, ..cfg() }.validate().is_err());
        assert!(cfg().validate().is_ok());
        let t = cfg().tightened(100.0);
        assert!((t.rel_tol - 1e-11).abs() < 1e-25);
    }

    #[test]
    fn matsubara_half_weight() {
        let r = matsubara_sum(|m| 0.5f64.powi(m as i32), &cfg()).unwrap();
        assert!((r.value - 1.5).abs() < 1e-12, "{r:?}");
        let r = matsubara_sum(|m| if m == 0 { 1.0 } else { 0.0 }, &cfg()).unwrap();
        assert_eq!(r.value, 0.5);
        let r = matsubara_sum(|_| 1.0, &cfg());
        assert!(matches!(r, Err(CasimirError::NonConvergence { .. })));
    }

    #[test]
    fn matsubara_error_covers_truncation() {
        let q: f64 = 0.99;
        let exact = 0.5 + q / (1.0 - q);
        let r = matsubara_sum(|m| q.powi(m as i32), &cfg()).unwrap();
        assert!((r.value - exact).abs() <= r.error_estimate + 1e-12, "{r:?}");
        assert!(((r.value - exact) / exact).abs() < 1e-8);
    }

    #[test]
    fn gauss_legendre_rules() {
        for n in [1, 2, 5, 16, 48] {
            let (x, w) = gauss_legendre(n);
            let total: f64 = w.iter().sum();
            assert!((total - 2.0).abs() < 1e-13, "n = {n}");
            // exact for degree 2n - 1
            let d = 2 * n - 2;
            let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(d as i32)).sum();
            assert!((s - 2.0 / (d as f64 + 1.0)).abs() < 1e-13, "n = {n}");
        }
    }

    /// Kernels with a closed-form integral over (0, inf).
    #[allow(clippy::type_complexity)]
    fn regression_kernels() -> Vec<(Box<dyn Fn(f64) -> f64>, f64)> {
        vec![
            (Box::new(planck), PI.powi(4) / 15.0),
            (Box::new(|t: f64| t / t.exp_m1()), PI * PI / 6.0),
            (Box::new(|t: f64| (-t * t).exp()), PI.sqrt() / 2.0),
            (Box::new(|t: f64| t.powi(4) * (-t).exp()), 24.0),
            (Box::new(|t: f64| -(-(-2.0 * t).exp()).ln_1p()), PI * PI / 12.0),
        ]
    }

    #[test]
    fn tighter_tolerance_never_worse() {
        for (f, exact) in regression_kernels() {
            let mut prev = f64::INFINITY;
            for rel_tol in [1e-5, 5e-6, 1e-7, 1e-9, 1e-11] {
                let c = QuadratureConfig { rel_tol, ..cfg() };
                let r = integrate_semi_infinite(&f, 1.0, &c).unwrap();
                let err = (r.value - exact).abs();
                assert!(err <= prev.max(4.0 * f64::EPSILON * exact), "rel_tol {rel_tol}: {err} > {prev}");
                assert!(err <= r.error_estimate.max(4.0 * f64::EPSILON * exact), "{err} vs {r:?}");
                prev = err;
            }
        }
    }

    #[test]
    fn bounded_by_dominating_integrand() {
        // |sin(t) e^-t| <= e^-t, integral 1
        let r = integrate_semi_infinite(|t| (t.sin() * (-t).exp()).abs(), 1.0, &cfg()).unwrap();
        assert!(r.value <= 1.0 + r.error_estimate);
    }
}
