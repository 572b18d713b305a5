//! Tabulated optical data and its continuation to the imaginary axis.
//!
//! `eps(i xi) = 1 + (2/pi) int_0^inf omega Im eps(omega) / (omega^2 + xi^2) d omega`
//!
//! Below the first tabulated frequency the absorption is extended with the
//! Drude form `omega_p^2 gamma / (omega (omega^2 + gamma^2))`; above the
//! high-frequency cutoff it is set to zero. Between samples `Im eps` is
//! interpolated linearly in log-log coordinates.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{CasimirError, Result};
use crate::quadrature::{try_integrate_semi_infinite, try_integrate_with_breakpoints, QuadratureConfig};

const MIN_ROWS: usize = 10;
const MIN_DECADES: f64 = 3.0;

fn data_error(row: usize, message: impl Into<String>) -> CasimirError {
    CasimirError::OpticalData {
        row,
        message: message.into(),
    }
}

fn check_drude(omega_p: f64, gamma: f64) -> Result<()> {
    if !(omega_p > 0.0 && omega_p.is_finite()) {
        return Err(CasimirError::invalid("plasma frequency", omega_p, "must be positive and finite"));
    }
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(CasimirError::invalid("relaxation rate", gamma, "must be positive and finite"));
    }
    Ok(())
}

/// Absorption spectrum `Im eps(omega)` with its Drude low-frequency extension.
#[derive(Debug, Clone, PartialEq)]
pub struct OpticalDataTable {
    omega: Vec<f64>,
    eps_imag: Vec<f64>,
    omega_p: f64,
    gamma: f64,
    cutoff: f64,
}

/// Split of `eps(i xi) - 1` by frequency range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KramersKronigBreakdown {
    pub xi: f64,
    pub epsilon: f64,
    /// Share of `eps - 1` coming from the Drude extension below the data.
    pub low_fraction: f64,
    /// Estimated share missing above the cutoff, from a power-law extension of
    /// the last two samples; `None` when that extension does not decay.
    pub high_fraction: Option<f64>,
}

impl OpticalDataTable {
    /// Rows are `(omega [rad/s], Im eps)`; the cutoff defaults to the last frequency.
    pub fn new(rows: &[(f64, f64)], omega_p: f64, gamma: f64) -> Result<Self> {
        let lines: Vec<usize> = (1..=rows.len()).collect();
        Self::build(rows, &lines, omega_p, gamma)
    }

    fn build(rows: &[(f64, f64)], lines: &[usize], omega_p: f64, gamma: f64) -> Result<Self> {
        check_drude(omega_p, gamma)?;
        let last_line = lines.last().copied().unwrap_or(0);
        if rows.len() < MIN_ROWS {
            return Err(data_error(
                last_line,
                format!("need at least {MIN_ROWS} rows, found {}", rows.len()),
            ));
        }
        for (i, &(w, e)) in rows.iter().enumerate() {
            let line = lines[i];
            if !(w > 0.0 && w.is_finite()) {
                return Err(data_error(line, format!("frequency {w} must be positive and finite")));
            }
            if !(e >= 0.0 && e.is_finite()) {
                return Err(data_error(line, format!("Im eps = {e} must be non-negative (passive medium)")));
            }
            if i > 0 && w <= rows[i - 1].0 {
                return Err(data_error(line, format!("frequency {w} is not above the previous row")));
            }
        }
        let first = rows[0].0;
        let last = rows[rows.len() - 1].0;
        if (last / first).log10() < MIN_DECADES {
            return Err(data_error(
                last_line,
                format!("data span {:.2} decades, need at least {MIN_DECADES}", (last / first).log10()),
            ));
        }
        Ok(Self {
            omega: rows.iter().map(|r| r.0).collect(),
            eps_imag: rows.iter().map(|r| r.1).collect(),
            omega_p,
            gamma,
            cutoff: last,
        })
    }

    /// Rows given as complex refractive index `(omega, n, k)`; `Im eps = 2 n k`.
    pub fn from_refractive_index(rows: &[(f64, f64, f64)], omega_p: f64, gamma: f64) -> Result<Self> {
        let converted: Vec<(f64, f64)> = rows.iter().map(|&(w, n, k)| (w, 2.0 * n * k)).collect();
        Self::new(&converted, omega_p, gamma)
    }

    /// Truncate the absorption above `cutoff`, which must lie within the data.
    pub fn with_cutoff(mut self, cutoff: f64) -> Result<Self> {
        let first = self.omega[0];
        let last = *self.omega.last().unwrap();
        if !(cutoff > first && cutoff <= last) {
            return Err(CasimirError::invalid(
                "high-frequency cutoff",
                cutoff,
                "must lie inside the tabulated range",
            ));
        }
        self.cutoff = cutoff;
        Ok(self)
    }

    /// Parse the plain-text format: header `omega_rad_s,n,k` or
    /// `omega_rad_s,eps_imag`, `#` comments, one row per line.
    pub fn from_csv_str(text: &str, omega_p: f64, gamma: f64) -> Result<Self> {
        let mut header: Option<Vec<String>> = None;
        let mut rows = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let Some(cols) = &header else {
                let cols: Vec<String> = fields.iter().map(|s| s.to_ascii_lowercase()).collect();
                let known = cols == ["omega_rad_s", "n", "k"] || cols == ["omega_rad_s", "eps_imag"];
                if !known {
                    return Err(data_error(
                        line_no,
                        format!("unknown header '{line}', expected 'omega_rad_s,n,k' or 'omega_rad_s,eps_imag'"),
                    ));
                }
                header = Some(cols);
                continue;
            };
            if fields.len() != cols.len() {
                return Err(data_error(
                    line_no,
                    format!("expected {} fields, found {}", cols.len(), fields.len()),
                ));
            }
            let mut values = Vec::with_capacity(fields.len());
            for f in &fields {
                let v: f64 = f
                    .parse()
                    .map_err(|_| data_error(line_no, format!("cannot parse number '{f}'")))?;
                values.push(v);
            }
            let im = if values.len() == 3 {
                if values[1] < 0.0 || values[2] < 0.0 {
                    return Err(data_error(line_no, "n and k must be non-negative"));
                }
                2.0 * values[1] * values[2]
            } else {
                values[1]
            };
            rows.push((values[0], im));
            lines.push(line_no);
        }
        if header.is_none() {
            return Err(data_error(0, "file is empty"));
        }
        if rows.is_empty() {
            return Err(data_error(0, "no data rows"));
        }
        Self::build(&rows, &lines, omega_p, gamma)
    }

    pub fn from_path(path: impl AsRef<Path>, omega_p: f64, gamma: f64) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| data_error(0, format!("cannot read {}: {e}", path.display())))?;
        Self::from_csv_str(&text, omega_p, gamma)
    }

    pub fn omega_p(&self) -> f64 {
        self.omega_p
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    pub fn frequency_range(&self) -> (f64, f64) {
        (self.omega[0], *self.omega.last().unwrap())
    }

    fn drude_absorption(&self, omega: f64) -> f64 {
        self.omega_p * self.omega_p * self.gamma / (omega * (omega * omega + self.gamma * self.gamma))
    }

    /// `Im eps(omega)` as used by the continuation.
    pub fn absorption(&self, omega: f64) -> f64 {
        if omega < self.omega[0] {
            return self.drude_absorption(omega);
        }
        if omega > self.cutoff {
            return 0.0;
        }
        let i = self.omega.partition_point(|&w| w <= omega);
        if i >= self.omega.len() {
            return *self.eps_imag.last().unwrap();
        }
        let (w0, w1) = (self.omega[i - 1], self.omega[i]);
        let (e0, e1) = (self.eps_imag[i - 1], self.eps_imag[i]);
        if e0 > 0.0 && e1 > 0.0 {
            let t = (omega / w0).ln() / (w1 / w0).ln();
            (e0.ln() + t * (e1 / e0).ln()).exp()
        } else {
            e0 + (e1 - e0) * (omega - w0) / (w1 - w0)
        }
    }

    fn low_part(&self, xi: f64, cfg: &QuadratureConfig) -> Result<f64> {
        // s = ln(omega_1 / omega), integrand omega * [omega Im eps / (omega^2 + xi^2)]
        let w1 = self.omega[0];
        let r = try_integrate_semi_infinite(
            |s| {
                let w = w1 * (-s).exp();
                Ok(w * w * self.drude_absorption(w) / (w * w + xi * xi))
            },
            1.0,
            cfg,
        )?;
        Ok(r.value)
    }

    fn data_part(&self, xi: f64, cfg: &QuadratureConfig) -> Result<f64> {
        let mut breaks: Vec<f64> = self
            .omega
            .iter()
            .take_while(|&&w| w < self.cutoff)
            .map(|w| w.ln())
            .collect();
        breaks.push(self.cutoff.ln());
        let r = try_integrate_with_breakpoints(
            |u| {
                let w = u.exp();
                Ok(w * w * self.absorption(w) / (w * w + xi * xi))
            },
            &breaks,
            cfg,
        )?;
        Ok(r.value)
    }

    /// Power-law estimate of the absorption integral above the cutoff.
    fn high_tail(&self, xi: f64, cfg: &QuadratureConfig) -> Result<Option<f64>> {
        let n = self.omega.partition_point(|&w| w < self.cutoff).max(1);
        let (w0, w1) = (self.omega[n - 1], self.cutoff);
        let (e0, e1) = (self.absorption(w0), self.absorption(w1));
        if !(e0 > 0.0 && e1 > 0.0) || w1 <= w0 {
            return Ok(Some(0.0));
        }
        let slope = (e1 / e0).ln() / (w1 / w0).ln();
        if slope >= 0.0 {
            return Ok(None);
        }
        let r = try_integrate_semi_infinite(
            |s| {
                let w = w1 * s.exp();
                Ok(w * w * e1 * (slope * s).exp() / (w * w + xi * xi))
            },
            -1.0 / slope,
            cfg,
        )?;
        Ok(Some(r.value))
    }

    fn check_xi(xi: f64) -> Result<()> {
        if xi > 0.0 && xi.is_finite() {
            Ok(())
        } else {
            Err(CasimirError::invalid("imaginary frequency", xi, "must be positive"))
        }
    }

    /// `eps(i xi)` from the dispersion relation.
    pub fn continuation(&self, xi: f64, cfg: &QuadratureConfig) -> Result<f64> {
        Self::check_xi(xi)?;
        Ok(1.0 + 2.0 / PI * (self.low_part(xi, cfg)? + self.data_part(xi, cfg)?))
    }

    pub fn breakdown(&self, xi: f64, cfg: &QuadratureConfig) -> Result<KramersKronigBreakdown> {
        Self::check_xi(xi)?;
        let low = self.low_part(xi, cfg)?;
        let data = self.data_part(xi, cfg)?;
        let total = low + data;
        let high = self.high_tail(xi, cfg)?;
        Ok(KramersKronigBreakdown {
            xi,
            epsilon: 1.0 + 2.0 / PI * total,
            low_fraction: if total > 0.0 { low / total } else { 0.0 },
            high_fraction: high.map(|h| if total + h > 0.0 { h / (total + h) } else { 0.0 }),
        })
    }
}

/// `eps(i xi)` sampled on a grid, as written by the ingestion pipeline.
///
/// Inside the grid `eps - 1` is interpolated log-log. Below it the Drude shape
/// is scaled to match the first sample; above it `eps - 1` falls as `xi^-2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImaginaryAxisTable {
    xi: Vec<f64>,
    susceptibility: Vec<f64>,
    omega_p: f64,
    gamma: f64,
}

pub const IMAGINARY_AXIS_HEADER: &str = "xi_rad_s,eps_imag_axis";

impl ImaginaryAxisTable {
    pub fn new(samples: &[(f64, f64)], omega_p: f64, gamma: f64) -> Result<Self> {
        let lines: Vec<usize> = (1..=samples.len()).collect();
        Self::build(samples, &lines, omega_p, gamma)
    }

    fn build(samples: &[(f64, f64)], lines: &[usize], omega_p: f64, gamma: f64) -> Result<Self> {
        check_drude(omega_p, gamma)?;
        if samples.len() < 2 {
            return Err(data_error(lines.last().copied().unwrap_or(0), "need at least two samples"));
        }
        for (i, &(xi, eps)) in samples.iter().enumerate() {
            if !(xi > 0.0 && xi.is_finite()) {
                return Err(data_error(lines[i], format!("frequency {xi} must be positive and finite")));
            }
            if !(eps > 1.0 && eps.is_finite()) {
                return Err(data_error(lines[i], format!("eps(i xi) = {eps} must exceed 1")));
            }
            if i > 0 && xi <= samples[i - 1].0 {
                return Err(data_error(lines[i], format!("frequency {xi} is not above the previous row")));
            }
        }
        Ok(Self {
            xi: samples.iter().map(|s| s.0).collect(),
            susceptibility: samples.iter().map(|s| s.1 - 1.0).collect(),
            omega_p,
            gamma,
        })
    }

    /// Parse `xi_rad_s,eps_imag_axis` data. Drude parameters come from
    /// `params` or from `# omega_p_rad_s = ...` / `# gamma_rad_s = ...` comments.
    pub fn from_csv_str(text: &str, params: Option<(f64, f64)>) -> Result<Self> {
        let mut seen_header = false;
        let mut meta_wp = None;
        let mut meta_gamma = None;
        let mut samples = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((key, value)) = comment.split_once('=') {
                    let value = value.trim().parse::<f64>().ok();
                    match key.trim() {
                        "omega_p_rad_s" => meta_wp = value,
                        "gamma_rad_s" => meta_gamma = value,
                        _ => {}
                    }
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            if !seen_header {
                if line.to_ascii_lowercase().replace(' ', "") != IMAGINARY_AXIS_HEADER {
                    return Err(data_error(line_no, format!("expected header '{IMAGINARY_AXIS_HEADER}'")));
                }
                seen_header = true;
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 2 {
                return Err(data_error(line_no, format!("expected 2 fields, found {}", fields.len())));
            }
            let parse = |f: &str| {
                f.parse::<f64>()
                    .map_err(|_| data_error(line_no, format!("cannot parse number '{f}'")))
            };
            samples.push((parse(fields[0])?, parse(fields[1])?));
            lines.push(line_no);
        }
        if !seen_header {
            return Err(data_error(0, "file is empty"));
        }
        let (omega_p, gamma) = match (params, meta_wp, meta_gamma) {
            (Some(p), _, _) => p,
            (None, Some(w), Some(g)) => (w, g),
            _ => {
                return Err(data_error(
                    0,
                    "Drude parameters missing: pass them explicitly or add omega_p_rad_s/gamma_rad_s comments",
                ))
            }
        };
        Self::build(&samples, &lines, omega_p, gamma)
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# omega_p_rad_s = {:e}", self.omega_p);
        let _ = writeln!(out, "# gamma_rad_s = {:e}", self.gamma);
        out.push_str(IMAGINARY_AXIS_HEADER);
        out.push('\n');
        for (xi, chi) in self.xi.iter().zip(&self.susceptibility) {
            let _ = writeln!(out, "{:.12e},{:.12e}", xi, 1.0 + chi);
        }
        out
    }

    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xi.iter().zip(&self.susceptibility).map(|(x, c)| (*x, 1.0 + c))
    }

    fn drude_shape(&self, xi: f64) -> f64 {
        self.omega_p * self.omega_p / (xi * (xi + self.gamma))
    }

    pub fn susceptibility(&self, xi: f64) -> f64 {
        let first = self.xi[0];
        let n = self.xi.len();
        let last = self.xi[n - 1];
        if xi <= first {
            return self.susceptibility[0] * self.drude_shape(xi) / self.drude_shape(first);
        }
        if xi >= last {
            return self.susceptibility[n - 1] * (last / xi) * (last / xi);
        }
        let i = self.xi.partition_point(|&x| x <= xi);
        let (x0, x1) = (self.xi[i - 1], self.xi[i]);
        let (c0, c1) = (self.susceptibility[i - 1], self.susceptibility[i]);
        let t = (xi / x0).ln() / (x1 / x0).ln();
        (c0.ln() + t * (c1 / c0).ln()).exp()
    }
}

/// Tabulated mirror: raw absorption data or a pre-continued `eps(i xi)` grid.
#[derive(Debug, Clone, PartialEq)]
pub enum TabulatedResponse {
    KramersKronig(OpticalDataTable),
    ImaginaryAxis(ImaginaryAxisTable),
}

impl TabulatedResponse {
    pub fn omega_p(&self) -> f64 {
        match self {
            TabulatedResponse::KramersKronig(t) => t.omega_p,
            TabulatedResponse::ImaginaryAxis(t) => t.omega_p,
        }
    }

    pub fn gamma(&self) -> f64 {
        match self {
            TabulatedResponse::KramersKronig(t) => t.gamma,
            TabulatedResponse::ImaginaryAxis(t) => t.gamma,
        }
    }

    pub fn epsilon(&self, xi: f64, cfg: &QuadratureConfig) -> Result<f64> {
        match self {
            TabulatedResponse::KramersKronig(t) => t.continuation(xi, cfg),
            TabulatedResponse::ImaginaryAxis(t) => Ok(1.0 + t.susceptibility(xi)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const WP: f64 = 1.37e16;
    const GAMMA: f64 = 5.32e13;

    fn drude_im(w: f64) -> f64 {
        WP * WP * GAMMA / (w * (w * w + GAMMA * GAMMA))
    }

    fn drude_table(lo: f64, hi: f64, n: usize) -> OpticalDataTable {
        let rows: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let w = (lo.ln() + (hi / lo).ln() * i as f64 / (n - 1) as f64).exp();
                (w, drude_im(w))
            })
            .collect();
        OpticalDataTable::new(&rows, WP, GAMMA).unwrap()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig {
            rel_tol: 1e-10,
            ..Default::default()
        }
    }

    #[test]
    fn recovers_analytic_drude() {
        let table = drude_table(1e11, 1e19, 401);
        for i in 0..=16 {
            let xi = 1e13 * 10f64.powf(i as f64 * 0.25);
            let eps = table.continuation(xi, &cfg()).unwrap();
            let exact = 1.0 + WP * WP / (xi * (xi + GAMMA));
            assert!(((eps - exact) / exact).abs() < 1e-3, "xi {xi:e}: {eps} vs {exact}");
        }
    }

    #[test]
    fn monotone_and_transparent() {
        let table = drude_table(1e12, 1e18, 120);
        let mut prev = f64::INFINITY;
        for i in 0..30 {
            let xi = 1e11 * 10f64.powf(i as f64 * 0.3);
            let e = table.continuation(xi, &cfg()).unwrap();
            assert!(e > 1.0 && e < prev, "xi {xi:e}");
            prev = e;
        }
        assert!(table.continuation(1e24, &cfg()).unwrap() - 1.0 < 1e-10);
        assert!(table.continuation(0.0, &cfg()).is_err());
    }

    #[test]
    fn absorption_interpolation() {
        let table = drude_table(1e12, 1e18, 61);
        // below the data the Drude extension is exact
        assert_eq!(table.absorption(1e10), drude_im(1e10));
        // at the nodes the data is reproduced
        let (lo, _) = table.frequency_range();
        assert!((table.absorption(lo) - drude_im(lo)).abs() / drude_im(lo) < 1e-12);
        assert_eq!(table.absorption(2e18), 0.0);
        let cut = table.clone().with_cutoff(1e17).unwrap();
        assert_eq!(cut.absorption(2e17), 0.0);
        assert!(table.clone().with_cutoff(1e19).is_err());
    }

    #[test]
    fn csv_formats() {
        let mut nk = String::from("# gold-like synthetic data\nomega_rad_s,n,k\n");
        let mut im = String::from("omega_rad_s,eps_imag\n");
        for i in 0..20 {
            let w = 1e12 * 10f64.powf(i as f64 * 0.3);
            let e = drude_im(w);
            // n = 1, k = e / 2 reproduces Im eps = 2 n k
            nk.push_str(&format!("{w:e}, 1.0, {}\n", e / 2.0));
            im.push_str(&format!("{w:e},{e:e}\n"));
        }
        let a = OpticalDataTable::from_csv_str(&nk, WP, GAMMA).unwrap();
        let b = OpticalDataTable::from_csv_str(&im, WP, GAMMA).unwrap();
        assert_eq!(a.len(), 20);
        for i in 0..20 {
            assert!((a.eps_imag[i] - b.eps_imag[i]).abs() <= 1e-15 * b.eps_imag[i]);
        }
    }

    #[test]
    fn csv_errors_carry_row_numbers() {
        let empty = OpticalDataTable::from_csv_str("", WP, GAMMA);
        assert!(matches!(empty, Err(CasimirError::OpticalData { .. })));

        let mut text = String::from("omega_rad_s,eps_imag\n");
        for i in 0..12 {
            let w = if i == 5 { 1.0 } else { 1e12 * 10f64.powf(i as f64 * 0.5) };
            text.push_str(&format!("{w:e},1.0\n"));
        }
        match OpticalDataTable::from_csv_str(&text, WP, GAMMA) {
            Err(CasimirError::OpticalData { row, .. }) => assert_eq!(row, 7),
            other => panic!("{other:?}"),
        }

        let bad = "omega_rad_s,eps_imag\n1e12,abc\n";
        match OpticalDataTable::from_csv_str(bad, WP, GAMMA) {
            Err(CasimirError::OpticalData { row, .. }) => assert_eq!(row, 2),
            other => panic!("{other:?}"),
        }
        let negative = "omega_rad_s,eps_imag\n1e12,-1\n";
        assert!(OpticalDataTable::from_csv_str(negative, WP, GAMMA).is_err());
        assert!(OpticalDataTable::from_csv_str("freq,value\n1,2\n", WP, GAMMA).is_err());

        // too narrow a span
        let narrow: Vec<(f64, f64)> = (0..20).map(|i| (1e14 + i as f64 * 1e13, 1.0)).collect();
        assert!(OpticalDataTable::new(&narrow, WP, GAMMA).is_err());
        let few: Vec<(f64, f64)> = (0..5).map(|i| (10f64.powi(10 + i), 1.0)).collect();
        assert!(OpticalDataTable::new(&few, WP, GAMMA).is_err());
    }

    #[test]
    fn breakdown_fractions() {
        let table = drude_table(1e13, 1e18, 200);
        let b = table.breakdown(1e12, &cfg()).unwrap();
        assert!(b.low_fraction > 0.0 && b.low_fraction < 1.0);
        let hi = b.high_fraction.unwrap();
        assert!((0.0..1e-6).contains(&hi), "{hi}");
        let b2 = table.breakdown(1e17, &cfg()).unwrap();
        assert!(b2.low_fraction < b.low_fraction);
    }

    #[test]
    fn imaginary_axis_round_trip() {
        let samples: Vec<(f64, f64)> = (0..50)
            .map(|i| {
                let xi = 1e12 * 10f64.powf(i as f64 * 6.0 / 49.0);
                (xi, 1.0 + WP * WP / (xi * (xi + GAMMA)))
            })
            .collect();
        let t = ImaginaryAxisTable::new(&samples, WP, GAMMA).unwrap();
        let text = t.to_csv_string();
        let back = ImaginaryAxisTable::from_csv_str(&text, None).unwrap();
        for (a, b) in t.samples().zip(back.samples()) {
            assert!((a.0 - b.0).abs() <= 1e-11 * a.0 && (a.1 - b.1).abs() <= 1e-11 * a.1);
        }
        // Drude-shaped extrapolation is exact for Drude data
        let below = 1e10;
        let exact = WP * WP / (below * (below + GAMMA));
        assert!((t.susceptibility(below) - exact).abs() / exact < 1e-12);
        assert!(ImaginaryAxisTable::from_csv_str("xi_rad_s,eps_imag_axis\n1e12,5\n2e12,4\n", None).is_err());
    }
}
