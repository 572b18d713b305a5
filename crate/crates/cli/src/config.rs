//! Flat `key = value` run configuration with unit-suffixed quantities.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use casimir_core::optics::{ImaginaryAxisTable, TabulatedResponse, IMAGINARY_AXIS_HEADER};
use casimir_core::{
    CrossedCylindersGeometry, MirrorModel, MirrorPair, OpticalDataTable, PlanePlaneGeometry,
    QuadratureConfig, RoughnessProfile, SpherePlaneGeometry, ThermalState, ZeroFrequencyPrescription,
};

use crate::CliError;

const KEYS: &[&str] = &[
    "geometry",
    "area",
    "separation",
    "radius",
    "radius2",
    "mirror",
    "mirror1",
    "mirror2",
    "temperature",
    "zero_frequency",
    "quantity",
    "roughness",
    "rel_tol",
    "abs_tol",
    "max_depth",
    "matsubara_max_terms",
    "out",
];

#[derive(Debug, Clone, PartialEq)]
pub enum GeometrySpec {
    PlanePlane(PlanePlaneGeometry),
    SpherePlane(SpherePlaneGeometry),
    CrossedCylinders(CrossedCylindersGeometry),
}

impl GeometrySpec {
    pub fn separation(&self) -> f64 {
        match self {
            GeometrySpec::PlanePlane(g) => g.separation(),
            GeometrySpec::SpherePlane(g) => g.separation(),
            GeometrySpec::CrossedCylinders(g) => g.separation(),
        }
    }

    pub fn with_separation(&self, l: f64) -> casimir_core::Result<Self> {
        Ok(match self {
            GeometrySpec::PlanePlane(g) => GeometrySpec::PlanePlane(g.with_separation(l)?),
            GeometrySpec::SpherePlane(g) => GeometrySpec::SpherePlane(SpherePlaneGeometry::new(g.radius(), l)?),
            GeometrySpec::CrossedCylinders(g) => {
                let (r1, r2) = g.radii();
                GeometrySpec::CrossedCylinders(CrossedCylindersGeometry::new(r1, r2, l)?)
            }
        })
    }

    pub fn describe(&self) -> String {
        match self {
            GeometrySpec::PlanePlane(g) => {
                format!("plane-plane, A = {:.4e} m^2, L = {:.4e} m", g.area(), g.separation())
            }
            GeometrySpec::SpherePlane(g) => {
                format!("sphere-plane, R = {:.4e} m, L = {:.4e} m", g.radius(), g.separation())
            }
            GeometrySpec::CrossedCylinders(g) => {
                let (r1, r2) = g.radii();
                format!("crossed cylinders, R1 = {r1:.4e} m, R2 = {r2:.4e} m, L = {:.4e} m", g.separation())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QuantityChoice {
    #[default]
    Force,
    Energy,
}

/// Everything a command needs, already validated.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub geometry: GeometrySpec,
    pub mirrors: MirrorPair,
    pub mirror_labels: (String, String),
    pub thermal: ThermalState,
    pub quantity: QuantityChoice,
    pub roughness: Option<RoughnessProfile>,
    pub quadrature: QuadratureConfig,
    pub out: Option<PathBuf>,
}

/// Raw settings in file order, then overridden by flags.
#[derive(Debug, Clone, Default)]
pub struct Settings {
    values: BTreeMap<String, (String, Origin)>,
    base_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
enum Origin {
    Line(usize),
    Flag,
}

impl Origin {
    fn describe(&self, key: &str) -> String {
        match self {
            Origin::Line(n) => format!("line {n} ({key})"),
            Origin::Flag => format!("flag --{}", key.replace('_', "-")),
        }
    }
}

impl Settings {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {line_no}: expected 'key = value'")))?;
            let key = key.trim().to_ascii_lowercase();
            if !KEYS.contains(&key.as_str()) {
                return Err(CliError::Config(format!("line {line_no}: unknown key '{key}'")));
            }
            values.insert(key, (value.trim().to_string(), Origin::Line(line_no)));
        }
        Ok(Self { values, base_dir: None })
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut s = Self::parse(&text).map_err(|e| match e {
            CliError::Config(m) => CliError::Config(format!("{}: {m}", path.display())),
            other => other,
        })?;
        s.base_dir = path.parent().map(Path::to_path_buf);
        Ok(s)
    }

    pub fn set(&mut self, key: &str, value: impl Into<String>) -> Result<(), CliError> {
        let key = key.to_ascii_lowercase().replace('-', "_");
        if !KEYS.contains(&key.as_str()) {
            return Err(CliError::Config(format!("unknown key '{key}'")));
        }
        self.values.insert(key, (value.into(), Origin::Flag));
        Ok(())
    }

    fn get(&self, key: &str) -> Option<(&str, String)> {
        self.values.get(key).map(|(v, o)| (v.as_str(), o.describe(key)))
    }

    fn quantity_of(&self, key: &str, unit: Unit) -> Result<Option<f64>, CliError> {
        match self.get(key) {
            None => Ok(None),
            Some((v, at)) => parse_quantity(v, unit)
                .map(Some)
                .map_err(|m| CliError::Config(format!("{at}: {m}"))),
        }
    }

    fn required(&self, key: &str, unit: Unit) -> Result<f64, CliError> {
        self.quantity_of(key, unit)?
            .ok_or_else(|| CliError::Config(format!("missing required key '{key}'")))
    }

    fn resolve(&self, path: &str) -> PathBuf {
        let p = PathBuf::from(path);
        match &self.base_dir {
            Some(dir) if p.is_relative() => dir.join(p),
            _ => p,
        }
    }

    /// Validate into a [`RunConfig`]. No computation happens here.
    pub fn build(&self) -> Result<RunConfig, CliError> {
        let field = |at: String| move |e: casimir_core::CasimirError| CliError::Config(format!("{at}: {e}"));
        let separation = self.required("separation", Unit::Length)?;
        let sep_at = self.get("separation").map(|g| g.1).unwrap_or_default();
        let kind = self.get("geometry").map(|g| g.0).unwrap_or("plane-plane");
        let geometry = match kind {
            "plane-plane" => {
                let area = self.quantity_of("area", Unit::Area)?.unwrap_or(1e-4);
                GeometrySpec::PlanePlane(PlanePlaneGeometry::new(area, separation).map_err(field(sep_at))?)
            }
            "sphere-plane" => {
                let radius = self.required("radius", Unit::Length)?;
                GeometrySpec::SpherePlane(SpherePlaneGeometry::new(radius, separation).map_err(field(sep_at))?)
            }
            "crossed-cylinders" => {
                let r1 = self.required("radius", Unit::Length)?;
                let r2 = self.quantity_of("radius2", Unit::Length)?.unwrap_or(r1);
                GeometrySpec::CrossedCylinders(
                    CrossedCylindersGeometry::new(r1, r2, separation).map_err(field(sep_at))?,
                )
            }
            other => {
                let at = self.get("geometry").map(|g| g.1).unwrap_or_default();
                return Err(CliError::Config(format!(
                    "{at}: unknown geometry '{other}' (plane-plane, sphere-plane, crossed-cylinders)"
                )));
            }
        };

        let both = self.get("mirror");
        let pick = |key: &str| self.get(key).or_else(|| both.clone());
        let (spec1, at1) = pick("mirror1").unwrap_or(("perfect", "default".into()));
        let (spec2, at2) = pick("mirror2").unwrap_or((spec1, at1.clone()));
        let spec2 = if spec2 == "same" { spec1 } else { spec2 };
        let first = parse_mirror(spec1, self).map_err(|m| CliError::Config(format!("{at1}: {m}")))?;
        let second = if spec2 == spec1 {
            first.clone()
        } else {
            parse_mirror(spec2, self).map_err(|m| CliError::Config(format!("{at2}: {m}")))?
        };

        let zero_frequency = match self.get("zero_frequency") {
            None => ZeroFrequencyPrescription::Plasma,
            Some(("plasma", _)) => ZeroFrequencyPrescription::Plasma,
            Some(("drude", _)) => ZeroFrequencyPrescription::Drude,
            Some((v, at)) => {
                return Err(CliError::Config(format!("{at}: expected 'plasma' or 'drude', got '{v}'")))
            }
        };
        let mirrors = MirrorPair::new(first, second).with_zero_frequency(zero_frequency);

        let t = self.quantity_of("temperature", Unit::Temperature)?.unwrap_or(0.0);
        let thermal = ThermalState::new(t).map_err(field(
            self.get("temperature").map(|g| g.1).unwrap_or_default(),
        ))?;

        let quantity = match self.get("quantity") {
            None | Some(("force", _)) => QuantityChoice::Force,
            Some(("energy", _)) => QuantityChoice::Energy,
            Some((v, at)) => return Err(CliError::Config(format!("{at}: expected 'force' or 'energy', got '{v}'"))),
        };
        if quantity == QuantityChoice::Energy && !matches!(geometry, GeometrySpec::PlanePlane(_)) {
            return Err(CliError::Config("quantity = energy needs the plane-plane geometry".into()));
        }

        let roughness = match self.get("roughness") {
            None => None,
            Some((v, at)) => Some(parse_roughness(v).map_err(|m| CliError::Config(format!("{at}: {m}")))?),
        };
        if let Some(profile) = &roughness {
            profile
                .validate_at(separation)
                .map_err(field(self.get("roughness").map(|g| g.1).unwrap_or_default()))?;
        }

        let mut quadrature = QuadratureConfig::default();
        if let Some(v) = self.quantity_of("rel_tol", Unit::None)? {
            quadrature.rel_tol = v;
        }
        if let Some(v) = self.quantity_of("abs_tol", Unit::None)? {
            quadrature.abs_tol = v;
        }
        if let Some(v) = self.quantity_of("max_depth", Unit::None)? {
            quadrature.max_depth = v as u32;
        }
        if let Some(v) = self.quantity_of("matsubara_max_terms", Unit::None)? {
            quadrature.matsubara_max_terms = v as usize;
        }
        quadrature
            .validate()
            .map_err(|e| CliError::Config(format!("quadrature settings: {e}")))?;

        Ok(RunConfig {
            geometry,
            mirrors,
            mirror_labels: (spec1.to_string(), spec2.to_string()),
            thermal,
            quantity,
            roughness,
            quadrature,
            out: self.get("out").map(|(v, _)| self.resolve(v)),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Unit {
    None,
    Length,
    Area,
    Temperature,
    Frequency,
}

/// Parse `136nm`, `1 um`, `1cm^2`, `300K`, `5.3e13rad/s`; bare numbers are SI.
pub fn parse_quantity(text: &str, unit: Unit) -> Result<f64, String> {
    let text = text.trim();
    let split = text
        .char_indices()
        .find(|&(i, c)| {
            c.is_alphabetic() && !((c == 'e' || c == 'E') && is_exponent(text, i)) || c == 'µ'
        })
        .map(|(i, _)| i)
        .unwrap_or(text.len());
    let (number, suffix) = text.split_at(split);
    let value: f64 = number
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse number in '{text}'"))?;
    let suffix = suffix.trim();
    // divide by exact powers of ten so that e.g. 136nm is the nearest double to 136e-9
    let divisor = match (unit, suffix) {
        (_, "") => 1.0,
        (Unit::Length, "nm") => 1e9,
        (Unit::Length, "um" | "µm") => 1e6,
        (Unit::Length, "mm") => 1e3,
        (Unit::Length, "cm") => 1e2,
        (Unit::Length, "m") => 1.0,
        (Unit::Area, "um^2" | "µm^2") => 1e12,
        (Unit::Area, "mm^2") => 1e6,
        (Unit::Area, "cm^2") => 1e4,
        (Unit::Area, "m^2") => 1.0,
        (Unit::Temperature, "K") => 1.0,
        (Unit::Frequency, "rad/s") => 1.0,
        _ => return Err(format!("unexpected unit '{suffix}' in '{text}'")),
    };
    let v = value / divisor;
    if !v.is_finite() {
        return Err(format!("'{text}' is not finite"));
    }
    Ok(v)
}

fn is_exponent(text: &str, i: usize) -> bool {
    let rest = &text[i + 1..];
    let prev_digit = text[..i].chars().last().is_some_and(|c| c.is_ascii_digit() || c == '.');
    let next = rest.trim_start_matches(['+', '-']).chars().next();
    prev_digit && next.is_some_and(|c| c.is_ascii_digit())
}

fn options(body: &str) -> Result<BTreeMap<&str, &str>, String> {
    body.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| format!("expected key=value in '{kv}'"))
        })
        .collect()
}

fn plasma_omega(opts: &BTreeMap<&str, &str>) -> Result<f64, String> {
    match (opts.get("lambda"), opts.get("omega")) {
        (Some(l), None) => {
            casimir_core::plasma_frequency(parse_quantity(l, Unit::Length)?).map_err(|e| e.to_string())
        }
        (None, Some(w)) => parse_quantity(w, Unit::Frequency),
        _ => Err("give exactly one of lambda=<length> or omega=<rad/s>".into()),
    }
}

/// `perfect`, `plasma:136nm`, `plasma:omega=1.38e16`, `drude:lambda=136nm,gamma=5.32e13`,
/// `tabulated:file=gold.csv,omega_p=1.37e16,gamma=5.32e13`.
fn parse_mirror(text: &str, settings: &Settings) -> Result<MirrorModel, String> {
    let (kind, body) = text.split_once(':').unwrap_or((text, ""));
    let check_keys = |opts: &BTreeMap<&str, &str>, allowed: &[&str]| {
        opts.keys()
            .find(|k| !allowed.contains(k))
            .map_or(Ok(()), |k| Err(format!("unknown option '{k}' for {kind} mirror")))
    };
    match kind.trim() {
        "perfect" if body.is_empty() => Ok(MirrorModel::PerfectReflector),
        "plasma" => {
            let wp = if body.contains('=') {
                let opts = options(body)?;
                check_keys(&opts, &["lambda", "omega"])?;
                plasma_omega(&opts)?
            } else {
                casimir_core::plasma_frequency(parse_quantity(body, Unit::Length)?).map_err(|e| e.to_string())?
            };
            MirrorModel::plasma(wp).map_err(|e| e.to_string())
        }
        "drude" => {
            let opts = options(body)?;
            check_keys(&opts, &["lambda", "omega", "gamma"])?;
            let gamma = opts.get("gamma").ok_or("drude mirror needs gamma=<rad/s>")?;
            MirrorModel::drude(plasma_omega(&opts)?, parse_quantity(gamma, Unit::Frequency)?)
                .map_err(|e| e.to_string())
        }
        "tabulated" => {
            let opts = options(body)?;
            check_keys(&opts, &["file", "lambda", "omega", "omega_p", "gamma"])?;
            let file = opts.get("file").ok_or("tabulated mirror needs file=<path>")?;
            let mut wopts = opts.clone();
            if let Some(w) = opts.get("omega_p") {
                wopts.insert("omega", w);
            }
            let params = match (wopts.contains_key("lambda") || wopts.contains_key("omega"), opts.get("gamma")) {
                (true, Some(g)) => Some((plasma_omega(&wopts)?, parse_quantity(g, Unit::Frequency)?)),
                (false, None) => None,
                _ => return Err("give both the plasma frequency and gamma, or neither".into()),
            };
            load_tabulated(&settings.resolve(file), params).map(MirrorModel::tabulated)
        }
        other => Err(format!(
            "unknown mirror '{other}' (perfect, plasma:<lambda>, drude:lambda=..,gamma=.., tabulated:file=..)"
        )),
    }
}

/// Reads raw optical data (`omega_rad_s,n,k` or `omega_rad_s,eps_imag`) or an
/// ingested `xi_rad_s,eps_imag_axis` table.
pub fn load_tabulated(path: &Path, params: Option<(f64, f64)>) -> Result<TabulatedResponse, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let is_axis = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.to_ascii_lowercase().replace(' ', "") == IMAGINARY_AXIS_HEADER);
    let described = |e: casimir_core::CasimirError| format!("{}: {e}", path.display());
    if is_axis {
        ImaginaryAxisTable::from_csv_str(&text, params)
            .map(TabulatedResponse::ImaginaryAxis)
            .map_err(described)
    } else {
        let (wp, gamma) = params.ok_or("raw optical data needs omega_p and gamma for the low-frequency extension")?;
        OpticalDataTable::from_csv_str(&text, wp, gamma)
            .map(TabulatedResponse::KramersKronig)
            .map_err(described)
    }
}

/// `gaussian:5nm` or `two-point:5nm`.
fn parse_roughness(text: &str) -> Result<RoughnessProfile, String> {
    let (kind, amount) = text
        .split_once(':')
        .ok_or("roughness must look like gaussian:<rms> or two-point:<amplitude>")?;
    let a = parse_quantity(amount, Unit::Length)?;
    let profile = match kind.trim() {
        "gaussian" => RoughnessProfile::gaussian(a),
        "two-point" => RoughnessProfile::two_point(a),
        other => return Err(format!("unknown roughness profile '{other}'")),
    };
    profile.map_err(|e| e.to_string())
}
