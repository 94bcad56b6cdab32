//! The `torus-git` command line.
//!
//! Exit codes: 0 success, 1 internal invariant breach (including failed
//! verification suites), 2 input error, 3 I/O error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::cone::Cone2;
use crate::graded::{find_invariant_monomial, hilbert_table};
use crate::harness::{self, ComplexVec3, TrialConfig};
use crate::stability::{
    check_star, check_star_prime, classify_cone, classify_hm, r0_is_trivial,
    weights_from_biquotient, StabilityClass, SupportPattern, WeightDatum,
};
use crate::vec2::IntVec2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "torus-git",
    version,
    about = "GIT stability for rank-2 torus actions on the closure of SL(3,C)/U"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fan conditions, the 64-pattern stability table, and optional Hilbert dimensions.
    Analyze(AnalyzeArgs),
    /// Run a randomized or exhaustive verification suite.
    Verify(VerifyArgs),
    /// Draw the weight rays and the character as SVG.
    FanSvg(FanSvgArgs),
    /// Tabulate dim R^χ_n for n = 0..nmax.
    Hilbert(HilbertArgs),
    /// Analyze the datum derived from left/right circle weights wL, wR.
    Biquotient(AnalyzeArgs),
    /// Evaluate the moment map at the point (z, w) given in the config.
    Moment(MomentArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub config: PathBuf,
    #[arg(long)]
    pub json: bool,
    /// Accept data whose sums A_i + B_i differ.
    #[arg(long)]
    pub no_constraint: bool,
    /// Also tabulate graded dimensions up to this degree.
    #[arg(long)]
    pub nmax: Option<u64>,
    /// Write the report here as well as to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    MainTheorem,
    StarEquivalence,
    Intcone,
    HmReduction,
    R0,
    OracleEquivalence,
    Moment,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// Coordinate bound; `intcone` runs exhaustively when this is at most 6.
    #[arg(long, default_value_t = 20)]
    pub bound: i64,
    #[arg(long)]
    pub no_constraint: bool,
    /// Largest |α|∞ in the hm-reduction sweep.
    #[arg(long, default_value_t = 50)]
    pub sweep_bound: i64,
}

#[derive(Debug, Args)]
pub struct FanSvgArgs {
    pub config: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Shade Int cone(A_i, B_j) for i ≠ j.
    #[arg(long)]
    pub shade: bool,
    #[arg(long)]
    pub no_constraint: bool,
}

#[derive(Debug, Args)]
pub struct HilbertArgs {
    pub config: PathBuf,
    #[arg(long, default_value_t = 6)]
    pub nmax: u64,
    #[arg(long)]
    pub no_constraint: bool,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    pub config: PathBuf,
    #[arg(long)]
    pub json: bool,
    #[arg(long)]
    pub no_constraint: bool,
}

/// An integer read from JSON as a number or a decimal string and written back
/// as a number when it fits in `i64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = JsonInt;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<JsonInt, E> {
                Err(E::custom(format!(
                    "{v} is not an exact integer; pass large values as decimal strings"
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.trim()
                    .parse::<BigInt>()
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("{v:?} is not a decimal integer")))
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

pub type JsonVec = [JsonInt; 2];

fn to_vec2(v: &JsonVec) -> IntVec2 {
    IntVec2 {
        x: v[0].0.clone(),
        y: v[1].0.clone(),
    }
}

fn to_json(v: &IntVec2) -> JsonVec {
    [JsonInt(v.x.clone()), JsonInt(v.y.clone())]
}

fn to_vec3(v: &[JsonVec; 3]) -> [IntVec2; 3] {
    [to_vec2(&v[0]), to_vec2(&v[1]), to_vec2(&v[2])]
}

fn to_json3(v: &[IntVec2; 3]) -> [JsonVec; 3] {
    [to_json(&v[0]), to_json(&v[1]), to_json(&v[2])]
}

/// Input document. Either `A`, `B`, `C` or `wL`, `wR` must be present; `z`
/// and `w` are `[re, im]` pairs used by `moment`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(rename = "A")]
    pub a: Option<[JsonVec; 3]>,
    #[serde(rename = "B")]
    pub b: Option<[JsonVec; 3]>,
    #[serde(rename = "C")]
    pub c: Option<JsonVec>,
    #[serde(rename = "wL")]
    pub wl: Option<[JsonVec; 3]>,
    #[serde(rename = "wR")]
    pub wr: Option<[JsonVec; 3]>,
    pub z: Option<[[f64; 2]; 3]>,
    pub w: Option<[[f64; 2]; 3]>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The datum from `A`, `B`, `C`, or else from `wL`, `wR`.
    pub fn datum(&self, no_constraint: bool) -> Result<WeightDatum, CliError> {
        let invalid =
            |e: crate::stability::DatumError| CliError::Input(format!("invalid datum: {e}"));
        match (&self.a, &self.b, &self.c) {
            (Some(a), Some(b), Some(c)) => {
                let (a, b, c) = (to_vec3(a), to_vec3(b), to_vec2(c));
                if no_constraint {
                    WeightDatum::unconstrained(a, b, c).map_err(invalid)
                } else {
                    WeightDatum::new(a, b, c).map_err(|e| {
                        CliError::Input(format!(
                            "invalid datum: {e} (use --no-constraint to waive)"
                        ))
                    })
                }
            }
            (None, None, None) => match self.biquotient_weights() {
                Some((wl, wr)) => weights_from_biquotient(&wl, &wr).map_err(invalid),
                None => Err(CliError::Input(
                    "config needs \"A\", \"B\", \"C\" or \"wL\", \"wR\"".into(),
                )),
            },
            _ => Err(CliError::Input(
                "\"A\", \"B\" and \"C\" must be given together".into(),
            )),
        }
    }

    fn biquotient_weights(&self) -> Option<([IntVec2; 3], [IntVec2; 3])> {
        Some((to_vec3(self.wl.as_ref()?), to_vec3(self.wr.as_ref()?)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatumEcho {
    #[serde(rename = "A")]
    pub a: [JsonVec; 3],
    #[serde(rename = "B")]
    pub b: [JsonVec; 3],
    #[serde(rename = "C")]
    pub c: JsonVec,
    pub constraint_waived: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternRow {
    pub z_support: Vec<u8>,
    pub w_support: Vec<u8>,
    pub realizable: bool,
    pub in_m: bool,
    pub class_hm: StabilityClass,
    pub class_cone: StabilityClass,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BiquotientEcho {
    #[serde(rename = "wL")]
    pub wl: [JsonVec; 3],
    #[serde(rename = "wR")]
    pub wr: [JsonVec; 3],
    /// Whether the derived datum satisfies the fan condition. No further
    /// conclusions are drawn.
    pub fan_condition_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub datum: DatumEcho,
    pub apex: bool,
    pub star: bool,
    pub star_prime: bool,
    pub r0_trivial: bool,
    pub pattern_table: Vec<PatternRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub biquotient: Option<BiquotientEcho>,
}

impl AnalysisReport {
    /// Builds the report and enforces its cross-oracle invariants.
    pub fn build(d: &WeightDatum, nmax: Option<u64>) -> Result<Self, CliError> {
        let pattern_table: Vec<PatternRow> = SupportPattern::all()
            .map(|s| PatternRow {
                z_support: s.z_indices().map(|i| i as u8 + 1).collect(),
                w_support: s.w_indices().map(|i| i as u8 + 1).collect(),
                realizable: s.is_realizable(),
                in_m: s.is_pattern_of_m(),
                class_hm: classify_hm(d, s),
                class_cone: classify_cone(d, s),
            })
            .collect();
        let split: Vec<String> = SupportPattern::all()
            .zip(&pattern_table)
            .filter(|(_, r)| r.class_hm != r.class_cone)
            .map(|(s, r)| format!("{s} (hm {}, cone {})", r.class_hm, r.class_cone))
            .collect();
        if !split.is_empty() {
            return Err(CliError::Internal(format!(
                "stability classifiers disagree on {}; this happens when some σ_{{z,w}} has a zero weight or no apex, for {d}",
                split.join(", ")
            )));
        }
        let (star, star_prime) = (check_star(d), check_star_prime(d));
        if star != star_prime {
            return Err(CliError::Internal(format!(
                "fan condition {star} but primed form {star_prime} for {d}"
            )));
        }
        let r0_trivial = r0_is_trivial(d);
        let hilbert = match nmax {
            Some(n) if r0_trivial => {
                Some(hilbert_table(d, n).map_err(|e| CliError::Internal(e.to_string()))?)
            }
            _ => None,
        };
        Ok(Self {
            datum: DatumEcho {
                a: to_json3(d.a()),
                b: to_json3(d.b()),
                c: to_json(d.c()),
                constraint_waived: d.constraint_waived(),
            },
            apex: d.sigma_total().has_apex(),
            star,
            star_prime,
            r0_trivial,
            pattern_table,
            hilbert,
            biquotient: None,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let vec = |v: &JsonVec| format!("({}, {})", v[0].0, v[1].0);
        let vec3 = |v: &[JsonVec; 3]| v.iter().map(vec).collect::<Vec<_>>().join(", ");
        let mut out = String::new();
        let d = &self.datum;
        let _ = writeln!(out, "A = [{}]", vec3(&d.a));
        let _ = writeln!(out, "B = [{}]", vec3(&d.b));
        let _ = writeln!(out, "C = {}", vec(&d.c));
        if d.constraint_waived {
            let _ = writeln!(out, "(A+B constraint waived)");
        }
        if let Some(bq) = &self.biquotient {
            let _ = writeln!(out, "wL = [{}]", vec3(&bq.wl));
            let _ = writeln!(out, "wR = [{}]", vec3(&bq.wr));
            let _ = writeln!(
                out,
                "biquotient hypothesis (fan condition) holds: {}",
                yn(bq.fan_condition_holds)
            );
        }
        let _ = writeln!(out, "Sigma has apex:         {}", yn(self.apex));
        let _ = writeln!(out, "fan condition (star):   {}", yn(self.star));
        let _ = writeln!(out, "primed condition:       {}", yn(self.star_prime));
        let _ = writeln!(out, "R_0 = C:                {}", yn(self.r0_trivial));
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{:<8} {:<8} {:<11} {:<5} {:<20} cone",
            "z", "w", "realizable", "in M", "hm"
        );
        let set = |ix: &[u8]| {
            format!(
                "{{{}}}",
                ix.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
            )
        };
        for r in &self.pattern_table {
            let _ = writeln!(
                out,
                "{:<8} {:<8} {:<11} {:<5} {:<20} {}",
                set(&r.z_support),
                set(&r.w_support),
                yn(r.realizable),
                yn(r.in_m),
                r.class_hm.to_string(),
                r.class_cone
            );
        }
        if let Some(h) = &self.hilbert {
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "hilbert: {}",
                h.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
            );
        }
        out
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Io(e.to_string()))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn report_output(
    report: &AnalysisReport,
    args: &AnalyzeArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let text = if args.json {
        report.to_json()
    } else {
        report.to_text()
    };
    emit(out, &text)?;
    if let Some(path) = &args.out {
        write_file(path, &text)?;
    }
    Ok(())
}

pub fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let d = Config::load(&args.config)?.datum(args.no_constraint)?;
    let report = AnalysisReport::build(&d, args.nmax)?;
    report_output(&report, args, out)
}

pub fn cmd_biquotient(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = Config::load(&args.config)?;
    let (wl, wr) = cfg
        .biquotient_weights()
        .ok_or_else(|| CliError::Input("biquotient needs \"wL\" and \"wR\"".into()))?;
    let d = weights_from_biquotient(&wl, &wr)
        .map_err(|e| CliError::Input(format!("invalid biquotient weights: {e}")))?;
    let mut report = AnalysisReport::build(&d, args.nmax)?;
    report.biquotient = Some(BiquotientEcho {
        wl: to_json3(&wl),
        wr: to_json3(&wr),
        fan_condition_holds: report.star,
    });
    report_output(&report, args, out)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.bound <= 0 || args.trials == 0 {
        return Err(CliError::Input(
            "--bound and --trials must be positive".into(),
        ));
    }
    let cfg = TrialConfig {
        seed: args.seed,
        trials: args.trials,
        coord_bound: args.bound,
        enforce_constraint: !args.no_constraint,
    };
    let report = match args.suite {
        Suite::MainTheorem => harness::verify_main_theorem(&cfg),
        Suite::StarEquivalence => harness::verify_star_equivalence(&cfg),
        Suite::Intcone if args.bound <= 6 => harness::verify_intcone_exhaustive(args.bound),
        Suite::Intcone => harness::verify_intcone(&cfg),
        Suite::HmReduction => harness::verify_hm_reduction(&cfg, args.sweep_bound),
        Suite::R0 => harness::verify_r0(&cfg),
        Suite::OracleEquivalence => harness::verify_oracle_equivalence(&cfg),
        Suite::Moment => {
            let m = harness::check_moment_map(&cfg);
            let ok = m.homogeneity <= 1e-12 && m.invariance <= 1e-12;
            emit(
                out,
                &format!(
                    "moment: {} ({} points, max relative error: homogeneity {:.3e}, invariance {:.3e}, seed {})\n",
                    if ok { "PASS" } else { "FAIL" },
                    m.points,
                    m.homogeneity,
                    m.invariance,
                    cfg.seed
                ),
            )?;
            return if ok {
                Ok(())
            } else {
                Err(CliError::Internal(
                    "moment map checks exceeded 1e-12".into(),
                ))
            };
        }
    };
    emit(out, &format!("{report}\n"))?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Internal(format!(
            "{} disagreements in {}",
            report.disagreements, report.suite
        )))
    }
}

pub fn cmd_hilbert(args: &HilbertArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let d = Config::load(&args.config)?.datum(args.no_constraint)?;
    if !r0_is_trivial(&d) {
        let witness = find_invariant_monomial(&d)
            .map(|m| m.to_string())
            .unwrap_or_else(|| "none found".into());
        return Err(CliError::Input(format!(
            "R_0 is not C, so the graded pieces are infinite-dimensional; invariant monomial: {witness}"
        )));
    }
    let table = hilbert_table(&d, args.nmax).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut text = String::from("n\tdim\n");
    for (n, dim) in table.iter().enumerate() {
        let _ = writeln!(text, "{n}\t{dim}");
    }
    emit(out, &text)
}

fn complex3(v: &[[f64; 2]; 3]) -> ComplexVec3 {
    ComplexVec3(v.map(|[re, im]| Complex64::new(re, im)))
}

pub fn cmd_moment(args: &MomentArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = Config::load(&args.config)?;
    let d = cfg.datum(args.no_constraint)?;
    let (z, w) = match (&cfg.z, &cfg.w) {
        (Some(z), Some(w)) => (complex3(z), complex3(w)),
        _ => {
            return Err(CliError::Input(
                "moment needs \"z\" and \"w\" as three [re, im] pairs each".into(),
            ))
        }
    };
    let m = harness::moment_map(&d, &z, &w);
    let text = if args.json {
        serde_json::to_string_pretty(&serde_json::json!({
            "phi": [m.phi.0, m.phi.1],
            "residual": m.residual,
        }))
        .expect("serializes")
            + "\n"
    } else {
        format!(
            "phi = ({}, {})\nresidual |sum z_i w_i| = {}\n",
            m.phi.0, m.phi.1, m.residual
        )
    };
    emit(out, &text)
}

/// Deterministic SVG of the six weight rays and `C`, each normalized to the
/// same display length.
pub fn render_fan_svg(d: &WeightDatum, shade: bool) -> String {
    const SIZE: f64 = 400.0;
    const CENTER: f64 = 200.0;
    const RADIUS: f64 = 150.0;
    let unit = |v: &IntVec2| {
        let (x, y) = v.to_f64();
        let n = x.hypot(y);
        (x / n, y / n)
    };
    // Screen coordinates have y pointing down.
    let screen = |(ux, uy): (f64, f64), r: f64, off: (f64, f64)| {
        (CENTER + ux * r + off.0, CENTER - uy * r + off.1)
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r##"  <line x1="0" y1="{CENTER}" x2="{SIZE}" y2="{CENTER}" stroke="#dddddd"/>"##
    );
    let _ = writeln!(
        s,
        r##"  <line x1="{CENTER}" y1="0" x2="{CENTER}" y2="{SIZE}" stroke="#dddddd"/>"##
    );

    if shade {
        for i in 0..3 {
            for j in (0..3).filter(|&j| j != i) {
                let (a, b) = (&d.a()[i], &d.b()[j]);
                let cone = Cone2::new(vec![a.clone(), b.clone()]);
                if cone.linear_hull_dim() < 2 {
                    continue;
                }
                let (start, end) = if a.cross(b).is_positive() {
                    (a, b)
                } else {
                    (b, a)
                };
                let p0 = screen(unit(start), RADIUS, (0.0, 0.0));
                let p1 = screen(unit(end), RADIUS, (0.0, 0.0));
                let _ = writeln!(
                    s,
                    r##"  <path d="M {CENTER:.3} {CENTER:.3} L {:.3} {:.3} A {RADIUS:.3} {RADIUS:.3} 0 0 0 {:.3} {:.3} Z" fill="#ffbf00" fill-opacity="0.08"><title>Int cone(A{}, B{})</title></path>"##,
                    p0.0,
                    p0.1,
                    p1.0,
                    p1.1,
                    i + 1,
                    j + 1
                );
            }
        }
    }

    let mut drawn: Vec<IntVec2> = Vec::new();
    let rays = d
        .a()
        .iter()
        .enumerate()
        .map(|(i, v)| (format!("A{}", i + 1), v, "#1f77b4"))
        .chain(
            d.b()
                .iter()
                .enumerate()
                .map(|(j, v)| (format!("B{}", j + 1), v, "#2ca02c")),
        );
    for (name, v, color) in rays {
        if v.is_zero() {
            let _ = writeln!(
                s,
                "  <!-- warning: {name} is the zero vector; ray omitted -->"
            );
            continue;
        }
        let dir = v.primitive();
        let dup = drawn.iter().filter(|p| **p == dir).count();
        drawn.push(dir);
        let u = unit(v);
        // Coincident rays are shifted sideways by 4px each.
        let k = dup as f64 * 4.0;
        let off = (-u.1 * k, -u.0 * k);
        let (x0, y0) = screen(u, 0.0, off);
        let (x1, y1) = screen(u, RADIUS, off);
        let (lx, ly) = screen(u, RADIUS + 14.0, (off.0 * 3.0, off.1 * 3.0));
        let note = if dup > 0 { " (coincident)" } else { "" };
        let _ = writeln!(
            s,
            r#"  <line x1="{x0:.3}" y1="{y0:.3}" x2="{x1:.3}" y2="{y1:.3}" stroke="{color}" stroke-width="2"/>"#
        );
        let _ = writeln!(
            s,
            r#"  <text x="{lx:.3}" y="{ly:.3}" font-family="sans-serif" font-size="12" fill="{color}" text-anchor="middle">{name}{note}</text>"#
        );
    }

    let u = unit(d.c());
    let (x1, y1) = screen(u, RADIUS * 0.8, (0.0, 0.0));
    let (lx, ly) = screen(u, RADIUS * 0.8 + 14.0, (0.0, 0.0));
    let _ = writeln!(
        s,
        r##"  <line x1="{CENTER:.3}" y1="{CENTER:.3}" x2="{x1:.3}" y2="{y1:.3}" stroke="#d62728" stroke-width="4"/>"##
    );
    let _ = writeln!(
        s,
        r##"  <text x="{lx:.3}" y="{ly:.3}" font-family="sans-serif" font-size="13" font-weight="bold" fill="#d62728" text-anchor="middle">C</text>"##
    );
    let _ = writeln!(s, "</svg>");
    s
}

pub fn cmd_fan_svg(args: &FanSvgArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let d = Config::load(&args.config)?.datum(args.no_constraint)?;
    let svg = render_fan_svg(&d, args.shade);
    match &args.out {
        Some(path) => write_file(path, &svg),
        None => emit(out, &svg),
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::FanSvg(a) => cmd_fan_svg(a, out),
        Command::Hilbert(a) => cmd_hilbert(a, out),
        Command::Biquotient(a) => cmd_biquotient(a, out),
        Command::Moment(a) => cmd_moment(a, out),
    }
}

/// Parses `args`, runs the command against `out`, reports errors on stderr,
/// and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("torus-git: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FLAG: &str = r#"{"A": [[1,0],[1,0],[1,0]], "B": [[0,1],[0,1],[0,1]], "C": [1,1]}"#;

    #[test]
    fn config_accepts_numbers_and_strings() {
        let cfg = Config::parse(
            r#"{"A": [[1,0],[1,0],["100000000000000000000000",0]], "B": [[0,1],[0,1],[0,1]], "C": [1,"1"]}"#,
        )
        .unwrap();
        assert_eq!(
            cfg.a.as_ref().unwrap()[2][0].0.to_string(),
            "100000000000000000000000"
        );
        assert!(Config::parse(
            r#"{"A": [[1.5,0],[1,0],[1,0]], "B": [[0,1],[0,1],[0,1]], "C": [1,1]}"#
        )
        .is_err());
        assert!(Config::parse(r#"{"A": [[1,0]]}"#).is_err());
        assert!(Config::parse(r#"{"Q": 1}"#).is_err());
    }

    #[test]
    fn datum_errors_are_input_errors() {
        let zero_c =
            Config::parse(r#"{"A": [[1,0],[1,0],[1,0]], "B": [[0,1],[0,1],[0,1]], "C": [0,0]}"#)
                .unwrap();
        let err = zero_c.datum(false).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("χ is nontrivial"));

        let unbalanced =
            Config::parse(r#"{"A": [[1,0],[1,0],[1,0]], "B": [[0,1],[0,1],[1,1]], "C": [1,1]}"#)
                .unwrap();
        assert_eq!(unbalanced.datum(false).unwrap_err().exit_code(), 2);
        assert!(unbalanced.datum(true).unwrap().constraint_waived());
    }

    #[test]
    fn flag_report() {
        let d = Config::parse(FLAG).unwrap().datum(false).unwrap();
        let r = AnalysisReport::build(&d, Some(3)).unwrap();
        assert!(r.star && r.star_prime && r.apex && r.r0_trivial);
        assert_eq!(r.hilbert, Some(vec![1, 8, 27, 64]));
        let singles = r.pattern_table.iter().filter(|row| {
            row.z_support.len() == 1 && row.w_support.len() == 1 && row.z_support != row.w_support
        });
        assert_eq!(singles.clone().count(), 6);
        assert!(singles
            .into_iter()
            .all(|row| row.class_hm == StabilityClass::Stable));
        assert!(r.to_text().contains("fan condition (star):   yes"));
    }

    #[test]
    fn report_json_round_trips() {
        let d = Config::parse(FLAG).unwrap().datum(false).unwrap();
        let json = AnalysisReport::build(&d, Some(2)).unwrap().to_json();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn split_classifiers_abort() {
        // A₁ = −A₂ puts a line inside σ for z = {1,2}.
        let d = WeightDatum::unconstrained(
            [IntVec2::new(1, 1), IntVec2::new(-1, -1), IntVec2::new(1, 0)],
            [IntVec2::new(0, 1), IntVec2::new(0, 1), IntVec2::new(0, 1)],
            IntVec2::new(1, -3),
        )
        .unwrap();
        let err = AnalysisReport::build(&d, None).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn svg_is_deterministic_and_marks_zero_rays() {
        let d = Config::parse(FLAG).unwrap().datum(false).unwrap();
        let a = render_fan_svg(&d, true);
        assert_eq!(a, render_fan_svg(&d, true));
        assert_eq!(a.matches("<line").count(), 2 + 6 + 1);
        assert_eq!(a.matches("(coincident)").count(), 4);

        let z = WeightDatum::unconstrained(
            [IntVec2::zero(), IntVec2::new(1, 0), IntVec2::new(1, 0)],
            [IntVec2::new(0, 1), IntVec2::new(0, 1), IntVec2::new(0, 1)],
            IntVec2::new(1, 1),
        )
        .unwrap();
        let svg = render_fan_svg(&z, false);
        assert!(svg.contains("<!-- warning: A1 is the zero vector; ray omitted -->"));
        assert_eq!(svg.matches("<line").count(), 2 + 5 + 1);
    }
}
