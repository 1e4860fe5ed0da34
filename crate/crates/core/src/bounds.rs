//! Relative parameters, rate/relative-distance trade-off lines, the
//! GV-type curve, and the figure datasets.
//!
//! Every claim-deciding comparison here runs on [`Rational`]; floats appear
//! only in the curve minimization and in serialized output. With locality
//! r = q−1 the two reference lines are
//!
//!   line_tbf:      R = (r/(r+1))·(1 − δ − 3/(q+1))
//!   line_improved: R = (r/(r+1))·(1 − δ − 2/q)
//!
//! and the level-i codes satisfy R + ((q−1)/q)·δ > (r/(r+1))·((q−i)/q) with
//! margin exactly 2/q² at the designed-distance δ.

use std::fmt;
use std::io::{self, Write};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundsError {
    /// (i, l) outside the positive-distance window.
    Window { q: u32, i: usize, l: usize },
    /// q outside the supported odd-prime window for these statements.
    UnsupportedQ { q: u32, needs: &'static str },
    InvalidGrid(String),
    CurvePrecondition(String),
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::Window { q, i, l } => write!(
                f,
                "(i={i}, l={l}) is outside the window 1 <= i <= q-1 = {}, \
                 1 <= l <= (q-1)(q-i) = {} for q={q}",
                q - 1,
                (q - 1) as usize * (*q as usize - i)
            ),
            BoundsError::UnsupportedQ { q, needs } => {
                write!(f, "q={q} unsupported here: needs {needs}")
            }
            BoundsError::InvalidGrid(m) => write!(f, "invalid grid: {m}"),
            BoundsError::CurvePrecondition(m) => write!(f, "curve precondition: {m}"),
        }
    }
}

impl std::error::Error for BoundsError {}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PointKind {
    /// δ is the designed-distance lower bound.
    LowerBound,
    /// δ equals the exact relative distance (witness parameters).
    Exact,
}

impl PointKind {
    pub fn label(&self) -> &'static str {
        match self {
            PointKind::LowerBound => "lower-bound",
            PointKind::Exact => "exact",
        }
    }
}

/// Rate and relative distance of one code, in exact rationals.
#[derive(Copy, Clone, Debug)]
pub struct BoundPoint {
    pub q: u32,
    pub i: usize,
    pub l: usize,
    pub rate: Rational,
    pub delta: Rational,
    pub kind: PointKind,
}

// The relative parameters never materialize a code, so the window check is
// pure arithmetic: levels run to q−1 even where an explicit enumeration
// would be astronomically out of budget.
fn window_check(q: u32, i: usize, l: usize) -> Result<(), BoundsError> {
    let top = (q - 1) as usize;
    if i < 1 || i > top || l < 1 || l > top * (q as usize - i) {
        return Err(BoundsError::Window { q, i, l });
    }
    Ok(())
}

/// Whether (i, l) are parameters of one of the two certified witnesses, so
/// the designed bound is the exact distance.
pub fn witness_parameters(q: u32, i: usize, l: usize) -> bool {
    q >= 5 && i == 2 && (l == q as usize || l == (q * ((q - 1) / 2 - 1)) as usize)
}

/// R = (l+1)/q² and δ = ((q−1)(q−i)−l+1)/(q²−q), exact.
pub fn relative_params(q: u32, i: usize, l: usize) -> Result<BoundPoint, BoundsError> {
    window_check(q, i, l)?;
    let qi = q as i128;
    let rate = Rational::new(l as i128 + 1, qi * qi);
    let delta = Rational::new((qi - 1) * (qi - i as i128) - l as i128 + 1, qi * qi - qi);
    let kind = if witness_parameters(q, i, l) { PointKind::Exact } else { PointKind::LowerBound };
    Ok(BoundPoint { q, i, l, rate, delta, kind })
}

/// R = (r/(r+1))·(1 − δ − 3/(q+1)) with r = q−1.
pub fn line_tbf(q: u32, delta: Rational) -> Rational {
    let qi = q as i128;
    Rational::new(qi - 1, qi)
        * (Rational::one() - delta - Rational::new(3, qi + 1))
}

/// R = (r/(r+1))·(1 − δ − 2/q) with r = q−1.
pub fn line_improved(q: u32, delta: Rational) -> Rational {
    let qi = q as i128;
    Rational::new(qi - 1, qi) * (Rational::one() - delta - Rational::new(2, qi))
}

/// Outcome of the window inequality R + ((q−1)/q)δ > (r/(r+1))·((q−i)/q).
#[derive(Copy, Clone, Debug)]
pub struct MarginReport {
    pub point: BoundPoint,
    pub margin: Rational,
    pub holds: bool,
}

/// Exact margin of the level-i inequality at the designed-distance δ.
/// The margin is 2/q² for every (i, l) in the window.
pub fn window_margin(q: u32, i: usize, l: usize) -> Result<MarginReport, BoundsError> {
    if q < 5 || q.is_multiple_of(2) {
        return Err(BoundsError::UnsupportedQ { q, needs: "odd q >= 5" });
    }
    if i < 2 {
        return Err(BoundsError::Window { q, i, l });
    }
    let point = relative_params(q, i, l)?;
    let qi = q as i128;
    let lhs = point.rate + Rational::new(qi - 1, qi) * point.delta;
    let rhs = Rational::new(qi - 1, qi) * Rational::new(qi - i as i128, qi);
    let margin = lhs - rhs;
    Ok(MarginReport { point, margin, holds: margin.is_positive() })
}

/// The distinguished level-2 point at l = q((q−1)/2 − 1), with its two
/// strict floor inequalities and its exact margin over the level-2 line.
#[derive(Copy, Clone, Debug)]
pub struct SpecialPoint {
    pub point: BoundPoint,
    pub rate_floor: Rational,
    pub delta_floor: Rational,
    pub rate_above_floor: bool,
    pub delta_above_floor: bool,
    /// (R + ((q−1)/q)δ) − (r/(r+1))·((q−2)/q); equals 2/q² exactly.
    pub margin_over_level2_line: Rational,
}

pub fn special_point(q: u32) -> Result<SpecialPoint, BoundsError> {
    if q < 5 || q.is_multiple_of(2) {
        return Err(BoundsError::UnsupportedQ { q, needs: "odd q >= 5" });
    }
    let l = (q * ((q - 1) / 2 - 1)) as usize;
    let point = relative_params(q, 2, l)?;
    let qi = q as i128;
    debug_assert_eq!(point.rate, Rational::new((qi - 1) * (qi - 2), 2 * qi * qi));
    debug_assert_eq!(
        point.delta,
        Rational::new(qi * qi - 3 * qi + 6, 2 * (qi * qi - qi))
    );
    let rate_floor = Rational::new((qi - 2) * (qi - 2), 2 * qi * qi);
    let delta_floor = Rational::new(qi - 3, 2 * (qi - 1));
    let margin = window_margin(q, 2, l)?.margin;
    Ok(SpecialPoint {
        point,
        rate_floor,
        delta_floor,
        rate_above_floor: point.rate > rate_floor,
        delta_above_floor: point.delta > delta_floor,
        margin_over_level2_line: margin,
    })
}

/// One GV-type curve R(δ) sampled on a strictly increasing δ grid.
pub struct BoundCurve {
    pub q: u32,
    pub r: u32,
    pub samples: Vec<(f64, f64)>,
}

fn log_q(q: f64, x: f64) -> f64 {
    x.ln() / q.ln()
}

/// b₂(s) = (1/q)·((1+(q−1)s)^(r+1) + (q−1)(1−s)^(r+1))
fn b2(q: f64, r: u32, s: f64) -> f64 {
    ((1.0 + (q - 1.0) * s).powi(r as i32 + 1) + (q - 1.0) * (1.0 - s).powi(r as i32 + 1)) / q
}

fn curve_objective(q: f64, r: u32, delta: f64, s: f64) -> f64 {
    log_q(q, b2(q, r, s)) / (r as f64 + 1.0) - delta * log_q(q, s)
}

/// Minimizes the objective over s ∈ (0,1]: a 10⁴-point logarithmic grid on
/// [1e−9, 1] followed by golden-section refinement of the bracketing
/// interval down to width 1e−12. The objective is smooth and empirically
/// unimodal there; the grid's lower cap stands in for the s→0 endpoint.
fn minimize_over_s(q: f64, r: u32, delta: f64) -> f64 {
    const GRID: usize = 10_000;
    let s_at = |k: usize| 10f64.powf(-9.0 * (1.0 - k as f64 / (GRID - 1) as f64));
    let mut best_k = 0;
    let mut best = f64::INFINITY;
    for k in 0..GRID {
        let v = curve_objective(q, r, delta, s_at(k));
        if v < best {
            best = v;
            best_k = k;
        }
    }
    let mut lo = s_at(best_k.saturating_sub(1));
    let mut hi = s_at((best_k + 1).min(GRID - 1));
    const PHI_COMP: f64 = 0.381_966_011_250_105; // 2 − golden ratio
    let mut x1 = lo + PHI_COMP * (hi - lo);
    let mut x2 = hi - PHI_COMP * (hi - lo);
    let mut f1 = curve_objective(q, r, delta, x1);
    let mut f2 = curve_objective(q, r, delta, x2);
    while hi - lo > 1e-12 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + PHI_COMP * (hi - lo);
            f1 = curve_objective(q, r, delta, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = hi - PHI_COMP * (hi - lo);
            f2 = curve_objective(q, r, delta, x2);
        }
    }
    best.min(f1).min(f2)
}

/// R(δ) = r/(r+1) − min_s [ log_q b₂(s)/(r+1) − δ·log_q s ], clamped at 0.
pub fn gv_b2_curve(q: u32, r: u32, deltas: &[f64]) -> Result<BoundCurve, BoundsError> {
    if (r + 1) as u64 > (q as u64) * (q as u64) {
        return Err(BoundsError::CurvePrecondition(format!(
            "r+1 = {} exceeds the field size q² = {}",
            r + 1,
            q * q
        )));
    }
    if deltas.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BoundsError::InvalidGrid("delta grid must be strictly increasing".into()));
    }
    if deltas.iter().any(|&d| !(0.0..1.0).contains(&d)) {
        return Err(BoundsError::InvalidGrid("delta grid must lie in [0, 1)".into()));
    }
    let qf = q as f64;
    let base = r as f64 / (r as f64 + 1.0);
    let samples = deltas
        .iter()
        .map(|&d| (d, (base - minimize_over_s(qf, r, d)).max(0.0)))
        .collect();
    Ok(BoundCurve { q, r, samples })
}

/// One row of a figure dataset: the point plus both line values at its δ.
pub struct FigureRow {
    pub point: BoundPoint,
    pub tbf: Rational,
    pub improved: Rational,
    pub special: bool,
}

pub struct FigureData {
    pub q: u32,
    pub rows: Vec<FigureRow>,
    /// Skipped window violations, one message per skipped level.
    pub warnings: Vec<String>,
}

/// Point cloud for the requested levels: every l in the positive window,
/// each row carrying both line values; the distinguished level-2 point is
/// flagged. Levels outside 1..=q−1 are skipped with a warning row.
pub fn figure_dataset(q: u32, levels: &[usize]) -> Result<FigureData, BoundsError> {
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    let special_l = if q >= 5 { (q * ((q - 1) / 2 - 1)) as usize } else { 0 };
    for &i in levels {
        if i < 1 || i > (q - 1) as usize {
            warnings.push(format!("skipped i={i}: valid levels are 1..={}", q - 1));
            continue;
        }
        let l_max = (q as usize - 1) * (q as usize - i);
        for l in 1..=l_max {
            let point = relative_params(q, i, l)?;
            rows.push(FigureRow {
                tbf: line_tbf(q, point.delta),
                improved: line_improved(q, point.delta),
                special: q >= 5 && i == 2 && l == special_l,
                point,
            });
        }
    }
    Ok(FigureData { q, rows, warnings })
}

/// Floats serialize with 12 significant digits everywhere.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{:.11e}", x)
}

/// Bounds CSV:
/// `q,i,l,kind,R_num,R_den,delta_num,delta_den,line_tbf,line_improved`.
/// Warning rows are `#`-prefixed comment lines.
pub fn write_bounds_csv<W: Write>(w: &mut W, data: &FigureData) -> io::Result<()> {
    writeln!(w, "q,i,l,kind,R_num,R_den,delta_num,delta_den,line_tbf,line_improved")?;
    for msg in &data.warnings {
        writeln!(w, "# warning: {msg}")?;
    }
    for row in &data.rows {
        let p = &row.point;
        let kind = if row.special { "exact" } else { p.kind.label() };
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{}",
            p.q,
            p.i,
            p.l,
            kind,
            p.rate.num(),
            p.rate.den(),
            p.delta.num(),
            p.delta.den(),
            fmt_sig12(row.tbf.to_f64()),
            fmt_sig12(row.improved.to_f64())
        )?;
    }
    Ok(())
}

/// Curve CSV: `delta,R`.
pub fn write_curve_csv<W: Write>(w: &mut W, curve: &BoundCurve) -> io::Result<()> {
    writeln!(w, "delta,R")?;
    for &(d, r) in &curve.samples {
        writeln!(w, "{},{}", fmt_sig12(d), fmt_sig12(r))?;
    }
    Ok(())
}

/// Self-contained SVG of the point cloud and lines/curves on the unit
/// square: fixed 800×600 viewBox, δ on x and R on y.
pub fn write_figure_svg<W: Write>(
    w: &mut W,
    data: &FigureData,
    curve: Option<&BoundCurve>,
) -> io::Result<()> {
    const X0: f64 = 60.0;
    const X1: f64 = 770.0;
    const Y0: f64 = 560.0;
    const Y1: f64 = 30.0;
    let px = |d: f64| X0 + d.clamp(0.0, 1.0) * (X1 - X0);
    let py = |r: f64| Y0 + r.clamp(0.0, 1.0) * (Y1 - Y0);

    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600" viewBox="0 0 800 600">"#
    )?;
    writeln!(w, r#"<rect width="800" height="600" fill="white"/>"#)?;
    // Axes and ticks at 0, 0.2, ..., 1.
    writeln!(
        w,
        r#"<rect x="{X0}" y="{Y1}" width="{}" height="{}" fill="none" stroke="black"/>"#,
        X1 - X0,
        Y0 - Y1
    )?;
    for t in 0..=5 {
        let v = t as f64 / 5.0;
        writeln!(
            w,
            r#"<line x1="{:.2}" y1="{Y0}" x2="{:.2}" y2="{}" stroke="black"/>"#,
            px(v),
            px(v),
            Y0 + 5.0
        )?;
        writeln!(
            w,
            r#"<text x="{:.2}" y="{}" font-size="12" text-anchor="middle">{v:.1}</text>"#,
            px(v),
            Y0 + 18.0
        )?;
        writeln!(
            w,
            r#"<line x1="{}" y1="{:.2}" x2="{X0}" y2="{:.2}" stroke="black"/>"#,
            X0 - 5.0,
            py(v),
            py(v)
        )?;
        writeln!(
            w,
            r#"<text x="{}" y="{:.2}" font-size="12" text-anchor="end">{v:.1}</text>"#,
            X0 - 8.0,
            py(v) + 4.0
        )?;
    }
    writeln!(
        w,
        r#"<text x="415" y="592" font-size="14" text-anchor="middle">delta</text>"#
    )?;
    writeln!(
        w,
        r#"<text x="18" y="295" font-size="14" text-anchor="middle" transform="rotate(-90 18 295)">R</text>"#
    )?;

    // The two lines, drawn between their δ-intercepts.
    let q = data.q;
    let mut line = |f: &dyn Fn(Rational) -> Rational, color: &str, dash: &str| -> io::Result<()> {
        let mut pts = String::new();
        for t in 0..=100 {
            let d = Rational::new(t, 100);
            let r = f(d);
            if r >= Rational::zero() {
                pts.push_str(&format!("{:.2},{:.2} ", px(d.to_f64()), py(r.to_f64())));
            }
        }
        writeln!(
            w,
            r#"<polyline points="{}" fill="none" stroke="{color}"{dash}/>"#,
            pts.trim_end()
        )
    };
    line(&|d| line_tbf(q, d), "black", "")?;
    line(&|d| line_improved(q, d), "steelblue", r#" stroke-dasharray="6 3""#)?;

    // Legend, top right.
    let mut legend_y = 46.0;
    let mut legend = |color: &str, dash: &str, label: &str| -> io::Result<()> {
        writeln!(
            w,
            r#"<line x1="560" y1="{legend_y:.0}" x2="600" y2="{legend_y:.0}" stroke="{color}"{dash}/>"#
        )?;
        writeln!(
            w,
            r#"<text x="608" y="{:.0}" font-size="12">{label}</text>"#,
            legend_y + 4.0
        )?;
        legend_y += 18.0;
        Ok(())
    };
    legend("black", "", "R = (r/(r+1))(1 - d - 3/(q+1))")?;
    legend("steelblue", r#" stroke-dasharray="6 3""#, "R = (r/(r+1))(1 - d - 2/q)")?;
    if curve.is_some() {
        legend("darkgreen", "", "GV-type curve")?;
    }

    if let Some(curve) = curve {
        let pts: Vec<String> = curve
            .samples
            .iter()
            .map(|&(d, r)| format!("{:.2},{:.2}", px(d), py(r)))
            .collect();
        writeln!(
            w,
            r#"<polyline points="{}" fill="none" stroke="darkgreen"/>"#,
            pts.join(" ")
        )?;
    }

    for row in &data.rows {
        let (cx, cy) = (px(row.point.delta.to_f64()), py(row.point.rate.to_f64()));
        if row.special {
            writeln!(w, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="4" fill="red"/>"#)?;
        } else {
            writeln!(
                w,
                r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="2.5" fill="none" stroke="blue"/>"#
            )?;
        }
    }
    writeln!(w, "</svg>")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn relative_params_examples() {
        // q=5, i=2, l=5: R = 6/25, δ = 8/20 = 2/5, exact kind.
        let p = relative_params(5, 2, 5).unwrap();
        assert_eq!(p.rate, r(6, 25));
        assert_eq!(p.delta, r(2, 5));
        assert_eq!(p.kind, PointKind::Exact);
        // The closed form ½(q−1)(q−2)/q² agrees at l = q((q−1)/2−1).
        assert_eq!(p.rate, r(4 * 3, 2 * 25));
        // l at the window edge: δ = 1/(q(q−1)).
        let edge = relative_params(5, 2, 12).unwrap();
        assert_eq!(edge.delta, r(1, 20));
        assert_eq!(edge.kind, PointKind::LowerBound);
        // Window violations name the window.
        let err = relative_params(5, 2, 13).unwrap_err();
        assert!(err.to_string().contains("(q-1)(q-i) = 12"));
        assert!(relative_params(5, 5, 1).is_err());
        assert!(relative_params(5, 0, 1).is_err());
    }

    #[test]
    fn line_values_and_roots() {
        assert_eq!(line_tbf(7, Rational::zero()), r(15, 28));
        assert_eq!(line_improved(7, Rational::zero()), r(30, 49));
        assert_eq!(line_tbf(17, Rational::zero()), r(40, 51));
        // Roots: δ = 1 − 3/(q+1) and δ = 1 − 2/q.
        assert_eq!(line_tbf(7, r(5, 8)), Rational::zero());
        assert_eq!(line_improved(7, r(5, 7)), Rational::zero());
        // The improved line dominates below δ = 1.
        for q in [3u32, 5, 7, 11, 17] {
            for t in 0..100 {
                let d = r(t, 100);
                assert!(line_improved(q, d) > line_tbf(q, d), "q={q}, δ={d}");
            }
        }
    }

    #[test]
    fn window_margins_are_two_over_q_squared() {
        let m = window_margin(5, 2, 5).unwrap();
        assert_eq!(m.margin, r(2, 25));
        assert!(m.holds);
        let m = window_margin(7, 3, 1).unwrap();
        assert!(m.holds);
        assert_eq!(m.margin, r(2, 49));
        for q in [5u32, 7] {
            for i in 2..=(q - 1) as usize {
                for l in 1..=((q - 1) as usize * ((q as usize) - i)) {
                    let m = window_margin(q, i, l).unwrap();
                    assert!(m.holds);
                    assert_eq!(m.margin, r(2, (q * q) as i128));
                }
            }
        }
        assert!(window_margin(3, 2, 1).is_err());
    }

    #[test]
    fn window_reaches_the_top_level_at_large_q() {
        // The window runs to i = q−1 even where an actual enumeration would
        // be far beyond any budget.
        for q in [23u32, 29, 31] {
            let m = window_margin(q, (q - 1) as usize, 1).unwrap();
            assert!(m.holds);
            assert_eq!(m.margin, r(2, (q * q) as i128));
        }
        let data = figure_dataset(31, &(2..=30).collect::<Vec<_>>()).unwrap();
        assert_eq!(data.rows.len(), 30 * (29 * 30) / 2); // Σ 30(31−i)
        assert!(data.warnings.is_empty());
    }

    #[test]
    fn level2_margin_is_equivalent_to_the_improved_line() {
        // R + ((q−1)/q)δ > (r/(r+1))((q−2)/q)  ⟺  R > line_improved(δ),
        // on the same exact rationals.
        for q in [5u32, 7, 11] {
            for l in 1..=((q - 1) * (q - 2)) as usize {
                let m = window_margin(q, 2, l).unwrap();
                let lhs = m.point.rate > line_improved(q, m.point.delta);
                assert_eq!(m.holds, lhs);
                assert!(lhs);
            }
        }
    }

    #[test]
    fn special_point_values() {
        let s = special_point(5).unwrap();
        assert_eq!(s.point.rate, r(6, 25));
        assert_eq!(s.point.delta, r(2, 5));
        let s7 = special_point(7).unwrap();
        assert_eq!(s7.point.rate, r(15, 49));
        assert_eq!(s7.point.delta, r(17, 42));
        for q in [5u32, 7, 11] {
            let s = special_point(q).unwrap();
            assert!(s.rate_above_floor);
            assert!(s.delta_above_floor);
            assert_eq!(s.margin_over_level2_line, r(2, (q * q) as i128));
            // R + ((q−1)/q)δ = (q²−3q+4)/q² exactly.
            let qi = q as i128;
            let lhs = s.point.rate + r(qi - 1, qi) * s.point.delta;
            assert_eq!(lhs, r(qi * qi - 3 * qi + 4, qi * qi));
        }
        assert!(special_point(3).is_err());
    }

    #[test]
    fn curve_endpoint_monotonicity_and_ceiling() {
        let deltas: Vec<f64> = (0..100).map(|t| t as f64 / 100.0).collect();
        let curve = gv_b2_curve(17, 16, &deltas).unwrap();
        let base = 16.0 / 17.0;
        assert!((curve.samples[0].1 - base).abs() < 1e-4);
        for w in curve.samples.windows(2) {
            assert!(w[1].1 <= w[0].1 + 1e-12, "not non-increasing at {}", w[1].0);
        }
        for &(_, rr) in &curve.samples {
            assert!(rr <= base + 1e-12);
        }
        // Preconditions.
        assert!(gv_b2_curve(3, 9, &deltas).is_err()); // r+1 > q²
        assert!(gv_b2_curve(5, 4, &[0.5, 0.5]).is_err());
        assert!(gv_b2_curve(5, 4, &[0.5, 1.0]).is_err());
    }

    #[test]
    fn figure_dataset_contents() {
        let data = figure_dataset(7, &[2, 3, 4, 5, 6]).unwrap();
        // Σ_{i=2..6} (q−1)(q−i) = 6·(5+4+3+2+1) = 90 points.
        assert_eq!(data.rows.len(), 90);
        assert_eq!(data.rows.iter().filter(|r| r.special).count(), 1);
        let sp = data.rows.iter().find(|r| r.special).unwrap();
        assert_eq!((sp.point.i, sp.point.l), (2, 14));
        assert!(data.warnings.is_empty());

        let with_warn = figure_dataset(7, &[2, 9]).unwrap();
        assert_eq!(with_warn.warnings.len(), 1);

        let empty = figure_dataset(7, &[]).unwrap();
        assert!(empty.rows.is_empty());
        let mut buf = Vec::new();
        write_bounds_csv(&mut buf, &empty).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "q,i,l,kind,R_num,R_den,delta_num,delta_den,line_tbf,line_improved\n"
        );
    }

    #[test]
    fn csv_golden_row() {
        let data = figure_dataset(5, &[2]).unwrap();
        let mut buf = Vec::new();
        write_bounds_csv(&mut buf, &data).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let row = text.lines().find(|l| l.starts_with("5,2,5,")).unwrap();
        assert_eq!(row, "5,2,5,exact,6,25,2,5,8.00000000000e-2,1.60000000000e-1");
    }

    #[test]
    fn svg_is_self_contained() {
        let data = figure_dataset(5, &[2]).unwrap();
        let deltas: Vec<f64> = (0..50).map(|t| t as f64 / 50.0).collect();
        let curve = gv_b2_curve(5, 4, &deltas).unwrap();
        let mut buf = Vec::new();
        write_figure_svg(&mut buf, &data, Some(&curve)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("<svg "));
        assert!(text.contains(r#"viewBox="0 0 800 600""#));
        assert!(text.contains("fill=\"red\""));
        assert!(text.trim_end().ends_with("</svg>"));
        assert!(!text.contains("http://") || text.contains("http://www.w3.org/2000/svg"));
    }

    #[test]
    fn sig12_formatting() {
        assert_eq!(fmt_sig12(0.0), "0");
        assert_eq!(fmt_sig12(0.08), "8.00000000000e-2");
        assert_eq!(fmt_sig12(16.0 / 17.0), "9.41176470588e-1");
    }
}
