//! SVG drawing of the axis of `[[m,-1],[1,0]]` over the modular tiling:
//! the translates of the fundamental domain crossed by `alpha`, the unit
//! semicircles `C_0 .. C_m`, the axis and the arc `alpha` itself.
//!
//! Geometry comes from the exact data in [`crate::geometry`]; coordinates
//! are rounded to six decimals only when written out, so the output is
//! byte-for-byte reproducible.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::{alpha_arc, order2_points_on_standard_axis, ArcPosition};

pub const PIXELS_PER_UNIT: f64 = 100.0;

const DEFAULT_PALETTE: &str = include_str!("../assets/palette.toml");

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Palette {
    pub background: String,
    pub tile_fill: String,
    pub tile_stroke: String,
    pub circle_stroke: String,
    pub axis_stroke: String,
    pub alpha_stroke: String,
    pub point_fill: String,
    pub corner_fill: String,
    pub label_fill: String,
    pub stroke_width: f64,
    pub alpha_width: f64,
    pub point_radius: f64,
}

impl Palette {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Palette(e.to_string()))
    }
}

impl Default for Palette {
    fn default() -> Self {
        Palette::from_toml(DEFAULT_PALETTE).expect("bundled palette parses")
    }
}

/// Fixed six-decimal formatting; `-0.000000` is written as `0.000000`.
pub fn fmt_coord(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".to_string()
    } else {
        s
    }
}

struct Frame {
    x_min: f64,
    y_max: f64,
}

impl Frame {
    fn px(&self, x: f64) -> String {
        fmt_coord((x - self.x_min) * PIXELS_PER_UNIT)
    }

    fn py(&self, y: f64) -> String {
        fmt_coord((self.y_max - y) * PIXELS_PER_UNIT)
    }

    fn len(&self, r: f64) -> String {
        fmt_coord(r * PIXELS_PER_UNIT)
    }
}

/// Integers `k` whose translate `D + k` meets `alpha`.
fn touched_tiles(m: &BigInt) -> Vec<BigInt> {
    let two = BigInt::from(2);
    let x0 = BigRational::new(two.clone(), m.clone());
    let x1 = BigRational::from_integer(m.clone()) - &x0;
    let (lo, hi) = if x0 < x1 { (x0, x1) } else { (x1, x0) };
    let half = BigRational::new(BigInt::from(1), two);
    let first = (lo - &half).ceil().to_integer();
    let last = (hi + &half).floor().to_integer();
    let mut out = Vec::new();
    let mut k = first;
    while k <= last {
        out.push(k.clone());
        k += 1;
    }
    out
}

/// Renders the figure for `[[m,-1],[1,0]]`, `|m| >= 3`.
pub fn render_figure(m: &BigInt, palette: &Palette) -> Result<String> {
    let arc = alpha_arc(m)?;
    let mf = m.to_f64().unwrap_or(f64::NAN);
    let radius = ((mf * mf - 4.0).sqrt()) / 2.0;
    let (x_min, x_max) = if m.is_positive() { (-1.0, mf + 1.0) } else { (mf - 1.0, 1.0) };
    let y_max = f64::max(2.0, radius + 0.5);
    let frame = Frame { x_min, y_max };
    let width = fmt_coord((x_max - x_min) * PIXELS_PER_UNIT);
    let height = fmt_coord(y_max * PIXELS_PER_UNIT);
    let p = palette;
    let sw = fmt_coord(p.stroke_width);
    let corner = arc.start_position == ArcPosition::Corner;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        s,
        "<desc>axis of [[{m},-1],[1,0]] with fundamental arc alpha; alpha endpoints at x = 2/m and m - 2/m{}</desc>",
        if corner { "; alpha endpoint coincides with the corner exp(pi i/3) of D" } else { "" }
    );
    let _ = writeln!(
        s,
        r#"<rect x="0.000000" y="0.000000" width="{width}" height="{height}" fill="{}"/>"#,
        p.background
    );

    let h = 3f64.sqrt() / 2.0;
    let _ = writeln!(s, r#"<g id="tiles" fill="{}" stroke="{}" stroke-width="{sw}">"#, p.tile_fill, p.tile_stroke);
    for k in touched_tiles(m) {
        let kf = k.to_f64().unwrap_or(f64::NAN);
        let _ = writeln!(
            s,
            r#"<path id="tile-{k}" d="M {} {} L {} {} A {} {} 0 0 1 {} {} L {} {} Z"/>"#,
            frame.px(kf - 0.5),
            frame.py(y_max),
            frame.px(kf - 0.5),
            frame.py(h),
            frame.len(1.0),
            frame.len(1.0),
            frame.px(kf + 0.5),
            frame.py(h),
            frame.px(kf + 0.5),
            frame.py(y_max),
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="unit-circles" fill="none" stroke="{}" stroke-width="{sw}">"#, p.circle_stroke);
    let (lo, hi) = if m.is_positive() { (BigInt::from(0), m.clone()) } else { (m.clone(), BigInt::from(0)) };
    let mut n = lo;
    while n <= hi {
        let nf = n.to_f64().unwrap_or(f64::NAN);
        let _ = writeln!(
            s,
            r#"<path id="C{n}" d="M {} {} A {} {} 0 0 1 {} {}"/>"#,
            frame.px(nf - 1.0),
            frame.py(0.0),
            frame.len(1.0),
            frame.len(1.0),
            frame.px(nf + 1.0),
            frame.py(0.0),
        );
        n += 1;
    }
    let _ = writeln!(s, "</g>");

    let center = mf / 2.0;
    let _ = writeln!(
        s,
        r#"<path id="axis" fill="none" stroke="{}" stroke-width="{sw}" d="M {} {} A {} {} 0 0 1 {} {}"/>"#,
        p.axis_stroke,
        frame.px(center - radius),
        frame.py(0.0),
        frame.len(radius),
        frame.len(radius),
        frame.px(center + radius),
        frame.py(0.0),
    );

    let (sx, ex) = (arc.start.x.to_f64(), arc.end.x.to_f64());
    let y = arc.start.y.to_f64();
    let (from, to) = if sx < ex { (sx, ex) } else { (ex, sx) };
    let _ = writeln!(
        s,
        r#"<path id="alpha" fill="none" stroke="{}" stroke-width="{}" d="M {} {} A {} {} 0 0 1 {} {}"/>"#,
        p.alpha_stroke,
        fmt_coord(p.alpha_width),
        frame.px(from),
        frame.py(y),
        frame.len(radius),
        frame.len(radius),
        frame.px(to),
        frame.py(y),
    );

    let r = fmt_coord(p.point_radius);
    let _ = writeln!(s, r#"<g id="points" fill="{}">"#, p.point_fill);
    let y_sq = &arc.y_sq;
    for (id, pt) in [("alpha-start", &arc.start), ("alpha-end", &arc.end)] {
        let fill = if corner { p.corner_fill.as_str() } else { p.point_fill.as_str() };
        let _ = writeln!(
            s,
            r#"<circle id="{id}" class="{}" cx="{}" cy="{}" r="{r}" fill="{fill}" data-x="{}" data-y-squared="{}"/>"#,
            if corner { "corner" } else { "endpoint" },
            frame.px(pt.x.to_f64()),
            frame.py(pt.y.to_f64()),
            pt.x,
            y_sq,
        );
    }
    let _ = writeln!(
        s,
        r#"<circle id="point-i" cx="{}" cy="{}" r="{r}"/>"#,
        frame.px(0.0),
        frame.py(1.0)
    );
    let _ = writeln!(
        s,
        r#"<circle id="point-rho" cx="{}" cy="{}" r="{r}"/>"#,
        frame.px(0.5),
        frame.py(h)
    );
    let order2 = order2_points_on_standard_axis(m);
    for (label, n) in ["a", "b"].iter().zip(&order2) {
        let nf = n.to_f64().unwrap_or(f64::NAN);
        let _ = writeln!(
            s,
            r#"<circle id="point-{label}" cx="{}" cy="{}" r="{r}" data-x="{n}" data-y="1"/>"#,
            frame.px(nf),
            frame.py(1.0),
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="labels" fill="{}" font-family="serif" font-size="16">"#, p.label_fill);
    let _ = writeln!(s, r#"<text x="{}" y="{}">i</text>"#, frame.px(0.05), frame.py(1.05));
    let _ = writeln!(s, r#"<text x="{}" y="{}">ρ</text>"#, frame.px(0.55), frame.py(h + 0.05));
    for (label, n) in ["a", "b"].iter().zip(&order2) {
        let nf = n.to_f64().unwrap_or(f64::NAN);
        let _ = writeln!(s, r#"<text x="{}" y="{}">{label}</text>"#, frame.px(nf + 0.05), frame.py(1.05));
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}">ℓ</text>"#,
        frame.px(center),
        frame.py(radius + 0.1)
    );
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}
