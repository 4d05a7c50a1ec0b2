//! Direct SVG output for point sets, segment pairs and path collections.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::geometry::{Point, PointSet, Segment};

/// Stroke colors for path inner segments, used cyclically.
pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#003f5c", "#b8860b",
];

#[derive(Clone, Debug, Default)]
pub struct Scene {
    pub a: Option<Segment>,
    pub b: Option<Segment>,
    pub paths: Vec<Vec<Segment>>,
    /// Canvas width in pixels; the height follows the aspect ratio.
    pub size: u32,
    pub labels: bool,
}

fn coord(p: &Point) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(0.0), -p.y.to_f64().unwrap_or(0.0))
}

fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

pub fn render(ps: &PointSet, scene: &Scene) -> String {
    let xy: Vec<(f64, f64)> = ps.points().iter().map(coord).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &xy {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if xy.is_empty() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let (w, h) = ((x1 - x0).max(span * 1e-3), (y1 - y0).max(span * 1e-3));
    let (mx, my) = (0.05 * w, 0.05 * h);
    let (vx, vy, vw, vh) = (x0 - mx, y0 - my, w + 2.0 * mx, h + 2.0 * my);
    let unit = span / 400.0;
    let size = if scene.size == 0 { 800 } else { scene.size };
    let height = ((size as f64) * vh / vw).round().max(1.0) as u32;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{height}" viewBox="{} {} {} {}">"#,
        num(vx),
        num(vy),
        num(vw),
        num(vh)
    );
    let _ = writeln!(out, r#"<rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#, num(vx), num(vy), num(vw), num(vh));

    let hull = ps.hull();
    if hull.len() >= 3 {
        let pts: Vec<String> = hull.iter().map(|&i| format!("{},{}", num(xy[i].0), num(xy[i].1))).collect();
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="none" stroke="#888888" stroke-width="{}" stroke-dasharray="{} {}"/>"##,
            pts.join(" "),
            num(unit),
            num(6.0 * unit),
            num(4.0 * unit)
        );
    }

    let line = |out: &mut String, s: &Segment, color: &str, width: f64, extra: &str| {
        let (p, q) = (xy[s.lo()], xy[s.hi()]);
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="{}" stroke-linecap="round"{extra}/>"#,
            num(p.0),
            num(p.1),
            num(q.0),
            num(q.1),
            num(width)
        );
    };
    for (k, path) in scene.paths.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let inner = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
        for s in inner {
            line(&mut out, s, color, 1.5 * unit, &format!(r#" data-path="{k}""#));
        }
    }
    for (s, name) in [(scene.a, "a"), (scene.b, "b")] {
        if let Some(s) = s {
            line(&mut out, &s, "#000000", 4.0 * unit, &format!(r#" data-role="{name}""#));
        }
    }

    for (i, &(x, y)) in xy.iter().enumerate() {
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="{}" fill="#000000"/>"##, num(x), num(y), num(3.0 * unit));
        if scene.labels {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="{}" font-family="monospace">{i}</text>"#,
                num(x + 4.0 * unit),
                num(y - 4.0 * unit),
                num(14.0 * unit)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
