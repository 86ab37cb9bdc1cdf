//! SVG drawing of tilings on the hexagonal grid.

use std::fmt::Write;

use tribone::engine::Tiling;
use tribone::hexlattice::{region_t, Cell, TriboneType};

/// Distance between neighbouring cell centres, in SVG units.
const SPACING: f64 = 24.0;
const BAR_WIDTH: f64 = 9.0;

fn position(i: i64, j: i64) -> (f64, f64) {
    let (i, j) = (i as f64, j as f64);
    (SPACING * (i - 0.5 * j), -SPACING * j * 3f64.sqrt() / 2.0)
}

fn num(v: f64) -> String {
    let v = if v.abs() < 0.005 { 0.0 } else { v };
    format!("{v:.2}")
}

fn colour(kind: TriboneType) -> &'static str {
    match kind {
        TriboneType::X => "#d95f02",
        TriboneType::Y => "#1b9e77",
        TriboneType::Z => "#7570b3",
    }
}

struct Bounds {
    min: (f64, f64),
    max: (f64, f64),
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min: (f64::INFINITY, f64::INFINITY),
            max: (f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, (x, y): (f64, f64)) {
        self.min = (self.min.0.min(x), self.min.1.min(y));
        self.max = (self.max.0.max(x), self.max.1.max(y));
    }

    fn view_box(&self) -> String {
        if self.min.0 > self.max.0 {
            return format!(
                "{} {} {} {}",
                num(-SPACING),
                num(-SPACING),
                num(2.0 * SPACING),
                num(2.0 * SPACING)
            );
        }
        let pad = SPACING;
        format!(
            "{} {} {} {}",
            num(self.min.0 - pad),
            num(self.min.1 - pad),
            num(self.max.0 - self.min.0 + 2.0 * pad),
            num(self.max.1 - self.min.1 + 2.0 * pad)
        )
    }
}

/// Draws the cells of `T_n` (for `region_n > 0`) as hexagons and every
/// merged placement as one `<line class="bar">`. Positive weights are filled
/// with the axis colour, negative ones hatched; weights other than +-1 get a
/// label. Output depends only on the merged placement multiset.
pub fn render_svg(tiling: &Tiling) -> String {
    let cells: Vec<Cell> = if tiling.region_n == 0 {
        Vec::new()
    } else {
        region_t(tiling.region_n)
            .map(|r| r.cells.into_iter().collect())
            .unwrap_or_default()
    };
    let radius = SPACING / 3f64.sqrt();
    let mut bounds = Bounds::new();
    let mut grid = String::new();
    for c in &cells {
        let (cx, cy) = position(c.i(), c.j());
        let pts: Vec<String> = (0..6)
            .map(|k| {
                let a = (30.0 + 60.0 * k as f64).to_radians();
                let p = (cx + radius * a.cos(), cy + radius * a.sin());
                bounds.add(p);
                format!("{},{}", num(p.0), num(p.1))
            })
            .collect();
        writeln!(grid, r#"  <polygon class="cell" points="{}"/>"#, pts.join(" ")).unwrap();
    }

    let mut bars = String::new();
    for ((kind, center), w) in tiling.merged() {
        let (di, dj) = kind.step();
        let a = position(center.i() - di, center.j() - dj);
        let b = position(center.i() + di, center.j() + dj);
        bounds.add(a);
        bounds.add(b);
        let paint = if w > 0 {
            colour(kind).to_string()
        } else {
            format!("url(#hatch-{kind})")
        };
        writeln!(
            bars,
            r#"  <line class="bar" data-type="{kind}" data-weight="{w}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{paint}"/>"#,
            num(a.0),
            num(a.1),
            num(b.0),
            num(b.1)
        )
        .unwrap();
        if w.abs() != 1 {
            let (mx, my) = position(center.i(), center.j());
            writeln!(
                bars,
                r#"  <text class="weight" x="{}" y="{}">{w}</text>"#,
                num(mx),
                num(my + 3.0)
            )
            .unwrap();
        }
    }

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{}">"#,
        bounds.view_box()
    )
    .unwrap();
    out.push_str("  <defs>\n");
    for kind in TriboneType::ALL {
        writeln!(
            out,
            r#"    <pattern id="hatch-{kind}" width="4" height="4" patternUnits="userSpaceOnUse" patternTransform="rotate(45)"><rect width="4" height="4" fill="white"/><line x1="0" y1="0" x2="0" y2="4" stroke="{}" stroke-width="2"/></pattern>"#,
            colour(kind)
        )
        .unwrap();
    }
    out.push_str("  </defs>\n");
    writeln!(
        out,
        r#"  <style>.cell {{ fill: none; stroke: #bbbbbb; stroke-width: 1 }} .bar {{ stroke-width: {BAR_WIDTH}; stroke-linecap: round; opacity: 0.75 }} .weight {{ font: 9px sans-serif; text-anchor: middle }}</style>"#
    )
    .unwrap();
    out.push_str(&grid);
    out.push_str(&bars);
    out.push_str("</svg>\n");
    out
}
