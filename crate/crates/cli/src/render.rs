//! Text renderings: decimal columns for CSV files and a bare SVG plot.

use std::fmt::Write as _;

use recurra::Orbit;

/// Shortest round-trip decimal, switching to exponent form outside
/// `[1e-6, 1e15)`.
pub fn float(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-6..1e15).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// Two polylines (x in blue, y in red) of the float values against `n`,
/// each scaled into a fixed canvas. Non-finite values are skipped.
pub fn svg_polylines(orbit: &Orbit) -> String {
    const W: f64 = 800.0;
    const H: f64 = 300.0;
    let pts: Vec<(i64, f64, f64)> = orbit
        .iter()
        .map(|(n, x, y)| (n, x.to_f64(), y.to_f64()))
        .collect();
    let finite = pts
        .iter()
        .flat_map(|&(_, x, y)| [x, y])
        .filter(|v| v.is_finite());
    let (lo, hi) = finite.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    let (lo, hi) = if lo.is_finite() && hi > lo {
        (lo, hi)
    } else {
        (lo.min(0.0), lo.max(0.0) + 1.0)
    };
    let n0 = orbit.start_index() as f64;
    let span = (orbit.end_index() as f64 - n0).max(1.0);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    )
    .unwrap();
    for (color, pick) in [("blue", 0usize), ("red", 1)] {
        let coords: Vec<String> = pts
            .iter()
            .map(|&(n, x, y)| (n, if pick == 0 { x } else { y }))
            .filter(|(_, v)| v.is_finite())
            .map(|(n, v)| {
                format!(
                    "{:.2},{:.2}",
                    (n as f64 - n0) / span * W,
                    H - (v - lo) / (hi - lo) * H
                )
            })
            .collect();
        writeln!(
            out,
            r#"  <polyline fill="none" stroke="{color}" stroke-width="1" points="{}"/>"#,
            coords.join(" ")
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
