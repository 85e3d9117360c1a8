//! Standalone SVG plots with integer coordinates, so output is byte-stable.

use std::fmt::Write;

const W: i64 = 480;
const H: i64 = 320;
const PAD: i64 = 48;

fn header(title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">"
    );
    let _ = writeln!(s, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">{}</text>",
        W / 2,
        escape(title)
    );
    let _ = writeln!(
        s,
        "<path d=\"M{PAD} {PAD} V{} H{}\" stroke=\"black\" fill=\"none\"/>",
        H - PAD,
        W - PAD
    );
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn labels(s: &mut String, xlabel: &str, ylabel: &str) {
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
        W / 2,
        H - 12,
        escape(xlabel)
    );
    let _ = writeln!(
        s,
        "<text x=\"14\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 {})\" text-anchor=\"middle\">{}</text>",
        H / 2,
        H / 2,
        escape(ylabel)
    );
}

fn scale(v: i64, lo: i64, hi: i64, out_lo: i64, out_hi: i64) -> i64 {
    if hi == lo {
        return (out_lo + out_hi) / 2;
    }
    out_lo + (v - lo) * (out_hi - out_lo) / (hi - lo)
}

/// Polyline through integer points, with a marker at each one.
pub fn line_plot(title: &str, xlabel: &str, ylabel: &str, points: &[(i64, i64)]) -> String {
    let mut s = header(title);
    labels(&mut s, xlabel, ylabel);
    let (x0, x1) = bounds(points.iter().map(|p| p.0));
    let (_, y1) = bounds(points.iter().map(|p| p.1));
    let y0 = 0.min(points.iter().map(|p| p.1).min().unwrap_or(0));
    let px: Vec<(i64, i64)> = points
        .iter()
        .map(|&(x, y)| (scale(x, x0, x1, PAD, W - PAD), scale(y, y0, y1, H - PAD, PAD)))
        .collect();
    if !px.is_empty() {
        let pts: Vec<String> = px.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(s, "<polyline points=\"{}\" stroke=\"steelblue\" fill=\"none\"/>", pts.join(" "));
    }
    for ((x, y), (vx, vy)) in px.iter().zip(points) {
        let _ = writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"steelblue\"><title>({vx}, {vy})</title></circle>");
        let _ = writeln!(
            s,
            "<text x=\"{x}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">{vx}</text>",
            H - PAD + 14
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Bars of `counts[i]` at position `i`.
pub fn histogram(title: &str, xlabel: &str, counts: &[u64]) -> String {
    let mut s = header(title);
    labels(&mut s, xlabel, "count");
    let max = counts.iter().copied().max().unwrap_or(0).max(1) as i64;
    let n = counts.len().max(1) as i64;
    let bw = (W - 2 * PAD) / n;
    for (i, &c) in counts.iter().enumerate() {
        let h = c as i64 * (H - 2 * PAD) / max;
        let x = PAD + i as i64 * bw;
        let _ = writeln!(
            s,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{h}\" fill=\"steelblue\"><title>{i}: {c}</title></rect>",
            x + 1,
            H - PAD - h,
            (bw - 2).max(1)
        );
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">{i}</text>",
            x + bw / 2,
            H - PAD + 14
        );
    }
    s.push_str("</svg>\n");
    s
}

fn bounds(it: impl Iterator<Item = i64>) -> (i64, i64) {
    it.fold(None, |acc: Option<(i64, i64)>, v| Some(acc.map_or((v, v), |(a, b)| (a.min(v), b.max(v)))))
        .unwrap_or((0, 1))
}
