//! Monochrome SVG bar chart of a census histogram.
//!
//! Layout and styling are fixed constants so the output bytes depend only on
//! the histogram. One `<rect class="bar">` is emitted per nonzero bin.

use std::fmt::Write as _;

use sicgram::Histogram;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 60.0;
const BAR_FILL: f64 = 0.8;

/// Round tick step giving at most `max_ticks` ticks over `0..=span`.
fn tick_step(span: f64, max_ticks: usize) -> f64 {
    if span <= 0.0 {
        return 1.0;
    }
    let raw = span / max_ticks as f64;
    let mag = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0].iter().map(|m| m * mag).find(|&s| s >= raw).unwrap_or(10.0 * mag).max(1.0)
}

pub fn render(h: &Histogram) -> String {
    let max_k = h.max_k().unwrap_or(0);
    let max_count = h.iter().map(|(_, c)| c).max().unwrap_or(0);
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let slots = (max_k + 1) as f64;
    let slot_w = plot_w / slots;
    let y_step = tick_step(max_count as f64, 5);
    let y_top = ((max_count as f64 / y_step).ceil() * y_step).max(y_step);
    let x_of = |k: f64| LEFT + k * slot_w;
    let y_of = |c: f64| TOP + plot_h - c / y_top * plot_h;

    let title = if h.length() > 0 {
        format!("Self-intersection counts, length {} ({} classes)", h.length(), h.total())
    } else {
        format!("Self-intersection counts ({} classes)", h.total())
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, "<title>{title}</title>");
    let _ = writeln!(s, r##"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##);
    let _ = writeln!(s, r#"<text x="{:.2}" y="30" text-anchor="middle" font-size="16">{title}</text>"#, WIDTH / 2.0);

    // axes
    let base = TOP + plot_h;
    let _ = writeln!(
        s,
        r##"<path d="M{LEFT:.2} {TOP:.2}V{base:.2}H{:.2}" fill="none" stroke="#000000"/>"##,
        LEFT + plot_w
    );

    let _ = writeln!(s, r#"<g class="y-ticks" text-anchor="end">"#);
    let mut tick = 0.0;
    while tick <= y_top + 1e-9 {
        let y = y_of(tick);
        let _ = writeln!(s, r##"<line x1="{:.2}" y1="{y:.2}" x2="{LEFT:.2}" y2="{y:.2}" stroke="#000000"/>"##, LEFT - 5.0);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, LEFT - 8.0, y + 4.0, tick as u64);
        tick += y_step;
    }
    let _ = writeln!(s, "</g>");

    let x_step = tick_step(max_k as f64, 10) as u32;
    let _ = writeln!(s, r#"<g class="x-ticks" text-anchor="middle">"#);
    for k in (0..=max_k).step_by(x_step as usize) {
        let x = x_of(k as f64 + 0.5);
        let _ = writeln!(s, r##"<line x1="{x:.2}" y1="{base:.2}" x2="{x:.2}" y2="{:.2}" stroke="#000000"/>"##, base + 5.0);
        let _ = writeln!(s, r#"<text x="{x:.2}" y="{:.2}">{k}</text>"#, base + 20.0);
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">self-intersection count k</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">number of classes</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    let bar_w = slot_w * BAR_FILL;
    let _ = writeln!(s, r##"<g class="bars" fill="#404040">"##);
    for (k, c) in h.iter() {
        let x = x_of(k as f64) + (slot_w - bar_w) / 2.0;
        let y = y_of(c as f64);
        let _ = writeln!(
            s,
            r#"<rect class="bar" data-k="{k}" data-count="{c}" x="{x:.2}" y="{y:.2}" width="{bar_w:.2}" height="{:.2}"/>"#,
            base - y
        );
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bars(svg: &str) -> usize {
        svg.matches(r#"<rect class="bar""#).count()
    }

    #[test]
    fn one_bar_for_single_bin() {
        let svg = render(&Histogram::from_bins(1, [(0, 4)]));
        assert_eq!(bars(&svg), 1);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(svg.contains("length 1"));
    }

    #[test]
    fn gaps_have_no_bars() {
        let svg = render(&Histogram::from_bins(7, [(0, 24), (4, 112), (6, 56)]));
        assert_eq!(bars(&svg), 3);
        assert!(svg.contains(r#"data-k="6""#));
    }

    #[test]
    fn deterministic() {
        let h = Histogram::from_bins(5, [(0, 16), (1, 8), (2, 24)]);
        assert_eq!(render(&h), render(&h.clone()));
    }

    #[test]
    fn ticks() {
        assert_eq!(tick_step(100.0, 5), 20.0);
        assert_eq!(tick_step(4.0, 5), 1.0);
        assert_eq!(tick_step(40.0, 10), 5.0);
        assert_eq!(tick_step(0.0, 5), 1.0);
    }
}
