//! SVG 1.1 figures: given circles thick, reversed given circles dashed,
//! solutions thin. One panel per solution set.

use std::fmt::Write as _;

use apollonia::{CircleCoeffs, Orientation, Point};

use crate::document::ResultDocument;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgStyle {
    /// Width of one panel in pixels; the height follows the aspect ratio.
    pub panel_width: f64,
    /// Stroke widths as fractions of the larger viewport side.
    pub thick: f64,
    pub thin: f64,
    /// Filled arrowheads showing each curve's direction.
    pub arrows: bool,
    /// Digits after the decimal point in coordinates.
    pub precision: usize,
}

impl Default for SvgStyle {
    fn default() -> Self {
        Self {
            panel_width: 480.0,
            thick: 0.006,
            thin: 0.0025,
            arrows: false,
            precision: 6,
        }
    }
}

/// Axis-aligned box in scene coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViewBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl ViewBox {
    fn empty() -> Self {
        Self {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn is_empty(&self) -> bool {
        self.min_x > self.max_x
    }

    fn include(&mut self, p: Point) {
        self.min_x = self.min_x.min(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_x = self.max_x.max(p.x);
        self.max_y = self.max_y.max(p.y);
    }

    fn include_circle(&mut self, c: Point, r: f64) {
        self.include(Point::new(c.x - r, c.y - r));
        self.include(Point::new(c.x + r, c.y + r));
    }

    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    fn center(&self) -> Point {
        Point::new(0.5 * (self.min_x + self.max_x), 0.5 * (self.min_y + self.max_y))
    }

    fn with_margin(&self, fraction: f64) -> Self {
        let m = fraction * self.width().max(self.height());
        Self {
            min_x: self.min_x - m,
            min_y: self.min_y - m,
            max_x: self.max_x + m,
            max_y: self.max_y + m,
        }
    }

    pub fn contains(&self, p: Point, slack: f64) -> bool {
        p.x >= self.min_x - slack && p.x <= self.max_x + slack && p.y >= self.min_y - slack && p.y <= self.max_y + slack
    }
}

/// Solutions larger than this multiple of the input extent do not widen the
/// viewport; they are drawn and clipped like lines.
const FIT_RADIUS_LIMIT: f64 = 1e3;

/// Fits the given circles and the finite solutions, then adds a 10% margin.
pub fn fit_view(inputs: &[CircleCoeffs], solutions: &[CircleCoeffs]) -> ViewBox {
    let mut b = ViewBox::empty();
    for k in inputs {
        if let (Some(c), Some(r)) = (k.center(), k.radius()) {
            b.include_circle(c, r);
        }
    }
    let extent = if b.is_empty() { 1.0 } else { b.width().max(b.height()) };
    for k in solutions {
        if let (Some(c), Some(r)) = (k.center(), k.radius()) {
            if r <= FIT_RADIUS_LIMIT * extent {
                b.include_circle(c, r);
            }
        }
    }
    let anchor = if b.is_empty() { Point::new(0.0, 0.0) } else { b.center() };
    for k in inputs.iter().filter(|k| k.is_line()) {
        b.include(foot(k, anchor));
    }
    if b.is_empty() {
        b.include(Point::new(-1.0, -1.0));
        b.include(Point::new(1.0, 1.0));
    }
    let pad = if b.width().max(b.height()) > 0.0 { 0.0 } else { 1.0 };
    if pad > 0.0 {
        let c = b.center();
        b.include_circle(c, pad);
    }
    b.with_margin(0.1)
}

/// Foot of the perpendicular from `p` on the line `k`.
fn foot(k: &CircleCoeffs, p: Point) -> Point {
    let (nb, nc) = (k.b(), k.c());
    let s = (2.0 * nb * p.x + 2.0 * nc * p.y + k.d()) / 2.0;
    Point::new(p.x - s * nb, p.y - s * nc)
}

/// Part of the line `k` inside `view`, by Liang-Barsky clipping.
pub fn clip_line(k: &CircleCoeffs, view: &ViewBox) -> Option<(Point, Point)> {
    let p0 = foot(k, view.center());
    let dir = Point::new(-k.c(), k.b());
    let mut t0 = f64::NEG_INFINITY;
    let mut t1 = f64::INFINITY;
    for (p, d, lo, hi) in [
        (p0.x, dir.x, view.min_x, view.max_x),
        (p0.y, dir.y, view.min_y, view.max_y),
    ] {
        if d == 0.0 {
            if p < lo || p > hi {
                return None;
            }
        } else {
            let (a, b) = ((lo - p) / d, (hi - p) / d);
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
    }
    (t0 < t1).then(|| {
        (
            Point::new(p0.x + t0 * dir.x, p0.y + t0 * dir.y),
            Point::new(p0.x + t1 * dir.x, p0.y + t1 * dir.y),
        )
    })
}

struct Writer {
    out: String,
    precision: usize,
}

impl Writer {
    fn num(&self, v: f64) -> String {
        let s = format!("{:.*}", self.precision, v);
        if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
            s.trim_start_matches('-').to_string()
        } else {
            s
        }
    }

    /// Point in SVG coordinates, where y grows downwards.
    fn pt(&self, p: Point) -> String {
        format!("{} {}", self.num(p.x), self.num(-p.y))
    }
}

#[derive(Clone, Copy)]
enum Stroke {
    Given,
    Reversed,
    Solution,
}

fn curve(w: &mut Writer, k: &CircleCoeffs, view: &ViewBox, stroke: Stroke, style: &SvgStyle) {
    let size = view.width().max(view.height());
    let (class, width, dash) = match stroke {
        Stroke::Given => ("given", style.thick, None),
        Stroke::Reversed => ("given reversed", style.thick, Some(4.0 * style.thick)),
        Stroke::Solution => ("solution", style.thin, None),
    };
    let d = match (k.center(), k.radius()) {
        (Some(c), Some(r)) => {
            let (e, wpt) = (Point::new(c.x + r, c.y), Point::new(c.x - r, c.y));
            let rr = w.num(r);
            format!(
                "M {} A {rr} {rr} 0 1 0 {} A {rr} {rr} 0 1 0 {} Z",
                w.pt(e),
                w.pt(wpt),
                w.pt(e)
            )
        }
        _ => match clip_line(k, view) {
            Some((p, q)) => format!("M {} L {}", w.pt(p), w.pt(q)),
            None => return,
        },
    };
    let dash = dash.map_or(String::new(), |g| format!(" stroke-dasharray=\"{}\"", w.num(g * size)));
    let _ = writeln!(
        w.out,
        "    <path class=\"{class}\" d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"{dash}/>",
        w.num(width * size)
    );
    if style.arrows {
        arrow(w, k, view, size);
    }
}

fn arrow(w: &mut Writer, k: &CircleCoeffs, view: &ViewBox, size: f64) {
    let (tip, dir) = match (k.center(), k.radius(), k.orientation()) {
        (Some(c), Some(r), Some(o)) => {
            let s = if o == Orientation::CounterClockwise { -1.0 } else { 1.0 };
            (Point::new(c.x, c.y + r), Point::new(s, 0.0))
        }
        _ => match clip_line(k, view) {
            Some((p, q)) => {
                let t = k.line_direction().unwrap_or(0.0);
                (Point::new(0.5 * (p.x + q.x), 0.5 * (p.y + q.y)), Point::new(t.cos(), t.sin()))
            }
            None => return,
        },
    };
    let h = 0.02 * size;
    let back = Point::new(tip.x - h * dir.x, tip.y - h * dir.y);
    let l = Point::new(back.x - 0.5 * h * dir.y, back.y + 0.5 * h * dir.x);
    let r = Point::new(back.x + 0.5 * h * dir.y, back.y - 0.5 * h * dir.x);
    let _ = writeln!(
        w.out,
        "    <path class=\"arrow\" d=\"M {} L {} L {} Z\" fill=\"black\" stroke=\"none\"/>",
        w.pt(tip),
        w.pt(l),
        w.pt(r)
    );
}

fn quad(v: &[f64; 4]) -> Option<CircleCoeffs> {
    CircleCoeffs::normalize(v[0], v[1], v[2], v[3]).ok()
}

/// Renders `doc`. A document without solution sets shows its inputs only.
pub fn render_svg(doc: &ResultDocument, style: &SvgStyle) -> String {
    let inputs = doc.input_circles();
    let solutions: Vec<CircleCoeffs> = doc
        .sets
        .iter()
        .flat_map(|s| s.solutions.iter().filter_map(|k| quad(&k.coeffs)))
        .collect();
    let view = fit_view(&inputs, &solutions);

    struct Panel {
        label: String,
        given: Vec<(CircleCoeffs, bool)>,
        solutions: Vec<CircleCoeffs>,
    }
    let mut panels: Vec<Panel> = doc
        .sets
        .iter()
        .map(|s| Panel {
            label: s.label.clone(),
            given: s
                .circles
                .iter()
                .zip(&doc.inputs)
                .filter_map(|(c, i)| quad(c).map(|k| (k, c != i)))
                .collect(),
            solutions: s.solutions.iter().filter_map(|k| quad(&k.coeffs)).collect(),
        })
        .collect();
    if panels.is_empty() {
        panels.push(Panel {
            label: doc.command.clone(),
            given: inputs.iter().map(|k| (*k, false)).collect(),
            solutions: Vec::new(),
        });
    }

    let mut w = Writer {
        out: String::new(),
        precision: style.precision,
    };
    let pw = style.panel_width;
    let ph = (pw * view.height() / view.width()).max(1.0);
    let n = panels.len() as f64;
    let vb = format!(
        "{} {} {} {}",
        w.num(view.min_x),
        w.num(-view.max_y),
        w.num(view.width()),
        w.num(view.height())
    );
    let _ = writeln!(w.out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        w.out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        w.num(pw * n),
        w.num(ph),
        w.num(pw * n),
        w.num(ph)
    );
    for (i, p) in panels.iter().enumerate() {
        let _ = writeln!(
            w.out,
            "  <svg x=\"{}\" y=\"0\" width=\"{}\" height=\"{}\" viewBox=\"{vb}\" preserveAspectRatio=\"xMidYMid meet\">",
            w.num(pw * i as f64),
            w.num(pw),
            w.num(ph)
        );
        let _ = writeln!(w.out, "   <title>{}</title>", escape(&p.label));
        for (k, reversed) in &p.given {
            let stroke = if *reversed { Stroke::Reversed } else { Stroke::Given };
            curve(&mut w, k, &view, stroke, style);
        }
        for k in &p.solutions {
            curve(&mut w, k, &view, Stroke::Solution, style);
        }
        let _ = writeln!(w.out, "  </svg>");
    }
    let _ = writeln!(w.out, "</svg>");
    w.out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
