//! SVG drawings in the upper half-plane. Sides of regions are hyperbolic
//! geodesics: vertical rays or circular arcs centered on the real axis.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use hml_core::modular::ReductionGroup;
use hml_core::numcore::{c, moebius, OMEGA, OMEGA2};
use hml_core::schwarz::{vertex_limits, Vertex};
use hml_core::{ComplexValue, IntMat2, Mat2, SchwarzId};

/// A vertex of a geodesic polygon: a point of the closed upper half-plane
/// or the cusp at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pt {
    At(ComplexValue),
    Infinity,
}

impl Pt {
    /// `g . p` for `g` in `SL2(Z)`.
    pub fn act(&self, g: &IntMat2) -> Pt {
        match self {
            Pt::Infinity if g.g21 == 0 => Pt::Infinity,
            Pt::Infinity => Pt::At(c(g.g11 as f64 / g.g21 as f64, 0.0)),
            Pt::At(z) => match moebius(&Mat2::from(*g), *z) {
                Ok(w) => Pt::At(w),
                Err(_) => Pt::Infinity,
            },
        }
    }
}

/// World window `[x0, x1] x [0, y1]` mapped onto a `width`-pixel canvas.
#[derive(Debug, Clone, Copy)]
pub struct View {
    pub x0: f64,
    pub x1: f64,
    pub y1: f64,
    pub width: f64,
}

impl View {
    fn scale(&self) -> f64 {
        self.width / (self.x1 - self.x0)
    }

    fn height(&self) -> f64 {
        self.y1 * self.scale() + 30.0
    }

    fn sx(&self, x: f64) -> f64 {
        (x - self.x0) * self.scale()
    }

    fn sy(&self, y: f64) -> f64 {
        (self.y1 - y) * self.scale() + 10.0
    }

    fn xy(&self, z: ComplexValue) -> (f64, f64) {
        (self.sx(z.re), self.sy(z.im))
    }
}

/// Path commands continuing from `p` to `q` along the geodesic.
fn geodesic(view: &View, p: Pt, q: Pt, out: &mut String) {
    match (p, q) {
        (Pt::At(a), Pt::Infinity) => {
            let _ = write!(out, " L {:.3} {:.3}", view.sx(a.re), view.sy(view.y1));
        }
        (Pt::Infinity, Pt::At(b)) => {
            let _ = write!(
                out,
                " L {:.3} {:.3} L {:.3} {:.3}",
                view.sx(b.re),
                view.sy(view.y1),
                view.sx(b.re),
                view.sy(b.im)
            );
        }
        (Pt::At(a), Pt::At(b)) if (a.re - b.re).abs() < 1e-12 => {
            let _ = write!(out, " L {:.3} {:.3}", view.sx(b.re), view.sy(b.im));
        }
        (Pt::At(a), Pt::At(b)) => {
            let center = (a.norm_sqr() - b.norm_sqr()) / (2.0 * (a.re - b.re));
            let r = (a - center).norm() * view.scale();
            let sweep = u8::from(a.re < b.re);
            let (x, y) = view.xy(b);
            let _ = write!(out, " A {r:.3} {r:.3} 0 0 {sweep} {x:.3} {y:.3}");
        }
        (Pt::Infinity, Pt::Infinity) => {}
    }
}

/// Closed SVG path of a geodesic polygon.
pub fn polygon_path(view: &View, vertices: &[Pt]) -> String {
    let start = vertices.iter().position(|v| matches!(v, Pt::At(_))).unwrap_or(0);
    let ring: Vec<Pt> = vertices[start..].iter().chain(&vertices[..start]).copied().collect();
    let Pt::At(first) = ring[0] else { return String::new() };
    let (x, y) = view.xy(first);
    let mut d = format!("M {x:.3} {y:.3}");
    for k in 0..ring.len() {
        geodesic(view, ring[k], ring[(k + 1) % ring.len()], &mut d);
    }
    d.push_str(" Z");
    d
}

struct Canvas {
    view: View,
    body: String,
}

impl Canvas {
    fn new(view: View) -> Self {
        let mut body = String::new();
        let y = view.sy(0.0);
        let _ = writeln!(
            body,
            r##"<line x1="0" y1="{y:.3}" x2="{:.3}" y2="{y:.3}" stroke="#444" stroke-width="1"/>"##,
            view.width
        );
        let mut k = view.x0.ceil() as i64;
        while k as f64 <= view.x1 {
            let x = view.sx(k as f64);
            let _ = writeln!(
                body,
                r##"<text x="{x:.3}" y="{:.3}" font-size="11" text-anchor="middle" fill="#444">{k}</text>"##,
                y + 14.0
            );
            k += 1;
        }
        Self { view, body }
    }

    fn polygon(&mut self, vertices: &[Pt], stroke: &str, fill: &str) {
        let d = polygon_path(&self.view, vertices);
        let _ = writeln!(
            self.body,
            r#"<path d="{d}" stroke="{stroke}" stroke-width="1.5" fill="{fill}" fill-opacity="0.2"/>"#
        );
    }

    fn label(&mut self, at: ComplexValue, text: &str) {
        let (x, y) = self.view.xy(at);
        let _ = writeln!(self.body, r#"<circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="black"/>"#);
        let _ = writeln!(
            self.body,
            r#"<text x="{:.3}" y="{:.3}" font-size="13">{}</text>"#,
            x + 5.0,
            y - 5.0,
            escape(text)
        );
    }

    /// The cusp at infinity, drawn as an upward arrow above `x`.
    fn cusp_arrow(&mut self, x: f64) {
        let sx = self.view.sx(x);
        let top = self.view.sy(self.view.y1);
        let _ = writeln!(
            self.body,
            r#"<path d="M {sx:.3} {:.3} L {sx:.3} {top:.3} M {:.3} {:.3} L {sx:.3} {top:.3} L {:.3} {:.3}" stroke="black" fill="none"/>"#,
            top + 30.0,
            sx - 5.0,
            top + 8.0,
            sx + 5.0,
            top + 8.0
        );
        let _ = writeln!(self.body, r#"<text x="{:.3}" y="{:.3}" font-size="13">i∞</text>"#, sx + 7.0, top + 14.0);
    }

    fn finish(self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0}\" height=\"{:.0}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
            self.view.width,
            self.view.height(),
            self.body
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// `{-1/2 < Re <= 1/2, |tau| >= 1}` as the triangle `(omega, -omega^2, i inf)`.
pub fn modular_region() -> Vec<Pt> {
    vec![Pt::At(OMEGA), Pt::At(-OMEGA2), Pt::Infinity]
}

/// `{-3/2 < Re <= 1/2, |tau| >= 1, |tau + 1| >= 1}`.
pub fn cube_root_region() -> Vec<Pt> {
    vec![Pt::Infinity, Pt::At(OMEGA - 1.0), Pt::At(OMEGA), Pt::At(-OMEGA2)]
}

pub fn fundamental_domains() -> String {
    let mut cv = Canvas::new(View { x0: -2.0, x1: 1.5, y1: 2.5, width: 700.0 });
    cv.polygon(&cube_root_region(), "#1f6fb4", "#1f6fb4");
    cv.polygon(&modular_region(), "#c0392b", "#c0392b");
    cv.label(OMEGA - 1.0, "ω−1");
    cv.label(OMEGA, "ω");
    cv.label(-OMEGA2, "−ω²");
    cv.cusp_arrow(-0.5);
    cv.finish()
}

pub fn schwarz_triangle(id: SchwarzId) -> String {
    let mut cv = Canvas::new(View { x0: -1.0, x1: 1.5, y1: 2.5, width: 600.0 });
    let vertices: Vec<(Pt, &str)> = vertex_limits(id)
        .iter()
        .map(|v| match v {
            Vertex::Cusp => (Pt::Infinity, "i∞"),
            Vertex::Point { label, value } => (Pt::At(*value), *label),
        })
        .collect();
    let pts: Vec<Pt> = vertices.iter().map(|v| v.0).collect();
    cv.polygon(&pts, "#1f6fb4", "#1f6fb4");
    let mut cusp_x = Vec::new();
    for (p, label) in &vertices {
        match p {
            Pt::At(z) => {
                cv.label(*z, label);
                cusp_x.push(z.re);
            }
            Pt::Infinity => {}
        }
    }
    let x = cusp_x.iter().sum::<f64>() / cusp_x.len().max(1) as f64;
    cv.cusp_arrow(x);
    cv.finish()
}

/// Group elements whose images of the fundamental region are drawn: all
/// reduced words of length at most `depth` in the generators, one per
/// projective class.
pub fn tessellation_cells(group: ReductionGroup, depth: usize) -> Vec<IntMat2> {
    let t = IntMat2::T;
    let gens: Vec<IntMat2> = match group {
        ReductionGroup::SL2Z => vec![t, IntMat2::new(1, -1, 0, 1), IntMat2::J],
        ReductionGroup::Gamma2CubeRoot => vec![t * t, IntMat2::new(1, -2, 0, 1), IntMat2::W, IntMat2::W * IntMat2::W],
    };
    let key = |g: &IntMat2| if g.g11 < 0 || (g.g11 == 0 && g.g12 < 0) { -*g } else { *g };
    let mut seen = HashSet::new();
    let mut cells = Vec::new();
    let mut queue = VecDeque::from([(IntMat2::IDENTITY, 0usize)]);
    seen.insert(key(&IntMat2::IDENTITY));
    while let Some((g, len)) = queue.pop_front() {
        cells.push(g);
        if len == depth {
            continue;
        }
        for s in &gens {
            let h = g * *s;
            if seen.insert(key(&h)) {
                queue.push_back((h, len + 1));
            }
        }
    }
    cells
}

pub fn tessellation(group: ReductionGroup, depth: usize) -> String {
    let mut cv = Canvas::new(View { x0: -2.5, x1: 2.5, y1: 2.5, width: 800.0 });
    let base = match group {
        ReductionGroup::SL2Z => modular_region(),
        ReductionGroup::Gamma2CubeRoot => cube_root_region(),
    };
    for (k, g) in tessellation_cells(group, depth).iter().enumerate() {
        let image: Vec<Pt> = base.iter().map(|p| p.act(g)).collect();
        let fill = if k == 0 { "#c0392b" } else { "none" };
        cv.polygon(&image, "#1f6fb4", fill);
    }
    cv.cusp_arrow(0.0);
    cv.finish()
}
