//! Static SVG output for paths, deviation diagrams and growth-chart sheets.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::fractal::RectFit;
use crate::turtle::growth::GrowthChart;
use crate::turtle::line::{deviation_diagram, zero_excursions, DeviationDiagram, ExcursionReport};
use crate::turtle::path::Path;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderStyle {
    pub stroke_width: f64,
    pub path_color: String,
    pub fill_color: String,
    pub axis_color: String,
    pub mirror_color: String,
    pub bbox_color: String,
    /// Pixels per unit length.
    pub scale: f64,
    pub margin: f64,
}

impl Default for RenderStyle {
    fn default() -> RenderStyle {
        RenderStyle {
            stroke_width: 1.0,
            path_color: "000000".into(),
            fill_color: "9966cc".into(),
            axis_color: "cc0000".into(),
            mirror_color: "0066cc".into(),
            bbox_color: "339933".into(),
            scale: 10.0,
            margin: 10.0,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        if self.scale.is_nan() || self.scale <= 0.0 {
            return Err(Error::Invalid("scale must be positive".into()));
        }
        for c in [&self.path_color, &self.fill_color, &self.axis_color, &self.mirror_color, &self.bbox_color] {
            if c.len() != 6 || !c.chars().all(|x| x.is_ascii_hexdigit()) {
                return Err(Error::Invalid(format!("color {c:?} is not 6 hex digits")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overlays {
    pub rectangle: Option<RectFit>,
    /// Red cross at the half-turn center.
    pub center: Option<[f64; 2]>,
}

struct Canvas {
    min: [f64; 2],
    max: [f64; 2],
    scale: f64,
    margin: f64,
    body: String,
}

impl Canvas {
    fn new(points: &[[f64; 2]], style: &RenderStyle) -> Canvas {
        let mut min = points[0];
        let mut max = min;
        for p in points {
            for i in 0..2 {
                min[i] = min[i].min(p[i]);
                max[i] = max[i].max(p[i]);
            }
        }
        Canvas { min, max, scale: style.scale, margin: style.margin, body: String::new() }
    }

    fn xy(&self, p: [f64; 2]) -> (f64, f64) {
        ((p[0] - self.min[0]) * self.scale + self.margin, (self.max[1] - p[1]) * self.scale + self.margin)
    }

    fn pts(&self, ps: &[[f64; 2]]) -> String {
        let mut s = String::new();
        for (i, &p) in ps.iter().enumerate() {
            let (x, y) = self.xy(p);
            if i > 0 {
                s.push(' ');
            }
            write!(s, "{x:.3},{y:.3}").unwrap();
        }
        s
    }

    fn polyline(&mut self, ps: &[[f64; 2]], color: &str, width: f64) {
        let d = self.pts(ps);
        writeln!(self.body, r##"<polyline points="{d}" fill="none" stroke="#{color}" stroke-width="{width}"/>"##).unwrap();
    }

    fn line(&mut self, a: [f64; 2], b: [f64; 2], color: &str, width: f64) {
        let (x1, y1) = self.xy(a);
        let (x2, y2) = self.xy(b);
        writeln!(
            self.body,
            r##"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#{color}" stroke-width="{width}"/>"##
        )
        .unwrap();
    }

    fn polygon(&mut self, ps: &[[f64; 2]], fill: &str, stroke: Option<(&str, f64)>) {
        let d = self.pts(ps);
        let st = match stroke {
            Some((c, w)) => format!(r##" stroke="#{c}" stroke-width="{w}""##),
            None => String::new(),
        };
        let fill = if fill == "none" { "none".to_string() } else { format!("#{fill}") };
        writeln!(self.body, r##"<polygon points="{d}" fill="{fill}"{st}/>"##).unwrap();
    }

    fn finish(self) -> String {
        let w = (self.max[0] - self.min[0]) * self.scale + 2.0 * self.margin;
        let h = (self.max[1] - self.min[1]) * self.scale + 2.0 * self.margin;
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.3}\" height=\"{h:.3}\" viewBox=\"0 0 {w:.3} {h:.3}\">\n{}</svg>\n",
            self.body
        )
    }
}

pub fn render_path_svg(p: &Path, style: &RenderStyle, overlays: &Overlays) -> Result<String> {
    style.validate()?;
    if p.vertices.len() < 2 {
        return Err(Error::EmptyCanvas);
    }
    let mut pts = p.vertices.clone();
    if let Some(r) = &overlays.rectangle {
        pts.extend_from_slice(&r.corners);
    }
    let mut c = Canvas::new(&pts, style);
    if let Some(r) = &overlays.rectangle {
        c.polygon(&r.corners, "none", Some((&style.bbox_color, style.stroke_width)));
        c.line(r.diagonal[0], r.diagonal[1], &style.bbox_color, style.stroke_width);
    }
    if p.vertices.len() == 2 {
        c.line(p.vertices[0], p.vertices[1], &style.path_color, style.stroke_width);
    } else {
        c.polyline(&p.vertices, &style.path_color, style.stroke_width);
    }
    if let Some(m) = overlays.center {
        let d = 3.0 / style.scale;
        c.line([m[0] - d, m[1] - d], [m[0] + d, m[1] + d], &style.axis_color, style.stroke_width);
        c.line([m[0] - d, m[1] + d], [m[0] + d, m[1] - d], &style.axis_color, style.stroke_width);
    }
    Ok(c.finish())
}

/// Polygons closing each closed excursion's stretch of the diagram against the zero axis.
pub fn excursion_regions(d: &DeviationDiagram, w: &Word, rep: &ExcursionReport) -> Vec<Vec<[f64; 2]>> {
    // polyline index reached after each letter
    let mut ends = vec![0usize];
    let mut i = 0;
    for &c in w.letters() {
        i += if c == b'a' { 1 } else { 3 };
        ends.push(i);
    }
    rep.excursions
        .iter()
        .filter(|e| e.closed)
        .map(|e| d.polyline[ends[e.start]..=ends[e.end]].to_vec())
        .collect()
}

pub fn render_deviation_svg(w: &Word, drop: f64, fills: bool, style: &RenderStyle) -> Result<String> {
    style.validate()?;
    let d = deviation_diagram(w, drop)?;
    if d.polyline.len() < 2 {
        return Err(Error::EmptyCanvas);
    }
    let mut c = Canvas::new(&d.polyline, style);
    if fills {
        let rep = zero_excursions(w, false)?;
        for r in excursion_regions(&d, w, &rep) {
            c.polygon(&r, &style.fill_color, None);
        }
    }
    let (top, bot) = (c.max[1], c.min[1]);
    c.line([0.0, top], [0.0, bot], &style.axis_color, style.stroke_width);
    c.polyline(&d.polyline, &style.path_color, style.stroke_width);
    Ok(c.finish())
}

/// One deviation diagram per node, laid out in rows.
pub fn render_growth_svg(g: &GrowthChart, style: &RenderStyle, max_nodes: usize) -> Result<String> {
    style.validate()?;
    let nodes: Vec<_> = g.nodes.iter().take(max_nodes).collect();
    if nodes.is_empty() {
        return Err(Error::EmptyCanvas);
    }
    let diagrams: Vec<DeviationDiagram> =
        nodes.iter().map(|n| deviation_diagram(&n.word, 0.4)).collect::<Result<_>>()?;
    let cell_w = diagrams
        .iter()
        .flat_map(|d| d.polyline.iter().map(|p| p[0].abs()))
        .fold(1.0, f64::max)
        * 2.0
        + 2.0;
    let cell_h = diagrams.iter().map(|d| d.total_drop).fold(1.0, f64::max) + 2.0;
    let cols = (nodes.len() as f64).sqrt().ceil() as usize;
    let mut all = Vec::new();
    let mut placed = Vec::new();
    for (i, d) in diagrams.iter().enumerate() {
        let ox = (i % cols) as f64 * cell_w + cell_w / 2.0;
        let oy = -((i / cols) as f64) * cell_h;
        let pl: Vec<[f64; 2]> = d.polyline.iter().map(|p| [p[0] + ox, p[1] + oy]).collect();
        all.extend_from_slice(&pl);
        all.push([ox, oy + 0.5]);
        placed.push((ox, oy, pl, d.total_drop));
    }
    let mut c = Canvas::new(&all, style);
    for (ox, oy, pl, drop) in placed {
        c.line([ox, oy + 0.5], [ox, oy - drop - 0.5], &style.axis_color, style.stroke_width);
        c.polyline(&pl, &style.path_color, style.stroke_width);
    }
    Ok(c.finish())
}
