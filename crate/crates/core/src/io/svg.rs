use super::IoError;
use crate::geometry::rational::{format_decimal, in_unit_interval, int, Q};
use crate::geometry::{Shape2, SliceResult, P2};

/// Drawing conventions: square canvas, `v` axis pointing up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderStyle {
    pub canvas: i64,
    pub margin: i64,
    pub stroke_width: u32,
    pub stroke: &'static str,
    pub fill: &'static str,
    pub marker_radius: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        Self { canvas: 1000, margin: 40, stroke_width: 2, stroke: "black", fill: "#999999", marker_radius: 6 }
    }
}

impl RenderStyle {
    fn map(&self, (u, v): &P2) -> String {
        let span = int(self.canvas - 2 * self.margin);
        let x: Q = int(self.margin) + &span * u;
        let y: Q = int(self.canvas - self.margin) - &span * v;
        format!("{} {}", format_decimal(&x, 3), format_decimal(&y, 3))
    }
}

/// Deterministic SVG text: one `path` per item in label order, then the
/// marker dots.
pub fn render_svg(result: &SliceResult, style: &RenderStyle) -> Result<String, IoError> {
    let in_square = |p: &P2| in_unit_interval(&p.0) && in_unit_interval(&p.1);
    for item in &result.items {
        if !item.shape.vertices().into_iter().all(in_square) {
            return Err(IoError::OutOfRange(format!("{} leaves the unit square", item.label)));
        }
    }
    if !result.markers.iter().all(in_square) {
        return Err(IoError::OutOfRange("marker leaves the unit square".into()));
    }
    let c = style.canvas;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{c}\" height=\"{c}\" viewBox=\"0 0 {c} {c}\">\n"
    ));
    out.push_str(&format!("<rect x=\"0\" y=\"0\" width=\"{c}\" height=\"{c}\" fill=\"white\"/>\n"));
    for item in &result.items {
        let (d, fill) = match &item.shape {
            Shape2::Point(p) => (format!("M {} L {}", style.map(p), style.map(p)), "none"),
            Shape2::Segment(a, b) => (format!("M {} L {}", style.map(a), style.map(b)), "none"),
            Shape2::Polygon(v) => {
                let rest: Vec<String> = v[1..].iter().map(|p| format!("L {}", style.map(p))).collect();
                (format!("M {} {} Z", style.map(&v[0]), rest.join(" ")), style.fill)
            }
        };
        out.push_str(&format!(
            "<path data-label=\"{}\" d=\"{d}\" fill=\"{fill}\" stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\"/>\n",
            item.label, style.stroke, style.stroke_width
        ));
    }
    for m in &result.markers {
        let xy = style.map(m);
        let (x, y) = xy.split_once(' ').expect("two coordinates");
        out.push_str(&format!(
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"{}\" fill=\"{}\"/>\n",
            style.marker_radius, style.stroke
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::{one, q, zero};
    use crate::geometry::{Axis, Label, SliceItem};

    fn result(items: Vec<SliceItem>) -> SliceResult {
        SliceResult { axes: [Axis::X1, Axis::X2], fixed: Vec::new(), items, markers: Vec::new() }
    }

    #[test]
    fn empty_result_is_bare_canvas() {
        let svg = render_svg(&result(Vec::new()), &RenderStyle::default()).unwrap();
        assert!(!svg.contains("<path"));
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn coordinates_are_mapped_and_flipped() {
        let item = SliceItem { label: Label::axis(), shape: Shape2::Segment((zero(), zero()), (one(), q(1, 3))) };
        let svg = render_svg(&result(vec![item]), &RenderStyle::default()).unwrap();
        assert!(svg.contains("d=\"M 40.000 960.000 L 960.000 653.333\""), "{svg}");
    }

    #[test]
    fn polygons_are_filled_and_range_checked() {
        let tri = Shape2::Polygon(vec![(zero(), zero()), (one(), zero()), (one(), one())]);
        let svg = render_svg(&result(vec![SliceItem { label: Label::cap(1), shape: tri }]), &RenderStyle::default());
        assert!(svg.unwrap().contains("fill=\"#999999\""));
        let far = SliceItem { label: Label::axis(), shape: Shape2::Point((int(2), zero())) };
        assert!(matches!(render_svg(&result(vec![far]), &RenderStyle::default()), Err(IoError::OutOfRange(_))));
    }
}
