//! Deterministic SVG rendering of planar scenes: members as filled
//! shapes, the hull of the union dashed, a covering homothet outlined, and
//! a separating line dotted when a certificate is supplied.

use std::fmt::Write as _;

use nonsep_core::covering::CoveringResult;
use nonsep_core::geom::{convex_hull, v2, ConvexPolygon, Vec2};
use nonsep_core::scene::{Body, ReferenceBody, Scene};
use nonsep_core::separation::SeparationCertificate;

/// Canvas and layer options.
#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub canvas_px: f64,
    pub stroke_width: f64,
    pub draw_members: bool,
    pub draw_hull: bool,
    pub draw_cover: bool,
    pub draw_gap_line: bool,
    pub annotate: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            canvas_px: 640.0,
            stroke_width: 0.012,
            draw_members: true,
            draw_hull: true,
            draw_cover: true,
            draw_gap_line: true,
            annotate: false,
        }
    }
}

const PALETTE: [&str; 6] = [
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377",
];

#[derive(Debug)]
pub enum RenderError {
    Unsupported(&'static str),
}

impl std::fmt::Display for RenderError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RenderError::Unsupported(m) => write!(f, "cannot render: {m}"),
        }
    }
}

impl std::error::Error for RenderError {}

fn fmt_num(v: f64) -> String {
    format!("{v:.6}")
}

/// Renders a planar scene to an SVG document string.
pub fn render_scene(
    scene: &Scene,
    cover: Option<&CoveringResult>,
    certificate: Option<&SeparationCertificate>,
    spec: &RenderSpec,
) -> Result<String, RenderError> {
    if scene.dimension() != 2 {
        return Err(RenderError::Unsupported("spatial scenes have no planar rendering"));
    }
    let bodies = scene.realize_all();

    // Bounds: the cover when present (plus members), else the members.
    let mut lo = v2(f64::MAX, f64::MAX);
    let mut hi = v2(f64::MIN, f64::MIN);
    let mut take = |p: Vec2| {
        lo = v2(lo.x.min(p.x), lo.y.min(p.y));
        hi = v2(hi.x.max(p.x), hi.y.max(p.y));
    };
    for b in &bodies {
        match b {
            Body::Polygon(p) => p.vertices().iter().for_each(|&v| take(v)),
            Body::Disk(d) => {
                take(d.center + v2(d.radius, d.radius));
                take(d.center - v2(d.radius, d.radius));
            }
            _ => return Err(RenderError::Unsupported("spatial member")),
        }
    }
    if let Some(c) = cover {
        let t = c.translation.xy();
        match scene.reference() {
            ReferenceBody::Polygon(k) => {
                for &v in k.homothet(c.ratio, t).expect("positive ratio").vertices() {
                    take(v);
                }
            }
            ReferenceBody::Ball => {
                take(t + v2(c.ratio, c.ratio));
                take(t - v2(c.ratio, c.ratio));
            }
            ReferenceBody::Polytope3(_) => {}
        }
    }
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let margin = 0.05 * span;
    lo = lo - v2(margin, margin);
    hi = hi + v2(margin, margin);

    // SVG y grows downward; flip on output.
    let flip = |p: Vec2| v2(p.x, hi.y + lo.y - p.y);
    let sw = spec.stroke_width * span;

    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{w}\" viewBox=\"{x} {y} {vw} {vh}\">\n",
        w = spec.canvas_px,
        x = fmt_num(lo.x),
        y = fmt_num(lo.y),
        vw = fmt_num(hi.x - lo.x),
        vh = fmt_num(hi.y - lo.y),
    );

    let polygon_points = |p: &ConvexPolygon| -> String {
        p.vertices()
            .iter()
            .map(|&v| {
                let f = flip(v);
                format!("{},{}", fmt_num(f.x), fmt_num(f.y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    if spec.draw_cover {
        if let Some(c) = cover {
            let t = c.translation.xy();
            match scene.reference() {
                ReferenceBody::Polygon(k) => {
                    let shape = k.homothet(c.ratio, t).expect("positive ratio");
                    let _ = write!(
                        svg,
                        "<polygon points=\"{}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"{}\"/>\n",
                        polygon_points(&shape),
                        fmt_num(1.5 * sw)
                    );
                }
                ReferenceBody::Ball => {
                    let f = flip(t);
                    let _ = write!(
                        svg,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#222222\" stroke-width=\"{}\"/>\n",
                        fmt_num(f.x),
                        fmt_num(f.y),
                        fmt_num(c.ratio),
                        fmt_num(1.5 * sw)
                    );
                }
                ReferenceBody::Polytope3(_) => {}
            }
        }
    }

    if spec.draw_hull {
        if let ReferenceBody::Polygon(_) = scene.reference() {
            if let Ok(hull) = convex_hull(&scene.all_vertices2()) {
                let _ = write!(
                    svg,
                    "<polygon points=\"{}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>\n",
                    polygon_points(&hull),
                    fmt_num(0.8 * sw),
                    fmt_num(3.0 * sw),
                    fmt_num(2.0 * sw)
                );
            }
        }
    }

    if spec.draw_members {
        for (i, b) in bodies.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            match b {
                Body::Polygon(p) => {
                    let _ = write!(
                        svg,
                        "<polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.4\" stroke=\"{color}\" stroke-width=\"{}\"/>\n",
                        polygon_points(p),
                        fmt_num(sw)
                    );
                }
                Body::Disk(d) => {
                    let f = flip(d.center);
                    let _ = write!(
                        svg,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{color}\" fill-opacity=\"0.4\" stroke=\"{color}\" stroke-width=\"{}\"/>\n",
                        fmt_num(f.x),
                        fmt_num(f.y),
                        fmt_num(d.radius),
                        fmt_num(sw)
                    );
                }
                _ => {}
            }
        }
    }

    if spec.draw_gap_line {
        if let Some(SeparationCertificate::Separable { direction, gap, .. }) = certificate {
            // The separating line <x, u> = midpoint, clipped generously.
            let u = direction.vec();
            let c = 0.5 * (gap.0 + gap.1);
            let along = u.perp();
            let reach = 2.0 * span;
            let a = flip(c * u + reach * along);
            let b = flip(c * u - reach * along);
            let _ = write!(
                svg,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#cc0000\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>\n",
                fmt_num(a.x),
                fmt_num(a.y),
                fmt_num(b.x),
                fmt_num(b.y),
                fmt_num(sw),
                fmt_num(sw),
                fmt_num(1.5 * sw)
            );
        }
    }

    if spec.annotate {
        let mut label = format!("{} members", scene.len());
        if let Some(c) = cover {
            let _ = write!(label, "; lambda = {:.7}; ratio = {:.7}", c.lambda, c.ratio);
        }
        let anchor = flip(v2(lo.x + 1.5 * margin, hi.y - 1.5 * margin));
        let _ = write!(
            svg,
            "<text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"#222222\">{}</text>\n",
            fmt_num(anchor.x),
            fmt_num(anchor.y),
            fmt_num(0.04 * span),
            label
        );
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nonsep_core::covering::smallest_cover;
    use nonsep_core::scene::generators::{gen_circle_ring, gen_counterexample_triangles};
    use nonsep_core::separation::is_nonseparable_sweep;

    #[test]
    fn renders_counterexample_with_cover() {
        let scene = gen_counterexample_triangles();
        let cover = smallest_cover(&scene).unwrap();
        let svg = render_scene(&scene, Some(&cover), None, &RenderSpec::default()).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 3 + 1 + 1); // members + hull + cover
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn renders_gap_line_for_separable_subfamily() {
        let ring = gen_circle_ring(2, 0.01).unwrap();
        let sub = ring.subscene(&[0, 1, 2, 3]).unwrap();
        let cert = is_nonseparable_sweep(&sub).unwrap();
        assert!(cert.is_separable());
        let svg = render_scene(&sub, None, Some(&cert), &RenderSpec::default()).unwrap();
        assert!(svg.contains("<line"));
        assert_eq!(svg.matches("<circle").count(), 4);
    }

    #[test]
    fn deterministic_output() {
        let scene = gen_counterexample_triangles();
        let a = render_scene(&scene, None, None, &RenderSpec::default()).unwrap();
        let b = render_scene(&scene, None, None, &RenderSpec::default()).unwrap();
        assert_eq!(a, b);
    }
}
