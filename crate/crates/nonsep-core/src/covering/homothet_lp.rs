//! Smallest covering homothet of a polygon or polytope reference via a
//! linear program: minimize the scale `s` over translations `t` subject to
//! `<a_j, p> - <a_j, t> <= s b_j` for every facet `(a_j, b_j)` of the
//! reference and every vertex `p` of every realized member. With the
//! origin interior to the reference, every `b_j` is positive, so a large
//! enough `s` is always feasible.

use alloc::vec;
use alloc::vec::Vec;

use super::{CoveringError, CoveringResult};
use crate::geom::{v3, Vec3};
use crate::lp::{solve_lp, LpRow};
use crate::scene::{Body, ReferenceBody, Scene};

struct CoverProgram {
    dim: usize,
    rows: Vec<LpRow>,
}

fn build_program(scene: &Scene) -> Result<CoverProgram, CoveringError> {
    let mut rows: Vec<LpRow> = Vec::new();
    match scene.reference() {
        ReferenceBody::Polygon(k) => {
            let facets = k.facets();
            for body in scene.realize_all() {
                let Body::Polygon(p) = body else {
                    return Err(CoveringError::Unsupported("mixed member kinds"));
                };
                for v in p.vertices() {
                    for f in &facets {
                        let a = f.normal.vec();
                        rows.push(LpRow {
                            coeffs: vec![-a.x, -a.y, -f.offset],
                            rhs: -a.dot(*v),
                        });
                    }
                }
            }
            Ok(CoverProgram { dim: 2, rows })
        }
        ReferenceBody::Polytope3(k) => {
            for body in scene.realize_all() {
                let Body::Polytope(p) = body else {
                    return Err(CoveringError::Unsupported("mixed member kinds"));
                };
                for v in p.vertices() {
                    for f in k.facets() {
                        let a = f.normal.vec();
                        rows.push(LpRow {
                            coeffs: vec![-a.x, -a.y, -a.z, -f.offset],
                            rhs: -a.dot(*v),
                        });
                    }
                }
            }
            Ok(CoverProgram { dim: 3, rows })
        }
        ReferenceBody::Ball => Err(CoveringError::Unsupported(
            "ball references use the enclosing-ball solver",
        )),
    }
}

/// Optimal covering homothet of a polygon/polytope scene.
pub fn smallest_covering_homothet(scene: &Scene) -> Result<CoveringResult, CoveringError> {
    let prog = build_program(scene)?;
    let mut objective = vec![0.0; prog.dim + 1];
    objective[prog.dim] = 1.0;
    let sol = solve_lp(&objective, &prog.rows)?;
    let (translation, ratio) = match prog.dim {
        2 => (v3(sol.x[0], sol.x[1], 0.0), sol.x[2]),
        _ => (v3(sol.x[0], sol.x[1], sol.x[2]), sol.x[3]),
    };
    let slack = containment_slack(scene, translation, ratio);
    let tight = prog
        .rows
        .iter()
        .filter(|r| {
            let lhs: f64 = r.coeffs.iter().zip(&sol.x).map(|(c, x)| c * x).sum();
            (lhs - r.rhs).abs() <= 1e-8
        })
        .count();
    Ok(CoveringResult {
        ratio,
        translation,
        lambda: ratio / scene.ratio_sum(),
        slack,
        tight_constraints: tight,
    })
}

/// Worst violation of `member vertices inside translation + ratio * K`.
pub(crate) fn containment_slack(scene: &Scene, translation: Vec3, ratio: f64) -> f64 {
    let mut worst = f64::NEG_INFINITY;
    match scene.reference() {
        ReferenceBody::Polygon(k) => {
            let t = translation.xy();
            for body in scene.realize_all() {
                let Body::Polygon(p) = body else { continue };
                for v in p.vertices() {
                    // Scale-invariant form of the facet checks.
                    for f in k.facets() {
                        worst = worst
                            .max(f.normal.vec().dot(*v - t) - ratio * f.offset);
                    }
                }
            }
        }
        ReferenceBody::Polytope3(k) => {
            for body in scene.realize_all() {
                let Body::Polytope(p) = body else { continue };
                for v in p.vertices() {
                    for f in k.facets() {
                        worst = worst
                            .max(f.normal.vec().dot(*v - translation) - ratio * f.offset);
                    }
                }
            }
        }
        ReferenceBody::Ball => {
            let t = translation.xy();
            for body in scene.realize_all() {
                let Body::Disk(d) = body else { continue };
                worst = worst.max(d.center.dist(t) + d.radius - ratio);
            }
        }
    }
    worst
}

/// Whether a cover of scale `s` exists at all: solves the feasibility
/// program `min theta` over translations with the scale held fixed and
/// reports `theta <= 0`.
pub fn covering_feasible_at(scene: &Scene, s: f64) -> Result<bool, CoveringError> {
    let ReferenceBody::Polygon(k) = scene.reference() else {
        return Err(CoveringError::Unsupported(
            "feasibility probe is for polygon scenes",
        ));
    };
    let facets = k.facets();
    let mut rows: Vec<LpRow> = Vec::new();
    for body in scene.realize_all() {
        let Body::Polygon(p) = body else {
            return Err(CoveringError::Unsupported("mixed member kinds"));
        };
        for v in p.vertices() {
            for f in &facets {
                let a = f.normal.vec();
                // <a, v> - <a, t> - s b <= theta
                rows.push(LpRow {
                    coeffs: vec![-a.x, -a.y, -1.0],
                    rhs: s * f.offset - a.dot(*v),
                });
            }
        }
    }
    let sol = solve_lp(&[0.0, 0.0, 1.0], &rows)?;
    Ok(sol.x[2] <= 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{v2, ConvexPolygon};
    use crate::scene::generators::{
        chain_side, counterexample_lambda, counterexample_side, gen_counterexample_triangles,
        gen_tetrahedra, gen_triangle_chain,
    };
    use crate::scene::{Homothet, ReferenceBody, Scene};

    #[test]
    fn counterexample_lambda_matches_closed_form() {
        let scene = gen_counterexample_triangles();
        let res = smallest_covering_homothet(&scene).unwrap();
        assert!(
            (res.ratio - counterexample_side()).abs() < 1e-9,
            "ratio {}",
            res.ratio
        );
        assert!((res.lambda - counterexample_lambda()).abs() < 1e-9);
        assert!(res.slack <= 1e-9);
        assert!(res.tight_constraints >= 3);
    }

    #[test]
    fn duplicated_body_gives_half() {
        let scene = Scene::new(
            2,
            "dup",
            ReferenceBody::Polygon(ConvexPolygon::unit_triangle()),
            alloc::vec![
                Homothet::new2(v2(0.0, 0.0), 1.0),
                Homothet::new2(v2(0.0, 0.0), 1.0),
            ],
        )
        .unwrap();
        let res = smallest_covering_homothet(&scene).unwrap();
        assert!((res.ratio - 1.0).abs() < 1e-9);
        assert!((res.lambda - 0.5).abs() < 1e-9);
    }

    #[test]
    fn chain_sides_match_formula() {
        for n in [4usize, 7] {
            let scene = gen_triangle_chain(n).unwrap();
            let res = smallest_covering_homothet(&scene).unwrap();
            assert!(
                (res.ratio - chain_side(n)).abs() < 1e-8,
                "n={n}: ratio {} expected {}",
                res.ratio,
                chain_side(n)
            );
        }
    }

    #[test]
    fn tetrahedra_lambda_matches_planar_value() {
        let scene = gen_tetrahedra();
        let res = smallest_covering_homothet(&scene).unwrap();
        assert!(res.lambda >= counterexample_lambda() - 1e-6);
        assert!((res.lambda - counterexample_lambda()).abs() < 1e-6);
        assert!(res.slack <= 1e-9);
    }

    #[test]
    fn shrinking_below_optimum_is_infeasible() {
        let scene = gen_counterexample_triangles();
        let res = smallest_covering_homothet(&scene).unwrap();
        assert!(covering_feasible_at(&scene, res.ratio + 1e-9).unwrap());
        assert!(!covering_feasible_at(&scene, res.ratio - 1e-6).unwrap());
    }
}
