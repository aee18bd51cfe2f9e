//! Multi-start Newton solver for the extremal three-triangle system.
//!
//! Three unit homothets sit inside a host triangle, each with two boundary
//! vertices splitting the matching host side into lengths `x_i, t_i, y_i`
//! with `x_i + t_i + y_i = 1` (host side normalized to 1). Tangency of
//! each two-member hull with the third member forces three collinearity
//! polynomials to vanish; minimizing `t_1 + t_2 + t_3` under them is a
//! Lagrange system whose roots include the extremal configuration. The
//! full stationarity system is solved here with damped Newton iterations
//! from random starts; no symbolic elimination is performed.

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lp::solve_dense_rowmajor;

/// Primal variables of the extremal system plus the three multipliers.
#[derive(Copy, Clone, Debug)]
pub struct ExtremalVariables {
    pub x: [f64; 3],
    pub t: [f64; 3],
    pub multipliers: [f64; 3],
}

impl ExtremalVariables {
    pub fn y(&self) -> [f64; 3] {
        [
            1.0 - self.x[0] - self.t[0],
            1.0 - self.x[1] - self.t[1],
            1.0 - self.x[2] - self.t[2],
        ]
    }

    /// All side segments strictly inside `(0, 1)`.
    pub fn in_range(&self) -> bool {
        let y = self.y();
        self.x
            .iter()
            .chain(self.t.iter())
            .chain(y.iter())
            .all(|&v| v > 0.0 && v < 1.0)
    }
}

/// A converged root of the stationarity system.
#[derive(Copy, Clone, Debug)]
pub struct ExtremalSolution {
    pub vars: ExtremalVariables,
    pub t_sum: f64,
    /// Host-to-unit homothety ratio `1 / (t1 + t2 + t3)`.
    pub mu_prime: f64,
    /// Max of constraint residuals and stationarity residuals.
    pub residual: f64,
    /// Whether every segment length lies in `(0, 1)`.
    pub valid: bool,
}

/// The three collinearity polynomials, with `y_i = 1 - x_i - t_i`.
pub fn extremal_residual(x: [f64; 3], t: [f64; 3]) -> [f64; 3] {
    let y = [1.0 - x[0] - t[0], 1.0 - x[1] - t[1], 1.0 - x[2] - t[2]];
    [
        t[2] * x[1] + x[0] * y[2] - x[0] * x[1] - y[1] * y[2],
        t[0] * x[2] + x[1] * y[0] - x[1] * x[2] - y[0] * y[2],
        t[1] * x[0] + x[2] * y[1] - x[0] * x[2] - y[0] * y[1],
    ]
}

fn eq_at(v: &[f64; 6], m: usize) -> f64 {
    extremal_residual([v[0], v[1], v[2]], [v[3], v[4], v[5]])[m]
}

/// Gradient of constraint `m`. The polynomials are quadratic, so central
/// differences with a finite step are exact up to roundoff.
fn grad_eq(v: &[f64; 6], m: usize) -> [f64; 6] {
    let mut g = [0.0; 6];
    let h = 0.5;
    for k in 0..6 {
        let mut vp = *v;
        let mut vm = *v;
        vp[k] += h;
        vm[k] -= h;
        g[k] = (eq_at(&vp, m) - eq_at(&vm, m)) / (2.0 * h);
    }
    g
}

/// Constant Hessian of constraint `m`, obtained by differencing the
/// affine gradient (exact for quadratics).
fn hessian_eq(m: usize) -> [[f64; 6]; 6] {
    let base = [0.0; 6];
    let g0 = grad_eq(&base, m);
    let mut h = [[0.0; 6]; 6];
    for j in 0..6 {
        let mut vj = base;
        vj[j] += 1.0;
        let gj = grad_eq(&vj, m);
        for k in 0..6 {
            h[k][j] = gj[k] - g0[k];
        }
    }
    h
}

/// Full stationarity system: the three constraints plus the gradient of
/// `t1 + t2 + t3 - sum lambda_m eq_m` in the six primal variables.
fn kkt_residual(z: &[f64; 9]) -> [f64; 9] {
    let v: [f64; 6] = z[..6].try_into().expect("slice length");
    let lam = [z[6], z[7], z[8]];
    let mut f = [0.0; 9];
    for m in 0..3 {
        f[m] = eq_at(&v, m);
    }
    let grads = [grad_eq(&v, 0), grad_eq(&v, 1), grad_eq(&v, 2)];
    for k in 0..6 {
        let objective_grad = if k >= 3 { 1.0 } else { 0.0 };
        let mut s = objective_grad;
        for m in 0..3 {
            s -= lam[m] * grads[m][k];
        }
        f[3 + k] = s;
    }
    f
}

fn kkt_jacobian(z: &[f64; 9], hess: &[[[f64; 6]; 6]; 3]) -> [f64; 81] {
    let v: [f64; 6] = z[..6].try_into().expect("slice length");
    let lam = [z[6], z[7], z[8]];
    let grads = [grad_eq(&v, 0), grad_eq(&v, 1), grad_eq(&v, 2)];
    let mut j = [0.0; 81];
    for m in 0..3 {
        for k in 0..6 {
            j[m * 9 + k] = grads[m][k];
        }
    }
    for k in 0..6 {
        for col in 0..6 {
            let mut s = 0.0;
            for m in 0..3 {
                s -= lam[m] * hess[m][k][col];
            }
            j[(3 + k) * 9 + col] = s;
        }
        for m in 0..3 {
            j[(3 + k) * 9 + 6 + m] = -grads[m][k];
        }
    }
    j
}

fn norm_inf(f: &[f64; 9]) -> f64 {
    f.iter().fold(0.0_f64, |a, &b| a.max(b.abs()))
}

const NEWTON_MAX_ITERS: usize = 200;
const NEWTON_TOL: f64 = 1e-13;
const DIVERGENCE_NORM: f64 = 1e3;

fn newton(start: [f64; 9], hess: &[[[f64; 6]; 6]; 3]) -> Option<[f64; 9]> {
    let mut z = start;
    for _ in 0..NEWTON_MAX_ITERS {
        let f = kkt_residual(&z);
        let r = norm_inf(&f);
        if r <= NEWTON_TOL {
            return Some(z);
        }
        if z.iter().any(|v| v.abs() > DIVERGENCE_NORM) {
            return None;
        }
        let jac = kkt_jacobian(&z, hess);
        let rhs: Vec<f64> = f.iter().map(|&v| -v).collect();
        let delta = solve_dense_rowmajor(9, &jac, &rhs)?;
        // Step damping: halve until the residual decreases.
        let mut alpha = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let mut trial = z;
            for k in 0..9 {
                trial[k] += alpha * delta[k];
            }
            if norm_inf(&kkt_residual(&trial)) < r {
                z = trial;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if !accepted {
            return None;
        }
    }
    let f = kkt_residual(&z);
    if norm_inf(&f) <= NEWTON_TOL {
        Some(z)
    } else {
        None
    }
}

/// Runs Newton's method from `n_starts` uniform random starts in
/// `(0,1)^6 x (-5,5)^3`, deduplicates converged roots at primal distance
/// `1e-6`, and reports them sorted by `t_sum` then lexicographically.
pub fn solve_extremal_system(n_starts: usize, seed: u64) -> Vec<ExtremalSolution> {
    let hess = [hessian_eq(0), hessian_eq(1), hessian_eq(2)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut roots: Vec<[f64; 9]> = Vec::new();
    for _ in 0..n_starts {
        let mut start = [0.0; 9];
        for v in start.iter_mut().take(6) {
            *v = rng.gen_range(0.0..1.0);
        }
        for v in start.iter_mut().skip(6) {
            *v = rng.gen_range(-5.0..5.0);
        }
        let Some(z) = newton(start, &hess) else {
            continue;
        };
        let dup = roots.iter().position(|r| {
            let d2: f64 = (0..6).map(|k| (r[k] - z[k]) * (r[k] - z[k])).sum();
            libm::sqrt(d2) < 1e-6
        });
        match dup {
            Some(i) => {
                if norm_inf(&kkt_residual(&z)) < norm_inf(&kkt_residual(&roots[i])) {
                    roots[i] = z;
                }
            }
            None => roots.push(z),
        }
    }
    let mut out: Vec<ExtremalSolution> = roots
        .iter()
        .map(|z| {
            let vars = ExtremalVariables {
                x: [z[0], z[1], z[2]],
                t: [z[3], z[4], z[5]],
                multipliers: [z[6], z[7], z[8]],
            };
            let t_sum = vars.t.iter().sum();
            ExtremalSolution {
                vars,
                t_sum,
                mu_prime: 1.0 / t_sum,
                residual: norm_inf(&kkt_residual(z)),
                valid: vars.in_range(),
            }
        })
        .collect();
    out.sort_by(|a, b| {
        (a.t_sum, a.vars.x, a.vars.t)
            .partial_cmp(&(b.t_sum, b.vars.x, b.vars.t))
            .expect("finite roots")
    });
    out
}

/// The two closed-form symmetric roots: `x_i = 1/4 + 1/(4 sqrt 3)` with
/// `t_i = (3 - sqrt 3)/4`, and `x_i = 1/4 - 1/(4 sqrt 3)` with
/// `t_i = (3 + sqrt 3)/4`.
pub fn symmetric_roots() -> [([f64; 3], [f64; 3]); 2] {
    let s3 = libm::sqrt(3.0);
    let xa = 0.25 + 1.0 / (4.0 * s3);
    let ta = (3.0 - s3) / 4.0;
    let xb = 0.25 - 1.0 / (4.0 * s3);
    let tb = (3.0 + s3) / 4.0;
    [([xa; 3], [ta; 3]), ([xb; 3], [tb; 3])]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_roots_satisfy_constraints() {
        for (x, t) in symmetric_roots() {
            let r = extremal_residual(x, t);
            for v in r {
                assert!(v.abs() < 1e-12, "residual {v}");
            }
        }
    }

    #[test]
    fn symmetric_degenerate_point_is_a_root() {
        let r = extremal_residual([1.0 / 3.0; 3], [1.0 / 3.0; 3]);
        for v in r {
            assert!(v.abs() < 1e-15);
        }
    }

    #[test]
    fn gradients_match_finite_differences() {
        // Independent check of the exact-difference gradient against a
        // small-step quotient at a generic point.
        let v = [0.21, 0.47, 0.33, 0.18, 0.52, 0.4];
        for m in 0..3 {
            let g = grad_eq(&v, m);
            for k in 0..6 {
                let h = 1e-6;
                let mut vp = v;
                let mut vm = v;
                vp[k] += h;
                vm[k] -= h;
                let fd = (eq_at(&vp, m) - eq_at(&vm, m)) / (2.0 * h);
                assert!((g[k] - fd).abs() < 1e-9, "m={m} k={k}: {} vs {fd}", g[k]);
            }
        }
    }

    #[test]
    fn hessians_are_symmetric() {
        for m in 0..3 {
            let h = hessian_eq(m);
            for a in 0..6 {
                for b in 0..6 {
                    assert!((h[a][b] - h[b][a]).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn multistart_finds_paper_roots() {
        let sols = solve_extremal_system(300, 7);
        let [(xa, ta), (xb, tb)] = symmetric_roots();
        let find = |x: &[f64; 3], t: &[f64; 3]| -> Option<&ExtremalSolution> {
            sols.iter().find(|s| {
                s.vars
                    .x
                    .iter()
                    .zip(x)
                    .chain(s.vars.t.iter().zip(t))
                    .all(|(a, b)| (a - b).abs() < 1e-8)
            })
        };
        let s3 = libm::sqrt(3.0);
        let a = find(&xa, &ta).expect("extremal root found");
        assert!(a.valid);
        assert!((a.mu_prime - (2.0 / 3.0 + 2.0 / (3.0 * s3))).abs() < 1e-9);
        let b = find(&xb, &tb).expect("second root found");
        assert!(!b.valid);
        assert!((b.mu_prime - (2.0 / 3.0 - 2.0 / (3.0 * s3))).abs() < 1e-9);
        assert!(sols.iter().any(|s| (s.t_sum - 1.0).abs() < 1e-8));
        for s in &sols {
            assert!(s.residual < 1e-10);
        }
    }
}
