//! A small dense linear-programming solver for geometric covering problems:
//! minimize `c . x` subject to `A x <= b` with free variables.
//!
//! The problems here have very few variables (translation components plus a
//! scale) and up to a few hundred inequality rows, so the dual is solved in
//! standard form with a two-phase revised simplex whose basis is a tiny
//! dense matrix. Bland's rule is used throughout for cycling safety.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LpError {
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("simplex did not converge within {0} pivots")]
    PivotLimit(usize),
    #[error("singular basis encountered")]
    Singular,
}

/// One inequality row `<coeffs, x> <= rhs`.
#[derive(Clone, Debug)]
pub struct LpRow {
    pub coeffs: Vec<f64>,
    pub rhs: f64,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    /// Row indices of the final basis: a set of constraints tight at the
    /// optimum whose normals span the variable space.
    pub tight_rows: Vec<usize>,
    pub pivots: usize,
}

const MAX_PIVOTS: usize = 10_000;
const EPS_COST: f64 = 1e-10;
const EPS_PIVOT: f64 = 1e-11;

/// Solves `min c . x` over `{ x : A x <= b }` with `x` free.
///
/// The dual `min b . w, MT w = c, w >= 0` (with `M` holding the negated
/// rows of `A` as columns) is solved instead; its optimal basis names the
/// tight primal rows, and the primal optimum is recovered from them.
pub fn solve_lp(c: &[f64], rows: &[LpRow]) -> Result<LpSolution, LpError> {
    let k = c.len();
    let m = rows.len();
    assert!(k > 0 && rows.iter().all(|r| r.coeffs.len() == k));
    if m < k {
        return Err(LpError::Unbounded);
    }

    // Dual standard form: columns m_j = -a_j (a_j = primal row j), target c.
    let mut cols: Vec<Vec<f64>> = rows.iter().map(|r| r.coeffs.iter().map(|v| -v).collect()).collect();
    let mut target: Vec<f64> = c.to_vec();
    let duals_obj: Vec<f64> = rows.iter().map(|r| r.rhs).collect();

    // Make the equality targets nonnegative so the artificial basis is
    // feasible.
    let mut row_sign = vec![1.0; k];
    for i in 0..k {
        if target[i] < 0.0 {
            row_sign[i] = -1.0;
            target[i] = -target[i];
            for col in cols.iter_mut() {
                col[i] = -col[i];
            }
        }
    }

    // Column layout: 0..m real, m..m+k artificial (identity).
    let art_col = |i: usize, r: usize| if r == i { 1.0 } else { 0.0 };
    let col_entry = |j: usize, r: usize| -> f64 {
        if j < m {
            cols[j][r]
        } else {
            art_col(j - m, r)
        }
    };

    let mut basis: Vec<usize> = (m..m + k).collect();
    let mut pivots = 0usize;

    // Column-major basis matrix: entry (row r, position c) at c*k + r.
    let basis_colmajor = |basis: &[usize]| -> Vec<f64> {
        let mut b = vec![0.0; k * k];
        for (c, &j) in basis.iter().enumerate() {
            for r in 0..k {
                b[c * k + r] = col_entry(j, r);
            }
        }
        b
    };
    // Column-major transpose: entry (r, c) of B^T at c*k + r is B[c][r].
    let basis_t_colmajor = |basis: &[usize]| -> Vec<f64> {
        let mut b = vec![0.0; k * k];
        for c in 0..k {
            for (r, &j) in basis.iter().enumerate() {
                b[c * k + r] = col_entry(j, c);
            }
        }
        b
    };

    let run_phase = |basis: &mut Vec<usize>,
                         pivots: &mut usize,
                         phase_cost: &dyn Fn(usize) -> f64,
                         allow_artificial: bool|
     -> Result<(), LpError> {
        loop {
            if *pivots > MAX_PIVOTS {
                return Err(LpError::PivotLimit(MAX_PIVOTS));
            }
            // Basis matrix and current basic point.
            let bmat = basis_colmajor(basis);
            let xb = solve_dense(k, &bmat, &target).ok_or(LpError::Singular)?;
            // Simplex multipliers: solve B^T lambda = cost_B.
            let bt = basis_t_colmajor(basis);
            let cost_b: Vec<f64> = basis.iter().map(|&j| phase_cost(j)).collect();
            let lambda = solve_dense(k, &bt, &cost_b).ok_or(LpError::Singular)?;

            // Bland entering rule: smallest eligible column index.
            let n_cols = if allow_artificial { m + k } else { m };
            let mut entering = None;
            for j in 0..n_cols {
                if basis.contains(&j) {
                    continue;
                }
                let mut red = phase_cost(j);
                for r in 0..k {
                    red -= lambda[r] * col_entry(j, r);
                }
                if red < -EPS_COST {
                    entering = Some(j);
                    break;
                }
            }
            let Some(e) = entering else { return Ok(()) };

            // Direction through the basis.
            let me: Vec<f64> = (0..k).map(|r| col_entry(e, r)).collect();
            let u = solve_dense(k, &bmat, &me).ok_or(LpError::Singular)?;

            // Bland leaving rule: minimum ratio, ties by smallest basic
            // variable index.
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..k {
                if u[i] > EPS_PIVOT {
                    let ratio = xb[i] / u[i];
                    match leave {
                        None => leave = Some((i, ratio)),
                        Some((li, lr)) => {
                            if ratio < lr - 1e-12
                                || (ratio < lr + 1e-12 && basis[i] < basis[li])
                            {
                                leave = Some((i, ratio));
                            }
                        }
                    }
                }
            }
            let Some((li, _)) = leave else {
                return Err(LpError::Unbounded);
            };
            basis[li] = e;
            *pivots += 1;
        }
    };

    // Phase 1: drive artificials to zero.
    let phase1 = |j: usize| if j >= m { 1.0 } else { 0.0 };
    run_phase(&mut basis, &mut pivots, &phase1, true)?;
    {
        let bmat = basis_colmajor(&basis);
        let xb = solve_dense(k, &bmat, &target).ok_or(LpError::Singular)?;
        let infeas: f64 = basis
            .iter()
            .zip(&xb)
            .filter(|(&j, _)| j >= m)
            .map(|(_, &v)| v)
            .sum();
        if infeas > 1e-8 {
            // Dual infeasible: the primal objective is not bounded below.
            return Err(LpError::Unbounded);
        }
    }
    // Swap any zero-level artificial out of the basis.
    for i in 0..k {
        if basis[i] < m {
            continue;
        }
        let bmat = basis_colmajor(&basis);
        let mut swapped = false;
        for j in 0..m {
            if basis.contains(&j) {
                continue;
            }
            let mj: Vec<f64> = (0..k).map(|r| col_entry(j, r)).collect();
            if let Some(u) = solve_dense(k, &bmat, &mj) {
                if u[i].abs() > 1e-7 {
                    basis[i] = j;
                    swapped = true;
                    break;
                }
            }
        }
        if !swapped {
            return Err(LpError::Singular);
        }
    }

    // Phase 2: the dual objective (artificials barred from entering).
    // The dual minimizes b . w, which equals minus the primal optimum; the
    // dual unbounded case means the primal is infeasible.
    let phase2 = |j: usize| if j < m { duals_obj[j] } else { 0.0 };
    match run_phase(&mut basis, &mut pivots, &phase2, false) {
        Ok(()) => {}
        Err(LpError::Unbounded) => return Err(LpError::Infeasible),
        Err(e) => return Err(e),
    }

    // The basis names k tight primal rows; recover x from them.
    let mut tight_rows: Vec<usize> = basis.clone();
    tight_rows.sort_unstable();
    let mut eqs = vec![0.0; k * k];
    for (r, &row_idx) in tight_rows.iter().enumerate() {
        for cc in 0..k {
            eqs[r * k + cc] = rows[row_idx].coeffs[cc];
        }
    }
    let rhs: Vec<f64> = tight_rows.iter().map(|&i| rows[i].rhs).collect();
    let x = solve_dense_rowmajor(k, &eqs, &rhs).ok_or(LpError::Singular)?;

    let objective: f64 = c.iter().zip(&x).map(|(a, b)| a * b).sum();
    Ok(LpSolution {
        x,
        objective,
        tight_rows,
        pivots,
    })
}

/// Solves `A x = b` where `A` is given column-major (`a[c*n + r]`).
fn solve_dense(n: usize, a_colmajor: &[f64], b: &[f64]) -> Option<Vec<f64>> {
    let mut m = vec![0.0; n * n];
    for r in 0..n {
        for c in 0..n {
            m[r * n + c] = a_colmajor[c * n + r];
        }
    }
    solve_dense_rowmajor(n, &m, b)
}

/// Gaussian elimination with partial pivoting, `A` row-major.
pub fn solve_dense_rowmajor(n: usize, a: &[f64], b: &[f64]) -> Option<Vec<f64>> {
    let mut m = a.to_vec();
    let mut rhs = b.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if m[perm[r] * n + col].abs() > m[perm[piv] * n + col].abs() {
                piv = r;
            }
        }
        perm.swap(col, piv);
        let diag = m[perm[col] * n + col];
        if diag.abs() < 1e-14 {
            return None;
        }
        for r in col + 1..n {
            let f = m[perm[r] * n + col] / diag;
            if f != 0.0 {
                for cc in col..n {
                    m[perm[r] * n + cc] -= f * m[perm[col] * n + cc];
                }
                rhs[perm[r]] -= f * rhs[perm[col]];
            }
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut v = rhs[perm[col]];
        for cc in col + 1..n {
            v -= m[perm[col] * n + cc] * x[cc];
        }
        x[col] = v / m[perm[col] * n + col];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(coeffs: &[f64], rhs: f64) -> LpRow {
        LpRow {
            coeffs: coeffs.to_vec(),
            rhs,
        }
    }

    #[test]
    fn chebyshev_center_of_unit_square() {
        // max r st. +-x + r <= 1, +-y + r <= 1  -> center (0,0), r = 1.
        let rows = vec![
            row(&[1.0, 0.0, 1.0], 1.0),
            row(&[-1.0, 0.0, 1.0], 1.0),
            row(&[0.0, 1.0, 1.0], 1.0),
            row(&[0.0, -1.0, 1.0], 1.0),
        ];
        let sol = solve_lp(&[0.0, 0.0, -1.0], &rows).unwrap();
        assert!(sol.x[0].abs() < 1e-9);
        assert!(sol.x[1].abs() < 1e-9);
        assert!((sol.x[2] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_detected() {
        let rows = vec![row(&[1.0], 0.0), row(&[-1.0], -1.0)]; // x <= 0, x >= 1
        assert!(matches!(solve_lp(&[1.0], &rows), Err(LpError::Infeasible)));
    }

    #[test]
    fn unbounded_detected() {
        // min -x with only a lower bound on x.
        let rows = vec![row(&[-1.0], 1.0)];
        assert!(matches!(solve_lp(&[-1.0], &rows), Err(LpError::Unbounded)));
    }

    #[test]
    fn solves_shifted_box() {
        // min x + y over box [1,2] x [3,4].
        let rows = vec![
            row(&[1.0, 0.0], 2.0),
            row(&[-1.0, 0.0], -1.0),
            row(&[0.0, 1.0], 4.0),
            row(&[0.0, -1.0], -3.0),
        ];
        let sol = solve_lp(&[1.0, 1.0], &rows).unwrap();
        assert!((sol.x[0] - 1.0).abs() < 1e-9);
        assert!((sol.x[1] - 3.0).abs() < 1e-9);
        assert!((sol.objective - 4.0).abs() < 1e-9);
        assert_eq!(sol.tight_rows.len(), 2);
    }
}
