//! Quasi-Newton local minimization: BFGS with a strong-Wolfe line search.
//!
//! Unconstrained sequential quadratic descent in the style of SLSQP's
//! smooth-problem path.  The variational angles live on a periodic
//! landscape, so no box constraints are imposed; bounds only shape the
//! random starts chosen by the caller.

/// Termination tolerances and budget.
#[derive(Debug, Clone, Copy)]
pub struct MinimizeOptions {
    /// Stop when the Euclidean gradient norm falls below this.
    pub gradient_tolerance: f64,
    /// Stop when the accepted step falls below this.
    pub step_tolerance: f64,
    /// Outer iteration budget.
    pub max_iterations: usize,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        Self {
            gradient_tolerance: 1e-8,
            step_tolerance: 1e-10,
            max_iterations: 200,
        }
    }
}

/// Outcome of a local minimization.
#[derive(Debug, Clone)]
pub struct MinimizeOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    /// True when a tolerance criterion stopped the run (rather than the
    /// iteration budget or a stalled line search).
    pub converged: bool,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Strong-Wolfe line search (c1 = 1e-4, c2 = 0.9) along direction `p`.
///
/// Returns (step, value, gradient) at the accepted point, or None when no
/// acceptable step exists within the trial budget.
#[allow(clippy::too_many_arguments)]
fn wolfe_search<F, G>(
    f: &F,
    grad: &G,
    x: &[f64],
    p: &[f64],
    f0: f64,
    d0: f64,
) -> Option<(f64, f64, Vec<f64>)>
where
    F: Fn(&[f64]) -> f64,
    G: Fn(&[f64]) -> Vec<f64>,
{
    const C1: f64 = 1e-4;
    const C2: f64 = 0.9;
    let at = |alpha: f64| -> Vec<f64> {
        x.iter().zip(p).map(|(xi, pi)| xi + alpha * pi).collect()
    };
    let eval = |alpha: f64| -> (f64, Vec<f64>, f64) {
        let xa = at(alpha);
        let fa = f(&xa);
        let ga = grad(&xa);
        let da = dot(&ga, p);
        (fa, ga, da)
    };

    let zoom = |mut lo: f64, mut f_lo: f64, mut hi: f64| -> Option<(f64, f64, Vec<f64>)> {
        for _ in 0..30 {
            let alpha = 0.5 * (lo + hi);
            let (fa, ga, da) = eval(alpha);
            if fa > f0 + C1 * alpha * d0 || fa >= f_lo {
                hi = alpha;
            } else {
                if da.abs() <= -C2 * d0 {
                    return Some((alpha, fa, ga));
                }
                if da * (hi - lo) >= 0.0 {
                    hi = lo;
                }
                lo = alpha;
                f_lo = fa;
            }
            if (hi - lo).abs() < 1e-16 {
                break;
            }
        }
        // fall back to the low end if it at least decreases
        let (fa, ga, _) = eval(lo);
        (fa < f0).then_some((lo, fa, ga))
    };

    let mut alpha_prev = 0.0;
    let mut f_prev = f0;
    let mut alpha = 1.0;
    for i in 0..12 {
        let (fa, ga, da) = eval(alpha);
        if fa > f0 + C1 * alpha * d0 || (i > 0 && fa >= f_prev) {
            return zoom(alpha_prev, f_prev, alpha);
        }
        if da.abs() <= -C2 * d0 {
            return Some((alpha, fa, ga));
        }
        if da >= 0.0 {
            return zoom(alpha, fa, alpha_prev);
        }
        alpha_prev = alpha;
        f_prev = fa;
        alpha *= 2.0;
    }
    None
}

/// BFGS minimization from `x0`.
pub fn bfgs<F, G>(f: F, grad: G, x0: &[f64], options: &MinimizeOptions) -> MinimizeOutcome
where
    F: Fn(&[f64]) -> f64,
    G: Fn(&[f64]) -> Vec<f64>,
{
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut fx = f(&x);
    if n == 0 {
        return MinimizeOutcome {
            x,
            value: fx,
            iterations: 0,
            converged: true,
        };
    }
    let mut g = grad(&x);
    // inverse Hessian approximation, row-major
    let mut h_inv = vec![0.0f64; n * n];
    let reset = |h: &mut [f64]| {
        h.fill(0.0);
        for i in 0..n {
            h[i * n + i] = 1.0;
        }
    };
    reset(&mut h_inv);

    let mut iterations = 0;
    let mut converged = false;
    while iterations < options.max_iterations {
        if norm(&g) <= options.gradient_tolerance {
            converged = true;
            break;
        }
        iterations += 1;
        // p = -H g
        let mut p: Vec<f64> = (0..n)
            .map(|i| -(0..n).map(|j| h_inv[i * n + j] * g[j]).sum::<f64>())
            .collect();
        let mut d0 = dot(&p, &g);
        if d0 >= 0.0 {
            // not a descent direction; restart from steepest descent
            reset(&mut h_inv);
            p = g.iter().map(|v| -v).collect();
            d0 = dot(&p, &g);
        }
        let Some((alpha, f_new, g_new)) = wolfe_search(&f, &grad, &x, &p, fx, d0) else {
            // stalled: one steepest-descent attempt
            reset(&mut h_inv);
            let p_sd: Vec<f64> = g.iter().map(|v| -v).collect();
            let d_sd = dot(&p_sd, &g);
            match wolfe_search(&f, &grad, &x, &p_sd, fx, d_sd) {
                Some((alpha, f_new, g_new)) => {
                    let s: Vec<f64> = p_sd.iter().map(|pi| alpha * pi).collect();
                    let step_len = norm(&s);
                    update_state(&mut x, &mut fx, &mut g, &mut h_inv, s, f_new, g_new, n);
                    if step_len <= options.step_tolerance {
                        converged = true;
                        break;
                    }
                    continue;
                }
                None => {
                    // no direction admits any decreasing step: the
                    // achievable step is below the step tolerance
                    converged = true;
                    break;
                }
            }
        };
        let s: Vec<f64> = p.iter().map(|pi| alpha * pi).collect();
        let step_len = norm(&s);
        update_state(&mut x, &mut fx, &mut g, &mut h_inv, s, f_new, g_new, n);
        if step_len <= options.step_tolerance {
            converged = true;
            break;
        }
    }
    if !converged && norm(&g) <= options.gradient_tolerance {
        converged = true;
    }
    MinimizeOutcome {
        x,
        value: fx,
        iterations,
        converged,
    }
}

/// Apply the accepted step and the BFGS inverse-Hessian update.
#[allow(clippy::too_many_arguments)]
fn update_state(
    x: &mut Vec<f64>,
    fx: &mut f64,
    g: &mut Vec<f64>,
    h_inv: &mut [f64],
    s: Vec<f64>,
    f_new: f64,
    g_new: Vec<f64>,
    n: usize,
) {
    let y: Vec<f64> = g_new.iter().zip(g.iter()).map(|(a, b)| a - b).collect();
    let sy = dot(&s, &y);
    if sy > 1e-12 * norm(&s) * norm(&y) {
        // H ← (I − ρ s yᵀ) H (I − ρ y sᵀ) + ρ s sᵀ
        let rho = 1.0 / sy;
        let hy: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|j| h_inv[i * n + j] * y[j]).sum::<f64>())
            .collect();
        let yhy = dot(&y, &hy);
        for i in 0..n {
            for j in 0..n {
                h_inv[i * n + j] += -(s[i] * hy[j] + hy[i] * s[j]) * rho
                    + (1.0 + yhy * rho) * rho * s[i] * s[j];
            }
        }
    }
    for (xi, si) in x.iter_mut().zip(&s) {
        *xi += si;
    }
    *fx = f_new;
    *g = g_new;
}
