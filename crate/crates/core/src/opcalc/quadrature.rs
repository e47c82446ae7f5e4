//! Gauss–Hermite and composite Gauss–Legendre rules.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exec::{self, Execution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadratureFamily {
    /// `∫ e^{-u²} h(u) du` over the real line.
    GaussHermite,
    /// `∫_a^b h(u) du` split into equal panels.
    GaussLegendreComposite,
}

/// Nodes and positive weights of a quadrature rule. Immutable once built.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    /// `ln w_i`, kept because large-node weights underflow.
    log_weights: Vec<f64>,
    family: QuadratureFamily,
}

/// Relative tolerance of the construction-time moment check.
pub const MOMENT_TOLERANCE: f64 = 1e-13;

/// [`MOMENT_TOLERANCE`] widened by the rounding floor of comparing in log
/// form: high moments (up to `e^{2700}` for 1024 nodes) and the matching
/// weights only exist as logarithms, whose last bit is worth
/// `ε·|ln moment|` in relative terms.
pub fn moment_tolerance(ln_moment: f64) -> f64 {
    MOMENT_TOLERANCE + 16.0 * f64::EPSILON * ln_moment.abs()
}

/// Number of eigenvalues below `x` of the `n×n` Hermite Jacobi matrix
/// (zero diagonal, off-diagonal `√(j/2)`), by the Sturm sequence.
fn sturm_count(n: usize, x: f64) -> usize {
    let mut count = 0;
    let mut d = -x;
    if d < 0.0 {
        count += 1;
    }
    for j in 1..n {
        let b2 = j as f64 / 2.0;
        let prev = if d == 0.0 { f64::EPSILON } else { d };
        d = -x - b2 / prev;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Eigenvalue `j` (ascending) of the Hermite Jacobi matrix.
fn jacobi_eigenvalue(n: usize, j: usize) -> f64 {
    let bound = (2.0 * n as f64 + 1.0).sqrt() + 1.0;
    let (mut lo, mut hi) = (-bound, bound);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(n, mid) > j {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

impl QuadratureRule {
    /// `n`-point Gauss–Hermite rule for the weight `e^{-u²}`.
    ///
    /// Nodes are bracketed by Sturm bisection on the Jacobi matrix and
    /// polished by Newton iteration on the orthonormal Hermite recurrence,
    /// renormalized on the fly so `n` in the thousands does not overflow.
    /// The rule is checked against `∫ e^{-u²} u^{2m} du = Γ(m+½)` for every
    /// `m ≤ n/2 − 1` before it is returned.
    pub fn gauss_hermite(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("a quadrature rule needs at least one node".into()));
        }
        let rule = Self::gauss_hermite_unchecked(n);
        rule.check_hermite_moments()?;
        Ok(rule)
    }

    fn gauss_hermite_unchecked(n: usize) -> Self {
        const RESCALE: f64 = 1e150;
        let ln_rescale = RESCALE.ln();
        let pim4 = std::f64::consts::PI.powf(-0.25);
        let half = n.div_ceil(2);
        let mut pos = vec![0.0f64; half];
        let mut logw = vec![0.0f64; half];
        let nf = n as f64;
        for i in 0..half {
            // i-th largest eigenvalue of the Jacobi matrix, refined by Newton below
            let mut z = jacobi_eigenvalue(n, n - 1 - i);
            let mut ln_pp = 0.0;
            let mut settled = false;
            for _ in 0..100 {
                let mut p1 = pim4;
                let mut p2 = 0.0f64;
                let mut scale = 0.0f64;
                for j in 1..=n {
                    let p3 = p2;
                    p2 = p1;
                    let jf = j as f64;
                    p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
                    if p1.abs() > RESCALE {
                        p1 /= RESCALE;
                        p2 /= RESCALE;
                        scale += ln_rescale;
                    }
                }
                let pp = (2.0 * nf).sqrt() * p2;
                ln_pp = pp.abs().ln() + scale;
                let step = p1 / pp;
                if settled {
                    break;
                }
                z -= step;
                // one more pass after the step is small refreshes ln_pp at the root
                settled = step.abs() <= 1e-14 * z.abs().max(1.0);
            }
            pos[i] = z;
            logw[i] = std::f64::consts::LN_2 - 2.0 * ln_pp;
        }
        // ascending order, mirrored
        let mut nodes = Vec::with_capacity(n);
        let mut log_weights = Vec::with_capacity(n);
        for i in 0..half {
            nodes.push(-pos[i]);
            log_weights.push(logw[i]);
        }
        let start = if n % 2 == 1 { half - 1 } else { half };
        for i in (0..start).rev() {
            nodes.push(pos[i]);
            log_weights.push(logw[i]);
        }
        if n % 2 == 1 {
            // the middle node is exactly zero
            nodes[half - 1] = 0.0;
        }
        let weights = log_weights.iter().map(|l| l.exp()).collect();
        QuadratureRule { nodes, weights, log_weights, family: QuadratureFamily::GaussHermite }
    }

    fn check_hermite_moments(&self) -> Result<()> {
        let n = self.len();
        let max_m = (n / 2).saturating_sub(1);
        let mut ln_gamma = 0.5 * std::f64::consts::PI.ln(); // ln Γ(1/2)
        for m in 0..=max_m {
            if m > 0 {
                ln_gamma += (m as f64 - 0.5).ln();
            }
            let ln_q = self.log_moment(2 * m);
            let rel = (ln_q - ln_gamma).exp_m1().abs();
            if rel > moment_tolerance(ln_gamma) {
                return Err(Error::Internal(format!(
                    "{n}-node Gauss-Hermite rule misses moment 2m = {} by {rel:e}",
                    2 * m
                )));
            }
        }
        Ok(())
    }

    /// `ln Σ w_i u_i^p` for even `p`, by log-sum-exp.
    pub fn log_moment(&self, p: usize) -> f64 {
        let terms: Vec<f64> = self
            .nodes
            .iter()
            .zip(&self.log_weights)
            .filter(|(u, _)| p == 0 || **u != 0.0)
            .map(|(u, lw)| lw + p as f64 * u.abs().ln())
            .collect();
        let top = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        top + terms.iter().map(|t| (t - top).exp()).sum::<f64>().ln()
    }

    /// `n`-point Gauss–Legendre rule on `[-1, 1]`.
    pub fn gauss_legendre(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("a quadrature rule needs at least one node".into()));
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut pp = 1.0;
            for _ in 0..100 {
                let mut p1 = 1.0;
                let mut p2 = 0.0;
                for j in 1..=n {
                    let p3 = p2;
                    p2 = p1;
                    let jf = j as f64;
                    p1 = ((2.0 * jf - 1.0) * z * p2 - (jf - 1.0) * p3) / jf;
                }
                pp = nf * (z * p1 - p2) / (z * z - 1.0);
                let step = p1 / pp;
                z -= step;
                if step.abs() <= 1e-16 {
                    break;
                }
            }
            nodes[i] = -z;
            nodes[n - 1 - i] = z;
            let w = 2.0 / ((1.0 - z * z) * pp * pp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        let log_weights = weights.iter().map(|w: &f64| w.ln()).collect();
        Ok(QuadratureRule { nodes, weights, log_weights, family: QuadratureFamily::GaussLegendreComposite })
    }

    /// Composite rule on `[a, b]`: `panels` copies of an `order`-point
    /// Gauss–Legendre rule.
    pub fn gauss_legendre_composite(a: f64, b: f64, panels: usize, order: usize) -> Result<Self> {
        if panels == 0 || b.partial_cmp(&a) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::InvalidParameter(format!("bad composite interval [{a}, {b}] x {panels}")));
        }
        let base = Self::gauss_legendre(order)?;
        let h = (b - a) / panels as f64;
        let mut nodes = Vec::with_capacity(panels * order);
        let mut weights = Vec::with_capacity(panels * order);
        for p in 0..panels {
            let mid = a + (p as f64 + 0.5) * h;
            for (u, w) in base.nodes.iter().zip(&base.weights) {
                nodes.push(mid + 0.5 * h * u);
                weights.push(0.5 * h * w);
            }
        }
        let log_weights = weights.iter().map(|w: &f64| w.ln()).collect();
        Ok(QuadratureRule { nodes, weights, log_weights, family: QuadratureFamily::GaussLegendreComposite })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn family(&self) -> QuadratureFamily {
        self.family
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_i h(u_i)`, with underflowed weights skipped so `h` is never
    /// evaluated where it cannot contribute.
    pub fn apply<F>(&self, exec: Execution, h: F) -> Complex64
    where
        F: Fn(f64) -> Complex64 + Sync + Send,
    {
        let live: Vec<usize> = (0..self.len()).filter(|&i| self.weights[i] > 0.0).collect();
        let values = exec::map(exec, &live, |&i| self.weights[i] * h(self.nodes[i]));
        values.into_iter().sum()
    }
}

/// Node counts tried by the adaptive Gauss–Hermite integrator.
pub const HERMITE_LADDER: [usize; 4] = [128, 256, 512, 1024];

/// Shared Gauss–Hermite rule with `n ∈ HERMITE_LADDER` nodes, built once.
pub fn hermite_rule(n: usize) -> &'static QuadratureRule {
    static RULES: [OnceLock<QuadratureRule>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let idx = HERMITE_LADDER
        .iter()
        .position(|&m| m == n)
        .unwrap_or_else(|| panic!("no cached Gauss-Hermite rule with {n} nodes"));
    RULES[idx].get_or_init(|| QuadratureRule::gauss_hermite(n).expect("cached Gauss-Hermite rule passes its moment check"))
}

/// Value of an adaptive integral plus the node count it settled on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightedIntegral {
    pub value: Complex64,
    pub nodes: usize,
    pub converged: bool,
}

/// Stopping rule for the adaptive doubling.
pub const ADAPTIVE_TOLERANCE: f64 = 1e-10;

/// `∫ e^{-k²/(4y)} h(k) dk` over the real line.
///
/// Substitutes `k = 2√y u` and applies Gauss–Hermite rules of 128, 256, ...
/// nodes until two successive values differ by less than `1e-10·max(1,|I|)`.
/// Reaching 1024 nodes without settling returns `converged = false`.
pub fn gauss_weighted_integral<F>(h: F, y: f64) -> Result<WeightedIntegral>
where
    F: Fn(f64) -> Complex64 + Sync + Send,
{
    gauss_weighted_integral_with(Execution::Sequential, h, y)
}

/// [`gauss_weighted_integral`] with the node evaluations scheduled by `exec`.
pub fn gauss_weighted_integral_with<F>(exec: Execution, h: F, y: f64) -> Result<WeightedIntegral>
where
    F: Fn(f64) -> Complex64 + Sync + Send,
{
    if y.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || !y.is_finite() {
        return Err(Error::InvalidParameter(format!("Gaussian variance parameter must be positive, got {y}")));
    }
    let s = 2.0 * y.sqrt();
    let eval = |n: usize| s * hermite_rule(n).apply(exec, |u| h(s * u));
    let mut prev = eval(HERMITE_LADDER[0]);
    for &n in &HERMITE_LADDER[1..] {
        let cur = eval(n);
        if (cur - prev).norm() < ADAPTIVE_TOLERANCE * cur.norm().max(1.0) {
            return Ok(WeightedIntegral { value: cur, nodes: n, converged: true });
        }
        prev = cur;
    }
    Ok(WeightedIntegral { value: prev, nodes: *HERMITE_LADDER.last().unwrap(), converged: false })
}
