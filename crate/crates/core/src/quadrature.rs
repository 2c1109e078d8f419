//! Gauss–Legendre rules and an adaptive panel integrator for radial
//! integrals ∫₀^∞ f(r) dr with exponentially decaying integrands.

use crate::error::{Error, Result};

/// Gauss–Legendre rule on [−1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds an `order`-point rule; nodes are refined by Newton iteration on
    /// the three-term Legendre recurrence.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "Gauss-Legendre order must be positive");
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess for the i-th largest root.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// ∫ₐᵇ f(x) dx with this rule mapped onto [a, b].
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

/// Pₙ(x) and Pₙ'(x) by upward recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Legendre polynomial Pₗ(x).
pub fn legendre(l: usize, x: f64) -> f64 {
    if l == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=l {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    p1
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub cutoff: f64,
}

/// Composite Gauss–Legendre integration over [0, R_cut].
///
/// Base panels sit on geometric breakpoints {0, r₀, r₀q, r₀q², …, R_cut}.
/// Each panel is bisected until a low-order and a high-order rule agree.
/// R_cut is the first probe radius beyond which |f| stays below
/// `cutoff_ratio` times its sampled peak.
#[derive(Debug, Clone)]
pub struct RadialQuadrature {
    first_break: f64,
    growth: f64,
    rel_tol: f64,
    cutoff_ratio: f64,
    max_depth: u32,
    max_radius: f64,
    low: GaussLegendre,
    high: GaussLegendre,
}

impl Default for RadialQuadrature {
    fn default() -> Self {
        Self {
            first_break: 2f64.powi(-6),
            growth: 2.0,
            rel_tol: 1e-10,
            cutoff_ratio: 1e-18,
            max_depth: 40,
            max_radius: 4096.0,
            low: GaussLegendre::new(12),
            high: GaussLegendre::new(20),
        }
    }
}

impl RadialQuadrature {
    /// Same scheme with every other base breakpoint removed (ratio q²).
    pub fn coarse(&self) -> Self {
        Self {
            growth: self.growth * self.growth,
            ..self.clone()
        }
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    fn cutoff_radius<F: Fn(f64) -> f64>(&self, f: &F) -> Result<Option<f64>> {
        let step = 2f64.powf(0.25);
        let mut probes = Vec::new();
        let mut r = self.first_break;
        while r <= self.max_radius {
            probes.push((r, f(r).abs()));
            r *= step;
        }
        let peak = probes.iter().map(|p| p.1).fold(0.0, f64::max);
        if peak == 0.0 {
            return Ok(None);
        }
        if !peak.is_finite() {
            return Err(Error::InvalidInput("integrand is not finite".into()));
        }
        let threshold = self.cutoff_ratio * peak;
        let last = probes
            .iter()
            .rposition(|p| p.1 >= threshold)
            .expect("peak sample exceeds its own threshold");
        if last + 1 >= probes.len() {
            return Err(Error::NoDecay(self.max_radius));
        }
        Ok(Some(probes[last + 1].0))
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> Result<QuadratureResult> {
        let cutoff = match self.cutoff_radius(&f)? {
            Some(c) => c,
            None => {
                return Ok(QuadratureResult {
                    value: 0.0,
                    error_estimate: 0.0,
                    evaluations: 0,
                    cutoff: 0.0,
                })
            }
        };

        let mut breaks = vec![0.0];
        let mut r = self.first_break;
        while r < cutoff {
            breaks.push(r);
            r *= self.growth;
        }
        breaks.push(cutoff);

        let scale: f64 = breaks
            .windows(2)
            .map(|w| self.high.integrate(|x| f(x).abs(), w[0], w[1]))
            .sum();
        let tol_abs = self.rel_tol * scale;
        let local_tol = 0.05 * tol_abs;

        let mut acc = Accumulator::default();
        acc.evaluations += self.high.order() * (breaks.len() - 1);
        for w in breaks.windows(2) {
            self.adapt(&f, w[0], w[1], local_tol, 0, &mut acc);
        }
        if acc.error > tol_abs.max(f64::MIN_POSITIVE) && acc.error > 1e-15 * scale {
            return Err(Error::QuadratureNoConvergence {
                error: acc.error,
                tolerance: tol_abs,
            });
        }
        Ok(QuadratureResult {
            value: acc.value,
            error_estimate: acc.error,
            evaluations: acc.evaluations,
            cutoff,
        })
    }

    fn adapt<F: Fn(f64) -> f64>(
        &self,
        f: &F,
        a: f64,
        b: f64,
        tol: f64,
        depth: u32,
        acc: &mut Accumulator,
    ) {
        let hi = self.high.integrate(f, a, b);
        let lo = self.low.integrate(f, a, b);
        acc.evaluations += self.high.order() + self.low.order();
        let err = (hi - lo).abs();
        if err <= tol || depth >= self.max_depth {
            acc.value += hi;
            acc.error += err;
            return;
        }
        let mid = 0.5 * (a + b);
        self.adapt(f, a, mid, tol, depth + 1, acc);
        self.adapt(f, mid, b, tol, depth + 1, acc);
    }
}

#[derive(Default)]
struct Accumulator {
    value: f64,
    error: f64,
    evaluations: usize,
}
