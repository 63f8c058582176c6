//! Spectral radius computation and the `B = f(A)` column-sum criterion.
//!
//! `f(x) = x^2 - a x - b`; for the extremal graph `S(n,k)` the relevant
//! parameters are `a = k - 1`, `b = k(n - k)` and the spectral radius of
//! `S(n,k)` is the largest root of `f`.

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Default relative tolerance for power iteration.
pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1_000_000;
/// Absolute tolerance for μ-comparisons in verdicts.
pub const EQUALITY_TOL: f64 = 1e-9;

/// Coefficients of `f(x) = x^2 - a x - b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharPolyParams {
    pub a: u64,
    pub b: u64,
}

impl CharPolyParams {
    /// `a = k - 1`, `b = k(n - k)`.
    pub fn for_snk(n: usize, k: usize) -> Result<CharPolyParams> {
        if k == 0 || k >= n {
            return Err(invalid(format!("need 1 <= k < n, got n={n}, k={k}")));
        }
        Ok(CharPolyParams {
            a: (k - 1) as u64,
            b: (k * (n - k)) as u64,
        })
    }

    pub fn largest_root(&self) -> f64 {
        let a = self.a as f64;
        let b = self.b as f64;
        (a + (a * a + 4.0 * b).sqrt()) / 2.0
    }

    pub fn eval(&self, x: f64) -> f64 {
        x * x - self.a as f64 * x - self.b as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralResult {
    pub radius: f64,
    pub iterations: usize,
    /// `‖Ax - μx‖∞` with `‖x‖∞ = 1` at termination.
    pub residual: f64,
}

/// μ(S(n,k)) in closed form.
pub fn exact_radius_snk(n: usize, k: usize) -> Result<f64> {
    Ok(CharPolyParams::for_snk(n, k)?.largest_root())
}

/// μ(S+(n,k)) from the 3x3 equitable quotient over the parts
/// {clique, added-edge pair, rest}.
pub fn exact_radius_snk_plus(n: usize, k: usize) -> Result<f64> {
    if k == 0 || n < k + 2 {
        return Err(invalid(format!(
            "S+(n,k) needs k >= 1 and n >= k+2, got n={n}, k={k}"
        )));
    }
    let (n, k) = (n as f64, k as f64);
    let q = [[k - 1.0, 2.0, n - k - 2.0], [k, 1.0, 0.0], [k, 0.0, 0.0]];
    Ok(largest_root_quotient(&q))
}

/// Largest real root of `det(xI - Q)` for a nonnegative 3x3 matrix `Q`
/// whose eigenvalues are real. Newton descends from the maximum row sum;
/// an overshoot falls back to bisection on the last bracket.
fn largest_root_quotient(q: &[[f64; 3]; 3]) -> f64 {
    let trace = q[0][0] + q[1][1] + q[2][2];
    let minors = (q[0][0] * q[1][1] - q[0][1] * q[1][0])
        + (q[0][0] * q[2][2] - q[0][2] * q[2][0])
        + (q[1][1] * q[2][2] - q[1][2] * q[2][1]);
    let det = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1])
        - q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0])
        + q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
    let p = |x: f64| ((x - trace) * x + minors) * x - det;
    let dp = |x: f64| (3.0 * x - 2.0 * trace) * x + minors;

    let mut hi = q
        .iter()
        .map(|r| r.iter().sum::<f64>())
        .fold(0.0f64, f64::max);
    for _ in 0..200 {
        let slope = dp(hi);
        if slope <= 0.0 {
            break;
        }
        let next = hi - p(hi) / slope;
        if next.is_nan() || next >= hi {
            break;
        }
        if p(next) < 0.0 {
            let mut lo = next;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if p(mid) < 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return hi;
        }
        if hi - next <= f64::EPSILON * hi {
            return next;
        }
        hi = next;
    }
    hi
}

/// Power iteration on `A + I` from the all-ones vector.
///
/// The shift makes the dominant eigenvalue unique in modulus, so bipartite
/// graphs converge; the all-ones start overlaps the Perron vector of every
/// component, so disconnected graphs converge to the largest component
/// radius.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with_cap(g, tol, MAX_ITERATIONS)
}

pub fn spectral_radius_with_cap(
    g: &Graph,
    tol: f64,
    max_iterations: usize,
) -> Result<SpectralResult> {
    let n = g.order();
    if n == 0 {
        return Err(invalid("spectral radius of a graph with no vertices"));
    }
    let adj = g.adjacency_lists();
    let mut x = vec![1.0f64; n];
    let mut ax = vec![0.0f64; n];
    let mut prev = f64::NAN;
    let mut best = SpectralResult {
        radius: 0.0,
        iterations: 0,
        residual: f64::INFINITY,
    };
    for it in 1..=max_iterations {
        for (v, nb) in adj.iter().enumerate() {
            ax[v] = nb.iter().map(|&w| x[w]).sum();
        }
        let xx: f64 = x.iter().map(|t| t * t).sum();
        let xax: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let rq = xax / xx;
        let scale = x.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        let residual = x
            .iter()
            .zip(&ax)
            .fold(0.0f64, |m, (xi, axi)| m.max((axi - rq * xi).abs()))
            / scale;
        best = SpectralResult {
            radius: rq,
            iterations: it,
            residual,
        };
        let bound = tol * rq.abs().max(1.0);
        if residual <= bound && (residual == 0.0 || (rq - prev).abs() <= bound) {
            return Ok(best);
        }
        prev = rq;
        let mut norm = 0.0f64;
        for (xi, axi) in x.iter_mut().zip(&ax) {
            *xi += axi;
            norm = norm.max(xi.abs());
        }
        for xi in &mut x {
            *xi /= norm;
        }
    }
    Err(Error::ConvergenceFailure {
        best: best.radius,
        iterations: best.iterations,
        residual: best.residual,
    })
}

/// Column sums `B_u` of `B = A^2 - aA - bI`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BColumnSums {
    pub a: i64,
    pub b: i64,
    pub sums: Vec<i64>,
}

impl BColumnSums {
    pub fn all_nonpositive(&self) -> bool {
        self.sums.iter().all(|&s| s <= 0)
    }

    pub fn all_zero(&self) -> bool {
        self.sums.iter().all(|&s| s == 0)
    }
}

/// `B_u = Σ_{x ∈ N(u)} d(x) - a·d(u) - b`, the column sum of `A^2` being
/// the neighbor-degree sum.
pub fn b_column_sums(g: &Graph, a: i64, b: i64) -> BColumnSums {
    let deg: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
    let sums = (0..g.order())
        .map(|u| g.neighbors(u).map(|x| deg[x]).sum::<i64>() - a * deg[u] - b)
        .collect();
    BColumnSums { a, b, sums }
}

/// Per-vertex right-hand side `Σ_{x∈N¹(v)} d_L(x) - (k-2)d(v) - k(n-k)`
/// evaluated on the link graph `L_v`.
pub fn link_column_sum(g: &Graph, v: usize, k: i64) -> i64 {
    let n = g.order() as i64;
    let link = g.link_graph(v);
    let dl: i64 = link.n1.iter().map(|&x| link.degree(x) as i64).sum();
    dl - (k - 2) * g.degree(v) as i64 - k * (n - k)
}

/// Checks, at every vertex, that the column sum with `(a,b) = (k-1, k(n-k))`
/// equals the link-graph expression. Exact integer comparison.
pub fn eq1_identity_check(g: &Graph, k: usize) -> bool {
    let n = g.order() as i64;
    let k = k as i64;
    let cols = b_column_sums(g, k - 1, k * (n - k));
    (0..g.order()).all(|v| cols.sums[v] == link_column_sum(g, v, k))
}

/// `B_v <= (d(v) - k)(n - k)` at every vertex, with `(a,b) = (k-1, k(n-k))`.
pub fn eq2_bound_check(g: &Graph, k: usize) -> bool {
    let n = g.order() as i64;
    let k = k as i64;
    let cols = b_column_sums(g, k - 1, k * (n - k));
    (0..g.order()).all(|v| cols.sums[v] <= (g.degree(v) as i64 - k) * (n - k))
}

#[derive(Debug, Clone, PartialEq)]
pub enum HypothesisFailure {
    Disconnected,
    PositiveColumnSum { vertex: usize, value: i64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Lemma21Verdict {
    HypothesisNotMet(HypothesisFailure),
    BoundHolds {
        mu: f64,
        mu_prime: f64,
    },
    EqualityCase {
        mu: f64,
        mu_prime: f64,
    },
    Violation {
        mu: f64,
        mu_prime: f64,
        witness: Option<usize>,
        detail: String,
    },
}

impl Lemma21Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Lemma21Verdict::Violation { .. })
    }

    /// `μ - μ'` when the criterion applied.
    pub fn margin(&self) -> Option<f64> {
        match self {
            Lemma21Verdict::HypothesisNotMet(_) => None,
            Lemma21Verdict::BoundHolds { mu, mu_prime }
            | Lemma21Verdict::EqualityCase { mu, mu_prime }
            | Lemma21Verdict::Violation { mu, mu_prime, .. } => Some(mu - mu_prime),
        }
    }
}

/// Evaluates the column-sum criterion on a connected graph: nonpositive
/// column sums must force `μ <= μ'`, with equality exactly when every
/// column sum vanishes.
pub fn lemma21_check(g: &Graph, a: u64, b: u64, tol: f64) -> Result<Lemma21Verdict> {
    if b == 0 {
        return Err(invalid("criterion needs b >= 1"));
    }
    if !g.is_connected() {
        return Ok(Lemma21Verdict::HypothesisNotMet(
            HypothesisFailure::Disconnected,
        ));
    }
    let cols = b_column_sums(g, a as i64, b as i64);
    if let Some((vertex, &value)) = cols.sums.iter().enumerate().find(|(_, &s)| s > 0) {
        return Ok(Lemma21Verdict::HypothesisNotMet(
            HypothesisFailure::PositiveColumnSum { vertex, value },
        ));
    }
    let mu_prime = CharPolyParams { a, b }.largest_root();
    let mu = spectral_radius(g, DEFAULT_TOL)?.radius;
    let nonzero = cols.sums.iter().position(|&s| s != 0);
    if mu > mu_prime + tol {
        return Ok(Lemma21Verdict::Violation {
            mu,
            mu_prime,
            witness: None,
            detail: "all column sums nonpositive but μ exceeds μ'".into(),
        });
    }
    if mu >= mu_prime - tol {
        if let Some(v) = nonzero {
            return Ok(Lemma21Verdict::Violation {
                mu,
                mu_prime,
                witness: Some(v),
                detail: format!("μ = μ' but B_{v} = {} is nonzero", cols.sums[v]),
            });
        }
        return Ok(Lemma21Verdict::EqualityCase { mu, mu_prime });
    }
    if nonzero.is_none() {
        return Ok(Lemma21Verdict::Violation {
            mu,
            mu_prime,
            witness: None,
            detail: "all column sums vanish but μ < μ'".into(),
        });
    }
    Ok(Lemma21Verdict::BoundHolds { mu, mu_prime })
}
