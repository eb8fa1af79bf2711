//! Quadrature rules on the reference triangle `{(0,0),(1,0),(0,1)}` and on
//! the reference interval `[-1,1]`.

use crate::error::{Error, Result};

/// Largest tabulated/constructible exactness degree for triangle rules.
pub const MAX_DEGREE: usize = 20;

/// A positive-weight rule on the reference triangle. Weights sum to 1/2.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub points: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
    pub exactness_degree: usize,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// exact for polynomials of degree `2n - 1`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess, then Newton on P_n.
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
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

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

/// Legendre polynomial `P_m(s)` on `[-1, 1]`.
pub fn legendre(m: usize, s: f64) -> f64 {
    match m {
        0 => 1.0,
        1 => s,
        _ => {
            let mut p0 = 1.0;
            let mut p1 = s;
            for k in 2..=m {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * s * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            p1
        }
    }
}

/// A rule exact for all bivariate polynomials of total degree `<= degree`
/// on the reference triangle.
///
/// Degree 1 is the one-point barycenter rule. Higher degrees collapse a
/// Gauss-Legendre product rule on the unit square through the Duffy map
/// `x = s (1 - t), y = t`; the map Jacobian `(1 - t)` is folded into the
/// weights, so all weights stay positive.
pub fn triangle_quadrature(degree: usize) -> Result<QuadratureRule> {
    if degree < 1 || degree > MAX_DEGREE {
        return Err(Error::Capability(format!(
            "triangle quadrature degree {degree} outside supported range 1..={MAX_DEGREE}"
        )));
    }
    if degree == 1 {
        return Ok(QuadratureRule {
            points: vec![[1.0 / 3.0, 1.0 / 3.0]],
            weights: vec![0.5],
            exactness_degree: 1,
        });
    }
    let m = (degree + 2).div_ceil(2); // product rule exact to 2m - 2
    let (gn, gw) = gauss_legendre(m);
    let map01 = |z: f64| 0.5 * (z + 1.0);
    let mut points = Vec::with_capacity(m * m);
    let mut weights = Vec::with_capacity(m * m);
    for (si, swi) in gn.iter().zip(&gw) {
        for (ti, twi) in gn.iter().zip(&gw) {
            let s = map01(*si);
            let t = map01(*ti);
            points.push([s * (1.0 - t), t]);
            // 1/4 from rescaling both intervals to [0,1], (1-t) from the map.
            weights.push(0.25 * swi * twi * (1.0 - t));
        }
    }
    Ok(QuadratureRule {
        points,
        weights,
        exactness_degree: 2 * m - 2,
    })
}
