//! Dense bivariate polynomials in the monomial basis.
//!
//! Coefficients are stored in graded lexicographic order: all monomials
//! `x^a y^b` of total degree `a + b = d` are grouped by `d` and ordered by
//! increasing `b`. Index of `x^a y^b` is `(a+b)(a+b+1)/2 + b`.

/// Number of bivariate monomials of total degree at most `deg`.
pub fn monomial_count(deg: usize) -> usize {
    (deg + 1) * (deg + 2) / 2
}

/// Flat index of the monomial `x^a y^b`.
pub fn monomial_index(a: usize, b: usize) -> usize {
    let d = a + b;
    d * (d + 1) / 2 + b
}

/// Exponent pairs `(a, b)` of all monomials up to total degree `deg`,
/// in storage order.
pub fn monomial_exponents(deg: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(monomial_count(deg));
    for d in 0..=deg {
        for b in 0..=d {
            out.push((d - b, b));
        }
    }
    out
}

/// A bivariate polynomial of bounded total degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly2 {
    degree: usize,
    coeffs: Vec<f64>,
}

impl Poly2 {
    pub fn zero(degree: usize) -> Self {
        Poly2 {
            degree,
            coeffs: vec![0.0; monomial_count(degree)],
        }
    }

    /// The monomial `x^a y^b` embedded at total degree `degree`.
    pub fn monomial(degree: usize, a: usize, b: usize) -> Self {
        assert!(a + b <= degree);
        let mut p = Poly2::zero(degree);
        p.coeffs[monomial_index(a, b)] = 1.0;
        p
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<f64>) -> Self {
        assert_eq!(coeffs.len(), monomial_count(degree));
        Poly2 { degree, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize, b: usize) -> f64 {
        if a + b > self.degree {
            0.0
        } else {
            self.coeffs[monomial_index(a, b)]
        }
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for (k, &(a, b)) in monomial_exponents(self.degree).iter().enumerate() {
            let c = self.coeffs[k];
            if c != 0.0 {
                acc += c * x.powi(a as i32) * y.powi(b as i32);
            }
        }
        acc
    }

    pub fn dx(&self) -> Poly2 {
        let deg = self.degree.saturating_sub(1);
        let mut out = Poly2::zero(deg);
        for &(a, b) in &monomial_exponents(self.degree) {
            if a >= 1 {
                let c = self.coeffs[monomial_index(a, b)];
                out.coeffs[monomial_index(a - 1, b)] += a as f64 * c;
            }
        }
        out
    }

    pub fn dy(&self) -> Poly2 {
        let deg = self.degree.saturating_sub(1);
        let mut out = Poly2::zero(deg);
        for &(a, b) in &monomial_exponents(self.degree) {
            if b >= 1 {
                let c = self.coeffs[monomial_index(a, b)];
                out.coeffs[monomial_index(a, b - 1)] += b as f64 * c;
            }
        }
        out
    }

    pub fn scaled(&self, s: f64) -> Poly2 {
        Poly2 {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Poly2, s: f64) {
        assert!(other.degree <= self.degree);
        for &(a, b) in &monomial_exponents(other.degree) {
            self.coeffs[monomial_index(a, b)] += s * other.coeffs[monomial_index(a, b)];
        }
    }

    /// Product with a single monomial `x^a y^b`.
    pub fn mul_monomial(&self, a: usize, b: usize) -> Poly2 {
        let mut out = Poly2::zero(self.degree + a + b);
        for &(pa, pb) in &monomial_exponents(self.degree) {
            let c = self.coeffs[monomial_index(pa, pb)];
            if c != 0.0 {
                out.coeffs[monomial_index(pa + a, pb + b)] += c;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_round_trip() {
        for (k, (a, b)) in monomial_exponents(5).into_iter().enumerate() {
            assert_eq!(monomial_index(a, b), k);
        }
        assert_eq!(monomial_count(3), 10);
    }

    #[test]
    fn derivatives() {
        // p = 3 x^2 y + y^2
        let mut p = Poly2::zero(3);
        p.add_scaled(&Poly2::monomial(3, 2, 1), 3.0);
        p.add_scaled(&Poly2::monomial(3, 0, 2), 1.0);
        let (x, y) = (0.3, -0.7);
        assert!((p.dx().eval(x, y) - 6.0 * x * y).abs() < 1e-14);
        assert!((p.dy().eval(x, y) - (3.0 * x * x + 2.0 * y)).abs() < 1e-14);
    }

    #[test]
    fn monomial_product() {
        let p = Poly2::monomial(2, 1, 1); // x y
        let q = p.mul_monomial(2, 0); // x^3 y
        assert!((q.eval(2.0, 3.0) - 24.0).abs() < 1e-13);
    }
}
