//! Truncated formal power series with exact integer coefficients, the two
//! closed-form Poincare series attached to Spin(n), and the series-level
//! collapse test for the Rothenberg-Steenrod spectral sequence.
//!
//! `H*(BSpin(n); F2)` has Poincare series
//! `prod_{k<h} (1 - t^(2^k+1)) / ((1 - t^(2^h)) prod_{k=2..n} (1 - t^k))`
//! with `h` the Hurwitz-Radon number; the cotorsion product of
//! `H*(Spin(n); F2)` has the same shape with `h'` in place of `h`. The
//! spectral sequence collapses exactly when the two series agree.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::spinarith::spin_params;

/// Integer coefficients `c_0 .. c_D` of a power series in `t`, truncated at
/// degree `D`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(d: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); d + 1],
        }
    }

    pub fn one(d: usize) -> Self {
        let mut s = Self::zero(d);
        s.coeffs[0] = BigInt::from(1);
        s
    }

    pub fn from_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        assert!(!counts.is_empty());
        TruncatedSeries {
            coeffs: counts.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Truncation degree `D`.
    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Cauchy product truncated at the common degree.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(
            self.truncation_degree(),
            other.truncation_degree(),
            "truncation degree mismatch"
        );
        let d = self.truncation_degree();
        let mut out = TruncatedSeries::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(d + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// In-place multiplication by `(1 - t^e)`; a no-op when `e` exceeds the
    /// truncation degree.
    pub fn mul_one_minus_power(&mut self, e: u64) {
        assert!(e >= 1, "factor exponent must be positive");
        let d = self.truncation_degree() as u64;
        if e > d {
            return;
        }
        let e = e as usize;
        for i in (e..self.coeffs.len()).rev() {
            let sub = self.coeffs[i - e].clone();
            self.coeffs[i] -= sub;
        }
    }

    /// In-place multiplication by `1/(1 - t^a) = 1 + t^a + t^(2a) + ...`.
    pub fn mul_geometric(&mut self, a: u64) {
        assert!(a >= 1, "geometric period must be positive");
        let d = self.truncation_degree() as u64;
        if a > d {
            return;
        }
        let a = a as usize;
        for i in a..self.coeffs.len() {
            let add = self.coeffs[i - a].clone();
            self.coeffs[i] += add;
        }
    }

    /// The expansion of `1/(1 - t^a)`: coefficient 1 at multiples of `a`.
    pub fn geometric_factor(a: u64, d: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::one(d);
        s.mul_geometric(a);
        s
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", strs.join(", "))
    }
}

/// `prod (1 - t^e)` over the numerator exponents divided by the same product
/// over the denominator exponents, truncated at `d`. This is the Poincare
/// series of a polynomial ring on generators of the denominator degrees
/// modulo a regular sequence of the numerator degrees.
pub fn rational_series(numerator: &[u64], denominator: &[u64], d: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(d);
    for &e in numerator {
        s.mul_one_minus_power(e);
    }
    for &a in denominator {
        s.mul_geometric(a);
    }
    s
}

/// `2^k` saturated so that factors beyond any reachable truncation degree
/// are treated as the identity.
fn pow2(k: u32) -> u64 {
    if k >= 63 {
        u64::MAX
    } else {
        1u64 << k
    }
}

fn pow2_plus_1(k: u32) -> u64 {
    pow2(k).saturating_add(1)
}

/// Poincare series of `H*(BSpin(n); F2)`, built from the Hurwitz-Radon
/// number `h`.
pub fn poincare_quillen(n: u32, d: usize) -> TruncatedSeries {
    let p = spin_params(n);
    poincare_from_height(n, p.h, d)
}

/// Poincare series of the cotorsion product of `H*(Spin(n); F2)`, built
/// from `h'`.
pub fn poincare_cotor(n: u32, d: usize) -> TruncatedSeries {
    let p = spin_params(n);
    poincare_from_height(n, p.h_prime, d)
}

fn poincare_from_height(n: u32, height: u32, d: usize) -> TruncatedSeries {
    let numerator: Vec<u64> = (0..height).map(pow2_plus_1).collect();
    let mut denominator: Vec<u64> = vec![pow2(height)];
    denominator.extend((2..=u64::from(n)).collect::<Vec<u64>>());
    rational_series(&numerator, &denominator, d)
}

/// Least degree where the two series differ, or `None` when they agree
/// through the common truncation degree.
pub fn first_divergence(a: &TruncatedSeries, b: &TruncatedSeries) -> Option<usize> {
    assert_eq!(
        a.truncation_degree(),
        b.truncation_degree(),
        "truncation degree mismatch"
    );
    a.coeffs
        .iter()
        .zip(b.coeffs.iter())
        .position(|(x, y)| x != y)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Collapses,
    DoesNotCollapse,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Collapses => write!(f, "collapses"),
            Verdict::DoesNotCollapse => write!(f, "does_not_collapse"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesError {
    /// The requested window cannot witness a divergence, which first
    /// appears at degree `2^h'`; refusing beats a false "collapses".
    TruncationTooSmall { n: u32, required: u64, got: usize },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::TruncationTooSmall { n, required, got } => write!(
                f,
                "truncation degree {got} is too small to decide collapse for n = {n}; need at least {required}"
            ),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Minimal truncation degree accepted by `collapse_verdict`.
pub fn collapse_window(n: u32) -> u64 {
    let p = spin_params(n);
    pow2(p.h_prime).saturating_add(2)
}

/// Decides collapse by comparing the two Poincare series through degree
/// `d`. Requires `d >= 2^h' + 2` so that equality through the window really
/// means equality (a divergence, when present, appears at degree `2^h'`).
pub fn collapse_verdict(n: u32, d: usize) -> Result<Verdict, SeriesError> {
    let required = collapse_window(n);
    if (d as u64) < required {
        return Err(SeriesError::TruncationTooSmall {
            n,
            required,
            got: d,
        });
    }
    let quillen = poincare_quillen(n, d);
    let cotor = poincare_cotor(n, d);
    let verdict = match first_divergence(&cotor, &quillen) {
        None => Verdict::Collapses,
        Some(_) => Verdict::DoesNotCollapse,
    };
    // The series comparison and the integer comparison must agree.
    let p = spin_params(n);
    assert_eq!(
        verdict == Verdict::Collapses,
        p.h_prime == p.h,
        "series verdict disagrees with h' vs h for n = {n}"
    );
    Ok(verdict)
}
