//! Independent checks of the closed forms: exact constant-term integration
//! for integer data, and numerical torus quadrature otherwise.
//!
//! The torus integrand is
//! `∏_k (1-e^{iφ_k})^σ (1-e^{-iφ_k})^τ · p(e^{iφ}) · ∏_{k<l} |e^{iφ_k}-e^{iφ_l}|^{2κ}`
//! with the branch `(1-e^{iφ})^σ (1-e^{-iφ})^τ = (2 sin(φ/2))^{σ+τ} e^{i(σ-τ)(φ-π)/2}`
//! on `φ ∈ (0, 2π)`.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::{Float, FloatConst, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gammaval::SignedValue;
use crate::jack::jack_cached;
use crate::partitions::Signature;
use crate::scalar::{rational_to_f64, Rational, Real};
use crate::sympoly::{discriminant_power, LaurentPoly};

/// Quadrature floating type.
pub trait QuadFloat: Float + FloatConst + Send + Sync + std::fmt::Debug + 'static {}
impl<T: Float + FloatConst + Send + Sync + std::fmt::Debug + 'static> QuadFloat for T {}

fn cast<F: QuadFloat>(x: f64) -> F {
    F::from(x).expect("representable")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Rule {
    /// Tensor midpoint rule at `N` and `N/2` (for the error estimate).
    Midpoint,
    /// Midpoint sums at `N, N/2, …, N/2^levels`, combined by Richardson
    /// extrapolation over the algebraic error exponents of the integrand.
    Extrapolated { levels: usize },
    /// Randomly shifted Kronecker point sets; the estimate is the mean over
    /// shifts and the error is its standard error.
    QuasiMonteCarlo { points: usize, shifts: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub n: usize,
    pub points_per_dim: usize,
    pub rule: Rule,
    /// Attach a warning when the error estimate exceeds this.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl QuadratureSpec {
    pub fn midpoint(n: usize, points_per_dim: usize) -> Self {
        QuadratureSpec {
            n,
            points_per_dim,
            rule: Rule::Midpoint,
            tolerance: None,
        }
    }

    pub fn extrapolated(n: usize, points_per_dim: usize, levels: usize) -> Self {
        QuadratureSpec {
            n,
            points_per_dim,
            rule: Rule::Extrapolated { levels },
            tolerance: None,
        }
    }

    pub fn quasi_monte_carlo(n: usize, points: usize, shifts: usize, seed: u64) -> Self {
        QuadratureSpec {
            n,
            points_per_dim: points,
            rule: Rule::QuasiMonteCarlo { points, shifts, seed },
            tolerance: None,
        }
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub re: f64,
    pub im: f64,
    /// Richardson-type estimate of the absolute error.
    pub error_estimate: f64,
    /// Standard error of the mean, for the randomized rule.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub std_error: Option<f64>,
    pub nodes: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl QuadratureResult {
    pub fn value(&self) -> Complex<f64> {
        Complex::new(self.re, self.im)
    }
}

/// Neumaier-compensated complex sum.
#[derive(Clone, Copy, Debug)]
struct CompensatedSum<F> {
    sum: [F; 2],
    err: [F; 2],
}

impl<F: QuadFloat> CompensatedSum<F> {
    fn new() -> Self {
        CompensatedSum {
            sum: [F::zero(); 2],
            err: [F::zero(); 2],
        }
    }

    fn add(&mut self, z: Complex<F>) {
        for (k, x) in [z.re, z.im].into_iter().enumerate() {
            let s = self.sum[k];
            let t = s + x;
            if s.abs() >= x.abs() {
                self.err[k] = self.err[k] + ((s - t) + x);
            } else {
                self.err[k] = self.err[k] + ((x - t) + s);
            }
            self.sum[k] = t;
        }
    }

    fn total(&self) -> Complex<F> {
        Complex::new(self.sum[0] + self.err[0], self.sum[1] + self.err[1])
    }
}

fn compensated<F: QuadFloat>(values: impl IntoIterator<Item = Complex<F>>) -> Complex<F> {
    let mut acc = CompensatedSum::new();
    for z in values {
        acc.add(z);
    }
    acc.total()
}

/// `(2 sin(φ/2))^{σ+τ} e^{i(σ-τ)(φ-π)/2}` for `φ ∈ (0, 2π)`.
fn boundary_factor<F: QuadFloat>(phi: F, a: F, b: F) -> Complex<F> {
    let two = F::one() + F::one();
    let modulus = (two * (phi / two).sin()).powf(a);
    let arg = b * (phi - F::PI()) / two;
    Complex::from_polar(modulus, arg)
}

/// The integrand at a single node.
pub fn integrand_value<F: QuadFloat>(
    phi: &[F],
    p: &LaurentPoly<f64>,
    kappa: F,
    sigma: F,
    tau: F,
) -> Result<Complex<F>> {
    if phi.len() != p.n() {
        return Err(Error::LengthMismatch {
            expected: p.n(),
            got: phi.len(),
        });
    }
    let two_pi = F::PI() + F::PI();
    if phi.iter().any(|&x| x <= F::zero() || x >= two_pi) {
        return Err(Error::Domain("nodes must lie in the open interval (0, 2π)".into()));
    }
    let (a, b) = (sigma + tau, sigma - tau);
    let mut w = Complex::new(F::one(), F::zero());
    for &x in phi {
        w = w * boundary_factor(x, a, b);
    }
    let two = F::one() + F::one();
    for k in 0..phi.len() {
        for l in k + 1..phi.len() {
            let d = (two * ((phi[k] - phi[l]) / two).sin()).abs();
            w = w.scale(d.powf(two * kappa));
        }
    }
    let x: Vec<Complex<F>> = phi.iter().map(|&t| Complex::from_polar(F::one(), t)).collect();
    Ok(w * p.eval(&x))
}

/// Error exponents `q` in `I_N - I ~ Σ c_q N^{-q}` for the midpoint rule:
/// `σ+τ+1+k` from the boundary factor (absent when it is a trigonometric
/// polynomial) and `2κ+1+2k` from the diagonal (absent for integer κ).
pub fn error_exponents(n: usize, kappa: f64, sigma: f64, tau: f64) -> Vec<f64> {
    let a = sigma + tau;
    let is_int = |x: f64| (x - x.round()).abs() < 1e-12;
    let mut out = Vec::new();
    if !(is_int(sigma) && is_int(tau) && a > -0.5) {
        out.extend((0..8).map(|k| a + 1.0 + k as f64));
    }
    if n >= 2 && !is_int(kappa) {
        out.extend((0..6).map(|k| 2.0 * kappa + 1.0 + 2.0 * k as f64));
    }
    out.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
    out.dedup_by(|x, y| (*x - *y).abs() < 1e-9);
    out
}

struct Tables<F> {
    weight: Vec<Complex<F>>,
    cis: BTreeMap<i64, Vec<Complex<F>>>,
    disc: Vec<F>,
}

fn tables<F: QuadFloat>(p: &LaurentPoly<f64>, big_n: usize, kappa: F, a: F, b: F) -> Tables<F> {
    let nn = big_n as i64;
    let pi = F::PI();
    let nf = cast::<F>(big_n as f64);
    let weight = (0..big_n)
        .map(|m| {
            let phi = pi * cast::<F>((2 * m + 1) as f64) / nf;
            boundary_factor(phi, a, b)
        })
        .collect();
    let mut cis = BTreeMap::new();
    for v in p.terms().keys() {
        for &e in v {
            cis.entry(e).or_insert_with(|| {
                (0..big_n as i64)
                    .map(|m| {
                        // e·φ_m = π e (2m+1)/N, reduced mod 2π exactly
                        let r = (e * (2 * m + 1)).rem_euclid(2 * nn);
                        Complex::from_polar(F::one(), pi * cast::<F>(r as f64) / nf)
                    })
                    .collect::<Vec<_>>()
            });
        }
    }
    let two = F::one() + F::one();
    let disc = (0..big_n)
        .map(|d| {
            let s = (two * (pi * cast::<F>(d as f64) / nf).sin()).abs();
            if d == 0 {
                F::zero()
            } else {
                s.powf(two * kappa)
            }
        })
        .collect();
    Tables { weight, cis, disc }
}

/// Tensor midpoint sum `(2π/N)ⁿ Σ_m f(φ_m)`.
fn midpoint_sum<F: QuadFloat>(p: &LaurentPoly<f64>, big_n: usize, kappa: F, sigma: F, tau: F) -> Complex<F> {
    let n = p.n();
    let t = tables(p, big_n, kappa, sigma + tau, sigma - tau);
    let h = (F::PI() + F::PI()) / cast::<F>(big_n as f64);
    let zero = Complex::new(F::zero(), F::zero());
    let total = match n {
        0 => Complex::new(cast(p.constant_term()), F::zero()),
        1 => compensated(p.terms().iter().map(|(v, c)| {
            let row = &t.cis[&v[0]];
            let s = compensated((0..big_n).map(|m| t.weight[m] * row[m]));
            s.scale(cast(*c))
        })),
        2 => {
            // Σ_{m1,m2} A(m1) D(m1-m2) B(m2), with the inner sum over m2
            // done once per second exponent
            let mut by_second: BTreeMap<i64, Vec<(i64, f64)>> = BTreeMap::new();
            for (v, c) in p.terms() {
                by_second.entry(v[1]).or_default().push((v[0], *c));
            }
            compensated(by_second.iter().map(|(e2, firsts)| {
                let b: Vec<Complex<F>> = (0..big_n).map(|m| t.weight[m] * t.cis[e2][m]).collect();
                let conv: Vec<Complex<F>> = (0..big_n)
                    .into_par_iter()
                    .map(|m1| {
                        let mut acc = zero;
                        for (m2, bm) in b.iter().enumerate() {
                            acc = acc + bm.scale(t.disc[(m1 + big_n - m2) % big_n]);
                        }
                        acc
                    })
                    .collect();
                compensated(firsts.iter().map(|(e1, c)| {
                    let row = &t.cis[e1];
                    let s = compensated((0..big_n).map(|m| t.weight[m] * row[m] * conv[m]));
                    s.scale(cast(*c))
                }))
            }))
        }
        _ => {
            let terms: Vec<(&Vec<i64>, F)> = p.terms().iter().map(|(v, c)| (v, cast(*c))).collect();
            let rows: Vec<Complex<F>> = (0..big_n)
                .into_par_iter()
                .map(|m0| {
                    let mut acc = CompensatedSum::new();
                    let mut idx = vec![0usize; n];
                    idx[0] = m0;
                    loop {
                        let mut w = Complex::new(F::one(), F::zero());
                        for k in 0..n {
                            w = w * t.weight[idx[k]];
                            for l in k + 1..n {
                                w = w.scale(t.disc[(idx[k] + big_n - idx[l]) % big_n]);
                            }
                        }
                        let mut pv = zero;
                        for (v, c) in &terms {
                            let mut term = Complex::new(*c, F::zero());
                            for k in 0..n {
                                term = term * t.cis[&v[k]][idx[k]];
                            }
                            pv = pv + term;
                        }
                        acc.add(w * pv);
                        // odometer over indices 1..n
                        let mut k = n - 1;
                        loop {
                            if k == 0 {
                                return acc.total();
                            }
                            idx[k] += 1;
                            if idx[k] < big_n {
                                break;
                            }
                            idx[k] = 0;
                            k -= 1;
                        }
                    }
                })
                .collect();
            compensated(rows)
        }
    };
    let mut scale = F::one();
    for _ in 0..n {
        scale = scale * h;
    }
    total.scale(scale)
}

/// Richardson elimination of the given error exponents from sums at
/// `N, N/2, N/4, …` (finest first). Returns the final estimate and the
/// estimate with one exponent fewer.
fn richardson<F: QuadFloat>(values: &[Complex<F>], exponents: &[f64]) -> (Complex<F>, Complex<F>) {
    let mut t = values.to_vec();
    let mut prev = t[0];
    for (i, &q) in exponents.iter().enumerate().take(values.len() - 1) {
        prev = t[0];
        let f = cast::<F>(2f64.powf(q));
        for j in 0..values.len() - 1 - i {
            t[j] = (t[j].scale(f) - t[j + 1]) / (f - F::one());
        }
    }
    (t[0], prev)
}

fn kronecker_alpha(n: usize) -> Vec<f64> {
    // generalized golden ratio: the real root of x^{n+1} = x + 1
    let mut g = 2.0f64;
    for _ in 0..64 {
        g = (1.0 + g).powf(1.0 / (n as f64 + 1.0));
    }
    (1..=n).map(|k| (1.0 / g.powi(k as i32)).fract()).collect()
}

fn qmc<F: QuadFloat>(
    p: &LaurentPoly<f64>,
    kappa: F,
    sigma: F,
    tau: F,
    points: usize,
    shifts: usize,
    seed: u64,
) -> Result<(Complex<F>, F)> {
    if shifts < 2 {
        return Err(Error::Domain("at least two random shifts are needed".into()));
    }
    let n = p.n();
    let alpha = kronecker_alpha(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offsets: Vec<Vec<f64>> = (0..shifts)
        .map(|_| (0..n).map(|_| rng.gen::<f64>()).collect())
        .collect();
    let two_pi = std::f64::consts::TAU;
    let volume = cast::<F>(two_pi.powi(n as i32));
    let estimates: Vec<Complex<F>> = offsets
        .par_iter()
        .map(|delta| {
            let vals: Vec<Complex<F>> = (0..points)
                .into_par_iter()
                .map(|k| {
                    let phi: Vec<F> = (0..n)
                        .map(|d| {
                            let u = (k as f64 * alpha[d] + delta[d]).fract();
                            cast::<F>(two_pi * u.clamp(1e-300, 1.0 - f64::EPSILON))
                        })
                        .collect();
                    integrand_value(&phi, p, kappa, sigma, tau).unwrap_or(Complex::new(F::zero(), F::zero()))
                })
                .collect();
            compensated(vals).scale(volume / cast::<F>(points as f64))
        })
        .collect();
    let s = cast::<F>(shifts as f64);
    let mean = compensated(estimates.iter().copied()).unscale(s);
    let var = estimates
        .iter()
        .map(|z| (*z - mean).norm_sqr())
        .fold(F::zero(), |a, b| a + b)
        / (s - F::one());
    Ok((mean, (var / s).sqrt()))
}

/// Integral of `p` against the torus weight with parameters `(κ, σ, τ)`.
pub fn integrate_torus_generic<F: QuadFloat>(
    p: &LaurentPoly<f64>,
    kappa: F,
    sigma: F,
    tau: F,
    quad: &QuadratureSpec,
) -> Result<(Complex<F>, F, Option<F>, usize)> {
    if quad.n != p.n() {
        return Err(Error::LengthMismatch {
            expected: p.n(),
            got: quad.n,
        });
    }
    if (sigma + tau).to_f64().expect("finite") <= -1.0 {
        return Err(Error::Domain("integral diverges: sigma + tau must exceed -1".into()));
    }
    let big_n = quad.points_per_dim;
    let n = p.n() as u32;
    let exps = error_exponents(
        p.n(),
        kappa.to_f64().expect("finite"),
        sigma.to_f64().expect("finite"),
        tau.to_f64().expect("finite"),
    );
    match &quad.rule {
        Rule::Midpoint => {
            if big_n < 2 || !big_n.is_multiple_of(2) {
                return Err(Error::Domain("points per dimension must be even".into()));
            }
            let fine = midpoint_sum(p, big_n, kappa, sigma, tau);
            let coarse = midpoint_sum(p, big_n / 2, kappa, sigma, tau);
            let q = exps.first().copied().unwrap_or(2.0);
            let diff = (fine - coarse).norm();
            let est = diff.max(diff / cast::<F>(2f64.powf(q) - 1.0));
            Ok((fine, est, None, big_n.pow(n) + (big_n / 2).pow(n)))
        }
        Rule::Extrapolated { levels } => {
            let levels = (*levels).max(1);
            if !big_n.is_multiple_of(1 << levels) || big_n >> levels < 2 {
                return Err(Error::Domain(format!("{big_n} points cannot be halved {levels} times")));
            }
            let sizes: Vec<usize> = (0..=levels).map(|j| big_n >> j).collect();
            let values: Vec<Complex<F>> = sizes.iter().map(|&m| midpoint_sum(p, m, kappa, sigma, tau)).collect();
            let nodes = sizes.iter().map(|m| m.pow(n)).sum();
            if exps.is_empty() {
                // smooth periodic integrand: the midpoint sum is already
                // exact up to rounding once N exceeds the degree
                let est = (values[0] - values[1]).norm();
                return Ok((values[0], est, None, nodes));
            }
            let (best, prev) = richardson(&values, &exps);
            Ok((best, (best - prev).norm(), None, nodes))
        }
        Rule::QuasiMonteCarlo { points, shifts, seed } => {
            let (mean, se) = qmc(p, kappa, sigma, tau, *points, *shifts, *seed)?;
            Ok((mean, cast::<F>(3.0) * se, Some(se), points * shifts))
        }
    }
}

pub fn integrate_torus(
    p: &LaurentPoly<f64>,
    kappa: &Rational,
    sigma: f64,
    tau: f64,
    quad: &QuadratureSpec,
) -> Result<QuadratureResult> {
    let (v, est, se, nodes) = integrate_torus_generic::<f64>(p, rational_to_f64(kappa), sigma, tau, quad)?;
    let mut warnings = Vec::new();
    if let Some(tol) = quad.tolerance {
        if est > tol * v.norm().max(f64::MIN_POSITIVE) {
            warnings.push(format!(
                "quadrature did not converge: error estimate {est:.3e} exceeds relative tolerance {tol:.1e}"
            ));
        }
    }
    Ok(QuadratureResult {
        re: v.re,
        im: v.im,
        error_estimate: est,
        std_error: se,
        nodes,
        warnings,
    })
}

/// `𝓛_λ(κ; σ, τ)` by quadrature.
pub fn torus_integral_numeric(
    lambda: &Signature,
    kappa: &Rational,
    sigma: f64,
    tau: f64,
    quad: &QuadratureSpec,
) -> Result<QuadratureResult> {
    let p = jack_cached(lambda, kappa)?
        .expansion
        .to_dense()
        .map(rational_to_f64);
    integrate_torus(&p, kappa, sigma, tau, quad)
}

fn boundary_polynomial(n: usize, sigma: u32, tau: u32) -> LaurentPoly<Rational> {
    let mut acc = LaurentPoly::one(n);
    for k in 0..n {
        let mut e = vec![0; n];
        let mut f = LaurentPoly::one(n);
        e[k] = 1;
        f.add_term(e.clone(), crate::scalar::int(-1));
        let mut g = LaurentPoly::one(n);
        e[k] = -1;
        g.add_term(e, crate::scalar::int(-1));
        acc = acc.mul(&f.pow(sigma)).and_then(|x| x.mul(&g.pow(tau))).expect("same n");
    }
    acc
}

fn nonneg_u32(x: i64, what: &str) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Domain(format!("{what} must be a non-negative integer")))
}

/// `(2π)^{-n} 𝓛_λ(κ; σ, τ)` as an exact constant term, for integer
/// `κ > 0` and integer `σ, τ ≥ 0`.
pub fn torus_integral_exact(lambda: &Signature, kappa: &Rational, sigma: i64, tau: i64) -> Result<Rational> {
    let n = lambda.len();
    let w = discriminant_power::<Rational>(n, kappa)?;
    let b = boundary_polynomial(n, nonneg_u32(sigma, "sigma")?, nonneg_u32(tau, "tau")?);
    let p = jack_cached(lambda, kappa)?.expansion.to_dense();
    p.mul(&b)?.constant_term_of_product(&w)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GramMethod {
    Exact,
    Numeric(QuadratureSpec),
}

/// `G_ij = ∫ P_{λ_i} conj(P_{λ_j}) ∏|x_k - x_l|^{2κ} dφ`.
pub fn gram_matrix(
    lambdas: &[Signature],
    n: usize,
    kappa: &Rational,
    method: &GramMethod,
) -> Result<Vec<Vec<SignedValue>>> {
    for l in lambdas {
        if l.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: l.len(),
            });
        }
    }
    let polys: Vec<LaurentPoly<Rational>> = lambdas
        .iter()
        .map(|l| jack_cached(l, kappa).map(|p| p.expansion.to_dense()))
        .collect::<Result<_>>()?;
    let conj: Vec<LaurentPoly<Rational>> = polys.iter().map(|p| p.substitute_inverse()).collect();
    let entry = |i: usize, j: usize| -> Result<SignedValue> {
        let prod = polys[i].mul(&conj[j])?;
        match method {
            GramMethod::Exact => {
                let w = discriminant_power::<Rational>(n, kappa)?;
                let ct = prod.constant_term_of_product(&w)?;
                Ok(SignedValue::from_rational(ct).mul(&SignedValue::two_pi_pow(n as i32)))
            }
            GramMethod::Numeric(quad) => {
                let p = prod.map(rational_to_f64);
                let r = integrate_torus(&p, kappa, 0.0, 0.0, quad)?;
                Ok(SignedValue::from_f64(r.re))
            }
        }
    };
    (0..lambdas.len())
        .map(|i| (0..lambdas.len()).map(|j| entry(i, j)).collect())
        .collect()
}

/// `‖P_λ‖²` for the form evaluations.
pub fn jack_norm(lambda: &Signature, kappa: &Rational, quad: &QuadratureSpec) -> Result<SignedValue> {
    let method = if kappa.is_integer() && kappa.is_positive() {
        GramMethod::Exact
    } else {
        GramMethod::Numeric(quad.clone())
    };
    let g = gram_matrix(std::slice::from_ref(lambda), lambda.len(), kappa, &method)?;
    Ok(g[0][0].clone())
}

/// Integer value of an exact parameter, if it has one.
pub fn exact_integer(x: &Real) -> Option<i64> {
    match x {
        Real::Exact(q) if q.is_integer() => q.numer().to_i64(),
        _ => None,
    }
}
