//! Closed forms for the torus integral `𝓛_λ(κ; σ, τ)`, the Kadell integral,
//! and the kernel eigenvalues `c_λ(σ, τ)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gammaval::{gamma_ratio, gamma_signed, product, recip_gamma, recip_gamma_reflected, SignedValue};
use crate::jack::value_at_ones;
use crate::partitions::Signature;
use crate::scalar::{factorial, int, rat, Rational, Real, LATTICE_TOL};

/// The three compact symmetric spaces and their multiplicity parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    /// `U(n) × U(n) / U(n)`, `κ = 1`.
    UN,
    /// `U(n)/O(n)`, `κ = 1/2`.
    UO,
    /// `U(2n)/Sp(n)`, `κ = 2`.
    USp,
}

impl Space {
    pub fn kappa(self) -> Rational {
        match self {
            Space::UN => int(1),
            Space::UO => rat(1, 2),
            Space::USp => int(2),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::UN => "UN",
            Space::UO => "UO",
            Space::USp => "USp",
        })
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "un" | "u" => Ok(Space::UN),
            "uo" => Ok(Space::UO),
            "usp" => Ok(Space::USp),
            _ => Err(Error::Parse(format!("unknown space {s:?} (UN, UO, USp)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelSpec {
    pub space: Space,
    pub n: usize,
    #[serde(with = "crate::scalar::serde_rational")]
    pub kappa: Rational,
    pub sigma: Real,
    pub tau: Real,
}

impl KernelSpec {
    pub fn new(space: Space, n: usize, sigma: Real, tau: Real) -> Self {
        KernelSpec {
            space,
            n,
            kappa: space.kappa(),
            sigma,
            tau,
        }
    }
}

fn check_length(lambda: &Signature, n: usize) -> Result<()> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    Ok(())
}

fn kappa_times(kappa: &Rational, k: i64) -> Real {
    Real::Exact(kappa * int(k))
}

fn sign_power(k: i64) -> SignedValue {
    SignedValue::from_rational(int(if k.rem_euclid(2) == 0 { 1 } else { -1 }))
}

fn integer_kappa(kappa: &Rational) -> Result<i64> {
    if kappa.is_integer() && kappa.is_positive() {
        kappa
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::Unsupported("kappa too large".into()))
    } else {
        Err(Error::Unsupported(format!(
            "this formula needs a positive integer kappa, got {kappa}"
        )))
    }
}

/// `v_λ(κ) = ∏_{k<l} Γ(λ_k - λ_l + κ(l-k+1)) / Γ(λ_k - λ_l + κ(l-k))`.
pub fn v_lambda(lambda: &Signature, kappa: &Rational) -> SignedValue {
    let p = lambda.parts();
    let mut factors = Vec::new();
    for k in 0..p.len() {
        for l in k + 1..p.len() {
            let d = Real::int(p[k] - p[l]);
            let gap = (l - k) as i64;
            let a = d.add(&kappa_times(kappa, gap + 1));
            let b = d.add(&kappa_times(kappa, gap));
            factors.push(gamma_ratio(&a, &b).expect("arguments are positive"));
        }
    }
    product(&factors)
}

/// `a_λ(κ; r, s) v_λ(κ)` with
/// `a_λ = ∏_j Γ(λ_j + r + κ(n-j)) Γ(s + κ(n-j)) / Γ(λ_j + r + s + κ(2n-j-1))`.
///
/// Equals `(1/n!) ∫_{[0,1]ⁿ} P_λ ∏ x_j^{r-1} (1-x_j)^{s-1} |Δ(x)|^{2κ} dx`.
pub fn kadell_value(lambda: &Signature, kappa: &Rational, r: &Real, s: &Real) -> Result<SignedValue> {
    integer_kappa(kappa)?;
    if !lambda.is_partition() {
        return Err(Error::Domain(format!("({lambda}) is not a partition")));
    }
    let n = lambda.len() as i64;
    let mut factors = vec![v_lambda(lambda, kappa)];
    for (idx, &l) in lambda.parts().iter().enumerate() {
        let j = idx as i64 + 1;
        let top = Real::int(l).add(r).add(&kappa_times(kappa, n - j));
        let side = s.add(&kappa_times(kappa, n - j));
        let bottom = Real::int(l).add(r).add(s).add(&kappa_times(kappa, 2 * n - j - 1));
        factors.push(gamma_signed(&top)?);
        factors.push(gamma_signed(&side)?);
        factors.push(gamma_signed(&bottom)?.recip()?);
    }
    Ok(product(&factors))
}

fn check_convergent(sigma: &Real, tau: &Real) -> Result<()> {
    let sum = sigma.add(tau).add_int(1);
    if !sum.is_positive() || sum.to_f64() <= LATTICE_TOL {
        return Err(Error::Domain(format!(
            "integral diverges: sigma + tau = {} must exceed -1",
            sigma.add(tau)
        )));
    }
    Ok(())
}

/// `Γ(σ+τ+1+κ(n-j))` for `j = 1..n`.
fn prefactor_gammas(n: i64, kappa: &Rational, sigma: &Real, tau: &Real) -> Result<Vec<SignedValue>> {
    (1..=n)
        .map(|j| gamma_signed(&sigma.add(tau).add_int(1).add(&kappa_times(kappa, n - j))))
        .collect()
}

/// `A_j = -λ_j + τ + 1 + κ(j-1)` and `B_j = λ_j + σ + 1 + κ(n-j)`.
fn denominator_args(lambda: &Signature, kappa: &Rational, sigma: &Real, tau: &Real) -> Vec<(Real, Real)> {
    let n = lambda.len() as i64;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &l)| {
            let j = idx as i64 + 1;
            let a = tau.add_int(1 - l).add(&kappa_times(kappa, j - 1));
            let b = sigma.add_int(1 + l).add(&kappa_times(kappa, n - j));
            (a, b)
        })
        .collect()
}

/// The torus integral
/// `𝓛_λ = ∫_{[0,2π]ⁿ} ∏(1-e^{iφ_j})^σ (1-e^{-iφ_j})^τ P_λ(e^{iφ}) ∏|e^{iφ_k}-e^{iφ_l}|^{2κ} dφ`
/// in closed form:
/// `(2π)ⁿ n! v_λ ∏_j (-1)^{λ_j} Γ(σ+τ+1+κ(n-j)) / [Γ(A_j) Γ(B_j)]`.
pub fn l_lambda(lambda: &Signature, kappa: &Rational, sigma: &Real, tau: &Real) -> Result<SignedValue> {
    if !kappa.is_positive() {
        return Err(Error::Unsupported(format!("kappa must be positive, got {kappa}")));
    }
    check_convergent(sigma, tau)?;
    let n = lambda.len() as i64;
    let mut factors = vec![
        SignedValue::two_pi_pow(n as i32),
        SignedValue::from_rational(Rational::from_integer(factorial(n as u64))),
        v_lambda(lambda, kappa),
        sign_power(lambda.weight()),
    ];
    factors.extend(prefactor_gammas(n, kappa, sigma, tau)?);
    for (a, b) in denominator_args(lambda, kappa, sigma, tau) {
        factors.push(recip_gamma(&a));
        factors.push(recip_gamma(&b));
    }
    Ok(product(&factors))
}

/// The same integral through the sine-reflection form
/// `2ⁿ n! (-sin τπ)ⁿ (-1)^{κ n(n-1)/2} v_λ ∏_j Γ(λ_j-τ-κ(j-1)) Γ(σ+τ+1+κ(n-j)) / Γ(B_j)`,
/// valid for integer κ and non-integer τ.
pub fn l_lambda_alt(lambda: &Signature, kappa: &Rational, sigma: &Real, tau: &Real) -> Result<SignedValue> {
    let k = integer_kappa(kappa)?;
    if tau.is_integer() {
        return Err(Error::Domain(format!("tau = {tau} is an integer")));
    }
    check_convergent(sigma, tau)?;
    let n = lambda.len() as i64;
    // -sin(πτ) = -π · [sin(πτ)/π]; the π's combine with 2ⁿ into (2π)ⁿ
    let minus_sine = recip_gamma_reflected(tau).neg();
    let mut factors = vec![
        SignedValue::two_pi_pow(n as i32),
        SignedValue::from_rational(Rational::from_integer(factorial(n as u64))),
        v_lambda(lambda, kappa),
        sign_power(k * n * (n - 1) / 2),
    ];
    factors.extend(prefactor_gammas(n, kappa, sigma, tau)?);
    for (idx, &l) in lambda.parts().iter().enumerate() {
        let j = idx as i64 + 1;
        let z = tau.neg().add_int(l).add(&kappa_times(kappa, -(j - 1)));
        let b = sigma.add_int(1 + l).add(&kappa_times(kappa, n - j));
        factors.push(minus_sine.clone());
        factors.push(gamma_signed(&z)?);
        factors.push(recip_gamma(&b));
    }
    Ok(product(&factors))
}

/// `c_λ = 𝓛_λ / P_λ(1ⁿ)`.
pub fn c_lambda(lambda: &Signature, spec: &KernelSpec) -> Result<SignedValue> {
    check_length(lambda, spec.n)?;
    let l = l_lambda(lambda, &spec.kappa, &spec.sigma, &spec.tau)?;
    let p1 = SignedValue::from_rational(value_at_ones(lambda, &spec.kappa)?);
    l.div(&p1)
}

/// `1/(Γ(A) Γ(B))`, through the reflection formula when `A + B = 1`.
fn recip_pair(a: &Real, b: &Real) -> SignedValue {
    let sum = a.add(b);
    let on_line = match &sum {
        Real::Exact(q) => *q == int(1),
        Real::Float(x) => (x - 1.0).abs() < LATTICE_TOL,
    };
    if on_line {
        recip_gamma_reflected(b)
    } else {
        recip_gamma(a).mul(&recip_gamma(b))
    }
}

/// The λ-dependent part of `c_λ`:
/// `v_λ ∏_j (-1)^{λ_j} / [Γ(A_j) Γ(B_j)]`, divided by `P_λ(1ⁿ)`.
///
/// Finite for every real `σ, τ`.
pub fn c_lambda_reduced(lambda: &Signature, spec: &KernelSpec) -> Result<SignedValue> {
    check_length(lambda, spec.n)?;
    let mut factors = vec![v_lambda(lambda, &spec.kappa), sign_power(lambda.weight())];
    for (a, b) in denominator_args(lambda, &spec.kappa, &spec.sigma, &spec.tau) {
        factors.push(recip_pair(&a, &b));
    }
    let p1 = SignedValue::from_rational(value_at_ones(lambda, &spec.kappa)?);
    product(&factors).div(&p1)
}

/// `c_λ / c_0` as a meromorphic function of `(σ, τ)`, evaluated factor by
/// factor: each `j` contributes
/// `(-1)^{λ_j} Γ(A_j(0)) Γ(B_j(0)) / [Γ(A_j(λ)) Γ(B_j(λ))]`,
/// which is exactly 1 when `A_j + B_j = 1`.
pub fn c_lambda_ratio(lambda: &Signature, spec: &KernelSpec) -> Result<SignedValue> {
    check_length(lambda, spec.n)?;
    let zero = Signature::zero(spec.n);
    let at_zero = denominator_args(&zero, &spec.kappa, &spec.sigma, &spec.tau);
    let at_lambda = denominator_args(lambda, &spec.kappa, &spec.sigma, &spec.tau);
    let mut factors = vec![v_lambda(lambda, &spec.kappa).div(&v_lambda(&zero, &spec.kappa))?];
    for (((a0, b0), (a, b)), &l) in at_zero.iter().zip(&at_lambda).zip(lambda.parts()) {
        let sum = a0.add(b0);
        let reflected = match &sum {
            Real::Exact(q) => *q == int(1),
            Real::Float(x) => (x - 1.0).abs() < LATTICE_TOL,
        };
        if reflected {
            // sin(π B(λ)) = (-1)^{λ_j} sin(π B(0)), cancelling the sign
            continue;
        }
        factors.push(sign_power(l));
        factors.push(gamma_ratio(a0, a)?);
        factors.push(gamma_ratio(b0, b)?);
    }
    let p1 = SignedValue::from_rational(value_at_ones(lambda, &spec.kappa)?);
    product(&factors).div(&p1)
}
