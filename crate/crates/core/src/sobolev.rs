//! The invariant Hermitian form on finite Jack expansions, its
//! diagonalization, and its degeneration to the `L²` product on the line
//! `s = t`.

use std::collections::BTreeMap;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gammaval::SignedValue;
use crate::jack::jack_cached;
use crate::kernel::{c_lambda, c_lambda_ratio, c_lambda_reduced, KernelSpec, Space};
use crate::oracle::{jack_norm, QuadratureSpec};
use crate::partitions::{signatures_in_box, Signature};
use crate::positivity::st_to_sigma_tau;
use crate::scalar::{Rational, Real, Scalar};
use crate::sympoly::LaurentSymPoly;
use crate::Complex64;

/// `F = Σ f_λ P_λ` with finitely many nonzero `f_λ`.
#[derive(Clone, Debug, PartialEq)]
pub struct JackExpansion<C> {
    pub n: usize,
    pub kappa: Rational,
    pub coefficients: BTreeMap<Signature, C>,
}

impl<C: Clone> JackExpansion<C> {
    pub fn new(n: usize, kappa: Rational) -> Self {
        JackExpansion {
            n,
            kappa,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn with(mut self, lambda: Signature, c: C) -> Self {
        self.coefficients.insert(lambda, c);
        self
    }
}

impl JackExpansion<Rational> {
    pub fn to_complex(&self) -> JackExpansion<Complex64> {
        JackExpansion {
            n: self.n,
            kappa: self.kappa.clone(),
            coefficients: self
                .coefficients
                .iter()
                .map(|(l, c)| (l.clone(), Complex::new(c.as_f64(), 0.0)))
                .collect(),
        }
    }

    /// Back to the monomial basis.
    pub fn to_sym_poly(&self) -> Result<LaurentSymPoly<Rational>> {
        let mut out = LaurentSymPoly::zero(self.n);
        for (l, c) in &self.coefficients {
            let p = jack_cached(l, &self.kappa)?;
            out = out.add(&p.expansion.scale(c))?;
        }
        Ok(out)
    }
}

/// Change of basis `m → P`: repeatedly removes the lexicographically
/// leading orbit with the matching Jack polynomial.
pub fn expand_in_jack(f: &LaurentSymPoly<Rational>, kappa: &Rational) -> Result<JackExpansion<Rational>> {
    let mut rest = f.clone();
    let mut out = JackExpansion::new(f.n(), kappa.clone());
    while let Some((lambda, c)) = rest.leading().map(|(l, c)| (l.clone(), c.clone())) {
        let p = jack_cached(&lambda, kappa)?;
        rest = rest.sub(&p.expansion.scale(&c))?;
        out.coefficients.insert(lambda, c);
    }
    Ok(out)
}

fn check_compatible<C>(f: &JackExpansion<C>, g: &JackExpansion<C>, spec: &KernelSpec) -> Result<()> {
    for e in [f, g] {
        if e.n != spec.n {
            return Err(Error::LengthMismatch {
                expected: spec.n,
                got: e.n,
            });
        }
        if e.kappa != spec.kappa {
            return Err(Error::Domain(format!(
                "expansion uses kappa = {} but the space has kappa = {}",
                e.kappa, spec.kappa
            )));
        }
    }
    Ok(())
}

fn diagonal_sum(
    f: &JackExpansion<Complex64>,
    g: &JackExpansion<Complex64>,
    spec: &KernelSpec,
    quad: &QuadratureSpec,
    eigen: impl Fn(&Signature) -> Result<SignedValue>,
) -> Result<Complex64> {
    check_compatible(f, g, spec)?;
    let mut acc = Complex::new(0.0, 0.0);
    for (lambda, fl) in &f.coefficients {
        let Some(gl) = g.coefficients.get(lambda) else {
            continue;
        };
        let c = eigen(lambda)?;
        let norm = jack_norm(lambda, &spec.kappa, quad)?;
        acc += fl * gl.conj() * c.mul(&norm).to_f64();
    }
    Ok(acc)
}

/// Default quadrature for norms at non-integer κ.
pub fn default_norm_quadrature(n: usize) -> QuadratureSpec {
    match n {
        1 | 2 => QuadratureSpec::extrapolated(n, 1 << 10, 3),
        _ => QuadratureSpec::midpoint(n, 32),
    }
}

/// `⟨F, G⟩ = Σ_λ c_λ f_λ conj(g_λ) ‖P_λ‖²`.
pub fn form_value(
    f: &JackExpansion<Complex64>,
    g: &JackExpansion<Complex64>,
    spec: &KernelSpec,
    quad: &QuadratureSpec,
) -> Result<Complex64> {
    diagonal_sum(f, g, spec, quad, |l| c_lambda(l, spec))
}

/// The form with the λ-independent prefactor of `c_λ` removed; defined for
/// every real `σ, τ`.
pub fn form_value_reduced(
    f: &JackExpansion<Complex64>,
    g: &JackExpansion<Complex64>,
    spec: &KernelSpec,
    quad: &QuadratureSpec,
) -> Result<Complex64> {
    diagonal_sum(f, g, spec, quad, |l| c_lambda_reduced(l, spec))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioEntry {
    pub lambda: Signature,
    pub ratio: SignedValue,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct L2Report {
    pub space: Space,
    pub n: usize,
    pub box_radius: i64,
    pub sigma: Real,
    pub tau: Real,
    /// `c_0` with the prefactor removed; zero when the prefactor carries
    /// the whole profile.
    pub reduced_at_zero: SignedValue,
    pub entries: Vec<RatioEntry>,
    pub max_log_deviation: f64,
    pub passed: bool,
}

pub const L2_TOLERANCE: f64 = 1e-9;

/// Tabulates `r_λ = c_λ / c_0` at `s = t = 0` over the box.
pub fn l2_degeneration_report(space: Space, n: usize, box_radius: i64) -> Result<L2Report> {
    let (sigma, tau) = st_to_sigma_tau(space, n, &Real::int(0), &Real::int(0));
    let spec = KernelSpec::new(space, n, sigma.clone(), tau.clone());
    let reduced_at_zero = c_lambda_reduced(&Signature::zero(n), &spec)?;
    let mut entries = Vec::new();
    let mut max_dev: f64 = 0.0;
    let mut passed = true;
    for lambda in signatures_in_box(n, -box_radius, box_radius) {
        let ratio = c_lambda_ratio(&lambda, &spec)?;
        if !reduced_at_zero.is_zero() {
            let direct = c_lambda_reduced(&lambda, &spec)?.div(&reduced_at_zero)?;
            if !direct.approx_eq(&ratio, L2_TOLERANCE) {
                passed = false;
            }
        }
        if ratio.sign != 1 {
            passed = false;
        } else {
            max_dev = max_dev.max(ratio.log_abs.abs());
        }
        entries.push(RatioEntry { lambda, ratio });
    }
    passed &= max_dev < L2_TOLERANCE;
    Ok(L2Report {
        space,
        n,
        box_radius,
        sigma,
        tau,
        reduced_at_zero,
        entries,
        max_log_deviation: max_dev,
        passed,
    })
}
