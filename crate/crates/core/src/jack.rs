//! Jack polynomials `P_λ(x; κ)`, monic in `m_λ` and triangular in the
//! dominance order, with the Laurent extension to signatures.
//!
//! Construction diagonalizes the Sekiguchi-Stanley operator
//!
//! ```text
//! D = (α/2) Σ x_i² ∂_i² + Σ_{i≠j} x_i²/(x_i - x_j) ∂_i,    α = 1/κ,
//! ```
//!
//! which maps `m_μ` into the span of `m_ν` with `ν ≤ μ`, and solves the
//! resulting triangular eigenproblem for the coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::Signed;
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::partitions::{dominance_leq, partitions_of, Signature};
use crate::scalar::{Rational, Scalar};
use crate::sympoly::{orbit, LaurentSymPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct JackPolynomial<C> {
    pub lambda: Signature,
    pub n: usize,
    pub kappa: Rational,
    pub expansion: LaurentSymPoly<C>,
}

impl<C: Scalar> JackPolynomial<C> {
    /// `P_λ(1, …, 1)`.
    pub fn eval_at_ones(&self) -> C {
        self.expansion.eval_at_ones()
    }

    pub fn coefficient(&self, mu: &Signature) -> C {
        self.expansion.coefficient(mu)
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> JackPolynomial<D> {
        JackPolynomial {
            lambda: self.lambda.clone(),
            n: self.n,
            kappa: self.kappa.clone(),
            expansion: self.expansion.map(f),
        }
    }

    pub fn to_f64(&self) -> JackPolynomial<f64> {
        self.map(|c| c.as_f64())
    }
}

impl<C: Scalar> fmt::Display for JackPolynomial<C> {
    /// Like the polynomial rendering, but the leading monic term is bare:
    /// `m[2,0] + 1*m[1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, c)) in self.expansion.iter_descending().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *l == self.lambda && c.is_one() {
                write!(f, "m[{l}]")?;
            } else {
                write!(f, "{c}*m[{l}]")?;
            }
        }
        Ok(())
    }
}

fn check_kappa(kappa: &Rational) -> Result<()> {
    if !kappa.is_positive() {
        return Err(Error::Unsupported(format!(
            "Jack polynomials need kappa > 0, got {kappa}"
        )));
    }
    Ok(())
}

/// Eigenvalue of `D` on `P_μ`: `(α/2) Σ μ_i(μ_i - 1) + Σ (n - i) μ_i`.
pub fn eigenvalue<C: Scalar>(mu: &Signature, alpha: &C) -> C {
    let n = mu.len() as i64;
    let mut e = C::zero();
    let half = C::from_rational(&crate::scalar::rat(1, 2));
    for (i, &m) in mu.parts().iter().enumerate() {
        let quad = C::from_i64(m * (m - 1));
        e = e + alpha.clone() * half.clone() * quad + C::from_i64((n - 1 - i as i64) * m);
    }
    e
}

/// Coefficients of `D m_μ` on the orbits `m_ν`, keyed by `ν`.
fn apply_operator<C: Scalar>(mu: &Signature, alpha: &C) -> BTreeMap<Vec<i64>, C> {
    let n = mu.len();
    let half = C::from_rational(&crate::scalar::rat(1, 2));
    let mut out: BTreeMap<Vec<i64>, C> = BTreeMap::new();
    let mut add = |v: Vec<i64>, c: C| {
        if v.windows(2).all(|p| p[0] >= p[1]) && !c.is_zero() {
            let e = out.entry(v).or_insert_with(C::zero);
            *e = e.clone() + c;
        }
    };
    for v in orbit(mu.parts()) {
        let diag: i64 = v.iter().map(|&a| a * (a - 1)).sum();
        add(v.clone(), alpha.clone() * half.clone() * C::from_i64(diag));
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (v[i], v[j]);
                if a == b {
                    add(v.clone(), C::from_i64(a));
                } else if a > b {
                    // the partner monomial with v_i, v_j swapped is covered
                    // here: [x^a y^b (a x - b y) + x^b y^a (b x - a y)] / (x - y)
                    let d = (a + b + 1) as usize;
                    let mut c = vec![0i64; d + 1];
                    c[(a + 1) as usize] += a;
                    c[a as usize] -= b;
                    c[(b + 1) as usize] += b;
                    c[b as usize] -= a;
                    let mut q = vec![0i64; d];
                    q[d - 1] = c[d];
                    for k in (1..d).rev() {
                        q[k - 1] = c[k] + q[k];
                    }
                    for (k, &qk) in q.iter().enumerate() {
                        if qk != 0 {
                            let mut w = v.clone();
                            w[i] = k as i64;
                            w[j] = (d - 1 - k) as i64;
                            add(w, C::from_i64(qk));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Partitions of `|λ|` with at most `n` parts dominated by `λ`, in
/// decreasing lexicographic order (so `λ` comes first).
pub fn dominated_partitions(lambda: &Signature) -> Vec<Signature> {
    partitions_of(lambda.weight(), lambda.len())
        .into_iter()
        .filter(|mu| dominance_leq(mu, lambda).unwrap_or(false))
        .collect()
}

/// `P_λ(x; κ)` for a partition `λ` of length `n`.
pub fn jack_p<C: Scalar>(lambda: &Signature, n: usize, kappa: &Rational) -> Result<JackPolynomial<C>> {
    check_kappa(kappa)?;
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    if !lambda.is_partition() {
        return Err(Error::Domain(format!(
            "({lambda}) has negative parts; use jack_laurent"
        )));
    }
    let alpha = C::from_rational(&kappa.recip());
    let basis = dominated_partitions(lambda);
    let e_lambda = eigenvalue(lambda, &alpha);
    let columns: Vec<BTreeMap<Vec<i64>, C>> = basis.iter().map(|mu| apply_operator(mu, &alpha)).collect();
    let mut u: Vec<C> = Vec::with_capacity(basis.len());
    let mut expansion = LaurentSymPoly::zero(n);
    for (k, nu) in basis.iter().enumerate() {
        let value = if k == 0 {
            C::one()
        } else {
            let mut rhs = C::zero();
            for (m, col) in columns.iter().enumerate().take(k) {
                if let Some(d) = col.get(nu.parts()) {
                    rhs = rhs + u[m].clone() * d.clone();
                }
            }
            let pivot = e_lambda.clone() - eigenvalue(nu, &alpha);
            if pivot.is_zero() {
                return Err(Error::EigenvalueCollision {
                    lambda: lambda.clone(),
                    mu: nu.clone(),
                });
            }
            rhs / pivot
        };
        expansion.add_term(nu.clone(), value.clone());
        u.push(value);
    }
    Ok(JackPolynomial {
        lambda: lambda.clone(),
        n,
        kappa: kappa.clone(),
        expansion,
    })
}

/// Laurent Jack polynomial `(x_1 ⋯ x_n)^{λ_n} P_{λ - λ_n}` for any signature.
pub fn jack_laurent<C: Scalar>(lambda: &Signature, n: usize, kappa: &Rational) -> Result<JackPolynomial<C>> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    let m = lambda.last();
    let base = jack_p::<C>(&lambda.shift(-m), n, kappa)?;
    Ok(JackPolynomial {
        lambda: lambda.clone(),
        n,
        kappa: kappa.clone(),
        expansion: base.expansion.shift(m),
    })
}

/// `P_λ(1ⁿ)`.
pub fn eval_at_ones<C: Scalar>(p: &JackPolynomial<C>) -> C {
    p.eval_at_ones()
}

type CacheKey = (Vec<i64>, usize, Rational);

static CACHE: Lazy<RwLock<HashMap<CacheKey, Arc<JackPolynomial<Rational>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Memoized exact `P_λ` for a signature. The cache stores the normalized
/// partition `λ - λ_n`, so all shifts share one entry.
pub fn jack_cached(lambda: &Signature, kappa: &Rational) -> Result<Arc<JackPolynomial<Rational>>> {
    let n = lambda.len();
    let m = lambda.last();
    let base = lambda.shift(-m);
    let key = (base.parts().to_vec(), n, kappa.clone());
    let hit = CACHE.read().expect("jack cache poisoned").get(&key).cloned();
    let p = match hit {
        Some(p) => p,
        None => {
            let p = Arc::new(jack_p::<Rational>(&base, n, kappa)?);
            CACHE
                .write()
                .expect("jack cache poisoned")
                .entry(key)
                .or_insert(p)
                .clone()
        }
    };
    if m == 0 {
        return Ok(p);
    }
    Ok(Arc::new(JackPolynomial {
        lambda: lambda.clone(),
        n,
        kappa: kappa.clone(),
        expansion: p.expansion.shift(m),
    }))
}

/// `P_λ(1ⁿ)` through the cache.
pub fn value_at_ones(lambda: &Signature, kappa: &Rational) -> Result<Rational> {
    let p = jack_cached(&lambda.shift(-lambda.last()), kappa)?;
    Ok(p.eval_at_ones())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::sympoly::{discriminant_power, monomial_sym, parse_sym_poly};

    fn sig(v: &[i64]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }

    fn schur_oracle(lambda: &Signature) -> LaurentSymPoly<Rational> {
        // Jacobi-Trudi: s_λ = det(h_{λ_i - i + j})
        let n = lambda.len();
        let h = |k: i64| -> LaurentSymPoly<Rational> {
            let mut p = LaurentSymPoly::zero(n);
            if k >= 0 {
                for mu in partitions_of(k, n) {
                    p.add_term(mu, int(1));
                }
            }
            p
        };
        let l = lambda.parts();
        let mut total = LaurentSymPoly::zero(n);
        for perm in orbit(&(0..n as i64).collect::<Vec<_>>()) {
            let inversions = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|&(a, b)| perm[a] > perm[b])
                .count();
            let mut term = LaurentSymPoly::one(n);
            for i in 0..n {
                let j = perm[i];
                term = term.multiply(&h(l[i] - i as i64 + j)).unwrap();
            }
            if inversions % 2 == 1 {
                term = term.scale(&int(-1));
            }
            total = total.add(&term).unwrap();
        }
        total
    }

    fn pairing(f: &LaurentSymPoly<Rational>, g: &LaurentSymPoly<Rational>, kappa: &Rational) -> Rational {
        let n = f.n();
        let w = discriminant_power::<Rational>(n, kappa).unwrap();
        let fg = f.to_dense().mul(&g.substitute_inverse().to_dense()).unwrap();
        fg.constant_term_of_product(&w).unwrap()
    }

    #[test]
    fn examples() {
        let p = jack_p::<Rational>(&sig(&[1, 0]), 2, &rat(7, 3)).unwrap();
        assert_eq!(p.expansion, monomial_sym(&sig(&[1, 0]), 2).unwrap());
        let p = jack_p::<Rational>(&sig(&[2, 0]), 2, &int(1)).unwrap();
        assert_eq!(p.expansion, parse_sym_poly("m[2,0] + m[1,1]", 2).unwrap());
        assert_eq!(p.to_string(), "m[2,0] + 1*m[1,1]");
        let p = jack_p::<Rational>(&sig(&[2, 0]), 2, &int(2)).unwrap();
        assert_eq!(p.coefficient(&sig(&[1, 1])), rat(4, 3));
        assert_eq!(p.coefficient(&sig(&[2, 0])), int(1));
    }

    #[test]
    fn laurent_examples() {
        let p = jack_laurent::<Rational>(&sig(&[0, -1]), 2, &rat(1, 2)).unwrap();
        assert_eq!(p.expansion, monomial_sym(&sig(&[0, -1]), 2).unwrap());
        let p = jack_laurent::<Rational>(&sig(&[0, 0]), 2, &int(3)).unwrap();
        assert_eq!(p.expansion, LaurentSymPoly::one(2));
        let p = jack_laurent::<Rational>(&sig(&[1, -1]), 2, &int(1)).unwrap();
        assert_eq!(p.expansion, parse_sym_poly("m[1,-1] + m[0,0]", 2).unwrap());
    }

    #[test]
    fn eval_examples() {
        let one = int(1);
        assert_eq!(
            eval_at_ones(&jack_p::<Rational>(&sig(&[1, 0]), 2, &one).unwrap()),
            int(2)
        );
        assert_eq!(
            eval_at_ones(&jack_p::<Rational>(&sig(&[0, 0, 0]), 3, &one).unwrap()),
            int(1)
        );
        assert_eq!(
            eval_at_ones(&jack_p::<Rational>(&sig(&[2, 0]), 2, &one).unwrap()),
            int(3)
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            jack_p::<Rational>(&sig(&[1, 0]), 2, &int(0)),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            jack_p::<Rational>(&sig(&[1, 0]), 2, &rat(-1, 2)),
            Err(Error::Unsupported(_))
        ));
        assert!(jack_p::<Rational>(&sig(&[1, -1]), 2, &int(1)).is_err());
        assert!(jack_p::<Rational>(&sig(&[1, 0]), 3, &int(1)).is_err());
    }

    #[test]
    fn diagonal_of_operator_is_eigenvalue() {
        for kappa in [rat(1, 2), int(1), int(3)] {
            let alpha = kappa.recip();
            for n in 1..=4 {
                for w in 0..=6 {
                    for mu in partitions_of(w, n) {
                        let col = apply_operator(&mu, &alpha);
                        assert_eq!(
                            col.get(mu.parts()).cloned().unwrap_or_default(),
                            eigenvalue(&mu, &alpha)
                        );
                        for nu in col.keys() {
                            let nu = Signature::new(nu.clone()).unwrap();
                            assert!(dominance_leq(&nu, &mu).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triangular_and_monic() {
        for kappa in [rat(1, 2), int(1), int(2), rat(1, 3), int(3)] {
            for n in 1..=4 {
                for w in 0..=6 {
                    for lambda in partitions_of(w, n) {
                        let p = jack_p::<Rational>(&lambda, n, &kappa).unwrap();
                        assert_eq!(p.coefficient(&lambda), int(1));
                        for mu in p.expansion.terms().keys() {
                            assert!(dominance_leq(mu, &lambda).unwrap(), "{mu} in P({lambda})");
                        }
                        assert!(p.eval_at_ones().is_positive());
                    }
                }
            }
        }
    }

    #[test]
    fn schur_at_kappa_one() {
        for n in 1..=3 {
            for w in 0..=5 {
                for lambda in partitions_of(w, n) {
                    let p = jack_p::<Rational>(&lambda, n, &int(1)).unwrap();
                    assert_eq!(p.expansion, schur_oracle(&lambda), "λ = {lambda}");
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_at_integer_kappa() {
        for kappa in [int(1), int(2)] {
            for n in 2..=3 {
                for w in 0..=4 {
                    // lexicographically increasing order, m-basis
                    let mut basis = partitions_of(w, n);
                    basis.reverse();
                    let mut done: Vec<(LaurentSymPoly<Rational>, Rational)> = Vec::new();
                    for lambda in &basis {
                        let mut p = monomial_sym::<Rational>(lambda, n).unwrap();
                        for (q, norm) in &done {
                            let c = pairing(&p, q, &kappa) / norm;
                            p = p.sub(&q.scale(&c)).unwrap();
                        }
                        let jack = jack_p::<Rational>(lambda, n, &kappa).unwrap();
                        assert_eq!(p, jack.expansion, "λ = {lambda}, κ = {kappa}");
                        let norm = pairing(&p, &p, &kappa);
                        done.push((p, norm));
                    }
                }
            }
        }
    }

    #[test]
    fn shift_identity() {
        for kappa in [rat(1, 2), int(2)] {
            for n in 1..=3 {
                for w in 0..=4 {
                    for lambda in partitions_of(w, n) {
                        let p = jack_p::<Rational>(&lambda, n, &kappa).unwrap();
                        let q = jack_p::<Rational>(&lambda.shift(1), n, &kappa).unwrap();
                        assert_eq!(q.expansion, p.expansion.shift(1));
                        let l = jack_laurent::<Rational>(&lambda.shift(-2), n, &kappa).unwrap();
                        let l1 = jack_laurent::<Rational>(&lambda.shift(-1), n, &kappa).unwrap();
                        assert_eq!(l1.expansion, l.expansion.shift(1));
                    }
                }
            }
        }
    }

    #[test]
    fn cache_is_transparent() {
        let kappa = rat(1, 2);
        let lambda = sig(&[3, 1, -1]);
        let a = jack_cached(&lambda, &kappa).unwrap();
        let b = jack_laurent::<Rational>(&lambda, 3, &kappa).unwrap();
        assert_eq!(*a, b);
        let c = jack_cached(&lambda, &kappa).unwrap();
        assert_eq!(a, c);
        assert_eq!(value_at_ones(&lambda, &kappa).unwrap(), b.eval_at_ones());
    }

    #[test]
    fn float_instantiation_matches_exact() {
        let lambda = sig(&[3, 2, 0]);
        let exact = jack_p::<Rational>(&lambda, 3, &rat(1, 2)).unwrap();
        let float = jack_p::<f64>(&lambda, 3, &rat(1, 2)).unwrap();
        for (mu, c) in exact.expansion.terms() {
            assert!((float.coefficient(mu) - c.as_f64()).abs() < 1e-12);
        }
    }
}
