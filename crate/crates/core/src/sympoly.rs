//! Sparse Laurent polynomials in `n` variables, their symmetric
//! (orbit-compressed) counterparts, and constant-term extraction.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::partitions::Signature;
use crate::scalar::{parse_rational, Rational, Scalar};

/// `Σ c_v x^v` over arbitrary integer exponent vectors `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<C> {
    n: usize,
    terms: BTreeMap<Vec<i64>, C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], C::one())
    }

    pub fn monomial(exponent: Vec<i64>, c: C) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &[i64]) -> C {
        self.terms.get(exponent).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, c: C) {
        debug_assert_eq!(exponent.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (v, c) in &self.terms {
            out.add_term(v.clone(), c.clone() * k.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = Self::zero(self.n);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let w = u.iter().zip(v).map(|(x, y)| x + y).collect();
                out.add_term(w, a.clone() * b.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self).expect("same n");
        }
        acc
    }

    /// Coefficient of `x^0`, i.e. `(2π)^{-n} ∫_{T^n} f dφ`.
    pub fn constant_term(&self) -> C {
        self.coefficient(&vec![0; self.n])
    }

    /// Constant term of `self · other` without forming the product.
    pub fn constant_term_of_product(&self, other: &Self) -> Result<C> {
        self.check_n(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = C::zero();
        let mut neg = vec![0i64; self.n];
        for (v, a) in &small.terms {
            for (slot, e) in neg.iter_mut().zip(v) {
                *slot = -e;
            }
            if let Some(b) = large.terms.get(&neg) {
                acc = acc + a.clone() * b.clone();
            }
        }
        Ok(acc)
    }

    /// `f(x_1⁻¹, …, x_n⁻¹)`.
    pub fn substitute_inverse(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (v, c) in &self.terms {
            out.add_term(v.iter().map(|e| -e).collect(), c.clone());
        }
        out
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        let mut out = LaurentPoly::zero(self.n);
        for (v, c) in &self.terms {
            out.add_term(v.clone(), f(c));
        }
        out
    }

    /// Range of exponents over all variables, `None` for the zero polynomial.
    pub fn exponent_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().flatten();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), &e| (lo.min(e), hi.max(e))))
    }

    pub fn eval<F: Float>(&self, x: &[Complex<F>]) -> Complex<F> {
        assert_eq!(x.len(), self.n);
        let mut acc = Complex::new(F::zero(), F::zero());
        for (v, c) in &self.terms {
            let mut t = Complex::new(F::from(c.as_f64()).unwrap(), F::zero());
            for (xi, &e) in x.iter().zip(v) {
                t = t * xi.powi(e as i32);
            }
            acc = acc + t;
        }
        acc
    }

    /// Orbit-compresses a polynomial known to be symmetric.
    pub fn to_symmetric(&self) -> Result<LaurentSymPoly<C>> {
        let mut out = LaurentSymPoly::zero(self.n);
        for (v, c) in &self.terms {
            if v.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Signature::new(v.clone())?, c.clone());
            }
        }
        if out.to_dense().len() != self.len() {
            return Err(Error::Domain("polynomial is not symmetric".into()));
        }
        Ok(out)
    }
}

impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (v, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*x^(")?;
            for (j, e) in v.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// All distinct permutations of `parts`.
pub fn orbit(parts: &[i64]) -> Vec<Vec<i64>> {
    let mut v = parts.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // lexicographic next-permutation walk over the multiset
    loop {
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("pivot");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// Symmetric Laurent polynomial `Σ c_λ m_λ`, keyed by orbit representative.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSymPoly<C> {
    n: usize,
    terms: BTreeMap<Signature, C>,
}

impl<C: Scalar> LaurentSymPoly<C> {
    pub fn zero(n: usize) -> Self {
        LaurentSymPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Signature::zero(n), c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Signature, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Signature) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, lambda: Signature, c: C) {
        debug_assert_eq!(lambda.len(), self.n);
        if c.is_zero() {
            return;
        }
        let v = self.coefficient(&lambda) + c;
        if v.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, v);
        }
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.clone() * k.clone());
        }
        out
    }

    /// Exact product, re-collected into orbit representatives.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let dense = self.to_dense();
        let mut out = Self::zero(self.n);
        // only products landing on a weakly decreasing exponent contribute to
        // the coefficient of the corresponding m_μ
        for (v, a) in dense.terms() {
            for (mu, b) in &other.terms {
                for w in orbit(mu.parts()) {
                    let e: Vec<i64> = v.iter().zip(&w).map(|(x, y)| x + y).collect();
                    if e.windows(2).all(|p| p[0] >= p[1]) {
                        out.add_term(Signature::new(e)?, a.clone() * b.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn substitute_inverse(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (l, c) in &self.terms {
            out.add_term(l.dual(), c.clone());
        }
        out
    }

    /// Multiplies by `(x_1 ⋯ x_n)^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (l, c) in &self.terms {
            out.add_term(l.shift(k), c.clone());
        }
        out
    }

    pub fn to_dense(&self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero(self.n);
        for (l, c) in &self.terms {
            for v in orbit(l.parts()) {
                out.add_term(v, c.clone());
            }
        }
        out
    }

    /// Value at `x_1 = ⋯ = x_n = 1`.
    pub fn eval_at_ones(&self) -> C {
        self.terms.iter().fold(C::zero(), |acc, (l, c)| {
            acc + c.clone() * C::from_i64(l.orbit_size() as i64)
        })
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Signature::zero(self.n))
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> LaurentSymPoly<D> {
        let mut out = LaurentSymPoly::zero(self.n);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    /// Terms from the largest orbit representative down.
    pub fn iter_descending(&self) -> impl Iterator<Item = (&Signature, &C)> {
        self.terms.iter().rev()
    }

    /// Lexicographically largest orbit in the support.
    pub fn leading(&self) -> Option<(&Signature, &C)> {
        self.terms.iter().next_back()
    }
}

/// `m_λ` in `n` variables.
pub fn monomial_sym<C: Scalar>(lambda: &Signature, n: usize) -> Result<LaurentSymPoly<C>> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    let mut p = LaurentSymPoly::zero(n);
    p.add_term(lambda.clone(), C::one());
    Ok(p)
}

pub fn constant_term<C: Scalar>(f: &LaurentPoly<C>) -> C {
    f.constant_term()
}

/// `∏_{k<l} [(x_k - x_l)(x_k⁻¹ - x_l⁻¹)]^κ`, the torus weight
/// `∏ |x_k - x_l|^{2κ}` as a Laurent polynomial.
pub fn discriminant_power<C: Scalar>(n: usize, kappa: &Rational) -> Result<LaurentPoly<C>> {
    use num_traits::{Signed, ToPrimitive};
    if !kappa.is_integer() || !kappa.is_positive() {
        return Err(Error::Unsupported(format!(
            "discriminant power needs a positive integer exponent, got {kappa}"
        )));
    }
    let k = kappa
        .to_integer()
        .to_u32()
        .ok_or_else(|| Error::Unsupported(format!("exponent {kappa} too large")))?;
    let mut acc = LaurentPoly::one(n);
    for a in 0..n {
        for b in a + 1..n {
            // 2 - x_a/x_b - x_b/x_a
            let mut f = LaurentPoly::monomial(vec![0; n], C::from_i64(2));
            let mut e = vec![0; n];
            e[a] = 1;
            e[b] = -1;
            f.add_term(e.clone(), -C::one());
            e[a] = -1;
            e[b] = 1;
            f.add_term(e, -C::one());
            acc = acc.mul(&f.pow(k))?;
        }
    }
    Ok(acc)
}

impl<C: Scalar> fmt::Display for LaurentSymPoly<C> {
    /// Canonical rendering: `c*m[λ]` terms joined by ` + `, orbit
    /// representatives in descending lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.iter_descending().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*m[{l}]")?;
        }
        Ok(())
    }
}

/// Parses the canonical rendering back, e.g. `1 + 2*m[1]` or
/// `m[2,0] + -1/2*m[1,1]`. Short signatures are padded with zeros.
pub fn parse_sym_poly(s: &str, n: usize) -> Result<LaurentSymPoly<Rational>> {
    let mut out = LaurentSymPoly::zero(n);
    let mut depth = 0i32;
    let mut pieces = Vec::new();
    let mut cur = String::new();
    let bytes: Vec<char> = s.chars().collect();
    for (i, &ch) in bytes.iter().enumerate() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        let binary_minus = ch == '-'
            && depth == 0
            && !cur.trim().is_empty()
            && !cur.trim_end().ends_with('*')
            && !cur.trim_end().ends_with('/')
            && i > 0;
        if depth == 0 && (ch == '+' || binary_minus) {
            pieces.push(std::mem::take(&mut cur));
            if binary_minus {
                cur.push('-');
            }
            continue;
        }
        cur.push(ch);
    }
    pieces.push(cur);
    for piece in pieces {
        let t: String = piece.split_whitespace().collect();
        let t = t.as_str();
        if t.is_empty() {
            return Err(Error::Parse(format!("empty term in {s:?}")));
        }
        let (coef, lambda) = match t.find("m[") {
            Some(pos) => {
                let head = t[..pos].trim().trim_end_matches('*').trim();
                let coef = match head {
                    "" | "+" => Rational::from_i64(1),
                    "-" => Rational::from_i64(-1),
                    h => parse_rational(h)?,
                };
                let body = t[pos + 2..]
                    .strip_suffix(']')
                    .ok_or_else(|| Error::Parse(format!("unterminated m[...] in {t:?}")))?;
                let mut parts = body
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if parts.len() > n {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        got: parts.len(),
                    });
                }
                parts.resize(n, 0);
                (coef, Signature::new(parts)?)
            }
            None => (parse_rational(t)?, Signature::zero(n)),
        };
        out.add_term(lambda, coef);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use proptest::prelude::*;

    fn sig(p: &[i64]) -> Signature {
        Signature::new(p.to_vec()).unwrap()
    }

    fn m(p: &[i64]) -> LaurentSymPoly<Rational> {
        monomial_sym(&sig(p), p.len()).unwrap()
    }

    #[test]
    fn monomial_examples() {
        let d = m(&[2, 0]).to_dense();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coefficient(&[2, 0]), int(1));
        assert_eq!(d.coefficient(&[0, 2]), int(1));
        assert_eq!(m(&[1, 1]).to_dense().len(), 1);
        let d = m(&[1, 0, 0]).to_dense();
        assert_eq!(d.len(), 3);
        assert!(monomial_sym::<Rational>(&sig(&[1, 0]), 3).is_err());
    }

    #[test]
    fn multiply_examples() {
        let sq = m(&[1, 0]).multiply(&m(&[1, 0])).unwrap();
        let expected = m(&[2, 0]).add(&m(&[1, 1]).scale(&int(2))).unwrap();
        assert_eq!(sq, expected);
        let f = m(&[2, 1]).add(&m(&[0, -3]).scale(&rat(1, 3))).unwrap();
        assert_eq!(f.multiply(&LaurentSymPoly::one(2)).unwrap(), f);
        assert_eq!(m(&[1, 1]).multiply(&m(&[-1, -1])).unwrap(), LaurentSymPoly::one(2));
        assert!(m(&[1, 0]).multiply(&m(&[1])).is_err());
    }

    #[test]
    fn multiply_matches_dense_product() {
        let f = m(&[2, 1, 0]).add(&m(&[1, 1, -1])).unwrap();
        let g = m(&[1, 0, 0]).scale(&rat(-2, 5)).add(&m(&[0, 0, -2])).unwrap();
        let sym = f.multiply(&g).unwrap().to_dense();
        let dense = f.to_dense().mul(&g.to_dense()).unwrap();
        assert_eq!(sym, dense);
    }

    #[test]
    fn constant_term_examples() {
        let one = LaurentPoly::<Rational>::monomial(vec![0, 0], int(2));
        let mut f = one.clone();
        f.add_term(vec![1, -1], int(-1));
        f.add_term(vec![-1, 1], int(-1));
        assert_eq!(constant_term(&f), int(2));
        assert_eq!(constant_term(&LaurentPoly::monomial(vec![2, -1], int(1))), int(0));
        let mut a = LaurentPoly::<Rational>::zero(2);
        a.add_term(vec![1, 0], int(1));
        a.add_term(vec![0, 1], int(-1));
        let b = a.substitute_inverse();
        let prod = a.mul(&b).unwrap();
        assert_eq!(constant_term(&prod), int(2));
        assert_eq!(prod, f);
        assert_eq!(a.constant_term_of_product(&b).unwrap(), int(2));
    }

    #[test]
    fn discriminant_examples() {
        let d = discriminant_power::<Rational>(2, &int(1)).unwrap();
        let mut expected = LaurentPoly::monomial(vec![0, 0], int(2));
        expected.add_term(vec![1, -1], int(-1));
        expected.add_term(vec![-1, 1], int(-1));
        assert_eq!(d, expected);
        assert_eq!(discriminant_power::<Rational>(1, &int(3)).unwrap(), LaurentPoly::one(1));
        let d2 = discriminant_power::<Rational>(2, &int(2)).unwrap();
        assert_eq!(d2.constant_term(), int(6));
        assert!(matches!(
            discriminant_power::<Rational>(2, &rat(1, 2)),
            Err(Error::Unsupported(_))
        ));
        assert!(discriminant_power::<Rational>(2, &int(0)).is_err());
    }

    #[test]
    fn discriminant_is_symmetric() {
        let d = discriminant_power::<Rational>(3, &int(2)).unwrap();
        let s = d.to_symmetric().unwrap();
        assert_eq!(s.to_dense(), d);
        assert_eq!(d.substitute_inverse(), d);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(m(&[2, 0]).substitute_inverse(), m(&[0, -2]));
        assert_eq!(
            LaurentSymPoly::<Rational>::one(3).substitute_inverse(),
            LaurentSymPoly::one(3)
        );
    }

    #[test]
    fn canonical_rendering_round_trips() {
        let f = m(&[2, 0])
            .add(&m(&[1, 1]).scale(&rat(-4, 3)))
            .unwrap()
            .add(&LaurentSymPoly::constant(2, int(5)))
            .unwrap();
        let text = f.to_string();
        assert_eq!(text, "1*m[2,0] + -4/3*m[1,1] + 5*m[0,0]");
        assert_eq!(parse_sym_poly(&text, 2).unwrap(), f);
        let g = parse_sym_poly("1 + 2*m[1]", 1).unwrap();
        assert_eq!(g.coefficient(&sig(&[0])), int(1));
        assert_eq!(g.coefficient(&sig(&[1])), int(2));
        let h = parse_sym_poly("m[1] - 3*m[0,-1]", 2).unwrap();
        assert_eq!(h.coefficient(&sig(&[1, 0])), int(1));
        assert_eq!(h.coefficient(&sig(&[0, -1])), int(-3));
        assert!(parse_sym_poly("m[1,2]", 2).is_err());
        assert!(parse_sym_poly("2*m[1,0,0]", 2).is_err());
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(orbit(&[1, 0, 0]).len(), 3);
        assert_eq!(orbit(&[2, 1, 0]).len(), 6);
        assert_eq!(orbit(&[-1, -1]).len(), 1);
    }

    fn arb_sym(n: usize) -> impl Strategy<Value = LaurentSymPoly<Rational>> {
        prop::collection::vec((prop::collection::vec(-2i64..=3, n), -5i64..=5, 1i64..=3), 0..4).prop_map(move |terms| {
            let mut p = LaurentSymPoly::zero(n);
            for (parts, a, b) in terms {
                p.add_term(Signature::sorted(parts), rat(a, b));
            }
            p
        })
    }

    fn arb_triple() -> impl Strategy<
        Value = (
            LaurentSymPoly<Rational>,
            LaurentSymPoly<Rational>,
            LaurentSymPoly<Rational>,
        ),
    > {
        (1usize..=4).prop_flat_map(|n| (arb_sym(n), arb_sym(n), arb_sym(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_axioms((f, g, h) in arb_triple()) {
            let fg_h = f.multiply(&g).unwrap().multiply(&h).unwrap();
            let f_gh = f.multiply(&g.multiply(&h).unwrap()).unwrap();
            prop_assert_eq!(fg_h, f_gh);
            let left = f.multiply(&g.add(&h).unwrap()).unwrap();
            let right = f.multiply(&g).unwrap().add(&f.multiply(&h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(f.multiply(&g).unwrap(), g.multiply(&f).unwrap());
        }

        #[test]
        fn inverse_is_involutive(f in (1usize..=4).prop_flat_map(arb_sym)) {
            prop_assert_eq!(f.substitute_inverse().substitute_inverse(), f.clone());
            prop_assert_eq!(f.substitute_inverse().to_dense(), f.to_dense().substitute_inverse());
        }

        #[test]
        fn pairing_is_hermitian((f, g, _h) in arb_triple(), kappa in 1i64..=2) {
            let n = f.n();
            let d = discriminant_power::<Rational>(n, &int(kappa)).unwrap();
            let pair = |a: &LaurentSymPoly<Rational>, b: &LaurentSymPoly<Rational>| {
                a.to_dense()
                    .mul(&b.substitute_inverse().to_dense())
                    .unwrap()
                    .constant_term_of_product(&d)
                    .unwrap()
            };
            prop_assert_eq!(pair(&f, &g), pair(&g, &f));
        }

        #[test]
        fn one_variable_pairing_is_coefficient_dot(f in arb_sym(1), g in arb_sym(1)) {
            let ct = f.multiply(&g.substitute_inverse()).unwrap().constant_term();
            let dot = f.terms().iter().fold(int(0), |acc, (l, c)| acc + c * g.coefficient(l));
            prop_assert_eq!(ct, dot);
        }

        #[test]
        fn rendering_round_trips(f in (1usize..=3).prop_flat_map(arb_sym)) {
            prop_assert_eq!(parse_sym_poly(&f.to_string(), f.n()).unwrap(), f);
        }
    }
}
