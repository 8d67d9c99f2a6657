//! Definiteness of the invariant Hermitian forms: closed-form predicates in
//! `(σ, τ)`, their `(s, t)` windows, and brute-force sign scans over
//! signature boxes.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{c_lambda_reduced, KernelSpec, Space};
use crate::partitions::{signatures_in_box, Signature};
use crate::scalar::{format_rational, int, rat, Rational, Real};

/// `(s, t) ↦ (σ, τ)`: `σ = s - n/2` on `U(n)`, `σ = s - (n+1)/4` on
/// `U(n)/O(n)`, `σ = s - n + 1/2` on `U(2n)/Sp(n)`, and likewise for `τ`.
pub fn st_to_sigma_tau(space: Space, n: usize, s: &Real, t: &Real) -> (Real, Real) {
    let n = n as i64;
    let shift = match space {
        Space::UN => rat(-n, 2),
        Space::UO => rat(-(n + 1), 4),
        Space::USp => rat(1 - 2 * n, 2),
    };
    (s.add_rational(&shift), t.add_rational(&shift))
}

fn check_hypotheses(space: Space, n: usize, sigma: &Real, tau: &Real) -> Result<()> {
    if n == 0 {
        return Err(Error::Inapplicable("n must be positive".into()));
    }
    if n == 1 && space != Space::UN {
        return Err(Error::Inapplicable(format!("{space} needs n > 1")));
    }
    let lattice = |x: &Real| match space {
        Space::UO => x.scale(2).is_integer(),
        _ => x.is_integer(),
    };
    if lattice(sigma) || lattice(tau) {
        let what = if space == Space::UO { "2σ, 2τ" } else { "σ, τ" };
        return Err(Error::Inapplicable(format!(
            "{what} must avoid the integers (σ = {sigma}, τ = {tau})"
        )));
    }
    Ok(())
}

/// The floor-equality criterion for definiteness:
/// `⌊-τ⌋ = ⌊σ+n⌋` on `U(n)`, `⌊-2τ-n-1⌋ = ⌊2σ⌋` on `U(n)/O(n)`,
/// `⌊-τ⌋ = ⌊σ+2n-1⌋` on `U(2n)/Sp(n)`.
pub fn definite_predicate(space: Space, n: usize, sigma: &Real, tau: &Real) -> Result<bool> {
    check_hypotheses(space, n, sigma, tau)?;
    let ni = n as i64;
    Ok(match space {
        Space::UN => tau.neg().floor() == sigma.add_int(ni).floor(),
        Space::UO => tau.scale(-2).add_int(-ni - 1).floor() == sigma.scale(2).floor(),
        Space::USp => tau.neg().floor() == sigma.add_int(2 * ni - 1).floor(),
    })
}

/// Window `j` for `s` is `((step·j + offset)/4, (step·j + offset + step)/4)`;
/// the windows tile the line.
fn windows(space: Space, n: usize) -> (i64, i64) {
    match (space, n % 2 == 1) {
        (Space::UN, true) | (Space::USp, _) => (4, -2),
        (Space::UN, false) => (4, 0),
        (Space::UO, true) => (2, 0),
        (Space::UO, false) => (2, -1),
    }
}

/// Definiteness as an `(s, t)` window condition: `s` and `-t` lie in the
/// same window, where the windows are
///
/// * `U(n)`, `n` odd, and `U(2n)/Sp(n)`: `|s - j| < 1/2`, `|t + j| < 1/2`;
/// * `U(n)`, `n` even: `s ∈ (j, j+1)`, `t ∈ (-j-1, -j)`;
/// * `U(n)/O(n)`, `n` odd: `s ∈ (j/2, j/2+1/2)`, `t ∈ (-j/2-1/2, -j/2)`;
/// * `U(n)/O(n)`, `n` even: `|s - j/2| < 1/4`, `|t + j/2| < 1/4`.
pub fn window_predicate(space: Space, n: usize, s: &Real, t: &Real) -> Result<bool> {
    let (sigma, tau) = st_to_sigma_tau(space, n, s, t);
    check_hypotheses(space, n, &sigma, &tau)?;
    let (step, offset) = windows(space, n);
    let index = |x: &Real| {
        let q = x.scale(4).add_int(-offset);
        match q {
            Real::Exact(q) => (q / int(step)).floor(),
            Real::Float(v) => Rational::from_integer(((v / step as f64).floor() as i64).into()),
        }
    };
    Ok(index(s) == index(&t.neg()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
}

impl Verdict {
    pub fn is_definite(self) -> bool {
        matches!(self, Verdict::PositiveDefinite | Verdict::NegativeDefinite)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PositiveDefinite => "positive-definite",
            Verdict::NegativeDefinite => "negative-definite",
            Verdict::Indefinite => "indefinite",
            Verdict::Degenerate => "degenerate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub reference: Signature,
    pub reference_sign: i8,
    pub other: Signature,
    pub other_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub spec: KernelSpec,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Parts range over `[-box_radius, box_radius]`.
    pub box_radius: i64,
    pub count: usize,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    /// Smallest box radius in which both signs (or a zero) already occur.
    pub min_witness_radius: Option<i64>,
}

/// Signs of `c_λ` for every signature in the box `[-M, M]ⁿ`, via the
/// prefactor-free reduced eigenvalue.
pub fn scan_signs(spec: &KernelSpec, box_radius: i64) -> Result<Vec<(Signature, i8)>> {
    let sigs = signatures_in_box(spec.n, -box_radius, box_radius);
    sigs.into_par_iter()
        .map(|l| c_lambda_reduced(&l, spec).map(|v| (l, v.sign)))
        .collect()
}

pub fn scan_sign_constancy(spec: &KernelSpec, box_radius: i64) -> Result<ScanReport> {
    let signs = scan_signs(spec, box_radius)?;
    let count = signs.len();
    let positive = signs.iter().filter(|(_, s)| *s > 0).count();
    let negative = signs.iter().filter(|(_, s)| *s < 0).count();
    let zero = count - positive - negative;

    // small signatures first; ties broken by descending lexicographic order
    let mut ordered: Vec<&(Signature, i8)> = signs.iter().collect();
    ordered.sort_by(|a, b| a.0.radius().cmp(&b.0.radius()).then_with(|| b.0.cmp(&a.0)));

    let verdict = if zero > 0 {
        Verdict::Degenerate
    } else if negative == 0 {
        Verdict::PositiveDefinite
    } else if positive == 0 {
        Verdict::NegativeDefinite
    } else {
        Verdict::Indefinite
    };

    let (witness, min_witness_radius) = match (verdict, ordered.first()) {
        (Verdict::Indefinite, Some(&(r, rs))) | (Verdict::Degenerate, Some(&(r, rs))) => {
            let other = if *rs == 0 {
                ordered.iter().find(|(_, s)| *s != 0).or(ordered.get(1))
            } else if verdict == Verdict::Degenerate {
                ordered.iter().find(|(_, s)| *s == 0)
            } else {
                ordered.iter().find(|(_, s)| *s == -rs)
            };
            match other {
                Some(&&(ref o, os)) => {
                    let first_change = ordered.iter().find(|(_, s)| *s != *rs).map(|(l, _)| l.radius());
                    (
                        Some(Witness {
                            reference: r.clone(),
                            reference_sign: *rs,
                            other: o.clone(),
                            other_sign: os,
                        }),
                        first_change,
                    )
                }
                None => (None, None),
            }
        }
        _ => (None, None),
    };

    Ok(ScanReport {
        spec: spec.clone(),
        verdict,
        witness,
        box_radius,
        count,
        positive,
        negative,
        zero,
        min_witness_radius,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionCell {
    pub s: Real,
    pub t: Real,
    /// `None` where the predicate hypotheses fail.
    pub predicate: Option<bool>,
    pub scan: Option<Verdict>,
}

impl RegionCell {
    /// Both columns present and in agreement about definiteness.
    pub fn agrees(&self) -> Option<bool> {
        match (self.predicate, self.scan) {
            (Some(p), Some(v)) => Some(p == v.is_definite()),
            _ => None,
        }
    }
}

/// Cell centres `lo + step/2 + k·step` inside `[lo, hi]`.
pub fn grid_points(lo: &Rational, hi: &Rational, step: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut x = lo + step / int(2);
    while &x < hi {
        out.push(x.clone());
        x += step;
    }
    out
}

/// Predicate and scan verdicts on the grid of cell centres, so that points
/// sit half a step off the excluded lattices.
pub fn region_grid(
    space: Space,
    n: usize,
    s_range: (Rational, Rational),
    t_range: (Rational, Rational),
    step: &Rational,
    box_radius: i64,
) -> Result<Vec<RegionCell>> {
    if step <= &int(0) {
        return Err(Error::Domain("step must be positive".into()));
    }
    let ss = grid_points(&s_range.0, &s_range.1, step);
    let ts = grid_points(&t_range.0, &t_range.1, step);
    let mut cells = Vec::with_capacity(ss.len() * ts.len());
    for s in &ss {
        for t in &ts {
            let (s, t) = (Real::Exact(s.clone()), Real::Exact(t.clone()));
            let (sigma, tau) = st_to_sigma_tau(space, n, &s, &t);
            let (predicate, scan) = match definite_predicate(space, n, &sigma, &tau) {
                Ok(p) => {
                    let spec = KernelSpec::new(space, n, sigma, tau);
                    (Some(p), Some(scan_sign_constancy(&spec, box_radius)?.verdict))
                }
                Err(Error::Inapplicable(_)) => (None, None),
                Err(e) => return Err(e),
            };
            cells.push(RegionCell { s, t, predicate, scan });
        }
    }
    Ok(cells)
}

/// CSV with columns `s,t,predicate,scan`.
pub fn region_csv(cells: &[RegionCell]) -> String {
    let mut out = String::from("s,t,predicate,scan\n");
    for c in cells {
        let fmt_real = |x: &Real| match x {
            Real::Exact(q) => format_rational(q),
            Real::Float(v) => v.to_string(),
        };
        let p = c.predicate.map_or("inapplicable".to_string(), |p| {
            if p { "definite" } else { "indefinite" }.to_string()
        });
        let v = c.scan.map_or("inapplicable".to_string(), |v| v.to_string());
        out.push_str(&format!("{},{},{},{}\n", fmt_real(&c.s), fmt_real(&c.t), p, v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::c_lambda;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Real {
        Real::Exact(rat(p, q))
    }

    #[test]
    fn reparametrization_examples() {
        assert_eq!(
            st_to_sigma_tau(Space::UN, 1, &Real::int(0), &Real::int(0)),
            (r(-1, 2), r(-1, 2))
        );
        assert_eq!(
            st_to_sigma_tau(Space::UO, 3, &Real::int(0), &Real::int(0)),
            (Real::int(-1), Real::int(-1))
        );
        assert_eq!(
            st_to_sigma_tau(Space::USp, 2, &r(1, 4), &Real::int(0)),
            (r(-5, 4), r(-3, 2))
        );
    }

    #[test]
    fn predicate_examples() {
        assert!(definite_predicate(Space::UN, 1, &r(-1, 2), &r(-1, 2)).unwrap());
        assert!(!definite_predicate(Space::UN, 1, &r(1, 2), &r(1, 2)).unwrap());
        // ⌊-τ⌋ = ⌊1.4⌋ = 1 and ⌊σ + 3⌋ = ⌊1.6⌋ = 1
        let x = Real::Float(-1.5 + 0.1);
        assert!(definite_predicate(Space::USp, 2, &x, &x).unwrap());
        assert!(matches!(
            definite_predicate(Space::UN, 2, &Real::int(1), &r(1, 3)),
            Err(Error::Inapplicable(_))
        ));
        assert!(matches!(
            definite_predicate(Space::UO, 2, &r(1, 2), &r(1, 3)),
            Err(Error::Inapplicable(_))
        ));
        assert!(matches!(
            definite_predicate(Space::USp, 1, &r(1, 3), &r(1, 3)),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn window_examples() {
        assert!(window_predicate(Space::UN, 1, &Real::Float(0.1), &Real::Float(0.1)).unwrap());
        assert!(window_predicate(Space::UN, 2, &Real::Float(-0.5), &Real::Float(0.5)).unwrap());
        assert!(!window_predicate(Space::USp, 2, &Real::Float(0.6), &Real::Float(0.4)).unwrap());
        let (sg, tu) = st_to_sigma_tau(Space::USp, 2, &Real::Float(0.6), &Real::Float(0.4));
        assert!(!definite_predicate(Space::USp, 2, &sg, &tu).unwrap());
    }

    #[test]
    fn scan_examples() {
        let spec = KernelSpec::new(Space::UN, 1, r(-1, 2), r(-1, 2));
        let rep = scan_sign_constancy(&spec, 6).unwrap();
        assert_eq!(rep.verdict, Verdict::PositiveDefinite);
        assert_eq!((rep.count, rep.positive), (13, 13));
        assert!(rep.witness.is_none());

        let spec = KernelSpec::new(Space::UN, 1, r(1, 2), r(1, 2));
        let rep = scan_sign_constancy(&spec, 6).unwrap();
        assert_eq!(rep.verdict, Verdict::Indefinite);
        let w = rep.witness.unwrap();
        assert_eq!(w.reference, Signature::new(vec![0]).unwrap());
        assert_eq!(w.other, Signature::new(vec![1]).unwrap());
        assert_eq!((w.reference_sign, w.other_sign), (1, -1));
        assert_eq!(rep.min_witness_radius, Some(1));

        let spec = KernelSpec::new(Space::UO, 2, r(-3, 4), r(-3, 4));
        let rep = scan_sign_constancy(&spec, 4).unwrap();
        let pred = definite_predicate(Space::UO, 2, &r(-3, 4), &r(-3, 4)).unwrap();
        assert_eq!(rep.verdict.is_definite(), pred);
    }

    #[test]
    fn degenerate_on_lattice() {
        let spec = KernelSpec::new(Space::UN, 1, Real::int(1), r(1, 2));
        let rep = scan_sign_constancy(&spec, 3).unwrap();
        assert_eq!(rep.verdict, Verdict::Degenerate);
        let w = rep.witness.unwrap();
        assert!(w.reference_sign == 0 || w.other_sign == 0);
    }

    #[test]
    fn region_examples() {
        let cells = region_grid(Space::UN, 1, (int(-2), int(2)), (int(-2), int(2)), &rat(1, 4), 6).unwrap();
        assert_eq!(cells.len(), 256);
        for c in &cells {
            assert_eq!(c.agrees(), Some(true), "{c:?}");
            // islands sit along s + t ≈ 0
            if c.predicate == Some(true) {
                assert!((c.s.to_f64() + c.t.to_f64()).abs() < 1.0);
            }
        }
        let csv = region_csv(&cells);
        assert!(csv.starts_with("s,t,predicate,scan\n1/8") || csv.starts_with("s,t,predicate,scan\n-15/8"));
        assert_eq!(csv.lines().count(), 257);

        // centres at ±1/2 keep σ = s - 1 off the integers
        let cells = region_grid(Space::UN, 2, (int(-1), int(1)), (int(-1), int(1)), &int(1), 2).unwrap();
        assert!(cells.iter().all(|c| c.predicate.is_some()));

        // a step of 2 from -1 puts the centre on s = 0, σ = -1: inapplicable
        let cells = region_grid(Space::UN, 2, (int(-1), int(1)), (int(-1), int(1)), &int(2), 2).unwrap();
        assert_eq!(cells.len(), 1);
        assert_eq!(cells[0].predicate, None);
        assert!(region_csv(&cells).contains("inapplicable,inapplicable"));
    }

    #[test]
    fn scan_is_deterministic() {
        let spec = KernelSpec::new(Space::UO, 3, r(1, 8), r(-3, 8));
        let a = scan_sign_constancy(&spec, 4).unwrap();
        let b = scan_sign_constancy(&spec, 4).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let back: ScanReport = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    fn space_strategy() -> impl Strategy<Value = (Space, usize)> {
        prop_oneof![
            (1usize..=3).prop_map(|n| (Space::UN, n)),
            (2usize..=3).prop_map(|n| (Space::UO, n)),
            (2usize..=3).prop_map(|n| (Space::USp, n)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn window_agrees_with_floor_equality((space, n) in space_strategy(), s in -3.0f64..3.0, t in -3.0f64..3.0) {
            let (s, t) = (Real::Float(s), Real::Float(t));
            let (sigma, tau) = st_to_sigma_tau(space, n, &s, &t);
            match definite_predicate(space, n, &sigma, &tau) {
                Ok(p) => prop_assert_eq!(window_predicate(space, n, &s, &t).unwrap(), p),
                Err(_) => prop_assert!(window_predicate(space, n, &s, &t).is_err()),
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn scan_soundness_and_witness_radius((space, n) in space_strategy(), s in -2.0f64..2.0, t in -2.0f64..2.0) {
            let (sigma, tau) = st_to_sigma_tau(space, n, &Real::Float(s), &Real::Float(t));
            prop_assume!(definite_predicate(space, n, &sigma, &tau).is_ok());
            let spec = KernelSpec::new(space, n, sigma.clone(), tau.clone());
            let rep = scan_sign_constancy(&spec, 6).unwrap();
            prop_assert_eq!(rep.verdict.is_definite(), definite_predicate(space, n, &sigma, &tau).unwrap());
            if rep.verdict == Verdict::Indefinite {
                let bound = n as i64 * ((sigma.to_f64().abs() + tau.to_f64().abs()).ceil() as i64 + 2);
                prop_assert!(rep.min_witness_radius.unwrap() <= bound);
                if sigma.to_f64() + tau.to_f64() > -1.0 {
                    let w = rep.witness.unwrap();
                    prop_assert_eq!(c_lambda(&w.reference, &spec).unwrap().sign, w.reference_sign);
                    prop_assert_eq!(c_lambda(&w.other, &spec).unwrap().sign, w.other_sign);
                }
            }
        }
    }
}
