//! Reducibility of `x^n + e1*x^m + e2` with `e1, e2` in `{-1, +1}`.
//!
//! Every reducible trinomial of this shape has a cyclotomic factor, and all
//! such factors divide `Phi_6(x^g)` or, for the all-plus pattern,
//! `Phi_3(x^g)`, where `g = gcd(n, m)`. Whether they occur is decided by the
//! 2- and 3-adic valuations of `m` and `n - 2m`:
//!
//! | signs     | reducible iff (n > 2m)               | factor        |
//! |-----------|--------------------------------------|---------------|
//! | `(-, -)`  | `v3(n-2m) > v3(m)`, `e(m) > e(n-2m)` | `Phi_6(x^g)`  |
//! | `(+, -)`  | `v3(n-2m) > v3(m)`, `e(m) = e(n-2m)` | `Phi_6(x^g)`  |
//! | `(-, +)`  | `v3(n-2m) > v3(m)`, `e(m) < e(n-2m)` | `Phi_6(x^g)`  |
//! | `(+, +)`  | `v3(n-2m) > v3(m)`                   | `Phi_3(x^g)`  |
//!
//! Here `e(k)` is the largest power of two dividing `k`. The classifier
//! evaluates these conditions and then checks them by exact division; the
//! two outcomes are compared and any disagreement is reported.

use std::fmt;

use num_bigint::BigInt;

use crate::arith::{euler_phi, gcd, largest_even_part, split_prime};
use crate::cyclotomic::{
    cyclotomic, cyclotomic_of_power, expand_phi_of_power, index_set, recognize_cyclotomic,
};
use crate::error::{Error, Result};
use crate::factor::{Factor, FactorTag, Factorization};
use crate::trinomial::{Sign, TrinomialSpec};
use crate::IntPoly;

/// Which reciprocal transform [`normalize`] applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    Identity,
    /// `f -> e2 * x^n * f(1/x)`, sending `m` to `n - m` and `e1` to `e1*e2`.
    Reciprocal,
}

/// Maps a spec with `n < 2m` to its reciprocal image, which has `n > 2m`
/// and the same reducibility. Specs with `n >= 2m` are returned unchanged.
pub fn normalize(t: &TrinomialSpec) -> Result<(TrinomialSpec, Transform)> {
    if !t.is_unit() {
        return Err(Error::Precondition(
            "normalize expects a unit constant term".into(),
        ));
    }
    if t.n >= 2 * t.m {
        return Ok((*t, Transform::Identity));
    }
    let image = TrinomialSpec {
        m: t.n - t.m,
        eps1: t.eps1 * t.eps2,
        ..*t
    };
    Ok((image, Transform::Reciprocal))
}

/// `m = 2^a 3^b M` and `n - 2m = 2^p 3^q N` with `M`, `N` prime to 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentProfile {
    pub m_pow2: u32,
    pub m_pow3: u32,
    pub m_rest: usize,
    pub diff_pow2: u32,
    pub diff_pow3: u32,
    pub diff_rest: usize,
    /// `e(m)`.
    pub e_m: usize,
    /// `e(n - 2m)`.
    pub e_diff: usize,
}

fn split_2_3(k: usize) -> (u32, u32, usize) {
    let (a, r) = split_prime(k, 2);
    let (b, r) = split_prime(r, 3);
    (a, b, r)
}

/// Valuation profile of a normalized spec; undefined when `n = 2m`.
pub fn exponent_profile(t: &TrinomialSpec) -> Result<ExponentProfile> {
    if t.n == 2 * t.m {
        return Err(Error::Degenerate { n: t.n });
    }
    if t.n < 2 * t.m {
        return Err(Error::Precondition(format!(
            "spec with n = {}, m = {} is not normalized",
            t.n, t.m
        )));
    }
    let diff = t.n - 2 * t.m;
    let (m_pow2, m_pow3, m_rest) = split_2_3(t.m);
    let (diff_pow2, diff_pow3, diff_rest) = split_2_3(diff);
    Ok(ExponentProfile {
        m_pow2,
        m_pow3,
        m_rest,
        diff_pow2,
        diff_pow3,
        diff_rest,
        e_m: largest_even_part(t.m),
        e_diff: largest_even_part(diff),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Irreducible,
    /// Has a cyclotomic factor and a non-cyclotomic cofactor.
    Reducible,
    /// `n = 2m` and the trinomial is a product of two or more cyclotomics.
    CyclotomicProductOnly,
}

impl Status {
    pub fn is_reducible(self) -> bool {
        !matches!(self, Status::Irreducible)
    }
}

/// The criterion applied to a normalized spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `x^(2m) +- x^m - 1`: never reducible.
    HalfDegreeNegativeConstant,
    /// `x^(2m) - x^m + 1 = Phi_6(x^m)`.
    HalfDegreeSixth,
    /// `x^(2m) + x^m + 1 = Phi_3(x^m)`.
    HalfDegreeThird,
    MinusMinus,
    PlusMinus,
    MinusPlus,
    PlusPlus,
}

/// Outcome of evaluating the criterion, before any division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conditions {
    pub rule: Rule,
    pub profile: Option<ExponentProfile>,
    /// Human-readable statement of the condition that was tested.
    pub description: String,
    pub predicts_reducible: bool,
}

/// A cyclotomic divisor reported by [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicFactor {
    pub poly: IntPoly,
    /// `(base, power)` when the factor is `Phi_base(x^power)`.
    pub phi_of_power: Option<(usize, usize)>,
    /// Indices `d` of the `Phi_d` multiplying to `poly`, ascending.
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    /// The evaluated condition and the division outcome disagree.
    ConditionMismatch { detail: String },
    /// For `x^(2m) + x^m + 1`, the condition "the part of m prime to 6
    /// exceeds 1" disagrees with the index-set count that decides the case.
    HalfDegreeTableDisagrees { m: usize, indices: usize },
}

impl Diagnostic {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, Diagnostic::ConditionMismatch { .. })
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::ConditionMismatch { detail } => write!(f, "condition mismatch: {detail}"),
            Diagnostic::HalfDegreeTableDisagrees { m, indices } => write!(
                f,
                "x^{}+x^{m}+1 splits into {indices} cyclotomic factors although m has no prime factor above 3",
                2 * m
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub spec: TrinomialSpec,
    pub normalized: TrinomialSpec,
    pub transform: Transform,
    pub status: Status,
    pub conditions: Conditions,
    pub cyclotomic_factor: Option<CyclotomicFactor>,
    /// The emitted factor was checked to divide the trinomial exactly.
    pub confirmed_by_division: bool,
    pub diagnostics: Vec<Diagnostic>,
}

impl Verdict {
    pub fn has_mismatch(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_mismatch)
    }
}

fn evaluate(t: &TrinomialSpec) -> Result<Conditions> {
    use Sign::*;
    if t.n == 2 * t.m {
        let (rule, description, predicts) = match (t.eps1, t.eps2) {
            (_, Minus) => (
                Rule::HalfDegreeNegativeConstant,
                "n = 2m with constant -1".to_string(),
                false,
            ),
            (Minus, Plus) => {
                let k = index_set(6, t.m).len();
                (
                    Rule::HalfDegreeSixth,
                    format!("|D(6, {})| = {k} > 1", t.m),
                    k > 1,
                )
            }
            (Plus, Plus) => {
                let k = index_set(3, t.m).len();
                (
                    Rule::HalfDegreeThird,
                    format!("|D(3, {})| = {k} > 1", t.m),
                    k > 1,
                )
            }
        };
        return Ok(Conditions {
            rule,
            profile: None,
            description,
            predicts_reducible: predicts,
        });
    }
    let pr = exponent_profile(t)?;
    let three = pr.diff_pow3 > pr.m_pow3;
    let (rule, description, predicts) = match (t.eps1, t.eps2) {
        (Minus, Minus) => (
            Rule::MinusMinus,
            "v3(n-2m) > v3(m) and e(m) > e(n-2m)",
            three && pr.e_m > pr.e_diff,
        ),
        (Plus, Minus) => (
            Rule::PlusMinus,
            "v3(n-2m) > v3(m) and e(m) = e(n-2m)",
            three && pr.e_m == pr.e_diff,
        ),
        (Minus, Plus) => (
            Rule::MinusPlus,
            "v3(n-2m) > v3(m) and e(m) < e(n-2m)",
            three && pr.e_m < pr.e_diff,
        ),
        (Plus, Plus) => (Rule::PlusPlus, "v3(n-2m) > v3(m)", three),
    };
    Ok(Conditions {
        rule,
        profile: Some(pr),
        description: description.to_string(),
        predicts_reducible: predicts,
    })
}

/// `gcd(f, x^n f(1/x))` as a primitive polynomial: the product of the
/// factors of `f` whose root sets are closed under `z -> 1/z`.
pub fn reciprocal_part(f: &IntPoly) -> Result<IntPoly> {
    let rev = f.reversal()?;
    let plus = f.gcd_primitive(&rev);
    debug_assert_eq!(
        plus,
        f.gcd_primitive(&-rev),
        "reversal sign does not change the primitive gcd"
    );
    Ok(plus)
}

/// Classifies a unit trinomial. Specs with `n < 2m` are normalized first;
/// the verdict describes the original polynomial.
pub fn classify(t: &TrinomialSpec) -> Result<Verdict> {
    let (norm, transform) = normalize(t)?;
    let conditions = evaluate(&norm)?;
    let f = t.poly();
    let mut diagnostics = Vec::new();

    if conditions.rule == Rule::HalfDegreeSixth || conditions.rule == Rule::HalfDegreeThird {
        let base = if conditions.rule == Rule::HalfDegreeSixth {
            6
        } else {
            3
        };
        let (set, product) = expand_phi_of_power(base, norm.m)?;
        let matches = f.div_exact(&product).is_some_and(|q| q.is_one());
        if !matches {
            diagnostics.push(Diagnostic::ConditionMismatch {
                detail: format!("trinomial is not Phi_{base}(x^{})", norm.m),
            });
        }
        if base == 3 {
            let (_, _, rest) = split_2_3(norm.m);
            if (rest > 1) != (set.len() > 1) {
                diagnostics.push(Diagnostic::HalfDegreeTableDisagrees {
                    m: norm.m,
                    indices: set.len(),
                });
            }
        }
        let reducible = set.len() > 1;
        return Ok(Verdict {
            spec: *t,
            normalized: norm,
            transform,
            status: if reducible {
                Status::CyclotomicProductOnly
            } else {
                Status::Irreducible
            },
            conditions,
            cyclotomic_factor: reducible.then(|| CyclotomicFactor {
                poly: product,
                phi_of_power: Some((base, norm.m)),
                indices: set.indices.clone(),
            }),
            confirmed_by_division: reducible && matches,
            diagnostics,
        });
    }

    // n > 2m, or n = 2m with constant -1
    let recip = reciprocal_part(&f)?;
    let has_recip = !recip.is_constant();
    let mut candidate = None;
    if conditions.rule != Rule::HalfDegreeNegativeConstant {
        let base = if conditions.rule == Rule::PlusPlus {
            3
        } else {
            6
        };
        let g = gcd(t.n, t.m);
        let poly = cyclotomic_of_power(base, g);
        let divides = f.div_exact(&poly).is_some();
        if divides != conditions.predicts_reducible {
            diagnostics.push(Diagnostic::ConditionMismatch {
                detail: format!(
                    "condition `{}` is {} but Phi_{base}(x^{g}) {} the trinomial",
                    conditions.description,
                    conditions.predicts_reducible,
                    if divides {
                        "divides"
                    } else {
                        "does not divide"
                    }
                ),
            });
        }
        if divides {
            candidate = Some(CyclotomicFactor {
                poly,
                phi_of_power: Some((base, g)),
                indices: index_set(base, g).indices,
            });
        }
    }
    if has_recip && candidate.is_none() {
        diagnostics.push(Diagnostic::ConditionMismatch {
            detail: format!("reciprocal part {recip} is not captured by the criterion"),
        });
        let indices = cyclotomic_decomposition(&recip)
            .map(|v| v.into_iter().map(|(d, _)| d).collect())
            .unwrap_or_default();
        candidate = Some(CyclotomicFactor {
            poly: recip,
            phi_of_power: None,
            indices,
        });
    }
    let confirmed = candidate
        .as_ref()
        .is_some_and(|c| f.div_exact(&c.poly).is_some());
    let status = if candidate.is_some() {
        Status::Reducible
    } else {
        Status::Irreducible
    };
    Ok(Verdict {
        spec: *t,
        normalized: norm,
        transform,
        status,
        conditions,
        cyclotomic_factor: candidate,
        confirmed_by_division: confirmed,
        diagnostics,
    })
}

/// Writes a product of cyclotomic polynomials as `[(d, multiplicity)]`,
/// ascending in `d`. Fails with [`Error::StructureViolation`] if anything
/// non-cyclotomic is left over.
pub fn cyclotomic_decomposition(r: &IntPoly) -> Result<Vec<(usize, u32)>> {
    let mut rest = r.primitive_part();
    let mut out = Vec::new();
    let mut d = 1;
    while let Some(deg) = rest.degree().filter(|&k| k > 0) {
        if d > 2 * deg * deg + 2 {
            return Err(Error::StructureViolation(format!(
                "reciprocal part has a non-cyclotomic factor: {rest}"
            )));
        }
        if euler_phi(d) <= deg {
            let phi = cyclotomic(d);
            let mut mult = 0;
            while let Some(q) = rest.div_exact(&phi) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((d, mult));
            }
        }
        d += 1;
    }
    Ok(out)
}

/// Cyclotomic part times the (at most one) non-reciprocal residual.
///
/// Aborts with [`Error::StructureViolation`] if the residual is reciprocal
/// or the reciprocal part is not a product of cyclotomic polynomials.
pub fn structural_factorization(t: &TrinomialSpec) -> Result<Factorization> {
    if !t.is_unit() {
        return Err(Error::Precondition(
            "structural factorization expects a unit constant term".into(),
        ));
    }
    let f = t.poly();
    let recip = reciprocal_part(&f)?;
    let mut factors = Vec::new();
    for (d, mult) in cyclotomic_decomposition(&recip)? {
        let poly = (*cyclotomic(d)).clone();
        debug_assert_eq!(recognize_cyclotomic(&poly), Some(d));
        factors.push(Factor {
            poly,
            multiplicity: mult,
            tag: FactorTag::Cyclotomic(d),
        });
    }
    let residual = f
        .div_exact(&recip)
        .ok_or_else(|| Error::StructureViolation("reciprocal part does not divide".into()))?;
    let mut content = BigInt::from(1);
    if residual.is_constant() {
        content = residual.constant_term();
    } else {
        if residual.is_reciprocal()? {
            return Err(Error::StructureViolation(format!(
                "residual {residual} is reciprocal"
            )));
        }
        factors.push(Factor {
            poly: residual,
            multiplicity: 1,
            tag: FactorTag::NonReciprocal,
        });
    }
    let out = Factorization::new(content, factors);
    if out.expand() != f {
        return Err(Error::StructureViolation(
            "factors do not multiply back to the trinomial".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    fn spec(n: usize, m: usize, e1: Sign, e2: Sign) -> TrinomialSpec {
        TrinomialSpec::unit(n, m, e1, e2).unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_slice(c)
    }

    #[test]
    fn normalization() {
        let (img, tr) = normalize(&spec(5, 4, Plus, Minus)).unwrap();
        assert_eq!(
            (img.n, img.m, img.eps1, img.eps2, tr),
            (5, 1, Minus, Minus, Transform::Reciprocal)
        );
        assert_eq!(
            normalize(&spec(6, 3, Plus, Plus)).unwrap().1,
            Transform::Identity
        );
        assert_eq!(
            normalize(&spec(7, 2, Minus, Plus)).unwrap().1,
            Transform::Identity
        );
    }

    #[test]
    fn profiles() {
        let pr = exponent_profile(&spec(50, 4, Minus, Minus)).unwrap();
        assert_eq!((pr.m_pow2, pr.m_pow3, pr.m_rest), (2, 0, 1));
        assert_eq!((pr.diff_pow2, pr.diff_pow3, pr.diff_rest), (1, 1, 7));
        assert_eq!((pr.e_m, pr.e_diff), (4, 2));
        let pr = exponent_profile(&spec(50, 22, Plus, Minus)).unwrap();
        assert_eq!((pr.m_pow2, pr.m_pow3, pr.m_rest), (1, 0, 11));
        assert_eq!((pr.diff_pow2, pr.diff_pow3, pr.diff_rest), (1, 1, 1));
        let pr = exponent_profile(&spec(9, 1, Plus, Plus)).unwrap();
        assert_eq!((pr.m_pow2, pr.m_pow3, pr.m_rest), (0, 0, 1));
        assert_eq!(
            exponent_profile(&spec(6, 3, Plus, Plus)),
            Err(Error::Degenerate { n: 6 })
        );
    }

    #[test]
    fn corrected_cases() {
        let v = classify(&spec(50, 4, Minus, Minus)).unwrap();
        assert_eq!(v.status, Status::Reducible);
        assert_eq!(
            v.cyclotomic_factor.as_ref().unwrap().poly,
            p(&[1, 0, -1, 0, 1])
        );
        assert!(v.confirmed_by_division && !v.has_mismatch());
        let v = classify(&spec(50, 22, Plus, Minus)).unwrap();
        assert_eq!(v.status, Status::Reducible);
        assert_eq!(v.transform, Transform::Identity);
        assert_eq!(v.cyclotomic_factor.unwrap().poly, p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn half_degree_cases() {
        for m in 1..15 {
            assert_eq!(
                classify(&spec(2 * m, m, Plus, Minus)).unwrap().status,
                Status::Irreducible
            );
            assert_eq!(
                classify(&spec(2 * m, m, Minus, Minus)).unwrap().status,
                Status::Irreducible
            );
        }
        let v = classify(&spec(4, 2, Plus, Plus)).unwrap();
        assert_eq!(v.status, Status::CyclotomicProductOnly);
        assert_eq!(v.cyclotomic_factor.as_ref().unwrap().indices, vec![3, 6]);
        assert_eq!(
            v.diagnostics,
            vec![Diagnostic::HalfDegreeTableDisagrees { m: 2, indices: 2 }]
        );
        assert!(!v.has_mismatch());
        assert_eq!(
            classify(&spec(6, 3, Plus, Plus)).unwrap().status,
            Status::Irreducible
        );
        assert_eq!(
            classify(&spec(10, 5, Minus, Plus)).unwrap().status,
            Status::CyclotomicProductOnly
        );
        assert_eq!(
            classify(&spec(4, 2, Minus, Plus)).unwrap().status,
            Status::Irreducible
        );
    }

    #[test]
    fn structure_of_known_cases() {
        let fac = structural_factorization(&spec(50, 4, Minus, Minus)).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.factors[0].tag, FactorTag::Cyclotomic(12));
        assert_eq!(fac.factors[1].poly.degree(), Some(46));
        let fac = structural_factorization(&spec(4, 2, Plus, Plus)).unwrap();
        let tags: Vec<_> = fac.factors.iter().map(|f| f.tag).collect();
        assert_eq!(
            tags,
            vec![FactorTag::Cyclotomic(6), FactorTag::Cyclotomic(3)]
        );
        assert!(
            structural_factorization(&TrinomialSpec::new(5, 2, Minus, Plus, 4).unwrap()).is_err()
        );
    }

    #[test]
    fn decomposition_rejects_non_cyclotomic() {
        assert_eq!(
            cyclotomic_decomposition(&p(&[1, 0, 1, 0, 1])).unwrap(),
            vec![(3, 1), (6, 1)]
        );
        assert!(matches!(
            cyclotomic_decomposition(&p(&[1, 3, 1])),
            Err(Error::StructureViolation(_))
        ));
    }
}
