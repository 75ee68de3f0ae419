//! Complete factorization over the integers by the Zassenhaus method:
//! squarefree split, factorization modulo a small prime, Hensel lifting past
//! the Landau-Mignotte bound, and exhaustive subset recombination.
//!
//! This is the independent oracle the classifiers are checked against; it
//! never consults their criteria.

pub mod hensel;
pub mod modp;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::binomial;
use crate::cyclotomic::recognize_cyclotomic;
use crate::error::{Error, Result};
use crate::IntPoly;

pub use hensel::hensel_lift;
pub use modp::{factor_mod_p, FpPoly};

/// Hard cap on the number of subsets tried during recombination.
pub const SUBSET_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorTag {
    Cyclotomic(usize),
    NonReciprocal,
    ReciprocalNonCyclotomic,
}

impl FactorTag {
    pub fn of(f: &IntPoly) -> Self {
        if let Some(d) = recognize_cyclotomic(f) {
            return FactorTag::Cyclotomic(d);
        }
        match f.is_reciprocal() {
            Ok(true) => FactorTag::ReciprocalNonCyclotomic,
            _ => FactorTag::NonReciprocal,
        }
    }

    pub fn is_reciprocal(&self) -> bool {
        !matches!(self, FactorTag::NonReciprocal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub poly: IntPoly,
    pub multiplicity: u32,
    pub tag: FactorTag,
}

/// `content * prod(poly^multiplicity)`, factors primitive with positive
/// leading coefficient, pairwise distinct, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Signed content of the input; `±1` for primitive input.
    pub content: BigInt,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn new(content: BigInt, mut factors: Vec<Factor>) -> Self {
        factors.sort_by(|a, b| canonical_order(&a.poly, &b.poly));
        Self { content, factors }
    }

    /// Multiplies everything back out.
    pub fn expand(&self) -> IntPoly {
        let prod: IntPoly = self
            .factors
            .iter()
            .map(|f| f.poly.pow(f.multiplicity))
            .product();
        prod.scale(&self.content)
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count_with_multiplicity(&self) -> u32 {
        self.factors.iter().map(|f| f.multiplicity).sum()
    }

    pub fn non_reciprocal(&self) -> impl Iterator<Item = &Factor> {
        self.factors.iter().filter(|f| !f.tag.is_reciprocal())
    }
}

/// Degree first, then coefficients compared from the constant term upward.
pub fn canonical_order(a: &IntPoly, b: &IntPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// `f = content * prod(g_i^i)` with every `g_i` squarefree, primitive and
/// pairwise coprime (Yun). Only non-constant blocks are returned.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let f = f.primitive_part();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    let g = f.gcd_primitive(&df);
    let mut c = f.div_exact(&g).expect("gcd divides f");
    let mut d = &df.div_exact(&g).expect("gcd divides f'") - &c.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !c.is_constant() {
        let a = c.gcd_primitive(&d);
        c = c.div_exact(&a).expect("gcd divides c");
        d = &d.div_exact(&a).expect("gcd divides d") - &c.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Coefficient bound for `lc(f)/lc(g) * g` over every divisor `g` of `f`
/// with `deg g <= max_degree`: `C(d, d/2) * ceil(||f||_2)`.
pub fn landau_mignotte_bound(f: &IntPoly, max_degree: usize) -> BigInt {
    let sum_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let mut norm = sum_sq.sqrt();
    if &norm * &norm < sum_sq {
        norm += 1;
    }
    binomial(max_degree, max_degree / 2) * norm
}

/// Complete factorization of `f` over the integers.
pub fn factor_over_z(f: &IntPoly) -> Result<Factorization> {
    let (content, prim) = f.content_and_primitive()?;
    let mut factors = Vec::new();
    for (block, mult) in squarefree_decomposition(&prim) {
        for g in factor_squarefree(&block)? {
            let tag = FactorTag::of(&g);
            factors.push(Factor {
                poly: g,
                multiplicity: mult,
                tag,
            });
        }
    }
    let out = Factorization::new(content, factors);
    debug_assert_eq!(out.expand(), *f);
    Ok(out)
}

/// True iff `f` has exactly one irreducible factor, of multiplicity one.
pub fn is_irreducible(f: &IntPoly) -> Result<bool> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition(
            "irreducibility needs degree >= 1".into(),
        ));
    }
    let fac = factor_over_z(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].multiplicity == 1)
}

/// Irreducible factors of a squarefree primitive polynomial with positive
/// leading coefficient.
fn factor_squarefree(f: &IntPoly) -> Result<Vec<IntPoly>> {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    if f.constant_term().is_zero() {
        let rest = f.div_exact(&IntPoly::x()).expect("x divides f");
        let mut out = vec![IntPoly::x()];
        out.extend(factor_squarefree(&rest.primitive_part())?);
        return Ok(out);
    }
    if deg == 1 {
        return Ok(vec![f.clone()]);
    }
    let (p, modular) = choose_prime(f)?;
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let bound = landau_mignotte_bound(f, deg / 2);
    let twice = &bound * 2;
    let pb = BigInt::from(p);
    let mut exponent = 1u32;
    let mut modulus = pb.clone();
    while modulus <= twice {
        modulus *= &pb;
        exponent += 1;
    }
    let lifted = hensel_lift(f, &modular, p, exponent)?;
    recombine(f, lifted, &modulus)
}

/// Smallest odd prime not dividing `lc(f)` modulo which `f` stays squarefree.
fn choose_prime(f: &IntPoly) -> Result<(u64, Vec<FpPoly>)> {
    let lc = f.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    for p in crate::arith::primes_in(3, u32::MAX as u64) {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        match factor_mod_p(f, p) {
            Ok(fs) => return Ok((p, fs)),
            Err(Error::NotSquarefreeModP(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    unreachable!("a squarefree polynomial is squarefree modulo all but finitely many primes")
}

/// Zassenhaus recombination of lifted monic factors modulo `modulus`.
///
/// Subsets are tried in increasing size and lexicographic order; for each,
/// the side of lower degree is reconstructed in the symmetric range and
/// trial-divided.
fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Result<Vec<IntPoly>> {
    let mut f = f.clone();
    let mut found = Vec::new();
    let mut tried = 0u64;
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let r = lifted.len();
        let total_deg = f.degree().expect("non-constant");
        let lc = f.leading_coeff().expect("non-zero").clone();
        let target_const = (&lc * f.constant_term()).abs();
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried > SUBSET_LIMIT {
                return Err(Error::RecombinationLimit {
                    limit: SUBSET_LIMIT,
                });
            }
            let mut chosen = vec![false; r];
            for &i in &subset {
                chosen[i] = true;
            }
            let subset_deg: usize = subset.iter().map(|&i| lifted[i].degree().unwrap()).sum();
            let use_subset = 2 * subset_deg <= total_deg;
            let side: Vec<&IntPoly> = (0..r)
                .filter(|&i| chosen[i] == use_subset)
                .map(|i| &lifted[i])
                .collect();
            if let Some(g) = candidate(&side, &lc, &target_const, modulus) {
                if let Some(q) = f.div_exact(&g) {
                    let (piece, rest) = if use_subset { (g, q) } else { (q, g) };
                    found.push(piece.primitive_part());
                    f = rest.primitive_part();
                    let mut idx = 0;
                    lifted.retain(|_| {
                        let keep = !chosen[idx];
                        idx += 1;
                        keep
                    });
                    continue 'outer;
                }
            }
            if !next_combination(&mut subset, r) {
                break;
            }
        }
        size += 1;
    }
    if !f.is_constant() {
        found.push(f);
    }
    Ok(found)
}

/// `lc * prod(side)` in the symmetric range, primitive, or `None` when its
/// constant term cannot divide `lc * f(0)`.
fn candidate(
    side: &[&IntPoly],
    lc: &BigInt,
    target_const: &BigInt,
    modulus: &BigInt,
) -> Option<IntPoly> {
    let mut c0 = lc.clone();
    for g in side {
        c0 = (c0 * g.constant_term()).mod_floor(modulus);
    }
    let c0 = hensel::reduce_symmetric(&IntPoly::constant(c0), modulus).constant_term();
    if c0.is_zero() || !(target_const % &c0).is_zero() {
        return None;
    }
    let mut prod = IntPoly::constant(lc.clone());
    for g in side {
        prod = hensel::reduce(&(&prod * *g), modulus);
    }
    let g = hensel::reduce_symmetric(&prod, modulus).primitive_part();
    (!g.is_constant()).then_some(g)
}

/// Advances `subset` to the next `k`-combination of `0..n` in lexicographic
/// order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_slice(c)
    }

    fn polys(fac: &Factorization) -> Vec<(IntPoly, u32)> {
        fac.factors
            .iter()
            .map(|f| (f.poly.clone(), f.multiplicity))
            .collect()
    }

    #[test]
    fn squarefree_blocks() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        assert_eq!(
            squarefree_decomposition(&f),
            vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]
        );
        let g = p(&[4, 0, -1, 0, 0, 1]);
        assert_eq!(squarefree_decomposition(&g), vec![(g.clone(), 1)]);
        let h = &p(&[1, 0, 1]).pow(3) * &p(&[3, 1]).pow(2);
        assert_eq!(
            squarefree_decomposition(&h.scale(&BigInt::from(-6))),
            vec![(p(&[3, 1]), 2), (p(&[1, 0, 1]), 3)]
        );
    }

    #[test]
    fn known_factorizations() {
        let fac = factor_over_z(&p(&[9, 0, 0, 0, -1, 1])).unwrap();
        assert_eq!(
            polys(&fac),
            vec![(p(&[3, -3, 1]), 1), (p(&[3, 3, 2, 1]), 1)]
        );
        let fac = factor_over_z(&p(&[4, 0, -1, 0, 0, 1])).unwrap();
        assert_eq!(
            polys(&fac),
            vec![(p(&[2, 1, 1]), 1), (p(&[2, -1, -1, 1]), 1)]
        );
        let fac = factor_over_z(&p(&[1, 0, 1, 0, 1])).unwrap();
        assert_eq!(polys(&fac), vec![(p(&[1, -1, 1]), 1), (p(&[1, 1, 1]), 1)]);
        assert_eq!(fac.factors[0].tag, FactorTag::Cyclotomic(6));
        assert_eq!(fac.factors[1].tag, FactorTag::Cyclotomic(3));
        assert!(is_irreducible(&p(&[1, 0, 1])).unwrap());
        assert!(is_irreducible(&p(&[4, 1, 0, 1])).unwrap());
        assert!(is_irreducible(&p(&[1, -1, 1])).unwrap());
    }

    #[test]
    fn content_and_monomial_factor() {
        let f = p(&[0, -4, 0, 6]);
        let fac = factor_over_z(&f).unwrap();
        assert_eq!(fac.content, BigInt::from(2));
        assert_eq!(polys(&fac), vec![(p(&[0, 1]), 1), (p(&[-2, 0, 3]), 1)]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn swinnerton_dyer_style_splitting() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
        let f = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f).unwrap());
        let g = &f * &f;
        let fac = factor_over_z(&g).unwrap();
        assert_eq!(polys(&fac), vec![(f.clone(), 2)]);
    }

    #[test]
    fn tags() {
        assert_eq!(FactorTag::of(&p(&[1, -1, 1])), FactorTag::Cyclotomic(6));
        assert_eq!(
            FactorTag::of(&p(&[1, 3, 1])),
            FactorTag::ReciprocalNonCyclotomic
        );
        assert_eq!(FactorTag::of(&p(&[2, 1, 1])), FactorTag::NonReciprocal);
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let mut s = vec![0, 1];
        let mut all = vec![s.clone()];
        while next_combination(&mut s, 4) {
            all.push(s.clone());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
