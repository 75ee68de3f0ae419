use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::json;

use trinomial_core::arith::{is_prime, primes_in};
use trinomial_core::cyclotomic::{
    expand_phi_of_power, verify_identity_a, verify_identity_d, verify_x_pow_plus_one,
};
use trinomial_core::pk_trinomial::{
    classify_pk, discriminant_via_resultant, is_separable, roots_outside_unit_disk,
    trinomial_discriminant, PkStatus,
};
use trinomial_core::unit_trinomial::{classify, structural_factorization, Transform};
use trinomial_core::{factor_over_z, Error as CoreError, FactorTag, IntPoly, Sign, TrinomialSpec};

use crate::parse::{parse_polynomial, ParseError};
use crate::report::{
    Disagreement, Family, PolyJson, SpecJson, SweepRanges, SweepRecord, SweepReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    JsonLines,
}

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Success = 0,
    Internal = 1,
    Usage = 2,
    Mismatch = 3,
    StructureViolation = 4,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Range(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Parse(_) | CliError::Range(_) => Exit::Usage,
            CliError::Core(
                CoreError::InvalidSpec(_)
                | CoreError::InvalidConstant(_)
                | CoreError::ZeroPolynomial
                | CoreError::ZeroConstant,
            ) => Exit::Usage,
            _ => Exit::Internal,
        }
    }
}

pub type CliResult = Result<(String, Exit), CliError>;

fn sign(v: i64) -> Result<Sign, CliError> {
    Sign::from_value(v).ok_or_else(|| CliError::Range(format!("sign must be -1 or 1, got {v}")))
}

pub fn unit_spec(n: usize, m: usize, eps1: i64, eps2: i64) -> Result<TrinomialSpec, CliError> {
    Ok(TrinomialSpec::unit(n, m, sign(eps1)?, sign(eps2)?)?)
}

fn prime_power_constant(p: u64, k: u32) -> Result<u64, CliError> {
    if !is_prime(p) {
        return Err(CliError::Range(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(CliError::Range("k must be at least 1".into()));
    }
    p.checked_pow(k)
        .ok_or_else(|| CliError::Range(format!("{p}^{k} overflows u64")))
}

fn line(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string(&v).expect("serializable");
    s.push('\n');
    s
}

fn poly_json(f: &IntPoly) -> serde_json::Value {
    serde_json::to_value(PolyJson(f.clone())).expect("serializable")
}

fn tag_name(tag: FactorTag) -> String {
    match tag {
        FactorTag::Cyclotomic(d) => format!("cyclotomic({d})"),
        FactorTag::NonReciprocal => "non-reciprocal".into(),
        FactorTag::ReciprocalNonCyclotomic => "reciprocal".into(),
    }
}

pub fn run_classify(t: &TrinomialSpec, format: Format) -> CliResult {
    let v = classify(t)?;
    let exit = if v.has_mismatch() {
        Exit::Mismatch
    } else {
        Exit::Success
    };
    let factor = v.cyclotomic_factor.as_ref();
    let diagnostics: Vec<String> = v.diagnostics.iter().map(ToString::to_string).collect();
    let out = match format {
        Format::JsonLines => line(json!({
            "kind": "classify",
            "spec": SpecJson::from(t),
            "poly": poly_json(&t.poly()),
            "normalized": SpecJson::from(&v.normalized),
            "transform": format!("{:?}", v.transform),
            "rule": format!("{:?}", v.conditions.rule),
            "condition": v.conditions.description,
            "predicts_reducible": v.conditions.predicts_reducible,
            "status": format!("{:?}", v.status),
            "cyclotomic_factor": factor.map(|c| poly_json(&c.poly)),
            "cyclotomic_indices": factor.map(|c| c.indices.clone()),
            "confirmed_by_division": v.confirmed_by_division,
            "diagnostics": diagnostics,
        })),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "trinomial: {t}").unwrap();
            if v.transform == Transform::Reciprocal {
                writeln!(s, "reciprocal image: {}", v.normalized).unwrap();
            }
            writeln!(
                s,
                "rule: {:?} ({})",
                v.conditions.rule, v.conditions.description
            )
            .unwrap();
            writeln!(
                s,
                "condition predicts: {}",
                if v.conditions.predicts_reducible {
                    "reducible"
                } else {
                    "irreducible"
                }
            )
            .unwrap();
            writeln!(s, "status: {:?}", v.status).unwrap();
            if let Some(c) = factor {
                let idx: Vec<String> = c.indices.iter().map(|d| format!("Phi_{d}")).collect();
                writeln!(s, "cyclotomic factor: {} = {}", c.poly, idx.join(" * ")).unwrap();
                writeln!(s, "divides exactly: {}", v.confirmed_by_division).unwrap();
            }
            for d in &diagnostics {
                writeln!(s, "diagnostic: {d}").unwrap();
            }
            s
        }
    };
    Ok((out, exit))
}

pub fn run_classify_pk(t: &TrinomialSpec, format: Format) -> CliResult {
    let v = classify_pk(t)?;
    let separable = is_separable(t)?;
    let outside = roots_outside_unit_disk(&t.poly())?;
    let out = match format {
        Format::JsonLines => line(json!({
            "kind": "classify-pk",
            "spec": SpecJson::from(t),
            "poly": poly_json(&t.poly()),
            "p": v.prime,
            "k": v.exponent,
            "status": format!("{:?}", v.status),
            "justification": format!("{:?}", v.justification),
            "factor_bound": v.bound,
            "explicit_factors": v.explicit_factors.as_ref().map(|fs| fs.iter().map(poly_json).collect::<Vec<_>>()),
            "separable": separable,
            "roots_outside_unit_disk": outside,
        })),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "trinomial: {t}").unwrap();
            writeln!(s, "constant: {}^{}", v.prime, v.exponent).unwrap();
            writeln!(s, "status: {:?} ({:?})", v.status, v.justification).unwrap();
            if let Some(b) = v.bound {
                writeln!(s, "at most {b} irreducible factor(s)").unwrap();
            }
            if let Some(fs) = &v.explicit_factors {
                let parts: Vec<String> = fs.iter().map(|f| format!("({f})")).collect();
                writeln!(s, "factors: {}", parts.join(" * ")).unwrap();
            }
            writeln!(s, "separable: {separable}").unwrap();
            writeln!(s, "roots outside closed unit disk: {outside}").unwrap();
            s
        }
    };
    Ok((out, Exit::Success))
}

pub fn run_factor(text: &str, format: Format) -> CliResult {
    let f = parse_polynomial(text)?;
    let fz = factor_over_z(&f)?;
    let out = match format {
        Format::JsonLines => {
            let factors: Vec<_> = fz
                .factors
                .iter()
                .map(|g| json!({"poly": poly_json(&g.poly), "multiplicity": g.multiplicity, "tag": tag_name(g.tag)}))
                .collect();
            let content: serde_json::Number =
                fz.content.to_string().parse().expect("decimal integer");
            line(
                json!({"kind": "factorization", "poly": poly_json(&f), "content": content, "factors": factors}),
            )
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "{f}").unwrap();
            writeln!(s, "content: {}", fz.content).unwrap();
            for g in &fz.factors {
                let power = if g.multiplicity > 1 {
                    format!("^{}", g.multiplicity)
                } else {
                    String::new()
                };
                writeln!(s, "({}){power}  [{}]", g.poly, tag_name(g.tag)).unwrap();
            }
            s
        }
    };
    Ok((out, Exit::Success))
}

pub fn run_discriminant(n: usize, m: usize, a: &BigInt, b: &BigInt, format: Format) -> CliResult {
    let closed = trinomial_discriminant(n, m, a, b)?;
    let via_res = discriminant_via_resultant(&IntPoly::trinomial(n, m, a.clone(), b.clone()))?;
    let agree = closed == via_res;
    let exit = if agree { Exit::Success } else { Exit::Mismatch };
    let num =
        |x: &BigInt| -> serde_json::Number { x.to_string().parse().expect("decimal integer") };
    let out = match format {
        Format::JsonLines => line(json!({
            "kind": "discriminant",
            "n": n, "m": m, "a": num(a), "b": num(b),
            "closed_form": num(&closed),
            "resultant": num(&via_res),
            "agreement": agree,
        })),
        Format::Text => {
            format!("closed form: {closed}\nresultant: {via_res}\nagreement: {agree}\n")
        }
    };
    Ok((out, exit))
}

pub struct IdentityRanges {
    pub max_prime: u64,
    pub max_n: usize,
    pub max_product: usize,
}

pub fn run_verify_identities(r: &IdentityRanges, format: Format) -> CliResult {
    let primes: Vec<usize> = primes_in(2, r.max_prime + 1).map(|p| p as usize).collect();
    let mut rows: Vec<(String, usize, Vec<String>)> = Vec::new();

    let a: Vec<(usize, usize)> = primes
        .iter()
        .flat_map(|&p| (1..=r.max_n).map(move |n| (p, n)))
        .collect();
    let failed = a
        .par_iter()
        .filter(|&&(p, n)| !verify_identity_a(p, n).unwrap_or(false))
        .map(|(p, n)| format!("p={p} n={n}"))
        .collect();
    rows.push((
        format!("(a) p <= {}, n <= {}", r.max_prime, r.max_n),
        a.len(),
        failed,
    ));

    let b: Vec<(usize, usize)> = (1..=r.max_product)
        .flat_map(|n| (1..=r.max_product / n).map(move |m| (n, m)))
        .collect();
    let failed = b
        .par_iter()
        .filter(|&&(n, m)| expand_phi_of_power(n, m).is_err())
        .map(|(n, m)| format!("n={n} m={m}"))
        .collect();
    rows.push((format!("(b) n*m <= {}", r.max_product), b.len(), failed));

    let failed = (1..=r.max_n)
        .into_par_iter()
        .filter(|&n| !verify_x_pow_plus_one(n))
        .map(|n| format!("n={n}"))
        .collect();
    rows.push((format!("(c) n <= {}", r.max_n), r.max_n, failed));

    let d: Vec<(usize, usize)> = (1..=r.max_n)
        .flat_map(|n| (1..=r.max_n).map(move |m| (n, m)))
        .collect();
    let failed = d
        .par_iter()
        .filter(|&&(n, m)| !verify_identity_d(n, m).unwrap_or(false))
        .map(|(n, m)| format!("n={n} m={m}"))
        .collect();
    rows.push((format!("(d) n, m <= {}", r.max_n), d.len(), failed));

    let any_failed = rows.iter().any(|(_, _, f)| !f.is_empty());
    let mut out = String::new();
    for (name, checked, failed) in &rows {
        match format {
            Format::JsonLines => out.push_str(&line(json!({
                "kind": "identity", "range": name, "checked": checked, "failed": failed,
            }))),
            Format::Text => {
                writeln!(out, "{name}: {checked} checked, {} failed", failed.len()).unwrap();
                for f in failed {
                    writeln!(out, "  failed at {f}").unwrap();
                }
            }
        }
    }
    Ok((
        out,
        if any_failed {
            Exit::StructureViolation
        } else {
            Exit::Success
        },
    ))
}

pub struct SweepOptions {
    pub family: Family,
    pub max_n: usize,
    pub primes: Vec<u64>,
    pub exponents: Vec<u32>,
}

fn oracle_factors(
    f: &IntPoly,
) -> Result<(trinomial_core::Factorization, Vec<PolyJson>), CoreError> {
    let fz = factor_over_z(f)?;
    let flat = fz
        .factors
        .iter()
        .flat_map(|g| std::iter::repeat_n(PolyJson(g.poly.clone()), g.multiplicity as usize))
        .collect();
    Ok((fz, flat))
}

fn record(
    t: &TrinomialSpec,
    verdict: String,
    fz: &trinomial_core::Factorization,
    factors: Vec<PolyJson>,
    mismatch: Vec<String>,
    structure: Vec<String>,
) -> SweepRecord {
    let disagreement = if !structure.is_empty() {
        Some(Disagreement::StructureViolation)
    } else if !mismatch.is_empty() {
        Some(Disagreement::Mismatch)
    } else {
        None
    };
    let detail = structure
        .into_iter()
        .chain(mismatch)
        .collect::<Vec<_>>()
        .join("; ");
    SweepRecord {
        spec: SpecJson::from(t),
        poly: PolyJson(t.poly()),
        verdict,
        oracle_factor_count: fz.count_with_multiplicity(),
        oracle_factors: factors,
        agreement: disagreement.is_none(),
        disagreement,
        detail,
    }
}

fn unit_record(t: &TrinomialSpec) -> Result<SweepRecord, CoreError> {
    let f = t.poly();
    let v = classify(t)?;
    let (fz, factors) = oracle_factors(&f)?;
    let mut mismatch = Vec::new();
    let mut structure = Vec::new();
    let oracle_reducible = fz.count_with_multiplicity() > 1;
    if v.status.is_reducible() != oracle_reducible {
        mismatch.push(format!(
            "classifier says {:?}, oracle finds {} factor(s)",
            v.status,
            fz.count_with_multiplicity()
        ));
    }
    mismatch.extend(
        v.diagnostics
            .iter()
            .filter(|d| d.is_mismatch())
            .map(ToString::to_string),
    );
    if let Some(c) = &v.cyclotomic_factor {
        if !c.poly.divides(&f) {
            mismatch.push(format!("emitted factor {} does not divide", c.poly));
        }
    }
    if let Err(e) = structural_factorization(t) {
        structure.push(e.to_string());
    }
    let nonrec: u32 = fz.non_reciprocal().map(|g| g.multiplicity).sum();
    if nonrec > 1 {
        structure.push(format!("{nonrec} non-reciprocal factors"));
    }
    for g in fz
        .factors
        .iter()
        .filter(|g| g.tag == FactorTag::ReciprocalNonCyclotomic)
    {
        structure.push(format!("reciprocal factor {} is not cyclotomic", g.poly));
    }
    Ok(record(
        t,
        format!("{:?}", v.status),
        &fz,
        factors,
        mismatch,
        structure,
    ))
}

fn pk_record(t: &TrinomialSpec) -> Result<SweepRecord, CoreError> {
    let f = t.poly();
    let v = classify_pk(t)?;
    let (fz, factors) = oracle_factors(&f)?;
    let count = fz.count_with_multiplicity();
    let mut mismatch = Vec::new();
    let mut structure = Vec::new();
    match v.status {
        PkStatus::IrreducibleByTheorem if count != 1 => {
            mismatch.push(format!("claimed irreducible, oracle finds {count} factors"));
        }
        PkStatus::KnownReducibleFamily => {
            let mut explicit = v.explicit_factors.clone().unwrap_or_default();
            explicit.sort_by(trinomial_core::factor::canonical_order);
            let oracle: Vec<IntPoly> = factors.iter().map(|p| p.0.clone()).collect();
            if explicit != oracle {
                mismatch.push("explicit factors differ from the oracle".into());
            }
        }
        _ => {}
    }
    if let Some(b) = v.bound {
        if count > b {
            structure.push(format!("{count} factors exceed the bound {b}"));
        }
    }
    let p = BigInt::from(v.prime);
    // factor-level guarantees only accompany a proven bound
    let guaranteed = if v.bound.is_some() {
        fz.factors.as_slice()
    } else {
        &[]
    };
    for g in guaranteed {
        if g.multiplicity > 1 {
            structure.push(format!("repeated factor {}", g.poly));
        }
        if g.tag.is_reciprocal() {
            structure.push(format!("reciprocal factor {}", g.poly));
        }
        if g.poly.constant_term().abs() < p {
            structure.push(format!(
                "factor {} has constant term smaller than {p}",
                g.poly
            ));
        }
    }
    if v.exponent >= 2 && !roots_outside_unit_disk(&f)? {
        structure.push("a root lies in the closed unit disk".into());
    }
    Ok(record(
        t,
        format!("{:?}", v.status),
        &fz,
        factors,
        mismatch,
        structure,
    ))
}

fn specs_of_degree(opts: &SweepOptions, n: usize) -> Vec<TrinomialSpec> {
    match opts.family {
        Family::Unit => TrinomialSpec::all_unit(n).collect(),
        Family::PrimePower => TrinomialSpec::all_unit(n)
            .flat_map(|u| {
                opts.primes.iter().flat_map(move |&p| {
                    opts.exponents
                        .iter()
                        .map(move |&k| TrinomialSpec { c: p.pow(k), ..u })
                })
            })
            .collect(),
    }
}

pub fn build_sweep(opts: &SweepOptions) -> Result<SweepReport, CliError> {
    if opts.max_n < 2 {
        return Err(CliError::Range("--max-n must be at least 2".into()));
    }
    if opts.family == Family::PrimePower {
        for &p in &opts.primes {
            for &k in &opts.exponents {
                prime_power_constant(p, k)?;
            }
        }
    }
    let per_degree: Vec<Vec<SweepRecord>> = (2..=opts.max_n)
        .into_par_iter()
        .map(|n| {
            specs_of_degree(opts, n)
                .iter()
                .map(|t| match opts.family {
                    Family::Unit => unit_record(t),
                    Family::PrimePower => pk_record(t),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let records: Vec<SweepRecord> = per_degree.into_iter().flatten().collect();
    let summary = SweepReport::summarize(&records);
    let (primes, exponents) = match opts.family {
        Family::Unit => (vec![], vec![]),
        Family::PrimePower => (opts.primes.clone(), opts.exponents.clone()),
    };
    Ok(SweepReport {
        ranges: SweepRanges {
            family: opts.family,
            n_min: 2,
            n_max: opts.max_n,
            m_range: "1..n".into(),
            signs: vec![[-1, -1], [-1, 1], [1, -1], [1, 1]],
            primes,
            exponents,
        },
        records,
        summary,
    })
}

pub fn sweep_exit(report: &SweepReport) -> Exit {
    if report.summary.structure_violations > 0 {
        Exit::StructureViolation
    } else if report.summary.mismatches > 0 {
        Exit::Mismatch
    } else {
        Exit::Success
    }
}

pub fn render_sweep(report: &SweepReport, format: Format) -> String {
    match format {
        Format::JsonLines => report.to_json_lines(),
        Format::Text => {
            let mut s = String::new();
            for r in &report.records {
                let spec = r
                    .spec
                    .to_spec()
                    .map_or_else(|| format!("{:?}", r.spec), |t| t.to_string());
                let flag = if r.agreement {
                    "ok".to_string()
                } else {
                    format!("DISAGREE: {}", r.detail)
                };
                writeln!(
                    s,
                    "{spec}: {} | oracle {} factor(s) | {flag}",
                    r.verdict, r.oracle_factor_count
                )
                .unwrap();
            }
            let m = &report.summary;
            writeln!(
                s,
                "instances {}, agreements {}, mismatches {}, structure violations {}, reducible {}",
                m.instances, m.agreements, m.mismatches, m.structure_violations, m.reducible
            )
            .unwrap();
            for (k, c) in &m.max_factor_count_per_k {
                writeln!(s, "k = {k}: at most {c} factor(s) observed").unwrap();
            }
            s
        }
    }
}

pub fn run_sweep(opts: &SweepOptions, format: Format) -> CliResult {
    let report = build_sweep(opts)?;
    Ok((render_sweep(&report, format), sweep_exit(&report)))
}

pub fn constant_for(p: Option<u64>, k: Option<u32>) -> Result<u64, CliError> {
    match (p, k) {
        (Some(p), Some(k)) => prime_power_constant(p, k),
        _ => Err(CliError::Range("--p and --k are both required".into())),
    }
}
