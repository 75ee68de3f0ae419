//! Machine-readable records. One JSON object per line, discriminated by a
//! `"kind"` field; polynomials are `{"coeffs": [c0, c1, ...]}` with
//! coefficients as exact decimal JSON numbers, lowest degree first.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use trinomial_core::{IntPoly, Sign, TrinomialSpec};

/// Serde wrapper writing an [`IntPoly`] as `{"coeffs": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyJson(pub IntPoly);

#[derive(Serialize, Deserialize)]
struct CoeffsRepr {
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for PolyJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .0
            .coeffs()
            .iter()
            .map(|c| {
                c.to_string()
                    .parse::<serde_json::Number>()
                    .expect("decimal integer")
            })
            .collect();
        CoeffsRepr { coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = CoeffsRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|n| n.to_string().parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyJson(IntPoly::new(coeffs)))
    }
}

/// Flat, serializable form of a [`TrinomialSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub n: usize,
    pub m: usize,
    pub eps1: i64,
    pub eps2: i64,
    pub c: u64,
}

impl From<&TrinomialSpec> for SpecJson {
    fn from(t: &TrinomialSpec) -> Self {
        SpecJson {
            n: t.n,
            m: t.m,
            eps1: t.eps1.value(),
            eps2: t.eps2.value(),
            c: t.c,
        }
    }
}

impl SpecJson {
    pub fn to_spec(self) -> Option<TrinomialSpec> {
        TrinomialSpec::new(
            self.n,
            self.m,
            Sign::from_value(self.eps1)?,
            Sign::from_value(self.eps2)?,
            self.c,
        )
        .ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `x^n + e1 x^m + e2`.
    Unit,
    /// `x^n + e1 x^m + e2 p^k`.
    PrimePower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRanges {
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    /// Every `m` in `1..n` and all four sign patterns are covered.
    pub m_range: String,
    pub signs: Vec<[i64; 2]>,
    pub primes: Vec<u64>,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Disagreement {
    /// The classifier and the factorization oracle disagree.
    Mismatch,
    /// A structural statement about the factors fails.
    StructureViolation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub spec: SpecJson,
    pub poly: PolyJson,
    /// Classifier status, e.g. `"Reducible"` or `"BoundedFactorCount"`.
    pub verdict: String,
    pub oracle_factor_count: u32,
    pub oracle_factors: Vec<PolyJson>,
    pub agreement: bool,
    pub disagreement: Option<Disagreement>,
    /// Non-empty whenever `agreement` is false.
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub agreements: usize,
    pub mismatches: usize,
    pub structure_violations: usize,
    pub reducible: usize,
    /// Largest oracle factor count seen for each exponent `k`.
    pub max_factor_count_per_k: BTreeMap<u32, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub ranges: SweepRanges,
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Line {
    Header(SweepRanges),
    Record(SweepRecord),
    Summary(SweepSummary),
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },
    #[error("line {line}: {message}")]
    Layout { line: usize, message: String },
}

impl SweepReport {
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        let mut push = |l: &Line| {
            out.push_str(&serde_json::to_string(l).expect("serializable"));
            out.push('\n');
        };
        push(&Line::Header(self.ranges.clone()));
        for r in &self.records {
            push(&Line::Record(r.clone()));
        }
        push(&Line::Summary(self.summary.clone()));
        out
    }

    pub fn from_json_lines(text: &str) -> Result<Self, ReportError> {
        let mut ranges = None;
        let mut records = Vec::new();
        let mut summary = None;
        for (i, raw) in text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            let line = i + 1;
            let layout = |message: &str| ReportError::Layout {
                line,
                message: message.to_string(),
            };
            if summary.is_some() {
                return Err(layout("content after summary"));
            }
            match serde_json::from_str(raw).map_err(|source| ReportError::Json { line, source })? {
                Line::Header(h) if ranges.is_none() => ranges = Some(h),
                Line::Header(_) => return Err(layout("second header")),
                Line::Record(_) | Line::Summary(_) if ranges.is_none() => {
                    return Err(layout("missing header"))
                }
                Line::Record(r) => records.push(r),
                Line::Summary(s) => summary = Some(s),
            }
        }
        let line = text.lines().count();
        Ok(SweepReport {
            ranges: ranges.ok_or(ReportError::Layout {
                line,
                message: "missing header".into(),
            })?,
            records,
            summary: summary.ok_or(ReportError::Layout {
                line,
                message: "missing summary".into(),
            })?,
        })
    }

    /// Rebuilds the summary from the records.
    pub fn summarize(records: &[SweepRecord]) -> SweepSummary {
        let mut s = SweepSummary {
            instances: records.len(),
            ..Default::default()
        };
        for r in records {
            if r.agreement {
                s.agreements += 1;
            }
            match r.disagreement {
                Some(Disagreement::Mismatch) => s.mismatches += 1,
                Some(Disagreement::StructureViolation) => s.structure_violations += 1,
                None => {}
            }
            if r.oracle_factor_count > 1 {
                s.reducible += 1;
            }
            if r.spec.c > 1 {
                let k = trinomial_core::arith::prime_power(r.spec.c).map_or(0, |(_, k)| k);
                let e = s.max_factor_count_per_k.entry(k).or_insert(0);
                *e = (*e).max(r.oracle_factor_count);
            }
        }
        s
    }
}
