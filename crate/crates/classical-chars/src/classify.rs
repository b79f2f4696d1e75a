//! Classification engines: the complete list of irreducible complex
//! character degrees below an explicit bound for each family, assembled from
//! the unipotent symbols of the group itself plus, for every non-central
//! semisimple class of the dual group, the product of the centralizer's
//! p′-index with the unipotent degrees of the centralizer.
//!
//! Every character degree is `(G*:C*)_{p′} · ψ(1)` for a semisimple dual
//! class with centralizer `C` and a unipotent character ψ of `C`. For the
//! adjoint duals (`SOOdd`, `OmegaEven`) the index is exact; for the conformal
//! duals (`PCSp`, `PCOEven`) the index of the *connected* centralizer can
//! drop by a factor of 2 (resp. 2 or 4) under fusion with the central
//! twists, with the character count growing by the same factor. The engines
//! use exact indices for the surviving configurations (where the drop factor
//! is pinned down), and verify every other shape against the conservative
//! `/2` or `/4` lower bound — or the full index when the shape's asymmetric
//! eigenvalue structure rules the twists out.

use crate::centralizers::{
    enumerate_shapes, CentralizerError, CentralizerShape, Core, DualKind,
};
use crate::orders::{GroupFamily, GroupSpec, Sign};
use crate::qpoly::{QPoly, QPolyError};
use crate::symbols::{enumerate_symbols, Family, Symbol, SymbolError};
use crate::unipotent::{
    classical_unipotent_degrees, DegreeBound, DegreeEntry, UnipotentError,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Errors from the classification engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("exclusion failed for shape {shape}: lower bound {lower} does not exceed {bound}")]
    ExclusionFailure {
        shape: String,
        lower: BigInt,
        bound: BigInt,
    },
    #[error("character count does not fit in u64")]
    CountOverflow,
    #[error(transparent)]
    Poly(#[from] QPolyError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
    #[error(transparent)]
    Unipotent(#[from] UnipotentError),
}

/// Where a character degree comes from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    /// A unipotent character of the group itself, labeled by its symbol.
    UnipotentSymbol(String),
    /// A Lusztig series member: dual centralizer shape plus the unipotent
    /// character of the centralizer.
    LusztigPair { shape: String, psi: String },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::UnipotentSymbol(s) => write!(f, "unipotent:{s}"),
            Provenance::LusztigPair { shape, psi } => write!(f, "pair:{shape} :: {psi}"),
        }
    }
}

impl FromStr for Provenance {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("unipotent:") {
            return Ok(Provenance::UnipotentSymbol(rest.to_string()));
        }
        if let Some(rest) = s.strip_prefix("pair:") {
            if let Some((shape, psi)) = rest.split_once(" :: ") {
                return Ok(Provenance::LusztigPair {
                    shape: shape.to_string(),
                    psi: psi.to_string(),
                });
            }
        }
        Err(ClassifyError::InvalidInput(format!(
            "unparsable provenance: {s}"
        )))
    }
}

#[derive(Serialize, Deserialize)]
struct RecordJson {
    degree_coeffs: Vec<String>,
    degree_value: String,
    count: u64,
    provenance: String,
}

/// One distinct (degree, provenance) entry with its character count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RecordJson", into = "RecordJson")]
pub struct CharacterRecord {
    pub degree_poly: QPoly,
    pub degree_value: BigInt,
    pub count: u64,
    pub provenance: Provenance,
}

impl From<CharacterRecord> for RecordJson {
    fn from(r: CharacterRecord) -> Self {
        RecordJson {
            degree_coeffs: r.degree_poly.coeff_strings(),
            degree_value: r.degree_value.to_string(),
            count: r.count,
            provenance: r.provenance.to_string(),
        }
    }
}

impl TryFrom<RecordJson> for CharacterRecord {
    type Error = String;

    fn try_from(j: RecordJson) -> Result<Self, Self::Error> {
        let degree_poly =
            QPoly::from_coeff_strings(&j.degree_coeffs).map_err(|e| e.to_string())?;
        let degree_value =
            BigInt::from_str(&j.degree_value).map_err(|e| e.to_string())?;
        let provenance = Provenance::from_str(&j.provenance).map_err(|e| e.to_string())?;
        Ok(CharacterRecord {
            degree_poly,
            degree_value,
            count: j.count,
            provenance,
        })
    }
}

/// One exclusion-verification entry: a shape that contributes no records,
/// with the proven lower bound on its character degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionEntry {
    pub shape: String,
    /// Exact lower bound for every character degree of the shape's series.
    pub lower: BigInt,
    /// Index-drop divisor that was applied (1, 2, or 4).
    pub divisor: u32,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    group: String,
    q: String,
    bound_coeffs: Vec<String>,
    bound_value: String,
    records: Vec<CharacterRecord>,
    excluded_shapes_verified: usize,
    unsupported_shapes: Vec<String>,
}

/// Full classification output for one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ReportJson", into = "ReportJson")]
pub struct ClassificationReport {
    pub group: String,
    pub q0: BigInt,
    pub bound_poly: QPoly,
    pub bound_value: BigInt,
    pub records: Vec<CharacterRecord>,
    pub excluded_shapes_verified: usize,
    pub unsupported_shapes: Vec<String>,
    /// In-memory only (not serialized): the margin log behind
    /// `excluded_shapes_verified`.
    pub exclusion_log: Vec<ExclusionEntry>,
}

impl From<ClassificationReport> for ReportJson {
    fn from(r: ClassificationReport) -> Self {
        ReportJson {
            group: r.group,
            q: r.q0.to_string(),
            bound_coeffs: r.bound_poly.coeff_strings(),
            bound_value: r.bound_value.to_string(),
            records: r.records,
            excluded_shapes_verified: r.excluded_shapes_verified,
            unsupported_shapes: r.unsupported_shapes,
        }
    }
}

impl TryFrom<ReportJson> for ClassificationReport {
    type Error = String;

    fn try_from(j: ReportJson) -> Result<Self, Self::Error> {
        Ok(ClassificationReport {
            group: j.group,
            q0: BigInt::from_str(&j.q).map_err(|e| e.to_string())?,
            bound_poly: QPoly::from_coeff_strings(&j.bound_coeffs).map_err(|e| e.to_string())?,
            bound_value: BigInt::from_str(&j.bound_value).map_err(|e| e.to_string())?,
            records: j.records,
            excluded_shapes_verified: j.excluded_shapes_verified,
            unsupported_shapes: j.unsupported_shapes,
            exclusion_log: Vec::new(),
        })
    }
}

impl ClassificationReport {
    /// Total number of characters (sum of record counts).
    pub fn total_count(&self) -> u64 {
        self.records.iter().map(|r| r.count).sum()
    }

    /// Records whose provenance is a unipotent symbol.
    pub fn unipotent_records(&self) -> Vec<&CharacterRecord> {
        self.records
            .iter()
            .filter(|r| matches!(r.provenance, Provenance::UnipotentSymbol(_)))
            .collect()
    }
}

/// Re-checks every exclusion entry of a completed report against its bound
/// and returns one human-readable line per shape.
pub fn verify_exclusions(report: &ClassificationReport) -> Result<Vec<String>, ClassifyError> {
    let mut lines = Vec::new();
    for e in &report.exclusion_log {
        if e.lower <= report.bound_value {
            return Err(ClassifyError::ExclusionFailure {
                shape: e.shape.clone(),
                lower: e.lower.clone(),
                bound: report.bound_value.clone(),
            });
        }
        lines.push(format!(
            "excluded {} : degrees >= {} > {} (divisor {})",
            e.shape, e.lower, report.bound_value, e.divisor
        ));
    }
    Ok(lines)
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

fn check_odd(q0: &BigInt) -> Result<(), ClassifyError> {
    if (q0 % BigInt::from(2)).is_zero() || q0 < &BigInt::from(3) {
        return Err(ClassifyError::InvalidInput(format!(
            "q must be an odd prime power >= 3, got {q0}"
        )));
    }
    Ok(())
}

fn count_u64(c: &BigInt) -> Result<u64, ClassifyError> {
    u64::try_from(c.clone()).map_err(|_| ClassifyError::CountOverflow)
}

fn make_record(
    degree_poly: QPoly,
    q0: &BigInt,
    count: u64,
    provenance: Provenance,
) -> Result<CharacterRecord, ClassifyError> {
    let degree_value = degree_poly.eval_int(q0)?;
    Ok(CharacterRecord {
        degree_poly,
        degree_value,
        count,
        provenance,
    })
}

fn sort_records(records: &mut [CharacterRecord]) {
    records.sort_by(|a, b| {
        a.degree_value
            .cmp(&b.degree_value)
            .then_with(|| a.provenance.to_string().cmp(&b.provenance.to_string()))
    });
}

/// Unipotent records of the group itself: the family's rank-`n` symbols with
/// degree value within `limit` (inclusive).
fn unipotent_records(
    n: u32,
    family: Family,
    q0: &BigInt,
    limit: &BigInt,
    strict: bool,
) -> Result<Vec<CharacterRecord>, ClassifyError> {
    let mut out = Vec::new();
    for ch in enumerate_symbols(n as u64, family) {
        let deg = ch.symbol.degree()?;
        let val = deg.eval_int(q0)?;
        let admit = if strict { &val < limit } else { &val <= limit };
        if admit {
            out.push(make_record(
                deg,
                q0,
                1,
                Provenance::UnipotentSymbol(ch.to_string()),
            )?);
        }
    }
    Ok(out)
}

/// Cartesian product of per-factor entry lists, keeping only products whose
/// total degree times `base` stays within `limit` at `q0`.
fn bounded_products(
    sets: &[Vec<DegreeEntry>],
    base: &QPoly,
    q0: &BigInt,
    limit: &BigInt,
) -> Result<Vec<DegreeEntry>, ClassifyError> {
    let mut acc = vec![DegreeEntry {
        degree: QPoly::one(),
        multiplicity: 1,
        label: String::new(),
    }];
    for set in sets {
        let mut next = Vec::new();
        for prefix in &acc {
            for e in set {
                let degree = &prefix.degree * &e.degree;
                let total = base * &degree;
                if &total.eval_int(q0)? <= limit {
                    let label = if prefix.label.is_empty() {
                        e.label.clone()
                    } else {
                        format!("{} * {}", prefix.label, e.label)
                    };
                    next.push(DegreeEntry {
                        degree,
                        multiplicity: prefix.multiplicity * e.multiplicity,
                        label,
                    });
                }
            }
        }
        acc = next;
    }
    for e in &mut acc {
        if e.label.is_empty() {
            e.label = "1".into();
        }
    }
    Ok(acc)
}

/// Factor sets at symbol level: even orthogonal cores use the connected
/// (`SO`-type) symbol enumeration, one entry per symbol character. Used by
/// the engines whose counting is at (class, symbol) granularity.
fn connected_factor_sets(
    shape: &CentralizerShape,
    bound: Option<&DegreeBound>,
) -> Result<Vec<Vec<DegreeEntry>>, ClassifyError> {
    let mut sets = Vec::new();
    for f in shape.factors() {
        let spec = if f.family == GroupFamily::OEven {
            GroupSpec::new(GroupFamily::SOEven, f.rank, f.ext, f.sign)
        } else {
            f
        };
        sets.push(classical_unipotent_degrees(&spec, bound)?.entries);
    }
    Ok(sets)
}

// ---------------------------------------------------------------------------
// Symplectic groups Sp_{2n}(q), q odd, n >= 6
// ---------------------------------------------------------------------------

/// Per-factor admission rule for the structurally surviving shapes.
enum Admission {
    /// Every unipotent character of the factor is admitted.
    Full,
    /// Only the degree-1 entries (trivial character and its extensions).
    TrivialOnly,
    /// Entries with degree value at most the given limit.
    AtMost(BigInt),
}

/// The structurally surviving shape kinds of the symplectic classification,
/// as per-factor admission lists aligned with `shape.factors()`.
fn symplectic_kind(n: u32, shape: &CentralizerShape, q0: &BigInt) -> Option<Vec<Admission>> {
    let Core::SoOddPair { k, mk, .. } = shape.core else {
        return None;
    };
    let r: u32 = shape.linear.iter().map(|f| f.k * f.a).sum();
    let sub_bound = |e: u32| q0.pow(e);
    let lin_full = |count: usize| std::iter::repeat_with(|| Admission::Full).take(count);
    match (k, mk, r) {
        // SO_{2n-3} x (rank-2 worth of GL factors): full linear sets.
        (k2, 0, 2) if k2 == n - 2 => {
            let mut v = vec![Admission::TrivialOnly];
            v.extend(lin_full(shape.linear.len()));
            Some(v)
        }
        // O_{2n-2} x GL1: trivial extensions only.
        (0, m1, 1) if m1 == n - 1 && shape.linear[0].a == 1 && shape.linear[0].k == 1 => {
            Some(vec![Admission::TrivialOnly, Admission::Full])
        }
        // SO_{2n-1} x GL1: the small-degree list of the odd group one rank
        // down (everything up to q^{4(n-1)-8}).
        (k1, 0, 1) if k1 == n - 1 && shape.linear[0].a == 1 && shape.linear[0].k == 1 => {
            Some(vec![Admission::AtMost(sub_bound(4 * n - 12)), Admission::Full])
        }
        // SO_{2n-3} x O2 x GL1.
        (k2, 1, 1) if k2 == n - 2 && shape.linear[0].a == 1 && shape.linear[0].k == 1 => {
            Some(vec![Admission::TrivialOnly, Admission::Full, Admission::Full])
        }
        // SO_{2n-1} x O2.
        (k1, 1, 0) if k1 == n - 1 => {
            Some(vec![Admission::AtMost(sub_bound(4 * n - 12)), Admission::Full])
        }
        // O_{2n}: entries up to q^{4n-10}.
        (0, m0, 0) if m0 == n => Some(vec![Admission::AtMost(sub_bound(4 * n - 10))]),
        // SO_3 x O_{2n-2}.
        (1, m1, 0) if m1 == n - 1 => Some(vec![Admission::Full, Admission::TrivialOnly]),
        // SO_{2n-3} x O4.
        (k2, 2, 0) if k2 == n - 2 => Some(vec![Admission::TrivialOnly, Admission::Full]),
        _ => None,
    }
}

/// Classification for `Sp_{2n}(q)`: the structural list (14 unipotent
/// characters plus the survivors of the eight shape kinds), with every other
/// shape and every non-admitted ψ verified to exceed the bound
/// `D = (q^n - 1) q^{4n-10} / 2` at `q`.
pub fn classify_symplectic(n: u32, q0: &BigInt) -> Result<ClassificationReport, ClassifyError> {
    if n < 6 {
        return Err(ClassifyError::InvalidInput(format!(
            "symplectic classification needs n >= 6, got {n}"
        )));
    }
    check_odd(q0)?;
    let bound_poly = &(&QPoly::q_pow_plus(n as usize, -1) * &QPoly::q_pow((4 * n - 10) as usize))
        * &QPoly::constant(crate::qpoly::ratio(1, 2));
    let bound_value = bound_poly.eval_int(q0)?;

    // Unipotent part: everything below the degree of the first symbol
    // outside the low list, which is (0 3 n-2; -).
    let gate = Symbol::new(Family::BC, vec![0, 3, n - 2], vec![])?
        .degree()?
        .eval_int(q0)?;
    let mut records = unipotent_records(n, Family::BC, q0, &gate, true)?;

    let mut excluded = 0usize;
    let mut log = Vec::new();
    let unsupported = Vec::new();
    for shape in enumerate_shapes(DualKind::SOOdd, n) {
        if shape.is_trivial() {
            continue;
        }
        let index = shape.index_pprime()?;
        let index_value = index.eval_int(q0)?;
        match symplectic_kind(n, &shape, q0) {
            Some(admissions) => {
                let classes = count_u64(&shape.count_classes(q0)?)?;
                // Build admitted per-factor sets and track the smallest
                // excluded factor degree for the margin check.
                let mut sets: Vec<Vec<DegreeEntry>> = Vec::new();
                let mut min_excluded: Option<BigInt> = None;
                for (f, adm) in shape.factors().iter().zip(admissions.iter()) {
                    let full = classical_unipotent_degrees(f, None)?.entries;
                    let mut admitted = Vec::new();
                    for e in full {
                        let val = e.degree.eval_int(q0)?;
                        let keep = match adm {
                            Admission::Full => true,
                            Admission::TrivialOnly => e.degree.is_one(),
                            Admission::AtMost(limit) => &val <= limit,
                        };
                        if keep {
                            admitted.push(e);
                        } else if min_excluded.as_ref().map(|m| &val < m).unwrap_or(true) {
                            min_excluded = Some(val);
                        }
                    }
                    sets.push(admitted);
                }
                if classes > 0 {
                    // No χ-filter here: the structural list includes every
                    // admitted ψ even when its value exceeds the bound.
                    let mut acc = vec![DegreeEntry {
                        degree: QPoly::one(),
                        multiplicity: 1,
                        label: String::new(),
                    }];
                    for set in &sets {
                        let mut next = Vec::new();
                        for prefix in &acc {
                            for e in set {
                                let label = if prefix.label.is_empty() {
                                    e.label.clone()
                                } else {
                                    format!("{} * {}", prefix.label, e.label)
                                };
                                next.push(DegreeEntry {
                                    degree: &prefix.degree * &e.degree,
                                    multiplicity: prefix.multiplicity * e.multiplicity,
                                    label,
                                });
                            }
                        }
                        acc = next;
                    }
                    for psi in acc {
                        records.push(make_record(
                            &index * &psi.degree,
                            q0,
                            classes * psi.multiplicity as u64,
                            Provenance::LusztigPair {
                                shape: shape.label(),
                                psi: if psi.label.is_empty() {
                                    "1".into()
                                } else {
                                    psi.label
                                },
                            },
                        )?);
                    }
                }
                // The first non-admitted ψ must already exceed the bound.
                if let Some(me) = min_excluded {
                    let lower = &index_value * &me;
                    if lower <= bound_value {
                        return Err(ClassifyError::ExclusionFailure {
                            shape: shape.label(),
                            lower,
                            bound: bound_value,
                        });
                    }
                    log.push(ExclusionEntry {
                        shape: format!("{} (non-admitted psi)", shape.label()),
                        lower,
                        divisor: 1,
                    });
                }
            }
            None => {
                if index_value <= bound_value {
                    return Err(ClassifyError::ExclusionFailure {
                        shape: shape.label(),
                        lower: index_value,
                        bound: bound_value,
                    });
                }
                excluded += 1;
                log.push(ExclusionEntry {
                    shape: shape.label(),
                    lower: index_value,
                    divisor: 1,
                });
            }
        }
    }
    sort_records(&mut records);
    Ok(ClassificationReport {
        group: format!("Sp{}({})", 2 * n, q0),
        q0: q0.clone(),
        bound_poly,
        bound_value,
        records,
        excluded_shapes_verified: excluded,
        unsupported_shapes: unsupported,
        exclusion_log: log,
    })
}

// ---------------------------------------------------------------------------
// Odd spin groups Spin_{2n+1}(q), q odd, n >= 5
// ---------------------------------------------------------------------------

/// Classification for `Spin_{2n+1}(q)`: all degrees up to `q^{4n-8}`.
pub fn classify_spin_odd(n: u32, q0: &BigInt) -> Result<ClassificationReport, ClassifyError> {
    if n < 5 {
        return Err(ClassifyError::InvalidInput(format!(
            "odd spin classification needs n >= 5, got {n}"
        )));
    }
    check_odd(q0)?;
    let bound_poly = QPoly::q_pow((4 * n - 8) as usize);
    let bound_value = bound_poly.eval_int(q0)?;
    let limit = bound_value.clone();

    let mut records = unipotent_records(n, Family::BC, q0, &limit, false)?;
    let mut excluded = 0usize;
    let mut log = Vec::new();
    let dbound = DegreeBound::new(q0.clone(), limit.clone());

    for shape in enumerate_shapes(DualKind::PCSp, n) {
        if shape.is_trivial() {
            continue;
        }
        let index = shape.index_pprime()?;
        let index_value = index.eval_int(q0)?;
        // Exactly handled configurations: a pure pair of symplectic cores
        // (the ±√τ eigenvalue split, full-index series), and the core one
        // rank down with a single degree-one eigenvalue orbit.
        let exact = match shape.core {
            Core::SpPair { .. } if shape.linear.is_empty() && shape.tau_square => true,
            Core::SpPair { k: 0, mk, .. }
                if mk == n - 1
                    && shape.tau_square
                    && shape.linear.len() == 1
                    && shape.linear[0].a == 1
                    && shape.linear[0].k == 1 =>
            {
                true
            }
            _ => false,
        };
        if exact {
            let classes = count_u64(&shape.count_classes(q0)?)?;
            let sets = connected_factor_sets(&shape, Some(&dbound))?;
            let psis = bounded_products(&sets, &index, q0, &limit)?;
            let mut produced = false;
            for psi in &psis {
                if classes == 0 {
                    break;
                }
                produced = true;
                records.push(make_record(
                    &index * &psi.degree,
                    q0,
                    classes * psi.multiplicity as u64,
                    Provenance::LusztigPair {
                        shape: shape.label(),
                        psi: psi.label.clone(),
                    },
                )?);
            }
            if !produced {
                excluded += 1;
                // With a nonempty class pool, non-production means every
                // ψ-product exceeded the limit; an empty pool needs no
                // degree margin at all.
                if classes > 0 {
                    log.push(ExclusionEntry {
                        shape: shape.label(),
                        lower: index_value,
                        divisor: 1,
                    });
                }
            }
        } else {
            // Conservative bound: the connected-centralizer index is at
            // least half the similitude-quotient index.
            let lower = index_value / BigInt::from(2);
            if lower <= limit {
                return Err(ClassifyError::ExclusionFailure {
                    shape: shape.label(),
                    lower,
                    bound: limit,
                });
            }
            excluded += 1;
            log.push(ExclusionEntry {
                shape: shape.label(),
                lower,
                divisor: 2,
            });
        }
    }
    sort_records(&mut records);
    Ok(ClassificationReport {
        group: format!("Spin{}({})", 2 * n + 1, q0),
        q0: q0.clone(),
        bound_poly,
        bound_value,
        records,
        excluded_shapes_verified: excluded,
        unsupported_shapes: Vec::new(),
        exclusion_log: log,
    })
}

// ---------------------------------------------------------------------------
// Even orthogonal groups Omega^±_{2n}(q), q even, n >= 5
// ---------------------------------------------------------------------------

fn omega_bound_poly(n: u32, sign: Sign) -> QPoly {
    if n == 5 && sign == Sign::Minus {
        // (q-1)(q^2+1)(q^3-1)(q^4+1)
        let mut p = QPoly::q_pow_plus(1, -1);
        p = &p * &QPoly::q_pow_plus(2, 1);
        p = &p * &QPoly::q_pow_plus(3, -1);
        &p * &QPoly::q_pow_plus(4, 1)
    } else {
        QPoly::q_pow_plus((4 * n - 10) as usize, 1)
    }
}

/// Classification for `Ω^sign_{2n}(q)`, q even: all degrees up to
/// `q^{4n-10}` inclusive (for `(n,sign) = (5,−)` this extends past the
/// smallest non-listed degree, which is the reported bound).
pub fn classify_omega_even(
    n: u32,
    q0: &BigInt,
    sign: Sign,
) -> Result<ClassificationReport, ClassifyError> {
    if n < 5 {
        return Err(ClassifyError::InvalidInput(format!(
            "even orthogonal classification needs n >= 5, got {n}"
        )));
    }
    if !(q0 % BigInt::from(2)).is_zero() || q0 < &BigInt::from(2) {
        return Err(ClassifyError::InvalidInput(format!(
            "q must be a power of 2, got {q0}"
        )));
    }
    if n == 5 && q0 == &BigInt::from(2) && sign == Sign::Plus {
        return Err(ClassifyError::InvalidInput(
            "the (n, q, sign) = (5, 2, +) case is outside the supported range".into(),
        ));
    }
    let bound_poly = omega_bound_poly(n, sign);
    let bound_value = bound_poly.eval_int(q0)?;
    let limit = q0.pow(4 * n - 10);
    let family = match sign {
        Sign::Plus => Family::DPlus,
        Sign::Minus => Family::DMinus,
    };
    let mut records = unipotent_records(n, family, q0, &limit, false)?;
    let mut excluded = 0usize;
    let mut log = Vec::new();
    let mut unsupported = Vec::new();
    let dbound = DegreeBound::new(q0.clone(), limit.clone());
    let half = QPoly::constant(crate::qpoly::ratio(1, 2));

    for shape in enumerate_shapes(DualKind::OmegaEven(sign), n) {
        if shape.is_trivial() {
            continue;
        }
        let index = shape.index_pprime()?;
        // A pure-linear centralizer lies inside Omega, so the Omega-index is
        // half the full orthogonal index (and the class count doubles).
        let chi_base = if shape.core.budget() == 0 {
            &index * &half
        } else {
            index.clone()
        };
        let base_value = chi_base.eval_int(q0)?;
        if base_value > limit {
            excluded += 1;
            log.push(ExclusionEntry {
                shape: shape.label(),
                lower: base_value,
                divisor: 1,
            });
            continue;
        }
        let classes = match shape.count_classes(q0) {
            Ok(c) => count_u64(&c)?,
            Err(CentralizerError::UnsupportedShape(msg)) => {
                unsupported.push(format!("{}: {msg}", shape.label()));
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let sets = connected_factor_sets(&shape, Some(&dbound))?;
        let psis = bounded_products(&sets, &chi_base, q0, &limit)?;
        let mut produced = false;
        for psi in &psis {
            if classes == 0 {
                break;
            }
            produced = true;
            records.push(make_record(
                &chi_base * &psi.degree,
                q0,
                classes * psi.multiplicity as u64,
                Provenance::LusztigPair {
                    shape: shape.label(),
                    psi: psi.label.clone(),
                },
            )?);
        }
        if !produced {
            // Only an empty class pool reaches here (ψ = 1 is always
            // admitted once the base value fits), so no margin is needed.
            excluded += 1;
        }
    }
    sort_records(&mut records);
    Ok(ClassificationReport {
        group: format!("Omega{}{}({})", 2 * n, sign, q0),
        q0: q0.clone(),
        bound_poly,
        bound_value,
        records,
        excluded_shapes_verified: excluded,
        unsupported_shapes: unsupported,
        exclusion_log: log,
    })
}

// ---------------------------------------------------------------------------
// Even spin groups Spin^±_{2n}(q), q odd, n >= 5
// ---------------------------------------------------------------------------

/// Shared engine for the even spin groups, parameterized by the inclusion
/// limit so the n = 6, q = 3 deep scan can reuse it with a larger bound.
fn spin_even_engine(
    n: u32,
    q0: &BigInt,
    sign: Sign,
    bound_poly: QPoly,
    limit: BigInt,
    group: String,
) -> Result<ClassificationReport, ClassifyError> {
    check_odd(q0)?;
    let bound_value = bound_poly.eval_int(q0)?;
    let family = match sign {
        Sign::Plus => Family::DPlus,
        Sign::Minus => Family::DMinus,
    };
    let mut records = unipotent_records(n, family, q0, &limit, false)?;
    let mut excluded = 0usize;
    let mut log = Vec::new();
    let dbound = DegreeBound::new(q0.clone(), limit.clone());
    let n_even = n.is_multiple_of(2);
    let two = BigInt::from(2);

    for shape in enumerate_shapes(DualKind::PCOEven(sign), n) {
        if shape.is_trivial() {
            continue;
        }
        let index = shape.index_pprime()?;
        let index_value = index.eval_int(q0)?;

        // Pure core pair (±√τ eigenvalues only): full index, two linear
        // characters of the disconnected centralizer per symbol.
        let pure_pair = matches!(shape.core, Core::OPair { .. })
            && shape.linear.is_empty()
            && shape.tau_square;
        // Core one rank down with one degree-one eigenvalue orbit: full
        // index, one character per class and symbol.
        let core_plus_orbit = matches!(
            shape.core,
            Core::OPair { k: 0, mk, .. } if mk == n - 1
        ) && shape.tau_square
            && shape.linear.len() == 1
            && shape.linear[0].a == 1
            && shape.linear[0].k == 1;
        // Single full-rank linear block (GL_n or GU_n eigenvalue pair):
        // transcribed fusion data.
        let full_linear = shape.core.budget() == 0
            && shape.linear.len() == 1
            && shape.linear[0].a == n
            && shape.linear[0].k == 1;

        if pure_pair || core_plus_orbit {
            let per_symbol: u64 = if pure_pair { 2 } else { 1 };
            let classes = count_u64(&shape.count_classes(q0)?)?;
            let sets = connected_factor_sets(&shape, Some(&dbound))?;
            let psis = bounded_products(&sets, &index, q0, &limit)?;
            let mut produced = false;
            for psi in &psis {
                if classes == 0 {
                    break;
                }
                produced = true;
                records.push(make_record(
                    &index * &psi.degree,
                    q0,
                    classes * per_symbol * psi.multiplicity as u64,
                    Provenance::LusztigPair {
                        shape: shape.label(),
                        psi: psi.label.clone(),
                    },
                )?);
            }
            if !produced {
                excluded += 1;
                // Margin only applies with a nonempty class pool; an empty
                // pool contributes nothing regardless of degree.
                if classes > 0 {
                    log.push(ExclusionEntry {
                        shape: shape.label(),
                        lower: index_value,
                        divisor: 1,
                    });
                }
            }
        } else if full_linear {
            // Fusion with the central twists: the connected index drops by
            // c and the series gains c characters per class. The drop and
            // the class counts depend on the eigenvalue-pair symmetry.
            let is_gu = shape.linear[0].sign == Sign::Minus;
            let pool_plus = (q0 - BigInt::from(3)) / &two; // split orbits
            let pool_minus = (q0 - BigInt::from(1)) / &two; // non-split
            let pool_minus_tw = (q0 + BigInt::from(1)) / &two;
            let (c, count): (u32, BigInt) = if !n_even {
                let cnt = match (is_gu, shape.tau_square) {
                    (true, true) => pool_minus.clone(),
                    (true, false) => pool_minus_tw.clone(),
                    (false, true) => pool_plus.clone(),
                    (false, false) => pool_minus.clone(),
                };
                (2, cnt)
            } else {
                match (is_gu, shape.tau_square) {
                    (true, true) => (4, &two * (q0 - BigInt::from(1))),
                    (true, false) => (2, pool_minus_tw.clone()),
                    (false, true) => (2, pool_plus.clone()),
                    (false, false) => (4, &two * (q0 - BigInt::from(1))),
                }
            };
            let chi_base = &index * &QPoly::constant(crate::qpoly::ratio(1, c as i64));
            let base_value = chi_base.eval_int(q0)?;
            let classes = count_u64(&count)?;
            if classes == 0 {
                excluded += 1;
                continue;
            }
            if base_value > limit {
                excluded += 1;
                log.push(ExclusionEntry {
                    shape: shape.label(),
                    lower: base_value,
                    divisor: c,
                });
                continue;
            }
            let sets = connected_factor_sets(&shape, Some(&dbound))?;
            let psis = bounded_products(&sets, &chi_base, q0, &limit)?;
            for psi in &psis {
                records.push(make_record(
                    &chi_base * &psi.degree,
                    q0,
                    classes * psi.multiplicity as u64,
                    Provenance::LusztigPair {
                        shape: shape.label(),
                        psi: psi.label.clone(),
                    },
                )?);
            }
        } else {
            // Fusion with a central twist requires the twist to preserve the
            // eigenvalue structure. A single-sided ±√τ core is moved by
            // every nontrivial twist (full index); an asymmetric two-sided
            // pair still rules out the negation twist (at most /2);
            // otherwise use the conservative /4.
            let asymmetric_pair =
                matches!(shape.core, Core::OPair { k, mk, .. } if k != mk) && shape.tau_square;
            let divisor: u32 = if asymmetric_pair { 1 } else { 4 };
            let lower = index_value / BigInt::from(divisor);
            if lower <= limit {
                return Err(ClassifyError::ExclusionFailure {
                    shape: shape.label(),
                    lower,
                    bound: limit,
                });
            }
            excluded += 1;
            log.push(ExclusionEntry {
                shape: shape.label(),
                lower,
                divisor,
            });
        }
    }
    sort_records(&mut records);
    Ok(ClassificationReport {
        group,
        q0: q0.clone(),
        bound_poly,
        bound_value,
        records,
        excluded_shapes_verified: excluded,
        unsupported_shapes: Vec::new(),
        exclusion_log: log,
    })
}

/// Classification for `Spin^sign_{2n}(q)`, q odd: all degrees up to
/// `q^{4n-10}` inclusive.
pub fn classify_spin_even(
    n: u32,
    q0: &BigInt,
    sign: Sign,
) -> Result<ClassificationReport, ClassifyError> {
    if n < 5 {
        return Err(ClassifyError::InvalidInput(format!(
            "even spin classification needs n >= 5, got {n}"
        )));
    }
    let bound_poly = omega_bound_poly(n, sign);
    let limit = q0.pow(4 * n - 10);
    spin_even_engine(
        n,
        q0,
        sign,
        bound_poly,
        limit,
        format!("Spin{}{}({})", 2 * n, sign, q0),
    )
}

/// The deep scan of `Spin^±_12(3)`: all degrees strictly below `4·3^15`.
pub fn classify_spin12_q3(sign: Sign) -> Result<ClassificationReport, ClassifyError> {
    let q0 = BigInt::from(3);
    let bound_poly = &QPoly::q_pow(15) * &QPoly::int(4);
    let limit = bound_poly.eval_int(&q0)? - BigInt::one();
    spin_even_engine(6, &q0, sign, bound_poly, limit, format!("Spin12{}(3)", sign))
}
