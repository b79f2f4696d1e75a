//! Unipotent character degrees of centralizer factors, and their products
//! over a whole centralizer shape.
//!
//! * `GL_a(q^k)` / `GU_a(q^k)`: one unipotent character per partition of `a`,
//!   with degree given by the q-analog hook formula
//!   `q^{b(λ)} ∏_{i=1}^a (q^i − 1) / ∏_{cells} (q^{h(c)} − 1)` where
//!   `b(λ) = Σ (i−1)λᵢ`; the unitary degrees are obtained by the substitution
//!   `q → −q` followed by sign normalization, and the field extension by
//!   `q → q^k`.
//! * Connected classical factors (`Sp`, `SO_{odd}`, `SO^±_{even}`): the
//!   symbol enumeration of [`crate::symbols`].
//! * Full even orthogonal groups `O^±_{2m}`: each non-degenerate symbol of
//!   `SO^±_{2m}` extends in two ways with unchanged degree; a degenerate
//!   symbol's twin pair fuses into a single character of doubled degree.
//!
//! Degree sets can be truncated by a bound evaluated at a concrete prime
//! power, which keeps the combinatorics small during classification.

use crate::centralizers::{CentralizerError, CentralizerShape};
use crate::orders::{GroupFamily, GroupSpec, Sign};
use crate::qpoly::QPoly;
use crate::symbols::{enumerate_symbols, Family, SymbolError};
use num_bigint::BigInt;

/// Truncation rule: keep entries whose degree value at `q0` is `≤ limit`.
#[derive(Debug, Clone)]
pub struct DegreeBound {
    pub q0: BigInt,
    pub limit: BigInt,
}

impl DegreeBound {
    pub fn new(q0: BigInt, limit: BigInt) -> Self {
        DegreeBound { q0, limit }
    }

    pub fn admits(&self, degree: &QPoly) -> bool {
        match degree.eval_int(&self.q0) {
            Ok(v) => v <= self.limit,
            Err(_) => false,
        }
    }
}

/// One unipotent character degree of a factor, with multiplicity (how many
/// characters share it structurally, e.g. the two extensions to `O^±`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeEntry {
    pub degree: QPoly,
    pub multiplicity: u32,
    pub label: String,
}

/// Unipotent character degrees of a single group factor.
#[derive(Debug, Clone)]
pub struct FactorCharacterSet {
    pub factor: GroupSpec,
    pub entries: Vec<DegreeEntry>,
}

/// Errors while building degree sets.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UnipotentError {
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
    #[error("no unipotent character model for factor {0}")]
    UnsupportedFactor(String),
}

/// All partitions of `a` in non-increasing part order.
pub fn partitions(a: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            acc.push(part);
            rec(rem - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, a, &mut Vec::new(), &mut out);
    out
}

fn hook_degree(lambda: &[u32]) -> QPoly {
    let a: u32 = lambda.iter().sum();
    // b(λ) = Σ (i−1) λᵢ.
    let b: usize = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| i * p as usize)
        .sum();
    let mut num = QPoly::q_pow(b);
    for i in 1..=a as usize {
        num = &num * &QPoly::q_pow_plus(i, -1);
    }
    // Conjugate partition for hook lengths.
    let cols = lambda.first().copied().unwrap_or(0) as usize;
    let mut conj = vec![0u32; cols];
    for &p in lambda {
        for c in conj.iter_mut().take(p as usize) {
            *c += 1;
        }
    }
    let mut den = QPoly::one();
    for (i, &p) in lambda.iter().enumerate() {
        for (j, &cj) in conj.iter().enumerate().take(p as usize) {
            let hook = (p as usize - j) + (cj as usize - i) - 1;
            den = &den * &QPoly::q_pow_plus(hook, -1);
        }
    }
    num.exact_div(&den)
        .expect("hook formula always divides exactly")
}

/// Unipotent character degrees of `GL_a(q^k)` (`sign = +`) or `GU_a(q^k)`
/// (`sign = −`), one entry per partition of `a`.
pub fn gl_unipotent_degrees(
    a: u32,
    k: u32,
    sign: Sign,
    bound: Option<&DegreeBound>,
) -> FactorCharacterSet {
    let factor = match sign {
        Sign::Plus => GroupSpec::gl(a, k),
        Sign::Minus => GroupSpec::gu(a, k),
    };
    let mut entries = Vec::new();
    for lambda in partitions(a) {
        let mut deg = hook_degree(&lambda);
        if sign == Sign::Minus {
            deg = deg.ennola();
        }
        if k > 1 {
            deg = deg.substitute_q_power(k as usize);
        }
        if bound.map(|b| b.admits(&deg)).unwrap_or(true) {
            let parts: Vec<String> = lambda.iter().map(|p| p.to_string()).collect();
            entries.push(DegreeEntry {
                degree: deg,
                multiplicity: 1,
                label: format!("{factor}[{}]", parts.join(",")),
            });
        }
    }
    FactorCharacterSet { factor, entries }
}

/// Unipotent character degrees of the full even orthogonal group
/// `O^sign_{2m}(q^ext)`: two same-degree extensions per non-degenerate
/// symbol, one fused double-degree character per degenerate twin pair.
pub fn o_even_unipotent_degrees(
    sign: Sign,
    m: u32,
    ext: u32,
    bound: Option<&DegreeBound>,
) -> Result<FactorCharacterSet, UnipotentError> {
    let factor = GroupSpec::new(GroupFamily::OEven, m, ext, Some(sign));
    let mut entries = Vec::new();
    if m == 0 {
        entries.push(DegreeEntry {
            degree: QPoly::one(),
            multiplicity: 1,
            label: "1".into(),
        });
        return Ok(FactorCharacterSet { factor, entries });
    }
    let family = match sign {
        Sign::Plus => Family::DPlus,
        Sign::Minus => Family::DMinus,
    };
    for ch in enumerate_symbols(m as u64, family) {
        let mut deg = ch.symbol.degree()?;
        let (mult, tag) = if ch.symbol.is_degenerate() {
            // The twin pair appears twice in the enumeration; keep only the
            // first twin and fuse.
            if ch.twin_index == 1 {
                continue;
            }
            deg = &deg * &QPoly::int(2);
            (1, "fused")
        } else {
            (2, "2 ext")
        };
        if ext > 1 {
            deg = deg.substitute_q_power(ext as usize);
        }
        if bound.map(|b| b.admits(&deg)).unwrap_or(true) {
            entries.push(DegreeEntry {
                degree: deg,
                multiplicity: mult,
                label: format!("{} ({tag})", ch.symbol.text()),
            });
        }
    }
    Ok(FactorCharacterSet { factor, entries })
}

/// Unipotent character degrees of any modeled factor.
pub fn classical_unipotent_degrees(
    factor: &GroupSpec,
    bound: Option<&DegreeBound>,
) -> Result<FactorCharacterSet, UnipotentError> {
    let trivial = |factor: &GroupSpec| FactorCharacterSet {
        factor: *factor,
        entries: vec![DegreeEntry {
            degree: QPoly::one(),
            multiplicity: 1,
            label: "1".into(),
        }],
    };
    match factor.family {
        GroupFamily::Trivial | GroupFamily::Cyclic => Ok(trivial(factor)),
        GroupFamily::GL => Ok(gl_unipotent_degrees(
            factor.rank, factor.ext, Sign::Plus, bound,
        )),
        GroupFamily::GU => Ok(gl_unipotent_degrees(
            factor.rank, factor.ext, Sign::Minus, bound,
        )),
        GroupFamily::OEven => o_even_unipotent_degrees(
            factor.sign.expect("O even needs a sign"),
            factor.rank,
            factor.ext,
            bound,
        ),
        GroupFamily::Sp | GroupFamily::SOOdd => {
            if factor.rank == 0 {
                return Ok(trivial(factor));
            }
            let mut entries = Vec::new();
            for ch in enumerate_symbols(factor.rank as u64, Family::BC) {
                let mut deg = ch.symbol.degree()?;
                if factor.ext > 1 {
                    deg = deg.substitute_q_power(factor.ext as usize);
                }
                if bound.map(|b| b.admits(&deg)).unwrap_or(true) {
                    entries.push(DegreeEntry {
                        degree: deg,
                        multiplicity: 1,
                        label: ch.to_string(),
                    });
                }
            }
            Ok(FactorCharacterSet { factor: *factor, entries })
        }
        GroupFamily::SOEven | GroupFamily::OmegaEven => {
            if factor.rank == 0 {
                return Ok(trivial(factor));
            }
            let family = match factor.sign.expect("SO even needs a sign") {
                Sign::Plus => Family::DPlus,
                Sign::Minus => Family::DMinus,
            };
            let mut entries = Vec::new();
            for ch in enumerate_symbols(factor.rank as u64, family) {
                let mut deg = ch.symbol.degree()?;
                if factor.ext > 1 {
                    deg = deg.substitute_q_power(factor.ext as usize);
                }
                if bound.map(|b| b.admits(&deg)).unwrap_or(true) {
                    entries.push(DegreeEntry {
                        degree: deg,
                        multiplicity: 1,
                        label: ch.to_string(),
                    });
                }
            }
            Ok(FactorCharacterSet { factor: *factor, entries })
        }
    }
}

/// Cartesian product of the factor degree sets of a centralizer shape,
/// truncated by `bound` (applied to the running product, which is sound
/// because every degree is ≥ 1 at any prime power).
pub fn shape_unipotent_degrees(
    shape: &CentralizerShape,
    bound: Option<&DegreeBound>,
) -> Result<Vec<DegreeEntry>, UnipotentError> {
    let mut acc = vec![DegreeEntry {
        degree: QPoly::one(),
        multiplicity: 1,
        label: String::new(),
    }];
    for factor in shape.factors() {
        let set = classical_unipotent_degrees(&factor, bound)?;
        let mut next = Vec::new();
        for base in &acc {
            for e in &set.entries {
                let degree = &base.degree * &e.degree;
                if bound.map(|b| b.admits(&degree)).unwrap_or(true) {
                    let label = if base.label.is_empty() {
                        e.label.clone()
                    } else {
                        format!("{} * {}", base.label, e.label)
                    };
                    next.push(DegreeEntry {
                        degree,
                        multiplicity: base.multiplicity * e.multiplicity,
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

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees_of(set: &FactorCharacterSet) -> Vec<QPoly> {
        set.entries.iter().map(|e| e.degree.clone()).collect()
    }

    #[test]
    fn gl2_and_gl3_hooks() {
        let g2 = gl_unipotent_degrees(2, 1, Sign::Plus, None);
        assert_eq!(
            degrees_of(&g2),
            vec![QPoly::one(), QPoly::q()],
        );
        let g3 = gl_unipotent_degrees(3, 1, Sign::Plus, None);
        assert_eq!(
            degrees_of(&g3),
            vec![
                QPoly::one(),
                QPoly::from_int_coeffs(&[0, 1, 1]),
                QPoly::q_pow(3),
            ],
        );
    }

    #[test]
    fn steinberg_monomial() {
        for a in 1..=5u32 {
            let set = gl_unipotent_degrees(a, 1, Sign::Plus, None);
            let st = set.entries.last().unwrap();
            assert_eq!(st.degree, QPoly::q_pow((a * (a - 1) / 2) as usize));
        }
    }

    #[test]
    fn gu_matches_gl_at_minus_q() {
        // GU₃: {1, q²−q, q³}.
        let u3 = gl_unipotent_degrees(3, 1, Sign::Minus, None);
        assert_eq!(
            degrees_of(&u3),
            vec![
                QPoly::one(),
                QPoly::from_int_coeffs(&[0, -1, 1]),
                QPoly::q_pow(3),
            ],
        );
    }

    #[test]
    fn extension_substitutes_q_power() {
        let set = gl_unipotent_degrees(2, 2, Sign::Plus, None);
        assert_eq!(degrees_of(&set), vec![QPoly::one(), QPoly::q_pow(2)]);
    }

    #[test]
    fn o4_extension_sets() {
        let plus = o_even_unipotent_degrees(Sign::Plus, 2, 1, None).unwrap();
        let mut got: Vec<(QPoly, u32)> = plus
            .entries
            .iter()
            .map(|e| (e.degree.clone(), e.multiplicity))
            .collect();
        got.sort_by(|a, b| a.0.cmp_at(&b.0, &num_bigint::BigInt::from(10)));
        assert_eq!(
            got,
            vec![
                (QPoly::one(), 2),
                (QPoly::from_int_coeffs(&[0, 2]), 1),
                (QPoly::q_pow(2), 2),
            ],
        );
        let minus = o_even_unipotent_degrees(Sign::Minus, 2, 1, None).unwrap();
        let mut got: Vec<(QPoly, u32)> = minus
            .entries
            .iter()
            .map(|e| (e.degree.clone(), e.multiplicity))
            .collect();
        got.sort_by(|a, b| a.0.cmp_at(&b.0, &num_bigint::BigInt::from(10)));
        assert_eq!(got, vec![(QPoly::one(), 2), (QPoly::q_pow(2), 2)]);
    }

    #[test]
    fn bound_truncation() {
        let b = DegreeBound::new(BigInt::from(3), BigInt::from(3));
        let set = gl_unipotent_degrees(3, 1, Sign::Plus, Some(&b));
        assert_eq!(degrees_of(&set), vec![QPoly::one()]);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(6).len(), 11);
    }
}
