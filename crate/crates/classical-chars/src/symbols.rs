//! Lusztig symbols for the classical families and their unipotent character
//! degrees.
//!
//! A symbol is a reduced two-row array of strictly increasing non-negative
//! integers together with a family tag:
//!
//! * [`Family::BC`] — row lengths satisfy `a − b` odd and positive; labels
//!   unipotent characters of the odd orthogonal / projective conformal
//!   symplectic groups of rank `n`.
//! * [`Family::DMinus`] — `a > b`, `a − b ≡ 2 (mod 4)`; twisted even
//!   orthogonal groups.
//! * [`Family::DPlus`] — `a − b ≡ 0 (mod 4)`; split even orthogonal groups.
//!   The two rows form an unordered pair; a *degenerate* symbol (equal rows)
//!   labels two distinct unipotent characters, materialized here as two
//!   [`SymbolCharacter`] values with `twin_index` 0 and 1.
//!
//! The rank of a symbol is `Σλ + Σμ − ⌊((a+b−1)/2)²⌋` (the offset is an exact
//! square for BC, where `a+b` is odd). Prepending `0` to both rows and
//! incrementing every entry (the *shift*) changes neither rank nor degree;
//! symbols are stored shift-reduced, i.e. the two rows never both start
//! with 0.
//!
//! Enumeration by rank is exhaustive: for a fixed defect `d = a − b` the
//! minimal achievable reduced rank grows quadratically in `d` (staircase
//! rows), so only finitely many defects and row lengths can reach a given
//! rank. This monotonicity bound drives the iteration and guarantees
//! termination.

use crate::qpoly::{QPoly, QPolyError};
use num_bigint::BigInt;
use std::cmp::Ordering;
use std::fmt;

/// Symbol family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Family {
    /// `a − b` odd and positive.
    BC,
    /// `a > b`, `a − b ≡ 2 (mod 4)`.
    DMinus,
    /// `a − b ≡ 0 (mod 4)`; unordered row pair.
    DPlus,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::BC => write!(f, "BC"),
            Family::DMinus => write!(f, "DMinus"),
            Family::DPlus => write!(f, "DPlus"),
        }
    }
}

/// Errors from symbol validation and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("symbol parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] QPolyError),
}

/// A reduced, canonically ordered symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    family: Family,
    lambda: Vec<u32>,
    mu: Vec<u32>,
}

/// One unipotent character: a symbol plus a twin index distinguishing the
/// two characters attached to a degenerate `DPlus` symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolCharacter {
    pub symbol: Symbol,
    /// 0 unless the symbol is degenerate `DPlus`, where the twins are 0 and 1.
    pub twin_index: u8,
}

fn strictly_increasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] < w[1])
}

fn row_sum(row: &[u32]) -> u64 {
    row.iter().map(|&x| x as u64).sum()
}

/// Triangular-number helper `C(k, 2)`.
fn choose2(k: usize) -> u64 {
    if k < 2 {
        0
    } else {
        (k as u64) * (k as u64 - 1) / 2
    }
}

/// Rank offset `⌊((a+b−1)/2)²⌋`.
fn rank_offset(a: usize, b: usize) -> u64 {
    let s = (a + b) as u64;
    if s % 2 == 1 {
        // BC: (a+b−1)/2 is an integer.
        let h = (s - 1) / 2;
        h * h
    } else {
        // D families: a+b even, ((a+b−1)/2)² = t² − t + 1/4 with t=(a+b)/2,
        // so the floor is t(t−1).
        let t = s / 2;
        t * t.saturating_sub(1)
    }
}

impl Symbol {
    /// Validate, shift-reduce, and canonically order a symbol.
    ///
    /// Reduction repeatedly strips a leading `(0,0)` pair and decrements the
    /// remaining entries; for `DPlus` the longer row is stored first, and
    /// equal-length rows are ordered lexicographically smaller first.
    pub fn new(family: Family, lambda: Vec<u32>, mu: Vec<u32>) -> Result<Symbol, SymbolError> {
        if !strictly_increasing(&lambda) || !strictly_increasing(&mu) {
            return Err(SymbolError::InvalidSymbol(format!(
                "rows must be strictly increasing: {lambda:?}, {mu:?}"
            )));
        }
        let (mut lambda, mut mu) = (lambda, mu);
        // Shift-reduce.
        while !lambda.is_empty() && !mu.is_empty() && lambda[0] == 0 && mu[0] == 0 {
            lambda.remove(0);
            mu.remove(0);
            for x in lambda.iter_mut().chain(mu.iter_mut()) {
                *x -= 1;
            }
        }
        // Canonical row order.
        match family {
            Family::BC | Family::DMinus => {
                if lambda.len() <= mu.len() {
                    std::mem::swap(&mut lambda, &mut mu);
                }
            }
            Family::DPlus => {
                let reorder = match lambda.len().cmp(&mu.len()) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => lambda > mu,
                };
                if reorder {
                    std::mem::swap(&mut lambda, &mut mu);
                }
            }
        }
        let (a, b) = (lambda.len(), mu.len());
        let defect_ok = match family {
            Family::BC => a > b && (a - b) % 2 == 1,
            Family::DMinus => a > b && (a - b) % 4 == 2,
            Family::DPlus => (a - b) % 4 == 0,
        };
        if !defect_ok {
            return Err(SymbolError::InvalidSymbol(format!(
                "row lengths ({a},{b}) violate the {family} defect condition"
            )));
        }
        let s = Symbol { family, lambda, mu };
        if (row_sum(&s.lambda) + row_sum(&s.mu)) < rank_offset(a, b) {
            return Err(SymbolError::InvalidSymbol(format!(
                "negative rank for symbol {s}"
            )));
        }
        Ok(s)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    /// Row-length difference `a − b` (non-negative in canonical order).
    pub fn defect(&self) -> usize {
        self.lambda.len() - self.mu.len()
    }

    /// Whether this is a degenerate `DPlus` symbol (equal rows).
    pub fn is_degenerate(&self) -> bool {
        self.family == Family::DPlus && self.lambda == self.mu
    }

    /// The rank `Σλ + Σμ − ⌊((a+b−1)/2)²⌋`.
    pub fn rank(&self) -> u64 {
        row_sum(&self.lambda) + row_sum(&self.mu)
            - rank_offset(self.lambda.len(), self.mu.len())
    }

    /// The unipotent character degree as an exact polynomial in `q`.
    pub fn degree(&self) -> Result<QPoly, SymbolError> {
        degree_from_rows(self.family, &self.lambda, &self.mu)
    }

    /// The one or two characters labeled by this symbol.
    pub fn characters(&self) -> Vec<SymbolCharacter> {
        if self.is_degenerate() {
            vec![
                SymbolCharacter { symbol: self.clone(), twin_index: 0 },
                SymbolCharacter { symbol: self.clone(), twin_index: 1 },
            ]
        } else {
            vec![SymbolCharacter { symbol: self.clone(), twin_index: 0 }]
        }
    }

    /// Canonical text form, e.g. `BC:[0 1 6|]` or `DPlus:[0 1|1 5]`.
    pub fn text(&self) -> String {
        let row = |r: &[u32]| {
            r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        format!("{}:[{}|{}]", self.family, row(&self.lambda), row(&self.mu))
    }

    /// Parse the canonical text form produced by [`Symbol::text`].
    pub fn parse(s: &str) -> Result<Symbol, SymbolError> {
        let (fam, rest) = s
            .split_once(':')
            .ok_or_else(|| SymbolError::Parse(format!("missing ':' in {s:?}")))?;
        let family = match fam.trim() {
            "BC" => Family::BC,
            "DMinus" => Family::DMinus,
            "DPlus" => Family::DPlus,
            other => return Err(SymbolError::Parse(format!("unknown family {other:?}"))),
        };
        let rest = rest.trim();
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| SymbolError::Parse(format!("rows must be bracketed in {s:?}")))?;
        let (l, m) = inner
            .split_once('|')
            .ok_or_else(|| SymbolError::Parse(format!("missing '|' in {s:?}")))?;
        let parse_row = |r: &str| -> Result<Vec<u32>, SymbolError> {
            r.split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|e| SymbolError::Parse(format!("bad entry {t:?}: {e}")))
                })
                .collect()
        };
        Symbol::new(family, parse_row(l)?, parse_row(m)?)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

impl fmt::Display for SymbolCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbol.is_degenerate() {
            write!(f, "{}#{}", self.symbol, self.twin_index)
        } else {
            write!(f, "{}", self.symbol)
        }
    }
}

/// Degree formula evaluated on raw rows (not necessarily reduced), so that
/// shift invariance can be tested directly. The three families share the
/// row-product structure and differ in the leading numerator factor and the
/// 2-power in the denominator.
pub fn degree_from_rows(
    family: Family,
    lambda: &[u32],
    mu: &[u32],
) -> Result<QPoly, SymbolError> {
    if !strictly_increasing(lambda) || !strictly_increasing(mu) {
        return Err(SymbolError::InvalidSymbol(
            "rows must be strictly increasing".into(),
        ));
    }
    let (a, b) = (lambda.len(), mu.len());
    let total = row_sum(lambda) + row_sum(mu);
    let offset = rank_offset(a, b);
    if total < offset {
        return Err(SymbolError::InvalidSymbol("negative rank".into()));
    }
    let n = (total - offset) as usize;
    if n == 0 {
        return Ok(QPoly::one());
    }

    // Leading factor and 2-power exponent.
    let mut num = match family {
        Family::BC => (1..=n).map(|i| QPoly::q_pow_plus(2 * i, -1)).fold(QPoly::one(), |acc, p| &acc * &p),
        Family::DMinus => {
            let mut p = QPoly::q_pow_plus(n, 1);
            for i in 1..n {
                p = &p * &QPoly::q_pow_plus(2 * i, -1);
            }
            p
        }
        Family::DPlus => {
            let mut p = QPoly::q_pow_plus(n, -1);
            for i in 1..n {
                p = &p * &QPoly::q_pow_plus(2 * i, -1);
            }
            p
        }
    };
    let two_exp: u32 = match family {
        Family::BC => ((a + b - 1) / 2) as u32,
        Family::DMinus => ((a + b - 2) / 2) as u32,
        Family::DPlus => {
            if lambda == mu {
                a as u32
            } else {
                ((a + b).saturating_sub(2) / 2) as u32
            }
        }
    };

    // Row difference products ∏_{i'<i}(q^{x_i} − q^{x_{i'}}) and the cross
    // product ∏_{i,j}(q^{λ_i} + q^{μ_j}).
    for row in [lambda, mu] {
        for i in 1..row.len() {
            for ip in 0..i {
                let t = &QPoly::q_pow(row[i] as usize) - &QPoly::q_pow(row[ip] as usize);
                num = &num * &t;
            }
        }
    }
    for &l in lambda {
        for &m in mu {
            let t = &QPoly::q_pow(l as usize) + &QPoly::q_pow(m as usize);
            num = &num * &t;
        }
    }

    // Denominator: 2^c · q^{C(a+b−2,2)+C(a+b−4,2)+···} · ∏ ∏_{k≤entry}(q^{2k}−1).
    let mut q_exp: u64 = 0;
    let mut s = a + b;
    while s >= 2 {
        s -= 2;
        q_exp += choose2(s);
    }
    let mut den = QPoly::monomial(q_exp as usize, num_rational::BigRational::from(
        BigInt::from(2).pow(two_exp),
    ));
    for &x in lambda.iter().chain(mu.iter()) {
        for k in 1..=(x as usize) {
            den = &den * &QPoly::q_pow_plus(2 * k, -1);
        }
    }

    Ok(num.exact_div(&den)?)
}

/// All non-decreasing sequences of `len` non-negative integers with the given
/// sum (reported in non-decreasing order); the staircase shift turns them
/// into strictly increasing rows.
fn bounded_partitions(len: usize, sum: u64, min: u64, out: &mut Vec<Vec<u64>>, acc: &mut Vec<u64>) {
    if len == 0 {
        if sum == 0 {
            out.push(acc.clone());
        }
        return;
    }
    // First entry y ≥ min; remaining len−1 entries each ≥ y, so y ≤ sum/len.
    let mut y = min;
    while y * (len as u64) <= sum {
        acc.push(y);
        bounded_partitions(len - 1, sum - y, y, out, acc);
        acc.pop();
        y += 1;
    }
}

/// Strictly increasing rows of length `len` with entry sum `sum`.
fn strict_rows(len: usize, sum: u64) -> Vec<Vec<u32>> {
    let stair = choose2(len);
    if sum < stair {
        return Vec::new();
    }
    let mut parts = Vec::new();
    bounded_partitions(len, sum - stair, 0, &mut parts, &mut Vec::new());
    parts
        .into_iter()
        .map(|y| {
            y.into_iter()
                .enumerate()
                .map(|(i, v)| (v + i as u64) as u32)
                .collect()
        })
        .collect()
}

/// Minimal rank achievable by a *reduced* symbol with row lengths `(a, b)`:
/// staircase rows, with one row forced to start at 1 when both are nonempty.
fn min_reduced_rank(a: usize, b: usize) -> i64 {
    let base = choose2(a) + choose2(b)
        + if a > 0 && b > 0 { a.min(b) as u64 } else { 0 };
    base as i64 - rank_offset(a, b) as i64
}

/// Exhaustively enumerate all rank-`n` symbol characters of a family, in a
/// deterministic order (by defect, then row length, then lexicographic).
/// Degenerate `DPlus` symbols contribute two characters.
pub fn enumerate_symbols(n: u64, family: Family) -> Vec<SymbolCharacter> {
    assert!(n >= 1, "rank must be at least 1");
    let mut out = Vec::new();
    let defects: Box<dyn Iterator<Item = usize>> = match family {
        Family::BC => Box::new((1..).step_by(2)),
        Family::DMinus => Box::new((2..).step_by(4)),
        Family::DPlus => Box::new((0..).step_by(4)),
    };
    for d in defects {
        // Minimal reduced rank over all b for this defect is attained at b=0
        // (b=1 for defect 0) and grows quadratically in d.
        let d_floor = min_reduced_rank(d.max(1), if d == 0 { 1 } else { 0 }).min(
            min_reduced_rank(d, 0),
        );
        if d_floor > n as i64 {
            break;
        }
        let mut b = 0usize;
        loop {
            let a = b + d;
            if a == 0 {
                b += 1;
                continue;
            }
            if min_reduced_rank(a, b) > n as i64 {
                break;
            }
            let target = n + rank_offset(a, b);
            for s_lambda in 0..=target {
                let s_mu = target - s_lambda;
                for lam in strict_rows(a, s_lambda) {
                    for mu in strict_rows(b, s_mu) {
                        // Reducedness: skip rows that both start with 0.
                        if !lam.is_empty() && !mu.is_empty() && lam[0] == 0 && mu[0] == 0 {
                            continue;
                        }
                        // DPlus with equal lengths: the pair is unordered;
                        // keep only the canonical (λ ≤ μ) representative.
                        if family == Family::DPlus && a == b && lam > mu {
                            continue;
                        }
                        let sym = Symbol::new(family, lam.clone(), mu.clone())
                            .expect("enumerated rows are valid");
                        debug_assert_eq!(sym.rank(), n);
                        out.extend(sym.characters());
                    }
                }
            }
            b += 1;
        }
    }
    out.sort_by(|x, y| {
        (x.symbol.defect(), &x.symbol.lambda, &x.symbol.mu, x.twin_index).cmp(&(
            y.symbol.defect(),
            &y.symbol.lambda,
            &y.symbol.mu,
            y.twin_index,
        ))
    });
    out
}

/// Result of a minimal-degree scan: all enumerated characters outside the
/// exception list must have degree above (or at least) the bound at `q0`.
#[derive(Debug, Clone)]
pub struct ScanReport {
    /// Characters outside the exceptions that fall below the bound — expected
    /// empty.
    pub violators: Vec<(SymbolCharacter, BigInt)>,
    /// All characters (exceptions included) whose degree is below the bound,
    /// with their degrees.
    pub sub_bound: Vec<(SymbolCharacter, BigInt)>,
    /// Total characters scanned.
    pub total: usize,
}

/// Comparison mode for [`minimal_degree_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// Non-exceptional characters must satisfy `degree ≥ bound`.
    AtLeast,
    /// Non-exceptional characters must satisfy `degree > bound`.
    Greater,
}

/// Scan every rank-`n` character of a family: each character whose symbol is
/// outside `exceptions` must have degree `≥` (or `>`, per `mode`) the bound
/// at `q0`. Violations are reported, not thrown.
pub fn minimal_degree_scan(
    n: u64,
    family: Family,
    q0: &BigInt,
    bound: &QPoly,
    mode: BoundMode,
    exceptions: &[Symbol],
) -> Result<ScanReport, SymbolError> {
    let bound_val = bound.eval(q0);
    let mut report = ScanReport {
        violators: Vec::new(),
        sub_bound: Vec::new(),
        total: 0,
    };
    for ch in enumerate_symbols(n, family) {
        report.total += 1;
        let deg = ch.symbol.degree()?;
        let val = deg.eval(q0);
        debug_assert!(val.is_integer());
        let below = match mode {
            BoundMode::AtLeast => val < bound_val,
            BoundMode::Greater => val <= bound_val,
        };
        if below {
            report
                .sub_bound
                .push((ch.clone(), val.to_integer()));
            if !exceptions.contains(&ch.symbol) {
                report.violators.push((ch, val.to_integer()));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(family: Family, l: &[u32], m: &[u32]) -> Symbol {
        Symbol::new(family, l.to_vec(), m.to_vec()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(sym(Family::BC, &[6], &[]).rank(), 6);
        assert_eq!(sym(Family::BC, &[0, 1, 6], &[]).rank(), 6);
        assert_eq!(sym(Family::DPlus, &[0, 1, 2, 4], &[]).rank(), 5);
    }

    #[test]
    fn canonicalize_shift() {
        // (0 3; 0) reduces to (2; −).
        let s = sym(Family::BC, &[0, 3], &[0]);
        assert_eq!(s.lambda(), &[2]);
        assert_eq!(s.mu(), &[] as &[u32]);
        // Already reduced symbol is untouched.
        let s = sym(Family::BC, &[0, 1, 6], &[]);
        assert_eq!(s.lambda(), &[0, 1, 6]);
    }

    #[test]
    fn degenerate_dplus() {
        let s = sym(Family::DPlus, &[1], &[1]);
        assert!(s.is_degenerate());
        assert_eq!(s.characters().len(), 2);
    }

    #[test]
    fn trivial_degrees() {
        assert!(sym(Family::BC, &[6], &[]).degree().unwrap().is_one());
        assert!(sym(Family::DMinus, &[0, 5], &[]).degree().unwrap().is_one());
        assert!(sym(Family::DPlus, &[5], &[0]).degree().unwrap().is_one());
    }

    #[test]
    fn bc_second_smallest() {
        // (0 1 n; −) has degree (q^n−1)(q^n−q)/2(q+1); 66066 at n=6, q=3.
        let s = sym(Family::BC, &[0, 1, 6], &[]);
        let d = s.degree().unwrap();
        let expected = (&QPoly::q_pow_plus(6, -1)
            * &(&QPoly::q_pow(6) - &QPoly::q()))
            .exact_div(&(&QPoly::int(2) * &QPoly::q_pow_plus(1, 1)))
            .unwrap();
        assert_eq!(d, expected);
        assert_eq!(
            d.eval_int(&BigInt::from(3)).unwrap(),
            BigInt::from(66066)
        );
    }

    #[test]
    fn dminus_second_smallest() {
        // (1 n−1; −) has degree (q^n+1)(q^{n−1}−q)/(q²−1) at n=6.
        let s = sym(Family::DMinus, &[1, 5], &[]);
        let d = s.degree().unwrap();
        let expected = (&QPoly::q_pow_plus(6, 1)
            * &(&QPoly::q_pow(5) - &QPoly::q()))
            .exact_div(&QPoly::q_pow_plus(2, -1))
            .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn dplus_868_at_2() {
        let s = sym(Family::DPlus, &[0, 1, 2, 4], &[]);
        assert_eq!(
            s.degree().unwrap().eval_int(&BigInt::from(2)).unwrap(),
            BigInt::from(868)
        );
    }

    #[test]
    fn dminus_748_at_2() {
        // (2 3; −) at rank 5: q²(q⁴+1)(q⁵+1)/(q+1) = 748 at q=2.
        let s = sym(Family::DMinus, &[2, 3], &[]);
        assert_eq!(s.rank(), 5);
        let d = s.degree().unwrap();
        let expected = (&(&QPoly::q_pow(2) * &QPoly::q_pow_plus(4, 1))
            * &QPoly::q_pow_plus(5, 1))
            .exact_div(&QPoly::q_pow_plus(1, 1))
            .unwrap();
        assert_eq!(d, expected);
        assert_eq!(d.eval_int(&BigInt::from(2)).unwrap(), BigInt::from(748));
    }

    #[test]
    fn enumerate_small_ranks() {
        let r1 = enumerate_symbols(1, Family::BC);
        assert_eq!(r1.len(), 2);
        let degs: Vec<QPoly> = r1.iter().map(|c| c.symbol.degree().unwrap()).collect();
        assert!(degs.contains(&QPoly::one()));
        assert!(degs.contains(&QPoly::q()));
        assert_eq!(enumerate_symbols(2, Family::BC).len(), 6);
        assert_eq!(enumerate_symbols(3, Family::BC).len(), 12);
    }

    #[test]
    fn enumerate_contains_list_members() {
        let r6 = enumerate_symbols(6, Family::BC);
        for (l, m) in [
            (vec![6u32], vec![]),
            (vec![0, 1, 6], vec![]),
            (vec![0, 1], vec![6]),
            (vec![1, 6], vec![0]),
            (vec![0, 6], vec![1]),
        ] {
            let s = Symbol::new(Family::BC, l, m).unwrap();
            assert!(r6.iter().any(|c| c.symbol == s), "missing {s}");
        }
    }

    #[test]
    fn shift_invariance_spot() {
        // Unreduced shift of (0 1 6; −): rows (0 1 2 7; 0).
        let reduced = sym(Family::BC, &[0, 1, 6], &[]);
        let d1 = degree_from_rows(Family::BC, &[0, 1, 2, 7], &[0]).unwrap();
        assert_eq!(d1, reduced.degree().unwrap());
    }

    #[test]
    fn text_round_trip() {
        for s in [
            sym(Family::BC, &[0, 1, 6], &[]),
            sym(Family::DPlus, &[0, 1], &[1, 5]),
            sym(Family::DMinus, &[2, 3], &[]),
        ] {
            assert_eq!(Symbol::parse(&s.text()).unwrap(), s);
        }
        assert_eq!(
            sym(Family::BC, &[0, 1, 6], &[]).text(),
            "BC:[0 1 6|]"
        );
    }

    #[test]
    fn steinberg_presence_rank3() {
        let st: Vec<_> = enumerate_symbols(3, Family::BC)
            .into_iter()
            .filter(|c| c.symbol.degree().unwrap() == QPoly::q_pow(9))
            .collect();
        assert_eq!(st.len(), 1);
    }
}
