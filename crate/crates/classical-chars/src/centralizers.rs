//! Semisimple-centralizer shapes in the dual groups, their exact p′-indices,
//! and semisimple class counts per shape.
//!
//! A semisimple element of a classical dual group has a centralizer that is a
//! product of at most two classical "core" factors (carrying the ±1 and, in
//! the conformal case, ±√τ eigenspaces) and a multiset of `GL^±_a(q^k)`
//! factors carrying the remaining eigenvalue orbits, with the field-degree
//! budget `Σ kᵢaᵢ = n − m`. The four grammars are:
//!
//! * [`DualKind::SOOdd`] — `SO_{2k+1} × O^ε_{2(m−k)} × ∏ GL^±`, `0≤k≤m≤n`.
//! * [`DualKind::PCSp`] — conformal symplectic: either
//!   `Sp_{2k} × Sp_{2(m−k)} × ∏ GL^±` (τ a square) or `Sp_m(q²) × ∏ GL^±`
//!   with `m` even (τ a non-square); always extended by `ℤ_{q−1}`.
//! * [`DualKind::OmegaEven`] — even `q`: `O^ε_{2m} × ∏ GL^±` with the type
//!   constraint `ε·∏(type of GL block) = α`.
//! * [`DualKind::PCOEven`] — conformal orthogonal, odd `q`: either
//!   `O^{ε₁}_{2k} × O^{ε₂}_{2(m−k)} × ∏ GL^±` (τ square, with
//!   `ε₁ε₂·∏ = α`) or `O^±_m(q²) × ∏ GL^±` with `m` even (τ non-square);
//!   always extended by `ℤ_{q−1}`.
//!
//! A `GL_a` block (paired eigenvalues `x, x^{-1}` in orthogonal space) has
//! orthogonal type `+`; a `GU_a(q^k)` block has type `(−1)^a`, independent of
//! `k`; a twisted `O^ε_m(q²)` core has base type `ε`.
//!
//! Class counting draws eigenvalue orbits from four pools, whose cardinalities
//! are the only data retained about the underlying field elements:
//! degree-1 split orbits `T₁` (`(q−3)/2` odd `q`, `(q−2)/2` even), degree-1
//! non-split orbits `T₂` (`(q−1)/2` odd, `q/2` even), degree-2 split orbits
//! `R₂` (`(q−1)²/4`), degree-2 non-split orbits `R₁` (`(q²−1)/4`). A shape's
//! class count is a product of falling factorials over the pools (distinct
//! orbits per factor), divided by the symmetry of identical factors.

use crate::orders::{GroupFamily, GroupSpec, Sign};
use crate::qpoly::{QPoly, QPolyError};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Which dual group the shapes live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualKind {
    /// `SO_{2n+1}(q)`, dual of the symplectic group (q odd).
    SOOdd,
    /// `CSp_{2n}(q)` modulo similitude bookkeeping, dual of odd spin (q odd).
    PCSp,
    /// `Ω^α_{2n}(q)` is self-dual for even q.
    OmegaEven(Sign),
    /// `CO^α_{2n}(q)⁰`, dual of even spin (q odd).
    PCOEven(Sign),
}

impl DualKind {
    /// The group whose p′-order is the numerator of every index; the
    /// similitude `ℤ_{q−1}` of the conformal duals cancels against the
    /// centralizer's own extension and is omitted from both sides.
    pub fn order_group(&self, n: u32) -> GroupSpec {
        match self {
            DualKind::SOOdd => GroupSpec::so_odd(n),
            DualKind::PCSp => GroupSpec::sp(n),
            DualKind::OmegaEven(a) | DualKind::PCOEven(a) => GroupSpec::o_even(n, *a),
        }
    }
}

/// A `GL^sign_a(q^k)` factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFactor {
    pub sign: Sign,
    pub a: u32,
    pub k: u32,
}

impl LinearFactor {
    pub fn spec(&self) -> GroupSpec {
        match self.sign {
            Sign::Plus => GroupSpec::gl(self.a, self.k),
            Sign::Minus => GroupSpec::gu(self.a, self.k),
        }
    }

    /// Orthogonal type of the block in an even-dimensional quadratic space.
    pub fn block_type(&self) -> Sign {
        match self.sign {
            Sign::Plus => Sign::Plus,
            Sign::Minus => {
                if self.a.is_multiple_of(2) {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
        }
    }
}

/// Core (non-linear) part of a centralizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Core {
    /// `SO_{2k+1} × O^ε_{2(m−k)}`; `eps` is `None` iff `mk = 0`.
    SoOddPair { k: u32, mk: u32, eps: Option<Sign> },
    /// `Sp_{2k} × Sp_{2(m−k)}`, unordered (`k ≤ m−k`).
    SpPair { k: u32, mk: u32 },
    /// `Sp_{2·half}(q²)` (τ non-square).
    SpTwisted { half: u32 },
    /// `O^ε_{2m}` (even-q dual); `eps` is `None` iff `m = 0`.
    OEvenCore { m: u32, eps: Option<Sign> },
    /// `O^{ε₁}_{2k} × O^{ε₂}_{2(m−k)}`, unordered.
    OPair { k: u32, mk: u32, eps1: Option<Sign>, eps2: Option<Sign> },
    /// `O^ε_{2·half}(q²)` (τ non-square); `eps` is `None` iff `half = 0`.
    OTwisted { half: u32, eps: Option<Sign> },
}

impl Core {
    /// Half-dimension budget `m` used by the core.
    pub fn budget(&self) -> u32 {
        match *self {
            Core::SoOddPair { k, mk, .. } => k + mk,
            Core::SpPair { k, mk } => k + mk,
            Core::SpTwisted { half } => 2 * half,
            Core::OEvenCore { m, .. } => m,
            Core::OPair { k, mk, .. } => k + mk,
            Core::OTwisted { half, .. } => 2 * half,
        }
    }

    pub fn specs(&self) -> Vec<GroupSpec> {
        match *self {
            Core::SoOddPair { k, mk, eps } => {
                let mut v = Vec::new();
                if k > 0 {
                    v.push(GroupSpec::so_odd(k));
                }
                if mk > 0 {
                    v.push(GroupSpec::o_even(mk, eps.expect("sign for O part")));
                }
                v
            }
            Core::SpPair { k, mk } => {
                let mut v = Vec::new();
                if k > 0 {
                    v.push(GroupSpec::sp(k));
                }
                if mk > 0 {
                    v.push(GroupSpec::sp(mk));
                }
                v
            }
            Core::SpTwisted { half } => {
                if half > 0 {
                    vec![GroupSpec::new(GroupFamily::Sp, half, 2, None)]
                } else {
                    Vec::new()
                }
            }
            Core::OEvenCore { m, eps } => {
                if m > 0 {
                    vec![GroupSpec::o_even(m, eps.expect("sign for O core"))]
                } else {
                    Vec::new()
                }
            }
            Core::OPair { k, mk, eps1, eps2 } => {
                let mut v = Vec::new();
                if k > 0 {
                    v.push(GroupSpec::o_even(k, eps1.expect("sign")));
                }
                if mk > 0 {
                    v.push(GroupSpec::o_even(mk, eps2.expect("sign")));
                }
                v
            }
            Core::OTwisted { half, eps } => {
                if half > 0 {
                    vec![GroupSpec::new(GroupFamily::OEven, half, 2, eps)]
                } else {
                    Vec::new()
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OTwistedFields {
    pub half: u32,
    pub eps: Option<Sign>,
}

/// Shape of a semisimple centralizer in a dual group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CentralizerShape {
    pub dual: DualKind,
    pub n: u32,
    pub core: Core,
    /// Canonically sorted (descending `(k, a, sign)`).
    pub linear: Vec<LinearFactor>,
    /// Dichotomy of the conformal duals; `true` for the others.
    pub tau_square: bool,
    /// Trailing `·ℤ_{q−1}` (always present for the conformal duals).
    pub similitude_ext: bool,
}

/// Errors from shape analysis.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CentralizerError {
    #[error("unsupported shape for class counting: {0}")]
    UnsupportedShape(String),
    #[error(transparent)]
    Poly(#[from] QPolyError),
}

impl CentralizerShape {
    /// All group factors (excluding the similitude extension, which cancels
    /// in every index).
    pub fn factors(&self) -> Vec<GroupSpec> {
        let mut v = self.core.specs();
        v.extend(self.linear.iter().map(|f| f.spec()));
        v
    }

    /// Whether this is the full dual group (centralizer of a central element).
    pub fn is_trivial(&self) -> bool {
        self.linear.is_empty()
            && match self.core {
                Core::SoOddPair { k, mk, .. } => k == self.n && mk == 0,
                Core::SpPair { k, mk } => k + mk == self.n && (k == 0 || mk == 0),
                Core::OEvenCore { m, .. } => m == self.n,
                Core::OPair { k, mk, .. } => k + mk == self.n && (k == 0 || mk == 0),
                _ => false,
            }
    }

    /// `p′`-part of the index of the centralizer in the dual group, as an
    /// exact polynomial (the similitude `ℤ_{q−1}` appears on both sides and
    /// is cancelled).
    pub fn index_pprime(&self) -> Result<QPoly, CentralizerError> {
        let num = self.dual.order_group(self.n).order_pprime();
        let mut den = QPoly::one();
        for f in self.factors() {
            den = &den * &f.order_pprime();
        }
        Ok(num.exact_div(&den)?)
    }

    /// Number of semisimple classes of the dual group with this exact
    /// centralizer shape, at a concrete prime power `q0`.
    ///
    /// Only shapes whose linear factors have `k ≤ 2` (and, for even `q`,
    /// `k = 1`) are modeled — precisely the configurations that can survive
    /// the degree bounds. Anything else is [`CentralizerError::UnsupportedShape`].
    pub fn count_classes(&self, q0: &BigInt) -> Result<BigInt, CentralizerError> {
        let q_even = (q0 % BigInt::from(2)).is_zero();
        // Pools keyed by (sign, k): all factors with the same key draw
        // *distinct* eigenvalue orbits from the same pool.
        let mut pools: BTreeMap<(Sign, u32), Vec<u32>> = BTreeMap::new();
        for f in &self.linear {
            if f.k > 2 || (q_even && f.k == 2) {
                return Err(CentralizerError::UnsupportedShape(format!(
                    "no orbit pool for factor GL{}^{}(q^{}) at this parity",
                    f.a, f.sign, f.k
                )));
            }
            pools.entry((f.sign, f.k)).or_default().push(f.a);
        }
        let mut count = BigInt::one();
        for ((sign, k), members) in pools {
            let pool_size: BigInt = match (sign, k) {
                (Sign::Plus, 1) => {
                    if q_even {
                        (q0 - 2) / 2
                    } else {
                        (q0 - 3) / 2
                    }
                }
                (Sign::Minus, 1) => {
                    if q_even {
                        q0 / 2
                    } else {
                        (q0 - 1) / 2
                    }
                }
                (Sign::Plus, 2) => (q0 - 1) * (q0 - 1) / 4,
                (Sign::Minus, 2) => (q0 * q0 - 1) / 4,
                _ => unreachable!(),
            };
            // Falling factorial: distinct orbits for each factor in the pool.
            let r = members.len() as u64;
            let mut ways = BigInt::one();
            for i in 0..r {
                let avail = &pool_size - BigInt::from(i);
                if avail <= BigInt::zero() {
                    ways = BigInt::zero();
                    break;
                }
                ways *= avail;
            }
            // Identical factors (same a within the pool) are unordered.
            let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
            for a in members {
                *mult.entry(a).or_default() += 1;
            }
            for (_, m) in mult {
                let mut fact = BigInt::one();
                for i in 2..=m {
                    fact *= BigInt::from(i);
                }
                ways /= fact;
            }
            count *= ways;
        }
        // Even-q Ω-vs-O splitting: a pure-linear centralizer lies inside Ω
        // (every block has even fixed-space codimension), so each O-class
        // splits into two Ω-classes.
        if let DualKind::OmegaEven(_) = self.dual {
            if self.core.budget() == 0 {
                count *= BigInt::from(2);
            }
        }
        Ok(count)
    }

    /// Canonical display string, e.g. `SO11(q) x O2+(q) x GU1(q)`.
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self.factors().iter().map(|f| f.to_string()).collect();
        if parts.is_empty() {
            parts.push("1".into());
        }
        let mut s = parts.join(" x ");
        if self.similitude_ext {
            s.push_str(" . Z(q-1)");
        }
        if !self.tau_square {
            s.push_str(" [tau nonsquare]");
        }
        s
    }
}

impl fmt::Display for CentralizerShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// All multisets of `GL^±_a(q^k)` factors with `Σ k·a = r`, canonically
/// sorted descending.
pub fn linear_multisets(r: u32) -> Vec<Vec<LinearFactor>> {
    // Candidate factors in descending canonical order.
    let mut cands = Vec::new();
    for k in (1..=r.max(1)).rev() {
        for a in (1..=r / k.max(1)).rev() {
            if k * a <= r {
                for sign in [Sign::Minus, Sign::Plus] {
                    cands.push(LinearFactor { sign, a, k });
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(
        cands: &[LinearFactor],
        start: usize,
        rem: u32,
        acc: &mut Vec<LinearFactor>,
        out: &mut Vec<Vec<LinearFactor>>,
    ) {
        if rem == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..cands.len() {
            let f = cands[i];
            if f.k * f.a <= rem {
                acc.push(f);
                rec(cands, i, rem - f.k * f.a, acc, out);
                acc.pop();
            }
        }
    }
    rec(&cands, 0, r, &mut acc, &mut out);
    out
}

/// Exhaustively enumerate all centralizer shapes of a dual group of rank `n`,
/// in deterministic order.
pub fn enumerate_shapes(dual: DualKind, n: u32) -> Vec<CentralizerShape> {
    let mut out = Vec::new();
    let mut push = |core: Core, linear: Vec<LinearFactor>, tau_square: bool, similitude: bool| {
        out.push(CentralizerShape {
            dual,
            n,
            core,
            linear,
            tau_square,
            similitude_ext: similitude,
        });
    };
    match dual {
        DualKind::SOOdd => {
            for m in 0..=n {
                for lin in linear_multisets(n - m) {
                    for k in 0..=m {
                        let mk = m - k;
                        if mk == 0 {
                            push(Core::SoOddPair { k, mk, eps: None }, lin.clone(), true, false);
                        } else {
                            for eps in Sign::both() {
                                push(
                                    Core::SoOddPair { k, mk, eps: Some(eps) },
                                    lin.clone(),
                                    true,
                                    false,
                                );
                            }
                        }
                    }
                }
            }
        }
        DualKind::PCSp => {
            for m in 0..=n {
                for lin in linear_multisets(n - m) {
                    // τ square: unordered Sp pair.
                    for k in 0..=m / 2 {
                        push(Core::SpPair { k, mk: m - k }, lin.clone(), true, true);
                    }
                    // τ non-square: Sp_m(q²), m even.
                    if m % 2 == 0 {
                        push(Core::SpTwisted { half: m / 2 }, lin.clone(), false, true);
                    }
                }
            }
        }
        DualKind::OmegaEven(alpha) => {
            for m in 0..=n {
                for lin in linear_multisets(n - m) {
                    let lin_type = lin
                        .iter()
                        .fold(Sign::Plus, |acc, f| acc.mul(f.block_type()));
                    if m == 0 {
                        if lin_type == alpha {
                            push(Core::OEvenCore { m, eps: None }, lin, true, false);
                        }
                    } else {
                        // ε·(linear type) = α.
                        let eps = alpha.mul(lin_type);
                        push(Core::OEvenCore { m, eps: Some(eps) }, lin, true, false);
                    }
                }
            }
        }
        DualKind::PCOEven(alpha) => {
            for m in 0..=n {
                for lin in linear_multisets(n - m) {
                    let lin_type = lin
                        .iter()
                        .fold(Sign::Plus, |acc, f| acc.mul(f.block_type()));
                    // τ square: unordered O pair with ε₁ε₂·(linear type) = α.
                    for k in 0..=m / 2 {
                        let mk = m - k;
                        let eps_pairs: Vec<(Option<Sign>, Option<Sign>)> = if k == 0 && mk == 0 {
                            if lin_type == alpha {
                                vec![(None, None)]
                            } else {
                                vec![]
                            }
                        } else if k == 0 {
                            vec![(None, Some(alpha.mul(lin_type)))]
                        } else {
                            // Both parts present: ε₁ free, ε₂ determined;
                            // dedupe the unordered equal-split case.
                            let mut v = Vec::new();
                            for e1 in Sign::both() {
                                let e2 = alpha.mul(lin_type).mul(e1);
                                if k == mk && (e1, e2) > (e2, e1) {
                                    continue;
                                }
                                v.push((Some(e1), Some(e2)));
                            }
                            v
                        };
                        for (eps1, eps2) in eps_pairs {
                            push(
                                Core::OPair { k, mk, eps1, eps2 },
                                lin.clone(),
                                true,
                                true,
                            );
                        }
                    }
                    // τ non-square: O^ε_m(q²), m even. The twisted core sits
                    // in a base quadratic space of type ε (hyperbolic stays
                    // hyperbolic under restriction of scalars, and only this
                    // assignment makes the centralizer order divide the group
                    // order), so ε·(linear type) = α.
                    if m % 2 == 0 {
                        if m == 0 {
                            if lin_type == alpha {
                                push(Core::OTwisted { half: 0, eps: None }, lin.clone(), false, true);
                            }
                        } else {
                            let eps = alpha.mul(lin_type);
                            push(
                                Core::OTwisted { half: m / 2, eps: Some(eps) },
                                lin.clone(),
                                false,
                                true,
                            );
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
