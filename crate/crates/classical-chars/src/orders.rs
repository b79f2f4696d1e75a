//! Exact orders and p′-parts of the classical group factors that appear in
//! semisimple centralizers.
//!
//! Every order is a polynomial in `q`; the p′-part is the order with the full
//! power of `q` removed. Representing p′-parts as polynomials is sound
//! because the q-power part is exactly the monomial factor
//! (`order_full / order_pprime` is always a pure power of `q`, and the tests
//! assert this), and it lets every index of a centralizer be a single exact
//! polynomial.
//!
//! Conventions:
//! * `|O^ε_{2m}|_{p′} = 2(q^m−ε)·∏_{i=1}^{m−1}(q^{2i}−1)` for `m ≥ 1`, and
//!   `|O^ε_0| = 1`; `SO^ε_{2m}` and (for even `q`) `Ω^ε_{2m}` drop the
//!   factor 2.
//! * A factor with field-extension degree `k` lives over `q^k`: its order
//!   polynomial is the base-field polynomial with `q → q^k`.
//! * `Cyclic` denotes the similitude extension `ℤ_{q−1}`.

use crate::qpoly::QPoly;
use std::fmt;

/// Sign attached to even orthogonal and linear/unitary factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// +1 or −1.
    pub fn val(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Product of signs.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Family of a classical factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum GroupFamily {
    /// `Sp_{2n}(q^k)`; `rank` = n.
    Sp,
    /// `SO_{2n+1}(q^k)`; `rank` = n.
    SOOdd,
    /// `O^ε_{2m}(q^k)`; `rank` = m.
    OEven,
    /// `SO^ε_{2m}(q^k)`; `rank` = m.
    SOEven,
    /// `Ω^ε_{2m}(q)`, q even; `rank` = m. Same p′-part as `SOEven`.
    OmegaEven,
    /// `GL_a(q^k)`; `rank` = a.
    GL,
    /// `GU_a(q^k)`; `rank` = a.
    GU,
    /// `ℤ_{q−1}` similitude extension.
    Cyclic,
    Trivial,
}

/// A classical group factor with computable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub family: GroupFamily,
    pub rank: u32,
    /// Field-extension degree `k ≥ 1`: the factor lives over `q^k`.
    pub ext: u32,
    /// Required for the even orthogonal families; `None` elsewhere.
    pub sign: Option<Sign>,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, rank: u32, ext: u32, sign: Option<Sign>) -> GroupSpec {
        debug_assert!(ext >= 1);
        debug_assert!(
            !matches!(family, GroupFamily::OEven | GroupFamily::SOEven | GroupFamily::OmegaEven)
                || sign.is_some()
                || rank == 0,
            "even orthogonal families require a sign"
        );
        GroupSpec { family, rank, ext, sign }
    }

    pub fn sp(n: u32) -> GroupSpec {
        GroupSpec::new(GroupFamily::Sp, n, 1, None)
    }

    pub fn so_odd(n: u32) -> GroupSpec {
        GroupSpec::new(GroupFamily::SOOdd, n, 1, None)
    }

    pub fn o_even(m: u32, sign: Sign) -> GroupSpec {
        GroupSpec::new(GroupFamily::OEven, m, 1, Some(sign))
    }

    pub fn gl(a: u32, k: u32) -> GroupSpec {
        GroupSpec::new(GroupFamily::GL, a, k, None)
    }

    pub fn gu(a: u32, k: u32) -> GroupSpec {
        GroupSpec::new(GroupFamily::GU, a, k, None)
    }

    /// p′-part of the order (full power of `q` removed) as an exact
    /// polynomial over the base `q`.
    pub fn order_pprime(&self) -> QPoly {
        let base = self.order_pprime_base();
        base.substitute_q_power(self.ext as usize)
    }

    /// Full order as an exact polynomial over the base `q`.
    pub fn order_full(&self) -> QPoly {
        let base = &self.order_pprime_base() * &QPoly::q_pow(self.q_exponent_base());
        base.substitute_q_power(self.ext as usize)
    }

    /// p′-part over the factor's own field (before the `q → q^k` fold-in).
    fn order_pprime_base(&self) -> QPoly {
        let n = self.rank as usize;
        match self.family {
            GroupFamily::Sp | GroupFamily::SOOdd => {
                QPoly::product((1..=n).map(|i| QPoly::q_pow_plus(2 * i, -1)).collect::<Vec<_>>().iter())
            }
            GroupFamily::OEven | GroupFamily::SOEven | GroupFamily::OmegaEven => {
                if n == 0 {
                    return QPoly::one();
                }
                let eps = self.sign.expect("sign required").val();
                let mut p = QPoly::q_pow_plus(n, -eps);
                for i in 1..n {
                    p = &p * &QPoly::q_pow_plus(2 * i, -1);
                }
                if self.family == GroupFamily::OEven {
                    p = &QPoly::int(2) * &p;
                }
                p
            }
            GroupFamily::GL => {
                QPoly::product((1..=n).map(|i| QPoly::q_pow_plus(i, -1)).collect::<Vec<_>>().iter())
            }
            GroupFamily::GU => QPoly::product(
                (1..=n)
                    .map(|i| QPoly::q_pow_plus(i, if i % 2 == 1 { 1 } else { -1 }))
                    .collect::<Vec<_>>()
                    .iter(),
            ),
            GroupFamily::Cyclic => QPoly::q_pow_plus(1, -1),
            GroupFamily::Trivial => QPoly::one(),
        }
    }

    /// Exponent of `q` in the full order, over the factor's own field.
    fn q_exponent_base(&self) -> usize {
        let n = self.rank as usize;
        match self.family {
            GroupFamily::Sp | GroupFamily::SOOdd => n * n,
            GroupFamily::OEven | GroupFamily::SOEven | GroupFamily::OmegaEven => {
                n.saturating_sub(1) * n
            }
            GroupFamily::GL | GroupFamily::GU => n.saturating_sub(1) * n / 2,
            GroupFamily::Cyclic | GroupFamily::Trivial => 0,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = |k: u32| -> String {
            if k == 1 {
                "q".into()
            } else {
                format!("q^{k}")
            }
        };
        match self.family {
            GroupFamily::Sp => write!(f, "Sp{}({})", 2 * self.rank, field(self.ext)),
            GroupFamily::SOOdd => write!(f, "SO{}({})", 2 * self.rank + 1, field(self.ext)),
            GroupFamily::OEven => write!(
                f,
                "O{}{}({})",
                2 * self.rank,
                self.sign.map(|s| s.to_string()).unwrap_or_default(),
                field(self.ext)
            ),
            GroupFamily::SOEven => write!(
                f,
                "SO{}{}({})",
                2 * self.rank,
                self.sign.map(|s| s.to_string()).unwrap_or_default(),
                field(self.ext)
            ),
            GroupFamily::OmegaEven => write!(
                f,
                "Omega{}{}({})",
                2 * self.rank,
                self.sign.map(|s| s.to_string()).unwrap_or_default(),
                field(self.ext)
            ),
            GroupFamily::GL => write!(f, "GL{}({})", self.rank, field(self.ext)),
            GroupFamily::GU => write!(f, "GU{}({})", self.rank, field(self.ext)),
            GroupFamily::Cyclic => write!(f, "Z(q-1)"),
            GroupFamily::Trivial => write!(f, "1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn sp_rank2() {
        let g = GroupSpec::sp(2);
        let p = g.order_pprime();
        assert_eq!(
            p,
            &QPoly::q_pow_plus(2, -1) * &QPoly::q_pow_plus(4, -1)
        );
        assert_eq!(p.eval_int(&BigInt::from(3)).unwrap(), BigInt::from(640));
    }

    #[test]
    fn gu2_order() {
        let g = GroupSpec::gu(2, 1);
        assert_eq!(
            g.order_pprime(),
            &QPoly::q_pow_plus(1, 1) * &QPoly::q_pow_plus(2, -1)
        );
    }

    #[test]
    fn o2_minus_dihedral() {
        let g = GroupSpec::o_even(1, Sign::Minus);
        assert_eq!(g.order_pprime(), &QPoly::int(2) * &QPoly::q_pow_plus(1, 1));
    }

    #[test]
    fn full_orders() {
        // Sp_2 = SL_2: q(q²−1).
        let g = GroupSpec::sp(1);
        assert_eq!(g.order_full(), &QPoly::q_pow(1) * &QPoly::q_pow_plus(2, -1));
        // SO_5: q⁴(q²−1)(q⁴−1).
        let g = GroupSpec::so_odd(2);
        assert_eq!(
            g.order_full(),
            &(&QPoly::q_pow(4) * &QPoly::q_pow_plus(2, -1)) * &QPoly::q_pow_plus(4, -1)
        );
        assert!(GroupSpec::new(GroupFamily::Trivial, 0, 1, None)
            .order_full()
            .is_one());
    }

    #[test]
    fn monomial_quotient() {
        for g in [
            GroupSpec::sp(3),
            GroupSpec::so_odd(4),
            GroupSpec::o_even(3, Sign::Plus),
            GroupSpec::o_even(3, Sign::Minus),
            GroupSpec::new(GroupFamily::SOEven, 2, 1, Some(Sign::Minus)),
            GroupSpec::new(GroupFamily::OmegaEven, 4, 1, Some(Sign::Plus)),
            GroupSpec::gl(3, 2),
            GroupSpec::gu(4, 1),
            GroupSpec::new(GroupFamily::Sp, 2, 2, None),
            GroupSpec::new(GroupFamily::Cyclic, 0, 1, None),
        ] {
            let quot = g.order_full().exact_div(&g.order_pprime()).unwrap();
            assert!(quot.is_monomial(), "{g}: {quot} not a monomial");
        }
    }

    #[test]
    fn o_vs_so_factor_two() {
        for m in 1..5u32 {
            for s in Sign::both() {
                let o = GroupSpec::o_even(m, s).order_pprime();
                let so = GroupSpec::new(GroupFamily::SOEven, m, 1, Some(s)).order_pprime();
                assert_eq!(o, &QPoly::int(2) * &so);
            }
        }
    }

    #[test]
    fn extension_fold_in() {
        // GL_2 over q²: (q²−1)(q⁴−1).
        let g = GroupSpec::gl(2, 2);
        assert_eq!(
            g.order_pprime(),
            &QPoly::q_pow_plus(2, -1) * &QPoly::q_pow_plus(4, -1)
        );
        // Sp_4(q²) = Sp rank 2 ext 2: (q⁴−1)(q⁸−1).
        let g = GroupSpec::new(GroupFamily::Sp, 2, 2, None);
        assert_eq!(
            g.order_pprime(),
            &QPoly::q_pow_plus(4, -1) * &QPoly::q_pow_plus(8, -1)
        );
    }
}
