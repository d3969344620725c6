//! Block invariants per group family: closed formulas for `k(B)`, defect
//! group orders, abelianness, verdicts for `k(B) ≤ |D|`, the explicit upper
//! estimates for `SL_n`, and the sweep engine.
//!
//! Only odd ℓ is supported. Blocks are addressed by their weight `w`; the
//! formulas depend only on `(ℓ, d, a, w)`.

mod profile;
mod sweep;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use profile::{ell_profile, ell_profile_negated, EllProfile};
pub use sweep::{cross_check, evaluate_row, sweep, SweepRow};

use crate::combinatorics::{
    composition_weighted_sum, d_core_count, ell_power_u64, exact_div, is_prime, k_ell_a_w,
    nat_pow, p_ell, val_factorial, valuation_u64, Nat,
};
use crate::error::{Error, Result};
use crate::family::GroupFamily;

/// A unipotent block to evaluate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockQuery {
    pub family: GroupFamily,
    /// Rank parameter: `GL_n`, `Sp_{2n}`, `SO_{2n+1}`, `SO_{2n}^±`, ...
    pub n: u64,
    pub profile: EllProfile,
    /// Block weight; equals `n` for the principal-block families.
    pub w: u64,
    /// ν_ℓ of the index `|GL_n : G|` (principal-block families only).
    pub g: u64,
    /// ν_ℓ of `gcd(n, q − ε)` (principal-block families only).
    pub m: u64,
    /// `+1` or `−1`; the twist of unitary and even-orthogonal types.
    pub epsilon: i8,
}

impl BlockQuery {
    /// A weight-`w` unipotent block in the smallest group of `family` that
    /// holds it.
    pub fn weighted(family: GroupFamily, profile: EllProfile, w: u64) -> Self {
        let unit = weight_unit(family, &profile);
        let epsilon = match family {
            GroupFamily::Gu
            | GroupFamily::SuRange
            | GroupFamily::SoEvenMinus
            | GroupFamily::GoEvenMinus => -1,
            _ => 1,
        };
        BlockQuery {
            family,
            n: (w * unit).max(family.min_rank()),
            profile,
            w,
            g: 0,
            m: 0,
            epsilon,
        }
    }

    /// Principal block of `SL_n(εq) ≤ G ≤ GL_n(εq)` with `|GL_n : G|_ℓ = ℓ^g`;
    /// `m` is forced to `min(ν_ℓ(n), a)`.
    pub fn principal(family: GroupFamily, profile: EllProfile, n: u64, g: u64) -> Self {
        let m = forced_m(n, profile.ell, profile.a);
        let epsilon = if family == GroupFamily::SuRange { -1 } else { 1 };
        BlockQuery {
            family,
            n,
            profile,
            w: n,
            g,
            m,
            epsilon,
        }
    }

    /// Principal block of `PSL_ℓ(q)` with `ℓ^a || q − 1`.
    pub fn psl(profile: EllProfile) -> Self {
        let ell = profile.ell;
        BlockQuery {
            family: GroupFamily::PslEll,
            n: ell,
            profile,
            w: ell,
            g: profile.a,
            m: 1,
            epsilon: 1,
        }
    }

    pub fn with_n(mut self, n: u64) -> Self {
        self.n = n;
        self
    }
}

/// `ν_ℓ(gcd(n, q − ε))` given `ℓ^a || q − ε`.
pub fn forced_m(n: u64, ell: u64, a: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    valuation_u64(ell, n).min(a)
}

/// Rank consumed by one unit of block weight: `d` for linear and unitary
/// groups, `d'` for symplectic and orthogonal groups.
pub fn weight_unit(family: GroupFamily, profile: &EllProfile) -> u64 {
    if family.is_bc_type() {
        profile.dprime
    } else if family.is_principal_only() {
        1
    } else {
        profile.d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    UpperBound,
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exactness::Exact => "exact",
            Exactness::UpperBound => "upper_bound",
        })
    }
}

/// Outcome of comparing `k(B)` with `|D|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// `k(B) < |D|`.
    HoldsStrict,
    /// `k(B) = |D|` with abelian defect group.
    HoldsEqualityAbelian,
    /// `k(B) = |D|` with non-abelian defect group: the strong form fails.
    HoldsNonstrict,
    Violation,
    /// Only an upper bound is known and it does not settle the inequality.
    InconclusiveUpperBound,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::HoldsStrict => "HOLDS_STRICT",
            Verdict::HoldsEqualityAbelian => "HOLDS_EQUALITY_ABELIAN",
            Verdict::HoldsNonstrict => "HOLDS_NONSTRICT",
            Verdict::Violation => "VIOLATION",
            Verdict::InconclusiveUpperBound => "INCONCLUSIVE_UPPER_BOUND",
        }
    }

    /// Verdicts that contradict the strong form.
    pub fn is_failure(self) -> bool {
        matches!(self, Verdict::Violation | Verdict::HoldsNonstrict)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockInvariants {
    #[serde(with = "crate::combinatorics::nat_serde")]
    pub k_b: Nat,
    pub exactness: Exactness,
    /// `|D| = ℓ^defect_exponent`.
    pub defect_exponent: u64,
    pub abelian_defect: bool,
    pub verdict: Verdict,
}

fn check_odd_profile(profile: &EllProfile) -> Result<()> {
    let ell = profile.ell;
    if ell == 2 {
        return Err(Error::EvenEll);
    }
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if profile.d == 0 || (ell - 1) % profile.d != 0 {
        return Err(Error::OrderNotDividing { ell, d: profile.d });
    }
    if profile.a == 0 {
        return Err(Error::InvalidParameter("a must be positive".into()));
    }
    let expected = if profile.d % 2 == 0 { profile.d / 2 } else { profile.d };
    if profile.dprime != expected {
        return Err(Error::InvalidParameter(format!(
            "d' = {} does not match d = {}",
            profile.dprime, profile.d
        )));
    }
    Ok(())
}

/// The closed formula
/// `Σ_𝐰 k(c + (ℓ^a − 1)/c, w_0)·∏_{i≥1} k((ℓ^a − ℓ^{a−1})/c, w_i)` with
/// `c = d` for `GL`/`GU` and `c = 2d'` for the symplectic and orthogonal
/// families.
pub fn closed_form_count(family: GroupFamily, ell: u64, d: u64, a: u64, w: u64) -> Result<Nat> {
    let profile = EllProfile::new(ell, d, a)?;
    check_odd_profile(&profile)?;
    let colours = if family.is_linear_type() {
        d
    } else if family.is_bc_type() {
        2 * profile.dprime
    } else {
        return Err(Error::Unsupported(format!(
            "{family} has no weight formula; use the principal-block formula"
        )));
    };
    let top = ell_power_u64(ell, a)?;
    let divide = |x: u64| -> Result<u64> {
        if x % colours != 0 {
            Err(Error::InexactDivision {
                numerator: x.to_string(),
                denominator: colours.to_string(),
            })
        } else {
            Ok(x / colours)
        }
    };
    let base = colours + divide(top - 1)?;
    let deep = divide(top - top / ell)?;
    Ok(composition_weighted_sum(ell, w, base, deep))
}

fn check_weight_fits(query: &BlockQuery) -> Result<()> {
    let family = query.family;
    if query.n < family.min_rank() {
        return Err(Error::InvalidParameter(format!(
            "{family} requires n >= {}, got {}",
            family.min_rank(),
            query.n
        )));
    }
    let unit = weight_unit(family, &query.profile);
    if query.w * unit > query.n {
        return Err(Error::InvalidParameter(format!(
            "weight {} needs rank at least {}, got n = {}",
            query.w,
            query.w * unit,
            query.n
        )));
    }
    Ok(())
}

/// `k(B)` for a weight-`w` unipotent block of `GL`, `GU`, `Sp`, `SO_{2n+1}`
/// or `GO^±_{2n}` (exact), or of `SO^±_{2n}` (upper bound).
pub fn k_unipotent_block(query: &BlockQuery) -> Result<(Nat, Exactness)> {
    check_odd_profile(&query.profile)?;
    if query.family.is_principal_only() {
        return Err(Error::Unsupported(format!(
            "{} blocks are evaluated by the principal-block formula",
            query.family
        )));
    }
    check_weight_fits(query)?;
    let p = &query.profile;
    let count = closed_form_count(query.family, p.ell, p.d, p.a, query.w)?;
    let exactness = match query.family {
        GroupFamily::SoEvenPlus | GroupFamily::SoEvenMinus => Exactness::UpperBound,
        _ => Exactness::Exact,
    };
    Ok((count, exactness))
}

fn check_principal(query: &BlockQuery) -> Result<()> {
    check_odd_profile(&query.profile)?;
    let p = &query.profile;
    if p.d != 1 {
        return Err(Error::InvalidParameter(format!(
            "the principal-block formula needs ell | q - epsilon (d = 1), got d = {}",
            p.d
        )));
    }
    if query.n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if query.w != query.n {
        return Err(Error::InvalidParameter(format!(
            "principal block of rank {} has weight {}, got w = {}",
            query.n, query.n, query.w
        )));
    }
    if query.g > p.a {
        return Err(Error::InvalidParameter(format!(
            "g = {} exceeds a = {}: |GL_n : G|_ell divides (q - epsilon)_ell",
            query.g, p.a
        )));
    }
    let m = forced_m(query.n, p.ell, p.a);
    if query.m != m {
        return Err(Error::InvalidParameter(format!(
            "m must equal min(nu_ell(n), a) = {m}, got {}",
            query.m
        )));
    }
    Ok(())
}

/// `k(B)` for the principal ℓ-block of `SL_n(εq) ≤ G ≤ GL_n(εq)`:
/// `(k(ℓ,a,n) + Σ_{i=1}^{u} ℓ^{2i−2}(ℓ² − 1)·k(ℓ,a,n/ℓ^i)) / ℓ^g` with
/// `u = min(m, g)`; terms with `ℓ^i ∤ n` vanish.
pub fn k_principal_slrange(query: &BlockQuery) -> Result<Nat> {
    if !matches!(query.family, GroupFamily::SlRange | GroupFamily::SuRange) {
        return Err(Error::Unsupported(format!(
            "{} is not an SL/SU range family",
            query.family
        )));
    }
    check_principal(query)?;
    principal_slrange_value(query.profile.ell, query.profile.a, query.n, query.g, query.m)
}

fn principal_slrange_value(ell: u64, a: u64, n: u64, g: u64, m: u64) -> Result<Nat> {
    let u = m.min(g);
    let mut total = k_ell_a_w(ell, a, n)?;
    let mut power = 1u64;
    for i in 1..=u {
        power *= ell;
        if n % power != 0 {
            continue;
        }
        let coeff = nat_pow(ell, 2 * i - 2) * (ell * ell - 1);
        total += coeff * k_ell_a_w(ell, a, n / power)?;
    }
    exact_div(&total, &nat_pow(ell, g))
}

/// `k(B̄)` for the principal block of `PSL_ℓ(q)`: `(k(B) + ℓ − 1)/ℓ` with
/// `k(B)` the principal block count of `SL_ℓ(q)`.
pub fn k_principal_pslell(ell: u64, a: u64) -> Result<Nat> {
    let profile = EllProfile::new(ell, 1, a)?;
    check_odd_profile(&profile)?;
    let k_sl = principal_slrange_value(ell, a, ell, a, 1)?;
    exact_div(&(k_sl + (ell - 1)), &Nat::from(ell))
}

/// Exponent `e` with `|D| = ℓ^e`.
///
/// Weight-`w` blocks have defect group `C_{ℓ^a} ≀ P` with `P` a Sylow
/// ℓ-subgroup of `G(c,1,w)`, so `e = a·w + ν_ℓ(w!)`. The principal block of
/// `G` between `SL_n` and `GL_n` loses `g`, and `PSL_ℓ` a further `m`.
pub fn defect_exponent(query: &BlockQuery) -> Result<u64> {
    let p = &query.profile;
    check_odd_profile(p)?;
    let ell = p.ell;
    match query.family {
        GroupFamily::SlRange | GroupFamily::SuRange => {
            let full = p.a * query.n + val_factorial(ell, query.n);
            full.checked_sub(query.g)
                .ok_or_else(|| Error::InvalidParameter("g exceeds the Sylow exponent".into()))
        }
        GroupFamily::PslEll => {
            let full = p.a * query.n + val_factorial(ell, query.n);
            full.checked_sub(query.g + query.m)
                .ok_or_else(|| Error::InvalidParameter("g + m exceeds the Sylow exponent".into()))
        }
        _ => Ok(p.a * query.w + val_factorial(ell, query.w)),
    }
}

/// Whether the wreath defect group `C_{ℓ^a} ≀ P` of a weight-`w` block is
/// abelian, i.e. `P = 1`.
pub fn is_abelian_defect(w: u64, ell: u64) -> bool {
    w < ell
}

/// Abelianness of the defect group of `query`'s block.
///
/// For `PSL_ℓ(q)` the Sylow ℓ-subgroup is `(C_{ℓ^a}^{ℓ−1})/C_ℓ ⋊ C_ℓ`; the
/// ℓ-cycle acts trivially only when the determinant-one diagonal part
/// consists of geometric progressions times scalars, which happens exactly
/// for `(ℓ, a) = (3, 1)`.
pub fn query_abelian_defect(query: &BlockQuery) -> bool {
    let p = &query.profile;
    match query.family {
        GroupFamily::SlRange | GroupFamily::SuRange => is_abelian_defect(query.n, p.ell),
        GroupFamily::PslEll => p.ell == 3 && p.a == 1,
        _ => is_abelian_defect(query.w, p.ell),
    }
}

/// Compares `k_b` with `|D| = ℓ^defect_exponent`.
///
/// For an upper bound, equality with abelian defect is still conclusive
/// (`k(B) ≤ |D|` holds); anything at or above the threshold otherwise is
/// inconclusive.
pub fn verdict(
    k_b: &Nat,
    exactness: Exactness,
    defect_exponent: u64,
    abelian: bool,
    ell: u64,
) -> Verdict {
    let order = nat_pow(ell, defect_exponent);
    match (exactness, k_b.cmp(&order)) {
        (_, std::cmp::Ordering::Less) => Verdict::HoldsStrict,
        (_, std::cmp::Ordering::Equal) if abelian => Verdict::HoldsEqualityAbelian,
        (Exactness::Exact, std::cmp::Ordering::Equal) => Verdict::HoldsNonstrict,
        (Exactness::Exact, std::cmp::Ordering::Greater) => Verdict::Violation,
        (Exactness::UpperBound, _) => Verdict::InconclusiveUpperBound,
    }
}

/// The estimate
/// `(p_ℓ(n)·ℓ^{an} + Σ_{i=1}^{m} p_ℓ(n/ℓ^i)·ℓ^{an/ℓ^i + 2i}) / ℓ^a`
/// for the principal block of `SL_n(q)`.
pub fn bound_thm_slnproof(n: u64, ell: u64, a: u64, m: u64) -> Result<Nat> {
    if ell == 2 {
        return Err(Error::EvenEll);
    }
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let mut total = p_ell(ell, n) * nat_pow(ell, a * n);
    let mut power = 1u64;
    for i in 1..=m {
        power *= ell;
        if n % power != 0 {
            continue;
        }
        let part = n / power;
        total += p_ell(ell, part) * nat_pow(ell, a * part + 2 * i);
    }
    exact_div(&total, &nat_pow(ell, a))
}

/// Unipotent blocks of `GL_n(q)` with `d = d_ℓ(q)`, grouped by weight: each
/// weight `w` occurs once per `d`-core of `n − wd`. Highest weight first.
pub fn enumerate_unipotent_blocks_linear(n: u64, d: u64) -> Vec<(u64, Nat)> {
    assert!(d >= 1, "d must be positive");
    (0..=n / d)
        .rev()
        .filter_map(|w| {
            let count = d_core_count(n - w * d, d);
            (!count.is_zero()).then_some((w, count))
        })
        .collect()
}

/// Full invariants of one block.
pub fn evaluate(query: &BlockQuery) -> Result<BlockInvariants> {
    let (k_b, exactness) = match query.family {
        GroupFamily::SlRange | GroupFamily::SuRange => (k_principal_slrange(query)?, Exactness::Exact),
        GroupFamily::PslEll => {
            let p = &query.profile;
            check_odd_profile(p)?;
            if query.n != p.ell || query.g != p.a || query.m != 1 || query.w != query.n {
                return Err(Error::InvalidParameter(
                    "PSL_ell queries need n = w = ell, g = a and m = 1".into(),
                ));
            }
            (k_principal_pslell(p.ell, p.a)?, Exactness::Exact)
        }
        _ => k_unipotent_block(query)?,
    };
    let defect = defect_exponent(query)?;
    let abelian = query_abelian_defect(query);
    Ok(BlockInvariants {
        verdict: verdict(&k_b, exactness, defect, abelian, query.profile.ell),
        k_b,
        exactness,
        defect_exponent: defect,
        abelian_defect: abelian,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn profile(ell: u64, d: u64, a: u64) -> EllProfile {
        EllProfile::new(ell, d, a).unwrap()
    }

    #[test]
    fn sp4_block() {
        let q = BlockQuery::weighted(GroupFamily::Sp, profile(3, 1, 1), 2);
        assert_eq!(q.n, 2);
        let inv = evaluate(&q).unwrap();
        assert_eq!(inv.k_b, n(9));
        assert_eq!(inv.defect_exponent, 2);
        assert!(inv.abelian_defect);
        assert_eq!(inv.verdict, Verdict::HoldsEqualityAbelian);
    }

    #[test]
    fn weight_zero_blocks_hold_one_character() {
        for family in [
            GroupFamily::Gl,
            GroupFamily::Gu,
            GroupFamily::Sp,
            GroupFamily::SoOdd,
            GroupFamily::GoEvenPlus,
            GroupFamily::SoEvenMinus,
        ] {
            let q = BlockQuery::weighted(family, profile(5, 2, 1), 0);
            assert_eq!(k_unipotent_block(&q).unwrap().0, Nat::one());
            assert_eq!(defect_exponent(&q).unwrap(), 0);
        }
    }

    #[test]
    fn gl3_principal_block() {
        let q = BlockQuery::weighted(GroupFamily::Gl, profile(3, 1, 1), 3);
        let inv = evaluate(&q).unwrap();
        assert_eq!(inv.k_b, n(24));
        assert_eq!(inv.k_b, k_ell_a_w(3, 1, 3).unwrap());
        assert_eq!(inv.defect_exponent, 4);
        assert!(!inv.abelian_defect);
        assert_eq!(inv.verdict, Verdict::HoldsStrict);
    }

    #[test]
    fn so_even_is_upper_bound() {
        let q = BlockQuery::weighted(GroupFamily::SoEvenPlus, profile(3, 1, 1), 2);
        assert_eq!(q.n, 4);
        let (k, exactness) = k_unipotent_block(&q).unwrap();
        assert_eq!(exactness, Exactness::UpperBound);
        let go = BlockQuery::weighted(GroupFamily::GoEvenPlus, profile(3, 1, 1), 2);
        assert_eq!(k, k_unipotent_block(&go).unwrap().0);
        let small = go.clone().with_n(3);
        assert!(k_unipotent_block(&small).is_err());
    }

    #[test]
    fn rejects_even_ell_and_bad_order() {
        let bad = EllProfile {
            ell: 2,
            d: 1,
            a: 1,
            dprime: 1,
            q: None,
        };
        let q = BlockQuery::weighted(GroupFamily::Sp, bad, 1);
        assert_eq!(evaluate(&q), Err(Error::EvenEll));
        assert_eq!(
            closed_form_count(GroupFamily::Gl, 7, 4, 1, 2),
            Err(Error::OrderNotDividing { ell: 7, d: 4 })
        );
    }

    #[test]
    fn weight_must_fit() {
        let q = BlockQuery::weighted(GroupFamily::Sp, profile(5, 4, 1), 3).with_n(5);
        assert!(matches!(k_unipotent_block(&q), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn slrange_examples() {
        // SL_2(4): n = 2, ℓ = 3, a = 1, g = 1, m = 0.
        let q = BlockQuery::principal(GroupFamily::SlRange, profile(3, 1, 1), 2, 1);
        assert_eq!(q.m, 0);
        assert_eq!(k_principal_slrange(&q).unwrap(), n(3));
        let q = BlockQuery::principal(GroupFamily::SlRange, profile(3, 1, 1), 3, 1);
        assert_eq!(q.m, 1);
        assert_eq!(k_principal_slrange(&q).unwrap(), n(16));
        assert_eq!(defect_exponent(&q).unwrap(), 3);
    }

    #[test]
    fn slrange_degenerates_to_gl() {
        for ell in [3, 5] {
            for a in 1..=2 {
                for size in 1..=12 {
                    let q = BlockQuery::principal(GroupFamily::SlRange, profile(ell, 1, a), size, 0);
                    assert_eq!(k_principal_slrange(&q).unwrap(), k_ell_a_w(ell, a, size).unwrap());
                }
            }
        }
    }

    #[test]
    fn slrange_rejects_inconsistent_m() {
        let mut q = BlockQuery::principal(GroupFamily::SlRange, profile(3, 1, 1), 3, 1);
        q.m = 0;
        assert!(k_principal_slrange(&q).is_err());
        let q = BlockQuery::principal(GroupFamily::SlRange, profile(3, 1, 1), 3, 2);
        assert!(k_principal_slrange(&q).is_err());
    }

    #[test]
    fn psl_examples() {
        // (16 + 2)/3 and (37 + 2)/3 from the SL_3 values at a = 1, 2.
        assert_eq!(k_principal_pslell(3, 1).unwrap(), n(6));
        assert_eq!(k_principal_pslell(3, 2).unwrap(), n(13));
        for a in 1..=2u64 {
            let k = k_principal_pslell(3, a).unwrap();
            assert!(k * nat_pow(3, a) <= nat_pow(3, 3 * a - a + 1));
        }
        let q = BlockQuery::psl(profile(3, 1, 1));
        let inv = evaluate(&q).unwrap();
        assert_eq!(inv.defect_exponent, 2);
        assert!(inv.abelian_defect);
        assert_eq!(inv.verdict, Verdict::HoldsStrict);
    }

    #[test]
    fn defect_examples() {
        let q = BlockQuery::weighted(GroupFamily::Sp, profile(3, 1, 1), 2);
        assert_eq!(defect_exponent(&q).unwrap(), 2);
        let q = BlockQuery::weighted(GroupFamily::Gl, profile(3, 1, 1), 0);
        assert_eq!(defect_exponent(&q).unwrap(), 0);
    }

    #[test]
    fn abelian_examples() {
        assert!(is_abelian_defect(2, 3));
        assert!(!is_abelian_defect(3, 3));
        assert!(!is_abelian_defect(5, 5));
    }

    #[test]
    fn verdict_examples() {
        assert_eq!(verdict(&n(9), Exactness::Exact, 2, true, 3), Verdict::HoldsEqualityAbelian);
        assert_eq!(verdict(&n(24), Exactness::Exact, 4, false, 3), Verdict::HoldsStrict);
        assert_eq!(verdict(&n(82), Exactness::Exact, 4, false, 3), Verdict::Violation);
        assert_eq!(verdict(&n(81), Exactness::Exact, 4, false, 3), Verdict::HoldsNonstrict);
        assert_eq!(
            verdict(&n(82), Exactness::UpperBound, 4, false, 3),
            Verdict::InconclusiveUpperBound
        );
        assert_eq!(
            verdict(&n(81), Exactness::UpperBound, 4, false, 3),
            Verdict::InconclusiveUpperBound
        );
        assert_eq!(verdict(&n(80), Exactness::UpperBound, 4, false, 3), Verdict::HoldsStrict);
    }

    #[test]
    fn slnproof_bound_examples() {
        // p_ℓ(2ℓ) = 3.
        for ell in [3, 5, 7] {
            assert_eq!(p_ell(ell, 2 * ell), n(3));
        }
        // (2·27 + 1·27)/3.
        assert_eq!(bound_thm_slnproof(3, 3, 1, 1).unwrap(), n(27));
        for (size, ell, a) in [(4, 3, 1), (7, 5, 2)] {
            assert_eq!(
                bound_thm_slnproof(size, ell, a, 0).unwrap(),
                p_ell(ell, size) * nat_pow(ell, a * size - a)
            );
        }
    }

    #[test]
    fn linear_block_enumeration() {
        for size in 1..6 {
            assert_eq!(enumerate_unipotent_blocks_linear(size, 1), vec![(size, n(1))]);
        }
        assert_eq!(enumerate_unipotent_blocks_linear(3, 2), vec![(1, n(1)), (0, n(1))]);
        // 3-cores: one of size 1, two of size 4.
        assert_eq!(enumerate_unipotent_blocks_linear(4, 3), vec![(1, n(1)), (0, n(2))]);
    }

    #[test]
    fn linear_blocks_account_for_all_unipotent_characters() {
        use crate::combinatorics::{multipartition_count, partition_count};
        for size in 1..12 {
            for d in 1..5 {
                let total: Nat = enumerate_unipotent_blocks_linear(size, d)
                    .into_iter()
                    .map(|(w, mult)| mult * multipartition_count(d, w))
                    .sum();
                assert_eq!(total, partition_count(size), "n={size} d={d}");
            }
        }
    }
}
