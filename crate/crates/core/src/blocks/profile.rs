use serde::{Deserialize, Serialize};

use crate::combinatorics::{is_prime, nat_pow, valuation, Nat};
use crate::error::{Error, Result};

/// The ℓ-adic profile of a field size: `d = d_ℓ(q)`, `a = ν_ℓ(q^d − 1)` and
/// `d' = d / gcd(d, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EllProfile {
    pub ell: u64,
    pub d: u64,
    pub a: u64,
    pub dprime: u64,
    /// The field size the profile was derived from, if any.
    pub q: Option<u64>,
}

impl EllProfile {
    /// A synthetic profile, not tied to a witness `q`.
    pub fn new(ell: u64, d: u64, a: u64) -> Result<Self> {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        if d == 0 || a == 0 {
            return Err(Error::InvalidParameter("d and a must be positive".into()));
        }
        if ell != 2 && (ell - 1) % d != 0 {
            return Err(Error::OrderNotDividing { ell, d });
        }
        Ok(EllProfile {
            ell,
            d,
            a,
            dprime: if d % 2 == 0 { d / 2 } else { d },
            q: None,
        })
    }
}

fn multiplicative_order(q: u64, modulus: u64) -> u64 {
    let q = q % modulus;
    let mut x = q;
    let mut k = 1;
    while x != 1 % modulus {
        x = x * q % modulus;
        k += 1;
    }
    k
}

/// `d_ℓ(q)` and `ν_ℓ(q^d − 1)`. For `ℓ = 2` the order is taken modulo 4 as
/// usual; downstream block formulas still reject `ℓ = 2`.
pub fn ell_profile(q: u64, ell: u64) -> Result<EllProfile> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if q < 2 {
        return Err(Error::InvalidParameter(format!("q = {q} is not a prime power")));
    }
    if q % ell == 0 {
        return Err(Error::EllDividesQ { ell, q });
    }
    let d = if ell == 2 {
        multiplicative_order(q, 4)
    } else {
        multiplicative_order(q, ell)
    };
    let a = valuation(ell, &(nat_pow(q, d) - Nat::from(1u8)));
    Ok(EllProfile {
        ell,
        d,
        a,
        dprime: if d % 2 == 0 { d / 2 } else { d },
        q: Some(q),
    })
}

/// Profile of `−q`: `e = ord_ℓ(−q)` and `a = ν_ℓ((−q)^e − 1)`, the parameters
/// the unitary groups `GU_n(q)` inherit.
pub fn ell_profile_negated(q: u64, ell: u64) -> Result<EllProfile> {
    if ell == 2 {
        return Err(Error::EvenEll);
    }
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if q % ell == 0 {
        return Err(Error::EllDividesQ { ell, q });
    }
    let neg = ell - q % ell;
    let e = multiplicative_order(neg, ell);
    // (−q)^e − 1 = q^e − 1 for even e and −(q^e + 1) for odd e.
    let value = if e % 2 == 0 {
        nat_pow(q, e) - Nat::from(1u8)
    } else {
        nat_pow(q, e) + Nat::from(1u8)
    };
    Ok(EllProfile {
        ell,
        d: e,
        a: valuation(ell, &value),
        dprime: if e % 2 == 0 { e / 2 } else { e },
        q: Some(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_examples() {
        let p = ell_profile(4, 3).unwrap();
        assert_eq!((p.d, p.a), (1, 1));
        // 7 has order 4 mod 5 and 7^4 − 1 = 2400 = 2^5·3·5^2.
        let p = ell_profile(7, 5).unwrap();
        assert_eq!((p.d, p.a, p.dprime), (4, 2, 2));
        let p = ell_profile(8, 7).unwrap();
        assert_eq!((p.d, p.a), (1, 1));
        assert_eq!(ell_profile(9, 3), Err(Error::EllDividesQ { ell: 3, q: 9 }));
        let p = ell_profile(3, 2).unwrap();
        assert_eq!((p.d, p.a), (2, 3));
    }

    #[test]
    fn negated_profile() {
        // q = 11 ≡ 1 mod 5, so −q has order 2 and (−q)^2 − 1 = 120.
        let p = ell_profile_negated(11, 5).unwrap();
        assert_eq!((p.d, p.a), (2, 1));
        // q = 2: −2 ≡ 1 mod 3 and (−2) − 1 = −3.
        let p = ell_profile_negated(2, 3).unwrap();
        assert_eq!((p.d, p.a), (1, 1));
        let p = ell_profile_negated(8, 3).unwrap();
        assert_eq!((p.d, p.a), (1, 2));
    }

    #[test]
    fn synthetic_profile_validation() {
        assert!(EllProfile::new(7, 3, 1).is_ok());
        assert_eq!(EllProfile::new(7, 4, 1), Err(Error::OrderNotDividing { ell: 7, d: 4 }));
        assert_eq!(EllProfile::new(9, 1, 1), Err(Error::NotPrime(9)));
    }
}
