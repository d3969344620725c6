use crate::combinatorics::is_prime;
use crate::error::{Error, Result};

/// `F_q` for `q ≤ 9`, elements coded `0..q` as base-`p` coefficient vectors
/// of polynomials reduced modulo a fixed irreducible polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallField {
    q: u8,
    p: u8,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Monic modulus (low coefficients first, leading 1 omitted) per prime power.
fn default_modulus(q: u32) -> Option<(u32, Vec<u8>)> {
    match q {
        2 | 3 | 5 | 7 => Some((q, vec![])),
        // x^2 + x + 1
        4 => Some((2, vec![1, 1])),
        // x^3 + x + 1
        8 => Some((2, vec![1, 1, 0])),
        // x^2 + 1
        9 => Some((3, vec![1, 0])),
        _ => None,
    }
}

impl SmallField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, modulus) = default_modulus(q).ok_or_else(|| {
            Error::InvalidParameter(format!("q = {q} is not a prime power ≤ 9"))
        })?;
        SmallField::with_modulus(p, &modulus)
    }

    /// Builds `F_p[x]/(x^k + c_{k−1}x^{k−1} + … + c_0)` from `[c_0, …, c_{k−1}]`
    /// and checks the field axioms exhaustively.
    pub fn with_modulus(p: u32, modulus: &[u8]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let k = modulus.len().max(1) as u32;
        let q = p.pow(k);
        if q > 9 {
            return Err(Error::CapExceeded(format!("field of size {q} > 9")));
        }
        if modulus.iter().any(|&c| c as u32 >= p) {
            return Err(Error::InvalidParameter("modulus coefficient out of range".into()));
        }
        let digits = |x: u32| -> Vec<u32> { (0..k).map(|i| x / p.pow(i) % p).collect() };
        let pack = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let size = q as usize;
        let mut add = vec![0u8; size * size];
        let mut mul = vec![0u8; size * size];
        for x in 0..q {
            for y in 0..q {
                let (dx, dy) = (digits(x), digits(y));
                let sum: Vec<u32> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                // Schoolbook product, then reduce the high coefficients.
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                for deg in (k as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &m) in modulus.iter().enumerate() {
                        let at = deg - k as usize + i;
                        prod[at] = (prod[at] + (p - c) * m as u32) % p;
                    }
                }
                add[(x * q + y) as usize] = pack(&sum) as u8;
                mul[(x * q + y) as usize] = pack(&prod[..k as usize]) as u8;
            }
        }
        let mut field = SmallField {
            q: q as u8,
            p: p as u8,
            add,
            mul,
            neg: vec![0; size],
            inv: vec![0; size],
        };
        field.check_axioms()?;
        Ok(field)
    }

    fn check_axioms(&mut self) -> Result<()> {
        let q = self.q;
        let fail = |what: &str| Err(Error::InvalidParameter(format!("not a field: {what}")));
        for x in 0..q {
            let Some(n) = (0..q).find(|&y| self.add(x, y) == 0) else {
                return fail("missing additive inverse");
            };
            self.neg[x as usize] = n;
            if x != 0 {
                let Some(i) = (1..q).find(|&y| self.mul(x, y) == 1) else {
                    return fail("missing multiplicative inverse");
                };
                self.inv[x as usize] = i;
            }
            if self.add(x, 0) != x || self.mul(x, 1) != x {
                return fail("identity");
            }
            for y in 0..q {
                if self.add(x, y) != self.add(y, x) || self.mul(x, y) != self.mul(y, x) {
                    return fail("commutativity");
                }
                for z in 0..q {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z))
                        || self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z))
                        || self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z))
                    {
                        return fail("associativity or distributivity");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> u32 {
        self.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    #[inline]
    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.q as usize + y as usize]
    }

    #[inline]
    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.q as usize + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u8) -> u8 {
        self.neg[x as usize]
    }

    #[inline]
    pub fn sub(&self, x: u8, y: u8) -> u8 {
        self.add(x, self.neg(y))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: u8) -> Option<u8> {
        (x != 0).then(|| self.inv[x as usize])
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> u8 {
        let q = self.q;
        (1..q)
            .find(|&g| {
                let mut x = g;
                let mut order = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    order += 1;
                }
                order == q - 1
            })
            .expect("finite fields have cyclic unit groups")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_small_fields_build() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = SmallField::new(q).unwrap();
            assert_eq!(f.size(), q);
            let g = f.primitive_element();
            assert_ne!(g, 0);
        }
        assert!(SmallField::new(6).is_err());
        assert!(SmallField::new(16).is_err());
    }

    #[test]
    fn reducible_modulus_is_rejected() {
        // x^2 + 1 = (x + 1)^2 over F_2.
        assert!(SmallField::with_modulus(2, &[1, 0]).is_err());
        // x^2 + 2 has the root 1 over F_3.
        assert!(SmallField::with_modulus(3, &[2, 0]).is_err());
    }

    #[test]
    fn f4_arithmetic() {
        let f = SmallField::new(4).unwrap();
        // Code 2 is x; x^2 = x + 1 = code 3.
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.characteristic(), 2);
    }
}
