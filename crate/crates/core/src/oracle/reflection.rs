use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on `|G(m,p,n)| = m^n·n!/p` for exhaustive class counting.
pub const REFLECTION_GROUP_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionGroupCensus {
    pub m: u64,
    pub p: u64,
    pub n: u64,
    pub order: u64,
    pub class_count: u64,
}

/// A monomial element: `b_i ↦ ζ^{exps[i]} b_{perm[i]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Monomial {
    perm: Vec<usize>,
    exps: Vec<u64>,
}

impl Monomial {
    fn compose(&self, other: &Monomial, m: u64) -> Monomial {
        // (self ∘ other)(b_i) = ζ^{other.e_i + self.e_{other.σ(i)}} b_{self.σ(other.σ(i))}
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            exps[i] = (other.exps[i] + self.exps[j]) % m;
        }
        Monomial { perm, exps }
    }

    fn inverse(&self, m: u64) -> Monomial {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut exps = vec![0; n];
        for i in 0..n {
            let j = self.perm[i];
            perm[j] = i;
            exps[j] = (m - self.exps[i]) % m;
        }
        Monomial { perm, exps }
    }
}

/// Dense index of a monomial: Lehmer rank of the permutation times `m^n` plus
/// the exponent vector read in base `m`.
fn index(x: &Monomial, m: u64) -> usize {
    let n = x.perm.len();
    let mut rank = 0u64;
    for i in 0..n {
        let smaller = x.perm[i + 1..].iter().filter(|&&v| v < x.perm[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller;
    }
    let exps = x.exps.iter().rev().fold(0, |acc, &e| acc * m + e);
    (rank * m.pow(n as u32) + exps) as usize
}

fn unrank(mut code: u64, n: usize, m: u64) -> Monomial {
    let base = m.pow(n as u32);
    let mut e = code % base;
    code /= base;
    let mut exps = vec![0; n];
    for slot in exps.iter_mut() {
        *slot = e % m;
        e /= m;
    }
    let mut digits = vec![0u64; n];
    for i in (0..n).rev() {
        let radix = (n - i) as u64;
        digits[i] = code % radix;
        code /= radix;
    }
    let mut pool: Vec<usize> = (0..n).collect();
    let perm = digits.iter().map(|&d| pool.remove(d as usize)).collect();
    Monomial { perm, exps }
}

/// Counts conjugacy classes of `G(m, p, n)` by orbit closure under the
/// generators `s_i`, `ζ^{e_1 − e_2}` and `ζ^{p·e_1}`.
pub fn gmpn_census(m: u64, p: u64, n: u64) -> Result<ReflectionGroupCensus> {
    if m == 0 || p == 0 || n == 0 || m % p != 0 {
        return Err(Error::InvalidParameter(format!(
            "G({m},{p},{n}) needs p | m and positive parameters"
        )));
    }
    let order = (1..=n)
        .try_fold(1u64, |acc, i| acc.checked_mul(i))
        .and_then(|f| m.checked_pow(n as u32).and_then(|mn| mn.checked_mul(f)))
        .map(|total| total / p)
        .filter(|&o| o <= REFLECTION_GROUP_CAP)
        .ok_or_else(|| {
            Error::CapExceeded(format!("|G({m},{p},{n})| exceeds {REFLECTION_GROUP_CAP}"))
        })?;
    let n = n as usize;
    let identity = Monomial {
        perm: (0..n).collect(),
        exps: vec![0; n],
    };
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut s = identity.clone();
        s.perm.swap(i, i + 1);
        gens.push(s);
    }
    if n >= 2 {
        let mut t = identity.clone();
        t.exps[0] = 1 % m;
        t.exps[1] = (m - 1) % m;
        gens.push(t);
    }
    let mut t = identity.clone();
    t.exps[0] = p % m;
    gens.push(t);
    let gens: Vec<(Monomial, Monomial)> = gens.into_iter().map(|g| {
        let inv = g.inverse(m);
        (g, inv)
    }).collect();

    let space = order as usize * p as usize;
    let mut seen = vec![false; space];
    let mut classes = 0u64;
    let mut elements = 0u64;
    let mut queue = VecDeque::new();
    for start in 0..space {
        if seen[start] {
            continue;
        }
        let x = unrank(start as u64, n, m);
        if x.exps.iter().sum::<u64>() % p != 0 {
            continue;
        }
        classes += 1;
        seen[start] = true;
        queue.push_back(x);
        while let Some(x) = queue.pop_front() {
            elements += 1;
            for (g, g_inv) in &gens {
                let y = g.compose(&x, m).compose(g_inv, m);
                let code = index(&y, m);
                if !seen[code] {
                    seen[code] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    debug_assert_eq!(elements, order);
    Ok(ReflectionGroupCensus {
        m,
        p,
        n: n as u64,
        order,
        class_count: classes,
    })
}

pub fn gmpn_class_count(m: u64, p: u64, n: u64) -> Result<u64> {
    Ok(gmpn_census(m, p, n)?.class_count)
}
