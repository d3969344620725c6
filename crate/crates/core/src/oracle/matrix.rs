use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::field::SmallField;
use crate::blocks::ell_profile;
use crate::combinatorics::{is_prime, Nat};
use crate::error::{Error, Result};
use crate::family::GroupFamily;
use crate::lseries::{centralizer_shape, enumerate_weight_vectors, FactorKind, SlotInventory};

/// Largest group order the matrix censuses will enumerate.
pub const MATRIX_GROUP_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixGroupKind {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "SL")]
    Sl,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    /// Row-major entries in the field's element coding. The smallest encoding
    /// in the class.
    pub representative: Vec<u8>,
    pub class_size: u64,
    pub centralizer_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixGroupCensus {
    pub group: MatrixGroupKind,
    pub n: u32,
    pub q: u32,
    /// `None` for a census of all classes.
    pub ell: Option<u64>,
    pub order: u64,
    /// Number of elements that passed the filter.
    pub element_count: u64,
    pub classes: Vec<ClassRecord>,
}

/// `|GL_m(Q)|`.
pub fn gl_order(m: u64, big_q: &Nat) -> Nat {
    let top = big_q.pow(m as u32);
    (0..m).map(|i| &top - big_q.pow(i as u32)).product()
}

/// `|GU_m(Q)| = Q^{m(m−1)/2} ∏ (Q^i − (−1)^i)`.
pub fn gu_order(m: u64, big_q: &Nat) -> Nat {
    let mut order = big_q.pow((m * m.saturating_sub(1) / 2) as u32);
    for i in 1..=m {
        let power = big_q.pow(i as u32);
        order *= if i % 2 == 0 { power - 1u8 } else { power + 1u8 };
    }
    order
}

pub fn matrix_group_order(kind: MatrixGroupKind, n: u32, q: u32) -> u64 {
    let order = gl_order(n as u64, &Nat::from(q));
    let order = match kind {
        MatrixGroupKind::Gl => order,
        MatrixGroupKind::Sl => order / (q - 1),
    };
    order.try_into().unwrap_or(u64::MAX)
}

type Mat = [u8; 9];

struct MatrixArith<'a> {
    field: &'a SmallField,
    n: usize,
}

impl MatrixArith<'_> {
    fn identity(&self) -> Mat {
        let mut m = [0u8; 9];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }

    fn mul(&self, x: &Mat, y: &Mat) -> Mat {
        let (f, n) = (self.field, self.n);
        let mut out = [0u8; 9];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc = f.add(acc, f.mul(x[i * n + k], y[k * n + j]));
                }
                out[i * n + j] = acc;
            }
        }
        out
    }

    fn pow(&self, x: &Mat, mut e: u64) -> Mat {
        let mut base = *x;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn det(&self, x: &Mat) -> u8 {
        let f = self.field;
        match self.n {
            1 => x[0],
            2 => f.sub(f.mul(x[0], x[3]), f.mul(x[1], x[2])),
            _ => {
                let minor = |a: usize, b: usize, c: usize, d: usize| {
                    f.sub(f.mul(x[a], x[d]), f.mul(x[b], x[c]))
                };
                let t0 = f.mul(x[0], minor(4, 5, 7, 8));
                let t1 = f.mul(x[1], minor(3, 5, 6, 8));
                let t2 = f.mul(x[2], minor(3, 4, 6, 7));
                f.add(f.sub(t0, t1), t2)
            }
        }
    }

    fn encode(&self, x: &Mat) -> u32 {
        let q = self.field.size();
        x[..self.n * self.n].iter().rev().fold(0, |acc, &c| acc * q + c as u32)
    }

    fn decode(&self, mut code: u32) -> Mat {
        let q = self.field.size();
        let mut m = [0u8; 9];
        for entry in m.iter_mut().take(self.n * self.n) {
            *entry = (code % q) as u8;
            code /= q;
        }
        m
    }

    /// Transvections `I + x·E_ij`, plus `diag(ω, 1, …)` for `GL`. Returned
    /// with their inverses.
    fn generators(&self, kind: MatrixGroupKind) -> Vec<(Mat, Mat)> {
        let (f, n) = (self.field, self.n);
        let mut gens = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for x in 1..f.size() as u8 {
                    let mut g = self.identity();
                    let mut h = self.identity();
                    g[i * n + j] = x;
                    h[i * n + j] = f.neg(x);
                    gens.push((g, h));
                }
            }
        }
        if kind == MatrixGroupKind::Gl {
            let omega = f.primitive_element();
            let mut g = self.identity();
            let mut h = self.identity();
            g[0] = omega;
            h[0] = f.inv(omega).expect("ω is a unit");
            gens.push((g, h));
        }
        gens
    }
}

fn ell_part(order: u64, ell: u64) -> u64 {
    let mut part = 1;
    let mut rest = order;
    while rest % ell == 0 {
        rest /= ell;
        part *= ell;
    }
    part
}

/// Conjugacy classes of `GL_n(F)` or `SL_n(F)`, restricted to ℓ-elements when
/// `ell` is given. Orbits are closed under conjugation by a generating set.
pub fn census_with_field(
    kind: MatrixGroupKind,
    n: u32,
    field: &SmallField,
    ell: Option<u64>,
) -> Result<MatrixGroupCensus> {
    if !(1..=3).contains(&n) {
        return Err(Error::CapExceeded(format!("matrix size n = {n} outside 1..=3")));
    }
    let q = field.size();
    if let Some(ell) = ell {
        if !is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        if q as u64 % ell == 0 {
            return Err(Error::EllDividesQ { ell, q: q as u64 });
        }
    }
    let order = matrix_group_order(kind, n, q);
    if order > MATRIX_GROUP_CAP {
        return Err(Error::CapExceeded(format!(
            "|{kind:?}_{n}({q})| = {order} exceeds {MATRIX_GROUP_CAP}"
        )));
    }
    let arith = MatrixArith {
        field,
        n: n as usize,
    };
    let exponent = ell.map(|l| ell_part(order, l));
    let identity = arith.identity();
    let space = (q as u64).pow(n * n) as usize;
    let mut member = vec![false; space];
    let mut element_count = 0u64;
    for (code, slot) in member.iter_mut().enumerate() {
        let m = arith.decode(code as u32);
        let det = arith.det(&m);
        let in_group = match kind {
            MatrixGroupKind::Gl => det != 0,
            MatrixGroupKind::Sl => det == 1,
        };
        if !in_group {
            continue;
        }
        if let Some(e) = exponent {
            if arith.pow(&m, e) != identity {
                continue;
            }
        }
        *slot = true;
        element_count += 1;
    }

    let gens = arith.generators(kind);
    let mut seen = vec![false; space];
    let mut classes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..space {
        if !member[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start as u32);
        let mut size = 0u64;
        while let Some(code) = queue.pop_front() {
            size += 1;
            let x = arith.decode(code);
            for (g, g_inv) in &gens {
                let y = arith.encode(&arith.mul(&arith.mul(g, &x), g_inv));
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
        if order % size != 0 {
            return Err(Error::InexactDivision {
                numerator: order.to_string(),
                denominator: size.to_string(),
            });
        }
        classes.push(ClassRecord {
            representative: arith.decode(start as u32)[..(n * n) as usize].to_vec(),
            class_size: size,
            centralizer_order: order / size,
        });
    }
    Ok(MatrixGroupCensus {
        group: kind,
        n,
        q,
        ell,
        order,
        element_count,
        classes,
    })
}

pub fn gl_ell_class_census(n: u32, q: u32, ell: u64) -> Result<MatrixGroupCensus> {
    census_with_field(MatrixGroupKind::Gl, n, &SmallField::new(q)?, Some(ell))
}

pub fn sl_ell_class_census(n: u32, q: u32, ell: u64) -> Result<MatrixGroupCensus> {
    census_with_field(MatrixGroupKind::Sl, n, &SmallField::new(q)?, Some(ell))
}

pub fn full_class_census(kind: MatrixGroupKind, n: u32, q: u32) -> Result<MatrixGroupCensus> {
    census_with_field(kind, n, &SmallField::new(q)?, None)
}

/// Centraliser orders the weight vectors predict for the ℓ-element classes of
/// `GL_n(q)`: `GL_{u·d+r}(q) × ∏ GL_{m_f}(q^{deg f})`. Sorted.
pub fn predicted_centralizer_orders(n: u64, q: u64, inventory: &SlotInventory) -> Vec<Nat> {
    let d = inventory.d;
    let (w, r) = (n / d, n % d);
    let big_q = Nat::from(q);
    let mut orders: Vec<Nat> = enumerate_weight_vectors(inventory, w)
        .map(|v| {
            let shape = centralizer_shape(inventory, &v);
            let mut order = gl_order(shape.principal_multiplicity * d + r, &big_q);
            for f in &shape.factors {
                let field = big_q.pow(f.field_degree as u32);
                order *= match f.kind {
                    FactorKind::Linear => gl_order(f.size, &field),
                    FactorKind::Unitary => gu_order(f.size, &field),
                };
            }
            order
        })
        .collect();
    orders.sort();
    orders
}

/// The ℓ-element classes of `GL_n(q)` found by enumeration agree in number and
/// in centraliser orders with the weight vectors of `inventory`.
pub fn census_matches_weight_vectors(census: &MatrixGroupCensus, inventory: &SlotInventory) -> bool {
    let Some(ell) = census.ell else {
        return false;
    };
    if census.group != MatrixGroupKind::Gl
        || inventory.family != GroupFamily::Gl
        || inventory.ell != ell
    {
        return false;
    }
    let Ok(profile) = ell_profile(census.q as u64, ell) else {
        return false;
    };
    if (profile.d, profile.a) != (inventory.d, inventory.a)
        || inventory.budget < census.n as u64 / profile.d
    {
        return false;
    }
    let predicted = predicted_centralizer_orders(census.n as u64, census.q as u64, inventory);
    let mut observed: Vec<Nat> = census
        .classes
        .iter()
        .map(|c| Nat::from(c.centralizer_order))
        .collect();
    observed.sort();
    predicted == observed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lseries::build_inventory;

    fn inventory_for(n: u64, q: u64, ell: u64) -> SlotInventory {
        let p = ell_profile(q, ell).unwrap();
        build_inventory(GroupFamily::Gl, ell, p.d, p.a, n / p.d).unwrap()
    }

    #[test]
    fn gl2_4_three_elements() {
        let census = gl_ell_class_census(2, 4, 3).unwrap();
        assert_eq!(census.order, 180);
        let mut cents: Vec<u64> = census.classes.iter().map(|c| c.centralizer_order).collect();
        cents.sort();
        assert_eq!(cents, vec![9, 9, 9, 180, 180, 180]);
        assert!(census_matches_weight_vectors(&census, &inventory_for(2, 4, 3)));
    }

    #[test]
    fn gl2_2_is_s3() {
        let census = gl_ell_class_census(2, 2, 3).unwrap();
        assert_eq!(census.classes.len(), 2);
        assert_eq!(census.element_count, 3);
        assert!(census_matches_weight_vectors(&census, &inventory_for(2, 2, 3)));
    }

    #[test]
    fn gl1_is_abelian() {
        for (q, ell, expected) in [(4u32, 3u64, 3usize), (5, 3, 1), (7, 3, 3), (3, 2, 2)] {
            let census = gl_ell_class_census(1, q, ell).unwrap();
            assert_eq!(census.classes.len(), expected);
            assert!(census.classes.iter().all(|c| c.class_size == 1));
        }
    }

    #[test]
    fn class_equation() {
        for (kind, n, q) in [
            (MatrixGroupKind::Gl, 2, 3),
            (MatrixGroupKind::Gl, 2, 4),
            (MatrixGroupKind::Sl, 2, 5),
            (MatrixGroupKind::Gl, 3, 2),
        ] {
            let census = full_class_census(kind, n, q).unwrap();
            let total: u64 = census.classes.iter().map(|c| c.class_size).sum();
            assert_eq!(total, census.order);
            assert_eq!(census.element_count, census.order);
        }
        // GL_2(3) has 8 classes, SL_2(5) has 9, GL_3(2) has 6.
        assert_eq!(full_class_census(MatrixGroupKind::Gl, 2, 3).unwrap().classes.len(), 8);
        assert_eq!(full_class_census(MatrixGroupKind::Sl, 2, 5).unwrap().classes.len(), 9);
        assert_eq!(full_class_census(MatrixGroupKind::Gl, 3, 2).unwrap().classes.len(), 6);
    }

    #[test]
    fn other_basis_same_counts() {
        // x^2 + x + 2 is also irreducible over F_3.
        let alt = SmallField::with_modulus(3, &[2, 1]).unwrap();
        let std = SmallField::new(9).unwrap();
        let a = census_with_field(MatrixGroupKind::Gl, 2, &alt, Some(5)).unwrap();
        let b = census_with_field(MatrixGroupKind::Gl, 2, &std, Some(5)).unwrap();
        let sizes = |c: &MatrixGroupCensus| {
            let mut v: Vec<u64> = c.classes.iter().map(|r| r.class_size).collect();
            v.sort();
            v
        };
        assert_eq!(sizes(&a), sizes(&b));
    }

    #[test]
    fn cap_and_parameter_errors() {
        assert!(matches!(gl_ell_class_census(3, 7, 3), Err(Error::CapExceeded(_))));
        assert!(matches!(gl_ell_class_census(4, 2, 3), Err(Error::CapExceeded(_))));
        assert_eq!(gl_ell_class_census(2, 3, 3), Err(Error::EllDividesQ { ell: 3, q: 3 }));
    }

    #[test]
    fn group_orders() {
        assert_eq!(gu_order(1, &Nat::from(2u8)), Nat::from(3u8));
        // |GU_2(2)| = 18, |GU_3(2)| = 648.
        assert_eq!(gu_order(2, &Nat::from(2u8)), Nat::from(18u8));
        assert_eq!(gu_order(3, &Nat::from(2u8)), Nat::from(648u16));
        assert_eq!(matrix_group_order(MatrixGroupKind::Sl, 2, 4), 60);
    }
}
