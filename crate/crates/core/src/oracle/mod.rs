//! Brute-force ground truth on tiny groups: conjugacy classes of matrix groups
//! over small fields, of the imprimitive reflection groups `G(m,p,n)`, and
//! multipartitions listed one by one.

mod field;
mod matrix;
mod reflection;

pub use field::SmallField;
pub use matrix::{
    census_matches_weight_vectors, census_with_field, full_class_census, gl_ell_class_census,
    gl_order, gu_order, matrix_group_order, predicted_centralizer_orders, sl_ell_class_census,
    ClassRecord, MatrixGroupCensus, MatrixGroupKind, MATRIX_GROUP_CAP,
};
pub use reflection::{gmpn_census, gmpn_class_count, ReflectionGroupCensus, REFLECTION_GROUP_CAP};

use crate::combinatorics::{binomial, partitions, Nat};
use crate::error::{Error, Result};

/// Largest number of weak compositions `multipartition_enumerate` will walk.
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// `k(s, t)` by listing: every weak composition of `t` into `s` parts,
/// times the number of explicitly generated partitions of each part.
pub fn multipartition_enumerate(s: u64, t: u64) -> Result<Nat> {
    if s == 0 {
        return Ok(Nat::from((t == 0) as u8));
    }
    let compositions = binomial(t + s - 1, s - 1);
    if compositions > Nat::from(ENUMERATION_CAP) {
        return Err(Error::CapExceeded(format!(
            "{compositions} compositions of {t} into {s} parts"
        )));
    }
    let listed: Vec<u64> = (0..=t).map(|i| partitions(i).count() as u64).collect();
    let mut total = Nat::from(0u8);
    let mut parts = vec![0u64; s as usize];
    walk(&mut parts, 0, t, &listed, &mut total);
    Ok(total)
}

fn walk(parts: &mut [u64], at: usize, left: u64, listed: &[u64], total: &mut Nat) {
    if at + 1 == parts.len() {
        parts[at] = left;
        let mut product = Nat::from(1u8);
        for &p in parts.iter() {
            product *= listed[p as usize];
        }
        *total += product;
        return;
    }
    for here in 0..=left {
        parts[at] = here;
        walk(parts, at + 1, left - here, listed, total);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_examples() {
        assert_eq!(multipartition_enumerate(3, 2).unwrap(), Nat::from(9u8));
        assert_eq!(multipartition_enumerate(2, 3).unwrap(), Nat::from(10u8));
        assert_eq!(multipartition_enumerate(5, 0).unwrap(), Nat::from(1u8));
        assert_eq!(multipartition_enumerate(0, 0).unwrap(), Nat::from(1u8));
        assert_eq!(multipartition_enumerate(0, 3).unwrap(), Nat::from(0u8));
        assert!(multipartition_enumerate(40, 40).is_err());
    }
}
