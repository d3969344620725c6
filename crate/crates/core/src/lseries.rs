//! Slot calculus for classes of ℓ-elements in classical groups.
//!
//! An ℓ-element class is described by how much weight it puts on each
//! irreducible polynomial with ℓ-power order roots. We never build the
//! polynomials: an inventory only records how many polynomials of each kind
//! exist (their *slots*), how much weight one unit of multiplicity consumes
//! there and which factor the centraliser picks up. Summing the unipotent
//! character counts of the centralisers over all weight vectors gives a second,
//! class-by-class route to `k(B)` and to Lusztig series totals.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::combinatorics::{
    ell_power_u64, is_prime, multipartition_count, partition_count, partitions_with_max_len, Nat,
};
use crate::error::{Error, Result};
use crate::family::GroupFamily;

/// Whether a centraliser factor is a general linear or a unitary group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Linear,
    Unitary,
}

/// `GL_m(q^k)` or `GU_m(q^k)` with `k = field_degree_multiplier`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CentralizerFactor {
    pub kind: FactorKind,
    pub field_degree_multiplier: u64,
}

/// Which ℓ-power order the roots of a slot's polynomials have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderClass {
    /// Roots of order `ℓ^level` with `1 ≤ level ≤ a`.
    Base { level: u32 },
    /// Roots of order `ℓ^(a+level)`, `level ≥ 1`.
    Deep { level: u32 },
}

/// A group of interchangeable polynomial classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotClass {
    pub slot_count: u64,
    pub unit_weight: u64,
    pub centralizer_factor: CentralizerFactor,
    pub order_class: OrderClass,
}

/// The `X − 1` slot. Weight left there is counted by the relative Weyl group
/// `G(weyl_colours, 1, u)`, i.e. by `k(weyl_colours, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrincipalSlot {
    pub weyl_colours: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotInventory {
    pub family: GroupFamily,
    pub ell: u64,
    pub d: u64,
    pub dprime: u64,
    pub a: u64,
    /// Levels whose unit weight exceeds this budget are omitted.
    pub budget: u64,
    pub principal_slot: PrincipalSlot,
    pub twisted_slots: Vec<SlotClass>,
}

impl SlotInventory {
    pub fn total_slots(&self) -> u64 {
        self.twisted_slots.iter().map(|c| c.slot_count).sum()
    }

    /// Number of slots with unit weight 1 (roots of order at most `ℓ^a`).
    pub fn base_slot_count(&self) -> u64 {
        self.twisted_slots
            .iter()
            .filter(|c| matches!(c.order_class, OrderClass::Base { .. }))
            .map(|c| c.slot_count)
            .sum()
    }

    pub fn deep_slot_count(&self, level: u32) -> u64 {
        self.twisted_slots
            .iter()
            .filter(|c| c.order_class == OrderClass::Deep { level })
            .map(|c| c.slot_count)
            .sum()
    }

    /// Unit weight of every individual slot, class by class.
    pub fn flattened_units(&self) -> Vec<u64> {
        self.twisted_slots
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.unit_weight, c.slot_count as usize))
            .collect()
    }

    /// Class index of every individual slot, aligned with [`Self::flattened_units`].
    pub fn flattened_classes(&self) -> Vec<usize> {
        self.twisted_slots
            .iter()
            .enumerate()
            .flat_map(|(i, c)| std::iter::repeat_n(i, c.slot_count as usize))
            .collect()
    }
}

fn validate_profile(ell: u64, d: u64, a: u64) -> Result<()> {
    if ell == 2 {
        return Err(Error::EvenEll);
    }
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    if d == 0 || (ell - 1) % d != 0 {
        return Err(Error::OrderNotDividing { ell, d });
    }
    if a == 0 {
        return Err(Error::InvalidParameter("a must be positive".into()));
    }
    Ok(())
}

fn divide_slots(count: u64, divisor: u64) -> Result<u64> {
    if count % divisor != 0 {
        return Err(Error::InexactDivision {
            numerator: count.to_string(),
            denominator: divisor.to_string(),
        });
    }
    Ok(count / divisor)
}

/// Builds the slot inventory for `family` with order parameter `d` and
/// ℓ-adic depth `a`, keeping every level whose unit weight is at most
/// `budget`.
///
/// Linear families (`GL`, and `GU` with `d` read as the order of `−q`)
/// have `(ℓ^a − 1)/d` unit-weight slots and `(ℓ^a − ℓ^{a−1})/d` slots of
/// weight `ℓ^i` at each deeper level. Symplectic and orthogonal families pair
/// `f` with `f*` and divide by `2d'` instead.
pub fn build_inventory(
    family: GroupFamily,
    ell: u64,
    d: u64,
    a: u64,
    budget: u64,
) -> Result<SlotInventory> {
    validate_profile(ell, d, a)?;
    let dprime = if d % 2 == 0 { d / 2 } else { d };
    let (divisor, weyl_colours) = if family.is_linear_type() {
        (d, d)
    } else if family.is_bc_type() {
        (2 * dprime, 2 * dprime)
    } else {
        return Err(Error::Unsupported(format!(
            "no slot inventory for the principal-block family {family}"
        )));
    };

    let factor_for = |degree: u64| -> CentralizerFactor {
        match family {
            GroupFamily::Gl => CentralizerFactor {
                kind: FactorKind::Linear,
                field_degree_multiplier: degree,
            },
            // GL_m((−q)^k) is GU_m(q^k) for odd k and GL_m(q^k) for even k.
            GroupFamily::Gu => CentralizerFactor {
                kind: if degree % 2 == 1 {
                    FactorKind::Unitary
                } else {
                    FactorKind::Linear
                },
                field_degree_multiplier: degree,
            },
            _ if d % 2 == 1 => CentralizerFactor {
                kind: FactorKind::Linear,
                field_degree_multiplier: degree,
            },
            _ => CentralizerFactor {
                kind: FactorKind::Unitary,
                field_degree_multiplier: degree / 2,
            },
        }
    };

    let mut twisted_slots = Vec::new();
    let mut previous = 1u64;
    for level in 1..=a {
        let order = ell_power_u64(ell, level)?;
        twisted_slots.push(SlotClass {
            slot_count: divide_slots(order - previous, divisor)?,
            unit_weight: 1,
            centralizer_factor: factor_for(d),
            order_class: OrderClass::Base { level: level as u32 },
        });
        previous = order;
    }
    let top = ell_power_u64(ell, a)?;
    let deep_count = divide_slots(top - top / ell, divisor)?;
    let mut unit = ell;
    let mut level = 1u32;
    while unit <= budget {
        twisted_slots.push(SlotClass {
            slot_count: deep_count,
            unit_weight: unit,
            centralizer_factor: factor_for(d * unit),
            order_class: OrderClass::Deep { level },
        });
        match unit.checked_mul(ell) {
            Some(next) => unit = next,
            None => break,
        }
        level += 1;
    }

    Ok(SlotInventory {
        family,
        ell,
        d,
        dprime,
        a,
        budget,
        principal_slot: PrincipalSlot { weyl_colours },
        twisted_slots,
    })
}

/// Multiplicities of one ℓ-element class: `principal` units left on `X − 1`
/// and one multiplicity per individual twisted slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub principal_multiplicity: u64,
    pub slot_multiplicities: Vec<u64>,
}

impl WeightVector {
    pub fn consumed_weight(&self, inv: &SlotInventory) -> u64 {
        self.principal_multiplicity
            + self
                .slot_multiplicities
                .iter()
                .zip(inv.flattened_units())
                .map(|(m, u)| m * u)
                .sum::<u64>()
    }
}

/// Lazily yields every weight vector of total weight `w`, lexicographically
/// on the twisted multiplicities; the principal slot absorbs the remainder.
pub struct WeightVectors {
    units: Vec<u64>,
    budget: u64,
    current: Vec<u64>,
    used: u64,
    started: bool,
    done: bool,
}

impl Iterator for WeightVectors {
    type Item = WeightVector;

    fn next(&mut self) -> Option<WeightVector> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(WeightVector {
            principal_multiplicity: self.budget - self.used,
            slot_multiplicities: self.current.clone(),
        })
    }
}

impl WeightVectors {
    fn advance(&mut self) -> bool {
        let mut tail = 0u64;
        for pos in (0..self.units.len()).rev() {
            let head = self.used - tail - self.current[pos] * self.units[pos];
            let with_pos = head + (self.current[pos] + 1) * self.units[pos];
            if with_pos <= self.budget {
                for m in &mut self.current[pos + 1..] {
                    *m = 0;
                }
                self.current[pos] += 1;
                self.used = with_pos;
                return true;
            }
            tail += self.current[pos] * self.units[pos];
        }
        false
    }
}

pub fn enumerate_weight_vectors(inv: &SlotInventory, w: u64) -> WeightVectors {
    let units = inv.flattened_units();
    let current = vec![0; units.len()];
    WeightVectors {
        units,
        budget: w,
        current,
        used: 0,
        started: false,
        done: false,
    }
}

/// One factor `GL_size(q^field_degree)` or `GU_size(q^field_degree)` of a
/// centraliser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeFactor {
    pub kind: FactorKind,
    pub size: u64,
    pub field_degree: u64,
}

/// Centraliser of an ℓ-element, apart from the factor carried by `X − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerShape {
    pub principal_multiplicity: u64,
    pub factors: Vec<ShapeFactor>,
    /// `k(weyl_colours, u)·∏ π(m_f)`.
    pub unipotent_block_count: Nat,
}

pub fn centralizer_shape(inv: &SlotInventory, vector: &WeightVector) -> CentralizerShape {
    let classes = inv.flattened_classes();
    let mut factors = Vec::new();
    let mut count = multipartition_count(
        inv.principal_slot.weyl_colours,
        vector.principal_multiplicity,
    );
    for (&m, &class) in vector.slot_multiplicities.iter().zip(&classes) {
        if m == 0 {
            continue;
        }
        let slot = &inv.twisted_slots[class];
        factors.push(ShapeFactor {
            kind: slot.centralizer_factor.kind,
            size: m,
            field_degree: slot.centralizer_factor.field_degree_multiplier,
        });
        count *= partition_count(m);
    }
    CentralizerShape {
        principal_multiplicity: vector.principal_multiplicity,
        factors,
        unipotent_block_count: count,
    }
}

/// Sum over assignments of `t` units to `slots` interchangeable slots of
/// `∏ π(m_f)`, computed orbit by orbit: each partition `λ` of `t` with at most
/// `slots` parts stands for `slots!/((slots − len λ)!·∏ mult!)` assignments.
fn orbit_sum(slots: u64, t: u64) -> Nat {
    if t == 0 {
        return Nat::one();
    }
    let mut total = Nat::zero();
    for lambda in partitions_with_max_len(t, slots as usize) {
        let len = lambda.len() as u64;
        let mut placements = Nat::one();
        for i in 0..len {
            placements *= slots - i;
        }
        let mut run = 1u64;
        let parts = lambda.parts();
        for i in 1..=parts.len() {
            if i < parts.len() && parts[i] == parts[i - 1] {
                run += 1;
            } else {
                for k in 2..=run {
                    placements /= k;
                }
                run = 1;
            }
        }
        let weight: Nat = parts.iter().map(|&p| partition_count(p)).product();
        total += placements * weight;
    }
    total
}

/// `Σ_u principal(u)·T(w − u)` where `T(v)` sums `∏ π(m_f)` over all twisted
/// assignments of weight exactly `v`.
fn slot_sum(inv: &SlotInventory, w: u64, principal: impl Fn(u64) -> Nat) -> Nat {
    let mut cache: HashMap<(u64, u64), Nat> = HashMap::new();
    let mut twisted = vec![Nat::zero(); w as usize + 1];
    // twisted[v] built class by class.
    twisted[0] = Nat::one();
    for class in &inv.twisted_slots {
        let mut next = vec![Nat::zero(); w as usize + 1];
        for (v, acc) in twisted.iter().enumerate() {
            if acc.is_zero() {
                continue;
            }
            let mut units = 0u64;
            while v as u64 + units * class.unit_weight <= w {
                let orbit = cache
                    .entry((class.slot_count, units))
                    .or_insert_with(|| orbit_sum(class.slot_count, units))
                    .clone();
                next[v + (units * class.unit_weight) as usize] += acc * orbit;
                units += 1;
            }
        }
        twisted = next;
    }
    (0..=w)
        .map(|u| principal(u) * &twisted[(w - u) as usize])
        .sum()
}

/// `k(B)` for a unipotent block of weight `w`, computed class by class: the
/// sum over ℓ-weight vectors of `k(colours, u)·∏ π(m_f)`.
pub fn block_count_proof_path(family: GroupFamily, ell: u64, d: u64, a: u64, w: u64) -> Result<Nat> {
    let inv = build_inventory(family, ell, d, a, w)?;
    let colours = inv.principal_slot.weyl_colours;
    Ok(slot_sum(&inv, w, |u| multipartition_count(colours, u)))
}

/// Same count as [`block_count_proof_path`], summed over the explicit weight
/// vector stream. Only practical for small inventories.
pub fn block_count_by_enumeration(inv: &SlotInventory, w: u64) -> Nat {
    enumerate_weight_vectors(inv, w)
        .map(|v| centralizer_shape(inv, &v).unipotent_block_count)
        .sum()
}

/// Linear or unitary ambient group for [`el_series_total`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Linear,
    Unitary,
}

/// `|E_ℓ(G, 1)|` for `G = GL_n(q)` or `GU_n(q)`, with `e` the order of `q`
/// (respectively `−q`) modulo ℓ: every ℓ-element class contributes all
/// unipotent characters of its centraliser, the `X − 1` factor
/// `GL_{eu+r}` contributing `π(eu + r)`.
pub fn el_series_total(kind: SeriesKind, n: u64, e: u64, a: u64, ell: u64) -> Result<Nat> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let family = match kind {
        SeriesKind::Linear => GroupFamily::Gl,
        SeriesKind::Unitary => GroupFamily::Gu,
    };
    let w = n / e.max(1);
    let r = n % e.max(1);
    let inv = build_inventory(family, ell, e, a, w)?;
    Ok(slot_sum(&inv, w, |u| partition_count(e * u + r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn linear_inventory_ell3() {
        let inv = build_inventory(GroupFamily::Gl, 3, 1, 1, 9).unwrap();
        assert_eq!(inv.base_slot_count(), 2);
        assert_eq!(inv.deep_slot_count(1), 2);
        assert_eq!(inv.deep_slot_count(2), 2);
        assert_eq!(inv.twisted_slots[1].unit_weight, 3);
        assert_eq!(inv.twisted_slots[2].unit_weight, 9);
        assert_eq!(inv.deep_slot_count(3), 0);
    }

    #[test]
    fn symplectic_inventory_ell3() {
        let inv = build_inventory(GroupFamily::Sp, 3, 1, 1, 3).unwrap();
        assert_eq!(inv.base_slot_count(), 1);
        assert_eq!(inv.deep_slot_count(1), 1);
        assert_eq!(inv.principal_slot.weyl_colours, 2);
        let factor = inv.twisted_slots[0].centralizer_factor;
        assert_eq!(factor.kind, FactorKind::Linear);
        // d = 2: pairs collapse, factors become unitary.
        let inv = build_inventory(GroupFamily::Sp, 3, 2, 1, 1).unwrap();
        assert_eq!(inv.base_slot_count(), 1);
        assert_eq!(inv.twisted_slots[0].centralizer_factor.kind, FactorKind::Unitary);
        assert_eq!(inv.twisted_slots[0].centralizer_factor.field_degree_multiplier, 1);
    }

    #[test]
    fn degree_four_slot() {
        let inv = build_inventory(GroupFamily::Gl, 5, 4, 1, 1).unwrap();
        assert_eq!(inv.base_slot_count(), 1);
        assert_eq!(inv.twisted_slots[0].centralizer_factor.field_degree_multiplier, 4);
    }

    #[test]
    fn inventory_errors() {
        assert_eq!(build_inventory(GroupFamily::Gl, 2, 1, 1, 3), Err(Error::EvenEll));
        assert_eq!(
            build_inventory(GroupFamily::Gl, 7, 4, 1, 3),
            Err(Error::OrderNotDividing { ell: 7, d: 4 })
        );
        assert!(matches!(
            build_inventory(GroupFamily::SlRange, 3, 1, 1, 3),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn weight_vector_counts() {
        let gl = build_inventory(GroupFamily::Gl, 3, 1, 1, 2).unwrap();
        assert_eq!(enumerate_weight_vectors(&gl, 0).count(), 1);
        assert_eq!(enumerate_weight_vectors(&gl, 2).count(), 6);
        let sp = build_inventory(GroupFamily::Sp, 3, 1, 1, 2).unwrap();
        let principal: Vec<u64> = enumerate_weight_vectors(&sp, 2)
            .map(|v| v.principal_multiplicity)
            .collect();
        assert_eq!(principal, vec![2, 1, 0]);
    }

    #[test]
    fn stream_is_ordered_and_exact() {
        let inv = build_inventory(GroupFamily::Gl, 3, 1, 1, 4).unwrap();
        let vectors: Vec<_> = enumerate_weight_vectors(&inv, 4).collect();
        for v in &vectors {
            assert_eq!(v.consumed_weight(&inv), 4);
        }
        let mut sorted = vectors.clone();
        sorted.sort_by(|x, y| x.slot_multiplicities.cmp(&y.slot_multiplicities));
        sorted.dedup();
        assert_eq!(sorted, vectors);
    }

    #[test]
    fn proof_path_examples() {
        assert_eq!(block_count_proof_path(GroupFamily::Sp, 3, 1, 1, 2).unwrap(), n(9));
        assert_eq!(block_count_proof_path(GroupFamily::Gl, 3, 1, 1, 2).unwrap(), n(9));
        for family in [GroupFamily::Gl, GroupFamily::Sp, GroupFamily::GoEvenPlus] {
            assert_eq!(block_count_proof_path(family, 5, 2, 1, 0).unwrap(), n(1));
        }
    }

    #[test]
    fn grouped_sum_matches_stream() {
        for (family, ell, d, a, w) in [
            (GroupFamily::Gl, 3, 1, 1, 4),
            (GroupFamily::Gl, 5, 2, 1, 3),
            (GroupFamily::Sp, 3, 1, 2, 3),
            (GroupFamily::Sp, 5, 4, 1, 5),
        ] {
            let inv = build_inventory(family, ell, d, a, w).unwrap();
            assert_eq!(
                block_count_by_enumeration(&inv, w),
                block_count_proof_path(family, ell, d, a, w).unwrap(),
                "{family} ell={ell} d={d} a={a} w={w}"
            );
        }
    }

    #[test]
    fn orbit_sums_are_multipartition_counts() {
        for slots in 1..6 {
            for t in 0..8 {
                assert_eq!(orbit_sum(slots, t), multipartition_count(slots, t));
            }
        }
    }

    #[test]
    fn centralizer_shape_of_split_class() {
        let inv = build_inventory(GroupFamily::Gl, 3, 1, 1, 2).unwrap();
        let v = WeightVector {
            principal_multiplicity: 0,
            slot_multiplicities: vec![1, 1],
        };
        let shape = centralizer_shape(&inv, &v);
        assert_eq!(shape.factors.len(), 2);
        assert_eq!(shape.unipotent_block_count, n(1));
    }

    #[test]
    fn series_totals() {
        assert_eq!(el_series_total(SeriesKind::Linear, 2, 1, 1, 3).unwrap(), n(9));
        // n < e: only the identity contributes.
        assert_eq!(el_series_total(SeriesKind::Linear, 3, 4, 1, 5).unwrap(), n(3));
        // Unitary factors of the E8 bound at a = 1, with e = 2 for ℓ = 5.
        assert_eq!(el_series_total(SeriesKind::Unitary, 6, 2, 1, 5).unwrap(), n(41));
        assert_eq!(el_series_total(SeriesKind::Unitary, 3, 2, 1, 5).unwrap(), n(5));
        assert_eq!(el_series_total(SeriesKind::Unitary, 2, 2, 1, 5).unwrap(), n(4));
    }
}
