//! Finite abelian groups as direct products of cyclic groups.
//!
//! Elements are encoded as mixed-radix integers with the first factor most
//! significant, so `Z4 ⊕ Z2` orders its elements `(0,0), (0,1), (1,0), ...`.
//! Every set over a group is a dense membership set indexed by that encoding.

mod lattice;
mod subgroup;

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::set::GSubset;

pub use lattice::{all_subgroups, all_subgroups_bounded, SubgroupLattice, DEFAULT_LATTICE_LIMIT};
pub use subgroup::{
    coset_order, double_image, exponent_of_quotient, exponent_of_section, quotient_predicates, subgroup_generated, CosetSpace,
    QuotientPredicates, Subgroup,
};

/// Groups up to this order get precomputed addition and negation tables.
const TABLE_LIMIT: usize = 512;

/// An element of a [`GroupSpec`], identified by its mixed-radix index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(usize);

impl Element {
    pub const ZERO: Element = Element(0);

    pub fn index(self) -> usize {
        self.0
    }

    pub(crate) fn from_index_unchecked(index: usize) -> Self {
        Element(index)
    }
}

struct Tables {
    add: Vec<u16>,
    neg: Vec<u16>,
}

/// A finite abelian group `Z/n1 ⊕ ... ⊕ Z/nk`.
///
/// The empty factor list is the trivial group. Factor lists are kept as given;
/// `[2, 4]` and `[4, 2]` are distinct specs of isomorphic groups.
#[derive(Clone)]
pub struct GroupSpec {
    factors: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
    tables: Option<Arc<Tables>>,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for GroupSpec {}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupSpec({:?})", self.factors)
    }
}

/// Builds the group with the given cyclic factor moduli.
pub fn make_group(factors: &[usize]) -> Result<GroupSpec> {
    GroupSpec::new(factors)
}

impl GroupSpec {
    pub fn new(factors: &[usize]) -> Result<Self> {
        if let Some((position, &factor)) = factors.iter().enumerate().find(|(_, &n)| n < 2) {
            return Err(Error::InvalidSpec { position, factor });
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .ok_or(Error::ResourceLimit {
                what: "group order",
                size: usize::MAX,
                limit: usize::MAX,
            })?;
        let mut strides = alloc::vec![1; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        let mut group = GroupSpec {
            factors: factors.to_vec(),
            strides,
            order,
            tables: None,
        };
        if order <= TABLE_LIMIT {
            group.tables = Some(Arc::new(group.build_tables()));
        }
        Ok(group)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn trivial() -> Self {
        Self::new(&[]).expect("empty factor list is valid")
    }

    fn build_tables(&self) -> Tables {
        let n = self.order;
        let mut add = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(self.add_slow(a, b) as u16);
            }
        }
        let neg = (0..n).map(|a| self.neg_slow(a) as u16).collect();
        Tables { add, neg }
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        for (i, &n) in self.factors.iter().enumerate() {
            let s = self.strides[i];
            out += ((a / s % n + b / s % n) % n) * s;
        }
        out
    }

    fn neg_slow(&self, a: usize) -> usize {
        let mut out = 0;
        for (i, &n) in self.factors.iter().enumerate() {
            let s = self.strides[i];
            out += ((n - a / s % n) % n) * s;
        }
        out
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Element {
        Element(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element)
    }

    pub fn element(&self, coords: &[usize]) -> Result<Element> {
        if coords.len() != self.factors.len() {
            return Err(Error::InvalidElement(alloc::format!(
                "expected {} coordinates, got {}",
                self.factors.len(),
                coords.len()
            )));
        }
        let mut index = 0;
        for (i, (&x, &n)) in coords.iter().zip(&self.factors).enumerate() {
            if x >= n {
                return Err(Error::InvalidElement(alloc::format!(
                    "coordinate {i} is {x}, modulus is {n}"
                )));
            }
            index += x * self.strides[i];
        }
        Ok(Element(index))
    }

    pub fn element_at(&self, index: usize) -> Result<Element> {
        if index < self.order {
            Ok(Element(index))
        } else {
            Err(Error::InvalidElement(alloc::format!(
                "index {index} out of range for a group of order {}",
                self.order
            )))
        }
    }

    pub fn coords(&self, e: Element) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&n, &s)| e.0 / s % n)
            .collect()
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        match &self.tables {
            Some(t) => Element(t.add[a.0 * self.order + b.0] as usize),
            None => Element(self.add_slow(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        match &self.tables {
            Some(t) => Element(t.neg[a.0] as usize),
            None => Element(self.neg_slow(a.0)),
        }
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn double(&self, a: Element) -> Element {
        self.add(a, a)
    }

    pub fn mul(&self, k: usize, a: Element) -> Element {
        let mut out = 0;
        for (i, &n) in self.factors.iter().enumerate() {
            let s = self.strides[i];
            out += (a.0 / s % n) * (k % n) % n * s;
        }
        Element(out)
    }

    /// Least `m >= 1` with `m * a = 0`.
    pub fn element_order(&self, a: Element) -> usize {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&n, &s)| n / gcd(n, a.0 / s % n))
            .fold(1, lcm)
    }

    /// Least `m >= 1` annihilating the whole group.
    pub fn exponent(&self) -> usize {
        self.factors.iter().copied().fold(1, lcm)
    }

    /// Smallest order of a non-zero subgroup, i.e. the least prime dividing
    /// `|G|`. `None` for the trivial group.
    pub fn smallest_prime(&self) -> Option<usize> {
        if self.order == 1 {
            return None;
        }
        (2..=self.order).find(|p| self.order.is_multiple_of(*p))
    }

    pub fn is_elementary_2group(&self) -> bool {
        self.factors.iter().all(|&n| n == 2)
    }

    /// Factors sorted in ascending order; a convenience, not an invariant.
    pub fn sorted(&self) -> GroupSpec {
        let mut f = self.factors.clone();
        f.sort_unstable();
        GroupSpec::new(&f).expect("factors already validated")
    }

    pub fn empty_set(&self) -> GSubset {
        GSubset::empty(self.order)
    }

    pub fn full_set(&self) -> GSubset {
        GSubset::full(self.order)
    }

    /// `x + A`.
    pub fn translate(&self, set: &GSubset, x: Element) -> GSubset {
        GSubset::from_elements(self.order, set.iter().map(|a| self.add(a, x)))
    }

    /// `-A`.
    pub fn negate(&self, set: &GSubset) -> GSubset {
        GSubset::from_elements(self.order, set.iter().map(|a| self.neg(a)))
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// `g1 + g2`.
pub fn elem_add(group: &GroupSpec, a: Element, b: Element) -> Element {
    group.add(a, b)
}

/// `-g`.
pub fn elem_neg(group: &GroupSpec, a: Element) -> Element {
    group.neg(a)
}

/// `2g`.
pub fn elem_double(group: &GroupSpec, a: Element) -> Element {
    group.double(a)
}
