//! Special element classes of a finite ring.

use serde::{Deserialize, Serialize};

use crate::ring::{ElementId, RingTable};

/// A set of elements of one ring, kept both as a sorted list and as a
/// membership mask. Equality compares members only.
#[derive(Debug, Clone)]
pub struct ElementSet {
    members: Vec<ElementId>,
    mask: Vec<bool>,
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for ElementSet {}

impl ElementSet {
    pub fn from_predicate(r: &RingTable, mut pred: impl FnMut(ElementId) -> bool) -> Self {
        let mask: Vec<bool> = r.elements().map(&mut pred).collect();
        let members = r.elements().filter(|x| mask[x.0]).collect();
        ElementSet { members, mask }
    }

    pub fn from_members(order: usize, items: impl IntoIterator<Item = ElementId>) -> Self {
        let mut mask = vec![false; order];
        for x in items {
            mask[x.0] = true;
        }
        let members = (0..order).filter(|&i| mask[i]).map(ElementId).collect();
        ElementSet { members, mask }
    }

    #[inline]
    pub fn contains(&self, a: ElementId) -> bool {
        self.mask.get(a.0).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.members
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.iter().map(|e| e.0).collect()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let members = Vec::<ElementId>::deserialize(d)?;
        let order = members.iter().map(|e| e.0 + 1).max().unwrap_or(0);
        Ok(ElementSet::from_members(order, members))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementClassification {
    pub nilpotents: ElementSet,
    pub idempotents: ElementSet,
    pub tripotents: ElementSet,
    pub five_potents: ElementSet,
    pub involutions: ElementSet,
    pub units: ElementSet,
    pub squares: ElementSet,
}

/// True iff some power of `a` is zero.
///
/// Walks the orbit `a, a^2, a^3, ...` until it hits zero or repeats; a finite
/// ring needs at most `order` steps.
pub fn is_nilpotent(r: &RingTable, a: ElementId) -> bool {
    let mut seen = vec![false; r.order()];
    let mut x = a;
    loop {
        if x == r.zero() {
            return true;
        }
        if std::mem::replace(&mut seen[x.0], true) {
            return false;
        }
        x = r.mul(x, a);
    }
}

pub fn commute(r: &RingTable, a: ElementId, b: ElementId) -> bool {
    r.commute(a, b)
}

fn compute(r: &RingTable) -> ElementClassification {
    let one = r.one();
    let squares = ElementSet::from_members(r.order(), r.elements().map(|x| r.mul(x, x)));
    ElementClassification {
        nilpotents: ElementSet::from_predicate(r, |x| is_nilpotent(r, x)),
        idempotents: ElementSet::from_predicate(r, |x| r.mul(x, x) == x),
        tripotents: ElementSet::from_predicate(r, |x| r.pow(x, 3) == x),
        five_potents: ElementSet::from_predicate(r, |x| r.pow(x, 5) == x),
        involutions: ElementSet::from_predicate(r, |x| r.mul(x, x) == one),
        units: ElementSet::from_predicate(r, |x| {
            r.elements()
                .any(|y| r.mul(x, y) == one && r.mul(y, x) == one)
        }),
        squares,
    }
}

/// Classification of every element, computed once per ring and cached on the
/// table.
pub fn classify(r: &RingTable) -> &ElementClassification {
    r.classes.get_or_init(|| compute(r))
}

impl RingTable {
    pub fn classification(&self) -> &ElementClassification {
        classify(self)
    }

    /// Cached nilpotency test.
    #[inline]
    pub fn is_nil(&self, a: ElementId) -> bool {
        classify(self).nilpotents.contains(a)
    }

    /// Two-sided inverse, if any.
    pub fn inverse(&self, a: ElementId) -> Option<ElementId> {
        self.elements()
            .find(|&y| self.mul(a, y) == self.one() && self.mul(y, a) == self.one())
    }
}
