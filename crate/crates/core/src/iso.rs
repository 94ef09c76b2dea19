//! Brute-force ring isomorphisms for tiny test fixtures.

use itertools::Itertools;

use crate::ring::{ElementId, RingTable};

/// Largest order [`isomorphisms`] will enumerate (8! bijections).
pub const MAX_ISO_ORDER: usize = 8;

fn preserves(r1: &RingTable, r2: &RingTable, map: &[ElementId]) -> bool {
    map[r1.zero().0] == r2.zero()
        && map[r1.one().0] == r2.one()
        && r1.elements().all(|a| {
            r1.elements().all(|b| {
                map[r1.add(a, b).0] == r2.add(map[a.0], map[b.0])
                    && map[r1.mul(a, b).0] == r2.mul(map[a.0], map[b.0])
            })
        })
}

/// Every ring isomorphism `r1 -> r2`, as images of `0..order`. Returns
/// `None` when the order exceeds [`MAX_ISO_ORDER`].
pub fn isomorphisms(r1: &RingTable, r2: &RingTable) -> Option<Vec<Vec<ElementId>>> {
    let n = r1.order();
    if n > MAX_ISO_ORDER || r2.order() > MAX_ISO_ORDER {
        return None;
    }
    if n != r2.order() {
        return Some(Vec::new());
    }
    Some(
        r2.elements()
            .permutations(n)
            .filter(|map| preserves(r1, r2, map))
            .collect(),
    )
}

pub fn are_isomorphic(r1: &RingTable, r2: &RingTable) -> Option<bool> {
    isomorphisms(r1, r2).map(|maps| !maps.is_empty())
}
