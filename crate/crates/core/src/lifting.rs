//! Lifting idempotents and tripotents along nilpotents.
//!
//! Everything here stays inside `Z[a]`, the subring generated by the input
//! element and the identity, so every lifted element commutes with the input.

use crate::classes::ElementSet;
use crate::error::{Error, Result};
use crate::ring::{int_embed, ElementId, RingTable};

/// The subring `Z[a]`: closure of `{a, 1}` under `+`, `-` and `*`.
#[derive(Debug, Clone)]
pub struct GeneratedSubring<'r> {
    pub parent: &'r RingTable,
    pub generator: ElementId,
    pub elements: ElementSet,
}

pub fn generated_subring(r: &RingTable, a: ElementId) -> GeneratedSubring<'_> {
    let mut inside = vec![false; r.order()];
    let mut members: Vec<ElementId> = Vec::new();
    let mut work: Vec<ElementId> = Vec::new();
    let push = |x: ElementId, inside: &mut Vec<bool>, work: &mut Vec<ElementId>| {
        if !inside[x.0] {
            inside[x.0] = true;
            work.push(x);
        }
    };
    for seed in [r.zero(), r.one(), a] {
        push(seed, &mut inside, &mut work);
    }
    while let Some(x) = work.pop() {
        members.push(x);
        push(r.neg(x), &mut inside, &mut work);
        for &y in &members {
            push(r.add(x, y), &mut inside, &mut work);
            push(r.mul(x, y), &mut inside, &mut work);
            push(r.mul(y, x), &mut inside, &mut work);
        }
    }
    GeneratedSubring {
        parent: r,
        generator: a,
        elements: ElementSet::from_members(r.order(), members),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftResult {
    pub lifted: ElementId,
    /// `input - lifted`, always nilpotent.
    pub difference: ElementId,
    /// Newton steps for idempotents; candidates examined for tripotents.
    pub iterations: usize,
}

/// One Newton step `e -> 3e^2 - 2e^3`.
pub fn newton_step(r: &RingTable, e: ElementId) -> ElementId {
    let e2 = r.mul(e, e);
    let e3 = r.mul(e2, e);
    let three_e2 = r.sum([e2, e2, e2]);
    let two_e3 = r.add(e3, e3);
    r.sub(three_e2, two_e3)
}

/// Lifts `a` to an idempotent congruent to it modulo nilpotents.
///
/// The defect `e - e^2` is squared (up to a unit factor) by every step, so
/// the loop ends after at most `ceil(log2 order) + 1` steps.
pub fn lift_idempotent(r: &RingTable, a: ElementId) -> Result<LiftResult> {
    let defect = r.sub(a, r.mul(a, a));
    if !r.is_nil(defect) {
        return Err(Error::PreconditionFailed(format!(
            "a - a^2 = {defect} is not nilpotent (a = {a})"
        )));
    }
    let mut e = a;
    let mut iterations = 0;
    while r.mul(e, e) != e {
        e = newton_step(r, e);
        iterations += 1;
        if iterations > r.order() {
            return Err(Error::NotFound(a));
        }
    }
    Ok(LiftResult {
        lifted: e,
        difference: r.sub(a, e),
        iterations,
    })
}

/// `2^{-1}` when 2 is a unit.
pub fn inverse_of_two(r: &RingTable) -> Option<ElementId> {
    r.inverse(int_embed(r, 2))
}

/// Finds the tripotent `p ∈ Z[a]` of least index with `a - p` nilpotent.
pub fn lift_tripotent(r: &RingTable, a: ElementId) -> Result<LiftResult> {
    if inverse_of_two(r).is_none() {
        return Err(Error::PreconditionFailed("2 is not a unit".into()));
    }
    let defect = r.sub(a, r.pow(a, 3));
    if !r.is_nil(defect) {
        return Err(Error::PreconditionFailed(format!(
            "a - a^3 = {defect} is not nilpotent (a = {a})"
        )));
    }
    let sub = generated_subring(r, a);
    for (i, p) in sub.elements.iter().enumerate() {
        let examined = i + 1;
        if r.pow(p, 3) == p && r.is_nil(r.sub(a, p)) {
            return Ok(LiftResult {
                lifted: p,
                difference: r.sub(a, p),
                iterations: examined,
            });
        }
    }
    Err(Error::NotFound(a))
}

/// Splits a tripotent as `p = e - f` with `e = (p^2 + p)/2`, `f = (p^2 - p)/2`
/// orthogonal idempotents.
pub fn tripotent_split(r: &RingTable, p: ElementId) -> Result<(ElementId, ElementId)> {
    let half =
        inverse_of_two(r).ok_or_else(|| Error::PreconditionFailed("2 is not a unit".into()))?;
    if r.pow(p, 3) != p {
        return Err(Error::PreconditionFailed(format!("{p} is not a tripotent")));
    }
    let p2 = r.mul(p, p);
    let e = r.mul(half, r.add(p2, p));
    let f = r.mul(half, r.sub(p2, p));
    Ok((e, f))
}
