//! Commuting additive decompositions `a = x_1 + ... + x_k + w` with each
//! `x_i` of a prescribed kind and `w` nilpotent.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classes::{classify, ElementSet};
use crate::error::{Error, Result};
use crate::lifting::{inverse_of_two, lift_idempotent, lift_tripotent, tripotent_split};
use crate::ring::{ElementId, RingTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// `x^2 = x`
    #[serde(rename = "e")]
    Idempotent,
    /// `x^3 = x`
    #[serde(rename = "t")]
    Tripotent,
    /// `x^5 = x`
    #[serde(rename = "p5")]
    FivePotent,
    /// `x^2 = 1`
    #[serde(rename = "v")]
    Involution,
}

impl Kind {
    pub fn code(self) -> &'static str {
        match self {
            Kind::Idempotent => "e",
            Kind::Tripotent => "t",
            Kind::FivePotent => "p5",
            Kind::Involution => "v",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Idempotent => "idempotent",
            Kind::Tripotent => "tripotent",
            Kind::FivePotent => "5-potent",
            Kind::Involution => "involution",
        }
    }

    pub fn holds(self, r: &RingTable, x: ElementId) -> bool {
        match self {
            Kind::Idempotent => r.mul(x, x) == x,
            Kind::Tripotent => r.pow(x, 3) == x,
            Kind::FivePotent => r.pow(x, 5) == x,
            Kind::Involution => r.mul(x, x) == r.one(),
        }
    }

    fn members(self, r: &RingTable) -> &ElementSet {
        let c = classify(r);
        match self {
            Kind::Idempotent => &c.idempotents,
            Kind::Tripotent => &c.tripotents,
            Kind::FivePotent => &c.five_potents,
            Kind::Involution => &c.involutions,
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "e" => Ok(Kind::Idempotent),
            "t" => Ok(Kind::Tripotent),
            "p5" => Ok(Kind::FivePotent),
            "v" => Ok(Kind::Involution),
            _ => Err(Error::InvalidArgument(format!(
                "unknown part kind `{s}` (expected e, t, p5 or v)"
            ))),
        }
    }
}

/// Ordered list of named parts; the nilpotent slot is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Shape(pub Vec<Kind>);

impl Shape {
    pub fn new(parts: impl Into<Vec<Kind>>) -> Self {
        Shape(parts.into())
    }

    pub fn repeat(kind: Kind, n: usize) -> Self {
        Shape(vec![kind; n])
    }

    pub fn parts(&self) -> &[Kind] {
        &self.0
    }
}

/// Parses a comma list such as `e,e,t`. The empty string is the empty shape.
impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Shape::default());
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Shape)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let codes: Vec<&str> = self.0.iter().map(|k| k.code()).collect();
        f.write_str(&codes.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionWitness {
    pub target: ElementId,
    pub kinds: Vec<Kind>,
    pub parts: Vec<ElementId>,
    pub nilpotent: ElementId,
}

impl DecompositionWitness {
    /// Re-checks every witness property from the tables alone.
    pub fn verify(&self, r: &RingTable) -> std::result::Result<(), String> {
        if self.kinds.len() != self.parts.len() {
            return Err("kinds and parts differ in length".into());
        }
        for (&k, &x) in self.kinds.iter().zip(&self.parts) {
            if !k.holds(r, x) {
                return Err(format!("{x} is not a {}", k.name()));
            }
        }
        if !crate::classes::is_nilpotent(r, self.nilpotent) {
            return Err(format!("{} is not nilpotent", self.nilpotent));
        }
        let all: Vec<ElementId> = self
            .parts
            .iter()
            .copied()
            .chain([self.nilpotent, self.target])
            .collect();
        for (i, &x) in all.iter().enumerate() {
            for &y in &all[i + 1..] {
                if !r.commute(x, y) {
                    return Err(format!("{x} and {y} do not commute"));
                }
            }
        }
        let total = r.add(r.sum(self.parts.iter().copied()), self.nilpotent);
        if total != self.target {
            return Err(format!("parts sum to {total}, not {}", self.target));
        }
        Ok(())
    }
}

impl fmt::Display for DecompositionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.target)?;
        for (k, x) in self.kinds.iter().zip(&self.parts) {
            write!(f, " {x}[{}] +", k.code())?;
        }
        write!(f, " {}[nil]", self.nilpotent)
    }
}

/// Searches for the least witness, ordered first by the index of the
/// nilpotent and then lexicographically by the part indices in shape order.
///
/// Every part must commute with `a`, with the nilpotent and with the other
/// parts. Within a run of equal kinds only non-decreasing indices are tried:
/// sorting such a run of any witness gives another witness that is no larger,
/// so the least witness is always among those visited.
pub fn find_decomposition(
    r: &RingTable,
    a: ElementId,
    shape: &Shape,
) -> Option<DecompositionWitness> {
    let kinds = shape.parts();
    let witness = |parts: Vec<ElementId>, w: ElementId| DecompositionWitness {
        target: a,
        kinds: kinds.to_vec(),
        parts,
        nilpotent: w,
    };
    let c = classify(r);
    if kinds.is_empty() {
        return c.nilpotents.contains(a).then(|| witness(Vec::new(), a));
    }
    for w in c.nilpotents.iter().filter(|&w| r.commute(w, a)) {
        let candidates: Vec<Vec<ElementId>> = kinds
            .iter()
            .map(|k| {
                k.members(r)
                    .iter()
                    .filter(|&x| r.commute(x, a) && r.commute(x, w))
                    .collect()
            })
            .collect();
        let mut chosen = Vec::with_capacity(kinds.len());
        let rest = r.sub(a, w);
        if search(r, kinds, &candidates, &mut chosen, rest) {
            return Some(witness(chosen, w));
        }
    }
    None
}

/// Fills `chosen` so that its entries sum to `rest`; the last part is forced.
fn search(
    r: &RingTable,
    kinds: &[Kind],
    candidates: &[Vec<ElementId>],
    chosen: &mut Vec<ElementId>,
    rest: ElementId,
) -> bool {
    let depth = chosen.len();
    let floor = (depth > 0 && kinds[depth - 1] == kinds[depth]).then(|| chosen[depth - 1]);
    let admissible = |x: ElementId, chosen: &[ElementId]| {
        floor.is_none_or(|f| x >= f) && chosen.iter().all(|&y| r.commute(x, y))
    };
    if depth + 1 == kinds.len() {
        let ok = candidates[depth].binary_search(&rest).is_ok() && admissible(rest, chosen);
        if ok {
            chosen.push(rest);
        }
        return ok;
    }
    for &x in &candidates[depth] {
        if !admissible(x, chosen) {
            continue;
        }
        chosen.push(x);
        if search(r, kinds, candidates, chosen, r.sub(rest, x)) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Builds a witness from the lifting algorithms instead of searching.
///
/// With 2 invertible and `a - a^3` nilpotent: lift `a` to a tripotent `p`,
/// split `p = e - f` and emit `a = ((1 - e) - f) + (2e - 1) + (a - p)`
/// (shape `t,v`). Otherwise, with `a - a^2` nilpotent: lift to an idempotent
/// `e` and emit `a = (1 - e) + (2e - 1) + (a - e)` (shape `e,v`).
pub fn decompose_constructively(r: &RingTable, a: ElementId) -> Result<DecompositionWitness> {
    let one = r.one();
    let involution_of = |e: ElementId| r.sub(r.add(e, e), one);
    let tripotent_route = inverse_of_two(r).is_some() && r.is_nil(r.sub(a, r.pow(a, 3)));
    let witness = if tripotent_route {
        let lift = lift_tripotent(r, a)?;
        let (e, f) = tripotent_split(r, lift.lifted)?;
        DecompositionWitness {
            target: a,
            kinds: vec![Kind::Tripotent, Kind::Involution],
            parts: vec![r.sub(r.sub(one, e), f), involution_of(e)],
            nilpotent: lift.difference,
        }
    } else if r.is_nil(r.sub(a, r.mul(a, a))) {
        let lift = lift_idempotent(r, a)?;
        let e = lift.lifted;
        DecompositionWitness {
            target: a,
            kinds: vec![Kind::Idempotent, Kind::Involution],
            parts: vec![r.sub(one, e), involution_of(e)],
            nilpotent: lift.difference,
        }
    } else {
        return Err(Error::PreconditionFailed(format!(
            "{a}: neither (2 a unit and a - a^3 nilpotent) nor (a - a^2 nilpotent)"
        )));
    };
    witness.verify(r).map_err(Error::PreconditionFailed)?;
    Ok(witness)
}

pub fn all_squares(r: &RingTable) -> ElementSet {
    classify(r).squares.clone()
}
