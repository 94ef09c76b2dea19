//! Ring-class predicates and the equivalence cross-check.
//!
//! Every characterization is evaluated literally: universally quantified over
//! all elements or over the squares, with existence of a decomposition
//! delegated to [`find_decomposition`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classes::{classify, ElementClassification};
use crate::decompose::{find_decomposition, Kind, Shape};
use crate::error::{Error, Result};
use crate::ring::{int_embed, ElementId, RingTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CharacterizationId {
    #[serde(rename = "S2NC-DEF")]
    S2ncDef,
    #[serde(rename = "S2NC-A3")]
    S2ncA3,
    #[serde(rename = "S2NC-TRIP-NIL")]
    S2ncTripNil,
    #[serde(rename = "S2NC-SQ-1E")]
    S2ncSq1E,
    #[serde(rename = "S2NC-SQ-2E")]
    S2ncSq2E,
    #[serde(rename = "S2NC-SQ-3E")]
    S2ncSq3E,
    #[serde(rename = "S2NC-SQ-4E")]
    S2ncSq4E,
    #[serde(rename = "S2NC-SQ-E-INV")]
    S2ncSqEInv,
    #[serde(rename = "ZNC-DEF")]
    ZncDef,
    #[serde(rename = "ZNC-A5")]
    ZncA5,
    #[serde(rename = "ZNC-5P-NIL")]
    Znc5PNil,
    #[serde(rename = "ZNC-SQ-1T")]
    ZncSq1T,
    #[serde(rename = "ZNC-SQ-2T")]
    ZncSq2T,
    #[serde(rename = "ZNC-SQ-T-INV")]
    ZncSqTInv,
    #[serde(rename = "ZNC-7INV-SQ-4E")]
    Znc7InvSq4E,
    #[serde(rename = "ZNC-SQ-5P")]
    ZncSq5P,
}

use CharacterizationId::*;

impl CharacterizationId {
    pub const ALL: [CharacterizationId; 16] = [
        S2ncDef,
        S2ncA3,
        S2ncTripNil,
        S2ncSq1E,
        S2ncSq2E,
        S2ncSq3E,
        S2ncSq4E,
        S2ncSqEInv,
        ZncDef,
        ZncA5,
        Znc5PNil,
        ZncSq1T,
        ZncSq2T,
        ZncSqTInv,
        Znc7InvSq4E,
        ZncSq5P,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            S2ncDef => "S2NC-DEF",
            S2ncA3 => "S2NC-A3",
            S2ncTripNil => "S2NC-TRIP-NIL",
            S2ncSq1E => "S2NC-SQ-1E",
            S2ncSq2E => "S2NC-SQ-2E",
            S2ncSq3E => "S2NC-SQ-3E",
            S2ncSq4E => "S2NC-SQ-4E",
            S2ncSqEInv => "S2NC-SQ-E-INV",
            ZncDef => "ZNC-DEF",
            ZncA5 => "ZNC-A5",
            Znc5PNil => "ZNC-5P-NIL",
            ZncSq1T => "ZNC-SQ-1T",
            ZncSq2T => "ZNC-SQ-2T",
            ZncSqTInv => "ZNC-SQ-T-INV",
            Znc7InvSq4E => "ZNC-7INV-SQ-4E",
            ZncSq5P => "ZNC-SQ-5P",
        }
    }

    /// One-line statement of the predicate.
    pub fn describe(self) -> &'static str {
        match self {
            S2ncDef => "every element = e + f + w",
            S2ncA3 => "a - a^3 nilpotent for all a",
            S2ncTripNil => "every element = tripotent + w",
            S2ncSq1E => "every square = e + w",
            S2ncSq2E => "every square = e + f + w",
            S2ncSq3E => "every square = e + f + g + w",
            S2ncSq4E => "every square = e + f + g + h + w",
            S2ncSqEInv => "every square = e + involution + w",
            ZncDef => "every element = p + q + w (tripotents)",
            ZncA5 => "a - a^5 nilpotent for all a",
            Znc5PNil => "every element = 5-potent + w",
            ZncSq1T => "every square = tripotent + w",
            ZncSq2T => "every square = p + q + w (tripotents)",
            ZncSqTInv => "every square = tripotent + involution + w",
            Znc7InvSq4E => "7 a unit and every square = e + f + g + h + w",
            ZncSq5P => "every square = 5-potent + w",
        }
    }

    /// The class this predicate characterizes, if it is one of the
    /// equivalent forms.
    pub fn class(self) -> Option<RingClass> {
        match self {
            S2ncDef | S2ncA3 | S2ncTripNil | S2ncSq1E | S2ncSq2E | S2ncSq3E | S2ncSqEInv => {
                Some(RingClass::S2nc)
            }
            ZncDef | ZncA5 | Znc5PNil | ZncSq1T | ZncSq2T | ZncSqTInv | Znc7InvSq4E => {
                Some(RingClass::Znc)
            }
            S2ncSq4E | ZncSq5P => None,
        }
    }

    fn domain_and_shape(self) -> Option<(Domain, Shape)> {
        use Kind::*;
        let (domain, kinds): (Domain, &[Kind]) = match self {
            S2ncA3 | ZncA5 => return None,
            S2ncDef => (Domain::All, &[Idempotent, Idempotent]),
            S2ncTripNil => (Domain::All, &[Tripotent]),
            S2ncSq1E => (Domain::Squares, &[Idempotent]),
            S2ncSq2E => (Domain::Squares, &[Idempotent, Idempotent]),
            S2ncSq3E => (Domain::Squares, &[Idempotent, Idempotent, Idempotent]),
            S2ncSq4E | Znc7InvSq4E => (
                Domain::Squares,
                &[Idempotent, Idempotent, Idempotent, Idempotent],
            ),
            S2ncSqEInv => (Domain::Squares, &[Idempotent, Involution]),
            ZncDef => (Domain::All, &[Tripotent, Tripotent]),
            Znc5PNil => (Domain::All, &[FivePotent]),
            ZncSq1T => (Domain::Squares, &[Tripotent]),
            ZncSq2T => (Domain::Squares, &[Tripotent, Tripotent]),
            ZncSqTInv => (Domain::Squares, &[Tripotent, Involution]),
            ZncSq5P => (Domain::Squares, &[FivePotent]),
        };
        Some((domain, Shape::new(kinds)))
    }
}

impl fmt::Display for CharacterizationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CharacterizationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingClass {
    /// Strongly 2-nil-clean.
    #[serde(rename = "S2NC")]
    S2nc,
    /// Zhou nil-clean.
    #[serde(rename = "ZNC")]
    Znc,
}

impl RingClass {
    pub fn members(self) -> impl Iterator<Item = CharacterizationId> {
        CharacterizationId::ALL
            .into_iter()
            .filter(move |id| id.class() == Some(self))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RingClass::S2nc => "S2NC",
            RingClass::Znc => "ZNC",
        }
    }
}

#[derive(Clone, Copy)]
enum Domain {
    All,
    Squares,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateOutcome {
    pub holds: bool,
    /// Least element falsifying the universally quantified clause.
    pub witness: Option<ElementId>,
}

impl PredicateOutcome {
    fn from_failure(witness: Option<ElementId>) -> Self {
        PredicateOutcome {
            holds: witness.is_none(),
            witness,
        }
    }
}

fn first_failure(
    r: &RingTable,
    mut ok: impl FnMut(ElementId) -> bool,
    domain: Domain,
) -> Option<ElementId> {
    match domain {
        Domain::All => r.elements().find(|&a| !ok(a)),
        Domain::Squares => classify(r).squares.iter().find(|&a| !ok(a)),
    }
}

/// `a - a^3` nilpotent for every `a`.
pub fn is_strongly_2_nil_clean(r: &RingTable) -> PredicateOutcome {
    check_characterization(r, S2ncA3)
}

/// `a - a^5` nilpotent for every `a`.
pub fn is_zhou_nil_clean(r: &RingTable) -> PredicateOutcome {
    check_characterization(r, ZncA5)
}

pub fn check_characterization(r: &RingTable, id: CharacterizationId) -> PredicateOutcome {
    let failure = match id {
        S2ncA3 => first_failure(r, |a| r.is_nil(r.sub(a, r.pow(a, 3))), Domain::All),
        ZncA5 => first_failure(r, |a| r.is_nil(r.sub(a, r.pow(a, 5))), Domain::All),
        Znc7InvSq4E if !classify(r).units.contains(int_embed(r, 7)) => Some(int_embed(r, 7)),
        _ => {
            let (domain, shape) = id.domain_and_shape().expect("decomposition form");
            first_failure(r, |a| find_decomposition(r, a, &shape).is_some(), domain)
        }
    };
    PredicateOutcome::from_failure(failure)
}

/// Looks a predicate up by its textual id.
pub fn check_characterization_by_name(r: &RingTable, id: &str) -> Result<PredicateOutcome> {
    Ok(check_characterization(r, id.parse()?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Inconsistent,
}

/// A predicate that is implied by a class but not equivalent to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub holds: bool,
    pub class_holds: bool,
    /// The predicate holds on this ring while the class does not.
    pub strictly_exceeds: bool,
}

impl Separation {
    fn new(holds: bool, class_holds: bool) -> Self {
        Separation {
            holds,
            class_holds,
            strictly_exceeds: holds && !class_holds,
        }
    }
}

/// Key of the separation "x^3 is idempotent for every x" versus ZNC.
pub const CUBES_IDEMPOTENT: &str = "CUBES-IDEMPOTENT";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub ring: String,
    pub order: usize,
    pub predicates: BTreeMap<CharacterizationId, PredicateOutcome>,
    pub equivalences: BTreeMap<RingClass, Verdict>,
    /// Class members disagreeing with the class's reference predicate
    /// (`S2NC-A3` resp. `ZNC-A5`).
    pub disagreements: BTreeMap<RingClass, Vec<CharacterizationId>>,
    pub separations: BTreeMap<String, Separation>,
    pub classification: ElementClassification,
}

impl CharacterizationReport {
    pub fn holds(&self, id: CharacterizationId) -> bool {
        self.predicates[&id].holds
    }

    pub fn class_holds(&self, class: RingClass) -> bool {
        match class {
            RingClass::S2nc => self.holds(S2ncA3),
            RingClass::Znc => self.holds(ZncA5),
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.equivalences
            .values()
            .all(|v| *v == Verdict::Consistent)
    }
}

pub fn cross_check(r: &RingTable) -> CharacterizationReport {
    let predicates: BTreeMap<_, _> = CharacterizationId::ALL
        .into_iter()
        .map(|id| (id, check_characterization(r, id)))
        .collect();
    let mut equivalences = BTreeMap::new();
    let mut disagreements = BTreeMap::new();
    for (class, reference) in [(RingClass::S2nc, S2ncA3), (RingClass::Znc, ZncA5)] {
        let expected = predicates[&reference].holds;
        let odd: Vec<_> = class
            .members()
            .filter(|id| predicates[id].holds != expected)
            .collect();
        equivalences.insert(
            class,
            if odd.is_empty() {
                Verdict::Consistent
            } else {
                Verdict::Inconsistent
            },
        );
        disagreements.insert(class, odd);
    }
    let s2nc = predicates[&S2ncA3].holds;
    let znc = predicates[&ZncA5].holds;
    let cubes_idempotent = r.elements().all(|x| {
        let c = r.pow(x, 3);
        r.mul(c, c) == c
    });
    let separations = BTreeMap::from([
        (
            S2ncSq4E.as_str().to_string(),
            Separation::new(predicates[&S2ncSq4E].holds, s2nc),
        ),
        (
            ZncSq5P.as_str().to_string(),
            Separation::new(predicates[&ZncSq5P].holds, znc),
        ),
        (
            CUBES_IDEMPOTENT.to_string(),
            Separation::new(cubes_idempotent, znc),
        ),
    ]);
    CharacterizationReport {
        ring: r.label().to_string(),
        order: r.order(),
        predicates,
        equivalences,
        disagreements,
        separations,
        classification: classify(r).clone(),
    }
}

/// Cross-checks many rings; output order follows input order.
pub fn cross_check_all(rings: &[RingTable]) -> Vec<CharacterizationReport> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        rings.par_iter().map(cross_check).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        rings.iter().map(cross_check).collect()
    }
}
