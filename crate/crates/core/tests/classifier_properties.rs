mod common;

use nilclean::catalog::{four_element_cayley_ring, nine_element_matrix_field, Catalog};
use nilclean::classifier::{
    cross_check, cross_check_all, CharacterizationId, RingClass, CUBES_IDEMPOTENT,
};
use nilclean::iso::{are_isomorphic, isomorphisms};
use nilclean::ring::{make_gf, make_zn};
use nilclean::CharacterizationReport;

fn reports() -> Vec<CharacterizationReport> {
    cross_check_all(common::rings())
}

#[test]
fn znc_forms_agree_everywhere() {
    for rep in reports() {
        assert!(
            rep.disagreements[&RingClass::Znc].is_empty(),
            "{}",
            rep.ring
        );
    }
}

#[test]
fn s2nc_forms_other_than_idempotent_plus_involution_agree_everywhere() {
    for rep in reports() {
        let odd = &rep.disagreements[&RingClass::S2nc];
        assert!(
            odd.iter().all(|&id| id == CharacterizationId::S2ncSqEInv),
            "{}: {odd:?}",
            rep.ring
        );
    }
}

/// The idempotent + involution form holds on exactly the Zhou nil-clean rings
/// of the survey, so it disagrees with the strong 2-nil-clean class precisely
/// where 5 enters the characteristic.
#[test]
fn idempotent_plus_involution_form_tracks_znc_on_the_survey() {
    let mut odd = Vec::new();
    for rep in reports() {
        assert_eq!(
            rep.holds(CharacterizationId::S2ncSqEInv),
            rep.class_holds(RingClass::Znc),
            "{}",
            rep.ring
        );
        if !rep.disagreements[&RingClass::S2nc].is_empty() {
            odd.push(rep.ring.clone());
        }
    }
    assert_eq!(
        odd,
        [
            "Z/5",
            "Z/10",
            "Z/15",
            "Z/20",
            "Z/25",
            "Z/30",
            "Z/2 x Z/5",
            "Z/2 x Z/10",
            "Z/2 x Z/15",
            "Z/3 x Z/5",
            "Z/3 x Z/10",
            "Z/4 x Z/5",
            "Z/5 x Z/5",
            "Z/5 x Z/6",
            "Z5"
        ]
    );
}

#[test]
fn s2nc_implies_znc() {
    for rep in reports() {
        assert!(
            !rep.class_holds(RingClass::S2nc) || rep.class_holds(RingClass::Znc),
            "{}",
            rep.ring
        );
    }
}

#[test]
fn fields() {
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)] {
        let q = p.pow(k);
        let rep = cross_check(&make_gf(p, k).unwrap());
        assert_eq!(
            rep.class_holds(RingClass::Znc),
            [2, 3, 5].contains(&q),
            "GF({q})"
        );
        assert_eq!(
            rep.class_holds(RingClass::S2nc),
            [2, 3].contains(&q),
            "GF({q})"
        );
    }
}

#[test]
fn separations() {
    let z5 = cross_check(&make_zn(5).unwrap());
    assert!(z5.separations["S2NC-SQ-4E"].strictly_exceeds);
    let f9 = cross_check(&make_gf(3, 2).unwrap());
    assert!(f9.separations["ZNC-SQ-5P"].strictly_exceeds);
    let c4 = cross_check(&four_element_cayley_ring().unwrap());
    assert!(c4.separations[CUBES_IDEMPOTENT].strictly_exceeds);
}

#[test]
fn parallel_and_serial_agree() {
    let serial: Vec<_> = common::rings().iter().map(cross_check).collect();
    assert_eq!(serial, reports());
}

#[test]
fn reports_round_trip_through_json() {
    for rep in reports() {
        let back: CharacterizationReport =
            serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
        assert_eq!(back, rep);
    }
}

#[test]
fn named_rings() {
    let c4 = four_element_cayley_ring().unwrap();
    let f4 = make_gf(2, 2).unwrap();
    assert_eq!(are_isomorphic(&c4, &f4), Some(true));
    assert_eq!(isomorphisms(&c4, &f4).unwrap().len(), 2);

    let m = nine_element_matrix_field().unwrap();
    assert!(m.is_commutative());
    assert_eq!(m.classification().nilpotents.indices(), vec![0]);
    assert_eq!(m.classification().units.len(), 8);
}

#[test]
fn catalog_expectations_match_live_output() {
    let cat = Catalog::builtin();
    for entry in &cat.entries {
        let rep = cross_check(&entry.ring);
        assert_eq!(entry.mismatches(&rep), Vec::<String>::new());
    }
    for entry in nilclean::catalog::survey_set(30) {
        assert_eq!(
            entry.mismatches(&cross_check(&entry.ring)),
            Vec::<String>::new()
        );
    }
}
