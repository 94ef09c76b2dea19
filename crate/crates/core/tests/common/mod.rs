#![allow(dead_code)]

use std::sync::OnceLock;

use nilclean::catalog::survey_set;
use nilclean::ring::{make_gf, make_matrix_ring, make_zn};
use nilclean::RingTable;

/// survey_set(30) plus GF(25) and M2(Z/3), built once per test binary.
pub fn rings() -> &'static [RingTable] {
    static RINGS: OnceLock<Vec<RingTable>> = OnceLock::new();
    RINGS.get_or_init(|| {
        let mut v: Vec<RingTable> = survey_set(30).into_iter().map(|e| e.ring).collect();
        v.push(make_gf(5, 2).unwrap().with_label("GF(5^2)"));
        v.push(
            make_matrix_ring(&make_zn(3).unwrap(), 2)
                .unwrap()
                .with_label("M2(Z/3)"),
        );
        v
    })
}

pub fn ring(label: &str) -> &'static RingTable {
    rings()
        .iter()
        .find(|r| r.label() == label)
        .unwrap_or_else(|| panic!("no ring {label}"))
}
