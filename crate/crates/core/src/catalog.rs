//! Named rings and the survey corpus.
//!
//! The named rings ship as JSON files in the ring serialization format,
//! listed in `manifest.json` together with their expected predicate
//! outcomes. A different directory with the same layout can be loaded with
//! [`Catalog::load_dir`] (the CLI honours `NILCLEAN_CATALOG_DIR`).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classifier::{CharacterizationReport, RingClass};
use crate::error::{Error, Result};
use crate::ring::{factorize, RingBuilder, RingTable};

pub const CATALOG_DIR_ENV: &str = "NILCLEAN_CATALOG_DIR";

const BUILTIN_MANIFEST: &str = include_str!("../catalog/manifest.json");
const BUILTIN_FILES: &[(&str, &str)] = &[
    (
        "example3.5.json",
        include_str!("../catalog/example3.5.json"),
    ),
    (
        "example3.6.json",
        include_str!("../catalog/example3.6.json"),
    ),
    ("Z5.json", include_str!("../catalog/Z5.json")),
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: RingTable,
    pub provenance: String,
    /// Expected outcomes keyed by class name (`S2NC`, `ZNC`), predicate id or
    /// separation key.
    pub expected: BTreeMap<String, bool>,
}

impl CatalogEntry {
    /// Expected outcomes that the report contradicts, formatted for humans.
    pub fn mismatches(&self, report: &CharacterizationReport) -> Vec<String> {
        let mut out = Vec::new();
        for (key, &want) in &self.expected {
            let got = match key.as_str() {
                "S2NC" => Some(report.class_holds(RingClass::S2nc)),
                "ZNC" => Some(report.class_holds(RingClass::Znc)),
                other => match other.parse() {
                    Ok(id) => report.predicates.get(&id).map(|p| p.holds),
                    Err(_) => report.separations.get(other).map(|s| s.holds),
                },
            };
            match got {
                Some(g) if g == want => {}
                Some(g) => out.push(format!("{}: {key} expected {want}, got {g}", self.name)),
                None => out.push(format!("{}: unknown expectation key {key}", self.name)),
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ManifestEntry {
    name: String,
    file: String,
    provenance: String,
    #[serde(default)]
    expected: BTreeMap<String, bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Manifest {
    version: u32,
    /// Human-readable description of the generated part of the survey.
    #[serde(default)]
    survey: String,
    entries: Vec<ManifestEntry>,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::from_sources(BUILTIN_MANIFEST, |file| {
            BUILTIN_FILES
                .iter()
                .find(|(name, _)| *name == file)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("missing builtin catalog file {file}"))
                })
        })
        .expect("builtin catalog is valid")
    }

    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        let manifest = std::fs::read_to_string(dir.join("manifest.json"))?;
        Self::from_sources(&manifest, |file| {
            Ok(std::fs::read_to_string(dir.join(file))?)
        })
    }

    /// The directory named by `NILCLEAN_CATALOG_DIR`, or the builtin catalog.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CATALOG_DIR_ENV) {
            Some(dir) => Self::load_dir(dir),
            None => Ok(Self::builtin()),
        }
    }

    fn from_sources(manifest: &str, mut read: impl FnMut(&str) -> Result<String>) -> Result<Self> {
        let manifest: Manifest = serde_json::from_str(manifest)?;
        let entries = manifest
            .entries
            .into_iter()
            .map(|m| {
                let ring = RingTable::from_json(&read(&m.file)?)?.with_label(m.name.clone());
                Ok(CatalogEntry {
                    name: m.name,
                    ring,
                    provenance: m.provenance,
                    expected: m.expected,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalog {
            version: manifest.version,
            entries,
        })
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownName {
                name: name.to_string(),
                known: self.names(),
            })
    }
}

/// Looks up a named ring in the builtin catalog.
pub fn get_ring(name: &str) -> Result<CatalogEntry> {
    Catalog::builtin().get(name).cloned()
}

/// The four-element ring printed as two Cayley tables over `{a, b, c, d}`,
/// with `a, b, c, d -> 0, 1, 2, 3` (`a` is zero, `b` is one).
pub fn four_element_cayley_ring() -> Result<RingTable> {
    let add = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    let mul = vec![
        vec![0, 0, 0, 0],
        vec![0, 1, 2, 3],
        vec![0, 2, 3, 1],
        vec![0, 3, 1, 2],
    ];
    RingTable::from_parts("example3.5", add, mul, 0, 1)
}

/// The matrices `[[x, y], [y, x + y]]` over `Z/3` under matrix operations;
/// the matrix with parameters `(x, y)` has index `x + 3y`.
pub fn nine_element_matrix_field() -> Result<RingTable> {
    let matrix = |i: usize| {
        let (x, y) = ((i % 3) as i64, (i / 3) as i64);
        [[x, y], [y, x + y]]
    };
    let index_of = |m: [[i64; 2]; 2]| -> Result<usize> {
        let m = m.map(|row| row.map(|v| v.rem_euclid(3)));
        let (x, y) = (m[0][0], m[0][1]);
        if m[1][0] != y || m[1][1] != (x + y) % 3 {
            return Err(Error::MalformedTable(format!(
                "{m:?} leaves the matrix family"
            )));
        }
        Ok((x + 3 * y) as usize)
    };
    let mut add = vec![vec![0; 9]; 9];
    let mut mul = vec![vec![0; 9]; 9];
    for i in 0..9 {
        let a = matrix(i);
        for j in 0..9 {
            let b = matrix(j);
            let mut s = [[0i64; 2]; 2];
            let mut p = [[0i64; 2]; 2];
            for r in 0..2 {
                for c in 0..2 {
                    s[r][c] = a[r][c] + b[r][c];
                    p[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
                }
            }
            add[i][j] = index_of(s)?;
            mul[i][j] = index_of(p)?;
        }
    }
    RingTable::from_parts("example3.6", add, mul, 0, 1)
}

fn primes_within(n: u64, allowed: &[u64]) -> bool {
    factorize(n).iter().all(|(p, _)| allowed.contains(p))
}

/// Class membership of `Z/n` from its prime factors: S2NC iff every prime is
/// 2 or 3, ZNC iff every prime is 2, 3 or 5.
fn zn_expectation(n: u64) -> (bool, bool) {
    (primes_within(n, &[2, 3]), primes_within(n, &[2, 3, 5]))
}

fn expected(s2nc: bool, znc: bool) -> BTreeMap<String, bool> {
    BTreeMap::from([("S2NC".to_string(), s2nc), ("ZNC".to_string(), znc)])
}

fn generated(
    name: String,
    ring: RingTable,
    provenance: &str,
    s2nc: bool,
    znc: bool,
) -> CatalogEntry {
    CatalogEntry {
        ring: ring.with_label(name.clone()),
        name,
        provenance: provenance.into(),
        expected: expected(s2nc, znc),
    }
}

/// The survey corpus, in a fixed order:
/// `Z/n` for `2 <= n <= max_order`; `GF(4)`, `GF(8)`, `GF(9)`, `GF(25)` when
/// their order is at most `max_order`; `Z/a x Z/b` for `2 <= a <= b`,
/// `ab <= max_order`; `M2(Z/2)`, `M2(Z/3)` within `max_order`; then every
/// named catalog ring.
pub fn survey_set(max_order: usize) -> Vec<CatalogEntry> {
    survey_set_with(&Catalog::builtin(), max_order)
}

pub fn survey_set_with(catalog: &Catalog, max_order: usize) -> Vec<CatalogEntry> {
    let builder = RingBuilder::with_cap(max_order.max(crate::ring::DEFAULT_ORDER_CAP));
    let max = max_order as u64;
    let mut out = Vec::new();
    for n in 2..=max {
        let (s, z) = zn_expectation(n);
        out.push(generated(
            format!("Z/{n}"),
            builder.zn(n).expect("within cap"),
            "Z/n",
            s,
            z,
        ));
    }
    for (p, k) in [(2u64, 2u32), (2, 3), (3, 2), (5, 2)] {
        let q = p.pow(k);
        if q <= max {
            let ring = builder.gf(p, k).expect("within cap");
            out.push(generated(
                format!("GF({p}^{k})"),
                ring,
                "GF(p^k)",
                false,
                false,
            ));
        }
    }
    for a in 2..=max {
        for b in a..=max {
            if a * b > max {
                break;
            }
            let ring = builder
                .product(&builder.zn(a).unwrap(), &builder.zn(b).unwrap())
                .expect("within cap");
            let ((s1, z1), (s2, z2)) = (zn_expectation(a), zn_expectation(b));
            out.push(generated(
                format!("Z/{a} x Z/{b}"),
                ring,
                "Z/a x Z/b",
                s1 && s2,
                z1 && z2,
            ));
        }
    }
    for p in [2u64, 3] {
        if p.pow(4) <= max {
            let ring = builder
                .matrix_ring(&builder.zn(p).unwrap(), 2)
                .expect("within cap");
            out.push(generated(
                format!("M2(Z/{p})"),
                ring,
                "M2(Z/p)",
                false,
                false,
            ));
        }
    }
    out.extend(catalog.entries.iter().cloned());
    out
}
