//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p nilclean --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nilclean::catalog::{survey_set, Catalog};
use nilclean::classifier::{check_characterization, cross_check, CharacterizationId, RingClass};
use nilclean::decompose::{find_decomposition, Kind, Shape};
use nilclean::iso::isomorphisms;
use nilclean::lifting::{
    generated_subring, inverse_of_two, lift_idempotent, lift_tripotent, tripotent_split,
};
use nilclean::ring::{characteristic, make_gf, make_matrix_ring, make_zn, primary_decomposition};
use nilclean::{ElementId, RingTable};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// survey_set(30) plus the fields and matrix rings beyond order 30.
fn wide_survey() -> Vec<RingTable> {
    let mut rings: Vec<RingTable> = survey_set(30).into_iter().map(|e| e.ring).collect();
    rings.push(make_gf(5, 2).unwrap().with_label("GF(5^2)"));
    rings.push(
        make_matrix_ring(&make_zn(3).unwrap(), 2)
            .unwrap()
            .with_label("M2(Z/3)"),
    );
    rings
}

fn named(name: &str) -> RingTable {
    Catalog::builtin().get(name).unwrap().ring.clone()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = make_zn(5).unwrap();
    let squares: Vec<usize> = r.classification().squares.indices();
    ensure(squares == [0, 1, 4], || {
        format!("squares of Z/5 = {squares:?}")
    })?;
    let shape = Shape::repeat(Kind::Idempotent, 4);
    for a in r.classification().squares.iter() {
        ensure(find_decomposition(&r, a, &shape).is_some(), || {
            format!("square {a} has no e,e,e,e form")
        })?;
    }
    let a3 = check_characterization(&r, CharacterizationId::S2ncA3);
    ensure(a3.witness == Some(ElementId(2)), || {
        format!("S2NC-A3 witness {:?}, want 2", a3.witness)
    })?;
    ensure(
        !r.is_nil(r.sub(ElementId(2), r.pow(ElementId(2), 3))),
        || "2 - 2^3 is nilpotent".into(),
    )?;
    let holding: Vec<String> = RingClass::S2nc
        .members()
        .filter(|&id| check_characterization(&r, id).holds)
        .map(|id| id.to_string())
        .collect();
    ensure(holding.is_empty(), || {
        format!("S2NC-class predicates true on Z/5: {}", holding.join(", "))
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })
}

fn criterion_2() -> Outcome {
    let r = named("example3.5");
    for x in r.elements() {
        ensure(r.pow(x, 4) == x, || format!("{x}^4 != {x}"))?;
        let c = r.pow(x, 3);
        ensure(r.mul(c, c) == c, || format!("{x}^3 not idempotent"))?;
    }
    let (b, c) = (ElementId(1), ElementId(2));
    let a5 = check_characterization(&r, CharacterizationId::ZncA5);
    ensure(!a5.holds && a5.witness == Some(c), || {
        format!("ZNC-A5 outcome {a5:?}, want witness c")
    })?;
    let d = r.sub(c, r.pow(c, 5));
    ensure(d == b, || format!("c - c^5 = {d}, want b"))?;
    ensure(!r.is_nil(d), || "c - c^5 nilpotent".into())
}

fn criterion_3() -> Outcome {
    let r = named("example3.6");
    let units = &r.classification().units;
    ensure(units.len() == 8 && r.is_commutative(), || {
        "not a field".into()
    })?;
    for a in r.classification().squares.iter() {
        ensure(r.pow(a, 5) == a, || format!("square {a} is not 5-potent"))?;
    }
    // c = [[0,1],[1,1]] has (x, y) = (0, 1)
    let c = ElementId(3);
    ensure(units.contains(r.sub(c, r.pow(c, 5))), || {
        "c - c^5 is not a unit".into()
    })?;
    let rep = cross_check(&r);
    ensure(rep.holds(CharacterizationId::ZncSq5P), || {
        "ZNC-SQ-5P false".into()
    })?;
    let holding: Vec<_> = RingClass::Znc
        .members()
        .filter(|&id| rep.holds(id))
        .collect();
    ensure(holding.is_empty(), || {
        format!("ZNC-class predicates true: {holding:?}")
    })
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for r in wide_survey() {
        let rep = cross_check(&r);
        for class in [RingClass::S2nc, RingClass::Znc] {
            let odd = &rep.disagreements[&class];
            if !odd.is_empty() {
                let ids: Vec<String> = odd.iter().map(|id| id.to_string()).collect();
                failures.push(format!(
                    "{} {}: {}",
                    r.label(),
                    class.as_str(),
                    ids.join(",")
                ));
            }
        }
    }
    ensure(failures.is_empty(), || {
        format!("{} disagreements: {}", failures.len(), failures.join("; "))
    })
}

fn ceil_log2(n: usize) -> usize {
    (usize::BITS - (n.max(1) - 1).leading_zeros()) as usize
}

fn criterion_5() -> Outcome {
    for r in wide_survey() {
        let bound = ceil_log2(r.order()) + 1;
        for a in r.elements() {
            if r.is_nil(r.sub(a, r.mul(a, a))) {
                let res =
                    lift_idempotent(&r, a).map_err(|e| format!("{}: lift {a}: {e}", r.label()))?;
                let e = res.lifted;
                ensure(
                    r.mul(e, e) == e
                        && r.is_nil(r.sub(a, e))
                        && r.commute(e, a)
                        && res.iterations <= bound,
                    || format!("{}: bad idempotent lift of {a}: {res:?}", r.label()),
                )?;
            }
            if inverse_of_two(&r).is_some() && r.is_nil(r.sub(a, r.pow(a, 3))) {
                let res =
                    lift_tripotent(&r, a).map_err(|e| format!("{}: lift {a}: {e}", r.label()))?;
                let p = res.lifted;
                ensure(
                    r.pow(p, 3) == p
                        && r.is_nil(r.sub(a, p))
                        && generated_subring(&r, a).elements.contains(p),
                    || format!("{}: bad tripotent lift of {a}: {res:?}", r.label()),
                )?;
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for r in wide_survey()
        .into_iter()
        .filter(|r| inverse_of_two(r).is_some())
    {
        for p in r.classification().tripotents.iter() {
            let (e, f) = tripotent_split(&r, p).map_err(|e| e.to_string())?;
            let z = r.zero();
            ensure(
                r.mul(e, e) == e
                    && r.mul(f, f) == f
                    && r.mul(e, f) == z
                    && r.mul(f, e) == z
                    && r.sub(e, f) == p
                    && r.add(e, f) == r.mul(p, p),
                || format!("{}: split of {p} gave ({e}, {f})", r.label()),
            )?;
        }
    }
    Ok(())
}

/// Maps the element classification of `corner` through an isomorphism onto
/// `target` and compares it with `target`'s own.
fn same_classification(corner: &RingTable, target: &RingTable) -> Outcome {
    let maps = isomorphisms(corner, target).ok_or("ring too large for iso search")?;
    let phi = maps
        .first()
        .ok_or_else(|| format!("{} is not isomorphic to {}", corner.label(), target.label()))?;
    let (c, t) = (corner.classification(), target.classification());
    let pairs = [
        (&c.nilpotents, &t.nilpotents),
        (&c.idempotents, &t.idempotents),
        (&c.tripotents, &t.tripotents),
        (&c.five_potents, &t.five_potents),
        (&c.involutions, &t.involutions),
        (&c.units, &t.units),
        (&c.squares, &t.squares),
    ];
    for (mine, theirs) in pairs {
        let mapped: BTreeSet<ElementId> = mine.iter().map(|x| phi[x.0]).collect();
        let want: BTreeSet<ElementId> = theirs.iter().collect();
        ensure(mapped == want, || {
            format!("{}: classes differ from {}", corner.label(), target.label())
        })?;
    }
    let (rc, rt) = (cross_check(corner), cross_check(target));
    for id in CharacterizationId::ALL {
        ensure(rc.holds(id) == rt.holds(id), || {
            format!("{id} differs on corner {}", corner.label())
        })?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let z12 = make_zn(12).unwrap();
    let dec = primary_decomposition(&z12);
    let orders: BTreeSet<usize> = dec.factors.iter().map(|f| f.corner.order()).collect();
    ensure(orders == BTreeSet::from([3, 4]), || {
        format!("corner orders {orders:?}")
    })?;
    for f in &dec.factors {
        let target = make_zn(f.corner.order() as u64).unwrap();
        same_classification(&f.corner, &target)?;
    }
    for r in wide_survey() {
        let dec = primary_decomposition(&r);
        let es: Vec<ElementId> = dec.factors.iter().map(|f| f.central_idempotent).collect();
        let sum = r.sum(es.iter().copied());
        ensure(sum == r.one(), || {
            format!("{}: idempotents sum to {sum}", r.label())
        })?;
        let mut product = 1;
        for (i, &e) in es.iter().enumerate() {
            ensure(r.mul(e, e) == e && r.is_central(e), || {
                format!("{}: {e} not a central idempotent", r.label())
            })?;
            for &g in &es[i + 1..] {
                ensure(r.mul(e, g) == r.zero(), || {
                    format!("{}: {e}, {g} not orthogonal", r.label())
                })?;
            }
            product *= dec.factors[i].corner.order();
        }
        ensure(product == r.order(), || {
            format!("{}: corner orders do not multiply out", r.label())
        })?;
        if dec.factors.len() > 1 {
            ensure(
                dec.factors.len() == nilclean::ring::factorize(characteristic(&r) as u64).len(),
                || format!("{}: wrong number of factors", r.label()),
            )?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let m = make_matrix_ring(&make_zn(2).unwrap(), 2).unwrap();
    let a3 = check_characterization(&m, CharacterizationId::S2ncA3);
    let w = a3.witness.ok_or("M2(Z/2) reported S2NC")?;
    ensure(!m.is_nil(m.sub(w, m.pow(w, 3))), || {
        format!("witness {w} is not a counterexample")
    })?;
    let z5 = cross_check(&make_zn(5).unwrap());
    ensure(
        z5.class_holds(RingClass::Znc) && !z5.class_holds(RingClass::S2nc),
        || "Z/5 should be ZNC and not S2NC".into(),
    )?;
    let reports: Vec<_> = survey_set(12)
        .iter()
        .map(|e| cross_check(&e.ring))
        .collect();
    let exhibited = |ring: &str, key: &str| {
        reports
            .iter()
            .any(|rep| rep.ring == ring && rep.separations[key].strictly_exceeds)
    };
    ensure(exhibited("Z5", "S2NC-SQ-4E"), || {
        "S2NC-SQ-4E separation missing from survey".into()
    })?;
    ensure(exhibited("example3.6", "ZNC-SQ-5P"), || {
        "ZNC-SQ-5P separation missing from survey".into()
    })
}

/// Naive evaluation of every predicate from the raw tables: full tuple
/// enumeration, powers by repeated multiplication, nilpotency as `x^n = 0`.
mod naive {
    pub struct Tables {
        pub n: usize,
        pub zero: usize,
        pub one: usize,
        pub add: Vec<Vec<usize>>,
        pub mul: Vec<Vec<usize>>,
    }

    impl Tables {
        fn pow(&self, x: usize, k: u32) -> usize {
            (0..k).fold(self.one, |acc, _| self.mul[acc][x])
        }

        fn nil(&self, x: usize) -> bool {
            self.pow(x, self.n as u32) == self.zero
        }

        fn sub(&self, a: usize, b: usize) -> usize {
            let neg = (0..self.n).find(|&y| self.add[b][y] == self.zero).unwrap();
            self.add[a][neg]
        }

        fn is(&self, kind: char, x: usize) -> bool {
            match kind {
                'e' => self.mul[x][x] == x,
                't' => self.pow(x, 3) == x,
                'p' => self.pow(x, 5) == x,
                'v' => self.mul[x][x] == self.one,
                _ => unreachable!(),
            }
        }

        fn commute(&self, x: usize, y: usize) -> bool {
            self.mul[x][y] == self.mul[y][x]
        }

        fn decomposes(&self, a: usize, kinds: &str) -> bool {
            let kinds: Vec<char> = kinds.chars().collect();
            let k = kinds.len();
            let total = self.n.pow(k as u32);
            (0..total).any(|code| {
                let mut c = code;
                let mut parts = Vec::with_capacity(k + 1);
                for _ in 0..k {
                    parts.push(c % self.n);
                    c /= self.n;
                }
                if !parts.iter().zip(&kinds).all(|(&x, &kind)| self.is(kind, x)) {
                    return false;
                }
                let s = parts.iter().fold(self.zero, |acc, &x| self.add[acc][x]);
                let w = self.sub(a, s);
                parts.push(w);
                self.nil(w)
                    && parts
                        .iter()
                        .all(|&x| parts.iter().all(|&y| self.commute(x, y)))
            })
        }

        fn square(&self, a: usize) -> bool {
            (0..self.n).any(|x| self.mul[x][x] == a)
        }

        /// Holds, or the least falsifying element.
        pub fn check(&self, id: &str) -> Option<usize> {
            let all = |f: &dyn Fn(usize) -> bool| (0..self.n).find(|&a| !f(a));
            let sq = |f: &dyn Fn(usize) -> bool| (0..self.n).find(|&a| self.square(a) && !f(a));
            match id {
                "S2NC-A3" => all(&|a| self.nil(self.sub(a, self.pow(a, 3)))),
                "ZNC-A5" => all(&|a| self.nil(self.sub(a, self.pow(a, 5)))),
                "S2NC-DEF" => all(&|a| self.decomposes(a, "ee")),
                "S2NC-TRIP-NIL" => all(&|a| self.decomposes(a, "t")),
                "S2NC-SQ-1E" => sq(&|a| self.decomposes(a, "e")),
                "S2NC-SQ-2E" => sq(&|a| self.decomposes(a, "ee")),
                "S2NC-SQ-3E" => sq(&|a| self.decomposes(a, "eee")),
                "S2NC-SQ-4E" => sq(&|a| self.decomposes(a, "eeee")),
                "S2NC-SQ-E-INV" => sq(&|a| self.decomposes(a, "ev")),
                "ZNC-DEF" => all(&|a| self.decomposes(a, "tt")),
                "ZNC-5P-NIL" => all(&|a| self.decomposes(a, "p")),
                "ZNC-SQ-1T" => sq(&|a| self.decomposes(a, "t")),
                "ZNC-SQ-2T" => sq(&|a| self.decomposes(a, "tt")),
                "ZNC-SQ-T-INV" => sq(&|a| self.decomposes(a, "tv")),
                "ZNC-SQ-5P" => sq(&|a| self.decomposes(a, "p")),
                "ZNC-7INV-SQ-4E" => {
                    let seven = (0..7).fold(self.zero, |acc, _| self.add[acc][self.one]);
                    let unit = (0..self.n)
                        .any(|y| self.mul[seven][y] == self.one && self.mul[y][seven] == self.one);
                    if unit {
                        sq(&|a| self.decomposes(a, "eeee"))
                    } else {
                        Some(seven)
                    }
                }
                other => panic!("no oracle for {other}"),
            }
        }
    }
}

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for entry in survey_set(9) {
        let r = &entry.ring;
        let t = naive::Tables {
            n: r.order(),
            zero: r.zero().0,
            one: r.one().0,
            add: r.add_table(),
            mul: r.mul_table(),
        };
        for id in CharacterizationId::ALL {
            let main = check_characterization(r, id);
            let oracle = t.check(id.as_str());
            ensure(main.witness.map(|w| w.0) == oracle, || {
                format!(
                    "{} {id}: main {:?}, oracle {oracle:?}",
                    r.label(),
                    main.witness
                )
            })?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "nothing checked".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Z/5 squares and idempotent sums", criterion_1),
        ("four-element Cayley ring", criterion_2),
        ("nine-element matrix field", criterion_3),
        ("characterization equivalences on the survey", criterion_4),
        ("lifting soundness", criterion_5),
        ("tripotent split identities", criterion_6),
        ("primary decomposition", criterion_7),
        ("negative cases and separations", criterion_8),
        ("naive oracle agreement", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(()) => println!("PASS {} {name} ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({:.2?}): {why}", i + 1, start.elapsed());
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
