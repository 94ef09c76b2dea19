//! Finite unital rings as immutable Cayley tables.
//!
//! Elements are positional: an [`ElementId`] is an index into the tables of
//! one specific [`RingTable`], and equality of elements is index equality.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::classes::ElementClassification;
use crate::error::{Axiom, Error, Result};

/// Default maximum number of elements a constructor will build.
pub const DEFAULT_ORDER_CAP: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i)
    }
}

/// A finite ring with identity, stored as full addition and multiplication
/// tables over `0..order`.
#[derive(Clone)]
pub struct RingTable {
    order: usize,
    add: Vec<ElementId>,
    mul: Vec<ElementId>,
    neg: Vec<ElementId>,
    zero: ElementId,
    one: ElementId,
    label: String,
    pub(crate) classes: OnceLock<ElementClassification>,
}

impl fmt::Debug for RingTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingTable")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

/// Two tables are equal when they have identical operations and constants;
/// the label and caches are ignored.
impl PartialEq for RingTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for RingTable {}

impl RingTable {
    /// Builds a ring from raw tables and runs the full axiom check.
    pub fn from_parts(
        label: impl Into<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let ring = Self::from_parts_unvalidated(label, add, mul, zero, one)?;
        validate_ring(&ring)?;
        Ok(ring)
    }

    /// Checks table shapes and derives negation, but does not check the ring
    /// axioms. Use [`validate_ring`] on the result.
    pub fn from_parts_unvalidated(
        label: impl Into<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let order = add.len();
        if order == 0 {
            return Err(Error::MalformedTable(
                "a ring needs at least one element".into(),
            ));
        }
        let flatten = |name: &str, t: Vec<Vec<usize>>| -> Result<Vec<ElementId>> {
            if t.len() != order {
                return Err(Error::MalformedTable(format!(
                    "{name} table has {} rows, expected {order}",
                    t.len()
                )));
            }
            let mut flat = Vec::with_capacity(order * order);
            for (i, row) in t.into_iter().enumerate() {
                if row.len() != order {
                    return Err(Error::MalformedTable(format!(
                        "{name} row {i} has {} entries, expected {order}",
                        row.len()
                    )));
                }
                for (j, v) in row.into_iter().enumerate() {
                    if v >= order {
                        return Err(Error::MalformedTable(format!(
                            "{name}[{i}][{j}] = {v} is out of range"
                        )));
                    }
                    flat.push(ElementId(v));
                }
            }
            Ok(flat)
        };
        let add = flatten("add", add)?;
        let mul = flatten("mul", mul)?;
        if zero >= order || one >= order {
            return Err(Error::MalformedTable(format!(
                "zero={zero}, one={one} must be below order {order}"
            )));
        }
        Self::from_flat(
            label.into(),
            order,
            add,
            mul,
            ElementId(zero),
            ElementId(one),
        )
    }

    fn from_flat(
        label: String,
        order: usize,
        add: Vec<ElementId>,
        mul: Vec<ElementId>,
        zero: ElementId,
        one: ElementId,
    ) -> Result<Self> {
        let mut neg = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order).find(|&b| add[a * order + b] == zero);
            match inv {
                Some(b) => neg.push(ElementId(b)),
                None => {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::AdditiveGroup,
                        witnesses: (a, zero.0, zero.0),
                    })
                }
            }
        }
        Ok(RingTable {
            order,
            add,
            mul,
            neg,
            zero,
            one,
            label,
            classes: OnceLock::new(),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> ElementId {
        self.zero
    }

    pub fn one(&self) -> ElementId {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone {
        (0..self.order).map(ElementId)
    }

    pub fn contains(&self, a: ElementId) -> bool {
        a.0 < self.order
    }

    /// Checks that `index` names an element of this ring.
    pub fn element(&self, index: usize) -> Result<ElementId> {
        if index < self.order {
            Ok(ElementId(index))
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add[a.0 * self.order + b.0]
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.mul[a.0 * self.order + b.0]
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        self.neg[a.0]
    }

    #[inline]
    pub fn sub(&self, a: ElementId, b: ElementId) -> ElementId {
        self.add(a, self.neg(b))
    }

    /// `a^n` with `a^0 = 1`.
    pub fn pow(&self, a: ElementId, mut n: u64) -> ElementId {
        let mut base = a;
        let mut acc = self.one;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn sum(&self, items: impl IntoIterator<Item = ElementId>) -> ElementId {
        items.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    #[inline]
    pub fn commute(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| {
            self.elements()
                .filter(|b| b.0 > a.0)
                .all(|b| self.commute(a, b))
        })
    }

    /// Elements commuting with every element of the ring.
    pub fn is_central(&self, a: ElementId) -> bool {
        self.elements().all(|x| self.commute(a, x))
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add
            .chunks(self.order)
            .map(|r| r.iter().map(|e| e.0).collect())
            .collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.order)
            .map(|r| r.iter().map(|e| e.0).collect())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ring tables always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Runs the full `O(order^3)` axiom scan.
///
/// Axioms are checked in this order: additive group, commutativity of `+`,
/// multiplicative identity, distributivity, associativity of `*`. The first
/// failure is reported with its witness triple.
pub fn validate_ring(r: &RingTable) -> Result<()> {
    let n = r.order;
    let violation = |axiom, a: usize, b: usize, c: usize| Error::AxiomViolation {
        axiom,
        witnesses: (a, b, c),
    };
    let els = || r.elements();
    let z = r.zero;

    for a in els() {
        if r.add(a, z) != a || r.add(z, a) != a {
            return Err(violation(Axiom::AdditiveGroup, a.0, z.0, z.0));
        }
        if r.add(a, r.neg(a)) != z || r.add(r.neg(a), a) != z {
            return Err(violation(Axiom::AdditiveGroup, a.0, r.neg(a).0, z.0));
        }
    }
    for a in els() {
        for b in els() {
            let ab = r.add(a, b);
            for c in els() {
                if r.add(ab, c) != r.add(a, r.add(b, c)) {
                    return Err(violation(Axiom::AdditiveGroup, a.0, b.0, c.0));
                }
            }
        }
    }
    for a in els() {
        for b in els() {
            if r.add(a, b) != r.add(b, a) {
                return Err(violation(Axiom::AdditiveCommutativity, a.0, b.0, 0));
            }
        }
    }
    for a in els() {
        if r.mul(r.one, a) != a || r.mul(a, r.one) != a {
            return Err(violation(Axiom::Identity, r.one.0, a.0, 0));
        }
    }
    for a in els() {
        for b in els() {
            for c in els() {
                let bc = r.add(b, c);
                if r.mul(a, bc) != r.add(r.mul(a, b), r.mul(a, c))
                    || r.mul(bc, a) != r.add(r.mul(b, a), r.mul(c, a))
                {
                    return Err(violation(Axiom::Distributivity, a.0, b.0, c.0));
                }
            }
        }
    }
    for a in els() {
        for b in els() {
            let ab = r.mul(a, b);
            for c in els() {
                if r.mul(ab, c) != r.mul(a, r.mul(b, c)) {
                    return Err(violation(Axiom::MultiplicativeAssociativity, a.0, b.0, c.0));
                }
            }
        }
    }
    debug_assert!(n >= 1);
    Ok(())
}

/// Constructors honouring an order cap.
#[derive(Debug, Clone, Copy)]
pub struct RingBuilder {
    pub order_cap: usize,
}

impl Default for RingBuilder {
    fn default() -> Self {
        RingBuilder {
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

impl RingBuilder {
    pub fn with_cap(order_cap: usize) -> Self {
        RingBuilder { order_cap }
    }

    fn check_cap(&self, requested: u128) -> Result<usize> {
        if requested > self.order_cap as u128 {
            Err(Error::OrderCapExceeded {
                requested,
                cap: self.order_cap,
            })
        } else {
            Ok(requested as usize)
        }
    }

    /// Integers modulo `n`.
    pub fn zn(&self, n: u64) -> Result<RingTable> {
        if n == 0 {
            return Err(Error::InvalidArgument("Z/n needs n >= 1".into()));
        }
        let n = self.check_cap(n as u128)?;
        let add = (0..n)
            .flat_map(|a| (0..n).map(move |b| ElementId((a + b) % n)))
            .collect();
        let mul = (0..n)
            .flat_map(|a| (0..n).map(move |b| ElementId(a * b % n)))
            .collect();
        RingTable::from_flat(
            format!("Z/{n}"),
            n,
            add,
            mul,
            ElementId(0),
            ElementId(1 % n),
        )
    }

    /// The field with `p^k` elements, built as `Z/p[x]` modulo the
    /// lexicographically smallest monic irreducible of degree `k`
    /// (coefficients compared from the constant term up).
    ///
    /// Element `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` has index
    /// `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`.
    pub fn gf(&self, p: u64, k: u32) -> Result<RingTable> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("GF(p^k) needs k >= 1".into()));
        }
        let requested = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        let q = self.check_cap(requested)?;
        if k == 1 {
            return Ok(self.zn(p)?.with_label(format!("GF({p}^1)")));
        }
        let modulus = smallest_irreducible(p, k as usize);
        let k = k as usize;
        let decode = |mut i: usize| -> Vec<u64> {
            (0..k)
                .map(|_| {
                    let c = (i as u64) % p;
                    i /= p as usize;
                    c
                })
                .collect()
        };
        let encode = |c: &[u64]| -> usize {
            c.iter()
                .rev()
                .fold(0usize, |acc, &d| acc * p as usize + d as usize)
        };
        let polys: Vec<Vec<u64>> = (0..q).map(decode).collect();
        let mut add = Vec::with_capacity(q * q);
        let mut mul = Vec::with_capacity(q * q);
        for a in &polys {
            for b in &polys {
                let s: Vec<u64> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add.push(ElementId(encode(&s)));
                mul.push(ElementId(encode(&poly_mulmod(a, b, &modulus, p))));
            }
        }
        RingTable::from_flat(
            format!("GF({p}^{k})"),
            q,
            add,
            mul,
            ElementId(0),
            ElementId(1),
        )
    }

    /// Full `k x k` matrix ring over `base`. A matrix is indexed by its
    /// row-major entry tuple read as a base-`order` numeral, first entry most
    /// significant.
    pub fn matrix_ring(&self, base: &RingTable, k: usize) -> Result<RingTable> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimension must be >= 1".into(),
            ));
        }
        let b = base.order();
        let requested = (b as u128).checked_pow((k * k) as u32).unwrap_or(u128::MAX);
        let n = self.check_cap(requested)?;
        let cells = k * k;
        let decode = |mut i: usize| -> Vec<ElementId> {
            let mut v = vec![ElementId(0); cells];
            for slot in v.iter_mut().rev() {
                *slot = ElementId(i % b);
                i /= b;
            }
            v
        };
        let encode = |v: &[ElementId]| -> usize { v.iter().fold(0usize, |acc, e| acc * b + e.0) };
        let mats: Vec<Vec<ElementId>> = (0..n).map(decode).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        let mut prod = vec![base.zero(); cells];
        for x in &mats {
            for y in &mats {
                let s: Vec<ElementId> = x.iter().zip(y).map(|(&u, &v)| base.add(u, v)).collect();
                add.push(ElementId(encode(&s)));
                for i in 0..k {
                    for j in 0..k {
                        prod[i * k + j] =
                            base.sum((0..k).map(|l| base.mul(x[i * k + l], y[l * k + j])));
                    }
                }
                mul.push(ElementId(encode(&prod)));
            }
        }
        let zero = vec![base.zero(); cells];
        let mut one = zero.clone();
        for i in 0..k {
            one[i * k + i] = base.one();
        }
        RingTable::from_flat(
            format!("M{k}({})", base.label()),
            n,
            add,
            mul,
            ElementId(encode(&zero)),
            ElementId(encode(&one)),
        )
    }

    /// Direct product; the pair `(x, y)` has index `x * |r2| + y`.
    pub fn product(&self, r1: &RingTable, r2: &RingTable) -> Result<RingTable> {
        let (n1, n2) = (r1.order(), r2.order());
        let n = self.check_cap(n1 as u128 * n2 as u128)?;
        let split = |i: usize| (ElementId(i / n2), ElementId(i % n2));
        let join = |a: ElementId, b: ElementId| ElementId(a.0 * n2 + b.0);
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for i in 0..n {
            let (a1, a2) = split(i);
            for j in 0..n {
                let (b1, b2) = split(j);
                add.push(join(r1.add(a1, b1), r2.add(a2, b2)));
                mul.push(join(r1.mul(a1, b1), r2.mul(a2, b2)));
            }
        }
        RingTable::from_flat(
            format!("{} x {}", r1.label(), r2.label()),
            n,
            add,
            mul,
            join(r1.zero(), r2.zero()),
            join(r1.one(), r2.one()),
        )
    }
}

pub fn make_zn(n: u64) -> Result<RingTable> {
    RingBuilder::default().zn(n)
}

pub fn make_gf(p: u64, k: u32) -> Result<RingTable> {
    RingBuilder::default().gf(p, k)
}

pub fn make_matrix_ring(base: &RingTable, k: usize) -> Result<RingTable> {
    RingBuilder::default().matrix_ring(base, k)
}

pub fn make_product(r1: &RingTable, r2: &RingTable) -> Result<RingTable> {
    RingBuilder::default().product(r1, r2)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    // modulus is monic of degree k = a.len(), stored without its leading 1
    let k = a.len();
    let mut prod = vec![0u64; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (k..2 * k).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &m) in modulus.iter().enumerate() {
            prod[d - k + i] = (prod[d - k + i] + (p - c) * m) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// Remainder of `f` (full coefficient list, low degree first) modulo the monic
/// polynomial `g`.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = r.pop().unwrap();
        if c == 0 {
            continue;
        }
        let shift = r.len() - dg;
        for (i, &gi) in g[..dg].iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - c) * gi % p) % p;
        }
    }
    r
}

fn monic_polys(p: u64, degree: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(degree as u32);
    (0..count).map(move |mut i| {
        let mut c: Vec<u64> = (0..degree)
            .map(|_| {
                let d = i % p;
                i /= p;
                d
            })
            .collect();
        c.push(1);
        c
    })
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    (1..=deg / 2).all(|d| monic_polys(p, d).all(|g| poly_rem(f, &g, p).iter().any(|&c| c != 0)))
}

/// Lower coefficients of the smallest monic irreducible of degree `k`,
/// ordered by `(c_0, c_1, ..., c_{k-1})` lexicographically.
pub fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    let count = p.pow(k as u32);
    for i in 0..count {
        // c_0 is the most significant digit of i so that numeric order is
        // lexicographic order starting from the constant term.
        let mut rest = i;
        let mut c = vec![0u64; k];
        for slot in c.iter_mut().rev() {
            *slot = rest % p;
            rest /= p;
        }
        let mut full = c.clone();
        full.push(1);
        if is_irreducible(&full, p) {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Least `m >= 1` with `m * 1 = 0`.
pub fn characteristic(r: &RingTable) -> usize {
    let mut acc = r.one();
    let mut m = 1;
    while acc != r.zero() {
        acc = r.add(acc, r.one());
        m += 1;
    }
    m
}

/// `m * 1` in `r`.
pub fn int_embed(r: &RingTable, m: i64) -> ElementId {
    let c = characteristic(r) as i64;
    let reduced = m.rem_euclid(c);
    (0..reduced).fold(r.zero(), |acc, _| r.add(acc, r.one()))
}

/// The corner ring `eRe` of a central idempotent, re-indexed as a standalone
/// table. `embedding[i]` is the element of the parent ring that corner
/// element `i` stands for.
#[derive(Debug, Clone)]
pub struct Corner {
    pub ring: RingTable,
    pub embedding: Vec<ElementId>,
}

pub fn corner_ring(r: &RingTable, e: ElementId) -> Result<Corner> {
    if r.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    if !r.is_central(e) {
        return Err(Error::NotCentral(e));
    }
    let mut embedding: Vec<ElementId> = r.elements().map(|x| r.mul(e, x)).collect();
    embedding.sort_unstable();
    embedding.dedup();
    let mut back = vec![usize::MAX; r.order()];
    for (i, x) in embedding.iter().enumerate() {
        back[x.0] = i;
    }
    let table = |op: &dyn Fn(ElementId, ElementId) -> ElementId| -> Vec<Vec<usize>> {
        embedding
            .iter()
            .map(|&x| embedding.iter().map(|&y| back[op(x, y).0]).collect())
            .collect()
    };
    let add = table(&|x, y| r.add(x, y));
    let mul = table(&|x, y| r.mul(x, y));
    let ring = RingTable::from_parts(
        format!("{}[e={}]", r.label(), e),
        add,
        mul,
        back[r.zero().0],
        back[e.0],
    )?;
    Ok(Corner { ring, embedding })
}

#[derive(Debug, Clone)]
pub struct PrimaryFactor {
    pub central_idempotent: ElementId,
    pub corner: RingTable,
    /// Corner element `i` is `embedding[i]` in the parent ring.
    pub embedding: Vec<ElementId>,
    /// 1 for the trivial ring.
    pub prime: u64,
    pub exponent: u32,
}

/// `R ≅ ∏ R/p_i^{a_i}R`, realized through central idempotents.
#[derive(Debug, Clone)]
pub struct PrimaryDecomposition {
    pub factors: Vec<PrimaryFactor>,
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut a = 0;
            while n.is_multiple_of(d) {
                n /= d;
                a += 1;
            }
            out.push((d, a));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Modular inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1 || m == 1).then(|| old_s.rem_euclid(m))
}

pub fn primary_decomposition(r: &RingTable) -> PrimaryDecomposition {
    let ch = characteristic(r) as u64;
    let primes = factorize(ch);
    if primes.len() <= 1 {
        let (prime, exponent) = primes.first().copied().unwrap_or((1, 0));
        return PrimaryDecomposition {
            factors: vec![PrimaryFactor {
                central_idempotent: r.one(),
                corner: r.clone(),
                embedding: r.elements().collect(),
                prime,
                exponent,
            }],
        };
    }
    let factors = primes
        .into_iter()
        .map(|(p, a)| {
            let q = p.pow(a) as i64;
            let cofactor = ch as i64 / q;
            let u = mod_inverse(cofactor, q).expect("coprime prime-power cofactors");
            let e = int_embed(r, u * cofactor);
            let Corner { ring, embedding } =
                corner_ring(r, e).expect("integer multiples of one are central");
            PrimaryFactor {
                central_idempotent: e,
                corner: ring,
                embedding,
                prime: p,
                exponent: a,
            }
        })
        .collect();
    PrimaryDecomposition { factors }
}

#[derive(Serialize, Deserialize)]
struct RingJson {
    order: usize,
    zero: usize,
    one: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    #[serde(default)]
    label: String,
}

impl Serialize for RingTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RingJson {
            order: self.order,
            zero: self.zero.0,
            one: self.one.0,
            add: self.add_table(),
            mul: self.mul_table(),
            label: self.label.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RingJson::deserialize(d)?;
        if raw.order != raw.add.len() {
            return Err(serde::de::Error::custom(format!(
                "order {} does not match {} table rows",
                raw.order,
                raw.add.len()
            )));
        }
        RingTable::from_parts(raw.label, raw.add, raw.mul, raw.zero, raw.one)
            .map_err(serde::de::Error::custom)
    }
}
