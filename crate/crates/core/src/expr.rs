//! Ring expressions.
//!
//! ```text
//! EXPR := TERM ("x" TERM)*
//! TERM := "Z/" INT | "GF(" INT "^" INT ")" | "M" INT "(" EXPR ")" | "@" NAME
//! ```
//!
//! Whitespace between tokens is ignored and `x` (direct product) associates
//! to the left. A `NAME` runs until whitespace or a parenthesis.

use std::fmt;
use std::str::FromStr;

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::ring::{RingBuilder, RingTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zn(u64),
    Gf(u64, u32),
    Mat(usize, Box<RingExpr>),
    Prod(Box<RingExpr>, Box<RingExpr>),
    Named(String),
}

impl RingExpr {
    /// Builds the ring, resolving `@NAME` against `catalog`. The result is
    /// labelled with the expression's canonical text.
    pub fn build(&self, builder: &RingBuilder, catalog: &Catalog) -> Result<RingTable> {
        let ring = match self {
            RingExpr::Zn(n) => builder.zn(*n)?,
            RingExpr::Gf(p, k) => builder.gf(*p, *k)?,
            RingExpr::Mat(k, base) => builder.matrix_ring(&base.build(builder, catalog)?, *k)?,
            RingExpr::Prod(a, b) => {
                builder.product(&a.build(builder, catalog)?, &b.build(builder, catalog)?)?
            }
            RingExpr::Named(name) => {
                let ring = catalog.get(name)?.ring.clone();
                if ring.order() > builder.order_cap {
                    return Err(Error::OrderCapExceeded {
                        requested: ring.order() as u128,
                        cap: builder.order_cap,
                    });
                }
                ring
            }
        };
        Ok(ring.with_label(self.to_string()))
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z/{n}"),
            RingExpr::Gf(p, k) => write!(f, "GF({p}^{k})"),
            RingExpr::Mat(k, e) => write!(f, "M{k}({e})"),
            RingExpr::Prod(a, b) => write!(f, "{a} x {b}"),
            RingExpr::Named(n) => write!(f, "@{n}"),
        }
    }
}

impl FromStr for RingExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ring_expr(s)
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["\"x\"", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, expected: &[&str]) -> Error {
        Error::Parse {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        let t = token.as_bytes();
        if self.src[self.pos..].starts_with(t) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&[&format!("\"{token}\"")]))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error(&["integer"])
        })
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = RingExpr::Prod(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RingExpr> {
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                self.expect("/")?;
                Ok(RingExpr::Zn(self.int()?))
            }
            Some(b'G') => {
                self.expect("GF")?;
                self.expect("(")?;
                let p = self.int()?;
                self.expect("^")?;
                let at = self.pos;
                let k = self.int()?;
                let k = u32::try_from(k).map_err(|_| {
                    self.pos = at;
                    self.error(&["small exponent"])
                })?;
                self.expect(")")?;
                Ok(RingExpr::Gf(p, k))
            }
            Some(b'M') => {
                self.pos += 1;
                let k = self.int()? as usize;
                self.expect("(")?;
                let inner = self.expr()?;
                self.expect(")")?;
                Ok(RingExpr::Mat(k, Box::new(inner)))
            }
            Some(b'@') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len()
                    && !self.src[self.pos].is_ascii_whitespace()
                    && !matches!(self.src[self.pos], b'(' | b')')
                {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.error(&["name"]));
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                Ok(RingExpr::Named(name))
            }
            _ => Err(self.error(&["\"Z/\"", "\"GF(\"", "\"M\"", "\"@\""])),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(s: &str) -> RingExpr {
        parse_ring_expr(s).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(parse("Z/12"), RingExpr::Zn(12));
        assert_eq!(
            parse("M2(Z/2) x @example3.5"),
            RingExpr::Prod(
                Box::new(RingExpr::Mat(2, Box::new(RingExpr::Zn(2)))),
                Box::new(RingExpr::Named("example3.5".into()))
            )
        );
        assert_eq!(parse("GF(3^2)"), RingExpr::Gf(3, 2));
        assert_eq!(parse("  Z / 4x Z/3 "), parse("Z/4 x Z/3"));
    }

    #[test]
    fn product_is_left_associative() {
        let e = parse("Z/2 x Z/3 x Z/5");
        let RingExpr::Prod(lhs, rhs) = e else {
            panic!()
        };
        assert_eq!(*rhs, RingExpr::Zn(5));
        assert!(matches!(*lhs, RingExpr::Prod(..)));
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_ring_expr("Z/") {
            Err(Error::Parse { offset, expected }) => {
                assert_eq!(offset, 2);
                assert_eq!(expected, vec!["integer"]);
            }
            other => panic!("{other:?}"),
        }
        match parse_ring_expr("Z/4 y") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_ring_expr("GF(3^2").is_err());
        assert!(parse_ring_expr("M2 Z/2").is_err());
        assert!(parse_ring_expr("@").is_err());
        assert!(parse_ring_expr("").is_err());
    }

    #[test]
    fn builds_with_labels() {
        let cat = Catalog::builtin();
        let r = parse("Z/4 x Z/3")
            .build(&RingBuilder::default(), &cat)
            .unwrap();
        assert_eq!((r.order(), r.label()), (12, "Z/4 x Z/3"));
        let r = parse("@example3.6")
            .build(&RingBuilder::default(), &cat)
            .unwrap();
        assert_eq!(r.order(), 9);
        assert!(matches!(
            parse("M3(Z/2)").build(&RingBuilder::default(), &cat),
            Err(Error::OrderCapExceeded { .. })
        ));
        assert!(parse("M3(Z/2)")
            .build(&RingBuilder::with_cap(512), &cat)
            .is_ok());
        assert!(matches!(
            parse("@nope").build(&RingBuilder::default(), &cat),
            Err(Error::UnknownName { .. })
        ));
    }

    fn term() -> impl Strategy<Value = RingExpr> {
        let leaf = prop_oneof![
            (1u64..1000).prop_map(RingExpr::Zn),
            (2u64..50, 1u32..6).prop_map(|(p, k)| RingExpr::Gf(p, k)),
            "[a-zA-Z0-9._-]{1,12}".prop_map(RingExpr::Named),
        ];
        leaf.prop_recursive(3, 12, 3, |inner| {
            prop_oneof![
                (1usize..4, inner.clone()).prop_map(|(k, e)| RingExpr::Mat(k, Box::new(e))),
                prop::collection::vec(inner, 2..4).prop_map(|v| {
                    v.into_iter()
                        .reduce(|a, b| RingExpr::Prod(Box::new(a), Box::new(b)))
                        .unwrap()
                }),
            ]
        })
    }

    fn left_assoc(e: &RingExpr) -> bool {
        match e {
            RingExpr::Prod(a, b) => {
                !matches!(**b, RingExpr::Prod(..)) && left_assoc(a) && left_assoc(b)
            }
            RingExpr::Mat(_, e) => left_assoc(e),
            _ => true,
        }
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(e in term().prop_filter("left-assoc", left_assoc)) {
            prop_assert_eq!(parse_ring_expr(&e.to_string()).unwrap(), e);
        }
    }
}
