//! Text syntax for slopes, tangles, knots and links.
//!
//! ```text
//! slope   := int ('/' uint)? | 'inf'
//! tangle  := '[' slope (',' slope)* ']'      no 'inf' entries
//! knot    := 'K' ('0' | '1') tangle
//! link    := 'M' '[' slope (',' slope)* ']'  'inf' allowed
//! ```
//!
//! Whitespace between tokens is ignored. Errors carry a byte offset.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::seifert::MontesinosLink;
use crate::slopes::Slope;
use crate::tangles::MontesinosTangle;
use crate::wrapped::WrappedKnot;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected digits");
        }
        let v: BigInt = rest[..len].parse().expect("ascii digits");
        self.pos += len;
        Ok(v)
    }

    fn slope(&mut self) -> Result<Slope> {
        self.skip_ws();
        if self.src[self.pos..].starts_with("inf") {
            self.pos += 3;
            return Ok(Slope::meridian());
        }
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let p = self.digits()?;
        let p = if neg { -p } else { p };
        if self.eat('/') {
            let at = self.pos;
            let q = self.digits()?;
            Slope::new(p, q).map_err(|_| Error::Parse { pos: at, msg: "0/0 is not a slope".into() })
        } else {
            Ok(Slope::integer(p))
        }
    }

    fn list(&mut self) -> Result<Vec<(usize, Slope)>> {
        self.expect('[')?;
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            out.push((at, self.slope()?));
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(())
    }
}

pub fn parse_slope(src: &str) -> Result<Slope> {
    let mut c = Cursor::new(src);
    let s = c.slope()?;
    c.finish()?;
    Ok(s)
}

fn tangle_from(entries: Vec<(usize, Slope)>) -> Result<MontesinosTangle> {
    if let Some((pos, _)) = entries.iter().find(|(_, t)| t.is_meridian()) {
        return Err(Error::Parse { pos: *pos, msg: "tangle entries must be finite".into() });
    }
    MontesinosTangle::from_slopes(entries.into_iter().map(|(_, t)| t))
}

pub fn parse_tangle(src: &str) -> Result<MontesinosTangle> {
    let mut c = Cursor::new(src);
    let entries = c.list()?;
    c.finish()?;
    tangle_from(entries)
}

pub fn parse_knot(src: &str) -> Result<WrappedKnot> {
    let mut c = Cursor::new(src);
    c.expect('K')?;
    let a = match c.peek() {
        Some('0') => 0,
        Some('1') => 1,
        _ => return c.err("expected wrap 0 or 1"),
    };
    c.pos += 1;
    let entries = c.list()?;
    c.finish()?;
    WrappedKnot::new(a, tangle_from(entries)?)
}

pub fn parse_link(src: &str) -> Result<MontesinosLink> {
    let mut c = Cursor::new(src);
    c.expect('M')?;
    let entries = c.list()?;
    c.finish()?;
    Ok(MontesinosLink { entries: entries.into_iter().map(|(_, t)| t).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slopes() {
        assert_eq!(parse_slope("37/2").unwrap(), Slope::new(37, 2).unwrap());
        assert_eq!(parse_slope(" -4 / 6 ").unwrap(), Slope::new(-2, 3).unwrap());
        assert_eq!(parse_slope("inf").unwrap(), Slope::meridian());
        assert_eq!(parse_slope("3/0").unwrap(), Slope::meridian());
        assert!(matches!(parse_slope("0/0"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_slope("1/-2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_slope("7x"), Err(Error::Parse { pos: 1, .. })));
        assert!(parse_slope("").is_err());
    }

    #[test]
    fn knots_and_links() {
        let k = parse_knot("K1[-1/2, 1/3]").unwrap();
        assert_eq!(k.a(), 1);
        assert_eq!(k.tangle().len(), 2);
        assert!(matches!(parse_knot("K2[1]"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_knot("K0[inf]"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_knot("K0[1/2]"), Err(Error::NotAKnot(..))));
        let l = parse_link("M[1/2, inf, -1/3]").unwrap();
        assert_eq!(l.entries.len(), 3);
        assert!(parse_tangle("[]").is_err());
    }
}
