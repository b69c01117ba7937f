//! Wrapped Montesinos knots `K^a(t1, …, tk)` in a solid torus.
//!
//! The tangle sits in a ball cut out of `V` by a meridian disk. Its top
//! endpoints are joined to its bottom endpoints by two arcs that run once
//! around `V`: for `a = 0` the arcs join NW–SW and NE–SE, for `a = 1` they
//! cross once and join NW–SE and NE–SW. Under the standard embedding the
//! wrap arcs form the rational tangle `1/a`, and after `n` full twists of
//! `V` they form `1/(a + 2n)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::slopes::Slope;
use crate::tangles::{Connectivity, Endpoint, MontesinosTangle, Pairing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WrappedKnot {
    a: u8,
    tangle: MontesinosTangle,
}

/// Result of walking once around the closed curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureTrace {
    pub components: usize,
    /// Algebraic count of passes through the meridian disk, top to bottom
    /// counted positive.
    pub signed_passes: i32,
}

/// Partner of an endpoint along the wrap arcs.
pub fn wrap_partner(a: u8, e: Endpoint) -> Endpoint {
    use Endpoint::*;
    match (a, e) {
        (0, NW) => SW,
        (0, SW) => NW,
        (0, NE) => SE,
        (0, SE) => NE,
        (_, NW) => SE,
        (_, SE) => NW,
        (_, NE) => SW,
        (_, SW) => NE,
    }
}

/// Oriented walk: tangle strand from `start`, then wrap arc, and so on.
/// Returns the visited `(entry, exit)` tangle strands in order together
/// with the trace summary.
fn walk(conn: &Connectivity, a: u8) -> (Vec<(Endpoint, Endpoint)>, ClosureTrace) {
    let mut strands = Vec::new();
    let mut passes = 0i32;
    let mut seen = [false; 4];
    let mut at = Endpoint::NW;
    loop {
        let out = conn.matching.partner(at);
        seen[at as usize] = true;
        seen[out as usize] = true;
        strands.push((at, out));
        let next = wrap_partner(a, out);
        passes += if out.is_top() { 1 } else { -1 };
        at = next;
        if at == Endpoint::NW {
            break;
        }
    }
    let arcs_cycles = if seen.iter().all(|&v| v) { 1 } else { 2 };
    let trace = ClosureTrace { components: conn.loops + arcs_cycles, signed_passes: passes };
    (strands, trace)
}

pub fn trace_closure(tangle: &MontesinosTangle, a: u8) -> ClosureTrace {
    walk(&tangle.connectivity(), a).1
}

impl WrappedKnot {
    pub fn new(a: u8, tangle: MontesinosTangle) -> Result<Self> {
        if a > 1 {
            return Err(Error::BadWrap(a));
        }
        let trace = trace_closure(&tangle, a);
        if trace.components != 1 {
            return Err(Error::NotAKnot(format!("K{a}{tangle}"), trace.components));
        }
        Ok(WrappedKnot { a, tangle })
    }

    pub fn a(&self) -> u8 {
        self.a
    }

    pub fn tangle(&self) -> &MontesinosTangle {
        &self.tangle
    }

    fn trace(&self) -> ClosureTrace {
        trace_closure(&self.tangle, self.a)
    }

    /// 0 or 2, from the oriented walk.
    pub fn winding_number(&self) -> u32 {
        self.trace().signed_passes.unsigned_abs()
    }

    /// 2 for non-degenerate tangles. A degenerate tangle (equivalent to
    /// `T[0]` or `T[1/q]`) gives an unknot or a cable of the core, whose
    /// wrapping number equals the winding number.
    pub fn wrapping_number(&self) -> u32 {
        if crate::tangles::normalize(&self.tangle).is_degenerate() {
            self.winding_number()
        } else {
            2
        }
    }

    /// `wind(K)^2`, the slope shift per full twist of `V`.
    pub fn twist_shift(&self) -> BigInt {
        BigInt::from(self.winding_number().pow(2))
    }

    pub fn twist(&self, n: &BigInt) -> TwistedImage {
        let c: BigInt = BigInt::from(self.a) + n * BigInt::from(2);
        let entries: Vec<Slope> = self.tangle.slopes().cloned().collect();
        if c.is_zero() {
            TwistedImage::Degenerate2Bridge {
                n: n.clone(),
                summands: entries.iter().map(Slope::recip).collect(),
            }
        } else {
            let mut entries = entries;
            entries.push(Slope::new(BigInt::one(), c).expect("nonzero"));
            TwistedImage::Montesinos { n: n.clone(), entries }
        }
    }

    /// `r_n = r + n·wind²`; the meridian is fixed.
    pub fn transport_slope(&self, r: &Slope, n: &BigInt) -> Slope {
        r.add_int(&(n * self.twist_shift()))
    }

    /// Fraction of the 2-bridge knot `K_n` for a single rational tangle
    /// `t = p/q`: `1/((a + 2n) + q/p)`.
    pub fn two_bridge_fraction(&self, n: &BigInt) -> Result<Slope> {
        if self.tangle.len() != 1 {
            return Err(Error::NotLengthOne(self.tangle.len()));
        }
        let t = self.tangle.entries()[0].slope();
        let c: BigInt = BigInt::from(self.a) + n * BigInt::from(2);
        Ok(t.recip().add_int(&c).recip())
    }

    /// Boundary slope of the pretzel spanning surface, for `K^a(m)` and
    /// `K^a(1/q1, 1/q2)` with `|qi| ≥ 2`.
    pub fn pretzel_slope(&self) -> Result<Slope> {
        let no = || Error::NoPretzelSurface(self.to_string());
        let slopes: Vec<&Slope> = self.tangle.slopes().collect();
        match slopes.as_slice() {
            [t] => {
                let m = t.as_integer().ok_or_else(no)?;
                Ok(Slope::integer(self.integer_band_framing(m)))
            }
            [s1, s2] => {
                let q = |s: &Slope| -> Option<BigInt> {
                    let d = s.recip();
                    let v = d.as_integer()?;
                    (v.abs() >= BigInt::from(2)).then(|| v.clone())
                };
                let q1 = q(s1).ok_or_else(no)?;
                let q2 = q(s2).ok_or_else(no)?;
                let cols = [q1, q2, BigInt::from(self.a)];
                pretzel_framing(&cols).map(Slope::integer).ok_or_else(no)
            }
            _ => Err(no()),
        }
    }

    /// Framing of the surface made of the band of `m` horizontal
    /// half-twists plumbed to the wrap band of `a` half-twists.
    fn integer_band_framing(&self, m: &BigInt) -> BigInt {
        let (strands, trace) = walk(&self.tangle.connectivity(), self.a);
        // each strand of an integer tangle joins a west end to an east end
        let eastward: Vec<bool> = strands.iter().map(|(from, _)| from.is_west()).collect();
        let band_coherent = eastward.iter().all(|&e| e) || eastward.iter().all(|&e| !e);
        let wrap_coherent = trace.signed_passes != 0;
        let mut framing = BigInt::zero();
        if band_coherent {
            framing += m * 2;
        }
        if wrap_coherent {
            framing += BigInt::from(self.a) * 2;
        }
        framing
    }
}

/// Surface framing of the pretzel diagram `P(c1, …, ck)` with its
/// standard spanning surface, or `None` if the diagram is not a knot.
///
/// Oriented strand tracing through the columns decides for each twist
/// region whether its two strands run the same way. Each crossing of such
/// a coherent column contributes `2ε` to the linking number of the knot
/// with its push-off along the surface, crossings of incoherent columns
/// cancel against the band twisting, and positive `c` denotes crossings of
/// sign `+1` in a coherent column.
pub fn pretzel_framing(columns: &[BigInt]) -> Option<BigInt> {
    let k = columns.len();
    if k == 0 {
        return None;
    }
    // node ids: 4i + {0: top-left, 1: top-right, 2: bottom-left, 3: bottom-right}
    let through = |node: usize| -> usize {
        let (i, corner) = (node / 4, node % 4);
        let odd = (&columns[i] % 2u8) != BigInt::zero();
        let other = match (corner, odd) {
            (0, true) => 3,
            (3, true) => 0,
            (1, true) => 2,
            (2, true) => 1,
            (0, false) => 2,
            (2, false) => 0,
            (1, false) => 3,
            (3, false) => 1,
            _ => unreachable!(),
        };
        4 * i + other
    };
    let outside = |node: usize| -> usize {
        let (i, corner) = (node / 4, node % 4);
        match corner {
            1 => 4 * ((i + 1) % k),
            0 => 4 * ((i + k - 1) % k) + 1,
            3 => 4 * ((i + 1) % k) + 2,
            2 => 4 * ((i + k - 1) % k) + 3,
            _ => unreachable!(),
        }
    };
    let mut downward: Vec<Vec<bool>> = vec![Vec::new(); k];
    let mut visited = vec![false; 4 * k];
    let mut node = 0usize;
    loop {
        let exit = through(node);
        visited[node] = true;
        visited[exit] = true;
        downward[node / 4].push(node % 4 < 2);
        node = outside(exit);
        if node == 0 {
            break;
        }
    }
    if visited.iter().any(|v| !v) {
        return None;
    }
    let mut framing = BigInt::zero();
    for (c, dirs) in columns.iter().zip(&downward) {
        if dirs.len() == 2 && dirs[0] == dirs[1] {
            framing += c * 2;
        }
    }
    Some(framing)
}

/// Image of `K` in `S³` after `n` full twists of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TwistedImage {
    /// The Montesinos knot `M(t1, …, tk, 1/(a + 2n))`.
    Montesinos {
        #[serde(serialize_with = "ser_int")]
        n: BigInt,
        entries: Vec<Slope>,
    },
    /// `a + 2n = 0`: the wrap arcs become the `1/0` tangle and the closure
    /// is the connected sum of the 2-bridge knots with these fractions.
    Degenerate2Bridge {
        #[serde(serialize_with = "ser_int")]
        n: BigInt,
        summands: Vec<Slope>,
    },
}

fn ser_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl TwistedImage {
    /// Only meaningful for the degenerate variant: every summand is a
    /// 2-bridge knot whose fraction has numerator `±1`.
    pub fn is_unknot(&self) -> bool {
        match self {
            TwistedImage::Degenerate2Bridge { summands, .. } => {
                summands.iter().all(|s| s.numer().abs().is_one())
            }
            TwistedImage::Montesinos { .. } => false,
        }
    }
}

impl fmt::Display for WrappedKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{}{}", self.a, self.tangle)
    }
}

pub fn make_wrapped(a: u8, tangle: MontesinosTangle) -> Result<WrappedKnot> {
    WrappedKnot::new(a, tangle)
}

/// Pairing of the tangle inside a knot, for callers that only hold the knot.
pub fn knot_pairing(k: &WrappedKnot) -> Pairing {
    k.tangle.pairing()
}
