//! Seifert fibered spaces over `S²` from Montesinos links and torus knot
//! surgery.
//!
//! The double branched cover of the Montesinos link `M(β1/α1, …, βk/αk)`
//! is the Seifert space with one singular fiber `(αi, βi)` per entry.
//! Invariants are normalized to `0 < β < α` with the integer parts
//! collected into `e`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::slopes::Slope;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fiber {
    #[serde(serialize_with = "ser_int")]
    pub alpha: BigInt,
    #[serde(serialize_with = "ser_int")]
    pub beta: BigInt,
}

fn ser_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeifertInvariants {
    #[serde(serialize_with = "ser_int")]
    pub e: BigInt,
    /// Sorted by `(alpha, beta)`.
    pub fibers: Vec<Fiber>,
}

impl SeifertInvariants {
    /// Normalizes finite fractions `βi/αi`.
    pub fn from_fractions<'a, I: IntoIterator<Item = &'a Slope>>(entries: I) -> Self {
        let mut e = BigInt::zero();
        let mut fibers = Vec::new();
        for s in entries {
            let (f, r) = s.split_floor().expect("finite fraction");
            e += f;
            if !r.is_zero() {
                fibers.push(Fiber { alpha: r.denom().clone(), beta: r.numer().clone() });
            }
        }
        fibers.sort();
        SeifertInvariants { e, fibers }
    }

    pub fn indices(&self) -> Vec<BigInt> {
        self.fibers.iter().map(|f| f.alpha.clone()).collect()
    }

    /// Same manifold with the opposite orientation.
    pub fn reversed(&self) -> Self {
        let mut fibers: Vec<Fiber> = self
            .fibers
            .iter()
            .map(|f| Fiber { alpha: f.alpha.clone(), beta: &f.alpha - &f.beta })
            .collect();
        fibers.sort();
        SeifertInvariants { e: -&self.e - BigInt::from(self.fibers.len()), fibers }
    }

    /// Orientation-independent representative.
    pub fn unoriented(&self) -> Self {
        let r = self.reversed();
        if (&r.fibers, &r.e) < (&self.fibers, &self.e) {
            r
        } else {
            self.clone()
        }
    }

    /// `|H1|`, i.e. `|Πα · (e + Σ β/α)|`; zero when `H1` is infinite.
    pub fn h1_order(&self) -> BigInt {
        let prod: BigInt = self.fibers.iter().map(|f| f.alpha.clone()).product();
        let mut total = &self.e * &prod;
        for f in &self.fibers {
            total += &f.beta * (&prod / &f.alpha);
        }
        total.abs()
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(e={}", self.e)?;
        for fb in &self.fibers {
            write!(f, "; {}/{}", fb.beta, fb.alpha)?;
        }
        f.write_str(")")
    }
}

/// `L(p, q)` with `q` the least member of `{±q, ±q⁻¹} mod p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LensSpace {
    #[serde(serialize_with = "ser_int")]
    pub p: BigInt,
    #[serde(serialize_with = "ser_int")]
    pub q: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SfsClass {
    S3,
    Lens { lens: LensSpace, fibration: SeifertInvariants },
    /// Three singular fibers.
    SmallSeifert { invariants: SeifertInvariants },
    /// Four or more singular fibers.
    Seifert { invariants: SeifertInvariants },
    Reducible,
}

impl SfsClass {
    /// Classifies `M(r1, …, rk)`; any `1/0` entry is reducible.
    pub fn from_fractions(entries: &[Slope]) -> Self {
        if entries.iter().any(Slope::is_meridian) {
            return SfsClass::Reducible;
        }
        let inv = SeifertInvariants::from_fractions(entries);
        match inv.fibers.len() {
            0..=2 => lens_from_fibration(inv),
            3 => SfsClass::SmallSeifert { invariants: inv },
            _ => SfsClass::Seifert { invariants: inv },
        }
    }

    pub fn is_lens(&self) -> bool {
        matches!(self, SfsClass::Lens { .. })
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, SfsClass::Reducible)
    }

    pub fn invariants(&self) -> Option<&SeifertInvariants> {
        match self {
            SfsClass::Lens { fibration, .. } => Some(fibration),
            SfsClass::SmallSeifert { invariants } | SfsClass::Seifert { invariants } => Some(invariants),
            _ => None,
        }
    }

    pub fn indices(&self) -> Option<Vec<BigInt>> {
        match self {
            SfsClass::SmallSeifert { invariants } | SfsClass::Seifert { invariants } => {
                Some(invariants.indices())
            }
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SfsClass::S3 => "s3",
            SfsClass::Lens { .. } => "lens",
            SfsClass::SmallSeifert { .. } => "small_seifert",
            SfsClass::Seifert { .. } => "seifert",
            SfsClass::Reducible => "reducible",
        }
    }
}

impl fmt::Display for SfsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SfsClass::S3 => f.write_str("S3"),
            SfsClass::Lens { lens, .. } => write!(f, "lens space L({},{})", lens.p, lens.q),
            SfsClass::SmallSeifert { invariants } => write!(f, "small Seifert {invariants}"),
            SfsClass::Seifert { invariants } => write!(f, "Seifert {invariants}"),
            SfsClass::Reducible => f.write_str("reducible"),
        }
    }
}

/// At most two singular fibers: glue the two fibered solid tori and read
/// off the lens space. `H1` infinite means `S² × S¹`, reported reducible.
fn lens_from_fibration(inv: SeifertInvariants) -> SfsClass {
    let mut fibers: Vec<(BigInt, BigInt)> =
        inv.fibers.iter().map(|f| (f.alpha.clone(), f.beta.clone())).collect();
    while fibers.len() < 2 {
        fibers.push((BigInt::one(), BigInt::zero()));
    }
    let (a1, b1) = (fibers[0].0.clone(), &fibers[0].1 + &inv.e * &fibers[0].0);
    let (a2, b2) = fibers[1].clone();
    // meridians: μ1 = a1·s + b1·h, μ2 = −a2·s + b2·h; λ1 = γ·s + δ·h with
    // a1·δ − b1·γ = 1
    let eg = a1.extended_gcd(&b1);
    let (mut delta, mut gamma) = (eg.x, -eg.y);
    if eg.gcd.is_negative() {
        delta = -delta;
        gamma = -gamma;
    }
    let y = &a2 * &b1 + &a1 * &b2;
    let x = -(&delta * &a2) - &gamma * &b2;
    let p = y.abs();
    if p.is_zero() {
        return SfsClass::Reducible;
    }
    if p.is_one() {
        return SfsClass::S3;
    }
    let q = x.mod_floor(&p);
    let inv_q = {
        let g = q.extended_gcd(&p);
        (g.x * g.gcd.signum()).mod_floor(&p)
    };
    let q = [q.clone(), (-&q).mod_floor(&p), inv_q.clone(), (-&inv_q).mod_floor(&p)]
        .into_iter()
        .min()
        .unwrap();
    SfsClass::Lens { lens: LensSpace { p, q }, fibration: inv }
}

/// Montesinos link `M(r1, …, rk)`; `1/0` entries mark a split or
/// connected-sum degeneration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MontesinosLink {
    pub entries: Vec<Slope>,
}

impl MontesinosLink {
    pub fn new(entries: Vec<Slope>) -> Self {
        MontesinosLink { entries }
    }

    pub fn is_degenerate(&self) -> bool {
        self.entries.iter().any(Slope::is_meridian)
    }
}

impl fmt::Display for MontesinosLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|s| s.to_string()).collect();
        write!(f, "M[{}]", parts.join(","))
    }
}

/// Double branched cover of a Montesinos link.
pub fn dbc_montesinos(link: &MontesinosLink) -> SfsClass {
    SfsClass::from_fractions(&link.entries)
}

/// Surgery `r = u/v` on the `(p, q)` torus knot.
///
/// The knot is a regular fiber of the fibration of `S³` with singular
/// fibers `b1/p` and `b2/q`, `b1·q + b2·p = 1`. On its boundary the fiber
/// has slope `pq`, so filling along `u·m + v·l` adds a fiber `v/(u − pq·v)`.
/// The singular index is `|u − pq·v|`; the cabling slope `pq` is reducible.
pub fn moser(p: &BigInt, q: &BigInt, r: &Slope) -> Result<SfsClass> {
    let two = BigInt::from(2);
    if p.abs() < two || q.abs() < two || !p.gcd(q).is_one() {
        return Err(Error::NotATorusKnot(p.to_string(), q.to_string()));
    }
    let eg = q.extended_gcd(p);
    let sign = eg.gcd.signum();
    let (b1, b2) = (eg.x * &sign, eg.y * &sign);
    let (u, v) = (r.numer(), r.denom());
    let d = u - p * q * v;
    let entries = [
        Slope::new(b1, p.clone())?,
        Slope::new(b2, q.clone())?,
        Slope::new(v.clone(), d)?,
    ];
    Ok(SfsClass::from_fractions(&entries))
}

/// Which of the two surgery families on the `(−2, 3, 2n+1)` pretzel knots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySlope {
    /// `K_n(6 + 4n) = M(1/2, −1/4, 2/(2n − 5))`.
    Six,
    /// `K_n(7 + 4n) = M(−1/3, 3/5, 1/(n − 2))`.
    Seven,
}

impl TryFrom<i64> for FamilySlope {
    type Error = i64;
    fn try_from(v: i64) -> std::result::Result<Self, i64> {
        match v {
            6 => Ok(FamilySlope::Six),
            7 => Ok(FamilySlope::Seven),
            other => Err(other),
        }
    }
}

pub fn twisted_pretzel_link(n: &BigInt, base: FamilySlope) -> MontesinosLink {
    let s = |p: BigInt, q: BigInt| Slope::new(p, q).expect("nonzero denominator");
    let entries = match base {
        FamilySlope::Seven => vec![
            s((-1).into(), 3.into()),
            s(3.into(), 5.into()),
            s(1.into(), n - 2),
        ],
        FamilySlope::Six => vec![
            s(1.into(), 2.into()),
            s((-1).into(), 4.into()),
            s(2.into(), n * 2 - 5),
        ],
    };
    MontesinosLink::new(entries)
}

/// Homeomorphism test up to orientation: Seifert invariants for three or
/// more fibers, `L(p, q)` classes for lens spaces.
pub fn sfs_equal(x: &SfsClass, y: &SfsClass) -> bool {
    match (x, y) {
        (SfsClass::S3, SfsClass::S3) | (SfsClass::Reducible, SfsClass::Reducible) => true,
        (SfsClass::Lens { lens: a, .. }, SfsClass::Lens { lens: b, .. }) => a == b,
        (SfsClass::SmallSeifert { invariants: a }, SfsClass::SmallSeifert { invariants: b })
        | (SfsClass::Seifert { invariants: a }, SfsClass::Seifert { invariants: b }) => {
            a.unoriented() == b.unoriented()
        }
        _ => false,
    }
}
