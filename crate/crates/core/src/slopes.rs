//! Extended rational slopes on a torus boundary.
//!
//! A slope `p/q` stands for the curve `q·l + p·m` in a fixed
//! meridian-longitude basis. The meridian is `1/0`. Values are kept in
//! lowest terms with the sign on the numerator, so structural equality is
//! slope equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Builds the normalized representative of `p/q`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroZero);
        }
        Ok(Self::reduce(p, q))
    }

    fn reduce(mut p: BigInt, mut q: BigInt) -> Self {
        debug_assert!(!(p.is_zero() && q.is_zero()));
        let g = p.gcd(&q);
        p /= &g;
        q /= &g;
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Slope { p, q }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Slope { p: n.into(), q: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn meridian() -> Self {
        Slope { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_meridian(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.q.is_one()
    }

    pub fn is_half_integral(&self) -> bool {
        self.q == BigInt::from(2)
    }

    /// Geometric intersection number `|p·q' − p'·q|`.
    pub fn distance(&self, other: &Slope) -> BigInt {
        (&self.p * &other.q - &other.p * &self.q).abs()
    }

    /// Integer value when the slope is integral.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.is_integral().then_some(&self.p)
    }

    /// `1/x`, exchanging `0` and the meridian.
    pub fn recip(&self) -> Slope {
        Self::reduce(self.q.clone(), self.p.clone())
    }

    /// Adds an integer. The meridian is fixed.
    pub fn add_int(&self, n: &BigInt) -> Slope {
        if self.is_meridian() {
            return self.clone();
        }
        Slope { p: &self.p + n * &self.q, q: self.q.clone() }
    }

    /// Sum of two slopes; `None` only for `1/0 + 1/0`.
    pub fn checked_add(&self, other: &Slope) -> Option<Slope> {
        match (self.is_meridian(), other.is_meridian()) {
            (true, true) => None,
            (true, false) => Some(self.clone()),
            (false, true) => Some(other.clone()),
            (false, false) => Some(Self::reduce(
                &self.p * &other.q + &other.p * &self.q,
                &self.q * &other.q,
            )),
        }
    }

    /// Finite sum; panics on a meridian operand.
    pub(crate) fn add_finite(&self, other: &Slope) -> Slope {
        assert!(self.is_finite() && other.is_finite(), "finite slopes required");
        self.checked_add(other).expect("finite")
    }

    pub(crate) fn sub_finite(&self, other: &Slope) -> Slope {
        self.add_finite(&-other)
    }

    /// Largest integer not exceeding a finite slope.
    pub fn floor(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.p.div_floor(&self.q))
    }

    /// Splits a finite slope into `floor + frac` with `0 ≤ frac < 1`.
    pub fn split_floor(&self) -> Option<(BigInt, Slope)> {
        let f = self.floor()?;
        let frac = Slope { p: &self.p - &f * &self.q, q: self.q.clone() };
        Some((f, frac))
    }
}

impl std::ops::Neg for &Slope {
    type Output = Slope;
    fn neg(self) -> Slope {
        if self.is_meridian() {
            return self.clone();
        }
        Slope { p: -&self.p, q: self.q.clone() }
    }
}

impl std::ops::Neg for Slope {
    type Output = Slope;
    fn neg(self) -> Slope {
        -&self
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on the extended line with the meridian placed last.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_meridian(), other.is_meridian()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_meridian() {
            f.write_str("inf")
        } else if self.q.is_one() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<i64> for Slope {
    fn from(n: i64) -> Self {
        Slope::integer(n)
    }
}

/// Evaluates `a0 + 1/(a1 + 1/(a2 + …))`.
///
/// Works through the matrix product of `[[a, 1], [1, 0]]` factors, so zero
/// partial denominators pass through the meridian without special cases.
/// The empty list evaluates to the meridian.
pub fn evaluate_continued_fraction(terms: &[BigInt]) -> Slope {
    let (mut p, mut q) = (BigInt::one(), BigInt::zero());
    for a in terms.iter().rev() {
        let next = a * &p + &q;
        q = p;
        p = next;
    }
    Slope::reduce(p, q)
}

/// Canonical expansion of a finite slope: `a0 = floor`, all later terms
/// `≥ 1`, and the last term `≥ 2` whenever there is more than one.
pub fn expand(t: &Slope) -> Result<Vec<BigInt>> {
    if t.is_meridian() {
        return Err(Error::InfinityInput);
    }
    let (mut p, mut q) = (t.p.clone(), t.q.clone());
    let mut terms = Vec::new();
    loop {
        let (a, r) = p.div_mod_floor(&q);
        terms.push(a);
        if r.is_zero() {
            break;
        }
        p = q;
        q = r;
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn make_slope_normalizes() {
        assert_eq!(s(4, 2), Slope::integer(2));
        assert_eq!(s(-3, -1), Slope::integer(3));
        assert_eq!(s(1, 0), Slope::meridian());
        assert_eq!(s(-5, 0), Slope::meridian());
        assert_eq!(s(3, -6), s(-1, 2));
        assert_eq!(Slope::new(0, 0), Err(Error::ZeroZero));
        assert_eq!(s(0, -7), Slope::zero());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(s(7, 1).distance(&Slope::meridian()), BigInt::from(1));
        assert_eq!(s(37, 2).distance(&Slope::meridian()), BigInt::from(2));
        assert_eq!(s(37, 2).distance(&s(37, 2)), BigInt::zero());
    }

    #[test]
    fn integrality() {
        assert!(s(8, 1).is_integral());
        assert!(s(37, 2).is_half_integral());
        let m = Slope::meridian();
        assert!(!m.is_integral() && !m.is_half_integral());
    }

    #[test]
    fn nested_fraction() {
        // -1/(3 - 1/4) = 0 + 1/(-3 + 1/4)
        assert_eq!(evaluate_continued_fraction(&ints(&[0, -3, 4])), s(-4, 11));
        // 1/(2·0 + 7/2) = 0 + 1/(3 + 1/2)
        assert_eq!(evaluate_continued_fraction(&ints(&[0, 3, 2])), s(2, 7));
        assert_eq!(evaluate_continued_fraction(&ints(&[5])), s(5, 1));
        assert_eq!(evaluate_continued_fraction(&ints(&[2, 0])), Slope::meridian());
        assert_eq!(evaluate_continued_fraction(&ints(&[2, 0, 3])), s(5, 1));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(&s(37, 2)).unwrap(), ints(&[18, 2]));
        assert_eq!(expand(&s(-4, 11)).unwrap(), ints(&[-1, 1, 1, 1, 3]));
        assert_eq!(expand(&s(3, 1)).unwrap(), ints(&[3]));
        assert_eq!(expand(&Slope::meridian()), Err(Error::InfinityInput));
    }

    #[test]
    fn expand_inverts_evaluate_exhaustively() {
        for p in -50i64..=50 {
            for q in 1i64..=50 {
                let t = s(p, q);
                let terms = expand(&t).unwrap();
                assert!(terms[1..].iter().all(|a| a >= &BigInt::one()));
                if terms.len() > 1 {
                    assert!(terms.last().unwrap() >= &BigInt::from(2));
                }
                assert_eq!(evaluate_continued_fraction(&terms), t);
            }
        }
    }

    #[test]
    fn ordering_places_meridian_last() {
        let mut v = vec![Slope::meridian(), s(1, 2), s(-3, 1), s(2, 1)];
        v.sort();
        assert_eq!(v, vec![s(-3, 1), s(1, 2), s(2, 1), Slope::meridian()]);
    }

    #[test]
    fn split_floor_of_negative() {
        let (f, r) = s(-1, 2).split_floor().unwrap();
        assert_eq!(f, BigInt::from(-1));
        assert_eq!(r, s(1, 2));
    }
}
