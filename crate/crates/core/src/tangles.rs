//! Rational and Montesinos tangles.
//!
//! Endpoint connectivity is always obtained by tracing strands through an
//! explicit twist word; nothing here reads it off the slope arithmetically.
//! The four equivalence moves on Montesinos tangles (entrywise integer
//! shifts with fixed sum, zero insertion/deletion, reversal, mirror, and
//! for a single entry the meridional twist `t ↦ 1/(2m + 1/t)`) are
//! first-class values so that every equivalence comes with a replayable
//! witness.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::slopes::{expand, Slope};

/// Tangle boundary points, as seen with the tangle ball drawn as a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    NW = 0,
    NE = 1,
    SW = 2,
    SE = 3,
}

impl Endpoint {
    pub const ALL: [Endpoint; 4] = [Endpoint::NW, Endpoint::NE, Endpoint::SW, Endpoint::SE];

    fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn is_top(self) -> bool {
        matches!(self, Endpoint::NW | Endpoint::NE)
    }

    pub fn is_west(self) -> bool {
        matches!(self, Endpoint::NW | Endpoint::SW)
    }
}

/// Which endpoints are joined by the two arcs of a tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Pairing {
    /// NW–NE and SW–SE.
    TopToTop,
    /// NW–SW and NE–SE.
    LeftToLeft,
    /// NW–SE and NE–SW.
    Cross,
}

/// A perfect matching on the four endpoints, stored as a partner table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Matching([u8; 4]);

impl Matching {
    pub fn from_pairing(p: Pairing) -> Self {
        match p {
            Pairing::TopToTop => Matching([1, 0, 3, 2]),
            Pairing::LeftToLeft => Matching([2, 3, 0, 1]),
            Pairing::Cross => Matching([3, 2, 1, 0]),
        }
    }

    pub fn partner(&self, e: Endpoint) -> Endpoint {
        Endpoint::from_index(self.0[e as usize] as usize)
    }

    pub fn pairing(&self) -> Pairing {
        match self.partner(Endpoint::NW) {
            Endpoint::NE => Pairing::TopToTop,
            Endpoint::SW => Pairing::LeftToLeft,
            Endpoint::SE => Pairing::Cross,
            Endpoint::NW => unreachable!("matching is fixed-point free"),
        }
    }

    /// Moves the strand ends sitting at `a` and `b` past each other.
    fn swap_positions(&self, a: Endpoint, b: Endpoint) -> Self {
        let sigma = |e: usize| -> usize {
            if e == a as usize {
                b as usize
            } else if e == b as usize {
                a as usize
            } else {
                e
            }
        };
        let mut out = [0u8; 4];
        for e in 0..4 {
            out[sigma(e)] = sigma(self.0[e] as usize) as u8;
        }
        Matching(out)
    }
}

/// One step of the twist word that builds a rational tangle from the
/// horizontal `0` tangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistOp {
    /// A run of half-twists of the two east endpoints (adds an integer).
    Horizontal(BigInt),
    /// Reflection across the NW–SE diagonal (`T ↦ 1/T` up to mirror).
    Reciprocal,
}

/// Twist word of a finite slope, read off its canonical continued
/// fraction `a0 + 1/(a1 + … + 1/an)`: `an` twists, then alternately a
/// reciprocal and the next term, innermost first.
pub fn twist_word(slope: &Slope) -> Result<Vec<TwistOp>> {
    let terms = expand(slope)?;
    let mut word = Vec::with_capacity(2 * terms.len());
    let mut rev = terms.into_iter().rev();
    if let Some(last) = rev.next() {
        word.push(TwistOp::Horizontal(last));
    }
    for a in rev {
        word.push(TwistOp::Reciprocal);
        word.push(TwistOp::Horizontal(a));
    }
    Ok(word)
}

/// Traces the two strands through a twist word starting from the `0`
/// tangle. A run of `n` half-twists acts as the `n`-th power of a single
/// crossing's transposition.
pub fn trace_word(word: &[TwistOp]) -> Matching {
    let mut m = Matching::from_pairing(Pairing::TopToTop);
    for op in word {
        m = match op {
            TwistOp::Horizontal(n) if n.is_odd() => m.swap_positions(Endpoint::NE, Endpoint::SE),
            TwistOp::Horizontal(_) => m,
            TwistOp::Reciprocal => m.swap_positions(Endpoint::NE, Endpoint::SW),
        };
    }
    m
}

/// Endpoint matching of a tangle together with its closed components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub matching: Matching,
    pub loops: usize,
}

impl Connectivity {
    pub fn pairing(&self) -> Pairing {
        self.matching.pairing()
    }
}

/// Places `right` to the east of `left`, joining `left.NE–right.NW` and
/// `left.SE–right.SW`, and traces the result.
pub fn horizontal_sum(left: Connectivity, right: Connectivity) -> Connectivity {
    // nodes 0..4 are `left`'s endpoints, 4..8 are `right`'s
    let internal = |n: usize| -> usize {
        if n < 4 {
            left.matching.0[n] as usize
        } else {
            4 + right.matching.0[n - 4] as usize
        }
    };
    let glue = |n: usize| -> Option<usize> {
        match n {
            1 => Some(4),
            4 => Some(1),
            3 => Some(6),
            6 => Some(3),
            _ => None,
        }
    };
    let outer_of = |n: usize| -> Option<Endpoint> {
        match n {
            0 => Some(Endpoint::NW),
            2 => Some(Endpoint::SW),
            5 => Some(Endpoint::NE),
            7 => Some(Endpoint::SE),
            _ => None,
        }
    };
    let mut visited = [false; 8];
    let mut out = [0u8; 4];
    for start in [0usize, 2, 5, 7] {
        if visited[start] {
            continue;
        }
        let mut node = start;
        visited[node] = true;
        let end = loop {
            let next = internal(node);
            visited[next] = true;
            if let Some(e) = outer_of(next) {
                break e;
            }
            node = glue(next).expect("inner node is glued");
            visited[node] = true;
        };
        let s = outer_of(start).unwrap();
        out[s as usize] = end as u8;
        out[end as usize] = s as u8;
    }
    let mut loops = left.loops + right.loops;
    for start in [1usize, 3, 4, 6] {
        if visited[start] {
            continue;
        }
        loops += 1;
        let mut node = start;
        loop {
            visited[node] = true;
            let next = internal(node);
            visited[next] = true;
            node = glue(next).unwrap();
            if node == start {
                break;
            }
        }
    }
    Connectivity { matching: Matching(out), loops }
}

/// A rational tangle of finite slope.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalTangle(Slope);

impl RationalTangle {
    pub fn new(slope: Slope) -> Result<Self> {
        if slope.is_meridian() {
            return Err(Error::InfiniteTangle);
        }
        Ok(RationalTangle(slope))
    }

    pub fn slope(&self) -> &Slope {
        &self.0
    }

    pub fn twist_word(&self) -> Vec<TwistOp> {
        twist_word(&self.0).expect("finite slope")
    }

    pub fn connectivity(&self) -> Connectivity {
        Connectivity { matching: trace_word(&self.twist_word()), loops: 0 }
    }

    pub fn pairing(&self) -> Pairing {
        self.connectivity().pairing()
    }
}

/// Horizontal sum `T[t1, …, tk]` of rational tangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MontesinosTangle(Vec<RationalTangle>);

impl MontesinosTangle {
    pub fn new(entries: Vec<RationalTangle>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyTangle);
        }
        Ok(MontesinosTangle(entries))
    }

    pub fn from_slopes<I: IntoIterator<Item = Slope>>(slopes: I) -> Result<Self> {
        let entries = slopes
            .into_iter()
            .map(RationalTangle::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[RationalTangle] {
        &self.0
    }

    pub fn slopes(&self) -> impl Iterator<Item = &Slope> + '_ {
        self.0.iter().map(|t| t.slope())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> Slope {
        self.slopes().fold(Slope::zero(), |acc, s| acc.add_finite(s))
    }

    pub fn connectivity(&self) -> Connectivity {
        let mut it = self.0.iter().map(|t| t.connectivity());
        let first = it.next().expect("non-empty");
        it.fold(first, horizontal_sum)
    }

    pub fn pairing(&self) -> Pairing {
        self.connectivity().pairing()
    }

    pub fn mirror(&self) -> Self {
        MontesinosTangle(self.0.iter().map(|t| RationalTangle(-t.slope())).collect())
    }

    pub fn reversed(&self) -> Self {
        MontesinosTangle(self.0.iter().rev().cloned().collect())
    }
}

impl Serialize for MontesinosTangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for MontesinosTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", t.slope())?;
        }
        f.write_str("]")
    }
}

pub fn pairing(t: &RationalTangle) -> Pairing {
    t.pairing()
}

pub fn montesinos_pairing(t: &MontesinosTangle) -> Pairing {
    t.pairing()
}

/// An equivalence move on Montesinos tangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", content = "arg", rename_all = "snake_case")]
pub enum Move {
    /// Add integers to the entries; the integers sum to zero.
    Shift(#[serde(serialize_with = "ser_ints")] Vec<BigInt>),
    DeleteZero(usize),
    InsertZero(usize),
    Reverse,
    /// Negate every entry. Downstream this negates surgery slopes.
    Mirror,
    /// Single-entry twist `t ↦ 1/(2m + 1/t)` along a meridian disk.
    Twist(#[serde(serialize_with = "ser_int")] BigInt),
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn ser_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Shift(d) => {
                let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                write!(f, "shift({})", parts.join(","))
            }
            Move::DeleteZero(i) => write!(f, "delete-zero({i})"),
            Move::InsertZero(i) => write!(f, "insert-zero({i})"),
            Move::Reverse => f.write_str("reverse"),
            Move::Mirror => f.write_str("mirror"),
            Move::Twist(m) => write!(f, "twist({m})"),
        }
    }
}

impl Move {
    /// Applies the move, rejecting moves whose preconditions fail.
    pub fn apply(&self, t: &MontesinosTangle) -> Option<MontesinosTangle> {
        match self {
            Move::Shift(d) => {
                if d.len() != t.len() || !d.iter().fold(BigInt::zero(), |a, x| a + x).is_zero() {
                    return None;
                }
                let entries = t.slopes().zip(d).map(|(s, x)| RationalTangle(s.add_int(x))).collect();
                Some(MontesinosTangle(entries))
            }
            Move::DeleteZero(i) => {
                if t.len() < 2 || *i >= t.len() || !t.0[*i].slope().is_zero() {
                    return None;
                }
                let mut v = t.0.clone();
                v.remove(*i);
                Some(MontesinosTangle(v))
            }
            Move::InsertZero(i) => {
                if *i > t.len() {
                    return None;
                }
                let mut v = t.0.clone();
                v.insert(*i, RationalTangle(Slope::zero()));
                Some(MontesinosTangle(v))
            }
            Move::Reverse => Some(t.reversed()),
            Move::Mirror => Some(t.mirror()),
            Move::Twist(m) => {
                if t.len() != 1 {
                    return None;
                }
                let inv = t.0[0].slope().recip().add_int(&(m * 2));
                let next = inv.recip();
                RationalTangle::new(next).ok().map(|e| MontesinosTangle(vec![e]))
            }
        }
    }

    pub fn inverse(&self) -> Move {
        match self {
            Move::Shift(d) => Move::Shift(d.iter().map(|x| -x).collect()),
            Move::DeleteZero(i) => Move::InsertZero(*i),
            Move::InsertZero(i) => Move::DeleteZero(*i),
            Move::Reverse => Move::Reverse,
            Move::Mirror => Move::Mirror,
            Move::Twist(m) => Move::Twist(-m),
        }
    }
}

/// Applies a move sequence, failing on the first illegal step.
pub fn apply_moves(t: &MontesinosTangle, moves: &[Move]) -> Option<MontesinosTangle> {
    moves.iter().try_fold(t.clone(), |cur, m| m.apply(&cur))
}

pub fn invert_moves(moves: &[Move]) -> Vec<Move> {
    moves.iter().rev().map(Move::inverse).collect()
}

/// Equivalence class label after all moves are exhausted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Canonical {
    /// Two or more non-integral entries, modulo shifts.
    Sum {
        #[serde(serialize_with = "ser_int")]
        e0: BigInt,
        fracs: Vec<Slope>,
    },
    /// A single rational tangle brought to `t > 1` by twists and mirror.
    Single { t: Slope },
    /// Equivalent to `T[0]`.
    Zero,
    /// Equivalent to `T[1/q]`; `even_q` is the parity class of `q`.
    Unit { even_q: bool },
}

impl Canonical {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Canonical::Zero | Canonical::Unit { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    /// Collected integer part.
    #[serde(serialize_with = "ser_int")]
    pub e0: BigInt,
    /// Non-zero fractional parts in input order, each in `(0, 1)`.
    pub fracs: Vec<Slope>,
    pub canonical: Canonical,
    /// Tangle realizing `canonical`.
    pub representative: MontesinosTangle,
    /// Witness taking the input to `representative`.
    pub moves: Vec<Move>,
}

impl NormalForm {
    pub fn is_degenerate(&self) -> bool {
        self.canonical.is_degenerate()
    }

    /// Whether the witness contains an odd number of mirror moves.
    pub fn mirrored(&self) -> bool {
        self.moves.iter().filter(|m| **m == Move::Mirror).count() % 2 == 1
    }
}

pub fn normalize(t: &MontesinosTangle) -> NormalForm {
    let mut e0 = BigInt::zero();
    let mut fracs = Vec::new();
    let mut positions = Vec::new();
    for (i, s) in t.slopes().enumerate() {
        let (f, r) = s.split_floor().expect("finite entries");
        e0 += f;
        if !r.is_zero() {
            fracs.push(r);
            positions.push(i);
        }
    }

    let mut moves = Vec::new();
    let mut cur = t.clone();
    let push = |moves: &mut Vec<Move>, cur: &mut MontesinosTangle, m: Move| {
        *cur = m.apply(cur).expect("normalization move is legal");
        moves.push(m);
    };

    // Shift every entry to its fractional part and park e0 on one slot.
    let keep: Vec<usize> = if positions.is_empty() { vec![0] } else { positions.clone() };
    let park = *keep.last().unwrap();
    let mut target: Vec<Slope> = vec![Slope::zero(); t.len()];
    for (i, &pos) in positions.iter().enumerate() {
        target[pos] = fracs[i].clone();
    }
    target[park] = target[park].add_int(&e0);
    let deltas: Vec<BigInt> = target
        .iter()
        .zip(t.slopes())
        .map(|(want, have)| want.sub_finite(have).as_integer().cloned().expect("integral shift"))
        .collect();
    if deltas.iter().any(|d| !d.is_zero()) {
        push(&mut moves, &mut cur, Move::Shift(deltas));
    }
    for i in (0..t.len()).rev() {
        if !keep.contains(&i) {
            push(&mut moves, &mut cur, Move::DeleteZero(i));
        }
    }

    if fracs.len() >= 2 {
        return NormalForm {
            e0: e0.clone(),
            fracs: fracs.clone(),
            canonical: Canonical::Sum { e0, fracs },
            representative: cur,
            moves,
        };
    }

    let tval = cur.0[0].slope().clone();
    let canonical = if tval.is_zero() {
        Canonical::Zero
    } else {
        let u = tval.recip();
        if let Some(n) = u.as_integer().cloned() {
            // twist to u = 2 (t = 1/2) or u = 1 (t = 1)
            let even_q = n.is_even();
            let goal = if even_q { BigInt::from(2) } else { BigInt::one() };
            let m: BigInt = (&goal - &n) / BigInt::from(2);
            if !m.is_zero() {
                push(&mut moves, &mut cur, Move::Twist(m));
            }
            Canonical::Unit { even_q }
        } else {
            // u + 2j lands in (0, 2)
            let two = BigInt::from(2);
            let j = -(u.floor().unwrap().div_floor(&two));
            if !j.is_zero() {
                push(&mut moves, &mut cur, Move::Twist(j.clone()));
            }
            let u1 = u.add_int(&(j * 2));
            if u1 > Slope::one() {
                push(&mut moves, &mut cur, Move::Mirror);
                push(&mut moves, &mut cur, Move::Twist(BigInt::one()));
            }
            Canonical::Single { t: cur.0[0].slope().clone() }
        }
    };
    NormalForm { e0, fracs, canonical, representative: cur, moves }
}

/// Mirror image of a `Sum` canonical form.
fn mirror_sum(e0: &BigInt, fracs: &[Slope]) -> (BigInt, Vec<Slope>) {
    let k = BigInt::from(fracs.len());
    let fr = fracs.iter().map(|f| (-f).add_int(&BigInt::one())).collect();
    (-e0 - k, fr)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub mirrored: bool,
    pub moves: Vec<Move>,
}

/// Decides equivalence under the listed moves and returns a witness that
/// replays `a` into `b` exactly.
pub fn equivalent(a: &MontesinosTangle, b: &MontesinosTangle) -> Option<Equivalence> {
    let na = normalize(a);
    let nb = normalize(b);
    let bridge: Vec<Vec<Move>> = match (&na.canonical, &nb.canonical) {
        (Canonical::Sum { e0: e1, fracs: f1 }, Canonical::Sum { e0: e2, fracs: f2 }) => {
            let rev: Vec<Slope> = f1.iter().rev().cloned().collect();
            let (me, mf) = mirror_sum(e1, f1);
            let mrev: Vec<Slope> = mf.iter().rev().cloned().collect();
            let mut options = Vec::new();
            if e1 == e2 && f1 == f2 {
                options.push(vec![]);
            }
            if e1 == e2 && &rev == f2 {
                options.push(vec![Move::Reverse]);
            }
            if &me == e2 && &mf == f2 {
                options.push(vec![Move::Mirror]);
            }
            if &me == e2 && &mrev == f2 {
                options.push(vec![Move::Mirror, Move::Reverse]);
            }
            options
        }
        (x, y) if x == y => vec![vec![]],
        _ => vec![],
    };
    let head = bridge.into_iter().next()?;
    let mut moves = na.moves.clone();
    let mut cur = na.representative.clone();
    for m in head {
        cur = m.apply(&cur)?;
        moves.push(m);
    }
    if cur != nb.representative {
        let d: Vec<BigInt> = nb
            .representative
            .slopes()
            .zip(cur.slopes())
            .map(|(want, have)| want.sub_finite(have).as_integer().cloned())
            .collect::<Option<_>>()?;
        moves.push(Move::Shift(d));
    }
    moves.extend(invert_moves(&nb.moves));
    let mirrored = moves.iter().filter(|m| **m == Move::Mirror).count() % 2 == 1;
    Some(Equivalence { mirrored, moves })
}

/// Parity-class prediction of a rational tangle's pairing. Test oracle
/// only; the library never uses it.
#[doc(hidden)]
pub fn parity_class(s: &Slope) -> (bool, bool) {
    (s.numer().is_odd(), s.denom().is_odd())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn tangle(v: &[(i64, i64)]) -> MontesinosTangle {
        MontesinosTangle::from_slopes(v.iter().map(|&(p, q)| s(p, q))).unwrap()
    }

    fn rat(p: i64, q: i64) -> RationalTangle {
        RationalTangle::new(s(p, q)).unwrap()
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(rat(0, 1).pairing(), Pairing::TopToTop);
        assert_eq!(rat(1, 1).pairing(), Pairing::Cross);
        assert_eq!(rat(1, 2).pairing(), Pairing::LeftToLeft);
        assert_eq!(rat(2, 1).pairing(), Pairing::TopToTop);
    }

    #[test]
    fn one_third_traced_by_hand() {
        // 1/3 = 0 + 1/3: three horizontal half-twists give Cross, the
        // diagonal reflection keeps NW–SE, and zero twists follow.
        let word = rat(1, 3).twist_word();
        assert_eq!(
            word,
            vec![
                TwistOp::Horizontal(BigInt::from(3)),
                TwistOp::Reciprocal,
                TwistOp::Horizontal(BigInt::from(0)),
            ]
        );
        assert_eq!(rat(1, 3).pairing(), Pairing::Cross);
    }

    #[test]
    fn meridian_entry_rejected() {
        assert_eq!(RationalTangle::new(Slope::meridian()), Err(Error::InfiniteTangle));
        assert_eq!(MontesinosTangle::new(vec![]), Err(Error::EmptyTangle));
    }

    #[test]
    fn sum_of_two_even_verticals_has_a_loop() {
        let c = tangle(&[(1, 2), (1, 4)]).connectivity();
        assert_eq!(c.loops, 1);
        assert_eq!(c.pairing(), Pairing::LeftToLeft);
    }

    #[test]
    fn pretzel_pair_pairing() {
        assert_eq!(tangle(&[(-1, 2), (1, 3)]).pairing(), Pairing::LeftToLeft);
        assert_eq!(tangle(&[(1, 3), (1, 5)]).pairing(), Pairing::TopToTop);
    }

    #[test]
    fn normalize_examples() {
        let nf = normalize(&tangle(&[(-1, 2), (1, 3)]));
        assert_eq!(nf.e0, BigInt::from(-1));
        assert_eq!(nf.fracs, vec![s(1, 2), s(1, 3)]);
        assert!(!nf.is_degenerate());

        let nf = normalize(&tangle(&[(0, 1)]));
        assert_eq!(nf.e0, BigInt::zero());
        assert!(nf.fracs.is_empty());
        assert_eq!(nf.canonical, Canonical::Zero);

        let nf = normalize(&tangle(&[(7, 2)]));
        assert_eq!(nf.canonical, Canonical::Single { t: s(7, 2) });
        assert!(nf.moves.is_empty());

        // 1/t = 7/2 → 3/2 → mirror and twist → 1/2, so T[2/7] is a
        // Whitehead tangle.
        let nf = normalize(&tangle(&[(2, 7)]));
        assert_eq!(nf.canonical, Canonical::Single { t: s(2, 1) });
        assert!(nf.mirrored());

        let nf = normalize(&tangle(&[(2, 1), (1, 3)]));
        assert_eq!(nf.canonical, Canonical::Single { t: s(7, 3) });
    }

    #[test]
    fn unit_classes() {
        assert_eq!(normalize(&tangle(&[(1, 5)])).canonical, Canonical::Unit { even_q: false });
        assert_eq!(normalize(&tangle(&[(-1, 4)])).canonical, Canonical::Unit { even_q: true });
        assert_eq!(normalize(&tangle(&[(1, 1)])).canonical, Canonical::Unit { even_q: false });
        assert_eq!(normalize(&tangle(&[(-1, 1)])).canonical, Canonical::Unit { even_q: false });
    }

    #[test]
    fn representative_replays() {
        for t in [
            tangle(&[(5, 3), (-2, 3)]),
            tangle(&[(0, 1), (4, 1), (-1, 3), (0, 1)]),
            tangle(&[(9, 4)]),
            tangle(&[(3, 1), (2, 1)]),
        ] {
            let nf = normalize(&t);
            assert_eq!(apply_moves(&t, &nf.moves), Some(nf.representative.clone()));
            assert_eq!(nf.representative.sum(), t.sum());
        }
    }

    #[test]
    fn equivalence_examples() {
        let a = tangle(&[(5, 3), (-2, 3)]);
        let b = tangle(&[(2, 3), (1, 3)]);
        let w = equivalent(&a, &b).unwrap();
        assert!(!w.mirrored);
        assert_eq!(apply_moves(&a, &w.moves), Some(b));

        let a = tangle(&[(-1, 2), (1, 3)]);
        let b = tangle(&[(1, 3), (-1, 2)]);
        let w = equivalent(&a, &b).unwrap();
        assert!(!w.mirrored);
        assert_eq!(apply_moves(&a, &w.moves), Some(b));

        let b = tangle(&[(1, 2), (-1, 3)]);
        let w = equivalent(&a, &b).unwrap();
        assert!(w.mirrored);
        assert_eq!(apply_moves(&a, &w.moves), Some(b));

        assert!(equivalent(&a, &tangle(&[(-1, 2), (2, 5)])).is_none());
    }

    #[test]
    fn single_entry_equivalences() {
        let a = tangle(&[(2, 1)]);
        let b = tangle(&[(2, 5)]);
        let w = equivalent(&a, &b).unwrap();
        assert_eq!(apply_moves(&a, &w.moves), Some(b));
        let c = tangle(&[(1, 3)]);
        let d = tangle(&[(-1, 7)]);
        let w = equivalent(&c, &d).unwrap();
        assert_eq!(apply_moves(&c, &w.moves), Some(d));
        assert!(equivalent(&tangle(&[(1, 3)]), &tangle(&[(1, 4)])).is_none());
    }
}
