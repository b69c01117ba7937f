//! Exceptional surgery classification for wrapped Montesinos knots.
//!
//! Every knot is first reduced to a canonical representative of its
//! equivalence class, keeping track of how surgery slopes and twist
//! indices move along. The representative then falls into exactly one
//! family:
//!
//! | family                         | exceptional slopes (canonical)          |
//! |--------------------------------|-----------------------------------------|
//! | `K^0(2)`, the Whitehead knot   | 0, 4 toroidal; 1, 2, 3 small Seifert     |
//! | `K^a(m)`, `m > 2`              | pretzel slope, toroidal                 |
//! | `K^a(1/q1, 1/q2)`, `|qi| ≥ 2`   | pretzel slope, toroidal                 |
//! | `K^1(-1/2, 1/3)`               | 6, 8 toroidal; 7 small Seifert `{3, 5}` |
//! | anything else non-degenerate   | none                                    |

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::seifert::{twisted_pretzel_link, dbc_montesinos, moser, sfs_equal, FamilySlope, SfsClass};
use crate::slopes::Slope;
use crate::tangles::{equivalent, normalize, Canonical, Move, MontesinosTangle, NormalForm};
use crate::wrapped::WrappedKnot;

fn ser_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// How an equivalence move acts on slopes and on the twist index `n` of
/// the family `K_n`: `r ↦ σ·r + slope_shift`, `n ↦ σ·n + index_shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transport {
    pub negate: bool,
    pub slope_shift: BigInt,
    pub index_shift: BigInt,
}

impl Transport {
    pub fn identity() -> Self {
        Transport { negate: false, slope_shift: BigInt::zero(), index_shift: BigInt::zero() }
    }

    /// Transport of one move on `K^a(…)` with winding number `w`.
    ///
    /// A twist by `m` is the homeomorphism `φ_m` of `V`, so slopes gain
    /// `m·w²` and `K_n` becomes the old `K_{n+m}`. The mirror reflects the
    /// wrap band too; its `a` half-twists come back as `−a`, which costs
    /// `−a` full twists: `r ↦ −r + a·w²` and `n ↦ −n − a`.
    pub fn of_move(m: &Move, a: u8, wind: u32) -> Self {
        let w2 = BigInt::from(wind * wind);
        match m {
            Move::Mirror => Transport {
                negate: true,
                slope_shift: BigInt::from(a) * &w2,
                index_shift: -BigInt::from(a),
            },
            Move::Twist(k) => Transport {
                negate: false,
                slope_shift: k * &w2,
                index_shift: -k,
            },
            _ => Transport::identity(),
        }
    }

    pub fn of_moves(moves: &[Move], a: u8, wind: u32) -> Self {
        moves
            .iter()
            .fold(Transport::identity(), |acc, m| acc.then(&Transport::of_move(m, a, wind)))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Transport) -> Transport {
        let sign = |neg: bool, x: &BigInt| if neg { -x } else { x.clone() };
        Transport {
            negate: self.negate ^ next.negate,
            slope_shift: sign(next.negate, &self.slope_shift) + &next.slope_shift,
            index_shift: sign(next.negate, &self.index_shift) + &next.index_shift,
        }
    }

    pub fn inverse(&self) -> Transport {
        let sign = |x: &BigInt| if self.negate { x.clone() } else { -x };
        Transport {
            negate: self.negate,
            slope_shift: sign(&self.slope_shift),
            index_shift: sign(&self.index_shift),
        }
    }

    pub fn slope(&self, r: &Slope) -> Slope {
        let r = if self.negate { -r } else { r.clone() };
        r.add_int(&self.slope_shift)
    }

    pub fn index(&self, n: &BigInt) -> BigInt {
        let n = if self.negate { -n } else { n.clone() };
        n + &self.index_shift
    }
}

/// Canonical family of a wrapped knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Equivalent to `K^a(0)` or `K^a(1/q)`: not hyperbolic.
    Degenerate,
    Whitehead,
    /// `K^a(m)`, `m > 2`; `pretzel` is in canonical coordinates.
    IntegerTangle {
        #[serde(serialize_with = "ser_int")]
        m: BigInt,
        pretzel: Slope,
    },
    /// `K^a(1/q1, 1/q2)`; `pretzel` is in canonical coordinates.
    Pretzel {
        #[serde(serialize_with = "ser_int")]
        q1: BigInt,
        #[serde(serialize_with = "ser_int")]
        q2: BigInt,
        pretzel: Slope,
    },
    /// `K^1(-1/2, 1/3)`.
    MinusTwoThree,
    Generic,
}

/// A knot together with its canonical form and the slope transport into
/// canonical coordinates.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub knot: WrappedKnot,
    pub normal_form: NormalForm,
    pub moves: Vec<Move>,
    pub to_canonical: Transport,
    pub family: Family,
    pub notes: Vec<String>,
}

fn s(p: i64, q: i64) -> Slope {
    Slope::new(p, q).expect("valid constant")
}

/// `f + x = 1/q` with `|q| ≥ 2` for `x ∈ {0, −1}`.
fn unit_shift(f: &Slope) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    for x in [0i64, -1] {
        let v = f.add_int(&BigInt::from(x)).recip();
        if let Some(q) = v.as_integer() {
            if q.abs() >= BigInt::from(2) {
                out.push((BigInt::from(x), q.clone()));
            }
        }
    }
    out
}

/// Finds `T[1/q1, 1/q2] ~ T[f1 + x, f2 + e0 − x]` using shifts only.
fn pretzel_representative(e0: &BigInt, fracs: &[Slope]) -> Option<(BigInt, BigInt)> {
    let [f1, f2] = fracs else { return None };
    for (x, q1) in unit_shift(f1) {
        let second = f2.add_int(&(e0 - &x));
        let v = second.recip();
        if let Some(q2) = v.as_integer() {
            if q2.abs() >= BigInt::from(2) {
                return Some((q1, q2.clone()));
            }
        }
    }
    None
}

fn is_minus_two_three_pair(q1: &BigInt, q2: &BigInt) -> bool {
    let mut v = [q1.clone(), q2.clone()];
    v.sort();
    v == [BigInt::from(-2), BigInt::from(3)] || v == [BigInt::from(-3), BigInt::from(2)]
}

fn minus_two_three_tangle() -> MontesinosTangle {
    MontesinosTangle::from_slopes([s(-1, 2), s(1, 3)]).expect("valid")
}

pub fn reduce(knot: &WrappedKnot) -> Reduction {
    let a = knot.a();
    let wind = knot.winding_number();
    let nf = normalize(knot.tangle());
    let mut moves = nf.moves.clone();
    let mut notes = Vec::new();
    let family = match &nf.canonical {
        Canonical::Zero | Canonical::Unit { .. } => Family::Degenerate,
        Canonical::Single { t } => match t.as_integer() {
            Some(m) if *m == BigInt::from(2) && a == 0 => Family::Whitehead,
            Some(m) if *m == BigInt::from(2) => {
                notes.push(
                    "K1[2] is not identified with the Whitehead knot K0[2]: single-entry \
                     a = 1 forms are not mapped to a = 0 forms"
                        .to_string(),
                );
                Family::Generic
            }
            Some(m) => {
                let rep = WrappedKnot::new(a, nf.representative.clone()).expect("moves preserve knottedness");
                let pretzel = rep.pretzel_slope().expect("integer tangle has a pretzel surface");
                let expected = if a == 0 { Slope::zero() } else { Slope::integer(m * 2) };
                if pretzel != expected {
                    notes.push(format!(
                        "traced pretzel slope {pretzel} differs from the expected {expected} for K{a}[{m}]"
                    ));
                }
                Family::IntegerTangle { m: m.clone(), pretzel }
            }
            None => Family::Generic,
        },
        Canonical::Sum { e0, fracs } => {
            let special = (a == 1 && fracs.len() == 2)
                .then(|| equivalent(&nf.representative, &minus_two_three_tangle()))
                .flatten();
            if let Some(w) = special {
                moves.extend(w.moves.into_iter().filter(|m| matches!(m, Move::Mirror | Move::Twist(_))));
                Family::MinusTwoThree
            } else if let Some((q1, q2)) = pretzel_representative(e0, fracs) {
                if is_minus_two_three_pair(&q1, &q2) {
                    Family::Generic
                } else {
                    let rep = MontesinosTangle::from_slopes([
                        Slope::new(1, q1.clone()).unwrap(),
                        Slope::new(1, q2.clone()).unwrap(),
                    ])
                    .unwrap();
                    let rep = WrappedKnot::new(a, rep).expect("shift-equivalent tangle closes to a knot");
                    let pretzel = rep.pretzel_slope().expect("pretzel form");
                    Family::Pretzel { q1, q2, pretzel }
                }
            } else {
                Family::Generic
            }
        }
    };
    let to_canonical = Transport::of_moves(&moves, a, wind);
    Reduction { knot: knot.clone(), normal_form: nf, moves, to_canonical, family, notes }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "piece", rename_all = "snake_case")]
pub enum ToroidalPiece {
    /// Small Seifert piece over the disk with two cone points.
    SmallSeifert {
        #[serde(serialize_with = "ser_pair")]
        indices: (BigInt, BigInt),
    },
    KleinBottleIBundle,
}

fn ser_pair<S: serde::Serializer>(v: &(BigInt, BigInt), s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq([v.0.to_string(), v.1.to_string()])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum ToroidalCertificate {
    /// Closed-up pretzel surface; `slope` in the input's coordinates.
    PretzelSurface { slope: Slope },
    /// Whitehead knot, canonical slope 0 or 4.
    WhiteheadSlope { r: Slope },
    /// `K^1(-1/2, 1/3)`, canonical slope 6 or 8.
    MinusTwoThree { r: Slope, piece: ToroidalPiece },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "fibers", content = "indices", rename_all = "snake_case")]
pub enum SeifertPayload {
    Indices(#[serde(serialize_with = "ser_ints")] Vec<BigInt>),
    /// The fiber indices are not determined here.
    IndicesUnspecified,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", content = "certificate", rename_all = "snake_case")]
pub enum SurgeryClassification {
    TrivialFilling,
    NonHyperbolicKnot,
    Hyperbolic,
    Toroidal(ToroidalCertificate),
    SmallSeifert(SeifertPayload),
    Reducible,
}

impl SurgeryClassification {
    pub fn kind(&self) -> &'static str {
        match self {
            SurgeryClassification::TrivialFilling => "trivial_filling",
            SurgeryClassification::NonHyperbolicKnot => "non_hyperbolic_knot",
            SurgeryClassification::Hyperbolic => "hyperbolic",
            SurgeryClassification::Toroidal(_) => "toroidal",
            SurgeryClassification::SmallSeifert(_) => "small_seifert",
            SurgeryClassification::Reducible => "reducible",
        }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(
            self,
            SurgeryClassification::Toroidal(_)
                | SurgeryClassification::SmallSeifert(_)
                | SurgeryClassification::Reducible
        )
    }

    /// Coordinate-free summary used to compare classifications across
    /// equivalent inputs.
    pub fn signature(&self) -> String {
        match self {
            SurgeryClassification::Toroidal(ToroidalCertificate::PretzelSurface { .. }) => {
                "toroidal:pretzel".into()
            }
            SurgeryClassification::Toroidal(ToroidalCertificate::WhiteheadSlope { r }) => {
                format!("toroidal:whitehead:{r}")
            }
            SurgeryClassification::Toroidal(ToroidalCertificate::MinusTwoThree { r, .. }) => {
                format!("toroidal:minus_two_three:{r}")
            }
            SurgeryClassification::SmallSeifert(SeifertPayload::Indices(v)) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("small_seifert:{}", parts.join(","))
            }
            other => other.kind().into(),
        }
    }
}

impl fmt::Display for SurgeryClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryClassification::Toroidal(ToroidalCertificate::PretzelSurface { slope }) => {
                write!(f, "toroidal (pretzel surface, slope {slope})")
            }
            SurgeryClassification::Toroidal(ToroidalCertificate::WhiteheadSlope { r }) => {
                write!(f, "toroidal (Whitehead knot, canonical slope {r})")
            }
            SurgeryClassification::Toroidal(ToroidalCertificate::MinusTwoThree { r, piece }) => match piece {
                ToroidalPiece::SmallSeifert { indices } => write!(
                    f,
                    "toroidal (canonical slope {r}; small Seifert piece with fibers {}, {})",
                    indices.0, indices.1
                ),
                ToroidalPiece::KleinBottleIBundle => {
                    write!(f, "toroidal (canonical slope {r}; twisted I-bundle over the Klein bottle)")
                }
            },
            SurgeryClassification::SmallSeifert(SeifertPayload::Indices(v)) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "small Seifert (fiber indices {})", parts.join(", "))
            }
            SurgeryClassification::SmallSeifert(SeifertPayload::IndicesUnspecified) => {
                f.write_str("small Seifert")
            }
            other => f.write_str(&other.kind().replace('_', " ")),
        }
    }
}

/// Classification of `r`-surgery on an already reduced knot.
pub fn classify_reduced(red: &Reduction, r: &Slope) -> SurgeryClassification {
    use SurgeryClassification as C;
    if r.is_meridian() {
        return C::TrivialFilling;
    }
    if red.family == Family::Degenerate {
        return C::NonHyperbolicKnot;
    }
    let rc = red.to_canonical.slope(r);
    match &red.family {
        Family::Whitehead => match rc.as_integer().map(|v| v.to_string()).as_deref() {
            Some("0") | Some("4") => C::Toroidal(ToroidalCertificate::WhiteheadSlope { r: rc }),
            Some("1") | Some("2") | Some("3") => C::SmallSeifert(SeifertPayload::IndicesUnspecified),
            _ => C::Hyperbolic,
        },
        Family::IntegerTangle { pretzel, .. } | Family::Pretzel { pretzel, .. } => {
            if &rc == pretzel {
                C::Toroidal(ToroidalCertificate::PretzelSurface { slope: r.clone() })
            } else {
                C::Hyperbolic
            }
        }
        Family::MinusTwoThree => match rc.as_integer().map(|v| v.to_string()).as_deref() {
            Some("6") => C::Toroidal(ToroidalCertificate::MinusTwoThree {
                r: rc,
                piece: ToroidalPiece::SmallSeifert { indices: (BigInt::from(2), BigInt::from(4)) },
            }),
            Some("7") => C::SmallSeifert(SeifertPayload::Indices(vec![BigInt::from(3), BigInt::from(5)])),
            Some("8") => C::Toroidal(ToroidalCertificate::MinusTwoThree { r: rc, piece: ToroidalPiece::KleinBottleIBundle }),
            _ => C::Hyperbolic,
        },
        Family::Degenerate | Family::Generic => C::Hyperbolic,
    }
}

pub fn classify(knot: &WrappedKnot, r: &Slope) -> SurgeryClassification {
    classify_reduced(&reduce(knot), r)
}

/// Canonical-coordinate exceptional slopes of a family.
fn canonical_exceptional(family: &Family) -> Vec<Slope> {
    match family {
        Family::Whitehead => (0..=4).map(Slope::integer).collect(),
        Family::IntegerTangle { pretzel, .. } | Family::Pretzel { pretzel, .. } => vec![pretzel.clone()],
        Family::MinusTwoThree => (6..=8).map(Slope::integer).collect(),
        Family::Degenerate | Family::Generic => Vec::new(),
    }
}

pub fn exceptional_slopes_reduced(red: &Reduction) -> Vec<(Slope, SurgeryClassification)> {
    let back = red.to_canonical.inverse();
    let mut out: Vec<(Slope, SurgeryClassification)> = canonical_exceptional(&red.family)
        .iter()
        .map(|rc| {
            let r = back.slope(rc);
            let c = classify_reduced(red, &r);
            (r, c)
        })
        .collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// All exceptional slopes in increasing order; empty for degenerate knots,
/// which have no hyperbolic interior to begin with.
pub fn exceptional_slopes(knot: &WrappedKnot) -> Vec<(Slope, SurgeryClassification)> {
    exceptional_slopes_reduced(&reduce(knot))
}

/// Behaviour of `K_n(r_n)` over the twisted family in `S³`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FamilyPrediction {
    /// Toroidal for every `n` with `|n − n0| > 1`; `n0` when pinned.
    ToroidalCofinite {
        #[serde(serialize_with = "ser_opt_int")]
        n0: Option<BigInt>,
    },
    /// Never toroidal; reducible or small Seifert with two fixed indices.
    SeifertOrReducibleAll {
        #[serde(serialize_with = "ser_opt_pair")]
        indices: Option<(BigInt, BigInt)>,
    },
    /// `(V, K, r)` hyperbolic: all but finitely many `K_n(r_n)` hyperbolic.
    HyperbolicInterior,
    /// Trivial filling or non-hyperbolic knot.
    NotApplicable,
}

fn ser_opt_int<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

fn ser_opt_pair<S: serde::Serializer>(
    v: &Option<(BigInt, BigInt)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(p) => ser_pair(p, s),
        None => s.serialize_none(),
    }
}

pub fn predict_s3_family(knot: &WrappedKnot, r: &Slope) -> FamilyPrediction {
    predict_reduced(&reduce(knot), r)
}

pub fn predict_reduced(red: &Reduction, r: &Slope) -> FamilyPrediction {
    use SurgeryClassification as C;
    match classify_reduced(red, r) {
        C::TrivialFilling | C::NonHyperbolicKnot => FamilyPrediction::NotApplicable,
        C::Hyperbolic => FamilyPrediction::HyperbolicInterior,
        C::SmallSeifert(SeifertPayload::Indices(v)) if v.len() == 2 => {
            FamilyPrediction::SeifertOrReducibleAll { indices: Some((v[0].clone(), v[1].clone())) }
        }
        C::SmallSeifert(_) | C::Reducible => FamilyPrediction::SeifertOrReducibleAll { indices: None },
        // 6 + 4n surgery on the (-2,3,2n+1) pretzel knots is small Seifert
        // for every n, so the toroidal 6 lands in the atoroidal branch
        C::Toroidal(ToroidalCertificate::MinusTwoThree { piece: ToroidalPiece::SmallSeifert { indices }, .. }) => {
            FamilyPrediction::SeifertOrReducibleAll { indices: Some(indices) }
        }
        // 8 + 4n: n = 0, 1, 2 give T(2,5), T(3,4), T(3,5) with surgery
        // distance 2, 0, 1 from the cabling slope, none toroidal
        C::Toroidal(ToroidalCertificate::MinusTwoThree { .. }) => {
            let back = red.to_canonical.inverse();
            FamilyPrediction::ToroidalCofinite { n0: Some(back.index(&BigInt::one())) }
        }
        C::Toroidal(_) => FamilyPrediction::ToroidalCofinite { n0: None },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum S3Surgery {
    Known {
        manifold: SfsClass,
        /// Torus knot `(p, q)` used for the independent check, if any.
        #[serde(serialize_with = "ser_opt_pair")]
        torus_check: Option<(BigInt, BigInt)>,
    },
    Unknown,
}

/// `K_n(r_n)` for the twisted family, where it is known in closed form.
pub fn surgery_in_s3(knot: &WrappedKnot, r: &Slope, n: &BigInt) -> Result<S3Surgery> {
    surgery_in_s3_reduced(&reduce(knot), r, n)
}

pub fn surgery_in_s3_reduced(red: &Reduction, r: &Slope, n: &BigInt) -> Result<S3Surgery> {
    if red.family != Family::MinusTwoThree || r.is_meridian() {
        return Ok(S3Surgery::Unknown);
    }
    let rc = red.to_canonical.slope(r);
    let nc = red.to_canonical.index(n);
    let base = match rc.as_integer().and_then(|v| i64::try_from(v).ok()).map(FamilySlope::try_from) {
        Some(Ok(b)) => b,
        _ => return Ok(S3Surgery::Unknown),
    };
    let mut manifold = dbc_montesinos(&twisted_pretzel_link(&nc, base));
    let torus = match i64::try_from(&nc) {
        Ok(0) => Some((2, 5)),
        Ok(1) => Some((3, 4)),
        Ok(2) => Some((3, 5)),
        _ => None,
    };
    let torus_check = if let Some((p, q)) = torus {
        let (p, q) = (BigInt::from(p), BigInt::from(q));
        let rn = rc.add_int(&(&nc * 4));
        let other = moser(&p, &q, &rn)?;
        if !sfs_equal(&manifold, &other) {
            return Err(Error::InconsistentCrossCheck(format!(
                "n = {nc}, slope {rn}: Montesinos cover gives {manifold}, torus knot gives {other}"
            )));
        }
        Some((p, q))
    } else {
        None
    };
    if red.to_canonical.negate {
        manifold = manifold.reversed();
    }
    Ok(S3Surgery::Known { manifold, torus_check })
}

impl SfsClass {
    /// Orientation reversal.
    pub fn reversed(&self) -> SfsClass {
        match self {
            SfsClass::Lens { lens, fibration } => {
                SfsClass::Lens { lens: lens.clone(), fibration: fibration.reversed() }
            }
            SfsClass::SmallSeifert { invariants } => SfsClass::SmallSeifert { invariants: invariants.reversed() },
            SfsClass::Seifert { invariants } => SfsClass::Seifert { invariants: invariants.reversed() },
            other => other.clone(),
        }
    }
}

/// Which of the four exceptional families of the classification match
/// `(K, r)`, each decided by its own test rather than by the precedence
/// used in [`classify`].
pub fn family_matches(knot: &WrappedKnot, r: &Slope) -> Vec<u8> {
    let mut out = Vec::new();
    if r.is_meridian() {
        return out;
    }
    let red = reduce(knot);
    if red.family == Family::Degenerate {
        return out;
    }
    let a = knot.a();
    let wind = knot.winding_number();
    let single = |t: Slope| MontesinosTangle::from_slopes([t]).unwrap();
    let transported = |w: &crate::tangles::Equivalence| Transport::of_moves(&w.moves, a, wind).slope(r);
    let ints = |lo: i64, hi: i64, x: &Slope| (lo..=hi).any(|v| *x == Slope::integer(v));

    if a == 0 {
        if let Some(w) = equivalent(knot.tangle(), &single(Slope::integer(2))) {
            if ints(0, 4, &transported(&w)) {
                out.push(1);
            }
        }
    }
    if let Canonical::Single { t } = &red.normal_form.canonical {
        if let Some(m) = t.as_integer() {
            if *m > BigInt::from(2) {
                let rep = WrappedKnot::new(a, single(t.clone())).unwrap();
                let w = equivalent(knot.tangle(), rep.tangle()).unwrap();
                if transported(&w) == rep.pretzel_slope().unwrap() {
                    out.push(2);
                }
            }
        }
    }
    let nf = &red.normal_form;
    if nf.fracs.len() == 2 {
        if let Some((q1, q2)) = pretzel_representative(&nf.e0, &nf.fracs) {
            if !is_minus_two_three_pair(&q1, &q2) {
                let rep = MontesinosTangle::from_slopes([
                    Slope::new(1, q1).unwrap(),
                    Slope::new(1, q2).unwrap(),
                ])
                .unwrap();
                let w = equivalent(knot.tangle(), &rep).unwrap();
                let rep = WrappedKnot::new(a, rep).unwrap();
                if transported(&w) == rep.pretzel_slope().unwrap() {
                    out.push(3);
                }
            }
        }
    }
    if a == 1 {
        if let Some(w) = equivalent(knot.tangle(), &minus_two_three_tangle()) {
            if ints(6, 8, &transported(&w)) {
                out.push(4);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(a: u8, v: &[(i64, i64)]) -> WrappedKnot {
        WrappedKnot::new(a, MontesinosTangle::from_slopes(v.iter().map(|&(p, q)| s(p, q))).unwrap())
            .unwrap()
    }

    fn int(v: i64) -> Slope {
        Slope::integer(v)
    }

    #[test]
    fn transport_composition() {
        let t = Transport::of_move(&Move::Mirror, 1, 2);
        assert_eq!(t.slope(&int(7)), int(-3));
        assert_eq!(t.then(&t), Transport::identity());
        let tw = Transport::of_move(&Move::Twist(BigInt::from(3)), 0, 2);
        let both = t.then(&tw);
        assert_eq!(both.slope(&int(7)), int(9));
        assert_eq!(both.inverse().slope(&int(9)), int(7));
        assert_eq!(both.inverse().then(&both), Transport::identity());
    }

    #[test]
    fn classify_examples() {
        let wh = knot(0, &[(2, 1)]);
        assert_eq!(classify(&wh, &int(3)), SurgeryClassification::SmallSeifert(SeifertPayload::IndicesUnspecified));
        let k = knot(1, &[(-1, 2), (1, 3)]);
        assert_eq!(
            classify(&k, &int(7)),
            SurgeryClassification::SmallSeifert(SeifertPayload::Indices(vec![BigInt::from(3), BigInt::from(5)]))
        );
        assert_eq!(classify(&k, &int(5)), SurgeryClassification::Hyperbolic);
        assert_eq!(classify(&knot(0, &[(7, 3)]), &int(4)), SurgeryClassification::Hyperbolic);
        assert_eq!(classify(&k, &Slope::meridian()), SurgeryClassification::TrivialFilling);
        assert_eq!(classify(&knot(1, &[(-1, 2)]), &int(7)), SurgeryClassification::NonHyperbolicKnot);
        assert_eq!(classify(&knot(1, &[(-1, 2), (2, 5)]), &int(8)), SurgeryClassification::Hyperbolic);
    }

    #[test]
    fn mirror_of_minus_two_three() {
        // mirror: r ↦ −r + 4, so 7 ↦ −3
        let m = knot(1, &[(1, 2), (-1, 3)]);
        assert_eq!(classify(&m, &int(-3)).signature(), "small_seifert:3,5");
        let ex: Vec<Slope> = exceptional_slopes(&m).into_iter().map(|(r, _)| r).collect();
        assert_eq!(ex, vec![int(-4), int(-3), int(-2)]);
        // the traced pretzel slope of the mirror agrees with the transport
        assert_eq!(m.pretzel_slope().unwrap(), int(-4));
    }

    #[test]
    fn exceptional_examples() {
        let ex = exceptional_slopes(&knot(0, &[(2, 1)]));
        let kinds: Vec<(String, &str)> = ex.iter().map(|(r, c)| (r.to_string(), c.kind())).collect();
        assert_eq!(
            kinds,
            vec![
                ("0".into(), "toroidal"),
                ("1".into(), "small_seifert"),
                ("2".into(), "small_seifert"),
                ("3".into(), "small_seifert"),
                ("4".into(), "toroidal"),
            ]
        );
        assert!(exceptional_slopes(&knot(0, &[(7, 3)])).is_empty());
    }

    #[test]
    fn pretzel_family() {
        let k = knot(0, &[(1, 3), (1, 5)]);
        let ex = exceptional_slopes(&k);
        assert_eq!(ex.len(), 1);
        assert_eq!(ex[0].1.kind(), "toroidal");
        assert_eq!(predict_s3_family(&k, &ex[0].0), FamilyPrediction::ToroidalCofinite { n0: None });
        // shifted presentation of the same knot
        let k2 = knot(0, &[(4, 3), (-4, 5)]);
        assert_eq!(exceptional_slopes(&k2)[0].0, ex[0].0);
    }

    #[test]
    fn predictions() {
        let k = knot(1, &[(-1, 2), (1, 3)]);
        assert_eq!(
            predict_s3_family(&k, &int(7)),
            FamilyPrediction::SeifertOrReducibleAll { indices: Some((BigInt::from(3), BigInt::from(5))) }
        );
        assert_eq!(predict_s3_family(&k, &int(5)), FamilyPrediction::HyperbolicInterior);
        assert_eq!(
            predict_s3_family(&k, &int(8)),
            FamilyPrediction::ToroidalCofinite { n0: Some(BigInt::one()) }
        );
    }

    #[test]
    fn s3_surgeries() {
        let k = knot(1, &[(-1, 2), (1, 3)]);
        let get = |r: i64, n: i64| match surgery_in_s3(&k, &int(r), &BigInt::from(n)).unwrap() {
            S3Surgery::Known { manifold, .. } => manifold,
            S3Surgery::Unknown => panic!("unknown"),
        };
        assert_eq!(get(7, 2), SfsClass::Reducible);
        assert!(get(7, 3).is_lens());
        assert!(get(6, 3).is_lens());
        assert_eq!(surgery_in_s3(&k, &int(5), &BigInt::zero()).unwrap(), S3Surgery::Unknown);
        // mirror: slope −3 at index n corresponds to 7 at −n−1
        let m = knot(1, &[(1, 2), (-1, 3)]);
        match surgery_in_s3(&m, &int(-3), &BigInt::from(-3)).unwrap() {
            S3Surgery::Known { manifold, .. } => assert!(manifold.is_reducible()),
            S3Surgery::Unknown => panic!("unknown"),
        }
    }

    #[test]
    fn k1_two_is_flagged() {
        let red = reduce(&knot(1, &[(2, 1)]));
        assert_eq!(red.family, Family::Generic);
        assert!(!red.notes.is_empty());
    }
}
