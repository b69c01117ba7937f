//! Known values, checked end to end through the public API.

use num_bigint::BigInt;

use wrapsurg::classify::{
    classify, exceptional_slopes, predict_s3_family, surgery_in_s3, FamilyPrediction, S3Surgery, SeifertPayload,
};
use wrapsurg::parse::{parse_knot, parse_link, parse_slope, parse_tangle};
use wrapsurg::seifert::{twisted_pretzel_link, FamilySlope};
use wrapsurg::slopes::evaluate_continued_fraction;
use wrapsurg::tangles::{equivalent, normalize, Canonical};
use wrapsurg::{dbc_montesinos, moser, sfs_equal, Error, Pairing, SfsClass, Slope, SurgeryClassification, TwistedImage};

fn sl(src: &str) -> Slope {
    parse_slope(src).unwrap()
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| big(x)).collect()
}

#[test]
fn slope_arithmetic() {
    assert_eq!(Slope::new(4, 2).unwrap(), sl("2"));
    assert_eq!(Slope::new(-3, -1).unwrap(), sl("3"));
    assert_eq!(Slope::new(1, 0).unwrap(), Slope::meridian());
    assert_eq!(sl("7").distance(&Slope::meridian()), big(1));
    assert_eq!(sl("37/2").distance(&Slope::meridian()), big(2));
    assert_eq!(evaluate_continued_fraction(&ints(&[0, -3, 4])), sl("-4/11"));
    assert_eq!(evaluate_continued_fraction(&ints(&[0, 3, 2])), sl("2/7"));
    assert!(sl("8").is_integral() && sl("37/2").is_half_integral());
}

#[test]
fn normal_forms() {
    let nf = normalize(&parse_tangle("[-1/2,1/3]").unwrap());
    assert_eq!(nf.e0, big(-1));
    assert_eq!(nf.fracs, vec![sl("1/2"), sl("1/3")]);
    assert!(normalize(&parse_tangle("[0]").unwrap()).is_degenerate());
    // 2/7 twists down to 1/2 on the reciprocal side, then mirrors to t = 2
    let nf = normalize(&parse_tangle("[2/7]").unwrap());
    assert_eq!(nf.canonical, Canonical::Single { t: sl("2") });
    assert!(nf.mirrored());
}

#[test]
fn tangle_equivalences() {
    let t = |s: &str| parse_tangle(s).unwrap();
    assert!(!equivalent(&t("[5/3,-2/3]"), &t("[2/3,1/3]")).unwrap().mirrored);
    assert!(!equivalent(&t("[-1/2,1/3]"), &t("[1/3,-1/2]")).unwrap().mirrored);
    assert!(equivalent(&t("[-1/2,1/3]"), &t("[1/2,-1/3]")).unwrap().mirrored);
    assert!(equivalent(&t("[-1/2,1/3]"), &t("[1/2,1/3]")).is_none());
}

#[test]
fn pairings() {
    let p = |s: &str| parse_tangle(s).unwrap().pairing();
    assert_eq!(p("[0]"), Pairing::TopToTop);
    assert_eq!(p("[1]"), Pairing::Cross);
    assert_eq!(p("[1/3]"), Pairing::Cross);
    assert_eq!(p("[1/2]"), Pairing::LeftToLeft);
}

#[test]
fn knot_construction_and_winding() {
    let k = |s: &str| parse_knot(s);
    assert_eq!(k("K0[2]").unwrap().winding_number(), 0);
    assert_eq!(k("K1[-1/2,1/3]").unwrap().winding_number(), 2);
    assert_eq!(k("K0[1/3]").unwrap().winding_number(), 2);
    assert!(matches!(k("K1[1/3]"), Err(Error::NotAKnot(_, 2))));
    assert!(matches!(k("K0[1/2]"), Err(Error::NotAKnot(_, 2))));
    for src in ["K0[2]", "K1[-1/2,1/3]", "K0[1/3,1/5]"] {
        assert_eq!(k(src).unwrap().wrapping_number(), 2, "{src}");
    }
}

#[test]
fn twisted_images() {
    let k = parse_knot("K1[-1/2,1/3]").unwrap();
    match k.twist(&big(3)) {
        TwistedImage::Montesinos { entries, .. } => assert_eq!(entries, vec![sl("-1/2"), sl("1/3"), sl("1/7")]),
        other => panic!("{other:?}"),
    }
    assert!(parse_knot("K0[2]").unwrap().twist(&big(0)).is_unknot());
    assert_eq!(k.transport_slope(&sl("7"), &big(3)), sl("19"));
    let wh = parse_knot("K0[2]").unwrap();
    assert_eq!(wh.transport_slope(&sl("3"), &big(-4)), sl("3"));
    assert_eq!(k.transport_slope(&Slope::meridian(), &big(2)), Slope::meridian());
}

#[test]
fn pretzel_slopes() {
    assert_eq!(parse_knot("K1[-1/2,1/3]").unwrap().pretzel_slope().unwrap(), sl("8"));
    for m in 3..8 {
        assert_eq!(parse_knot(&format!("K0[{m}]")).unwrap().pretzel_slope().unwrap(), sl("0"));
    }
    for m in [4, 6, 10] {
        assert_eq!(parse_knot(&format!("K1[{m}]")).unwrap().pretzel_slope().unwrap(), Slope::integer(2 * m));
    }
}

#[test]
fn double_branched_covers() {
    let d = |s: &str| dbc_montesinos(&parse_link(s).unwrap());
    assert!(d("M[-1/3,3/5,inf]").is_reducible());
    assert!(d("M[1/2,-1/4,2]").is_lens());
    match d("M[-1/3,3/5,1/4]") {
        SfsClass::SmallSeifert { invariants } => {
            let mut idx = invariants.indices();
            idx.sort();
            assert_eq!(idx, ints(&[3, 4, 5]));
        }
        other => panic!("{other}"),
    }
    assert_eq!(twisted_pretzel_link(&big(2), FamilySlope::Seven), parse_link("M[-1/3,3/5,inf]").unwrap());
    assert_eq!(twisted_pretzel_link(&big(3), FamilySlope::Seven), parse_link("M[-1/3,3/5,1]").unwrap());
    assert_eq!(twisted_pretzel_link(&big(0), FamilySlope::Six), parse_link("M[1/2,-1/4,-2/5]").unwrap());
}

#[test]
fn torus_knot_surgeries() {
    let m = |p: i64, q: i64, r: &str| moser(&big(p), &big(q), &sl(r)).unwrap();
    let a = m(2, 5, "5");
    let swapped = m(5, 2, "5");
    assert!(sfs_equal(&a, &swapped));
    assert!(!sfs_equal(&a, &m(3, 4, "9")));
    assert!(sfs_equal(&a, &a.reversed()));
    assert!(m(3, 5, "15").is_reducible());
    assert!(moser(&big(2), &big(4), &sl("3")).is_err());
}

#[test]
fn classifications() {
    let k = |s: &str| parse_knot(s).unwrap();
    let c4 = k("K1[-1/2,1/3]");
    assert_eq!(classify(&k("K0[2]"), &sl("3")).kind(), "small_seifert");
    assert_eq!(
        classify(&c4, &sl("7")),
        SurgeryClassification::SmallSeifert(SeifertPayload::Indices(ints(&[3, 5])))
    );
    assert_eq!(classify(&c4, &sl("5")), SurgeryClassification::Hyperbolic);
    assert_eq!(classify(&k("K0[7/3]"), &sl("4")), SurgeryClassification::Hyperbolic);
    // the mirror carries 7 to -7 + 4 = -3 because the wrap band flips too
    assert_eq!(classify(&k("K1[1/2,-1/3]"), &sl("-3")).signature(), "small_seifert:3,5");
    assert!(exceptional_slopes(&k("K0[7/3]")).is_empty());
    let kinds: Vec<String> =
        exceptional_slopes(&c4).iter().map(|(r, c)| format!("{r}:{}", c.kind())).collect();
    assert_eq!(kinds, ["6:toroidal", "7:small_seifert", "8:toroidal"]);
}

#[test]
fn family_predictions() {
    let c4 = parse_knot("K1[-1/2,1/3]").unwrap();
    assert_eq!(
        predict_s3_family(&c4, &sl("7")),
        FamilyPrediction::SeifertOrReducibleAll { indices: Some((big(3), big(5))) }
    );
    assert_eq!(predict_s3_family(&c4, &sl("5")), FamilyPrediction::HyperbolicInterior);
    let p = parse_knot("K0[1/3,1/5]").unwrap();
    let r = exceptional_slopes(&p)[0].0.clone();
    assert!(matches!(predict_s3_family(&p, &r), FamilyPrediction::ToroidalCofinite { .. }));
}

#[test]
fn surgeries_in_the_sphere() {
    let c4 = parse_knot("K1[-1/2,1/3]").unwrap();
    let known = |r: &str, n: i64| match surgery_in_s3(&c4, &sl(r), &big(n)).unwrap() {
        S3Surgery::Known { manifold, .. } => manifold,
        S3Surgery::Unknown => panic!("{r} at {n}"),
    };
    assert!(known("7", 2).is_reducible());
    assert!(known("7", 3).is_lens());
    assert!(known("6", 3).is_lens());
    match surgery_in_s3(&c4, &sl("7"), &big(0)).unwrap() {
        S3Surgery::Known { torus_check, .. } => assert_eq!(torus_check, Some((big(2), big(5)))),
        S3Surgery::Unknown => panic!(),
    }
}
